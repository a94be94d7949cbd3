//! Library half of the levelable-kit binary: JSON document parsing and the
//! subcommand implementations, exposed so integration tests can call them
//! without spawning processes.

mod commands;
mod document;

pub use commands::{
    cmd_construct, cmd_family, cmd_graph, cmd_levelable, cmd_oracle, cmd_socle, Outcome, Strategy,
};
pub use document::{ComplexDocument, GraphDocument};
