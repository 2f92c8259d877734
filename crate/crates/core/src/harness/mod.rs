//! Corpus loading, verification runs and report emission.

mod corpus;
mod report;
mod verify;

pub use corpus::{load_corpus, parse_corpus, Corpus, GroupSpec};
pub use report::{emit_report, Format};
pub use verify::*;
