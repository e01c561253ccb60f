//! Files, command-line tool and HTTP service for AZVD diagrams.
//!
//! The diagram model, layout engine and compiler live in `azvd-core`; this
//! crate adds the JSON formats, the shipped catalog and the two front ends.

pub mod api;
pub mod cli;
pub mod formats;
pub mod server;
pub mod shipped;

pub use formats::Bundle;
