//! Diagram to AZee compilation and its converse.

mod compile;
mod coverage;
mod diagram;
mod synthesize;

pub use compile::{compile, instantiate, CompileError};
pub use coverage::{coverage_check, probe_expression, CoverageReport, ProbeResult, VariantResult};
pub(crate) use diagram::check_node;
pub use diagram::{check_diagram, check_structure, is_complete, Diagram, DiagramError, Fill, PathStep, SlotPath};
pub use synthesize::{synthesize, unify, Binding, SynthesizeError, VariantPolicy};
