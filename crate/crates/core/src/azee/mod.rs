//! AZee expression trees and their indented text notation.
//!
//! ```text
//! :info-about
//!   'topic
//!   :chat
//!   'info
//!   :gentil
//! ```
//!
//! `:` applies a rule whose named arguments follow one indentation step
//! (2 spaces) deeper, each introduced by a `'name` label line with its value
//! at the same indentation. `list` opens a block of items, `^name` is a
//! constant. Templates additionally allow `[slot]` and `[slot...]` lines.

mod node;
mod parse;
mod print;
mod registry;
mod validate;

pub use node::{is_valid_name, Application, Arg, Expr, Hole, HoleSyntax, Node, Template};
pub use parse::{parse_azee, parse_node, parse_template, ParseError, ParseErrorKind};
pub use print::{print_azee, print_node};
pub use registry::{Param, ParamKind, ProductionRule, RegistryError, RuleRegistry};
pub use validate::{validate_expr, ValidationReport, Violation, ViolationKind};
