//! Core of the AZVD graphical script.
//!
//! A diagram is a recursive tree of *layouts*. Each layout pairs a graphical
//! arrangement (icons, text, strokes and fill zones aligned on one another)
//! with an AZee *template*; compiling a diagram substitutes the compiled
//! contents of every fill zone into the template of its layout.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the shipped
//! catalog, the command-line tool and the HTTP service live in the `azvd`
//! crate.
//!
//! * [`azee`]: expression trees, the indented text notation, the production
//!   rule registry and expression validation.
//! * [`catalog`]: layout specifications, catalog loading invariants and
//!   catalog validation.
//! * [`geometry`] and [`layout`]: remarkable points, constraint resolution
//!   and scene construction.
//! * [`svg`]: deterministic SVG emission.
//! * [`compiler`]: diagram compilation, synthesis from expressions and the
//!   coverage check.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod azee;
pub mod catalog;
pub mod compiler;
pub mod geometry;
pub mod layout;
pub mod svg;

pub use azee::{parse_azee, print_azee, validate_expr, Expr, Node, RuleRegistry, Template};
pub use catalog::{validate_catalog, Catalog, LayoutSpec};
pub use compiler::{compile, coverage_check, synthesize, Diagram, Fill, VariantPolicy};
pub use geometry::{remarkable_point, Point, Rect, RemarkablePoint, Transform};
pub use layout::{bounding_box, build_scene, resolve_layout, Scene};
pub use svg::emit_svg;
