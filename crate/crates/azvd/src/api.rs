//! Errors as reported to clients, and the operations shared by the
//! command-line tool and the HTTP service.

use std::collections::BTreeMap;

use azvd_core::azee::ParseError;
use azvd_core::compiler::{CompileError, DiagramError, SynthesizeError};
use azvd_core::svg::SvgError;
use azvd_core::{build_scene, compile, emit_svg, parse_azee, print_azee, synthesize, Catalog, Diagram, RuleRegistry, VariantPolicy};
use serde::Serialize;

use crate::formats::FormatError;

/// Error body: a stable code, a message and where the problem is (a slot
/// path, an argument path or `line:column`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApiError {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub location: Option<String>,
}

/// Broad class of an error, for exit codes and HTTP statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed document.
    Schema,
    /// Reference to a layout, asset or template that does not exist.
    NotFound,
    /// Well-formed input rejected by validation.
    Invalid,
}

impl ApiError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        ApiError {
            code: code.into(),
            message: message.into(),
            location: None,
        }
    }

    fn at(mut self, location: impl Into<String>) -> Self {
        let location = location.into();
        if !location.is_empty() {
            self.location = Some(location);
        }
        self
    }

    pub fn class(&self) -> ErrorClass {
        match self.code.as_str() {
            "schema-error" | "bad-json" => ErrorClass::Schema,
            "unknown-layout" | "unknown-asset" | "unknown-template" | "not-found" => ErrorClass::NotFound,
            _ => ErrorClass::Invalid,
        }
    }
}

impl std::fmt::Display for ApiError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

impl From<ParseError> for ApiError {
    fn from(e: ParseError) -> Self {
        ApiError::new("parse-error", e.kind.to_string()).at(format!("{}:{}", e.line, e.column))
    }
}

impl From<DiagramError> for ApiError {
    fn from(e: DiagramError) -> Self {
        ApiError::new(e.code(), e.to_string()).at(e.path().to_string())
    }
}

impl From<CompileError> for ApiError {
    fn from(e: CompileError) -> Self {
        match e {
            CompileError::Diagram(d) => d.into(),
            CompileError::Template { ref path, .. } => ApiError::new(e.code(), e.to_string()).at(path.to_string()),
        }
    }
}

impl From<SynthesizeError> for ApiError {
    fn from(e: SynthesizeError) -> Self {
        match &e {
            SynthesizeError::InvalidExpression(report) => match report.first() {
                Some(v) => ApiError::new(v.kind.code(), v.to_string()).at(v.path.clone()),
                None => ApiError::new(e.code(), e.to_string()),
            },
            _ => ApiError::new(e.code(), e.to_string()),
        }
    }
}

impl From<SvgError> for ApiError {
    fn from(e: SvgError) -> Self {
        match e {
            SvgError::MissingAsset(ref id) => ApiError::new("missing-asset", e.to_string()).at(id.clone()),
        }
    }
}

impl From<FormatError> for ApiError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Diagram(d) => d.into(),
            FormatError::Template { error, .. } => error.into(),
            FormatError::Io { .. } => ApiError::new("io-error", e.to_string()),
            other => ApiError::new("schema-error", other.to_string()),
        }
    }
}

/// Diagram to AZee text.
pub fn compile_text(d: &Diagram, cat: &Catalog) -> Result<String, ApiError> {
    Ok(print_azee(&compile(d, cat)?))
}

/// Diagram to SVG. Empty slots are drawn as placeholders.
pub fn render_svg(d: &Diagram, cat: &Catalog) -> Result<String, ApiError> {
    let scene = build_scene(d, cat)?;
    Ok(emit_svg(&scene, cat)?)
}

/// AZee text to a diagram. `variants` maps template ids to layout ids.
pub fn synthesize_text(
    text: &str,
    cat: &Catalog,
    reg: &RuleRegistry,
    variants: &BTreeMap<String, String>,
) -> Result<Diagram, ApiError> {
    let e = parse_azee(text)?;
    let policy = if variants.is_empty() {
        VariantPolicy::Default
    } else {
        for template in variants.keys() {
            if cat.template(template).is_none() {
                return Err(ApiError::new("unknown-template", format!("unknown template `{template}`")).at(template.clone()));
            }
        }
        VariantPolicy::Explicit(variants.clone())
    };
    Ok(synthesize(&e, cat, reg, &policy)?)
}
