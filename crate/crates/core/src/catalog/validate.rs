use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Catalog, ElementKind, LayoutSpec, ScaleMode};
use crate::azee::{validate_expr, Hole, Node, ParamKind, ProductionRule, RuleRegistry, Template, Violation};

#[derive(Debug, Clone, PartialEq)]
pub enum CatalogIssue {
    /// A constraint targets an element that is not placed before its subject.
    PlacementOrder { layout: String, element: String, target: String },
    SelfReference { layout: String, element: String },
    AnchorAligned { layout: String, element: String },
    MissingAlignment { layout: String, element: String },
    ExtraAlignment { layout: String, element: String },
    ExtraScale { layout: String, element: String },
    NonPositiveSize { layout: String, element: String },
    NonPositiveFactor { layout: String, element: String },
    UnusedSlot { layout: String, slot: String },
    RepeatedSlot { layout: String, slot: String },
    BareTemplate { layout: String },
    TemplateInvalid { layout: String, violation: Violation },
    VariantMismatch { template: String, layout: String },
    UncoveredRule(String),
    UncoveredConstant(String),
}

impl CatalogIssue {
    pub fn code(&self) -> &'static str {
        match self {
            CatalogIssue::PlacementOrder { .. } => "placement-order",
            CatalogIssue::SelfReference { .. } => "self-reference",
            CatalogIssue::AnchorAligned { .. } => "anchor-aligned",
            CatalogIssue::MissingAlignment { .. } => "missing-alignment",
            CatalogIssue::ExtraAlignment { .. } => "extra-alignment",
            CatalogIssue::ExtraScale { .. } => "extra-scale",
            CatalogIssue::NonPositiveSize { .. } => "non-positive-size",
            CatalogIssue::NonPositiveFactor { .. } => "non-positive-factor",
            CatalogIssue::UnusedSlot { .. } => "unused-slot",
            CatalogIssue::RepeatedSlot { .. } => "repeated-slot",
            CatalogIssue::BareTemplate { .. } => "bare-template",
            CatalogIssue::TemplateInvalid { .. } => "template-invalid",
            CatalogIssue::VariantMismatch { .. } => "variant-mismatch",
            CatalogIssue::UncoveredRule(_) => "uncovered-rule",
            CatalogIssue::UncoveredConstant(_) => "uncovered-constant",
        }
    }
}

impl fmt::Display for CatalogIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogIssue::PlacementOrder { layout, element, target } => {
                write!(f, "layout `{layout}`: `{element}` is constrained by `{target}`, which is not placed before it")
            }
            CatalogIssue::SelfReference { layout, element } => {
                write!(f, "layout `{layout}`: `{element}` is constrained by itself")
            }
            CatalogIssue::AnchorAligned { layout, element } => {
                write!(f, "layout `{layout}`: anchor `{element}` must not be aligned")
            }
            CatalogIssue::MissingAlignment { layout, element } => {
                write!(f, "layout `{layout}`: `{element}` has no alignment")
            }
            CatalogIssue::ExtraAlignment { layout, element } => {
                write!(f, "layout `{layout}`: `{element}` has more than one alignment")
            }
            CatalogIssue::ExtraScale { layout, element } => {
                write!(f, "layout `{layout}`: `{element}` has more than one scale constraint")
            }
            CatalogIssue::NonPositiveSize { layout, element } => {
                write!(f, "layout `{layout}`: `{element}` has a non-positive size")
            }
            CatalogIssue::NonPositiveFactor { layout, element } => {
                write!(f, "layout `{layout}`: `{element}` has a non-positive scale factor")
            }
            CatalogIssue::UnusedSlot { layout, slot } => {
                write!(f, "layout `{layout}`: slot `{slot}` does not appear in the template")
            }
            CatalogIssue::RepeatedSlot { layout, slot } => {
                write!(f, "layout `{layout}`: slot `{slot}` appears more than once in the template")
            }
            CatalogIssue::BareTemplate { layout } => {
                write!(f, "layout `{layout}`: template is a bare placeholder")
            }
            CatalogIssue::TemplateInvalid { layout, violation } => {
                write!(f, "layout `{layout}`: template: {violation}")
            }
            CatalogIssue::VariantMismatch { template, layout } => {
                write!(f, "template `{template}`: variant `{layout}` has a different template")
            }
            CatalogIssue::UncoveredRule(rule) => write!(f, "rule {rule} uncovered"),
            CatalogIssue::UncoveredConstant(c) => write!(f, "constant {c} uncovered"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CatalogReport {
    pub issues: Vec<CatalogIssue>,
}

impl CatalogReport {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Checks placement order, template/slot correspondence, template validity,
/// variant consistency and rule coverage.
pub fn validate_catalog(cat: &Catalog, reg: &RuleRegistry) -> CatalogReport {
    let mut issues = Vec::new();
    for layout in cat.layouts() {
        check_constraints(layout, &mut issues);
        check_sizes(layout, &mut issues);
        check_template(layout, reg, &mut issues);
    }
    for group in cat.templates() {
        for id in &group.variants[1..] {
            let layout = cat.layout(id).expect("group members exist");
            if layout.template != group.template {
                issues.push(CatalogIssue::VariantMismatch {
                    template: group.id.clone(),
                    layout: id.clone(),
                });
            }
        }
    }
    for rule in reg.rules() {
        if !cat.templates().iter().any(|g| covers_rule(&g.template, rule)) {
            issues.push(CatalogIssue::UncoveredRule(rule.name.clone()));
        }
    }
    for c in reg.constants() {
        if !cat.templates().iter().any(|g| covers_constant(&g.template, c)) {
            issues.push(CatalogIssue::UncoveredConstant(c.clone()));
        }
    }
    CatalogReport { issues }
}

/// The template applies `rule` with a placeholder for every argument: a slot
/// for each expression parameter and a lone splice for each list parameter.
/// Such a template accepts every application of the rule.
pub fn covers_rule(template: &Template, rule: &ProductionRule) -> bool {
    let Node::Apply(app) = template else {
        return false;
    };
    app.rule == rule.name
        && app.args.len() == rule.params.len()
        && app.args.iter().zip(&rule.params).all(|(arg, param)| {
            arg.name == param.name
                && match (param.kind, &arg.value) {
                    (ParamKind::Expr, Node::Hole(Hole::Slot(_))) => true,
                    (ParamKind::List, Node::List(items)) => matches!(items[..], [Node::Hole(Hole::Splice(_))]),
                    _ => false,
                }
        })
}

pub fn covers_constant(template: &Template, constant: &str) -> bool {
    matches!(template, Node::Constant(c) if c == constant)
}

fn check_constraints(layout: &LayoutSpec, issues: &mut Vec<CatalogIssue>) {
    let id = || layout.id.clone();
    for (i, element) in layout.elements.iter().enumerate() {
        let aligns: Vec<_> = layout.aligns.iter().filter(|a| a.subject == element.id).collect();
        let scales: Vec<_> = layout.scales.iter().filter(|s| s.subject == element.id).collect();
        let elem = || element.id.clone();
        if i == 0 {
            if !aligns.is_empty() {
                issues.push(CatalogIssue::AnchorAligned { layout: id(), element: elem() });
            }
        } else if aligns.is_empty() {
            issues.push(CatalogIssue::MissingAlignment { layout: id(), element: elem() });
        } else if aligns.len() > 1 {
            issues.push(CatalogIssue::ExtraAlignment { layout: id(), element: elem() });
        }
        if scales.len() > 1 {
            issues.push(CatalogIssue::ExtraScale { layout: id(), element: elem() });
        }
        let targets = aligns.iter().map(|a| a.target.as_str()).chain(scales.iter().filter_map(|s| s.target()));
        for target in targets {
            if target == element.id {
                issues.push(CatalogIssue::SelfReference { layout: id(), element: elem() });
            } else if layout.element_index(target).is_none_or(|t| t >= i) {
                issues.push(CatalogIssue::PlacementOrder {
                    layout: id(),
                    element: elem(),
                    target: target.into(),
                });
            }
        }
        for s in scales {
            if let ScaleMode::RelativeTo { factor, .. } = s.mode {
                if factor.is_nan() || factor <= 0.0 {
                    issues.push(CatalogIssue::NonPositiveFactor { layout: id(), element: elem() });
                }
            }
        }
    }
}

fn check_sizes(layout: &LayoutSpec, issues: &mut Vec<CatalogIssue>) {
    for element in &layout.elements {
        let positive = match &element.kind {
            ElementKind::Icon { .. } => true,
            ElementKind::Text { content, size } => *size > 0.0 && !content.is_empty(),
            ElementKind::Slot { width, height, .. } => *width > 0.0 && *height > 0.0,
            ElementKind::SlotList {
                spacing,
                item_width,
                item_height,
                ..
            } => *item_width > 0.0 && *item_height > 0.0 && *spacing >= 0.0,
            ElementKind::Stroke { points, width } => points.len() >= 2 && *width > 0.0,
        };
        let fixed_ok = layout.scales.iter().filter(|s| s.subject == element.id).all(|s| match s.mode {
            ScaleMode::FixedNominal { width, height } => width > 0.0 && height > 0.0,
            ScaleMode::RelativeTo { .. } => true,
        });
        if !(positive && fixed_ok) {
            issues.push(CatalogIssue::NonPositiveSize {
                layout: layout.id.clone(),
                element: element.id.clone(),
            });
        }
    }
}

fn check_template(layout: &LayoutSpec, reg: &RuleRegistry, issues: &mut Vec<CatalogIssue>) {
    if matches!(layout.template, Node::Hole(_)) {
        issues.push(CatalogIssue::BareTemplate { layout: layout.id.clone() });
    }
    let mut seen: Vec<&str> = Vec::new();
    let mut repeated: Vec<String> = Vec::new();
    layout.template.for_each_hole(&mut |h| {
        if seen.contains(&h.slot_id()) {
            repeated.push(h.slot_id().into());
        } else {
            seen.push(h.slot_id());
        }
    });
    for slot in repeated {
        issues.push(CatalogIssue::RepeatedSlot {
            layout: layout.id.clone(),
            slot,
        });
    }
    for (slot, _) in layout.slots() {
        if !seen.contains(&slot) {
            issues.push(CatalogIssue::UnusedSlot {
                layout: layout.id.clone(),
                slot: slot.into(),
            });
        }
    }
    for violation in validate_expr(&layout.template, reg).violations {
        issues.push(CatalogIssue::TemplateInvalid {
            layout: layout.id.clone(),
            violation,
        });
    }
}
