use alloc::string::String;
use alloc::vec::Vec;

use super::compile::compile;
use super::diagram::Diagram;
use super::synthesize::{synthesize, VariantPolicy};
use crate::azee::{Expr, Node, ParamKind, ProductionRule, RuleRegistry};
use crate::catalog::{Catalog, LayoutSpec, SlotArity};

/// Outcome of the round trip on one probe expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeResult {
    /// Rule name, or `^Name` for a constant.
    pub subject: String,
    /// `None` on success, the reason otherwise.
    pub failure: Option<String>,
}

impl ProbeResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantResult {
    pub template: String,
    pub layout: String,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverageReport {
    pub rules: Vec<ProbeResult>,
    pub constants: Vec<ProbeResult>,
    pub variants: Vec<VariantResult>,
}

impl CoverageReport {
    pub fn is_clean(&self) -> bool {
        self.rules.iter().chain(&self.constants).all(ProbeResult::passed)
            && self.variants.iter().all(|v| v.failure.is_none())
    }

    /// Subjects of failed probes, then `template/layout` of failed variants.
    pub fn failures(&self) -> Vec<String> {
        self.rules
            .iter()
            .chain(&self.constants)
            .filter(|p| !p.passed())
            .map(|p| p.subject.clone())
            .chain(
                self.variants
                    .iter()
                    .filter(|v| v.failure.is_some())
                    .map(|v| alloc::format!("{}/{}", v.template, v.layout)),
            )
            .collect()
    }
}

/// Smallest application of `rule`: every expression parameter gets the
/// filler, every list parameter a two-item list of it.
pub fn probe_expression(rule: &ProductionRule, filler: &Expr) -> Expr {
    Node::apply(
        rule.name.clone(),
        rule.params.iter().map(|p| {
            let value = match p.kind {
                ParamKind::Expr => filler.clone(),
                ParamKind::List => Node::list([filler.clone(), filler.clone()]),
            };
            (p.name.clone(), value)
        }),
    )
}

/// Verifies that every rule and constant survives synthesize then compile,
/// and that all variants of a template compile identically.
pub fn coverage_check(reg: &RuleRegistry, cat: &Catalog) -> CoverageReport {
    let filler = reg.atomic_filler().map(|r| Node::atom(r.name.clone()));
    let round_trip = |subject: String, e: Option<Expr>| {
        let failure = match e {
            None => Some(String::from("no atomic rule to fill parameters")),
            Some(e) => match synthesize(&e, cat, reg, &VariantPolicy::Default) {
                Err(err) => Some(alloc::format!("{err}")),
                Ok(d) => match compile(&d, cat) {
                    Err(err) => Some(alloc::format!("{err}")),
                    Ok(back) if back != e => Some(String::from("round trip changed the expression")),
                    Ok(_) => None,
                },
            },
        };
        ProbeResult { subject, failure }
    };

    let rules = reg
        .rules()
        .map(|r| {
            let e = if r.params.is_empty() {
                Some(Node::atom(r.name.clone()))
            } else {
                filler.as_ref().map(|f| probe_expression(r, f))
            };
            round_trip(r.name.clone(), e)
        })
        .collect();
    let constants = reg
        .constants()
        .iter()
        .map(|c| round_trip(alloc::format!("^{c}"), Some(Node::constant(c.clone()))))
        .collect();

    let mut variants = Vec::new();
    // Distinct slot-free layouts, so that swapped slots show up.
    let leaves: Vec<&str> = cat
        .templates()
        .iter()
        .map(|g| cat.layout(g.default_layout()).expect("variants exist"))
        .filter(|l| l.slots().next().is_none())
        .map(|l| l.id.as_str())
        .collect();
    for group in cat.templates().iter().filter(|g| g.variants.len() > 1) {
        if leaves.is_empty() {
            for layout in &group.variants {
                variants.push(VariantResult {
                    template: group.id.clone(),
                    layout: layout.clone(),
                    failure: Some(String::from("no slot-free layout for the canonical fill")),
                });
            }
            continue;
        }
        let canonical = |l: &LayoutSpec| compile(&canonical_fill(l, &leaves), cat);
        let reference = canonical(cat.layout(group.default_layout()).expect("variants exist"));
        for layout in &group.variants[1..] {
            let got = canonical(cat.layout(layout).expect("variants exist"));
            let failure = match (&reference, &got) {
                (Ok(a), Ok(b)) if a == b => None,
                (Ok(_), Ok(_)) => Some(String::from("compiles differently from the default variant")),
                (Err(e), _) | (_, Err(e)) => Some(alloc::format!("{e}")),
            };
            variants.push(VariantResult {
                template: group.id.clone(),
                layout: layout.clone(),
                failure,
            });
        }
    }
    CoverageReport {
        rules,
        constants,
        variants,
    }
}

/// Fills slots in id order with the leaves in turn, so that the fill of a
/// slot does not depend on the variant.
fn canonical_fill(layout: &LayoutSpec, leaves: &[&str]) -> Diagram {
    let mut slots: Vec<_> = layout.slots().collect();
    slots.sort_by_key(|(s, _)| *s);
    let mut next = leaves.iter().cycle().map(|l| Diagram::new(*l));
    let mut leaf = move || next.next().expect("leaves is not empty");
    slots.into_iter().fold(Diagram::new(layout.id.clone()), |d, (slot, arity)| match arity {
        SlotArity::Single => d.with(slot, leaf()),
        SlotArity::List => d.with_list(slot, [leaf(), leaf()]),
    })
}
