use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::diagram::Diagram;
use crate::azee::{validate_expr, Expr, Hole, Node, RuleRegistry, Template, ValidationReport};
use crate::catalog::{Catalog, LayoutSpec, TemplateGroup};

/// Which variant stands for a template in synthesized diagrams.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum VariantPolicy {
    #[default]
    Default,
    /// Template id to layout id; unlisted templates use their default.
    Explicit(BTreeMap<String, String>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SynthesizeError {
    #[error("invalid expression: {}", .0.first().map(|v| alloc::format!("{v}")).unwrap_or_default())]
    InvalidExpression(ValidationReport),
    #[error("no layout can represent `{rule}`")]
    NoAntecedent { rule: String },
    #[error("layout `{layout}` is not a variant of template `{template}`")]
    InvalidPolicy { template: String, layout: String },
}

impl SynthesizeError {
    pub fn code(&self) -> &'static str {
        match self {
            SynthesizeError::InvalidExpression(_) => "invalid-expression",
            SynthesizeError::NoAntecedent { .. } => "no-antecedent",
            SynthesizeError::InvalidPolicy { .. } => "invalid-policy",
        }
    }
}

/// What a placeholder matched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Binding<'e> {
    One(&'e Expr),
    Many(Vec<&'e Expr>),
}

/// Matches a template against an expression. Slots bind whole
/// subexpressions; a list placeholder binds one or more consecutive items.
pub fn unify<'e>(template: &Template, expr: &'e Expr) -> Option<BTreeMap<String, Binding<'e>>> {
    let mut out = BTreeMap::new();
    unify_into(template, expr, &mut out).then_some(out)
}

fn unify_into<'e>(t: &Template, e: &'e Expr, out: &mut BTreeMap<String, Binding<'e>>) -> bool {
    match (t, e) {
        (Node::Hole(Hole::Slot(s)), e) if !matches!(e, Node::List(_)) => {
            out.insert(s.clone(), Binding::One(e));
            true
        }
        (Node::Apply(ta), Node::Apply(ea)) => {
            ta.rule == ea.rule
                && ta.args.len() == ea.args.len()
                && ta
                    .args
                    .iter()
                    .zip(&ea.args)
                    .all(|(x, y)| x.name == y.name && unify_into(&x.value, &y.value, out))
        }
        (Node::Constant(a), Node::Constant(b)) => a == b,
        (Node::List(ts), Node::List(es)) => {
            match ts.iter().position(|t| matches!(t, Node::Hole(Hole::Splice(_)))) {
                Some(k) => {
                    let suffix = ts.len() - k - 1;
                    if es.len() < k + suffix + 1 {
                        return false;
                    }
                    let tail = es.len() - suffix;
                    let Node::Hole(h) = &ts[k] else { unreachable!() };
                    let fixed = ts[..k].iter().zip(&es[..k]).chain(ts[k + 1..].iter().zip(&es[tail..]));
                    for (t, e) in fixed {
                        if !unify_into(t, e, out) {
                            return false;
                        }
                    }
                    out.insert(h.slot_id().into(), Binding::Many(es[k..tail].iter().collect()));
                    true
                }
                None => ts.len() == es.len() && ts.iter().zip(es).all(|(t, e)| unify_into(t, e, out)),
            }
        }
        _ => false,
    }
}

/// Finds a diagram compiling to `e`.
///
/// Templates are tried by decreasing number of rule applications, ties in
/// catalog order. A match whose bound subexpressions cannot be represented
/// is abandoned for the next candidate.
pub fn synthesize(e: &Expr, cat: &Catalog, reg: &RuleRegistry, policy: &VariantPolicy) -> Result<Diagram, SynthesizeError> {
    let report = validate_expr(e, reg);
    if !report.is_clean() {
        return Err(SynthesizeError::InvalidExpression(report));
    }
    let mut chosen = BTreeMap::new();
    for group in cat.templates() {
        chosen.insert(group.id.as_str(), choose(group, cat, policy)?);
    }
    let order: Vec<_> = cat
        .templates_by_specificity()
        .into_iter()
        .filter(|g| !matches!(g.template, Node::Hole(_)))
        .map(|g| (g, chosen[g.id.as_str()]))
        .collect();
    synth(e, &order)
}

fn choose<'c>(group: &TemplateGroup, cat: &'c Catalog, policy: &VariantPolicy) -> Result<&'c LayoutSpec, SynthesizeError> {
    let id = match policy {
        VariantPolicy::Explicit(map) => match map.get(&group.id) {
            Some(l) if group.variants.contains(l) => l.as_str(),
            Some(l) => {
                return Err(SynthesizeError::InvalidPolicy {
                    template: group.id.clone(),
                    layout: l.clone(),
                })
            }
            None => group.default_layout(),
        },
        VariantPolicy::Default => group.default_layout(),
    };
    Ok(cat.layout(id).expect("variants exist"))
}

fn synth(e: &Expr, order: &[(&TemplateGroup, &LayoutSpec)]) -> Result<Diagram, SynthesizeError> {
    let mut first_err = None;
    'candidates: for (group, layout) in order {
        let Some(bindings) = unify(&group.template, e) else {
            continue;
        };
        let mut d = Diagram::new(layout.id.clone());
        for (slot, binding) in bindings {
            let fill = match binding {
                Binding::One(sub) => synth(sub, order).map(|c| d.clone().with(slot.clone(), c)),
                Binding::Many(items) => items
                    .into_iter()
                    .map(|sub| synth(sub, order))
                    .collect::<Result<Vec<_>, _>>()
                    .map(|cs| d.clone().with_list(slot.clone(), cs)),
            };
            match fill {
                Ok(next) => d = next,
                Err(err) => {
                    first_err.get_or_insert(err);
                    continue 'candidates;
                }
            }
        }
        return Ok(d);
    }
    Err(first_err.unwrap_or_else(|| SynthesizeError::NoAntecedent {
        rule: match e {
            Node::Apply(a) => a.rule.clone(),
            Node::Constant(c) => alloc::format!("^{c}"),
            Node::List(_) => String::from("list"),
            Node::Hole(never) => match *never {},
        },
    }))
}
