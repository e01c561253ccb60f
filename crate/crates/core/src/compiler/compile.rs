use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::diagram::{check_diagram, Diagram, DiagramError, Fill, SlotPath};
use crate::azee::{Application, Arg, Expr, Hole, Node, Template};
use crate::catalog::Catalog;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompileError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    /// The template of a layout references a slot with no matching fill.
    #[error("{path}: template placeholder `{slot}` has no usable fill")]
    Template { path: SlotPath, slot: String },
}

impl CompileError {
    pub fn code(&self) -> &'static str {
        match self {
            CompileError::Diagram(e) => e.code(),
            CompileError::Template { .. } => "template-mismatch",
        }
    }
}

/// Compiles a complete diagram: the template of each layout with every
/// placeholder replaced by the compiled fill of its slot.
pub fn compile(d: &Diagram, cat: &Catalog) -> Result<Expr, CompileError> {
    check_diagram(d, cat)?;
    compile_rec(d, cat, &SlotPath::root())
}

fn compile_rec(d: &Diagram, cat: &Catalog, path: &SlotPath) -> Result<Expr, CompileError> {
    let layout = cat.layout(&d.layout).ok_or_else(|| DiagramError::UnknownLayout {
        path: path.clone(),
        layout: d.layout.clone(),
    })?;
    let mut single = BTreeMap::new();
    let mut many = BTreeMap::new();
    for (slot, fill) in &d.fills {
        match fill {
            Fill::Child(c) => {
                single.insert(slot.as_str(), compile_rec(c, cat, &path.child(slot, None))?);
            }
            Fill::Children(cs) => {
                let items = cs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| compile_rec(c, cat, &path.child(slot, Some(i))))
                    .collect::<Result<Vec<_>, _>>()?;
                many.insert(slot.as_str(), items);
            }
            Fill::Empty => {}
        }
    }
    instantiate(&layout.template, &|slot| single.get(slot).cloned(), &|slot| many.get(slot).cloned())
        .map_err(|slot| CompileError::Template { path: path.clone(), slot })
}

/// Substitutes placeholders. `one` supplies the expression of a slot and
/// `items` the items spliced in place of a list placeholder. On failure the
/// offending slot id is returned.
pub fn instantiate(
    template: &Template,
    one: &dyn Fn(&str) -> Option<Expr>,
    items: &dyn Fn(&str) -> Option<Vec<Expr>>,
) -> Result<Expr, String> {
    Ok(match template {
        Node::Apply(app) => Node::Apply(Application {
            rule: app.rule.clone(),
            args: app
                .args
                .iter()
                .map(|a| {
                    Ok(Arg {
                        name: a.name.clone(),
                        value: instantiate(&a.value, one, items)?,
                    })
                })
                .collect::<Result<_, String>>()?,
        }),
        Node::List(ts) => {
            let mut out = Vec::with_capacity(ts.len());
            for t in ts {
                match t {
                    Node::Hole(Hole::Splice(slot)) => out.extend(items(slot).ok_or_else(|| slot.clone())?),
                    t => out.push(instantiate(t, one, items)?),
                }
            }
            Node::List(out)
        }
        Node::Constant(c) => Node::Constant(c.clone()),
        Node::Hole(Hole::Slot(slot)) => one(slot).ok_or_else(|| slot.clone())?,
        Node::Hole(Hole::Splice(slot)) => return Err(slot.clone()),
    })
}
