use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::catalog::{Catalog, LayoutSpec, SlotArity};

/// A user-authored diagram: a layout and the contents of its fill zones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub layout: String,
    /// Keyed by slot id. A slot without an entry is empty.
    pub fills: BTreeMap<String, Fill>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fill {
    Child(Box<Diagram>),
    Children(Vec<Diagram>),
    Empty,
}

impl Diagram {
    pub fn new(layout: impl Into<String>) -> Self {
        Diagram {
            layout: layout.into(),
            fills: BTreeMap::new(),
        }
    }

    pub fn with(mut self, slot: impl Into<String>, child: Diagram) -> Self {
        self.fills.insert(slot.into(), Fill::Child(Box::new(child)));
        self
    }

    pub fn with_list(mut self, slot: impl Into<String>, children: impl IntoIterator<Item = Diagram>) -> Self {
        self.fills.insert(slot.into(), Fill::Children(children.into_iter().collect()));
        self
    }

    pub fn with_empty(mut self, slot: impl Into<String>) -> Self {
        self.fills.insert(slot.into(), Fill::Empty);
        self
    }

    /// Child diagrams in slot order of the fills map.
    pub fn children(&self) -> impl Iterator<Item = &Diagram> + '_ {
        self.fills.values().flat_map(|f| match f {
            Fill::Child(c) => core::slice::from_ref(c.as_ref()).iter(),
            Fill::Children(cs) => cs.iter(),
            Fill::Empty => [].iter(),
        })
    }

    pub fn node_count(&self) -> usize {
        1 + self.children().map(Diagram::node_count).sum::<usize>()
    }
}

/// Location of a nested diagram: the slots traversed from the root, with
/// the item index inside list slots.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct SlotPath(pub Vec<PathStep>);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathStep {
    pub slot: String,
    pub index: Option<usize>,
}

impl SlotPath {
    pub fn root() -> Self {
        SlotPath(Vec::new())
    }

    pub fn child(&self, slot: &str, index: Option<usize>) -> SlotPath {
        let mut steps = self.0.clone();
        steps.push(PathStep {
            slot: slot.into(),
            index,
        });
        SlotPath(steps)
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SlotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("/");
        }
        for step in &self.0 {
            write!(f, "/{}", step.slot)?;
            if let Some(i) = step.index {
                write!(f, "[{i}]")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("{path}: unknown layout `{layout}`")]
    UnknownLayout { path: SlotPath, layout: String },
    #[error("{path}: layout `{layout}` has no slot `{slot}`")]
    UnknownSlot { path: SlotPath, layout: String, slot: String },
    #[error("{path}: fill of slot `{slot}` does not match its kind")]
    FillMismatch { path: SlotPath, slot: String },
    #[error("{path}: slot is empty")]
    Incomplete { path: SlotPath },
}

impl DiagramError {
    pub fn code(&self) -> &'static str {
        match self {
            DiagramError::UnknownLayout { .. } => "unknown-layout",
            DiagramError::UnknownSlot { .. } => "unknown-slot",
            DiagramError::FillMismatch { .. } => "fill-mismatch",
            DiagramError::Incomplete { .. } => "incomplete-diagram",
        }
    }

    pub fn path(&self) -> &SlotPath {
        match self {
            DiagramError::UnknownLayout { path, .. }
            | DiagramError::UnknownSlot { path, .. }
            | DiagramError::FillMismatch { path, .. }
            | DiagramError::Incomplete { path } => path,
        }
    }
}

/// Resolves the node's layout and checks that its fills name existing slots
/// with matching kinds. Does not descend.
pub(crate) fn check_node<'c>(d: &Diagram, cat: &'c Catalog, path: &SlotPath) -> Result<&'c LayoutSpec, DiagramError> {
    let layout = cat.layout(&d.layout).ok_or_else(|| DiagramError::UnknownLayout {
        path: path.clone(),
        layout: d.layout.clone(),
    })?;
    for (slot, fill) in &d.fills {
        let arity = layout.slot_arity(slot).ok_or_else(|| DiagramError::UnknownSlot {
            path: path.clone(),
            layout: d.layout.clone(),
            slot: slot.clone(),
        })?;
        match (arity, fill) {
            (_, Fill::Empty) | (SlotArity::Single, Fill::Child(_)) | (SlotArity::List, Fill::Children(_)) => {}
            _ => {
                return Err(DiagramError::FillMismatch {
                    path: path.clone(),
                    slot: slot.clone(),
                })
            }
        }
    }
    Ok(layout)
}

/// Checks the whole tree. The first empty slot is reported depth-first, in
/// the element order of each layout.
pub fn check_diagram(d: &Diagram, cat: &Catalog) -> Result<(), DiagramError> {
    check_rec(d, cat, &SlotPath::root())
}

fn check_rec(d: &Diagram, cat: &Catalog, path: &SlotPath) -> Result<(), DiagramError> {
    let layout = check_node(d, cat, path)?;
    for (slot, _) in layout.slots() {
        match d.fills.get(slot) {
            Some(Fill::Child(c)) => check_rec(c, cat, &path.child(slot, None))?,
            Some(Fill::Children(cs)) if !cs.is_empty() => {
                for (i, c) in cs.iter().enumerate() {
                    check_rec(c, cat, &path.child(slot, Some(i)))?;
                }
            }
            _ => {
                return Err(DiagramError::Incomplete {
                    path: path.child(slot, None),
                })
            }
        }
    }
    Ok(())
}

/// Checks layouts, slot names and fill kinds everywhere, allowing empty
/// slots.
pub fn check_structure(d: &Diagram, cat: &Catalog) -> Result<(), DiagramError> {
    fn rec(d: &Diagram, cat: &Catalog, path: &SlotPath) -> Result<(), DiagramError> {
        check_node(d, cat, path)?;
        for (slot, fill) in &d.fills {
            match fill {
                Fill::Child(c) => rec(c, cat, &path.child(slot, None))?,
                Fill::Children(cs) => {
                    for (i, c) in cs.iter().enumerate() {
                        rec(c, cat, &path.child(slot, Some(i)))?;
                    }
                }
                Fill::Empty => {}
            }
        }
        Ok(())
    }
    rec(d, cat, &SlotPath::root())
}

/// True iff no fill zone anywhere is empty. Unknown layouts count as
/// incomplete.
pub fn is_complete(d: &Diagram, cat: &Catalog) -> bool {
    check_diagram(d, cat).is_ok()
}
