use alloc::string::String;
use alloc::vec::Vec;

use crate::azee::Template;
use crate::geometry::{Point, RemarkablePoint};

/// Default nominal size of atomic elements and fill zones.
pub const NOMINAL_SIZE: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ElementKind {
    /// Vector image from the catalog assets.
    Icon { asset: String },
    /// Single-line label; `size` is the font size in units.
    Text { content: String, size: f64 },
    /// Fill zone expecting one nested diagram, framed by a nominal box.
    Slot { slot: String, width: f64, height: f64 },
    /// Fill zone expecting a sequence of diagrams, each fitted into an item
    /// box and laid out along `direction`.
    SlotList {
        slot: String,
        direction: Direction,
        spacing: f64,
        item_width: f64,
        item_height: f64,
    },
    /// Polyline in local units.
    Stroke { points: Vec<Point>, width: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElementSpec {
    pub id: String,
    pub kind: ElementKind,
}

impl ElementSpec {
    pub fn slot_id(&self) -> Option<&str> {
        match &self.kind {
            ElementKind::Slot { slot, .. } | ElementKind::SlotList { slot, .. } => Some(slot),
            _ => None,
        }
    }

    pub fn slot_arity(&self) -> Option<SlotArity> {
        match self.kind {
            ElementKind::Slot { .. } => Some(SlotArity::Single),
            ElementKind::SlotList { .. } => Some(SlotArity::List),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotArity {
    Single,
    List,
}

/// `subject.subject_point = target.target_point + offset`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlignConstraint {
    pub subject: String,
    pub subject_point: RemarkablePoint,
    pub target: String,
    pub target_point: RemarkablePoint,
    pub offset: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Width,
    Height,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ScaleMode {
    /// The element's frame becomes a `width`×`height` box; its content is
    /// fitted inside.
    FixedNominal { width: f64, height: f64 },
    /// Uniform scaling so that `dimension` equals `factor` times the same
    /// dimension of the target's frame.
    RelativeTo {
        target: String,
        dimension: Dimension,
        factor: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScaleConstraint {
    pub subject: String,
    pub mode: ScaleMode,
}

impl ScaleConstraint {
    pub fn target(&self) -> Option<&str> {
        match &self.mode {
            ScaleMode::RelativeTo { target, .. } => Some(target),
            ScaleMode::FixedNominal { .. } => None,
        }
    }
}

/// A graphical arrangement paired with the template it compiles to.
#[derive(Debug, Clone, PartialEq)]
pub struct LayoutSpec {
    pub id: String,
    /// Identifier shared by all variants producing the same template.
    pub template_id: String,
    pub variant: String,
    /// In placement order; the first element is the anchor.
    pub elements: Vec<ElementSpec>,
    pub aligns: Vec<AlignConstraint>,
    pub scales: Vec<ScaleConstraint>,
    pub template: Template,
}

impl LayoutSpec {
    pub fn anchor(&self) -> Option<&ElementSpec> {
        self.elements.first()
    }

    pub fn element_index(&self, id: &str) -> Option<usize> {
        self.elements.iter().position(|e| e.id == id)
    }

    pub fn element(&self, id: &str) -> Option<&ElementSpec> {
        self.elements.iter().find(|e| e.id == id)
    }

    /// Slots in element order.
    pub fn slots(&self) -> impl Iterator<Item = (&str, SlotArity)> + '_ {
        self.elements.iter().filter_map(|e| Some((e.slot_id()?, e.slot_arity()?)))
    }

    pub fn slot_arity(&self, slot: &str) -> Option<SlotArity> {
        self.slots().find(|(s, _)| *s == slot).map(|(_, a)| a)
    }

    pub fn align_for(&self, element: &str) -> Option<&AlignConstraint> {
        self.aligns.iter().find(|a| a.subject == element)
    }

    pub fn scale_for(&self, element: &str) -> Option<&ScaleConstraint> {
        self.scales.iter().find(|s| s.subject == element)
    }
}
