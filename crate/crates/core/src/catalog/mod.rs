//! Layout catalog: every layout with its elements, constraints and AZee
//! template, grouped by template into variants.

mod asset;
mod spec;
mod validate;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::azee::{Hole, Template};

pub use asset::{Asset, AssetError};
pub use spec::{
    AlignConstraint, Dimension, Direction, ElementKind, ElementSpec, LayoutSpec, ScaleConstraint, ScaleMode, SlotArity,
    NOMINAL_SIZE,
};
pub use validate::{covers_constant, covers_rule, validate_catalog, CatalogIssue, CatalogReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("duplicate layout `{0}`")]
    DuplicateLayout(String),
    #[error("layout `{0}` has no elements")]
    EmptyLayout(String),
    #[error("layout `{layout}`: duplicate element `{element}`")]
    DuplicateElement { layout: String, element: String },
    #[error("layout `{layout}`: duplicate slot `{slot}`")]
    DuplicateSlot { layout: String, slot: String },
    #[error("layout `{layout}`: constraint references unknown element `{element}`")]
    UnknownElement { layout: String, element: String },
    #[error("layout `{layout}`: missing asset `{asset}`")]
    MissingAsset { layout: String, asset: String },
    #[error("layout `{layout}`: template references slot `{slot}` with no fill zone")]
    DanglingSlot { layout: String, slot: String },
    #[error("layout `{layout}`: placeholder for slot `{slot}` does not match its fill zone kind")]
    SlotKindMismatch { layout: String, slot: String },
    #[error("unknown template `{0}`")]
    UnknownTemplate(String),
}

/// Layouts sharing one template id.
#[derive(Debug, Clone, PartialEq)]
pub struct TemplateGroup {
    pub id: String,
    /// Template of the default variant.
    pub template: Template,
    /// Layout ids in catalog order; the first is the default.
    pub variants: Vec<String>,
}

impl TemplateGroup {
    pub fn default_layout(&self) -> &str {
        &self.variants[0]
    }
}

/// Immutable, fully resolved set of layouts and assets.
#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    layouts: Vec<LayoutSpec>,
    index: BTreeMap<String, usize>,
    groups: Vec<TemplateGroup>,
    group_index: BTreeMap<String, usize>,
    assets: BTreeMap<String, Asset>,
}

impl Catalog {
    /// Builds a catalog, rejecting dangling references. Constraint ordering,
    /// template validity and coverage are checked by [`validate_catalog`].
    pub fn new(layouts: Vec<LayoutSpec>, assets: BTreeMap<String, Asset>) -> Result<Catalog, CatalogError> {
        let mut index = BTreeMap::new();
        let mut groups: Vec<TemplateGroup> = Vec::new();
        let mut group_index = BTreeMap::new();
        for (i, layout) in layouts.iter().enumerate() {
            check_layout(layout, &assets)?;
            if index.insert(layout.id.clone(), i).is_some() {
                return Err(CatalogError::DuplicateLayout(layout.id.clone()));
            }
            match group_index.get(&layout.template_id) {
                Some(&g) => {
                    let group: &mut TemplateGroup = &mut groups[g];
                    group.variants.push(layout.id.clone());
                }
                None => {
                    group_index.insert(layout.template_id.clone(), groups.len());
                    groups.push(TemplateGroup {
                        id: layout.template_id.clone(),
                        template: layout.template.clone(),
                        variants: alloc::vec![layout.id.clone()],
                    });
                }
            }
        }
        Ok(Catalog {
            layouts,
            index,
            groups,
            group_index,
            assets,
        })
    }

    pub fn layout(&self, id: &str) -> Option<&LayoutSpec> {
        self.index.get(id).map(|&i| &self.layouts[i])
    }

    /// Layouts in catalog order.
    pub fn layouts(&self) -> &[LayoutSpec] {
        &self.layouts
    }

    /// Template groups in order of first appearance.
    pub fn templates(&self) -> &[TemplateGroup] {
        &self.groups
    }

    pub fn template(&self, id: &str) -> Option<&TemplateGroup> {
        self.group_index.get(id).map(|&i| &self.groups[i])
    }

    pub fn asset(&self, id: &str) -> Option<&Asset> {
        self.assets.get(id)
    }

    pub fn assets(&self) -> &BTreeMap<String, Asset> {
        &self.assets
    }

    /// Variants of a template, default first, then catalog order.
    pub fn variants_for(&self, template_id: &str) -> Result<Vec<&LayoutSpec>, CatalogError> {
        let group = self
            .template(template_id)
            .ok_or_else(|| CatalogError::UnknownTemplate(template_id.into()))?;
        Ok(group.variants.iter().map(|id| &self.layouts[self.index[id]]).collect())
    }

    /// Template groups by decreasing number of rule applications in their
    /// template; ties keep catalog order.
    pub fn templates_by_specificity(&self) -> Vec<&TemplateGroup> {
        let mut groups: Vec<_> = self.groups.iter().collect();
        groups.sort_by_key(|g| core::cmp::Reverse(g.template.application_count()));
        groups
    }

    /// Copy of the catalog without the given layouts.
    pub fn without_layouts(&self, ids: &[&str]) -> Catalog {
        let layouts = self.layouts.iter().filter(|l| !ids.contains(&l.id.as_str())).cloned().collect();
        Catalog::new(layouts, self.assets.clone()).expect("subset of a valid catalog")
    }
}

fn check_layout(layout: &LayoutSpec, assets: &BTreeMap<String, Asset>) -> Result<(), CatalogError> {
    let err_elem = |element: &str| CatalogError::UnknownElement {
        layout: layout.id.clone(),
        element: element.into(),
    };
    if layout.elements.is_empty() {
        return Err(CatalogError::EmptyLayout(layout.id.clone()));
    }
    for (i, e) in layout.elements.iter().enumerate() {
        if layout.elements[..i].iter().any(|o| o.id == e.id) {
            return Err(CatalogError::DuplicateElement {
                layout: layout.id.clone(),
                element: e.id.clone(),
            });
        }
        if let Some(slot) = e.slot_id() {
            if layout.elements[..i].iter().any(|o| o.slot_id() == Some(slot)) {
                return Err(CatalogError::DuplicateSlot {
                    layout: layout.id.clone(),
                    slot: slot.into(),
                });
            }
        }
        if let ElementKind::Icon { asset } = &e.kind {
            if !assets.contains_key(asset) {
                return Err(CatalogError::MissingAsset {
                    layout: layout.id.clone(),
                    asset: asset.clone(),
                });
            }
        }
    }
    for a in &layout.aligns {
        for id in [&a.subject, &a.target] {
            layout.element(id).ok_or_else(|| err_elem(id))?;
        }
    }
    for s in &layout.scales {
        layout.element(&s.subject).ok_or_else(|| err_elem(&s.subject))?;
        if let Some(t) = s.target() {
            layout.element(t).ok_or_else(|| err_elem(t))?;
        }
    }
    let mut result = Ok(());
    layout.template.for_each_hole(&mut |hole: &Hole| {
        if result.is_err() {
            return;
        }
        let slot = hole.slot_id();
        result = match (layout.slot_arity(slot), hole) {
            (None, _) => Err(CatalogError::DanglingSlot {
                layout: layout.id.clone(),
                slot: slot.into(),
            }),
            (Some(SlotArity::Single), Hole::Slot(_)) | (Some(SlotArity::List), Hole::Splice(_)) => Ok(()),
            _ => Err(CatalogError::SlotKindMismatch {
                layout: layout.id.clone(),
                slot: slot.into(),
            }),
        };
    });
    result
}

/// Placeholders of a template in document order.
pub fn template_slots(template: &Template) -> Vec<&Hole> {
    let mut out = Vec::new();
    template.for_each_hole(&mut |h| out.push(h));
    out
}
