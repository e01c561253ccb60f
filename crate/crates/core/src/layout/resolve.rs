use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::catalog::{Catalog, Dimension, Direction, ElementKind, ElementSpec, LayoutSpec, ScaleMode};
use crate::geometry::{contain_fit, Fit, Point, Rect, Transform};

/// Advance width of one character, as a fraction of the font size.
pub const TEXT_ADVANCE: f64 = 0.6;
/// Baseline position below the top of a text box, as a fraction of the font size.
pub const TEXT_BASELINE: f64 = 0.8;

/// Natural box of a content fed to a fill zone.
#[derive(Debug, Clone, PartialEq)]
pub enum SlotContent {
    Single(Rect),
    List(Vec<Rect>),
}

/// Where one element ended up.
///
/// Content transforms are rounded to six decimals; frames are exact.
#[derive(Debug, Clone, PartialEq)]
pub struct ElementPlacement {
    pub element: String,
    /// Box of the element's content in its own coordinates: the asset view
    /// box, text or stroke extent, the nested diagram box for a filled slot,
    /// or the nominal box for an empty one.
    pub natural: Rect,
    /// Placed box in layout coordinates; alignment acts on this box.
    pub frame: Rect,
    /// Maps `natural` into `frame`.
    pub content: Transform,
    /// Per-item placements of a list slot. An empty list slot has a single
    /// placeholder item.
    pub items: Vec<ItemPlacement>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ItemPlacement {
    /// Item box in layout coordinates.
    pub frame: Rect,
    /// Box of the item content in its own coordinates.
    pub natural: Rect,
    /// Maps `natural` into `frame`.
    pub transform: Transform,
    /// Maps `natural` into the item box in the coordinates of the list box.
    pub fit: Transform,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LayoutWarning {
    /// Content without extent, centered at scale 1.
    DegenerateContent { element: String },
    /// Relative scaling against a zero dimension; scale 1 used.
    DegenerateScale { element: String },
    /// Alignment or scale target not placed yet; the origin is used.
    UnresolvedTarget { element: String, target: String },
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Placement {
    /// In element order.
    pub elements: Vec<ElementPlacement>,
    pub warnings: Vec<LayoutWarning>,
}

impl Placement {
    pub fn get(&self, element: &str) -> Option<&ElementPlacement> {
        self.elements.iter().find(|e| e.element == element)
    }
}

/// Places every element of a layout.
///
/// The anchor's frame sits at the origin. Each following element gets its
/// frame size from its scale constraint, then is translated so that its
/// subject point lands on the target point plus offset. `contents` gives
/// the natural box of each filled slot; slots without an entry are empty
/// and use their nominal box.
pub fn resolve_layout(spec: &LayoutSpec, cat: &Catalog, contents: &BTreeMap<String, SlotContent>) -> Placement {
    let mut placement = Placement::default();
    for (index, element) in spec.elements.iter().enumerate() {
        let placed = place_element(spec, cat, contents, index, element, &mut placement);
        placement.elements.push(placed);
    }
    placement
}

fn place_element(
    spec: &LayoutSpec,
    cat: &Catalog,
    contents: &BTreeMap<String, SlotContent>,
    index: usize,
    element: &ElementSpec,
    placement: &mut Placement,
) -> ElementPlacement {
    let content = element
        .slot_id()
        .and_then(|s| contents.get(s))
        .cloned();
    // `base` is the box the scale constraint acts on; `natural` is what gets
    // drawn inside the frame.
    let (base, natural, list_items) = match &element.kind {
        ElementKind::Icon { asset } => {
            let vb = cat.asset(asset).map(|a| a.view_box).unwrap_or_default();
            (vb, vb, None)
        }
        ElementKind::Text { content, size } => {
            let r = text_box(content, *size);
            (r, r, None)
        }
        ElementKind::Stroke { points, .. } => {
            let r = Rect::bounding(points.iter().copied()).unwrap_or_default();
            (r, r, None)
        }
        ElementKind::Slot { width, height, .. } => {
            let nominal = Rect::from_size(*width, *height);
            let natural = match content {
                Some(SlotContent::Single(r)) => r,
                _ => nominal,
            };
            (nominal, natural, None)
        }
        ElementKind::SlotList {
            direction,
            spacing,
            item_width,
            item_height,
            ..
        } => {
            let naturals = match content {
                Some(SlotContent::List(v)) if !v.is_empty() => v,
                Some(SlotContent::Single(r)) => alloc::vec![r],
                _ => alloc::vec![Rect::from_size(*item_width, *item_height)],
            };
            let (boxes, total) = list_boxes(naturals.len(), *direction, *spacing, *item_width, *item_height);
            (total, total, Some((boxes, naturals)))
        }
    };

    let frame_size = frame_for(spec, element, &base, placement);
    let mut frame = frame_size;
    if index > 0 {
        if let Some(align) = spec.align_for(&element.id) {
            let target = match placement.get(&align.target) {
                Some(t) => t.frame.point(align.target_point),
                None => {
                    placement.warnings.push(LayoutWarning::UnresolvedTarget {
                        element: element.id.clone(),
                        target: align.target.clone(),
                    });
                    Point::default()
                }
            };
            let subject = frame.point(align.subject_point);
            frame = frame.translated(
                target.x + align.offset.x - subject.x,
                target.y + align.offset.y - subject.y,
            );
        }
    }

    let mut items = Vec::new();
    let content_fit = if let Some((boxes, naturals)) = list_items {
        // The list box maps onto the frame exactly; items are fitted inside.
        let list_fit = grid_fit(&base, &frame);
        for (item_box, natural) in boxes.iter().zip(&naturals) {
            let fit = grid_fit(natural, item_box);
            if fit.degenerate {
                placement.warnings.push(LayoutWarning::DegenerateContent {
                    element: element.id.clone(),
                });
            }
            items.push(ItemPlacement {
                frame: list_fit.transform.apply_rect(item_box),
                natural: *natural,
                transform: list_fit.transform.compose(&fit.transform),
                fit: fit.transform,
            });
        }
        list_fit
    } else {
        grid_fit(&natural, &frame)
    };
    if content_fit.degenerate {
        placement.warnings.push(LayoutWarning::DegenerateContent {
            element: element.id.clone(),
        });
    }
    ElementPlacement {
        element: element.id.clone(),
        natural,
        frame,
        content: content_fit.transform,
        items,
    }
}

/// Frame of an element at the origin, before alignment.
fn frame_for(spec: &LayoutSpec, element: &ElementSpec, base: &Rect, placement: &mut Placement) -> Rect {
    let Some(scale) = spec.scale_for(&element.id) else {
        return Rect::from_size(base.width, base.height);
    };
    match &scale.mode {
        ScaleMode::FixedNominal { width, height } => Rect::from_size(*width, *height),
        ScaleMode::RelativeTo {
            target,
            dimension,
            factor,
        } => {
            let Some(t) = placement.get(target) else {
                placement.warnings.push(LayoutWarning::UnresolvedTarget {
                    element: element.id.clone(),
                    target: target.clone(),
                });
                return Rect::from_size(base.width, base.height);
            };
            let (own, theirs) = match dimension {
                Dimension::Width => (base.width, t.frame.width),
                Dimension::Height => (base.height, t.frame.height),
            };
            let mut s = factor * theirs / own;
            if !(s.is_finite() && s > 0.0) {
                placement.warnings.push(LayoutWarning::DegenerateScale {
                    element: element.id.clone(),
                });
                s = 1.0;
            }
            Rect::from_size(base.width * s, base.height * s)
        }
    }
}

/// Rounds to the six decimals used in SVG output, so that emitted
/// transforms are exact.
pub(crate) fn snap(v: f64) -> f64 {
    alloc::format!("{v:.6}").parse().unwrap_or(v)
}

/// Contain-fit whose scale and translation sit on the output grid. The
/// scale is rounded down so the content stays inside the frame.
fn grid_fit(content: &Rect, frame: &Rect) -> Fit {
    let fit = contain_fit(content, frame);
    let mut scale = fit.transform.scale;
    if !fit.degenerate {
        let nearest = snap(scale);
        let floored = if nearest > scale { snap(nearest - 1e-6) } else { nearest };
        scale = if floored > 0.0 { floored } else { nearest };
    }
    let fc = frame.center();
    let cc = content.center();
    Fit {
        transform: Transform::new(scale, snap(fc.x - scale * cc.x), snap(fc.y - scale * cc.y)),
        degenerate: fit.degenerate,
    }
}

pub(crate) fn text_box(content: &str, size: f64) -> Rect {
    Rect::from_size(TEXT_ADVANCE * size * content.chars().count() as f64, size)
}

fn list_boxes(n: usize, direction: Direction, spacing: f64, w: f64, h: f64) -> (Vec<Rect>, Rect) {
    let boxes: Vec<Rect> = (0..n)
        .map(|i| {
            let offset = i as f64;
            match direction {
                Direction::Horizontal => Rect::new(offset * (w + spacing), 0.0, w, h),
                Direction::Vertical => Rect::new(0.0, offset * (h + spacing), w, h),
            }
        })
        .collect();
    let total = boxes.iter().skip(1).fold(boxes[0], |acc, b| acc.union(b));
    (boxes, total)
}

/// Checks every alignment constraint of `spec` against `placement`: the
/// largest distance between a subject point and its target point plus
/// offset.
pub fn alignment_error(spec: &LayoutSpec, placement: &Placement) -> f64 {
    let mut worst: f64 = 0.0;
    for a in &spec.aligns {
        let (Some(s), Some(t)) = (placement.get(&a.subject), placement.get(&a.target)) else {
            continue;
        };
        let sp = s.frame.point(a.subject_point);
        let tp = t.frame.point(a.target_point);
        worst = worst
            .max((sp.x - tp.x - a.offset.x).abs())
            .max((sp.y - tp.y - a.offset.y).abs());
    }
    worst
}
