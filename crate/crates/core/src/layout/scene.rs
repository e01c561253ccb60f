use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::resolve::{resolve_layout, snap, text_box, LayoutWarning, Placement, SlotContent};
use crate::catalog::{Catalog, ElementKind};
use crate::compiler::{check_node, Diagram, DiagramError, Fill, SlotPath};
use crate::geometry::{Point, Rect, Transform};

/// What a primitive draws, in its own coordinates.
#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    /// Catalog asset drawn in its view box.
    Icon { asset: String },
    /// Label whose box starts at the origin.
    Text { content: String, size: f64 },
    Stroke { points: Vec<Point>, width: f64 },
    /// Empty fill zone: a dashed box with the slot id.
    Placeholder { slot: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Primitive {
    pub payload: Payload,
    /// Local box.
    pub bounds: Rect,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SceneNode {
    Primitive(Primitive),
    Group(Group),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Group {
    pub transform: Transform,
    /// Rotation in degrees. Reserved, always 0.
    pub angle: f64,
    pub children: Vec<SceneNode>,
}

impl Group {
    fn new(transform: Transform, children: Vec<SceneNode>) -> Self {
        Group {
            transform,
            angle: 0.0,
            children,
        }
    }
}

/// One diagram node of the scene.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeRecord {
    pub path: SlotPath,
    pub layout: String,
    /// Maps the node's layout coordinates to scene coordinates.
    pub to_world: Transform,
    /// Element placement in layout coordinates.
    pub placement: Placement,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SceneWarning {
    pub path: SlotPath,
    pub warning: LayoutWarning,
}

/// A positioned diagram. The root box starts at the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub root: Group,
    pub bounds: Rect,
    /// Diagram nodes in depth-first order, root first.
    pub nodes: Vec<NodeRecord>,
    pub warnings: Vec<SceneWarning>,
}

impl Scene {
    pub fn empty() -> Scene {
        Scene {
            root: Group::new(Transform::IDENTITY, Vec::new()),
            bounds: Rect::default(),
            nodes: Vec::new(),
            warnings: Vec::new(),
        }
    }
}

struct Built {
    group: Group,
    bounds: Rect,
    nodes: Vec<NodeRecord>,
    warnings: Vec<SceneWarning>,
}

/// Lays out a diagram recursively. Children are built first and their boxes
/// fitted into the fill zones of the parent. Empty slots become
/// placeholders, so incomplete diagrams render too.
pub fn build_scene(d: &Diagram, cat: &Catalog) -> Result<Scene, DiagramError> {
    let built = build(d, cat, &SlotPath::root())?;
    Ok(Scene {
        root: built.group,
        bounds: built.bounds,
        nodes: built.nodes,
        warnings: built.warnings,
    })
}

fn build(d: &Diagram, cat: &Catalog, path: &SlotPath) -> Result<Built, DiagramError> {
    let spec = check_node(d, cat, path)?;

    let mut singles: BTreeMap<&str, Built> = BTreeMap::new();
    let mut lists: BTreeMap<&str, Vec<Built>> = BTreeMap::new();
    let mut contents = BTreeMap::new();
    for (slot, _) in spec.slots() {
        match d.fills.get(slot) {
            Some(Fill::Child(c)) => {
                let b = build(c, cat, &path.child(slot, None))?;
                contents.insert(slot.into(), SlotContent::Single(b.bounds));
                singles.insert(slot, b);
            }
            Some(Fill::Children(cs)) if !cs.is_empty() => {
                let mut items = Vec::with_capacity(cs.len());
                for (i, c) in cs.iter().enumerate() {
                    items.push(build(c, cat, &path.child(slot, Some(i)))?);
                }
                contents.insert(slot.into(), SlotContent::List(items.iter().map(|b| b.bounds).collect()));
                lists.insert(slot, items);
            }
            _ => {}
        }
    }

    let placement = resolve_layout(spec, cat, &contents);
    let mut warnings: Vec<SceneWarning> = placement
        .warnings
        .iter()
        .map(|w| SceneWarning {
            path: path.clone(),
            warning: w.clone(),
        })
        .collect();
    // Child records, with transforms relative to layout coordinates.
    let mut nested: Vec<NodeRecord> = Vec::new();
    let mut children = Vec::with_capacity(spec.elements.len());
    for (element, placed) in spec.elements.iter().zip(&placement.elements) {
        let primitive = |payload, bounds| SceneNode::Primitive(Primitive { payload, bounds });
        let node = match &element.kind {
            ElementKind::Icon { asset } => primitive(Payload::Icon { asset: asset.clone() }, placed.natural),
            ElementKind::Text { content, size } => primitive(
                Payload::Text {
                    content: content.clone(),
                    size: *size,
                },
                text_box(content, *size),
            ),
            ElementKind::Stroke { points, width } => primitive(
                Payload::Stroke {
                    points: points.clone(),
                    width: *width,
                },
                placed.natural,
            ),
            ElementKind::Slot { slot, .. } => match singles.remove(slot.as_str()) {
                Some(b) => embed(b, placed.content, &mut nested, &mut warnings),
                None => primitive(Payload::Placeholder { slot: slot.clone() }, placed.natural),
            },
            ElementKind::SlotList { slot, .. } => {
                let mut in_list = Vec::new();
                let items = match lists.remove(slot.as_str()) {
                    Some(built) => built
                        .into_iter()
                        .zip(&placed.items)
                        .map(|(b, item)| embed(b, item.fit, &mut in_list, &mut warnings))
                        .collect(),
                    None => placed
                        .items
                        .iter()
                        .map(|item| {
                            SceneNode::Group(Group::new(
                                item.fit,
                                alloc::vec![primitive(Payload::Placeholder { slot: slot.clone() }, item.natural)],
                            ))
                        })
                        .collect(),
                };
                nested.extend(in_list.into_iter().map(|mut r| {
                    r.to_world = placed.content.compose(&r.to_world);
                    r
                }));
                children.push(SceneNode::Group(Group::new(placed.content, items)));
                continue;
            }
        };
        let node = match node {
            SceneNode::Primitive(_) => SceneNode::Group(Group::new(placed.content, alloc::vec![node])),
            group => group,
        };
        children.push(node);
    }

    let local = Group::new(Transform::IDENTITY, children);
    let extent = union_of(&local, Transform::IDENTITY).unwrap_or_default();
    let normalize = Transform::translate(snap(-extent.x), snap(-extent.y));
    let mut nodes = alloc::vec![NodeRecord {
        path: path.clone(),
        layout: spec.id.clone(),
        to_world: normalize,
        placement,
    }];
    nodes.extend(nested.into_iter().map(|mut r| {
        r.to_world = normalize.compose(&r.to_world);
        r
    }));
    Ok(Built {
        group: Group::new(normalize, local.children),
        bounds: Rect::from_size(extent.width, extent.height),
        nodes,
        warnings,
    })
}

/// Wraps a built child in the transform fitting it into its zone.
fn embed(b: Built, fit: Transform, nested: &mut Vec<NodeRecord>, warnings: &mut Vec<SceneWarning>) -> SceneNode {
    nested.extend(b.nodes.into_iter().map(|mut r| {
        r.to_world = fit.compose(&r.to_world);
        r
    }));
    warnings.extend(b.warnings);
    SceneNode::Group(Group::new(fit, alloc::vec![SceneNode::Group(b.group)]))
}

/// A primitive with its scene-space transform and box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorldPrimitive<'a> {
    pub primitive: &'a Primitive,
    pub to_world: Transform,
    pub bounds: Rect,
}

/// Every primitive of the scene in drawing order.
pub fn world_primitives(scene: &Scene) -> Vec<WorldPrimitive<'_>> {
    let mut out = Vec::new();
    collect(&scene.root, Transform::IDENTITY, &mut out);
    out
}

fn collect<'a>(group: &'a Group, outer: Transform, out: &mut Vec<WorldPrimitive<'a>>) {
    let t = outer.compose(&group.transform);
    for child in &group.children {
        match child {
            SceneNode::Primitive(p) => out.push(WorldPrimitive {
                primitive: p,
                to_world: t,
                bounds: t.apply_rect(&p.bounds),
            }),
            SceneNode::Group(g) => collect(g, t, out),
        }
    }
}

fn union_of(group: &Group, outer: Transform) -> Option<Rect> {
    let mut out = Vec::new();
    collect(group, outer, &mut out);
    out.iter().map(|w| w.bounds).reduce(|a, b| a.union(&b))
}

/// Tight union of the transformed primitive boxes; the zero box at the
/// origin for an empty scene.
pub fn bounding_box(scene: &Scene) -> Rect {
    union_of(&scene.root, Transform::IDENTITY).unwrap_or_default()
}
