//! Constraint resolution and scene construction.

mod resolve;
mod scene;

pub use resolve::{
    alignment_error, resolve_layout, ElementPlacement, ItemPlacement, LayoutWarning, Placement, SlotContent,
    TEXT_ADVANCE, TEXT_BASELINE,
};
pub use scene::{
    bounding_box, build_scene, world_primitives, Group, NodeRecord, Payload, Primitive, Scene, SceneNode,
    SceneWarning, WorldPrimitive,
};
