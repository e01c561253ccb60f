#![allow(dead_code)]

use std::collections::BTreeMap;

use azvd_core::azee::{parse_template, Param, ProductionRule};
use azvd_core::catalog::{
    AlignConstraint, Asset, Dimension, Direction, ElementKind, ElementSpec, ScaleConstraint, ScaleMode,
};
use azvd_core::{Catalog, LayoutSpec, Point, Rect, RemarkablePoint, RuleRegistry};

pub fn registry() -> RuleRegistry {
    let mut reg = RuleRegistry::new();
    reg.insert(ProductionRule::new("a", [])).unwrap();
    reg.insert(ProductionRule::new("b", [])).unwrap();
    reg.insert(ProductionRule::new("pair", [Param::expr("left"), Param::expr("right")]))
        .unwrap();
    reg.insert(ProductionRule::new("wrap", [Param::expr("sig")])).unwrap();
    reg.insert(ProductionRule::new("many", [Param::list("items")])).unwrap();
    reg.add_constant("K").unwrap();
    reg
}

pub fn el(id: &str, kind: ElementKind) -> ElementSpec {
    ElementSpec { id: id.into(), kind }
}

pub fn icon(asset: &str) -> ElementKind {
    ElementKind::Icon { asset: asset.into() }
}

pub fn slot(id: &str) -> ElementKind {
    ElementKind::Slot {
        slot: id.into(),
        width: 100.0,
        height: 100.0,
    }
}

pub fn text(content: &str) -> ElementKind {
    ElementKind::Text {
        content: content.into(),
        size: 40.0,
    }
}

pub fn align(subject: &str, sp: RemarkablePoint, target: &str, tp: RemarkablePoint, dx: f64, dy: f64) -> AlignConstraint {
    AlignConstraint {
        subject: subject.into(),
        subject_point: sp,
        target: target.into(),
        target_point: tp,
        offset: Point::new(dx, dy),
    }
}

pub fn fixed(subject: &str, w: f64, h: f64) -> ScaleConstraint {
    ScaleConstraint {
        subject: subject.into(),
        mode: ScaleMode::FixedNominal { width: w, height: h },
    }
}

pub fn relative(subject: &str, target: &str, dimension: Dimension, factor: f64) -> ScaleConstraint {
    ScaleConstraint {
        subject: subject.into(),
        mode: ScaleMode::RelativeTo {
            target: target.into(),
            dimension,
            factor,
        },
    }
}

pub fn layout(
    id: &str,
    template_id: &str,
    elements: Vec<ElementSpec>,
    aligns: Vec<AlignConstraint>,
    scales: Vec<ScaleConstraint>,
    template: &str,
) -> LayoutSpec {
    LayoutSpec {
        id: id.into(),
        template_id: template_id.into(),
        variant: id.into(),
        elements,
        aligns,
        scales,
        template: parse_template(template).unwrap(),
    }
}

pub fn assets() -> BTreeMap<String, Asset> {
    let mut m = BTreeMap::new();
    m.insert("sq".into(), Asset::new(Rect::from_size(100.0, 100.0), "<rect width=\"100\" height=\"100\"/>\n"));
    m.insert("wide".into(), Asset::new(Rect::new(0.0, 0.0, 200.0, 100.0), "<ellipse cx=\"100\" cy=\"50\" rx=\"100\" ry=\"50\"/>\n"));
    m.insert("ring".into(), Asset::new(Rect::new(-50.0, -50.0, 100.0, 100.0), "<circle r=\"50\"/>\n"));
    m
}

pub fn layouts() -> Vec<LayoutSpec> {
    use RemarkablePoint::*;
    vec![
        layout("a-icon", "a", vec![el("i", icon("sq"))], vec![], vec![fixed("i", 100.0, 100.0)], ":a\n"),
        layout("b-icon", "b", vec![el("i", icon("wide"))], vec![], vec![fixed("i", 100.0, 100.0)], ":b\n"),
        layout("k-text", "K", vec![el("t", text("K"))], vec![], vec![], "^K\n"),
        layout(
            "pair-h",
            "pair",
            vec![el("l", slot("left")), el("eq", text("=")), el("r", slot("right"))],
            vec![align("eq", West, "l", East, 10.0, 0.0), align("r", West, "eq", East, 10.0, 0.0)],
            vec![],
            ":pair\n  'left\n  [left]\n  'right\n  [right]\n",
        ),
        layout(
            "pair-v",
            "pair",
            vec![
                el("l", slot("left")),
                el(
                    "bar",
                    ElementKind::Stroke {
                        points: vec![Point::new(0.0, 0.0), Point::new(100.0, 0.0)],
                        width: 4.0,
                    },
                ),
                el("r", slot("right")),
            ],
            vec![align("bar", North, "l", South, 0.0, 10.0), align("r", North, "bar", South, 0.0, 10.0)],
            vec![relative("bar", "l", Dimension::Width, 1.2)],
            ":pair\n  'left\n  [left]\n  'right\n  [right]\n",
        ),
        layout(
            "wrap",
            "wrap",
            vec![el("ring", icon("ring")), el("s", slot("sig"))],
            vec![align("s", Center, "ring", Center, 0.0, 0.0)],
            vec![fixed("ring", 160.0, 160.0), relative("s", "ring", Dimension::Height, 0.5)],
            ":wrap\n  'sig\n  [sig]\n",
        ),
        layout(
            "many",
            "many",
            vec![
                el("open", text("[")),
                el(
                    "items",
                    ElementKind::SlotList {
                        slot: "items".into(),
                        direction: Direction::Horizontal,
                        spacing: 20.0,
                        item_width: 100.0,
                        item_height: 100.0,
                    },
                ),
            ],
            vec![align("items", West, "open", East, 5.0, 0.0)],
            vec![],
            ":many\n  'items\n  list\n    [items...]\n",
        ),
        layout(
            "wrapped-pair",
            "wrapped-pair",
            vec![el("ring", icon("ring")), el("s", slot("x"))],
            vec![align("s", Center, "ring", Center, 0.0, 0.0)],
            vec![fixed("ring", 160.0, 160.0)],
            ":wrap\n  'sig\n  :pair\n    'left\n    [x]\n    'right\n    ^K\n",
        ),
    ]
}

pub fn catalog() -> Catalog {
    Catalog::new(layouts(), assets()).unwrap()
}

pub mod gen {
    use azvd_core::{Expr, Node};
    use proptest::prelude::*;

    /// Expressions over the fixture registry.
    pub fn expr(depth: u32) -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            Just(Node::atom("a")),
            Just(Node::atom("b")),
            Just(Node::constant("K")),
        ];
        leaf.prop_recursive(depth, 64, 3, |inner| {
            prop_oneof![
                inner.clone().prop_map(|s| Node::apply("wrap", [("sig", s)])),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Node::apply("pair", [("left", l), ("right", r)])),
                proptest::collection::vec(inner, 1..=3).prop_map(|items| Node::apply("many", [("items", Node::list(items))])),
            ]
        })
    }
}
