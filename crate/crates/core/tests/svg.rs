mod common;

use azvd_core::layout::{world_primitives, TEXT_ADVANCE, TEXT_BASELINE};
use azvd_core::svg::SvgError;
use azvd_core::{build_scene, emit_svg, synthesize, Catalog, Diagram, Rect, Transform, VariantPolicy};
use proptest::prelude::*;

fn parse_transform(s: &str) -> Transform {
    let nums: Vec<f64> = s
        .split(|c: char| !(c.is_ascii_digit() || c == '.' || c == '-'))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().unwrap())
        .collect();
    assert!(s.starts_with("translate(") && s.contains(") scale("), "{s}");
    Transform::new(nums[2], nums[0], nums[1])
}

fn attr(n: &roxmltree::Node, name: &str) -> f64 {
    n.attribute(name).unwrap().parse().unwrap()
}

/// Primitive boxes recomputed from the document alone.
fn boxes_from_svg(svg: &str, cat: &Catalog) -> Vec<Rect> {
    let doc = roxmltree::Document::parse(svg).unwrap();
    let mut out = Vec::new();
    walk(doc.root_element(), Transform::IDENTITY, cat, &mut out);
    out
}

fn walk(node: roxmltree::Node, t: Transform, cat: &Catalog, out: &mut Vec<Rect>) {
    for child in node.children().filter(|c| c.is_element()) {
        match (child.tag_name().name(), child.attribute("class")) {
            ("g", Some("azvd-icon")) => {
                let asset = cat.asset(child.attribute("data-asset").unwrap()).unwrap();
                out.push(t.apply_rect(&asset.view_box));
            }
            ("g", _) => walk(child, t.compose(&parse_transform(child.attribute("transform").unwrap())), cat, out),
            ("rect", Some("azvd-slot")) => out.push(t.apply_rect(&Rect::new(
                attr(&child, "x"),
                attr(&child, "y"),
                attr(&child, "width"),
                attr(&child, "height"),
            ))),
            ("text", None) => {
                let size = attr(&child, "font-size");
                let chars = child.text().unwrap_or("").chars().count() as f64;
                let r = Rect::new(attr(&child, "x"), attr(&child, "y") - TEXT_BASELINE * size, TEXT_ADVANCE * size * chars, size);
                out.push(t.apply_rect(&r));
            }
            ("polyline", _) => {
                let pts = child.attribute("points").unwrap().split(' ').map(|p| {
                    let (x, y) = p.split_once(',').unwrap();
                    azvd_core::Point::new(x.parse().unwrap(), y.parse().unwrap())
                });
                out.push(t.apply_rect(&Rect::bounding(pts).unwrap()));
            }
            _ => {}
        }
    }
}

fn close(a: &Rect, b: &Rect) -> bool {
    a.approx_eq(b, 1e-6 * (1.0 + a.right().abs().max(a.bottom().abs())))
}

#[test]
fn single_icon_is_inlined_once() {
    let cat = common::catalog();
    let svg = emit_svg(&build_scene(&Diagram::new("a-icon"), &cat).unwrap(), &cat).unwrap();
    assert_eq!(svg.matches("class=\"azvd-icon\"").count(), 1);
    assert_eq!(svg.matches("<rect width=\"100\" height=\"100\"/>").count(), 1);
    assert!(svg.contains("viewBox=\"-10.000000 -10.000000 120.000000 120.000000\""));
    assert!(!svg.contains('\r'));
    assert!(svg.lines().all(|l| !l.ends_with(' ')));
}

#[test]
fn placeholders_are_dashed() {
    let cat = common::catalog();
    let svg = emit_svg(&build_scene(&Diagram::new("wrap"), &cat).unwrap(), &cat).unwrap();
    assert!(svg.contains("class=\"azvd-slot\""));
    assert!(svg.contains("stroke-dasharray"));
    assert!(svg.contains(">sig</text>"));
}

#[test]
fn missing_asset_is_an_error() {
    let cat = common::catalog();
    let scene = build_scene(&Diagram::new("a-icon"), &cat).unwrap();
    let layouts = common::layouts().into_iter().filter(|l| l.id == "k-text").collect();
    let bare = Catalog::new(layouts, Default::default()).unwrap();
    assert_eq!(emit_svg(&scene, &bare), Err(SvgError::MissingAsset("sq".into())));
}

#[test]
fn text_is_escaped() {
    let mut layouts = common::layouts();
    layouts[2].elements[0].kind = azvd_core::catalog::ElementKind::Text {
        content: "<&>".into(),
        size: 10.0,
    };
    let cat = Catalog::new(layouts, common::assets()).unwrap();
    let svg = emit_svg(&build_scene(&Diagram::new("k-text"), &cat).unwrap(), &cat).unwrap();
    assert!(svg.contains(">&lt;&amp;&gt;</text>"));
    roxmltree::Document::parse(&svg).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn transforms_reproduce_world_boxes(e in common::gen::expr(5)) {
        let cat = common::catalog();
        let d = synthesize(&e, &cat, &common::registry(), &VariantPolicy::Default).unwrap();
        let scene = build_scene(&d, &cat).unwrap();
        let svg = emit_svg(&scene, &cat).unwrap();
        let parsed = boxes_from_svg(&svg, &cat);
        let want: Vec<Rect> = world_primitives(&scene)
            .iter()
            .filter(|w| !matches!(w.primitive.payload, azvd_core::layout::Payload::Placeholder { .. }))
            .map(|w| w.bounds)
            .collect();
        prop_assert_eq!(parsed.len(), want.len());
        for (p, w) in parsed.iter().zip(&want) {
            prop_assert!(close(p, w), "{:?} {:?}", p, w);
        }
        prop_assert_eq!(emit_svg(&scene, &cat).unwrap(), svg);
    }
}
