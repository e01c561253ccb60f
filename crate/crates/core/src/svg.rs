//! Deterministic SVG emission.

use alloc::string::String;
use core::fmt::Write;

use crate::catalog::Catalog;
use crate::geometry::Transform;
use crate::layout::{Group, Payload, Primitive, Scene, SceneNode, TEXT_BASELINE};

/// Margin around the scene box, in units.
pub const MARGIN: f64 = 10.0;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SvgError {
    #[error("missing asset `{0}`")]
    MissingAsset(String),
}

/// Renders a scene as a standalone SVG document.
///
/// Each group becomes `<g transform="translate(dx dy) scale(s)">`, icons are
/// inlined, numbers use six decimals and lines end with LF.
pub fn emit_svg(scene: &Scene, cat: &Catalog) -> Result<String, SvgError> {
    let b = scene.bounds;
    let mut out = String::new();
    let w = b.width + 2.0 * MARGIN;
    let h = b.height + 2.0 * MARGIN;
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">",
        num(b.x - MARGIN),
        num(b.y - MARGIN),
        num(w),
        num(h),
        num(w),
        num(h)
    );
    group(&scene.root, cat, 1, &mut out)?;
    out.push_str("</svg>\n");
    Ok(out)
}

/// Fixed six-decimal formatting without negative zero.
pub fn num(v: f64) -> String {
    let s = alloc::format!("{v:.6}");
    if s.bytes().all(|c| matches!(c, b'-' | b'0' | b'.')) {
        String::from("0.000000")
    } else {
        s
    }
}

fn transform_attr(t: &Transform) -> String {
    alloc::format!("translate({} {}) scale({})", num(t.dx), num(t.dy), num(t.scale))
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn group(g: &Group, cat: &Catalog, depth: usize, out: &mut String) -> Result<(), SvgError> {
    indent(out, depth);
    let _ = writeln!(out, "<g transform=\"{}\">", transform_attr(&g.transform));
    for child in &g.children {
        match child {
            SceneNode::Group(c) => group(c, cat, depth + 1, out)?,
            SceneNode::Primitive(p) => primitive(p, cat, depth + 1, out)?,
        }
    }
    indent(out, depth);
    out.push_str("</g>\n");
    Ok(())
}

fn primitive(p: &Primitive, cat: &Catalog, depth: usize, out: &mut String) -> Result<(), SvgError> {
    match &p.payload {
        Payload::Icon { asset } => {
            let a = cat.asset(asset).ok_or_else(|| SvgError::MissingAsset(asset.clone()))?;
            indent(out, depth);
            let _ = writeln!(out, "<g class=\"azvd-icon\" data-asset=\"{}\">", escape(asset));
            for line in a.body.lines() {
                indent(out, depth + 1);
                out.push_str(line.trim_start());
                out.push('\n');
            }
            indent(out, depth);
            out.push_str("</g>\n");
        }
        Payload::Text { content, size } => {
            indent(out, depth);
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"{}\" fill=\"black\">{}</text>",
                num(p.bounds.x),
                num(p.bounds.y + TEXT_BASELINE * size),
                num(*size),
                escape(content)
            );
        }
        Payload::Stroke { points, width } => {
            indent(out, depth);
            out.push_str("<polyline points=\"");
            for (i, pt) in points.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{},{}", num(pt.x), num(pt.y));
            }
            let _ = writeln!(
                out,
                "\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\" stroke-linecap=\"round\"/>",
                num(*width)
            );
        }
        Payload::Placeholder { slot } => {
            let r = p.bounds;
            let size = 0.2 * r.width.min(r.height);
            let c = r.center();
            indent(out, depth);
            let _ = writeln!(
                out,
                "<rect class=\"azvd-slot\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.000000\" stroke-dasharray=\"4.000000 4.000000\"/>",
                num(r.x),
                num(r.y),
                num(r.width),
                num(r.height)
            );
            indent(out, depth);
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"black\">{}</text>",
                num(c.x),
                num(c.y),
                num(size),
                escape(slot)
            );
        }
    }
    Ok(())
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}
