#![allow(dead_code)]

use azvd_core::azee::ParamKind;
use azvd_core::catalog::SlotArity;
use azvd_core::compiler::SlotPath;
use azvd_core::layout::{world_primitives, TEXT_ADVANCE, TEXT_BASELINE};
use azvd_core::{build_scene, Catalog, Diagram, Expr, Fill, Node, Rect, RemarkablePoint, RuleRegistry, Scene, Transform};
use rand::seq::IndexedRandom;
use rand::Rng;

pub const EPS: f64 = 1e-6;

pub const INTER_SUBJECTIVITY: &str = ":inter-subjectivity\n  'sig\n  :gentil\n";

pub const LION: &str = "\
:info-about
  'topic
  :lion
  'info
  :nicht-sondern
    'nicht
    :méchant
    'sondern
    :gentil
";

pub const CHAT_GENTIL: &str = ":info-about\n  'topic\n  :chat\n  'info\n  :gentil\n";

pub const CHAT_INTENSITY: &str = "\
:info-about
  'topic
  :chat
  'info
  :intensity
    'sig
    :gentil
";

pub const CHAT_INTER: &str = "\
:inter-subjectivity
  'sig
  :info-about
    'topic
    :chat
    'info
    :intensity
      'sig
      :gentil
";

pub const CONTEXT_TEMPLATE: &str = ":context\n  'ctxt\n  [ctxt]\n  'proc\n  [proc]\n";

pub const LIGHTNING_TEMPLATE: &str = "\
:each-of
  'items
  list
    :about-point
      'pt
      ^Lssp
      'locsig
      [A]
    :about-point
      'pt
      ^Rssp
      'locsig
      [B]
";

/// The three drawn diagrams, left to right, with their expected text.
pub fn drawn() -> [(Diagram, &'static str); 3] {
    let topic_info = |info: Diagram| Diagram::new("equals").with("topic", Diagram::new("chat")).with("info", info);
    let intense = || Diagram::new("intensity").with("sig", Diagram::new("gentil"));
    [
        (topic_info(Diagram::new("gentil")), CHAT_GENTIL),
        (topic_info(intense()), CHAT_INTENSITY),
        (Diagram::new("inter-subjectivity").with("sig", topic_info(intense())), CHAT_INTER),
    ]
}

/// Corner, edge midpoint or center, from the point name.
pub fn point_of(r: &Rect, p: RemarkablePoint) -> (f64, f64) {
    let name = p.as_str();
    let x = if name.contains('W') {
        r.x
    } else if name.contains('E') {
        r.x + r.width
    } else {
        r.x + r.width / 2.0
    };
    let y = if name.starts_with('N') {
        r.y
    } else if name.starts_with('S') {
        r.y + r.height
    } else {
        r.y + r.height / 2.0
    };
    (x, y)
}

fn subdiagram<'d>(d: &'d Diagram, path: &SlotPath) -> &'d Diagram {
    path.0.iter().fold(d, |d, step| match (&d.fills[&step.slot], step.index) {
        (Fill::Child(c), None) => c,
        (Fill::Children(cs), Some(i)) => &cs[i],
        _ => panic!("bad path {path}"),
    })
}

/// Alignment, containment and aspect checks on every node of a scene.
pub fn check_geometry(d: &Diagram, scene: &Scene, cat: &Catalog) -> Result<(), String> {
    for record in &scene.nodes {
        let spec = cat.layout(&record.layout).ok_or("unknown layout")?;
        for a in &spec.aligns {
            let s = record.placement.get(&a.subject).ok_or("missing subject")?;
            let t = record.placement.get(&a.target).ok_or("missing target")?;
            let (sx, sy) = point_of(&s.frame, a.subject_point);
            let (tx, ty) = point_of(&t.frame, a.target_point);
            let err = (sx - tx - a.offset.x).abs().max((sy - ty - a.offset.y).abs());
            if err >= EPS {
                return Err(format!("{} at {}: {} misaligned by {err}", record.layout, record.path, a.subject));
            }
        }
    }
    for record in scene.nodes.iter().skip(1) {
        let steps = &record.path.0;
        let parent_path = SlotPath(steps[..steps.len() - 1].to_vec());
        let parent = scene.nodes.iter().find(|r| r.path == parent_path).ok_or("orphan node")?;
        let step = steps.last().unwrap();
        let spec = cat.layout(&parent.layout).unwrap();
        let element = spec.elements.iter().find(|e| e.slot_id() == Some(step.slot.as_str())).unwrap();
        let placed = parent.placement.get(&element.id).unwrap();
        let zone = match step.index {
            Some(i) => placed.items[i].frame,
            None => placed.frame,
        };
        let zone = parent.to_world.apply_rect(&zone);
        let alone = build_scene(subdiagram(d, &record.path), cat).map_err(|e| e.to_string())?;
        let shift = alone.nodes[0].to_world;
        let natural = alone.bounds.translated(-shift.dx, -shift.dy);
        let child = record.to_world.apply_rect(&natural);
        let tol = EPS * (1.0 + zone.right().abs().max(zone.bottom().abs()));
        if !zone.contains(&child, tol) {
            return Err(format!("{}: {child:?} outside {zone:?}", record.path));
        }
        let skew = (child.width * natural.height - child.height * natural.width).abs();
        if skew >= EPS * natural.width.max(natural.height).max(1.0) * child.width.max(child.height).max(1.0) {
            return Err(format!("{}: aspect ratio changed", record.path));
        }
    }
    Ok(())
}

fn parse_transform(s: &str) -> Result<Transform, String> {
    let inner = s
        .strip_prefix("translate(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("bad transform {s}"))?;
    let (t, sc) = inner.split_once(") scale(").ok_or_else(|| format!("bad transform {s}"))?;
    let (dx, dy) = t.split_once(' ').ok_or_else(|| format!("bad transform {s}"))?;
    let n = |v: &str| v.parse::<f64>().map_err(|e| format!("{v}: {e}"));
    Ok(Transform::new(n(sc)?, n(dx)?, n(dy)?))
}

fn attr(n: &roxmltree::Node, name: &str) -> f64 {
    n.attribute(name).and_then(|v| v.parse().ok()).unwrap_or(f64::NAN)
}

/// Primitive boxes recomputed from an SVG document alone.
pub fn svg_boxes(svg: &str, cat: &Catalog) -> Result<Vec<Rect>, String> {
    let doc = roxmltree::Document::parse(svg).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    walk(doc.root_element(), Transform::IDENTITY, cat, &mut out)?;
    Ok(out)
}

fn walk(node: roxmltree::Node, t: Transform, cat: &Catalog, out: &mut Vec<Rect>) -> Result<(), String> {
    for child in node.children().filter(|c| c.is_element()) {
        match (child.tag_name().name(), child.attribute("class")) {
            ("g", Some("azvd-icon")) => {
                let id = child.attribute("data-asset").unwrap_or_default();
                let asset = cat.asset(id).ok_or_else(|| format!("unknown asset {id}"))?;
                out.push(t.apply_rect(&asset.view_box));
            }
            ("g", _) => {
                let own = parse_transform(child.attribute("transform").unwrap_or_default())?;
                walk(child, t.compose(&own), cat, out)?;
            }
            ("rect", Some("azvd-slot")) => out.push(t.apply_rect(&Rect::new(
                attr(&child, "x"),
                attr(&child, "y"),
                attr(&child, "width"),
                attr(&child, "height"),
            ))),
            // Placeholder labels are centered and carry no box of their own.
            ("text", _) if child.attribute("text-anchor").is_some() => {}
            ("text", _) => {
                let size = attr(&child, "font-size");
                let chars = child.text().unwrap_or("").chars().count() as f64;
                let r = Rect::new(attr(&child, "x"), attr(&child, "y") - TEXT_BASELINE * size, TEXT_ADVANCE * size * chars, size);
                out.push(t.apply_rect(&r));
            }
            ("polyline", _) => {
                let mut pts = Vec::new();
                for p in child.attribute("points").unwrap_or_default().split(' ') {
                    let (x, y) = p.split_once(',').ok_or("bad point")?;
                    pts.push(azvd_core::Point::new(x.parse().map_err(|_| "bad x")?, y.parse().map_err(|_| "bad y")?));
                }
                out.push(t.apply_rect(&Rect::bounding(pts).ok_or("empty polyline")?));
            }
            _ => {}
        }
    }
    Ok(())
}

/// Re-parses the SVG of a scene and compares every primitive box with the
/// scene's world boxes, then checks byte determinism.
pub fn check_svg(scene: &Scene, cat: &Catalog) -> Result<(), String> {
    let svg = azvd_core::emit_svg(scene, cat).map_err(|e| e.to_string())?;
    if azvd_core::emit_svg(scene, cat).map_err(|e| e.to_string())? != svg {
        return Err("svg output differs between runs".into());
    }
    let parsed = svg_boxes(&svg, cat)?;
    let want: Vec<Rect> = world_primitives(scene).iter().map(|w| w.bounds).collect();
    if parsed.len() != want.len() {
        return Err(format!("{} boxes in svg, {} in scene", parsed.len(), want.len()));
    }
    for (p, w) in parsed.iter().zip(&want) {
        if !p.approx_eq(w, EPS * (1.0 + w.right().abs().max(w.bottom().abs()))) {
            return Err(format!("svg box {p:?} != scene box {w:?}"));
        }
    }
    Ok(())
}

/// Random valid expression over `reg`, at most `depth` levels deep, with
/// lists of one to three items.
pub fn random_expr(rng: &mut impl Rng, reg: &RuleRegistry, depth: usize) -> Expr {
    let rules: Vec<_> = reg.rules().collect();
    let atoms: Vec<_> = rules.iter().filter(|r| r.params.is_empty()).collect();
    let compound: Vec<_> = rules.iter().filter(|r| !r.params.is_empty()).collect();
    let lists = compound.iter().any(|r| r.params.iter().any(|p| p.kind == ParamKind::List));
    let min_compound = if lists { 3 } else { 2 };
    if depth < min_compound || rng.random_bool(0.3) {
        let n = atoms.len() + reg.constants().len();
        let i = rng.random_range(0..n);
        return match atoms.get(i) {
            Some(r) => Node::atom(r.name.clone()),
            None => Node::constant(reg.constants()[i - atoms.len()].clone()),
        };
    }
    let rule = compound.choose(rng).unwrap();
    let args: Vec<(String, Expr)> = rule
        .params
        .iter()
        .map(|p| {
            let value = match p.kind {
                ParamKind::Expr => random_expr(rng, reg, depth - 1),
                ParamKind::List => {
                    let n = rng.random_range(1..=3);
                    Node::list((0..n).map(|_| random_expr(rng, reg, depth - 2)))
                }
            };
            (p.name.clone(), value)
        })
        .collect();
    Node::apply(rule.name.clone(), args)
}

/// Random complete diagram over `cat`, at most `depth` layouts deep.
pub fn random_diagram(rng: &mut impl Rng, cat: &Catalog, depth: usize) -> Diagram {
    let (leaves, compound): (Vec<_>, Vec<_>) = cat.layouts().iter().partition(|l| l.slots().next().is_none());
    let spec = if depth <= 1 || rng.random_bool(0.3) {
        *leaves.choose(rng).unwrap()
    } else {
        *compound.choose(rng).unwrap()
    };
    let mut d = Diagram::new(spec.id.clone());
    for (slot, arity) in spec.slots() {
        d = match arity {
            SlotArity::Single => d.with(slot, random_diagram(rng, cat, depth - 1)),
            SlotArity::List => {
                let n = rng.random_range(1..=3);
                d.with_list(slot, (0..n).map(|_| random_diagram(rng, cat, depth - 1)).collect::<Vec<_>>())
            }
        };
    }
    d
}

/// Replaces every layout with a random variant of the same template.
pub fn swap_variants(rng: &mut impl Rng, cat: &Catalog, d: &Diagram) -> Diagram {
    let spec = cat.layout(&d.layout).unwrap();
    let variants = cat.variants_for(&spec.template_id).unwrap();
    let mut out = Diagram::new(variants.choose(rng).unwrap().id.clone());
    for (slot, fill) in &d.fills {
        let fill = match fill {
            Fill::Empty => Fill::Empty,
            Fill::Child(c) => Fill::Child(Box::new(swap_variants(rng, cat, c))),
            Fill::Children(cs) => Fill::Children(cs.iter().map(|c| swap_variants(rng, cat, c)).collect()),
        };
        out.fills.insert(slot.clone(), fill);
    }
    out
}
