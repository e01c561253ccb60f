//! JSON documents for registries, catalogs and diagrams.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use azvd_core::azee::{parse_template, print_node, Param, ParamKind, ParseError, ProductionRule, RegistryError};
use azvd_core::catalog::{
    AlignConstraint, Asset, AssetError, CatalogError, Dimension, Direction, ElementKind, ElementSpec, ScaleConstraint,
    ScaleMode,
};
use azvd_core::compiler::{check_structure, DiagramError};
use azvd_core::{Catalog, Diagram, Fill, LayoutSpec, Point, RemarkablePoint, RuleRegistry};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Schema(String),
    #[error("layout `{layout}`: template: {error}")]
    Template { layout: String, error: ParseError },
    #[error(transparent)]
    Registry(#[from] RegistryError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("asset `{id}`: {error}")]
    Asset { id: String, error: AssetError },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_owned(),
        source,
    })
}

// Registry

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RegistryDoc {
    #[serde(default)]
    constants: Vec<String>,
    rules: Vec<RuleDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleDoc {
    name: String,
    #[serde(default)]
    params: Vec<ParamDoc>,
    #[serde(default)]
    doc: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamDoc {
    name: String,
    kind: KindDoc,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
enum KindDoc {
    Expr,
    List,
}

pub fn load_registry(text: &str) -> Result<RuleRegistry, FormatError> {
    let doc: RegistryDoc = serde_json::from_str(text)?;
    let mut reg = RuleRegistry::new();
    for rule in doc.rules {
        let params = rule.params.into_iter().map(|p| match p.kind {
            KindDoc::Expr => Param::expr(p.name),
            KindDoc::List => Param::list(p.name),
        });
        reg.insert(ProductionRule::new(rule.name, params).with_doc(rule.doc))?;
    }
    for c in doc.constants {
        reg.add_constant(c)?;
    }
    Ok(reg)
}

pub fn save_registry(reg: &RuleRegistry) -> String {
    let doc = RegistryDoc {
        constants: reg.constants().to_vec(),
        rules: reg
            .rules()
            .map(|r| RuleDoc {
                name: r.name.clone(),
                params: r
                    .params
                    .iter()
                    .map(|p| ParamDoc {
                        name: p.name.clone(),
                        kind: match p.kind {
                            ParamKind::Expr => KindDoc::Expr,
                            ParamKind::List => KindDoc::List,
                        },
                    })
                    .collect(),
                doc: r.doc.clone(),
            })
            .collect(),
    };
    pretty(&doc)
}

// Layouts

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BundleDoc {
    #[serde(default)]
    layouts: Vec<LayoutDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayoutDoc {
    id: String,
    template_id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    variant: Option<String>,
    elements: Vec<ElementDoc>,
    #[serde(default)]
    aligns: Vec<AlignDoc>,
    #[serde(default)]
    scales: Vec<ScaleDoc>,
    template: TemplateDoc,
}

#[derive(Debug, Serialize, Deserialize)]
struct ElementDoc {
    id: String,
    #[serde(flatten)]
    kind: KindOfElement,
}

fn nominal() -> f64 {
    azvd_core::catalog::NOMINAL_SIZE
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum KindOfElement {
    Icon {
        asset: String,
    },
    Text {
        content: String,
        size: f64,
    },
    Slot {
        slot: String,
        #[serde(default = "nominal")]
        width: f64,
        #[serde(default = "nominal")]
        height: f64,
    },
    SlotList {
        slot: String,
        direction: DirectionDoc,
        #[serde(default)]
        spacing: f64,
        #[serde(default = "nominal")]
        item_width: f64,
        #[serde(default = "nominal")]
        item_height: f64,
    },
    Stroke {
        points: Vec<[f64; 2]>,
        width: f64,
    },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum DirectionDoc {
    Horizontal,
    Vertical,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlignDoc {
    subject: String,
    subject_point: String,
    target: String,
    target_point: String,
    #[serde(default)]
    offset: [f64; 2],
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
enum ScaleDoc {
    Fixed {
        subject: String,
        width: f64,
        height: f64,
    },
    Relative {
        subject: String,
        target: String,
        dimension: DimensionDoc,
        factor: f64,
    },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum DimensionDoc {
    Width,
    Height,
}

/// AZee template text, as one string or as a list of lines.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum TemplateDoc {
    Text(String),
    Lines(Vec<String>),
}

fn point_name(layout: &str, s: &str) -> Result<RemarkablePoint, FormatError> {
    s.parse()
        .map_err(|_| FormatError::Schema(format!("layout `{layout}`: unknown remarkable point {s:?}")))
}

fn layout_from_doc(doc: LayoutDoc) -> Result<LayoutSpec, FormatError> {
    let text = match doc.template {
        TemplateDoc::Text(t) => t,
        TemplateDoc::Lines(lines) => lines.iter().map(|l| format!("{l}\n")).collect(),
    };
    let template = parse_template(&text).map_err(|error| FormatError::Template {
        layout: doc.id.clone(),
        error,
    })?;
    let elements = doc
        .elements
        .into_iter()
        .map(|e| ElementSpec {
            id: e.id,
            kind: match e.kind {
                KindOfElement::Icon { asset } => ElementKind::Icon { asset },
                KindOfElement::Text { content, size } => ElementKind::Text { content, size },
                KindOfElement::Slot { slot, width, height } => ElementKind::Slot { slot, width, height },
                KindOfElement::SlotList {
                    slot,
                    direction,
                    spacing,
                    item_width,
                    item_height,
                } => ElementKind::SlotList {
                    slot,
                    direction: match direction {
                        DirectionDoc::Horizontal => Direction::Horizontal,
                        DirectionDoc::Vertical => Direction::Vertical,
                    },
                    spacing,
                    item_width,
                    item_height,
                },
                KindOfElement::Stroke { points, width } => ElementKind::Stroke {
                    points: points.into_iter().map(|[x, y]| Point::new(x, y)).collect(),
                    width,
                },
            },
        })
        .collect();
    let aligns = doc
        .aligns
        .into_iter()
        .map(|a| {
            Ok(AlignConstraint {
                subject_point: point_name(&doc.id, &a.subject_point)?,
                target_point: point_name(&doc.id, &a.target_point)?,
                subject: a.subject,
                target: a.target,
                offset: Point::new(a.offset[0], a.offset[1]),
            })
        })
        .collect::<Result<_, FormatError>>()?;
    let scales = doc
        .scales
        .into_iter()
        .map(|s| match s {
            ScaleDoc::Fixed { subject, width, height } => ScaleConstraint {
                subject,
                mode: ScaleMode::FixedNominal { width, height },
            },
            ScaleDoc::Relative {
                subject,
                target,
                dimension,
                factor,
            } => ScaleConstraint {
                subject,
                mode: ScaleMode::RelativeTo {
                    target,
                    dimension: match dimension {
                        DimensionDoc::Width => Dimension::Width,
                        DimensionDoc::Height => Dimension::Height,
                    },
                    factor,
                },
            },
        })
        .collect();
    Ok(LayoutSpec {
        variant: doc.variant.unwrap_or_else(|| doc.id.clone()),
        id: doc.id,
        template_id: doc.template_id,
        elements,
        aligns,
        scales,
        template,
    })
}

fn layout_to_doc(l: &LayoutSpec) -> LayoutDoc {
    LayoutDoc {
        id: l.id.clone(),
        template_id: l.template_id.clone(),
        variant: Some(l.variant.clone()),
        elements: l
            .elements
            .iter()
            .map(|e| ElementDoc {
                id: e.id.clone(),
                kind: match &e.kind {
                    ElementKind::Icon { asset } => KindOfElement::Icon { asset: asset.clone() },
                    ElementKind::Text { content, size } => KindOfElement::Text {
                        content: content.clone(),
                        size: *size,
                    },
                    ElementKind::Slot { slot, width, height } => KindOfElement::Slot {
                        slot: slot.clone(),
                        width: *width,
                        height: *height,
                    },
                    ElementKind::SlotList {
                        slot,
                        direction,
                        spacing,
                        item_width,
                        item_height,
                    } => KindOfElement::SlotList {
                        slot: slot.clone(),
                        direction: match direction {
                            Direction::Horizontal => DirectionDoc::Horizontal,
                            Direction::Vertical => DirectionDoc::Vertical,
                        },
                        spacing: *spacing,
                        item_width: *item_width,
                        item_height: *item_height,
                    },
                    ElementKind::Stroke { points, width } => KindOfElement::Stroke {
                        points: points.iter().map(|p| [p.x, p.y]).collect(),
                        width: *width,
                    },
                },
            })
            .collect(),
        aligns: l
            .aligns
            .iter()
            .map(|a| AlignDoc {
                subject: a.subject.clone(),
                subject_point: a.subject_point.as_str().into(),
                target: a.target.clone(),
                target_point: a.target_point.as_str().into(),
                offset: [a.offset.x, a.offset.y],
            })
            .collect(),
        scales: l
            .scales
            .iter()
            .map(|s| match &s.mode {
                ScaleMode::FixedNominal { width, height } => ScaleDoc::Fixed {
                    subject: s.subject.clone(),
                    width: *width,
                    height: *height,
                },
                ScaleMode::RelativeTo {
                    target,
                    dimension,
                    factor,
                } => ScaleDoc::Relative {
                    subject: s.subject.clone(),
                    target: target.clone(),
                    dimension: match dimension {
                        Dimension::Width => DimensionDoc::Width,
                        Dimension::Height => DimensionDoc::Height,
                    },
                    factor: *factor,
                },
            })
            .collect(),
        template: TemplateDoc::Lines(print_node(&l.template).lines().map(String::from).collect()),
    }
}

/// Layouts of a bundle document `{"layouts": [...]}`.
pub fn load_layouts(text: &str) -> Result<Vec<LayoutSpec>, FormatError> {
    let doc: BundleDoc = serde_json::from_str(text)?;
    doc.layouts.into_iter().map(layout_from_doc).collect()
}

/// One layout document.
pub fn load_layout(text: &str) -> Result<LayoutSpec, FormatError> {
    layout_from_doc(serde_json::from_str(text)?)
}

pub fn save_layouts(layouts: &[LayoutSpec]) -> String {
    pretty(&BundleDoc {
        layouts: layouts.iter().map(layout_to_doc).collect(),
    })
}

pub fn load_asset(id: &str, svg: &str) -> Result<Asset, FormatError> {
    Asset::from_svg(svg).map_err(|error| FormatError::Asset { id: id.into(), error })
}

/// A standalone SVG document for an asset.
pub fn asset_document(asset: &Asset) -> String {
    let vb = asset.view_box;
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n{}</svg>\n",
        azvd_core::svg::num(vb.x),
        azvd_core::svg::num(vb.y),
        azvd_core::svg::num(vb.width),
        azvd_core::svg::num(vb.height),
        asset.body
    )
}

/// A catalog with the registry it is meant to cover.
#[derive(Debug, Clone)]
pub struct Bundle {
    pub catalog: Catalog,
    pub registry: RuleRegistry,
}

/// Reads a catalog directory: `catalog.json` (a bundle), then every
/// `layouts/*.json` in file name order, assets from `assets/*.svg` keyed by
/// file stem, and `registry.json`. Without a registry file the shipped
/// registry is used.
pub fn load_catalog_dir(dir: &Path) -> Result<Bundle, FormatError> {
    if !dir.is_dir() {
        return Err(FormatError::Io {
            path: dir.to_owned(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "not a directory"),
        });
    }
    let mut layouts = Vec::new();
    let bundle = dir.join("catalog.json");
    if bundle.exists() {
        layouts.extend(load_layouts(&read(&bundle)?)?);
    }
    for path in sorted_entries(&dir.join("layouts"), "json")? {
        layouts.push(load_layout(&read(&path)?)?);
    }
    let mut assets = BTreeMap::new();
    for path in sorted_entries(&dir.join("assets"), "svg")? {
        let id = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string();
        let asset = load_asset(&id, &read(&path)?)?;
        assets.insert(id, asset);
    }
    let registry_path = dir.join("registry.json");
    let registry = if registry_path.exists() {
        load_registry(&read(&registry_path)?)?
    } else {
        crate::shipped::bundle().registry.clone()
    };
    Ok(Bundle {
        catalog: Catalog::new(layouts, assets)?,
        registry,
    })
}

fn sorted_entries(dir: &Path, ext: &str) -> Result<Vec<PathBuf>, FormatError> {
    if !dir.is_dir() {
        return Ok(Vec::new());
    }
    let io = |source| FormatError::Io {
        path: dir.to_owned(),
        source,
    };
    let mut out = Vec::new();
    for entry in fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.extension().and_then(|e| e.to_str()) == Some(ext) {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

// Diagrams

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramDoc {
    layout: String,
    #[serde(default)]
    fills: BTreeMap<String, Option<FillDoc>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum FillDoc {
    Many(Vec<DiagramDoc>),
    One(Box<DiagramDoc>),
}

fn diagram_from_doc(doc: DiagramDoc) -> Diagram {
    let mut d = Diagram::new(doc.layout);
    for (slot, fill) in doc.fills {
        let fill = match fill {
            None => Fill::Empty,
            Some(FillDoc::One(c)) => Fill::Child(Box::new(diagram_from_doc(*c))),
            Some(FillDoc::Many(cs)) => Fill::Children(cs.into_iter().map(diagram_from_doc).collect()),
        };
        d.fills.insert(slot, fill);
    }
    d
}

fn diagram_to_doc(d: &Diagram) -> DiagramDoc {
    DiagramDoc {
        layout: d.layout.clone(),
        fills: d
            .fills
            .iter()
            .map(|(slot, fill)| {
                let fill = match fill {
                    Fill::Empty => None,
                    Fill::Child(c) => Some(FillDoc::One(Box::new(diagram_to_doc(c)))),
                    Fill::Children(cs) => Some(FillDoc::Many(cs.iter().map(diagram_to_doc).collect())),
                };
                (slot.clone(), fill)
            })
            .collect(),
    }
}

/// Parses a diagram document without looking at any catalog.
pub fn parse_diagram(text: &str) -> Result<Diagram, FormatError> {
    Ok(diagram_from_doc(serde_json::from_str(text)?))
}

pub fn diagram_from_value(value: serde_json::Value) -> Result<Diagram, FormatError> {
    Ok(diagram_from_doc(serde_json::from_value(value)?))
}

pub fn diagram_to_value(d: &Diagram) -> serde_json::Value {
    serde_json::to_value(diagram_to_doc(d)).expect("diagram documents serialize")
}

/// Parses a diagram and checks its layouts and slots against `cat`. Empty
/// slots are accepted.
pub fn load_diagram(text: &str, cat: &Catalog) -> Result<Diagram, FormatError> {
    let d = parse_diagram(text)?;
    check_structure(&d, cat)?;
    Ok(d)
}

pub fn save_diagram(d: &Diagram) -> String {
    pretty(&diagram_to_doc(d))
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}
