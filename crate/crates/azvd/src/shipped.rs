//! The catalog and registry compiled into the binary.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use azvd_core::Catalog;

use crate::formats::{load_asset, load_layouts, load_registry, Bundle};

const REGISTRY: &str = include_str!("../catalog/registry.json");
const LAYOUTS: &str = include_str!("../catalog/catalog.json");
const ASSETS: [(&str, &str); 6] = [
    ("chat", include_str!("../catalog/assets/chat.svg")),
    ("gentil", include_str!("../catalog/assets/gentil.svg")),
    ("lion", include_str!("../catalog/assets/lion.svg")),
    ("lips", include_str!("../catalog/assets/lips.svg")),
    ("mechant", include_str!("../catalog/assets/mechant.svg")),
    ("soleil", include_str!("../catalog/assets/soleil.svg")),
];

/// Shipped registry and catalog, parsed once.
pub fn bundle() -> &'static Bundle {
    static BUNDLE: OnceLock<Bundle> = OnceLock::new();
    BUNDLE.get_or_init(|| {
        let registry = load_registry(REGISTRY).expect("shipped registry");
        let layouts = load_layouts(LAYOUTS).expect("shipped layouts");
        let assets: BTreeMap<_, _> = ASSETS
            .iter()
            .map(|(id, svg)| (id.to_string(), load_asset(id, svg).expect("shipped asset")))
            .collect();
        let catalog = Catalog::new(layouts, assets).expect("shipped catalog");
        Bundle { catalog, registry }
    })
}
