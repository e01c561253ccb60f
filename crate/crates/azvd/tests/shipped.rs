use azvd::shipped;
use azvd_core::{coverage_check, validate_catalog};

#[test]
fn shipped_catalog_validates() {
    let b = shipped::bundle();
    let report = validate_catalog(&b.catalog, &b.registry);
    assert!(report.is_clean(), "{:#?}", report.issues);
}

#[test]
fn shipped_coverage_is_complete() {
    let b = shipped::bundle();
    let report = coverage_check(&b.registry, &b.catalog);
    assert!(report.is_clean(), "{:#?}", report);
    assert_eq!(report.rules.len(), 14);
    assert_eq!(report.constants.len(), 2);
}
