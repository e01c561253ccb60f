mod support;

use azvd::shipped;
use azvd_core::azee::{parse_template, print_node};
use azvd_core::{compile, parse_azee, print_azee, synthesize, validate_expr, Diagram, VariantPolicy};
use support::*;

#[test]
fn printed_blocks_round_trip() {
    let reg = &shipped::bundle().registry;
    for text in [INTER_SUBJECTIVITY, LION, CHAT_GENTIL, CHAT_INTENSITY, CHAT_INTER] {
        let e = parse_azee(text).unwrap();
        assert!(validate_expr(&e, reg).is_clean(), "{text}");
        assert_eq!(print_azee(&e), text);
    }
}

#[test]
fn drawn_diagrams_compile_to_their_text() {
    let cat = &shipped::bundle().catalog;
    for (d, text) in drawn() {
        assert_eq!(compile(&d, cat).unwrap(), parse_azee(text).unwrap());
        assert_eq!(print_azee(&compile(&d, cat).unwrap()), text);
    }
}

#[test]
fn drawn_diagrams_are_synthesized_back() {
    let b = shipped::bundle();
    for (d, text) in drawn() {
        let got = synthesize(&parse_azee(text).unwrap(), &b.catalog, &b.registry, &VariantPolicy::Default).unwrap();
        assert_eq!(got, d);
    }
}

#[test]
fn layout_templates_print_as_written() {
    let cat = &shipped::bundle().catalog;
    assert_eq!(print_node(&cat.layout("context-bar").unwrap().template), CONTEXT_TEMPLATE);
    assert_eq!(print_node(&cat.layout("lightning").unwrap().template), LIGHTNING_TEMPLATE);
    assert_eq!(parse_template(LIGHTNING_TEMPLATE).unwrap(), cat.layout("lightning").unwrap().template);
}

#[test]
fn templates_compile_with_their_fills() {
    let cat = &shipped::bundle().catalog;
    let leaf = Diagram::new;
    let cases = [
        (
            Diagram::new("context-bar").with("ctxt", leaf("soleil")).with("proc", leaf("lion")),
            ":context\n  'ctxt\n  :soleil\n  'proc\n  :lion\n",
        ),
        (
            Diagram::new("equals").with("topic", leaf("soleil")).with("info", leaf("lion")),
            ":info-about\n  'topic\n  :soleil\n  'info\n  :lion\n",
        ),
        (
            Diagram::new("lightning").with("A", leaf("soleil")).with("B", leaf("lion")),
            ":each-of\n  'items\n  list\n    :about-point\n      'pt\n      ^Lssp\n      'locsig\n      :soleil\n    :about-point\n      'pt\n      ^Rssp\n      'locsig\n      :lion\n",
        ),
        (
            Diagram::new("category").with("cat", leaf("soleil")).with("elt", leaf("lion")),
            ":category\n  'cat\n  :soleil\n  'elt\n  :lion\n",
        ),
    ];
    for (d, text) in cases {
        assert_eq!(print_azee(&compile(&d, cat).unwrap()), text, "{}", d.layout);
    }
}

#[test]
fn info_about_has_two_variants() {
    let cat = &shipped::bundle().catalog;
    let ids: Vec<&str> = cat.variants_for("info-about").unwrap().iter().map(|l| l.id.as_str()).collect();
    assert_eq!(ids, ["equals", "equals-vertical"]);
    let d = Diagram::new("equals-vertical").with("topic", Diagram::new("chat")).with("info", Diagram::new("gentil"));
    assert_eq!(print_azee(&compile(&d, cat).unwrap()), CHAT_GENTIL);
}

#[test]
fn drawn_diagrams_have_sound_geometry() {
    let cat = &shipped::bundle().catalog;
    for (d, _) in drawn() {
        let scene = azvd_core::build_scene(&d, cat).unwrap();
        check_geometry(&d, &scene, cat).unwrap();
        check_svg(&scene, cat).unwrap();
    }
}
