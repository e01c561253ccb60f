mod common;

use azvd_core::azee::{parse_template, print_node, ParseErrorKind};
use azvd_core::{parse_azee, print_azee, validate_expr, Node};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn print_then_parse_is_identity(e in common::gen::expr(8)) {
        let text = print_azee(&e);
        prop_assert_eq!(parse_azee(&text).unwrap(), e);
    }

    #[test]
    fn printed_text_is_normal(e in common::gen::expr(8)) {
        let text = print_azee(&e);
        prop_assert!(text.ends_with('\n'));
        for line in text.lines() {
            prop_assert!(!line.is_empty());
            prop_assert!(!line.ends_with(' '));
            prop_assert!(!line.contains('\t') && !line.contains('\r'));
            let indent = line.len() - line.trim_start().len();
            prop_assert_eq!(indent % 2, 0);
        }
        prop_assert_eq!(print_azee(&parse_azee(&text).unwrap()), text);
    }

    #[test]
    fn generated_expressions_validate(e in common::gen::expr(8)) {
        prop_assert!(validate_expr(&e, &common::registry()).is_clean());
    }

    #[test]
    fn tabs_are_rejected_anywhere(e in common::gen::expr(4), at in any::<prop::sample::Index>()) {
        let text = print_azee(&e);
        let lines: Vec<&str> = text.lines().collect();
        let i = at.index(lines.len());
        let mut broken = String::new();
        for (n, l) in lines.iter().enumerate() {
            if n == i {
                broken.push('\t');
            }
            broken.push_str(l);
            broken.push('\n');
        }
        let err = parse_azee(&broken).unwrap_err();
        prop_assert_eq!(err.kind, ParseErrorKind::Tab);
        prop_assert_eq!(err.line, i + 1);
    }
}

#[test]
fn info_about_block() {
    let text = ":info-about\n  'topic\n  :chat\n  'info\n  :gentil\n";
    let e = parse_azee(text).unwrap();
    assert_eq!(
        e,
        Node::apply("info-about", [("topic", Node::atom("chat")), ("info", Node::atom("gentil"))])
    );
    assert_eq!(print_azee(&e), text);
}

#[test]
fn missing_final_newline_is_accepted() {
    assert_eq!(parse_azee(":a").unwrap(), Node::atom("a"));
    assert_eq!(parse_azee("^K").unwrap(), Node::constant("K"));
}

#[test]
fn error_positions() {
    let err = parse_azee(":pair\n  'left\n   :a\n").unwrap_err();
    assert_eq!(err.line, 3);
    assert_eq!(err.kind, ParseErrorKind::OddIndent);
    let err = parse_azee(":pair\n  'left\n  :a \n").unwrap_err();
    assert_eq!((err.line, err.kind), (3, ParseErrorKind::TrailingWhitespace));
    let err = parse_azee(":a\n\n").unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::BlankLine);
    assert_eq!(parse_azee("").unwrap_err().kind, ParseErrorKind::EmptyInput);
}

#[test]
fn placeholders_only_in_templates() {
    assert!(matches!(parse_azee(":wrap\n  'sig\n  [x]\n").unwrap_err().kind, ParseErrorKind::BadPlaceholder(_)));
    let t = parse_template(":many\n  'items\n  list\n    [items...]\n").unwrap();
    assert_eq!(print_node(&t), ":many\n  'items\n  list\n    [items...]\n");
}
