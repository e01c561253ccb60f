use alloc::string::String;

use super::node::{Expr, HoleSyntax, Node};

const INDENT: usize = 2;

/// Prints an expression in the indented AZee notation.
///
/// Every line is LF-terminated and carries no trailing space; arguments are
/// printed in the order they are stored.
pub fn print_azee(expr: &Expr) -> String {
    print_node(expr)
}

/// Same as [`print_azee`] for any tree, templates included.
pub fn print_node<H: HoleSyntax>(node: &Node<H>) -> String {
    let mut out = String::new();
    write_node(node, 0, &mut out);
    out
}

fn write_node<H: HoleSyntax>(node: &Node<H>, indent: usize, out: &mut String) {
    pad(out, indent);
    match node {
        Node::Apply(app) => {
            out.push(':');
            out.push_str(&app.rule);
            out.push('\n');
            for arg in &app.args {
                pad(out, indent + INDENT);
                out.push('\'');
                out.push_str(&arg.name);
                out.push('\n');
                write_node(&arg.value, indent + INDENT, out);
            }
        }
        Node::List(items) => {
            out.push_str("list\n");
            for item in items {
                write_node(item, indent + INDENT, out);
            }
        }
        Node::Constant(name) => {
            out.push('^');
            out.push_str(name);
            out.push('\n');
        }
        Node::Hole(hole) => {
            hole.write_hole(out);
            out.push('\n');
        }
    }
}

fn pad(out: &mut String, n: usize) {
    out.extend(core::iter::repeat_n(' ', n));
}
