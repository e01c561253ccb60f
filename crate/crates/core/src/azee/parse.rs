use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::node::{is_valid_name, Application, Arg, Expr, HoleSyntax, Node, Template};

/// Syntax error with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    EmptyInput,
    #[error("blank line")]
    BlankLine,
    #[error("tab character in input")]
    Tab,
    #[error("carriage return in input")]
    CarriageReturn,
    #[error("trailing whitespace")]
    TrailingWhitespace,
    #[error("indentation must be a multiple of 2 spaces")]
    OddIndent,
    #[error("expected indentation of {expected} spaces, found {found}")]
    InconsistentIndent { expected: usize, found: usize },
    #[error("unrecognised line {0:?}")]
    BadSigil(String),
    #[error("invalid name {0:?}")]
    InvalidName(String),
    #[error("argument label '{0} without value")]
    LabelWithoutValue(String),
    #[error("duplicate argument '{0}")]
    DuplicateArgument(String),
    #[error("expected an argument label")]
    ExpectedLabel,
    #[error("argument label outside of an application")]
    UnexpectedLabel,
    #[error("empty list block")]
    EmptyList,
    #[error("placeholder not allowed here: {0:?}")]
    BadPlaceholder(String),
    #[error("unexpected content after the expression")]
    TrailingContent,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.kind)
    }
}

impl core::error::Error for ParseError {}

/// Parses the indented AZee notation into an expression.
///
/// Placeholder lines (`[id]`) are rejected; use [`parse_template`] for those.
pub fn parse_azee(text: &str) -> Result<Expr, ParseError> {
    parse_node(text)
}

/// Parses a layout template: AZee notation plus `[id]` and `[id...]` lines.
pub fn parse_template(text: &str) -> Result<Template, ParseError> {
    parse_node(text)
}

pub fn parse_node<H: HoleSyntax>(text: &str) -> Result<Node<H>, ParseError> {
    let lines = split_lines(text)?;
    let mut parser = Parser { lines: &lines, pos: 0 };
    let node = parser.node(0)?;
    if let Some(line) = parser.peek() {
        return Err(line.error(line.indent + 1, ParseErrorKind::TrailingContent));
    }
    Ok(node)
}

struct Line<'a> {
    number: usize,
    indent: usize,
    content: &'a str,
}

impl Line<'_> {
    fn error(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.number,
            column,
            kind,
        }
    }
}

fn split_lines(text: &str) -> Result<Vec<Line<'_>>, ParseError> {
    if text.is_empty() {
        return Err(ParseError {
            line: 1,
            column: 1,
            kind: ParseErrorKind::EmptyInput,
        });
    }
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = Vec::new();
    for (i, raw) in body.split('\n').enumerate() {
        let number = i + 1;
        let err = |column, kind| ParseError {
            line: number,
            column,
            kind,
        };
        if let Some(col) = raw.find('\t') {
            return Err(err(raw[..col].chars().count() + 1, ParseErrorKind::Tab));
        }
        if let Some(col) = raw.find('\r') {
            return Err(err(raw[..col].chars().count() + 1, ParseErrorKind::CarriageReturn));
        }
        if raw.trim().is_empty() {
            return Err(err(1, ParseErrorKind::BlankLine));
        }
        if raw.ends_with(char::is_whitespace) {
            return Err(err(raw.trim_end().chars().count() + 1, ParseErrorKind::TrailingWhitespace));
        }
        let content = raw.trim_start_matches(' ');
        let indent = raw.len() - content.len();
        if indent % 2 != 0 {
            return Err(err(1, ParseErrorKind::OddIndent));
        }
        lines.push(Line {
            number,
            indent,
            content,
        });
    }
    Ok(lines)
}

struct Parser<'l, 'a> {
    lines: &'l [Line<'a>],
    pos: usize,
}

impl<'l, 'a> Parser<'l, 'a> {
    fn peek(&self) -> Option<&'l Line<'a>> {
        self.lines.get(self.pos)
    }

    /// Next line if it sits exactly at `indent`; deeper lines are an error.
    fn child_at(&self, indent: usize) -> Result<Option<&'l Line<'a>>, ParseError> {
        match self.peek() {
            Some(line) if line.indent == indent => Ok(Some(line)),
            Some(line) if line.indent > indent => Err(line.error(
                1,
                ParseErrorKind::InconsistentIndent {
                    expected: indent,
                    found: line.indent,
                },
            )),
            _ => Ok(None),
        }
    }

    fn node<H: HoleSyntax>(&mut self, indent: usize) -> Result<Node<H>, ParseError> {
        let line = match self.peek() {
            Some(line) => line,
            None => unreachable!("callers check for a line first"),
        };
        if line.indent != indent {
            return Err(line.error(
                1,
                ParseErrorKind::InconsistentIndent {
                    expected: indent,
                    found: line.indent,
                },
            ));
        }
        self.pos += 1;
        let col = indent + 1;
        let content = line.content;

        let node = if let Some(rule) = content.strip_prefix(':') {
            let rule = name(line, col + 1, rule)?;
            Node::Apply(self.arguments(rule, indent + 2)?)
        } else if content == "list" {
            let mut items = Vec::new();
            while let Some(item) = self.child_at(indent + 2)? {
                if item.content.starts_with('\'') {
                    return Err(item.error(item.indent + 1, ParseErrorKind::UnexpectedLabel));
                }
                items.push(self.node(indent + 2)?);
            }
            if items.is_empty() {
                return Err(line.error(col, ParseErrorKind::EmptyList));
            }
            Node::List(items)
        } else if let Some(constant) = content.strip_prefix('^') {
            Node::Constant(name(line, col + 1, constant)?)
        } else if let Some(inner) = content.strip_prefix('[').and_then(|c| c.strip_suffix(']')) {
            match H::parse_hole(inner) {
                Some(hole) => Node::Hole(hole),
                None => return Err(line.error(col, ParseErrorKind::BadPlaceholder(content.into()))),
            }
        } else if content.starts_with('\'') {
            return Err(line.error(col, ParseErrorKind::UnexpectedLabel));
        } else {
            return Err(line.error(col, ParseErrorKind::BadSigil(content.into())));
        };

        if !matches!(node, Node::Apply(_) | Node::List(_)) {
            if let Some(next) = self.child_at(indent + 2)? {
                return Err(next.error(
                    1,
                    ParseErrorKind::InconsistentIndent {
                        expected: indent,
                        found: next.indent,
                    },
                ));
            }
        }
        Ok(node)
    }

    fn arguments<H: HoleSyntax>(&mut self, rule: String, indent: usize) -> Result<Application<H>, ParseError> {
        let mut args = Vec::new();
        let mut seen = BTreeSet::new();
        while let Some(label) = self.child_at(indent)? {
            let Some(arg) = label.content.strip_prefix('\'') else {
                return Err(label.error(indent + 1, ParseErrorKind::ExpectedLabel));
            };
            let arg = name(label, indent + 2, arg)?;
            if !seen.insert(arg.clone()) {
                return Err(label.error(indent + 1, ParseErrorKind::DuplicateArgument(arg)));
            }
            self.pos += 1;
            match self.child_at(indent)? {
                Some(value) if !value.content.starts_with('\'') => {}
                _ => return Err(label.error(indent + 1, ParseErrorKind::LabelWithoutValue(arg))),
            }
            let value = self.node(indent)?;
            args.push(Arg { name: arg, value });
        }
        Ok(Application { rule, args })
    }
}

fn name(line: &Line<'_>, column: usize, text: &str) -> Result<String, ParseError> {
    if is_valid_name(text) {
        Ok(text.into())
    } else {
        Err(line.error(column, ParseErrorKind::InvalidName(text.into())))
    }
}
