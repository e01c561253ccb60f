use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::node::{is_valid_name, Application, HoleSyntax, Node};
use super::registry::{ParamKind, RuleRegistry};

/// One problem found in a tree, located by its argument path from the root
/// (`info/sig`, `items[1]/locsig`; empty for the root itself).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: String,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ViolationKind {
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("invalid name {0:?}")]
    InvalidName(String),
    #[error("missing argument {arg} for rule `{rule}`")]
    MissingArgument { rule: String, arg: String },
    #[error("extra argument {arg} for rule `{rule}`")]
    ExtraArgument { rule: String, arg: String },
    #[error("duplicate argument {arg} for rule `{rule}`")]
    DuplicateArgument { rule: String, arg: String },
    #[error("argument {arg} of rule `{rule}` is out of declaration order")]
    MisorderedArgument { rule: String, arg: String },
    #[error("argument {arg} of rule `{rule}` expects a list")]
    ExpectedList { rule: String, arg: String },
    #[error("list where a single expression is expected")]
    UnexpectedList,
    #[error("empty list")]
    EmptyList,
    #[error("list splice placeholder `{0}` outside of a list")]
    MisplacedSplice(String),
    #[error("more than one list splice placeholder in one list")]
    MultipleSplices,
}

impl ViolationKind {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            ViolationKind::UnknownRule(_) => "unknown-rule",
            ViolationKind::UnknownConstant(_) => "unknown-constant",
            ViolationKind::InvalidName(_) => "invalid-name",
            ViolationKind::MissingArgument { .. } => "missing-argument",
            ViolationKind::ExtraArgument { .. } => "extra-argument",
            ViolationKind::DuplicateArgument { .. } => "duplicate-argument",
            ViolationKind::MisorderedArgument { .. } => "misordered-argument",
            ViolationKind::ExpectedList { .. } => "expected-list",
            ViolationKind::UnexpectedList => "unexpected-list",
            ViolationKind::EmptyList => "empty-list",
            ViolationKind::MisplacedSplice(_) => "misplaced-splice",
            ViolationKind::MultipleSplices => "multiple-splices",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "{}", self.kind)
        } else {
            write!(f, "{}: {}", self.path, self.kind)
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Checks an expression against the production set. The report is empty iff
/// the expression is built only from registered rules and constants with
/// every argument present, in declaration order and of the right kind.
pub fn validate_expr<H: HoleSyntax>(expr: &Node<H>, reg: &RuleRegistry) -> ValidationReport {
    let mut v = Validator {
        reg,
        path: Vec::new(),
        out: Vec::new(),
    };
    v.value(expr);
    ValidationReport { violations: v.out }
}

struct Validator<'r> {
    reg: &'r RuleRegistry,
    path: Vec<String>,
    out: Vec<Violation>,
}

impl Validator<'_> {
    fn report(&mut self, kind: ViolationKind) {
        self.out.push(Violation {
            path: self.path.join("/"),
            kind,
        });
    }

    /// Node in single-expression position.
    fn value<H: HoleSyntax>(&mut self, node: &Node<H>) {
        match node {
            Node::Apply(app) => self.application(app),
            Node::Constant(name) => {
                if !is_valid_name(name) {
                    self.report(ViolationKind::InvalidName(name.clone()));
                } else if !self.reg.has_constant(name) {
                    self.report(ViolationKind::UnknownConstant(name.clone()));
                }
            }
            Node::List(items) => {
                self.report(ViolationKind::UnexpectedList);
                self.items(items);
            }
            Node::Hole(h) => {
                if h.is_splice() {
                    let mut text = String::new();
                    h.write_hole(&mut text);
                    self.report(ViolationKind::MisplacedSplice(text));
                }
            }
        }
    }

    fn items<H: HoleSyntax>(&mut self, items: &[Node<H>]) {
        if items.is_empty() {
            self.report(ViolationKind::EmptyList);
        }
        let splices = items.iter().filter(|i| matches!(i, Node::Hole(h) if h.is_splice())).count();
        if splices > 1 {
            self.report(ViolationKind::MultipleSplices);
        }
        let base = self.path.pop();
        for (i, item) in items.iter().enumerate() {
            self.path.push(match &base {
                Some(b) => format!("{b}[{i}]"),
                None => format!("[{i}]"),
            });
            if !matches!(item, Node::Hole(_)) {
                self.value(item);
            }
            self.path.pop();
        }
        if let Some(b) = base {
            self.path.push(b);
        }
    }

    fn application<H: HoleSyntax>(&mut self, app: &Application<H>) {
        if !is_valid_name(&app.rule) {
            self.report(ViolationKind::InvalidName(app.rule.clone()));
        }
        let Some(rule) = self.reg.get(&app.rule) else {
            self.report(ViolationKind::UnknownRule(app.rule.clone()));
            for arg in &app.args {
                self.path.push(arg.name.clone());
                self.value(&arg.value);
                self.path.pop();
            }
            return;
        };

        let mut last_index = None;
        for (i, arg) in app.args.iter().enumerate() {
            let err_args = || (app.rule.clone(), arg.name.clone());
            if !is_valid_name(&arg.name) {
                self.report(ViolationKind::InvalidName(arg.name.clone()));
            }
            if app.args[..i].iter().any(|a| a.name == arg.name) {
                let (rule, arg) = err_args();
                self.report(ViolationKind::DuplicateArgument { rule, arg });
                continue;
            }
            self.path.push(arg.name.clone());
            match rule.param(&arg.name) {
                None => {
                    let (rule, arg_name) = err_args();
                    self.report(ViolationKind::ExtraArgument { rule, arg: arg_name });
                    self.value(&arg.value);
                }
                Some((index, param)) => {
                    if last_index.is_some_and(|last| index < last) {
                        let (rule, arg_name) = err_args();
                        self.report(ViolationKind::MisorderedArgument { rule, arg: arg_name });
                    }
                    last_index = Some(last_index.map_or(index, |l: usize| l.max(index)));
                    match (param.kind, &arg.value) {
                        (ParamKind::List, Node::List(items)) => self.items(items),
                        (ParamKind::List, other) => {
                            let (rule, arg_name) = err_args();
                            self.report(ViolationKind::ExpectedList { rule, arg: arg_name });
                            self.value(other);
                        }
                        (ParamKind::Expr, value) => self.value(value),
                    }
                }
            }
            self.path.pop();
        }
        for param in &rule.params {
            if !app.args.iter().any(|a| a.name == param.name) {
                self.report(ViolationKind::MissingArgument {
                    rule: app.rule.clone(),
                    arg: param.name.clone(),
                });
            }
        }
    }
}
