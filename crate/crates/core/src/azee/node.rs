use alloc::string::String;
use alloc::vec::Vec;
use core::convert::Infallible;
use core::fmt;

/// An AZee tree. `H` is the type of placeholder leaves: [`Infallible`] for
/// plain expressions, [`Hole`] for layout templates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node<H> {
    /// Application of a production rule to named arguments.
    Apply(Application<H>),
    /// Ordered list of items, the value of a `LIST` parameter.
    List(Vec<Node<H>>),
    /// Named constant such as `Lssp`.
    Constant(String),
    /// Placeholder leaf.
    Hole(H),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Application<H> {
    pub rule: String,
    pub args: Vec<Arg<H>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arg<H> {
    pub name: String,
    pub value: Node<H>,
}

/// A complete AZee expression.
pub type Expr = Node<Infallible>;

/// An AZee expression with fill-zone placeholders.
pub type Template = Node<Hole>;

/// Template placeholder referring to a slot of the owning layout.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hole {
    /// `[id]`: replaced by one expression.
    Slot(String),
    /// `[id...]`: replaced by a sequence of list items.
    Splice(String),
}

impl Hole {
    pub fn slot_id(&self) -> &str {
        match self {
            Hole::Slot(id) | Hole::Splice(id) => id,
        }
    }

    pub fn is_splice(&self) -> bool {
        matches!(self, Hole::Splice(_))
    }
}

/// Placeholder syntax understood by the parser and printer.
pub trait HoleSyntax: Sized {
    /// Parses the text between `[` and `]`. `None` means placeholders are not
    /// allowed or the text is malformed.
    fn parse_hole(inner: &str) -> Option<Self>;

    fn write_hole(&self, out: &mut String);

    fn is_splice(&self) -> bool;
}

impl HoleSyntax for Infallible {
    fn parse_hole(_: &str) -> Option<Self> {
        None
    }

    fn write_hole(&self, _: &mut String) {
        match *self {}
    }

    fn is_splice(&self) -> bool {
        match *self {}
    }
}

impl HoleSyntax for Hole {
    fn parse_hole(inner: &str) -> Option<Self> {
        match inner.strip_suffix("...") {
            Some(id) if is_valid_name(id) => Some(Hole::Splice(id.into())),
            Some(_) => None,
            None if is_valid_name(inner) => Some(Hole::Slot(inner.into())),
            None => None,
        }
    }

    fn write_hole(&self, out: &mut String) {
        out.push('[');
        match self {
            Hole::Slot(id) => out.push_str(id),
            Hole::Splice(id) => {
                out.push_str(id);
                out.push_str("...");
            }
        }
        out.push(']');
    }

    fn is_splice(&self) -> bool {
        Hole::is_splice(self)
    }
}

/// Names of rules, arguments, constants and slots: a Unicode letter followed
/// by letters, digits or `-`.
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() => chars.all(|c| c.is_alphanumeric() || c == '-'),
        _ => false,
    }
}

impl<H> Node<H> {
    /// Zero-argument application, e.g. `:gentil`.
    pub fn atom(rule: impl Into<String>) -> Self {
        Node::Apply(Application {
            rule: rule.into(),
            args: Vec::new(),
        })
    }

    pub fn apply<N, I>(rule: impl Into<String>, args: I) -> Self
    where
        N: Into<String>,
        I: IntoIterator<Item = (N, Node<H>)>,
    {
        Node::Apply(Application {
            rule: rule.into(),
            args: args
                .into_iter()
                .map(|(name, value)| Arg {
                    name: name.into(),
                    value,
                })
                .collect(),
        })
    }

    pub fn constant(name: impl Into<String>) -> Self {
        Node::Constant(name.into())
    }

    pub fn list(items: impl IntoIterator<Item = Node<H>>) -> Self {
        Node::List(items.into_iter().collect())
    }

    /// Head rule name when this is an application.
    pub fn rule(&self) -> Option<&str> {
        match self {
            Node::Apply(app) => Some(&app.rule),
            _ => None,
        }
    }

    /// Number of rule applications in the tree.
    pub fn application_count(&self) -> usize {
        match self {
            Node::Apply(app) => 1 + app.args.iter().map(|a| a.value.application_count()).sum::<usize>(),
            Node::List(items) => items.iter().map(Node::application_count).sum(),
            Node::Constant(_) | Node::Hole(_) => 0,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Node::Apply(app) => 1 + app.args.iter().map(|a| a.value.depth()).max().unwrap_or(0),
            Node::List(items) => 1 + items.iter().map(Node::depth).max().unwrap_or(0),
            Node::Constant(_) | Node::Hole(_) => 1,
        }
    }

    /// Visits every placeholder in document order.
    pub fn for_each_hole<'a>(&'a self, f: &mut impl FnMut(&'a H)) {
        match self {
            Node::Apply(app) => app.args.iter().for_each(|a| a.value.for_each_hole(f)),
            Node::List(items) => items.iter().for_each(|i| i.for_each_hole(f)),
            Node::Constant(_) => {}
            Node::Hole(h) => f(h),
        }
    }
}

impl Expr {
    /// Embeds a complete expression into the template type.
    pub fn to_template<H>(&self) -> Node<H> {
        match self {
            Node::Apply(app) => Node::Apply(Application {
                rule: app.rule.clone(),
                args: app
                    .args
                    .iter()
                    .map(|a| Arg {
                        name: a.name.clone(),
                        value: a.value.to_template(),
                    })
                    .collect(),
            }),
            Node::List(items) => Node::List(items.iter().map(Expr::to_template).collect()),
            Node::Constant(c) => Node::Constant(c.clone()),
            Node::Hole(never) => match *never {},
        }
    }
}

impl<H: HoleSyntax> fmt::Display for Node<H> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print::print_node(self))
    }
}
