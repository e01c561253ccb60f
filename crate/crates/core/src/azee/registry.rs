use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::node::is_valid_name;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamKind {
    /// A single expression.
    Expr,
    /// A non-empty `list` of expressions.
    List,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Param {
    pub name: String,
    pub kind: ParamKind,
}

impl Param {
    pub fn expr(name: impl Into<String>) -> Self {
        Param {
            name: name.into(),
            kind: ParamKind::Expr,
        }
    }

    pub fn list(name: impl Into<String>) -> Self {
        Param {
            name: name.into(),
            kind: ParamKind::List,
        }
    }
}

/// A named production rule and its ordered parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductionRule {
    pub name: String,
    pub params: Vec<Param>,
    /// Gloss of the meaning.
    pub doc: String,
}

impl ProductionRule {
    pub fn new(name: impl Into<String>, params: impl IntoIterator<Item = Param>) -> Self {
        ProductionRule {
            name: name.into(),
            params: params.into_iter().collect(),
            doc: String::new(),
        }
    }

    pub fn with_doc(mut self, doc: impl Into<String>) -> Self {
        self.doc = doc.into();
        self
    }

    pub fn arity(&self) -> usize {
        self.params.len()
    }

    pub fn param(&self, name: &str) -> Option<(usize, &Param)> {
        self.params.iter().enumerate().find(|(_, p)| p.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegistryError {
    #[error("duplicate rule `{0}`")]
    DuplicateRule(String),
    #[error("rule `{rule}` declares parameter `{param}` twice")]
    DuplicateParam { rule: String, param: String },
    #[error("duplicate constant `{0}`")]
    DuplicateConstant(String),
    #[error("invalid name {0:?}")]
    InvalidName(String),
}

/// The production set: rules by name plus the declared constants.
///
/// Declaration order is kept; iteration follows it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleRegistry {
    rules: BTreeMap<String, ProductionRule>,
    order: Vec<String>,
    constants: Vec<String>,
}

impl RuleRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, rule: ProductionRule) -> Result<(), RegistryError> {
        if !is_valid_name(&rule.name) {
            return Err(RegistryError::InvalidName(rule.name));
        }
        if self.rules.contains_key(&rule.name) {
            return Err(RegistryError::DuplicateRule(rule.name));
        }
        for (i, p) in rule.params.iter().enumerate() {
            if !is_valid_name(&p.name) {
                return Err(RegistryError::InvalidName(p.name.clone()));
            }
            if rule.params[..i].iter().any(|q| q.name == p.name) {
                return Err(RegistryError::DuplicateParam {
                    rule: rule.name.clone(),
                    param: p.name.clone(),
                });
            }
        }
        self.order.push(rule.name.clone());
        self.rules.insert(rule.name.clone(), rule);
        Ok(())
    }

    pub fn add_constant(&mut self, name: impl Into<String>) -> Result<(), RegistryError> {
        let name = name.into();
        if !is_valid_name(&name) {
            return Err(RegistryError::InvalidName(name));
        }
        if self.constants.contains(&name) {
            return Err(RegistryError::DuplicateConstant(name));
        }
        self.constants.push(name);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&ProductionRule> {
        self.rules.get(name)
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.get(name).map(ProductionRule::arity)
    }

    /// Rules in declaration order.
    pub fn rules(&self) -> impl Iterator<Item = &ProductionRule> + '_ {
        self.order.iter().map(move |n| &self.rules[n])
    }

    pub fn constants(&self) -> &[String] {
        &self.constants
    }

    pub fn has_constant(&self, name: &str) -> bool {
        self.constants.iter().any(|c| c == name)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// First zero-arity rule in declaration order. Used as the universal
    /// filler by the coverage probe.
    pub fn atomic_filler(&self) -> Option<&ProductionRule> {
        self.rules().find(|r| r.params.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_lookup() {
        let mut reg = RuleRegistry::new();
        reg.insert(ProductionRule::new("context", [Param::expr("ctxt"), Param::expr("proc")])).unwrap();
        reg.insert(ProductionRule::new("gentil", [])).unwrap();
        assert_eq!(reg.arity("context"), Some(2));
        assert_eq!(reg.arity("gentil"), Some(0));
        assert_eq!(reg.arity("nope"), None);
        assert_eq!(reg.atomic_filler().unwrap().name, "gentil");
        let names: Vec<_> = reg.rules().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["context", "gentil"]);
    }

    #[test]
    fn rejects_duplicates() {
        let mut reg = RuleRegistry::new();
        reg.insert(ProductionRule::new("gentil", [])).unwrap();
        assert_eq!(
            reg.insert(ProductionRule::new("gentil", [])),
            Err(RegistryError::DuplicateRule("gentil".into()))
        );
        assert!(matches!(
            reg.insert(ProductionRule::new("x", [Param::expr("a"), Param::list("a")])),
            Err(RegistryError::DuplicateParam { .. })
        ));
        reg.add_constant("Lssp").unwrap();
        assert!(reg.add_constant("Lssp").is_err());
        assert!(reg.add_constant("bad name").is_err());
    }
}
