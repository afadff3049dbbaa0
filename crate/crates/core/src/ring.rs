use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{BaseOrder, MonomialOrder};

/// A standard graded polynomial ring `k[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new<S: Into<String>>(
        field: Field,
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Arc<PolyRing>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &vars {
            if v.is_empty() {
                return Err(Error::Structural("empty variable name".into()));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::Structural(format!("duplicate variable name {v}")));
            }
        }
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    /// Shorthand for `QQ[vars]` with grevlex.
    pub fn rationals(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(Field::Rationals, vars.iter().copied(), MonomialOrder::Grevlex)
            .expect("valid variable names")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            field: self.field,
            vars: self.vars.clone(),
            order,
        })
    }

    /// Ring with one fresh variable placed first and eliminated by a block order.
    pub(crate) fn with_elimination_var(&self) -> Arc<PolyRing> {
        let mut name = String::from("_u");
        let mut k = 0;
        while self.vars.contains(&name) {
            k += 1;
            name = format!("_u{k}");
        }
        let mut vars = Vec::with_capacity(self.vars.len() + 1);
        vars.push(name);
        vars.extend(self.vars.iter().cloned());
        let inner = match self.order {
            MonomialOrder::Lex => BaseOrder::Lex,
            _ => BaseOrder::Grevlex,
        };
        Arc::new(PolyRing {
            field: self.field,
            vars,
            order: MonomialOrder::Block { eliminate: 1, inner },
        })
    }

    /// True when the two rings have the same field and variables (orders may differ).
    pub fn same_space(&self, other: &PolyRing) -> bool {
        self.field == other.field && self.vars == other.vars
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}

pub(crate) fn check_same(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}
