//! Process-global variable registry.
//!
//! Variables are interned by name into a [`VarId`]; the registry order
//! (first-registration order) is the variable order used by the graded
//! lexicographic term order. Registering the same name twice returns the same
//! id, so independent modules agree on variables by name alone.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, RwLock};

/// Opaque handle of a registered variable. Ordering is registry order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(pub(crate) u32);

struct Registry {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

static REGISTRY: LazyLock<RwLock<Registry>> = LazyLock::new(|| {
    // The quantum parameter is registered first so that it is always the
    // leading variable of the order and always available for q -> 0.
    let mut r = Registry {
        names: Vec::new(),
        index: HashMap::new(),
    };
    r.names.push("q".to_string());
    r.index.insert("q".to_string(), 0);
    RwLock::new(r)
});

impl VarId {
    /// Intern `name`, returning its id.
    pub fn new(name: &str) -> VarId {
        if let Some(&i) = REGISTRY.read().expect("registry poisoned").index.get(name) {
            return VarId(i);
        }
        let mut reg = REGISTRY.write().expect("registry poisoned");
        if let Some(&i) = reg.index.get(name) {
            return VarId(i);
        }
        let i = reg.names.len() as u32;
        reg.names.push(name.to_string());
        reg.index.insert(name.to_string(), i);
        VarId(i)
    }

    /// Look up a name without registering it.
    pub fn lookup(name: &str) -> Option<VarId> {
        REGISTRY
            .read()
            .expect("registry poisoned")
            .index
            .get(name)
            .map(|&i| VarId(i))
    }

    /// The distinguished quantum parameter `q`.
    pub fn q() -> VarId {
        VarId(0)
    }

    /// Registered name of this variable.
    pub fn name(self) -> String {
        REGISTRY.read().expect("registry poisoned").names[self.0 as usize].clone()
    }

    /// Grid variable `z_k^{(j)}` (spectral parameter of column `k` in layer `j`),
    /// rendered as `z{k}^({j})`.
    pub fn grid(base: &str, k: usize, j: usize) -> VarId {
        VarId::new(&format!("{base}{k}^({j})"))
    }

    /// Indexed variable such as `z3` or `t1_2`.
    pub fn indexed(base: &str, idx: usize) -> VarId {
        VarId::new(&format!("{base}{idx}"))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Convenience: intern a list of names.
pub fn vars(names: &[&str]) -> Vec<VarId> {
    names.iter().map(|n| VarId::new(n)).collect()
}

/// Convenience: `base1, ..., basen`.
pub fn indexed_vars(base: &str, n: usize) -> Vec<VarId> {
    (1..=n).map(|i| VarId::indexed(base, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_idempotent() {
        let a = VarId::new("reg_test_a");
        let b = VarId::new("reg_test_a");
        assert_eq!(a, b);
        assert_eq!(a.name(), "reg_test_a");
        assert_eq!(VarId::lookup("reg_test_a"), Some(a));
    }

    #[test]
    fn q_is_distinguished() {
        assert_eq!(VarId::new("q"), VarId::q());
        assert!(VarId::q() < VarId::new("reg_test_later"));
    }
}
