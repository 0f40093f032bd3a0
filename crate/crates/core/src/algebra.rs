//! Finite implication algebras `(X, →, 0, 1)` and their derived operations.
//!
//! Everything here is a table lookup or a short composition of lookups:
//!
//! * `x* = x → 0`
//! * `x ⊔ y = (x → y) → y`
//! * `x ⊓ y = ((x* → y*) → y*)*`
//! * `x ⊙ y = (x → y*)*`
//! * `x ≤ y` iff `x → y = 1`, and `x ≤_Q y` iff `x ⊓ y = x`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// Largest carrier supported; subsets are stored in a `u64`.
pub const MAX_ORDER: usize = 64;

/// Index of an element inside one particular [`FiniteAlgebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ElementId(u8);

impl ElementId {
    /// Panics if `index` does not fit the supported carrier size.
    pub fn new(index: usize) -> Self {
        assert!(index < MAX_ORDER, "element index {index} out of range");
        ElementId(index as u8)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// An algebra of type (2, 0, 0) given by its full implication table.
///
/// Immutable after construction; all queries are pure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    names: Vec<String>,
    table: Vec<ElementId>,
    zero: ElementId,
    one: ElementId,
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || c.is_control() || c == '#' || c == ',')
}

impl FiniteAlgebra {
    /// Builds an algebra from element names and a row-major table of indices,
    /// `table[i][j] = i → j`.
    pub fn new(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !valid_name(name) {
                return Err(Error::InvalidName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        if table.len() != n {
            return Err(Error::TableShape { expected: n * n, got: table.iter().map(Vec::len).sum() });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(Error::TableShape { expected: n * n, got: table.iter().map(Vec::len).sum() });
            }
            for &v in row {
                if v >= n {
                    return Err(Error::BadElement { index: v, n });
                }
                flat.push(ElementId::new(v));
            }
        }
        for c in [zero, one] {
            if c >= n {
                return Err(Error::BadElement { index: c, n });
            }
        }
        if zero == one && n > 1 {
            return Err(Error::ConstantsCoincide(n));
        }
        Ok(FiniteAlgebra { names, table: flat, zero: ElementId::new(zero), one: ElementId::new(one) })
    }

    /// Builds an algebra whose arrow is computed by `f` on indices.
    pub fn from_fn(
        names: Vec<String>,
        zero: usize,
        one: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = names.len();
        let table = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::new(names, table, zero, one)
    }

    /// Default element names for generated algebras: `0`, `a`, `b`, ..., `1`
    /// with zero first and one last.
    pub fn default_names(n: usize) -> Vec<String> {
        match n {
            0 => Vec::new(),
            1 => vec!["0".to_string()],
            _ => {
                let mut names = vec!["0".to_string()];
                for k in 0..n - 2 {
                    names.push(middle_name(k));
                }
                names.push("1".to_string());
                names
            }
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = ElementId> + ExactSizeIterator + Clone {
        (0..self.order()).map(ElementId::new)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x.index()]
    }

    pub fn element(&self, name: &str) -> Option<ElementId> {
        self.names.iter().position(|n| n == name).map(ElementId::new)
    }

    #[inline]
    pub fn zero(&self) -> ElementId {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> ElementId {
        self.one
    }

    /// Row-major arrow table.
    pub fn table(&self) -> &[ElementId] {
        &self.table
    }

    #[inline]
    pub fn arrow(&self, x: ElementId, y: ElementId) -> ElementId {
        self.table[x.index() * self.order() + y.index()]
    }

    #[inline]
    pub fn star(&self, x: ElementId) -> ElementId {
        self.arrow(x, self.zero)
    }

    #[inline]
    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        self.arrow(self.arrow(x, y), y)
    }

    #[inline]
    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        let ys = self.star(y);
        self.star(self.arrow(self.arrow(self.star(x), ys), ys))
    }

    #[inline]
    pub fn odot(&self, x: ElementId, y: ElementId) -> ElementId {
        self.star(self.arrow(x, self.star(y)))
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.arrow(x, y) == self.one
    }

    #[inline]
    pub fn leq_q(&self, x: ElementId, y: ElementId) -> bool {
        self.meet(x, y) == x
    }

    /// The distinct ⊙-powers `x¹, x², …` up to (not including) the first repeat.
    ///
    /// The sequence `xⁿ⁺¹ = xⁿ ⊙ x` is determined by its previous term, so
    /// the returned prefix plus its cycle covers every power of `x`.
    pub fn powers(&self, x: ElementId) -> Vec<ElementId> {
        let mut seen = Subset::empty(self.order());
        let mut out = Vec::new();
        let mut p = x;
        while !seen.contains(p) {
            seen.insert(p);
            out.push(p);
            p = self.odot(p, x);
        }
        out
    }

    /// Set of all powers `{xⁿ : n ≥ 1}`.
    pub fn power_set(&self, x: ElementId) -> Subset {
        let mut s = Subset::empty(self.order());
        for p in self.powers(x) {
            s.insert(p);
        }
        s
    }

    /// Applies a relabeling: element `i` becomes element `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::OrderMismatch(n, perm.len()));
        }
        let mut inv = vec![usize::MAX; n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || inv[p] != usize::MAX {
                return Err(Error::BadPartition("relabeling is not a permutation".into()));
            }
            inv[p] = i;
        }
        let names = inv.iter().map(|&i| self.names[i].clone()).collect();
        Self::from_fn(names, perm[self.zero.index()], perm[self.one.index()], |i, j| {
            perm[self.arrow(ElementId::new(inv[i]), ElementId::new(inv[j])).index()]
        })
    }

    /// Same table under new names.
    pub fn with_names(&self, names: Vec<String>) -> Result<Self> {
        let n = self.order();
        let table = (0..n)
            .map(|i| (0..n).map(|j| self.table[i * n + j].index()).collect())
            .collect();
        Self::new(names, table, self.zero.index(), self.one.index())
    }

    /// Coordinatewise product; element `(a, b)` is named `a.b`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let (n, m) = (self.order(), other.order());
        let names = (0..n * m)
            .map(|k| format!("{}.{}", self.names[k / m], other.names[k % m]))
            .collect();
        let zero = self.zero.index() * m + other.zero.index();
        let one = self.one.index() * m + other.one.index();
        Self::from_fn(names, zero, one, |i, j| {
            let a = self.arrow(ElementId::new(i / m), ElementId::new(j / m)).index();
            let b = other.arrow(ElementId::new(i % m), ElementId::new(j % m)).index();
            a * m + b
        })
    }

    /// Renders a subset as `{a,b,1}` in element order.
    pub fn format_subset(&self, s: &Subset) -> String {
        let parts: Vec<&str> = s.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Parses a comma-separated list of element names into a subset.
    pub fn subset_from_names(&self, list: &str) -> Result<Subset> {
        let mut s = Subset::empty(self.order());
        for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let x = self
                .element(tok)
                .ok_or_else(|| Error::InvalidName(tok.to_string()))?;
            s.insert(x);
        }
        Ok(s)
    }
}

fn middle_name(k: usize) -> String {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    if k < LETTERS.len() {
        (LETTERS[k] as char).to_string()
    } else {
        format!("e{k}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn id(a: &FiniteAlgebra, name: &str) -> ElementId {
        a.element(name).unwrap()
    }

    #[test]
    fn star_on_fixtures() {
        let om = catalog::orthomodular6();
        assert_eq!(om.name(om.star(id(&om, "b"))), "d");
        let wl = catalog::weakly_linear5();
        assert_eq!(wl.name(wl.star(id(&wl, "a"))), "b");
        for a in catalog::all() {
            assert_eq!(a.star(a.one()), a.zero());
            assert_eq!(a.star(a.zero()), a.one());
        }
    }

    #[test]
    fn join_values() {
        let om = catalog::orthomodular6();
        assert_eq!(om.join(id(&om, "a"), id(&om, "c")), om.one());
        let wl = catalog::weakly_linear5();
        assert_eq!(wl.join(id(&wl, "a"), id(&wl, "b")), id(&wl, "a"));
        for a in catalog::all() {
            for x in a.elements() {
                assert_eq!(a.join(x, a.one()), a.one());
                assert_eq!(a.join(a.one(), x), a.one());
            }
        }
    }

    #[test]
    fn meet_values() {
        let om = catalog::orthomodular6();
        assert_eq!(om.meet(id(&om, "a"), id(&om, "c")), om.zero());
        let wl = catalog::weakly_linear5();
        let (a, c) = (id(&wl, "a"), id(&wl, "c"));
        assert_eq!(wl.meet(a, c), c);
        assert_eq!(wl.meet(c, a), a);
        for alg in catalog::all() {
            for x in alg.elements() {
                assert_eq!(alg.meet(alg.zero(), x), alg.zero());
                assert_eq!(alg.meet(x, alg.zero()), alg.zero());
                assert_eq!(alg.meet(alg.one(), x), x);
            }
        }
    }

    #[test]
    fn odot_values() {
        let om = catalog::orthomodular6();
        let b = id(&om, "b");
        assert_eq!(om.odot(b, b), b);
        assert_eq!(om.odot(id(&om, "a"), id(&om, "c")), om.zero());
        for alg in catalog::all() {
            for x in alg.elements() {
                assert_eq!(alg.odot(x, alg.one()), x);
                assert_eq!(alg.odot(x, alg.zero()), alg.zero());
            }
        }
    }

    #[test]
    fn orders() {
        let om = catalog::orthomodular6();
        let (a, b) = (id(&om, "a"), id(&om, "b"));
        assert!(om.leq(a, b) && om.leq(b, a) && a != b);
        assert!(!om.leq_q(b, a));
        let wl = catalog::weakly_linear5();
        let (a, c) = (id(&wl, "a"), id(&wl, "c"));
        assert!(wl.leq(c, a) && wl.leq(a, c));
        assert!(!wl.leq_q(a, c) && !wl.leq_q(c, a));
        for alg in catalog::all() {
            for x in alg.elements() {
                assert!(alg.leq(x, x));
                assert!(alg.leq_q(alg.zero(), x));
                assert!(alg.leq_q(x, alg.one()));
            }
        }
    }

    #[test]
    fn powers_cover_cycle() {
        let om = catalog::orthomodular6();
        let b = id(&om, "b");
        assert_eq!(om.powers(b), vec![b]);
        let l = catalog::lukasiewicz(3);
        let m = id(&l, "a");
        assert_eq!(l.powers(m), vec![m, l.zero()]);
    }

    #[test]
    fn construction_errors() {
        let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(FiniteAlgebra::new(vec![], vec![], 0, 0), Err(Error::EmptyCarrier));
        assert!(matches!(
            FiniteAlgebra::new(names(&["0", "0"]), vec![vec![1, 1], vec![0, 1]], 0, 1),
            Err(Error::DuplicateName(_))
        ));
        assert!(matches!(
            FiniteAlgebra::new(names(&["0", "1"]), vec![vec![1, 1], vec![0]], 0, 1),
            Err(Error::TableShape { .. })
        ));
        assert!(matches!(
            FiniteAlgebra::new(names(&["0", "1"]), vec![vec![1, 2], vec![0, 1]], 0, 1),
            Err(Error::BadElement { .. })
        ));
        assert_eq!(
            FiniteAlgebra::new(names(&["0", "1"]), vec![vec![1, 1], vec![0, 1]], 1, 1),
            Err(Error::ConstantsCoincide(2))
        );
        assert!(FiniteAlgebra::new(names(&["u"]), vec![vec![0]], 0, 0).is_ok());
    }

    #[test]
    fn relabel_transports_table() {
        let om = catalog::orthomodular6();
        // a<->b, c<->d
        let perm = [0, 2, 1, 4, 3, 5];
        let r = om.relabel(&perm).unwrap();
        for x in om.elements() {
            for y in om.elements() {
                let (px, py) = (ElementId::new(perm[x.index()]), ElementId::new(perm[y.index()]));
                assert_eq!(r.arrow(px, py).index(), perm[om.arrow(x, y).index()]);
            }
        }
        assert_eq!(r.name(ElementId::new(2)), "a");
    }
}
