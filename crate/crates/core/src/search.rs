//! Enumeration of finite QW algebras up to isomorphism.
//!
//! Tables are searched with zero at index `0` and one at index `n - 1`. The
//! star column is chosen first, one involution per conjugacy class of the
//! middle elements, and the remaining entries are filled in row-major order.
//! After every assignment [`propagate`] closes the table under unit
//! consequences of the axioms. Complete tables are re-verified with
//! [`axioms::verify_qw`] and collapsed by [`canonical_form`].

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{ElementId, FiniteAlgebra, MAX_ORDER};
use crate::axioms;
use crate::error::{Error, Result};
use crate::Gates;

const UNSET: u8 = u8::MAX;

/// An implication table with some entries unassigned.
#[derive(Clone, PartialEq, Eq)]
pub struct PartialTable {
    n: usize,
    cells: Vec<u8>,
    zero: u8,
    one: u8,
}

/// Returned by [`propagate`] when no completion can satisfy the axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Contradiction;

impl fmt::Debug for PartialTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| match self.cells[i * self.n + j] {
                    UNSET => "_".to_string(),
                    v => v.to_string(),
                })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl PartialTable {
    /// Empty table with zero at `0` and one at `n - 1`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        Ok(PartialTable { n, cells: vec![UNSET; n * n], zero: 0, one: (n - 1) as u8 })
    }

    /// Fully assigned table of an existing algebra.
    pub fn from_algebra(a: &FiniteAlgebra) -> Self {
        PartialTable {
            n: a.order(),
            cells: a.table().iter().map(|x| x.index() as u8).collect(),
            zero: a.zero().index() as u8,
            one: a.one().index() as u8,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> Option<usize> {
        match self.cells[x * self.n + y] {
            UNSET => None,
            v => Some(v as usize),
        }
    }

    /// Assigns `x → y = v`; fails if the entry already holds another value.
    pub fn set(&mut self, x: usize, y: usize, v: usize) -> Result<bool, Contradiction> {
        let c = &mut self.cells[x * self.n + y];
        match *c {
            UNSET => {
                *c = v as u8;
                Ok(true)
            }
            old if old as usize == v => Ok(false),
            _ => Err(Contradiction),
        }
    }

    pub fn assigned(&self) -> usize {
        self.cells.iter().filter(|&&c| c != UNSET).count()
    }

    pub fn is_complete(&self) -> bool {
        !self.cells.contains(&UNSET)
    }

    /// Next entry to branch on: the star column first, then row-major.
    fn next_unassigned(&self) -> Option<(usize, usize)> {
        let z = self.zero as usize;
        (0..self.n)
            .find(|&x| self.get(x, z).is_none())
            .map(|x| (x, z))
            .or_else(|| {
                self.cells.iter().position(|&c| c == UNSET).map(|k| (k / self.n, k % self.n))
            })
    }

    pub fn to_algebra(&self) -> Option<FiniteAlgebra> {
        if !self.is_complete() {
            return None;
        }
        let n = self.n;
        FiniteAlgebra::from_fn(FiniteAlgebra::default_names(n), self.zero as usize, self.one as usize, |i, j| {
            self.cells[i * n + j] as usize
        })
        .ok()
    }
}

struct Ops<'a>(&'a PartialTable);

impl Ops<'_> {
    fn ar(&self, x: usize, y: usize) -> Option<usize> {
        self.0.get(x, y)
    }
    fn star(&self, x: usize) -> Option<usize> {
        self.0.get(x, self.0.zero as usize)
    }
    fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let ys = self.star(y)?;
        let t = self.ar(self.star(x)?, ys)?;
        self.star(self.ar(t, ys)?)
    }
}

/// Unit propagation to a fixpoint.
///
/// Forced entries: row one is the identity, column one and the diagonal are
/// `1`, row zero is `1`, `1* = 0`. Rules applied as their operands become
/// known: `x** = x`, exchange, `x → y = y* → x*`, `x → (x ⊓ y) = x → y` and
/// the outer arrow of (QW). Every fully known instance of the axioms is
/// checked.
pub fn propagate(mut t: PartialTable) -> Result<PartialTable, Contradiction> {
    let n = t.n;
    let (z, o) = (t.zero as usize, t.one as usize);
    for x in 0..n {
        t.set(o, x, x)?;
        t.set(x, o, o)?;
        t.set(x, x, o)?;
        t.set(z, x, o)?;
    }
    loop {
        let mut changed = false;
        // involution and contraposition
        for x in 0..n {
            if let Some(s) = Ops(&t).star(x) {
                changed |= t.set(s, z, x)?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let ops = Ops(&t);
                if let (Some(v), Some(xs), Some(ys)) = (ops.ar(x, y), ops.star(x), ops.star(y)) {
                    changed |= t.set(ys, xs, v)?;
                }
            }
        }
        // exchange: x → (y → w) = y → (x → w)
        for x in 0..n {
            for y in 0..n {
                for w in 0..n {
                    let ops = Ops(&t);
                    let (yw, xw) = (ops.ar(y, w), ops.ar(x, w));
                    let lhs = yw.and_then(|u| ops.ar(x, u));
                    let rhs = xw.and_then(|u| ops.ar(y, u));
                    match (lhs, rhs, yw, xw) {
                        (Some(l), Some(r), _, _) if l != r => return Err(Contradiction),
                        (Some(l), None, _, Some(u)) => changed |= t.set(y, u, l)?,
                        (None, Some(r), Some(u), _) => changed |= t.set(x, u, r)?,
                        _ => {}
                    }
                }
            }
        }
        // x → (x ⊓ y) = x → y
        for x in 0..n {
            for y in 0..n {
                let ops = Ops(&t);
                if let (Some(m), Some(v)) = (ops.meet(x, y), ops.ar(x, y)) {
                    match ops.ar(x, m) {
                        Some(l) if l != v => return Err(Contradiction),
                        None => changed |= t.set(x, m, v)?,
                        _ => {}
                    }
                }
            }
        }
        // x → ((x ⊓ y) ⊓ (w ⊓ x)) = (x → y) ⊓ (x → w)
        for x in 0..n {
            for y in 0..n {
                for w in 0..n {
                    let ops = Ops(&t);
                    let inner = ops.meet(x, y).zip(ops.meet(w, x)).and_then(|(p, q)| ops.meet(p, q));
                    let rhs = ops.ar(x, y).zip(ops.ar(x, w)).and_then(|(p, q)| ops.meet(p, q));
                    if let (Some(m), Some(r)) = (inner, rhs) {
                        match ops.ar(x, m) {
                            Some(l) if l != r => return Err(Contradiction),
                            None => changed |= t.set(x, m, r)?,
                            _ => {}
                        }
                    }
                }
            }
        }
        if !changed {
            return Ok(t);
        }
    }
}

/// A table relabeled so zero is `0`, one is `n - 1`, and the row-major
/// entries are lexicographically least over all relabelings of the middle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub table: Vec<u8>,
}

impl CanonicalForm {
    /// The canonical table as an algebra with default names.
    pub fn to_algebra(&self) -> FiniteAlgebra {
        let n = self.n;
        FiniteAlgebra::from_fn(FiniteAlgebra::default_names(n), 0, n.saturating_sub(1), |i, j| {
            self.table[i * n + j] as usize
        })
        .expect("canonical table is well formed")
    }
}

/// Calls `f` on every permutation of `items` (Heap's algorithm).
fn for_each_permutation(items: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    fn heap(k: usize, items: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, items, f);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
        heap(k - 1, items, f);
    }
    let k = items.len();
    heap(k, items, f);
}

pub fn canonical_form(a: &FiniteAlgebra) -> CanonicalForm {
    let n = a.order();
    let (z, o) = (a.zero().index(), a.one().index());
    let mut middle: Vec<usize> = (0..n).filter(|&i| i != z && i != o).collect();
    let mut best: Option<Vec<u8>> = None;
    let mut perm = vec![0usize; n];
    let mut inv = vec![0usize; n];
    let mut buf = vec![0u8; n * n];
    for_each_permutation(&mut middle, &mut |mid| {
        // new label k + 1 is old element mid[k]
        inv[0] = z;
        inv[n - 1] = o;
        for (k, &m) in mid.iter().enumerate() {
            inv[k + 1] = m;
        }
        for (new, &old) in inv.iter().enumerate() {
            perm[old] = new;
        }
        for i in 0..n {
            for j in 0..n {
                buf[i * n + j] = perm[a.arrow(ElementId::new(inv[i]), ElementId::new(inv[j])).index()] as u8;
            }
        }
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    });
    CanonicalForm { n, table: best.expect("at least one permutation") }
}

/// A bijection `φ` with `φ(0) = 0`, `φ(1) = 1` and `φ(x → y) = φ(x) → φ(y)`,
/// returned as `φ[i]` for element index `i`. `None` when the orders differ or
/// no such bijection exists.
pub fn is_isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() {
        return None;
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    phi[a.zero().index()] = b.zero().index();
    phi[a.one().index()] = b.one().index();
    if n > 1 && a.zero() == a.one() || n == 1 && b.zero() != b.one() {
        return None;
    }
    used[b.zero().index()] = true;
    used[b.one().index()] = true;
    let order: Vec<usize> = (0..n).filter(|&i| phi[i] == usize::MAX).collect();

    fn consistent(a: &FiniteAlgebra, b: &FiniteAlgebra, phi: &[usize]) -> bool {
        let n = a.order();
        for i in 0..n {
            if phi[i] == usize::MAX {
                continue;
            }
            for j in 0..n {
                if phi[j] == usize::MAX {
                    continue;
                }
                let v = a.arrow(ElementId::new(i), ElementId::new(j)).index();
                if phi[v] != usize::MAX
                    && phi[v] != b.arrow(ElementId::new(phi[i]), ElementId::new(phi[j])).index()
                {
                    return false;
                }
            }
        }
        true
    }

    fn go(
        k: usize,
        order: &[usize],
        a: &FiniteAlgebra,
        b: &FiniteAlgebra,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if !consistent(a, b, phi) {
            return false;
        }
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for v in 0..a.order() {
            if used[v] {
                continue;
            }
            phi[x] = v;
            used[v] = true;
            if go(k + 1, order, a, b, phi, used) {
                return true;
            }
            used[v] = false;
        }
        phi[x] = usize::MAX;
        false
    }

    go(0, &order, a, b, &mut phi, &mut used).then_some(phi)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    /// Complete tables rejected by the final axiom check.
    pub final_rejections: u64,
    /// Complete QW tables discarded as isomorphic to an earlier one.
    pub isomorph_rejections: u64,
}

impl SearchStats {
    fn merge(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.prunes += o.prunes;
        self.final_rejections += o.final_rejections;
        self.isomorph_rejections += o.isomorph_rejections;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub order: usize,
    /// Canonical models in ascending canonical order.
    pub models: Vec<CanonicalForm>,
    pub stats: SearchStats,
    /// Whether `limit` cut the model list short.
    pub truncated: bool,
}

impl SearchReport {
    pub fn count(&self) -> usize {
        self.models.len()
    }

    pub fn algebras(&self) -> impl Iterator<Item = FiniteAlgebra> + '_ {
        self.models.iter().map(CanonicalForm::to_algebra)
    }
}

/// One involution per conjugacy class on the middle elements `1..n-1`:
/// the first `k` are fixed and the rest are swapped in consecutive pairs.
fn involution_representatives(n: usize) -> Vec<Vec<usize>> {
    if n < 2 {
        return vec![vec![0; n]];
    }
    let m = n - 2;
    let mut reps = Vec::new();
    for fixed in (0..=m).rev().filter(|f| (m - f).is_multiple_of(2)) {
        let mut star = vec![0; n];
        star[0] = n - 1;
        star[n - 1] = 0;
        for (i, s) in star.iter_mut().enumerate().take(fixed + 1).skip(1) {
            *s = i;
        }
        let mut i = fixed + 1;
        while i + 1 < n - 1 {
            star[i] = i + 1;
            star[i + 1] = i;
            i += 2;
        }
        reps.push(star);
    }
    reps
}

fn backtrack(t: PartialTable, stats: &mut SearchStats, out: &mut Vec<PartialTable>) {
    stats.nodes += 1;
    let t = match propagate(t) {
        Ok(t) => t,
        Err(Contradiction) => {
            stats.prunes += 1;
            return;
        }
    };
    match t.next_unassigned() {
        None => out.push(t),
        Some((x, y)) => {
            for v in 0..t.n {
                let mut c = t.clone();
                if c.set(x, y, v).is_ok() {
                    backtrack(c, stats, out);
                }
            }
        }
    }
}

/// All QW algebras of order `n` up to isomorphism, sorted by canonical form
/// and cut to `limit` models when given.
pub fn enumerate_qw(n: usize, limit: Option<usize>, gates: &Gates) -> Result<SearchReport> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > gates.search_order {
        return Err(Error::GateExceeded { n, gate: gates.search_order });
    }
    let mut roots = Vec::new();
    for star in involution_representatives(n) {
        let mut t = PartialTable::new(n)?;
        let seeded = star.iter().enumerate().all(|(x, &s)| t.set(x, 0, s).is_ok());
        if !seeded {
            continue;
        }
        // split one more level for parallelism
        match propagate(t.clone()).ok().and_then(|p| p.next_unassigned().map(|c| (p, c))) {
            Some((p, (x, y))) => {
                for v in 0..n {
                    let mut c = p.clone();
                    if c.set(x, y, v).is_ok() {
                        roots.push(c);
                    }
                }
            }
            None => roots.push(t),
        }
    }
    let results: Vec<(SearchStats, Vec<PartialTable>)> = roots
        .into_par_iter()
        .map(|t| {
            let mut stats = SearchStats::default();
            let mut out = Vec::new();
            backtrack(t, &mut stats, &mut out);
            (stats, out)
        })
        .collect();
    let mut stats = SearchStats::default();
    let mut models = BTreeMap::new();
    for (s, tables) in results {
        stats.merge(&s);
        for t in tables {
            let a = t.to_algebra().expect("complete table");
            if !axioms::is_qw(&a) {
                stats.final_rejections += 1;
                continue;
            }
            if models.insert(canonical_form(&a), ()).is_some() {
                stats.isomorph_rejections += 1;
            }
        }
    }
    let mut models: Vec<CanonicalForm> = models.into_keys().collect();
    let truncated = limit.is_some_and(|k| models.len() > k);
    if let Some(k) = limit {
        models.truncate(k);
    }
    Ok(SearchReport { order: n, models, stats, truncated })
}
