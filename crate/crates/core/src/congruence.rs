//! The congruence `≡_F` induced by a deductive system, quotient algebras,
//! element orders, and the two quotient characterizations (strong maximality
//! versus local finiteness, primality versus weak linearity).

use serde::Serialize;

use crate::algebra::{ElementId, FiniteAlgebra};
use crate::axioms::{self, Verdict, Witness};
use crate::error::{Error, Result};
use crate::structure;
use crate::subset::Subset;
use crate::Gates;

/// A partition of `{0, …, n-1}` stored as canonical labels: classes are
/// numbered in order of their first member.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    /// Accepts arbitrary labels and renumbers them canonically.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut seen: Vec<usize> = Vec::new();
        let labels = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(*l);
                    seen.len() - 1
                }
            })
            .collect();
        Partition { labels }
    }

    pub fn from_classes(n: usize, classes: &[Subset]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (k, c) in classes.iter().enumerate() {
            c.check_width(n)?;
            for x in c {
                if labels[x.index()] != usize::MAX {
                    return Err(Error::BadPartition(format!("element {} lies in two classes", x.index())));
                }
                labels[x.index()] = k;
            }
        }
        if let Some(i) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::BadPartition(format!("element {i} lies in no class")));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn discrete(n: usize) -> Self {
        Partition { labels: (0..n).collect() }
    }

    pub fn indiscrete(n: usize) -> Self {
        Partition { labels: vec![0; n] }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn width(&self) -> usize {
        self.labels.len()
    }

    pub fn num_classes(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn class_index(&self, x: ElementId) -> usize {
        self.labels[x.index()]
    }

    pub fn same(&self, x: ElementId, y: ElementId) -> bool {
        self.class_index(x) == self.class_index(y)
    }

    pub fn class_of(&self, x: ElementId) -> Subset {
        let k = self.class_index(x);
        self.class(k)
    }

    pub fn class(&self, k: usize) -> Subset {
        Subset::from_elements(
            self.width(),
            self.labels.iter().enumerate().filter(|(_, &l)| l == k).map(|(i, _)| ElementId::new(i)),
        )
    }

    /// Classes in label order; each is non-empty and the least member of
    /// class `k` precedes the least member of class `k + 1`.
    pub fn classes(&self) -> Vec<Subset> {
        (0..self.num_classes()).map(|k| self.class(k)).collect()
    }

    pub fn format(&self, a: &FiniteAlgebra) -> String {
        let parts: Vec<String> = self.classes().iter().map(|c| a.format_subset(c)).collect();
        parts.join(" ")
    }

    fn check_width(&self, n: usize) -> Result<()> {
        if self.width() == n {
            Ok(())
        } else {
            Err(Error::WidthMismatch { expected: n, got: self.width() })
        }
    }
}

/// The relation `x ≡_F y` as a matrix, computed without any checks on `F`.
pub fn relation_from_ds(a: &FiniteAlgebra, f: &Subset) -> Vec<Vec<bool>> {
    a.elements()
        .map(|x| a.elements().map(|y| related(a, f, x, y)).collect())
        .collect()
}

/// Some `λ` with `x, y ≤_Q λ` and `λ → x, λ → y ∈ F`.
pub fn related(a: &FiniteAlgebra, f: &Subset, x: ElementId, y: ElementId) -> bool {
    a.elements()
        .any(|l| a.leq_q(x, l) && a.leq_q(y, l) && f.contains(a.arrow(l, x)) && f.contains(a.arrow(l, y)))
}

/// Some `α, β ∈ F` with `x ≤_Q α`, `y ≤_Q β` and `α → x = β → y`.
fn related_by_pair(a: &FiniteAlgebra, f: &Subset, x: ElementId, y: ElementId) -> bool {
    f.iter().any(|al| {
        a.leq_q(x, al) && f.iter().any(|be| a.leq_q(y, be) && a.arrow(al, x) == a.arrow(be, y))
    })
}

/// Some `α, β ∈ F` with `x ≤_Q β → y` and `y ≤_Q α → x`.
fn related_by_bounds(a: &FiniteAlgebra, f: &Subset, x: ElementId, y: ElementId) -> bool {
    f.iter().any(|be| a.leq_q(x, a.arrow(be, y))) && f.iter().any(|al| a.leq_q(y, a.arrow(al, x)))
}

/// First pair on which the three descriptions of `≡_F` disagree.
pub fn characterization_mismatch(a: &FiniteAlgebra, f: &Subset) -> Result<Option<(ElementId, ElementId)>> {
    f.check_width(a.order())?;
    for x in a.elements() {
        for y in a.elements() {
            let r = related(a, f, x, y);
            if r != related_by_pair(a, f, x, y) || r != related_by_bounds(a, f, x, y) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

pub fn equiv_characterizations_agree(a: &FiniteAlgebra, f: &Subset) -> Result<bool> {
    Ok(characterization_mismatch(a, f)?.is_none())
}

fn require_ds(a: &FiniteAlgebra, f: &Subset) -> Result<()> {
    f.check_width(a.order())?;
    if let Verdict::Fails { witness } = structure::is_deductive_system(a, f)? {
        return Err(Error::NotInFamily { family: "deductive system", reason: witness.render(a) });
    }
    Ok(())
}

fn require_qw(a: &FiniteAlgebra) -> Result<()> {
    let r = axioms::verify_qw(a);
    if r.is_qw() {
        Ok(())
    } else {
        Err(Error::NotQw(axioms::first_failure(&r, a)))
    }
}

/// The partition of `≡_F` for a deductive system `F` of a QW algebra.
///
/// The relation is verified to be an equivalence and a congruence, and its
/// three descriptions are verified to agree; any failure is a falsification.
pub fn congruence_from_ds(a: &FiniteAlgebra, f: &Subset) -> Result<Partition> {
    require_qw(a)?;
    require_ds(a, f)?;
    let r = relation_from_ds(a, f);
    let n = a.order();
    let name = |i: usize| a.name(ElementId::new(i)).to_string();
    for x in 0..n {
        if !r[x][x] {
            return Err(Error::Falsified(format!("relation is not reflexive at {}", name(x))));
        }
        for y in 0..n {
            if r[x][y] != r[y][x] {
                return Err(Error::Falsified(format!("relation is not symmetric at ({}, {})", name(x), name(y))));
            }
            if r[x][y] {
                if let Some(z) = (0..n).find(|&z| r[y][z] && !r[x][z]) {
                    return Err(Error::Falsified(format!(
                        "relation is not transitive at ({}, {}, {})",
                        name(x),
                        name(y),
                        name(z)
                    )));
                }
            }
        }
    }
    if let Some((x, y)) = characterization_mismatch(a, f)? {
        return Err(Error::Falsified(format!(
            "congruence descriptions disagree at ({}, {})",
            a.name(x),
            a.name(y)
        )));
    }
    let labels: Vec<usize> = (0..n).map(|x| (0..n).position(|y| r[x][y]).unwrap_or(x)).collect();
    let p = Partition::from_labels(&labels);
    if let Some(w) = is_congruence(a, &p)?.witness() {
        return Err(Error::Falsified(format!("relation is not compatible: {}", w.render(a))));
    }
    Ok(p)
}

/// Compatibility of a partition with `→`. When it holds, compatibility with
/// `*`, `⊙`, `⊓` and `⊔` is verified as well.
pub fn is_congruence(a: &FiniteAlgebra, p: &Partition) -> Result<Verdict> {
    p.check_width(a.order())?;
    let reps: Vec<ElementId> = p.classes().iter().map(|c| c.iter().next().expect("non-empty class")).collect();
    let elems: Vec<ElementId> = a.elements().collect();
    let binary = |op: &dyn Fn(ElementId, ElementId) -> ElementId, law: &'static str| -> Option<Witness> {
        for &x in &elems {
            for &u in &elems {
                let (rx, ru) = (reps[p.class_index(x)], reps[p.class_index(u)]);
                if !p.same(op(x, u), op(rx, ru)) {
                    return Some(Witness::new(law, &[x, u, rx, ru]));
                }
            }
        }
        None
    };
    if let Some(w) = binary(&|x, y| a.arrow(x, y), "x~x', u~u' implies x->u ~ x'->u'") {
        return Ok(Verdict::Fails { witness: w });
    }
    let derived = elems
        .iter()
        .find(|&&x| !p.same(a.star(x), a.star(reps[p.class_index(x)])))
        .map(|&x| Witness::new("x~x' implies x* ~ x'*", &[x]))
        .or_else(|| binary(&|x, y| a.odot(x, y), "compatible with x.y"))
        .or_else(|| binary(&|x, y| a.meet(x, y), "compatible with x^y"))
        .or_else(|| binary(&|x, y| a.join(x, y), "compatible with x+y"));
    if let Some(w) = derived {
        return Err(Error::Falsified(format!("arrow-compatible partition fails {}", w.render(a))));
    }
    Ok(Verdict::Holds)
}

/// The class of `1` under a congruence.
pub fn ds_from_congruence(a: &FiniteAlgebra, p: &Partition) -> Result<Subset> {
    if let Some(w) = is_congruence(a, p)?.witness() {
        return Err(Error::NotCongruence(w.render(a)));
    }
    let f = p.class_of(a.one());
    if axioms::is_qw(a) && !structure::is_deductive_system(a, &f)?.holds() {
        return Err(Error::Falsified(format!("class of 1 {} is not a deductive system", a.format_subset(&f))));
    }
    Ok(f)
}

/// `X/F` together with the projection it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientAlgebra {
    pub algebra: FiniteAlgebra,
    pub partition: Partition,
    /// Least member of each class, indexed by class.
    pub representatives: Vec<ElementId>,
}

impl QuotientAlgebra {
    pub fn project(&self, x: ElementId) -> ElementId {
        ElementId::new(self.partition.class_index(x))
    }
}

/// Quotient of a QW algebra by the congruence of a deductive system. Classes
/// are named `[m]` after their least member `m`.
pub fn quotient(a: &FiniteAlgebra, f: &Subset) -> Result<QuotientAlgebra> {
    let partition = congruence_from_ds(a, f)?;
    let classes = partition.classes();
    let reps: Vec<ElementId> = classes.iter().map(|c| c.iter().next().expect("non-empty class")).collect();
    let names: Vec<String> = reps.iter().map(|&r| format!("[{}]", a.name(r))).collect();
    let k = classes.len();
    let rows: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).map(|j| partition.class_index(a.arrow(reps[i], reps[j]))).collect())
        .collect();
    for x in a.elements() {
        for y in a.elements() {
            let (i, j) = (partition.class_index(x), partition.class_index(y));
            if partition.class_index(a.arrow(x, y)) != rows[i][j] {
                return Err(Error::Falsified(format!(
                    "quotient arrow is not well defined at ({}, {})",
                    a.name(x),
                    a.name(y)
                )));
            }
        }
    }
    let q = FiniteAlgebra::new(
        names,
        rows,
        partition.class_index(a.zero()),
        partition.class_index(a.one()),
    )?;
    let r = axioms::verify_qw(&q);
    if !r.is_qw() {
        return Err(Error::Falsified(format!("quotient is not QW: {}", axioms::first_failure(&r, &q))));
    }
    if partition.class_of(a.one()) != *f {
        return Err(Error::Falsified(format!("class of 1 differs from {}", a.format_subset(f))));
    }
    Ok(QuotientAlgebra { algebra: q, partition, representatives: reps })
}

/// Least `n ≥ 1` with `xⁿ = 0`, or `None` when no power of `x` is `0`.
pub fn ord(a: &FiniteAlgebra, x: ElementId) -> Option<usize> {
    a.powers(x).iter().position(|&p| p == a.zero()).map(|i| i + 1)
}

/// Every `x ≠ 1` has finite order.
pub fn is_locally_finite(a: &FiniteAlgebra) -> bool {
    locally_finite_witness(a).is_none()
}

pub fn locally_finite_witness(a: &FiniteAlgebra) -> Option<ElementId> {
    a.elements().find(|&x| x != a.one() && ord(a, x).is_none())
}

/// One side-by-side evaluation of a quotient characterization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientEvidence {
    pub subset: Subset,
    /// The property of `F` (strongly maximal, or prime).
    pub on_subset: bool,
    /// The property of `X/F` (locally finite, or weakly linear).
    pub on_quotient: bool,
    pub quotient_order: usize,
}

impl QuotientEvidence {
    pub fn agree(&self) -> bool {
        self.on_subset == self.on_quotient
    }
}

fn evidence(
    a: &FiniteAlgebra,
    f: &Subset,
    on_subset: bool,
    on_quotient: impl FnOnce(&FiniteAlgebra) -> Result<bool>,
    what: &str,
) -> Result<QuotientEvidence> {
    let q = quotient(a, f)?;
    let e = QuotientEvidence {
        subset: *f,
        on_subset,
        on_quotient: on_quotient(&q.algebra)?,
        quotient_order: q.algebra.order(),
    };
    if !e.agree() {
        return Err(Error::Falsified(format!(
            "{what} at {}: subset {}, quotient {}",
            a.format_subset(f),
            e.on_subset,
            e.on_quotient
        )));
    }
    Ok(e)
}

/// `F` is strongly maximal iff `X/F` is locally finite.
pub fn check_strongly_maximal_quotient(a: &FiniteAlgebra, f: &Subset) -> Result<QuotientEvidence> {
    require_qw(a)?;
    require_ds(a, f)?;
    let sm = structure::is_strongly_maximal(a, f)?;
    evidence(a, f, sm, |q| Ok(is_locally_finite(q)), "strong maximality and local finiteness disagree")
}

/// `F` is prime iff `X/F` is weakly linear.
pub fn check_prime_quotient(a: &FiniteAlgebra, f: &Subset) -> Result<QuotientEvidence> {
    require_qw(a)?;
    require_ds(a, f)?;
    let prime = structure::is_prime(a, f)?.holds();
    evidence(a, f, prime, |q| Ok(structure::is_weakly_linear(q)?.holds()), "primality and weak linearity disagree")
}

/// All set partitions of `{0, …, n-1}` as restricted growth strings, in
/// lexicographic order.
pub fn enumerate_partitions(n: usize, gates: &Gates) -> Result<Vec<Partition>> {
    if n > gates.partitions {
        return Err(Error::GateExceeded { n, gate: gates.partitions });
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(i: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == labels.len() {
            out.push(Partition { labels: labels.clone() });
            return;
        }
        for v in 0..=max + 1 {
            labels[i] = v;
            rec(i + 1, max.max(v), labels, out);
        }
    }
    if n == 0 {
        return Ok(vec![Partition { labels }]);
    }
    rec(1, 0, &mut labels, &mut out);
    Ok(out)
}

pub fn enumerate_congruences(a: &FiniteAlgebra, gates: &Gates) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for p in enumerate_partitions(a.order(), gates)? {
        if is_congruence(a, &p)?.holds() {
            out.push(p);
        }
    }
    Ok(out)
}
