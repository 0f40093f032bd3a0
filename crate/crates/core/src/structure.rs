//! Subsets with algebraic closure properties: filters, deductive systems and
//! ideals, the closure operators that generate them, and the maximality,
//! primality and linearity predicates built on top.
//!
//! Predicates that have several equivalent characterizations on QW algebras
//! evaluate the alternatives as well and return [`Error::Falsified`] if they
//! disagree. On algebras outside the QW class only the defining form is used.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{ElementId, FiniteAlgebra};
use crate::axioms::{self, Verdict, Witness};
use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::Gates;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Filters,
    DeductiveSystems,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Filters => "filter",
            Family::DeductiveSystems => "deductive system",
        }
    }
}

fn verdict(w: Option<Witness>) -> Verdict {
    match w {
        None => Verdict::Holds,
        Some(witness) => Verdict::Fails { witness },
    }
}

fn falsified(what: &str, a: &FiniteAlgebra, f: &Subset) -> Error {
    Error::Falsified(format!("{what} disagree on {}", a.format_subset(f)))
}

// --- closure conditions -----------------------------------------------------

const NON_EMPTY: &str = "non-empty";

fn non_empty(f: &Subset) -> Option<Witness> {
    f.is_empty().then(|| Witness::new(NON_EMPTY, &[]))
}

fn product_closed(a: &FiniteAlgebra, f: &Subset) -> Option<Witness> {
    for x in f {
        for y in f {
            if !f.contains(a.odot(x, y)) {
                return Some(Witness::new("closed under x.y", &[x, y]));
            }
        }
    }
    None
}

fn left_arrow_closed(a: &FiniteAlgebra, f: &Subset) -> Option<Witness> {
    for x in f {
        for y in a.elements() {
            if !f.contains(a.arrow(y, x)) {
                return Some(Witness::new("x in F implies y->x in F", &[x, y]));
            }
        }
    }
    None
}

fn upward_closed(a: &FiniteAlgebra, f: &Subset, le: impl Fn(ElementId, ElementId) -> bool, law: &'static str) -> Option<Witness> {
    for x in f {
        for y in a.elements() {
            if le(x, y) && !f.contains(y) {
                return Some(Witness::new(law, &[x, y]));
            }
        }
    }
    None
}

fn join_closed(a: &FiniteAlgebra, f: &Subset) -> Option<Witness> {
    for x in f {
        for y in a.elements() {
            if !f.contains(a.join(x, y)) {
                return Some(Witness::new("x in F implies x+y in F", &[x, y]));
            }
        }
    }
    None
}

fn modus_ponens_closed(a: &FiniteAlgebra, f: &Subset) -> Option<Witness> {
    for x in f {
        for y in a.elements() {
            if f.contains(a.arrow(x, y)) && !f.contains(y) {
                return Some(Witness::new("x, x->y in F implies y in F", &[x, y]));
            }
        }
    }
    None
}

fn perspective_closed(a: &FiniteAlgebra, f: &Subset) -> Option<Witness> {
    for x in f {
        for y in a.elements() {
            if !f.contains(y) && are_perspective(a, x, y) {
                return Some(Witness::new("x in F, x~y implies y in F", &[x, y]));
            }
        }
    }
    None
}

fn filter_raw(a: &FiniteAlgebra, f: &Subset) -> Option<Witness> {
    non_empty(f).or_else(|| product_closed(a, f)).or_else(|| left_arrow_closed(a, f))
}

fn filter_q_upward_raw(a: &FiniteAlgebra, f: &Subset) -> Option<Witness> {
    non_empty(f)
        .or_else(|| product_closed(a, f))
        .or_else(|| upward_closed(a, f, |x, y| a.leq_q(x, y), "x in F, x<=Q y implies y in F"))
}

fn ds_raw(a: &FiniteAlgebra, f: &Subset) -> Option<Witness> {
    if !f.contains(a.one()) {
        return Some(Witness::new("1 in F", &[a.one()]));
    }
    modus_ponens_closed(a, f)
}

fn ds_upward_raw(a: &FiniteAlgebra, f: &Subset) -> Option<Witness> {
    non_empty(f)
        .or_else(|| product_closed(a, f))
        .or_else(|| upward_closed(a, f, |x, y| a.leq(x, y), "x in F, x<=y implies y in F"))
}

fn ds_join_raw(a: &FiniteAlgebra, f: &Subset) -> Option<Witness> {
    non_empty(f).or_else(|| product_closed(a, f)).or_else(|| join_closed(a, f))
}

fn filter_checked(a: &FiniteAlgebra, f: &Subset, qw: bool) -> Result<Verdict> {
    let w = filter_raw(a, f);
    if qw && w.is_none() != filter_q_upward_raw(a, f).is_none() {
        return Err(falsified("filter characterizations", a, f));
    }
    Ok(verdict(w))
}

fn ds_checked(a: &FiniteAlgebra, f: &Subset, qw: bool) -> Result<Verdict> {
    let w = ds_raw(a, f);
    if qw {
        let holds = w.is_none();
        if holds != ds_upward_raw(a, f).is_none() || holds != ds_join_raw(a, f).is_none() {
            return Err(falsified("deductive-system characterizations", a, f));
        }
    }
    Ok(verdict(w))
}

/// Non-empty, closed under `⊙`, and `x ∈ F` implies `y → x ∈ F`.
///
/// On QW algebras the equivalent form with `≤_Q`-upward closure is checked too.
pub fn is_filter(a: &FiniteAlgebra, f: &Subset) -> Result<Verdict> {
    f.check_width(a.order())?;
    filter_checked(a, f, axioms::is_qw(a))
}

/// Filter test using `⊙`-closure and `≤_Q`-upward closure only.
pub fn is_filter_q_upward(a: &FiniteAlgebra, f: &Subset) -> Result<Verdict> {
    f.check_width(a.order())?;
    Ok(verdict(filter_q_upward_raw(a, f)))
}

/// Contains `1` and is closed under modus ponens.
///
/// On QW algebras this is cross-checked against the `≤`-upward and the
/// `⊔`-closure characterizations.
pub fn is_deductive_system(a: &FiniteAlgebra, f: &Subset) -> Result<Verdict> {
    f.check_width(a.order())?;
    ds_checked(a, f, axioms::is_qw(a))
}

/// Deductive-system test as a `⊙`-closed, `≤`-upward closed subset.
pub fn is_deductive_system_upward(a: &FiniteAlgebra, f: &Subset) -> Result<Verdict> {
    f.check_width(a.order())?;
    Ok(verdict(ds_upward_raw(a, f)))
}

/// Deductive-system test as a `⊙`-closed subset with `x ∈ F ⇒ x ⊔ y ∈ F`.
pub fn is_deductive_system_join(a: &FiniteAlgebra, f: &Subset) -> Result<Verdict> {
    f.check_width(a.order())?;
    Ok(verdict(ds_join_raw(a, f)))
}

/// Deductive-system test as a filter closed under perspectivity.
pub fn is_deductive_system_perspective(a: &FiniteAlgebra, f: &Subset) -> Result<Verdict> {
    f.check_width(a.order())?;
    Ok(verdict(filter_raw(a, f).or_else(|| perspective_closed(a, f))))
}

/// Non-empty, `x, y ∈ I ⇒ x* → y ∈ I`, and `≤_Q`-downward closed.
pub fn is_ideal(a: &FiniteAlgebra, i: &Subset) -> Result<Verdict> {
    i.check_width(a.order())?;
    let w = non_empty(i)
        .or_else(|| {
            for x in i {
                for y in i {
                    if !i.contains(a.arrow(a.star(x), y)) {
                        return Some(Witness::new("x, y in I implies x*->y in I", &[x, y]));
                    }
                }
            }
            None
        })
        .or_else(|| {
            for y in i {
                for x in a.elements() {
                    if a.leq_q(x, y) && !i.contains(x) {
                        return Some(Witness::new("y in I, x<=Q y implies x in I", &[y, x]));
                    }
                }
            }
            None
        });
    Ok(verdict(w))
}

/// Closed under `y → x` for every `x` in the subset: `y → x ∈ F` implies
/// `((x → y) → y) → x ∈ F`.
pub fn is_commutative_filter(a: &FiniteAlgebra, f: &Subset) -> Result<Verdict> {
    f.check_width(a.order())?;
    for x in a.elements() {
        for y in a.elements() {
            if f.contains(a.arrow(y, x)) && !f.contains(a.arrow(a.join(x, y), x)) {
                return Ok(verdict(Some(Witness::new("y->x in F implies (x+y)->x in F", &[x, y]))));
            }
        }
    }
    Ok(Verdict::Holds)
}

// --- enumeration ------------------------------------------------------------

fn scan_subsets(
    a: &FiniteAlgebra,
    gates: &Gates,
    keep: impl Fn(&Subset) -> Result<bool> + Sync,
) -> Result<Vec<Subset>> {
    let n = a.order();
    gates.check_subsets(n)?;
    let found: Vec<Result<Option<Subset>>> = (0usize..1 << n)
        .into_par_iter()
        .map(|bits| {
            let s = Subset::from_bits(n, bits as u64);
            keep(&s).map(|k| k.then_some(s))
        })
        .collect();
    found.into_iter().filter_map(|r| r.transpose()).collect()
}

/// Every filter, in ascending bit-vector order.
pub fn enumerate_filters(a: &FiniteAlgebra, gates: &Gates) -> Result<Vec<Subset>> {
    let qw = axioms::is_qw(a);
    scan_subsets(a, gates, |s| Ok(filter_checked(a, s, qw)?.holds()))
}

/// Every deductive system, in ascending bit-vector order. On QW algebras the
/// result is verified to be contained in the filter family.
pub fn enumerate_deductive_systems(a: &FiniteAlgebra, gates: &Gates) -> Result<Vec<Subset>> {
    let qw = axioms::is_qw(a);
    let ds = scan_subsets(a, gates, |s| Ok(ds_checked(a, s, qw)?.holds()))?;
    if qw {
        if let Some(f) = ds.iter().find(|f| filter_raw(a, f).is_some()) {
            return Err(Error::Falsified(format!(
                "deductive system {} is not a filter",
                a.format_subset(f)
            )));
        }
    }
    Ok(ds)
}

pub fn enumerate_ideals(a: &FiniteAlgebra, gates: &Gates) -> Result<Vec<Subset>> {
    scan_subsets(a, gates, |s| Ok(is_ideal(a, s)?.holds()))
}

pub fn enumerate(a: &FiniteAlgebra, family: Family, gates: &Gates) -> Result<Vec<Subset>> {
    match family {
        Family::Filters => enumerate_filters(a, gates),
        Family::DeductiveSystems => enumerate_deductive_systems(a, gates),
    }
}

// --- generation -------------------------------------------------------------

/// Closure of `y` under finite `⊙`-products.
fn product_closure(a: &FiniteAlgebra, y: &Subset) -> Subset {
    let mut prods = *y;
    loop {
        let mut next = prods;
        for p in &prods {
            for g in y {
                next.insert(a.odot(p, g));
            }
        }
        if next == prods {
            return prods;
        }
        prods = next;
    }
}

fn q_up_closure(a: &FiniteAlgebra, s: &Subset) -> Subset {
    Subset::from_elements(a.order(), a.elements().filter(|&x| s.iter().any(|p| a.leq_q(p, x))))
}

/// Least filter containing `y`: the `≤_Q`-upward closure of all finite
/// `⊙`-products of elements of `y`.
pub fn generated_filter(a: &FiniteAlgebra, y: &Subset) -> Result<Subset> {
    y.check_width(a.order())?;
    if y.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok(q_up_closure(a, &product_closure(a, y)))
}

/// Least filter containing `y`, as the intersection of all enumerated filters
/// containing it. `None` when no filter contains `y`.
pub fn generated_filter_by_intersection(a: &FiniteAlgebra, y: &Subset, gates: &Gates) -> Result<Option<Subset>> {
    y.check_width(a.order())?;
    let filters = enumerate_filters(a, gates)?;
    Ok(filters
        .iter()
        .filter(|f| y.is_subset_of(f))
        .copied()
        .reduce(|acc, f| acc.intersection(&f)))
}

/// `F_x`, the filter generated by `F ∪ {x}`.
///
/// On QW algebras the result is compared with the direct description
/// `{y | y ≥_Q f ⊙ xⁿ for some f ∈ F, n ≥ 1}`.
pub fn extend_filter(a: &FiniteAlgebra, f: &Subset, x: ElementId) -> Result<Subset> {
    let qw = axioms::is_qw(a);
    if let Verdict::Fails { witness } = filter_checked(a, f, qw)? {
        return Err(Error::NotInFamily { family: "filter", reason: witness.render(a) });
    }
    let mut gen = *f;
    gen.insert(x);
    let result = generated_filter(a, &gen)?;
    if qw {
        let powers = a.powers(x);
        let direct = Subset::from_elements(
            a.order(),
            a.elements().filter(|&y| f.iter().any(|g| powers.iter().any(|&p| a.leq_q(a.odot(g, p), y)))),
        );
        if direct != result || (f.contains(x) && result != *f) {
            return Err(falsified("generated filter and its direct description", a, f));
        }
    }
    Ok(result)
}

/// Least deductive system containing `y`: close `y ∪ {1}` under modus ponens.
pub fn generated_deductive_system(a: &FiniteAlgebra, y: &Subset) -> Result<Subset> {
    y.check_width(a.order())?;
    let mut s = *y;
    s.insert(a.one());
    loop {
        let mut next = s;
        for p in &s {
            for q in a.elements() {
                if s.contains(a.arrow(p, q)) {
                    next.insert(q);
                }
            }
        }
        if next == s {
            return Ok(s);
        }
        s = next;
    }
}

// --- maximality -------------------------------------------------------------

fn require_member(a: &FiniteAlgebra, f: &Subset, family: Family, qw: bool) -> Result<()> {
    let v = match family {
        Family::Filters => filter_checked(a, f, qw)?,
        Family::DeductiveSystems => ds_checked(a, f, qw)?,
    };
    match v {
        Verdict::Fails { witness } => Err(Error::NotInFamily { family: family.label(), reason: witness.render(a) }),
        _ => Ok(()),
    }
}

/// Maximality through generation: every `x ∉ F` generates the whole carrier.
fn maximal_by_generation(a: &FiniteAlgebra, f: &Subset, family: Family) -> Result<bool> {
    if f.is_full() {
        return Ok(false);
    }
    for x in &f.complement() {
        let mut g = *f;
        g.insert(x);
        let gen = match family {
            Family::Filters => generated_filter(a, &g)?,
            Family::DeductiveSystems => generated_deductive_system(a, &g)?,
        };
        if !gen.is_full() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For every `x ∉ F` there are `f ∈ F` and `n ≥ 1` with `f ⊙ xⁿ = 0`.
pub fn maximal_by_product_witness(a: &FiniteAlgebra, f: &Subset) -> bool {
    f.complement().iter().all(|x| {
        let powers = a.powers(x);
        f.iter().any(|g| powers.iter().any(|&p| a.odot(g, p) == a.zero()))
    })
}

/// Proper and not strictly contained in another proper member of `family`.
///
/// Decided by a dominance scan over the enumerated family when the carrier is
/// within the subset gate, otherwise by generation. On QW algebras a second,
/// independent route is evaluated and must agree.
pub fn is_maximal(a: &FiniteAlgebra, f: &Subset, family: Family, gates: &Gates) -> Result<bool> {
    f.check_width(a.order())?;
    let qw = axioms::is_qw(a);
    require_member(a, f, family, qw)?;
    let primary = if f.is_full() {
        false
    } else if gates.check_subsets(a.order()).is_ok() {
        let members = enumerate(a, family, gates)?;
        !members.iter().any(|g| g != f && f.is_subset_of(g) && !g.is_full())
    } else {
        maximal_by_generation(a, f, family)?
    };
    if qw && !f.is_full() {
        let second = match family {
            Family::Filters => maximal_by_product_witness(a, f),
            Family::DeductiveSystems => maximal_by_generation(a, f, family)?,
        };
        if second != primary {
            return Err(falsified("maximality characterizations", a, f));
        }
    }
    Ok(primary)
}

/// For every `x ∉ F` some power has `(xⁿ)* ∈ F`. The full carrier holds
/// vacuously; properness is reported separately.
pub fn is_strongly_maximal(a: &FiniteAlgebra, f: &Subset) -> Result<bool> {
    f.check_width(a.order())?;
    Ok(strongly_maximal_witness(a, f).is_none())
}

/// First `x ∉ F` none of whose powers has its star in `F`.
pub fn strongly_maximal_witness(a: &FiniteAlgebra, f: &Subset) -> Option<ElementId> {
    f.complement()
        .iter()
        .find(|&x| !a.powers(x).into_iter().any(|p| f.contains(a.star(p))))
}

// --- primality and perspectivity -------------------------------------------

/// For all `x, y`: `x → y ∈ F` or `y → x ∈ F`. When `F` is a deductive system
/// of a QW algebra, the `⊔`-characterization is checked as well.
pub fn is_prime(a: &FiniteAlgebra, f: &Subset) -> Result<Verdict> {
    f.check_width(a.order())?;
    let mut w = None;
    'scan: for x in a.elements() {
        for y in a.elements() {
            if !f.contains(a.arrow(x, y)) && !f.contains(a.arrow(y, x)) {
                w = Some(Witness::new("x->y in F or y->x in F", &[x, y]));
                break 'scan;
            }
        }
    }
    let qw = axioms::is_qw(a);
    if qw && ds_raw(a, f).is_none() {
        let by_join = a.elements().all(|x| {
            a.elements().all(|y| !f.contains(a.join(x, y)) || f.contains(x) || f.contains(y))
        });
        if by_join != w.is_none() {
            return Err(falsified("primality characterizations", a, f));
        }
    }
    Ok(verdict(w))
}

/// Some `α` with `x → α = α → x = y → α = α → y = 1`.
pub fn perspective_witness(a: &FiniteAlgebra, x: ElementId, y: ElementId) -> Option<ElementId> {
    a.elements()
        .find(|&al| a.leq(x, al) && a.leq(al, x) && a.leq(y, al) && a.leq(al, y))
}

pub fn are_perspective(a: &FiniteAlgebra, x: ElementId, y: ElementId) -> bool {
    perspective_witness(a, x, y).is_some()
}

// --- linearity ----------------------------------------------------------------

fn first_pair(a: &FiniteAlgebra, law: &'static str, ok: impl Fn(ElementId, ElementId) -> bool) -> Option<Witness> {
    for x in a.elements() {
        for y in a.elements() {
            if !ok(x, y) {
                return Some(Witness::new(law, &[x, y]));
            }
        }
    }
    None
}

/// `≤` is total. On QW algebras the join and meet characterizations must agree.
pub fn is_weakly_linear(a: &FiniteAlgebra) -> Result<Verdict> {
    let w = first_pair(a, "x<=y or y<=x", |x, y| a.leq(x, y) || a.leq(y, x));
    if axioms::is_qw(a) {
        let by_join = first_pair(a, "", |x, y| a.join(x, y) == y || a.join(y, x) == x).is_none();
        let by_meet = first_pair(a, "", |x, y| a.meet(x, y) == y || a.meet(y, x) == x).is_none();
        let holds = w.is_none();
        if by_join != holds || by_meet != holds {
            return Err(Error::Falsified("weak-linearity characterizations disagree".into()));
        }
    }
    Ok(verdict(w))
}

/// `x ≰_Q y` implies `y < x`, read as `y ≤ x` and `y ≠ x`. On QW algebras
/// the two equivalent forms are evaluated as well and must agree.
pub fn is_quasi_linear(a: &FiniteAlgebra) -> Result<Verdict> {
    let w = first_pair(a, "x not<=Q y implies y<x", |x, y| a.leq_q(x, y) || (a.leq(y, x) && x != y));
    if axioms::is_qw(a) {
        let holds = w.is_none();
        let by_q = first_pair(a, "", |x, y| a.leq(x, y) || (a.leq_q(y, x) && x != y)).is_none();
        let by_cancel = a.elements().all(|z| {
            a.elements().all(|x| {
                a.elements().all(|y| {
                    let (zx, zy) = (a.arrow(z, x), a.arrow(z, y));
                    !(zx == zy && zx != a.one()) || x == y
                })
            })
        });
        if by_q != holds || by_cancel != holds {
            return Err(Error::Falsified("quasi-linearity characterizations disagree".into()));
        }
    }
    Ok(verdict(w))
}

/// First pair `x < y` in element order with `x ≰_Q y` and `y ≰_Q x`.
pub fn q_incomparable_pair(a: &FiniteAlgebra) -> Option<(ElementId, ElementId)> {
    a.elements()
        .flat_map(|x| a.elements().filter(move |&y| x < y).map(move |y| (x, y)))
        .find(|&(x, y)| !a.leq_q(x, y) && !a.leq_q(y, x))
}

/// Identities that hold in weakly linear QW algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakLinearSuite {
    /// `((x → y) → z) ⊓ ((y → x) → z) = z`
    pub split_meet: Verdict,
    /// `x ⊓ y = 0` implies `(z → x) ⊓ (z → y) = z*`
    pub orthogonal_arrows: Verdict,
    /// `x ⊓ (y ⊓ z) = 0` implies `x ⊓ (z ⊓ y) = 0`
    pub orthogonal_swap: Verdict,
    /// `x ∼ y` and `x ⊔ y = 1` imply `x = y = 1`
    pub perspective_top: Verdict,
}

impl WeakLinearSuite {
    pub fn passed(&self) -> bool {
        [&self.split_meet, &self.orthogonal_arrows, &self.orthogonal_swap, &self.perspective_top]
            .iter()
            .all(|v| v.holds())
    }
}

fn first_triple(
    a: &FiniteAlgebra,
    law: &'static str,
    ok: impl Fn(ElementId, ElementId, ElementId) -> bool,
) -> Option<Witness> {
    for x in a.elements() {
        for y in a.elements() {
            for z in a.elements() {
                if !ok(x, y, z) {
                    return Some(Witness::new(law, &[x, y, z]));
                }
            }
        }
    }
    None
}

pub fn weakly_linear_identity_suite(a: &FiniteAlgebra) -> Result<WeakLinearSuite> {
    if !axioms::is_qw(a) {
        return Err(Error::NotQw(axioms::first_failure(&axioms::verify_qw(a), a)));
    }
    if let Some(w) = is_weakly_linear(a)?.witness() {
        return Err(Error::Precondition(format!("not weakly linear: {}", w.render(a))));
    }
    let zero = a.zero();
    let one = a.one();
    Ok(WeakLinearSuite {
        split_meet: verdict(first_triple(a, "((x->y)->z)^((y->x)->z) = z", |x, y, z| {
            a.meet(a.arrow(a.arrow(x, y), z), a.arrow(a.arrow(y, x), z)) == z
        })),
        orthogonal_arrows: verdict(first_triple(a, "x^y = 0 implies (z->x)^(z->y) = z*", |x, y, z| {
            a.meet(x, y) != zero || a.meet(a.arrow(z, x), a.arrow(z, y)) == a.star(z)
        })),
        orthogonal_swap: verdict(first_triple(a, "x^(y^z) = 0 implies x^(z^y) = 0", |x, y, z| {
            a.meet(x, a.meet(y, z)) != zero || a.meet(x, a.meet(z, y)) == zero
        })),
        perspective_top: verdict(first_pair(a, "x~y and x+y = 1 implies x = y = 1", |x, y| {
            !(are_perspective(a, x, y) && a.join(x, y) == one) || (x == one && y == one)
        })),
    })
}

// --- classification ---------------------------------------------------------

/// Every subset predicate evaluated on one subset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterClassification {
    pub subset: Subset,
    pub filter: Verdict,
    pub deductive_system: Verdict,
    pub ideal: Verdict,
    pub proper: bool,
    /// `None` when the subset is not a filter.
    pub maximal_filter: Option<bool>,
    /// `None` when the subset is not a deductive system.
    pub maximal_ds: Option<bool>,
    pub strongly_maximal: bool,
    pub prime: Verdict,
    pub commutative_filter: Verdict,
}

pub fn classify(a: &FiniteAlgebra, f: &Subset, gates: &Gates) -> Result<FilterClassification> {
    f.check_width(a.order())?;
    let qw = axioms::is_qw(a);
    let filter = filter_checked(a, f, qw)?;
    let deductive_system = ds_checked(a, f, qw)?;
    let maximal_filter = if filter.holds() { Some(is_maximal(a, f, Family::Filters, gates)?) } else { None };
    let maximal_ds =
        if deductive_system.holds() { Some(is_maximal(a, f, Family::DeductiveSystems, gates)?) } else { None };
    let c = FilterClassification {
        subset: *f,
        ideal: is_ideal(a, f)?,
        proper: !f.is_full(),
        strongly_maximal: is_strongly_maximal(a, f)?,
        prime: is_prime(a, f)?,
        commutative_filter: is_commutative_filter(a, f)?,
        filter,
        deductive_system,
        maximal_filter,
        maximal_ds,
    };
    if qw {
        if c.deductive_system.holds() && !c.filter.holds() {
            return Err(Error::Falsified(format!("deductive system {} is not a filter", a.format_subset(f))));
        }
        if c.filter.holds() && c.proper && c.strongly_maximal && c.maximal_filter != Some(true) {
            return Err(Error::Falsified(format!(
                "strongly maximal filter {} is not maximal",
                a.format_subset(f)
            )));
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn s(a: &FiniteAlgebra, names: &str) -> Subset {
        a.subset_from_names(names).unwrap()
    }

    fn listed(a: &FiniteAlgebra, fs: &[Subset]) -> Vec<String> {
        fs.iter().map(|f| a.format_subset(f)).collect()
    }

    #[test]
    fn filters_of_orthomodular6() {
        let a = catalog::orthomodular6();
        assert!(is_filter(&a, &s(&a, "a,1")).unwrap().holds());
        let v = is_filter(&a, &s(&a, "a,b")).unwrap();
        assert!(!v.holds());
        assert!(!is_filter(&a, &s(&a, "a,b,1")).unwrap().holds());
        let fs = enumerate_filters(&a, &Gates::default()).unwrap();
        assert_eq!(listed(&a, &fs), ["{1}", "{a,1}", "{b,1}", "{c,1}", "{d,1}", "{0,a,b,c,d,1}"]);
    }

    #[test]
    fn deductive_systems_of_orthomodular6() {
        let a = catalog::orthomodular6();
        assert!(!is_deductive_system(&a, &s(&a, "a,1")).unwrap().holds());
        assert!(is_deductive_system(&a, &s(&a, "1")).unwrap().holds());
        assert!(is_deductive_system(&a, &Subset::full(6)).unwrap().holds());
        let ds = enumerate_deductive_systems(&a, &Gates::default()).unwrap();
        assert_eq!(listed(&a, &ds), ["{1}", "{0,a,b,c,d,1}"]);
    }

    #[test]
    fn small_families() {
        let b = catalog::boolean2();
        assert_eq!(listed(&b, &enumerate_filters(&b, &Gates::default()).unwrap()), ["{1}", "{0,1}"]);
        let l = catalog::lukasiewicz(3);
        let g = Gates::default();
        assert_eq!(enumerate_filters(&l, &g).unwrap(), enumerate_deductive_systems(&l, &g).unwrap());
        let w = catalog::weakly_linear5();
        let fs = enumerate_filters(&w, &g).unwrap();
        assert!(fs.contains(&Subset::singleton(5, w.one())) && fs.contains(&Subset::full(5)));
        for f in &fs {
            for h in &fs {
                assert!(fs.contains(&f.intersection(h)));
            }
        }
    }

    #[test]
    fn ideals() {
        for a in catalog::all() {
            assert!(is_ideal(&a, &Subset::singleton(a.order(), a.zero())).unwrap().holds());
            assert!(is_ideal(&a, &Subset::full(a.order())).unwrap().holds());
        }
        let a = catalog::orthomodular6();
        // brute-force oracle verdict for {0, c}
        assert!(is_ideal(&a, &s(&a, "0,c")).unwrap().holds());
        assert!(!is_ideal(&a, &Subset::empty(6)).unwrap().holds());
    }

    #[test]
    fn generation() {
        let a = catalog::orthomodular6();
        assert_eq!(generated_filter(&a, &s(&a, "b")).unwrap(), s(&a, "b,1"));
        assert_eq!(generated_filter(&a, &Subset::empty(6)), Err(Error::EmptyGenerators));
        for alg in catalog::all() {
            let n = alg.order();
            let one = Subset::singleton(n, alg.one());
            assert_eq!(generated_filter(&alg, &one).unwrap(), one);
            let zero = Subset::singleton(n, alg.zero());
            assert!(generated_filter(&alg, &zero).unwrap().is_full());
        }
    }

    #[test]
    fn extension() {
        let a = catalog::orthomodular6();
        let x = |n: &str| a.element(n).unwrap();
        assert_eq!(extend_filter(&a, &s(&a, "1"), x("a")).unwrap(), s(&a, "a,1"));
        assert!(extend_filter(&a, &s(&a, "a,1"), x("b")).unwrap().is_full());
        assert_eq!(extend_filter(&a, &s(&a, "a,1"), x("a")).unwrap(), s(&a, "a,1"));
        assert!(matches!(extend_filter(&a, &s(&a, "a,b"), x("a")), Err(Error::NotInFamily { .. })));
    }

    #[test]
    fn maximality() {
        let a = catalog::orthomodular6();
        let g = Gates::default();
        assert!(is_maximal(&a, &s(&a, "a,1"), Family::Filters, &g).unwrap());
        assert!(is_maximal(&a, &s(&a, "1"), Family::DeductiveSystems, &g).unwrap());
        assert!(!is_maximal(&a, &s(&a, "1"), Family::Filters, &g).unwrap());
        assert!(matches!(
            is_maximal(&a, &s(&a, "a,1"), Family::DeductiveSystems, &g),
            Err(Error::NotInFamily { .. })
        ));
        // without enumeration the generation route decides
        let tight = Gates { subsets: 2, ..g };
        assert!(is_maximal(&a, &s(&a, "a,1"), Family::Filters, &tight).unwrap());
        assert!(!is_maximal(&a, &s(&a, "1"), Family::Filters, &tight).unwrap());
    }

    #[test]
    fn strong_maximality() {
        let a = catalog::orthomodular6();
        assert!(!is_strongly_maximal(&a, &s(&a, "a,1")).unwrap());
        assert_eq!(strongly_maximal_witness(&a, &s(&a, "a,1")), a.element("b"));
        assert!(!is_strongly_maximal(&a, &s(&a, "1")).unwrap());
        for alg in catalog::all() {
            assert!(is_strongly_maximal(&alg, &Subset::full(alg.order())).unwrap());
        }
    }

    #[test]
    fn primality() {
        let a = catalog::orthomodular6();
        assert!(!is_prime(&a, &s(&a, "1")).unwrap().holds());
        let w = catalog::weakly_linear5();
        assert!(is_prime(&w, &s(&w, "1")).unwrap().holds());
        for alg in catalog::all() {
            assert!(is_prime(&alg, &Subset::full(alg.order())).unwrap().holds());
        }
    }

    #[test]
    fn perspectivity() {
        for alg in catalog::all() {
            for x in alg.elements() {
                assert!(are_perspective(&alg, x, x));
                assert_eq!(are_perspective(&alg, x, alg.zero()), x == alg.zero());
            }
        }
        let a = catalog::orthomodular6();
        let (x, y) = (a.element("a").unwrap(), a.element("c").unwrap());
        assert!(are_perspective(&a, a.meet(x, y), a.meet(y, x)));
    }

    #[test]
    fn commutative_filters() {
        let a = catalog::orthomodular6();
        // brute-force oracle: the condition holds on every non-empty subset
        for bits in 1..64u64 {
            assert!(is_commutative_filter(&a, &Subset::from_bits(6, bits)).unwrap().holds());
        }
    }

    #[test]
    fn linearity() {
        let w = catalog::weakly_linear5();
        assert!(is_weakly_linear(&w).unwrap().holds());
        assert!(is_quasi_linear(&w).unwrap().holds());
        let (x, y) = q_incomparable_pair(&w).unwrap();
        assert_eq!((w.name(x), w.name(y)), ("a", "c"));
        assert_eq!(q_incomparable_pair(&catalog::lukasiewicz(4)), None);
        let a = catalog::orthomodular6();
        assert!(!is_weakly_linear(&a).unwrap().holds());
        // exhaustive pair scan oracle verdict
        assert!(!is_quasi_linear(&a).unwrap().holds());
        assert!(is_weakly_linear(&catalog::boolean2()).unwrap().holds());
        assert!(is_quasi_linear(&catalog::lukasiewicz(3)).unwrap().holds());
    }

    #[test]
    fn weak_linear_suite() {
        assert!(weakly_linear_identity_suite(&catalog::weakly_linear5()).unwrap().passed());
        for n in 2..=5 {
            assert!(weakly_linear_identity_suite(&catalog::lukasiewicz(n)).unwrap().passed());
        }
        assert!(matches!(
            weakly_linear_identity_suite(&catalog::orthomodular6()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn width_mismatch() {
        let a = catalog::orthomodular6();
        assert!(matches!(is_filter(&a, &Subset::full(5)), Err(Error::WidthMismatch { .. })));
    }

    #[test]
    fn classification_of_maximal_filter() {
        let a = catalog::orthomodular6();
        let c = classify(&a, &s(&a, "a,1"), &Gates::default()).unwrap();
        assert!(c.filter.holds() && !c.deductive_system.holds());
        assert_eq!(c.maximal_filter, Some(true));
        assert_eq!(c.maximal_ds, None);
        assert!(!c.strongly_maximal && c.proper);
    }
}
