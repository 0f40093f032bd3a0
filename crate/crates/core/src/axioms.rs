//! Exhaustive axiom checks.
//!
//! Checks run in the order BE → bounded → involutive → QW. A later class is
//! only evaluated when every earlier one holds; otherwise it is reported as
//! [`Verdict::NotEvaluated`], which is distinct from a failure. Failures carry
//! the lexicographically first violating tuple.

use serde::Serialize;

use crate::algebra::{ElementId, FiniteAlgebra};
use crate::error::{Error, Result};

/// A violating instance: the law that failed and the tuple it failed on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub law: &'static str,
    pub elements: Vec<ElementId>,
}

impl Witness {
    pub fn new(law: &'static str, elements: &[ElementId]) -> Self {
        Witness { law, elements: elements.to_vec() }
    }

    pub fn render(&self, a: &FiniteAlgebra) -> String {
        let names: Vec<&str> = self.elements.iter().map(|&x| a.name(x)).collect();
        format!("{} at ({})", self.law, names.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails { witness: Witness },
    NotEvaluated,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fails { witness } => Some(witness),
            _ => None,
        }
    }

    fn from_first(w: Option<Witness>) -> Self {
        match w {
            None => Verdict::Holds,
            Some(witness) => Verdict::Fails { witness },
        }
    }

    fn gated(ok: bool, f: impl FnOnce() -> Verdict) -> Verdict {
        if ok { f() } else { Verdict::NotEvaluated }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub be: Verdict,
    pub bounded: Verdict,
    pub involutive: Verdict,
    pub qw: Verdict,
    /// The split form `(QW₁) ∧ (QW₂)`, evaluated alongside `qw`.
    pub qw_split: Verdict,
    pub commutative: Verdict,
}

impl AxiomReport {
    pub fn is_be(&self) -> bool {
        self.be.holds()
    }
    pub fn is_bounded(&self) -> bool {
        self.bounded.holds()
    }
    pub fn is_involutive(&self) -> bool {
        self.involutive.holds()
    }
    pub fn is_qw(&self) -> bool {
        self.is_be() && self.is_bounded() && self.is_involutive() && self.qw.holds()
    }
    pub fn is_commutative(&self) -> bool {
        self.commutative.holds()
    }

    /// Whether `(QW)` and `(QW₁) ∧ (QW₂)` reached the same verdict.
    pub fn qw_forms_agree(&self) -> bool {
        self.qw.holds() == self.qw_split.holds()
    }
}

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

fn first_single(a: &FiniteAlgebra, law: &'static str, ok: impl Fn(ElementId) -> bool) -> Option<Witness> {
    a.elements().find(|&x| !ok(x)).map(|x| Witness::new(law, &[x]))
}

pub const BE1: &str = "x->x = 1";
pub const BE2: &str = "x->1 = 1";
pub const BE3: &str = "1->x = x";
pub const BE4: &str = "x->(y->z) = y->(x->z)";
pub const BOUNDED: &str = "0->x = 1";
pub const INVOLUTIVE: &str = "x** = x";
pub const QW: &str = "x->((x^y)^(z^x)) = (x->y)^(x->z)";
pub const QW1: &str = "x->(x^y) = x->y";
pub const QW2: &str = "x->(y^(z^x)) = (x->y)^(x->z)";
pub const COMMUTATIVE: &str = "x+y = y+x";

/// BE₁–BE₄.
pub fn check_be(a: &FiniteAlgebra) -> Verdict {
    let one = a.one();
    let w = first_single(a, BE1, |x| a.arrow(x, x) == one)
        .or_else(|| first_single(a, BE2, |x| a.arrow(x, one) == one))
        .or_else(|| first_single(a, BE3, |x| a.arrow(one, x) == x))
        .or_else(|| {
            first_triple(a, BE4, |x, y, z| a.arrow(x, a.arrow(y, z)) == a.arrow(y, a.arrow(x, z)))
        });
    Verdict::from_first(w)
}

pub fn check_bounded(a: &FiniteAlgebra) -> Verdict {
    Verdict::from_first(first_single(a, BOUNDED, |x| a.leq(a.zero(), x)))
}

pub fn check_involutive(a: &FiniteAlgebra) -> Verdict {
    Verdict::from_first(first_single(a, INVOLUTIVE, |x| a.star(a.star(x)) == x))
}

pub fn check_qw_axiom(a: &FiniteAlgebra) -> Verdict {
    Verdict::from_first(first_triple(a, QW, |x, y, z| {
        a.arrow(x, a.meet(a.meet(x, y), a.meet(z, x))) == a.meet(a.arrow(x, y), a.arrow(x, z))
    }))
}

pub fn check_qw_split(a: &FiniteAlgebra) -> Verdict {
    let w = first_pair(a, QW1, |x, y| a.arrow(x, a.meet(x, y)) == a.arrow(x, y)).or_else(|| {
        first_triple(a, QW2, |x, y, z| {
            a.arrow(x, a.meet(y, a.meet(z, x))) == a.meet(a.arrow(x, y), a.arrow(x, z))
        })
    });
    Verdict::from_first(w)
}

pub fn check_commutative(a: &FiniteAlgebra) -> Verdict {
    Verdict::from_first(first_pair(a, COMMUTATIVE, |x, y| a.join(x, y) == a.join(y, x)))
}

/// BE, bounded and involutive fragments of the report; QW is left unevaluated.
pub fn verify_be(a: &FiniteAlgebra) -> AxiomReport {
    let be = check_be(a);
    let bounded = Verdict::gated(be.holds(), || check_bounded(a));
    let involutive = Verdict::gated(bounded.holds(), || check_involutive(a));
    AxiomReport {
        be,
        bounded,
        involutive,
        qw: Verdict::NotEvaluated,
        qw_split: Verdict::NotEvaluated,
        commutative: check_commutative(a),
    }
}

/// Full report including `(QW)` and its split form.
pub fn verify_qw(a: &FiniteAlgebra) -> AxiomReport {
    let mut r = verify_be(a);
    if r.is_involutive() {
        r.qw = check_qw_axiom(a);
        r.qw_split = check_qw_split(a);
    }
    r
}

pub fn is_qw(a: &FiniteAlgebra) -> bool {
    verify_qw(a).is_qw()
}

pub fn is_commutative(a: &FiniteAlgebra) -> bool {
    check_commutative(a).holds()
}

/// A QW algebra is Wajsberg iff `≤` and `≤_Q` coincide.
pub fn is_wajsberg(a: &FiniteAlgebra) -> Result<bool> {
    let r = verify_qw(a);
    if !r.is_qw() {
        return Err(Error::NotQw(first_failure(&r, a)));
    }
    Ok(first_pair(a, "x<=y iff x<=_Q y", |x, y| a.leq(x, y) == a.leq_q(x, y)).is_none())
}

/// Describes the first failing class in the report.
pub fn first_failure(r: &AxiomReport, a: &FiniteAlgebra) -> String {
    for (class, v) in [("BE", &r.be), ("bounded", &r.bounded), ("involutive", &r.involutive), ("QW", &r.qw)] {
        if let Some(w) = v.witness() {
            return format!("{class}: {}", w.render(a));
        }
    }
    "no failure".to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn fixtures_are_qw() {
        for (name, a) in catalog::named() {
            let r = verify_qw(&a);
            assert!(r.is_qw(), "{name}: {}", first_failure(&r, &a));
            assert!(r.qw_forms_agree(), "{name}");
        }
    }

    #[test]
    fn boolean_implication_passes_be() {
        let r = verify_be(&catalog::boolean2());
        assert!(r.is_be() && r.is_bounded() && r.is_involutive());
        assert_eq!(r.qw, Verdict::NotEvaluated);
    }

    #[test]
    fn be3_failure_witness() {
        let a = crate::format::parse_algebra(include_str!("../fixtures/not_be.qw")).unwrap().1;
        let r = verify_qw(&a);
        let w = r.be.witness().unwrap();
        assert_eq!(w.law, BE3);
        assert_eq!(w.elements, vec![a.zero()]);
        assert_eq!(r.bounded, Verdict::NotEvaluated);
        assert_eq!(r.qw, Verdict::NotEvaluated);
        assert!(!r.is_qw());
    }

    #[test]
    fn perturbed_fixture_is_not_qw() {
        let om = catalog::orthomodular6();
        let (a, c) = (om.element("a").unwrap(), om.element("c").unwrap());
        let mut rows: Vec<Vec<usize>> = om
            .elements()
            .map(|x| om.elements().map(|y| om.arrow(x, y).index()).collect())
            .collect();
        rows[a.index()][c.index()] = om.one().index();
        let p = FiniteAlgebra::new(om.names().to_vec(), rows, 0, 5).unwrap();
        assert!(!verify_qw(&p).is_qw());
    }

    #[test]
    fn commutativity() {
        assert!(!is_commutative(&catalog::orthomodular6()));
        assert!(is_commutative(&catalog::lukasiewicz(3)));
        assert!(is_commutative(&catalog::boolean2()));
    }

    #[test]
    fn wajsberg() {
        assert_eq!(is_wajsberg(&catalog::orthomodular6()), Ok(false));
        assert_eq!(is_wajsberg(&catalog::weakly_linear5()), Ok(false));
        assert_eq!(is_wajsberg(&catalog::lukasiewicz(3)), Ok(true));
        let a = crate::format::parse_algebra(include_str!("../fixtures/not_be.qw")).unwrap().1;
        assert!(matches!(is_wajsberg(&a), Err(Error::NotQw(_))));
    }

    #[test]
    fn trivial_algebra_is_qw() {
        assert!(is_qw(&catalog::trivial()));
    }
}
