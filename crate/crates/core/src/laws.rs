//! Ground-instance checking of the standard identities and implications of
//! BE, involutive BE and QW algebras.
//!
//! Each [`Law`] is a predicate over `(x, y, z)` that must hold for every
//! tuple of an algebra in its class. Conditional laws are encoded as
//! implications and hold vacuously when the hypothesis fails. Law names are
//! the formulas themselves in ASCII: `->` arrow, `*` star, `+` join,
//! `^` meet, `.` product, `<=` and `<=Q` the two orders.

use serde::Serialize;

use crate::algebra::{ElementId as E, FiniteAlgebra as A};
use crate::axioms;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Class {
    Be,
    Bounded,
    Involutive,
    Qw,
}

pub struct Law {
    pub name: &'static str,
    pub arity: usize,
    pub class: Class,
    check: fn(&A, E, E, E) -> bool,
}

impl Law {
    pub fn holds(&self, a: &A, x: E, y: E, z: E) -> bool {
        (self.check)(a, x, y, z)
    }
}

#[inline]
fn imp(p: bool, q: bool) -> bool {
    !p || q
}

macro_rules! law {
    ($class:ident, $arity:expr, $name:expr, |$a:ident, $x:ident, $y:ident, $z:ident| $body:expr) => {
        Law {
            name: $name,
            arity: $arity,
            class: Class::$class,
            check: {
                #[allow(unused_variables)]
                fn f($a: &A, $x: E, $y: E, $z: E) -> bool {
                    $body
                }
                f
            },
        }
    };
}

pub static LAWS: &[Law] = &[
    // plain BE
    law!(Be, 2, "x->(y->x) = 1", |a, x, y, z| a.arrow(x, a.arrow(y, x)) == a.one()),
    law!(Be, 2, "x <= (x->y)->y", |a, x, y, z| a.leq(x, a.join(x, y))),
    // bounded
    law!(Bounded, 2, "x->y* = y->x*", |a, x, y, z| a.arrow(x, a.star(y)) == a.arrow(y, a.star(x))),
    law!(Bounded, 1, "x <= x**", |a, x, y, z| a.leq(x, a.star(a.star(x)))),
    // involutive
    law!(Involutive, 2, "x*->y = y*->x", |a, x, y, z| a.arrow(a.star(x), y) == a.arrow(a.star(y), x)),
    law!(Involutive, 2, "x*->y* = y->x", |a, x, y, z| a.arrow(a.star(x), a.star(y)) == a.arrow(y, x)),
    law!(Involutive, 3, "(x*->y)*->z = x*->(y*->z)", |a, x, y, z| {
        a.arrow(a.star(a.arrow(a.star(x), y)), z) == a.arrow(a.star(x), a.arrow(a.star(y), z))
    }),
    law!(Involutive, 3, "x->(y->z) = (x->y*)*->z", |a, x, y, z| {
        a.arrow(x, a.arrow(y, z)) == a.arrow(a.star(a.arrow(x, a.star(y))), z)
    }),
    law!(Involutive, 2, "x<=Q y implies x = y^x and y = x+y", |a, x, y, z| {
        imp(a.leq_q(x, y), x == a.meet(y, x) && y == a.join(x, y))
    }),
    law!(Involutive, 1, "x <=Q x", |a, x, y, z| a.leq_q(x, x)),
    law!(Involutive, 2, "x <=Q y and y <=Q x implies x = y", |a, x, y, z| {
        imp(a.leq_q(x, y) && a.leq_q(y, x), x == y)
    }),
    law!(Involutive, 2, "x^y = (x*+y*)*", |a, x, y, z| a.meet(x, y) == a.star(a.join(a.star(x), a.star(y)))),
    law!(Involutive, 2, "x+y = (x*^y*)*", |a, x, y, z| a.join(x, y) == a.star(a.meet(a.star(x), a.star(y)))),
    law!(Involutive, 2, "x <=Q y implies x <= y", |a, x, y, z| imp(a.leq_q(x, y), a.leq(x, y))),
    law!(Involutive, 1, "0 <=Q x <=Q 1", |a, x, y, z| a.leq_q(a.zero(), x) && a.leq_q(x, a.one())),
    law!(Involutive, 1, "0^x = x^0 = 0 and 1^x = x^1 = x", |a, x, y, z| {
        a.meet(a.zero(), x) == a.zero()
            && a.meet(x, a.zero()) == a.zero()
            && a.meet(a.one(), x) == x
            && a.meet(x, a.one()) == x
    }),
    law!(Involutive, 2, "x^(y^x) = y^x and x^(x^y) = x^y", |a, x, y, z| {
        a.meet(x, a.meet(y, x)) == a.meet(y, x) && a.meet(x, a.meet(x, y)) == a.meet(x, y)
    }),
    law!(Involutive, 3, "(x^y)->z = (y->x)->(y->z)", |a, x, y, z| {
        a.arrow(a.meet(x, y), z) == a.arrow(a.arrow(y, x), a.arrow(y, z))
    }),
    law!(Involutive, 3, "z->(x+y) = (x->y)->(z->y)", |a, x, y, z| {
        a.arrow(z, a.join(x, y)) == a.arrow(a.arrow(x, y), a.arrow(z, y))
    }),
    law!(Involutive, 2, "x^y <= x, y <= x+y", |a, x, y, z| {
        let (m, j) = (a.meet(x, y), a.join(x, y));
        a.leq(m, x) && a.leq(m, y) && a.leq(x, j) && a.leq(y, j)
    }),
    law!(Involutive, 3, "x, y <=Q z and z->x = z->y implies x = y", |a, x, y, z| {
        imp(a.leq_q(x, z) && a.leq_q(y, z) && a.arrow(z, x) == a.arrow(z, y), x == y)
    }),
    law!(Involutive, 2, "x <=Q y implies (y->x).y = x", |a, x, y, z| {
        imp(a.leq_q(x, y), a.odot(a.arrow(y, x), y) == x)
    }),
    law!(Involutive, 3, "x->(z.y*) = ((z->y).x)*", |a, x, y, z| {
        a.arrow(x, a.odot(z, a.star(y))) == a.star(a.odot(a.arrow(z, y), x))
    }),
    // quantum-Wajsberg
    law!(Qw, 2, "x.y = y.x", |a, x, y, z| a.odot(x, y) == a.odot(y, x)),
    law!(Qw, 3, "(x.y).z = x.(y.z)", |a, x, y, z| a.odot(a.odot(x, y), z) == a.odot(x, a.odot(y, z))),
    law!(Qw, 3, "(QW) iff (QW1) and (QW2)", |a, x, y, z| {
        let qw = a.arrow(x, a.meet(a.meet(x, y), a.meet(z, x))) == a.meet(a.arrow(x, y), a.arrow(x, z));
        let qw1 = a.arrow(x, a.meet(x, y)) == a.arrow(x, y);
        let qw2 = a.arrow(x, a.meet(y, a.meet(z, x))) == a.meet(a.arrow(x, y), a.arrow(x, z));
        qw && qw1 && qw2
    }),
    law!(Qw, 2, "x->(y^x) = x->y and (x->y)->(y^x) = x", |a, x, y, z| {
        a.arrow(x, a.meet(y, x)) == a.arrow(x, y) && a.arrow(a.arrow(x, y), a.meet(y, x)) == x
    }),
    law!(Qw, 2, "x <=Q x*->y and x <=Q y->x", |a, x, y, z| {
        a.leq_q(x, a.arrow(a.star(x), y)) && a.leq_q(x, a.arrow(y, x))
    }),
    law!(Qw, 2, "x->y = 0 iff x = 1 and y = 0", |a, x, y, z| {
        (a.arrow(x, y) == a.zero()) == (x == a.one() && y == a.zero())
    }),
    law!(Qw, 2, "(x->y)*^x = (x->y)*", |a, x, y, z| {
        let s = a.star(a.arrow(x, y));
        a.meet(s, x) == s
    }),
    law!(Qw, 2, "(x^y)^y = x^y and (x+y)+y = x+y", |a, x, y, z| {
        a.meet(a.meet(x, y), y) == a.meet(x, y) && a.join(a.join(x, y), y) == a.join(x, y)
    }),
    law!(Qw, 2, "x+(y^x) = x and x^(y+x) = x", |a, x, y, z| {
        a.join(x, a.meet(y, x)) == x && a.meet(x, a.join(y, x)) == x
    }),
    law!(Qw, 2, "x^y <=Q y <=Q x+y", |a, x, y, z| a.leq_q(a.meet(x, y), y) && a.leq_q(y, a.join(x, y))),
    law!(Qw, 2, "(x+y)->x = (y+x)->x = y->x", |a, x, y, z| {
        let r = a.arrow(y, x);
        a.arrow(a.join(x, y), x) == r && a.arrow(a.join(y, x), x) == r
    }),
    law!(Qw, 2, "(x+y)->y = (y+x)->y = x->y", |a, x, y, z| {
        let r = a.arrow(x, y);
        a.arrow(a.join(x, y), y) == r && a.arrow(a.join(y, x), y) == r
    }),
    law!(Qw, 2, "x <= y iff y^x = x", |a, x, y, z| a.leq(x, y) == (a.meet(y, x) == x)),
    law!(Qw, 2, "x <=Q y implies y = y+x", |a, x, y, z| imp(a.leq_q(x, y), y == a.join(y, x))),
    law!(Qw, 2, "x <=Q y implies y* <=Q x*", |a, x, y, z| imp(a.leq_q(x, y), a.leq_q(a.star(y), a.star(x)))),
    law!(Qw, 3, "x <=Q y implies y->z <=Q x->z and z->x <=Q z->y", |a, x, y, z| {
        imp(a.leq_q(x, y), a.leq_q(a.arrow(y, z), a.arrow(x, z)) && a.leq_q(a.arrow(z, x), a.arrow(z, y)))
    }),
    law!(Qw, 3, "x <=Q y implies x^z <=Q y^z and x+z <=Q y+z", |a, x, y, z| {
        imp(a.leq_q(x, y), a.leq_q(a.meet(x, z), a.meet(y, z)) && a.leq_q(a.join(x, z), a.join(y, z)))
    }),
    law!(Qw, 3, "(x^y)^(y^z) = (x^y)^z", |a, x, y, z| {
        a.meet(a.meet(x, y), a.meet(y, z)) == a.meet(a.meet(x, y), z)
    }),
    law!(Qw, 3, "x <=Q y and y <=Q z implies x <=Q z", |a, x, y, z| {
        imp(a.leq_q(x, y) && a.leq_q(y, z), a.leq_q(x, z))
    }),
    law!(Qw, 2, "x+y <=Q x*->y", |a, x, y, z| a.leq_q(a.join(x, y), a.arrow(a.star(x), y))),
    law!(Qw, 2, "(x*->y)*->(x->y*)* = x*->y", |a, x, y, z| {
        let l = a.arrow(a.star(x), y);
        a.arrow(a.star(l), a.star(a.arrow(x, a.star(y)))) == l
    }),
    law!(Qw, 2, "(x->y)*->(y->x)* = x->y", |a, x, y, z| {
        a.arrow(a.star(a.arrow(x, y)), a.star(a.arrow(y, x))) == a.arrow(x, y)
    }),
    law!(Qw, 2, "(y->x)->(x->y) = x->y", |a, x, y, z| a.arrow(a.arrow(y, x), a.arrow(x, y)) == a.arrow(x, y)),
    law!(Qw, 2, "(x->y)+(y->x) = 1", |a, x, y, z| a.join(a.arrow(x, y), a.arrow(y, x)) == a.one()),
    law!(Qw, 3, "(z^x)->(y^x) = (z^x)->y", |a, x, y, z| {
        let zx = a.meet(z, x);
        a.arrow(zx, a.meet(y, x)) == a.arrow(zx, y)
    }),
    law!(Qw, 2, "(x^y)*->(y^x)* = 1 and (x^y)->(y^x) = 1", |a, x, y, z| {
        let (p, q) = (a.meet(x, y), a.meet(y, x));
        a.leq(a.star(p), a.star(q)) && a.leq(p, q)
    }),
    law!(Qw, 2, "(x+y)*->(y+x)* = 1 and (x+y)->(y+x) = 1", |a, x, y, z| {
        let (p, q) = (a.join(x, y), a.join(y, x));
        a.leq(a.star(p), a.star(q)) && a.leq(p, q)
    }),
    law!(Qw, 2, "x^y = 0 iff y^x = 0", |a, x, y, z| (a.meet(x, y) == a.zero()) == (a.meet(y, x) == a.zero())),
    law!(Qw, 2, "x+y = 1 iff y+x = 1", |a, x, y, z| (a.join(x, y) == a.one()) == (a.join(y, x) == a.one())),
    law!(Qw, 3, "x->(y->z) = (x.y)->z", |a, x, y, z| a.arrow(x, a.arrow(y, z)) == a.arrow(a.odot(x, y), z)),
    law!(Qw, 3, "x <=Q y->z implies x.y <= z", |a, x, y, z| {
        imp(a.leq_q(x, a.arrow(y, z)), a.leq(a.odot(x, y), z))
    }),
    law!(Qw, 3, "x.y <= z implies x <= y->z", |a, x, y, z| imp(a.leq(a.odot(x, y), z), a.leq(x, a.arrow(y, z)))),
    law!(Qw, 2, "(x->y).x <= y", |a, x, y, z| a.leq(a.odot(a.arrow(x, y), x), y)),
    law!(Qw, 3, "x <=Q y implies x.z <=Q y.z", |a, x, y, z| {
        imp(a.leq_q(x, y), a.leq_q(a.odot(x, z), a.odot(y, z)))
    }),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawViolation {
    pub law: &'static str,
    pub elements: Vec<E>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BatteryReport {
    pub laws_checked: usize,
    pub instances: usize,
    /// First violating tuple of each failing law.
    pub violations: Vec<LawViolation>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Highest class the algebra belongs to, or `None` if it is not even BE.
pub fn class_of(a: &A) -> Option<Class> {
    let r = axioms::verify_qw(a);
    if r.is_qw() {
        Some(Class::Qw)
    } else if r.is_involutive() {
        Some(Class::Involutive)
    } else if r.is_bounded() {
        Some(Class::Bounded)
    } else if r.is_be() {
        Some(Class::Be)
    } else {
        None
    }
}

/// Checks every law the algebra's class admits over all tuples.
pub fn run_battery(a: &A) -> BatteryReport {
    let mut report = BatteryReport::default();
    let Some(class) = class_of(a) else {
        return report;
    };
    let n = a.order();
    for law in LAWS.iter().filter(|l| l.class <= class) {
        report.laws_checked += 1;
        report.instances += n.pow(law.arity as u32);
        let zs: Vec<E> = if law.arity >= 3 { a.elements().collect() } else { vec![a.one()] };
        let ys: Vec<E> = if law.arity >= 2 { a.elements().collect() } else { vec![a.one()] };
        'scan: for x in a.elements() {
            for &y in &ys {
                for &z in &zs {
                    if !law.holds(a, x, y, z) {
                        let elements = [x, y, z][..law.arity].to_vec();
                        report.violations.push(LawViolation { law: law.name, elements });
                        break 'scan;
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = LAWS.iter().map(|l| l.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), LAWS.len());
    }

    #[test]
    fn catalog_passes() {
        for (name, a) in catalog::named() {
            let r = run_battery(&a);
            assert_eq!(r.laws_checked, LAWS.len(), "{name}");
            assert!(r.passed(), "{name}: {:?}", r.violations);
        }
    }

    #[test]
    fn be_only_algebra_skips_higher_classes() {
        // x -> y = 1 except 1 -> y = y: bounded BE, but q** != q.
        let a = A::from_fn(vec!["p".into(), "q".into(), "1".into()], 0, 2, |x, y| {
            if x == 2 { y } else { 2 }
        })
        .unwrap();
        assert_eq!(class_of(&a), Some(Class::Bounded));
        let r = run_battery(&a);
        assert_eq!(r.laws_checked, LAWS.iter().filter(|l| l.class <= Class::Bounded).count());
    }
}
