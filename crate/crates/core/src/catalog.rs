//! Small named algebras used as fixtures and regression corpus.

use crate::algebra::FiniteAlgebra;
use crate::format::parse_algebra;

pub const ORTHOMODULAR6_SRC: &str = include_str!("../fixtures/om6.qw");
pub const WEAKLY_LINEAR5_SRC: &str = include_str!("../fixtures/wl5.qw");
pub const BOOLEAN4_SRC: &str = include_str!("../fixtures/boolean4.qw");

fn load(src: &str) -> FiniteAlgebra {
    parse_algebra(src).expect("bundled fixture parses").1
}

/// Six-element QW algebra derived from an orthomodular lattice.
pub fn orthomodular6() -> FiniteAlgebra {
    load(ORTHOMODULAR6_SRC)
}

/// Five-element weakly linear QW algebra with a non-total Q-order.
pub fn weakly_linear5() -> FiniteAlgebra {
    load(WEAKLY_LINEAR5_SRC)
}

/// Four-element Boolean algebra `{0, a, b, 1}`.
pub fn boolean4() -> FiniteAlgebra {
    load(BOOLEAN4_SRC)
}

/// Two-element Boolean implication.
pub fn boolean2() -> FiniteAlgebra {
    FiniteAlgebra::from_fn(FiniteAlgebra::default_names(2), 0, 1, |x, y| {
        if x <= y { 1 } else { 0 }
    })
    .expect("valid table")
}

/// Łukasiewicz chain with `n >= 2` elements, `x → y = min(1, 1 - x + y)`.
pub fn lukasiewicz(n: usize) -> FiniteAlgebra {
    assert!(n >= 2);
    let top = n - 1;
    FiniteAlgebra::from_fn(FiniteAlgebra::default_names(n), 0, top, |x, y| top.min(top - x + y))
        .expect("valid table")
}

/// The one-element algebra, `0 = 1`.
pub fn trivial() -> FiniteAlgebra {
    FiniteAlgebra::new(vec!["0".into()], vec![vec![0]], 0, 0).expect("valid table")
}

/// Named corpus: both worked fixtures, Boolean algebras of order 2 and 4,
/// Łukasiewicz chains of order 3 to 5 and the trivial algebra.
pub fn named() -> Vec<(&'static str, FiniteAlgebra)> {
    vec![
        ("om6", orthomodular6()),
        ("wl5", weakly_linear5()),
        ("boolean2", boolean2()),
        ("boolean4", boolean4()),
        ("luk3", lukasiewicz(3)),
        ("luk4", lukasiewicz(4)),
        ("luk5", lukasiewicz(5)),
        ("trivial", trivial()),
    ]
}

pub fn all() -> Vec<FiniteAlgebra> {
    named().into_iter().map(|(_, a)| a).collect()
}
