#![allow(dead_code)]

use qwalg::search::enumerate_qw;
use qwalg::{catalog, FiniteAlgebra, Gates};

/// Catalog algebras followed by every search model of order at most 4.
pub fn corpus() -> Vec<(String, FiniteAlgebra)> {
    let mut out: Vec<(String, FiniteAlgebra)> =
        catalog::named().into_iter().map(|(n, a)| (n.to_string(), a)).collect();
    for n in 1..=4 {
        let r = enumerate_qw(n, None, &Gates::default()).unwrap();
        for (i, a) in r.algebras().enumerate() {
            out.push((qwalg::report::model_name(n, i), a));
        }
    }
    out
}

/// Every completion of the entries not fixed by `1 -> x = x`, `x -> 1 = 1`,
/// `x -> x = 1` and `0 -> x = 1`, with zero at 0 and one at n - 1, kept when
/// the axiom checker accepts it.
pub fn brute_force_qw(n: usize) -> Vec<FiniteAlgebra> {
    if n == 1 {
        return vec![catalog::trivial()];
    }
    let one = n - 1;
    let free: Vec<(usize, usize)> = (1..one)
        .flat_map(|x| (0..one).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    let total = n.pow(free.len() as u32);
    for code in 0..total {
        let mut t = vec![vec![one; n]; n];
        t[one] = (0..n).collect();
        let mut c = code;
        for &(x, y) in &free {
            t[x][y] = c % n;
            c /= n;
        }
        let a = FiniteAlgebra::new(FiniteAlgebra::default_names(n), t, 0, one).unwrap();
        if qwalg::axioms::is_qw(&a) {
            out.push(a);
        }
    }
    out
}
