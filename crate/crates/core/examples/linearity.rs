//! Weak and quasi-linearity across the catalog and the order-6 models.

use qwalg::search::enumerate_qw;
use qwalg::structure::{is_quasi_linear, is_weakly_linear, q_incomparable_pair, weakly_linear_identity_suite};
use qwalg::{catalog, FiniteAlgebra, Gates};

fn describe(name: &str, a: &FiniteAlgebra) -> qwalg::Result<()> {
    let weak = is_weakly_linear(a)?;
    let quasi = is_quasi_linear(a)?;
    let pair = q_incomparable_pair(a).map(|(x, y)| format!("{} {}", a.name(x), a.name(y)));
    print!("{name:<10} weakly linear {:<5} quasi-linear {:<5}", weak.holds(), quasi.holds());
    if let Some(p) = pair {
        print!(" Q-incomparable: {p}");
    }
    if weak.holds() {
        print!(" identities hold: {}", weakly_linear_identity_suite(a)?.passed());
    }
    println!();
    Ok(())
}

fn main() -> qwalg::Result<()> {
    for (name, a) in catalog::named() {
        describe(name, &a)?;
    }
    for (i, a) in enumerate_qw(6, None, &Gates::default())?.algebras().enumerate() {
        describe(&format!("qw6_{i:03}"), &a)?;
    }
    Ok(())
}
