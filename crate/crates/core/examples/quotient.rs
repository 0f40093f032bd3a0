//! Build the quotient by every deductive system and compare the quotient
//! characterizations of strong maximality and primality.

use qwalg::congruence::{check_prime_quotient, check_strongly_maximal_quotient, quotient};
use qwalg::format::{serialize, AlgebraDocument};
use qwalg::structure::enumerate_deductive_systems;
use qwalg::{catalog, Gates};

fn main() -> qwalg::Result<()> {
    let a = catalog::boolean4().product(&catalog::lukasiewicz(3))?;
    for f in enumerate_deductive_systems(&a, &Gates::default())? {
        let q = quotient(&a, &f)?;
        let sm = check_strongly_maximal_quotient(&a, &f)?;
        let pr = check_prime_quotient(&a, &f)?;
        println!(
            "X/{}: {} classes; strongly maximal {} = locally finite {}; prime {} = weakly linear {}",
            a.format_subset(&f),
            q.algebra.order(),
            sm.on_subset,
            sm.on_quotient,
            pr.on_subset,
            pr.on_quotient
        );
        if q.algebra.order() == 3 {
            print!("{}", serialize(&AlgebraDocument::from_algebra("quotient", &q.algebra)));
        }
    }
    Ok(())
}
