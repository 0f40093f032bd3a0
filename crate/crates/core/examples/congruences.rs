//! Compare the congruence lattice of small QW algebras with the congruences
//! induced by their deductive systems.
//!
//! cargo run --example congruences -- 5

use qwalg::congruence::{congruence_from_ds, enumerate_congruences};
use qwalg::search::enumerate_qw;
use qwalg::structure::enumerate_deductive_systems;
use qwalg::Gates;

fn main() -> qwalg::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let g = Gates::default();
    for n in 1..=max {
        for (i, a) in enumerate_qw(n, None, &g)?.algebras().enumerate() {
            let induced = enumerate_deductive_systems(&a, &g)?
                .iter()
                .map(|f| congruence_from_ds(&a, f))
                .collect::<qwalg::Result<Vec<_>>>()?;
            let all = enumerate_congruences(&a, &g)?;
            for p in all.iter().filter(|p| !induced.contains(p)) {
                println!("order {n} model {i}: {} is not induced by its 1-class", p.format(&a));
            }
            println!("order {n} model {i}: {} congruences, {} induced", all.len(), induced.len());
        }
    }
    Ok(())
}
