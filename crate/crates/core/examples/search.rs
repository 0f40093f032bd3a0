//! Enumerate QW algebras of a given order up to isomorphism.
//!
//! cargo run --release --example search -- 5

use std::time::Instant;

use qwalg::search::enumerate_qw;
use qwalg::Gates;

fn main() -> qwalg::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let start = Instant::now();
    let report = enumerate_qw(n, None, &Gates::default())?;
    println!(
        "order {n}: {} models, {} nodes, {} prunes, {} isomorph rejections ({:.2?})",
        report.count(),
        report.stats.nodes,
        report.stats.prunes,
        report.stats.isomorph_rejections,
        start.elapsed()
    );
    for (i, a) in report.algebras().enumerate() {
        let commutative = qwalg::axioms::is_commutative(&a);
        println!("model {i}: commutative = {commutative}");
        for x in a.elements() {
            let row: Vec<&str> = a.elements().map(|y| a.name(a.arrow(x, y))).collect();
            println!("  {:>2} | {}", a.name(x), row.join(" "));
        }
    }
    Ok(())
}
