//! Check the axiom classes of an algebra file and run the identity battery.
//!
//! cargo run --example axioms -- fixtures/om6.qw

use qwalg::axioms::{first_failure, verify_qw};
use qwalg::format::parse_algebra;
use qwalg::laws::{class_of, run_battery};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "fixtures/om6.qw".into());
    let (name, a) = parse_algebra(&std::fs::read_to_string(&path)?)?;
    let r = verify_qw(&a);
    println!("{name}: {} elements, class {:?}", a.order(), class_of(&a));
    if r.is_qw() {
        println!("QW algebra; commutative = {}", r.is_commutative());
    } else {
        println!("first failure: {}", first_failure(&r, &a));
    }
    let battery = run_battery(&a);
    println!("{} laws over {} ground instances", battery.laws_checked, battery.instances);
    for v in &battery.violations {
        let names: Vec<&str> = v.elements.iter().map(|&x| a.name(x)).collect();
        println!("  violated: {} at ({})", v.law, names.join(", "));
    }
    Ok(())
}
