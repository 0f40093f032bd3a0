//! List filters and deductive systems with their classification.

use qwalg::structure::{classify, enumerate_deductive_systems, enumerate_filters, extend_filter};
use qwalg::{catalog, Gates};

fn main() -> qwalg::Result<()> {
    let a = catalog::orthomodular6();
    let g = Gates::default();
    for f in enumerate_filters(&a, &g)? {
        let c = classify(&a, &f, &g)?;
        println!(
            "{:<16} DS {:<5} maximal filter {:<5} strongly maximal {:<5} prime {}",
            a.format_subset(&f),
            c.deductive_system.holds(),
            c.maximal_filter == Some(true),
            c.strongly_maximal,
            c.prime.holds()
        );
    }
    let ds: Vec<String> = enumerate_deductive_systems(&a, &g)?.iter().map(|f| a.format_subset(f)).collect();
    println!("deductive systems: {}", ds.join(" "));

    let one = a.subset_from_names("1")?;
    for x in a.elements() {
        println!("filter generated by {{1, {}}}: {}", a.name(x), a.format_subset(&extend_filter(&a, &one, x)?));
    }
    Ok(())
}
