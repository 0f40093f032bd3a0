//! Relabel an algebra, recover the isomorphism and compare canonical forms.

use qwalg::catalog;
use qwalg::search::{canonical_form, is_isomorphic};

fn main() -> qwalg::Result<()> {
    let a = catalog::orthomodular6();
    let b = a.relabel(&[0, 2, 1, 4, 3, 5])?;
    let phi = is_isomorphic(&a, &b).expect("relabeling is an isomorphism");
    for x in a.elements() {
        println!("{} -> {}", a.name(x), b.names()[phi[x.index()]]);
    }
    println!("same canonical form: {}", canonical_form(&a) == canonical_form(&b));
    let c = canonical_form(&a).to_algebra();
    for x in c.elements() {
        let row: Vec<&str> = c.elements().map(|y| c.name(c.arrow(x, y))).collect();
        println!("{} | {}", c.name(x), row.join(" "));
    }
    println!("boolean4 ~ luk4: {}", is_isomorphic(&catalog::boolean4(), &catalog::lukasiewicz(4)).is_some());
    Ok(())
}
