//! The Klein four-group of mirror/reverse operations, its five subgroups and
//! the symmetry types they stand for.
use knotsum::{GammaElement, SymmetrySubgroup, SymmetryType};

fn main() {
    println!("composition table");
    print!("{:>8}", "");
    for b in GammaElement::ALL {
        print!("{b:>9}");
    }
    println!();
    for a in GammaElement::ALL {
        print!("{a:>8}");
        for b in GammaElement::ALL {
            print!("{:>9}", a.compose(b));
        }
        println!();
    }

    println!();
    for kind in SymmetryType::ALL {
        let sub = kind.subgroup();
        let elements: Vec<String> = sub.elements().map(|g| g.to_string()).collect();
        let reps: Vec<String> = sub.cosets().iter().map(|g| g.to_string()).collect();
        println!(
            "{:<16} {{{}}}  coset reps {}",
            kind.token(),
            elements.join(", "),
            reps.join(" ")
        );
    }

    let inv = SymmetrySubgroup::from_name("invertible").unwrap();
    let neg = SymmetrySubgroup::from_name("neg_amphichiral").unwrap();
    println!();
    println!("invertible ∩ neg_amphichiral = {}", inv.intersect(neg).name());
}
