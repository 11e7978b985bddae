//! The sixteen flavorings of two trefoils fall into three composite knots:
//! two granny knots and the square knot.
use knotsum::orbit::{classify, normal_form, orbit_bruteforce, FlavorVector};
use knotsum::tabulate::composite_name;
use knotsum::{FactorList, PrimeTable};

fn main() {
    let table = PrimeTable::bundled();
    let trefoil = table.lookup("3_1").unwrap().clone();
    println!("3_1 is {}", trefoil.symmetry);
    let p = FactorList::from_pairs([(trefoil, 2)]).unwrap();

    for class in classify(&p) {
        let sym = class.symmetry.unwrap();
        println!();
        println!(
            "{}  symmetry {}  orbit size {}",
            composite_name(&p, &class.representative),
            sym.symmetry_type(),
            class.orbit_size
        );
        for x in orbit_bruteforce(&p, &class.representative).unwrap() {
            println!("    {x}");
        }
    }

    let all: Vec<FlavorVector> = FlavorVector::all(&p).collect();
    let reps: std::collections::BTreeSet<_> =
        all.iter().map(|x| normal_form(&p, x).unwrap()).collect();
    println!();
    println!("{} flavor vectors, {} normal forms", all.len(), reps.len());
}
