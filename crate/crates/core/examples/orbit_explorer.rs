//! Act on a flavor vector by hand-built wreath elements and compare the orbit
//! found by search with the closed-form answers.
//!
//!     cargo run --example orbit_explorer -- 8_17 8_17 9_32
use knotsum::orbit::{
    normal_form, orbit_bruteforce, symmetry_group, FlavorVector, WreathBlock, WreathElement,
};
use knotsum::{FactorList, GammaElement, PrimeTable};

fn main() {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = vec!["8_17".into(), "8_17".into(), "4_1".into()];
    }
    let table = PrimeTable::bundled();
    let p = FactorList::from_factors(names.iter().map(|n| table.lookup(n).unwrap().clone()))
        .unwrap();
    for e in p.entries() {
        println!("{:<6} {}", e.record.name, e.record.symmetry);
    }

    // Mirror the first slot of every block, keep the rest.
    let x = FlavorVector::new(
        p.multiplicities()
            .map(|n| {
                let mut b = vec![GammaElement::IDENTITY; n];
                b[0] = GammaElement::MIRROR;
                b
            })
            .collect(),
    );
    println!();
    println!("x              {x}");

    // Cycle the slots of each block and reverse the first one.
    let w = WreathElement::new(
        p.multiplicities()
            .map(|n| {
                let mut gammas = vec![GammaElement::IDENTITY; n];
                gammas[0] = GammaElement::MIRROR_REVERSE;
                WreathBlock {
                    gammas,
                    perm: (0..n).map(|j| (j + 1) % n).collect(),
                }
            })
            .collect(),
    )
    .unwrap();
    println!("w in Σ(P)      {}", w.in_symmetry_group(&p));
    println!("w·x            {}", w.act(&x).unwrap());

    let orbit = orbit_bruteforce(&p, &x).unwrap();
    let nf = normal_form(&p, &x).unwrap();
    println!("normal form    {nf}");
    println!("orbit size     {}", orbit.len());
    println!("symmetry       {}", symmetry_group(&p, &x).unwrap().symmetry_type());
    for y in &orbit {
        assert_eq!(normal_form(&p, y).unwrap(), nf);
    }
}
