//! Connected sums of PD codes, including the flavored sums that name composites.
//!
//!     cargo run --example connected_sum
//!     cargo run --example connected_sum -- 3_1 4_1m 3_1r
use knotsum::pdcode::connected_sum_list;
use knotsum::{GammaElement, PdCode, PrimeTable};

fn main() {
    let d1: PdCode = "[[2,-6,-3,5],[6,-4,-1,3],[4,-2,-5,1]]".parse().unwrap();
    let d2: PdCode = "[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,3]]".parse().unwrap();
    println!("{d1} # {d2}");
    println!("  = {}", d1.connected_sum(&d2).unwrap());

    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = vec!["3_1".into(), "3_1m".into(), "4_1".into()];
    }
    let table = PrimeTable::bundled();
    let mut diagrams = Vec::new();
    for arg in &args {
        // Longest suffix first so "mr" wins over "r".
        let (name, flavor) = ["mr", "m", "r", ""]
            .iter()
            .find_map(|s| {
                let base = arg.strip_suffix(s)?;
                table.get(base).map(|_| (base, GammaElement::from_suffix(s).unwrap()))
            })
            .unwrap_or_else(|| panic!("unknown knot {arg}"));
        diagrams.push(table.get(name).unwrap().diagram.apply_gamma(flavor));
    }
    let sum = connected_sum_list(&diagrams).unwrap();
    println!();
    println!("{}", args.join(" # "));
    println!("  {} crossings", sum.crossing_count());
    println!("  {sum}");
}
