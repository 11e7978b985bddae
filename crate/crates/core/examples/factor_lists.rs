//! Enumerate the prime factor lists of composites up to a crossing bound and
//! count their composite knots.
//!
//!     cargo run --example factor_lists -- 10
use knotsum::orbit::orbits_all;
use knotsum::prime_table::enumerate_factor_lists;
use knotsum::PrimeTable;

fn main() {
    let max: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("crossing bound"))
        .unwrap_or(9);
    let table = PrimeTable::bundled();
    let lists = enumerate_factor_lists(&table, max);
    println!("{} factor lists up to {max} crossings", lists.len());
    for p in &lists {
        let classes = orbits_all(p);
        let sizes: Vec<u64> = classes.iter().map(|c| c.orbit_size).collect();
        println!(
            "{:>3}  {:<24} {:>3} composites  orbit sizes {sizes:?}",
            p.total_crossings(),
            p.to_string(),
            classes.len()
        );
    }
}
