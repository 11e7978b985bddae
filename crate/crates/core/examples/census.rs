//! Tabulate composite knots and print their symmetry census. Pass `--csv` to
//! dump the table itself.
//!
//!     cargo run --release --example census -- 12
//!     cargo run --example census -- 8 --csv
use knotsum::tabulate::{census, tabulate, write_csv};
use knotsum::PrimeTable;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let max: u32 = args
        .iter()
        .find_map(|a| a.parse().ok())
        .unwrap_or(12);
    let rows = tabulate(&PrimeTable::bundled(), max);
    if args.iter().any(|a| a == "--csv") {
        write_csv(&rows, false, std::io::stdout().lock()).unwrap();
        return;
    }
    print!("{}", census(&rows));
}
