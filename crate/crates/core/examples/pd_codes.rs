//! Parse, validate and transform planar diagram codes.
//!
//!     cargo run --example pd_codes
//!     cargo run --example pd_codes -- "[[1,-4,-2,-3],[3,2,-4,4]]"
use knotsum::pdcode::{parse_quads, validate};
use knotsum::{GammaElement, PdCode};

const TREFOIL: &str = "[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,3]]";

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| TREFOIL.to_string());

    let quads = match parse_quads(&input) {
        Ok(q) => q,
        Err(e) => {
            eprintln!("parse error: {e}");
            std::process::exit(2);
        }
    };
    if let Err(v) = validate(&quads) {
        println!("invalid: {v}");
        return;
    }
    let code = PdCode::new(quads).unwrap();
    println!("diagram   {code}");
    println!("crossings {}", code.crossing_count());
    println!("canonical {}", code.canonical_form());

    for g in GammaElement::ALL {
        let image = code.apply_gamma(g);
        println!(
            "{g:>8}  {image}  same diagram: {}",
            image.diagram_equal(&code)
        );
    }
}
