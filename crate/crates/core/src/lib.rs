//! Composite knots from prime factors.
//!
//! Given a multiset of prime knots, the composite knots that can be built from
//! them (allowing each factor to be mirrored and/or reversed) are the orbits of a
//! wreath-product group acting on assignments of flavors to factor slots. The
//! symmetry group of each composite falls out of the same action as the
//! projection of the diagonal elements that stabilize its orbit.
//!
//! - [`gamma`]: the four-element symmetry group Γ and its five subgroups.
//! - [`pdcode`]: PD-codes, the Γ action on diagrams, and connected sums.
//! - [`prime_table`]: the prime knot table and base prime factor lists.
//! - [`orbit`]: flavor vectors, wreath actions, orbits and symmetry groups.
//! - [`tabulate`]: composite knot tables and symmetry censuses.
//! - [`cli`]: the `knotsum` command line.
//!
//! ```
//! use knotsum::prime_table::PrimeTable;
//! use knotsum::tabulate::{census, tabulate};
//! use knotsum::gamma::SymmetryType;
//!
//! let rows = tabulate(&PrimeTable::bundled(), 6);
//! let names: Vec<_> = rows.iter().map(|r| r.composite_name.as_str()).collect();
//! assert_eq!(names, ["3_1 # 3_1", "3_1 # 3_1m", "3_1m # 3_1m"]);
//! assert_eq!(census(&rows).count(SymmetryType::Full), 1);
//! ```

pub mod cli;
pub mod gamma;
pub mod orbit;
pub mod pdcode;
pub mod prime_table;
pub mod tabulate;

pub use gamma::{GammaElement, SymmetrySubgroup, SymmetryType};
pub use orbit::{CompositeClass, FlavorVector, WreathElement};
pub use pdcode::PdCode;
pub use prime_table::{FactorList, PrimeKnotRecord, PrimeTable};
pub use tabulate::{Census, TableRow};
