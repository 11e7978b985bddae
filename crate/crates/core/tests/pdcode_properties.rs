use knotsum::pdcode::{connected_sum_list, parse_quads, validate, PdCode, Quad};
use knotsum::{GammaElement, PrimeTable};
use proptest::prelude::*;

fn rotate(code: &PdCode, shift: i32) -> Vec<Quad> {
    let e = code.edge_count() as i32;
    code.crossings()
        .iter()
        .map(|q| q.map(|k| k.signum() * ((k.abs() - 1 + shift).rem_euclid(e) + 1)))
        .collect()
}

fn arb_summands() -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0usize..84, 0usize..4), 1..4)
}

fn build(summands: &[(usize, usize)]) -> PdCode {
    let table = PrimeTable::bundled();
    let parts: Vec<PdCode> = summands
        .iter()
        .map(|&(k, g)| table.records()[k].diagram.apply_gamma(GammaElement::from_index(g)))
        .collect();
    connected_sum_list(&parts).unwrap()
}

proptest! {
    #[test]
    fn sums_of_flavored_primes_are_valid(summands in arb_summands()) {
        let table = PrimeTable::bundled();
        let code = build(&summands);
        prop_assert_eq!(validate(code.crossings()), Ok(()));
        let expected: usize = summands.iter().map(|&(k, _)| table.records()[k].crossing_number as usize).sum();
        prop_assert_eq!(code.crossing_count(), expected);
        let mut labels: Vec<i32> = code.crossings().iter().flatten().copied().collect();
        labels.sort_unstable();
        let e = code.edge_count() as i32;
        let want: Vec<i32> = (-e..=e).filter(|&k| k != 0).collect();
        prop_assert_eq!(labels, want);
    }

    #[test]
    fn serialization_round_trips(summands in arb_summands()) {
        let code = build(&summands);
        let text = code.to_string();
        prop_assert!(!text.contains(' '));
        prop_assert_eq!(text.parse::<PdCode>().unwrap(), code);
    }

    #[test]
    fn canonical_form_ignores_rotation_and_order(
        summands in arb_summands(),
        shift in 0i32..64,
        seed in any::<u64>(),
    ) {
        let code = build(&summands);
        let mut quads = rotate(&code, shift);
        // deterministic shuffle of crossing order
        let len = quads.len();
        for i in (1..len).rev() {
            let j = (seed.rotate_left(i as u32) % (i as u64 + 1)) as usize;
            quads.swap(i, j);
        }
        let moved = PdCode::new(quads).unwrap();
        prop_assert!(moved.diagram_equal(&code));
        let canon = code.canonical_form();
        prop_assert_eq!(canon.canonical_form(), canon.clone());
        prop_assert_eq!(moved.canonical_form(), canon);
    }

    #[test]
    fn gamma_action_preserves_validity(summands in arb_summands(), g in 0usize..4, h in 0usize..4) {
        let code = build(&summands);
        let (g, h) = (GammaElement::from_index(g), GammaElement::from_index(h));
        let once = code.apply_gamma(h);
        prop_assert_eq!(validate(once.crossings()), Ok(()));
        prop_assert_eq!(once.crossing_count(), code.crossing_count());
        prop_assert!(code.apply_gamma(g.compose(h)).diagram_equal(&once.apply_gamma(g)));
    }
}

#[test]
fn every_prime_diagram_validates() {
    for r in PrimeTable::bundled().records() {
        assert_eq!(validate(r.diagram.crossings()), Ok(()), "{}", r.name);
        assert_eq!(r.diagram.crossing_count(), r.crossing_number as usize);
    }
}

#[test]
fn all_pairs_and_some_triples_sum_validly() {
    let table = PrimeTable::bundled();
    let recs = table.records();
    for a in recs {
        for b in recs {
            let s = a.diagram.connected_sum(&b.diagram).unwrap();
            assert_eq!(validate(s.crossings()), Ok(()));
            assert_eq!(s.crossing_count(), (a.crossing_number + b.crossing_number) as usize);
        }
    }
    for (i, a) in recs.iter().enumerate().step_by(7) {
        for b in recs.iter().skip(i % 5).step_by(11) {
            for c in recs.iter().step_by(13) {
                let s = connected_sum_list([&a.diagram, &b.diagram, &c.diagram]).unwrap();
                assert_eq!(validate(s.crossings()), Ok(()));
            }
        }
    }
}

#[test]
fn parse_reports_position_of_syntax_errors() {
    let err = parse_quads("[[4,-2,-5,1],[2,-6,-3 5]]").unwrap_err();
    assert_eq!(err.position, 22);
}
