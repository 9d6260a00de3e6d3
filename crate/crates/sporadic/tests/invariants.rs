//! Cross-module invariants and property tests.

use num_bigint::BigInt;
use proptest::prelude::*;
use sporadic::catalog;
use sporadic::laurent::diagonal::diagonal_prefix;
use sporadic::laurent::parse::parse;
use sporadic::laurent::{ExponentMap, LaurentPoly, Prune, UnimodularMap};
use sporadic::polytope::origin_only_interior;
use sporadic::search::{canonical_form, symmetry_group};

/// Every registered generator, with its constant-term series rewritten as the
/// diagonal of 1/(1 - x_1...x_{d+1} A), matches the plain constant-term
/// sequence. Requires A times the denominator monomial to be a polynomial,
/// which holds for every generator except F's degree-doubled form.
#[test]
fn cts_equals_diagonal_of_rational_lift() {
    let depth = 6;
    for entry in catalog::all() {
        for (i, cp) in entry.ct_polys.iter().enumerate() {
            let a = &cp.poly;
            let d = a.dim();
            if d > 3 || (0..d).any(|v| a.min_exponent(v) < -1) {
                continue;
            }
            let mut terms: Vec<(Vec<i64>, BigInt)> = Vec::new();
            for (e, c) in a.sorted_terms() {
                let mut lifted: Vec<i64> = e.as_slice().iter().map(|&v| v as i64 + 1).collect();
                lifted.push(1);
                terms.push((lifted, c.clone()));
            }
            let q = LaurentPoly::from_terms(d + 1, terms).unwrap();
            let diag = diagonal_prefix(&q, depth).unwrap();
            let cts = a.ct_sequence(depth).unwrap();
            assert_eq!(diag, cts, "{} generator #{i}", entry.name);
        }
    }
}

/// No catalog recurrence ever hits a non-exact division up to n = 200.
#[test]
fn recurrences_stay_integral_to_two_hundred() {
    for entry in catalog::all() {
        let terms = entry.recurrence_terms(200).unwrap();
        assert_eq!(terms.len(), 201);
    }
}

/// The power-carrying table formula and the power-free multinomial form of B
/// agree; this is the reformulation everything else builds on.
#[test]
fn b_table_formula_matches_powerfree_form() {
    let table = catalog::binomial_terms("B", 10).unwrap();
    let powerfree =
        catalog::prop12_terms(catalog::Prop12Sequence::B, 10).unwrap();
    assert_eq!(table, powerfree);
}

/// Origin-only verdicts are invariant under unimodular exponent maps.
#[test]
fn polytope_verdict_invariant_under_unimodular_maps() {
    let maps3 = [
        ExponentMap::new(3, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).unwrap(),
        ExponentMap::new(3, &[vec![-1, 0, 0], vec![-1, -1, 0], vec![-1, -1, -1]]).unwrap(),
        ExponentMap::new(3, &[vec![1, 2, 0], vec![0, 1, 0], vec![0, 0, -1]]).unwrap(),
    ];
    for name in ["delta", "eta", "s18", "L3"] {
        let poly = &catalog::get(name).unwrap().witness_poly().poly;
        let before = origin_only_interior(poly).unwrap().passed();
        for m in &maps3 {
            let image = poly.substitute(m).unwrap();
            let after = origin_only_interior(&image).unwrap().passed();
            assert_eq!(before, after, "{name} under {m:?}");
        }
    }
}

/// If f matches a target prefix, so does its canonical representative: the
/// group maps are unimodular, hence constant terms of powers are invariant.
#[test]
fn canonical_representative_has_the_same_prefix() {
    let group = symmetry_group(2);
    let f = parse("(y+1)*(x+1)*(y+x+1)*(x*y)^-1", 2).unwrap();
    let key = canonical_form(&f, &group).unwrap();
    let representative = parse(&key, 2).unwrap();
    assert_eq!(
        f.ct_sequence(8).unwrap(),
        representative.ct_sequence(8).unwrap()
    );
}

fn arb_poly(dim: usize) -> impl Strategy<Value = LaurentPoly> {
    let term = (
        proptest::collection::vec(-3i64..=3, dim),
        -4i64..=4,
    );
    proptest::collection::vec(term, 1..=4).prop_map(move |terms| {
        LaurentPoly::from_terms(
            dim,
            terms
                .into_iter()
                .map(|(e, c)| (e, BigInt::from(c)))
                .collect::<Vec<_>>(),
        )
        .unwrap()
    })
}

/// Random unimodular maps as products of elementary operations.
fn arb_unimodular(dim: usize) -> impl Strategy<Value = ExponentMap> {
    let op = (0..3u8, 0..dim, 0..dim, -2i64..=2);
    proptest::collection::vec(op, 0..6).prop_map(move |ops| {
        let mut rows: Vec<Vec<i64>> = (0..dim)
            .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
            .collect();
        for (kind, a, b, k) in ops {
            match kind {
                0 => rows.swap(a, b),
                1 => rows[a].iter_mut().for_each(|v| *v = -*v),
                _ => {
                    if a != b {
                        let rb = rows[b].clone();
                        for (va, vb) in rows[a].iter_mut().zip(rb) {
                            *va += k * vb;
                        }
                    }
                }
            }
        }
        ExponentMap::new(dim, &rows).expect("elementary products are unimodular")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constant_term_of_products_commutes(a in arb_poly(2), b in arb_poly(2)) {
        prop_assert_eq!(
            a.mul(&b).unwrap().constant_term(),
            b.mul(&a).unwrap().constant_term()
        );
    }

    #[test]
    fn print_then_parse_is_identity(a in arb_poly(2)) {
        let printed = a.to_string();
        let reparsed = parse(&printed, 2).unwrap();
        prop_assert_eq!(&reparsed, &a);
        prop_assert_eq!(reparsed.to_string(), printed);
    }

    #[test]
    fn binary_and_iterative_powers_agree(a in arb_poly(2), n in 0u64..=5) {
        prop_assert_eq!(a.pow(n).unwrap(), a.pow_iterative(n).unwrap());
    }

    #[test]
    fn unimodular_maps_preserve_constant_terms(
        a in arb_poly(2),
        m in arb_unimodular(2),
        n in 0u64..=6,
    ) {
        prop_assert!(m.is_unimodular());
        let image = a.substitute(&m).unwrap();
        prop_assert_eq!(
            image.pow(n).unwrap().constant_term(),
            a.pow(n).unwrap().constant_term()
        );
    }

    #[test]
    fn pruned_ct_sequence_matches_unpruned(a in arb_poly(2)) {
        prop_assert_eq!(
            a.ct_sequence_with(7, Prune::Off).unwrap(),
            a.ct_sequence_with(7, Prune::Reachability).unwrap()
        );
    }

    #[test]
    fn three_variable_unimodular_invariance(a in arb_poly(3), m in arb_unimodular(3)) {
        let image = a.substitute(&m).unwrap();
        prop_assert_eq!(
            image.ct_sequence(4).unwrap(),
            a.ct_sequence(4).unwrap()
        );
    }

    #[test]
    fn canonical_form_is_group_invariant(a in arb_poly(2), m in arb_signed_permutation()) {
        let group = symmetry_group(2);
        let image = a.substitute(m.as_map()).unwrap();
        prop_assert_eq!(
            canonical_form(&a, &group).unwrap(),
            canonical_form(&image, &group).unwrap()
        );
    }
}

fn arb_signed_permutation() -> impl Strategy<Value = UnimodularMap> {
    (0..8usize).prop_map(|i| {
        let group = symmetry_group(2);
        group[i].clone()
    })
}
