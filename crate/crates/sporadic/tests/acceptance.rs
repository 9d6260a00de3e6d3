//! Acceptance suite: one test per criterion, each printing a PASS line when
//! it completes. Run with `cargo test --test acceptance -- --nocapture`.

use num_bigint::BigInt;
use sporadic::catalog::{self, prop12_terms, Prop12Sequence};
use sporadic::congruence::{
    d3_check, gauss_check, jacobsthal_check, lower_binom_check, lucas_check,
    valuation_bound_check,
};
use sporadic::laurent::diagonal::{diagonal_kernel, diagonal_prefix, matrix_to_ct_poly};
use sporadic::laurent::parse::parse;
use sporadic::laurent::Prune;
use sporadic::polytope::{origin_only_interior, InteriorVerdict};
use sporadic::search::{
    canonical_form, preset_support, search_matches, symmetry_group, SearchConfig, SearchTarget,
};

const DEPTH_2VAR: usize = 12;
const DEPTH_3VAR: usize = 10;

fn pass(criterion: &str) {
    println!("ACCEPTANCE {criterion}: PASS");
}

/// Recurrence vs binomial sum vs constant terms of every registered
/// generator, for every catalog entry.
#[test]
fn criterion_01_three_way_agreement() {
    for entry in catalog::all() {
        let recurrence = entry.recurrence_terms(DEPTH_2VAR.max(DEPTH_3VAR)).unwrap();
        let binomial = entry.binomial_terms(DEPTH_2VAR.max(DEPTH_3VAR)).unwrap();
        assert_eq!(binomial, recurrence, "{}: binomial vs recurrence", entry.name);
        for (i, cp) in entry.ct_polys.iter().enumerate() {
            let depth = if cp.poly.dim() <= 2 { DEPTH_2VAR } else { DEPTH_3VAR };
            let cts = entry.ct_terms(i, depth).unwrap();
            assert_eq!(
                cts,
                recurrence[..=depth],
                "{} generator #{i}: constant terms vs recurrence",
                entry.name
            );
        }
    }
    // anchors
    assert_eq!(
        catalog::recurrence_terms("gamma", 1).unwrap()[1],
        BigInt::from(5)
    );
    assert_eq!(catalog::recurrence_terms("D", 1).unwrap()[1], BigInt::from(3));
    pass("01 three-way agreement (depth 12 / 10)");
}

/// Power-free multinomial representations for B, F and delta.
#[test]
fn criterion_02_powerfree_forms() {
    for (seq, name) in [
        (Prop12Sequence::B, "B"),
        (Prop12Sequence::F, "F"),
        (Prop12Sequence::Delta, "delta"),
    ] {
        let expect = catalog::recurrence_terms(name, 8).unwrap();
        let got = prop12_terms(seq, 8).unwrap();
        assert_eq!(got, expect, "power-free form of {name}");
    }
    pass("02 power-free multinomial forms for B, F, delta (n <= 8)");
}

/// Second-order Gauss congruences for B.
#[test]
fn criterion_03_gauss_order_two_for_b() {
    let b = catalog::get("B").unwrap();
    let report = gauss_check(&b, 2, &[3, 5, 7], 2, 2).unwrap();
    assert!(report.passed(), "{:?}", report.counterexample);
    assert_eq!(report.checks, 12);
    pass("03 Gauss order 2 for B (p in {3,5,7}, k <= 2, n <= 2)");
}

/// Third-order Gauss congruences for gamma and D.
#[test]
fn criterion_04_gauss_order_three_for_apery() {
    for name in ["gamma", "D"] {
        let entry = catalog::get(name).unwrap();
        let report = gauss_check(&entry, 3, &[5, 7], 2, 2).unwrap();
        assert!(report.passed(), "{name}: {:?}", report.counterexample);
    }
    pass("04 Gauss order 3 for gamma and D (p in {5,7}, k <= 2, n <= 2)");
}

/// First-order Gauss congruences hold for every catalog sequence.
#[test]
fn criterion_05_gauss_order_one_everywhere() {
    for entry in catalog::all() {
        let report = gauss_check(&entry, 1, &[2, 3, 5], 2, 3).unwrap();
        assert!(report.passed(), "{}: {:?}", entry.name, report.counterexample);
    }
    pass("05 Gauss order 1 for all 18 sequences (p in {2,3,5}, k <= 2, n <= 3)");
}

/// Lucas congruences for the fifteen sporadic sequences.
#[test]
fn criterion_06_lucas_congruences() {
    for entry in catalog::sporadic() {
        for p in [2, 3, 5] {
            let report = lucas_check(&entry, p, 200).unwrap();
            assert!(
                report.passed(),
                "{} at p={p}: {:?}",
                entry.name,
                report.counterexample
            );
        }
    }
    pass("06 Lucas congruences for 15 sporadic sequences (p in {2,3,5}, n <= 200)");
}

/// Dwork-style congruences for the fourteen origin-only sporadic sequences.
#[test]
fn criterion_07_d3_congruences() {
    let covered: Vec<_> = catalog::sporadic().filter(|e| e.d3_expected).collect();
    assert_eq!(covered.len(), 14);
    for entry in covered {
        for p in [2, 3] {
            let report = d3_check(&entry, p, 2, 2, 8).unwrap();
            assert!(
                report.passed(),
                "{} at p={p}: {:?}",
                entry.name,
                report.counterexample
            );
        }
    }
    pass("07 D3 congruences for 14 origin-only sequences (p in {2,3}, s,m <= 2, n <= 8)");
}

/// Valuation lower bound v_p(u_n) >= alpha_p(u, n).
#[test]
fn criterion_08_valuation_bounds() {
    let covered: Vec<_> = catalog::sporadic().filter(|e| e.valuation_covered).collect();
    assert_eq!(covered.len(), 14);
    for entry in covered {
        for p in [3, 5] {
            let report = valuation_bound_check(&entry, p, 60).unwrap();
            assert!(
                report.passed(),
                "{} at p={p}: {:?}",
                entry.name,
                report.counterexample
            );
        }
    }
    pass("08 valuation bounds for 14 covered sequences (p in {3,5}, n <= 60)");
}

/// Polytope verdicts: every witness passes except eta, which fails with
/// exactly the six permutation witnesses.
#[test]
fn criterion_09_polytope_verdicts() {
    let mut passed = 0;
    for entry in catalog::all() {
        let verdict = origin_only_interior(&entry.witness_poly().poly).unwrap();
        match (&verdict, entry.polytope_origin_only) {
            (InteriorVerdict::Pass, true) => passed += 1,
            (InteriorVerdict::Fail { origin_interior, witnesses }, false) => {
                assert!(origin_interior, "{}: origin must still be interior", entry.name);
                let mut expect: Vec<Vec<i64>> = entry
                    .expected_witnesses
                    .iter()
                    .map(|w| w.to_vec())
                    .collect();
                expect.sort();
                assert_eq!(*witnesses, expect, "{}: witness set", entry.name);
            }
            (v, expected) => {
                panic!("{}: verdict {v:?} but expected origin_only={expected}", entry.name)
            }
        }
    }
    assert_eq!(passed, 17, "14 sporadic + apery_a + apery_b + L3 pass");
    pass("09 polytope verdicts (17 pass, eta fails with the 6 expected witnesses)");
}

/// Diagonal oracle equivalence for the known rational-function
/// representations and their MacMahon matrices.
#[test]
fn criterion_10_diagonal_oracle() {
    let depth = 5;
    let cases: &[(&str, &str, usize)] = &[
        // 1/((1-x1-x2)(1-x3-x4) - x1 x2 x3 x4)
        (
            "gamma",
            "x+y+z+w - x*z - x*w - y*z - y*w + x*y*z*w",
            4,
        ),
        // 1/((1-x1-x2)(1-x3) - x1 x2 x3)
        ("D", "x+y+z - x*z - y*z + x*y*z", 3),
        // 1/((1-x1)(1-x2)(1-x3) - x1 x2 x3)
        ("A", "x+y+z - x*y - x*z - y*z + 2*x*y*z", 3),
        // 1/(1 - x1 - x2 - x3 + 4 x1 x2 x3)
        ("A", "x+y+z - 4*x*y*z", 3),
        // 1/(1 - (x1+x2+x3-x4) - 27 x1 x2 x3 x4)
        ("delta", "x+y+z-w + 27*x*y*z*w", 4),
    ];
    for (name, q_text, dim) in cases {
        let expect = catalog::recurrence_terms(name, depth).unwrap();
        let q = parse(q_text, *dim).unwrap();
        let got = diagonal_prefix(&q, depth).unwrap();
        assert_eq!(got, expect, "diagonal for {name} via {q_text}");
    }

    let matrices: &[(&str, Vec<Vec<i64>>)] = &[
        ("gamma", vec![
            vec![1, 1, 1, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 1],
            vec![0, 1, 1, 1],
        ]),
        ("D", vec![vec![1, 1, 0], vec![1, 1, 1], vec![1, 0, 1]]),
        ("A", vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]),
        ("A", vec![vec![1, 1, 1], vec![1, 1, -1], vec![1, -1, 1]]),
        ("A", vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]),
        ("A", vec![vec![-1, 1, 1], vec![-1, -1, 1], vec![-1, -1, -1]]),
    ];
    for (name, m) in matrices {
        let expect = catalog::recurrence_terms(name, depth).unwrap();
        let q = diagonal_kernel(m).unwrap();
        assert_eq!(
            diagonal_prefix(&q, depth).unwrap(),
            expect,
            "matrix diagonal for {name}"
        );
        let ct_poly = matrix_to_ct_poly(m).unwrap();
        assert_eq!(
            ct_poly.ct_sequence_with(depth, Prune::Reachability).unwrap(),
            expect,
            "matrix constant terms for {name}"
        );
    }

    // the 4x4 matrix specializes (last variable set to 1) to the registered
    // three-variable generator of apery_a
    let gamma4 = matrix_to_ct_poly(&matrices[0].1).unwrap();
    let specialized = gamma4.substitute_one(3).unwrap();
    let registered = &catalog::get("apery_a").unwrap().ct_polys[0].poly;
    assert_eq!(&specialized, registered);

    pass("10 diagonal oracle equivalence (rational functions and matrices, n <= 5)");
}

/// Jacobsthal and lower-binomial lemmas on an exhaustive grid.
#[test]
fn criterion_11_binomial_lemmas() {
    let mut jacobsthal = 0u64;
    let mut lower = 0u64;
    for p in [3u64, 5, 7] {
        for n in 0..=60u64 {
            for m in 0..=n {
                assert!(
                    jacobsthal_check(n, m, p).unwrap(),
                    "jacobsthal fails at n={n}, m={m}, p={p}"
                );
                jacobsthal += 1;
                if m >= 1 {
                    let vp = |x: u64| (0..).take_while(|i| x % p.pow(*i + 1) == 0).count();
                    if vp(n) >= vp(m) {
                        assert!(
                            lower_binom_check(n, m, p).unwrap(),
                            "lower binomial fails at n={n}, m={m}, p={p}"
                        );
                        lower += 1;
                    }
                }
            }
        }
    }
    assert!(jacobsthal > 5000 && lower > 3000);
    pass("11 binomial lemmas on the exhaustive grid (n,m <= 60, p in {3,5,7})");
}

/// The bounded search rediscovers the A and D generators.
#[test]
fn criterion_12_search_smoke() {
    let config = SearchConfig {
        dim: 2,
        max_factors: 3,
        factor_support: preset_support("linear", 2).unwrap(),
        denominator_exp: 1,
        prefix_len: 8,
        targets: vec![
            SearchTarget::from_catalog("D", 8).unwrap(),
            SearchTarget::from_catalog("A", 8).unwrap(),
        ],
        candidate_cap: 1_000_000,
    };
    let out = search_matches(&config).unwrap();
    let group = symmetry_group(2);
    let known_d =
        canonical_form(&parse("(x+1)*(y+1)*(x+y+1)*(x*y)^-1", 2).unwrap(), &group).unwrap();
    let known_a =
        canonical_form(&parse("(x+1)*(y+1)*(x+y)*(x*y)^-1", 2).unwrap(), &group).unwrap();
    assert!(
        out.candidates
            .iter()
            .any(|c| c.matched_target == "D" && c.canonical_key == known_d),
        "D generator class not rediscovered"
    );
    assert!(
        out.candidates
            .iter()
            .any(|c| c.matched_target == "A" && c.canonical_key == known_a),
        "A generator class not rediscovered"
    );
    for c in &out.candidates {
        assert_eq!(c.prefix.len(), 8 + 3, "matches re-verified to depth 10");
    }
    pass("12 search smoke test (A and D rediscovered at prefix depth 8)");
}
