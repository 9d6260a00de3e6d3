//! Registry of the fifteen sporadic Apéry-like sequences, the two classical
//! Apéry sequences and the third-order Legendrian sequence L3.
//!
//! Each entry binds a name to its recurrence parameters, its binomial-sum
//! formula and every registered constant-term generator, together with the
//! expected congruence and polytope properties. Alternative generators whose
//! constant-term series is only known empirically are flagged as such and
//! excluded from proof-status reporting.

pub mod binomial;
pub mod prop12;
pub mod recurrence;

use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::laurent::json::PolyJson;
use crate::laurent::{parse::parse, LaurentPoly};

pub use binomial::Formula;
pub use prop12::{prop12_terms, Prop12Sequence};
pub use recurrence::{RecurrenceFamily, RecurrenceSpec};

/// Whether a claim is backed by a published proof or only by computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProofStatus {
    Proven,
    Empirical,
}

/// A registered constant-term generator for a sequence.
#[derive(Clone, Debug)]
pub struct CtPoly {
    /// Factored source expression, parseable by [`crate::laurent::parse::parse`].
    pub expression: &'static str,
    pub poly: LaurentPoly,
    /// Whether `CT(poly^n) = u_n` is proven or only observed.
    pub status: ProofStatus,
    /// Expected verdict of the origin-only interior test for this polynomial.
    pub origin_only: bool,
}

/// One catalog record.
#[derive(Clone, Debug)]
pub struct SequenceEntry {
    pub name: &'static str,
    pub other_names: &'static [&'static str],
    /// True for the fifteen sporadic sequences proper.
    pub sporadic: bool,
    pub recurrence: RecurrenceSpec,
    pub formula: Formula,
    pub ct_polys: Vec<CtPoly>,
    /// Index into `ct_polys` of the polynomial used for polytope verdicts.
    pub polytope_witness: usize,
    /// Expected sequence-level verdict: is there a registered generator whose
    /// Newton polytope has the origin as its only interior lattice point?
    pub polytope_origin_only: bool,
    /// Non-origin interior points expected for the witness (η only).
    pub expected_witnesses: &'static [[i64; 3]],
    pub expected_gauss_order: u32,
    pub gauss_order_status: ProofStatus,
    /// Largest order for which Gauss congruences are proven in the literature.
    pub proven_gauss_order: u32,
    /// Dwork-style congruences expected (fails only for η).
    pub d3_expected: bool,
    /// Valuation lower bound covered by the Delaygue-style corollary.
    pub valuation_covered: bool,
}

impl SequenceEntry {
    pub fn recurrence_terms(&self, n_max: usize) -> Result<Vec<BigInt>> {
        self.recurrence.terms(n_max)
    }

    pub fn binomial_terms(&self, n_max: usize) -> Result<Vec<BigInt>> {
        self.formula.terms(n_max)
    }

    /// Constant-term prefix of the `idx`-th registered generator.
    pub fn ct_terms(&self, idx: usize, n_max: usize) -> Result<Vec<BigInt>> {
        let p = self
            .ct_polys
            .get(idx)
            .ok_or_else(|| Error::Precondition(format!("{} has no generator #{idx}", self.name)))?;
        p.poly
            .ct_sequence_with(n_max, crate::laurent::Prune::Reachability)
    }

    pub fn witness_poly(&self) -> &CtPoly {
        &self.ct_polys[self.polytope_witness]
    }
}

struct PolyDef {
    expr: &'static str,
    dim: usize,
    status: ProofStatus,
    origin_only: bool,
}

struct EntryDef {
    name: &'static str,
    other_names: &'static [&'static str],
    sporadic: bool,
    recurrence: RecurrenceSpec,
    formula: Formula,
    polys: &'static [PolyDef],
    witness: usize,
    origin_only: bool,
    expected_witnesses: &'static [[i64; 3]],
    gauss: (u32, ProofStatus, u32),
    valuation_covered: bool,
}

use ProofStatus::{Empirical, Proven};

const ETA_WITNESSES: &[[i64; 3]] = &[
    [0, 0, 1],
    [0, 1, 0],
    [0, 1, 1],
    [1, 0, 0],
    [1, 0, 1],
    [1, 1, 0],
];

static DEFS: &[EntryDef] = &[
    EntryDef {
        name: "A",
        other_names: &["Franel numbers"],
        sporadic: true,
        recurrence: RecurrenceSpec::Zagier2 { a: 7, b: -8, lambda: 2 },
        formula: Formula::A,
        polys: &[PolyDef {
            expr: "(x+1)*(y+1)*(x+y)*(x*y)^-1",
            dim: 2,
            status: Proven,
            origin_only: true,
        }],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Proven, 3),
        valuation_covered: true,
    },
    EntryDef {
        name: "B",
        other_names: &[],
        sporadic: true,
        recurrence: RecurrenceSpec::Zagier2 { a: 9, b: 27, lambda: 3 },
        formula: Formula::B,
        polys: &[
            PolyDef {
                expr: "(x+y+1)*(x^2+y^2-x*y-x-y+1)*(-x*y)^-1",
                dim: 2,
                status: Proven,
                origin_only: true,
            },
            // Zagier's homogeneous three-variable generator; its support lies
            // in the plane x+y+z = 0, so the polytope test is degenerate.
            PolyDef {
                expr: "(x+y+z)*(x^2+y^2+z^2-x*y-y*z-z*x)*(-x*y*z)^-1",
                dim: 3,
                status: Proven,
                origin_only: false,
            },
        ],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (2, Proven, 2),
        valuation_covered: true,
    },
    EntryDef {
        name: "C",
        other_names: &[],
        sporadic: true,
        recurrence: RecurrenceSpec::Zagier2 { a: 10, b: 9, lambda: 3 },
        formula: Formula::C,
        polys: &[PolyDef {
            expr: "(x+y+1)*(x*y+x+y)*(x*y)^-1",
            dim: 2,
            status: Proven,
            origin_only: true,
        }],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Proven, 3),
        valuation_covered: true,
    },
    EntryDef {
        name: "D",
        other_names: &["Apéry numbers (second order)"],
        sporadic: true,
        recurrence: RecurrenceSpec::Zagier2 { a: 11, b: -1, lambda: 3 },
        formula: Formula::D,
        polys: &[PolyDef {
            expr: "(x+1)*(y+1)*(x+y+1)*(x*y)^-1",
            dim: 2,
            status: Proven,
            origin_only: true,
        }],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Proven, 3),
        valuation_covered: true,
    },
    EntryDef {
        name: "E",
        other_names: &[],
        sporadic: true,
        recurrence: RecurrenceSpec::Zagier2 { a: 12, b: 32, lambda: 4 },
        formula: Formula::E,
        polys: &[PolyDef {
            expr: "(x*y+x+y-1)*(x*y-x-y-1)*(-x*y)^-1",
            dim: 2,
            status: Proven,
            origin_only: true,
        }],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Empirical, 2),
        valuation_covered: true,
    },
    EntryDef {
        name: "F",
        other_names: &[],
        sporadic: true,
        recurrence: RecurrenceSpec::Zagier2 { a: 17, b: 72, lambda: 6 },
        formula: Formula::F,
        polys: &[
            PolyDef {
                expr: "(-x+y+1)*(x-y+1)*(x+y-1)*(x+y+1)*(x^2+y^2+1)*(x*y)^-2",
                dim: 2,
                status: Proven,
                origin_only: false,
            },
            // P(x,y) above equals Q(x^2,y^2) for this Q, which does satisfy
            // the origin-only condition and serves as the polytope witness.
            PolyDef {
                expr: "(x+y+1)*(x^2+y^2-2*x*y-2*x-2*y+1)*(-x*y)^-1",
                dim: 2,
                status: Proven,
                origin_only: true,
            },
        ],
        witness: 1,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (2, Empirical, 1),
        valuation_covered: true,
    },
    EntryDef {
        name: "delta",
        other_names: &["Almkvist-Zudilin numbers"],
        sporadic: true,
        recurrence: RecurrenceSpec::AlmkvistZudilin3 { a: 7, b: 3, c: 81 },
        formula: Formula::Delta,
        polys: &[
            PolyDef {
                expr: "(y-z+1)*(-x+y+z)*(x+z+1)*(x+y-1)*(x*y*z)^-1",
                dim: 3,
                status: Proven,
                origin_only: true,
            },
            PolyDef {
                expr: "(x*y+y*z+z*x)*(x^2+y^2+z^2-x*y-y*z-z*x+x+y+z+1)*(x*y*z)^-1",
                dim: 3,
                status: Proven,
                origin_only: true,
            },
        ],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Empirical, 1),
        valuation_covered: true,
    },
    EntryDef {
        name: "eta",
        other_names: &[],
        sporadic: true,
        recurrence: RecurrenceSpec::AlmkvistZudilin3 { a: 11, b: 5, c: 125 },
        formula: Formula::Eta,
        polys: &[PolyDef {
            expr: "(z*x+x*y-y*z-x-1)*(x*y+y*z-z*x-y-1)*(y*z+z*x-x*y-z-1)*(x*y*z)^-1",
            dim: 3,
            status: Proven,
            origin_only: false,
        }],
        witness: 0,
        origin_only: false,
        expected_witnesses: ETA_WITNESSES,
        gauss: (3, Empirical, 1),
        valuation_covered: false,
    },
    EntryDef {
        name: "alpha",
        other_names: &["Domb numbers"],
        sporadic: true,
        recurrence: RecurrenceSpec::AlmkvistZudilin3 { a: 10, b: 4, c: 64 },
        formula: Formula::Alpha,
        polys: &[
            PolyDef {
                expr: "(-x-y-z+1)*(x-y)*(x-y+z+1)*(x+y-z+1)*(x*y*z)^-1",
                dim: 3,
                status: Proven,
                origin_only: true,
            },
            PolyDef {
                expr: "(x+y+z+1)*(x*y*z+x*y+y*z+z*x)*(x*y*z)^-1",
                dim: 3,
                status: Proven,
                origin_only: true,
            },
        ],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Proven, 3),
        valuation_covered: true,
    },
    EntryDef {
        name: "epsilon",
        other_names: &[],
        sporadic: true,
        recurrence: RecurrenceSpec::AlmkvistZudilin3 { a: 12, b: 4, c: 16 },
        formula: Formula::Epsilon,
        polys: &[PolyDef {
            expr: "(x+1)*(y+1)*(z+1)*(x+y+z+1)*(x*y*z)^-1",
            dim: 3,
            status: Proven,
            origin_only: true,
        }],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Proven, 3),
        valuation_covered: true,
    },
    EntryDef {
        name: "zeta",
        other_names: &[],
        sporadic: true,
        recurrence: RecurrenceSpec::AlmkvistZudilin3 { a: 9, b: 3, c: -27 },
        formula: Formula::Zeta,
        polys: &[PolyDef {
            expr: "(x+y+z)*(x+y+z+x*y+y*z+z*x+x*y*z)*(x*y*z)^-1",
            dim: 3,
            status: Proven,
            origin_only: true,
        }],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Proven, 3),
        valuation_covered: true,
    },
    EntryDef {
        name: "gamma",
        other_names: &["Apéry numbers"],
        sporadic: true,
        recurrence: RecurrenceSpec::AlmkvistZudilin3 { a: 17, b: 5, c: 1 },
        formula: Formula::Gamma,
        polys: &[
            PolyDef {
                expr: "(y+z)*(x+1)*(x+y+1)*(x+y+z)*(x*y*z)^-1",
                dim: 3,
                status: Proven,
                origin_only: true,
            },
            // Symmetric alternative; its constant-term series matches only
            // empirically, and its factors are not {-1,0,1}-good.
            PolyDef {
                expr: "(x+y+z+1)*(x^2*y+x*y^2+y^2*z+y*z^2+z^2*x+z*x^2+x*y+y*z+z*x+2*x*y*z)*(x*y*z)^-1",
                dim: 3,
                status: Empirical,
                origin_only: true,
            },
        ],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Proven, 3),
        valuation_covered: true,
    },
    EntryDef {
        name: "s7",
        other_names: &[],
        sporadic: true,
        recurrence: RecurrenceSpec::Cooper3 { a: 13, b: 4, c: -27, d: 3 },
        formula: Formula::S7,
        polys: &[PolyDef {
            expr: "(x-1)*(y+1)*(x+z)*(y-x-z+1)*(x*y*z)^-1",
            dim: 3,
            status: Proven,
            origin_only: true,
        }],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Proven, 3),
        valuation_covered: true,
    },
    EntryDef {
        name: "s10",
        other_names: &["Yang-Zudilin numbers"],
        sporadic: true,
        recurrence: RecurrenceSpec::Cooper3 { a: 6, b: 2, c: -64, d: 4 },
        formula: Formula::S10,
        polys: &[PolyDef {
            expr: "(x+1)*(y+1)*(z+1)*(x*y*z+1)*(x*y*z)^-1",
            dim: 3,
            status: Proven,
            origin_only: true,
        }],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Proven, 3),
        valuation_covered: true,
    },
    EntryDef {
        name: "s18",
        other_names: &[],
        sporadic: true,
        recurrence: RecurrenceSpec::Cooper3 { a: 14, b: 6, c: 192, d: -12 },
        formula: Formula::S18,
        polys: &[
            PolyDef {
                expr: "(x^2+y^2+z^2-x*y-y*z-z*x-x+y-z)*(x^2+y^2+z^2+x*y+y*z-z*x+x+y+z)*(-x*y*z)^-1",
                dim: 3,
                status: Proven,
                origin_only: true,
            },
            // Symmetric good alternative, matching only empirically. The
            // denominator carries a minus sign so the first constant term
            // comes out +6 rather than -6.
            PolyDef {
                expr: "(x*y+y*z+z*x+x+y+z)*(x^2+y^2+z^2-x*y-y*z-z*x-x-y-z+1)*(-x*y*z)^-1",
                dim: 3,
                status: Empirical,
                origin_only: true,
            },
        ],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Proven, 3),
        valuation_covered: true,
    },
    EntryDef {
        name: "apery_a",
        other_names: &["a_n"],
        sporadic: false,
        recurrence: RecurrenceSpec::AlmkvistZudilin3 { a: 17, b: 5, c: 1 },
        formula: Formula::Gamma,
        polys: &[PolyDef {
            expr: "(x+y)*(z+1)*(x+y+z)*(y+z+1)*(x*y*z)^-1",
            dim: 3,
            status: Proven,
            origin_only: true,
        }],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Proven, 3),
        valuation_covered: true,
    },
    EntryDef {
        name: "apery_b",
        other_names: &["b_n"],
        sporadic: false,
        recurrence: RecurrenceSpec::Zagier2 { a: 11, b: -1, lambda: 3 },
        formula: Formula::D,
        polys: &[PolyDef {
            expr: "(1+x)*(1+y)*(1+x+y)*(x*y)^-1",
            dim: 2,
            status: Proven,
            origin_only: true,
        }],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (3, Proven, 3),
        valuation_covered: true,
    },
    EntryDef {
        name: "L3",
        other_names: &["third-order Legendrian sequence"],
        sporadic: false,
        recurrence: RecurrenceSpec::AlmkvistZudilin3 { a: 16, b: 8, c: 256 },
        formula: Formula::L3,
        polys: &[PolyDef {
            expr: "(-x+y+z+1)*(x-y+z+1)*(x+y-z+1)*(x+y+z-1)*(x*y*z)^-1",
            dim: 3,
            status: Proven,
            origin_only: true,
        }],
        witness: 0,
        origin_only: true,
        expected_witnesses: &[],
        gauss: (1, Empirical, 1),
        valuation_covered: false,
    },
];

static CATALOG: OnceLock<Vec<SequenceEntry>> = OnceLock::new();

/// Every catalog entry, in canonical order.
pub fn all() -> &'static [SequenceEntry] {
    CATALOG.get_or_init(|| {
        DEFS.iter()
            .map(|d| SequenceEntry {
                name: d.name,
                other_names: d.other_names,
                sporadic: d.sporadic,
                recurrence: d.recurrence,
                formula: d.formula,
                ct_polys: d
                    .polys
                    .iter()
                    .map(|p| CtPoly {
                        expression: p.expr,
                        poly: parse(p.expr, p.dim)
                            .unwrap_or_else(|e| panic!("catalog entry {}: {e}", d.name)),
                        status: p.status,
                        origin_only: p.origin_only,
                    })
                    .collect(),
                polytope_witness: d.witness,
                polytope_origin_only: d.origin_only,
                expected_witnesses: d.expected_witnesses,
                expected_gauss_order: d.gauss.0,
                gauss_order_status: d.gauss.1,
                proven_gauss_order: d.gauss.2,
                d3_expected: d.origin_only,
                valuation_covered: d.valuation_covered,
            })
            .collect()
    })
}

/// Look up an entry by name (case-insensitive fallback).
pub fn get(name: &str) -> Result<&'static SequenceEntry> {
    let entries = all();
    if let Some(e) = entries.iter().find(|e| e.name == name) {
        return Ok(e);
    }
    let lower = name.to_lowercase();
    let mut hit = None;
    for e in entries {
        if e.name.to_lowercase() == lower {
            if hit.is_some() {
                hit = None;
                break;
            }
            hit = Some(e);
        }
    }
    hit.ok_or_else(|| Error::UnknownSequence(name.to_string()))
}

/// Canonical name list.
pub fn names() -> Vec<&'static str> {
    all().iter().map(|e| e.name).collect()
}

/// The fifteen sporadic sequences.
pub fn sporadic() -> impl Iterator<Item = &'static SequenceEntry> {
    all().iter().filter(|e| e.sporadic)
}

/// Binomial-sum prefix for a named sequence.
pub fn binomial_terms(name: &str, n_max: usize) -> Result<Vec<BigInt>> {
    get(name)?.binomial_terms(n_max)
}

/// Recurrence prefix for a named sequence.
pub fn recurrence_terms(name: &str, n_max: usize) -> Result<Vec<BigInt>> {
    get(name)?.recurrence_terms(n_max)
}

#[derive(Serialize)]
struct RecurrenceExport {
    family: RecurrenceFamily,
    params: Vec<i64>,
}

#[derive(Serialize)]
struct FormulaExport {
    id: Formula,
    description: &'static str,
}

#[derive(Serialize)]
struct PolyExport {
    expression: &'static str,
    status: ProofStatus,
    origin_only: bool,
    poly: PolyJson,
}

#[derive(Serialize)]
struct EntryExport {
    name: &'static str,
    other_names: &'static [&'static str],
    sporadic: bool,
    recurrence: RecurrenceExport,
    formula: FormulaExport,
    expected_gauss_order: u32,
    gauss_order_status: ProofStatus,
    proven_gauss_order: u32,
    polytope_origin_only: bool,
    d3_expected: bool,
    valuation_covered: bool,
    ct_polys: Vec<PolyExport>,
}

#[derive(Serialize)]
struct CatalogExport {
    sequences: Vec<EntryExport>,
}

/// Full registry as canonical JSON.
pub fn export_json() -> String {
    let export = CatalogExport {
        sequences: all()
            .iter()
            .map(|e| EntryExport {
                name: e.name,
                other_names: e.other_names,
                sporadic: e.sporadic,
                recurrence: RecurrenceExport {
                    family: e.recurrence.family(),
                    params: e.recurrence.params(),
                },
                formula: FormulaExport {
                    id: e.formula,
                    description: e.formula.description(),
                },
                expected_gauss_order: e.expected_gauss_order,
                gauss_order_status: e.gauss_order_status,
                proven_gauss_order: e.proven_gauss_order,
                polytope_origin_only: e.polytope_origin_only,
                d3_expected: e.d3_expected,
                valuation_covered: e.valuation_covered,
                ct_polys: e
                    .ct_polys
                    .iter()
                    .map(|p| PolyExport {
                        expression: p.expression,
                        status: p.status,
                        origin_only: p.origin_only,
                        poly: p.poly.to_json(),
                    })
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string(&export).expect("catalog serializes")
}

/// SHA-256 of the canonical JSON export, hex-encoded.
pub fn checksum() -> String {
    let mut hasher = Sha256::new();
    hasher.update(export_json().as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_eighteen_entries() {
        assert_eq!(all().len(), 18);
        assert_eq!(sporadic().count(), 15);
    }

    #[test]
    fn lookup_by_name() {
        let d = get("D").unwrap();
        assert_eq!(
            d.recurrence,
            RecurrenceSpec::Zagier2 { a: 11, b: -1, lambda: 3 }
        );
        assert_eq!(d.ct_polys[0].expression, "(x+1)*(y+1)*(x+y+1)*(x*y)^-1");
        let eta = get("eta").unwrap();
        assert!(!eta.polytope_origin_only);
        assert!(matches!(get("nonexistent"), Err(Error::UnknownSequence(_))));
    }

    #[test]
    fn zagier_parameter_table() {
        let zagier: Vec<Vec<i64>> = all()
            .iter()
            .filter(|e| e.sporadic && matches!(e.recurrence, RecurrenceSpec::Zagier2 { .. }))
            .map(|e| e.recurrence.params())
            .collect();
        assert_eq!(
            zagier,
            vec![
                vec![7, -8, 2],
                vec![9, 27, 3],
                vec![10, 9, 3],
                vec![11, -1, 3],
                vec![12, 32, 4],
                vec![17, 72, 6],
            ]
        );
    }

    #[test]
    fn az_and_cooper_parameter_tables() {
        let az: Vec<Vec<i64>> = all()
            .iter()
            .filter(|e| {
                e.sporadic && matches!(e.recurrence, RecurrenceSpec::AlmkvistZudilin3 { .. })
            })
            .map(|e| e.recurrence.params())
            .collect();
        assert_eq!(
            az,
            vec![
                vec![7, 3, 81],
                vec![11, 5, 125],
                vec![10, 4, 64],
                vec![12, 4, 16],
                vec![9, 3, -27],
                vec![17, 5, 1],
            ]
        );
        let cooper: Vec<Vec<i64>> = all()
            .iter()
            .filter(|e| e.sporadic && matches!(e.recurrence, RecurrenceSpec::Cooper3 { .. }))
            .map(|e| e.recurrence.params())
            .collect();
        assert_eq!(
            cooper,
            vec![vec![13, 4, -27, 3], vec![6, 2, -64, 4], vec![14, 6, 192, -12]]
        );
    }

    #[test]
    fn every_generator_matches_recurrence_prefix() {
        for entry in all() {
            let rec = entry.recurrence_terms(5).unwrap();
            for (i, _) in entry.ct_polys.iter().enumerate() {
                let cts = entry.ct_terms(i, 5).unwrap();
                assert_eq!(cts, rec, "{} generator #{i}", entry.name);
            }
        }
    }

    #[test]
    fn export_is_deterministic() {
        assert_eq!(export_json(), export_json());
        assert_eq!(checksum().len(), 64);
    }
}
