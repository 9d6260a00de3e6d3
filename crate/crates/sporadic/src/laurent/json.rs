//! Canonical JSON form.
//!
//! `{"dim": d, "terms": [{"e": [...], "c": "<decimal>"}, ...]}` with terms in
//! the canonical descending lexicographic order and coefficients rendered as
//! decimal strings so no consumer can corrupt large integers.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::LaurentPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyJson {
    pub dim: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub e: Vec<i64>,
    pub c: String,
}

impl LaurentPoly {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            dim: self.dim(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(e, c)| TermJson {
                    e: e.to_vec(),
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            let c: BigInt = t.c.parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("invalid coefficient string `{}`", t.c),
            })?;
            terms.push((t.e.clone(), c));
        }
        LaurentPoly::from_terms(json.dim, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse::parse;

    #[test]
    fn json_round_trip() {
        let p = parse("(x+1)*(y+1)*(x+y+1)*(x*y)^-1", 2).unwrap();
        let j = p.to_json();
        assert_eq!(LaurentPoly::from_json(&j).unwrap(), p);
        // canonical order: exponent vectors strictly descending
        for w in j.terms.windows(2) {
            assert!(w[0].e > w[1].e);
        }
    }

    #[test]
    fn json_text_is_stable() {
        let p = parse("2 - x*y^-1", 2).unwrap();
        let s = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(
            s,
            r#"{"dim":2,"terms":[{"e":[1,-1],"c":"-1"},{"e":[0,0],"c":"2"}]}"#
        );
    }
}
