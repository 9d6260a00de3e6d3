//! Bounded search for "good" Laurent polynomials whose constant-term series
//! matches a target sequence prefix.
//!
//! A good polynomial factors into Laurent polynomials with coefficients in
//! {-1, 0, 1}. The search enumerates multisets of such factors over a fixed
//! monomial support, divides by a monomial denominator, prunes by the
//! symmetry group (variable permutations and inversions, all unimodular, so
//! constant terms of powers are invariant) and compares constant-term
//! prefixes against the targets with early exit at the first mismatch. Every
//! reported match is re-verified two terms past the configured depth.
//!
//! The search never claims completeness over any mathematically meaningful
//! class; the bounds are explicit in the config and echoed in the outcome.

use std::collections::BTreeSet;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{json::PolyJson, LaurentPoly, UnimodularMap};

/// Candidates per checkpoint shard.
pub const SHARD_SIZE: u64 = 1024;

const DEFAULT_CANDIDATE_CAP: u128 = 1_000_000;

/// Bounds for one search run. Factor coefficients are fixed to {-1, 0, 1}.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub dim: usize,
    pub max_factors: usize,
    /// Exponent vectors a factor may use.
    pub factor_support: Vec<Vec<i64>>,
    /// Candidates are divided by `(x_1 ... x_d)^denominator_exp`.
    pub denominator_exp: u32,
    /// Match depth; at least 4 (shorter prefixes over-match).
    pub prefix_len: usize,
    pub targets: Vec<SearchTarget>,
    /// Refuse to run when the factor-multiset count exceeds this.
    pub candidate_cap: u128,
}

#[derive(Clone, Debug)]
pub struct SearchTarget {
    pub name: String,
    /// `u_0 ..= u_{prefix_len + 2}` at least.
    pub prefix: Vec<BigInt>,
}

impl SearchTarget {
    /// Target built from a catalog sequence, deep enough for re-verification.
    pub fn from_catalog(name: &str, prefix_len: usize) -> Result<Self> {
        let entry = crate::catalog::get(name)?;
        Ok(SearchTarget {
            name: entry.name.to_string(),
            prefix: entry.recurrence_terms(prefix_len + 2)?,
        })
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if !(2..=3).contains(&self.dim) {
            return Err(Error::Precondition(format!(
                "search dimension must be 2 or 3, got {}",
                self.dim
            )));
        }
        if self.prefix_len < 4 {
            return Err(Error::Precondition(format!(
                "prefix_len {} too short; prefixes below 4 over-match",
                self.prefix_len
            )));
        }
        if self.targets.is_empty() {
            return Err(Error::Precondition("no search targets given".into()));
        }
        for t in &self.targets {
            if t.prefix.len() < self.prefix_len + 3 {
                return Err(Error::Precondition(format!(
                    "target {} prefix has {} terms; need prefix_len + 3 = {}",
                    t.name,
                    t.prefix.len(),
                    self.prefix_len + 3
                )));
            }
            if !t.prefix[0].is_one() {
                return Err(Error::Precondition(format!(
                    "target {} must start with u_0 = 1",
                    t.name
                )));
            }
        }
        for e in &self.factor_support {
            if e.len() != self.dim {
                return Err(Error::DimMismatch {
                    left: self.dim,
                    right: e.len(),
                });
            }
        }
        Ok(())
    }

    /// Number of factor multisets of size at most `max_factors`.
    pub fn estimate(&self) -> u128 {
        let f = 3u128
            .checked_pow(self.factor_support.len() as u32)
            .map(|v| v - 1)
            .unwrap_or(u128::MAX);
        let mut total: u128 = 0;
        for j in 0..=self.max_factors as u128 {
            // C(f + j - 1, j)
            let mut c: u128 = 1;
            for i in 0..j {
                c = c.saturating_mul(f + i).saturating_div(i + 1);
            }
            total = total.saturating_add(c);
        }
        total
    }
}

/// Named support presets for the CLI.
pub fn preset_support(name: &str, dim: usize) -> Result<Vec<Vec<i64>>> {
    let mut support = vec![vec![0i64; dim]];
    match name {
        "linear" => {
            for i in 0..dim {
                let mut e = vec![0i64; dim];
                e[i] = 1;
                support.push(e);
            }
        }
        "quadratic" => {
            for i in 0..dim {
                let mut e = vec![0i64; dim];
                e[i] = 1;
                support.push(e);
            }
            for i in 0..dim {
                for j in i..dim {
                    let mut e = vec![0i64; dim];
                    e[i] += 1;
                    e[j] += 1;
                    support.push(e);
                }
            }
        }
        other => {
            return Err(Error::Precondition(format!(
                "unknown support preset `{other}` (expected linear or quadratic)"
            )))
        }
    }
    Ok(support)
}

/// Documented probe for the open question whether the sequence η admits any
/// generator with the origin-only interior property. Running it makes no
/// assertion: matches, if any, still need a polytope check, and an empty
/// outcome only says this bounded space holds no such generator.
///
/// The space has about 1.7e9 multisets over the mixed-degree support below,
/// so the preset raises its own candidate cap; run it with a checkpoint file.
pub fn eta_probe_config() -> SearchConfig {
    let support = vec![
        vec![1, 1, 0],
        vec![0, 1, 1],
        vec![1, 0, 1],
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![0, 0, 0],
    ];
    SearchConfig {
        dim: 3,
        max_factors: 3,
        factor_support: support,
        denominator_exp: 1,
        prefix_len: 6,
        targets: vec![SearchTarget::from_catalog("eta", 6).expect("eta is registered")],
        candidate_cap: 2_000_000_000,
    }
}

/// The symmetry group used for canonical forms: variable permutations
/// composed with per-variable inversions. All elements are unimodular.
pub fn symmetry_group(dim: usize) -> Vec<UnimodularMap> {
    let perms = permutations(dim);
    let mut group = Vec::with_capacity(perms.len() << dim);
    for perm in &perms {
        for signs in 0..(1u32 << dim) {
            let rows: Vec<Vec<i64>> = (0..dim)
                .map(|i| {
                    let mut row = vec![0i64; dim];
                    row[perm[i]] = if signs >> i & 1 == 1 { -1 } else { 1 };
                    row
                })
                .collect();
            group.push(UnimodularMap::new(dim, &rows).expect("signed permutation"));
        }
    }
    group
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for shorter in permutations(n - 1) {
        for pos in 0..n {
            let mut p = shorter.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// Minimal canonical rendering of `a` over the symmetry group.
pub fn canonical_form(a: &LaurentPoly, group: &[UnimodularMap]) -> Result<String> {
    let mut best: Option<String> = None;
    for g in group {
        let image = a.substitute(g.as_map())?.to_string();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    }
    Ok(best.expect("group is nonempty"))
}

/// A match found by the search.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub poly: LaurentPoly,
    pub factors: Vec<LaurentPoly>,
    pub matched_target: String,
    pub prefix: Vec<BigInt>,
    pub canonical_key: String,
}

#[derive(Serialize)]
pub struct CandidateJson {
    pub target: String,
    pub expression: String,
    pub factors: Vec<String>,
    pub prefix: Vec<String>,
    pub canonical_key: String,
    pub poly: PolyJson,
}

impl Candidate {
    pub fn to_json(&self) -> CandidateJson {
        CandidateJson {
            target: self.matched_target.clone(),
            expression: self.poly.to_string(),
            factors: self.factors.iter().map(|f| f.to_string()).collect(),
            prefix: self.prefix.iter().map(|v| v.to_string()).collect(),
            canonical_key: self.canonical_key.clone(),
            poly: self.poly.to_json(),
        }
    }
}

/// Outcome of a search run.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Matches sorted by (canonical key, target).
    pub candidates: Vec<Candidate>,
    /// Candidates evaluated in this run.
    pub scanned: u64,
    /// Candidates skipped by checkpoint resume.
    pub skipped: u64,
    pub last_shard: u64,
}

/// All distinct symmetry-class representatives, in enumeration order.
///
/// Mostly useful for inspecting small configs; `search_matches` streams the
/// same enumeration without materializing it.
pub fn enumerate_candidates(config: &SearchConfig) -> Result<Vec<LaurentPoly>> {
    config.validate_support_only()?;
    let mut out = Vec::new();
    visit_candidates(config, |_, poly, _, _| {
        out.push(poly.clone());
        Ok(())
    })?;
    Ok(out)
}

impl SearchConfig {
    // enumerate_candidates is also useful with empty targets, so the target
    // checks are split out of validate().
    fn validate_support_only(&self) -> Result<()> {
        for e in &self.factor_support {
            if e.len() != self.dim {
                return Err(Error::DimMismatch {
                    left: self.dim,
                    right: e.len(),
                });
            }
        }
        let estimate = self.estimate();
        if estimate > self.candidate_cap {
            return Err(Error::SearchSpaceTooLarge {
                estimate,
                cap: self.candidate_cap,
            });
        }
        Ok(())
    }
}

/// Run the search, optionally resuming from / writing to a checkpoint file
/// holding the last completed shard id as plain text.
///
/// Symmetry-class dedup is per run: resuming skips whole shards, so a class
/// first seen in a completed shard can be re-emitted if another member of the
/// class lands in a later shard.
pub fn search_matches_with_checkpoint(
    config: &SearchConfig,
    checkpoint: Option<&Path>,
) -> Result<SearchOutcome> {
    config.validate()?;
    config.validate_support_only()?;

    let resume_after: Option<u64> = match checkpoint {
        Some(path) if path.exists() => {
            let text = std::fs::read_to_string(path)?;
            let trimmed = text.trim();
            if trimmed.is_empty() {
                None
            } else {
                Some(trimmed.parse::<u64>().map_err(|_| {
                    Error::Precondition(format!("invalid checkpoint file {}", path.display()))
                })?)
            }
        }
        _ => None,
    };

    let depth = config.prefix_len + 2;
    let mut candidates: Vec<Candidate> = Vec::new();
    let mut scanned = 0u64;
    let mut skipped = 0u64;
    let mut last_shard = resume_after.unwrap_or(0);

    visit_candidates(config, |id, poly, factors, key| {
        let shard = id / SHARD_SIZE;
        if shard > last_shard {
            if let Some(path) = checkpoint {
                std::fs::write(path, format!("{}\n", shard - 1))?;
            }
            last_shard = shard;
        }
        if resume_after.is_some_and(|done| shard <= done) {
            skipped += 1;
            return Ok(());
        }
        scanned += 1;

        let mut alive: Vec<usize> = (0..config.targets.len())
            .filter(|&t| config.targets[t].prefix[0].is_one())
            .collect();
        if alive.is_empty() {
            return Ok(());
        }
        let mut acc = LaurentPoly::one(config.dim);
        let mut prefix: Vec<BigInt> = vec![BigInt::one()];
        for i in 1..=depth {
            acc = acc.mul(poly)?;
            let ct = acc.constant_term();
            alive.retain(|&t| config.targets[t].prefix[i] == ct);
            if alive.is_empty() {
                return Ok(());
            }
            prefix.push(ct);
        }
        for t in alive {
            candidates.push(Candidate {
                poly: poly.clone(),
                factors: factors.to_vec(),
                matched_target: config.targets[t].name.clone(),
                prefix: prefix.clone(),
                canonical_key: key.to_string(),
            });
        }
        Ok(())
    })?;

    if let Some(path) = checkpoint {
        std::fs::write(path, format!("{last_shard}\n"))?;
    }
    candidates.sort_by(|a, b| {
        ((&a.canonical_key), &a.matched_target).cmp(&((&b.canonical_key), &b.matched_target))
    });
    Ok(SearchOutcome {
        candidates,
        scanned,
        skipped,
        last_shard,
    })
}

/// As [`search_matches_with_checkpoint`] without resumption.
pub fn search_matches(config: &SearchConfig) -> Result<SearchOutcome> {
    search_matches_with_checkpoint(config, None)
}

/// Walk every factor multiset once per symmetry class.
///
/// The visitor receives the raw candidate id (before dedup), the divided
/// polynomial, the factor multiset and the canonical key. Ids advance for
/// every multiset, so shard boundaries are stable across runs.
fn visit_candidates(
    config: &SearchConfig,
    mut visit: impl FnMut(u64, &LaurentPoly, &[LaurentPoly], &str) -> Result<()>,
) -> Result<()> {
    let factors = factor_list(config)?;
    let group = symmetry_group(config.dim);
    let denom: Vec<i64> = vec![-(config.denominator_exp as i64); config.dim];
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut id: u64 = 0;

    let mut stack: Vec<usize> = Vec::new();
    loop {
        // visit current multiset (including the empty product)
        let mut poly = LaurentPoly::one(config.dim);
        for &i in &stack {
            poly = poly.mul(&factors[i])?;
        }
        let poly = poly.shift(&denom)?;
        let key = canonical_form(&poly, &group)?;
        if seen.insert(key.clone()) {
            let multiset: Vec<LaurentPoly> = stack.iter().map(|&i| factors[i].clone()).collect();
            visit(id, &poly, &multiset, &key)?;
        }
        id += 1;

        // advance: extend to longer multisets first, then increment
        if stack.len() < config.max_factors && !factors.is_empty() {
            let start = stack.last().copied().unwrap_or(0);
            stack.push(start);
            continue;
        }
        loop {
            match stack.pop() {
                None => return Ok(()),
                Some(top) if top + 1 < factors.len() => {
                    stack.push(top + 1);
                    break;
                }
                Some(_) => {}
            }
        }
    }
}

/// All nonzero {-1,0,1} assignments over the support, in deterministic order.
fn factor_list(config: &SearchConfig) -> Result<Vec<LaurentPoly>> {
    let s = config.factor_support.len();
    let mut out = Vec::new();
    if s == 0 {
        return Ok(out);
    }
    let mut digits = vec![0u8; s];
    loop {
        if digits.iter().any(|&d| d != 0) {
            let terms: Vec<(Vec<i64>, BigInt)> = digits
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != 0)
                .map(|(i, &d)| {
                    let c = if d == 1 { 1 } else { -1 };
                    (config.factor_support[i].clone(), BigInt::from(c))
                })
                .collect();
            out.push(LaurentPoly::from_terms(config.dim, terms)?);
        }
        let mut i = 0;
        loop {
            if i == s {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < 3 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}
