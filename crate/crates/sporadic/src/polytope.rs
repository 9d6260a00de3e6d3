//! Newton polytopes and the origin-only interior point test.
//!
//! Everything is exact integer arithmetic. Supports are tiny (at most a few
//! dozen points in dimension <= 4), so facets are found by brute force: in
//! dimension 2 by the monotone chain, in dimensions 3 and 4 by enumerating
//! d-subsets of the support, forming candidate hyperplanes through them and
//! keeping those with every point on one side. Lower-dimensional supports are
//! handled by projecting onto an injective coordinate subset; their interior
//! is empty and the origin-only verdict fails.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A closed halfspace `normal . p <= offset` with primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

/// Convex hull of a polynomial support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    pub dim: usize,
    /// Extreme points, sorted lexicographically.
    pub vertices: Vec<Vec<i64>>,
    /// Complete facet description; for degenerate supports this includes the
    /// affine-span equalities as pairs of opposite halfspaces.
    pub facets: Vec<Facet>,
    /// Whether the support affinely spans the ambient space.
    pub full_dim: bool,
}

impl Polytope {
    /// Non-strict membership.
    pub fn contains(&self, p: &[i64]) -> bool {
        self.facets.iter().all(|f| dot(&f.normal, p) <= f.offset)
    }

    /// Strict membership; always false for degenerate polytopes because the
    /// span equalities appear as opposite facet pairs.
    pub fn strictly_contains(&self, p: &[i64]) -> bool {
        self.full_dim && self.facets.iter().all(|f| dot(&f.normal, p) < f.offset)
    }
}

/// Verdict of the origin-only interior test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum InteriorVerdict {
    Pass,
    Fail {
        origin_interior: bool,
        witnesses: Vec<Vec<i64>>,
    },
}

impl InteriorVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, InteriorVerdict::Pass)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Newton polytope of the support of `a`.
pub fn newton_polytope(a: &LaurentPoly) -> Result<Polytope> {
    if a.is_zero() {
        return Err(Error::EmptyPolynomial);
    }
    let pts: Vec<Vec<i64>> = a.support().iter().map(|e| e.to_vec()).collect();
    build(a.dim(), pts)
}

/// All integer points strictly inside the polytope, lexicographically sorted.
pub fn interior_integral_points(p: &Polytope) -> Vec<Vec<i64>> {
    if !p.full_dim || p.vertices.is_empty() {
        return vec![];
    }
    let dim = p.dim;
    let lo: Vec<i64> = (0..dim)
        .map(|i| p.vertices.iter().map(|v| v[i]).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..dim)
        .map(|i| p.vertices.iter().map(|v| v[i]).max().unwrap())
        .collect();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        if p.strictly_contains(&cur) {
            out.push(cur.clone());
        }
        // lexicographic odometer over the bounding box
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                for j in i + 1..dim {
                    cur[j] = lo[j];
                }
                break;
            }
        }
    }
}

/// Does the Newton polytope of `a` contain the origin as its only interior
/// integral point?
pub fn origin_only_interior(a: &LaurentPoly) -> Result<InteriorVerdict> {
    let p = newton_polytope(a)?;
    let interior = interior_integral_points(&p);
    let origin = vec![0i64; p.dim];
    let origin_interior = interior.iter().any(|q| *q == origin);
    if origin_interior && interior.len() == 1 {
        return Ok(InteriorVerdict::Pass);
    }
    Ok(InteriorVerdict::Fail {
        origin_interior,
        witnesses: interior.into_iter().filter(|q| *q != origin).collect(),
    })
}

fn build(dim: usize, pts: Vec<Vec<i64>>) -> Result<Polytope> {
    let dirs: Vec<Vec<i128>> = pts[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(&pts[0])
                .map(|(a, b)| (*a - *b) as i128)
                .collect()
        })
        .collect();
    let indep = independent_subset(&dirs, dim);
    let rank_ = indep.len();
    if rank_ == dim {
        let (mut vertices, facets) = hull_full(&pts, dim);
        vertices.sort();
        return Ok(Polytope {
            dim,
            vertices,
            facets,
            full_dim: true,
        });
    }
    degenerate(dim, pts, indep)
}

/// Hull of a lower-dimensional support: project onto an injective coordinate
/// subset, take the hull there, and describe the span by equality pairs.
fn degenerate(dim: usize, pts: Vec<Vec<i64>>, indep: Vec<Vec<i128>>) -> Result<Polytope> {
    let rank_ = indep.len();
    let mut facets: BTreeSet<Facet> = BTreeSet::new();

    for n in span_normals(&indep, dim) {
        let offset = dot(&n, &pts[0]);
        facets.insert(Facet {
            normal: n.iter().map(|v| -v).collect(),
            offset: -offset,
        });
        facets.insert(Facet { normal: n, offset });
    }

    let mut vertices: Vec<Vec<i64>>;
    if rank_ == 0 {
        vertices = vec![pts[0].clone()];
    } else {
        let cols = injective_columns(&indep, dim, rank_)
            .ok_or_else(|| Error::Precondition("no injective coordinate projection".into()))?;
        let projected: Vec<Vec<i64>> = pts
            .iter()
            .map(|p| cols.iter().map(|&c| p[c]).collect())
            .collect();
        let (pverts, pfacets) = hull_full(&projected, rank_);
        vertices = pverts
            .iter()
            .map(|v| {
                pts.iter()
                    .find(|p| cols.iter().zip(v).all(|(&c, x)| p[c] == *x))
                    .expect("projection is injective on the span")
                    .clone()
            })
            .collect();
        for f in pfacets {
            let mut normal = vec![0i64; dim];
            for (k, &c) in cols.iter().enumerate() {
                normal[c] = f.normal[k];
            }
            facets.insert(Facet {
                normal,
                offset: f.offset,
            });
        }
    }
    vertices.sort();
    vertices.dedup();
    Ok(Polytope {
        dim,
        vertices,
        facets: facets.into_iter().collect(),
        full_dim: false,
    })
}

/// Vertices and facets of a full-dimensional point set.
fn hull_full(pts: &[Vec<i64>], dim: usize) -> (Vec<Vec<i64>>, Vec<Facet>) {
    match dim {
        1 => {
            let lo = pts.iter().map(|p| p[0]).min().unwrap();
            let hi = pts.iter().map(|p| p[0]).max().unwrap();
            (
                vec![vec![lo], vec![hi]],
                vec![
                    Facet { normal: vec![-1], offset: -lo },
                    Facet { normal: vec![1], offset: hi },
                ],
            )
        }
        2 => hull_2d(pts),
        _ => hull_brute(pts, dim),
    }
}

/// Monotone chain; returns vertices (sorted) and edge facets.
fn hull_2d(pts: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Facet>) {
    let mut sorted: Vec<(i64, i64)> = pts.iter().map(|p| (p[0], p[1])).collect();
    sorted.sort();
    sorted.dedup();
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| -> i128 {
        (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
    };
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &sorted {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in sorted.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    let cycle: Vec<(i64, i64)> = lower.into_iter().chain(upper).collect(); // CCW
    let mut facets = BTreeSet::new();
    for i in 0..cycle.len() {
        let p = cycle[i];
        let q = cycle[(i + 1) % cycle.len()];
        let (dx, dy) = (q.0 - p.0, q.1 - p.1);
        let g = gcd_pair(dx.abs(), dy.abs()).max(1);
        let normal = vec![dy / g, -dx / g];
        let offset = normal[0] * p.0 + normal[1] * p.1;
        facets.insert(Facet { normal, offset });
    }
    let mut vertices: Vec<Vec<i64>> = cycle.into_iter().map(|(x, y)| vec![x, y]).collect();
    vertices.sort();
    (vertices, facets.into_iter().collect())
}

/// Facet discovery by enumerating dim-subsets of the support.
fn hull_brute(pts: &[Vec<i64>], dim: usize) -> (Vec<Vec<i64>>, Vec<Facet>) {
    let n = pts.len();
    let mut facets: BTreeSet<Facet> = BTreeSet::new();
    for combo in combinations(&(0..n).collect::<Vec<_>>(), dim) {
        let Some(mut normal) = hyperplane_normal(pts, &combo, dim) else {
            continue;
        };
        primitivize(&mut normal);
        let offset = dot(&normal, &pts[combo[0]]);
        let mut above = false;
        let mut below = false;
        for p in pts {
            let s = dot(&normal, p) - offset;
            if s > 0 {
                above = true;
            } else if s < 0 {
                below = true;
            }
            if above && below {
                break;
            }
        }
        if above && below {
            continue;
        }
        if above {
            facets.insert(Facet {
                normal: normal.iter().map(|v| -v).collect(),
                offset: -offset,
            });
        } else {
            facets.insert(Facet { normal, offset });
        }
    }
    let facets: Vec<Facet> = facets.into_iter().collect();
    let vertices = brute_vertices(pts, &facets, dim);
    (vertices, facets)
}

/// A point is a vertex iff its active facet normals span the ambient space.
fn brute_vertices(pts: &[Vec<i64>], facets: &[Facet], dim: usize) -> Vec<Vec<i64>> {
    let mut vertices = Vec::new();
    for p in pts {
        let active: Vec<Vec<i128>> = facets
            .iter()
            .filter(|f| dot(&f.normal, p) == f.offset)
            .map(|f| f.normal.iter().map(|&v| v as i128).collect())
            .collect();
        if active.len() >= dim && rank(&active, dim) == dim {
            vertices.push(p.clone());
        }
    }
    vertices.sort();
    vertices.dedup();
    vertices
}

/// Integer normal to the hyperplane through the chosen points (None when the
/// points are affinely dependent), via signed maximal minors.
fn hyperplane_normal(pts: &[Vec<i64>], combo: &[usize], dim: usize) -> Option<Vec<i64>> {
    let base = &pts[combo[0]];
    let rows: Vec<Vec<i128>> = combo[1..]
        .iter()
        .map(|&i| {
            pts[i]
                .iter()
                .zip(base)
                .map(|(a, b)| (*a - *b) as i128)
                .collect()
        })
        .collect();
    let mut normal = vec![0i64; dim];
    let mut nonzero = false;
    for (j, slot) in normal.iter_mut().enumerate() {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect();
        let d = det(&minor);
        let signed = if j % 2 == 0 { d } else { -d };
        *slot = i64::try_from(signed).expect("minor fits in i64");
        nonzero |= signed != 0;
    }
    nonzero.then_some(normal)
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        k => {
            let mut acc = 0i128;
            for j in 0..k {
                if m[0][j] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| *v)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                acc += s * m[0][j] * det(&minor);
            }
            acc
        }
    }
}

fn gcd_pair(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

fn primitivize(v: &mut [i64]) {
    let g = v.iter().fold(0i64, |acc, &x| gcd_pair(acc, x.abs()));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

/// Row rank by fraction-free elimination; entries stay tiny for dim <= 4.
fn rank(rows: &[Vec<i128>], dim: usize) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let mut r = 0;
    for c in 0..dim {
        let Some(pivot) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pivot);
        for i in r + 1..m.len() {
            if m[i][c] != 0 {
                let (p, q) = (m[r][c], m[i][c]);
                for j in 0..dim {
                    m[i][j] = m[i][j] * p - m[r][j] * q;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Greedy maximal linearly independent subset.
fn independent_subset(rows: &[Vec<i128>], dim: usize) -> Vec<Vec<i128>> {
    let mut kept: Vec<Vec<i128>> = Vec::new();
    for row in rows {
        if row.iter().all(|&v| v == 0) {
            continue;
        }
        kept.push(row.clone());
        if rank(&kept, dim) < kept.len() {
            kept.pop();
        }
        if kept.len() == dim {
            break;
        }
    }
    kept
}

/// Primitive integer normals spanning the orthogonal complement of the row
/// space, via Cramer-style signed minors on (r+1)-subsets of columns.
fn span_normals(indep: &[Vec<i128>], dim: usize) -> Vec<Vec<i64>> {
    let r = indep.len();
    let want = dim - r;
    if want == 0 {
        return vec![];
    }
    if r == 0 {
        return (0..dim)
            .map(|i| {
                let mut e = vec![0i64; dim];
                e[i] = 1;
                e
            })
            .collect();
    }
    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut found_i128: Vec<Vec<i128>> = Vec::new();
    for subset in combinations(&(0..dim).collect::<Vec<_>>(), r + 1) {
        let mut v = vec![0i128; dim];
        let mut nonzero = false;
        for (pos, &c) in subset.iter().enumerate() {
            let minor: Vec<Vec<i128>> = indep
                .iter()
                .map(|row| {
                    subset
                        .iter()
                        .filter(|&&cc| cc != c)
                        .map(|&cc| row[cc])
                        .collect()
                })
                .collect();
            let d = det(&minor);
            v[c] = if pos % 2 == 0 { d } else { -d };
            nonzero |= d != 0;
        }
        if !nonzero {
            continue;
        }
        found_i128.push(v.clone());
        if rank(&found_i128, dim) < found_i128.len() {
            found_i128.pop();
            continue;
        }
        let mut vi: Vec<i64> = v
            .iter()
            .map(|&x| i64::try_from(x).expect("normal fits in i64"))
            .collect();
        primitivize(&mut vi);
        found.push(vi);
        if found.len() == want {
            break;
        }
    }
    found
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// An r-subset of coordinates on which the row space projects injectively.
fn injective_columns(indep: &[Vec<i128>], dim: usize, r: usize) -> Option<Vec<usize>> {
    combinations(&(0..dim).collect::<Vec<_>>(), r)
        .into_iter()
        .find(|subset| {
            let minor: Vec<Vec<i128>> = indep
                .iter()
                .map(|row| subset.iter().map(|&c| row[c]).collect())
                .collect();
            det(&minor) != 0
        })
}
