//! Embeddings of intersection lattices into the negative diagonal lattice
//! `(Z^d, -Id)`.
//!
//! The search assigns each basis vector a coordinate vector, one vertex at a
//! time in order of decreasing `|weight|`. A vertex of weight `w` has
//! coordinates whose squares sum to `|w|`, so every used ambient coordinate
//! absorbs at least one unit of the total `D = Σ|w|` and `d ≤ D` suffices:
//! exhausting all canonical assignments of rank at most `D` proves that no
//! embedding exists in any rank.
//!
//! Ambient coordinates can be permuted and negated freely. The search only
//! visits assignments where each column's first nonzero entry is positive and
//! columns that agree on all earlier vertices are nonincreasing on the
//! current one.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plumbing::IntersectionLattice;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SearchLimits {
    pub max_seconds: Option<f64>,
    /// Caps the ambient rank below the completeness bound `D`.
    pub max_rank: Option<usize>,
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_seconds(max_seconds: f64) -> Self {
        SearchLimits {
            max_seconds: Some(max_seconds),
            max_rank: None,
        }
    }
}

/// `vectors[v]` is the image of basis vector `v`, of length `rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub rank: usize,
    pub vectors: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchCertificate {
    Found(Embedding),
    /// Every canonical assignment of rank at most `searched_rank` was
    /// visited. When `searched_rank` equals `D` this proves non-embedding.
    #[serde(rename = "no_embedding")]
    ExhaustedNoEmbedding { searched_rank: usize },
    Timeout { max_seconds: f64 },
}

impl Eq for SearchCertificate {}

impl SearchCertificate {
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            SearchCertificate::Found(e) => Some(e),
            _ => None,
        }
    }

    pub fn is_timeout(&self) -> bool {
        matches!(self, SearchCertificate::Timeout { .. })
    }
}

/// `Σ|Q[v][v]|`.
pub fn completeness_bound(l: &IntersectionLattice) -> BigInt {
    (0..l.dim()).map(|v| l.entry(v, v).abs()).sum()
}

/// Checks every pairing `-<x_u, x_v> = Q[u][v]` and that every ambient
/// coordinate is nonzero on some vector.
pub fn verify_embedding(l: &IntersectionLattice, e: &Embedding) -> bool {
    let n = l.dim();
    if e.vectors.len() != n || e.vectors.iter().any(|x| x.len() != e.rank) {
        return false;
    }
    for u in 0..n {
        for v in 0..=u {
            let dot: i128 = e.vectors[u]
                .iter()
                .zip(&e.vectors[v])
                .map(|(&a, &b)| a as i128 * b as i128)
                .sum();
            if BigInt::from(-dot) != *l.entry(u, v) {
                return false;
            }
        }
    }
    (0..e.rank).all(|i| e.vectors.iter().any(|x| x[i] != 0))
}

/// Largest completeness bound the search accepts.
pub const MAX_RANK: usize = 1 << 16;

pub fn find_embedding(l: &IntersectionLattice, limits: &SearchLimits) -> Result<SearchCertificate> {
    let n = l.dim();
    let mut weights = Vec::with_capacity(n);
    for v in 0..n {
        let w = l.entry(v, v);
        if !w.is_negative() {
            return Err(Error::NonNegativeDiagonal {
                vertex: v,
                weight: w.to_string(),
            });
        }
        weights.push(w.to_i64().ok_or_else(|| Error::WeightTooLarge(w.to_string()))?);
    }
    let bound = completeness_bound(l);
    let d = bound.to_usize().ok_or_else(|| Error::WeightTooLarge(bound.to_string()))?;
    for u in 0..n {
        for v in 0..u {
            let q = l.entry(u, v);
            if q.to_i64().is_none() {
                return Err(Error::WeightTooLarge(q.to_string()));
            }
        }
    }
    if d > MAX_RANK {
        return Err(Error::WeightTooLarge(bound.to_string()));
    }
    let cap = limits.max_rank.map_or(d, |r| r.min(d));

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(weights[v].unsigned_abs()));
    let norm: Vec<i64> = order.iter().map(|&v| -weights[v]).collect();
    let target: Vec<Vec<i64>> = (0..n)
        .map(|t| {
            (0..t)
                .map(|i| -l.entry(order[t], order[i]).to_i64().expect("checked above"))
                .collect()
        })
        .collect();

    let deadline = limits
        .max_seconds
        .map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0)));
    let mut search = Search {
        norm,
        target,
        cap,
        rows: vec![vec![0; cap]; n],
        ncols: 0,
        same_prev: vec![false; cap],
        deadline,
        nodes: 0,
        timed_out: false,
    };
    if search.place(0) {
        let mut vectors = vec![Vec::new(); n];
        for (t, &v) in order.iter().enumerate() {
            vectors[v] = search.rows[t][..search.ncols].to_vec();
        }
        return Ok(SearchCertificate::Found(Embedding {
            rank: search.ncols,
            vectors,
        }));
    }
    if search.timed_out {
        return Ok(SearchCertificate::Timeout {
            max_seconds: limits.max_seconds.unwrap_or(0.0),
        });
    }
    Ok(SearchCertificate::ExhaustedNoEmbedding { searched_rank: cap })
}

struct Search {
    /// `|weight|` per search position.
    norm: Vec<i64>,
    /// `target[t][i]` is the required dot product of positions `t` and `i < t`.
    target: Vec<Vec<i64>>,
    cap: usize,
    rows: Vec<Vec<i64>>,
    ncols: usize,
    /// Column `j` equals column `j - 1` on every placed row.
    same_prev: Vec<bool>,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

fn isqrt(x: i64) -> i64 {
    let mut r = (x as f64).sqrt() as i64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

impl Search {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    fn place(&mut self, t: usize) -> bool {
        if t == self.norm.len() {
            return true;
        }
        // suffix[i][j] = Σ_{j' >= j} rows[i][j']^2 over existing columns.
        let m = self.ncols;
        let suffix: Vec<Vec<i64>> = (0..t)
            .map(|i| {
                let mut s = vec![0; m + 1];
                for j in (0..m).rev() {
                    s[j] = s[j + 1] + self.rows[i][j] * self.rows[i][j];
                }
                s
            })
            .collect();
        let mut dots = vec![0; t];
        self.assign(t, 0, self.norm[t], &mut dots, &suffix)
    }

    fn assign(&mut self, t: usize, j: usize, rem: i64, dots: &mut [i64], suffix: &[Vec<i64>]) -> bool {
        if self.tick() {
            return false;
        }
        if j == self.ncols {
            if dots.iter().zip(&self.target[t]).any(|(a, b)| a != b) {
                return false;
            }
            let start = self.ncols;
            return self.open_columns(t, start, rem, isqrt(rem));
        }
        let b = isqrt(rem);
        let hi = if self.same_prev[j] { b.min(self.rows[t][j - 1]) } else { b };
        let mut val = hi;
        while val >= -b {
            let left = rem - val * val;
            let feasible = (0..t).all(|i| {
                let res = self.target[t][i] - dots[i] - self.rows[i][j] * val;
                res * res <= left * suffix[i][j + 1]
            });
            if feasible {
                for (i, d) in dots.iter_mut().enumerate() {
                    *d += self.rows[i][j] * val;
                }
                self.rows[t][j] = val;
                let found = self.assign(t, j + 1, left, dots, suffix);
                for (i, d) in dots.iter_mut().enumerate() {
                    *d -= self.rows[i][j] * val;
                }
                if found {
                    return true;
                }
                self.rows[t][j] = 0;
                if self.timed_out {
                    return false;
                }
            }
            val -= 1;
        }
        false
    }

    /// Spends the remaining norm on fresh columns as a nonincreasing sequence
    /// of positive entries.
    fn open_columns(&mut self, t: usize, col: usize, rem: i64, max_part: i64) -> bool {
        if rem == 0 {
            return self.descend(t, col);
        }
        if col >= self.cap {
            return false;
        }
        let mut p = max_part.min(isqrt(rem));
        while p >= 1 {
            self.rows[t][col] = p;
            if self.open_columns(t, col + 1, rem - p * p, p) {
                return true;
            }
            self.rows[t][col] = 0;
            if self.timed_out {
                return false;
            }
            p -= 1;
        }
        false
    }

    fn descend(&mut self, t: usize, new_ncols: usize) -> bool {
        let saved = self.same_prev.clone();
        let old = self.ncols;
        for j in 1..old {
            self.same_prev[j] = self.same_prev[j] && self.rows[t][j] == self.rows[t][j - 1];
        }
        for j in old..new_ncols {
            self.same_prev[j] = j > old && self.rows[t][j] == self.rows[t][j - 1];
        }
        self.ncols = new_ncols;
        if self.place(t + 1) {
            return true;
        }
        self.ncols = old;
        self.same_prev = saved;
        false
    }
}
