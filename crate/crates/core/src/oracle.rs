//! Independent reference implementations used by the test suites.
//!
//! Nothing here is tuned for speed.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::embedding::Embedding;
use crate::plumbing::IntersectionLattice;

/// A vertex-weighted tree: `weights[v]` and an edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedTree {
    pub weights: Vec<i64>,
    pub edges: Vec<(usize, usize)>,
}

impl WeightedTree {
    pub fn lattice(&self) -> IntersectionLattice {
        let w: Vec<BigInt> = self.weights.iter().map(|&x| BigInt::from(x)).collect();
        IntersectionLattice::from_graph(&w, &self.edges)
    }

    pub fn weight_sum(&self) -> i64 {
        self.weights.iter().map(|w| w.abs()).sum()
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.weights.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    fn encode(&self, adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&c| c != parent)
            .map(|&c| self.encode(adj, c, v))
            .collect();
        kids.sort();
        format!("({}{})", self.weights[v], kids.concat())
    }

    /// Isomorphism invariant: the smallest rooted encoding over all roots.
    pub fn canonical(&self) -> String {
        let adj = self.neighbours();
        (0..self.weights.len())
            .map(|r| self.encode(&adj, r, usize::MAX))
            .min()
            .unwrap_or_default()
    }
}

/// All weighted trees with weights `<= -1` and `Σ|w| <= max_sum`, one per
/// isomorphism class, in order of increasing weight sum.
pub fn weighted_trees(max_sum: i64) -> Vec<WeightedTree> {
    let mut out = Vec::new();
    let mut level = vec![WeightedTree {
        weights: vec![-1],
        edges: vec![],
    }];
    for _ in 1..max_sum {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.weights.len() {
                let mut heavier = t.clone();
                heavier.weights[v] -= 1;
                let mut grown = t.clone();
                grown.weights.push(-1);
                grown.edges.push((v, t.weights.len()));
                for cand in [heavier, grown] {
                    if seen.insert(cand.canonical()) {
                        next.push(cand);
                    }
                }
            }
        }
        out.append(&mut level);
        level = next;
    }
    if max_sum >= 1 {
        out.append(&mut level);
    }
    out
}

fn isqrt(x: i64) -> i64 {
    (0..).take_while(|r: &i64| r * r <= x).last().unwrap_or(0)
}

/// Decides embeddability by writing `-Q` as a sum of rank-one terms `c cᵀ`
/// over integer columns `c`, one ambient coordinate at a time. Entries are
/// bounded by the square root of the diagonal, and each column strictly
/// lowers the trace, so the rank never exceeds `Σ|Q[v][v]|`.
pub fn brute_force_embedding(l: &IntersectionLattice) -> Option<Embedding> {
    let n = l.dim();
    let r: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| -l.entry(i, j).to_i64().expect("small lattice")).collect())
        .collect();
    if (0..n).any(|i| r[i][i] <= 0) {
        return None;
    }
    let mut columns = Vec::new();
    if decompose(r, &mut columns) {
        let rank = columns.len();
        let vectors = (0..n).map(|v| columns.iter().map(|c: &Vec<i64>| c[v]).collect()).collect();
        Some(Embedding { rank, vectors })
    } else {
        None
    }
}

fn plausible(r: &[Vec<i64>]) -> bool {
    let n = r.len();
    (0..n).all(|i| r[i][i] >= 0 && (0..i).all(|j| r[i][j] * r[i][j] <= r[i][i] * r[j][j]))
}

fn decompose(r: Vec<Vec<i64>>, columns: &mut Vec<Vec<i64>>) -> bool {
    let n = r.len();
    let Some(u) = (0..n).find(|&i| r[i][i] > 0) else {
        return r.iter().all(|row| row.iter().all(|&x| x == 0));
    };
    let mut c = vec![0; n];
    let mut found = false;
    for_each_column(&r, u, u, &mut c, &mut |col| {
        let mut next = r.clone();
        for i in 0..n {
            for j in 0..n {
                next[i][j] -= col[i] * col[j];
            }
        }
        if !plausible(&next) {
            return false;
        }
        columns.push(col.to_vec());
        if decompose(next, columns) {
            found = true;
            return true;
        }
        columns.pop();
        false
    });
    found
}

/// Every column supported on vertices `>= u` with positive entry at `u` and
/// `c_v^2 <= R[v][v]`. Stops early when `f` returns true.
fn for_each_column(r: &[Vec<i64>], u: usize, v: usize, c: &mut Vec<i64>, f: &mut dyn FnMut(&[i64]) -> bool) -> bool {
    if v == r.len() {
        return f(c);
    }
    let b = isqrt(r[v][v]);
    let lo = if v == u { 1 } else { -b };
    for x in lo..=b {
        c[v] = x;
        if for_each_column(r, u, v + 1, c, f) {
            return true;
        }
    }
    c[v] = 0;
    false
}
