//! Star-shaped plumbing graphs and their intersection lattices.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cf::{neg_cf_expand, NegCf};
use crate::error::{Error, Result};
use crate::rational::bigint_serde;
use crate::seifert::SeifertInvariants;

/// Central vertex of weight `central` with one leg per entry of `legs`.
///
/// Vertex order: the central vertex, then each leg from its root (adjacent
/// to the centre) to its tip.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarGraph {
    #[serde(with = "bigint_serde")]
    pub central: BigInt,
    pub legs: Vec<NegCf>,
}

impl StarGraph {
    pub fn vertex_count(&self) -> usize {
        1 + self.legs.iter().map(NegCf::len).sum::<usize>()
    }

    /// Weights in canonical vertex order.
    pub fn weights(&self) -> Vec<BigInt> {
        let mut w = vec![self.central.clone()];
        for leg in &self.legs {
            w.extend(leg.coeffs().iter().cloned());
        }
        w
    }
}

/// One leg per coefficient, the expansion of `-1/r_i`, taken in increasing
/// order of `r_i` (the reverse of the stored order).
pub fn build_plumbing(y: &SeifertInvariants) -> StarGraph {
    let legs = y
        .coefficients()
        .iter()
        .rev()
        .map(|r| neg_cf_expand(&-r.recip().unwrap()).expect("-1/r < -1 for r in (0,1)"))
        .collect();
    StarGraph {
        central: y.e0().clone(),
        legs,
    }
}

/// A symmetric integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LatticeRepr")]
pub struct IntersectionLattice {
    #[serde(with = "bigint_serde::matrix")]
    form: Vec<Vec<BigInt>>,
}

#[derive(Deserialize)]
struct LatticeRepr {
    #[serde(with = "bigint_serde::matrix")]
    form: Vec<Vec<BigInt>>,
}

impl TryFrom<LatticeRepr> for IntersectionLattice {
    type Error = Error;

    fn try_from(r: LatticeRepr) -> Result<Self> {
        IntersectionLattice::try_new(r.form)
    }
}

impl IntersectionLattice {
    /// Panics unless `form` is square and symmetric.
    pub fn new(form: Vec<Vec<BigInt>>) -> Self {
        Self::try_new(form).expect("square symmetric form")
    }

    pub fn try_new(form: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = form.len();
        if let Some(i) = form.iter().position(|row| row.len() != n) {
            return Err(Error::Precondition(format!("row {i} of an {n}x{n} form has length {}", form[i].len())));
        }
        for i in 0..n {
            for j in 0..i {
                if form[i][j] != form[j][i] {
                    return Err(Error::Precondition(format!("form is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(IntersectionLattice { form })
    }

    pub fn from_i64(form: &[Vec<i64>]) -> Self {
        Self::new(form.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    /// The form of a weighted graph: weights on the diagonal, 1 on edges.
    pub fn from_graph(weights: &[BigInt], edges: &[(usize, usize)]) -> Self {
        let n = weights.len();
        let mut form = vec![vec![BigInt::zero(); n]; n];
        for (i, w) in weights.iter().enumerate() {
            form[i][i] = w.clone();
        }
        for &(u, v) in edges {
            assert!(u != v && u < n && v < n, "bad edge ({u}, {v})");
            form[u][v] = BigInt::from(1);
            form[v][u] = BigInt::from(1);
        }
        IntersectionLattice { form }
    }

    pub fn dim(&self) -> usize {
        self.form.len()
    }

    pub fn form(&self) -> &[Vec<BigInt>] {
        &self.form
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.form[i][j]
    }

    /// Leading `k × k` block.
    fn leading(&self, k: usize) -> Vec<Vec<BigInt>> {
        self.form[..k].iter().map(|row| row[..k].to_vec()).collect()
    }
}

pub fn intersection_form(g: &StarGraph) -> IntersectionLattice {
    let weights = g.weights();
    let mut edges = Vec::new();
    let mut next = 1;
    for leg in &g.legs {
        edges.push((0, next));
        for j in 1..leg.len() {
            edges.push((next + j - 1, next + j));
        }
        next += leg.len();
    }
    IntersectionLattice::from_graph(&weights, &edges)
}

/// Fraction-free (Bareiss) elimination with row pivoting.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign_flip = false;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

pub fn determinant(l: &IntersectionLattice) -> BigInt {
    bareiss_det(l.form.clone())
}

/// Sylvester's criterion for `-Q`: `(-1)^j` times the `j`-th leading minor
/// is positive for every `j`.
pub fn is_negative_definite(l: &IntersectionLattice) -> bool {
    (1..=l.dim()).all(|k| {
        let minor = bareiss_det(l.leading(k));
        if k % 2 == 0 {
            minor.is_positive()
        } else {
            minor.is_negative()
        }
    })
}
