//! Adjacency matrices, Perron roots and the capacity of variable-length graphs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graphs::{is_deterministic, is_irreducible, strongly_connected_components, LabeledGraph};

pub const DEFAULT_TOL: f64 = 1e-9;
const MAX_ITERATIONS: usize = 1_000_000;

/// Square matrix of nonnegative big integers.
#[derive(Clone, PartialEq, Eq)]
pub struct CountMatrix {
    dim: usize,
    data: Vec<BigUint>,
}

impl CountMatrix {
    pub fn zeros(dim: usize) -> Self {
        CountMatrix {
            dim,
            data: vec![BigUint::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = BigUint::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(row.len(), dim));
            }
            for (j, &x) in row.iter().enumerate() {
                m.data[i * dim + j] = BigUint::from(x);
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigUint) {
        self.data[i * self.dim + j] = x;
    }

    pub fn inc(&mut self, i: usize, j: usize) {
        self.data[i * self.dim + j] += 1u32;
    }

    pub fn add(&self, other: &CountMatrix) -> Result<CountMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(CountMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn mul(&self, other: &CountMatrix) -> Result<CountMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, t: u32) -> CountMatrix {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = t;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same dimension");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        result
    }

    /// `A x` for a nonnegative integer vector.
    pub fn apply(&self, x: &[u64]) -> Vec<BigUint> {
        (0..self.dim)
            .map(|i| {
                let mut s = BigUint::zero();
                for (j, &xj) in x.iter().enumerate() {
                    let a = self.get(i, j);
                    if xj != 0 && !a.is_zero() {
                        s += a * xj;
                    }
                }
                s
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).to_f64().unwrap_or(f64::INFINITY)).collect())
            .collect()
    }

    /// Panics if an entry does not fit in `u64`.
    pub fn to_u64_rows(&self) -> Vec<Vec<u64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).to_u64().expect("entry fits u64")).collect())
            .collect()
    }
}

impl fmt::Debug for CountMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

impl fmt::Display for CountMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Edge counts of an ordinary graph.
pub fn adjacency(g: &LabeledGraph) -> Result<CountMatrix> {
    if !g.is_ordinary() {
        return Err(Error::NotOrdinary);
    }
    let mut m = CountMatrix::zeros(g.num_states());
    for e in g.edges() {
        m.inc(e.from, e.to);
    }
    Ok(m)
}

/// Perron root of a nonnegative matrix given as floats.
///
/// Each strongly connected component is handled by power iteration on `M + I`
/// (the shift makes the iteration primitive) with Collatz-Wielandt bounds.
pub fn perron_root(m: &[Vec<f64>], tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let n = m.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| m[i][j] > 0.0).collect()).collect();
    let mut best: f64 = 0.0;
    for comp in strongly_connected_components(&adj) {
        if comp.len() == 1 {
            best = best.max(m[comp[0]][comp[0]]);
            continue;
        }
        let sub: Vec<Vec<f64>> = comp.iter().map(|&i| comp.iter().map(|&j| m[i][j]).collect()).collect();
        best = best.max(irreducible_root(&sub, tol)?);
    }
    Ok(best)
}

fn irreducible_root(m: &[Vec<f64>], tol: f64) -> Result<f64> {
    let n = m.len();
    let mut x = vec![1.0; n];
    let (mut lo, mut hi) = (0.0, f64::INFINITY);
    for _ in 0..MAX_ITERATIONS {
        let y: Vec<f64> = (0..n)
            .map(|i| x[i] + m[i].iter().zip(&x).map(|(a, b)| a * b).sum::<f64>())
            .collect();
        lo = f64::INFINITY;
        hi = 0.0;
        for i in 0..n {
            let q = y[i] / x[i];
            lo = f64::min(lo, q);
            hi = f64::max(hi, q);
        }
        // rounding floor: the bounds cannot get closer than a few ulps of hi
        let floor = hi * 64.0 * f64::EPSILON * n as f64;
        if hi - lo <= tol.max(floor) {
            return Ok((lo + hi) / 2.0 - 1.0);
        }
        let top = y.iter().cloned().fold(0.0, f64::max);
        x = y.into_iter().map(|v| v / top).collect();
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        lower: lo - 1.0,
        upper: hi - 1.0,
    })
}

pub fn spectral_radius(a: &CountMatrix, tol: f64) -> Result<f64> {
    perron_root(&a.to_f64_rows(), tol)
}

/// `log2` of the Perron root of a deterministic ordinary presentation.
pub fn capacity_ordinary(g: &LabeledGraph, tol: f64) -> Result<f64> {
    g.require_edges()?;
    let a = adjacency(g)?;
    if !is_deterministic(g) {
        return Err(Error::NotDeterministic);
    }
    Ok(spectral_radius(&a, tol)?.log2())
}

/// Entry `(u,v)` maps edge length to multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaMatrix {
    dim: usize,
    entries: Vec<BTreeMap<usize, u64>>,
}

impl ThetaMatrix {
    pub fn of_graph(h: &LabeledGraph) -> Self {
        let dim = h.num_states();
        let mut entries = vec![BTreeMap::new(); dim * dim];
        for e in h.edges() {
            *entries[e.from * dim + e.to].entry(e.len()).or_insert(0) += 1;
        }
        ThetaMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn multiplicities(&self, u: usize, v: usize) -> &BTreeMap<usize, u64> {
        &self.entries[u * self.dim + v]
    }

    /// `A(theta)` with exact entries.
    pub fn evaluate_exact(&self, theta: &BigRational) -> Vec<Vec<BigRational>> {
        let inv = theta.recip();
        (0..self.dim)
            .map(|u| {
                (0..self.dim)
                    .map(|v| {
                        self.multiplicities(u, v).iter().fold(BigRational::zero(), |acc, (&l, &m)| {
                            acc + BigRational::from_integer(BigInt::from(m)) * num_traits::pow(inv.clone(), l)
                        })
                    })
                    .collect()
            })
            .collect()
    }

    pub fn evaluate(&self, theta: f64) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|u| {
                (0..self.dim)
                    .map(|v| {
                        self.multiplicities(u, v)
                            .iter()
                            .map(|(&l, &m)| m as f64 * theta.powi(-(l as i32)))
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    fn max_row_multiplicity(&self) -> u64 {
        (0..self.dim)
            .map(|u| (0..self.dim).map(|v| self.multiplicities(u, v).values().sum::<u64>()).sum())
            .max()
            .unwrap_or(0)
    }
}

/// Exact test of `lambda(M) < 1` for a nonnegative rational matrix:
/// holds iff `I - M` is a nonsingular M-matrix, i.e. all leading principal minors are positive.
pub fn perron_below_one(m: &[Vec<BigRational>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let id = if i == j { BigRational::one() } else { BigRational::zero() };
                    id - &m[i][j]
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        // pivot = ratio of consecutive leading minors
        if a[k][k] <= BigRational::zero() {
            return false;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let d = &f * &a[k][j];
                a[i][j] -= d;
            }
        }
    }
    true
}

/// Largest `theta` with `lambda(A_H(theta)) = 1`; `log2` of it is the capacity of `S(H)`.
///
/// Bisection over dyadic rationals; each step decides `lambda < 1` exactly.
pub fn theta_max(h: &LabeledGraph, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    if !is_irreducible(h) {
        return Err(Error::NotIrreducible);
    }
    let tm = ThetaMatrix::of_graph(h);
    let mut lo = BigRational::one();
    let mut hi = BigRational::from_integer(BigInt::from(1 + tm.max_row_multiplicity()));
    let two = BigRational::from_integer(BigInt::from(2));
    let tol_q = BigRational::from_float(tol).expect("finite tol");
    // lambda(A(1)) >= 1 for an irreducible graph, lambda(A(hi)) < 1 since row sums drop below 1
    while &hi - &lo > tol_q {
        let mid = (&lo + &hi) / &two;
        if perron_below_one(&tm.evaluate_exact(&mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mid = (lo + hi) / two;
    Ok(mid.to_f64().expect("finite theta"))
}
