//! Approximate eigenvectors and fixed-length encoder existence.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{is_deterministic, is_irreducible, LabeledGraph};
use crate::spectral::CountMatrix;

pub const DEFAULT_CAP: u64 = 64;

/// Nonnegative integer vector indexed by states.
pub type AeVector = Vec<u64>;

pub fn is_zero(x: &[u64]) -> bool {
    x.iter().all(|&v| v == 0)
}

/// `A x >= n x` componentwise.
pub fn satisfies(a: &CountMatrix, n: u64, x: &[u64]) -> bool {
    a.apply(x)
        .iter()
        .zip(x)
        .all(|(ax, &xi)| *ax >= BigUint::from(n) * xi)
}

fn step(a: &CountMatrix, n: u64, x: &[u64]) -> Vec<u64> {
    if n == 0 {
        return x.to_vec();
    }
    a.apply(x)
        .into_iter()
        .zip(x)
        .map(|(ax, &xi)| {
            let q = ax / n;
            u64::try_from(&q).map_or(xi, |q| q.min(xi))
        })
        .collect()
}

/// Largest `x <= cap` with `A x >= n x` (zero if none). `n = 0` leaves `x` unconstrained.
pub fn franaszek_reduce(a: &CountMatrix, n: u64, cap: &[u64]) -> Result<AeVector> {
    if cap.len() != a.dim() {
        return Err(Error::DimensionMismatch(cap.len(), a.dim()));
    }
    let mut x = cap.to_vec();
    loop {
        let next = step(a, n, &x);
        if next == x {
            return Ok(x);
        }
        x = next;
    }
}

/// Largest `x <= cap` lying in both `X(a0, n0)` and `X(a1, n1)`.
pub fn joint_franaszek(a0: &CountMatrix, n0: u64, a1: &CountMatrix, n1: u64, cap: &[u64]) -> Result<AeVector> {
    if a0.dim() != a1.dim() {
        return Err(Error::DimensionMismatch(a0.dim(), a1.dim()));
    }
    if cap.len() != a0.dim() {
        return Err(Error::DimensionMismatch(cap.len(), a0.dim()));
    }
    let mut x = cap.to_vec();
    loop {
        let p = step(a0, n0, &x);
        let q = step(a1, n1, &x);
        let next: Vec<u64> = p.iter().zip(&q).map(|(a, b)| *a.min(b)).collect();
        if next == x {
            return Ok(x);
        }
        x = next;
    }
}

/// Even- and odd-parity path counts of length `t`, via the state x parity product graph.
pub fn parity_power_adjacency(g: &LabeledGraph, t: u32) -> Result<(CountMatrix, CountMatrix)> {
    if !g.is_ordinary() {
        return Err(Error::NotOrdinary);
    }
    if t == 0 {
        return Err(Error::ZeroPower);
    }
    let n = g.num_states();
    // product state (v, p) lives at 2v + p
    let mut prod = CountMatrix::zeros(2 * n);
    for (i, e) in g.edges().iter().enumerate() {
        let b = g.label_parity(i) as usize;
        for p in 0..2 {
            prod.inc(2 * e.from + p, 2 * e.to + (p ^ b));
        }
    }
    let pw = prod.pow(t);
    let mut a0 = CountMatrix::zeros(n);
    let mut a1 = CountMatrix::zeros(n);
    for u in 0..n {
        for v in 0..n {
            a0.set(u, v, pw.get(2 * u, 2 * v).clone());
            a1.set(u, v, pw.get(2 * u, 2 * v + 1).clone());
        }
    }
    Ok((a0, a1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "cap")]
pub enum ExistenceMode {
    /// 0-1 vectors only; conclusive for deterministic encoders.
    Deterministic,
    /// Entries bounded by the cap; a negative answer only covers vectors under the cap.
    Bounded(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "result", content = "vector")]
pub enum Existence {
    Exists(AeVector),
    /// No 0-1 vector: no deterministic encoder.
    NoneDeterministic,
    /// Nothing with entries up to the cap.
    EmptyUnderCap(u64),
}

impl Existence {
    pub fn exists(&self) -> bool {
        matches!(self, Existence::Exists(_))
    }
}

/// Existence test for a fixed-length `t`-block encoder with `n0` even and `n1` odd input tags.
pub fn fixed_length_existence(g: &LabeledGraph, t: u32, n0: u64, n1: u64, mode: ExistenceMode) -> Result<Existence> {
    if !g.is_ordinary() {
        return Err(Error::NotOrdinary);
    }
    if !is_deterministic(g) {
        return Err(Error::NotDeterministic);
    }
    if !is_irreducible(g) {
        return Err(Error::NotIrreducible);
    }
    let (a0, a1) = parity_power_adjacency(g, t)?;
    let c = match mode {
        ExistenceMode::Deterministic => 1,
        ExistenceMode::Bounded(b) => b,
    };
    let x = joint_franaszek(&a0, n0, &a1, n1, &vec![c; g.num_states()])?;
    Ok(if !is_zero(&x) {
        Existence::Exists(x)
    } else if mode == ExistenceMode::Deterministic {
        Existence::NoneDeterministic
    } else {
        Existence::EmptyUnderCap(c)
    })
}
