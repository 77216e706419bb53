use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Per-length counts of even (`eta`) and odd (`omega`) words, indexed from length 1.
///
/// Entries are signed so that witness constructions can pass through
/// intermediate negative values; real label sets are always nonnegative.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LengthDistribution {
    eta: Vec<i64>,
    omega: Vec<i64>,
}

impl LengthDistribution {
    pub fn new(mut eta: Vec<i64>, mut omega: Vec<i64>) -> Self {
        let n = eta.len().max(omega.len());
        eta.resize(n, 0);
        omega.resize(n, 0);
        while eta.last() == Some(&0) && omega.last() == Some(&0) {
            eta.pop();
            omega.pop();
        }
        LengthDistribution { eta, omega }
    }

    /// Ordinary distribution with every word counted as even.
    pub fn from_mu(mu: &[i64]) -> Self {
        Self::new(mu.to_vec(), Vec::new())
    }

    pub fn from_words(words: impl IntoIterator<Item = (usize, u8)>) -> Self {
        let mut d = Self::default();
        for (len, parity) in words {
            d.add(len, parity, 1);
        }
        d
    }

    pub fn add(&mut self, len: usize, parity: u8, count: i64) {
        assert!(len >= 1, "word lengths start at 1");
        if self.eta.len() < len {
            self.eta.resize(len, 0);
            self.omega.resize(len, 0);
        }
        if parity == 0 {
            self.eta[len - 1] += count;
        } else {
            self.omega[len - 1] += count;
        }
        *self = Self::new(std::mem::take(&mut self.eta), std::mem::take(&mut self.omega));
    }

    /// `eta_l`, zero outside the support.
    pub fn eta(&self, l: usize) -> i64 {
        if l == 0 {
            0
        } else {
            self.eta.get(l - 1).copied().unwrap_or(0)
        }
    }

    pub fn omega(&self, l: usize) -> i64 {
        if l == 0 {
            0
        } else {
            self.omega.get(l - 1).copied().unwrap_or(0)
        }
    }

    pub fn etas(&self) -> &[i64] {
        &self.eta
    }

    pub fn omegas(&self) -> &[i64] {
        &self.omega
    }

    /// Largest length with a nonzero total, `None` for the zero distribution.
    pub fn r(&self) -> Option<usize> {
        (1..=self.eta.len()).rev().find(|&l| self.eta(l) + self.omega(l) != 0)
    }

    /// Support length (may exceed `r` when a pair cancels).
    pub fn support(&self) -> usize {
        self.eta.len()
    }

    pub fn require_r(&self) -> Result<usize> {
        self.r()
            .ok_or_else(|| Error::Infeasible("zero distribution".into()))
    }

    pub fn mu(&self) -> Vec<i64> {
        self.eta.iter().zip(&self.omega).map(|(a, b)| a + b).collect()
    }

    pub fn diff(&self) -> Vec<i64> {
        self.eta.iter().zip(&self.omega).map(|(a, b)| a - b).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.eta.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.eta.iter().chain(&self.omega).all(|&x| x >= 0)
    }

    pub fn total(&self) -> i64 {
        self.eta.iter().chain(&self.omega).sum()
    }
}

fn seq(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for LengthDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eta=({}) omega=({})", seq(&self.eta), seq(&self.omega))
    }
}
