//! Kraft functionals, parity-preserving prefix-free lists and admissibility of condition-(b) failures.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{LengthDistribution, ParityAlphabet, Sym};

/// `K_l(mu, n) = n^l - sum_{i<=l} mu_i n^(l-i)`, with `0^0 = 1`.
///
/// `mu[0]` holds `mu_1`.
pub fn kraft_functional(mu: &[i64], n: i64, ell: usize) -> BigInt {
    let n = BigInt::from(n);
    let mut k = BigInt::one();
    for i in 1..=ell {
        k = &n * k - mu.get(i - 1).copied().unwrap_or(0);
    }
    k
}

/// `K_1 .. K_r`.
pub fn kraft_sequence(mu: &[i64], n: i64, r: usize) -> Vec<BigInt> {
    let n = BigInt::from(n);
    let mut k = BigInt::one();
    (1..=r)
        .map(|i| {
            k = &n * &k - mu.get(i - 1).copied().unwrap_or(0);
            k.clone()
        })
        .collect()
}

fn last_nonzero(mu: &[i64]) -> Option<usize> {
    mu.iter().rposition(|&m| m != 0).map(|i| i + 1)
}

/// Kraft equality `sum mu_l / n^l = 1`, evaluated as `K_r = 0`.
pub fn check_ordinary_kraft(mu: &[i64], n: i64) -> bool {
    match last_nonzero(mu) {
        Some(r) => kraft_functional(mu, n, r).is_zero(),
        None => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KraftReport {
    #[serde(serialize_with = "ser_big_seq")]
    pub k_plus: Vec<BigInt>,
    #[serde(serialize_with = "ser_big_seq")]
    pub k_minus: Vec<BigInt>,
    pub condition_a: bool,
    /// Lengths where `K+_l < |K-_l|`.
    pub condition_b_failures: Vec<usize>,
    pub verdict: bool,
}

pub(crate) fn ser_big_seq<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        // exact decimal; fits a JSON number when small, string otherwise
        match i64::try_from(x) {
            Ok(i) => seq.serialize_element(&i)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

impl KraftReport {
    pub fn r(&self) -> usize {
        self.k_plus.len()
    }

    pub fn k_plus_total(&self) -> &BigInt {
        self.k_plus.last().expect("nonempty report")
    }

    pub fn k_minus_total(&self) -> &BigInt {
        self.k_minus.last().expect("nonempty report")
    }
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for KraftReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K+=({}) K-=({}) (a)={}", join(&self.k_plus), join(&self.k_minus), self.condition_a)?;
        if self.condition_b_failures.is_empty() {
            write!(f, " (b)=true")?;
        } else {
            let ls: Vec<String> = self.condition_b_failures.iter().map(|l| l.to_string()).collect();
            write!(f, " (b) fails at l={}", ls.join(","))?;
        }
        write!(f, " verdict={}", self.verdict)
    }
}

/// `K+` and `K-` sequences up to the support of `d`.
pub fn parity_kraft_values(d: &LengthDistribution, n0: i64, n1: i64) -> (Vec<BigInt>, Vec<BigInt>) {
    let r = d.support();
    (kraft_sequence(&d.mu(), n0 + n1, r), kraft_sequence(&d.diff(), n0 - n1, r))
}

/// Feasibility of an exhaustive prefix-free list with parity distribution `d`
/// over an alphabet with `n0` even and `n1` odd symbols.
pub fn check_parity_kraft(d: &LengthDistribution, n0: i64, n1: i64) -> Result<KraftReport> {
    if d.support() == 0 {
        return Err(Error::Infeasible("zero distribution".into()));
    }
    let (k_plus, k_minus) = parity_kraft_values(d, n0, n1);
    let condition_a = k_plus.last().is_some_and(Zero::is_zero);
    let condition_b_failures: Vec<usize> = (0..k_plus.len())
        .filter(|&i| k_plus[i] < k_minus[i].abs())
        .map(|i| i + 1)
        .collect();
    let verdict = condition_a && condition_b_failures.is_empty();
    Ok(KraftReport {
        k_plus,
        k_minus,
        condition_a,
        condition_b_failures,
        verdict,
    })
}

/// Even (`y`) and odd (`z`) proper-prefix counts, indexed from length 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixCounts<T> {
    pub y: Vec<T>,
    pub z: Vec<T>,
}

/// Forward recurrence from `(y_0, z_0) = (1, 0)`.
pub fn yz_forward(d: &LengthDistribution, n0: i64, n1: i64) -> PrefixCounts<BigInt> {
    let r = d.support();
    let mut y = vec![BigInt::one()];
    let mut z = vec![BigInt::zero()];
    for l in 1..=r {
        let yl = n0 * &y[l - 1] + n1 * &z[l - 1] - d.eta(l);
        let zl = n1 * &y[l - 1] + n0 * &z[l - 1] - d.omega(l);
        y.push(yl);
        z.push(zl);
    }
    PrefixCounts { y, z }
}

/// Backward closed sums for `y + z` and `y - z`.
///
/// The tail `y_r = z_r = 0` is imposed, and for `n0 = n1` the value `y_0 - z_0 = 1`
/// is imposed (the closed sum degenerates there). With these pins the result
/// equals [`yz_forward`] exactly when `K+ = K- = 0`.
pub fn yz_backward(d: &LengthDistribution, n0: i64, n1: i64) -> PrefixCounts<BigRational> {
    let r = d.support();
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mu = d.mu();
    let delta = d.diff();
    let closed = |seq: &[i64], base: i64, l: usize| -> BigRational {
        let b = q(base);
        let mut acc = BigRational::zero();
        let mut p = BigRational::one();
        for i in l + 1..=r {
            p /= &b;
            acc += q(seq[i - 1]) * &p;
        }
        acc
    };
    let two = q(2);
    let mut y = Vec::with_capacity(r + 1);
    let mut z = Vec::with_capacity(r + 1);
    for l in 0..=r {
        let (s, t) = if l == r {
            (BigRational::zero(), BigRational::zero())
        } else {
            let s = closed(&mu, n0 + n1, l);
            let t = if n0 != n1 {
                closed(&delta, n0 - n1, l)
            } else if l == 0 {
                BigRational::one()
            } else {
                q(-delta[l - 1])
            };
            (s, t)
        };
        y.push((&s + &t) / &two);
        z.push((s - t) / &two);
    }
    PrefixCounts { y, z }
}

/// Maps prefix counts back to a length distribution (inverse of [`yz_forward`]).
pub fn distribution_from_prefix_counts(y: &[i64], z: &[i64], n0: i64, n1: i64) -> LengthDistribution {
    let r = y.len().max(z.len());
    let at = |v: &[i64], l: usize| v.get(l).copied().unwrap_or(0);
    let mut eta = Vec::with_capacity(r);
    let mut omega = Vec::with_capacity(r);
    for l in 1..=r {
        eta.push(n0 * at(y, l - 1) + n1 * at(z, l - 1) - at(y, l));
        omega.push(n1 * at(y, l - 1) + n0 * at(z, l - 1) - at(z, l));
    }
    LengthDistribution::new(eta, omega)
}

fn children(words: &[Vec<Sym>], q: usize) -> Vec<Vec<Sym>> {
    let mut out = Vec::with_capacity(words.len() * q);
    for w in words {
        for s in 0..q {
            let mut c = w.clone();
            c.push(s);
            out.push(c);
        }
    }
    out
}

/// Exhaustive prefix-free list with `mu_l` words of length `l`, built depth by depth:
/// at each depth the lexicographically first open nodes become codewords.
pub fn build_exhaustive_prefix_free(mu: &[i64], alphabet: &ParityAlphabet) -> Result<Vec<Vec<Sym>>> {
    let q = alphabet.len();
    let r = last_nonzero(mu).ok_or_else(|| Error::Infeasible("zero distribution".into()))?;
    if mu.iter().any(|&m| m < 0) {
        return Err(Error::Infeasible("negative count".into()));
    }
    let k = kraft_functional(mu, q as i64, r);
    if !k.is_zero() {
        return Err(Error::Infeasible(format!("K_{r} = {k}, expected 0")));
    }
    let mut open: Vec<Vec<Sym>> = vec![Vec::new()];
    let mut list = Vec::new();
    for &m in &mu[..r] {
        let mut level = children(&open, q);
        let m = m as usize;
        if m > level.len() {
            return Err(Error::Infeasible("more words than free nodes".into()));
        }
        open = level.split_off(m);
        list.extend(level);
    }
    debug_assert!(open.is_empty());
    Ok(list)
}

/// Exhaustive prefix-free list with parity distribution `d`.
///
/// Works depth by depth: among the children of the open nodes, the first `y_l`
/// even and the first `z_l` odd words (lexicographic order) stay open, the rest
/// are codewords.
pub fn build_parity_prefix_free(d: &LengthDistribution, alphabet: &ParityAlphabet) -> Result<Vec<Vec<Sym>>> {
    let (n0, n1) = (alphabet.n0() as i64, alphabet.n1() as i64);
    let report = check_parity_kraft(d, n0, n1)?;
    if !report.verdict || !d.is_nonnegative() {
        return Err(Error::Infeasible(report.to_string()));
    }
    let counts = yz_forward(d, n0, n1);
    let q = alphabet.len();
    let mut open: Vec<Vec<Sym>> = vec![Vec::new()];
    let mut list = Vec::new();
    for l in 1..=d.support() {
        let level = children(&open, q);
        let keep_even = usize::try_from(&counts.y[l]).expect("y nonnegative when feasible");
        let keep_odd = usize::try_from(&counts.z[l]).expect("z nonnegative when feasible");
        let (mut even, mut odd): (Vec<_>, Vec<_>) = level.into_iter().partition(|w| alphabet.parity(w) == 0);
        let even_words = even.split_off(keep_even);
        let odd_words = odd.split_off(keep_odd);
        debug_assert_eq!(even_words.len() as i64, d.eta(l));
        debug_assert_eq!(odd_words.len() as i64, d.omega(l));
        list.extend(even_words);
        list.extend(odd_words);
        even.extend(odd);
        even.sort();
        open = even;
    }
    debug_assert!(open.is_empty());
    list.sort();
    Ok(list)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListValidation {
    pub prefix_free: bool,
    pub exhaustive: bool,
    pub distribution: LengthDistribution,
}

/// Checks prefix-freeness and exhaustiveness of a word list.
///
/// Exhaustive iff every proper prefix that has no list word as a prefix
/// (itself included) is followed by every symbol.
pub fn validate_list(words: &[Vec<Sym>], alphabet: &ParityAlphabet) -> ListValidation {
    let mut sorted: Vec<&Vec<Sym>> = words.iter().collect();
    sorted.sort();
    let prefix_free = sorted.windows(2).all(|w| !w[1].starts_with(w[0]));
    let codewords: HashSet<&[Sym]> = words.iter().map(|w| w.as_slice()).collect();
    let mut prefixes: HashSet<&[Sym]> = HashSet::new();
    for w in words {
        for k in 0..=w.len() {
            prefixes.insert(&w[..k]);
        }
    }
    let covered = |p: &[Sym]| (0..=p.len()).any(|k| codewords.contains(&p[..k]));
    let exhaustive = !words.is_empty()
        && prefixes.iter().all(|p| {
            covered(p)
                || (0..alphabet.len()).all(|s| {
                    let mut c = p.to_vec();
                    c.push(s);
                    prefixes.contains(c.as_slice())
                })
        });
    let distribution = LengthDistribution::from_words(
        words.iter().filter(|w| !w.is_empty()).map(|w| (w.len(), alphabet.parity(w))),
    );
    ListValidation {
        prefix_free,
        exhaustive,
        distribution,
    }
}

/// `xi_1 = 1`; `xi_l = xi_{l-1} - 1` if `l-1` is in `zset`, else `2 xi_{l-1}`.
pub fn xi_sequence(zset: &BTreeSet<usize>, r: usize) -> Result<Vec<i64>> {
    if r < 2 {
        return Err(Error::Precondition("r must be at least 2".into()));
    }
    if r > 62 {
        return Err(Error::Precondition("r above 62 overflows".into()));
    }
    if let Some(&bad) = zset.iter().find(|&&l| l == 0 || l >= r) {
        return Err(Error::IndexOutOfRange { index: bad, max: r - 1 });
    }
    let mut xi = vec![1i64];
    for l in 2..=r {
        let prev = xi[l - 2];
        xi.push(if zset.contains(&(l - 1)) { prev - 1 } else { 2 * prev });
    }
    Ok(xi)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityWitness {
    pub zset: BTreeSet<usize>,
    /// Only for `n0 = n1 = 1`.
    pub xi: Option<Vec<i64>>,
    pub witness: Option<LengthDistribution>,
    pub admissible: bool,
}

/// Whether some nonnegative distribution with `r(d) = r` and `K+ = K- = 0`
/// fails condition (b) exactly on `zset`; emits a checked witness when admissible.
pub fn is_admissible(zset: &BTreeSet<usize>, n0: i64, n1: i64, r: usize) -> Result<AdmissibilityWitness> {
    if n0 < 1 || n1 < 1 {
        return Err(Error::Precondition("n0 and n1 must be positive".into()));
    }
    let xi_seq = xi_sequence(zset, r)?;
    let neg = |l: usize| if zset.contains(&l) { -1 } else { 0 };
    let (xi, yz) = if n0 >= n1 && n0 > 1 {
        let y: Vec<i64> = (0..r).map(|l| if l == 0 { 1 } else { n0 }).collect();
        let z: Vec<i64> = (0..r).map(neg).collect();
        (None, Some((y, z)))
    } else if n1 > 1 {
        let y: Vec<i64> = (0..r)
            .map(|l| match l {
                0 => 1,
                _ if l % 2 == 0 => n1,
                _ => neg(l),
            })
            .collect();
        let z: Vec<i64> = (0..r)
            .map(|l| match l {
                0 => 0,
                _ if l % 2 == 1 => n1,
                _ => neg(l),
            })
            .collect();
        (None, Some((y, z)))
    } else if xi_seq.iter().all(|&x| x > 0) {
        let y: Vec<i64> = (0..r).map(|l| if l == 0 { 1 } else { xi_seq[l - 1] }).collect();
        let z: Vec<i64> = (0..r)
            .map(|l| match l {
                0 => 0,
                _ if zset.contains(&l) => -1,
                _ => xi_seq[l - 1],
            })
            .collect();
        (Some(xi_seq), Some((y, z)))
    } else {
        (Some(xi_seq), None)
    };
    let witness = match yz {
        Some((y, z)) => {
            let d = distribution_from_prefix_counts(&y, &z, n0, n1);
            check_witness(&d, zset, n0, n1, r)?;
            Some(d)
        }
        None => None,
    };
    Ok(AdmissibilityWitness {
        zset: zset.clone(),
        xi,
        admissible: witness.is_some(),
        witness,
    })
}

fn check_witness(d: &LengthDistribution, zset: &BTreeSet<usize>, n0: i64, n1: i64, r: usize) -> Result<()> {
    let report = check_parity_kraft(d, n0, n1)?;
    let failures: BTreeSet<usize> = report.condition_b_failures.iter().copied().collect();
    let ok = d.is_nonnegative()
        && d.r() == Some(r)
        && report.k_plus_total().is_zero()
        && report.k_minus_total().is_zero()
        && &failures == zset;
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("witness {d} failed its self-check: {report}")))
    }
}
