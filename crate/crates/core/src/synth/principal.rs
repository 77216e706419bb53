use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{CutEdge, PrincipalCut, PrincipalResult};
use crate::error::{Error, Result};
use crate::graphs::{is_deterministic, is_irreducible, LabeledGraph, LengthDistribution};
use crate::kraft::check_parity_kraft;

/// `c[t][u]` = largest `n^t`-scaled Kraft mass of a prefix-free set of paths from `u`
/// of length at most `t` that end in `inside`. Paths may pass through any state.
fn masses(g: &LabeledGraph, inside: &[bool], n: &BigUint, r: usize) -> Vec<Vec<BigUint>> {
    let mut c = vec![vec![BigUint::zero(); g.num_states()]];
    let mut scale = BigUint::one(); // n^(t-1)
    for t in 1..=r {
        let prev = &c[t - 1];
        let row = (0..g.num_states())
            .map(|u| {
                g.out_edges(u)
                    .iter()
                    .map(|&e| {
                        let v = g.edges()[e].to;
                        let leaf = if inside[v] { scale.clone() } else { BigUint::zero() };
                        leaf.max(prev[v].clone())
                    })
                    .sum()
            })
            .collect();
        c.push(row);
        scale *= n;
    }
    c
}

fn witness(
    g: &LabeledGraph,
    inside: &[bool],
    c: &[Vec<BigUint>],
    n: &BigUint,
    u: usize,
    t: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<CutEdge>,
) {
    let scale = num_traits::pow(n.clone(), t - 1);
    for &e in g.out_edges(u) {
        let v = g.edges()[e].to;
        prefix.push(e);
        // a leaf is preferred on ties: shorter words, same mass
        if inside[v] && scale >= c[t - 1][v] {
            out.push(CutEdge {
                path: prefix.clone(),
                label: prefix.iter().flat_map(|&p| g.edges()[p].label.iter().copied()).collect(),
                to: v,
            });
        } else if !c[t - 1][v].is_zero() {
            witness(g, inside, c, n, v, t - 1, prefix, out);
        }
        prefix.pop();
    }
}

/// Largest set of states each of which reaches Kraft mass at least one (over `n` symbols)
/// with prefix-free paths of length at most `r` ending inside the set.
pub fn ordinary_principal_states(g: &LabeledGraph, n: u64, r: usize) -> Result<PrincipalResult> {
    if !g.is_ordinary() {
        return Err(Error::NotOrdinary);
    }
    if !is_deterministic(g) {
        return Err(Error::NotDeterministic);
    }
    if !is_irreducible(g) {
        return Err(Error::NotIrreducible);
    }
    if n == 0 || r == 0 {
        return Err(Error::Precondition("n and r must be positive".into()));
    }
    let nb = BigUint::from(n);
    let target = num_traits::pow(nb.clone(), r);
    let mut inside = vec![true; g.num_states()];
    let c = loop {
        let c = masses(g, &inside, &nb, r);
        let mut changed = false;
        for u in 0..g.num_states() {
            if inside[u] && c[r][u] < target {
                inside[u] = false;
                changed = true;
            }
        }
        if !changed {
            break c;
        }
    };
    let principal_set: Vec<usize> = (0..g.num_states()).filter(|&u| inside[u]).collect();
    let mut cuts = Vec::new();
    for &u in &principal_set {
        let mut edges = Vec::new();
        witness(g, &inside, &c, &nb, u, r, &mut Vec::new(), &mut edges);
        let distribution = LengthDistribution::from_words(edges.iter().map(|e| (e.label.len(), 0)));
        let report = check_parity_kraft(&distribution, n as i64, 0)?;
        cuts.push(PrincipalCut {
            state: u,
            edges,
            distribution,
            report,
        });
    }
    Ok(PrincipalResult { principal_set, cuts })
}
