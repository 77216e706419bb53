use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graphs::{expand_vlg, is_deterministic, out_length_distribution, LabeledGraph, LengthDistribution};
use crate::kraft::{check_parity_kraft, KraftReport};

/// Every word generated by `e` is generated by `g`. Symbols are matched by name.
pub fn language_containment(e: &LabeledGraph, g: &LabeledGraph) -> bool {
    let (x, _) = expand_vlg(e);
    // translate symbols of x into g's alphabet
    let map: Vec<Option<usize>> = x
        .alphabet()
        .symbols()
        .iter()
        .map(|s| g.alphabet().lookup(s).ok())
        .collect();
    let step = |set: &BTreeSet<usize>, sym: usize| -> BTreeSet<usize> {
        set.iter()
            .flat_map(|&t| g.out_edges(t).iter().map(|&i| &g.edges()[i]))
            .filter(|ge| ge.label.len() == 1 && ge.label[0] == sym)
            .map(|ge| ge.to)
            .collect()
    };
    let all: BTreeSet<usize> = (0..g.num_states()).collect();
    let mut seen: HashSet<(usize, BTreeSet<usize>)> = HashSet::new();
    let mut queue = VecDeque::new();
    for s in 0..x.num_states() {
        if seen.insert((s, all.clone())) {
            queue.push_back((s, all.clone()));
        }
    }
    while let Some((s, set)) = queue.pop_front() {
        for &i in x.out_edges(s) {
            let edge = &x.edges()[i];
            let Some(sym) = map[edge.label[0]] else {
                return false;
            };
            let next = step(&set, sym);
            if next.is_empty() {
                return false;
            }
            if seen.insert((edge.to, next.clone())) {
                queue.push_back((edge.to, next));
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateVerification {
    pub state: String,
    pub distribution: LengthDistribution,
    pub report: KraftReport,
    /// `K+ = 0` over `n0 + n1` symbols.
    pub kraft_equality: bool,
    /// Lengths where `K+_l < |K-_l|` (parity mode only).
    pub prefix_failures: Vec<usize>,
    /// `K- = 0` (parity mode only).
    pub k_minus_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VleReport {
    pub deterministic: bool,
    pub containment: bool,
    pub parity: bool,
    pub states: Vec<StateVerification>,
}

impl VleReport {
    pub fn passed(&self) -> bool {
        self.deterministic
            && self.containment
            && self.states.iter().all(|s| {
                s.kraft_equality && (!self.parity || (s.prefix_failures.is_empty() && s.k_minus_zero))
            })
    }
}

/// Checks determinism, containment in `S(g)`, per-state Kraft equality, and in parity
/// mode the prefix inequalities and `K- = 0`.
pub fn verify_vle(e: &LabeledGraph, g: &LabeledGraph, n0: u64, n1: u64, parity: bool) -> Result<VleReport> {
    if !is_deterministic(e) {
        return Err(Error::NotDeterministic);
    }
    let containment = language_containment(e, g);
    let mut states = Vec::new();
    for u in 0..e.num_states() {
        let d = out_length_distribution(e, u)?;
        let (report, kraft_equality, prefix_failures, k_minus_zero) = if d.is_zero() {
            let empty = KraftReport {
                k_plus: Vec::new(),
                k_minus: Vec::new(),
                condition_a: false,
                condition_b_failures: Vec::new(),
                verdict: false,
            };
            (empty, false, Vec::new(), false)
        } else {
            let (d0, m1) = if parity {
                (d.clone(), n1 as i64)
            } else {
                // ordinary: every word counted as even, all n symbols even
                (LengthDistribution::from_mu(&d.mu()), 0)
            };
            let n0i = if parity { n0 as i64 } else { (n0 + n1) as i64 };
            let report = check_parity_kraft(&d0, n0i, m1)?;
            let eq = report.k_plus_total().is_zero();
            let kmz = report.k_minus_total().is_zero();
            let fails = if parity { report.condition_b_failures.clone() } else { Vec::new() };
            (report, eq, fails, kmz)
        };
        states.push(StateVerification {
            state: e.state_name(u).to_string(),
            distribution: d,
            report,
            kraft_equality,
            prefix_failures,
            k_minus_zero,
        });
    }
    Ok(VleReport {
        deterministic: true,
        containment,
        parity,
        states,
    })
}
