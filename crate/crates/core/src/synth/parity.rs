use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use super::{Budget, CutEdge, PrincipalCut, PrincipalResult};
use crate::error::{Error, Result};
use crate::graphs::{induced_subgraph, is_deterministic, is_irreducible, out_length_distribution, LabeledGraph, LengthDistribution, Sym};
use crate::kraft::{kraft_sequence, KraftReport};

/// Principal-state conditions for one state: one inequality on the top length, one per shorter length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalCheck {
    pub state: String,
    pub distribution: LengthDistribution,
    pub report: KraftReport,
    pub top_ok: bool,
    pub short_failures: Vec<usize>,
}

impl PrincipalCheck {
    pub fn passed(&self) -> bool {
        self.top_ok && self.short_failures.is_empty()
    }
}

/// Top length: `K+_r <= -|K-_r|`; shorter lengths: `K+_l >= |K-_l|` for `l < r`, where `r = r(d)`.
fn evaluate(d: &LengthDistribution, n0: i64, n1: i64) -> Option<(KraftReport, bool, Vec<usize>)> {
    let r = d.r()?;
    let kp = kraft_sequence(&d.mu(), n0 + n1, r);
    let km = kraft_sequence(&d.diff(), n0 - n1, r);
    let top_ok = kp[r - 1] <= -km[r - 1].abs();
    let short: Vec<usize> = (0..r - 1).filter(|&i| kp[i] < km[i].abs()).map(|i| i + 1).collect();
    let report = KraftReport {
        condition_a: kp[r - 1] == BigInt::from(0),
        condition_b_failures: (0..r).filter(|&i| kp[i] < km[i].abs()).map(|i| i + 1).collect(),
        verdict: false,
        k_plus: kp,
        k_minus: km,
    };
    let report = KraftReport {
        verdict: report.condition_a && report.condition_b_failures.is_empty(),
        ..report
    };
    Some((report, top_ok, short))
}

/// Evaluates the principal-state conditions for every state of the subgraph induced by `keep`.
pub fn pp_principal_check(h: &LabeledGraph, keep: &[usize], n0: u64, n1: u64) -> Result<(Vec<PrincipalCheck>, bool)> {
    let sub = induced_subgraph(h, keep)?;
    let mut checks = Vec::new();
    for u in 0..sub.num_states() {
        let d = out_length_distribution(&sub, u)?;
        let check = match evaluate(&d, n0 as i64, n1 as i64) {
            Some((report, top_ok, short_failures)) => PrincipalCheck {
                state: sub.state_name(u).to_string(),
                distribution: d,
                report,
                top_ok,
                short_failures,
            },
            None => PrincipalCheck {
                state: sub.state_name(u).to_string(),
                distribution: d,
                report: KraftReport {
                    k_plus: Vec::new(),
                    k_minus: Vec::new(),
                    condition_a: false,
                    condition_b_failures: Vec::new(),
                    verdict: false,
                },
                top_ok: false,
                short_failures: Vec::new(),
            },
        };
        checks.push(check);
    }
    let ok = checks.iter().all(PrincipalCheck::passed);
    Ok((checks, ok))
}

/// Why a state has no admissible cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailKind {
    /// No path of length at most `r` returns to the candidate set.
    NoPath,
    /// No cut satisfies the top-length inequality.
    TopLength,
    /// Some cuts satisfy the top-length inequality but each fails a shorter one.
    ShortLengths,
}

impl fmt::Display for FailKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailKind::NoPath => "no path back into the set",
            FailKind::TopLength => "top-length inequality",
            FailKind::ShortLengths => "short-length inequalities",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StateVerdict {
    Pass(PrincipalCut),
    Fail(FailKind),
    Inconclusive(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PpSearch {
    Found(PrincipalResult),
    /// Exhaustive negative answer for cuts of length at most `r`.
    NoneWithin { r: usize },
    Inconclusive(String),
}

/// `[eta_1, omega_1, .., eta_r, omega_r]`, parity relative to the subtree root.
type Key = Vec<u32>;
/// Labels and edge paths relative to the subtree root realizing a key, in label order.
type Paths = Vec<(Vec<Sym>, Vec<usize>)>;
type Options = Rc<BTreeMap<Key, Paths>>;

struct CutSearch<'a> {
    g: &'a LabeledGraph,
    inside: &'a [bool],
    r: usize,
    max_entries: usize,
    memo: HashMap<(usize, usize), Options>,
}

fn flip(k: &[u32]) -> Key {
    k.chunks(2).flat_map(|p| [p[1], p[0]]).collect()
}

impl CutSearch<'_> {
    /// Every achievable distribution of prefix-free path sets hanging below `v` at `depth`.
    /// Includes the empty set, and the leaf `v` itself when allowed.
    fn options(&mut self, v: usize, depth: usize) -> Result<Options> {
        if let Some(o) = self.memo.get(&(v, depth)) {
            return Ok(o.clone());
        }
        let mut acc: BTreeMap<Key, Paths> = BTreeMap::new();
        acc.insert(vec![0; 2 * self.r], Vec::new());
        if depth < self.r {
            let mut out = self.g.out_edges(v).to_vec();
            out.sort_by(|&a, &b| self.g.edges()[a].label.cmp(&self.g.edges()[b].label));
            for e in out {
                let to = self.g.edges()[e].to;
                let head = &self.g.edges()[e].label;
                let odd = self.g.label_parity(e) == 1;
                let child = self.options(to, depth + 1)?;
                let mut next: BTreeMap<Key, Paths> = BTreeMap::new();
                for (k1, p1) in &acc {
                    for (k2, p2) in child.iter() {
                        let k2 = if odd { flip(k2) } else { k2.clone() };
                        let key: Key = k1.iter().zip(&k2).map(|(a, b)| a + b).collect();
                        let mut p = p1.clone();
                        p.extend(p2.iter().map(|(w, q)| {
                            let mut label = head.clone();
                            label.extend_from_slice(w);
                            let mut path = Vec::with_capacity(q.len() + 1);
                            path.push(e);
                            path.extend_from_slice(q);
                            (label, path)
                        }));
                        match next.entry(key) {
                            Entry::Vacant(slot) => {
                                slot.insert(p);
                            }
                            Entry::Occupied(mut slot) => {
                                if p.iter().map(|x| &x.0).lt(slot.get().iter().map(|x| &x.0)) {
                                    slot.insert(p);
                                }
                            }
                        }
                    }
                }
                if next.len() > self.max_entries {
                    return Err(Error::Precondition(format!(
                        "more than {} distributions at one tree node",
                        self.max_entries
                    )));
                }
                acc = next;
            }
        }
        if depth >= 1 && self.inside[v] {
            let mut key = vec![0; 2 * self.r];
            key[2 * (depth - 1)] = 1;
            acc.insert(key, vec![(Vec::new(), Vec::new())]);
        }
        let o = Rc::new(acc);
        self.memo.insert((v, depth), o.clone());
        Ok(o)
    }
}

fn key_distribution(k: &[u32]) -> LengthDistribution {
    LengthDistribution::new(
        k.iter().step_by(2).map(|&x| x as i64).collect(),
        k.iter().skip(1).step_by(2).map(|&x| x as i64).collect(),
    )
}

fn tree_nodes(g: &LabeledGraph, u: usize, r: usize) -> u64 {
    // count[v] = paths of length <= t starting at v
    let mut count = vec![1u64; g.num_states()];
    for _ in 0..r {
        count = (0..g.num_states())
            .map(|v| {
                g.out_edges(v)
                    .iter()
                    .fold(1u64, |acc, &e| acc.saturating_add(count[g.edges()[e].to]))
            })
            .collect();
    }
    count[u]
}

/// Finds a cut for `u` whose edges end in `inside` and satisfy the principal-state conditions.
///
/// Ties are broken by smallest top length, then fewest edges, then distribution order,
/// then the lexicographically smallest sorted label list.
pub fn state_cut(g: &LabeledGraph, inside: &[bool], u: usize, n0: u64, n1: u64, r: usize, budget: &Budget) -> StateVerdict {
    let nodes = tree_nodes(g, u, r);
    if nodes > budget.max_tree_nodes {
        return StateVerdict::Inconclusive(format!(
            "path tree of {} has {} nodes at depth {}, budget {}",
            g.state_name(u),
            nodes,
            r,
            budget.max_tree_nodes
        ));
    }
    let mut search = CutSearch {
        g,
        inside,
        r,
        max_entries: budget.max_distributions,
        memo: HashMap::new(),
    };
    let options = match search.options(u, 0) {
        Ok(o) => o,
        Err(e) => return StateVerdict::Inconclusive(e.to_string()),
    };
    let mut any_top = false;
    let mut any = false;
    let mut best: Option<((usize, u32, &Key), KraftReport, LengthDistribution)> = None;
    for key in options.keys() {
        let d = key_distribution(key);
        let Some((report, top_ok, short)) = evaluate(&d, n0 as i64, n1 as i64) else {
            continue;
        };
        any = true;
        any_top |= top_ok;
        if top_ok && short.is_empty() {
            let rank = (d.r().unwrap_or(0), key.iter().sum::<u32>(), key);
            if best.as_ref().is_none_or(|(b, _, _)| rank < *b) {
                best = Some((rank, report, d));
            }
        }
    }
    match best {
        Some(((_, _, key), report, distribution)) => {
            let edges = options[key]
                .iter()
                .map(|(label, path)| {
                    let to = g.edges()[*path.last().expect("nonempty path")].to;
                    CutEdge {
                        path: path.clone(),
                        label: label.clone(),
                        to,
                    }
                })
                .collect();
            StateVerdict::Pass(PrincipalCut {
                state: u,
                edges,
                distribution,
                report,
            })
        }
        None if !any => StateVerdict::Fail(FailKind::NoPath),
        None if any_top => StateVerdict::Fail(FailKind::ShortLengths),
        None => StateVerdict::Fail(FailKind::TopLength),
    }
}

pub(crate) fn check_search_input(g: &LabeledGraph) -> Result<()> {
    if !g.is_ordinary() {
        return Err(Error::NotOrdinary);
    }
    if !is_deterministic(g) {
        return Err(Error::NotDeterministic);
    }
    if !is_irreducible(g) {
        return Err(Error::NotIrreducible);
    }
    Ok(())
}

pub(crate) fn verdicts(
    g: &LabeledGraph,
    inside: &[bool],
    states: &[usize],
    n0: u64,
    n1: u64,
    r: usize,
    budget: &Budget,
) -> Vec<StateVerdict> {
    if budget.parallel {
        states.par_iter().map(|&u| state_cut(g, inside, u, n0, n1, r, budget)).collect()
    } else {
        states.iter().map(|&u| state_cut(g, inside, u, n0, n1, r, budget)).collect()
    }
}

/// Largest set of parity-preserving principal states with cuts of length at most `r`.
///
/// States without a passing cut are removed until none is left to remove; since a
/// passing cut stays passing when the set grows, the result is the unique maximal set.
pub fn pp_principal_search(g: &LabeledGraph, n0: u64, n1: u64, r: usize, budget: &Budget) -> Result<PpSearch> {
    check_search_input(g)?;
    if r == 0 {
        return Err(Error::Precondition("r must be positive".into()));
    }
    if r > budget.max_r {
        return Ok(PpSearch::Inconclusive(format!("r = {r} exceeds budget {}", budget.max_r)));
    }
    let mut inside = vec![true; g.num_states()];
    loop {
        let states: Vec<usize> = (0..g.num_states()).filter(|&u| inside[u]).collect();
        if states.is_empty() {
            return Ok(PpSearch::NoneWithin { r });
        }
        let vs = verdicts(g, &inside, &states, n0, n1, r, budget);
        let mut cuts = Vec::new();
        let mut changed = false;
        for (&u, v) in states.iter().zip(vs) {
            match v {
                StateVerdict::Pass(c) => cuts.push(c),
                StateVerdict::Fail(_) => {
                    inside[u] = false;
                    changed = true;
                }
                StateVerdict::Inconclusive(why) => return Ok(PpSearch::Inconclusive(why)),
            }
        }
        if !changed {
            return Ok(PpSearch::Found(PrincipalResult {
                principal_set: states,
                cuts,
            }));
        }
    }
}
