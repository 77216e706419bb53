use super::parity::{check_search_input, verdicts, FailKind, StateVerdict};
use super::{cut_graph, trim_pp, Budget, EncoderCandidate, PrincipalResult};
use crate::error::{Error, Result};
use crate::graphs::{reduce_to_shannon_cover, LabeledGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateOutcome {
    pub r: usize,
    pub states: Vec<String>,
    /// First state without a passing cut, and why. `None` means the candidate passed.
    pub failure: Option<(String, FailKind)>,
}

#[derive(Clone, Debug)]
pub struct NoneReport {
    pub rmax: usize,
    pub max_states: usize,
    /// The reduced presentation the search ran on.
    pub cover: LabeledGraph,
    pub candidates: Vec<CandidateOutcome>,
    pub found: Option<EncoderCandidate>,
    pub inconclusive: Option<String>,
}

impl NoneReport {
    pub fn passing(&self) -> usize {
        self.candidates.iter().filter(|c| c.failure.is_none()).count()
    }
}

fn subsets(n: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (1u32..1 << n)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| s.len() <= max_size)
        .collect();
    all.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    all
}

/// Bounded search for a deterministic parity-preserving encoder with cuts of length at most `rmax`
/// on state sets of at most `max_states` states of the Shannon cover.
///
/// Candidates are tried by `r`, then by decreasing size; the first passing one is trimmed into an encoder.
pub fn search_none(
    g: &LabeledGraph,
    n0: u64,
    n1: u64,
    rmax: usize,
    max_states: usize,
    budget: &Budget,
) -> Result<NoneReport> {
    check_search_input(g)?;
    if n1 > 0 && g.alphabet().n1() == 0 {
        return Err(Error::Precondition(
            "every label is even, so no list can realize odd tags (n1 must be 0)".into(),
        ));
    }
    let cover = reduce_to_shannon_cover(g)?;
    if cover.num_states() > 16 {
        return Err(Error::Precondition("subset search supports at most 16 states".into()));
    }
    let mut report = NoneReport {
        rmax,
        max_states,
        cover: cover.clone(),
        candidates: Vec::new(),
        found: None,
        inconclusive: None,
    };
    for r in 1..=rmax {
        if r > budget.max_r {
            report.inconclusive = Some(format!("r = {r} exceeds budget {}", budget.max_r));
            return Ok(report);
        }
        for set in subsets(cover.num_states(), max_states) {
            let mut inside = vec![false; cover.num_states()];
            for &u in &set {
                inside[u] = true;
            }
            let vs = verdicts(&cover, &inside, &set, n0, n1, r, budget);
            let mut failure = None;
            let mut cuts = Vec::new();
            for (&u, v) in set.iter().zip(vs) {
                match v {
                    StateVerdict::Pass(c) => cuts.push(c),
                    StateVerdict::Fail(kind) => {
                        failure = Some((cover.state_name(u).to_string(), kind));
                        break;
                    }
                    StateVerdict::Inconclusive(why) => {
                        report.inconclusive = Some(why);
                        return Ok(report);
                    }
                }
            }
            let passed = failure.is_none();
            report.candidates.push(CandidateOutcome {
                r,
                states: set.iter().map(|&u| cover.state_name(u).to_string()).collect(),
                failure,
            });
            if passed {
                let principal = PrincipalResult {
                    principal_set: set,
                    cuts,
                };
                let h = cut_graph(&cover, &principal)?;
                let mut enc = trim_pp(&h, n0, n1)?;
                enc.principal = principal;
                report.found = Some(enc);
                return Ok(report);
            }
        }
    }
    Ok(report)
}
