use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::parity::pp_principal_check;
use super::{EncoderCandidate, PrincipalResult, TrimEntry};
use crate::error::{Error, Result};
use crate::graphs::{out_length_distribution, LabeledGraph};
use crate::kraft::kraft_functional;

fn rebuild(h: &LabeledGraph, removed: &[bool]) -> Result<LabeledGraph> {
    let edges = h
        .edges()
        .iter()
        .zip(removed)
        .filter(|(_, &r)| !r)
        .map(|(e, _)| e.clone())
        .collect();
    LabeledGraph::new(h.alphabet().clone(), h.states().to_vec(), edges)
}

/// Removes longest edges (then label-largest) until each state meets Kraft equality over `n` symbols.
pub fn trim_ordinary(h: &LabeledGraph, n: u64) -> Result<EncoderCandidate> {
    let n = n as i64;
    let mut removed = vec![false; h.edges().len()];
    let mut log = Vec::new();
    for u in 0..h.num_states() {
        let d = out_length_distribution(h, u)?;
        let mut mu = d.mu();
        let r = mu.len();
        if r == 0 || kraft_functional(&mu, n, r).is_positive() {
            return Err(Error::Precondition(format!(
                "state {} has Kraft mass below one",
                h.state_name(u)
            )));
        }
        let mut order: Vec<usize> = h.out_edges(u).to_vec();
        order.sort_by(|&a, &b| {
            let (ea, eb) = (&h.edges()[a], &h.edges()[b]);
            eb.len().cmp(&ea.len()).then(eb.label.cmp(&ea.label))
        });
        let (mut even, mut odd) = (0, 0);
        for e in order {
            let top = mu.iter().rposition(|&m| m != 0).map_or(0, |i| i + 1);
            if kraft_functional(&mu, n, top).is_zero() {
                break;
            }
            mu[h.edges()[e].len() - 1] -= 1;
            removed[e] = true;
            if h.label_parity(e) == 0 {
                even += 1;
            } else {
                odd += 1;
            }
        }
        log.push(TrimEntry {
            state: h.state_name(u).to_string(),
            removed_even: even,
            removed_odd: odd,
        });
    }
    Ok(EncoderCandidate {
        graph: rebuild(h, &removed)?,
        principal: PrincipalResult::default(),
        trim_log: log,
    })
}

/// Removes `y+ = -(K+ + K-)/2` even and `y- = -(K+ - K-)/2` odd edges of top length per state.
pub fn trim_pp(h: &LabeledGraph, n0: u64, n1: u64) -> Result<EncoderCandidate> {
    let all: Vec<usize> = (0..h.num_states()).collect();
    let (checks, ok) = pp_principal_check(h, &all, n0, n1)?;
    if !ok {
        let bad: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.state.as_str()).collect();
        return Err(Error::Precondition(format!(
            "states {} are not principal",
            bad.join(",")
        )));
    }
    let mut removed = vec![false; h.edges().len()];
    let mut log = Vec::new();
    for (u, check) in checks.iter().enumerate() {
        let r = check.distribution.r().expect("passing state has edges");
        let kp = check.report.k_plus_total();
        let km = check.report.k_minus_total();
        let two = BigInt::from(2);
        let sum = -(kp + km);
        let diff = -(kp - km);
        assert!(
            (&sum % &two).is_zero() && !sum.is_negative() && !diff.is_negative(),
            "K+ and K- must share parity with K+ <= -|K-|"
        );
        let y_plus = i64::try_from(sum / &two).expect("small count");
        let y_minus = i64::try_from(diff / &two).expect("small count");
        assert!(
            y_plus <= check.distribution.eta(r) && y_minus <= check.distribution.omega(r),
            "cannot remove more top-length edges than exist"
        );
        for (parity, count) in [(0u8, y_plus), (1u8, y_minus)] {
            let mut top: Vec<usize> = h
                .out_edges(u)
                .iter()
                .copied()
                .filter(|&e| h.edges()[e].len() == r && h.label_parity(e) == parity)
                .collect();
            top.sort_by(|&a, &b| h.edges()[b].label.cmp(&h.edges()[a].label));
            for &e in top.iter().take(count as usize) {
                removed[e] = true;
            }
        }
        log.push(TrimEntry {
            state: check.state.clone(),
            removed_even: y_plus as u64,
            removed_odd: y_minus as u64,
        });
    }
    Ok(EncoderCandidate {
        graph: rebuild(h, &removed)?,
        principal: PrincipalResult::default(),
        trim_log: log,
    })
}
