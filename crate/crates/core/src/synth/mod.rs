//! Principal states, trimming into encoders, and encoder verification.

mod none;
mod parity;
mod principal;
mod trim;
mod verify;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graphs::{Edge, LabeledGraph, LengthDistribution, Sym};
use crate::kraft::KraftReport;

pub use none::{search_none, CandidateOutcome, NoneReport};
pub use parity::{pp_principal_check, pp_principal_search, FailKind, PpSearch, PrincipalCheck, StateVerdict};
pub use principal::ordinary_principal_states;
pub use trim::{trim_ordinary, trim_pp};
pub use verify::{language_containment, verify_vle, StateVerification, VleReport};

/// Limits for the exhaustive parity-preserving search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_r: usize,
    /// Paths of length at most `r` from one state.
    pub max_tree_nodes: u64,
    /// Distinct length distributions kept per tree node.
    pub max_distributions: usize,
    pub parallel: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_r: 4,
            max_tree_nodes: 10_000,
            max_distributions: 200_000,
            parallel: false,
        }
    }
}

/// One outgoing edge of a principal state: a path of the constraint graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutEdge {
    /// Edge indices in the constraint graph.
    pub path: Vec<usize>,
    pub label: Vec<Sym>,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalCut {
    pub state: usize,
    pub edges: Vec<CutEdge>,
    pub distribution: LengthDistribution,
    pub report: KraftReport,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrincipalResult {
    /// States of the constraint graph, in graph order. Empty when none exist.
    pub principal_set: Vec<usize>,
    pub cuts: Vec<PrincipalCut>,
}

impl PrincipalResult {
    pub fn is_empty(&self) -> bool {
        self.principal_set.is_empty()
    }

    pub fn state_names(&self, g: &LabeledGraph) -> Vec<String> {
        self.principal_set.iter().map(|&u| g.state_name(u).to_string()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrimEntry {
    pub state: String,
    pub removed_even: u64,
    pub removed_odd: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncoderCandidate {
    pub graph: LabeledGraph,
    pub principal: PrincipalResult,
    pub trim_log: Vec<TrimEntry>,
}

/// The variable-length graph on the principal states whose edges are the chosen cuts.
pub fn cut_graph(g: &LabeledGraph, result: &PrincipalResult) -> Result<LabeledGraph> {
    let pos = |u: usize| result.principal_set.iter().position(|&p| p == u).expect("cut stays in principal set");
    let states = result.state_names(g);
    let mut edges = Vec::new();
    for cut in &result.cuts {
        let mut es: Vec<&CutEdge> = cut.edges.iter().collect();
        es.sort_by(|a, b| a.label.cmp(&b.label));
        for e in es {
            edges.push(Edge::new(pos(cut.state), pos(e.to), e.label.clone()));
        }
    }
    LabeledGraph::new(g.alphabet().clone(), states, edges)
}

/// Principal states, cut graph and trimming in one step; `None` when no principal states exist.
pub fn synthesize(
    g: &LabeledGraph,
    n0: u64,
    n1: u64,
    r: usize,
    parity: bool,
    budget: &Budget,
) -> Result<Synthesis> {
    let principal = if parity {
        match pp_principal_search(g, n0, n1, r, budget)? {
            PpSearch::Found(p) => p,
            PpSearch::NoneWithin { r } => return Ok(Synthesis::None { r }),
            PpSearch::Inconclusive(why) => return Ok(Synthesis::Inconclusive(why)),
        }
    } else {
        let p = ordinary_principal_states(g, n0 + n1, r)?;
        if p.is_empty() {
            return Ok(Synthesis::None { r });
        }
        p
    };
    let h = cut_graph(g, &principal)?;
    let mut enc = if parity { trim_pp(&h, n0, n1)? } else { trim_ordinary(&h, n0 + n1)? };
    enc.principal = principal;
    Ok(Synthesis::Encoder(Box::new(enc)))
}

#[derive(Clone, Debug)]
pub enum Synthesis {
    Encoder(Box<EncoderCandidate>),
    None { r: usize },
    Inconclusive(String),
}
