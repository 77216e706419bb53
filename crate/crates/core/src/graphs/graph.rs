use std::collections::HashMap;

use super::alphabet::{ParityAlphabet, Sym};
use crate::error::{Error, Result};

/// Directed edge with a nonempty label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: Vec<Sym>,
}

impl Edge {
    pub fn new(from: usize, to: usize, label: Vec<Sym>) -> Self {
        Edge { from, to, label }
    }

    pub fn len(&self) -> usize {
        self.label.len()
    }

    pub fn is_empty(&self) -> bool {
        self.label.is_empty()
    }
}

/// Labeled directed graph; ordinary when every label has length one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    alphabet: ParityAlphabet,
    states: Vec<String>,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
}

impl LabeledGraph {
    pub fn new(alphabet: ParityAlphabet, states: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, s) in states.iter().enumerate() {
            if seen.insert(s.as_str(), i).is_some() {
                return Err(Error::DuplicateState(s.clone()));
            }
        }
        let mut out = vec![Vec::new(); states.len()];
        for (i, e) in edges.iter().enumerate() {
            for &v in &[e.from, e.to] {
                if v >= states.len() {
                    return Err(Error::UnknownState(format!("#{v}")));
                }
            }
            if e.label.is_empty() {
                return Err(Error::EmptyLabel(i));
            }
            if let Some(&s) = e.label.iter().find(|&&s| s >= alphabet.len()) {
                return Err(Error::UnknownSymbol(format!("#{s}")));
            }
            out[e.from].push(i);
        }
        Ok(LabeledGraph {
            alphabet,
            states,
            edges,
            out,
        })
    }

    /// Builds a graph from names; each edge is `(from, to, label symbols)`.
    pub fn from_names<S: AsRef<str>>(
        alphabet: ParityAlphabet,
        states: &[S],
        edges: &[(&str, &str, &[&str])],
    ) -> Result<Self> {
        let states: Vec<String> = states.iter().map(|s| s.as_ref().to_string()).collect();
        let find = |name: &str| {
            states
                .iter()
                .position(|s| s == name)
                .ok_or_else(|| Error::UnknownState(name.to_string()))
        };
        let mut es = Vec::with_capacity(edges.len());
        for &(f, t, label) in edges {
            es.push(Edge::new(find(f)?, find(t)?, alphabet.encode(label)?));
        }
        Self::new(alphabet, states, es)
    }

    pub fn alphabet(&self) -> &ParityAlphabet {
        &self.alphabet
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn state_name(&self, u: usize) -> &str {
        &self.states[u]
    }

    pub fn state_index(&self, name: &str) -> Result<usize> {
        self.states
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    /// Indices of the edges leaving `u`, in input order.
    pub fn out_edges(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn is_ordinary(&self) -> bool {
        self.edges.iter().all(|e| e.label.len() == 1)
    }

    pub fn max_label_len(&self) -> usize {
        self.edges.iter().map(Edge::len).max().unwrap_or(0)
    }

    pub fn label_parity(&self, e: usize) -> u8 {
        self.alphabet.parity(&self.edges[e].label)
    }

    pub fn render_label(&self, e: usize) -> String {
        self.alphabet.render(&self.edges[e].label)
    }

    /// Same graph over a repartitioned alphabet.
    pub fn with_alphabet(&self, alphabet: ParityAlphabet) -> Result<Self> {
        if alphabet.symbols() != self.alphabet.symbols() {
            return Err(Error::Precondition("alphabet symbols differ".into()));
        }
        Ok(LabeledGraph {
            alphabet,
            ..self.clone()
        })
    }

    pub fn require_edges(&self) -> Result<()> {
        if self.edges.is_empty() {
            Err(Error::NoEdges)
        } else {
            Ok(())
        }
    }
}
