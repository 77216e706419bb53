//! Tag assignment and streaming encode/decode over tagged encoders.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graphs::{is_deterministic, out_length_distribution, LabeledGraph, ParityAlphabet, Sym};
use crate::kraft::{build_exhaustive_prefix_free, build_parity_prefix_free, validate_list};

/// Deterministic encoder whose edges carry input tags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedEncoder {
    graph: LabeledGraph,
    tag_alphabet: ParityAlphabet,
    tags: Vec<Vec<Sym>>,
    start: usize,
    parity: bool,
}

impl TaggedEncoder {
    /// Validates tag length, per-state exhaustive prefix-free tags and, if `parity`, tag parity.
    pub fn new(
        graph: LabeledGraph,
        tag_alphabet: ParityAlphabet,
        tags: Vec<Vec<Sym>>,
        start: usize,
        parity: bool,
    ) -> Result<Self> {
        let t = TaggedEncoder {
            graph,
            tag_alphabet,
            tags,
            start,
            parity,
        };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let g = &self.graph;
        if !is_deterministic(g) {
            return Err(Error::NotDeterministic);
        }
        if self.start >= g.num_states() {
            return Err(Error::UnknownState(format!("#{}", self.start)));
        }
        if self.tags.len() != g.edges().len() {
            return Err(Error::Tagging(format!(
                "{} tags for {} edges",
                self.tags.len(),
                g.edges().len()
            )));
        }
        for (i, (e, tag)) in g.edges().iter().zip(&self.tags).enumerate() {
            if tag.iter().any(|&s| s >= self.tag_alphabet.len()) {
                return Err(Error::Tagging(format!("edge {i}: tag symbol outside the tag alphabet")));
            }
            if tag.len() != e.len() {
                return Err(Error::Tagging(format!(
                    "edge {i}: tag length {} differs from label length {}",
                    tag.len(),
                    e.len()
                )));
            }
            if self.parity && self.tag_alphabet.parity(tag) != g.label_parity(i) {
                return Err(Error::Tagging(format!("edge {i}: tag parity differs from label parity")));
            }
        }
        for u in 0..g.num_states() {
            let tags: Vec<Vec<Sym>> = g.out_edges(u).iter().map(|&e| self.tags[e].clone()).collect();
            let v = validate_list(&tags, &self.tag_alphabet);
            if !v.prefix_free || !v.exhaustive {
                return Err(Error::Tagging(format!(
                    "state {}: tags are not an exhaustive prefix-free list",
                    g.state_name(u)
                )));
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn tag_alphabet(&self) -> &ParityAlphabet {
        &self.tag_alphabet
    }

    pub fn tags(&self) -> &[Vec<Sym>] {
        &self.tags
    }

    pub fn tag(&self, edge: usize) -> &[Sym] {
        &self.tags[edge]
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_parity_preserving(&self) -> bool {
        self.parity
    }

    pub fn with_start(mut self, start: usize) -> Result<Self> {
        if start >= self.graph.num_states() {
            return Err(Error::UnknownState(format!("#{start}")));
        }
        self.start = start;
        Ok(self)
    }
}

/// Builds per-state tag lists matching each state's length distribution, then pairs tags
/// and edges inside each (length, parity) bucket in lexicographic order.
pub fn assign_tags(e: &LabeledGraph, tag_alphabet: &ParityAlphabet, parity: bool, start: usize) -> Result<TaggedEncoder> {
    let mut tags: Vec<Vec<Sym>> = vec![Vec::new(); e.edges().len()];
    for u in 0..e.num_states() {
        let d = out_length_distribution(e, u)?;
        let list = if parity {
            build_parity_prefix_free(&d, tag_alphabet)?
        } else {
            build_exhaustive_prefix_free(&d.mu(), tag_alphabet)?
        };
        let bucket_of = |len: usize, p: u8| if parity { (len, p) } else { (len, 0) };
        let mut tag_buckets: BTreeMap<(usize, u8), Vec<Vec<Sym>>> = BTreeMap::new();
        for t in list {
            tag_buckets
                .entry(bucket_of(t.len(), tag_alphabet.parity(&t)))
                .or_default()
                .push(t);
        }
        let mut edge_buckets: BTreeMap<(usize, u8), Vec<usize>> = BTreeMap::new();
        for &i in e.out_edges(u) {
            edge_buckets
                .entry(bucket_of(e.edges()[i].len(), e.label_parity(i)))
                .or_default()
                .push(i);
        }
        for (key, mut edges) in edge_buckets {
            let mut ts = tag_buckets.remove(&key).unwrap_or_default();
            if ts.len() != edges.len() {
                return Err(Error::Tagging(format!(
                    "state {}: {} tags for {} edges of length {}",
                    e.state_name(u),
                    ts.len(),
                    edges.len(),
                    key.0
                )));
            }
            edges.sort_by(|&a, &b| e.edges()[a].label.cmp(&e.edges()[b].label));
            ts.sort();
            for (i, t) in edges.into_iter().zip(ts) {
                tags[i] = t;
            }
        }
    }
    TaggedEncoder::new(e.clone(), tag_alphabet.clone(), tags, start, parity)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StreamErrorKind {
    /// Input ended inside a codeword.
    MidEdge,
    /// No codeword matches at this position.
    Unparseable,
}

/// Failed or incomplete stream; the part parsed before the problem is kept.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{}", describe(.kind, .consumed, .position))]
pub struct StreamError {
    pub kind: StreamErrorKind,
    pub output: Vec<Sym>,
    /// Input symbols consumed by complete edges.
    pub consumed: usize,
    /// Position where the failing codeword starts.
    pub position: usize,
    pub state: usize,
}

fn describe(kind: &StreamErrorKind, consumed: &usize, position: &usize) -> String {
    match kind {
        StreamErrorKind::MidEdge => format!("stream ends inside a codeword at position {position} ({consumed} symbols consumed)"),
        StreamErrorKind::Unparseable => format!("no codeword matches at position {position} ({consumed} symbols consumed)"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StreamOutput {
    pub output: Vec<Sym>,
    pub edges: Vec<usize>,
    pub end_state: usize,
}

fn parse(
    t: &TaggedEncoder,
    input: &[Sym],
    key: impl Fn(usize) -> Vec<Sym>,
    emit: impl Fn(usize) -> Vec<Sym>,
) -> std::result::Result<StreamOutput, StreamError> {
    let g = t.graph();
    let mut state = t.start();
    let mut pos = 0;
    let mut out = StreamOutput {
        output: Vec::new(),
        edges: Vec::new(),
        end_state: state,
    };
    while pos < input.len() {
        let rest = &input[pos..];
        let mut partial = false;
        let mut hit = None;
        for &e in g.out_edges(state) {
            let k = key(e);
            if rest.starts_with(&k) {
                hit = Some((e, k.len()));
                break;
            }
            if k.starts_with(rest) {
                partial = true;
            }
        }
        match hit {
            Some((e, len)) => {
                out.output.extend(emit(e));
                out.edges.push(e);
                pos += len;
                state = g.edges()[e].to;
                out.end_state = state;
            }
            None => {
                return Err(StreamError {
                    kind: if partial { StreamErrorKind::MidEdge } else { StreamErrorKind::Unparseable },
                    output: out.output,
                    consumed: pos,
                    position: pos,
                    state,
                });
            }
        }
    }
    Ok(out)
}

/// Maps a tag stream to labels by greedy prefix parsing from the start state.
pub fn encode(t: &TaggedEncoder, tags: &[Sym]) -> std::result::Result<StreamOutput, StreamError> {
    parse(t, tags, |e| t.tag(e).to_vec(), |e| t.graph().edges()[e].label.clone())
}

/// Inverse of [`encode`]: parses labels and emits tags.
pub fn decode(t: &TaggedEncoder, labels: &[Sym]) -> std::result::Result<StreamOutput, StreamError> {
    parse(t, labels, |e| t.graph().edges()[e].label.clone(), |e| t.tag(e).to_vec())
}

/// Cumulative parity of the consumed tags and of the emitted labels.
pub fn parity_audit(t: &TaggedEncoder, tags: &[Sym]) -> std::result::Result<(u8, u8), StreamError> {
    let out = encode(t, tags)?;
    Ok((t.tag_alphabet().parity(tags), t.graph().alphabet().parity(&out.output)))
}
