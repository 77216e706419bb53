//! JSON graph files.
//!
//! ```json
//! {"alphabet": ["a","b"], "odd": ["b"], "states": ["s"],
//!  "edges": [{"from": "s", "to": "s", "label": ["a"], "tag": ["0"]}]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{Edge, LabeledGraph, ParityAlphabet};
use crate::synth::TrimEntry;
use crate::tagging::TaggedEncoder;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub from: String,
    pub to: String,
    pub label: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub alphabet: Vec<String>,
    #[serde(default)]
    pub odd: Vec<String>,
    pub states: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    /// Defaults to `{0, 1}` with `1` odd.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag_alphabet: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag_odd: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity_preserving: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub principal_states: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trim_log: Option<Vec<TrimEntry>>,
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph files serialize")
    }

    pub fn from_graph(g: &LabeledGraph) -> Self {
        let a = g.alphabet();
        GraphFile {
            alphabet: a.symbols().to_vec(),
            odd: a.odd_symbols().into_iter().map(String::from).collect(),
            states: g.states().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    from: g.state_name(e.from).to_string(),
                    to: g.state_name(e.to).to_string(),
                    label: e.label.iter().map(|&s| a.name(s).to_string()).collect(),
                    tag: None,
                })
                .collect(),
            ..GraphFile::default()
        }
    }

    pub fn from_tagged(t: &TaggedEncoder) -> Self {
        let mut f = Self::from_graph(t.graph());
        let ta = t.tag_alphabet();
        for (i, rec) in f.edges.iter_mut().enumerate() {
            rec.tag = Some(t.tag(i).iter().map(|&s| ta.name(s).to_string()).collect());
        }
        f.tag_alphabet = Some(ta.symbols().to_vec());
        f.tag_odd = Some(ta.odd_symbols().into_iter().map(String::from).collect());
        f.start = Some(t.graph().state_name(t.start()).to_string());
        f.parity_preserving = Some(t.is_parity_preserving());
        f
    }

    pub fn graph(&self) -> Result<LabeledGraph> {
        let alphabet = ParityAlphabet::new(self.alphabet.iter().cloned(), &self.odd)?;
        let find = |name: &str| {
            self.states
                .iter()
                .position(|s| s == name)
                .ok_or_else(|| Error::UnknownState(name.to_string()))
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for rec in &self.edges {
            edges.push(Edge::new(find(&rec.from)?, find(&rec.to)?, alphabet.encode(&rec.label)?));
        }
        LabeledGraph::new(alphabet, self.states.clone(), edges)
    }

    pub fn tag_alphabet(&self) -> Result<ParityAlphabet> {
        match (&self.tag_alphabet, &self.tag_odd) {
            (None, None) => Ok(ParityAlphabet::binary()),
            (Some(s), odd) => ParityAlphabet::new(s.iter().cloned(), odd.clone().unwrap_or_default()),
            (None, Some(_)) => Err(Error::Format("tag_odd given without tag_alphabet".into())),
        }
    }

    pub fn has_tags(&self) -> bool {
        self.edges.iter().any(|e| e.tag.is_some())
    }

    /// The tagged encoder, if every edge carries a tag.
    pub fn tagged(&self) -> Result<TaggedEncoder> {
        if !self.edges.iter().all(|e| e.tag.is_some()) {
            return Err(Error::Format("not every edge has a tag".into()));
        }
        let g = self.graph()?;
        let ta = self.tag_alphabet()?;
        let tags = self
            .edges
            .iter()
            .map(|e| ta.encode(e.tag.as_ref().expect("checked above")))
            .collect::<Result<Vec<_>>>()?;
        let start = match &self.start {
            Some(s) => g.state_index(s)?,
            None => 0,
        };
        TaggedEncoder::new(g, ta, tags, start, self.parity_preserving.unwrap_or(true))
    }
}

pub fn load(path: &std::path::Path) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    GraphFile::parse(&text)
}
