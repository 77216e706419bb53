//! Bundled example graphs.

use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::io::GraphFile;
use crate::tagging::TaggedEncoder;

pub const ALL: &[(&str, &str)] = &[
    ("two_state", include_str!("../fixtures/two_state.json")),
    ("two_state_fixed_encoder", include_str!("../fixtures/two_state_fixed_encoder.json")),
    ("two_state_vlg", include_str!("../fixtures/two_state_vlg.json")),
    ("two_state_vlg_tagged", include_str!("../fixtures/two_state_vlg_tagged.json")),
    ("two_state_vle_nondet", include_str!("../fixtures/two_state_vle_nondet.json")),
    ("rll_2_inf", include_str!("../fixtures/rll_2_inf.json")),
    ("rll_2_inf_sq", include_str!("../fixtures/rll_2_inf_sq.json")),
    ("rll_vle_ordinary", include_str!("../fixtures/rll_vle_ordinary.json")),
    ("rll_vle_ordinary_tagged", include_str!("../fixtures/rll_vle_ordinary_tagged.json")),
    ("rll_vle_parity", include_str!("../fixtures/rll_vle_parity.json")),
    ("rll_vle_parity_tagged", include_str!("../fixtures/rll_vle_parity_tagged.json")),
];

pub fn file(name: &str) -> Result<GraphFile> {
    let (_, text) = ALL
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Format(format!("no fixture named `{name}`")))?;
    GraphFile::parse(text)
}

fn graph(name: &str) -> LabeledGraph {
    file(name).and_then(|f| f.graph()).expect("bundled fixture")
}

fn tagged(name: &str) -> TaggedEncoder {
    file(name).and_then(|f| f.tagged()).expect("bundled fixture")
}

/// Odd symbols `c, d`.
pub fn two_state() -> LabeledGraph {
    graph("two_state")
}

/// [`two_state`] with odd symbols `b, c, d`.
pub fn two_state_bcd_odd() -> LabeledGraph {
    let g = two_state();
    g.with_alphabet(g.alphabet().repartition(["b", "c", "d"]).expect("static"))
        .expect("same symbols")
}

pub fn two_state_fixed_encoder() -> LabeledGraph {
    graph("two_state_fixed_encoder")
}

pub fn two_state_vlg() -> LabeledGraph {
    graph("two_state_vlg")
}

pub fn two_state_vlg_tagged() -> TaggedEncoder {
    tagged("two_state_vlg_tagged")
}

pub fn two_state_vle_nondet() -> LabeledGraph {
    graph("two_state_vle_nondet")
}

pub fn rll_2_inf() -> LabeledGraph {
    graph("rll_2_inf")
}

pub fn rll_2_inf_sq() -> LabeledGraph {
    graph("rll_2_inf_sq")
}

pub fn rll_vle_ordinary() -> LabeledGraph {
    graph("rll_vle_ordinary")
}

pub fn rll_vle_ordinary_tagged() -> TaggedEncoder {
    tagged("rll_vle_ordinary_tagged")
}

pub fn rll_vle_parity() -> LabeledGraph {
    graph("rll_vle_parity")
}

pub fn rll_vle_parity_tagged() -> TaggedEncoder {
    tagged("rll_vle_parity_tagged")
}
