//! Labeled graphs, parity alphabets and length distributions.

mod alphabet;
mod distribution;
mod graph;
mod ops;

pub use alphabet::{parity_of_word, ParityAlphabet, Sym};
pub use distribution::LengthDistribution;
pub use graph::{Edge, LabeledGraph};
pub use ops::{
    expand_vlg, graph_power, induced_subgraph, is_deterministic, is_irreducible, out_length_distribution,
    parity_subgraph, reduce_to_shannon_cover, strongly_connected_components, words_upto, StateOrigin,
};
