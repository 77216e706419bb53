use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::alphabet::{ParityAlphabet, Sym};
use super::distribution::LengthDistribution;
use super::graph::{Edge, LabeledGraph};
use crate::error::{Error, Result};

/// Per-state outgoing labels form a prefix-free list.
pub fn is_deterministic(g: &LabeledGraph) -> bool {
    (0..g.num_states()).all(|u| {
        let mut labels: Vec<&[Sym]> = g.out_edges(u).iter().map(|&e| g.edges()[e].label.as_slice()).collect();
        labels.sort();
        // after sorting, a prefix sits directly before some word it prefixes
        labels.windows(2).all(|w| !w[1].starts_with(w[0]))
    })
}

/// Tarjan's algorithm, iterative. Components come out in reverse topological order.
pub fn strongly_connected_components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

fn successor_lists(g: &LabeledGraph) -> Vec<Vec<usize>> {
    (0..g.num_states())
        .map(|u| g.out_edges(u).iter().map(|&e| g.edges()[e].to).collect())
        .collect()
}

/// Strongly connected, with at least one edge (so a lone state needs a self-loop).
pub fn is_irreducible(g: &LabeledGraph) -> bool {
    if g.num_states() == 0 || g.edges().is_empty() {
        return false;
    }
    strongly_connected_components(&successor_lists(g)).len() == 1
}

/// Graph whose edges are the length-`t` paths of `g`, labeled over the product alphabet.
pub fn graph_power(g: &LabeledGraph, t: usize) -> Result<LabeledGraph> {
    if t == 0 {
        return Err(Error::ZeroPower);
    }
    if !g.is_ordinary() {
        return Err(Error::NotOrdinary);
    }
    if t == 1 {
        return Ok(g.clone());
    }
    let mut paths: Vec<(usize, usize, Vec<Sym>)> = Vec::new();
    for u in 0..g.num_states() {
        let mut stack: Vec<(usize, Vec<Sym>)> = vec![(u, Vec::new())];
        // reverse push keeps paths in edge order
        while let Some((v, word)) = stack.pop() {
            if word.len() == t {
                paths.push((u, v, word));
                continue;
            }
            for &e in g.out_edges(v).iter().rev() {
                let mut w = word.clone();
                w.push(g.edges()[e].label[0]);
                stack.push((g.edges()[e].to, w));
            }
        }
    }
    if paths.is_empty() {
        return Err(Error::NoEdges);
    }
    let base = g.alphabet();
    let words: BTreeSet<Vec<Sym>> = paths.iter().map(|p| p.2.clone()).collect();
    let joiner = if base.symbols().iter().all(|s| s.chars().count() == 1) { "" } else { "+" };
    let names: Vec<String> = words
        .iter()
        .map(|w| w.iter().map(|&s| base.name(s)).collect::<Vec<_>>().join(joiner))
        .collect();
    let odd: Vec<String> = words
        .iter()
        .zip(&names)
        .filter(|(w, _)| base.parity(w) == 1)
        .map(|(_, n)| n.clone())
        .collect();
    let alphabet = ParityAlphabet::new(names, odd)?;
    let pos: HashMap<&Vec<Sym>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let edges = paths
        .iter()
        .map(|(u, v, w)| Edge::new(*u, *v, vec![pos[w]]))
        .collect();
    LabeledGraph::new(alphabet, g.states().to_vec(), edges)
}

/// Where a state of an expanded graph came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StateOrigin {
    Original(usize),
    /// Dummy state reached after `offset` symbols of edge `edge`.
    Dummy { edge: usize, offset: usize },
}

/// Replaces each length-`l` edge by a path of `l` ordinary edges through fresh dummy states.
pub fn expand_vlg(h: &LabeledGraph) -> (LabeledGraph, Vec<StateOrigin>) {
    let mut states: Vec<String> = h.states().to_vec();
    let mut origin: Vec<StateOrigin> = (0..states.len()).map(StateOrigin::Original).collect();
    let mut taken: BTreeSet<String> = states.iter().cloned().collect();
    let mut edges = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        let mut prev = e.from;
        for (k, &s) in e.label.iter().enumerate() {
            let next = if k + 1 == e.label.len() {
                e.to
            } else {
                let mut name = format!("{}~{}.{}", h.state_name(e.from), i, k + 1);
                while taken.contains(&name) {
                    name.push('\'');
                }
                taken.insert(name.clone());
                states.push(name);
                origin.push(StateOrigin::Dummy { edge: i, offset: k + 1 });
                states.len() - 1
            };
            edges.push(Edge::new(prev, next, vec![s]));
            prev = next;
        }
    }
    let g = LabeledGraph::new(h.alphabet().clone(), states, edges).expect("expansion is well formed");
    (g, origin)
}

/// Moore refinement; returns the class of each state with classes numbered by first occurrence.
fn refine(g: &LabeledGraph) -> Vec<usize> {
    let number = |sigs: Vec<Vec<(usize, usize)>>| -> Vec<usize> {
        let mut ids: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
        sigs.into_iter()
            .map(|s| {
                let k = ids.len();
                *ids.entry(s).or_insert(k)
            })
            .collect()
    };
    let mut class = number(
        (0..g.num_states())
            .map(|u| {
                let mut s: Vec<(usize, usize)> =
                    g.out_edges(u).iter().map(|&e| (g.edges()[e].label[0], 0)).collect();
                s.sort_unstable();
                s
            })
            .collect(),
    );
    loop {
        let count = class.iter().max().map_or(0, |m| m + 1);
        let next = number(
            (0..g.num_states())
                .map(|u| {
                    let mut s: Vec<(usize, usize)> = g
                        .out_edges(u)
                        .iter()
                        .map(|&e| (g.edges()[e].label[0], class[g.edges()[e].to]))
                        .collect();
                    s.sort_unstable();
                    s.insert(0, (usize::MAX, class[u]));
                    s
                })
                .collect(),
        );
        let new_count = next.iter().max().map_or(0, |m| m + 1);
        class = next;
        if new_count == count {
            return class;
        }
    }
}

/// Merges states with equal follower sets.
pub fn reduce_to_shannon_cover(g: &LabeledGraph) -> Result<LabeledGraph> {
    if !g.is_ordinary() {
        return Err(Error::NotOrdinary);
    }
    if !is_deterministic(g) {
        return Err(Error::NotDeterministic);
    }
    if !is_irreducible(g) {
        return Err(Error::NotIrreducible);
    }
    let class = refine(g);
    let k = class.iter().max().map_or(0, |m| m + 1);
    let mut rep = vec![usize::MAX; k];
    for (u, &c) in class.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = u;
        }
    }
    let states = rep.iter().map(|&u| g.state_name(u).to_string()).collect();
    let mut edges = Vec::new();
    for &u in &rep {
        for &e in g.out_edges(u) {
            let e = &g.edges()[e];
            edges.push(Edge::new(class[u], class[e.to], e.label.clone()));
        }
    }
    LabeledGraph::new(g.alphabet().clone(), states, edges)
}

/// Keeps only the edges whose label parity is `b`.
pub fn parity_subgraph(g: &LabeledGraph, b: u8) -> LabeledGraph {
    let edges = (0..g.edges().len())
        .filter(|&e| g.label_parity(e) == b)
        .map(|e| g.edges()[e].clone())
        .collect();
    LabeledGraph::new(g.alphabet().clone(), g.states().to_vec(), edges).expect("subgraph of valid graph")
}

/// Subgraph on `keep` (listed in original state order).
pub fn induced_subgraph(g: &LabeledGraph, keep: &[usize]) -> Result<LabeledGraph> {
    if keep.is_empty() {
        return Err(Error::EmptyStateSet);
    }
    let mut map = vec![None; g.num_states()];
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    for (i, &u) in kept.iter().enumerate() {
        if u >= g.num_states() {
            return Err(Error::UnknownState(format!("#{u}")));
        }
        map[u] = Some(i);
    }
    let states = kept.iter().map(|&u| g.state_name(u).to_string()).collect();
    let edges = g
        .edges()
        .iter()
        .filter_map(|e| Some(Edge::new(map[e.from]?, map[e.to]?, e.label.clone())))
        .collect();
    LabeledGraph::new(g.alphabet().clone(), states, edges)
}

/// Even/odd counts of outgoing labels of `u` by length.
pub fn out_length_distribution(g: &LabeledGraph, u: usize) -> Result<LengthDistribution> {
    if u >= g.num_states() {
        return Err(Error::UnknownState(format!("#{u}")));
    }
    Ok(LengthDistribution::from_words(
        g.out_edges(u).iter().map(|&e| (g.edges()[e].len(), g.label_parity(e))),
    ))
}

/// Words of length `1..=k` generated by paths of an ordinary graph (from any state).
pub fn words_upto(g: &LabeledGraph, k: usize) -> BTreeSet<Vec<Sym>> {
    assert!(g.is_ordinary(), "words_upto needs an ordinary graph");
    let mut out = BTreeSet::new();
    // frontier maps a word to the set of states it can end in
    let mut frontier: BTreeMap<Vec<Sym>, BTreeSet<usize>> = BTreeMap::new();
    frontier.insert(Vec::new(), (0..g.num_states()).collect());
    for _ in 0..k {
        let mut next: BTreeMap<Vec<Sym>, BTreeSet<usize>> = BTreeMap::new();
        for (w, ends) in &frontier {
            for &u in ends {
                for &e in g.out_edges(u) {
                    let e = &g.edges()[e];
                    let mut w2 = w.clone();
                    w2.push(e.label[0]);
                    next.entry(w2).or_default().insert(e.to);
                }
            }
        }
        out.extend(next.keys().cloned());
        frontier = next;
    }
    out
}
