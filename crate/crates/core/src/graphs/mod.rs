//! Graphs attached to set partitions, Tutte evaluations, acyclic orientations
//! and heaps.

mod heaps;
mod tutte;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::partitions::{blocks_cross, hulls_intersect, nests_inside, SetPartition};
use crate::{Error, Result};

pub use heaps::{acyclic_orientations_unique_source, enumerate_pyramids, HeapMode, HeapOrder, OrientationCount};
pub use tutte::{
    partition_sum_identity_check, tutte_cache_len, tutte_eval, tutte_eval_uncached, tutte_polynomial, TuttePolynomial,
};

/// A finite multigraph with undirected edges, directed edges and loops.
/// Vertices are `0..n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MixedGraph {
    pub n: usize,
    pub undirected: Vec<[usize; 2]>,
    pub directed: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub loops: Vec<usize>,
}

impl MixedGraph {
    pub fn new(n: usize) -> Self {
        MixedGraph {
            n,
            ..Default::default()
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = MixedGraph::new(n);
        for &(a, b) in edges {
            g.add_undirected(a, b)?;
        }
        Ok(g)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::precondition(format!("vertex {v} outside 0..{}", self.n)));
        }
        Ok(())
    }

    /// Adds an undirected edge; `a == b` adds a loop.
    pub fn add_undirected(&mut self, a: usize, b: usize) -> Result<()> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            self.loops.push(a);
        } else {
            self.undirected.push([a.min(b), a.max(b)]);
        }
        Ok(())
    }

    pub fn add_directed(&mut self, from: usize, to: usize) -> Result<()> {
        self.check(from)?;
        self.check(to)?;
        if from == to {
            self.loops.push(from);
        } else {
            self.directed.push([from, to]);
        }
        Ok(())
    }

    pub fn num_edges(&self) -> usize {
        self.undirected.len() + self.directed.len() + self.loops.len()
    }

    /// All non-loop edges with orientation forgotten.
    pub fn underlying_edges(&self) -> Vec<(usize, usize)> {
        self.undirected
            .iter()
            .chain(self.directed.iter())
            .map(|&[a, b]| (a.min(b), a.max(b)))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut adj = vec![0u64; self.n];
        for (a, b) in self.underlying_edges() {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= adj[v];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Induced subgraph on the vertices of `mask`, relabelled in order.
    pub fn induced(&self, mask: u64) -> MixedGraph {
        let index: Vec<Option<usize>> = (0..self.n)
            .scan(0usize, |next, v| {
                Some(if mask >> v & 1 == 1 {
                    *next += 1;
                    Some(*next - 1)
                } else {
                    None
                })
            })
            .collect();
        let map = |e: &[usize; 2]| Some([index[e[0]]?, index[e[1]]?]);
        MixedGraph {
            n: mask.count_ones() as usize,
            undirected: self.undirected.iter().filter_map(map).collect(),
            directed: self.directed.iter().filter_map(map).collect(),
            loops: self.loops.iter().filter_map(|&v| index[v]).collect(),
        }
    }

    /// Graphviz rendering; directed edges as `->`, undirected with `dir=none`.
    pub fn to_dot(&self, name: &str, labels: Option<&SetPartition>) -> String {
        let mut out = format!("digraph {name} {{\n");
        for v in 0..self.n {
            let label = match labels {
                Some(p) => format!(
                    "{{{}}}",
                    p.block_elements(v)
                        .iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                None => v.to_string(),
            };
            let _ = writeln!(out, "  {v} [label=\"{label}\"];");
        }
        for [a, b] in &self.undirected {
            let _ = writeln!(out, "  {a} -> {b} [dir=none];");
        }
        for [a, b] in &self.directed {
            let _ = writeln!(out, "  {a} -> {b};");
        }
        for v in &self.loops {
            let _ = writeln!(out, "  {v} -> {v} [dir=none];");
        }
        out.push_str("}\n");
        out
    }
}

/// Blocks as vertices, an edge for every crossing pair.
pub fn crossing_graph(pi: &SetPartition) -> MixedGraph {
    let b = pi.blocks();
    let mut g = MixedGraph::new(b.len());
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if blocks_cross(b[i], b[j]) {
                g.undirected.push([i, j]);
            }
        }
    }
    g
}

/// Blocks as vertices, an edge whenever the convex hulls intersect.
pub fn anti_interval_graph(pi: &SetPartition) -> MixedGraph {
    let b = pi.blocks();
    let mut g = MixedGraph::new(b.len());
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if hulls_intersect(b[i], b[j]) {
                g.undirected.push([i, j]);
            }
        }
    }
    g
}

/// The anti-interval graph with crossing edges undirected and the remaining
/// (nesting) edges directed outer → inner.
pub fn anti_interval_digraph(pi: &SetPartition) -> MixedGraph {
    let b = pi.blocks();
    let mut g = MixedGraph::new(b.len());
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if blocks_cross(b[i], b[j]) {
                g.undirected.push([i, j]);
            } else if nests_inside(b[j], b[i]) {
                g.directed.push([i, j]);
            } else if nests_inside(b[i], b[j]) {
                g.directed.push([j, i]);
            } else if hulls_intersect(b[i], b[j]) {
                g.undirected.push([i, j]);
            }
        }
    }
    g
}

/// Compact string key of a labelled mixed graph, e.g. `4:0-1,2-3;0>2`.
pub fn digraph_key(g: &MixedGraph) -> String {
    let mut und: Vec<String> = g.undirected.iter().map(|[a, b]| format!("{a}-{b}")).collect();
    let mut dir: Vec<String> = g.directed.iter().map(|[a, b]| format!("{a}>{b}")).collect();
    und.sort();
    dir.sort();
    format!("{}:{};{}", g.n, und.join(","), dir.join(","))
}
