use serde::{Deserialize, Serialize};

use super::{anti_interval_graph, crossing_graph, MixedGraph};
use crate::partitions::{blocks_cross, hulls_intersect, SetPartition};
use crate::{Error, Result};

/// Which pairs of blocks a heap must make comparable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HeapMode {
    /// Crossing pairs.
    Crossing,
    /// Pairs with intersecting convex hulls.
    Interval,
}

/// Result of an orientation count; `disconnected` is set (and the count is 0)
/// when the graph is not connected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationCount {
    pub count: u64,
    pub disconnected: bool,
}

/// Maximum number of distinct edges for exhaustive orientation enumeration.
const MAX_ORIENTATION_EDGES: usize = 26;

fn simple_edges(g: &MixedGraph) -> Vec<(usize, usize)> {
    let mut edges = g.underlying_edges();
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Counts acyclic orientations in which `source` is the only source, by
/// running through all `2^|E|` orientations. Parallel edges must agree in
/// direction and loops admit no acyclic orientation.
pub fn acyclic_orientations_unique_source(g: &MixedGraph, source: usize) -> Result<OrientationCount> {
    if source >= g.n {
        return Err(Error::precondition(format!("vertex {source} outside 0..{}", g.n)));
    }
    if !g.is_connected() {
        return Ok(OrientationCount {
            count: 0,
            disconnected: true,
        });
    }
    if !g.loops.is_empty() {
        return Ok(OrientationCount {
            count: 0,
            disconnected: false,
        });
    }
    let edges = simple_edges(g);
    if edges.len() > MAX_ORIENTATION_EDGES {
        return Err(Error::limit(
            "orientation enumeration edges",
            edges.len(),
            MAX_ORIENTATION_EDGES,
        ));
    }
    let mut count = 0u64;
    let mut out = vec![0u64; g.n];
    for bits in 0u64..1 << edges.len() {
        out.iter_mut().for_each(|o| *o = 0);
        let mut indegree = 0u64;
        for (k, &(a, b)) in edges.iter().enumerate() {
            let (from, to) = if bits >> k & 1 == 0 { (a, b) } else { (b, a) };
            out[from] |= 1 << to;
            indegree |= 1 << to;
        }
        let sources = !indegree & ((1u64 << g.n) - 1);
        if sources != 1 << source {
            continue;
        }
        if is_acyclic(&out) {
            count += 1;
        }
    }
    Ok(OrientationCount {
        count,
        disconnected: false,
    })
}

/// Kahn's algorithm on adjacency bitmasks.
fn is_acyclic(out: &[u64]) -> bool {
    let n = out.len();
    let mut remaining = (1u64 << n) - 1;
    loop {
        if remaining == 0 {
            return true;
        }
        let mut has_in = 0u64;
        let mut r = remaining;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            has_in |= out[v];
            r &= r - 1;
        }
        let free = remaining & !has_in;
        if free == 0 {
            return false;
        }
        remaining &= !free;
    }
}

/// A heap on the blocks of a partition: a DAG whose edges run from the upper
/// block to the lower one. The order is the transitive closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeapOrder {
    pub base: SetPartition,
    pub mode: HeapMode,
    pub edges: Vec<(usize, usize)>,
}

impl HeapOrder {
    /// `below[v]`: bitmask of blocks strictly below `v`.
    pub fn below(&self) -> Vec<u64> {
        let k = self.base.num_blocks();
        let mut below = vec![0u64; k];
        for &(u, l) in &self.edges {
            below[u] |= 1 << l;
        }
        loop {
            let mut changed = false;
            for v in 0..k {
                let mut acc = below[v];
                let mut m = below[v];
                while m != 0 {
                    let w = m.trailing_zeros() as usize;
                    acc |= below[w];
                    m &= m - 1;
                }
                if acc != below[v] {
                    below[v] = acc;
                    changed = true;
                }
            }
            if !changed {
                return below;
            }
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.below().iter().enumerate().all(|(v, b)| b >> v & 1 == 0)
    }

    /// Blocks with nothing above them.
    pub fn maximal_elements(&self) -> Vec<usize> {
        let below = self.below();
        let covered = below.iter().fold(0u64, |acc, b| acc | b);
        (0..self.base.num_blocks()).filter(|v| covered >> v & 1 == 0).collect()
    }

    /// Blocks with nothing below them.
    pub fn minimal_elements(&self) -> Vec<usize> {
        let below = self.below();
        (0..self.base.num_blocks()).filter(|&v| below[v] == 0).collect()
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        let below = self.below();
        below[a] >> b & 1 == 1 || below[b] >> a & 1 == 1
    }

    /// Acyclic and every conflicting pair comparable.
    pub fn is_heap(&self) -> bool {
        if !self.is_acyclic() {
            return false;
        }
        let below = self.below();
        let blocks = self.base.blocks();
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                let conflict = match self.mode {
                    HeapMode::Crossing => blocks_cross(blocks[i], blocks[j]),
                    HeapMode::Interval => hulls_intersect(blocks[i], blocks[j]),
                };
                if conflict && below[i] >> j & 1 == 0 && below[j] >> i & 1 == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// A heap whose only maximal element is the block containing 1.
    pub fn is_pyramid(&self) -> bool {
        self.is_heap() && self.maximal_elements() == vec![0]
    }
}

/// All pyramids on `pi`, as acyclic orientations of the crossing graph
/// (resp. anti-interval graph) whose unique source is the block containing 1.
pub fn enumerate_pyramids(pi: &SetPartition, mode: HeapMode) -> Result<Vec<HeapOrder>> {
    let graph = match mode {
        HeapMode::Crossing => {
            if !pi.is_connected() {
                return Err(Error::precondition(format!("{pi} is disconnected")));
            }
            crossing_graph(pi)
        }
        HeapMode::Interval => {
            if !pi.is_irreducible() {
                return Err(Error::precondition(format!("{pi} is reducible")));
            }
            anti_interval_graph(pi)
        }
    };
    let edges = simple_edges(&graph);
    let k = graph.n;
    let mut out = Vec::new();
    let mut reach: Vec<u64> = (0..k).map(|v| 1u64 << v).collect();
    let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    orient(&edges, 0, &mut reach, &mut chosen, &mut |chosen| {
        let mut indegree = 0u64;
        for &(_, l) in chosen {
            indegree |= 1 << l;
        }
        if !indegree & ((1u64 << k) - 1) == 1 {
            out.push(HeapOrder {
                base: pi.clone(),
                mode,
                edges: chosen.to_vec(),
            });
        }
    });
    Ok(out)
}

type Arcs<'a> = &'a [(usize, usize)];

/// Backtracking over edge directions, skipping any choice that closes a cycle.
/// `reach[v]` holds the vertices reachable from `v`, itself included.
fn orient(
    edges: &[(usize, usize)],
    i: usize,
    reach: &mut Vec<u64>,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(Arcs),
) {
    if i == edges.len() {
        emit(chosen);
        return;
    }
    let (a, b) = edges[i];
    for (from, to) in [(a, b), (b, a)] {
        if reach[to] >> from & 1 == 1 {
            continue;
        }
        let saved = reach.clone();
        let gained = reach[to];
        for r in reach.iter_mut() {
            if *r >> from & 1 == 1 {
                *r |= gained;
            }
        }
        chosen.push((from, to));
        orient(edges, i + 1, reach, chosen, emit);
        chosen.pop();
        *reach = saved;
    }
}
