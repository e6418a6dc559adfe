//! Permutations in one-line notation, runs and cycle runs, Eulerian numbers,
//! the bijection `Ψ` between cyclic permutations and pyramidal interval heaps,
//! and the involution `Φ` acting on the last descent.
//!
//! Cycle words are written in standard form: each cycle starts at its
//! minimum and cycles are sorted by their minima.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Polynomial, Rational};
use crate::graphs::{HeapMode, HeapOrder};
use crate::partitions::{hulls_intersect, SetPartition};
use crate::{Error, Result};

/// A bijection of `[n]`, stored as `σ(1), …, σ(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line
    }
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{one_line:?} is not a bijection")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// Builds the permutation with the given disjoint cycles; unmentioned
    /// points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut one_line: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || seen[a - 1] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?}")));
                }
                seen[a - 1] = true;
                one_line[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { one_line })
    }

    /// Parses cycle notation such as `"(1,3)(2,5,7)"`. The size is `n`, or the
    /// largest element mentioned when `n` is `None`.
    pub fn parse_cycles(text: &str, n: Option<usize>) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        let mut offset = text.len() - text.trim_start().len();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::parse(offset, "expected `(`"));
            }
            let close = rest.find(')').ok_or_else(|| Error::parse(offset, "unclosed cycle"))?;
            let body = &rest[1..close];
            let cycle = body
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::parse(offset + 1, format!("bad element `{}`", t.trim())))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            let consumed = close + 1;
            let after = &rest[consumed..];
            offset += consumed + (after.len() - after.trim_start().len());
            rest = after.trim_start();
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = n.unwrap_or(max);
        Self::from_cycles(n, &cycles)
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    /// Cycles in standard form.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            while !seen[a - 1] {
                seen[a - 1] = true;
                cycle.push(a);
                a = self.apply(a);
            }
            out.push(cycle);
        }
        out
    }

    /// Concatenation of the standard cycle words.
    pub fn cycle_word(&self) -> Vec<usize> {
        self.cycles().concat()
    }

    pub fn cycle_notation(&self) -> String {
        self.cycles()
            .iter()
            .map(|c| format!("({})", c.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")))
            .collect()
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }

    /// A single cycle through all points.
    pub fn is_cyclic(&self) -> bool {
        self.num_cycles() == 1
    }

    /// Number of `i` with `σ(i) > σ(i+1)`.
    pub fn descents(&self) -> usize {
        self.one_line.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// The set partition of values into maximal increasing segments of the
    /// one-line word, with the descent count.
    pub fn runs(&self) -> (SetPartition, usize) {
        let segments = increasing_segments(&self.one_line);
        let d = segments.len() - 1;
        let p = SetPartition::from_blocks(self.n(), &segments).expect("segments partition [n]");
        (p, d)
    }

    pub fn cycles_partition(&self) -> SetPartition {
        SetPartition::from_blocks(self.n(), &self.cycles()).expect("cycles partition [n]")
    }

    /// Maximal increasing segments of the standard cycle words.
    pub fn cycle_runs_list(&self) -> Vec<Vec<usize>> {
        self.cycles().iter().flat_map(|c| increasing_segments(c)).collect()
    }

    pub fn cycle_runs(&self) -> SetPartition {
        SetPartition::from_blocks(self.n(), &self.cycle_runs_list()).expect("runs partition [n]")
    }

    /// Every cycle has the form `(k, k+1, …, l)`; equivalently the cycle word
    /// has no descent.
    pub fn is_interval_type(&self) -> bool {
        self.cycle_word().windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

fn increasing_segments(word: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in word.iter().enumerate() {
        if i == 0 || word[i - 1] > v {
            out.push(Vec::new());
        }
        out.last_mut().expect("segment").push(v);
    }
    out
}

/// All permutations of `[n]` in lexicographic order of one-line words.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { one_line: word.clone() });
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| word[i - 1] < word[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| word[j] > word[i - 1]).expect("pivot");
        word.swap(i - 1, j);
        word[i..].reverse();
    }
}

/// All cyclic permutations of `[n]`, ordered by their cycle word `(1, …)`.
pub fn cyclic_permutations(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return Vec::new();
    }
    all_permutations(n - 1)
        .into_iter()
        .map(|tail| {
            let mut cycle = vec![1];
            cycle.extend(tail.one_line.iter().map(|v| v + 1));
            Permutation::from_cycles(n, &[cycle]).expect("valid cycle")
        })
        .collect()
}

/// Eulerian number `⟨n, k⟩` via `⟨n,k⟩ = (k+1)⟨n-1,k⟩ + (n-k)⟨n-1,k-1⟩`.
pub fn eulerian(n: usize, k: usize) -> BigUint {
    eulerian_row(n).get(k).cloned().unwrap_or_else(BigUint::zero)
}

fn eulerian_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m];
        for k in 0..m {
            let mut v = BigUint::zero();
            if k < row.len() {
                v += &row[k] * BigUint::from(k + 1);
            }
            if k >= 1 && k - 1 < row.len() {
                v += &row[k - 1] * BigUint::from(m - k);
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

/// `E_n(x) = Σ_k ⟨n,k⟩ x^k`.
pub fn eulerian_polynomial(n: usize) -> Polynomial {
    let coeffs = eulerian_row(n)
        .into_iter()
        .map(|c| Rational::from_integer(c.into()))
        .collect();
    Polynomial::new(coeffs, 'x')
}

/// `Ψ(σ)`: the cycle runs of a cyclic `σ` in order of appearance, each run
/// placed below all earlier runs whose hulls meet it.
pub fn psi(sigma: &Permutation) -> Result<HeapOrder> {
    if !sigma.is_cyclic() {
        return Err(Error::InvalidPermutation(format!("{sigma} is not a full cycle")));
    }
    let runs = sigma.cycle_runs_list();
    let base = sigma.cycle_runs();
    let index: Vec<usize> = runs.iter().map(|r| base.block_of(r[0])).collect();
    let blocks = base.blocks();
    let mut edges = Vec::new();
    for i in 0..runs.len() {
        for j in i + 1..runs.len() {
            let (a, b) = (index[i], index[j]);
            if hulls_intersect(blocks[a], blocks[b]) {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    Ok(HeapOrder {
        base,
        mode: HeapMode::Interval,
        edges,
    })
}

/// Inverse of [`psi`]: repeatedly removes the leftmost minimal block and
/// writes it in front of the word built so far; the word is the cycle.
pub fn psi_inverse(h: &HeapOrder) -> Result<Permutation> {
    if h.mode != HeapMode::Interval || !h.is_pyramid() {
        return Err(Error::precondition("expected a pyramidal interval heap"));
    }
    let k = h.base.num_blocks();
    let below = h.below();
    let mut remaining: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut word: Vec<usize> = Vec::with_capacity(h.base.n());
    while remaining != 0 {
        // blocks are indexed by increasing minimum, so the lowest index is leftmost
        let v = (0..k)
            .find(|&v| remaining >> v & 1 == 1 && below[v] & remaining == 0)
            .expect("a finite poset has minimal elements");
        let mut run = h.base.block_elements(v);
        run.extend(word);
        word = run;
        remaining &= !(1 << v);
    }
    Permutation::from_cycles(h.base.n(), &[word])
}

/// Where the last descent of the cycle word sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DescentType {
    /// Inside a cycle.
    A,
    /// Between two consecutive cycles.
    B,
}

/// Classifies `σ` by the position of the last descent of its cycle word;
/// `None` for interval type.
pub fn descent_type(sigma: &Permutation) -> Option<DescentType> {
    let cycles = sigma.cycles();
    let word = cycles.concat();
    let p = (1..word.len()).rev().find(|&i| word[i - 1] > word[i])?;
    let mut boundary = 0;
    for c in &cycles {
        boundary += c.len();
        if boundary == p {
            return Some(DescentType::B);
        }
    }
    Some(DescentType::A)
}

/// `Φ`: splits off the last run of a cycle (type A) or joins the two cycles
/// around the last descent (type B). The cycle word is unchanged.
pub fn phi(sigma: &Permutation) -> Result<Permutation> {
    let mut cycles = sigma.cycles();
    let word = cycles.concat();
    let Some(p) = (1..word.len()).rev().find(|&i| word[i - 1] > word[i]) else {
        return Err(Error::precondition(format!("{sigma} is of interval type")));
    };
    let mut start = 0;
    for idx in 0..cycles.len() {
        let len = cycles[idx].len();
        if start + len == p {
            let next = cycles.remove(idx + 1);
            cycles[idx].extend(next);
            break;
        }
        if p < start + len {
            let tail = cycles[idx].split_off(p - start);
            cycles.insert(idx + 1, tail);
            break;
        }
        start += len;
    }
    Permutation::from_cycles(sigma.n(), &cycles)
}
