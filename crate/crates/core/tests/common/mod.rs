//! Independent brute-force oracles shared by the integration tests.
//! Nothing here calls into the library except for conversions.
#![allow(dead_code)]

use std::collections::HashMap;

use cumulants::algebra::Rational;
use cumulants::partitions::SetPartition;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A partition as sorted blocks of 1-based elements, blocks sorted by minimum.
pub type Blocks = Vec<Vec<usize>>;

pub fn canonical(mut p: Blocks) -> Blocks {
    for b in &mut p {
        b.sort_unstable();
    }
    p.sort();
    p
}

/// All set partitions of `[n]`, built by inserting one element at a time.
pub fn all_partitions(n: usize) -> Vec<Blocks> {
    let mut acc: Vec<Blocks> = vec![vec![]];
    for e in 1..=n {
        let mut next = Vec::new();
        for p in &acc {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(e);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![e]);
            next.push(q);
        }
        acc = next;
    }
    acc.into_iter().map(canonical).collect()
}

pub fn block_index(p: &Blocks, e: usize) -> usize {
    p.iter().position(|b| b.contains(&e)).unwrap()
}

pub fn crosses(a: &[usize], b: &[usize]) -> bool {
    for &i in a {
        for &k in a {
            for &j in b {
                for &l in b {
                    if (i < j && j < k && k < l) || (j < i && i < l && l < k) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub fn is_noncrossing(p: &Blocks) -> bool {
    (0..p.len()).all(|x| (x + 1..p.len()).all(|y| !crosses(&p[x], &p[y])))
}

pub fn is_interval(p: &Blocks) -> bool {
    p.iter().all(|b| b.windows(2).all(|w| w[1] == w[0] + 1))
}

pub fn n_of(p: &Blocks) -> usize {
    p.iter().map(|b| b.len()).sum()
}

/// No proper prefix `{1..k}` is a union of blocks.
pub fn is_irreducible(p: &Blocks) -> bool {
    let n = n_of(p);
    (1..n).all(|k| !p.iter().all(|b| b.iter().all(|&e| e <= k) || b.iter().all(|&e| e > k)))
}

/// The crossing graph on blocks is connected.
pub fn is_connected(p: &Blocks) -> bool {
    let k = p.len();
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..k {
            if !seen[w] && crosses(&p[v], &p[w]) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Some block lies strictly between two elements of another block.
pub fn has_nesting(p: &Blocks) -> bool {
    p.iter().any(|a| {
        p.iter()
            .any(|b| a != b && a[0] < b[0] && b[b.len() - 1] < a[a.len() - 1])
    })
}

/// Longest chain of hull-nested blocks, counting the outermost one.
pub fn nc_depth(p: &Blocks) -> usize {
    fn inside(b: &[usize], a: &[usize]) -> bool {
        a[0] < b[0] && b[b.len() - 1] < a[a.len() - 1]
    }
    fn chain(p: &Blocks, v: usize) -> usize {
        1 + (0..p.len())
            .filter(|&w| inside(&p[w], &p[v]))
            .map(|w| chain(p, w))
            .max()
            .unwrap_or(0)
    }
    (0..p.len()).map(|v| chain(p, v)).max().unwrap_or(0)
}

pub fn refines(a: &Blocks, b: &Blocks) -> bool {
    a.iter().all(|x| b.iter().any(|y| x.iter().all(|e| y.contains(e))))
}

pub fn to_lib(p: &Blocks) -> SetPartition {
    SetPartition::from_blocks(n_of(p), p).unwrap()
}

pub fn from_lib(p: &SetPartition) -> Blocks {
    canonical(p.to_lists())
}

/// Möbius function of a finite poset by the defining recursion, returned
/// as a dense matrix (`None` where `x ≰ y`).
pub fn mobius_matrix(elems: &[Blocks]) -> Vec<Vec<Option<i64>>> {
    let k = elems.len();
    let leq: Vec<Vec<bool>> = (0..k)
        .map(|i| (0..k).map(|j| refines(&elems[i], &elems[j])).collect())
        .collect();
    // Sort by block count descending so every z with x ≤ z < y precedes y.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(elems[i].len()));
    let mut mu = vec![vec![None; k]; k];
    for x in 0..k {
        for &y in &order {
            if !leq[x][y] {
                continue;
            }
            if x == y {
                mu[x][y] = Some(1);
                continue;
            }
            let s: i64 = (0..k)
                .filter(|&z| z != y && leq[x][z] && leq[z][y])
                .map(|z| mu[x][z].expect("z precedes y"))
                .sum();
            mu[x][y] = Some(-s);
        }
    }
    mu
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

pub fn bell(n: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for _ in 1..=n {
        let mut next = vec![row[row.len() - 1].clone()];
        for v in &row {
            let last = next[next.len() - 1].clone();
            next.push(last + v);
        }
        row = next;
    }
    row[0].clone()
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// All permutations of `1..=n` in one-line notation.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n);
            out.push(q);
        }
    }
    out
}

pub fn descents(p: &[usize]) -> usize {
    p.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Eulerian number: permutations of `[n]` with exactly `k` descents.
pub fn eulerian(n: usize, k: usize) -> u64 {
    permutations(n).iter().filter(|p| descents(p) == k).count() as u64
}

pub fn is_single_cycle(p: &[usize]) -> bool {
    let n = p.len();
    let mut v = 1;
    for step in 1..=n {
        v = p[v - 1];
        if v == 1 {
            return step == n;
        }
    }
    false
}

/// Runs of the cycle word `(1, σ(1), σ²(1), …)` as a partition.
pub fn cycle_runs(p: &[usize]) -> Blocks {
    let mut word = vec![1];
    let mut v = p[0];
    while v != 1 {
        word.push(v);
        v = p[v - 1];
    }
    let mut blocks: Blocks = vec![vec![word[0]]];
    for w in word.windows(2) {
        if w[1] > w[0] {
            blocks.last_mut().unwrap().push(w[1]);
        } else {
            blocks.push(vec![w[1]]);
        }
    }
    canonical(blocks)
}

/// Acyclic orientations of a simple graph with exactly one source, `source`,
/// by trying every orientation.
pub fn unique_source_orientations(n: usize, edges: &[(usize, usize)], source: usize) -> u64 {
    let mut edges = edges.to_vec();
    for e in &mut edges {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let e = edges.len();
    let mut count = 0;
    for bits in 0u64..(1 << e) {
        let arcs: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if bits >> i & 1 == 0 { (a, b) } else { (b, a) })
            .collect();
        let mut indeg = vec![0; n];
        for &(_, b) in &arcs {
            indeg[b] += 1;
        }
        let sources: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        if sources != [source] {
            continue;
        }
        let mut removed = vec![false; n];
        let mut progress = true;
        while progress {
            progress = false;
            for v in 0..n {
                if !removed[v] && indeg[v] == 0 {
                    removed[v] = true;
                    progress = true;
                    for &(a, b) in &arcs {
                        if a == v {
                            indeg[b] -= 1;
                        }
                    }
                }
            }
        }
        if removed.iter().all(|&r| r) {
            count += 1;
        }
    }
    count
}

/// Edges between crossing blocks.
pub fn crossing_edges(p: &Blocks) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if crosses(&p[a], &p[b]) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Edges between blocks whose convex hulls meet.
pub fn hull_edges(p: &Blocks) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            let (x, y) = (&p[a], &p[b]);
            if x[0] <= y[y.len() - 1] && y[0] <= x[x.len() - 1] {
                out.push((a, b));
            }
        }
    }
    out
}

/// Orderings of the blocks of a noncrossing partition in which every block
/// comes after all blocks that enclose it.
pub fn monotone_orderings(p: &Blocks) -> u64 {
    let k = p.len();
    let enclosing: Vec<u32> = (0..k)
        .map(|v| {
            (0..k)
                .filter(|&w| p[w][0] < p[v][0] && p[v][p[v].len() - 1] < p[w][p[w].len() - 1])
                .fold(0u32, |m, w| m | 1 << w)
        })
        .collect();
    let mut ways = vec![0u64; 1 << k];
    ways[0] = 1;
    for placed in 0..(1u32 << k) {
        let w = ways[placed as usize];
        if w == 0 {
            continue;
        }
        for v in 0..k {
            if placed >> v & 1 == 0 && enclosing[v] & !placed == 0 {
                ways[(placed | 1 << v) as usize] += w;
            }
        }
    }
    ways[(1usize << k) - 1]
}

/// Nondecreasing labellings `f: V → {1..labels}` with `f(parent) ≤ f(child)`.
pub fn count_labellings(parents: &[Option<usize>], labels: usize) -> u64 {
    let k = parents.len();
    let total = labels.pow(k as u32);
    (0..total)
        .filter(|&code| {
            let f: Vec<usize> = (0..k).map(|i| code / labels.pow(i as u32) % labels).collect();
            (0..k).all(|v| parents[v].is_none_or(|p| f[p] <= f[v]))
        })
        .count() as u64
}

/// Every parent array on `k` vertices with parents of smaller index.
pub fn recursive_forests(k: usize) -> Vec<Vec<Option<usize>>> {
    let mut acc: Vec<Vec<Option<usize>>> = vec![vec![]];
    for v in 0..k {
        let mut next = Vec::new();
        for f in &acc {
            let mut g = f.clone();
            g.push(None);
            next.push(g);
            for p in 0..v {
                let mut g = f.clone();
                g.push(Some(p));
                next.push(g);
            }
        }
        acc = next;
    }
    acc
}

/// Bernoulli numbers with `B_1 = +1/2`, from `Σ_{k<n+1} C(n+1,k) B_k = 0`.
pub fn bernoulli_plus(n: usize) -> Rational {
    let mut b: Vec<Rational> = vec![Rational::one()];
    for m in 1..=n {
        let s = (0..m).fold(Rational::zero(), |acc, k| acc + big(binomial(m + 1, k)) * &b[k]);
        b.push(-s / big(BigInt::from(m + 1)));
    }
    if n == 1 {
        -b[1].clone()
    } else {
        b[n].clone()
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p: i64 = rng.gen_range(-9..=9);
    let q: i64 = rng.gen_range(1..=5);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn random_sequence(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| random_rational(rng)).collect()
}

/// Classical cumulants from moments via `κ_π` summed over all partitions,
/// solved order by order.
pub fn classical_from_moments(m: &[Rational]) -> Vec<Rational> {
    let mut kappa: Vec<Rational> = Vec::new();
    for n in 1..=m.len() {
        let mut rest = Rational::zero();
        for p in all_partitions(n) {
            if p.len() == 1 {
                continue;
            }
            rest += p.iter().fold(Rational::one(), |acc, b| acc * &kappa[b.len() - 1]);
        }
        kappa.push(&m[n - 1] - rest);
    }
    kappa
}

/// Boolean cumulants from moments by summing over compositions.
pub fn boolean_from_moments(m: &[Rational]) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::new();
    for n in 1..=m.len() {
        let rest = (1..n).fold(Rational::zero(), |acc, k| acc + &b[k - 1] * &m[n - k - 1]);
        b.push(&m[n - 1] - rest);
    }
    b
}

pub fn counts_by<K: std::hash::Hash + Eq, I: IntoIterator<Item = K>>(items: I) -> HashMap<K, u64> {
    let mut map = HashMap::new();
    for k in items {
        *map.entry(k).or_insert(0) += 1;
    }
    map
}
