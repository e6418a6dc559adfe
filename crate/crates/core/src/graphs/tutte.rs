use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::MixedGraph;
use crate::algebra::{int, Rational};
use crate::partitions::{enumerate_with_limit, mobius, Lattice, PartitionClass, SetPartition};
use crate::{Error, Result};

/// Symmetric multiplicity matrix of a loopless multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Multigraph {
    n: usize,
    mult: Vec<u16>,
}

impl Multigraph {
    fn from_mixed(g: &MixedGraph) -> (Self, usize) {
        let mut m = Multigraph {
            n: g.n,
            mult: vec![0; g.n * g.n],
        };
        for (a, b) in g.underlying_edges() {
            m.mult[a * m.n + b] += 1;
            m.mult[b * m.n + a] += 1;
        }
        (m, g.loops.len())
    }

    fn get(&self, a: usize, b: usize) -> u16 {
        self.mult[a * self.n + b]
    }

    fn degree(&self, v: usize) -> u32 {
        (0..self.n).map(|u| self.get(v, u) as u32).sum()
    }

    fn neighbours(&self, v: usize) -> u64 {
        (0..self.n)
            .filter(|&u| self.get(v, u) > 0)
            .fold(0, |acc, u| acc | 1 << u)
    }

    fn has_edges(&self) -> bool {
        self.mult.iter().any(|&m| m > 0)
    }

    /// Vertex classes of connected components with at least one edge.
    fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 || self.neighbours(v) == 0 {
                continue;
            }
            let comp = self.reach(1 << v, None);
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start`, optionally ignoring the bundle `skip`.
    fn reach(&self, start: u64, skip: Option<(usize, usize)>) -> u64 {
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let mut nb = self.neighbours(v);
            if let Some((a, b)) = skip {
                if v == a {
                    nb &= !(1 << b);
                }
                if v == b {
                    nb &= !(1 << a);
                }
            }
            let fresh = nb & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen
    }

    fn induced(&self, mask: u64) -> Multigraph {
        let vs: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
        let n = vs.len();
        let mut mult = vec![0; n * n];
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate() {
                mult[i * n + j] = self.get(a, b);
            }
        }
        Multigraph { n, mult }
    }

    fn without_bundle(&self, a: usize, b: usize) -> Multigraph {
        let mut g = self.clone();
        g.mult[a * self.n + b] = 0;
        g.mult[b * self.n + a] = 0;
        g
    }

    /// Contracts the bundle `a–b` (dropped, not turned into loops) into `a`.
    fn contract(&self, a: usize, b: usize) -> Multigraph {
        let mut g = self.without_bundle(a, b);
        for u in 0..self.n {
            if u != a && u != b {
                let m = g.get(b, u);
                g.mult[a * self.n + u] += m;
                g.mult[u * self.n + a] += m;
            }
        }
        let keep = (0..self.n).filter(|&v| v != b).fold(0u64, |acc, v| acc | 1 << v);
        g.induced(keep)
    }

    /// Relabelling by a degree-refined vertex order. Equal results mean equal
    /// labelled graphs, so the key never conflates distinct graphs.
    fn canonical(&self) -> Multigraph {
        let degrees: Vec<u32> = (0..self.n).map(|v| self.degree(v)).collect();
        let signature = |v: usize| {
            let mut nb: Vec<(u32, u16)> = (0..self.n)
                .filter(|&u| self.get(v, u) > 0)
                .map(|u| (degrees[u], self.get(v, u)))
                .collect();
            nb.sort_unstable();
            (degrees[v], nb)
        };
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_cached_key(|&v| signature(v));
        let n = self.n;
        let mut mult = vec![0; n * n];
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate() {
                mult[i * n + j] = self.get(a, b);
            }
        }
        Multigraph { n, mult }
    }
}

/// Values the deletion–contraction recursion can produce.
trait TutteValue: Clone {
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl TutteValue for Rational {
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

trait Memo<T> {
    fn get(&mut self, key: &Multigraph) -> Option<T>;
    fn put(&mut self, key: Multigraph, value: T);
}

struct NoMemo;

impl<T> Memo<T> for NoMemo {
    fn get(&mut self, _: &Multigraph) -> Option<T> {
        None
    }
    fn put(&mut self, _: Multigraph, _: T) {}
}

struct LocalMemo<T>(HashMap<Multigraph, T>);

impl<T: Clone> Memo<T> for LocalMemo<T> {
    fn get(&mut self, key: &Multigraph) -> Option<T> {
        self.0.get(key).cloned()
    }
    fn put(&mut self, key: Multigraph, value: T) {
        self.0.insert(key, value);
    }
}

type PointKey = (Rational, Rational, Multigraph);

fn shared_cache() -> &'static RwLock<HashMap<PointKey, Rational>> {
    static CACHE: OnceLock<RwLock<HashMap<PointKey, Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Process-wide memo for point evaluations. Concurrent inserts of the same key
/// store the same value.
struct SharedMemo {
    x: Rational,
    y: Rational,
}

impl Memo<Rational> for SharedMemo {
    fn get(&mut self, key: &Multigraph) -> Option<Rational> {
        let k = (self.x.clone(), self.y.clone(), key.clone());
        shared_cache().read().ok()?.get(&k).cloned()
    }
    fn put(&mut self, key: Multigraph, value: Rational) {
        if let Ok(mut cache) = shared_cache().write() {
            cache.insert((self.x.clone(), self.y.clone(), key), value);
        }
    }
}

fn power_sum<T: TutteValue>(y: &T, from: u16, to: u16) -> Option<T> {
    // Σ_{i=from}^{to} y^i, or None when empty.
    let mut acc: Option<T> = None;
    let mut p = T::one();
    for i in 0..=to {
        if i >= from {
            acc = Some(match acc {
                Some(a) => a.add(&p),
                None => p.clone(),
            });
        }
        p = p.mul(y);
    }
    acc
}

fn tutte_rec<T: TutteValue>(g: &Multigraph, x: &T, y: &T, memo: &mut dyn Memo<T>) -> T {
    if !g.has_edges() {
        return T::one();
    }
    let comps = g.components();
    if comps.len() > 1 {
        return comps
            .iter()
            .fold(T::one(), |acc, &c| acc.mul(&tutte_rec(&g.induced(c), x, y, memo)));
    }
    let g = g.induced(comps[0]).canonical();
    if let Some(v) = memo.get(&g) {
        return v;
    }
    // Bundle at a vertex of minimum positive degree.
    let a = (0..g.n).min_by_key(|&v| g.degree(v)).expect("nonempty");
    let b = (0..g.n).find(|&u| g.get(a, u) > 0).expect("a has a neighbour");
    let k = g.get(a, b);
    let contracted = tutte_rec(&g.contract(a, b), x, y, memo);
    let bridge = g.reach(1 << a, Some((a, b))) >> b & 1 == 0;
    let value = if bridge {
        // (x + y + … + y^{k-1}) T(G/e)
        let coeff = match power_sum(y, 1, k - 1) {
            Some(s) => x.add(&s),
            None => x.clone(),
        };
        coeff.mul(&contracted)
    } else {
        let geometric = power_sum(y, 0, k - 1).expect("k ≥ 1");
        tutte_rec(&g.without_bundle(a, b), x, y, memo).add(&geometric.mul(&contracted))
    };
    memo.put(g, value.clone());
    value
}

fn with_loops<T: TutteValue>(value: T, y: &T, loops: usize) -> T {
    (0..loops).fold(value, |acc, _| acc.mul(y))
}

/// `T_G(x, y)` by deletion–contraction, memoised in a process-wide cache.
/// Edge orientations are ignored.
pub fn tutte_eval(g: &MixedGraph, x: &Rational, y: &Rational) -> Rational {
    let (m, loops) = Multigraph::from_mixed(g);
    let mut memo = SharedMemo {
        x: x.clone(),
        y: y.clone(),
    };
    with_loops(tutte_rec(&m, x, y, &mut memo), y, loops)
}

/// [`tutte_eval`] without any caching.
pub fn tutte_eval_uncached(g: &MixedGraph, x: &Rational, y: &Rational) -> Rational {
    let (m, loops) = Multigraph::from_mixed(g);
    with_loops(tutte_rec(&m, x, y, &mut NoMemo), y, loops)
}

/// Number of entries in the shared point-evaluation cache.
pub fn tutte_cache_len() -> usize {
    shared_cache().read().map(|c| c.len()).unwrap_or(0)
}

/// Bivariate integer polynomial `Σ c_{ij} x^i y^j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TuttePolynomial {
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl TuttePolynomial {
    fn monomial(i: usize, j: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((i, j), BigInt::one());
        TuttePolynomial { coeffs }
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |acc, (&(i, j), c)| {
            acc + Rational::from_integer(c.clone()) * num_traits::pow(x.clone(), i) * num_traits::pow(y.clone(), j)
        })
    }
}

impl TutteValue for TuttePolynomial {
    fn one() -> Self {
        Self::monomial(0, 0)
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            *out.coeffs.entry(*k).or_default() += c;
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = TuttePolynomial::default();
        for (&(i, j), a) in &self.coeffs {
            for (&(k, l), b) in &other.coeffs {
                *out.coeffs.entry((i + k, j + l)).or_default() += a * b;
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&(i, j), c)| {
                let mut s = c.to_string();
                if i > 0 {
                    s.push_str(&format!(" x^{i}"));
                }
                if j > 0 {
                    s.push_str(&format!(" y^{j}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Full Tutte polynomial; intended for small graphs (at most 24 edges).
pub fn tutte_polynomial(g: &MixedGraph) -> Result<TuttePolynomial> {
    if g.num_edges() > 24 {
        return Err(Error::limit("tutte polynomial edges", g.num_edges(), 24));
    }
    let (m, loops) = Multigraph::from_mixed(g);
    let x = TuttePolynomial::monomial(1, 0);
    let y = TuttePolynomial::monomial(0, 1);
    let value = tutte_rec(&m, &x, &y, &mut LocalMemo(HashMap::new()));
    Ok(with_loops(value, &y, loops))
}

/// `(q-1)^{1-|V|} Σ_{π∈P(V)} q^{i(E,π)} μ_P(π, 1̂)`, where `i(E,π)` counts
/// edges inside blocks and `0^0 = 1`.
pub fn partition_sum_identity_check(g: &MixedGraph, q: &Rational) -> Result<Rational> {
    if q == &int(1) {
        return Err(Error::precondition("q = 1 is excluded"));
    }
    if g.n == 0 || g.n > 8 {
        return Err(Error::limit("partition sum vertices", g.n, 8));
    }
    let edges: Vec<(usize, usize)> = g
        .underlying_edges()
        .into_iter()
        .chain(g.loops.iter().map(|&v| (v, v)))
        .collect();
    let top = SetPartition::one(g.n);
    let mut sum = Rational::zero();
    for pi in enumerate_with_limit(g.n, PartitionClass::All, 8)? {
        let internal = edges
            .iter()
            .filter(|&&(a, b)| pi.block_of(a + 1) == pi.block_of(b + 1))
            .count();
        sum += num_traits::pow(q.clone(), internal) * mobius(&pi, &top, Lattice::P)?;
    }
    let scale = num_traits::pow(q - int(1), g.n - 1);
    Ok(sum / scale)
}
