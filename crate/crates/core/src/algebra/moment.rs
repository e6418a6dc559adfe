//! The commutative ring of formal moment symbols `m_S`, `S ⊆ [n]` nonempty.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, Rational};
use crate::{Error, Result};

/// Largest supported ground set; subsets are stored as `u32` bitmasks.
pub const MAX_ELEMENT: usize = 32;

/// A nonempty subset `S ⊆ [n]` standing for the mixed moment `φ(∏_{s∈S} X_s)`.
///
/// Bit `i - 1` of the mask encodes element `i`. Symbols are ordered by size
/// first and then lexicographically by their sorted elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MomentSymbol(u32);

impl MomentSymbol {
    pub fn from_mask(mask: u32) -> Result<Self> {
        if mask == 0 {
            return Err(Error::precondition("moment symbol needs a nonempty subset"));
        }
        Ok(MomentSymbol(mask))
    }

    /// Builds the symbol of a set of 1-based elements.
    pub fn new(elements: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &e in elements {
            if e == 0 || e > MAX_ELEMENT {
                return Err(Error::precondition(format!("element {e} outside 1..={MAX_ELEMENT}")));
            }
            mask |= 1 << (e - 1);
        }
        Self::from_mask(mask)
    }

    /// The univariate symbol `m_k`, represented as `m_{[k]}`.
    pub fn univariate(k: usize) -> Self {
        assert!((1..=MAX_ELEMENT).contains(&k), "univariate moment order out of range");
        MomentSymbol(if k == 32 { u32::MAX } else { (1u32 << k) - 1 })
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn max_element(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn elements(self) -> Vec<usize> {
        (0..32).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1).collect()
    }
}

impl Ord for MomentSymbol {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size().cmp(&other.size()).then_with(|| {
            // Among equal-size sets the one holding the lowest differing element is smaller.
            let diff = self.0 ^ other.0;
            if diff == 0 {
                std::cmp::Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        })
    }
}

impl PartialOrd for MomentSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MomentSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elements = self.elements();
        let sep = if self.max_element() >= 10 { "," } else { "" };
        let body: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
        write!(f, "m_{{{}}}", body.join(sep))
    }
}

/// A commutative product of moment symbols, stored sorted. Repeats allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<MomentSymbol>);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut symbols: Vec<MomentSymbol>) -> Self {
        symbols.sort();
        Monomial(symbols)
    }

    pub fn symbols(&self) -> &[MomentSymbol] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Exact rational polynomial in moment symbols over subsets of `[n]`.
///
/// Zero coefficients are never stored, so equality of term maps is equality of
/// polynomials. The ambient `n` is metadata and does not take part in `==`.
#[derive(Clone, Debug)]
pub struct MomentPolynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for MomentPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MomentPolynomial {}

impl MomentPolynomial {
    pub fn zero(n: usize) -> Self {
        MomentPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::term(n, Monomial::one(), c)
    }

    pub fn term(n: usize, monomial: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(monomial, c);
        p
    }

    pub fn symbol(n: usize, s: MomentSymbol) -> Self {
        Self::term(n, Monomial::new(vec![s]), Rational::one())
    }

    /// `∏_{V} m_V` for the given block masks.
    pub fn from_blocks(n: usize, blocks: &[u32]) -> Self {
        let symbols = blocks
            .iter()
            .map(|&b| MomentSymbol::from_mask(b).expect("blocks are nonempty"))
            .collect();
        Self::term(n, Monomial::new(symbols), Rational::one())
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, monomial: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &MomentPolynomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        self.n = self.n.max(other.n);
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// Applies an order-preserving or arbitrary element relabelling:
    /// element `i` becomes `map[i - 1]`.
    pub fn relabel(&self, map: &[usize], new_n: usize) -> Self {
        let mut out = Self::zero(new_n);
        for (m, c) in &self.terms {
            let symbols = m
                .symbols()
                .iter()
                .map(|s| {
                    let mask = s
                        .elements()
                        .into_iter()
                        .fold(0u32, |acc, e| acc | 1 << (map[e - 1] - 1));
                    MomentSymbol(mask)
                })
                .collect();
            out.add_term(Monomial::new(symbols), c.clone());
        }
        out
    }

    /// Ring homomorphism determined by its values on symbols.
    pub fn substitute(&self, n: usize, mut f: impl FnMut(MomentSymbol) -> MomentPolynomial) -> Self {
        let mut cache: BTreeMap<MomentSymbol, MomentPolynomial> = BTreeMap::new();
        let mut out = Self::zero(n);
        for (m, c) in &self.terms {
            let mut prod = Self::constant(n, c.clone());
            for s in m.symbols() {
                let image = cache.entry(*s).or_insert_with(|| f(*s));
                prod = &prod * image;
            }
            out.add_scaled(&prod, &Rational::one());
        }
        out
    }

    /// Identifies all variables: `m_S ↦ m_{|S|}`.
    pub fn specialize_univariate(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let symbols = m.symbols().iter().map(|s| MomentSymbol::univariate(s.size())).collect();
            out.add_term(Monomial::new(symbols), c.clone());
        }
        out
    }

    /// Evaluates univariate symbols `m_{[k]}` at `values[k-1]`.
    pub fn eval_univariate(&self, values: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            let v = m.symbols().iter().fold(c.clone(), |p, s| p * &values[s.size() - 1]);
            acc + v
        })
    }

    pub fn to_string_terms(&self) -> Vec<String> {
        self.terms
            .iter()
            .map(|(m, c)| format!("{} {}", format_rational(c), m))
            .collect()
    }
}

impl fmt::Display for MomentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}·{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl Add for &MomentPolynomial {
    type Output = MomentPolynomial;
    fn add(self, rhs: &MomentPolynomial) -> MomentPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &MomentPolynomial {
    type Output = MomentPolynomial;
    fn sub(self, rhs: &MomentPolynomial) -> MomentPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &MomentPolynomial {
    type Output = MomentPolynomial;
    fn neg(self) -> MomentPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MomentPolynomial {
    type Output = MomentPolynomial;
    fn mul(self, rhs: &MomentPolynomial) -> MomentPolynomial {
        let mut out = MomentPolynomial::zero(self.n.max(rhs.n));
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn m(elements: &[usize]) -> MomentPolynomial {
        MomentPolynomial::symbol(4, MomentSymbol::new(elements).unwrap())
    }

    #[test]
    fn symbol_order_is_size_then_lex() {
        let a = MomentSymbol::new(&[2]).unwrap();
        let b = MomentSymbol::new(&[1, 3]).unwrap();
        let c = MomentSymbol::new(&[2, 3]).unwrap();
        let d = MomentSymbol::new(&[1, 2, 3]).unwrap();
        let mut v = vec![d, c, b, a];
        v.sort();
        assert_eq!(v, vec![a, b, c, d]);
        assert!(MomentSymbol::new(&[]).is_err());
    }

    #[test]
    fn display() {
        let p = &m(&[1, 3]) * &m(&[2]);
        assert_eq!(p.to_string(), "m_{2}·m_{13}");
        let q = &m(&[1, 2]) - &(&m(&[1]) * &m(&[2]));
        assert_eq!(q.to_string(), "m_{12} - m_{1}·m_{2}");
        assert_eq!(MomentSymbol::new(&[1, 10]).unwrap().to_string(), "m_{1,10}");
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = &m(&[1]) - &m(&[1]);
        assert!(p.is_zero());
        assert_eq!(p, MomentPolynomial::zero(4));
    }

    #[test]
    fn substitute_and_specialize() {
        let p = &m(&[1, 3]) * &m(&[2]);
        let q = p.substitute(4, |s| {
            &MomentPolynomial::symbol(4, s) + &MomentPolynomial::constant(4, int(1))
        });
        assert_eq!(q.num_terms(), 4);
        let u = p.specialize_univariate();
        let expected = &MomentPolynomial::symbol(4, MomentSymbol::univariate(2))
            * &MomentPolynomial::symbol(4, MomentSymbol::univariate(1));
        assert_eq!(u, expected);
        assert_eq!(u.eval_univariate(&[int(3), int(5)]), int(15));
    }

    #[test]
    fn relabel_moves_elements() {
        let p = m(&[1, 2]);
        assert_eq!(p.relabel(&[2, 4], 4), m(&[2, 4]));
    }
}
