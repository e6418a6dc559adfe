//! Nesting forests of noncrossing partitions.
//!
//! The nesting forest has one vertex per block; the parent of a block is the
//! nearest block it nests inside and children keep the left-to-right block
//! order. Each irreducible component gives one tree.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde_json::Value;

use crate::algebra::{factorial, summation_operator, Polynomial, Rational};
use crate::partitions::SetPartition;
use crate::{Error, Result};

/// A planar rooted tree; `id` indexes the originating block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    pub id: usize,
    pub children: Vec<RootedTree>,
}

/// An ordered list of planar rooted trees with unique vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedForest {
    pub trees: Vec<RootedTree>,
}

impl RootedTree {
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(RootedTree::size).sum::<usize>()
    }

    /// Number of vertices on the longest root-to-leaf path.
    pub fn height(&self) -> usize {
        1 + self.children.iter().map(RootedTree::height).max().unwrap_or(0)
    }

    /// `t! = |t| · ∏ t_i!` over the branches `t_i`.
    pub fn factorial(&self) -> BigUint {
        self.children
            .iter()
            .fold(BigUint::from(self.size()), |acc, c| acc * c.factorial())
    }

    /// Number of nondecreasing `N`-labellings, as a polynomial in `N`.
    pub fn labelling_polynomial(&self) -> Polynomial {
        let product = self
            .children
            .iter()
            .fold(Polynomial::one('N'), |acc, c| &acc * &c.labelling_polynomial());
        summation_operator(&product)
    }

    fn to_json(&self, labels: &dyn Fn(usize) -> Value) -> Value {
        let mut items = vec![labels(self.id)];
        items.extend(self.children.iter().map(|c| c.to_json(labels)));
        Value::Array(items)
    }
}

impl RootedForest {
    /// Builds the forest from a parent array; children follow index order.
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        for (v, p) in parents.iter().enumerate() {
            if let Some(p) = *p {
                if p >= parents.len() || p == v {
                    return Err(Error::precondition(format!("invalid parent {p} for vertex {v}")));
                }
            }
        }
        fn build(v: usize, parents: &[Option<usize>], depth: usize) -> Result<RootedTree> {
            if depth > parents.len() {
                return Err(Error::precondition("parent array contains a cycle"));
            }
            let children = (0..parents.len())
                .filter(|&c| parents[c] == Some(v))
                .map(|c| build(c, parents, depth + 1))
                .collect::<Result<Vec<_>>>()?;
            Ok(RootedTree { id: v, children })
        }
        let trees = (0..parents.len())
            .filter(|&v| parents[v].is_none())
            .map(|v| build(v, parents, 0))
            .collect::<Result<Vec<_>>>()?;
        let forest = RootedForest { trees };
        if forest.size() != parents.len() {
            return Err(Error::precondition("parent array contains a cycle"));
        }
        Ok(forest)
    }

    pub fn size(&self) -> usize {
        self.trees.iter().map(RootedTree::size).sum()
    }

    pub fn is_tree(&self) -> bool {
        self.trees.len() == 1
    }

    pub fn tree_factorial(&self) -> BigUint {
        self.trees.iter().fold(BigUint::one(), |acc, t| acc * t.factorial())
    }

    /// Product of the tree polynomials.
    pub fn labelling_polynomial(&self) -> Polynomial {
        self.trees
            .iter()
            .fold(Polynomial::one('N'), |acc, t| &acc * &t.labelling_polynomial())
    }

    /// Coefficient of `N` in the labelling polynomial.
    pub fn alpha(&self) -> Rational {
        self.labelling_polynomial().coeff(1)
    }

    pub fn height(&self) -> usize {
        self.trees.iter().map(RootedTree::height).max().unwrap_or(0)
    }

    /// Nested arrays `[label, child, child, …]`, one per tree.
    pub fn to_json(&self, partition: Option<&SetPartition>) -> Value {
        let labels = |id: usize| match partition {
            Some(p) => serde_json::json!(p.block_elements(id)),
            None => serde_json::json!(id),
        };
        Value::Array(self.trees.iter().map(|t| t.to_json(&labels)).collect())
    }
}

fn require_noncrossing(pi: &SetPartition) -> Result<()> {
    if pi.is_noncrossing() {
        Ok(())
    } else {
        Err(Error::InvalidPartition(format!("{pi} is crossing")))
    }
}

pub fn nesting_forest(pi: &SetPartition) -> Result<RootedForest> {
    require_noncrossing(pi)?;
    RootedForest::from_parents(&pi.nesting_parents())
}

/// `τ(π)!` for a noncrossing partition.
pub fn tree_factorial(pi: &SetPartition) -> Result<BigUint> {
    Ok(nesting_forest(pi)?.tree_factorial())
}

/// `|π|! / τ(π)!`, the number of monotone block orders.
pub fn monotone_labelling_count(pi: &SetPartition) -> Result<BigUint> {
    let forest = nesting_forest(pi)?;
    Ok(factorial(pi.num_blocks()) / forest.tree_factorial())
}

pub fn labelling_polynomial(pi: &SetPartition) -> Result<Polynomial> {
    Ok(nesting_forest(pi)?.labelling_polynomial())
}

/// `α_π = P'_{τ(π)}(0)`.
pub fn alpha(pi: &SetPartition) -> Result<Rational> {
    Ok(nesting_forest(pi)?.alpha())
}

/// `1 / τ(π)!` as a rational.
pub fn inverse_tree_factorial(pi: &SetPartition) -> Result<Rational> {
    Ok(Rational::new(BigInt::one(), BigInt::from(tree_factorial(pi)?)))
}

/// Maximal number of blocks covering a block, itself included.
pub fn depth(pi: &SetPartition) -> Result<usize> {
    Ok(nesting_forest(pi)?.height())
}

impl SetPartition {
    /// See [`depth`].
    pub fn depth(&self) -> Result<usize> {
        depth(self)
    }
}

/// Brute-force count of nondecreasing `N`-labellings; test oracle.
pub fn count_labellings_brute_force(parents: &[Option<usize>], n_labels: usize) -> u64 {
    let k = parents.len();
    let mut labels = vec![0usize; k];
    let mut count = 0u64;
    loop {
        if (0..k).all(|v| parents[v].is_none_or(|p| labels[p] <= labels[v])) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            labels[i] += 1;
            if labels[i] < n_labels {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bernoulli_number, binomial, int, rat};

    fn p(s: &str) -> SetPartition {
        SetPartition::parse(s).unwrap()
    }

    fn star(k: usize) -> RootedForest {
        let mut parents = vec![None];
        parents.extend(std::iter::repeat_n(Some(0), k));
        RootedForest::from_parents(&parents).unwrap()
    }

    fn path(k: usize) -> RootedForest {
        let parents: Vec<Option<usize>> = (0..k).map(|i| i.checked_sub(1)).collect();
        RootedForest::from_parents(&parents).unwrap()
    }

    #[test]
    fn forest_shapes() {
        assert_eq!(nesting_forest(&SetPartition::one(4)).unwrap().size(), 1);
        let f = nesting_forest(&p("1,4|2,3")).unwrap();
        assert_eq!(f.trees.len(), 1);
        assert_eq!(f.trees[0].children.len(), 1);
        let fig = p("1,2,10|3,6|4,5|7|8,9|11,14,18|12,13|15,17|16");
        let f = nesting_forest(&fig).unwrap();
        let sizes: Vec<usize> = f.trees.iter().map(RootedTree::size).collect();
        assert_eq!(sizes, vec![5, 4]);
        assert!(nesting_forest(&p("1,3|2,4")).is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(path(1).tree_factorial(), BigUint::from(1u32));
        assert_eq!(path(3).tree_factorial(), BigUint::from(6u32));
        assert_eq!(star(2).tree_factorial(), BigUint::from(3u32));
        assert_eq!(
            monotone_labelling_count(&p("1,6|2,3|4,5")).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(monotone_labelling_count(&p("1|2,3|4")).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn labelling_polynomials() {
        assert_eq!(path(1).labelling_polynomial(), Polynomial::var('N'));
        assert_eq!(star(2).labelling_polynomial().eval(&int(2)), int(5));
        for k in 1..=5 {
            let poly = path(k).labelling_polynomial();
            for n in 0..=6usize {
                let expected = if n == 0 { 0u32.into() } else { binomial(n + k - 1, k) };
                assert_eq!(poly.eval(&int(n as i64)), Rational::from_integer(expected.into()));
            }
        }
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&SetPartition::one(3)).unwrap(), int(1));
        assert_eq!(star(2).alpha(), rat(1, 6));
        for k in 1..=6 {
            assert_eq!(star(k).alpha(), bernoulli_number(k));
            assert_eq!(path(k).alpha(), rat(1, k as i64));
        }
        assert_eq!(alpha(&p("1,2|3")).unwrap(), int(0));
    }

    #[test]
    fn depths() {
        assert_eq!(SetPartition::one(3).depth().unwrap(), 1);
        assert_eq!(p("1,4|2,3").depth().unwrap(), 2);
        assert_eq!(p("1,6|2,5|3,4").depth().unwrap(), 3);
    }

    #[test]
    fn forest_json() {
        let f = nesting_forest(&p("1,4|2,3")).unwrap();
        assert_eq!(f.to_json(Some(&p("1,4|2,3"))).to_string(), "[[[1,4],[[2,3]]]]");
    }

    #[test]
    fn brute_force_counter() {
        assert_eq!(count_labellings_brute_force(&[None, Some(0), Some(0)], 2), 5);
    }
}
