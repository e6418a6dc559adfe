use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::mask_elements;
use super::partition::{blocks_cross, nests_inside, SetPartition};
use crate::{Error, Result};

/// The partition classes used throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionClass {
    All,
    Noncrossing,
    Interval,
    Irreducible,
    Connected,
    IrreducibleNoncrossing,
    ConnectedNoncrossing,
}

impl PartitionClass {
    pub const ALL: [PartitionClass; 7] = [
        PartitionClass::All,
        PartitionClass::Noncrossing,
        PartitionClass::Interval,
        PartitionClass::Irreducible,
        PartitionClass::Connected,
        PartitionClass::IrreducibleNoncrossing,
        PartitionClass::ConnectedNoncrossing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PartitionClass::All => "all",
            PartitionClass::Noncrossing => "noncrossing",
            PartitionClass::Interval => "interval",
            PartitionClass::Irreducible => "irreducible",
            PartitionClass::Connected => "connected",
            PartitionClass::IrreducibleNoncrossing => "irreducible-noncrossing",
            PartitionClass::ConnectedNoncrossing => "connected-noncrossing",
        }
    }

    pub fn contains(self, p: &SetPartition) -> bool {
        match self {
            PartitionClass::All => true,
            PartitionClass::Noncrossing => p.is_noncrossing(),
            PartitionClass::Interval => p.is_interval(),
            PartitionClass::Irreducible => p.is_irreducible(),
            PartitionClass::Connected => p.is_connected(),
            PartitionClass::IrreducibleNoncrossing => p.is_noncrossing() && p.is_irreducible(),
            PartitionClass::ConnectedNoncrossing => p.is_noncrossing() && p.is_connected(),
        }
    }

    fn prune(self) -> Prune {
        match self {
            PartitionClass::Noncrossing
            | PartitionClass::IrreducibleNoncrossing
            | PartitionClass::ConnectedNoncrossing => Prune::Noncrossing,
            PartitionClass::Interval => Prune::Interval,
            _ => Prune::None,
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PartitionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let class = match key.as_str() {
            "all" | "p" => PartitionClass::All,
            "noncrossing" | "nc" => PartitionClass::Noncrossing,
            "interval" | "i" => PartitionClass::Interval,
            "irreducible" | "irr" => PartitionClass::Irreducible,
            "connected" | "conn" => PartitionClass::Connected,
            "irreducible-noncrossing" | "irr-nc" => PartitionClass::IrreducibleNoncrossing,
            "connected-noncrossing" | "conn-nc" => PartitionClass::ConnectedNoncrossing,
            _ => return Err(Error::precondition(format!("unknown partition class `{s}`"))),
        };
        Ok(class)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Prune {
    None,
    Noncrossing,
    Interval,
}

/// Enumeration size limits per class family.
///
/// Defaults are overridden by `CUMULANTS_LIMIT_ALL`,
/// `CUMULANTS_LIMIT_NONCROSSING`, `CUMULANTS_LIMIT_INTERVAL` and
/// `CUMULANTS_LIMIT_MONOTONE` when read through [`Limits::from_env`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// `All`, `Irreducible` and `Connected`.
    pub all: usize,
    /// The three noncrossing classes.
    pub noncrossing: usize,
    pub interval: usize,
    pub monotone: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            all: 10,
            noncrossing: 12,
            interval: 20,
            monotone: 8,
        }
    }
}

impl Limits {
    pub fn from_env() -> Self {
        let read = |key: &str, default: usize| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(default)
        };
        let d = Limits::default();
        Limits {
            all: read("CUMULANTS_LIMIT_ALL", d.all),
            noncrossing: read("CUMULANTS_LIMIT_NONCROSSING", d.noncrossing),
            interval: read("CUMULANTS_LIMIT_INTERVAL", d.interval),
            monotone: read("CUMULANTS_LIMIT_MONOTONE", d.monotone),
        }
    }

    pub fn for_class(&self, class: PartitionClass) -> usize {
        match class.prune() {
            Prune::Noncrossing => self.noncrossing,
            Prune::Interval => self.interval,
            Prune::None => self.all,
        }
    }
}

/// All members of `class` on `[n]` in restricted-growth-string order, under
/// the limits of [`Limits::from_env`].
pub fn enumerate(n: usize, class: PartitionClass) -> Result<Vec<SetPartition>> {
    enumerate_with_limit(n, class, Limits::from_env().for_class(class))
}

pub fn enumerate_with_limit(n: usize, class: PartitionClass, limit: usize) -> Result<Vec<SetPartition>> {
    if n == 0 {
        return Err(Error::precondition("n must be at least 1"));
    }
    let limit = limit.min(32);
    if n > limit {
        return Err(Error::limit(format!("enumerate {class}"), n, limit));
    }
    let mut out = Vec::new();
    let mut blocks: Vec<u32> = Vec::with_capacity(n);
    let prune = class.prune();
    dfs(0, n, prune, &mut blocks, &mut |blocks| {
        let p = SetPartition::from_masks_unchecked(n, blocks.to_vec());
        if class.contains(&p) {
            out.push(p);
        }
    });
    Ok(out)
}

fn dfs(i: usize, n: usize, prune: Prune, blocks: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if i == n {
        emit(blocks);
        return;
    }
    let bit = 1u32 << i;
    let candidates: Vec<usize> = match prune {
        Prune::Interval => blocks.len().checked_sub(1).into_iter().collect(),
        _ => (0..blocks.len()).collect(),
    };
    for b in candidates {
        let grown = blocks[b] | bit;
        if prune == Prune::Noncrossing
            && blocks
                .iter()
                .enumerate()
                .any(|(j, &o)| j != b && blocks_cross(grown, o))
        {
            continue;
        }
        blocks[b] = grown;
        dfs(i + 1, n, prune, blocks, emit);
        blocks[b] &= !bit;
    }
    blocks.push(bit);
    dfs(i + 1, n, prune, blocks, emit);
    blocks.pop();
}

/// A partition with a linear order on its blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    base: SetPartition,
    order: Vec<usize>,
}

impl OrderedPartition {
    /// `order[k]` is the index (in canonical block order) of the `k`-th block.
    pub fn new(base: SetPartition, order: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; base.num_blocks()];
        if order.len() != seen.len() {
            return Err(Error::SizeMismatch {
                left: order.len(),
                right: seen.len(),
            });
        }
        for &i in &order {
            if i >= seen.len() || seen[i] {
                return Err(Error::precondition("order is not a bijection on blocks"));
            }
            seen[i] = true;
        }
        Ok(OrderedPartition { base, order })
    }

    pub fn base(&self) -> &SetPartition {
        &self.base
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Noncrossing base and every outer block placed before its inner blocks.
    pub fn is_monotone(&self) -> bool {
        if !self.base.is_noncrossing() {
            return false;
        }
        let mut position = vec![0; self.order.len()];
        for (k, &i) in self.order.iter().enumerate() {
            position[i] = k;
        }
        let blocks = self.base.blocks();
        for (i, &inner) in blocks.iter().enumerate() {
            for (j, &outer) in blocks.iter().enumerate() {
                if nests_inside(inner, outer) && position[j] > position[i] {
                    return false;
                }
            }
        }
        true
    }

    pub fn ordered_blocks(&self) -> Vec<Vec<usize>> {
        self.order
            .iter()
            .map(|&i| mask_elements(self.base.blocks()[i]))
            .collect()
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ordered_blocks()
            .iter()
            .map(|b| b.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// All monotone partitions of `[n]`: noncrossing partitions with every
/// admissible block order, grouped by base partition.
pub fn enumerate_monotone(n: usize) -> Result<Vec<OrderedPartition>> {
    enumerate_monotone_with_limit(n, Limits::from_env().monotone)
}

pub fn enumerate_monotone_with_limit(n: usize, limit: usize) -> Result<Vec<OrderedPartition>> {
    if n > limit {
        return Err(Error::limit("enumerate monotone", n, limit));
    }
    let mut out = Vec::new();
    for base in enumerate_with_limit(n, PartitionClass::Noncrossing, n)? {
        let parents = base.nesting_parents();
        let mut placed = vec![false; parents.len()];
        let mut order = Vec::with_capacity(parents.len());
        extensions(&parents, &mut placed, &mut order, &mut |order| {
            out.push(OrderedPartition {
                base: base.clone(),
                order: order.to_vec(),
            })
        });
    }
    Ok(out)
}

fn extensions(
    parents: &[Option<usize>],
    placed: &mut Vec<bool>,
    order: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if order.len() == parents.len() {
        emit(order);
        return;
    }
    for v in 0..parents.len() {
        if !placed[v] && parents[v].is_none_or(|p| placed[p]) {
            placed[v] = true;
            order.push(v);
            extensions(parents, placed, order, emit);
            order.pop();
            placed[v] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, class: PartitionClass) -> usize {
        enumerate_with_limit(n, class, 32).unwrap().len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(4, PartitionClass::All), 15);
        assert_eq!(count(4, PartitionClass::Noncrossing), 14);
        assert_eq!(count(4, PartitionClass::Interval), 8);
        for class in PartitionClass::ALL {
            assert_eq!(enumerate_with_limit(1, class, 32).unwrap(), vec![SetPartition::one(1)]);
        }
    }

    #[test]
    fn rgs_order() {
        let all = enumerate_with_limit(3, PartitionClass::All, 32).unwrap();
        let rgs: Vec<Vec<usize>> = all.iter().map(|p| p.rgs()).collect();
        let mut sorted = rgs.clone();
        sorted.sort();
        assert_eq!(rgs, sorted);
    }

    #[test]
    fn limit_is_enforced() {
        assert!(matches!(
            enumerate_with_limit(5, PartitionClass::All, 4),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn monotone_counts() {
        assert_eq!(enumerate_monotone_with_limit(1, 8).unwrap().len(), 1);
        assert_eq!(enumerate_monotone_with_limit(2, 8).unwrap().len(), 3);
        assert_eq!(enumerate_monotone_with_limit(3, 8).unwrap().len(), 12);
        assert!(enumerate_monotone_with_limit(3, 8)
            .unwrap()
            .iter()
            .all(|m| m.is_monotone()));
    }

    #[test]
    fn class_names_parse() {
        for class in PartitionClass::ALL {
            assert_eq!(class.name().parse::<PartitionClass>().unwrap(), class);
        }
        assert!("bogus".parse::<PartitionClass>().is_err());
    }
}
