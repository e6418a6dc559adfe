use std::fmt;

use serde::{Deserialize, Serialize};

use super::{full_mask, mask_elements};
use crate::{Error, Result};

/// A set partition of `[n]`, `1 ≤ n ≤ 32`, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<u32>,
}

/// The four class predicates of a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub noncrossing: bool,
    pub interval: bool,
    pub irreducible: bool,
    pub connected: bool,
}

/// Whether two disjoint blocks cross: `a < b < c < d` with `a, c` in one block
/// and `b, d` in the other.
pub fn blocks_cross(a: u32, b: u32) -> bool {
    let mut m = a | b;
    let mut alternations = 0;
    let mut last: Option<bool> = None;
    while m != 0 {
        let low = m & m.wrapping_neg();
        let in_a = a & low != 0;
        if last != Some(in_a) {
            alternations += 1;
            if alternations >= 4 {
                return true;
            }
            last = Some(in_a);
        }
        m &= m - 1;
    }
    false
}

/// Whether `inner` nests inside `outer`: some `i < j` in `outer` enclose every
/// element of `inner`.
pub fn nests_inside(inner: u32, outer: u32) -> bool {
    let (lo, hi) = hull(inner);
    let (olo, ohi) = hull(outer);
    olo < lo && hi < ohi
}

/// Whether the convex hulls of two blocks intersect.
pub fn hulls_intersect(a: u32, b: u32) -> bool {
    let (alo, ahi) = hull(a);
    let (blo, bhi) = hull(b);
    alo <= bhi && blo <= ahi
}

pub(crate) fn hull(mask: u32) -> (u32, u32) {
    (mask.trailing_zeros(), 31 - mask.leading_zeros())
}

impl SetPartition {
    /// Builds a partition from block bitmasks, validating disjointness and cover.
    pub fn from_masks(n: usize, mut blocks: Vec<u32>) -> Result<Self> {
        if n == 0 || n > 32 {
            return Err(Error::InvalidPartition(format!("n = {n} outside 1..=32")));
        }
        let mut seen = 0u32;
        for &b in &blocks {
            if b == 0 {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if b & seen != 0 {
                return Err(Error::InvalidPartition("blocks are not disjoint".into()));
            }
            seen |= b;
        }
        if seen != full_mask(n) {
            return Err(Error::InvalidPartition(format!("blocks do not cover exactly 1..={n}")));
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Ok(SetPartition { n, blocks })
    }

    pub(crate) fn from_masks_unchecked(n: usize, mut blocks: Vec<u32>) -> Self {
        blocks.sort_by_key(|b| b.trailing_zeros());
        SetPartition { n, blocks }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(blocks.len());
        for block in blocks {
            let mut mask = 0u32;
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::InvalidPartition(format!("element {e} outside 1..={n}")));
                }
                if mask >> (e - 1) & 1 == 1 {
                    return Err(Error::InvalidPartition(format!("element {e} repeated")));
                }
                mask |= 1 << (e - 1);
            }
            masks.push(mask);
        }
        Self::from_masks(n, masks)
    }

    /// From a restricted growth string with 0-based block labels.
    pub fn from_rgs(rgs: &[usize]) -> Result<Self> {
        let mut blocks: Vec<u32> = Vec::new();
        for (i, &label) in rgs.iter().enumerate() {
            if label > blocks.len() {
                return Err(Error::InvalidPartition("not a restricted growth string".into()));
            }
            if label == blocks.len() {
                blocks.push(0);
            }
            blocks[label] |= 1 << i;
        }
        Self::from_masks(rgs.len(), blocks)
    }

    /// Parses `"1,3|2|4,5"` or a JSON list of lists such as `[[1,3],[2],[4,5]]`.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let blocks: Vec<Vec<usize>> = if trimmed.starts_with('[') {
            serde_json::from_str(trimmed).map_err(|e| Error::parse(e.column(), e.to_string()))?
        } else {
            let mut blocks = Vec::new();
            let mut offset = 0;
            for part in trimmed.split('|') {
                let mut block = Vec::new();
                for item in part.split(',') {
                    let t = item.trim();
                    let value = t
                        .parse::<usize>()
                        .map_err(|_| Error::parse(offset, format!("expected an element, got `{t}`")))?;
                    block.push(value);
                    offset += item.len() + 1;
                }
                blocks.push(block);
            }
            blocks
        };
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Self::from_blocks(n, &blocks)
    }

    /// The one-block partition `1̂_n`.
    pub fn one(n: usize) -> Self {
        SetPartition {
            n,
            blocks: vec![full_mask(n)],
        }
    }

    /// The partition into singletons `0̂_n`.
    pub fn zero(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (0..n).map(|i| 1u32 << i).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block bitmasks in canonical order.
    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn block_elements(&self, i: usize) -> Vec<usize> {
        mask_elements(self.blocks[i])
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|&b| mask_elements(b)).collect()
    }

    /// Index of the block holding element `e` (1-based).
    pub fn block_of(&self, e: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b >> (e - 1) & 1 == 1)
            .expect("element in range")
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.count_ones() as usize).collect()
    }

    /// Restricted growth string with 0-based labels.
    pub fn rgs(&self) -> Vec<usize> {
        (1..=self.n).map(|e| self.block_of(e)).collect()
    }

    pub fn is_noncrossing(&self) -> bool {
        for (i, &a) in self.blocks.iter().enumerate() {
            for &b in &self.blocks[i + 1..] {
                if blocks_cross(a, b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_interval(&self) -> bool {
        self.blocks.iter().all(|&b| {
            let shifted = b >> b.trailing_zeros();
            shifted & (shifted.wrapping_add(1)) == 0
        })
    }

    pub fn is_irreducible(&self) -> bool {
        self.interval_closure().num_blocks() == 1
    }

    pub fn is_connected(&self) -> bool {
        self.noncrossing_closure().num_blocks() == 1
    }

    pub fn classify(&self) -> ClassFlags {
        ClassFlags {
            noncrossing: self.is_noncrossing(),
            interval: self.is_interval(),
            irreducible: self.is_irreducible(),
            connected: self.is_connected(),
        }
    }

    /// For each block, the index of the nearest block it nests inside.
    pub fn nesting_parents(&self) -> Vec<Option<usize>> {
        (0..self.blocks.len())
            .map(|i| {
                let b = self.blocks[i];
                self.blocks
                    .iter()
                    .enumerate()
                    .filter(|&(j, &o)| j != i && nests_inside(b, o))
                    .min_by_key(|&(_, &o)| {
                        let (lo, hi) = hull(o);
                        hi - lo
                    })
                    .map(|(j, _)| j)
            })
            .collect()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|&b| {
                mask_elements(b)
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_lists().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let lists = Vec::<Vec<usize>>::deserialize(d)?;
        let n = lists.iter().flatten().copied().max().unwrap_or(0);
        SetPartition::from_blocks(n, &lists).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        SetPartition::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let a = p("2|1,3|4,5");
        assert_eq!(a.to_string(), "1,3|2|4,5");
        assert_eq!(SetPartition::parse("[[1,3],[2],[4,5]]").unwrap(), a);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[1,3],[2],[4,5]]");
        assert_eq!(a.rgs(), vec![0, 1, 0, 2, 2]);
        assert_eq!(SetPartition::from_rgs(&a.rgs()).unwrap(), a);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(SetPartition::parse("1,2|2").is_err());
        assert!(SetPartition::parse("1|3").is_err());
        assert!(SetPartition::parse("1,x").is_err());
        assert!(SetPartition::from_rgs(&[0, 2]).is_err());
    }

    #[test]
    fn classify_examples() {
        let crossing = p("1,3|2,4").classify();
        assert_eq!(
            crossing,
            ClassFlags {
                noncrossing: false,
                interval: false,
                irreducible: true,
                connected: true
            }
        );
        let reducible = p("1,2|3").classify();
        assert_eq!(
            reducible,
            ClassFlags {
                noncrossing: true,
                interval: true,
                irreducible: false,
                connected: false
            }
        );
        let fig = p("1,7|2,4|3,5|6,8,9").classify();
        assert!(fig.irreducible && !fig.connected);
    }

    #[test]
    fn crossing_and_nesting_of_blocks() {
        assert!(blocks_cross(0b0101, 0b1010));
        assert!(!blocks_cross(0b1001, 0b0110));
        assert!(nests_inside(0b0110, 0b1001));
        assert!(nests_inside(0b01010, 0b10101));
        assert!(!nests_inside(0b1001, 0b0110));
    }

    #[test]
    fn nesting_parents_pick_nearest() {
        let a = p("1,6|2,5|3,4");
        assert_eq!(a.nesting_parents(), vec![None, Some(0), Some(1)]);
    }
}
