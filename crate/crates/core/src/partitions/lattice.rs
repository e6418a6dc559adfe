use super::partition::{blocks_cross, hull, SetPartition};
use super::{compress_mask, mask_elements};
use crate::{Error, Result};

/// Which closure defines the factorisation in [`SetPartition::components`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentMode {
    Irreducible,
    Connected,
}

fn check_same_n(a: &SetPartition, b: &SetPartition) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

impl SetPartition {
    /// Smallest noncrossing partition above `self`, by merging crossing pairs.
    pub fn noncrossing_closure(&self) -> SetPartition {
        let mut blocks = self.blocks().to_vec();
        'outer: loop {
            for i in 0..blocks.len() {
                for j in i + 1..blocks.len() {
                    if blocks_cross(blocks[i], blocks[j]) {
                        blocks[i] |= blocks[j];
                        blocks.swap_remove(j);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        SetPartition::from_masks_unchecked(self.n(), blocks)
    }

    /// Smallest interval partition above `self`, by merging overlapping hulls.
    pub fn interval_closure(&self) -> SetPartition {
        let mut ends = vec![0u32; self.n()];
        for &b in self.blocks() {
            let (lo, hi) = hull(b);
            ends[lo as usize] = ends[lo as usize].max(hi);
        }
        let mut blocks = Vec::new();
        let (mut start, mut reach) = (0u32, 0u32);
        for i in 0..self.n() as u32 {
            reach = reach.max(ends[i as usize]).max(i);
            if reach == i {
                let width = i - start + 1;
                let mask = if width == 32 {
                    u32::MAX
                } else {
                    ((1u32 << width) - 1) << start
                };
                blocks.push(mask);
                start = i + 1;
            }
        }
        SetPartition::from_masks_unchecked(self.n(), blocks)
    }

    /// Sub-partitions induced on the blocks of the interval closure
    /// (irreducible factors) or of the noncrossing closure (connected
    /// components). Each factor is relabelled onto `[|support|]`.
    pub fn components(&self, mode: ComponentMode) -> Vec<(Vec<usize>, SetPartition)> {
        let closure = match mode {
            ComponentMode::Irreducible => self.interval_closure(),
            ComponentMode::Connected => self.noncrossing_closure(),
        };
        closure
            .blocks()
            .iter()
            .map(|&support| (mask_elements(support), self.restrict_mask(support)))
            .collect()
    }

    pub fn leq(&self, other: &SetPartition) -> Result<bool> {
        check_same_n(self, other)?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &SetPartition) -> bool {
        self.blocks().iter().all(|&b| {
            let e = b.trailing_zeros() as usize + 1;
            let o = other.blocks()[other.block_of(e)];
            b & !o == 0
        })
    }

    pub fn join(&self, other: &SetPartition) -> Result<SetPartition> {
        check_same_n(self, other)?;
        let mut blocks = self.blocks().to_vec();
        for &o in other.blocks() {
            let (touching, rest): (Vec<u32>, Vec<u32>) = blocks.into_iter().partition(|b| b & o != 0);
            blocks = rest;
            blocks.push(touching.into_iter().fold(0, |acc, b| acc | b));
        }
        Ok(SetPartition::from_masks_unchecked(self.n(), blocks))
    }

    pub fn meet(&self, other: &SetPartition) -> Result<SetPartition> {
        check_same_n(self, other)?;
        let mut blocks = Vec::new();
        for &a in self.blocks() {
            for &b in other.blocks() {
                if a & b != 0 {
                    blocks.push(a & b);
                }
            }
        }
        Ok(SetPartition::from_masks_unchecked(self.n(), blocks))
    }

    /// Restriction to `subset` (1-based elements), relabelled onto `[|subset|]`.
    pub fn restrict(&self, subset: &[usize]) -> Result<SetPartition> {
        let mut mask = 0u32;
        for &e in subset {
            if e == 0 || e > self.n() {
                return Err(Error::InvalidPartition(format!("element {e} outside 1..={}", self.n())));
            }
            mask |= 1 << (e - 1);
        }
        if mask == 0 {
            return Err(Error::precondition("restriction to the empty set"));
        }
        Ok(self.restrict_mask(mask))
    }

    /// [`SetPartition::restrict`] for a nonempty bitmask.
    pub fn restrict_mask(&self, support: u32) -> SetPartition {
        let blocks = self
            .blocks()
            .iter()
            .filter(|&&b| b & support != 0)
            .map(|&b| compress_mask(b & support, support))
            .collect();
        SetPartition::from_masks_unchecked(support.count_ones() as usize, blocks)
    }
}

/// `σ ⊵ π`: `σ ≥ π` and `π|_W` is noncrossing for every block `W` of `σ`.
pub fn triangle_geq(sigma: &SetPartition, pi: &SetPartition) -> Result<bool> {
    if !pi.leq(sigma)? {
        return Ok(false);
    }
    Ok(sigma.blocks().iter().all(|&w| pi.restrict_mask(w).is_noncrossing()))
}

/// Like [`triangle_geq`] with interval restrictions in place of noncrossing ones.
pub fn triangle_geq_interval(sigma: &SetPartition, pi: &SetPartition) -> Result<bool> {
    if !pi.leq(sigma)? {
        return Ok(false);
    }
    Ok(sigma.blocks().iter().all(|&w| pi.restrict_mask(w).is_interval()))
}
