//! Set partitions of `[n]`, their classes, closures, lattice operations and
//! Möbius functions.
//!
//! A partition is stored as the list of its blocks, each block a `u32`
//! bitmask in which bit `i - 1` marks element `i`. Blocks are kept sorted by
//! their minimum, which makes the block list equivalent to the restricted
//! growth string and gives structural equality.

mod enumerate;
mod lattice;
mod mobius;
mod partition;

pub use enumerate::{
    enumerate, enumerate_monotone, enumerate_monotone_with_limit, enumerate_with_limit, Limits, OrderedPartition,
    PartitionClass,
};
pub use lattice::{triangle_geq, triangle_geq_interval, ComponentMode};
pub use mobius::{mobius, mobius_brute_force, Lattice};
pub use partition::{blocks_cross, hulls_intersect, nests_inside, ClassFlags, SetPartition};

/// Bitmask of `{1, …, n}`.
pub fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Elements of a mask in increasing order (1-based).
pub fn mask_elements(mask: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

/// Order-preserving relabelling of `mask ⊆ support` onto `[|support|]`.
pub fn compress_mask(mask: u32, support: u32) -> u32 {
    let mut out = 0u32;
    let mut bit = 0;
    let mut s = support;
    while s != 0 {
        let low = s & s.wrapping_neg();
        if mask & low != 0 {
            out |= 1 << bit;
        }
        bit += 1;
        s &= s - 1;
    }
    out
}

/// Inverse of [`compress_mask`]: spreads `[|support|]` back onto `support`.
pub fn expand_mask(mask: u32, support: u32) -> u32 {
    let mut out = 0u32;
    let mut bit = 0;
    let mut s = support;
    while s != 0 {
        let low = s & s.wrapping_neg();
        if mask >> bit & 1 == 1 {
            out |= low;
        }
        bit += 1;
        s &= s - 1;
    }
    out
}
