//! Periodic group tables and the dimension bounds of the smoothing comparison.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The three abelian groups that occur in the tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    Integers,
    TwoTorsion,
    Trivial,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Integers => "Z",
            Group::TwoTorsion => "Z/2",
            Group::Trivial => "0",
        })
    }
}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Simply connected surgery obstruction group `L_n(Z)`: `Z, 0, Z/2, 0` with period 4.
pub fn l_group(n: i64) -> Group {
    match n.rem_euclid(4) {
        0 => Group::Integers,
        2 => Group::TwoTorsion,
        _ => Group::Trivial,
    }
}

/// `π_k(BO) = KO^{-k}(pt)`; Bott periodicity extends the table to negative `k`.
pub fn ko_group(k: i64) -> Group {
    match k.rem_euclid(8) {
        0 | 4 => Group::Integers,
        1 | 2 => Group::TwoTorsion,
        _ => Group::Trivial,
    }
}

/// Largest `k` with `k ≤ min((d-1)/3, (d-5)/2)`. May be negative for small `d`.
pub fn bl_bound(d: u32) -> i64 {
    let d = i64::from(d);
    (d - 1).div_euclid(3).min((d - 5).div_euclid(2))
}

/// Largest `k` with `k ≤ min(d-4, 2ℓ-1)` for an even-dimensional `ℓ`-connected manifold.
pub fn morlet_bound(d: u32, connectivity: u32) -> Result<i64> {
    if !d.is_multiple_of(2) {
        return Err(Error::DimensionBound(format!(
            "the disjunction bound needs even dimension, got d = {d}"
        )));
    }
    let (d, l) = (i64::from(d), i64::from(connectivity));
    if l > d - 4 {
        return Err(Error::DimensionBound(format!(
            "connectivity {l} exceeds d - 4 = {}",
            d - 4
        )));
    }
    Ok((d - 4).min(2 * l - 1))
}

/// `d ≥ max(3k+1, 2k+5)`, the dimension range of the bundle construction.
pub fn in_stable_range(d: u32, k: u32) -> bool {
    let (d, k) = (u64::from(d), u64::from(k));
    d >= (3 * k + 1).max(2 * k + 5)
}
