use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::group::PermGroup;
use super::permutation::lcm;
use crate::error::Result;

/// Coarse isomorphism invariants of a small group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFingerprint {
    pub order: u128,
    pub is_abelian: bool,
    pub exponent: u128,
    pub element_order_histogram: BTreeMap<u128, u64>,
    pub involution_count: u64,
}

impl GroupFingerprint {
    /// Same invariants, histogram included.
    pub fn matches(&self, other: &GroupFingerprint) -> bool {
        self == other
    }
}

pub fn fingerprint(group: &PermGroup, bound: u128) -> Result<GroupFingerprint> {
    let mut histogram: BTreeMap<u128, u64> = BTreeMap::new();
    let mut exponent = 1u128;
    for g in group.elements(bound)? {
        let o = g.order();
        exponent = lcm(exponent, o);
        *histogram.entry(o).or_insert(0) += 1;
    }
    Ok(GroupFingerprint {
        order: group.order(),
        is_abelian: group.is_abelian(),
        exponent,
        involution_count: histogram.get(&2).copied().unwrap_or(0),
        element_order_histogram: histogram,
    })
}
