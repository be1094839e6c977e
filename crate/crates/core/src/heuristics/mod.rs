// Copyright 2026 The pcycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! p-cycle design algorithms and the per-cycle scores they share.

mod aggregation;
mod cida;
mod sla;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{Cycle, LinkIdx, NetworkState, Rational, Topology};

pub use aggregation::{
    aggregate, can_aggregate, run_aggregation_heuristic, run_aggregation_traced,
    run_aggregation_with_pool, select_seed_cycle, shared_link, MergeStep, SeedTrace,
};
pub use cida::{cida_candidates, run_cida};
pub use sla::run_sla;

/// How a p-cycle's capacity n is picked once its ring is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CapacityPolicy {
    /// Smallest positive unprotected amount on the ring, so at least one
    /// link is fully covered.
    #[default]
    MinOnCycle,
    /// The n with the lowest cycle redundancy, smallest n on ties.
    BestRatio,
}

impl fmt::Display for CapacityPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CapacityPolicy::MinOnCycle => "min-on-cycle",
            CapacityPolicy::BestRatio => "best-ratio",
        })
    }
}

impl FromStr for CapacityPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min-on-cycle" => Ok(CapacityPolicy::MinOnCycle),
            "best-ratio" => Ok(CapacityPolicy::BestRatio),
            _ => Err(Error::InvalidParameter(format!(
                "unknown capacity policy `{s}`"
            ))),
        }
    }
}

/// Numerator of the actual-efficiency score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AeMode {
    /// Σ w_i × X_i
    #[default]
    Product,
    /// Σ min(w_i, X_i)
    Min,
}

impl fmt::Display for AeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AeMode::Product => "product",
            AeMode::Min => "min",
        })
    }
}

impl FromStr for AeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "product" => Ok(AeMode::Product),
            "min" => Ok(AeMode::Min),
            _ => Err(Error::InvalidParameter(format!("unknown AE mode `{s}`"))),
        }
    }
}

/// Spare-to-protected ratio of a cycle at a given capacity. A cycle that
/// protects nothing is infinitely redundant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Redundancy {
    Finite(Rational),
    Infinite,
}

impl fmt::Display for Redundancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Redundancy::Finite(r) => write!(f, "{r}"),
            Redundancy::Infinite => f.write_str("inf"),
        }
    }
}

/// A cycle with reserved capacity and the amount it protects on each link.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PCycle {
    pub cycle: Cycle,
    pub capacity: u64,
    /// Non-zero protected amounts, sorted by link.
    pub protected: Vec<(LinkIdx, u64)>,
}

impl PCycle {
    pub fn spare(&self, t: &Topology) -> Rational {
        self.cycle.cost(t) * Rational::from_integer(self.capacity as i128)
    }

    pub fn protected_on(&self, l: LinkIdx) -> u64 {
        self.protected
            .binary_search_by_key(&l, |&(k, _)| k)
            .map(|i| self.protected[i].1)
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Solution {
    pub pcycles: Vec<PCycle>,
    pub leftover: NetworkState,
    /// Bridges carrying working capacity; no cycle can protect them.
    pub unprotectable: Vec<LinkIdx>,
    /// Links that needed shortest-cycle candidates because the algorithm's
    /// own candidate set never touched them.
    pub backstop_links: Vec<LinkIdx>,
}

impl Solution {
    pub fn new(t: &Topology, pcycles: Vec<PCycle>, leftover: NetworkState) -> Self {
        let unprotectable = t
            .bridges()
            .into_iter()
            .filter(|&l| t.working(l) > 0)
            .collect();
        Solution {
            pcycles,
            leftover,
            unprotectable,
            backstop_links: Vec::new(),
        }
    }

    pub fn total_spare(&self, t: &Topology) -> Rational {
        self.pcycles
            .iter()
            .fold(Rational::zero(), |acc, p| acc + p.spare(t))
    }

    pub fn protected_total(&self, l: LinkIdx) -> u64 {
        self.pcycles.iter().map(|p| p.protected_on(l)).sum()
    }
}

/// Restoration paths `c` offers when `j` fails: the complementary arc for a
/// ring link, both arcs for a chord.
pub fn protection_paths(c: &Cycle, j: LinkIdx) -> u64 {
    if c.is_on_cycle(j) {
        1
    } else if c.is_straddling(j) {
        2
    } else {
        0
    }
}

/// Links `c` can protect, with their protection-path count.
fn covered_links(c: &Cycle) -> impl Iterator<Item = (LinkIdx, u64)> + '_ {
    c.on_cycle_links()
        .iter()
        .map(|&l| (l, 1))
        .chain(c.straddling_links().iter().map(|&l| (l, 2)))
}

/// Protectable unprotected working capacity per unit of spare cost.
pub fn actual_efficiency(c: &Cycle, s: &NetworkState, t: &Topology, mode: AeMode) -> Rational {
    let numerator: u64 = covered_links(c)
        .map(|(l, x)| match mode {
            AeMode::Product => s.get(l) * x,
            AeMode::Min => s.get(l).min(x),
        })
        .sum();
    Rational::from_integer(numerator as i128) / c.cost(t)
}

/// spare / protected at capacity `n`, both sides cost-weighted.
pub fn cycle_redundancy(c: &Cycle, n: u64, s: &NetworkState, t: &Topology) -> Redundancy {
    let spare = c.cost(t) * Rational::from_integer(n as i128);
    let protected = covered_links(c).fold(Rational::zero(), |acc, (l, x)| {
        acc + t.cost(l) * Rational::from_integer(s.get(l).min(n * x) as i128)
    });
    if protected.is_zero() {
        Redundancy::Infinite
    } else {
        Redundancy::Finite(spare / protected)
    }
}

pub fn choose_capacity(
    c: &Cycle,
    s: &NetworkState,
    t: &Topology,
    policy: CapacityPolicy,
) -> Result<u64> {
    let on_cycle_max = c
        .on_cycle_links()
        .iter()
        .map(|&l| s.get(l))
        .max()
        .unwrap_or(0);
    let straddling_need = c
        .straddling_links()
        .iter()
        .map(|&l| s.get(l).div_ceil(2))
        .filter(|&n| n > 0);
    match policy {
        CapacityPolicy::MinOnCycle => c
            .on_cycle_links()
            .iter()
            .map(|&l| s.get(l))
            .filter(|&v| v > 0)
            .min()
            .or_else(|| straddling_need.min())
            .ok_or(Error::NothingToProtect),
        CapacityPolicy::BestRatio => {
            let upper = on_cycle_max.max(straddling_need.max().unwrap_or(0));
            let mut best: Option<(Redundancy, u64)> = None;
            for n in 1..=upper {
                let r = cycle_redundancy(c, n, s, t);
                if best.is_none_or(|(b, _)| r < b) {
                    best = Some((r, n));
                }
            }
            best.map(|(_, n)| n).ok_or(Error::NothingToProtect)
        }
    }
}

/// Redundancy at the capacity the policy would pick; infinite when the
/// cycle protects nothing.
pub fn policy_redundancy(
    c: &Cycle,
    s: &NetworkState,
    t: &Topology,
    policy: CapacityPolicy,
) -> Redundancy {
    match choose_capacity(c, s, t, policy) {
        Ok(n) => cycle_redundancy(c, n, s, t),
        Err(_) => Redundancy::Infinite,
    }
}

/// Reserves `capacity` on `cycle` and removes what it protects from `s`:
/// up to n on each ring link and up to 2n on each chord.
pub fn apply_pcycle(cycle: Cycle, capacity: u64, s: &mut NetworkState) -> PCycle {
    let mut protected: Vec<(LinkIdx, u64)> = covered_links(&cycle)
        .filter_map(|(l, x)| {
            let taken = s.protect(l, capacity * x);
            (taken > 0).then_some((l, taken))
        })
        .collect();
    protected.sort();
    PCycle {
        cycle,
        capacity,
        protected,
    }
}
