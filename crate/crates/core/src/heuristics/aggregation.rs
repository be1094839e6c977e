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

//! Incremental aggregation of shortest cycles into capacitated p-cycles.
//!
//! Each round picks a seed among the shortest cycles (the one touching the
//! least-loaded unprotected link), grows it by merging neighbouring
//! shortest cycles that share exactly one link, keeps merging while the
//! merged cycle's redundancy strictly drops, then reserves capacity on the
//! result and removes what it protects.

use super::{
    apply_pcycle, choose_capacity, policy_redundancy, CapacityPolicy, Redundancy, Solution,
};
use crate::cycle_gen::enumerate_shortest_cycles;
use crate::error::{Error, Result};
use crate::graph::{Cycle, LinkIdx, NetworkState, Topology};

/// Seed for the next p-cycle: a cycle holding a ring link with the smallest
/// positive unprotected capacity. Among those, the one with the most
/// unprotected ring links, then the first in canonical order.
pub fn select_seed_cycle<'a>(cycles: &'a [Cycle], s: &NetworkState) -> Option<&'a Cycle> {
    let min_load = cycles
        .iter()
        .flat_map(|c| c.on_cycle_links())
        .map(|&l| s.get(l))
        .filter(|&v| v > 0)
        .min()?;
    let unprotected = |c: &Cycle| c.on_cycle_links().iter().filter(|&&l| s.get(l) > 0).count();
    let mut best: Option<(&Cycle, usize)> = None;
    for c in cycles {
        if !c.on_cycle_links().iter().any(|&l| s.get(l) == min_load) {
            continue;
        }
        let count = unprotected(c);
        let better = match best {
            None => true,
            Some((b, bc)) => count > bc || (count == bc && c < b),
        };
        if better {
            best = Some((c, count));
        }
    }
    best.map(|(c, _)| c)
}

/// The single link two cycles share, provided they share exactly one ring
/// link and no nodes besides its endpoints.
pub fn shared_link(cyc: &Cycle, cand: &Cycle) -> Option<LinkIdx> {
    let mut shared = cyc
        .on_cycle_links()
        .iter()
        .filter(|&&l| cand.is_on_cycle(l));
    let link = *shared.next()?;
    if shared.next().is_some() {
        return None;
    }
    let common_nodes = cyc
        .ring()
        .iter()
        .filter(|&&n| cand.contains_node(n))
        .count();
    (common_nodes == 2).then_some(link)
}

/// Merges two cycles over their shared link; the shared link becomes a
/// chord of the result.
pub fn aggregate(t: &Topology, cyc: &Cycle, cand: &Cycle) -> Result<Cycle> {
    let shared = shared_link(cyc, cand).ok_or_else(|| {
        Error::NotAggregable("cycles must share exactly one link and its two endpoints".into())
    })?;
    let links: Vec<LinkIdx> = cyc
        .on_cycle_links()
        .iter()
        .chain(cand.on_cycle_links())
        .copied()
        .filter(|&l| l != shared)
        .collect();
    Cycle::from_links(t, &links)
}

/// All three merge conditions, including that redundancy strictly drops.
pub fn can_aggregate(
    t: &Topology,
    cyc: &Cycle,
    cand: &Cycle,
    s: &NetworkState,
    policy: CapacityPolicy,
) -> bool {
    if shared_link(cyc, cand).is_none() {
        return false;
    }
    let Ok(merged) = aggregate(t, cyc, cand) else {
        return false;
    };
    policy_redundancy(&merged, s, t, policy) < policy_redundancy(cyc, s, t, policy)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeStep {
    pub partner: Cycle,
    pub shared: LinkIdx,
    pub before: Redundancy,
    pub after: Redundancy,
    pub merged: Cycle,
}

/// One round: the seed, every accepted merge, and the capacity chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedTrace {
    pub seed: Cycle,
    pub merges: Vec<MergeStep>,
    pub capacity: u64,
}

pub fn run_aggregation_heuristic(
    t: &Topology,
    s0: &NetworkState,
    policy: CapacityPolicy,
) -> Solution {
    run_aggregation_traced(t, s0, policy).0
}

/// [`run_aggregation_heuristic`] plus a per-round record of its decisions.
pub fn run_aggregation_traced(
    t: &Topology,
    s0: &NetworkState,
    policy: CapacityPolicy,
) -> (Solution, Vec<SeedTrace>) {
    run_aggregation_with_pool(t, s0, policy, &enumerate_shortest_cycles(t))
}

/// The aggregation loop over an explicit seed/partner pool.
pub fn run_aggregation_with_pool(
    t: &Topology,
    s0: &NetworkState,
    policy: CapacityPolicy,
    pool: &[Cycle],
) -> (Solution, Vec<SeedTrace>) {
    let mut state = s0.clone();
    let mut pcycles = Vec::new();
    let mut traces = Vec::new();

    while let Some(seed) = select_seed_cycle(pool, &state) {
        let mut current = seed.clone();
        let mut current_r = policy_redundancy(&current, &state, t, policy);
        let mut merges = Vec::new();
        loop {
            let mut best: Option<(Redundancy, &Cycle, Cycle, LinkIdx)> = None;
            for cand in pool {
                let Some(shared) = shared_link(&current, cand) else {
                    continue;
                };
                let Ok(merged) = aggregate(t, &current, cand) else {
                    continue;
                };
                let r = policy_redundancy(&merged, &state, t, policy);
                if r < current_r && best.as_ref().is_none_or(|(b, ..)| r < *b) {
                    best = Some((r, cand, merged, shared));
                }
            }
            let Some((r, partner, merged, shared)) = best else {
                break;
            };
            merges.push(MergeStep {
                partner: partner.clone(),
                shared,
                before: current_r,
                after: r,
                merged: merged.clone(),
            });
            current = merged;
            current_r = r;
        }

        // The seed holds a positive ring link and merges only lower the
        // redundancy, so `current` always protects something here.
        let capacity = match choose_capacity(&current, &state, t, policy) {
            Ok(n) => n,
            Err(_) => break,
        };
        traces.push(SeedTrace {
            seed: seed.clone(),
            merges,
            capacity,
        });
        pcycles.push(apply_pcycle(current, capacity, &mut state));
    }

    (Solution::new(t, pcycles, state), traces)
}
