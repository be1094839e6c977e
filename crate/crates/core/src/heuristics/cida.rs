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

//! Capacitated iterative design: expand SLA cycles into a candidate set,
//! then repeatedly commit the unit-capacity candidate with the highest
//! actual efficiency.

use std::collections::BTreeSet;

use super::{actual_efficiency, apply_pcycle, AeMode, Solution};
use crate::cycle_gen::{enumerate_sla_cycles, expand_candidates, shortest_cycle_for_link};
use crate::graph::{Cycle, LinkIdx, NetworkState, Topology};

/// SLA cycles plus their one-step expansions, and, for every loaded
/// non-bridge link none of those touch, that link's shortest cycle. The
/// second value lists the links that needed this backstop.
pub fn cida_candidates(t: &Topology, s0: &NetworkState) -> (Vec<Cycle>, Vec<LinkIdx>) {
    let sla = enumerate_sla_cycles(t);
    let mut candidates: BTreeSet<Cycle> = expand_candidates(t, &sla).into_iter().collect();
    let mut covered = vec![false; t.link_count()];
    for c in &candidates {
        for &l in c.on_cycle_links().iter().chain(c.straddling_links()) {
            covered[l.0] = true;
        }
    }
    let mut backstop = Vec::new();
    for l in s0.positive_links() {
        if covered[l.0] {
            continue;
        }
        if let Some(c) = shortest_cycle_for_link(t, l) {
            for &m in c.on_cycle_links().iter().chain(c.straddling_links()) {
                covered[m.0] = true;
            }
            candidates.insert(c);
            backstop.push(l);
        }
    }
    (candidates.into_iter().collect(), backstop)
}

pub fn run_cida(t: &Topology, s0: &NetworkState, mode: AeMode) -> Solution {
    let (candidates, backstop) = cida_candidates(t, s0);
    let mut state = s0.clone();
    let mut pcycles = Vec::new();
    while !state.is_exhausted() {
        let mut best = None;
        for c in &candidates {
            let ae = actual_efficiency(c, &state, t, mode);
            if ae > num_traits::Zero::zero() && best.as_ref().is_none_or(|(b, _)| ae > *b) {
                best = Some((ae, c));
            }
        }
        let Some((_, chosen)) = best else {
            break;
        };
        pcycles.push(apply_pcycle(chosen.clone(), 1, &mut state));
    }
    let mut solution = Solution::new(t, pcycles, state);
    solution.backstop_links = backstop;
    solution
}
