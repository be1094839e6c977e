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

//! Straddling-link baseline: one cycle per loaded link built from two
//! node-disjoint paths, so the link is a chord of its own p-cycle.

use super::{apply_pcycle, Solution};
use crate::cycle_gen::{shortest_cycle_for_link, sla_cycle_for_link};
use crate::graph::{NetworkState, Topology};

pub fn run_sla(t: &Topology, s0: &NetworkState) -> Solution {
    let mut state = s0.clone();
    let mut pcycles = Vec::new();
    for x in t.link_indices() {
        let load = state.get(x);
        if load == 0 {
            continue;
        }
        if let Some(c) = sla_cycle_for_link(t, x) {
            pcycles.push(apply_pcycle(c, load.div_ceil(2), &mut state));
        }
    }

    // Links without a disjoint pair: cover them on-cycle, one unit at a time.
    let shortest: Vec<_> = t
        .link_indices()
        .map(|x| shortest_cycle_for_link(t, x))
        .collect();
    loop {
        let mut progress = false;
        for x in t.link_indices() {
            if state.get(x) == 0 {
                continue;
            }
            if let Some(c) = &shortest[x.0] {
                pcycles.push(apply_pcycle(c.clone(), 1, &mut state));
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    Solution::new(t, pcycles, state)
}
