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

//! Exact ground truth for small networks.
//!
//! [`all_simple_cycles`] lists every elementary cycle; [`optimal_pcycle_cover`]
//! assigns integer capacities to those cycles so that every loaded link is
//! covered (n per ring link, 2n per chord) at minimum total spare.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::{Cycle, LinkIdx, NetworkState, NodeIdx, Rational, Topology};
use crate::heuristics::{apply_pcycle, Solution};

pub const MAX_ENUMERATION_NODES: usize = 10;
pub const MAX_COVER_NODES: usize = 8;

/// Every elementary cycle, canonical and sorted.
pub fn all_simple_cycles(t: &Topology) -> Result<Vec<Cycle>> {
    if t.node_count() > MAX_ENUMERATION_NODES {
        return Err(Error::InstanceTooLarge {
            nodes: t.node_count(),
            limit: MAX_ENUMERATION_NODES,
        });
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; t.node_count()];
    for start in t.nodes() {
        let mut path = vec![start];
        on_path[start.0] = true;
        extend(t, start, &mut path, &mut on_path, &mut out)?;
        on_path[start.0] = false;
    }
    out.sort();
    Ok(out)
}

/// Grows simple paths whose smallest node is `start`; each cycle is emitted
/// once, in the orientation where the second node is below the last.
fn extend(
    t: &Topology,
    start: NodeIdx,
    path: &mut Vec<NodeIdx>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) -> Result<()> {
    let here = *path.last().expect("non-empty path");
    for &(next, _) in t.neighbors(here) {
        if next == start {
            if path.len() >= 3 && path[1] < path[path.len() - 1] {
                out.push(Cycle::from_ring(t, path.clone())?);
            }
            continue;
        }
        if next < start || on_path[next.0] {
            continue;
        }
        on_path[next.0] = true;
        path.push(next);
        extend(t, start, path, on_path, out)?;
        path.pop();
        on_path[next.0] = false;
    }
    Ok(())
}

struct CoverCycle {
    cost: u128,
    /// (link position among loaded links, protection paths)
    covers: Vec<(usize, u64)>,
}

struct Search<'a> {
    cycles: &'a [CoverCycle],
    /// Per loaded link: scaled cost.
    link_cost: Vec<u128>,
    /// Per loaded link: indices of cycles covering it.
    covering: Vec<Vec<usize>>,
    allowed: Vec<bool>,
    counts: Vec<u64>,
    best_cost: u128,
    best_counts: Option<Vec<u64>>,
}

impl Search<'_> {
    fn lower_bound(&self, residual: &[u64]) -> Option<u128> {
        let weighted: u128 = residual
            .iter()
            .zip(&self.link_cost)
            .map(|(&r, &c)| r as u128 * c)
            .sum();
        if weighted == 0 {
            return Some(0);
        }
        // Best spare per unit of cost-weighted coverage still useful.
        let mut ratio: Option<(u128, u128)> = None;
        for (k, c) in self.cycles.iter().enumerate() {
            if !self.allowed[k] {
                continue;
            }
            let useful: u128 = c
                .covers
                .iter()
                .map(|&(j, x)| residual[j].min(x) as u128 * self.link_cost[j])
                .sum();
            if useful == 0 {
                continue;
            }
            if ratio.is_none_or(|(bc, bu)| c.cost * bu < bc * useful) {
                ratio = Some((c.cost, useful));
            }
        }
        let (rc, ru) = ratio?;
        let mut bound = (weighted * rc).div_ceil(ru);

        // Any single link alone needs r_j × min(cost / paths).
        for (j, &r) in residual.iter().enumerate() {
            if r == 0 {
                continue;
            }
            let cheapest = self.covering[j]
                .iter()
                .filter(|&&k| self.allowed[k])
                .map(|&k| {
                    let x = self.cycles[k]
                        .covers
                        .iter()
                        .find(|&&(jj, _)| jj == j)
                        .map(|&(_, x)| x)
                        .unwrap_or(1) as u128;
                    (r as u128 * self.cycles[k].cost).div_ceil(x)
                })
                .min()?;
            bound = bound.max(cheapest);
        }
        Some(bound)
    }

    fn run(&mut self, residual: &mut Vec<u64>, cost: u128) {
        let branch_link = residual
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .min_by_key(|&(j, _)| {
                let options = self.covering[j]
                    .iter()
                    .filter(|&&k| self.allowed[k])
                    .count();
                (options, j)
            })
            .map(|(j, _)| j);
        let Some(j) = branch_link else {
            if cost < self.best_cost {
                self.best_cost = cost;
                self.best_counts = Some(self.counts.clone());
            }
            return;
        };
        match self.lower_bound(residual) {
            Some(lb) if cost + lb < self.best_cost => {}
            _ => return,
        }

        let mut options: Vec<usize> = self.covering[j]
            .iter()
            .copied()
            .filter(|&k| self.allowed[k])
            .collect();
        // Most useful coverage per unit cost first.
        let useful = |k: usize| -> u128 {
            self.cycles[k]
                .covers
                .iter()
                .map(|&(jj, x)| residual[jj].min(x) as u128 * self.link_cost[jj])
                .sum()
        };
        let mut keyed: Vec<(u128, u128, usize)> = options
            .iter()
            .map(|&k| (self.cycles[k].cost, useful(k), k))
            .collect();
        keyed.sort_by(|a, b| (b.1 * a.0).cmp(&(a.1 * b.0)).then(a.2.cmp(&b.2)));
        options = keyed.into_iter().map(|(_, _, k)| k).collect();

        // Branch i uses option i and bans options before it, so the branches
        // partition the solutions by the first option they use.
        let mut banned = Vec::new();
        for &k in &options {
            let taken: Vec<(usize, u64)> = self.cycles[k]
                .covers
                .iter()
                .map(|&(jj, x)| {
                    let d = residual[jj].min(x);
                    residual[jj] -= d;
                    (jj, d)
                })
                .collect();
            self.counts[k] += 1;
            self.run(residual, cost + self.cycles[k].cost);
            self.counts[k] -= 1;
            for (jj, d) in taken {
                residual[jj] += d;
            }
            self.allowed[k] = false;
            banned.push(k);
        }
        for k in banned {
            self.allowed[k] = true;
        }
    }
}

fn lcm(a: i128, b: i128) -> i128 {
    let gcd = |mut x: i128, mut y: i128| {
        while y != 0 {
            (x, y) = (y, x % y);
        }
        x
    };
    a / gcd(a, b) * b
}

/// Minimum total spare p-cycle design by branch-and-bound over capacities of
/// every simple cycle. Loaded bridges stay in the leftover and are reported
/// as unprotectable.
pub fn optimal_pcycle_cover(t: &Topology, s0: &NetworkState) -> Result<Solution> {
    if t.node_count() > MAX_COVER_NODES {
        return Err(Error::InstanceTooLarge {
            nodes: t.node_count(),
            limit: MAX_COVER_NODES,
        });
    }
    let cycles = all_simple_cycles(t)?;
    let bridges = t.bridges();
    let loaded: Vec<LinkIdx> = s0
        .positive_links()
        .filter(|l| bridges.binary_search(l).is_err())
        .collect();
    let position = |l: LinkIdx| loaded.binary_search(&l).ok();

    let scale = t
        .links()
        .iter()
        .fold(1i128, |acc, l| lcm(acc, *l.cost.denom()));
    let scaled = |r: Rational| -> u128 {
        (r * Rational::from_integer(scale))
            .to_integer()
            .to_u128()
            .expect("positive cost")
    };
    let cover: Vec<CoverCycle> = cycles
        .iter()
        .map(|c| CoverCycle {
            cost: scaled(c.cost(t)),
            covers: c
                .on_cycle_links()
                .iter()
                .map(|&l| (l, 1))
                .chain(c.straddling_links().iter().map(|&l| (l, 2)))
                .filter_map(|(l, x)| position(l).map(|j| (j, x)))
                .collect(),
        })
        .collect();
    let mut covering = vec![Vec::new(); loaded.len()];
    for (k, c) in cover.iter().enumerate() {
        for &(j, _) in &c.covers {
            covering[j].push(k);
        }
    }

    let mut search = Search {
        cycles: &cover,
        link_cost: loaded.iter().map(|&l| scaled(t.cost(l))).collect(),
        covering,
        allowed: vec![true; cover.len()],
        counts: vec![0; cover.len()],
        best_cost: u128::MAX,
        best_counts: None,
    };
    let mut residual: Vec<u64> = loaded.iter().map(|&l| s0.get(l)).collect();
    search.run(&mut residual, 0);

    let counts = search.best_counts.unwrap_or_else(|| vec![0; cover.len()]);
    let mut state = s0.clone();
    let mut pcycles = Vec::new();
    for (c, &n) in cycles.into_iter().zip(&counts) {
        if n > 0 {
            pcycles.push(apply_pcycle(c, n, &mut state));
        }
    }
    let solution = Solution::new(t, pcycles, state);
    debug_assert!(solution
        .leftover
        .positive_links()
        .all(|l| bridges.binary_search(&l).is_ok()));
    Ok(solution)
}
