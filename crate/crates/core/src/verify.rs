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

//! Failure replay and evaluation metrics.
//!
//! Verification deliberately recomputes ring membership from the raw node
//! sequence of each p-cycle instead of trusting [`crate::Cycle`]'s derived
//! link sets.

use std::fmt::Write;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{
    format_decimal, shortest_path, Demand, LinkIdx, NetworkState, NodeIdx, Rational, Topology,
};
use crate::heuristics::Solution;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkVerdict {
    pub link: LinkIdx,
    pub working: u64,
    /// Σ over p-cycles of the amount each claims to protect on this link.
    pub claimed: u64,
    /// Σ n_p × (restoration paths of p for this link).
    pub restoration: u64,
    /// Restoration routes checked to be intact paths once the link fails.
    pub routes: usize,
    pub protected: bool,
}

/// Arcs of `ring` that carry traffic around a failed link `(a, b)`: the
/// complementary arc for a ring link, both arcs for a chord, none otherwise.
fn restoration_arcs(ring: &[NodeIdx], a: NodeIdx, b: NodeIdx) -> Vec<Vec<NodeIdx>> {
    let len = ring.len();
    let (Some(i), Some(k)) = (
        ring.iter().position(|&n| n == a),
        ring.iter().position(|&n| n == b),
    ) else {
        return Vec::new();
    };
    let walk = |from: usize, to: usize, step: usize| {
        let mut arc = vec![ring[from]];
        let mut at = from;
        while at != to {
            at = (at + step) % len;
            arc.push(ring[at]);
        }
        arc
    };
    let forward = walk(i, k, 1);
    let backward = walk(i, k, len - 1);
    if forward.len() == 2 {
        vec![backward]
    } else if backward.len() == 2 {
        vec![forward]
    } else {
        vec![forward, backward]
    }
}

fn arc_survives(t: &Topology, arc: &[NodeIdx], failed: LinkIdx) -> bool {
    arc.windows(2)
        .all(|w| t.link_between(w[0], w[1]).is_some_and(|l| l != failed))
}

/// Fails every loaded link in turn and checks the solution restores it.
///
/// A link passes when the claimed protection equals its working capacity,
/// does not exceed the restoration capacity the p-cycles provide, no
/// p-cycle claims more than n × (its path count), and every restoration
/// arc is an intact path in the surviving graph.
pub fn verify_protection(t: &Topology, sol: &Solution) -> Result<Vec<LinkVerdict>> {
    for (i, p) in sol.pcycles.iter().enumerate() {
        let ring = p.cycle.ring();
        for k in 0..ring.len() {
            let (a, b) = (ring[k], ring[(k + 1) % ring.len()]);
            if a.0 >= t.node_count() || b.0 >= t.node_count() || t.link_between(a, b).is_none() {
                return Err(Error::InvalidCycle(format!(
                    "p-cycle {i} uses a missing link"
                )));
            }
        }
        if let Some((l, _)) = p.protected.iter().find(|(l, _)| l.0 >= t.link_count()) {
            return Err(Error::UnknownLink(l.to_string()));
        }
    }

    let mut verdicts = Vec::new();
    for j in t.link_indices() {
        let working = t.working(j);
        if working == 0 {
            continue;
        }
        let (a, b) = t.link(j).ends;
        let mut claimed = 0;
        let mut restoration = 0;
        let mut routes = 0;
        let mut sound = true;
        for p in &sol.pcycles {
            let arcs = restoration_arcs(p.cycle.ring(), a, b);
            let paths = arcs.len() as u64;
            let claim = p.protected_on(j);
            claimed += claim;
            restoration += p.capacity * paths;
            if claim > p.capacity * paths {
                sound = false;
            }
            for arc in &arcs {
                if arc_survives(t, arc, j) {
                    routes += 1;
                } else {
                    sound = false;
                }
            }
        }
        verdicts.push(LinkVerdict {
            link: j,
            working,
            claimed,
            restoration,
            routes,
            protected: sound && claimed == working && restoration >= claimed,
        });
    }
    Ok(verdicts)
}

/// Total spare over total working capacity, both cost-weighted.
pub fn total_redundancy(t: &Topology, sol: &Solution) -> Result<Rational> {
    let working = t.weighted_working();
    if working.is_zero() {
        return Err(Error::ZeroWorking);
    }
    Ok(sol.total_spare(t) / working)
}

/// Adds each demand's units to every link of its shortest path. Returns the
/// loaded topology and its all-unprotected state.
pub fn route_demands(t: &Topology, demands: &[Demand]) -> Result<(Topology, NetworkState)> {
    let mut working: Vec<u64> = t.links().iter().map(|l| l.working).collect();
    for d in demands {
        let src = t
            .node(&d.src)
            .ok_or_else(|| Error::UnknownNode(d.src.clone()))?;
        let dst = t
            .node(&d.dst)
            .ok_or_else(|| Error::UnknownNode(d.dst.clone()))?;
        if src == dst || d.units == 0 {
            return Err(Error::InvalidDemand(format!(
                "{} -> {} x{}",
                d.src, d.dst, d.units
            )));
        }
        let path = shortest_path(t, src, dst, &[], &[])
            .ok_or_else(|| Error::UnroutableDemand(d.src.clone(), d.dst.clone()))?;
        for l in path.links {
            working[l.0] += d.units;
        }
    }
    let loaded = t.with_working(&working)?;
    let state = NetworkState::from_topology(&loaded);
    Ok((loaded, state))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolutionReport {
    pub scenario: String,
    pub algorithm: String,
    pub pcycle_count: usize,
    pub total_spare: Rational,
    /// Σ w_j × C_j.
    pub total_working: Rational,
    /// `None` when there is no working capacity.
    pub redundancy: Option<Rational>,
    pub fully_protected: bool,
    /// Cost-weighted working capacity on bridges.
    pub unprotectable_working: Rational,
    /// Whether shortest-cycle candidates had to be added to the algorithm's own.
    pub backstop: bool,
    pub coverage: Vec<LinkVerdict>,
    pub runtime_ms: Option<f64>,
}

pub fn solution_report(
    t: &Topology,
    sol: &Solution,
    scenario: &str,
    algorithm: &str,
    runtime_ms: Option<f64>,
) -> Result<SolutionReport> {
    let coverage = verify_protection(t, sol)?;
    let total_working = t.weighted_working();
    let redundancy = (!total_working.is_zero()).then(|| sol.total_spare(t) / total_working);
    let unprotectable_working = sol.unprotectable.iter().fold(Rational::zero(), |acc, &l| {
        acc + t.cost(l) * Rational::from_integer(t.working(l) as i128)
    });
    Ok(SolutionReport {
        scenario: scenario.to_string(),
        algorithm: algorithm.to_string(),
        pcycle_count: sol.pcycles.len(),
        total_spare: sol.total_spare(t),
        total_working,
        redundancy,
        fully_protected: coverage.iter().all(|v| v.protected),
        unprotectable_working,
        backstop: !sol.backstop_links.is_empty(),
        coverage,
        runtime_ms,
    })
}

pub const COMPARE_HEADER: &str =
    "scenario,algorithm,redundancy,pcycle_count,fully_protected,runtime_ms";

/// One CSV row per report, sorted by scenario then algorithm. Missing
/// redundancy or runtime leaves the field empty.
pub fn compare_report(reports: &[SolutionReport]) -> String {
    let mut rows: Vec<&SolutionReport> = reports.iter().collect();
    rows.sort_by(|a, b| (&a.scenario, &a.algorithm).cmp(&(&b.scenario, &b.algorithm)));
    let mut out = String::new();
    let _ = writeln!(out, "{COMPARE_HEADER}");
    for r in rows {
        let redundancy = r
            .redundancy
            .map(|v| format_decimal(&v, 6))
            .unwrap_or_default();
        let runtime = r
            .runtime_ms
            .map(|ms| format!("{ms:.3}"))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.scenario, r.algorithm, redundancy, r.pcycle_count, r.fully_protected, runtime
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Cycle, LinkSpec};
    use crate::heuristics::{apply_pcycle, PCycle};

    fn topo(nodes: &[&str], links: &[(&str, &str, u64)]) -> Topology {
        let links = links
            .iter()
            .map(|&(a, b, working)| LinkSpec {
                id: format!("{a}{b}"),
                a: a.into(),
                b: b.into(),
                cost: Rational::from_integer(1),
                working,
            })
            .collect();
        Topology::new(nodes.iter().map(|s| s.to_string()).collect(), links).unwrap()
    }

    fn k4() -> Topology {
        topo(
            &["a", "b", "c", "d"],
            &[
                ("a", "b", 1),
                ("a", "c", 1),
                ("a", "d", 1),
                ("b", "c", 1),
                ("b", "d", 1),
                ("c", "d", 1),
            ],
        )
    }

    fn ring(t: &Topology, ids: &[&str]) -> Cycle {
        Cycle::from_ring(t, ids.iter().map(|id| t.node(id).unwrap()).collect()).unwrap()
    }

    fn hamiltonian_solution(t: &Topology) -> Solution {
        let mut s = NetworkState::from_topology(t);
        let p = apply_pcycle(ring(t, &["a", "b", "c", "d"]), 1, &mut s);
        Solution::new(t, vec![p], s)
    }

    fn verdict(v: &[LinkVerdict], t: &Topology, id: &str) -> LinkVerdict {
        let l = t.link_by_id(id).unwrap();
        v.iter().find(|x| x.link == l).unwrap().clone()
    }

    #[test]
    fn chord_failure_has_two_arcs() {
        let t = k4();
        let sol = hamiltonian_solution(&t);
        let v = verify_protection(&t, &sol).unwrap();
        let ac = verdict(&v, &t, "ac");
        assert_eq!((ac.restoration, ac.routes, ac.protected), (2, 2, true));
        let (a, c) = (t.node("a").unwrap(), t.node("c").unwrap());
        let arcs = restoration_arcs(sol.pcycles[0].cycle.ring(), a, c);
        let names: Vec<_> = arcs.iter().map(|arc| t.format_nodes(arc)).collect();
        assert_eq!(names, ["a b c", "a d c"]);
    }

    #[test]
    fn ring_failure_has_complementary_arc() {
        let t = k4();
        let sol = hamiltonian_solution(&t);
        let v = verify_protection(&t, &sol).unwrap();
        let ab = verdict(&v, &t, "ab");
        assert_eq!((ab.restoration, ab.routes, ab.protected), (1, 1, true));
        let (a, b) = (t.node("a").unwrap(), t.node("b").unwrap());
        let arcs = restoration_arcs(sol.pcycles[0].cycle.ring(), a, b);
        assert_eq!(t.format_nodes(&arcs[0]), "a d c b");
        assert!(v.iter().all(|x| x.protected));
    }

    #[test]
    fn empty_solution_is_unprotected() {
        let t = k4();
        let sol = Solution::new(&t, Vec::new(), NetworkState::from_topology(&t));
        let v = verify_protection(&t, &sol).unwrap();
        assert_eq!(v.len(), 6);
        assert!(v.iter().all(|x| !x.protected));
    }

    #[test]
    fn over_claims_are_caught() {
        let t = k4();
        let mut sol = hamiltonian_solution(&t);
        let ab = t.link_by_id("ab").unwrap();
        // Claim 2 on a ring link of a unit p-cycle.
        let p: &mut PCycle = &mut sol.pcycles[0];
        for entry in &mut p.protected {
            if entry.0 == ab {
                entry.1 = 2;
            }
        }
        let v = verify_protection(&t, &sol).unwrap();
        assert!(!verdict(&v, &t, "ab").protected);
    }

    #[test]
    fn redundancy_metrics() {
        let t = k4();
        let sol = hamiltonian_solution(&t);
        assert_eq!(total_redundancy(&t, &sol), Ok(Rational::new(2, 3)));

        let ring5 = topo(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "b", 1),
                ("b", "c", 1),
                ("c", "d", 1),
                ("d", "e", 1),
                ("a", "e", 1),
            ],
        );
        let mut s = NetworkState::from_topology(&ring5);
        let p = apply_pcycle(ring(&ring5, &["a", "b", "c", "d", "e"]), 1, &mut s);
        let sol5 = Solution::new(&ring5, vec![p], s);
        assert_eq!(
            total_redundancy(&ring5, &sol5),
            Ok(Rational::from_integer(1))
        );

        let idle = topo(
            &["a", "b", "c"],
            &[("a", "b", 0), ("b", "c", 0), ("a", "c", 0)],
        );
        let sol0 = Solution::new(&idle, Vec::new(), NetworkState::from_topology(&idle));
        assert_eq!(total_redundancy(&idle, &sol0), Err(Error::ZeroWorking));
    }

    fn demand(src: &str, dst: &str, units: u64) -> Demand {
        Demand {
            src: src.into(),
            dst: dst.into(),
            units,
        }
    }

    #[test]
    fn routing_triangle() {
        let t = topo(
            &["a", "b", "c"],
            &[("a", "b", 0), ("b", "c", 0), ("a", "c", 0)],
        );
        let (loaded, _) = route_demands(&t, &[demand("a", "b", 3)]).unwrap();
        let w: Vec<_> = loaded.links().iter().map(|l| l.working).collect();
        assert_eq!(w, [3, 0, 0]);
        let (loaded, state) = route_demands(
            &t,
            &[
                demand("a", "b", 1),
                demand("b", "c", 1),
                demand("a", "c", 1),
            ],
        )
        .unwrap();
        assert!(loaded.links().iter().all(|l| l.working == 1));
        assert_eq!(state.total(), 3);
    }

    #[test]
    fn routing_square_tie_break() {
        let t = topo(
            &["a", "b", "c", "d"],
            &[("a", "b", 0), ("b", "c", 0), ("c", "d", 0), ("a", "d", 0)],
        );
        let (loaded, _) = route_demands(&t, &[demand("a", "c", 2)]).unwrap();
        let load = |id: &str| loaded.working(loaded.link_by_id(id).unwrap());
        assert_eq!(
            (load("ab"), load("bc"), load("cd"), load("ad")),
            (2, 2, 0, 0)
        );
        assert!(matches!(
            route_demands(&t, &[demand("a", "z", 1)]),
            Err(Error::UnknownNode(_))
        ));
    }

    #[test]
    fn compare_csv_rows() {
        let t = k4();
        let sol = hamiltonian_solution(&t);
        let r1 = solution_report(&t, &sol, "k4", "sla", Some(1.0)).unwrap();
        let r2 = solution_report(&t, &sol, "k4", "aggregation", None).unwrap();
        assert!(r1.fully_protected);
        let csv = compare_report(&[r1, r2]);
        assert_eq!(
            csv,
            format!(
                "{COMPARE_HEADER}\nk4,aggregation,0.666667,1,true,\nk4,sla,0.666667,1,true,1.000\n"
            )
        );
        assert_eq!(compare_report(&[]), format!("{COMPARE_HEADER}\n"));
    }
}
