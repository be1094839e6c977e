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

//! Seeded random scenarios: a random spanning tree, extra links across
//! every bridge, then random chords up to the target degree, with a demand
//! between every node pair.

use std::collections::HashSet;
use std::fmt::Write;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{write_scenario, Demand, LinkSpec, Rational, Topology};

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub nodes: usize,
    pub avg_degree: f64,
    pub demand_min: u64,
    pub demand_max: u64,
    pub seed: u64,
}

impl GenParams {
    /// The 28-node, 45-link scale used by the bundled suite.
    pub fn long_haul(seed: u64) -> Self {
        GenParams {
            nodes: 28,
            avg_degree: 90.0 / 28.0,
            demand_min: 1,
            demand_max: 2,
            seed,
        }
    }
}

fn components_without(n: usize, edges: &[(usize, usize)], skip: usize) -> Vec<usize> {
    let mut label = vec![usize::MAX; n];
    let mut adj = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        if i != skip {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    for root in 0..n {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = root;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if label[w] == usize::MAX {
                    label[w] = root;
                    stack.push(w);
                }
            }
        }
    }
    label
}

fn build(nodes: &[String], edges: &[(usize, usize)], width: usize) -> Result<Topology> {
    let links = edges
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| LinkSpec {
            id: format!("e{:0width$}", i + 1),
            a: nodes[a].clone(),
            b: nodes[b].clone(),
            cost: Rational::from_integer(1),
            working: 0,
        })
        .collect();
    Topology::new(nodes.to_vec(), links)
}

/// Scenario text for `params`; identical parameters give identical text.
pub fn generate_scenario(params: &GenParams) -> Result<String> {
    let n = params.nodes;
    if n < 3 {
        return Err(Error::InvalidParameter("need at least 3 nodes".into()));
    }
    if params.avg_degree.is_nan() || params.avg_degree < 2.0 {
        return Err(Error::InvalidParameter(
            "average degree must be at least 2".into(),
        ));
    }
    if params.demand_min == 0 || params.demand_min > params.demand_max {
        return Err(Error::InvalidParameter(format!(
            "bad demand range {}..={}",
            params.demand_min, params.demand_max
        )));
    }
    let max_links = n * (n - 1) / 2;
    let target = ((n as f64 * params.avg_degree / 2.0).round() as usize).clamp(n, max_links);

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let nodes: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut present: HashSet<(usize, usize)> = HashSet::new();
    let mut add = |edges: &mut Vec<(usize, usize)>, a: usize, b: usize| {
        let key = (a.min(b), a.max(b));
        if present.insert(key) {
            edges.push(key);
            true
        } else {
            false
        }
    };
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        add(&mut edges, order[i], parent);
    }

    let width = max_links.to_string().len();
    loop {
        let t = build(&nodes, &edges, width)?;
        let Some(&bridge) = t.bridges().first() else {
            break;
        };
        let idx = bridge.0;
        let label = components_without(n, &edges, idx);
        let (a, b) = edges[idx];
        let side_a: Vec<usize> = (0..n).filter(|&v| label[v] == label[a]).collect();
        let side_b: Vec<usize> = (0..n).filter(|&v| label[v] == label[b]).collect();
        loop {
            let u = *side_a.choose(&mut rng).expect("non-empty side");
            let v = *side_b.choose(&mut rng).expect("non-empty side");
            if add(&mut edges, u, v) {
                break;
            }
        }
    }
    while edges.len() < target {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            add(&mut edges, u, v);
        }
    }

    let t = build(&nodes, &edges, width)?;
    let mut demands = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            demands.push(Demand {
                src: nodes[i].clone(),
                dst: nodes[j].clone(),
                units: rng.gen_range(params.demand_min..=params.demand_max),
            });
        }
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# generated: nodes={} degree={:.4} demand={}..={} seed={}",
        n, params.avg_degree, params.demand_min, params.demand_max, params.seed
    );
    out.push_str(&write_scenario(&t, &demands));
    Ok(out)
}
