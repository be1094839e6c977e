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

use super::{LinkIdx, Topology};
use crate::error::{Error, Result};

/// Unprotected working capacity per link. Values only ever decrease.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NetworkState {
    unprotected: Vec<u64>,
}

impl NetworkState {
    /// Everything unprotected: the topology's working capacities.
    pub fn from_topology(t: &Topology) -> Self {
        NetworkState {
            unprotected: t.links().iter().map(|l| l.working).collect(),
        }
    }

    /// A partially protected state. Each value must not exceed the link's
    /// working capacity.
    pub fn new(t: &Topology, unprotected: Vec<u64>) -> Result<Self> {
        if unprotected.len() != t.link_count() {
            return Err(Error::InvalidParameter(format!(
                "state has {} entries for {} links",
                unprotected.len(),
                t.link_count()
            )));
        }
        for (l, &u) in unprotected.iter().enumerate() {
            let link = t.link(LinkIdx(l));
            if u > link.working {
                return Err(Error::InvalidParameter(format!(
                    "unprotected {u} on link {} exceeds working {}",
                    link.id, link.working
                )));
            }
        }
        Ok(NetworkState { unprotected })
    }

    pub fn get(&self, l: LinkIdx) -> u64 {
        self.unprotected[l.0]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.unprotected
    }

    pub fn total(&self) -> u64 {
        self.unprotected.iter().sum()
    }

    pub fn is_exhausted(&self) -> bool {
        self.unprotected.iter().all(|&u| u == 0)
    }

    /// Removes up to `amount` from link `l`; returns what was removed.
    pub fn protect(&mut self, l: LinkIdx, amount: u64) -> u64 {
        let slot = &mut self.unprotected[l.0];
        let taken = amount.min(*slot);
        *slot -= taken;
        taken
    }

    pub fn positive_links(&self) -> impl Iterator<Item = LinkIdx> + '_ {
        self.unprotected
            .iter()
            .enumerate()
            .filter(|(_, &u)| u > 0)
            .map(|(i, _)| LinkIdx(i))
    }
}
