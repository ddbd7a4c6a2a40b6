//! Plain include/exclude search used as an independent oracle.
//!
//! Shares nothing with the main solver beyond subset enumeration: its own
//! boolean compatibility matrix, lowest-index branching, include first, and
//! only the `chosen + remaining <= best` prune.

use crate::combinatorics::KSubsets;
use crate::family::g_intersects_unchecked;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Hard limit on `C(n,k)` for the oracle.
pub const NAIVE_LIMIT: usize = 150;

pub(crate) struct NaiveOutcome {
    pub family: Vec<VertexSet>,
    pub nodes: u64,
}

struct Oracle {
    compatible: Vec<Vec<bool>>,
    best: Vec<usize>,
    nodes: u64,
}

impl Oracle {
    fn run(&mut self, eligible: &mut Vec<bool>, remaining: usize, chosen: &mut Vec<usize>, from: usize) {
        self.nodes += 1;
        if chosen.len() + remaining <= self.best.len() {
            return;
        }
        let Some(i) = (from..eligible.len()).find(|&i| eligible[i]) else {
            // remaining == 0 here, so chosen beats best
            self.best = chosen.clone();
            return;
        };

        // include i: drop it and everything incompatible with it
        let mut dropped = Vec::new();
        for (j, slot) in eligible.iter_mut().enumerate().skip(i) {
            if *slot && (j == i || !self.compatible[i][j]) {
                *slot = false;
                dropped.push(j);
            }
        }
        chosen.push(i);
        self.run(eligible, remaining - dropped.len(), chosen, i + 1);
        chosen.pop();
        for &j in &dropped {
            eligible[j] = true;
        }

        // exclude i
        eligible[i] = false;
        self.run(eligible, remaining - 1, chosen, i + 1);
        eligible[i] = true;
    }
}

pub(crate) fn naive_max_family(g: &Graph, k: usize) -> crate::Result<NaiveOutcome> {
    let sets: Vec<VertexSet> = KSubsets::new(g.n(), k)?.collect();
    let compatible: Vec<Vec<bool>> = sets
        .iter()
        .map(|&x| sets.iter().map(|&y| g_intersects_unchecked(g, x, y)).collect())
        .collect();
    let mut oracle = Oracle {
        compatible,
        best: Vec::new(),
        nodes: 0,
    };
    let mut eligible = vec![true; sets.len()];
    let total = sets.len();
    oracle.run(&mut eligible, total, &mut Vec::new(), 0);
    let family = oracle.best.iter().map(|&i| sets[i]).collect();
    Ok(NaiveOutcome {
        family,
        nodes: oracle.nodes,
    })
}
