//! Branch-and-bound maximum independent set on the conflict graph.
//!
//! At every node the candidate set is first reduced (vertices with at most one
//! candidate neighbor are always taken), then bounded by `|current| + |P|` and
//! by a greedy clique cover of `P`, then split on a candidate of maximum
//! conflict degree: the branch without it is explored before the branch with it.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use super::conflict::{clear_bit, ones, popcount, popcount_and, set_bit, test_bit, ConflictGraph, Row};

/// Best family found so far, shared by all workers.
struct Incumbent {
    size: AtomicUsize,
    ids: Mutex<Vec<usize>>,
}

impl Incumbent {
    fn new(ids: Vec<usize>) -> Self {
        Incumbent {
            size: AtomicUsize::new(ids.len()),
            ids: Mutex::new(ids),
        }
    }

    fn size(&self) -> usize {
        self.size.load(Ordering::Acquire)
    }

    fn offer(&self, ids: &[usize]) {
        if ids.len() <= self.size() {
            return;
        }
        let mut guard = self.ids.lock().expect("incumbent lock poisoned");
        if ids.len() > guard.len() {
            guard.clear();
            guard.extend_from_slice(ids);
            self.size.store(ids.len(), Ordering::Release);
        }
    }
}

/// Raw outcome on the conflict graph: a maximum independent set and the
/// number of search nodes visited.
pub(crate) struct MisOutcome {
    pub ids: Vec<usize>,
    pub nodes: u64,
}

struct Job {
    candidates: Row,
    chosen: Vec<usize>,
}

struct Searcher<'a> {
    cg: &'a ConflictGraph,
    incumbent: &'a Incumbent,
    nodes: u64,
}

enum Step {
    Done,
    Branch(usize),
}

impl<'a> Searcher<'a> {
    /// Applies reductions and bounds; returns the branching vertex if the
    /// node survives.
    fn prepare(&mut self, p: &mut Row, chosen: &mut Vec<usize>) -> Step {
        self.nodes += 1;
        let cg = self.cg;
        loop {
            let mut changed = false;
            let mut pick: Option<(usize, usize)> = None;
            let snapshot: Vec<usize> = ones(p).collect();
            for v in snapshot {
                if !test_bit(p, v) {
                    continue;
                }
                let deg = popcount_and(cg.row(v), p);
                if deg <= 1 {
                    chosen.push(v);
                    remove_closed(p, cg.row(v), v);
                    changed = true;
                } else if pick.is_none_or(|(d, _)| deg > d) {
                    pick = Some((deg, v));
                }
            }
            if changed {
                continue;
            }
            let best = self.incumbent.size();
            let remaining = popcount(p);
            if remaining == 0 {
                self.incumbent.offer(chosen);
                return Step::Done;
            }
            if chosen.len() + remaining <= best {
                return Step::Done;
            }
            if chosen.len() + clique_cover_size(cg, p) <= best {
                return Step::Done;
            }
            return Step::Branch(pick.expect("nonempty candidates").1);
        }
    }

    fn search(&mut self, mut p: Row, chosen: &mut Vec<usize>) {
        let base = chosen.len();
        if let Step::Branch(v) = self.prepare(&mut p, chosen) {
            let mut without = p.clone();
            clear_bit(&mut without, v);
            self.search(without, chosen);

            let depth = chosen.len();
            chosen.push(v);
            remove_closed(&mut p, self.cg.row(v), v);
            self.search(p, chosen);
            chosen.truncate(depth);
        }
        chosen.truncate(base);
    }

    /// Expands the tree to `depth` and collects the open nodes in the order a
    /// sequential search would visit them.
    fn split(&mut self, mut p: Row, chosen: &mut Vec<usize>, depth: usize, jobs: &mut Vec<Job>) {
        if depth == 0 {
            jobs.push(Job {
                candidates: p,
                chosen: chosen.clone(),
            });
            return;
        }
        let base = chosen.len();
        if let Step::Branch(v) = self.prepare(&mut p, chosen) {
            let mut without = p.clone();
            clear_bit(&mut without, v);
            self.split(without, chosen, depth - 1, jobs);

            let mark = chosen.len();
            chosen.push(v);
            remove_closed(&mut p, self.cg.row(v), v);
            self.split(p, chosen, depth - 1, jobs);
            chosen.truncate(mark);
        }
        chosen.truncate(base);
    }
}

#[inline]
fn remove_closed(p: &mut [u64], row: &[u64], v: usize) {
    for (w, r) in p.iter_mut().zip(row) {
        *w &= !r;
    }
    clear_bit(p, v);
}

/// Number of cliques in a greedy partition of `p`; an upper bound on the
/// independence number of the induced subgraph.
fn clique_cover_size(cg: &ConflictGraph, p: &[u64]) -> usize {
    let mut left = p.to_vec();
    let mut cliques = 0;
    let mut grow = vec![0u64; p.len()];
    while let Some(v) = first_one(&left) {
        clear_bit(&mut left, v);
        for ((g, l), r) in grow.iter_mut().zip(&left).zip(cg.row(v)) {
            *g = l & r;
        }
        while let Some(u) = first_one(&grow) {
            clear_bit(&mut left, u);
            for (g, r) in grow.iter_mut().zip(cg.row(u)) {
                *g &= r;
            }
        }
        cliques += 1;
    }
    cliques
}

#[inline]
fn first_one(row: &[u64]) -> Option<usize> {
    row.iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + row[i].trailing_zeros() as usize)
}

/// Independent set built by scanning subsets in increasing conflict degree.
fn greedy_independent_set(cg: &ConflictGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..cg.num_sets()).collect();
    order.sort_by_key(|&i| (cg.degree(i), i));
    let mut blocked = vec![0u64; cg.words()];
    let mut ids = Vec::new();
    for i in order {
        if !test_bit(&blocked, i) {
            ids.push(i);
            for (b, r) in blocked.iter_mut().zip(cg.row(i)) {
                *b |= r;
            }
        }
    }
    ids.sort_unstable();
    ids
}

/// Maximum independent set of the conflict graph. With `workers == 1` the
/// search is sequential and fully deterministic; with more workers the size is
/// the same but which optimal set is returned may vary.
pub(crate) fn max_independent_set(cg: &ConflictGraph, workers: usize) -> MisOutcome {
    let incumbent = Incumbent::new(greedy_independent_set(cg));
    let mut root = vec![0u64; cg.words()];
    for i in 0..cg.num_sets() {
        set_bit(&mut root, i);
    }

    if workers <= 1 {
        let mut searcher = Searcher {
            cg,
            incumbent: &incumbent,
            nodes: 0,
        };
        searcher.search(root, &mut Vec::new());
        let nodes = searcher.nodes;
        return MisOutcome {
            ids: finish(incumbent),
            nodes,
        };
    }

    let mut splitter = Searcher {
        cg,
        incumbent: &incumbent,
        nodes: 0,
    };
    let depth = (usize::BITS - (4 * workers).leading_zeros()) as usize;
    let mut jobs = Vec::new();
    splitter.split(root, &mut Vec::new(), depth, &mut jobs);

    let next = AtomicUsize::new(0);
    let nodes = AtomicU64::new(splitter.nodes);
    let jobs = Mutex::new(jobs.into_iter().map(Some).collect::<Vec<_>>());
    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                let mut searcher = Searcher {
                    cg,
                    incumbent: &incumbent,
                    nodes: 0,
                };
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let job = {
                        let mut queue = jobs.lock().expect("job queue poisoned");
                        match queue.get_mut(i) {
                            Some(slot) => slot.take(),
                            None => break,
                        }
                    };
                    if let Some(Job {
                        candidates,
                        mut chosen,
                    }) = job
                    {
                        searcher.search(candidates, &mut chosen);
                    }
                }
                nodes.fetch_add(searcher.nodes, Ordering::Relaxed);
            });
        }
    });
    MisOutcome {
        ids: finish(incumbent),
        nodes: nodes.into_inner(),
    }
}

fn finish(incumbent: Incumbent) -> Vec<usize> {
    let mut ids = incumbent.ids.into_inner().expect("incumbent lock poisoned");
    ids.sort_unstable();
    ids
}
