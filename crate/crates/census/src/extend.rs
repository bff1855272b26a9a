use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering};

use gem_core::{boundary_profile, canonical_code, find_dipoles, is_bipartite, is_contracted, ColoredGraph};

use crate::filter::{BoundaryClass, CensusFilter, Parity};
use crate::surfaces::{labels, two_coloring, Adjacency3, SurfaceGraph};
use crate::CensusError;

const FREE: usize = usize::MAX;

/// Open `{a,3}`-paths and closed `{a,3}`-cycles while color 3 is being added.
struct CycleTracker {
    end: [Vec<usize>; 3],
    closed: [usize; 3],
    target: [usize; 3],
}

enum Step {
    Closed,
    Joined(usize, usize),
}

struct Search<'a> {
    base: &'a [Adjacency3],
    filter: &'a CensusFilter,
    /// `other_cycle[a][v]`: the cycle through `v` of the two base colors other than `a`.
    other_cycle: [Vec<usize>; 3],
    m3: Vec<usize>,
    remaining: usize,
    tracker: Option<CycleTracker>,
    cancel: &'a AtomicBool,
    found: BTreeSet<String>,
}

/// Adds color 3 to `base` in every admissible way and returns the canonical
/// codes of the graphs passing `filter`. In bipartite mode one task covers a
/// single choice of sides, given by `flips` over the base components.
pub(crate) fn extend_base(
    base: &SurfaceGraph,
    filter: &CensusFilter,
    flips: u64,
    cancel: &AtomicBool,
) -> Result<BTreeSet<String>, CensusError> {
    let adj = base.adjacency();
    let n = adj.len();
    let other_cycle = [
        labels(adj, &[1, 2]).0,
        labels(adj, &[0, 2]).0,
        labels(adj, &[0, 1]).0,
    ];
    let tracker = (filter.boundary == BoundaryClass::ToricConnected).then(|| {
        let count = |cs: &[usize]| labels(adj, cs).1;
        CycleTracker {
            end: [0, 1, 2].map(|a| adj.iter().map(|x| x[a]).collect()),
            closed: [0; 3],
            target: [1 + count(&[1, 2]), 1 + count(&[0, 2]), 1 + count(&[0, 1])],
        }
    });
    let mut search = Search {
        base: adj,
        filter,
        other_cycle,
        m3: vec![FREE; n],
        remaining: n,
        tracker,
        cancel,
        found: BTreeSet::new(),
    };
    if filter.parity == Parity::Bipartite {
        let side = two_coloring(adj);
        let (comp, _) = base.component_labels();
        let black = |v: usize| side[v] ^ (flips >> comp[v] & 1 == 1);
        let blacks: Vec<usize> = (0..n).filter(|&v| !black(v)).collect();
        let whites: Vec<usize> = (0..n).filter(|&v| black(v)).collect();
        let mut used = vec![false; whites.len()];
        search.bipartite(&blacks, &whites, &mut used, 0);
    } else {
        search.general(0);
    }
    if cancel.load(Ordering::Relaxed) {
        return Err(CensusError::Cancelled);
    }
    Ok(search.found)
}

impl Search<'_> {
    fn bipartite(&mut self, blacks: &[usize], whites: &[usize], used: &mut [bool], i: usize) {
        if self.cancel.load(Ordering::Relaxed) {
            return;
        }
        if i == blacks.len() {
            self.leaf();
            return;
        }
        let b = blacks[i];
        for (j, &w) in whites.iter().enumerate() {
            if used[j] || !self.allowed(b, w) {
                continue;
            }
            used[j] = true;
            let (steps, ok) = self.link(b, w);
            if ok {
                self.bipartite(blacks, whites, used, i + 1);
            }
            self.unlink(b, w, steps);
            used[j] = false;
        }
    }

    fn general(&mut self, from: usize) {
        if self.cancel.load(Ordering::Relaxed) {
            return;
        }
        let Some(u) = (from..self.m3.len()).find(|&u| self.m3[u] == FREE) else {
            self.leaf();
            return;
        };
        for v in u + 1..self.m3.len() {
            if self.m3[v] != FREE || !self.allowed(u, v) {
                continue;
            }
            let (steps, ok) = self.link(u, v);
            if ok {
                self.general(u + 1);
            }
            self.unlink(u, v, steps);
        }
    }

    /// Rejects a 3-edge `u - v` that would create a 3-dipole (never contracted)
    /// or a 2-dipole involving color 3.
    fn allowed(&self, u: usize, v: usize) -> bool {
        let mut joined = (0..3).filter(|&a| self.base[u][a] == v);
        match (joined.next(), joined.next()) {
            (None, _) => true,
            (Some(a), None) => !self.filter.no_2_dipoles || self.other_cycle[a][u] == self.other_cycle[a][v],
            _ => false,
        }
    }

    fn link(&mut self, u: usize, v: usize) -> ([Step; 3], bool) {
        self.m3[u] = v;
        self.m3[v] = u;
        self.remaining -= 2;
        let mut steps = [Step::Closed, Step::Closed, Step::Closed];
        let mut ok = true;
        if let Some(t) = self.tracker.as_mut() {
            for a in 0..3 {
                let end = &mut t.end[a];
                if end[u] == v {
                    t.closed[a] += 1;
                    steps[a] = Step::Closed;
                } else {
                    let (eu, ev) = (end[u], end[v]);
                    end[eu] = ev;
                    end[ev] = eu;
                    steps[a] = Step::Joined(eu, ev);
                }
                ok &= t.closed[a] <= t.target[a] && t.closed[a] + self.remaining / 2 >= t.target[a];
            }
        }
        (steps, ok)
    }

    fn unlink(&mut self, u: usize, v: usize, steps: [Step; 3]) {
        self.m3[u] = FREE;
        self.m3[v] = FREE;
        self.remaining += 2;
        if let Some(t) = self.tracker.as_mut() {
            for (a, step) in steps.into_iter().enumerate() {
                match step {
                    Step::Closed => t.closed[a] -= 1,
                    Step::Joined(eu, ev) => {
                        t.end[a][eu] = u;
                        t.end[a][ev] = v;
                    }
                }
            }
        }
    }

    fn leaf(&mut self) {
        let adj = self
            .base
            .iter()
            .zip(&self.m3)
            .map(|(a, &w)| [a[0], a[1], a[2], w])
            .collect();
        let Ok(g) = ColoredGraph::from_adjacency(adj) else {
            return;
        };
        if let Some(code) = accept(&g, self.filter) {
            self.found.insert(code);
        }
    }
}

/// Canonical code of `g` if it passes every filter condition except rigidity.
pub(crate) fn accept(g: &ColoredGraph, filter: &CensusFilter) -> Option<String> {
    match filter.parity {
        Parity::Bipartite if !is_bipartite(g) => return None,
        Parity::NonBipartite if is_bipartite(g) => return None,
        _ => {}
    }
    if g.order() <= 2 || !is_contracted(g) {
        return None;
    }
    let profile = boundary_profile(g);
    let boundary_ok = match filter.boundary {
        BoundaryClass::Any => !profile.is_closed(),
        BoundaryClass::Toric => !profile.is_closed() && profile.is_toric(),
        BoundaryClass::ToricConnected => profile.is_connected_toric(),
    };
    if !boundary_ok {
        return None;
    }
    if filter.no_2_dipoles && find_dipoles(g).ok()?.iter().any(|d| d.size() == 2) {
        return None;
    }
    Some(canonical_code(g).as_str().to_string())
}
