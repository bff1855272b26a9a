//! The census against a naive generator: every labeled 4-tuple of matchings,
//! filtered by the definitions and reduced by a brute-force isomorphism test.

use std::collections::BTreeSet;

use gem_census::{enumerate_codes, BoundaryClass, CensusFilter, EnumerateOptions, Parity};
use gem_core::{
    boundary_profile, canonical_code, find_dipoles, is_bipartite, is_contracted, is_rigid, ColoredGraph,
};

fn matchings(n: usize) -> Vec<Vec<usize>> {
    fn go(m: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(u) = m.iter().position(|&x| x == usize::MAX) else {
            out.push(m.clone());
            return;
        };
        for v in u + 1..m.len() {
            if m[v] == usize::MAX {
                m[u] = v;
                m[v] = u;
                go(m, out);
                m[u] = usize::MAX;
                m[v] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; n], &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn isomorphic(g: &ColoredGraph, h: &ColoredGraph, perms: &[Vec<usize>], sigmas: &[Vec<usize>]) -> bool {
    let (a, b) = (g.adjacency(), h.adjacency());
    let n = a.len();
    perms.iter().any(|phi| {
        sigmas
            .iter()
            .any(|sigma| (0..n).all(|v| (0..4).all(|c| b[phi[v]][sigma[c]] == phi[a[v][c]])))
    })
}

fn passes(g: &ColoredGraph, filter: &CensusFilter) -> bool {
    let bipartite = is_bipartite(g);
    let parity = match filter.parity {
        Parity::Any => true,
        Parity::Bipartite => bipartite,
        Parity::NonBipartite => !bipartite,
    };
    let profile = boundary_profile(g);
    let boundary = match filter.boundary {
        BoundaryClass::Any => true,
        BoundaryClass::Toric => profile.components().iter().all(|s| s.is_torus()),
        BoundaryClass::ToricConnected => profile.len() == 1 && profile.components()[0].is_torus(),
    };
    let two_dipoles = g.order() > 2 && find_dipoles(g).unwrap().iter().any(|d| d.size() == 2);
    parity
        && boundary
        && !profile.is_closed()
        && is_contracted(g)
        && !(filter.no_2_dipoles && two_dipoles)
        && !(filter.rigid_only && !(g.order() > 2 && is_rigid(g).unwrap()))
}

/// One representative per isomorphism class of contracted graphs of order
/// `n` with non-empty boundary.
fn naive_classes(n: usize) -> Vec<ColoredGraph> {
    let ms = matchings(n);
    let (perms, sigmas) = (permutations(n), permutations(4));
    let loose = CensusFilter {
        parity: Parity::Any,
        no_2_dipoles: false,
        ..CensusFilter::default()
    };
    let mut reps: Vec<ColoredGraph> = Vec::new();
    for m0 in &ms {
        for m1 in &ms {
            for m2 in &ms {
                for m3 in &ms {
                    let Ok(g) = ColoredGraph::from_matchings([m0.clone(), m1.clone(), m2.clone(), m3.clone()]) else {
                        continue;
                    };
                    if passes(&g, &loose) && !reps.iter().any(|r| isomorphic(r, &g, &perms, &sigmas)) {
                        reps.push(g);
                    }
                }
            }
        }
    }
    reps
}

fn census(n: usize, filter: &CensusFilter) -> BTreeSet<String> {
    enumerate_codes(n, filter, &EnumerateOptions::default())
        .unwrap()
        .into_iter()
        .map(|c| c.as_str().to_string())
        .collect()
}

#[test]
fn matches_naive_generation_up_to_order_six() {
    let filters = [
        CensusFilter::default(),
        CensusFilter::non_bipartite(),
        CensusFilter { parity: Parity::Any, ..CensusFilter::default() },
        CensusFilter::bipartite().with_boundary(BoundaryClass::Toric),
        CensusFilter::bipartite().with_boundary(BoundaryClass::ToricConnected),
        CensusFilter::bipartite().with_boundary(BoundaryClass::Toric).rigid(),
        CensusFilter { no_2_dipoles: false, ..CensusFilter::default() },
        CensusFilter { parity: Parity::Any, no_2_dipoles: false, ..CensusFilter::default() },
    ];
    let mut nonempty = 0;
    for n in [2, 4, 6] {
        let classes = naive_classes(n);
        for f in &filters {
            let expected: BTreeSet<String> = classes
                .iter()
                .filter(|g| passes(g, f))
                .map(|g| canonical_code(g).as_str().to_string())
                .collect();
            nonempty += usize::from(!expected.is_empty());
            assert_eq!(census(n, f), expected, "order {n}, filter {f:?}");
        }
    }
    assert!(nonempty >= 6);
}

