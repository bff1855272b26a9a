mod common;

use common::{random_graph, PUBLISHED};
use gem_core::{first_homology, AbelianGroup, Color, ColoredGraph, GemCode};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Boundary matrix mod `p` of the complex whose 2-cells are the bicolored
/// cycles, with edges listed in adjacency-scan order.
fn two_cells_mod(g: &ColoredGraph, p: i64) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut edge_id = vec![[usize::MAX; 4]; n];
    let mut count = 0;
    for v in 0..n {
        for c in Color::ALL {
            let w = g.neighbor(v, c);
            if edge_id[v][c.index()] == usize::MAX {
                edge_id[v][c.index()] = count;
                edge_id[w][c.index()] = count;
                count += 1;
            }
        }
    }
    let mut rows = Vec::new();
    for a in Color::ALL {
        for b in Color::ALL.into_iter().filter(|b| b.index() > a.index()) {
            let mut seen = vec![false; n];
            for s in 0..n {
                if seen[s] {
                    continue;
                }
                let mut row = vec![0; count];
                let (mut v, mut c) = (s, a);
                loop {
                    seen[v] = true;
                    let w = g.neighbor(v, c);
                    let forward = v < w;
                    let e = edge_id[v][c.index()];
                    row[e] = (row[e] + if forward { 1 } else { p - 1 }) % p;
                    v = w;
                    c = if c == a { b } else { a };
                    if v == s && c == a {
                        break;
                    }
                }
                rows.push(row);
            }
        }
    }
    rows
}

fn inverse_mod(x: i64, p: i64) -> i64 {
    (1..p).find(|y| x * y % p == 1).unwrap()
}

fn rank_mod(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inverse_mod(m[rank][col], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for k in 0..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// dim H₁(;F_p) of the 2-complex: cycle rank minus rank of the face boundary map.
fn betti_mod(g: &ColoredGraph, p: i64) -> usize {
    let edges = 2 * g.order();
    edges - g.order() + 1 - rank_mod(two_cells_mod(g, p), p)
}

fn predicted(h: &AbelianGroup, p: u64) -> usize {
    h.rank + h.torsion.iter().filter(|&&d| d % p == 0).count()
}

#[test]
fn homology_agrees_with_field_ranks() {
    let mut rng = StdRng::seed_from_u64(21);
    let mut torsion_seen = 0;
    for _ in 0..400 {
        let n = 2 * rng.gen_range(1..=9);
        let bip = rng.gen_bool(0.5);
        let g = random_graph(&mut rng, n, bip);
        let h = first_homology(&g);
        assert!(h.is_normalized());
        torsion_seen += usize::from(!h.torsion.is_empty());
        for p in [2, 3, 5] {
            assert_eq!(betti_mod(&g, p as i64), predicted(&h, p), "p = {p}, graph {:?}, H1 = {h}", g.adjacency());
        }
    }
    assert!(torsion_seen > 0);
}

#[test]
fn published_graphs() {
    for text in PUBLISHED {
        let g = GemCode::parse(text).unwrap().decode();
        let h = first_homology(&g);
        for p in [2, 3] {
            assert_eq!(betti_mod(&g, p as i64), predicted(&h, p), "{text}");
        }
    }
    // the two catalog entries that are not link complements
    assert_eq!(first_homology(&GemCode::parse("CABFDEFEDCBAEFABCD").unwrap().decode()), AbelianGroup { rank: 1, torsion: vec![2] });
    assert_eq!(first_homology(&GemCode::parse("DABCFEFAECDBBEDFAC").unwrap().decode()), AbelianGroup { rank: 2, torsion: vec![2] });
}

#[test]
fn order_two_graph_is_a_sphere() {
    assert!(first_homology(&ColoredGraph::order_two()).is_trivial());
    assert_eq!(betti_mod(&ColoredGraph::order_two(), 2), 0);
}
