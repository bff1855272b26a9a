#![allow(dead_code)]

use gem_core::{code::color_permutations, Adjacency, Color, ColoredGraph, NUM_COLORS};
use rand::seq::SliceRandom;
use rand::Rng;

/// The published catalog codes and the two trefoil graphs.
pub const PUBLISHED: [&str; 26] = [
    "CABCBABCA",
    "CABCABBCA",
    "DABCDCABCADB",
    "DABCDCABCBDA",
    "DABCCDABBCDA",
    "EABCDDCEABCDEBA",
    "EABCDECDABCDEBA",
    "CABFDEFEDCBAEFABCD",
    "DABCFEFAECDBBEDFAC",
    "FABCDEEDFBACDFEACB",
    "EABCDFFBEADCEFCABD",
    "EABCDFFDEACBBEADFC",
    "EABCDFFDAEBCDCEFBA",
    "EABCDFFEDABCCDEFAB",
    "FABCDEFDAEBCDBEFCA",
    "EABCDFFDAEBCCFEBAD",
    "DABCFEFEABDCEFDACB",
    "DABCFEFDEBACCEAFDB",
    "DABCFEFEABDCCDEFAB",
    "FABCDEDEFABCCDEFAB",
    "DABCFEFDEBACECFADB",
    "CABFDEFCEABDDEACFB",
    "EABCDFFEABDCCDFEBA",
    "DABCFEFEDABCBCFEDA",
    "DABCHEFGHGFEDCBAGCEABHDF",
    "DABCHEFGHGFEDCBAGHEACBDF",
];

pub fn random_matching<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let mut m = vec![0; n];
    for pair in vs.chunks(2) {
        m[pair[0]] = pair[1];
        m[pair[1]] = pair[0];
    }
    m
}

/// Black vertices `0..n/2`, white `n/2..n`.
pub fn random_bipartite_matching<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let p = n / 2;
    let mut whites: Vec<usize> = (p..n).collect();
    whites.shuffle(rng);
    let mut m = vec![0; n];
    for (b, &w) in whites.iter().enumerate() {
        m[b] = w;
        m[w] = b;
    }
    m
}

/// A uniformly random connected graph of order `n` built from random matchings.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, bipartite: bool) -> ColoredGraph {
    loop {
        let ms: [Vec<usize>; NUM_COLORS] = std::array::from_fn(|_| {
            if bipartite {
                random_bipartite_matching(rng, n)
            } else {
                random_matching(rng, n)
            }
        });
        if let Ok(g) = ColoredGraph::from_matchings(ms) {
            return g;
        }
    }
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_color_permutation<R: Rng>(rng: &mut R) -> [Color; NUM_COLORS] {
    let all = color_permutations();
    all[rng.gen_range(0..all.len())]
}

/// A random isomorphic copy: vertices relabeled and colors renamed.
pub fn scramble<R: Rng>(rng: &mut R, g: &ColoredGraph) -> ColoredGraph {
    let perm = random_permutation(rng, g.order());
    g.relabel(&perm)
        .unwrap()
        .permute_colors(random_color_permutation(rng))
        .unwrap()
}

fn maps_onto(a: &[Adjacency], b: &[Adjacency], phi: &[usize], sigma: &[usize; NUM_COLORS]) -> bool {
    a.iter()
        .enumerate()
        .all(|(v, av)| (0..NUM_COLORS).all(|c| b[phi[v]][sigma[c]] == phi[av[c]]))
}

/// Isomorphism up to color permutation by trying every vertex bijection.
pub fn brute_isomorphic(g: &ColoredGraph, h: &ColoredGraph) -> bool {
    let n = g.order();
    if n != h.order() {
        return false;
    }
    let sigmas: Vec<[usize; NUM_COLORS]> = color_permutations().iter().map(|s| s.map(Color::index)).collect();
    let mut phi: Vec<usize> = (0..n).collect();
    // Heap's algorithm over all bijections
    let mut c = vec![0; n];
    let check = |phi: &[usize]| sigmas.iter().any(|s| maps_onto(g.adjacency(), h.adjacency(), phi, s));
    if check(&phi) {
        return true;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                phi.swap(0, i);
            } else {
                phi.swap(c[i], i);
            }
            if check(&phi) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Isomorphism up to color permutation by fixing the image of vertex 0 and
/// following edges; exact for connected graphs.
pub fn propagate_isomorphic(g: &ColoredGraph, h: &ColoredGraph) -> bool {
    let n = g.order();
    if n != h.order() {
        return false;
    }
    let (a, b) = (g.adjacency(), h.adjacency());
    for s in color_permutations() {
        let sigma = s.map(Color::index);
        'root: for target in 0..n {
            let mut phi = vec![usize::MAX; n];
            let mut used = vec![false; n];
            phi[0] = target;
            used[target] = true;
            let mut stack = vec![0];
            while let Some(v) = stack.pop() {
                for c in 0..NUM_COLORS {
                    let (w, x) = (a[v][c], b[phi[v]][sigma[c]]);
                    if phi[w] == usize::MAX {
                        if used[x] {
                            continue 'root;
                        }
                        phi[w] = x;
                        used[x] = true;
                        stack.push(w);
                    } else if phi[w] != x {
                        continue 'root;
                    }
                }
            }
            return true;
        }
    }
    false
}

/// Every connected graph of order `n` whose color-0 and color-1 edges form
/// alternating cycles in a fixed normal form, one labeled graph per choice of
/// colors 2 and 3. Each isomorphism class of order `n` occurs at least once.
pub fn all_graphs(n: usize) -> Vec<ColoredGraph> {
    let matchings = all_matchings(n);
    let mut out = Vec::new();
    for lengths in even_partitions(n) {
        let (m0, m1) = cycle_normal_form(&lengths);
        for m2 in &matchings {
            for m3 in &matchings {
                if let Ok(g) = ColoredGraph::from_matchings([m0.clone(), m1.clone(), m2.clone(), m3.clone()]) {
                    out.push(g);
                }
            }
        }
    }
    out
}

pub fn all_matchings(n: usize) -> Vec<Vec<usize>> {
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

fn even_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        let mut k = max.min(rest);
        while k >= 2 {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
            k -= 2;
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn cycle_normal_form(lengths: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n: usize = lengths.iter().sum();
    let (mut m0, mut m1) = (vec![0; n], vec![0; n]);
    let mut s = 0;
    for &len in lengths {
        for i in (0..len).step_by(2) {
            m0[s + i] = s + i + 1;
            m0[s + i + 1] = s + i;
            let next = s + (i + 2) % len;
            m1[s + i + 1] = next;
            m1[next] = s + i + 1;
        }
        s += len;
    }
    (m0, m1)
}
