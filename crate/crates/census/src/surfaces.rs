use std::collections::HashSet;

use gem_core::SurfaceType;

use crate::partition::generate_two_colored;

/// Neighbor table of a 3-colored graph (colors 0, 1, 2).
pub type Adjacency3 = [usize; 3];

const SIGMA3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// A possibly disconnected 3-colored graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceGraph {
    adj: Vec<Adjacency3>,
}

impl SurfaceGraph {
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacency(&self) -> &[Adjacency3] {
        &self.adj
    }

    /// Component id of every vertex, numbered by smallest vertex, and the count.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        labels(&self.adj, &[0, 1, 2])
    }

    /// Surface of each connected component, in order of smallest vertex.
    pub fn component_surfaces(&self) -> Vec<SurfaceType> {
        let (label, count) = self.component_labels();
        let mut size = vec![0i64; count];
        for &l in &label {
            size[l] += 1;
        }
        let mut faces = vec![0i64; count];
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let (cyc, k) = labels(&self.adj, &[a, b]);
            let mut first = vec![usize::MAX; k];
            for (v, &c) in cyc.iter().enumerate() {
                if first[c] == usize::MAX {
                    first[c] = v;
                    faces[label[v]] += 1;
                }
            }
        }
        let side = two_coloring(&self.adj);
        (0..count)
            .map(|i| {
                let chi = faces[i] - size[i] / 2;
                let orientable = label
                    .iter()
                    .enumerate()
                    .filter(|&(_, &l)| l == i)
                    .all(|(v, _)| self.adj[v].iter().all(|&w| side[w] != side[v]));
                SurfaceType::from_euler(chi, orientable).expect("3-colored graphs cap to closed surfaces")
            })
            .collect()
    }

    pub fn is_bipartite(&self) -> bool {
        let side = two_coloring(&self.adj);
        self.adj
            .iter()
            .enumerate()
            .all(|(v, a)| a.iter().all(|&w| side[w] != side[v]))
    }
}

/// The 3-colored graphs of a given order, up to isomorphism and permutation of colors.
#[derive(Clone, Debug)]
pub struct SurfaceGraphSet {
    pub order: usize,
    pub members: Vec<SurfaceGraph>,
}

impl SurfaceGraphSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Which components a base graph may have.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub(crate) struct BaseKind {
    pub orientable_only: bool,
    pub torus_only: bool,
    pub connected_only: bool,
}

impl BaseKind {
    pub const POSITIVE_GENUS: BaseKind = BaseKind {
        orientable_only: false,
        torus_only: false,
        connected_only: false,
    };

    fn admits(&self, s: SurfaceType) -> bool {
        if self.torus_only {
            s.is_torus()
        } else {
            !s.is_sphere() && (s.orientable || !self.orientable_only)
        }
    }
}

/// All 3-colored graphs on `order` vertices whose every component caps to a
/// surface of positive genus, one per isomorphism class up to color permutation.
pub fn build_surface_set(order: usize) -> SurfaceGraphSet {
    build_base_set(order, BaseKind::POSITIVE_GENUS)
}

pub(crate) fn build_base_set(order: usize, kind: BaseKind) -> SurfaceGraphSet {
    let mut members = Vec::new();
    if order == 0 || order % 2 != 0 {
        return SurfaceGraphSet { order, members };
    }
    let sizes: Vec<usize> = if kind.connected_only {
        vec![order]
    } else {
        (2..=order).step_by(2).collect()
    };
    // (order, graph, canonical string under each color permutation)
    let mut components: Vec<(usize, Vec<Adjacency3>, [Vec<u8>; 6])> = Vec::new();
    for n in sizes {
        let mut found = connected_components(n, kind);
        found.sort_by(|a, b| a.1[0].cmp(&b.1[0]));
        components.extend(found.into_iter().map(|(g, c)| (n, g, c)));
    }
    let mut seen = HashSet::new();
    let mut chosen = Vec::new();
    combine(&components, 0, order, &mut chosen, &mut |picks| {
        let key = (0..6)
            .map(|s| {
                let mut codes: Vec<&Vec<u8>> = picks.iter().map(|&i| &components[i].2[s]).collect();
                codes.sort();
                codes.into_iter().cloned().collect::<Vec<_>>()
            })
            .min()
            .expect("six permutations");
        if seen.insert(key) {
            let mut adj = Vec::with_capacity(order);
            for &i in picks {
                let off = adj.len();
                adj.extend(components[i].1.iter().map(|a| a.map(|w| w + off)));
            }
            members.push(SurfaceGraph { adj });
        }
    });
    SurfaceGraphSet { order, members }
}

fn combine(
    comps: &[(usize, Vec<Adjacency3>, [Vec<u8>; 6])],
    from: usize,
    rest: usize,
    chosen: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if rest == 0 {
        emit(chosen);
        return;
    }
    for i in from..comps.len() {
        if comps[i].0 > rest {
            continue;
        }
        chosen.push(i);
        combine(comps, i, rest - comps[i].0, chosen, emit);
        chosen.pop();
    }
}

/// Connected 3-colored graphs on `n` vertices admitted by `kind`, one per
/// isomorphism class with colors fixed, with their canonical strings under
/// each color permutation.
fn connected_components(n: usize, kind: BaseKind) -> Vec<(Vec<Adjacency3>, [Vec<u8>; 6])> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for partition in generate_two_colored(n) {
        let [m0, m1] = partition.matchings();
        let mut m2 = vec![usize::MAX; n];
        let bipartite = kind.orientable_only || kind.torus_only;
        matchings(&mut m2, bipartite, &mut |m2| {
            let adj: Vec<Adjacency3> = (0..n).map(|v| [m0[v], m1[v], m2[v]]).collect();
            if labels(&adj, &[0, 1, 2]).1 != 1 {
                return;
            }
            let g = SurfaceGraph { adj };
            if !kind.admits(g.component_surfaces()[0]) {
                return;
            }
            let fixed = canon3(&g.adj, SIGMA3[0]);
            if seen.insert(fixed) {
                let codes = SIGMA3.map(|s| canon3(&g.adj, s));
                out.push((g.adj, codes));
            }
        });
    }
    out
}

/// Calls `emit` with every perfect matching on the unassigned entries of `m`;
/// with `bipartite`, only matchings joining even to odd vertices.
fn matchings(m: &mut Vec<usize>, bipartite: bool, emit: &mut dyn FnMut(&[usize])) {
    let Some(u) = m.iter().position(|&x| x == usize::MAX) else {
        emit(m);
        return;
    };
    for v in u + 1..m.len() {
        if m[v] != usize::MAX || (bipartite && (u + v) % 2 == 0) {
            continue;
        }
        m[u] = v;
        m[v] = u;
        matchings(m, bipartite, emit);
        m[u] = usize::MAX;
        m[v] = usize::MAX;
    }
}

/// Minimum over roots of the breadth-first relabeling string, colors read in
/// the order `perm`. A complete invariant of connected 3-colored graphs with
/// colors fixed up to `perm`.
pub(crate) fn canon3(adj: &[Adjacency3], perm: [usize; 3]) -> Vec<u8> {
    let n = adj.len();
    let mut best: Option<Vec<u8>> = None;
    let mut label = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut buf = Vec::with_capacity(3 * n);
    for root in 0..n {
        label.iter_mut().for_each(|l| *l = usize::MAX);
        order.clear();
        label[root] = 0;
        order.push(root);
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &c in &perm {
                let w = adj[v][c];
                if label[w] == usize::MAX {
                    label[w] = order.len();
                    order.push(w);
                }
            }
            i += 1;
        }
        buf.clear();
        for &v in &order {
            for &c in &perm {
                buf.push(label[adj[v][c]] as u8);
            }
        }
        if best.as_ref().map_or(true, |b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    best.unwrap_or_default()
}

pub(crate) fn labels(adj: &[Adjacency3], colors: &[usize]) -> (Vec<usize>, usize) {
    let n = adj.len();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &c in colors {
                let w = adj[u][c];
                if label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// A 2-coloring of each component by breadth-first parity (meaningful on bipartite components).
pub(crate) fn two_coloring(adj: &[Adjacency3]) -> Vec<bool> {
    let n = adj.len();
    let mut side = vec![None; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        stack.push(s);
        while let Some(u) = stack.pop() {
            let here = side[u].expect("visited");
            for &w in &adj[u] {
                if side[w].is_none() {
                    side[w] = Some(!here);
                    stack.push(w);
                }
            }
        }
    }
    side.into_iter().map(|s| s.expect("visited")).collect()
}
