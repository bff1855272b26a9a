use std::fmt;

use crate::color::{Color, ColorSet};
use crate::error::{GemError, Result};
use crate::graph::{component_labels, split_components, Adjacency, ColoredGraph};
use crate::invariants::{is_bipartite, profile_of};
use crate::residue::residue_through;
use crate::surface::surface_of;

/// Two distinct edges of the same color lying together in exactly `i` bicolored cycles.
///
/// Edges are identified by their smaller endpoint; `e < f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RhoPair {
    pub color: Color,
    pub e: usize,
    pub f: usize,
    /// The colors `j` such that `e` and `f` share their `{color, j}`-cycle.
    pub shared: ColorSet,
}

impl RhoPair {
    /// Number of shared bicolored cycles (2 or 3).
    pub fn kind(&self) -> usize {
        self.shared.len()
    }
}

impl fmt::Display for RhoPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rho{} color {} edges at {} and {} (shared {})", self.kind(), self.color, self.e, self.f, self.shared)
    }
}

fn require_bipartite(g: &ColoredGraph) -> Result<()> {
    if is_bipartite(g) {
        Ok(())
    } else {
        Err(GemError::invalid_argument("rho-pairs are defined for bipartite graphs only"))
    }
}

/// All ρᵢ-pairs, ordered by color and then by the smaller endpoints of the two edges.
pub fn find_rho_pairs(g: &ColoredGraph, i: usize) -> Result<Vec<RhoPair>> {
    if !(2..=3).contains(&i) {
        return Err(GemError::invalid_argument(format!("rho-pair kind must be 2 or 3, got {i}")));
    }
    require_bipartite(g)?;
    Ok(all_pairs(g.adjacency()).into_iter().filter(|p| p.kind() == i).collect())
}

fn all_pairs(adj: &[Adjacency]) -> Vec<RhoPair> {
    let mut out = Vec::new();
    for c in Color::ALL {
        let others: Vec<Color> = c.hat().iter().collect();
        let labels: Vec<Vec<usize>> = others
            .iter()
            .map(|&j| component_labels(adj, ColorSet::from_colors([c, j])).0)
            .collect();
        let edges: Vec<usize> = (0..adj.len()).filter(|&u| u < adj[u][c.index()]).collect();
        for (k, &e) in edges.iter().enumerate() {
            for &f in &edges[k + 1..] {
                let shared: ColorSet = others
                    .iter()
                    .zip(&labels)
                    .filter(|(_, l)| l[e] == l[f])
                    .map(|(&j, _)| j)
                    .collect();
                if shared.len() >= 2 {
                    out.push(RhoPair { color: c, e, f, shared });
                }
            }
        }
    }
    out
}

fn check_pair(g: &ColoredGraph, p: &RhoPair) -> Result<()> {
    let n = g.order();
    let valid = p.e < p.f
        && p.f < n
        && p.e < g.neighbor(p.e, p.color)
        && p.f < g.neighbor(p.f, p.color)
        && all_pairs(g.adjacency()).contains(p);
    if valid {
        Ok(())
    } else {
        Err(GemError::invalid_argument(format!("{p} is not a rho-pair of this graph")))
    }
}

/// Side of each vertex in the bipartition with vertex 0 on side 0.
fn sides(adj: &[Adjacency]) -> Vec<bool> {
    let mut side = vec![None; adj.len()];
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if side[w].is_none() {
                side[w] = Some(!side[u].unwrap());
                stack.push(w);
            }
        }
    }
    side.into_iter().map(|s| s.expect("connected")).collect()
}

/// Neighbor table after replacing the `color`-edges at `e` and `f` by the two
/// edges that preserve the bipartition.
fn switched_edges(g: &ColoredGraph, color: Color, e: usize, f: usize) -> Vec<Adjacency> {
    let side = sides(g.adjacency());
    let k = color.index();
    let orient = |x: usize| {
        let y = g.adjacency()[x][k];
        if side[x] { (y, x) } else { (x, y) }
    };
    let (b1, w1) = orient(e);
    let (b2, w2) = orient(f);
    let mut adj = g.adjacency().to_vec();
    adj[b1][k] = w2;
    adj[w2][k] = b1;
    adj[b2][k] = w1;
    adj[w1][k] = b2;
    adj
}

fn switched(g: &ColoredGraph, p: &RhoPair) -> Vec<Adjacency> {
    switched_edges(g, p.color, p.e, p.f)
}

/// Switches the pair; returns the connected components of the result,
/// ordered by smallest original vertex.
pub fn switch(g: &ColoredGraph, p: &RhoPair) -> Result<Vec<ColoredGraph>> {
    require_bipartite(g)?;
    check_pair(g, p)?;
    Ok(split_components(&switched(g, p)))
}

/// Rewires any two distinct `color`-edges (given by one endpoint each) the way
/// a ρ-pair switch does. Applying it twice to the new edges restores `g`.
pub fn switch_edges(g: &ColoredGraph, color: Color, e: usize, f: usize) -> Result<Vec<ColoredGraph>> {
    require_bipartite(g)?;
    let n = g.order();
    if e >= n || f >= n || e == f || g.neighbor(e, color) == f {
        return Err(GemError::invalid_argument("need two distinct edges of the same color"));
    }
    Ok(split_components(&switched_edges(g, color, e, f)))
}

/// A ρ₂-pair is good when switching splits its `{c, j, k}`-residue into two
/// parts, at least one of them a sphere.
pub fn is_good_rho2(g: &ColoredGraph, p: &RhoPair) -> Result<bool> {
    require_bipartite(g)?;
    if p.kind() != 2 {
        return Err(GemError::invalid_argument("expected a rho2-pair"));
    }
    check_pair(g, p)?;
    Ok(good_rho2_unchecked(g, p))
}

fn good_rho2_unchecked(g: &ColoredGraph, p: &RhoPair) -> bool {
    let colors = p.shared.with(p.color);
    let before = residue_through(g.adjacency(), colors, p.e);
    let after = switched(g, p);
    let first = residue_through(&after, colors, before.vertices()[0]);
    if first.len() == before.len() {
        return false;
    }
    let second_root = *before
        .vertices()
        .iter()
        .find(|&&v| !first.contains(v))
        .expect("split leaves vertices outside the first part");
    let second = residue_through(&after, colors, second_root);
    debug_assert_eq!(first.len() + second.len(), before.len());
    let sphere = |r: &crate::residue::Residue| surface_of(&after, r.vertices(), colors).is_sphere();
    sphere(&first) || sphere(&second)
}

/// Number of spheres among the three 3-residues containing both edges of a ρ₃-pair.
pub fn rho3_index(g: &ColoredGraph, p: &RhoPair) -> Result<usize> {
    if p.kind() != 3 {
        return Err(GemError::invalid_argument("expected a rho3-pair"));
    }
    check_pair(g, p)?;
    Ok(rho3_index_unchecked(g, p))
}

fn rho3_index_unchecked(g: &ColoredGraph, p: &RhoPair) -> usize {
    let adj = g.adjacency();
    p.color
        .hat()
        .iter()
        .filter(|&i| {
            let colors = i.hat();
            let r = residue_through(adj, colors, p.e);
            debug_assert!(r.contains(p.f));
            surface_of(adj, r.vertices(), colors).is_sphere()
        })
        .count()
}

/// The six outcomes of switching a ρ₃-pair of index at least two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rho3Case {
    /// Index 3, result disconnected: connected sum of the two parts.
    SplitConnectedSum,
    /// Index 3, result connected: the result plus an `S² × S¹` summand.
    ConnectedS2xS1Sum,
    /// Index 2, result disconnected: connected sum or boundary connected sum of the parts.
    SplitBoundaryOrConnectedSum,
    /// Index 2, connected, same number of boundary components.
    ConnectedSameBoundary,
    /// Index 2, connected, fewer boundary components: a solid-torus summand.
    ConnectedFewerBoundary,
    /// Index 2, connected, more boundary components: boundary-reducible.
    ConnectedMoreBoundary,
}

impl Rho3Case {
    pub fn name(self) -> &'static str {
        match self {
            Rho3Case::SplitConnectedSum => "split-connected-sum",
            Rho3Case::ConnectedS2xS1Sum => "connected-S2xS1-sum",
            Rho3Case::SplitBoundaryOrConnectedSum => "split-boundary-or-connected-sum",
            Rho3Case::ConnectedSameBoundary => "connected-same-boundary",
            Rho3Case::ConnectedFewerBoundary => "connected-fewer-boundary",
            Rho3Case::ConnectedMoreBoundary => "connected-more-boundary",
        }
    }
}

impl fmt::Display for Rho3Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rho3Classification {
    pub case: Rho3Case,
    pub index: usize,
    pub components_after: usize,
}

/// Decides which outcome applies to switching a good ρ₃-pair.
pub fn classify_rho3_switch(g: &ColoredGraph, p: &RhoPair) -> Result<Rho3Classification> {
    require_bipartite(g)?;
    let index = rho3_index(g, p)?;
    if index < 2 {
        return Err(GemError::invalid_argument(format!(
            "rho3-pair of index {index} is not good"
        )));
    }
    let after = switched(g, p);
    let components_after = component_labels(&after, ColorSet::FULL).1;
    let case = match (index, components_after) {
        (3, 2) => Rho3Case::SplitConnectedSum,
        (3, _) => Rho3Case::ConnectedS2xS1Sum,
        (_, 2) => Rho3Case::SplitBoundaryOrConnectedSum,
        _ => {
            let before = profile_of(g.adjacency()).len();
            let now = profile_of(&after).len();
            match now.cmp(&before) {
                std::cmp::Ordering::Equal => Rho3Case::ConnectedSameBoundary,
                std::cmp::Ordering::Less => Rho3Case::ConnectedFewerBoundary,
                std::cmp::Ordering::Greater => Rho3Case::ConnectedMoreBoundary,
            }
        }
    };
    Ok(Rho3Classification {
        case,
        index,
        components_after,
    })
}

/// Good pairs of a bipartite graph: ρ₂-pairs whose switch splits off a sphere
/// and ρ₃-pairs of index at least two.
pub fn good_pairs(g: &ColoredGraph) -> Result<Vec<RhoPair>> {
    require_bipartite(g)?;
    Ok(all_pairs(g.adjacency())
        .into_iter()
        .filter(|p| match p.kind() {
            2 => good_rho2_unchecked(g, p),
            _ => rho3_index_unchecked(g, p) >= 2,
        })
        .collect())
}

/// A bipartite graph without good ρ₂- and ρ₃-pairs.
pub fn is_rigid(g: &ColoredGraph) -> Result<bool> {
    require_bipartite(g)?;
    let adj = g.adjacency();
    Ok(all_pairs(adj).iter().all(|p| match p.kind() {
        2 => !good_rho2_unchecked(g, p),
        _ => rho3_index_unchecked(g, p) < 2,
    }))
}

/// The three 3-residues containing both edges of a ρ₃-pair, by missing color.
pub fn rho3_residues(g: &ColoredGraph, p: &RhoPair) -> Vec<(Color, Vec<usize>)> {
    p.color
        .hat()
        .iter()
        .map(|i| (i, residue_through(g.adjacency(), i.hat(), p.e).vertices().to_vec()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{canonical_code, GemCode};
    use crate::homology::first_homology;
    use crate::invariants::boundary_profile;

    fn decode(s: &str) -> ColoredGraph {
        GemCode::parse(s).unwrap().decode()
    }

    #[test]
    fn unknot_has_good_rho3_and_is_not_rigid() {
        let g = decode("CABCBABCA");
        let pairs = find_rho_pairs(&g, 3).unwrap();
        assert!(pairs.iter().any(|p| rho3_index(&g, p).unwrap() >= 2));
        assert!(!is_rigid(&g).unwrap());
    }

    #[test]
    fn trefoil_graphs_are_rigid() {
        for s in ["DABCHEFGHGFEDCBAGCEABHDF", "DABCHEFGHGFEDCBAGHEACBDF"] {
            let g = decode(s);
            assert!(is_rigid(&g).unwrap());
            assert!(good_pairs(&g).unwrap().is_empty());
        }
    }

    #[test]
    fn rho3_edges_share_three_residues() {
        let g = decode("EABCDFFEABDCCDFEBA");
        for p in find_rho_pairs(&g, 3).unwrap() {
            for (_, r) in rho3_residues(&g, &p) {
                assert!(r.contains(&p.e) && r.contains(&p.f));
                let (e1, f1) = (g.neighbor(p.e, p.color), g.neighbor(p.f, p.color));
                assert!(r.contains(&e1) && r.contains(&f1));
            }
        }
    }

    #[test]
    fn switch_twice_restores_graph() {
        let g = decode("DABCFEFEABDCEFDACB");
        for i in [2, 3] {
            for p in find_rho_pairs(&g, i).unwrap() {
                let parts = switch(&g, &p).unwrap();
                if parts.len() != 1 {
                    continue;
                }
                // new edges keep the labels of e and f's endpoints
                let back = switch_edges(&parts[0], p.color, p.e, p.f).unwrap();
                assert_eq!(back, vec![g.clone()], "switching {p} twice");
            }
        }
    }

    #[test]
    fn rho2_switch_stays_connected() {
        for s in ["DABCDCABCBDA", "EABCDECDABCDEBA", "FABCDEEDFBACDFEACB"] {
            let g = decode(s);
            for p in find_rho_pairs(&g, 2).unwrap() {
                assert_eq!(switch(&g, &p).unwrap().len(), 1);
            }
        }
    }

    #[test]
    fn classify_requires_good_pair() {
        let g = decode("DABCHEFGHGFEDCBAGCEABHDF");
        for p in find_rho_pairs(&g, 3).unwrap() {
            assert!(classify_rho3_switch(&g, &p).is_err());
        }
    }

    #[test]
    fn unknot_rho3_switch_classified() {
        let g = decode("CABCBABCA");
        let p = find_rho_pairs(&g, 3)
            .unwrap()
            .into_iter()
            .find(|p| rho3_index(&g, p).unwrap() >= 2)
            .unwrap();
        let class = classify_rho3_switch(&g, &p).unwrap();
        assert!(class.index >= 2);
        let parts = switch(&g, &p).unwrap();
        assert_eq!(parts.len(), class.components_after);
        if class.case == Rho3Case::ConnectedS2xS1Sum {
            assert_eq!(first_homology(&g).rank, first_homology(&parts[0]).rank + 1);
        }
        let _ = (boundary_profile(&g), canonical_code(&g));
    }

    #[test]
    fn non_bipartite_rejected() {
        let g = ColoredGraph::from_adjacency(vec![
            [1, 2, 3, 1],
            [0, 3, 2, 0],
            [3, 0, 1, 3],
            [2, 1, 0, 2],
        ])
        .unwrap();
        assert!(find_rho_pairs(&g, 2).is_err());
        assert!(is_rigid(&g).is_err());
    }
}
