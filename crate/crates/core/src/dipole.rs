use crate::color::{Color, ColorSet, NUM_COLORS};
use crate::error::{GemError, Result};
use crate::graph::{Adjacency, ColoredGraph};
use crate::residue::residue_through;
use crate::surface::surface_of;

/// Two adjacent vertices together with every edge joining them, lying in
/// different residues of the complementary colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dipole {
    pub vertices: (usize, usize),
    pub colors: ColorSet,
}

impl Dipole {
    /// Number of edges of the dipole.
    pub fn size(&self) -> usize {
        self.colors.len()
    }
}

fn is_dipole_pair(adj: &[Adjacency], u: usize, v: usize, colors: ColorSet) -> bool {
    let rest = colors.complement();
    if colors.is_empty() || rest.is_empty() {
        return false;
    }
    !residue_through(adj, rest, u).contains(v)
}

fn joining(adj: &[Adjacency], u: usize, v: usize) -> ColorSet {
    Color::ALL.into_iter().filter(|c| adj[u][c.index()] == v).collect()
}

/// Every dipole of `g`, once per unordered vertex pair, ordered by `(u, v)` with `u < v`.
pub fn find_dipoles(g: &ColoredGraph) -> Result<Vec<Dipole>> {
    if g.order() <= 2 {
        return Err(GemError::invalid_argument("dipoles need a graph of order > 2"));
    }
    let adj = g.adjacency();
    let mut out = Vec::new();
    for u in g.vertices() {
        let mut partners: Vec<usize> = adj[u].iter().copied().filter(|&v| v > u).collect();
        partners.sort_unstable();
        partners.dedup();
        for v in partners {
            let colors = joining(adj, u, v);
            if is_dipole_pair(adj, u, v, colors) {
                out.push(Dipole {
                    vertices: (u, v),
                    colors,
                });
            }
        }
    }
    Ok(out)
}

fn check_dipole(g: &ColoredGraph, d: &Dipole) -> Result<()> {
    let (u, v) = d.vertices;
    let n = g.order();
    if n <= 2 {
        return Err(GemError::invalid_argument("dipoles need a graph of order > 2"));
    }
    if u >= n || v >= n || u == v {
        return Err(GemError::invalid_argument("dipole vertices out of range"));
    }
    let colors = joining(g.adjacency(), u, v);
    if colors != d.colors || !is_dipole_pair(g.adjacency(), u, v, colors) {
        return Err(GemError::invalid_argument(format!(
            "({u}, {v}) with colors {} is not a dipole of this graph",
            d.colors
        )));
    }
    Ok(())
}

/// Whether cancelling `d` leaves the represented manifold unchanged: always for
/// dipoles of two or more edges; for a single `c`-edge, iff one of the two
/// `ĉ`-residues through its endpoints is a sphere.
pub fn is_proper(g: &ColoredGraph, d: &Dipole) -> Result<bool> {
    check_dipole(g, d)?;
    if d.size() > 1 {
        return Ok(true);
    }
    let c = d.colors.first().expect("nonempty");
    let hat = c.hat();
    let adj = g.adjacency();
    let (u, v) = d.vertices;
    Ok([u, v]
        .into_iter()
        .any(|x| surface_of(adj, residue_through(adj, hat, x).vertices(), hat).is_sphere()))
}

/// Removes the dipole and joins the hanging edges color by color.
///
/// Surviving vertices keep their relative order.
pub fn cancel_dipole(g: &ColoredGraph, d: &Dipole) -> Result<ColoredGraph> {
    check_dipole(g, d)?;
    let (u, v) = d.vertices;
    let adj = g.adjacency();
    let mut work: Vec<Adjacency> = adj.to_vec();
    for c in d.colors.complement().iter() {
        let (x, y) = (adj[u][c.index()], adj[v][c.index()]);
        work[x][c.index()] = y;
        work[y][c.index()] = x;
    }
    let remap: Vec<usize> = (0..g.order())
        .map(|w| w - usize::from(w > u) - usize::from(w > v))
        .collect();
    let out: Vec<Adjacency> = work
        .iter()
        .enumerate()
        .filter(|&(w, _)| w != u && w != v)
        .map(|(_, a)| a.map(|x| remap[x]))
        .collect();
    let result = ColoredGraph::from_adjacency(out);
    assert!(result.is_ok(), "cancelling a dipole cannot disconnect the graph");
    result
}

/// Inserts a dipole with edge colors `colors`.
///
/// For every color `d` outside `colors`, `anchors[d] = (x, y)` must be a
/// `d`-edge of `g`; it is cut and reattached as `x - u` and `v - y`, where
/// `u = order` and `v = order + 1` are the new vertices. Returns the new graph
/// and its dipole, or an error if the insertion does not produce a dipole.
pub fn add_dipole(
    g: &ColoredGraph,
    colors: ColorSet,
    anchors: &[(Color, (usize, usize))],
) -> Result<(ColoredGraph, Dipole)> {
    if colors.is_empty() || colors == ColorSet::FULL {
        return Err(GemError::invalid_argument("dipole needs between 1 and 3 colors"));
    }
    let rest = colors.complement();
    let given: ColorSet = anchors.iter().map(|&(c, _)| c).collect();
    if given != rest || anchors.len() != rest.len() {
        return Err(GemError::invalid_argument(format!(
            "need exactly one anchor edge per color of {rest}"
        )));
    }
    let n = g.order();
    let (u, v) = (n, n + 1);
    let mut adj: Vec<Adjacency> = g.adjacency().to_vec();
    adj.push([v; NUM_COLORS]);
    adj.push([u; NUM_COLORS]);
    for &(c, (x, y)) in anchors {
        let k = c.index();
        if x >= n || y >= n || g.adjacency()[x][k] != y {
            return Err(GemError::invalid_argument(format!("({x}, {y}) is not a {c}-edge")));
        }
        adj[x][k] = u;
        adj[u][k] = x;
        adj[y][k] = v;
        adj[v][k] = y;
    }
    let h = ColoredGraph::from_adjacency(adj)?;
    let d = Dipole {
        vertices: (u, v),
        colors,
    };
    check_dipole(&h, &d)?;
    Ok((h, d))
}

/// Inserts a 2-dipole of colors `{a, b}` next to `vertex`: with `{d, e}` the
/// other two colors, the `d`-edge at `vertex` and the `e`-edge at its
/// `d`-neighbor are split so that the new vertices lie in different
/// `{d, e}`-cycles.
pub fn add_two_dipole(g: &ColoredGraph, a: Color, b: Color, vertex: usize) -> Result<(ColoredGraph, Dipole)> {
    if a == b || vertex >= g.order() {
        return Err(GemError::invalid_argument("need two distinct colors and a valid vertex"));
    }
    let colors = ColorSet::from_colors([a, b]);
    let mut rest = colors.complement().iter();
    let (d, e) = (rest.next().unwrap(), rest.next().unwrap());
    let x = vertex;
    let y = g.neighbor(x, d);
    let z = g.neighbor(y, e);
    // u takes x (via d) and z (via e); v takes y twice, closing a 2-cycle.
    add_dipole(g, colors, &[(d, (x, y)), (e, (z, y))])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{canonical_code, GemCode};
    use crate::invariants::{boundary_profile, is_contracted};

    fn unknot() -> ColoredGraph {
        GemCode::parse("CABCBABCA").unwrap().decode()
    }

    #[test]
    fn order_two_rejected() {
        assert!(find_dipoles(&ColoredGraph::order_two()).is_err());
    }

    #[test]
    fn unknot_has_no_two_dipoles() {
        let ds = find_dipoles(&unknot()).unwrap();
        assert!(ds.iter().all(|d| d.size() != 2));
        assert!(ds.iter().all(|d| d.size() != 3), "contracted graphs have no 3-dipoles");
    }

    #[test]
    fn inserted_two_dipole_is_found_and_cancels_back() {
        let g = unknot();
        let code = canonical_code(&g);
        for (a, b) in [(0, 1), (0, 3), (2, 3), (1, 2)] {
            for vertex in g.vertices() {
                let (a, b) = (Color::ALL[a], Color::ALL[b]);
                let (h, d) = add_two_dipole(&g, a, b, vertex).unwrap();
                assert!(find_dipoles(&h).unwrap().contains(&d));
                assert!(is_proper(&h, &d).unwrap());
                let back = cancel_dipole(&h, &d).unwrap();
                assert_eq!(back, g);
                assert_eq!(canonical_code(&back), code);
            }
        }
    }

    #[test]
    fn three_dipole_is_proper() {
        let g = unknot();
        let c = Color::ALL[2];
        let (x, y) = g.edges(c).next().unwrap();
        let colors = c.hat();
        let (h, d) = add_dipole(&g, colors, &[(c, (x, y))]).unwrap();
        assert_eq!(d.size(), 3);
        assert!(is_proper(&h, &d).unwrap());
        assert_eq!(boundary_profile(&cancel_dipole(&h, &d).unwrap()), boundary_profile(&h));
    }

    /// Exchanges the `c`-edges `(x, y)` of `g1` and `(x', y')` of `g2` in their disjoint union.
    fn join_by_one_dipole(g1: &ColoredGraph, g2: &ColoredGraph, c: Color) -> (ColoredGraph, Dipole) {
        let n1 = g1.order();
        let mut adj: Vec<Adjacency> = g1.adjacency().to_vec();
        adj.extend(g2.adjacency().iter().map(|a| a.map(|w| w + n1)));
        let k = c.index();
        let (x, y) = (0, adj[0][k]);
        let (x2, y2) = (n1, adj[n1][k]);
        adj[x][k] = x2;
        adj[x2][k] = x;
        adj[y][k] = y2;
        adj[y2][k] = y;
        let g = ColoredGraph::from_adjacency(adj).unwrap();
        let d = Dipole {
            vertices: (x, x2),
            colors: ColorSet::from_colors([c]),
        };
        (g, d)
    }

    #[test]
    fn proper_one_dipole_between_spheres() {
        let s = ColoredGraph::order_two();
        let (g, d) = join_by_one_dipole(&s, &s, Color::ALL[0]);
        assert!(!is_contracted(&g));
        assert!(is_proper(&g, &d).unwrap());
        let h = cancel_dipole(&g, &d).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(boundary_profile(&h), boundary_profile(&g));
    }

    #[test]
    fn non_proper_one_dipole_changes_boundary() {
        // The singular residue of the unknot code avoids color 2.
        let g1 = unknot();
        let c = Color::ALL[2];
        let (g, d) = join_by_one_dipole(&g1, &g1, c);
        assert!(find_dipoles(&g).unwrap().contains(&d));
        assert!(!is_proper(&g, &d).unwrap());
        let before = boundary_profile(&g);
        let after = boundary_profile(&cancel_dipole(&g, &d).unwrap());
        assert_eq!(before.torus_count(), 2);
        assert_ne!(before, after);
    }

    #[test]
    fn stale_dipole_rejected() {
        let g = unknot();
        let d = Dipole {
            vertices: (0, 1),
            colors: ColorSet::from_colors([Color::ALL[0]]),
        };
        assert!(matches!(is_proper(&g, &d), Err(GemError::InvalidArgument(_))));
        assert!(cancel_dipole(&g, &d).is_err());
    }
}
