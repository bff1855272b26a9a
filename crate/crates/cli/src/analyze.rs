//! The single-graph report of `gem analyze`.

use std::fmt::Write as _;

use gem_core::{
    boundary_profile, canonical_code, find_dipoles, find_rho_pairs, first_homology, g_vector, is_bipartite,
    is_contracted, is_good_rho2, is_proper, is_rigid, residue_surfaces, rho3_index, BoundaryProfile, Color,
    ColoredGraph, GemCode,
};

/// `1 torus`, `3 tori, 1 Klein bottle`, or `empty`.
pub fn describe_boundary(profile: &BoundaryProfile) -> String {
    if profile.is_closed() {
        return "empty".to_string();
    }
    let mut groups: Vec<(String, usize)> = Vec::new();
    for s in profile.components() {
        let name = s.to_string();
        match groups.last_mut() {
            Some((n, k)) if *n == name => *k += 1,
            _ => groups.push((name, 1)),
        }
    }
    groups
        .into_iter()
        .map(|(name, k)| match (name.as_str(), k) {
            ("torus", 1) => "1 torus".to_string(),
            ("torus", k) => format!("{k} tori"),
            (n, k) => format!("{k} x {n}"),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn analyze(code: &GemCode) -> String {
    let g = code.decode();
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "code: {code}").unwrap();
    writeln!(w, "canonical: {}", canonical_code(&g)).unwrap();
    writeln!(w, "order: {}", g.order()).unwrap();
    let bipartite = is_bipartite(&g);
    writeln!(w, "bipartite: {bipartite}").unwrap();
    let gv = g_vector(&g);
    writeln!(w, "g: {} {} {} {}", gv[0], gv[1], gv[2], gv[3]).unwrap();
    writeln!(w, "residues:").unwrap();
    let surfaces = residue_surfaces(&g);
    for c in Color::ALL {
        let list: Vec<String> = surfaces
            .iter()
            .filter(|r| r.missing == c)
            .map(|r| format!("{} ({} vertices)", r.surface, r.residue.len()))
            .collect();
        writeln!(w, "  without {c}: {}", list.join(", ")).unwrap();
    }
    writeln!(w, "boundary: {}", describe_boundary(&boundary_profile(&g))).unwrap();
    writeln!(w, "contracted: {}", is_contracted(&g)).unwrap();
    if bipartite && g.order() > 2 {
        writeln!(w, "rigid: {}", is_rigid(&g).expect("bipartite")).unwrap();
    } else if bipartite {
        writeln!(w, "rigid: false").unwrap();
    } else {
        writeln!(w, "rigid: n/a (not bipartite)").unwrap();
    }
    write_inventory(w, &g);
    writeln!(w, "H1: {}", first_homology(&g)).unwrap();
    out
}

fn write_inventory(w: &mut String, g: &ColoredGraph) {
    if g.order() <= 2 {
        writeln!(w, "dipoles: none").unwrap();
    } else {
        let dipoles = find_dipoles(g).expect("order > 2");
        writeln!(w, "dipoles: {}", dipoles.len()).unwrap();
        for (i, d) in dipoles.iter().enumerate() {
            let proper = if is_proper(g, d).expect("found") { "proper" } else { "not proper" };
            let (u, v) = d.vertices;
            writeln!(w, "  [{i}] {}-dipole colors {} vertices {u} {v}, {proper}", d.size(), d.colors).unwrap();
        }
    }
    if !is_bipartite(g) {
        return;
    }
    let rho2 = find_rho_pairs(g, 2).expect("bipartite");
    writeln!(w, "rho2-pairs: {}", rho2.len()).unwrap();
    for (i, p) in rho2.iter().enumerate() {
        let good = if is_good_rho2(g, p).expect("found") { "good" } else { "not good" };
        writeln!(w, "  [{i}] color {} edges at {} and {}, shared {}, {good}", p.color, p.e, p.f, p.shared).unwrap();
    }
    let rho3 = find_rho_pairs(g, 3).expect("bipartite");
    writeln!(w, "rho3-pairs: {}", rho3.len()).unwrap();
    for (i, p) in rho3.iter().enumerate() {
        let index = rho3_index(g, p).expect("found");
        let good = if index >= 2 { "good" } else { "not good" };
        writeln!(w, "  [{i}] color {} edges at {} and {}, index {index}, {good}", p.color, p.e, p.f).unwrap();
    }
}
