//! Move specifications for `gem move`.
//!
//! Moves apply in sequence to the labeled graph decoded from the code:
//!
//! - `cancel-dipole=I`: cancel dipole `I` of the current dipole inventory;
//! - `insert-dipole=AB@V`: insert a dipole with edge colors `A`, `B` (two or
//!   three digits) next to vertex `V`;
//! - `switch-rho2=I`, `switch-rho3=I`: switch pair `I` of the current ρ-pair inventory.
//!
//! Inventories are listed by `gem analyze`.

use std::fmt::Write as _;
use std::str::FromStr;

use gem_core::{
    add_dipole, add_two_dipole, canonical_code, cancel_dipole, classify_rho3_switch, find_dipoles, find_rho_pairs,
    rho3_index, switch, Color, ColorSet, ColoredGraph,
};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveSpec {
    CancelDipole(usize),
    InsertDipole { colors: Vec<Color>, vertex: usize },
    SwitchRho { kind: usize, index: usize },
}

impl std::fmt::Display for MoveSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MoveSpec::CancelDipole(i) => write!(f, "cancel-dipole={i}"),
            MoveSpec::InsertDipole { colors, vertex } => {
                write!(f, "insert-dipole=")?;
                for c in colors {
                    write!(f, "{c}")?;
                }
                write!(f, "@{vertex}")
            }
            MoveSpec::SwitchRho { kind, index } => write!(f, "switch-rho{kind}={index}"),
        }
    }
}

impl FromStr for MoveSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("bad move `{s}`"));
        let (name, arg) = s.split_once('=').ok_or_else(bad)?;
        match name {
            "cancel-dipole" => Ok(MoveSpec::CancelDipole(arg.parse().map_err(|_| bad())?)),
            "switch-rho2" | "switch-rho3" => Ok(MoveSpec::SwitchRho {
                kind: if name.ends_with('2') { 2 } else { 3 },
                index: arg.parse().map_err(|_| bad())?,
            }),
            "insert-dipole" => {
                let (colors, vertex) = arg.split_once('@').ok_or_else(bad)?;
                let colors: Vec<Color> = colors
                    .chars()
                    .map(|ch| ch.to_digit(10).and_then(|d| Color::new(d as u8)))
                    .collect::<Option<_>>()
                    .ok_or_else(bad)?;
                if !(2..=3).contains(&colors.len()) || ColorSet::from_colors(colors.iter().copied()).len() != colors.len() {
                    return Err(bad());
                }
                Ok(MoveSpec::InsertDipole {
                    colors,
                    vertex: vertex.parse().map_err(|_| bad())?,
                })
            }
            _ => Err(bad()),
        }
    }
}

fn missing(what: &str, index: usize, len: usize) -> CliError {
    CliError::Usage(format!("no {what} [{index}]; the graph has {len}"))
}

/// Applies one move; returns the resulting components and report lines.
pub fn apply(g: &ColoredGraph, spec: &MoveSpec) -> Result<(Vec<ColoredGraph>, String), CliError> {
    let mut note = String::new();
    let out = match spec {
        MoveSpec::CancelDipole(i) => {
            let dipoles = if g.order() > 2 { find_dipoles(g)? } else { Vec::new() };
            let d = dipoles.get(*i).ok_or_else(|| missing("dipole", *i, dipoles.len()))?;
            vec![cancel_dipole(g, d)?]
        }
        MoveSpec::InsertDipole { colors, vertex } => {
            if *vertex >= g.order() {
                return Err(CliError::Usage(format!("no vertex {vertex}")));
            }
            let (h, d) = match colors[..] {
                [a, b] => add_two_dipole(g, a, b, *vertex)?,
                _ => {
                    let set = ColorSet::from_colors(colors.iter().copied());
                    let c = set.complement().first().expect("three colors leave one");
                    add_dipole(g, set, &[(c, (*vertex, g.neighbor(*vertex, c)))])?
                }
            };
            let index = find_dipoles(&h)?.iter().position(|x| *x == d).expect("inserted dipole is found");
            writeln!(note, "new dipole [{index}]").unwrap();
            vec![h]
        }
        MoveSpec::SwitchRho { kind, index } => {
            let pairs = find_rho_pairs(g, *kind)?;
            let p = pairs
                .get(*index)
                .ok_or_else(|| missing(&format!("rho{kind}-pair"), *index, pairs.len()))?;
            if *kind == 3 {
                match classify_rho3_switch(g, p) {
                    Ok(c) => writeln!(
                        note,
                        "classification: {} (index {}, {} component{} after)",
                        c.case,
                        c.index,
                        c.components_after,
                        if c.components_after == 1 { "" } else { "s" }
                    )
                    .unwrap(),
                    Err(_) => writeln!(note, "classification: none (index {}, not good)", rho3_index(g, p)?).unwrap(),
                }
            }
            switch(g, p)?
        }
    };
    Ok((out, note))
}

/// Applies `specs` in order and reports the canonical code after each step.
pub fn run_moves(g: &ColoredGraph, specs: &[MoveSpec]) -> Result<String, CliError> {
    let mut out = String::new();
    let mut current = g.clone();
    for (step, spec) in specs.iter().enumerate() {
        let (parts, note) = apply(&current, spec)?;
        let codes: Vec<String> = parts.iter().map(|h| canonical_code(h).to_string()).collect();
        writeln!(out, "{spec}: {}", codes.join(" + ")).unwrap();
        out.push_str(&note);
        if parts.len() != 1 && step + 1 < specs.len() {
            return Err(CliError::Usage(format!(
                "step {} split the graph; later moves need a connected graph",
                step + 1
            )));
        }
        current = parts.into_iter().next().expect("at least one component");
    }
    Ok(out)
}
