//! Checks against the published tables.

use std::collections::BTreeSet;

use gem_census::{build_surface_set, enumerate_codes, BoundaryClass, EnumerateOptions};
use gem_core::{
    boundary_profile, canonical_code, first_homology, is_bipartite, is_contracted, is_rigid, AbelianGroup,
    GemCode,
};

use crate::fixtures::{published_counts, table3, PublishedCount, NON_RIGID_ROW, SEIFERT_ROW, TREFOIL_CODES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub ok: bool,
    pub detail: String,
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mark = if self.ok { "ok  " } else { "FAIL" };
        write!(f, "{mark} {}: {}", self.label, self.detail)
    }
}

/// Properties shared by every published graph.
fn graph_problems(code: &GemCode, torus_count: usize, rigid: bool, h1: Option<&AbelianGroup>) -> Vec<String> {
    let g = code.decode();
    let mut bad = Vec::new();
    if !is_bipartite(&g) {
        bad.push("not bipartite".to_string());
    }
    if !is_contracted(&g) {
        bad.push("not contracted".to_string());
    }
    let profile = boundary_profile(&g);
    if profile.len() != torus_count || profile.torus_count() != torus_count {
        bad.push(format!("boundary {profile}, expected {torus_count} tori"));
    }
    if is_bipartite(&g) && is_rigid(&g).unwrap_or(false) != rigid {
        bad.push(format!("rigid should be {rigid}"));
    }
    let h = first_homology(&g);
    if let Some(want) = h1 {
        if h != *want {
            bad.push(format!("H1 = {h}, expected {want}"));
        }
    }
    bad
}

/// One check per catalog row.
pub fn verify_table3() -> Vec<Check> {
    table3()
        .into_iter()
        .map(|row| {
            let label = format!("table {}", row.name);
            let code = match GemCode::parse(&row.code) {
                Ok(c) => c,
                Err(e) => {
                    return Check {
                        label,
                        ok: false,
                        detail: format!("parse error: {e}"),
                    }
                }
            };
            let h1 = if row.link.is_some() {
                Some(AbelianGroup::free(row.boundary))
            } else if row.name == SEIFERT_ROW {
                Some(AbelianGroup {
                    rank: 1,
                    torsion: vec![2],
                })
            } else {
                None
            };
            let bad = graph_problems(&code, row.boundary, row.name != NON_RIGID_ROW, h1.as_ref());
            let g = code.decode();
            let canonical = canonical_code(&g);
            let detail = if bad.is_empty() {
                format!(
                    "{} {}, H1 = {}, canonical code {}",
                    row.boundary,
                    if row.boundary == 1 { "torus" } else { "tori" },
                    first_homology(&g),
                    if canonical.as_str() == row.code {
                        "equals the published one".to_string()
                    } else {
                        format!("{canonical}")
                    }
                )
            } else {
                bad.join("; ")
            };
            Check {
                label,
                ok: bad.is_empty(),
                detail,
            }
        })
        .collect()
}

/// The two 16-vertex trefoil graphs: rigid, one torus, `H1 = Z`, not isomorphic.
pub fn verify_trefoils() -> Vec<Check> {
    let mut out = Vec::new();
    let mut canonical = BTreeSet::new();
    for (i, text) in TREFOIL_CODES.iter().enumerate() {
        let label = format!("trefoil graph {}", i + 1);
        match GemCode::parse(text) {
            Ok(code) => {
                let bad = graph_problems(&code, 1, true, Some(&AbelianGroup::free(1)));
                canonical.insert(canonical_code(&code.decode()));
                out.push(Check {
                    label,
                    ok: bad.is_empty(),
                    detail: if bad.is_empty() {
                        "rigid, one torus, H1 = Z".to_string()
                    } else {
                        bad.join("; ")
                    },
                });
            }
            Err(e) => out.push(Check {
                label,
                ok: false,
                detail: format!("parse error: {e}"),
            }),
        }
    }
    out.push(Check {
        label: "trefoil graphs".to_string(),
        ok: canonical.len() == 2,
        detail: format!("{} distinct canonical codes", canonical.len()),
    });
    out
}

/// Canonical codes of the two published trefoil graphs.
pub fn trefoil_canonical_codes() -> BTreeSet<String> {
    TREFOIL_CODES
        .iter()
        .map(|t| canonical_code(&GemCode::parse(t).expect("fixture parses").decode()).as_str().to_string())
        .collect()
}

/// Runs the census for one published count. The rigid connected-toric census
/// at order 16 must also consist of exactly the two trefoil graphs.
pub fn check_count(p: &PublishedCount, options: &EnumerateOptions) -> Check {
    let label = format!("{}^({})", p.label, p.order);
    let codes = match &p.filter {
        None => Ok(None),
        Some(f) => enumerate_codes(p.order, f, options).map(Some),
    };
    let codes = match codes {
        Ok(c) => c,
        Err(e) => {
            return Check {
                label,
                ok: false,
                detail: e.to_string(),
            }
        }
    };
    let n = codes.as_ref().map_or_else(|| build_surface_set(p.order).len(), Vec::len);
    let mut ok = n == p.value;
    let mut detail = format!("{n} (published {})", p.value);
    let trefoil_run = p
        .filter
        .as_ref()
        .is_some_and(|f| f.rigid_only && f.boundary == BoundaryClass::ToricConnected && p.order == 16);
    if let (true, Some(codes)) = (trefoil_run, &codes) {
        let found: BTreeSet<String> = codes.iter().map(|c| c.as_str().to_string()).collect();
        if found == trefoil_canonical_codes() {
            detail.push_str(", the two trefoil graphs");
        } else {
            ok = false;
            detail.push_str(", codes differ from the trefoil graphs");
        }
    }
    Check { label, ok, detail }
}

/// Published counts at orders up to `max_order`, except those in `skip`.
pub fn counts_up_to(max_order: usize, skip: impl Fn(&PublishedCount) -> bool) -> Vec<PublishedCount> {
    published_counts()
        .into_iter()
        .filter(|p| p.order <= max_order && !skip(p))
        .collect()
}

/// Every check of `verify-tables`: catalog rows, trefoil graphs and the census
/// counts at orders up to `max_order`. The non-bipartite count at order 12 is
/// only run with `with_slow`, as are bipartite toric counts at order 16.
pub fn verify_tables(max_order: usize, with_slow: bool, options: &EnumerateOptions) -> Vec<Check> {
    let mut out = verify_table3();
    out.extend(verify_trefoils());
    let slow = |p: &PublishedCount| {
        (p.label == "C~" && p.order >= 12) || (p.order == 16 && matches!(p.label, "C_t" | "C_rt"))
    };
    for p in counts_up_to(max_order, |p| !with_slow && slow(p)) {
        out.push(check_count(&p, options));
    }
    out
}
