//! Published codes and census counts bundled with the binary.

use gem_census::{BoundaryClass, CensusFilter, Parity};

const TABLE3: &str = include_str!("../fixtures/table3.txt");

/// The two published 16-vertex graphs of the trefoil knot complement.
pub const TREFOIL_CODES: [&str; 2] = ["DABCHEFGHGFEDCBAGCEABHDF", "DABCHEFGHGFEDCBAGHEACBDF"];

/// The only row whose graph is not rigid.
pub const NON_RIGID_ROW: &str = "6^1_1";

/// A row that is not a link complement, with first homology `Z + Z/2`.
pub const SEIFERT_ROW: &str = "12^1_1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    /// Written `N^k_n`.
    pub name: String,
    pub code: String,
    /// Number of vertices `N`.
    pub order: usize,
    /// Number of boundary components `k`.
    pub boundary: usize,
    /// Link name, `None` when the manifold is not a link complement.
    pub link: Option<String>,
}

/// The 24 rows of the catalog of manifolds of order at most 12.
pub fn table3() -> Vec<TableRow> {
    TABLE3
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut f = l.split_whitespace();
            let (name, code, link) = (f.next().unwrap(), f.next().unwrap(), f.next().unwrap());
            let (order, rest) = name.split_once('^').unwrap();
            let (k, _) = rest.split_once('_').unwrap();
            TableRow {
                name: name.to_string(),
                code: code.to_string(),
                order: order.parse().unwrap(),
                boundary: k.parse().unwrap(),
                link: (link != "-").then(|| link.to_string()),
            }
        })
        .collect()
}

/// A published census count.
#[derive(Clone, Debug)]
pub struct PublishedCount {
    pub label: &'static str,
    pub order: usize,
    pub filter: Option<CensusFilter>,
    pub value: usize,
}

fn filter(parity: Parity, boundary: BoundaryClass, rigid: bool) -> CensusFilter {
    CensusFilter {
        parity,
        boundary,
        rigid_only: rigid,
        ..CensusFilter::default()
    }
}

/// Every published count; `filter` is `None` for the surface sets.
pub fn published_counts() -> Vec<PublishedCount> {
    let mut out = Vec::new();
    let s = [0, 1, 3, 14, 71, 553];
    let c = [0, 0, 2, 4, 57, 902];
    let nc = [0, 1, 6, 90, 3967, 395877];
    for (i, order) in (2..=12).step_by(2).enumerate() {
        out.push(PublishedCount {
            label: "S",
            order,
            filter: None,
            value: s[i],
        });
        out.push(PublishedCount {
            label: "C",
            order,
            filter: Some(filter(Parity::Bipartite, BoundaryClass::Any, false)),
            value: c[i],
        });
        out.push(PublishedCount {
            label: "C~",
            order,
            filter: Some(filter(Parity::NonBipartite, BoundaryClass::Any, false)),
            value: nc[i],
        });
    }
    let rows: [(&str, BoundaryClass, bool, [usize; 6]); 4] = [
        ("C_t", BoundaryClass::Toric, false, [2, 4, 20, 174, 1979, 24058]),
        ("C_tc", BoundaryClass::ToricConnected, false, [1, 0, 0, 26, 13, 84]),
        ("C_rt", BoundaryClass::Toric, true, [1, 4, 8, 93, 1391, 4695]),
        ("C_rtc", BoundaryClass::ToricConnected, true, [0, 0, 0, 1, 0, 2]),
    ];
    for (label, boundary, rigid, values) in rows {
        for (i, order) in (6..=16).step_by(2).enumerate() {
            out.push(PublishedCount {
                label,
                order,
                filter: Some(filter(Parity::Bipartite, boundary, rigid)),
                value: values[i],
            });
        }
    }
    out
}
