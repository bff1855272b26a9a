//! Textual graph codes.
//!
//! Bipartite graphs use the row format: vertices are split into black
//! `b_1..b_p` and white `w_1..w_p`, color 0 pairs `b_i` with `w_i`, and for
//! each color `c = 1, 2, 3` a row of `p` letters spells the permutation
//! `π_c` with `b_i` joined to `w_{π_c(i)}` (`A = 1`, `B = 2`, ...). The code
//! has `3p` letters.
//!
//! Any other labeled graph uses the explicit format: four rows, one per color,
//! each listing the partner of vertices `1..2p`. The code has `8p` letters.
//! The two formats never collide: a row of the explicit format uses at most
//! `2p` distinct letters, fewer than a row of a bipartite code of the same length.

use std::fmt;
use std::str::FromStr;

use crate::color::{Color, NUM_COLORS};
use crate::error::{GemError, Result};
use crate::graph::{component_count, validate_matchings, Adjacency, ColoredGraph};
use crate::invariants::is_bipartite;

const MAX_LETTER: usize = 26;

/// A validated graph code.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GemCode {
    text: String,
    order: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CodeFormat {
    /// `3p` letters, three permutation rows.
    Bipartite,
    /// `8p` letters, four involution rows.
    Explicit,
}

impl GemCode {
    /// Parses and validates a code, including connectivity of the graph it describes.
    pub fn parse(text: &str) -> Result<GemCode> {
        let adj = parse_adjacency(text)?;
        Ok(GemCode {
            text: text.to_string(),
            order: adj.len(),
        })
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn format(&self) -> CodeFormat {
        if self.text.len() * 2 == self.order * 3 {
            CodeFormat::Bipartite
        } else {
            CodeFormat::Explicit
        }
    }

    pub fn decode(&self) -> ColoredGraph {
        let adj = parse_adjacency(&self.text).expect("validated on construction");
        ColoredGraph::from_adjacency_unchecked(adj)
    }
}

impl fmt::Display for GemCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl FromStr for GemCode {
    type Err = GemError;

    fn from_str(s: &str) -> Result<Self> {
        GemCode::parse(s)
    }
}

/// Decodes a code into its labeled graph.
pub fn decode(code: &GemCode) -> ColoredGraph {
    code.decode()
}

fn letter_value(ch: u8) -> Option<usize> {
    ch.is_ascii_uppercase().then(|| usize::from(ch - b'A') + 1)
}

fn letter(value: usize) -> u8 {
    debug_assert!((1..=MAX_LETTER).contains(&value));
    b'A' + (value - 1) as u8
}

fn parse_adjacency(text: &str) -> Result<Vec<Adjacency>> {
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| letter_value(b).is_none()) {
        return Err(GemError::Parse {
            row: 0,
            position: pos,
            message: format!("unexpected character {:?}", text[pos..].chars().next().unwrap()),
        });
    }
    let n = bytes.len();
    if n == 0 {
        return Err(parse_err(0, 0, "empty code"));
    }
    let result = if n % 3 == 0 {
        parse_bipartite(bytes).or_else(|e| if n % 8 == 0 { parse_explicit(bytes).map_err(|_| e) } else { Err(e) })
    } else if n % 8 == 0 {
        parse_explicit(bytes)
    } else {
        Err(parse_err(
            0,
            n,
            format!("length {n} fits neither the 3p nor the 8p layout"),
        ))
    }?;
    if component_count(&result) != 1 {
        return Err(parse_err(0, 0, "code describes a disconnected graph"));
    }
    Ok(result)
}

fn parse_err(row: usize, position: usize, message: impl Into<String>) -> GemError {
    GemError::Parse {
        row,
        position,
        message: message.into(),
    }
}

fn parse_bipartite(bytes: &[u8]) -> Result<Vec<Adjacency>> {
    let p = bytes.len() / 3;
    let mut adj = vec![[0; NUM_COLORS]; 2 * p];
    for b in 0..p {
        adj[b][0] = p + b;
        adj[p + b][0] = b;
    }
    for (r, row) in bytes.chunks(p).enumerate() {
        let mut seen = vec![false; p];
        for (i, &ch) in row.iter().enumerate() {
            let v = letter_value(ch).unwrap();
            let position = r * p + i;
            if v > p {
                return Err(parse_err(
                    r,
                    position,
                    format!("letter {} exceeds {}", ch as char, letter(p.min(MAX_LETTER)) as char),
                ));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(parse_err(
                    r,
                    position,
                    format!("row {r} is not a permutation: {} repeated", ch as char),
                ));
            }
            adj[i][r + 1] = p + v - 1;
            adj[p + v - 1][r + 1] = i;
        }
    }
    Ok(adj)
}

fn parse_explicit(bytes: &[u8]) -> Result<Vec<Adjacency>> {
    let n = bytes.len() / 4;
    let mut adj = vec![[0; NUM_COLORS]; n];
    for (c, row) in bytes.chunks(n).enumerate() {
        for (v, &ch) in row.iter().enumerate() {
            let w = letter_value(ch).unwrap();
            if w > n {
                return Err(parse_err(c, c * n + v, format!("vertex {} out of range", ch as char)));
            }
            adj[v][c] = w - 1;
        }
    }
    validate_matchings(&adj).map_err(|e| parse_err(0, 0, e.to_string()))?;
    Ok(adj)
}

/// Whether `g` is labeled in the bipartite row layout: vertices `0..p` form one
/// class, `p..2p` the other, and color 0 joins `i` with `p + i`.
pub fn is_bipartite_layout(g: &ColoredGraph) -> bool {
    let p = g.order() / 2;
    g.adjacency().iter().enumerate().all(|(v, a)| {
        (v >= p || a[0] == p + v) && a.iter().all(|&w| (v < p) != (w < p))
    })
}

/// Encodes `g` with its own labeling: row format when [`is_bipartite_layout`]
/// holds, explicit format otherwise.
pub fn encode(g: &ColoredGraph) -> Result<GemCode> {
    let n = g.order();
    let text = if is_bipartite_layout(g) {
        let p = n / 2;
        if p > MAX_LETTER {
            return Err(GemError::invalid_argument(format!("order {n} too large to encode")));
        }
        let mut out = Vec::with_capacity(3 * p);
        for c in 1..NUM_COLORS {
            out.extend((0..p).map(|b| letter(g.adjacency()[b][c] - p + 1)));
        }
        out
    } else {
        if n > MAX_LETTER {
            return Err(GemError::invalid_argument(format!("order {n} too large to encode")));
        }
        let mut out = Vec::with_capacity(4 * n);
        for c in 0..NUM_COLORS {
            out.extend((0..n).map(|v| letter(g.adjacency()[v][c] + 1)));
        }
        out
    };
    Ok(GemCode {
        text: String::from_utf8(text).expect("ascii"),
        order: n,
    })
}

/// All 24 orderings of the four colors, in lexicographic order.
pub fn color_permutations() -> Vec<[Color; NUM_COLORS]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                let d = 6 - a - b - c;
                out.push([a, b, c, d].map(|x| Color::ALL[x]));
            }
        }
    }
    out
}

/// A canonical relabeling of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: GemCode,
    /// `vertex_map[v]` is the vertex of the decoded code corresponding to `v`.
    pub vertex_map: Vec<usize>,
    /// `color_map[c]` is the color of the decoded code corresponding to color `c`.
    pub color_map: [Color; NUM_COLORS],
}

/// Canonical code of `g`: two graphs get the same code iff they are isomorphic
/// up to a permutation of colors.
pub fn canonical_code(g: &ColoredGraph) -> GemCode {
    canonical_form(g).code
}

/// Minimizes, over every root vertex and color ordering, the code produced by
/// a deterministic relabeling traversal.
pub fn canonical_form(g: &ColoredGraph) -> CanonicalForm {
    let bipartite = is_bipartite(g);
    let n = g.order();
    let mut best: Option<(Vec<u8>, usize, [Color; NUM_COLORS])> = None;
    let mut buf = Vec::new();
    let mut scratch = Traversal::new(n);
    for sigma in color_permutations() {
        let perm = sigma.map(Color::index);
        for root in 0..n {
            buf.clear();
            if bipartite {
                scratch.bipartite(g.adjacency(), root, perm);
                scratch.bipartite_text(g.adjacency(), perm, &mut buf);
            } else {
                scratch.breadth_first(g.adjacency(), root, perm);
                scratch.explicit_text(g.adjacency(), perm, &mut buf);
            }
            if best.as_ref().map_or(true, |(b, _, _)| buf < *b) {
                best = Some((buf.clone(), root, sigma));
            }
        }
    }
    let (text, root, sigma) = best.expect("graph has at least one vertex");
    let perm = sigma.map(Color::index);
    if bipartite {
        scratch.bipartite(g.adjacency(), root, perm);
    } else {
        scratch.breadth_first(g.adjacency(), root, perm);
    }
    let vertex_map = scratch.vertex_map(g.adjacency(), perm, bipartite);
    // new color k plays old color sigma[k]
    let mut color_map = Color::ALL;
    for (k, old) in sigma.iter().enumerate() {
        color_map[old.index()] = Color::ALL[k];
    }
    CanonicalForm {
        code: GemCode {
            text: String::from_utf8(text).expect("ascii"),
            order: n,
        },
        vertex_map,
        color_map,
    }
}

const UNSEEN: usize = usize::MAX;

/// Scratch space for labeling traversals.
struct Traversal {
    label: Vec<usize>,
    order: Vec<usize>,
}

impl Traversal {
    fn new(n: usize) -> Self {
        Traversal {
            label: vec![UNSEEN; n],
            order: Vec::with_capacity(n),
        }
    }

    fn reset(&mut self) {
        self.label.iter_mut().for_each(|l| *l = UNSEEN);
        self.order.clear();
    }

    /// Labels one class of a bipartite graph (the class of `root`) by walking
    /// `{0,1}`-cycles; whites take the label of their color-0 partner. A new
    /// cycle is entered from the white reached by color 2 or 3 from an already
    /// labeled black, and walked so that this white closes it.
    fn bipartite(&mut self, adj: &[Adjacency], root: usize, perm: [usize; NUM_COLORS]) {
        self.reset();
        let walk = |t: &mut Traversal, mut b: usize| {
            while t.label[b] == UNSEEN {
                t.label[b] = t.order.len();
                t.order.push(b);
                b = adj[adj[b][perm[0]]][perm[1]];
            }
        };
        walk(self, root);
        let mut i = 0;
        while i < self.order.len() {
            let b = self.order[i];
            for &c in &perm[2..] {
                let w = adj[b][c];
                if self.label[adj[w][perm[0]]] == UNSEEN {
                    walk(self, adj[w][perm[1]]);
                }
            }
            i += 1;
        }
    }

    fn bipartite_text(&self, adj: &[Adjacency], perm: [usize; NUM_COLORS], out: &mut Vec<u8>) {
        for &c in &perm[1..] {
            for &b in &self.order {
                let w = adj[b][c];
                out.push(letter(self.label[adj[w][perm[0]]] + 1));
            }
        }
    }

    fn breadth_first(&mut self, adj: &[Adjacency], root: usize, perm: [usize; NUM_COLORS]) {
        self.reset();
        self.label[root] = 0;
        self.order.push(root);
        let mut i = 0;
        while i < self.order.len() {
            let u = self.order[i];
            for &c in &perm {
                let w = adj[u][c];
                if self.label[w] == UNSEEN {
                    self.label[w] = self.order.len();
                    self.order.push(w);
                }
            }
            i += 1;
        }
    }

    fn explicit_text(&self, adj: &[Adjacency], perm: [usize; NUM_COLORS], out: &mut Vec<u8>) {
        for &c in &perm {
            for &u in &self.order {
                out.push(letter(self.label[adj[u][c]] + 1));
            }
        }
    }

    fn vertex_map(&self, adj: &[Adjacency], perm: [usize; NUM_COLORS], bipartite: bool) -> Vec<usize> {
        if !bipartite {
            return self.label.clone();
        }
        let p = self.order.len();
        let mut map = vec![UNSEEN; 2 * p];
        for (i, &b) in self.order.iter().enumerate() {
            map[b] = i;
            map[adj[b][perm[0]]] = p + i;
        }
        map
    }
}
