//! Deterministic constructors for the named graph families, plus the
//! edge surgeries the extremal arguments use.
//!
//! Vertex numbering follows the source figures 1-based, converted to
//! 0-based here once; every interface below is 0-based.
//!
//! Outerplanarity caveat, documented once for the whole module: a book of
//! `s >= 3` quadrilaterals on a common edge contains a K2,3 minor
//! (contract each quadrilateral's far edge), so `quad_book(s)` and
//! `g1(_, s)` leave the outerplanar family for `s >= 3` even though they
//! stay bipartite. They are competitor families for the spectral bounds,
//! not members of the extremal family itself.

use crate::graph::Graph;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Star of order `n` with its center at vertex 0.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges).expect("star order in range")
}

/// Book of `s >= 1` quadrilaterals sharing the edge `0-1`: order `2s+2`,
/// size `3s+1`. Quadrilateral `j` (1-based) is `0, 1, 2j, 2j+1` with `2j`
/// adjacent to 1 and `2j+1` adjacent to 0.
pub fn quad_book(s: usize) -> Result<Graph> {
    if s < 1 {
        return Err(Error::HypothesisViolated("quad book needs s >= 1".into()));
    }
    let n = 2 * s + 2;
    if n > crate::MAX_N {
        return Err(Error::CapacityExceeded { requested: n });
    }
    let mut edges = vec![(0, 1)];
    for j in 1..=s {
        edges.push((1, 2 * j));
        edges.push((2 * j, 2 * j + 1));
        edges.push((2 * j + 1, 0));
    }
    Graph::from_edges(n, &edges)
}

/// Three quadrilaterals with a common edge (order 8, size 10).
pub fn q_graph() -> Graph {
    quad_book(3).expect("fixed parameters")
}

/// Quad book of `s` quadrilaterals (`1 <= s <= 4`) plus `n - 2s - 2`
/// pendant edges at vertex 0.
pub fn g1(n: usize, s: usize) -> Result<Graph> {
    g1_impl(n, s, false)
}

/// As [`g1`] but without the documented `s` range check. Out-of-range
/// parameters are unexplored territory; results carry no guarantees.
pub fn g1_unchecked(n: usize, s: usize) -> Result<Graph> {
    g1_impl(n, s, true)
}

fn g1_impl(n: usize, s: usize, unchecked: bool) -> Result<Graph> {
    if !unchecked && !(1..=4).contains(&s) {
        return Err(Error::HypothesisViolated(format!(
            "g1 requires 1 <= s <= 4, got {s}"
        )));
    }
    if s < 1 || n < 2 * s + 2 {
        return Err(Error::HypothesisViolated(format!(
            "g1 requires n >= 2s+2, got n={n}, s={s}"
        )));
    }
    let book = quad_book(s)?;
    attach_pendants(&book, 0, n - 2 * s - 2)
}

/// `s` internally disjoint 2-paths between vertices 0 and 1 (through
/// vertices `2..s+2`) plus `n - s - 2` pendant edges at vertex 0.
/// This is a complete bipartite K(2,s) with pendants.
pub fn g2(n: usize, s: usize) -> Result<Graph> {
    g2_impl(n, s, false)
}

/// As [`g2`] without the documented `s` range check.
pub fn g2_unchecked(n: usize, s: usize) -> Result<Graph> {
    g2_impl(n, s, true)
}

fn g2_impl(n: usize, s: usize, unchecked: bool) -> Result<Graph> {
    if !unchecked && !(1..=8).contains(&s) {
        return Err(Error::HypothesisViolated(format!(
            "g2 requires 1 <= s <= 8, got {s}"
        )));
    }
    if s < 1 || n < s + 2 {
        return Err(Error::HypothesisViolated(format!(
            "g2 requires n >= s+2, got n={n}, s={s}"
        )));
    }
    if n > crate::MAX_N {
        return Err(Error::CapacityExceeded { requested: n });
    }
    let mut edges = Vec::new();
    for j in 2..s + 2 {
        edges.push((0, j));
        edges.push((j, 1));
    }
    let core = Graph::from_edges(s + 2, &edges)?;
    attach_pendants(&core, 0, n - s - 2)
}

/// The five maximal 2-connected bipartite outerplanar graphs of order 10,
/// indexed 1..=5. Edge lists are fixtures locked by golden canonical
/// codes and cross-validated against the order-10 dissection census.
pub fn h_case(i: usize) -> Result<Graph> {
    let edges: &[(usize, usize)] = match i {
        // straight ladder of four quadrilaterals
        1 => &[
            (0, 1),
            (0, 2),
            (2, 4),
            (4, 6),
            (6, 8),
            (1, 3),
            (3, 5),
            (5, 7),
            (7, 9),
            (8, 9),
            (2, 3),
            (4, 5),
            (6, 7),
        ],
        // three-cell ladder with the fourth cell below its last cell
        2 => &[
            (0, 1),
            (0, 2),
            (2, 4),
            (4, 6),
            (1, 3),
            (3, 5),
            (5, 7),
            (6, 7),
            (2, 3),
            (4, 5),
            (8, 9),
            (5, 8),
            (7, 9),
        ],
        // three-cell ladder with the fourth cell below its middle cell
        3 => &[
            (0, 1),
            (0, 2),
            (2, 4),
            (4, 6),
            (1, 3),
            (3, 5),
            (5, 7),
            (6, 7),
            (2, 3),
            (4, 5),
            (8, 9),
            (3, 8),
            (5, 9),
        ],
        // two-cell ladder continuing with a bent two-cell tail
        4 => &[
            (0, 1),
            (0, 2),
            (2, 4),
            (1, 3),
            (3, 5),
            (4, 5),
            (2, 3),
            (3, 7),
            (7, 8),
            (8, 9),
            (5, 6),
            (6, 9),
            (5, 8),
        ],
        // fan: three consecutive cells pivoting around one vertex
        5 => &[
            (0, 1),
            (4, 5),
            (2, 3),
            (6, 7),
            (3, 7),
            (5, 6),
            (1, 3),
            (3, 5),
            (3, 9),
            (8, 9),
            (7, 8),
            (0, 2),
            (2, 4),
        ],
        _ => return Err(Error::BadInput(format!("h_case index {i} outside 1..=5"))),
    };
    Graph::from_edges(10, edges)
}

/// Adds `eps` new degree-1 vertices adjacent to `root`.
pub fn attach_pendants(g: &Graph, root: usize, eps: usize) -> Result<Graph> {
    if root >= g.n() {
        return Err(Error::VertexOutOfRange { v: root, n: g.n() });
    }
    if g.n() + eps > crate::MAX_N {
        return Err(Error::CapacityExceeded {
            requested: g.n() + eps,
        });
    }
    let mut out = g.clone();
    for _ in 0..eps {
        let (with_v, v) = out.with_vertex()?;
        out = with_v.with_edge(root, v)?;
    }
    Ok(out)
}

/// Edge rotation `G - Σ v·tᵢ + Σ u·tᵢ` for targets `tᵢ ⊆ N(v) \ N[u]`.
/// Order and size are preserved.
pub fn edge_rotation(g: &Graph, u: usize, v: usize, targets: &[usize]) -> Result<Graph> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { v: u, n: g.n() });
    }
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    if u == v {
        return Err(Error::BadInput("rotation endpoints must differ".into()));
    }
    let allowed = g.row(v) & !g.row(u) & !(1 << u);
    let mut seen = 0u64;
    for &t in targets {
        if t >= g.n() || allowed >> t & 1 == 0 {
            return Err(Error::BadInput(format!(
                "target {t} is not in N(v) \\ N[u] for u={u}, v={v}"
            )));
        }
        if seen >> t & 1 == 1 {
            return Err(Error::BadInput(format!("repeated target {t}")));
        }
        seen |= 1 << t;
    }
    let mut out = g.clone();
    for &t in targets {
        out = out.without_edge(v, t)?.with_edge(u, t)?;
    }
    Ok(out)
}

/// Even outer cycle `0..n-1` dissected by the given non-crossing chords;
/// accepted only when every inner face is a quadrilateral, which makes
/// the output a maximal 2-connected bipartite outerplanar graph.
pub fn quadrangulation(outer_n: usize, chord_plan: &[(usize, usize)]) -> Result<Graph> {
    if outer_n < 4 || !outer_n.is_multiple_of(2) {
        return Err(Error::HypothesisViolated(format!(
            "quadrangulation requires even outer length >= 4, got {outer_n}"
        )));
    }
    if outer_n > crate::MAX_N {
        return Err(Error::CapacityExceeded { requested: outer_n });
    }
    let mut edges: Vec<(usize, usize)> = (0..outer_n).map(|i| (i, (i + 1) % outer_n)).collect();
    for &(a, b) in chord_plan {
        if a >= outer_n || b >= outer_n || a == b {
            return Err(Error::BadInput(format!(
                "chord ({a},{b}) outside the outer cycle"
            )));
        }
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        if b - a == 1 || (a == 0 && b == outer_n - 1) {
            return Err(Error::BadInput(format!(
                "chord ({a},{b}) duplicates an outer edge"
            )));
        }
        edges.push((a, b));
    }
    let g = Graph::from_edges(outer_n, &edges)?;
    if g.m() != outer_n + chord_plan.len() {
        return Err(Error::BadInput("duplicate chord in plan".into()));
    }
    let e = crate::embedding::embed(&g).map_err(|_| {
        Error::BadInput("chord plan is not a valid dissection (crossing chords)".into())
    })?;
    if !e.all_faces_quad() {
        return Err(Error::BadInput(
            "chord plan leaves a non-quadrilateral face".into(),
        ));
    }
    Ok(g)
}

/// Family tags accepted by the `generate` interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Star,
    Cycle,
    Path,
    QuadBook,
    G1,
    G2,
    HCase,
    Q,
    Ladder,
}

/// A parsed family request: which family, its order and parameter, and
/// the occasional extras (attachment vertex, pendant count).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub s: Option<usize>,
    #[serde(default)]
    pub attach: Option<usize>,
    #[serde(default)]
    pub eps: Option<usize>,
    #[serde(default)]
    pub unchecked: bool,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        let need_n = || {
            self.n
                .ok_or_else(|| Error::BadInput("family requires --n".into()))
        };
        let need_s = || {
            self.s
                .ok_or_else(|| Error::BadInput("family requires --s".into()))
        };
        let mut g = match self.family {
            Family::Star => star(need_n()?),
            Family::Cycle => crate::graph::cycle(need_n()?),
            Family::Path => crate::graph::path(need_n()?),
            Family::QuadBook => quad_book(need_s()?)?,
            Family::G1 => {
                if self.unchecked {
                    g1_unchecked(need_n()?, need_s()?)?
                } else {
                    g1(need_n()?, need_s()?)?
                }
            }
            Family::G2 => {
                if self.unchecked {
                    g2_unchecked(need_n()?, need_s()?)?
                } else {
                    g2(need_n()?, need_s()?)?
                }
            }
            Family::HCase => h_case(need_s()?)?,
            Family::Q => q_graph(),
            Family::Ladder => {
                let n = need_n()?;
                if n < 4 || n % 2 != 0 {
                    return Err(Error::HypothesisViolated(
                        "ladder requires even n >= 4".into(),
                    ));
                }
                let chords: Vec<(usize, usize)> = (1..n / 2 - 1).map(|i| (i, n - 1 - i)).collect();
                quadrangulation(n, &chords)?
            }
        };
        if let (Some(root), Some(eps)) = (self.attach, self.eps) {
            g = attach_pendants(&g, root, eps)?;
        }
        Ok(g)
    }
}
