//! Outerplanarity, maximality, boundary adjacency, and the structural
//! decomposition of maximal bipartite outerplanar graphs.
//!
//! Outerplanarity has two independent routes:
//!
//! * the *structural* route works at any order: every block of order >= 3
//!   must carry an outerplane embedding (unique Hamilton boundary with
//!   non-crossing chords);
//! * the *minor* route works up to order 12: the graph must be both
//!   K4-minor free and K2,3-minor free.
//!
//! [`is_outerplanar_checked`] runs both whenever both apply and treats a
//! disagreement as a fired bug detector.

use crate::embedding::{self, OpEmbedding};
use crate::graph::{BitIter, Graph};
use crate::minor::{has_minor, MinorPattern, MINOR_SEARCH_LIMIT};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// Structural outerplanarity test (block-wise boundary extraction).
pub fn is_outerplanar(g: &Graph) -> bool {
    for comp in g.components() {
        if comp.len() <= 2 {
            continue;
        }
        let cg = g.induced(&comp);
        let bt = cg.block_tree().expect("component is connected");
        for block in &bt.blocks {
            if block.len() >= 3 && embedding::embed(&cg.induced(block)).is_err() {
                return false;
            }
        }
    }
    true
}

/// Minor-route outerplanarity: K4-minor free and K2,3-minor free.
/// Only available up to order 12.
pub fn is_outerplanar_by_minors(g: &Graph) -> Result<bool> {
    Ok(!has_minor(g, MinorPattern::K4)? && !has_minor(g, MinorPattern::K23)?)
}

/// Runs the structural recognizer, cross-checked against the minor route
/// whenever the order admits it. A disagreement means one of the two
/// algorithms is broken and surfaces as `TheoremViolation`.
pub fn is_outerplanar_checked(g: &Graph) -> Result<bool> {
    let structural = is_outerplanar(g);
    if g.n() <= MINOR_SEARCH_LIMIT {
        let by_minors = is_outerplanar_by_minors(g)?;
        if structural != by_minors {
            return Err(Error::TheoremViolation(format!(
                "outerplanarity recognizers disagree on {g:?}: structural={structural}, minors={by_minors}"
            )));
        }
    }
    Ok(structural)
}

/// True iff no edge can be added to `g` without violating simplicity,
/// bipartiteness, or outerplanarity. Precondition: `g` is bipartite and
/// outerplanar.
pub fn is_maximal_bip_outerplanar(g: &Graph) -> Result<bool> {
    if g.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    if !is_outerplanar(g) {
        return Err(Error::NotOuterplanar(
            "maximality is only defined inside the family",
        ));
    }
    for (u, v) in g.non_edges() {
        let h = g.with_edge(u, v).expect("non-edge");
        if h.bipartition().is_some() && is_outerplanar(&h) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Face-based maximality for 2-connected graphs: maximal iff every inner
/// face of the outerplane embedding is a 4-cycle. Must agree with
/// [`is_maximal_bip_outerplanar`] on every valid input.
pub fn is_maximal_2conn_structural(g: &Graph) -> Result<bool> {
    if g.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    let e = embedding::embed(g)?;
    Ok(e.all_faces_quad())
}

/// True iff some outerplane embedding of `g` puts edge `uv` on the outer
/// boundary. A bridge always qualifies; inside a 2-connected block the
/// edge qualifies iff it lies on the block's unique Hamilton boundary,
/// so the embedding choice can never move a chord outside.
pub fn ebo_adjacent(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if !g.has_edge(u, v) {
        return Err(Error::NonEdge { u, v });
    }
    let comp: Vec<usize> = BitIter(g.reachable(u)).collect();
    let cg = g.induced(&comp);
    let cu = comp.iter().position(|&x| x == u).expect("u in component");
    let cv = comp.iter().position(|&x| x == v).expect("v in component");
    let bt = cg.block_tree().expect("component connected");
    let block = bt
        .blocks
        .iter()
        .find(|b| b.contains(&cu) && b.contains(&cv))
        .expect("every edge lies in one block");
    if block.len() == 2 {
        return Ok(true); // bridge
    }
    let bg = cg.induced(block);
    let bu = block.iter().position(|&x| x == cu).expect("u in block");
    let bv = block.iter().position(|&x| x == cv).expect("v in block");
    let e = embedding::embed(&bg)?;
    Ok(e.on_outer(bu, bv))
}

/// All boundary-realizable adjacent pairs, as sorted vertex pairs.
pub fn ebo_pairs(g: &Graph) -> Result<BTreeSet<(usize, usize)>> {
    let mut out = BTreeSet::new();
    for (u, v) in g.edges() {
        if ebo_adjacent(g, u, v)? {
            out.insert((u, v));
        }
    }
    Ok(out)
}

/// Shape of a maximal bipartite outerplanar graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    /// A star (includes the one- and two-vertex graphs).
    Star,
    /// A single maximal 2-connected block, no pendants.
    SingleBlock,
    /// 1-sums of maximal 2-connected blocks and/or pendant edges.
    Composite,
}

/// Decomposition of a maximal bipartite outerplanar graph: the core is a
/// 1-sum of maximal 2-connected blocks; pendant edges hang from roots
/// that avoid the boundary neighborhoods of cut vertices.
#[derive(Debug, Clone)]
pub struct MaximalStructure {
    pub kind: StructureKind,
    /// Core blocks, relabeled to 0..k-1 each.
    pub blocks: Vec<Graph>,
    /// Original vertex ids per core block, sorted.
    pub block_vertices: Vec<Vec<usize>>,
    /// Cut vertices of the core (vertices in >= 2 core blocks).
    pub cut_vertices: Vec<usize>,
    /// Pendant root -> number of pendant edges at it.
    pub pendant_roots: BTreeMap<usize, usize>,
    /// Boundary-realizable adjacent pairs of the host graph.
    pub ebo_pairs: BTreeSet<(usize, usize)>,
}

/// Decomposes a certified-maximal graph. Any structural clause failing on
/// certified input fires the theorem-violation detector.
pub fn structural_decompose(g: &Graph) -> Result<MaximalStructure> {
    if !is_maximal_bip_outerplanar(g)? {
        return Err(Error::NotMaximal);
    }
    let ebo = ebo_pairs(g)?;

    // Maximal trees are exactly the stars.
    if g.m() + 1 == g.n() || g.n() == 1 {
        let is_star = g.n() <= 2 || (0..g.n()).any(|c| g.degree(c) == g.n() - 1);
        if !is_star {
            return Err(Error::TheoremViolation(format!(
                "maximal tree that is not a star: {g:?}"
            )));
        }
        return Ok(MaximalStructure {
            kind: StructureKind::Star,
            blocks: vec![],
            block_vertices: vec![],
            cut_vertices: vec![],
            pendant_roots: BTreeMap::new(),
            ebo_pairs: ebo,
        });
    }

    let bt = g.block_tree().expect("maximal graphs are connected");
    let mut blocks = Vec::new();
    let mut block_vertices = Vec::new();
    let mut pendant_roots: BTreeMap<usize, usize> = BTreeMap::new();
    let mut core_membership: Vec<usize> = vec![0; g.n()];

    for block in &bt.blocks {
        if block.len() == 2 {
            let (a, b) = (block[0], block[1]);
            let (root, leaf) = if g.degree(a) == 1 {
                (b, a)
            } else if g.degree(b) == 1 {
                (a, b)
            } else {
                return Err(Error::TheoremViolation(format!(
                    "internal bridge {a}-{b} in a maximal graph: {g:?}"
                )));
            };
            let _ = leaf;
            *pendant_roots.entry(root).or_insert(0) += 1;
        } else {
            let sub = g.induced(block);
            if !sub.n().is_multiple_of(2) || sub.n() < 4 {
                return Err(Error::TheoremViolation(format!(
                    "core block of order {} in a maximal graph: {g:?}",
                    sub.n()
                )));
            }
            if !is_maximal_bip_outerplanar(&sub)? || !sub.is_two_connected() {
                return Err(Error::TheoremViolation(format!(
                    "core block is not maximal 2-connected bipartite outerplanar: {sub:?}"
                )));
            }
            for &v in block {
                core_membership[v] += 1;
            }
            blocks.push(sub);
            block_vertices.push(block.clone());
        }
    }

    let cut_vertices: Vec<usize> = (0..g.n()).filter(|&v| core_membership[v] >= 2).collect();

    // no two core cut vertices realize a boundary edge
    for &(u, v) in &ebo {
        if cut_vertices.contains(&u) && cut_vertices.contains(&v) {
            return Err(Error::TheoremViolation(format!(
                "cut vertices {u},{v} are boundary-adjacent in a maximal graph: {g:?}"
            )));
        }
    }
    // no pendant root is boundary-adjacent to a core cut vertex,
    // and roots are pairwise boundary-non-adjacent
    for &r in pendant_roots.keys() {
        for &c in &cut_vertices {
            if r != c && g.has_edge(r, c) && ebo.contains(&ord(r, c)) {
                return Err(Error::TheoremViolation(format!(
                    "pendant root {r} boundary-adjacent to cut vertex {c}: {g:?}"
                )));
            }
        }
        for &r2 in pendant_roots.keys() {
            if r < r2 && g.has_edge(r, r2) && ebo.contains(&(r, r2)) {
                return Err(Error::TheoremViolation(format!(
                    "pendant roots {r},{r2} boundary-adjacent: {g:?}"
                )));
            }
        }
    }

    let kind = if blocks.len() == 1 && pendant_roots.is_empty() {
        StructureKind::SingleBlock
    } else {
        StructureKind::Composite
    };
    Ok(MaximalStructure {
        kind,
        blocks,
        block_vertices,
        cut_vertices,
        pendant_roots,
        ebo_pairs: ebo,
    })
}

fn ord(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Embedding accessor used by row-sum checks: the boundary of the unique
/// outerplane embedding of a 2-connected outerplanar graph.
pub fn boundary(g: &Graph) -> Result<OpEmbedding> {
    embedding::embed(g)
}
