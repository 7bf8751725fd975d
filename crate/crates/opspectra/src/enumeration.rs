//! Exhaustive generation of the graph families the structural and
//! spectral statements quantify over, with isomorphism rejection.
//!
//! Two independent generators cover the maximal family:
//!
//! * filtering the connected bipartite outerplanar classes (grown by
//!   vertex augmentation with canonical-code rejection) through the
//!   add-any-edge maximality test, and
//! * composing the family structurally ([`maximal_by_structure`]):
//!   1-sums of quadrangulation blocks plus pendant edges under the
//!   boundary-adjacency constraints.
//!
//! Their mandatory agreement at overlapping orders machine-checks the
//! structure theorem at small scale; a disagreement is either a generator
//! bug or a counterexample, and both must surface loudly.

use crate::canon::canonical_code;
use crate::constructions::quadrangulation;
use crate::graph::{BitIter, Graph};
use crate::recognition::{
    ebo_pairs, is_maximal_bip_outerplanar, is_outerplanar, is_outerplanar_checked,
};
use crate::spectra;
use crate::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashSet};

/// Families the enumerator understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumFamily {
    /// Connected graphs, no further restriction (oracle support).
    AllConnected,
    /// Connected outerplanar graphs.
    AllConnectedOuterplanar,
    /// Connected bipartite outerplanar graphs.
    BipartiteOuterplanar,
    /// Maximal bipartite outerplanar graphs.
    MaximalBipOuterplanar,
    /// Maximal 2-connected bipartite outerplanar graphs (even order),
    /// generated as polygon quadrangulations.
    Maximal2ConnBipOuterplanar,
}

/// An enumeration request.
#[derive(Debug, Clone)]
pub struct EnumSpec {
    pub family: EnumFamily,
    pub n: usize,
    /// Reduce to one representative per isomorphism class.
    pub iso_reduce: bool,
    /// Maximum number of results; exceeding it truncates and flags.
    pub cap: usize,
    /// Allow orders beyond the hard defaults.
    pub allow_over_limit: bool,
}

impl EnumSpec {
    pub fn new(family: EnumFamily, n: usize) -> Self {
        EnumSpec {
            family,
            n,
            iso_reduce: true,
            cap: usize::MAX,
            allow_over_limit: false,
        }
    }
}

/// Enumeration output; `truncated` flags a hit of the result cap.
#[derive(Debug, Clone)]
pub struct EnumResult {
    pub graphs: Vec<Graph>,
    pub truncated: bool,
}

/// Hard order limits protecting CI; `allow_over_limit` overrides.
fn order_limit(family: EnumFamily) -> usize {
    match family {
        EnumFamily::AllConnected => 8,
        EnumFamily::AllConnectedOuterplanar
        | EnumFamily::BipartiteOuterplanar
        | EnumFamily::MaximalBipOuterplanar => 10,
        EnumFamily::Maximal2ConnBipOuterplanar => 20,
    }
}

/// Runs the enumeration. Results are sorted by canonical code, so equal
/// configs produce byte-identical output.
pub fn enumerate(spec: &EnumSpec) -> Result<EnumResult> {
    let limit = order_limit(spec.family);
    if spec.n > limit && !spec.allow_over_limit {
        return Err(Error::CapExceeded {
            what: "enumeration order",
            cap: limit,
            requested: spec.n,
        });
    }
    if spec.n == 0 || spec.n > crate::MAX_N {
        return Err(Error::OrderOutOfRange { n: spec.n });
    }
    let mut graphs = match spec.family {
        EnumFamily::Maximal2ConnBipOuterplanar => dissection_census(spec.n, spec.iso_reduce)?,
        EnumFamily::MaximalBipOuterplanar => {
            let base = augmentation_classes(EnumFamily::BipartiteOuterplanar, spec.n)?;
            let mut out = Vec::new();
            for g in base {
                if is_maximal_bip_outerplanar(&g)? {
                    out.push(g);
                }
            }
            out
        }
        family => {
            if spec.iso_reduce {
                augmentation_classes(family, spec.n)?
            } else {
                naive_labeled(family, spec.n)?
            }
        }
    };
    graphs.sort_by_cached_key(canonical_code);
    let truncated = graphs.len() > spec.cap;
    graphs.truncate(spec.cap);
    Ok(EnumResult { graphs, truncated })
}

fn family_admits(family: EnumFamily, g: &Graph) -> Result<bool> {
    Ok(match family {
        EnumFamily::AllConnected => true,
        EnumFamily::AllConnectedOuterplanar => {
            if g.n() <= crate::minor::MINOR_SEARCH_LIMIT {
                is_outerplanar_checked(g)?
            } else {
                is_outerplanar(g)
            }
        }
        EnumFamily::BipartiteOuterplanar => {
            g.bipartition().is_some()
                && if g.n() <= crate::minor::MINOR_SEARCH_LIMIT {
                    is_outerplanar_checked(g)?
                } else {
                    is_outerplanar(g)
                }
        }
        EnumFamily::MaximalBipOuterplanar | EnumFamily::Maximal2ConnBipOuterplanar => {
            unreachable!("handled by dedicated generators")
        }
    })
}

/// Isomorphism classes of a hereditary connected family, by vertex
/// augmentation: every connected member arises from a member one vertex
/// smaller by re-attaching a non-cut vertex, so attaching a new vertex to
/// every nonempty neighbor subset of every class representative and
/// rejecting duplicates by canonical code is complete.
fn augmentation_classes(family: EnumFamily, n: usize) -> Result<Vec<Graph>> {
    let mut level: Vec<Graph> = vec![Graph::empty(1)?];
    for size in 2..=n {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut next: Vec<Graph> = Vec::new();
        for parent in &level {
            for subset in 1u64..(1 << (size - 1)) {
                let (with_v, v) = parent.with_vertex()?;
                let mut child = with_v;
                for u in BitIter(subset) {
                    child = child.with_edge(u, v)?;
                }
                if !family_admits(family, &child)? {
                    continue;
                }
                if seen.insert(canonical_code(&child)) {
                    next.push(child);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// All labeled members over the full edge-mask space; the completeness
/// oracle for the augmentation generator. Only feasible through n = 7.
fn naive_labeled(family: EnumFamily, n: usize) -> Result<Vec<Graph>> {
    const NAIVE_LIMIT: usize = 7;
    if n > NAIVE_LIMIT {
        return Err(Error::CapExceeded {
            what: "naive labeled enumeration order",
            cap: NAIVE_LIMIT,
            requested: n,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges)?;
        if g.is_connected() && family_admits(family, &g)? {
            out.push(g);
        }
    }
    Ok(out)
}

// ---- dissection census --------------------------------------------------------

/// All quadrangulations of the fixed even n-gon, as chord plans.
pub fn quad_dissection_plans(n: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::HypothesisViolated(format!(
            "dissection census needs even n >= 4, got {n}"
        )));
    }
    Ok(piece_plans(0, n - 1))
}

/// Chord sets dissecting the piece bounded by the path `lo..hi` plus the
/// closing edge `(hi, lo)` into quadrilaterals. The quad along the
/// closing edge has corners `lo < a < b < hi`; each remaining side is an
/// outer edge or becomes a chord over a recursively dissected sub-piece.
/// Side gaps stay odd so every sub-piece closes into an even cycle.
fn piece_plans(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if hi - lo == 1 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut a = lo + 1;
    while a < hi {
        let mut b = a + 1;
        while b < hi {
            if (hi - b) % 2 == 1 {
                let side_plans: Vec<Vec<Vec<(usize, usize)>>> = [(lo, a), (a, b), (b, hi)]
                    .iter()
                    .map(|&(x, y)| {
                        let mut plans = piece_plans(x, y);
                        if y - x > 1 {
                            for p in plans.iter_mut() {
                                p.push((x, y));
                            }
                        }
                        plans
                    })
                    .collect();
                for p1 in &side_plans[0] {
                    for p2 in &side_plans[1] {
                        for p3 in &side_plans[2] {
                            let mut plan = p1.clone();
                            plan.extend_from_slice(p2);
                            plan.extend_from_slice(p3);
                            out.push(plan);
                        }
                    }
                }
            }
            b += 2;
        }
        a += 2;
    }
    out
}

/// Quadrangulation census as graphs: all labeled dissections of the
/// fixed n-gon, or their isomorphism classes.
pub fn dissection_census(n: usize, iso_reduce: bool) -> Result<Vec<Graph>> {
    let plans = quad_dissection_plans(n)?;
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for plan in plans {
        let g = quadrangulation(n, &plan)?;
        if iso_reduce {
            if seen.insert(canonical_code(&g)) {
                out.push(g);
            }
        } else {
            out.push(g);
        }
    }
    Ok(out)
}

// ---- structured generator ------------------------------------------------------

/// Generates every maximal bipartite outerplanar graph of order `n <= 10`
/// by structure: the star, or 1-sums of quadrangulation blocks (no two
/// cut vertices boundary-adjacent) with pendant edges at roots that are
/// pairwise boundary-non-adjacent and not boundary-adjacent to any cut
/// vertex. Output is isomorphism-reduced and each member is verified
/// maximal; a verification failure fires the theorem-violation detector.
pub fn maximal_by_structure(n: usize) -> Result<Vec<Graph>> {
    const STRUCT_LIMIT: usize = 10;
    if n > STRUCT_LIMIT {
        return Err(Error::CapExceeded {
            what: "structured generator order",
            cap: STRUCT_LIMIT,
            requested: n,
        });
    }
    if n == 0 {
        return Err(Error::OrderOutOfRange { n });
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out: Vec<Graph> = Vec::new();

    // the star is always maximal
    verify_and_push(crate::constructions::star(n), &mut out, &mut seen)?;

    // block classes by order
    let mut blocks_by_order: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    let mut k = 4;
    while k <= n {
        blocks_by_order.insert(k, dissection_census(k, true)?);
        k += 2;
    }

    // assemble cores by repeated 1-sums, then distribute pendants
    let mut cores: Vec<Graph> = Vec::new();
    for blocks in blocks_by_order.values() {
        cores.extend(blocks.iter().cloned());
    }
    let mut frontier = cores.clone();
    let mut core_seen: HashSet<Vec<u8>> = cores.iter().map(canonical_code).collect();
    while let Some(core) = frontier.pop() {
        // attach pendants to this core in every admissible way
        distribute_pendants(&core, n, &mut out, &mut seen)?;
        // grow by another block if the order allows
        for (&order, blocks) in &blocks_by_order {
            if core.n() + order - 1 > n {
                continue;
            }
            for block in blocks {
                for v in core.vertices() {
                    for b in block.vertices() {
                        let glued = core.k_sum(block, &[v], &[b])?;
                        if !cut_vertices_boundary_ok(&glued)? {
                            continue;
                        }
                        if core_seen.insert(canonical_code(&glued)) {
                            frontier.push(glued.clone());
                        }
                    }
                }
            }
        }
    }
    out.sort_by_cached_key(canonical_code);
    Ok(out)
}

/// Cores violate maximality iff two cut vertices realize a boundary edge.
fn cut_vertices_boundary_ok(core: &Graph) -> Result<bool> {
    let bt = core.block_tree()?;
    if bt.cut_vertices.len() < 2 {
        return Ok(true);
    }
    let ebo = ebo_pairs(core)?;
    for (i, &u) in bt.cut_vertices.iter().enumerate() {
        for &v in &bt.cut_vertices[i + 1..] {
            if core.has_edge(u, v) && ebo.contains(&(u.min(v), u.max(v))) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Verifies maximality before admitting a structured-generator output.
fn verify_and_push(g: Graph, out: &mut Vec<Graph>, seen: &mut HashSet<Vec<u8>>) -> Result<()> {
    if seen.insert(canonical_code(&g)) {
        if !is_maximal_bip_outerplanar(&g)? {
            return Err(Error::TheoremViolation(format!(
                "structured generator produced a non-maximal graph: {g:?}"
            )));
        }
        out.push(g);
    }
    Ok(())
}

fn distribute_pendants(
    core: &Graph,
    n: usize,
    out: &mut Vec<Graph>,
    seen: &mut HashSet<Vec<u8>>,
) -> Result<()> {
    let budget = n - core.n();
    if budget == 0 {
        verify_and_push(core.clone(), out, seen)?;
        return Ok(());
    }
    let bt = core.block_tree()?;
    let ebo = ebo_pairs(core)?;
    // roots must avoid boundary edges toward cut vertices
    let admissible: Vec<usize> = core
        .vertices()
        .filter(|&r| {
            bt.cut_vertices
                .iter()
                .all(|&c| c == r || !core.has_edge(r, c) || !ebo.contains(&(r.min(c), r.max(c))))
        })
        .collect();
    // choose root sets that are pairwise boundary-non-adjacent, then all
    // positive compositions of the pendant budget over the chosen roots
    #[allow(clippy::too_many_arguments)]
    fn choose(
        core: &Graph,
        ebo: &BTreeSet<(usize, usize)>,
        admissible: &[usize],
        idx: usize,
        chosen: &mut Vec<usize>,
        budget: usize,
        out: &mut Vec<Graph>,
        seen: &mut HashSet<Vec<u8>>,
    ) -> Result<()> {
        if !chosen.is_empty() && chosen.len() <= budget {
            assign(
                core,
                chosen,
                0,
                budget,
                &mut vec![0; chosen.len()],
                out,
                seen,
            )?;
        }
        if chosen.len() >= budget {
            return Ok(());
        }
        for i in idx..admissible.len() {
            let r = admissible[i];
            let compatible = chosen
                .iter()
                .all(|&r2| !core.has_edge(r, r2) || !ebo.contains(&(r.min(r2), r.max(r2))));
            if !compatible {
                continue;
            }
            chosen.push(r);
            choose(core, ebo, admissible, i + 1, chosen, budget, out, seen)?;
            chosen.pop();
        }
        Ok(())
    }
    fn assign(
        core: &Graph,
        roots: &[usize],
        idx: usize,
        remaining: usize,
        counts: &mut Vec<usize>,
        out: &mut Vec<Graph>,
        seen: &mut HashSet<Vec<u8>>,
    ) -> Result<()> {
        if idx == roots.len() {
            if remaining == 0 {
                let mut g = core.clone();
                for (i, &r) in roots.iter().enumerate() {
                    g = crate::constructions::attach_pendants(&g, r, counts[i])?;
                }
                verify_and_push(g, out, seen)?;
            }
            return Ok(());
        }
        // every chosen root receives at least one pendant
        let max_here = remaining - (roots.len() - idx - 1);
        for c in 1..=max_here {
            counts[idx] = c;
            assign(core, roots, idx + 1, remaining - c, counts, out, seen)?;
        }
        Ok(())
    }
    choose(
        core,
        &ebo,
        &admissible,
        0,
        &mut Vec::new(),
        budget,
        out,
        seen,
    )
}

// ---- censuses and scans ---------------------------------------------------------

/// Edge-count histogram with the structural bound check.
#[derive(Debug, Clone, Serialize)]
pub struct EdgeCensus {
    pub n: usize,
    pub family: EnumFamily,
    /// edge count -> number of classes
    pub histogram: BTreeMap<usize, usize>,
    pub max_m: usize,
    /// the family-wide edge bound for this order
    pub bound: usize,
    /// classes attaining the bound
    pub extremal_classes: usize,
    pub violations: usize,
}

/// The edge-count ceiling for bipartite outerplanar graphs of order `n`.
pub fn edge_bound(n: usize) -> usize {
    match n {
        1 => 0,
        2 => 1,
        _ if n.is_multiple_of(2) => 3 * n / 2 - 2,
        _ => (3 * n - 5) / 2,
    }
}

/// Counts classes per edge count and flags any graph exceeding the bound.
pub fn census_edge_counts(spec: &EnumSpec) -> Result<EdgeCensus> {
    if !matches!(
        spec.family,
        EnumFamily::BipartiteOuterplanar
            | EnumFamily::MaximalBipOuterplanar
            | EnumFamily::Maximal2ConnBipOuterplanar
    ) {
        return Err(Error::BadInput(
            "edge census requires a bipartite outerplanar family".into(),
        ));
    }
    let result = enumerate(spec)?;
    let bound = edge_bound(spec.n);
    let mut histogram = BTreeMap::new();
    let mut violations = 0;
    for g in &result.graphs {
        *histogram.entry(g.m()).or_insert(0) += 1;
        if g.m() > bound {
            violations += 1;
        }
    }
    let max_m = histogram.keys().max().copied().unwrap_or(0);
    let extremal_classes = histogram.get(&max_m).copied().unwrap_or(0);
    Ok(EdgeCensus {
        n: spec.n,
        family: spec.family,
        histogram,
        max_m,
        bound,
        extremal_classes,
        violations,
    })
}

/// Objective for an extremal scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    MaxRho,
    MinLambda,
}

/// Result of an extremal scan over one family and order.
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub family: EnumFamily,
    pub n: usize,
    pub objective: Objective,
    pub best_value: f64,
    /// All winners within comparison tolerance of the best value.
    pub winners: Vec<crate::io::GraphJson>,
    /// Whether the star of this order attains the optimum.
    pub star_attains: bool,
    /// Whether some winner is edge-most for this order.
    pub winner_edge_most: bool,
    /// Full ranked table (value, graph), best first; on request.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ranked: Option<Vec<(f64, crate::io::GraphJson)>>,
}

/// Scans the family for the extremal eigenvalue.
pub fn extremal_scan(spec: &EnumSpec, objective: Objective, ranked: bool) -> Result<ScanReport> {
    let result = enumerate(spec)?;
    let mut scored: Vec<(f64, &Graph)> = Vec::with_capacity(result.graphs.len());
    for g in &result.graphs {
        let value = match objective {
            Objective::MaxRho => spectra::spectral_radius(g)?.value,
            Objective::MinLambda => spectra::least_eigenvalue(g)?.value,
        };
        scored.push((value, g));
    }
    let best_value = match objective {
        Objective::MaxRho => scored
            .iter()
            .map(|(v, _)| *v)
            .fold(f64::NEG_INFINITY, f64::max),
        Objective::MinLambda => scored.iter().map(|(v, _)| *v).fold(f64::INFINITY, f64::min),
    };
    let winners: Vec<&Graph> = scored
        .iter()
        .filter(|(v, _)| (v - best_value).abs() <= crate::tol::COMPARE)
        .map(|(_, g)| *g)
        .collect();
    let star_code = canonical_code(&crate::constructions::star(spec.n));
    let star_attains = winners.iter().any(|g| canonical_code(g) == star_code);
    let winner_edge_most = winners.iter().any(|g| g.m() == edge_bound(spec.n));
    let mut table: Option<Vec<(f64, crate::io::GraphJson)>> = None;
    if ranked {
        let mut rows: Vec<(f64, crate::io::GraphJson)> = scored
            .iter()
            .map(|(v, g)| (*v, crate::io::GraphJson::from_graph(g)))
            .collect();
        rows.sort_by(|a, b| match objective {
            Objective::MaxRho => b.0.partial_cmp(&a.0).expect("finite"),
            Objective::MinLambda => a.0.partial_cmp(&b.0).expect("finite"),
        });
        table = Some(rows);
    }
    Ok(ScanReport {
        family: spec.family,
        n: spec.n,
        objective,
        best_value,
        winners: winners
            .iter()
            .map(|g| crate::io::GraphJson::from_graph(g))
            .collect(),
        star_attains,
        winner_edge_most,
        ranked: table,
    })
}
