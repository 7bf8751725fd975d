//! Outerplane embeddings of 2-connected outerplanar graphs.
//!
//! The outer boundary of such an embedding is a Hamilton cycle, and it is
//! the *only* Hamilton cycle of the graph: any chord separates the
//! polygon into two nonempty sides that a cycle through the chord could
//! only reach through the chord's endpoints. This uniqueness is what
//! makes the embedding canonical and lets `embed` certify outerplanarity
//! of a 2-connected graph by inspecting at most two Hamilton cycles:
//! finding a second one already refutes outerplanarity.

use crate::graph::Graph;
use crate::{Error, Result};

/// An outerplane embedding: Hamilton boundary plus non-crossing chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpEmbedding {
    /// The outer cycle, normalized to start at vertex `outer[0] = min`
    /// with `outer[1] < outer[n-1]`.
    outer: Vec<usize>,
    /// Edges not on the outer cycle, as vertex pairs `(u, v)`, `u < v`.
    chords: Vec<(usize, usize)>,
    /// Inner face boundaries as vertex cycles.
    faces: Vec<Vec<usize>>,
}

impl OpEmbedding {
    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    /// Inner face boundaries; the outer face is not listed. Callers that
    /// need the total face count add 1 at the interface — keeping inner
    /// faces only here avoids an off-by-one against the usual convention
    /// in which the face count includes the unbounded face.
    pub fn inner_faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn n(&self) -> usize {
        self.outer.len()
    }

    pub fn m(&self) -> usize {
        self.outer.len() + self.chords.len()
    }

    /// True iff every inner face boundary has length 4.
    pub fn all_faces_quad(&self) -> bool {
        self.faces.iter().all(|f| f.len() == 4)
    }

    /// Euler check `n + f − m = 2`, where `f` counts inner faces plus the
    /// outer face. Hard invariant of every constructed embedding.
    pub fn euler_check(&self) -> bool {
        self.n() + (self.faces.len() + 1) == self.m() + 2
    }

    /// True iff edge `uv` lies on the outer boundary.
    pub fn on_outer(&self, u: usize, v: usize) -> bool {
        let n = self.outer.len();
        (0..n).any(|i| {
            let (a, b) = (self.outer[i], self.outer[(i + 1) % n]);
            (a, b) == (u, v) || (a, b) == (v, u)
        })
    }
}

/// Computes the outerplane embedding of a 2-connected outerplanar graph
/// (`n >= 3`). Rejection names the failed property.
pub fn embed(g: &Graph) -> Result<OpEmbedding> {
    if g.n() < 3 || !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    if g.m() > 2 * g.n() - 3 {
        return Err(Error::NotOuterplanar("edge count exceeds 2n-3"));
    }
    let mut cycles = hamilton_cycles(g, 2);
    match cycles.len() {
        0 => Err(Error::NotOuterplanar("no hamilton cycle")),
        1 => {
            let outer = cycles.pop().expect("one cycle");
            build_from_cycle(g, outer)
        }
        _ => Err(Error::NotOuterplanar("hamilton cycle not unique")),
    }
}

fn build_from_cycle(g: &Graph, outer: Vec<usize>) -> Result<OpEmbedding> {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in outer.iter().enumerate() {
        pos[v] = i;
    }
    let mut chord_pos: Vec<(usize, usize)> = Vec::new();
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for (u, v) in g.edges() {
        let (a, b) = order(pos[u], pos[v]);
        if b - a == 1 || (a == 0 && b == n - 1) {
            continue; // cycle edge
        }
        chord_pos.push((a, b));
        chords.push(order(u, v));
    }
    for i in 0..chord_pos.len() {
        for j in i + 1..chord_pos.len() {
            if crossing(chord_pos[i], chord_pos[j]) {
                return Err(Error::NotOuterplanar("crossing chords"));
            }
        }
    }
    let faces_pos = faces_by_interval(n, &chord_pos);
    let faces = faces_pos
        .into_iter()
        .map(|f| f.into_iter().map(|p| outer[p]).collect())
        .collect();
    chords.sort_unstable();
    let e = OpEmbedding {
        outer,
        chords,
        faces,
    };
    debug_assert!(e.euler_check());
    debug_assert_eq!(
        e.inner_faces().iter().map(|f| f.len()).sum::<usize>(),
        2 * e.m() - e.n()
    );
    Ok(e)
}

fn order(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Two chords with `a < b` cross iff their endpoints interleave strictly.
fn crossing((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Faces of the polygon-with-chords by interval recursion: each chord
/// `(a, b)` opens a sub-interval; the face alongside an interval's
/// closing edge is traced by walking the interval and shortcutting along
/// maximal chords.
fn faces_by_interval(n: usize, chords: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut faces = Vec::with_capacity(chords.len() + 1);
    // chords starting at each position, longest first
    let mut starts: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sorted: Vec<(usize, usize)> = chords.to_vec();
    sorted.sort_unstable_by_key(|x| (x.0, std::cmp::Reverse(x.1)));
    for &(a, b) in &sorted {
        starts[a].push(b);
    }
    trace(0, n - 1, &starts, &mut faces);
    faces
}

fn trace(lo: usize, hi: usize, starts: &[Vec<usize>], faces: &mut Vec<Vec<usize>>) {
    let mut face = vec![lo];
    let mut cur = lo;
    while cur < hi {
        // longest chord from cur staying inside (lo, hi); the boundary
        // chord (lo, hi) itself is skipped
        let jump = starts[cur]
            .iter()
            .copied()
            .find(|&b| b <= hi && !(cur == lo && b == hi));
        match jump {
            Some(b) => {
                trace(cur, b, starts, faces);
                face.push(b);
                cur = b;
            }
            None => {
                face.push(cur + 1);
                cur += 1;
            }
        }
    }
    faces.push(face);
}

/// Enumerates Hamilton cycles up to rotation and reflection, stopping
/// after `limit` are found. Cycles start at vertex 0 with the smaller
/// neighbor second.
pub fn hamilton_cycles(g: &Graph, limit: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    if n < 3 || limit == 0 {
        return out;
    }
    let mut path = vec![0usize];
    let mut used = 1u64;
    dfs_hamilton(g, n, &mut path, &mut used, limit, &mut out);
    out
}

fn dfs_hamilton(
    g: &Graph,
    n: usize,
    path: &mut Vec<usize>,
    used: &mut u64,
    limit: usize,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    if out.len() >= limit {
        return true;
    }
    if path.len() == n {
        let last = *path.last().expect("nonempty");
        if g.has_edge(last, 0) && path[1] < last {
            out.push(path.clone());
            return out.len() >= limit;
        }
        return false;
    }
    let cur = *path.last().expect("nonempty");
    for v in g.neighbors(cur) {
        if *used >> v & 1 == 1 {
            continue;
        }
        path.push(v);
        *used |= 1 << v;
        let done = dfs_hamilton(g, n, path, used, limit, out);
        path.pop();
        *used &= !(1u64 << v);
        if done {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, Graph};

    #[test]
    fn c4_embedding() {
        let e = embed(&cycle(4)).unwrap();
        assert_eq!(e.outer(), &[0, 1, 2, 3]);
        assert!(e.chords().is_empty());
        assert_eq!(e.inner_faces(), &[vec![0, 1, 2, 3]]);
        assert!(e.all_faces_quad());
        assert!(e.euler_check()); // 4 + 2 - 4 = 2
    }

    #[test]
    fn ladder_embedding() {
        // two squares sharing an edge: the 2-sum of two 4-cycles
        let g = cycle(4).k_sum(&cycle(4), &[0, 1], &[0, 1]).unwrap();
        let e = embed(&g).unwrap();
        assert_eq!(e.chords().len(), 1);
        assert_eq!(e.inner_faces().len(), 2);
        assert!(e.all_faces_quad());
        assert!(e.euler_check()); // 6 + 3 - 7 = 2
    }

    #[test]
    fn k4_rejected() {
        assert!(matches!(
            embed(&crate::graph::complete(4)),
            Err(Error::NotOuterplanar(_))
        ));
    }

    #[test]
    fn non_two_connected_rejected() {
        assert!(matches!(
            embed(&crate::graph::path(4)),
            Err(Error::NotTwoConnected)
        ));
    }

    #[test]
    fn octagon_with_chord_faces() {
        let mut edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.push((0, 3));
        let g = Graph::from_edges(8, &edges).unwrap();
        let e = embed(&g).unwrap();
        let mut lens: Vec<usize> = e.inner_faces().iter().map(|f| f.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![4, 6]);
        assert!(!e.all_faces_quad());
    }

    #[test]
    fn hexagon_no_chord_is_single_face() {
        let e = embed(&cycle(6)).unwrap();
        assert_eq!(e.inner_faces().len(), 1);
        assert!(!e.all_faces_quad());
    }

    #[test]
    fn three_square_ladder_all_quads() {
        // 8-gon dissected by the two straight chords
        let g = crate::constructions::quadrangulation(8, &[(1, 6), (2, 5)]).unwrap();
        let e = embed(&g).unwrap();
        assert_eq!(e.inner_faces().len(), 3);
        assert!(e.all_faces_quad());
    }

    #[test]
    fn hamilton_unique_on_outerplanar_blocks() {
        for g in [
            cycle(5),
            cycle(8),
            crate::constructions::quad_book(2).unwrap(),
        ] {
            assert_eq!(hamilton_cycles(&g, usize::MAX).len(), 1);
        }
        // K4 has multiple Hamilton cycles
        assert!(hamilton_cycles(&crate::graph::complete(4), usize::MAX).len() > 1);
    }

    #[test]
    fn face_lengths_sum_identity() {
        // Σ inner face lengths = 2m − n
        for g in [
            cycle(6),
            crate::constructions::quadrangulation(10, &[(1, 8), (2, 7), (3, 6)]).unwrap(),
        ] {
            let e = embed(&g).unwrap();
            let total: usize = e.inner_faces().iter().map(|f| f.len()).sum();
            assert_eq!(total, 2 * e.m() - e.n());
        }
    }

    /// Independent face oracle: place the boundary on a circle, order
    /// each vertex's incident edges by angle, and trace the faces with
    /// the next-edge-counterclockwise rule of the rotation system. The
    /// walk with negative signed area is the outer face.
    fn faces_by_rotation_walk(e: &OpEmbedding) -> Vec<Vec<usize>> {
        let n = e.n();
        let mut pos = vec![0usize; n];
        for (i, &v) in e.outer().iter().enumerate() {
            pos[v] = i;
        }
        let coord = |v: usize| {
            let a = 2.0 * std::f64::consts::PI * pos[v] as f64 / n as f64;
            (a.cos(), a.sin())
        };
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            edges.push((e.outer()[i], e.outer()[(i + 1) % n]));
        }
        edges.extend_from_slice(e.chords());
        // rotation: neighbors ordered by direction angle
        let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &edges {
            rot[u].push(v);
            rot[v].push(u);
        }
        for v in 0..n {
            let (xv, yv) = coord(v);
            rot[v].sort_by(|&a, &b| {
                let (xa, ya) = coord(a);
                let (xb, yb) = coord(b);
                (ya - yv)
                    .atan2(xa - xv)
                    .partial_cmp(&(yb - yv).atan2(xb - xv))
                    .expect("finite angles")
            });
        }
        // trace directed edges: after arriving u -> v, leave along the
        // neighbor of v that precedes u in the rotation at v
        let mut seen: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
        let mut faces = Vec::new();
        for &(a, b) in &edges {
            for (mut u, mut v) in [(a, b), (b, a)] {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let start = (u, v);
                loop {
                    seen.insert((u, v));
                    face.push(u);
                    let idx = rot[v].iter().position(|&w| w == u).expect("edge in rotation");
                    let w = rot[v][(idx + rot[v].len() - 1) % rot[v].len()];
                    u = v;
                    v = w;
                    if (u, v) == start {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        // drop the outer face: negative signed area
        faces.retain(|f| {
            let area: f64 = (0..f.len())
                .map(|i| {
                    let (x1, y1) = coord(f[i]);
                    let (x2, y2) = coord(f[(i + 1) % f.len()]);
                    x1 * y2 - x2 * y1
                })
                .sum();
            area > 0.0
        });
        faces
    }

    #[test]
    fn faces_match_rotation_system_oracle() {
        let mut rng = crate::rng::SplitMix64::new(0xface);
        let mut checked = 0;
        while checked < 120 {
            let n = 4 + rng.below(11); // 4..=14
            let mut chords = Vec::new();
            for a in 0..n {
                for b in a + 2..n {
                    if !(a == 0 && b == n - 1) && rng.chance(1, 4) {
                        chords.push((a, b));
                    }
                }
            }
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend_from_slice(&chords);
            let g = Graph::from_edges(n, &edges).unwrap();
            let Ok(e) = embed(&g) else { continue };
            let mut mine: Vec<Vec<usize>> = e.inner_faces().to_vec();
            let mut oracle = faces_by_rotation_walk(&e);
            let normalize = |f: &mut Vec<usize>| {
                // rotate to the minimum vertex, then fix direction
                let k = f.iter().enumerate().min_by_key(|(_, &v)| v).expect("nonempty").0;
                f.rotate_left(k);
                if f.len() > 2 && f[1] > f[f.len() - 1] {
                    f[1..].reverse();
                }
            };
            mine.iter_mut().for_each(&normalize);
            oracle.iter_mut().for_each(&normalize);
            mine.sort();
            oracle.sort();
            assert_eq!(mine, oracle, "face mismatch on {g:?}");
            checked += 1;
        }
    }
}
