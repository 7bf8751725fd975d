//! Simple undirected graphs on at most 64 vertices.
//!
//! One machine word per adjacency row: `adj[v]` is the neighbor bitset of
//! `v`. All the graph families treated here fit comfortably (the largest
//! order any sweep needs is 64), and bitset rows make neighborhood
//! intersection, degree and connectivity checks branch-free.

use crate::{Error, Result};

/// Hard vertex capacity: one `u64` bitset per adjacency row.
pub const MAX_N: usize = 64;

/// A simple undirected graph with `1 <= n <= 64` vertices.
///
/// Invariants (enforced by every constructor and mutator):
/// * no loops: `adj[v]` never contains bit `v`;
/// * symmetry: `u ∈ adj[v]` iff `v ∈ adj[u]`;
/// * no bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph of the given order.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_N {
            return Err(Error::OrderOutOfRange { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Graph with exactly the given edges; duplicate pairs collapse, loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::LoopEdge { v });
        }
        Ok(())
    }

    /// Symmetry and loop-freeness; cheap enough to assert after mutations.
    pub fn check_invariants(&self) -> bool {
        let mask = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        for v in 0..self.n {
            if self.adj[v] & !mask != 0 || self.adj[v] >> v & 1 != 0 {
                return false;
            }
            let mut nb = self.adj[v];
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if self.adj[u] >> v & 1 == 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count `m = ½·Σ_v popcount(adj[v])`.
    pub fn m(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbor bitset of `v`.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> BitIter {
        BitIter(self.adj[v])
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            // neighbors above u only, so each edge is listed once
            let mut nb = self.adj[u] & !((1u64 << u) | (1u64 << u).wrapping_sub(1));
            while nb != 0 {
                let v = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Non-edges as sorted pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent { u, v });
        }
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NonEdge { u, v });
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut nb = self.adj[u];
            while nb != 0 {
                let v = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        let g = Graph { n: self.n, adj };
        debug_assert!(g.check_invariants());
        g
    }

    /// Induced subgraph on `verts` (in the given order; relabeled 0..k-1).
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let k = verts.len();
        assert!(k >= 1);
        let mut adj = vec![0u64; k];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i != j && self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph { n: k, adj }
    }

    /// Appends an isolated vertex, returning its index.
    pub fn with_vertex(&self) -> Result<(Graph, usize)> {
        if self.n + 1 > MAX_N {
            return Err(Error::CapacityExceeded {
                requested: self.n + 1,
            });
        }
        let mut adj = self.adj.clone();
        adj.push(0);
        Ok((Graph { n: self.n + 1, adj }, self.n))
    }

    // ---- connectivity -----------------------------------------------------

    /// Bitset of vertices reachable from `start`.
    pub fn reachable(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        let all = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        self.reachable(0) == all
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut remaining = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let comp = self.reachable(start) & remaining;
            out.push(BitIter(comp).collect());
            remaining &= !comp;
        }
        out
    }

    /// True iff `n >= 3`, connected, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3
            && self.is_connected()
            && self
                .block_tree()
                .map(|bt| bt.cut_vertices.is_empty())
                .unwrap_or(false)
    }

    /// Proper 2-coloring if the graph has no odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        stack.push(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(Bipartition { side })
    }

    /// Block / cut-vertex decomposition (DFS low-point).
    ///
    /// Rejects disconnected input. Each block is a maximal 2-connected
    /// subgraph or a bridge edge, reported as a sorted vertex list; every
    /// edge of the graph lies in exactly one block.
    pub fn block_tree(&self) -> Result<BlockTree> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.n == 1 {
            return Ok(BlockTree {
                blocks: vec![vec![0]],
                cut_vertices: vec![],
                incidence: vec![vec![]],
            });
        }
        let n = self.n;
        let mut num = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut counter = 0usize;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut is_cut = vec![false; n];

        // Iterative DFS; 64 vertices would tolerate recursion, but the
        // iterative form sidesteps borrow gymnastics.
        enum Frame {
            Visit(usize),
            Post(usize, usize), // child, parent
        }
        let root = 0usize;
        let mut stack = vec![Frame::Visit(root)];
        let mut root_children = 0usize;
        let mut iter_state: Vec<u64> = vec![0; n]; // neighbors already handled

        while let Some(frame) = stack.pop() {
            match frame {
                Frame::Visit(v) => {
                    if num[v] == usize::MAX {
                        num[v] = counter;
                        low[v] = counter;
                        counter += 1;
                        iter_state[v] = 0;
                    }
                    // find next unhandled neighbor
                    let pending = self.adj[v] & !iter_state[v];
                    if pending != 0 {
                        let u = pending.trailing_zeros() as usize;
                        iter_state[v] |= 1 << u;
                        stack.push(Frame::Visit(v));
                        if num[u] == usize::MAX {
                            parent[u] = v;
                            if v == root {
                                root_children += 1;
                            }
                            edge_stack.push((v, u));
                            stack.push(Frame::Post(u, v));
                            stack.push(Frame::Visit(u));
                        } else if u != parent[v] && num[u] < num[v] {
                            edge_stack.push((v, u));
                            low[v] = low[v].min(num[u]);
                        }
                    }
                }
                Frame::Post(u, v) => {
                    low[v] = low[v].min(low[u]);
                    if low[u] >= num[v] {
                        // v separates u's subtree: pop the block
                        let mut verts = 0u64;
                        while let Some(&(a, b)) = edge_stack.last() {
                            if num[a] >= num[u] {
                                verts |= (1 << a) | (1 << b);
                                edge_stack.pop();
                            } else {
                                break;
                            }
                        }
                        // the block also contains the tree edge (v, u)
                        if let Some(&(a, b)) = edge_stack.last() {
                            if (a, b) == (v, u) {
                                edge_stack.pop();
                                verts |= (1 << a) | (1 << b);
                            }
                        }
                        verts |= (1 << v) | (1 << u);
                        blocks.push(BitIter(verts).collect());
                        if v != root {
                            is_cut[v] = true;
                        }
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }

        let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
        let incidence = blocks
            .iter()
            .map(|b| b.iter().copied().filter(|&v| is_cut[v]).collect())
            .collect();
        Ok(BlockTree {
            blocks,
            cut_vertices,
            incidence,
        })
    }

    // ---- k-sum ------------------------------------------------------------

    /// Glues `other` onto `self` by identifying the k-clique `joint_self`
    /// with the k-clique `joint_other` (pointwise, in order). No edges are
    /// ever deleted; deletion stays expressible through `without_edge`.
    pub fn k_sum(
        &self,
        other: &Graph,
        joint_self: &[usize],
        joint_other: &[usize],
    ) -> Result<Graph> {
        let k = joint_self.len();
        if k != joint_other.len() {
            return Err(Error::BadJoint(format!(
                "joint sizes differ: {k} vs {}",
                joint_other.len()
            )));
        }
        for (g, joint) in [(self, joint_self), (other, joint_other)] {
            for (i, &u) in joint.iter().enumerate() {
                if u >= g.n() {
                    return Err(Error::VertexOutOfRange { v: u, n: g.n() });
                }
                for &v in &joint[i + 1..] {
                    if u == v || !g.has_edge(u, v) {
                        return Err(Error::BadJoint(format!(
                            "joint vertices {u},{v} are not a clique"
                        )));
                    }
                }
            }
        }
        let n_new = self.n + other.n - k;
        if n_new > MAX_N {
            return Err(Error::CapacityExceeded { requested: n_new });
        }
        // map other's vertices: joint -> joint_self, rest -> fresh indices
        let mut map = vec![usize::MAX; other.n];
        for (i, &v) in joint_other.iter().enumerate() {
            if map[v] != usize::MAX {
                return Err(Error::BadJoint(format!("repeated joint vertex {v}")));
            }
            map[v] = joint_self[i];
        }
        let mut fresh = self.n;
        #[allow(clippy::needless_range_loop)]
        for v in 0..other.n {
            if map[v] == usize::MAX {
                map[v] = fresh;
                fresh += 1;
            }
        }
        let mut adj = self.adj.clone();
        adj.resize(n_new, 0);
        for (u, v) in other.edges() {
            let (a, b) = (map[u], map[v]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let g = Graph { n: n_new, adj };
        debug_assert!(g.check_invariants());
        Ok(g)
    }
}

/// Iterator over the set bits of a `u64`.
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Result of the block / cut-vertex decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTree {
    /// Sorted vertex list per block.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted cut vertices; a vertex is one iff it lies in >= 2 blocks.
    pub cut_vertices: Vec<usize>,
    /// For each block, the cut vertices it contains.
    pub incidence: Vec<Vec<usize>>,
}

/// A proper 2-coloring; every edge joins side 0 to side 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<u8>,
}

impl Bipartition {
    pub fn side_of(&self, v: usize) -> u8 {
        self.side[v]
    }

    /// Vertices on the requested side, sorted.
    pub fn class(&self, s: u8) -> Vec<usize> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == s)
            .collect()
    }
}

// ---- convenience constructors used throughout the tests --------------------

/// Cycle `0-1-...-(n-1)-0`.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycle")
}

/// Path `0-1-...-(n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).expect("path")
}

/// Complete graph.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete")
}

/// Complete bipartite graph with parts `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..s {
        for v in 0..t {
            edges.push((u, s + v));
        }
    }
    Graph::from_edges(s + t, &edges).expect("complete bipartite")
}
