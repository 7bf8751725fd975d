//! Canonical codes for isomorphism rejection.
//!
//! Two regimes:
//!
//! * `n <= 12`: exact. The code is the lexicographically minimal
//!   upper-triangle bit string over all relabelings compatible with an
//!   iterated degree/neighbor-degree refinement. Equal codes iff
//!   isomorphic.
//! * `n > 12`: an invariant fingerprint (order, sorted degree sequence,
//!   adjacency spectrum quantized at 1e-6). Equal fingerprints are
//!   *strong evidence* of isomorphism, not proof; callers that rely on
//!   exactness must stay within the exact regime. Enumeration only needs
//!   exactness at small orders, so this caveat is acceptable.

use crate::graph::Graph;

/// Largest order for which `canonical_code` is exact.
pub const EXACT_LIMIT: usize = 12;

/// Canonical byte code; see the module docs for the exactness contract.
pub fn canonical_code(g: &Graph) -> Vec<u8> {
    if g.n() <= EXACT_LIMIT {
        let mut out = vec![0u8, g.n() as u8];
        let code = exact_code(g);
        out.extend_from_slice(&code.to_be_bytes());
        out
    } else {
        fingerprint(g)
    }
}

/// Invariant fingerprint for graphs beyond the exact regime.
pub fn fingerprint(g: &Graph) -> Vec<u8> {
    let mut out = vec![0xffu8, g.n() as u8];
    let mut degs: Vec<u8> = g.vertices().map(|v| g.degree(v) as u8).collect();
    degs.sort_unstable();
    out.extend_from_slice(&degs);
    let eig = crate::spectra::all_eigenvalues(g).expect("jacobi converges at n <= 64");
    for &lam in &eig {
        let q = (lam * 1e6).round() as i64;
        out.extend_from_slice(&q.to_be_bytes());
    }
    out
}

/// True iff the two graphs are isomorphic; exact for `n <= 12`.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && canonical_code(a) == canonical_code(b)
}

// ---- exact path -------------------------------------------------------------

/// Iterated refinement: the color of a vertex is the rank of
/// `(old color, sorted neighbor colors)` among all such signatures.
/// Signatures are label-independent, so isomorphic graphs refine to the
/// same color multiset with matching class order.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<usize> = g.neighbors(v).map(|u| color[u]).collect();
            nb.sort_unstable();
            sigs.push((color[v], nb));
        }
        let mut uniq: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| uniq.binary_search(&s).expect("own signature"))
            .collect();
        if next == color {
            return color;
        }
        color = next;
    }
}

/// Minimal upper-triangle bit string (read column-by-column) over all
/// color-respecting relabelings, found by DFS with prefix pruning.
/// Fits in a u128 (12·11/2 = 66 bits).
fn exact_code(g: &Graph) -> u128 {
    let n = g.n();
    let color = refine_colors(g);
    // position p must take a vertex whose color equals slot_color[p]
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (color[v], v));
    let slot_color: Vec<usize> = order.iter().map(|&v| color[v]).collect();

    struct Dfs<'a> {
        g: &'a Graph,
        color: &'a [usize],
        slot_color: &'a [usize],
        n: usize,
        best: Option<u128>,
        perm: Vec<usize>,
        used: u64,
    }

    impl Dfs<'_> {
        fn run(&mut self, p: usize, prefix: u128, bits_len: u32) {
            if p == self.n {
                if self.best.map(|b| prefix < b).unwrap_or(true) {
                    self.best = Some(prefix);
                }
                return;
            }
            for v in 0..self.n {
                if self.used >> v & 1 == 1 || self.color[v] != self.slot_color[p] {
                    continue;
                }
                // bits for column p: adjacency to positions 0..p
                let mut col = 0u128;
                for q in 0..p {
                    col = (col << 1) | u128::from(self.g.has_edge(self.perm[q], v));
                }
                let cand = (prefix << p) | col;
                let cand_len = bits_len + p as u32;
                if let Some(best) = self.best {
                    // compare prefixes at equal length
                    let total = (self.n * (self.n - 1) / 2) as u32;
                    let best_prefix = best >> (total - cand_len);
                    if cand > best_prefix {
                        continue;
                    }
                }
                self.used |= 1 << v;
                self.perm.push(v);
                self.run(p + 1, cand, cand_len);
                self.perm.pop();
                self.used &= !(1u64 << v);
            }
        }
    }

    if n == 1 {
        return 0;
    }
    let mut dfs = Dfs {
        g,
        color: &color,
        slot_color: &slot_color,
        n,
        best: None,
        perm: Vec::with_capacity(n),
        used: 0,
    };
    dfs.run(0, 0, 0);
    dfs.best.expect("at least one relabeling")
}
