//! Eigenvalue machinery for adjacency matrices of graphs on <= 64
//! vertices: full spectra by cyclic Jacobi rotations, Perron pairs by
//! shifted power iteration, walk-count row sums, polynomial bound
//! certificates, and the closed-form bounds for the named families.

use crate::graph::{BitIter, Graph};
use crate::recognition;
use crate::{tol, Error, Result};
use serde::Serialize;

/// One extremal eigenpair.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralResult {
    pub value: f64,
    pub vector: Vec<f64>,
    /// `‖Ax − value·x‖∞` for the returned pair.
    pub residual: f64,
    pub iterations: usize,
    /// Set when the input was disconnected and the value is a
    /// per-component extremum.
    pub disconnected: bool,
}

fn adjacency(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut a = vec![vec![0.0; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    a
}

#[allow(clippy::needless_range_loop)] // indexed form mirrors the linear algebra
fn matvec(g: &Graph, x: &[f64], out: &mut [f64]) {
    for v in 0..g.n() {
        let mut acc = 0.0;
        for u in BitIter(g.row(v)) {
            acc += x[u];
        }
        out[v] = acc;
    }
}

fn residual_inf(g: &Graph, x: &[f64], lambda: f64) -> f64 {
    let mut ax = vec![0.0; g.n()];
    matvec(g, x, &mut ax);
    ax.iter()
        .zip(x)
        .map(|(a, xi)| (a - lambda * xi).abs())
        .fold(0.0, f64::max)
}

// ---- full spectrum ----------------------------------------------------------

/// All adjacency eigenvalues, ascending. The decomposition is verified by
/// reconstruction: `‖A − QΛQᵀ‖∞ <= 1e-9` or the solver reports failure.
pub fn all_eigenvalues(g: &Graph) -> Result<Vec<f64>> {
    Ok(eigen_decomposition(g)?.0)
}

/// Eigenvalues (ascending) with matching eigenvectors as rows of the
/// second component.
pub fn eigen_decomposition(g: &Graph) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = g.n();
    let mut a = adjacency(g);
    let mut q = vec![vec![0.0; n]; n];
    for (i, row) in q.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    jacobi(&mut a, &mut q)?;
    // reconstruction residual against the original adjacency matrix
    let orig = adjacency(g);
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0.0;
            for k in 0..n {
                acc += q[i][k] * a[k][k] * q[j][k];
            }
            worst = worst.max((acc - orig[i][j]).abs());
        }
    }
    if worst > tol::RESIDUAL {
        return Err(Error::SolverDiverged { residual: worst });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).expect("finite"));
    let values: Vec<f64> = order.iter().map(|&i| a[i][i]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&k| (0..n).map(|i| q[i][k]).collect())
        .collect();
    Ok((values, vectors))
}

/// Cyclic Jacobi sweeps; `a` is diagonalized in place, rotations
/// accumulate into `q` (columns become eigenvectors).
#[allow(clippy::needless_range_loop)] // indexed form mirrors the rotation formulas
fn jacobi(a: &mut [Vec<f64>], q: &mut [Vec<f64>]) -> Result<()> {
    let n = a.len();
    if n == 1 {
        return Ok(());
    }
    const MAX_SWEEPS: usize = 100;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for r in p + 1..n {
                off += a[p][r] * a[p][r];
            }
        }
        if off.sqrt() < 1e-13 {
            return Ok(());
        }
        for p in 0..n - 1 {
            for r in p + 1..n {
                if a[p][r].abs() < 1e-15 {
                    continue;
                }
                let theta = (a[r][r] - a[p][p]) / (2.0 * a[p][r]);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // A <- Jᵀ A J on rows/cols p, r
                for k in 0..n {
                    let (akp, akr) = (a[k][p], a[k][r]);
                    a[k][p] = c * akp - s * akr;
                    a[k][r] = s * akp + c * akr;
                }
                for k in 0..n {
                    let (apk, ark) = (a[p][k], a[r][k]);
                    a[p][k] = c * apk - s * ark;
                    a[r][k] = s * apk + c * ark;
                }
                for k in 0..n {
                    let (qkp, qkr) = (q[k][p], q[k][r]);
                    q[k][p] = c * qkp - s * qkr;
                    q[k][r] = s * qkp + c * qkr;
                }
            }
        }
    }
    Err(Error::SolverDiverged { residual: f64::NAN })
}

// ---- Perron pair ------------------------------------------------------------

/// Spectral radius with the principal eigenvector.
///
/// Connected input gets the unique positive unit eigenvector. A
/// disconnected graph is handled per component (max over components) and
/// flagged, since the Perron contract only holds component-wise.
pub fn spectral_radius(g: &Graph) -> Result<SpectralResult> {
    let comps = g.components();
    if comps.len() == 1 {
        return perron_connected(g);
    }
    let mut best: Option<(usize, SpectralResult)> = None;
    for (ci, comp) in comps.iter().enumerate() {
        let sub = g.induced(comp);
        let r = perron_connected(&sub)?;
        if best
            .as_ref()
            .map(|(_, b)| r.value > b.value)
            .unwrap_or(true)
        {
            best = Some((ci, r));
        }
    }
    let (ci, sub_res) = best.expect("at least one component");
    let mut vector = vec![0.0; g.n()];
    for (i, &v) in comps[ci].iter().enumerate() {
        vector[v] = sub_res.vector[i];
    }
    Ok(SpectralResult {
        value: sub_res.value,
        vector,
        residual: sub_res.residual,
        iterations: sub_res.iterations,
        disconnected: true,
    })
}

/// Power iteration on `A + I`. The shift defeats the `±ρ` period-two
/// oscillation of bipartite graphs; for a connected graph `ρ(A) + 1` is
/// then the unique dominant eigenvalue with a positive eigenvector.
fn perron_connected(g: &Graph) -> Result<SpectralResult> {
    let n = g.n();
    if n == 1 {
        return Ok(SpectralResult {
            value: 0.0,
            vector: vec![1.0],
            residual: 0.0,
            iterations: 0,
            disconnected: false,
        });
    }
    let mut x = vec![(n as f64).sqrt().recip(); n];
    let mut ax = vec![0.0; n];
    const MAX_ITERS: usize = 400_000;
    let mut iterations = 0;
    loop {
        iterations += 1;
        matvec(g, &x, &mut ax);
        let rho: f64 = x.iter().zip(&ax).map(|(xi, ai)| xi * ai).sum();
        let res = ax
            .iter()
            .zip(&x)
            .map(|(a, xi)| (a - rho * xi).abs())
            .fold(0.0, f64::max);
        if res <= tol::RESIDUAL * 0.1 || iterations >= MAX_ITERS {
            if res > tol::RESIDUAL {
                // stubborn spectral gap: fall back to the dense solver
                return perron_by_jacobi(g);
            }
            let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            let vector: Vec<f64> = x.iter().map(|v| v / norm).collect();
            return Ok(SpectralResult {
                value: rho,
                vector,
                residual: res,
                iterations,
                disconnected: false,
            });
        }
        // next iterate: (A + I) x, normalized
        let mut norm = 0.0;
        for i in 0..n {
            ax[i] += x[i];
            norm += ax[i] * ax[i];
        }
        let norm = norm.sqrt();
        for i in 0..n {
            x[i] = ax[i] / norm;
        }
    }
}

fn perron_by_jacobi(g: &Graph) -> Result<SpectralResult> {
    let (values, vectors) = eigen_decomposition(g)?;
    let k = values.len() - 1;
    let mut vec = vectors[k].clone();
    let sum: f64 = vec.iter().sum();
    if sum < 0.0 {
        for v in vec.iter_mut() {
            *v = -*v;
        }
    }
    let res = residual_inf(g, &vec, values[k]);
    Ok(SpectralResult {
        value: values[k],
        vector: vec,
        residual: res,
        iterations: 0,
        disconnected: false,
    })
}

/// Least adjacency eigenvalue with eigenvector (dense solve).
pub fn least_eigenvalue(g: &Graph) -> Result<SpectralResult> {
    let (values, vectors) = eigen_decomposition(g)?;
    let vec = vectors[0].clone();
    let res = residual_inf(g, &vec, values[0]);
    Ok(SpectralResult {
        value: values[0],
        vector: vec,
        residual: res,
        iterations: 0,
        disconnected: !g.is_connected(),
    })
}

/// Checks the strict growth of the spectral radius under edge addition.
/// `false` would mean either a broken solver or a broken theorem, so
/// callers escalate it.
pub fn monotonicity_check(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.has_edge(u, v) {
        return Err(Error::EdgePresent { u, v });
    }
    let before = spectral_radius(g)?.value;
    let after = spectral_radius(&g.with_edge(u, v)?)?.value;
    Ok(after > before + tol::STRICT_MARGIN)
}

// ---- row sums ---------------------------------------------------------------

/// Walk counts `S_v(A^k)` for `k <= 3` plus the four inequalities they
/// satisfy on maximal 2-connected bipartite outerplanar graphs.
#[derive(Debug, Clone, Serialize)]
pub struct RowSumReport {
    /// `S_v(A)` = degree of `v`.
    pub s1: Vec<u64>,
    /// `S_v(A²)` = walks of length 2 from `v`.
    pub s2: Vec<u64>,
    /// `S_v(A³)` = walks of length 3 from `v`.
    pub s3: Vec<u64>,
    /// Per-item verdicts; only present when the input is certified
    /// maximal 2-connected bipartite outerplanar.
    pub items: Option<RowSumChecks>,
}

/// Outcome of the four row-sum inequalities, per vertex.
#[derive(Debug, Clone, Serialize)]
pub struct RowSumChecks {
    /// (1) `2·S_v(A) <= n`
    pub item1: Vec<bool>,
    /// (2) `2·S_v(A²) <= n + 4·S_v(A) − 4` and `2·S_v(A²) <= 3n − 4`
    pub item2: Vec<bool>,
    /// (3) `S_v(A²) + S_w(A) <= n + S_v(A)` and `2(n + S_v(A)) <= 3n`
    /// for both boundary neighbors `w` of `v`
    pub item3: Vec<bool>,
    /// (4) `S_v(A³) <= S_v(A)² + 3·S_v(A) + 3n/2 − 6`
    pub item4: Vec<bool>,
    pub all_pass: bool,
}

/// Row sums by repeated adjacency application to the all-ones vector;
/// exact in integer arithmetic. `k_max <= 3`.
pub fn row_sums(g: &Graph, k_max: usize) -> Result<RowSumReport> {
    if k_max > 3 {
        return Err(Error::BadInput("row sums support k <= 3".into()));
    }
    let n = g.n();
    let int_matvec = |x: &[u64]| -> Vec<u64> {
        (0..n)
            .map(|v| BitIter(g.row(v)).map(|u| x[u]).sum())
            .collect()
    };
    let ones = vec![1u64; n];
    let s1 = int_matvec(&ones);
    let s2 = int_matvec(&s1);
    let s3 = int_matvec(&s2);

    let items = match recognition::is_maximal_2conn_structural(g) {
        Ok(true) => {
            let e = recognition::boundary(g)?;
            let outer = e.outer();
            let mut succ = vec![Vec::new(); n];
            for i in 0..n {
                let v = outer[i];
                succ[v].push(outer[(i + 1) % n]);
                succ[v].push(outer[(i + n - 1) % n]);
            }
            let item1: Vec<bool> = (0..n).map(|v| 2 * s1[v] <= n as u64).collect();
            let item2: Vec<bool> = (0..n)
                .map(|v| 2 * s2[v] + 4 <= n as u64 + 4 * s1[v] && 2 * s2[v] <= 3 * n as u64 - 4)
                .collect();
            let item3: Vec<bool> = (0..n)
                .map(|v| {
                    succ[v].iter().all(|&w| {
                        s2[v] + s1[w] <= n as u64 + s1[v] && 2 * (n as u64 + s1[v]) <= 3 * n as u64
                    })
                })
                .collect();
            let item4: Vec<bool> = (0..n)
                .map(|v| 2 * s3[v] + 12 <= 2 * s1[v] * s1[v] + 6 * s1[v] + 3 * n as u64)
                .collect();
            let all_pass = item1
                .iter()
                .chain(&item2)
                .chain(&item3)
                .chain(&item4)
                .all(|&b| b);
            Some(RowSumChecks {
                item1,
                item2,
                item3,
                item4,
                all_pass,
            })
        }
        _ => None,
    };
    Ok(RowSumReport { s1, s2, s3, items })
}

// ---- certificates -----------------------------------------------------------

/// Verdict of a certificate check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// `f(A)y <= r·y` coordinate-wise, hence `f(ρ) <= r`.
    Loose,
    /// Additionally some coordinate is strictly below, hence `f(ρ) < r`.
    Strict,
    Fail,
}

/// A polynomial certificate `f(A)y <= r·y` with `y >= 0`, `y != 0`.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCertificate {
    /// Coefficients of `f`, leading power first (`[1, 0, -k]` is `x² − k`).
    pub poly: Vec<f64>,
    pub y: Vec<f64>,
    pub r: f64,
    pub verdict: Option<Verdict>,
}

impl BoundCertificate {
    pub fn new(poly: Vec<f64>, y: Vec<f64>, r: f64) -> Self {
        BoundCertificate {
            poly,
            y,
            r,
            verdict: None,
        }
    }

    pub fn ones(poly: Vec<f64>, n: usize, r: f64) -> Self {
        Self::new(poly, vec![1.0; n], r)
    }
}

fn poly_apply_matrix(g: &Graph, poly: &[f64], y: &[f64]) -> Vec<f64> {
    // Horner: u <- A·u + c_j·y, never forming A^k
    let n = g.n();
    let mut u = vec![0.0; n];
    for (i, &c) in poly.iter().enumerate() {
        if i == 0 {
            for k in 0..n {
                u[k] = c * y[k];
            }
        } else {
            let mut au = vec![0.0; n];
            matvec(g, &u, &mut au);
            for k in 0..n {
                u[k] = au[k] + c * y[k];
            }
        }
    }
    u
}

fn poly_eval(poly: &[f64], x: f64) -> f64 {
    poly.iter().fold(0.0, |acc, &c| acc * x + c)
}

/// Checks `f(A)y <= r·y` coordinate-wise and fills in the verdict. On a
/// non-fail verdict the implied inequality on `ρ` is verified against the
/// independently computed spectral radius; a discrepancy fires the
/// theorem-violation detector.
pub fn certify_bound(g: &Graph, mut cert: BoundCertificate) -> Result<BoundCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if cert.y.len() != g.n() {
        return Err(Error::BadInput(format!(
            "test vector has length {}, graph has order {}",
            cert.y.len(),
            g.n()
        )));
    }
    if cert.y.iter().any(|&v| v < 0.0) || cert.y.iter().all(|&v| v == 0.0) {
        return Err(Error::BadInput(
            "test vector must be nonnegative and nonzero".into(),
        ));
    }
    if cert.poly.is_empty() {
        return Err(Error::BadInput("empty polynomial".into()));
    }
    let fy = poly_apply_matrix(g, &cert.poly, &cert.y);
    let mut all_le = true;
    let mut some_strict = false;
    for (fi, yi) in fy.iter().zip(&cert.y) {
        if *fi > cert.r * yi + tol::CERT_SLACK {
            all_le = false;
            break;
        }
        if *fi < cert.r * yi - tol::STRICT_MARGIN {
            some_strict = true;
        }
    }
    let verdict = if !all_le {
        Verdict::Fail
    } else if some_strict {
        Verdict::Strict
    } else {
        Verdict::Loose
    };
    if verdict != Verdict::Fail {
        let rho = spectral_radius(g)?.value;
        let frho = poly_eval(&cert.poly, rho);
        let ok = match verdict {
            Verdict::Loose => frho <= cert.r + tol::COMPARE,
            Verdict::Strict => frho < cert.r - tol::STRICT_MARGIN,
            Verdict::Fail => unreachable!(),
        };
        if !ok {
            return Err(Error::TheoremViolation(format!(
                "certificate verdict {verdict:?} but f(ρ)={frho} vs r={}",
                cert.r
            )));
        }
    }
    cert.verdict = Some(verdict);
    Ok(cert)
}

// ---- closed-form bounds -------------------------------------------------------

/// The closed-form spectral-radius bounds, by family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// Edge-most bipartite outerplanar, even order: `1 + √(n/2 − 1)`.
    EdgeMostEven,
    /// Edge-most bipartite outerplanar, odd order (strict): `1 + √(n/2 − ½)`.
    EdgeMostOdd,
    /// Maximal 2-connected bipartite outerplanar, `n >= 16`: `√(3n/4 + 2)`.
    MaxTwoConnected,
    /// `eps` pendants on one vertex of a maximal 2-connected core:
    /// `1 + √((n + eps − 2)/2)`, for `1 <= eps <= n − 4`.
    PendantAttached,
    /// Pendant-heavy regime `n >= 21`, `n/2 <= eps <= n − 12` (strict):
    /// `√(n − 1)`.
    PendantHeavy,
    /// Exact star value `√(n − 1)`.
    Star,
}

/// Evaluates the bound, rejecting out-of-range parameters with the name
/// of the violated hypothesis.
pub fn closed_form_bound(kind: BoundKind, n: usize, eps: usize) -> Result<f64> {
    let nf = n as f64;
    let ef = eps as f64;
    match kind {
        BoundKind::EdgeMostEven => {
            if n < 4 || !n.is_multiple_of(2) {
                return Err(Error::HypothesisViolated(format!(
                    "even edge-most bound needs even n >= 4, got {n}"
                )));
            }
            Ok(1.0 + (nf / 2.0 - 1.0).sqrt())
        }
        BoundKind::EdgeMostOdd => {
            if n < 3 || n % 2 != 1 {
                return Err(Error::HypothesisViolated(format!(
                    "odd edge-most bound needs odd n >= 3, got {n}"
                )));
            }
            Ok(1.0 + (nf / 2.0 - 0.5).sqrt())
        }
        BoundKind::MaxTwoConnected => {
            if n < 16 || !n.is_multiple_of(2) {
                return Err(Error::HypothesisViolated(format!(
                    "maximal 2-connected bound needs even n >= 16, got {n}"
                )));
            }
            Ok((3.0 * nf / 4.0 + 2.0).sqrt())
        }
        BoundKind::PendantAttached => {
            if eps < 1 || eps + 4 > n {
                return Err(Error::HypothesisViolated(format!(
                    "pendant bound needs 1 <= eps <= n-4, got n={n}, eps={eps}"
                )));
            }
            Ok(1.0 + ((nf + ef - 2.0) / 2.0).sqrt())
        }
        BoundKind::PendantHeavy => {
            if n < 21 || 2 * eps < n || eps + 12 > n {
                return Err(Error::HypothesisViolated(format!(
                    "pendant-heavy bound needs n >= 21 and n/2 <= eps <= n-12, got n={n}, eps={eps}"
                )));
            }
            Ok((nf - 1.0).sqrt())
        }
        BoundKind::Star => {
            if n < 1 {
                return Err(Error::HypothesisViolated("star bound needs n >= 1".into()));
            }
            Ok((nf - 1.0).sqrt())
        }
    }
}

// ---- rotation ---------------------------------------------------------------

/// Verifies that an edge rotation under the eigenvector hypothesis
/// strictly raises the spectral radius. Returns `None` when the
/// hypothesis `x_u >= x_v` does not hold (no verdict), otherwise whether
/// `ρ` strictly increased.
pub fn rotation_increases_rho(
    g: &Graph,
    u: usize,
    v: usize,
    targets: &[usize],
) -> Result<Option<bool>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let rho = spectral_radius(g)?;
    if rho.vector[u] < rho.vector[v] - 1e-12 {
        return Ok(None);
    }
    let rotated = crate::constructions::edge_rotation(g, u, v, targets)?;
    let rho_star = spectral_radius(&rotated)?.value;
    Ok(Some(rho_star > rho.value + tol::STRICT_MARGIN))
}

// ---- bipartite floor ----------------------------------------------------------

/// A connected bipartite subgraph minimizing the least eigenvalue, with
/// its value. Guarantees `λ(H) <= λ(G)`. Exhaustive over vertex subsets
/// and bipartitions, so capped at order 8.
///
/// Only part-complete candidates need inspection: any connected bipartite
/// subgraph with parts `(X, Y)` is contained in the subgraph taking all
/// host edges between `X` and `Y`, which has the larger spectral radius
/// and hence the smaller least eigenvalue.
pub fn bipartite_floor(g: &Graph) -> Result<(Graph, f64)> {
    const FLOOR_LIMIT: usize = 8;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() > FLOOR_LIMIT {
        return Err(Error::CapExceeded {
            what: "bipartite floor order",
            cap: FLOOR_LIMIT,
            requested: g.n(),
        });
    }
    let n = g.n();
    let mut best: Option<(Graph, f64)> = None;
    for subset in 1u64..(1 << n) {
        let verts: Vec<usize> = BitIter(subset).collect();
        let k = verts.len();
        if k == 1 {
            continue; // a single vertex has λ = 0, never the minimum for n >= 2
        }
        // fix the lowest vertex on side 0 and sweep the rest
        for side_mask in 0u64..(1 << (k - 1)) {
            let mut edges = Vec::new();
            for i in 0..k {
                for j in i + 1..k {
                    let (si, sj) = (side_bit(side_mask, i), side_bit(side_mask, j));
                    if si != sj && g.has_edge(verts[i], verts[j]) {
                        edges.push((i, j));
                    }
                }
            }
            if edges.is_empty() {
                continue;
            }
            let h = Graph::from_edges(k, &edges).expect("valid subgraph");
            if !h.is_connected() || h.m() == 0 {
                continue;
            }
            let lambda = least_eigenvalue(&h)?.value;
            if best.as_ref().map(|(_, b)| lambda < *b).unwrap_or(true) {
                best = Some((h, lambda));
            }
        }
    }
    let (h, lambda) = best.ok_or(Error::BadInput("graph has no edges".into()))?;
    let lam_g = least_eigenvalue(g)?.value;
    if lambda > lam_g + tol::STRICT_MARGIN {
        return Err(Error::TheoremViolation(format!(
            "bipartite floor {lambda} above λ(G) = {lam_g} for {g:?}"
        )));
    }
    Ok((h, lambda))
}

fn side_bit(mask: u64, i: usize) -> u8 {
    if i == 0 {
        0
    } else {
        (mask >> (i - 1) & 1) as u8
    }
}
