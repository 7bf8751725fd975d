//! The named verification suites behind `verify-theorems`: each sweeps a
//! structural or spectral statement at desk scale and reports one line
//! per check. A failed hard invariant is escalated as a theorem
//! violation so the CLI can exit with the detector code.

use crate::constructions::{attach_pendants, g1, g2, h_case, star};
use crate::enumeration::{self, EnumFamily, EnumSpec, Objective};
use crate::graph::{BitIter, Graph};
use crate::rng::SplitMix64;
use crate::spectra;
use crate::tol::Tolerances;
use crate::{Error, Result};
use serde::Serialize;

/// One verified statement.
#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Outcome of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<CheckLine>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.into(),
            pass: true,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.pass &= pass;
        self.checks.push(CheckLine {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    /// Escalates failures of hard invariants.
    pub fn into_result(self) -> Result<SuiteReport> {
        if self.pass {
            Ok(self)
        } else {
            let failed: Vec<&str> = self
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.name.as_str())
                .collect();
            Err(Error::TheoremViolation(format!(
                "suite {} failed: {}",
                self.suite,
                failed.join(", ")
            )))
        }
    }
}

/// Parameters shared by the suites.
#[derive(Debug, Clone)]
pub struct SuiteParams {
    pub n_lo: usize,
    pub n_hi: usize,
    pub samples: usize,
    pub seed: u64,
    pub tol: Tolerances,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n_lo: 0,
            n_hi: 0,
            samples: 500,
            seed: 0x5eed,
            tol: Tolerances::default(),
        }
    }
}

/// Suite names in the order they are documented.
pub const SUITES: &[&str] = &[
    "rowsum",
    "edgecount",
    "g1g2",
    "hcases",
    "rotation",
    "floor",
    "star-extremal",
];

/// Dispatches a named suite.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    match name {
        "rowsum" => rowsum_suite(params),
        "edgecount" => edgecount_suite(params),
        "g1g2" => g1g2_suite(params),
        "hcases" => hcases_suite(params),
        "rotation" => rotation_suite(params),
        "floor" => floor_suite(params),
        "star-extremal" => star_extremal_suite(params),
        other => Err(Error::BadInput(format!(
            "unknown suite {other}; available: {}",
            SUITES.join(", ")
        ))),
    }
}

fn range_or(params: &SuiteParams, lo: usize, hi: usize) -> (usize, usize) {
    if params.n_lo == 0 && params.n_hi == 0 {
        (lo, hi)
    } else {
        (params.n_lo, params.n_hi)
    }
}

/// Walk-count inequalities over the full dissection census.
fn rowsum_suite(params: &SuiteParams) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("rowsum");
    let (lo, hi) = range_or(params, 4, 16);
    let mut n = lo + lo % 2;
    while n <= hi {
        let census = enumeration::dissection_census(n, false)?;
        let mut all = true;
        for g in &census {
            let r = spectra::row_sums(g, 3)?;
            let items = r.items.ok_or_else(|| {
                Error::TheoremViolation(format!(
                    "census graph not recognized as maximal 2-connected: {g:?}"
                ))
            })?;
            all &= items.all_pass;
        }
        rep.push(
            format!("rowsum items (1)-(4) at n={n}"),
            all,
            format!("{} dissections checked", census.len()),
        );
        n += 2;
    }
    // tightness of items (1) and (2) on the 4-cycle
    let r = spectra::row_sums(&crate::graph::cycle(4), 2)?;
    let tight = r.s1.iter().all(|&s| s == 2) && r.s2.iter().all(|&s| s == 4);
    rep.push(
        "items (1)-(2) tight on the 4-cycle",
        tight,
        format!("s1={:?}, s2={:?}", r.s1, r.s2),
    );
    Ok(rep)
}

/// The edge-count ceiling and its equality characterization.
fn edgecount_suite(params: &SuiteParams) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("edgecount");
    let (lo, hi) = range_or(params, 1, 8);
    for n in lo.max(1)..=hi {
        let census =
            enumeration::census_edge_counts(&EnumSpec::new(EnumFamily::BipartiteOuterplanar, n))?;
        rep.push(
            format!("edge bound at n={n}"),
            census.violations == 0 && census.max_m == census.bound,
            format!("max m = {} vs bound {}", census.max_m, census.bound),
        );
        // equality structure
        let classes =
            enumeration::enumerate(&EnumSpec::new(EnumFamily::BipartiteOuterplanar, n))?.graphs;
        let mut structure_ok = true;
        let mut detail = String::new();
        for g in classes.iter().filter(|g| g.m() == census.bound) {
            let ok = extremal_structure_ok(g)?;
            if !ok {
                structure_ok = false;
                detail = format!("counterexample: {g:?}");
                break;
            }
        }
        rep.push(
            format!("equality characterization at n={n}"),
            structure_ok,
            if detail.is_empty() {
                format!("{} extremal classes", census.extremal_classes)
            } else {
                detail
            },
        );
    }
    Ok(rep)
}

/// Edge-most equality structure: single edge-most block for even order
/// (2-connected maximal, or an edge for order 2), the 1-sum of two
/// even-order edge-most blocks for odd order.
pub fn extremal_structure_ok(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n == 1 {
        return Ok(g.m() == 0);
    }
    if n.is_multiple_of(2) {
        if n == 2 {
            return Ok(g.m() == 1);
        }
        return Ok(g.is_two_connected() && crate::recognition::is_maximal_bip_outerplanar(g)?);
    }
    // odd: exactly two blocks, both even edge-most
    let bt = g.block_tree()?;
    if bt.blocks.len() != 2 || bt.cut_vertices.len() != 1 {
        return Ok(false);
    }
    for block in &bt.blocks {
        let sub = g.induced(block);
        let k = sub.n();
        if !k.is_multiple_of(2) || sub.m() != enumeration::edge_bound(k) {
            return Ok(false);
        }
        if k > 2
            && !(sub.is_two_connected() && crate::recognition::is_maximal_bip_outerplanar(&sub)?)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strict star domination over the two pendant competitor families.
///
/// The 2-path family obeys an exact law (its equitable partition closes
/// to a quartic): `rho(g2(n,s)) < sqrt(n-1)` holds iff `n > s²+s+1`,
/// with equality at `n = s²+s+1`. The documented sweep starts at n = 37,
/// which covers s <= 5 only; the per-s lines below report the measured
/// truth either way.
fn g1g2_suite(params: &SuiteParams) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("g1g2");
    let (lo, hi) = range_or(params, 36, 60);
    let margin = params.tol.strict_margin;
    let mut worst_gap = f64::INFINITY;
    let mut all = true;
    for n in lo..=hi {
        let target = ((n - 1) as f64).sqrt();
        for s in 1..=4 {
            let rho = spectra::spectral_radius(&g1(n, s)?)?.value;
            worst_gap = worst_gap.min(target - rho);
            all &= rho < target - margin;
        }
    }
    rep.push(
        format!("rho(g1(n,s)) < sqrt(n-1) for s in 1..=4, n in {lo}..={hi}"),
        all,
        format!("worst gap {worst_gap:.6}"),
    );
    let lo2 = lo.max(37);
    for s in 1..=8usize {
        let mut worst_gap = f64::INFINITY;
        let mut pass = true;
        let mut first_violation = None;
        for n in lo2.max(s + 3)..=hi {
            let target = ((n - 1) as f64).sqrt();
            let rho = spectra::spectral_radius(&g2(n, s)?)?.value;
            worst_gap = worst_gap.min(target - rho);
            if rho >= target - margin {
                pass = false;
                if first_violation.is_none() {
                    first_violation = Some(n);
                }
            }
        }
        let law = s * s + s + 1;
        let detail = match first_violation {
            None => format!("worst gap {worst_gap:.6}; law: holds iff n > {law}"),
            Some(n) => format!(
                "violated from n={n}: the bound holds iff n > {law} (equality at n = {law})"
            ),
        };
        rep.push(
            format!(
                "rho(g2(n,{s})) < sqrt(n-1) for n in {}..={hi}",
                lo2.max(s + 3)
            ),
            pass,
            detail,
        );
    }
    // measured monotonicity in s (asserted only inside the sweep range)
    let mut mono = true;
    for n in lo..=hi {
        let mut prev = f64::INFINITY;
        for s in 1..=4 {
            let rho = spectra::spectral_radius(&g1(n, s)?)?.value;
            mono &= rho < prev;
            prev = rho;
        }
    }
    rep.push(
        format!("rho(g1(n,s)) strictly decreasing in s for n in {lo}..={hi}"),
        mono,
        "measured, not assumed, outside this range",
    );
    Ok(rep)
}

/// The order-10 block census and the pendant-attachment comparison.
fn hcases_suite(params: &SuiteParams) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("hcases");
    let classes = enumeration::dissection_census(10, true)?;
    rep.push(
        "exactly five maximal 2-connected classes at n=10",
        classes.len() == 5,
        format!("found {}", classes.len()),
    );
    let mut matched = true;
    for i in 1..=5 {
        let h = h_case(i)?;
        matched &= classes.iter().any(|g| crate::canon::isomorphic(g, &h));
    }
    rep.push(
        "census classes match the five fixtures",
        matched,
        "golden transcription vs census",
    );

    let n = 36;
    let eps = n - 10;
    let bound = spectra::spectral_radius(&g1(n, 4)?)?
        .value
        .max(spectra::spectral_radius(&g2(n, 5)?)?.value);
    let mut all = true;
    let mut worst = f64::NEG_INFINITY;
    for i in 1..=5 {
        let h = h_case(i)?;
        for u in h.vertices() {
            let g = attach_pendants(&h, u, eps)?;
            let rho = spectra::spectral_radius(&g)?.value;
            worst = worst.max(rho - bound);
            all &= rho <= bound + params.tol.compare;
        }
    }
    rep.push(
        format!("pendant attachments at n={n} stay below max(rho(g1), rho(g2))"),
        all,
        format!("max excess {worst:.3e}"),
    );
    Ok(rep)
}

/// Seeded random rotation instances satisfying the eigenvector
/// hypothesis must strictly raise the spectral radius.
fn rotation_suite(params: &SuiteParams) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("rotation");
    let mut rng = SplitMix64::new(params.seed);
    let wanted = params.samples;
    let mut checked = 0usize;
    let mut attempts = 0usize;
    let mut all = true;
    while checked < wanted && attempts < wanted * 2000 {
        attempts += 1;
        let n = 4 + rng.below(9); // 4..=12
        let g = random_connected(&mut rng, n);
        let u = rng.below(n);
        let v = rng.below(n);
        if u == v {
            continue;
        }
        let allowed: Vec<usize> = BitIter(g.row(v) & !g.row(u) & !(1 << u)).collect();
        if allowed.is_empty() {
            continue;
        }
        // draw a nonempty target subset
        let mask = 1 + rng.below((1 << allowed.len()) - 1);
        let targets: Vec<usize> = allowed
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &t)| t)
            .collect();
        // the rotation check itself gates on the eigenvector hypothesis;
        // draws failing it return no verdict and are not counted
        match spectra::rotation_increases_rho(&g, u, v, &targets)? {
            Some(increased) => {
                all &= increased;
                checked += 1;
            }
            None => continue,
        }
    }
    rep.push(
        format!("rotation strictly raises rho ({checked} hypothesis-satisfying instances)"),
        all && checked == wanted,
        format!("{attempts} draws, seed {}", params.seed),
    );
    Ok(rep)
}

fn random_connected(rng: &mut SplitMix64, n: usize) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.chance(2, 5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("valid random graph");
        if g.is_connected() {
            return g;
        }
    }
}

/// The bipartite floor beneath every small connected graph.
fn floor_suite(params: &SuiteParams) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("floor");
    let (lo, hi) = range_or(params, 2, 6);
    for n in lo.max(2)..=hi.min(6) {
        let classes = enumeration::enumerate(&EnumSpec::new(EnumFamily::AllConnected, n))?.graphs;
        let mut all = true;
        for g in &classes {
            if g.m() == 0 {
                continue;
            }
            let (h, lam_h) = spectra::bipartite_floor(g)?;
            let lam_g = spectra::least_eigenvalue(g)?.value;
            let below = lam_h <= lam_g + params.tol.strict_margin;
            let equality_ok = if g.bipartition().is_some() {
                (lam_h - lam_g).abs() <= params.tol.compare && h.n() == g.n()
            } else {
                lam_h < lam_g - params.tol.strict_margin
            };
            all &= below && equality_ok;
        }
        rep.push(
            format!("bipartite floor at n={n}"),
            all,
            format!("{} connected classes", classes.len()),
        );
    }
    Ok(rep)
}

/// Exact star spectra plus the small-order extremal scans whose winners
/// are reported rather than assumed.
fn star_extremal_suite(params: &SuiteParams) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("star-extremal");
    let (lo, hi) = range_or(params, 2, crate::MAX_N);
    let mut worst = 0.0f64;
    for n in lo.max(2)..=hi.min(crate::MAX_N) {
        let target = ((n - 1) as f64).sqrt();
        let rho = spectra::spectral_radius(&star(n))?.value;
        let lam = spectra::least_eigenvalue(&star(n))?.value;
        worst = worst.max((rho - target).abs()).max((lam + target).abs());
    }
    rep.push(
        format!(
            "star spectra exact on {}..={}",
            lo.max(2),
            hi.min(crate::MAX_N)
        ),
        worst <= params.tol.compare,
        format!("worst deviation {worst:.3e}"),
    );
    // small-order scans: winners reported; exhaustive checks at the
    // quantifier scale are out of reach, the named families above stand in
    for n in 4..=7 {
        let scan = enumeration::extremal_scan(
            &EnumSpec::new(EnumFamily::BipartiteOuterplanar, n),
            Objective::MaxRho,
            false,
        )?;
        rep.push(
            format!("max-rho scan at n={n} (reported)"),
            true,
            format!(
                "best {:.6}, winners {}, star attains: {}, edge-most wins: {}",
                scan.best_value,
                scan.winners.len(),
                scan.star_attains,
                scan.winner_edge_most
            ),
        );
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_list_is_exhaustive() {
        for name in SUITES {
            // smoke-run the cheap suites with tightened ranges
            let params = SuiteParams {
                n_lo: match *name {
                    "rowsum" => 4,
                    "edgecount" => 1,
                    "g1g2" => 36,
                    "star-extremal" => 2,
                    _ => 2,
                },
                n_hi: match *name {
                    "rowsum" => 6,
                    "edgecount" => 5,
                    "g1g2" => 38,
                    "floor" => 4,
                    "star-extremal" => 10,
                    _ => 5,
                },
                samples: 25,
                seed: 7,
                tol: Tolerances::default(),
            };
            let rep = run_suite(name, &params).unwrap();
            if *name == "g1g2" {
                // the 2-path family violates the documented claim for
                // s >= 6 at the low end of the range; the suite must
                // report exactly the algebraic law n > s² + s + 1
                for check in &rep.checks {
                    if let Some(s) = parse_g2_line(&check.name) {
                        let holds_everywhere = (37.max(s + 3)..=38).all(|n| n > s * s + s + 1);
                        assert_eq!(
                            check.pass, holds_everywhere,
                            "{}: {}",
                            check.name, check.detail
                        );
                    } else {
                        assert!(check.pass, "{}: {}", check.name, check.detail);
                    }
                }
            } else {
                assert!(rep.pass, "suite {name} failed: {:?}", rep.checks);
            }
        }
        assert!(run_suite("nope", &SuiteParams::default()).is_err());
    }

    fn parse_g2_line(name: &str) -> Option<usize> {
        let rest = name.strip_prefix("rho(g2(n,")?;
        rest.split(')').next()?.parse().ok()
    }
}
