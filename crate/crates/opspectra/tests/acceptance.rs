//! Acceptance suite: every desk-scale claim the library is accountable
//! for, one test per criterion, each printing a single PASS/FAIL line.
//!
//! Criterion 8b is expected to fail and documents why in its message:
//! the claimed strict bound for the 2-path pendant family is false for
//! s >= 6 at the low end of the stated range (it holds iff n > s²+s+1,
//! with exact equality at n = s²+s+1). The test asserts the claim as
//! stated rather than weakening it.

use opspectra::constructions::{attach_pendants, g1, g2, h_case, quad_book, star};
use opspectra::enumeration::{
    self, census_edge_counts, dissection_census, enumerate, extremal_scan, EnumFamily, EnumSpec,
    Objective,
};
use opspectra::graph::cycle;
use opspectra::recognition::{is_maximal_2conn_structural, is_maximal_bip_outerplanar};
use opspectra::report::{extremal_structure_ok, run_suite, SuiteParams};
use opspectra::spectra::{
    certify_bound, least_eigenvalue, row_sums, spectral_radius, BoundCertificate, Verdict,
};
use opspectra::tol;
use std::time::Instant;

const TOL: f64 = 1e-8;
const STRICT: f64 = 1e-10;

struct Criterion {
    name: &'static str,
    start: Instant,
}

impl Criterion {
    fn begin(name: &'static str) -> Self {
        Criterion {
            name,
            start: Instant::now(),
        }
    }

    fn pass(self, detail: &str) {
        println!(
            "criterion {}: PASS ({:.2?}) — {detail}",
            self.name,
            self.start.elapsed()
        );
    }

    fn fail(self, detail: &str) -> String {
        let line = format!(
            "criterion {}: FAIL ({:.2?}) — {detail}",
            self.name,
            self.start.elapsed()
        );
        println!("{line}");
        line
    }
}

#[test]
fn criterion_01_star_spectra() {
    let c = Criterion::begin("1 (star spectra)");
    let mut worst = 0.0f64;
    for n in 2..=64 {
        let target = ((n - 1) as f64).sqrt();
        let rho = spectral_radius(&star(n)).unwrap();
        let lam = least_eigenvalue(&star(n)).unwrap();
        worst = worst
            .max((rho.value - target).abs())
            .max((lam.value + target).abs());
        assert!((rho.value - target).abs() <= TOL, "rho(star({n}))");
        assert!((lam.value + target).abs() <= TOL, "lambda(star({n}))");
    }
    c.pass(&format!(
        "rho/lambda exact for n in 2..=64, worst deviation {worst:.2e}"
    ));
}

#[test]
fn criterion_02_quad_book_closed_form() {
    let c = Criterion::begin("2 (quad-book closed form)");
    let mut worst = 0.0f64;
    for s in 1..=8 {
        let rho = spectral_radius(&quad_book(s).unwrap()).unwrap().value;
        let target = 1.0 + (s as f64).sqrt();
        worst = worst.max((rho - target).abs());
        assert!((rho - target).abs() <= TOL, "rho(quad_book({s}))");
    }
    c.pass(&format!(
        "rho = 1+sqrt(s) for s in 1..=8, worst deviation {worst:.2e}"
    ));
}

#[test]
fn criterion_03_face_maximality_equivalence() {
    let c = Criterion::begin("3 (face criterion vs maximality oracle)");
    let mut graphs = 0usize;
    for n in (4..=14).step_by(2) {
        for plan in enumeration::quad_dissection_plans(n).unwrap() {
            let g = opspectra::constructions::quadrangulation(n, &plan).unwrap();
            let structural = is_maximal_2conn_structural(&g).unwrap();
            let oracle = is_maximal_bip_outerplanar(&g).unwrap();
            assert_eq!(structural, oracle, "disagreement at n={n}, plan {plan:?}");
            assert!(structural, "census graph not maximal at n={n}");
            graphs += 1;
        }
    }
    c.pass(&format!(
        "zero disagreements over {graphs} dissections, even n in 4..=14"
    ));
}

#[test]
fn criterion_04_edge_bound_census() {
    let c = Criterion::begin("4 (edge-count bound and equality structure)");
    let mut total = 0usize;
    for n in 1..=8 {
        let census =
            census_edge_counts(&EnumSpec::new(EnumFamily::BipartiteOuterplanar, n)).unwrap();
        assert_eq!(census.violations, 0, "bound violated at n={n}");
        assert_eq!(census.max_m, census.bound, "bound not attained at n={n}");
        let classes = enumerate(&EnumSpec::new(EnumFamily::BipartiteOuterplanar, n))
            .unwrap()
            .graphs;
        for g in classes.iter() {
            total += 1;
            assert!(g.m() <= census.bound);
            if g.m() == census.bound {
                assert!(
                    extremal_structure_ok(g).unwrap(),
                    "equality graph fails the structural characterization at n={n}: {g:?}"
                );
            } else {
                // strictly fewer edges must mean not edge-most-structured
                // only for even single blocks; composite shapes may still
                // satisfy pieces, so no converse is asserted here
            }
        }
    }
    c.pass(&format!(
        "{total} classes, n in 1..=8; equality graphs match the edge-most structure"
    ));
}

#[test]
fn criterion_05_order_ten_census() {
    let c = Criterion::begin("5 (order-10 census has exactly the five cases)");
    let classes = dissection_census(10, true).unwrap();
    assert_eq!(classes.len(), 5);
    for g in &classes {
        assert!(
            (1..=5).any(|i| opspectra::canon::isomorphic(g, &h_case(i).unwrap())),
            "census class not matched by a fixture: {g:?}"
        );
    }
    for i in 1..=5 {
        let h = h_case(i).unwrap();
        assert!(
            classes.iter().any(|g| opspectra::canon::isomorphic(g, &h)),
            "fixture {i} missing"
        );
    }
    // labeled count cross-check
    assert_eq!(dissection_census(10, false).unwrap().len(), 55);
    c.pass("5 isomorphism classes, matching the fixtures; 55 labeled dissections");
}

#[test]
fn criterion_06_row_sum_sweep() {
    let c = Criterion::begin("6 (row-sum inequalities over the census)");
    let mut graphs = 0usize;
    for n in (4..=16).step_by(2) {
        for plan in enumeration::quad_dissection_plans(n).unwrap() {
            let g = opspectra::constructions::quadrangulation(n, &plan).unwrap();
            let rep = row_sums(&g, 3).unwrap();
            let items = rep.items.expect("census graphs are maximal 2-connected");
            assert!(
                items.all_pass,
                "row-sum item failed at n={n}, plan {plan:?}"
            );
            graphs += 1;
        }
    }
    // tightness of items (1) and (2) at the 4-cycle
    let rep = row_sums(&cycle(4), 2).unwrap();
    assert!(rep.s1.iter().all(|&s| s == 2), "item (1) tight at n/2");
    assert!(rep.s2.iter().all(|&s| s == 4), "item (2) tight at 3n/2 - 2");
    c.pass(&format!(
        "items (1)-(4) hold on {graphs} dissections, even n in 4..=16; tight at C4"
    ));
}

#[test]
fn criterion_07_cubic_certificate_census() {
    let c = Criterion::begin("7 (cubic certificate at n = 16, 18, 20)");
    let mut graphs = 0usize;
    for n in [16usize, 18, 20] {
        let k = 3.0 * n as f64 / 4.0 + 2.0;
        let bound = k.sqrt();
        for plan in enumeration::quad_dissection_plans(n).unwrap() {
            let g = opspectra::constructions::quadrangulation(n, &plan).unwrap();
            let rho = spectral_radius(&g).unwrap().value;
            assert!(
                rho <= bound + TOL,
                "direct bound violated at n={n}: rho={rho}"
            );
            let cert =
                certify_bound(&g, BoundCertificate::ones(vec![1.0, 0.0, -k, 0.0], n, 0.0)).unwrap();
            assert_ne!(
                cert.verdict,
                Some(Verdict::Fail),
                "certificate failed at n={n}, plan {plan:?}"
            );
            graphs += 1;
        }
    }
    c.pass(&format!(
        "certificate and direct route agree on {graphs} dissections"
    ));
}

#[test]
fn criterion_08a_g1_strict_bounds() {
    let c = Criterion::begin("8a (quad-book pendant family strict bounds)");
    let mut worst = f64::INFINITY;
    for n in 36..=60 {
        let target = ((n - 1) as f64).sqrt();
        for s in 1..=4 {
            let rho = spectral_radius(&g1(n, s).unwrap()).unwrap().value;
            worst = worst.min(target - rho);
            assert!(
                rho < target - STRICT,
                "g1({n},{s}) violates the strict bound"
            );
        }
    }
    c.pass(&format!(
        "rho(g1(n,s)) < sqrt(n-1) for s in 1..=4, n in 36..=60; worst gap {worst:.4}"
    ));
}

#[test]
fn criterion_08b_g2_strict_bounds() {
    let c = Criterion::begin("8b (2-path pendant family strict bounds, as stated)");
    let mut violations = Vec::new();
    let mut worst = f64::INFINITY;
    for n in 37..=60usize {
        let target = ((n - 1) as f64).sqrt();
        for s in 1..=8usize {
            let rho = spectral_radius(&g2(n, s).unwrap()).unwrap().value;
            worst = worst.min(target - rho);
            #[allow(clippy::neg_cmp_op_on_partial_ord)] // NaN must count as a violation
            if !(rho < target - STRICT) {
                violations.push((n, s, rho - target));
            }
        }
    }
    if violations.is_empty() {
        c.pass("rho(g2(n,s)) < sqrt(n-1) for s in 1..=8, n in 37..=60");
        return;
    }
    let line = c.fail(&format!(
        "{} violations; the claim is false as stated: rho(g2(n,s)) < sqrt(n-1) holds iff \
         n > s*s+s+1 (exact equality at n = s*s+s+1, e.g. rho(g2(43,6)) = sqrt(42)); the \
         stated range n >= 37 only covers s <= 5. First violations: {:?}",
        violations.len(),
        &violations[..violations.len().min(4)]
    ));
    panic!("{line}");
}

#[test]
fn criterion_09_pendant_attachment_comparison() {
    let c = Criterion::begin("9 (order-36 pendant attachments vs competitor families)");
    let n = 36;
    let eps = n - 10;
    let bound = spectral_radius(&g1(n, 4).unwrap())
        .unwrap()
        .value
        .max(spectral_radius(&g2(n, 5).unwrap()).unwrap().value);
    let mut checked = 0usize;
    for i in 1..=5 {
        let h = h_case(i).unwrap();
        for u in h.vertices() {
            let g = attach_pendants(&h, u, eps).unwrap();
            let rho = spectral_radius(&g).unwrap().value;
            assert!(
                rho <= bound + TOL,
                "case {i}, root {u}: rho = {rho} exceeds max(rho(g1), rho(g2)) = {bound}"
            );
            checked += 1;
        }
    }
    c.pass(&format!(
        "{checked} attachments stay below the competitor maximum {bound:.6}"
    ));
}

#[test]
fn criterion_10_rotation_property() {
    let c = Criterion::begin("10 (rotation strictly raises the radius)");
    let params = SuiteParams {
        samples: 500,
        seed: 0x5eed,
        ..SuiteParams::default()
    };
    let rep = run_suite("rotation", &params).unwrap();
    assert!(rep.pass, "{:?}", rep.checks);
    c.pass(&rep.checks[0].name.clone());
}

#[test]
fn criterion_11_edge_monotonicity() {
    let c = Criterion::begin("11 (edge addition strictly raises the radius)");
    let mut pairs = 0usize;
    for n in 2..=6 {
        let classes = enumerate(&EnumSpec::new(EnumFamily::AllConnected, n))
            .unwrap()
            .graphs;
        for g in &classes {
            for (u, v) in g.non_edges() {
                assert!(
                    opspectra::spectra::monotonicity_check(g, u, v).unwrap(),
                    "monotonicity failed on {g:?} + ({u},{v})"
                );
                pairs += 1;
            }
        }
    }
    c.pass(&format!(
        "{pairs} non-edge additions over all connected graphs n <= 6"
    ));
}

#[test]
fn criterion_12_bipartite_floor() {
    let c = Criterion::begin("12 (bipartite floor beneath every small graph)");
    let mut graphs = 0usize;
    for n in 2..=6 {
        let classes = enumerate(&EnumSpec::new(EnumFamily::AllConnected, n))
            .unwrap()
            .graphs;
        for g in &classes {
            if g.m() == 0 {
                continue;
            }
            let (h, lam_h) = opspectra::spectra::bipartite_floor(g).unwrap();
            let lam_g = least_eigenvalue(g).unwrap().value;
            assert!(lam_h <= lam_g + STRICT, "floor above lambda(G) on {g:?}");
            if g.bipartition().is_some() {
                assert!(
                    (lam_h - lam_g).abs() <= TOL,
                    "equality expected for bipartite {g:?}"
                );
                assert_eq!(h.n(), g.n());
            } else {
                assert!(
                    lam_h < lam_g - STRICT,
                    "strict drop expected for non-bipartite {g:?}"
                );
            }
            graphs += 1;
        }
    }
    c.pass(&format!(
        "{graphs} connected classes, n <= 6; equality exactly on bipartite inputs"
    ));
}

#[test]
fn criterion_13_paper_scale_statement() {
    let c = Criterion::begin("13 (paper-scale quantifiers are out of reach; reported substitutes)");
    println!(
        "  note: the extremal statements quantify over all (bipartite) outerplanar graphs of \
         order >= 55; exhaustive verification at that scale is infeasible. Substitutes: exact \
         star spectra (criterion 1), the competitor-family bounds (criteria 8-9), and the \
         small-order scans below, whose winners are reported."
    );
    for n in 4..=8 {
        let scan = extremal_scan(
            &EnumSpec::new(EnumFamily::BipartiteOuterplanar, n),
            Objective::MaxRho,
            false,
        )
        .unwrap();
        // mechanical sanity: the star belongs to the family, so the
        // winner is at least as large
        let star_rho = spectral_radius(&star(n)).unwrap().value;
        assert!(scan.best_value >= star_rho - tol::COMPARE);
        let winner_json = serde_json::to_string(&scan.winners).unwrap();
        println!(
            "  max-rho over bipartite outerplanar n={n}: best {:.6}, star attains: {}, edge-most wins: {}, winners: {winner_json}",
            scan.best_value, scan.star_attains, scan.winner_edge_most
        );
        let lam = extremal_scan(
            &EnumSpec::new(EnumFamily::AllConnectedOuterplanar, n),
            Objective::MinLambda,
            false,
        )
        .unwrap();
        println!(
            "  min-lambda over connected outerplanar n={n}: best {:.6}, star attains: {}",
            lam.best_value, lam.star_attains
        );
    }
    // the JSON reports above are deterministic: spot-check by re-running one
    let again = extremal_scan(
        &EnumSpec::new(EnumFamily::BipartiteOuterplanar, 6),
        Objective::MaxRho,
        false,
    )
    .unwrap();
    let twice = extremal_scan(
        &EnumSpec::new(EnumFamily::BipartiteOuterplanar, 6),
        Objective::MaxRho,
        false,
    )
    .unwrap();
    assert_eq!(
        serde_json::to_string(&again).unwrap(),
        serde_json::to_string(&twice).unwrap()
    );
    c.pass("statement recorded; small-order winners reported above");
}
