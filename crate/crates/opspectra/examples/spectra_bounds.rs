//! Eigenvalue machinery: full spectra, Perron pairs, walk-count row
//! sums, polynomial certificates, and the closed-form bounds.
//!
//! Run with `cargo run --example spectra_bounds`.

use opspectra::constructions::{attach_pendants, quadrangulation, star};
use opspectra::graph::cycle;
use opspectra::spectra::{
    all_eigenvalues, certify_bound, closed_form_bound, least_eigenvalue, row_sums, spectral_radius,
    BoundCertificate, BoundKind,
};

fn main() {
    let c4 = cycle(4);
    println!("C4 spectrum: {:?}", all_eigenvalues(&c4).unwrap());
    let s9 = star(9);
    println!(
        "star(9): rho={:.6}, lambda={:.6} (bipartite symmetry)",
        spectral_radius(&s9).unwrap().value,
        least_eigenvalue(&s9).unwrap().value
    );

    let ladder16 = quadrangulation(16, &(1..7).map(|i| (i, 15 - i)).collect::<Vec<_>>()).unwrap();
    let rep = row_sums(&ladder16, 3).unwrap();
    println!("\nladder n=16 row sums: S(A)={:?}", rep.s1);
    println!(
        "  all four inequalities pass: {}",
        rep.items.unwrap().all_pass
    );

    // cubic certificate: (A^3 - (3n/4+2) A) 1 <= 0 certifies rho <= sqrt(3n/4+2)
    let n = ladder16.n();
    let k = 3.0 * n as f64 / 4.0 + 2.0;
    let cert = certify_bound(
        &ladder16,
        BoundCertificate::ones(vec![1.0, 0.0, -k, 0.0], n, 0.0),
    )
    .unwrap();
    println!(
        "\ncubic certificate on the n=16 ladder: verdict {:?}",
        cert.verdict.unwrap()
    );
    println!(
        "  rho = {:.6} <= sqrt(3n/4+2) = {:.6}",
        spectral_radius(&ladder16).unwrap().value,
        k.sqrt()
    );

    // quadratic certificate for a pendant family
    let host = attach_pendants(&ladder16, 0, 4).unwrap();
    let m = host.n();
    let r = (m + 4 - 4) as f64 / 2.0;
    let cert = certify_bound(&host, BoundCertificate::ones(vec![1.0, -2.0, 0.0], m, r)).unwrap();
    println!("\npendant certificate: verdict {:?}", cert.verdict.unwrap());

    println!("\nclosed-form bounds at n = 20:");
    for (kind, eps) in [
        (BoundKind::EdgeMostEven, 0),
        (BoundKind::MaxTwoConnected, 0),
        (BoundKind::PendantAttached, 4),
        (BoundKind::Star, 0),
    ] {
        println!(
            "  {kind:?} (eps={eps}): {:.6}",
            closed_form_bound(kind, 20, eps).unwrap()
        );
    }
}
