//! The named graph families and their closed-form invariants.
//!
//! Run with `cargo run --example families`.

use opspectra::constructions::{g1, g2, h_case, q_graph, quad_book, quadrangulation, star};
use opspectra::spectra::spectral_radius;

fn main() {
    println!("stars: rho(star(n)) = sqrt(n-1)");
    for n in [5usize, 10, 25, 55] {
        let rho = spectral_radius(&star(n)).unwrap().value;
        println!(
            "  n={n:<3} rho={rho:.8}  sqrt(n-1)={:.8}",
            ((n - 1) as f64).sqrt()
        );
    }

    println!("\nquad books: rho = 1 + sqrt(s), order 2s+2, size 3s+1");
    for s in 1..=6 {
        let b = quad_book(s).unwrap();
        let rho = spectral_radius(&b).unwrap().value;
        println!(
            "  s={s} n={} m={:<2} rho={rho:.8}  1+sqrt(s)={:.8}",
            b.n(),
            b.m(),
            1.0 + (s as f64).sqrt()
        );
    }

    let q = q_graph();
    println!(
        "\nthree quadrilaterals on a common edge: n={} m={} (not outerplanar)",
        q.n(),
        q.m()
    );

    println!("\npendant families at order 36:");
    for s in 1..=4 {
        let g = g1(36, s).unwrap();
        println!(
            "  g1(36,{s}): m={} rho={:.6}",
            g.m(),
            spectral_radius(&g).unwrap().value
        );
    }
    for s in [1, 5, 8] {
        let g = g2(36, s).unwrap();
        println!(
            "  g2(36,{s}): m={} rho={:.6}",
            g.m(),
            spectral_radius(&g).unwrap().value
        );
    }

    println!("\nthe five order-10 maximal 2-connected graphs:");
    for i in 1..=5 {
        let h = h_case(i).unwrap();
        println!(
            "  case {i}: rho={:.6} edges {:?}",
            spectral_radius(&h).unwrap().value,
            h.edges()
        );
    }

    let ladder = quadrangulation(12, &[(1, 10), (2, 9), (3, 8), (4, 7)]).unwrap();
    println!(
        "\nladder quadrangulation n=12: m={} (= 3n/2 - 2)",
        ladder.m()
    );
}
