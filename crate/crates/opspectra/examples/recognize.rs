//! Recognizers in action: outerplanarity by two routes, maximality, and
//! the structural decomposition of maximal graphs.
//!
//! Run with `cargo run --example recognize`.

use opspectra::constructions::{attach_pendants, h_case, star};
use opspectra::graph::{complete, complete_bipartite, cycle, Graph};
use opspectra::recognition::{
    is_maximal_bip_outerplanar, is_outerplanar_checked, structural_decompose,
};

fn main() {
    let samples: Vec<(&str, Graph)> = vec![
        ("K4", complete(4)),
        ("K2,3", complete_bipartite(2, 3)),
        ("C6", cycle(6)),
        ("C4", cycle(4)),
        ("star(7)", star(7)),
        ("ladder of four squares", h_case(1).unwrap()),
    ];
    for (name, g) in &samples {
        let op = is_outerplanar_checked(g).unwrap();
        let bip = g.bipartition().is_some();
        let max = if op && bip {
            is_maximal_bip_outerplanar(g).unwrap()
        } else {
            false
        };
        println!("{name:<24} outerplanar={op:<5} bipartite={bip:<5} maximal={max}");
    }

    // a composite maximal graph: two squares glued at a vertex, plus a
    // pendant at the shared vertex
    let core = cycle(4).k_sum(&cycle(4), &[0], &[0]).unwrap();
    let g = attach_pendants(&core, 0, 1).unwrap();
    let s = structural_decompose(&g).unwrap();
    println!("\ncomposite example: {:?}", g);
    println!("  kind           {:?}", s.kind);
    println!("  core blocks    {}", s.blocks.len());
    println!("  cut vertices   {:?}", s.cut_vertices);
    println!("  pendant roots  {:?}", s.pendant_roots);
    println!("  boundary pairs {:?}", s.ebo_pairs);
}
