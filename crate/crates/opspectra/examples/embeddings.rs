//! Outerplane embeddings: Hamilton boundary, chords, inner faces, and
//! the DOT export with polygon layout hints.
//!
//! Run with `cargo run --example embeddings`.

use opspectra::constructions::quadrangulation;
use opspectra::embedding::embed;
use opspectra::graph::Graph;
use opspectra::io::embedding_to_dot;

fn main() {
    // an octagon with one long chord: faces of length 4 and 6
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.push((0, 3));
    let g = Graph::from_edges(8, &edges).unwrap();
    let e = embed(&g).unwrap();
    println!("octagon + chord (0,3):");
    println!("  boundary {:?}", e.outer());
    println!("  chords   {:?}", e.chords());
    for f in e.inner_faces() {
        println!("  face {:?} (length {})", f, f.len());
    }
    println!("  all faces quad: {}", e.all_faces_quad());
    println!("  euler check:    {}", e.euler_check());

    let quad = quadrangulation(10, &[(0, 3), (0, 5), (0, 7)]).unwrap();
    let e = embed(&quad).unwrap();
    println!("\nfan quadrangulation of the 10-gon:");
    println!("  faces: {:?}", e.inner_faces());
    println!("\nDOT with layout hints:\n{}", embedding_to_dot(&e));
}
