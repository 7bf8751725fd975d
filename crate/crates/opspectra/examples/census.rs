//! Exhaustive censuses: dissection counts, isomorphism classes, and
//! edge-count histograms with the structural ceiling.
//!
//! Run with `cargo run --release --example census`.

use opspectra::enumeration::{
    census_edge_counts, dissection_census, enumerate, maximal_by_structure, quad_dissection_plans,
    EnumFamily, EnumSpec,
};

fn main() {
    println!("quadrangulations of the fixed n-gon (labeled / classes):");
    for n in (4..=14).step_by(2) {
        let labeled = quad_dissection_plans(n).unwrap().len();
        let classes = dissection_census(n, true).unwrap().len();
        println!("  n={n:<3} labeled={labeled:<6} classes={classes}");
    }

    println!("\nconnected bipartite outerplanar classes and the edge ceiling:");
    for n in 1..=8 {
        let census =
            census_edge_counts(&EnumSpec::new(EnumFamily::BipartiteOuterplanar, n)).unwrap();
        let classes: usize = census.histogram.values().sum();
        println!(
            "  n={n}: {classes:>4} classes, max m = {} (ceiling {}), {} extremal, histogram {:?}",
            census.max_m, census.bound, census.extremal_classes, census.histogram
        );
    }

    println!("\nmaximal bipartite outerplanar classes, two independent generators:");
    for n in 1..=8 {
        let filtered = enumerate(&EnumSpec::new(EnumFamily::MaximalBipOuterplanar, n))
            .unwrap()
            .graphs
            .len();
        let structured = maximal_by_structure(n).unwrap().len();
        println!(
            "  n={n}: filter={filtered:<3} structure={structured:<3} agree={}",
            filtered == structured
        );
    }
}
