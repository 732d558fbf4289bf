//! The upper-bound constructions on sample graphs: the two-thirds construction
//! with its trace, the vertex-cover construction, and the split and co-bipartite
//! case analyses on random members of those classes.
//!
//!     cargo run --example constructions

use locdom::bounds::{cobipartite_case_analysis, construct_ld_two_thirds, ld_from_vertex_cover, split_case_analysis};
use locdom::domination::gamma_l_exact;
use locdom::graph::{classify, split_partition, two_coloring};
use locdom::sample::{random_twin_free_cobipartite, random_twin_free_split};
use locdom::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    for (name, g) in [("P4", Graph::path(4)), ("C7", Graph::cycle(7)), ("P9", Graph::path(9))] {
        let t = construct_ld_two_thirds(&g).unwrap();
        println!("{name}: S = {}, D = {}, X_D = {}", t.s0, t.d, t.sig.x_set);
        println!(
            "  candidates {} (size {}) and {} (size {}), chose {}; bound {}",
            t.candidate_a,
            t.candidate_a.len(),
            t.candidate_b,
            t.candidate_b.len(),
            t.chosen,
            2 * g.order() / 3
        );
        let vc = ld_from_vertex_cover(&g).unwrap();
        println!("  vertex cover {} (size {})", vc.set, vc.size());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in [6, 9, 12] {
        let g = random_twin_free_split(n, &mut rng);
        let part = split_partition(&g).unwrap();
        let (case, set) = split_case_analysis(&g, part.clique, part.independent).unwrap();
        println!(
            "split n = {n}: clique {}, case {case:?}, set {} (size {}, gamma_L {})",
            part.clique,
            set,
            set.len(),
            gamma_l_exact(&g).value
        );

        let g = random_twin_free_cobipartite(n, &mut rng);
        assert!(classify(&g).is_cobipartite);
        let (first, second) = two_coloring(&g.complement()).unwrap();
        let (case, set) = cobipartite_case_analysis(&g, first, second).unwrap();
        println!(
            "co-bipartite n = {n}: parts {} {}, case {case:?}, set {} (size {}, gamma_L {})",
            first,
            second,
            set,
            set.len(),
            gamma_l_exact(&g).value
        );
    }
}
