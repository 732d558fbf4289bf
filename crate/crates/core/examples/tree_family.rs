//! Recognizes the trees with γ_L = n/2: prints the black/white certificate of the
//! reference member and compares the recognizer with the exact solver on every
//! tree of order 8 without open twins.
//!
//!     cargo run --example tree_family

use locdom::domination::gamma_l_exact;
use locdom::enumerate::free_trees;
use locdom::extremal::{gen_family_t_tree, is_in_family_t, sample_family_t_tree};
use locdom::graph::{find_twins, TwinKind};
use locdom::graph6::to_graph6;

fn main() {
    let t = sample_family_t_tree();
    let cert = is_in_family_t(&t).unwrap().expect("reference tree is a member");
    println!(
        "reference tree: n = {}, black {}, white {}",
        t.order(),
        cert.black(),
        cert.white()
    );

    for seed in 0..3 {
        let t = gen_family_t_tree(14, seed).unwrap();
        println!(
            "seed {seed}: {} gamma_L = {}",
            to_graph6(&t).unwrap(),
            gamma_l_exact(&t).value
        );
    }

    let trees: Vec<_> = free_trees(8)
        .into_iter()
        .filter(|t| find_twins(t).iter().all(|p| p.kind != TwinKind::Open))
        .collect();
    let mut members = 0;
    for t in &trees {
        let extremal = 2 * gamma_l_exact(t).value == t.order();
        let accepted = is_in_family_t(t).unwrap().is_some();
        assert_eq!(extremal, accepted, "{}", to_graph6(t).unwrap());
        members += accepted as usize;
    }
    println!(
        "order 8: {} trees without open twins, {} with gamma_L = n/2, all recognized",
        trees.len(),
        members
    );
}
