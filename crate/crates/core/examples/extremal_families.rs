//! The graphs attaining γ_L = n/2: H_k, A_k and their joins, coronas, and a host
//! with attached gadgets. Each row prints the exact γ_L next to n/2.
//!
//!     cargo run --example extremal_families

use locdom::domination::{gamma_l_exact, is_locating_dominating, min_dominating_exact};
use locdom::extremal::{
    ak_ld_set, gen_ak, gen_attachable_star, gen_hk, gen_join_of_aks, hk_ld_set, sample_attach_assembly,
};
use locdom::graph::{corona, is_twin_free};
use locdom::Graph;

fn row(name: &str, g: &Graph) {
    let opt = gamma_l_exact(g);
    println!(
        "{name:14} n = {:2}  twin-free {:5}  gamma = {}  gamma_L = {:2}  n/2 = {}",
        g.order(),
        is_twin_free(g),
        min_dominating_exact(g).len(),
        opt.value,
        g.order() as f64 / 2.0
    );
}

fn main() {
    for k in 3..=5 {
        let g = gen_hk(k).unwrap();
        assert!(is_locating_dominating(&g, hk_ld_set(k)).unwrap());
        row(&format!("H_{k}"), &g);
    }
    for k in 2..=6 {
        let g = gen_ak(k).unwrap();
        assert!(is_locating_dominating(&g, ak_ld_set(k)).unwrap());
        row(&format!("A_{k}"), &g);
    }
    for ks in [[2, 2], [2, 3]] {
        row(&format!("A_{} + A_{}", ks[0], ks[1]), &gen_join_of_aks(&ks).unwrap());
    }
    for (name, base) in [
        ("P3", Graph::path(3)),
        ("C4", Graph::cycle(4)),
        ("K1,3", Graph::star(3)),
    ] {
        row(&format!("corona({name})"), &corona(&base).unwrap());
    }
    for p in 1..=3 {
        row(&format!("star gadget {p}"), &gen_attachable_star(p).unwrap().graph);
    }
    let (g, dark) = sample_attach_assembly();
    println!(
        "attached assembly: n = {}, dark set {} is locating-dominating: {}",
        g.order(),
        dark,
        is_locating_dominating(&g, dark).unwrap()
    );
}
