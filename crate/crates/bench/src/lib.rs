//! Shared instances for the benchmarks.

use hyperaco::instances::{gen_instance1, gen_random};
use hyperaco::Hypergraph;

/// Named instances of growing size: random weighted hypergraphs plus one
/// complete 3-uniform planted instance.
pub fn fixtures() -> Vec<(String, Hypergraph)> {
    let mut out: Vec<(String, Hypergraph)> = [(8, 12), (20, 40), (60, 150)]
        .into_iter()
        .map(|(n, m)| (format!("random_n{n}_m{m}"), gen_random(n, m, 4, true, 42).expect("valid parameters")))
        .collect();
    let planted = gen_instance1(12, 3, 42, 10).expect("valid parameters");
    out.push(("instance1_n12_r3".into(), planted.hypergraph));
    out
}

/// Small enough for exhaustive search.
pub fn oracle_fixture() -> Hypergraph {
    gen_random(10, 20, 4, true, 7).expect("valid parameters")
}
