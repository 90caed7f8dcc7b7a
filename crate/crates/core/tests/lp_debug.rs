use pushpull_core::graph_models::{gen_complete_capacitated, CapacityDistribution};
use pushpull_core::oracles::{enumerate_trees, tree_pack_lp};
use pushpull_core::rng::DrawStream;

#[test]
fn probe_violation_magnitude() {
    let mut stream = DrawStream::new(4242);
    let mut tested = 0;
    let mut worst = 0.0f64;
    while tested < 60 {
        let n = 3 + (stream.unit() * 4.0) as usize;
        let seed = (stream.unit() * 1e9) as u64;
        let caps = CapacityDistribution::Discrete(
            vec![1.0, 2.0, 3.0],
            vec![1.0 / 3.0, 1.0 / 3.0, 1.0 - 2.0 / 3.0],
        );
        let g = gen_complete_capacitated(n, &caps, seed).unwrap();
        let trees = enumerate_trees(&g, None).unwrap();
        if trees.trees.is_empty() { continue; }
        let packed = tree_pack_lp(&g, &trees).unwrap();
        let mut usage: std::collections::BTreeMap<(u32, u32), f64> = Default::default();
        for &(idx, w) in &packed.weights {
            for &e in &trees.trees[idx] {
                *usage.entry(e).or_insert(0.0) += w;
            }
        }
        for (&(i, j), &u) in &usage {
            let c = g.capacity(i, j);
            if u - c > worst { worst = u - c; println!("n={n} seed={seed} edge=({i},{j}) usage={u} cap={c} excess={}", u - c); }
        }
        tested += 1;
    }
    println!("worst excess = {worst:e}");
}
