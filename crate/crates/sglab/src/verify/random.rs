use rand::Rng;
use sglab_core::{Sign, SignedGraph};

/// A random connected signed graph on `n` vertices: a random spanning tree,
/// each remaining pair added with a per-graph density, and signs that are
/// either independent with a per-graph bias or (one time in four) induced by
/// random potentials, which gives a balanced graph.
pub fn random_connected_signed<R: Rng>(rng: &mut R, n: usize) -> SignedGraph {
    let mut g = SignedGraph::new(n).expect("order within range");
    let density: f64 = rng.random_range(0.05..0.95);
    let negative_bias: f64 = rng.random();
    let potentials: Option<Vec<bool>> = rng
        .random_bool(0.25)
        .then(|| (0..n).map(|_| rng.random()).collect());
    let sign = |rng: &mut R, u: usize, v: usize| match &potentials {
        Some(p) if p[u] != p[v] => Sign::Negative,
        Some(_) => Sign::Positive,
        None if rng.random_bool(negative_bias) => Sign::Negative,
        None => Sign::Positive,
    };
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    for i in 1..n {
        let (u, v) = (order[i], order[rng.random_range(0..i)]);
        let s = sign(rng, u, v);
        g.add_edge(u, v, s).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.random_bool(density) {
                let s = sign(rng, u, v);
                g.add_edge(u, v, s).unwrap();
            }
        }
    }
    g
}
