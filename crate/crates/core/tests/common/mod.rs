#![allow(dead_code)]

use cutspace::generate::random_small;
use cutspace::{Graph, Weight};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn int(x: i64) -> Weight {
    Weight::from_integer(x)
}

pub fn p3() -> Graph {
    Graph::unit(3, &[(0, 1), (1, 2)]).unwrap()
}

pub fn tri() -> Graph {
    Graph::unit(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
}

pub fn k4() -> Graph {
    Graph::unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn k23() -> Graph {
    Graph::unit(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
}

pub fn fixtures() -> Vec<Graph> {
    vec![
        p3(),
        tri(),
        k4(),
        k23(),
        Graph::unit(2, &[(0, 1)]).unwrap(),
        Graph::unit(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
    ]
}

/// Weight sets: unit weights produce many ties, the others exercise exact
/// fractions.
pub fn weight_sets() -> Vec<Vec<Weight>> {
    vec![
        vec![int(1)],
        vec![int(1), int(2), int(3)],
        vec![Weight::new(1, 2), int(1), Weight::new(3, 2), Weight::new(1, 3)],
    ]
}

/// Seeded corpus of random connected graphs with `lo..=hi` vertices.
pub fn corpus(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sets = weight_sets();
    (0..count)
        .map(|i| {
            let n = lo + i % (hi - lo + 1);
            random_small(&mut rng, n, &sets[i % sets.len()]).unwrap()
        })
        .collect()
}
