mod common;

use common::*;
use cutspace::oracle::all_cuts;
use cutspace::{cut_from_side, is_bond, rank, xor, BitSet, Cut, CutFamily, Graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn vertex_cut(g: &Graph, x: usize) -> Cut {
    Cut::from_vertices(g, &[x]).unwrap()
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..=10, any::<u64>()).prop_map(|(n, seed)| corpus(seed, 1, n, n).pop().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cut_is_xor_of_vertex_cuts((g, mask) in arb_graph().prop_flat_map(|g| {
        let n = g.n();
        (Just(g), 1u64..(1u64 << n) - 1)
    })) {
        let n = g.n();
        let side = BitSet::from_indices(n, (0..n).filter(|v| mask >> v & 1 == 1));
        let direct = cut_from_side(&g, &side).unwrap();
        let mut acc: Option<Cut> = None;
        for x in side.iter() {
            acc = xor(&g, acc.as_ref(), Some(&vertex_cut(&g, x))).unwrap();
        }
        let acc = acc.unwrap();
        prop_assert_eq!(&acc, &direct);
        prop_assert_eq!(acc.cutset(), direct.cutset());
        prop_assert_eq!(cut_from_side(&g, &side.complement()).unwrap(), direct);
    }

    #[test]
    fn xor_is_symmetric_difference_of_cutsets((g, a, b) in arb_graph().prop_flat_map(|g| {
        let full = (1u64 << g.n()) - 1;
        (Just(g), 1..full, 1..full)
    })) {
        let n = g.n();
        let mk = |m: u64| cut_from_side(&g, &BitSet::from_indices(n, (0..n).filter(|v| m >> v & 1 == 1))).unwrap();
        let (ca, cb) = (mk(a), mk(b));
        let mut expect = ca.cutset().clone();
        expect.xor_with(cb.cutset());
        match xor(&g, Some(&ca), Some(&cb)).unwrap() {
            None => prop_assert!(expect.is_empty()),
            Some(c) => prop_assert_eq!(c.cutset(), &expect),
        }
    }
}

#[test]
fn vertex_stars_span_the_cut_space() {
    for g in corpus(11, 100, 2, 10) {
        let n = g.n();
        for x0 in 0..n {
            let fam = CutFamily::from_cuts(&g, (0..n).filter(|&x| x != x0).map(|x| vertex_cut(&g, x))).unwrap();
            assert_eq!(rank(&fam), n - 1);
            assert!(fam.is_basis());
        }
        let all = CutFamily::from_cuts(&g, (0..n).map(|x| vertex_cut(&g, x))).unwrap();
        assert_eq!(rank(&all), n - 1);
    }
}

#[test]
fn spanning_tree_cuts_form_a_basis() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for g in corpus(13, 100, 2, 10) {
        let n = g.n();
        // Random spanning tree: Kruskal over shuffled edges.
        let mut order: Vec<usize> = (0..g.m()).collect();
        order.shuffle(&mut rng);
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(c: &mut Vec<usize>, x: usize) -> usize {
            if c[x] != x {
                let r = find(c, c[x]);
                c[x] = r;
            }
            c[x]
        }
        let mut tree = Vec::new();
        for i in order {
            let e = g.edge(i);
            let (a, b) = (find(&mut comp, e.u), find(&mut comp, e.v));
            if a != b {
                comp[a] = b;
                tree.push((e.u, e.v));
            }
        }
        assert_eq!(tree.len(), n - 1);
        let fam = CutFamily::from_cuts(
            &g,
            tree.iter().map(|&(u, v)| {
                // side of u after deleting uv from the tree
                let mut side = BitSet::new(n);
                side.insert(u);
                let mut stack = vec![u];
                while let Some(x) = stack.pop() {
                    for &(a, b) in &tree {
                        for (p, q) in [(a, b), (b, a)] {
                            if p == x && !(p == u && q == v) && !side.contains(q) {
                                side.insert(q);
                                stack.push(q);
                            }
                        }
                    }
                }
                cut_from_side(&g, &side).unwrap()
            }),
        )
        .unwrap();
        assert_eq!(rank(&fam), n - 1);
    }
}

#[test]
fn bond_iff_no_smaller_cutset_inside() {
    for g in corpus(14, 60, 2, 8).into_iter().chain(fixtures()) {
        let cat = all_cuts(&g).unwrap();
        for c in cat.cuts() {
            let contains_other = cat
                .cuts()
                .iter()
                .any(|d| d != c && d.cutset().is_subset(c.cutset()));
            assert_eq!(is_bond(&g, c), !contains_other, "{c:?} on {g:?}");
        }
    }
}

#[test]
fn p3_bond_example_by_subset_check() {
    let g = p3();
    let c = Cut::from_vertices(&g, &[0, 2]).unwrap();
    let d = Cut::from_vertices(&g, &[0]).unwrap();
    assert!(d.cutset().is_subset(c.cutset()) && d != c);
    assert!(!is_bond(&g, &c));
}
