//! Structural properties of the graph layer, exhaustive at small orders and
//! randomized where the spec calls for sampling.

use guessnum::graph::{
    canonical_form, decode_graph6, encode_graph6, enumerate_graphs, join, Graph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn join_edge_count_formula_exhaustive() {
    // m(G (+) H) = m(G) + m(H) + n(G) n(H) over every pair of classes up to 6
    let levels: Vec<Vec<Graph>> = (0..=6).map(|n| enumerate_graphs(n, 8).unwrap()).collect();
    for g_level in &levels {
        for h_level in &levels {
            for g in g_level {
                for h in h_level {
                    let joined = join(g, h).unwrap();
                    assert_eq!(joined.m(), g.m() + h.m() + g.n() * h.n());
                    assert_eq!(joined.n(), g.n() + h.n());
                }
            }
        }
    }
}

#[test]
fn canonical_form_is_permutation_invariant_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.random_range(1..=8);
        let g = random_graph(&mut rng, n);
        let base = canonical_form(&g).unwrap();

        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.random_range(0..=i));
        }
        let relabeled = g.apply_permutation(&perm);
        assert_eq!(canonical_form(&relabeled).unwrap(), base, "{g:?} under {perm:?}");
    }
}

#[test]
fn graph6_round_trip_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let n = rng.random_range(0..=10);
        let g = random_graph(&mut rng, n);
        assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn enumeration_counts_match_known_sequence() {
    // 1, 2, 4, 11, 34, 156, 1044 isomorphism classes
    let expected = [1usize, 2, 4, 11, 34, 156, 1044];
    for (n, &count) in (1..=7).zip(&expected) {
        assert_eq!(enumerate_graphs(n, 8).unwrap().len(), count, "n = {n}");
    }
}
