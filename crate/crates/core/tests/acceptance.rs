//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured values. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; any assertion failure marks the criterion failed.

use guessnum::entropy::{build_lp, solve_lp, verify_gnkaa_chain};
use guessnum::extremal::{
    forbidden_order_bound, saturation_construction, NonEdgeEvidence, Session, Threshold,
};
use guessnum::graph::{canonical_form, disjoint_union, enumerate_graphs, join, Graph};
use guessnum::guessing::{
    count_fixed_points, gn_exact, max_code, merge_strategy_extension, GuessingInstance, Protocol,
};
use guessnum::invariants::gn_bounds;
use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn threshold(p: i64, q: i64) -> Threshold {
    Threshold::new(p, q)
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

#[test]
fn criterion_01_complete_graphs() {
    let start = Instant::now();
    for n in 2..=5usize {
        for s in [2u32, 3] {
            let inst = GuessingInstance::new(Graph::complete(n).unwrap(), s).unwrap();
            let gn = gn_exact(&inst).unwrap();
            assert_eq!(
                gn.max_fixed_points,
                (s as u64).pow(n as u32 - 1),
                "gn(K_{n}, {s}) must be {}",
                n - 1
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "budget: {elapsed:?} >= 10 s");
    println!("ACCEPTANCE 1 PASS: gn(K_n, s) = n - 1 for n in 2..=5, s in {{2, 3}} ({elapsed:?})");
}

#[test]
fn criterion_02_sandwich_on_all_7_vertex_graphs() {
    let start = Instant::now();
    let graphs = enumerate_graphs(7, 8).unwrap();
    assert_eq!(graphs.len(), 1044);
    for g in &graphs {
        let b = gn_bounds(g);
        let inst = GuessingInstance::new(g.clone(), 2).unwrap();
        let size = max_code(&inst).unwrap().size() as u64;
        let lower = 2u64.pow(b.gn_lower as u32);
        let upper = 2u64.pow(b.gn_upper as u32);
        assert!(
            lower <= size && size <= upper,
            "sandwich fails on {g:?}: {lower} <= {size} <= {upper}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30 * 60, "budget: {elapsed:?} >= 30 min");
    println!("ACCEPTANCE 2 PASS: s^(n-cp) <= |max code| <= s^(n-alpha) on all 1044 graphs, n = 7, s = 2 ({elapsed:?})");
}

#[test]
fn criterion_03_extremal_theorem() {
    let start = Instant::now();
    let mut session = Session::new();
    for n in 3..=7usize {
        for a in 2..=(n - 1) {
            let (m, family) = session.ex_search(n, 2, threshold(a as i64, 1)).unwrap();
            let k = a - 1;
            let expected_m = n * (n - 1) / 2 - (n - k) * (n - k - 1) / 2;
            assert_eq!(m, expected_m, "ex({n}, 2, gn >= {a})");
            let construction =
                join(&Graph::complete(k).unwrap(), &Graph::empty(n - k).unwrap()).unwrap();
            assert_eq!(
                family,
                vec![canonical_form(&construction).unwrap()],
                "family at n = {n}, a = {a} must be the single join construction"
            );
        }
    }
    let elapsed = start.elapsed();
    println!("ACCEPTANCE 3 PASS: ex(n, 2, gn >= a) = C(n,2) - C(n-k,2) with unique extremal graph, n <= 7 ({elapsed:?})");
}

#[test]
fn criterion_04_computer_verified_saturation_values() {
    let start = Instant::now();
    let mut session = Session::new();
    let (m6, _) = session.sat_search(6, 2, threshold(4, 1)).unwrap();
    assert_eq!(m6, 10, "sat(6, gn >= 4) at s = 2");
    let (m7, _) = session.sat_search(7, 2, threshold(4, 1)).unwrap();
    assert_eq!(m7, 9, "sat(7, gn >= 4) at s = 2");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60 * 60, "budget: {elapsed:?} >= 60 min");
    println!("ACCEPTANCE 4 PASS: sat(6, 2, gn >= 4) = 10 and sat(7, 2, gn >= 4) = 9 ({elapsed:?})");
}

#[test]
fn criterion_05_small_saturation_closed_forms() {
    let start = Instant::now();
    let mut session = Session::new();
    // sat(n, gn >= 2) = n - 1 with the star as the only witness
    for n in 2..=7usize {
        let (m, family) = session.sat_search(n, 2, threshold(2, 1)).unwrap();
        assert_eq!(m, n - 1, "sat({n}, gn >= 2)");
        assert_eq!(
            family,
            vec![canonical_form(&Graph::star(n - 1).unwrap()).unwrap()],
            "Sat({n}, gn >= 2) must be the star alone"
        );
    }
    // sat(n, gn >= n-1) = C(n,2) - 1, witnessed by K_n minus one edge
    for n in 3..=6usize {
        let (m, family) = session.sat_search(n, 2, threshold(n as i64 - 1, 1)).unwrap();
        assert_eq!(m, n * (n - 1) / 2 - 1, "sat({n}, gn >= {})", n - 1);
        let almost_complete = Graph::complete(n).unwrap().delete_edge(0, 1).unwrap();
        assert_eq!(family, vec![canonical_form(&almost_complete).unwrap()]);
    }
    let elapsed = start.elapsed();
    println!("ACCEPTANCE 5 PASS: sat(n, 2, gn >= 2) = n - 1 (stars) and sat(n, 2, gn >= n-1) = C(n,2) - 1 ({elapsed:?})");
}

#[test]
fn criterion_06_entropy_lp_odd_cycles() {
    let start = Instant::now();
    let (c5, _) = solve_lp(&build_lp(&Graph::cycle(5).unwrap()).unwrap()).unwrap();
    assert_eq!(c5, rat(5, 2), "LP optimum of C_5");
    let (c7, _) = solve_lp(&build_lp(&Graph::cycle(7).unwrap()).unwrap()).unwrap();
    assert!(c7 <= rat(7, 2), "LP optimum of C_7 is {c7}, above 7/2");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "budget: {elapsed:?} >= 1 min");
    println!("ACCEPTANCE 6 PASS: LP(C_5) = 5/2 exactly, LP(C_7) = {c7} <= 7/2 ({elapsed:?})");
}

#[test]
fn criterion_07_entropy_lp_kstar33_and_chain() {
    let start = Instant::now();
    let model = build_lp(&Graph::k_star(3).unwrap()).unwrap();
    assert_eq!(model.counts().set_variables, 127);
    let (optimum, certificate) = solve_lp(&model).unwrap();
    assert!(optimum <= rat(11, 3), "LP optimum of K*_33 is {optimum}, above 11/3");
    certificate.validate(&Graph::k_star(3).unwrap()).unwrap();

    let trace = verify_gnkaa_chain(3).unwrap();
    assert_eq!(trace.bound, rat(11, 3));
    assert_eq!(trace.steps.len(), 6);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 5 * 60, "budget: {elapsed:?} >= 5 min");
    println!("ACCEPTANCE 7 PASS: LP(K*_33) = {optimum} <= 11/3 and the 6-step chain certificate validates ({elapsed:?})");
}

#[test]
fn criterion_08_strategy_extension_multiplies_by_s() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20_26);
    for s in [2u32, 3] {
        for round in 0..100 {
            let n = rng.random_range(2..=5);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let base = Graph::from_edges(n, &edges).unwrap();
            let base_inst = GuessingInstance::new(base.clone(), s).unwrap();

            // arbitrary valid protocol on the base graph
            let mut inner = Protocol::constant_zero(&base_inst);
            for table in &mut inner.tables {
                for slot in table.iter_mut() {
                    *slot = rng.random_range(0..s);
                }
            }
            let inner_count = count_fixed_points(&inner, &base_inst).unwrap();

            let lifted = base.add_dominating_vertex().unwrap();
            let dominating = lifted.n() - 1;
            let witness = 0; // any vertex: N[w] is inside N[dominating]
            let extended = merge_strategy_extension(&lifted, dominating, witness, &inner).unwrap();
            let lifted_inst = GuessingInstance::new(lifted, s).unwrap();
            let extended_count = count_fixed_points(&extended, &lifted_inst).unwrap();
            assert_eq!(
                extended_count,
                s as u64 * inner_count,
                "round {round}, s = {s}, base {base:?}"
            );
        }
    }
    let elapsed = start.elapsed();
    println!("ACCEPTANCE 8 PASS: dominating-vertex extension multiplies fixed points by exactly s, 100 random graphs, s in {{2, 3}} ({elapsed:?})");
}

#[test]
fn criterion_09_saturation_of_constructions() {
    let start = Instant::now();
    let mut session = Session::new();

    // C_5 + E_2 is (gn >= 3)-saturated with clique covers of size n - 3 = 4
    let g = saturation_construction(7, 2).unwrap();
    let report = session.is_gn_saturated(&g, 2, threshold(3, 1)).unwrap();
    assert!(report.saturated(), "C_5 + E_2 must be saturated: {:?}", report.reason);
    assert_eq!(report.per_nonedge.len(), g.non_edges().len());
    for check in &report.per_nonedge {
        match &check.evidence {
            NonEdgeEvidence::CliqueCover(cover) => assert_eq!(cover.classes.len(), 4),
            other => panic!("expected clique-cover certificate, got {other:?}"),
        }
    }
    report.validate().unwrap();

    // K*_33 + E_1 is (gn >= 4)-saturated with covers of size n - a - 1 = 4
    let g = saturation_construction(8, 3).unwrap();
    let report = session.is_gn_saturated(&g, 2, threshold(4, 1)).unwrap();
    assert!(report.saturated(), "K*_33 + E_1 must be saturated: {:?}", report.reason);
    for check in &report.per_nonedge {
        match &check.evidence {
            NonEdgeEvidence::CliqueCover(cover) => assert_eq!(cover.classes.len(), 4),
            other => panic!("expected clique-cover certificate, got {other:?}"),
        }
    }
    report.validate().unwrap();
    let elapsed = start.elapsed();
    println!("ACCEPTANCE 9 PASS: C_5 + E_2 and K*_33 + E_1 saturated with validating clique covers of sizes 4 and 4 ({elapsed:?})");
}

#[test]
fn criterion_10_forbidden_family() {
    let start = Instant::now();
    let mut session = Session::new();
    let family = session.minimal_forbidden_family(2, threshold(2, 1), 5).unwrap();
    let k2 = Graph::complete(2).unwrap();
    let expected: Vec<_> = {
        let mut v = vec![
            canonical_form(&Graph::complete(3).unwrap()).unwrap(),
            canonical_form(&disjoint_union(&k2, &k2).unwrap()).unwrap(),
        ];
        v.sort();
        v
    };
    assert_eq!(family.members.iter().cloned().collect::<Vec<_>>(), expected);

    let mono = session.check_family_monotonicity(2, threshold(2, 1), threshold(3, 1), 6).unwrap();
    assert!(mono.holds, "every member at threshold 3 contains one at threshold 2");
    assert!(!mono.witnesses.is_empty());
    let elapsed = start.elapsed();
    println!("ACCEPTANCE 10 PASS: F_{{2,2}} = {{K_3, 2K_2}} exactly; family monotonicity holds up to n = 6 ({elapsed:?})");
}

#[test]
fn criterion_11_property_suite_exhaustive_small() {
    let start = Instant::now();

    // superadditivity with equality: |max_code(G1 + G2)| = |max_code(G1)| * |max_code(G2)|
    for n1 in 1..=4usize {
        for n2 in 1..=(5 - n1) {
            for g1 in enumerate_graphs(n1, 8).unwrap() {
                for g2 in enumerate_graphs(n2, 8).unwrap() {
                    let t1 = max_code(&GuessingInstance::new(g1.clone(), 2).unwrap()).unwrap().size();
                    let t2 = max_code(&GuessingInstance::new(g2.clone(), 2).unwrap()).unwrap().size();
                    let union = disjoint_union(&g1, &g2).unwrap();
                    let t = max_code(&GuessingInstance::new(union, 2).unwrap()).unwrap().size();
                    assert_eq!(t, t1 * t2, "product equality on {g1:?} + {g2:?}");
                }
            }
        }
    }

    for n in 1..=5usize {
        for g in enumerate_graphs(n, 8).unwrap() {
            let inst = GuessingInstance::new(g.clone(), 2).unwrap();
            let size = max_code(&inst).unwrap().size() as u64;

            // edge-addition monotonicity
            for (u, v) in g.non_edges() {
                let bigger = g.add_edge(u, v).unwrap();
                let bigger_size =
                    max_code(&GuessingInstance::new(bigger, 2).unwrap()).unwrap().size() as u64;
                assert!(bigger_size >= size, "adding ({u},{v}) to {g:?} shrank the code");
            }

            // vertex-deletion sandwich
            for v in g.vertices() {
                let smaller = g.delete_vertex(v).unwrap();
                let smaller_size =
                    max_code(&GuessingInstance::new(smaller, 2).unwrap()).unwrap().size() as u64;
                assert!(smaller_size <= size && size <= 2 * smaller_size,
                    "vertex-deletion sandwich fails at {g:?} minus {v}");
            }

            // n <= 2 alpha' + alpha
            let b = gn_bounds(&g);
            assert!(n <= 2 * b.alpha_prime + b.alpha, "matching bound fails on {g:?}");
        }
    }
    let elapsed = start.elapsed();
    println!("ACCEPTANCE 11 PASS: product equality, edge monotonicity, deletion sandwich, n <= 2a' + a, exhaustive n <= 5 at s = 2 ({elapsed:?})");
}

#[test]
fn criterion_12_order_bound_arithmetic() {
    assert_eq!(forbidden_order_bound(2, 1).unwrap(), BigUint::from(65540u32));
    println!("ACCEPTANCE 12 PASS: forbidden-subgraph order bound at (2, 1) is exactly 65540");
}
