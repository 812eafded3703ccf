//! The entropy LP against the exact search: soundness and the structural
//! collapse/lift identities.

use guessnum::entropy::{build_lp, solve_lp};
use guessnum::graph::{enumerate_graphs, Graph};
use guessnum::guessing::{max_code, GuessingInstance};
use guessnum::invariants::gn_bounds;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Signed;

/// `log_s t <= p/q` decided exactly: `t^q <= s^p`.
fn log_within(t: u64, s: u32, bound: &BigRational) -> bool {
    assert!(!bound.is_negative());
    let p: u32 = bound.numer().try_into().expect("small numerator");
    let q: u32 = bound.denom().try_into().expect("small denominator");
    BigUint::from(t).pow(q) <= BigUint::from(s).pow(p)
}

#[test]
fn lp_is_sound_against_exact_search_up_to_5() {
    for n in 1..=5 {
        for g in enumerate_graphs(n, 8).unwrap() {
            let (optimum, _) = solve_lp(&build_lp(&g).unwrap()).unwrap();
            for s in [2u32, 3] {
                let inst = GuessingInstance::new(g.clone(), s).unwrap();
                let size = max_code(&inst).unwrap().size() as u64;
                assert!(
                    log_within(size, s, &optimum),
                    "LP {optimum} below log_{s}({size}) on {g:?}"
                );
            }
        }
    }
}

#[test]
fn isolated_vertices_do_not_change_the_optimum() {
    for n in 1..=4 {
        for g in enumerate_graphs(n, 8).unwrap() {
            let (base, _) = solve_lp(&build_lp(&g).unwrap()).unwrap();
            let extended = g.append_vertex(0).unwrap();
            let (lifted, _) = solve_lp(&build_lp(&extended).unwrap()).unwrap();
            assert_eq!(base, lifted, "{g:?}");
        }
    }
}

#[test]
fn dominating_vertex_adds_exactly_one_up_to_4() {
    let one = BigRational::from_integer(1.into());
    for n in 1..=4 {
        for g in enumerate_graphs(n, 8).unwrap() {
            let (base, _) = solve_lp(&build_lp(&g).unwrap()).unwrap();
            let extended = g.add_dominating_vertex().unwrap();
            let (lifted, _) = solve_lp(&build_lp(&extended).unwrap()).unwrap();
            assert_eq!(lifted, &base + &one, "{g:?}");
        }
    }
}

#[test]
fn lp_lies_inside_the_sandwich_up_to_5() {
    for n in 1..=5 {
        for g in enumerate_graphs(n, 8).unwrap() {
            let (optimum, _) = solve_lp(&build_lp(&g).unwrap()).unwrap();
            let b = gn_bounds(&g);
            assert!(
                optimum >= BigRational::from_integer((b.gn_lower as i64).into()),
                "LP below n - cp on {g:?}"
            );
            assert!(
                optimum <= BigRational::from_integer((b.gn_upper as i64).into()),
                "LP above n - alpha on {g:?}"
            );
        }
    }
}

#[test]
fn certificates_validate_on_their_graphs() {
    for g in [Graph::cycle(5).unwrap(), Graph::k_star(2).unwrap(), Graph::star(4).unwrap()] {
        let (_, certificate) = solve_lp(&build_lp(&g).unwrap()).unwrap();
        certificate.validate(&g).unwrap();
    }
}
