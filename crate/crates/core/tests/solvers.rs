mod common;

use common::{mask_of, optimum, weight_of_mask};
use mwdp_core::random;
use mwdp_core::rational::int;
use mwdp_core::{
    brute_force, build_cut_graph, exhaustive_with_separator, local_search, min_st_cut, solve,
    solve_mincut, solve_trivial_b, solve_trivial_c, Instance, Kind, Matrix2x2, Partition,
    SolveOptions,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn kind_from(i: u8) -> Kind {
    [Kind::General, Kind::Oriented, Kind::Symmetric][i as usize % 3]
}

fn family(rng: &mut ChaCha8Rng, draw: fn(&mut ChaCha8Rng) -> Matrix2x2) -> Vec<Matrix2x2> {
    let k = rng.gen_range(1..=3);
    (0..k).map(|_| draw(rng)).collect()
}

fn sample(seed: u64, kind: u8, n: usize, draw: fn(&mut ChaCha8Rng) -> Matrix2x2) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fam = family(&mut rng, draw);
    let p = rng.gen_range(0.2..0.9);
    random::instance(&mut rng, kind_from(kind), n, p, &fam)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn mincut_is_optimal(seed: u64, kind: u8, n in 1usize..=9) {
        let inst = sample(seed, kind, n, random::matrix_a);
        let sol = solve_mincut(&inst).unwrap();
        prop_assert_eq!(&sol.weight, &optimum(&inst));
        prop_assert_eq!(&sol.weight, &weight_of_mask(&inst, mask_of(&sol.partition.x1_flags())));
    }

    #[test]
    fn cut_weights_track_partition_weights(seed: u64, kind: u8, n in 1usize..=7) {
        let inst = sample(seed, kind, n, random::matrix_a);
        let h = build_cut_graph(&inst).unwrap();
        let shift = int(n as i64) * h.theta();
        for mask in 0..1u64 << n {
            let flags: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            let p = Partition::from_x1_flags(&flags);
            let (w, w_star) = h.cut_weights(&h.source_side_of(&p));
            prop_assert_eq!(&w, &-weight_of_mask(&inst, mask));
            prop_assert_eq!(&w_star, &(&w - &shift));
        }
        for (_, _, _, shifted) in h.edges() {
            prop_assert!(shifted >= int(0));
        }
        let cut = min_st_cut(&h).unwrap();
        prop_assert_eq!(-cut.value - shift, optimum(&inst));
    }

    #[test]
    fn trivial_solvers_are_optimal(seed: u64, kind: u8, n in 1usize..=8) {
        let b = sample(seed, kind, n, random::matrix_b);
        prop_assert_eq!(solve_trivial_b(&b).unwrap().weight, optimum(&b));
        let c = sample(seed, kind, n, random::matrix_c);
        prop_assert_eq!(solve_trivial_c(&c).unwrap().weight, optimum(&c));
    }

    #[test]
    fn dispatcher_and_brute_force_are_optimal(seed: u64, kind: u8, n in 1usize..=8) {
        let inst = sample(seed, kind, n, random::matrix);
        let best = optimum(&inst);
        prop_assert_eq!(&solve(&inst, &SolveOptions::default()).unwrap().weight, &best);
        let bf = brute_force(&inst, 26).unwrap();
        prop_assert_eq!(&bf.weight, &best);
        prop_assert_eq!(weight_of_mask(&inst, mask_of(&bf.partition.x1_flags())), best);
    }

    #[test]
    fn local_search_is_bounded_and_consistent(seed: u64, kind: u8, n in 1usize..=8, restarts in 1usize..6) {
        let inst = sample(seed, kind, n, random::matrix);
        let ls = local_search(&inst, seed, restarts);
        prop_assert!(ls.weight <= optimum(&inst));
        prop_assert_eq!(&ls.weight, &weight_of_mask(&inst, mask_of(&ls.partition.x1_flags())));
        prop_assert_eq!(ls, local_search(&inst, seed, restarts));
    }

    #[test]
    fn separator_search_is_exact(seed: u64, kind: u8, n in 1usize..=8, cut in 0usize..=8) {
        let inst = sample(seed, kind, n, random::matrix);
        let sep: Vec<usize> = (0..cut.min(n)).collect();
        let sol = exhaustive_with_separator(&inst, &sep, 26).unwrap();
        prop_assert_eq!(sol.weight, optimum(&inst));
    }
}

#[test]
fn exhaustive_local_search_is_optimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let fam = family(&mut rng, random::matrix);
        let inst = random::instance(&mut rng, Kind::General, 6, 0.5, &fam);
        assert_eq!(local_search(&inst, 3, 64).weight, optimum(&inst));
    }
}

#[test]
fn brute_force_respects_cap() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let fam = [random::matrix(&mut rng)];
    let inst = random::instance(&mut rng, Kind::General, 10, 1.0, &fam);
    assert!(brute_force(&inst, 9).unwrap_err().is_too_large());
}
