use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use scp_cro::engine::{Engine, Params, Variant};
use scp_cro::instance::{evaluate_cost, is_feasible_cover, is_prime_cover, remove_redundancy};
use scp_cro::operators::{
    decompose, greedy_solve, perturbation_search, random_pick_init, remove_repair_search,
    reverse_cumulative_init, synthesize,
};
use scp_cro::orlib::{generate_random, parse_native, write_native};
use scp_cro::{Instance, Solution};

fn instance() -> impl Strategy<Value = Instance> {
    (1usize..15, 1usize..20, 0.05f64..0.6, 1u64..50, any::<u64>()).prop_map(
        |(m, n, d, hi, seed)| generate_random(m, n, d, 1, hi, seed).expect("valid config"),
    )
}

fn assert_feasible(inst: &Instance, s: &Solution) {
    Solution::new(inst, s.assignment().to_vec()).expect("assignment is valid");
    assert!(is_feasible_cover(inst, s.to_cover().columns()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn operators_stay_feasible(inst in instance(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = reverse_cumulative_init(&inst, &mut rng);
        let b = random_pick_init(&inst, &mut rng);
        assert_feasible(&inst, &a);
        assert_feasible(&inst, &b);
        assert_feasible(&inst, &perturbation_search(&inst, &a, &mut rng));
        assert_feasible(&inst, &remove_repair_search(&inst, &b, &mut rng));
        let (d1, d2) = decompose(&inst, &a, &mut rng);
        assert_feasible(&inst, &d1);
        assert_feasible(&inst, &d2);
        assert_feasible(&inst, &synthesize(&inst, &a, &b, &mut rng));
    }

    #[test]
    fn redundancy_removal_gives_prime_cover(inst in instance(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_pick_init(&inst, &mut rng);
        let pruned = remove_redundancy(&inst, &s, &mut rng);
        prop_assert!(evaluate_cost(&inst, &pruned) <= evaluate_cost(&inst, &s));
        prop_assert!(is_prime_cover(&inst, pruned.to_cover().columns()).unwrap());
    }

    #[test]
    fn native_round_trip(inst in instance()) {
        let back = parse_native(&write_native(&inst)).unwrap();
        prop_assert_eq!(back, inst);
    }

    #[test]
    fn greedy_is_feasible(inst in instance()) {
        let cover = greedy_solve(&inst);
        prop_assert!(is_feasible_cover(&inst, cover.columns()));
    }

    #[test]
    fn engine_invariants(inst in instance(), seed in any::<u64>(), variant in 0usize..3) {
        let variant = [Variant::Hcro, Variant::HcroIr, Variant::HcroNr][variant];
        let params = Params { fe_limit: Some(400), pop_size: 4, ..Params::default() };
        let mut engine = Engine::new(&inst, params, variant, seed).unwrap();
        let total = engine.total_energy();
        let mut best = engine.best_cost();
        let mut len = engine.population().len();
        engine.run_observed(|e, _| {
            assert_eq!(e.total_energy(), total);
            assert!(e.best_cost() <= best);
            best = e.best_cost();
            let now = e.population().len();
            assert!(now >= 1 && now.abs_diff(len) <= 1);
            len = now;
            for m in e.population() {
                assert_eq!(m.pe, evaluate_cost(&inst, &m.solution));
                assert!(m.ke >= scp_cro::Energy::ZERO);
                assert!(m.min_pe <= m.pe);
                assert!(best <= m.min_pe);
            }
            assert!(e.buffer() >= scp_cro::Energy::ZERO);
        });
        prop_assert!(engine.fe_count() <= engine.fe_limit() + 2);
        prop_assert_eq!(evaluate_cost(&inst, engine.best_solution()), engine.best_cost());
    }
}
