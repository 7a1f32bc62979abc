//! Cross-module identities on random ranked posets.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_poset::flag::{flag_f_ranked, h_from_f};
use toric_poset::paths::st_h_bruteforce_all;
use toric_poset::poset::random_ranked_poset;
use toric_poset::toric::{fine_st, st_recurrence};
use toric_poset::{LaurentPoly, Poset};

fn random_poset(seed: u64, elements: usize, rank: u32) -> Poset {
    random_ranked_poset(&mut ChaCha8Rng::seed_from_u64(seed), elements, rank)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recurrence_fine_and_flag_h_sum_agree(seed in any::<u64>(), elements in 1usize..=12, rank in 0u32..=5) {
        let p = random_poset(seed, elements, rank);
        let st = st_recurrence(&p);
        prop_assert!(st.is_additively_symmetric());
        let f = flag_f_ranked(&p).unwrap();
        prop_assert_eq!(&fine_st(&f), &st);
        let h = h_from_f(&f).unwrap();
        let st_h = st_h_bruteforce_all(h.n() as usize).unwrap();
        let mut total = LaurentPoly::zero();
        for s in 0..=h.full_set() {
            total += &st_h[s as usize].scale(h.get(s));
        }
        prop_assert_eq!(total, st.poly);
    }

    #[test]
    fn json_round_trip_preserves_invariants(seed in any::<u64>(), elements in 1usize..=10, rank in 0u32..=4) {
        let p = random_poset(seed, elements, rank);
        let q = Poset::from_json(&p.to_json()).unwrap();
        prop_assert_eq!(&p, &q);
        prop_assert_eq!(st_recurrence(&p), st_recurrence(&q));
    }
}
