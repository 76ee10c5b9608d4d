mod common;

use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn gen_membership_methods_agree(seed in any::<u64>()) {
        prop_assert!(common::gen_agreement(seed).map_err(TestCaseError::fail)? >= 1);
    }

    #[test]
    fn ext_dimension_shift(seed in any::<u64>()) {
        prop_assert!(common::ext_shift(seed).map_err(TestCaseError::fail)? >= 1);
    }

    #[test]
    fn inverse_translate_undoes_translate(seed in any::<u64>()) {
        prop_assert!(common::tau_round_trip(seed).map_err(TestCaseError::fail)? >= 1);
    }

    #[test]
    fn fabric_tests_agree(seed in any::<u64>()) {
        prop_assert!(common::fabric_agreement(seed).map_err(TestCaseError::fail)? >= 1);
    }

    #[test]
    fn corner_radical_is_cut_down_radical(seed in any::<u64>()) {
        prop_assert!(common::corner_radical(seed).map_err(TestCaseError::fail)? >= 1);
    }
}
