use num_complex::Complex64;
use proptest::prelude::*;
use zfstar_core::fock::{
    coherent, expected_number, is_number_eigenstate, ladder_number_expectation, mode_energy,
    number_distribution, number_state, superpose, to_structure, FockState, DEFAULT_EPS,
};
use zfstar_core::mereology::is_cantorian;

const NMAX: usize = 12;

fn state() -> impl Strategy<Value = FockState> {
    prop_oneof![
        (0..=NMAX).prop_map(|n| number_state(n, NMAX).unwrap()),
        proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), NMAX + 1)
            .prop_filter("nonzero", |v| v.iter().any(|(a, b)| a.abs() + b.abs() > 1e-3))
            .prop_map(|v| {
                let amps = v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect();
                FockState::from_amplitudes(amps, "random").renormalize().unwrap()
            }),
        (0..=NMAX, 0..=NMAX).prop_map(|(n, m)| {
            let basis = [number_state(n, NMAX).unwrap(), number_state(m, NMAX).unwrap()];
            superpose(&basis, &[Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)]).unwrap()
        }),
    ]
}

proptest! {
    #[test]
    fn distribution_sums_to_one(s in state()) {
        let total: f64 = number_distribution(&s).unwrap().iter().sum();
        prop_assert!((total - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn ladder_quadratic_form_matches_mean(s in state()) {
        prop_assert!((expected_number(&s).unwrap() - ladder_number_expectation(&s)).abs() <= 1e-9);
    }

    #[test]
    fn energy_follows_the_mean(s in state(), omega in 0.1f64..10.0) {
        let e = mode_energy(&s, omega).unwrap();
        prop_assert!((e - omega * (expected_number(&s).unwrap() + 0.5)).abs() <= 1e-12);
    }

    #[test]
    fn bridge_is_cantorian_iff_number_is_definite(s in state()) {
        let b = to_structure(&s, 1e-9).unwrap();
        let verdict = is_cantorian(&b.structure, "alpha").unwrap();
        prop_assert_eq!(verdict.is_cantorian(), is_number_eigenstate(&s, 1e-9).is_some());
    }

    #[test]
    fn coherent_states_are_normalized(re in -2.0f64..2.0, im in -2.0f64..2.0) {
        let c = coherent(Complex64::new(re, im), 60, DEFAULT_EPS).unwrap();
        prop_assert!((c.state.norm_sqr() - 1.0).abs() <= DEFAULT_EPS);
        prop_assert!(c.deficit <= DEFAULT_EPS);
    }
}
