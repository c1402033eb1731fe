//! Closed-form solution against independent references.
//!
//! The survival amplitude obeys `E'' + E' + R² E = 0`, `E(0) = 1`,
//! `E'(0) = 0` in units `τ = λt`. `taylor_survival` integrates that ODE with
//! a high-order Taylor method and never touches the closed form.

use num_complex::Complex;
use proptest::prelude::*;
use std::f64::consts::{FRAC_1_SQRT_2, PI};
use zeno_ent_core::*;

fn setup(big_r: f64, r1: f64) -> (Reservoir, Coupling) {
    let coup = Coupling::unit(r1).unwrap();
    (Reservoir::for_ratio(big_r, &coup).unwrap(), coup)
}

fn survival(big_r: f64, tau: f64) -> f64 {
    let (res, coup) = setup(big_r, 0.5);
    survival_amplitude(&res, &coup, tau).unwrap()
}

/// Taylor-series stepping of `E'' = −E' − R² E`.
fn taylor_survival(big_r: f64, tau: f64) -> f64 {
    let r2 = big_r * big_r;
    let steps = ((tau * (1.0 + big_r)) / 0.05).ceil().max(1.0) as usize;
    let h = tau / steps as f64;
    let (mut e, mut de) = (1.0f64, 0.0f64);
    for _ in 0..steps {
        let mut a = vec![e, de];
        for n in 0..40 {
            let next =
                -((n as f64 + 1.0) * a[n + 1] + r2 * a[n]) / ((n as f64 + 1.0) * (n as f64 + 2.0));
            a.push(next);
        }
        let (mut v, mut dv, mut p) = (0.0, 0.0, 1.0);
        for (k, &ak) in a.iter().enumerate() {
            v += ak * p;
            if k + 1 < a.len() {
                dv += (k as f64 + 1.0) * a[k + 1] * p;
            }
            p *= h;
        }
        e = v;
        de = dv;
    }
    e
}

#[test]
fn survival_matches_taylor_oracle() {
    for &big_r in &[0.05, 0.1, 0.3, 0.5, 0.7, 2.0, 10.0] {
        for i in 0..=40 {
            let tau = i as f64 * 0.25;
            let exact = taylor_survival(big_r, tau);
            let closed = survival(big_r, tau);
            assert!(
                (exact - closed).abs() < 1e-10,
                "R={big_r} τ={tau}: {closed} vs {exact}"
            );
        }
    }
}

#[test]
fn critical_damping_value() {
    let e = survival(0.5, 2.0);
    assert!((e - 2.0 / std::f64::consts::E).abs() < 1e-12);
    // same value from the generic formulas on either side of the boundary
    for &sign in &[1.0, -1.0] {
        let big_r = ((1.0 - sign * 1e-8) / 4.0f64).sqrt();
        assert!((survival(big_r, 2.0) - 2.0 / std::f64::consts::E).abs() < 1e-7);
    }
}

#[test]
fn good_cavity_checkpoint() {
    let e = survival(10.0, 0.31);
    assert!((e - taylor_survival(10.0, 0.31)).abs() < 1e-10);
    assert!((e + 0.856).abs() < 0.005, "E = {e}");
}

#[test]
fn markov_asymptotics() {
    let big_r = 0.1;
    let gamma = 2.0 * big_r * big_r;
    for i in 0..=400 {
        let tau = 10.0 + 0.1 * i as f64;
        let e = survival(big_r, tau);
        let markov = (-gamma * tau / 2.0).exp();
        assert!((e / markov - 1.0).abs() < 0.02, "τ={tau}");
    }
}

#[test]
fn flat_start() {
    // second-order one-sided difference, h = 1e-6
    let h = 1e-6;
    for &big_r in &[0.01, 0.1, 0.5, 1.0, 10.0, 30.0] {
        assert_eq!(survival(big_r, 0.0), 1.0);
        let d = (-3.0 * survival(big_r, 0.0) + 4.0 * survival(big_r, h) - survival(big_r, 2.0 * h))
            / (2.0 * h);
        assert!(d.abs() < 1e-6, "R={big_r}: Ė(0) ≈ {d}");
    }
}

#[test]
fn bounded_by_one() {
    // deterministic quasi-random sample of 10⁴ (R, τ) points
    let mut x = 0.5f64;
    let mut y = 0.5f64;
    for _ in 0..10_000 {
        x = (x + 0.618_033_988_749_895) % 1.0;
        y = (y + 0.754_877_666_246_693) % 1.0;
        let big_r = 10f64.powf(-2.0 + 3.7 * x);
        let tau = 200.0 * y;
        let e = survival(big_r, tau);
        assert!(e.abs() <= 1.0 + 1e-15, "R={big_r} τ={tau}: {e}");
    }
}

#[test]
fn continuous_across_critical_damping() {
    let over = (0.25f64 * (1.0 - 1e-10)).sqrt();
    let under = (0.25f64 * (1.0 + 1e-10)).sqrt();
    for i in 0..=200 {
        let tau = 0.1 * i as f64;
        let critical = (-tau / 2.0).exp() * (1.0 + tau / 2.0);
        assert!((survival(over, tau) - survival(under, tau)).abs() < 1e-6);
        assert!((survival(over, tau) - critical).abs() < 1e-6);
    }
}

#[test]
fn sub_radiant_state_is_frozen() {
    for &r1 in &[0.0, 0.2, FRAC_1_SQRT_2, 0.87, 1.0] {
        let (res, coup) = setup(10.0, r1);
        let init = InitialState::sub_radiant(&coup);
        let c0 = concurrence_closed(&amplitudes_at(&res, &coup, &init, 0.0).unwrap()).unwrap();
        for i in 0..500 {
            let a = amplitudes_at(&res, &coup, &init, i as f64 * 0.013).unwrap();
            assert!((a.c1 - Complex::new(coup.r2(), 0.0)).norm() < 1e-15);
            assert!((a.c2 + Complex::new(coup.r1(), 0.0)).norm() < 1e-15);
            assert!((concurrence_closed(&a).unwrap() - c0).abs() < 1e-12);
        }
    }
}

#[test]
fn separable_start_reaches_sub_radiant_mixture() {
    let r1 = 3f64.sqrt() / 2.0;
    let (res, coup) = setup(0.1, r1);
    let r2 = coup.r2();
    let init = State::from_separability(1.0, 0.0).unwrap();
    for &tau in &[0.5, 3.0, 40.0] {
        let e = survival_amplitude(&res, &coup, tau).unwrap();
        let a = amplitudes_at(&res, &coup, &init, tau).unwrap();
        assert!((a.c1.re - r1 * r2 * (e - 1.0)).abs() < 1e-15);
        assert!((a.c2.re - (r1 * r1 + r2 * r2 * e)).abs() < 1e-15);
    }
    let late = amplitudes_at(&res, &coup, &init, 5000.0).unwrap();
    assert!((late.c1.re + 3f64.sqrt() / 4.0).abs() < 1e-12);
    // c2 → r1² = 3/4, so the limit concurrence is the stationary 3√3/8
    assert!((late.c2.re - 0.75).abs() < 1e-12);
    let c = concurrence_closed(&late).unwrap();
    assert!((c - 3.0 * 3f64.sqrt() / 8.0).abs() < 1e-12);
    assert!((c - stationary_concurrence(&coup, &init)).abs() < 1e-12);
}

#[test]
fn stationary_limit_in_bad_cavity() {
    // R = 0.1 decays at γ = 0.02λ, so the long-time limit is checked well
    // past 1/γ
    for &(s, r1) in &[(1.0, 0.87), (0.0, 0.3), (-1.0, 0.5), (0.4, 0.95)] {
        let (res, coup) = setup(0.1, r1);
        let init = State::from_separability(s, 0.0).unwrap();
        let cs = stationary_concurrence(&coup, &init);
        let c = concurrence_closed(&amplitudes_at(&res, &coup, &init, 2000.0).unwrap()).unwrap();
        assert!((c - cs).abs() < 1e-4, "s={s} r1={r1}: {c} vs {cs}");
    }
}

#[test]
fn stationary_optimum_is_three_root_three_over_eight() {
    // maximize 2 r1³ √(1 − r1²) by brute force on a fine grid
    let init = State::from_separability(1.0, 0.0).unwrap();
    let (mut best_r1, mut best) = (0.0, -1.0);
    for i in 0..=100_000 {
        let r1 = i as f64 / 100_000.0;
        let cs = stationary_concurrence(&Coupling::unit(r1).unwrap(), &init);
        if cs > best {
            best = cs;
            best_r1 = r1;
        }
    }
    assert!((best_r1 - 3f64.sqrt() / 2.0).abs() < 1e-4);
    assert!((best - 3.0 * 3f64.sqrt() / 8.0).abs() < 1e-9);

    let init = State::from_separability(-1.0, 0.0).unwrap();
    let cs = stationary_concurrence(&Coupling::unit(0.5).unwrap(), &init);
    assert!((cs - 3.0 * 3f64.sqrt() / 8.0).abs() < 1e-12);

    let init = State::from_separability(0.0, PI).unwrap();
    let cs = stationary_concurrence(&Coupling::unit(FRAC_1_SQRT_2).unwrap(), &init);
    assert!((cs - 1.0).abs() < 1e-12);
}

#[test]
fn single_precision_model() {
    let coup = Coupling32::unit(0.87).unwrap();
    let res = Reservoir32::for_ratio(10.0, &coup).unwrap();
    let init = State32::from_separability(1.0, 0.0).unwrap();
    let a = amplitudes_at(&res, &coup, &init, 0.31).unwrap();
    let c = concurrence_closed(&a).unwrap();
    let c64 = {
        let (res, coup) = setup(10.0, 0.87);
        let init = State::from_separability(1.0, 0.0).unwrap();
        concurrence_closed(&amplitudes_at(&res, &coup, &init, 0.31).unwrap()).unwrap()
    };
    assert!((c as f64 - c64).abs() < 1e-5);
}

fn amplitude_pair() -> impl Strategy<Value = (Complex<f64>, Complex<f64>)> {
    (0.0..1.0f64, 0.0..1.0f64, 0.0..(2.0 * PI), 0.0..(2.0 * PI)).prop_map(|(n, split, p1, p2)| {
        let a = (n * split).sqrt();
        let b = (n * (1.0 - split)).sqrt();
        (Complex::from_polar(a, p1), Complex::from_polar(b, p2))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn wootters_agrees_with_closed_form((c1, c2) in amplitude_pair()) {
        let amps = Amplitudes::new(c1, c2, 0.0);
        let rho = density_matrix(&amps).unwrap();
        let closed = concurrence_closed(&amps).unwrap();
        let general = concurrence_wootters(&rho).unwrap();
        prop_assert!((closed - general).abs() < 1e-10, "{} vs {}", closed, general);
    }

    #[test]
    fn density_matrix_is_a_state((c1, c2) in amplitude_pair()) {
        let rho = density_matrix(&Amplitudes::new(c1, c2, 0.0)).unwrap();
        prop_assert!(rho.hermiticity_defect() < 1e-12);
        prop_assert!((rho.trace().re - 1.0).abs() < 1e-10);
        prop_assert_eq!(rho.get(0, 0), Complex::new(0.0, 0.0));
        let minor = rho.get(1, 1).re * rho.get(2, 2).re - rho.get(1, 2).norm_sqr();
        prop_assert!(minor.abs() < 1e-12);
        prop_assert!(rho.ground_population() >= -1e-12);
    }

    #[test]
    fn norm_decomposition(
        big_r in 0.01..30.0f64,
        r1 in 0.0..=1.0f64,
        s in -1.0..=1.0f64,
        phi in 0.0..(2.0 * PI),
        tau in 0.0..50.0f64,
    ) {
        let (res, coup) = setup(big_r, r1);
        let init = State::from_separability(s, phi).unwrap();
        let beta = BellBasis::new(&coup, &init);
        let e = survival_amplitude(&res, &coup, tau).unwrap();
        let a = amplitudes_at(&res, &coup, &init, tau).unwrap();
        let lhs = a.excited_population();
        let rhs = beta.beta_minus.norm_sqr() + beta.beta_plus.norm_sqr() * e * e;
        prop_assert!((lhs - rhs).abs() < 1e-12);
        prop_assert!(lhs <= 1.0 + 1e-10);
    }

    #[test]
    fn initial_concurrence_from_separability(s in -1.0..=1.0f64, phi in 0.0..(2.0 * PI), r1 in 0.0..=1.0f64) {
        let (res, coup) = setup(1.0, r1);
        let init = State::from_separability(s, phi).unwrap();
        let c0 = concurrence_closed(&amplitudes_at(&res, &coup, &init, 0.0).unwrap()).unwrap();
        prop_assert!((c0 - (1.0 - s * s).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn sweeps_are_partition_independent(big_r in 0.05..20.0f64, r1 in 0.0..=1.0f64) {
        // evaluating a grid point alone or inside a sweep gives identical bits
        let (res, coup) = setup(big_r, r1);
        let init = State::from_separability(0.3, 1.0).unwrap();
        let sweep: Vec<_> = (0..50).map(|i| amplitudes_at(&res, &coup, &init, i as f64 * 0.1).unwrap()).collect();
        let alone = amplitudes_at(&res, &coup, &init, 37.0 * 0.1).unwrap();
        prop_assert_eq!(sweep[37], alone);
    }
}
