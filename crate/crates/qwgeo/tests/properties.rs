// Invariants checked over randomized inputs.

use proptest::prelude::*;
use qwgeo::cavity::{gp_closed, gp_exact_nonunitary};
use qwgeo::cli::parse_angle;
use qwgeo::geophase::{angle_gap, gp_curve, gp_discrete, qubit_from_bloch, PureCurve};
use qwgeo::numkit::{inner, normalize};
use qwgeo::stargeo::{geodesic, state_to_stars, stars_to_state};
use qwgeo::topo::winding_momentum;
use qwgeo::walks::{band_grid, evolve, pt_check, StateVector, WalkSpec};
use qwgeo::C64;
use std::f64::consts::PI;

fn state(parts: &[(f64, f64)]) -> Option<Vec<C64>> {
    normalize(&parts.iter().map(|&(a, b)| C64::new(a, b)).collect::<Vec<_>>())
}

fn amp() -> impl Strategy<Value = (f64, f64)> {
    (-1.0f64..1.0, -1.0f64..1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn unitary_walks_conserve_norm(t1 in -PI..PI, t2 in -PI..PI, steps in 1usize..60, a in amp(), b in amp()) {
        let Some(coin) = state(&[a, b]) else { return Ok(()) };
        for spec in [WalkSpec::dtqw1d(129, t1), WalkSpec::ssqw1d(129, t1, t2, 0.0)] {
            let ev = evolve(&spec, &StateVector::localized(&spec, &coin).unwrap(), steps).unwrap();
            for n in ev.norms {
                prop_assert!((n - 1.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn pt_relation_holds_for_any_gain(t1 in -PI..PI, t2 in -PI..PI, g in 0.0f64..1.0) {
        prop_assert!(pt_check(&WalkSpec::ssqw1d(4, t1, t2, g), 33).unwrap().all);
    }

    #[test]
    fn unitary_gapped_winding_is_integer(t1 in -PI..PI, t2 in -PI..PI) {
        let spec = WalkSpec::ssqw1d(4, t1, t2, 0.0);
        let gap = band_grid(&spec, 201).unwrap().points.iter().map(|p| p.energy.re.sin().abs()).fold(f64::MAX, f64::min);
        if gap < 0.05 {
            return Ok(());
        }
        if let Ok(w) = winding_momentum(&WalkSpec::ssqw1d(4, t1, t2, 0.0), 1001) {
            prop_assert!(w.distance_to_integer() < 1e-3, "{}", w.value);
        }
    }

    #[test]
    fn bargmann_phase_ignores_state_phases(
        a in amp(), b in amp(), c in amp(), d in amp(), e in amp(), f in amp(),
        p in proptest::array::uniform3(-PI..PI),
    ) {
        let (Some(x), Some(y), Some(z)) = (state(&[a, b]), state(&[c, d]), state(&[e, f])) else { return Ok(()) };
        let Ok(g) = gp_discrete(&[x.clone(), y.clone(), z.clone()]) else { return Ok(()) };
        let ph = |v: &Vec<C64>, t: f64| v.iter().map(|w| w * C64::from_polar(1.0, t)).collect::<Vec<_>>();
        let g2 = gp_discrete(&[ph(&x, p[0]), ph(&y, p[1]), ph(&z, p[2])]).unwrap();
        prop_assert!(angle_gap(g, g2, 2.0 * PI) < 1e-10);
        let rev = gp_discrete(&[z, y, x]).unwrap();
        prop_assert!(angle_gap(g, -rev, 2.0 * PI) < 1e-10);
    }

    #[test]
    fn curve_phase_is_gauge_invariant(th in 0.2f64..2.9, k1 in -3.0f64..3.0, k2 in -2.0f64..2.0, k3 in -1.0f64..1.0) {
        let c = PureCurve::from_fn(0.0, 1.5 * PI, 801, |p| qubit_from_bloch([th.sin() * p.cos(), th.sin() * p.sin(), th.cos()])).unwrap();
        let g0 = gp_curve(&c).unwrap();
        let g1 = gp_curve(&c.regauge(|s| k1 * s + k2 * (2.0 * s).sin() + k3 * s * s)).unwrap();
        prop_assert!(angle_gap(g0, g1, 2.0 * PI) < 1e-9);
    }

    #[test]
    fn geodesics_carry_no_phase(v in proptest::collection::vec(amp(), 8)) {
        let (Some(a), Some(b)) = (state(&v[..4]), state(&v[4..])) else { return Ok(()) };
        if inner(&a, &b).norm() < 0.05 {
            return Ok(());
        }
        prop_assert!(gp_curve(&geodesic(&a, &b, 200).unwrap()).unwrap().abs() < 1e-8);
    }

    #[test]
    fn stars_roundtrip(v in proptest::collection::vec(amp(), 2..7)) {
        let Some(psi) = state(&v) else { return Ok(()) };
        let stars = state_to_stars(&psi).unwrap();
        prop_assert_eq!(stars.stars.len(), psi.len() - 1);
        let back = stars_to_state(&stars.stars).unwrap();
        prop_assert!(inner(&back, &psi).norm() > 1.0 - 1e-7);
    }

    #[test]
    fn cavity_phase_scales_with_n_squared_and_sin_squared(
        a in 1e-3f64..10.0, bf in -1.0f64..1.0, th in 0.05f64..3.1, n in 1.0f64..100.0,
    ) {
        let (omega, b) = (1e7, bf * a);
        let (_, p1) = gp_closed(a, b, omega, th, n).unwrap();
        let (_, p2) = gp_closed(a, b, omega, th, 2.0 * n).unwrap();
        prop_assert!(((p2 / p1) - 4.0).abs() < 1e-12 || p1 == 0.0);
        prop_assert!(gp_closed(a, b, omega, 0.0, n).unwrap().1 == 0.0);
        prop_assert!(gp_closed(a, b, omega, PI, n).unwrap().1.abs() < 1e-30);
        let ex = gp_exact_nonunitary(a, b, omega, th, 2.0 * PI * n / omega).unwrap();
        if (2.0 * b + a * th.cos()).abs() > 0.05 * a {
            prop_assert!(((ex - p1) / p1).abs() < 1e-2, "{} vs {}", ex, p1);
        }
    }

    #[test]
    fn rational_angles_parse(num in -24i32..24, den in 1i32..13) {
        let v = parse_angle(&format!("{}pi/{}", num, den)).unwrap();
        prop_assert!((v - num as f64 * PI / den as f64).abs() < 1e-14);
    }
}
