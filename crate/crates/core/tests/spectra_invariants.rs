//! Deterministic sweeps of the spectral invariants over the CI parameter
//! grid: eps in {0, 1e-4, 0.1, 0.2}, Omega in {0.05, 0.1, 1.0}, n <= 50.

use dsr_osc_core::kinematics::{GeometryKind, ModelParams};
use dsr_osc_core::operators::timelike_quadratic_eigen;
use dsr_osc_core::spectra::{branch_sum, energy_branches};

const EPS_GRID: [f64; 4] = [0.0, 1e-4, 0.1, 0.2];
const OMEGA_GRID: [f64; 3] = [0.05, 0.1, 1.0];
const N_MAX: u32 = 50;

fn params(omega: f64, eps: f64) -> ModelParams {
    ModelParams::dimensionless(omega, eps).unwrap()
}

#[test]
fn closed_forms_match_quadratic_root_oracle() {
    // every branch agrees with the independent bisection+Newton root-finder
    for &eps in &EPS_GRID {
        for &omega in &OMEGA_GRID {
            let p = params(omega, eps);
            for geometry in GeometryKind::ALL {
                for n in 0..=N_MAX {
                    let b = energy_branches(geometry, n, &p).unwrap();
                    let (plus, minus) = timelike_quadratic_eigen(geometry, n, &p).unwrap();
                    assert!(
                        (b.e_plus - plus).abs() < 1e-10,
                        "{geometry} n={n} eps={eps} omega={omega}: {} vs {plus}",
                        b.e_plus
                    );
                    assert!(
                        (b.e_minus - minus).abs() < 1e-10,
                        "{geometry} n={n} eps={eps} omega={omega}: {} vs {minus}",
                        b.e_minus
                    );
                }
            }
        }
    }
}

#[test]
fn quadratic_residual_of_closed_forms() {
    // substituting the branches back into the dimensionless quadratic leaves
    // residual < 1e-12
    for &eps in &EPS_GRID {
        for &omega in &OMEGA_GRID {
            let p = params(omega, eps);
            for n in 0..=N_MAX {
                let lam = 1.0 + 2.0 * f64::from(n) * omega;
                let tl = energy_branches(GeometryKind::Timelike, n, &p).unwrap();
                for e in [tl.e_plus, tl.e_minus] {
                    let r = e * e + eps * e - lam;
                    assert!(r.abs() < 1e-12 * lam.max(1.0), "tl residual {r} at n={n}");
                }
                let ms = energy_branches(GeometryKind::MagueijoSmolin, n, &p).unwrap();
                for e in [ms.e_plus, ms.e_minus] {
                    let r = (1.0 - eps * eps) * e * e + 2.0 * eps * e - lam;
                    assert!(r.abs() < 1e-12 * lam.max(1.0), "ms residual {r} at n={n}");
                }
            }
        }
    }
}

#[test]
fn spacelike_is_bitwise_isospectral_to_sr() {
    for &eps in &EPS_GRID {
        for &omega in &OMEGA_GRID {
            let p = params(omega, eps);
            for n in 0..=N_MAX {
                let sr = energy_branches(GeometryKind::Sr, n, &p).unwrap();
                let sl = energy_branches(GeometryKind::Spacelike, n, &p).unwrap();
                assert_eq!(sr.e_plus.to_bits(), sl.e_plus.to_bits());
                assert_eq!(sr.e_minus.to_bits(), sl.e_minus.to_bits());
            }
        }
    }
}

#[test]
fn timelike_and_lightlike_spectra_are_bitwise_identical() {
    for &eps in &EPS_GRID {
        for &omega in &OMEGA_GRID {
            let p = params(omega, eps);
            for n in 0..=N_MAX {
                let tl = energy_branches(GeometryKind::Timelike, n, &p).unwrap();
                let ll = energy_branches(GeometryKind::Lightlike, n, &p).unwrap();
                assert_eq!(tl.e_plus.to_bits(), ll.e_plus.to_bits());
                assert_eq!(tl.e_minus.to_bits(), ll.e_minus.to_bits());
                assert_eq!(tl.admissible, ll.admissible);
            }
        }
    }
}

#[test]
fn sr_limit_is_continuous() {
    // eps = 1e-8 differs from SR by < 1e-7 for every geometry
    for &omega in &OMEGA_GRID {
        let p = params(omega, 1e-8);
        let p0 = params(omega, 0.0);
        for geometry in GeometryKind::ALL {
            for n in 0..=N_MAX {
                let d = energy_branches(geometry, n, &p).unwrap();
                let u = energy_branches(geometry, n, &p0).unwrap();
                assert!((d.e_plus - u.e_plus).abs() < 1e-7);
                assert!((d.e_minus - u.e_minus).abs() < 1e-7);
            }
        }
    }
}

#[test]
fn branches_are_monotone_in_level() {
    for &eps in &EPS_GRID {
        for &omega in &OMEGA_GRID {
            let p = params(omega, eps);
            for geometry in GeometryKind::ALL {
                let mut prev = energy_branches(geometry, 0, &p).unwrap();
                assert!(prev.e_plus > 0.0 && prev.e_minus < 0.0);
                for n in 1..=N_MAX {
                    let b = energy_branches(geometry, n, &p).unwrap();
                    assert!(b.e_plus > prev.e_plus, "{geometry} e_plus not increasing at n={n}");
                    assert!(b.e_minus < prev.e_minus, "{geometry} e_minus not decreasing at n={n}");
                    prev = b;
                }
            }
        }
    }
}

#[test]
fn branch_sums_are_level_independent() {
    for &eps in &EPS_GRID {
        for &omega in &OMEGA_GRID {
            let p = params(omega, eps);
            for geometry in GeometryKind::ALL {
                let s0 = branch_sum(geometry, 0, &p).unwrap();
                for n in [1, 13, 50] {
                    let s = branch_sum(geometry, n, &p).unwrap();
                    assert!((s - s0).abs() < 1e-12, "{geometry} sum drifts: {s0} -> {s}");
                }
            }
        }
    }
}

#[test]
fn shift_ordering_and_ms_doubling() {
    // 0 = |d_sl| < |d_tl| < |d_ms| at fixed eps, and d_ms/d_tl -> 2
    for &eps in &[1e-4, 0.1, 0.2] {
        let p = params(0.1, eps);
        for n in 0..=25 {
            let sr = energy_branches(GeometryKind::Sr, n, &p).unwrap().e_plus;
            let sl = energy_branches(GeometryKind::Spacelike, n, &p).unwrap().e_plus - sr;
            let tl = energy_branches(GeometryKind::Timelike, n, &p).unwrap().e_plus - sr;
            let ms = energy_branches(GeometryKind::MagueijoSmolin, n, &p).unwrap().e_plus - sr;
            assert_eq!(sl, 0.0);
            assert!(tl < 0.0 && ms < 0.0);
            assert!(tl.abs() < ms.abs(), "ordering broken at n={n} eps={eps}");
        }
    }
    let mut last_gap = f64::INFINITY;
    for &eps in &[1e-2, 1e-3, 1e-4] {
        let p = params(0.1, eps);
        let sr = energy_branches(GeometryKind::Sr, 0, &p).unwrap().e_plus;
        let tl = energy_branches(GeometryKind::Timelike, 0, &p).unwrap().e_plus - sr;
        let ms = energy_branches(GeometryKind::MagueijoSmolin, 0, &p).unwrap().e_plus - sr;
        let gap = (ms / tl - 2.0).abs();
        assert!(gap < last_gap, "ratio not approaching 2 at eps={eps}");
        last_gap = gap;
    }
    assert!(last_gap < 1e-3);
}

#[test]
fn admissibility_below_pole() {
    // flag flips exactly when e_plus crosses 1/eps; nmax formula stays
    // conservative with respect to the flag
    let p = params(0.1, 0.2);
    let nmax = dsr_osc_core::spectra::admissible_nmax(GeometryKind::Timelike, &p).unwrap();
    assert_eq!(nmax, 120);
    let exact_bound = 1.0 / (2.0 * 0.1 * 0.2 * 0.2); // n < 1/(2 Omega eps^2)
    for n in 0..=(exact_bound as u32 + 10) {
        let b = energy_branches(GeometryKind::Timelike, n, &p).unwrap();
        assert_eq!(b.admissible, b.e_plus < 5.0, "flag mismatch at n={n}");
    }
    // every level admitted by the conservative nmax bound carries the flag
    for n in 0..=(nmax as u32) {
        assert!(energy_branches(GeometryKind::Timelike, n, &p).unwrap().admissible);
    }
}
