//! Exact closed-form bound-state spectra for all geometries.
//!
//! On oscillator eigenstates the deformed Casimir reduces to a per-level
//! quadratic in the energy. In dimensionless form (`e = E/m`,
//! `lambda_n = 2 n Omega`):
//!
//! - SR / spacelike: `e^2 = 1 + 2 n Omega` (the spacelike deformation is
//!   exactly isospectral);
//! - timelike / lightlike: `e^2 + eps e = 1 + 2 n Omega`, displacing both
//!   branches by `-eps/2`;
//! - Magueijo-Smolin: `(1 - eps^2) e^2 + 2 eps e = 1 + 2 n Omega`, with a
//!   doubled leading displacement `-eps`.
//!
//! Quadratics are evaluated in the cancellation-free root form: the
//! negative branch is a pure sum of positive terms and the positive branch
//! comes from the product of roots.

use crate::error::Error;
use crate::kinematics::{GeometryKind, ModelParams};
use crate::Result;

/// Both energy branches of one level, with the below-pole admissibility flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchPair {
    pub n: u32,
    /// Positive branch `E_{n,+}/m`.
    pub e_plus: f64,
    /// Negative branch `E_{n,-}/m`.
    pub e_minus: f64,
    /// Conservative below-pole criterion `e_plus < 1/eps` (always true for
    /// SR/spacelike and in the undeformed limit).
    pub admissible: bool,
    pub geometry: GeometryKind,
}

/// Exact shift of the positive branch relative to SR, next to its analytic
/// leading-order value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftReport {
    pub n: u32,
    pub geometry: GeometryKind,
    /// `e_{n,+} - e_{n,+}^SR` (identically zero for SR and spacelike).
    pub delta_e_plus: f64,
    /// Leading-order shift: 0, -eps/2 or -eps.
    pub leading: f64,
}

/// Oscillator eigenvalue `lambda_n = 2 n m omega` of the reverted-product
/// operator (dimensionless `2 n Omega`).
pub fn oscillator_eigenvalue(n: u32, params: &ModelParams) -> f64 {
    2.0 * f64::from(n) * params.omega_ratio()
}

/// Both dimensionless energy branches of level `n` for `geometry`.
pub fn energy_branches(geometry: GeometryKind, n: u32, params: &ModelParams) -> Result<BranchPair> {
    let lam = 1.0 + oscillator_eigenvalue(n, params); // 1 + 2 n Omega
    let eps = params.eps();
    let (e_plus, e_minus) = match geometry {
        GeometryKind::Sr | GeometryKind::Spacelike => {
            let s = lam.sqrt();
            (s, -s)
        }
        GeometryKind::Timelike | GeometryKind::Lightlike => {
            let s = (lam + 0.25 * eps * eps).sqrt();
            // roots of e^2 + eps e - lam = 0; e_plus via the product of roots
            let shifted = s + 0.5 * eps;
            (lam / shifted, -shifted)
        }
        GeometryKind::MagueijoSmolin => {
            params.require_ms_valid()?;
            let one_m = 1.0 - eps * eps;
            let radicand = 1.0 + 2.0 * f64::from(n) * params.omega_ratio() * one_m;
            if radicand < 0.0 {
                return Err(Error::NegativeDiscriminant);
            }
            let s = radicand.sqrt();
            // roots of (1 - eps^2) e^2 + 2 eps e - lam = 0
            (lam / (eps + s), -(eps + s) / one_m)
        }
    };
    let admissible = match geometry {
        GeometryKind::Sr | GeometryKind::Spacelike => true,
        _ => eps == 0.0 || e_plus < 1.0 / eps,
    };
    Ok(BranchPair {
        n,
        e_plus,
        e_minus,
        admissible,
        geometry,
    })
}

/// Branch sum `e_{n,+} + e_{n,-}`: a level-independent diagnostic of the
/// particle/antiparticle symmetry breaking (0 undeformed, -eps timelike and
/// lightlike, -2 eps/(1 - eps^2) Magueijo-Smolin).
pub fn branch_sum(geometry: GeometryKind, n: u32, params: &ModelParams) -> Result<f64> {
    let b = energy_branches(geometry, n, params)?;
    Ok(b.e_plus + b.e_minus)
}

/// Branches in the reparametrized energy `E + m^2/(2 E_p)`, i.e.
/// `e_pm + eps/2`, in which the timelike/lightlike spectrum is exactly
/// symmetric. Returns `(plus, minus)` with `plus = -minus`.
pub fn reparametrized_branches(
    geometry: GeometryKind,
    n: u32,
    params: &ModelParams,
) -> Result<(f64, f64)> {
    match geometry {
        GeometryKind::Timelike | GeometryKind::Lightlike => {
            let eps = params.eps();
            let s = (1.0 + oscillator_eigenvalue(n, params) + 0.25 * eps * eps).sqrt();
            Ok((s, -s))
        }
        other => Err(Error::WrongGeometry {
            expected: "timelike or lightlike",
            got: other,
        }),
    }
}

/// Largest level satisfying the conservative below-pole bound
/// `n <= (E_p^2 - m^2)/(2 m omega)`, or `None` when the spectrum is
/// unbounded (SR, spacelike, undeformed limit).
pub fn admissible_nmax(geometry: GeometryKind, params: &ModelParams) -> Option<u64> {
    match geometry {
        GeometryKind::Sr | GeometryKind::Spacelike => None,
        GeometryKind::Timelike | GeometryKind::Lightlike | GeometryKind::MagueijoSmolin => {
            let eps = params.eps();
            if eps == 0.0 {
                return None;
            }
            let bound = (1.0 / (eps * eps) - 1.0) / (2.0 * params.omega_ratio());
            if bound < 0.0 {
                return Some(0);
            }
            // one-sided relative guard so exact integer boundaries are not
            // lost to representation error of eps^2
            let guarded = bound * (1.0 + 4.0e-13);
            Some(guarded.floor().min(u64::MAX as f64) as u64)
        }
    }
}

/// Analytic leading-order shift of the positive branch relative to SR.
pub fn leading_shift(geometry: GeometryKind, params: &ModelParams) -> f64 {
    let eps = params.eps();
    match geometry {
        GeometryKind::Sr | GeometryKind::Spacelike => 0.0,
        GeometryKind::Timelike | GeometryKind::Lightlike => -0.5 * eps,
        GeometryKind::MagueijoSmolin => -eps,
    }
}

/// Exact shifts `Delta e_{n,+}` for all geometries and `n <= n_max`, with the
/// analytic leading values alongside. Rows are ordered by level, then by
/// geometry in enum order.
pub fn shift_table(params: &ModelParams, n_max: u32) -> Result<Vec<ShiftReport>> {
    let mut out = Vec::with_capacity((n_max as usize + 1) * GeometryKind::ALL.len());
    for n in 0..=n_max {
        let sr = energy_branches(GeometryKind::Sr, n, params)?.e_plus;
        for geometry in GeometryKind::ALL {
            let e_plus = energy_branches(geometry, n, params)?.e_plus;
            out.push(ShiftReport {
                n,
                geometry,
                delta_e_plus: e_plus - sr,
                leading: leading_shift(geometry, params),
            });
        }
    }
    Ok(out)
}

/// Relative size `|Delta e_{n,+}| / e_{n,+}^SR` of the deformation-induced
/// shift; decreases as `n^{-1/2}` at large `n`. Defined for the geometries
/// with a nonzero shift.
pub fn relative_correction(geometry: GeometryKind, n: u32, params: &ModelParams) -> Result<f64> {
    match geometry {
        GeometryKind::Timelike | GeometryKind::Lightlike | GeometryKind::MagueijoSmolin => {
            let sr = energy_branches(GeometryKind::Sr, n, params)?.e_plus;
            let e = energy_branches(geometry, n, params)?.e_plus;
            Ok((e - sr).abs() / sr)
        }
        other => Err(Error::WrongGeometry {
            expected: "timelike, lightlike or magueijo-smolin",
            got: other,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn params(omega: f64, eps: f64) -> ModelParams {
        ModelParams::dimensionless(omega, eps).unwrap()
    }

    #[test]
    fn oscillator_eigenvalue_values() {
        let p = params(0.1, 0.0);
        assert_eq!(oscillator_eigenvalue(0, &p), 0.0);
        assert_abs_diff_eq!(oscillator_eigenvalue(3, &p), 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(oscillator_eigenvalue(25, &p), 5.0, epsilon = 1e-15);
    }

    #[test]
    fn sr_rest_energy() {
        for omega in [0.05, 0.1, 1.0] {
            let b = energy_branches(GeometryKind::Sr, 0, &params(omega, 0.0)).unwrap();
            assert_eq!((b.e_plus, b.e_minus), (1.0, -1.0));
            assert!(b.admissible);
        }
    }

    #[test]
    fn timelike_branches_frozen_values() {
        let b = energy_branches(GeometryKind::Timelike, 0, &params(0.1, 0.2)).unwrap();
        assert_abs_diff_eq!(b.e_plus, 0.904987562112089, epsilon = 1e-13);
        assert_abs_diff_eq!(b.e_minus, -1.104987562112089, epsilon = 1e-13);
        assert!(b.admissible);
    }

    #[test]
    fn ms_branches_frozen_values() {
        let b = energy_branches(GeometryKind::MagueijoSmolin, 0, &params(0.1, 0.2)).unwrap();
        assert_abs_diff_eq!(b.e_plus, 0.8333333333333333, epsilon = 1e-13);
        assert_abs_diff_eq!(b.e_minus, -1.25, epsilon = 1e-13);
    }

    #[test]
    fn ms_rejects_degenerate_eps() {
        assert_eq!(
            energy_branches(GeometryKind::MagueijoSmolin, 0, &params(0.1, 1.0)).unwrap_err(),
            Error::MsDegenerate { eps: 1.0 }
        );
    }

    #[test]
    fn branch_sums() {
        let p = params(0.1, 0.2);
        for n in [0, 7, 120] {
            assert_abs_diff_eq!(branch_sum(GeometryKind::Sr, n, &p).unwrap(), 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(
                branch_sum(GeometryKind::Timelike, n, &p).unwrap(),
                -0.2,
                epsilon = 1e-12
            );
            assert_abs_diff_eq!(
                branch_sum(GeometryKind::MagueijoSmolin, n, &p).unwrap(),
                -0.4166666666666667,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn reparametrized_symmetry() {
        let p = params(0.1, 0.2);
        let (plus, minus) = reparametrized_branches(GeometryKind::Timelike, 0, &p).unwrap();
        assert_abs_diff_eq!(plus, 1.004987562112089, epsilon = 1e-14);
        assert_eq!(plus, -minus);
        // consistency with e_pm + eps/2
        let b = energy_branches(GeometryKind::Timelike, 0, &p).unwrap();
        assert_abs_diff_eq!(plus, b.e_plus + 0.1, epsilon = 1e-14);
        assert_abs_diff_eq!(minus, b.e_minus + 0.1, epsilon = 1e-14);
        // undeformed limit: reparametrization is the identity
        let p0 = params(0.1, 0.0);
        let b0 = energy_branches(GeometryKind::Lightlike, 2, &p0).unwrap();
        let (t_plus, t_minus) = reparametrized_branches(GeometryKind::Lightlike, 2, &p0).unwrap();
        assert_eq!((t_plus, t_minus), (b0.e_plus, b0.e_minus));
        assert!(matches!(
            reparametrized_branches(GeometryKind::Sr, 0, &p).unwrap_err(),
            Error::WrongGeometry { .. }
        ));
    }

    #[test]
    fn admissible_nmax_values() {
        let p = params(0.1, 0.2);
        assert_eq!(admissible_nmax(GeometryKind::Timelike, &p), Some(120));
        assert_eq!(admissible_nmax(GeometryKind::Lightlike, &p), Some(120));
        assert_eq!(admissible_nmax(GeometryKind::MagueijoSmolin, &p), Some(120));
        assert_eq!(admissible_nmax(GeometryKind::Sr, &p), None);
        assert_eq!(admissible_nmax(GeometryKind::Spacelike, &p), None);
        assert_eq!(admissible_nmax(GeometryKind::Timelike, &params(0.1, 0.0)), None);
        // the plotted grid sits comfortably below the bound
        let b = energy_branches(GeometryKind::Timelike, 25, &p).unwrap();
        assert!(b.admissible);
    }

    #[test]
    fn leading_shifts() {
        let p = params(0.1, 0.2);
        assert_eq!(leading_shift(GeometryKind::Spacelike, &p), 0.0);
        assert_abs_diff_eq!(leading_shift(GeometryKind::Timelike, &p), -0.1, epsilon = 1e-15);
        assert_abs_diff_eq!(leading_shift(GeometryKind::MagueijoSmolin, &p), -0.2, epsilon = 1e-15);
    }

    #[test]
    fn shift_table_frozen_values() {
        let p = params(0.1, 0.2);
        let table = shift_table(&p, 0).unwrap();
        let tl = table
            .iter()
            .find(|r| r.geometry == GeometryKind::Timelike)
            .unwrap();
        assert_abs_diff_eq!(tl.delta_e_plus, -0.09501243788791097, epsilon = 1e-13);
        // |Delta e - (-eps/2)| ~ eps^2/8
        assert_abs_diff_eq!((tl.delta_e_plus - (-0.1)).abs(), 0.005, epsilon = 2e-4);
        let ms = table
            .iter()
            .find(|r| r.geometry == GeometryKind::MagueijoSmolin)
            .unwrap();
        assert_abs_diff_eq!(ms.delta_e_plus, -0.16666666666666666, epsilon = 1e-13);
        for r in &table {
            if matches!(r.geometry, GeometryKind::Sr | GeometryKind::Spacelike) {
                assert_eq!(r.delta_e_plus, 0.0);
            }
        }
    }

    #[test]
    fn relative_correction_scaling() {
        // ratio * sqrt(n) approaches (eps/2)/sqrt(2 Omega) for large n
        let p = params(0.1, 1e-3);
        let limit = (1e-3 / 2.0) / (2.0f64 * 0.1).sqrt();
        for n in [100, 400, 1600] {
            let r = relative_correction(GeometryKind::Timelike, n, &p).unwrap();
            let scaled = r * f64::from(n).sqrt();
            assert_abs_diff_eq!(scaled / limit, 1.0, epsilon = 0.07);
        }
        // ratio(4)/ratio(1) ~ e_sr(1)/e_sr(4): the absolute shift is flat up
        // to the eps^2 level-dependent correction
        let r1 = relative_correction(GeometryKind::Timelike, 1, &p).unwrap();
        let r4 = relative_correction(GeometryKind::Timelike, 4, &p).unwrap();
        let e1 = energy_branches(GeometryKind::Sr, 1, &p).unwrap().e_plus;
        let e4 = energy_branches(GeometryKind::Sr, 4, &p).unwrap().e_plus;
        assert_abs_diff_eq!(r4 / r1, e1 / e4, epsilon = 5e-4);
        assert!(relative_correction(GeometryKind::Spacelike, 1, &p).is_err());
    }
}
