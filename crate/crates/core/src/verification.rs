//! End-to-end oracle suites binding the closed forms to independent numerics.
//!
//! Every suite is deterministic: fixed inputs produce identical residuals,
//! pass flags and report rows (runtimes are carried for humans but kept out
//! of the machine-readable rows).

use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::Error;
use crate::kinematics::{GeometryKind, ModelParams};
use crate::operators::{
    biorthonormal_gram, eigenvalues, eigenvalues_of, eta_gram, hamiltonian_sq, metric_matrix,
    pseudo_hermiticity_residual, similarity_matrix, timelike_quadratic_eigen, EigenMethod,
};
use crate::special_functions::{gauss_hermite, psi_shifted, psi_shifted_at, DeformationShifts};
use crate::spectra::{branch_sum, energy_branches, reparametrized_branches};
use crate::Result;

/// Branch-sum and reparametrization identities hold to this tolerance.
pub const BRANCH_IDENTITY_TOL: f64 = 1e-12;
/// Pointwise finite-difference eigen-residual tolerance (4001-point grids).
pub const GRID_RESIDUAL_TOL: f64 = 1e-5;
/// Calibrated interior-block pseudo-Hermiticity threshold at N = 128.
pub const PSEUDO_HERMITICITY_TOL: f64 = 1e-6;
/// Quadrature-vs-matrix Gram agreement threshold.
pub const QUAD_AGREEMENT_TOL: f64 = 1e-7;
/// The MS/first-power shift ratio obeys |ratio - 2| <= C eps with C below.
pub const MS_RATIO_COEFF: f64 = 2.0;
/// Shift-stress rule: default tolerances assume `delta sqrt(m w)` at or
/// below this bound; beyond it the similarity map is too ill-conditioned at
/// desk-scale truncations for the dense conjugation route, which then runs
/// as a non-gating diagnostic (and the CLI warns).
pub const SHIFT_STRESS_LIMIT: f64 = 1.0;

/// One residual-vs-tolerance comparison inside a suite.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckReport {
    fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        let pass = residual.is_finite() && residual <= tolerance;
        Self {
            name: name.into(),
            residual,
            tolerance,
            pass,
        }
    }
}

/// Outcome of one verification suite.
///
/// `worst_residual` is tolerance-normalized across heterogeneous checks:
/// `tolerance * max_i(residual_i / tolerance_i)`, so the suite fails exactly
/// when `worst_residual > tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub worst_residual: f64,
    pub tolerance: f64,
    pub params: ModelParams,
    pub runtime: Duration,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    fn from_checks(
        suite: impl Into<String>,
        tolerance: f64,
        params: &ModelParams,
        started: Instant,
        checks: Vec<CheckReport>,
    ) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        let worst_norm = checks
            .iter()
            .map(|c| c.residual / c.tolerance)
            .fold(0.0f64, f64::max);
        Self {
            suite: suite.into(),
            pass,
            worst_residual: tolerance * worst_norm,
            tolerance,
            params: *params,
            runtime: started.elapsed(),
            checks,
        }
    }

    /// Human-readable report lines (runtime included).
    pub fn text_lines(&self) -> Vec<String> {
        let mut lines = vec![format!(
            "suite={} pass={} worst_residual={:.8e} tolerance={:.8e} omega={:.8e} eps={:.8e} runtime_ms={}",
            self.suite,
            self.pass,
            self.worst_residual,
            self.tolerance,
            self.params.omega_ratio(),
            self.params.eps(),
            self.runtime.as_millis()
        )];
        for c in &self.checks {
            lines.push(format!(
                "  check={} residual={:.8e} tolerance={:.8e} pass={}",
                c.name, c.residual, c.tolerance, c.pass
            ));
        }
        lines
    }

    /// Deterministic CSV rows `suite,check,residual,tolerance,pass` (no
    /// header, no runtime).
    pub fn csv_rows(&self, separator: char) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                format!(
                    "{}{sep}{}{sep}{:.8e}{sep}{:.8e}{sep}{}",
                    self.suite,
                    c.name,
                    c.residual,
                    c.tolerance,
                    c.pass,
                    sep = separator
                )
            })
            .collect()
    }
}

/// Whether the similarity-map shift exceeds the default-tolerance regime.
pub fn shift_stress(params: &ModelParams) -> bool {
    let shifts = DeformationShifts::from_params(params);
    shifts.delta * params.m_omega().sqrt() > SHIFT_STRESS_LIMIT
}

/// Isospectrality of the spacelike deformation.
///
/// Route one: the truncated spacelike matrix is triangular, so its spectrum
/// is its diagonal (flagged shortcut). Route two: conjugating with the
/// similarity map gives a dense matrix fed to the Schur eigensolver; its
/// sorted eigenvalues must still match `m^2 + 2 n m omega` level by level.
pub fn suite_isospectral(
    params: &ModelParams,
    n_dim: usize,
    n_check: usize,
    tol: f64,
) -> Result<SuiteReport> {
    let started = Instant::now();
    if n_check > n_dim / 2 {
        return Err(crate::error::invalid_arg(format!(
            "n_check = {n_check} exceeds N/2 = {}",
            n_dim / 2
        )));
    }
    let predicted: Vec<f64> = (0..=n_check)
        .map(|n| 1.0 + crate::spectra::oscillator_eigenvalue(n as u32, params))
        .collect();

    let h_sl = hamiltonian_sq(GeometryKind::Spacelike, n_dim, params)?;
    let rep = eigenvalues(&h_sl)?;
    let mut checks = Vec::new();
    checks.push(CheckReport::new(
        "triangular shortcut taken",
        if rep.method == EigenMethod::TriangularDiagonal {
            0.0
        } else {
            1.0
        },
        0.5,
    ));
    let (imag, level_err) = spectrum_mismatch(&rep.eigenvalues, &predicted);
    checks.push(CheckReport::new("diagonal route max |Im|", imag, tol));
    checks.push(CheckReport::new(
        "diagonal route level error (relative)",
        level_err,
        tol,
    ));

    // dense route through the similarity conjugation; not gated when the
    // map is shift-stressed (the conjugated matrix is then dominated by
    // amplified truncation junk and certifies nothing at desk scale)
    let stress = shift_stress(params);
    let dense_tol = if stress { f64::INFINITY } else { tol };
    let dense_label = if stress {
        " (diagnostic, not gated: shift stress)"
    } else {
        ""
    };
    let s = similarity_matrix(n_dim, params)?;
    let s_inv = s
        .entries()
        .clone()
        .lu()
        .try_inverse()
        .ok_or(Error::SingularMatrix("similarity operator"))?;
    let conjugated = s.entries() * h_sl.entries() * s_inv;
    let dense = eigenvalues_of(conjugated, params)?;
    let (imag_d, level_err_d) = spectrum_mismatch(&dense.eigenvalues, &predicted);
    checks.push(CheckReport::new(
        format!("dense route max |Im|{dense_label}"),
        imag_d,
        dense_tol,
    ));
    checks.push(CheckReport::new(
        format!("dense route level error (relative){dense_label}"),
        level_err_d,
        dense_tol,
    ));
    Ok(SuiteReport::from_checks(
        "isospectral",
        tol,
        params,
        started,
        checks,
    ))
}

/// Max |Im| and max relative real-part error of the leading sorted
/// eigenvalues against the predictions.
fn spectrum_mismatch(sorted: &[Complex64], predicted: &[f64]) -> (f64, f64) {
    let mut imag = 0.0f64;
    let mut level = 0.0f64;
    for (ev, &want) in sorted.iter().zip(predicted) {
        imag = imag.max(ev.im.abs());
        level = level.max((ev.re - want).abs() / want.abs().max(1.0));
    }
    (imag, level)
}

/// Relative L-inf residual of the spacelike differential operator applied to
/// the sampled shifted eigenfunction via 4th-order finite differences,
/// measured on the middle 60% of the grid.
pub fn grid_relative_residual(
    geometry: GeometryKind,
    n: u32,
    params: &ModelParams,
    x_range: (f64, f64),
    points: usize,
) -> Result<f64> {
    match geometry {
        GeometryKind::Spacelike | GeometryKind::Lightlike => {}
        other => {
            return Err(Error::WrongGeometry {
                expected: "spacelike or lightlike",
                got: other,
            })
        }
    }
    if points < 201 {
        return Err(crate::error::invalid_arg(format!(
            "grid needs at least 201 points, got {points}"
        )));
    }
    if n > 10 {
        return Err(crate::error::invalid_arg(format!(
            "grid residual supports n <= 10, got {n}"
        )));
    }
    let (x_min, x_max) = x_range;
    if x_max.is_nan() || x_min.is_nan() || x_max <= x_min {
        return Err(crate::error::invalid_arg(format!(
            "empty grid range [{x_min}, {x_max}]"
        )));
    }
    let h = (x_max - x_min) / (points - 1) as f64;
    let xs: Vec<f64> = (0..points).map(|i| x_min + h * i as f64).collect();
    let psi: Vec<Complex64> = xs
        .iter()
        .map(|&x| psi_shifted(geometry, n as usize, x, params))
        .collect::<Result<_>>()?;

    let eps = params.eps();
    let omega = params.omega_ratio();
    // spatial operator: -psi'' + i eps psi' + (w^2 x^2 - i eps w x + 1 - w) psi
    // with eigenvalue 1 + 2 n w on both the spacelike (E^2) and lightlike
    // (E^2 + eps E) sectors
    let rhs = 1.0 + crate::spectra::oscillator_eigenvalue(n, params);

    let center = 0.5 * (x_min + x_max);
    let half_window = 0.3 * (x_max - x_min);
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for i in 2..points - 2 {
        let x = xs[i];
        if (x - center).abs() > half_window {
            continue;
        }
        let d2 = (-psi[i - 2] + 16.0 * psi[i - 1] - 30.0 * psi[i] + 16.0 * psi[i + 1]
            - psi[i + 2])
            / (12.0 * h * h);
        let d1 = (psi[i - 2] - 8.0 * psi[i - 1] + 8.0 * psi[i + 1] - psi[i + 2]) / (12.0 * h);
        let potential = Complex64::new(omega * omega * x * x + 1.0 - omega, -eps * omega * x);
        let op = -d2 + Complex64::new(0.0, eps) * d1 + potential * psi[i];
        let residual = op - psi[i] * rhs;
        worst = worst.max(residual.norm());
        scale = scale.max(psi[i].norm());
    }
    if scale == 0.0 {
        return Err(crate::error::invalid_arg(
            "wavefunction vanished on the whole interior window".to_string(),
        ));
    }
    Ok(worst / (rhs * scale))
}

/// Pointwise eigenfunction residual suite.
pub fn suite_grid_residual(
    geometry: GeometryKind,
    n: u32,
    params: &ModelParams,
    x_range: (f64, f64),
    points: usize,
) -> Result<SuiteReport> {
    let started = Instant::now();
    let residual = grid_relative_residual(geometry, n, params, x_range, points)?;
    let checks = vec![CheckReport::new(
        format!("{geometry} n={n} relative L-inf residual ({points} points)"),
        residual,
        GRID_RESIDUAL_TOL,
    )];
    Ok(SuiteReport::from_checks(
        "grid",
        GRID_RESIDUAL_TOL,
        params,
        started,
        checks,
    ))
}

/// Branch-sum and reparametrized-symmetry identities for all geometries.
pub fn suite_branch_identities(params: &ModelParams, n_max: u32) -> Result<SuiteReport> {
    let started = Instant::now();
    let eps = params.eps();
    let mut worst_sum = [0.0f64; 5];
    let mut worst_reparam = 0.0f64;
    let mut worst_consistency = 0.0f64;
    for n in 0..=n_max {
        for (gi, geometry) in GeometryKind::ALL.into_iter().enumerate() {
            let expected = match geometry {
                GeometryKind::Sr | GeometryKind::Spacelike => 0.0,
                GeometryKind::Timelike | GeometryKind::Lightlike => -eps,
                GeometryKind::MagueijoSmolin => -2.0 * eps / (1.0 - eps * eps),
            };
            let sum = branch_sum(geometry, n, params)?;
            worst_sum[gi] = worst_sum[gi].max((sum - expected).abs());
            if matches!(geometry, GeometryKind::Timelike | GeometryKind::Lightlike) {
                let (plus, minus) = reparametrized_branches(geometry, n, params)?;
                worst_reparam = worst_reparam.max((plus + minus).abs());
                let b = energy_branches(geometry, n, params)?;
                worst_consistency = worst_consistency
                    .max((plus - (b.e_plus + 0.5 * eps)).abs())
                    .max((minus - (b.e_minus + 0.5 * eps)).abs());
            }
        }
    }
    let mut checks = Vec::new();
    for (gi, geometry) in GeometryKind::ALL.into_iter().enumerate() {
        checks.push(CheckReport::new(
            format!("branch sum identity ({geometry})"),
            worst_sum[gi],
            BRANCH_IDENTITY_TOL,
        ));
    }
    checks.push(CheckReport::new(
        "reparametrized symmetry (tl/ll)",
        worst_reparam,
        BRANCH_IDENTITY_TOL,
    ));
    checks.push(CheckReport::new(
        "reparametrization consistency with e_pm + eps/2",
        worst_consistency,
        BRANCH_IDENTITY_TOL,
    ));
    Ok(SuiteReport::from_checks(
        "branches",
        BRANCH_IDENTITY_TOL,
        params,
        started,
        checks,
    ))
}

/// Shift ratio `Delta e^MS / Delta e^TL` at the ground level for each eps:
/// approaches 2 from below as eps -> 0, with deviation bounded by
/// [`MS_RATIO_COEFF`] * eps.
pub fn suite_ms_ratio(eps_list: &[f64], params: &ModelParams) -> Result<SuiteReport> {
    let started = Instant::now();
    if eps_list.is_empty() {
        return Err(crate::error::invalid_arg("empty eps list"));
    }
    let mut entries: Vec<(f64, f64)> = Vec::with_capacity(eps_list.len());
    for &eps in eps_list {
        if !(eps > 0.0 && eps < 0.5) {
            return Err(crate::error::invalid_arg(format!(
                "ms-ratio eps values must lie in (0, 0.5), got {eps}"
            )));
        }
        let p = ModelParams::dimensionless(params.omega_ratio(), eps)?;
        let sr = energy_branches(GeometryKind::Sr, 0, &p)?.e_plus;
        let tl = energy_branches(GeometryKind::Timelike, 0, &p)?.e_plus - sr;
        let ms = energy_branches(GeometryKind::MagueijoSmolin, 0, &p)?.e_plus - sr;
        entries.push((eps, ms / tl));
    }
    let mut checks = Vec::new();
    let mut fitted_c = 0.0f64;
    for &(eps, ratio) in &entries {
        let deviation = (ratio - 2.0).abs();
        fitted_c = fitted_c.max(deviation / eps);
        checks.push(CheckReport::new(
            format!("|ratio(eps={eps:e}) - 2| <= C*eps"),
            deviation,
            MS_RATIO_COEFF * eps,
        ));
    }
    checks.push(CheckReport::new(
        "fitted deviation coefficient C",
        fitted_c,
        MS_RATIO_COEFF,
    ));
    // monotone approach to 2 as eps decreases
    let mut sorted = entries.clone();
    sorted.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite eps"));
    let monotone = sorted.windows(2).all(|w| w[0].1 <= w[1].1 && w[1].1 < 2.0);
    checks.push(CheckReport::new(
        "ratio increases monotonically toward 2",
        if monotone { 0.0 } else { 1.0 },
        0.5,
    ));
    Ok(SuiteReport::from_checks(
        "msratio",
        MS_RATIO_COEFF,
        params,
        started,
        checks,
    ))
}

/// Eta-Gram of the closed-form shifted eigenfunctions by Gauss-Hermite
/// quadrature: `G[m, n] = e^{2 delta kappa} integral conj(psi_m(x))
/// psi_n(x + 2 i delta) dx`, the position-space realization of
/// `<S psi_m, S psi_n>` after reducing the metric action analytically.
pub fn quadrature_eta_gram(
    count: usize,
    params: &ModelParams,
    order: usize,
) -> Result<crate::operators::GramMatrix> {
    let rule = gauss_hermite(order)?;
    let shifts = DeformationShifts::from_params(params);
    let sqrt_mw = params.m_omega().sqrt();
    let prefactor = (2.0 * shifts.delta * shifts.kappa).exp() / sqrt_mw;
    let xs: Vec<f64> = rule.nodes.iter().map(|&y| y / sqrt_mw).collect();
    let boost: Vec<f64> = rule.nodes.iter().map(|&y| (y * y).exp()).collect();
    // bra values on the real axis, ket values on the 2i*delta-shifted contour
    let mut bra: Vec<Vec<Complex64>> = Vec::with_capacity(count);
    let mut ket: Vec<Vec<Complex64>> = Vec::with_capacity(count);
    for n in 0..count {
        bra.push(
            xs.iter()
                .map(|&x| {
                    psi_shifted_at(GeometryKind::Spacelike, n, Complex64::new(x, 0.0), params)
                        .map(|v| v.conj())
                })
                .collect::<Result<_>>()?,
        );
        ket.push(
            xs.iter()
                .map(|&x| {
                    psi_shifted_at(
                        GeometryKind::Spacelike,
                        n,
                        Complex64::new(x, 2.0 * shifts.delta),
                        params,
                    )
                })
                .collect::<Result<_>>()?,
        );
    }
    Ok(DMatrix::from_fn(count, count, |m, n| {
        let sum: Complex64 = rule
            .weights
            .iter()
            .enumerate()
            .map(|(i, &w)| bra[m][i] * ket[n][i] * (w * boost[i]))
            .sum();
        sum * prefactor
    }))
}

fn max_identity_deviation(g: &DMatrix<Complex64>) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..g.nrows() {
        for j in 0..g.ncols() {
            let want = if i == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
            worst = worst.max((g[(i, j)] - want).norm());
        }
    }
    worst
}

/// Metric-structure suite: eta-orthonormality and biorthonormality of the
/// shifted states, metric Hermiticity/positivity, the pseudo-Hermiticity
/// relation, and the independent quadrature route to the Gram matrix.
pub fn suite_eta_structure(
    params: &ModelParams,
    n_dim: usize,
    m_count: usize,
    tol: f64,
) -> Result<SuiteReport> {
    let started = Instant::now();
    let gram = eta_gram(m_count, n_dim, params)?;
    let bio = biorthonormal_gram(m_count, n_dim, params)?;
    let eta = metric_matrix(n_dim, params)?;
    let h_sl = hamiltonian_sq(GeometryKind::Spacelike, n_dim, params)?;

    let mut checks = vec![
        CheckReport::new(
            format!("eta-Gram deviation from identity (M={m_count})"),
            max_identity_deviation(&gram),
            tol,
        ),
        CheckReport::new(
            "biorthonormal deviation from identity",
            max_identity_deviation(&bio),
            tol,
        ),
        CheckReport::new(
            "metric Hermiticity max |eta - eta^dagger|",
            (eta.entries() - eta.entries().adjoint())
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max),
            1e-12,
        ),
    ];

    // positivity of the interior block
    let k = (n_dim / 2).max(1);
    let block = eta.entries().view((0, 0), (k, k)).into_owned();
    let min_eig = block
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .fold(f64::INFINITY, |acc, &v| acc.min(v));
    checks.push(CheckReport::new(
        "metric interior block positive (residual = max(0, -min eig))",
        (-min_eig).max(0.0),
        f64::MIN_POSITIVE,
    ));

    checks.push(CheckReport::new(
        "pseudo-Hermiticity interior residual",
        pseudo_hermiticity_residual(&h_sl, &eta, 0.5)?,
        PSEUDO_HERMITICITY_TOL,
    ));

    let q_count = m_count.min(5);
    let quad = quadrature_eta_gram(q_count, params, 80)?;
    let mut agreement = 0.0f64;
    for m in 0..q_count {
        for n in 0..q_count {
            agreement = agreement.max((quad[(m, n)] - gram[(m, n)]).norm());
        }
    }
    checks.push(CheckReport::new(
        format!("quadrature-vs-matrix Gram agreement (m,n < {q_count})"),
        agreement,
        QUAD_AGREEMENT_TOL,
    ));

    Ok(SuiteReport::from_checks(
        "eta",
        tol,
        params,
        started,
        checks,
    ))
}

/// Closed-form branches against the independent per-level quadratic
/// root-finder over the deterministic CI parameter grid.
pub fn suite_quadratic_oracle(n_max: u32) -> Result<SuiteReport> {
    let started = Instant::now();
    let default_params = ModelParams::dimensionless(0.1, 0.2)?;
    let mut worst = 0.0f64;
    for &eps in &[0.0, 1e-4, 0.1, 0.2] {
        for &omega in &[0.05, 0.1, 1.0] {
            let params = ModelParams::dimensionless(omega, eps)?;
            for geometry in GeometryKind::ALL {
                for n in 0..=n_max {
                    let b = energy_branches(geometry, n, &params)?;
                    let (plus, minus) = timelike_quadratic_eigen(geometry, n, &params)?;
                    worst = worst
                        .max((b.e_plus - plus).abs())
                        .max((b.e_minus - minus).abs());
                }
            }
        }
    }
    let checks = vec![CheckReport::new(
        format!("closed form vs root-finder, all geometries, n <= {n_max}"),
        worst,
        1e-10,
    )];
    Ok(SuiteReport::from_checks(
        "quadratic-oracle",
        1e-10,
        &default_params,
        started,
        checks,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(omega: f64, eps: f64) -> ModelParams {
        ModelParams::dimensionless(omega, eps).unwrap()
    }

    #[test]
    fn branch_identities_pass_at_defaults() {
        let report = suite_branch_identities(&params(0.1, 0.2), 128).unwrap();
        assert!(report.pass, "{:?}", report.checks);
        assert!(report.worst_residual <= report.tolerance);
    }

    #[test]
    fn branch_identities_propagate_ms_degeneracy() {
        assert_eq!(
            suite_branch_identities(&params(0.1, 1.0), 4).unwrap_err(),
            Error::MsDegenerate { eps: 1.0 }
        );
    }

    #[test]
    fn ms_ratio_suite_frozen_examples() {
        let report = suite_ms_ratio(&[0.2, 0.01, 1e-3, 1e-4], &params(0.1, 0.2)).unwrap();
        assert!(report.pass, "{:?}", report.checks);
        // eps = 1e-4 sits within 1e-3 of 2
        let tiny = report
            .checks
            .iter()
            .find(|c| c.name.contains("1e-4"))
            .unwrap();
        assert!(tiny.residual < 1e-3);
    }

    #[test]
    fn ms_ratio_rejects_out_of_range_eps() {
        assert!(suite_ms_ratio(&[0.6], &params(0.1, 0.2)).is_err());
        assert!(suite_ms_ratio(&[], &params(0.1, 0.2)).is_err());
    }

    #[test]
    fn grid_residual_validates_inputs() {
        let p = params(0.1, 0.2);
        assert!(grid_relative_residual(GeometryKind::Sr, 0, &p, (-10.0, 10.0), 1001).is_err());
        assert!(
            grid_relative_residual(GeometryKind::Spacelike, 0, &p, (-10.0, 10.0), 100).is_err()
        );
        assert!(
            grid_relative_residual(GeometryKind::Spacelike, 11, &p, (-10.0, 10.0), 1001).is_err()
        );
        assert!(
            grid_relative_residual(GeometryKind::Spacelike, 0, &p, (10.0, -10.0), 1001).is_err()
        );
    }

    #[test]
    fn suite_reports_are_deterministic() {
        let p = params(0.1, 0.2);
        let a = suite_branch_identities(&p, 32).unwrap();
        let b = suite_branch_identities(&p, 32).unwrap();
        assert_eq!(a.checks, b.checks);
        assert_eq!(a.csv_rows(','), b.csv_rows(','));
        let ra = suite_ms_ratio(&[0.1, 0.01], &p).unwrap();
        let rb = suite_ms_ratio(&[0.1, 0.01], &p).unwrap();
        assert_eq!(ra.checks, rb.checks);
    }

    #[test]
    fn isospectral_rejects_oversized_check_range() {
        assert!(suite_isospectral(&params(0.1, 0.2), 16, 12, 1e-8).is_err());
    }
}
