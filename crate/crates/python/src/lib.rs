//! Python bindings for the DSR-deformed Klein-Gordon oscillator library.
//!
//! Exposes the model parameters, closed-form spectra, special functions and
//! the verification suites. Build the cdylib and rename it to `dsr_osc.so`
//! (see `python/smoke_test.py`), then:
//!
//! ```python
//! import dsr_osc
//! p = dsr_osc.Params(omega=0.1, eps=0.2)
//! e_plus, e_minus, admissible = dsr_osc.energy_branches("tl", 0, p)
//! ```

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dsr_osc_core::kinematics::{Covector, GeometryKind, ModelParams, TwoMomentum};
use dsr_osc_core::{operators, special_functions, spectra, verification};

fn to_py_err(e: dsr_osc_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn geometry(label: &str) -> PyResult<GeometryKind> {
    GeometryKind::parse(label).map_err(to_py_err)
}

/// Model parameters in the dimensionless frame (Omega = omega/m, eps = m/E_p).
#[pyclass(name = "Params")]
struct PyParams {
    inner: ModelParams,
}

#[pymethods]
impl PyParams {
    #[new]
    #[pyo3(signature = (omega = 0.10, eps = 0.20))]
    fn new(omega: f64, eps: f64) -> PyResult<Self> {
        Ok(Self {
            inner: ModelParams::dimensionless(omega, eps).map_err(to_py_err)?,
        })
    }

    /// Build from dimensional mass, frequency and deformation scale
    /// (math.inf for the undeformed limit).
    #[staticmethod]
    fn from_physical(mass: f64, omega: f64, planck_energy: f64) -> PyResult<Self> {
        Ok(Self {
            inner: ModelParams::from_physical(mass, omega, planck_energy).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn omega(&self) -> f64 {
        self.inner.omega_ratio()
    }

    #[getter]
    fn eps(&self) -> f64 {
        self.inner.eps()
    }

    fn __repr__(&self) -> String {
        format!(
            "Params(omega={}, eps={})",
            self.inner.omega_ratio(),
            self.inner.eps()
        )
    }
}

/// Outcome of one verification suite.
#[pyclass(name = "SuiteReport")]
struct PySuiteReport {
    #[pyo3(get)]
    suite: String,
    #[pyo3(get)]
    pass_: bool,
    #[pyo3(get)]
    worst_residual: f64,
    #[pyo3(get)]
    tolerance: f64,
    #[pyo3(get)]
    runtime_ms: u128,
    /// (name, residual, tolerance, pass) per check.
    #[pyo3(get)]
    checks: Vec<(String, f64, f64, bool)>,
}

#[pymethods]
impl PySuiteReport {
    fn __repr__(&self) -> String {
        format!(
            "SuiteReport(suite='{}', pass={}, worst_residual={:e}, tolerance={:e})",
            self.suite, self.pass_, self.worst_residual, self.tolerance
        )
    }
}

impl From<verification::SuiteReport> for PySuiteReport {
    fn from(r: verification::SuiteReport) -> Self {
        Self {
            suite: r.suite.clone(),
            pass_: r.pass,
            worst_residual: r.worst_residual,
            tolerance: r.tolerance,
            runtime_ms: r.runtime.as_millis(),
            checks: r
                .checks
                .iter()
                .map(|c| (c.name.clone(), c.residual, c.tolerance, c.pass))
                .collect(),
        }
    }
}

/// Oscillator eigenvalue 2 n m omega of the reverted-product operator.
#[pyfunction]
fn oscillator_eigenvalue(n: u32, params: &PyParams) -> f64 {
    spectra::oscillator_eigenvalue(n, &params.inner)
}

/// Both dimensionless energy branches: returns (e_plus, e_minus, admissible).
#[pyfunction]
fn energy_branches(geometry_label: &str, n: u32, params: &PyParams) -> PyResult<(f64, f64, bool)> {
    let b = spectra::energy_branches(geometry(geometry_label)?, n, &params.inner)
        .map_err(to_py_err)?;
    Ok((b.e_plus, b.e_minus, b.admissible))
}

/// Level-independent branch sum e_plus + e_minus.
#[pyfunction]
fn branch_sum(geometry_label: &str, n: u32, params: &PyParams) -> PyResult<f64> {
    spectra::branch_sum(geometry(geometry_label)?, n, &params.inner).map_err(to_py_err)
}

/// Branches of the shifted energy E + m^2/(2 E_p) (timelike/lightlike only).
#[pyfunction]
fn reparametrized_branches(
    geometry_label: &str,
    n: u32,
    params: &PyParams,
) -> PyResult<(f64, f64)> {
    spectra::reparametrized_branches(geometry(geometry_label)?, n, &params.inner)
        .map_err(to_py_err)
}

/// Conservative below-pole level bound, or None when unbounded.
#[pyfunction]
fn admissible_nmax(geometry_label: &str, params: &PyParams) -> PyResult<Option<u64>> {
    Ok(spectra::admissible_nmax(geometry(geometry_label)?, &params.inner))
}

/// Leading-order shift of the positive branch relative to SR.
#[pyfunction]
fn leading_shift(geometry_label: &str, params: &PyParams) -> PyResult<f64> {
    Ok(spectra::leading_shift(geometry(geometry_label)?, &params.inner))
}

/// Rows (n, geometry, delta_e_plus, leading) for n <= n_max, all geometries.
#[pyfunction]
fn shift_table(params: &PyParams, n_max: u32) -> PyResult<Vec<(u32, String, f64, f64)>> {
    Ok(spectra::shift_table(&params.inner, n_max)
        .map_err(to_py_err)?
        .into_iter()
        .map(|r| (r.n, r.geometry.label().to_string(), r.delta_e_plus, r.leading))
        .collect())
}

/// Nonlinear momentum map for a canonical covector class (tl, sl or ll).
#[pyfunction]
fn deformed_map(
    energy: f64,
    momentum: f64,
    covector: &str,
    params: &PyParams,
) -> PyResult<(f64, f64)> {
    let a = match covector.trim().to_ascii_lowercase().as_str() {
        "tl" | "timelike" => Covector::timelike(),
        "sl" | "spacelike" => Covector::spacelike(),
        "ll" | "lightlike" => Covector::lightlike(),
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown covector '{other}' (expected tl, sl or ll)"
            )))
        }
    };
    let pi = dsr_osc_core::kinematics::deformed_map(
        TwoMomentum::new(energy, momentum),
        a,
        &params.inner,
    )
    .map_err(to_py_err)?;
    Ok((pi.energy, pi.momentum))
}

/// Dispersion-relation residual (LHS - m^2) in units of m^2.
#[pyfunction]
fn casimir_residual(
    energy: f64,
    momentum: f64,
    geometry_label: &str,
    params: &PyParams,
) -> PyResult<f64> {
    dsr_osc_core::kinematics::casimir_residual(
        TwoMomentum::new(energy, momentum),
        geometry(geometry_label)?,
        &params.inner,
    )
    .map_err(to_py_err)
}

/// Physicists' Hermite polynomial at complex argument.
#[pyfunction]
fn hermite(n: usize, z: Complex64) -> PyResult<Complex64> {
    special_functions::hermite(n, z).map_err(to_py_err)
}

/// Oscillator normalization constant (m omega / pi)^(1/4) / sqrt(2^n n!).
#[pyfunction]
fn norm_const(n: usize, m_omega: f64) -> PyResult<f64> {
    special_functions::norm_const(n, m_omega).map_err(to_py_err)
}

/// Normalized Hermite-Gaussian phi_n(x).
#[pyfunction]
fn phi(n: usize, x: f64, params: &PyParams) -> PyResult<f64> {
    special_functions::phi(n, x, &params.inner).map_err(to_py_err)
}

/// Complex-shifted eigenfunction of the spacelike/lightlike sectors.
#[pyfunction]
fn psi_shifted(geometry_label: &str, n: usize, x: f64, params: &PyParams) -> PyResult<Complex64> {
    special_functions::psi_shifted(geometry(geometry_label)?, n, x, &params.inner)
        .map_err(to_py_err)
}

/// Momentum/position shifts (kappa, delta) induced by the similarity map.
#[pyfunction]
fn deformation_shifts(params: &PyParams) -> (f64, f64) {
    let s = special_functions::DeformationShifts::from_params(&params.inner);
    (s.kappa, s.delta)
}

/// Gauss-Hermite nodes and weights of the given order.
#[pyfunction]
fn gauss_hermite(order: usize) -> PyResult<(Vec<f64>, Vec<f64>)> {
    let rule = special_functions::gauss_hermite(order).map_err(to_py_err)?;
    Ok((rule.nodes, rule.weights))
}

/// Eigenvalues of the truncated spacelike squared-energy operator (exactly
/// the SR diagonal by triangularity), sorted by real part.
#[pyfunction]
fn spacelike_eigenvalues(n_dim: usize, params: &PyParams) -> PyResult<Vec<Complex64>> {
    let h = operators::hamiltonian_sq(GeometryKind::Spacelike, n_dim, &params.inner)
        .map_err(to_py_err)?;
    Ok(operators::eigenvalues(&h).map_err(to_py_err)?.eigenvalues)
}

/// Interior-block pseudo-Hermiticity residual of the spacelike sector.
#[pyfunction]
fn pseudo_hermiticity_residual(
    n_dim: usize,
    interior_fraction: f64,
    params: &PyParams,
) -> PyResult<f64> {
    let h = operators::hamiltonian_sq(GeometryKind::Spacelike, n_dim, &params.inner)
        .map_err(to_py_err)?;
    let eta = operators::metric_matrix(n_dim, &params.inner).map_err(to_py_err)?;
    operators::pseudo_hermiticity_residual(&h, &eta, interior_fraction).map_err(to_py_err)
}

/// Max deviation of the eta-Gram of the first m shifted states from identity.
#[pyfunction]
fn eta_gram_deviation(m_count: usize, n_dim: usize, params: &PyParams) -> PyResult<f64> {
    let g = operators::eta_gram(m_count, n_dim, &params.inner).map_err(to_py_err)?;
    let mut dev = 0.0f64;
    for i in 0..m_count {
        for j in 0..m_count {
            let want = if i == j { 1.0 } else { 0.0 };
            dev = dev.max((g[(i, j)] - want).norm());
        }
    }
    Ok(dev)
}

/// Run one verification suite: isospectral, grid, branches, msratio or eta.
#[pyfunction]
#[pyo3(signature = (suite, params, basis = 128))]
fn run_suite(suite: &str, params: &PyParams, basis: usize) -> PyResult<PySuiteReport> {
    let p = &params.inner;
    let report = match suite {
        "isospectral" => verification::suite_isospectral(p, basis, (basis / 2).min(25), 1e-8),
        "grid" => {
            let l = 8.0 / p.m_omega().sqrt();
            verification::suite_grid_residual(GeometryKind::Spacelike, 0, p, (-l, l), 4001)
        }
        "branches" => verification::suite_branch_identities(p, 25),
        "msratio" => verification::suite_ms_ratio(&[0.2, 0.1, 0.01, 1e-3, 1e-4], p),
        "eta" => verification::suite_eta_structure(p, basis, 8, 1e-8),
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown suite '{other}' (expected isospectral, grid, branches, msratio or eta)"
            )))
        }
    }
    .map_err(to_py_err)?;
    Ok(report.into())
}

#[pymodule]
fn dsr_osc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyParams>()?;
    m.add_class::<PySuiteReport>()?;
    m.add_function(wrap_pyfunction!(oscillator_eigenvalue, m)?)?;
    m.add_function(wrap_pyfunction!(energy_branches, m)?)?;
    m.add_function(wrap_pyfunction!(branch_sum, m)?)?;
    m.add_function(wrap_pyfunction!(reparametrized_branches, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_nmax, m)?)?;
    m.add_function(wrap_pyfunction!(leading_shift, m)?)?;
    m.add_function(wrap_pyfunction!(shift_table, m)?)?;
    m.add_function(wrap_pyfunction!(deformed_map, m)?)?;
    m.add_function(wrap_pyfunction!(casimir_residual, m)?)?;
    m.add_function(wrap_pyfunction!(hermite, m)?)?;
    m.add_function(wrap_pyfunction!(norm_const, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(psi_shifted, m)?)?;
    m.add_function(wrap_pyfunction!(deformation_shifts, m)?)?;
    m.add_function(wrap_pyfunction!(gauss_hermite, m)?)?;
    m.add_function(wrap_pyfunction!(spacelike_eigenvalues, m)?)?;
    m.add_function(wrap_pyfunction!(pseudo_hermiticity_residual, m)?)?;
    m.add_function(wrap_pyfunction!(eta_gram_deviation, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
