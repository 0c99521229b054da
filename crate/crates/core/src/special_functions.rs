//! Hermite-Gaussian eigenfunctions and Gauss-Hermite quadrature.
//!
//! The spacelike and lightlike sectors shift the oscillator eigenfunctions by
//! a complex translation and a plane-wave phase,
//! `psi_n(x) = e^{i kappa x} phi_n(x - i delta)`, with
//! `kappa = m^2/(2 E_p)` and `delta = m/(2 omega E_p)`. The integrands are
//! entire, so the complex shift is evaluated analytically (Hermite polynomial
//! and Gaussian factor at complex argument), not by contour quadrature.

use num_complex::Complex64;

use crate::error::Error;
use crate::kinematics::{GeometryKind, ModelParams};
use crate::Result;

/// Highest supported Hermite degree; forward recurrence is stable but the
/// values overflow f64 long before this for large arguments.
pub const MAX_HERMITE_DEGREE: usize = 512;

/// Momentum and position shifts induced by the spacelike/lightlike
/// similarity map: `kappa = m eps / 2` (units of m), `delta = eps/(2 Omega m)`
/// (units of 1/m). Both vanish iff the deformation does.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationShifts {
    pub kappa: f64,
    pub delta: f64,
}

impl DeformationShifts {
    pub fn from_params(params: &ModelParams) -> Self {
        let eps = params.eps();
        Self {
            kappa: 0.5 * eps,
            delta: 0.5 * eps / params.omega_ratio(),
        }
    }
}

/// A sampled wavefunction value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavefunctionSample {
    /// Position in units of 1/m.
    pub x: f64,
    pub value: Complex64,
}

/// Physicists' Hermite polynomial `H_n(z)` by the three-term recurrence
/// `H_{k+1} = 2 z H_k - 2 k H_{k-1}`.
pub fn hermite(n: usize, z: Complex64) -> Result<Complex64> {
    if n > MAX_HERMITE_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            max: MAX_HERMITE_DEGREE,
        });
    }
    let mut prev = Complex64::new(1.0, 0.0);
    if n == 0 {
        return Ok(prev);
    }
    let mut curr = 2.0 * z;
    for k in 1..n {
        let next = 2.0 * z * curr - 2.0 * (k as f64) * prev;
        prev = curr;
        curr = next;
    }
    if curr.re.is_finite() && curr.im.is_finite() {
        Ok(curr)
    } else {
        Err(Error::RangeOverflow { context: "hermite" })
    }
}

/// ln(n!) by direct accumulation; exact enough through the supported degrees.
fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Oscillator normalization constant `(m omega / pi)^{1/4} / sqrt(2^n n!)`,
/// accumulated in log space so large degrees do not overflow.
pub fn norm_const(n: usize, m_omega: f64) -> Result<f64> {
    if !(m_omega.is_finite() && m_omega > 0.0) {
        return Err(crate::error::invalid_arg(format!(
            "m*omega must be positive and finite, got {m_omega}"
        )));
    }
    let log_norm = 0.25 * (m_omega / std::f64::consts::PI).ln()
        - 0.5 * ((n as f64) * std::f64::consts::LN_2 + ln_factorial(n));
    Ok(log_norm.exp())
}

/// Normalized Hermite-Gaussian `phi_n(x)`.
pub fn phi(n: usize, x: f64, params: &ModelParams) -> Result<f64> {
    let v = phi_complex(n, Complex64::new(x, 0.0), params)?;
    Ok(v.re)
}

/// Analytic continuation of `phi_n` to complex argument.
pub fn phi_complex(n: usize, z: Complex64, params: &ModelParams) -> Result<Complex64> {
    let m_omega = params.m_omega();
    let norm = norm_const(n, m_omega)?;
    let h = hermite(n, m_omega.sqrt() * z)?;
    let gauss = (-0.5 * m_omega * z * z).exp();
    let v = norm * gauss * h;
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::RangeOverflow { context: "phi" })
    }
}

/// Complex-shifted eigenfunction `e^{i kappa x} phi_n(x - i delta)` of the
/// spacelike/lightlike sectors. The other geometries keep the unshifted
/// `phi_n` and are rejected here.
pub fn psi_shifted(geometry: GeometryKind, n: usize, x: f64, params: &ModelParams) -> Result<Complex64> {
    psi_shifted_at(geometry, n, Complex64::new(x, 0.0), params)
}

/// [`psi_shifted`] at complex argument; used by the quadrature-based metric
/// checks, which integrate along shifted contours.
pub fn psi_shifted_at(
    geometry: GeometryKind,
    n: usize,
    z: Complex64,
    params: &ModelParams,
) -> Result<Complex64> {
    match geometry {
        GeometryKind::Spacelike | GeometryKind::Lightlike => {}
        other => {
            return Err(Error::WrongGeometry {
                expected: "spacelike or lightlike",
                got: other,
            })
        }
    }
    let shifts = DeformationShifts::from_params(params);
    let phase = (Complex64::i() * shifts.kappa * z).exp();
    let shifted = phi_complex(n, z - Complex64::i() * shifts.delta, params)?;
    Ok(phase * shifted)
}

/// Nodes and weights of a Gauss-Hermite rule: exact for
/// `integral e^{-y^2} P(y) dy` with `deg P <= 2*order - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// `sum_i w_i f(y_i)`, approximating `integral e^{-y^2} f(y) dy`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&y, &w)| w * f(y))
            .sum()
    }

    /// Complex-valued counterpart of [`QuadratureRule::integrate`].
    pub fn integrate_complex<F: Fn(f64) -> Complex64>(&self, f: F) -> Complex64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&y, &w)| w * f(y))
            .sum()
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }
}

/// Gauss-Hermite rule by Golub-Welsch: eigenvalues of the symmetric
/// tridiagonal Jacobi matrix (off-diagonal `sqrt(k/2)`) are the nodes and the
/// squared first eigenvector components scaled by `sqrt(pi)` the weights.
/// Nodes come out symmetrized about 0 with positive weights.
pub fn gauss_hermite(order: usize) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(crate::error::invalid_arg("quadrature order must be >= 1"));
    }
    if order == 1 {
        return Ok(QuadratureRule {
            nodes: vec![0.0],
            weights: vec![std::f64::consts::PI.sqrt()],
        });
    }
    let mut jacobi = nalgebra::DMatrix::<f64>::zeros(order, order);
    for k in 1..order {
        let off = (k as f64 / 2.0).sqrt();
        jacobi[(k - 1, k)] = off;
        jacobi[(k, k - 1)] = off;
    }
    let eigen = nalgebra::SymmetricEigen::try_new(jacobi, f64::EPSILON, 10_000).ok_or(
        Error::NonConvergence {
            what: "Gauss-Hermite node eigensolve",
            iterations: 10_000,
        },
    )?;
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let mut pairs: Vec<(f64, f64)> = (0..order)
        .map(|i| {
            let first = eigen.eigenvectors[(0, i)];
            (eigen.eigenvalues[i], sqrt_pi * first * first)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite nodes"));
    // enforce the exact +/- symmetry of the rule
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    for i in 0..order {
        let j = order - 1 - i;
        nodes[i] = 0.5 * (pairs[i].0 - pairs[j].0);
        weights[i] = 0.5 * (pairs[i].1 + pairs[j].1);
    }
    if weights.iter().any(|&w| w.is_nan() || w <= 0.0) {
        return Err(Error::NonConvergence {
            what: "Gauss-Hermite weight computation",
            iterations: 10_000,
        });
    }
    Ok(QuadratureRule { nodes, weights })
}
