//! Truncated number-basis matrix representations of the deformed oscillator.
//!
//! All operators are dense complex matrices over the first `N` harmonic
//! oscillator number states. Truncation corrupts the trailing rows and
//! columns, so operator identities are asserted on an interior block
//! (by default the leading half of the basis).
//!
//! Sign convention for the linear deformation term: with the ladder
//! definitions used here the oscillator-coupled momentum `p + i m w x`
//! equals `i sqrt(2 m w) a^dagger`, i.e. a pure raising operator. This is
//! fixed by requiring `(p + i m w x)(p - i m w x) = 2 m w a^dagger a`,
//! the reverted-product identity.

mod expm;

pub use expm::expm;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::Error;
use crate::kinematics::{GeometryKind, ModelParams};
use crate::special_functions::DeformationShifts;
use crate::Result;

/// Dense complex Gram matrix, as returned by the eta-structure operations.
pub type GramMatrix = DMatrix<Complex64>;

/// Basis tag for operator matrices. The artifact only uses the harmonic
/// oscillator number basis; the tag is immutable once built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Number,
}

/// A dense complex operator in the truncated number basis, together with the
/// parameter snapshot it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    dim: usize,
    entries: DMatrix<Complex64>,
    basis: Basis,
    params: ModelParams,
}

impl OperatorMatrix {
    fn new(entries: DMatrix<Complex64>, params: ModelParams) -> Self {
        let dim = entries.nrows();
        Self {
            dim,
            entries,
            basis: Basis::Number,
            params,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<Complex64> {
        self.entries
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    /// Largest entry magnitude over the leading `fraction` of rows/columns.
    pub fn interior_max_abs(&self, fraction: f64) -> f64 {
        interior_max_abs(&self.entries, fraction)
    }

    /// 2-norm condition number from the singular values.
    pub fn condition_number(&self) -> Result<f64> {
        let svd = self.entries.clone().svd(false, false);
        let max = svd.singular_values.max();
        let min = svd.singular_values.min();
        if min <= 0.0 {
            return Err(Error::SingularMatrix("operator has a zero singular value"));
        }
        Ok(max / min)
    }
}

/// Eigenvalue extraction route actually taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenMethod {
    /// Input was triangular; the spectrum is its diagonal, no iteration.
    TriangularDiagonal,
    /// Dense Schur reduction.
    DenseSchur,
}

/// Spectrum of a truncated operator, sorted by real part (ties by imaginary
/// part) for deterministic output.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<Complex64>,
    pub max_imag: f64,
    /// Count of eigenvalues matched against closed-form predictions; zero
    /// until [`SpectrumReport::matched_against`] is applied.
    pub matched_levels: usize,
    pub method: EigenMethod,
}

impl SpectrumReport {
    /// Match the leading sorted eigenvalues index-wise against sorted real
    /// predictions within a relative tolerance, recording the count.
    pub fn matched_against(mut self, predictions: &[f64], rel_tol: f64) -> Self {
        let mut sorted: Vec<f64> = predictions.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite predictions"));
        self.matched_levels = sorted
            .iter()
            .zip(&self.eigenvalues)
            .filter(|(&p, ev)| (*ev - Complex64::new(p, 0.0)).norm() <= rel_tol * p.abs().max(1.0))
            .count();
        self
    }
}

fn check_dim(n_dim: usize) -> Result<()> {
    if n_dim < 2 {
        Err(Error::InvalidDimension { dim: n_dim })
    } else {
        Ok(())
    }
}

fn interior_block_size(n: usize, fraction: f64) -> usize {
    ((n as f64 * fraction).floor() as usize).clamp(1, n)
}

pub(crate) fn interior_max_abs(m: &DMatrix<Complex64>, fraction: f64) -> f64 {
    let k = interior_block_size(m.nrows().min(m.ncols()), fraction);
    let mut max = 0.0f64;
    for i in 0..k {
        for j in 0..k {
            max = max.max(m[(i, j)].norm());
        }
    }
    max
}

/// Annihilation and creation matrices: `a[n-1, n] = sqrt(n)`,
/// `adag = a^dagger`.
pub fn ladder_matrices(n_dim: usize, params: &ModelParams) -> Result<(OperatorMatrix, OperatorMatrix)> {
    check_dim(n_dim)?;
    let mut a = DMatrix::<Complex64>::zeros(n_dim, n_dim);
    for k in 1..n_dim {
        a[(k - 1, k)] = Complex64::new((k as f64).sqrt(), 0.0);
    }
    let adag = a.adjoint();
    Ok((
        OperatorMatrix::new(a, *params),
        OperatorMatrix::new(adag, *params),
    ))
}

/// Position and momentum matrices `x = (a + a^dagger)/sqrt(2 m w)`,
/// `p = i sqrt(m w / 2) (a^dagger - a)`: Hermitian tridiagonal, with
/// `[x, p] = i` on the interior block.
pub fn xp_matrices(n_dim: usize, params: &ModelParams) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let (a, adag) = ladder_matrices(n_dim, params)?;
    let m_omega = params.m_omega();
    let x = (a.entries() + adag.entries()) * Complex64::new(1.0 / (2.0 * m_omega).sqrt(), 0.0);
    let p = (adag.entries() - a.entries()) * Complex64::new(0.0, (m_omega / 2.0).sqrt());
    Ok((
        OperatorMatrix::new(x, *params),
        OperatorMatrix::new(p, *params),
    ))
}

/// The reverted-product operator `(p + i m w x)(p - i m w x) = 2 m w a^dagger a`:
/// exactly `2 m w diag(0, 1, ..., N-1)`, with no truncation error anywhere.
pub fn reverted_product(n_dim: usize, params: &ModelParams) -> Result<OperatorMatrix> {
    check_dim(n_dim)?;
    let m_omega = params.m_omega();
    let entries = DMatrix::<Complex64>::from_fn(n_dim, n_dim, |i, j| {
        if i == j {
            Complex64::new(2.0 * m_omega * i as f64, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok(OperatorMatrix::new(entries, *params))
}

/// The reverted product built literally as the matrix product
/// `(p + i m w x)(p - i m w x)`; agrees with [`reverted_product`] on the
/// interior block (truncation corrupts only the last diagonal entry).
pub fn reverted_product_product_form(n_dim: usize, params: &ModelParams) -> Result<OperatorMatrix> {
    let (x, p) = xp_matrices(n_dim, params)?;
    let i_m_omega = Complex64::new(0.0, params.m_omega());
    let raising = p.entries() + x.entries() * i_m_omega;
    let lowering = p.entries() - x.entries() * i_m_omega;
    Ok(OperatorMatrix::new(raising * lowering, *params))
}

/// The oscillator-coupled momentum `p + i m w x = i sqrt(2 m w) a^dagger`
/// entering the linear deformation term.
pub fn coupled_momentum(n_dim: usize, params: &ModelParams) -> Result<OperatorMatrix> {
    let (_, adag) = ladder_matrices(n_dim, params)?;
    let scale = Complex64::new(0.0, (2.0 * params.m_omega()).sqrt());
    Ok(OperatorMatrix::new(adag.entries() * scale, *params))
}

/// Squared-energy operator `E^2 = P^2_rev + m^2 [- (m^2/E_p)(p + i m w x)]`.
///
/// SR gives the Hermitian diagonal `1 + 2 n Omega`; the spacelike geometry
/// subtracts `eps` times the raising combination, producing a non-Hermitian
/// lower-triangular matrix whose spectrum is exactly the SR diagonal.
pub fn hamiltonian_sq(
    geometry: GeometryKind,
    n_dim: usize,
    params: &ModelParams,
) -> Result<OperatorMatrix> {
    let base = reverted_product(n_dim, params)?;
    let mut entries = base.into_entries();
    for i in 0..n_dim {
        entries[(i, i)] += Complex64::new(1.0, 0.0);
    }
    match geometry {
        GeometryKind::Sr => {}
        GeometryKind::Spacelike => {
            let linear = coupled_momentum(n_dim, params)?;
            entries -= linear.entries() * Complex64::new(params.eps(), 0.0);
        }
        other => {
            return Err(Error::WrongGeometry {
                expected: "sr or spacelike",
                got: other,
            })
        }
    }
    Ok(OperatorMatrix::new(entries, *params))
}

/// Per-level energy quadratic coefficients `(a, b, c)` with
/// `a e^2 + b e + c = 0`.
fn level_quadratic(geometry: GeometryKind, n: u32, params: &ModelParams) -> Result<(f64, f64, f64)> {
    let lam = 1.0 + crate::spectra::oscillator_eigenvalue(n, params);
    let eps = params.eps();
    Ok(match geometry {
        GeometryKind::Sr | GeometryKind::Spacelike => (1.0, 0.0, -lam),
        GeometryKind::Timelike | GeometryKind::Lightlike => (1.0, eps, -lam),
        GeometryKind::MagueijoSmolin => {
            params.require_ms_valid()?;
            (1.0 - eps * eps, 2.0 * eps, -lam)
        }
    })
}

/// Both energy branches of level `n` from the per-level quadratic, solved by
/// bracketing bisection plus Newton polish -- an oracle deliberately
/// independent of the closed forms in [`crate::spectra`].
pub fn timelike_quadratic_eigen(
    geometry: GeometryKind,
    n: u32,
    params: &ModelParams,
) -> Result<(f64, f64)> {
    let (qa, qb, qc) = level_quadratic(geometry, n, params)?;
    let f = |e: f64| (qa * e + qb) * e + qc;
    let df = |e: f64| 2.0 * qa * e + qb;
    // f(0) = qc < 0 and qa > 0, so there is exactly one root on each side
    let plus = polished_root(&f, &df, 1.0, true)?;
    let minus = polished_root(&f, &df, -1.0, false)?;
    Ok((plus, minus))
}

fn polished_root(
    f: &impl Fn(f64) -> f64,
    df: &impl Fn(f64) -> f64,
    start: f64,
    positive: bool,
) -> Result<f64> {
    // expand the outer bracket until the sign flips
    let mut outer = start;
    let mut tries = 0usize;
    while f(outer) < 0.0 {
        outer *= 2.0;
        tries += 1;
        if tries > 200 {
            return Err(Error::NonConvergence {
                what: "quadratic root bracketing",
                iterations: tries,
            });
        }
    }
    let (mut lo, mut hi) = if positive { (0.0, outer) } else { (outer, 0.0) };
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        // f < 0 between the roots: the root with f >= 0 lies outward
        let fm = f(mid);
        if positive {
            if fm < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        } else if fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut root = 0.5 * (lo + hi);
    for _ in 0..3 {
        let d = df(root);
        if d != 0.0 {
            root -= f(root) / d;
        }
    }
    Ok(root)
}

/// The (generally non-unitary) similarity operator
/// `S = exp(-delta p) exp(-i kappa x)` mapping the spacelike/lightlike
/// operator to the Hermitian oscillator. Identity in the undeformed limit.
pub fn similarity_matrix(n_dim: usize, params: &ModelParams) -> Result<OperatorMatrix> {
    let (x, p) = xp_matrices(n_dim, params)?;
    let shifts = DeformationShifts::from_params(params);
    let left = expm(&(p.entries() * Complex64::new(-shifts.delta, 0.0)))?;
    let right = expm(&(x.entries() * Complex64::new(0.0, -shifts.kappa)))?;
    Ok(OperatorMatrix::new(left * right, *params))
}

/// Metric operator `eta = S^dagger S`: Hermitian positive-definite, reducing
/// the non-Hermitian spacelike dynamics to pseudo-Hermitian form.
pub fn metric_matrix(n_dim: usize, params: &ModelParams) -> Result<OperatorMatrix> {
    let s = similarity_matrix(n_dim, params)?;
    let eta = s.entries().adjoint() * s.entries();
    Ok(OperatorMatrix::new(eta, *params))
}

/// Analytically reduced metric `eta = e^{2 delta kappa} exp(-2 delta p)`
/// (conjugating `p` by the plane-wave unitary shifts it by `-kappa`, which
/// commutes into the scalar prefactor). Cross-check for [`metric_matrix`].
pub fn metric_matrix_reduced(n_dim: usize, params: &ModelParams) -> Result<OperatorMatrix> {
    let (_, p) = xp_matrices(n_dim, params)?;
    let shifts = DeformationShifts::from_params(params);
    let core = expm(&(p.entries() * Complex64::new(-2.0 * shifts.delta, 0.0)))?;
    let scale = (2.0 * shifts.delta * shifts.kappa).exp();
    Ok(OperatorMatrix::new(core * Complex64::new(scale, 0.0), *params))
}

/// Max-norm of the pseudo-Hermiticity defect `H^dagger eta - eta H` on the
/// leading `interior_fraction` of rows/columns.
pub fn pseudo_hermiticity_residual(
    h: &OperatorMatrix,
    eta: &OperatorMatrix,
    interior_fraction: f64,
) -> Result<f64> {
    if h.dim() != eta.dim() {
        return Err(crate::error::invalid_arg(format!(
            "dimension mismatch: H is {}, eta is {}",
            h.dim(),
            eta.dim()
        )));
    }
    if !(interior_fraction > 0.0 && interior_fraction <= 1.0) {
        return Err(crate::error::invalid_arg(format!(
            "interior fraction must lie in (0, 1], got {interior_fraction}"
        )));
    }
    if eta.entries().clone().cholesky().is_none() {
        return Err(Error::SingularMatrix(
            "metric operator is not positive definite at working precision",
        ));
    }
    let defect = h.entries().adjoint() * eta.entries() - eta.entries() * h.entries();
    Ok(interior_max_abs(&defect, interior_fraction))
}

/// Coefficient vectors of the shifted eigenstates `psi_n = S^{-1} |n>` for
/// `n < m_count`, as columns of an `N x M` matrix.
fn shifted_state_columns(
    m_count: usize,
    n_dim: usize,
    params: &ModelParams,
) -> Result<GramMatrix> {
    if m_count == 0 || m_count > n_dim / 2 {
        return Err(crate::error::invalid_arg(format!(
            "state count {m_count} must lie in 1..=N/2 (N = {n_dim})"
        )));
    }
    let s = similarity_matrix(n_dim, params)?;
    let rhs = DMatrix::<Complex64>::from_fn(n_dim, m_count, |i, j| {
        if i == j {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    s.into_entries()
        .lu()
        .solve(&rhs)
        .ok_or(Error::SingularMatrix("similarity operator"))
}

/// Gram matrix of the shifted eigenstates under the eta bilinear form,
/// `G[m, n] = <psi_m | eta | psi_n>`; approaches the identity on the leading
/// block as the basis grows.
pub fn eta_gram(m_count: usize, n_dim: usize, params: &ModelParams) -> Result<GramMatrix> {
    let psi = shifted_state_columns(m_count, n_dim, params)?;
    let eta = metric_matrix(n_dim, params)?;
    Ok(psi.adjoint() * eta.entries() * psi)
}

/// Biorthonormality matrix `<chi_m | psi_n>` with `chi_n = eta psi_n`; equals
/// the identity under the same truncation conditions as [`eta_gram`].
pub fn biorthonormal_gram(
    m_count: usize,
    n_dim: usize,
    params: &ModelParams,
) -> Result<GramMatrix> {
    let psi = shifted_state_columns(m_count, n_dim, params)?;
    let eta = metric_matrix(n_dim, params)?;
    let chi = eta.entries() * &psi;
    Ok(chi.adjoint() * psi)
}

const SCHUR_MAX_ITER: usize = 50_000;

/// All complex eigenvalues of a truncated operator.
///
/// Triangular inputs take the diagonal shortcut (flagged in the report);
/// everything else goes through a dense Schur reduction. Output ordering is
/// deterministic: ascending real part, ties by imaginary part.
pub fn eigenvalues(hm: &OperatorMatrix) -> Result<SpectrumReport> {
    let n = hm.dim();
    check_dim(n)?;
    let m = hm.entries();
    let strictly_lower_max = (0..n)
        .flat_map(|j| (j + 1..n).map(move |i| (i, j)))
        .map(|(i, j)| m[(i, j)].norm())
        .fold(0.0f64, f64::max);
    let strictly_upper_max = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| m[(i, j)].norm())
        .fold(0.0f64, f64::max);

    let (mut eigenvalues, method) = if strictly_lower_max == 0.0 || strictly_upper_max == 0.0 {
        let diag: Vec<Complex64> = (0..n).map(|i| m[(i, i)]).collect();
        (diag, EigenMethod::TriangularDiagonal)
    } else {
        let schur = m
            .clone()
            .try_schur(f64::EPSILON, SCHUR_MAX_ITER)
            .ok_or(Error::NonConvergence {
                what: "dense Schur reduction",
                iterations: SCHUR_MAX_ITER,
            })?;
        let vals = schur.eigenvalues().ok_or(Error::NonConvergence {
            what: "eigenvalue extraction from Schur form",
            iterations: SCHUR_MAX_ITER,
        })?;
        (vals.iter().copied().collect(), EigenMethod::DenseSchur)
    };
    eigenvalues.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .expect("finite eigenvalues")
            .then(a.im.partial_cmp(&b.im).expect("finite eigenvalues"))
    });
    let max_imag = eigenvalues.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    Ok(SpectrumReport {
        eigenvalues,
        max_imag,
        matched_levels: 0,
        method,
    })
}

/// Convenience: eigenvalues of an arbitrary dense matrix with the same
/// contract as [`eigenvalues`].
pub fn eigenvalues_of(entries: DMatrix<Complex64>, params: &ModelParams) -> Result<SpectrumReport> {
    eigenvalues(&OperatorMatrix::new(entries, *params))
}

/// Companion matrix of `e^2 + b e + c`, used to cross-check the scalar
/// root-finder against the dense eigensolver.
pub fn quadratic_companion(b: f64, c: f64, params: &ModelParams) -> OperatorMatrix {
    let mut m = DMatrix::<Complex64>::zeros(2, 2);
    m[(0, 1)] = Complex64::new(-c, 0.0);
    m[(1, 0)] = Complex64::new(1.0, 0.0);
    m[(1, 1)] = Complex64::new(-b, 0.0);
    OperatorMatrix::new(m, *params)
}
