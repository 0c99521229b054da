//! Free-particle level of the deformed theory.
//!
//! The nonlinear map sends physical momenta `p^mu = (E, p)` to auxiliary
//! variables `pi^mu = p^mu / sqrt(1 + a.p / E_p)` that satisfy the ordinary
//! mass-shell condition. Imposing `pi.pi = -m^2` produces a linear-fractional
//! deformed Casimir whose denominator depends on the causal class of the
//! constant covector `a_mu`:
//!
//! | class     | representative | denominator        |
//! |-----------|----------------|--------------------|
//! | timelike  | (-1, 0)        | 1 - E/E_p          |
//! | spacelike | (0, -1)        | 1 - p/E_p          |
//! | lightlike | (-1, -1)       | 1 - (E + p)/E_p    |
//!
//! The Magueijo-Smolin invariant squares the timelike denominator. All
//! quantities here are dimensionless: energies and momenta in units of `m`,
//! the deformation controlled by `eps = m/E_p`.

use crate::error::Error;
use crate::Result;

/// A (1+1)-dimensional two-momentum in units of the mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoMomentum {
    /// Energy `E/m`.
    pub energy: f64,
    /// Spatial momentum `p/m`.
    pub momentum: f64,
}

impl TwoMomentum {
    pub fn new(energy: f64, momentum: f64) -> Self {
        Self { energy, momentum }
    }

    fn check_finite(&self) -> Result<()> {
        if self.energy.is_finite() && self.momentum.is_finite() {
            Ok(())
        } else {
            Err(crate::error::invalid_arg(format!(
                "two-momentum components must be finite, got ({}, {})",
                self.energy, self.momentum
            )))
        }
    }
}

/// Causal class of a constant covector under signature diag(-1, +1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalClass {
    Timelike,
    Spacelike,
    Lightlike,
}

/// A constant covector `a_mu = (a0, a1)` selecting the deformation direction.
///
/// Only the causal class matters: arbitrary covectors are classified and then
/// mapped to the canonical representative of their class, because in (1+1)
/// dimensions the three classes exhaust the inequivalent cases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Covector {
    pub a0: f64,
    pub a1: f64,
}

impl Covector {
    pub fn new(a0: f64, a1: f64) -> Self {
        Self { a0, a1 }
    }

    /// Canonical timelike representative (-1, 0).
    pub fn timelike() -> Self {
        Self::new(-1.0, 0.0)
    }

    /// Canonical spacelike representative (0, -1).
    pub fn spacelike() -> Self {
        Self::new(0.0, -1.0)
    }

    /// Canonical lightlike representative (-1, -1).
    pub fn lightlike() -> Self {
        Self::new(-1.0, -1.0)
    }

    /// Causal classification from the sign of `a.a = -a0^2 + a1^2`.
    pub fn classify(&self) -> Result<CausalClass> {
        if self.a0 == 0.0 && self.a1 == 0.0 {
            return Err(Error::NullCovector);
        }
        let norm_sq = -self.a0 * self.a0 + self.a1 * self.a1;
        Ok(if norm_sq < 0.0 {
            CausalClass::Timelike
        } else if norm_sq > 0.0 {
            CausalClass::Spacelike
        } else {
            CausalClass::Lightlike
        })
    }

    /// The canonical representative of this covector's causal class.
    pub fn canonical(&self) -> Result<Covector> {
        Ok(match self.classify()? {
            CausalClass::Timelike => Covector::timelike(),
            CausalClass::Spacelike => Covector::spacelike(),
            CausalClass::Lightlike => Covector::lightlike(),
        })
    }
}

/// Which deformed Casimir is in force.
///
/// `Sr` is the undeformed relation `E^2 - p^2 = m^2`; the three causal
/// geometries carry the first-power denominator; `MagueijoSmolin` squares it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeometryKind {
    Sr,
    Timelike,
    Spacelike,
    Lightlike,
    MagueijoSmolin,
}

impl GeometryKind {
    /// All geometries in canonical (enum) order.
    pub const ALL: [GeometryKind; 5] = [
        GeometryKind::Sr,
        GeometryKind::Timelike,
        GeometryKind::Spacelike,
        GeometryKind::Lightlike,
        GeometryKind::MagueijoSmolin,
    ];

    /// Short lowercase label used in CSV output and CLI selectors.
    pub fn label(&self) -> &'static str {
        match self {
            GeometryKind::Sr => "sr",
            GeometryKind::Timelike => "tl",
            GeometryKind::Spacelike => "sl",
            GeometryKind::Lightlike => "ll",
            GeometryKind::MagueijoSmolin => "ms",
        }
    }

    /// Parse a label produced by [`GeometryKind::label`].
    pub fn parse(s: &str) -> Result<GeometryKind> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sr" => Ok(GeometryKind::Sr),
            "tl" | "timelike" => Ok(GeometryKind::Timelike),
            "sl" | "spacelike" => Ok(GeometryKind::Spacelike),
            "ll" | "lightlike" => Ok(GeometryKind::Lightlike),
            "ms" | "magueijo-smolin" | "magueijosmolin" => Ok(GeometryKind::MagueijoSmolin),
            other => Err(crate::error::invalid_arg(format!(
                "unknown geometry '{other}' (expected sr, tl, sl, ll or ms)"
            ))),
        }
    }
}

impl std::fmt::Display for GeometryKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Model parameters in the dimensionless frame.
///
/// Dimensional inputs `(m, omega, E_p)` are normalized on ingestion to the
/// pair `Omega = omega/m`, `eps = m/E_p`; the numerical core works with
/// `m = 1` throughout. `eps = 0` is the undeformed (special-relativistic)
/// limit `E_p -> infinity`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    omega_ratio: f64,
    eps: f64,
}

impl ModelParams {
    /// Build directly from the dimensionless pair `(Omega, eps)`.
    pub fn dimensionless(omega_ratio: f64, eps: f64) -> Result<Self> {
        if !(omega_ratio.is_finite() && omega_ratio > 0.0) {
            return Err(crate::error::invalid_arg(format!(
                "oscillator ratio Omega must be positive and finite, got {omega_ratio}"
            )));
        }
        if !(eps.is_finite() && eps >= 0.0) {
            return Err(crate::error::invalid_arg(format!(
                "deformation ratio eps must be finite and >= 0, got {eps}"
            )));
        }
        Ok(Self { omega_ratio, eps })
    }

    /// Build from dimensional inputs; `planck_energy` may be infinite for the
    /// undeformed limit.
    pub fn from_physical(mass: f64, omega: f64, planck_energy: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(crate::error::invalid_arg(format!(
                "mass must be positive and finite, got {mass}"
            )));
        }
        if !(omega.is_finite() && omega > 0.0) {
            return Err(crate::error::invalid_arg(format!(
                "frequency must be positive and finite, got {omega}"
            )));
        }
        if planck_energy.is_nan() || planck_energy <= 0.0 {
            return Err(crate::error::invalid_arg(format!(
                "deformation scale must be positive, got {planck_energy}"
            )));
        }
        let eps = if planck_energy.is_infinite() {
            0.0
        } else {
            mass / planck_energy
        };
        Self::dimensionless(omega / mass, eps)
    }

    /// `Omega = omega/m`.
    pub fn omega_ratio(&self) -> f64 {
        self.omega_ratio
    }

    /// `eps = m/E_p` (zero in the undeformed limit).
    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// `m*omega` in internal units (`m = 1`), the Gaussian width parameter.
    pub fn m_omega(&self) -> f64 {
        self.omega_ratio
    }

    /// Whether the undeformed limit is in force.
    pub fn is_undeformed(&self) -> bool {
        self.eps == 0.0
    }

    /// Magueijo-Smolin evaluations need `1 - eps^2 > 0`.
    pub fn require_ms_valid(&self) -> Result<()> {
        if self.eps < 1.0 {
            Ok(())
        } else {
            Err(Error::MsDegenerate { eps: self.eps })
        }
    }
}

/// Contraction `a.p` for the canonical representatives, hard-coded to the
/// stated sign conventions: -E (timelike), -p (spacelike), -(E+p) (lightlike).
fn canonical_contraction(class: CausalClass, p: TwoMomentum) -> f64 {
    match class {
        CausalClass::Timelike => -p.energy,
        CausalClass::Spacelike => -p.momentum,
        CausalClass::Lightlike => -(p.energy + p.momentum),
    }
}

/// Deformation denominator `1 + a.p / E_p` for a first-power geometry.
fn first_power_denominator(class: CausalClass, p: TwoMomentum, params: &ModelParams) -> f64 {
    1.0 + params.eps() * canonical_contraction(class, p)
}

/// The nonlinear map `pi^mu = p^mu / sqrt(1 + a.p / E_p)`.
///
/// Identity map in the undeformed limit. Errors with
/// [`Error::DomainViolation`] when the square-root argument is not positive,
/// i.e. outside the region where the map is well-defined.
pub fn deformed_map(p: TwoMomentum, a: Covector, params: &ModelParams) -> Result<TwoMomentum> {
    p.check_finite()?;
    let class = a.classify()?;
    let denom = first_power_denominator(class, p, params);
    if denom <= 0.0 {
        return Err(Error::DomainViolation { denominator: denom });
    }
    let scale = denom.sqrt();
    Ok(TwoMomentum::new(p.energy / scale, p.momentum / scale))
}

/// Left-hand side minus `m^2` of the dispersion relation for `geometry`,
/// in units of `m^2`. Zero (to round-off) exactly on the deformed mass shell.
pub fn casimir_residual(
    p: TwoMomentum,
    geometry: GeometryKind,
    params: &ModelParams,
) -> Result<f64> {
    p.check_finite()?;
    let invariant = p.energy * p.energy - p.momentum * p.momentum;
    let eps = params.eps();
    let lhs = match geometry {
        GeometryKind::Sr => invariant,
        GeometryKind::Timelike | GeometryKind::Spacelike | GeometryKind::Lightlike => {
            let class = match geometry {
                GeometryKind::Timelike => CausalClass::Timelike,
                GeometryKind::Spacelike => CausalClass::Spacelike,
                _ => CausalClass::Lightlike,
            };
            let denom = first_power_denominator(class, p, params);
            if denom <= 0.0 {
                return Err(Error::DomainViolation { denominator: denom });
            }
            invariant / denom
        }
        GeometryKind::MagueijoSmolin => {
            let denom = 1.0 - eps * p.energy;
            if denom == 0.0 {
                return Err(Error::MsPole);
            }
            invariant / (denom * denom)
        }
    };
    Ok(lhs - 1.0)
}

/// Deviation of the map from its first-order expansion
/// `pi = p [1 - (a.p)/(2 E_p)]`, as the max absolute component difference.
///
/// Scales as `O(eps^2)` as `eps -> 0` at fixed momentum.
pub fn map_expansion_defect(p: TwoMomentum, a: Covector, params: &ModelParams) -> Result<f64> {
    let pi = deformed_map(p, a, params)?;
    let class = a.classify()?;
    let factor = 1.0 - 0.5 * params.eps() * canonical_contraction(class, p);
    let de = pi.energy - p.energy * factor;
    let dp = pi.momentum - p.momentum * factor;
    Ok(de.abs().max(dp.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn params(omega: f64, eps: f64) -> ModelParams {
        ModelParams::dimensionless(omega, eps).unwrap()
    }

    #[test]
    fn map_is_identity_in_undeformed_limit() {
        let p = TwoMomentum::new(1.0, 0.0);
        for a in [Covector::timelike(), Covector::spacelike(), Covector::lightlike()] {
            let pi = deformed_map(p, a, &params(0.1, 0.0)).unwrap();
            assert_eq!(pi, p);
        }
    }

    #[test]
    fn map_matches_direct_arithmetic() {
        // denominator 1 - 0.2*0.5 = 0.9, pi_E = 0.5/sqrt(0.9)
        let pi = deformed_map(
            TwoMomentum::new(0.5, 0.0),
            Covector::timelike(),
            &params(0.1, 0.2),
        )
        .unwrap();
        assert_abs_diff_eq!(pi.energy, 0.5270462766947299, epsilon = 1e-15);
        assert_eq!(pi.momentum, 0.0);
    }

    #[test]
    fn map_rejects_pole() {
        // E = E_p means denominator 1 - eps*E = 0
        let err = deformed_map(
            TwoMomentum::new(5.0, 0.0),
            Covector::timelike(),
            &params(0.1, 0.2),
        )
        .unwrap_err();
        assert!(matches!(err, Error::DomainViolation { .. }));
    }

    #[test]
    fn residual_vanishes_on_sr_shell() {
        let p = 0.3f64;
        let e = (1.0 + p * p).sqrt();
        let r = casimir_residual(TwoMomentum::new(e, p), GeometryKind::Sr, &params(0.1, 0.0))
            .unwrap();
        assert_abs_diff_eq!(r, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn residual_vanishes_on_timelike_shell() {
        // root of e^2 + eps*e - 1 = 0 at p = 0, from the quadratic formula
        let eps = 0.2f64;
        let e = (-eps + (eps * eps + 4.0).sqrt()) / 2.0;
        assert_abs_diff_eq!(e, 0.904987562112089, epsilon = 1e-15);
        let r = casimir_residual(
            TwoMomentum::new(e, 0.0),
            GeometryKind::Timelike,
            &params(0.1, eps),
        )
        .unwrap();
        assert_abs_diff_eq!(r, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn residual_vanishes_on_ms_shell() {
        // root of (1 - eps^2) e^2 + 2 eps e - 1 = 0: e = 1/(1 + eps)
        let r = casimir_residual(
            TwoMomentum::new(1.0 / 1.2, 0.0),
            GeometryKind::MagueijoSmolin,
            &params(0.1, 0.2),
        )
        .unwrap();
        assert_abs_diff_eq!(r, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn ms_pole_is_reported() {
        let err = casimir_residual(
            TwoMomentum::new(5.0, 0.0),
            GeometryKind::MagueijoSmolin,
            &params(0.1, 0.2),
        )
        .unwrap_err();
        assert_eq!(err, Error::MsPole);
    }

    #[test]
    fn residual_denominators_match_covector_class() {
        // the denominator seen by the residual equals 1 - eps*E, 1 - eps*p,
        // 1 - eps*(E+p) for the three canonical covectors
        let pr = params(0.1, 0.2);
        let p = TwoMomentum::new(0.7, 0.4);
        let inv = p.energy * p.energy - p.momentum * p.momentum;
        let cases = [
            (GeometryKind::Timelike, 1.0 - 0.2 * 0.7),
            (GeometryKind::Spacelike, 1.0 - 0.2 * 0.4),
            (GeometryKind::Lightlike, 1.0 - 0.2 * 1.1),
        ];
        for (g, denom) in cases {
            let r = casimir_residual(p, g, &pr).unwrap();
            assert_abs_diff_eq!(r, inv / denom - 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn expansion_defect_is_second_order() {
        let p = TwoMomentum::new(0.5, 0.3);
        let a = Covector::timelike();
        let mut ratios = Vec::new();
        for eps in [1e-2, 1e-3, 1e-4] {
            let d = map_expansion_defect(p, a, &params(0.1, eps)).unwrap();
            ratios.push(d / (eps * eps));
        }
        // defect/eps^2 approaches a finite constant
        assert!(ratios[0] > 0.0);
        assert_abs_diff_eq!(ratios[1] / ratios[0], 1.0, epsilon = 0.05);
        assert_abs_diff_eq!(ratios[2] / ratios[1], 1.0, epsilon = 0.05);
    }

    #[test]
    fn expansion_defect_small_at_small_eps() {
        let d = map_expansion_defect(
            TwoMomentum::new(0.4, 0.1),
            Covector::lightlike(),
            &params(0.1, 1e-3),
        )
        .unwrap();
        assert!(d < 1e-6, "defect {d}");
        assert_eq!(
            map_expansion_defect(TwoMomentum::new(0.4, 0.1), Covector::lightlike(), &params(0.1, 0.0))
                .unwrap(),
            0.0
        );
    }

    #[test]
    fn covector_classification() {
        assert_eq!(Covector::new(-2.0, 1.0).classify().unwrap(), CausalClass::Timelike);
        assert_eq!(Covector::new(0.5, -3.0).classify().unwrap(), CausalClass::Spacelike);
        assert_eq!(Covector::new(2.0, -2.0).classify().unwrap(), CausalClass::Lightlike);
        assert_eq!(Covector::new(0.0, 0.0).classify().unwrap_err(), Error::NullCovector);
        assert_eq!(Covector::new(-2.0, 1.0).canonical().unwrap(), Covector::timelike());
    }

    #[test]
    fn params_validation() {
        assert!(ModelParams::dimensionless(0.0, 0.1).is_err());
        assert!(ModelParams::dimensionless(0.1, -0.1).is_err());
        assert!(ModelParams::dimensionless(f64::NAN, 0.1).is_err());
        let p = ModelParams::from_physical(2.0, 0.2, f64::INFINITY).unwrap();
        assert_eq!(p.omega_ratio(), 0.1);
        assert_eq!(p.eps(), 0.0);
        assert!(p.is_undeformed());
        let q = ModelParams::from_physical(1.0, 0.1, 5.0).unwrap();
        assert_eq!(q.eps(), 0.2);
        assert!(ModelParams::dimensionless(0.1, 1.2).unwrap().require_ms_valid().is_err());
    }

    #[test]
    fn geometry_labels_round_trip() {
        for g in GeometryKind::ALL {
            assert_eq!(GeometryKind::parse(g.label()).unwrap(), g);
        }
        assert!(GeometryKind::parse("bogus").is_err());
    }
}
