//! Explicit dual points `(x, y, z)` and their exact feasibility check.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::model::Variant;
use super::LpError;
use crate::bounds::{self, BoundsError};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    Thm1 { d: usize },
    Prop1 { delta_min: usize, delta_star: usize },
    Prop2 { delta_min: usize },
}

impl CertificateKind {
    pub fn variant(self) -> Variant {
        match self {
            CertificateKind::Thm1 { .. } => Variant::Thm1,
            CertificateKind::Prop1 { delta_min, .. } => Variant::Prop1 { delta_min },
            CertificateKind::Prop2 { delta_min } => Variant::Prop2 { delta_min },
        }
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateKind::Thm1 { d } => write!(f, "thm1(d={d})"),
            CertificateKind::Prop1 {
                delta_min,
                delta_star,
            } => {
                write!(f, "prop1(δ={delta_min}, δ*={delta_star})")
            }
            CertificateKind::Prop2 { delta_min } => write!(f, "prop2(δ={delta_min})"),
        }
    }
}

/// A point of the dual program claimed to be feasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCertificate {
    pub delta_cap: usize,
    pub kind: CertificateKind,
    pub x: Rational,
    pub y: Rational,
    /// `z_i` for every `i` in [`Self::index_set`].
    pub z: BTreeMap<usize, Rational>,
}

impl DualCertificate {
    pub fn variant(&self) -> Variant {
        self.kind.variant()
    }

    /// The endpoint degrees `I` the certificate ranges over.
    pub fn index_set(&self) -> RangeInclusive<usize> {
        self.variant().edge_degrees(self.delta_cap)
    }

    pub fn z(&self, i: usize) -> &Rational {
        &self.z[&i]
    }

    /// Dual objective `n x + 2m y`.
    pub fn value(&self, n: u64, m: u64) -> Rational {
        Rational::from_integer(BigInt::from(n)) * &self.x
            + Rational::from_integer(BigInt::from(2 * m as u128)) * &self.y
    }

    /// The implied bound as `a·n + b·m`: returns `(x, 2y)`.
    pub fn bound_coefficients(&self) -> (Rational, Rational) {
        (self.x.clone(), &self.y * int(2))
    }

    /// Renders the implied bound, e.g. `2n - (2/3)m`.
    pub fn bound_expression(&self) -> String {
        let (a, b) = self.bound_coefficients();
        affine_expression(&[(a, "n"), (b, "m")])
    }
}

fn affine_expression(terms: &[(Rational, &str)]) -> String {
    let mut out = String::new();
    for (c, var) in terms.iter().filter(|(c, _)| !c.is_zero()) {
        let sep = match (out.is_empty(), c.is_negative()) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        let mag = c.abs();
        let coef = if mag.is_one() {
            String::new()
        } else if mag.is_integer() {
            mag.to_string()
        } else {
            format!("({mag})")
        };
        out.push_str(&format!("{sep}{coef}{var}"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn z_from(x: &Rational, y: &Rational, indices: RangeInclusive<usize>) -> BTreeMap<usize, Rational> {
    indices.map(|i| (i, x / int(i as i64) + y)).collect()
}

/// `x = d(d+1)`, `y = (Δ² − (2d+1)Δ − d² − d) / (2Δ)`, `z_i = x/i + y`.
pub fn certificate_thm1(delta_cap: usize, d: usize) -> Result<DualCertificate, LpError> {
    if delta_cap == 0 || d >= delta_cap {
        return Err(BoundsError::DIndex {
            d,
            delta_cap: delta_cap.max(1),
        }
        .into());
    }
    let (dc, d_) = (delta_cap as i64, d as i64);
    let x = int(d_ * (d_ + 1));
    let y = Rational::new(
        BigInt::from(dc * dc - (2 * d_ + 1) * dc - d_ * d_ - d_),
        BigInt::from(2 * dc),
    );
    let z = z_from(&x, &y, 1..=delta_cap);
    Ok(DualCertificate {
        delta_cap,
        kind: CertificateKind::Thm1 { d },
        x,
        y,
        z,
    })
}

/// `x = Δ(Δ − δ*)δ* / (Δ + δ*)`, `y = 0`, `z_i = x/i`.
pub fn certificate_prop1(delta_cap: usize, delta_min: usize) -> Result<DualCertificate, LpError> {
    let delta_star = bounds::delta_star(delta_cap, delta_min)?;
    let x = bounds::prop1_profile_value(delta_cap, delta_star);
    let y = Rational::zero();
    let z = z_from(&x, &y, delta_min.max(1)..=delta_cap);
    Ok(DualCertificate {
        delta_cap,
        kind: CertificateKind::Prop1 {
            delta_min,
            delta_star,
        },
        x,
        y,
        z,
    })
}

/// `x = −δΔ`, `y = Δ`, `z_i = x/i + y = (1 − δ/i)Δ`.
pub fn certificate_prop2(delta_cap: usize, delta_min: usize) -> Result<DualCertificate, LpError> {
    Variant::Prop2 { delta_min }.validate(delta_cap)?;
    let x = int(-((delta_min * delta_cap) as i64));
    let y = int(delta_cap as i64);
    let z = z_from(&x, &y, delta_min..=delta_cap);
    Ok(DualCertificate {
        delta_cap,
        kind: CertificateKind::Prop2 { delta_min },
        x,
        y,
        z,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DualConstraint {
    XSign,
    ZSign(usize),
    /// `z_i + z_j >= j − i`
    Pair(usize, usize),
    /// `x + i y >= i z_i`
    Vertex(usize),
}

impl fmt::Display for DualConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualConstraint::XSign => write!(f, "x >= 0"),
            DualConstraint::ZSign(i) => write!(f, "z_{i} >= 0"),
            DualConstraint::Pair(i, j) => write!(f, "z_{i} + z_{j} >= {}", j - i),
            DualConstraint::Vertex(i) => write!(f, "x + {i}y >= {i}z_{i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tightness {
    Tight,
    Slack,
    Violated,
}

impl Tightness {
    fn of(residual: &Rational) -> Self {
        if residual.is_zero() {
            Tightness::Tight
        } else if residual.is_positive() {
            Tightness::Slack
        } else {
            Tightness::Violated
        }
    }
}

impl fmt::Display for Tightness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tightness::Tight => "tight",
            Tightness::Slack => "slack",
            Tightness::Violated => "VIOLATED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintCheck {
    pub constraint: DualConstraint,
    /// `lhs − rhs`; negative means violated.
    pub residual: Rational,
    pub status: Tightness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub delta_cap: usize,
    pub kind: CertificateKind,
    pub checks: Vec<ConstraintCheck>,
}

impl FeasibilityReport {
    pub fn is_feasible(&self) -> bool {
        self.checks.iter().all(|c| c.status != Tightness::Violated)
    }

    pub fn violations(&self) -> impl Iterator<Item = &ConstraintCheck> {
        self.checks
            .iter()
            .filter(|c| c.status == Tightness::Violated)
    }

    pub fn residual(&self, constraint: DualConstraint) -> Option<&Rational> {
        self.checks
            .iter()
            .find(|c| c.constraint == constraint)
            .map(|c| &c.residual)
    }
}

impl fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "  {:<24} residual {:>10}  {}",
                c.constraint.to_string(),
                c.residual.to_string(),
                c.status
            )?;
        }
        write!(
            f,
            "{}",
            if self.is_feasible() {
                "feasible"
            } else {
                "INFEASIBLE"
            }
        )
    }
}

/// Residual of a single dual constraint at `cert`.
pub fn dual_residual(cert: &DualCertificate, constraint: DualConstraint) -> Rational {
    match constraint {
        DualConstraint::XSign => cert.x.clone(),
        DualConstraint::ZSign(i) => cert.z(i).clone(),
        DualConstraint::Pair(i, j) => cert.z(i) + cert.z(j) - int((j - i) as i64),
        DualConstraint::Vertex(i) => {
            let i_ = int(i as i64);
            &cert.x + &i_ * &cert.y - &i_ * cert.z(i)
        }
    }
}

/// Every constraint of the dual, checked pairwise and exactly.
pub fn check_feasible(cert: &DualCertificate) -> FeasibilityReport {
    let indices: Vec<usize> = cert.index_set().collect();
    let mut constraints = Vec::new();
    if cert.variant().x_sign() == super::Sign::NonNegative {
        constraints.push(DualConstraint::XSign);
    }
    constraints.extend(indices.iter().map(|&i| DualConstraint::ZSign(i)));
    for (a, &i) in indices.iter().enumerate() {
        constraints.extend(indices[a + 1..].iter().map(|&j| DualConstraint::Pair(i, j)));
    }
    constraints.extend(indices.iter().map(|&i| DualConstraint::Vertex(i)));

    let checks = constraints
        .into_iter()
        .map(|constraint| {
            let residual = if indices.iter().all(|i| cert.z.contains_key(i)) {
                dual_residual(cert, constraint)
            } else {
                // Missing coordinates can never certify anything.
                int(-1)
            };
            let status = Tightness::of(&residual);
            ConstraintCheck {
                constraint,
                residual,
                status,
            }
        })
        .collect();
    FeasibilityReport {
        delta_cap: cert.delta_cap,
        kind: cert.kind,
        checks,
    }
}

/// Feasibility through the monotonicity shortcut: for non-increasing `z`
/// only `z_i + z_Δ >= Δ − i` is checked, for non-decreasing `z` only
/// `z_δ + z_j >= j − δ`. Falls back to the full check otherwise.
pub fn check_feasible_fast(cert: &DualCertificate) -> bool {
    let indices: Vec<usize> = cert.index_set().collect();
    if indices.iter().any(|i| !cert.z.contains_key(i)) {
        return false;
    }
    let signs = (cert.variant().x_sign() == super::Sign::Free || !cert.x.is_negative())
        && indices.iter().all(|&i| !cert.z(i).is_negative())
        && indices
            .iter()
            .all(|&i| !dual_residual(cert, DualConstraint::Vertex(i)).is_negative());
    if !signs {
        return false;
    }
    let (Some(&lo), Some(&hi)) = (indices.first(), indices.last()) else {
        return true;
    };
    let z: Vec<&Rational> = indices.iter().map(|&i| cert.z(i)).collect();
    let ok = |i: usize, j: usize| !dual_residual(cert, DualConstraint::Pair(i, j)).is_negative();
    if z.windows(2).all(|w| w[0] >= w[1]) {
        indices[..indices.len() - 1].iter().all(|&i| ok(i, hi))
    } else if z.windows(2).all(|w| w[0] <= w[1]) {
        indices[1..].iter().all(|&j| ok(lo, j))
    } else {
        check_feasible(cert).is_feasible()
    }
}
