//! Weak-duality bookkeeping and complementary slackness.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::certificate::{dual_residual, DualCertificate, DualConstraint};
use super::model::PrimalVar;
use super::program::{LpSolution, Status};
use super::LpError;
use crate::profile::DegreeProfile;
use crate::rational::{int, Rational};

/// Both sides of the chain
///
/// ```text
/// sum (j−i) m_ij <= sum_{i<j} (z_i+z_j) m_ij + 2 sum z_i m_ii + x n_0
///                   + sum (x + i y − i z_i) n_i  =  n x + 2m y
/// ```
///
/// evaluated term by term at an integral profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakDualityAudit {
    pub objective: Rational,
    /// `sum_{i<j} (z_i + z_j) m_{i,j}`
    pub pair_term: Rational,
    /// `2 sum_i z_i m_{i,i}`
    pub diagonal_term: Rational,
    /// `x n_0` (zero when degree 0 is excluded)
    pub isolated_term: Rational,
    /// `sum_i (x + i y − i z_i) n_i`
    pub vertex_term: Rational,
    pub dual_value: Rational,
}

impl WeakDualityAudit {
    /// The middle expression of the chain.
    pub fn expanded(&self) -> Rational {
        &self.pair_term + &self.diagonal_term + &self.isolated_term + &self.vertex_term
    }

    /// `dual_value − objective`.
    pub fn gap(&self) -> Rational {
        &self.dual_value - &self.objective
    }

    /// Each inequality of the chain holds and the final identity is exact.
    pub fn holds(&self) -> bool {
        self.objective <= self.pair_term
            && !self.diagonal_term.is_negative()
            && !self.isolated_term.is_negative()
            && !self.vertex_term.is_negative()
            && self.expanded() == self.dual_value
    }
}

impl fmt::Display for WeakDualityAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "objective          {}", self.objective)?;
        writeln!(f, "pair term          {}", self.pair_term)?;
        writeln!(f, "diagonal term      {}", self.diagonal_term)?;
        writeln!(f, "isolated term      {}", self.isolated_term)?;
        writeln!(f, "vertex term        {}", self.vertex_term)?;
        writeln!(f, "n x + 2m y         {}", self.dual_value)?;
        write!(f, "gap                {}", self.gap())
    }
}

pub fn weak_duality_audit(
    profile: &DegreeProfile,
    cert: &DualCertificate,
    n: u64,
    m: u64,
) -> Result<WeakDualityAudit, LpError> {
    if profile.delta_cap() != cert.delta_cap {
        return Err(LpError::Mismatch(format!(
            "profile has Δ = {}, certificate Δ = {}",
            profile.delta_cap(),
            cert.delta_cap
        )));
    }
    if profile.order() != n || profile.size() != m {
        return Err(LpError::Mismatch(format!(
            "profile describes n = {}, m = {}; audit asked for n = {n}, m = {m}",
            profile.order(),
            profile.size()
        )));
    }
    let vertex_degrees = cert.variant().vertex_degrees(cert.delta_cap);
    if let Some(i) =
        (0..=cert.delta_cap).find(|&i| profile.n_count(i) > 0 && !vertex_degrees.contains(&i))
    {
        return Err(LpError::Mismatch(format!(
            "profile has vertices of degree {i} outside the certificate's range {vertex_degrees:?}"
        )));
    }

    let count = |c: u64| Rational::from_integer(BigInt::from(c));
    let mut audit = WeakDualityAudit {
        objective: Rational::zero(),
        pair_term: Rational::zero(),
        diagonal_term: Rational::zero(),
        isolated_term: Rational::zero(),
        vertex_term: Rational::zero(),
        dual_value: cert.value(n, m),
    };
    for (&(i, j), &c) in profile.m_counts() {
        if i == j {
            audit.diagonal_term += int(2) * cert.z(i) * count(c);
        } else {
            audit.objective += int((j - i) as i64) * count(c);
            audit.pair_term += (cert.z(i) + cert.z(j)) * count(c);
        }
    }
    if vertex_degrees.contains(&0) {
        audit.isolated_term = &cert.x * count(profile.n_count(0));
    }
    for i in cert.index_set() {
        audit.vertex_term +=
            dual_residual(cert, DualConstraint::Vertex(i)) * count(profile.n_count(i));
    }
    Ok(audit)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlacknessEntry {
    pub variable: PrimalVar,
    pub value: Rational,
    /// The dual constraint paired with this primal column.
    pub dual: DualConstraint,
    pub dual_residual: Rational,
}

impl SlacknessEntry {
    /// A positive primal value needs a tight partner; a negative residual
    /// means the certificate itself is infeasible.
    pub fn is_violation(&self) -> bool {
        self.dual_residual.is_negative()
            || (self.value.is_positive() && !self.dual_residual.is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlacknessReport {
    pub entries: Vec<SlacknessEntry>,
}

impl SlacknessReport {
    pub fn violations(&self) -> impl Iterator<Item = &SlacknessEntry> {
        self.entries.iter().filter(|e| e.is_violation())
    }

    pub fn is_consistent(&self) -> bool {
        self.violations().next().is_none()
    }
}

impl fmt::Display for SlacknessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let note = match (
                e.value.is_positive(),
                e.dual_residual.is_zero(),
                e.is_violation(),
            ) {
                (_, _, true) => "VIOLATION",
                (true, true, _) => "positive, dual tight",
                (false, true, _) => "zero, dual tight",
                (false, false, _) => "zero, dual slack",
                (true, false, _) => unreachable!("positive value with slack dual is a violation"),
            };
            writeln!(
                f,
                "  {:<8} = {:>8}   {:<22} residual {:>8}   {note}",
                e.variable.to_string(),
                e.value.to_string(),
                e.dual.to_string(),
                e.dual_residual.to_string()
            )?;
        }
        write!(
            f,
            "{}",
            if self.is_consistent() {
                "consistent"
            } else {
                "VIOLATED"
            }
        )
    }
}

/// Pairs every primal column of an optimal solution with its dual
/// constraint at `cert`: `n_0 ↔ x >= 0`, `n_i ↔ x + iy >= iz_i`,
/// `m_{i,j} ↔ z_i + z_j >= j − i` and `m_{i,i} ↔ z_i >= 0`.
pub fn complementary_slackness(
    sol: &LpSolution,
    cert: &DualCertificate,
) -> Result<SlacknessReport, LpError> {
    if sol.status != Status::Optimal {
        return Err(LpError::Mismatch(format!(
            "solution status is {:?}, not optimal",
            sol.status
        )));
    }
    let edge_degrees = cert.index_set();
    let vertex_degrees = cert.variant().vertex_degrees(cert.delta_cap);
    let mut entries = Vec::with_capacity(sol.assignment.len());
    for (name, value) in &sol.assignment {
        let variable: PrimalVar = name.parse()?;
        let dual = match variable {
            PrimalVar::Vertices(0) if vertex_degrees.contains(&0) => DualConstraint::XSign,
            PrimalVar::Vertices(i) if edge_degrees.contains(&i) => DualConstraint::Vertex(i),
            PrimalVar::Edges(i, j) if edge_degrees.contains(&i) && edge_degrees.contains(&j) => {
                if i == j {
                    DualConstraint::ZSign(i)
                } else {
                    DualConstraint::Pair(i, j)
                }
            }
            _ => {
                return Err(LpError::Mismatch(format!(
                    "primal column {name} has no partner for a {} certificate with Δ = {}",
                    cert.kind, cert.delta_cap
                )))
            }
        };
        entries.push(SlacknessEntry {
            variable,
            value: value.clone(),
            dual,
            dual_residual: dual_residual(cert, dual),
        });
    }
    Ok(SlacknessReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, regular_graph};
    use crate::lp::{build_primal, certificate_prop1, certificate_thm1, solve, Variant};
    use crate::profile::degree_profile;

    #[test]
    fn bipartite_is_tight() {
        let p = degree_profile(&complete_bipartite(3, 2), 3).unwrap();
        let audit = weak_duality_audit(&p, &certificate_thm1(3, 2).unwrap(), 5, 6).unwrap();
        assert!(audit.holds());
        assert_eq!(audit.objective, int(6));
        assert!(audit.gap().is_zero());
    }

    #[test]
    fn cycle_against_thm1() {
        let p = degree_profile(&regular_graph(2, 5).unwrap(), 2).unwrap();
        let audit = weak_duality_audit(&p, &certificate_thm1(2, 1).unwrap(), 5, 5).unwrap();
        assert!(audit.holds());
        assert!(audit.objective.is_zero());
        assert!(!audit.gap().is_negative());
    }

    #[test]
    fn path_against_prop1() {
        let p = degree_profile(&complete_bipartite(2, 1), 2).unwrap();
        let audit = weak_duality_audit(&p, &certificate_prop1(2, 1).unwrap(), 3, 2).unwrap();
        assert!(audit.holds());
        assert!(audit.gap().is_zero());
    }

    #[test]
    fn audit_mismatches() {
        let p = degree_profile(&complete_bipartite(3, 2), 3).unwrap();
        assert!(weak_duality_audit(&p, &certificate_thm1(4, 2).unwrap(), 5, 6).is_err());
        assert!(weak_duality_audit(&p, &certificate_thm1(3, 2).unwrap(), 5, 7).is_err());
        let star = degree_profile(&complete_bipartite(3, 1), 3).unwrap();
        assert!(weak_duality_audit(&star, &certificate_prop1(3, 2).unwrap(), 4, 3).is_err());
    }

    #[test]
    fn slackness_on_tight_instances() {
        let sol = solve(&build_primal(5, 6, 3, Variant::Thm1).unwrap()).unwrap();
        let report = complementary_slackness(&sol, &certificate_thm1(3, 2).unwrap()).unwrap();
        assert!(report.is_consistent(), "{report}");
        let sol = solve(&build_primal(14, 40, 10, Variant::Thm1).unwrap()).unwrap();
        let report = complementary_slackness(&sol, &certificate_thm1(10, 4).unwrap()).unwrap();
        assert!(report.is_consistent(), "{report}");
        let pair = report
            .entries
            .iter()
            .find(|e| e.dual == DualConstraint::Pair(4, 10))
            .unwrap();
        assert!(pair.dual_residual.is_zero());
    }

    #[test]
    fn slackness_with_zero_solution() {
        let sol = solve(&build_primal(6, 0, 3, Variant::Thm1).unwrap()).unwrap();
        for d in 0..3 {
            let report = complementary_slackness(&sol, &certificate_thm1(3, d).unwrap()).unwrap();
            assert!(report
                .entries
                .iter()
                .filter(|e| matches!(e.dual, DualConstraint::Pair(..)))
                .all(|e| !e.is_violation()));
        }
    }

    #[test]
    fn slackness_flags_suboptimal_certificate() {
        // d = 0 is feasible but not optimal at (5, 6, 3): m_{2,3} > 0 meets a slack pair.
        let sol = solve(&build_primal(5, 6, 3, Variant::Thm1).unwrap()).unwrap();
        let report = complementary_slackness(&sol, &certificate_thm1(3, 0).unwrap()).unwrap();
        assert!(!report.is_consistent());
    }
}
