//! The degree-profile program and its dual.
//!
//! Primal, over vertex degrees `I_0` and edge-endpoint degrees `I`:
//!
//! ```text
//! max  sum_{i<j in I} (j - i) m_{i,j}
//! s.t. sum_{i in I_0} n_i = n
//!      sum_{i in I} i n_i = 2m
//!      2 m_{i,i} + sum_{j<i} m_{j,i} + sum_{j>i} m_{i,j} - i n_i = 0   (i in I)
//!      n, m >= 0
//! ```
//!
//! Dual: `min n x + 2m y` subject to `z_i + z_j >= j - i` (`i < j`) and
//! `x + i y >= i z_i`, with `y` free and `z >= 0`.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_traits::Zero;

use super::program::{LinearProgram, Relation, Sense, Sign};
use super::LpError;
use crate::bounds::{self, BoundsError};
use crate::rational::{int, Rational};

/// Which degree restrictions the program encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Maximum degree only: `I_0 = {0..Δ}`, `I = {1..Δ}`.
    Thm1,
    /// Minimum degree `δ >= 0`: `I_0 = {δ..Δ}`, `I = I_0 \ {0}`.
    Prop1 { delta_min: usize },
    /// Minimum degree `δ >= 1`: `I_0 = I = {δ..Δ}`.
    Prop2 { delta_min: usize },
}

impl Variant {
    pub fn delta_min(self) -> usize {
        match self {
            Variant::Thm1 => 0,
            Variant::Prop1 { delta_min } | Variant::Prop2 { delta_min } => delta_min,
        }
    }

    /// `I_0`, the admissible vertex degrees.
    pub fn vertex_degrees(self, delta_cap: usize) -> RangeInclusive<usize> {
        self.delta_min()..=delta_cap
    }

    /// `I`, the admissible endpoint degrees of edges.
    pub fn edge_degrees(self, delta_cap: usize) -> RangeInclusive<usize> {
        self.delta_min().max(1)..=delta_cap
    }

    /// Sign of the dual variable `x`; only the last variant frees it.
    pub fn x_sign(self) -> Sign {
        match self {
            Variant::Prop2 { .. } => Sign::Free,
            _ => Sign::NonNegative,
        }
    }

    pub fn validate(self, delta_cap: usize) -> Result<(), LpError> {
        let dm = self.delta_min();
        if delta_cap == 0 {
            return Err(BoundsError::Infeasible("maximum degree must be at least 1".into()).into());
        }
        if dm >= delta_cap {
            return Err(BoundsError::DeltaMin {
                delta_min: dm,
                delta_cap,
            }
            .into());
        }
        if matches!(self, Variant::Prop2 { .. }) && dm == 0 {
            return Err(BoundsError::Infeasible("minimum degree must be at least 1".into()).into());
        }
        Ok(())
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Thm1 => write!(f, "thm1"),
            Variant::Prop1 { delta_min } => write!(f, "prop1(δ={delta_min})"),
            Variant::Prop2 { delta_min } => write!(f, "prop2(δ={delta_min})"),
        }
    }
}

/// A primal column: `n_i` or `m_{i,j}` with `i <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimalVar {
    Vertices(usize),
    Edges(usize, usize),
}

impl fmt::Display for PrimalVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimalVar::Vertices(i) => write!(f, "n_{i}"),
            PrimalVar::Edges(i, j) => write!(f, "m_{i}_{j}"),
        }
    }
}

impl FromStr for PrimalVar {
    type Err = LpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LpError::Mismatch(format!("`{s}` is not a degree-profile variable"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if let Some(rest) = s.strip_prefix("n_") {
            return Ok(PrimalVar::Vertices(num(rest)?));
        }
        let rest = s.strip_prefix("m_").ok_or_else(bad)?;
        let (i, j) = rest.split_once('_').ok_or_else(bad)?;
        let (i, j) = (num(i)?, num(j)?);
        if i > j {
            return Err(bad());
        }
        Ok(PrimalVar::Edges(i, j))
    }
}

fn check_params(n: u64, m: u64, delta_cap: usize, variant: Variant) -> Result<(), LpError> {
    variant.validate(delta_cap)?;
    bounds::check_feasible(n, m, delta_cap)?;
    let dm = variant.delta_min() as u128;
    if dm * n as u128 > 2 * m as u128 {
        return Err(BoundsError::Infeasible(format!(
            "minimum degree {dm} forces 2m >= {}, got {}",
            dm * n as u128,
            2 * m
        ))
        .into());
    }
    Ok(())
}

/// Variables `n_i` (`i in I_0`) then `m_{i,j}` (`i <= j in I`, lexicographic);
/// constraints `vertices`, `handshake`, then `incidence_i` for `i in I`.
pub fn build_primal(
    n: u64,
    m: u64,
    delta_cap: usize,
    variant: Variant,
) -> Result<LinearProgram, LpError> {
    check_params(n, m, delta_cap, variant)?;
    let vertex_degrees = variant.vertex_degrees(delta_cap);
    let edge_degrees = variant.edge_degrees(delta_cap);

    let mut lp = LinearProgram::new(Sense::Maximize);
    let n_var: Vec<(usize, usize)> = vertex_degrees
        .clone()
        .map(|i| {
            (
                i,
                lp.add_variable(PrimalVar::Vertices(i).to_string(), Sign::NonNegative),
            )
        })
        .collect();
    let mut m_var = Vec::new();
    for i in edge_degrees.clone() {
        for j in i..=delta_cap {
            let k = lp.add_variable(PrimalVar::Edges(i, j).to_string(), Sign::NonNegative);
            lp.set_objective(k, int((j - i) as i64));
            m_var.push(((i, j), k));
        }
    }

    lp.add_constraint(
        "vertices",
        n_var.iter().map(|&(_, k)| (k, int(1))),
        Relation::Eq,
        Rational::from_integer(n.into()),
    );
    lp.add_constraint(
        "handshake",
        n_var.iter().map(|&(i, k)| (k, int(i as i64))),
        Relation::Eq,
        Rational::from_integer((2 * m as u128).into()),
    );
    for i in edge_degrees {
        let mut terms: Vec<(usize, Rational)> = m_var
            .iter()
            .filter(|((a, b), _)| *a == i || *b == i)
            .map(|&((a, b), k)| (k, int(if a == b { 2 } else { 1 })))
            .collect();
        let (_, ni) = n_var
            .iter()
            .find(|(d, _)| *d == i)
            .expect("I is a subset of I_0");
        terms.push((*ni, int(-(i as i64))));
        lp.add_constraint(
            format!("incidence_{i}"),
            terms,
            Relation::Eq,
            Rational::zero(),
        );
    }
    Ok(lp)
}

/// Variables `x`, `y`, `z_i` (`i in I`); constraints `pair_i_j` for `i < j`
/// then `vertex_i`.
pub fn build_dual(
    n: u64,
    m: u64,
    delta_cap: usize,
    variant: Variant,
) -> Result<LinearProgram, LpError> {
    check_params(n, m, delta_cap, variant)?;
    let edge_degrees = variant.edge_degrees(delta_cap);

    let mut lp = LinearProgram::new(Sense::Minimize);
    let x = lp.add_variable("x", variant.x_sign());
    let y = lp.add_variable("y", Sign::Free);
    lp.set_objective(x, Rational::from_integer(n.into()));
    lp.set_objective(y, Rational::from_integer((2 * m as u128).into()));
    let z: Vec<(usize, usize)> = edge_degrees
        .clone()
        .map(|i| (i, lp.add_variable(format!("z_{i}"), Sign::NonNegative)))
        .collect();

    for (a, &(i, zi)) in z.iter().enumerate() {
        for &(j, zj) in &z[a + 1..] {
            lp.add_constraint(
                format!("pair_{i}_{j}"),
                [(zi, int(1)), (zj, int(1))],
                Relation::Ge,
                int((j - i) as i64),
            );
        }
    }
    for &(i, zi) in &z {
        lp.add_constraint(
            format!("vertex_{i}"),
            [(x, int(1)), (y, int(i as i64)), (zi, int(-(i as i64)))],
            Relation::Ge,
            Rational::zero(),
        );
    }
    Ok(lp)
}
