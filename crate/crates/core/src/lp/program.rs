use std::collections::HashSet;
use std::fmt;

use num_traits::{Signed, Zero};

use super::LpError;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    NonNegative,
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ge,
    Le,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Le => "<=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    /// Dense, indexed like [`LinearProgram::variables`].
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn lhs(&self, values: &[Rational]) -> Rational {
        self.coefficients
            .iter()
            .zip(values)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, v)| c * v)
            .sum()
    }
}

/// Linear program over exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub sense: Sense,
    pub variables: Vec<Variable>,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(sense: Sense) -> Self {
        LinearProgram {
            sense,
            variables: Vec::new(),
            objective: Vec::new(),
            constraints: Vec::new(),
        }
    }

    /// Adds a variable with zero objective coefficient and returns its index.
    pub fn add_variable(&mut self, name: impl Into<String>, sign: Sign) -> usize {
        self.variables.push(Variable {
            name: name.into(),
            sign,
        });
        self.objective.push(Rational::zero());
        for c in &mut self.constraints {
            c.coefficients.push(Rational::zero());
        }
        self.variables.len() - 1
    }

    pub fn set_objective(&mut self, var: usize, coefficient: Rational) {
        self.objective[var] = coefficient;
    }

    /// Adds `sum terms REL rhs`; repeated indices accumulate.
    pub fn add_constraint(
        &mut self,
        name: impl Into<String>,
        terms: impl IntoIterator<Item = (usize, Rational)>,
        relation: Relation,
        rhs: Rational,
    ) {
        let mut coefficients = vec![Rational::zero(); self.variables.len()];
        for (var, c) in terms {
            coefficients[var] += c;
        }
        self.constraints.push(Constraint {
            name: name.into(),
            coefficients,
            relation,
            rhs,
        });
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn validate(&self) -> Result<(), LpError> {
        let mut seen = HashSet::new();
        for v in &self.variables {
            if !seen.insert(v.name.as_str()) {
                return Err(LpError::InvalidProgram(format!(
                    "duplicate variable `{}`",
                    v.name
                )));
            }
        }
        if self.objective.len() != self.variables.len() {
            return Err(LpError::InvalidProgram("objective length mismatch".into()));
        }
        if let Some(c) = self
            .constraints
            .iter()
            .find(|c| c.coefficients.len() != self.variables.len())
        {
            return Err(LpError::InvalidProgram(format!(
                "constraint `{}` length mismatch",
                c.name
            )));
        }
        Ok(())
    }

    pub fn objective_value(&self, values: &[Rational]) -> Rational {
        self.objective.iter().zip(values).map(|(c, v)| c * v).sum()
    }

    /// Sign conditions and every constraint, checked exactly.
    pub fn is_feasible_point(&self, values: &[Rational]) -> bool {
        values.len() == self.variables.len()
            && self
                .variables
                .iter()
                .zip(values)
                .all(|(var, v)| var.sign == Sign::Free || !v.is_negative())
            && self
                .constraints
                .iter()
                .all(|c| c.relation.holds(&c.lhs(values), &c.rhs))
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, lp: &LinearProgram, coeffs: &[Rational]) -> fmt::Result {
    let mut first = true;
    for (c, var) in coeffs
        .iter()
        .zip(&lp.variables)
        .filter(|(c, _)| !c.is_zero())
    {
        match (first, c.is_negative()) {
            (true, false) => write!(f, "{c} {}", var.name)?,
            (true, true) => write!(f, "-{} {}", c.abs(), var.name)?,
            (false, false) => write!(f, " + {c} {}", var.name)?,
            (false, true) => write!(f, " - {} {}", c.abs(), var.name)?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Plain-text export, one constraint per line with `p/q` coefficients.
impl fmt::Display for LinearProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}",
            if self.sense == Sense::Maximize {
                "maximize"
            } else {
                "minimize"
            }
        )?;
        write!(f, "  obj: ")?;
        write_terms(f, self, &self.objective)?;
        writeln!(f, "\nsubject to")?;
        for c in &self.constraints {
            write!(f, "  {}: ", c.name)?;
            write_terms(f, self, &c.coefficients)?;
            writeln!(f, " {} {}", c.relation, c.rhs)?;
        }
        writeln!(f, "bounds")?;
        for v in &self.variables {
            match v.sign {
                Sign::NonNegative => writeln!(f, "  {} >= 0", v.name)?,
                Sign::Free => writeln!(f, "  {} free", v.name)?,
            }
        }
        writeln!(f, "end")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub status: Status,
    /// Present iff `status == Optimal`.
    pub value: Option<Rational>,
    /// `(name, value)` in variable order; empty unless optimal.
    pub assignment: Vec<(String, Rational)>,
}

impl LpSolution {
    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.assignment
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }

    pub fn values(&self) -> Vec<Rational> {
        self.assignment.iter().map(|(_, v)| v.clone()).collect()
    }
}
