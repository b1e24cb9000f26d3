//! Degree profiles: the counts `n_i` of degree-`i` vertices and `m_{i,j}` of
//! edges whose endpoint degrees are `{i, j}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    delta_cap: usize,
    /// `n_counts[i]` for `i in 0..=delta_cap`.
    n_counts: Vec<u64>,
    /// Nonzero `m_{i,j}` with `1 <= i <= j <= delta_cap`.
    m_counts: BTreeMap<(usize, usize), u64>,
}

impl DegreeProfile {
    pub fn delta_cap(&self) -> usize {
        self.delta_cap
    }

    pub fn n_count(&self, i: usize) -> u64 {
        self.n_counts.get(i).copied().unwrap_or(0)
    }

    /// `m_{i,j}`; argument order does not matter.
    pub fn m_count(&self, i: usize, j: usize) -> u64 {
        self.m_counts
            .get(&(i.min(j), i.max(j)))
            .copied()
            .unwrap_or(0)
    }

    pub fn n_counts(&self) -> &[u64] {
        &self.n_counts
    }

    /// Nonzero edge-class counts, keyed by `(i, j)` with `i <= j`.
    pub fn m_counts(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.m_counts
    }

    pub fn order(&self) -> u64 {
        self.n_counts.iter().sum()
    }

    pub fn size(&self) -> u64 {
        self.m_counts.values().sum()
    }

    /// `sum_{i<j} (j - i) m_{i,j}`, the primal objective at this profile.
    pub fn objective(&self) -> u64 {
        self.m_counts
            .iter()
            .map(|(&(i, j), &c)| (j - i) as u64 * c)
            .sum()
    }

    /// Smallest degree with a nonzero vertex count.
    pub fn min_degree(&self) -> Option<usize> {
        self.n_counts.iter().position(|&c| c > 0)
    }

    /// Handshake identity and the per-degree incidence identity
    /// `2 m_{i,i} + sum_{j != i} m_{i,j} = i n_i`.
    pub fn satisfies_identities(&self) -> bool {
        let handshake: u64 = self
            .n_counts
            .iter()
            .enumerate()
            .map(|(i, &c)| i as u64 * c)
            .sum();
        if handshake != 2 * self.size() {
            return false;
        }
        (1..=self.delta_cap).all(|i| {
            let incident: u64 = (1..=self.delta_cap)
                .map(|j| {
                    if i == j {
                        2 * self.m_count(i, i)
                    } else {
                        self.m_count(i, j)
                    }
                })
                .sum();
            incident == i as u64 * self.n_count(i)
        })
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree  vertices")?;
        for (i, &c) in self.n_counts.iter().enumerate().filter(|(_, &c)| c > 0) {
            writeln!(f, "{i:>6}  {c}")?;
        }
        writeln!(f, "degrees  edges")?;
        for (&(i, j), &c) in &self.m_counts {
            writeln!(f, "{:>7}  {c}", format!("{i},{j}"))?;
        }
        Ok(())
    }
}

/// Profile of `g` over degrees `0..=delta_cap`.
pub fn degree_profile(g: &Graph, delta_cap: usize) -> Result<DegreeProfile, GraphError> {
    if delta_cap == 0 {
        return Err(GraphError::InvalidParameters(
            "degree cap must be at least 1".into(),
        ));
    }
    let deg = g.degrees();
    if let Some((vertex, &degree)) = deg.iter().enumerate().find(|(_, &d)| d > delta_cap) {
        return Err(GraphError::DegreeExceedsCap {
            vertex,
            degree,
            cap: delta_cap,
        });
    }
    let mut n_counts = vec![0; delta_cap + 1];
    for &d in &deg {
        n_counts[d] += 1;
    }
    let mut m_counts = BTreeMap::new();
    for (u, v) in g.edges() {
        let key = (deg[u].min(deg[v]), deg[u].max(deg[v]));
        *m_counts.entry(key).or_insert(0) += 1;
    }
    Ok(DegreeProfile {
        delta_cap,
        n_counts,
        m_counts,
    })
}
