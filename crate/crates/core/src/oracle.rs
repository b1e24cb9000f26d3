//! Brute-force ground truth on small graphs.
//!
//! Labeled graphs on `n` vertices are generated by deciding the `n(n-1)/2`
//! vertex pairs in lexicographic order (exclude before include), pruning as
//! soon as a degree exceeds `Δ`, a vertex can no longer reach `δ`, or the
//! edge count can no longer hit its target. With `dedup`, a graph is emitted
//! only the first time its canonical code is seen.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::bounds::{self, BoundsError};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::rational::Rational;

/// Largest order accepted for labeled enumeration.
pub const MAX_ORDER: usize = 10;
/// Largest order accepted with canonical deduplication.
pub const MAX_ORDER_DEDUP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("inconsistent constraints: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchConstraints {
    pub n: usize,
    pub m: Option<usize>,
    pub delta_cap: Option<usize>,
    pub delta_min: Option<usize>,
    pub dedup: bool,
}

impl SearchConstraints {
    pub fn new(n: usize) -> Self {
        SearchConstraints {
            n,
            ..Default::default()
        }
    }

    pub fn edges(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn max_degree(mut self, delta_cap: usize) -> Self {
        self.delta_cap = Some(delta_cap);
        self
    }

    pub fn min_degree(mut self, delta_min: usize) -> Self {
        self.delta_min = Some(delta_min);
        self
    }

    pub fn dedup(mut self, on: bool) -> Self {
        self.dedup = on;
        self
    }

    pub fn validate(&self) -> Result<(), OracleError> {
        let limit = if self.dedup {
            MAX_ORDER_DEDUP
        } else {
            MAX_ORDER
        };
        if self.n > limit {
            return Err(OracleError::TooLarge { n: self.n, limit });
        }
        if let (Some(lo), Some(hi)) = (self.delta_min, self.delta_cap) {
            if lo > hi {
                return Err(OracleError::Inconsistent(format!(
                    "δ = {lo} exceeds Δ = {hi}"
                )));
            }
        }
        if let Some(m) = self.m {
            if let Some(hi) = self.delta_cap {
                if 2 * m > hi * self.n {
                    return Err(OracleError::Inconsistent(format!(
                        "2m = {} > Δn = {}",
                        2 * m,
                        hi * self.n
                    )));
                }
            }
            if let Some(lo) = self.delta_min {
                if lo * self.n > 2 * m {
                    return Err(OracleError::Inconsistent(format!(
                        "δn = {} > 2m = {}",
                        lo * self.n,
                        2 * m
                    )));
                }
            }
        }
        Ok(())
    }
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Depth-first walk over edge subsets with explicit backtracking state.
struct Walk {
    pairs: Vec<(usize, usize)>,
    m: Option<usize>,
    cap: usize,
    floor: usize,
    deg: Vec<usize>,
    /// Undecided pairs incident to each vertex.
    open: Vec<usize>,
    taken: usize,
    mask: u64,
    choices: Vec<bool>,
    started: bool,
    done: bool,
}

impl Walk {
    fn new(c: &SearchConstraints) -> Self {
        let pairs = vertex_pairs(c.n);
        Walk {
            m: c.m,
            cap: c.delta_cap.unwrap_or(usize::MAX),
            floor: c.delta_min.unwrap_or(0),
            deg: vec![0; c.n],
            open: vec![c.n.saturating_sub(1); c.n],
            taken: 0,
            mask: 0,
            choices: Vec::with_capacity(pairs.len()),
            started: false,
            done: false,
            pairs,
        }
    }

    fn root_feasible(&self) -> bool {
        self.m.is_none_or(|m| m <= self.pairs.len())
            && self.open.iter().all(|&r| r >= self.floor)
            && (self.m != Some(0) || self.floor == 0)
    }

    fn push(&mut self, include: bool) -> bool {
        let k = self.choices.len();
        let (u, v) = self.pairs[k];
        self.open[u] -= 1;
        self.open[v] -= 1;
        if include {
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.taken += 1;
            self.mask |= 1 << k;
        }
        self.choices.push(include);
        let left = self.pairs.len() - k - 1;
        self.m
            .is_none_or(|m| self.taken <= m && self.taken + left >= m)
            && self.deg[u] <= self.cap
            && self.deg[v] <= self.cap
            && self.deg[u] + self.open[u] >= self.floor
            && self.deg[v] + self.open[v] >= self.floor
    }

    fn pop(&mut self) -> Option<bool> {
        let include = self.choices.pop()?;
        let k = self.choices.len();
        let (u, v) = self.pairs[k];
        self.open[u] += 1;
        self.open[v] += 1;
        if include {
            self.deg[u] -= 1;
            self.deg[v] -= 1;
            self.taken -= 1;
            self.mask &= !(1 << k);
        }
        Some(include)
    }
}

impl Iterator for Walk {
    /// Bit `k` set iff the `k`-th lexicographic pair is an edge.
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mut descending = if self.started {
            false
        } else {
            self.started = true;
            if !self.root_feasible() {
                self.done = true;
                return None;
            }
            true
        };
        loop {
            if descending {
                if self.choices.len() == self.pairs.len() {
                    return Some(self.mask);
                }
                if self.push(false) {
                    continue;
                }
                self.pop();
                if self.push(true) {
                    continue;
                }
                self.pop();
                descending = false;
            } else {
                match self.pop() {
                    None => {
                        self.done = true;
                        return None;
                    }
                    Some(false) => {
                        if self.push(true) {
                            descending = true;
                        } else {
                            self.pop();
                        }
                    }
                    Some(true) => {}
                }
            }
        }
    }
}

fn mask_to_graph(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &e)| e);
    Graph::from_edges(n, edges).expect("pairs are distinct and in range")
}

fn neighbour_masks(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.order()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Isomorphism-invariant ordered partition by colour refinement, starting
/// from degrees.
fn refined_colours(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let mut colour: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let mut classes = {
        let mut c = colour.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colour[w])
                    .collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colour = signatures
            .iter()
            .map(|s| distinct.binary_search(s).unwrap() as u32)
            .collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

/// Canonical code: the minimum, over vertex orders that respect the refined
/// colour classes, of the upper-triangle adjacency bits read column by
/// column (graph6 order), first bit most significant.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(
        n <= MAX_ORDER,
        "canonical codes are limited to {MAX_ORDER} vertices"
    );
    let adj = neighbour_masks(g);
    let colour = refined_colours(&adj);
    let mut slots: Vec<u32> = colour.clone();
    slots.sort_unstable();

    struct Search<'a> {
        adj: &'a [u32],
        colour: &'a [u32],
        slots: &'a [u32],
        total_bits: u32,
        best: Option<u64>,
        order: Vec<usize>,
        used: u32,
    }

    impl Search<'_> {
        fn go(&mut self, prefix: u64, bits: u32) {
            let p = self.order.len();
            if p == self.slots.len() {
                if self.best.is_none_or(|b| prefix < b) {
                    self.best = Some(prefix);
                }
                return;
            }
            for v in 0..self.slots.len() {
                if self.used >> v & 1 == 1 || self.colour[v] != self.slots[p] {
                    continue;
                }
                let mut code = prefix;
                for &a in &self.order {
                    code = code << 1 | (self.adj[a] >> v & 1) as u64;
                }
                let len = bits + p as u32;
                if let Some(best) = self.best {
                    if code > best >> (self.total_bits - len) {
                        continue;
                    }
                }
                self.order.push(v);
                self.used |= 1 << v;
                self.go(code, len);
                self.used &= !(1 << v);
                self.order.pop();
            }
        }
    }

    let mut search = Search {
        adj: &adj,
        colour: &colour,
        slots: &slots,
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
        best: None,
        order: Vec::with_capacity(n),
        used: 0,
    };
    search.go(0, 0);
    search.best.unwrap_or(0)
}

/// Lazily generated graphs meeting a [`SearchConstraints`].
pub struct Enumeration {
    n: usize,
    walk: Walk,
    seen: Option<HashSet<u64>>,
}

impl Iterator for Enumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let mask = self.walk.next()?;
            let g = mask_to_graph(self.n, &self.walk.pairs, mask);
            match &mut self.seen {
                None => return Some(g),
                Some(seen) => {
                    if seen.insert(canonical_code(&g)) {
                        return Some(g);
                    }
                }
            }
        }
    }
}

pub fn enumerate(c: &SearchConstraints) -> Result<Enumeration, OracleError> {
    c.validate()?;
    Ok(Enumeration {
        n: c.n,
        walk: Walk::new(c),
        seen: c.dedup.then(HashSet::new),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxIrr {
    pub value: u64,
    /// First maximiser in enumeration order.
    pub witness: Graph,
    pub examined: usize,
}

/// Maximum irregularity over the family; `None` when the family is empty.
pub fn max_irr(c: &SearchConstraints) -> Result<Option<MaxIrr>, OracleError> {
    let mut best: Option<MaxIrr> = None;
    let mut examined = 0;
    for g in enumerate(c)? {
        examined += 1;
        let irr = g.irregularity();
        if best.as_ref().is_none_or(|b| irr > b.value) {
            best = Some(MaxIrr {
                value: irr,
                witness: g,
                examined: 0,
            });
        }
    }
    Ok(best.map(|b| MaxIrr { examined, ..b }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    Thm1,
    Cor1,
    Prop1 { delta_min: usize },
    Prop2 { delta_min: usize },
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundId::Thm1 => write!(f, "thm1"),
            BoundId::Cor1 => write!(f, "cor1"),
            BoundId::Prop1 { delta_min } => write!(f, "prop1[δ={delta_min}]"),
            BoundId::Prop2 { delta_min } => write!(f, "prop2[δ={delta_min}]"),
        }
    }
}

/// Maximum irregularity over the graphs a bound applies to, for one `(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub n: usize,
    pub m: usize,
    pub bound: BoundId,
    pub value: Rational,
    pub max_irr: u64,
    pub witness: Graph,
    pub graphs: usize,
}

impl BoundRow {
    pub fn gap(&self) -> Rational {
        &self.value - Rational::from_integer(self.max_irr.into())
    }

    pub fn is_tight(&self) -> bool {
        self.max_irr > 0 && self.gap().is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub bound: BoundId,
    pub graph: Graph,
    pub irr: u64,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustiveReport {
    pub n_max: usize,
    pub delta_cap: usize,
    /// Isomorphism classes with maximum degree at most `Δ`, per order.
    pub classes: BTreeMap<usize, usize>,
    pub rows: Vec<BoundRow>,
    pub violations: Vec<Violation>,
}

impl ExhaustiveReport {
    pub fn is_sound(&self) -> bool {
        self.violations.is_empty()
    }

    /// Rows where some graph meets the bound with equality (and `irr > 0`).
    pub fn equality_witnesses(&self) -> impl Iterator<Item = &BoundRow> {
        self.rows.iter().filter(|r| r.is_tight())
    }

    /// Smallest `bound − max irr` over all rows of each bound family.
    pub fn worst_gaps(&self) -> BTreeMap<String, Rational> {
        let mut out: BTreeMap<String, Rational> = BTreeMap::new();
        for r in &self.rows {
            let family = match r.bound {
                BoundId::Prop1 { .. } => "prop1".to_string(),
                BoundId::Prop2 { .. } => "prop2".to_string(),
                b => b.to_string(),
            };
            let gap = r.gap();
            out.entry(family)
                .and_modify(|g| {
                    if gap < *g {
                        *g = gap.clone();
                    }
                })
                .or_insert(gap);
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,bound,bound_value,max_irr,gap,witness\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.n,
                r.m,
                r.bound,
                r.value,
                r.max_irr,
                r.gap(),
                to_graph6(&r.witness).expect("oracle orders fit graph6")
            ));
        }
        out
    }
}

impl fmt::Display for ExhaustiveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "exhaustive check, n <= {}, Δ = {}",
            self.n_max, self.delta_cap
        )?;
        for (n, c) in &self.classes {
            writeln!(f, "  n = {n}: {c} classes")?;
        }
        for (family, gap) in self.worst_gaps() {
            writeln!(f, "  worst gap {family}: {gap}")?;
        }
        writeln!(f, "  equality witnesses:")?;
        for r in self.equality_witnesses() {
            writeln!(
                f,
                "    {} n={} m={} irr={} {}",
                r.bound,
                r.n,
                r.m,
                r.max_irr,
                to_graph6(&r.witness).expect("oracle orders fit graph6")
            )?;
        }
        for v in &self.violations {
            writeln!(
                f,
                "  VIOLATION {}: irr {} > {} for {}",
                v.bound, v.irr, v.value, v.graph
            )?;
        }
        write!(f, "{} violations", self.violations.len())
    }
}

/// Checks every applicable bound on every isomorphism class with maximum
/// degree at most `Δ` and at most `n_max` vertices. Theorem 1 and Corollary 1
/// apply to all graphs; the minimum-degree bounds with parameter `δ` apply to
/// graphs whose minimum degree is at least `δ` (the second one only inside its
/// average-degree interval).
pub fn verify_exhaustive(n_max: usize, delta_cap: usize) -> Result<ExhaustiveReport, OracleError> {
    if n_max > MAX_ORDER_DEDUP {
        return Err(OracleError::TooLarge {
            n: n_max,
            limit: MAX_ORDER_DEDUP,
        });
    }
    if delta_cap == 0 {
        return Err(BoundsError::Infeasible("maximum degree must be at least 1".into()).into());
    }
    let mut report = ExhaustiveReport {
        n_max,
        delta_cap,
        classes: BTreeMap::new(),
        rows: Vec::new(),
        violations: Vec::new(),
    };
    let mut rows: BTreeMap<(usize, usize, BoundId), BoundRow> = BTreeMap::new();
    let mut cache: BTreeMap<(usize, usize, BoundId), Rational> = BTreeMap::new();

    for n in 1..=n_max {
        let c = SearchConstraints::new(n).max_degree(delta_cap).dedup(true);
        let mut classes = 0;
        for g in enumerate(&c)? {
            classes += 1;
            let (m, irr, low) = (g.size(), g.irregularity(), g.min_degree());
            let (nu, mu) = (n as u64, m as u64);

            let mut applicable = vec![BoundId::Thm1, BoundId::Cor1];
            for dm in 0..=low.min(delta_cap - 1) {
                applicable.push(BoundId::Prop1 { delta_min: dm });
                if dm >= 1 && bounds::prop2_interval_contains(nu, mu, delta_cap, dm) {
                    applicable.push(BoundId::Prop2 { delta_min: dm });
                }
            }

            for bound in applicable {
                let key = (n, m, bound);
                let value = match cache.get(&key) {
                    Some(v) => v.clone(),
                    None => {
                        let v = match bound {
                            BoundId::Thm1 => bounds::theorem1_bound(nu, mu, delta_cap)?,
                            BoundId::Cor1 => bounds::corollary1_bound(nu, mu, delta_cap)?,
                            BoundId::Prop1 { delta_min } => {
                                bounds::prop1_bound(nu, delta_cap, delta_min)?
                            }
                            BoundId::Prop2 { delta_min } => {
                                bounds::prop2_bound(nu, mu, delta_cap, delta_min)?
                            }
                        };
                        cache.insert(key, v.clone());
                        v
                    }
                };
                let irr_r = Rational::from_integer(irr.into());
                if irr_r > value {
                    report.violations.push(Violation {
                        bound,
                        graph: g.clone(),
                        irr,
                        value: value.clone(),
                    });
                }
                let row = rows.entry(key).or_insert_with(|| BoundRow {
                    n,
                    m,
                    bound,
                    value,
                    max_irr: irr,
                    witness: g.clone(),
                    graphs: 0,
                });
                row.graphs += 1;
                if irr > row.max_irr {
                    row.max_irr = irr;
                    row.witness = g.clone();
                }
            }
        }
        report.classes.insert(n, classes);
    }
    report.rows = rows.into_values().collect();
    Ok(report)
}
