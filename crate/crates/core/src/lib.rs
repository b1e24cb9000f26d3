//! Albertson irregularity of graphs and upper bounds on it in terms of the
//! order, the size and the maximum (and optionally minimum) degree.
//!
//! The crate is organised in layers:
//!
//! * [`graph`], [`profile`] and [`io`]: simple undirected graphs, the
//!   irregularity `irr(G) = sum |d(u) - d(v)|` over edges, degree profiles and
//!   the edge-list / graph6 formats.
//! * [`bounds`]: closed forms of every bound, evaluated in exact rationals.
//! * [`lp`]: the degree-profile linear program, its dual, an exact rational
//!   simplex solver and the explicit dual certificates behind each bound.
//! * [`oracle`]: brute-force enumeration of small graphs used as ground truth.

pub mod bounds;
pub mod graph;
pub mod io;
pub mod lp;
pub mod oracle;
pub mod profile;
pub mod rational;

pub use graph::{Graph, GraphError};
pub use profile::{degree_profile, DegreeProfile};
pub use rational::Rational;
