//! Atom-bond connectivity index.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Tree;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbcError {
    #[error("edge endpoint degrees must be at least 1, got ({0}, {1})")]
    ZeroDegree(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct AbcValue(pub f64);

impl AbcValue {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// `sqrt((du + dv - 2) / (du * dv))` for an edge with endpoint degrees `du`, `dv`.
pub fn edge_contribution(du: usize, dv: usize) -> Result<f64, AbcError> {
    if du == 0 || dv == 0 {
        return Err(AbcError::ZeroDegree(du, dv));
    }
    let (a, b) = (du.min(dv) as f64, du.max(dv) as f64);
    Ok(((a + b - 2.0) / (a * b)).sqrt())
}

/// Sums edge contributions in ascending order of (smaller degree, larger
/// degree). The order depends only on the degree-pair multiset, so the result
/// is bit-identical under any relabeling.
pub fn abc_index(t: &Tree) -> AbcValue {
    let mut pairs = degree_pairs(t);
    pairs.sort_unstable();
    let sum = pairs
        .into_iter()
        .map(|(a, b)| edge_contribution(a, b).expect("tree edges have degree >= 1"))
        .sum();
    AbcValue(sum)
}

fn degree_pairs(t: &Tree) -> Vec<(usize, usize)> {
    let deg = t.degrees();
    t.edges()
        .iter()
        .map(|&(u, v)| (deg[u].min(deg[v]), deg[u].max(deg[v])))
        .collect()
}
