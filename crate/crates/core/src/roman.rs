//! Roman domination: labelings `V -> {0, 1, 2}` where every vertex labeled 0
//! has a neighbor labeled 2, and the minimum total weight of such a labeling.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Tree, Vertex};

/// Largest order accepted by [`roman_bruteforce`] (3^14 assignments).
pub const BRUTE_FORCE_MAX_ORDER: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RomanError {
    #[error("label {label} at vertex {vertex} is not in {{0, 1, 2}}")]
    LabelOutOfDomain { vertex: Vertex, label: u8 },
    #[error("assignment has {found} labels but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("brute force is limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("order must be at least 1")]
    ZeroOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RomanAssignment(Vec<u8>);

impl RomanAssignment {
    pub fn new(labels: Vec<u8>) -> Result<Self, RomanError> {
        if let Some((vertex, &label)) = labels.iter().enumerate().find(|(_, &l)| l > 2) {
            return Err(RomanError::LabelOutOfDomain { vertex, label });
        }
        Ok(RomanAssignment(labels))
    }

    pub fn uniform(n: usize, label: u8) -> Result<Self, RomanError> {
        Self::new(vec![label; n])
    }

    pub fn labels(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RomanResult {
    pub gamma_r: usize,
    pub witness: RomanAssignment,
}

pub fn is_valid_rdf(g: &Graph, a: &RomanAssignment) -> Result<bool, RomanError> {
    if a.len() != g.n() {
        return Err(RomanError::LengthMismatch {
            expected: g.n(),
            found: a.len(),
        });
    }
    Ok(guarded(g.adjacency(), a.labels()))
}

pub fn rdf_weight(a: &RomanAssignment) -> usize {
    a.0.iter().map(|&l| l as usize).sum()
}

fn guarded(adj: &[Vec<Vertex>], labels: &[u8]) -> bool {
    labels
        .iter()
        .zip(adj)
        .all(|(&l, nb)| l != 0 || nb.iter().any(|&w| labels[w] == 2))
}

/// Exhaustive search over all `3^n` labelings of any simple graph. The
/// witness is the lexicographically least optimal labeling.
pub fn roman_bruteforce(g: &Graph) -> Result<RomanResult, RomanError> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(RomanError::TooLarge {
            n,
            max: BRUTE_FORCE_MAX_ORDER,
        });
    }
    let adj = g.adjacency();
    let mut labels = vec![0u8; n];
    let mut weight = 0usize;
    let mut best: Option<(usize, Vec<u8>)> = None;
    loop {
        if best.as_ref().is_none_or(|(w, _)| weight < *w) && guarded(adj, &labels) {
            best = Some((weight, labels.clone()));
        }
        // Odometer step, last vertex least significant.
        let mut i = n;
        loop {
            if i == 0 {
                let (gamma_r, witness) = best.expect("all-ones labeling is always valid");
                return Ok(RomanResult {
                    gamma_r,
                    witness: RomanAssignment(witness),
                });
            }
            i -= 1;
            if labels[i] < 2 {
                labels[i] += 1;
                weight += 1;
                break;
            }
            labels[i] = 0;
            weight -= 2;
        }
    }
}

// Cost of every subtree under each of the four states a vertex can be in.
#[derive(Debug, Clone, Copy)]
struct States {
    /// label 2
    two: usize,
    /// label 1
    one: usize,
    /// label 0, guarded by a child labeled 2
    zero_guarded: usize,
    /// label 0, not yet guarded; the parent must take label 2
    zero_open: usize,
}

impl States {
    fn settled(&self) -> usize {
        self.two.min(self.one).min(self.zero_guarded)
    }

    fn any(&self) -> usize {
        self.settled().min(self.zero_open)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Two,
    One,
    ZeroGuarded,
    ZeroOpen,
}

/// Linear-time exact Roman domination number of a tree, rooted at vertex 0.
pub fn roman_tree_dp(t: &Tree) -> RomanResult {
    let n = t.n();
    // Strictly above any achievable weight (at most n).
    let unreachable = 2 * n + 1;
    let adj = t.adjacency();

    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[0] = 0;
    order.push(0);
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in &adj[u] {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let parent = &parent;
    let children = |u: Vertex| adj[u].iter().copied().filter(move |&w| w != 0 && parent[w] == u);

    let mut cost = vec![
        States {
            two: 0,
            one: 0,
            zero_guarded: 0,
            zero_open: 0
        };
        n
    ];
    // Child forced to label 2 when `u` is ZeroGuarded.
    let mut guard = vec![usize::MAX; n];
    for &u in order.iter().rev() {
        let mut any_sum = 0;
        let mut settled_sum = 0;
        let mut best_swap: Option<(usize, Vertex)> = None;
        for c in children(u) {
            let s = cost[c];
            any_sum += s.any();
            settled_sum += s.settled();
            let extra = s.two - s.settled();
            if best_swap.is_none_or(|(e, _)| extra < e) {
                best_swap = Some((extra, c));
            }
        }
        let zero_guarded = match best_swap {
            Some((extra, c)) => {
                guard[u] = c;
                settled_sum + extra
            }
            None => unreachable,
        };
        cost[u] = States {
            two: 2 + any_sum,
            one: 1 + settled_sum,
            zero_guarded,
            zero_open: settled_sum,
        };
    }

    let mut state = vec![State::One; n];
    let root = cost[0];
    state[0] = pick_settled(&root);
    let mut labels = vec![0u8; n];
    for &u in &order {
        labels[u] = match state[u] {
            State::Two => 2,
            State::One => 1,
            State::ZeroGuarded | State::ZeroOpen => 0,
        };
        for c in children(u) {
            state[c] = match state[u] {
                State::Two => pick_any(&cost[c]),
                State::ZeroGuarded if guard[u] == c => State::Two,
                _ => pick_settled(&cost[c]),
            };
        }
    }
    RomanResult {
        gamma_r: root.settled(),
        witness: RomanAssignment(labels),
    }
}

fn pick_settled(s: &States) -> State {
    let best = s.settled();
    if s.two == best {
        State::Two
    } else if s.one == best {
        State::One
    } else {
        State::ZeroGuarded
    }
}

fn pick_any(s: &States) -> State {
    if s.zero_open < s.settled() {
        State::ZeroOpen
    } else {
        pick_settled(s)
    }
}

/// `ceil(2n / 3)`, the Roman domination number of the path on `n` vertices.
pub fn roman_path_closed_form(n: usize) -> Result<usize, RomanError> {
    if n == 0 {
        return Err(RomanError::ZeroOrder);
    }
    Ok((2 * n).div_ceil(3))
}
