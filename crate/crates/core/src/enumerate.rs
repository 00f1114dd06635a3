//! Non-isomorphic free trees of a fixed order.
//!
//! Trees are produced as canonical level sequences of rooted trees, restricted
//! to those rooted at a center with the first principal subtree no larger than
//! the rest (Wright, Richmond, Odlyzko and McKay). Each step is constant
//! amortized time and only the current sequence is kept in memory.

use thiserror::Error;

use crate::graph::{Tree, Vertex};

/// Orders above this need an explicit cap (`TREE_ENUM_CAP` in the CLI).
pub const DEFAULT_MAX_ORDER: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("tree order must be at least 1")]
    ZeroOrder,
    #[error("tree order {n} exceeds the enumeration cap {cap}")]
    AboveCap { n: usize, cap: usize },
}

/// Stream of one representative per isomorphism class of trees on `n`
/// vertices, in the generator's level-sequence order.
///
/// Cloning a stream snapshots its position; the clone resumes from there.
#[derive(Debug, Clone)]
pub struct TreeStream {
    n: usize,
    state: Option<Vec<usize>>,
    emitted: usize,
}

impl TreeStream {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of trees yielded so far.
    pub fn emitted(&self) -> usize {
        self.emitted
    }
}

impl Iterator for TreeStream {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.n == 1 {
            if self.emitted > 0 {
                return None;
            }
            self.emitted = 1;
            return Some(Tree::new(1, []).expect("single vertex"));
        }
        let candidate = self.state.take()?;
        let layout = next_free(candidate);
        let tree = layout_to_tree(&layout);
        self.state = next_rooted(&layout, None);
        self.emitted += 1;
        Some(tree)
    }
}

pub fn enumerate_trees(n: usize) -> Result<TreeStream, EnumError> {
    enumerate_trees_capped(n, DEFAULT_MAX_ORDER)
}

pub fn enumerate_trees_capped(n: usize, cap: usize) -> Result<TreeStream, EnumError> {
    check_order(n, cap)?;
    let state = (n >= 2).then(|| {
        // The path, rooted at its center.
        (0..=n / 2).chain(1..n.div_ceil(2)).collect()
    });
    Ok(TreeStream {
        n,
        state,
        emitted: 0,
    })
}

pub fn count_trees(n: usize) -> Result<usize, EnumError> {
    count_trees_capped(n, DEFAULT_MAX_ORDER)
}

pub fn count_trees_capped(n: usize, cap: usize) -> Result<usize, EnumError> {
    Ok(enumerate_trees_capped(n, cap)?.count())
}

pub fn check_order(n: usize, cap: usize) -> Result<(), EnumError> {
    match n {
        0 => Err(EnumError::ZeroOrder),
        n if n > cap => Err(EnumError::AboveCap { n, cap }),
        _ => Ok(()),
    }
}

/// Successor of a rooted level sequence, regenerating from position `p`
/// (default: the last entry above level 1).
fn next_rooted(seq: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = seq.len() - 1;
            while seq[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while seq[q] != seq[p] - 1 {
        q -= 1;
    }
    let mut out = seq.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence into its first principal subtree (levels shifted
/// down by one) and the remainder with the root.
fn split(seq: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = seq
        .iter()
        .enumerate()
        .skip(1)
        .find(|&(i, &l)| i > 1 && l == 1)
        .map_or(seq.len(), |(i, _)| i);
    let left = seq[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0).chain(seq[m..].iter().copied()).collect();
    (left, rest)
}

/// Advances `candidate` to the first valid free-tree sequence at or after it.
fn next_free(mut candidate: Vec<usize>) -> Vec<usize> {
    loop {
        let (left, rest) = split(&candidate);
        let left_height = left.iter().copied().max().unwrap_or(0);
        let rest_height = rest.iter().copied().max().unwrap_or(0);
        let mut valid = rest_height >= left_height;
        if valid && rest_height == left_height {
            if left.len() > rest.len() || (left.len() == rest.len() && left > rest) {
                valid = false;
            }
        }
        if valid {
            return candidate;
        }
        let p = left.len();
        let mut next = next_rooted(&candidate, Some(p))
            .expect("an invalid candidate always has a successor");
        if candidate[p] > 2 {
            let (new_left, _) = split(&next);
            let h = new_left.iter().copied().max().unwrap_or(0);
            let len = next.len();
            for (slot, level) in next[len - (h + 1)..].iter_mut().zip(1..) {
                *slot = level;
            }
        }
        candidate = next;
    }
}

fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut edges = Vec::with_capacity(layout.len() - 1);
    let mut stack: Vec<Vertex> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&j) = stack.last() {
            edges.push((j, i));
        }
        stack.push(i);
    }
    Tree::new(layout.len(), edges).expect("level sequences describe trees")
}
