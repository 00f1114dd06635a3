//! Reference implementations shared by the integration tests. Nothing here
//! calls into the library's enumeration or canonical form code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::Rng;

pub type Edges = Vec<(usize, usize)>;

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

pub fn bfs_distances(adj: &[Vec<usize>], src: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn eccentricities(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let adj = adjacency(n, edges);
    (0..n)
        .map(|v| *bfs_distances(&adj, v).iter().max().unwrap())
        .collect()
}

/// Diameter from all-pairs BFS.
pub fn diameter(n: usize, edges: &[(usize, usize)]) -> usize {
    eccentricities(n, edges).into_iter().max().unwrap()
}

/// Vertices of minimum eccentricity.
pub fn center(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let ecc = eccentricities(n, edges);
    let r = *ecc.iter().min().unwrap();
    (0..n).filter(|&v| ecc[v] == r).collect()
}

fn rooted_code(adj: &[Vec<usize>], u: usize, parent: usize, out: &mut Vec<u8>) {
    let mut kids: Vec<Vec<u8>> = adj[u]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| {
            let mut k = Vec::new();
            rooted_code(adj, w, u, &mut k);
            k
        })
        .collect();
    kids.sort();
    out.push(b'(');
    for k in kids {
        out.extend(k);
    }
    out.push(b')');
}

/// Center by repeated leaf deletion.
fn stripped_center(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort();
    layer
}

/// Byte AHU code rooted at each center vertex, smallest kept.
pub fn ahu_bytes(n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let adj = adjacency(n, edges);
    stripped_center(&adj)
        .into_iter()
        .map(|c| {
            let mut out = Vec::with_capacity(2 * n);
            rooted_code(&adj, c, usize::MAX, &mut out);
            out
        })
        .min()
        .unwrap()
}

pub fn ahu_code(n: usize, edges: &[(usize, usize)]) -> String {
    String::from_utf8(ahu_bytes(n, edges)).unwrap()
}

pub fn prufer_decode(n: usize, seq: &[usize]) -> Edges {
    if n == 1 {
        return Vec::new();
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Partitions of `total` into at most `parts` non-increasing positive parts.
fn partitions(total: usize, max_part: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    if parts == 0 {
        return;
    }
    for p in (1..=max_part.min(total)).rev() {
        prefix.push(p);
        partitions(total - p, p, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Isomorphism classes of trees on `n` vertices, by decoding Prüfer
/// sequences and deduplicating on [`ahu_bytes`].
///
/// Every tree has a labeling whose degrees are non-increasing in the label,
/// and in a Prüfer sequence label `v` occurs `deg(v) - 1` times. So it is
/// enough to decode the sequences whose occurrence counts are non-increasing
/// in the label.
pub fn prufer_classes(n: usize) -> BTreeSet<String> {
    if n <= 2 {
        let edges: Edges = if n == 2 { vec![(0, 1)] } else { Vec::new() };
        return BTreeSet::from([ahu_code(n, &edges)]);
    }
    let mut classes = HashSet::new();
    let mut counts = Vec::new();
    partitions(n - 2, n - 2, n, &mut Vec::new(), &mut counts);
    for c in counts {
        let mut seq: Vec<usize> = c
            .iter()
            .enumerate()
            .flat_map(|(v, &k)| std::iter::repeat_n(v, k))
            .collect();
        loop {
            classes.insert(ahu_bytes(n, &prufer_decode(n, &seq)));
            if !next_permutation(&mut seq) {
                break;
            }
        }
    }
    classes
        .into_iter()
        .map(|c| String::from_utf8(c).unwrap())
        .collect()
}

/// Uniform random labeled tree.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Edges {
    match n {
        1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(n, &seq)
        }
    }
}

/// Exhaustive Roman domination number of a graph given by adjacency lists.
pub fn roman_exhaustive(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    let mut best = usize::MAX;
    let mut labels = vec![0u8; n];
    for code in 0..3usize.pow(n as u32) {
        let mut c = code;
        for l in labels.iter_mut() {
            *l = (c % 3) as u8;
            c /= 3;
        }
        let ok = (0..n).all(|v| labels[v] != 0 || adj[v].iter().any(|&w| labels[w] == 2));
        if ok {
            best = best.min(labels.iter().map(|&l| l as usize).sum());
        }
    }
    best
}
