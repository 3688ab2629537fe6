//! Labeled trees on `{0..n-1}` and their Prüfer codes.
//!
//! Encoding always strips the smallest-labeled leaf first. A vertex's degree
//! is one more than the number of times it occurs in the code.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::Limits;

/// A tree on vertices `0..n`. Edges are stored as `(a, b)` with `a < b`,
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTree {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl LabeledTree {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Structure("a tree needs at least one vertex".into()));
        }
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        if edges.len() != n - 1 {
            return Err(Error::Structure(format!(
                "{} edges on {n} vertices, expected {}",
                edges.len(),
                n - 1
            )));
        }
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Structure(format!("repeated edge {}-{}", w[0].0, w[0].1)));
            }
        }
        for &(a, b) in &edges {
            if b >= n {
                return Err(Error::Structure(format!("vertex {b} outside 0..{n}")));
            }
            if a == b {
                return Err(Error::Structure(format!("loop at vertex {a}")));
            }
        }
        let tree = LabeledTree { n, edges };
        // n - 1 edges plus connectivity rules out cycles
        let reached = tree.bfs_order(0).len();
        if reached != n {
            return Err(Error::Structure(format!(
                "not connected: {reached} of {n} vertices reachable from 0"
            )));
        }
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Degrees counted by walking the adjacency lists.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency().iter().map(Vec::len).collect()
    }

    /// Breadth-first visiting order from `root`, with each vertex's parent
    /// (`None` for the root).
    pub fn bfs_from(&self, root: usize) -> Vec<(usize, Option<usize>)> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut order = vec![(root, None)];
        seen[root] = true;
        let mut head = 0;
        while head < order.len() {
            let (v, _) = order[head];
            head += 1;
            for &w in &adj[v] {
                if !std::mem::replace(&mut seen[w], true) {
                    order.push((w, Some(v)));
                }
            }
        }
        order
    }

    fn bfs_order(&self, root: usize) -> Vec<usize> {
        self.bfs_from(root).into_iter().map(|(v, _)| v).collect()
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { "," })?;
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl FromStr for LabeledTree {
    type Err = Error;

    /// Parses `"n; a-b,c-d,..."`.
    fn from_str(s: &str) -> Result<Self> {
        let (n, rest) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected \"n; a-b,...\", got {s:?}")))?;
        let n = parse_label(n)?;
        let mut edges = Vec::new();
        for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = part
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad edge {part:?}")))?;
            edges.push((parse_label(a)?, parse_label(b)?));
        }
        LabeledTree::new(n, edges)
    }
}

fn parse_label(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex label {s:?}")))
}

/// A Prüfer sequence of length `n - 2` over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PruferCode {
    n: usize,
    seq: Vec<usize>,
}

impl PruferCode {
    pub fn new(n: usize, seq: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Range {
                what: "n",
                value: n,
                min: 2,
                max: usize::MAX,
            });
        }
        if seq.len() != n - 2 {
            return Err(Error::Structure(format!(
                "code of length {} for n = {n}, expected {}",
                seq.len(),
                n - 2
            )));
        }
        for &x in &seq {
            crate::check_range("label", x, 0, n - 1)?;
        }
        Ok(PruferCode { n, seq })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    /// Parses comma-separated labels; the vertex count is `len + 2`.
    pub fn parse(s: &str) -> Result<Self> {
        let seq = s
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(parse_label)
            .collect::<Result<Vec<_>>>()?;
        PruferCode::new(seq.len() + 2, seq)
    }
}

impl fmt::Display for PruferCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.seq.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

pub fn encode(t: &LabeledTree) -> Result<PruferCode> {
    let n = t.n();
    if n < 2 {
        return Err(Error::Structure("cannot encode a tree with fewer than 2 vertices".into()));
    }
    let adj = t.adjacency();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut seq = Vec::with_capacity(n - 2);
    while seq.len() < n - 2 {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        removed[leaf] = true;
        let parent = *adj[leaf]
            .iter()
            .find(|&&w| !removed[w])
            .expect("leaf has one live neighbor");
        seq.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.push(Reverse(parent));
        }
    }
    PruferCode::new(n, seq)
}

pub fn decode(c: &PruferCode) -> LabeledTree {
    let n = c.n();
    let mut degree = vec![1usize; n];
    for &x in c.seq() {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in c.seq() {
        let Reverse(leaf) = leaves.pop().expect("a valid code always leaves a leaf");
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    LabeledTree::new(n, edges).expect("decoded edges always form a tree")
}

/// Parse-and-validate wrapper around [`decode`] for raw label sequences.
pub fn decode_seq(n: usize, seq: Vec<usize>) -> Result<LabeledTree> {
    Ok(decode(&PruferCode::new(n, seq)?))
}

/// Degree of `v` in the tree encoded by `c`: one plus its occurrences.
pub fn degree_of(c: &PruferCode, v: usize) -> Result<usize> {
    crate::check_range("vertex", v, 0, c.n() - 1)?;
    Ok(1 + c.seq().iter().filter(|&&x| x == v).count())
}

/// All `n^(n-2)` codes in lexicographic order.
#[derive(Debug, Clone)]
pub struct Codes {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for Codes {
    type Item = PruferCode;

    fn next(&mut self) -> Option<PruferCode> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        self.next = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.n {
                break Some(succ);
            }
            succ[i] = 0;
        };
        Some(PruferCode {
            n: self.n,
            seq: current,
        })
    }
}

pub fn enumerate_codes(n: usize) -> Result<Codes> {
    enumerate_codes_with(n, &Limits::default())
}

pub fn enumerate_codes_with(n: usize, limits: &Limits) -> Result<Codes> {
    crate::check_range("n", n, 2, limits.tree_n)?;
    Ok(Codes {
        n,
        next: Some(vec![0; n - 2]),
    })
}

/// Every labeled tree on `0..n`, obtained by decoding every code.
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = LabeledTree>> {
    enumerate_trees_with(n, &Limits::default())
}

pub fn enumerate_trees_with(
    n: usize,
    limits: &Limits,
) -> Result<impl Iterator<Item = LabeledTree>> {
    Ok(enumerate_codes_with(n, limits)?.map(|c| decode(&c)))
}
