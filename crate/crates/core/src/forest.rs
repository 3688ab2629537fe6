//! Rooted labeled forests on `{1..m}`.
//!
//! Edges point away from roots, so a vertex's out-degree is its number of
//! children. A forest is the same thing as a tree on `{0..m}` rooted at 0
//! with vertex 0 deleted: the children of 0 become the roots and every other
//! out-degree is unchanged. [`enumerate_forests`] runs that correspondence
//! over every Prüfer-decoded tree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::poly::{ExponentVector, Polynomial};
use crate::prufer::{self, LabeledTree};
use crate::setpart::SetPartition;
use crate::Limits;

/// A forest on `{1..m}` given by its parent map. Equality is equality of
/// parent maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedForest {
    // parent[v - 1]; None marks a root
    parent: Vec<Option<usize>>,
}

impl RootedForest {
    /// `parent[v - 1]` is the parent of vertex `v`, `None` for roots.
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self> {
        let m = parent.len();
        if m == 0 {
            return Err(Error::Structure("a forest needs at least one vertex".into()));
        }
        for (i, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p == 0 || p > m {
                    return Err(Error::Structure(format!("parent {p} of {} outside 1..={m}", i + 1)));
                }
            }
        }
        // 0 = unvisited, 1 = on current chain, 2 = reaches a root
        let mut state = vec![0u8; m + 1];
        for start in 1..=m {
            let mut chain = Vec::new();
            let mut v = start;
            loop {
                match state[v] {
                    2 => break,
                    1 => return Err(Error::Structure(format!("cycle through vertex {v}"))),
                    _ => {}
                }
                state[v] = 1;
                chain.push(v);
                match parent[v - 1] {
                    Some(p) => v = p,
                    None => break,
                }
            }
            for w in chain {
                state[w] = 2;
            }
        }
        Ok(RootedForest { parent })
    }

    pub fn m(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v - 1]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn roots(&self) -> Vec<usize> {
        (1..=self.m()).filter(|&v| self.parent(v).is_none()).collect()
    }

    pub fn num_components(&self) -> usize {
        self.parent.iter().filter(|p| p.is_none()).count()
    }

    /// Number of children of each vertex, indexed by `v - 1`.
    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.m()];
        for p in self.parent.iter().flatten() {
            deg[p - 1] += 1;
        }
        deg
    }

    /// `u^(#roots) * prod_j xj^(outdeg j)`.
    pub fn weight(&self) -> ExponentVector {
        let roots = (0, self.num_components() as u32);
        let degs = self
            .out_degrees()
            .into_iter()
            .enumerate()
            .map(|(i, d)| (i + 1, d as u32));
        ExponentVector::from_pairs(std::iter::once(roots).chain(degs))
    }

    fn root_of(&self, mut v: usize) -> usize {
        while let Some(p) = self.parent(v) {
            v = p;
        }
        v
    }

    /// Split into connected components: the vertex partition and one rooted
    /// tree per block, in block order.
    pub fn decompose(&self) -> (SetPartition, Vec<RootedTreeOnBlock>) {
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 1..=self.m() {
            by_root.entry(self.root_of(v)).or_default().push(v);
        }
        let blocks: Vec<Vec<usize>> = by_root.values().cloned().collect();
        let partition = SetPartition::new(self.m(), blocks).expect("components partition the vertices");
        let trees = partition
            .blocks()
            .iter()
            .map(|block| {
                let root = self.root_of(block[0]);
                let parent = block
                    .iter()
                    .filter_map(|&v| self.parent(v).map(|p| (v, p)))
                    .collect();
                RootedTreeOnBlock::new(block.clone(), root, parent).expect("component is a rooted tree")
            })
            .collect();
        (partition, trees)
    }
}

impl fmt::Display for RootedForest {
    /// `"m; roots=r1,r2,...; v<-parent,..."`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; roots=", self.m())?;
        let roots: Vec<String> = self.roots().iter().map(ToString::to_string).collect();
        write!(f, "{};", roots.join(","))?;
        let mut first = true;
        for v in 1..=self.m() {
            if let Some(p) = self.parent(v) {
                f.write_str(if first { " " } else { "," })?;
                write!(f, "{v}<-{p}")?;
                first = false;
            }
        }
        Ok(())
    }
}

impl FromStr for RootedForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected \"m; roots=...; v<-p,...\", got {s:?}"));
        let mut parts = s.splitn(3, ';');
        let m: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let roots = parts
            .next()
            .and_then(|r| r.trim().strip_prefix("roots="))
            .ok_or_else(bad)?;
        let mut parent: Vec<Option<usize>> = vec![None; m];
        let mut assigned = vec![false; m];
        let mut set = |v: usize, p: Option<usize>| -> Result<()> {
            if v == 0 || v > m || std::mem::replace(&mut assigned[v - 1], true) {
                return Err(Error::Parse(format!("vertex {v} missing or assigned twice")));
            }
            parent[v - 1] = p;
            Ok(())
        };
        for r in roots.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            set(r.parse().map_err(|_| bad())?, None)?;
        }
        for e in parts.next().unwrap_or("").split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (v, p) = e.split_once("<-").ok_or_else(bad)?;
            let v = v.trim().parse().map_err(|_| bad())?;
            let p = p.trim().parse().map_err(|_| bad())?;
            set(v, Some(p))?;
        }
        if !assigned.iter().all(|&a| a) {
            return Err(Error::Parse("every vertex must be a root or have a parent".into()));
        }
        RootedForest::new(parent)
    }
}

/// A rooted tree whose vertex set is one block of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedTreeOnBlock {
    block: Vec<usize>,
    root: usize,
    parent: BTreeMap<usize, usize>,
}

impl RootedTreeOnBlock {
    pub fn new(mut block: Vec<usize>, root: usize, parent: BTreeMap<usize, usize>) -> Result<Self> {
        block.sort_unstable();
        block.dedup();
        let contains = |v: &usize| block.binary_search(v).is_ok();
        if !contains(&root) {
            return Err(Error::Structure(format!("root {root} not in block")));
        }
        if parent.len() + 1 != block.len() || parent.contains_key(&root) {
            return Err(Error::Structure("every non-root vertex needs exactly one parent".into()));
        }
        for (v, p) in &parent {
            if !contains(v) || !contains(p) {
                return Err(Error::Structure(format!("edge {v}<-{p} leaves the block")));
            }
        }
        for &start in &block {
            let mut v = start;
            for _ in 0..block.len() {
                match parent.get(&v) {
                    Some(&p) => v = p,
                    None => break,
                }
            }
            if v != root {
                return Err(Error::Structure(format!("vertex {start} does not reach the root")));
            }
        }
        Ok(RootedTreeOnBlock {
            block,
            root,
            parent,
        })
    }

    pub fn singleton(v: usize) -> Self {
        RootedTreeOnBlock {
            block: vec![v],
            root: v,
            parent: BTreeMap::new(),
        }
    }

    pub fn block(&self) -> &[usize] {
        &self.block
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent_map(&self) -> &BTreeMap<usize, usize> {
        &self.parent
    }

    /// `prod_{v in block} xv^(children of v)`.
    pub fn weight(&self) -> ExponentVector {
        ExponentVector::from_pairs(self.parent.values().map(|&p| (p, 1)))
    }
}

/// Orient `t` away from vertex 0 and delete it.
pub fn tree_to_forest(t: &LabeledTree) -> Result<RootedForest> {
    if t.n() < 2 {
        return Err(Error::Structure("need a tree on {0..m} with m >= 1".into()));
    }
    let mut parent = vec![None; t.n() - 1];
    for (v, p) in t.bfs_from(0).into_iter().skip(1) {
        parent[v - 1] = p.filter(|&p| p != 0);
    }
    RootedForest::new(parent)
}

/// Add vertex 0 above every root.
pub fn forest_to_tree(f: &RootedForest) -> LabeledTree {
    let edges = (1..=f.m()).map(|v| (f.parent(v).unwrap_or(0), v));
    LabeledTree::new(f.m() + 1, edges).expect("a forest plus a super-root is a tree")
}

/// Join per-block trees into one forest. `trees` may be in any order but
/// their vertex sets must be exactly the blocks of `p`.
pub fn assemble(p: &SetPartition, trees: &[RootedTreeOnBlock]) -> Result<RootedForest> {
    let mut sorted: Vec<&RootedTreeOnBlock> = trees.iter().collect();
    sorted.sort_by_key(|t| t.block()[0]);
    let blocks: Vec<&[usize]> = sorted.iter().map(|t| t.block()).collect();
    let expected: Vec<&[usize]> = p.blocks().iter().map(Vec::as_slice).collect();
    if blocks != expected {
        return Err(Error::Structure("tree vertex sets do not match the partition blocks".into()));
    }
    let mut parent = vec![None; p.ground_size()];
    for t in sorted {
        for (&v, &q) in t.parent_map() {
            parent[v - 1] = Some(q);
        }
    }
    RootedForest::new(parent)
}

/// Every rooted forest on `{1..m}`, one per Prüfer code on `m + 1` vertices.
pub fn enumerate_forests(m: usize) -> Result<impl Iterator<Item = RootedForest>> {
    enumerate_forests_with(m, &Limits::default())
}

pub fn enumerate_forests_with(
    m: usize,
    limits: &Limits,
) -> Result<impl Iterator<Item = RootedForest>> {
    crate::check_range("m", m, 1, limits.forest_m)?;
    let trees_limits = Limits {
        tree_n: limits.tree_n.max(m + 1),
        ..*limits
    };
    Ok(prufer::enumerate_trees_with(m + 1, &trees_limits)?
        .map(|t| tree_to_forest(&t).expect("decoded trees have m + 1 >= 2 vertices")))
}

/// Every rooted tree on `block`: a root choice times a Prüfer tree on the
/// block, relabeled.
pub fn enumerate_block_trees(block: &[usize]) -> Result<impl Iterator<Item = RootedTreeOnBlock>> {
    enumerate_block_trees_with(block, &Limits::default())
}

pub fn enumerate_block_trees_with(
    block: &[usize],
    limits: &Limits,
) -> Result<impl Iterator<Item = RootedTreeOnBlock>> {
    let mut labels = block.to_vec();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() != block.len() {
        return Err(Error::Structure("block has repeated elements".into()));
    }
    let k = labels.len();
    crate::check_range("block size", k, 1, limits.block_size)?;

    let shapes: Vec<LabeledTree> = if k == 1 {
        vec![LabeledTree::new(1, []).expect("single vertex")]
    } else {
        let tree_limits = Limits {
            tree_n: limits.tree_n.max(k),
            ..*limits
        };
        prufer::enumerate_trees_with(k, &tree_limits)?.collect()
    };

    Ok((0..k).flat_map(move |r| {
        let labels = labels.clone();
        shapes.clone().into_iter().map(move |shape| {
            let parent = shape
                .bfs_from(r)
                .into_iter()
                .filter_map(|(v, p)| p.map(|p| (labels[v], labels[p])))
                .collect();
            RootedTreeOnBlock::new(labels.clone(), labels[r], parent).expect("oriented tree is valid")
        })
    }))
}

/// `Σ_forests u^(#roots) prod_j xj^(outdeg j)` by brute force.
pub fn gf_forests<C: Coefficient>(m: usize) -> Result<Polynomial<C>> {
    gf_forests_with(m, &Limits::default())
}

pub fn gf_forests_with<C: Coefficient>(m: usize, limits: &Limits) -> Result<Polynomial<C>> {
    let mut counts: BTreeMap<ExponentVector, u64> = BTreeMap::new();
    for f in enumerate_forests_with(m, limits)? {
        *counts.entry(f.weight()).or_insert(0) += 1;
    }
    Polynomial::from_terms(counts.into_iter().map(|(e, n)| (e, C::from_count(n))), m)
}

/// `Σ_{rooted trees on block} prod x^(outdeg)` by brute force, in the ring of size `m`.
pub fn block_tree_gf<C: Coefficient>(block: &[usize], m: usize) -> Result<Polynomial<C>> {
    block_tree_gf_with(block, m, &Limits::default())
}

pub fn block_tree_gf_with<C: Coefficient>(
    block: &[usize],
    m: usize,
    limits: &Limits,
) -> Result<Polynomial<C>> {
    let mut counts: BTreeMap<ExponentVector, u64> = BTreeMap::new();
    for t in enumerate_block_trees_with(block, limits)? {
        *counts.entry(t.weight()).or_insert(0) += 1;
    }
    Polynomial::from_terms(counts.into_iter().map(|(e, n)| (e, C::from_count(n))), m)
}
