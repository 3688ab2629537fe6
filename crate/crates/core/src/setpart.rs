//! Set partitions of `{1..m}` via restricted growth strings.
//!
//! A restricted growth string `a[0..m]` has `a[0] = 0` and
//! `a[i] <= 1 + max(a[..i])`; element `i + 1` goes into block `a[i]`. Strings
//! are produced in lexicographic order, which lists blocks by their minimum.

use std::fmt;

use crate::error::{Error, Result};
use crate::Limits;

/// A partition of `{1..m}` in canonical form: each block ascending, blocks
/// ordered by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes `blocks` as a partition of `{1..m}`.
    pub fn new(m: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; m + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::Structure("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > m {
                    return Err(Error::Structure(format!("element {x} not in 1..={m}")));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::Structure(format!("element {x} appears twice")));
                }
            }
        }
        if let Some(x) = (1..=m).find(|&x| !seen[x]) {
            return Err(Error::Structure(format!("element {x} is not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    /// Decode a restricted growth string (0-based block labels).
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &b) in rgs.iter().enumerate() {
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(i + 1);
        }
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block label of every element, i.e. the restricted growth string.
    pub fn to_rgs(&self) -> Vec<usize> {
        let mut rgs = vec![0; self.ground_size()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                rgs[x - 1] = b;
            }
        }
        rgs
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            f.write_str("{")?;
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// Lazy lexicographic stream of restricted growth strings, optionally
/// restricted to exactly `k` blocks.
#[derive(Debug, Clone)]
pub struct Partitions {
    rgs: Vec<usize>,
    // prefix_max[i] = max(rgs[..=i])
    prefix_max: Vec<usize>,
    blocks: Option<usize>,
    started: bool,
    done: bool,
}

impl Partitions {
    fn new(m: usize, blocks: Option<usize>) -> Self {
        let mut it = Partitions {
            rgs: vec![0; m],
            prefix_max: vec![0; m],
            blocks,
            started: false,
            done: false,
        };
        // position 0 is fixed at 0; fill the rest minimally
        it.done = !it.fill_from(1);
        it
    }

    /// Smallest completion of `rgs[..start]` that can still reach the block
    /// target. Returns false if none exists.
    fn fill_from(&mut self, start: usize) -> bool {
        let m = self.rgs.len();
        let mut max = self.prefix_max[start - 1];
        let remaining = m - start;
        let ramp = match self.blocks {
            None => 0,
            Some(k) => {
                let needed = (k - 1).saturating_sub(max);
                if needed > remaining || max + 1 > k {
                    return false;
                }
                needed
            }
        };
        for i in start..m {
            if i >= m - ramp {
                max += 1;
                self.rgs[i] = max;
            } else {
                self.rgs[i] = 0;
            }
            self.prefix_max[i] = max;
        }
        true
    }

    fn advance(&mut self) -> bool {
        let m = self.rgs.len();
        for i in (1..m).rev() {
            let cap = self.prefix_max[i - 1] + 1;
            let limit = self.blocks.map_or(cap, |k| cap.min(k - 1));
            while self.rgs[i] < limit {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                if self.fill_from(i + 1) {
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        if self.started {
            if !self.advance() {
                self.done = true;
                return None;
            }
        } else {
            self.started = true;
        }
        Some(SetPartition::from_rgs(&self.rgs))
    }
}

impl std::iter::FusedIterator for Partitions {}

/// Every set partition of `{1..m}`, lazily, in restricted-growth order.
pub fn enumerate_all(m: usize) -> Result<Partitions> {
    if m == 0 {
        return Err(Error::Range {
            what: "m",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    Ok(Partitions::new(m, None))
}

/// The set partitions of `{1..m}` with exactly `p` blocks.
pub fn enumerate_k(m: usize, p: usize) -> Result<Partitions> {
    if m == 0 {
        return enumerate_all(m);
    }
    crate::check_range("p", p, 1, m)?;
    Ok(Partitions::new(m, Some(p)))
}

/// Bell number and the Stirling row `S(m, 1..=m)`, from the recurrence
/// `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn count_checks(m: usize) -> Result<(u128, Vec<u128>)> {
    count_checks_with(m, &Limits::default())
}

pub fn count_checks_with(m: usize, limits: &Limits) -> Result<(u128, Vec<u128>)> {
    crate::check_range("m", m, 1, limits.count_m)?;
    // row[k] = S(n, k) for k in 0..=n
    let mut row = vec![1u128];
    for n in 1..=m {
        let mut next = vec![0u128; n + 1];
        for k in 1..=n {
            let keep = if k < n { k as u128 * row[k] } else { 0 };
            next[k] = keep + row[k - 1];
        }
        row = next;
    }
    let stirling: Vec<u128> = row[1..].to_vec();
    Ok((stirling.iter().sum(), stirling))
}
