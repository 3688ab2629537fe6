//! Occurrences of a single word on each side of the fixed-block-count
//! identity when `x1..xm` do not commute.
//!
//! On the right, every word of length `m - p` appears exactly once in the
//! expansion of `(x1 + ... + xm)^{m-p}`, then gets multiplied by
//! `C(m-1, p-1)`. On the left each block `T` contributes a word of length
//! `|T| - 1` over its own letters. A lone nonempty word can only come from a
//! partition whose other `p - 1` blocks are singletons (they contribute the
//! empty word), and the remaining block of size `m - p + 1` must contain
//! every letter of the word.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::coeff::binomial;
use crate::error::{Error, Result};
use crate::setpart;
use crate::Limits;

/// A word `x_{w1} x_{w2} ...` queried against the identity for `(m, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordQuery {
    word: Vec<usize>,
    m: usize,
    p: usize,
}

impl WordQuery {
    pub fn new(word: Vec<usize>, m: usize, p: usize) -> Result<Self> {
        if p == 0 || p > m {
            return Err(Error::Query(format!("need 1 <= p <= m, got p = {p}, m = {m}")));
        }
        if word.len() != m - p {
            return Err(Error::Query(format!(
                "word length {} but m - p = {}",
                word.len(),
                m - p
            )));
        }
        if let Some(&bad) = word.iter().find(|&&x| x == 0 || x > m) {
            return Err(Error::Query(format!("letter {bad} outside 1..={m}")));
        }
        Ok(WordQuery { word, m, p })
    }

    /// Parses a comma-separated letter list such as `"1,2,1"`.
    pub fn parse(word: &str, m: usize, p: usize) -> Result<Self> {
        let letters = word
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(|_| Error::Parse(format!("bad letter {s:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        WordQuery::new(letters, m, p)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of distinct letters.
    pub fn support_size(&self) -> usize {
        let mut letters = self.word.clone();
        letters.sort_unstable();
        letters.dedup();
        letters.len()
    }
}

fn binomial_u128(n: usize, k: usize) -> Result<u128> {
    binomial::<BigInt>(n, k)
        .to_u128()
        .ok_or_else(|| Error::Query(format!("C({n}, {k}) does not fit in 128 bits")))
}

pub fn count_rhs(q: &WordQuery) -> Result<u128> {
    binomial_u128(q.m - 1, q.p - 1)
}

/// Partitions in `Π_p` with `p - 1` singletons and one block of size
/// `m - p + 1` holding every letter of the word: choose the rest of that
/// block from the `m - s` non-letters.
pub fn count_lhs(q: &WordQuery) -> Result<u128> {
    if q.word.is_empty() {
        // only the all-singleton partition, and it yields the empty word once
        return Ok(1);
    }
    let s = q.support_size();
    let big = q.m - q.p + 1;
    if big < s {
        return Ok(0);
    }
    binomial_u128(q.m - s, big - s)
}

/// Brute-force word counts for every partition in `Π_p`, built once per
/// `(m, p)` and queried many times.
pub struct LhsOracle {
    m: usize,
    p: usize,
    // words of length |T| - 1 over T, with multiplicity, per block
    block_words: HashMap<Vec<usize>, HashMap<Vec<usize>, u64>>,
    partitions: Vec<Vec<Vec<usize>>>,
}

impl LhsOracle {
    pub fn new(m: usize, p: usize) -> Result<Self> {
        Self::new_with(m, p, &Limits::default())
    }

    pub fn new_with(m: usize, p: usize, limits: &Limits) -> Result<Self> {
        crate::check_range("m", m, 1, limits.word_oracle_m)?;
        let mut block_words = HashMap::new();
        let mut partitions = Vec::new();
        for partition in setpart::enumerate_k(m, p)? {
            for block in partition.blocks() {
                block_words
                    .entry(block.clone())
                    .or_insert_with(|| expand_block(block));
            }
            partitions.push(partition.blocks().to_vec());
        }
        Ok(LhsOracle {
            m,
            p,
            block_words,
            partitions,
        })
    }

    /// Configurations (one word per block) in which some block yields the
    /// query and every other block yields the empty word.
    pub fn count(&self, q: &WordQuery) -> Result<u128> {
        if (q.m, q.p) != (self.m, self.p) {
            return Err(Error::Query(format!(
                "oracle built for m = {}, p = {}",
                self.m, self.p
            )));
        }
        let occurrences = |block: &Vec<usize>, w: &[usize]| -> u128 {
            self.block_words[block].get(w).copied().unwrap_or(0) as u128
        };
        let mut total = 0u128;
        for blocks in &self.partitions {
            if q.word.is_empty() {
                total += blocks.iter().map(|b| occurrences(b, &[])).product::<u128>();
                continue;
            }
            for (i, b) in blocks.iter().enumerate() {
                let rest: u128 = blocks
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, other)| occurrences(other, &[]))
                    .product();
                total += occurrences(b, &q.word) * rest;
            }
        }
        Ok(total)
    }
}

// all |T|^(|T|-1) letter sequences, i.e. the noncommutative expansion
fn expand_block(block: &[usize]) -> HashMap<Vec<usize>, u64> {
    let len = block.len() - 1;
    let mut out = HashMap::new();
    let mut digits = vec![0usize; len];
    loop {
        let w: Vec<usize> = digits.iter().map(|&d| block[d]).collect();
        *out.entry(w).or_insert(0) += 1;
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < block.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

pub fn count_lhs_oracle(q: &WordQuery) -> Result<u128> {
    LhsOracle::new(q.m, q.p)?.count(q)
}

/// Both counts for one query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordCounts {
    pub lhs: u128,
    pub rhs: u128,
}

impl WordCounts {
    pub fn matches(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for WordCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.matches() { "MATCH" } else { "MISMATCH" };
        write!(f, "lhs={} rhs={} {verdict}", self.lhs, self.rhs)
    }
}

pub fn count_both(q: &WordQuery) -> Result<WordCounts> {
    Ok(WordCounts {
        lhs: count_lhs(q)?,
        rhs: count_rhs(q)?,
    })
}

/// Every word of length `len` over `1..=m`, lexicographically.
pub fn all_words(m: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = m.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = code % m + 1;
            code /= m;
        }
        w
    })
}
