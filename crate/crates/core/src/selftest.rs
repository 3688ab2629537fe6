//! The full battery of exact checks at default limits, as a table.

use std::fmt;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::binomial;
use crate::forest;
use crate::identity::{self, IdentityReport};
use crate::poly::ExponentVector;
use crate::prufer;
use crate::words::{self, LhsOracle, WordQuery};
use crate::Poly;

pub const DEFAULT_SEED: u64 = 0x00f0_2e57;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Seed for the randomized negative controls.
    pub seed: u64,
    /// Perturb one coefficient of the closed form before the first check,
    /// which must then fail. Exercises the failure path.
    pub inject_fault: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: DEFAULT_SEED,
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn new(name: &'static str, result: Result<String, String>) -> Self {
        match result {
            Ok(detail) => Outcome {
                name,
                passed: true,
                detail,
            },
            Err(detail) => Outcome {
                name,
                passed: false,
                detail,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub outcomes: Vec<Outcome>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
        for o in &self.outcomes {
            let tag = if o.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag}  {:width$}  {}", o.name, o.detail)?;
        }
        let ok = self.outcomes.iter().filter(|o| o.passed).count();
        writeln!(f, "{ok}/{} checks passed", self.outcomes.len())
    }
}

type Check = Result<String, String>;

fn fail_on<C: crate::Coefficient>(report: &IdentityReport<C>) -> Check {
    if report.holds() {
        return Ok(String::new());
    }
    let label = match report.p {
        Some(p) => format!("m={} p={p}", report.m),
        None => format!("m={}", report.m),
    };
    if let Some(w) = &report.witness {
        return Err(format!("{label}: lhs vs rhs {w}"));
    }
    let bad = report.checks.iter().find(|c| !c.ok).expect("some check failed");
    Err(format!(
        "{label}: {} {}",
        bad.name,
        bad.witness.as_ref().expect("failed check has a witness")
    ))
}

fn all_blocks_symbolic(inject_fault: bool) -> Check {
    for m in 1..=8 {
        let lhs: Poly = identity::lhs_eq2(m).map_err(|e| e.to_string())?;
        let mut rhs: Poly = identity::rhs_eq2(m).map_err(|e| e.to_string())?;
        if inject_fault && m == 8 {
            rhs.add_term(ExponentVector::from_pairs([(0, 1), (1, 7)]), BigInt::from(1));
        }
        fail_on(&IdentityReport::from_sides(m, None, lhs, rhs))?;
    }
    Ok("m=1..8 exact".into())
}

fn fixed_blocks_extraction() -> Check {
    let mut n = 0;
    for m in 1..=7 {
        for report in identity::verify_eq1_all::<BigInt>(m).map_err(|e| e.to_string())? {
            fail_on(&report)?;
            n += 1;
        }
    }
    Ok(format!("{n} (m,p) pairs, both u^p links"))
}

fn forest_route() -> Check {
    let mut forests = 0;
    for m in 1..=6 {
        let gf: Poly = forest::gf_forests(m).map_err(|e| e.to_string())?;
        let rhs: Poly = identity::rhs_eq2(m).map_err(|e| e.to_string())?;
        if let Some(w) = identity::compare(&gf, &rhs) {
            return Err(format!("m={m}: forests vs rhs {w}"));
        }
        forests += (m + 1).pow(m as u32 - 1);
    }
    Ok(format!("m=1..6, {forests} forests"))
}

fn prufer_layer() -> Check {
    let mut codes = 0;
    for n in 2..=7 {
        for c in prufer::enumerate_codes(n).map_err(|e| e.to_string())? {
            let t = prufer::decode(&c);
            let back = prufer::encode(&t).map_err(|e| e.to_string())?;
            if back != c {
                return Err(format!("n={n}: code {c} came back as {back}"));
            }
            if n <= 6 {
                let deg = t.degrees();
                for (v, &d) in deg.iter().enumerate() {
                    if prufer::degree_of(&c, v).map_err(|e| e.to_string())? != d {
                        return Err(format!("n={n}: degree law fails at vertex {v} of {c}"));
                    }
                }
            }
            codes += 1;
        }
    }
    Ok(format!("{codes} codes roundtrip, degree law n<=6"))
}

fn component_classes() -> Check {
    let m = 4;
    let mut by = [0u64; 4];
    for f in forest::enumerate_forests(m).map_err(|e| e.to_string())? {
        by[f.num_components() - 1] += 1;
    }
    let expected: Vec<u64> = (1..=m)
        .map(|p| binomial::<i64>(m - 1, p - 1) as u64 * (m as u64).pow((m - p) as u32))
        .collect();
    if by.to_vec() != expected || by.iter().sum::<u64>() != 125 {
        return Err(format!("got {by:?}, expected {expected:?}"));
    }
    Ok(format!("m=4 by components {by:?}"))
}

fn word_example() -> Check {
    let query = WordQuery::new(vec![1, 2, 1], 5, 2).map_err(|e| e.to_string())?;
    let counts = words::count_both(&query).map_err(|e| e.to_string())?;
    if (counts.lhs, counts.rhs) != (3, 4) {
        return Err(format!("x1x2x1: {counts}, expected lhs=3 rhs=4"));
    }
    let mut queries = 0;
    for m in 1..=6 {
        for p in 1..=m {
            let oracle = LhsOracle::new(m, p).map_err(|e| e.to_string())?;
            for w in words::all_words(m, m - p) {
                let q = WordQuery::new(w, m, p).map_err(|e| e.to_string())?;
                let closed = words::count_lhs(&q).map_err(|e| e.to_string())?;
                let brute = oracle.count(&q).map_err(|e| e.to_string())?;
                if closed != brute {
                    return Err(format!("{:?} m={m} p={p}: {closed} vs {brute}", q.word()));
                }
                queries += 1;
            }
        }
    }
    Ok(format!("x1x2x1: {counts}; oracle agrees on {queries} words"))
}

fn root_split() -> Check {
    for k in 2..=5 {
        let block: Vec<usize> = (1..=k).collect();
        if !identity::verify_block_root_split(&block).map_err(|e| e.to_string())? {
            return Err(format!("|T|={k}"));
        }
    }
    Ok("|T|=2..5, three routes".into())
}

fn negative_controls(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut caught = 0;
    for m in 1..=6 {
        let lhs: Poly = identity::lhs_eq2(m).map_err(|e| e.to_string())?;
        let rhs: Poly = identity::rhs_eq2(m).map_err(|e| e.to_string())?;
        let monomials: Vec<ExponentVector> = rhs.terms().map(|(e, _)| e.clone()).collect();
        for _ in 0..8 {
            let target = monomials.choose(&mut rng).expect("rhs is nonzero").clone();
            let delta = BigInt::from(*[-2i64, -1, 1, 2, 7].choose(&mut rng).expect("nonempty"));
            let mutate_lhs = rng.gen_bool(0.5);
            let (mut l, mut r) = (lhs.clone(), rhs.clone());
            if mutate_lhs {
                l.add_term(target.clone(), delta);
            } else {
                r.add_term(target.clone(), delta);
            }
            let report = IdentityReport::from_sides(m, None, l, r);
            match report.witness {
                Some(w) if w.monomial == target => caught += 1,
                _ => return Err(format!("m={m}: mutation at {target} went unnoticed")),
            }
        }
    }
    // corrupt a decoded tree by re-hanging one leaf and expect a different code
    for n in 4..=7 {
        let len = n - 2;
        let seq: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let code = prufer::PruferCode::new(n, seq).map_err(|e| e.to_string())?;
        let tree = prufer::decode(&code);
        let deg = tree.degrees();
        let leaf = (0..n).find(|&v| deg[v] == 1).expect("trees have leaves");
        let old = tree.edges().iter().find(|&&(a, b)| a == leaf || b == leaf).copied().expect("leaf edge");
        let neighbor = if old.0 == leaf { old.1 } else { old.0 };
        let other = (0..n).find(|&v| v != leaf && v != neighbor).expect("n >= 3");
        let edges = tree.edges().iter().map(|&e| if e == old { (leaf, other) } else { e });
        let corrupted = prufer::LabeledTree::new(n, edges).map_err(|e| e.to_string())?;
        let recoded = prufer::encode(&corrupted).map_err(|e| e.to_string())?;
        if recoded == code {
            return Err(format!("n={n}: corrupted tree still encodes to {code}"));
        }
        caught += 1;
    }
    Ok(format!("{caught} seeded corruptions detected"))
}

/// Runs every check in a fixed order.
pub fn run(options: &Options) -> Summary {
    let outcomes = vec![
        Outcome::new("all-blocks-symbolic", all_blocks_symbolic(options.inject_fault)),
        Outcome::new("fixed-blocks-extraction", fixed_blocks_extraction()),
        Outcome::new("forest-route", forest_route()),
        Outcome::new("prufer-layer", prufer_layer()),
        Outcome::new("component-classes", component_classes()),
        Outcome::new("word-example", word_example()),
        Outcome::new("root-split", root_split()),
        Outcome::new("negative-controls", negative_controls(options.seed)),
    ];
    Summary { outcomes }
}
