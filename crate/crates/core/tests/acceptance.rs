//! Exit criteria. Runs as a plain binary (`harness = false`) so every
//! criterion prints one PASS/FAIL line; any failure makes the process exit
//! nonzero, which fails `cargo test`.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use forest_identity::identity::{self, IdentityReport, Mode};
use forest_identity::poly::ExponentVector;
use forest_identity::prufer::{self, LabeledTree, PruferCode};
use forest_identity::words::{self, LhsOracle, WordQuery};
use forest_identity::{forest, Limits, Poly, PolyReport};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> String,
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

/// All-blocks identity, symbolic, m = 1..8.
fn all_blocks_symbolic() -> String {
    for m in 1..=8 {
        let r: PolyReport = identity::verify_eq2_with(m, Mode::Symbolic, &Limits::default()).unwrap();
        assert!(r.equal, "m = {m}: {:?}", r.witness);
        assert!(r.witness.is_none());
        assert!(!r.lhs.is_zero());
    }
    let r8: Poly = identity::rhs_eq2(8).unwrap();
    assert_eq!(r8.len(), 6435);
    "m=1..8 exact, 6435 terms at m=8".into()
}

/// Fixed-block identity via u^p extraction, 1 <= p <= m <= 7.
fn fixed_blocks() -> String {
    let mut pairs = 0;
    for m in 1..=7 {
        let reports: Vec<PolyReport> = identity::verify_eq1_all(m).unwrap();
        assert_eq!(reports.len(), m);
        for r in reports {
            assert!(r.equal, "m = {m} p = {:?}: {:?}", r.p, r.witness);
            assert_eq!(r.checks.len(), 2);
            for c in &r.checks {
                assert!(c.ok, "m = {m} p = {:?}: {} {:?}", r.p, c.name, c.witness);
            }
            pairs += 1;
        }
    }
    assert_eq!(pairs, 28);
    format!("{pairs} (m,p) pairs, both extraction links")
}

/// Forest generating function equals the closed form for m <= 6.
fn forest_route() -> String {
    let mut total = 0;
    for m in 1..=6 {
        let gf: Poly = forest::gf_forests(m).unwrap();
        let rhs: Poly = identity::rhs_eq2(m).unwrap();
        assert_eq!(gf, rhs, "m = {m}");
        let count = gf.eval_uniform(&BigInt::from(1));
        assert_eq!(count, BigInt::from((m + 1).pow(m as u32 - 1)));
        total += forest::enumerate_forests(m).unwrap().count();
    }
    let six = forest::enumerate_forests(6).unwrap().count();
    assert_eq!(six, 16807);
    format!("m=1..6, {total} forests ({six} at m=6)")
}

/// Prüfer roundtrip for n <= 7, degree law for n <= 6.
fn prufer_layer() -> String {
    let mut codes = 0;
    for n in 2..=7 {
        let mut per_n = 0;
        for c in prufer::enumerate_codes(n).unwrap() {
            let t = prufer::decode(&c);
            assert_eq!(prufer::encode(&t).unwrap(), c);
            if n <= 6 {
                let deg = t.degrees();
                for (v, &d) in deg.iter().enumerate() {
                    assert_eq!(prufer::degree_of(&c, v).unwrap(), d, "{c} at {v}");
                }
            }
            per_n += 1;
        }
        assert_eq!(per_n, n.pow(n as u32 - 2));
        codes += per_n;
    }
    format!("{codes} codes roundtrip, degree law on n<=6")
}

/// m = 4 forests by component count against C(3, p-1) 4^(4-p).
fn component_classes() -> String {
    let mut by = [0u64; 4];
    for f in forest::enumerate_forests(4).unwrap() {
        by[f.num_components() - 1] += 1;
    }
    assert_eq!(by, [64, 48, 12, 1]);
    let choose3 = [1u64, 3, 3, 1];
    for p in 1..=4 {
        assert_eq!(by[p - 1], choose3[p - 1] * 4u64.pow(4 - p as u32));
        let l: Poly = identity::lhs_eq1(4, p).unwrap();
        let r: Poly = identity::rhs_eq1(4, p).unwrap();
        assert_eq!(l.eval_uniform(&BigInt::from(1)), BigInt::from(by[p - 1]));
        assert_eq!(r.eval_uniform(&BigInt::from(1)), BigInt::from(by[p - 1]));
    }
    assert_eq!(by.iter().sum::<u64>(), 125);
    format!("{by:?}, total 125")
}

/// The x1 x2 x1 word, and closed form against brute force for m <= 6.
fn word_example() -> String {
    let q = WordQuery::new(vec![1, 2, 1], 5, 2).unwrap();
    assert_eq!(words::count_lhs(&q).unwrap(), 3);
    assert_eq!(words::count_rhs(&q).unwrap(), 4);
    assert_eq!(words::count_lhs_oracle(&q).unwrap(), 3);
    let mut n = 0;
    for m in 1..=6 {
        for p in 1..=m {
            let oracle = LhsOracle::new(m, p).unwrap();
            for w in words::all_words(m, m - p) {
                let q = WordQuery::new(w, m, p).unwrap();
                assert_eq!(words::count_lhs(&q).unwrap(), oracle.count(&q).unwrap(), "{:?}", q.word());
                n += 1;
            }
        }
    }
    format!("lhs=3 rhs=4; {n} words agree with brute force")
}

/// Root-split rewrite and the enumerated rooted-tree GF, |T| = 2..5.
fn root_split() -> String {
    for k in 2..=5 {
        let block: Vec<usize> = (1..=k).collect();
        assert!(identity::verify_block_root_split(&block).unwrap(), "|T| = {k}");
        let shifted: Vec<usize> = (1..=k).map(|i| i + 3).collect();
        assert!(identity::verify_block_root_split(&shifted).unwrap());
    }
    "|T|=2..5".into()
}

fn roundtrip_holds(n: usize, decoder: impl Fn(&PruferCode) -> LabeledTree) -> bool {
    prufer::enumerate_codes(n)
        .unwrap()
        .all(|c| prufer::encode(&decoder(&c)).unwrap() == c)
}

/// Mutations of either side are reported with the mutated monomial; a
/// corrupted Prüfer roundtrip is noticed.
fn negative_controls() -> String {
    let sides: Vec<(Poly, Poly)> = (1..=6)
        .map(|m| (identity::lhs_eq2(m).unwrap(), identity::rhs_eq2(m).unwrap()))
        .collect();
    let config = Config {
        cases: 512,
        failure_persistence: None,
        ..Config::default()
    };
    let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    let mut runner = TestRunner::new_with_rng(config, rng);
    let strategy = (
        0usize..6,
        any::<prop::sample::Index>(),
        prop_oneof![-9i64..=-1, 1i64..=9],
        any::<bool>(),
    );
    runner
        .run(&strategy, |(mi, idx, delta, on_lhs)| {
            let (lhs, rhs) = &sides[mi];
            let monomials: Vec<ExponentVector> = rhs.terms().map(|(e, _)| e.clone()).collect();
            let target = monomials[idx.index(monomials.len())].clone();
            let (mut l, mut r) = (lhs.clone(), rhs.clone());
            let side = if on_lhs { &mut l } else { &mut r };
            side.add_term(target.clone(), BigInt::from(delta));
            let report = IdentityReport::from_sides(mi + 1, None, l, r);
            prop_assert!(!report.equal);
            let w = report.witness.expect("mismatch carries a witness");
            prop_assert_eq!(&w.monomial, &target);
            let gap = if on_lhs { &w.left - &w.right } else { &w.right - &w.left };
            prop_assert_eq!(gap, BigInt::from(delta));
            Ok(())
        })
        .unwrap();

    // a monomial that belongs on neither side
    let (lhs, rhs) = &sides[3];
    let mut l = lhs.clone();
    let stray = ExponentVector::from_pairs([(2, 4)]);
    l.add_term(stray.clone(), BigInt::from(1));
    assert_eq!(IdentityReport::from_sides(4, None, l, rhs.clone()).witness.unwrap().monomial, stray);

    // the forest route is a real third witness, not a copy of the rhs
    let mut broken = forest::gf_forests::<BigInt>(4).unwrap();
    broken.add_term(ExponentVector::from_pairs([(0, 2), (1, 1), (3, 1)]), BigInt::from(-1));
    assert!(identity::compare(rhs, &broken).is_some());

    for n in 3..=7 {
        assert!(roundtrip_holds(n, prufer::decode));
        // swap labels 0 and 1 after decoding
        let swapped = |c: &PruferCode| {
            let t = prufer::decode(c);
            let relabel = |v: usize| match v {
                0 => 1,
                1 => 0,
                v => v,
            };
            LabeledTree::new(t.n(), t.edges().iter().map(|&(a, b)| (relabel(a), relabel(b)))).unwrap()
        };
        assert!(!roundtrip_holds(n, swapped), "n = {n}");
    }
    "512 seeded single-coefficient mutations caught; corrupted decoders caught for n=3..7".into()
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "all-blocks identity symbolic, m<=8", budget: secs(10), run: all_blocks_symbolic },
        Criterion { id: 2, name: "fixed-blocks identity with u^p links, m<=7", budget: secs(10), run: fixed_blocks },
        Criterion { id: 3, name: "forest enumeration equals closed form, m<=6", budget: secs(30), run: forest_route },
        Criterion { id: 4, name: "Prufer roundtrip n<=7, degree law n<=6", budget: secs(20), run: prufer_layer },
        Criterion { id: 5, name: "m=4 forests by component count", budget: None, run: component_classes },
        Criterion { id: 6, name: "noncommutative word counts", budget: None, run: word_example },
        Criterion { id: 7, name: "root-split rewrite, |T|=2..5", budget: None, run: root_split },
        Criterion { id: 8, name: "negative controls", budget: None, run: negative_controls },
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.run));
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(detail) => match c.budget {
                Some(b) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
                _ => Ok(detail),
            },
            Err(payload) => Err(payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into())),
        };
        match outcome {
            Ok(detail) => println!("PASS  [{}] {}: {detail} ({elapsed:.2?})", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL  [{}] {}: {why} ({elapsed:.2?})", c.id, c.name);
            }
        }
    }
    let _ = panic::take_hook();
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
