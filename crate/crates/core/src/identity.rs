//! Both sides of the partition/forest identity, built symbolically and
//! compared term by term.
//!
//! With all block counts:
//!
//! ```text
//! lhs_eq2(m) = Σ_{P ∈ Π(Ω)} Π_{T ∈ P} u (Σ_{x∈T} x)^{|T|-1}
//! rhs_eq2(m) = u (u + x1 + ... + xm)^{m-1}
//! ```
//!
//! and with exactly `p` blocks (the `u^p` coefficient of the above):
//!
//! ```text
//! lhs_eq1(m, p) = Σ_{P ∈ Π_p(Ω)} Π_{T ∈ P} (Σ_{x∈T} x)^{|T|-1}
//! rhs_eq1(m, p) = C(m-1, p-1) (x1 + ... + xm)^{m-p}
//! ```

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::coeff::{binomial, Coefficient};
use crate::error::{Error, Result};
use crate::forest;
use crate::poly::{ExponentVector, Polynomial};
use crate::setpart::{self, SetPartition};
use crate::Limits;

/// Which routes `verify_eq2` compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Add the forest route whenever `m` is within the three-way limit.
    #[default]
    Auto,
    /// Symbolic sides only.
    Symbolic,
    /// Require the forest route; out-of-range `m` is an error.
    ThreeWay,
}

/// First monomial (in canonical order) where two polynomials disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct Witness<C: Coefficient> {
    pub monomial: ExponentVector,
    #[serde(serialize_with = "as_decimal")]
    pub left: C,
    #[serde(serialize_with = "as_decimal")]
    pub right: C,
}

fn as_decimal<C: Coefficient, S: Serializer>(c: &C, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

impl<C: Coefficient> fmt::Display for Witness<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient of {} differs: {} vs {}",
            self.monomial, self.left, self.right
        )
    }
}

/// Compare two polynomials, returning the leading disagreement if any.
pub fn compare<C: Coefficient>(a: &Polynomial<C>, b: &Polynomial<C>) -> Option<Witness<C>> {
    // walk both term lists from the top, like a merge
    let mut ta = a.terms().peekable();
    let mut tb = b.terms().peekable();
    loop {
        match (ta.peek(), tb.peek()) {
            (None, None) => return None,
            (Some(&(e, c)), None) => {
                return Some(Witness {
                    monomial: e.clone(),
                    left: c.clone(),
                    right: C::zero(),
                })
            }
            (None, Some(&(e, c))) => {
                return Some(Witness {
                    monomial: e.clone(),
                    left: C::zero(),
                    right: c.clone(),
                })
            }
            (Some(&(ea, ca)), Some(&(eb, cb))) => match ea.cmp(eb) {
                std::cmp::Ordering::Greater => {
                    return Some(Witness {
                        monomial: ea.clone(),
                        left: ca.clone(),
                        right: C::zero(),
                    })
                }
                std::cmp::Ordering::Less => {
                    return Some(Witness {
                        monomial: eb.clone(),
                        left: C::zero(),
                        right: cb.clone(),
                    })
                }
                std::cmp::Ordering::Equal => {
                    if ca != cb {
                        return Some(Witness {
                            monomial: ea.clone(),
                            left: ca.clone(),
                            right: cb.clone(),
                        });
                    }
                    ta.next();
                    tb.next();
                }
            },
        }
    }
}

/// An additional pairwise comparison carried by a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct RouteCheck<C: Coefficient> {
    pub name: String,
    pub ok: bool,
    pub witness: Option<Witness<C>>,
}

impl<C: Coefficient> RouteCheck<C> {
    pub fn new(name: impl Into<String>, a: &Polynomial<C>, b: &Polynomial<C>) -> Self {
        let witness = compare(a, b);
        RouteCheck {
            name: name.into(),
            ok: witness.is_none(),
            witness,
        }
    }
}

/// Outcome of comparing the two sides of one instance.
///
/// `equal` and `witness` describe `lhs` against `rhs` only; further routes
/// (forest enumeration, coefficient extraction) are listed in `checks`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct IdentityReport<C: Coefficient> {
    pub m: usize,
    pub p: Option<usize>,
    pub equal: bool,
    pub witness: Option<Witness<C>>,
    pub checks: Vec<RouteCheck<C>>,
    pub lhs: Polynomial<C>,
    pub rhs: Polynomial<C>,
}

impl<C: Coefficient> IdentityReport<C> {
    pub fn from_sides(m: usize, p: Option<usize>, lhs: Polynomial<C>, rhs: Polynomial<C>) -> Self {
        let witness = compare(&lhs, &rhs);
        IdentityReport {
            m,
            p,
            equal: witness.is_none(),
            witness,
            checks: Vec::new(),
            lhs,
            rhs,
        }
    }

    /// `lhs = rhs` and every extra route agrees.
    pub fn holds(&self) -> bool {
        self.equal && self.checks.iter().all(|c| c.ok)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }
}

impl<C: Coefficient> fmt::Display for IdentityReport<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            Some(p) => write!(f, "identity m={} p={}: ", self.m, p)?,
            None => write!(f, "identity m={}: ", self.m)?,
        }
        f.write_str(if self.holds() { "HOLDS" } else { "FAILS" })?;
        writeln!(f)?;
        writeln!(f, "  lhs terms={} rhs terms={}", self.lhs.len(), self.rhs.len())?;
        match &self.witness {
            None => writeln!(f, "  lhs = rhs: ok")?,
            Some(w) => writeln!(f, "  lhs = rhs: MISMATCH, {w}")?,
        }
        for check in &self.checks {
            match &check.witness {
                None => writeln!(f, "  {}: ok", check.name)?,
                Some(w) => writeln!(f, "  {}: MISMATCH, {w}", check.name)?,
            }
        }
        Ok(())
    }
}

fn check_symbolic_m(m: usize, limits: &Limits) -> Result<()> {
    crate::check_range("m", m, 1, limits.symbolic_m)
}

/// Memoized `u^with_u (Σ_{x∈T} x)^{|T|-1}` per block.
struct BlockFactors<C> {
    m: usize,
    with_u: bool,
    cache: HashMap<Vec<usize>, Polynomial<C>>,
}

impl<C: Coefficient> BlockFactors<C> {
    fn new(m: usize, with_u: bool) -> Self {
        BlockFactors {
            m,
            with_u,
            cache: HashMap::new(),
        }
    }

    fn factor(&mut self, block: &[usize]) -> &Polynomial<C> {
        let (m, with_u) = (self.m, self.with_u);
        self.cache.entry(block.to_vec()).or_insert_with(|| {
            let power = Polynomial::sum_of_vars(block.iter().copied(), m).pow(block.len() as u32 - 1);
            if with_u {
                let u = Polynomial::variable(0, m).expect("u is always in range");
                &u * &power
            } else {
                power
            }
        })
    }

    fn partition_term(&mut self, partition: &SetPartition) -> Polynomial<C> {
        let mut term = Polynomial::one(self.m);
        for block in partition.blocks() {
            term = &term * self.factor(block);
        }
        term
    }

    fn sum<I: IntoIterator<Item = SetPartition>>(&mut self, partitions: I) -> Polynomial<C> {
        let mut total = Polynomial::zero(self.m);
        for partition in partitions {
            let term = self.partition_term(&partition);
            total.add_assign(&term).expect("same ring");
        }
        total
    }
}

pub fn lhs_eq2<C: Coefficient>(m: usize) -> Result<Polynomial<C>> {
    lhs_eq2_with(m, &Limits::default())
}

pub fn lhs_eq2_with<C: Coefficient>(m: usize, limits: &Limits) -> Result<Polynomial<C>> {
    check_symbolic_m(m, limits)?;
    Ok(BlockFactors::new(m, true).sum(setpart::enumerate_all(m)?))
}

/// The part of `lhs_eq2` contributed by partitions with exactly `p` blocks.
pub fn lhs_eq2_blocks<C: Coefficient>(m: usize, p: usize) -> Result<Polynomial<C>> {
    check_symbolic_m(m, &Limits::default())?;
    Ok(BlockFactors::new(m, true).sum(setpart::enumerate_k(m, p)?))
}

pub fn rhs_eq2<C: Coefficient>(m: usize) -> Result<Polynomial<C>> {
    rhs_eq2_with(m, &Limits::default())
}

pub fn rhs_eq2_with<C: Coefficient>(m: usize, limits: &Limits) -> Result<Polynomial<C>> {
    check_symbolic_m(m, limits)?;
    let u = Polynomial::variable(0, m)?;
    let base = &u + &Polynomial::sum_of_x(m);
    Ok(&u * &base.pow(m as u32 - 1))
}

pub fn lhs_eq1<C: Coefficient>(m: usize, p: usize) -> Result<Polynomial<C>> {
    lhs_eq1_with(m, p, &Limits::default())
}

pub fn lhs_eq1_with<C: Coefficient>(m: usize, p: usize, limits: &Limits) -> Result<Polynomial<C>> {
    check_symbolic_m(m, limits)?;
    Ok(BlockFactors::new(m, false).sum(setpart::enumerate_k(m, p)?))
}

pub fn rhs_eq1<C: Coefficient>(m: usize, p: usize) -> Result<Polynomial<C>> {
    rhs_eq1_with(m, p, &Limits::default())
}

pub fn rhs_eq1_with<C: Coefficient>(m: usize, p: usize, limits: &Limits) -> Result<Polynomial<C>> {
    check_symbolic_m(m, limits)?;
    crate::check_range("p", p, 1, m)?;
    let factor: C = binomial(m - 1, p - 1);
    Ok(Polynomial::sum_of_x(m).pow((m - p) as u32).scale(&factor))
}

pub fn verify_eq2<C: Coefficient>(m: usize) -> Result<IdentityReport<C>> {
    verify_eq2_with(m, Mode::Auto, &Limits::default())
}

pub fn verify_eq2_with<C: Coefficient>(
    m: usize,
    mode: Mode,
    limits: &Limits,
) -> Result<IdentityReport<C>> {
    let lhs = lhs_eq2_with(m, limits)?;
    let rhs = rhs_eq2_with(m, limits)?;
    let threeway = match mode {
        Mode::Symbolic => false,
        Mode::Auto => m <= limits.threeway_m.min(limits.forest_m),
        Mode::ThreeWay => {
            crate::check_range("m", m, 1, limits.threeway_m.min(limits.forest_m))?;
            true
        }
    };
    let mut report = IdentityReport::from_sides(m, None, lhs, rhs);
    if threeway {
        let forests = forest::gf_forests_with(m, limits)?;
        report.checks.push(RouteCheck::new("lhs = forest enumeration", &report.lhs, &forests));
        report.checks.push(RouteCheck::new("rhs = forest enumeration", &report.rhs, &forests));
    }
    Ok(report)
}

pub fn verify_eq1<C: Coefficient>(m: usize, p: usize) -> Result<IdentityReport<C>> {
    verify_eq1_with(m, p, &Limits::default())
}

pub fn verify_eq1_with<C: Coefficient>(
    m: usize,
    p: usize,
    limits: &Limits,
) -> Result<IdentityReport<C>> {
    check_symbolic_m(m, limits)?;
    crate::check_range("p", p, 1, m)?;
    let full_lhs = lhs_eq2_with(m, limits)?;
    let full_rhs = rhs_eq2_with(m, limits)?;
    eq1_report(m, p, &full_lhs, &full_rhs, limits)
}

/// Reports for every `p` in `1..=m`, sharing one expansion of each full side.
pub fn verify_eq1_all<C: Coefficient>(m: usize) -> Result<Vec<IdentityReport<C>>> {
    verify_eq1_all_with(m, &Limits::default())
}

pub fn verify_eq1_all_with<C: Coefficient>(
    m: usize,
    limits: &Limits,
) -> Result<Vec<IdentityReport<C>>> {
    let full_lhs = lhs_eq2_with(m, limits)?;
    let full_rhs = rhs_eq2_with(m, limits)?;
    (1..=m)
        .map(|p| eq1_report(m, p, &full_lhs, &full_rhs, limits))
        .collect()
}

fn eq1_report<C: Coefficient>(
    m: usize,
    p: usize,
    full_lhs: &Polynomial<C>,
    full_rhs: &Polynomial<C>,
    limits: &Limits,
) -> Result<IdentityReport<C>> {
    let lhs = lhs_eq1_with(m, p, limits)?;
    let rhs = rhs_eq1_with(m, p, limits)?;
    let mut report = IdentityReport::from_sides(m, Some(p), lhs, rhs);
    let lhs_link = full_lhs.coeff_of_u(p as u32);
    let rhs_link = full_rhs.coeff_of_u(p as u32);
    report.checks.push(RouteCheck::new("lhs = [u^p] full lhs", &report.lhs, &lhs_link));
    report.checks.push(RouteCheck::new("rhs = [u^p] full rhs", &report.rhs, &rhs_link));
    Ok(report)
}

/// Checks `(Σ_T x)^{|T|-1} = Σ_{r∈T} r (Σ_T x)^{|T|-2}` as polynomials and
/// that the rooted trees on `block` have exactly this out-degree generating
/// function.
pub fn verify_block_root_split(block: &[usize]) -> Result<bool> {
    verify_block_root_split_with(block, &Limits::default())
}

pub fn verify_block_root_split_with(block: &[usize], limits: &Limits) -> Result<bool> {
    let k = block.len();
    crate::check_range("block size", k, 2, limits.block_size)?;
    if block.contains(&0) {
        return Err(Error::Structure("block elements are x-variables 1..m".into()));
    }
    let m = *block.iter().max().expect("block is nonempty");
    let sum = Polynomial::<num_bigint::BigInt>::sum_of_vars(block.iter().copied(), m);
    let power = sum.pow(k as u32 - 1);
    let rest = sum.pow(k as u32 - 2);
    let mut split = Polynomial::zero(m);
    for &r in block {
        split = &split + &(&Polynomial::variable(r, m)? * &rest);
    }
    let trees = forest::block_tree_gf_with(block, m, limits)?;
    Ok(power == split && trees == power)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Poly128};
    use num_bigint::BigInt;

    fn u(m: usize) -> Poly {
        Poly::variable(0, m).unwrap()
    }

    fn x(j: usize, m: usize) -> Poly {
        Poly::variable(j, m).unwrap()
    }

    fn bump(p: &Poly, e: ExponentVector, delta: i64) -> Poly {
        let mut out = p.clone();
        out.add_term(e, BigInt::from(delta));
        out
    }

    #[test]
    fn lhs_eq2_small() {
        assert_eq!(lhs_eq2::<BigInt>(1).unwrap(), u(1));
        let m = 2;
        let expected = &(&u(m) * &Poly::sum_of_x(m)) + &(&u(m) * &u(m));
        assert_eq!(lhs_eq2::<BigInt>(2).unwrap(), expected);

        let m = 3;
        let uu = &u(m) * &u(m);
        let expected = [
            &u(m) * &Poly::sum_of_x(m).pow(2),
            &uu * &(&x(1, m) + &x(2, m)),
            &uu * &(&x(1, m) + &x(3, m)),
            &uu * &(&x(2, m) + &x(3, m)),
            &uu * &u(m),
        ]
        .into_iter()
        .fold(Poly::zero(m), |acc, t| &acc + &t);
        assert_eq!(lhs_eq2::<BigInt>(3).unwrap(), expected);
    }

    #[test]
    fn rhs_eq2_small() {
        assert_eq!(rhs_eq2::<BigInt>(1).unwrap(), u(1));
        assert_eq!(rhs_eq2::<BigInt>(2).unwrap().to_string(), "u^2 + u*x1 + u*x2");
        let r3: Poly = rhs_eq2(3).unwrap();
        assert_eq!(r3.eval_uniform(&BigInt::from(1)), BigInt::from(16));
        assert!(rhs_eq2::<BigInt>(9).is_err());
        assert!(rhs_eq2::<BigInt>(0).is_err());
    }

    #[test]
    fn eq1_sides_small() {
        for m in 1..=6 {
            assert_eq!(lhs_eq1::<BigInt>(m, m).unwrap(), Poly::one(m));
            assert_eq!(rhs_eq1::<BigInt>(m, m).unwrap(), Poly::one(m));
            assert_eq!(rhs_eq1::<BigInt>(m, 1).unwrap(), Poly::sum_of_x(m).pow(m as u32 - 1));
        }
        let m = 3;
        let pairs = [(1, 2), (1, 3), (2, 3)]
            .iter()
            .fold(Poly::zero(m), |acc, &(a, b)| &acc + &(&x(a, m) + &x(b, m)));
        assert_eq!(lhs_eq1::<BigInt>(3, 2).unwrap(), pairs);
        assert_eq!(pairs, Poly::sum_of_x(3).scale(&BigInt::from(2)));
        assert_eq!(rhs_eq1::<BigInt>(3, 2).unwrap(), pairs);

        let l52: Poly = lhs_eq1(5, 2).unwrap();
        assert_eq!(l52.eval_uniform(&BigInt::from(1)), BigInt::from(500));
        assert!(lhs_eq1::<BigInt>(4, 5).is_err());
        assert!(rhs_eq1::<BigInt>(4, 0).is_err());
    }

    #[test]
    fn eq2_three_way_small() {
        for m in 1..=5 {
            let r: crate::PolyReport = verify_eq2(m).unwrap();
            assert!(r.equal && r.holds(), "m = {m}");
            assert_eq!(r.checks.len(), 2);
        }
        let r: crate::PolyReport = verify_eq2_with(7, Mode::Auto, &Limits::default()).unwrap();
        assert!(r.checks.is_empty());
        assert!(verify_eq2_with::<BigInt>(7, Mode::ThreeWay, &Limits::default()).is_err());
    }

    #[test]
    fn eq1_sweep_small() {
        for m in 1..=5 {
            for r in verify_eq1_all::<BigInt>(m).unwrap() {
                assert!(r.holds(), "m = {m}, p = {:?}", r.p);
            }
        }
        assert_eq!(verify_eq1::<BigInt>(5, 2).unwrap().checks.len(), 2);
        assert!(matches!(verify_eq1::<BigInt>(4, 5), Err(Error::Range { .. })));
        assert_eq!(binomial::<BigInt>(4, 1), BigInt::from(4));
    }

    #[test]
    fn block_restricted_sum_is_u_coefficient() {
        for m in 1..=6 {
            for p in 1..=m {
                let part: Poly = lhs_eq2_blocks(m, p).unwrap();
                let lhs: Poly = lhs_eq1(m, p).unwrap();
                assert_eq!(part.coeff_of_u(p as u32), lhs);
                // nothing else in that slice
                assert_eq!(part.u_degree(), Some(p as u32));
                assert!(part.terms().all(|(e, _)| e.exponent(0) == p as u32));
            }
        }
    }

    #[test]
    fn coefficient_types_agree() {
        for m in 1..=6 {
            let big: Poly = lhs_eq2(m).unwrap();
            let small: Poly128 = lhs_eq2(m).unwrap();
            assert_eq!(big.to_json(), small.to_json());
        }
    }

    #[test]
    fn mutations_are_caught() {
        let m = 4;
        let lhs: Poly = lhs_eq2(m).unwrap();
        let rhs: Poly = rhs_eq2(m).unwrap();
        let targets: Vec<ExponentVector> = rhs.terms().map(|(e, _)| e.clone()).collect();
        for e in &targets {
            let r = IdentityReport::from_sides(m, None, lhs.clone(), bump(&rhs, e.clone(), 1));
            assert!(!r.equal);
            let w = r.witness.unwrap();
            assert_eq!(&w.monomial, e);
            assert_eq!(w.right, w.left.clone() + 1);
        }
        // a monomial absent from both sides
        let stray = ExponentVector::from_pairs([(1, 4)]);
        let r = IdentityReport::from_sides(m, None, bump(&lhs, stray.clone(), -2), rhs);
        assert_eq!(r.witness.unwrap().monomial, stray);
    }

    #[test]
    fn compare_reports_leading_difference() {
        let m = 2;
        let a = &x(1, m) + &x(2, m);
        let b = &x(1, m) * &x(1, m);
        let w = compare(&a, &b).unwrap();
        assert_eq!(w.monomial, ExponentVector::from_pairs([(1, 2)]));
        assert_eq!((w.left, w.right), (BigInt::from(0), BigInt::from(1)));
        assert!(compare(&a, &a).is_none());
    }

    #[test]
    fn root_split() {
        assert!(verify_block_root_split(&[1, 2]).unwrap());
        assert!(verify_block_root_split(&[1, 2, 3]).unwrap());
        assert!(verify_block_root_split(&[1, 2, 3, 4]).unwrap());
        assert!(verify_block_root_split(&[2, 3, 5, 7, 8]).unwrap());
        assert!(matches!(verify_block_root_split(&[3]), Err(Error::Range { .. })));
        assert!(verify_block_root_split(&[0, 1]).is_err());
    }

    #[test]
    fn report_json() {
        let r: crate::PolyReport = verify_eq1(2, 1).unwrap();
        assert_eq!(
            r.to_json(),
            concat!(
                r#"{"m":2,"p":1,"equal":true,"witness":null,"checks":["#,
                r#"{"name":"lhs = [u^p] full lhs","ok":true,"witness":null},"#,
                r#"{"name":"rhs = [u^p] full rhs","ok":true,"witness":null}],"#,
                r#""lhs":[{"coeff":"1","exps":{"x1":1}},{"coeff":"1","exps":{"x2":1}}],"#,
                r#""rhs":[{"coeff":"1","exps":{"x1":1}},{"coeff":"1","exps":{"x2":1}}]}"#
            )
        );
        let bad = IdentityReport::from_sides(1, None, u(1), bump(&u(1), ExponentVector::var(0), 2));
        assert!(bad.to_json().contains(r#""witness":{"monomial":{"u":1},"left":"1","right":"3"}"#));
    }
}
