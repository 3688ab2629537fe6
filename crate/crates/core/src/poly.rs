//! Sparse multivariate polynomials in `u, x1, ..., xm`.
//!
//! Variable index 0 is `u`, index `j` in `1..=m` is `xj`. Terms live in a
//! `BTreeMap` keyed by [`ExponentVector`], so the zero polynomial is the
//! empty map and structural equality is mathematical equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Serialize, Serializer};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};

/// Name of variable `index`: `u` for 0, `xj` otherwise.
pub fn variable_name(index: usize) -> String {
    if index == 0 {
        "u".to_string()
    } else {
        format!("x{index}")
    }
}

/// Inverse of [`variable_name`].
pub fn parse_variable_name(name: &str) -> Result<usize> {
    if name == "u" {
        return Ok(0);
    }
    name.strip_prefix('x')
        .and_then(|rest| rest.parse::<usize>().ok())
        .filter(|&j| j >= 1 && !name[1..].starts_with('0'))
        .ok_or_else(|| Error::Parse(format!("unknown variable name {name:?}")))
}

/// A monomial `u^e0 x1^e1 ... xm^em`, stored sparsely.
///
/// Pairs are sorted by variable index and no exponent is zero.
///
/// Ordering is graded lexicographic with `u > x1 > x2 > ...`: higher total
/// degree first, ties broken by the first variable whose exponents differ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector {
    exps: Vec<(usize, u32)>,
}

impl ExponentVector {
    pub fn one() -> Self {
        ExponentVector::default()
    }

    pub fn var(index: usize) -> Self {
        ExponentVector {
            exps: vec![(index, 1)],
        }
    }

    /// Build from `(variable, exponent)` pairs in any order. Repeated
    /// variables are summed and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
        for (var, e) in pairs {
            *acc.entry(var).or_insert(0) += e;
        }
        ExponentVector {
            exps: acc.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(usize, u32)] {
        &self.exps
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        ExponentVector { exps: out }
    }

    /// The same monomial with variable `var` removed.
    pub fn without(&self, var: usize) -> Self {
        ExponentVector {
            exps: self.exps.iter().copied().filter(|&(v, _)| v != var).collect(),
        }
    }

    fn lex_cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // a has a positive exponent where b has none
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, &(var, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            f.write_str(&variable_name(var))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with coefficients in `C` over `u, x1..xm`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<C> {
    ring_size: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(m: usize) -> Self {
        Polynomial {
            ring_size: m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        Self::constant(C::one(), m)
    }

    pub fn constant(c: C, m: usize) -> Self {
        let mut p = Self::zero(m);
        p.add_term(ExponentVector::one(), c);
        p
    }

    /// The polynomial `u` (index 0) or `xj` (index j).
    pub fn variable(index: usize, m: usize) -> Result<Self> {
        crate::check_range("variable index", index, 0, m)?;
        let mut p = Self::zero(m);
        p.terms.insert(ExponentVector::var(index), C::one());
        Ok(p)
    }

    /// `x1 + ... + xm`.
    pub fn sum_of_x(m: usize) -> Self {
        Self::sum_of_vars(1..=m, m)
    }

    /// Sum of the given variables, each with coefficient one.
    pub fn sum_of_vars<I: IntoIterator<Item = usize>>(vars: I, m: usize) -> Self {
        let mut p = Self::zero(m);
        for v in vars {
            assert!(v <= m, "variable {v} outside ring of size {m}");
            p.add_term(ExponentVector::var(v), C::one());
        }
        p
    }

    /// Single term `c * monomial`. Fails when the monomial mentions a
    /// variable beyond `m`.
    pub fn monomial(exps: ExponentVector, c: C, m: usize) -> Result<Self> {
        if let Some(v) = exps.max_var() {
            crate::check_range("variable index", v, 0, m)?;
        }
        let mut p = Self::zero(m);
        p.add_term(exps, c);
        Ok(p)
    }

    pub fn ring_size(&self) -> usize {
        self.ring_size
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &ExponentVector) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in canonical order (descending graded lex, leading term first).
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> + '_ {
        self.terms.iter().rev()
    }

    /// Accumulate `c * exps` into `self`, dropping the term if it cancels.
    ///
    /// The caller is responsible for `exps` fitting the ring.
    pub fn add_term(&mut self, exps: ExponentVector, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                slot.get_mut().add_ref(&c);
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring_size != other.ring_size {
            return Err(Error::Ring {
                left: self.ring_size,
                right: other.ring_size,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    /// In-place `self += other`.
    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.same_ring(other)?;
        self.add_assign_unchecked(other);
        Ok(())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring_size: self.ring_size,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.ring_size);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mul_ref(k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self^k` by binary exponentiation; `p^0 = 1` for every `p`.
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.ring_size);
        if k == 0 {
            return result;
        }
        let mut base = self.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.mul_unchecked(&base);
        }
        result
    }

    /// The polynomial in `x1..xm` multiplying `u^p`.
    pub fn coeff_of_u(&self, p: u32) -> Self {
        let mut out = Self::zero(self.ring_size);
        for (e, c) in &self.terms {
            if e.exponent(0) == p {
                out.terms.insert(e.without(0), c.clone());
            }
        }
        out
    }

    /// Largest power of `u` present, `None` for the zero polynomial.
    pub fn u_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.exponent(0)).max()
    }

    /// Exact evaluation. Every variable that appears in `self` needs a value.
    pub fn eval(&self, point: &BTreeMap<usize, C>) -> Result<C> {
        let mut total = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for &(var, exp) in e.pairs() {
                let x = point
                    .get(&var)
                    .ok_or_else(|| Error::Eval(variable_name(var)))?;
                for _ in 0..exp {
                    t = t.mul_ref(x);
                }
            }
            total.add_ref(&t);
        }
        Ok(total)
    }

    /// Evaluate with every variable set to `value`.
    pub fn eval_uniform(&self, value: &C) -> C {
        let point = (0..=self.ring_size).map(|v| (v, value.clone())).collect();
        self.eval(&point).expect("every variable assigned")
    }

    fn add_assign_unchecked(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.ring_size);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.mul(eb), ca.mul_ref(cb));
            }
        }
        out
    }

    /// Canonical JSON: `[{"coeff": "<decimal>", "exps": {"u": 1, "x1": 2}}, ...]`
    /// in canonical term order, with exponent keys in variable order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    /// Parse the format written by [`Polynomial::to_json`]. Terms may come
    /// in any order and repeated monomials are summed.
    pub fn from_json(s: &str, m: usize) -> Result<Self> {
        #[derive(Deserialize)]
        struct JsonTerm {
            coeff: String,
            exps: BTreeMap<String, u32>,
        }
        let raw: Vec<JsonTerm> =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::zero(m);
        for term in raw {
            let c: C = term
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", term.coeff)))?;
            let mut pairs = Vec::with_capacity(term.exps.len());
            for (name, e) in term.exps {
                let var = parse_variable_name(&name)?;
                crate::check_range("variable index", var, 0, m)?;
                pairs.push((var, e));
            }
            out.add_term(ExponentVector::from_pairs(pairs), c);
        }
        Ok(out)
    }

    /// Build from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(terms: I, m: usize) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
    {
        let mut out = Self::zero(m);
        for (e, c) in terms {
            if let Some(v) = e.max_var() {
                crate::check_range("variable index", v, 0, m)?;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

impl Serialize for ExponentVector {
    /// A map from variable name to exponent, in variable order.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.exps.len()))?;
        for &(var, e) in &self.exps {
            map.serialize_entry(&variable_name(var), &e)?;
        }
        map.end()
    }
}

impl<C: Coefficient> Serialize for Polynomial<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: String,
            exps: &'a ExponentVector,
        }

        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (exps, c) in self.terms() {
            seq.serialize_element(&Term {
                coeff: c.to_string(),
                exps,
            })?;
        }
        seq.end()
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let negative = *c < C::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{e}")?;
            } else {
                write!(f, "{abs}*{e}")?;
            }
        }
        Ok(())
    }
}

macro_rules! impl_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<C: Coefficient> std::ops::$tr for &Polynomial<C> {
            type Output = Polynomial<C>;

            /// Panics on a ring size mismatch; use the inherent method to get an error instead.
            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                Polynomial::$inner(self, rhs).expect("ring size mismatch")
            }
        }

        impl<C: Coefficient> std::ops::$tr for Polynomial<C> {
            type Output = Polynomial<C>;

            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                Polynomial::$inner(&self, &rhs).expect("ring size mismatch")
            }
        }
    };
}

impl_binop!(Add, add, add);
impl_binop!(Sub, sub, sub);
impl_binop!(Mul, mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;
    use proptest::prelude::*;

    type P = Polynomial<BigInt>;

    fn var(i: usize, m: usize) -> P {
        P::variable(i, m).unwrap()
    }

    fn ev(pairs: &[(usize, u32)]) -> ExponentVector {
        ExponentVector::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn variables() {
        assert_eq!(var(0, 3).to_string(), "u");
        assert_eq!(var(2, 3).to_string(), "x2");
        assert!(matches!(P::variable(4, 3), Err(Error::Range { .. })));
    }

    #[test]
    fn addition() {
        let u = var(0, 2);
        assert!((&u + &u.neg()).terms.is_empty());
        assert_eq!((var(1, 2) + var(2, 2)).to_string(), "x1 + x2");
        let s = &(&u + &var(1, 2)) + &u;
        assert_eq!(s.to_string(), "2*u + x1");
    }

    #[test]
    fn ring_mismatch() {
        assert_eq!(
            var(1, 2).add(&var(1, 3)),
            Err(Error::Ring { left: 2, right: 3 })
        );
        assert!(var(1, 2).mul(&var(1, 3)).is_err());
    }

    #[test]
    fn multiplication() {
        let s = var(1, 2) + var(2, 2);
        assert_eq!((&s * &s).to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert!((&s * &P::zero(2)).is_zero());
        let u = var(0, 1);
        assert_eq!((&u * &(&u + &var(1, 1))).to_string(), "u^2 + u*x1");
    }

    #[test]
    fn powers() {
        let s = P::sum_of_x(3);
        assert_eq!(s.pow(0), P::one(3));
        assert_eq!(P::zero(3).pow(0), P::one(3));
        assert!(P::zero(3).pow(2).is_zero());
        let ux = var(0, 1) + var(1, 1);
        assert_eq!(ux.pow(2).to_string(), "u^2 + 2*u*x1 + x1^2");
        // (x1 + x2)^3 by repeated multiplication
        let t = P::sum_of_x(2);
        let cube = &(&t * &t) * &t;
        assert_eq!(cube.coefficient(&ev(&[(1, 2), (2, 1)])), BigInt::from(3));
        assert_eq!(t.pow(3), cube);
    }

    #[test]
    fn u_coefficients() {
        let m = 2;
        let a = &var(0, m) * &(&var(0, m) + &P::sum_of_x(m)).pow(2);
        assert_eq!(a.coeff_of_u(1), P::sum_of_x(m).pow(2));
        assert_eq!(a.coeff_of_u(3), P::one(m));
        assert!(var(1, m).coeff_of_u(1).is_zero());
        assert_eq!(a.u_degree(), Some(3));
    }

    #[test]
    fn evaluation() {
        let s = P::sum_of_x(2).pow(2);
        let point = BTreeMap::from([(1, BigInt::from(1)), (2, BigInt::from(2))]);
        assert_eq!(s.eval(&point).unwrap(), BigInt::from(9));
        assert_eq!(P::zero(2).eval(&BTreeMap::new()).unwrap(), BigInt::from(0));
        assert_eq!(
            s.eval(&BTreeMap::from([(1, BigInt::from(1))])),
            Err(Error::Eval("x2".into()))
        );
        let m = 5;
        let t = &var(0, m) * &(&var(0, m) + &P::sum_of_x(m)).pow(4);
        assert_eq!(t.eval_uniform(&BigInt::from(1)), BigInt::from(1296));
    }

    #[test]
    fn grlex_order() {
        // degree first
        assert!(ev(&[(3, 2)]) > ev(&[(0, 1)]));
        // u > x1 > x2 within a degree
        assert!(ev(&[(0, 1)]) > ev(&[(1, 1)]));
        assert!(ev(&[(1, 1)]) > ev(&[(2, 1)]));
        assert!(ev(&[(1, 2)]) > ev(&[(1, 1), (2, 1)]));
        assert!(ev(&[(1, 1), (2, 1)]) > ev(&[(1, 1), (3, 1)]));
        assert!(ev(&[(1, 1), (3, 1)]) > ev(&[(2, 2)]));
        assert_eq!(ev(&[(2, 1), (2, 1)]), ev(&[(2, 2)]));
        assert_eq!(ev(&[(1, 0)]), ExponentVector::one());
    }

    #[test]
    fn display_signs() {
        let p = &P::constant(BigInt::from(-3), 1) + &var(1, 1).neg();
        assert_eq!(p.to_string(), "-x1 - 3");
        assert_eq!(P::zero(1).to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let p = &P::constant(BigInt::from(-2), 10) + &(&var(0, 10) * &var(10, 10));
        assert_eq!(
            p.to_json(),
            r#"[{"coeff":"1","exps":{"u":1,"x10":1}},{"coeff":"-2","exps":{}}]"#
        );
        assert_eq!(P::zero(3).to_json(), "[]");
        assert_eq!(P::from_json(&p.to_json(), 10).unwrap(), p);
        assert!(P::from_json(r#"[{"coeff":"1","exps":{"x4":1}}]"#, 3).is_err());
        assert!(P::from_json(r#"[{"coeff":"1","exps":{"y":1}}]"#, 3).is_err());
        assert!(P::from_json(r#"[{"coeff":"1.5","exps":{}}]"#, 3).is_err());
    }

    #[test]
    fn variable_names_roundtrip() {
        for i in 0..30 {
            assert_eq!(parse_variable_name(&variable_name(i)).unwrap(), i);
        }
        assert!(parse_variable_name("x0").is_err());
        assert!(parse_variable_name("x01").is_err());
    }

    const M: usize = 3;

    fn arb_poly() -> impl Strategy<Value = P> {
        let term = (
            prop::collection::vec((0..=M, 0u32..3), 0..3),
            -5i64..=5,
        );
        prop::collection::vec(term, 0..5).prop_map(|terms| {
            P::from_terms(
                terms
                    .into_iter()
                    .map(|(e, c)| (ExponentVector::from_pairs(e), BigInt::from(c))),
                M,
            )
            .unwrap()
        })
    }

    fn arb_point() -> impl Strategy<Value = BTreeMap<usize, BigInt>> {
        prop::collection::vec(-4i64..=4, M + 1)
            .prop_map(|v| v.into_iter().map(BigInt::from).enumerate().collect())
    }

    fn is_canonical(p: &P) -> bool {
        p.terms.iter().all(|(e, c)| {
            !c.is_zero()
                && e.pairs().iter().all(|&(_, x)| x != 0)
                && e.pairs().windows(2).all(|w| w[0].0 < w[1].0)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn pow_is_repeated_mul(a in arb_poly(), k in 0u32..5) {
            let folded = (0..k).fold(P::one(M), |acc, _| &acc * &a);
            prop_assert_eq!(a.pow(k), folded);
        }

        #[test]
        fn u_split_roundtrip(a in arb_poly()) {
            let mut rebuilt = P::zero(M);
            for p in 0..=a.u_degree().unwrap_or(0) {
                let up = P::monomial(ExponentVector::from_pairs([(0, p)]), BigInt::from(1), M).unwrap();
                rebuilt = &rebuilt + &(&up * &a.coeff_of_u(p));
            }
            prop_assert_eq!(rebuilt, a);
        }

        // structural equality agrees with evaluation at random points
        #[test]
        fn canonical_form(a in arb_poly(), b in arb_poly(), c in arb_poly(),
                          pts in prop::collection::vec(arb_point(), 3)) {
            let left = &(&a + &b) * &c;
            let right = &(&a * &c) + &(&c * &b);
            prop_assert!(is_canonical(&left) && is_canonical(&right));
            prop_assert_eq!(&left, &right);
            for pt in &pts {
                prop_assert_eq!(left.eval(pt).unwrap(), right.eval(pt).unwrap());
            }
            let diff = &left - &right;
            prop_assert!(diff.is_zero());
        }

        #[test]
        fn json_roundtrip(a in arb_poly()) {
            prop_assert_eq!(P::from_json(&a.to_json(), M).unwrap(), a);
        }
    }
}
