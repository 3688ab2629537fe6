//! Coefficient rings.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, Mul, Neg};
use std::str::FromStr;

use num_traits::{FromPrimitive, Num};

/// An exact ordered commutative ring usable as polynomial coefficients.
///
/// Implemented for every signed integer type from `num` that supports
/// by-reference arithmetic, notably `BigInt`, `i64` and `i128`.
pub trait Coefficient:
    Num + PartialOrd + Clone + Debug + Display + FromStr + FromPrimitive + Neg<Output = Self> + Send + Sync
{
    fn add_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;

    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("coefficient type cannot hold count")
    }
}

impl<T> Coefficient for T
where
    T: Num + PartialOrd + Clone + Debug + Display + FromStr + FromPrimitive + Neg<Output = T> + Send + Sync,
    T: for<'a> AddAssign<&'a T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// `C(n, k)` by Pascal's recurrence, row by row. Zero when `k > n`.
pub fn binomial<C: Coefficient>(n: usize, k: usize) -> C {
    if k > n {
        return C::zero();
    }
    let mut row: Vec<C> = vec![C::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        next.push(C::one());
        for j in 1..i {
            let mut v = row[j - 1].clone();
            v.add_ref(&row[j]);
            next.push(v);
        }
        next.push(C::one());
        row = next;
    }
    row.swap_remove(k)
}
