//! Scalar abstractions shared by the lattice and torsion code.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact integer scalar. `BigInt` is the default everywhere; fixed-width
/// types work as long as the caller knows intermediate values stay in range.
pub trait IntScalar:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Hash + Send + Sync + 'static
{
}

impl<T> IntScalar for T where
    T: Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Hash + Send + Sync + 'static
{
}

pub(crate) fn int<T: IntScalar>(v: i64) -> T {
    T::from_i64(v).expect("small constant fits every scalar")
}

pub(crate) fn from_u64<T: IntScalar>(v: u64) -> T {
    T::from_u64(v).expect("value does not fit the scalar type")
}

/// Least nonnegative residue.
pub(crate) fn modulo<T: IntScalar>(a: &T, m: &T) -> T {
    a.mod_floor(m).abs()
}

/// Extended gcd with a nonnegative gcd: returns (g, s, t) with s*a + t*b = g.
pub(crate) fn xgcd<T: IntScalar>(a: &T, b: &T) -> (T, T, T) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Strip every factor `p` from `a` (no-op for `p <= 1`).
pub(crate) fn strip_prime<T: IntScalar>(a: &T, p: u64) -> T {
    if p <= 1 || a.is_zero() {
        return a.clone();
    }
    let pp: T = from_u64(p);
    let mut a = a.clone();
    while a.is_multiple_of(&pp) {
        a = a / pp.clone();
    }
    a
}
