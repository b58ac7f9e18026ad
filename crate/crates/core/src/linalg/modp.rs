//! Arithmetic modulo the Mersenne prime `2^61 − 1`, for integer-valued
//! quantities too expensive to track exactly (large character sums).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::rational::Rational;

pub(crate) const P: u64 = (1 << 61) - 1;

pub(crate) fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

pub(crate) fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn from_bigint(x: &BigInt) -> u64 {
    let r = x.mod_floor(&BigInt::from(P));
    r.to_u64().expect("residue fits in u64")
}

/// Image of `x` in `F_P`; `None` if the denominator vanishes mod `P`.
pub(crate) fn reduce(x: &Rational) -> Option<u64> {
    let den = from_bigint(x.denom());
    if den.is_zero() {
        return None;
    }
    Some(mul(from_bigint(x.numer()), pow(den, P - 2)))
}

/// The integer in `[−bound, bound]` congruent to `r`, if any.
pub(crate) fn lift(r: u64, bound: u64) -> Option<i64> {
    if r <= bound {
        Some(r as i64)
    } else if P - r <= bound {
        Some(-((P - r) as i64))
    } else {
        None
    }
}
