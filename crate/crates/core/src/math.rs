//! Small numeric helpers shared across modules. `core` has no float
//! transcendentals, so everything goes through `libm`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Tolerance used when a real quantity is expected to be an integer.
pub(crate) const INT_TOL: f64 = 1e-9;

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn log_base(x: f64, base: f64) -> f64 {
    libm::log(x) / libm::log(base)
}

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}

#[inline]
pub(crate) fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

#[inline]
pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

/// Floor that forgives values sitting a rounding error below an integer.
pub(crate) fn floor_tol(x: f64) -> i64 {
    floor(x + INT_TOL) as i64
}

/// Ceiling that forgives values sitting a rounding error above an integer.
pub(crate) fn ceil_tol(x: f64) -> i64 {
    ceil(x - INT_TOL) as i64
}

/// `Some(k)` when `x` is within tolerance of the integer `k`.
pub(crate) fn as_integer(x: f64) -> Option<i64> {
    let k = round(x);
    if abs(x - k) <= INT_TOL * (1.0 + abs(x)) {
        Some(k as i64)
    } else {
        None
    }
}

/// Binomial coefficient with `C(a, b) = 0` whenever `b > a` or `a < 0`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

pub(crate) fn big_pow(base: u64, exp: u64) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// `base^exp` when it fits in a `u128`.
pub(crate) fn checked_pow(base: u64, exp: u64) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

/// Natural log of a big integer, accurate to double precision.
pub(crate) fn big_ln(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 52 {
        let v: u64 = x.iter_u64_digits().next().unwrap_or(0);
        return ln(v as f64);
    }
    let shift = bits - 53;
    let top: BigUint = x >> shift;
    let v: u64 = top.iter_u64_digits().next().unwrap_or(0);
    ln(v as f64) + shift as f64 * core::f64::consts::LN_2
}

/// `log_q` of a big integer.
pub fn big_log(x: &BigUint, q: u64) -> f64 {
    big_ln(x) / ln(q as f64)
}
