//! Exact rational scalars.
//!
//! The engine works over `BigRational` throughout. This module adds the
//! small conveniences used everywhere else: constructors from machine
//! integers, integrality tests, and the canonical `p/q` text form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// Rational from a machine integer.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`; panics when `d == 0`.
pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// True when `x` is an integer.
pub fn is_int(x: &Rational) -> bool {
    x.denom().is_one()
}

/// The integer value of `x` when it is an integer that fits in `i64`.
pub fn as_i64(x: &Rational) -> Option<i64> {
    if is_int(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// True when `x` is a negative integer (an element of Z_-).
pub fn is_neg_int(x: &Rational) -> bool {
    is_int(x) && x.is_negative()
}

/// True when `x` is a nonnegative integer.
pub fn is_nat(x: &Rational) -> bool {
    is_int(x) && !x.is_negative()
}

/// Largest integer not exceeding `x`.
pub fn floor_i64(x: &Rational) -> i64 {
    x.numer()
        .div_floor(x.denom())
        .to_i64()
        .expect("floor out of i64 range")
}

/// Smallest integer not below `x`.
pub fn ceil_i64(x: &Rational) -> i64 {
    -floor_i64(&-x)
}

/// `base^e` for a possibly negative exponent; `base` must be nonzero when `e < 0`.
pub fn qpow(base: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(base.clone(), e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

/// Canonical text form: `n` for integers, `p/q` otherwise, sign on the numerator.
pub fn fmt_q(x: &Rational) -> String {
    if is_int(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `n`, `p/q` or a finite decimal such as `-0.25`.
pub fn parse_q(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let neg = ip.trim_start().starts_with('-');
        let ip_val: BigInt = if ip.is_empty() || ip == "-" || ip == "+" {
            BigInt::zero()
        } else {
            ip.parse().ok()?
        };
        let frac: BigInt = fp.parse().ok()?;
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        let mag = Rational::new(ip_val.abs() * &scale + frac, scale);
        return Some(if neg { -mag } else { mag });
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(n))
}

/// Binomial coefficient `C(n, k)` for machine integers, zero outside `0..=n`.
pub fn binom(n: i64, k: i64) -> Rational {
    if k < 0 || n < 0 || k > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * q(n - j) / q(j + 1);
    }
    acc
}

/// Generalized binomial `C(x, k) = x(x-1)...(x-k+1)/k!` with rational top.
pub fn binom_gen(x: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * (x - q(j)) / q(j + 1);
    }
    acc
}

/// Rising factorial `(x)_n = x(x+1)...(x+n-1)`.
pub fn pochhammer(x: &Rational, n: i64) -> Rational {
    let mut acc = Rational::one();
    for j in 0..n {
        acc *= x + q(j);
    }
    acc
}

/// Factorial of a machine integer as a rational.
pub fn factorial(n: i64) -> Rational {
    let mut acc = Rational::one();
    for j in 2..=n {
        acc *= q(j);
    }
    acc
}
