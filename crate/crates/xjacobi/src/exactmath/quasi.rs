//! Quasi-rational functions `r(x) (1-x)^a (1+x)^b`.
//!
//! After normalization the rational part `r` has neither a zero nor a pole at
//! `x = 1` or `x = -1`; every endpoint factor lives in the exponents. The
//! asymptotic behaviour at both endpoints is then read off the exponents.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::{as_i64, fmt_q, is_int, q, Rational};
use super::ratfun::RatFun;
use super::MathError;

/// `r(x) (1-x)^a (1+x)^b` with rational exponents.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuasiRational {
    r: RatFun,
    a: Rational,
    b: Rational,
}

impl QuasiRational {
    /// Build and normalize.
    pub fn new(r: RatFun, a: Rational, b: Rational) -> Self {
        if r.is_zero() {
            return QuasiRational::zero();
        }
        let one = Rational::one();
        let mone = -Rational::one();
        let (n, mn1) = r.num().strip_root(&one);
        let (n, mnm) = n.strip_root(&mone);
        let (d, md1) = r.den().strip_root(&one);
        let (d, mdm) = d.strip_root(&mone);
        // (x-1)^m = (-1)^m (1-x)^m
        let flips = (mn1 + md1) % 2 == 1;
        let mut rr = RatFun::new(n, d);
        if flips {
            rr = -rr;
        }
        QuasiRational {
            r: rr,
            a: a + q(mn1 as i64 - md1 as i64),
            b: b + q(mnm as i64 - mdm as i64),
        }
    }

    pub fn zero() -> Self {
        QuasiRational {
            r: RatFun::zero(),
            a: Rational::zero(),
            b: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        QuasiRational::from_ratfun(RatFun::one())
    }

    pub fn from_ratfun(r: RatFun) -> Self {
        QuasiRational::new(r, Rational::zero(), Rational::zero())
    }

    pub fn from_poly(p: Poly) -> Self {
        QuasiRational::from_ratfun(RatFun::from_poly(p))
    }

    /// The pure endpoint factor `(1-x)^a (1+x)^b`.
    pub fn endpoint(a: Rational, b: Rational) -> Self {
        QuasiRational::new(RatFun::one(), a, b)
    }

    pub fn r(&self) -> &RatFun {
        &self.r
    }

    /// Exponent of `(1-x)`.
    pub fn a_exp(&self) -> &Rational {
        &self.a
    }

    /// Exponent of `(1+x)`.
    pub fn b_exp(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    /// Degree at infinity: `deg r + a + b`.
    pub fn degree(&self) -> Rational {
        q(self.r.degree()) + &self.a + &self.b
    }

    /// Leading coefficient at infinity, with `(1-x)^a ~ (-1)^a x^a` tracked
    /// only for integer `a`; otherwise the coefficient of `r`.
    pub fn lead(&self) -> Rational {
        let mut l = self.r.lead();
        if let Some(ai) = as_i64(&self.a) {
            if ai.rem_euclid(2) == 1 {
                l = -l;
            }
        }
        l
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return QuasiRational::zero();
        }
        QuasiRational {
            r: self.r.scale(c),
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }

    pub fn mul(&self, o: &QuasiRational) -> Self {
        if self.is_zero() || o.is_zero() {
            return QuasiRational::zero();
        }
        QuasiRational::new(&self.r * &o.r, &self.a + &o.a, &self.b + &o.b)
    }

    pub fn mul_ratfun(&self, f: &RatFun) -> Self {
        QuasiRational::new(&self.r * f, self.a.clone(), self.b.clone())
    }

    pub fn recip(&self) -> Self {
        QuasiRational {
            r: self.r.recip(),
            a: -&self.a,
            b: -&self.b,
        }
    }

    pub fn div(&self, o: &QuasiRational) -> Self {
        self.mul(&o.recip())
    }

    pub fn powi(&self, e: i64) -> Self {
        if self.is_zero() {
            return QuasiRational::zero();
        }
        QuasiRational {
            r: self.r.powi(e),
            a: &self.a * q(e),
            b: &self.b * q(e),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// The rational function `r (1-x)^(a-a0) (1+x)^(b-b0)` when both
    /// exponent differences are integers.
    pub fn relative_to(&self, a0: &Rational, b0: &Rational) -> Option<RatFun> {
        if self.is_zero() {
            return Some(RatFun::zero());
        }
        let da = as_i64(&(&self.a - a0))?;
        let db = as_i64(&(&self.b - b0))?;
        Some(self.r.mul_endpoint_powers(da, db))
    }

    /// The value as a rational function when both exponents are integers.
    pub fn to_ratfun(&self) -> Option<RatFun> {
        self.relative_to(&Rational::zero(), &Rational::zero())
    }

    /// Sum; the exponents must differ by integers.
    pub fn add(&self, o: &QuasiRational) -> Result<Self, MathError> {
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        let da = &self.a - &o.a;
        let db = &self.b - &o.b;
        if !is_int(&da) || !is_int(&db) {
            return Err(MathError::IncompatibleExponents);
        }
        let a0 = if self.a < o.a { self.a.clone() } else { o.a.clone() };
        let b0 = if self.b < o.b { self.b.clone() } else { o.b.clone() };
        let s = &self.relative_to(&a0, &b0).unwrap() + &o.relative_to(&a0, &b0).unwrap();
        Ok(QuasiRational::new(s, a0, b0))
    }

    pub fn sub(&self, o: &QuasiRational) -> Result<Self, MathError> {
        self.add(&o.neg())
    }

    /// Exact derivative.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return QuasiRational::zero();
        }
        // d/dx [r (1-x)^a (1+x)^b]
        //   = (1-x)^(a-1) (1+x)^(b-1) [ r' (1-x^2) + r (-a(1+x) + b(1-x)) ]
        let one_m_x2 = RatFun::from_poly(Poly::from_i64(&[1, 0, -1]));
        let lin = RatFun::from_poly(Poly::new(vec![
            &self.b - &self.a,
            -(&self.a + &self.b),
        ]));
        let inner = &(&self.r.derivative() * &one_m_x2) + &(&self.r * &lin);
        QuasiRational::new(inner, &self.a - q(1), &self.b - q(1))
    }

    /// Value at a rational point when both exponents are integers and the
    /// point is not a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        self.to_ratfun()?.eval(x)
    }

    /// Reflection `x -> -x`, which swaps the two endpoint exponents.
    pub fn reflect(&self) -> Self {
        QuasiRational::new(self.r.reflect(), self.b.clone(), self.a.clone())
    }

    pub fn to_string_x(&self) -> String {
        let mut s = format!("({})", self.r.to_string_x());
        if !self.a.is_zero() {
            s.push_str(&format!("*(1-x)^({})", fmt_q(&self.a)));
        }
        if !self.b.is_zero() {
            s.push_str(&format!("*(1+x)^({})", fmt_q(&self.b)));
        }
        s
    }
}

impl fmt::Debug for QuasiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QR{}", self.to_string_x())
    }
}

impl fmt::Display for QuasiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_x())
    }
}

impl From<RatFun> for QuasiRational {
    fn from(r: RatFun) -> Self {
        QuasiRational::from_ratfun(r)
    }
}

impl From<Poly> for QuasiRational {
    fn from(p: Poly) -> Self {
        QuasiRational::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::qf;

    #[test]
    fn normalization_migrates_endpoint_factors() {
        let p = Poly::from_i64(&[-1, 1]) * Poly::from_i64(&[1, 1]).pow(2) * Poly::from_i64(&[3, 1]);
        let f = QuasiRational::from_poly(p);
        assert_eq!(f.a_exp(), &q(1));
        assert_eq!(f.b_exp(), &q(2));
        assert_eq!(f.r(), &RatFun::from_poly(Poly::from_i64(&[-3, -1])));
        assert_eq!(f.degree(), q(4));
    }

    #[test]
    fn derivative_of_sqrt() {
        let f = QuasiRational::endpoint(qf(1, 2), q(0));
        let d = f.derivative();
        assert_eq!(d, QuasiRational::endpoint(qf(-1, 2), q(0)).scale(&qf(-1, 2)));
    }

    #[test]
    fn derivative_of_power_of_one_plus_x() {
        let b = qf(1, 5);
        let f = QuasiRational::endpoint(q(0), &b + q(1)).scale(&(&b + q(1)).recip());
        assert_eq!(f.derivative(), QuasiRational::endpoint(q(0), b));
    }

    #[test]
    fn add_with_integer_offsets() {
        let f = QuasiRational::endpoint(qf(1, 2), q(0));
        let g = QuasiRational::endpoint(qf(3, 2), q(0));
        let s = f.add(&g).unwrap();
        assert_eq!(s.a_exp(), &qf(1, 2));
        assert_eq!(s.r(), &RatFun::from_poly(Poly::from_i64(&[2, -1])));
        assert!(f.add(&QuasiRational::endpoint(qf(1, 3), q(0))).is_err());
    }
}
