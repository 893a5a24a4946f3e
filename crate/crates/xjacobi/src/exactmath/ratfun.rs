//! Rational functions in one variable over the rationals.
//!
//! Every value is kept reduced: the denominator is monic and coprime to the
//! numerator, so structural equality is mathematical equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{one_minus_x_pow, xp1_pow, Poly};
use super::rational::Rational;

/// A reduced quotient `num / den` with `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Reduce `num/den`; panics on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFun::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        let l = d.lead();
        if !l.is_one() {
            let inv = l.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFun { num: n, den: d }
    }

    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn x() -> Self {
        RatFun::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial value when the denominator is trivial.
    pub fn as_poly(&self) -> Option<Poly> {
        if self.is_poly() {
            Some(self.num.scale(&self.den.lead().recip()))
        } else {
            None
        }
    }

    /// The constant value when this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0) / self.den.coeff(0))
        } else {
            None
        }
    }

    /// `deg num - deg den`; the zero function reports `i64::MIN`.
    pub fn degree(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.num.deg_i64() - self.den.deg_i64()
        }
    }

    /// Leading coefficient of the expansion at infinity.
    pub fn lead(&self) -> Rational {
        self.num.lead() / self.den.lead()
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> RatFun {
        assert!(!self.is_zero(), "reciprocal of zero rational function");
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn derivative(&self) -> RatFun {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFun::new(n, &self.den * &self.den)
    }

    /// Value at `x`, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn powi(&self, e: i64) -> RatFun {
        if e >= 0 {
            RatFun::new(self.num.pow(e as usize), self.den.pow(e as usize))
        } else {
            self.recip().powi(-e)
        }
    }

    /// Multiply by `(1-x)^i (1+x)^j` for integers `i`, `j` of either sign.
    pub fn mul_endpoint_powers(&self, i: i64, j: i64) -> RatFun {
        let (mut n, mut d) = (self.num.clone(), self.den.clone());
        if i >= 0 {
            n = &n * &one_minus_x_pow(i as usize);
        } else {
            d = &d * &one_minus_x_pow((-i) as usize);
        }
        if j >= 0 {
            n = &n * &xp1_pow(j as usize);
        } else {
            d = &d * &xp1_pow((-j) as usize);
        }
        RatFun::new(n, d)
    }

    /// Apply `f(x) -> f(-x)`.
    pub fn reflect(&self) -> RatFun {
        let m = -Rational::one();
        RatFun::new(self.num.dilate(&m), self.den.dilate(&m))
    }

    pub fn to_string_x(&self) -> String {
        if self.is_poly() {
            self.as_poly().unwrap().to_string_x()
        } else {
            format!("({})/({})", self.num.to_string_x(), self.den.to_string_x())
        }
    }
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({})", self.to_string_x())
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_x())
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFun::new(&self.num + &o.num, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let sd = self.den.divrem(&g).0;
        let od = o.den.divrem(&g).0;
        let n = &(&self.num * &od) + &(&o.num * &sd);
        RatFun::new(n, &sd * &o.den)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self + &(-o)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.divrem(&g1).0;
        let d2 = o.den.divrem(&g1).0;
        let n2 = o.num.divrem(&g2).0;
        let d1 = self.den.divrem(&g2).0;
        RatFun::new(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &RatFun) -> RatFun {
        self * &o.recip()
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, o: RatFun) -> RatFun {
                (&self).$m(&o)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, o: &RatFun) -> RatFun {
                (&self).$m(o)
            }
        }
        impl $tr<RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, o: RatFun) -> RatFun {
                self.$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{q, qf};

    #[test]
    fn reduction_and_arithmetic() {
        let f = RatFun::new(Poly::from_i64(&[-1, 0, 1]), Poly::from_i64(&[-2, 2]));
        assert_eq!(f, RatFun::from_poly(Poly::new(vec![qf(1, 2), qf(1, 2)])));
        let g = RatFun::new(Poly::one(), Poly::x());
        let s = &g + &g;
        assert_eq!(s, RatFun::new(Poly::from_i64(&[2]), Poly::x()));
        assert_eq!(&s * &RatFun::x(), RatFun::constant(q(2)));
        assert_eq!((&g - &g), RatFun::zero());
    }

    #[test]
    fn derivative_quotient_rule() {
        let g = RatFun::new(Poly::one(), Poly::x());
        assert_eq!(g.derivative(), RatFun::new(Poly::from_i64(&[-1]), Poly::from_i64(&[0, 0, 1])));
        assert_eq!(g.degree(), -1);
    }

    #[test]
    fn endpoint_powers() {
        let f = RatFun::one().mul_endpoint_powers(1, -1);
        assert_eq!(f.eval(&q(0)), Some(q(1)));
        assert_eq!(f.eval(&q(-1)), None);
        assert_eq!(f.eval(&q(3)), Some(qf(-2, 4)));
    }
}
