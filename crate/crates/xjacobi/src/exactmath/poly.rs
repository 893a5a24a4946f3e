//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending order of degree and trimmed so that
//! the last stored coefficient is nonzero. The zero polynomial has no
//! coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{fmt_q, q, Rational};
use super::MathError;

/// Polynomial with rational coefficients, `coeffs[k]` multiplying `x^k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Build from ascending machine-integer coefficients.
    pub fn from_i64(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| q(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::from_i64(&[0, 1])
    }

    /// The linear polynomial `x - c`.
    pub fn linear_root(c: &Rational) -> Self {
        Poly::new(vec![-c.clone(), Rational::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for a nonzero constant or zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = -1`.
    pub fn deg_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divide by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.lead().recip();
        self.scale(&l)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * q(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Poly {
        let mut v = vec![Rational::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            v.push(c / q(k as i64 + 1));
        }
        Poly::new(v)
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The polynomial `p(x + c)` (Taylor shift).
    pub fn shift(&self, c: &Rational) -> Poly {
        let mut acc = Poly::zero();
        let lin = Poly::new(vec![c.clone(), Rational::one()]);
        for coef in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(coef.clone());
        }
        acc
    }

    /// The polynomial `p(s x)`.
    pub fn dilate(&self, s: &Rational) -> Poly {
        let mut f = Rational::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            v.push(c * &f);
            f *= s;
        }
        Poly::new(v)
    }

    /// Composition `p(r(x))`.
    pub fn compose(&self, r: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * r) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division `self = quo * d + rem` with `deg rem < deg d`.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let inv = d.lead().recip();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[k + j] -= t;
                }
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quo), Poly::new(rem))
    }

    /// Exact quotient; fails when the remainder is nonzero.
    pub fn divexact(&self, d: &Poly) -> Result<Poly, MathError> {
        if d.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        let (quo, rem) = self.divrem(d);
        if rem.is_zero() {
            Ok(quo)
        } else {
            Err(MathError::NotDivisible)
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Multiplicity of the root `c`.
    pub fn root_multiplicity(&self, c: &Rational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut p = self.clone();
        let lin = Poly::linear_root(c);
        let mut m = 0;
        while p.eval(c).is_zero() {
            p = p.divrem(&lin).0;
            m += 1;
        }
        m
    }

    /// Remove the factor `(x - c)^m` where `m` is the full multiplicity; returns `(rest, m)`.
    pub fn strip_root(&self, c: &Rational) -> (Poly, usize) {
        let mut p = self.clone();
        let lin = Poly::linear_root(c);
        let mut m = 0;
        while !p.is_zero() && p.eval(c).is_zero() {
            p = p.divrem(&lin).0;
            m += 1;
        }
        (p, m)
    }

    /// Square-free part `p / gcd(p, p')`, made monic.
    pub fn squarefree(&self) -> Poly {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Human-readable form in `x`, highest degree first.
    pub fn to_string_x(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            let cs = fmt_q(c);
            let term = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono
            } else if *c == -Rational::one() {
                format!("-{mono}")
            } else if cs.contains('/') {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            parts.push(term);
        }
        let mut s = parts[0].clone();
        for t in &parts[1..] {
            if let Some(rest) = t.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(t);
            }
        }
        s
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_string_x())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_x())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(match (self.coeffs.get(k), o.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(v)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$m(&o)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly {
                (&self).$m(o)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                self.$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// `(x - 1)^k` for `k >= 0`.
pub fn xm1_pow(k: usize) -> Poly {
    Poly::from_i64(&[-1, 1]).pow(k)
}

/// `(x + 1)^k` for `k >= 0`.
pub fn xp1_pow(k: usize) -> Poly {
    Poly::from_i64(&[1, 1]).pow(k)
}

/// `(1 - x)^k` for `k >= 0`.
pub fn one_minus_x_pow(k: usize) -> Poly {
    Poly::from_i64(&[1, -1]).pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::qf;

    #[test]
    fn divexact_factor() {
        let p = Poly::from_i64(&[-1, 0, 1]);
        let d = Poly::from_i64(&[-1, 1]);
        assert_eq!(p.divexact(&d).unwrap(), Poly::from_i64(&[1, 1]));
        assert!(p.divexact(&Poly::from_i64(&[2, 1])).is_err());
    }

    #[test]
    fn square_and_expand() {
        let p = Poly::from_i64(&[2, 1]);
        assert_eq!(&p * &p, Poly::from_i64(&[4, 4, 1]));
        let tau = &xp1_pow(2) + &Poly::from_i64(&[0, 2]);
        assert_eq!(tau, Poly::from_i64(&[1, 4, 1]));
    }

    #[test]
    fn gcd_and_roots() {
        let a = &Poly::from_i64(&[-1, 1]) * &Poly::from_i64(&[2, 1]);
        let b = &Poly::from_i64(&[-1, 1]) * &Poly::from_i64(&[3, 1]);
        assert_eq!(a.gcd(&b), Poly::from_i64(&[-1, 1]));
        let c = xm1_pow(3) * Poly::from_i64(&[5, 1]);
        assert_eq!(c.root_multiplicity(&q(1)), 3);
        assert_eq!(c.squarefree(), (Poly::from_i64(&[-1, 1]) * Poly::from_i64(&[5, 1])).monic());
    }

    #[test]
    fn shift_and_calculus() {
        let p = Poly::from_i64(&[1, 4, 1]);
        assert_eq!(p.derivative(), Poly::from_i64(&[4, 2]));
        assert_eq!(p.shift(&q(-1)).eval(&q(3)), p.eval(&q(2)));
        assert_eq!(p.integral().derivative(), p);
        assert_eq!(p.dilate(&qf(1, 2)).eval(&q(4)), p.eval(&q(2)));
        assert_eq!(p.to_string_x(), "x^2 + 4*x + 1");
    }
}
