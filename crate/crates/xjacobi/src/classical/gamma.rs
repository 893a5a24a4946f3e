//! Exact evaluation of ratios of Gamma-function products.
//!
//! Norm constants are products of Gamma values whose arguments differ from
//! one another by integers, or are reflections of one another. Such ratios
//! are rational. Each factor may be evaluated at a point `z0 + e` with a
//! formal infinitesimal `e`, which lets a product with cancelling poles be
//! evaluated as a limit: every factor contributes a leading term
//! `coef * e^order`, and the product is finite exactly when the orders sum to
//! zero.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::exactmath::rational::{as_i64, factorial, floor_i64, is_int, q, Rational};

/// Failure to evaluate a Gamma ratio as a rational number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GammaError {
    #[error("the Gamma ratio is not a rational number")]
    Irrational,
    #[error("the Gamma ratio is infinite")]
    Infinite,
}

/// A leading term `coef * e^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leading {
    pub coef: Rational,
    pub order: i64,
}

impl Leading {
    pub fn one() -> Self {
        Leading {
            coef: Rational::one(),
            order: 0,
        }
    }

    /// Leading term of the linear factor `c0 + cz e`.
    pub fn linear(c0: &Rational, cz: i64) -> Self {
        if !c0.is_zero() {
            Leading {
                coef: c0.clone(),
                order: 0,
            }
        } else if cz != 0 {
            Leading {
                coef: q(cz),
                order: 1,
            }
        } else {
            Leading {
                coef: Rational::zero(),
                order: 0,
            }
        }
    }

    pub fn mul(&self, o: &Leading) -> Leading {
        Leading {
            coef: &self.coef * &o.coef,
            order: self.order + o.order,
        }
    }

    pub fn recip(&self) -> Leading {
        Leading {
            coef: self.coef.recip(),
            order: -self.order,
        }
    }

    /// The limit value as `e -> 0`: zero for positive order, an error for
    /// negative order.
    pub fn value(&self) -> Result<Rational, GammaError> {
        if self.coef.is_zero() || self.order > 0 {
            Ok(Rational::zero())
        } else if self.order < 0 {
            Err(GammaError::Infinite)
        } else {
            Ok(self.coef.clone())
        }
    }
}

/// A product `prod Gamma(c0_i + cz_i e)^(exp_i)` times a rational leading term.
#[derive(Clone, Debug, Default)]
pub struct GammaProduct {
    factors: Vec<(Rational, i64, i64)>,
    pow2: Rational,
    scalar: Option<Leading>,
}

impl GammaProduct {
    pub fn new() -> Self {
        GammaProduct::default()
    }

    /// Multiply by `Gamma(c0 + cz e)^exp`.
    pub fn gamma(mut self, c0: Rational, cz: i64, exp: i64) -> Self {
        self.factors.push((c0, cz, exp));
        self
    }

    /// Multiply by `2^e`; the accumulated exponent must end up an integer.
    pub fn pow2(mut self, e: Rational) -> Self {
        self.pow2 += e;
        self
    }

    /// Multiply by a leading term.
    pub fn times(mut self, l: &Leading) -> Self {
        self.scalar = Some(match self.scalar.take() {
            Some(s) => s.mul(l),
            None => l.clone(),
        });
        self
    }

    /// Leading term of the whole product.
    pub fn leading(&self) -> Result<Leading, GammaError> {
        let mut acc = self.scalar.clone().unwrap_or_else(Leading::one);
        let p2 = as_i64(&self.pow2).ok_or(GammaError::Irrational)?;
        acc.coef *= crate::exactmath::rational::qpow(&q(2), p2);
        // Non-integer arguments: Gamma(f + n) = Gamma(f) (f)_n with f in (0,1);
        // Gamma(f) for f > 1/2 is reflected to pi/sin(pi g) / Gamma(g), g = 1-f.
        let mut gamma_exp: BTreeMap<Rational, i64> = BTreeMap::new();
        let mut refl_exp: BTreeMap<Rational, i64> = BTreeMap::new();
        let half = Rational::new(1.into(), 2.into());
        for (c0, cz, e) in &self.factors {
            if is_int(c0) {
                let m = as_i64(c0).expect("small Gamma argument");
                let l = if m >= 1 {
                    Leading {
                        coef: factorial(m - 1),
                        order: 0,
                    }
                } else {
                    if *cz == 0 {
                        if *e > 0 {
                            return Err(GammaError::Infinite);
                        }
                        return Ok(Leading {
                            coef: Rational::zero(),
                            order: 0,
                        });
                    }
                    // Gamma(-n + d) ~ (-1)^n / (n! d), d = cz e
                    let n = -m;
                    let sign = if n % 2 == 0 { q(1) } else { q(-1) };
                    Leading {
                        coef: sign / (factorial(n) * q(*cz)),
                        order: -1,
                    }
                };
                for _ in 0..e.abs() {
                    acc = if *e > 0 { acc.mul(&l) } else { acc.mul(&l.recip()) };
                }
                continue;
            }
            let n = floor_i64(c0);
            let f = c0 - q(n);
            // Gamma(f + n) = Gamma(f) * ratio
            let ratio = if n >= 0 {
                let mut r = Rational::one();
                for j in 0..n {
                    r *= &f + q(j);
                }
                r
            } else {
                let mut r = Rational::one();
                for j in n..0 {
                    r *= &f + q(j);
                }
                r.recip()
            };
            let ratio_e = crate::exactmath::rational::qpow(&ratio, *e);
            acc.coef *= ratio_e;
            if f > half {
                let g = Rational::one() - &f;
                *refl_exp.entry(g.clone()).or_insert(0) += e;
                *gamma_exp.entry(g).or_insert(0) -= e;
            } else {
                *gamma_exp.entry(f).or_insert(0) += e;
            }
        }
        // Gamma(1/2)^2 = pi/sin(pi/2) is the reflection constant of 1/2.
        if let Some(h) = gamma_exp.get(&half).copied() {
            if h % 2 != 0 {
                return Err(GammaError::Irrational);
            }
            gamma_exp.remove(&half);
            *refl_exp.entry(half.clone()).or_insert(0) += h / 2;
        }
        if gamma_exp.values().any(|&v| v != 0) || refl_exp.values().any(|&v| v != 0) {
            return Err(GammaError::Irrational);
        }
        Ok(acc)
    }

    /// The limit value of the product.
    pub fn value(&self) -> Result<Rational, GammaError> {
        self.leading()?.value()
    }
}

/// Multiply a `GammaProduct` by the factors of `nu(z; a, b)` with `z = z0 + e`.
pub fn nu_factors(gp: GammaProduct, z0: &Rational, a: &Rational, b: &Rational) -> GammaProduct {
    let s = a + b;
    gp.pow2(q(1) + &s + q(2) * z0)
        .gamma(z0 + q(1), 1, 1)
        .gamma(&s + z0 + q(1), 1, 1)
        .gamma(a + z0 + q(1), 1, 1)
        .gamma(b + z0 + q(1), 1, 1)
        .gamma(&s + q(2) * z0 + q(1), 2, -1)
        .gamma(&s + q(2) * z0 + q(2), 2, -1)
}

/// `extra * nu(z; a, b) / nu(alpha, beta)` with `z` approached as a limit.
pub fn nu_over_base(
    z0: &Rational,
    a: &Rational,
    b: &Rational,
    alpha: &Rational,
    beta: &Rational,
    extra: &Leading,
) -> Result<Rational, GammaError> {
    nu_factors(GammaProduct::new(), z0, a, b)
        .pow2(-(q(1) + alpha + beta))
        .gamma(alpha + q(1), 0, -1)
        .gamma(beta + q(1), 0, -1)
        .gamma(alpha + beta + q(2), 0, 1)
        .times(extra)
        .value()
}

/// `extra * nu(z; a, b) / nu(alpha, -1-alpha)` with `z` approached as a limit.
pub fn nu_over_reflected_base(
    z0: &Rational,
    a: &Rational,
    b: &Rational,
    alpha: &Rational,
    extra: &Leading,
) -> Result<Rational, GammaError> {
    nu_factors(GammaProduct::new(), z0, a, b)
        .gamma(alpha + q(1), 0, -1)
        .gamma(-alpha.clone(), 0, -1)
        .times(extra)
        .value()
}
