//! Exceptional Jacobi operators in the rational gauge.
//!
//! `T_rg(tau; alpha, beta) + eps = p D^2 + q D + r + eps` with
//! `p = x^2 - 1`, the classical first-order coefficient
//! `q = (alpha+beta+2) x + (alpha-beta)`, and the potential
//! `r = 2 (x^2-1) u' + 2 x u` where `u = tau'/tau`.

use std::fmt;

use num_traits::Zero;

use crate::classical::lambda;
use crate::exactmath::rational::{fmt_q, q, Rational};
use crate::exactmath::{Poly, QuasiRational, RatFun};

/// An exceptional operator `T_rg(tau; alpha, beta) + eps`.
#[derive(Clone, PartialEq, Eq)]
pub struct OperatorRG {
    pub tau: Poly,
    pub alpha: Rational,
    pub beta: Rational,
    pub eps: Rational,
}

impl OperatorRG {
    pub fn new(tau: Poly, alpha: Rational, beta: Rational, eps: Rational) -> Self {
        assert!(!tau.is_zero(), "tau must be a nonzero polynomial");
        OperatorRG { tau, alpha, beta, eps }
    }

    /// The classical operator `T(a,b)`.
    pub fn classical(a: Rational, b: Rational) -> Self {
        OperatorRG::new(Poly::one(), a, b, Rational::zero())
    }

    /// `p = x^2 - 1`.
    pub fn p(&self) -> RatFun {
        RatFun::from_poly(Poly::from_i64(&[-1, 0, 1]))
    }

    /// `q = (alpha+beta+2) x + (alpha-beta)`.
    pub fn q(&self) -> RatFun {
        RatFun::from_poly(Poly::new(vec![
            &self.alpha - &self.beta,
            &self.alpha + &self.beta + q(2),
        ]))
    }

    /// `u = tau'/tau`.
    pub fn u(&self) -> RatFun {
        RatFun::new(self.tau.derivative(), self.tau.clone())
    }

    /// `r = 2 (x^2-1) u' + 2 x u`.
    pub fn r(&self) -> RatFun {
        let u = self.u();
        let two = RatFun::constant(q(2));
        &(&(&two * &self.p()) * &u.derivative()) + &(&(&two * &RatFun::x()) * &u)
    }

    /// Eigenvalue of the type-`iota` index-`k` eigenfunction, including `eps`.
    pub fn eigenvalue(&self, iota: u8, k: i64) -> Rational {
        lambda(iota, k, &self.alpha, &self.beta) + &self.eps
    }

    /// Apply the operator to a rational function.
    pub fn apply_ratfun(&self, f: &RatFun) -> RatFun {
        let f1 = f.derivative();
        let f2 = f1.derivative();
        let pot = &self.r() + &RatFun::constant(self.eps.clone());
        &(&(&self.p() * &f2) + &(&self.q() * &f1)) + &(&pot * f)
    }

    /// `tau^2 (T + eps)(P / tau)` for a polynomial `P`, which equals
    /// `tau (p P'' + q P' + eps P) + (p tau'' - q tau' + 2 x tau') P - 2 p tau' P'`.
    pub fn apply_over_tau(&self, pp: &Poly) -> Poly {
        let p = Poly::from_i64(&[-1, 0, 1]);
        let qq = Poly::new(vec![&self.alpha - &self.beta, &self.alpha + &self.beta + q(2)]);
        let x2 = Poly::from_i64(&[0, 2]);
        let (d1, d2) = (pp.derivative(), pp.derivative().derivative());
        let t1 = self.tau.derivative();
        let t2 = t1.derivative();
        let inner = &(&(&p * &d2) + &(&qq * &d1)) + &pp.scale(&self.eps);
        let coef = &(&(&p * &t2) - &(&qq * &t1)) + &(&x2 * &t1);
        &(&(&self.tau * &inner) + &(&coef * pp)) - &(&(&p * &t1) * &d1).scale(&q(2))
    }

    /// Whether `(T + eps) f = lambda f`. Functions of the form `P / tau` are
    /// checked through a polynomial identity; others through `apply_ratfun`.
    pub fn is_eigenfunction(&self, f: &RatFun, lambda: &Rational) -> bool {
        let g = f * &RatFun::from_poly(self.tau.clone());
        match g.as_poly() {
            Some(pp) => self.apply_over_tau(&pp) == (&self.tau * &pp).scale(lambda),
            None => self.apply_ratfun(f) == f.scale(lambda),
        }
    }

    /// Apply the operator to a quasi-rational function.
    pub fn apply(&self, f: &QuasiRational) -> QuasiRational {
        if f.is_zero() {
            return QuasiRational::zero();
        }
        let f1 = f.derivative();
        let f2 = f1.derivative();
        let pot = &self.r() + &RatFun::constant(self.eps.clone());
        let t2 = f2.mul_ratfun(&self.p());
        let t1 = f1.mul_ratfun(&self.q());
        let t0 = f.mul_ratfun(&pot);
        t2.add(&t1)
            .and_then(|s| s.add(&t0))
            .expect("derivatives share exponents up to integers")
    }

    /// Riccati form `p (w' + w^2) + q w + r + eps`, equal to `T phi / phi` for `w = phi'/phi`.
    pub fn ricatti(&self, w: &RatFun) -> RatFun {
        let inner = &w.derivative() + &(w * w);
        &(&(&self.p() * &inner) + &(&self.q() * w)) + &(&self.r() + &RatFun::constant(self.eps.clone()))
    }

    /// Conjugation by the gauge factor `mu_iota`: `T(mu f) / mu` as another
    /// rational-gauge operator with the same `tau`.
    pub fn gauge_conjugate(&self, iota: u8) -> OperatorRG {
        let (a, b, e) = (&self.alpha, &self.beta, &self.eps);
        match iota {
            1 => self.clone(),
            2 => OperatorRG::new(self.tau.clone(), -a.clone(), -b.clone(), e - a - b),
            3 => OperatorRG::new(self.tau.clone(), -a.clone(), b.clone(), e - a * (b + q(1))),
            4 => OperatorRG::new(self.tau.clone(), a.clone(), -b.clone(), e - b * (a + q(1))),
            _ => panic!("gauge type must be 1..=4"),
        }
    }

    /// The same operator with `tau` scaled to be monic.
    pub fn normalized(&self) -> OperatorRG {
        OperatorRG::new(self.tau.monic(), self.alpha.clone(), self.beta.clone(), self.eps.clone())
    }

    /// Equality up to the scale of `tau` (the operator itself is unchanged by
    /// scaling `tau`), including the spectral shift.
    pub fn gauge_equal(&self, o: &OperatorRG) -> bool {
        self.alpha == o.alpha && self.beta == o.beta && self.eps == o.eps && self.tau.monic() == o.tau.monic()
    }

    /// Equality up to the scale of `tau` and an additive spectral shift.
    pub fn equal_modulo_shift(&self, o: &OperatorRG) -> bool {
        self.alpha == o.alpha && self.beta == o.beta && self.tau.monic() == o.tau.monic()
    }

    /// The weight `W = (1-x)^alpha (1+x)^beta`.
    pub fn weight(&self) -> QuasiRational {
        QuasiRational::endpoint(self.alpha.clone(), self.beta.clone())
    }

    pub fn describe(&self) -> String {
        format!(
            "T_rg(tau = {}; alpha = {}, beta = {}) + {}",
            self.tau.to_string_x(),
            fmt_q(&self.alpha),
            fmt_q(&self.beta),
            fmt_q(&self.eps)
        )
    }
}

impl fmt::Debug for OperatorRG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::monic_jacobi;
    use crate::exactmath::rational::qf;

    #[test]
    fn classical_eigenvalue() {
        let (a, b) = (qf(1, 3), qf(2, 5));
        let op = OperatorRG::classical(a.clone(), b.clone());
        let p1 = QuasiRational::from_poly(monic_jacobi(1, &a, &b).unwrap());
        assert_eq!(op.apply(&p1), p1.scale(&(&a + &b + q(2))));
    }

    #[test]
    fn chebyshev_type_operator() {
        let tau = Poly::new(vec![qf(-1, 2), q(1)]);
        let op = OperatorRG::new(tau.clone(), qf(-1, 2), qf(3, 2), q(0));
        let expected_r = RatFun::new(Poly::from_i64(&[2, -1]), tau.pow(2));
        assert_eq!(op.r(), expected_r);
        let pi0 = RatFun::new(Poly::new(vec![qf(-3, 2), q(1)]), tau);
        assert!(op.apply_ratfun(&pi0).is_zero());
    }

    #[test]
    fn gauge_conjugation_is_an_involution() {
        let op = OperatorRG::new(Poly::from_i64(&[1, 4, 1]), qf(1, 3), qf(3, 7), qf(1, 2));
        for iota in 2..=4 {
            assert_eq!(op.gauge_conjugate(iota).gauge_conjugate(iota), op);
        }
    }

    #[test]
    fn conjugation_matches_direct_application() {
        let op = OperatorRG::new(Poly::from_i64(&[3, 1]), qf(1, 3), qf(2, 7), q(0));
        let f = QuasiRational::from_ratfun(RatFun::new(Poly::from_i64(&[1, 2, 1]), Poly::from_i64(&[3, 1])));
        for iota in 2..=4 {
            let mu = crate::classical::mu(iota, &op.alpha, &op.beta);
            let lhs = op.apply(&mu.mul(&f)).div(&mu);
            let rhs = op.gauge_conjugate(iota).apply(&f);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn ricatti_matches_application() {
        let (a, b) = (qf(1, 2), qf(1, 2));
        let op = OperatorRG::classical(a.clone(), b.clone());
        let phi = crate::classical::qr_eigenfunction(3, 1, &a, &b).unwrap();
        let w = phi.derivative().div(&phi).to_ratfun().unwrap();
        assert_eq!(op.ricatti(&w), RatFun::constant(lambda(3, 1, &a, &b)));
    }

    #[test]
    fn polynomial_identity_matches_rational_application() {
        let tau = Poly::from_i64(&[1, 4, 1]);
        let op = OperatorRG::new(tau.clone(), qf(1, 3), qf(2, 5), qf(3, 4));
        let pp = Poly::from_i64(&[2, -1, 0, 5]);
        let lhs = op.apply_ratfun(&RatFun::new(pp.clone(), tau.clone()));
        let rhs = RatFun::new(op.apply_over_tau(&pp), tau.pow(2));
        assert_eq!(lhs, rhs);
    }
}
