//! Exact antiderivatives of rational and quasi-rational functions.

use num_traits::{One, Zero};

use super::linalg::solve_linear;
use super::poly::Poly;
use super::quasi::QuasiRational;
use super::rational::{as_i64, is_int, q, Rational};
use super::ratfun::RatFun;
use super::MathError;

/// Some rational antiderivative of `f`, or an error when `f` has a nonzero
/// residue at a finite pole.
///
/// The proper part `R/D` is integrated with the ansatz `M/E`, where
/// `E = gcd(D, D')` is the denominator any rational antiderivative must have.
pub fn rational_primitive(f: &RatFun) -> Result<RatFun, MathError> {
    let (pp, rem) = f.num().divrem(f.den());
    let poly_part = RatFun::from_poly(pp.integral());
    if rem.is_zero() {
        return Ok(poly_part);
    }
    let d = f.den();
    let e = d.gcd(&d.derivative());
    let m = e.degree().unwrap_or(0);
    if m == 0 {
        return Err(MathError::LogarithmicObstruction);
    }
    let rhs = &rem * &(&e * &e);
    let de = e.derivative();
    let mut cols: Vec<Poly> = Vec::with_capacity(m);
    for k in 0..m {
        let xk = Poly::monomial(Rational::one(), k);
        let t = &(&xk.derivative() * &e) - &(&xk * &de);
        cols.push(&t * d);
    }
    let nrows = cols
        .iter()
        .map(|c| c.coeffs().len())
        .chain(std::iter::once(rhs.coeffs().len()))
        .max()
        .unwrap_or(0);
    let a: Vec<Vec<Rational>> = (0..nrows)
        .map(|r| cols.iter().map(|c| c.coeff(r)).collect())
        .collect();
    let b: Vec<Rational> = (0..nrows).map(|r| rhs.coeff(r)).collect();
    let sol = solve_linear(&a, &b).ok_or(MathError::LogarithmicObstruction)?;
    let mpoly = Poly::new(sol);
    Ok(&poly_part + &RatFun::new(mpoly, e))
}

/// The rational antiderivative of `f` vanishing at `x = -1`.
pub fn antiderivative_rational(f: &RatFun) -> Result<RatFun, MathError> {
    let g = rational_primitive(f)?;
    let g0 = g.eval(&-Rational::one()).ok_or(MathError::PoleAtMinusOne)?;
    Ok(&g - &RatFun::constant(g0))
}

/// Termwise antiderivative of `g(x) (1+x)^b` where `g` is a polynomial
/// (after absorbing an integer power of `1-x`) and `b` is not an integer.
///
/// Writing `g(x) = sum h_k (1+x)^k`, the antiderivative is
/// `sum h_k (1+x)^(k+b+1) / (k+b+1)`, which vanishes at `x = -1` when
/// `b + 1 > 0`.
pub fn antiderivative_termwise(f: &QuasiRational) -> Result<QuasiRational, MathError> {
    if f.is_zero() {
        return Ok(QuasiRational::zero());
    }
    let b = f.b_exp().clone();
    if is_int(&b) {
        return Err(MathError::IntegerExponent);
    }
    let g = f
        .relative_to(&Rational::zero(), &b)
        .and_then(|r| r.as_poly())
        .ok_or(MathError::NotPolynomial)?;
    let h = g.shift(&-Rational::one());
    let terms: Vec<Rational> = h
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c / (q(k as i64) + &b + q(1)))
        .collect();
    let hh = Poly::new(terms).shift(&Rational::one());
    Ok(QuasiRational::new(RatFun::from_poly(hh), Rational::zero(), b + q(1)))
}

/// Solve `(1-x^2) r' + r [(beta-alpha) - (alpha+beta+2) x] = f - c h` for a
/// rational `r` and, when `h` is given, a constant `c`.
///
/// This is the condition for `r (1-x)^(alpha+1) (1+x)^(beta+1)` to be an
/// antiderivative of `(f - c h)(1-x)^alpha (1+x)^beta`. The ansatz is
/// `r = M/D` with `D` the common denominator of the right side and
/// `deg M <= deg N + 2`, retried once with `deg M <= deg N + deg D + 2`.
pub fn solve_primitive_equation(
    f: &RatFun,
    h: Option<&RatFun>,
    alpha: &Rational,
    beta: &Rational,
) -> Option<(RatFun, Option<Rational>)> {
    let dd = match h {
        Some(h) => {
            let g = f.den().gcd(h.den());
            (f.den() * h.den()).divrem(&g).0.monic()
        }
        None => f.den().clone(),
    };
    let fnum = f.num() * &dd.divrem(f.den()).0;
    let hnum = h.map(|h| h.num() * &dd.divrem(h.den()).0);
    let nd = fnum
        .deg_i64()
        .max(hnum.as_ref().map_or(-1, |p| p.deg_i64()))
        .max(0) as usize;
    let ddeg = dd.degree().unwrap_or(0);
    let one_m_x2 = Poly::from_i64(&[1, 0, -1]);
    let lin = Poly::new(vec![beta - alpha, -(alpha + beta + q(2))]);
    let dprime = dd.derivative();
    for bound in [nd + 2, nd + ddeg + 2] {
        // (1-x^2)(M' D - M D') + M D L = (fnum - c hnum) D
        let mut cols: Vec<Poly> = Vec::with_capacity(bound + 2);
        for k in 0..=bound {
            let xk = Poly::monomial(Rational::one(), k);
            let t1 = &one_m_x2 * &(&(&xk.derivative() * &dd) - &(&xk * &dprime));
            let t2 = &(&xk * &dd) * &lin;
            cols.push(&t1 + &t2);
        }
        if let Some(hn) = &hnum {
            cols.push(hn * &dd);
        }
        let rhs = &fnum * &dd;
        let nrows = cols
            .iter()
            .map(|c| c.coeffs().len())
            .chain(std::iter::once(rhs.coeffs().len()))
            .max()
            .unwrap_or(0);
        let a: Vec<Vec<Rational>> = (0..nrows)
            .map(|r| cols.iter().map(|c| c.coeff(r)).collect())
            .collect();
        let b: Vec<Rational> = (0..nrows).map(|r| rhs.coeff(r)).collect();
        if let Some(sol) = solve_linear(&a, &b) {
            let (mcoef, c) = if hnum.is_some() {
                let c = sol[bound + 1].clone();
                (sol[..=bound].to_vec(), Some(c))
            } else {
                (sol, None)
            };
            return Some((RatFun::new(Poly::new(mcoef), dd.clone()), c));
        }
    }
    None
}

/// A quasi-rational antiderivative of `g` in the frame of its own exponents.
///
/// When both exponents are integers the rational route is used and the
/// result vanishes at `x = -1` when possible. Otherwise the unique solution
/// of the first-order equation is returned.
pub fn quasi_antiderivative(g: &QuasiRational) -> Result<QuasiRational, MathError> {
    if g.is_zero() {
        return Ok(QuasiRational::zero());
    }
    let (al, be) = (g.a_exp().clone(), g.b_exp().clone());
    if as_i64(&al).is_some() && as_i64(&be).is_some() {
        let f = g.to_ratfun().expect("integer exponents");
        let prim = match antiderivative_rational(&f) {
            Ok(p) => p,
            Err(MathError::PoleAtMinusOne) => rational_primitive(&f)?,
            Err(e) => return Err(e),
        };
        return Ok(QuasiRational::from_ratfun(prim));
    }
    let (r, _) = solve_primitive_equation(g.r(), None, &al, &be)
        .ok_or(MathError::NoQuasiRationalAntiderivative)?;
    Ok(QuasiRational::new(r, al + q(1), be + q(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::qf;

    #[test]
    fn polynomial_antiderivatives() {
        let f = RatFun::from_poly(Poly::from_i64(&[0, 0, 3]));
        assert_eq!(antiderivative_rational(&f).unwrap(), RatFun::from_poly(Poly::from_i64(&[1, 0, 0, 1])));
        let one = RatFun::one();
        assert_eq!(antiderivative_rational(&one).unwrap(), RatFun::from_poly(Poly::from_i64(&[1, 1])));
    }

    #[test]
    fn rational_antiderivative_and_obstruction() {
        // d/dx (1/x) = -1/x^2
        let f = RatFun::new(Poly::from_i64(&[-1]), Poly::from_i64(&[0, 0, 1]));
        let g = rational_primitive(&f).unwrap();
        assert_eq!(g.derivative(), f);
        let log = RatFun::new(Poly::one(), Poly::x());
        assert_eq!(rational_primitive(&log), Err(MathError::LogarithmicObstruction));
        let pole = RatFun::new(Poly::from_i64(&[-1]), Poly::from_i64(&[1, 1]).pow(2));
        assert_eq!(antiderivative_rational(&pole), Err(MathError::PoleAtMinusOne));
    }

    #[test]
    fn termwise_examples() {
        let f = QuasiRational::endpoint(q(0), qf(1, 5));
        let g = antiderivative_termwise(&f).unwrap();
        assert_eq!(g, QuasiRational::endpoint(q(0), qf(6, 5)).scale(&qf(5, 6)));
        let two_terms = QuasiRational::new(RatFun::from_poly(Poly::from_i64(&[3, 1])), q(0), qf(1, 2));
        let g = antiderivative_termwise(&two_terms).unwrap();
        let expect = QuasiRational::endpoint(q(0), qf(3, 2))
            .scale(&qf(4, 3))
            .add(&QuasiRational::endpoint(q(0), qf(5, 2)).scale(&qf(2, 5)))
            .unwrap();
        assert_eq!(g, expect);
        assert_eq!(g.derivative(), two_terms);
    }

    #[test]
    fn quasi_antiderivative_inverts_derivative() {
        let rho = QuasiRational::new(RatFun::from_poly(Poly::from_i64(&[2, 1])), qf(1, 2), qf(3, 2));
        let g = rho.derivative();
        assert_eq!(quasi_antiderivative(&g).unwrap(), rho);
    }
}
