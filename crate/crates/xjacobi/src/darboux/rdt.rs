//! Rational Darboux transformations (state-deleting and state-adding single
//! steps), confluent Darboux transformations and multi-step chains.
//!
//! A type-`iota` seed `phi = mu_iota(alpha, beta) tau_hat / tau` of
//! `T = T_rg(tau; alpha, beta) + eps` with eigenvalue `lambda` factorizes
//! `T = A_hat A + lambda` with `A = b_iota (D - w)`, `w = phi'/phi`, and the
//! partner `T_hat = A A_hat + lambda` is again a rational-gauge operator
//! `T_rg(tau_hat; alpha_hat, beta_hat) + eps + eps_iota`.

use num_traits::Zero;

use crate::classical::{jacobi_p, mu};
use crate::exactmath::rational::{q, qpow, Rational};
use crate::exactmath::{quasi_antiderivative, wronskian, MathError, Poly, QuasiRational, RatFun};

use super::eigen::typed_eigenfunction;
use super::OperatorRG;

/// Failures of a Darboux step.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DarbouxError {
    #[error("illegal step: {0}")]
    IllegalStep(String),
    #[error("the eigenvalue is not degenerate: the seed has no quasi-rational confluent partner")]
    NotDegenerate,
    #[error(transparent)]
    Math(#[from] MathError),
}

/// Partner type, parameter shift and spectral shift of a type-`iota` step.
pub fn step_table(iota: u8, alpha: &Rational, beta: &Rational) -> (u8, Rational, Rational, Rational) {
    match iota {
        1 => (2, alpha + q(1), beta + q(1), alpha + beta + q(2)),
        2 => (1, alpha - q(1), beta - q(1), -(alpha + beta)),
        3 => (4, alpha - q(1), beta + q(1), q(0)),
        4 => (3, alpha + q(1), beta - q(1), q(0)),
        _ => panic!("gauge type must be 1..=4"),
    }
}

/// The polynomial prefactor `b_iota` of the intertwiner.
pub fn intertwiner_prefactor(iota: u8) -> Poly {
    match iota {
        1 => Poly::from_i64(&[1]),
        2 => Poly::from_i64(&[-1, 0, 1]),
        3 => Poly::from_i64(&[-1, 1]),
        4 => Poly::from_i64(&[1, 1]),
        _ => panic!("gauge type must be 1..=4"),
    }
}

/// Classify an eigenfunction of `op`: its type, index and numerator `P` in
/// `phi = mu_iota P / tau`. A type whose endpoint exponents match exactly is
/// preferred over one that only matches up to integers.
pub fn detect_type(op: &OperatorRG, phi: &QuasiRational) -> Option<(u8, i64, Poly)> {
    let dt = op.tau.degree().unwrap_or(0) as i64;
    let mut fallback = None;
    for iota in 1..=4u8 {
        let m = mu(iota, &op.alpha, &op.beta);
        let rel = phi.div(&m);
        let Some(p) = rel
            .mul_ratfun(&RatFun::from_poly(op.tau.clone()))
            .to_ratfun()
            .and_then(|r| r.as_poly())
        else {
            continue;
        };
        let k = p.deg_i64() - dt;
        if rel.a_exp().is_zero() && rel.b_exp().is_zero() {
            return Some((iota, k, p));
        }
        fallback.get_or_insert((iota, k, p));
    }
    fallback
}

/// One rational Darboux step.
#[derive(Clone, Debug)]
pub struct Rdt {
    pub from: OperatorRG,
    pub to: OperatorRG,
    pub iota: u8,
    pub k: i64,
    pub seed: QuasiRational,
    pub lambda: Rational,
    /// Logarithmic derivative of the seed.
    pub w: RatFun,
}

impl Rdt {
    /// `A f = b_iota (f' - w f)`.
    pub fn apply_a(&self, f: &QuasiRational) -> QuasiRational {
        if f.is_zero() {
            return QuasiRational::zero();
        }
        let b = RatFun::from_poly(intertwiner_prefactor(self.iota));
        f.derivative()
            .sub(&f.mul_ratfun(&self.w))
            .expect("a function and its derivative share exponents")
            .mul_ratfun(&b)
    }

    /// `A_hat g = (p/b) g' + ((q + p w - p b'/b)/b) g`.
    pub fn apply_ahat(&self, g: &QuasiRational) -> QuasiRational {
        if g.is_zero() {
            return QuasiRational::zero();
        }
        let bp = intertwiner_prefactor(self.iota);
        let b = RatFun::from_poly(bp.clone());
        let db = RatFun::from_poly(bp.derivative());
        let p = self.from.p();
        let c = &(&(&self.from.q() + &(&p * &self.w)) - &(&(&p * &db) / &b)) / &b;
        g.derivative()
            .mul_ratfun(&(&p / &b))
            .add(&g.mul_ratfun(&c))
            .expect("a function and its derivative share exponents")
    }

    /// The partner eigenfunction of `to` at the seed eigenvalue, annihilated by `A_hat`.
    pub fn dual_seed(&self) -> QuasiRational {
        let (ihat, _, _, _) = step_table(self.iota, &self.from.alpha, &self.from.beta);
        mu(ihat, &self.to.alpha, &self.to.beta).mul(&QuasiRational::from_ratfun(RatFun::new(
            self.from.tau.clone(),
            self.to.tau.clone(),
        )))
    }
}

/// A Darboux step with an explicitly given seed of type `iota`.
pub fn rdt_with_seed(op: &OperatorRG, seed: &QuasiRational, iota: u8) -> Result<Rdt, DarbouxError> {
    if seed.is_zero() {
        return Err(DarbouxError::IllegalStep("zero seed".into()));
    }
    let m = mu(iota, &op.alpha, &op.beta);
    let p = seed
        .div(&m)
        .mul_ratfun(&RatFun::from_poly(op.tau.clone()))
        .to_ratfun()
        .and_then(|r| r.as_poly())
        .ok_or_else(|| DarbouxError::IllegalStep(format!("the seed is not of type {iota}")))?;
    let dt = op.tau.degree().unwrap_or(0) as i64;
    let k = p.deg_i64() - dt;
    let lambda = op.eigenvalue(iota, k);
    if op.apply(seed) != seed.scale(&lambda) {
        return Err(DarbouxError::IllegalStep("the seed is not an eigenfunction".into()));
    }
    let (_, ah, bh, de) = step_table(iota, &op.alpha, &op.beta);
    let to = OperatorRG::new(p.monic(), ah, bh, &op.eps + de);
    let w = seed
        .derivative()
        .div(seed)
        .to_ratfun()
        .expect("a logarithmic derivative is rational");
    Ok(Rdt {
        from: op.clone(),
        to,
        iota,
        k,
        seed: seed.clone(),
        lambda,
        w,
    })
}

/// A Darboux step whose seed is the type-`iota` index-`k` eigenfunction of `op`.
pub fn rdt_step(op: &OperatorRG, iota: u8, k: i64) -> Result<Rdt, DarbouxError> {
    let seed = typed_eigenfunction(op, iota, k)
        .ok_or_else(|| DarbouxError::IllegalStep(format!("no type-{iota} eigenfunction of index {k}")))?;
    rdt_with_seed(op, &seed, iota)
}

/// A confluent Darboux transformation: two steps at the same eigenvalue.
#[derive(Clone, Debug)]
pub struct Cdt {
    pub first: Rdt,
    pub second: Rdt,
    /// `rho = integral of phi^2 W`.
    pub rho: QuasiRational,
    pub t: Rational,
}

impl Cdt {
    pub fn to(&self) -> &OperatorRG {
        &self.second.to
    }
}

/// `integral of phi^2 W` for an eigenfunction of `op`, normalized to vanish
/// at `x = -1` when that is possible.
pub fn confluent_integral(op: &OperatorRG, phi: &QuasiRational) -> Result<QuasiRational, DarbouxError> {
    let integrand = phi.mul(phi).mul(&op.weight());
    quasi_antiderivative(&integrand).map_err(|e| match e {
        MathError::LogarithmicObstruction | MathError::NoQuasiRationalAntiderivative => DarbouxError::NotDegenerate,
        other => DarbouxError::Math(other),
    })
}

/// Confluent step with an explicit seed of type `iota` and parameter `t`.
pub fn cdt_with_seed(op: &OperatorRG, seed: &QuasiRational, iota: u8, t: &Rational) -> Result<Cdt, DarbouxError> {
    let rho = confluent_integral(op, seed)?;
    let first = rdt_with_seed(op, seed, iota)?;
    let shifted = if t.is_zero() {
        rho.clone()
    } else {
        rho.add(&QuasiRational::one().scale(t))
            .map_err(|_| DarbouxError::IllegalStep("a nonzero parameter needs an integral with integer exponents".into()))?
    };
    if shifted.is_zero() {
        return Err(DarbouxError::IllegalStep("the confluent seed vanishes".into()));
    }
    let psi = shifted.mul(&first.dual_seed());
    let (iota2, _, _) = detect_type(&first.to, &psi)
        .ok_or_else(|| DarbouxError::IllegalStep("the confluent seed is not quasi-rational of any type".into()))?;
    let second = rdt_with_seed(&first.to, &psi, iota2)?;
    Ok(Cdt {
        first,
        second,
        rho,
        t: t.clone(),
    })
}

/// The para-Jacobi step of the classical `T(a, b)` with integers
/// `a >= b > 0`: a type-2 step seeded by
/// `2^b phi_4 - (-2)^a t phi_3`, where `phi_3 = (1-x)^-a P_(a-k-1)(x; -a, b)`
/// and `phi_4 = (1+x)^-b P_(b-k-1)(x; a, -b)` span the eigenspace of index
/// `0 <= k < b`. For `t = 1` the seed is the type-2 eigenfunction of index
/// `k`; for `t` outside `{0, 1}` it has index `a+b-k-1`.
pub fn para_jacobi_step(a: i64, b: i64, k: i64, t: &Rational) -> Result<Rdt, DarbouxError> {
    if !(a >= b && b > 0 && (0..b).contains(&k)) {
        return Err(DarbouxError::IllegalStep(format!(
            "a para-Jacobi step needs a >= b > 0 and 0 <= k < b, got a = {a}, b = {b}, k = {k}"
        )));
    }
    if t.is_zero() {
        return Err(DarbouxError::IllegalStep("the para-Jacobi parameter must be nonzero".into()));
    }
    let (qa, qb) = (q(a), q(b));
    let op = OperatorRG::classical(qa.clone(), qb.clone());
    let phi3 = QuasiRational::from_poly(jacobi_p(a - k - 1, &-qa.clone(), &qb)).mul(&QuasiRational::endpoint(-qa.clone(), q(0)));
    let phi4 = QuasiRational::from_poly(jacobi_p(b - k - 1, &qa, &-qb.clone())).mul(&QuasiRational::endpoint(q(0), -qb.clone()));
    let c4 = qpow(&q(2), b);
    let c3 = qpow(&q(-2), a) * t;
    let seed = phi4.scale(&c4).sub(&phi3.scale(&c3))?;
    rdt_with_seed(&op, &seed, 2)
}

/// Confluent step at the type-`iota` index-`k` eigenfunction of `op`.
pub fn cdt_step(op: &OperatorRG, iota: u8, k: i64, t: &Rational) -> Result<Cdt, DarbouxError> {
    let seed = typed_eigenfunction(op, iota, k)
        .ok_or_else(|| DarbouxError::IllegalStep(format!("no type-{iota} eigenfunction of index {k}")))?;
    cdt_with_seed(op, &seed, iota, t)
}

/// Iterated Darboux steps with seeds that are eigenfunctions of the initial
/// operator, each carried through the intertwiners of the earlier steps.
pub fn chain(op: &OperatorRG, seeds: &[QuasiRational]) -> Result<Vec<Rdt>, DarbouxError> {
    let mut steps: Vec<Rdt> = Vec::new();
    let mut cur = op.clone();
    for s in seeds {
        let mut f = s.clone();
        for st in &steps {
            f = st.apply_a(&f);
        }
        let (iota, _, _) =
            detect_type(&cur, &f).ok_or_else(|| DarbouxError::IllegalStep("transported seed has no type".into()))?;
        let st = rdt_with_seed(&cur, &f, iota)?;
        cur = st.to.clone();
        steps.push(st);
    }
    Ok(steps)
}

/// Closed form of the chain: `tau` of the final operator is the polynomial
/// `tau_0 Wr[phi_1, ..., phi_n]` with its endpoint factors removed.
pub fn chain_tau_closed_form(op: &OperatorRG, seeds: &[QuasiRational]) -> Result<Poly, DarbouxError> {
    if seeds.is_empty() {
        return Ok(op.tau.monic());
    }
    let w = wronskian(seeds)?;
    if w.is_zero() {
        return Err(DarbouxError::IllegalStep("linearly dependent seeds".into()));
    }
    let core = w.r() * &RatFun::from_poly(op.tau.clone());
    core.as_poly()
        .map(|p| p.monic())
        .ok_or_else(|| DarbouxError::IllegalStep("the Wronskian is not polynomial over tau".into()))
}

/// Closed form of the composite intertwiner applied to `y`:
/// `Wr[phi_1, ..., phi_n, y] / Wr[phi_1, ..., phi_n]`, up to the polynomial
/// prefactors of the individual steps.
pub fn chain_intertwiner_closed_form(seeds: &[QuasiRational], y: &QuasiRational) -> Result<QuasiRational, DarbouxError> {
    let mut all = seeds.to_vec();
    all.push(y.clone());
    Ok(wronskian(&all)?.div(&wronskian(seeds)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::qr_eigenfunction;
    use crate::exactmath::rational::qf;

    fn probe() -> QuasiRational {
        QuasiRational::from_ratfun(RatFun::new(Poly::from_i64(&[2, -1, 3, 1]), Poly::from_i64(&[5, 1])))
    }

    #[test]
    fn primitive_steps() {
        let (a, b) = (qf(1, 3), qf(2, 7));
        let op = OperatorRG::classical(a.clone(), b.clone());
        for iota in 1..=4u8 {
            let st = rdt_step(&op, iota, 0).unwrap();
            let (_, ah, bh, de) = step_table(iota, &a, &b);
            assert_eq!(st.to, OperatorRG::new(Poly::from_i64(&[1]), ah, bh, de));
        }
    }

    #[test]
    fn factorization_and_intertwining() {
        let (a, b) = (qf(1, 3), qf(2, 7));
        let op = OperatorRG::classical(a.clone(), b.clone());
        for iota in 1..=4u8 {
            let st = rdt_step(&op, iota, 2).unwrap();
            let f = probe();
            let lhs = op.apply(&f);
            let rhs = st.apply_ahat(&st.apply_a(&f)).add(&f.scale(&st.lambda)).unwrap();
            assert_eq!(lhs, rhs, "T = A_hat A + lambda for type {iota}");
            let g = probe();
            let lhs = st.to.apply(&g);
            let rhs = st.apply_a(&st.apply_ahat(&g)).add(&g.scale(&st.lambda)).unwrap();
            assert_eq!(lhs, rhs, "T_hat = A A_hat + lambda for type {iota}");
            assert!(st.apply_ahat(&st.dual_seed()).is_zero());
            assert!(st.apply_a(&st.seed).is_zero());
        }
    }

    #[test]
    fn confluent_routes_commute() {
        for t0 in [q(1), q(-1), qf(3, 2)] {
            let op = OperatorRG::classical(q(0), q(0));
            let cdt = cdt_step(&op, 1, 0, &t0).unwrap();
            let mid = cdt.to().clone();
            assert_eq!(mid.tau, Poly::new(vec![&t0 + q(1), q(1)]));
            let route1 = rdt_step(&mid, 1, 1).unwrap().to;

            let first = rdt_step(&op, 1, 1).unwrap().to;
            assert_eq!(first.tau, Poly::x());
            let phi = typed_eigenfunction(&first, 1, -1).unwrap();
            let route2 = cdt_with_seed(&first, &phi, 1, &(q(-2) * &t0)).unwrap().to().clone();
            assert!(route1.gauge_equal(&route2), "{route1:?} vs {route2:?}");
            let expected = Poly::new(vec![q(1), q(2) + q(2) * &t0, q(1)]);
            assert_eq!(route1.tau, expected);
        }
    }

    #[test]
    fn chain_matches_closed_form() {
        let (a, b) = (qf(1, 3), qf(2, 7));
        let op = OperatorRG::classical(a.clone(), b.clone());
        let seeds = vec![
            qr_eigenfunction(3, 1, &a, &b).unwrap(),
            qr_eigenfunction(4, 2, &a, &b).unwrap(),
            qr_eigenfunction(1, 2, &a, &b).unwrap(),
        ];
        let steps = chain(&op, &seeds).unwrap();
        let last = &steps.last().unwrap().to;
        assert_eq!(last.tau.monic(), chain_tau_closed_form(&op, &seeds).unwrap());
        let y = qr_eigenfunction(1, 4, &a, &b).unwrap();
        let mut iter = y.clone();
        for st in &steps {
            iter = st.apply_a(&iter);
        }
        let closed = chain_intertwiner_closed_form(&seeds, &y).unwrap();
        let ratio = iter.div(&closed);
        let mut prefactors = Poly::from_i64(&[1]);
        for st in &steps {
            prefactors = &prefactors * &intertwiner_prefactor(st.iota);
        }
        assert_eq!(ratio, QuasiRational::from_poly(prefactors));
    }

    #[test]
    fn nondegenerate_eigenvalue_is_rejected() {
        let (a, b) = (qf(1, 3), qf(2, 7));
        let op = OperatorRG::classical(a, b);
        assert_eq!(cdt_step(&op, 1, 0, &q(1)).unwrap_err(), DarbouxError::NotDegenerate);
    }
}
