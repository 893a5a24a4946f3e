//! Direct solution of the typed eigenvalue problem.
//!
//! A type-`iota` eigenfunction of index `k` of `T_rg(tau; alpha, beta) + eps`
//! has the form `mu_iota P / tau` with `deg P = k + deg tau`. Conjugating by
//! `mu_iota` reduces the search to rational functions `P / tau`, and the
//! eigenvalue equation becomes a linear system for the coefficients of `P`.
//! This solver uses no structure of any particular family, so it serves as an
//! independent check of the constructions.

use num_traits::Zero;

use crate::classical::mu;
use crate::exactmath::rational::Rational;
use crate::exactmath::{nullspace, rref, Poly, QuasiRational, RatFun};

use super::OperatorRG;

/// Polynomials `P` of degree at most `k + deg tau` for which `mu_iota P / tau`
/// is an eigenfunction of `op` with eigenvalue `lambda_iota(k) + eps`.
/// The basis is in reduced echelon form ordered by decreasing degree.
pub fn typed_numerators(op: &OperatorRG, iota: u8, k: i64) -> Vec<Poly> {
    let dt = op.tau.degree().unwrap_or(0) as i64;
    let n = k + dt;
    if n < 0 {
        return Vec::new();
    }
    let lam = op.eigenvalue(iota, k);
    let conj = op.gauge_conjugate(iota);
    let mut cols: Vec<Vec<Rational>> = Vec::new();
    let mut height = 0usize;
    for j in 0..=n {
        let xj = Poly::monomial(Rational::from_integer(1.into()), j as usize);
        let gp = &conj.apply_over_tau(&xj) - &(&op.tau * &xj).scale(&lam);
        height = height.max(gp.coeffs().len());
        cols.push(gp.coeffs().to_vec());
    }
    let ncols = cols.len();
    let mut rows = vec![vec![Rational::zero(); ncols]; height.max(1)];
    for (j, c) in cols.iter().enumerate() {
        for (i, v) in c.iter().enumerate() {
            rows[i][j] = v.clone();
        }
    }
    // Columns in decreasing degree so the echelon form favours high degree.
    let mut null: Vec<Vec<Rational>> = nullspace(&rows, ncols)
        .into_iter()
        .map(|v| v.into_iter().rev().collect())
        .collect();
    rref(&mut null, ncols);
    let basis: Vec<Poly> = null
        .into_iter()
        .map(|v| Poly::new(v.into_iter().rev().collect()))
        .filter(|p| !p.is_zero())
        .collect();
    basis
}

/// Whether `mu_iota P / tau` has exactly the endpoint exponents of `mu_iota`.
///
/// With integer exponents a type-`iota` solution whose numerator vanishes at an
/// endpoint is really a solution of another type, and is not counted here.
fn genuine(op: &OperatorRG, iota: u8, k: i64, p: &Poly) -> Option<QuasiRational> {
    let dt = op.tau.degree().unwrap_or(0) as i64;
    if p.deg_i64() != k + dt {
        return None;
    }
    let m = mu(iota, &op.alpha, &op.beta);
    let f = m.mul(&QuasiRational::from_ratfun(RatFun::new(p.monic(), op.tau.clone())));
    (f.a_exp() == m.a_exp() && f.b_exp() == m.b_exp()).then_some(f)
}

/// The type-`iota` index-`k` eigenfunction, if one of exact index `k` exists.
/// When the eigenspace also contains lower-index solutions the echelon
/// representative is preferred, then a fixed generic combination.
pub fn typed_eigenfunction(op: &OperatorRG, iota: u8, k: i64) -> Option<QuasiRational> {
    let basis = typed_numerators(op, iota, k);
    if let Some(f) = basis.iter().find_map(|p| genuine(op, iota, k, p)) {
        return Some(f);
    }
    if basis.len() < 2 {
        return None;
    }
    let mut comb = Poly::zero();
    for (j, p) in basis.iter().enumerate() {
        comb = &comb + &p.scale(&Rational::from_integer(((j * j + 1) as i64).into()));
    }
    genuine(op, iota, k, &comb)
}

/// Whether `op` has a type-`iota` eigenfunction of exact index `k`.
pub fn has_typed_index(op: &OperatorRG, iota: u8, k: i64) -> bool {
    typed_eigenfunction(op, iota, k).is_some()
}

/// Dimension of the space of type-`iota` eigenfunctions with eigenvalue
/// `lambda_iota(k) + eps` and index at most `k`.
pub fn typed_dimension(op: &OperatorRG, iota: u8, k: i64) -> usize {
    typed_numerators(op, iota, k).len()
}
