//! Classical Jacobi polynomials, typed quasi-rational eigenfunctions,
//! eigenvalue functions, norm ratios, classical index sets and ladder
//! operators.
//!
//! The classical operator is `T(a,b) = (x^2-1) D^2 + [(a+b+2) x + (a-b)] D`.
//! Its quasi-rational eigenfunctions come in four asymptotic types, related
//! by the gauge factors `mu_1 = 1`, `mu_2 = (1-x)^(-a) (1+x)^(-b)`,
//! `mu_3 = (1-x)^(-a)` and `mu_4 = (1+x)^(-b)`.

pub mod gamma;
pub mod indexset;

use std::fmt;

use num_traits::Zero;

use crate::exactmath::poly::{xm1_pow, xp1_pow};
use crate::exactmath::rational::{
    as_i64, binom_gen, factorial, is_int, pochhammer, q, qpow, Rational,
};
use crate::exactmath::{Poly, QuasiRational};
pub use gamma::{GammaError, GammaProduct, Leading};
pub use indexset::IndexSet;

/// Errors of the classical layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassicalError {
    #[error("the leading coefficient (n+a+b+1)_n of P_{n} vanishes")]
    LeadingCoefficientVanishes { n: i64 },
    #[error("a Pochhammer factor in the denominator vanishes")]
    DivisionByZero,
    #[error("unsupported classical parameters: {0}")]
    Unsupported(String),
}

/// The six degeneracy classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    G,
    A,
    B,
    C,
    CB,
    D,
}

impl ClassTag {
    /// Class of the operator `T(alpha, beta)` from the integrality of
    /// `alpha`, `beta`, `alpha - beta` and `alpha + beta`.
    pub fn classify(alpha: &Rational, beta: &Rational) -> ClassTag {
        let ai = is_int(alpha);
        let bi = is_int(beta);
        let dm = is_int(&(alpha - beta));
        let dp = is_int(&(alpha + beta));
        match (ai, bi) {
            (true, true) => ClassTag::D,
            (true, false) | (false, true) => ClassTag::A,
            (false, false) => match (dm, dp) {
                (true, true) => ClassTag::CB,
                (true, false) => ClassTag::B,
                (false, true) => ClassTag::C,
                (false, false) => ClassTag::G,
            },
        }
    }

    pub fn parse(s: &str) -> Option<ClassTag> {
        match s.trim() {
            "G" => Some(ClassTag::G),
            "A" => Some(ClassTag::A),
            "B" => Some(ClassTag::B),
            "C" => Some(ClassTag::C),
            "CB" => Some(ClassTag::CB),
            "D" => Some(ClassTag::D),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ClassTag::G => "G",
            ClassTag::A => "A",
            ClassTag::B => "B",
            ClassTag::C => "C",
            ClassTag::CB => "CB",
            ClassTag::D => "D",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The non-monic Jacobi polynomial
/// `P_n = 2^-n sum_k C(n+a, n-k) C(n+b, k) (x-1)^k (x+1)^(n-k)`.
pub fn jacobi_p(n: i64, a: &Rational, b: &Rational) -> Poly {
    let mut acc = Poly::zero();
    let na = q(n) + a;
    let nb = q(n) + b;
    for k in 0..=n {
        let c = binom_gen(&na, n - k) * binom_gen(&nb, k);
        if c.is_zero() {
            continue;
        }
        let t = &xm1_pow(k as usize) * &xp1_pow((n - k) as usize);
        acc = &acc + &t.scale(&c);
    }
    acc.scale(&qpow(&q(2), -n))
}

/// Leading coefficient of `P_n(x; a, b)`: `(n+a+b+1)_n / (2^n n!)`.
pub fn jacobi_lead(n: i64, a: &Rational, b: &Rational) -> Rational {
    pochhammer(&(q(n) + a + b + q(1)), n) / (qpow(&q(2), n) * factorial(n))
}

/// Monic Jacobi polynomial `pi_n(x; a, b)`.
pub fn monic_jacobi(n: i64, a: &Rational, b: &Rational) -> Result<Poly, ClassicalError> {
    if jacobi_lead(n, a, b).is_zero() {
        return Err(ClassicalError::LeadingCoefficientVanishes { n });
    }
    Ok(jacobi_p(n, a, b).monic())
}

/// Typed eigenvalues: `lambda_1 = k(k+a+b+1)`, `lambda_2 = (k-a-b)(k+1)`,
/// `lambda_3 = (k-a)(k+b+1)`, `lambda_4 = (k-b)(k+a+1)`.
pub fn lambda(iota: u8, k: i64, alpha: &Rational, beta: &Rational) -> Rational {
    let k = q(k);
    match iota {
        1 => &k * (&k + alpha + beta + q(1)),
        2 => (&k - alpha - beta) * (&k + q(1)),
        3 => (&k - alpha) * (&k + beta + q(1)),
        4 => (&k - beta) * (&k + alpha + q(1)),
        _ => panic!("eigenfunction type must be 1..=4"),
    }
}

/// Gauge factor `mu_iota(x; alpha, beta)`.
pub fn mu(iota: u8, alpha: &Rational, beta: &Rational) -> QuasiRational {
    let z = Rational::zero();
    match iota {
        1 => QuasiRational::one(),
        2 => QuasiRational::endpoint(-alpha.clone(), -beta.clone()),
        3 => QuasiRational::endpoint(-alpha.clone(), z),
        4 => QuasiRational::endpoint(z, -beta.clone()),
        _ => panic!("eigenfunction type must be 1..=4"),
    }
}

/// Classical parameters of the polynomial part of a type-`iota` eigenfunction.
pub fn typed_params(iota: u8, a: &Rational, b: &Rational) -> (Rational, Rational) {
    match iota {
        1 => (a.clone(), b.clone()),
        2 => (-a.clone(), -b.clone()),
        3 => (-a.clone(), b.clone()),
        4 => (a.clone(), -b.clone()),
        _ => panic!("eigenfunction type must be 1..=4"),
    }
}

/// Quasi-rational eigenfunction `phi_{iota,n} = mu_iota pi_n(x; +-a, +-b)` of `T(a,b)`.
pub fn qr_eigenfunction(iota: u8, n: i64, a: &Rational, b: &Rational) -> Result<QuasiRational, ClassicalError> {
    let (pa, pb) = typed_params(iota, a, b);
    let p = monic_jacobi(n, &pa, &pb)?;
    Ok(mu(iota, a, b).mul(&QuasiRational::from_poly(p)))
}

/// `nu(z;a,b) / nu(0;a,b) = 4^z z! (a+b+1)_z (a+1)_z (b+1)_z / ((a+b+1)_2z (a+b+2)_2z)`.
pub fn norm_ratio(z: i64, a: &Rational, b: &Rational) -> Result<Rational, ClassicalError> {
    let s = a + b;
    let den = pochhammer(&(&s + q(1)), 2 * z) * pochhammer(&(&s + q(2)), 2 * z);
    if den.is_zero() {
        return Err(ClassicalError::DivisionByZero);
    }
    let num = qpow(&q(4), z)
        * factorial(z)
        * pochhammer(&(&s + q(1)), z)
        * pochhammer(&(a + q(1)), z)
        * pochhammer(&(b + q(1)), z);
    Ok(num / den)
}

/// The constant a formal norm is measured against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormBase {
    /// `nu(alpha, beta)`.
    Nu,
    /// `nu(alpha, -1-alpha)`, used when `nu(alpha, beta)` vanishes.
    NuReflected,
}

impl NormBase {
    /// The base used for an operator with parameters `alpha, beta`:
    /// the reflected constant when `alpha, beta` are not integers and
    /// `alpha + beta + 1` is an integer at most `-1`.
    pub fn for_params(alpha: &Rational, beta: &Rational) -> NormBase {
        let s = alpha + beta + q(1);
        if !is_int(alpha) && !is_int(beta) && is_int(&s) && s <= q(-1) {
            NormBase::NuReflected
        } else {
            NormBase::Nu
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NormBase::Nu => "nu(alpha,beta)",
            NormBase::NuReflected => "nu(alpha,-1-alpha)",
        }
    }
}

/// A formal norm `coeff * base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormValue {
    pub coeff: Rational,
    pub base: NormBase,
}

impl NormValue {
    pub fn zero(base: NormBase) -> Self {
        NormValue {
            coeff: Rational::zero(),
            base,
        }
    }

    /// `extra * nu(z; a, b)` in units of the base of `(alpha, beta)`, with `z`
    /// approached as a limit from `z0`.
    pub fn from_nu(
        z0: &Rational,
        a: &Rational,
        b: &Rational,
        alpha: &Rational,
        beta: &Rational,
        extra: &Leading,
    ) -> Result<NormValue, GammaError> {
        let base = NormBase::for_params(alpha, beta);
        let coeff = match base {
            NormBase::Nu => gamma::nu_over_base(z0, a, b, alpha, beta, extra)?,
            NormBase::NuReflected => gamma::nu_over_reflected_base(z0, a, b, alpha, extra)?,
        };
        Ok(NormValue { coeff, base })
    }
}

/// Apply the classical operator `T(a,b)` to a polynomial.
pub fn apply_classical(a: &Rational, b: &Rational, p: &Poly) -> Poly {
    let x2m1 = Poly::from_i64(&[-1, 0, 1]);
    let lin = Poly::new(vec![a - b, a + b + q(2)]);
    &(&x2m1 * &p.derivative().derivative()) + &(&lin * &p.derivative())
}

/// Ladder operators `D = d/dx` and `R(a,b) = (x^2-1) D + a(x+1) + b(x-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    D,
    R,
}

pub fn ladder(op: Ladder, a: &Rational, b: &Rational, p: &Poly) -> Poly {
    match op {
        Ladder::D => p.derivative(),
        Ladder::R => {
            let x2m1 = Poly::from_i64(&[-1, 0, 1]);
            let m = Poly::new(vec![a - b, a + b]);
            &(&x2m1 * &p.derivative()) + &(&m * p)
        }
    }
}

/// The classical index sets of `T(a,b)`, each split into its `-` and `+`
/// parts. Types without a split report the whole set as the `+` part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalIndexSets {
    pub tag: ClassTag,
    pub minus: [IndexSet; 4],
    pub plus: [IndexSet; 4],
}

impl ClassicalIndexSets {
    /// The full index set of type `iota` (1..=4).
    pub fn total(&self, iota: u8) -> IndexSet {
        let i = (iota - 1) as usize;
        self.minus[i].union(&self.plus[i])
    }

    pub fn minus(&self, iota: u8) -> &IndexSet {
        &self.minus[(iota - 1) as usize]
    }

    pub fn plus(&self, iota: u8) -> &IndexSet {
        &self.plus[(iota - 1) as usize]
    }
}

fn ceil_half(x: i64) -> i64 {
    (x + 1).div_euclid(2)
}

/// `{n >= 0 : 2n + s < 0}` and `{n >= max(-s, 0)}`.
fn split_pair(s: i64) -> (IndexSet, IndexSet) {
    (IndexSet::range(0, ceil_half(-s)), IndexSet::from_tail((-s).max(0)))
}

/// Classical index sets for each of the six classes.
pub fn classical_index_sets(a: &Rational, b: &Rational) -> Result<ClassicalIndexSets, ClassicalError> {
    let tag = ClassTag::classify(a, b);
    let n0 = IndexSet::naturals;
    let e = IndexSet::empty;
    let (minus, plus) = match tag {
        ClassTag::G => ([e(), e(), e(), e()], [n0(), n0(), n0(), n0()]),
        ClassTag::A => {
            if let Some(ai) = as_i64(a) {
                if ai < 0 {
                    return Err(ClassicalError::Unsupported("a must be a nonnegative integer".into()));
                }
                let fin = IndexSet::range(0, ai);
                ([e(), e(), e(), e()], [n0(), fin.clone(), fin, n0()])
            } else {
                let bi = as_i64(b).expect("class A has one integer parameter");
                if bi < 0 {
                    return Err(ClassicalError::Unsupported("b must be a nonnegative integer".into()));
                }
                let fin = IndexSet::range(0, bi);
                ([e(), e(), e(), e()], [n0(), fin.clone(), n0(), fin])
            }
        }
        ClassTag::B | ClassTag::C | ClassTag::CB => {
            let mut minus = [e(), e(), e(), e()];
            let mut plus = [n0(), n0(), n0(), n0()];
            if matches!(tag, ClassTag::C | ClassTag::CB) {
                let s = as_i64(&(a + b)).unwrap();
                (minus[0], plus[0]) = split_pair(s);
                (minus[1], plus[1]) = split_pair(-s);
            }
            if matches!(tag, ClassTag::B | ClassTag::CB) {
                let d = as_i64(&(a - b)).unwrap();
                (minus[2], plus[2]) = split_pair(-d);
                (minus[3], plus[3]) = split_pair(d);
            }
            (minus, plus)
        }
        ClassTag::D => {
            let ai = as_i64(a).unwrap();
            let bi = as_i64(b).unwrap();
            if ai < 0 || bi < 0 {
                return Err(ClassicalError::Unsupported("class D needs a, b >= 0".into()));
            }
            let minus = [
                e(),
                IndexSet::range(0, ai.min(bi)),
                IndexSet::range(0, ceil_half(ai - bi)),
                IndexSet::range(0, ceil_half(bi - ai)),
            ];
            let plus = [
                n0(),
                IndexSet::range(ai.max(bi), ai + bi),
                IndexSet::range((ai - bi).max(0), ai),
                IndexSet::range((bi - ai).max(0), bi),
            ];
            (minus, plus)
        }
    };
    Ok(ClassicalIndexSets { tag, minus, plus })
}

/// True when the type-`iota` classical polynomial of degree `n` keeps its degree,
/// i.e. its leading coefficient does not vanish.
pub fn typed_degree_ok(iota: u8, n: i64, a: &Rational, b: &Rational) -> bool {
    let (pa, pb) = typed_params(iota, a, b);
    !jacobi_lead(n, &pa, &pb).is_zero()
}
