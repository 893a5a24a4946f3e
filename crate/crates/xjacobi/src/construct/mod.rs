//! Exceptional families for all six classes.
//!
//! A family bundles the operator `T_rg(tau; alpha, beta) + eps`, its index
//! sets, a generator for the eigenfunctions `pi_i = P_i / tau` and their
//! formal norms. Classes G, B, C and CB use one Wronskian of classical seed
//! functions; classes A and D first build an intermediate operator from
//! determinants of incomplete inner products and then apply a Wronskian
//! stage to it.

mod class_a;
mod class_d;
mod seeds;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use crate::classical::{ClassTag, ClassicalError, ClassicalIndexSets, GammaError, NormValue};
use crate::darboux::OperatorRG;
use crate::diagrams::{encode_params, DiagramParams, Encoded, ParamError};
use crate::exactmath::{MathError, Poly, RatFun};

/// Failures while building or querying a family.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("index {0} is not in I_1")]
    IndexNotInFamily(i64),
    #[error(transparent)]
    Math(#[from] MathError),
    #[error(transparent)]
    Classical(#[from] ClassicalError),
    #[error("norm constant: {0}")]
    Gamma(#[from] GammaError),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Class-specific eigenfunction and norm generator.
enum Generator {
    Seeds(seeds::SeedGenerator),
    A(class_a::ClassAGenerator),
    D(class_d::ClassDGenerator),
}

/// An exceptional operator together with its eigenfunctions and norms.
pub struct ExceptionalFamily {
    pub params: DiagramParams,
    pub encoded: Encoded,
    /// The operator, with `tau` normalized to be monic.
    pub op: OperatorRG,
    generator: Generator,
    pi_cache: Mutex<BTreeMap<i64, RatFun>>,
}

impl fmt::Debug for ExceptionalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExceptionalFamily({:?}; {})", self.params, self.op.describe())
    }
}

/// Number of `I_1` indices materialized when the caller does not choose.
pub const DEFAULT_WINDOW: usize = 8;

impl ExceptionalFamily {
    fn new(params: &DiagramParams, encoded: Encoded, tau: Poly, generator: Generator) -> Result<Self, ConstructError> {
        if tau.is_zero() {
            return Err(ConstructError::Internal("tau vanishes identically".into()));
        }
        let op = OperatorRG::new(tau.monic(), encoded.alpha.clone(), encoded.beta.clone(), encoded.eps.clone());
        Ok(ExceptionalFamily {
            params: params.clone(),
            encoded,
            op,
            generator,
            pi_cache: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn tag(&self) -> ClassTag {
        self.encoded.tag
    }

    pub fn tau(&self) -> &Poly {
        &self.op.tau
    }

    pub fn index_sets(&self) -> &ClassicalIndexSets {
        &self.encoded.sets
    }

    /// Whether `i` belongs to `I_1`.
    pub fn contains(&self, i: i64) -> bool {
        self.encoded.sets.total(1).contains(i)
    }

    /// The first `n` indices of `I_1` in increasing order.
    pub fn window(&self, n: usize) -> Vec<i64> {
        self.encoded.first_indices(n)
    }

    /// The eigenfunction `pi_i`, a rational function of degree `i`.
    pub fn pi(&self, i: i64) -> Result<RatFun, ConstructError> {
        if !self.contains(i) {
            return Err(ConstructError::IndexNotInFamily(i));
        }
        if let Some(f) = self.pi_cache.lock().expect("cache lock").get(&i) {
            return Ok(f.clone());
        }
        let f = match &self.generator {
            Generator::Seeds(g) => g.pi(i)?,
            Generator::A(g) => g.pi(i)?,
            Generator::D(g) => g.pi(i)?,
        };
        self.pi_cache.lock().expect("cache lock").insert(i, f.clone());
        Ok(f)
    }

    /// The formal norm of `pi_i`.
    pub fn norm(&self, i: i64) -> Result<NormValue, ConstructError> {
        if !self.contains(i) {
            return Err(ConstructError::IndexNotInFamily(i));
        }
        match &self.generator {
            Generator::Seeds(g) => g.norm(i, &self.encoded),
            Generator::A(g) => g.norm(i, &self.encoded),
            Generator::D(g) => g.norm(i, &self.encoded),
        }
    }

    /// Eigenfunctions for the first `n` indices of `I_1`.
    pub fn pis(&self, n: usize) -> Result<Vec<(i64, RatFun)>, ConstructError> {
        self.window(n).into_iter().map(|i| Ok((i, self.pi(i)?))).collect()
    }
}

fn expect_tag(params: &DiagramParams, allowed: &[ClassTag]) -> Result<Encoded, ConstructError> {
    let enc = encode_params(params)?;
    if !allowed.contains(&enc.tag) {
        return Err(ParamError::InvalidParams(format!("parameters of class {} passed to a builder for {:?}", enc.tag, allowed)).into());
    }
    Ok(enc)
}

/// Build a class G family.
pub fn build_g(params: &DiagramParams) -> Result<ExceptionalFamily, ConstructError> {
    let enc = expect_tag(params, &[ClassTag::G])?;
    let (tau, g) = seeds::SeedGenerator::build(params, &enc)?;
    ExceptionalFamily::new(params, enc, tau, Generator::Seeds(g))
}

/// Build a class B family.
pub fn build_b(params: &DiagramParams) -> Result<ExceptionalFamily, ConstructError> {
    let enc = expect_tag(params, &[ClassTag::B])?;
    let (tau, g) = seeds::SeedGenerator::build(params, &enc)?;
    ExceptionalFamily::new(params, enc, tau, Generator::Seeds(g))
}

/// Build a class C or CB family.
pub fn build_c_cb(params: &DiagramParams) -> Result<ExceptionalFamily, ConstructError> {
    let enc = expect_tag(params, &[ClassTag::C, ClassTag::CB])?;
    let (tau, g) = seeds::SeedGenerator::build(params, &enc)?;
    ExceptionalFamily::new(params, enc, tau, Generator::Seeds(g))
}

/// Build a class A family.
pub fn build_a(params: &DiagramParams) -> Result<ExceptionalFamily, ConstructError> {
    let enc = expect_tag(params, &[ClassTag::A])?;
    let (tau, g) = class_a::ClassAGenerator::build(params, &enc)?;
    ExceptionalFamily::new(params, enc, tau, Generator::A(g))
}

/// Build a class D family.
pub fn build_d(params: &DiagramParams) -> Result<ExceptionalFamily, ConstructError> {
    let enc = expect_tag(params, &[ClassTag::D])?;
    let (tau, g) = class_d::ClassDGenerator::build(params, &enc)?;
    ExceptionalFamily::new(params, enc, tau, Generator::D(g))
}

/// Build a family of whichever class the parameters belong to.
pub fn build(params: &DiagramParams) -> Result<ExceptionalFamily, ConstructError> {
    match params.tag() {
        ClassTag::G => build_g(params),
        ClassTag::B => build_b(params),
        ClassTag::C | ClassTag::CB => build_c_cb(params),
        ClassTag::A => build_a(params),
        ClassTag::D => build_d(params),
    }
}

/// The norm of `i` for a family, as a free function.
pub fn family_norm(fam: &ExceptionalFamily, i: i64) -> Result<NormValue, ConstructError> {
    fam.norm(i)
}

/// Reject seed lists with repeated eigenvalues.
fn check_distinct_eigenvalues(seeds: &[(u8, i64, crate::exactmath::Rational)]) -> Result<(), ConstructError> {
    for (x, s) in seeds.iter().enumerate() {
        for t in &seeds[x + 1..] {
            if s.2 == t.2 {
                return Err(ParamError::InvalidParams(format!(
                    "seeds ({}, {}) and ({}, {}) share the eigenvalue {}",
                    s.0,
                    s.1,
                    t.0,
                    t.1,
                    crate::exactmath::fmt_q(&s.2)
                ))
                .into());
            }
        }
    }
    Ok(())
}

/// The leading term of `z0 + e - c` as `e -> 0`.
fn lin(z0: &crate::exactmath::Rational, c: &crate::exactmath::Rational) -> crate::classical::Leading {
    crate::classical::Leading::linear(&(z0 - c), 1)
}

/// Require a quasi-rational value to be a rational function.
fn as_ratfun(f: &crate::exactmath::QuasiRational, what: &str) -> Result<RatFun, ConstructError> {
    f.to_ratfun()
        .ok_or_else(|| ConstructError::Internal(format!("{what} has non-integer endpoint exponents")))
}

/// Require a rational function to be a polynomial.
fn as_poly(f: &RatFun, what: &str) -> Result<Poly, ConstructError> {
    f.as_poly()
        .ok_or_else(|| ConstructError::Internal(format!("{what} is not a polynomial: {}", f.to_string_x())))
}
