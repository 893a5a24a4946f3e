//! Exact arithmetic substrate: rationals, polynomials, rational and
//! quasi-rational functions, determinants, Wronskians, antiderivatives and
//! real-root counting. Nothing here rounds.

pub mod integrate;
pub mod linalg;
pub mod poly;
pub mod quasi;
pub mod ratfun;
pub mod rational;
pub mod sturm;

pub use integrate::{
    antiderivative_rational, antiderivative_termwise, quasi_antiderivative, rational_primitive,
    solve_primitive_equation,
};
pub use linalg::{rref, det_poly, det_poly_cofactor, det_ratfun, nullspace, solve_linear, wronskian, wronskian_ratfun, QRMatrix};
pub use poly::Poly;
pub use quasi::QuasiRational;
pub use ratfun::RatFun;
pub use rational::{fmt_q, parse_q, q, qf, Rational};
pub use sturm::sturm_roots_in_interval;

/// Failures of the arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MathError {
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix row entries have exponents that differ by a non-integer")]
    NonUniformRow,
    #[error("matrix is not square")]
    NotSquare,
    #[error("quasi-rational exponents differ by a non-integer")]
    IncompatibleExponents,
    #[error("a finite pole has nonzero residue, so no rational antiderivative exists")]
    LogarithmicObstruction,
    #[error("the antiderivative has a pole at x = -1")]
    PoleAtMinusOne,
    #[error("the (1+x) exponent is an integer")]
    IntegerExponent,
    #[error("the integrand is not a polynomial times an endpoint power")]
    NotPolynomial,
    #[error("no quasi-rational antiderivative exists")]
    NoQuasiRationalAntiderivative,
}
