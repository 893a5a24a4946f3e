//! Independent checkers for constructed families: eigenvalue equations,
//! orthogonality, formal norms, regularity, index sets and diagram flips.
//!
//! Every check is an exact identity. A failing check reports the first
//! identity that does not hold together with its exact residual.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::classical::{ClassTag, NormBase, NormValue};
use crate::construct::ExceptionalFamily;
use crate::darboux::{has_typed_index, rdt_step, step_table, OperatorRG};
use crate::diagrams::{is_flip, SpectralDiagram};
use crate::exactmath::rational::{as_i64, ceil_i64, fmt_q, is_int, q, qpow, Rational};
use crate::exactmath::{quasi_antiderivative, sturm_roots_in_interval, Poly, QuasiRational, RatFun};

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    /// What was established, or the first failing identity with its residual.
    pub witness: String,
}

impl Verdict {
    pub fn ok(witness: impl Into<String>) -> Verdict {
        Verdict {
            pass: true,
            witness: witness.into(),
        }
    }

    pub fn fail(witness: impl Into<String>) -> Verdict {
        Verdict {
            pass: false,
            witness: witness.into(),
        }
    }

    /// The conjunction of several verdicts, keeping the first failure.
    pub fn all(vs: impl IntoIterator<Item = Verdict>, what: &str) -> Verdict {
        let mut n = 0;
        for v in vs {
            if !v.pass {
                return v;
            }
            n += 1;
        }
        Verdict::ok(format!("{what}: {n} checks passed"))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", if self.pass { "pass" } else { "FAIL" }, self.witness)
    }
}

/// Parameters outside the hypotheses of a check.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
}

fn pi_or_fail(fam: &ExceptionalFamily, i: i64) -> Result<RatFun, Verdict> {
    fam.pi(i).map_err(|e| Verdict::fail(format!("pi_{i} could not be built: {e}")))
}

/// `(T + eps) f = lambda f` for an arbitrary rational function `f`.
pub fn check_eigen_function(op: &OperatorRG, f: &RatFun, lambda: &Rational) -> Verdict {
    if op.is_eigenfunction(f, lambda) {
        return Verdict::ok(format!("eigenvalue {}", fmt_q(lambda)));
    }
    let residual = &op.apply_ratfun(f) - &f.scale(lambda);
    Verdict::fail(format!(
        "(T - {}) f = {} for f = {}",
        fmt_q(lambda),
        residual.to_string_x(),
        f.to_string_x()
    ))
}

/// `(T + eps) pi_i = lambda_1(i) pi_i`, including `deg pi_i = i`.
pub fn check_eigen(fam: &ExceptionalFamily, i: i64) -> Verdict {
    let f = match pi_or_fail(fam, i) {
        Ok(f) => f,
        Err(v) => return v,
    };
    if f.degree() != i {
        return Verdict::fail(format!("pi_{i} has degree {} instead of {i}", f.degree()));
    }
    let v = check_eigen_function(&fam.op, &f, &fam.op.eigenvalue(1, i));
    Verdict {
        pass: v.pass,
        witness: format!("pi_{i}: {}", v.witness),
    }
}

fn qr(f: &RatFun) -> QuasiRational {
    QuasiRational::from_ratfun(f.clone())
}

/// `d/dx [Wr[pi_i, pi_j] p W / (lambda_j - lambda_i)] = pi_i pi_j W`; for
/// class D the bracket must also vanish at `x = -1`.
pub fn check_orthogonality(fam: &ExceptionalFamily, i: i64, j: i64) -> Verdict {
    if i == j {
        return Verdict::fail("orthogonality needs two distinct indices");
    }
    let (fi, fj) = match (pi_or_fail(fam, i), pi_or_fail(fam, j)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(v), _) | (_, Err(v)) => return v,
    };
    let (li, lj) = (fam.op.eigenvalue(1, i), fam.op.eigenvalue(1, j));
    if li == lj {
        return Verdict::fail(format!("pi_{i} and pi_{j} share the eigenvalue {}", fmt_q(&li)));
    }
    let w = fam.op.weight();
    let wr = &(&fi * &fj.derivative()) - &(&fi.derivative() * &fj);
    let p = RatFun::from_poly(Poly::from_i64(&[-1, 0, 1]));
    let prim = qr(&(&wr * &p).scale(&(&lj - &li).recip())).mul(&w);
    let integrand = qr(&(&fi * &fj)).mul(&w);
    let diff = prim.derivative().sub(&integrand);
    match diff {
        Ok(d) if d.is_zero() => {}
        Ok(d) => return Verdict::fail(format!("<pi_{i}, pi_{j}>: derivative residual {}", d.to_string_x())),
        Err(e) => return Verdict::fail(format!("<pi_{i}, pi_{j}>: {e}")),
    }
    if fam.tag() == ClassTag::D {
        match prim.eval(&-Rational::one()) {
            Some(v) if v.is_zero() => {}
            Some(v) => return Verdict::fail(format!("<pi_{i}, pi_{j}>: the primitive is {} at x = -1", fmt_q(&v))),
            None => return Verdict::fail(format!("<pi_{i}, pi_{j}>: the primitive has a pole at x = -1")),
        }
    }
    Verdict::ok(format!("<pi_{i}, pi_{j}> = 0 via the Wronskian primitive"))
}

/// The function whose formal integral is the base constant.
fn base_density(base: NormBase, alpha: &Rational, beta: &Rational) -> QuasiRational {
    match base {
        NormBase::Nu => QuasiRational::endpoint(alpha.clone(), beta.clone()),
        NormBase::NuReflected => QuasiRational::endpoint(alpha.clone(), -alpha.clone() - q(1)),
    }
}

/// Formal value at an endpoint of `r (1-x)^A (1+x)^B`: zero for a
/// non-integer or positive exponent at that endpoint, the rational value
/// for exponent zero, and an error when the value is infinite or irrational.
fn endpoint_value(f: &QuasiRational, at_plus: bool) -> Result<Rational, String> {
    if f.is_zero() {
        return Ok(Rational::zero());
    }
    let (here, there) = if at_plus { (f.a_exp(), f.b_exp()) } else { (f.b_exp(), f.a_exp()) };
    if !is_int(here) || here.is_positive() {
        return Ok(Rational::zero());
    }
    if here.is_negative() {
        return Err("the primitive diverges at an endpoint".into());
    }
    let e = as_i64(there).ok_or("the endpoint value of the primitive is irrational")?;
    let x = if at_plus { Rational::one() } else { -Rational::one() };
    let r = f.r().eval(&x).ok_or("the primitive has a pole at an endpoint")?;
    Ok(r * qpow(&q(2), e))
}

/// Whether `g` has a quasi-rational primitive whose formal integral over
/// `[-1, 1]` vanishes.
fn formal_integral_vanishes(g: &QuasiRational) -> Result<(), String> {
    let prim = quasi_antiderivative(g).map_err(|e| e.to_string())?;
    match prim.derivative().sub(g) {
        Ok(d) if d.is_zero() => {}
        _ => return Err("the computed primitive does not differentiate back".into()),
    }
    let v = endpoint_value(&prim, true)? - endpoint_value(&prim, false)?;
    if v.is_zero() {
        Ok(())
    } else {
        Err(format!("the formal integral equals {}", fmt_q(&v)))
    }
}

/// Whether `(pi^2 - coeff * b) W` has vanishing formal integral, where `b`
/// is the density of the base constant. This certifies `nu = coeff * base`.
pub fn check_norm_value(op: &OperatorRG, f: &RatFun, norm: &NormValue) -> Verdict {
    let w = op.weight();
    let g = qr(&(f * f)).mul(&w);
    let g = if norm.coeff.is_zero() {
        Ok(g)
    } else {
        g.sub(&base_density(norm.base, &op.alpha, &op.beta).scale(&norm.coeff))
    };
    let g = match g {
        Ok(g) => g,
        Err(e) => return Verdict::fail(format!("integrand: {e}")),
    };
    match formal_integral_vanishes(&g) {
        Ok(()) => Verdict::ok(format!("nu = {} * {}", fmt_q(&norm.coeff), norm.base.name())),
        Err(e) => Verdict::fail(format!("nu = {} * {} is not certified: {e}", fmt_q(&norm.coeff), norm.base.name())),
    }
}

fn negative_integer(x: &Rational) -> bool {
    is_int(x) && x.is_negative()
}

/// Certify the family's claimed norm of `pi_i`.
pub fn check_norm(fam: &ExceptionalFamily, i: i64) -> Result<Verdict, VerifyError> {
    let (al, be) = (&fam.op.alpha, &fam.op.beta);
    if negative_integer(al) || negative_integer(be) {
        return Err(VerifyError::UnsupportedParameters(format!(
            "alpha = {}, beta = {} include a negative integer",
            fmt_q(al),
            fmt_q(be)
        )));
    }
    let f = match pi_or_fail(fam, i) {
        Ok(f) => f,
        Err(v) => return Ok(v),
    };
    let norm = match fam.norm(i) {
        Ok(n) => n,
        Err(e) => return Ok(Verdict::fail(format!("nu_{i} could not be computed: {e}"))),
    };
    let v = check_norm_value(&fam.op, &f, &norm);
    Ok(Verdict {
        pass: v.pass,
        witness: format!("pi_{i}: {}", v.witness),
    })
}

/// The three ingredients of regularity and the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    /// `alpha > -1` and `beta > -1`.
    pub params_ok: bool,
    /// `tau` has no root in `[-1, 1]`.
    pub tau_ok: bool,
    /// Every norm up to `bound` is positive.
    pub norms_ok: bool,
    /// Largest index whose norm was inspected; beyond it every factor of the
    /// norm coefficient is positive.
    pub bound: i64,
    pub regular: bool,
    pub verdict: Verdict,
}

/// Largest index of any parameter set of the family.
fn max_param_index(fam: &ExceptionalFamily) -> i64 {
    let p = &fam.params;
    p.k1.iter()
        .chain(&p.k2)
        .chain(&p.k3)
        .chain(&p.k4)
        .chain(&p.k)
        .chain(&p.l)
        .chain(p.l1.keys())
        .chain(&p.l3)
        .chain(&p.l4)
        .copied()
        .max()
        .unwrap_or(0)
}

/// Regularity: `alpha, beta > -1`, `tau` free of roots on `[-1, 1]`, and all
/// formal norms positive. Norms are inspected for `i <= B` with
/// `B = max parameter index + ceil(|alpha| + |beta|) + 2`.
pub fn check_regularity(fam: &ExceptionalFamily) -> RegularityReport {
    let (al, be) = (&fam.op.alpha, &fam.op.beta);
    let params_ok = al > &q(-1) && be > &q(-1);
    let roots = sturm_roots_in_interval(fam.tau(), &q(-1), &q(1));
    let tau_ok = roots == 0;
    let bound = max_param_index(fam) + ceil_i64(&(al.abs() + be.abs())) + 2;
    let mut bad: Option<String> = None;
    let lo = fam.window(1).first().copied().unwrap_or(0);
    for i in (lo..=bound).filter(|&i| fam.contains(i)) {
        match fam.norm(i) {
            Ok(n) if n.coeff.is_positive() && n.base == NormBase::Nu => {}
            Ok(n) => {
                bad = Some(format!("nu_{i} = {} * {}", fmt_q(&n.coeff), n.base.name()));
                break;
            }
            Err(e) => {
                bad = Some(format!("nu_{i} could not be computed: {e}"));
                break;
            }
        }
    }
    let norms_ok = bad.is_none();
    let regular = params_ok && tau_ok && norms_ok;
    let mut notes = Vec::new();
    if !params_ok {
        notes.push(format!("alpha = {}, beta = {} not both > -1", fmt_q(al), fmt_q(be)));
    }
    if !tau_ok {
        notes.push(format!("tau has {roots} root(s) in [-1,1]"));
    }
    if let Some(b) = bad {
        notes.push(format!("non-positive norm {b}"));
    }
    let verdict = if regular {
        Verdict::ok(format!("regular (norms checked up to i = {bound})"))
    } else {
        Verdict::fail(format!("irregular: {}", notes.join("; ")))
    };
    RegularityReport {
        params_ok,
        tau_ok,
        norms_ok,
        bound,
        regular,
        verdict,
    }
}

/// Membership of every index in `lo..=hi` of each type in the family's index
/// sets, compared with the typed eigenfunctions found directly.
pub fn check_index_sets(fam: &ExceptionalFamily, lo: i64, hi: i64) -> Verdict {
    for iota in 1..=4u8 {
        let set = fam.index_sets().total(iota);
        for k in lo..=hi {
            let claimed = set.contains(k);
            let found = has_typed_index(&fam.op, iota, k);
            if claimed != found {
                return Verdict::fail(format!(
                    "type {iota} index {k}: the family {} it, the operator {} it",
                    if claimed { "lists" } else { "omits" },
                    if found { "has" } else { "lacks" }
                ));
            }
        }
    }
    Verdict::ok(format!("typed index sets agree on [{lo}, {hi}]"))
}

/// The spectral diagram of an operator read off its typed eigenfunctions on
/// the positions `lo..=hi`.
pub fn diagram_of_operator(op: &OperatorRG, lo: i64, hi: i64) -> SpectralDiagram {
    let tag = ClassTag::classify(&op.alpha, &op.beta);
    SpectralDiagram::from_membership(tag, op.alpha.clone(), op.beta.clone(), op.eps.clone(), lo, hi, |iota, k| {
        has_typed_index(op, iota, k)
    })
}

/// Whether `after` differs from `before`, realigned by a type-`iota` step,
/// in exactly one label, by a change in the class flip alphabet.
pub fn check_flip(before: &SpectralDiagram, iota: u8, after: &SpectralDiagram) -> Verdict {
    let moved = before.realigned(iota);
    if moved.alpha != after.alpha || moved.beta != after.beta {
        return Verdict::fail(format!(
            "parameters after the step are ({}, {}), expected ({}, {})",
            fmt_q(&after.alpha),
            fmt_q(&after.beta),
            fmt_q(&moved.alpha),
            fmt_q(&moved.beta)
        ));
    }
    let changes = moved.changes(after);
    match changes.as_slice() {
        [c] if c.k != i64::MAX => {
            if is_flip(before.tag, iota, c.before, c.after) {
                Verdict::ok(format!("row {} cell {}: {} -> {}", c.row.name(), c.k, c.before, c.after))
            } else {
                Verdict::fail(format!(
                    "row {} cell {}: {} -> {} is not a type-{iota} flip of class {}",
                    c.row.name(),
                    c.k,
                    c.before,
                    c.after,
                    before.tag
                ))
            }
        }
        [] => Verdict::fail("the diagrams do not differ"),
        cs => Verdict::fail(format!(
            "{} label changes: {}",
            cs.len(),
            cs.iter()
                .map(|c| format!("{}@{} {}->{}", c.row.name(), c.k, c.before, c.after))
                .collect::<Vec<_>>()
                .join(", ")
        )),
    }
}

/// `check_flip` on the encoded diagrams of two families.
pub fn check_flip_families(before: &ExceptionalFamily, iota: u8, after: &ExceptionalFamily) -> Verdict {
    let d = |f: &ExceptionalFamily| {
        SpectralDiagram::from_index_sets(f.tag(), f.op.alpha.clone(), f.op.beta.clone(), f.op.eps.clone(), f.index_sets())
    };
    check_flip(&d(before), iota, &d(after))
}

/// One RDT step of each type from the family's operator, at the first index
/// of that type found on `[-w, w]`, checked against the diagram read off the
/// transformed operator. Types without an index in range are skipped, and so
/// are steps to or from `alpha = 0` or `beta = 0`, where two types share the
/// same gauge factor and typed membership is ambiguous.
pub fn check_operator_flips(op: &OperatorRG, w: i64) -> Verdict {
    let ambiguous = |al: &Rational, be: &Rational| al.is_zero() || be.is_zero();
    if ambiguous(&op.alpha, &op.beta) {
        return Verdict::ok("skipped: typed labels are ambiguous at alpha = 0 or beta = 0");
    }
    let before = diagram_of_operator(op, -w, w);
    let mut done = 0;
    for iota in 1..=4u8 {
        let (_, ah, bh, _) = step_table(iota, &op.alpha, &op.beta);
        if ambiguous(&ah, &bh) {
            continue;
        }
        let Some(k) = (-w..=w).find(|&k| has_typed_index(op, iota, k)) else { continue };
        let step = match rdt_step(op, iota, k) {
            Ok(s) => s,
            Err(e) => return Verdict::fail(format!("type {iota} step at {k}: {e}")),
        };
        let after = diagram_of_operator(&step.to, -w - 2, w + 2);
        let v = check_flip(&before, iota, &after);
        if !v.pass {
            return Verdict::fail(format!("type {iota} step at {k}: {}", v.witness));
        }
        done += 1;
    }
    Verdict::ok(format!("{done} single-step flips agree with the transformed operators"))
}

/// Run the named checks over the first `window` indices.
pub fn run_checks(fam: &ExceptionalFamily, window: usize, checks: &[&str]) -> Vec<(String, Verdict)> {
    let idx = fam.window(window);
    let mut out = Vec::new();
    for &c in checks {
        let v = match c {
            "eigen" => Verdict::all(idx.iter().map(|&i| check_eigen(fam, i)), "eigen"),
            "ortho" => Verdict::all(
                idx.iter()
                    .enumerate()
                    .flat_map(|(x, &i)| idx[x + 1..].iter().map(move |&j| (i, j)))
                    .map(|(i, j)| check_orthogonality(fam, i, j)),
                "orthogonality",
            ),
            "norm" => Verdict::all(
                idx.iter().map(|&i| match check_norm(fam, i) {
                    Ok(v) => v,
                    Err(e) => Verdict::fail(e.to_string()),
                }),
                "norm",
            ),
            "degree" => {
                let want = crate::diagrams::degree_formula(&fam.params);
                let got = fam.tau().deg_i64();
                if want == got {
                    Verdict::ok(format!("deg tau = {got}"))
                } else {
                    Verdict::fail(format!("deg tau = {got}, the class formula gives {want}"))
                }
            }
            "regularity" => check_regularity(fam).verdict,
            "flips" => check_operator_flips(&fam.op, 3),
            "index" => {
                let lo = idx.first().copied().unwrap_or(0).min(0) - 2;
                let hi = idx.last().copied().unwrap_or(0);
                check_index_sets(fam, lo, hi)
            }
            other => Verdict::fail(format!("unknown check {other}")),
        };
        out.push((c.to_string(), v));
    }
    out
}

/// Names accepted by [`run_checks`].
pub const CHECK_NAMES: &[&str] = &["eigen", "ortho", "norm", "regularity", "flips", "degree", "index"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build;
    use crate::diagrams::DiagramParams;
    use crate::exactmath::rational::qf;

    #[test]
    fn classical_checks_and_negative_controls() {
        let fam = build(&DiagramParams::classical(qf(1, 2), qf(1, 2))).unwrap();
        assert!(check_eigen(&fam, 3).pass);
        assert!(check_orthogonality(&fam, 0, 1).pass);
        let v = check_norm(&fam, 1).unwrap();
        assert!(v.pass, "{v}");
        assert_eq!(fam.norm(1).unwrap().coeff, qf(1, 4));
        let f = fam.pi(1).unwrap();
        let wrong = NormValue {
            coeff: qf(1, 3),
            base: NormBase::Nu,
        };
        assert!(!check_norm_value(&fam.op, &f, &wrong).pass);
        let f2 = fam.pi(2).unwrap();
        let bad = &f2 + &RatFun::one();
        assert!(!check_eigen_function(&fam.op, &bad, &fam.op.eigenvalue(1, 2)).pass);
        assert!(check_regularity(&fam).regular);
    }

    #[test]
    fn chebyshev_family_is_irregular() {
        let fam = build(&DiagramParams::c_class(qf(1, 2), qf(1, 2), &[], &[], &[1], &[])).unwrap();
        for i in 0..=3 {
            assert!(check_norm(&fam, i).unwrap().pass);
        }
        assert_eq!(fam.norm(0).unwrap().coeff, qf(-5, 3));
        let r = check_regularity(&fam);
        assert!(!r.regular && !r.norms_ok && !r.tau_ok);
    }

    #[test]
    fn class_d_norms_and_orthogonality() {
        for t in [q(1), q(-1), qf(3, 2)] {
            let fam = build(&DiagramParams::d(q(0), q(0), &[1], &[(0, t.clone())], &[], &[])).unwrap();
            for i in fam.window(5) {
                let v = check_norm(&fam, i).unwrap();
                assert!(v.pass, "t = {t}: {v}");
            }
            assert!(check_orthogonality(&fam, -2, 1).pass);
            assert_eq!(fam.norm(-2).unwrap().coeff, -q(3) * &t / (&t + q(2)));
        }
    }

    #[test]
    fn index_sets_match_the_operator() {
        let fam = build(&DiagramParams::d(q(0), q(0), &[1], &[(0, q(1))], &[], &[])).unwrap();
        let v = check_index_sets(&fam, -4, 4);
        assert!(v.pass, "{v}");
    }

    #[test]
    fn operator_steps_flip_one_label() {
        let op = OperatorRG::classical(qf(1, 3), qf(1, 5));
        let v = check_operator_flips(&op, 3);
        assert!(v.pass, "{v}");
        let fam = build(&DiagramParams::g(qf(1, 3), qf(1, 5), &[2], &[1], &[])).unwrap();
        let v = check_operator_flips(&fam.op, 3);
        assert!(v.pass, "{v}");
    }
}
