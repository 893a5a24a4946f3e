//! Acceptance suite: one pass/fail line per criterion, all comparisons exact.
//!
//! Run with `cargo test --test acceptance`. The process exits with status 1
//! if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::Rng;

use common::{max_index, random_canonical, random_params, rng, CLASSES};
use xjacobi::classical::{jacobi_p, monic_jacobi, norm_ratio, ClassTag};
use xjacobi::construct::{build, ConstructError};
use xjacobi::darboux::{
    cdt_step, cdt_with_seed, para_jacobi_step, rdt_step, step_table, typed_eigenfunction, has_typed_index, OperatorRG,
};
use xjacobi::diagrams::{decode, degree_formula, encode, is_flip, DiagramParams, Label, ParamError, SpectralDiagram};
use xjacobi::exactmath::rational::{q, qf, qpow, Rational};
use xjacobi::exactmath::{wronskian_ratfun, Poly, RatFun};
use xjacobi::verify::{check_eigen, check_eigen_function, check_flip, check_norm, check_regularity, diagram_of_operator};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {:.2} s, limit {:.0} s", t.as_secs_f64(), limit.as_secs_f64()))
}

fn deformed_family(t0: Rational) -> DiagramParams {
    DiagramParams::d(q(0), q(0), &[1], &[(0, t0)], &[], &[])
}

fn rf(coeffs: &[i64]) -> RatFun {
    RatFun::from_poly(Poly::from_i64(coeffs))
}

/// Build, treating parameter rejections as a reason to draw again.
fn build_or_redraw(p: &DiagramParams) -> Result<Option<xjacobi::construct::ExceptionalFamily>, String> {
    match build(p) {
        Ok(f) => Ok(Some(f)),
        Err(ConstructError::Param(ParamError::InvalidParams(_))) => Ok(None),
        Err(e) => Err(format!("{p:?}: {e}")),
    }
}

fn c1_golden_vectors() -> Outcome {
    let start = Instant::now();
    let fam = build(&deformed_family(q(1))).map_err(|e| e.to_string())?;
    ensure(fam.tau() == &Poly::from_i64(&[1, 4, 1]), || format!("tau = {}", fam.tau().to_string_x()))?;
    let x = RatFun::x();
    let tau = RatFun::from_poly(fam.tau().clone());
    let sq = &rf(&[-1, 0, 1]) * &rf(&[-1, 0, 1]);
    let xp1sq = rf(&[1, 2, 1]);
    let inv = x.recip();
    // Near misses: the tau terms of pi_-2, pi_1 and pi_3 without the 1/x
    // factor, with -x/7 in pi_3. None of them is an eigenfunction.
    let near_misses: Vec<(i64, RatFun)> = vec![
        (-2, &inv - &(&xp1sq / &tau)),
        (1, &(&x + &inv.scale(&qf(1, 3))) - &(&sq / &tau).scale(&qf(1, 3))),
        (3, &(&(&(&x * &x) * &x) - &x.scale(&qf(1, 7))) - &(&inv.scale(&qf(1, 35)) + &(&(&sq * &rf(&[-1, 0, 7])) / &tau).scale(&qf(1, 35)))),
    ];
    let xtau = &tau * &x;
    let expected: Vec<(i64, RatFun)> = vec![
        (-2, &inv - &(&xp1sq / &xtau)),
        (1, &(&x + &inv.scale(&qf(1, 3))) - &(&sq / &xtau).scale(&qf(1, 3))),
        (2, &(&x * &x) - &(&sq / &tau).scale(&qf(1, 4))),
        (3, &(&(&(&x * &x) * &x) - &x.scale(&qf(2, 7))) - &(&inv.scale(&qf(1, 35)) + &(&(&sq * &rf(&[-1, 0, 7])) / &xtau).scale(&qf(1, 35)))),
    ];
    for (i, want) in &expected {
        let got = fam.pi(*i).map_err(|e| e.to_string())?;
        let ratio = (&got / want).as_constant();
        ensure(ratio.is_some(), || format!("pi_{i} = {} is not a multiple of {}", got.to_string_x(), want.to_string_x()))?;
    }
    let mut rejected = 0;
    for (i, f) in &near_misses {
        if !check_eigen_function(&fam.op, f, &fam.op.eigenvalue(1, *i)).pass {
            rejected += 1;
        }
    }
    ensure(rejected == near_misses.len(), || "a form without the 1/x factor passed the eigen check".into())?;
    within(start, Duration::from_secs(1))?;
    Ok("tau = x^2+4x+1; pi_-2, pi_1, pi_2, pi_3 match; the 3 near misses lacking 1/x fail the eigen check".into())
}

fn c2_routes_commute() -> Outcome {
    let start = Instant::now();
    let op = OperatorRG::classical(q(0), q(0));
    for t0 in [q(1), q(-1), qf(3, 2)] {
        let route1 = rdt_step(cdt_step(&op, 1, 0, &t0).map_err(|e| e.to_string())?.to(), 1, 1)
            .map_err(|e| e.to_string())?
            .to;
        let first = rdt_step(&op, 1, 1).map_err(|e| e.to_string())?.to;
        let phi = typed_eigenfunction(&first, 1, -1).ok_or("no type-1 index -1 after the first step")?;
        let route2 = cdt_with_seed(&first, &phi, 1, &(q(-2) * &t0)).map_err(|e| e.to_string())?.to().clone();
        ensure(route1.gauge_equal(&route2), || format!("t0 = {t0}: {route1:?} vs {route2:?}"))?;
        let want = Poly::new(vec![q(1), q(2) + q(2) * &t0, q(1)]);
        ensure(route1.tau.monic() == want, || format!("t0 = {t0}: tau = {}", route1.tau.to_string_x()))?;
    }
    within(start, Duration::from_secs(2))?;
    Ok("t0 in {1, -1, 3/2} gauge-equal, tau = (x+1)^2+2x t0".into())
}

fn c3_chebyshev_norms() -> Outcome {
    let fam = build(&DiagramParams::c_class(qf(1, 2), qf(1, 2), &[], &[], &[1], &[])).map_err(|e| e.to_string())?;
    ensure(fam.tau() == &Poly::new(vec![qf(-1, 2), q(1)]), || format!("tau = {}", fam.tau().to_string_x()))?;
    ensure(fam.op.alpha == qf(-1, 2) && fam.op.beta == qf(3, 2), || "alpha, beta differ from -1/2, 3/2".into())?;
    for i in 0..=5i64 {
        let v = check_norm(&fam, i).map_err(|e| e.to_string())?;
        ensure(v.pass, || v.to_string())?;
        let want = qpow(&qf(1, 4), i) * q(2 * i + 5) / q(3 * (2 * i - 1));
        let got = fam.norm(i).map_err(|e| e.to_string())?.coeff;
        ensure(got == want, || format!("coeff(nu_{i}) = {got}, expected {want}"))?;
    }
    let r = check_regularity(&fam);
    ensure(!r.regular && !r.norms_ok, || format!("regularity: {}", r.verdict))?;
    Ok(format!("coeff(nu_i) = 4^-i (2i+5)/(3(2i-1)) for i = 0..5 certified; {}", r.verdict.witness))
}

fn c4_classical_norms() -> Outcome {
    let fam = build(&DiagramParams::classical(qf(1, 2), qf(1, 2))).map_err(|e| e.to_string())?;
    for i in 0..=6i64 {
        let v = check_norm(&fam, i).map_err(|e| e.to_string())?;
        ensure(v.pass, || v.to_string())?;
        let got = fam.norm(i).map_err(|e| e.to_string())?.coeff;
        ensure(got == qpow(&qf(1, 4), i), || format!("coeff(nu_{i}) = {got}"))?;
    }
    let p1 = monic_jacobi(1, &q(0), &q(0)).map_err(|e| e.to_string())?;
    let integral = |p: &Poly| {
        let f = p.integral();
        f.eval(&q(1)) - f.eval(&q(-1))
    };
    let brute = integral(&(&p1 * &p1)) / integral(&Poly::one());
    let ratio = norm_ratio(1, &q(0), &q(0)).map_err(|e| e.to_string())?;
    ensure(ratio == qf(1, 3) && brute == ratio, || format!("norm_ratio = {ratio}, integral = {brute}"))?;
    Ok("coeff(nu_i) = 4^-i for a = b = 1/2, i = 0..6; norm_ratio(1,0,0) = 1/3 = Legendre integral".into())
}

fn c5_eigen_suite() -> Outcome {
    let start = Instant::now();
    let mut r = rng(5);
    let mut done = Vec::new();
    for tag in CLASSES {
        let fam = loop {
            let p = random_params(&mut r, tag, 3);
            if let Some(f) = build_or_redraw(&p)? {
                break f;
            }
        };
        for i in fam.window(6) {
            let v = check_eigen(&fam, i);
            ensure(v.pass, || format!("{:?}: {v}", fam.params))?;
        }
        done.push(fam.params.describe());
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("window 6 passes for {}", done.join(", ")))
}

fn c6_degree_formulas() -> Outcome {
    let mut r = rng(6);
    let mut n = 0;
    for tag in CLASSES {
        let mut count = 0;
        while count < 10 {
            let p = random_params(&mut r, tag, 3);
            let Some(fam) = build_or_redraw(&p)? else { continue };
            let (got, want) = (fam.tau().deg_i64(), degree_formula(&p));
            ensure(got == want, || format!("{p:?}: deg tau = {got}, formula {want}"))?;
            count += 1;
            n += 1;
        }
    }
    Ok(format!("deg tau equals the class formula on {n} random sets"))
}

fn c7_roundtrip() -> Outcome {
    let mut r = rng(7);
    for n in 0..50 {
        let tag = CLASSES[n % CLASSES.len()];
        let p = random_canonical(&mut r, tag, 4);
        let (d, _) = encode(&p).map_err(|e| format!("{p:?}: {e}"))?;
        let back = decode(&d).map_err(|e| format!("{p:?}: {e}"))?;
        ensure(back == p, || format!("{p:?} decoded as {back:?}"))?;
        let reparsed = SpectralDiagram::parse(&d.render(8)).map_err(|e| e.to_string())?;
        ensure(reparsed == d, || format!("{p:?}: the rendered diagram does not parse back"))?;
    }
    // Hand-drawn diagrams, written with Unicode symbols and a truncated left
    // tail, for a class A family with b = 1/3 and a class B family with
    // a = b = 1/5.
    let drawn_a = "class A alpha=2 beta=19/3\nrow 1234 from -6: ...−−○−⊛−⊛○○...\n";
    let got = decode(&SpectralDiagram::parse(drawn_a).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let want = DiagramParams::a_class(q(0), qf(1, 3), &[2, 4], &[1, 3]);
    ensure(got == want, || format!("class A diagram decoded as {got:?}"))?;
    let drawn_b = "class B alpha=16/5 beta=6/5\nrow 12 from -4: ...××○××○○○...\nrow 34 from 0: −÷+÷+÷...\n";
    let got = decode(&SpectralDiagram::parse(drawn_b).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let want = DiagramParams::b_class(qf(1, 5), qf(1, 5), &[1, 2], &[0], &[2, 4]);
    ensure(got == want, || format!("class B diagram decoded as {got:?}"))?;
    Ok("50 random canonical sets roundtrip; drawn diagrams give K={2,4}, L={1,3} and K1={1,2}, K3={0}, K4={2,4}".into())
}

fn c8_flips() -> Outcome {
    let mut r = rng(8);
    let mut done = 0;
    let mut attempts = 0;
    while done < 20 {
        attempts += 1;
        if attempts > 400 {
            return Err(format!("only {done} usable steps in {attempts} draws"));
        }
        let tag = CLASSES[r.gen_range(0..CLASSES.len())];
        let p = random_params(&mut r, tag, 1);
        let Some(fam) = build_or_redraw(&p)? else { continue };
        let op = &fam.op;
        let w = max_index(&p).max(1) + 3;
        let iota = r.gen_range(1..=4u8);
        let (_, ah, bh, _) = step_table(iota, &op.alpha, &op.beta);
        let ambiguous = |x: &Rational| x == &q(0);
        if [&op.alpha, &op.beta, &ah, &bh].into_iter().any(ambiguous) {
            continue;
        }
        let ks: Vec<i64> = (-w..=w).filter(|&k| has_typed_index(op, iota, k)).collect();
        if ks.is_empty() {
            continue;
        }
        let k = ks[r.gen_range(0..ks.len())];
        let step = rdt_step(op, iota, k).map_err(|e| format!("{p:?} type {iota} index {k}: {e}"))?;
        let before = diagram_of_operator(op, -w, w);
        let after = diagram_of_operator(&step.to, -w - 2, w + 2);
        let v = check_flip(&before, iota, &after);
        ensure(v.pass, || format!("{p:?} type {iota} index {k}: {v}"))?;
        done += 1;
    }
    let w = 3;
    let para = para_jacobi_step(2, 2, 1, &q(3)).map_err(|e| e.to_string())?;
    let before = diagram_of_operator(&para.from, -w, w);
    let after = diagram_of_operator(&para.to, -w - 2, w + 2);
    let changes = before.realigned(2).changes(&after);
    ensure(changes.len() == 1, || format!("para-Jacobi step changed {} labels", changes.len()))?;
    let c = &changes[0];
    ensure(
        c.before.label == Label::Bullet && c.after.label == Label::Nabla && is_flip(ClassTag::D, 2, c.before, c.after),
        || format!("para-Jacobi step gave {} -> {}", c.before, c.after),
    )?;
    Ok(format!("20 random steps flip one label in the class alphabet; para-Jacobi step on T(2,2) gives {} -> {}", c.before.label.symbol(), c.after.label.symbol()))
}

fn c9_wronskian_laws() -> Outcome {
    let mut r = rng(9);
    for _ in 0..100 {
        let p = r.gen_range(1..=4usize);
        let mut degs: Vec<i64> = Vec::new();
        while degs.len() < p {
            let d = r.gen_range(0..=6);
            if !degs.contains(&d) {
                degs.push(d);
            }
        }
        let fs: Vec<Poly> = degs
            .iter()
            .map(|&d| {
                let mut cs: Vec<Rational> = (0..=d).map(|_| qf(r.gen_range(-9..=9), r.gen_range(1..=4))).collect();
                cs[d as usize] = qf(r.gen_range(1..=9) * if r.gen_bool(0.5) { 1 } else { -1 }, r.gen_range(1..=4));
                Poly::new(cs)
            })
            .collect();
        let wr = wronskian_ratfun(&fs.iter().cloned().map(RatFun::from_poly).collect::<Vec<_>>());
        let pp = p as i64;
        let want_deg = degs.iter().sum::<i64>() - pp * (pp - 1) / 2;
        let mut want_lc: Rational = fs.iter().map(|f| f.lead()).product();
        for i in 0..p {
            for j in i + 1..p {
                want_lc *= q(degs[j] - degs[i]);
            }
        }
        ensure(wr.degree() == want_deg, || format!("degrees {degs:?}: deg Wr = {}", wr.degree()))?;
        ensure(wr.lead() == want_lc, || format!("degrees {degs:?}: lead Wr = {}", wr.lead()))?;
    }
    Ok("degree and leading-coefficient laws hold on 100 random lists".into())
}

fn c10_primitive_steps() -> Outcome {
    let mut r = rng(10);
    for _ in 0..5 {
        let a = qf(r.gen_range(1..=20), r.gen_range(3..=7)) + qf(1, 11);
        let b = qf(r.gen_range(1..=20), r.gen_range(3..=7)) + qf(1, 13);
        let op = OperatorRG::classical(a.clone(), b.clone());
        let one = Poly::one();
        let table = [
            (1u8, OperatorRG::new(one.clone(), &a + q(1), &b + q(1), q(2) + &a + &b), q(0)),
            (2, OperatorRG::new(one.clone(), &a - q(1), &b - q(1), -a.clone() - &b), -a.clone() - &b),
            (3, OperatorRG::new(one.clone(), &a - q(1), &b + q(1), q(0)), -a.clone() * (&b + q(1))),
            (4, OperatorRG::new(one.clone(), &a + q(1), &b - q(1), q(0)), -b.clone() * (&a + q(1))),
        ];
        for (iota, want, lambda) in table {
            let st = rdt_step(&op, iota, 0).map_err(|e| e.to_string())?;
            ensure(st.to == want, || format!("(a,b) = ({a},{b}) type {iota}: {:?}", st.to))?;
            ensure(st.lambda == lambda, || format!("(a,b) = ({a},{b}) type {iota}: lambda = {}", st.lambda))?;
        }
    }
    Ok("all four primitive steps and eigenvalues reproduced for 5 random (a,b)".into())
}

fn c11_classical_identities() -> Outcome {
    for a in 1..=3i64 {
        for n in 0..=5i64 {
            let lhs = monic_jacobi(n + a, &q(-a), &qf(1, 3)).map_err(|e| e.to_string())?;
            let rhs = &Poly::new(vec![q(-1), q(1)]).pow(a as usize) * &monic_jacobi(n, &q(a), &qf(1, 3)).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("degeneration identity fails at a = {a}, n = {n}"))?;
        }
    }
    for (a, b, ks) in [(5i64, 1i64, vec![0i64]), (3, 2, vec![0, 1])] {
        for k in ks {
            let (qa, qb) = (q(a), q(b));
            let lhs = &(&Poly::new(vec![q(-1), q(1)]).pow(a as usize) * &jacobi_p(b - k - 1, &qa, &-qb.clone())).scale(&qpow(&q(2), b))
                - &(&Poly::new(vec![q(1), q(1)]).pow(b as usize) * &jacobi_p(a - k - 1, &-qa.clone(), &qb)).scale(&qpow(&q(2), a));
            let rhs = jacobi_p(k, &-qa, &-qb).scale(&(qpow(&q(2), a + b) * qpow(&q(-1), a)));
            ensure(lhs == rhs, || format!("three-term identity fails at (a,b,k) = ({a},{b},{k})"))?;
        }
    }
    Ok("degeneration identity for a = 1,2,3 (n <= 5, b = 1/3); three-term identity at (5,1) and (3,2)".into())
}

fn c12_regularity_window() -> Outcome {
    let mut seen = Vec::new();
    for t0 in [q(-3), q(-1), qf(-1, 2), qf(1, 2), q(1)] {
        let fam = build(&deformed_family(t0.clone())).map_err(|e| e.to_string())?;
        let r = check_regularity(&fam);
        let inside = t0 > q(-2) && t0 < q(0);
        ensure(r.regular == inside, || format!("t0 = {t0}: {}", r.verdict))?;
        seen.push(format!("{t0}:{}", if r.regular { "regular" } else { "irregular" }));
    }
    Ok(format!("regular exactly for t0 in (-2,0): {}", seen.join(" ")))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("class D golden vectors", c1_golden_vectors),
        ("confluent routes commute", c2_routes_commute),
        ("Chebyshev family norms", c3_chebyshev_norms),
        ("classical norm anchor", c4_classical_norms),
        ("eigen-equation suite", c5_eigen_suite),
        ("degree formulas", c6_degree_formulas),
        ("diagram roundtrip", c7_roundtrip),
        ("flip consistency", c8_flips),
        ("Wronskian laws", c9_wronskian_laws),
        ("primitive RDT table", c10_primitive_steps),
        ("classical identities", c11_classical_identities),
        ("regularity window", c12_regularity_window),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail} [{secs:.2} s]", n + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {why} [{secs:.2} s]", n + 1);
            }
        }
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
