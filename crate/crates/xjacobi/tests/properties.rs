//! Randomized properties of the exact arithmetic, the classical polynomials
//! and the constructed families.

mod common;

use proptest::prelude::*;

use common::{random_params, rng, CLASSES};
use xjacobi::classical::monic_jacobi;
use xjacobi::construct::build;
use xjacobi::darboux::OperatorRG;
use xjacobi::exactmath::rational::{fmt_q, parse_q, q, qf, Rational};
use xjacobi::exactmath::{wronskian_ratfun, Poly, RatFun};
use xjacobi::verify::{check_eigen, check_eigen_function, check_orthogonality};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..8).prop_map(|(n, d)| qf(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 1..=max_deg + 1).prop_map(Poly::new)
}

fn ratfun(p: &Poly) -> RatFun {
    RatFun::from_poly(p.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_print_and_parse_back(x in rational()) {
        prop_assert_eq!(parse_q(&fmt_q(&x)), Some(x));
    }

    #[test]
    fn wronskian_is_alternating(f in poly(5), g in poly(5)) {
        let fg = wronskian_ratfun(&[ratfun(&f), ratfun(&g)]);
        let gf = wronskian_ratfun(&[ratfun(&g), ratfun(&f)]);
        prop_assert_eq!(fg, gf.scale(&q(-1)));
        prop_assert!(wronskian_ratfun(&[ratfun(&f), ratfun(&f)]).is_zero());
    }

    #[test]
    fn wronskian_scales_with_a_common_factor(f in poly(4), g in poly(4), h in poly(3)) {
        let (fh, gh) = (&f * &h, &g * &h);
        let lhs = wronskian_ratfun(&[ratfun(&fh), ratfun(&gh)]);
        let rhs = &wronskian_ratfun(&[ratfun(&f), ratfun(&g)]) * &ratfun(&(&h * &h));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn classical_polynomials_are_eigenfunctions(n in 0i64..7, a in rational(), b in rational()) {
        prop_assume!(a > q(-1) && b > q(-1));
        let op = OperatorRG::classical(a.clone(), b.clone());
        let p = monic_jacobi(n, &a, &b).unwrap();
        prop_assert_eq!(p.deg_i64(), n);
        let v = check_eigen_function(&op, &ratfun(&p), &op.eigenvalue(1, n));
        prop_assert!(v.pass, "{}", v);
    }

    #[test]
    fn legendre_polynomials_are_orthogonal(i in 0i64..7, j in 0i64..7) {
        prop_assume!(i != j);
        let (pi, pj) = (monic_jacobi(i, &q(0), &q(0)).unwrap(), monic_jacobi(j, &q(0), &q(0)).unwrap());
        let prim = (&pi * &pj).integral();
        prop_assert_eq!(prim.eval(&q(1)), prim.eval(&q(-1)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_families_satisfy_their_eigen_equations(seed in any::<u64>(), class in 0usize..CLASSES.len()) {
        let mut r = rng(seed);
        let p = random_params(&mut r, CLASSES[class], 2);
        let fam = match build(&p) {
            Ok(f) => f,
            Err(e) => return Err(TestCaseError::reject(e.to_string())),
        };
        let idx = fam.window(4);
        for &i in &idx {
            let v = check_eigen(&fam, i);
            prop_assert!(v.pass, "{:?} index {}: {}", p, i, v);
        }
        let v = check_orthogonality(&fam, idx[0], idx[1]);
        prop_assert!(v.pass, "{:?}: {}", p, v);
    }
}
