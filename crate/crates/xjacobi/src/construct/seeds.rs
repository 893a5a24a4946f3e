//! Classes G, B, C and CB: one Wronskian of classical seed functions.
//!
//! With seeds `phi_1(K1), phi_2(K2), phi_3(K3), phi_4(K4)` of `T(a,b)`,
//! `tau = (1-x)^((p2+p3)(p1+p4+a)) (1+x)^((p2+p4)(p1+p3+b)) Wr[seeds]` and
//! `pi_i = (x-1)^(p2+p3) (1+x)^(p2+p4) Wr[seeds, phi_1(u(z))] / (c(z) Wr[seeds])`
//! with `z = i + p1 - p2`, `c(z) = prod (z - k)` over
//! `K1 u (K2-a-b) u (K3-a) u (K4-b)`, and `u(z) = max(z, -z-1-a-b)` in the
//! classes where `a+b` is an integer (`u(z) = z` otherwise).

use num_traits::{One, Zero};

use crate::classical::{lambda, qr_eigenfunction, ClassTag, Leading, NormBase, NormValue};
use crate::diagrams::{DiagramParams, Encoded};
use crate::exactmath::rational::{as_i64, q, Rational};
use crate::exactmath::{wronskian, Poly, QuasiRational, RatFun};

use super::{as_poly, as_ratfun, check_distinct_eigenvalues, lin, ConstructError};

pub(crate) struct SeedGenerator {
    a: Rational,
    b: Rational,
    /// Whether `a + b` is an integer, so that type-1 indices reflect.
    reflect12: bool,
    p: [i64; 4],
    seeds: Vec<QuasiRational>,
    wr: QuasiRational,
    ktilde: Vec<Rational>,
}

impl SeedGenerator {
    pub(crate) fn build(params: &DiagramParams, enc: &Encoded) -> Result<(Poly, SeedGenerator), ConstructError> {
        let (a, b) = (params.a.clone(), params.b.clone());
        let sets = [&params.k1, &params.k2, &params.k3, &params.k4];
        let p = sets.map(|s| s.len() as i64);
        let mut seeds = Vec::new();
        let mut labelled = Vec::new();
        let mut ktilde = Vec::new();
        for (idx, set) in sets.iter().enumerate() {
            let iota = idx as u8 + 1;
            for &k in set.iter() {
                seeds.push(qr_eigenfunction(iota, k, &a, &b)?);
                labelled.push((iota, k, lambda(iota, k, &a, &b)));
                ktilde.push(match iota {
                    1 => q(k),
                    2 => q(k) - &a - &b,
                    3 => q(k) - &a,
                    _ => q(k) - &b,
                });
            }
        }
        check_distinct_eigenvalues(&labelled)?;
        let wr = wronskian(&seeds)?;
        if wr.is_zero() {
            return Err(ConstructError::Internal("the seed Wronskian vanishes".into()));
        }
        let ea = q((p[1] + p[2]) * (p[0] + p[3])) + q(p[1] + p[2]) * &a;
        let eb = q((p[1] + p[3]) * (p[0] + p[2])) + q(p[1] + p[3]) * &b;
        let tau = wr.mul(&QuasiRational::endpoint(ea, eb));
        let tau = as_poly(&as_ratfun(&tau, "tau")?, "tau")?;
        let reflect12 = matches!(enc.tag, ClassTag::C | ClassTag::CB);
        Ok((
            tau,
            SeedGenerator {
                a,
                b,
                reflect12,
                p,
                seeds,
                wr,
                ktilde,
            },
        ))
    }

    fn z(&self, i: i64) -> i64 {
        i + self.p[0] - self.p[1]
    }

    /// `u(z)`: the classical degree of the type-1 function that is transformed.
    fn u(&self, z: i64) -> Result<i64, ConstructError> {
        if !self.reflect12 {
            return Ok(z);
        }
        let s = as_i64(&(&self.a + &self.b)).expect("integer a+b");
        Ok(z.max(-z - 1 - s))
    }

    pub(crate) fn pi(&self, i: i64) -> Result<RatFun, ConstructError> {
        let z = self.z(i);
        let n = self.u(z)?;
        if n < 0 {
            return Err(ConstructError::Internal(format!("index {i} maps to classical degree {n}")));
        }
        let y = qr_eigenfunction(1, n, &self.a, &self.b)?;
        let mut fs = self.seeds.clone();
        fs.push(y);
        let w = wronskian(&fs)?.div(&self.wr);
        let (e3, e4) = (self.p[1] + self.p[2], self.p[1] + self.p[3]);
        let mut c: Rational = self.ktilde.iter().map(|k| q(z) - k).product();
        if c.is_zero() {
            return Err(ConstructError::Internal(format!("divisor vanishes at index {i}")));
        }
        if e3 % 2 != 0 {
            c = -c;
        }
        let f = as_ratfun(&w.mul(&QuasiRational::endpoint(q(e3), q(e4))).scale(&c.recip()), "pi")?;
        if n != z {
            // The divisor fixes the scale only for unreflected indices.
            let l = f.lead();
            return Ok(f.scale(&l.recip()));
        }
        Ok(f)
    }

    pub(crate) fn norm(&self, i: i64, enc: &Encoded) -> Result<NormValue, ConstructError> {
        let z = q(self.z(i));
        let s = &self.a + &self.b;
        let vertex = (q(2) * &z + &s + q(1)).is_zero();
        if enc.sets.minus(1).contains(i) && !vertex {
            return Ok(NormValue::zero(NormBase::for_params(&enc.alpha, &enc.beta)));
        }
        let mut extra = Leading::one();
        for k in &self.ktilde {
            let kstar = -k - &s - Rational::one();
            extra = extra.mul(&lin(&z, &kstar)).mul(&lin(&z, k).recip());
        }
        if vertex {
            extra = extra.mul(&Leading {
                coef: Rational::new(1.into(), 2.into()),
                order: 0,
            });
        }
        Ok(NormValue::from_nu(&z, &self.a, &self.b, &enc.alpha, &enc.beta, &extra)?)
    }
}
