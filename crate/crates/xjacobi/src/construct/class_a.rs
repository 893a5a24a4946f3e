//! Class A: `a` a nonnegative integer, `b` not an integer.
//!
//! Stage one removes the indices `L` from the spectrum with the incomplete
//! inner products `rho_ij = int pi_i pi_j (1-x)^a (1+x)^b`, integrated
//! termwise so that every `rho` carries the factor `(1+x)^(b+1)`:
//! `tau^ = (1+x)^(-q(q+b)) det R` and
//! `pi^_i = chi^(i+q; L) (1+x)^(-q) det A(i+q) / det R`, where
//! `R = [rho_{l_i l_j}]`, `A(n)` borders `R` with the row
//! `[pi_n, pi_l1, ...]` and the column `rho_{l_i n}`, and
//! `chi^(z; S) = prod_{k in S} (z-k*)/(z-k)` with `k* = -k-a-b-1`.
//! Stage two is a Wronskian of the stage-one functions with indices `K`:
//! `tau = tau^ Wr[pi^(K-q)]` and
//! `pi_i = Wr[pi^(K-q), pi^_{i+p}] / (prod_K (i+p+q-k) Wr[pi^(K-q)])`.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::classical::{monic_jacobi, Leading, NormValue};
use crate::diagrams::{DiagramParams, Encoded};
use crate::exactmath::rational::{q, Rational};
use crate::exactmath::{antiderivative_termwise, wronskian_ratfun, Poly, QRMatrix, QuasiRational, RatFun};

use super::{as_poly, as_ratfun, lin, ConstructError};

pub(crate) struct ClassAGenerator {
    a: Rational,
    b: Rational,
    k: Vec<i64>,
    l: Vec<i64>,
    /// `R = [rho_{l_i l_j}]`.
    r: Vec<Vec<QuasiRational>>,
    det_r: QuasiRational,
    seeds: Vec<RatFun>,
    wr: RatFun,
    hat_cache: Mutex<BTreeMap<i64, RatFun>>,
}

impl ClassAGenerator {
    pub(crate) fn build(params: &DiagramParams, _enc: &Encoded) -> Result<(Poly, ClassAGenerator), ConstructError> {
        let (a, b) = (params.a.clone(), params.b.clone());
        let k: Vec<i64> = params.k.iter().copied().collect();
        let l: Vec<i64> = params.l.iter().copied().collect();
        let mut g = ClassAGenerator {
            a,
            b,
            k,
            l,
            r: Vec::new(),
            det_r: QuasiRational::one(),
            seeds: Vec::new(),
            wr: RatFun::one(),
            hat_cache: Mutex::new(BTreeMap::new()),
        };
        g.r = g
            .l
            .iter()
            .map(|&li| g.l.iter().map(|&lj| g.rho(li, lj)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()?;
        g.det_r = QRMatrix::new(g.r.clone()).determinant()?;
        if g.det_r.is_zero() {
            return Err(ConstructError::Internal("det R vanishes".into()));
        }
        let qn = g.l.len() as i64;
        let hat_tau = g.det_r.mul(&QuasiRational::endpoint(Rational::zero(), -q(qn) * (q(qn) + &g.b)));
        let hat_tau = as_ratfun(&hat_tau, "stage-one tau")?;
        g.seeds = g.k.iter().map(|&k| g.hat_pi(k)).collect::<Result<_, _>>()?;
        g.wr = wronskian_ratfun(&g.seeds);
        if g.wr.is_zero() {
            return Err(ConstructError::Internal("the stage-two Wronskian vanishes".into()));
        }
        let tau = as_poly(&(&hat_tau * &g.wr), "tau")?;
        Ok((tau, g))
    }

    fn weight(&self) -> QuasiRational {
        QuasiRational::endpoint(self.a.clone(), self.b.clone())
    }

    fn classical(&self, n: i64) -> Result<QuasiRational, ConstructError> {
        Ok(QuasiRational::from_poly(monic_jacobi(n, &self.a, &self.b)?))
    }

    fn rho(&self, i: i64, j: i64) -> Result<QuasiRational, ConstructError> {
        let f = self.classical(i)?.mul(&self.classical(j)?).mul(&self.weight());
        Ok(antiderivative_termwise(&f)?)
    }

    fn chi_hat(&self, z: &Rational, set: &[i64]) -> Rational {
        let s = &self.a + &self.b;
        set.iter()
            .map(|&k| {
                let kstar = -q(k) - &s - Rational::one();
                (z - kstar) / (z - q(k))
            })
            .product()
    }

    /// The stage-one function with classical index `n` (that is, `pi^_{n-q}`).
    fn hat_pi(&self, n: i64) -> Result<RatFun, ConstructError> {
        if let Some(f) = self.hat_cache.lock().expect("cache lock").get(&n) {
            return Ok(f.clone());
        }
        let f = if self.l.is_empty() {
            RatFun::from_poly(monic_jacobi(n, &self.a, &self.b)?)
        } else {
            let mut rows = Vec::with_capacity(self.l.len() + 1);
            let mut top = vec![self.classical(n)?];
            for &li in &self.l {
                top.push(self.classical(li)?);
            }
            rows.push(top);
            for (x, &li) in self.l.iter().enumerate() {
                let mut row = vec![self.rho(li, n)?];
                row.extend(self.r[x].iter().cloned());
                rows.push(row);
            }
            let det_a = QRMatrix::new(rows).determinant()?;
            let qn = self.l.len() as i64;
            let c = self.chi_hat(&q(n), &self.l);
            let f = det_a
                .div(&self.det_r)
                .mul(&QuasiRational::endpoint(Rational::zero(), q(-qn)))
                .scale(&c);
            as_ratfun(&f, "stage-one eigenfunction")?
        };
        self.hat_cache.lock().expect("cache lock").insert(n, f.clone());
        Ok(f)
    }

    fn offset(&self) -> i64 {
        (self.k.len() + self.l.len()) as i64
    }

    pub(crate) fn pi(&self, i: i64) -> Result<RatFun, ConstructError> {
        let n = i + self.offset();
        let y = self.hat_pi(n)?;
        if self.k.is_empty() {
            return Ok(y);
        }
        let mut fs = self.seeds.clone();
        fs.push(y);
        let w = &wronskian_ratfun(&fs) / &self.wr;
        let c: Rational = self.k.iter().map(|&k| q(n - k)).product();
        Ok(w.scale(&c.recip()))
    }

    pub(crate) fn norm(&self, i: i64, enc: &Encoded) -> Result<NormValue, ConstructError> {
        let z = q(i + self.offset());
        let s = &self.a + &self.b;
        let mut extra = Leading::one();
        for (set, power) in [(&self.k, 1), (&self.l, 2)] {
            for &k in set.iter() {
                let kstar = -q(k) - &s - Rational::one();
                for _ in 0..power {
                    extra = extra.mul(&lin(&z, &kstar)).mul(&lin(&z, &q(k)).recip());
                }
            }
        }
        Ok(NormValue::from_nu(&z, &self.a, &self.b, &enc.alpha, &enc.beta, &extra)?)
    }
}
