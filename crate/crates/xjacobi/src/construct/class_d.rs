//! Class D: `a, b` nonnegative integers.
//!
//! Stage one uses the polynomial incomplete inner products
//! `rho_ij(x) = int_{-1}^x pi_i pi_j (1-x)^a (1+x)^b` and the matrix
//! `R = [t_{l_i} delta_ij + rho_{l_i l_j}]` over `L = L1, L3, L4` in that
//! order, with `t = 0` on `L3` and `t = -nu(l; a, b)` on `L4`:
//! `tau^ = (1-x)^(-q4(q4+a)) (1+x)^(-q3(q3+b)) det R` and
//! `pi^_i` proportional to `(x-1)^(-q4) (1+x)^(-q3) det A(n) / det R` with
//! `n = u(i+q3+q4)`, `u(j) = max(j, -j-a-b-1)` and `A(n)` the bordered
//! matrix. Stage two is a Wronskian of the stage-one functions with indices
//! `K`: `tau = tau^ Wr[pi^(K-q3-q4)]` and `pi_i` proportional to
//! `Wr[pi^(K-q3-q4), pi^_{i+p}] / Wr[pi^(K-q3-q4)]`.
//!
//! Only the scale of `pi_i` is fixed separately. Without `L1` the
//! eigenfunctions are monic. Otherwise `pi_i(-1)` is set to the value at
//! `-1` of the corresponding eigenfunction of the `t -> infinity` limit,
//! which is the family with `L1` removed, so the result is asymptotically
//! monic and `pi_i(-1)` does not depend on `t`. An index whose value at
//! `-1` vanishes falls back to the monic scale.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::classical::{monic_jacobi, Leading, NormValue};
use crate::diagrams::{classical_nu_ratio, DiagramParams, Encoded};
use crate::exactmath::rational::{as_i64, q, Rational};
use crate::exactmath::{det_poly, wronskian_ratfun, Poly, RatFun};

use super::{as_poly, lin, ConstructError, ExceptionalFamily};

pub(crate) struct ClassDGenerator {
    a: i64,
    b: i64,
    k: Vec<i64>,
    /// `L1` with its deformation parameters.
    l1: Vec<(i64, Rational)>,
    l3: Vec<i64>,
    l4: Vec<i64>,
    /// `L1, L3, L4` in order.
    ells: Vec<i64>,
    r: Vec<Vec<Poly>>,
    det_r: Poly,
    seeds: Vec<RatFun>,
    wr: RatFun,
    /// The `t -> infinity` limit family, present when `L1` is not empty.
    limit: Option<Box<ExceptionalFamily>>,
    hat_cache: Mutex<BTreeMap<i64, RatFun>>,
}

fn ra(n: i64) -> Rational {
    q(n)
}

impl ClassDGenerator {
    pub(crate) fn build(params: &DiagramParams, _enc: &Encoded) -> Result<(Poly, ClassDGenerator), ConstructError> {
        let a = as_i64(&params.a).expect("integer a");
        let b = as_i64(&params.b).expect("integer b");
        let l1: Vec<(i64, Rational)> = params.l1.iter().map(|(l, t)| (*l, t.clone())).collect();
        let l3: Vec<i64> = params.l3.iter().copied().collect();
        let l4: Vec<i64> = params.l4.iter().copied().collect();
        let ells: Vec<i64> = l1.iter().map(|(l, _)| *l).chain(l3.iter().copied()).chain(l4.iter().copied()).collect();
        let limit = if l1.is_empty() {
            None
        } else {
            let mut lp = params.clone();
            lp.l1.clear();
            Some(Box::new(super::build_d(&lp)?))
        };
        let mut g = ClassDGenerator {
            a,
            b,
            k: params.k.iter().copied().collect(),
            l1,
            l3,
            l4,
            ells,
            r: Vec::new(),
            det_r: Poly::one(),
            seeds: Vec::new(),
            wr: RatFun::one(),
            limit,
            hat_cache: Mutex::new(BTreeMap::new()),
        };
        let ts = g.deformations();
        let mut r = Vec::with_capacity(g.ells.len());
        for (x, &li) in g.ells.iter().enumerate() {
            let mut row = Vec::with_capacity(g.ells.len());
            for (y, &lj) in g.ells.iter().enumerate() {
                let mut e = g.rho(li, lj)?;
                if x == y {
                    e = &e + &Poly::constant(ts[x].clone());
                }
                row.push(e);
            }
            r.push(row);
        }
        g.r = r;
        g.det_r = det_poly(&g.r);
        if g.det_r.is_zero() {
            return Err(ConstructError::Internal("det R vanishes".into()));
        }
        let (q3, q4) = (g.l3.len() as i64, g.l4.len() as i64);
        let hat_tau = RatFun::from_poly(g.det_r.clone()).mul_endpoint_powers(-q4 * (q4 + a), -q3 * (q3 + b));
        let hat_tau = as_poly(&hat_tau, "stage-one tau")?;
        g.seeds = g.k.iter().map(|&k| g.hat_pi(k)).collect::<Result<_, _>>()?;
        g.wr = wronskian_ratfun(&g.seeds);
        if g.wr.is_zero() {
            return Err(ConstructError::Internal("the stage-two Wronskian vanishes".into()));
        }
        let tau = as_poly(&(&RatFun::from_poly(hat_tau) * &g.wr), "tau")?;
        Ok((tau, g))
    }

    /// `t_l` for each entry of `L1, L3, L4`.
    fn deformations(&self) -> Vec<Rational> {
        let mut ts: Vec<Rational> = self.l1.iter().map(|(_, t)| t.clone()).collect();
        ts.extend(self.l3.iter().map(|_| Rational::zero()));
        ts.extend(self.l4.iter().map(|&l| -self.nu(l)));
        ts
    }

    fn nu(&self, n: i64) -> Rational {
        classical_nu_ratio(n, &ra(self.a), &ra(self.b))
    }

    fn classical(&self, n: i64) -> Result<Poly, ConstructError> {
        Ok(monic_jacobi(n, &ra(self.a), &ra(self.b))?)
    }

    fn weight(&self) -> Poly {
        &crate::exactmath::poly::one_minus_x_pow(self.a as usize) * &crate::exactmath::poly::xp1_pow(self.b as usize)
    }

    /// `int_{-1}^x pi_i pi_j W`.
    fn rho(&self, i: i64, j: i64) -> Result<Poly, ConstructError> {
        let f = &(&self.classical(i)? * &self.classical(j)?) * &self.weight();
        let g = f.integral();
        let g0 = g.eval(&-Rational::one());
        Ok(&g - &Poly::constant(g0))
    }

    fn star(&self, l: i64) -> i64 {
        -l - self.a - self.b - 1
    }

    fn u(&self, j: i64) -> i64 {
        j.max(self.star(j))
    }

    fn shift34(&self) -> i64 {
        (self.l3.len() + self.l4.len()) as i64
    }

    fn gamma(&self) -> i64 {
        self.k.len() as i64 + self.shift34()
    }

    /// The stage-one function attached to `j = i + q3 + q4`.
    fn hat_pi(&self, j: i64) -> Result<RatFun, ConstructError> {
        if let Some(f) = self.hat_cache.lock().expect("cache lock").get(&j) {
            return Ok(f.clone());
        }
        let n = self.u(j);
        let f = if self.ells.is_empty() {
            RatFun::from_poly(self.classical(n)?)
        } else {
            let mut rows = Vec::with_capacity(self.ells.len() + 1);
            let mut top = vec![self.classical(n)?];
            for &l in &self.ells {
                top.push(self.classical(l)?);
            }
            rows.push(top);
            for (x, &l) in self.ells.iter().enumerate() {
                let mut row = vec![self.rho(l, n)?];
                row.extend(self.r[x].iter().cloned());
                rows.push(row);
            }
            let det_a = det_poly(&rows);
            let (q3, q4) = (self.l3.len(), self.l4.len());
            let den = &(&self.det_r * &crate::exactmath::poly::xm1_pow(q4)) * &crate::exactmath::poly::xp1_pow(q3);
            RatFun::new(det_a, den)
        };
        self.hat_cache.lock().expect("cache lock").insert(j, f.clone());
        Ok(f)
    }

    /// The eigenfunction up to a constant factor.
    fn raw_pi(&self, i: i64) -> Result<RatFun, ConstructError> {
        let y = self.hat_pi(i + self.gamma())?;
        if self.k.is_empty() {
            return Ok(y);
        }
        let mut fs = self.seeds.clone();
        fs.push(y);
        Ok(&wronskian_ratfun(&fs) / &self.wr)
    }

    pub(crate) fn pi(&self, i: i64) -> Result<RatFun, ConstructError> {
        let f = self.raw_pi(i)?;
        let j = i + self.gamma();
        let target = self.limit.as_ref().and_then(|limit| {
            limit
                .pi(self.u(j) - self.gamma())
                .ok()
                .and_then(|g| g.eval(&-Rational::one()))
                .filter(|v| !v.is_zero())
        });
        let here = f.eval(&-Rational::one()).filter(|v| !v.is_zero());
        let scale = match (target, here) {
            (Some(t), Some(h)) => t / h,
            _ => f.lead().recip(),
        };
        Ok(f.scale(&scale))
    }

    pub(crate) fn norm(&self, i: i64, enc: &Encoded) -> Result<NormValue, ConstructError> {
        let j = i + self.gamma();
        let n = self.u(j);
        let z = ra(n);
        let mut extra = Leading::one();
        for (l, t) in &self.l1 {
            if j == self.star(*l) {
                let nl = self.nu(*l);
                let f = Rational::one() - &nl / (t + &nl);
                extra = extra.mul(&Leading { coef: f, order: 0 });
            }
        }
        for &k in &self.k {
            extra = extra.mul(&lin(&z, &ra(self.star(k)))).mul(&lin(&z, &ra(k)).recip());
        }
        for &l in self.l3.iter().chain(self.l4.iter()) {
            let f = lin(&z, &ra(self.star(l))).mul(&lin(&z, &ra(l)).recip());
            extra = extra.mul(&f).mul(&f);
        }
        let (a, b) = (ra(self.a), ra(self.b));
        Ok(NormValue::from_nu(&z, &a, &b, &enc.alpha, &enc.beta, &extra)?)
    }
}
