//! Exact linear algebra: Gaussian elimination over the rationals, Bareiss
//! determinants over polynomials, determinants of rational-function and
//! quasi-rational matrices, and Wronskians.

use num_traits::{One, Zero};

use super::poly::Poly;
use super::quasi::QuasiRational;
use super::rational::{q, Rational};
use super::ratfun::RatFun;
use super::MathError;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..m[row].len() {
            let v = &m[row][c] * &inv;
            m[row][c] = v;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..m[r].len() {
                    let t = &f * &m[row][c];
                    m[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// One solution of `A x = rhs` (free variables set to zero), or `None` when
/// the system is inconsistent.
pub fn solve_linear(a: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, ncols);
    if m[pivots.len()..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Some(x)
}

/// A basis of the null space of `A` (each vector has `ncols` entries).
pub fn nullspace(a: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Determinant of a square polynomial matrix by Bareiss fraction-free elimination.
pub fn det_poly(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.divexact(&prev).expect("Bareiss step is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Naive cofactor-expansion determinant, used as an independent oracle.
pub fn det_poly_cofactor(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let t = &m[0][j] * &det_poly_cofactor(&minor);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    let g = a.gcd(b);
    (a * b).divrem(&g).0.monic()
}

/// Determinant of a square rational-function matrix.
///
/// Each row is cleared of denominators by its least common denominator, the
/// polynomial determinant is taken by Bareiss elimination, and the collected
/// denominators are divided back out.
pub fn det_ratfun(m: &[Vec<RatFun>]) -> RatFun {
    let mut dens = Poly::one();
    let mut pm = Vec::with_capacity(m.len());
    for row in m {
        let l = row.iter().fold(Poly::one(), |acc, f| poly_lcm(&acc, f.den()));
        let prow: Vec<Poly> = row
            .iter()
            .map(|f| &f.num().clone() * &l.divrem(f.den()).0)
            .collect();
        dens = &dens * &l;
        pm.push(prow);
    }
    RatFun::new(det_poly(&pm), dens)
}

/// Square matrix of quasi-rational functions whose rows each share one
/// pair of endpoint exponents up to integer offsets.
#[derive(Clone, Debug)]
pub struct QRMatrix {
    pub entries: Vec<Vec<QuasiRational>>,
}

impl QRMatrix {
    pub fn new(entries: Vec<Vec<QuasiRational>>) -> Self {
        QRMatrix { entries }
    }

    /// Common exponent pair of a row, taken from its first nonzero entry.
    fn row_exponents(row: &[QuasiRational]) -> (Rational, Rational) {
        row.iter()
            .find(|f| !f.is_zero())
            .map(|f| (f.a_exp().clone(), f.b_exp().clone()))
            .unwrap_or_else(|| (Rational::zero(), Rational::zero()))
    }

    /// Determinant: row exponents are factored out, the remaining
    /// rational-function determinant is computed fraction-free, and the
    /// exponent sums are reattached.
    pub fn determinant(&self) -> Result<QuasiRational, MathError> {
        let mut sa = Rational::zero();
        let mut sb = Rational::zero();
        let mut rm = Vec::with_capacity(self.entries.len());
        for row in &self.entries {
            if row.len() != self.entries.len() {
                return Err(MathError::NotSquare);
            }
            let (a0, b0) = Self::row_exponents(row);
            let mut rrow = Vec::with_capacity(row.len());
            for f in row {
                rrow.push(f.relative_to(&a0, &b0).ok_or(MathError::NonUniformRow)?);
            }
            sa += a0;
            sb += b0;
            rm.push(rrow);
        }
        Ok(QuasiRational::new(det_ratfun(&rm), sa, sb))
    }
}

/// Wronskian determinant `det[f_j^(i)]`, `i, j = 0..n-1`.
///
/// The `i`-th derivative of a column with exponents `(a_j, b_j)` carries the
/// factor `(1-x)^(a_j-i) (1+x)^(b_j-i)`; each entry is expressed relative to
/// that factor so the determinant reduces to one over rational functions.
pub fn wronskian(fs: &[QuasiRational]) -> Result<QuasiRational, MathError> {
    let n = fs.len();
    if n == 0 {
        return Ok(QuasiRational::one());
    }
    let mut cols: Vec<Vec<QuasiRational>> = Vec::with_capacity(n);
    for f in fs {
        let mut c = vec![f.clone()];
        for i in 1..n {
            let d = c[i - 1].derivative();
            c.push(d);
        }
        cols.push(c);
    }
    let mut m = vec![vec![RatFun::zero(); n]; n];
    let mut sa = Rational::zero();
    let mut sb = Rational::zero();
    for (j, f) in fs.iter().enumerate() {
        sa += f.a_exp();
        sb += f.b_exp();
        for i in 0..n {
            let a0 = f.a_exp() - q(i as i64);
            let b0 = f.b_exp() - q(i as i64);
            m[i][j] = cols[j][i]
                .relative_to(&a0, &b0)
                .ok_or(MathError::IncompatibleExponents)?;
        }
    }
    let shift = q((n * (n - 1) / 2) as i64);
    Ok(QuasiRational::new(det_ratfun(&m), sa - &shift, sb - shift))
}

/// Wronskian of rational functions, returned as a rational function.
///
/// With `L` the common denominator, `Wr[N_j / L] = Wr[N_j] / L^n`, so only a
/// polynomial Wronskian is formed.
pub fn wronskian_ratfun(fs: &[RatFun]) -> RatFun {
    let n = fs.len();
    let l = fs.iter().fold(Poly::one(), |acc, f| poly_lcm(&acc, f.den()));
    let mut m = vec![vec![Poly::zero(); n]; n];
    for (j, f) in fs.iter().enumerate() {
        let mut d = f.num() * &l.divrem(f.den()).0;
        for row in m.iter_mut() {
            row[j] = d.clone();
            d = d.derivative();
        }
    }
    RatFun::new(det_poly(&m), l.pow(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::qf;

    #[test]
    fn solves_small_system() {
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        let x = solve_linear(&a, &[q(3), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        let inconsistent = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(solve_linear(&inconsistent, &[q(1), q(3)]).is_none());
        let ns = nullspace(&inconsistent, 2);
        assert_eq!(ns, vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = vec![
            vec![Poly::from_i64(&[1, 1]), Poly::from_i64(&[0, 2]), Poly::from_i64(&[3])],
            vec![Poly::from_i64(&[0]), Poly::from_i64(&[1, 0, 1]), Poly::from_i64(&[1, -1])],
            vec![Poly::from_i64(&[2]), Poly::from_i64(&[5]), Poly::from_i64(&[0, 0, 0, 1])],
        ];
        assert_eq!(det_poly(&m), det_poly_cofactor(&m));
    }

    #[test]
    fn wronskian_small_cases() {
        let x = QuasiRational::from_poly(Poly::x());
        let x2 = QuasiRational::from_poly(Poly::from_i64(&[0, 0, 1]));
        assert_eq!(wronskian(&[QuasiRational::one()]).unwrap(), QuasiRational::one());
        assert_eq!(wronskian(&[x, x2.clone()]).unwrap(), x2);
        let s = QuasiRational::endpoint(qf(1, 2), q(0));
        let w = wronskian(&[s.clone(), s]).unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn qr_determinant_scalar() {
        let e = QuasiRational::from_poly(Poly::from_i64(&[2, 1]));
        let m = QRMatrix::new(vec![vec![e.clone()]]);
        assert_eq!(m.determinant().unwrap(), e);
        let h = QuasiRational::endpoint(qf(1, 3), q(0));
        let bad = QRMatrix::new(vec![vec![h, QuasiRational::one()], vec![QuasiRational::one(), QuasiRational::one()]]);
        assert!(bad.determinant().is_err());
    }
}
