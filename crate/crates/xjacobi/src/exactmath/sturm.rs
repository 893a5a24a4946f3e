//! Real-root counting by Sturm sequences.

use num_traits::{Signed, Zero};

use super::poly::Poly;
use super::rational::Rational;

/// Sturm sequence of a square-free polynomial.
fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].divrem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    seq
}

fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the closed interval `[lo, hi]`.
pub fn sturm_roots_in_interval(p: &Poly, lo: &Rational, hi: &Rational) -> usize {
    assert!(!p.is_zero(), "root count of the zero polynomial");
    if p.is_constant() || lo > hi {
        return 0;
    }
    let sf = p.squarefree();
    let seq = sturm_sequence(&sf);
    let open_closed = sign_changes(&seq, lo) - sign_changes(&seq, hi);
    open_closed + usize::from(sf.eval(lo).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{q, qf};

    #[test]
    fn counts_in_unit_interval() {
        let m1 = q(-1);
        let p1 = q(1);
        assert_eq!(sturm_roots_in_interval(&Poly::from_i64(&[1, 4, 1]), &m1, &p1), 1);
        assert_eq!(sturm_roots_in_interval(&Poly::new(vec![qf(-1, 4), q(0), q(1)]), &m1, &p1), 2);
        assert_eq!(sturm_roots_in_interval(&Poly::from_i64(&[1, 0, 1]), &m1, &p1), 0);
        assert_eq!(sturm_roots_in_interval(&Poly::from_i64(&[-1, 0, 1]), &m1, &p1), 2);
        let double = Poly::from_i64(&[-1, 1]).pow(2);
        assert_eq!(sturm_roots_in_interval(&double, &m1, &p1), 1);
    }
}
