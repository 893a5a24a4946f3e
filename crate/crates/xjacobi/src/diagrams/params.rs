//! Class-specific parameter sets, their validity conditions, and the
//! parameters, spectral shift and index sets of the resulting operator.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::classical::{classical_index_sets, norm_ratio, ClassTag, ClassicalIndexSets, IndexSet};
use crate::exactmath::rational::{as_i64, fmt_q, is_int, is_nat, q, Rational};

/// Invalid class parameters.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("degenerate deformation: {0}")]
    DegenerateDeformation(String),
}

/// Parameters of an exceptional family.
///
/// Only the sets belonging to the class are used: `k1, k3, k4` for G and B,
/// `k1..k4` for C and CB, `k, l` for A, and `k, l1, l3, l4` for D, where
/// `l1` maps each deformation index to its parameter `t`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DiagramParams {
    pub tag: Option<ClassTag>,
    pub a: Rational,
    pub b: Rational,
    pub k1: BTreeSet<i64>,
    pub k2: BTreeSet<i64>,
    pub k3: BTreeSet<i64>,
    pub k4: BTreeSet<i64>,
    pub k: BTreeSet<i64>,
    pub l: BTreeSet<i64>,
    pub l1: BTreeMap<i64, Rational>,
    pub l3: BTreeSet<i64>,
    pub l4: BTreeSet<i64>,
}

fn set(v: &[i64]) -> BTreeSet<i64> {
    v.iter().copied().collect()
}

fn fmt_set(s: &BTreeSet<i64>) -> String {
    let v: Vec<String> = s.iter().map(|n| n.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

impl DiagramParams {
    /// The classical operator `T(a,b)` viewed as a family of the class of `(a,b)`.
    pub fn classical(a: Rational, b: Rational) -> Self {
        let tag = ClassTag::classify(&a, &b);
        DiagramParams {
            tag: Some(tag),
            a,
            b,
            ..Default::default()
        }
    }

    pub fn g(a: Rational, b: Rational, k1: &[i64], k3: &[i64], k4: &[i64]) -> Self {
        DiagramParams {
            tag: Some(ClassTag::G),
            a,
            b,
            k1: set(k1),
            k3: set(k3),
            k4: set(k4),
            ..Default::default()
        }
    }

    pub fn b_class(a: Rational, b: Rational, k1: &[i64], k3: &[i64], k4: &[i64]) -> Self {
        DiagramParams {
            tag: Some(ClassTag::B),
            ..DiagramParams::g(a, b, k1, k3, k4)
        }
    }

    /// Class C or CB, decided by `(a,b)`.
    pub fn c_class(a: Rational, b: Rational, k1: &[i64], k2: &[i64], k3: &[i64], k4: &[i64]) -> Self {
        let tag = if is_int(&(&a - &b)) { ClassTag::CB } else { ClassTag::C };
        DiagramParams {
            tag: Some(tag),
            a,
            b,
            k1: set(k1),
            k2: set(k2),
            k3: set(k3),
            k4: set(k4),
            ..Default::default()
        }
    }

    pub fn a_class(a: Rational, b: Rational, k: &[i64], l: &[i64]) -> Self {
        DiagramParams {
            tag: Some(ClassTag::A),
            a,
            b,
            k: set(k),
            l: set(l),
            ..Default::default()
        }
    }

    pub fn d(a: Rational, b: Rational, k: &[i64], l1: &[(i64, Rational)], l3: &[i64], l4: &[i64]) -> Self {
        DiagramParams {
            tag: Some(ClassTag::D),
            a,
            b,
            k: set(k),
            l1: l1.iter().cloned().collect(),
            l3: set(l3),
            l4: set(l4),
            ..Default::default()
        }
    }

    pub fn tag(&self) -> ClassTag {
        self.tag.unwrap_or_else(|| ClassTag::classify(&self.a, &self.b))
    }

    pub fn l1_set(&self) -> BTreeSet<i64> {
        self.l1.keys().copied().collect()
    }

    /// Check the validity conditions of the class.
    pub fn validate(&self) -> Result<(), ParamError> {
        let bad = |m: String| Err(ParamError::InvalidParams(m));
        let tag = self.tag();
        let actual = ClassTag::classify(&self.a, &self.b);
        if actual != tag {
            return bad(format!(
                "a = {}, b = {} belong to class {}, not {}",
                fmt_q(&self.a),
                fmt_q(&self.b),
                actual,
                tag
            ));
        }
        let used: &[(&str, bool)] = match tag {
            ClassTag::G | ClassTag::B => &[("K1", true), ("K2", false), ("K3", true), ("K4", true), ("K", false), ("L", false), ("L1", false), ("L3", false), ("L4", false)],
            ClassTag::C | ClassTag::CB => &[("K1", true), ("K2", true), ("K3", true), ("K4", true), ("K", false), ("L", false), ("L1", false), ("L3", false), ("L4", false)],
            ClassTag::A => &[("K1", false), ("K2", false), ("K3", false), ("K4", false), ("K", true), ("L", true), ("L1", false), ("L3", false), ("L4", false)],
            ClassTag::D => &[("K1", false), ("K2", false), ("K3", false), ("K4", false), ("K", true), ("L", false), ("L1", true), ("L3", true), ("L4", true)],
        };
        let l1 = self.l1_set();
        let sets: [&BTreeSet<i64>; 9] = [&self.k1, &self.k2, &self.k3, &self.k4, &self.k, &self.l, &l1, &self.l3, &self.l4];
        for ((name, allowed), s) in used.iter().zip(sets) {
            if !allowed && !s.is_empty() {
                return bad(format!("{name} is not a parameter of class {tag}"));
            }
            if let Some(n) = s.iter().find(|&&n| n < 0) {
                return bad(format!("{name} contains the negative index {n}"));
            }
        }
        match tag {
            ClassTag::G => Ok(()),
            ClassTag::A => {
                if !is_nat(&self.a) {
                    return bad("class A needs a to be a nonnegative integer".into());
                }
                if let Some(n) = self.k.intersection(&self.l).next() {
                    return bad(format!("K and L share the index {n}"));
                }
                Ok(())
            }
            ClassTag::B | ClassTag::C | ClassTag::CB => {
                let cis = classical_index_sets(&self.a, &self.b).map_err(|e| ParamError::InvalidParams(e.to_string()))?;
                let check = |name: &str, s: &BTreeSet<i64>, iota: u8| -> Result<(), ParamError> {
                    if let Some(n) = s.iter().find(|&&n| !cis.plus(iota).contains(n)) {
                        return Err(ParamError::InvalidParams(format!(
                            "{name} contains {n}, which is not in the classical index set {}",
                            cis.plus(iota)
                        )));
                    }
                    Ok(())
                };
                if matches!(tag, ClassTag::C | ClassTag::CB) {
                    check("K1", &self.k1, 1)?;
                    check("K2", &self.k2, 2)?;
                    let s = as_i64(&(&self.a + &self.b)).unwrap();
                    if let Some(n) = self.k2.iter().find(|&&k| self.k1.contains(&(k - s))) {
                        return bad(format!("K1 and K2 - a - b overlap at {}", n - s));
                    }
                }
                if matches!(tag, ClassTag::B | ClassTag::CB) {
                    check("K3", &self.k3, 3)?;
                    check("K4", &self.k4, 4)?;
                    let d = as_i64(&(&self.a - &self.b)).unwrap();
                    if let Some(n) = self.k4.iter().find(|&&k| self.k3.contains(&(k + d))) {
                        return bad(format!("K3 - a and K4 - b overlap (K4 contains {n})"));
                    }
                }
                Ok(())
            }
            ClassTag::D => {
                if !is_nat(&self.a) || !is_nat(&self.b) {
                    return bad("class D needs a, b to be nonnegative integers".into());
                }
                let all: [(&str, &BTreeSet<i64>); 4] = [("K", &self.k), ("L1", &l1), ("L3", &self.l3), ("L4", &self.l4)];
                for i in 0..4 {
                    for j in i + 1..4 {
                        if let Some(n) = all[i].1.intersection(all[j].1).next() {
                            return bad(format!("{} and {} share the index {n}", all[i].0, all[j].0));
                        }
                    }
                }
                for (l, t) in &self.l1 {
                    if t.is_zero() {
                        return Err(ParamError::DegenerateDeformation(format!("t for L1 index {l} is zero")));
                    }
                    let nu = classical_nu_ratio(*l, &self.a, &self.b);
                    if (t + &nu).is_zero() {
                        return Err(ParamError::DegenerateDeformation(format!(
                            "t for L1 index {l} equals -{}, the negative classical norm",
                            fmt_q(&nu)
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    /// Compact description such as `D(a=0, b=0; K={1}, L1={0:1})`.
    pub fn describe(&self) -> String {
        let tag = self.tag();
        let head = format!("{}(a={}, b={}", tag, fmt_q(&self.a), fmt_q(&self.b));
        let body = match tag {
            ClassTag::G | ClassTag::B => format!("K1={}, K3={}, K4={}", fmt_set(&self.k1), fmt_set(&self.k3), fmt_set(&self.k4)),
            ClassTag::C | ClassTag::CB => format!(
                "K1={}, K2={}, K3={}, K4={}",
                fmt_set(&self.k1),
                fmt_set(&self.k2),
                fmt_set(&self.k3),
                fmt_set(&self.k4)
            ),
            ClassTag::A => format!("K={}, L={}", fmt_set(&self.k), fmt_set(&self.l)),
            ClassTag::D => {
                let l1: Vec<String> = self.l1.iter().map(|(l, t)| format!("{l}:{}", fmt_q(t))).collect();
                format!(
                    "K={}, L1={{{}}}, L3={}, L4={}",
                    fmt_set(&self.k),
                    l1.join(","),
                    fmt_set(&self.l3),
                    fmt_set(&self.l4)
                )
            }
        };
        format!("{head}; {body})")
    }
}

impl fmt::Debug for DiagramParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// `nu(n; a, b)` for nonnegative integers `a, b`, which is rational.
pub fn classical_nu_ratio(n: i64, a: &Rational, b: &Rational) -> Rational {
    // nu(0; a, b) = 2^(1+a+b) a! b! / (a+b+1)!
    let ai = as_i64(a).expect("integer a");
    let bi = as_i64(b).expect("integer b");
    let f = crate::exactmath::rational::factorial;
    let nu0 = crate::exactmath::rational::qpow(&q(2), 1 + ai + bi) * f(ai) * f(bi) / f(ai + bi + 1);
    nu0 * norm_ratio(n, a, b).expect("nonnegative integer parameters")
}

/// Parameters, spectral shift and index sets of the operator built from `DiagramParams`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Encoded {
    pub tag: ClassTag,
    pub alpha: Rational,
    pub beta: Rational,
    /// Spectral shift relative to `T(a,b)`.
    pub eps: Rational,
    /// Shift `s` such that the index-`i` eigenvalue equals the classical index `i+s` eigenvalue.
    pub shift: i64,
    pub sets: ClassicalIndexSets,
}

impl Encoded {
    /// `I_1` in increasing order, first `n` elements.
    pub fn first_indices(&self, n: usize) -> Vec<i64> {
        self.sets.total(1).first_n(n)
    }
}

fn img(s: &BTreeSet<i64>, f: impl Fn(i64) -> i64) -> IndexSet {
    IndexSet::finite(s.iter().map(|&k| f(k)))
}

fn sum(s: &BTreeSet<i64>) -> i64 {
    s.iter().sum()
}

fn c2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// The class-specific degree of `tau`.
pub fn degree_formula(p: &DiagramParams) -> i64 {
    match p.tag() {
        ClassTag::G | ClassTag::B => {
            let (p1, p3, p4) = (p.k1.len() as i64, p.k3.len() as i64, p.k4.len() as i64);
            sum(&p.k1) + sum(&p.k3) + sum(&p.k4) - c2(p1) - c2(p3) - c2(p4) + p3 * p4
        }
        ClassTag::C | ClassTag::CB => {
            let (p1, p2, p3, p4) = (p.k1.len() as i64, p.k2.len() as i64, p.k3.len() as i64, p.k4.len() as i64);
            sum(&p.k1) + sum(&p.k2) + sum(&p.k3) + sum(&p.k4) + 2 * p1 * p2 + 2 * p3 * p4 - c2(p1 + p2) - c2(p3 + p4)
        }
        ClassTag::A => {
            let (pp, qq) = (p.k.len() as i64, p.l.len() as i64);
            let a = as_i64(&p.a).unwrap();
            2 * sum(&p.l) + sum(&p.k) - c2(pp + qq) - c2(qq) + qq * a
        }
        ClassTag::D => {
            let a = as_i64(&p.a).unwrap();
            let b = as_i64(&p.b).unwrap();
            let l1 = p.l1_set();
            let (pp, q1, q3, q4) = (p.k.len() as i64, l1.len() as i64, p.l3.len() as i64, p.l4.len() as i64);
            sum(&p.k) + 2 * (sum(&l1) + sum(&p.l3) + sum(&p.l4)) - c2(pp) - pp * (q3 + q4) + q1 - q3 * (q3 - 1)
                - q4 * (q4 - 1)
                + a * (q1 + q3)
                + b * (q1 + q4)
        }
    }
}

/// Compute `alpha, beta`, the spectral shift and all index sets.
pub fn encode_params(p: &DiagramParams) -> Result<Encoded, ParamError> {
    p.validate()?;
    let tag = p.tag();
    let (a, b) = (&p.a, &p.b);
    let cis = classical_index_sets(a, b).map_err(|e| ParamError::InvalidParams(e.to_string()))?;
    let n0 = IndexSet::naturals;
    let e = IndexSet::empty;
    let bar = |s: &BTreeSet<i64>| img(s, |k| -1 - k);
    let (alpha, beta, shift, minus, plus) = match tag {
        ClassTag::G | ClassTag::B => {
            let (p1, p3, p4) = (p.k1.len() as i64, p.k3.len() as i64, p.k4.len() as i64);
            let alpha = a + q(p1 - p3 + p4);
            let beta = b + q(p1 + p3 - p4);
            let i1 = n0().minus(&p.k1).shift(-p1);
            let i2 = n0().union(&bar(&p.k1)).shift(p1);
            let s34 = p3 - p4;
            if tag == ClassTag::G {
                let i3 = n0().minus(&p.k3).union(&bar(&p.k4)).shift(-s34);
                let i4 = n0().minus(&p.k4).union(&bar(&p.k3)).shift(s34);
                (alpha, beta, p1, [e(), e(), e(), e()], [i1, i2, i3, i4])
            } else {
                let d = as_i64(&(a - b)).unwrap();
                let rm3: BTreeSet<i64> = p.k3.iter().copied().chain(p.k4.iter().map(|k| k + d)).collect();
                let rm4: BTreeSet<i64> = p.k4.iter().copied().chain(p.k3.iter().map(|k| k - d)).collect();
                let i3m = cis.minus(3).union(&bar(&p.k4)).shift(-s34);
                let i3p = cis.plus(3).minus(&rm3).shift(-s34);
                let i4m = cis.minus(4).union(&bar(&p.k3)).shift(s34);
                let i4p = cis.plus(4).minus(&rm4).shift(s34);
                (alpha, beta, p1, [e(), e(), i3m, i4m], [i1, i2, i3p, i4p])
            }
        }
        ClassTag::C | ClassTag::CB => {
            let (p1, p2, p3, p4) = (p.k1.len() as i64, p.k2.len() as i64, p.k3.len() as i64, p.k4.len() as i64);
            let alpha = a + q(p1 - p2 - p3 + p4);
            let beta = b + q(p1 - p2 + p3 - p4);
            let s = as_i64(&(a + b)).unwrap();
            let s12 = p1 - p2;
            let rm1: BTreeSet<i64> = p.k1.iter().copied().chain(p.k2.iter().map(|k| k - s)).collect();
            let rm2: BTreeSet<i64> = p.k2.iter().copied().chain(p.k1.iter().map(|k| k + s)).collect();
            let i1m = cis.minus(1).union(&bar(&p.k2)).shift(-s12);
            let i1p = cis.plus(1).minus(&rm1).shift(-s12);
            let i2m = cis.minus(2).union(&bar(&p.k1)).shift(s12);
            let i2p = cis.plus(2).minus(&rm2).shift(s12);
            let s34 = p3 - p4;
            let (i3m, i3p, i4m, i4p) = if tag == ClassTag::C {
                (
                    e(),
                    n0().minus(&p.k3).union(&bar(&p.k4)).shift(-s34),
                    e(),
                    n0().minus(&p.k4).union(&bar(&p.k3)).shift(s34),
                )
            } else {
                let d = as_i64(&(a - b)).unwrap();
                let rm3: BTreeSet<i64> = p.k3.iter().copied().chain(p.k4.iter().map(|k| k + d)).collect();
                let rm4: BTreeSet<i64> = p.k4.iter().copied().chain(p.k3.iter().map(|k| k - d)).collect();
                (
                    cis.minus(3).union(&bar(&p.k4)).shift(-s34),
                    cis.plus(3).minus(&rm3).shift(-s34),
                    cis.minus(4).union(&bar(&p.k3)).shift(s34),
                    cis.plus(4).minus(&rm4).shift(s34),
                )
            };
            (alpha, beta, s12, [i1m, i2m, i3m, i4m], [i1p, i2p, i3p, i4p])
        }
        ClassTag::A => {
            let (pp, qq) = (p.k.len() as i64, p.l.len() as i64);
            let ai = as_i64(a).unwrap();
            let alpha = a + q(pp);
            let beta = b + q(pp + 2 * qq);
            let kl: BTreeSet<i64> = p.k.union(&p.l).copied().collect();
            let i1 = n0().minus(&kl).shift(-pp - qq);
            let i2 = cis.plus(2).union(&bar(&p.k)).shift(pp + qq);
            let i3 = cis.plus(3).union(&img(&p.k, |k| k + ai)).shift(-qq);
            let i4 = n0().union(&img(&p.l, |l| -1 - l - ai)).shift(qq);
            (alpha, beta, pp + qq, [e(), e(), e(), e()], [i1, i2, i3, i4])
        }
        ClassTag::D => {
            let ai = as_i64(a).unwrap();
            let bi = as_i64(b).unwrap();
            let l1 = p.l1_set();
            let (pp, q3, q4) = (p.k.len() as i64, p.l3.len() as i64, p.l4.len() as i64);
            let gamma = pp + q3 + q4;
            let alpha = a + q(pp + 2 * q4);
            let beta = b + q(pp + 2 * q3);
            let all: BTreeSet<i64> = p.k.iter().chain(&l1).chain(&p.l3).chain(&p.l4).copied().collect();
            let i1p = n0().minus(&all).shift(-gamma);
            let i1m = img(&l1, |l| -l - ai - bi - 1 - gamma);
            let i2m = cis.minus(2).shift(gamma).union(&img(&p.k, |k| gamma - 1 - k));
            let i2p = cis.plus(2).shift(gamma).union(&img(&p.k, |k| k + ai + bi + gamma));
            let s34 = q3 - q4;
            let i3m = cis.minus(3).union(&img(&p.l4, |l| l + ai)).shift(-s34);
            let i3p = cis.plus(3).union(&img(&p.k, |k| k + ai)).shift(-s34);
            let i4m = cis.minus(4).union(&img(&p.l3, |l| l + bi)).shift(s34);
            let i4p = cis.plus(4).union(&img(&p.k, |k| k + bi)).shift(s34);
            (alpha, beta, gamma, [i1m, i2m, i3m, i4m], [i1p, i2p, i3p, i4p])
        }
    };
    let eps = q(shift) * (q(shift) + a + b + q(1));
    Ok(Encoded {
        tag,
        alpha,
        beta,
        eps,
        shift,
        sets: ClassicalIndexSets { tag, minus, plus },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::qf;

    #[test]
    fn drawn_diagram_examples() {
        let g = DiagramParams::g(qf(1, 3), qf(1, 5), &[2, 4], &[1, 2, 3, 4], &[]);
        let e = encode_params(&g).unwrap();
        assert_eq!(e.alpha, qf(1, 3) - q(2));
        assert_eq!(e.beta, qf(1, 5) + q(6));
        assert_eq!(e.sets.total(1).window(-3, 4), vec![-2, -1, 1, 3, 4]);
        assert_eq!(e.sets.total(3).window(-5, 3), vec![-4, 1, 2, 3]);
        assert_eq!(degree_formula(&g), 9);

        let d = DiagramParams::d(q(0), q(0), &[1], &[(0, q(1))], &[], &[]);
        let e = encode_params(&d).unwrap();
        assert_eq!((e.alpha.clone(), e.beta.clone(), e.eps.clone()), (q(1), q(1), q(2)));
        assert_eq!(e.sets.plus(1), &IndexSet::from_tail(1));
        assert_eq!(e.sets.minus(1), &IndexSet::finite([-2]));
        assert_eq!(e.sets.plus(2), &IndexSet::finite([2]));
        assert_eq!(degree_formula(&d), 2);

        let a = DiagramParams::a_class(q(0), qf(1, 2), &[2, 4], &[1, 3]);
        assert_eq!(degree_formula(&a), 7);
    }

    #[test]
    fn validity_conditions() {
        assert!(DiagramParams::g(q(1), qf(1, 2), &[], &[], &[]).validate().is_err());
        assert!(DiagramParams::a_class(q(1), qf(1, 3), &[1], &[1]).validate().is_err());
        let bad_t = DiagramParams::d(q(0), q(0), &[1], &[(0, q(-2))], &[], &[]);
        assert!(matches!(bad_t.validate(), Err(ParamError::DegenerateDeformation(_))));
        let zero_t = DiagramParams::d(q(0), q(0), &[1], &[(0, q(0))], &[], &[]);
        assert!(matches!(zero_t.validate(), Err(ParamError::DegenerateDeformation(_))));
    }
}
