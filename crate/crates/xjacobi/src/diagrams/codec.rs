//! Encoding of class parameters as spectral diagrams and canonical decoding.
//!
//! Decoding reads the parameters off the labels in a frame attached to the
//! leftmost ordinary cell (full rows) or to the vertex type (demi-diagrams),
//! then re-encodes the result and rejects the diagram unless it is reproduced.

use std::collections::{BTreeMap, BTreeSet};

use crate::classical::ClassTag;
use crate::exactmath::rational::{as_i64, q, Rational};

use super::diagram::{Row, RowKind, SpectralDiagram};
use super::label::Label;
use super::params::{encode_params, DiagramParams, Encoded, ParamError};
use super::DiagramError;

/// The diagram of the family with parameters `p`, with its index sets.
pub fn encode(p: &DiagramParams) -> Result<(SpectralDiagram, Encoded), ParamError> {
    let e = encode_params(p)?;
    let d = SpectralDiagram::from_index_sets(e.tag, e.alpha.clone(), e.beta.clone(), e.eps.clone(), &e.sets);
    Ok((d, e))
}

fn illegal(m: impl Into<String>) -> DiagramError {
    DiagramError::IllegalDiagram(m.into())
}

/// Cells of a row from `from` to the last explicit cell, as `(k, label)`.
fn scan(row: &Row, from: i64) -> impl Iterator<Item = (i64, Label)> + '_ {
    (from..row.end()).map(move |k| (k, row.get(k).unwrap().label))
}

/// Full row whose ordinary labels are `up` on the right and `down` on the left:
/// the origin sits at the leftmost `up` label and `K` collects the `down`
/// labels to its right.
fn decode_full(row: &Row, up: Label, down: Label) -> Result<(i64, BTreeSet<i64>), DiagramError> {
    let left = row.left.map(|c| c.label);
    if left != Some(down) || row.right.label != up {
        return Err(illegal(format!("row {} must run from {down:?} to {up:?}", row.kind.name())));
    }
    let origin = scan(row, row.start).find(|(_, l)| *l == up).map_or(row.end(), |(k, _)| k);
    let mut ks = BTreeSet::new();
    for (k, l) in scan(row, origin + 1) {
        if l == down {
            ks.insert(k - origin);
        } else if l != up {
            return Err(illegal(format!("unexpected label {l:?} in row {}", row.kind.name())));
        }
    }
    Ok((-origin, ks))
}

/// Demi row whose generic label is the pair label and whose lone labels are
/// `up` and `down`. Returns the vertex offset `e` (`+1` for an `up` vertex,
/// `-1` for a `down` vertex, `0` without a vertex), the `down` set and the
/// `up` set, both in the frame of the classical operator.
fn decode_demi(
    d: &SpectralDiagram,
    kind: RowKind,
    up: Label,
    down: Label,
) -> Result<(i64, i64, BTreeSet<i64>, BTreeSet<i64>), DiagramError> {
    let row = d.row(kind).ok_or_else(|| illegal("missing row"))?;
    let g = d.geometry(kind);
    let c = g.center.ok_or_else(|| illegal("row is not a demi-diagram"))?;
    let e = match g.min_cell() {
        Some(-1) => match row.get(-1).unwrap().label {
            l if l == up => 1,
            l if l == down => -1,
            l => return Err(illegal(format!("vertex label {l:?} is not canonical"))),
        },
        _ => 0,
    };
    let s2 = e - 1 - c;
    if s2 % 2 != 0 {
        return Err(illegal("vertex parity does not match the parameters"));
    }
    let s = s2 / 2;
    let (mut downs, mut ups) = (BTreeSet::new(), BTreeSet::new());
    for (k, l) in scan(row, 0) {
        let y = g.positions(k)[0] + s;
        if l == down {
            downs.insert(y);
        } else if l == up {
            ups.insert(y - e);
        } else if l != row.right.label {
            return Err(illegal(format!("unexpected label {l:?} in row {}", kind.name())));
        }
    }
    Ok((e, s, downs, ups))
}

/// Canonical parameters of a diagram.
///
/// Canonical forms: G has `0 ∉ K1, 0 ∉ K3, K4 = ∅`; A has `a = 0, 0 ∉ L`;
/// B has `a-b ∈ {-1,0,1}, 0 ∉ K1`; C has `a+b ∈ {-1,0,1}, K4 = ∅, 0 ∉ K3`;
/// CB has `a, b ∈ {-1/2, 1/2}`; D has `(a,b) ∈ {(0,0),(1,0),(0,1)}`. A class D
/// diagram does not record the deformation parameters, which decode as `t = 1`.
pub fn decode(d: &SpectralDiagram) -> Result<DiagramParams, DiagramError> {
    let (alpha, beta) = (&d.alpha, &d.beta);
    let row = |k: RowKind| d.row(k).ok_or_else(|| illegal(format!("missing row {}", k.name())));
    let p = match d.tag {
        ClassTag::G => {
            let (p1, k1) = decode_full(row(RowKind::R12)?, Label::Circ, Label::Times)?;
            let (p3, k3) = decode_full(row(RowKind::R34)?, Label::Plus, Label::Minus)?;
            DiagramParams {
                tag: Some(ClassTag::G),
                a: alpha - q(p1) + q(p3),
                b: beta - q(p1) - q(p3),
                k1,
                k3,
                ..Default::default()
            }
        }
        ClassTag::B => {
            let (p1, k1) = decode_full(row(RowKind::R12)?, Label::Circ, Label::Times)?;
            let (_, s34, k3, k4) = decode_demi(d, RowKind::R34, Label::Plus, Label::Minus)?;
            DiagramParams {
                tag: Some(ClassTag::B),
                a: alpha - q(p1) + q(s34),
                b: beta - q(p1) - q(s34),
                k1,
                k3,
                k4,
                ..Default::default()
            }
        }
        ClassTag::C | ClassTag::CB => {
            let (_, s12, k1, k2) = decode_demi(d, RowKind::R12, Label::Circ, Label::Times)?;
            let (s34, k3, k4) = if d.tag == ClassTag::C {
                let (p3, k3) = decode_full(row(RowKind::R34)?, Label::Plus, Label::Minus)?;
                (p3, k3, BTreeSet::new())
            } else {
                let (_, s34, k3, k4) = decode_demi(d, RowKind::R34, Label::Plus, Label::Minus)?;
                (s34, k3, k4)
            };
            DiagramParams {
                tag: Some(d.tag),
                a: alpha - q(s12) + q(s34),
                b: beta - q(s12) - q(s34),
                k1,
                k2,
                k3,
                k4,
                ..Default::default()
            }
        }
        ClassTag::A => {
            let r = row(RowKind::Single)?;
            if r.left.map(|c| c.label) != Some(Label::Minus) || r.right.label != Label::Circ {
                return Err(illegal("class A row must run from - to o"));
            }
            let origin = scan(r, r.start)
                .find(|(_, l)| matches!(l, Label::Circ | Label::Star))
                .map_or(r.end(), |(k, _)| k);
            let (mut k, mut l) = (BTreeSet::new(), BTreeSet::new());
            for (j, lab) in scan(r, origin) {
                match lab {
                    Label::Star => {
                        k.insert(j - origin);
                    }
                    Label::Minus => {
                        l.insert(j - origin);
                    }
                    Label::Circ => {}
                    other => return Err(illegal(format!("unexpected label {other:?} in class A"))),
                }
            }
            let (pp, qq) = (k.len() as i64, l.len() as i64);
            DiagramParams {
                tag: Some(ClassTag::A),
                a: q(0),
                b: beta - q(pp + 2 * qq),
                k,
                l,
                ..Default::default()
            }
        }
        ClassTag::D => {
            let r = row(RowKind::Single)?;
            let g = d.geometry(RowKind::Single);
            let (a, b) = match g.min_cell() {
                Some(-1) => match r.get(-1).unwrap().label {
                    Label::Plus => (1, 0),
                    Label::Minus => (0, 1),
                    l => return Err(illegal(format!("vertex label {l:?} is not canonical"))),
                },
                _ => (0, 0),
            };
            let sum = as_i64(&(alpha + beta)).ok_or_else(|| illegal("class D needs integer parameters"))?;
            if (sum - a - b) % 2 != 0 {
                return Err(illegal("vertex parity does not match the parameters"));
            }
            let gamma = (sum - a - b) / 2;
            let mut p = DiagramParams {
                tag: Some(ClassTag::D),
                a: q(a),
                b: q(b),
                ..Default::default()
            };
            let mut l1 = BTreeMap::new();
            for (k, lab) in scan(r, 0) {
                let y = g.positions(k)[0] + gamma;
                match lab {
                    Label::Bullet => {
                        p.k.insert(y);
                    }
                    Label::Nabla => {
                        l1.insert(y, q(1));
                    }
                    Label::Minus => {
                        p.l3.insert(y);
                    }
                    Label::Plus => {
                        p.l4.insert(y);
                    }
                    Label::Circ => {}
                    other => return Err(illegal(format!("unexpected label {other:?} in class D"))),
                }
            }
            p.l1 = l1;
            p
        }
    };
    let (again, _) = encode(&p).map_err(|e| illegal(format!("decoded parameters are invalid: {e}")))?;
    if !again.same_labels(d) {
        return Err(illegal(format!("no canonical parameters reproduce the diagram (tried {p:?})")));
    }
    Ok(p)
}

/// Whether the parameters are in the canonical form that [`decode`] returns.
pub fn is_canonical(p: &DiagramParams) -> bool {
    let (a, b) = (&p.a, &p.b);
    let half = |x: &Rational| *x == Rational::new(1.into(), 2.into()) || *x == Rational::new((-1).into(), 2.into());
    let unit = |x: Option<i64>| matches!(x, Some(-1..=1));
    match p.tag() {
        ClassTag::G => !p.k1.contains(&0) && !p.k3.contains(&0) && p.k4.is_empty(),
        ClassTag::A => *a == q(0) && !p.l.contains(&0),
        ClassTag::B => unit(as_i64(&(a - b))) && !p.k1.contains(&0),
        ClassTag::C => unit(as_i64(&(a + b))) && p.k4.is_empty() && !p.k3.contains(&0),
        ClassTag::CB => half(a) && half(b),
        ClassTag::D => matches!((as_i64(a), as_i64(b)), (Some(0), Some(0)) | (Some(1), Some(0)) | (Some(0), Some(1))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::qf;

    fn roundtrip(p: DiagramParams) {
        let (d, _) = encode(&p).unwrap();
        let back = decode(&d).unwrap_or_else(|e| panic!("{p:?}: {e}\n{}", d.render(8)));
        assert_eq!(back, p, "\n{}", d.render(8));
        let text = d.render(8);
        assert_eq!(SpectralDiagram::parse(&text).unwrap(), d);
    }

    #[test]
    fn class_a_drawn_diagram() {
        let p = DiagramParams::a_class(q(0), qf(1, 3), &[2, 4], &[1, 3]);
        let (d, _) = encode(&p).unwrap();
        let row = d.row(RowKind::Single).unwrap();
        let text: String = (-7..=2).map(|k| row.get(k).unwrap().ascii()).collect();
        assert_eq!(text, "---o-*-*oo");
        assert_eq!(decode(&d).unwrap(), p);
    }

    #[test]
    fn class_d_extended_row() {
        let p = DiagramParams::d(q(0), q(0), &[1], &[(0, q(1))], &[], &[]);
        let (d, _) = encode(&p).unwrap();
        assert!(d.render(4).contains("row 1234 from 0: v#ooo..."), "{}", d.render(4));
        roundtrip(p);
    }

    #[test]
    fn roundtrips_in_every_class() {
        roundtrip(DiagramParams::g(qf(1, 3), qf(1, 5), &[2, 4], &[1, 2, 3, 4], &[]));
        roundtrip(DiagramParams::b_class(qf(1, 3), qf(1, 3), &[1, 2], &[0], &[2, 4]));
        roundtrip(DiagramParams::b_class(qf(1, 3), qf(1, 3), &[3], &[2], &[1]));
        roundtrip(DiagramParams::c_class(qf(1, 3), qf(-1, 3), &[1], &[2], &[1, 3], &[]));
        roundtrip(DiagramParams::c_class(qf(1, 3), qf(2, 3), &[0, 2], &[4], &[2], &[]));
        roundtrip(DiagramParams::c_class(qf(1, 2), qf(1, 2), &[1], &[3], &[0], &[2]));
        roundtrip(DiagramParams::c_class(qf(-1, 2), qf(1, 2), &[2], &[1], &[1], &[1, 3]));
        roundtrip(DiagramParams::a_class(q(0), qf(2, 5), &[0, 3], &[2]));
        roundtrip(DiagramParams::d(q(1), q(0), &[2], &[(0, q(1))], &[3], &[1]));
        roundtrip(DiagramParams::d(q(0), q(1), &[0], &[(2, q(1))], &[1], &[3]));
    }
}
