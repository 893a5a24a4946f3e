//! Flip alphabets: the single-label changes produced by one RDT.

use crate::classical::ClassTag;

use super::diagram::{RowKind, SpectralDiagram};
use super::label::{Cell, Label};
use super::DiagramError;

use Label::*;

fn plain(l: Label) -> Cell {
    Cell::plain(l)
}

fn boxed(l: Label) -> Cell {
    Cell::boxed(l)
}

/// Full-row rules: the label of the seed becomes the label of its dual.
fn full_rule(iota: u8, c: Cell) -> Vec<Cell> {
    match (iota, c.label) {
        (1, Circ) => vec![plain(Times)],
        (2, Times) => vec![plain(Circ)],
        (3, Plus) => vec![plain(Minus)],
        (4, Minus) => vec![plain(Plus)],
        _ => vec![],
    }
}

/// Demi-row rules for a pair of types `(s, t)` with lone labels `ls, lt` and
/// pair label `both`.
fn demi_rule(iota: u8, c: Cell, (s, t): (u8, u8), (ls, lt, both): (Label, Label, Label)) -> Vec<Cell> {
    if c.boxed {
        return match (iota, c.label) {
            (i, l) if i == s && l == ls => vec![boxed(lt)],
            (i, l) if i == t && l == lt => vec![boxed(ls)],
            _ => vec![],
        };
    }
    match (iota, c.label) {
        (i, l) if i == s && l == ls => vec![plain(both)],
        (i, l) if i == s && l == both => vec![plain(lt)],
        (i, l) if i == t && l == lt => vec![plain(both)],
        (i, l) if i == t && l == both => vec![plain(ls)],
        _ => vec![],
    }
}

/// The labels a type-`iota` flip may turn `c` into.
pub fn flip_targets(tag: ClassTag, iota: u8, c: Cell) -> Vec<Cell> {
    let r12 = (1, 2);
    let r34 = (3, 4);
    let l12 = (Circ, Times, OTimes);
    let l34 = (Plus, Minus, Div);
    match tag {
        ClassTag::G => full_rule(iota, c),
        ClassTag::B => match iota {
            1 | 2 => full_rule(iota, c),
            _ => demi_rule(iota, c, r34, l34),
        },
        ClassTag::C => match iota {
            1 | 2 => demi_rule(iota, c, r12, l12),
            _ => full_rule(iota, c),
        },
        ClassTag::CB => match iota {
            1 | 2 => demi_rule(iota, c, r12, l12),
            _ => demi_rule(iota, c, r34, l34),
        },
        ClassTag::A => match (iota, c.label) {
            (1, Circ) => vec![plain(Star)],
            (2, Star) => vec![plain(Circ)],
            (3, Star) => vec![plain(Minus)],
            (4, Minus) => vec![plain(Star)],
            _ => vec![],
        },
        ClassTag::D => match (iota, c.label, c.boxed) {
            (1, Circ | Nabla, false) => vec![plain(Bullet)],
            (2, Bullet, false) => vec![plain(Circ), plain(Nabla)],
            (3, Bullet, false) => vec![plain(Minus)],
            (3, Plus, false) => vec![plain(Bullet)],
            (3, Plus, true) => vec![boxed(Minus)],
            (4, Bullet, false) => vec![plain(Plus)],
            (4, Minus, false) => vec![plain(Bullet)],
            (4, Minus, true) => vec![boxed(Plus)],
            _ => vec![],
        },
    }
}

/// Whether `before -> after` is a type-`iota` flip of the class.
pub fn is_flip(tag: ClassTag, iota: u8, before: Cell, after: Cell) -> bool {
    flip_targets(tag, iota, before).contains(&after)
}

/// The diagram after a type-`iota` RDT whose seed eigenvalue sits at cell `k`
/// of the row carrying type `iota`. `choice` selects among several targets
/// (class D, type 2); the first target is used otherwise.
pub fn apply_flip(d: &SpectralDiagram, iota: u8, k: i64, choice: Option<Label>) -> Result<SpectralDiagram, DiagramError> {
    if !(1..=4).contains(&iota) {
        return Err(DiagramError::IllegalFlip(format!("type {iota} is not 1..4")));
    }
    let kind: RowKind = d.row_for_type(iota);
    let cell = d
        .cell(kind, k)
        .ok_or_else(|| DiagramError::IllegalFlip(format!("no cell {k} in row {}", kind.name())))?;
    let targets = flip_targets(d.tag, iota, cell);
    let target = match choice {
        None => targets.first().copied(),
        Some(l) => targets.iter().copied().find(|c| c.label == l),
    }
    .ok_or_else(|| {
        DiagramError::IllegalFlip(format!(
            "class {} admits no type-{iota} flip of {} at cell {k}",
            d.tag,
            cell.ascii()
        ))
    })?;
    let moved = d.realigned(iota);
    let k2 = d.moved_cell(kind, iota, k);
    Ok(moved.with_cell(kind, k2, target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{encode, DiagramParams};
    use crate::exactmath::rational::{q, qf};

    #[test]
    fn alphabet_examples() {
        assert_eq!(flip_targets(ClassTag::G, 1, plain(Circ)), vec![plain(Times)]);
        assert_eq!(flip_targets(ClassTag::A, 3, plain(Star)), vec![plain(Minus)]);
        assert_eq!(flip_targets(ClassTag::D, 2, plain(Bullet)), vec![plain(Circ), plain(Nabla)]);
        assert_eq!(flip_targets(ClassTag::B, 3, boxed(Plus)), vec![boxed(Minus)]);
        assert!(flip_targets(ClassTag::G, 1, plain(Times)).is_empty());
    }

    #[test]
    fn flip_matches_encoded_families() {
        // A type-1 step at the classical index 2 of T(a,b) adds 2 to K1.
        let (a, b) = (qf(1, 3), qf(1, 5));
        let (d0, _) = encode(&DiagramParams::g(a.clone(), b.clone(), &[], &[], &[])).unwrap();
        let (d1, _) = encode(&DiagramParams::g(a, b, &[2], &[], &[])).unwrap();
        let f = apply_flip(&d0, 1, 2, None).unwrap();
        assert!(f.same_labels(&d1), "{}\n{}", f.render(6), d1.render(6));
        assert_eq!(f.eps, d1.eps);

        let (d0, _) = encode(&DiagramParams::d(q(0), q(0), &[], &[], &[], &[])).unwrap();
        let (d1, _) = encode(&DiagramParams::d(q(0), q(0), &[1], &[], &[], &[])).unwrap();
        let f = apply_flip(&d0, 1, 1, None).unwrap();
        assert!(f.same_labels(&d1), "{}\n{}", f.render(6), d1.render(6));
        assert!(apply_flip(&d0, 3, 1, None).is_err());
    }
}
