//! Asymptotic labels of spectral-diagram cells.

use std::fmt;

/// The label of one eigenvalue: which types of quasi-rational eigenfunction it carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    /// Type 1 only.
    Circ,
    /// Type 2 only.
    Times,
    /// Type 3 only.
    Plus,
    /// Type 4 only.
    Minus,
    /// Types 2 and 3.
    Star,
    /// Types 3 and 4.
    Div,
    /// Types 1 and 2.
    OTimes,
    /// Types 2, 3 and 4.
    Bullet,
    /// Type 1 with an index on the lower branch of a class D demi-diagram.
    Nabla,
    /// A combination of types that no class produces; the bitmask has bit `iota-1` set per type.
    Other(u8),
}

impl Label {
    /// Label of a set of types given as a bitmask.
    pub fn from_mask(mask: u8) -> Label {
        match mask {
            0b0001 => Label::Circ,
            0b0010 => Label::Times,
            0b0100 => Label::Plus,
            0b1000 => Label::Minus,
            0b0110 => Label::Star,
            0b1100 => Label::Div,
            0b0011 => Label::OTimes,
            0b1110 => Label::Bullet,
            m => Label::Other(m),
        }
    }

    /// The set of types as a bitmask.
    pub fn mask(&self) -> u8 {
        match self {
            Label::Circ | Label::Nabla => 0b0001,
            Label::Times => 0b0010,
            Label::Plus => 0b0100,
            Label::Minus => 0b1000,
            Label::Star => 0b0110,
            Label::Div => 0b1100,
            Label::OTimes => 0b0011,
            Label::Bullet => 0b1110,
            Label::Other(m) => *m,
        }
    }

    pub fn has_type(&self, iota: u8) -> bool {
        self.mask() & (1 << (iota - 1)) != 0
    }

    pub fn ascii(&self) -> char {
        match self {
            Label::Circ => 'o',
            Label::Times => 'x',
            Label::Plus => '+',
            Label::Minus => '-',
            Label::Star => '*',
            Label::Div => '/',
            Label::OTimes => '@',
            Label::Bullet => '#',
            Label::Nabla => 'v',
            Label::Other(_) => '?',
        }
    }

    pub fn symbol(&self) -> char {
        match self {
            Label::Circ => '○',
            Label::Times => '×',
            Label::Plus => '+',
            Label::Minus => '−',
            Label::Star => '⊛',
            Label::Div => '÷',
            Label::OTimes => '⊗',
            Label::Bullet => '■',
            Label::Nabla => '▽',
            Label::Other(_) => '?',
        }
    }

    /// Inverse of [`Label::ascii`] and [`Label::symbol`].
    pub fn from_char(c: char) -> Option<Label> {
        Some(match c {
            'o' | '○' => Label::Circ,
            'x' | '×' => Label::Times,
            '+' => Label::Plus,
            '-' | '−' => Label::Minus,
            '*' | '⊛' => Label::Star,
            '/' | '÷' => Label::Div,
            '@' | '⊗' => Label::OTimes,
            '#' | '■' => Label::Bullet,
            'v' | '▽' => Label::Nabla,
            _ => return None,
        })
    }
}

/// A labelled cell; `boxed` marks the vertex of a demi-diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub label: Label,
    pub boxed: bool,
}

impl Cell {
    pub fn plain(label: Label) -> Cell {
        Cell { label, boxed: false }
    }

    pub fn boxed(label: Label) -> Cell {
        Cell { label, boxed: true }
    }

    pub fn ascii(&self) -> String {
        if self.boxed {
            format!("[{}]", self.label.ascii())
        } else {
            self.label.ascii().to_string()
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.boxed {
            write!(f, "[{}]", self.label.symbol())
        } else {
            write!(f, "{}", self.label.symbol())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks_roundtrip() {
        for m in 1u8..16 {
            assert_eq!(Label::from_mask(m).mask(), m);
        }
        for l in [Label::Circ, Label::Star, Label::Bullet, Label::Nabla, Label::Div] {
            assert_eq!(Label::from_char(l.ascii()), Some(l));
            assert_eq!(Label::from_char(l.symbol()), Some(l));
        }
    }
}
