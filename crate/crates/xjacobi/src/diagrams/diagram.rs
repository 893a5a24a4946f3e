//! Spectral diagrams: label rows over the eigenvalue lattice of an operator.
//!
//! Every row is indexed by an integer position `x` in a classical frame:
//! row `12` places the type-1 index `n` at `x = n` and the type-2 index `n`
//! at `x = -n-1`, both with eigenvalue `lambda_1(x)`; row `34` does the same
//! for types 3 and 4 with `lambda_3(x)`. Classes A and D have a single row
//! `1234` in the `lambda_1` frame that holds all four types. When the
//! eigenvalue is symmetric under `x -> c - x` for an integer `c`, the row is a
//! demi-diagram whose cells are the pairs `{x, c-x}`. Its cell coordinate is
//! `k = max(x, c-x) - floor(c/2) - 1`, so the vertex (when `c` is even) sits at
//! `k = -1` and the first ordinary cell at `k = 0`.

use std::fmt;

use num_traits::Zero;

use crate::classical::{ClassTag, ClassicalIndexSets};
use crate::darboux::step_table;
use crate::exactmath::rational::{as_i64, ceil_i64, fmt_q, parse_q, q, Rational};

use super::label::{Cell, Label};
use super::DiagramError;

/// Which eigenvalue families a row carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowKind {
    R12,
    R34,
    Single,
}

impl RowKind {
    pub fn name(&self) -> &'static str {
        match self {
            RowKind::R12 => "12",
            RowKind::R34 => "34",
            RowKind::Single => "1234",
        }
    }

    fn parse(s: &str) -> Option<RowKind> {
        match s {
            "12" => Some(RowKind::R12),
            "34" => Some(RowKind::R34),
            "1234" => Some(RowKind::Single),
            _ => None,
        }
    }

    pub fn types(&self) -> &'static [u8] {
        match self {
            RowKind::R12 => &[1, 2],
            RowKind::R34 => &[3, 4],
            RowKind::Single => &[1, 2, 3, 4],
        }
    }

    /// Translation of positions under an RDT of type `iota`, preserving the
    /// absolute eigenvalue.
    fn step_shift(&self, iota: u8) -> i64 {
        match (self, iota) {
            (RowKind::R12 | RowKind::Single, 1) => -1,
            (RowKind::R12 | RowKind::Single, 2) => 1,
            (RowKind::R34, 3) => -1,
            (RowKind::R34, 4) => 1,
            _ => 0,
        }
    }
}

/// The rows of a class.
pub fn row_kinds(tag: ClassTag) -> &'static [RowKind] {
    match tag {
        ClassTag::A | ClassTag::D => &[RowKind::Single],
        _ => &[RowKind::R12, RowKind::R34],
    }
}

/// Position bookkeeping of one row for given `alpha, beta`.
#[derive(Debug, Clone)]
pub struct Geometry {
    pub tag: ClassTag,
    pub kind: RowKind,
    alpha: Option<i64>,
    beta: Option<i64>,
    /// The reflection centre of a demi-diagram.
    pub center: Option<i64>,
}

impl Geometry {
    pub fn new(tag: ClassTag, kind: RowKind, alpha: &Rational, beta: &Rational) -> Geometry {
        let demi = matches!(
            (tag, kind),
            (ClassTag::C | ClassTag::CB, RowKind::R12) | (ClassTag::B | ClassTag::CB, RowKind::R34) | (ClassTag::D, RowKind::Single)
        );
        let center = if !demi {
            None
        } else if kind == RowKind::R34 {
            as_i64(&(alpha - beta - q(1)))
        } else {
            as_i64(&(-(alpha + beta) - q(1)))
        };
        Geometry {
            tag,
            kind,
            alpha: as_i64(alpha),
            beta: as_i64(beta),
            center,
        }
    }

    pub fn is_demi(&self) -> bool {
        self.center.is_some()
    }

    /// Smallest cell coordinate of a demi-diagram.
    pub fn min_cell(&self) -> Option<i64> {
        self.center.map(|c| if c.rem_euclid(2) == 0 { -1 } else { 0 })
    }

    pub fn is_vertex(&self, k: i64) -> bool {
        self.min_cell() == Some(-1) && k == -1
    }

    pub fn cell_of(&self, x: i64) -> i64 {
        match self.center {
            Some(c) => x.max(c - x) - c.div_euclid(2) - 1,
            None => x,
        }
    }

    /// Positions of a cell, the representative first and then its mirror.
    pub fn positions(&self, k: i64) -> Vec<i64> {
        match self.center {
            Some(c) => {
                let rep = k + c.div_euclid(2) + 1;
                if c - rep == rep {
                    vec![rep]
                } else {
                    vec![rep, c - rep]
                }
            }
            None => vec![k],
        }
    }

    /// The type-`iota` index whose eigenvalue sits at position `x`.
    pub fn index_of(&self, iota: u8, x: i64) -> Option<i64> {
        match (self.kind, iota) {
            (RowKind::R12 | RowKind::Single, 1) | (RowKind::R34, 3) => Some(x),
            (RowKind::R12 | RowKind::Single, 2) | (RowKind::R34, 4) => Some(-x - 1),
            (RowKind::Single, 3) => self.alpha.map(|a| x + a),
            (RowKind::Single, 4) => match self.tag {
                ClassTag::D => self.beta.map(|b| x + b),
                _ => self.alpha.map(|a| -x - 1 - a),
            },
            _ => None,
        }
    }

    /// Label of cell `k` given a membership test for typed indices.
    pub fn label<F: Fn(u8, i64) -> bool>(&self, k: i64, member: &F) -> Cell {
        let mut mask = 0u8;
        let mut lower_one = false;
        let mut upper_one = false;
        for (slot, x) in self.positions(k).into_iter().enumerate() {
            for &iota in self.kind.types() {
                if let Some(n) = self.index_of(iota, x) {
                    if member(iota, n) {
                        mask |= 1 << (iota - 1);
                        if iota == 1 {
                            if slot == 1 {
                                lower_one = true;
                            } else {
                                upper_one = true;
                            }
                        }
                    }
                }
            }
        }
        let mut label = Label::from_mask(mask);
        if self.tag == ClassTag::D && mask == 1 && lower_one && !upper_one {
            label = Label::Nabla;
        }
        Cell {
            label,
            boxed: self.is_vertex(k),
        }
    }
}

/// One row: explicit cells from `start`, classical tails outside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub kind: RowKind,
    pub start: i64,
    pub cells: Vec<Cell>,
    /// Label of every cell left of the explicit ones; `None` for demi-diagrams.
    pub left: Option<Cell>,
    pub right: Cell,
}

impl Row {
    pub fn end(&self) -> i64 {
        self.start + self.cells.len() as i64
    }

    /// Cell `k`, or `None` left of a demi-diagram.
    pub fn get(&self, k: i64) -> Option<Cell> {
        if k < self.start {
            return self.left;
        }
        let i = (k - self.start) as usize;
        Some(self.cells.get(i).copied().unwrap_or(self.right))
    }

    fn normalized(mut self) -> Row {
        while self.cells.last() == Some(&self.right) {
            self.cells.pop();
        }
        if let Some(l) = self.left {
            let lead = self.cells.iter().take_while(|c| **c == l).count();
            self.cells.drain(..lead);
            self.start += lead as i64;
            if self.cells.is_empty() && l == self.right {
                self.start = 0;
            }
        }
        self
    }
}

/// A spectral diagram of a rational-gauge operator `T_rg(tau; alpha, beta) + eps`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralDiagram {
    pub tag: ClassTag,
    pub alpha: Rational,
    pub beta: Rational,
    pub eps: Rational,
    pub rows: Vec<Row>,
}

/// A label that differs between two diagrams in the same frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellChange {
    pub row: RowKind,
    pub k: i64,
    pub before: Cell,
    pub after: Cell,
}

impl SpectralDiagram {
    /// Build the rows on `[lo, hi]` from a membership test, taking the tails
    /// from the cells just outside that range.
    pub fn from_membership<F: Fn(u8, i64) -> bool>(
        tag: ClassTag,
        alpha: Rational,
        beta: Rational,
        eps: Rational,
        lo: i64,
        hi: i64,
        member: F,
    ) -> SpectralDiagram {
        let rows = row_kinds(tag)
            .iter()
            .map(|&kind| {
                let g = Geometry::new(tag, kind, &alpha, &beta);
                let first = g.min_cell().unwrap_or(lo);
                let cells: Vec<Cell> = (first..=hi.max(first)).map(|k| g.label(k, &member)).collect();
                let left = (!g.is_demi()).then(|| g.label(first - 1, &member));
                let right = g.label(hi.max(first) + 1, &member);
                Row {
                    kind,
                    start: first,
                    cells,
                    left,
                    right,
                }
                .normalized()
            })
            .collect();
        SpectralDiagram {
            tag,
            alpha,
            beta,
            eps,
            rows,
        }
    }

    /// The diagram of the operator with the given typed index sets.
    pub fn from_index_sets(tag: ClassTag, alpha: Rational, beta: Rational, eps: Rational, sets: &ClassicalIndexSets) -> SpectralDiagram {
        let totals: Vec<_> = (1..=4u8).map(|i| sets.total(i)).collect();
        let mut bound = 0i64;
        for s in sets.minus.iter().chain(sets.plus.iter()) {
            for n in s.finite_part() {
                bound = bound.max(n.abs());
            }
            if let Some(t) = s.tail() {
                bound = bound.max(t.abs());
            }
        }
        let w = bound + ceil_i64(&(abs(&alpha) + abs(&beta))) + 4;
        SpectralDiagram::from_membership(tag, alpha, beta, eps, -w, w, |iota, n| totals[(iota - 1) as usize].contains(n))
    }

    pub fn geometry(&self, kind: RowKind) -> Geometry {
        Geometry::new(self.tag, kind, &self.alpha, &self.beta)
    }

    pub fn row(&self, kind: RowKind) -> Option<&Row> {
        self.rows.iter().find(|r| r.kind == kind)
    }

    /// The row that carries type `iota`.
    pub fn row_for_type(&self, iota: u8) -> RowKind {
        match (self.tag, iota) {
            (ClassTag::A | ClassTag::D, _) => RowKind::Single,
            (_, 1 | 2) => RowKind::R12,
            _ => RowKind::R34,
        }
    }

    pub fn cell(&self, kind: RowKind, k: i64) -> Option<Cell> {
        self.row(kind).and_then(|r| r.get(k))
    }

    /// The same labels placed in the frame of the operator after an RDT of
    /// type `iota`, with parameters and spectral shift updated.
    pub fn realigned(&self, iota: u8) -> SpectralDiagram {
        let (_, alpha, beta, de) = step_table(iota, &self.alpha, &self.beta);
        let eps = &self.eps + de;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let old = self.geometry(row.kind);
                let new = Geometry::new(self.tag, row.kind, &alpha, &beta);
                let shift = row.kind.step_shift(iota);
                let pull = |k: i64| -> Cell {
                    let x = new.positions(k)[0] - shift;
                    let kk = old.cell_of(x);
                    let c = row.get(kk).unwrap_or(row.right);
                    Cell {
                        label: c.label,
                        boxed: new.is_vertex(k),
                    }
                };
                let lo = match new.min_cell() {
                    Some(m) => m,
                    None => row.start - 3,
                };
                let hi = row.end() + 3;
                Row {
                    kind: row.kind,
                    start: lo,
                    cells: (lo..=hi).map(pull).collect(),
                    left: row.left,
                    right: row.right,
                }
                .normalized()
            })
            .collect();
        SpectralDiagram {
            tag: self.tag,
            alpha,
            beta,
            eps,
            rows,
        }
    }

    /// Cell coordinate, after an RDT of type `iota`, of the eigenvalue at cell `k`.
    pub fn moved_cell(&self, kind: RowKind, iota: u8, k: i64) -> i64 {
        let (_, alpha, beta, _) = step_table(iota, &self.alpha, &self.beta);
        let new = Geometry::new(self.tag, kind, &alpha, &beta);
        new.cell_of(self.geometry(kind).positions(k)[0] + kind.step_shift(iota))
    }

    /// A copy with the label of one cell replaced.
    pub fn with_cell(&self, kind: RowKind, k: i64, cell: Cell) -> SpectralDiagram {
        let mut d = self.clone();
        if let Some(row) = d.rows.iter_mut().find(|r| r.kind == kind) {
            let lo = row.start.min(k);
            let hi = row.end().max(k + 1);
            let mut cells: Vec<Cell> = (lo..hi).map(|j| row.get(j).unwrap_or(row.right)).collect();
            cells[(k - lo) as usize] = cell;
            row.start = lo;
            row.cells = cells;
            *row = row.clone().normalized();
        }
        d
    }

    /// Cells where two diagrams in the same frame disagree.
    pub fn changes(&self, other: &SpectralDiagram) -> Vec<CellChange> {
        let mut out = Vec::new();
        for row in &self.rows {
            let Some(orow) = other.row(row.kind) else { continue };
            let lo = row.start.min(orow.start) - 1;
            let hi = row.end().max(orow.end()) + 1;
            for k in lo..=hi {
                if let (Some(a), Some(b)) = (row.get(k), orow.get(k)) {
                    if a != b {
                        out.push(CellChange {
                            row: row.kind,
                            k,
                            before: a,
                            after: b,
                        });
                    }
                }
            }
            if row.left != orow.left || row.right != orow.right {
                out.push(CellChange {
                    row: row.kind,
                    k: i64::MAX,
                    before: row.right,
                    after: orow.right,
                });
            }
        }
        out
    }

    /// Equality of class, parameters and labels, ignoring the spectral shift.
    pub fn same_labels(&self, other: &SpectralDiagram) -> bool {
        self.tag == other.tag && self.alpha == other.alpha && self.beta == other.beta && self.rows == other.rows
    }

    /// Agreement of the labels on the cells `lo..=hi` of every row.
    pub fn agrees_on(&self, other: &SpectralDiagram, lo: i64, hi: i64) -> bool {
        self.rows.iter().all(|row| {
            (lo..=hi).all(|k| {
                let a = row.get(k);
                let b = other.cell(row.kind, k);
                a.is_none() || b.is_none() || a == b
            })
        })
    }

    /// The plain diagram, with the extended label ▽ replaced by ○.
    pub fn plain(&self) -> SpectralDiagram {
        let mut d = self.clone();
        for row in &mut d.rows {
            for c in row.cells.iter_mut() {
                if c.label == Label::Nabla {
                    c.label = Label::Circ;
                }
            }
        }
        d
    }

    /// Text rendering with at least `window` cells either side of the origin.
    pub fn render(&self, window: i64) -> String {
        let mut out = format!(
            "class {} alpha={} beta={} eps={}\n",
            self.tag,
            fmt_q(&self.alpha),
            fmt_q(&self.beta),
            fmt_q(&self.eps)
        );
        for row in &self.rows {
            let lo = if row.left.is_some() { row.start.min(-window) } else { row.start };
            let hi = (row.end() - 1).max(window);
            let head = format!("row {} from {}: ", row.kind.name(), lo);
            let mut line = head.clone();
            let mut ruler = format!("{:<w$}", "ruler", w = head.len());
            if row.left.is_some() {
                line.push_str("...");
                ruler.push_str("   ");
            }
            for k in lo..=hi {
                let c = row.get(k).unwrap();
                let digit = char::from_digit((k.unsigned_abs() % 10) as u32, 10).unwrap();
                line.push_str(&c.ascii());
                if c.boxed {
                    ruler.push(' ');
                    ruler.push(digit);
                    ruler.push(' ');
                } else {
                    ruler.push(digit);
                }
            }
            line.push_str("...");
            out.push_str(&line);
            out.push('\n');
            out.push_str(ruler.trim_end());
            out.push('\n');
        }
        out
    }

    /// Parse the output of [`SpectralDiagram::render`].
    pub fn parse(text: &str) -> Result<SpectralDiagram, DiagramError> {
        let bad = |m: String| DiagramError::Parse(m);
        let mut header: Option<(ClassTag, Rational, Rational, Rational)> = None;
        let mut rows = Vec::new();
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with("ruler") {
                continue;
            }
            if let Some(rest) = line.strip_prefix("class ") {
                let mut it = rest.split_whitespace();
                let tag = it
                    .next()
                    .and_then(ClassTag::parse)
                    .ok_or_else(|| bad(format!("unknown class in '{line}'")))?;
                let (mut a, mut b, mut e) = (None, None, Some(Rational::zero()));
                for tok in it {
                    let (k, v) = tok.split_once('=').ok_or_else(|| bad(format!("expected key=value, got '{tok}'")))?;
                    let v = parse_q(v).ok_or_else(|| bad(format!("bad rational '{v}'")))?;
                    match k {
                        "alpha" => a = Some(v),
                        "beta" => b = Some(v),
                        "eps" => e = Some(v),
                        _ => return Err(bad(format!("unknown key '{k}'"))),
                    }
                }
                header = Some((
                    tag,
                    a.ok_or_else(|| bad("missing alpha".into()))?,
                    b.ok_or_else(|| bad("missing beta".into()))?,
                    e.unwrap(),
                ));
                continue;
            }
            let rest = line.strip_prefix("row ").ok_or_else(|| bad(format!("unrecognised line '{line}'")))?;
            let (head, body) = rest.split_once(':').ok_or_else(|| bad(format!("missing ':' in '{line}'")))?;
            let mut hs = head.split_whitespace();
            let kind = hs
                .next()
                .and_then(RowKind::parse)
                .ok_or_else(|| bad(format!("unknown row in '{line}'")))?;
            if hs.next() != Some("from") {
                return Err(bad(format!("expected 'from' in '{line}'")));
            }
            let start: i64 = hs
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad(format!("bad start in '{line}'")))?;
            let mut body = body.trim();
            let has_left = body.starts_with("...");
            if has_left {
                body = &body[3..];
            }
            body = body
                .strip_suffix("...")
                .ok_or_else(|| bad(format!("row must end with '...': '{line}'")))?;
            let cells = parse_cells(body).map_err(bad)?;
            if cells.is_empty() {
                return Err(bad(format!("empty row '{line}'")));
            }
            let left = has_left.then(|| cells[0]);
            let right = *cells.last().unwrap();
            rows.push(Row {
                kind,
                start,
                cells,
                left,
                right,
            });
        }
        let (tag, alpha, beta, eps) = header.ok_or_else(|| bad("missing class line".into()))?;
        let kinds: Vec<RowKind> = rows.iter().map(|r| r.kind).collect();
        if kinds != row_kinds(tag) {
            return Err(bad(format!("class {tag} needs rows {:?}", row_kinds(tag).iter().map(|k| k.name()).collect::<Vec<_>>())));
        }
        for r in &rows {
            let g = Geometry::new(tag, r.kind, &alpha, &beta);
            if g.is_demi() == r.left.is_some() {
                return Err(bad(format!("row {} has the wrong shape for class {tag}", r.kind.name())));
            }
            if let Some(m) = g.min_cell() {
                if r.start != m {
                    return Err(bad(format!("row {} must start at {m}", r.kind.name())));
                }
            }
            for (i, c) in r.cells.iter().enumerate() {
                if c.boxed != g.is_vertex(r.start + i as i64) {
                    return Err(bad(format!("misplaced vertex box in row {}", r.kind.name())));
                }
            }
        }
        let rows = rows.into_iter().map(Row::normalized).collect();
        Ok(SpectralDiagram {
            tag,
            alpha,
            beta,
            eps,
            rows,
        })
    }
}

impl fmt::Display for SpectralDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(8))
    }
}

fn abs(x: &Rational) -> Rational {
    if x < &Rational::zero() {
        -x.clone()
    } else {
        x.clone()
    }
}

fn parse_cells(body: &str) -> Result<Vec<Cell>, String> {
    let mut out = Vec::new();
    let mut it = body.chars();
    while let Some(c) = it.next() {
        if c.is_whitespace() {
            continue;
        }
        if c == '[' {
            let l = it.next().ok_or("unterminated box")?;
            if it.next() != Some(']') {
                return Err("unterminated box".into());
            }
            out.push(Cell::boxed(Label::from_char(l).ok_or(format!("unknown label '{l}'"))?));
        } else {
            out.push(Cell::plain(Label::from_char(c).ok_or(format!("unknown label '{c}'"))?));
        }
    }
    Ok(out)
}
