//! Integer index sets that are either finite or cofinite in a half-line.

use std::collections::BTreeSet;
use std::fmt;

/// A set of integers of the form `finite ∪ {n : n >= tail}`.
///
/// Elements of `finite` are kept strictly below `tail` so that the
/// representation is unique.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IndexSet {
    finite: BTreeSet<i64>,
    tail: Option<i64>,
}

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet::default()
    }

    /// The natural numbers `{0, 1, 2, ...}`.
    pub fn naturals() -> Self {
        IndexSet::from_tail(0)
    }

    /// `{n : n >= t}`.
    pub fn from_tail(t: i64) -> Self {
        IndexSet {
            finite: BTreeSet::new(),
            tail: Some(t),
        }
    }

    pub fn finite<I: IntoIterator<Item = i64>>(it: I) -> Self {
        IndexSet {
            finite: it.into_iter().collect(),
            tail: None,
        }
        .normalized()
    }

    /// `{lo, ..., hi - 1}`.
    pub fn range(lo: i64, hi: i64) -> Self {
        IndexSet::finite(lo..hi)
    }

    fn normalized(mut self) -> Self {
        if let Some(mut t) = self.tail {
            while self.finite.contains(&(t - 1)) {
                t -= 1;
            }
            self.finite.retain(|&n| n < t);
            self.tail = Some(t);
        }
        self
    }

    pub fn contains(&self, n: i64) -> bool {
        self.finite.contains(&n) || self.tail.is_some_and(|t| n >= t)
    }

    pub fn is_empty(&self) -> bool {
        self.finite.is_empty() && self.tail.is_none()
    }

    pub fn is_finite(&self) -> bool {
        self.tail.is_none()
    }

    /// Start of the infinite tail, if any.
    pub fn tail(&self) -> Option<i64> {
        self.tail
    }

    /// The elements below the tail.
    pub fn finite_part(&self) -> &BTreeSet<i64> {
        &self.finite
    }

    /// Smallest element.
    pub fn min(&self) -> Option<i64> {
        self.finite.iter().next().copied().or(self.tail)
    }

    /// Largest element of a finite set.
    pub fn max_finite(&self) -> Option<i64> {
        if self.tail.is_some() {
            None
        } else {
            self.finite.iter().next_back().copied()
        }
    }

    pub fn len_finite(&self) -> Option<usize> {
        if self.tail.is_some() {
            None
        } else {
            Some(self.finite.len())
        }
    }

    /// Elements in `[lo, hi]`, ascending.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&n| self.contains(n)).collect()
    }

    /// The first `n` elements in ascending order.
    pub fn first_n(&self, n: usize) -> Vec<i64> {
        let mut out: Vec<i64> = self.finite.iter().copied().take(n).collect();
        if let Some(t) = self.tail {
            let mut k = t;
            while out.len() < n {
                out.push(k);
                k += 1;
            }
        }
        out
    }

    /// Translate every element by `s`.
    pub fn shift(&self, s: i64) -> Self {
        IndexSet {
            finite: self.finite.iter().map(|n| n + s).collect(),
            tail: self.tail.map(|t| t + s),
        }
    }

    /// The reflection `n -> c - n`; defined only for finite sets.
    pub fn reflect(&self, c: i64) -> Self {
        assert!(self.tail.is_none(), "reflection of an infinite index set");
        IndexSet::finite(self.finite.iter().map(|n| c - n))
    }

    pub fn union(&self, o: &IndexSet) -> Self {
        let tail = match (self.tail, o.tail) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (None, None) => None,
        };
        let finite: BTreeSet<i64> = self.finite.union(&o.finite).copied().collect();
        IndexSet { finite, tail }.normalized()
    }

    /// Set difference with a finite set.
    pub fn minus(&self, o: &BTreeSet<i64>) -> Self {
        let mut finite: BTreeSet<i64> = self.finite.difference(o).copied().collect();
        let mut tail = self.tail;
        if let Some(t) = tail {
            let above: Vec<i64> = o.iter().copied().filter(|&n| n >= t).collect();
            if let Some(&mx) = above.iter().max() {
                for n in t..=mx {
                    if !o.contains(&n) {
                        finite.insert(n);
                    }
                }
                tail = Some(mx + 1);
            }
        }
        IndexSet { finite, tail }.normalized()
    }

    /// Split into the parts below `lo` and at or above `lo`.
    pub fn split_at(&self, lo: i64) -> (IndexSet, IndexSet) {
        let below = IndexSet::finite(
            self.finite
                .iter()
                .copied()
                .filter(|&n| n < lo)
                .chain(self.tail.map_or(0..0, |t| t..lo.max(t))),
        );
        let mut above_f: BTreeSet<i64> = self.finite.iter().copied().filter(|&n| n >= lo).collect();
        let tail = self.tail.map(|t| t.max(lo));
        if tail.is_none() {
            return (below, IndexSet { finite: above_f, tail: None }.normalized());
        }
        above_f.retain(|&n| n < tail.unwrap());
        (below, IndexSet { finite: above_f, tail }.normalized())
    }

    /// Text form such as `{-2, 0, 1, 3, ...}`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.finite.iter().map(|n| n.to_string()).collect();
        if let Some(t) = self.tail {
            parts.push(format!("{t}"));
            parts.push("...".into());
        }
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}
