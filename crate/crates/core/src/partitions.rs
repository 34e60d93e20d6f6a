//! Integer partitions and skew shapes.
//!
//! A [`Partition`] is stored without trailing zeros, so two partitions that
//! differ only by padding compare and hash equal.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary nonnegative parts by sorting them.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(d)`.
    pub fn row(d: usize) -> Self {
        if d == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![d] }
        }
    }

    /// The one-column partition `(1^d)`.
    pub fn column(d: usize) -> Self {
        Partition { parts: vec![1; d] }
    }

    /// The hook `(a, 1^b)`; requires `a >= 1` unless `b == 0`.
    pub fn hook(a: usize, b: usize) -> Self {
        if a == 0 {
            return Self::column(b);
        }
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, b));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-indexed); parts beyond the length read as zero.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The first part, or zero for the empty partition.
    pub fn first(&self) -> usize {
        self.get(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// True iff `inner` fits inside `self` componentwise.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Dominance order on partitions of equal size: `self >= other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::IncomparableSizes(self.size(), other.size()));
        }
        let rows = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..rows {
            a += self.get(i);
            b += other.get(i);
            if b > a {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Componentwise sum `self + other`.
    pub fn add(&self, other: &Partition) -> Partition {
        let rows = self.len().max(other.len());
        Partition {
            parts: (0..rows).map(|i| self.get(i) + other.get(i)).collect(),
        }
    }

    /// True iff the Young diagram fits in a box with `rows` rows and `cols` columns.
    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    /// True iff the diagram fits in the `(m, n)` hook, i.e. `λ_{m+1} <= n`.
    pub fn fits_in_hook(&self, m: usize, n: usize) -> bool {
        self.get(m) <= n
    }

    /// Parts padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Option<Vec<usize>> {
        if self.len() > len {
            return None;
        }
        let mut v = self.parts.clone();
        v.resize(len, 0);
        Some(v)
    }

    /// All partitions contained in `self`, including `∅` and `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        sub_rec(&self.parts, 0, usize::MAX, &mut cur, &mut out);
        out
    }
}

fn sub_rec(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition { parts: cur.clone() });
    if i == outer.len() {
        return;
    }
    for v in 1..=outer[i].min(cap) {
        cur.push(v);
        sub_rec(outer, i + 1, v, cur, out);
        cur.pop();
    }
}

pub fn transpose(lambda: &Partition) -> Partition {
    lambda.transpose()
}

pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner)
}

pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    lambda.dominates(mu)
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, usize::MAX, n)
}

/// Partitions of `n` with at most `max_len` parts, each at most `max_part`.
pub fn partitions_bounded(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    bounded_rec(n, max_len, max_part, &mut cur, &mut out);
    out
}

fn bounded_rec(rest: usize, max_len: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for v in (1..=cap.min(rest)).rev() {
        cur.push(v);
        bounded_rec(rest - v, max_len, v, cur, out);
        cur.pop();
    }
}

/// Every partition whose diagram fits in a `rows × cols` box.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    let full = Partition {
        parts: if cols == 0 { Vec::new() } else { vec![cols; rows] },
    };
    full.subpartitions()
}

/// All partitions of size at most `n`.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[3,1]`, `[]`, and tolerates whitespace and trailing zeros.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition {s:?} must be written as [a,b,...]")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Column range `[start, end)` of cells in row `i`.
    pub fn row_range(&self, i: usize) -> (usize, usize) {
        (self.inner.get(i), self.outer.get(i))
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("[]").transpose(), p("[]"));
        assert_eq!(p("[2,1]").transpose(), p("[2,1]"));
        assert_eq!(p("[3,1]").transpose(), p("[2,1,1]"));
    }

    #[test]
    fn contains_examples() {
        assert!(contains(&p("[]"), &p("[4,2,1]")));
        assert!(contains(&p("[2,1]"), &p("[2,2]")));
        assert!(!contains(&p("[3]"), &p("[2,2]")));
    }

    #[test]
    fn dominance_examples() {
        let l = p("[3,2,1]");
        assert!(dominates(&l, &l).unwrap());
        assert!(dominates(&p("[2]"), &p("[1,1]")).unwrap());
        assert!(!dominates(&p("[2,2]"), &p("[3,1]")).unwrap());
        assert_eq!(
            dominates(&p("[2]"), &p("[1]")),
            Err(Error::IncomparableSizes(2, 1))
        );
    }

    #[test]
    fn parse_and_normalize() {
        assert_eq!(p("[3, 1, 0, 0]"), Partition::new(vec![3, 1]).unwrap());
        assert_eq!(p("[3,1,0]").to_string(), "[3,1]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..9).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        // binomial(2 + 3, 2) partitions fit in a 2x3 box
        assert_eq!(partitions_in_box(2, 3).len(), 10);
        assert_eq!(p("[2,1]").subpartitions().len(), 5);
    }

    #[test]
    fn skew_shape_requires_containment() {
        assert!(SkewShape::new(p("[2,2]"), p("[1]")).is_ok());
        assert!(matches!(
            SkewShape::new(p("[2]"), p("[1,1]")),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn exhaustive_transpose_involution() {
        for lam in partitions_in_box(8, 8) {
            assert_eq!(lam.transpose().transpose(), lam);
        }
    }
}
