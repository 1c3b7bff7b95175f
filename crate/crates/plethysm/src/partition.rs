//! Integer partitions and compositions — the index objects for everything else.
//!
//! Partitions are stored normalized (weakly decreasing, no zero parts), so
//! equality, hashing and the derived `Ord` are structural. The derived `Ord`
//! compares part vectors lexicographically, which on partitions of equal size
//! coincides with the lexicographic order ≻ (missing parts read as zero); it
//! also serves as the deterministic global order for map keys and output.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// Hard cap on the number of parts any single operation will materialize.
/// Parts stay tiny throughout this domain; a literal like `2^999999999` is a
/// typo, not a workload.
const MAX_PARTS: u64 = 1 << 20;

/// A partition: weakly decreasing sequence of positive integers. The empty
/// sequence is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
    size: u64,
}

impl Partition {
    /// The empty partition, of size 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), size: 0 }
    }

    /// Builds a partition from an already weakly decreasing sequence.
    /// Zero parts may appear only as a trailing run and are trimmed.
    pub fn new(parts: impl Into<Vec<u64>>) -> Result<Self, Error> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                reason: format!("{parts:?} is not weakly decreasing"),
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::from_normalized(parts)
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u64>) -> Self {
        let mut parts: Vec<u64> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_normalized(parts).expect("sorted parts are a partition")
    }

    fn from_normalized(parts: Vec<u64>) -> Result<Self, Error> {
        let mut size: u64 = 0;
        for &p in &parts {
            size = size.checked_add(p).ok_or_else(|| Error::InvalidPartition {
                reason: "size overflows u64".into(),
            })?;
        }
        Ok(Partition { parts, size })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// The i-th part (0-indexed), or 0 beyond the last part.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// First part, i.e. the width of the diagram (0 for the empty partition).
    pub fn width(&self) -> u64 {
        self.part(0)
    }

    /// Conjugate partition λ^T: column lengths of the diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.width();
        assert!(width <= MAX_PARTS, "conjugate would need {width} parts");
        let mut cols = Vec::with_capacity(width as usize);
        let mut i = self.parts.len();
        for j in 0..width {
            // cols[j] = number of parts strictly greater than j
            while i > 0 && self.parts[i - 1] <= j {
                i -= 1;
            }
            cols.push(i as u64);
        }
        Partition { parts: cols, size: self.size }
    }

    /// Horizontal sum (λ₁+μ₁, λ₂+μ₂, …).
    pub fn add(&self, other: &Self) -> Self {
        let len = self.len().max(other.len());
        let parts: Vec<u64> = (0..len)
            .map(|i| {
                self.part(i)
                    .checked_add(other.part(i))
                    .expect("part overflow in partition add")
            })
            .collect();
        let size = self
            .size
            .checked_add(other.size)
            .expect("size overflow in partition add");
        Partition { parts, size }
    }

    /// Vertical (multiset) union λ⊔μ: all parts of both, re-sorted.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.parts, &other.parts);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                parts.push(a[i]);
                i += 1;
            } else {
                parts.push(b[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&a[i..]);
        parts.extend_from_slice(&b[j..]);
        let size = self
            .size
            .checked_add(other.size)
            .expect("size overflow in partition union");
        Partition { parts, size }
    }

    fn check_same_size(&self, other: &Self, context: &'static str) -> Result<(), Error> {
        if self.size != other.size {
            return Err(Error::SizeMismatch {
                context,
                left: self.parts.clone(),
                right: other.parts.clone(),
            });
        }
        Ok(())
    }

    /// Dominance order: λ ⊵ μ iff every prefix sum of λ is ≥ that of μ.
    /// Only defined for partitions of the same size.
    pub fn dominates(&self, other: &Self) -> Result<bool, Error> {
        self.check_same_size(other, "dominance comparison")?;
        let (mut a, mut b) = (0u64, 0u64);
        for k in 0..self.len().max(other.len()) {
            a += self.part(k);
            b += other.part(k);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Lexicographic comparison ≻ within a fixed size: first differing part
    /// decides, missing parts read as zero.
    pub fn lex_compare(&self, other: &Self) -> Result<Ordering, Error> {
        self.check_same_size(other, "lexicographic comparison")?;
        Ok(self.cmp(other))
    }

    /// Conjugate-lexicographic comparison ≻_T: lexicographic on conjugates.
    /// Note this is *not* the reverse of ≻ (and it refines reverse dominance).
    pub fn translex_compare(&self, other: &Self) -> Result<Ordering, Error> {
        self.check_same_size(other, "conjugate-lexicographic comparison")?;
        Ok(self.conjugate().cmp(&other.conjugate()))
    }

    /// ν^M: ν when the inner degree m is even, ν^T when m is odd.
    pub fn m_twist(&self, m: u64) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::TwistByZero);
        }
        Ok(if m % 2 == 0 { self.clone() } else { self.conjugate() })
    }

    /// 2[α] for α with pairwise distinct parts: the unique partition of 2|α|
    /// whose i-th row is α_i + i and whose diagonal hook lengths are 2α_i.
    /// Built row-first, then the off-diagonal rows are forced by the required
    /// column lengths α_i + i − 1; the hook condition is re-validated and a
    /// violation panics (it would mean the construction itself is wrong).
    pub fn double_bracket(&self) -> Result<Self, Error> {
        if self.parts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedParts { parts: self.parts.clone() });
        }
        let r = self.len();
        let mut rows: Vec<u64> = (0..r)
            .map(|i| self.parts[i] + (i as u64 + 1))
            .collect();
        // column j (1-indexed, j ≤ r) must end up with length α_j + j − 1
        let col_len = |j: usize| self.parts[j - 1] + j as u64 - 1;
        let total_rows = if r == 0 { 0 } else { col_len(1) };
        for i in (r as u64 + 1)..=total_rows {
            let width = (1..=r).filter(|&j| col_len(j) >= i).count() as u64;
            rows.push(width);
        }
        let out = Partition::new(rows).expect("double-bracket rows must decrease");
        assert_eq!(out.size(), 2 * self.size(), "2[α] must have size 2|α|");
        let conj = out.conjugate();
        for i in 0..r {
            let hook = out.parts[i] + conj.parts[i] - 2 * i as u64 - 1;
            assert_eq!(
                hook,
                2 * self.parts[i],
                "diagonal hook length mismatch at row {i} of 2[{self}]"
            );
        }
        Ok(out)
    }

    /// Hook length of the cell (row, col), both 0-indexed. The cell must lie
    /// inside the diagram.
    pub fn hook_length(&self, row: usize, col: usize) -> u64 {
        let col_u = col as u64;
        assert!(row < self.len() && col_u < self.parts[row], "cell outside diagram");
        let conj_col = self.parts.iter().filter(|&&p| p > col_u).count() as u64;
        // arm + leg + 1
        (self.parts[row] - col_u - 1) + (conj_col - row as u64 - 1) + 1
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u64>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Vec<u64> {
        p.parts
    }
}

/// Exponent-compressed literal: `3^3,2,1` for (3,3,3,2,1); the empty
/// partition prints as the empty string. Runs of three or more equal parts
/// compress, as do runs of 1s — so (4,4,2) stays `4,4,2` while (5,3,1,1)
/// prints `5,3,1^2`, the usual hand-written style.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.parts.len() {
            let mut j = i + 1;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
            }
            if i > 0 {
                write!(f, ",")?;
            }
            let run = j - i;
            if run >= 3 || (run == 2 && self.parts[i] == 1) {
                write!(f, "{}^{}", self.parts[i], run)?;
            } else {
                for k in 0..run {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", self.parts[i])?;
                }
            }
            i = j;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the literal grammar: comma-separated positive parts, each with
    /// an optional `^multiplicity`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |reason: String| Error::Parse { literal: s.to_string(), reason };
        let body = s.trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts: Vec<u64> = Vec::new();
        for segment in body.split(',') {
            let segment = segment.trim();
            let (base, mult) = match segment.split_once('^') {
                Some((b, m)) => (b.trim(), Some(m.trim())),
                None => (segment, None),
            };
            let base: u64 = base
                .parse()
                .map_err(|_| err(format!("invalid part {base:?}")))?;
            if base == 0 {
                return Err(err("parts must be positive".into()));
            }
            let mult: u64 = match mult {
                None => 1,
                Some(m) => m
                    .parse()
                    .map_err(|_| err(format!("invalid multiplicity {m:?}")))?,
            };
            if mult == 0 {
                return Err(err("multiplicity must be positive".into()));
            }
            if parts.len() as u64 + mult > MAX_PARTS {
                return Err(err(format!("more than {MAX_PARTS} parts")));
            }
            parts.extend(std::iter::repeat_n(base, mult as usize));
        }
        Partition::new(parts).map_err(|e| err(e.to_string()))
    }
}

/// A composition: finite sequence of nonnegative integers. Trailing zeros are
/// trimmed at construction so that equality and hashing see canonical forms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u64>", into = "Vec<u64>")]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<u64>>) -> Self {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .expect("composition size overflows u64")
    }

    /// The k-th component (0-indexed), or 0 beyond the stored prefix.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Sorts the components into a partition.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.parts.iter().copied())
    }

    /// True iff the components are already weakly decreasing (and hence the
    /// composition *is* a partition, possibly with trailing zeros trimmed).
    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }
}

impl From<Vec<u64>> for Composition {
    fn from(parts: Vec<u64>) -> Self {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u64> {
    fn from(c: Composition) -> Vec<u64> {
        c.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

/// All partitions of `n` (or all with pairwise distinct parts), in decreasing
/// lexicographic order.
pub fn enumerate_partitions(n: u64, distinct_only: bool) -> Vec<Partition> {
    fn rec(
        remaining: u64,
        max_part: u64,
        distinct: bool,
        prefix: &mut Vec<u64>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()).expect("prefix is weakly decreasing"));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, if distinct { p - 1 } else { p }, distinct, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, distinct_only, &mut Vec::new(), &mut out);
    out
}
