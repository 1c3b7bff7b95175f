//! Semistandard Young tableaux: validation, weights, the ≺ total order,
//! enumeration, and Kostka numbers.
//!
//! The ≺ order compares two same-shape tableaux at the leftmost column where
//! their entry multisets differ; whichever tableau contains the greatest
//! entry not shared by both columns is the greater. Since columns strictly
//! increase, this reduces to a positional walk from the bottom of the column
//! upwards: the first difference decides, and the side holding the larger
//! value wins (everything above the first difference is shared).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::{Composition, Partition};
use crate::Error;

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase, entries are positive.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u64>>", into = "Vec<Vec<u64>>")]
pub struct SemistandardTableau {
    shape: Partition,
    rows: Vec<Vec<u64>>,
}

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self, Error> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u64).collect::<Vec<_>>())
            .map_err(|_| Error::InvalidTableau {
                reason: "row lengths do not form a partition".into(),
            })?;
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau { reason: "empty row".into() });
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == 0 {
                    return Err(Error::InvalidTableau {
                        reason: format!("entry 0 at ({r},{c}); entries must be positive"),
                    });
                }
                if c > 0 && row[c - 1] > e {
                    return Err(Error::InvalidTableau {
                        reason: format!("row {r} decreases at column {c}"),
                    });
                }
                if r > 0 && rows[r - 1][c] >= e {
                    return Err(Error::InvalidTableau {
                        reason: format!("column {c} does not strictly increase at row {r}"),
                    });
                }
            }
        }
        Ok(SemistandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.rows[row][col]
    }

    /// Largest entry appearing anywhere (0 for the empty tableau).
    pub fn max_entry(&self) -> u64 {
        self.rows
            .iter()
            .filter_map(|r| r.last())
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Weight composition: component k−1 counts the entries equal to k.
    pub fn weight(&self) -> Composition {
        let mut counts = vec![0u64; self.max_entry() as usize];
        for row in &self.rows {
            for &e in row {
                counts[e as usize - 1] += 1;
            }
        }
        Composition::new(counts)
    }

    /// The total ≺ comparison, restricted to equal shapes.
    pub fn compare(&self, other: &Self) -> Result<Ordering, Error> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch {
                left: self.shape.parts().to_vec(),
                right: other.shape.parts().to_vec(),
            });
        }
        Ok(self.cmp(other))
    }
}

/// A total order on all tableaux: by shape first, then by the ≺ order on
/// same-shape tableaux, so sorting an enumeration never panics.
impl Ord for SemistandardTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape.cmp(&other.shape).then_with(|| {
            for j in 0..self.shape.width() as usize {
                let height = self.rows.iter().take_while(|r| r.len() > j).count();
                for r in (0..height).rev() {
                    match self.rows[r][j].cmp(&other.rows[r][j]) {
                        Ordering::Equal => {}
                        decided => return decided,
                    }
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for SemistandardTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<Vec<u64>>> for SemistandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u64>>) -> Result<Self, Error> {
        SemistandardTableau::new(rows)
    }
}

impl From<SemistandardTableau> for Vec<Vec<u64>> {
    fn from(t: SemistandardTableau) -> Vec<Vec<u64>> {
        t.rows
    }
}

/// Rows joined by `/`, entries by `,`: the (2,1)-tableau with rows [1,1],[2]
/// prints as `1,1/2`.
impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, "/")?;
            }
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SemistandardTableau({self})")
    }
}

/// The ≺ comparison as a free function, mirroring `SemistandardTableau::compare`.
pub fn tableau_compare(
    s: &SemistandardTableau,
    t: &SemistandardTableau,
) -> Result<Ordering, Error> {
    s.compare(t)
}

/// The weight of a tableau as a free function.
pub fn tableau_weight(t: &SemistandardTableau) -> Composition {
    t.weight()
}

/// All SSYT of the given shape with entries in {1..max_entry}, sorted
/// ascending by ≺.
pub fn enumerate_ssyt(shape: &Partition, max_entry: u64) -> Vec<SemistandardTableau> {
    let cells: Vec<(usize, usize)> = (0..shape.len())
        .flat_map(|r| (0..shape.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<u64>> = (0..shape.len())
        .map(|r| vec![0; shape.part(r) as usize])
        .collect();
    let mut out = Vec::new();
    fn fill(
        cells: &[(usize, usize)],
        idx: usize,
        max_entry: u64,
        shape: &Partition,
        rows: &mut Vec<Vec<u64>>,
        out: &mut Vec<SemistandardTableau>,
    ) {
        if idx == cells.len() {
            out.push(SemistandardTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        for e in lo..=max_entry {
            rows[r][c] = e;
            fill(cells, idx + 1, max_entry, shape, rows, out);
        }
        rows[r][c] = 0;
    }
    fill(&cells, 0, max_entry, shape, &mut rows, &mut out);
    out.sort();
    out
}

/// Kostka number K_{λ,α}: the number of SSYT of shape λ and weight α.
pub fn kostka(shape: &Partition, weight: &Composition) -> Result<u64, Error> {
    if shape.size() != weight.size() {
        return Err(Error::SizeMismatch {
            context: "Kostka number",
            left: shape.parts().to_vec(),
            right: weight.parts().to_vec(),
        });
    }
    Ok(KostkaTable::new().count(shape, &weight.to_partition()))
}

/// Memoized Kostka numbers for sorted weights. Kostka numbers are invariant
/// under permuting the weight, so callers sort first (`kostka` does).
pub struct KostkaTable {
    memo: HashMap<(Partition, Partition), u64>,
}

impl KostkaTable {
    pub fn new() -> Self {
        KostkaTable { memo: HashMap::new() }
    }

    /// K_{shape,weight} for a partition weight of the same size as the shape.
    /// Peels the entries of maximal value — a horizontal strip — and recurses;
    /// keeping the weight sorted smallest-last makes the strips small and the
    /// memo dense.
    pub fn count(&mut self, shape: &Partition, weight: &Partition) -> u64 {
        assert_eq!(shape.size(), weight.size(), "Kostka needs equal sizes");
        if weight.is_empty() {
            return 1; // both empty: the empty tableau
        }
        if let Some(&k) = self.memo.get(&(shape.clone(), weight.clone())) {
            return k;
        }
        let strip = weight.part(weight.len() - 1);
        let rest = Partition::new(weight.parts()[..weight.len() - 1].to_vec())
            .expect("prefix of a partition is a partition");
        // sum over inner shapes η with shape/η a horizontal strip of the right size
        let mut total = 0u64;
        let mut eta: Vec<u64> = shape.parts().to_vec();
        fn strips(
            table: &mut KostkaTable,
            shape: &Partition,
            rest: &Partition,
            eta: &mut Vec<u64>,
            row: usize,
            budget: u64,
            total: &mut u64,
        ) {
            if row == eta.len() {
                if budget == 0 {
                    let inner = Partition::new(eta.clone()).expect("strip removal keeps order");
                    *total = total
                        .checked_add(table.count(&inner, rest))
                        .expect("Kostka count overflows u64");
                }
                return;
            }
            let floor = shape.part(row + 1);
            let max_remove = (shape.part(row) - floor).min(budget);
            for d in 0..=max_remove {
                eta[row] = shape.part(row) - d;
                strips(table, shape, rest, eta, row + 1, budget - d, total);
            }
            eta[row] = shape.part(row);
        }
        strips(self, shape, &rest, &mut eta, 0, strip, &mut total);
        self.memo.insert((shape.clone(), weight.clone()), total);
        total
    }
}

impl Default for KostkaTable {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn tab(rows: &[&[u64]]) -> SemistandardTableau {
        SemistandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_accepts_semistandard_fillings_only() {
        tab(&[&[1, 1, 2], &[2, 3]]);
        tab(&[&[1]]);
        SemistandardTableau::new(vec![]).unwrap();
        assert!(SemistandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(SemistandardTableau::new(vec![vec![1, 1], vec![1]]).is_err());
        assert!(SemistandardTableau::new(vec![vec![1], vec![1, 2]]).is_err());
        assert!(SemistandardTableau::new(vec![vec![0]]).is_err());
        assert!(SemistandardTableau::new(vec![vec![1], vec![]]).is_err());
    }

    #[test]
    fn weight_counts_each_entry() {
        assert_eq!(tab(&[&[1, 1]]).weight(), Composition::new(vec![2]));
        assert_eq!(
            tab(&[&[1, 2], &[2]]).weight(),
            Composition::new(vec![1, 2])
        );
        // skipped values leave interior zeros
        assert_eq!(
            tab(&[&[1, 3], &[3]]).weight(),
            Composition::new(vec![1, 0, 2])
        );
        let empty = SemistandardTableau::new(vec![]).unwrap();
        assert_eq!(empty.weight(), Composition::new(vec![]));
        for t in enumerate_ssyt(&p(&[3, 1]), 4) {
            assert_eq!(tableau_weight(&t).size(), 4);
        }
    }

    #[test]
    fn compare_examples() {
        let s = tab(&[&[1, 1], &[2]]);
        assert_eq!(s.compare(&s).unwrap(), Ordering::Equal);
        assert_eq!(
            tab(&[&[1]]).compare(&tab(&[&[2]])).unwrap(),
            Ordering::Less
        );
        // first column {1,2} vs {1,3}: greatest non-shared entry 3 lies right
        assert_eq!(
            s.compare(&tab(&[&[1, 1], &[3]])).unwrap(),
            Ordering::Less
        );
        assert!(matches!(
            s.compare(&tab(&[&[1, 1]])),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    /// The definition, implemented verbatim on column multisets.
    fn multiset_rule(a: &SemistandardTableau, b: &SemistandardTableau) -> Ordering {
        let shape = a.shape().clone();
        for j in 0..shape.width() as usize {
            let col = |t: &SemistandardTableau| -> Vec<u64> {
                t.rows().iter().filter(|r| r.len() > j).map(|r| r[j]).collect()
            };
            let (ca, cb) = (col(a), col(b));
            if ca == cb {
                continue;
            }
            let greatest_non_shared = ca
                .iter()
                .filter(|e| !cb.contains(e))
                .chain(cb.iter().filter(|e| !ca.contains(e)))
                .max()
                .copied()
                .expect("columns differ");
            return if cb.contains(&greatest_non_shared) {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        Ordering::Equal
    }

    #[test]
    fn compare_agrees_with_the_multiset_definition() {
        for n in 0..=4u64 {
            for shape in enumerate_partitions(n, false) {
                let all = enumerate_ssyt(&shape, 4);
                for a in &all {
                    for b in &all {
                        assert_eq!(
                            a.compare(b).unwrap(),
                            multiset_rule(a, b),
                            "shape {shape}: {a} vs {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn compare_is_a_total_order_on_small_shapes() {
        for n in 0..=5u64 {
            for shape in enumerate_partitions(n, false) {
                let all = enumerate_ssyt(&shape, 5);
                for (i, a) in all.iter().enumerate() {
                    for b in &all[i + 1..] {
                        // enumeration is sorted ascending: consistency both ways
                        assert_eq!(a.compare(b).unwrap(), Ordering::Less, "{a} vs {b}");
                        assert_eq!(b.compare(a).unwrap(), Ordering::Greater, "{b} vs {a}");
                    }
                    assert_eq!(a.compare(a).unwrap(), Ordering::Equal);
                }
            }
        }
    }

    /// s_λ(1,…,1) with N ones, by the hook content formula — an independent
    /// count of SSYT(λ, entries ≤ N).
    fn hook_content_count(shape: &Partition, n_vars: u64) -> u64 {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for r in 0..shape.len() {
            for c in 0..shape.part(r) as usize {
                let content = c as i64 - r as i64;
                let factor = n_vars as i64 + content;
                if factor <= 0 {
                    return 0;
                }
                num *= factor as u128;
                den *= shape.hook_length(r, c) as u128;
            }
        }
        assert_eq!(num % den, 0);
        (num / den) as u64
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_ssyt(&p(&[1, 1]), 2).len(), 1);
        let row2 = enumerate_ssyt(&p(&[2]), 2);
        assert_eq!(
            row2,
            vec![tab(&[&[1, 1]]), tab(&[&[1, 2]]), tab(&[&[2, 2]])]
        );
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), 3).len(), 8);
        assert_eq!(enumerate_ssyt(&p(&[]), 3).len(), 1);
        assert_eq!(enumerate_ssyt(&p(&[1, 1, 1]), 2).len(), 0);
        for (shape, n) in [(p(&[3, 1]), 3), (p(&[2, 2]), 4), (p(&[3, 2]), 5), (p(&[2, 1]), 6)] {
            let all = enumerate_ssyt(&shape, n);
            assert_eq!(all.len() as u64, hook_content_count(&shape, n), "{shape} in {n} vars");
            for t in &all {
                assert_eq!(t.shape(), &shape);
                assert!(t.max_entry() <= n);
            }
        }
    }

    #[test]
    fn kostka_known_values() {
        let comp = |v: &[u64]| Composition::new(v.to_vec());
        assert_eq!(kostka(&p(&[3, 2, 1]), &comp(&[3, 2, 1])).unwrap(), 1);
        assert_eq!(kostka(&p(&[2, 1]), &comp(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[2, 2]), &comp(&[3, 1])).unwrap(), 0);
        assert_eq!(kostka(&p(&[]), &comp(&[])).unwrap(), 1);
        // interior zeros in the weight are allowed and ignored
        assert_eq!(kostka(&p(&[2, 1]), &comp(&[2, 0, 1])).unwrap(), 1);
        assert!(matches!(
            kostka(&p(&[2, 1]), &comp(&[2])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    /// Every distinct rearrangement of each weight, checked against a direct
    /// enumeration filter. Covers permutation invariance and the DP itself.
    #[test]
    fn kostka_is_invariant_under_permuting_the_weight() {
        for n in 1..=6u64 {
            for shape in enumerate_partitions(n, false) {
                for mu in enumerate_partitions(n, false) {
                    let mut arrangement: Vec<u64> = mu.parts().to_vec();
                    arrangement.reverse(); // start at the lexicographically least
                    let expected = kostka(&shape, &Composition::new(mu.parts().to_vec())).unwrap();
                    loop {
                        let alpha = Composition::new(arrangement.clone());
                        assert_eq!(
                            kostka(&shape, &alpha).unwrap(),
                            expected,
                            "K_{{{shape},{alpha}}}"
                        );
                        let brute = enumerate_ssyt(&shape, arrangement.len() as u64)
                            .into_iter()
                            .filter(|t| {
                                let w = t.weight();
                                (0..arrangement.len()).all(|k| w.part(k) == arrangement[k])
                            })
                            .count() as u64;
                        assert_eq!(brute, expected, "enumeration for K_{{{shape},{alpha}}}");
                        if !next_permutation(&mut arrangement) {
                            break;
                        }
                    }
                }
            }
        }
    }

    /// Steps to the next arrangement in lexicographic order (distinct
    /// rearrangements only); returns false after the last one.
    fn next_permutation(v: &mut [u64]) -> bool {
        if v.len() < 2 {
            return false;
        }
        let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
            return false;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        true
    }

    #[test]
    fn kostka_positivity_matches_dominance() {
        for n in 0..=8u64 {
            let all = enumerate_partitions(n, false);
            let mut table = KostkaTable::new();
            for shape in &all {
                assert_eq!(table.count(shape, shape), 1, "K_{{{shape},{shape}}}");
                for weight in &all {
                    let k = table.count(shape, weight);
                    assert_eq!(
                        k > 0,
                        shape.dominates(weight).unwrap(),
                        "K_{{{shape},{weight}}} = {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn serialization_and_display() {
        let t = tab(&[&[1, 1, 2], &[2, 3]]);
        assert_eq!(t.to_string(), "1,1,2/2,3");
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,1,2],[2,3]]");
        let back: SemistandardTableau = serde_json::from_str("[[1,1,2],[2,3]]").unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<SemistandardTableau>("[[2,1]]").is_err());
    }
}
