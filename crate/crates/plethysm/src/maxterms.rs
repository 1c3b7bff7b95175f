//! Extremal constituents of a plethysm product.
//!
//! Closed-form candidates for the lexicographically and
//! transpose-lexicographically greatest constituents of s_ν∘s_μ, leading-term
//! extraction from full expansions, and an exact enumeration of all
//! dominance-maximal constituents that never expands the product.
//!
//! The dominance-maximal search walks the partitions of mn in decreasing
//! lexicographic order (a linear extension of dominance, so every potential
//! dominator of a candidate has already been classified), skips candidates
//! dominated by a confirmed maximal weight, and decides the rest by counting
//! plethystic tableaux of that exact weight. For a dominance-maximal weight α
//! the count of such tableaux equals the coefficient of s_α in the product:
//! any Schur constituent contributing to the monomial m_α would have to
//! dominate α, so only s_α itself contributes, with Kostka multiplier 1.
//! The search therefore needs no expansion, no leading-term formula, and no
//! bound that presupposes the identities being verified elsewhere.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::partition::{enumerate_partitions, Partition};
use crate::schur::SchurExpansion;
use crate::Error;

/// Total orders on same-degree partitions used to pick a leading term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    Translex,
}

/// The closed-form lexicographically greatest constituent of s_ν∘s_μ:
/// (nμ₁, …, nμ_{ℓ−1}, nμ_ℓ − n + ν₁, ν₂, ν₃, …) with n = |ν|, ℓ = ℓ(μ).
pub fn max_lex(nu: &Partition, mu: &Partition) -> Result<Partition, Error> {
    if nu.is_empty() || mu.is_empty() {
        return Err(Error::EmptyPartition { context: "maximal term formula" });
    }
    let n = nu.size();
    let l = mu.len();
    let mut parts = Vec::with_capacity(l + nu.len() - 1);
    for i in 0..l - 1 {
        parts.push(n * mu.part(i));
    }
    parts.push(n * mu.part(l - 1) - n + nu.part(0));
    parts.extend_from_slice(&nu.parts()[1..]);
    let out = Partition::new(parts)?;
    if out.size() != n * mu.size() {
        return Err(Error::Verification {
            detail: format!("lex-maximal formula for ν={nu}, μ={mu} has size {}", out.size()),
        });
    }
    Ok(out)
}

/// The closed-form transpose-lexicographically greatest constituent of
/// s_ν∘s_μ: the conjugate of the lex formula applied to (ν twisted by |μ|,
/// μ^T).
pub fn max_translex(nu: &Partition, mu: &Partition) -> Result<Partition, Error> {
    if nu.is_empty() || mu.is_empty() {
        return Err(Error::EmptyPartition { context: "maximal term formula" });
    }
    let twisted = nu.m_twist(mu.size())?;
    Ok(max_lex(&twisted, &mu.conjugate())?.conjugate())
}

/// The greatest term of an expansion under the given order, with its
/// coefficient.
pub fn leading_term(
    expansion: &SchurExpansion,
    order: TermOrder,
) -> Result<(Partition, BigInt), Error> {
    let mut best: Option<&Partition> = None;
    for key in expansion.terms().keys() {
        let beat = match (best, order) {
            (None, _) => true,
            // same degree throughout, so both comparisons always succeed
            (Some(b), TermOrder::Lex) => key.lex_compare(b)?.is_gt(),
            (Some(b), TermOrder::Translex) => key.translex_compare(b)?.is_gt(),
        };
        if beat {
            best = Some(key);
        }
    }
    let key = best.ok_or(Error::EmptyExpansion)?;
    Ok((key.clone(), expansion.coefficient(key)))
}

/// All dominance-maximal constituents of s_ν∘s_μ with their multiplicities,
/// computed by direct tableau counting (argument order: inner shape first).
pub fn maximal_pleth_weights(
    mu: &Partition,
    nu: &Partition,
) -> Result<BTreeMap<Partition, BigInt>, Error> {
    if nu.is_empty() || mu.is_empty() {
        return Err(Error::EmptyPartition { context: "maximal weight search" });
    }
    let degree = nu.size() * mu.size();
    let counter = ExactWeightCounter::new(mu, nu);
    let mut maximal: Vec<Partition> = Vec::new();
    let mut out = BTreeMap::new();
    for alpha in enumerate_partitions(degree, false) {
        let dominated = maximal
            .iter()
            .any(|w| w.dominates(&alpha).expect("equal degrees"));
        if dominated {
            continue;
        }
        let count = counter.count(&alpha);
        if count > 0 {
            maximal.push(alpha.clone());
            out.insert(alpha, BigInt::from(count));
        }
    }
    Ok(out)
}

/// Counts plethystic tableaux of shape μ^ν whose weight is exactly a given
/// decreasing composition.
///
/// Cells are filled one value at a time in comparison order — inner columns
/// left to right, bottom to top — so the semistandard constraints and the
/// ⪯/≺ conditions against the left and upper neighbour tableaux all resolve
/// against already-placed values, the latter as three-state machines
/// (equal so far / decided / absent). Off-tree work is cut by a capacity
/// bound: a set of k values can occupy at most min(h, k) cells of an inner
/// column of height h, so the k largest remaining budgets must fit in the
/// summed column capacities of the unfilled cells.
struct ExactWeightCounter {
    cells: usize,
    inner: usize,
    /// walk position of the cell below (same inner column), if any
    below: Vec<Option<usize>>,
    /// walk position of the cell to the left (same inner row), if any
    left: Vec<Option<usize>>,
    outer_left: Vec<Option<usize>>,
    outer_up: Vec<Option<usize>>,
    /// cap_mu[k] = Σ_c min(height_c, k), saturated index
    cap_mu: Vec<u64>,
    /// inner_suff[t][k]: same sum over the cells at walk positions ≥ t
    inner_suff: Vec<Vec<u64>>,
}

#[derive(Clone, Copy, PartialEq)]
enum Rel {
    Absent,
    Equal,
    Done,
}

impl ExactWeightCounter {
    fn new(mu: &Partition, nu: &Partition) -> Self {
        let inner = mu.size() as usize;
        let width = mu.width() as usize;
        let heights: Vec<usize> = (0..width)
            .map(|j| mu.parts().iter().filter(|&&p| p as usize > j).count())
            .collect();
        // walk order: inner columns left to right, bottom to top
        let mut pos_of = vec![vec![0usize; width]; *heights.iter().max().unwrap_or(&0)];
        let mut col_of = vec![0usize; inner];
        let mut t = 0;
        for (j, &h) in heights.iter().enumerate() {
            for r in (0..h).rev() {
                pos_of[r][j] = t;
                col_of[t] = j;
                t += 1;
            }
        }
        let mut below = vec![None; inner];
        let mut left = vec![None; inner];
        for (j, &h) in heights.iter().enumerate() {
            for r in 0..h {
                let t = pos_of[r][j];
                if r + 1 < h {
                    below[t] = Some(pos_of[r + 1][j]);
                }
                if j > 0 {
                    left[t] = Some(pos_of[r][j - 1]);
                }
            }
        }

        // outer cells in row-major reading order of ν
        let mut outer_index = Vec::new();
        for (row, &len) in nu.parts().iter().enumerate() {
            for col in 0..len as usize {
                outer_index.push((row, col));
            }
        }
        let at = |row: usize, col: usize| {
            outer_index
                .iter()
                .position(|&rc| rc == (row, col))
                .expect("cell exists")
        };
        let outer_left = outer_index
            .iter()
            .map(|&(r, c)| (c > 0).then(|| at(r, c - 1)))
            .collect();
        let outer_up = outer_index
            .iter()
            .map(|&(r, c)| (r > 0 && nu.part(r - 1) as usize > c).then(|| at(r - 1, c)))
            .collect();

        let sat = mu.len().max(1);
        let cap_at = |rem: &[usize], k: usize| -> u64 {
            rem.iter().map(|&h| h.min(k) as u64).sum()
        };
        let cap_mu: Vec<u64> = (0..=sat).map(|k| cap_at(&heights, k)).collect();
        let mut inner_suff = Vec::with_capacity(inner + 1);
        for start in 0..=inner {
            let mut rem = vec![0usize; width];
            for t in start..inner {
                rem[col_of[t]] += 1;
            }
            inner_suff.push((0..=sat).map(|k| cap_at(&rem, k)).collect());
        }

        ExactWeightCounter {
            cells: outer_index.len(),
            inner,
            below,
            left,
            outer_left,
            outer_up,
            cap_mu,
            inner_suff,
        }
    }

    fn count(&self, alpha: &Partition) -> u64 {
        let sat = self.cap_mu.len() - 1;
        let mut prefix = 0;
        for k in 1..=alpha.len() {
            prefix += alpha.part(k - 1);
            if prefix > self.cells as u64 * self.cap_mu[k.min(sat)] {
                return 0;
            }
        }
        let mut budgets = vec![0u64; alpha.len() + 1];
        for (i, &p) in alpha.parts().iter().enumerate() {
            budgets[i + 1] = p;
        }
        let mut state = Dfs {
            shape: self,
            budgets,
            grid: vec![vec![0u16; self.inner]; self.cells],
            scratch: Vec::new(),
            found: 0,
        };
        state.outer(0);
        state.found
    }

    fn future_cap(&self, outer: usize, t: usize, k: usize) -> u64 {
        let sat = self.cap_mu.len() - 1;
        self.inner_suff[t][k.min(sat)]
            + (self.cells - outer - 1) as u64 * self.cap_mu[k.min(sat)]
    }
}

struct Dfs<'a> {
    shape: &'a ExactWeightCounter,
    budgets: Vec<u64>,
    grid: Vec<Vec<u16>>,
    scratch: Vec<u64>,
    found: u64,
}

impl Dfs<'_> {
    fn outer(&mut self, o: usize) {
        if o == self.shape.cells {
            self.found += 1;
            return;
        }
        let fresh = |nb: Option<usize>| if nb.is_some() { Rel::Equal } else { Rel::Absent };
        self.cell(
            o,
            0,
            fresh(self.shape.outer_left[o]),
            fresh(self.shape.outer_up[o]),
        );
    }

    fn cell(&mut self, o: usize, t: usize, left_rel: Rel, up_rel: Rel) {
        let lo = self.shape.left[t].map_or(1, |p| self.grid[o][p]);
        let hi = self.shape.below[t].map_or(self.budgets.len() as u16 - 1, |p| self.grid[o][p] - 1);
        for v in lo..=hi {
            if self.budgets[v as usize] == 0 {
                continue;
            }
            let step = |rel: Rel, nb: Option<usize>| -> Option<Rel> {
                match rel {
                    Rel::Absent => Some(Rel::Absent),
                    Rel::Done => Some(Rel::Done),
                    Rel::Equal => {
                        let nv = self.grid[nb.expect("tracked neighbour")][t];
                        match v.cmp(&nv) {
                            std::cmp::Ordering::Less => None, // neighbour would exceed us
                            std::cmp::Ordering::Equal => Some(Rel::Equal),
                            std::cmp::Ordering::Greater => Some(Rel::Done),
                        }
                    }
                }
            };
            let Some(next_left) = step(left_rel, self.shape.outer_left[o]) else {
                continue;
            };
            let Some(next_up) = step(up_rel, self.shape.outer_up[o]) else {
                continue;
            };
            let complete = t + 1 == self.shape.inner;
            if complete && next_up == Rel::Equal {
                continue; // equal tableaux may share a row, never a column
            }
            self.budgets[v as usize] -= 1;
            self.grid[o][t] = v;
            if self.feasible(o, t + 1) {
                if complete {
                    self.outer(o + 1);
                } else {
                    self.cell(o, t + 1, next_left, next_up);
                }
            }
            self.budgets[v as usize] += 1;
        }
    }

    fn feasible(&mut self, o: usize, t: usize) -> bool {
        self.scratch.clear();
        self.scratch
            .extend(self.budgets.iter().copied().filter(|&b| b > 0));
        self.scratch.sort_unstable_by(|a, b| b.cmp(a));
        let mut prefix = 0;
        for (i, &b) in self.scratch.iter().enumerate() {
            prefix += b;
            if prefix > self.shape.future_cap(o, t, i + 1) {
                return false;
            }
        }
        true
    }
}
