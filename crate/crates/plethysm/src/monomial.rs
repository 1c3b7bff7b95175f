//! Exact arithmetic on symmetric polynomials in the monomial basis.
//!
//! A symmetric polynomial in a fixed number of variables is stored as a map
//! from sorted exponent vectors (partitions) to integer coefficients. The
//! basis product m_λ·m_μ is computed by orbit counting: enumerate the
//! smaller orbit of exponent vectors once, bucket the sums, and divide out
//! the orbit sizes. Everything stays in exact integers; divisions are
//! asserted exact.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// An integer symmetric polynomial in `nvars` variables, written in the
/// monomial basis. Keys with more parts than variables denote the zero
/// polynomial and are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialExpansion {
    nvars: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl MonomialExpansion {
    pub fn zero(nvars: usize) -> Self {
        MonomialExpansion { nvars, terms: BTreeMap::new() }
    }

    /// The constant polynomial 1 (the empty-partition monomial).
    pub fn one(nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        out.add_assign_term(Partition::empty(), &BigInt::one());
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    /// Coefficient of m_λ (zero when absent).
    pub fn coefficient(&self, key: &Partition) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_assign_term(&mut self, key: Partition, coeff: &BigInt) {
        if coeff.is_zero() || key.len() > self.nvars {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            // borrow rules: rebuild the removal outside the entry handle
            let dead: Vec<Partition> = self
                .terms
                .iter()
                .filter(|(_, c)| c.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    /// self += c · other.
    pub fn add_assign_scaled(&mut self, other: &Self, c: &BigInt) {
        assert_eq!(self.nvars, other.nvars, "variable counts must agree");
        for (key, coeff) in &other.terms {
            self.add_assign_term(key.clone(), &(coeff * c));
        }
    }

    /// The substitution x_i → x_i^k, i.e. m_λ ↦ m_{kλ}. This is exactly the
    /// effect of a power sum applied to this polynomial's alphabet.
    pub fn scale_exponents(&self, k: u64) -> Self {
        assert!(k > 0, "exponent scaling needs k ≥ 1");
        let mut out = Self::zero(self.nvars);
        for (key, coeff) in &self.terms {
            let scaled = Partition::new(
                key.parts().iter().map(|&p| p.checked_mul(k).expect("exponent overflow")).collect::<Vec<_>>(),
            )
            .expect("scaling preserves order");
            out.add_assign_term(scaled, coeff);
        }
        out
    }

    /// Product, memoized per basis pair through the shared cache.
    pub fn mul(&self, other: &Self, cache: &mut MulCache) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable counts must agree");
        let mut out = Self::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for (key, mult) in cache.basis_product(a, b, self.nvars).iter() {
                    out.add_assign_term(key.clone(), &(mult * &c));
                }
            }
        }
        out
    }

    /// Divides every coefficient by `d`, asserting exactness. Newton-style
    /// recurrences produce r·h_r; this recovers h_r without rationals.
    pub fn div_exact(&mut self, d: &BigInt) {
        assert!(!d.is_zero(), "division by zero");
        for coeff in self.terms.values_mut() {
            let (q, r) = coeff.div_rem(d);
            assert!(r.is_zero(), "inexact division by {d}");
            *coeff = q;
        }
    }

    /// Specialization x₁ = … = x_n = 1: each m_λ contributes its orbit size.
    pub fn eval_at_ones(&self) -> BigInt {
        let mut total = BigInt::zero();
        for (key, coeff) in &self.terms {
            total += coeff * orbit_size(key, self.nvars);
        }
        total
    }
}

/// Number of distinct rearrangements of λ padded with zeros to `nvars`
/// entries: n! / ((n−ℓ)! · Π_p mult_p!).
pub fn orbit_size(key: &Partition, nvars: usize) -> BigInt {
    assert!(key.len() <= nvars, "{key} does not fit in {nvars} variables");
    let mut result = factorial(nvars as u64);
    result /= factorial((nvars - key.len()) as u64);
    let parts = key.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i + 1;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        result /= factorial((j - i) as u64);
        i = j;
    }
    result
}

fn factorial(n: u64) -> BigInt {
    let mut out = BigInt::one();
    for k in 2..=n {
        out *= k;
    }
    out
}

/// Steps `v` to its next distinct rearrangement in lexicographic order;
/// returns false once `v` is the descending (final) arrangement.
pub(crate) fn next_permutation(v: &mut [u64]) -> bool {
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

/// One cached basis product: (partition, coefficient) pairs behind an Arc so
/// repeated lookups share storage.
pub type BasisProduct = Arc<Vec<(Partition, BigInt)>>;

/// Memoized monomial basis products m_λ·m_μ, keyed by (λ, μ, nvars) with the
/// pair normalized so both orders hit the same slot.
pub struct MulCache {
    memo: HashMap<(Partition, Partition, usize), BasisProduct>,
}

impl MulCache {
    pub fn new() -> Self {
        MulCache { memo: HashMap::new() }
    }

    /// Expansion of m_a·m_b in `nvars` variables as (partition, coefficient)
    /// pairs.
    pub fn basis_product(&mut self, a: &Partition, b: &Partition, nvars: usize) -> BasisProduct {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let key = (lo.clone(), hi.clone(), nvars);
        if let Some(hit) = self.memo.get(&key) {
            return Arc::clone(hit);
        }
        let product = Arc::new(basis_product_uncached(lo, hi, nvars));
        self.memo.insert(key, Arc::clone(&product));
        product
    }
}

impl Default for MulCache {
    fn default() -> Self {
        Self::new()
    }
}

/// Orbit counting: with ā the fixed descending exponent vector of `a`, count
/// for each ν the rearrangements b̄ of `b` with sort(ā + b̄) = ν. Summing the
/// product over (rearrangement of a, rearrangement of b) pairs in two ways
/// gives coeff(ν) · |orbit(ν)| = |orbit(a)| · count(ν).
fn basis_product_uncached(a: &Partition, b: &Partition, nvars: usize) -> Vec<(Partition, BigInt)> {
    if a.len() > nvars || b.len() > nvars {
        return Vec::new();
    }
    // enumerate the smaller orbit; keep the other side fixed
    let (fixed, moved) = if orbit_size(a, nvars) <= orbit_size(b, nvars) {
        (b, a)
    } else {
        (a, b)
    };
    let mut fixed_vec = vec![0u64; nvars];
    fixed_vec[..fixed.len()].copy_from_slice(fixed.parts());
    // ascending start for the rearrangement walk
    let mut moved_vec = vec![0u64; nvars];
    moved_vec[nvars - moved.len()..].copy_from_slice(moved.parts());
    moved_vec[nvars - moved.len()..].reverse();

    let mut counts: HashMap<Partition, u64> = HashMap::new();
    loop {
        let sum = Partition::from_unsorted(
            fixed_vec.iter().zip(&moved_vec).map(|(&x, &y)| x + y),
        );
        *counts.entry(sum).or_insert(0) += 1;
        if !next_permutation(&mut moved_vec) {
            break;
        }
    }

    let fixed_orbit = orbit_size(fixed, nvars);
    let mut out: Vec<(Partition, BigInt)> = counts
        .into_iter()
        .map(|(key, cnt)| {
            let (q, r) = (&fixed_orbit * BigInt::from(cnt)).div_rem(&orbit_size(&key, nvars));
            assert!(r.is_zero(), "orbit division must be exact for m_{a}·m_{b}");
            (key, q)
        })
        .collect();
    out.sort_by(|(x, _), (y, _)| x.cmp(y));
    out
}
