//! The power-sum route to plethysm: symmetric-group characters by the
//! Murnaghan–Nakayama rule, and an independent oracle that expands both
//! Schur functions over power sums, substitutes p_k∘p_l = p_{kl}, and
//! converts back with exact rational arithmetic.
//!
//! This pipeline shares no code with the monomial-basis engine beyond the
//! partition type, which is what makes the two-algorithm agreement sweep a
//! meaningful check.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partition::{enumerate_partitions, Partition};
use crate::schur::SchurExpansion;
use crate::Error;

/// Memoized irreducible character values χ^λ(ρ) of symmetric groups.
pub struct CharTable {
    memo: HashMap<(Partition, Partition), BigInt>,
}

impl CharTable {
    pub fn new() -> Self {
        CharTable { memo: HashMap::new() }
    }

    /// χ^λ(ρ) for |λ| = |ρ|, by removing a border strip of the largest cycle
    /// length. Strips are parameterized by their first and last rows (t, b):
    /// the removal leaves row i at λ_{i+1}−1 for t ≤ i < b and row b at
    /// λ_t + (b−t) − k, valid exactly when that value lands in
    /// [λ_{b+1}, λ_b − 1]; the sign is (−1)^{b−t}.
    pub fn value(&mut self, shape: &Partition, cycle_type: &Partition) -> BigInt {
        assert_eq!(
            shape.size(),
            cycle_type.size(),
            "character of {shape} at {cycle_type}"
        );
        if shape.is_empty() {
            return BigInt::one();
        }
        if let Some(hit) = self.memo.get(&(shape.clone(), cycle_type.clone())) {
            return hit.clone();
        }
        let k = cycle_type.part(0) as i64;
        let rest = Partition::new(cycle_type.parts()[1..].to_vec())
            .expect("suffix of a partition is a partition");
        let mut total = BigInt::zero();
        for b in 0..shape.len() {
            for t in 0..=b {
                let last_row = shape.part(t) as i64 + (b as i64 - t as i64) - k;
                if last_row < shape.part(b + 1) as i64 || last_row > shape.part(b) as i64 - 1 {
                    continue;
                }
                let mut remaining: Vec<u64> = shape.parts().to_vec();
                for (slot, &below) in remaining[t..b].iter_mut().zip(&shape.parts()[t + 1..=b]) {
                    *slot = below - 1;
                }
                remaining[b] = last_row as u64;
                let inner = Partition::new(remaining).expect("strip removal keeps order");
                let term = self.value(&inner, &rest);
                if (b - t) % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
        }
        self.memo
            .insert((shape.clone(), cycle_type.clone()), total.clone());
        total
    }
}

impl Default for CharTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Centralizer order z_ρ = Π k^{m_k} m_k! over the part multiplicities.
pub fn zee(cycle_type: &Partition) -> BigInt {
    let mut out = BigInt::one();
    let parts = cycle_type.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i + 1;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        for rep in 1..=(j - i) as u64 {
            out *= BigInt::from(parts[i]) * rep;
        }
        i = j;
    }
    out
}

/// s_ν∘s_μ through the power-sum basis, sharing only the character table
/// with other calls. Exact rationals internally; the final coefficients must
/// come out as nonnegative integers or the oracle reports a bug.
pub fn plethysm_powersum_cached(
    nu: &Partition,
    mu: &Partition,
    chars: &mut CharTable,
) -> Result<SchurExpansion, Error> {
    if nu.is_empty() || mu.is_empty() {
        return Err(Error::EmptyPartition { context: "plethysm operand" });
    }
    let n = nu.size();
    let m = mu.size();
    let degree = m.checked_mul(n).expect("degree overflow");

    // p_k ∘ s_μ = Σ_{σ⊢m} (χ^μ(σ)/z_σ) p_{kσ}, precomputed for k = 1..n
    let inner_types = enumerate_partitions(m, false);
    let mut pk_of_mu: Vec<Vec<(Partition, BigRational)>> = Vec::with_capacity(n as usize + 1);
    pk_of_mu.push(Vec::new()); // k = 0 unused
    for k in 1..=n {
        let mut row = Vec::new();
        for sigma in &inner_types {
            let chi = chars.value(mu, sigma);
            if chi.is_zero() {
                continue;
            }
            let scaled = Partition::new(
                sigma.parts().iter().map(|&p| p * k).collect::<Vec<_>>(),
            )
            .expect("scaling preserves order");
            row.push((scaled, BigRational::new(chi, zee(sigma))));
        }
        pk_of_mu.push(row);
    }

    // s_ν∘s_μ = Σ_{ρ⊢n} (χ^ν(ρ)/z_ρ) Π_i (p_{ρ_i} ∘ s_μ), collected by the
    // cycle type τ ⊢ mn (products of power sums concatenate cycle types)
    let mut total: HashMap<Partition, BigRational> = HashMap::new();
    for rho in enumerate_partitions(n, false) {
        let chi = chars.value(nu, &rho);
        if chi.is_zero() {
            continue;
        }
        let mut acc: HashMap<Partition, BigRational> = HashMap::new();
        acc.insert(Partition::empty(), BigRational::new(chi, zee(&rho)));
        for &part in rho.parts() {
            let mut next: HashMap<Partition, BigRational> = HashMap::new();
            for (tau, coeff) in &acc {
                for (extra, factor) in &pk_of_mu[part as usize] {
                    let combined = tau.union(extra);
                    let entry = next.entry(combined).or_insert_with(BigRational::zero);
                    *entry += coeff * factor;
                }
            }
            acc = next;
        }
        for (tau, coeff) in acc {
            if !coeff.is_zero() {
                *total.entry(tau).or_insert_with(BigRational::zero) += coeff;
            }
        }
    }

    // back to the Schur basis: coefficient of s_λ is Σ_τ total[τ]·χ^λ(τ)
    let mut terms = Vec::new();
    for lambda in enumerate_partitions(degree, false) {
        let mut c = BigRational::zero();
        for (tau, coeff) in &total {
            if coeff.is_zero() {
                continue;
            }
            let chi = chars.value(&lambda, tau);
            if !chi.is_zero() {
                c += coeff * BigRational::from(chi);
            }
        }
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::NonIntegralCoefficient {
                partition: lambda.parts().to_vec(),
                coefficient: c.to_string(),
            });
        }
        let c = c.to_integer();
        if c.is_negative() {
            return Err(Error::NegativeCoefficient {
                partition: lambda.parts().to_vec(),
                coefficient: c.to_string(),
            });
        }
        terms.push((lambda, c));
    }
    SchurExpansion::new(degree, terms)
}

/// `plethysm_powersum_cached` with a throwaway character table.
pub fn plethysm_powersum(nu: &Partition, mu: &Partition) -> Result<SchurExpansion, Error> {
    plethysm_powersum_cached(nu, mu, &mut CharTable::new())
}
