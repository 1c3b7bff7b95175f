//! The Schur basis: expansions keyed by partitions, Schur polynomials in the
//! monomial basis, and the triangular change of basis back.
//!
//! `to_schur` eliminates against the lex-greatest surviving exponent
//! partition. Kostka unitriangularity (K_{λλ} = 1, K_{λα} ≠ 0 only when
//! λ dominates α, hence λ ≽ α in lex) guarantees the loop strictly lowers
//! the pivot and never needs fractions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::monomial::MonomialExpansion;
use crate::partition::Partition;
use crate::tableau::KostkaTable;
use crate::Error;

/// A finite integer combination of Schur functions, homogeneous of a fixed
/// degree. Plethysm outputs always carry positive coefficients; the type
/// itself only insists they are nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "SchurExpansionRepr", into = "SchurExpansionRepr")]
pub struct SchurExpansion {
    degree: u64,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn new(
        degree: u64,
        terms: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for (key, coeff) in terms {
            if key.size() != degree {
                return Err(Error::DegreeMismatch {
                    context: "Schur expansion term",
                    expected: degree,
                    found: key.size(),
                });
            }
            if coeff.is_zero() {
                return Err(Error::InvalidArgument {
                    reason: format!("zero coefficient stored for {key}"),
                });
            }
            if map.insert(key.clone(), coeff).is_some() {
                return Err(Error::InvalidArgument {
                    reason: format!("duplicate term {key}"),
                });
            }
        }
        Ok(SchurExpansion { degree, terms: map })
    }

    /// The expansion of a single Schur function, {λ: 1}.
    pub fn single(key: Partition) -> Self {
        let degree = key.size();
        let mut terms = BTreeMap::new();
        terms.insert(key, BigInt::one());
        SchurExpansion { degree, terms }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of s_λ (zero when absent).
    pub fn coefficient(&self, key: &Partition) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in descending lexicographic order of the partition key.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Applies the ω involution term by term: s_λ ↦ s_{λ^T}.
    pub fn conjugate(&self) -> Self {
        SchurExpansion {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(key, coeff)| (key.conjugate(), coeff.clone()))
                .collect(),
        }
    }

    /// True when every coefficient is ≥ 1, as plethysm outputs must be.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

/// One line per term, `partition_literal: coefficient`, lex-descending.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (key, coeff)) in self.terms_desc().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{key}: {coeff}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SchurTermRepr {
    partition: Partition,
    coefficient: String,
}

#[derive(Serialize, Deserialize)]
struct SchurExpansionRepr {
    degree: u64,
    terms: Vec<SchurTermRepr>,
}

impl TryFrom<SchurExpansionRepr> for SchurExpansion {
    type Error = Error;
    fn try_from(repr: SchurExpansionRepr) -> Result<Self, Error> {
        let terms = repr
            .terms
            .into_iter()
            .map(|t| {
                let coeff = BigInt::from_str(&t.coefficient).map_err(|_| Error::Parse {
                    literal: t.coefficient.clone(),
                    reason: "not a decimal integer".into(),
                })?;
                Ok((t.partition, coeff))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        SchurExpansion::new(repr.degree, terms)
    }
}

impl From<SchurExpansion> for SchurExpansionRepr {
    fn from(e: SchurExpansion) -> SchurExpansionRepr {
        SchurExpansionRepr {
            degree: e.degree,
            terms: e
                .terms_desc()
                .map(|(key, coeff)| SchurTermRepr {
                    partition: key.clone(),
                    coefficient: coeff.to_string(),
                })
                .collect(),
        }
    }
}

/// The Schur polynomial s_λ(x₁,…,x_n) in the monomial basis: the coefficient
/// of m_α is the Kostka number K_{λα}. Empty when λ has more parts than
/// variables.
pub fn schur_monomials_cached(
    shape: &Partition,
    num_vars: usize,
    kostka: &mut KostkaTable,
) -> MonomialExpansion {
    let mut out = MonomialExpansion::zero(num_vars);
    if shape.len() > num_vars {
        return out;
    }
    for alpha in crate::partition::enumerate_partitions(shape.size(), false) {
        if alpha.len() > num_vars {
            continue;
        }
        let k = kostka.count(shape, &alpha);
        if k > 0 {
            out.add_assign_term(alpha, &BigInt::from(k));
        }
    }
    out
}

/// `schur_monomials_cached` with a throwaway Kostka table.
pub fn schur_monomials(shape: &Partition, num_vars: usize) -> MonomialExpansion {
    schur_monomials_cached(shape, num_vars, &mut KostkaTable::new())
}

/// Rewrites a homogeneous symmetric polynomial in the Schur basis of its own
/// variable count. With `require_positive`, a negative Schur coefficient is
/// an error (plethysm outputs must be Schur-positive, so one signals a bug
/// upstream).
pub fn to_schur_cached(
    f: &MonomialExpansion,
    degree: u64,
    require_positive: bool,
    kostka: &mut KostkaTable,
) -> Result<SchurExpansion, Error> {
    for key in f.terms().keys() {
        if key.size() != degree {
            return Err(Error::NotSymmetric {
                reason: format!(
                    "exponent {key} has degree {} in a degree-{degree} polynomial",
                    key.size()
                ),
            });
        }
    }
    let mut remainder = f.clone();
    let mut terms: Vec<(Partition, BigInt)> = Vec::new();
    while let Some((pivot, coeff)) = remainder
        .terms()
        .last_key_value()
        .map(|(k, c)| (k.clone(), c.clone()))
    {
        if require_positive && coeff.is_negative() {
            return Err(Error::NegativeCoefficient {
                partition: pivot.parts().to_vec(),
                coefficient: coeff.to_string(),
            });
        }
        let basis = schur_monomials_cached(&pivot, f.nvars(), kostka);
        remainder.add_assign_scaled(&basis, &(-&coeff));
        debug_assert!(remainder.coefficient(&pivot).is_zero());
        terms.push((pivot, coeff));
    }
    SchurExpansion::new(degree, terms)
}

/// `to_schur_cached` with a throwaway Kostka table.
pub fn to_schur(
    f: &MonomialExpansion,
    degree: u64,
    require_positive: bool,
) -> Result<SchurExpansion, Error> {
    to_schur_cached(f, degree, require_positive, &mut KostkaTable::new())
}
