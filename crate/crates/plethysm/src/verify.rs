//! Exhaustive verification sweeps over plethysm products.
//!
//! Three classifications are checked against exact computation: which
//! products coincide as symmetric functions (unique factorisation up to the
//! known exceptional identities), which products have a single Schur
//! constituent (homogeneity/indecomposability), and the closed-form
//! expansion of s_{(1^n)}∘s_{(2)} into double-hook shapes. A staged equality
//! test lets the sweeps and callers distinguish large products without ever
//! expanding them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::engine::Engine;
use crate::maxterms::{max_lex, max_translex, maximal_pleth_weights};
use crate::partition::{enumerate_partitions, Partition};
use crate::schur::SchurExpansion;
use crate::Error;

/// An ordered pair (ν, μ) naming the product s_ν∘s_μ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ProductKey {
    pub nu: Partition,
    pub mu: Partition,
}

impl ProductKey {
    pub fn new(nu: Partition, mu: Partition) -> Result<Self, Error> {
        if nu.is_empty() || mu.is_empty() {
            return Err(Error::EmptyPartition { context: "product key" });
        }
        Ok(ProductKey { nu, mu })
    }

    pub fn degree(&self) -> u64 {
        self.nu.size() * self.mu.size()
    }
}

impl fmt::Display for ProductKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.nu, self.mu)
    }
}

/// Coincidence classes of equal products: every listed class has at least
/// two keys, all with byte-identical expansions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoincidenceReport {
    pub degree: u64,
    pub classes: Vec<Vec<ProductKey>>,
    pub elapsed_ms: u64,
}

/// One row of the homogeneity classification table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomogeneityRecord {
    pub nu: Partition,
    pub mu: Partition,
    pub homogeneous: bool,
    pub indecomposable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomogeneityReport {
    pub max_degree: u64,
    pub records: Vec<HomogeneityRecord>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareFormulaReport {
    pub max_n: u64,
    pub products_checked: u64,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub max_degree: u64,
    pub products_checked: u64,
    pub elapsed_ms: u64,
}

/// True iff s_ν∘s_μ has exactly one Schur constituent.
pub fn is_homogeneous(engine: &mut Engine, nu: &Partition, mu: &Partition) -> Result<bool, Error> {
    Ok(engine.plethysm(nu, mu)?.len() == 1)
}

/// True iff s_ν∘s_μ is a single Schur function with coefficient 1.
pub fn is_indecomposable(
    engine: &mut Engine,
    nu: &Partition,
    mu: &Partition,
) -> Result<bool, Error> {
    let e = engine.plethysm(nu, mu)?;
    Ok(e.len() == 1 && e.terms().values().next().expect("one term").is_one())
}

/// Whether two products expand to the same symmetric function, decided in
/// stages: degree, key identity, the closed-form leading-term signature, the
/// dominance-maximal constituents, and only then full expansions. The two
/// middle stages are certificates of inequality, so large distinguishable
/// products never get expanded.
pub fn products_equal(engine: &mut Engine, a: &ProductKey, b: &ProductKey) -> Result<bool, Error> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            context: "product comparison",
            expected: a.degree(),
            found: b.degree(),
        });
    }
    if a == b {
        return Ok(true);
    }
    if max_lex(&a.nu, &a.mu)? != max_lex(&b.nu, &b.mu)?
        || max_translex(&a.nu, &a.mu)? != max_translex(&b.nu, &b.mu)?
    {
        return Ok(false);
    }
    if maximal_pleth_weights(&a.mu, &a.nu)? != maximal_pleth_weights(&b.mu, &b.nu)? {
        return Ok(false);
    }
    Ok(engine.plethysm(&a.nu, &a.mu)? == engine.plethysm(&b.nu, &b.mu)?)
}

/// All product keys of the given total degree, in deterministic order.
fn keys_of_degree(degree: u64) -> Vec<ProductKey> {
    let mut keys = Vec::new();
    for n in 1..=degree {
        if degree % n != 0 {
            continue;
        }
        let m = degree / n;
        for nu in enumerate_partitions(n, false) {
            for mu in enumerate_partitions(m, false) {
                keys.push(ProductKey { nu: nu.clone(), mu });
            }
        }
    }
    keys
}

/// The coincidence classes a correct implementation must find at one degree:
/// s_ν∘s_(1) = s_(1)∘s_ν for every ν, the two degree-4 identities collapsing
/// single-constituent products onto that family, and the two degree-8
/// identities between genuinely composite products.
fn expected_classes(degree: u64) -> BTreeSet<BTreeSet<ProductKey>> {
    let p = |parts: &[u64]| Partition::new(parts.to_vec()).expect("literal partition");
    let key = |nu: &Partition, mu: &Partition| ProductKey {
        nu: nu.clone(),
        mu: mu.clone(),
    };
    let one = p(&[1]);
    let mut by_nu: BTreeMap<Partition, BTreeSet<ProductKey>> = BTreeMap::new();
    for nu in enumerate_partitions(degree, false) {
        let mut class = BTreeSet::new();
        class.insert(key(&nu, &one));
        class.insert(key(&one, &nu));
        by_nu.insert(nu, class);
    }
    if degree == 4 {
        by_nu
            .get_mut(&p(&[2, 1, 1]))
            .expect("present")
            .insert(key(&p(&[1, 1]), &p(&[1, 1])));
        by_nu
            .get_mut(&p(&[3, 1]))
            .expect("present")
            .insert(key(&p(&[1, 1]), &p(&[2])));
    }
    let mut out: BTreeSet<BTreeSet<ProductKey>> = by_nu
        .into_values()
        .filter(|class| class.len() >= 2)
        .collect();
    if degree == 8 {
        out.insert(
            [key(&p(&[2, 1, 1]), &p(&[2])), key(&p(&[1, 1]), &p(&[3, 1]))]
                .into_iter()
                .collect(),
        );
        out.insert(
            [
                key(&p(&[2, 1, 1]), &p(&[1, 1])),
                key(&p(&[1, 1]), &p(&[2, 1, 1])),
            ]
            .into_iter()
            .collect(),
        );
    }
    out
}

/// Sweeps every pair of products of equal degree ≤ max_degree, groups them
/// into coincidence classes, and checks that exactly the expected classes
/// appear. Grouping is prefiltered by the leading-term signature; expansions
/// are compared only within a signature collision.
pub fn verify_unique_factorization(
    engine: &mut Engine,
    max_degree: u64,
) -> Result<CoincidenceReport, Error> {
    if max_degree < 4 {
        return Err(Error::InvalidArgument {
            reason: format!("coincidence sweep needs max_degree ≥ 4, got {max_degree}"),
        });
    }
    let start = Instant::now();
    let mut classes = Vec::new();
    let mut violations = Vec::new();
    for degree in 1..=max_degree {
        let mut by_signature: BTreeMap<(Partition, Partition), Vec<ProductKey>> = BTreeMap::new();
        for key in keys_of_degree(degree) {
            let signature = (
                max_lex(&key.nu, &key.mu)?,
                max_translex(&key.nu, &key.mu)?,
            );
            by_signature.entry(signature).or_default().push(key);
        }
        let mut found: BTreeSet<BTreeSet<ProductKey>> = BTreeSet::new();
        for group in by_signature.into_values() {
            if group.len() < 2 {
                continue;
            }
            let mut by_expansion: BTreeMap<String, BTreeSet<ProductKey>> = BTreeMap::new();
            for key in group {
                let expansion = engine.plethysm(&key.nu, &key.mu)?;
                by_expansion
                    .entry(serde_json::to_string(expansion.as_ref())?)
                    .or_default()
                    .insert(key);
            }
            found.extend(by_expansion.into_values().filter(|c| c.len() >= 2));
        }
        let expected = expected_classes(degree);
        if found != expected {
            let show = |set: &BTreeSet<BTreeSet<ProductKey>>| {
                set.iter()
                    .map(|class| {
                        let members: Vec<String> =
                            class.iter().map(ProductKey::to_string).collect();
                        format!("{{{}}}", members.join(", "))
                    })
                    .collect::<Vec<_>>()
                    .join("; ")
            };
            violations.push(format!(
                "degree {degree}: found classes {} but expected {}",
                show(&found),
                show(&expected)
            ));
        }
        classes.extend(found.into_iter().map(|c| c.into_iter().collect::<Vec<_>>()));
    }
    if !violations.is_empty() {
        return Err(Error::Verification {
            detail: violations.join("\n"),
        });
    }
    Ok(CoincidenceReport {
        degree: max_degree,
        classes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Sweeps every product of degree ≤ max_degree and checks that exactly the
/// identity products (ℓ=1 on either side) and the two degree-4 column cases
/// are homogeneous, and that homogeneity and indecomposability coincide.
pub fn verify_homogeneity_classification(
    engine: &mut Engine,
    max_degree: u64,
) -> Result<HomogeneityReport, Error> {
    if max_degree < 4 {
        return Err(Error::InvalidArgument {
            reason: format!("homogeneity sweep needs max_degree ≥ 4, got {max_degree}"),
        });
    }
    let start = Instant::now();
    let column = Partition::new(vec![1, 1]).expect("literal partition");
    let row = Partition::new(vec![2]).expect("literal partition");
    let mut records = Vec::new();
    let mut violations = Vec::new();
    for degree in 1..=max_degree {
        for key in keys_of_degree(degree) {
            let homogeneous = is_homogeneous(engine, &key.nu, &key.mu)?;
            let indecomposable = is_indecomposable(engine, &key.nu, &key.mu)?;
            let predicted = key.nu.size() == 1
                || key.mu.size() == 1
                || (key.nu == column && (key.mu == column || key.mu == row));
            if homogeneous != predicted || indecomposable != predicted {
                violations.push(format!(
                    "{key}: homogeneous={homogeneous}, indecomposable={indecomposable}, \
                     predicted={predicted}"
                ));
            }
            records.push(HomogeneityRecord {
                nu: key.nu,
                mu: key.mu,
                homogeneous,
                indecomposable,
            });
        }
    }
    if !violations.is_empty() {
        return Err(Error::Verification {
            detail: violations.join("\n"),
        });
    }
    Ok(HomogeneityReport {
        max_degree,
        records,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Checks s_{(1^n)}∘s_{(2)} = Σ s_{2[α]} over distinct-part α ⊢ n, and the
/// conjugate expansion for inner shape (1,1), for every n ≤ max_n.
pub fn verify_square_formula(
    engine: &mut Engine,
    max_n: u64,
) -> Result<SquareFormulaReport, Error> {
    if max_n < 1 {
        return Err(Error::InvalidArgument {
            reason: format!("square-formula sweep needs max_n ≥ 1, got {max_n}"),
        });
    }
    let start = Instant::now();
    let row = Partition::new(vec![2]).expect("literal partition");
    let column = Partition::new(vec![1, 1]).expect("literal partition");
    let mut violations = Vec::new();
    for n in 1..=max_n {
        let ones = Partition::new(vec![1; n as usize]).expect("column partition");
        let mut terms = Vec::new();
        for alpha in enumerate_partitions(n, true) {
            terms.push((alpha.double_bracket()?, BigInt::one()));
        }
        let expected = SchurExpansion::new(2 * n, terms)?;
        if engine.plethysm(&ones, &row)?.as_ref() != &expected {
            violations.push(format!("inner row shape at n={n}"));
        }
        if engine.plethysm(&ones, &column)?.as_ref() != &expected.conjugate() {
            violations.push(format!("inner column shape at n={n}"));
        }
    }
    if !violations.is_empty() {
        return Err(Error::Verification {
            detail: format!("double-hook expansion failed: {}", violations.join(", ")),
        });
    }
    Ok(SquareFormulaReport {
        max_n,
        products_checked: 2 * max_n,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Recomputes every product of degree ≤ max_degree with the independent
/// power-sum algorithm and checks the two expansions agree exactly.
pub fn cross_check_expansions(
    engine: &mut Engine,
    max_degree: u64,
) -> Result<CrossCheckReport, Error> {
    if max_degree < 1 {
        return Err(Error::InvalidArgument {
            reason: format!("cross-check sweep needs max_degree ≥ 1, got {max_degree}"),
        });
    }
    let start = Instant::now();
    let mut checked = 0;
    let mut violations = Vec::new();
    for degree in 1..=max_degree {
        for key in keys_of_degree(degree) {
            let fast = engine.plethysm(&key.nu, &key.mu)?;
            let oracle = engine.plethysm_powersum(&key.nu, &key.mu)?;
            if fast.as_ref() != &oracle {
                violations.push(key.to_string());
            }
            checked += 1;
        }
    }
    if !violations.is_empty() {
        return Err(Error::Verification {
            detail: format!("expansion algorithms disagree on: {}", violations.join(", ")),
        });
    }
    Ok(CrossCheckReport {
        max_degree,
        products_checked: checked,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
