//! The main plethysm pipeline with shared caches.
//!
//! s_ν∘s_μ is computed as s_ν evaluated at the alphabet of s_μ's monomials:
//! power sums of the alphabet are exponent rescalings of s_μ's monomial
//! expansion, Newton's identities turn those into complete homogeneous or
//! elementary bases, a Jacobi–Trudi determinant assembles s_ν, and the
//! triangular Kostka elimination rewrites the result in the Schur basis.
//! Everything downstream of the partition type is exact integer arithmetic.
//!
//! The engine owns every cache: Kostka numbers, Schur polynomials, monomial
//! products, Newton bases per inner shape, character values for the
//! power-sum oracle, and the plethysm results themselves (optionally
//! persisted to an append-only file).

use std::collections::HashMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::monomial::{MonomialExpansion, MulCache};
use crate::partition::Partition;
use crate::powersum::{plethysm_powersum_cached, CharTable};
use crate::schur::{schur_monomials_cached, to_schur_cached, SchurExpansion};
use crate::tableau::KostkaTable;
use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum BasisKind {
    Complete,
    Elementary,
}

pub struct Engine {
    kostka: KostkaTable,
    chars: CharTable,
    mul: MulCache,
    schur_memo: HashMap<(Partition, usize), Arc<MonomialExpansion>>,
    newton_memo: HashMap<(Partition, usize, BasisKind), Vec<MonomialExpansion>>,
    plethysm_memo: HashMap<(Partition, Partition), Arc<SchurExpansion>>,
    cache_path: Option<PathBuf>,
}

impl Engine {
    pub fn new() -> Self {
        Engine {
            kostka: KostkaTable::new(),
            chars: CharTable::new(),
            mul: MulCache::new(),
            schur_memo: HashMap::new(),
            newton_memo: HashMap::new(),
            plethysm_memo: HashMap::new(),
            cache_path: None,
        }
    }

    /// An engine whose plethysm results persist to an append-only file of
    /// `ν|μ|JSON(SchurExpansion)` lines. Existing records are loaded now;
    /// unreadable lines are skipped, later duplicates win.
    pub fn with_cache_file(path: impl AsRef<Path>) -> Result<Self, Error> {
        let path = path.as_ref().to_path_buf();
        let mut engine = Engine::new();
        if path.exists() {
            for line in fs::read_to_string(&path)?.lines() {
                let mut fields = line.splitn(3, '|');
                let (Some(nu), Some(mu), Some(payload)) =
                    (fields.next(), fields.next(), fields.next())
                else {
                    continue;
                };
                let (Ok(nu), Ok(mu)) = (nu.parse::<Partition>(), mu.parse::<Partition>()) else {
                    continue;
                };
                let Ok(expansion) = serde_json::from_str::<SchurExpansion>(payload) else {
                    continue;
                };
                if nu.is_empty() || mu.is_empty() || expansion.degree() != nu.size() * mu.size() {
                    continue;
                }
                engine
                    .plethysm_memo
                    .insert((nu, mu), Arc::new(expansion));
            }
        }
        engine.cache_path = Some(path);
        Ok(engine)
    }

    /// s_λ(x₁,…,x_n) in the monomial basis, memoized.
    pub fn schur_monomials(&mut self, shape: &Partition, num_vars: usize) -> Arc<MonomialExpansion> {
        if let Some(hit) = self.schur_memo.get(&(shape.clone(), num_vars)) {
            return Arc::clone(hit);
        }
        let e = Arc::new(schur_monomials_cached(shape, num_vars, &mut self.kostka));
        self.schur_memo
            .insert((shape.clone(), num_vars), Arc::clone(&e));
        e
    }

    /// Schur-basis rewrite of a homogeneous symmetric polynomial.
    pub fn to_schur(
        &mut self,
        f: &MonomialExpansion,
        degree: u64,
        require_positive: bool,
    ) -> Result<SchurExpansion, Error> {
        to_schur_cached(f, degree, require_positive, &mut self.kostka)
    }

    /// Ensures h_0..h_upto (or e_0..e_upto) of the s_μ alphabet exist in the
    /// Newton cache, extending an earlier prefix when present.
    fn ensure_newton(
        &mut self,
        mu: &Partition,
        num_vars: usize,
        kind: BasisKind,
        upto: usize,
    ) {
        let key = (mu.clone(), num_vars, kind);
        let mut basis = self
            .newton_memo
            .remove(&key)
            .unwrap_or_else(|| vec![MonomialExpansion::one(num_vars)]);
        if basis.len() <= upto {
            let alphabet = self.schur_monomials(mu, num_vars);
            let powers: Vec<MonomialExpansion> = (1..=upto as u64)
                .map(|k| alphabet.scale_exponents(k))
                .collect();
            while basis.len() <= upto {
                let r = basis.len();
                // r·h_r = Σ p_i h_{r−i};   r·e_r = Σ (−1)^{i−1} p_i e_{r−i}
                let mut sum = MonomialExpansion::zero(num_vars);
                for i in 1..=r {
                    let term = powers[i - 1].mul(&basis[r - i], &mut self.mul);
                    let sign = match kind {
                        BasisKind::Complete => 1,
                        BasisKind::Elementary if i % 2 == 1 => 1,
                        BasisKind::Elementary => -1,
                    };
                    sum.add_assign_scaled(&term, &BigInt::from(sign));
                }
                sum.div_exact(&BigInt::from(r as u64));
                basis.push(sum);
            }
        }
        self.newton_memo.insert(key, basis);
    }

    /// The monomial expansion of s_ν∘s_μ in mn variables: the coefficient of
    /// m_α is the number of plethystic semistandard tableaux of shape μ^ν
    /// whose weight is exactly the decreasing composition α.
    pub fn plethysm_monomial(
        &mut self,
        nu: &Partition,
        mu: &Partition,
    ) -> Result<MonomialExpansion, Error> {
        if nu.is_empty() || mu.is_empty() {
            return Err(Error::EmptyPartition { context: "plethysm operand" });
        }
        let num_vars = nu
            .size()
            .checked_mul(mu.size())
            .expect("degree overflow") as usize;
        // pick the smaller Jacobi–Trudi determinant: h over rows of ν, or e
        // over rows of ν^T
        let (shape, kind) = if nu.len() as u64 <= nu.width() {
            (nu.clone(), BasisKind::Complete)
        } else {
            (nu.conjugate(), BasisKind::Elementary)
        };
        let size = shape.len();
        let index = |i: usize, j: usize| shape.part(i) as i64 - i as i64 + j as i64;
        let upto = (0..size)
            .flat_map(|i| (0..size).map(move |j| index(i, j)))
            .max()
            .unwrap_or(0)
            .max(0) as usize;
        self.ensure_newton(mu, num_vars, kind, upto);
        let basis = self
            .newton_memo
            .get(&(mu.clone(), num_vars, kind))
            .expect("basis just ensured");

        // det over column subsets: dp[S] is the minor of the first |S| rows
        // against columns S, expanded along its last row
        let mut dp: Vec<Option<MonomialExpansion>> = vec![None; 1 << size];
        dp[0] = Some(MonomialExpansion::one(num_vars));
        for mask in 1usize..(1 << size) {
            let row = mask.count_ones() as usize - 1;
            let mut sum = MonomialExpansion::zero(num_vars);
            let mut pos = 0;
            for j in 0..size {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let idx = index(row, j);
                if idx >= 0 {
                    let sub = dp[mask ^ (1 << j)]
                        .as_ref()
                        .expect("submask filled earlier");
                    let term = basis[idx as usize].mul(sub, &mut self.mul);
                    let sign = if (row + pos) % 2 == 0 { 1 } else { -1 };
                    sum.add_assign_scaled(&term, &BigInt::from(sign));
                }
                pos += 1;
            }
            dp[mask] = Some(sum);
        }
        Ok(dp[(1 << size) - 1].take().expect("full mask filled"))
    }

    /// The Schur expansion of s_ν∘s_μ, memoized (and persisted when a cache
    /// file is configured).
    pub fn plethysm(&mut self, nu: &Partition, mu: &Partition) -> Result<Arc<SchurExpansion>, Error> {
        if nu.is_empty() || mu.is_empty() {
            return Err(Error::EmptyPartition { context: "plethysm operand" });
        }
        let key = (nu.clone(), mu.clone());
        if let Some(hit) = self.plethysm_memo.get(&key) {
            return Ok(Arc::clone(hit));
        }
        let degree = nu.size() * mu.size();
        let f = self.plethysm_monomial(nu, mu)?;
        let expansion = Arc::new(self.to_schur(&f, degree, true)?);
        if let Some(path) = &self.cache_path {
            let mut file = fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)?;
            writeln!(file, "{nu}|{mu}|{}", serde_json::to_string(expansion.as_ref())?)?;
        }
        self.plethysm_memo.insert(key, Arc::clone(&expansion));
        Ok(expansion)
    }

    /// Independent power-sum computation of the same product (shares only
    /// the character table across calls).
    pub fn plethysm_powersum(
        &mut self,
        nu: &Partition,
        mu: &Partition,
    ) -> Result<SchurExpansion, Error> {
        plethysm_powersum_cached(nu, mu, &mut self.chars)
    }

    /// The multiplicity p(ν,μ,α) of s_α in s_ν∘s_μ.
    pub fn coefficient(
        &mut self,
        nu: &Partition,
        mu: &Partition,
        alpha: &Partition,
    ) -> Result<BigInt, Error> {
        if nu.is_empty() || mu.is_empty() {
            return Err(Error::EmptyPartition { context: "plethysm operand" });
        }
        let degree = nu.size() * mu.size();
        if alpha.size() != degree {
            return Err(Error::DegreeMismatch {
                context: "plethysm coefficient",
                expected: degree,
                found: alpha.size(),
            });
        }
        Ok(self.plethysm(nu, mu)?.coefficient(alpha))
    }

    /// Σ_λ c_λ (s_λ∘s_μ) for an expansion Σ_λ c_λ s_λ — plethysm is linear
    /// in its left argument, so this computes (Σ c_λ s_λ)∘s_μ.
    pub fn compose_expansion(
        &mut self,
        left: &SchurExpansion,
        mu: &Partition,
    ) -> Result<SchurExpansion, Error> {
        if mu.is_empty() {
            return Err(Error::EmptyPartition { context: "plethysm operand" });
        }
        let degree = left.degree() * mu.size();
        let mut acc: std::collections::BTreeMap<Partition, BigInt> = Default::default();
        for (lambda, c) in left.terms() {
            let inner = self.plethysm(lambda, mu)?;
            for (key, coeff) in inner.terms() {
                let entry = acc.entry(key.clone()).or_insert_with(BigInt::zero);
                *entry += coeff * c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        SchurExpansion::new(degree, acc)
    }

    /// Number of memoized plethysm results (cache introspection for tests
    /// and the CLI's verification summary).
    pub fn cached_products(&self) -> usize {
        self.plethysm_memo.len()
    }
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

/// The ω involution on coefficient triples: p(ν,μ,α) = p of the image, with
/// ν conjugated only when |μ| is odd.
pub fn omega_twist(
    nu: &Partition,
    mu: &Partition,
    alpha: &Partition,
) -> Result<(Partition, Partition, Partition), Error> {
    if nu.is_empty() || mu.is_empty() {
        return Err(Error::EmptyPartition { context: "plethysm operand" });
    }
    let degree = nu.size() * mu.size();
    if alpha.size() != degree {
        return Err(Error::DegreeMismatch {
            context: "ω twist",
            expected: degree,
            found: alpha.size(),
        });
    }
    Ok((nu.m_twist(mu.size())?, mu.conjugate(), alpha.conjugate()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_partitions, Composition};
    use crate::plethystic::enumerate_plethystic;
    use num_traits::One;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn expansion(engine: &mut Engine, nu: &[u64], mu: &[u64]) -> Arc<SchurExpansion> {
        engine.plethysm(&p(nu), &p(mu)).unwrap()
    }

    #[test]
    fn monomial_form_small_values() {
        let mut engine = Engine::new();
        // s_(1)∘s_μ is s_μ itself
        for mu in [p(&[3, 1]), p(&[2, 2]), p(&[1, 1, 1])] {
            let f = engine.plethysm_monomial(&p(&[1]), &mu).unwrap();
            assert_eq!(&f, engine.schur_monomials(&mu, mu.size() as usize).as_ref());
        }
        let f = engine.plethysm_monomial(&p(&[1, 1]), &p(&[2])).unwrap();
        assert_eq!(f.coefficient(&p(&[3, 1])), BigInt::one());
        assert_eq!(f.coefficient(&p(&[2, 2])), BigInt::one());
        assert_eq!(f.coefficient(&p(&[4])), BigInt::zero());
        let f = engine.plethysm_monomial(&p(&[2]), &p(&[1, 1])).unwrap();
        assert_eq!(f.coefficient(&p(&[1, 1, 1, 1])), BigInt::from(3));
    }

    #[test]
    fn monomial_form_counts_plethystic_tableaux() {
        let mut engine = Engine::new();
        for n in 1..=3u64 {
            for nu in enumerate_partitions(n, false) {
                for m in 1..=(6 / n).max(1) {
                    if n * m > 6 {
                        continue;
                    }
                    for mu in enumerate_partitions(m, false) {
                        let f = engine.plethysm_monomial(&nu, &mu).unwrap();
                        // coefficient of m_α = #tableaux of weight exactly α
                        // (the decreasing composition, not its rearrangements)
                        let mut histogram: HashMap<Composition, BigInt> = HashMap::new();
                        for t in enumerate_plethystic(&mu, &nu, n * m) {
                            *histogram.entry(t.weight()).or_insert_with(BigInt::zero) += 1;
                        }
                        for alpha in enumerate_partitions(n * m, false) {
                            let sorted = Composition::new(alpha.parts().to_vec());
                            let expected =
                                histogram.get(&sorted).cloned().unwrap_or_else(BigInt::zero);
                            assert_eq!(f.coefficient(&alpha), expected, "ν={nu}, μ={mu}, α={alpha}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn worked_degree_ten_example_and_its_conjugate() {
        let mut engine = Engine::new();
        let e = expansion(&mut engine, &[1, 1, 1, 1, 1], &[2]);
        let expected = SchurExpansion::new(
            10,
            [
                (p(&[4, 4, 2]), BigInt::one()),
                (p(&[5, 3, 1, 1]), BigInt::one()),
                (p(&[6, 1, 1, 1, 1]), BigInt::one()),
            ],
        )
        .unwrap();
        assert_eq!(e.as_ref(), &expected);
        // |μ| = 2 is even, so conjugating every term gives s_{(1^5)}∘s_{(1^2)}
        let c = expansion(&mut engine, &[1, 1, 1, 1, 1], &[1, 1]);
        assert_eq!(c.as_ref(), &e.conjugate());
        assert_eq!(c.coefficient(&p(&[3, 3, 2, 2])), BigInt::one());
        assert_eq!(c.coefficient(&p(&[4, 2, 2, 1, 1])), BigInt::one());
        assert_eq!(c.coefficient(&p(&[5, 1, 1, 1, 1, 1])), BigInt::one());
    }

    #[test]
    fn square_of_schur_2() {
        let mut engine = Engine::new();
        let e = expansion(&mut engine, &[2], &[2]);
        assert_eq!(e.len(), 2);
        assert_eq!(e.coefficient(&p(&[4])), BigInt::one());
        assert_eq!(e.coefficient(&p(&[2, 2])), BigInt::one());
    }

    #[test]
    fn identity_products_up_to_6() {
        let mut engine = Engine::new();
        for n in 1..=6u64 {
            for lam in enumerate_partitions(n, false) {
                assert_eq!(
                    engine.plethysm(&lam, &p(&[1])).unwrap().as_ref(),
                    &SchurExpansion::single(lam.clone()),
                    "s_{lam}∘s_(1)"
                );
                assert_eq!(
                    engine.plethysm(&p(&[1]), &lam).unwrap().as_ref(),
                    &SchurExpansion::single(lam.clone()),
                    "s_(1)∘s_{lam}"
                );
            }
        }
    }

    #[test]
    fn agrees_with_the_powersum_oracle_up_to_degree_8() {
        let mut engine = Engine::new();
        for n in 1..=8u64 {
            for m in 1..=8u64 {
                if n * m > 8 {
                    continue;
                }
                for nu in enumerate_partitions(n, false) {
                    for mu in enumerate_partitions(m, false) {
                        let fast = engine.plethysm(&nu, &mu).unwrap();
                        let oracle = engine.plethysm_powersum(&nu, &mu).unwrap();
                        assert_eq!(fast.as_ref(), &oracle, "ν={nu}, μ={mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn ones_specialization_counts_all_tableaux() {
        // the monomial form evaluated at 1,…,1 must equal the Schur-side
        // count Σ_α p(ν,μ,α)·#SSYT(α, entries ≤ mn)
        let mut engine = Engine::new();
        for (nu, mu) in [
            (p(&[2, 1]), p(&[2])),
            (p(&[1, 1]), p(&[3])),
            (p(&[2]), p(&[2, 1, 1])),
            (p(&[4]), p(&[2])),
            (p(&[1, 1, 1]), p(&[1, 1])),
        ] {
            let num_vars = (nu.size() * mu.size()) as usize;
            let direct = engine.plethysm_monomial(&nu, &mu).unwrap().eval_at_ones();
            let mut via_schur = BigInt::zero();
            for (alpha, c) in engine.plethysm(&nu, &mu).unwrap().terms() {
                via_schur += c * schur_monomials_cached(alpha, num_vars, &mut KostkaTable::new())
                    .eval_at_ones();
            }
            assert_eq!(direct, via_schur, "ν={nu}, μ={mu}");
        }
    }

    #[test]
    fn conjugation_rule_up_to_degree_8() {
        let mut engine = Engine::new();
        for n in 1..=4u64 {
            for m in 1..=4u64 {
                if n * m > 8 {
                    continue;
                }
                for nu in enumerate_partitions(n, false) {
                    for mu in enumerate_partitions(m, false) {
                        let twisted = engine
                            .plethysm(&nu.m_twist(m).unwrap(), &mu.conjugate())
                            .unwrap();
                        let direct = engine.plethysm(&nu, &mu).unwrap();
                        assert_eq!(
                            twisted.as_ref(),
                            &direct.conjugate(),
                            "ω(s_{nu}∘s_{mu})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn twist_triple_examples() {
        let (a, b, c) = omega_twist(&p(&[1, 1, 1, 1, 1]), &p(&[2]), &p(&[4, 4, 2])).unwrap();
        assert_eq!((a, b, c), (p(&[1, 1, 1, 1, 1]), p(&[1, 1]), p(&[3, 3, 2, 2])));
        let (a, b, c) = omega_twist(&p(&[2]), &p(&[3]), &p(&[5, 1])).unwrap();
        assert_eq!((a, b, c), (p(&[1, 1]), p(&[1, 1, 1]), p(&[2, 1, 1, 1, 1])));
        // even inner degree: applying the twist twice is the identity
        let start = (p(&[2, 1]), p(&[2, 2]), p(&[7, 3, 1, 1]));
        let (a, b, c) = omega_twist(&start.0, &start.1, &start.2).unwrap();
        let (a, b, c) = omega_twist(&a, &b, &c).unwrap();
        assert_eq!((a, b, c), start);
        assert!(matches!(
            omega_twist(&p(&[2]), &p(&[2]), &p(&[3])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn coefficient_queries() {
        let mut engine = Engine::new();
        let ones5 = p(&[1, 1, 1, 1, 1]);
        assert_eq!(
            engine.coefficient(&ones5, &p(&[2]), &p(&[5, 3, 1, 1])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            engine.coefficient(&ones5, &p(&[2]), &p(&[5, 5])).unwrap(),
            BigInt::zero()
        );
        assert!(matches!(
            engine.coefficient(&ones5, &p(&[2]), &p(&[3, 1])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn left_linearity_composes_through_expansions() {
        // (s_ρ∘s_{(1²)})∘s_{(2)} = s_ρ∘s_{(3,1)} because s_{(1²)}∘s_{(2)} =
        // s_{(3,1)}; checked for all |ρ| ≤ 2 here (≤ 3 in the full sweep)
        let mut engine = Engine::new();
        for r in 1..=2u64 {
            for rho in enumerate_partitions(r, false) {
                let inner = engine.plethysm(&rho, &p(&[1, 1])).unwrap();
                let composed = engine.compose_expansion(&inner, &p(&[2])).unwrap();
                let direct = engine.plethysm(&rho, &p(&[3, 1])).unwrap();
                assert_eq!(&composed, direct.as_ref(), "ρ={rho}");
            }
        }
    }

    #[test]
    fn file_cache_round_trips() {
        let path = std::env::temp_dir().join(format!(
            "plethysm-cache-test-{}-{:?}",
            std::process::id(),
            std::thread::current().id()
        ));
        let _ = fs::remove_file(&path);
        {
            let mut engine = Engine::with_cache_file(&path).unwrap();
            expansion(&mut engine, &[2, 1], &[2]);
            expansion(&mut engine, &[1, 1], &[1, 1]);
            assert_eq!(engine.cached_products(), 2);
        }
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.lines().all(|l| l.split('|').count() == 3));
        {
            // reload: both results come back from disk without recomputation
            let mut engine = Engine::with_cache_file(&path).unwrap();
            assert_eq!(engine.cached_products(), 2);
            let e = expansion(&mut engine, &[2, 1], &[2]);
            assert_eq!(e.degree(), 6);
            assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 2);
        }
        {
            // corrupted and duplicate lines are tolerated
            let mut file = fs::OpenOptions::new().append(true).open(&path).unwrap();
            writeln!(file, "not a record").unwrap();
            writeln!(file, "2,1|2|{{\"broken\"").unwrap();
            let prev = fs::read_to_string(&path).unwrap();
            let dup = prev.lines().next().unwrap();
            writeln!(file, "{dup}").unwrap();
            drop(file);
            let engine = Engine::with_cache_file(&path).unwrap();
            assert_eq!(engine.cached_products(), 2);
        }
        let _ = fs::remove_file(&path);
    }

    #[test]
    fn empty_operands_are_rejected() {
        let mut engine = Engine::new();
        assert!(matches!(
            engine.plethysm(&Partition::empty(), &p(&[1])),
            Err(Error::EmptyPartition { .. })
        ));
        assert!(matches!(
            engine.plethysm_monomial(&p(&[1]), &Partition::empty()),
            Err(Error::EmptyPartition { .. })
        ));
    }

    #[test]
    fn monomial_weights_match_composition_counts() {
        // spot check: the coefficient of m_α counts tableaux whose weight is
        // the decreasing composition α itself
        let mut engine = Engine::new();
        let f = engine.plethysm_monomial(&p(&[1, 1]), &p(&[2])).unwrap();
        let tabs = enumerate_plethystic(&p(&[2]), &p(&[1, 1]), 4);
        for alpha in enumerate_partitions(4, false) {
            let count = tabs
                .iter()
                .filter(|t| t.weight() == Composition::new(alpha.parts().to_vec()))
                .count();
            assert_eq!(f.coefficient(&alpha), BigInt::from(count), "α={alpha}");
        }
        // symmetry: every rearrangement of a weight is equally populated
        let w1 = tabs
            .iter()
            .filter(|t| t.weight() == Composition::new(vec![1, 3]))
            .count();
        let w2 = tabs
            .iter()
            .filter(|t| t.weight() == Composition::new(vec![3, 1]))
            .count();
        assert_eq!(w1, w2);
    }
}
