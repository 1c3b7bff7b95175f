//! The release gate: one test per acceptance criterion, each asserting the
//! exact combinatorial statement and its runtime budget, and printing a
//! `PASS criterion N` line (visible with `--nocapture`).
//!
//! The expansion-heavy criteria share one engine behind a mutex so the sweep
//! over all products of a given degree is paid for once; every budget below
//! is an upper bound on the criterion's own work after that sharing.

use std::collections::BTreeMap;
use std::process::Command;
use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use plethysm::maxterms::TermOrder;
use plethysm::verify::{
    cross_check_expansions, verify_homogeneity_classification, verify_square_formula,
    verify_unique_factorization,
};
use plethysm::{
    enumerate_partitions, leading_term, max_lex, max_translex, maximal_pleth_weights, Engine,
    Partition,
};

fn shared_engine() -> &'static Mutex<Engine> {
    static ENGINE: OnceLock<Mutex<Engine>> = OnceLock::new();
    ENGINE.get_or_init(|| Mutex::new(Engine::new()))
}

fn p(parts: &[u64]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Every (ν, μ) whose product degree |ν|·|μ| is at most the bound.
fn product_keys(max_degree: u64) -> Vec<(Partition, Partition)> {
    let mut keys = Vec::new();
    for degree in 1..=max_degree {
        for n in 1..=degree {
            if degree % n != 0 {
                continue;
            }
            for nu in enumerate_partitions(n, false) {
                for mu in enumerate_partitions(degree / n, false) {
                    keys.push((nu.clone(), mu));
                }
            }
        }
    }
    keys
}

#[test]
fn criterion_1_worked_example_and_conjugate_via_cli() {
    let start = Instant::now();
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_plethysm"))
            .args(args)
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    assert_eq!(
        run(&["plethysm", "1^5", "2"]),
        "6,1^4: 1\n5,3,1^2: 1\n4,4,2: 1\n"
    );
    assert_eq!(
        run(&["plethysm", "1^5", "1^2"]),
        "5,1^5: 1\n4,2,2,1^2: 1\n3,3,2,2: 1\n"
    );
    assert!(start.elapsed() < Duration::from_secs(5));
    println!("PASS criterion 1: worked degree-10 example and its conjugate via the CLI");
}

#[test]
fn criterion_2_double_hook_expansion_through_n_7() {
    let mut engine = shared_engine().lock().unwrap();
    let start = Instant::now();
    let report = verify_square_formula(&mut engine, 7).unwrap();
    assert_eq!(report.products_checked, 14);
    assert!(start.elapsed() < Duration::from_secs(60));
    println!("PASS criterion 2: square formula and its conjugate hold for n ≤ 7");
}

#[test]
fn criterion_3_leading_term_formulas_match_brute_force_to_degree_12() {
    let mut engine = shared_engine().lock().unwrap();
    let start = Instant::now();
    for (nu, mu) in product_keys(12) {
        let expansion = engine.plethysm(&nu, &mu).unwrap();
        let (lex_max, lex_coeff) = leading_term(&expansion, TermOrder::Lex).unwrap();
        let (tlx_max, tlx_coeff) = leading_term(&expansion, TermOrder::Translex).unwrap();
        assert_eq!(lex_max, max_lex(&nu, &mu).unwrap(), "lex max of ({nu} | {mu})");
        assert_eq!(
            tlx_max,
            max_translex(&nu, &mu).unwrap(),
            "translex max of ({nu} | {mu})"
        );
        assert!(lex_coeff.is_one(), "lex multiplicity of ({nu} | {mu})");
        assert!(tlx_coeff.is_one(), "translex multiplicity of ({nu} | {mu})");
    }
    assert!(start.elapsed() < Duration::from_secs(900));
    println!("PASS criterion 3: closed-form extreme constituents, multiplicity 1, degree ≤ 12");
}

#[test]
fn criterion_4_dominance_maxima_match_full_expansions_to_degree_10() {
    let mut engine = shared_engine().lock().unwrap();
    let start = Instant::now();
    for (nu, mu) in product_keys(10) {
        let expansion = engine.plethysm(&nu, &mu).unwrap();
        let mut brute: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (alpha, coeff) in expansion.terms() {
            let dominated = expansion
                .terms()
                .keys()
                .any(|beta| beta != alpha && beta.dominates(alpha).unwrap());
            if !dominated {
                brute.insert(alpha.clone(), coeff.clone());
            }
        }
        assert_eq!(
            maximal_pleth_weights(&mu, &nu).unwrap(),
            brute,
            "dominance-maximal terms of ({nu} | {mu})"
        );
    }
    assert!(start.elapsed() < Duration::from_secs(900));
    println!("PASS criterion 4: tableau search equals expansion maxima, degree ≤ 10");
}

#[test]
fn criterion_5_homogeneity_classification_to_degree_12() {
    let mut engine = shared_engine().lock().unwrap();
    let start = Instant::now();
    let report = verify_homogeneity_classification(&mut engine, 12).unwrap();
    let column = p(&[1, 1]);
    let row = p(&[2]);
    for record in &report.records {
        let predicted = record.nu.size() == 1
            || record.mu.size() == 1
            || (record.nu == column && (record.mu == column || record.mu == row));
        assert_eq!(record.homogeneous, predicted, "({} | {})", record.nu, record.mu);
        assert_eq!(record.indecomposable, predicted, "({} | {})", record.nu, record.mu);
    }
    assert!(start.elapsed() < Duration::from_secs(900));
    println!("PASS criterion 5: homogeneity and indecomposability classified, degree ≤ 12");
}

#[test]
fn criterion_6_coincidence_classification_to_degree_12_with_cache() {
    let path = std::env::temp_dir().join(format!(
        "plethysm-acceptance-cache-{}",
        std::process::id()
    ));
    let _ = std::fs::remove_file(&path);
    let start = Instant::now();
    let mut engine = Engine::with_cache_file(&path).unwrap();
    let report = verify_unique_factorization(&mut engine, 12).unwrap();
    // p(d) mutual classes for each 2 ≤ d ≤ 12, plus the two degree-8 pairs;
    // the degree-4 identities enlarge two existing classes instead of adding
    let reflexive: usize = (2..=12u64).map(|d| enumerate_partitions(d, false).len()).sum();
    assert_eq!(report.classes.len(), reflexive + 2);
    let class_with = |nu: &[u64], mu: &[u64]| {
        report
            .classes
            .iter()
            .find(|c| c.iter().any(|k| k.nu == p(nu) && k.mu == p(mu)))
            .expect("class present")
    };
    assert_eq!(class_with(&[1, 1], &[1, 1]).len(), 3);
    assert_eq!(class_with(&[1, 1], &[2]).len(), 3);
    assert_eq!(class_with(&[2, 1, 1], &[2]).len(), 2);
    assert_eq!(class_with(&[2, 1, 1], &[1, 1]).len(), 2);
    drop(engine);
    // the cache file persists the expansions the sweep computed
    let resumed = Engine::with_cache_file(&path).unwrap();
    assert!(resumed.cached_products() > 0);
    assert!(start.elapsed() < Duration::from_secs(1800));
    let _ = std::fs::remove_file(&path);
    println!("PASS criterion 6: coincidence classes are exactly the expected ones, degree ≤ 12");
}

#[test]
fn criterion_7_equal_signatures_separated_by_dominance_maxima() {
    let start = Instant::now();
    let (nu1, mu1) = (p(&[3, 3, 3, 2, 1]), p(&[1, 1]));
    let (nu2, mu2) = (p(&[2, 1]), p(&[4, 1, 1, 1, 1]));
    let shared_lex = p(&[12, 3, 3, 3, 2, 1]);
    let shared_translex = p(&[15, 3, 3, 2, 1]).conjugate();
    assert_eq!(max_lex(&nu1, &mu1).unwrap(), shared_lex);
    assert_eq!(max_lex(&nu2, &mu2).unwrap(), shared_lex);
    assert_eq!(max_translex(&nu1, &mu1).unwrap(), shared_translex);
    assert_eq!(max_translex(&nu2, &mu2).unwrap(), shared_translex);
    let first = maximal_pleth_weights(&mu1, &nu1).unwrap();
    let second = maximal_pleth_weights(&mu2, &nu2).unwrap();
    let discriminant_first = p(&[11, 4, 4, 3, 2]);
    let discriminant_second = p(&[11, 4, 3, 3, 3]);
    assert!(first.contains_key(&discriminant_first));
    assert!(!second.contains_key(&discriminant_first));
    assert!(second.contains_key(&discriminant_second));
    assert!(!first.contains_key(&discriminant_second));
    assert!(start.elapsed() < Duration::from_secs(600));
    println!("PASS criterion 7: the degree-24 pair shares both maxima yet separates");
}

#[test]
fn criterion_8_twist_identity_and_associativity_invariants() {
    let mut engine = shared_engine().lock().unwrap();
    let start = Instant::now();
    // twist rule at mn ≤ 10
    for (nu, mu) in product_keys(10) {
        let twisted = nu.m_twist(mu.size()).unwrap();
        let left = engine.plethysm(&nu, &mu).unwrap().conjugate();
        let right = engine.plethysm(&twisted, &mu.conjugate()).unwrap();
        assert_eq!(&left, right.as_ref(), "twist rule at ({nu} | {mu})");
    }
    // identity in both slots at degree ≤ 8
    let one = p(&[1]);
    for degree in 1..=8 {
        for lambda in enumerate_partitions(degree, false) {
            let left = engine.plethysm(&lambda, &one).unwrap();
            let right = engine.plethysm(&one, &lambda).unwrap();
            assert_eq!(left.terms().len(), 1);
            assert!(left.terms().contains_key(&lambda));
            assert_eq!(left.as_ref(), right.as_ref());
        }
    }
    // associativity through a composed expansion for |ρ| ≤ 3
    let column = p(&[1, 1]);
    let row = p(&[2]);
    let hook = p(&[3, 1]);
    for size in 1..=3 {
        for rho in enumerate_partitions(size, false) {
            let inner = engine.plethysm(&rho, &column).unwrap().as_ref().clone();
            let composed = engine.compose_expansion(&inner, &row).unwrap();
            let direct = engine.plethysm(&rho, &hook).unwrap();
            assert_eq!(&composed, direct.as_ref(), "associativity at ρ = {rho}");
        }
    }
    assert!(start.elapsed() < Duration::from_secs(900));
    println!("PASS criterion 8: twist, identity, and associativity invariants hold");
}

#[test]
fn criterion_9_independent_algorithms_agree_to_degree_10() {
    let mut engine = shared_engine().lock().unwrap();
    let start = Instant::now();
    let report = cross_check_expansions(&mut engine, 10).unwrap();
    assert_eq!(report.products_checked, product_keys(10).len() as u64);
    assert!(start.elapsed() < Duration::from_secs(600));
    println!("PASS criterion 9: determinant and power-sum algorithms agree, degree ≤ 10");
}
