//! Exhaustive sweeps of the `2^n` lower bound over bounded polynomial
//! families, and batch drivers for the individual bound checks.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{
    half_range_ln_check, hanson_from_lcm, key1_check, key2_lcm, lemma22_holds, lemma_key_check,
    nair_from_lcm, theorem_check, BoundReport,
};
pub use crate::bounds::RangeMode;
use crate::lcm_engine::{lcm_upto_table, to_natural};
use crate::polynomial::verify_identity;
use crate::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("max_degree must be at least 1")]
    ZeroDegree,
    #[error("n_max must be at least 1")]
    ZeroNMax,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyFilter {
    #[default]
    All,
    MonicOnly,
    NonzeroConstantTerm,
}

/// A finite family of polynomials with coefficients in `[0, coeff_max]`,
/// leading coefficient at least 1 and degree in `[1, max_degree]`, checked
/// for every `n` in `[1, n_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SweepConfig {
    pub max_degree: usize,
    pub coeff_max: u64,
    pub n_max: u64,
    pub family_filter: FamilyFilter,
    pub range_mode: RangeMode,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            max_degree: 3,
            coeff_max: 5,
            n_max: 40,
            family_filter: FamilyFilter::All,
            range_mode: RangeMode::Half,
        }
    }
}

impl SweepConfig {
    pub fn new(max_degree: usize, coeff_max: u64, n_max: u64) -> Self {
        Self {
            max_degree,
            coeff_max,
            n_max,
            ..Self::default()
        }
    }

    pub fn with_range_mode(mut self, mode: RangeMode) -> Self {
        self.range_mode = mode;
        self
    }

    pub fn with_filter(mut self, filter: FamilyFilter) -> Self {
        self.family_filter = filter;
        self
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        if self.max_degree == 0 {
            return Err(SweepError::ZeroDegree);
        }
        if self.n_max == 0 {
            return Err(SweepError::ZeroNMax);
        }
        Ok(())
    }

    /// Whether `f` belongs to the family.
    pub fn admits(&self, f: &IntPoly) -> bool {
        let Some(s) = f.degree() else { return false };
        let max = BigInt::from(self.coeff_max);
        let lead = &f.coeffs()[s];
        s >= 1
            && s <= self.max_degree
            && f.coeffs().iter().all(|c| c.sign() != num_bigint::Sign::Minus && c <= &max)
            && match self.family_filter {
                FamilyFilter::All => true,
                FamilyFilter::MonicOnly => *lead == BigInt::from(1),
                FamilyFilter::NonzeroConstantTerm => f.coeffs()[0] != BigInt::from(0),
            }
    }

    fn lead_range(&self) -> (u64, u64) {
        match self.family_filter {
            FamilyFilter::MonicOnly => (1, 1),
            _ => (1, self.coeff_max),
        }
    }

    fn constant_min(&self) -> u64 {
        match self.family_filter {
            FamilyFilter::NonzeroConstantTerm => 1,
            _ => 0,
        }
    }
}

/// Iterator over a sweep family in degree-major order, then
/// lexicographically on `(a_s, ..., a_0)`.
#[derive(Debug, Clone)]
pub struct Family {
    cfg: SweepConfig,
    degree: usize,
    /// `digits[0]` is `a_s`, the last digit is `a_0`.
    digits: Vec<u64>,
    exhausted: bool,
}

impl Family {
    fn new(cfg: SweepConfig) -> Self {
        let mut fam = Self {
            cfg,
            degree: 0,
            digits: Vec::new(),
            exhausted: false,
        };
        fam.start_degree(1);
        fam
    }

    fn digit_min(&self, pos: usize) -> u64 {
        if pos == 0 {
            self.cfg.lead_range().0
        } else if pos == self.degree {
            self.cfg.constant_min()
        } else {
            0
        }
    }

    fn digit_max(&self, pos: usize) -> u64 {
        if pos == 0 {
            self.cfg.lead_range().1
        } else {
            self.cfg.coeff_max
        }
    }

    fn start_degree(&mut self, degree: usize) {
        self.degree = degree;
        if degree > self.cfg.max_degree {
            self.exhausted = true;
            return;
        }
        self.digits = (0..=degree).map(|p| self.digit_min(p)).collect();
        if (0..=degree).any(|p| self.digit_min(p) > self.digit_max(p)) {
            self.exhausted = true;
        }
    }

    fn advance(&mut self) {
        for pos in (0..=self.degree).rev() {
            if self.digits[pos] < self.digit_max(pos) {
                self.digits[pos] += 1;
                for later in pos + 1..=self.degree {
                    self.digits[later] = self.digit_min(later);
                }
                return;
            }
        }
        self.start_degree(self.degree + 1);
    }
}

impl Iterator for Family {
    type Item = IntPoly;

    fn next(&mut self) -> Option<IntPoly> {
        if self.exhausted {
            return None;
        }
        let f = IntPoly::from_coeffs(self.digits.iter().rev().map(|&d| BigInt::from(d)).collect());
        self.advance();
        Some(f)
    }
}

pub fn enumerate_family(cfg: &SweepConfig) -> Family {
    if cfg.validate().is_err() {
        let mut fam = Family::new(SweepConfig { max_degree: 1, ..*cfg });
        fam.exhausted = true;
        return fam;
    }
    Family::new(*cfg)
}

/// A pair `(f, n)` for which the lcm falls below `2^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionRecord {
    pub f: IntPoly,
    pub n: u64,
    pub lcm_value: BigUint,
    pub threshold: BigUint,
}

#[derive(Debug, Clone)]
pub struct CampaignReport {
    pub config: SweepConfig,
    pub checked_count: u64,
    pub exceptions: Vec<ExceptionRecord>,
    pub duration: Duration,
}

impl PartialEq for CampaignReport {
    /// Ignores `duration`.
    fn eq(&self, other: &Self) -> bool {
        self.config == other.config
            && self.checked_count == other.checked_count
            && self.exceptions == other.exceptions
    }
}

impl CampaignReport {
    /// `(f, n)` pairs of the exceptions, in report order.
    pub fn exception_pairs(&self) -> Vec<(IntPoly, u64)> {
        self.exceptions.iter().map(|e| (e.f.clone(), e.n)).collect()
    }

    /// True when the exceptions are exactly the known ones restricted to the
    /// search space.
    pub fn matches_prediction(&self) -> bool {
        self.exception_pairs() == predicted_exceptions(&self.config)
    }

    /// `x^s` fails at `n = 1` for every `s >= 2`; a finite sweep only sees
    /// `s <= max_degree`.
    pub fn truncation_note(&self) -> Option<String> {
        let sees_powers = self.config.max_degree >= 2
            && self.config.admits(&IntPoly::monomial(BigInt::from(1), 2));
        sees_powers.then(|| {
            format!(
                "x^s (s >= 2) at n = 1: family of exceptions, truncated at max_degree = {}",
                self.config.max_degree
            )
        })
    }
}

/// The known exceptions to the `2^n` bound that lie inside the search space:
/// `f = x` with `n ∈ {1, 2, 3, 4, 6}`, and `f = x^s` (`s >= 2`) with `n = 1`.
/// The exceptions are the same for the half and full ranges.
pub fn predicted_exceptions(cfg: &SweepConfig) -> Vec<(IntPoly, u64)> {
    let mut out = Vec::new();
    let x = IntPoly::x();
    if cfg.admits(&x) {
        out.extend(
            [1u64, 2, 3, 4, 6]
                .into_iter()
                .filter(|&n| n <= cfg.n_max)
                .map(|n| (x.clone(), n)),
        );
    }
    for s in 2..=cfg.max_degree {
        let xs = IntPoly::monomial(BigInt::from(1), s);
        if cfg.admits(&xs) {
            out.push((xs, 1));
        }
    }
    out
}

fn check_polynomial(f: &IntPoly, cfg: &SweepConfig) -> Vec<ExceptionRecord> {
    (1..=cfg.n_max)
        .filter_map(|n| {
            let report = theorem_check(f, n, cfg.range_mode).expect("family members are admissible");
            (!report.holds).then(|| ExceptionRecord {
                f: f.clone(),
                n,
                lcm_value: report.lhs,
                threshold: to_natural(report.witness.right),
            })
        })
        .collect()
}

/// Checks the bound for every `(f, n)` in the family times `[1, n_max]`.
/// Pairs are checked in parallel; exceptions come back in enumeration order.
pub fn run_campaign(cfg: &SweepConfig) -> Result<CampaignReport, SweepError> {
    cfg.validate()?;
    let start = Instant::now();
    let family: Vec<IntPoly> = enumerate_family(cfg).collect();
    let exceptions: Vec<ExceptionRecord> = family
        .par_iter()
        .map(|f| check_polynomial(f, cfg))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(CampaignReport {
        config: *cfg,
        checked_count: family.len() as u64 * cfg.n_max,
        exceptions,
        duration: start.elapsed(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Identity,
    Lemma22,
    LemmaKey,
    Key1,
    Key2,
    Nair,
    Hanson,
    HalfRangeLn,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Identity,
        Suite::Lemma22,
        Suite::LemmaKey,
        Suite::Key1,
        Suite::Key2,
        Suite::Nair,
        Suite::Hanson,
        Suite::HalfRangeLn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identity => "identity",
            Suite::Lemma22 => "lemma22",
            Suite::LemmaKey => "lemma-key",
            Suite::Key1 => "key1",
            Suite::Key2 => "key2",
            Suite::Nair => "nair",
            Suite::Hanson => "hanson",
            Suite::HalfRangeLn => "half-range-ln",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub checked: u64,
    pub failures: u64,
    pub first_counterexample: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Folds per-case results, kept in input order so the first
    /// counterexample is deterministic.
    fn collect(suite: Suite, results: impl IntoIterator<Item = Result<(), String>>) -> Self {
        let mut out = Self {
            suite,
            checked: 0,
            failures: 0,
            first_counterexample: None,
        };
        for r in results {
            out.checked += 1;
            if let Err(msg) = r {
                out.failures += 1;
                out.first_counterexample.get_or_insert(msg);
            }
        }
        out
    }
}

fn expect_holds(report: &BoundReport, context: impl FnOnce() -> String) -> Result<(), String> {
    if report.holds {
        Ok(())
    } else {
        Err(format!("{}: {}", context(), report.witness))
    }
}

/// Every identity with `1 <= m <= min(m_max, n)` and `1 <= n <= n_max`.
/// A case passes only when the symbolic and pointwise routes both agree.
pub fn identity_suite(m_max: u64, n_max: u64) -> SuiteOutcome {
    let pairs: Vec<(u64, u64)> = (1..=n_max)
        .flat_map(|n| (1..=m_max.min(n)).map(move |m| (m, n)))
        .collect();
    let results: Vec<_> = pairs
        .par_iter()
        .map(|&(m, n)| {
            let check = verify_identity::<BigInt>(m, n).map_err(|e| e.to_string())?;
            if check.holds() {
                Ok(())
            } else {
                Err(format!(
                    "m = {m}, n = {n}: lhs = {} (symbolic {}, pointwise {})",
                    check.lhs, check.symbolic, check.pointwise
                ))
            }
        })
        .collect();
    SuiteOutcome::collect(Suite::Identity, results)
}

pub fn lemma22_suite(n_min: u64, n_max: u64) -> SuiteOutcome {
    SuiteOutcome::collect(
        Suite::Lemma22,
        (n_min.max(1)..=n_max).map(|n| {
            let r = lemma22_holds(n).map_err(|e| e.to_string())?;
            expect_holds(&r, || format!("n = {n}"))
        }),
    )
}

/// A random `(f, m, n)` input for the lemma-key bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaKeyCase {
    pub f: IntPoly,
    pub m: u64,
    pub n: u64,
}

/// Seeded random cases: degree in `[1, max_degree]`, coefficients in
/// `[0, coeff_max]` with leading coefficient at least 1, `1 <= m <= n <= n_max`.
pub fn lemma_key_cases(
    count: u64,
    seed: u64,
    max_degree: usize,
    coeff_max: u64,
    n_max: u64,
) -> Vec<LemmaKeyCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let s = rng.gen_range(1..=max_degree);
            let mut coeffs: Vec<BigInt> =
                (0..s).map(|_| BigInt::from(rng.gen_range(0..=coeff_max))).collect();
            coeffs.push(BigInt::from(rng.gen_range(1..=coeff_max.max(1))));
            let n = rng.gen_range(1..=n_max);
            let m = rng.gen_range(1..=n);
            LemmaKeyCase {
                f: IntPoly::from_coeffs(coeffs),
                m,
                n,
            }
        })
        .collect()
}

pub const LEMMA_KEY_SEED: u64 = 0x1c3_2013;

/// `count` random lemma-key cases with degree 1..=4, coefficients in
/// `[0, 9]` and `n <= 50`.
pub fn lemma_key_suite(count: u64, seed: u64) -> SuiteOutcome {
    let cases = lemma_key_cases(count, seed, 4, 9, 50);
    let results: Vec<_> = cases
        .par_iter()
        .map(|c| {
            let r = lemma_key_check(&c.f, c.m, c.n).map_err(|e| e.to_string())?;
            expect_holds(&r, || format!("f = {}, m = {}, n = {}", c.f, c.m, c.n))
        })
        .collect();
    SuiteOutcome::collect(Suite::LemmaKey, results)
}

/// Every quadratic with coefficients in `[0, coeff_max]`, `a_2 >= 1`, and
/// every `2 <= m <= m_max`.
pub fn key1_suite(coeff_max: u64, m_max: u64) -> SuiteOutcome {
    let cfg = SweepConfig::new(2, coeff_max, 1);
    let quadratics: Vec<IntPoly> = enumerate_family(&cfg)
        .filter(|f| f.degree() == Some(2))
        .collect();
    let results: Vec<_> = quadratics
        .par_iter()
        .flat_map_iter(|f| {
            (2..=m_max).map(move |m| {
                let r = key1_check(f, m).map_err(|e| e.to_string())?;
                expect_holds(&r, || format!("f = {f}, m = {m}"))
            })
        })
        .collect();
    SuiteOutcome::collect(Suite::Key1, results)
}

/// Every coprime pair `1 <= a, b <= limit`. The classification must agree
/// with the directly computed lcm.
pub fn key2_suite(limit: u64) -> SuiteOutcome {
    let pairs: Vec<(u64, u64)> = (1..=limit)
        .flat_map(|a| (1..=limit).map(move |b| (a, b)))
        .filter(|(a, b)| a.gcd(b) == 1)
        .collect();
    let results: Vec<_> = pairs
        .par_iter()
        .map(|&(a, b)| key2_lcm(a, b).map(|_| ()).map_err(|e| e.to_string()))
        .collect();
    SuiteOutcome::collect(Suite::Key2, results)
}

/// `lcm(1..n) >= 2^n` for `7 <= n <= limit`.
pub fn nair_suite(limit: u64) -> SuiteOutcome {
    let table = lcm_upto_table(limit);
    SuiteOutcome::collect(
        Suite::Nair,
        (7..=limit).map(|n| {
            let r = nair_from_lcm(n, table[n as usize - 1].clone());
            expect_holds(&r, || format!("n = {n}"))
        }),
    )
}

/// `lcm(1..n) < 3^n` for `1 <= n <= limit`.
pub fn hanson_suite(limit: u64) -> SuiteOutcome {
    let table = lcm_upto_table(limit);
    SuiteOutcome::collect(
        Suite::Hanson,
        (1..=limit).map(|n| {
            let r = hanson_from_lcm(n, table[n as usize - 1].clone());
            expect_holds(&r, || format!("n = {n}"))
        }),
    )
}

/// `lcm(⌈n/2⌉..n) >= 2^(n-1)` for `1 <= n <= limit`.
pub fn half_range_ln_suite(limit: u64) -> SuiteOutcome {
    let results: Vec<_> = (1..=limit)
        .into_par_iter()
        .map(|n| {
            let r = half_range_ln_check(n).map_err(|e| e.to_string())?;
            expect_holds(&r, || format!("n = {n}"))
        })
        .collect();
    SuiteOutcome::collect(Suite::HalfRangeLn, results)
}

/// Size limits for [`run_lemma_suites`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteLimits {
    pub identity_n_max: u64,
    pub lemma22_n_max: u64,
    pub lemma_key_cases: u64,
    pub key1_coeff_max: u64,
    pub key1_m_max: u64,
    pub key2_limit: u64,
    pub context_limit: u64,
}

impl Default for SuiteLimits {
    fn default() -> Self {
        Self {
            identity_n_max: 30,
            lemma22_n_max: 64,
            lemma_key_cases: 10_000,
            key1_coeff_max: 9,
            key1_m_max: 100,
            key2_limit: 200,
            context_limit: 1000,
        }
    }
}

/// Runs a single suite with one size parameter, as the command line does.
///
/// `limit` is the upper `n` for identity, lemma22, nair, hanson and
/// half-range-ln; the case count for lemma-key; the largest `m` for key1
/// (coefficients up to 9); and the bound on `a` and `b` for key2.
pub fn run_suite(suite: Suite, limit: u64) -> SuiteOutcome {
    match suite {
        Suite::Identity => identity_suite(limit, limit),
        Suite::Lemma22 => lemma22_suite(7, limit),
        Suite::LemmaKey => lemma_key_suite(limit, LEMMA_KEY_SEED),
        Suite::Key1 => key1_suite(9, limit),
        Suite::Key2 => key2_suite(limit),
        Suite::Nair => nair_suite(limit),
        Suite::Hanson => hanson_suite(limit),
        Suite::HalfRangeLn => half_range_ln_suite(limit),
    }
}

pub fn run_lemma_suites(limits: &SuiteLimits) -> Vec<SuiteOutcome> {
    vec![
        identity_suite(limits.identity_n_max, limits.identity_n_max),
        lemma22_suite(7, limits.lemma22_n_max),
        lemma_key_suite(limits.lemma_key_cases, LEMMA_KEY_SEED),
        key1_suite(limits.key1_coeff_max, limits.key1_m_max),
        key2_suite(limits.key2_limit),
        nair_suite(limits.context_limit),
        hanson_suite(limits.context_limit),
        half_range_ln_suite(limits.context_limit),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    fn strings(cfg: SweepConfig) -> Vec<String> {
        enumerate_family(&cfg).map(|f| f.to_string()).collect()
    }

    #[test]
    fn family_examples() {
        assert_eq!(strings(SweepConfig::new(1, 1, 1)), ["x", "x + 1"]);
        assert_eq!(enumerate_family(&SweepConfig::new(1, 2, 1)).count(), 6);
        assert_eq!(
            strings(SweepConfig::new(2, 1, 1)),
            ["x", "x + 1", "x^2", "x^2 + 1", "x^2 + x", "x^2 + x + 1"]
        );
    }

    #[test]
    fn family_order_within_degree() {
        assert_eq!(
            strings(SweepConfig::new(1, 2, 1)),
            ["x", "x + 1", "x + 2", "2x", "2x + 1", "2x + 2"]
        );
    }

    #[test]
    fn family_filters() {
        let cfg = SweepConfig::new(2, 2, 1).with_filter(FamilyFilter::MonicOnly);
        assert_eq!(
            strings(cfg),
            ["x", "x + 1", "x + 2", "x^2", "x^2 + 1", "x^2 + 2", "x^2 + x", "x^2 + x + 1",
             "x^2 + x + 2", "x^2 + 2x", "x^2 + 2x + 1", "x^2 + 2x + 2"]
        );
        let cfg = SweepConfig::new(1, 2, 1).with_filter(FamilyFilter::NonzeroConstantTerm);
        assert_eq!(strings(cfg), ["x + 1", "x + 2", "2x + 1", "2x + 2"]);
    }

    #[test]
    fn family_counts_and_membership() {
        for (d, c) in [(1usize, 1u64), (2, 3), (3, 5), (4, 2)] {
            for filter in [FamilyFilter::All, FamilyFilter::MonicOnly, FamilyFilter::NonzeroConstantTerm] {
                let cfg = SweepConfig::new(d, c, 1).with_filter(filter);
                let fam: Vec<_> = enumerate_family(&cfg).collect();
                let lead = if filter == FamilyFilter::MonicOnly { 1 } else { c };
                let const_choices = if filter == FamilyFilter::NonzeroConstantTerm { c } else { c + 1 };
                let expected: u64 = (1..=d as u32)
                    .map(|s| lead * const_choices * (c + 1).pow(s - 1))
                    .sum();
                assert_eq!(fam.len() as u64, expected, "{cfg:?}");
                assert!(fam.iter().all(|f| cfg.admits(f)));
            }
        }
    }

    #[test]
    fn empty_families() {
        assert_eq!(enumerate_family(&SweepConfig::new(2, 0, 1)).count(), 0);
        assert_eq!(enumerate_family(&SweepConfig::new(0, 3, 1)).count(), 0);
    }

    #[test]
    fn campaign_examples() {
        let r = run_campaign(&SweepConfig::new(1, 1, 8)).unwrap();
        let ns: Vec<u64> = r.exceptions.iter().map(|e| e.n).collect();
        assert_eq!(ns, [1, 2, 3, 4, 6]);
        assert!(r.exceptions.iter().all(|e| e.f == IntPoly::x()));
        assert!(r.matches_prediction());
        assert_eq!(r.checked_count, 16);

        let r = run_campaign(&SweepConfig::new(3, 1, 1)).unwrap();
        let pairs = r.exception_pairs();
        assert!(pairs.contains(&(poly(&[0, 0, 1]), 1)));
        assert!(pairs.contains(&(poly(&[0, 0, 0, 1]), 1)));
        for e in &r.exceptions {
            assert_eq!(e.lcm_value, BigUint::from(1u32));
            assert_eq!(e.threshold, BigUint::from(2u32));
        }
        assert!(r.matches_prediction());
        assert!(r.truncation_note().unwrap().contains("max_degree = 3"));

        let r = run_campaign(&SweepConfig::new(1, 1, 8).with_range_mode(RangeMode::Full)).unwrap();
        let ns: Vec<u64> = r.exceptions.iter().map(|e| e.n).collect();
        assert_eq!(ns, [1, 2, 3, 4, 6]);
    }

    #[test]
    fn campaign_rejects_invalid_config() {
        assert_eq!(run_campaign(&SweepConfig::new(1, 1, 0)).unwrap_err(), SweepError::ZeroNMax);
        assert_eq!(run_campaign(&SweepConfig::new(0, 1, 3)).unwrap_err(), SweepError::ZeroDegree);
    }

    #[test]
    fn predictions_respect_filters() {
        let cfg = SweepConfig::new(3, 2, 5).with_filter(FamilyFilter::NonzeroConstantTerm);
        assert!(predicted_exceptions(&cfg).is_empty());
        let cfg = SweepConfig::new(2, 2, 3);
        assert_eq!(
            predicted_exceptions(&cfg),
            vec![(IntPoly::x(), 1), (IntPoly::x(), 2), (IntPoly::x(), 3), (poly(&[0, 0, 1]), 1)]
        );
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("lemma23".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let out = identity_suite(5, 5);
        assert_eq!((out.checked, out.failures), (15, 0));
        let out = lemma22_suite(7, 20);
        assert_eq!((out.checked, out.failures), (14, 0));
        let out = lemma22_suite(1, 7);
        assert_eq!(out.failures, 6);
        assert_eq!(out.first_counterexample.as_deref(), Some("n = 1: 1 > 2"));
        assert!(key2_suite(10).passed());
        assert!(nair_suite(50).passed());
        assert!(hanson_suite(50).passed());
        assert!(half_range_ln_suite(50).passed());
        assert!(key1_suite(2, 10).passed());
        assert!(lemma_key_suite(200, 7).passed());
    }

    #[test]
    fn lemma_key_cases_are_seeded_and_in_range() {
        let a = lemma_key_cases(300, 11, 4, 9, 50);
        assert_eq!(a, lemma_key_cases(300, 11, 4, 9, 50));
        for c in &a {
            let s = c.f.degree().unwrap();
            assert!((1..=4).contains(&s));
            assert!(c.f.has_nonneg_coeffs());
            assert!(c.f.coeffs().iter().all(|v| *v <= BigInt::from(9)));
            assert!(1 <= c.m && c.m <= c.n && c.n <= 50);
        }
    }
}
