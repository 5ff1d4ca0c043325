//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::time::{Duration, Instant};

use lcmlab::bounds::{key2_lcm, lemma22_holds, nair_check, Key2Case};
use lcmlab::lcm_engine::{lcm2, lcm_range, lcm_upto_table, RangeLcmRequest};
use lcmlab::verifier::{
    half_range_ln_suite, hanson_suite, identity_suite, key2_suite, lemma22_suite, lemma_key_suite,
    nair_suite, run_campaign, RangeMode, SweepConfig, LEMMA_KEY_SEED,
};
use lcmlab::{BigInt, BigUint, IntPoly};
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_coeffs(c.iter().map(|&v| BigInt::from(v)).collect())
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:?}, limit {limit:?}"))
}

fn expected_exception_set() -> Vec<(IntPoly, u64)> {
    let x = IntPoly::x();
    vec![
        (x.clone(), 1),
        (x.clone(), 2),
        (x.clone(), 3),
        (x.clone(), 4),
        (x, 6),
        (poly(&[0, 0, 1]), 1),
        (poly(&[0, 0, 0, 1]), 1),
    ]
}

fn exception_sweep(mode: RangeMode, limit: Duration) -> Check {
    let start = Instant::now();
    let cfg = SweepConfig::new(3, 5, 40).with_range_mode(mode);
    let report = run_campaign(&cfg).map_err(|e| e.to_string())?;
    within(start, limit)?;
    let found = report.exception_pairs();
    ensure(
        found == expected_exception_set(),
        format!("exceptions {:?}", found.iter().map(|(f, n)| format!("({f}, {n})")).collect::<Vec<_>>()),
    )?;
    ensure(report.matches_prediction(), "report disagrees with prediction")?;
    for e in &report.exceptions {
        ensure(e.lcm_value < e.threshold, format!("record ({}, {}) is not a failure", e.f, e.n))?;
    }
    Ok(format!(
        "{} pairs checked, 7 exceptions in {:.2?}",
        report.checked_count,
        start.elapsed()
    ))
}

fn c1_half_range_exceptions() -> Check {
    exception_sweep(RangeMode::Half, Duration::from_secs(60))
}

fn c2_full_range_exceptions() -> Check {
    exception_sweep(RangeMode::Full, Duration::from_secs(120))
}

fn c3_identity_suite() -> Check {
    let start = Instant::now();
    let out = identity_suite(30, 30);
    within(start, Duration::from_secs(10))?;
    ensure(out.checked == 465, format!("checked {} identities", out.checked))?;
    ensure(out.passed(), format!("{:?}", out.first_counterexample))?;
    Ok("465 identities, symbolic and pointwise agree".into())
}

fn c4_lemma_key_suite() -> Check {
    let start = Instant::now();
    let out = lemma_key_suite(10_000, LEMMA_KEY_SEED);
    within(start, Duration::from_secs(30))?;
    ensure(out.checked == 10_000, format!("checked {}", out.checked))?;
    ensure(out.passed(), format!("{:?}", out.first_counterexample))?;
    Ok(format!("10000 random cases in {:.2?}", start.elapsed()))
}

fn c5_lemma22() -> Check {
    let out = lemma22_suite(7, 64);
    ensure(out.checked == 58 && out.passed(), format!("{out:?}"))?;
    let r7 = lemma22_holds(7).map_err(|e| e.to_string())?;
    ensure(
        r7.holds && r7.witness.left == BigInt::from(140) && r7.witness.right == BigInt::from(128),
        format!("n = 7: {}", r7.witness),
    )?;
    let r6 = lemma22_holds(6).map_err(|e| e.to_string())?;
    ensure(
        !r6.holds && r6.witness.left == BigInt::from(60) && r6.witness.right == BigInt::from(64),
        format!("n = 6: {}", r6.witness),
    )?;
    Ok("holds for 7..=64, fails at 6 (60 < 64)".into())
}

fn c6_key2() -> Check {
    let start = Instant::now();
    let out = key2_suite(200);
    ensure(out.passed(), format!("{:?}", out.first_counterexample))?;
    let mut pairs = 0u64;
    for a in 1..=200u64 {
        for b in 1..=200u64 {
            if a.gcd(&b) != 1 {
                continue;
            }
            pairs += 1;
            let r = key2_lcm(a, b).map_err(|e| e.to_string())?;
            let (x, y, z) = (a, a + b, a + 2 * b);
            let direct = x.lcm(&y).lcm(&z);
            let product = BigUint::from(x) * y * z;
            ensure(r.value == BigUint::from(direct), format!("a = {a}, b = {b}: value"))?;
            let factor = if x.gcd(&z) == 2 { Key2Case::Half } else { Key2Case::Full };
            ensure(r.case == factor, format!("a = {a}, b = {b}: case"))?;
            let expected = match r.case {
                Key2Case::Full => product,
                Key2Case::Half => product / 2u32,
            };
            ensure(r.value == expected, format!("a = {a}, b = {b}: product"))?;
        }
    }
    ensure(pairs == out.checked, "pair count mismatch")?;
    within(start, Duration::from_secs(10))?;
    Ok(format!("{pairs} coprime pairs"))
}

fn c7_context_bounds() -> Check {
    let start = Instant::now();
    let nair = nair_suite(1000);
    ensure(nair.checked == 994 && nair.passed(), format!("nair {nair:?}"))?;
    let six = nair_check(6).map_err(|e| e.to_string())?;
    ensure(!six.holds, "nair holds at n = 6")?;
    let hanson = hanson_suite(1000);
    ensure(hanson.checked == 1000 && hanson.passed(), format!("hanson {hanson:?}"))?;
    let ln = half_range_ln_suite(1000);
    ensure(ln.checked == 1000 && ln.passed(), format!("L_n {ln:?}"))?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("nair, hanson, L_n up to 1000 in {:.2?}", start.elapsed()))
}

fn primes_upto(n: u64) -> Vec<u64> {
    (2..=n)
        .filter(|&p| (2..).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .collect()
}

fn c8_oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..500 {
        let deg = rng.gen_range(1..=4);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
        let f = poly(&coeffs);
        let m = rng.gen_range(1..=100u64);
        let n = m + rng.gen_range(0..=300u64);
        let req = RangeLcmRequest::new(f.clone(), m, n).map_err(|e| e.to_string())?;
        let fold = (m..=n).fold(BigInt::one(), |acc, k| lcm2(&acc, &f.eval(&BigInt::from(k))));
        ensure(lcm_range(&req) == fold, format!("request {i}: f = {f}, m = {m}, n = {n}"))?;
    }
    let primes = primes_upto(2000);
    let table = lcm_upto_table(2000);
    for n in 1..=2000u64 {
        let sieve = primes.iter().take_while(|&&p| p <= n).fold(BigUint::one(), |acc, &p| {
            let mut pk = p;
            while pk * p <= n {
                pk *= p;
            }
            acc * pk
        });
        ensure(table[n as usize - 1] == sieve, format!("psi lcm mismatch at n = {n}"))?;
    }
    Ok("500 tree/fold requests, psi vs prime powers up to 2000".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 exception set, half range", c1_half_range_exceptions),
        ("2 exception set, full range", c2_full_range_exceptions),
        ("3 finite-difference identity", c3_identity_suite),
        ("4 lcm vs product bound", c4_lemma_key_suite),
        ("5 central binomial bound", c5_lemma22),
        ("6 three-term lcm classification", c6_key2),
        ("7 context bounds", c7_context_bounds),
        ("8 oracle equivalence", c8_oracle_equivalence),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
