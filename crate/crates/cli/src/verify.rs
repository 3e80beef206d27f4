//! One-shot verification suites: each runs a named batch of exhaustive
//! checks and returns per-check verdicts with witness details on
//! failure. The process exit code downstream is 0 when every check
//! passes and 2 when any fails — distinguishing "the math said no"
//! from operational errors (exit 1).

use num_bigint::BigUint;
use num_traits::One;

use prek_core::{
    binomial, cross_length_check, duality_check, e2_sum, enumerate_partitions, find_collisions,
    gen_alpha_beta, gen_coprime_triple, gen_pq_family, gen_scaled_triple, pre2_lower_bound,
    pre2_sweep, pre_k, product_of_parts, sweep, validate_pair, Error, LengthFilter, PQFamilyParams,
    Partition,
};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &str, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed: true,
            detail,
        }
    }
}

/// Folds a failure list into one check, quoting the first few witnesses.
fn summarize(name: &str, ok_detail: String, failures: Vec<String>) -> Check {
    if failures.is_empty() {
        return Check::pass(name, ok_detail);
    }
    let mut detail = failures
        .iter()
        .take(5)
        .cloned()
        .collect::<Vec<_>>()
        .join("; ");
    if failures.len() > 5 {
        detail.push_str(&format!(" (+{} more)", failures.len() - 5));
    }
    Check {
        name: name.to_string(),
        passed: false,
        detail,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Thm1,
    Thm3,
    Thm4,
    Thm5,
    Conj12,
    Problem1,
    Problem3,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm3 => "thm3",
            Suite::Thm4 => "thm4",
            Suite::Thm5 => "thm5",
            Suite::Conj12 => "conj12",
            Suite::Problem1 => "problem1",
            Suite::Problem3 => "problem3",
            Suite::All => "all",
        }
    }
}

pub fn run_suite(suite: Suite, n_max: Option<u64>) -> Result<Vec<Check>, Error> {
    match suite {
        Suite::Thm1 => thm1(),
        Suite::Thm3 => thm3(n_max.unwrap_or(20)),
        Suite::Thm4 => thm4(n_max.unwrap_or(60)),
        Suite::Thm5 => thm5(n_max.unwrap_or(200)),
        Suite::Conj12 => conj12(n_max.unwrap_or(28)),
        Suite::Problem1 => problem1(n_max.unwrap_or(120)),
        Suite::Problem3 => problem3(n_max.unwrap_or(100)),
        Suite::All => {
            let mut checks = thm1()?;
            checks.extend(thm3(n_max.unwrap_or(20))?);
            checks.extend(thm4(n_max.unwrap_or(60))?);
            checks.extend(thm5(n_max.unwrap_or(200))?);
            checks.extend(conj12(n_max.unwrap_or(28))?);
            checks.extend(problem1(n_max.unwrap_or(120))?);
            checks.extend(problem3(n_max.unwrap_or(100))?);
            checks.extend(structural_laws()?);
            Ok(checks)
        }
    }
}

/// Collision families: every generator output re-validates, and the
/// smallest cases are rediscovered by exhaustive search.
fn thm1() -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();

    let mut failures = Vec::new();
    for k in 3..=8usize {
        if let Err(v) = validate_pair(&gen_alpha_beta(k)?) {
            failures.push(format!("k={k}: {v}"));
        }
    }
    checks.push(summarize(
        "padded (6,6,1..)/(9,2,2,1..) pairs, k in [3,8]",
        "6 pairs validated".to_string(),
        failures,
    ));

    let mut failures = Vec::new();
    for m in 1..=50u64 {
        let pair = gen_scaled_triple(m)?;
        if let Err(v) = validate_pair(&pair) {
            failures.push(format!("m={m}: {v}"));
        }
        let cube = Partition::new([BigUint::from(m).pow(3) * 36u32])?;
        if pair.shared_image != cube {
            failures.push(format!("m={m}: image {} is not 36m^3", pair.shared_image));
        }
    }
    checks.push(summarize(
        "scaled triples (6m,6m,m)/(9m,2m,2m), m in [1,50]",
        "50 pairs validated, images all 36m^3".to_string(),
        failures,
    ));

    let mut failures = Vec::new();
    for m in 3..=50u64 {
        let pair = gen_coprime_triple(m)?;
        if let Err(v) = validate_pair(&pair) {
            failures.push(format!("m={m}: {v}"));
        }
        if !pair.first.parts_gcd().is_one() || !pair.second.parts_gcd().is_one() {
            failures.push(format!("m={m}: parts are not coprime"));
        }
    }
    checks.push(summarize(
        "coprime triples (3m,2m-1,2)/(4m-2,m,3), m in [3,50]",
        "48 pairs validated, all with coprime parts".to_string(),
        failures,
    ));

    let mut failures = Vec::new();
    let mut count = 0usize;
    let primes = [2u64, 3, 5, 7, 11, 13];
    for &p in &primes {
        for &q in primes.iter().filter(|&&q| q < p) {
            for m in PQFamilyParams::min_m(p, q)..=10 {
                for k in 3..=6usize {
                    let pair = gen_pq_family(&PQFamilyParams::new(p, q, m, k)?)?;
                    if let Err(v) = validate_pair(&pair) {
                        failures.push(format!("p={p} q={q} m={m} k={k}: {v}"));
                    }
                    count += 1;
                }
            }
        }
    }
    checks.push(summarize(
        "two-prime pairs, q < p <= 13, m <= 10, k in [3,6]",
        format!("{count} pairs validated"),
        failures,
    ));

    let mut failures = Vec::new();
    for k in 3..=6usize {
        let n = k as u64 + 10;
        let report = find_collisions(n, k, LengthFilter::Exactly(k))?;
        let pair = gen_alpha_beta(k)?;
        let rediscovered = report.classes.iter().any(|c| {
            c.image == pair.shared_image
                && c.preimages.contains(&pair.first)
                && c.preimages.contains(&pair.second)
        });
        if report.injective() || !rediscovered {
            failures.push(format!("search at n={n}, k={k} missed the generated pair"));
        }
    }
    checks.push(summarize(
        "exhaustive search rediscovers the pair at n=k+10, k in [3,6]",
        "4 collisions rediscovered".to_string(),
        failures,
    ));

    Ok(checks)
}

/// Complement duality: pre_k and pre_{l-k} collide together, and the
/// divided-product complement equals the pre_{l-k} image.
fn thm3(n_max: u64) -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();

    let mut failures = Vec::new();
    let mut pairs_checked = 0u64;
    for n in 0..=n_max {
        for l in 2..=6usize {
            for k in 1..l {
                let verdict = duality_check(n, l, k)?;
                pairs_checked += verdict.partitions_examined;
                for v in verdict.violations {
                    failures.push(format!(
                        "n={n} l={l}: {} and {} agree under pre_{} but not pre_{}",
                        v.first, v.second, v.matching_k, v.differing_k
                    ));
                }
            }
        }
    }
    checks.push(summarize(
        &format!("collision biconditional, n <= {n_max}, l <= 6"),
        format!("{pairs_checked} partition sets agree"),
        failures,
    ));

    let complement_max = n_max.min(16);
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for n in 0..=complement_max {
        for lambda in enumerate_partitions(n) {
            let total = product_of_parts(&lambda);
            for k in 1..lambda.len() {
                let image = pre_k(&lambda, k)?.image;
                let complement = Partition::new(image.parts().iter().map(|x| &total / x))?;
                if complement != pre_k(&lambda, lambda.len() - k)?.image {
                    failures.push(format!("complement mismatch at {lambda}, k={k}"));
                }
                checked += 1;
            }
        }
    }
    checks.push(summarize(
        &format!("divided-product complement equals pre_(l-k), n <= {complement_max}"),
        format!("{checked} complements match"),
        failures,
    ));

    Ok(checks)
}

/// pre_2 injective on partitions with four, five, and six parts.
fn thm4(n_max: u64) -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();
    for l in 4..=6usize {
        let mut failures = Vec::new();
        let mut examined = 0u64;
        for n in 0..=n_max {
            let report = find_collisions(n, 2, LengthFilter::Exactly(l))?;
            examined += report.partitions_examined;
            for class in report.classes {
                failures.push(format!(
                    "n={n}: image {} has {} preimages",
                    class.image,
                    class.preimages.len()
                ));
            }
        }
        checks.push(summarize(
            &format!("pre_2 injective on {l}-part partitions, n <= {n_max}"),
            format!("{examined} partitions, no collisions"),
            failures,
        ));
    }
    Ok(checks)
}

/// The divisor lower bound on the census, with spot checks.
fn thm5(n_max: u64) -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();

    let spot_23 = pre2_lower_bound(23)?;
    let spot_35 = pre2_lower_bound(35)?;
    let mut failures = Vec::new();
    if spot_23 != 4 {
        failures.push(format!("lower bound at n=23 is {spot_23}, expected 4"));
    }
    if spot_35 != 5 {
        failures.push(format!("lower bound at n=35 is {spot_35}, expected 5"));
    }
    checks.push(summarize(
        "lower-bound spot checks at n=23 and n=35",
        "tau(24)/2 = 4 and (tau(36)+1)/2 = 5".to_string(),
        failures,
    ));

    let sweep = pre2_sweep(n_max)?;
    let failures: Vec<String> = sweep
        .bound_violations
        .iter()
        .map(|n| {
            let record = &sweep.records[(*n - 1) as usize];
            format!(
                "n={n}: exact {} < bound {}",
                record.exact_count, record.lower_bound
            )
        })
        .collect();
    checks.push(summarize(
        &format!("exact count >= divisor bound, n <= {n_max}"),
        format!("{n_max} records respect the bound"),
        failures,
    ));

    if n_max >= 23 {
        let images = &sweep.records[22].images;
        let listed = [
            Partition::from_u64([11, 11, 1])?,
            Partition::from_u64([14, 7, 2])?,
            Partition::from_u64([15, 5, 3])?,
        ];
        let failures: Vec<String> = listed
            .iter()
            .filter(|image| !images.contains(image))
            .map(|image| format!("{image} missing from Pre_2(23)"))
            .collect();
        checks.push(summarize(
            "the three hand-listed images of 23 are found",
            "(11,11,1), (14,7,2), (15,5,3) all present".to_string(),
            failures,
        ));
    }

    Ok(checks)
}

/// pre_2 injective on every partition of n, small n.
fn conj12(n_max: u64) -> Result<Vec<Check>, Error> {
    let mut failures = Vec::new();
    let mut examined = 0u64;
    for n in 0..=n_max {
        let report = find_collisions(n, 2, LengthFilter::All)?;
        examined += report.partitions_examined;
        for class in report.classes {
            failures.push(format!("n={n}: image {} collides", class.image));
        }
    }
    Ok(vec![summarize(
        &format!("pre_2 injective on all partitions, n <= {n_max}"),
        format!("{examined} partitions, no collisions"),
        failures,
    )])
}

/// Which n have pre_3 injective on 3-part partitions; expected to stop
/// at 18.
fn problem1(n_max: u64) -> Result<Vec<Check>, Error> {
    let outcome = sweep(3, n_max.max(3), 3, LengthFilter::Exactly(3), None)?;
    let injective = outcome.injective_ns();
    let list = injective
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    let past: Vec<String> = injective
        .iter()
        .filter(|&&n| n > 18)
        .map(|n| format!("FINDING: injective at n={n} > 18"))
        .collect();
    Ok(vec![summarize(
        &format!("injective n for 3-part pre_3, n in [3,{}]", n_max.max(3)),
        format!("injective at n = {list}; none past 18"),
        past,
    )])
}

/// Census sweep: where are the one-element image sets?
fn problem3(n_max: u64) -> Result<Vec<Check>, Error> {
    let sweep = pre2_sweep(n_max)?;
    let mut checks = Vec::new();

    let failures: Vec<String> = sweep
        .bound_violations
        .iter()
        .map(|n| format!("bound violated at n={n}"))
        .collect();
    checks.push(summarize(
        &format!("census bound holds across the sweep, n <= {n_max}"),
        format!("{} records checked", sweep.records.len()),
        failures,
    ));

    let units = if sweep.units.is_empty() {
        "none".to_string()
    } else {
        sweep
            .units
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    };
    checks.push(Check::pass(
        &format!("n with a one-element image set, n <= {n_max}"),
        format!("n = {units}"),
    ));

    Ok(checks)
}

/// The structural laws of pre_k, exhaustively over small ranges.
fn structural_laws() -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();

    let worked = pre_k(&Partition::from_u64([7, 4, 4])?, 2)?.image;
    let expected = Partition::from_u64([28, 28, 16])?;
    checks.push(summarize(
        "worked example pre_2((7,4,4))",
        "(28, 28, 16)".to_string(),
        if worked == expected {
            vec![]
        } else {
            vec![format!("got {worked}")]
        },
    ));

    let mut failures = Vec::new();
    for n in 0..=20u64 {
        for lambda in enumerate_partitions(n) {
            for k in 1..=5usize {
                let expected = if lambda.len() >= k {
                    binomial(lambda.len() as u64, k as u64)
                } else {
                    0
                };
                if pre_k(&lambda, k)?.image.len() as u128 != expected {
                    failures.push(format!("{lambda}, k={k}"));
                }
            }
        }
    }
    checks.push(summarize(
        "part-count law C(l,k), n <= 20, k <= 5",
        "all image sizes match".to_string(),
        failures,
    ));

    let mut failures = Vec::new();
    for n in 0..=16u64 {
        for lambda in enumerate_partitions(n) {
            for k in 1..=lambda.len() {
                let image = pre_k(&lambda, k)?.image;
                let exponent = binomial(lambda.len() as u64 - 1, k as u64 - 1) as u32;
                if product_of_parts(&image) != product_of_parts(&lambda).pow(exponent) {
                    failures.push(format!("{lambda}, k={k}"));
                }
            }
        }
    }
    checks.push(summarize(
        "product law exponent C(l-1,k-1), n <= 16",
        "all image products match".to_string(),
        failures,
    ));

    let mut failures = Vec::new();
    for n in 1..=12u64 {
        for lambda in enumerate_partitions(n) {
            for m in 1..=5u64 {
                let scaled = Partition::new(lambda.parts().iter().map(|p| p * m))?;
                for k in 1..=lambda.len() {
                    let factor = BigUint::from(m).pow(k as u32);
                    let expected = Partition::new(
                        pre_k(&lambda, k)?.image.parts().iter().map(|p| p * &factor),
                    )?;
                    if pre_k(&scaled, k)?.image != expected {
                        failures.push(format!("{lambda}, m={m}, k={k}"));
                    }
                }
            }
        }
    }
    checks.push(summarize(
        "scaling law m^k, n <= 12, m <= 5",
        "all scaled images match".to_string(),
        failures,
    ));

    let mut failures = Vec::new();
    for k in 2..=3usize {
        for n in 0..=20u64 {
            let verdict = cross_length_check(n, k)?;
            for v in verdict.violations {
                failures.push(format!("n={n}, k={k}: image {}", v.image));
            }
        }
    }
    checks.push(summarize(
        "cross-length distinctness, n <= 20, k in {2,3}",
        "no image shared across lengths".to_string(),
        failures,
    ));

    let mut failures = Vec::new();
    for s in 2..=40u64 {
        for lambda in enumerate_partitions(s) {
            if lambda.len() >= 2 && e2_sum(&lambda) < BigUint::from(s - 1) {
                failures.push(format!("e2({lambda}) < {} - 1", s));
            }
        }
        if e2_sum(&Partition::from_u64([s - 1, 1])?) != BigUint::from(s - 1) {
            failures.push(format!("equality case fails at s={s}"));
        }
    }
    checks.push(summarize(
        "search-bound lemma e2 >= s-1, s <= 40",
        "bound holds with equality at (s-1, 1)".to_string(),
        failures,
    ));

    Ok(checks)
}
