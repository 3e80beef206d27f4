//! Parametric generators for families of `pre_k` collisions.
//!
//! Each generator builds a pair of distinct same-weight, same-length
//! partitions from closed formulas, together with the closed-form shared
//! image and weight. [`validate_pair`] re-derives every claim through
//! the `pre_k` machinery without trusting the generator arithmetic, so
//! a generator bug and a formula transcription error both surface as a
//! concrete violated clause.
//!
//! The four families: padded `(6,6,1^{k-2})` vs `(9,2,2,1^{k-3})`; the
//! scaled triples `(6m,6m,m)` vs `(9m,2m,2m)`; the coprime triples
//! `(3m,2m-1,2)` vs `(4m-2,m,3)`; and the two-prime family driven by
//! [`PQFamilyParams`].

use num_bigint::BigUint;
use thiserror::Error;

use crate::divisor::is_prime;
use crate::error::Error as CoreError;
use crate::partition::Partition;
use crate::prek::pre_k;

/// Parameters for the two-prime family: primes `p > q`, a multiplier
/// `m >= ceil((p-1)/(q-1))`, and a part count `k >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PQFamilyParams {
    p: u64,
    q: u64,
    m: u64,
    k: usize,
}

impl PQFamilyParams {
    /// Smallest admissible multiplier, `ceil((p-1)/(q-1))`. The bound is
    /// what makes the raw first tuple weakly decreasing: it forces
    /// `1 + m(q-1) >= p`.
    pub fn min_m(p: u64, q: u64) -> u64 {
        (p - 1).div_ceil(q - 1)
    }

    pub fn new(p: u64, q: u64, m: u64, k: usize) -> Result<Self, CoreError> {
        if !is_prime(p) {
            return Err(CoreError::NotPrime(p));
        }
        if !is_prime(q) {
            return Err(CoreError::NotPrime(q));
        }
        if p <= q {
            return Err(CoreError::PrimesOutOfOrder { p, q });
        }
        if k < 3 {
            return Err(CoreError::FamilyKTooSmall(k));
        }
        let min = Self::min_m(p, q);
        if m < min {
            return Err(CoreError::MTooSmall { m, min });
        }
        Ok(PQFamilyParams { p, q, m, k })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn m(&self) -> u64 {
        self.m
    }
    pub fn k(&self) -> usize {
        self.k
    }
}

/// A claimed collision: two distinct partitions of `weight` with `k`
/// parts each, both said to map to `shared_image` under `pre_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexamplePair {
    pub first: Partition,
    pub second: Partition,
    pub weight: BigUint,
    pub k: usize,
    pub shared_image: Partition,
}

/// A `CounterexamplePair` clause that failed re-verification.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PairViolation {
    #[error("the two partitions are not distinct")]
    NotDistinct,
    #[error("weights differ: first weighs {first}, second weighs {second}")]
    WeightsDiffer { first: BigUint, second: BigUint },
    #[error("declared weight {declared} but both partitions weigh {computed}")]
    DeclaredWeightWrong {
        computed: BigUint,
        declared: BigUint,
    },
    #[error("lengths differ: {first} parts vs {second} parts")]
    LengthsDiffer { first: usize, second: usize },
    #[error("images differ under pre_{k}: {first_image} vs {second_image}")]
    ImagesDiffer {
        k: usize,
        first_image: Partition,
        second_image: Partition,
    },
    #[error("declared image {declared} but pre_{k} maps both to {computed}")]
    DeclaredImageWrong {
        k: usize,
        computed: Partition,
        declared: Partition,
    },
    #[error("k must be at least 1")]
    InvalidK,
}

/// The padded pair `(6,6,1^{k-2})` and `(9,2,2,1^{k-3})`: partitions of
/// `k+10` with `k` parts sharing the `pre_k` image `(36)`.
pub fn gen_alpha_beta(k: usize) -> Result<CounterexamplePair, CoreError> {
    if k < 3 {
        return Err(CoreError::FamilyKTooSmall(k));
    }
    let mut first: Vec<BigUint> = vec![BigUint::from(6u32), BigUint::from(6u32)];
    first.resize(k, BigUint::from(1u32));
    let mut second: Vec<BigUint> = vec![
        BigUint::from(9u32),
        BigUint::from(2u32),
        BigUint::from(2u32),
    ];
    second.resize(k, BigUint::from(1u32));
    assemble(
        first,
        second,
        k,
        BigUint::from(k as u64 + 10),
        BigUint::from(36u32),
    )
}

/// The scaled triples `(6m,6m,m)` and `(9m,2m,2m)`: partitions of `13m`
/// sharing the `pre_3` image `(36m^3)`.
pub fn gen_scaled_triple(m: u64) -> Result<CounterexamplePair, CoreError> {
    if m == 0 {
        return Err(CoreError::ScaledMZero);
    }
    let m = BigUint::from(m);
    let first = vec![&m * 6u32, &m * 6u32, m.clone()];
    let second = vec![&m * 9u32, &m * 2u32, &m * 2u32];
    assemble(first, second, 3, &m * 13u32, m.pow(3) * 36u32)
}

/// The coprime triples `(3m,2m-1,2)` and `(4m-2,m,3)` for `m >= 3`:
/// partitions of `5m+1` sharing the `pre_3` image `(6m(2m-1))`, with
/// each member's parts relatively prime.
pub fn gen_coprime_triple(m: u64) -> Result<CounterexamplePair, CoreError> {
    if m < 3 {
        return Err(CoreError::CoprimeMTooSmall(m));
    }
    let m = BigUint::from(m);
    let first = vec![&m * 3u32, &m * 2u32 - 1u32, BigUint::from(2u32)];
    let second = vec![&m * 4u32 - 2u32, m.clone(), BigUint::from(3u32)];
    let image = (&m * 2u32 - 1u32) * &m * 6u32;
    assemble(first, second, 3, &m * 5u32 + 1u32, image)
}

/// The two-prime family: raw tuples
/// `(q(1+m(p-1)), 1+m(q-1), p, 1^{k-3})` and
/// `(p(1+m(q-1)), 1+m(p-1), q, 1^{k-3})`, partitions of
/// `p+q+k+m(pq-1)-2` sharing the `pre_k` image
/// `(pq(1+m(p-1))(1+m(q-1)))`.
pub fn gen_pq_family(params: &PQFamilyParams) -> Result<CounterexamplePair, CoreError> {
    let (p, q, m, k) = (params.p, params.q, params.m, params.k);
    let a = BigUint::from(m) * (p - 1) + 1u32; // 1 + m(p-1)
    let b = BigUint::from(m) * (q - 1) + 1u32; // 1 + m(q-1)

    let mut first = vec![&a * q, b.clone(), BigUint::from(p)];
    first.resize(k, BigUint::from(1u32));
    let mut second = vec![&b * p, a.clone(), BigUint::from(q)];
    second.resize(k, BigUint::from(1u32));

    let weight =
        BigUint::from(p + q) + k as u64 + BigUint::from(m) * (BigUint::from(p) * q - 1u32) - 2u32;
    let image = BigUint::from(p) * q * a * b;
    assemble(first, second, k, weight, image)
}

/// Shared tail of every generator: insists the raw tuples came out of
/// the formulas already weakly decreasing (catching transcription
/// errors), then packages them.
fn assemble(
    raw_first: Vec<BigUint>,
    raw_second: Vec<BigUint>,
    k: usize,
    weight: BigUint,
    image_part: BigUint,
) -> Result<CounterexamplePair, CoreError> {
    for raw in [&raw_first, &raw_second] {
        if raw.windows(2).any(|w| w[0] < w[1]) {
            let rendered = raw
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            return Err(CoreError::RawTupleUnsorted(format!("({rendered})")));
        }
    }
    Ok(CounterexamplePair {
        first: Partition::new(raw_first)?,
        second: Partition::new(raw_second)?,
        weight,
        k,
        shared_image: Partition::new([image_part])?,
    })
}

/// Re-verifies every claim a `CounterexamplePair` makes, from scratch:
/// distinctness, equal weights matching the declared weight, equal
/// lengths, equal `pre_k` images matching the declared image.
pub fn validate_pair(pair: &CounterexamplePair) -> Result<(), PairViolation> {
    if pair.first == pair.second {
        return Err(PairViolation::NotDistinct);
    }
    let first_weight = pair.first.weight();
    let second_weight = pair.second.weight();
    if first_weight != second_weight {
        return Err(PairViolation::WeightsDiffer {
            first: first_weight,
            second: second_weight,
        });
    }
    if first_weight != pair.weight {
        return Err(PairViolation::DeclaredWeightWrong {
            computed: first_weight,
            declared: pair.weight.clone(),
        });
    }
    if pair.first.len() != pair.second.len() {
        return Err(PairViolation::LengthsDiffer {
            first: pair.first.len(),
            second: pair.second.len(),
        });
    }
    if pair.k == 0 {
        return Err(PairViolation::InvalidK);
    }
    let first_image = pre_k(&pair.first, pair.k)
        .map_err(|_| PairViolation::InvalidK)?
        .image;
    let second_image = pre_k(&pair.second, pair.k)
        .map_err(|_| PairViolation::InvalidK)?
        .image;
    if first_image != second_image {
        return Err(PairViolation::ImagesDiffer {
            k: pair.k,
            first_image,
            second_image,
        });
    }
    if first_image != pair.shared_image {
        return Err(PairViolation::DeclaredImageWrong {
            k: pair.k,
            computed: first_image,
            declared: pair.shared_image.clone(),
        });
    }
    Ok(())
}
