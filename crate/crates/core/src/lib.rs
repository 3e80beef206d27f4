//! Partition algebra around the `pre_k` maps.
//!
//! For an integer partition with parts `p_1 >= ... >= p_l`, the `pre_k`
//! map sends it to the partition formed by the products of parts over
//! all `C(l, k)` index subsets of size `k` — the multiset evaluated by
//! the `k`-th elementary symmetric polynomial. This crate provides:
//!
//! - canonical [`Partition`] values with deterministic enumeration
//!   ([`enumerate_partitions`], [`enumerate_partitions_with_length`]);
//! - the map itself and its structural identities ([`pre_k`],
//!   [`product_of_parts`], [`e2_sum`], [`complement_image`]);
//! - exhaustive injectivity searches with exact collision classes
//!   ([`find_collisions`], [`sweep`]) plus the cross-length and
//!   complement-duality checks;
//! - generators for four infinite families of `pre_k` collisions, each
//!   re-validated from scratch ([`gen_alpha_beta`], [`gen_scaled_triple`],
//!   [`gen_coprime_triple`], [`gen_pq_family`]);
//! - an exact census of which partitions of `n` are `pre_2` images,
//!   with the divisor-pair lower bound ([`pre2_exact`], [`pre2_sweep`]).
//!
//! Part values are arbitrary-precision naturals throughout: `pre_k`
//! multiplies up to `l` parts together and must never overflow silently.

pub mod census;
pub mod collision;
pub mod divisor;
pub mod error;
pub mod family;
pub mod partition;
pub mod prek;
pub mod report;
pub mod sweep;

pub use census::{
    divisor_witnesses, pre2_exact, pre2_lower_bound, pre2_sweep, pre2_witness_search, CensusRecord,
    CensusSweep,
};
pub use collision::{
    cross_length_check, duality_check, find_collisions, group_by_image, CollisionClass,
    CrossLengthReport, DualityReport, ImageKey, InjectivityReport, LengthFilter,
};
pub use divisor::{divisor_pairs, is_perfect_square, is_prime, tau};
pub use error::{CacheError, Error};
pub use family::{
    gen_alpha_beta, gen_coprime_triple, gen_pq_family, gen_scaled_triple, validate_pair,
    CounterexamplePair, PQFamilyParams, PairViolation,
};
pub use partition::{enumerate_partitions, enumerate_partitions_with_length, Partition};
pub use prek::{binomial, complement_image, e2_sum, pre_k, product_of_parts, PrekResult};
pub use report::{
    partition_from_strings, partition_to_strings, CensusRecordDoc, CollisionClassDoc, DocError,
    FamilyPairDoc, InjectivityReportDoc, WitnessDoc, SCHEMA_VERSION, WITNESS_CAP,
};
pub use sweep::{sweep, SweepCache, SweepOutcome};
