//! Structural laws of the `pre_k` maps, checked two ways: exhaustively
//! over every partition in a stated range, and on random inputs via
//! proptest. The exhaustive ranges are small enough to finish in
//! seconds but large enough to have caught every transcription error
//! made while writing the closed forms.

use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

use prek_core::{
    binomial, complement_image, cross_length_check, divisor_witnesses, e2_sum,
    enumerate_partitions, enumerate_partitions_with_length, find_collisions, is_perfect_square,
    pre_k, product_of_parts, tau, ImageKey, LengthFilter, Partition,
};

fn scale(lambda: &Partition, m: u64) -> Partition {
    Partition::new(lambda.parts().iter().map(|p| p * m)).unwrap()
}

#[test]
fn part_count_law() {
    // pre_k of an l-part partition has C(l, k) parts (empty when l < k).
    for n in 0..=20u64 {
        for lambda in enumerate_partitions(n) {
            for k in 1..=5usize {
                let result = pre_k(&lambda, k).unwrap();
                let expected = if lambda.len() >= k {
                    binomial(lambda.len() as u64, k as u64)
                } else {
                    0
                };
                assert_eq!(
                    result.image.len() as u128,
                    expected,
                    "part count of pre_{k}({lambda})"
                );
            }
        }
    }
}

#[test]
fn product_law() {
    // The parts of pre_k(lambda) multiply to (product of lambda's
    // parts)^C(l-1, k-1): each part appears in C(l-1, k-1) subsets.
    for n in 0..=16u64 {
        for lambda in enumerate_partitions(n) {
            for k in 1..=lambda.len() {
                let image = pre_k(&lambda, k).unwrap().image;
                let exponent = binomial(lambda.len() as u64 - 1, k as u64 - 1) as u32;
                assert_eq!(
                    product_of_parts(&image),
                    product_of_parts(&lambda).pow(exponent),
                    "product law for pre_{k}({lambda})"
                );
            }
        }
    }
}

#[test]
fn complement_law() {
    // Dividing the total part product by each pre_k image part yields
    // exactly the pre_{l-k} image.
    for n in 0..=16u64 {
        for lambda in enumerate_partitions(n) {
            for k in 1..lambda.len() {
                let complement = complement_image(&lambda, k).unwrap();
                let direct = pre_k(&lambda, lambda.len() - k).unwrap().image;
                assert_eq!(complement, direct, "complement of pre_{k}({lambda})");
            }
        }
    }
}

#[test]
fn scaling_law() {
    // pre_k(m * lambda) = m^k * pre_k(lambda), part by part.
    for n in 1..=12u64 {
        for lambda in enumerate_partitions(n) {
            for m in 1..=5u64 {
                let scaled = scale(&lambda, m);
                for k in 1..=lambda.len() {
                    let plain = pre_k(&lambda, k).unwrap().image;
                    let scaled_image = pre_k(&scaled, k).unwrap().image;
                    let factor = BigUint::from(m).pow(k as u32);
                    let expected =
                        Partition::new(plain.parts().iter().map(|p| p * &factor)).unwrap();
                    assert_eq!(scaled_image, expected, "scaling {lambda} by {m}, k={k}");
                }
            }
        }
    }
}

#[test]
fn e2_identity_matches_image_weight() {
    for n in 0..=25u64 {
        for lambda in enumerate_partitions(n) {
            let image = pre_k(&lambda, 2).unwrap().image;
            assert_eq!(e2_sum(&lambda), image.weight(), "e2 of {lambda}");
        }
    }
}

#[test]
fn pre2_image_extremes_are_the_corner_products() {
    // Largest image part is the product of the two largest source
    // parts; smallest is the product of the two smallest.
    for n in 2..=20u64 {
        for lambda in enumerate_partitions(n) {
            let l = lambda.len();
            if l < 2 {
                continue;
            }
            let parts = lambda.parts();
            let image = pre_k(&lambda, 2).unwrap().image;
            assert_eq!(image.parts()[0], &parts[0] * &parts[1]);
            assert_eq!(
                image.parts()[image.len() - 1],
                &parts[l - 2] * &parts[l - 1]
            );
        }
    }
}

#[test]
fn partitions_with_one_extra_part_never_collide() {
    // For k >= 2, pre_k on (k+1)-part partitions factors through the
    // identity-like complement pre_1, so no collisions can occur.
    for k in 2..=5usize {
        for n in 0..=40u64 {
            let report = find_collisions(n, k, LengthFilter::Exactly(k + 1)).unwrap();
            assert!(
                report.injective(),
                "unexpected pre_{k} collision on {}-part partitions of {n}",
                k + 1
            );
        }
    }
}

#[test]
fn cross_length_distinctness() {
    for k in 2..=3usize {
        for n in 0..=20u64 {
            let verdict = cross_length_check(n, k).unwrap();
            assert!(
                verdict.passed(),
                "cross-length image clash at n={n}, k={k}: {:?}",
                verdict.violations
            );
        }
    }
}

#[test]
fn tau_is_odd_exactly_for_squares() {
    for n in 1..=10_000u64 {
        assert_eq!(
            tau(n).unwrap() % 2 == 1,
            is_perfect_square(n),
            "tau parity of {n}"
        );
    }
}

#[test]
fn search_bound_lemma() {
    // Every partition with at least two parts and weight s has
    // e2_sum >= s - 1, with equality attained by (s-1, 1). The census
    // relies on this to cut its preimage search at weight n + 1.
    for s in 2..=40u64 {
        let mut minimum: Option<BigUint> = None;
        for lambda in enumerate_partitions(s) {
            if lambda.len() < 2 {
                continue;
            }
            let e2 = e2_sum(&lambda);
            assert!(
                e2 >= BigUint::from(s - 1),
                "e2({lambda}) = {e2} undercuts weight {s} - 1"
            );
            minimum = Some(match minimum {
                Some(current) => current.min(e2),
                None => e2,
            });
        }
        assert_eq!(
            minimum,
            Some(BigUint::from(s - 1)),
            "minimum not attained at s={s}"
        );
    }
}

#[test]
fn divisor_witness_images_are_pairwise_distinct_small_range() {
    // The full 10^4 range lives in the oracle suite; this guards the
    // property at the scale other tests lean on.
    for n in 1..=500u64 {
        let witnesses = divisor_witnesses(n).unwrap();
        for i in 0..witnesses.len() {
            for j in (i + 1)..witnesses.len() {
                assert_ne!(
                    witnesses[i].1, witnesses[j].1,
                    "duplicate divisor witness image at n={n}"
                );
            }
        }
    }
}

#[test]
fn enumeration_with_length_partitions_the_enumeration() {
    for n in 0..=25u64 {
        let total = enumerate_partitions(n).count();
        let mut by_length = 0usize;
        for l in 0..=(n as usize).max(1) {
            by_length += enumerate_partitions_with_length(n, l).count();
        }
        assert_eq!(by_length, total, "length slices of n={n} don't add up");
    }
}

proptest! {
    #[test]
    fn make_partition_canonicalizes_any_multiset(values in prop::collection::vec(1u64..=1000, 0..10)) {
        let partition = Partition::from_u64(values.clone()).unwrap();
        prop_assert!(partition.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(partition.len(), values.len());
        prop_assert_eq!(partition.weight(), values.iter().sum::<u64>().into());
        let mut sorted = values;
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let restored: Vec<u64> = partition.parts().iter().map(|p| u64::try_from(p).unwrap()).collect();
        prop_assert_eq!(restored, sorted);
    }

    #[test]
    fn image_key_equality_is_partition_equality(
        a in prop::collection::vec(1u64..=300, 0..8),
        b in prop::collection::vec(1u64..=300, 0..8),
    ) {
        let pa = Partition::from_u64(a).unwrap();
        let pb = Partition::from_u64(b).unwrap();
        prop_assert_eq!(ImageKey::of(&pa) == ImageKey::of(&pb), pa == pb);
    }

    #[test]
    fn part_count_law_random(values in prop::collection::vec(1u64..=50, 1..9), k in 1usize..=4) {
        let lambda = Partition::from_u64(values).unwrap();
        let result = pre_k(&lambda, k).unwrap();
        let expected = if lambda.len() >= k { binomial(lambda.len() as u64, k as u64) } else { 0 };
        prop_assert_eq!(result.image.len() as u128, expected);
    }

    #[test]
    fn product_law_random(values in prop::collection::vec(1u64..=50, 1..9), k in 1usize..=8) {
        let lambda = Partition::from_u64(values).unwrap();
        prop_assume!(k <= lambda.len());
        let image = pre_k(&lambda, k).unwrap().image;
        let exponent = binomial(lambda.len() as u64 - 1, k as u64 - 1) as u32;
        prop_assert_eq!(product_of_parts(&image), product_of_parts(&lambda).pow(exponent));
    }

    #[test]
    fn scaling_law_random(
        values in prop::collection::vec(1u64..=30, 1..7),
        k in 1usize..=3,
        m in 1u64..=5,
    ) {
        let lambda = Partition::from_u64(values).unwrap();
        prop_assume!(k <= lambda.len());
        let factor = BigUint::from(m).pow(k as u32);
        let expected = Partition::new(
            pre_k(&lambda, k).unwrap().image.parts().iter().map(|p| p * &factor),
        ).unwrap();
        prop_assert_eq!(pre_k(&scale(&lambda, m), k).unwrap().image, expected);
    }

    #[test]
    fn e2_identity_random(values in prop::collection::vec(1u64..=200, 0..10)) {
        let lambda = Partition::from_u64(values).unwrap();
        prop_assert_eq!(e2_sum(&lambda), pre_k(&lambda, 2).unwrap().image.weight());
    }

    #[test]
    fn complement_random(values in prop::collection::vec(1u64..=40, 2..8), k in 1usize..=7) {
        let lambda = Partition::from_u64(values).unwrap();
        prop_assume!(k < lambda.len());
        prop_assert_eq!(
            complement_image(&lambda, k).unwrap(),
            pre_k(&lambda, lambda.len() - k).unwrap().image
        );
    }

    #[test]
    fn pre1_is_identity_random(values in prop::collection::vec(1u64..=10_000, 0..12)) {
        let lambda = Partition::from_u64(values).unwrap();
        if lambda.is_empty() {
            prop_assert!(pre_k(&lambda, 1).unwrap().image.is_empty());
        } else {
            prop_assert_eq!(pre_k(&lambda, 1).unwrap().image, lambda);
        }
    }

    #[test]
    fn product_of_parts_is_one_part_norm(values in prop::collection::vec(1u64..=100, 1..7)) {
        // When k equals the length, the image is the single-part "norm".
        let lambda = Partition::from_u64(values).unwrap();
        let image = pre_k(&lambda, lambda.len()).unwrap().image;
        prop_assert_eq!(image.len(), 1);
        prop_assert_eq!(image.parts()[0].clone(), product_of_parts(&lambda));
        prop_assert!(product_of_parts(&Partition::empty()).is_one());
    }
}
