//! Census of the `pre_2` image: which partitions of `n` are `pre_2`
//! images, how many there are, and the divisor-pair lower bound.
//!
//! The exact count enumerates preimage candidates with a pruned search:
//! every weakly decreasing prefix of a preimage has pairwise-product sum
//! at most `n` (products are positive), so the search walks prefixes and
//! cuts any extension that would overshoot. The classical bound
//! `e_2(lambda) >= weight - 1` for partitions with at least two parts
//! confines preimages to weights `s <= n+1`; a brute-force test pins
//! that lemma down before anything trusts the search.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::collision::ImageKey;
use crate::divisor::{divisor_pairs, is_perfect_square, tau};
use crate::error::Error;
use crate::partition::Partition;
use crate::prek::pre_k;

/// Everything the census knows about one `n`: the exact image count,
/// the divisor lower bound, the image set itself, and the divisor-pair
/// witnesses realizing the bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRecord {
    pub n: u64,
    pub exact_count: u64,
    pub lower_bound: u64,
    pub images: Vec<Partition>,
    pub divisor_witnesses: Vec<(Partition, Partition)>,
}

/// Census over `n = 1..=n_max` with the two summary facts the sweep
/// exists to check: which `n` have a one-element image set, and whether
/// any record undercuts its lower bound (none should).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusSweep {
    pub records: Vec<CensusRecord>,
    pub units: Vec<u64>,
    pub bound_violations: Vec<u64>,
}

/// Divisor lower bound on the image count: `tau(n+1)/2`, rounded up
/// when `n+1` is a perfect square.
pub fn pre2_lower_bound(n: u64) -> Result<u64, Error> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    let t = tau(n + 1)?;
    if is_perfect_square(n + 1) {
        Ok(t.div_ceil(2))
    } else {
        Ok(t / 2)
    }
}

/// One witness per factorization `n+1 = (a+1)(b+1)` with `a >= b`: for
/// `b >= 1` the preimage `(a, b, 1)` with image `(ab, a, b)`; for the
/// `b = 0` factorization the preimage `(n, 1)` with image `(n)`.
/// Ordered by ascending smaller divisor, so the `(n, 1)` witness leads.
pub fn divisor_witnesses(n: u64) -> Result<Vec<(Partition, Partition)>, Error> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    let mut witnesses = Vec::new();
    for (small, large) in divisor_pairs(n + 1)? {
        let (a, b) = (large - 1, small - 1);
        if b == 0 {
            witnesses.push((
                Partition::from_sorted_u64(&[n, 1]),
                Partition::from_sorted_u64(&[n]),
            ));
        } else {
            let preimage = Partition::from_u64([a, b, 1])?;
            let image = Partition::from_u64([a * b, a, b])?;
            witnesses.push((preimage, image));
        }
    }
    Ok(witnesses)
}

/// Finds every distinct `pre_2` image of weight `n`, paired with the
/// first preimage the search encounters for it. Pairs are sorted by
/// image, largest first.
pub fn pre2_witness_search(n: u64) -> Result<Vec<(Partition, Partition)>, Error> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    let mut found: Vec<(Partition, Partition)> = Vec::new();
    let mut seen: HashSet<ImageKey> = HashSet::new();
    let mut parts: Vec<u64> = Vec::with_capacity(16);
    for first in (1..=n).rev() {
        parts.push(first);
        extend_preimage(n, &mut parts, first, 0, &mut seen, &mut found);
        parts.pop();
    }
    found.sort_unstable_by(|a, b| b.1.cmp(&a.1));
    Ok(found)
}

/// Depth-first extension of a weakly decreasing prefix. `sum` and `e2`
/// carry the prefix weight and pairwise-product sum; appending `x` turns
/// `e2` into `e2 + x * sum`, which caps `x` at `(n - e2) / sum`.
fn extend_preimage(
    n: u64,
    parts: &mut Vec<u64>,
    sum: u64,
    e2: u64,
    seen: &mut HashSet<ImageKey>,
    found: &mut Vec<(Partition, Partition)>,
) {
    if e2 == n && parts.len() >= 2 {
        let preimage = Partition::from_sorted_u64(parts);
        let image = pre_k(&preimage, 2).expect("k = 2 is valid").image;
        if seen.insert(ImageKey::of(&image)) {
            found.push((preimage, image));
        }
        return; // any further part would push e2 past n
    }
    let cap = (n - e2) / sum;
    let largest_next = parts.last().copied().unwrap_or(u64::MAX).min(cap);
    for x in (1..=largest_next).rev() {
        parts.push(x);
        extend_preimage(n, parts, sum + x, e2 + x * sum, seen, found);
        parts.pop();
    }
}

/// Exact census for one `n`.
pub fn pre2_exact(n: u64) -> Result<CensusRecord, Error> {
    let witnesses = pre2_witness_search(n)?;
    let images: Vec<Partition> = witnesses.iter().map(|(_, image)| image.clone()).collect();
    Ok(CensusRecord {
        n,
        exact_count: images.len() as u64,
        lower_bound: pre2_lower_bound(n)?,
        images,
        divisor_witnesses: divisor_witnesses(n)?,
    })
}

/// Exact census for every `n` up to `n_max`, fanned out across worker
/// threads and merged back in ascending order.
pub fn pre2_sweep(n_max: u64) -> Result<CensusSweep, Error> {
    if n_max == 0 {
        return Err(Error::ZeroN);
    }
    let records: Vec<CensusRecord> = (1..=n_max)
        .into_par_iter()
        .map(pre2_exact)
        .collect::<Result<_, _>>()?;
    let units = records
        .iter()
        .filter(|r| r.exact_count == 1)
        .map(|r| r.n)
        .collect();
    let bound_violations = records
        .iter()
        .filter(|r| r.exact_count < r.lower_bound)
        .map(|r| r.n)
        .collect();
    Ok(CensusSweep {
        records,
        units,
        bound_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(values: &[u64]) -> Partition {
        Partition::from_u64(values.iter().copied()).unwrap()
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(pre2_lower_bound(23), Ok(4)); // tau(24) = 8
        assert_eq!(pre2_lower_bound(35), Ok(5)); // tau(36) = 9, square
        assert_eq!(pre2_lower_bound(1), Ok(1));
        assert_eq!(pre2_lower_bound(0), Err(Error::ZeroN));
    }

    #[test]
    fn divisor_witnesses_for_23() {
        let witnesses = divisor_witnesses(23).unwrap();
        let expected = [
            (part(&[23, 1]), part(&[23])),
            (part(&[11, 1, 1]), part(&[11, 11, 1])),
            (part(&[7, 2, 1]), part(&[14, 7, 2])),
            (part(&[5, 3, 1]), part(&[15, 5, 3])),
        ];
        assert_eq!(witnesses, expected);
    }

    #[test]
    fn divisor_witnesses_for_prime_successor_and_square() {
        assert_eq!(
            divisor_witnesses(1).unwrap(),
            vec![(part(&[1, 1]), part(&[1]))]
        );
        // 9 = 9*1 = 3*3; the square factorization gives a = b = 2.
        assert_eq!(
            divisor_witnesses(8).unwrap(),
            vec![
                (part(&[8, 1]), part(&[8])),
                (part(&[2, 2, 1]), part(&[4, 2, 2])),
            ]
        );
        assert_eq!(divisor_witnesses(0), Err(Error::ZeroN));
    }

    #[test]
    fn exact_census_tiny_cases() {
        let one = pre2_exact(1).unwrap();
        assert_eq!(one.exact_count, 1);
        assert_eq!(one.images, vec![part(&[1])]);

        let two = pre2_exact(2).unwrap();
        assert_eq!(two.exact_count, 1);
        assert_eq!(two.images, vec![part(&[2])]);

        let four = pre2_exact(4).unwrap();
        assert_eq!(four.exact_count, 1);
        assert_eq!(four.images, vec![part(&[4])]);
    }

    #[test]
    fn exact_census_of_8() {
        let record = pre2_exact(8).unwrap();
        assert_eq!(record.exact_count, 2);
        assert_eq!(record.images, vec![part(&[8]), part(&[4, 2, 2])]);
    }

    #[test]
    fn exact_census_of_23() {
        let record = pre2_exact(23).unwrap();
        assert_eq!(record.exact_count, 5);
        assert_eq!(
            record.images,
            vec![
                part(&[23]),
                part(&[15, 5, 3]),
                part(&[14, 7, 2]),
                part(&[11, 11, 1]),
                part(&[6, 6, 4, 3, 2, 2]),
            ]
        );
        assert_eq!(record.lower_bound, 4);
        for (_, image) in &record.divisor_witnesses {
            assert!(record.images.contains(image));
        }
    }

    #[test]
    fn exact_census_of_35_meets_square_bound() {
        let record = pre2_exact(35).unwrap();
        assert_eq!(record.exact_count, 8);
        assert_eq!(record.lower_bound, 5);
        for (_, image) in &record.divisor_witnesses {
            assert!(record.images.contains(image));
        }
    }

    #[test]
    fn witness_search_preimages_map_to_their_images() {
        for (preimage, image) in pre2_witness_search(30).unwrap() {
            assert_eq!(pre_k(&preimage, 2).unwrap().image, image);
            assert_eq!(image.weight(), 30u32.into());
            assert!(preimage.len() >= 2);
        }
    }

    #[test]
    fn sweep_collects_units_and_checks_bounds() {
        let sweep = pre2_sweep(23).unwrap();
        assert_eq!(sweep.records.len(), 23);
        assert_eq!(sweep.units, vec![1, 2, 4]);
        assert!(sweep.bound_violations.is_empty());
        assert_eq!(sweep.records[22].exact_count, 5);
        assert_eq!(pre2_sweep(0), Err(Error::ZeroN));
    }
}
