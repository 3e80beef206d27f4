//! Collision detection for `pre_k`.
//!
//! A collision class is a set of two or more distinct partitions sharing
//! one `pre_k` image; finding one proves the map is not injective on the
//! searched set. Detection groups partitions by an exact canonical byte
//! key of the image — no probabilistic hashing — so a reported class is
//! a checked fact, not a likely one.

use std::collections::HashMap;
use std::fmt;

use crate::error::Error;
use crate::partition::{enumerate_partitions, enumerate_partitions_with_length, Partition};
use crate::prek::pre_k;

/// Canonical byte encoding of a partition, used as an exact hash key.
///
/// Layout: part count as a big-endian `u32`, then each part as a
/// big-endian `u32` byte count followed by the part's big-endian
/// magnitude. Two partitions have equal keys iff they are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ImageKey(Vec<u8>);

impl ImageKey {
    pub fn of(partition: &Partition) -> Self {
        let parts = partition.parts();
        let mut bytes = Vec::with_capacity(4 + parts.len() * 8);
        bytes.extend_from_slice(&(parts.len() as u32).to_be_bytes());
        for part in parts {
            let magnitude = part.to_bytes_be();
            bytes.extend_from_slice(&(magnitude.len() as u32).to_be_bytes());
            bytes.extend_from_slice(&magnitude);
        }
        ImageKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Which partitions of `n` a search covers: every length, or one length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LengthFilter {
    All,
    Exactly(usize),
}

impl LengthFilter {
    pub fn admits(&self, length: usize) -> bool {
        match self {
            LengthFilter::All => true,
            LengthFilter::Exactly(l) => length == *l,
        }
    }
}

impl fmt::Display for LengthFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthFilter::All => write!(f, "all"),
            LengthFilter::Exactly(l) => write!(f, "{l}"),
        }
    }
}

/// Two or more distinct partitions with the same `pre_k` image. All
/// preimages share one weight and one length (a consequence of the image
/// weight and part-count laws), in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionClass {
    pub image: Partition,
    pub preimages: Vec<Partition>,
}

/// Outcome of an exhaustive injectivity search over partitions of `n`.
///
/// `degenerate_count` tallies partitions with fewer than `k` parts: they
/// all map to the empty image, which is not treated as a shared value,
/// so they never form a collision class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectivityReport {
    pub n: u64,
    pub k: usize,
    pub length_filter: LengthFilter,
    pub partitions_examined: u64,
    pub degenerate_count: u64,
    pub classes: Vec<CollisionClass>,
}

impl InjectivityReport {
    pub fn injective(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Groups a stream of same-weight partitions by their `pre_k` image key.
/// List order inside each group is stream order.
pub fn group_by_image<I>(
    partitions: I,
    k: usize,
) -> Result<HashMap<ImageKey, Vec<Partition>>, Error>
where
    I: IntoIterator<Item = Partition>,
{
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let mut groups: HashMap<ImageKey, Vec<Partition>> = HashMap::new();
    for lambda in partitions {
        let image = pre_k(&lambda, k)?.image;
        groups.entry(ImageKey::of(&image)).or_default().push(lambda);
    }
    Ok(groups)
}

/// Exhaustively searches the partitions of `n` selected by
/// `length_filter` for `pre_k` collisions. Classes are sorted by image,
/// largest first, so identical inputs always yield identical reports;
/// preimages within a class keep enumeration order.
pub fn find_collisions(
    n: u64,
    k: usize,
    length_filter: LengthFilter,
) -> Result<InjectivityReport, Error> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if length_filter == LengthFilter::Exactly(0) {
        return Err(Error::ZeroLengthFilter);
    }

    let mut examined = 0u64;
    let mut degenerate = 0u64;
    let mut groups: HashMap<ImageKey, (Partition, Vec<Partition>)> = HashMap::new();
    let mut feed = |lambda: Partition| {
        examined += 1;
        if lambda.len() < k {
            degenerate += 1;
            return;
        }
        let image = pre_k(&lambda, k).expect("k >= 1 was checked").image;
        groups
            .entry(ImageKey::of(&image))
            .or_insert_with(|| (image, Vec::new()))
            .1
            .push(lambda);
    };
    match length_filter {
        LengthFilter::All => enumerate_partitions(n).for_each(&mut feed),
        LengthFilter::Exactly(l) => enumerate_partitions_with_length(n, l).for_each(&mut feed),
    }

    let mut classes: Vec<CollisionClass> = groups
        .into_values()
        .filter(|(_, members)| members.len() >= 2)
        .map(|(image, preimages)| CollisionClass { image, preimages })
        .collect();
    classes.sort_unstable_by(|a, b| b.image.cmp(&a.image));

    Ok(InjectivityReport {
        n,
        k,
        length_filter,
        partitions_examined: examined,
        degenerate_count: degenerate,
        classes,
    })
}

/// An image shared across partitions of different lengths — impossible
/// for `pre_k` because the image part count `C(l, k)` pins down `l`, so
/// any instance found would be a bug or a genuinely new phenomenon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossLengthViolation {
    pub image: Partition,
    pub preimages: Vec<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossLengthReport {
    pub n: u64,
    pub k: usize,
    pub partitions_examined: u64,
    pub violations: Vec<CrossLengthViolation>,
}

impl CrossLengthReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that no two partitions of `n` with different lengths (both at
/// least `k`) share a `pre_k` image.
pub fn cross_length_check(n: u64, k: usize) -> Result<CrossLengthReport, Error> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let mut examined = 0u64;
    let mut groups: HashMap<ImageKey, (Partition, Vec<Partition>)> = HashMap::new();
    for lambda in enumerate_partitions(n) {
        examined += 1;
        if lambda.len() < k {
            continue;
        }
        let image = pre_k(&lambda, k)?.image;
        groups
            .entry(ImageKey::of(&image))
            .or_insert_with(|| (image, Vec::new()))
            .1
            .push(lambda);
    }
    let mut violations: Vec<CrossLengthViolation> = groups
        .into_values()
        .filter(|(_, members)| members.iter().any(|m| m.len() != members[0].len()))
        .map(|(image, preimages)| CrossLengthViolation { image, preimages })
        .collect();
    violations.sort_unstable_by(|a, b| b.image.cmp(&a.image));
    Ok(CrossLengthReport {
        n,
        k,
        partitions_examined: examined,
        violations,
    })
}

/// A pair of equal-length partitions whose images agree under one of the
/// two complementary maps but not the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityViolation {
    pub first: Partition,
    pub second: Partition,
    pub matching_k: usize,
    pub differing_k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub n: u64,
    pub l: usize,
    pub k: usize,
    pub partitions_examined: u64,
    pub violations: Vec<DualityViolation>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, over all `l`-part partitions of `n`, that `pre_k` images
/// agree exactly when `pre_{l-k}` images agree. Equivalently: the two
/// maps induce the same equivalence relation, so either both are
/// injective on this set or both fail on the same pairs.
pub fn duality_check(n: u64, l: usize, k: usize) -> Result<DualityReport, Error> {
    if k == 0 || k >= l {
        return Err(Error::DualityOutOfRange { k, l });
    }
    let partitions: Vec<Partition> = enumerate_partitions_with_length(n, l).collect();
    let co_k = l - k;
    let reps_k = class_representatives(&partitions, k)?;
    let reps_co = class_representatives(&partitions, co_k)?;

    // The relations coincide iff every partition has the same first-seen
    // representative under both groupings.
    let mut violations = Vec::new();
    if reps_k != reps_co {
        if let Some(witness) = witness_pair(&partitions, &reps_k, &reps_co, k, co_k) {
            violations.push(witness);
        }
    }
    Ok(DualityReport {
        n,
        l,
        k,
        partitions_examined: partitions.len() as u64,
        violations,
    })
}

/// Index of the first partition sharing each partition's `pre_k` image.
fn class_representatives(partitions: &[Partition], k: usize) -> Result<Vec<usize>, Error> {
    let mut first_seen: HashMap<ImageKey, usize> = HashMap::new();
    let mut reps = Vec::with_capacity(partitions.len());
    for (i, lambda) in partitions.iter().enumerate() {
        let key = ImageKey::of(&pre_k(lambda, k)?.image);
        reps.push(*first_seen.entry(key).or_insert(i));
    }
    Ok(reps)
}

/// Digs a concrete offending pair out of mismatched representative
/// arrays. Quadratic, but only runs after a violation is already known.
fn witness_pair(
    partitions: &[Partition],
    reps_k: &[usize],
    reps_co: &[usize],
    k: usize,
    co_k: usize,
) -> Option<DualityViolation> {
    for i in 0..partitions.len() {
        for j in (i + 1)..partitions.len() {
            let same_k = reps_k[i] == reps_k[j];
            let same_co = reps_co[i] == reps_co[j];
            if same_k != same_co {
                let (matching_k, differing_k) = if same_k { (k, co_k) } else { (co_k, k) };
                return Some(DualityViolation {
                    first: partitions[i].clone(),
                    second: partitions[j].clone(),
                    matching_k,
                    differing_k,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(values: &[u64]) -> Partition {
        Partition::from_u64(values.iter().copied()).unwrap()
    }

    #[test]
    fn image_key_separates_unequal_partitions() {
        let pairs = [
            (part(&[6, 6, 1]), part(&[9, 2, 2])),
            (part(&[256]), part(&[255, 1])),
            (part(&[1, 1]), part(&[2])),
        ];
        for (a, b) in &pairs {
            assert_ne!(ImageKey::of(a), ImageKey::of(b), "{a} vs {b}");
        }
        assert_eq!(
            ImageKey::of(&part(&[6, 6, 1])),
            ImageKey::of(&part(&[6, 6, 1]))
        );
        assert_ne!(ImageKey::of(&Partition::empty()), ImageKey::of(&part(&[1])));
    }

    #[test]
    fn grouping_finds_the_36_class_among_three_part_13s() {
        let groups = group_by_image(enumerate_partitions_with_length(13, 3), 3).unwrap();
        let class = &groups[&ImageKey::of(&part(&[36]))];
        assert_eq!(class.len(), 2);
        assert!(class.contains(&part(&[6, 6, 1])));
        assert!(class.contains(&part(&[9, 2, 2])));
    }

    #[test]
    fn grouping_all_of_10_under_pre2_gives_singletons() {
        let groups = group_by_image(enumerate_partitions(10).filter(|p| p.len() >= 2), 2).unwrap();
        assert!(groups.values().all(|members| members.len() == 1));
    }

    #[test]
    fn grouping_single_partition_is_a_singleton_group() {
        let groups = group_by_image([part(&[4, 2])], 2).unwrap();
        assert_eq!(groups.len(), 1);
        assert_eq!(groups.values().next().unwrap().len(), 1);
    }

    #[test]
    fn thirteen_three_three_has_exactly_the_known_class() {
        let report = find_collisions(13, 3, LengthFilter::Exactly(3)).unwrap();
        assert!(!report.injective());
        assert_eq!(report.partitions_examined, 14);
        assert_eq!(report.degenerate_count, 0);
        assert_eq!(report.classes.len(), 1);
        let class = &report.classes[0];
        assert_eq!(class.image, part(&[36]));
        assert_eq!(class.preimages.len(), 2);
        assert!(class.preimages.contains(&part(&[6, 6, 1])));
        assert!(class.preimages.contains(&part(&[9, 2, 2])));
    }

    #[test]
    fn fourteen_four_four_contains_the_padded_class() {
        let report = find_collisions(14, 4, LengthFilter::Exactly(4)).unwrap();
        let class = report
            .classes
            .iter()
            .find(|c| c.image == part(&[36]))
            .expect("image (36) should collide");
        assert!(class.preimages.contains(&part(&[6, 6, 1, 1])));
        assert!(class.preimages.contains(&part(&[9, 2, 2, 1])));
    }

    #[test]
    fn pre2_on_all_partitions_of_23_is_injective() {
        let report = find_collisions(23, 2, LengthFilter::All).unwrap();
        assert!(report.injective());
        assert_eq!(report.partitions_examined, 1255);
        assert_eq!(report.degenerate_count, 1);
    }

    #[test]
    fn degenerate_tally_counts_partitions_shorter_than_k() {
        let report = find_collisions(6, 3, LengthFilter::All).unwrap();
        // (6), (5,1), (4,2), (3,3) have fewer than three parts.
        assert_eq!(report.degenerate_count, 4);
        let zero = find_collisions(0, 2, LengthFilter::All).unwrap();
        assert_eq!(zero.partitions_examined, 1);
        assert_eq!(zero.degenerate_count, 1);
        assert!(zero.injective());
    }

    #[test]
    fn length_filter_longer_than_n_matches_nothing() {
        let report = find_collisions(3, 2, LengthFilter::Exactly(5)).unwrap();
        assert_eq!(report.partitions_examined, 0);
        assert!(report.injective());
    }

    #[test]
    fn find_collisions_rejects_bad_parameters() {
        assert_eq!(find_collisions(5, 0, LengthFilter::All), Err(Error::ZeroK));
        assert_eq!(
            find_collisions(5, 2, LengthFilter::Exactly(0)),
            Err(Error::ZeroLengthFilter)
        );
    }

    #[test]
    fn cross_length_examples_pass() {
        assert!(cross_length_check(13, 3).unwrap().passed());
        assert!(cross_length_check(10, 2).unwrap().passed());
        let vacuous = cross_length_check(0, 2).unwrap();
        assert!(vacuous.passed());
        assert_eq!(vacuous.partitions_examined, 1);
    }

    #[test]
    fn duality_examples_pass() {
        let r = duality_check(13, 3, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.partitions_examined, 14);
        assert!(duality_check(20, 5, 2).unwrap().passed());
        // k = l - k exercises the same map on both sides.
        assert!(duality_check(12, 4, 2).unwrap().passed());
    }

    #[test]
    fn duality_rejects_out_of_range_k() {
        assert_eq!(
            duality_check(10, 3, 3),
            Err(Error::DualityOutOfRange { k: 3, l: 3 })
        );
        assert_eq!(
            duality_check(10, 3, 0),
            Err(Error::DualityOutOfRange { k: 0, l: 3 })
        );
    }
}
