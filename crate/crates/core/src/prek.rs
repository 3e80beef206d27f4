//! The `pre_k` maps: elementary symmetric products of partition parts.
//!
//! For a partition with parts `p_1 >= ... >= p_l`, `pre_k` collects the
//! products over all `C(l, k)` index subsets of size `k` into a new
//! canonical partition. Repeated part values still contribute one product
//! per index subset, so `pre_2(7, 4, 4) = (28, 28, 16)`. When `l < k` the
//! image is the empty partition, and `pre_1` is the identity.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;
use crate::partition::Partition;

/// Image of a partition under `pre_k`, together with the source shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrekResult {
    pub image: Partition,
    pub source_length: usize,
    pub k: usize,
}

impl PrekResult {
    /// Part count the image must have: `C(source_length, k)` when the
    /// source has at least `k` parts, 0 otherwise.
    pub fn expected_image_len(&self) -> u128 {
        if self.source_length < self.k {
            0
        } else {
            binomial(self.source_length as u64, self.k as u64)
        }
    }
}

/// Applies `pre_k`. All `C(l, k)` subset products are materialized and
/// canonicalized; rejects `k = 0`.
pub fn pre_k(lambda: &Partition, k: usize) -> Result<PrekResult, Error> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let parts = lambda.parts();
    let image = if parts.len() < k {
        Partition::empty()
    } else {
        let mut products = Vec::new();
        subset_products(parts, k, 0, &BigUint::one(), &mut products);
        products.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(products)
    };
    Ok(PrekResult {
        image,
        source_length: parts.len(),
        k,
    })
}

fn subset_products(
    parts: &[BigUint],
    needed: usize,
    start: usize,
    prefix: &BigUint,
    out: &mut Vec<BigUint>,
) {
    if needed == 0 {
        out.push(prefix.clone());
        return;
    }
    for i in start..=parts.len() - needed {
        let extended = prefix * &parts[i];
        subset_products(parts, needed - 1, i + 1, &extended, out);
    }
}

/// Product of all parts; the empty product is 1.
pub fn product_of_parts(lambda: &Partition) -> BigUint {
    lambda.parts().iter().product()
}

/// Weight of the `pre_2` image, evaluated via
/// `e_2 = ((sum p_i)^2 - sum p_i^2) / 2` instead of materializing the
/// image. 0 when the partition has fewer than two parts.
pub fn e2_sum(lambda: &Partition) -> BigUint {
    let weight = lambda.weight();
    let square_sum: BigUint = lambda.parts().iter().map(|p| p * p).sum();
    (&weight * &weight - square_sum) >> 1
}

/// Canonical partition of `{ P / x : x part of pre_k(lambda) }` where `P`
/// is the product of all parts. Each quotient is the product of the
/// complementary `l - k` parts, so the result equals the `pre_{l-k}`
/// image; `duality_check` and the complement-law tests pin that down.
pub fn complement_image(lambda: &Partition, k: usize) -> Result<Partition, Error> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if k >= lambda.len() {
        return Err(Error::ComplementOutOfRange {
            k,
            length: lambda.len(),
        });
    }
    let total = product_of_parts(lambda);
    let image = pre_k(lambda, k)?.image;
    let quotients = image.parts().iter().map(|x| &total / x);
    Partition::new(quotients)
}

/// Binomial coefficient in `u128`, wide enough for every partition
/// length this library enumerates.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    num_integer::binomial(n as u128, k as u128)
}
