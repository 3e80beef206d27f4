//! Divisor-counting and factorization helpers, all by trial division.
//! Inputs here are desk-scale, so nothing fancier is warranted.

use crate::error::Error;

/// Number of positive divisors of `n`.
pub fn tau(n: u64) -> Result<u64, Error> {
    Ok(divisor_pairs(n)?
        .iter()
        .map(|&(d, dp)| if d == dp { 1 } else { 2 })
        .sum())
}

/// All unordered factorizations `d * d' = n` with `d <= d'`, ascending in
/// `d`. There are exactly `ceil(tau(n) / 2)` of them.
pub fn divisor_pairs(n: u64) -> Result<Vec<(u64, u64)>, Error> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    let mut pairs = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            pairs.push((d, n / d));
        }
        d += 1;
    }
    Ok(pairs)
}

pub fn is_perfect_square(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}

/// Trial-division primality check.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_of_one_is_one() {
        assert_eq!(tau(1).unwrap(), 1);
    }

    #[test]
    fn tau_of_24_is_8() {
        assert_eq!(tau(24).unwrap(), 8);
    }

    #[test]
    fn tau_of_36_is_odd_square_witness() {
        assert_eq!(tau(36).unwrap(), 9);
        assert!(is_perfect_square(36));
    }

    #[test]
    fn tau_rejects_zero() {
        assert_eq!(tau(0), Err(Error::ZeroN));
        assert_eq!(divisor_pairs(0).unwrap_err(), Error::ZeroN);
    }

    #[test]
    fn divisor_pairs_of_24() {
        assert_eq!(
            divisor_pairs(24).unwrap(),
            vec![(1, 24), (2, 12), (3, 8), (4, 6)]
        );
    }

    #[test]
    fn divisor_pairs_of_one() {
        assert_eq!(divisor_pairs(1).unwrap(), vec![(1, 1)]);
    }

    #[test]
    fn divisor_pairs_of_36_ends_at_square_root() {
        let pairs = divisor_pairs(36).unwrap();
        assert_eq!(pairs.len(), 5);
        assert_eq!(*pairs.last().unwrap(), (6, 6));
    }

    #[test]
    fn divisor_pair_count_matches_tau() {
        for n in 1..500 {
            let t = tau(n).unwrap();
            let pairs = divisor_pairs(n).unwrap();
            assert_eq!(pairs.len() as u64, t.div_ceil(2), "n={n}");
        }
    }

    #[test]
    fn primality_small_values() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
