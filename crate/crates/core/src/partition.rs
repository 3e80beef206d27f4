//! Canonical integer partitions and enumeration streams.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive naturals.
//! Keeping every partition in canonical order makes multiset equality a
//! plain sequence comparison, which the collision machinery relies on.
//! Parts are arbitrary-precision ([`BigUint`]) because images under the
//! product maps grow multiplicatively.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;

/// A partition in canonical (weakly decreasing) form.
///
/// The empty partition is the unique partition of 0. Ordering is
/// lexicographic on the part sequence, so enumeration in reverse
/// lexicographic order means descending `Ord` order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<BigUint>,
}

impl Partition {
    /// Builds the canonical partition of a multiset of positive naturals.
    /// Rejects any zero value; the empty multiset gives the empty partition.
    pub fn new<I>(values: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = BigUint>,
    {
        let mut parts: Vec<BigUint> = values.into_iter().collect();
        if parts.iter().any(|p| p.is_zero()) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Convenience constructor from machine integers.
    pub fn from_u64<I>(values: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = u64>,
    {
        Self::new(values.into_iter().map(BigUint::from))
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Wraps parts that are already weakly decreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<BigUint>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|p| !p.is_zero()));
        Partition { parts }
    }

    pub(crate) fn from_sorted_u64(parts: &[u64]) -> Self {
        Self::from_sorted(parts.iter().map(|&p| BigUint::from(p)).collect())
    }

    pub fn parts(&self) -> &[BigUint] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of parts; 0 for the empty partition.
    pub fn weight(&self) -> BigUint {
        self.parts.iter().sum()
    }

    /// Gcd of all parts; 0 for the empty partition.
    pub fn parts_gcd(&self) -> BigUint {
        self.parts.iter().fold(BigUint::zero(), |acc, p| acc.gcd(p))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

// Debug delegates to Display; partitions read better as `(9, 2, 2)` than
// as a struct dump in test failures.
impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Yields every partition of `n` exactly once, in reverse lexicographic
/// order on part sequences: `(n)` first, `(1, 1, ..., 1)` last. `n = 0`
/// yields only the empty partition.
pub fn enumerate_partitions(n: u64) -> AllPartitions {
    AllPartitions {
        parts: if n == 0 { Vec::new() } else { vec![n] },
        done: false,
    }
}

/// Iterator over all partitions of a fixed weight in reverse lexicographic
/// order. Parts are tracked as `u64` and converted on yield.
pub struct AllPartitions {
    parts: Vec<u64>,
    done: bool,
}

impl Iterator for AllPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = Partition::from_sorted_u64(&self.parts);

        // Successor: decrement the rightmost part exceeding 1, then spread
        // the freed weight (that part's unit plus all trailing 1s) into the
        // largest chunks the new value allows.
        match self.parts.iter().rposition(|&p| p > 1) {
            None => self.done = true,
            Some(i) => {
                self.parts[i] -= 1;
                let cap = self.parts[i];
                let mut remaining = (self.parts.len() - i) as u64;
                self.parts.truncate(i + 1);
                while remaining > 0 {
                    let chunk = cap.min(remaining);
                    self.parts.push(chunk);
                    remaining -= chunk;
                }
            }
        }
        Some(current)
    }
}

/// Yields every partition of `n` with exactly `length` parts, in reverse
/// lexicographic order: `(n - length + 1, 1, ..., 1)` first. The stream is
/// empty when no such partition exists (`length > n`, or `n > 0` with
/// `length = 0`); `n = 0` with `length = 0` yields the empty partition.
pub fn enumerate_partitions_with_length(n: u64, length: usize) -> FixedLengthPartitions {
    let m = length as u64;
    if length == 0 {
        return FixedLengthPartitions {
            parts: Vec::new(),
            done: n != 0,
        };
    }
    if n < m {
        return FixedLengthPartitions {
            parts: Vec::new(),
            done: true,
        };
    }
    let mut parts = vec![1u64; length];
    parts[0] = n - m + 1;
    FixedLengthPartitions { parts, done: false }
}

/// Iterator over partitions of fixed weight and length (Knuth 7.2.1.4 H).
pub struct FixedLengthPartitions {
    parts: Vec<u64>,
    done: bool,
}

impl Iterator for FixedLengthPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = Partition::from_sorted_u64(&self.parts);
        self.advance();
        Some(current)
    }
}

impl FixedLengthPartitions {
    fn advance(&mut self) {
        let a = &mut self.parts;
        let m = a.len();
        if m < 2 {
            self.done = true;
            return;
        }
        if a[1] < a[0] - 1 {
            a[0] -= 1;
            a[1] += 1;
            return;
        }
        // Find the leftmost position after 1 that can absorb weight from
        // the head while keeping the sequence weakly decreasing.
        let mut j = 2;
        let mut s = a[0] + a[1] - 1;
        while j < m && a[j] >= a[0] - 1 {
            s += a[j];
            j += 1;
        }
        if j >= m {
            self.done = true;
            return;
        }
        let x = a[j] + 1;
        a[j] = x;
        let mut i = j - 1;
        while i > 0 {
            a[i] = x;
            s -= x;
            i -= 1;
        }
        a[0] = s;
    }
}
