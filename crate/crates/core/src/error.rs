use thiserror::Error;

/// Errors produced by the library's fallible operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("partition parts must be positive, got 0")]
    ZeroPart,
    #[error("k must be at least 1")]
    ZeroK,
    #[error("length filter must be at least 1")]
    ZeroLengthFilter,
    #[error("n must be at least 1")]
    ZeroN,
    #[error("sweep range is empty: {from} > {to}")]
    EmptyRange { from: u64, to: u64 },
    #[error("complement requires 1 <= k < length, got k={k} for a partition with {length} parts")]
    ComplementOutOfRange { k: usize, length: usize },
    #[error("duality requires 1 <= k < l, got k={k}, l={l}")]
    DualityOutOfRange { k: usize, l: usize },
    #[error("family generator requires k >= 3, got {0}")]
    FamilyKTooSmall(usize),
    #[error("scaled family requires m >= 1")]
    ScaledMZero,
    #[error("coprime family requires m >= 3, got {0}")]
    CoprimeMTooSmall(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("pq family requires p > q, got p={p}, q={q}")]
    PrimesOutOfOrder { p: u64, q: u64 },
    #[error("pq family requires m >= ceil((p-1)/(q-1)) = {min}, got m={m}")]
    MTooSmall { m: u64, min: u64 },
    #[error("generated raw tuple is not weakly decreasing: {0}")]
    RawTupleUnsorted(String),
    #[error(transparent)]
    Cache(#[from] CacheError),
}

/// Failures around the resumable sweep cache. Parse-level corruption inside
/// the cache file is not an error: corrupt lines are counted and the affected
/// records recomputed.
#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache io error at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cache record serialization failed: {0}")]
    Encode(#[from] serde_json::Error),
}

impl PartialEq for CacheError {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (CacheError::Io { path: a, .. }, CacheError::Io { path: b, .. }) => a == b,
            (CacheError::Encode(a), CacheError::Encode(b)) => a.to_string() == b.to_string(),
            _ => false,
        }
    }
}

impl Eq for CacheError {}
