//! Resumable injectivity sweeps over a range of `n`.
//!
//! Each `(n, k, length_filter)` unit is pure and independent, so the
//! sweep fans missing units out to worker threads and merges results in
//! ascending `n`. A cache file — one JSON document per line, append-only
//! — makes interrupted sweeps cheap to resume: a line that fails to
//! parse, fails validation, or belongs to a different key is counted as
//! corrupt and its `n` simply recomputed.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::collision::{find_collisions, LengthFilter};
use crate::error::{CacheError, Error};
use crate::report::InjectivityReportDoc;

/// Append-only record store for one `(k, length_filter)` slice.
pub struct SweepCache {
    path: PathBuf,
}

impl SweepCache {
    /// The cache file under `dir` for this slice, e.g.
    /// `sweep-k3-len-3.jsonl` or `sweep-k2-len-all.jsonl`.
    pub fn for_params(dir: &Path, k: usize, length_filter: LengthFilter) -> Self {
        SweepCache {
            path: dir.join(format!("sweep-k{k}-len-{length_filter}.jsonl")),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Reads back usable records for the given key. Returns the records
    /// by `n` (later duplicates win) and the number of corrupt lines.
    /// A missing file is an empty cache, not an error.
    pub fn load(
        &self,
        k: usize,
        length_filter: LengthFilter,
    ) -> Result<(HashMap<u64, InjectivityReportDoc>, u64), Error> {
        let text = match fs::read_to_string(&self.path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => String::new(),
            Err(e) => return Err(self.io_error(e).into()),
        };
        let mut records = HashMap::new();
        let mut corrupt = 0u64;
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            let usable = serde_json::from_str::<InjectivityReportDoc>(line)
                .ok()
                .filter(|doc| doc.validate().is_ok())
                .filter(|doc| doc.k == k && doc.length_filter == length_filter);
            match usable {
                Some(doc) => {
                    records.insert(doc.n, doc);
                }
                None => corrupt += 1,
            }
        }
        Ok((records, corrupt))
    }

    /// Appends records, one JSON line each, creating the file (and its
    /// directory) on first use.
    pub fn append(&self, docs: &[InjectivityReportDoc]) -> Result<(), Error> {
        if docs.is_empty() {
            return Ok(());
        }
        if let Some(parent) = self.path.parent() {
            fs::create_dir_all(parent).map_err(|e| self.io_error(e))?;
        }
        let mut file = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| self.io_error(e))?;
        let mut buffer = String::new();
        for doc in docs {
            buffer.push_str(&serde_json::to_string(doc).map_err(CacheError::Encode)?);
            buffer.push('\n');
        }
        file.write_all(buffer.as_bytes())
            .map_err(|e| self.io_error(e))?;
        Ok(())
    }

    fn io_error(&self, source: std::io::Error) -> CacheError {
        CacheError::Io {
            path: self.path.display().to_string(),
            source,
        }
    }
}

/// What a sweep did and found: one report document per `n`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOutcome {
    pub docs: Vec<InjectivityReportDoc>,
    pub computed: u64,
    pub from_cache: u64,
    pub corrupt_lines: u64,
}

impl SweepOutcome {
    /// The `n` values in the swept range whose map was injective.
    pub fn injective_ns(&self) -> Vec<u64> {
        self.docs
            .iter()
            .filter(|d| d.injective)
            .map(|d| d.n)
            .collect()
    }
}

/// Runs `find_collisions` for every `n` in `[n_from, n_to]`, reusing
/// cached records when a cache is supplied and appending newly computed
/// ones (a single writer, in ascending `n`).
pub fn sweep(
    n_from: u64,
    n_to: u64,
    k: usize,
    length_filter: LengthFilter,
    cache: Option<&SweepCache>,
) -> Result<SweepOutcome, Error> {
    if n_from > n_to {
        return Err(Error::EmptyRange {
            from: n_from,
            to: n_to,
        });
    }
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if length_filter == LengthFilter::Exactly(0) {
        return Err(Error::ZeroLengthFilter);
    }

    let (mut records, corrupt_lines) = match cache {
        Some(cache) => cache.load(k, length_filter)?,
        None => (HashMap::new(), 0),
    };

    let missing: Vec<u64> = (n_from..=n_to)
        .filter(|n| !records.contains_key(n))
        .collect();
    let fresh: Vec<InjectivityReportDoc> = missing
        .par_iter()
        .map(|&n| {
            find_collisions(n, k, length_filter).map(|r| InjectivityReportDoc::from_report(&r))
        })
        .collect::<Result<_, _>>()?;
    if let Some(cache) = cache {
        cache.append(&fresh)?;
    }

    let computed = fresh.len() as u64;
    let total = n_to - n_from + 1;
    for doc in fresh {
        records.insert(doc.n, doc);
    }
    let docs = (n_from..=n_to)
        .map(|n| records.remove(&n).expect("every n was cached or computed"))
        .collect();
    Ok(SweepOutcome {
        docs,
        computed,
        from_cache: total - computed,
        corrupt_lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::SCHEMA_VERSION;

    #[test]
    fn single_n_sweep_matches_direct_computation() {
        let outcome = sweep(13, 13, 3, LengthFilter::Exactly(3), None).unwrap();
        let direct = InjectivityReportDoc::from_report(
            &find_collisions(13, 3, LengthFilter::Exactly(3)).unwrap(),
        );
        assert_eq!(outcome.docs, vec![direct]);
        assert_eq!(outcome.computed, 1);
        assert_eq!(outcome.from_cache, 0);
    }

    #[test]
    fn sweep_reports_every_n_in_ascending_order() {
        let outcome = sweep(3, 20, 3, LengthFilter::Exactly(3), None).unwrap();
        let ns: Vec<u64> = outcome.docs.iter().map(|d| d.n).collect();
        assert_eq!(ns, (3..=20).collect::<Vec<u64>>());
        assert_eq!(
            outcome.injective_ns(),
            vec![3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 18]
        );
    }

    #[test]
    fn sweep_rejects_bad_ranges_and_parameters() {
        assert_eq!(
            sweep(5, 4, 3, LengthFilter::All, None),
            Err(Error::EmptyRange { from: 5, to: 4 })
        );
        assert_eq!(sweep(1, 2, 0, LengthFilter::All, None), Err(Error::ZeroK));
    }

    #[test]
    fn cached_records_are_reused_and_extended() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SweepCache::for_params(dir.path(), 3, LengthFilter::Exactly(3));

        let cold = sweep(13, 14, 3, LengthFilter::Exactly(3), Some(&cache)).unwrap();
        assert_eq!(cold.computed, 2);
        assert_eq!(cold.from_cache, 0);

        let warm = sweep(13, 16, 3, LengthFilter::Exactly(3), Some(&cache)).unwrap();
        assert_eq!(warm.from_cache, 2);
        assert_eq!(warm.computed, 2);
        assert_eq!(warm.docs[..2], cold.docs[..]);

        let fresh = sweep(13, 16, 3, LengthFilter::Exactly(3), None).unwrap();
        assert_eq!(warm.docs, fresh.docs);

        let lines = fs::read_to_string(cache.path()).unwrap();
        assert_eq!(lines.lines().count(), 4);
    }

    #[test]
    fn corrupt_lines_are_counted_and_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SweepCache::for_params(dir.path(), 3, LengthFilter::Exactly(3));
        sweep(13, 13, 3, LengthFilter::Exactly(3), Some(&cache)).unwrap();

        let mut tampered = fs::read_to_string(cache.path()).unwrap();
        tampered.push_str("not json at all\n");
        tampered.push_str("{\"schema_version\":999}\n");
        fs::write(cache.path(), tampered).unwrap();

        let outcome = sweep(13, 14, 3, LengthFilter::Exactly(3), Some(&cache)).unwrap();
        assert_eq!(outcome.corrupt_lines, 2);
        assert_eq!(outcome.from_cache, 1);
        assert_eq!(outcome.computed, 1);
        let direct = sweep(13, 14, 3, LengthFilter::Exactly(3), None).unwrap();
        assert_eq!(outcome.docs, direct.docs);
    }

    #[test]
    fn records_from_other_keys_do_not_leak_in() {
        let dir = tempfile::tempdir().unwrap();
        let cache_k3 = SweepCache::for_params(dir.path(), 3, LengthFilter::Exactly(3));
        sweep(13, 13, 3, LengthFilter::Exactly(3), Some(&cache_k3)).unwrap();

        // Same file probed with a different key: the record must not match.
        let (records, corrupt) = cache_k3.load(2, LengthFilter::Exactly(3)).unwrap();
        assert!(records.is_empty());
        assert_eq!(corrupt, 1);
    }

    #[test]
    fn schema_version_gates_cache_reuse() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SweepCache::for_params(dir.path(), 3, LengthFilter::Exactly(3));
        sweep(13, 13, 3, LengthFilter::Exactly(3), Some(&cache)).unwrap();

        let line = fs::read_to_string(cache.path()).unwrap();
        let stale = line.replace(
            &format!("\"schema_version\":{SCHEMA_VERSION}"),
            "\"schema_version\":0",
        );
        assert_ne!(line, stale, "version field should be present to rewrite");
        fs::write(cache.path(), stale).unwrap();

        let outcome = sweep(13, 13, 3, LengthFilter::Exactly(3), Some(&cache)).unwrap();
        assert_eq!(outcome.corrupt_lines, 1);
        assert_eq!(outcome.computed, 1);
    }

    #[test]
    fn duplicate_cache_lines_resolve_to_one_record() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SweepCache::for_params(dir.path(), 3, LengthFilter::Exactly(3));
        let doc = InjectivityReportDoc::from_report(
            &find_collisions(13, 3, LengthFilter::Exactly(3)).unwrap(),
        );
        cache.append(&[doc.clone(), doc.clone()]).unwrap();

        let outcome = sweep(13, 13, 3, LengthFilter::Exactly(3), Some(&cache)).unwrap();
        assert_eq!(outcome.docs, vec![doc]);
        assert_eq!(outcome.from_cache, 1);
        assert_eq!(outcome.computed, 0);
    }
}
