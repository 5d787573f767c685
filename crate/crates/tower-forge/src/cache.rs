//! On-disk memo of Legendre point counts.
//!
//! The cache is one CSV file, `point-counts.csv`, in a directory the caller
//! names (typically via the `TOWER_FORGE_CACHE_DIR` environment variable).
//! Columns are `p,a_c0,a_c1,n` with a mandatory header row; rows only ever
//! get appended, and on duplicate keys the latest row wins.
//!
//! A cache is a claim, not a fact: [`count_with_cache`] can re-verify a hit
//! by recounting, and a disagreement surfaces as [`Error::CrossCheck`], the
//! same class of failure as any other violated invariant. A count that is
//! *arithmetically impossible* (outside the Weil bound, or not divisible by
//! 4) is caught later by [`LegendreCurve::weil_from_count`] even without
//! verification.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::field::QuadExtElem;
use crate::legendre::LegendreCurve;

/// Environment variable naming the cache directory.
pub const CACHE_ENV_VAR: &str = "TOWER_FORGE_CACHE_DIR";

/// File inside the cache directory that holds the counts.
pub const CACHE_FILE_NAME: &str = "point-counts.csv";

const HEADER: [&str; 4] = ["p", "a_c0", "a_c1", "n"];

/// How a cached lookup was satisfied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    /// No entry; the count was computed and recorded.
    Computed,
    /// Served from the cache as-is.
    Hit,
    /// Served from the cache and confirmed by a fresh recount.
    HitVerified,
}

impl CacheOutcome {
    pub fn describe(self) -> &'static str {
        match self {
            CacheOutcome::Computed => "computed and cached",
            CacheOutcome::Hit => "cache hit",
            CacheOutcome::HitVerified => "cache hit, verified by recount",
        }
    }
}

/// Handle to the CSV-backed count store. Cheap to construct; every
/// operation re-reads the file, which keeps concurrent appenders safe and
/// the code free of invalidation logic.
#[derive(Clone, Debug)]
pub struct PointCountCache {
    path: PathBuf,
}

impl PointCountCache {
    pub fn at_dir(dir: impl AsRef<Path>) -> PointCountCache {
        PointCountCache {
            path: dir.as_ref().join(CACHE_FILE_NAME),
        }
    }

    /// The cache named by `TOWER_FORGE_CACHE_DIR`, if the variable is set.
    pub fn from_env() -> Option<PointCountCache> {
        std::env::var_os(CACHE_ENV_VAR).map(PointCountCache::at_dir)
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn malformed(&self, line: usize, reason: impl Into<String>) -> Error {
        Error::CacheFormat {
            path: self.path.display().to_string(),
            line,
            reason: reason.into(),
        }
    }

    /// All rows, in file order. A missing file is an empty cache.
    fn read_rows(&self) -> Result<Vec<(u64, u64, u64, u64)>> {
        let text = match fs::read_to_string(&self.path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut lines = text.lines().enumerate();
        match lines.next() {
            None => return Ok(Vec::new()),
            Some((_, header)) if header == HEADER.join(",") => {}
            Some((_, header)) => {
                return Err(self.malformed(1, format!("bad header {header:?}")));
            }
        }
        let mut rows = Vec::new();
        for (idx, line) in lines {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 4 {
                return Err(self.malformed(idx + 1, format!("{} fields, expected 4", fields.len())));
            }
            let mut vals = [0u64; 4];
            for (v, (name, field)) in vals.iter_mut().zip(HEADER.iter().zip(&fields)) {
                *v = field.parse().map_err(|_| {
                    self.malformed(
                        idx + 1,
                        format!("field {name} is {field:?}, not an integer"),
                    )
                })?;
            }
            rows.push((vals[0], vals[1], vals[2], vals[3]));
        }
        Ok(rows)
    }

    /// The recorded count for (p, a), latest row winning, or None.
    pub fn lookup(&self, p: u64, a: QuadExtElem) -> Result<Option<u64>> {
        let key = (p, a.c0().value(), a.c1().value());
        Ok(self
            .read_rows()?
            .into_iter()
            .rev()
            .find(|&(rp, c0, c1, _)| (rp, c0, c1) == key)
            .map(|(_, _, _, n)| n))
    }

    /// Appends one row, creating directory, file, and header on first use.
    pub fn record(&self, p: u64, a: QuadExtElem, n: u64) -> Result<()> {
        if let Some(dir) = self.path.parent() {
            fs::create_dir_all(dir)?;
        }
        let fresh = !self.path.exists();
        let mut file = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        if fresh {
            writeln!(file, "{}", HEADER.join(","))?;
        }
        writeln!(file, "{p},{},{},{n}", a.c0().value(), a.c1().value())?;
        Ok(())
    }
}

/// The curve's point count, preferring the cache. A miss computes and
/// records; a hit is returned as-is unless `verify` is set, in which case
/// the count is redone from scratch and a mismatch is a cross-check
/// failure naming both values.
pub fn count_with_cache(
    curve: &LegendreCurve,
    cache: &PointCountCache,
    verify: bool,
) -> Result<(u64, CacheOutcome)> {
    match cache.lookup(curve.p(), curve.a())? {
        Some(cached) => {
            if !verify {
                return Ok((cached, CacheOutcome::Hit));
            }
            let fresh = curve.count_points()?;
            if fresh != cached {
                return Err(Error::CrossCheck(format!(
                    "cache {} claims {} points for p = {}, a = {}, but recounting gives {}",
                    cache.path().display(),
                    cached,
                    curve.p(),
                    curve.a(),
                    fresh
                )));
            }
            Ok((cached, CacheOutcome::HitVerified))
        }
        None => {
            let n = curve.count_points()?;
            cache.record(curve.p(), curve.a(), n)?;
            Ok((n, CacheOutcome::Computed))
        }
    }
}
