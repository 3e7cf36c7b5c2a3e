//! Data-parallel driver for the exhaustive scans.
//!
//! With the default `parallel` feature the scans fan out over rayon; without
//! it the same code runs sequentially. Results are indexed collections, so
//! reports are deterministic either way.

/// Maps `f` over `0..len`, in parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub fn map_indexed<R: Send>(len: usize, f: impl Fn(usize) -> R + Send + Sync) -> Vec<R> {
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<R>(len: usize, f: impl Fn(usize) -> R) -> Vec<R> {
    (0..len).map(f).collect()
}

/// Tally of one scan: instances checked, instances skipped because a
/// truncation window was hit, and a capped list of witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanTally<W> {
    pub checked: u64,
    pub skipped: u64,
    pub witnesses: Vec<W>,
}

impl<W> Default for ScanTally<W> {
    fn default() -> Self {
        ScanTally {
            checked: 0,
            skipped: 0,
            witnesses: Vec::new(),
        }
    }
}

/// At most this many witnesses are retained per check.
pub const WITNESS_CAP: usize = 10;

impl<W> ScanTally<W> {
    pub fn merge(mut self, other: ScanTally<W>) -> ScanTally<W> {
        self.checked += other.checked;
        self.skipped += other.skipped;
        for w in other.witnesses {
            if self.witnesses.len() < WITNESS_CAP {
                self.witnesses.push(w);
            }
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Runs `per_slice` on every outer index and merges the tallies in index
/// order, keeping witness lists deterministic.
pub fn scan<W: Send>(
    outer: usize,
    per_slice: impl Fn(usize) -> ScanTally<W> + Send + Sync,
) -> ScanTally<W> {
    map_indexed(outer, per_slice)
        .into_iter()
        .fold(ScanTally::default(), ScanTally::merge)
}
