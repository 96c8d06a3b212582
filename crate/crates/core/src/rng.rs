//! Seedable random streams.
//!
//! Every example is drawn from its own stream, derived from the triple
//! `(master_seed, task_id, example_index)`. The engine is SplitMix64 and
//! bounded integers use a 128-bit multiply-shift, so the whole pipeline is
//! reproducible bit-for-bit from the triple alone:
//!
//! ```text
//! h     = fnv1a64(task_id)
//! state = mix(master_seed ^ mix(h ^ mix(example_index)))
//! next  : state += 0x9E3779B97F4A7C15; return mix(state)
//! draw  : lo + ((next as u128 * (hi - lo + 1)) >> 64)
//! ```

use crate::error::{Error, Result};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes
        .iter()
        .fold(FNV_OFFSET, |h, &b| (h ^ u64::from(b)).wrapping_mul(FNV_PRIME))
}

/// Where a stream came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamOrigin {
    pub master_seed: u64,
    pub task_id: String,
    pub example_index: u64,
}

/// A single-owner deterministic random stream.
#[derive(Debug, Clone)]
pub struct RngStream {
    state: u64,
    origin: StreamOrigin,
}

impl RngStream {
    pub fn new(master_seed: u64, task_id: &str, example_index: u64) -> Result<Self> {
        if task_id.is_empty() {
            return Err(Error::invalid("task id must be non-empty"));
        }
        let state = mix(master_seed ^ mix(fnv1a(task_id.as_bytes()) ^ mix(example_index)));
        Ok(RngStream {
            state,
            origin: StreamOrigin {
                master_seed,
                task_id: task_id.to_string(),
                example_index,
            },
        })
    }

    pub fn origin(&self) -> &StreamOrigin {
        &self.origin
    }

    /// Raw internal state; equal states mean equal future draws.
    pub fn state(&self) -> u64 {
        self.state
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix(self.state)
    }

    /// Uniform integer in the inclusive range `[lo, hi]`.
    pub fn randint(&mut self, lo: i64, hi: i64) -> Result<i64> {
        if lo > hi {
            return Err(Error::InvalidRange { lo, hi });
        }
        let span = (hi as i128 - lo as i128 + 1) as u128;
        let x = self.next_u64() as u128;
        let offset = (x * span) >> 64;
        Ok((lo as i128 + offset as i128) as i64)
    }

    /// `n` successive [`randint`](Self::randint) draws.
    pub fn randints(&mut self, lo: i64, hi: i64, n: usize) -> Result<Vec<i64>> {
        if lo > hi {
            return Err(Error::InvalidRange { lo, hi });
        }
        (0..n).map(|_| self.randint(lo, hi)).collect()
    }

    /// Uniform index into a collection of `len` items. `len` must be non-zero.
    pub fn index(&mut self, len: usize) -> usize {
        assert!(len > 0, "cannot pick from an empty collection");
        self.randint(0, len as i64 - 1).expect("non-empty range") as usize
    }

    pub fn coin(&mut self) -> bool {
        self.index(2) == 1
    }

    /// Fisher-Yates shuffle, drawing from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.index(i + 1);
            items.swap(i, j);
        }
    }
}

/// Convenience wrapper matching the free-function style used by generators.
pub fn new_stream(master_seed: u64, task_id: &str, example_index: u64) -> Result<RngStream> {
    RngStream::new(master_seed, task_id, example_index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn draws(s: &mut RngStream, n: usize) -> Vec<u64> {
        (0..n).map(|_| s.next_u64()).collect()
    }

    #[test]
    fn splitmix_reference_values() {
        // Reference outputs of SplitMix64 seeded with 0.
        let mut s = RngStream { state: 0, origin: new_stream(0, "x", 0).unwrap().origin };
        assert_eq!(s.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(s.next_u64(), 0x6e789e6aa1b965f4);
        assert_eq!(s.next_u64(), 0x06c45d188009454f);
    }

    #[test]
    fn fnv1a_reference_values() {
        assert_eq!(fnv1a(b""), 0xcbf29ce484222325);
        assert_eq!(fnv1a(b"a"), 0xaf63dc4c8601ec8c);
    }

    #[test]
    fn streams_are_deterministic() {
        let mut a = new_stream(7, "543a7ed5", 0).unwrap();
        let mut b = new_stream(7, "543a7ed5", 0).unwrap();
        assert_eq!(draws(&mut a, 100), draws(&mut b, 100));
    }

    #[test]
    fn distinct_triples_give_distinct_streams() {
        let base = draws(&mut new_stream(7, "543a7ed5", 0).unwrap(), 100);
        assert_ne!(base, draws(&mut new_stream(7, "543a7ed5", 1).unwrap(), 100));
        assert_ne!(
            draws(&mut new_stream(7, "a", 0).unwrap(), 100),
            draws(&mut new_stream(8, "a", 0).unwrap(), 100)
        );
        assert_ne!(base, draws(&mut new_stream(7, "1e0a9b12", 0).unwrap(), 100));
    }

    #[test]
    fn empty_task_id_is_rejected() {
        assert!(matches!(new_stream(1, "", 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn origin_is_recorded() {
        let s = new_stream(3, "abc", 9).unwrap();
        assert_eq!(
            s.origin(),
            &StreamOrigin { master_seed: 3, task_id: "abc".into(), example_index: 9 }
        );
    }

    #[test]
    fn degenerate_and_invalid_ranges() {
        let mut s = new_stream(1, "t", 0).unwrap();
        assert_eq!(s.randint(5, 5).unwrap(), 5);
        assert!(matches!(s.randint(3, 2), Err(Error::InvalidRange { lo: 3, hi: 2 })));
        assert!(s.randints(3, 2, 4).is_err());
        assert_eq!(s.randints(2, 7, 0).unwrap(), Vec::<i64>::new());
        assert_eq!(s.randints(3, 3, 4).unwrap(), vec![3, 3, 3, 3]);
        let x = s.randint(i64::MIN, i64::MAX).unwrap();
        let _ = x;
    }

    #[test]
    fn randints_matches_successive_randint() {
        let mut a = new_stream(11, "t", 4).unwrap();
        let mut b = new_stream(11, "t", 4).unwrap();
        let bulk = a.randints(2, 7, 3).unwrap();
        let single: Vec<i64> = (0..3).map(|_| b.randint(2, 7).unwrap()).collect();
        assert_eq!(bulk, single);
        assert_eq!(a.state(), b.state());
    }

    // Chi-square statistic over the counts of each value.
    fn chi_square(counts: &[u64]) -> f64 {
        let n: u64 = counts.iter().sum();
        let expected = n as f64 / counts.len() as f64;
        counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum()
    }

    #[test]
    fn coin_frequencies_within_three_sigma() {
        let mut s = new_stream(7, "freq", 0).unwrap();
        let n = 100_000;
        let mut counts = [0u64; 2];
        for _ in 0..n {
            counts[s.randint(0, 1).unwrap() as usize] += 1;
        }
        let sigma = (n as f64 * 0.25).sqrt();
        for c in counts {
            assert!((c as f64 - n as f64 / 2.0).abs() < 3.0 * sigma, "{counts:?}");
        }
        // Critical value of chi-square with 1 degree of freedom at p = 0.001.
        assert!(chi_square(&counts) < 10.828);
    }

    #[test]
    fn six_way_support_and_uniformity() {
        let mut s = new_stream(7, "support", 0).unwrap();
        let mut counts = [0u64; 6];
        for _ in 0..100_000 {
            let v = s.randint(2, 7).unwrap();
            assert!((2..=7).contains(&v));
            counts[(v - 2) as usize] += 1;
        }
        assert!(counts.iter().all(|&c| c > 0));
        // Critical value of chi-square with 5 degrees of freedom at p = 0.001.
        assert!(chi_square(&counts) < 20.515, "{counts:?}");
    }

    #[test]
    fn shuffle_is_a_permutation() {
        let mut s = new_stream(2, "shuffle", 0).unwrap();
        let mut v: Vec<u32> = (0..20).collect();
        s.shuffle(&mut v);
        let mut sorted = v.clone();
        sorted.sort();
        assert_eq!(sorted, (0..20).collect::<Vec<_>>());
    }

    proptest! {
        #[test]
        fn draws_stay_in_range(seed: u64, idx in 0u64..1000, lo in -1000i64..1000, span in 0i64..1000) {
            let mut s = new_stream(seed, "range", idx).unwrap();
            for _ in 0..50 {
                let v = s.randint(lo, lo + span).unwrap();
                prop_assert!(v >= lo && v <= lo + span);
            }
        }
    }
}
