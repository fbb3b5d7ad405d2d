//! Segmented sieve of Eratosthenes: prime streaming, range flags, counting.

use rayon::prelude::*;

use super::NtError;

/// Largest bound the sieve accepts; keeps desk runs bounded.
pub const SIEVE_BUDGET: u64 = 10_000_000_000;

/// Numbers covered per segment. Memory per segment is one byte each.
const SEGMENT_SPAN: u64 = 1 << 18;

/// All primes `<= limit` by a plain in-memory sieve. Intended for base-prime
/// tables (`limit ~ sqrt(x)`) and as an independent small-scale test oracle.
pub fn simple_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

fn isqrt(n: u64) -> u64 {
    use num_integer::Roots;
    n.sqrt()
}

/// Primality flags for every integer in `[lo, hi)`, marked off against the
/// given base primes, which must include every prime `<= sqrt(hi)`.
pub fn prime_flags_in_range(lo: u64, hi: u64, base: &[u64]) -> Vec<bool> {
    assert!(hi >= lo);
    let len = (hi - lo) as usize;
    let mut flags = vec![true; len];
    if lo < 2 {
        for n in lo..2.min(hi) {
            flags[(n - lo) as usize] = false;
        }
    }
    for &p in base {
        if p * p >= hi {
            break;
        }
        // first multiple of p in range, but never p itself
        let mut j = p.max(lo.div_ceil(p)) * p;
        while j < hi {
            flags[(j - lo) as usize] = false;
            j += p;
        }
    }
    flags
}

/// Iterator over the primes `<= x` in increasing order, sieving one segment
/// at a time so memory stays proportional to the segment, not to `x`.
pub struct SegmentedPrimes {
    x: u64,
    base: Vec<u64>,
    segment: Vec<bool>,
    seg_lo: u64,
    cursor: usize,
    emitted_any: bool,
}

/// Primes `<= x` as a streaming iterator.
pub fn primes_up_to(x: u64) -> Result<SegmentedPrimes, NtError> {
    if x > SIEVE_BUDGET {
        return Err(NtError::SieveBudget {
            requested: x,
            budget: SIEVE_BUDGET,
        });
    }
    let base = simple_primes(isqrt(x));
    Ok(SegmentedPrimes {
        x,
        base,
        segment: Vec::new(),
        seg_lo: 2,
        cursor: 0,
        emitted_any: false,
    })
}

impl SegmentedPrimes {
    fn load_segment(&mut self, lo: u64) {
        let hi = (lo + SEGMENT_SPAN).min(self.x + 1);
        self.segment = prime_flags_in_range(lo, hi, &self.base);
        self.seg_lo = lo;
        self.cursor = 0;
    }
}

impl Iterator for SegmentedPrimes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if !self.emitted_any {
            self.emitted_any = true;
            if self.x >= 2 {
                self.load_segment(2);
            } else {
                return None;
            }
        }
        loop {
            while self.cursor < self.segment.len() {
                let i = self.cursor;
                self.cursor += 1;
                if self.segment[i] {
                    return Some(self.seg_lo + i as u64);
                }
            }
            let next_lo = self.seg_lo + self.segment.len() as u64;
            if next_lo > self.x {
                return None;
            }
            self.load_segment(next_lo);
        }
    }
}

/// Exact prime count `pi(x)`, sieving segments in parallel.
pub fn prime_count(x: u64) -> Result<u64, NtError> {
    if x > SIEVE_BUDGET {
        return Err(NtError::SieveBudget {
            requested: x,
            budget: SIEVE_BUDGET,
        });
    }
    if x < 2 {
        return Ok(0);
    }
    let base = simple_primes(isqrt(x));
    let segments: Vec<u64> = (2..=x).step_by(SEGMENT_SPAN as usize).collect();
    Ok(segments
        .par_iter()
        .map(|&lo| {
            let hi = (lo + SEGMENT_SPAN).min(x + 1);
            prime_flags_in_range(lo, hi, &base)
                .iter()
                .filter(|&&f| f)
                .count() as u64
        })
        .sum())
}
