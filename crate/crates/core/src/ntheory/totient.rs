//! Complete preimages of Euler's totient.

use super::{divisors, euler_phi, is_prime};

/// The complete sorted set `{m >= 1 : phi(m) = d}`; empty when `d` is a
/// non-totient (the first even non-totient is 14).
///
/// Assembles `m` recursively from prime powers `p^k` with `(p-1)p^(k-1)`
/// dividing `d`, where the candidate primes are exactly the `e + 1` over
/// divisors `e` of `d`. Each `m` is reached once because primes are consumed
/// in increasing order. Every totient preimage satisfies `m <= 2 d^2` (from
/// `phi(m) >= sqrt(m/2)`), which the brute-force test oracle relies on.
pub fn inverse_totient(d: u64) -> Vec<u64> {
    assert!(d >= 1, "inverse_totient requires d >= 1");
    let candidates: Vec<u64> = divisors(d)
        .into_iter()
        .filter(|&e| is_prime(e + 1))
        .map(|e| e + 1)
        .collect();
    let mut out = Vec::new();
    assemble(d, &candidates, 0, 1, &mut out);
    out.sort_unstable();
    debug_assert!(out.iter().all(|&m| euler_phi(m) == d));
    out
}

/// Extend the partial product `acc` (built from candidate primes below index
/// `idx`) by prime powers of candidates from `idx` on, so that the totient
/// contributions multiply to `remaining`.
fn assemble(remaining: u64, candidates: &[u64], idx: usize, acc: u64, out: &mut Vec<u64>) {
    if remaining == 1 {
        out.push(acc);
        // fall through: a further prime power may still contribute totient 1
        // (only p = 2, k = 1, handled below via cost 1)
    }
    for (i, &p) in candidates.iter().enumerate().skip(idx) {
        // cost of p^k in the totient: (p-1) * p^(k-1)
        let mut cost = p - 1;
        let mut power = p;
        loop {
            if cost > remaining {
                break;
            }
            if remaining % cost == 0 {
                assemble(remaining / cost, candidates, i + 1, acc * power, out);
            }
            match (cost.checked_mul(p), power.checked_mul(p)) {
                (Some(c), Some(pw)) => {
                    cost = c;
                    power = pw;
                }
                _ => break,
            }
        }
    }
}
