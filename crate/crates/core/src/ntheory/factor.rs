//! Deterministic 64-bit primality testing and integer factorization.

use super::{gcd, mod_mul, mod_pow, NtError};

/// Largest prime tried by direct division before falling back to Pollard rho.
const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Miller-Rabin witnesses proving primality for every `n < 3.3 * 10^24`,
/// which covers the full u64 range.
const MILLER_RABIN_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Exact prime factorization, sorted by prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// True for the factorization of 1.
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Reconstructs the factored integer.
    pub fn value(&self) -> u64 {
        self.pairs
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }

    /// The distinct primes dividing the integer.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }
}

/// Deterministic Miller-Rabin over the fixed witness set; correct on all of u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &MILLER_RABIN_WITNESSES {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard's rho with Brent's cycle detection. Returns a nontrivial factor of
/// `n`, which must be odd and composite.
fn pollard_rho_brent(n: u64) -> u64 {
    debug_assert!(n > 1 && !is_prime(n) && n % 2 == 1);
    const BATCH: u64 = 128;
    let mut c = 1u64;
    loop {
        let step = |v: u64| {
            let s = mod_mul(v, v, n);
            if s + c >= n {
                s + c - n
            } else {
                s + c
            }
        };
        let mut tortoise = 2u64;
        let mut hare = 2u64;
        let mut saved = hare;
        let mut g = 1u64;
        let mut r = 1u64;
        while g == 1 && r < 1 << 22 {
            tortoise = hare;
            for _ in 0..r {
                hare = step(hare);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                saved = hare;
                let mut acc = 1u64;
                for _ in 0..BATCH.min(r - k) {
                    hare = step(hare);
                    acc = mod_mul(acc, tortoise.abs_diff(hare), n);
                }
                g = gcd(acc, n);
                k += BATCH;
            }
            r <<= 1;
        }
        if g == n {
            // The batched gcd collapsed; redo the last batch one step at a time.
            g = 1;
            let mut h = saved;
            while g == 1 {
                h = step(h);
                g = gcd(tortoise.abs_diff(h), n);
            }
        }
        if g != 1 && g != n {
            return g;
        }
        c += 1;
    }
}

fn factor_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Exact prime factorization of `n >= 1`; `factorize(1)` is the empty product.
///
/// Trial division up to `min(sqrt(n), 10^6)`, then Pollard rho with Brent
/// cycle detection on whatever composite cofactor survives.
pub fn factorize(n: u64) -> Result<Factorization, NtError> {
    if n == 0 {
        return Err(NtError::ZeroInput);
    }
    let mut pairs = Vec::new();
    let mut n = n;
    if n % 2 == 0 {
        let e = n.trailing_zeros();
        pairs.push((2u64, e));
        n >>= e;
    }
    let mut p = 3u64;
    while p <= TRIAL_DIVISION_BOUND && p * p <= n {
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += 2;
    }
    if n > 1 {
        let mut rest = Vec::new();
        factor_into(n, &mut rest);
        rest.sort_unstable();
        let mut i = 0;
        while i < rest.len() {
            let p = rest[i];
            let mut e = 0u32;
            while i < rest.len() && rest[i] == p {
                e += 1;
                i += 1;
            }
            pairs.push((p, e));
        }
    }
    debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
    Ok(Factorization { pairs })
}
