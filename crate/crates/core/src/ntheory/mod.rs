//! Elementary and multiplicative number theory kernel.
//!
//! Factorization, Euler's totient and its inverse, the Moebius function,
//! multiplicative orders, cyclotomic polynomials, Ramanujan sums, and a
//! segmented prime sieve. All functions are pure; inputs are `u64` (exact
//! internals may exceed 64 bits where needed).

mod factor;
mod poly;
mod sieve;
mod totient;

pub use factor::{factorize, is_prime, Factorization};
pub use poly::{cyclotomic_poly, CyclotomicPoly};
pub use sieve::{prime_count, prime_flags_in_range, primes_up_to, simple_primes, SegmentedPrimes, SIEVE_BUDGET};
pub use totient::inverse_totient;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NtError {
    #[error("0 has no prime factorization")]
    ZeroInput,
    #[error("{q} is not coprime to {m} (gcd = {g})")]
    NotCoprime { q: u64, m: u64, g: u64 },
    #[error("sieve bound {requested} exceeds the budget of {budget}")]
    SieveBudget { requested: u64, budget: u64 },
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `a * b mod m` without overflow.
pub(crate) fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `a^e mod m` by binary exponentiation. `m` must be nonzero.
pub fn mod_pow(mut a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, a, m);
        }
        a = mod_mul(a, a, m);
        e >>= 1;
    }
    acc
}

/// Euler's totient, the order of `(Z/nZ)^x`.
///
/// Panics if `n == 0`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi requires n >= 1");
    let mut phi = n;
    for &(p, _) in factorize(n).expect("n >= 1").factors() {
        phi = phi / p * (p - 1);
    }
    phi
}

/// The Moebius function: 0 on squareful n, else (-1)^(number of prime factors).
///
/// Panics if `n == 0`.
pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1, "moebius requires n >= 1");
    let f = factorize(n).expect("n >= 1");
    if f.factors().iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if f.factors().len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Least `r >= 1` with `q^r = 1 mod m`, for `gcd(q, m) = 1`.
///
/// Computed by factoring `phi(m)` and descending from it, not by iterating
/// powers of `q`.
pub fn multiplicative_order(q: u64, m: u64) -> Result<u64, NtError> {
    assert!(m >= 1, "multiplicative_order requires m >= 1");
    if m == 1 {
        return Ok(1);
    }
    let qm = q % m;
    let g = gcd(qm, m);
    if g != 1 {
        return Err(NtError::NotCoprime { q, m, g });
    }
    let phi = euler_phi(m);
    let mut r = phi;
    for &(p, _) in factorize(phi).expect("phi >= 1").factors() {
        while r % p == 0 && mod_pow(qm, r / p, m) == 1 {
            r /= p;
        }
    }
    Ok(r)
}

/// True iff `q` generates `(Z/mZ)^x`.
pub fn is_generator(q: u64, m: u64) -> Result<bool, NtError> {
    Ok(multiplicative_order(q, m)? == euler_phi(m))
}

/// True iff `(Z/mZ)^x` is cyclic: `m` in {1, 2, 4}, an odd prime power, or
/// twice an odd prime power.
pub fn units_group_cyclic(m: u64) -> bool {
    assert!(m >= 1, "units_group_cyclic requires m >= 1");
    if m == 1 || m == 2 || m == 4 {
        return true;
    }
    let twos = m.trailing_zeros();
    if twos >= 2 {
        return false;
    }
    let odd = m >> twos;
    if odd == 1 {
        // m is a power of two >= 8
        return false;
    }
    factorize(odd).expect("odd >= 3").factors().len() == 1
}

/// The Ramanujan sum `c_m(k)` by Hoelder's identity:
/// `mu(m/g) * phi(m) / phi(m/g)` with `g = gcd(k, m)`.
pub fn ramanujan_sum(m: u64, k: i64) -> i64 {
    assert!(m >= 1, "ramanujan_sum requires m >= 1");
    let km = k.rem_euclid(m as i64) as u64;
    let g = gcd(km, m);
    let mg = m / g;
    let mu = moebius(mg);
    if mu == 0 {
        return 0;
    }
    let magnitude = euler_phi(m) / euler_phi(mg);
    mu * magnitude as i64
}

/// All divisors of `n` in increasing order. Panics if `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors requires n >= 1");
    let mut divs = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// The sorted units of `Z/mZ` (residues coprime to m). For `m = 1` this is
/// `[0]`, the single residue of the zero ring.
pub fn units_mod(m: u64) -> Vec<u64> {
    assert!(m >= 1, "units_mod requires m >= 1");
    if m == 1 {
        return vec![0];
    }
    (1..m).filter(|&x| gcd(x, m) == 1).collect()
}
