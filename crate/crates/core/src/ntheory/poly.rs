//! Cyclotomic polynomials with exact integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{divisors, euler_phi};

/// The m-th cyclotomic polynomial `Phi_m`, coefficients in ascending degree.
///
/// Monic of degree `phi(m)`; divides `X^m - 1` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPoly {
    m: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicPoly {
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Coefficients in ascending degree; length `phi(m) + 1`, last entry 1.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// `X^n - 1` as a coefficient vector.
fn x_pow_minus_one(n: u64) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    coeffs[0] = -BigInt::one();
    coeffs[n as usize] = BigInt::one();
    coeffs
}

/// Quotient of `num` by the monic polynomial `den`; panics on a nonzero
/// remainder, which cannot occur for the divisor towers used here.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let (n, d) = (num.len() - 1, den.len() - 1);
    assert!(n >= d, "division of lower-degree polynomial");
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); n - d + 1];
    for i in (d..=n).rev() {
        let c = std::mem::take(&mut rem[i]);
        if c.is_zero() {
            continue;
        }
        for j in 0..d {
            rem[i - d + j] -= &c * &den[j];
        }
        quot[i - d] = c;
    }
    assert!(
        rem.iter().take(d).all(|c| c.is_zero()),
        "nonzero remainder in cyclotomic division"
    );
    quot
}

/// The m-th cyclotomic polynomial, by exact division of `X^d - 1` by all
/// `Phi_e` for proper divisors `e | d`, walked up the divisor lattice of `m`.
///
/// Panics if `m == 0`.
pub fn cyclotomic_poly(m: u64) -> CyclotomicPoly {
    assert!(m >= 1, "cyclotomic_poly requires m >= 1");
    let divs = divisors(m);
    let mut memo: Vec<(u64, Vec<BigInt>)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        let mut poly = x_pow_minus_one(d);
        for &(e, ref phi_e) in &memo {
            if d % e == 0 {
                poly = exact_div_monic(&poly, phi_e);
            }
        }
        memo.push((d, poly));
    }
    let coeffs = memo.pop().expect("m is its own divisor").1;
    debug_assert_eq!(coeffs.len() as u64 - 1, euler_phi(m));
    CyclotomicPoly { m, coeffs }
}

