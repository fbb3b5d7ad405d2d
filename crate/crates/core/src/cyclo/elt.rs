//! Field elements of `Q(zeta_m)` in the power basis modulo `Phi_m`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ntheory::{cyclotomic_poly, euler_phi, gcd, units_mod};

use super::CycloError;

/// Arbitrary-precision exact rational, the scalar of all exact computation.
pub type Rational = num_rational::BigRational;

/// Largest supported field degree `phi(m)`.
pub const MAX_FIELD_DEGREE: u64 = 256;

/// Shared context for one conductor `m`: the minimal polynomial and the
/// precomputed reductions of `zeta^(phi(m)) .. zeta^(2 phi(m) - 2)` into the
/// power basis. Immutable once built.
struct FieldData {
    m: u64,
    dim: usize,
    /// `Phi_m`, ascending coefficients, monic, length `dim + 1`.
    min_poly: Vec<BigInt>,
    /// `reduction[j]` = coefficients of `zeta^(dim + j)`, each of length `dim`.
    reduction: Vec<Vec<BigInt>>,
}

/// Handle to the field `Q(zeta_m)`; cheap to clone. Two handles compare
/// equal iff they present the same conductor.
#[derive(Clone)]
pub struct CycloField {
    data: Arc<FieldData>,
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.data.m == other.data.m
    }
}

impl Eq for CycloField {}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloField(m = {})", self.data.m)
    }
}

impl CycloField {
    pub fn new(m: u64) -> Result<CycloField, CycloError> {
        assert!(m >= 1, "conductor must be >= 1");
        let degree = euler_phi(m);
        if degree > MAX_FIELD_DEGREE {
            return Err(CycloError::DegreeBound {
                m,
                degree,
                bound: MAX_FIELD_DEGREE,
            });
        }
        let dim = degree as usize;
        let min_poly = cyclotomic_poly(m).coeffs().to_vec();
        // zeta^dim = -(p_0 + p_1 zeta + ... + p_(dim-1) zeta^(dim-1));
        // higher powers follow by shifting and folding the overflow back in.
        // Products of two reduced elements need exponents up to 2 dim - 2.
        let mut reduction: Vec<Vec<BigInt>> = Vec::with_capacity(dim.saturating_sub(1));
        if dim >= 2 {
            let first: Vec<BigInt> = min_poly[..dim].iter().map(|c| -c).collect();
            reduction.push(first);
            for _ in 1..dim - 1 {
                let next = {
                    let prev = reduction.last().expect("nonempty");
                    let carry = prev[dim - 1].clone();
                    let mut next = vec![BigInt::zero(); dim];
                    next[1..dim].clone_from_slice(&prev[..dim - 1]);
                    if !carry.is_zero() {
                        for i in 0..dim {
                            next[i] += &carry * &reduction[0][i];
                        }
                    }
                    next
                };
                reduction.push(next);
            }
        }
        Ok(CycloField {
            data: Arc::new(FieldData {
                m,
                dim,
                min_poly,
                reduction,
            }),
        })
    }

    pub fn m(&self) -> u64 {
        self.data.m
    }

    /// Field degree `phi(m)` over the rationals.
    pub fn dim(&self) -> usize {
        self.data.dim
    }

    pub fn zero(&self) -> CycloElt {
        CycloElt {
            field: self.clone(),
            coeffs: vec![Rational::zero(); self.data.dim],
        }
    }

    pub fn one(&self) -> CycloElt {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> CycloElt {
        let mut coeffs = vec![Rational::zero(); self.data.dim];
        coeffs[0] = r;
        CycloElt {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn from_integer(&self, n: i64) -> CycloElt {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// Element from explicit power-basis coefficients (length must be `dim`).
    pub fn from_coeffs(&self, coeffs: Vec<Rational>) -> CycloElt {
        assert_eq!(coeffs.len(), self.data.dim, "coefficient vector length");
        CycloElt {
            field: self.clone(),
            coeffs,
        }
    }

    /// `X^e mod Phi_m` as integer power-basis coefficients.
    fn x_pow_reduced(&self, e: u64) -> Vec<BigInt> {
        let dim = self.data.dim;
        let mut out = vec![BigInt::zero(); dim];
        let e = e as usize;
        if e < dim {
            out[e] = BigInt::one();
            return out;
        }
        if e - dim < self.data.reduction.len() {
            return self.data.reduction[e - dim].clone();
        }
        // long division of X^e by the monic minimal polynomial
        let mut rem = vec![BigInt::zero(); e + 1];
        rem[e] = BigInt::one();
        for i in (dim..=e).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for j in 0..dim {
                let delta = &c * &self.data.min_poly[j];
                rem[i - dim + j] -= delta;
            }
        }
        rem.truncate(dim);
        rem.resize(dim, BigInt::zero());
        rem
    }

    /// The root of unity `zeta_m^k` in canonical reduced form; `k` is taken
    /// modulo `m`.
    pub fn zeta_pow(&self, k: i64) -> CycloElt {
        let e = k.rem_euclid(self.data.m as i64) as u64;
        let ints = self.x_pow_reduced(e);
        CycloElt {
            field: self.clone(),
            coeffs: ints.into_iter().map(Rational::from_integer).collect(),
        }
    }

    pub fn zeta(&self) -> CycloElt {
        self.zeta_pow(1)
    }
}

/// The element `zeta_m^k` of a freshly built `Q(zeta_m)`.
pub fn zeta_power(m: u64, k: i64) -> Result<CycloElt, CycloError> {
    Ok(CycloField::new(m)?.zeta_pow(k))
}

/// An element of `Q(zeta_m)`: `phi(m)` rational coefficients in the power
/// basis, always fully reduced, so equality is coefficient-wise.
#[derive(Clone)]
pub struct CycloElt {
    field: CycloField,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycloElt {
    fn eq(&self, other: &Self) -> bool {
        self.field.m() == other.field.m() && self.coeffs == other.coeffs
    }
}

impl Eq for CycloElt {}

impl fmt::Debug for CycloElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElt(m={}, [", self.field.m())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "])")
    }
}

impl CycloElt {
    pub fn m(&self) -> u64 {
        self.field.m()
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    /// Power-basis coefficients, length `phi(m)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn assert_same_field(&self, other: &CycloElt, op: &str) {
        assert_eq!(
            self.field.m(),
            other.field.m(),
            "{op} of elements from Q(zeta_{}) and Q(zeta_{})",
            self.field.m(),
            other.field.m()
        );
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, r: &Rational) -> CycloElt {
        if r.is_zero() {
            return self.field.zero();
        }
        CycloElt {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// `self^e` by binary exponentiation.
    pub fn pow(&self, e: u64) -> CycloElt {
        let mut acc = self.field.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The Galois automorphism `zeta -> zeta^s`, applied coefficient-wise to
    /// the power basis; requires `gcd(s, m) = 1`.
    pub fn galois_conj(&self, s: u64) -> Result<CycloElt, CycloError> {
        let m = self.field.m();
        let sm = s % m;
        if m > 1 {
            let g = gcd(sm, m);
            if g != 1 {
                return Err(CycloError::NotCoprime { s, m, g });
            }
        }
        let dim = self.field.dim();
        let mut out = vec![Rational::zero(); dim];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let e = ((sm as u128 * j as u128) % m as u128) as u64;
            for (i, c) in self.field.x_pow_reduced(e).into_iter().enumerate() {
                if !c.is_zero() {
                    out[i] += a * Rational::from_integer(c);
                }
            }
        }
        Ok(CycloElt {
            field: self.field.clone(),
            coeffs: out,
        })
    }

    /// The field trace down to `Q`: the sum of all Galois conjugates,
    /// returned as an exact rational.
    pub fn field_trace(&self) -> Rational {
        let m = self.field.m();
        let mut acc = self.field.zero();
        for s in units_mod(m) {
            acc = &acc + &self.galois_conj(s).expect("units are coprime to m");
        }
        acc.as_rational()
            .expect("a sum over a full Galois orbit is rational")
    }

    /// `Some(value)` iff the element lies in `Q`, i.e. every coefficient
    /// beyond the constant term vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_m` over `Q[X]`; `None` for zero.
    pub fn inverse(&self) -> Option<CycloElt> {
        if self.is_zero() {
            return None;
        }
        let dim = self.field.dim();
        if dim == 1 {
            return Some(self.field.from_rational(self.coeffs[0].recip()));
        }
        let a: Vec<Rational> = self.coeffs.clone();
        let modulus: Vec<Rational> = self
            .field
            .data
            .min_poly
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        // invariants: r0 = u0 * a (mod Phi), r1 = u1 * a (mod Phi)
        let mut r0 = modulus;
        let mut r1 = trim(a);
        let mut u0 = vec![Rational::zero()];
        let mut u1 = vec![Rational::one()];
        while poly_degree(&r1) > 0 {
            let (q, rem) = poly_divmod(&r0, &r1);
            let u2 = poly_sub(&u0, &poly_mul_q(&q, &u1));
            r0 = r1;
            r1 = rem;
            u0 = u1;
            u1 = u2;
        }
        assert!(
            !r1.is_empty() && !r1[0].is_zero(),
            "Phi_m is irreducible, so the gcd with a nonzero element is constant"
        );
        let inv_g = r1[0].recip();
        debug_assert!(u1.len() <= dim, "cofactor degree bound from the Euclidean descent");
        let mut coeffs = vec![Rational::zero(); dim];
        for (i, c) in u1.iter().enumerate() {
            coeffs[i] = c * &inv_g;
        }
        Some(CycloElt {
            field: self.field.clone(),
            coeffs,
        })
    }
}

// polynomial helpers over Q for the inverse computation; vectors of
// ascending coefficients with no trailing-zero guarantee except via trim()

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn poly_degree(v: &[Rational]) -> usize {
    v.len().saturating_sub(1)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul_q(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let den = trim(den.to_vec());
    let d = poly_degree(&den);
    let lead = den.last().expect("nonzero divisor").clone();
    let mut rem = trim(num.to_vec());
    if poly_degree(&rem) < d || (rem.len() == 1 && rem[0].is_zero()) {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); poly_degree(&rem) - d + 1];
    while poly_degree(&rem) >= d && !(rem.len() == 1 && rem[0].is_zero()) {
        let k = poly_degree(&rem);
        let c = &rem[k] / &lead;
        quot[k - d] = c.clone();
        for j in 0..=d {
            let delta = &c * &den[j];
            rem[k - d + j] -= delta;
        }
        rem = trim(rem);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    (quot, rem)
}

impl Add for &CycloElt {
    type Output = CycloElt;

    fn add(self, rhs: &CycloElt) -> CycloElt {
        self.assert_same_field(rhs, "addition");
        CycloElt {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycloElt {
    type Output = CycloElt;

    fn sub(self, rhs: &CycloElt) -> CycloElt {
        self.assert_same_field(rhs, "subtraction");
        CycloElt {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycloElt {
    type Output = CycloElt;

    fn neg(self) -> CycloElt {
        CycloElt {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycloElt {
    type Output = CycloElt;

    /// Exact product: multiply as polynomials of degree `< 2 phi(m)`, then
    /// fold the upper half back with the precomputed reduction rows.
    fn mul(self, rhs: &CycloElt) -> CycloElt {
        self.assert_same_field(rhs, "multiplication");
        let dim = self.field.dim();
        if dim == 1 {
            return CycloElt {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let mut prod = vec![Rational::zero(); 2 * dim - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut out: Vec<Rational> = prod[..dim].to_vec();
        for (t, row) in self.field.data.reduction.iter().enumerate() {
            let c = &prod[dim + t];
            if c.is_zero() {
                continue;
            }
            for (i, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    out[i] += c * Rational::from_integer(r.clone());
                }
            }
        }
        CycloElt {
            field: self.field.clone(),
            coeffs: out,
        }
    }
}
