//! Explicit tame representation models and machine verification of their
//! defining identities.
//!
//! A model is the pair of exact matrices over `Q(zeta_m)` giving the action
//! of a tame inertia generator `tau` and a Frobenius lift `phi` on the space
//! of functions on `(Z/mZ)^x`: in the delta-function basis indexed by the
//! units `x`, `tau` is diagonal with eigenvalue `zeta_m^x` at `x`, and `phi`
//! permutes the basis by `x -> q x mod m`. With these conventions the
//! Frobenius relation `phi^-1 tau phi = tau^q` holds on the nose, which
//! [`TameRepModel::verify_frobenius_relation`] checks rather than assumes.
//!
//! Everything is computed over `Q(zeta_m)`; the identities verified here are
//! independent of the ambient l-adic field the model will be read in.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cyclo::{
    charpoly, nullspace_sparse, CycloElt, CycloError, CycloField, CycloMatrix, Rational,
    SparseRow,
};
use crate::ntheory::{euler_phi, gcd, multiplicative_order, units_mod, NtError};

/// Cap on the model dimension for the exact commutant solve.
pub const COMMUTANT_DIM_BOUND: usize = 48;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("q = {q} and m = {m} are not coprime (gcd = {g})")]
    NotCoprime { q: u64, m: u64, g: u64 },
    #[error("residue field size must be at least 2, got {q}")]
    ResidueSizeTooSmall { q: u64 },
    #[error("model dimension {dim} exceeds the bound {bound} for this operation")]
    DimensionBound { dim: usize, bound: usize },
    #[error("internal consistency failure: {0}")]
    Inconsistent(&'static str),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error(transparent)]
    Nt(#[from] NtError),
}

/// One letter of a word in the two generators and their inverses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordLetter {
    Tau,
    TauInv,
    Phi,
    PhiInv,
}

/// Irreducibility data from the exact commutant computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityReport {
    /// Dimension of `{M : M tau = tau M, M phi = phi M}`.
    pub commutant_dim: usize,
    /// Schur: the commutant is one-dimensional iff absolutely irreducible.
    pub is_abs_irreducible: bool,
    /// Order of `q` in `(Z/mZ)^x`.
    pub q_order: u64,
    /// Number of orbits of `x -> q x` on the units.
    pub orbit_count: usize,
}

/// The explicit tame model of dimension `phi(m)` for residue size `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TameRepModel {
    m: u64,
    q: u64,
    basis_index: Vec<u64>,
    field: CycloField,
    tau: CycloMatrix,
    phi: CycloMatrix,
}

/// Build the model for the order-`m` tame quotient acted on by residue size
/// `q`. Requires `q >= 2` and `gcd(q, m) = 1`; `m = 1, 2` give the
/// one-dimensional degenerate models.
pub fn build_tame_rep(m: u64, q: u64) -> Result<TameRepModel, RepError> {
    assert!(m >= 1, "tame quotient order must be >= 1");
    if q < 2 {
        return Err(RepError::ResidueSizeTooSmall { q });
    }
    let g = gcd(q % m.max(2), m);
    if m > 1 && g != 1 {
        return Err(RepError::NotCoprime { q, m, g });
    }
    let field = CycloField::new(m)?;
    let basis_index = units_mod(m);
    let n = basis_index.len();
    debug_assert_eq!(n as u64, euler_phi(m));
    let eigen: Vec<CycloElt> = basis_index
        .iter()
        .map(|&x| field.zeta_pow(x as i64))
        .collect();
    let tau = CycloMatrix::diagonal(&field, &eigen);
    // phi sends delta_x to delta_(q x); position of q x in the sorted units
    let pos = |u: u64| basis_index.binary_search(&u).expect("unit");
    let perm: Vec<usize> = basis_index
        .iter()
        .map(|&x| pos(((q as u128 * x as u128) % m as u128) as u64))
        .collect();
    let phi = CycloMatrix::permutation(&field, &perm);
    Ok(TameRepModel {
        m,
        q,
        basis_index,
        field,
        tau,
        phi,
    })
}

impl TameRepModel {
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Model dimension `phi(m)`.
    pub fn dim(&self) -> usize {
        self.basis_index.len()
    }

    /// The sorted units indexing the delta-function basis.
    pub fn basis_index(&self) -> &[u64] {
        &self.basis_index
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn tau(&self) -> &CycloMatrix {
        &self.tau
    }

    pub fn phi(&self) -> &CycloMatrix {
        &self.phi
    }

    /// Exact check of `phi^-1 tau phi = tau^q`.
    pub fn verify_frobenius_relation(&self) -> bool {
        let phi_inv = match self.phi.inverse_permutation() {
            Ok(p) => p,
            Err(_) => return false,
        };
        let conjugated = phi_inv.mul(&self.tau).mul(&self.phi);
        conjugated == self.tau.pow(self.q)
    }

    /// Trace of `tau^k` as an exact rational; fails the model (not the
    /// caller) if the result is irrational.
    pub fn inertia_trace(&self, k: i64) -> Result<Rational, RepError> {
        let e = k.rem_euclid(self.m as i64) as u64;
        self.tau
            .pow(e)
            .trace()
            .as_rational()
            .ok_or(RepError::Inconsistent(
                "trace of an inertia element must be rational",
            ))
    }

    /// Characteristic polynomial of `tau`, returned as integer coefficients
    /// in ascending degree. For these models it equals the m-th cyclotomic
    /// polynomial.
    pub fn charpoly_tau(&self) -> Result<Vec<BigInt>, RepError> {
        let coeffs = charpoly(&self.tau)?;
        coeffs
            .iter()
            .map(|c| {
                c.as_rational()
                    .filter(|r| r.is_integer())
                    .map(|r| r.to_integer())
                    .ok_or(RepError::Inconsistent(
                        "characteristic polynomial of tau must have integer coefficients",
                    ))
            })
            .collect()
    }

    /// Exact commutant of `{tau, phi}` by a sparse nullspace solve, plus the
    /// orbit-count data it must agree with.
    pub fn commutant_report(&self) -> Result<IrreducibilityReport, RepError> {
        let n = self.dim();
        if n > COMMUTANT_DIM_BOUND {
            return Err(RepError::DimensionBound {
                dim: n,
                bound: COMMUTANT_DIM_BOUND,
            });
        }
        let idx = |r: usize, c: usize| r * n + c;
        let mut rows: Vec<SparseRow> = Vec::with_capacity(2 * n * n);
        // M tau - tau M = 0: entry (r, c) gives (lambda_c - lambda_r) M_rc
        for r in 0..n {
            for c in 0..n {
                let diff = self.tau.get(c, c) - self.tau.get(r, r);
                if !diff.is_zero() {
                    rows.push(vec![(idx(r, c), diff)]);
                }
            }
        }
        // M phi - phi M = 0: entry (r, c) gives M_(r, sigma(c)) - M_(sigma^-1(r), c)
        let sigma: Vec<usize> = (0..n)
            .map(|j| {
                (0..n)
                    .find(|&i| self.phi.get(i, j).is_one())
                    .expect("phi is a permutation")
            })
            .collect();
        let mut sigma_inv = vec![0usize; n];
        for (j, &i) in sigma.iter().enumerate() {
            sigma_inv[i] = j;
        }
        for r in 0..n {
            for c in 0..n {
                let a = idx(r, sigma[c]);
                let b = idx(sigma_inv[r], c);
                if a == b {
                    continue;
                }
                let mut row = vec![
                    (a, self.field.one()),
                    (b, -&self.field.one()),
                ];
                row.sort_by_key(|&(col, _)| col);
                rows.push(row);
            }
        }
        let ns = nullspace_sparse(&self.field, n * n, rows)?;
        let q_order = multiplicative_order(self.q, self.m)?;
        let orbit_count = self.orbit_count();
        Ok(IrreducibilityReport {
            commutant_dim: ns.basis.len(),
            is_abs_irreducible: ns.basis.len() == 1,
            q_order,
            orbit_count,
        })
    }

    /// Orbits of multiplication by `q` on the units of `Z/mZ`, counted
    /// directly.
    fn orbit_count(&self) -> usize {
        let n = self.basis_index.len();
        let pos = |u: u64| self.basis_index.binary_search(&u).expect("unit");
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = self.basis_index[start];
            loop {
                let i = pos(x);
                if seen[i] {
                    break;
                }
                seen[i] = true;
                x = ((self.q as u128 * x as u128) % self.m as u128) as u64;
            }
        }
        count
    }

    /// Exact trace of the matrix spelled by `word`; off inertia this need
    /// not be rational.
    pub fn word_trace(&self, word: &[WordLetter]) -> CycloElt {
        let n = self.dim();
        let tau_inv = CycloMatrix::diagonal(
            &self.field,
            &self
                .basis_index
                .iter()
                .map(|&x| self.field.zeta_pow(-(x as i64)))
                .collect::<Vec<_>>(),
        );
        let phi_inv = self
            .phi
            .inverse_permutation()
            .expect("phi is a permutation by construction");
        let mut acc = CycloMatrix::identity(&self.field, n);
        for letter in word {
            let factor = match letter {
                WordLetter::Tau => &self.tau,
                WordLetter::TauInv => &tau_inv,
                WordLetter::Phi => &self.phi,
                WordLetter::PhiInv => &phi_inv,
            };
            acc = acc.mul(factor);
        }
        acc.trace()
    }

    /// Stable JSON document with the exact matrices as rational coefficient
    /// arrays: entry `[i][j]` is the coefficient vector of the power-basis
    /// expansion, each coefficient rendered `"n"` or `"n/d"`.
    pub fn to_json(&self) -> Value {
        let matrix = |m: &CycloMatrix| -> Value {
            Value::Array(
                (0..m.rows())
                    .map(|r| {
                        Value::Array(
                            (0..m.cols())
                                .map(|c| {
                                    Value::Array(
                                        m.get(r, c)
                                            .coeffs()
                                            .iter()
                                            .map(|x| Value::String(rational_string(x)))
                                            .collect(),
                                    )
                                })
                                .collect(),
                        )
                    })
                    .collect(),
            )
        };
        json!({
            "schema_version": "1",
            "m": self.m,
            "q": self.q,
            "dim": self.dim(),
            "basis_index": self.basis_index,
            "tau": matrix(&self.tau),
            "phi": matrix(&self.phi),
        })
    }
}

fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
