//! Exact characteristic polynomials over `Q(zeta_m)`.

use num_bigint::BigInt;

use super::elt::{CycloElt, Rational};
use super::matrix::CycloMatrix;
use super::{CycloError, CHARPOLY_DIM_BOUND};

/// Monic characteristic polynomial `det(X I - A)`, ascending coefficients of
/// length `n + 1`.
///
/// Diagonal matrices expand the product of linear factors directly; the
/// general case runs Faddeev-LeVerrier, whose only divisions are by the
/// integers `1..=n` and therefore stay exact.
pub fn charpoly(a: &CycloMatrix) -> Result<Vec<CycloElt>, CycloError> {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let n = a.rows();
    if n > CHARPOLY_DIM_BOUND {
        return Err(CycloError::MatrixBound {
            dim: n,
            bound: CHARPOLY_DIM_BOUND,
        });
    }
    if a.is_diagonal() {
        let entries: Vec<CycloElt> = (0..n).map(|i| a.get(i, i).clone()).collect();
        return Ok(product_of_linear_factors(a.field(), &entries));
    }
    Ok(faddeev_leverrier(a))
}

/// Expand `prod_i (X - roots[i])` exactly.
pub(crate) fn product_of_linear_factors(
    field: &super::elt::CycloField,
    roots: &[CycloElt],
) -> Vec<CycloElt> {
    let mut coeffs = vec![field.one()];
    for r in roots {
        // multiply by (X - r)
        let mut next = vec![field.zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            if !c.is_zero() && !r.is_zero() {
                next[i] = &next[i] - &(c * r);
            }
        }
        coeffs = next;
    }
    coeffs
}

/// Faddeev-LeVerrier recurrence: `M_1 = A`, `c_(n-1) = -tr(M_1)`, then
/// `M_k = A (M_(k-1) + c_(n-k+1) I)` and `c_(n-k) = -tr(M_k)/k`.
pub(crate) fn faddeev_leverrier(a: &CycloMatrix) -> Vec<CycloElt> {
    let field = a.field();
    let n = a.rows();
    let mut coeffs = vec![field.zero(); n + 1];
    coeffs[n] = field.one();
    if n == 0 {
        return coeffs;
    }
    let identity = CycloMatrix::identity(field, n);
    let mut m = a.clone();
    coeffs[n - 1] = -&m.trace();
    for k in 2..=n {
        let shifted = m.add(&identity.scale(&coeffs[n - k + 1]));
        m = a.mul(&shifted);
        let t = m.trace();
        coeffs[n - k] = -&t.scale(&Rational::new(BigInt::from(1), BigInt::from(k)));
    }
    coeffs
}
