//! Exact right-nullspace computation by Gaussian elimination over
//! `Q(zeta_m)`.
//!
//! Rows are kept sparse (commutant systems have at most a handful of nonzero
//! entries per equation) and pivots are chosen as the first nonzero entry in
//! column order; magnitude pivoting is pointless in exact arithmetic. Each
//! pivot row is normalized once by a field inverse and subtracted only from
//! the rows that actually meet its column, so entries built from roots of
//! unity stay small instead of accumulating pivot products.

use super::elt::{CycloElt, CycloField};
use super::matrix::CycloMatrix;
use super::{CycloError, NULLSPACE_COL_BOUND};

/// Result of an exact elimination: the rank and a basis of the right
/// nullspace. `rank + basis.len() == cols` always.
#[derive(Debug, Clone)]
pub struct Nullspace {
    pub rank: usize,
    pub basis: Vec<Vec<CycloElt>>,
}

/// One equation as `(column, coefficient)` pairs sorted by column, zero
/// coefficients omitted.
pub type SparseRow = Vec<(usize, CycloElt)>;

fn sparse_get(row: &SparseRow, col: usize) -> Option<&CycloElt> {
    row.binary_search_by_key(&col, |&(c, _)| c)
        .ok()
        .map(|i| &row[i].1)
}

/// `r - a * pivot` over the union of supports; `pivot` is normalized so its
/// leading coefficient is 1.
fn eliminate(r: &SparseRow, a: &CycloElt, pivot: &SparseRow) -> SparseRow {
    let mut out = SparseRow::with_capacity(r.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < pivot.len() {
        let (col, val) = if j >= pivot.len() || (i < r.len() && r[i].0 < pivot[j].0) {
            i += 1;
            (r[i - 1].0, r[i - 1].1.clone())
        } else if i >= r.len() || pivot[j].0 < r[i].0 {
            j += 1;
            (pivot[j - 1].0, -&(a * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (r[i - 1].0, &r[i - 1].1 - &(a * &pivot[j - 1].1))
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

fn normalize(row: &SparseRow) -> SparseRow {
    let inv = row[0].1.inverse().expect("pivot entry is nonzero");
    row.iter()
        .map(|(c, v)| (*c, v * &inv))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

/// Basis of `{v : A v = 0}` over `Q(zeta_m)`, with the rank from the same
/// elimination.
pub fn nullspace(a: &CycloMatrix) -> Result<Nullspace, CycloError> {
    let rows = (0..a.rows()).map(|r| {
        (0..a.cols())
            .filter_map(|c| {
                let e = a.get(r, c);
                if e.is_zero() {
                    None
                } else {
                    Some((c, e.clone()))
                }
            })
            .collect::<SparseRow>()
    });
    nullspace_sparse(a.field(), a.cols(), rows)
}

/// Same elimination on rows given sparsely; the entry point for large
/// structured systems like commutant equations, which would be wasteful to
/// densify.
pub fn nullspace_sparse(
    field: &CycloField,
    cols: usize,
    rows: impl IntoIterator<Item = SparseRow>,
) -> Result<Nullspace, CycloError> {
    if cols > NULLSPACE_COL_BOUND {
        return Err(CycloError::MatrixBound {
            dim: cols,
            bound: NULLSPACE_COL_BOUND,
        });
    }
    let mut active: Vec<SparseRow> = rows
        .into_iter()
        .inspect(|r| {
            debug_assert!(r.windows(2).all(|w| w[0].0 < w[1].0), "sorted sparse row");
            debug_assert!(r.iter().all(|(c, v)| *c < cols && !v.is_zero()));
        })
        .filter(|r| !r.is_empty())
        .collect();

    let mut rref: Vec<(usize, SparseRow)> = Vec::new();
    while !active.is_empty() {
        let best = active
            .iter()
            .enumerate()
            .min_by_key(|(i, r)| (r[0].0, *i))
            .map(|(i, _)| i)
            .expect("nonempty");
        let pivot_row = normalize(&active.remove(best));
        let pc = pivot_row[0].0;
        for row in active.iter_mut() {
            if let Some(a_val) = sparse_get(row, pc) {
                let a_val = a_val.clone();
                *row = eliminate(row, &a_val, &pivot_row);
            }
        }
        active.retain(|r| !r.is_empty());
        rref.push((pc, pivot_row));
    }

    // back-eliminate above each pivot to reach reduced row echelon form
    let rank = rref.len();
    for i in (0..rank).rev() {
        let (pc_i, row_i) = rref[i].clone();
        for j in 0..i {
            if let Some(coef) = sparse_get(&rref[j].1, pc_i) {
                let coef = coef.clone();
                rref[j].1 = eliminate(&rref[j].1, &coef, &row_i);
            }
        }
    }

    let mut is_pivot = vec![false; cols];
    for &(pc, _) in &rref {
        is_pivot[pc] = true;
    }
    let mut basis = Vec::with_capacity(cols - rank);
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); cols];
        v[f] = field.one();
        for (pc, row) in &rref {
            if let Some(coef) = sparse_get(row, f) {
                v[*pc] = -coef;
            }
        }
        basis.push(v);
    }
    debug_assert_eq!(rank + basis.len(), cols);
    Ok(Nullspace { rank, basis })
}
