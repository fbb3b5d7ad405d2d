//! Exact dense matrices over `Q(zeta_m)`.

use std::fmt;

use super::elt::{CycloElt, CycloField};
use super::CycloError;

/// Dense matrix with all entries in one `Q(zeta_m)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloMatrix {
    field: CycloField,
    rows: usize,
    cols: usize,
    data: Vec<CycloElt>, // row-major
}

impl fmt::Debug for CycloMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycloMatrix(m={}, {}x{})", self.field.m(), self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl CycloMatrix {
    pub fn from_fn(
        field: &CycloField,
        rows: usize,
        cols: usize,
        mut entry: impl FnMut(usize, usize) -> CycloElt,
    ) -> CycloMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let e = entry(r, c);
                assert_eq!(e.m(), field.m(), "entry conductor");
                data.push(e);
            }
        }
        CycloMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn zero(field: &CycloField, rows: usize, cols: usize) -> CycloMatrix {
        CycloMatrix::from_fn(field, rows, cols, |_, _| field.zero())
    }

    pub fn identity(field: &CycloField, n: usize) -> CycloMatrix {
        CycloMatrix::from_fn(field, n, n, |r, c| {
            if r == c {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    /// Diagonal matrix from the given entries.
    pub fn diagonal(field: &CycloField, entries: &[CycloElt]) -> CycloMatrix {
        let n = entries.len();
        CycloMatrix::from_fn(field, n, n, |r, c| {
            if r == c {
                entries[r].clone()
            } else {
                field.zero()
            }
        })
    }

    /// Permutation matrix sending basis vector `e_j` to `e_(perm[j])`:
    /// entry `(perm[j], j)` is 1.
    pub fn permutation(field: &CycloField, perm: &[usize]) -> CycloMatrix {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &i in perm {
            assert!(i < n && !seen[i], "not a permutation");
            seen[i] = true;
        }
        CycloMatrix::from_fn(field, n, n, |r, c| {
            if perm[c] == r {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn m(&self) -> u64 {
        self.field.m()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycloElt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycloElt) {
        assert_eq!(v.m(), self.field.m(), "entry conductor");
        self.data[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| r == c || self.get(r, c).is_zero())
            })
    }

    /// Exact matrix product; panics on dimension mismatch or mixed
    /// conductors.
    pub fn mul(&self, rhs: &CycloMatrix) -> CycloMatrix {
        assert_eq!(self.field.m(), rhs.field.m(), "mixed conductors");
        assert_eq!(
            self.cols, rhs.rows,
            "product of {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = CycloMatrix::zero(&self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let t = &(a * b) + out.get(r, c);
                    out.set(r, c, t);
                }
            }
        }
        out
    }

    /// `self^e` by binary exponentiation; diagonal matrices take the entry-wise
    /// shortcut. Panics if not square.
    pub fn pow(&self, e: u64) -> CycloMatrix {
        assert!(self.is_square(), "power of a non-square matrix");
        if self.is_diagonal() {
            let entries: Vec<CycloElt> = (0..self.rows)
                .map(|i| self.get(i, i).pow(e))
                .collect();
            return CycloMatrix::diagonal(&self.field, &entries);
        }
        let mut acc = CycloMatrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn transpose(&self) -> CycloMatrix {
        CycloMatrix::from_fn(&self.field, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    /// True iff every entry is 0 or 1 with exactly one 1 per row and column.
    pub fn is_permutation(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let mut col_seen = vec![false; n];
        for r in 0..n {
            let mut row_one = None;
            for c in 0..n {
                let e = self.get(r, c);
                if e.is_zero() {
                    continue;
                }
                if !e.is_one() || row_one.is_some() {
                    return false;
                }
                row_one = Some(c);
            }
            match row_one {
                Some(c) if !col_seen[c] => col_seen[c] = true,
                _ => return false,
            }
        }
        true
    }

    /// Inverse of a permutation matrix (its transpose). Matrices without
    /// permutation structure are rejected; nothing here inverts a general
    /// matrix.
    pub fn inverse_permutation(&self) -> Result<CycloMatrix, CycloError> {
        if !self.is_permutation() {
            return Err(CycloError::NotAPermutation);
        }
        Ok(self.transpose())
    }

    /// Sum of the diagonal entries. Panics if not square.
    pub fn trace(&self) -> CycloElt {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut acc = self.field.zero();
        for i in 0..self.rows {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Entry-wise sum. Panics on shape mismatch.
    pub fn add(&self, rhs: &CycloMatrix) -> CycloMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape");
        CycloMatrix::from_fn(&self.field, self.rows, self.cols, |r, c| {
            self.get(r, c) + rhs.get(r, c)
        })
    }

    /// Multiply every entry by a fixed element.
    pub fn scale(&self, s: &CycloElt) -> CycloMatrix {
        CycloMatrix::from_fn(&self.field, self.rows, self.cols, |r, c| {
            let e = self.get(r, c);
            if e.is_zero() {
                self.field.zero()
            } else {
                e * s
            }
        })
    }
}
