//! Linear algebra over `Z4`: Howell normal form, code type `4^k1 2^k2`,
//! membership and sums of codes.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::ring::Z4;

/// A dense row-major matrix over `Z4`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Z4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Z4>,
}

impl Z4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Z4Matrix {
        Z4Matrix {
            rows,
            cols,
            data: vec![Z4::ZERO; rows * cols],
        }
    }

    /// Builds a matrix from rows that must all have `cols` entries.
    pub fn from_rows(cols: usize, rows: &[Vec<Z4>]) -> Result<Z4Matrix, Error> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::RaggedMatrix {
                    row: i,
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Z4Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers, reduced mod 4.
    pub fn from_u8_rows(cols: usize, rows: &[&[u8]]) -> Result<Z4Matrix, Error> {
        let rows: Vec<Vec<Z4>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Z4::new(v)).collect())
            .collect();
        Z4Matrix::from_rows(cols, &rows)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Z4] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Z4 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Z4) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Z4]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Z4Matrix) -> Result<Z4Matrix, Error> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Z4Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scaled(&self, c: Z4) -> Z4Matrix {
        Z4Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| v * c).collect(),
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Z4Matrix) -> Result<Z4Matrix, Error> {
        if self.rows != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Z4Matrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }
}

/// A basis row of a Howell form: its pivot column and pivot value (1 or 2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Pivot {
    pub col: usize,
    pub value: Z4,
}

/// A linear code over `Z4` held in Howell normal form.
///
/// Rows are in echelon order with pivots 1 or 2, entries above a pivot are
/// reduced modulo it, and `2 * row` of every pivot-2 row lies in the span of
/// the rows below it. Two matrices span the same code iff their Howell forms
/// are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Z4Code {
    length: usize,
    basis: Vec<Vec<Z4>>,
    pivots: Vec<Pivot>,
}

fn sub_scaled(dst: &mut [Z4], src: &[Z4], c: Z4) {
    if c.is_zero() {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        *d -= c * s;
    }
}

impl Z4Code {
    /// The zero code of the given length.
    pub fn zero(length: usize) -> Z4Code {
        Z4Code {
            length,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Howell form of the row span of `m`.
    pub fn howell_form(m: &Z4Matrix) -> Z4Code {
        Z4Code::from_row_vecs(m.cols(), m.row_iter().map(|r| r.to_vec()).collect())
    }

    /// Howell form of the span of `rows`, each of length `length`.
    pub fn from_rows(length: usize, rows: &[Vec<Z4>]) -> Result<Z4Code, Error> {
        for r in rows {
            if r.len() != length {
                return Err(Error::LengthMismatch {
                    expected: length,
                    found: r.len(),
                });
            }
        }
        Ok(Z4Code::from_row_vecs(length, rows.to_vec()))
    }

    fn from_row_vecs(length: usize, mut rows: Vec<Vec<Z4>>) -> Z4Code {
        rows.retain(|r| r.iter().any(|v| !v.is_zero()));
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..length {
            if top == rows.len() {
                break;
            }
            if let Some(i) = (top..rows.len()).find(|&i| rows[i][col].is_unit()) {
                rows.swap(top, i);
                if rows[top][col] == Z4::THREE {
                    for v in rows[top].iter_mut() {
                        *v = -*v;
                    }
                }
                let pivot_row = rows[top].clone();
                for (j, r) in rows.iter_mut().enumerate() {
                    if j != top {
                        let c = r[col];
                        sub_scaled(r, &pivot_row, c);
                    }
                }
                pivots.push(Pivot {
                    col,
                    value: Z4::ONE,
                });
                top += 1;
            } else if let Some(i) = (top..rows.len()).find(|&i| rows[i][col] == Z4::TWO) {
                rows.swap(top, i);
                let pivot_row = rows[top].clone();
                for (j, r) in rows.iter_mut().enumerate() {
                    if j == top {
                        continue;
                    }
                    // below: entries are 0 or 2; above: reduce into {0, 1}
                    if r[col].value() >= 2 {
                        sub_scaled(r, &pivot_row, Z4::ONE);
                    }
                }
                let doubled: Vec<Z4> = pivot_row.iter().map(|&v| v * Z4::TWO).collect();
                if doubled.iter().any(|v| !v.is_zero()) {
                    rows.push(doubled);
                }
                pivots.push(Pivot {
                    col,
                    value: Z4::TWO,
                });
                top += 1;
            }
            // drop rows that became zero below the processed block
            let tail = rows.split_off(top);
            rows.extend(tail.into_iter().filter(|r| r.iter().any(|v| !v.is_zero())));
        }
        rows.truncate(top);
        Z4Code {
            length,
            basis: rows,
            pivots,
        }
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn basis(&self) -> &[Vec<Z4>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[Pivot] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Z4Matrix {
        Z4Matrix::from_rows(self.length, &self.basis).expect("basis rows have code length")
    }

    /// Number of rows with pivot 1.
    pub fn k1(&self) -> usize {
        self.pivots.iter().filter(|p| p.value == Z4::ONE).count()
    }

    /// Number of rows with pivot 2.
    pub fn k2(&self) -> usize {
        self.pivots.iter().filter(|p| p.value == Z4::TWO).count()
    }

    /// `log2 |C| = 2 k1 + k2`.
    pub fn log2_size(&self) -> u32 {
        (2 * self.k1() + self.k2()) as u32
    }

    /// `|C|`, if it fits in a `u128`.
    pub fn size(&self) -> Option<u128> {
        1u128.checked_shl(self.log2_size())
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coefficient range of each basis row in the unique-expansion of a
    /// codeword: 4 for pivot-1 rows, 2 for pivot-2 rows.
    pub fn radices(&self) -> Vec<u8> {
        self.pivots
            .iter()
            .map(|p| if p.value == Z4::ONE { 4 } else { 2 })
            .collect()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is a member.
    pub fn reduce(&self, v: &[Z4]) -> Result<Vec<Z4>, Error> {
        if v.len() != self.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                found: v.len(),
            });
        }
        let mut w = v.to_vec();
        for (row, p) in self.basis.iter().zip(&self.pivots) {
            let c = w[p.col];
            if p.value == Z4::ONE {
                sub_scaled(&mut w, row, c);
            } else if c.value() >= 2 {
                sub_scaled(&mut w, row, Z4::ONE);
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[Z4]) -> Result<bool, Error> {
        Ok(self.reduce(v)?.iter().all(|x| x.is_zero()))
    }

    /// `C1 + C2`, the smallest code containing both.
    pub fn sum(&self, other: &Z4Code) -> Result<Z4Code, Error> {
        if self.length != other.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                found: other.length,
            });
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Z4Code::from_row_vecs(self.length, rows))
    }

    /// The codeword `sum coeffs[i] * basis[i]`.
    pub fn combine(&self, coeffs: &[u8]) -> Vec<Z4> {
        let mut w = vec![Z4::ZERO; self.length];
        for (row, &c) in self.basis.iter().zip(coeffs) {
            let c = Z4::new(c);
            if c.is_zero() {
                continue;
            }
            for (x, &r) in w.iter_mut().zip(row) {
                *x += c * r;
            }
        }
        w
    }

    /// Every codeword in counting order of the basis coefficients, first
    /// basis row most significant. Refuses codes larger than `budget`.
    pub fn codewords(&self, budget: u64) -> Result<Codewords<'_>, Error> {
        let log2 = self.log2_size();
        if log2 >= 64 || (1u64 << log2) > budget {
            return Err(Error::BudgetExceeded {
                log2_size: log2,
                budget,
                upper_bound: None,
            });
        }
        Ok(Codewords {
            code: self,
            radices: self.radices(),
            digits: vec![0; self.basis.len()],
            done: false,
        })
    }
}

/// Iterator returned by [`Z4Code::codewords`].
pub struct Codewords<'a> {
    code: &'a Z4Code,
    radices: Vec<u8>,
    digits: Vec<u8>,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = Vec<Z4>;

    fn next(&mut self) -> Option<Vec<Z4>> {
        if self.done {
            return None;
        }
        let out = self.code.combine(&self.digits);
        // increment, last digit least significant
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < self.radices[i] {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}
