//! Dense matrices over GF(4) as lists of packed row vectors.

use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{Gf4, Gf4Vector};

#[derive(Clone, PartialEq, Eq)]
pub struct Gf4Matrix {
    cols: usize,
    rows: Vec<Gf4Vector>,
}

/// Output of [`Gf4Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// Reduced row-echelon form, same shape as the input; zero rows last.
    pub matrix: Gf4Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination on `rows`, visiting columns in `order`.
///
/// For each column, the topmost row at or below the current pivot row with
/// a nonzero entry becomes the pivot; it is normalised to 1 and the column
/// is cleared in every other row. Returns the pivot columns; pivot `i`
/// lives in row `i`.
pub(crate) fn eliminate(rows: &mut [Gf4Vector], order: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in order {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].get(c).is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r].get(c).inv().expect("pivot is nonzero");
        if inv != Gf4::ONE {
            rows[r] = rows[r].scale(inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r {
                let f = row.get(c);
                if !f.is_zero() {
                    row.add_scaled(f, &pivot_row);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl Gf4Matrix {
    pub fn new(cols: usize, rows: Vec<Gf4Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch { left: cols, right: bad.len() });
        }
        Ok(Gf4Matrix { cols, rows })
    }

    /// Matrix with no rows (the zero subspace of GF(4)^cols).
    pub fn empty(cols: usize) -> Self {
        Gf4Matrix { cols, rows: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Gf4Matrix { cols: n, rows: (0..n).map(|i| Gf4Vector::unit(n, i)).collect() }
    }

    pub fn from_symbols(cols: usize, rows: &[Vec<Gf4>]) -> Result<Self> {
        Self::new(cols, rows.iter().map(|r| Gf4Vector::from_symbols(r)).collect())
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Gf4Vector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Gf4Vector> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Gf4 {
        self.rows[r].get(c)
    }

    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let pivots = eliminate(&mut rows, 0..self.cols);
        Rref { rank: pivots.len(), pivots, matrix: Gf4Matrix { cols: self.cols, rows } }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of the row space, in reduced row-echelon form.
    pub fn basis(&self) -> Gf4Matrix {
        let Rref { mut matrix, rank, .. } = self.rref();
        matrix.rows.truncate(rank);
        matrix
    }

    pub fn conj(&self) -> Gf4Matrix {
        Gf4Matrix { cols: self.cols, rows: self.rows.iter().map(Gf4Vector::conj).collect() }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch { left: self.cols, right: other.cols });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Gf4Matrix { cols: self.cols, rows })
    }

    /// Basis of `{v : Σ v_i g_i = 0 for every row g}`.
    pub fn euclidean_dual(&self) -> Gf4Matrix {
        let Rref { matrix, rank, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = Gf4Vector::unit(self.cols, f);
                // v_f = 1 and v_{p_i} = -R[i][f]; characteristic 2.
                for (i, &p) in pivots.iter().enumerate().take(rank) {
                    v.set(p, matrix.rows[i].get(f));
                }
                v
            })
            .collect();
        Gf4Matrix { cols: self.cols, rows }
    }

    /// Basis of `{v : ⟨v, g⟩_h = 0 for every row g}`.
    pub fn hermitian_dual(&self) -> Gf4Matrix {
        self.conj().euclidean_dual()
    }

    /// Intersection and sum of the row spaces of `self` and `other`.
    pub fn meet_join(&self, other: &Gf4Matrix) -> Result<(Gf4Matrix, Gf4Matrix)> {
        let join = self.stack(other)?.basis();
        let meet = self.euclidean_dual().stack(&other.euclidean_dual())?.euclidean_dual().basis();
        Ok((meet, join))
    }

    pub fn intersection(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        Ok(self.meet_join(other)?.0)
    }

    pub fn sum(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        Ok(self.stack(other)?.basis())
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &Gf4Vector) -> bool {
        if v.len() != self.cols {
            return false;
        }
        let mut rows = self.rows.clone();
        let r = eliminate(&mut rows, 0..self.cols).len();
        rows.truncate(r);
        rows.push(v.clone());
        eliminate(&mut rows, 0..self.cols).len() == r
    }

    /// Row space of `self` is contained in the row space of `other`.
    pub fn is_subspace_of(&self, other: &Gf4Matrix) -> bool {
        self.cols == other.cols
            && match self.stack(other) {
                Ok(s) => s.rank() == other.rank(),
                Err(_) => false,
            }
    }

    pub fn same_row_space(&self, other: &Gf4Matrix) -> bool {
        self.cols == other.cols && self.basis() == other.basis()
    }

    /// `G_{ij} = ⟨r_i, r_j⟩_h`.
    pub fn hermitian_gram(&self) -> Vec<Vec<Gf4>> {
        self.rows
            .iter()
            .map(|u| self.rows.iter().map(|v| u.hermitian_inner(v).expect("same length")).collect())
            .collect()
    }

    /// Every pair of rows (including each row with itself) is Hermitian-orthogonal.
    pub fn is_hermitian_self_orthogonal(&self) -> bool {
        self.hermitian_gram().iter().flatten().all(|x| x.is_zero())
    }

    /// Applies `f` to every row.
    pub fn map_rows(&self, f: impl Fn(&Gf4Vector) -> Gf4Vector) -> Gf4Matrix {
        let rows: Vec<_> = self.rows.iter().map(f).collect();
        let cols = rows.first().map_or(self.cols, Gf4Vector::len);
        Gf4Matrix { cols, rows }
    }
}

impl fmt::Debug for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf4Matrix {}x{}", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}
