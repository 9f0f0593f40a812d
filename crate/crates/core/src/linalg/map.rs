use std::fmt;

use rayon::prelude::*;

use super::vector::{Accumulator, Vector};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Exact linear map between tensor-power basis spaces, stored by columns:
/// column `j` is the image of the basis vector `e_j`.
///
/// Basis vector `e_i ⊗ e_j` of an `n ⊗ m` space has flat index `i * m + j`,
/// applied recursively for higher tensor powers.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    field: Field,
    rows: usize,
    cols: usize,
    columns: Vec<Vector>,
}

impl LinearMap {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        LinearMap {
            field,
            rows,
            cols,
            columns: vec![Vector::zeros(rows); cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        LinearMap {
            field,
            rows: n,
            cols: n,
            columns: (0..n).map(|i| Vector::unit(field, n, i)).collect(),
        }
    }

    pub fn from_columns(field: Field, rows: usize, columns: Vec<Vector>) -> Result<Self> {
        for (j, col) in columns.iter().enumerate() {
            if col.dim() != rows {
                return Err(Error::dims(
                    format!("{rows}-row map"),
                    format!("column {j} of dim {}", col.dim()),
                ));
            }
            if let Some((_, c)) = col.first() {
                if c.field() != field {
                    return Err(Error::FieldMismatch {
                        expected: field,
                        found: c.field(),
                    });
                }
            }
        }
        Ok(LinearMap {
            field,
            rows,
            cols: columns.len(),
            columns,
        })
    }

    /// Builds a map column by column; columns are evaluated in parallel.
    pub fn from_fn<F>(field: Field, rows: usize, cols: usize, column: F) -> Self
    where
        F: Fn(usize) -> Vector + Sync,
    {
        let columns: Vec<Vector> = (0..cols).into_par_iter().map(&column).collect();
        debug_assert!(columns.iter().all(|c| c.dim() == rows));
        LinearMap {
            field,
            rows,
            cols,
            columns,
        }
    }

    /// Builds a map from `(row, col, value)` triples, summing duplicates.
    pub fn from_triples(
        field: Field,
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut accs: Vec<Accumulator> = (0..cols).map(|_| Accumulator::new(rows)).collect();
        for (i, j, c) in triples {
            if i >= rows || j >= cols {
                return Err(Error::dims(
                    format!("{rows}x{cols} map"),
                    format!("entry ({i}, {j})"),
                ));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch {
                    expected: field,
                    found: c.field(),
                });
            }
            accs[j].add_owned(i, c);
        }
        Ok(LinearMap {
            field,
            rows,
            cols,
            columns: accs.into_iter().map(Accumulator::finish).collect(),
        })
    }

    pub fn from_dense(field: Field, dense: &[Vec<Scalar>]) -> Result<Self> {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        if dense.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged dense matrix".into()));
        }
        LinearMap::from_triples(
            field,
            rows,
            cols,
            dense.iter().enumerate().flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(j, c)| (i, j, c.clone()))
            }),
        )
    }

    /// The `nm x nm` permutation `e_i ⊗ e_j ↦ e_j ⊗ e_i`.
    pub fn flip(field: Field, n: usize, m: usize) -> Self {
        LinearMap::from_fn(field, n * m, n * m, |col| {
            let (i, j) = (col / m, col % m);
            Vector::unit(field, n * m, j * n + i)
        })
    }

    /// Permutation of tensor factors: the input has factor dimensions `dims`,
    /// and output factor `k` is input factor `order[k]`.
    pub fn permutation(field: Field, dims: &[usize], order: &[usize]) -> Self {
        assert_eq!(dims.len(), order.len(), "permutation arity mismatch");
        let mut seen = vec![false; dims.len()];
        for &k in order {
            assert!(!seen[k], "order is not a permutation");
            seen[k] = true;
        }
        let total: usize = dims.iter().product();
        let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
        LinearMap::from_fn(field, total, total, |col| {
            let mut rem = col;
            let mut multi = vec![0; dims.len()];
            for k in (0..dims.len()).rev() {
                multi[k] = rem % dims[k];
                rem /= dims[k];
            }
            let row = order
                .iter()
                .zip(&out_dims)
                .fold(0, |acc, (&k, &d)| acc * d + multi[k]);
            Vector::unit(field, total, row)
        })
    }

    /// The `n x 1` map sending 1 to `v`.
    pub fn from_vector(field: Field, v: Vector) -> Self {
        LinearMap {
            field,
            rows: v.dim(),
            cols: 1,
            columns: vec![v],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn column(&self, j: usize) -> &Vector {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vector] {
        &self.columns
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.columns[j]
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vector::nnz).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.entries() {
                out[*i][j] = c.clone();
            }
        }
        out
    }

    /// Applies the map to a vector of matching dimension.
    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.cols, "vector dim does not match map domain");
        let mut acc = Accumulator::new(self.rows);
        for (j, c) in v.entries() {
            for (i, x) in self.columns[*j].entries() {
                acc.add_owned(*i, x * c);
            }
        }
        acc.finish()
    }

    /// Matrix product `self · g`: apply `g` first.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap> {
        self.same_field(g)?;
        if self.cols != g.rows {
            return Err(Error::dims(self.shape_label(), g.shape_label()));
        }
        Ok(LinearMap::from_fn(self.field, self.rows, g.cols, |j| {
            self.apply(&g.columns[j])
        }))
    }

    /// Kronecker product `self ⊗ g` in the row-major index convention.
    pub fn kron(&self, g: &LinearMap) -> Result<LinearMap> {
        self.same_field(g)?;
        let cols = self.cols * g.cols;
        Ok(LinearMap::from_fn(
            self.field,
            self.rows * g.rows,
            cols,
            |col| {
                let (j1, j2) = (col / g.cols, col % g.cols);
                self.columns[j1].tensor(&g.columns[j2])
            },
        ))
    }

    pub fn transpose(&self) -> LinearMap {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.entries() {
                rows[*i].push((j, c.clone()));
            }
        }
        LinearMap {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            columns: rows
                .into_iter()
                .map(|r| Vector::from_sorted_unchecked(self.cols, r))
                .collect(),
        }
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.same_field(other)?;
        self.same_shape(other)?;
        Ok(LinearMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.axpy(&self.field.one(), b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.same_field(other)?;
        self.same_shape(other)?;
        let minus_one = self.field.from_i64(-1);
        Ok(LinearMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.axpy(&minus_one, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.columns.iter().enumerate().all(|(j, col)| {
                col.nnz() == 1 && col.entries()[0].0 == j && col.entries()[0].1.is_one()
            })
    }

    /// Rows of the map as sparse vectors of length `cols`.
    pub fn row_vectors(&self) -> Vec<Vector> {
        self.transpose().columns
    }

    /// Re-expresses every entry in `target`.
    pub fn convert(&self, target: Field) -> Result<LinearMap> {
        if target == self.field {
            return Ok(self.clone());
        }
        let columns = self
            .columns
            .iter()
            .map(|col| -> Result<Vector> {
                let entries = col
                    .entries()
                    .iter()
                    .map(|(i, c)| Ok((*i, c.convert(target)?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Vector::from_entries(col.dim(), entries))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearMap {
            field: target,
            rows: self.rows,
            cols: self.cols,
            columns,
        })
    }

    pub(crate) fn shape_label(&self) -> String {
        format!("{}x{} map", self.rows, self.cols)
    }

    fn same_field(&self, other: &LinearMap) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: other.field,
            });
        }
        Ok(())
    }

    fn same_shape(&self, other: &LinearMap) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::dims(self.shape_label(), other.shape_label()));
        }
        Ok(())
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "LinearMap {}x{} over {}",
            self.rows, self.cols, self.field
        )?;
        for (j, col) in self.columns.iter().enumerate() {
            writeln!(f, "  col {j}: {col:?}")?;
        }
        Ok(())
    }
}

/// Matrix product `f · g` (apply `g` first).
pub fn compose(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    f.compose(g)
}

/// Kronecker product `f ⊗ g`.
pub fn kron(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    f.kron(g)
}

/// Tensor flip `n ⊗ m → m ⊗ n`.
pub fn flip(field: Field, n: usize, m: usize) -> LinearMap {
    LinearMap::flip(field, n, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn identity_composition() {
        let id = LinearMap::identity(q(), 2);
        assert_eq!(compose(&id, &id).unwrap(), id);
    }

    #[test]
    fn kron_of_identities() {
        let k = kron(&LinearMap::identity(q(), 2), &LinearMap::identity(q(), 3)).unwrap();
        assert_eq!(k, LinearMap::identity(q(), 6));
    }

    #[test]
    fn flip_examples() {
        assert_eq!(flip(q(), 1, 4), LinearMap::identity(q(), 4));
        let f = flip(q(), 2, 2);
        assert_eq!(f.column(1), &Vector::unit(q(), 4, 2));
        for (n, m) in [(2, 3), (3, 1), (4, 2)] {
            let round = compose(&flip(q(), m, n), &flip(q(), n, m)).unwrap();
            assert!(round.is_identity());
        }
    }

    #[test]
    fn kron_column_is_tensor_of_columns() {
        let f = LinearMap::from_dense(
            q(),
            &[
                vec![q().from_i64(1), q().from_i64(2)],
                vec![q().from_i64(0), q().from_i64(3)],
            ],
        )
        .unwrap();
        let g = LinearMap::from_dense(q(), &[vec![q().from_i64(5), q().from_i64(-1), q().one()]])
            .unwrap();
        let k = kron(&f, &g).unwrap();
        for j1 in 0..2 {
            for j2 in 0..3 {
                assert_eq!(k.column(j1 * 3 + j2), &f.column(j1).tensor(g.column(j2)));
            }
        }
    }

    #[test]
    fn mismatches_are_errors() {
        let a = LinearMap::identity(q(), 2);
        let b = LinearMap::identity(q(), 3);
        let err = compose(&a, &b).unwrap_err().to_string();
        assert!(err.contains("2x2") && err.contains("3x3"), "{err}");
        let p = LinearMap::identity(Field::prime(5).unwrap(), 2);
        assert!(matches!(compose(&a, &p), Err(Error::FieldMismatch { .. })));
        assert!(matches!(kron(&a, &p), Err(Error::FieldMismatch { .. })));
    }
}
