use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Sparse exact vector: entries sorted by index, no stored zeros.
///
/// The representation is canonical, so structural equality is mathematical
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn unit(field: Field, dim: usize, index: usize) -> Self {
        assert!(index < dim, "unit vector index {index} out of range {dim}");
        Vector {
            dim,
            entries: vec![(index, field.one())],
        }
    }

    /// Builds a vector from unsorted entries, summing duplicates.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc = Accumulator::new(dim);
        for (i, c) in entries {
            acc.add(i, &c);
        }
        acc.finish()
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        Vector {
            dim: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub(crate) fn from_sorted_unchecked(dim: usize, entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(i, c)| *i < dim && !c.is_zero()));
        Vector { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn to_dense(&self, field: Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); self.dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zeros(self.dim);
        }
        Vector {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    /// `self + c * other`, merging the sorted entry lists.
    pub fn axpy(&self, c: &Scalar, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        let v = y * c;
                        if !v.is_zero() {
                            out.push((*j, v));
                        }
                        b.next();
                    } else {
                        let v = x + &(y * c);
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    let v = y * c;
                    if !v.is_zero() {
                        out.push((*j, v));
                    }
                    b.next();
                }
                (None, None) => break,
            }
        }
        Vector {
            dim: self.dim,
            entries: out,
        }
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.same_dim(other)?;
        Ok(match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.axpy(&c.field().one(), other),
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.same_dim(other)?;
        Ok(match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.axpy(&c.field().from_i64(-1), other),
        })
    }

    /// Tensor product with row-major flat indexing: `(i, j) -> i * other.dim + j`.
    pub fn tensor(&self, other: &Vector) -> Vector {
        let mut entries = Vec::with_capacity(self.entries.len() * other.entries.len());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                entries.push((i * other.dim + j, x * y));
            }
        }
        Vector {
            dim: self.dim * other.dim,
            entries,
        }
    }

    fn same_dim(&self, other: &Vector) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::dims(
                format!("vector of dim {}", self.dim),
                format!("vector of dim {}", other.dim),
            ));
        }
        Ok(())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[dim {}:", self.dim)?;
        for (i, c) in &self.entries {
            write!(f, " {i}:{c}")?;
        }
        write!(f, "]")
    }
}

/// Hash-based accumulator for sums of sparse terms.
pub(crate) struct Accumulator {
    dim: usize,
    terms: HashMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new(dim: usize) -> Self {
        Accumulator {
            dim,
            terms: HashMap::new(),
        }
    }

    pub fn add(&mut self, index: usize, c: &Scalar) {
        debug_assert!(index < self.dim, "index {index} out of range {}", self.dim);
        match self.terms.get_mut(&index) {
            Some(x) => *x = &*x + c,
            None => {
                self.terms.insert(index, c.clone());
            }
        }
    }

    pub fn add_owned(&mut self, index: usize, c: Scalar) {
        debug_assert!(index < self.dim, "index {index} out of range {}", self.dim);
        match self.terms.get_mut(&index) {
            Some(x) => *x = &*x + &c,
            None => {
                self.terms.insert(index, c);
            }
        }
    }

    pub fn finish(self) -> Vector {
        let mut entries: Vec<(usize, Scalar)> = self
            .terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        entries.sort_unstable_by_key(|(i, _)| *i);
        Vector {
            dim: self.dim,
            entries,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_are_canonical() {
        let q = Field::Rational;
        let v = Vector::from_entries(
            4,
            [(2, q.from_i64(1)), (0, q.from_i64(3)), (2, q.from_i64(-1))],
        );
        assert_eq!(v.entries(), &[(0, q.from_i64(3))]);
        assert_eq!(v, Vector::from_dense(&v.to_dense(q)));
    }

    #[test]
    fn axpy_cancels() {
        let q = Field::Rational;
        let a = Vector::from_entries(3, [(0, q.one()), (1, q.from_i64(2))]);
        let b = Vector::from_entries(3, [(1, q.one()), (2, q.one())]);
        let c = a.axpy(&q.from_i64(-2), &b);
        assert_eq!(
            c,
            Vector::from_entries(3, [(0, q.one()), (2, q.from_i64(-2))])
        );
    }

    #[test]
    fn tensor_uses_row_major_indices() {
        let q = Field::Rational;
        let e1 = Vector::unit(q, 2, 1);
        let e2 = Vector::unit(q, 3, 2);
        assert_eq!(e1.tensor(&e2), Vector::unit(q, 6, 5));
    }
}
