//! Exact row reduction: canonical subspace bases, nullspaces, linear solves.

use std::collections::BTreeMap;

use serde::Serialize;

use super::map::LinearMap;
use super::vector::{Accumulator, Vector};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Incrementally built echelon form. Each stored row has a leading 1 at its
/// key column; rows are only forward-reduced until [`Echelon::into_rref`].
#[derive(Default)]
pub(crate) struct Echelon {
    pivots: BTreeMap<usize, Vector>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots; stores it if independent.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, row: Vector) -> bool {
        match self.reduce_leading(row) {
            None => false,
            Some((lead, row)) => {
                self.pivots.insert(lead, row);
                true
            }
        }
    }

    /// Forward-reduces `row` until its leading column is not a pivot.
    /// Returns the normalised row and its leading column, or `None` if it vanishes.
    fn reduce_leading(&self, mut row: Vector) -> Option<(usize, Vector)> {
        loop {
            let (lead, c) = row.first()?.clone();
            match self.pivots.get(&lead) {
                Some(p) => row = row.axpy(&-&c, p),
                None => {
                    let inv = c.inv().expect("nonzero leading entry");
                    return Some((lead, row.scale(&inv)));
                }
            }
        }
    }

    /// Back-substitutes to the unique reduced row-echelon form, ordered by pivot.
    pub fn into_rref(self) -> Vec<(usize, Vector)> {
        let mut done: BTreeMap<usize, Vector> = BTreeMap::new();
        for (pivot, row) in self.pivots.into_iter().rev() {
            // Rows in `done` are fully reduced, so subtracting them only
            // clears their own pivot column in `row`.
            let dim = row.dim();
            let mut acc = Accumulator::new(dim);
            for (i, c) in row.entries() {
                acc.add(*i, c);
            }
            for (col, c) in row.entries() {
                if *col == pivot {
                    continue;
                }
                if let Some(p) = done.get(col) {
                    let minus = -c;
                    for (i, x) in p.entries() {
                        acc.add_owned(*i, x * &minus);
                    }
                }
            }
            done.insert(pivot, acc.finish());
        }
        done.into_iter().collect()
    }
}

/// Canonical basis of a subspace: the nonzero rows of its reduced row-echelon
/// form, ordered by pivot column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    #[serde(skip)]
    pivots: Vec<usize>,
    #[serde(serialize_with = "serialize_vectors")]
    vectors: Vec<Vector>,
}

fn serialize_vectors<S: serde::Serializer>(
    vectors: &[Vector],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(vectors.len()))?;
    for v in vectors {
        let entries: Vec<(usize, String)> = v
            .entries()
            .iter()
            .map(|(i, c)| (*i, c.to_literal()))
            .collect();
        seq.serialize_element(&entries)?;
    }
    seq.end()
}

impl SubspaceBasis {
    /// Span of arbitrary vectors, reduced to canonical form.
    pub fn span(ambient_dim: usize, vectors: impl IntoIterator<Item = Vector>) -> Result<Self> {
        let mut ech = Echelon::new();
        for v in vectors {
            if v.dim() != ambient_dim {
                return Err(Error::dims(
                    format!("ambient dim {ambient_dim}"),
                    format!("vector of dim {}", v.dim()),
                ));
            }
            ech.insert(v);
        }
        Ok(SubspaceBasis::from_echelon(ambient_dim, ech))
    }

    pub fn empty(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            pivots: Vec::new(),
            vectors: Vec::new(),
        }
    }

    pub fn full(field: crate::scalar::Field, ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            pivots: (0..ambient_dim).collect(),
            vectors: (0..ambient_dim)
                .map(|i| Vector::unit(field, ambient_dim, i))
                .collect(),
        }
    }

    fn from_echelon(ambient_dim: usize, ech: Echelon) -> Self {
        let (pivots, vectors) = ech.into_rref().into_iter().unzip();
        SubspaceBasis {
            ambient_dim,
            pivots,
            vectors,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Exact membership test.
    pub fn contains(&self, v: &Vector) -> Result<bool> {
        if v.dim() != self.ambient_dim {
            return Err(Error::dims(
                format!("subspace of ambient dim {}", self.ambient_dim),
                format!("vector of dim {}", v.dim()),
            ));
        }
        // In RREF each pivot column is zero in every other basis vector, so
        // `v - Σ v[p_i] b_i` vanishes exactly when `v` lies in the span.
        let mut residual = v.clone();
        for (p, b) in self.pivots.iter().zip(&self.vectors) {
            if let Some(c) = v.get(*p) {
                residual = residual.axpy(&-c, b);
            }
        }
        Ok(residual.is_zero())
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> Result<bool> {
        for v in &self.vectors {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact equality of subspaces (canonical bases coincide).
    pub fn equals(&self, other: &SubspaceBasis) -> Result<bool> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::dims(
                format!("ambient dim {}", self.ambient_dim),
                format!("ambient dim {}", other.ambient_dim),
            ));
        }
        Ok(self.vectors == other.vectors)
    }

    /// Matrix whose columns are the basis vectors (the inclusion map).
    pub fn inclusion(&self, field: crate::scalar::Field) -> LinearMap {
        LinearMap::from_columns(field, self.ambient_dim, self.vectors.clone())
            .expect("basis vectors have ambient dimension")
    }
}

pub fn subspace_equal(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<bool> {
    a.equals(b)
}

pub fn subspace_contains(a: &SubspaceBasis, v: &Vector) -> Result<bool> {
    a.contains(v)
}

/// Reduced row-echelon form of the rows of `f`, as `(pivot column, row)` pairs.
pub fn rref(f: &LinearMap) -> Vec<(usize, Vector)> {
    let mut ech = Echelon::new();
    for row in f.row_vectors() {
        ech.insert(row);
    }
    ech.into_rref()
}

pub fn rank(f: &LinearMap) -> usize {
    let mut ech = Echelon::new();
    for row in f.row_vectors() {
        ech.insert(row);
    }
    ech.rank()
}

/// Canonical basis of the nullspace of `f`.
pub fn kernel_basis(f: &LinearMap) -> SubspaceBasis {
    let n = f.cols();
    let reduced = rref(f);
    let field = f.field();
    let mut is_pivot = vec![false; n];
    for (p, _) in &reduced {
        is_pivot[*p] = true;
    }
    // For each free column c: e_c - Σ_i R[i][c] e_{p_i}.
    let mut columns: BTreeMap<usize, Vec<(usize, Scalar)>> = (0..n)
        .filter(|c| !is_pivot[*c])
        .map(|c| (c, vec![(c, field.one())]))
        .collect();
    for (p, row) in &reduced {
        for (c, x) in row.entries() {
            if *c != *p {
                columns
                    .get_mut(c)
                    .expect("non-pivot entries of an RREF row sit in free columns")
                    .push((*p, -x));
            }
        }
    }
    let generators = columns
        .into_values()
        .map(|entries| Vector::from_entries(n, entries));
    SubspaceBasis::span(n, generators).expect("generators have ambient dimension")
}

/// Exact inverse of a square map, or `None` if it is singular.
pub fn inverse(f: &LinearMap) -> Result<Option<LinearMap>> {
    if f.rows() != f.cols() {
        return Err(Error::dims(f.shape_label(), "a square map"));
    }
    let n = f.rows();
    let field = f.field();
    let mut ech = Echelon::new();
    for (i, row) in f.row_vectors().into_iter().enumerate() {
        let mut entries: Vec<(usize, Scalar)> = row.entries().to_vec();
        entries.push((n + i, field.one()));
        ech.insert(Vector::from_entries(2 * n, entries));
    }
    let reduced = ech.into_rref();
    if reduced.len() != n || reduced.iter().enumerate().any(|(k, (p, _))| *p != k) {
        return Ok(None);
    }
    // Row k of the right block is row k of the inverse.
    let triples = reduced.iter().enumerate().flat_map(|(k, (_, row))| {
        row.entries()
            .iter()
            .filter(|(c, _)| *c >= n)
            .map(move |(c, x)| (k, c - n, x.clone()))
    });
    Ok(Some(LinearMap::from_triples(field, n, n, triples)?))
}

/// One solution of `a x = b` (free variables set to zero), or `None` if the
/// system is inconsistent.
pub fn solve(a: &LinearMap, b: &Vector) -> Result<Option<Vector>> {
    if b.dim() != a.rows() {
        return Err(Error::dims(
            a.shape_label(),
            format!("right-hand side of dim {}", b.dim()),
        ));
    }
    let n = a.cols();
    let mut ech = Echelon::new();
    let rows = a.row_vectors();
    for (i, row) in rows.into_iter().enumerate() {
        let mut entries: Vec<(usize, Scalar)> = row.entries().to_vec();
        if let Some(c) = b.get(i) {
            entries.push((n, c.clone()));
        }
        ech.insert(Vector::from_entries(n + 1, entries));
    }
    let reduced = ech.into_rref();
    if reduced.iter().any(|(p, _)| *p == n) {
        return Ok(None);
    }
    let solution = reduced
        .iter()
        .filter_map(|(p, row)| row.get(n).map(|c| (*p, c.clone())));
    Ok(Some(Vector::from_entries(n, solution)))
}
