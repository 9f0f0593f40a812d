//! Lazy evaluation of composites of tensor products of linear maps.
//!
//! Axiom checks compare two composites such as `(m ⊗ m)(id ⊗ τ ⊗ id)(Δ ⊗ Δ)`
//! column by column. Materialising the intermediate Kronecker products would
//! cost `O(n^4)` columns; a [`Pipeline`] instead pushes one sparse vector at a
//! time through each stage.

use std::borrow::Cow;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use super::map::LinearMap;
use super::vector::{Accumulator, Vector};
use crate::scalar::{Field, Scalar};

/// One tensor factor of a pipeline stage.
#[derive(Clone, Debug)]
pub enum Factor<'a> {
    Map(&'a LinearMap),
    Owned(LinearMap),
    /// A composite evaluated column by column on demand.
    Lazy(Box<Pipeline<'a>>),
    /// A shared composite whose evaluated columns are kept.
    Cached(Arc<CachedPipeline<'a>>),
    /// Reordering of tensor factors: output factor `k` is input factor `order[k]`.
    Permutation {
        field: Field,
        dims: Vec<usize>,
        order: Vec<usize>,
    },
    Identity(usize),
}

impl<'a> Factor<'a> {
    pub fn domain(&self) -> usize {
        match self {
            Factor::Map(m) => m.cols(),
            Factor::Owned(m) => m.cols(),
            Factor::Lazy(p) => p.domain_dim(),
            Factor::Cached(c) => c.pipeline.domain_dim(),
            Factor::Permutation { dims, .. } => dims.iter().product(),
            Factor::Identity(n) => *n,
        }
    }

    pub fn codomain(&self) -> usize {
        match self {
            Factor::Map(m) => m.rows(),
            Factor::Owned(m) => m.rows(),
            Factor::Lazy(p) => p.codomain_dim(),
            Factor::Cached(c) => c.pipeline.codomain_dim(),
            Factor::Permutation { dims, .. } => dims.iter().product(),
            Factor::Identity(n) => *n,
        }
    }

    /// Image of the `j`-th basis vector; `None` for identity factors.
    fn column(&self, j: usize) -> Option<Cow<'_, Vector>> {
        match self {
            Factor::Map(m) => Some(Cow::Borrowed(m.column(j))),
            Factor::Owned(m) => Some(Cow::Borrowed(m.column(j))),
            Factor::Lazy(p) => Some(Cow::Owned(p.apply_basis(j))),
            Factor::Cached(c) => Some(Cow::Owned(c.column(j).as_ref().clone())),
            Factor::Permutation { field, dims, order } => Some(Cow::Owned(Vector::unit(
                *field,
                self.codomain(),
                permute_index(j, dims, order),
            ))),
            Factor::Identity(_) => None,
        }
    }

    fn apply(&self, v: &Vector) -> Vector {
        match self {
            Factor::Map(m) => m.apply(v),
            Factor::Owned(m) => m.apply(v),
            Factor::Lazy(p) => p.apply(v),
            Factor::Cached(c) => {
                let mut acc = Accumulator::new(c.pipeline.codomain_dim());
                for (j, x) in v.entries() {
                    for (i, y) in c.column(*j).entries() {
                        acc.add_owned(*i, x * y);
                    }
                }
                acc.finish()
            }
            Factor::Permutation { dims, order, .. } => {
                let mut entries: Vec<(usize, Scalar)> = v
                    .entries()
                    .iter()
                    .map(|(i, c)| (permute_index(*i, dims, order), c.clone()))
                    .collect();
                entries.sort_unstable_by_key(|e| e.0);
                Vector::from_sorted_unchecked(v.dim(), entries)
            }
            Factor::Identity(_) => v.clone(),
        }
    }
}

/// A pipeline memoising its value on each basis vector, shared between
/// factors through an [`Arc`].
pub struct CachedPipeline<'a> {
    pipeline: Pipeline<'a>,
    columns: Mutex<HashMap<usize, Arc<Vector>>>,
}

impl<'a> CachedPipeline<'a> {
    pub fn new(pipeline: Pipeline<'a>) -> Arc<Self> {
        Arc::new(CachedPipeline {
            pipeline,
            columns: Mutex::new(HashMap::new()),
        })
    }

    pub fn pipeline(&self) -> &Pipeline<'a> {
        &self.pipeline
    }

    fn column(&self, j: usize) -> Arc<Vector> {
        if let Some(col) = self.columns.lock().expect("cache lock").get(&j) {
            return col.clone();
        }
        let col = Arc::new(self.pipeline.apply_basis(j));
        self.columns
            .lock()
            .expect("cache lock")
            .entry(j)
            .or_insert(col)
            .clone()
    }
}

impl std::fmt::Debug for CachedPipeline<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CachedPipeline")
            .field("pipeline", &self.pipeline)
            .finish_non_exhaustive()
    }
}

fn permute_index(flat: usize, dims: &[usize], order: &[usize]) -> usize {
    let mut rem = flat;
    let mut multi = [0usize; 16];
    for k in (0..dims.len()).rev() {
        multi[k] = rem % dims[k];
        rem /= dims[k];
    }
    order.iter().fold(0, |acc, &k| acc * dims[k] + multi[k])
}

/// Tensor-factor permutation factor; see [`Factor::Permutation`].
pub fn perm<'a>(field: Field, dims: &[usize], order: &[usize]) -> Factor<'a> {
    assert!(
        dims.len() <= 16 && dims.len() == order.len(),
        "bad permutation arity"
    );
    let mut seen = vec![false; dims.len()];
    for &k in order {
        assert!(
            !std::mem::replace(&mut seen[k], true),
            "order is not a permutation"
        );
    }
    Factor::Permutation {
        field,
        dims: dims.to_vec(),
        order: order.to_vec(),
    }
}

/// The flip `V ⊗ W → W ⊗ V` as a factor.
pub fn swap<'a>(field: Field, n: usize, m: usize) -> Factor<'a> {
    perm(field, &[n, m], &[1, 0])
}

impl<'a> From<Pipeline<'a>> for Factor<'a> {
    fn from(p: Pipeline<'a>) -> Self {
        Factor::Lazy(Box::new(p))
    }
}

impl<'a> From<&'a LinearMap> for Factor<'a> {
    fn from(m: &'a LinearMap) -> Self {
        Factor::Map(m)
    }
}

impl From<LinearMap> for Factor<'_> {
    fn from(m: LinearMap) -> Self {
        Factor::Owned(m)
    }
}

/// Identity factor on an `n`-dimensional space.
pub fn id<'a>(n: usize) -> Factor<'a> {
    Factor::Identity(n)
}

/// Applies `f_1 ⊗ ... ⊗ f_k` to a vector of the tensor product of their domains.
pub fn apply_tensor(factors: &[Factor<'_>], v: &Vector) -> Vector {
    let dom: Vec<usize> = factors.iter().map(Factor::domain).collect();
    let cod: Vec<usize> = factors.iter().map(Factor::codomain).collect();
    let dom_total: usize = dom.iter().product();
    let cod_total: usize = cod.iter().product();
    assert_eq!(v.dim(), dom_total, "vector dim does not match stage domain");
    if let [only] = factors {
        return only.apply(v);
    }
    let mut acc = Accumulator::new(cod_total);
    let mut multi = vec![0usize; factors.len()];
    let mut terms: Vec<(usize, Scalar)> = Vec::new();
    let mut next: Vec<(usize, Scalar)> = Vec::new();
    for (flat, c) in v.entries() {
        let mut rem = *flat;
        for k in (0..factors.len()).rev() {
            multi[k] = rem % dom[k];
            rem /= dom[k];
        }
        terms.clear();
        terms.push((0, c.clone()));
        for (k, factor) in factors.iter().enumerate() {
            match factor.column(multi[k]) {
                None => {
                    for t in terms.iter_mut() {
                        t.0 = t.0 * cod[k] + multi[k];
                    }
                }
                Some(col) => {
                    next.clear();
                    for (idx, x) in &terms {
                        for (r, y) in col.entries() {
                            next.push((idx * cod[k] + r, x * y));
                        }
                    }
                    std::mem::swap(&mut terms, &mut next);
                }
            }
            if terms.is_empty() {
                break;
            }
        }
        for (idx, x) in terms.drain(..) {
            acc.add_owned(idx, x);
        }
    }
    acc.finish()
}

/// A composite of tensor-product stages, applied left to right
/// (the first stage added is applied first).
#[derive(Clone, Debug)]
pub struct Pipeline<'a> {
    field: Field,
    stages: Vec<Vec<Factor<'a>>>,
}

impl<'a> Pipeline<'a> {
    pub fn new(field: Field) -> Self {
        Pipeline {
            field,
            stages: Vec::new(),
        }
    }

    /// A pipeline whose domain is the tensor product of `dims`; later stages
    /// are applied to it. Witness indices follow this factorisation.
    pub fn on(field: Field, dims: &[usize]) -> Self {
        Pipeline::new(field).then(dims.iter().map(|&n| Factor::Identity(n)).collect())
    }

    /// Appends a stage; panics if its domain does not match the previous codomain.
    pub fn then(mut self, factors: Vec<Factor<'a>>) -> Self {
        assert!(!factors.is_empty(), "empty pipeline stage");
        if let Some(prev) = self.stages.last() {
            let cod: usize = prev.iter().map(Factor::codomain).product();
            let dom: usize = factors.iter().map(Factor::domain).product();
            assert_eq!(
                cod,
                dom,
                "pipeline stage {} expects dim {dom}, previous stage yields {cod}",
                self.stages.len()
            );
        }
        self.stages.push(factors);
        self
    }

    /// Appends a single-map stage.
    pub fn map(self, m: impl Into<Factor<'a>>) -> Self {
        self.then(vec![m.into()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Factor dimensions of the domain (the first stage's factor domains).
    pub fn domain_factors(&self) -> Vec<usize> {
        self.stages
            .first()
            .map(|s| s.iter().map(Factor::domain).collect())
            .unwrap_or_default()
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_factors().iter().product()
    }

    pub fn codomain_dim(&self) -> usize {
        self.stages
            .last()
            .map(|s| s.iter().map(Factor::codomain).product())
            .unwrap_or(0)
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut cur = v.clone();
        for stage in &self.stages {
            if stage.iter().all(|f| matches!(f, Factor::Identity(_))) {
                continue;
            }
            cur = apply_tensor(stage, &cur);
        }
        cur
    }

    pub fn apply_basis(&self, index: usize) -> Vector {
        self.apply(&Vector::unit(self.field, self.domain_dim(), index))
    }

    /// Evaluates the composite on every basis vector.
    pub fn materialize(&self) -> LinearMap {
        let rows = self.codomain_dim();
        LinearMap::from_fn(self.field, rows, self.domain_dim(), |j| self.apply_basis(j))
    }
}

/// Evaluates `f` on each basis vector of a `dim`-dimensional space, in parallel.
pub fn collect_columns<F>(dim: usize, f: F) -> Vec<Vector>
where
    F: Fn(usize) -> Vector + Sync + Send,
{
    (0..dim).into_par_iter().map(f).collect()
}
