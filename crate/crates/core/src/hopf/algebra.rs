//! Hopf algebras as structure constants, and their axiom checkers.

use crate::error::{Error, Result};
use crate::linalg::{id, inverse, perm, swap, Echelon, Factor, LinearMap, Pipeline, Vector};
use crate::report::{check_maps_in, CheckEntry, CheckReport, Scope};
use crate::scalar::{Field, Scalar};

/// A finite-dimensional Hopf algebra given by its structure maps
/// `m: n²→n`, `η: 1→n`, `Δ: n→n²`, `ε: n→1`, `S: n→n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub mul: LinearMap,
    pub unit: LinearMap,
    pub comul: LinearMap,
    pub counit: LinearMap,
    pub antipode: LinearMap,
}

/// Anything that can present Hopf structure maps as pipeline factors.
///
/// Implemented by [`HopfAlgebraData`] (stored matrices) and by lazily
/// evaluated constructions too large to materialise.
pub trait HopfStructure: Sync {
    fn name(&self) -> &str;
    fn field(&self) -> Field;
    fn dim(&self) -> usize;
    fn mul(&self) -> Factor<'_>;
    fn unit(&self) -> Factor<'_>;
    fn comul(&self) -> Factor<'_>;
    fn counit(&self) -> Factor<'_>;
    fn antipode(&self) -> Factor<'_>;
}

impl HopfStructure for HopfAlgebraData {
    fn name(&self) -> &str {
        &self.name
    }
    fn field(&self) -> Field {
        self.field
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn mul(&self) -> Factor<'_> {
        Factor::Map(&self.mul)
    }
    fn unit(&self) -> Factor<'_> {
        Factor::Map(&self.unit)
    }
    fn comul(&self) -> Factor<'_> {
        Factor::Map(&self.comul)
    }
    fn counit(&self) -> Factor<'_> {
        Factor::Map(&self.counit)
    }
    fn antipode(&self) -> Factor<'_> {
        Factor::Map(&self.antipode)
    }
}

pub(crate) fn expect_shape(map: &LinearMap, rows: usize, cols: usize, what: &str) -> Result<()> {
    if map.shape() != (rows, cols) {
        return Err(Error::dims(
            format!("{what} of shape {}x{}", map.rows(), map.cols()),
            format!("expected {rows}x{cols}"),
        ));
    }
    Ok(())
}

pub(crate) fn expect_field(map: &LinearMap, field: Field) -> Result<()> {
    if map.field() != field {
        return Err(Error::FieldMismatch {
            expected: field,
            found: map.field(),
        });
    }
    Ok(())
}

impl HopfAlgebraData {
    /// Bundles structure maps after validating their shapes and fields.
    pub fn new(
        name: impl Into<String>,
        mul: LinearMap,
        unit: LinearMap,
        comul: LinearMap,
        counit: LinearMap,
        antipode: LinearMap,
    ) -> Result<Self> {
        let field = mul.field();
        let dim = unit.rows();
        expect_shape(&mul, dim, dim * dim, "multiplication")?;
        expect_shape(&unit, dim, 1, "unit")?;
        expect_shape(&comul, dim * dim, dim, "coproduct")?;
        expect_shape(&counit, 1, dim, "counit")?;
        expect_shape(&antipode, dim, dim, "antipode")?;
        for m in [&unit, &comul, &counit, &antipode] {
            expect_field(m, field)?;
        }
        Ok(HopfAlgebraData {
            name: name.into(),
            field,
            dim,
            mul,
            unit,
            comul,
            counit,
            antipode,
        })
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::unit(self.field, self.dim, i)
    }

    pub fn one(&self) -> Vector {
        self.unit.column(0).clone()
    }

    pub fn product(&self, a: &Vector, b: &Vector) -> Vector {
        self.mul.apply(&a.tensor(b))
    }

    pub fn coproduct(&self, a: &Vector) -> Vector {
        self.comul.apply(a)
    }

    pub fn counit_of(&self, a: &Vector) -> Scalar {
        self.counit
            .apply(a)
            .get(0)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// `S⁻¹`, or `None` when the antipode is singular.
    pub fn antipode_inverse(&self) -> Result<Option<LinearMap>> {
        inverse(&self.antipode)
    }

    /// Whether `τΔ == Δ`.
    pub fn is_cocommutative(&self) -> bool {
        let flipped = Pipeline::new(self.field)
            .map(&self.comul)
            .then(vec![swap(self.field, self.dim, self.dim)]);
        flipped.materialize() == self.comul
    }

    /// Whether `m τ == m`.
    pub fn is_commutative(&self) -> bool {
        let flipped = Pipeline::new(self.field)
            .then(vec![swap(self.field, self.dim, self.dim)])
            .map(&self.mul);
        flipped.materialize() == self.mul
    }

    /// Same structure constants over another field (rationals reduce mod p).
    pub fn convert(&self, target: Field) -> Result<Self> {
        Ok(HopfAlgebraData {
            name: self.name.clone(),
            field: target,
            dim: self.dim,
            mul: self.mul.convert(target)?,
            unit: self.unit.convert(target)?,
            comul: self.comul.convert(target)?,
            counit: self.counit.convert(target)?,
            antipode: self.antipode.convert(target)?,
        })
    }
}

fn algebra_entries<'a>(
    f: Field,
    n: usize,
    mul: &Factor<'a>,
    unit: &Factor<'a>,
    scope: &Scope,
) -> Vec<CheckEntry> {
    let assoc_l = Pipeline::on(f, &[n, n, n])
        .then(vec![mul.clone(), id(n)])
        .then(vec![mul.clone()]);
    let assoc_r = Pipeline::on(f, &[n, n, n])
        .then(vec![id(n), mul.clone()])
        .then(vec![mul.clone()]);
    let unit_l = Pipeline::on(f, &[1, n])
        .then(vec![unit.clone(), id(n)])
        .then(vec![mul.clone()]);
    let unit_r = Pipeline::on(f, &[n, 1])
        .then(vec![id(n), unit.clone()])
        .then(vec![mul.clone()]);
    let ident = Pipeline::on(f, &[n]);
    vec![
        check_maps_in("associativity", &assoc_l, &assoc_r, scope),
        check_maps_in("unit.left", &unit_l, &ident, scope),
        check_maps_in("unit.right", &unit_r, &ident, scope),
    ]
}

fn coalgebra_entries<'a>(
    f: Field,
    n: usize,
    comul: &Factor<'a>,
    counit: &Factor<'a>,
    scope: &Scope,
) -> Vec<CheckEntry> {
    let l = Pipeline::on(f, &[n])
        .then(vec![comul.clone()])
        .then(vec![comul.clone(), id(n)]);
    let r = Pipeline::on(f, &[n])
        .then(vec![comul.clone()])
        .then(vec![id(n), comul.clone()]);
    let cl = Pipeline::on(f, &[n])
        .then(vec![comul.clone()])
        .then(vec![counit.clone(), id(n)]);
    let cr = Pipeline::on(f, &[n])
        .then(vec![comul.clone()])
        .then(vec![id(n), counit.clone()]);
    let ident = Pipeline::on(f, &[n]);
    vec![
        check_maps_in("coassociativity", &l, &r, scope),
        check_maps_in("counit.left", &cl, &ident, scope),
        check_maps_in("counit.right", &cr, &ident, scope),
    ]
}

/// Associativity and unit laws of `(m, η)`.
pub fn check_algebra(mul: &LinearMap, unit: &LinearMap) -> Result<CheckReport> {
    let n = unit.rows();
    expect_shape(mul, n, n * n, "multiplication")?;
    expect_shape(unit, n, 1, "unit")?;
    expect_field(unit, mul.field())?;
    let entries = algebra_entries(mul.field(), n, &mul.into(), &unit.into(), &Scope::Full);
    Ok(CheckReport { entries })
}

/// Basis indices generating the algebra `(m, η)`: each step adds the basis
/// element whose generated subalgebra is largest, ties to the lowest index.
pub fn algebra_generators(mul: &LinearMap, unit: &LinearMap) -> Vec<usize> {
    let n = unit.rows();
    let field = mul.field();
    let one = unit.apply(&Vector::unit(field, 1, 0));
    let closure = |gens: &[usize]| -> Echelon {
        let mut span = Echelon::new();
        span.insert(one.clone());
        let mut frontier = vec![one.clone()];
        while let Some(w) = frontier.pop() {
            for &g in gens {
                let next = mul.apply(&w.tensor(&Vector::unit(field, n, g)));
                if span.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        span
    };
    let mut gens: Vec<usize> = Vec::new();
    let mut rank = closure(&gens).rank();
    while rank < n {
        let (best, best_rank) = (0..n)
            .filter(|i| !gens.contains(i))
            .map(|i| {
                let mut trial = gens.clone();
                trial.push(i);
                (i, closure(&trial).rank())
            })
            .fold((n, rank), |acc, c| if c.1 > acc.1 { c } else { acc });
        if best == n {
            break;
        }
        gens.push(best);
        rank = best_rank;
    }
    gens
}

/// Coassociativity and counit laws of `(Δ, ε)`.
pub fn check_coalgebra(comul: &LinearMap, counit: &LinearMap) -> Result<CheckReport> {
    let n = counit.cols();
    expect_shape(comul, n * n, n, "coproduct")?;
    expect_shape(counit, 1, n, "counit")?;
    expect_field(counit, comul.field())?;
    let entries = coalgebra_entries(
        comul.field(),
        n,
        &comul.into(),
        &counit.into(),
        &Scope::Full,
    );
    Ok(CheckReport { entries })
}

/// Full Hopf algebra axiom check on every basis input.
pub fn check_hopf(h: &dyn HopfStructure) -> CheckReport {
    check_hopf_in(h, &Scope::Full)
}

/// Hopf axiom check restricted to a scope. Antipode invertibility is always
/// decided exactly on the whole space.
pub fn check_hopf_in(h: &dyn HopfStructure, scope: &Scope) -> CheckReport {
    let f = h.field();
    let n = h.dim();
    let mut report = CheckReport::new();
    report.absorb(
        "algebra",
        CheckReport {
            entries: algebra_entries(f, n, &h.mul(), &h.unit(), scope),
        },
    );
    report.absorb(
        "coalgebra",
        CheckReport {
            entries: coalgebra_entries(f, n, &h.comul(), &h.counit(), scope),
        },
    );

    let delta_m = Pipeline::on(f, &[n, n])
        .then(vec![h.mul()])
        .then(vec![h.comul()]);
    let mm_delta = Pipeline::on(f, &[n, n])
        .then(vec![h.comul(), h.comul()])
        .then(vec![perm(f, &[n, n, n, n], &[0, 2, 1, 3])])
        .then(vec![h.mul(), h.mul()]);
    report.push(check_maps_in(
        "bialgebra.comul_multiplicative",
        &delta_m,
        &mm_delta,
        scope,
    ));
    let eps_m = Pipeline::on(f, &[n, n])
        .then(vec![h.mul()])
        .then(vec![h.counit()]);
    let eps_eps = Pipeline::on(f, &[n, n]).then(vec![h.counit(), h.counit()]);
    report.push(check_maps_in(
        "bialgebra.counit_multiplicative",
        &eps_m,
        &eps_eps,
        scope,
    ));
    let delta_1 = Pipeline::on(f, &[1])
        .then(vec![h.unit()])
        .then(vec![h.comul()]);
    let one_one = Pipeline::on(f, &[1]).then(vec![h.unit(), h.unit()]);
    report.push(check_maps_in(
        "bialgebra.comul_unit",
        &delta_1,
        &one_one,
        scope,
    ));
    let eps_1 = Pipeline::on(f, &[1])
        .then(vec![h.unit()])
        .then(vec![h.counit()]);
    report.push(check_maps_in(
        "bialgebra.counit_unit",
        &eps_1,
        &Pipeline::on(f, &[1]),
        scope,
    ));

    let eta_eps = Pipeline::on(f, &[n])
        .then(vec![h.counit()])
        .then(vec![h.unit()]);
    let left = Pipeline::on(f, &[n])
        .then(vec![h.comul()])
        .then(vec![h.antipode(), id(n)])
        .then(vec![h.mul()]);
    let right = Pipeline::on(f, &[n])
        .then(vec![h.comul()])
        .then(vec![id(n), h.antipode()])
        .then(vec![h.mul()]);
    report.push(check_maps_in("antipode.left", &left, &eta_eps, scope));
    report.push(check_maps_in("antipode.right", &right, &eta_eps, scope));

    let s = Pipeline::on(f, &[n]).then(vec![h.antipode()]).materialize();
    let invertible = matches!(inverse(&s), Ok(Some(_)));
    report.push(CheckEntry::fact("antipode.invertible", invertible));
    let s2 = s.compose(&s).expect("square maps compose");
    report.push(CheckEntry::fact("antipode.involutive", s2.is_identity()).informational());
    report
}

/// Transposes every structure map: the dual Hopf algebra in the dual basis.
pub fn dual_hopf(h: &HopfAlgebraData) -> HopfAlgebraData {
    HopfAlgebraData {
        name: format!("dual({})", h.name),
        field: h.field,
        dim: h.dim,
        mul: h.comul.transpose(),
        unit: h.counit.transpose(),
        comul: h.mul.transpose(),
        counit: h.unit.transpose(),
        antipode: h.antipode.transpose(),
    }
}

/// The tensor product Hopf algebra `A ⊗ B` (componentwise structure).
pub fn tensor_product(a: &HopfAlgebraData, b: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    if a.field != b.field {
        return Err(Error::FieldMismatch {
            expected: a.field,
            found: b.field,
        });
    }
    let f = a.field;
    let (na, nb) = (a.dim, b.dim);
    let mul = Pipeline::new(f)
        .then(vec![perm(f, &[na, nb, na, nb], &[0, 2, 1, 3])])
        .then(vec![(&a.mul).into(), (&b.mul).into()])
        .materialize();
    let comul = Pipeline::new(f)
        .then(vec![(&a.comul).into(), (&b.comul).into()])
        .then(vec![perm(f, &[na, na, nb, nb], &[0, 2, 1, 3])])
        .materialize();
    HopfAlgebraData::new(
        format!("{}⊗{}", a.name, b.name),
        mul,
        a.unit.kron(&b.unit)?,
        comul,
        a.counit.kron(&b.counit)?,
        a.antipode.kron(&b.antipode)?,
    )
}

/// Checks that `map: from → to` is a Hopf algebra map.
pub fn check_hopf_map(
    map: Factor<'_>,
    from: &dyn HopfStructure,
    to: &dyn HopfStructure,
    scope: &Scope,
) -> CheckReport {
    let fl = from.field();
    let (n, k) = (from.dim(), to.dim());
    assert_eq!((map.domain(), map.codomain()), (n, k), "hopf map shape");
    let mut report = CheckReport::new();
    let lhs = Pipeline::on(fl, &[n, n])
        .then(vec![from.mul()])
        .then(vec![map.clone()]);
    let rhs = Pipeline::on(fl, &[n, n])
        .then(vec![map.clone(), map.clone()])
        .then(vec![to.mul()]);
    report.push(check_maps_in("multiplicative", &lhs, &rhs, scope));
    let lhs = Pipeline::on(fl, &[1])
        .then(vec![from.unit()])
        .then(vec![map.clone()]);
    let rhs = Pipeline::on(fl, &[1]).then(vec![to.unit()]);
    report.push(check_maps_in("unital", &lhs, &rhs, scope));
    let lhs = Pipeline::on(fl, &[n])
        .then(vec![map.clone()])
        .then(vec![to.comul()]);
    let rhs = Pipeline::on(fl, &[n])
        .then(vec![from.comul()])
        .then(vec![map.clone(), map.clone()]);
    report.push(check_maps_in("comultiplicative", &lhs, &rhs, scope));
    let lhs = Pipeline::on(fl, &[n])
        .then(vec![map.clone()])
        .then(vec![to.counit()]);
    let rhs = Pipeline::on(fl, &[n]).then(vec![from.counit()]);
    report.push(check_maps_in("counital", &lhs, &rhs, scope));
    let lhs = Pipeline::on(fl, &[n])
        .then(vec![from.antipode()])
        .then(vec![map.clone()]);
    let rhs = Pipeline::on(fl, &[n])
        .then(vec![map])
        .then(vec![to.antipode()]);
    report.push(check_maps_in("antipode", &lhs, &rhs, scope));
    report
}
