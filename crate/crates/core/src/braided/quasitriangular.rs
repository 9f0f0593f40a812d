//! Quasitriangular structures and the Yetter-Drinfeld modules they induce.

use crate::error::{Error, Result};
use crate::hopf::{
    check_yetter_drinfeld, Coaction, HopfAlgebraData, ModuleAction, YetterDrinfeldModule,
};
use crate::linalg::{id, perm, solve, LinearMap, Pipeline, Vector};
use crate::report::{check_indexed, check_vectors, CheckEntry, CheckReport};

/// `R ∈ H ⊗ H` with its inverse, if it has one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasitriangularStructure {
    pub hopf: HopfAlgebraData,
    pub r: Vector,
    pub r_inverse: Option<Vector>,
}

/// Product on `H^{⊗k}` as a pipeline on `2k` factors `(x₁…x_k, y₁…y_k)`.
pub fn tensor_power_product(h: &HopfAlgebraData, k: usize) -> Pipeline<'_> {
    let n = h.dim;
    let f = h.field;
    let order: Vec<usize> = (0..k).flat_map(|i| [i, k + i]).collect();
    Pipeline::on(f, &vec![n; 2 * k])
        .then(vec![perm(f, &vec![n; 2 * k], &order)])
        .then((0..k).map(|_| (&h.mul).into()).collect())
}

/// Left multiplication by `x` on `H^{⊗k}` as a matrix.
fn left_multiplication(h: &HopfAlgebraData, k: usize, x: &Vector) -> LinearMap {
    let dim = h.dim.pow(k as u32);
    let p = tensor_power_product(h, k);
    LinearMap::from_fn(h.field, dim, dim, |j| {
        p.apply(&x.tensor(&Vector::unit(h.field, dim, j)))
    })
}

/// `x ⊗ y ⊗ z` slots placed as `(positions of R's legs)` with `1` elsewhere.
fn embed_legs(h: &HopfAlgebraData, r: &Vector, legs: [usize; 2]) -> Vector {
    let n = h.dim;
    let f = h.field;
    let free = 3 - legs[0] - legs[1];
    // source factors: (R¹, R², 1); output slot k takes source order[k]
    let mut order = [0usize; 3];
    order[legs[0]] = 0;
    order[legs[1]] = 1;
    order[free] = 2;
    Pipeline::on(f, &[n, n, n])
        .then(vec![perm(f, &[n, n, n], &order)])
        .apply(&r.tensor(&h.one()))
}

impl QuasitriangularStructure {
    /// Bundles `R`, solving for `R⁻¹` by an exact linear solve.
    pub fn new(hopf: HopfAlgebraData, r: Vector) -> Result<Self> {
        let n2 = hopf.dim * hopf.dim;
        if r.dim() != n2 {
            return Err(Error::dims(
                format!("element of H⊗H (dim {n2})"),
                format!("vector of dim {}", r.dim()),
            ));
        }
        let one = hopf.one().tensor(&hopf.one());
        let r_inverse = solve(&left_multiplication(&hopf, 2, &r), &one)?;
        Ok(QuasitriangularStructure { hopf, r, r_inverse })
    }

    /// `R = 1 ⊗ 1`.
    pub fn trivial(hopf: HopfAlgebraData) -> Self {
        let one = hopf.one().tensor(&hopf.one());
        QuasitriangularStructure {
            hopf,
            r: one.clone(),
            r_inverse: Some(one),
        }
    }

    /// `R₂₁`.
    pub fn flipped(&self) -> Vector {
        let n = self.hopf.dim;
        Pipeline::on(self.hopf.field, &[n, n])
            .then(vec![crate::linalg::swap(self.hopf.field, n, n)])
            .apply(&self.r)
    }
}

/// Invertibility, the two coproduct identities, intertwining of `Δ` with
/// `τΔ`, the counit identities, and the derived `(S⊗id)R = R⁻¹`,
/// `(S⊗S)R = R`. Triangularity `R₂₁R = 1` is informational.
pub fn check_quasitriangular(q: &QuasitriangularStructure) -> CheckReport {
    let h = &q.hopf;
    let f = h.field;
    let n = h.dim;
    let r = &q.r;
    let mut rep = CheckReport::new();
    let one2 = h.one().tensor(&h.one());
    let inverse = q.r_inverse.clone();
    let prod2 = tensor_power_product(h, 2);
    let prod3 = tensor_power_product(h, 3);
    match &inverse {
        Some(inv) => rep.push(check_vectors(
            "invertible",
            prod2.apply(&inv.tensor(r)),
            one2.clone(),
        )),
        None => rep.push(CheckEntry::fact("invertible", false)),
    }

    let r13 = embed_legs(h, r, [0, 2]);
    let r23 = embed_legs(h, r, [1, 2]);
    let r12 = embed_legs(h, r, [0, 1]);
    let lhs = Pipeline::on(f, &[n, n])
        .then(vec![(&h.comul).into(), id(n)])
        .apply(r);
    rep.push(check_vectors(
        "coproduct.left",
        lhs,
        prod3.apply(&r13.tensor(&r23)),
    ));
    let lhs = Pipeline::on(f, &[n, n])
        .then(vec![id(n), (&h.comul).into()])
        .apply(r);
    rep.push(check_vectors(
        "coproduct.right",
        lhs,
        prod3.apply(&r13.tensor(&r12)),
    ));

    let flip = crate::linalg::swap(f, n, n);
    let tau = Pipeline::on(f, &[n, n]).then(vec![flip]);
    rep.push(check_indexed(
        "intertwines",
        n,
        |i| {
            let d = h.comul.column(i);
            let lhs = prod2.apply(&tau.apply(d).tensor(r));
            let rhs = prod2.apply(&r.tensor(d));
            (lhs, rhs)
        },
        |i| vec![i],
    ));

    let one = h.one();
    let lhs = Pipeline::on(f, &[n, n])
        .then(vec![(&h.counit).into(), id(n)])
        .apply(r);
    rep.push(check_vectors("counit.left", lhs, one.clone()));
    let lhs = Pipeline::on(f, &[n, n])
        .then(vec![id(n), (&h.counit).into()])
        .apply(r);
    rep.push(check_vectors("counit.right", lhs, one));

    let s_id = Pipeline::on(f, &[n, n])
        .then(vec![(&h.antipode).into(), id(n)])
        .apply(r);
    match &inverse {
        Some(inv) => rep.push(check_vectors("antipode.inverse", s_id, inv.clone())),
        None => rep.push(CheckEntry::fact("antipode.inverse", false)),
    }
    let s_s = Pipeline::on(f, &[n, n])
        .then(vec![(&h.antipode).into(), (&h.antipode).into()])
        .apply(r);
    rep.push(check_vectors("antipode.both", s_s, r.clone()));
    let tri = prod2.apply(&q.flipped().tensor(r));
    rep.push(check_vectors("triangular", tri, one2).informational());
    rep
}

/// Coaction `v ↦ R⁽²⁾ ⊗ R⁽¹⁾▷v`.
pub fn quasitriangular_coaction(q: &QuasitriangularStructure, act: &ModuleAction) -> Coaction {
    let h = &q.hopf;
    let (n, v) = (h.dim, act.carrier_dim);
    let f = h.field;
    let swap_act = Pipeline::on(f, &[n, n, v])
        .then(vec![perm(f, &[n, n, v], &[1, 0, 2])])
        .then(vec![id(n), act.factor()]);
    let map = LinearMap::from_fn(f, n * v, v, |j| {
        swap_act.apply(&q.r.tensor(&Vector::unit(f, v, j)))
    });
    Coaction {
        coacting_dim: n,
        carrier_dim: v,
        map,
    }
}

/// The Yetter-Drinfeld module of a module over a quasitriangular `H`;
/// errors with the failing check if the result is not Yetter-Drinfeld.
pub fn yd_from_quasitriangular(
    q: &QuasitriangularStructure,
    act: &ModuleAction,
) -> Result<YetterDrinfeldModule> {
    let yd = YetterDrinfeldModule::new(act.clone(), quasitriangular_coaction(q, act))?;
    let report = check_yetter_drinfeld(&q.hopf, &yd);
    if let Some(first) = report.first_failure() {
        return Err(Error::Precondition {
            check: first.name.clone(),
            report: Box::new(report),
        });
    }
    Ok(yd)
}
