//! Hopf algebras in the Yetter-Drinfeld category and transmutation.

use crate::error::{Error, Result};
use crate::hopf::{
    braiding, check_algebra, check_coalgebra, check_yd_morphism, check_yetter_drinfeld, yd_tensor,
    HopfAlgebraData, ModuleAction, YetterDrinfeldModule,
};
use crate::linalg::{id, perm, solve, LinearMap, Pipeline, Vector};
use crate::report::{check_maps, CheckEntry, CheckReport};
use crate::scalar::Field;

use super::quasitriangular::{yd_from_quasitriangular, QuasitriangularStructure};

/// A Hopf algebra `B` in the Yetter-Drinfeld category of `H`; the `yd`
/// field carries the action and coaction of `H` on `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedHopfData {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub mul: LinearMap,
    pub unit: LinearMap,
    pub comul: LinearMap,
    pub counit: LinearMap,
    pub antipode: LinearMap,
    pub yd: YetterDrinfeldModule,
}

impl BraidedHopfData {
    /// An ordinary Hopf algebra viewed with the given Yetter-Drinfeld structure.
    pub fn from_hopf(b: &HopfAlgebraData, yd: YetterDrinfeldModule) -> Result<Self> {
        if yd.dim() != b.dim {
            return Err(Error::dims(
                format!("algebra of dim {}", b.dim),
                format!("YD module of dim {}", yd.dim()),
            ));
        }
        Ok(BraidedHopfData {
            name: b.name.clone(),
            field: b.field,
            dim: b.dim,
            mul: b.mul.clone(),
            unit: b.unit.clone(),
            comul: b.comul.clone(),
            counit: b.counit.clone(),
            antipode: b.antipode.clone(),
            yd,
        })
    }

    pub fn one(&self) -> Vector {
        self.unit.column(0).clone()
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::unit(self.field, self.dim, i)
    }
}

/// Solves the left and right antipode laws `m(S⊗id)Δ = ηε = m(id⊗S)Δ`
/// for `S` as one exact linear system in the `n²` matrix entries.
pub fn solve_antipode(
    field: Field,
    mul: &LinearMap,
    unit: &LinearMap,
    comul: &LinearMap,
    counit: &LinearMap,
) -> Result<LinearMap> {
    let n = unit.rows();
    let one = unit.column(0);
    // unknown s_{k,a} (coefficient of e_k in S(e_a)) sits at column a·n + k
    let mut triples = Vec::new();
    let mut rhs = Vec::new();
    for h in 0..n {
        let eps = counit.entry(0, h);
        if !eps.is_zero() {
            for (o, c) in one.entries() {
                rhs.push((h * n + o, &eps * c));
                rhs.push((n * n + h * n + o, &eps * c));
            }
        }
        for (ab, c) in comul.column(h).entries() {
            let (a, b) = (ab / n, ab % n);
            for k in 0..n {
                for (o, x) in mul.column(k * n + b).entries() {
                    triples.push((h * n + o, a * n + k, c * x));
                }
                for (o, x) in mul.column(a * n + k).entries() {
                    triples.push((n * n + h * n + o, b * n + k, c * x));
                }
            }
        }
    }
    let system = LinearMap::from_triples(field, 2 * n * n, n * n, triples)?;
    let target = Vector::from_entries(2 * n * n, rhs);
    let s =
        solve(&system, &target)?.ok_or_else(|| Error::NoSolution("antipode laws".to_string()))?;
    let mut cols = vec![Vec::new(); n];
    for (idx, c) in s.entries() {
        cols[idx / n].push((idx % n, c.clone()));
    }
    LinearMap::from_columns(
        field,
        n,
        cols.into_iter()
            .map(|e| Vector::from_entries(n, e))
            .collect(),
    )
}

/// Transmutation `B(H)`: the algebra of `H` with the adjoint action, the
/// coaction induced by `R`, coproduct `h₁ S R⁽²⁾ ⊗ R⁽¹⁾ ▷ h₂` and the
/// antipode solved from the antipode laws.
pub fn transmutation(q: &QuasitriangularStructure) -> Result<BraidedHopfData> {
    let h = &q.hopf;
    let f = h.field;
    let n = h.dim;
    let adjoint = ModuleAction::adjoint(h);
    let yd = yd_from_quasitriangular(q, &adjoint)?;
    // (R¹, R², h₁, h₂) → (h₁, S R², R¹ ▷ h₂)
    let twist = Pipeline::on(f, &[n, n, n, n])
        .then(vec![perm(f, &[n, n, n, n], &[2, 1, 0, 3])])
        .then(vec![id(n), (&h.antipode).into(), id(n), id(n)])
        .then(vec![(&h.mul).into(), adjoint.factor()]);
    let comul = LinearMap::from_fn(f, n * n, n, |j| twist.apply(&q.r.tensor(h.comul.column(j))));
    let antipode = solve_antipode(f, &h.mul, &h.unit, &comul, &h.counit)?;
    Ok(BraidedHopfData {
        name: format!("B({})", h.name),
        field: f,
        dim: n,
        mul: h.mul.clone(),
        unit: h.unit.clone(),
        comul,
        counit: h.counit.clone(),
        antipode,
        yd,
    })
}

/// Yetter-Drinfeld axioms of the carrier, (co)algebra axioms, every
/// structure map as a Yetter-Drinfeld morphism, the braided bialgebra law
/// `Δ(ab) = a₁ Ψ(a₂⊗b₁) b₂` and both antipode laws.
pub fn check_braided_hopf(b: &BraidedHopfData, h: &HopfAlgebraData) -> CheckReport {
    let f = b.field;
    let n = b.dim;
    let mut r = CheckReport::new();
    r.absorb("yd", check_yetter_drinfeld(h, &b.yd));
    match (
        check_algebra(&b.mul, &b.unit),
        check_coalgebra(&b.comul, &b.counit),
    ) {
        (Ok(alg), Ok(coalg)) => {
            r.absorb("algebra", alg);
            r.absorb("coalgebra", coalg);
        }
        _ => r.push(CheckEntry::fact("shapes", false)),
    }

    let unit_obj = YetterDrinfeldModule::unit_object(h);
    let bb = yd_tensor(h, &b.yd, &b.yd);
    r.absorb("morphism.mul", check_yd_morphism(h, &b.mul, &bb, &b.yd));
    r.absorb(
        "morphism.unit",
        check_yd_morphism(h, &b.unit, &unit_obj, &b.yd),
    );
    r.absorb("morphism.comul", check_yd_morphism(h, &b.comul, &b.yd, &bb));
    r.absorb(
        "morphism.counit",
        check_yd_morphism(h, &b.counit, &b.yd, &unit_obj),
    );
    r.absorb(
        "morphism.antipode",
        check_yd_morphism(h, &b.antipode, &b.yd, &b.yd),
    );

    match braiding(h, &b.yd, &b.yd) {
        Ok(psi) => {
            let lhs = Pipeline::on(f, &[n, n]).map(&b.mul).map(&b.comul);
            let rhs = Pipeline::on(f, &[n, n])
                .then(vec![(&b.comul).into(), (&b.comul).into()])
                .then(vec![id(n), (&psi).into(), id(n)])
                .then(vec![(&b.mul).into(), (&b.mul).into()]);
            r.push(check_maps("bialgebra.comul_multiplicative", &lhs, &rhs));
        }
        Err(e) => r.push(
            CheckEntry::fact("bialgebra.comul_multiplicative", false).with_note(e.to_string()),
        ),
    }
    let lhs = Pipeline::on(f, &[n, n]).map(&b.mul).map(&b.counit);
    let rhs = Pipeline::on(f, &[n, n]).then(vec![(&b.counit).into(), (&b.counit).into()]);
    r.push(check_maps("bialgebra.counit_multiplicative", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[1]).map(&b.unit).map(&b.comul);
    let rhs = Pipeline::on(f, &[1]).then(vec![(&b.unit).into(), (&b.unit).into()]);
    r.push(check_maps("bialgebra.comul_unit", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[1]).map(&b.unit).map(&b.counit);
    r.push(check_maps(
        "bialgebra.counit_unit",
        &lhs,
        &Pipeline::on(f, &[1]),
    ));

    let eta_eps = Pipeline::on(f, &[n]).map(&b.counit).map(&b.unit);
    let left = Pipeline::on(f, &[n])
        .map(&b.comul)
        .then(vec![(&b.antipode).into(), id(n)])
        .map(&b.mul);
    let right = Pipeline::on(f, &[n])
        .map(&b.comul)
        .then(vec![id(n), (&b.antipode).into()])
        .map(&b.mul);
    r.push(check_maps("antipode.left", &left, &eta_eps));
    r.push(check_maps("antipode.right", &right, &eta_eps));
    r
}
