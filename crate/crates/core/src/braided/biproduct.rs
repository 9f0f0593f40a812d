//! The biproduct `B ⋊· H`, its two projections, and the twisted tensor
//! form `H ⋈ H` of the biproduct of a transmutation.

use std::sync::Arc;

use crate::constructions::TransportedForm;
use crate::error::{Error, Result};
use crate::hopf::{
    algebra_generators, check_hopf_map, tensor_product, HopfAlgebraData, HopfStructure,
};
use crate::linalg::{id, perm, CachedPipeline, Factor, LinearMap, Pipeline, Vector};
use crate::report::{check_maps, CheckEntry, CheckReport, Scope};
use crate::scalar::Field;
use crate::two_group::{check_embedded_quantum_groupoid, check_same_map, QuantumGroupoidData};

use super::crossed::{check_braided_crossed_module, BraidedCrossedModuleData};
use super::hopf::{check_braided_hopf, transmutation, BraidedHopfData};
use super::quasitriangular::{tensor_power_product, QuasitriangularStructure};

/// `B ⋊· H` evaluated lazily: smash product by the given action, smash
/// coproduct `b₁ ⊗ b₂⁽¹⁾h₁ ⊗ b₂⁽²⁾ ⊗ h₂` by the given coaction.
pub struct Biproduct<'a> {
    pub braided: &'a BraidedHopfData,
    pub hopf: &'a HopfAlgebraData,
    name: String,
    mul: Arc<CachedPipeline<'a>>,
    comul: Arc<CachedPipeline<'a>>,
    antipode: Arc<CachedPipeline<'a>>,
    unit: LinearMap,
    counit: LinearMap,
}

impl<'a> Biproduct<'a> {
    pub fn new(b: &'a BraidedHopfData, h: &'a HopfAlgebraData) -> Result<Self> {
        if b.yd.action.acting_dim != h.dim || b.field != h.field {
            return Err(Error::dims(
                format!("Hopf algebra {}", h.name),
                "YD module over another algebra",
            ));
        }
        let f = h.field;
        let (nb, nh) = (b.dim, h.dim);
        let act = b.yd.action.factor();
        let co = b.yd.coaction.factor();
        let mul = Pipeline::on(f, &[nb, nh, nb, nh])
            .then(vec![id(nb), (&h.comul).into(), id(nb), id(nh)])
            .then(vec![perm(f, &[nb, nh, nh, nb, nh], &[0, 1, 3, 2, 4])])
            .then(vec![id(nb), act.clone(), id(nh), id(nh)])
            .then(vec![(&b.mul).into(), (&h.mul).into()]);
        let comul = Pipeline::on(f, &[nb, nh])
            .then(vec![(&b.comul).into(), (&h.comul).into()])
            .then(vec![id(nb), co.clone(), id(nh), id(nh)])
            .then(vec![perm(f, &[nb, nh, nb, nh, nh], &[0, 1, 3, 2, 4])])
            .then(vec![id(nb), (&h.mul).into(), id(nb), id(nh)]);
        // S(b⊗h) = (1 ⊗ S(b⁽¹⁾h)) (S b⁽²⁾ ⊗ 1) = x₁ ▷ S b⁽²⁾ ⊗ x₂ for x = S(b⁽¹⁾h)
        let antipode = Pipeline::on(f, &[nb, nh])
            .then(vec![co, id(nh)])
            .then(vec![perm(f, &[nh, nb, nh], &[0, 2, 1])])
            .then(vec![(&h.mul).into(), (&b.antipode).into()])
            .then(vec![(&h.antipode).into(), id(nb)])
            .then(vec![(&h.comul).into(), id(nb)])
            .then(vec![perm(f, &[nh, nh, nb], &[0, 2, 1])])
            .then(vec![act, id(nh)]);
        Ok(Biproduct {
            braided: b,
            hopf: h,
            name: format!("{}>·{}", b.name, h.name),
            mul: CachedPipeline::new(mul),
            comul: CachedPipeline::new(comul),
            antipode: CachedPipeline::new(antipode),
            unit: b.unit.kron(&h.unit)?,
            counit: b.counit.kron(&h.counit)?,
        })
    }

    /// Stored structure constants; quadratic in the dimension.
    pub fn materialize(&self) -> Result<HopfAlgebraData> {
        HopfAlgebraData::new(
            self.name.clone(),
            self.mul.pipeline().materialize(),
            self.unit.clone(),
            self.comul.pipeline().materialize(),
            self.counit.clone(),
            self.antipode.pipeline().materialize(),
        )
    }

    /// `b ⊗ 1` for `b` in a basis of `B` and `1 ⊗ h` for `h` in a basis of
    /// `H`; every basis element is a product of two of these.
    pub fn generator_scope(&self) -> Scope {
        let (b, h) = (self.braided, self.hopf);
        let (one_b, one_h) = (b.one(), h.one());
        let mut generators: Vec<Vector> = algebra_generators(&b.mul, &b.unit)
            .into_iter()
            .map(|i| b.basis(i).tensor(&one_h))
            .collect();
        generators.extend(
            algebra_generators(&h.mul, &h.unit)
                .into_iter()
                .map(|i| one_b.tensor(&h.basis(i))),
        );
        Scope::Sample {
            dim: b.dim * h.dim,
            generators,
        }
    }
}

impl HopfStructure for Biproduct<'_> {
    fn name(&self) -> &str {
        &self.name
    }
    fn field(&self) -> Field {
        self.hopf.field
    }
    fn dim(&self) -> usize {
        self.braided.dim * self.hopf.dim
    }
    fn mul(&self) -> Factor<'_> {
        Factor::Cached(self.mul.clone())
    }
    fn unit(&self) -> Factor<'_> {
        Factor::Map(&self.unit)
    }
    fn comul(&self) -> Factor<'_> {
        Factor::Cached(self.comul.clone())
    }
    fn counit(&self) -> Factor<'_> {
        Factor::Map(&self.counit)
    }
    fn antipode(&self) -> Factor<'_> {
        Factor::Cached(self.antipode.clone())
    }
}

/// The materialised biproduct; fails if `B` is not a braided Hopf algebra.
pub fn biproduct(b: &BraidedHopfData, h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    let report = check_braided_hopf(b, h);
    if let Some(first) = report.first_failure() {
        return Err(Error::Precondition {
            check: first.name.clone(),
            report: Box::new(report),
        });
    }
    Biproduct::new(b, h)?.materialize()
}

/// `H₁ = B ⋊· H` with `s(b⊗h) = ε(b)h`, `t(b⊗h) = d(b)h`, `i(h) = 1⊗h`.
pub struct BiproductProjections<'a> {
    pub total: Biproduct<'a>,
    pub source: LinearMap,
    pub target: LinearMap,
    pub inclusion: LinearMap,
}

/// Builds the projections after checking the braided crossed module.
pub fn biproduct_projections(bcm: &BraidedCrossedModuleData) -> Result<BiproductProjections<'_>> {
    let report = check_braided_crossed_module(bcm);
    if let Some(first) = report.first_failure() {
        return Err(Error::Precondition {
            check: first.name.clone(),
            report: Box::new(report),
        });
    }
    Ok(biproduct_projections_unchecked(bcm))
}

/// [`biproduct_projections`] without checking the braided crossed module.
pub fn biproduct_projections_unchecked(bcm: &BraidedCrossedModuleData) -> BiproductProjections<'_> {
    let (b, h) = (&bcm.braided, &bcm.hopf);
    let f = h.field;
    let ident = LinearMap::identity(f, h.dim);
    let target = Pipeline::on(f, &[b.dim, h.dim])
        .then(vec![(&bcm.boundary).into(), id(h.dim)])
        .map(&h.mul)
        .materialize();
    BiproductProjections {
        total: Biproduct::new(b, h).expect("checked structure"),
        source: b.counit.kron(&ident).expect("same field"),
        target,
        inclusion: b.unit.kron(&ident).expect("same field"),
    }
}

/// Hopf axioms of `H₁`, `s`, `t`, `i` as Hopf maps, `si = ti = id`. Products
/// in `H₁` range over `scope`.
pub fn check_biproduct_projections(p: &BiproductProjections<'_>, scope: &Scope) -> CheckReport {
    let h = p.total.hopf;
    let mut r = CheckReport::new();
    r.absorb("hopf", crate::hopf::check_hopf_in(&p.total, scope));
    r.absorb(
        "source",
        check_hopf_map(Factor::Map(&p.source), &p.total, h, scope),
    );
    r.absorb(
        "target",
        check_hopf_map(Factor::Map(&p.target), &p.total, h, scope),
    );
    r.absorb(
        "inclusion",
        check_hopf_map(Factor::Map(&p.inclusion), h, &p.total, scope),
    );
    let ident = LinearMap::identity(h.field, h.dim);
    r.push(check_same_map(
        "source_section",
        &p.source.compose(&p.inclusion).expect("shapes"),
        &ident,
    ));
    r.push(check_same_map(
        "target_section",
        &p.target.compose(&p.inclusion).expect("shapes"),
        &ident,
    ));
    r
}

/// `θ(b⊗h) = bh₁ ⊗ h₂` from `B(H) ⋊· H` to `H ⊗ H`, and its inverse
/// `x⊗y ↦ xSy₁ ⊗ y₂`.
fn tensor_form_maps(h: &HopfAlgebraData) -> (LinearMap, LinearMap) {
    let form = TransportedForm::closed_form(h).expect("tensor product of one field");
    (form.to_tensor, form.from_tensor)
}

/// `R₃₂ Δ_{H⊗H}(z) R₃₂⁻¹` on `H ⊗ H`.
pub fn twisted_tensor_coproduct(q: &QuasitriangularStructure) -> Result<LinearMap> {
    let h = &q.hopf;
    let f = h.field;
    let n = h.dim;
    let inv = q
        .r_inverse
        .as_ref()
        .ok_or_else(|| Error::NoSolution("R is not invertible".to_string()))?;
    // 1 ⊗ R² ⊗ R¹ ⊗ 1 from (R¹, R², 1, 1)
    let place = Pipeline::on(f, &[n, n, n, n]).then(vec![perm(f, &[n, n, n, n], &[2, 1, 0, 3])]);
    let ones = h.one().tensor(&h.one());
    let r32 = place.apply(&q.r.tensor(&ones));
    let r32_inv = place.apply(&inv.tensor(&ones));
    let plain = tensor_product(h, h)?;
    let prod = tensor_power_product(h, 4);
    Ok(LinearMap::from_fn(f, n.pow(4), n * n, |z| {
        let left = prod.apply(&r32.tensor(plain.comul.column(z)));
        prod.apply(&left.tensor(&r32_inv))
    }))
}

/// The tensor-form `H₁ = H ⋈ H` transported from `B(H) ⋊· H`, with the
/// structure maps of the adjoint closed form, checked against the claims:
/// the isomorphism, equal `s`, `t`, `i`, coactions and cotensor, and the
/// failure of `Δ` to be multiplicative for `∘`.
pub fn check_twisted_tensor_negative(q: &QuasitriangularStructure) -> Result<CheckReport> {
    let h = &q.hopf;
    let f = h.field;
    let n = h.dim;
    let b = transmutation(q)?;
    let bcm = BraidedCrossedModuleData::transmuted(b, h.clone())?;
    let proj = biproduct_projections_unchecked(&bcm);
    let bip = &proj.total;
    let (theta, theta_inv) = tensor_form_maps(h);
    let mut r = CheckReport::new();

    let ident = LinearMap::identity(f, n * n);
    r.push(check_same_map(
        "isomorphism.inverse",
        &theta.compose(&theta_inv)?,
        &ident,
    ));
    let plain = tensor_product(h, h)?;
    let lhs = Pipeline::on(f, &[n * n, n * n])
        .then(vec![bip.mul()])
        .map(&theta);
    let rhs = Pipeline::on(f, &[n * n, n * n])
        .then(vec![(&theta).into(), (&theta).into()])
        .map(&plain.mul);
    r.push(check_maps("isomorphism.multiplicative", &lhs, &rhs));

    let comul = Pipeline::on(f, &[n * n])
        .map(&theta_inv)
        .then(vec![bip.comul()])
        .then(vec![(&theta).into(), (&theta).into()])
        .materialize();
    let twisted = twisted_tensor_coproduct(q)?;
    r.push(check_same_map(
        "isomorphism.twisted_coproduct",
        &comul,
        &twisted,
    ));
    let antipode = Pipeline::on(f, &[n * n])
        .map(&theta_inv)
        .then(vec![bip.antipode()])
        .map(&theta)
        .materialize();
    let total = HopfAlgebraData::new(
        format!("{}-twisted", plain.name),
        plain.mul.clone(),
        plain.unit.clone(),
        comul,
        plain.counit.clone(),
        antipode,
    )?;

    let form = TransportedForm::closed_form(h)?;
    r.push(check_same_map(
        "same.source",
        &proj.source.compose(&theta_inv)?,
        &form.source,
    ));
    r.push(check_same_map(
        "same.target",
        &proj.target.compose(&theta_inv)?,
        &form.target,
    ));
    r.push(check_same_map(
        "same.inclusion",
        &theta.compose(&proj.inclusion)?,
        &form.inclusion,
    ));

    let qg = |total: HopfAlgebraData, name: &str| {
        QuantumGroupoidData::new(
            name,
            total,
            h.clone(),
            form.source.clone(),
            form.target.clone(),
            form.inclusion.clone(),
            form.compose.clone(),
            form.reverse.clone(),
        )
    };
    let twisted_qg = qg(total, "twisted")?;
    let plain_qg = qg(plain, "plain")?;
    r.push(check_same_map(
        "same.left_coaction",
        &twisted_qg.left_coaction(),
        &plain_qg.left_coaction(),
    ));
    r.push(check_same_map(
        "same.right_coaction",
        &twisted_qg.right_coaction(),
        &plain_qg.right_coaction(),
    ));
    let same_cotensor = twisted_qg.cotensor().equals(plain_qg.cotensor())?;
    r.push(
        CheckEntry::fact("same.cotensor", same_cotensor)
            .with_note(format!("dim {}", twisted_qg.cotensor().dim())),
    );

    let groupoid = check_embedded_quantum_groupoid(&twisted_qg);
    let hom = groupoid
        .get("compose.comultiplicative")
        .cloned()
        .expect("groupoid report has the comultiplicativity entry");
    let plain_hom = check_embedded_quantum_groupoid(&plain_qg).holds("compose.comultiplicative");
    let mut info = CheckReport::new();
    info.absorb("groupoid", groupoid);
    for e in info.entries {
        r.push(e.informational());
    }
    r.push(CheckEntry::fact("untwisted_comul_compose_hom", plain_hom).informational());
    let negative = CheckEntry {
        name: "comul_not_compose_hom".to_string(),
        passed: !hom.passed,
        informational: false,
        witness: hom.witness.clone(),
        note: Some(if hom.passed {
            "Δ(x∘y) = Δx∘Δy holds on every basis pair; no witness exists".to_string()
        } else {
            "witness: basis pair where Δ(x∘y) ≠ Δx∘Δy".to_string()
        }),
    };
    r.push(negative);
    Ok(r)
}
