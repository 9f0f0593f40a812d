//! Crossed-module inputs, smash products, and the worked crossed modules
//! built from groups and cocommutative Hopf algebras.

use crate::error::{Error, Result};
use crate::hopf::{
    check_module, check_module_algebra, check_module_coalgebra, tensor_product, HopfAlgebraData,
    ModuleAction,
};
use crate::linalg::{id, perm, swap, LinearMap, Pipeline, Vector};
use crate::report::{check_maps, CheckEntry, CheckReport};
use crate::scalar::Field;

use super::group::{coadjoint_action, function_algebra, group_algebra, CayleyTable};

/// Data `(A, H, d, ▷)`: Hopf algebras `A` and `H`, a linear map `d: A → H`
/// and a left action of `H` on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModuleData {
    pub name: String,
    pub source: HopfAlgebraData,
    pub target: HopfAlgebraData,
    pub boundary: LinearMap,
    pub action: ModuleAction,
}

impl CrossedModuleData {
    pub fn new(
        name: impl Into<String>,
        source: HopfAlgebraData,
        target: HopfAlgebraData,
        boundary: LinearMap,
        action: ModuleAction,
    ) -> Result<Self> {
        if source.field != target.field {
            return Err(Error::FieldMismatch {
                expected: source.field,
                found: target.field,
            });
        }
        crate::hopf::expect_shape(&boundary, target.dim, source.dim, "boundary map")?;
        crate::hopf::expect_field(&boundary, source.field)?;
        if action.acting_dim != target.dim || action.carrier_dim != source.dim {
            return Err(Error::dims(
                format!(
                    "action of a {}-dim algebra on a {}-dim space",
                    action.acting_dim, action.carrier_dim
                ),
                format!("H of dim {} acting on A of dim {}", target.dim, source.dim),
            ));
        }
        Ok(CrossedModuleData {
            name: name.into(),
            source,
            target,
            boundary,
            action,
        })
    }

    pub fn field(&self) -> Field {
        self.source.field
    }

    /// Whether every structure is over `field`; converts otherwise.
    pub fn convert(&self, field: Field) -> Result<Self> {
        Ok(CrossedModuleData {
            name: self.name.clone(),
            source: self.source.convert(field)?,
            target: self.target.convert(field)?,
            boundary: self.boundary.convert(field)?,
            action: ModuleAction {
                map: self.action.map.convert(field)?,
                ..self.action.clone()
            },
        })
    }
}

/// `h₁ ⊗ h₂▷a = h₂ ⊗ h₁▷a`.
pub fn check_action_symmetry(h: &HopfAlgebraData, act: &ModuleAction) -> CheckEntry {
    let f = h.field;
    let (n, a) = (h.dim, act.carrier_dim);
    let lhs = Pipeline::on(f, &[n, a])
        .then(vec![(&h.comul).into(), id(a)])
        .then(vec![id(n), act.factor()]);
    let rhs = Pipeline::on(f, &[n, a])
        .then(vec![(&h.comul).into(), id(a)])
        .then(vec![swap(f, n, n), id(a)])
        .then(vec![id(n), act.factor()]);
    check_maps("action_symmetry", &lhs, &rhs)
}

/// Preconditions for the smash product Hopf algebra.
pub fn smash_preconditions(
    a: &HopfAlgebraData,
    h: &HopfAlgebraData,
    act: &ModuleAction,
) -> CheckReport {
    let mut r = CheckReport::new();
    r.absorb("module", check_module(h, act));
    r.absorb(
        "module_algebra",
        check_module_algebra(h, &a.mul, &a.unit, act),
    );
    r.absorb(
        "module_coalgebra",
        check_module_coalgebra(h, &a.comul, &a.counit, act),
    );
    r.push(check_action_symmetry(h, act));
    r
}

/// `A ⋊ H` with product `(a⊗h)(b⊗g) = a(h₁▷b) ⊗ h₂g`, tensor product unit,
/// counit and coalgebra, and antipode `S(a⊗h) = (1⊗Sh)(Sa⊗1)`.
///
/// Fails with a precondition error naming the first failing check.
pub fn smash_product(
    a: &HopfAlgebraData,
    h: &HopfAlgebraData,
    act: &ModuleAction,
) -> Result<HopfAlgebraData> {
    let pre = smash_preconditions(a, h, act);
    if let Some(first) = pre.first_failure() {
        return Err(Error::Precondition {
            check: first.name.clone(),
            report: Box::new(pre),
        });
    }
    Ok(smash_product_unchecked(a, h, act))
}

/// [`smash_product`] without validating its preconditions.
pub fn smash_product_unchecked(
    a: &HopfAlgebraData,
    h: &HopfAlgebraData,
    act: &ModuleAction,
) -> HopfAlgebraData {
    let f = a.field;
    let (na, nh) = (a.dim, h.dim);
    let mul = Pipeline::new(f)
        .then(vec![id(na), (&h.comul).into(), id(na), id(nh)])
        .then(vec![perm(f, &[na, nh, nh, na, nh], &[0, 1, 3, 2, 4])])
        .then(vec![id(na), act.factor(), id(nh), id(nh)])
        .then(vec![(&a.mul).into(), id(nh), id(nh)])
        .then(vec![id(na), (&h.mul).into()])
        .materialize();
    let comul = Pipeline::new(f)
        .then(vec![(&a.comul).into(), (&h.comul).into()])
        .then(vec![perm(f, &[na, na, nh, nh], &[0, 2, 1, 3])])
        .materialize();
    let unit = a.unit.kron(&h.unit).expect("same field");
    let counit = a.counit.kron(&h.counit).expect("same field");
    // S(a⊗h) = (1 ⊗ Sh)(Sa ⊗ 1)
    let antipode = Pipeline::new(f)
        .then(vec![(&a.antipode).into(), (&h.antipode).into()])
        .then(vec![swap(f, na, nh)])
        .then(vec![(&a.unit).into(), id(nh), id(na), (&h.unit).into()])
        .map(&mul)
        .materialize();
    HopfAlgebraData {
        name: format!("{}⋊{}", a.name, h.name),
        field: f,
        dim: na * nh,
        mul,
        unit,
        comul,
        counit,
        antipode,
    }
}

/// The quantum double crossed module of a finite group, with its smash
/// product `D(G)` and the canonical quasitriangular element.
#[derive(Clone, Debug)]
pub struct QuantumDouble {
    pub crossed: CrossedModuleData,
    /// `k(G) ⋊ kG` with basis `δ_s ⊗ g` at index `s·|G| + g`.
    pub double: HopfAlgebraData,
    /// `Σ_g (δ_g ⊗ 1) ⊗ (1 ⊗ g)` in `D(G) ⊗ D(G)`.
    pub r_matrix: Vector,
}

/// `A = k(G)`, `H = kG`, `d = ηε`, coadjoint action.
pub fn quantum_double_crossed_module(
    field: Field,
    g: &CayleyTable,
    name: &str,
) -> Result<QuantumDouble> {
    let a = function_algebra(field, g, name);
    let h = group_algebra(field, g, name);
    let act = coadjoint_action(field, g);
    let boundary = h.unit.compose(&a.counit)?;
    let double = smash_product(&a, &h, &act)?.renamed(format!("D({name})"));
    let n = g.order();
    let dim = n * n;
    // (δ_g ⊗ e) ⊗ (Σ_s δ_s ⊗ g)
    let entries =
        (0..n).flat_map(|x| (0..n).map(move |s| ((x * n) * dim + (s * n + x), field.one())));
    let r_matrix = Vector::from_entries(dim * dim, entries);
    Ok(QuantumDouble {
        crossed: CrossedModuleData::new(format!("double-{name}"), a, h, boundary, act)?,
        double,
        r_matrix,
    })
}

/// The adjoint crossed module of a cocommutative Hopf algebra together with
/// the tensor-product form of its strict 2-group.
#[derive(Clone, Debug)]
pub struct AdjointCrossedModule {
    pub crossed: CrossedModuleData,
    pub transported: TransportedForm,
}

/// Structure maps on `H₁ = H ⊗ H` obtained by transporting along
/// `φ(h⊗g) = hg₁⊗g₂` (inverse `ψ(h⊗g) = hSg₁⊗g₂`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportedForm {
    /// `H ⊗ H` as a tensor product Hopf algebra.
    pub total: HopfAlgebraData,
    pub to_tensor: LinearMap,
    pub from_tensor: LinearMap,
    /// `s(h⊗g) = ε(h)g`
    pub source: LinearMap,
    /// `t(h⊗g) = hε(g)`
    pub target: LinearMap,
    /// `i = Δ`
    pub inclusion: LinearMap,
    /// `(h⊗g)∘(h'⊗g') = h(Sg)h' ⊗ g'`
    pub compose: LinearMap,
    /// `𝒮(h⊗g) = g⊗h`
    pub reverse: LinearMap,
}

impl TransportedForm {
    /// The closed-form maps for a cocommutative `H`.
    pub fn closed_form(h: &HopfAlgebraData) -> Result<Self> {
        let f = h.field;
        let n = h.dim;
        let ident = LinearMap::identity(f, n);
        let to_tensor = Pipeline::new(f)
            .then(vec![id(n), (&h.comul).into()])
            .then(vec![(&h.mul).into(), id(n)])
            .materialize();
        let from_tensor = Pipeline::new(f)
            .then(vec![id(n), (&h.comul).into()])
            .then(vec![id(n), (&h.antipode).into(), id(n)])
            .then(vec![(&h.mul).into(), id(n)])
            .materialize();
        let compose = Pipeline::new(f)
            .then(vec![id(n), (&h.antipode).into(), id(n), id(n)])
            .then(vec![(&h.mul).into(), id(n), id(n)])
            .then(vec![(&h.mul).into(), id(n)])
            .materialize();
        Ok(TransportedForm {
            total: tensor_product(h, h)?,
            to_tensor,
            from_tensor,
            source: h.counit.kron(&ident)?,
            target: ident.kron(&h.counit)?,
            inclusion: h.comul.clone(),
            compose,
            reverse: LinearMap::flip(f, n, n),
        })
    }
}

/// `A = H`, adjoint action, `d = id`; requires `H` cocommutative.
pub fn adjoint_crossed_module(h: &HopfAlgebraData) -> Result<AdjointCrossedModule> {
    if !h.is_cocommutative() {
        return Err(Error::InvalidInput(format!(
            "{} is not cocommutative; the adjoint crossed module requires τΔ = Δ",
            h.name
        )));
    }
    Ok(AdjointCrossedModule {
        crossed: adjoint_data(h, &format!("adjoint-{}", h.name))?,
        transported: TransportedForm::closed_form(h)?,
    })
}

/// The adjoint data `(H, H, id, ad)` for any `H`, without the
/// cocommutativity requirement (used to exhibit failures).
pub fn adjoint_data(h: &HopfAlgebraData, name: &str) -> Result<CrossedModuleData> {
    CrossedModuleData::new(
        name,
        h.clone(),
        h.clone(),
        LinearMap::identity(h.field, h.dim),
        ModuleAction::adjoint(h),
    )
}

/// The crossed module with trivial source `A = k`: `d = η_H`, trivial action.
pub fn trivial_crossed_module(h: &HopfAlgebraData) -> Result<CrossedModuleData> {
    let k = group_algebra(h.field, &CayleyTable::cyclic(1), "1").renamed("k");
    CrossedModuleData::new(
        format!("trivial-{}", h.name),
        k,
        h.clone(),
        h.unit.clone(),
        ModuleAction::trivial(h, 1),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{check_hopf, check_hopf_map};
    use crate::report::Scope;

    #[test]
    fn double_of_z2_is_a_four_dimensional_hopf_algebra() {
        let q = Field::Rational;
        let d = quantum_double_crossed_module(q, &CayleyTable::cyclic(2), "Z2").unwrap();
        assert_eq!(d.double.dim, 4);
        assert!(check_hopf(&d.double).passed());
        // abelian: the double is the tensor product
        let t = tensor_product(&d.crossed.source, &d.crossed.target).unwrap();
        assert_eq!(t.mul, d.double.mul);
    }

    #[test]
    fn trivial_action_gives_tensor_product() {
        let q = Field::Rational;
        let g = CayleyTable::symmetric(3);
        let a = function_algebra(q, &g, "S3");
        let h = group_algebra(q, &CayleyTable::cyclic(2), "Z2");
        let act = ModuleAction::trivial(&h, a.dim);
        let s = smash_product(&a, &h, &act).unwrap();
        let t = tensor_product(&a, &h).unwrap();
        assert_eq!(s.mul, t.mul);
        assert_eq!(s.comul, t.comul);
        assert_eq!(s.antipode, t.antipode);
    }

    #[test]
    fn adjoint_smash_is_isomorphic_to_tensor_square() {
        let q = Field::Rational;
        let h = group_algebra(q, &CayleyTable::symmetric(3), "S3");
        let adj = adjoint_crossed_module(&h).unwrap();
        let cm = &adj.crossed;
        let smash = smash_product(&cm.source, &cm.target, &cm.action).unwrap();
        assert_eq!(smash.dim, 36);
        assert!(check_hopf(&smash).passed());
        let tf = &adj.transported;
        assert!(tf.to_tensor.compose(&tf.from_tensor).unwrap().is_identity());
        let r = check_hopf_map((&tf.to_tensor).into(), &smash, &tf.total, &Scope::Full);
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn smash_rejects_bad_action() {
        let q = Field::Rational;
        let h = group_algebra(q, &CayleyTable::cyclic(2), "Z2");
        // the zero map is not a module action (1 ▷ a ≠ a)
        let bad = ModuleAction::new(2, 2, LinearMap::zero(q, 2, 4)).unwrap();
        match smash_product(&h, &h, &bad) {
            Err(Error::Precondition { check, .. }) => assert_eq!(check, "module.unit"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_cocommutative_adjoint_is_rejected() {
        let q = Field::Rational;
        let a = function_algebra(q, &CayleyTable::symmetric(3), "S3");
        assert!(adjoint_crossed_module(&a).is_err());
    }
}
