//! Modules, comodules, Yetter-Drinfeld modules and their braiding.

use crate::error::{Error, Result};
use crate::hopf::algebra::{expect_shape, HopfAlgebraData};
use crate::linalg::{id, perm, rank, swap, Factor, LinearMap, Pipeline};
use crate::report::{check_maps, CheckEntry, CheckReport};

/// A left action `▷: H ⊗ V → V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    pub acting_dim: usize,
    pub carrier_dim: usize,
    pub map: LinearMap,
}

/// A left coaction `Δ_L: V → H ⊗ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction {
    pub coacting_dim: usize,
    pub carrier_dim: usize,
    pub map: LinearMap,
}

/// A module and comodule over the same Hopf algebra and carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YetterDrinfeldModule {
    pub action: ModuleAction,
    pub coaction: Coaction,
}

impl ModuleAction {
    pub fn new(acting_dim: usize, carrier_dim: usize, map: LinearMap) -> Result<Self> {
        expect_shape(&map, carrier_dim, acting_dim * carrier_dim, "action")?;
        Ok(ModuleAction {
            acting_dim,
            carrier_dim,
            map,
        })
    }

    /// `h ▷ v = ε(h) v`.
    pub fn trivial(h: &HopfAlgebraData, carrier_dim: usize) -> Self {
        let map = h
            .counit
            .kron(&LinearMap::identity(h.field, carrier_dim))
            .expect("same field");
        ModuleAction {
            acting_dim: h.dim,
            carrier_dim,
            map,
        }
    }

    /// `h ▷ g = h₁ g S h₂` on the Hopf algebra itself.
    pub fn adjoint(h: &HopfAlgebraData) -> Self {
        let n = h.dim;
        let f = h.field;
        let map = Pipeline::new(f)
            .then(vec![(&h.comul).into(), id(n)])
            .then(vec![id(n), swap(f, n, n)])
            .then(vec![id(n), id(n), (&h.antipode).into()])
            .then(vec![(&h.mul).into(), id(n)])
            .map(&h.mul)
            .materialize();
        ModuleAction {
            acting_dim: n,
            carrier_dim: n,
            map,
        }
    }

    pub fn factor(&self) -> Factor<'_> {
        Factor::Map(&self.map)
    }
}

impl Coaction {
    pub fn new(coacting_dim: usize, carrier_dim: usize, map: LinearMap) -> Result<Self> {
        expect_shape(&map, coacting_dim * carrier_dim, carrier_dim, "coaction")?;
        Ok(Coaction {
            coacting_dim,
            carrier_dim,
            map,
        })
    }

    /// `v ↦ 1 ⊗ v`.
    pub fn trivial(h: &HopfAlgebraData, carrier_dim: usize) -> Self {
        let map = h
            .unit
            .kron(&LinearMap::identity(h.field, carrier_dim))
            .expect("same field");
        Coaction {
            coacting_dim: h.dim,
            carrier_dim,
            map,
        }
    }

    /// The regular coaction `Δ_L = Δ`.
    pub fn regular(h: &HopfAlgebraData) -> Self {
        Coaction {
            coacting_dim: h.dim,
            carrier_dim: h.dim,
            map: h.comul.clone(),
        }
    }

    pub fn factor(&self) -> Factor<'_> {
        Factor::Map(&self.map)
    }
}

impl YetterDrinfeldModule {
    pub fn new(action: ModuleAction, coaction: Coaction) -> Result<Self> {
        if action.acting_dim != coaction.coacting_dim || action.carrier_dim != coaction.carrier_dim
        {
            return Err(Error::dims(
                format!("action {}⊗{}", action.acting_dim, action.carrier_dim),
                format!(
                    "coaction {}⊗{}",
                    coaction.coacting_dim, coaction.carrier_dim
                ),
            ));
        }
        Ok(YetterDrinfeldModule { action, coaction })
    }

    /// `H` with the adjoint action and regular coaction.
    pub fn adjoint_regular(h: &HopfAlgebraData) -> Self {
        YetterDrinfeldModule {
            action: ModuleAction::adjoint(h),
            coaction: Coaction::regular(h),
        }
    }

    /// The one-dimensional trivial object.
    pub fn unit_object(h: &HopfAlgebraData) -> Self {
        YetterDrinfeldModule {
            action: ModuleAction::trivial(h, 1),
            coaction: Coaction::trivial(h, 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.action.carrier_dim
    }
}

fn check_acting(h: &HopfAlgebraData, dim: usize, what: &str) {
    assert_eq!(h.dim, dim, "{what}: Hopf algebra dimension mismatch");
}

/// `(hg)▷v = h▷(g▷v)` and `1▷v = v`.
pub fn check_module(h: &HopfAlgebraData, act: &ModuleAction) -> CheckReport {
    check_acting(h, act.acting_dim, "module");
    let f = h.field;
    let (n, v) = (h.dim, act.carrier_dim);
    let mut r = CheckReport::new();
    let lhs = Pipeline::on(f, &[n, n, v])
        .then(vec![(&h.mul).into(), id(v)])
        .then(vec![act.factor()]);
    let rhs = Pipeline::on(f, &[n, n, v])
        .then(vec![id(n), act.factor()])
        .then(vec![act.factor()]);
    r.push(check_maps("associativity", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[1, v])
        .then(vec![(&h.unit).into(), id(v)])
        .then(vec![act.factor()]);
    r.push(check_maps("unit", &lhs, &Pipeline::on(f, &[v])));
    r
}

/// `(id⊗Δ_L)Δ_L = (Δ⊗id)Δ_L` and `(ε⊗id)Δ_L = id`.
pub fn check_comodule(h: &HopfAlgebraData, co: &Coaction) -> CheckReport {
    check_acting(h, co.coacting_dim, "comodule");
    let f = h.field;
    let (n, v) = (h.dim, co.carrier_dim);
    let mut r = CheckReport::new();
    let lhs = Pipeline::on(f, &[v])
        .then(vec![co.factor()])
        .then(vec![id(n), co.factor()]);
    let rhs = Pipeline::on(f, &[v])
        .then(vec![co.factor()])
        .then(vec![(&h.comul).into(), id(v)]);
    r.push(check_maps("coassociativity", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[v])
        .then(vec![co.factor()])
        .then(vec![(&h.counit).into(), id(v)]);
    r.push(check_maps("counit", &lhs, &Pipeline::on(f, &[v])));
    r
}

/// `h▷(ab) = (h₁▷a)(h₂▷b)` and `h▷1 = ε(h)1`.
pub fn check_module_algebra(
    h: &HopfAlgebraData,
    mul: &LinearMap,
    unit: &LinearMap,
    act: &ModuleAction,
) -> CheckReport {
    check_acting(h, act.acting_dim, "module algebra");
    let f = h.field;
    let (n, a) = (h.dim, act.carrier_dim);
    let mut r = CheckReport::new();
    let lhs = Pipeline::on(f, &[n, a, a])
        .then(vec![id(n), mul.into()])
        .then(vec![act.factor()]);
    let rhs = Pipeline::on(f, &[n, a, a])
        .then(vec![(&h.comul).into(), id(a), id(a)])
        .then(vec![perm(f, &[n, n, a, a], &[0, 2, 1, 3])])
        .then(vec![act.factor(), act.factor()])
        .then(vec![mul.into()]);
    r.push(check_maps("product", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[n])
        .then(vec![id(n), unit.into()])
        .then(vec![act.factor()]);
    let rhs = Pipeline::on(f, &[n])
        .then(vec![(&h.counit).into()])
        .then(vec![unit.into()]);
    r.push(check_maps("unit", &lhs, &rhs));
    r
}

/// `Δ(h▷a) = h₁▷a₁ ⊗ h₂▷a₂` and `ε(h▷a) = ε(h)ε(a)`.
pub fn check_module_coalgebra(
    h: &HopfAlgebraData,
    comul: &LinearMap,
    counit: &LinearMap,
    act: &ModuleAction,
) -> CheckReport {
    check_acting(h, act.acting_dim, "module coalgebra");
    let f = h.field;
    let (n, a) = (h.dim, act.carrier_dim);
    let mut r = CheckReport::new();
    let lhs = Pipeline::on(f, &[n, a])
        .then(vec![act.factor()])
        .then(vec![comul.into()]);
    let rhs = Pipeline::on(f, &[n, a])
        .then(vec![(&h.comul).into(), comul.into()])
        .then(vec![perm(f, &[n, n, a, a], &[0, 2, 1, 3])])
        .then(vec![act.factor(), act.factor()]);
    r.push(check_maps("coproduct", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[n, a])
        .then(vec![act.factor()])
        .then(vec![counit.into()]);
    let rhs = Pipeline::on(f, &[n, a]).then(vec![(&h.counit).into(), counit.into()]);
    r.push(check_maps("counit", &lhs, &rhs));
    r
}

/// Right-hand side of the crossed-module compatibility,
/// `h ⊗ v ↦ h₁ v⁽¹⁾ S(h_k) ⊗ h_j ▷ v⁽²⁾`, where `(j, k)` is `(2, 3)` for the
/// standard condition and `(3, 2)` for the transposed ordering.
fn yd_rhs<'a>(
    h: &'a HopfAlgebraData,
    act: &'a ModuleAction,
    co: &'a Coaction,
    transposed: bool,
) -> Pipeline<'a> {
    let f = h.field;
    let (n, v) = (h.dim, act.carrier_dim);
    // (h1, h2, h3, c, v') → (h1, c, S-slot, act-slot, v')
    let order: [usize; 5] = if transposed {
        [0, 3, 1, 2, 4]
    } else {
        [0, 3, 2, 1, 4]
    };
    Pipeline::on(f, &[n, v])
        .then(vec![(&h.comul).into(), id(v)])
        .then(vec![id(n), (&h.comul).into(), id(v)])
        .then(vec![id(n), id(n), id(n), co.factor()])
        .then(vec![perm(f, &[n, n, n, n, v], &order)])
        .then(vec![id(n), id(n), (&h.antipode).into(), id(n), id(v)])
        .then(vec![(&h.mul).into(), id(n), id(n), id(v)])
        .then(vec![(&h.mul).into(), id(n), id(v)])
        .then(vec![id(n), act.factor()])
}

/// Module, comodule and crossed-module compatibility
/// `Δ_L(h▷v) = h₁ v⁽¹⁾ S h₃ ⊗ h₂▷v⁽²⁾`.
///
/// The variant with `h₂` and `h₃` exchanged is reported as an informational
/// entry; the two coincide when `H` is cocommutative.
pub fn check_yetter_drinfeld(h: &HopfAlgebraData, yd: &YetterDrinfeldModule) -> CheckReport {
    let mut r = CheckReport::new();
    r.absorb("module", check_module(h, &yd.action));
    r.absorb("comodule", check_comodule(h, &yd.coaction));
    let lhs = Pipeline::on(h.field, &[h.dim, yd.dim()])
        .then(vec![yd.action.factor()])
        .then(vec![yd.coaction.factor()]);
    let std = yd_rhs(h, &yd.action, &yd.coaction, false);
    r.push(check_maps("compatibility", &lhs, &std));
    let alt = yd_rhs(h, &yd.action, &yd.coaction, true);
    r.push(check_maps("compatibility_transposed", &lhs, &alt).informational());
    r
}

/// Only the compatibility identity, without the module/comodule laws.
pub fn yd_compatibility(h: &HopfAlgebraData, act: &ModuleAction, co: &Coaction) -> CheckEntry {
    let lhs = Pipeline::on(h.field, &[h.dim, act.carrier_dim])
        .then(vec![act.factor()])
        .then(vec![co.factor()]);
    check_maps("compatibility", &lhs, &yd_rhs(h, act, co, false))
}

/// `Ψ(v ⊗ w) = v⁽¹⁾▷w ⊗ v⁽²⁾` as a matrix `V⊗W → W⊗V`, as a lazy pipeline.
pub fn braiding_pipeline<'a>(
    h: &'a HopfAlgebraData,
    v: &'a YetterDrinfeldModule,
    w: &'a YetterDrinfeldModule,
) -> Pipeline<'a> {
    let f = h.field;
    let (n, dv, dw) = (h.dim, v.dim(), w.dim());
    Pipeline::on(f, &[dv, dw])
        .then(vec![v.coaction.factor(), id(dw)])
        .then(vec![perm(f, &[n, dv, dw], &[0, 2, 1])])
        .then(vec![w.action.factor(), id(dv)])
}

/// The braiding `Ψ_{V,W}`; errors if the result is singular.
pub fn braiding(
    h: &HopfAlgebraData,
    v: &YetterDrinfeldModule,
    w: &YetterDrinfeldModule,
) -> Result<LinearMap> {
    if v.action.acting_dim != h.dim || w.action.acting_dim != h.dim {
        return Err(Error::dims(
            format!("Hopf algebra of dim {}", h.dim),
            "module over a different Hopf algebra",
        ));
    }
    let psi = braiding_pipeline(h, v, w).materialize();
    if rank(&psi) != psi.cols() {
        return Err(Error::SingularBraiding);
    }
    Ok(psi)
}

/// `U ⊗ V` with diagonal action and coaction `u⁽¹⁾v⁽¹⁾ ⊗ u⁽²⁾ ⊗ v⁽²⁾`.
pub fn yd_tensor(
    h: &HopfAlgebraData,
    u: &YetterDrinfeldModule,
    v: &YetterDrinfeldModule,
) -> YetterDrinfeldModule {
    let f = h.field;
    let (n, du, dv) = (h.dim, u.dim(), v.dim());
    let action = Pipeline::new(f)
        .then(vec![(&h.comul).into(), id(du), id(dv)])
        .then(vec![perm(f, &[n, n, du, dv], &[0, 2, 1, 3])])
        .then(vec![u.action.factor(), v.action.factor()])
        .materialize();
    let coaction = Pipeline::new(f)
        .then(vec![u.coaction.factor(), v.coaction.factor()])
        .then(vec![perm(f, &[n, du, n, dv], &[0, 2, 1, 3])])
        .then(vec![(&h.mul).into(), id(du), id(dv)])
        .materialize();
    YetterDrinfeldModule {
        action: ModuleAction {
            acting_dim: n,
            carrier_dim: du * dv,
            map: action,
        },
        coaction: Coaction {
            coacting_dim: n,
            carrier_dim: du * dv,
            map: coaction,
        },
    }
}

/// Braid relation `(Ψ⊗id)(id⊗Ψ)(Ψ⊗id) = (id⊗Ψ)(Ψ⊗id)(id⊗Ψ)` on `V⊗V⊗V`.
pub fn check_braid_relation(h: &HopfAlgebraData, v: &YetterDrinfeldModule) -> Result<CheckEntry> {
    let psi = braiding(h, v, v)?;
    let f = h.field;
    let d = v.dim();
    let lhs = Pipeline::on(f, &[d, d, d])
        .then(vec![(&psi).into(), id(d)])
        .then(vec![id(d), (&psi).into()])
        .then(vec![(&psi).into(), id(d)]);
    let rhs = Pipeline::on(f, &[d, d, d])
        .then(vec![id(d), (&psi).into()])
        .then(vec![(&psi).into(), id(d)])
        .then(vec![id(d), (&psi).into()]);
    Ok(check_maps("braid_relation", &lhs, &rhs))
}

/// Both hexagon identities for the triple `(U, V, W)`:
/// `Ψ_{U⊗V,W} = (Ψ_{U,W}⊗id)(id⊗Ψ_{V,W})` and
/// `Ψ_{U,V⊗W} = (id⊗Ψ_{U,W})(Ψ_{U,V}⊗id)`.
pub fn check_hexagon(
    h: &HopfAlgebraData,
    u: &YetterDrinfeldModule,
    v: &YetterDrinfeldModule,
    w: &YetterDrinfeldModule,
) -> Result<CheckReport> {
    let f = h.field;
    let (du, dv, dw) = (u.dim(), v.dim(), w.dim());
    let uv = yd_tensor(h, u, v);
    let vw = yd_tensor(h, v, w);
    let psi_uv_w = braiding(h, &uv, w)?;
    let psi_u_vw = braiding(h, u, &vw)?;
    let psi_uw = braiding(h, u, w)?;
    let psi_vw = braiding(h, v, w)?;
    let psi_uv = braiding(h, u, v)?;
    let mut r = CheckReport::new();
    let lhs = Pipeline::on(f, &[du, dv, dw]).then(vec![(&psi_uv_w).into()]);
    let rhs = Pipeline::on(f, &[du, dv, dw])
        .then(vec![id(du), (&psi_vw).into()])
        .then(vec![(&psi_uw).into(), id(dv)]);
    r.push(check_maps("hexagon.left", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[du, dv, dw]).then(vec![(&psi_u_vw).into()]);
    let rhs = Pipeline::on(f, &[du, dv, dw])
        .then(vec![(&psi_uv).into(), id(dw)])
        .then(vec![id(dv), (&psi_uw).into()]);
    r.push(check_maps("hexagon.right", &lhs, &rhs));
    Ok(r)
}

/// Whether `f: V → W` intertwines both actions and both coactions.
pub fn check_yd_morphism(
    h: &HopfAlgebraData,
    map: &LinearMap,
    v: &YetterDrinfeldModule,
    w: &YetterDrinfeldModule,
) -> CheckReport {
    let fl = h.field;
    let (n, dv) = (h.dim, v.dim());
    assert_eq!(map.shape(), (w.dim(), dv), "morphism shape");
    let mut r = CheckReport::new();
    let lhs = Pipeline::on(fl, &[n, dv])
        .then(vec![v.action.factor()])
        .map(map);
    let rhs = Pipeline::on(fl, &[n, dv])
        .then(vec![id(n), map.into()])
        .then(vec![w.action.factor()]);
    r.push(check_maps("equivariant", &lhs, &rhs));
    let lhs = Pipeline::on(fl, &[dv])
        .then(vec![v.coaction.factor()])
        .then(vec![id(n), map.into()]);
    let rhs = Pipeline::on(fl, &[dv])
        .map(map)
        .then(vec![w.coaction.factor()]);
    r.push(check_maps("coequivariant", &lhs, &rhs));
    r
}

/// Naturality of the braiding along a morphism `f: V → V'` in both slots:
/// `Ψ_{V',W}(f⊗id) = (id⊗f)Ψ_{V,W}` and `Ψ_{W,V'}(id⊗f) = (f⊗id)Ψ_{W,V}`.
pub fn check_naturality(
    h: &HopfAlgebraData,
    map: &LinearMap,
    v: &YetterDrinfeldModule,
    v2: &YetterDrinfeldModule,
    w: &YetterDrinfeldModule,
) -> Result<CheckReport> {
    let fl = h.field;
    let (dv, dw) = (v.dim(), w.dim());
    let psi_v2w = braiding(h, v2, w)?;
    let psi_vw = braiding(h, v, w)?;
    let psi_wv2 = braiding(h, w, v2)?;
    let psi_wv = braiding(h, w, v)?;
    let mut r = CheckReport::new();
    let lhs = Pipeline::on(fl, &[dv, dw])
        .then(vec![map.into(), id(dw)])
        .map(&psi_v2w);
    let rhs = Pipeline::on(fl, &[dv, dw])
        .map(&psi_vw)
        .then(vec![id(dw), map.into()]);
    r.push(check_maps("naturality.left", &lhs, &rhs));
    let lhs = Pipeline::on(fl, &[dw, dv])
        .then(vec![id(dw), map.into()])
        .map(&psi_wv2);
    let rhs = Pipeline::on(fl, &[dw, dv])
        .map(&psi_wv)
        .then(vec![map.into(), id(dw)]);
    r.push(check_maps("naturality.right", &lhs, &rhs));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn kz2() -> HopfAlgebraData {
        let q = Field::Rational;
        let one = q.one();
        let mul = LinearMap::from_triples(
            q,
            2,
            4,
            [
                (0, 0, one.clone()),
                (1, 1, one.clone()),
                (1, 2, one.clone()),
                (0, 3, one.clone()),
            ],
        )
        .unwrap();
        let unit = LinearMap::from_triples(q, 2, 1, [(0, 0, one.clone())]).unwrap();
        let comul =
            LinearMap::from_triples(q, 4, 2, [(0, 0, one.clone()), (3, 1, one.clone())]).unwrap();
        let counit =
            LinearMap::from_triples(q, 1, 2, [(0, 0, one.clone()), (0, 1, one.clone())]).unwrap();
        HopfAlgebraData::new("kZ2", mul, unit, comul, counit, LinearMap::identity(q, 2)).unwrap()
    }

    #[test]
    fn trivial_coaction_braids_by_flip() {
        let h = kz2();
        let v = YetterDrinfeldModule::new(ModuleAction::trivial(&h, 2), Coaction::trivial(&h, 2))
            .unwrap();
        assert!(check_yetter_drinfeld(&h, &v).passed());
        assert_eq!(
            braiding(&h, &v, &v).unwrap(),
            LinearMap::flip(h.field, 2, 2)
        );
    }

    #[test]
    fn adjoint_regular_on_commutative_is_flip() {
        let h = kz2();
        let v = YetterDrinfeldModule::adjoint_regular(&h);
        assert!(check_yetter_drinfeld(&h, &v).passed());
        assert_eq!(
            braiding(&h, &v, &v).unwrap(),
            LinearMap::flip(h.field, 2, 2)
        );
        assert!(check_braid_relation(&h, &v).unwrap().passed);
        assert!(check_hexagon(&h, &v, &v, &v).unwrap().passed());
    }

    #[test]
    fn swapping_action_breaks_compatibility() {
        // g acts on k² by swapping coordinates while the coaction grades
        // the coordinates by 1 and g: Δ_L(h▷v) picks up the wrong degree.
        let h = kz2();
        let q = h.field;
        let one = q.one();
        let act = LinearMap::from_triples(
            q,
            2,
            4,
            [
                (0, 0, one.clone()),
                (1, 1, one.clone()),
                (1, 2, one.clone()),
                (0, 3, one.clone()),
            ],
        )
        .unwrap();
        let co =
            LinearMap::from_triples(q, 4, 2, [(0, 0, one.clone()), (3, 1, one.clone())]).unwrap();
        let yd = YetterDrinfeldModule::new(
            ModuleAction::new(2, 2, act).unwrap(),
            Coaction::new(2, 2, co).unwrap(),
        )
        .unwrap();
        let r = check_yetter_drinfeld(&h, &yd);
        assert!(r.all_hold("module") && r.all_hold("comodule"));
        let e = r.get("compatibility").unwrap();
        assert!(!e.passed && e.witness.is_some());
    }

    #[test]
    fn unit_inclusion_is_natural() {
        let h = kz2();
        let v = YetterDrinfeldModule::adjoint_regular(&h);
        let k = YetterDrinfeldModule::unit_object(&h);
        assert!(check_yd_morphism(&h, &h.unit, &k, &v).passed());
        assert!(check_naturality(&h, &h.unit, &k, &v, &v).unwrap().passed());
    }
}
