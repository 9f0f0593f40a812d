//! Braided crossed modules `d: B → H` with `B` a Hopf algebra in the
//! Yetter-Drinfeld category of `H`.

use crate::error::{Error, Result};
use crate::hopf::{check_comodule, yd_compatibility, Coaction, HopfAlgebraData};
use crate::linalg::{id, kernel_basis, perm, LinearMap, Pipeline, Vector};
use crate::report::{check_maps, check_on_vectors, CheckEntry, CheckReport};
use crate::two_group::braided_commutative;

use super::hopf::{check_braided_hopf, BraidedHopfData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedCrossedModuleData {
    pub name: String,
    pub braided: BraidedHopfData,
    pub hopf: HopfAlgebraData,
    pub boundary: LinearMap,
}

impl BraidedCrossedModuleData {
    pub fn new(
        name: impl Into<String>,
        braided: BraidedHopfData,
        hopf: HopfAlgebraData,
        boundary: LinearMap,
    ) -> Result<Self> {
        crate::hopf::expect_shape(&boundary, hopf.dim, braided.dim, "boundary")?;
        if braided.yd.action.acting_dim != hopf.dim {
            return Err(Error::dims(
                format!("Hopf algebra of dim {}", hopf.dim),
                format!("YD module over dim {}", braided.yd.action.acting_dim),
            ));
        }
        Ok(BraidedCrossedModuleData {
            name: name.into(),
            braided,
            hopf,
            boundary,
        })
    }

    /// `(B(H), id)`.
    pub fn transmuted(b: BraidedHopfData, h: HopfAlgebraData) -> Result<Self> {
        let boundary = LinearMap::identity(h.field, h.dim);
        Self::new(format!("id-{}", b.name), b, h, boundary)
    }
}

/// `Δ_L(b) = d(b₁) b₂⁽¹⁾ ⊗ b₂⁽²⁾`.
pub fn induced_coaction(cm: &BraidedCrossedModuleData) -> Coaction {
    let (b, h) = (&cm.braided, &cm.hopf);
    let map = Pipeline::on(b.field, &[b.dim])
        .map(&b.comul)
        .then(vec![(&cm.boundary).into(), b.yd.coaction.factor()])
        .then(vec![(&h.mul).into(), id(b.dim)])
        .materialize();
    Coaction {
        coacting_dim: h.dim,
        carrier_dim: b.dim,
        map,
    }
}

/// `B^inv = {b | d(b) = ε(b) 1}`.
pub fn boundary_invariants(cm: &BraidedCrossedModuleData) -> crate::linalg::SubspaceBasis {
    let eta_eps = cm.hopf.unit.compose(&cm.braided.counit).expect("shapes");
    kernel_basis(&cm.boundary.sub(&eta_eps).expect("same shape"))
}

/// The three defining conditions, the induced coaction and its Yetter-Drinfeld
/// and braided-commutativity reformulations, and the `B^inv` consequence.
pub fn check_braided_crossed_module(cm: &BraidedCrossedModuleData) -> CheckReport {
    let (b, h) = (&cm.braided, &cm.hopf);
    let f = b.field;
    let (nb, nh) = (b.dim, h.dim);
    let d = &cm.boundary;
    let mut r = CheckReport::new();
    r.absorb("braided", check_braided_hopf(b, h));

    let lhs = Pipeline::on(f, &[nb, nb]).map(&b.mul).map(d);
    let rhs = Pipeline::on(f, &[nb, nb])
        .then(vec![d.into(), d.into()])
        .map(&h.mul);
    r.push(check_maps("boundary.multiplicative", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[1]).map(&b.unit).map(d);
    r.push(check_maps(
        "boundary.unital",
        &lhs,
        &Pipeline::on(f, &[1]).map(&h.unit),
    ));
    let lhs = Pipeline::on(f, &[nb]).map(d).map(&h.comul);
    let rhs = Pipeline::on(f, &[nb])
        .map(&b.comul)
        .then(vec![id(nb), b.yd.coaction.factor()])
        .then(vec![d.into(), id(nh), d.into()])
        .then(vec![(&h.mul).into(), id(nh)]);
    r.push(check_maps("boundary.twisted_comultiplicative", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[nb]).map(d).map(&h.counit);
    r.push(check_maps(
        "boundary.counital",
        &lhs,
        &Pipeline::on(f, &[nb]).map(&b.counit),
    ));
    let cond2 = r.all_hold("boundary.");

    let lhs = Pipeline::on(f, &[nh, nb])
        .then(vec![b.yd.action.factor()])
        .map(d);
    let rhs = Pipeline::on(f, &[nh, nb])
        .then(vec![(&h.comul).into(), id(nb)])
        .then(vec![perm(f, &[nh, nh, nb], &[0, 2, 1])])
        .then(vec![id(nh), d.into(), (&h.antipode).into()])
        .then(vec![(&h.mul).into(), id(nh)])
        .map(&h.mul);
    let cond3 = check_maps("equivariance", &lhs, &rhs);
    let cond3_holds = cond3.passed;
    r.push(cond3);

    // (a, b) → (a₁, a₂⁽¹⁾, b, a₂⁽²⁾) → a₁ (a₂⁽¹⁾▷b) S a₂⁽²⁾
    let lhs = Pipeline::on(f, &[nb, nb])
        .then(vec![d.into(), id(nb)])
        .then(vec![b.yd.action.factor()]);
    let rhs = Pipeline::on(f, &[nb, nb])
        .then(vec![(&b.comul).into(), id(nb)])
        .then(vec![id(nb), b.yd.coaction.factor(), id(nb)])
        .then(vec![perm(f, &[nb, nh, nb, nb], &[0, 1, 3, 2])])
        .then(vec![id(nb), b.yd.action.factor(), (&b.antipode).into()])
        .then(vec![(&b.mul).into(), id(nb)])
        .map(&b.mul);
    let cond4 = check_maps("braided_adjoint", &lhs, &rhs);
    let cond4_holds = cond4.passed;
    r.push(cond4);

    let induced = induced_coaction(cm);
    let comodule = check_comodule(h, &induced);
    let comodule_holds = comodule.passed();
    if cond2 {
        r.absorb("induced.comodule", comodule);
    } else {
        let mut info = CheckReport::new();
        info.absorb("induced.comodule", comodule);
        for e in info.entries {
            r.push(e.informational());
        }
    }
    let yd = yd_compatibility(h, &b.yd.action, &induced);
    let yd_holds = yd.passed && comodule_holds;
    r.push(yd.renamed("induced.yd").informational());
    r.push(CheckEntry::fact(
        "agreement.equivariance",
        !cond2 || cond3_holds == yd_holds,
    ));

    let lhs = Pipeline::on(f, &[nb])
        .map(&induced.map)
        .then(vec![id(nh), d.into()]);
    let rhs = Pipeline::on(f, &[nb]).map(d).map(&h.comul);
    let hom = check_maps("induced.boundary_comodule_map", &lhs, &rhs);
    r.push(if cond2 { hom } else { hom.informational() });
    let lhs = Pipeline::on(f, &[nb, nb]).map(&b.mul).map(&induced.map);
    let rhs = Pipeline::on(f, &[nb, nb])
        .then(vec![(&induced.map).into(), (&induced.map).into()])
        .then(vec![perm(f, &[nh, nb, nh, nb], &[0, 2, 1, 3])])
        .then(vec![(&h.mul).into(), (&b.mul).into()]);
    let alg = check_maps("induced.multiplicative", &lhs, &rhs);
    r.push(if cond2 && cond3_holds {
        alg
    } else {
        alg.informational()
    });

    let comm = braided_commutative(
        "induced.braided_commutative",
        &b.mul,
        &b.yd.action,
        &induced,
    );
    let comm_holds = comm.passed;
    r.push(comm.informational());
    r.push(CheckEntry::fact(
        "agreement.braided_adjoint",
        !(cond2 && cond3_holds) || cond4_holds == comm_holds,
    ));

    let inv = boundary_invariants(cm);
    let pairs: Vec<Vector> = inv
        .vectors()
        .iter()
        .flat_map(|x| inv.vectors().iter().map(move |y| x.tensor(y)))
        .collect();
    let psi_mul = Pipeline::on(f, &[nb, nb])
        .then(vec![b.yd.coaction.factor(), id(nb)])
        .then(vec![perm(f, &[nh, nb, nb], &[0, 2, 1])])
        .then(vec![b.yd.action.factor(), id(nb)])
        .map(&b.mul);
    let plain = Pipeline::on(f, &[nb, nb]).map(&b.mul);
    let inv_comm = check_on_vectors("invariants_braided_commutative", &pairs, &psi_mul, &plain)
        .with_note(format!("B^inv of dim {}", inv.dim()));
    let conditions = cond2 && cond3_holds && cond4_holds;
    r.push(if conditions {
        inv_comm
    } else {
        inv_comm.informational()
    });
    r
}
