//! Embedded quantum groupoids: structure maps, the cotensor product of
//! composable pairs, the groupoid axioms and the interchange law.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::hopf::{check_hopf_map, expect_shape, HopfAlgebraData};
use crate::linalg::{
    id, kernel_basis, perm, solve, swap, Factor, LinearMap, Pipeline, SubspaceBasis, Vector,
};
use crate::report::{
    check_indexed, check_maps, check_on_vectors, multi_index, CheckEntry, CheckReport, Scope,
};

/// `(M, C, s, t, i, ∘, 𝒮)` with `M` a Hopf algebra over the base `C`.
/// The composition `∘` is a total map `M ⊗ M → M`.
#[derive(Debug)]
pub struct QuantumGroupoidData {
    pub name: String,
    pub total: HopfAlgebraData,
    pub base: HopfAlgebraData,
    pub source: LinearMap,
    pub target: LinearMap,
    pub inclusion: LinearMap,
    pub compose: LinearMap,
    pub reverse: LinearMap,
    cotensor: OnceLock<SubspaceBasis>,
}

impl Clone for QuantumGroupoidData {
    fn clone(&self) -> Self {
        QuantumGroupoidData {
            name: self.name.clone(),
            total: self.total.clone(),
            base: self.base.clone(),
            source: self.source.clone(),
            target: self.target.clone(),
            inclusion: self.inclusion.clone(),
            compose: self.compose.clone(),
            reverse: self.reverse.clone(),
            cotensor: self.cotensor.clone(),
        }
    }
}

impl PartialEq for QuantumGroupoidData {
    fn eq(&self, other: &Self) -> bool {
        self.total == other.total
            && self.base == other.base
            && self.source == other.source
            && self.target == other.target
            && self.inclusion == other.inclusion
            && self.compose == other.compose
            && self.reverse == other.reverse
    }
}

impl QuantumGroupoidData {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        total: HopfAlgebraData,
        base: HopfAlgebraData,
        source: LinearMap,
        target: LinearMap,
        inclusion: LinearMap,
        compose: LinearMap,
        reverse: LinearMap,
    ) -> Result<Self> {
        let (m, c) = (total.dim, base.dim);
        if total.field != base.field {
            return Err(Error::FieldMismatch {
                expected: total.field,
                found: base.field,
            });
        }
        expect_shape(&source, c, m, "source map")?;
        expect_shape(&target, c, m, "target map")?;
        expect_shape(&inclusion, m, c, "inclusion map")?;
        expect_shape(&compose, m, m * m, "composition")?;
        expect_shape(&reverse, m, m, "groupoid antipode")?;
        Ok(QuantumGroupoidData {
            name: name.into(),
            total,
            base,
            source,
            target,
            inclusion,
            compose,
            reverse,
            cotensor: OnceLock::new(),
        })
    }

    /// Replaces the composition, dropping nothing else (the cotensor only
    /// depends on `s`, `t` and `Δ`).
    pub fn with_compose(mut self, compose: LinearMap) -> Result<Self> {
        expect_shape(
            &compose,
            self.total.dim,
            self.total.dim * self.total.dim,
            "composition",
        )?;
        self.compose = compose;
        Ok(self)
    }

    fn dims(&self) -> (usize, usize) {
        (self.total.dim, self.base.dim)
    }

    /// `Δ_L = (t ⊗ id)Δ : M → C ⊗ M`.
    pub fn left_coaction(&self) -> LinearMap {
        let m = self.total.dim;
        Pipeline::new(self.total.field)
            .map(&self.total.comul)
            .then(vec![(&self.target).into(), id(m)])
            .materialize()
    }

    /// `Δ_R = (id ⊗ s)Δ : M → M ⊗ C`.
    pub fn right_coaction(&self) -> LinearMap {
        let m = self.total.dim;
        Pipeline::new(self.total.field)
            .map(&self.total.comul)
            .then(vec![id(m), (&self.source).into()])
            .materialize()
    }

    /// `(Δ_R ⊗ id) - (id ⊗ Δ_L) : M ⊗ M → M ⊗ C ⊗ M`.
    pub fn cotensor_defining_map(&self) -> LinearMap {
        let (m, _) = self.dims();
        let f = self.total.field;
        let dr = self.right_coaction();
        let dl = self.left_coaction();
        let lhs = Pipeline::new(f)
            .then(vec![(&dr).into(), id(m)])
            .materialize();
        let rhs = Pipeline::new(f)
            .then(vec![id(m), (&dl).into()])
            .materialize();
        lhs.sub(&rhs).expect("same shape")
    }

    /// Canonical basis of `M □ M`, computed once.
    pub fn cotensor(&self) -> &SubspaceBasis {
        self.cotensor
            .get_or_init(|| kernel_basis(&self.cotensor_defining_map()))
    }

    /// Whether `∘(v ⊗ x) = v` is solvable for all `v`; returns a right unit.
    pub fn right_unit(&self) -> Result<Option<Vector>> {
        let (m, _) = self.dims();
        let f = self.total.field;
        // rows indexed by (v, output), columns by x
        let system = LinearMap::from_fn(f, m * m, m, |x| {
            let mut entries = Vec::new();
            for v in 0..m {
                for (k, c) in self.compose.column(v * m + x).entries() {
                    entries.push((v * m + k, c.clone()));
                }
            }
            Vector::from_entries(m * m, entries)
        });
        let rhs = Vector::from_entries(m * m, (0..m).map(|v| (v * m + v, f.one())));
        solve(&system, &rhs)
    }
}

fn coalgebra_map_entries(
    report: &mut CheckReport,
    prefix: &str,
    map: &LinearMap,
    from: &HopfAlgebraData,
    to: &HopfAlgebraData,
) {
    let f = from.field;
    let n = from.dim;
    let lhs = Pipeline::on(f, &[n]).map(map).map(&to.comul);
    let rhs = Pipeline::on(f, &[n])
        .map(&from.comul)
        .then(vec![map.into(), map.into()]);
    report.push(check_maps(
        &format!("{prefix}.comultiplicative"),
        &lhs,
        &rhs,
    ));
    let lhs = Pipeline::on(f, &[n]).map(map).map(&to.counit);
    let rhs = Pipeline::on(f, &[n]).map(&from.counit);
    report.push(check_maps(&format!("{prefix}.counital"), &lhs, &rhs));
}

/// Every clause of the embedded quantum groupoid definition, plus the
/// derived consequences `ε𝒮 = ε`, `t𝒮 = s`, `s𝒮 = t` and the bicomodule
/// property of `∘` on `M □ M`.
///
/// Clauses stated on `M □ M` are evaluated on the canonical cotensor basis.
/// The left unit `1_L = 1` and the unrestricted source condition are
/// reported as informational entries.
pub fn check_embedded_quantum_groupoid(qg: &QuantumGroupoidData) -> CheckReport {
    let (m, c) = qg.dims();
    let f = qg.total.field;
    let mh = &qg.total;
    let (s, t, i, comp, rev) = (
        &qg.source,
        &qg.target,
        &qg.inclusion,
        &qg.compose,
        &qg.reverse,
    );
    let dl = qg.left_coaction();
    let dr = qg.right_coaction();
    let cot = qg.cotensor().vectors().to_vec();
    let mut r = CheckReport::new();

    coalgebra_map_entries(&mut r, "coalgebra_map.source", s, mh, &qg.base);
    coalgebra_map_entries(&mut r, "coalgebra_map.target", t, mh, &qg.base);
    coalgebra_map_entries(&mut r, "coalgebra_map.inclusion", i, &qg.base, mh);
    let ident_c = Pipeline::on(f, &[c]);
    r.push(check_maps(
        "section.source",
        &Pipeline::on(f, &[c]).map(i).map(s),
        &ident_c,
    ));
    r.push(check_maps(
        "section.target",
        &Pipeline::on(f, &[c]).map(i).map(t),
        &ident_c,
    ));

    let lhs = Pipeline::on(f, &[m, m, m])
        .then(vec![comp.into(), id(m)])
        .map(comp);
    let rhs = Pipeline::on(f, &[m, m, m])
        .then(vec![id(m), comp.into()])
        .map(comp);
    r.push(check_maps("compose.associative", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[m, m]).map(comp).map(&mh.comul);
    let rhs = Pipeline::on(f, &[m, m])
        .then(vec![(&mh.comul).into(), (&mh.comul).into()])
        .then(vec![perm(f, &[m, m, m, m], &[0, 2, 1, 3])])
        .then(vec![comp.into(), comp.into()]);
    r.push(check_maps("compose.comultiplicative", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[m, m]).map(comp).map(&mh.counit);
    let rhs = Pipeline::on(f, &[m, m]).then(vec![(&mh.counit).into(), (&mh.counit).into()]);
    r.push(check_maps("compose.counital", &lhs, &rhs));

    let ident_m = Pipeline::on(f, &[m]);
    let lhs = Pipeline::on(f, &[m])
        .map(&dr)
        .then(vec![id(m), i.into()])
        .map(comp);
    r.push(check_maps("unity.right", &lhs, &ident_m));
    let lhs = Pipeline::on(f, &[m])
        .map(&dl)
        .then(vec![i.into(), id(m)])
        .map(comp);
    r.push(check_maps("unity.left", &lhs, &ident_m));

    let s_comp = Pipeline::on(f, &[m, m]).map(comp).map(s);
    let eps_s = Pipeline::on(f, &[m, m]).then(vec![(&mh.counit).into(), s.into()]);
    r.push(check_on_vectors("source_condition", &cot, &s_comp, &eps_s));
    let t_comp = Pipeline::on(f, &[m, m]).map(comp).map(t);
    let t_eps = Pipeline::on(f, &[m, m]).then(vec![t.into(), (&mh.counit).into()]);
    r.push(check_on_vectors("target_condition", &cot, &t_comp, &t_eps));

    let lhs = Pipeline::on(f, &[m])
        .map(&mh.comul)
        .then(vec![s.into(), rev.into()]);
    let rhs = Pipeline::on(f, &[m]).map(rev).map(&dl);
    r.push(check_maps("twisted.left", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[m])
        .map(&mh.comul)
        .then(vec![rev.into(), t.into()]);
    let rhs = Pipeline::on(f, &[m]).map(rev).map(&dr);
    r.push(check_maps("twisted.right", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[m])
        .map(&mh.comul)
        .then(vec![rev.into(), id(m)])
        .map(comp);
    let rhs = Pipeline::on(f, &[m]).map(s).map(i);
    r.push(check_maps("antipode.left", &lhs, &rhs));
    let lhs = Pipeline::on(f, &[m])
        .map(&mh.comul)
        .then(vec![id(m), rev.into()])
        .map(comp);
    let rhs = Pipeline::on(f, &[m]).map(t).map(i);
    r.push(check_maps("antipode.right", &lhs, &rhs));

    let pairs: [(&str, &LinearMap, &LinearMap); 3] = [
        ("consequence.counit", &mh.counit, &mh.counit),
        ("consequence.target", t, s),
        ("consequence.source", s, t),
    ];
    for (name, after, expected) in pairs {
        let lhs = Pipeline::on(f, &[m]).map(rev).map(after);
        let rhs = Pipeline::on(f, &[m]).map(expected);
        r.push(check_maps(name, &lhs, &rhs));
    }

    let lhs = Pipeline::on(f, &[m, m]).map(comp).map(&dl);
    let rhs = Pipeline::on(f, &[m, m])
        .then(vec![(&dl).into(), id(m)])
        .then(vec![id(c), comp.into()]);
    r.push(check_on_vectors("bicomodule.left", &cot, &lhs, &rhs));
    let lhs = Pipeline::on(f, &[m, m]).map(comp).map(&dr);
    let rhs = Pipeline::on(f, &[m, m])
        .then(vec![id(m), (&dr).into()])
        .then(vec![comp.into(), id(c)]);
    r.push(check_on_vectors("bicomodule.right", &cot, &lhs, &rhs));

    let images: [(&str, Pipeline<'_>); 4] = [
        (
            "cotensor_image.unit_left",
            Pipeline::on(f, &[m]).map(&dl).then(vec![i.into(), id(m)]),
        ),
        (
            "cotensor_image.unit_right",
            Pipeline::on(f, &[m]).map(&dr).then(vec![id(m), i.into()]),
        ),
        (
            "cotensor_image.antipode_left",
            Pipeline::on(f, &[m])
                .map(&mh.comul)
                .then(vec![rev.into(), id(m)]),
        ),
        (
            "cotensor_image.antipode_right",
            Pipeline::on(f, &[m])
                .map(&mh.comul)
                .then(vec![id(m), rev.into()]),
        ),
    ];
    for (name, p) in images {
        let lhs = p.clone().then(vec![(&dr).into(), id(m)]);
        let rhs = p.then(vec![id(m), (&dl).into()]);
        r.push(check_maps(name, &lhs, &rhs));
    }

    let lhs = Pipeline::on(f, &[1, m])
        .then(vec![(&mh.unit).into(), id(m)])
        .map(comp);
    r.push(check_maps("left_unit", &lhs, &Pipeline::on(f, &[1, m])).informational());
    r.push(check_maps("source_condition.unrestricted", &s_comp, &eps_s).informational());
    let right_unit = qg.right_unit().ok().flatten().is_some();
    r.push(CheckEntry::fact("right_unit_exists", right_unit).informational());
    r
}

/// `s`, `t`, `i` are Hopf algebra maps.
pub fn check_structure_maps(qg: &QuantumGroupoidData, scope: &Scope) -> CheckReport {
    let mut r = CheckReport::new();
    r.absorb(
        "source",
        check_hopf_map(Factor::Map(&qg.source), &qg.total, &qg.base, scope),
    );
    r.absorb(
        "target",
        check_hopf_map(Factor::Map(&qg.target), &qg.total, &qg.base, scope),
    );
    r.absorb(
        "inclusion",
        check_hopf_map(Factor::Map(&qg.inclusion), &qg.base, &qg.total, scope),
    );
    r
}

/// Interchange law `∘(uv) = ∘(u)∘(v)` for every ordered pair of cotensor
/// basis vectors, where `uv` is the componentwise product on `M ⊗ M`.
pub fn check_interchange(qg: &QuantumGroupoidData) -> CheckEntry {
    let (m, _) = qg.dims();
    let f = qg.total.field;
    let mul = &qg.total.mul;
    let comp = &qg.compose;
    let basis = qg.cotensor().vectors();
    let k = basis.len();
    let lhs = Pipeline::on(f, &[m, m, m, m])
        .then(vec![perm(f, &[m, m, m, m], &[0, 2, 1, 3])])
        .then(vec![mul.into(), mul.into()])
        .map(comp);
    let rhs = Pipeline::on(f, &[m, m, m, m])
        .then(vec![comp.into(), comp.into()])
        .map(mul);
    check_indexed(
        "interchange",
        k * k,
        |p| {
            let (a, b) = (p / k, p % k);
            let uv = basis[a].tensor(&basis[b]);
            (lhs.apply(&uv), rhs.apply(&uv))
        },
        |p| multi_index(p, &[k, k]),
    )
}

/// Conjugates the structure along an isomorphism `φ: M → M'` with inverse
/// `ψ`, onto the Hopf algebra `total`.
pub fn transport(
    qg: &QuantumGroupoidData,
    forward: &LinearMap,
    backward: &LinearMap,
    total: HopfAlgebraData,
    name: impl Into<String>,
) -> Result<QuantumGroupoidData> {
    let f = qg.total.field;
    let m = qg.total.dim;
    let compose = Pipeline::new(f)
        .then(vec![backward.into(), backward.into()])
        .map(&qg.compose)
        .map(forward)
        .materialize();
    let reverse = forward.compose(&qg.reverse.compose(backward)?)?;
    debug_assert_eq!(backward.rows(), m);
    QuantumGroupoidData::new(
        name,
        total,
        qg.base.clone(),
        qg.source.compose(backward)?,
        qg.target.compose(backward)?,
        forward.compose(&qg.inclusion)?,
        compose,
        reverse,
    )
}

/// Entrywise comparison of two maps of the same shape.
pub fn check_same_map(name: &str, lhs: &LinearMap, rhs: &LinearMap) -> CheckEntry {
    assert_eq!(lhs.shape(), rhs.shape(), "{name}: shape mismatch");
    let f = lhs.field();
    let l = Pipeline::on(f, &[lhs.cols()]).map(lhs);
    let r = Pipeline::on(f, &[rhs.cols()]).map(rhs);
    check_maps(name, &l, &r)
}

/// `τ ∘ (F ⊗ F)` helper used by anti-multiplicativity checks.
pub(crate) fn flipped_pair<'a>(
    f: crate::scalar::Field,
    m: usize,
    map: &'a LinearMap,
) -> Pipeline<'a> {
    Pipeline::on(f, &[m, m])
        .then(vec![map.into(), map.into()])
        .then(vec![swap(f, m, m)])
}
