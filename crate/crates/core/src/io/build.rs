//! Constructions from input files, emitted as files in the same formats.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::Serialize;

use crate::braided::{
    biproduct_projections_unchecked, check_braided_crossed_module, check_quasitriangular,
    transmutation,
};
use crate::constructions::{
    quantum_double_crossed_module, smash_preconditions, smash_product_unchecked,
};
use crate::error::{Error, Result};
use crate::hopf::{check_hopf, HopfAlgebraData};
use crate::linalg::{LinearMap, SubspaceBasis};
use crate::report::CheckReport;
use crate::scalar::Field;
use crate::two_group::{check_crossed_module, strict_2group_unchecked};

use super::format::{parse_cayley, to_json, ActionFile, AlgebraFile, MapFile, TensorFile};
use super::suite::Inputs;

pub struct BuildSpec {
    pub name: &'static str,
    pub roles: &'static [&'static str],
    pub summary: &'static str,
}

pub const BUILDS: &[BuildSpec] = &[
    BuildSpec {
        name: "smash",
        roles: &["source", "target", "action"],
        summary: "smash product A ⋊ H",
    },
    BuildSpec {
        name: "double",
        roles: &["group"],
        summary: "quantum double crossed module of a Cayley table",
    },
    BuildSpec {
        name: "2group",
        roles: &["source", "target", "boundary", "action"],
        summary: "strict 2-group: total algebra and s, t, i, ∘, 𝒮",
    },
    BuildSpec {
        name: "transmutation",
        roles: &["algebra", "r-matrix"],
        summary: "braided Hopf algebra B(H)",
    },
    BuildSpec {
        name: "biproduct",
        roles: &["braided", "action", "coaction", "target", "boundary"],
        summary: "biproduct B ⋊· H with s, t, i",
    },
];

#[derive(Clone, Debug)]
pub struct BuildOptions {
    pub field: Option<Field>,
    /// Run the relevant checkers on the inputs before constructing.
    pub validate: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            field: None,
            validate: true,
        }
    }
}

/// Output files keyed by file name.
pub type Files = BTreeMap<String, String>;

fn require(what: &str, report: CheckReport, validate: bool) -> Result<()> {
    if validate && !report.passed() {
        return Err(Error::Validation {
            what: what.to_string(),
            report: Box::new(report),
        });
    }
    Ok(())
}

fn algebra_file(h: &HopfAlgebraData) -> String {
    to_json(&AlgebraFile::from_algebra(h))
}

fn map_file(m: &LinearMap) -> String {
    to_json(&MapFile::from_map(m))
}

/// Builds `kind` from role files.
pub fn build(
    kind: &str,
    paths: &BTreeMap<String, PathBuf>,
    options: &BuildOptions,
) -> Result<Files> {
    let entry = BUILDS
        .iter()
        .find(|b| b.name == kind)
        .ok_or_else(|| Error::Unknown {
            kind: "construction",
            name: kind.to_string(),
            available: BUILDS.iter().map(|b| b.name).collect::<Vec<_>>().join(", "),
        })?;
    let context = format!("build {kind}");
    let v = options.validate;
    let mut out = Files::new();
    if kind == "double" {
        let missing = !paths.contains_key("group");
        if missing {
            return Err(Error::MissingInput {
                suite: context,
                missing: "group".into(),
                required: "group".into(),
            });
        }
        let g = parse_cayley(&paths["group"])?;
        let field = options.field.unwrap_or(Field::Rational);
        let d = quantum_double_crossed_module(field, &g, "G")?;
        out.insert("source.json".into(), algebra_file(&d.crossed.source));
        out.insert("target.json".into(), algebra_file(&d.crossed.target));
        out.insert("boundary.json".into(), map_file(&d.crossed.boundary));
        out.insert(
            "action.json".into(),
            to_json(&ActionFile::from_action(field, &d.crossed.action)),
        );
        out.insert("double.json".into(), algebra_file(&d.double));
        out.insert(
            "r-matrix.json".into(),
            to_json(&TensorFile::from_vector(field, d.double.dim, &d.r_matrix)),
        );
        return Ok(out);
    }
    let inputs = Inputs::open(&context, entry.roles, paths, options.field)?;
    match kind {
        "smash" => {
            let a = inputs.algebra("source")?;
            let h = inputs.algebra("target")?;
            let act = inputs.action("action")?;
            require("source", check_hopf(&a), v)?;
            require("target", check_hopf(&h), v)?;
            require("smash preconditions", smash_preconditions(&a, &h, &act), v)?;
            out.insert(
                "smash.json".into(),
                algebra_file(&smash_product_unchecked(&a, &h, &act)),
            );
        }
        "2group" => {
            let cm = inputs.crossed_module()?;
            require("crossed module", check_crossed_module(&cm), v)?;
            let qg = strict_2group_unchecked(&cm);
            out.insert("total.json".into(), algebra_file(&qg.total));
            out.insert("source-map.json".into(), map_file(&qg.source));
            out.insert("target-map.json".into(), map_file(&qg.target));
            out.insert("inclusion.json".into(), map_file(&qg.inclusion));
            out.insert("compose.json".into(), map_file(&qg.compose));
            out.insert("reverse.json".into(), map_file(&qg.reverse));
        }
        "transmutation" => {
            let q = inputs.quasitriangular()?;
            require("quasitriangular structure", check_quasitriangular(&q), v)?;
            let b = transmutation(&q)?;
            let f = b.field;
            let maps = HopfAlgebraData {
                name: b.name.clone(),
                field: f,
                dim: b.dim,
                mul: b.mul.clone(),
                unit: b.unit.clone(),
                comul: b.comul.clone(),
                counit: b.counit.clone(),
                antipode: b.antipode.clone(),
            };
            out.insert("braided.json".into(), algebra_file(&maps));
            out.insert(
                "action.json".into(),
                to_json(&ActionFile::from_action(f, &b.yd.action)),
            );
            out.insert(
                "coaction.json".into(),
                to_json(&ActionFile::from_coaction(f, &b.yd.coaction)),
            );
            out.insert(
                "boundary.json".into(),
                map_file(&LinearMap::identity(f, b.dim)),
            );
        }
        "biproduct" => {
            let bcm = inputs.braided_crossed_module()?;
            require(
                "braided crossed module",
                check_braided_crossed_module(&bcm),
                v,
            )?;
            let p = biproduct_projections_unchecked(&bcm);
            out.insert(
                "biproduct.json".into(),
                algebra_file(&p.total.materialize()?),
            );
            out.insert("source-map.json".into(), map_file(&p.source));
            out.insert("target-map.json".into(), map_file(&p.target));
            out.insert("inclusion.json".into(), map_file(&p.inclusion));
        }
        _ => unreachable!("build table and dispatch agree"),
    }
    Ok(out)
}

/// Canonical cotensor basis of the strict 2-group of a crossed module.
#[derive(Clone, Debug, Serialize)]
pub struct CotensorReport {
    pub field: String,
    pub dim: usize,
    pub basis: SubspaceBasis,
}

pub fn cotensor(
    paths: &BTreeMap<String, PathBuf>,
    options: &BuildOptions,
) -> Result<CotensorReport> {
    let roles = ["source", "target", "boundary", "action"];
    let inputs = Inputs::open("cotensor", &roles, paths, options.field)?;
    let cm = inputs.crossed_module()?;
    require(
        "crossed module",
        check_crossed_module(&cm),
        options.validate,
    )?;
    let qg = strict_2group_unchecked(&cm);
    let basis = qg.cotensor().clone();
    Ok(CotensorReport {
        field: inputs.field().to_string(),
        dim: basis.dim(),
        basis,
    })
}
