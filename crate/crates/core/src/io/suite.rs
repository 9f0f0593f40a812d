//! Named check suites run on role-labelled input files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::braided::{
    biproduct_projections, check_biproduct_projections, check_braided_crossed_module,
    check_braided_hopf, check_quasitriangular, check_twisted_tensor_negative,
    BraidedCrossedModuleData, BraidedHopfData, QuasitriangularStructure,
};
use crate::constructions::{adjoint_crossed_module, CrossedModuleData};
use crate::error::{Error, Result};
use crate::hopf::{check_hopf, HopfAlgebraData, YetterDrinfeldModule};
use crate::report::{CheckEntry, CheckReport, Scope};
use crate::scalar::Field;
use crate::two_group::{
    check_crossed_module, check_same_map, check_strict_2group, closed_form_2group,
    diagonal_cotensor_span, reverse_diagnostics, reverse_order, strict_2group_unchecked,
    transported_2group,
};

use super::certificate::{Certificate, InputDigest};
use super::format::{self, ActionFile, AlgebraFile, MapFile, TensorFile};

/// Biproducts above this dimension are checked at generator scope unless
/// full-basis mode is requested.
pub const FULL_BASIS_LIMIT: usize = 256;

/// A suite and the input roles it reads.
pub struct SuiteSpec {
    pub name: &'static str,
    pub roles: &'static [&'static str],
    pub summary: &'static str,
}

const CROSSED: &[&str] = &["source", "target", "boundary", "action"];
const BRAIDED: &[&str] = &["braided", "action", "coaction", "target"];
const BRAIDED_CM: &[&str] = &["braided", "action", "coaction", "target", "boundary"];
const QUASI: &[&str] = &["algebra", "r-matrix"];

pub const SUITES: &[SuiteSpec] = &[
    SuiteSpec {
        name: "hopf",
        roles: &["algebra"],
        summary: "Hopf algebra axioms",
    },
    SuiteSpec {
        name: "crossed-module",
        roles: CROSSED,
        summary: "crossed module conditions in both formulations",
    },
    SuiteSpec {
        name: "2group",
        roles: CROSSED,
        summary: "strict 2-group built by smash product",
    },
    SuiteSpec {
        name: "diagnostics",
        roles: CROSSED,
        summary: "reverse-map diagnostics of the 2-group",
    },
    SuiteSpec {
        name: "adjoint",
        roles: &["algebra"],
        summary: "adjoint crossed module and its tensor-product form",
    },
    SuiteSpec {
        name: "quasitriangular",
        roles: QUASI,
        summary: "quasitriangular structure",
    },
    SuiteSpec {
        name: "braided-hopf",
        roles: BRAIDED,
        summary: "braided Hopf algebra in Yetter-Drinfeld modules",
    },
    SuiteSpec {
        name: "braided-cm",
        roles: BRAIDED_CM,
        summary: "braided crossed module",
    },
    SuiteSpec {
        name: "biproduct",
        roles: BRAIDED_CM,
        summary: "biproduct with its two projections",
    },
    SuiteSpec {
        name: "twisted-tensor",
        roles: QUASI,
        summary: "twisted tensor form of the transmutation biproduct",
    },
];

pub fn suite_spec(name: &str) -> Result<&'static SuiteSpec> {
    SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::Unknown {
            kind: "suite",
            name: name.to_string(),
            available: SUITES.iter().map(|s| s.name).collect::<Vec<_>>().join(", "),
        })
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Parse every input in this field instead of the declared one.
    pub field: Option<Field>,
    /// Check large biproducts on every basis input.
    pub full_basis: bool,
}

/// Reads role files, recording digests and resolving one common field.
pub struct Inputs {
    paths: BTreeMap<String, PathBuf>,
    field: Field,
    digests: BTreeMap<String, InputDigest>,
}

impl Inputs {
    /// Checks that every required role is present and resolves the field:
    /// the override if given, else the common declared field.
    pub fn open(
        suite: &str,
        required: &[&str],
        paths: &BTreeMap<String, PathBuf>,
        over: Option<Field>,
    ) -> Result<Self> {
        let missing: Vec<&str> = required
            .iter()
            .copied()
            .filter(|r| !paths.contains_key(*r))
            .collect();
        if !missing.is_empty() {
            return Err(Error::MissingInput {
                suite: suite.to_string(),
                missing: missing.join(", "),
                required: required.join(", "),
            });
        }
        let used: BTreeMap<String, PathBuf> = required
            .iter()
            .map(|r| (r.to_string(), paths[*r].clone()))
            .collect();
        let mut digests = BTreeMap::new();
        let mut declared: Option<Field> = None;
        for (role, path) in &used {
            let bytes = std::fs::read(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            digests.insert(
                role.clone(),
                InputDigest {
                    file: basename(path),
                    sha256: hex::encode(Sha256::digest(&bytes)),
                },
            );
            if let Some(f) = format::declared_field(path)? {
                match declared {
                    Some(d) if d != f && over.is_none() => {
                        return Err(Error::FieldMismatch {
                            expected: d,
                            found: f,
                        })
                    }
                    None => declared = Some(f),
                    _ => {}
                }
            }
        }
        let field = over.or(declared).unwrap_or(Field::Rational);
        Ok(Inputs {
            paths: used,
            field,
            digests,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn digests(&self) -> &BTreeMap<String, InputDigest> {
        &self.digests
    }

    fn path(&self, role: &str) -> &Path {
        &self.paths[role]
    }

    pub fn algebra(&self, role: &str) -> Result<HopfAlgebraData> {
        let file: AlgebraFile = read(self.path(role))?;
        file.to_algebra(Some(self.field))
            .map_err(|e| locate(role, e))
    }

    pub fn crossed_module(&self) -> Result<CrossedModuleData> {
        let source = self.algebra("source")?;
        let target = self.algebra("target")?;
        let boundary = self.map("boundary")?;
        let action = self.action("action")?;
        let name = format!("({}, {})", source.name, target.name);
        CrossedModuleData::new(name, source, target, boundary, action)
    }

    pub fn map(&self, role: &str) -> Result<crate::linalg::LinearMap> {
        let file: MapFile = read(self.path(role))?;
        file.to_map(Some(self.field)).map_err(|e| locate(role, e))
    }

    pub fn action(&self, role: &str) -> Result<crate::hopf::ModuleAction> {
        let file: ActionFile = read(self.path(role))?;
        file.to_action(Some(self.field))
            .map_err(|e| locate(role, e))
    }

    pub fn coaction(&self, role: &str) -> Result<crate::hopf::Coaction> {
        let file: ActionFile = read(self.path(role))?;
        file.to_coaction(Some(self.field))
            .map_err(|e| locate(role, e))
    }

    pub fn tensor(&self, role: &str) -> Result<crate::linalg::Vector> {
        let file: TensorFile = read(self.path(role))?;
        file.to_vector(Some(self.field))
            .map_err(|e| locate(role, e))
    }

    pub fn quasitriangular(&self) -> Result<QuasitriangularStructure> {
        let h = self.algebra("algebra")?;
        let r = self.tensor("r-matrix")?;
        if r.dim() != h.dim * h.dim {
            return Err(Error::dims(
                format!("H ⊗ H of dim {}", h.dim * h.dim),
                format!("r-matrix of dim {}", r.dim()),
            ));
        }
        QuasitriangularStructure::new(h, r)
    }

    pub fn braided(&self) -> Result<(BraidedHopfData, HopfAlgebraData)> {
        let h = self.algebra("target")?;
        let b = self.algebra("braided")?;
        let yd = YetterDrinfeldModule::new(self.action("action")?, self.coaction("coaction")?)?;
        Ok((BraidedHopfData::from_hopf(&b, yd)?, h))
    }

    pub fn braided_crossed_module(&self) -> Result<BraidedCrossedModuleData> {
        let (b, h) = self.braided()?;
        let d = self.map("boundary")?;
        let name = format!("{} -> {}", b.name, h.name);
        BraidedCrossedModuleData::new(name, b, h, d)
    }
}

fn read<T: for<'de> serde::Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    format::from_json(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn locate(role: &str, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{role}: {m}")),
        other => other,
    }
}

fn basename(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Runs a named suite on the given role files.
pub fn run_suite(
    name: &str,
    paths: &BTreeMap<String, PathBuf>,
    options: &SuiteOptions,
) -> Result<Certificate> {
    let entry = suite_spec(name)?;
    let inputs = Inputs::open(name, entry.roles, paths, options.field)?;
    let report = match name {
        "hopf" => check_hopf(&inputs.algebra("algebra")?),
        "crossed-module" => check_crossed_module(&inputs.crossed_module()?),
        "2group" => two_group_report(&inputs.crossed_module()?),
        "diagnostics" => diagnostics_report(&inputs.crossed_module()?),
        "adjoint" => adjoint_report(&inputs.algebra("algebra")?)?,
        "quasitriangular" => check_quasitriangular(&inputs.quasitriangular()?),
        "braided-hopf" => {
            let (b, h) = inputs.braided()?;
            check_braided_hopf(&b, &h)
        }
        "braided-cm" => check_braided_crossed_module(&inputs.braided_crossed_module()?),
        "biproduct" => biproduct_report(&inputs.braided_crossed_module()?, options)?,
        "twisted-tensor" => check_twisted_tensor_negative(&inputs.quasitriangular()?)?,
        _ => unreachable!("suite table and dispatch agree"),
    };
    Ok(Certificate::new(
        name,
        inputs.field(),
        inputs.digests().clone(),
        &report,
    ))
}

/// Crossed-module conditions, then the 2-group checks if they hold.
fn two_group_report(cm: &CrossedModuleData) -> CheckReport {
    let mut r = CheckReport::new();
    let pre = check_crossed_module(cm);
    let holds = pre.passed();
    r.absorb("crossed", pre);
    if holds {
        r.absorb("2group", check_strict_2group(&strict_2group_unchecked(cm)));
    }
    r
}

fn diagnostics_report(cm: &CrossedModuleData) -> CheckReport {
    let mut r = CheckReport::new();
    let pre = check_crossed_module(cm);
    let holds = pre.passed();
    if !holds {
        r.absorb("crossed", pre);
        return r;
    }
    let qg = strict_2group_unchecked(cm);
    r.absorb("diagnostics", reverse_diagnostics(&qg, cm));
    let order = reverse_order(&qg, 24);
    let note = match order {
        Some(k) => format!("reverse map has order {k}"),
        None => "reverse map has order above 24".to_string(),
    };
    r.push(
        CheckEntry::fact("reverse_order_finite", order.is_some())
            .with_note(note)
            .informational(),
    );
    r
}

/// The adjoint crossed module, the cotensor against the diagonal span and
/// the transported maps against the closed forms on `H ⊗ H`.
fn adjoint_report(h: &HopfAlgebraData) -> Result<CheckReport> {
    let mut r = CheckReport::new();
    let cocommutative = h.is_cocommutative();
    r.push(CheckEntry::fact("cocommutative", cocommutative));
    if !cocommutative {
        return Ok(r);
    }
    let adj = adjoint_crossed_module(h)?;
    r.absorb("crossed", check_crossed_module(&adj.crossed));
    let moved = transported_2group(&adj)?;
    let closed = closed_form_2group(&adj)?;
    for (name, l, c) in [
        ("source", &moved.source, &closed.source),
        ("target", &moved.target, &closed.target),
        ("inclusion", &moved.inclusion, &closed.inclusion),
        ("compose", &moved.compose, &closed.compose),
        ("reverse", &moved.reverse, &closed.reverse),
    ] {
        r.push(check_same_map(&format!("closed_form.{name}"), l, c));
    }
    let span = diagonal_cotensor_span(h)?;
    let cotensor = closed.cotensor();
    let n = h.dim;
    r.push(
        CheckEntry::fact("cotensor.diagonal_span", cotensor.equals(&span)?).with_note(format!(
            "dim {} (n³ = {})",
            cotensor.dim(),
            n * n * n
        )),
    );
    r.absorb("2group", check_strict_2group(&closed));
    Ok(r)
}

fn biproduct_report(bcm: &BraidedCrossedModuleData, options: &SuiteOptions) -> Result<CheckReport> {
    let p = match biproduct_projections(bcm) {
        Ok(p) => p,
        Err(Error::Precondition { report, .. }) => {
            let mut r = CheckReport::new();
            r.absorb("precondition", *report);
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    let dim = bcm.braided.dim * bcm.hopf.dim;
    let scope = if options.full_basis || dim <= FULL_BASIS_LIMIT {
        Scope::Full
    } else {
        p.total.generator_scope()
    };
    Ok(check_biproduct_projections(&p, &scope))
}
