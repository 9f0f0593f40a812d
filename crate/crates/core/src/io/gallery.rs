//! Worked examples as input files plus an expected-verdict manifest.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::braided::{
    check_quasitriangular, check_twisted_tensor_negative, transmutation, QuasitriangularStructure,
};
use crate::constructions::{
    adjoint_data, graded_function_crossed_module, group_algebra, quantum_double_crossed_module,
    sweedler_algebra, sweedler_r_matrix, z2_triangular_r_matrix, CayleyTable, CrossedModuleData,
    GradedCrossedModuleInput,
};
use crate::error::{Error, Result};
use crate::hopf::{check_hopf, HopfAlgebraData};
use crate::linalg::LinearMap;
use crate::scalar::Field;

use super::certificate::Verdict;
use super::format::{to_json, ActionFile, AlgebraFile, MapFile, TensorFile};

pub const GALLERY: &[&str] = &[
    "adjoint-z2",
    "adjoint-s3",
    "double-z2",
    "double-z3",
    "double-s3",
    "graded-s3-z2",
    "graded-z3-inv",
    "transmute-z2",
    "transmute-double-s3",
    "sweedler-h4",
];

pub const MANIFEST: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub name: String,
    pub description: String,
    pub field: String,
    /// Input role to file name.
    pub roles: BTreeMap<String, String>,
    /// Suite name to expected verdict.
    pub expected: BTreeMap<String, Verdict>,
}

impl Manifest {
    /// Role paths relative to the directory holding the manifest.
    pub fn role_paths(&self, dir: &Path) -> BTreeMap<String, PathBuf> {
        self.roles
            .iter()
            .map(|(r, f)| (r.clone(), dir.join(f)))
            .collect()
    }
}

/// A gallery entry: file contents keyed by file name, and its manifest.
#[derive(Clone, Debug)]
pub struct GalleryEntry {
    pub files: BTreeMap<String, String>,
    pub manifest: Manifest,
}

impl GalleryEntry {
    fn new(name: &str, description: &str, field: Field) -> Self {
        GalleryEntry {
            files: BTreeMap::new(),
            manifest: Manifest {
                name: name.into(),
                description: description.into(),
                field: field.to_string(),
                roles: BTreeMap::new(),
                expected: BTreeMap::new(),
            },
        }
    }

    fn file(&mut self, file: &str, contents: String, roles: &[&str]) {
        self.files.insert(file.into(), contents);
        for r in roles {
            self.manifest.roles.insert(r.to_string(), file.into());
        }
    }

    fn expect(&mut self, suites: &[&str], verdict: Verdict) {
        for s in suites {
            self.manifest.expected.insert(s.to_string(), verdict);
        }
    }

    fn crossed(&mut self, cm: &CrossedModuleData) {
        let f = cm.field();
        if cm.source == cm.target {
            self.file(
                "algebra.json",
                to_json(&AlgebraFile::from_algebra(&cm.source)),
                &["algebra", "source", "target"],
            );
        } else {
            self.file(
                "source.json",
                to_json(&AlgebraFile::from_algebra(&cm.source)),
                &["source"],
            );
            self.file(
                "target.json",
                to_json(&AlgebraFile::from_algebra(&cm.target)),
                &["target"],
            );
        }
        self.file(
            "boundary.json",
            to_json(&MapFile::from_map(&cm.boundary)),
            &["boundary"],
        );
        self.file(
            "action.json",
            to_json(&ActionFile::from_action(f, &cm.action)),
            &["action"],
        );
        self.expect(&["crossed-module", "2group", "diagnostics"], Verdict::Pass);
    }

    /// `H`, `𝓡` and the transmutation `(B(H), id)` with its Yetter-Drinfeld structure.
    fn transmuted(&mut self, q: &QuasitriangularStructure) -> Result<()> {
        let h = &q.hopf;
        let f = h.field;
        self.file(
            "algebra.json",
            to_json(&AlgebraFile::from_algebra(h)),
            &["algebra", "target"],
        );
        self.file(
            "r-matrix.json",
            to_json(&TensorFile::from_vector(f, h.dim, &q.r)),
            &["r-matrix"],
        );
        let b = transmutation(q)?;
        let maps = HopfAlgebraData::new(
            b.name.clone(),
            b.mul.clone(),
            b.unit.clone(),
            b.comul.clone(),
            b.counit.clone(),
            b.antipode.clone(),
        )?;
        self.file(
            "braided.json",
            to_json(&AlgebraFile::from_algebra(&maps)),
            &["braided"],
        );
        self.file(
            "action.json",
            to_json(&ActionFile::from_action(f, &b.yd.action)),
            &["action"],
        );
        self.file(
            "coaction.json",
            to_json(&ActionFile::from_coaction(f, &b.yd.coaction)),
            &["coaction"],
        );
        let id = LinearMap::identity(f, h.dim);
        self.file(
            "boundary.json",
            to_json(&MapFile::from_map(&id)),
            &["boundary"],
        );
        self.expect(
            &["quasitriangular", "braided-hopf", "braided-cm", "biproduct"],
            Verdict::Pass,
        );
        Ok(())
    }

    /// Writes every file and the manifest into `dir`, creating it if needed.
    pub fn emit(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        for (name, contents) in &self.files {
            let path = dir.join(name);
            std::fs::write(&path, contents)?;
            written.push(path);
        }
        let path = dir.join(MANIFEST);
        std::fs::write(&path, to_json(&self.manifest))?;
        written.push(path);
        Ok(written)
    }
}

/// Builds the named gallery entry.
pub fn gallery(name: &str) -> Result<GalleryEntry> {
    let q = Field::Rational;
    let f101 = Field::prime(101)?;
    match name {
        "adjoint-z2" | "adjoint-s3" => {
            let (g, label) = if name == "adjoint-z2" {
                (CayleyTable::cyclic(2), "Z2")
            } else {
                (CayleyTable::symmetric(3), "S3")
            };
            let h = group_algebra(q, &g, label);
            let mut e = GalleryEntry::new(
                name,
                &format!("adjoint crossed module of k{label}: A = H, d = id, adjoint action"),
                q,
            );
            e.crossed(&adjoint_data(&h, name)?);
            e.expect(&["hopf", "adjoint"], Verdict::Pass);
            Ok(e)
        }
        "double-z2" | "double-z3" | "double-s3" => {
            let (g, label, field) = match name {
                "double-z2" => (CayleyTable::cyclic(2), "Z2", q),
                "double-z3" => (CayleyTable::cyclic(3), "Z3", q),
                _ => (CayleyTable::symmetric(3), "S3", f101),
            };
            let d = quantum_double_crossed_module(field, &g, label)?;
            let mut e = GalleryEntry::new(
                name,
                &format!("quantum double of {label}: A = k({label}), H = k{label}, d = ηε, coadjoint action"),
                field,
            );
            e.crossed(&d.crossed);
            Ok(e)
        }
        "graded-s3-z2" | "graded-z3-inv" => {
            let input = if name == "graded-s3-z2" {
                // M = S₃, G = ℤ₂ acting trivially, d̂ sends the sign character to (12)
                GradedCrossedModuleInput {
                    name: "S3-Z2".into(),
                    field: q,
                    group: CayleyTable::symmetric(3),
                    grading_group: CayleyTable::cyclic(2),
                    action: vec![(0..6).collect(), (0..6).collect()],
                    boundary: vec![0, 2],
                }
            } else {
                // M = ℤ₃, G = ℤ₂ acting by inversion, d̂ trivial
                GradedCrossedModuleInput {
                    name: "Z3-inv".into(),
                    field: q,
                    group: CayleyTable::cyclic(3),
                    grading_group: CayleyTable::cyclic(2),
                    action: vec![vec![0, 1, 2], vec![0, 2, 1]],
                    boundary: vec![0, 0],
                }
            };
            let g = graded_function_crossed_module(&input)?;
            let mut e = GalleryEntry::new(
                name,
                "function-algebra crossed module k(M) -> k(Ĝ) graded by a finite abelian G",
                q,
            );
            e.crossed(&g.crossed);
            e.file("graded-input.json", to_json(&input), &[]);
            Ok(e)
        }
        "transmute-z2" => {
            let h = group_algebra(q, &CayleyTable::cyclic(2), "Z2");
            let qs = QuasitriangularStructure::new(h, z2_triangular_r_matrix(q)?)?;
            let mut e = GalleryEntry::new(
                name,
                "kZ2 with its triangular structure, transmutation B(H) and (B(H), id)",
                q,
            );
            e.transmuted(&qs)?;
            // conjugation by R in a commutative algebra is trivial, so the
            // twisted coproduct is multiplicative and no witness exists
            e.expect(&["twisted-tensor"], Verdict::Fail);
            Ok(e)
        }
        "transmute-double-s3" => {
            let d = quantum_double_crossed_module(f101, &CayleyTable::symmetric(3), "S3")?;
            let qs = QuasitriangularStructure::new(d.double, d.r_matrix)?;
            let mut e = GalleryEntry::new(
                name,
                "D(S3) over Fp:101 with its canonical R, transmutation B(H) and (B(H), id)",
                f101,
            );
            e.transmuted(&qs)?;
            Ok(e)
        }
        "sweedler-h4" => {
            let h = sweedler_algebra(q)?;
            let r0 = sweedler_r_matrix(q, &q.zero())?;
            let mut e = GalleryEntry::new(
                name,
                "Sweedler's H4: g² = 1, x² = 0, xg = -gx, Δg = g⊗g, Δx = x⊗1 + g⊗x, \
                 candidate R₀ = ½(1⊗1 + 1⊗g + g⊗1 - g⊗g); verdicts computed by the checkers",
                q,
            );
            let qs = QuasitriangularStructure::new(h.clone(), r0.clone())?;
            e.file(
                "algebra.json",
                to_json(&AlgebraFile::from_algebra(&h)),
                &["algebra"],
            );
            e.file(
                "r-matrix.json",
                to_json(&TensorFile::from_vector(q, h.dim, &r0)),
                &["r-matrix"],
            );
            e.expect(&["hopf"], Verdict::of(&check_hopf(&h)));
            e.expect(
                &["quasitriangular"],
                Verdict::of(&check_quasitriangular(&qs)),
            );
            e.expect(
                &["twisted-tensor"],
                Verdict::of(&check_twisted_tensor_negative(&qs)?),
            );
            Ok(e)
        }
        _ => Err(Error::Unknown {
            kind: "gallery entry",
            name: name.to_string(),
            available: GALLERY.join(", "),
        }),
    }
}
