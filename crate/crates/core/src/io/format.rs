//! JSON file formats for structure constants.
//!
//! Scalars are strings such as `"3/2"` or `"17"`; unspecified entries are
//! zero. Tensor indices are row-major: `e_i ⊗ e_j` is `i·n + j`.
//!
//! | kind            | entry            | meaning                    |
//! |-----------------|------------------|----------------------------|
//! | `hopf-algebra`  | `mul: [i,j,k,c]` | `m(e_i⊗e_j) ∋ c·e_k`       |
//! |                 | `unit: [k,c]`    | `η(1) ∋ c·e_k`             |
//! |                 | `comul: [i,j,k,c]` | `Δ(e_i) ∋ c·e_j⊗e_k`     |
//! |                 | `counit: [i,c]`  | `ε(e_i) = c`               |
//! |                 | `antipode: [i,j,c]` | `S(e_i) ∋ c·e_j`        |
//! | `action`        | `[h,v,w,c]`      | `e_h ▷ e_v ∋ c·e_w`        |
//! | `coaction`      | `[v,h,w,c]`      | `Δ_L(e_v) ∋ c·e_h⊗e_w`     |
//! | `linear-map`    | `[i,j,c]`        | `f(e_i) ∋ c·e_j`           |
//! | `tensor`        | `[i,j,c]`        | `c·e_i⊗e_j` in `H⊗H`       |
//! | `cayley-table`  | `table`          | `table[a][b] = a·b`        |

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constructions::CayleyTable;
use crate::error::{Error, Result};
use crate::hopf::{Coaction, HopfAlgebraData, ModuleAction};
use crate::linalg::{LinearMap, Vector};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub kind: String,
    pub name: String,
    pub field: String,
    pub dim: usize,
    pub mul: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<(usize, String)>,
    pub comul: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<(usize, String)>,
    pub antipode: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionFile {
    pub kind: String,
    pub field: String,
    pub acting_dim: usize,
    pub carrier_dim: usize,
    pub entries: Vec<(usize, usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub kind: String,
    pub field: String,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorFile {
    pub kind: String,
    pub field: String,
    pub dim: usize,
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyFile {
    pub kind: String,
    pub name: String,
    pub table: Vec<Vec<usize>>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    from_json(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Deserialises JSON, reporting the line and column of a syntax error.
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn expect_kind(found: &str, expected: &str) -> Result<()> {
    if found != expected {
        return Err(Error::Parse(format!(
            "kind: expected {expected:?}, found {found:?}"
        )));
    }
    Ok(())
}

/// The field to parse in: the override if given, else the declared one.
fn resolve_field(declared: &str, over: Option<Field>) -> Result<Field> {
    match over {
        Some(f) => Ok(f),
        None => declared
            .parse()
            .map_err(|e| Error::Parse(format!("field: {e}"))),
    }
}

fn scalar(field: Field, text: &str, locus: impl FnOnce() -> String) -> Result<Scalar> {
    field
        .parse(text)
        .map_err(|e| Error::Parse(format!("{}: {e}", locus())))
}

fn bound(i: usize, n: usize, locus: impl FnOnce() -> String) -> Result<()> {
    if i >= n {
        return Err(Error::Parse(format!(
            "{}: index {i} out of range (dim {n})",
            locus()
        )));
    }
    Ok(())
}

fn map_from<const K: usize>(
    field: Field,
    what: &str,
    rows: usize,
    cols: usize,
    dims: [usize; K],
    entries: impl IntoIterator<Item = ([usize; K], String)>,
    place: impl Fn(&[usize; K]) -> (usize, usize),
) -> Result<LinearMap> {
    let mut triples = Vec::new();
    for (pos, (idx, text)) in entries.into_iter().enumerate() {
        for (k, (&i, &n)) in idx.iter().zip(&dims).enumerate() {
            bound(i, n, || format!("{what}[{pos}][{k}]"))?;
        }
        let c = scalar(field, &text, || format!("{what}[{pos}]"))?;
        let (r, col) = place(&idx);
        triples.push((r, col, c));
    }
    LinearMap::from_triples(field, rows, cols, triples)
}

impl AlgebraFile {
    pub fn from_algebra(h: &HopfAlgebraData) -> Self {
        let n = h.dim;
        let mut mul = Vec::new();
        for col in 0..n * n {
            for (k, c) in h.mul.column(col).entries() {
                mul.push((col / n, col % n, *k, c.to_literal()));
            }
        }
        let mut comul = Vec::new();
        for i in 0..n {
            for (jk, c) in h.comul.column(i).entries() {
                comul.push((i, jk / n, jk % n, c.to_literal()));
            }
        }
        let unit = h
            .unit
            .column(0)
            .entries()
            .iter()
            .map(|(k, c)| (*k, c.to_literal()))
            .collect();
        let counit = (0..n)
            .filter_map(|i| {
                h.counit
                    .column(i)
                    .entries()
                    .first()
                    .map(|(_, c)| (i, c.to_literal()))
            })
            .collect();
        let mut antipode = Vec::new();
        for i in 0..n {
            for (j, c) in h.antipode.column(i).entries() {
                antipode.push((i, *j, c.to_literal()));
            }
        }
        AlgebraFile {
            kind: "hopf-algebra".into(),
            name: h.name.clone(),
            field: h.field.to_string(),
            dim: n,
            mul,
            unit,
            comul,
            counit,
            antipode,
        }
    }

    pub fn to_algebra(&self, over: Option<Field>) -> Result<HopfAlgebraData> {
        expect_kind(&self.kind, "hopf-algebra")?;
        let f = resolve_field(&self.field, over)?;
        let n = self.dim;
        let tri = |v: &[(usize, usize, usize, String)]| -> Vec<([usize; 3], String)> {
            v.iter()
                .map(|(a, b, c, s)| ([*a, *b, *c], s.clone()))
                .collect()
        };
        let mul = map_from(f, "mul", n, n * n, [n; 3], tri(&self.mul), |[i, j, k]| {
            (*k, i * n + j)
        })?;
        let comul = map_from(
            f,
            "comul",
            n * n,
            n,
            [n; 3],
            tri(&self.comul),
            |[i, j, k]| (j * n + k, *i),
        )?;
        let unit = map_from(
            f,
            "unit",
            n,
            1,
            [n],
            self.unit.iter().map(|(k, s)| ([*k], s.clone())),
            |[k]| (*k, 0),
        )?;
        let counit = map_from(
            f,
            "counit",
            1,
            n,
            [n],
            self.counit.iter().map(|(i, s)| ([*i], s.clone())),
            |[i]| (0, *i),
        )?;
        let antipode = map_from(
            f,
            "antipode",
            n,
            n,
            [n, n],
            self.antipode.iter().map(|(i, j, s)| ([*i, *j], s.clone())),
            |[i, j]| (*j, *i),
        )?;
        HopfAlgebraData::new(self.name.clone(), mul, unit, comul, counit, antipode)
    }
}

impl ActionFile {
    pub fn from_action(field: Field, act: &ModuleAction) -> Self {
        let v = act.carrier_dim;
        let mut entries = Vec::new();
        for col in 0..act.acting_dim * v {
            for (w, c) in act.map.column(col).entries() {
                entries.push((col / v, col % v, *w, c.to_literal()));
            }
        }
        ActionFile {
            kind: "action".into(),
            field: field.to_string(),
            acting_dim: act.acting_dim,
            carrier_dim: v,
            entries,
        }
    }

    pub fn to_action(&self, over: Option<Field>) -> Result<ModuleAction> {
        expect_kind(&self.kind, "action")?;
        let f = resolve_field(&self.field, over)?;
        let (n, v) = (self.acting_dim, self.carrier_dim);
        let map = map_from(
            f,
            "entries",
            v,
            n * v,
            [n, v, v],
            self.entries
                .iter()
                .map(|(h, a, w, s)| ([*h, *a, *w], s.clone())),
            |[h, a, w]| (*w, h * v + a),
        )?;
        ModuleAction::new(n, v, map)
    }

    /// A coaction file has the same shape with kind `coaction`.
    pub fn from_coaction(field: Field, co: &Coaction) -> Self {
        let v = co.carrier_dim;
        let mut entries = Vec::new();
        for a in 0..v {
            for (hw, c) in co.map.column(a).entries() {
                entries.push((a, hw / v, hw % v, c.to_literal()));
            }
        }
        ActionFile {
            kind: "coaction".into(),
            field: field.to_string(),
            acting_dim: co.coacting_dim,
            carrier_dim: v,
            entries,
        }
    }

    pub fn to_coaction(&self, over: Option<Field>) -> Result<Coaction> {
        expect_kind(&self.kind, "coaction")?;
        let f = resolve_field(&self.field, over)?;
        let (n, v) = (self.acting_dim, self.carrier_dim);
        let map = map_from(
            f,
            "entries",
            n * v,
            v,
            [v, n, v],
            self.entries
                .iter()
                .map(|(a, h, w, s)| ([*a, *h, *w], s.clone())),
            |[a, h, w]| (h * v + w, *a),
        )?;
        Coaction::new(n, v, map)
    }
}

impl MapFile {
    pub fn from_map(map: &LinearMap) -> Self {
        let mut entries = Vec::new();
        for i in 0..map.cols() {
            for (j, c) in map.column(i).entries() {
                entries.push((i, *j, c.to_literal()));
            }
        }
        MapFile {
            kind: "linear-map".into(),
            field: map.field().to_string(),
            domain_dim: map.cols(),
            codomain_dim: map.rows(),
            entries,
        }
    }

    pub fn to_map(&self, over: Option<Field>) -> Result<LinearMap> {
        expect_kind(&self.kind, "linear-map")?;
        let f = resolve_field(&self.field, over)?;
        map_from(
            f,
            "entries",
            self.codomain_dim,
            self.domain_dim,
            [self.domain_dim, self.codomain_dim],
            self.entries.iter().map(|(i, j, s)| ([*i, *j], s.clone())),
            |[i, j]| (*j, *i),
        )
    }
}

impl TensorFile {
    pub fn from_vector(field: Field, dim: usize, v: &Vector) -> Self {
        let entries = v
            .entries()
            .iter()
            .map(|(ij, c)| (ij / dim, ij % dim, c.to_literal()))
            .collect();
        TensorFile {
            kind: "tensor".into(),
            field: field.to_string(),
            dim,
            entries,
        }
    }

    pub fn to_vector(&self, over: Option<Field>) -> Result<Vector> {
        expect_kind(&self.kind, "tensor")?;
        let f = resolve_field(&self.field, over)?;
        let n = self.dim;
        let as_map = map_from(
            f,
            "entries",
            n * n,
            1,
            [n, n],
            self.entries.iter().map(|(i, j, s)| ([*i, *j], s.clone())),
            |[i, j]| (i * n + j, 0),
        )?;
        Ok(as_map.column(0).clone())
    }
}

impl CayleyFile {
    pub fn from_table(name: &str, g: &CayleyTable) -> Self {
        CayleyFile {
            kind: "cayley-table".into(),
            name: name.into(),
            table: g.rows().to_vec(),
        }
    }

    pub fn to_table(&self) -> Result<CayleyTable> {
        expect_kind(&self.kind, "cayley-table")?;
        CayleyTable::new(self.table.clone())
    }
}

pub fn parse_algebra(path: &Path, over: Option<Field>) -> Result<HopfAlgebraData> {
    read_json::<AlgebraFile>(path)?.to_algebra(over)
}

pub fn parse_action(path: &Path, over: Option<Field>) -> Result<ModuleAction> {
    read_json::<ActionFile>(path)?.to_action(over)
}

pub fn parse_coaction(path: &Path, over: Option<Field>) -> Result<Coaction> {
    read_json::<ActionFile>(path)?.to_coaction(over)
}

pub fn parse_dmap(path: &Path, over: Option<Field>) -> Result<LinearMap> {
    read_json::<MapFile>(path)?.to_map(over)
}

pub fn parse_tensor(path: &Path, over: Option<Field>) -> Result<Vector> {
    read_json::<TensorFile>(path)?.to_vector(over)
}

pub fn parse_cayley(path: &Path) -> Result<CayleyTable> {
    read_json::<CayleyFile>(path)?.to_table()
}

/// Declared field of a JSON file carrying a `field` attribute.
pub fn declared_field(path: &Path) -> Result<Option<Field>> {
    #[derive(Deserialize)]
    struct Probe {
        field: Option<String>,
    }
    let probe: Probe = read_json(path)?;
    probe
        .field
        .map(|s| s.parse().map_err(|e| Error::Parse(format!("field: {e}"))))
        .transpose()
}
