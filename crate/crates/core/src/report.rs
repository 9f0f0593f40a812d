//! Check reports shared by every checker.
//!
//! A report is an ordered list of named entries. Failing entries carry a
//! witness: the first failing input in canonical (lexicographic) order, with
//! both evaluated sides. Parallel evaluation always reduces to that minimum,
//! so reports are deterministic.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::linalg::{Pipeline, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Multi-index of the failing basis input (or input ordinal / pair).
    pub indices: Vec<usize>,
    #[serde(serialize_with = "serialize_vector")]
    pub lhs: Vector,
    #[serde(serialize_with = "serialize_vector")]
    pub rhs: Vector,
}

pub(crate) fn serialize_vector<S: Serializer>(v: &Vector, s: S) -> Result<S::Ok, S::Error> {
    let entries: Vec<(usize, String)> = v
        .entries()
        .iter()
        .map(|(i, c)| (*i, c.to_literal()))
        .collect();
    entries.serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    /// Informational entries are reported but do not affect the verdict.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckEntry {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckEntry {
            name: name.into(),
            passed: true,
            informational: false,
            witness: None,
            note: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Option<Witness>) -> Self {
        CheckEntry {
            name: name.into(),
            passed: false,
            informational: false,
            witness,
            note: None,
        }
    }

    /// A computed truth value without a witness.
    pub fn fact(name: impl Into<String>, passed: bool) -> Self {
        CheckEntry {
            name: name.into(),
            passed,
            informational: false,
            witness: None,
            note: None,
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    /// Appends another report's entries, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut e in other.entries {
            if !prefix.is_empty() {
                e.name = format!("{prefix}.{}", e.name);
            }
            self.entries.push(e);
        }
    }

    /// True when every non-informational entry passed.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed || e.informational)
    }

    pub fn first_failure(&self) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| !e.passed && !e.informational)
    }

    pub fn get(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Whether the named entry exists and passed.
    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(|e| e.passed)
    }

    /// Whether every entry whose name starts with `prefix` passed.
    pub fn all_hold(&self, prefix: &str) -> bool {
        self.entries
            .iter()
            .filter(|e| e.name.starts_with(prefix))
            .all(|e| e.passed)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let status = match (e.passed, e.informational) {
                (true, false) => "PASS",
                (false, false) => "FAIL",
                (true, true) => "info: true",
                (false, true) => "info: false",
            };
            let _ = writeln!(out, "[{status}] {}", e.name);
            if let Some(note) = &e.note {
                let _ = writeln!(out, "        note: {note}");
            }
            if let Some(w) = &e.witness {
                let _ = writeln!(out, "        witness at {:?}", w.indices);
                let _ = writeln!(out, "          lhs = {}", format_vector(&w.lhs));
                let _ = writeln!(out, "          rhs = {}", format_vector(&w.rhs));
            }
        }
        out
    }
}

pub(crate) fn format_vector(v: &Vector) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.entries()
        .iter()
        .map(|(i, c)| format!("{c}·e{i}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Splits a flat row-major index into a multi-index over `factors`.
pub fn multi_index(mut flat: usize, factors: &[usize]) -> Vec<usize> {
    let mut out = vec![0; factors.len()];
    for k in (0..factors.len()).rev() {
        out[k] = flat % factors[k];
        flat /= factors[k];
    }
    out
}

/// First index in `0..count` where the two sides differ, evaluated in parallel
/// but reduced to the canonical minimum.
pub fn first_mismatch<F>(count: usize, eval: F) -> Option<(usize, Vector, Vector)>
where
    F: Fn(usize) -> (Vector, Vector) + Sync,
{
    (0..count).into_par_iter().find_map_first(|i| {
        let (l, r) = eval(i);
        (l != r).then_some((i, l, r))
    })
}

/// Checks `lhs == rhs` as linear maps by evaluating on every basis vector.
pub fn check_maps(name: &str, lhs: &Pipeline<'_>, rhs: &Pipeline<'_>) -> CheckEntry {
    assert_eq!(
        lhs.domain_dim(),
        rhs.domain_dim(),
        "{name}: domain mismatch"
    );
    assert_eq!(
        lhs.codomain_dim(),
        rhs.codomain_dim(),
        "{name}: codomain mismatch"
    );
    let factors = lhs.domain_factors();
    match first_mismatch(lhs.domain_dim(), |i| {
        (lhs.apply_basis(i), rhs.apply_basis(i))
    }) {
        None => CheckEntry::pass(name),
        Some((i, l, r)) => CheckEntry::fail(
            name,
            Some(Witness {
                indices: multi_index(i, &factors),
                lhs: l,
                rhs: r,
            }),
        ),
    }
}

/// Which inputs a check evaluates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Scope {
    /// Every basis tensor of the domain.
    #[default]
    Full,
    /// Tensor factors of dimension `dim` range only over `generators`
    /// (typically algebra generators); other factors range over their basis.
    Sample { dim: usize, generators: Vec<Vector> },
}

impl Scope {
    pub fn is_full(&self) -> bool {
        matches!(self, Scope::Full)
    }

    fn candidates(&self, field: crate::scalar::Field, factor: usize) -> Vec<Vector> {
        match self {
            Scope::Sample { dim, generators } if *dim == factor => generators.clone(),
            _ => (0..factor)
                .map(|i| Vector::unit(field, factor, i))
                .collect(),
        }
    }
}

/// [`check_maps`] restricted to a [`Scope`]. Witness indices are ordinals
/// into each factor's candidate list.
pub fn check_maps_in(
    name: &str,
    lhs: &Pipeline<'_>,
    rhs: &Pipeline<'_>,
    scope: &Scope,
) -> CheckEntry {
    if scope.is_full() {
        return check_maps(name, lhs, rhs);
    }
    assert_eq!(
        lhs.domain_dim(),
        rhs.domain_dim(),
        "{name}: domain mismatch"
    );
    let field = lhs.field();
    let lists: Vec<Vec<Vector>> = lhs
        .domain_factors()
        .iter()
        .map(|&f| scope.candidates(field, f))
        .collect();
    let sizes: Vec<usize> = lists.iter().map(Vec::len).collect();
    let count: usize = sizes.iter().product();
    let input = |ordinal: usize| -> Vector {
        let picks = multi_index(ordinal, &sizes);
        let mut parts = picks.iter().zip(&lists).map(|(&p, list)| &list[p]);
        let first = parts
            .next()
            .cloned()
            .unwrap_or_else(|| Vector::unit(field, 1, 0));
        parts.fold(first, |acc, v| acc.tensor(v))
    };
    let entry = check_indexed(
        name,
        count,
        |k| {
            let v = input(k);
            (lhs.apply(&v), rhs.apply(&v))
        },
        |k| multi_index(k, &sizes),
    );
    entry.with_note("generator scope")
}

/// Checks `lhs == rhs` on each of the given input vectors (e.g. a subspace
/// basis); the witness index is the ordinal of the failing input.
pub fn check_on_vectors(
    name: &str,
    inputs: &[Vector],
    lhs: &Pipeline<'_>,
    rhs: &Pipeline<'_>,
) -> CheckEntry {
    match first_mismatch(inputs.len(), |i| {
        (lhs.apply(&inputs[i]), rhs.apply(&inputs[i]))
    }) {
        None => CheckEntry::pass(name),
        Some((i, l, r)) => CheckEntry::fail(
            name,
            Some(Witness {
                indices: vec![i],
                lhs: l,
                rhs: r,
            }),
        ),
    }
}

/// Generic indexed check; `label` maps the failing ordinal to witness indices.
pub fn check_indexed<F, L>(name: &str, count: usize, eval: F, label: L) -> CheckEntry
where
    F: Fn(usize) -> (Vector, Vector) + Sync,
    L: Fn(usize) -> Vec<usize>,
{
    match first_mismatch(count, eval) {
        None => CheckEntry::pass(name),
        Some((i, l, r)) => CheckEntry::fail(
            name,
            Some(Witness {
                indices: label(i),
                lhs: l,
                rhs: r,
            }),
        ),
    }
}

/// Compares two fixed vectors.
pub fn check_vectors(name: &str, lhs: Vector, rhs: Vector) -> CheckEntry {
    if lhs == rhs {
        CheckEntry::pass(name)
    } else {
        CheckEntry::fail(
            name,
            Some(Witness {
                indices: Vec::new(),
                lhs,
                rhs,
            }),
        )
    }
}
