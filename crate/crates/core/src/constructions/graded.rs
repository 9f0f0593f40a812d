//! Crossed modules `k(M) → k(Ĝ)` from a finite abelian group `G` acting on a
//! finite group `M` by automorphisms and a homomorphism `d̂: Ĝ → M^G`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebraData, ModuleAction};
use crate::linalg::{Accumulator, LinearMap};
use crate::scalar::Field;

use super::crossed::CrossedModuleData;
use super::group::{characters, function_algebra, CayleyTable, CharacterGroup};

/// Input data for the graded function-algebra crossed module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCrossedModuleInput {
    pub name: String,
    pub field: Field,
    /// The group `M`.
    pub group: CayleyTable,
    /// The abelian group `G`.
    pub grading_group: CayleyTable,
    /// `action[g][m]` is `m ◁ g`.
    pub action: Vec<Vec<usize>>,
    /// `boundary[u]` is `d̂(u)` for the `u`-th character, in the order of
    /// [`characters`].
    pub boundary: Vec<usize>,
}

/// Built crossed module plus the character data it was graded by.
#[derive(Clone, Debug)]
pub struct GradedCrossedModule {
    pub crossed: CrossedModuleData,
    pub characters: CharacterGroup,
    pub input: GradedCrossedModuleInput,
}

impl GradedCrossedModuleInput {
    /// Checks that the action is by automorphisms, `d̂` is a homomorphism and
    /// lands in the fixed subgroup, and returns the characters of `G`.
    pub fn validate(&self) -> Result<CharacterGroup> {
        let m = &self.group;
        let g = &self.grading_group;
        let (nm, ng) = (m.order(), g.order());
        if !g.is_abelian() {
            return Err(Error::InvalidInput("grading group must be abelian".into()));
        }
        if self.action.len() != ng || self.action.iter().any(|row| row.len() != nm) {
            return Err(Error::InvalidInput(format!(
                "action table must be {ng} rows of length {nm}"
            )));
        }
        let act = |x: usize, a: usize| self.action[a][x];
        for a in 0..ng {
            let mut seen = vec![false; nm];
            for x in 0..nm {
                let y = act(x, a);
                if y >= nm || std::mem::replace(&mut seen[y], true) {
                    return Err(Error::InvalidInput(format!(
                        "action of element {a} is not a bijection"
                    )));
                }
                for z in 0..nm {
                    if act(m.mul(x, z), a) != m.mul(y, act(z, a)) {
                        return Err(Error::InvalidInput(format!(
                            "action of element {a} is not an automorphism (fails at {x}, {z})"
                        )));
                    }
                }
            }
        }
        for x in 0..nm {
            if act(x, 0) != x {
                return Err(Error::InvalidInput(
                    "identity does not act trivially".into(),
                ));
            }
            for a in 0..ng {
                for b in 0..ng {
                    if act(act(x, a), b) != act(x, g.mul(a, b)) {
                        return Err(Error::InvalidInput(format!(
                            "not a right action (fails at {x}, {a}, {b})"
                        )));
                    }
                }
            }
        }
        let chars = characters(self.field, g)?;
        let nu = chars.order();
        if self.boundary.len() != nu || self.boundary.iter().any(|&x| x >= nm) {
            return Err(Error::InvalidInput(format!(
                "boundary must list {nu} elements of the group"
            )));
        }
        for u in 0..nu {
            for v in 0..nu {
                if self.boundary[chars.table.mul(u, v)] != m.mul(self.boundary[u], self.boundary[v])
                {
                    return Err(Error::InvalidInput(format!(
                        "boundary is not a homomorphism (fails at characters {u}, {v})"
                    )));
                }
            }
            for a in 0..ng {
                if act(self.boundary[u], a) != self.boundary[u] {
                    return Err(Error::InvalidInput(format!(
                        "boundary of character {u} is not fixed by the action"
                    )));
                }
            }
        }
        Ok(chars)
    }
}

/// `A = k(M)` graded by characters of `G`, `H = k(Ĝ)` acting by
/// `δ_u ▷ f = f_u`, and `d(δ_m) = Σ_{d̂(u) = m} δ_u`.
pub fn graded_function_crossed_module(
    inp: &GradedCrossedModuleInput,
) -> Result<GradedCrossedModule> {
    let chars = inp.validate()?;
    let field = inp.field;
    let m = &inp.group;
    let ng = inp.grading_group.order();
    let (nm, nu) = (m.order(), chars.order());
    let inv_order = field
        .from_i64(ng as i64)
        .inv()
        .map_err(|_| Error::Field(format!("|G| = {ng} is not invertible in {field}")))?;
    let a: HopfAlgebraData = function_algebra(field, m, "M").renamed(format!("k({})", inp.name));
    let h = function_algebra(field, &chars.table, "Ĝ").renamed("k(Ĝ)");
    // δ_u ▷ δ_x = (1/|G|) Σ_g u(g)⁻¹ δ_{x ◁ g⁻¹}
    let mut columns = Vec::with_capacity(nu * nm);
    for u in 0..nu {
        for x in 0..nm {
            let mut acc = Accumulator::new(nm);
            for g in 0..ng {
                let ginv = inp.grading_group.inv(g);
                let c = &chars.values[u][g].inv()? * &inv_order;
                acc.add_owned(inp.action[ginv][x], c);
            }
            columns.push(acc.finish());
        }
    }
    let action = ModuleAction::new(nu, nm, LinearMap::from_columns(field, nm, columns)?)?;
    let one = field.one();
    let boundary = LinearMap::from_triples(
        field,
        nu,
        nm,
        (0..nu).map(|u| (u, inp.boundary[u], one.clone())),
    )?;
    Ok(GradedCrossedModule {
        crossed: CrossedModuleData::new(format!("graded-{}", inp.name), a, h, boundary, action)?,
        characters: chars,
        input: inp.clone(),
    })
}

/// Closed forms on `k(M) ⊗ k(Ĝ)` (basis `δ_x ⊗ δ_u` at `x·|Ĝ| + u`):
/// `s(f⊗δ_u) = f(e)δ_u`, `t(f⊗δ_u) = f(d̂(u))δ_u`,
/// `𝒮(f⊗δ_u) = L_{d̂(u)⁻¹}(Sf) ⊗ δ_u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedClosedForms {
    pub source: LinearMap,
    pub target: LinearMap,
    pub reverse: LinearMap,
}

impl GradedCrossedModule {
    pub fn closed_forms(&self) -> GradedClosedForms {
        let field = self.input.field;
        let m = &self.input.group;
        let (nm, nu) = (m.order(), self.characters.order());
        let one = field.one();
        let idx = |x: usize, u: usize| x * nu + u;
        let pairs = || (0..nm).flat_map(move |x| (0..nu).map(move |u| (x, u)));
        let source = LinearMap::from_triples(
            field,
            nu,
            nm * nu,
            pairs()
                .filter(|&(x, _)| x == 0)
                .map(|(x, u)| (u, idx(x, u), one.clone())),
        )
        .expect("in range");
        let target = LinearMap::from_triples(
            field,
            nu,
            nm * nu,
            pairs()
                .filter(|&(x, u)| x == self.input.boundary[u])
                .map(|(x, u)| (u, idx(x, u), one.clone())),
        )
        .expect("in range");
        // L_{d̂(u)⁻¹}(δ_{x⁻¹}) = δ_{d̂(u) x⁻¹}
        let reverse = LinearMap::from_triples(
            field,
            nm * nu,
            nm * nu,
            pairs().map(|(x, u)| {
                (
                    idx(m.mul(self.input.boundary[u], m.inv(x)), u),
                    idx(x, u),
                    one.clone(),
                )
            }),
        )
        .expect("in range");
        GradedClosedForms {
            source,
            target,
            reverse,
        }
    }

    /// Whether `d̂(Ĝ)` is central in `M`.
    pub fn boundary_is_central(&self) -> bool {
        self.input
            .boundary
            .iter()
            .all(|&x| self.input.group.is_central(x))
    }
}
