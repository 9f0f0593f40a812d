//! Finite groups by Cayley table, their group and function algebras, and
//! character groups of abelian groups.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{dual_hopf, HopfAlgebraData, ModuleAction};
use crate::linalg::LinearMap;
use crate::scalar::{Field, Scalar};

/// Multiplication table of a finite group; `table[a][b]` is the index of
/// `a·b`, and index 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
}

impl CayleyTable {
    /// Validates the group axioms.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {a} has length {}",
                    row.len()
                )));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidTable(format!(
                    "entry {x} in row {a} out of range"
                )));
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(Error::InvalidTable(format!(
                    "index 0 is not a two-sided identity (fails at {a})"
                )));
            }
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                if std::mem::replace(&mut row_seen[table[a][b]], true) {
                    return Err(Error::InvalidTable(format!("row {a} is not a permutation")));
                }
                if std::mem::replace(&mut col_seen[table[b][a]], true) {
                    return Err(Error::InvalidTable(format!(
                        "column {a} is not a permutation"
                    )));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(CayleyTable { table })
    }

    /// `ℤ_n` with `i·j = i + j mod n`.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        CayleyTable { table }
    }

    /// The group generated by the given permutations' closure, listed in
    /// lexicographic order of their images (identity first).
    pub fn from_permutations(mut perms: Vec<Vec<usize>>) -> Result<Self> {
        perms.sort();
        perms.dedup();
        let index = |p: &Vec<usize>| perms.binary_search(p).ok();
        let n = perms.len();
        let mut table = vec![vec![0; n]; n];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                // (a·b)(x) = a(b(x))
                let prod: Vec<usize> = pb.iter().map(|&x| pa[x]).collect();
                table[a][b] = index(&prod)
                    .ok_or_else(|| Error::InvalidTable("permutations are not closed".into()))?;
            }
        }
        CayleyTable::new(table)
    }

    /// The symmetric group on `k` letters; elements are permutations
    /// `x ↦ p[x]` in lexicographic order of `(p[0], …, p[k-1])`.
    pub fn symmetric(k: usize) -> Self {
        CayleyTable::from_permutations(all_permutations(k)).expect("symmetric group is a group")
    }

    /// `G × K` with index `g·|K| + k`.
    pub fn direct_product(&self, other: &CayleyTable) -> Self {
        let (n, m) = (self.order(), other.order());
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        CayleyTable { table }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.table[a]
            .iter()
            .position(|&x| x == 0)
            .expect("rows are permutations")
    }

    /// `a b a⁻¹`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order())
            .map(|a| self.element_order(a))
            .fold(1, lcm)
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(k - 1) {
        for pos in 0..k {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// `kG`: `e_a e_b = e_{ab}`, `Δe_g = e_g⊗e_g`, `ε(e_g) = 1`, `S e_g = e_{g⁻¹}`.
pub fn group_algebra(field: Field, g: &CayleyTable, name: &str) -> HopfAlgebraData {
    let n = g.order();
    let one = field.one();
    let mul = LinearMap::from_triples(
        field,
        n,
        n * n,
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| (g.mul(a, b), a * n + b, one.clone())),
    )
    .expect("indices in range");
    let unit = LinearMap::from_triples(field, n, 1, [(0, 0, one.clone())]).expect("in range");
    let comul =
        LinearMap::from_triples(field, n * n, n, (0..n).map(|a| (a * n + a, a, one.clone())))
            .expect("in range");
    let counit = LinearMap::from_triples(field, 1, n, (0..n).map(|a| (0, a, one.clone())))
        .expect("in range");
    let antipode = LinearMap::from_triples(field, n, n, (0..n).map(|a| (g.inv(a), a, one.clone())))
        .expect("in range");
    HopfAlgebraData::new(format!("k{name}"), mul, unit, comul, counit, antipode)
        .expect("shapes are consistent")
}

/// `k(G)`: pointwise product on delta functions, `Δδ_g = Σ_{ab=g} δ_a⊗δ_b`.
pub fn function_algebra(field: Field, g: &CayleyTable, name: &str) -> HopfAlgebraData {
    dual_hopf(&group_algebra(field, g, name)).renamed(format!("k({name})"))
}

/// Coadjoint action of `kG` on `k(G)`: `h ▷ δ_s = δ_{h s h⁻¹}`.
pub fn coadjoint_action(field: Field, g: &CayleyTable) -> ModuleAction {
    let n = g.order();
    let one = field.one();
    let map = LinearMap::from_triples(
        field,
        n,
        n * n,
        (0..n)
            .flat_map(|h| (0..n).map(move |s| (h, s)))
            .map(|(h, s)| (g.conjugate(h, s), h * n + s, one.clone())),
    )
    .expect("in range");
    ModuleAction {
        acting_dim: n,
        carrier_dim: n,
        map,
    }
}

/// Characters `G → k^×` of a finite abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterGroup {
    /// `values[u][g] = u(g)`; index 0 is the trivial character.
    pub values: Vec<Vec<Scalar>>,
    /// Group law of the characters (pointwise product).
    pub table: CayleyTable,
}

impl CharacterGroup {
    pub fn order(&self) -> usize {
        self.values.len()
    }
}

/// All characters of an abelian group, provided the field contains enough
/// roots of unity. Characters are listed by their exponent vectors on a
/// canonical generating set, relative to the field's smallest primitive root.
pub fn characters(field: Field, g: &CayleyTable) -> Result<CharacterGroup> {
    if !g.is_abelian() {
        return Err(Error::InvalidInput(
            "character group requires an abelian group".into(),
        ));
    }
    let n = g.order();
    // Greedy generating set: repeatedly add the smallest element outside the
    // subgroup generated so far.
    let closure = |gens: &[usize]| -> Vec<bool> {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(y) = stack.pop() {
            for &x in gens {
                let z = g.mul(y, x);
                if !std::mem::replace(&mut seen[z], true) {
                    stack.push(z);
                }
            }
        }
        seen
    };
    let mut gens: Vec<usize> = Vec::new();
    while let Some(x) = {
        let span = closure(&gens);
        (0..n).find(|&x| !span[x])
    } {
        gens.push(x);
    }
    let exponent = g.exponent() as u64;
    let zeta = field.primitive_root_of_unity(exponent).ok_or_else(|| {
        Error::Field(format!(
            "{field} has no primitive {exponent}-th root of unity; use Fp:<p> with p ≡ 1 mod {exponent}"
        ))
    })?;
    let orders: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
    let mut values: Vec<Vec<Scalar>> = Vec::new();
    let count: usize = orders.iter().product();
    'assignments: for flat in 0..count {
        // exponent vector, first generator most significant
        let mut ks = vec![0usize; gens.len()];
        let mut rem = flat;
        for i in (0..gens.len()).rev() {
            ks[i] = rem % orders[i];
            rem /= orders[i];
        }
        // value on generator i: ζ^{(exponent/order_i)·k_i}
        let gen_vals: Vec<Scalar> = ks
            .iter()
            .zip(&orders)
            .map(|(&k, &o)| zeta.pow((exponent / o as u64) * k as u64))
            .collect();
        let mut val: Vec<Option<Scalar>> = vec![None; n];
        val[0] = Some(field.one());
        let mut stack = vec![0usize];
        while let Some(y) = stack.pop() {
            for (i, &x) in gens.iter().enumerate() {
                let z = g.mul(y, x);
                let v = val[y].as_ref().expect("visited") * &gen_vals[i];
                match &val[z] {
                    None => {
                        val[z] = Some(v);
                        stack.push(z);
                    }
                    // the generators satisfy a relation this assignment violates
                    Some(existing) if *existing != v => continue 'assignments,
                    Some(_) => {}
                }
            }
        }
        let row: Vec<Scalar> = val
            .into_iter()
            .map(|v| v.expect("generators span"))
            .collect();
        for a in 0..n {
            for b in 0..n {
                if row[g.mul(a, b)] != &row[a] * &row[b] {
                    return Err(Error::InvalidInput(
                        "enumerated map is not a character".into(),
                    ));
                }
            }
        }
        values.push(row);
    }
    if values.len() != n {
        return Err(Error::InvalidInput(format!(
            "found {} characters for a group of order {n}",
            values.len()
        )));
    }
    let m = values.len();
    let mut table = vec![vec![0; m]; m];
    for u in 0..m {
        for v in 0..m {
            let prod: Vec<Scalar> = (0..n).map(|x| &values[u][x] * &values[v][x]).collect();
            table[u][v] = values
                .iter()
                .position(|w| *w == prod)
                .ok_or_else(|| Error::InvalidInput("characters not closed".into()))?;
        }
    }
    Ok(CharacterGroup {
        values,
        table: CayleyTable::new(table)?,
    })
}
