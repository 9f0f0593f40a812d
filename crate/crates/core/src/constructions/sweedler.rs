//! Sweedler's four-dimensional Hopf algebra and the standard R-matrices on
//! it and on `kℤ₂`.

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebraData;
use crate::linalg::{LinearMap, Vector};
use crate::scalar::{Field, Scalar};

/// Basis index of `g^a x^b`.
fn idx(a: usize, b: usize) -> usize {
    a + 2 * b
}

fn require_odd(field: Field) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::Field(format!("{field} has characteristic 2")));
    }
    Ok(())
}

/// `H₄ = ⟨g, x | g² = 1, x² = 0, xg = -gx⟩` with basis `1, g, x, gx`,
/// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `Sx = -gx`.
pub fn sweedler_algebra(field: Field) -> Result<HopfAlgebraData> {
    require_odd(field)?;
    let one = field.one();
    let sign = |odd: bool| if odd { -&one } else { one.clone() };
    let basis = || (0..2).flat_map(|b| (0..2).map(move |a| (a, b)));
    let mut mul = Vec::new();
    for (a, b) in basis() {
        for (c, d) in basis() {
            if b + d < 2 {
                // x^b g^c = (-1)^{bc} g^c x^b
                mul.push((
                    idx((a + c) % 2, b + d),
                    idx(a, b) * 4 + idx(c, d),
                    sign(b * c == 1),
                ));
            }
        }
    }
    let mut comul = Vec::new();
    for (a, b) in basis() {
        let col = idx(a, b);
        if b == 0 {
            comul.push((idx(a, 0) * 4 + idx(a, 0), col, one.clone()));
        } else {
            // Δ(g^a x) = g^a x ⊗ g^a + g^{a+1} ⊗ g^a x
            comul.push((idx(a, 1) * 4 + idx(a, 0), col, one.clone()));
            comul.push((idx((a + 1) % 2, 0) * 4 + idx(a, 1), col, one.clone()));
        }
    }
    // S(g^a x) = (-1)^{a+1} g^{a+1} x
    let antipode = basis().map(|(a, b)| {
        if b == 0 {
            (idx(a, 0), idx(a, 0), one.clone())
        } else {
            (idx((a + 1) % 2, 1), idx(a, 1), sign(a == 0))
        }
    });
    HopfAlgebraData::new(
        "H4",
        LinearMap::from_triples(field, 4, 16, mul)?,
        LinearMap::from_triples(field, 4, 1, [(0, 0, one.clone())])?,
        LinearMap::from_triples(field, 16, 4, comul)?,
        LinearMap::from_triples(field, 1, 4, [(0, 0, one.clone()), (0, 1, one.clone())])?,
        LinearMap::from_triples(field, 4, 4, antipode)?,
    )
}

/// `½(1⊗1 + 1⊗g + g⊗1 - g⊗g)` on a two-element basis `1, g` embedded at
/// indices `0, 1` of an algebra of dimension `dim`.
fn sign_part(field: Field, dim: usize) -> Result<Vec<(usize, Scalar)>> {
    let half = field.ratio(1, 2)?;
    Ok(vec![
        (0, half.clone()),
        (1, half.clone()),
        (dim, half.clone()),
        (dim + 1, -&half),
    ])
}

/// Triangular structure `½(1⊗1 + 1⊗g + g⊗1 - g⊗g)` on `kℤ₂`.
pub fn z2_triangular_r_matrix(field: Field) -> Result<Vector> {
    require_odd(field)?;
    Ok(Vector::from_entries(4, sign_part(field, 2)?))
}

/// `𝓡_α = ½(1⊗1 + 1⊗g + g⊗1 - g⊗g) + ½α(x⊗x - x⊗gx + gx⊗x + gx⊗gx)` on `H₄`
/// with `Δx = x⊗1 + g⊗x`.
pub fn sweedler_r_matrix(field: Field, alpha: &Scalar) -> Result<Vector> {
    require_odd(field)?;
    let mut entries = sign_part(field, 4)?;
    let c = alpha * &field.ratio(1, 2)?;
    let (x, gx) = (idx(0, 1), idx(1, 1));
    entries.push((x * 4 + x, c.clone()));
    entries.push((x * 4 + gx, -&c));
    entries.push((gx * 4 + x, c.clone()));
    entries.push((gx * 4 + gx, c));
    Ok(Vector::from_entries(16, entries))
}
