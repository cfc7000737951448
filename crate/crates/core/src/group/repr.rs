//! Finite-dimensional real representations.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use nalgebra::DMatrix;

use super::{Element, GroupDescriptor, GroupError};

pub type Matrix = DMatrix<f64>;

/// Tolerance used when checking tabulated representations.
const TABLE_TOLERANCE: f64 = 1e-9;

/// A linear action `ρ` with `ρ(a·b) = ρ(a) ρ(b)`, products diagrammatic on
/// both sides.
#[derive(Clone, Debug, PartialEq)]
pub enum Representation {
    /// `σ` goes to the 0/1 matrix with ones at `(i, σ(i))`. Exact.
    Permutation { degree: usize },
    /// `m` in `Z_n` goes to rotation by `2πkm/n` (the real form of `ζ^{km}`).
    CyclicCharacter { modulus: u64, k: u64 },
    /// Standard action of `D_n` on the plane: `r` rotates by `2π/n`, `s` is
    /// the reflection `diag(1, -1)`.
    DihedralStandard { n: u64 },
    /// Explicit matrices for every element of a small finite group.
    Table { group: GroupDescriptor, matrices: BTreeMap<Element, Matrix> },
}

fn rotation(angle: f64) -> Matrix {
    let (s, c) = angle.sin_cos();
    Matrix::from_row_slice(2, 2, &[c, -s, s, c])
}

impl Representation {
    /// Builds a table representation, checking totality, `ρ(e) = 1` and the
    /// homomorphism property on every pair.
    pub fn table(group: GroupDescriptor, matrices: BTreeMap<Element, Matrix>) -> Result<Self, GroupError> {
        let err = |m: String| GroupError::Representation(m);
        let elements = group.elements()?;
        let dim = matrices
            .values()
            .next()
            .map(|m| m.nrows())
            .ok_or_else(|| err("empty table".into()))?;
        for e in &elements {
            let m = matrices.get(e).ok_or_else(|| err(format!("no matrix for {e}")))?;
            if m.nrows() != dim || m.ncols() != dim {
                return Err(err(format!("matrix for {e} is not {dim}x{dim}")));
            }
        }
        if matrices.len() != elements.len() {
            return Err(err("table has entries outside the group".into()));
        }
        let id = &matrices[&group.identity()];
        if (id - Matrix::identity(dim, dim)).amax() > TABLE_TOLERANCE {
            return Err(err("identity is not sent to the identity matrix".into()));
        }
        for a in &elements {
            for b in &elements {
                let ab = &matrices[&a.mul(b)?];
                if (ab - &matrices[a] * &matrices[b]).amax() > TABLE_TOLERANCE {
                    return Err(err(format!("not a homomorphism at ({a}, {b})")));
                }
            }
        }
        Ok(Representation::Table { group, matrices })
    }

    pub fn dimension(&self) -> usize {
        match self {
            Representation::Permutation { degree } => *degree,
            Representation::CyclicCharacter { .. } | Representation::DihedralStandard { .. } => 2,
            Representation::Table { matrices, .. } => matrices.values().next().map_or(0, |m| m.nrows()),
        }
    }

    /// Whether matrix entries are exact (0/1) rather than machine floats.
    pub fn is_exact(&self) -> bool {
        matches!(self, Representation::Permutation { .. })
    }

    pub fn represent(&self, a: &Element) -> Result<Matrix, GroupError> {
        let mismatch = || GroupError::Representation(format!("{self:?} is not defined on {a}"));
        match (self, a) {
            (Representation::Permutation { degree }, Element::Perm(p)) if p.degree() == *degree => {
                let mut m = Matrix::zeros(*degree, *degree);
                for i in 0..*degree {
                    m[(i, p.apply(i))] = 1.0;
                }
                Ok(m)
            }
            (Representation::CyclicCharacter { modulus, k }, Element::Cyclic { modulus: n, value })
                if modulus == n =>
            {
                let turns = ((*k as u128 * *value as u128) % *n as u128) as f64 / *n as f64;
                Ok(rotation(TAU * turns))
            }
            (Representation::DihedralStandard { n }, Element::Dihedral { n: m, rotation: k, reflection })
                if n == m =>
            {
                let r = rotation(TAU * (*k as f64) / (*n as f64));
                if *reflection {
                    Ok(Matrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, -1.0])) * r)
                } else {
                    Ok(r)
                }
            }
            (Representation::Table { group, matrices }, _) if group.contains(a) => {
                matrices.get(a).cloned().ok_or_else(mismatch)
            }
            _ => Err(mismatch()),
        }
    }
}
