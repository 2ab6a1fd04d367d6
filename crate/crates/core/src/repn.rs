//! Modules over a Lie algebra and the constructions used on them: trivial,
//! adjoint, dual, tensor and hom modules, restriction, submodules and
//! quotients, invariants and equivariant maps.

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, Vector};
use crate::liealg::{LieAlgebra, Subspace};

/// A representation given by one `dim x dim` action matrix per basis element
/// of the acting algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dim: usize,
    action: Vec<Matrix>,
}

/// Induced structures on an invariant subspace `U ⊆ M` and on `M / U`.
/// `inclusion` is `dim M x dim U`, `projection` is `dim M/U x dim M`.
#[derive(Clone, Debug)]
pub struct SubQuotient {
    pub sub: Representation,
    pub quotient: Representation,
    pub inclusion: Matrix,
    pub projection: Matrix,
}

impl Representation {
    pub fn new(dim: usize, action: Vec<Matrix>) -> Result<Self> {
        for (i, m) in action.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix {i} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { dim, action })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the acting algebra.
    pub fn algebra_dim(&self) -> usize {
        self.action.len()
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.action
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// `ρ(x)` for an arbitrary algebra element `x`.
    pub fn act(&self, x: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (c, m) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&m.scale(c)).unwrap();
            }
        }
        out
    }

    pub fn trivial(g: &LieAlgebra, m: usize) -> Self {
        Representation {
            dim: m,
            action: vec![Matrix::zeros(m, m); g.dim()],
        }
    }

    pub fn adjoint(g: &LieAlgebra) -> Self {
        Representation {
            dim: g.dim(),
            action: g.ad_matrices(),
        }
    }

    /// Checks `ρ([b_i, b_j]) = [ρ(b_i), ρ(b_j)]` on all pairs `i < j`.
    pub fn validate(&self, g: &LieAlgebra) -> Result<Vec<(usize, usize)>> {
        self.check_algebra(g)?;
        let n = g.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.act(g.bracket_basis(i, j));
                let rhs = self.action[i].commutator(&self.action[j])?;
                if lhs != rhs {
                    bad.push((i, j));
                }
            }
        }
        Ok(bad)
    }

    pub fn check_algebra(&self, g: &LieAlgebra) -> Result<()> {
        if self.algebra_dim() != g.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// `ρ*(x) = -ρ(x)^T`.
    pub fn dual(&self) -> Self {
        let neg = -Rational::one();
        Representation {
            dim: self.dim,
            action: self.action.iter().map(|m| m.transpose().scale(&neg)).collect(),
        }
    }

    /// `M ⊗ N` with `x (u ⊗ v) = xu ⊗ v + u ⊗ xv`; index `u * dim N + v`.
    pub fn tensor(&self, other: &Representation) -> Result<Self> {
        if self.algebra_dim() != other.algebra_dim() {
            return Err(Error::AlgebraMismatch);
        }
        let (a, b) = (self.dim, other.dim);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(x, y)| {
                let mut m = Matrix::zeros(a * b, a * b);
                for u in 0..a {
                    for v in 0..b {
                        let col = u * b + v;
                        for u2 in 0..a {
                            let c = &x[(u2, u)];
                            if !c.is_zero() {
                                m[(u2 * b + v, col)] += c;
                            }
                        }
                        for v2 in 0..b {
                            let c = &y[(v2, v)];
                            if !c.is_zero() {
                                m[(u * b + v2, col)] += c;
                            }
                        }
                    }
                }
                m
            })
            .collect();
        Ok(Representation { dim: a * b, action })
    }

    /// `Hom(M, N) = M* ⊗ N`, so `(x f)(v) = x f(v) - f(x v)`. A map `f` is
    /// stored at index `v * dim N + w` for the coefficient of `w` in `f(e_v)`.
    pub fn hom(&self, other: &Representation) -> Result<Self> {
        self.dual().tensor(other)
    }

    /// Restriction to a subalgebra `h ⊆ g`, as a module over the abstract
    /// algebra `g.subalgebra(h)`.
    pub fn restrict(&self, g: &LieAlgebra, h: &Subspace) -> Result<Self> {
        self.check_algebra(g)?;
        if !g.is_subalgebra(h) {
            return Err(Error::NotSubalgebra);
        }
        Ok(Representation {
            dim: self.dim,
            action: h.basis().iter().map(|x| self.act(x)).collect(),
        })
    }

    pub fn is_invariant(&self, u: &Subspace) -> bool {
        self.action.iter().all(|m| {
            u.basis()
                .iter()
                .all(|v| u.contains(&m.mul_vec(v).unwrap()))
        })
    }

    /// Induced module structures on `U` (in its echelon basis) and on `M/U`
    /// (in the basis of greedily chosen standard vectors).
    pub fn sub_and_quotient(&self, u: &Subspace) -> Result<SubQuotient> {
        if u.ambient() != self.dim {
            return Err(Error::DimensionMismatch("subspace of another module".into()));
        }
        if !self.is_invariant(u) {
            return Err(Error::NotInvariant);
        }
        let m = self.dim;
        let k = u.dim();
        let sub_action = self
            .action
            .iter()
            .map(|a| {
                let cols: Vec<Vector> = u
                    .basis()
                    .iter()
                    .map(|v| u.coordinates(&a.mul_vec(v).unwrap()).unwrap())
                    .collect();
                Matrix::from_columns(k, &cols)
            })
            .collect();
        let lift = u.complement_indices();
        let q = lift.len();
        let mut frame: Vec<Vector> = lift.iter().map(|&i| crate::exact::unit_vector(m, i)).collect();
        frame.extend(u.basis().iter().cloned());
        let inv = Matrix::from_columns(m, &frame).inverse()?;
        let projection = if q == 0 {
            Matrix::zeros(0, m)
        } else {
            Matrix::from_rows(inv.row_vectors().into_iter().take(q).collect())?
        };
        let quotient_action = self
            .action
            .iter()
            .map(|a| {
                let cols: Vec<Vector> = lift
                    .iter()
                    .map(|&i| projection.mul_vec(&a.column(i)).unwrap())
                    .collect();
                Matrix::from_columns(q, &cols)
            })
            .collect();
        Ok(SubQuotient {
            sub: Representation {
                dim: k,
                action: sub_action,
            },
            quotient: Representation {
                dim: q,
                action: quotient_action,
            },
            inclusion: u.basis_matrix(),
            projection,
        })
    }

    /// `{v : ρ(x) v = 0 for all x in h}`.
    pub fn invariants(&self, h: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for x in h.basis() {
            rows.extend(self.act(x).row_vectors());
        }
        if rows.is_empty() {
            return Subspace::full(self.dim);
        }
        Subspace::span(self.dim, &Matrix::from_rows(rows).unwrap().null_space())
    }

    /// Invariants under the whole acting algebra.
    pub fn invariants_all(&self) -> Subspace {
        let n = self.algebra_dim();
        self.invariants(&Subspace::full(n))
    }
}

/// `Hom_h(M, N)`: the `h`-invariant linear maps, each returned as a
/// `dim N x dim M` matrix.
pub fn equivariant_homs(m: &Representation, n: &Representation, h: &Subspace) -> Result<Vec<Matrix>> {
    let hom = m.hom(n)?;
    let inv = hom.invariants(h);
    let (dm, dn) = (m.dim(), n.dim());
    Ok(inv
        .basis()
        .iter()
        .map(|f| {
            let mut out = Matrix::zeros(dn, dm);
            for v in 0..dm {
                for w in 0..dn {
                    out[(w, v)] = f[v * dn + w].clone();
                }
            }
            out
        })
        .collect())
}
