//! Lie algebras given by structure constants, and the structural invariants
//! built on them: characteristic series, center, Killing form, radical,
//! nilradical, derivations, Levi decomposition, quotients and semidirect
//! products.

mod structure;
mod subspace;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{is_zero_vector, zero_vector, Matrix, Rational, Vector};
use crate::par;

pub use structure::{AlgebraReport, LeviDecomposition, Quotient};
pub use subspace::Subspace;

/// A finite-dimensional Lie algebra over the rationals.
///
/// Structure constants are held densely as `c[i][j][k]` with
/// `[b_i, b_j] = sum_k c[i][j][k] b_k`; only pairs `i < j` are ever supplied
/// by callers and the rest is filled in by antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    consts: Vec<Rational>,
}

/// A failing Jacobi triple `i < j < k` and the nonzero cyclic sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

/// Killing-type symmetric bilinear form, as a Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: Matrix,
}

impl BilinearForm {
    pub fn evaluate(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let gy = self.gram.mul_vec(y).expect("form dimension");
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.gram.det().expect("gram is square").is_zero()
    }
}

impl LieAlgebra {
    /// Builds an algebra from brackets `((i, j), [(k, c)])` meaning
    /// `[b_i, b_j] = sum c b_k`. Pairs with `i > j` are accepted and negated.
    /// The Jacobi identity is not checked here; see [`validate_structure`].
    ///
    /// [`validate_structure`]: LieAlgebra::validate_structure
    pub fn from_brackets<I>(name: impl Into<String>, basis: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Vec<(usize, Rational)>)>,
    {
        let n = basis.len();
        let mut consts = vec![Rational::zero(); n * n * n];
        for ((i, j), terms) in brackets {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch(format!(
                    "bracket index ({i}, {j}) out of range for dimension {n}"
                )));
            }
            let nonzero = terms.iter().any(|(_, c)| !c.is_zero());
            if i == j {
                if nonzero {
                    return Err(Error::DimensionMismatch(format!(
                        "bracket [b{i}, b{i}] must vanish"
                    )));
                }
                continue;
            }
            for (k, c) in terms {
                if k >= n {
                    return Err(Error::DimensionMismatch(format!(
                        "bracket target index {k} out of range for dimension {n}"
                    )));
                }
                consts[(i * n + j) * n + k] += &c;
                consts[(j * n + i) * n + k] -= &c;
            }
        }
        Ok(LieAlgebra {
            name: name.into(),
            basis,
            consts,
        })
    }

    /// Builds an algebra and rejects it unless the Jacobi identity holds.
    pub fn new_validated<I>(name: impl Into<String>, basis: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Vec<(usize, Rational)>)>,
    {
        let g = Self::from_brackets(name, basis, brackets)?;
        let bad = g.validate_structure();
        if bad.is_empty() {
            Ok(g)
        } else {
            Err(Error::Jacobi(bad.into_iter().map(|v| v.triple).collect()))
        }
    }

    /// The linear Lie algebra spanned by `mats` under the commutator bracket.
    /// Fails with `NotSubalgebra` if the span is not closed, and with
    /// `Singular` if the matrices are linearly dependent.
    pub fn from_matrix_basis(name: impl Into<String>, basis: Vec<String>, mats: &[Matrix]) -> Result<Self> {
        let d = mats.len();
        if basis.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "{} names for {d} matrices",
                basis.len()
            )));
        }
        let flat: Vec<Vector> = mats.iter().map(|m| m.entries().to_vec()).collect();
        let size = flat.first().map_or(0, Vec::len);
        if flat.iter().any(|f| f.len() != size) {
            return Err(Error::DimensionMismatch("matrices of different sizes".into()));
        }
        let span = Subspace::span(size, &flat);
        if span.dim() != d {
            return Err(Error::Singular);
        }
        let frame = Matrix::from_columns(size, &flat);
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let c = mats[i].commutator(&mats[j])?;
                let coords = frame
                    .solve(c.entries())?
                    .ok_or(Error::NotSubalgebra)?;
                let terms: Vec<(usize, Rational)> =
                    coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                if !terms.is_empty() {
                    brackets.push(((i, j), terms));
                }
            }
        }
        Self::from_brackets(name, basis, brackets)
    }

    pub fn abelian(n: usize) -> Self {
        let basis = (0..n).map(|i| format!("a{i}")).collect();
        Self::from_brackets(format!("abelian({n})"), basis, std::iter::empty()).unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.consts[(i * n + j) * n + k]
    }

    /// `[b_i, b_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim();
        &self.consts[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Nonzero brackets `[b_i, b_j]` with `i < j`, as sparse vectors.
    pub fn sparse_brackets(&self) -> Vec<((usize, usize), Vec<(usize, Rational)>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<(usize, Rational)> = self
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if !terms.is_empty() {
                    out.push(((i, j), terms));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(Rational::is_zero)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of length {} and {} in dimension {n}",
                x.len(),
                y.len()
            )));
        }
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let s = xi * yj;
                for (o, c) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(b_i)`: column `j` is `[b_i, b_j]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                m[(k, j)] = c.clone();
            }
        }
        m
    }

    pub fn ad_matrices(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.ad(i)).collect()
    }

    /// Matrix of `ad(x)` for an arbitrary element.
    pub fn ad_of(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        m[(k, j)] += xi * c;
                    }
                }
            }
        }
        m
    }

    /// Checks `[[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j] = 0` for
    /// every `i < j < k`; returns the failing triples.
    pub fn validate_structure(&self) -> Vec<JacobiViolation> {
        let n = self.dim();
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
            .collect();
        let unit = |i: usize| crate::exact::unit_vector(n, i);
        par::map_slice(&triples, |&(i, j, k)| {
            let a = self.bracket(self.bracket_basis(i, j), &unit(k)).unwrap();
            let b = self.bracket(self.bracket_basis(j, k), &unit(i)).unwrap();
            let c = self.bracket(self.bracket_basis(k, i), &unit(j)).unwrap();
            let residual: Vector = a
                .iter()
                .zip(&b)
                .zip(&c)
                .map(|((x, y), z)| x + y + z)
                .collect();
            (!is_zero_vector(&residual)).then_some(JacobiViolation {
                triple: (i, j, k),
                residual,
            })
        })
        .into_iter()
        .flatten()
        .collect()
    }

    /// `[A, B]` for subspaces `A`, `B`.
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                let v = self.bracket(x, y).unwrap();
                if !is_zero_vector(&v) {
                    vs.push(v);
                }
            }
        }
        Subspace::span(self.dim(), &vs)
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn derived_algebra(&self) -> Subspace {
        let g = self.whole();
        self.bracket_spaces(&g, &g)
    }

    pub fn is_subalgebra(&self, h: &Subspace) -> bool {
        h.contains_space(&self.bracket_spaces(h, h))
    }

    pub fn is_ideal(&self, a: &Subspace) -> bool {
        a.contains_space(&self.bracket_spaces(&self.whole(), a))
    }

    fn series(&self, start: Subspace, step: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
        let mut out = vec![start];
        if out[0].is_zero() {
            return out;
        }
        loop {
            let prev = out.last().unwrap();
            let next = step(prev);
            let stop = next.is_zero() || next.dim() == prev.dim();
            out.push(next);
            if stop {
                return out;
            }
        }
    }

    /// `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ...`, ending at zero or at the first
    /// repeated term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.derived_series_of(&self.whole())
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...`, same stopping rule.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let g = self.whole();
        self.series(g.clone(), |prev| self.bracket_spaces(&g, prev))
    }

    /// Derived series of a subalgebra, computed inside `g`.
    pub fn derived_series_of(&self, h: &Subspace) -> Vec<Subspace> {
        self.series(h.clone(), |prev| self.bracket_spaces(prev, prev))
    }

    pub fn is_solvable_subalgebra(&self, h: &Subspace) -> bool {
        self.derived_series_of(h).last().unwrap().is_zero()
    }

    /// Nilpotency of `h` as a Lie algebra in its own right.
    pub fn is_nilpotent_subalgebra(&self, h: &Subspace) -> bool {
        self.series(h.clone(), |prev| self.bracket_spaces(h, prev))
            .last()
            .unwrap()
            .is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.is_solvable_subalgebra(&self.whole())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_algebra().dim() == self.dim()
    }

    /// `{x : [x, b_i] = 0 for all i}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // Row (i, k), column j: coefficient of b_k in [b_j, b_i].
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    m[(i * n + k, j)] = self.constant(j, i, k).clone();
                }
            }
        }
        Subspace::span(n, &m.null_space())
    }

    /// Centralizer of a subspace `a`: `{x : [x, a] = 0}`.
    pub fn centralizer(&self, a: &Subspace) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for y in a.basis() {
            // [x, y] = -ad(y) x
            let ad = self.ad_of(y);
            rows.extend(ad.row_vectors());
        }
        if rows.is_empty() {
            return self.whole();
        }
        Subspace::span(n, &Matrix::from_rows(rows).unwrap().null_space())
    }

    pub fn killing_form(&self) -> BilinearForm {
        let n = self.dim();
        let ads = self.ad_matrices();
        let entries = par::map_range(n * n, |idx| {
            let (i, j) = (idx / n, idx % n);
            if j < i {
                return Rational::zero();
            }
            ads[i].mul(&ads[j]).unwrap().trace()
        });
        let mut gram = Matrix::from_vec(n, n, entries).unwrap();
        for i in 0..n {
            for j in 0..i {
                gram[(i, j)] = gram[(j, i)].clone();
            }
        }
        BilinearForm { gram }
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim()).all(|i| self.ad(i).trace().is_zero())
    }

    /// Semisimple iff the Killing form is nondegenerate (Cartan's criterion).
    pub fn is_semisimple(&self) -> bool {
        self.killing_form().is_nondegenerate()
    }

    /// The Lie algebra structure on a subalgebra `h`, in the basis of `h`.
    /// Basis vectors that are standard unit vectors keep their names.
    pub fn subalgebra(&self, h: &Subspace) -> Result<LieAlgebra> {
        let d = h.dim();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let v = self.bracket(&h.basis()[i], &h.basis()[j])?;
                let coords = h.coordinates(&v).ok_or(Error::NotSubalgebra)?;
                let terms: Vec<(usize, Rational)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !terms.is_empty() {
                    brackets.push(((i, j), terms));
                }
            }
        }
        let names = h
            .basis()
            .iter()
            .enumerate()
            .map(|(idx, v)| {
                let support: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
                if support.len() == 1 && v[support[0]].is_one() {
                    self.basis[support[0]].clone()
                } else {
                    format!("h{idx}")
                }
            })
            .collect();
        LieAlgebra::from_brackets(format!("{}|sub", self.name), names, brackets)
    }
}

#[cfg(test)]
mod tests;
