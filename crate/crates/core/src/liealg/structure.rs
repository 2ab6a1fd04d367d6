use serde::Serialize;

use super::{LieAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::exact::{is_zero_vector, unit_vector, Matrix, Rational, Vector};
use crate::par;
use crate::repn::Representation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub dim: usize,
    pub perfect: bool,
    pub solvable: bool,
    pub nilpotent: bool,
    pub abelian: bool,
    pub semisimple: bool,
    pub unimodular: bool,
    pub complete: bool,
    pub sympathetic: bool,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub radical_dim: usize,
    pub nilradical_dim: usize,
    pub derivation_dim: usize,
}

/// `g = levi ⊕ radical` with `levi` a semisimple subalgebra (possibly zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviDecomposition {
    pub levi: Subspace,
    pub radical: Subspace,
}

/// `g / a` in the basis given by the images of `lift_indices`, together with
/// the projection `g -> g/a` as a `(n - dim a) x n` matrix.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub projection: Matrix,
    pub lift_indices: Vec<usize>,
}

fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

impl LieAlgebra {
    /// Solvable radical: the Killing-orthogonal complement of `[g, g]`.
    pub fn radical(&self) -> Subspace {
        let n = self.dim();
        let derived = self.derived_algebra();
        if derived.is_zero() {
            return self.whole();
        }
        let k = self.killing_form();
        let rows: Vec<Vector> = derived
            .basis()
            .iter()
            .map(|y| k.gram.mul_vec(y).unwrap())
            .collect();
        Subspace::span(n, &Matrix::from_rows(rows).unwrap().null_space())
    }

    /// Largest nilpotent ideal.
    ///
    /// If the radical is already nilpotent it is the answer. Otherwise the
    /// unital associative algebra `A` generated by `ad(r)` is triangularizable,
    /// and `ad(x)` is nilpotent exactly when it lies in the trace-form radical
    /// of `A`.
    pub fn nilradical(&self) -> Subspace {
        let n = self.dim();
        let r = self.radical();
        if self.is_nilpotent_subalgebra(&r) {
            return r;
        }
        let gens: Vec<Matrix> = r.basis().iter().map(|x| self.ad_of(x)).collect();
        let algebra = associative_closure(n, &gens);
        let mats: Vec<Matrix> = algebra
            .basis()
            .iter()
            .map(|v| Matrix::from_vec(n, n, v.clone()).unwrap())
            .collect();
        let rows: Vec<Vector> = par::map_slice(&mats, |s| {
            gens.iter().map(|t| t.mul(s).unwrap().trace()).collect()
        });
        let coeffs = Matrix::from_rows(rows).unwrap().null_space();
        let vectors: Vec<Vector> = coeffs.iter().map(|c| r.combine(c)).collect();
        Subspace::span(n, &vectors)
    }

    /// Basis of `Der(g)`, each derivation as the matrix `D` with
    /// `D b_l = sum_k D[k][l] b_k`.
    pub fn derivations(&self) -> Vec<Matrix> {
        let n = self.dim();
        if n == 0 {
            return Vec::new();
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        // Unknown D[k][l] sits at column k * n + l. Each pair (i, j) yields n
        // equations D[b_i,b_j] - [D b_i, b_j] - [b_i, D b_j] = 0.
        let blocks = par::map_slice(&pairs, |&(i, j)| {
            let mut rows = vec![vec![Rational::zero(); n * n]; n];
            for (k, row) in rows.iter_mut().enumerate() {
                for l in 0..n {
                    let c = self.constant(i, j, l);
                    if !c.is_zero() {
                        row[k * n + l] += c;
                    }
                    let c = self.constant(l, j, k);
                    if !c.is_zero() {
                        row[l * n + i] -= c;
                    }
                    let c = self.constant(i, l, k);
                    if !c.is_zero() {
                        row[l * n + j] -= c;
                    }
                }
            }
            rows
        });
        let rows: Vec<Vector> = blocks.into_iter().flatten().collect();
        let basis = if rows.is_empty() {
            (0..n * n).map(|i| unit_vector(n * n, i)).collect()
        } else {
            Matrix::from_rows(rows).unwrap().null_space()
        };
        basis
            .into_iter()
            .map(|v| Matrix::from_vec(n, n, v).unwrap())
            .collect()
    }

    pub fn is_derivation(&self, d: &Matrix) -> bool {
        let n = self.dim();
        if d.rows() != n || d.cols() != n {
            return false;
        }
        let cols: Vec<Vector> = (0..n).map(|i| d.column(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(self.bracket_basis(i, j)).unwrap();
                let a = self.bracket(&cols[i], &unit_vector(n, j)).unwrap();
                let b = self.bracket(&unit_vector(n, i), &cols[j]).unwrap();
                let diff: Vector = lhs
                    .iter()
                    .zip(a.iter().zip(&b))
                    .map(|(l, (x, y))| l - x - y)
                    .collect();
                if !is_zero_vector(&diff) {
                    return false;
                }
            }
        }
        true
    }

    /// `Some(x)` with `ad(x) = d`, or `None` when `d` is outer.
    pub fn inner_preimage(&self, d: &Matrix) -> Option<Vector> {
        let n = self.dim();
        let cols: Vec<Vector> = self.ad_matrices().iter().map(flatten).collect();
        let m = Matrix::from_columns(n * n, &cols);
        m.solve(&flatten(d)).unwrap()
    }

    pub fn structure_report(&self) -> AlgebraReport {
        let n = self.dim();
        let center = self.center();
        let derived = self.derived_algebra();
        let radical = self.radical();
        let nilradical = self.nilradical();
        let derivation_dim = self.derivations().len();
        let perfect = derived.dim() == n;
        let complete = center.is_zero() && derivation_dim == n;
        AlgebraReport {
            dim: n,
            perfect,
            solvable: self.is_solvable(),
            nilpotent: self.is_nilpotent(),
            abelian: self.is_abelian(),
            semisimple: self.is_semisimple(),
            unimodular: self.is_unimodular(),
            complete,
            sympathetic: perfect && complete,
            center_dim: center.dim(),
            derived_dim: derived.dim(),
            radical_dim: radical.dim(),
            nilradical_dim: nilradical.dim(),
            derivation_dim,
        }
    }

    /// Levi decomposition by lifting a complement of the radical through the
    /// derived series of the radical, one linear solve per step.
    pub fn levi_decomposition(&self) -> Result<LeviDecomposition> {
        let n = self.dim();
        let radical = self.radical();
        if radical.dim() == n {
            return Ok(LeviDecomposition {
                levi: Subspace::zero(n),
                radical,
            });
        }
        let lift = radical.complement_indices();
        let m = lift.len();
        // Coordinates w.r.t. [complement | radical basis].
        let mut cols: Vec<Vector> = lift.iter().map(|&i| unit_vector(n, i)).collect();
        cols.extend(radical.basis().iter().cloned());
        let to_coords = Matrix::from_columns(n, &cols).inverse()?;

        // Structure constants of g / r in the lifted basis.
        let mut quotient_consts = vec![vec![Vector::new(); m]; m];
        for a in 0..m {
            for b in 0..m {
                let v = self.bracket_basis(lift[a], lift[b]);
                let c = to_coords.mul_vec(v)?;
                quotient_consts[a][b] = c[..m].to_vec();
            }
        }

        let mut section: Vec<Vector> = lift.iter().map(|&i| unit_vector(n, i)).collect();
        let series = self.derived_series_of(&radical);
        for step in series.windows(2) {
            let (outer, inner) = (&step[0], &step[1]);
            if outer.is_zero() {
                break;
            }
            let w = outer.complement_within(inner);
            let q = w.len();
            if q == 0 {
                continue;
            }
            let mut basis_cols = w.clone();
            basis_cols.extend(inner.basis().iter().cloned());
            let frame = Matrix::from_columns(n, &basis_cols);
            let project = |v: &[Rational]| -> Result<Vector> {
                let sol = frame
                    .solve(v)?
                    .ok_or_else(|| Error::Internal("Levi error term left the radical layer".into()))?;
                Ok(sol[..q].to_vec())
            };

            let pairs: Vec<(usize, usize)> = (0..m)
                .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                .collect();
            let mut rows: Vec<Vector> = Vec::new();
            let mut rhs: Vector = Vec::new();
            for &(i, j) in &pairs {
                let mut err = self.bracket(&section[i], &section[j])?;
                for (k, c) in quotient_consts[i][j].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (e, s) in err.iter_mut().zip(&section[k]) {
                        *e -= c * s;
                    }
                }
                let err = project(&err)?;
                let mut block = vec![vec![Rational::zero(); m * q]; q];
                for (s, ws) in w.iter().enumerate() {
                    let mut contrib = vec![Rational::zero(); q];
                    let add = |acc: &mut Vector, v: Vector| {
                        for (a, x) in acc.iter_mut().zip(v) {
                            *a += x;
                        }
                    };
                    // z_j = w_s contributes [y_i, w_s]; z_i = w_s contributes [w_s, y_j].
                    add(&mut contrib, project(&self.bracket(&section[i], ws)?)?);
                    for (row, c) in block.iter_mut().zip(&contrib) {
                        row[j * q + s] += c;
                    }
                    let p = project(&self.bracket(ws, &section[j])?)?;
                    for (row, c) in block.iter_mut().zip(&p) {
                        row[i * q + s] += c;
                    }
                    let ws_proj = project(ws)?;
                    for k in 0..m {
                        let a = &quotient_consts[i][j][k];
                        if a.is_zero() {
                            continue;
                        }
                        for (row, c) in block.iter_mut().zip(&ws_proj) {
                            row[k * q + s] -= a * c;
                        }
                    }
                }
                rows.extend(block);
                rhs.extend(err.into_iter().map(|e| -e));
            }
            if rows.is_empty() {
                continue;
            }
            let system = Matrix::from_rows(rows)?;
            let zeta = system
                .solve(&rhs)?
                .ok_or_else(|| Error::Internal("Levi lifting system is inconsistent".into()))?;
            for (i, y) in section.iter_mut().enumerate() {
                for (s, ws) in w.iter().enumerate() {
                    let z = &zeta[i * q + s];
                    if z.is_zero() {
                        continue;
                    }
                    for (a, b) in y.iter_mut().zip(ws) {
                        *a += z * b;
                    }
                }
            }
        }

        let levi = Subspace::span(n, &section);
        if levi.dim() != m || !self.is_subalgebra(&levi) {
            return Err(Error::Internal("Levi lift is not a subalgebra".into()));
        }
        Ok(LeviDecomposition { levi, radical })
    }

    pub fn quotient_algebra(&self, a: &Subspace) -> Result<Quotient> {
        if a.ambient() != self.dim() {
            return Err(Error::DimensionMismatch("ideal lives in another space".into()));
        }
        if !self.is_ideal(a) {
            return Err(Error::NotIdeal);
        }
        let n = self.dim();
        let lift = a.complement_indices();
        let k = lift.len();
        let mut cols: Vec<Vector> = lift.iter().map(|&i| unit_vector(n, i)).collect();
        cols.extend(a.basis().iter().cloned());
        let inv = Matrix::from_columns(n, &cols).inverse()?;
        let projection = if k == 0 {
            Matrix::zeros(0, n)
        } else {
            Matrix::from_rows(inv.row_vectors().into_iter().take(k).collect())?
        };
        let mut brackets = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let c = projection.mul_vec(self.bracket_basis(lift[i], lift[j]))?;
                let terms: Vec<(usize, Rational)> =
                    c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                if !terms.is_empty() {
                    brackets.push(((i, j), terms));
                }
            }
        }
        let names = lift.iter().map(|&i| self.basis_names()[i].clone()).collect();
        let algebra = LieAlgebra::from_brackets(format!("{}/ideal", self.name()), names, brackets)?;
        Ok(Quotient {
            algebra,
            projection,
            lift_indices: lift,
        })
    }

    /// `s ⋉ r` on `s ⊕ r`, with `s` acting on `r` through `action`, which must
    /// act by derivations of `r`.
    pub fn semidirect_product(s: &LieAlgebra, r: &LieAlgebra, action: &Representation) -> Result<LieAlgebra> {
        let (ds, dr) = (s.dim(), r.dim());
        if action.algebra_dim() != ds || action.dim() != dr {
            return Err(Error::DimensionMismatch(format!(
                "action of a {}-dim algebra on a {}-dim module, expected {ds} on {dr}",
                action.algebra_dim(),
                action.dim()
            )));
        }
        for (i, m) in action.matrices().iter().enumerate() {
            if !r.is_derivation(m) {
                return Err(Error::NotDerivation(i));
            }
        }
        let mut brackets = s.sparse_brackets();
        for i in 0..ds {
            let m = &action.matrices()[i];
            for a in 0..dr {
                let terms: Vec<(usize, Rational)> = (0..dr)
                    .filter(|&b| !m[(b, a)].is_zero())
                    .map(|b| (ds + b, m[(b, a)].clone()))
                    .collect();
                if !terms.is_empty() {
                    brackets.push(((i, ds + a), terms));
                }
            }
        }
        for ((a, b), terms) in r.sparse_brackets() {
            brackets.push((
                (ds + a, ds + b),
                terms.into_iter().map(|(k, c)| (ds + k, c)).collect(),
            ));
        }
        let mut names: Vec<String> = s.basis_names().to_vec();
        for name in r.basis_names() {
            let mut candidate = name.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        LieAlgebra::new_validated(format!("{}⋉{}", s.name(), r.name()), names, brackets)
    }

    /// Transports the structure to the basis given by the columns of `p`.
    pub fn change_of_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "change of basis must be {n}x{n}"
            )));
        }
        let inv = p.inverse()?;
        let cols: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let w = self.bracket(&cols[i], &cols[j])?;
                let c = inv.mul_vec(&w)?;
                let terms: Vec<(usize, Rational)> =
                    c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                if !terms.is_empty() {
                    brackets.push(((i, j), terms));
                }
            }
        }
        let names = (0..n).map(|i| format!("{}'", self.basis_names()[i])).collect();
        let names = if p == &Matrix::identity(n) {
            self.basis_names().to_vec()
        } else {
            names
        };
        LieAlgebra::from_brackets(self.name().to_string(), names, brackets)
    }
}

/// Span of all words in `gens` (including the empty word), as flattened
/// `n x n` matrices.
fn associative_closure(n: usize, gens: &[Matrix]) -> Subspace {
    let mut span = Subspace::span(n * n, &[flatten(&Matrix::identity(n))]);
    let mut frontier: Vec<Matrix> = vec![Matrix::identity(n)];
    while !frontier.is_empty() {
        let products: Vec<Vec<Matrix>> = par::map_slice(&frontier, |a| {
            gens.iter().map(|g| g.mul(a).unwrap()).collect()
        });
        let mut next = Vec::new();
        for p in products.into_iter().flatten() {
            let v = flatten(&p);
            if !span.contains(&v) {
                span = span.sum(&Subspace::span(n * n, &[v]));
                next.push(p);
            }
        }
        frontier = next;
    }
    span
}
