use crate::exact::{rref, unit_vector, Matrix, Rational, Vector};

/// A linear subspace of `Q^ambient`, stored as a reduced row echelon basis.
///
/// Because the basis is canonical, two `Subspace`s compare equal exactly when
/// they span the same space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let (basis, pivots) = rref(vectors, ambient);
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r -= c * x;
                }
            }
        }
        residual.iter().all(Rational::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve sum a_i u_i = sum b_j w_j.
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| w.iter().map(|x| -x).collect()));
        let m = Matrix::from_columns(self.ambient, &cols);
        let vectors: Vec<Vector> = m
            .null_space()
            .into_iter()
            .map(|sol| self.combine(&sol[..self.dim()]))
            .collect();
        Subspace::span(self.ambient, &vectors)
    }

    /// `sum c_i basis_i`.
    pub fn combine(&self, coeffs: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.ambient];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// Standard basis indices completing this subspace to the whole space,
    /// picked greedily in increasing index order.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut acc = self.clone();
        let mut picked = Vec::new();
        for i in 0..self.ambient {
            if acc.dim() == self.ambient {
                break;
            }
            let e = unit_vector(self.ambient, i);
            if !acc.contains(&e) {
                acc = Subspace::span(self.ambient, &[acc.basis.clone(), vec![e]].concat());
                picked.push(i);
            }
        }
        picked
    }

    /// Vectors of `self` completing `inner` (assumed contained in `self`)
    /// to a basis of `self`, chosen greedily from the echelon basis.
    pub fn complement_within(&self, inner: &Subspace) -> Vec<Vector> {
        let mut acc = inner.clone();
        let mut picked = Vec::new();
        for b in &self.basis {
            if !acc.contains(b) {
                acc = acc.sum(&Subspace::span(self.ambient, std::slice::from_ref(b)));
                picked.push(b.clone());
            }
        }
        picked
    }
}
