//! Chevalley–Eilenberg cochain and chain complexes with module coefficients,
//! Betti numbers and representatives, induced actions on the cohomology of
//! an ideal, invariant subcomplexes and the `E_2` page dimensions of the
//! Hochschild–Serre spectral sequence.
//!
//! Cochains: degree `p` is `Hom(Λ^p g, M)` with coordinate `J * m + a` for the
//! `a`-th component of `φ(b_J)`, where `J` runs over `p`-subsets of the basis
//! in lexicographic order. The differential is
//!
//! ```text
//! (dφ)(x_0..x_p) = Σ_i (-1)^i x_i·φ(..x̂_i..) + Σ_{i<j} (-1)^{i+j} φ([x_i,x_j], ..x̂_i..x̂_j..)
//! ```
//!
//! Chains: degree `p` is `Λ^p g ⊗ M` with the boundary
//!
//! ```text
//! ∂(x_1..x_p ⊗ v) = Σ_i (-1)^i (..x̂_i..) ⊗ x_i·v + Σ_{i<j} (-1)^{i+j} [x_i,x_j] ∧ (..x̂_i..x̂_j..) ⊗ v
//! ```

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, SparseMatrix, Vector};
use crate::liealg::{LieAlgebra, Quotient, Subspace};
use crate::par;
use crate::repn::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Cohomological,
    Homological,
}

/// A bounded complex. `maps[p]` joins degrees `p` and `p + 1`: it is
/// `C^p -> C^{p+1}` for cochains and `C_{p+1} -> C_p` for chains.
///
/// When `truncated` is set the complex continues past the last degree, so the
/// map leaving (cochains) or entering (chains) the top degree is missing and
/// the top Betti number is only an upper bound.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    orientation: Orientation,
    dims: Vec<usize>,
    maps: Vec<SparseMatrix>,
    truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyResult {
    pub betti: Vec<usize>,
    /// Per degree, cocycles (cycles) spanning a complement of the
    /// coboundaries (boundaries).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<Vec<Vector>>>,
    /// The top degree is an upper bound, not an exact value.
    pub truncated_top: bool,
}

impl ChainComplex {
    pub fn new(orientation: Orientation, dims: Vec<usize>, maps: Vec<SparseMatrix>, truncated: bool) -> Result<Self> {
        if dims.is_empty() || maps.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} maps for {} degrees",
                maps.len(),
                dims.len()
            )));
        }
        for (p, d) in maps.iter().enumerate() {
            let (rows, cols) = match orientation {
                Orientation::Cohomological => (dims[p + 1], dims[p]),
                Orientation::Homological => (dims[p], dims[p + 1]),
            };
            if d.rows() != rows || d.cols() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "map {p} is {}x{}, expected {rows}x{cols}",
                    d.rows(),
                    d.cols()
                )));
            }
        }
        Ok(ChainComplex {
            orientation,
            dims,
            maps,
            truncated,
        })
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[SparseMatrix] {
        &self.maps
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Degrees `p` where the composite through degree `p + 1` is nonzero.
    pub fn square_zero_failures(&self) -> Vec<usize> {
        let pairs: Vec<usize> = (0..self.maps.len().saturating_sub(1)).collect();
        par::map_slice(&pairs, |&p| {
            let composite = match self.orientation {
                Orientation::Cohomological => self.maps[p + 1].mul(&self.maps[p]),
                Orientation::Homological => self.maps[p].mul(&self.maps[p + 1]),
            };
            (!composite.expect("composable").is_zero()).then_some(p)
        })
        .into_iter()
        .flatten()
        .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.dims)
    }

    fn ranks(&self) -> Vec<usize> {
        par::map_slice(&self.maps, SparseMatrix::rank)
    }

    pub fn betti(&self) -> Vec<usize> {
        let ranks = self.ranks();
        (0..self.dims.len())
            .map(|p| {
                let before = if p > 0 { ranks[p - 1] } else { 0 };
                let after = ranks.get(p).copied().unwrap_or(0);
                self.dims[p] - before - after
            })
            .collect()
    }

    /// Betti numbers, optionally with representatives chosen as kernel basis
    /// vectors greedily completing the image of the incoming map.
    pub fn cohomology(&self, with_representatives: bool) -> CohomologyResult {
        let betti = self.betti();
        let representatives = with_representatives.then(|| {
            let degrees: Vec<usize> = (0..self.dims.len()).collect();
            par::map_slice(&degrees, |&p| {
                let (outgoing, incoming) = self.adjacent(p);
                let dim = self.dims[p];
                let kernel = match outgoing {
                    Some(d) => Subspace::span(dim, &d.null_space()),
                    None => Subspace::full(dim),
                };
                let image = match incoming {
                    Some(d) => Subspace::span(dim, &d.column_vectors()),
                    None => Subspace::zero(dim),
                };
                kernel.complement_within(&image)
            })
        });
        CohomologyResult {
            betti,
            representatives,
            truncated_top: self.truncated,
        }
    }

    /// `(map leaving degree p, map arriving in degree p)`.
    fn adjacent(&self, p: usize) -> (Option<&SparseMatrix>, Option<&SparseMatrix>) {
        let upper = self.maps.get(p);
        let lower = p.checked_sub(1).map(|q| &self.maps[q]);
        match self.orientation {
            Orientation::Cohomological => (upper, lower),
            Orientation::Homological => (lower, upper),
        }
    }
}

pub(crate) fn alternating_sum(xs: &[usize]) -> i64 {
    xs.iter()
        .enumerate()
        .map(|(p, &d)| if p % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Sorts `v` and returns the sign of the sorting permutation, or `None` when
/// `v` has a repeated entry (the wedge vanishes).
pub(crate) fn sort_sign(v: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some(sign)
}

/// The `p`-subsets of `0..n` in lexicographic order, with reverse lookup.
pub(crate) struct Subsets {
    pub list: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Subsets {
    pub fn new(n: usize, p: usize) -> Self {
        let mut list = Vec::with_capacity(binomial(n, p));
        let mut current = Vec::with_capacity(p);
        fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == p {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                if n - i < p - cur.len() {
                    break;
                }
                cur.push(i);
                rec(i + 1, n, p, cur, out);
                cur.pop();
            }
        }
        rec(0, n, p, &mut current, &mut list);
        let index = list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Subsets { list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn position(&self, sorted: &[usize]) -> usize {
        self.index[sorted]
    }
}

fn check_module(g: &LieAlgebra, m: &Representation) -> Result<()> {
    if m.algebra_dim() != g.dim() {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

/// `d: C^p(g, M) -> C^{p+1}(g, M)`.
fn ce_coboundary(g: &LieAlgebra, m: &Representation, p: usize, src: &Subsets, dst: &Subsets) -> SparseMatrix {
    let md = m.dim();
    let rows = par::map_range(dst.len() * md, |row| {
        let (k_idx, b) = (row / md, row % md);
        let k = &dst.list[k_idx];
        let mut out = Vec::new();
        for i in 0..=p {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let mut j: Vec<usize> = k.clone();
            j.remove(i);
            let col = src.position(&j) * md;
            let rho = m.matrix(k[i]);
            for a in 0..md {
                let c = &rho[(b, a)];
                if !c.is_zero() {
                    out.push((col + a, c * &Rational::from_integer(sign)));
                }
            }
        }
        for i in 0..=p {
            for jj in i + 1..=p {
                let sign = if (i + jj) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = k
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i && t != jj)
                    .map(|(_, &x)| x)
                    .collect();
                for (l, c) in g.bracket_basis(k[i], k[jj]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut wedge = Vec::with_capacity(p);
                    wedge.push(l);
                    wedge.extend_from_slice(&rest);
                    if let Some(s) = sort_sign(&mut wedge) {
                        out.push((src.position(&wedge) * md + b, c * &Rational::from_integer(sign * s)));
                    }
                }
            }
        }
        out
    });
    SparseMatrix::new(dst.len() * md, src.len() * md, rows)
}

/// `∂: C_p(g, M) -> C_{p-1}(g, M)` for `p >= 1`.
fn ce_boundary(g: &LieAlgebra, m: &Representation, p: usize, src: &Subsets, dst: &Subsets) -> SparseMatrix {
    let md = m.dim();
    let cols = par::map_range(src.len() * md, |col| {
        let (j_idx, a) = (col / md, col % md);
        let j = &src.list[j_idx];
        let mut out = Vec::new();
        for i in 0..p {
            // 1-based position i + 1
            let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
            let mut k = j.clone();
            k.remove(i);
            let row = dst.position(&k) * md;
            let rho = m.matrix(j[i]);
            for b in 0..md {
                let c = &rho[(b, a)];
                if !c.is_zero() {
                    out.push((row + b, c * &Rational::from_integer(sign)));
                }
            }
        }
        for i in 0..p {
            for kk in i + 1..p {
                let sign = if (i + kk) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = j
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i && t != kk)
                    .map(|(_, &x)| x)
                    .collect();
                for (l, c) in g.bracket_basis(j[i], j[kk]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut wedge = Vec::with_capacity(p - 1);
                    wedge.push(l);
                    wedge.extend_from_slice(&rest);
                    if let Some(s) = sort_sign(&mut wedge) {
                        out.push((dst.position(&wedge) * md + a, c * &Rational::from_integer(sign * s)));
                    }
                }
            }
        }
        out
    });
    SparseMatrix::new(src.len() * md, dst.len() * md, cols).transpose()
}

pub fn ce_cochain_complex(g: &LieAlgebra, m: &Representation) -> Result<ChainComplex> {
    check_module(g, m)?;
    let n = g.dim();
    let subsets: Vec<Subsets> = (0..=n).map(|p| Subsets::new(n, p)).collect();
    let dims = subsets.iter().map(|s| s.len() * m.dim()).collect();
    let maps = (0..n)
        .map(|p| ce_coboundary(g, m, p, &subsets[p], &subsets[p + 1]))
        .collect();
    ChainComplex::new(Orientation::Cohomological, dims, maps, false)
}

pub fn ce_chain_complex(g: &LieAlgebra, m: &Representation) -> Result<ChainComplex> {
    check_module(g, m)?;
    let n = g.dim();
    let subsets: Vec<Subsets> = (0..=n).map(|p| Subsets::new(n, p)).collect();
    let dims = subsets.iter().map(|s| s.len() * m.dim()).collect();
    let maps = (0..n)
        .map(|p| ce_boundary(g, m, p + 1, &subsets[p + 1], &subsets[p]))
        .collect();
    ChainComplex::new(Orientation::Homological, dims, maps, false)
}

pub fn ce_cohomology(g: &LieAlgebra, m: &Representation, with_representatives: bool) -> Result<CohomologyResult> {
    Ok(ce_cochain_complex(g, m)?.cohomology(with_representatives))
}

pub fn ce_homology(g: &LieAlgebra, m: &Representation) -> Result<CohomologyResult> {
    Ok(ce_chain_complex(g, m)?.cohomology(false))
}

/// Action on `C^q(a, M)` of a derivation `d` of `a` (`k x k`) together with a
/// compatible endomorphism `sigma` of `M`:
/// `(x·φ)(y_1..y_q) = σ φ(y_1..y_q) - Σ_i φ(y_1..D y_i..y_q)`.
fn lie_derivative(k: usize, q: usize, d: &Matrix, sigma: &Matrix, subsets: &Subsets) -> SparseMatrix {
    let md = sigma.rows();
    let rows = par::map_range(subsets.len() * md, |row| {
        let (k_idx, b) = (row / md, row % md);
        let kset = &subsets.list[k_idx];
        let mut out = Vec::new();
        for a in 0..md {
            let c = &sigma[(b, a)];
            if !c.is_zero() {
                out.push((k_idx * md + a, c.clone()));
            }
        }
        for i in 0..q {
            for l in 0..k {
                let c = &d[(l, kset[i])];
                if c.is_zero() {
                    continue;
                }
                let mut replaced = kset.clone();
                replaced[i] = l;
                if let Some(s) = sort_sign(&mut replaced) {
                    out.push((subsets.position(&replaced) * md + b, -(c * &Rational::from_integer(s))));
                }
            }
        }
        out
    });
    SparseMatrix::new(subsets.len() * md, subsets.len() * md, rows)
}

/// The induced `g/a`-modules `H^q(a, M)`, `q = 0..dim a`.
#[derive(Clone, Debug)]
pub struct InducedAction {
    pub quotient: Quotient,
    pub ideal_algebra: LieAlgebra,
    pub cohomology: CohomologyResult,
    /// `modules[q]` is `H^q(a, M)` in the basis of `cohomology.representatives[q]`.
    pub modules: Vec<Representation>,
}

/// Matrix of `ad_g(x)` restricted to the ideal `a`, in the echelon basis of `a`.
fn ad_on_ideal(g: &LieAlgebra, a: &Subspace, x: &[Rational]) -> Result<Matrix> {
    let k = a.dim();
    let mut m = Matrix::zeros(k, k);
    for (j, y) in a.basis().iter().enumerate() {
        let c = a.coordinates(&g.bracket(x, y)?).ok_or(Error::NotIdeal)?;
        for (i, v) in c.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    Ok(m)
}

/// Expresses each vector of `targets` in the basis `reps` modulo the span of
/// `boundaries`. Fails if some target is outside `span(reps) + span(boundaries)`.
fn coordinates_mod(dim: usize, reps: &[Vector], boundaries: &Subspace, targets: &[Vector]) -> Result<Matrix> {
    let mut cols: Vec<Vector> = reps.to_vec();
    cols.extend(boundaries.basis().iter().cloned());
    let frame = Matrix::from_columns(dim, &cols);
    let mut out = Matrix::zeros(reps.len(), targets.len());
    for (j, t) in targets.iter().enumerate() {
        let x = frame
            .solve(t)?
            .ok_or_else(|| Error::Internal("induced action leaves the cocycles".into()))?;
        for i in 0..reps.len() {
            out[(i, j)] = x[i].clone();
        }
    }
    Ok(out)
}

pub fn induced_action_on_cohomology(g: &LieAlgebra, a: &Subspace, m: &Representation) -> Result<InducedAction> {
    check_module(g, m)?;
    let quotient = g.quotient_algebra(a)?;
    let ideal_algebra = g.subalgebra(a)?;
    let restricted = m.restrict(g, a)?;
    let complex = ce_cochain_complex(&ideal_algebra, &restricted)?;
    let cohomology = complex.cohomology(true);
    let reps = cohomology.representatives.as_ref().unwrap();
    let k = a.dim();
    let n = g.dim();
    let acting: Vec<Vector> = quotient
        .lift_indices
        .iter()
        .map(|&i| crate::exact::unit_vector(n, i))
        .collect();
    let ideal_elems: Vec<Vector> = a.basis().to_vec();
    let mut modules = Vec::with_capacity(k + 1);
    for q in 0..=k {
        let subsets = Subsets::new(k, q);
        let dim = complex.dims()[q];
        let boundaries = match q.checked_sub(1) {
            Some(prev) => Subspace::span(dim, &complex.maps()[prev].column_vectors()),
            None => Subspace::zero(dim),
        };
        let derivative = |x: &Vector| -> Result<SparseMatrix> {
            let d = ad_on_ideal(g, a, x)?;
            Ok(lie_derivative(k, q, &d, &m.act(x), &subsets))
        };
        // Coboundaries go to coboundaries, and the ideal itself acts by zero.
        for x in acting.iter().chain(&ideal_elems) {
            let t = derivative(x)?;
            for b in boundaries.basis() {
                if !boundaries.contains(&t.mul_vec(b)?) {
                    return Err(Error::Internal("induced action does not preserve coboundaries".into()));
                }
            }
        }
        for y in &ideal_elems {
            let t = derivative(y)?;
            let images: Vec<Vector> = reps[q].iter().map(|z| t.mul_vec(z)).collect::<Result<_>>()?;
            if !coordinates_mod(dim, &reps[q], &boundaries, &images)?.is_zero() {
                return Err(Error::Internal("ideal acts nontrivially on its cohomology".into()));
            }
        }
        let mats = acting
            .iter()
            .map(|x| {
                let t = derivative(x)?;
                let images: Vec<Vector> = reps[q].iter().map(|z| t.mul_vec(z)).collect::<Result<_>>()?;
                coordinates_mod(dim, &reps[q], &boundaries, &images)
            })
            .collect::<Result<Vec<_>>>()?;
        modules.push(Representation::new(reps[q].len(), mats)?);
    }
    Ok(InducedAction {
        quotient,
        ideal_algebra,
        cohomology,
        modules,
    })
}

/// The subcomplex of `s`-invariant cochains in `C(r, M)`, in coordinates of
/// the echelon bases of the invariant subspaces.
///
/// `s_on_r` gives the action of `s` on `r` by derivations, `s_on_m` its action
/// on `M`; they must satisfy `σ(x) ρ(y) - ρ(y) σ(x) = ρ(D_x y)`.
pub fn invariant_subcomplex(
    r: &LieAlgebra,
    m: &Representation,
    s_on_r: &Representation,
    s_on_m: &Representation,
) -> Result<ChainComplex> {
    check_module(r, m)?;
    if s_on_r.algebra_dim() != s_on_m.algebra_dim() || s_on_r.dim() != r.dim() || s_on_m.dim() != m.dim() {
        return Err(Error::DimensionMismatch("acting algebra and modules disagree".into()));
    }
    for (i, d) in s_on_r.matrices().iter().enumerate() {
        if !r.is_derivation(d) {
            return Err(Error::NotDerivation(i));
        }
        let sigma = s_on_m.matrix(i);
        for y in 0..r.dim() {
            let lhs = sigma.commutator(m.matrix(y))?;
            let rhs = m.act(&d.column(y));
            if lhs != rhs {
                return Err(Error::Precondition(format!(
                    "action of s-basis element {i} on M is incompatible with its action on r"
                )));
            }
        }
    }
    let complex = ce_cochain_complex(r, m)?;
    let k = r.dim();
    let invariant: Vec<Subspace> = par::map_range(k + 1, |q| {
        let subsets = Subsets::new(k, q);
        let dim = complex.dims()[q];
        let mut rows = Vec::new();
        for (d, sigma) in s_on_r.matrices().iter().zip(s_on_m.matrices()) {
            let t = lie_derivative(k, q, d, sigma, &subsets);
            rows.extend((0..t.rows()).map(|i| t.row(i).to_vec()));
        }
        if rows.is_empty() {
            return Subspace::full(dim);
        }
        Subspace::span(dim, &SparseMatrix::new(rows.len(), dim, rows).null_space())
    });
    let maps = par::map_range(k, |q| -> Result<SparseMatrix> {
        let cols = invariant[q]
            .basis()
            .iter()
            .map(|w| {
                let image = complex.maps()[q].mul_vec(w)?;
                let coords = invariant[q + 1]
                    .coordinates(&image)
                    .ok_or_else(|| Error::Internal("differential leaves the invariant cochains".into()))?;
                Ok(coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::new(invariant[q].dim(), invariant[q + 1].dim(), cols).transpose())
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    ChainComplex::new(
        Orientation::Cohomological,
        invariant.iter().map(Subspace::dim).collect(),
        maps,
        false,
    )
}

/// Cohomology of [`invariant_subcomplex`]. With `s` semisimple this is
/// `H(r, M)^s`.
pub fn invariant_subcomplex_cohomology(
    r: &LieAlgebra,
    m: &Representation,
    s_on_r: &Representation,
    s_on_m: &Representation,
) -> Result<CohomologyResult> {
    Ok(invariant_subcomplex(r, m, s_on_r, s_on_m)?.cohomology(false))
}

/// `E_2^{p,q} = dim H^p(g/a, H^q(a, M))`, indexed `[q][p]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E2Page {
    pub rows: Vec<Vec<usize>>,
}

impl E2Page {
    pub fn get(&self, p: usize, q: usize) -> usize {
        self.rows[q][p]
    }

    /// `Σ_{p+q=k} E_2^{p,q}` for each total degree `k`.
    pub fn total_dims(&self) -> Vec<usize> {
        let qmax = self.rows.len();
        let pmax = self.rows.first().map_or(0, Vec::len);
        let mut out = vec![0; (pmax + qmax).saturating_sub(1)];
        for (q, row) in self.rows.iter().enumerate() {
            for (p, &v) in row.iter().enumerate() {
                out[p + q] += v;
            }
        }
        out
    }
}

pub fn e2_page(g: &LieAlgebra, a: &Subspace, m: &Representation) -> Result<E2Page> {
    let induced = induced_action_on_cohomology(g, a, m)?;
    let rows = induced
        .modules
        .iter()
        .map(|module| Ok(ce_cohomology(&induced.quotient.algebra, module, false)?.betti))
        .collect::<Result<Vec<_>>>()?;
    Ok(E2Page { rows })
}

/// A Levi splitting `g = s ⋉ r` packaged for Hochschild–Serre comparisons:
/// `s` and `r` as abstract algebras, `M` restricted to `r`, and the actions of
/// `s` on `r` and on `M`.
#[derive(Clone, Debug)]
pub struct LeviSplitting {
    pub levi: LieAlgebra,
    pub radical: LieAlgebra,
    pub module_on_radical: Representation,
    pub levi_on_radical: Representation,
    pub levi_on_module: Representation,
}

pub fn levi_splitting(g: &LieAlgebra, m: &Representation) -> Result<LeviSplitting> {
    check_module(g, m)?;
    let decomposition = g.levi_decomposition()?;
    let (s, r) = (&decomposition.levi, &decomposition.radical);
    let levi = g.subalgebra(s)?;
    let radical = g.subalgebra(r)?;
    let module_on_radical = m.restrict(g, r)?;
    let levi_on_radical = Representation::new(
        r.dim(),
        s.basis()
            .iter()
            .map(|x| ad_on_ideal(g, r, x))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let levi_on_module = m.restrict(g, s)?;
    Ok(LeviSplitting {
        levi,
        radical,
        module_on_radical,
        levi_on_radical,
        levi_on_module,
    })
}
