//! Leibniz cochain and chain complexes of a Lie algebra with coefficients in
//! a symmetric bimodule (right action `m·x = -x·m`).
//!
//! Degree `p` cochains are `Hom(g^{⊗p}, M)`, coordinate `t * m + a` where `t`
//! is the tuple `(x_1..x_p)` read as a base-`n` number. With the symmetric
//! right action folded in, the differential is
//!
//! ```text
//! (dφ)(x_1..x_{p+1}) = Σ_{i=1}^{p+1} (-1)^{i+1} x_i·φ(..x̂_i..)
//!                    + Σ_{i<j} (-1)^i φ(..x̂_i.., [x_i,x_j] in slot j, ..)
//! ```
//!
//! Chains are `M ⊗ g^{⊗p}` with
//!
//! ```text
//! ∂(m, x_1..x_p) = Σ_j (-1)^{j+1} (x_j·m, ..x̂_j..)
//!                + Σ_{i<j} (-1)^j (m, .., [x_i,x_j] in slot i, .., x̂_j, ..)
//! ```
//!
//! Neither complex stops at `dim g`, so both are cut at `max_degree` and the
//! top degree is reported as an upper bound.

use crate::cechain::{ChainComplex, CohomologyResult, Orientation};
use crate::error::{Error, Result};
use crate::exact::{Rational, SparseMatrix};
use crate::liealg::LieAlgebra;
use crate::par;
use crate::repn::Representation;

pub const DEFAULT_MAX_DEGREE: usize = 4;
pub const DEFAULT_RESOURCE_CAP: u128 = 2_000_000;

#[derive(Clone, Debug)]
pub struct LeibnizComplexSpec<'a> {
    pub algebra: &'a LieAlgebra,
    pub module: &'a Representation,
    pub max_degree: usize,
    /// Largest `rows * cols` allowed for any single differential.
    pub resource_cap: u128,
}

impl<'a> LeibnizComplexSpec<'a> {
    pub fn new(algebra: &'a LieAlgebra, module: &'a Representation) -> Self {
        LeibnizComplexSpec {
            algebra,
            module,
            max_degree: DEFAULT_MAX_DEGREE,
            resource_cap: DEFAULT_RESOURCE_CAP,
        }
    }

    pub fn with_max_degree(mut self, max_degree: usize) -> Self {
        self.max_degree = max_degree;
        self
    }

    pub fn with_cap(mut self, cap: u128) -> Self {
        self.resource_cap = cap;
        self
    }

    /// `n^p * m`.
    pub fn degree_dim(&self, p: usize) -> u128 {
        (self.algebra.dim() as u128).pow(p as u32) * self.module.dim() as u128
    }

    /// Entry count of the differential between degrees `p` and `p + 1`.
    pub fn differential_entries(&self, p: usize) -> u128 {
        self.degree_dim(p).saturating_mul(self.degree_dim(p + 1))
    }

    /// Fails with `CapExceeded` naming the first degree whose incoming
    /// differential is over the cap.
    pub fn check(&self) -> Result<()> {
        if self.max_degree == 0 {
            return Err(Error::InvalidParams {
                name: "max_degree".into(),
                reason: "must be at least 1".into(),
            });
        }
        if self.module.algebra_dim() != self.algebra.dim() {
            return Err(Error::AlgebraMismatch);
        }
        for p in 0..self.max_degree {
            let entries = self.differential_entries(p);
            if entries > self.resource_cap {
                return Err(Error::CapExceeded {
                    degree: p + 1,
                    entries,
                    cap: self.resource_cap,
                });
            }
        }
        Ok(())
    }

    /// Largest `max_degree <= wanted` that fits under the cap, if any.
    pub fn largest_feasible_degree(&self, wanted: usize) -> Option<usize> {
        (1..=wanted)
            .rev()
            .find(|&d| (0..d).all(|p| self.differential_entries(p) <= self.resource_cap))
    }
}

fn decode(mut t: usize, n: usize, p: usize) -> Vec<usize> {
    let mut out = vec![0; p];
    for slot in out.iter_mut().rev() {
        *slot = t % n;
        t /= n;
    }
    out
}

fn encode(digits: impl IntoIterator<Item = usize>, n: usize) -> usize {
    digits.into_iter().fold(0, |acc, d| acc * n + d)
}

fn sign(k: usize) -> Rational {
    Rational::from_integer(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// `d: C^p -> C^{p+1}`.
fn coboundary(g: &LieAlgebra, m: &Representation, p: usize) -> SparseMatrix {
    let n = g.dim();
    let md = m.dim();
    let src = n.pow(p as u32);
    let dst = n.pow(p as u32 + 1);
    let rows = par::map_range(dst * md, |row| {
        let (t, b) = (row / md, row % md);
        let x = decode(t, n, p + 1);
        let mut out = Vec::new();
        for i in 0..=p {
            // 1-based position i + 1
            let s = sign(i);
            let col = encode(x.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v), n) * md;
            let rho = m.matrix(x[i]);
            for a in 0..md {
                let c = &rho[(b, a)];
                if !c.is_zero() {
                    out.push((col + a, c * &s));
                }
            }
        }
        for i in 0..=p {
            // (-1)^{i+1} with i 1-based
            let s = sign(i + 1);
            for j in i + 1..=p {
                for (l, c) in g.bracket_basis(x[i], x[j]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let digits = x
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != i)
                        .map(|(k, &v)| if k == j { l } else { v });
                    out.push((encode(digits, n) * md + b, c * &s));
                }
            }
        }
        out
    });
    SparseMatrix::new(dst * md, src * md, rows)
}

/// `∂: C_{p+1} -> C_p`.
fn boundary(g: &LieAlgebra, m: &Representation, p: usize) -> SparseMatrix {
    let n = g.dim();
    let md = m.dim();
    let src = n.pow(p as u32 + 1);
    let dst = n.pow(p as u32);
    let cols = par::map_range(src * md, |col| {
        let (t, a) = (col / md, col % md);
        let x = decode(t, n, p + 1);
        let mut out = Vec::new();
        for j in 0..=p {
            // (-1)^{j+1} with j 1-based
            let s = sign(j);
            let row = encode(x.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v), n) * md;
            let rho = m.matrix(x[j]);
            for b in 0..md {
                let c = &rho[(b, a)];
                if !c.is_zero() {
                    out.push((row + b, c * &s));
                }
            }
        }
        for j in 0..=p {
            let s = sign(j + 1);
            for i in 0..j {
                for (l, c) in g.bracket_basis(x[i], x[j]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let digits = x
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(k, &v)| if k == i { l } else { v });
                    out.push((encode(digits, n) * md + a, c * &s));
                }
            }
        }
        out
    });
    SparseMatrix::new(src * md, dst * md, cols).transpose()
}

fn dims(spec: &LeibnizComplexSpec) -> Vec<usize> {
    (0..=spec.max_degree).map(|p| spec.degree_dim(p) as usize).collect()
}

pub fn leibniz_cochain_complex(spec: &LeibnizComplexSpec) -> Result<ChainComplex> {
    spec.check()?;
    let maps = (0..spec.max_degree)
        .map(|p| coboundary(spec.algebra, spec.module, p))
        .collect();
    ChainComplex::new(Orientation::Cohomological, dims(spec), maps, true)
}

pub fn leibniz_chain_complex(spec: &LeibnizComplexSpec) -> Result<ChainComplex> {
    spec.check()?;
    let maps = (0..spec.max_degree)
        .map(|p| boundary(spec.algebra, spec.module, p))
        .collect();
    ChainComplex::new(Orientation::Homological, dims(spec), maps, true)
}

/// `HL^p` for `p = 0..=max_degree`; the last entry is an upper bound.
pub fn leibniz_cohomology(spec: &LeibnizComplexSpec) -> Result<CohomologyResult> {
    Ok(leibniz_cochain_complex(spec)?.cohomology(false))
}

/// `HL_p` for `p = 0..=max_degree`; the last entry is an upper bound.
pub fn leibniz_homology(spec: &LeibnizComplexSpec) -> Result<CohomologyResult> {
    Ok(leibniz_chain_complex(spec)?.cohomology(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::cechain::ce_cohomology;

    fn trivial(g: &LieAlgebra) -> Representation {
        Representation::trivial(g, 1)
    }

    /// Coboundary evaluated on tuples by a direct reading of the formula with
    /// an explicit right action.
    fn coboundary_oracle(g: &LieAlgebra, m: &Representation, p: usize) -> crate::exact::Matrix {
        use crate::exact::Matrix;
        let n = g.dim();
        let md = m.dim();
        let tuples = |k: usize| -> Vec<Vec<usize>> { (0..n.pow(k as u32)).map(|t| decode(t, n, k)).collect() };
        let src = tuples(p);
        let dst = tuples(p + 1);
        let mut out = Matrix::zeros(dst.len() * md, src.len() * md);
        for (ci, s) in src.iter().enumerate() {
            for a in 0..md {
                let phi = |args: &[usize]| -> Vec<Rational> {
                    let mut v = vec![Rational::zero(); md];
                    if args == s.as_slice() {
                        v[a] = Rational::one();
                    }
                    v
                };
                for (ri, x) in dst.iter().enumerate() {
                    let mut val = vec![Rational::zero(); md];
                    for i in 0..p {
                        let rest: Vec<usize> = (0..=p).filter(|&k| k != i).map(|k| x[k]).collect();
                        let w = m.matrix(x[i]).mul_vec(&phi(&rest)).unwrap();
                        for (o, y) in val.iter_mut().zip(w) {
                            *o += if i % 2 == 0 { y } else { -y };
                        }
                    }
                    // (-1)^{p+1} φ(x_1..x_p)·x_{p+1}, right action = -left action
                    let right: Vec<Rational> = m
                        .matrix(x[p])
                        .mul_vec(&phi(&x[..p]))
                        .unwrap()
                        .into_iter()
                        .map(|y| -y)
                        .collect();
                    for (o, y) in val.iter_mut().zip(right) {
                        *o += if (p + 1).is_multiple_of(2) { y } else { -y };
                    }
                    for i in 0..=p {
                        for j in i + 1..=p {
                            let br = g.bracket_basis(x[i], x[j]);
                            for (l, c) in br.iter().enumerate() {
                                let args: Vec<usize> = (0..=p)
                                    .filter(|&k| k != i)
                                    .map(|k| if k == j { l } else { x[k] })
                                    .collect();
                                for (o, y) in val.iter_mut().zip(phi(&args)) {
                                    let t = c * &y;
                                    *o += if (i + 1) % 2 == 0 { t } else { -t };
                                }
                            }
                        }
                    }
                    for b in 0..md {
                        out[(ri * md + b, ci * md + a)] = val[b].clone();
                    }
                }
            }
        }
        out
    }

    #[test]
    fn abelian_has_zero_differentials() {
        let a = LieAlgebra::abelian(3);
        let m = trivial(&a);
        let spec = LeibnizComplexSpec::new(&a, &m).with_max_degree(3);
        let c = leibniz_cochain_complex(&spec).unwrap();
        assert!(c.maps().iter().all(SparseMatrix::is_zero));
        assert_eq!(leibniz_cohomology(&spec).unwrap().betti, vec![1, 3, 9, 27]);
        assert_eq!(leibniz_homology(&spec).unwrap().betti, vec![1, 3, 9, 27]);
    }

    #[test]
    fn sl2_trivial() {
        let g = catalog::sl2();
        let m = trivial(&g);
        let spec = LeibnizComplexSpec::new(&g, &m);
        let c = leibniz_cochain_complex(&spec).unwrap();
        assert_eq!(c.dims(), &[1, 3, 9, 27, 81]);
        assert!(c.square_zero_failures().is_empty());
        let res = leibniz_cohomology(&spec).unwrap();
        assert!(res.truncated_top);
        assert_eq!(&res.betti[..4], &[1, 0, 0, 0]);
        assert_eq!(&leibniz_homology(&spec).unwrap().betti[..4], &[1, 0, 0, 0]);
    }

    #[test]
    fn differential_matches_oracle() {
        for name in ["sl2", "r2", "heisenberg(3)"] {
            let g = catalog::make_named(name).unwrap().algebra;
            for m in [trivial(&g), Representation::adjoint(&g)] {
                let spec = LeibnizComplexSpec::new(&g, &m).with_max_degree(3);
                let c = leibniz_cochain_complex(&spec).unwrap();
                for p in 0..3 {
                    assert_eq!(c.maps()[p].to_dense(), coboundary_oracle(&g, &m, p), "{name} {p}");
                }
            }
        }
    }

    #[test]
    fn square_zero_and_degree_one_agreement() {
        for entry in catalog::standard_entries() {
            let g = &entry.algebra;
            for m in [trivial(g), Representation::adjoint(g)] {
                let spec = LeibnizComplexSpec::new(g, &m).with_max_degree(3);
                let Some(top) = spec.largest_feasible_degree(3) else { continue };
                let spec = spec.with_max_degree(top);
                let co = leibniz_cochain_complex(&spec).unwrap();
                let ch = leibniz_chain_complex(&spec).unwrap();
                assert!(co.square_zero_failures().is_empty(), "{}", entry.name);
                assert!(ch.square_zero_failures().is_empty(), "{}", entry.name);
                if top >= 2 {
                    let hl = co.cohomology(false).betti;
                    let h = ce_cohomology(g, &m, false).unwrap().betti;
                    assert_eq!(hl[..2], h[..2], "{}", entry.name);
                }
            }
        }
    }

    #[test]
    fn heisenberg_degree_one() {
        let g = catalog::heisenberg(3);
        let m = trivial(&g);
        let spec = LeibnizComplexSpec::new(&g, &m).with_max_degree(2);
        assert_eq!(leibniz_cohomology(&spec).unwrap().betti[1], 2);
    }

    #[test]
    fn duality_with_dual_module() {
        for name in ["sl2", "r2", "heisenberg(3)", "gln(2)", "sl2_semidirect_irrep(1)"] {
            let g = catalog::make_named(name).unwrap().algebra;
            let sl2 = catalog::sl2();
            let mut modules = vec![trivial(&g), Representation::adjoint(&g)];
            if name == "sl2" {
                modules.push(catalog::sl2_irrep(&sl2, 1));
            }
            for m in modules {
                let dual = m.dual();
                let spec = LeibnizComplexSpec::new(&g, &m).with_max_degree(3);
                let top = spec.largest_feasible_degree(3).unwrap();
                let spec = spec.with_max_degree(top);
                let dual_spec = LeibnizComplexSpec::new(&g, &dual).with_max_degree(top);
                let co = leibniz_cohomology(&spec).unwrap().betti;
                let ho = leibniz_homology(&dual_spec).unwrap().betti;
                assert_eq!(co[..top], ho[..top], "{name}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = catalog::sln(3);
        let m = Representation::adjoint(&g);
        let spec = LeibnizComplexSpec::new(&g, &m);
        match leibniz_cohomology(&spec) {
            Err(Error::CapExceeded { degree, entries, cap }) => {
                assert_eq!(degree, 3);
                assert_eq!(entries, 8u128.pow(3) * 8u128.pow(4));
                assert_eq!(cap, DEFAULT_RESOURCE_CAP);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
        assert_eq!(spec.largest_feasible_degree(4), Some(2));
        let spec = LeibnizComplexSpec::new(&g, &m).with_max_degree(0);
        assert!(matches!(spec.check(), Err(Error::InvalidParams { .. })));
    }
}
