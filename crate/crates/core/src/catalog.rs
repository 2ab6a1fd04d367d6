//! Named algebras and modules used throughout the checks and tests.
//!
//! Entries are addressed as `name` or `name(p1,p2,...)`, e.g. `sl2`,
//! `affine(2)`, `heisenberg(5)`, `sl2_semidirect_sum(1,1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};
use crate::io::AlgebraFile;
use crate::liealg::LieAlgebra;
use crate::repn::Representation;

/// Metadata flag: the radical has no `s`-constituent isomorphic to a factor
/// of the Levi subalgebra, so `H^1(g,g) = Hom_s(r,r)` may be asserted.
pub const PROP38_HYPOTHESIS: &str = "prop3.8-hypothesis-holds";
/// Metadata flag: the radical is an absolutely irreducible module.
pub const ABS_IRREDUCIBLE_RADICAL: &str = "absolutely-irreducible-radical";

const FAMILIES: &[&str] = &[
    "abelian",
    "heisenberg",
    "r2",
    "sl2",
    "so3",
    "sln",
    "gln",
    "affine",
    "sl2_semidirect_irrep",
    "sl2_semidirect_sum",
    "oscillator",
    "sl2_semidirect_heisenberg",
];

/// Structural flags an entry is documented to have; `None` means "not stated".
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DocumentedFlags {
    pub perfect: Option<bool>,
    pub solvable: Option<bool>,
    pub nilpotent: Option<bool>,
    pub semisimple: Option<bool>,
    pub unimodular: Option<bool>,
    pub complete: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub family: &'static str,
    pub params: Vec<usize>,
    pub algebra: LieAlgebra,
    pub metadata: Vec<String>,
    pub documented: DocumentedFlags,
}

impl CatalogEntry {
    pub fn has_flag(&self, flag: &str) -> bool {
        self.metadata.iter().any(|f| f == flag)
    }
}

pub fn list() -> &'static [&'static str] {
    FAMILIES
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Matrix unit `E_ij` of size `d`.
fn unit(d: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    m[(i, j)] = Rational::one();
    m
}

/// Heisenberg algebra of odd dimension `dim = 2k + 1`:
/// `[x_i, y_i] = z`.
pub fn heisenberg(dim: usize) -> LieAlgebra {
    assert!(dim >= 3 && dim % 2 == 1, "heisenberg dimension must be odd and >= 3");
    let k = (dim - 1) / 2;
    let mut basis: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    basis.extend((1..=k).map(|i| format!("y{i}")));
    basis.push("z".into());
    if k == 1 {
        basis = vec!["x".into(), "y".into(), "z".into()];
    }
    let brackets = (0..k).map(|i| ((i, k + i), vec![(2 * k, q(1))]));
    LieAlgebra::from_brackets(format!("heisenberg({dim})"), basis, brackets).unwrap()
}

/// `[t, x] = x`.
pub fn r2() -> LieAlgebra {
    LieAlgebra::from_brackets("r2", vec!["t".into(), "x".into()], [((0, 1), vec![(1, q(1))])])
        .unwrap()
}

/// `sl2` in the basis `(h, e, f)`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        "sl2",
        vec!["h".into(), "e".into(), "f".into()],
        [
            ((0, 1), vec![(1, q(2))]),
            ((0, 2), vec![(2, q(-2))]),
            ((1, 2), vec![(0, q(1))]),
        ],
    )
    .unwrap()
}

pub fn so3() -> LieAlgebra {
    LieAlgebra::from_brackets(
        "so3",
        vec!["x".into(), "y".into(), "z".into()],
        [
            ((0, 1), vec![(2, q(1))]),
            ((1, 2), vec![(0, q(1))]),
            ((0, 2), vec![(1, q(-1))]),
        ],
    )
    .unwrap()
}

pub fn gln(n: usize) -> LieAlgebra {
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mats.push(unit(n, i, j));
            labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    LieAlgebra::from_matrix_basis(format!("gl{n}"), labels, &mats).unwrap()
}

pub fn sln(n: usize) -> LieAlgebra {
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n.saturating_sub(1) {
        mats.push(unit(n, i, i).sub(&unit(n, i + 1, i + 1)).unwrap());
        labels.push(format!("H{}", i + 1));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                mats.push(unit(n, i, j));
                labels.push(format!("E{}{}", i + 1, j + 1));
            }
        }
    }
    LieAlgebra::from_matrix_basis(format!("sl{n}"), labels, &mats).unwrap()
}

/// `aff(n) = gl_n ⋉ Q^n`, realized as `(n+1) x (n+1)` matrices with zero
/// last row.
pub fn affine(n: usize) -> LieAlgebra {
    let d = n + 1;
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mats.push(unit(d, i, j));
            labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    for i in 0..n {
        mats.push(unit(d, i, n));
        labels.push(format!("v{}", i + 1));
    }
    LieAlgebra::from_matrix_basis(format!("affine({n})"), labels, &mats).unwrap()
}

/// `[t, x] = y, [t, y] = -x, [x, y] = z`.
pub fn oscillator() -> LieAlgebra {
    LieAlgebra::from_brackets(
        "oscillator(4)",
        vec!["t".into(), "x".into(), "y".into(), "z".into()],
        [
            ((0, 1), vec![(2, q(1))]),
            ((0, 2), vec![(1, q(-1))]),
            ((1, 2), vec![(3, q(1))]),
        ],
    )
    .unwrap()
}

/// Action matrices `(h, e, f)` of the irreducible `(m+1)`-dimensional sl2
/// module: `h v_k = (m - 2k) v_k`, `f v_k = v_{k+1}`,
/// `e v_k = k (m - k + 1) v_{k-1}`.
pub fn sl2_irrep_matrices(m: usize) -> [Matrix; 3] {
    let d = m + 1;
    let mut h = Matrix::zeros(d, d);
    let mut e = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    for k in 0..d {
        h[(k, k)] = q(m as i64 - 2 * k as i64);
        if k + 1 < d {
            f[(k + 1, k)] = q(1);
        }
        if k > 0 {
            e[(k - 1, k)] = q((k * (m - k + 1)) as i64);
        }
    }
    [h, e, f]
}

/// The irreducible module `V_m` over `g = sl2()` (basis order `h, e, f`).
pub fn sl2_irrep(g: &LieAlgebra, m: usize) -> Representation {
    assert_eq!(g.dim(), 3);
    Representation::new(m + 1, sl2_irrep_matrices(m).to_vec()).unwrap()
}

/// Direct sum of sl2 irreducibles `V_{m_1} ⊕ ... ⊕ V_{m_k}`.
pub fn sl2_module_sum(weights: &[usize]) -> Representation {
    let d: usize = weights.iter().map(|m| m + 1).sum();
    let mut action = vec![Matrix::zeros(d, d), Matrix::zeros(d, d), Matrix::zeros(d, d)];
    let mut offset = 0;
    for &m in weights {
        for (a, block) in action.iter_mut().zip(sl2_irrep_matrices(m)) {
            for i in 0..=m {
                for j in 0..=m {
                    a[(offset + i, offset + j)] = block[(i, j)].clone();
                }
            }
        }
        offset += m + 1;
    }
    Representation::new(d, action).unwrap()
}

/// `sl2 ⋉ (V_{m_1} ⊕ ... ⊕ V_{m_k})` with abelian radical.
pub fn sl2_semidirect_sum(weights: &[usize]) -> LieAlgebra {
    let module = sl2_module_sum(weights);
    let r = LieAlgebra::abelian(module.dim());
    let r = LieAlgebra::from_brackets("V", names("v", module.dim()), r.sparse_brackets()).unwrap();
    let label = weights.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",");
    LieAlgebra::semidirect_product(&sl2(), &r, &module)
        .unwrap()
        .with_name(format!("sl2_semidirect_sum({label})"))
}

pub fn sl2_semidirect_irrep(m: usize) -> LieAlgebra {
    sl2_semidirect_sum(&[m]).with_name(format!("sl2_semidirect_irrep({m})"))
}

/// sl2 acting on the 3-dim Heisenberg algebra: `V_1` on `span(x, y)`,
/// trivially on `z`.
pub fn sl2_semidirect_heisenberg() -> LieAlgebra {
    let mut action = Vec::new();
    for block in sl2_irrep_matrices(1) {
        let mut a = Matrix::zeros(3, 3);
        for i in 0..2 {
            for j in 0..2 {
                a[(i, j)] = block[(i, j)].clone();
            }
        }
        action.push(a);
    }
    let module = Representation::new(3, action).unwrap();
    LieAlgebra::semidirect_product(&sl2(), &heisenberg(3), &module)
        .unwrap()
        .with_name("sl2_semidirect_heisenberg")
}

/// Splits `affine(2)` into `("affine", [2])`.
pub fn parse_name(spec: &str) -> Result<(String, Vec<usize>)> {
    let spec = spec.trim();
    let Some(open) = spec.find('(') else {
        return Ok((spec.to_string(), Vec::new()));
    };
    let bad = || Error::InvalidParams {
        name: spec.to_string(),
        reason: "expected name(p1,p2,...) with non-negative integers".into(),
    };
    let inner = spec[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let params = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?
    };
    Ok((spec[..open].to_string(), params))
}

fn display_name(family: &str, params: &[usize]) -> String {
    if params.is_empty() {
        family.to_string()
    } else {
        let p: Vec<String> = params.iter().map(|x| x.to_string()).collect();
        format!("{family}({})", p.join(","))
    }
}

/// Looks up `name` (optionally with inline parameters) in the catalog.
pub fn make_named(spec: &str) -> Result<CatalogEntry> {
    let (family, params) = parse_name(spec)?;
    make(&family, &params)
}

pub fn make(name: &str, params: &[usize]) -> Result<CatalogEntry> {
    let family = FAMILIES
        .iter()
        .copied()
        .find(|f| *f == name)
        .ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
    let invalid = |reason: &str| Error::InvalidParams {
        name: name.to_string(),
        reason: reason.to_string(),
    };
    let one = |default: Option<usize>| -> Result<usize> {
        match (params, default) {
            ([p], _) => Ok(*p),
            ([], Some(d)) => Ok(d),
            _ => Err(invalid("expected exactly one parameter")),
        }
    };
    let none = || -> Result<()> {
        if params.is_empty() {
            Ok(())
        } else {
            Err(invalid("takes no parameters"))
        }
    };
    let mut metadata = Vec::new();
    let doc;
    let (algebra, used): (LieAlgebra, Vec<usize>) = match family {
        "abelian" => {
            let n = one(None)?;
            doc = DocumentedFlags {
                perfect: Some(n == 0),
                solvable: Some(true),
                nilpotent: Some(true),
                semisimple: Some(n == 0),
                unimodular: Some(true),
                complete: Some(n == 0),
            };
            (LieAlgebra::abelian(n), vec![n])
        }
        "heisenberg" => {
            let d = one(Some(3))?;
            if d < 3 || d % 2 == 0 {
                return Err(invalid("dimension must be odd and at least 3"));
            }
            doc = DocumentedFlags {
                perfect: Some(false),
                solvable: Some(true),
                nilpotent: Some(true),
                semisimple: Some(false),
                unimodular: Some(true),
                complete: Some(false),
            };
            (heisenberg(d), vec![d])
        }
        "r2" => {
            none()?;
            doc = DocumentedFlags {
                perfect: Some(false),
                solvable: Some(true),
                nilpotent: Some(false),
                semisimple: Some(false),
                unimodular: Some(false),
                complete: Some(true),
            };
            (r2(), vec![])
        }
        "sl2" | "so3" => {
            none()?;
            doc = semisimple_flags();
            (if family == "sl2" { sl2() } else { so3() }, vec![])
        }
        "sln" => {
            let n = one(None)?;
            if n < 2 {
                return Err(invalid("n must be at least 2"));
            }
            doc = semisimple_flags();
            (sln(n), vec![n])
        }
        "gln" => {
            let n = one(None)?;
            if n < 1 {
                return Err(invalid("n must be at least 1"));
            }
            doc = DocumentedFlags {
                perfect: Some(false),
                semisimple: Some(false),
                unimodular: Some(true),
                complete: Some(false),
                solvable: Some(n == 1),
                nilpotent: Some(n == 1),
            };
            if n >= 2 {
                metadata.push(PROP38_HYPOTHESIS.to_string());
            }
            (gln(n), vec![n])
        }
        "affine" => {
            let n = one(None)?;
            if n < 1 {
                return Err(invalid("n must be at least 1"));
            }
            doc = DocumentedFlags {
                perfect: Some(false),
                solvable: Some(n == 1),
                nilpotent: Some(false),
                semisimple: Some(false),
                unimodular: Some(false),
                complete: Some(true),
            };
            (affine(n), vec![n])
        }
        "sl2_semidirect_irrep" => {
            let m = one(None)?;
            if m < 1 {
                return Err(invalid("highest weight must be at least 1"));
            }
            doc = perfect_nonsemisimple_flags();
            metadata.push(ABS_IRREDUCIBLE_RADICAL.to_string());
            if m != 2 {
                metadata.push(PROP38_HYPOTHESIS.to_string());
            }
            (sl2_semidirect_irrep(m), vec![m])
        }
        "sl2_semidirect_sum" => {
            if params.is_empty() || params.contains(&0) {
                return Err(invalid("expects one or more positive highest weights"));
            }
            doc = perfect_nonsemisimple_flags();
            if !params.contains(&2) {
                metadata.push(PROP38_HYPOTHESIS.to_string());
            }
            (sl2_semidirect_sum(params), params.to_vec())
        }
        "oscillator" => {
            let d = one(Some(4))?;
            if d != 4 {
                return Err(invalid("only the 4-dimensional oscillator algebra is provided"));
            }
            doc = DocumentedFlags {
                perfect: Some(false),
                solvable: Some(true),
                nilpotent: Some(false),
                semisimple: Some(false),
                unimodular: Some(true),
                complete: Some(false),
            };
            (oscillator(), vec![4])
        }
        "sl2_semidirect_heisenberg" => {
            none()?;
            doc = perfect_nonsemisimple_flags();
            (sl2_semidirect_heisenberg(), vec![])
        }
        _ => unreachable!(),
    };
    let name = display_name(family, &used);
    Ok(CatalogEntry {
        algebra: algebra.with_name(name.clone()),
        name,
        family,
        params: used,
        metadata,
        documented: doc,
    })
}

fn semisimple_flags() -> DocumentedFlags {
    DocumentedFlags {
        perfect: Some(true),
        solvable: Some(false),
        nilpotent: Some(false),
        semisimple: Some(true),
        unimodular: Some(true),
        complete: Some(true),
    }
}

fn perfect_nonsemisimple_flags() -> DocumentedFlags {
    DocumentedFlags {
        perfect: Some(true),
        solvable: Some(false),
        nilpotent: Some(false),
        semisimple: Some(false),
        unimodular: Some(true),
        complete: Some(false),
    }
}

/// Serialized algebra file for a catalog entry, metadata included.
pub fn export(spec: &str) -> Result<String> {
    let entry = make_named(spec)?;
    let mut file = AlgebraFile::from_algebra(&entry.algebra);
    file.metadata = entry.metadata;
    Ok(serde_json::to_string_pretty(&file).expect("serializable"))
}

/// The concrete instances used whenever "every catalog entry" is meant.
pub fn standard_entries() -> Vec<CatalogEntry> {
    [
        "abelian(1)",
        "abelian(2)",
        "abelian(3)",
        "heisenberg(3)",
        "heisenberg(5)",
        "r2",
        "sl2",
        "so3",
        "sln(3)",
        "gln(2)",
        "affine(1)",
        "affine(2)",
        "sl2_semidirect_irrep(1)",
        "sl2_semidirect_irrep(2)",
        "sl2_semidirect_sum(1,1)",
        "oscillator",
        "sl2_semidirect_heisenberg",
    ]
    .iter()
    .map(|s| make_named(s).expect("standard entry"))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{parse_algebra, parse_algebra_file};

    #[test]
    fn every_standard_entry_validates_and_matches_its_flags() {
        for entry in standard_entries() {
            let g = &entry.algebra;
            assert!(g.validate_structure().is_empty(), "{}", entry.name);
            let r = g.structure_report();
            let d = &entry.documented;
            let pairs = [
                (d.perfect, r.perfect, "perfect"),
                (d.solvable, r.solvable, "solvable"),
                (d.nilpotent, r.nilpotent, "nilpotent"),
                (d.semisimple, r.semisimple, "semisimple"),
                (d.unimodular, r.unimodular, "unimodular"),
                (d.complete, r.complete, "complete"),
            ];
            for (want, got, what) in pairs {
                if let Some(w) = want {
                    assert_eq!(w, got, "{} {what}", entry.name);
                }
            }
        }
    }

    #[test]
    fn affine_one_is_r2() {
        let a = affine(1);
        assert_eq!(a.sparse_brackets(), r2().sparse_brackets());
    }

    #[test]
    fn named_lookup() {
        assert!(list().contains(&"affine"));
        let e = make_named("heisenberg(3)").unwrap();
        assert_eq!(e.algebra.dim(), 3);
        assert_eq!(e.algebra.center().dim(), 1);
        let e = make_named("sl2_semidirect_irrep(1)").unwrap();
        assert_eq!(e.algebra.dim(), 5);
        assert!(e.algebra.is_perfect());
        assert!(e.has_flag(ABS_IRREDUCIBLE_RADICAL));
        assert!(matches!(make_named("nope"), Err(Error::UnknownCatalog(_))));
        assert!(matches!(make_named("heisenberg(4)"), Err(Error::InvalidParams { .. })));
        assert!(matches!(make_named("affine(x)"), Err(Error::InvalidParams { .. })));
        assert_eq!(make_named("sl2_semidirect_sum(1,1)").unwrap().algebra.dim(), 7);
    }

    #[test]
    fn export_round_trips() {
        for name in ["sl2", "abelian(2)", "sl2_semidirect_irrep(1)"] {
            let text = export(name).unwrap();
            let entry = make_named(name).unwrap();
            assert_eq!(parse_algebra(&text).unwrap(), entry.algebra);
            assert_eq!(parse_algebra_file(&text).unwrap().metadata, entry.metadata);
        }
        let file = parse_algebra_file(&export("abelian(2)").unwrap()).unwrap();
        assert!(file.brackets.is_empty());
        assert!(export("nope").is_err());
    }

    #[test]
    fn irrep_matrices_form_representations() {
        let g = sl2();
        for m in 0..5 {
            assert!(sl2_irrep(&g, m).validate(&g).unwrap().is_empty(), "V_{m}");
        }
    }
}
