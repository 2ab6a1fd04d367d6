//! JSON file formats for algebras and modules. Rationals are always strings.
//!
//! ```json
//! {"name": "h3", "dim": 3, "basis": ["x", "y", "z"], "brackets": {"0,1": {"2": "1"}}}
//! {"dim": 2, "action": [["1","0","0","-1"], ["0","1","0","0"], ["0","0","1","0"]]}
//! ```
//!
//! Module action matrices may be flat row-major arrays or arrays of rows.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};
use crate::liealg::LieAlgebra;
use crate::repn::Representation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub metadata: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixEntries {
    Flat(Vec<String>),
    Rows(Vec<Vec<String>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub dim: usize,
    pub action: Vec<MatrixEntries>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
}

fn parse_rational(location: String, s: &str) -> Result<Rational> {
    s.parse::<Rational>()
        .map_err(|e| Error::parse(location, format!("invalid rational {s:?}: {e}")))
}

fn parse_index(location: String, s: &str, dim: usize) -> Result<usize> {
    let i: usize = s
        .trim()
        .parse()
        .map_err(|_| Error::parse(location.clone(), format!("invalid index {s:?}")))?;
    if i >= dim {
        return Err(Error::parse(location, format!("index {i} out of range for dimension {dim}")));
    }
    Ok(i)
}

impl AlgebraFile {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let brackets = g
            .sparse_brackets()
            .into_iter()
            .map(|((i, j), terms)| {
                (
                    format!("{i},{j}"),
                    terms.into_iter().map(|(k, c)| (k.to_string(), c.to_string())).collect(),
                )
            })
            .collect();
        AlgebraFile {
            name: Some(g.name().to_string()),
            dim: g.dim(),
            basis: Some(g.basis_names().to_vec()),
            brackets,
            metadata: Vec::new(),
        }
    }

    /// Builds and validates the algebra, reporting the first malformed entry
    /// by its JSON path, or every failing Jacobi triple.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let n = self.dim;
        let basis = match &self.basis {
            Some(b) if b.len() != n => {
                return Err(Error::parse(
                    "basis",
                    format!("{} names given for dimension {n}", b.len()),
                ))
            }
            Some(b) => b.clone(),
            None => (0..n).map(|i| format!("b{i}")).collect(),
        };
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (key, terms) in &self.brackets {
            let loc = format!("brackets[{key:?}]");
            let parts: Vec<&str> = key.split(',').collect();
            let [a, b] = parts.as_slice() else {
                return Err(Error::parse(loc, "key must have the form \"i,j\""));
            };
            let i = parse_index(loc.clone(), a, n)?;
            let j = parse_index(loc.clone(), b, n)?;
            if i >= j {
                return Err(Error::parse(loc, format!("key requires i < j, got {i},{j}")));
            }
            let mut sparse = Vec::with_capacity(terms.len());
            for (k, c) in terms {
                let tloc = format!("{loc}[{k:?}]");
                sparse.push((parse_index(tloc.clone(), k, n)?, parse_rational(tloc, c)?));
            }
            brackets.push(((i, j), sparse));
        }
        let name = self.name.clone().unwrap_or_else(|| "algebra".into());
        LieAlgebra::new_validated(name, basis, brackets)
    }
}

impl ModuleFile {
    pub fn from_representation(m: &Representation) -> Self {
        ModuleFile {
            dim: m.dim(),
            action: m
                .matrices()
                .iter()
                .map(|a| MatrixEntries::Flat(a.entries().iter().map(Rational::to_string).collect()))
                .collect(),
        }
    }

    /// Builds the module and checks it is a representation of `g`.
    pub fn to_representation(&self, g: &LieAlgebra) -> Result<Representation> {
        let d = self.dim;
        if self.action.len() != g.dim() {
            return Err(Error::parse(
                "action",
                format!("{} matrices given for an algebra of dimension {}", self.action.len(), g.dim()),
            ));
        }
        let mut mats = Vec::with_capacity(self.action.len());
        for (idx, entries) in self.action.iter().enumerate() {
            let loc = format!("action[{idx}]");
            let flat: Vec<(String, &String)> = match entries {
                MatrixEntries::Flat(v) => {
                    if v.len() != d * d {
                        return Err(Error::parse(loc, format!("expected {} entries, found {}", d * d, v.len())));
                    }
                    v.iter().enumerate().map(|(t, s)| (format!("{loc}[{t}]"), s)).collect()
                }
                MatrixEntries::Rows(rows) => {
                    if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                        return Err(Error::parse(loc, format!("expected {d} rows of {d} entries")));
                    }
                    rows.iter()
                        .enumerate()
                        .flat_map(|(r, row)| {
                            let loc = &loc;
                            row.iter().enumerate().map(move |(c, s)| (format!("{loc}[{r}][{c}]"), s))
                        })
                        .collect()
                }
            };
            let values = flat
                .into_iter()
                .map(|(l, s)| parse_rational(l, s))
                .collect::<Result<Vec<_>>>()?;
            mats.push(Matrix::from_vec(d, d, values)?);
        }
        let m = Representation::new(d, mats)?;
        let bad = m.validate(g)?;
        if !bad.is_empty() {
            return Err(Error::NotRepresentation(bad));
        }
        Ok(m)
    }
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile> {
    serde_json::from_str(text).map_err(json_error)
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    parse_algebra_file(text)?.to_algebra()
}

pub fn parse_module(text: &str, g: &LieAlgebra) -> Result<Representation> {
    let file: ModuleFile = serde_json::from_str(text).map_err(json_error)?;
    file.to_representation(g)
}

pub fn algebra_to_json(g: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(g)).expect("serializable")
}

pub fn module_to_json(m: &Representation) -> String {
    serde_json::to_string_pretty(&ModuleFile::from_representation(m)).expect("serializable")
}
