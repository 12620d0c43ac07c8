//! JSON algebra, module and tilting files.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use repherd_core::algebra::{BoundQuiverAlgebra, Quiver, RelationSpec};
use repherd_core::catalog::Catalog;
use repherd_core::{AlgebraError, Field, FieldError, Mat, Rep, RepError, Scalar};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}:{column}: {message}")]
    Syntax { path: PathBuf, line: usize, column: usize, message: String },
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Field(#[from] FieldError),
    #[error("{0}")]
    Rep(#[from] RepError),
    #[error("{0}")]
    Invalid(String),
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, FileError> {
    let text = fs::read_to_string(path).map_err(|source| FileError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|e| FileError::Syntax {
        path: path.into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// `"Q"` or `{"GFp": p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime {
        #[serde(rename = "GFp")]
        gfp: u64,
    },
}

impl FieldSpec {
    pub fn field(&self) -> Result<Field, FileError> {
        match self {
            FieldSpec::Named(s) if s == "Q" => Ok(Field::Rationals),
            FieldSpec::Named(s) => Err(FileError::Invalid(format!("unknown field {s:?}; use \"Q\" or {{\"GFp\": p}}"))),
            FieldSpec::Prime { gfp } => Ok(Field::prime(*gfp)?),
        }
    }

    pub fn of(field: Field) -> FieldSpec {
        match field {
            Field::Rationals => FieldSpec::Named("Q".into()),
            Field::Prime(p) => FieldSpec::Prime { gfp: p },
        }
    }
}

/// An exact scalar: a JSON integer or a string such as `"-3/4"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn scalar(&self, field: Field) -> Result<Scalar, FileError> {
        Ok(match self {
            Number::Int(n) => field.parse(&n.to_string())?,
            Number::Text(s) => field.parse(s.trim())?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: Number,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<Term>>,
    pub length_bound: usize,
}

impl AlgebraFile {
    pub fn load(path: &Path) -> Result<AlgebraFile, FileError> {
        read_json(path)
    }

    pub fn build(&self) -> Result<BoundQuiverAlgebra, FileError> {
        self.build_over(self.field.field()?)
    }

    /// Same quiver and relations over another field.
    pub fn build_over(&self, field: Field) -> Result<BoundQuiverAlgebra, FileError> {
        let arrows: Vec<(&str, &str, &str)> =
            self.arrows.iter().map(|a| (a.name.as_str(), a.from.as_str(), a.to.as_str())).collect();
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let q = Quiver::new(&vertices, &arrows)?;
        let mut rels = Vec::with_capacity(self.relations.len());
        for (ri, rel) in self.relations.iter().enumerate() {
            let mut terms = Vec::with_capacity(rel.len());
            for t in rel {
                let first = t.path.first().ok_or_else(|| {
                    AlgebraError::MalformedRelation(format!("relation {ri}: empty path"))
                })?;
                let start = self
                    .arrows
                    .iter()
                    .find(|a| &a.name == first)
                    .ok_or_else(|| AlgebraError::UnknownArrow(first.clone()))?
                    .from
                    .clone();
                let names: Vec<&str> = t.path.iter().map(String::as_str).collect();
                terms.push((t.coeff.scalar(field)?, q.path(&start, &names)?));
            }
            rels.push(RelationSpec { terms });
        }
        Ok(BoundQuiverAlgebra::build(q, rels, field, self.length_bound)?)
    }

    /// Canonical JSON: normalized coefficients, declared key order.
    pub fn canonical(&self) -> Result<String, FileError> {
        let field = self.field.field()?;
        let mut c = self.clone();
        for rel in &mut c.relations {
            for t in rel {
                t.coeff = Number::Text(t.coeff.scalar(field)?.to_string());
            }
        }
        Ok(serde_json::to_string(&c).expect("plain data serializes"))
    }
}

/// Rows of a matrix, each entry exact.
pub type Matrix = Vec<Vec<Number>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub dims: BTreeMap<String, usize>,
    /// arrow name to row-major matrix of shape `dim(target) x dim(source)`
    #[serde(default)]
    pub maps: BTreeMap<String, Matrix>,
}

impl ModuleFile {
    pub fn load(path: &Path) -> Result<ModuleFile, FileError> {
        read_json(path)
    }

    pub fn of(alg: &BoundQuiverAlgebra, m: &Rep) -> ModuleFile {
        let q = alg.quiver();
        let dims = q.vertices().iter().cloned().zip(m.dims().iter().copied()).collect();
        let maps = q
            .arrows()
            .iter()
            .zip(m.maps())
            .map(|(a, mat)| {
                let rows = (0..mat.rows())
                    .map(|r| mat.row(r).iter().map(|x| Number::Text(x.to_string())).collect())
                    .collect();
                (a.name.clone(), rows)
            })
            .collect();
        ModuleFile { dims, maps }
    }

    /// Missing vertices have dimension zero; missing arrows act by zero.
    /// Relations are verified.
    pub fn build(&self, alg: &BoundQuiverAlgebra) -> Result<Rep, FileError> {
        let q = alg.quiver();
        let field = alg.field();
        for v in self.dims.keys() {
            q.vertex_index(v).ok_or_else(|| FileError::Invalid(format!("unknown vertex {v:?} in dims")))?;
        }
        for a in self.maps.keys() {
            q.arrow_index(a).ok_or_else(|| FileError::Invalid(format!("unknown arrow {a:?} in maps")))?;
        }
        let dims: Vec<usize> = q.vertices().iter().map(|v| self.dims.get(v).copied().unwrap_or(0)).collect();
        let mut maps = Vec::with_capacity(q.arrows().len());
        for a in q.arrows() {
            let (rows, cols) = (dims[a.target], dims[a.source]);
            let mat = match self.maps.get(&a.name) {
                None => Mat::zeros(field, rows, cols),
                Some(m) => {
                    let shape_ok = m.len() == rows && m.iter().all(|r| r.len() == cols);
                    // a zero-row matrix cannot record its width
                    if !shape_ok && !(rows == 0 && m.is_empty()) {
                        return Err(FileError::Invalid(format!(
                            "map {} must be {rows}x{cols} (dim {} by dim {})",
                            a.name, q.vertices()[a.target], q.vertices()[a.source]
                        )));
                    }
                    let entries = m
                        .iter()
                        .map(|r| r.iter().map(|x| x.scalar(field)).collect::<Result<Vec<_>, _>>())
                        .collect::<Result<Vec<_>, _>>()?;
                    if rows == 0 { Mat::zeros(field, 0, cols) } else { Mat::from_rows(field, entries) }
                }
            };
            maps.push(mat);
        }
        Ok(Rep::over(alg, dims, maps)?)
    }
}

/// A summand named after a catalog entry (`"P(5)"`, `"tau^-2 P(5)"`) or
/// given explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SummandSpec {
    Named(String),
    Module(ModuleFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TiltingFile {
    pub summands: Vec<SummandSpec>,
}

impl TiltingFile {
    pub fn load(path: &Path) -> Result<TiltingFile, FileError> {
        read_json(path)
    }

    pub fn needs_catalog(&self) -> bool {
        self.summands.iter().any(|s| matches!(s, SummandSpec::Named(_)))
    }

    pub fn build(&self, alg: &BoundQuiverAlgebra, catalog: Option<&Catalog>) -> Result<Vec<Rep>, FileError> {
        self.summands
            .iter()
            .map(|s| match s {
                SummandSpec::Module(m) => m.build(alg),
                SummandSpec::Named(name) => {
                    let cat = catalog.ok_or_else(|| FileError::Invalid(format!("cannot resolve {name:?} without a catalog")))?;
                    let i = cat.find(name).ok_or_else(|| FileError::Invalid(format!("no indecomposable named {name:?}")))?;
                    Ok(cat.entries[i].module.clone())
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use repherd_core::decompose::is_isomorphic;
    use repherd_core::{fixtures, Budget, Exec};

    fn a2_file() -> AlgebraFile {
        serde_json::from_str(
            r#"{"field": "Q", "vertices": ["1", "2"], "arrows": [{"name": "a", "from": "1", "to": "2"}], "length_bound": 2}"#,
        )
        .unwrap()
    }

    #[test]
    fn a2_has_dimension_three() {
        assert_eq!(a2_file().build().unwrap().dim(), 3);
    }

    #[test]
    fn length_one_relation_is_malformed() {
        let mut f = a2_file();
        f.relations = vec![vec![Term { coeff: Number::Int(1), path: vec!["a".into()] }]];
        let err = f.build().unwrap_err();
        assert!(err.to_string().starts_with("malformed relation"), "{err}");
    }

    #[test]
    fn prime_field_spec() {
        let f: FieldSpec = serde_json::from_str(r#"{"GFp": 101}"#).unwrap();
        assert_eq!(f.field().unwrap(), Field::Prime(101));
        let g: FieldSpec = serde_json::from_str(r#"{"GFp": 100}"#).unwrap();
        assert!(g.field().is_err());
    }

    #[test]
    fn canonical_form_normalizes_coefficients() {
        let text = |c: &str| {
            format!(
                r#"{{"field": "Q", "vertices": ["1","2","3"], "arrows": [{{"name":"a","from":"1","to":"2"}},{{"name":"b","from":"2","to":"3"}}],
                "relations": [[{{"coeff": {c}, "path": ["a","b"]}}]], "length_bound": 3}}"#
            )
        };
        let x: AlgebraFile = serde_json::from_str(&text("2")).unwrap();
        let y: AlgebraFile = serde_json::from_str(&text("\"4/2\"")).unwrap();
        assert_eq!(x.canonical().unwrap(), y.canonical().unwrap());
    }

    #[test]
    fn catalog_modules_round_trip() {
        let alg = fixtures::tilted5(Field::Rationals);
        let cat = repherd_core::catalog::enumerate_indecomposables(&alg, Budget::default(), Exec::Sequential).unwrap();
        for e in &cat.entries {
            let text = serde_json::to_string(&ModuleFile::of(&alg, &e.module)).unwrap();
            let back: ModuleFile = serde_json::from_str(&text).unwrap();
            assert!(is_isomorphic(&back.build(&alg).unwrap(), &e.module).unwrap());
        }
    }

    #[test]
    fn relation_violation_is_rejected() {
        let alg = fixtures::loop2(Field::Rationals);
        // alpha^2 != 0 here, against the relation alpha^2 = 0
        let m: ModuleFile = serde_json::from_str(
            r#"{"dims": {"1": 3}, "maps": {"alpha": [[0,0,0],[1,0,0],[0,1,0]]}}"#,
        )
        .unwrap();
        assert!(matches!(m.build(&alg), Err(FileError::Rep(_))));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("bad.json");
        fs::write(&p, "{\n  \"field\": \"Q\",\n  \"vertices\": [1,\n").unwrap();
        match AlgebraFile::load(&p) {
            Err(FileError::Syntax { line, .. }) => assert!(line >= 3),
            other => panic!("{other:?}"),
        }
    }
}
