pub mod algebra;
pub mod catalog;
pub mod checks;
pub mod decompose;
pub mod endo;
pub mod exec;
pub mod field;
pub mod fixtures;
pub mod homological;
pub mod linalg;
pub mod rep;

pub use catalog::{Budget, Catalog, CatalogError};
pub use checks::{Analysis, CheckError, CheckReport, Verdict, Witness};
pub use algebra::{AlgebraError, BoundQuiverAlgebra, Path, Quiver, RelationSpec, Shape};
pub use decompose::{decompose, is_isomorphic, Decomposition};
pub use endo::{AbstractAlgebra, EndoError};
pub use exec::Exec;
pub use field::{Field, FieldError, Scalar};
pub use homological::{DimValue, HomologicalError, Presentation};
pub use linalg::{LinalgError, Mat, Rref};
pub use rep::{Morphism, Rep, RepError};
