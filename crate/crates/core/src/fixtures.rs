//! Small algebras used throughout the tests, benches and examples.

use crate::algebra::{BoundQuiverAlgebra, Quiver, RelationSpec};
use crate::field::Field;

fn build(
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    relations: &[(&str, &[&str])],
    field: Field,
    bound: usize,
) -> BoundQuiverAlgebra {
    let q = Quiver::new(vertices, arrows).expect("fixture quiver");
    let rels = relations
        .iter()
        .map(|(start, arrows)| RelationSpec::monomial(q.path(start, arrows).expect("fixture path")))
        .collect();
    BoundQuiverAlgebra::build(q, rels, field, bound).expect("fixture algebra")
}

/// `1 -> 2`
pub fn a2(field: Field) -> BoundQuiverAlgebra {
    build(&["1", "2"], &[("a", "1", "2")], &[], field, 2)
}

/// `1 -> 2 -> 3`
pub fn a3(field: Field) -> BoundQuiverAlgebra {
    build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[], field, 3)
}

/// Loop `alpha` at 1 and `beta: 1 -> 2`, with `alpha²` and `alpha·beta` zero.
pub fn loop2(field: Field) -> BoundQuiverAlgebra {
    build(
        &["1", "2"],
        &[("alpha", "1", "1"), ("beta", "1", "2")],
        &[("1", &["alpha", "alpha"]), ("1", &["alpha", "beta"])],
        field,
        3,
    )
}

/// Two zero relations through a sink at 1.
pub fn tilted4(field: Field) -> BoundQuiverAlgebra {
    build(
        &["1", "2", "3", "4"],
        &[("beta", "2", "1"), ("delta", "3", "1"), ("alpha", "4", "2"), ("gamma", "4", "3")],
        &[("4", &["alpha", "beta"]), ("4", &["gamma", "delta"])],
        field,
        3,
    )
}

/// Linear `5 -> 4 -> 3 -> 2 -> 1` with the full path killed.
pub fn tilted5(field: Field) -> BoundQuiverAlgebra {
    build(
        &["1", "2", "3", "4", "5"],
        &[("alpha", "5", "4"), ("beta", "4", "3"), ("gamma", "3", "2"), ("delta", "2", "1")],
        &[("5", &["alpha", "beta", "gamma", "delta"])],
        field,
        5,
    )
}

/// Two parallel arrows `1 -> 2`.
pub fn kronecker(field: Field) -> BoundQuiverAlgebra {
    build(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[], field, 2)
}

/// Hereditary algebra of type D5 used as the base of a tilting module.
pub fn d5(field: Field) -> BoundQuiverAlgebra {
    build(
        &["1", "2", "3", "4", "5"],
        &[("a", "4", "3"), ("b", "3", "2"), ("c", "2", "1"), ("d", "3", "5")],
        &[],
        field,
        4,
    )
}

/// The finite fixtures (everything except the Kronecker algebra).
pub fn all(field: Field) -> Vec<BoundQuiverAlgebra> {
    vec![a2(field), a3(field), loop2(field), tilted4(field), tilted5(field), d5(field)]
}
