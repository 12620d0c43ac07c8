//! Bound quiver algebras kQ/I with a canonical path basis.
//!
//! Paths compose left to right: for arrows `a: i -> j` and `b: j -> k` the
//! product `ab` means "first `a`, then `b`". Right modules are then
//! representations of `Q` itself, and `P(i) = e_i A` is spanned by the
//! basis paths starting at `i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::linalg::Mat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate arrow {0:?}")]
    DuplicateArrow(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("length bound must be at least 2, got {0}")]
    LengthBoundTooSmall(usize),
    #[error("ideal is not admissible for length bound {bound}: path {path} survives")]
    NotAdmissible { bound: usize, path: String },
    #[error("path of length {len} exceeds the length bound {bound}")]
    PathTooLong { len: usize, bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Vertex count plus arrow endpoints; all a representation needs to know.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

impl Shape {
    pub fn opposite(&self) -> Shape {
        Shape { vertices: self.vertices, arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new<S: AsRef<str>>(
        vertices: &[S],
        arrows: &[(S, S, S)],
    ) -> Result<Quiver, AlgebraError> {
        let mut names: Vec<String> = Vec::new();
        for v in vertices {
            let v = v.as_ref().to_string();
            if names.contains(&v) {
                return Err(AlgebraError::DuplicateVertex(v));
            }
            names.push(v);
        }
        let lookup = |v: &str| {
            names.iter().position(|n| n == v).ok_or_else(|| AlgebraError::UnknownVertex(v.into()))
        };
        let mut out: Vec<Arrow> = Vec::new();
        for (name, s, t) in arrows {
            let name = name.as_ref().to_string();
            if out.iter().any(|a| a.name == name) {
                return Err(AlgebraError::DuplicateArrow(name));
            }
            out.push(Arrow { name, source: lookup(s.as_ref())?, target: lookup(t.as_ref())? });
        }
        Ok(Quiver { vertices: names, arrows: out })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn shape(&self) -> Shape {
        Shape {
            vertices: self.vertices.len(),
            arrows: self.arrows.iter().map(|a| (a.source, a.target)).collect(),
        }
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Vertices with no outgoing arrow.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.arrows.iter().all(|a| a.source != v)).collect()
    }

    /// Builds a path from arrow names; `start` is only consulted when empty.
    pub fn path(&self, start: &str, arrows: &[&str]) -> Result<Path, AlgebraError> {
        let start = self.vertex_index(start).ok_or_else(|| AlgebraError::UnknownVertex(start.into()))?;
        let ids = arrows
            .iter()
            .map(|a| self.arrow_index(a).ok_or_else(|| AlgebraError::UnknownArrow(a.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let start = ids.first().map_or(start, |&a| self.arrows[a].source);
        let p = Path { start, arrows: ids };
        if !self.composes(&p) {
            return Err(AlgebraError::MalformedRelation(format!(
                "arrows {arrows:?} do not compose"
            )));
        }
        Ok(p)
    }

    fn composes(&self, p: &Path) -> bool {
        let mut at = p.start;
        for &a in &p.arrows {
            if self.arrows[a].source != at {
                return false;
            }
            at = self.arrows[a].target;
        }
        true
    }

    pub fn end(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.start, |&a| self.arrows[a].target)
    }

    pub fn display_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", self.vertices[p.start])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("·")
        }
    }
}

/// A path: start vertex plus composable arrow indices (first arrow first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn stationary(v: usize) -> Path {
        Path { start: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Deterministic order: length, then arrow sequence, then start vertex.
    fn key(&self) -> (usize, &[usize], usize) {
        (self.arrows.len(), &self.arrows, self.start)
    }
}

/// A linear combination of parallel paths of length at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpec {
    pub terms: Vec<(Scalar, Path)>,
}

impl RelationSpec {
    pub fn monomial(p: Path) -> RelationSpec {
        RelationSpec { terms: vec![(Scalar::ONE, p)] }
    }
}

/// Coordinates over the path basis, sparse.
pub type Coords = Vec<(usize, Scalar)>;

pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    field: Field,
    relations: Vec<RelationSpec>,
    length_bound: usize,
    shape: Arc<Shape>,
    basis: Vec<Path>,
    /// basis indices of paths from i to j, ascending
    between: Vec<Vec<Vec<usize>>>,
    /// every path of length <= bound, reduced
    reduction: HashMap<Path, Coords>,
    opposite: OnceLock<Box<BoundQuiverAlgebra>>,
}

impl Clone for BoundQuiverAlgebra {
    fn clone(&self) -> Self {
        BoundQuiverAlgebra {
            quiver: self.quiver.clone(),
            field: self.field,
            relations: self.relations.clone(),
            length_bound: self.length_bound,
            shape: self.shape.clone(),
            basis: self.basis.clone(),
            between: self.between.clone(),
            reduction: self.reduction.clone(),
            opposite: OnceLock::new(),
        }
    }
}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("vertices", &self.quiver.vertices)
            .field("arrows", &self.quiver.arrows.len())
            .field("dim", &self.basis.len())
            .finish()
    }
}

fn all_paths(q: &Quiver, from: usize, max_len: usize) -> Vec<Path> {
    let mut out = vec![Path::stationary(from)];
    let mut frontier = vec![Path::stationary(from)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            let end = q.end(p);
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == end {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path { start: from, arrows });
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn concat(q: &Quiver, p: &Path, r: &Path) -> Option<Path> {
    if q.end(p) != r.start {
        return None;
    }
    let mut arrows = p.arrows.clone();
    arrows.extend_from_slice(&r.arrows);
    Some(Path { start: p.start, arrows })
}

impl BoundQuiverAlgebra {
    pub fn build(
        quiver: Quiver,
        relations: Vec<RelationSpec>,
        field: Field,
        length_bound: usize,
    ) -> Result<BoundQuiverAlgebra, AlgebraError> {
        if length_bound < 2 {
            return Err(AlgebraError::LengthBoundTooSmall(length_bound));
        }
        for (ri, rel) in relations.iter().enumerate() {
            validate_relation(&quiver, ri, rel)?;
        }
        let n = quiver.vertices.len();
        let mut paths_from: Vec<Vec<Path>> =
            (0..n).map(|v| all_paths(&quiver, v, length_bound)).collect();
        for ps in &mut paths_from {
            ps.sort_by(|a, b| a.key().cmp(&b.key()));
        }

        let mut block_basis: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        let mut reduction_local: HashMap<Path, Vec<(Path, Scalar)>> = HashMap::new();
        for s in 0..n {
            for e in 0..n {
                let block: Vec<&Path> =
                    paths_from[s].iter().filter(|p| quiver.end(p) == e).collect();
                if block.is_empty() {
                    continue;
                }
                let (basis, reduced) =
                    reduce_block(&quiver, &relations, field, length_bound, &paths_from, &block);
                for p in &block {
                    if p.len() == length_bound && basis.contains(p) {
                        return Err(AlgebraError::NotAdmissible {
                            bound: length_bound,
                            path: quiver.display_path(p),
                        });
                    }
                }
                reduction_local.extend(reduced);
                block_basis.insert((s, e), basis);
            }
        }

        let mut basis: Vec<Path> = block_basis.values().flatten().cloned().collect();
        basis.sort_by(|a, b| a.key().cmp(&b.key()));
        let index: HashMap<&Path, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut between = vec![vec![Vec::new(); n]; n];
        for (i, p) in basis.iter().enumerate() {
            between[p.start][quiver.end(p)].push(i);
        }
        let reduction = reduction_local
            .into_iter()
            .map(|(p, combo)| {
                let coords = combo.into_iter().map(|(b, c)| (index[&b], c)).collect();
                (p, coords)
            })
            .collect();
        let shape = Arc::new(quiver.shape());
        Ok(BoundQuiverAlgebra {
            quiver,
            field,
            relations,
            length_bound,
            shape,
            basis,
            between,
            reduction,
            opposite: OnceLock::new(),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn relations(&self) -> &[RelationSpec] {
        &self.relations
    }

    pub fn length_bound(&self) -> usize {
        self.length_bound
    }

    pub fn shape(&self) -> &Arc<Shape> {
        &self.shape
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Basis indices of paths from `i` to `j`.
    pub fn paths_between(&self, i: usize, j: usize) -> &[usize] {
        &self.between[i][j]
    }

    /// Position of basis element `b` inside `paths_between(start, end)`.
    pub fn local_index(&self, b: usize) -> usize {
        let p = &self.basis[b];
        let list = &self.between[p.start][self.quiver.end(p)];
        list.binary_search(&b).expect("basis element in its block")
    }

    pub fn has_relations(&self) -> bool {
        !self.relations.is_empty()
    }

    /// Normal form of a single path; longer than the bound means zero.
    pub fn reduce_path(&self, p: &Path) -> Coords {
        if p.len() > self.length_bound {
            return Vec::new();
        }
        self.reduction.get(p).cloned().unwrap_or_default()
    }

    pub fn normal_form(&self, combo: &[(Scalar, Path)]) -> Result<Vec<Scalar>, AlgebraError> {
        let f = self.field;
        let mut out = vec![Scalar::ZERO; self.dim()];
        for (c, p) in combo {
            if p.len() > self.length_bound {
                return Err(AlgebraError::PathTooLong { len: p.len(), bound: self.length_bound });
            }
            for (b, v) in self.reduce_path(p) {
                out[b] = f.mul_add(&out[b], c, &v);
            }
        }
        Ok(out)
    }

    /// Product of two basis elements, in basis coordinates.
    pub fn multiply_basis(&self, a: usize, b: usize) -> Coords {
        match concat(&self.quiver, &self.basis[a], &self.basis[b]) {
            Some(p) => self.reduce_path(&p),
            None => Vec::new(),
        }
    }

    /// Product of a basis path with a single arrow on the right.
    pub fn times_arrow(&self, b: usize, arrow: usize) -> Coords {
        let p = &self.basis[b];
        let a = &self.quiver.arrows[arrow];
        if self.quiver.end(p) != a.source {
            return Vec::new();
        }
        let mut arrows = p.arrows.clone();
        arrows.push(arrow);
        self.reduce_path(&Path { start: p.start, arrows })
    }

    /// Product of a single arrow with a basis path on the left.
    pub fn arrow_times(&self, arrow: usize, b: usize) -> Coords {
        let p = &self.basis[b];
        let a = &self.quiver.arrows[arrow];
        if a.target != p.start {
            return Vec::new();
        }
        let mut arrows = vec![arrow];
        arrows.extend_from_slice(&p.arrows);
        self.reduce_path(&Path { start: a.source, arrows })
    }

    /// Matrix of a path acting on a representation given by arrow maps.
    pub fn path_matrix(&self, p: &Path, dims: &[usize], maps: &[Mat]) -> Mat {
        let mut m = Mat::identity(self.field, dims[p.start]);
        for &a in &p.arrows {
            m = maps[a].mul(&m);
        }
        m
    }

    /// Evaluates every relation generator on the given arrow maps.
    pub fn satisfies_relations(&self, dims: &[usize], maps: &[Mat]) -> bool {
        self.relations.iter().all(|rel| {
            let start = rel.terms[0].1.start;
            let end = self.quiver.end(&rel.terms[0].1);
            let mut acc = Mat::zeros(self.field, dims[end], dims[start]);
            for (c, p) in &rel.terms {
                acc = acc.add(&self.path_matrix(p, dims, maps).scale(c));
            }
            acc.is_zero()
        })
    }

    /// Same quiver with arrows reversed and relations read backwards.
    pub fn opposite(&self) -> &BoundQuiverAlgebra {
        self.opposite.get_or_init(|| {
            let q = self.quiver.opposite();
            let rels = self
                .relations
                .iter()
                .map(|r| RelationSpec {
                    terms: r
                        .terms
                        .iter()
                        .map(|(c, p)| {
                            let end = self.quiver.end(p);
                            let mut arrows = p.arrows.clone();
                            arrows.reverse();
                            (c.clone(), Path { start: end, arrows })
                        })
                        .collect(),
                })
                .collect();
            Box::new(
                BoundQuiverAlgebra::build(q, rels, self.field, self.length_bound)
                    .expect("opposite of an admissible algebra is admissible"),
            )
        })
    }

    /// Path reversed into the opposite quiver.
    pub fn reverse_path(&self, p: &Path) -> Path {
        let mut arrows = p.arrows.clone();
        arrows.reverse();
        Path { start: self.quiver.end(p), arrows }
    }

    /// Same algebra over another field (relations re-embedded).
    pub fn with_field(&self, field: Field) -> Result<BoundQuiverAlgebra, AlgebraError> {
        let rels = self
            .relations
            .iter()
            .map(|r| {
                let terms = r
                    .terms
                    .iter()
                    .map(|(c, p)| {
                        field
                            .embed(c)
                            .map(|c| (c, p.clone()))
                            .map_err(|e| AlgebraError::MalformedRelation(e.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(RelationSpec { terms })
            })
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        BoundQuiverAlgebra::build(self.quiver.clone(), rels, field, self.length_bound)
    }
}

fn validate_relation(q: &Quiver, ri: usize, rel: &RelationSpec) -> Result<(), AlgebraError> {
    let bad = |msg: String| Err(AlgebraError::MalformedRelation(format!("relation {ri}: {msg}")));
    let Some((_, first)) = rel.terms.first() else {
        return bad("no terms".into());
    };
    let (s, e) = (first.start, q.end(first));
    for (c, p) in &rel.terms {
        if !q.composes(p) {
            return bad(format!("path {} does not compose", q.display_path(p)));
        }
        if p.len() < 2 {
            return bad(format!("path {} has length < 2", q.display_path(p)));
        }
        if p.start != s || q.end(p) != e {
            return bad("paths are not parallel".into());
        }
        if c.is_zero() {
            return bad("zero coefficient".into());
        }
    }
    Ok(())
}

/// A block path as a combination of basis paths.
type Reduction = Vec<(Path, Scalar)>;

/// Quotients one (start, end) block of path space by the ideal; returns the
/// basis paths and the reduction of every block path.
fn reduce_block(
    q: &Quiver,
    relations: &[RelationSpec],
    field: Field,
    bound: usize,
    paths_from: &[Vec<Path>],
    block: &[&Path],
) -> (Vec<Path>, Vec<(Path, Reduction)>) {
    let s = block[0].start;
    let e = q.end(block[0]);
    // columns ordered largest-first so pivots land on the largest paths
    let mut cols: Vec<&Path> = block.to_vec();
    cols.sort_by(|a, b| b.key().cmp(&a.key()));
    let col_of: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (*p, i)).collect();

    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for rel in relations {
        let rs = rel.terms[0].1.start;
        let re = q.end(&rel.terms[0].1);
        let min_len = rel.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
        for u in paths_from[s].iter().filter(|u| q.end(u) == rs) {
            for v in paths_from[re].iter().filter(|v| q.end(v) == e) {
                if u.len() + v.len() + min_len > bound {
                    continue;
                }
                let mut row = vec![Scalar::ZERO; cols.len()];
                let mut any = false;
                for (c, p) in &rel.terms {
                    let full = concat(q, &concat(q, u, p).unwrap(), v).unwrap();
                    if full.len() > bound {
                        continue;
                    }
                    let j = col_of[&full];
                    row[j] = field.add(&row[j], c);
                    any = true;
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let ncols = cols.len();
    let m = if rows.is_empty() { Mat::zeros(field, 0, ncols) } else { Mat::from_rows(field, rows) };
    let rr = m.rref();
    let pivots = &rr.pivots;
    let mut basis: Vec<Path> = (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|c| cols[c].clone())
        .collect();
    basis.sort_by(|a, b| a.key().cmp(&b.key()));

    let mut out = Vec::with_capacity(ncols);
    for (c, p) in cols.iter().enumerate() {
        if let Some(r) = pivots.iter().position(|&pc| pc == c) {
            let red = &rr.reduced;
            let combo = (0..ncols)
                .filter(|fc| !pivots.contains(fc))
                .filter(|&fc| !red.get(r, fc).is_zero())
                .map(|fc| (cols[fc].clone(), field.neg(red.get(r, fc))))
                .collect();
            out.push(((*p).clone(), combo));
        } else {
            out.push(((*p).clone(), vec![((*p).clone(), Scalar::ONE)]));
        }
    }
    (basis, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn a2_has_dim_3() {
        let a = fixtures::a2(Field::Rationals);
        assert_eq!(a.dim(), 3);
        assert_eq!(a.opposite().dim(), 3);
    }

    #[test]
    fn loop2_basis() {
        let a = fixtures::loop2(Field::Rationals);
        let names: Vec<String> = a.basis().iter().map(|p| a.quiver().display_path(p)).collect();
        assert_eq!(names, vec!["e1", "e2", "alpha", "beta"]);
        let q = a.quiver();
        let ab = q.path("1", &["alpha", "beta"]).unwrap();
        let aa = q.path("1", &["alpha", "alpha"]).unwrap();
        let one = Scalar::ONE;
        assert!(a.normal_form(&[(one.clone(), ab)]).unwrap().iter().all(Scalar::is_zero));
        assert!(a.normal_form(&[(one.clone(), aa)]).unwrap().iter().all(Scalar::is_zero));
        let e1 = a.normal_form(&[(one, Path::stationary(0))]).unwrap();
        assert_eq!(e1[0], Scalar::ONE);
        assert!(e1[1..].iter().all(Scalar::is_zero));
    }

    #[test]
    fn loop2_opposite() {
        let a = fixtures::loop2(Field::Rationals);
        let op = a.opposite();
        assert_eq!(op.dim(), 4);
        let q = op.quiver();
        // beta now runs 2 -> 1 and the surviving relation reads beta·alpha
        assert_eq!(q.arrows()[1].source, 1);
        let ba = q.path("2", &["beta", "alpha"]).unwrap();
        assert!(op.normal_form(&[(Scalar::ONE, ba)]).unwrap().iter().all(Scalar::is_zero));
        let back = op.opposite();
        let lens = |x: &BoundQuiverAlgebra| x.basis().iter().map(Path::len).collect::<Vec<_>>();
        assert_eq!(lens(back), lens(&a));
    }

    #[test]
    fn tilted5_dimension() {
        // 15 paths on the linear quiver, minus the one killed path
        assert_eq!(fixtures::tilted5(Field::Rationals).dim(), 14);
    }

    #[test]
    fn rejects_short_relation() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let p = q.path("1", &["a"]).unwrap();
        let err = BoundQuiverAlgebra::build(q, vec![RelationSpec::monomial(p)], Field::Rationals, 2);
        assert!(matches!(err, Err(AlgebraError::MalformedRelation(_))));
    }

    #[test]
    fn rejects_non_admissible() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let err = BoundQuiverAlgebra::build(q, vec![], Field::Rationals, 3);
        assert!(matches!(err, Err(AlgebraError::NotAdmissible { .. })));
    }

    #[test]
    fn commutativity_relation() {
        // square 1->2->4, 1->3->4 with ab - cd
        let q = Quiver::new(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let ab = q.path("1", &["a", "b"]).unwrap();
        let cd = q.path("1", &["c", "d"]).unwrap();
        let f = Field::Rationals;
        let rel = RelationSpec { terms: vec![(Scalar::ONE, ab.clone()), (f.from_i64(-1), cd.clone())] };
        let a = BoundQuiverAlgebra::build(q, vec![rel], f, 3).unwrap();
        assert_eq!(a.dim(), 4 + 4 + 1);
        let x = a.normal_form(&[(Scalar::ONE, ab)]).unwrap();
        let y = a.normal_form(&[(Scalar::ONE, cd)]).unwrap();
        assert_eq!(x, y);
        assert!(x.iter().any(|s| !s.is_zero()));
    }

    #[test]
    fn basis_products_are_associative() {
        for a in fixtures::all(Field::Rationals) {
            let f = a.field();
            let n = a.dim();
            let times = |x: &[Scalar], b: usize| {
                let mut out = vec![Scalar::ZERO; n];
                for (i, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (k, v) in a.multiply_basis(i, b) {
                        out[k] = f.mul_add(&out[k], c, &v);
                    }
                }
                out
            };
            let unit = |i: usize| {
                let mut v = vec![Scalar::ZERO; n];
                v[i] = Scalar::ONE;
                v
            };
            for i in 0..n {
                for j in 0..n {
                    let ij = times(&unit(i), j);
                    for k in 0..n {
                        let left = times(&ij, k);
                        let mut right = vec![Scalar::ZERO; n];
                        for (m, c) in a.multiply_basis(j, k) {
                            let t = times(&unit(i), m);
                            for (r, v) in t.iter().enumerate() {
                                right[r] = f.mul_add(&right[r], &c, v);
                            }
                        }
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }
}
