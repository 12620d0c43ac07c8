//! Representations of a quiver shape, morphisms between them and the basic
//! constructions (kernels, cokernels, sums, radical, socle, duals).

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{BoundQuiverAlgebra, Shape};
use crate::field::{Field, Scalar};
use crate::linalg::{Mat, SparseEchelon};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("arrow maps violate the relations")]
    RelationViolated,
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("not a module morphism: {0}")]
    NotAMorphism(String),
    #[error("cannot sum modules over different algebras")]
    MixedAlgebras,
}

/// A representation: a vector space per vertex and a matrix per arrow,
/// `maps[a]` of size `dims[target] x dims[source]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    shape: Arc<Shape>,
    field: Field,
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

impl Rep {
    pub fn new(shape: Arc<Shape>, field: Field, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Rep, RepError> {
        if dims.len() != shape.vertices {
            return Err(RepError::ShapeMismatch(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                shape.vertices
            )));
        }
        if maps.len() != shape.arrows.len() {
            return Err(RepError::ShapeMismatch(format!(
                "{} maps for {} arrows",
                maps.len(),
                shape.arrows.len()
            )));
        }
        for (a, (&(s, t), m)) in shape.arrows.iter().zip(&maps).enumerate() {
            if m.shape() != (dims[t], dims[s]) {
                return Err(RepError::ShapeMismatch(format!(
                    "arrow {a} has a {}x{} map, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    dims[t],
                    dims[s]
                )));
            }
        }
        Ok(Rep { shape, field, dims, maps })
    }

    /// Validated module over a bound quiver algebra.
    pub fn over(alg: &BoundQuiverAlgebra, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Rep, RepError> {
        let m = Rep::new(alg.shape().clone(), alg.field(), dims, maps)?;
        if !alg.satisfies_relations(&m.dims, &m.maps) {
            return Err(RepError::RelationViolated);
        }
        Ok(m)
    }

    pub fn zero(shape: Arc<Shape>, field: Field) -> Rep {
        let dims = vec![0; shape.vertices];
        let maps = shape.arrows.iter().map(|_| Mat::zeros(field, 0, 0)).collect();
        Rep { shape, field, dims, maps }
    }

    pub fn simple(shape: Arc<Shape>, field: Field, v: usize) -> Rep {
        let mut dims = vec![0; shape.vertices];
        dims[v] = 1;
        let maps = shape.arrows.iter().map(|&(s, t)| Mat::zeros(field, dims[t], dims[s])).collect();
        Rep { shape, field, dims, maps }
    }

    pub fn shape(&self) -> &Arc<Shape> {
        &self.shape
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Mat {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    /// Start offset of each vertex in the flattened total space.
    pub fn offsets(&self) -> Vec<usize> {
        self.dims
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect()
    }

    fn same_shape(&self, other: &Rep) -> bool {
        Arc::ptr_eq(&self.shape, &other.shape) || self.shape == other.shape
    }

    /// Same data on an equal shape (e.g. the opposite of the opposite).
    pub fn retag(self, shape: Arc<Shape>) -> Rep {
        assert_eq!(*shape, *self.shape, "retag onto a different shape");
        Rep { shape, ..self }
    }

    /// Vector-space dual, a representation of the opposite shape.
    pub fn dual(&self, opposite: Arc<Shape>) -> Rep {
        debug_assert_eq!(*opposite, self.shape.opposite());
        Rep {
            shape: opposite,
            field: self.field,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Mat::transpose).collect(),
        }
    }
}

/// `e_v A`, spanned by the basis paths starting at `v`.
pub fn projective_at(alg: &BoundQuiverAlgebra, v: usize) -> Rep {
    let f = alg.field();
    let q = alg.quiver();
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|j| alg.paths_between(v, j).len()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Mat::zeros(f, dims[a.target], dims[a.source]);
            for (c, &b) in alg.paths_between(v, a.source).iter().enumerate() {
                for (k, s) in alg.times_arrow(b, ai) {
                    m.set(alg.local_index(k), c, s);
                }
            }
            m
        })
        .collect();
    Rep { shape: alg.shape().clone(), field: f, dims, maps }
}

/// `D(A e_v)`, the dual of the opposite projective.
pub fn injective_at(alg: &BoundQuiverAlgebra, v: usize) -> Rep {
    projective_at(alg.opposite(), v).dual(alg.shape().clone())
}

pub fn simple_at(alg: &BoundQuiverAlgebra, v: usize) -> Rep {
    Rep::simple(alg.shape().clone(), alg.field(), v)
}

/// Per-vertex linear maps; `maps[v]` is `dim N_v x dim M_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub maps: Vec<Mat>,
}

impl Morphism {
    pub fn zero(source: &Rep, target: &Rep) -> Morphism {
        let f = source.field;
        Morphism { maps: (0..source.dims.len()).map(|v| Mat::zeros(f, target.dims[v], source.dims[v])).collect() }
    }

    pub fn identity(m: &Rep) -> Morphism {
        Morphism { maps: m.dims.iter().map(|&d| Mat::identity(m.field, d)).collect() }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Morphism) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul(f)).collect() }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Morphism {
        Morphism { maps: self.maps.iter().map(|m| m.scale(s)).collect() }
    }

    pub fn neg(&self) -> Morphism {
        let f = self.maps.first().map_or(Field::Rationals, Mat::field);
        self.scale(&f.from_i64(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Mat::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Mat::rank).sum()
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Mat::is_invertible)
    }

    pub fn is_mono(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn inverse(&self) -> Option<Morphism> {
        self.maps.iter().map(Mat::inverse).collect::<Option<Vec<_>>>().map(|maps| Morphism { maps })
    }

    /// Transposed maps: `D N -> D M`.
    pub fn dual(&self) -> Morphism {
        Morphism { maps: self.maps.iter().map(Mat::transpose).collect() }
    }

    /// Checks every commuting square `f_t M_a = N_a f_s`.
    pub fn commutes(&self, source: &Rep, target: &Rep) -> bool {
        self.maps.len() == source.dims.len()
            && self.maps.iter().enumerate().all(|(v, m)| m.shape() == (target.dims[v], source.dims[v]))
            && source.shape.arrows.iter().enumerate().all(|(a, &(s, t))| {
                self.maps[t].mul(&source.maps[a]) == target.maps[a].mul(&self.maps[s])
            })
    }

    /// `[f_1 f_2 ...]: X_1 ⊕ X_2 ⊕ ... -> M`.
    pub fn row(parts: &[Morphism], sources: &[&Rep], target: &Rep) -> Morphism {
        let f = target.field;
        let maps = (0..target.dims.len())
            .map(|v| {
                let blocks: Vec<&Mat> = parts.iter().map(|p| &p.maps[v]).collect();
                let m = Mat::hstack(&blocks, f, target.dims[v]);
                debug_assert_eq!(m.cols(), sources.iter().map(|s| s.dims[v]).sum::<usize>());
                m
            })
            .collect();
        Morphism { maps }
    }

    /// `(f_1, f_2, ...)ᵀ: M -> X_1 ⊕ X_2 ⊕ ...`.
    pub fn column(parts: &[Morphism], source: &Rep) -> Morphism {
        let f = source.field;
        let maps = (0..source.dims.len())
            .map(|v| {
                let blocks: Vec<&Mat> = parts.iter().map(|p| &p.maps[v]).collect();
                Mat::vstack(&blocks, f, source.dims[v])
            })
            .collect();
        Morphism { maps }
    }

    /// Flattened row-major entries, vertex by vertex.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }
}

/// A basis of `Hom(M, N)` with cheap coordinate extraction.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub basis: Vec<Morphism>,
    free: Vec<usize>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of a morphism known to lie in this space.
    pub fn coords(&self, f: &Morphism) -> Vec<Scalar> {
        let flat = f.flatten();
        self.free.iter().map(|&i| flat[i].clone()).collect()
    }

    /// `(vertex, row, column)` of each free entry, for morphisms `source -> target`.
    pub fn free_entries(&self, source: &Rep, target: &Rep) -> Vec<(usize, usize, usize)> {
        let sizes: Vec<usize> = source.dims.iter().zip(&target.dims).map(|(s, t)| s * t).collect();
        self.free
            .iter()
            .map(|&i| {
                let mut rest = i;
                let v = sizes.iter().position(|&s| if rest < s { true } else { rest -= s; false }).expect("in range");
                (v, rest / source.dims[v], rest % source.dims[v])
            })
            .collect()
    }

    pub fn combine(&self, coeffs: &[Scalar], source: &Rep, target: &Rep) -> Morphism {
        coeffs
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| !c.is_zero())
            .fold(Morphism::zero(source, target), |acc, (c, b)| acc.add(&b.scale(c)))
    }
}

/// The linear system cut out by `Hom(M, N)`, solved in echelon form.
#[derive(Clone, Debug)]
pub struct HomSystem {
    echelon: SparseEchelon,
    source: Vec<usize>,
    target: Vec<usize>,
    field: Field,
}

impl HomSystem {
    pub fn dim(&self) -> usize {
        self.echelon.free_columns().len()
    }

    fn morphism(&self, flat: &[Scalar]) -> Morphism {
        let mut at = 0;
        let maps = self
            .source
            .iter()
            .zip(&self.target)
            .map(|(&s, &t)| {
                let mut mv = Mat::zeros(self.field, t, s);
                for r in 0..t {
                    for c in 0..s {
                        mv.set(r, c, flat[at].clone());
                        at += 1;
                    }
                }
                mv
            })
            .collect();
        Morphism { maps }
    }

    /// The morphism with the given coordinates.
    pub fn element(&self, coords: &[Scalar]) -> Morphism {
        self.morphism(&self.echelon.solution(coords))
    }

    pub fn basis(&self) -> HomSpace {
        let basis = self.echelon.kernel().iter().map(|v| self.morphism(v)).collect();
        HomSpace { basis, free: self.echelon.free_columns() }
    }
}

pub fn hom_basis(m: &Rep, n: &Rep) -> HomSpace {
    hom_system(m, n).basis()
}

pub fn hom_system(m: &Rep, n: &Rep) -> HomSystem {
    let f = m.field;
    let nv = m.dims.len();
    let mut off = vec![0; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    }
    let vars = off[nv];
    let var = |v: usize, r: usize, c: usize| off[v] + r * m.dims[v] + c;
    let mut system = SparseEchelon::new(f, vars);
    for (a, &(s, t)) in m.shape.arrows.iter().enumerate() {
        let ma = &m.maps[a];
        let na = &n.maps[a];
        let ma_cols: Vec<Vec<(usize, &Scalar)>> = (0..m.dims[s])
            .map(|c| (0..m.dims[t]).map(|k| (k, ma.get(k, c))).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        // (f_t M_a - N_a f_s)[r][c] = 0
        for r in 0..n.dims[t] {
            let na_row: Vec<(usize, &Scalar)> =
                (0..n.dims[s]).map(|k| (k, na.get(r, k))).filter(|(_, x)| !x.is_zero()).collect();
            for (c, mcol) in ma_cols.iter().enumerate() {
                let mut row: Vec<(usize, Scalar)> = Vec::with_capacity(mcol.len() + na_row.len());
                row.extend(mcol.iter().map(|&(k, x)| (var(t, r, k), x.clone())));
                row.extend(na_row.iter().map(|&(k, x)| (var(s, k, c), f.neg(x))));
                if row.is_empty() {
                    continue;
                }
                row.sort_by_key(|e| e.0);
                // s == t (loops) can hit the same variable twice
                let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(row.len());
                for (i, x) in row {
                    match merged.last_mut() {
                        Some(last) if last.0 == i => last.1 = f.add(&last.1, &x),
                        _ => merged.push((i, x)),
                    }
                }
                system.push(merged);
            }
        }
    }
    HomSystem { echelon: system, source: m.dims.clone(), target: n.dims.clone(), field: f }
}

/// Column span in canonical form: the pivot rows of `basis` form an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub basis: Mat,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(m: &Mat) -> Subspace {
        let rr = m.transpose().rref();
        let k = rr.rank;
        let basis = rr.reduced.select_rows(&(0..k).collect::<Vec<_>>()).transpose();
        let basis = if k == 0 { Mat::zeros(m.field(), m.rows(), 0) } else { basis };
        Subspace { basis, pivots: rr.pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates of a vector assumed to lie in the span.
    pub fn coords_of(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let f = self.basis.field();
        let c = self.coords_of(v);
        let back = self.basis.mul_vec(&c);
        back.iter().zip(v).all(|(a, b)| f.sub(a, b).is_zero())
    }

    /// Coordinates of each column of `m` (columns assumed in the span).
    pub fn coords_matrix(&self, m: &Mat) -> Mat {
        m.select_rows(&self.pivots)
    }

    /// Projection onto the complement spanned by the non-pivot unit vectors.
    fn quotient_map(&self) -> (Mat, Vec<usize>) {
        let f = self.basis.field();
        let n = self.basis.rows();
        let rest: Vec<usize> = (0..n).filter(|i| !self.pivots.contains(i)).collect();
        let mut q = Mat::zeros(f, rest.len(), n);
        for (k, &j) in rest.iter().enumerate() {
            q.set(k, j, Scalar::ONE);
            for (r, &p) in self.pivots.iter().enumerate() {
                let x = self.basis.get(j, r);
                if !x.is_zero() {
                    q.set(k, p, f.neg(x));
                }
            }
        }
        (q, rest)
    }
}

/// Subrepresentation spanned per vertex by the columns of `spans[v]`, which
/// must be closed under the arrow maps.
pub fn subrep(m: &Rep, spans: &[Mat]) -> (Rep, Morphism) {
    let subs: Vec<Subspace> = spans.iter().map(Subspace::span).collect();
    let dims: Vec<usize> = subs.iter().map(Subspace::dim).collect();
    let maps = m
        .shape
        .arrows
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| subs[t].coords_matrix(&m.maps[a].mul(&subs[s].basis)))
        .collect();
    let sub = Rep { shape: m.shape.clone(), field: m.field, dims, maps };
    let incl = Morphism { maps: subs.into_iter().map(|s| s.basis).collect() };
    debug_assert!(incl.commutes(&sub, m));
    (sub, incl)
}

/// Quotient by the subrepresentation spanned by `spans[v]`.
pub fn quotient(m: &Rep, spans: &[Mat]) -> (Rep, Morphism) {
    let subs: Vec<Subspace> = spans.iter().map(Subspace::span).collect();
    let qs: Vec<(Mat, Vec<usize>)> = subs.iter().map(Subspace::quotient_map).collect();
    let dims: Vec<usize> = qs.iter().map(|(_, r)| r.len()).collect();
    let maps = m
        .shape
        .arrows
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| qs[t].0.mul(&m.maps[a].select_columns(&qs[s].1)))
        .collect();
    let quo = Rep { shape: m.shape.clone(), field: m.field, dims, maps };
    let proj = Morphism { maps: qs.into_iter().map(|(q, _)| q).collect() };
    debug_assert!(proj.commutes(m, &quo));
    (quo, proj)
}

pub fn kernel_of(source: &Rep, f: &Morphism) -> (Rep, Morphism) {
    let spans: Vec<Mat> = f.maps.iter().map(Mat::kernel_basis).collect();
    subrep(source, &spans)
}

pub fn image_of(target: &Rep, f: &Morphism) -> (Rep, Morphism) {
    let spans: Vec<Mat> = f.maps.iter().map(Mat::column_space).collect();
    subrep(target, &spans)
}

pub fn cokernel_of(target: &Rep, f: &Morphism) -> (Rep, Morphism) {
    let spans: Vec<Mat> = f.maps.iter().map(Mat::column_space).collect();
    quotient(target, &spans)
}

pub fn direct_sum(shape: &Arc<Shape>, field: Field, parts: &[&Rep]) -> Result<Rep, RepError> {
    if parts.iter().any(|p| !(Arc::ptr_eq(&p.shape, shape) || *p.shape == **shape) || p.field != field) {
        return Err(RepError::MixedAlgebras);
    }
    let nv = shape.vertices;
    let dims = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let maps = (0..shape.arrows.len())
        .map(|a| {
            let blocks: Vec<&Mat> = parts.iter().map(|p| &p.maps[a]).collect();
            Mat::block_diag(&blocks, field)
        })
        .collect();
    Ok(Rep { shape: shape.clone(), field, dims, maps })
}

/// Sum together with its structure maps.
pub struct SumData {
    pub sum: Rep,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

pub fn direct_sum_with_maps(shape: &Arc<Shape>, field: Field, parts: &[&Rep]) -> Result<SumData, RepError> {
    let sum = direct_sum(shape, field, parts)?;
    let nv = shape.vertices;
    let mut offs = vec![0usize; nv];
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    for p in parts {
        let mut inj = Vec::with_capacity(nv);
        let mut proj = Vec::with_capacity(nv);
        for (v, off) in offs.iter_mut().enumerate() {
            let mut i = Mat::zeros(field, sum.dims[v], p.dims[v]);
            i.put_block(*off, 0, &Mat::identity(field, p.dims[v]));
            proj.push(i.transpose());
            inj.push(i);
            *off += p.dims[v];
        }
        injections.push(Morphism { maps: inj });
        projections.push(Morphism { maps: proj });
    }
    Ok(SumData { sum, injections, projections })
}

impl Rep {
    pub fn same_shape_as(&self, other: &Rep) -> bool {
        self.same_shape(other) && self.field == other.field
    }
}

/// Sum of the images of all arrow maps.
pub fn radical_of(m: &Rep) -> (Rep, Morphism) {
    let f = m.field;
    let spans: Vec<Mat> = (0..m.dims.len())
        .map(|v| {
            let ins: Vec<&Mat> =
                m.shape.arrows.iter().enumerate().filter(|(_, &(_, t))| t == v).map(|(a, _)| &m.maps[a]).collect();
            Mat::hstack(&ins, f, m.dims[v])
        })
        .collect();
    subrep(m, &spans)
}

/// Joint kernel of all arrow maps.
pub fn socle_of(m: &Rep) -> (Rep, Morphism) {
    let f = m.field;
    let spans: Vec<Mat> = (0..m.dims.len())
        .map(|v| {
            let outs: Vec<&Mat> =
                m.shape.arrows.iter().enumerate().filter(|(_, &(s, _))| s == v).map(|(a, _)| &m.maps[a]).collect();
            Mat::vstack(&outs, f, m.dims[v]).kernel_basis()
        })
        .collect();
    subrep(m, &spans)
}

pub fn top_of(m: &Rep) -> (Rep, Morphism) {
    let (_, incl) = radical_of(m);
    quotient(m, &incl.maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn a2_projectives_and_injectives() {
        let a = fixtures::a2(q());
        assert_eq!(projective_at(&a, 0).dims(), &[1, 1]);
        assert_eq!(projective_at(&a, 1).dims(), &[0, 1]);
        assert_eq!(injective_at(&a, 0).dims(), &[1, 0]);
        assert_eq!(injective_at(&a, 1).dims(), &[1, 1]);
        assert!(!projective_at(&a, 0).map(0).is_zero());
    }

    #[test]
    fn loop2_projectives_and_injectives() {
        let a = fixtures::loop2(q());
        assert_eq!(projective_at(&a, 0).dims(), &[2, 1]);
        assert_eq!(projective_at(&a, 1).dims(), &[0, 1]);
        assert_eq!(injective_at(&a, 0).dims(), &[2, 0]);
        assert_eq!(injective_at(&a, 1).dims(), &[1, 1]);
        for v in 0..2 {
            assert!(a.satisfies_relations(projective_at(&a, v).dims(), projective_at(&a, v).maps()));
            assert!(a.satisfies_relations(injective_at(&a, v).dims(), injective_at(&a, v).maps()));
        }
    }

    #[test]
    fn tilted4_dims() {
        let a = fixtures::tilted4(q());
        assert_eq!(projective_at(&a, 3).dims(), &[0, 1, 1, 1]);
        assert_eq!(injective_at(&a, 0).dims(), &[1, 1, 1, 0]);
    }

    #[test]
    fn yoneda_dimensions() {
        for a in fixtures::all(q()) {
            let n = a.vertex_count();
            let mods: Vec<Rep> = (0..n)
                .flat_map(|v| [projective_at(&a, v), injective_at(&a, v), simple_at(&a, v)])
                .collect();
            for m in &mods {
                for v in 0..n {
                    assert_eq!(hom_basis(&projective_at(&a, v), m).dim(), m.dim_at(v));
                    assert_eq!(hom_basis(m, &injective_at(&a, v)).dim(), m.dim_at(v));
                }
            }
        }
    }

    #[test]
    fn tilted4_hom_from_injectives() {
        let a = fixtures::tilted4(q());
        let s2 = simple_at(&a, 1);
        assert_eq!(hom_basis(&injective_at(&a, 0), &s2).dim(), 1);
        assert_eq!(hom_basis(&injective_at(&a, 1), &s2).dim(), 0);
    }

    #[test]
    fn hom_basis_elements_commute_and_coords_roundtrip() {
        let a = fixtures::loop2(q());
        let p1 = projective_at(&a, 0);
        let sum = direct_sum(a.shape(), q(), &[&p1, &injective_at(&a, 0)]).unwrap();
        let h = hom_basis(&sum, &sum);
        for (i, b) in h.basis.iter().enumerate() {
            assert!(b.commutes(&sum, &sum));
            let c = h.coords(b);
            assert!(c.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }));
        }
    }

    #[test]
    fn kernel_cokernel_trivia() {
        let a = fixtures::loop2(q());
        let m = projective_at(&a, 0);
        let (k, _) = kernel_of(&m, &Morphism::identity(&m));
        assert!(k.is_zero());
        let z = Rep::zero(a.shape().clone(), q());
        let (c, _) = cokernel_of(&m, &Morphism::zero(&z, &m));
        assert_eq!(c, m);
    }

    #[test]
    fn kernel_of_injective_evaluation() {
        let a = fixtures::loop2(q());
        let s1 = simple_at(&a, 0);
        let i1 = injective_at(&a, 0);
        let i2 = injective_at(&a, 1);
        let sum = direct_sum(a.shape(), q(), &[&i1, &i2]).unwrap();
        // surjection onto S(1) using one nonzero map from each piece
        let f1 = hom_basis(&i1, &s1).basis[0].clone();
        let f2 = hom_basis(&i2, &s1).basis[0].clone();
        let f = Morphism::row(&[f1, f2], &[&i1, &i2], &s1);
        assert!(f.commutes(&sum, &s1));
        let (k, incl) = kernel_of(&sum, &f);
        assert_eq!(k.dims(), &[2, 1]);
        assert!(f.after(&incl).is_zero());
    }

    #[test]
    fn sums() {
        let a = fixtures::a2(q());
        assert!(direct_sum(a.shape(), q(), &[]).unwrap().is_zero());
        let s = direct_sum(a.shape(), q(), &[&projective_at(&a, 0), &projective_at(&a, 1)]).unwrap();
        assert_eq!(s.dims(), &[1, 2]);
        let l = fixtures::loop2(q());
        let parts: Vec<Rep> =
            (0..2).flat_map(|v| [projective_at(&l, v), injective_at(&l, v)]).collect();
        let refs: Vec<&Rep> = parts.iter().collect();
        assert_eq!(direct_sum(l.shape(), q(), &refs).unwrap().dims(), &[5, 3]);
    }

    #[test]
    fn radical_socle_top() {
        let a = fixtures::loop2(q());
        assert!(radical_of(&simple_at(&a, 0)).0.is_zero());
        let (r, _) = radical_of(&projective_at(&a, 0));
        assert_eq!(r.dims(), &[1, 1]);
        let (s, _) = socle_of(&injective_at(&a, 0));
        assert_eq!(s.dims(), &[1, 0]);
        let (t, p) = top_of(&projective_at(&a, 0));
        assert_eq!(t.dims(), &[1, 0]);
        assert!(p.is_epi());
    }

    #[test]
    fn quotient_projection_is_exact() {
        let a = fixtures::tilted5(q());
        let m = projective_at(&a, 4);
        let (r, incl) = radical_of(&m);
        let (t, p) = quotient(&m, &incl.maps);
        assert!(p.after(&incl).is_zero());
        assert_eq!(r.total_dim() + t.total_dim(), m.total_dim());
    }
}
