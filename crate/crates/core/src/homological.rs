//! Covers, syzygies, homological dimensions, Auslander–Reiten translates,
//! Ext¹, almost split sequences and minimal approximations.

use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{BoundQuiverAlgebra, Shape};
use crate::decompose::{is_isomorphic, iso_indecomposable};
use crate::endo::{algebra_radical, endomorphism_algebra, EndoError};
use crate::field::{Field, Scalar};
use crate::linalg::Mat;
use crate::rep::{
    cokernel_of, direct_sum, direct_sum_with_maps, hom_basis, hom_system, kernel_of, projective_at, radical_of,
    subrep, HomSpace, Morphism, Rep, Subspace,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologicalError {
    #[error("module is projective; no almost split sequence ends in it")]
    ZProjective,
    #[error("module is injective; no almost split sequence starts in it")]
    XInjective,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Endo(#[from] EndoError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DimValue {
    Finite(usize),
    Infinite,
    /// the search horizon ran out; the dimension is at least this
    AtLeast(usize),
}

impl DimValue {
    pub fn max_of(values: &[DimValue]) -> DimValue {
        use DimValue::*;
        values.iter().fold(Finite(0), |acc, &v| match (acc, v) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (AtLeast(a), AtLeast(b)) | (AtLeast(a), Finite(b)) | (Finite(a), AtLeast(b)) => AtLeast(a.max(b)),
            (Finite(a), Finite(b)) => Finite(a.max(b)),
        })
    }

    pub fn at_most(self, n: usize) -> Option<bool> {
        match self {
            DimValue::Finite(d) => Some(d <= n),
            DimValue::Infinite => Some(false),
            DimValue::AtLeast(b) if b > n => Some(false),
            DimValue::AtLeast(_) => None,
        }
    }
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::Finite(n) => write!(f, "{n}"),
            DimValue::Infinite => write!(f, "inf"),
            DimValue::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

/// An algebra whose indecomposable projectives and the maps out of them
/// are available. Implemented by bound quiver algebras and basic abstract
/// algebras.
pub trait Presentation: Sync {
    fn shape(&self) -> &Arc<Shape>;
    fn field(&self) -> Field;
    fn algebra_dim(&self) -> usize;
    fn projective(&self, v: usize) -> Rep;
    /// The morphism `P(v) -> target` sending the generator to `m ∈ target_v`.
    fn hom_from_projective(&self, v: usize, target: &Rep, m: &[Scalar]) -> Morphism;
}

impl Presentation for BoundQuiverAlgebra {
    fn shape(&self) -> &Arc<Shape> {
        BoundQuiverAlgebra::shape(self)
    }

    fn field(&self) -> Field {
        BoundQuiverAlgebra::field(self)
    }

    fn algebra_dim(&self) -> usize {
        self.dim()
    }

    fn projective(&self, v: usize) -> Rep {
        projective_at(self, v)
    }

    fn hom_from_projective(&self, v: usize, target: &Rep, m: &[Scalar]) -> Morphism {
        let f = BoundQuiverAlgebra::field(self);
        let maps = (0..self.vertex_count())
            .map(|b| {
                let cols: Vec<Vec<Scalar>> = self
                    .paths_between(v, b)
                    .iter()
                    .map(|&p| {
                        self.basis()[p].arrows.iter().fold(m.to_vec(), |x, &a| target.map(a).mul_vec(&x))
                    })
                    .collect();
                Mat::from_columns(f, target.dim_at(b), &cols)
            })
            .collect();
        Morphism { maps }
    }
}

/// Projective cover `P_0 -> M`; summand `k` is `P(vertices[k])` with its
/// generator at position `generators[k]` of `P_0` at that vertex.
#[derive(Clone, Debug)]
pub struct Cover {
    pub source: Rep,
    pub map: Morphism,
    pub vertices: Vec<usize>,
    pub generators: Vec<usize>,
}

/// Sum of projectives with each summand's generator position.
fn sum_of_projectives<P: Presentation + ?Sized>(p: &P, vertices: &[usize]) -> (Rep, Vec<Rep>, Vec<usize>) {
    let parts: Vec<Rep> = vertices.iter().map(|&v| p.projective(v)).collect();
    let refs: Vec<&Rep> = parts.iter().collect();
    let sum = direct_sum(p.shape(), p.field(), &refs).expect("same algebra");
    let mut offs = vec![0usize; p.shape().vertices];
    let mut gens = Vec::with_capacity(vertices.len());
    for (part, &v) in parts.iter().zip(vertices) {
        gens.push(offs[v]);
        for (o, d) in offs.iter_mut().zip(part.dims()) {
            *o += d;
        }
    }
    (sum, parts, gens)
}

pub fn projective_cover<P: Presentation + ?Sized>(p: &P, m: &Rep) -> Cover {
    let (_, rad) = radical_of(m);
    let mut vertices = Vec::new();
    let mut tops: Vec<Vec<Scalar>> = Vec::new();
    for v in 0..m.dims().len() {
        let span = Subspace::span(&rad.maps[v]);
        for j in (0..m.dim_at(v)).filter(|j| !span.pivots.contains(j)) {
            let mut e = vec![Scalar::ZERO; m.dim_at(v)];
            e[j] = Scalar::ONE;
            vertices.push(v);
            tops.push(e);
        }
    }
    let (source, parts, generators) = sum_of_projectives(p, &vertices);
    let pieces: Vec<Morphism> =
        vertices.iter().zip(&tops).map(|(&v, t)| p.hom_from_projective(v, m, t)).collect();
    let srcs: Vec<&Rep> = parts.iter().collect();
    let map = Morphism::row(&pieces, &srcs, m);
    debug_assert!(map.commutes(&source, m) && map.is_epi());
    Cover { source, map, vertices, generators }
}

pub fn is_projective<P: Presentation + ?Sized>(p: &P, m: &Rep) -> bool {
    projective_cover(p, m).source.total_dim() == m.total_dim()
}

/// First syzygy with its inclusion into the cover.
pub fn syzygy_step<P: Presentation + ?Sized>(p: &P, m: &Rep) -> (Rep, Morphism, Cover) {
    let cover = projective_cover(p, m);
    let (omega, incl) = kernel_of(&cover.source, &cover.map);
    (omega, incl, cover)
}

pub fn syzygy<P: Presentation + ?Sized>(p: &P, m: &Rep, k: usize) -> Rep {
    (0..k).fold(m.clone(), |x, _| syzygy_step(p, &x).0)
}

/// `Finite(n)` once `Ω^n M` is projective, `Infinite` on a repeated
/// syzygy, `AtLeast(bound)` when neither shows up in time.
pub fn proj_dim<P: Presentation + ?Sized>(p: &P, m: &Rep, bound: usize) -> Result<DimValue, EndoError> {
    let mut seen: Vec<Rep> = Vec::new();
    let mut current = m.clone();
    for i in 0..bound.max(1) {
        if current.is_zero() {
            return Ok(DimValue::Finite(0));
        }
        let (omega, _, cover) = syzygy_step(p, &current);
        if cover.source.total_dim() == current.total_dim() {
            return Ok(DimValue::Finite(i));
        }
        for earlier in seen.iter().filter(|e| e.dims() == current.dims()) {
            if is_isomorphic(earlier, &current)? {
                return Ok(DimValue::Infinite);
            }
        }
        seen.push(current);
        current = omega;
    }
    Ok(DimValue::AtLeast(bound.max(1)))
}

/// Injective envelope `M -> I_0`, dual to the cover of `DM` over the
/// opposite algebra.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub target: Rep,
    pub map: Morphism,
    pub vertices: Vec<usize>,
}

pub fn injective_envelope(alg: &BoundQuiverAlgebra, m: &Rep) -> Envelope {
    let op = alg.opposite();
    let dm = m.dual(op.shape().clone());
    let cover = projective_cover(op, &dm);
    Envelope { target: cover.source.dual(alg.shape().clone()), map: cover.map.dual(), vertices: cover.vertices }
}

pub fn is_injective(alg: &BoundQuiverAlgebra, m: &Rep) -> bool {
    injective_envelope(alg, m).target.total_dim() == m.total_dim()
}

pub fn cosyzygy(alg: &BoundQuiverAlgebra, m: &Rep, k: usize) -> Rep {
    let op = alg.opposite();
    syzygy(op, &m.dual(op.shape().clone()), k).dual(alg.shape().clone())
}

pub fn inj_dim(alg: &BoundQuiverAlgebra, m: &Rep, bound: usize) -> Result<DimValue, EndoError> {
    let op = alg.opposite();
    proj_dim(op, &m.dual(op.shape().clone()), bound)
}

pub fn default_horizon(alg: &BoundQuiverAlgebra) -> usize {
    2 * alg.dim()
}

/// `Tr M`, a module over the opposite algebra, from a minimal projective
/// presentation `P_1 -> P_0 -> M -> 0`.
pub fn transpose(alg: &BoundQuiverAlgebra, m: &Rep) -> Rep {
    let op = alg.opposite();
    let f = alg.field();
    let n = alg.vertex_count();
    let (omega, incl, c0) = syzygy_step(alg, m);
    let c1 = projective_cover(alg, &omega);
    let g = incl.after(&c1.map);

    let op_p0: Vec<Rep> = c0.vertices.iter().map(|&v| projective_at(op, v)).collect();
    let op_p1: Vec<Rep> = c1.vertices.iter().map(|&w| projective_at(op, w)).collect();
    let src_refs: Vec<&Rep> = op_p0.iter().collect();
    let tgt_refs: Vec<&Rep> = op_p1.iter().collect();
    let source = direct_sum(op.shape(), f, &src_refs).expect("same algebra");
    let target = direct_sum(op.shape(), f, &tgt_refs).expect("same algebra");

    // offsets of P(v_k) inside P_0 at every vertex
    let mut p0_offsets: Vec<Vec<usize>> = Vec::with_capacity(c0.vertices.len());
    let mut acc = vec![0usize; n];
    for &v in &c0.vertices {
        p0_offsets.push(acc.clone());
        for (b, a) in acc.iter_mut().enumerate() {
            *a += alg.paths_between(v, b).len();
        }
    }

    let mut blocks: Vec<Vec<Morphism>> = Vec::with_capacity(c1.vertices.len());
    for (l, &w) in c1.vertices.iter().enumerate() {
        let mut gen = vec![Scalar::ZERO; c1.source.dim_at(w)];
        gen[c1.generators[l]] = Scalar::ONE;
        let image = g.maps[w].mul_vec(&gen);
        let row = c0
            .vertices
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                let paths = alg.paths_between(v, w);
                let off = p0_offsets[k][w];
                let combo: Vec<(Scalar, crate::algebra::Path)> = paths
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !image[off + i].is_zero())
                    .map(|(i, &p)| (image[off + i].clone(), alg.reverse_path(&alg.basis()[p])))
                    .collect();
                let nf = op.normal_form(&combo).expect("paths within the bound");
                let local: Vec<Scalar> = op.paths_between(w, v).iter().map(|&b| nf[b].clone()).collect();
                op.hom_from_projective(v, &op_p1[l], &local)
            })
            .collect();
        blocks.push(row);
    }
    let maps = (0..n)
        .map(|u| {
            let rows: Vec<Mat> = blocks
                .iter()
                .enumerate()
                .map(|(l, row)| {
                    let parts: Vec<&Mat> = row.iter().map(|m| &m.maps[u]).collect();
                    Mat::hstack(&parts, f, op_p1[l].dim_at(u))
                })
                .collect();
            let refs: Vec<&Mat> = rows.iter().collect();
            Mat::vstack(&refs, f, source.dim_at(u))
        })
        .collect();
    let h = Morphism { maps };
    debug_assert!(h.commutes(&source, &target));
    cokernel_of(&target, &h).0
}

/// `τ M = D Tr M`.
pub fn ar_translate(alg: &BoundQuiverAlgebra, m: &Rep) -> Rep {
    transpose(alg, m).dual(alg.shape().clone())
}

/// `τ⁻ M = Tr D M`.
pub fn ar_translate_inv(alg: &BoundQuiverAlgebra, m: &Rep) -> Rep {
    let op = alg.opposite();
    transpose(op, &m.dual(op.shape().clone())).retag(alg.shape().clone())
}

/// Morphisms `Ω M -> N` modulo those extending to the cover.
pub fn ext1_dim(alg: &BoundQuiverAlgebra, m: &Rep, n: &Rep) -> usize {
    let (omega, incl, cover) = syzygy_step(alg, m);
    let h = hom_basis(&omega, n);
    if h.is_empty() {
        return 0;
    }
    h.dim() - restriction_image(alg, &h, &omega, n, &cover, &incl).dim()
}

/// Span of the restrictions `ψ ∘ ι` of all `ψ: P_0 -> N`, in coordinates of
/// `h = Hom(Ω, N)`. Each `ψ` sends one generator of `P_0` to one basis
/// vector of `N`; only the free entries of `ψ ∘ ι` are evaluated.
fn restriction_image(
    alg: &BoundQuiverAlgebra,
    h: &HomSpace,
    omega: &Rep,
    n: &Rep,
    cover: &Cover,
    incl: &Morphism,
) -> Subspace {
    let f = alg.field();
    let nv = alg.vertex_count();
    let entries = h.free_entries(omega, n);
    let path_maps: Vec<Mat> = alg.basis().iter().map(|p| alg.path_matrix(p, n.dims(), n.maps())).collect();
    let mut offsets = vec![0usize; nv];
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for &v in &cover.vertices {
        for s in 0..n.dim_at(v) {
            let col = entries
                .iter()
                .map(|&(u, r, c)| {
                    alg.paths_between(v, u).iter().enumerate().fold(Scalar::ZERO, |acc, (i, &p)| {
                        let x = path_maps[p].get(r, s);
                        if x.is_zero() {
                            acc
                        } else {
                            f.mul_add(&acc, x, incl.maps[u].get(offsets[u] + i, c))
                        }
                    })
                })
                .collect();
            cols.push(col);
        }
        for (u, o) in offsets.iter_mut().enumerate() {
            *o += alg.paths_between(v, u).len();
        }
    }
    Subspace::span(&Mat::from_columns(f, h.dim(), &cols))
}

/// `h` with `h ∘ p = g`, when `g` vanishes on the kernel of the epi `p`.
pub fn factor_through_epi(p: &Morphism, g: &Morphism) -> Option<Morphism> {
    let maps = p
        .maps
        .iter()
        .zip(&g.maps)
        .map(|(pv, gv)| pv.transpose().solve(&gv.transpose()).ok().flatten().map(|h| h.transpose()))
        .collect::<Option<Vec<_>>>()?;
    Some(Morphism { maps })
}

#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub left: Rep,
    pub middle: Rep,
    pub right: Rep,
    pub iota: Morphism,
    pub pi: Morphism,
}

impl ShortExactSequence {
    pub fn is_exact(&self) -> bool {
        self.iota.commutes(&self.left, &self.middle)
            && self.pi.commutes(&self.middle, &self.right)
            && self.iota.is_mono()
            && self.pi.is_epi()
            && self.pi.after(&self.iota).is_zero()
            && (0..self.middle.dims().len())
                .all(|v| self.middle.dim_at(v) == self.left.dim_at(v) + self.right.dim_at(v))
    }
}

/// Whether `h: Y -> Z` factors through `pi: E -> Z`.
pub fn lifts_through(h: &Morphism, y: &Rep, pi: &Morphism, e: &Rep, z: &Rep) -> bool {
    let f = y.field();
    let target = hom_basis(y, z);
    let cols: Vec<Vec<Scalar>> = hom_basis(y, e).basis.iter().map(|u| target.coords(&pi.after(u))).collect();
    let span = Subspace::span(&Mat::from_columns(f, target.dim(), &cols));
    span.contains(&target.coords(h))
}

/// Radical of `End(Z)` as morphisms.
fn radical_endomorphisms(z: &Rep) -> Result<Vec<Morphism>, EndoError> {
    let end = endomorphism_algebra(z);
    let rad = algebra_radical(&end.algebra)?;
    Ok(rad.basis.iter().map(|r| end.morphism_of(r)).collect())
}

/// `0 -> τZ -> E -> Z -> 0` for an indecomposable non-projective `Z`.
pub fn almost_split_sequence(alg: &BoundQuiverAlgebra, z: &Rep) -> Result<ShortExactSequence, HomologicalError> {
    let (omega, incl, cover) = syzygy_step(alg, z);
    if omega.is_zero() {
        return Err(HomologicalError::ZProjective);
    }
    let x = ar_translate(alg, z);
    let rad = radical_endomorphisms(z)?;
    let pres = CoverData { omega: &omega, incl: &incl, cover: &cover, z, x: &x };
    let seq = match rad.is_empty().then(|| brick_sequence(alg, &pres)).flatten() {
        Some(seq) => seq,
        None => {
            let zeta = socle_extension(alg, &pres, &rad)?;
            pushout(alg, &pres, zeta)?
        }
    };
    if !seq.is_exact() {
        return Err(HomologicalError::VerificationFailed("pushout sequence is not exact".into()));
    }
    for phi in &rad {
        if !lifts_through(phi, z, &seq.pi, &seq.middle, z) {
            return Err(HomologicalError::VerificationFailed("a radical endomorphism does not lift".into()));
        }
    }
    Ok(seq)
}

/// `Ω Z -> P_0 -> Z` together with `X = τZ`.
struct CoverData<'a> {
    omega: &'a Rep,
    incl: &'a Morphism,
    cover: &'a Cover,
    z: &'a Rep,
    x: &'a Rep,
}

/// When `End(Z)` is a division ring every non-split extension of `Z` by
/// `τZ` is almost split. Basis classes are tried first since they keep the
/// middle term sparse, then a few random ones; each is certified
/// non-split. `None` if all of them split.
fn brick_sequence(alg: &BoundQuiverAlgebra, d: &CoverData) -> Option<ShortExactSequence> {
    let f = alg.field();
    let system = hom_system(d.omega, d.x);
    let n = system.dim();
    let mut rng = StdRng::seed_from_u64(0x7a75);
    let units = (0..n.min(12)).map(|j| (0..n).map(|i| if i == j { Scalar::ONE } else { Scalar::ZERO }).collect());
    let random = (0..4).map(|_| (0..n).map(|_| f.from_i64(rng.random_range(-64..=64))).collect::<Vec<_>>());
    for coords in units.chain(random) {
        let zeta = system.element(&coords);
        if zeta.is_zero() {
            continue;
        }
        let seq = pushout(alg, d, zeta).ok()?;
        if !splits(&seq) {
            return Some(seq);
        }
    }
    None
}

/// Whether `pi` has a section.
pub fn splits(seq: &ShortExactSequence) -> bool {
    let z = &seq.right;
    let end = hom_basis(z, z);
    let cols: Vec<Vec<Scalar>> =
        hom_basis(z, &seq.middle).basis.iter().map(|u| end.coords(&seq.pi.after(u))).collect();
    let span = Subspace::span(&Mat::from_columns(z.field(), end.dim(), &cols));
    span.contains(&end.coords(&Morphism::identity(z)))
}

/// A class in `Hom(Ω, τZ)` outside the restrictions from the cover and
/// killed by `rad End(Z)` modulo them.
fn socle_extension(alg: &BoundQuiverAlgebra, d: &CoverData, rad: &[Morphism]) -> Result<Morphism, HomologicalError> {
    let f = alg.field();
    let h = hom_basis(d.omega, d.x);
    let r = restriction_image(alg, &h, d.omega, d.x, d.cover, d.incl);
    let (qmap, _) = complement_projection(&r, h.dim(), f);

    // right action of rad End(Z) on Hom(Ω, X), through lifts to the cover
    let omega_spans: Vec<Subspace> = d.incl.maps.iter().map(Subspace::span).collect();
    let mut conditions: Vec<Mat> = Vec::new();
    for phi in rad {
        let lifted = lift_to_cover(alg, d.cover, &phi.after(&d.cover.map), d.z);
        let on_omega = Morphism {
            maps: omega_spans
                .iter()
                .zip(&lifted.maps)
                .zip(&d.incl.maps)
                .map(|((s, l), i)| s.coords_matrix(&l.mul(i)))
                .collect(),
        };
        let cols: Vec<Vec<Scalar>> = h.basis.iter().map(|zeta| h.coords(&zeta.after(&on_omega))).collect();
        conditions.push(qmap.mul(&Mat::from_columns(f, h.dim(), &cols)));
    }
    let stacked = if conditions.is_empty() {
        Mat::zeros(f, 0, h.dim())
    } else {
        let refs: Vec<&Mat> = conditions.iter().collect();
        Mat::vstack(&refs, f, h.dim())
    };
    let socle = stacked.kernel_basis();
    let c = (0..socle.cols())
        .map(|j| socle.column(j))
        .find(|c| !qmap.mul_vec(c).iter().all(Scalar::is_zero))
        .ok_or_else(|| HomologicalError::VerificationFailed("Ext¹(Z, τZ) has no socle element".into()))?;
    Ok(h.combine(&c, d.omega, d.x))
}

/// Pushout of the cover sequence along `zeta: Ω -> X`.
fn pushout(alg: &BoundQuiverAlgebra, d: &CoverData, zeta: Morphism) -> Result<ShortExactSequence, HomologicalError> {
    let f = alg.field();
    let (x, z) = (d.x, d.z);
    let sum = direct_sum_with_maps(alg.shape(), f, &[x, &d.cover.source]).expect("same algebra");
    let glue = Morphism::column(&[zeta, d.incl.neg()], d.omega);
    let (e, proj) = cokernel_of(&sum.sum, &glue);
    let iota = proj.after(&sum.injections[0]);
    let zero_then_cover = Morphism::row(&[Morphism::zero(x, z), d.cover.map.clone()], &[x, &d.cover.source], z);
    let pi = factor_through_epi(&proj, &zero_then_cover)
        .ok_or_else(|| HomologicalError::VerificationFailed("pushout map to Z is not defined".into()))?;
    Ok(ShortExactSequence { left: x.clone(), middle: e, right: z.clone(), iota, pi })
}

/// Checks that every non-retraction from each listed indecomposable into the
/// right term lifts through the middle term.
pub fn verify_almost_split(seq: &ShortExactSequence, modules: &[Rep]) -> Result<(), HomologicalError> {
    let z = &seq.right;
    for y in modules {
        let maps = if iso_indecomposable(y, z) {
            // rad(Y, Z) = rad End(Z) transported along an isomorphism
            let iso = hom_basis(y, z).basis.into_iter().find(Morphism::is_iso).expect("isomorphic");
            radical_endomorphisms(z)?.iter().map(|r| r.after(&iso)).collect()
        } else {
            hom_basis(y, z).basis
        };
        for h in &maps {
            if !lifts_through(h, y, &seq.pi, &seq.middle, z) {
                return Err(HomologicalError::VerificationFailed(format!(
                    "a map from a module of dimension vector {:?} does not lift",
                    y.dims()
                )));
            }
        }
    }
    Ok(())
}

/// Projection onto the non-pivot coordinates modulo `r`.
fn complement_projection(r: &Subspace, n: usize, f: Field) -> (Mat, Vec<usize>) {
    let rest: Vec<usize> = (0..n).filter(|i| !r.pivots.contains(i)).collect();
    let mut q = Mat::zeros(f, rest.len(), n);
    for (k, &j) in rest.iter().enumerate() {
        q.set(k, j, Scalar::ONE);
        for (row, &p) in r.pivots.iter().enumerate() {
            let x = r.basis.get(j, row);
            if !x.is_zero() {
                q.set(k, p, f.neg(x));
            }
        }
    }
    (q, rest)
}

/// Lift `g: P_0 -> Z` through the cover to an endomorphism of `P_0`.
fn lift_to_cover(alg: &BoundQuiverAlgebra, cover: &Cover, g: &Morphism, z: &Rep) -> Morphism {
    let f = alg.field();
    let parts: Vec<Rep> = cover.vertices.iter().map(|&v| projective_at(alg, v)).collect();
    let pieces: Vec<Morphism> = cover
        .vertices
        .iter()
        .zip(&cover.generators)
        .map(|(&v, &gpos)| {
            let mut gen = vec![Scalar::ZERO; cover.source.dim_at(v)];
            gen[gpos] = Scalar::ONE;
            let target = g.maps[v].mul_vec(&gen);
            let rhs = Mat::from_columns(f, z.dim_at(v), &[target]);
            let pre = cover.map.maps[v].solve(&rhs).ok().flatten().expect("cover is onto").column(0);
            alg.hom_from_projective(v, &cover.source, &pre)
        })
        .collect();
    let srcs: Vec<&Rep> = parts.iter().collect();
    Morphism::row(&pieces, &srcs, &cover.source)
}

/// Sum of the images of all maps from the listed modules.
pub fn trace_of(xs: &[Rep], m: &Rep) -> (Rep, Morphism) {
    let f = m.field();
    let homs: Vec<Morphism> = xs.iter().flat_map(|x| hom_basis(x, m).basis).collect();
    let spans: Vec<Mat> = (0..m.dims().len())
        .map(|v| {
            let parts: Vec<&Mat> = homs.iter().map(|h| &h.maps[v]).collect();
            Mat::hstack(&parts, f, m.dim_at(v))
        })
        .collect();
    subrep(m, &spans)
}

/// Intersection of the kernels of all maps into the listed modules.
pub fn reject_of(xs: &[Rep], m: &Rep) -> (Rep, Morphism) {
    let f = m.field();
    let homs: Vec<Morphism> = xs.iter().flat_map(|x| hom_basis(m, x).basis).collect();
    let spans: Vec<Mat> = (0..m.dims().len())
        .map(|v| {
            let parts: Vec<&Mat> = homs.iter().map(|h| &h.maps[v]).collect();
            Mat::vstack(&parts, f, m.dim_at(v)).kernel_basis()
        })
        .collect();
    subrep(m, &spans)
}

/// Finitely many pairwise non-isomorphic indecomposables with the radical
/// morphisms between them; the setting for approximations.
#[derive(Clone, Debug)]
pub struct AddCategory {
    pub objects: Vec<Rep>,
    /// `rad[j][l]`: a spanning set of `rad(X_j, X_l)`
    rad: Vec<Vec<Vec<Morphism>>>,
}

impl AddCategory {
    pub fn new(objects: Vec<Rep>) -> Result<AddCategory, EndoError> {
        let mut rad = Vec::with_capacity(objects.len());
        for (j, xj) in objects.iter().enumerate() {
            let mut row = Vec::with_capacity(objects.len());
            for (l, xl) in objects.iter().enumerate() {
                if j == l {
                    row.push(radical_endomorphisms(xj)?);
                } else {
                    row.push(hom_basis(xj, xl).basis);
                }
            }
            rad.push(row);
        }
        Ok(AddCategory { objects, rad })
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Index of an object isomorphic to the indecomposable `m`.
    pub fn position(&self, m: &Rep) -> Option<usize> {
        self.objects.iter().position(|x| iso_indecomposable(x, m))
    }
}

/// `X_0 -> M` (right) or `M -> X_0` (left); `summands[k]` indexes the
/// object used as the `k`-th summand of `X_0`.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub object: Rep,
    pub map: Morphism,
    pub summands: Vec<usize>,
}

fn chosen(coords_dim: usize, cols: Vec<Vec<Scalar>>, f: Field) -> Vec<usize> {
    let span = Subspace::span(&Mat::from_columns(f, coords_dim, &cols));
    (0..coords_dim).filter(|i| !span.pivots.contains(i)).collect()
}

/// Maps from the objects to `m` modulo those factoring through radical maps.
pub fn minimal_right_approx(cat: &AddCategory, m: &Rep) -> Approximation {
    let f = m.field();
    let homs: Vec<HomSpace> = cat.objects.iter().map(|x| hom_basis(x, m)).collect();
    let mut pieces = Vec::new();
    let mut summands = Vec::new();
    for (j, hj) in homs.iter().enumerate() {
        let mut cols = Vec::new();
        for (l, hl) in homs.iter().enumerate() {
            for u in &cat.rad[j][l] {
                for h in &hl.basis {
                    cols.push(hj.coords(&h.after(u)));
                }
            }
        }
        for i in chosen(hj.dim(), cols, f) {
            pieces.push(hj.basis[i].clone());
            summands.push(j);
        }
    }
    let parts: Vec<&Rep> = summands.iter().map(|&j| &cat.objects[j]).collect();
    let object = direct_sum(m.shape(), f, &parts).expect("same algebra");
    let map = Morphism::row(&pieces, &parts, m);
    Approximation { object, map, summands }
}

pub fn minimal_left_approx(cat: &AddCategory, m: &Rep) -> Approximation {
    let f = m.field();
    let homs: Vec<HomSpace> = cat.objects.iter().map(|x| hom_basis(m, x)).collect();
    let mut pieces = Vec::new();
    let mut summands = Vec::new();
    for (j, hj) in homs.iter().enumerate() {
        let mut cols = Vec::new();
        for (l, hl) in homs.iter().enumerate() {
            for u in &cat.rad[l][j] {
                for h in &hl.basis {
                    cols.push(hj.coords(&u.after(h)));
                }
            }
        }
        for i in chosen(hj.dim(), cols, f) {
            pieces.push(hj.basis[i].clone());
            summands.push(j);
        }
    }
    let parts: Vec<&Rep> = summands.iter().map(|&j| &cat.objects[j]).collect();
    let object = direct_sum(m.shape(), f, &parts).expect("same algebra");
    let map = Morphism::column(&pieces, m);
    Approximation { object, map, summands }
}

/// Every map from an object to `m` factors through `approx`.
pub fn is_right_approximation(cat: &AddCategory, m: &Rep, approx: &Morphism, source: &Rep) -> bool {
    cat.objects.iter().all(|x| {
        let target = hom_basis(x, m);
        let through = hom_basis(x, source);
        let cols: Vec<Vec<Scalar>> = through.basis.iter().map(|u| target.coords(&approx.after(u))).collect();
        Subspace::span(&Mat::from_columns(m.field(), target.dim(), &cols)).dim() == target.dim()
    })
}

pub fn is_left_approximation(cat: &AddCategory, m: &Rep, approx: &Morphism, target: &Rep) -> bool {
    cat.objects.iter().all(|x| {
        let homs = hom_basis(m, x);
        let back = hom_basis(target, x);
        let cols: Vec<Vec<Scalar>> = back.basis.iter().map(|u| homs.coords(&u.after(approx))).collect();
        Subspace::span(&Mat::from_columns(m.field(), homs.dim(), &cols)).dim() == homs.dim()
    })
}

/// Drops summand `k` from an approximation of `m` (for minimality checks).
pub fn without_summand(cat: &AddCategory, a: &Approximation, k: usize, m: &Rep, right: bool) -> (Rep, Morphism) {
    let f = m.field();
    let parts: Vec<&Rep> = a.summands.iter().map(|&j| &cat.objects[j]).collect();
    let data = direct_sum_with_maps(m.shape(), f, &parts).expect("same algebra");
    let keep: Vec<usize> = (0..parts.len()).filter(|&i| i != k).collect();
    let kept: Vec<&Rep> = keep.iter().map(|&i| parts[i]).collect();
    let object = direct_sum(m.shape(), f, &kept).expect("same algebra");
    let map = if right {
        let pieces: Vec<Morphism> = keep.iter().map(|&i| a.map.after(&data.injections[i])).collect();
        Morphism::row(&pieces, &kept, m)
    } else {
        let pieces: Vec<Morphism> = keep.iter().map(|&i| data.projections[i].after(&a.map)).collect();
        Morphism::column(&pieces, m)
    };
    (object, map)
}
