//! Finite-dimensional algebras given by structure constants: endomorphism
//! rings, Jacobson radicals, primitive idempotents and global dimension.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{BoundQuiverAlgebra, Shape};
use crate::exec::Exec;
use crate::field::{Field, Scalar};
use crate::homological::{self, DimValue, Presentation};
use crate::linalg::{Coordinatizer, Mat};
use crate::rep::{self, hom_basis, HomSpace, Morphism, Rep, Subspace};

pub type Elem = Vec<Scalar>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EndoError {
    #[error("characteristic {p} is too small for the trace form on an algebra of dimension {dim}")]
    FieldTooSmall { p: u64, dim: usize },
    #[error("structure constants are not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("the given unit is not a two-sided identity")]
    BadUnit,
    #[error("structure constant table has the wrong size")]
    BadTable,
    #[error("algebra does not split over the base field: {0}")]
    NonSplit(String),
    #[error("trace-form radical is not nilpotent")]
    RadicalNotNilpotent,
}

/// An associative unital algebra with basis `b_0..b_{n-1}`; `table[i][j]`
/// holds the sparse coordinates of `b_i b_j`.
#[derive(Clone, Debug)]
pub struct AbstractAlgebra {
    field: Field,
    dim: usize,
    table: Vec<Vec<Vec<(usize, Scalar)>>>,
    unit: Elem,
    traces: Vec<Scalar>,
}

impl AbstractAlgebra {
    /// Checks associativity on all basis triples and the unit laws.
    pub fn new(field: Field, table: Vec<Vec<Elem>>, unit: Elem) -> Result<AbstractAlgebra, EndoError> {
        let n = unit.len();
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return Err(EndoError::BadTable);
        }
        let sparse = table
            .into_iter()
            .map(|row| row.into_iter().map(|c| sparsify(&c)).collect())
            .collect();
        let g = AbstractAlgebra::from_sparse(field, sparse, unit);
        g.verify()?;
        Ok(g)
    }

    fn from_sparse(field: Field, table: Vec<Vec<Vec<(usize, Scalar)>>>, unit: Elem) -> AbstractAlgebra {
        let dim = unit.len();
        let traces = (0..dim)
            .map(|k| {
                (0..dim).fold(Scalar::ZERO, |acc, m| {
                    table[k][m].iter().filter(|(i, _)| *i == m).fold(acc, |a, (_, v)| field.add(&a, v))
                })
            })
            .collect();
        AbstractAlgebra { field, dim, table, unit, traces }
    }

    pub fn verify(&self) -> Result<(), EndoError> {
        let n = self.dim;
        for i in 0..n {
            let b = self.basis_elem(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(EndoError::BadUnit);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.product_of_basis(i, j);
                for k in 0..n {
                    let left = self.mul(&ij, &self.basis_elem(k));
                    let jk = self.product_of_basis(j, k);
                    let right = self.mul(&self.basis_elem(i), &jk);
                    if left != right {
                        return Err(EndoError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Elem {
        &self.unit
    }

    pub fn zero(&self) -> Elem {
        vec![Scalar::ZERO; self.dim]
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut v = self.zero();
        v[i] = Scalar::ONE;
        v
    }

    fn product_of_basis(&self, i: usize, j: usize) -> Elem {
        let mut v = self.zero();
        for (k, c) in &self.table[i][j] {
            v[*k] = c.clone();
        }
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        let f = self.field;
        let mut out = self.zero();
        let ys: Vec<(usize, &Scalar)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for &(j, yj) in &ys {
                let t = &self.table[i][j];
                if t.is_empty() {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, v) in t {
                    out[*k] = f.mul_add(&out[*k], &c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        x.iter().zip(y).map(|(a, b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, s: &Scalar, x: &[Scalar]) -> Elem {
        x.iter().map(|a| self.field.mul(s, a)).collect()
    }

    /// Trace of left multiplication by `x`.
    pub fn trace(&self, x: &[Scalar]) -> Scalar {
        let f = self.field;
        x.iter().zip(&self.traces).fold(Scalar::ZERO, |acc, (a, t)| f.mul_add(&acc, a, t))
    }

    /// Columns `e b_i f` spanning `eGf`, in canonical form.
    pub fn corner(&self, e: &[Scalar], f: &[Scalar]) -> Subspace {
        let cols: Vec<Elem> = (0..self.dim).map(|i| self.mul(&self.mul(e, &self.basis_elem(i)), f)).collect();
        Subspace::span(&Mat::from_columns(self.field, self.dim, &cols))
    }

    pub fn is_idempotent(&self, e: &[Scalar]) -> bool {
        self.mul(e, e) == e
    }

    fn is_nilpotent(&self, x: &[Scalar]) -> bool {
        // x^(2^k) with 2^k >= dim
        let mut p = x.to_vec();
        let mut reach = 1;
        while reach < self.dim.max(1) {
            p = self.mul(&p, &p);
            reach *= 2;
        }
        p.iter().all(Scalar::is_zero)
    }
}

fn sparsify(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

fn columns(field: Field, dim: usize, elems: &[Elem]) -> Mat {
    Mat::from_columns(field, dim, elems)
}

fn subspace_elems(s: &Subspace) -> Vec<Elem> {
    (0..s.basis.cols()).map(|c| s.basis.column(c)).collect()
}

/// `End(M)` together with the morphisms its basis stands for.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: AbstractAlgebra,
    pub homs: HomSpace,
    pub module: Rep,
}

impl EndAlgebra {
    pub fn morphism_of(&self, x: &[Scalar]) -> Morphism {
        self.homs.combine(x, &self.module, &self.module)
    }

    pub fn element_of(&self, f: &Morphism) -> Elem {
        self.homs.coords(f)
    }
}

/// Product `x·y` is the composite `x ∘ y`.
pub fn endomorphism_algebra(m: &Rep) -> EndAlgebra {
    let homs = hom_basis(m, m);
    let n = homs.dim();
    let table = (0..n)
        .map(|i| (0..n).map(|j| sparsify(&homs.coords(&homs.basis[i].after(&homs.basis[j])))).collect())
        .collect();
    let unit = homs.coords(&Morphism::identity(m));
    let algebra = AbstractAlgebra::from_sparse(m.field(), table, unit);
    EndAlgebra { algebra, homs, module: m.clone() }
}

#[derive(Clone, Debug)]
pub struct Radical {
    pub basis: Vec<Elem>,
    pub span: Subspace,
}

impl Radical {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.span.contains(x)
    }
}

/// Kernel of the trace form `(x, y) -> tr(L_{xy})`.
pub fn algebra_radical(g: &AbstractAlgebra) -> Result<Radical, EndoError> {
    let f = g.field;
    if let Field::Prime(p) = f {
        if p as usize <= g.dim {
            return Err(EndoError::FieldTooSmall { p, dim: g.dim });
        }
    }
    let n = g.dim;
    let mut gram = Mat::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let t = g.table[i][j].iter().fold(Scalar::ZERO, |acc, (k, c)| f.mul_add(&acc, c, &g.traces[*k]));
            gram.set(i, j, t);
        }
    }
    let k = gram.kernel_basis();
    let span = Subspace::span(&k);
    let basis = subspace_elems(&span);
    if basis.iter().any(|x| !g.is_nilpotent(x)) {
        return Err(EndoError::RadicalNotNilpotent);
    }
    Ok(Radical { basis, span })
}

/// Minimal polynomial of `x` inside the corner algebra with unit `e`,
/// monic, coefficients low to high.
fn minimal_polynomial(g: &AbstractAlgebra, e: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
    let f = g.field;
    let mut powers: Vec<Elem> = vec![e.to_vec()];
    loop {
        let next = g.mul(powers.last().unwrap(), x);
        let a = columns(f, g.dim, &powers);
        let b = Mat::from_columns(f, g.dim, std::slice::from_ref(&next));
        if let Some(sol) = a.solve(&b).expect("same row count") {
            let mut poly: Vec<Scalar> = sol.column(0).iter().map(|c| f.neg(c)).collect();
            poly.push(Scalar::ONE);
            return poly;
        }
        powers.push(next);
    }
}

fn eval_poly(g: &AbstractAlgebra, e: &[Scalar], poly: &[Scalar], x: &[Scalar]) -> Elem {
    let mut acc = g.zero();
    for c in poly.iter().rev() {
        acc = g.add(&g.mul(&acc, x), &g.scale(c, e));
    }
    acc
}

mod poly {
    use crate::field::{Field, Scalar};

    pub fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
        while p.last().is_some_and(Scalar::is_zero) {
            p.pop();
        }
        p
    }

    pub fn sub(f: Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = a.len().max(b.len());
        let z = Scalar::ZERO;
        trim((0..n).map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect())
    }

    pub fn mul(f: Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Scalar::ZERO; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = f.mul_add(&out[i + j], x, y);
            }
        }
        trim(out)
    }

    pub fn divrem(f: Field, a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let b = trim(b.to_vec());
        let lead = f.inv(b.last().expect("nonzero divisor")).unwrap();
        let mut r = trim(a.to_vec());
        let mut q = vec![Scalar::ZERO; r.len().saturating_sub(b.len()) + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = f.mul(r.last().unwrap(), &lead);
            for (i, y) in b.iter().enumerate() {
                r[i + shift] = f.sub(&r[i + shift], &f.mul(&c, y));
            }
            q[shift] = c;
            r = trim(r);
        }
        (trim(q), r)
    }

    /// `(u, v)` with `u a + v b = 1`, assuming coprime inputs.
    pub fn bezout(f: Field, a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut u0, mut u1) = (vec![Scalar::ONE], Vec::new());
        let (mut v0, mut v1) = (Vec::new(), vec![Scalar::ONE]);
        while !r1.is_empty() {
            let (q, r) = divrem(f, &r0, &r1);
            let u2 = sub(f, &u0, &mul(f, &q, &u1));
            let v2 = sub(f, &v0, &mul(f, &q, &v1));
            (r0, r1) = (r1, r);
            (u0, u1) = (u1, u2);
            (v0, v1) = (v1, v2);
        }
        assert_eq!(r0.len(), 1, "inputs are not coprime");
        let inv = f.inv(&r0[0]).unwrap();
        let scale = |p: Vec<Scalar>| p.iter().map(|c| f.mul(c, &inv)).collect::<Vec<_>>();
        (scale(u0), scale(v0))
    }

    pub fn eval(f: Field, p: &[Scalar], x: &Scalar) -> Scalar {
        p.iter().rev().fold(Scalar::ZERO, |acc, c| f.mul_add(c, &acc, x))
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;
const PRIME_SEARCH_LIMIT: u64 = 1_000_000;

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT && BigInt::from(d) * BigInt::from(d) <= n {
        let bd = BigInt::from(d);
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        // possibly composite beyond the trial bound; divisors may be missed
        factors.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out
}

/// Roots of a polynomial in the base field, as far as they can be found.
fn roots(f: Field, poly: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::new();
    let lowest = poly.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lowest > 0 {
        out.push(Scalar::ZERO);
    }
    let p = &poly[lowest..];
    if p.len() <= 1 {
        return out;
    }
    match f {
        Field::Prime(q) => {
            for v in 1..q.min(PRIME_SEARCH_LIMIT) {
                let x = f.from_i64(v as i64);
                if poly::eval(f, p, &x).is_zero() {
                    out.push(x);
                }
            }
        }
        Field::Rationals => {
            let dens: Vec<BigInt> = p.iter().map(|c| c.to_big().denom().clone()).collect();
            let l = dens.iter().fold(BigInt::one(), |a, d| a.lcm(d));
            let ints: Vec<BigInt> = p.iter().map(|c| (c.to_big() * &l).to_integer()).collect();
            let lead = ints.last().unwrap();
            for num in divisors(&ints[0]) {
                for den in divisors(lead) {
                    for sign in [1, -1] {
                        let x = f
                            .from_ratio(&(BigInt::from(sign) * &num), &den)
                            .expect("nonzero denominator");
                        if !out.contains(&x) && poly::eval(f, p, &x).is_zero() {
                            out.push(x);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Splits the corner unit `e` into orthogonal primitive idempotents.
fn split(g: &AbstractAlgebra, rad: &Radical, e: Elem, out: &mut Vec<Elem>) -> Result<(), EndoError> {
    let corner = g.corner(&e, &e);
    let rad_corner = {
        let cols: Vec<Elem> = rad.basis.iter().map(|r| g.mul(&g.mul(&e, r), &e)).collect();
        if cols.is_empty() { 0 } else { columns(g.field, g.dim, &cols).rank() }
    };
    if corner.dim() - rad_corner <= 1 {
        out.push(e);
        return Ok(());
    }
    let x = splitting_element(g, rad, &e, &corner)?;
    let mu = minimal_polynomial(g, &e, &x);
    let a = mu.iter().position(|c| !c.is_zero()).unwrap();
    let h = mu[a..].to_vec();
    let mut ta = vec![Scalar::ZERO; a];
    ta.push(Scalar::ONE);
    let (u, _) = poly::bezout(g.field, &ta, &h);
    let first = g.mul(&eval_poly(g, &e, &u, &x), &eval_poly(g, &e, &ta, &x));
    debug_assert!(g.is_idempotent(&first));
    let second = g.sub(&e, &first);
    split(g, rad, first, out)?;
    split(g, rad, second, out)
}

/// An element of `eGe` that is neither nilpotent nor invertible there.
fn splitting_element(g: &AbstractAlgebra, rad: &Radical, e: &[Scalar], corner: &Subspace) -> Result<Elem, EndoError> {
    let f = g.field;
    let basis = subspace_elems(corner);
    let classify = |x: &[Scalar]| {
        let mu = minimal_polynomial(g, e, x);
        let nilpotent = mu.iter().take(mu.len() - 1).all(Scalar::is_zero);
        let invertible = !mu[0].is_zero();
        (mu, nilpotent, invertible)
    };
    let mut candidates: Vec<Elem> = basis.clone();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            candidates.push(g.add(&basis[i], &basis[j]));
            candidates.push(g.mul(&basis[i], &basis[j]));
        }
    }
    for b in &candidates {
        let (mu, nilpotent, invertible) = classify(b);
        if !nilpotent && !invertible {
            return Ok(b.clone());
        }
        for lambda in roots(f, &mu) {
            let y = g.sub(b, &g.scale(&lambda, e));
            if y.iter().all(Scalar::is_zero) {
                continue;
            }
            let (_, nil, inv) = classify(&y);
            if !nil && !inv {
                return Ok(y);
            }
            if nil && !rad.contains(&y) {
                // a nilpotent outside the radical pairs nontrivially with some
                // element of the corner under the trace form
                if let Some(z) = basis.iter().map(|c| g.mul(&y, c)).find(|z| !g.trace(z).is_zero()) {
                    return Ok(z);
                }
            }
        }
    }
    Err(EndoError::NonSplit(format!(
        "no splitting element found in a corner of dimension {}",
        corner.dim()
    )))
}

/// Complete set of orthogonal primitive idempotents summing to the unit.
pub fn primitive_idempotents(g: &AbstractAlgebra, rad: &Radical) -> Result<Vec<Elem>, EndoError> {
    let mut out = Vec::new();
    if g.dim == 0 {
        return Ok(out);
    }
    split(g, rad, g.unit.clone(), &mut out)?;
    Ok(out)
}

/// Class index per idempotent: `e ~ f` iff `eGf · fGe` leaves the radical.
pub fn idempotent_classes(g: &AbstractAlgebra, rad: &Radical, idems: &[Elem]) -> Vec<usize> {
    let mut class: Vec<usize> = Vec::with_capacity(idems.len());
    let mut reps: Vec<usize> = Vec::new();
    for (i, e) in idems.iter().enumerate() {
        let found = reps.iter().position(|&r| equivalent(g, rad, &idems[r], e));
        match found {
            Some(c) => class.push(c),
            None => {
                class.push(reps.len());
                reps.push(i);
            }
        }
    }
    class
}

fn equivalent(g: &AbstractAlgebra, rad: &Radical, e: &[Scalar], f: &[Scalar]) -> bool {
    let ef = subspace_elems(&g.corner(e, f));
    let fe = subspace_elems(&g.corner(f, e));
    ef.iter().any(|u| fe.iter().any(|v| !rad.contains(&g.mul(u, v))))
}

/// What a basis vector of `e_v B e_b` stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Generator {
    Unit,
    Arrow(usize),
}

/// Basic algebra `εGε` presented on one vertex per idempotent class, with
/// a basis of `e_a rad e_b` as the arrows from `a` to `b`.
pub struct BasicAlgebra {
    g: AbstractAlgebra,
    shape: Arc<Shape>,
    arrows: Vec<Elem>,
    idems: Vec<Elem>,
    /// `[v][b]`: generators spanning `e_v B e_b`
    blocks: Vec<Vec<Vec<Generator>>>,
    coords: Vec<Vec<Option<Coordinatizer>>>,
}

impl BasicAlgebra {
    pub fn new(g: &AbstractAlgebra) -> Result<BasicAlgebra, EndoError> {
        let rad = algebra_radical(g)?;
        let idems = primitive_idempotents(g, &rad)?;
        let classes = idempotent_classes(g, &rad, &idems);
        let reps: Vec<Elem> = (0..idems.len())
            .filter(|&i| classes[..i].iter().all(|&c| c != classes[i]))
            .map(|i| idems[i].clone())
            .collect();
        let n = reps.len();
        let f = g.field;
        let mut arrows = Vec::new();
        let mut ends = Vec::new();
        let mut blocks = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    blocks[a][b].push(Generator::Unit);
                }
                let cols: Vec<Elem> = rad.basis.iter().map(|r| g.mul(&g.mul(&reps[a], r), &reps[b])).collect();
                let span = if cols.is_empty() {
                    Subspace::span(&Mat::zeros(f, g.dim, 0))
                } else {
                    Subspace::span(&columns(f, g.dim, &cols))
                };
                for x in subspace_elems(&span) {
                    blocks[a][b].push(Generator::Arrow(arrows.len()));
                    arrows.push(x);
                    ends.push((a, b));
                }
            }
        }
        let shape = Arc::new(Shape { vertices: n, arrows: ends });
        let mut basic = BasicAlgebra { g: g.clone(), shape, arrows, idems: reps, blocks, coords: Vec::new() };
        basic.coords = (0..n)
            .map(|v| {
                (0..n)
                    .map(|b| {
                        let elems: Vec<Elem> = basic.blocks[v][b].iter().map(|&x| basic.element(v, x)).collect();
                        (!elems.is_empty()).then(|| Coordinatizer::new(&columns(f, g.dim, &elems)))
                    })
                    .collect()
            })
            .collect();
        Ok(basic)
    }

    fn element(&self, v: usize, x: Generator) -> Elem {
        match x {
            Generator::Unit => self.idems[v].clone(),
            Generator::Arrow(a) => self.arrows[a].clone(),
        }
    }

    pub fn simple(&self, v: usize) -> Rep {
        Rep::simple(self.shape.clone(), self.g.field, v)
    }

    pub fn algebra(&self) -> &AbstractAlgebra {
        &self.g
    }
}

impl Presentation for BasicAlgebra {
    fn shape(&self) -> &Arc<Shape> {
        &self.shape
    }

    fn field(&self) -> Field {
        self.g.field
    }

    fn algebra_dim(&self) -> usize {
        self.blocks.iter().flatten().map(Vec::len).sum()
    }

    fn projective(&self, v: usize) -> Rep {
        let f = self.g.field;
        let n = self.shape.vertices;
        let dims: Vec<usize> = (0..n).map(|b| self.blocks[v][b].len()).collect();
        let maps = self
            .shape
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, &(a, c))| {
                let mut m = Mat::zeros(f, dims[c], dims[a]);
                for (col, &y) in self.blocks[v][a].iter().enumerate() {
                    let prod = self.g.mul(&self.element(v, y), &self.arrows[ai]);
                    if prod.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    let coords = self.coords[v][c].as_ref().expect("nonzero product lands in a nonzero block");
                    for (r, x) in coords.coords(&prod).into_iter().enumerate() {
                        m.set(r, col, x);
                    }
                }
                m
            })
            .collect();
        Rep::new(self.shape.clone(), f, dims, maps).expect("projective shape")
    }

    fn hom_from_projective(&self, v: usize, target: &Rep, m: &[Scalar]) -> Morphism {
        let f = self.g.field;
        let maps = (0..self.shape.vertices)
            .map(|b| {
                let cols: Vec<Elem> = self.blocks[v][b]
                    .iter()
                    .map(|&y| match y {
                        Generator::Unit => m.to_vec(),
                        Generator::Arrow(a) => target.map(a).mul_vec(m),
                    })
                    .collect();
                Mat::from_columns(f, target.dim_at(b), &cols)
            })
            .collect();
        Morphism { maps }
    }
}

/// Maximum of the projective dimensions of the simple modules.
pub fn global_dimension(g: &AbstractAlgebra, bound: Option<usize>, exec: Exec) -> Result<DimValue, EndoError> {
    if g.dim == 0 {
        return Ok(DimValue::Finite(0));
    }
    let basic = BasicAlgebra::new(g)?;
    let bound = bound.unwrap_or(g.dim + 2);
    let dims = exec.map_range(basic.shape.vertices, |v| homological::proj_dim(&basic, &basic.simple(v), bound));
    let dims = dims.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(DimValue::max_of(&dims))
}

/// Basic representative of `A ⊕ DA`: projectives then injectives, each
/// isomorphism class once.
pub fn gen_cogen_summands(alg: &BoundQuiverAlgebra) -> Vec<Rep> {
    let n = alg.vertex_count();
    let mut out: Vec<Rep> = (0..n).map(|v| rep::projective_at(alg, v)).collect();
    for v in 0..n {
        let i = rep::injective_at(alg, v);
        if !out.iter().any(|x| crate::decompose::iso_indecomposable(x, &i)) {
            out.push(i);
        }
    }
    out
}

pub fn gldim_end_gen_cogen(alg: &BoundQuiverAlgebra, bound: Option<usize>, exec: Exec) -> Result<DimValue, EndoError> {
    let parts = gen_cogen_summands(alg);
    let refs: Vec<&Rep> = parts.iter().collect();
    let m = rep::direct_sum(alg.shape(), alg.field(), &refs).expect("same algebra");
    let end = endomorphism_algebra(&m);
    global_dimension(&end.algebra, bound, exec)
}
