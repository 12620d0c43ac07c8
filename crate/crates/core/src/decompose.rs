//! Krull–Schmidt decomposition through primitive idempotents of `End(M)`.

use crate::endo::{algebra_radical, endomorphism_algebra, idempotent_classes, primitive_idempotents, EndoError};
use crate::rep::{hom_basis, image_of, Morphism, Rep, Subspace};

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Rep,
    /// isomorphism class within this decomposition
    pub class: usize,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

#[derive(Clone, Debug, Default)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
}

impl Decomposition {
    pub fn class_count(&self) -> usize {
        self.summands.iter().map(|s| s.class + 1).max().unwrap_or(0)
    }

    /// One representative per class with its multiplicity.
    pub fn pieces(&self) -> Vec<(Rep, usize)> {
        (0..self.class_count())
            .map(|c| {
                let first = self.summands.iter().find(|s| s.class == c).expect("classes are dense");
                let mult = self.summands.iter().filter(|s| s.class == c).count();
                (first.module.clone(), mult)
            })
            .collect()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1
    }
}

pub fn decompose(m: &Rep) -> Result<Decomposition, EndoError> {
    if m.is_zero() {
        return Ok(Decomposition::default());
    }
    let end = endomorphism_algebra(m);
    let g = &end.algebra;
    let rad = algebra_radical(g)?;
    if g.dim() - rad.dim() == 1 {
        let id = Morphism::identity(m);
        return Ok(Decomposition {
            summands: vec![Summand { module: m.clone(), class: 0, inclusion: id.clone(), projection: id }],
        });
    }
    let idems = primitive_idempotents(g, &rad)?;
    let classes = idempotent_classes(g, &rad, &idems);
    let summands = idems
        .iter()
        .zip(classes)
        .map(|(e, class)| {
            let phi = end.morphism_of(e);
            let (module, inclusion) = image_of(m, &phi);
            let projection = Morphism {
                maps: inclusion
                    .maps
                    .iter()
                    .zip(&phi.maps)
                    .map(|(i, p)| Subspace::span(i).coords_matrix(p))
                    .collect(),
            };
            debug_assert!(projection.after(&inclusion) == Morphism::identity(&module));
            Summand { module, class, inclusion, projection }
        })
        .collect();
    Ok(Decomposition { summands })
}

pub fn is_indecomposable(m: &Rep) -> Result<bool, EndoError> {
    if m.is_zero() {
        return Ok(false);
    }
    let end = endomorphism_algebra(m);
    let rad = algebra_radical(&end.algebra)?;
    Ok(end.algebra.dim() - rad.dim() == 1)
}

/// Isomorphism test for two modules known to be indecomposable: some basis
/// morphism is invertible, since the non-isomorphisms form a proper subspace.
pub fn iso_indecomposable(x: &Rep, y: &Rep) -> bool {
    x.dims() == y.dims() && hom_basis(x, y).basis.iter().any(Morphism::is_iso)
}

pub fn is_isomorphic(m: &Rep, n: &Rep) -> Result<bool, EndoError> {
    if m.dims() != n.dims() || !m.same_shape_as(n) {
        return Ok(false);
    }
    if m == n {
        return Ok(true);
    }
    let a = decompose(m)?.pieces();
    let b = decompose(n)?.pieces();
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    for (x, mx) in &a {
        let hit = b
            .iter()
            .enumerate()
            .position(|(i, (y, my))| !used[i] && mx == my && iso_indecomposable(x, y));
        match hit {
            Some(i) => used[i] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}
