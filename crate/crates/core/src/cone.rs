//! Polyhedral cones given by finite generator lists.
//!
//! Membership is decided by exact LP feasibility, so generator lists coming
//! from large orbits stay cheap as long as the dimension is small. Facet
//! enumeration (the dual cone) uses double description and is gated behind
//! a dimension bound.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::arith::{inner, primitive, Covector, DenseVector, Rational};
use crate::error::{Error, Result};
use crate::linalg::span_basis;
use crate::lp::nonneg_combination;

pub const DEFAULT_DUAL_DIM_BOUND: usize = 12;

/// `cone(generators)`: all nonnegative combinations. No generators means
/// the cone `{0}`.
///
/// Generators are stored canonically: zero vectors dropped, each scaled to
/// its primitive integer vector, duplicates removed (first occurrence kept).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConeJson", into = "ConeJson")]
pub struct PolyhedralCone {
    dim: usize,
    generators: Vec<DenseVector>,
}

#[derive(Serialize, Deserialize)]
struct ConeJson {
    dim: usize,
    generators: Vec<Vec<Rational>>,
}

impl TryFrom<ConeJson> for PolyhedralCone {
    type Error = Error;

    fn try_from(j: ConeJson) -> Result<Self> {
        PolyhedralCone::new(j.dim, j.generators.into_iter().map(DenseVector).collect())
    }
}

impl From<PolyhedralCone> for ConeJson {
    fn from(c: PolyhedralCone) -> Self {
        ConeJson { dim: c.dim, generators: c.generators.into_iter().map(|g| g.0).collect() }
    }
}

impl std::fmt::Debug for PolyhedralCone {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cone{:?}", self.generators)
    }
}

impl PolyhedralCone {
    pub fn new(dim: usize, generators: Vec<DenseVector>) -> Result<Self> {
        let mut gens: Vec<DenseVector> = Vec::with_capacity(generators.len());
        let mut seen = HashSet::new();
        for g in generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.dim() });
            }
            if g.is_zero() {
                continue;
            }
            let p = DenseVector(primitive(g.entries()));
            if seen.insert(p.clone()) {
                gens.push(p);
            }
        }
        Ok(PolyhedralCone { dim, generators: gens })
    }

    pub fn from_covectors(dim: usize, generators: &[Covector]) -> Result<Self> {
        PolyhedralCone::new(dim, generators.iter().map(Covector::to_dense).collect())
    }

    pub fn origin(dim: usize) -> Self {
        PolyhedralCone { dim, generators: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[DenseVector] {
        &self.generators
    }

    /// `-C`.
    pub fn negated(&self) -> Self {
        PolyhedralCone { dim: self.dim, generators: self.generators.iter().map(|g| -g).collect() }
    }

    fn columns(&self) -> Vec<Vec<Rational>> {
        self.generators.iter().map(|g| g.0.clone()).collect()
    }

    pub fn contains(&self, x: &DenseVector) -> Result<bool> {
        Ok(self.membership_witness(x)?.is_some())
    }

    pub fn contains_covector(&self, x: &Covector) -> Result<bool> {
        self.contains(&x.to_dense())
    }

    /// Nonnegative coefficients expressing `x` in the generators, if any.
    pub fn membership_witness(&self, x: &DenseVector) -> Result<Option<Vec<Rational>>> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.dim() });
        }
        Ok(nonneg_combination(&self.columns(), x.entries()))
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &PolyhedralCone) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Set equality by mutual generator membership.
    pub fn same_set(&self, other: &PolyhedralCone) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// Basis of the lineality space `H(C) = C ∩ -C`.
    ///
    /// If a nonnegative combination of generators lies in `H(C)`, every
    /// generator with positive weight does too, so `H(C)` is spanned by the
    /// generators whose negatives are in `C`.
    pub fn lineality(&self) -> Vec<DenseVector> {
        let inside: Vec<Vec<Rational>> = self
            .generators
            .iter()
            .filter(|g| nonneg_combination(&self.columns(), (-*g).entries()).is_some())
            .map(|g| g.0.clone())
            .collect();
        if inside.is_empty() {
            return vec![];
        }
        span_basis(&inside).into_iter().map(DenseVector).collect()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality().is_empty()
    }

    /// A reusable membership test. Below the dimension bound the facet
    /// normals (generators of `C^⋆`) are computed once, so each query is a
    /// handful of inner products since `C = C^⋆⋆`; above it every query is
    /// an LP.
    pub fn tester(&self) -> ConeTester<'_> {
        let normals = self.dual().ok().map(|d| d.generators);
        ConeTester { cone: self, normals }
    }

    /// Generators of `C^⋆ = {y : ⟨y, g⟩ ≥ 0 for all generators g}`, with the
    /// default dimension bound.
    pub fn dual(&self) -> Result<PolyhedralCone> {
        self.dual_bounded(DEFAULT_DUAL_DIM_BOUND)
    }

    pub fn dual_bounded(&self, bound: usize) -> Result<PolyhedralCone> {
        if self.dim > bound {
            return Err(Error::DimensionBound { dim: self.dim, bound });
        }
        let (lines, rays) = double_description(self.dim, &self.columns());
        let mut gens: Vec<DenseVector> = rays.into_iter().map(DenseVector).collect();
        for l in lines {
            let l = DenseVector(l);
            gens.push(-&l);
            gens.push(l);
        }
        PolyhedralCone::new(self.dim, gens)
    }
}

pub struct ConeTester<'a> {
    cone: &'a PolyhedralCone,
    normals: Option<Vec<DenseVector>>,
}

impl ConeTester<'_> {
    pub fn contains(&self, x: &DenseVector) -> Result<bool> {
        match &self.normals {
            Some(normals) => {
                if x.dim() != self.cone.dim {
                    return Err(Error::DimensionMismatch { expected: self.cone.dim, found: x.dim() });
                }
                Ok(normals.iter().all(|y| !inner(&y.0, &x.0).is_negative()))
            }
            None => self.cone.contains(x),
        }
    }
}

/// Generators (lines, rays) of `{y : ⟨h, y⟩ ≥ 0 for all h in halfspaces}`.
fn double_description(dim: usize, halfspaces: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let mut lines: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            let mut e = vec![Rational::zero(); dim];
            e[i] = Rational::one();
            e
        })
        .collect();
    let mut rays: Vec<Vec<Rational>> = Vec::new();

    for h in halfspaces {
        if let Some(k) = lines.iter().position(|l| !inner(l, h).is_zero()) {
            let mut l = lines.remove(k);
            let mut a = inner(&l, h);
            if a.is_negative() {
                l = l.iter().map(|x| -x).collect();
                a = -a;
            }
            let project = |v: &Vec<Rational>| -> Vec<Rational> {
                let c = inner(v, h) / &a;
                v.iter().zip(&l).map(|(x, y)| x - &(&c * y)).collect()
            };
            lines = lines.iter().map(project).collect();
            rays = rays.iter().map(project).collect();
            rays.push(l);
        } else {
            let vals: Vec<Rational> = rays.iter().map(|r| inner(r, h)).collect();
            let mut next = Vec::new();
            for (r, v) in rays.iter().zip(&vals) {
                if !v.is_negative() {
                    next.push(r.clone());
                }
            }
            for (p, vp) in rays.iter().zip(&vals) {
                if !vp.is_positive() {
                    continue;
                }
                for (n, vn) in rays.iter().zip(&vals) {
                    if !vn.is_negative() {
                        continue;
                    }
                    let combo: Vec<Rational> =
                        p.iter().zip(n).map(|(x, y)| &(vp * y) - &(vn * x)).collect();
                    next.push(combo);
                }
            }
            rays = next;
        }
        rays = prune(&lines, rays);
    }
    (lines, rays)
}

/// Drops zero, duplicate and redundant rays.
fn prune(lines: &[Vec<Rational>], rays: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut uniq: Vec<Vec<Rational>> = Vec::new();
    for r in rays {
        if r.iter().all(Rational::is_zero) {
            continue;
        }
        let p = primitive(&r);
        if !uniq.contains(&p) {
            uniq.push(p);
        }
    }
    let mut i = 0;
    while i < uniq.len() {
        let mut cols: Vec<Vec<Rational>> = Vec::new();
        for (j, r) in uniq.iter().enumerate() {
            if j != i {
                cols.push(r.clone());
            }
        }
        for l in lines {
            cols.push(l.clone());
            cols.push(l.iter().map(|x| -x).collect());
        }
        if nonneg_combination(&cols, &uniq[i]).is_some() {
            uniq.remove(i);
        } else {
            i += 1;
        }
    }
    uniq
}
