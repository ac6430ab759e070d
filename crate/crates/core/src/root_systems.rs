//! The classical root systems `A, B, C, D, BC` on a finite index set
//! `J = {1, …, n}` inside the free vector space with its standard scalar
//! product.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{dot, Covector, DenseVector, Rational, SparseVector};
use crate::convexity::{BasePoint, ConvexityReport, PreconditionStatus, Failure};
use crate::coxeter::OrbitTable;
use crate::cone::PolyhedralCone;
use crate::error::{Error, Result};
use crate::linalg::solve_combination;
use crate::reflection::ReflectionData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    BC,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::A, Family::B, Family::C, Family::D, Family::BC];

    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::D => 2,
            Family::B | Family::C | Family::BC => 1,
        }
    }

    /// Number of coordinates for `n` simple roots.
    pub fn coordinates(self, rank: usize) -> usize {
        match self {
            Family::A => rank + 1,
            _ => rank,
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "BC" => Ok(Family::BC),
            _ => Err(Error::Parse(format!("unknown root system family {s:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::BC => "BC",
        };
        f.write_str(s)
    }
}

fn eps(j: usize) -> SparseVector {
    SparseVector::unit(j)
}

fn comb(a: i64, j: usize, b: i64, k: usize) -> SparseVector {
    eps(j).scale(&Rational::int(a)).add_scaled(&Rational::int(b), &eps(k))
}

/// All roots of the family over `J = {1, …, m}`.
pub fn root_list(family: Family, m: usize) -> Vec<SparseVector> {
    let mut out = Vec::new();
    let long_pairs = |out: &mut Vec<SparseVector>, plus: bool| {
        for j in 1..=m {
            for k in j + 1..=m {
                out.push(comb(1, j, -1, k));
                out.push(comb(-1, j, 1, k));
                if plus {
                    out.push(comb(1, j, 1, k));
                    out.push(comb(-1, j, -1, k));
                }
            }
        }
    };
    match family {
        Family::A => long_pairs(&mut out, false),
        Family::D => long_pairs(&mut out, true),
        Family::B | Family::C | Family::BC => {
            long_pairs(&mut out, true);
            for j in 1..=m {
                if family != Family::C {
                    out.push(eps(j));
                    out.push(-&eps(j));
                }
                if family != Family::B {
                    out.push(eps(j).scale(&Rational::int(2)));
                    out.push(eps(j).scale(&Rational::int(-2)));
                }
            }
        }
    }
    out
}

/// Standard simple system; for `BC` the simple roots of `B`.
pub fn simple_roots(family: Family, rank: usize) -> Vec<SparseVector> {
    let mut out: Vec<SparseVector> = (1..rank).map(|i| comb(1, i, -1, i + 1)).collect();
    match family {
        Family::A => out.push(comb(1, rank, -1, rank + 1)),
        Family::B | Family::BC => out.push(eps(rank)),
        Family::C => out.push(eps(rank).scale(&Rational::int(2))),
        Family::D => out.push(comb(1, rank - 1, 1, rank)),
    }
    out
}

/// `α̌ = 2α/(α, α)`.
pub fn coroot(alpha: &SparseVector) -> Result<SparseVector> {
    let n = dot(alpha, alpha);
    if n.is_zero() {
        return Err(Error::Domain("zero vector has no coroot".into()));
    }
    Ok(alpha.scale(&(Rational::int(2) / n)))
}

#[derive(Clone, Debug, Serialize)]
pub struct FiniteRootSystem {
    pub family: Family,
    pub rank: usize,
    pub roots: Vec<SparseVector>,
    pub simple_roots: Vec<SparseVector>,
    pub reflection_data: ReflectionData,
}

impl FiniteRootSystem {
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::Domain(format!("{family} needs rank at least {}", family.min_rank())));
        }
        let dim = family.coordinates(rank);
        let roots = root_list(family, dim);
        let simple = simple_roots(family, rank);

        let to_dense = |x: &SparseVector| x.to_dense(dim, 1);
        let simple_dense: Vec<Vec<Rational>> = simple.iter().map(to_dense).collect::<Result<_>>()?;
        for r in &roots {
            let c = solve_combination(&simple_dense, &to_dense(r)?)
                .ok_or_else(|| Error::InvalidSystem(format!("root {r:?} is not in the span of the simple roots")))?;
            let all_pos = c.iter().all(|x| !x.is_negative());
            let all_neg = c.iter().all(|x| !x.is_positive());
            if !(all_pos || all_neg) {
                return Err(Error::InvalidSystem(format!("root {r:?} is neither positive nor negative")));
            }
        }

        let names = (1..=rank).map(|i| format!("s{i}")).collect();
        let alphas = simple_dense.iter().cloned().map(Covector).collect();
        let checks = simple
            .iter()
            .map(|a| Ok(DenseVector(to_dense(&coroot(a)?)?)))
            .collect::<Result<_>>()?;
        let reflection_data = ReflectionData::new(dim, names, alphas, checks)?;
        Ok(FiniteRootSystem { family, rank, roots, simple_roots: simple, reflection_data })
    }

    pub fn dim(&self) -> usize {
        self.reflection_data.dim()
    }

    /// Coroot of a listed root.
    pub fn coroot(&self, alpha: &SparseVector) -> Result<SparseVector> {
        if !self.roots.contains(alpha) {
            return Err(Error::Domain(format!("{alpha:?} is not a root of {}{}", self.family, self.rank)));
        }
        coroot(alpha)
    }

    pub fn dense(&self, x: &SparseVector) -> Result<Vec<Rational>> {
        x.to_dense(self.dim(), 1)
    }
}

/// Checks `𝒲λ ⊆ λ - C_λ` with `C_λ` built from the explicit root list (so
/// for `BC` the roots `2ε_j` take part).
pub fn verify_locfin_convexity(family: Family, rank: usize, lambda: &SparseVector, orbit_budget: usize) -> Result<ConvexityReport> {
    let sys = FiniteRootSystem::build(family, rank)?;
    let d = &sys.reflection_data;
    let lam = Covector(sys.dense(lambda)?);
    let mut gens = Vec::new();
    for a in &sys.roots {
        if dot(lambda, &coroot(a)?).is_positive() {
            gens.push(DenseVector(sys.dense(a)?));
        }
    }
    let cone = PolyhedralCone::new(d.dim(), gens)?;
    let orbit = OrbitTable::enumerate(d, &lam, orbit_budget)?;
    if orbit.truncated() {
        return Err(Error::Truncated(orbit_budget));
    }
    let mut failures = Vec::new();
    for (p, g) in orbit.iter() {
        if !cone.contains(&(&lam - p).to_dense())? {
            failures.push(Failure { word: g.word().to_vec(), point: p.0.clone() });
        }
    }
    Ok(ConvexityReport {
        base: BasePoint::Covector(lam),
        cone,
        checked: orbit.len(),
        failures,
        orbit_truncated: false,
        root_truncated: false,
        truncated: false,
        // Finite Weyl groups have the whole space as Tits cone.
        precondition: PreconditionStatus::Holds { word: Vec::new() },
        advisory: false,
    })
}
