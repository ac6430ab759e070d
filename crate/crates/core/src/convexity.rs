//! The cones `C_v`, `C_λ` and orbit-by-orbit verification of the containments
//! `𝒲v ⊆ v - C_v` and `𝒲λ ⊆ λ - C_λ`.

use std::collections::HashSet;

use serde::Serialize;

use crate::arith::{pair, Covector, DenseVector, Rational};
use crate::cone::PolyhedralCone;
use crate::coxeter::{
    enumerate_group, generate_roots, stabilizer, stabilizer_dual, tits_cone_member, OrbitTable, TitsVerdict,
};
use crate::error::{Error, Result};
use crate::reflection::ReflectionData;

/// Enumeration limits shared by the verification routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budgets {
    pub orbit: usize,
    pub root: usize,
    /// Step cap for the Tits-cone precondition check.
    pub cap: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { orbit: 10_000, root: 10_000, cap: 1_000 }
    }
}

/// A cone built from a possibly truncated enumeration.
#[derive(Clone, Debug, Serialize)]
pub struct BudgetedCone {
    pub cone: PolyhedralCone,
    pub truncated: bool,
}

/// `C_v = cone{α̌ : α ∈ Δ, α(v) > 0}`.
pub fn cone_cv(d: &ReflectionData, v: &DenseVector, root_budget: usize) -> Result<BudgetedCone> {
    let roots = generate_roots(d, root_budget)?;
    let mut gens = Vec::new();
    for e in &roots.entries {
        if pair(&e.root, v)?.is_positive() {
            gens.push(e.coroot.clone());
        }
    }
    Ok(BudgetedCone { cone: PolyhedralCone::new(d.dim(), gens)?, truncated: roots.truncated })
}

/// `C_λ = cone{α : α ∈ Δ, λ(α̌) > 0}`, generators in `V*` coordinates.
pub fn cone_clambda(d: &ReflectionData, lambda: &Covector, root_budget: usize) -> Result<BudgetedCone> {
    let roots = generate_roots(d, root_budget)?;
    let mut gens = Vec::new();
    for e in &roots.entries {
        if pair(lambda, &e.coroot)?.is_positive() {
            gens.push(e.root.to_dense());
        }
    }
    Ok(BudgetedCone { cone: PolyhedralCone::new(d.dim(), gens)?, truncated: roots.truncated })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "point", rename_all = "snake_case")]
pub enum BasePoint {
    Vector(DenseVector),
    Covector(Covector),
}

/// Outcome of the Tits-cone membership check for the base point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PreconditionStatus {
    Holds { word: Vec<usize> },
    Violated { reason: String },
    Unknown { steps: usize },
}

impl From<TitsVerdict> for PreconditionStatus {
    fn from(v: TitsVerdict) -> Self {
        match v {
            TitsVerdict::Yes { word, .. } => PreconditionStatus::Holds { word },
            TitsVerdict::NoProof { reason } => PreconditionStatus::Violated { reason },
            TitsVerdict::Unknown { steps } => PreconditionStatus::Unknown { steps },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub word: Vec<usize>,
    pub point: Vec<Rational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvexityReport {
    pub base: BasePoint,
    pub cone: PolyhedralCone,
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub orbit_truncated: bool,
    pub root_truncated: bool,
    pub truncated: bool,
    pub precondition: PreconditionStatus,
    /// True when the precondition was not confirmed; the report then says
    /// nothing about the theorem.
    pub advisory: bool,
}

impl ConvexityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `v - w·v ∈ C_v` for every enumerated orbit point.
pub fn verify_primal(d: &ReflectionData, v: &DenseVector, budgets: Budgets) -> Result<ConvexityReport> {
    let precondition: PreconditionStatus = tits_cone_member(d, v, budgets.cap)?.into();
    let cv = cone_cv(d, v, budgets.root)?;
    let orbit = OrbitTable::enumerate(d, v, budgets.orbit)?;
    let tester = cv.cone.tester();
    let mut failures = Vec::new();
    for (p, g) in orbit.iter() {
        let diff = v - p;
        if !tester.contains(&diff)? {
            failures.push(Failure { word: g.word().to_vec(), point: p.0.clone() });
        }
    }
    let advisory = !matches!(precondition, PreconditionStatus::Holds { .. });
    Ok(ConvexityReport {
        base: BasePoint::Vector(v.clone()),
        cone: cv.cone,
        checked: orbit.len(),
        failures,
        orbit_truncated: orbit.truncated(),
        root_truncated: cv.truncated,
        truncated: orbit.truncated() || cv.truncated,
        precondition,
        advisory,
    })
}

/// Checks `λ - w·λ ∈ C_λ` for every enumerated orbit point. The
/// precondition `λ ∈ 𝒲·C_S^⋆` is tested by descent in the transposed data.
pub fn verify_dual(d: &ReflectionData, lambda: &Covector, budgets: Budgets) -> Result<ConvexityReport> {
    let precondition: PreconditionStatus = tits_cone_member(&d.transposed(), &lambda.to_dense(), budgets.cap)?.into();
    let cl = cone_clambda(d, lambda, budgets.root)?;
    let orbit = OrbitTable::enumerate(d, lambda, budgets.orbit)?;
    let tester = cl.cone.tester();
    let mut failures = Vec::new();
    for (p, g) in orbit.iter() {
        let diff = (lambda - p).to_dense();
        if !tester.contains(&diff)? {
            failures.push(Failure { word: g.word().to_vec(), point: p.0.clone() });
        }
    }
    let advisory = !matches!(precondition, PreconditionStatus::Holds { .. });
    Ok(ConvexityReport {
        base: BasePoint::Covector(lambda.clone()),
        cone: cl.cone,
        checked: orbit.len(),
        failures,
        orbit_truncated: orbit.truncated(),
        root_truncated: cl.truncated,
        truncated: orbit.truncated() || cl.truncated,
        precondition,
        advisory,
    })
}

/// `cone(𝒲v - v)`.
pub fn cone_of_differences(d: &ReflectionData, v: &DenseVector, orbit_budget: usize) -> Result<BudgetedCone> {
    let orbit = OrbitTable::enumerate(d, v, orbit_budget)?;
    let gens = orbit.points().iter().map(|p| p - v).collect();
    Ok(BudgetedCone { cone: PolyhedralCone::new(d.dim(), gens)?, truncated: orbit.truncated() })
}

/// `v` is an extreme point of `conv(𝒲v)` iff `C_v` is pointed.
pub fn is_extreme(d: &ReflectionData, v: &DenseVector, root_budget: usize) -> Result<bool> {
    Ok(cone_cv(d, v, root_budget)?.cone.is_pointed())
}

/// `λ` attains its minimum on `𝒲v` at `v` iff `λ ∈ -C_v^⋆`.
pub fn is_minimizing(d: &ReflectionData, lambda: &Covector, v: &DenseVector, root_budget: usize) -> Result<bool> {
    let cv = cone_cv(d, v, root_budget)?;
    for g in cv.cone.generators() {
        if pair(lambda, g)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct MaximizerReport {
    pub maximum: Rational,
    /// `{w·v : λ(w·v) = max}` in orbit order.
    pub points: Vec<DenseVector>,
    /// The maximizer set equals `𝒲_λ·v`.
    pub equals_stabilizer_orbit: bool,
    /// Every maximizing `g` has `g⁻¹λ ∈ 𝒲_v·λ`.
    pub inverse_condition: bool,
}

/// Exhaustive maximizers of `λ` on `𝒲v` for `λ ∈ C_S^⋆`, `v ∈ K`, finite `𝒲`.
pub fn maximizer_set(d: &ReflectionData, lambda: &Covector, v: &DenseVector, budget: usize) -> Result<MaximizerReport> {
    if !d.in_chamber(v)? {
        return Err(Error::Precondition("vector is not in the fundamental chamber".into()));
    }
    if !d.in_dual_chamber(lambda)? {
        return Err(Error::Precondition("covector is not in the dual of C_S".into()));
    }
    let group = enumerate_group(d, budget)?;
    if group.truncated {
        return Err(Error::Truncated(budget));
    }
    let values: Vec<(DenseVector, Rational)> = group
        .elements
        .iter()
        .map(|g| {
            let p = g.act(v);
            let x = pair(lambda, &p)?;
            Ok((p, x))
        })
        .collect::<Result<_>>()?;
    let maximum = values.iter().map(|(_, x)| x).max().cloned().expect("group is nonempty");

    let mut points = Vec::new();
    let mut seen = HashSet::new();
    for (p, x) in &values {
        if *x == maximum && seen.insert(p.clone()) {
            points.push(p.clone());
        }
    }

    let w_lambda = stabilizer_dual(d, lambda, budget)?;
    let stab_orbit: HashSet<DenseVector> = w_lambda.elements.iter().map(|g| g.act(v)).collect();
    let equals_stabilizer_orbit = stab_orbit == seen;

    let w_v = stabilizer(d, v, budget)?;
    let lambda_orbit: HashSet<Covector> = w_v.elements.iter().map(|g| g.act_dual(lambda)).collect();
    let inverse_condition = group
        .elements
        .iter()
        .zip(&values)
        .filter(|(_, (_, x))| *x == maximum)
        .all(|(g, _)| lambda_orbit.contains(&g.inverse().act_dual(lambda)));

    Ok(MaximizerReport { maximum, points, equals_stabilizer_orbit, inverse_condition })
}
