//! Locally affine root systems `X_J^{(r)}` at finite support: the Lorentzian
//! space `V̂ = ℝ × V × ℝ`, affine roots and coroots, translations `τ_x`, the
//! translation lattices, `d`-minimality, and minimisation of
//! `f(x) = λ_c‖x‖²/2 + λ̄(x) + λ_d` over the translation lattice.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{dot, Covector, DenseVector, Rational, SparseVector};
use crate::error::{Error, Result};
use crate::reflection::ReflectionData;
use crate::root_systems::{coroot, root_list, simple_roots, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum AffineType {
    A1,
    B1,
    C1,
    D1,
    B2,
    C2,
    BC2,
}

impl AffineType {
    pub const ALL: [AffineType; 7] =
        [AffineType::A1, AffineType::B1, AffineType::C1, AffineType::D1, AffineType::B2, AffineType::C2, AffineType::BC2];

    pub fn twist(self) -> u32 {
        match self {
            AffineType::A1 | AffineType::B1 | AffineType::C1 | AffineType::D1 => 1,
            _ => 2,
        }
    }

    /// `Δ_0`, the finite root system carried at even levels.
    pub fn even_family(self) -> Family {
        match self {
            AffineType::A1 => Family::A,
            AffineType::B1 | AffineType::B2 | AffineType::BC2 => Family::B,
            AffineType::C1 | AffineType::C2 => Family::C,
            AffineType::D1 => Family::D,
        }
    }

    /// Smallest support on which the finite part is irreducible with the
    /// standard simple system.
    pub fn min_support(self) -> usize {
        match self {
            AffineType::D1 => 3,
            _ => 2,
        }
    }

    /// `Δ_n` over `J = indices`: the finite roots `α` with `(0, α, n)` a root.
    pub fn level_roots(self, indices: &[usize], level: i64) -> Vec<SparseVector> {
        let odd = level.rem_euclid(2) == 1;
        let m = indices.iter().copied().max().unwrap_or(0);
        let all = |f: Family| -> Vec<SparseVector> {
            root_list(f, m)
                .into_iter()
                .filter(|r| r.support().all(|j| indices.contains(&j)))
                .collect()
        };
        match (self, odd) {
            (AffineType::B2, true) => all(Family::B).into_iter().filter(|r| r.len() == 1).collect(),
            (AffineType::C2, true) => all(Family::D),
            (AffineType::BC2, true) => all(Family::BC),
            (t, _) => all(t.even_family()),
        }
    }

    /// Highest root `θ` of `Δ_1`, used for the affine simple root
    /// `(0, -θ, 1)`.
    fn theta(self) -> SparseVector {
        let two = Rational::int(2);
        match self {
            AffineType::A1 => unreachable!("depends on the support size"),
            AffineType::B1 | AffineType::D1 | AffineType::C2 => SparseVector::unit(1).add_scaled(&Rational::one(), &SparseVector::unit(2)),
            AffineType::C1 | AffineType::BC2 => SparseVector::unit(1).scale(&two),
            AffineType::B2 => SparseVector::unit(1),
        }
    }

    pub fn lattice(self) -> TransLattice {
        match self {
            AffineType::A1 => TransLattice::ZeroSum,
            AffineType::B1 | AffineType::D1 | AffineType::C2 => TransLattice::EvenSum,
            AffineType::C1 | AffineType::BC2 => TransLattice::Integer,
            AffineType::B2 => TransLattice::Even,
        }
    }
}

impl FromStr for AffineType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s.chars().filter(|c| !"^()_ ".contains(*c)).collect::<String>().to_ascii_uppercase();
        match norm.as_str() {
            "A1" => Ok(AffineType::A1),
            "B1" => Ok(AffineType::B1),
            "C1" => Ok(AffineType::C1),
            "D1" => Ok(AffineType::D1),
            "B2" => Ok(AffineType::B2),
            "C2" => Ok(AffineType::C2),
            "BC2" => Ok(AffineType::BC2),
            _ => Err(Error::Parse(format!("unknown affine type {s:?}"))),
        }
    }
}

impl TryFrom<String> for AffineType {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<AffineType> for String {
    fn from(t: AffineType) -> String {
        t.to_string()
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AffineType::A1 => "A1",
            AffineType::B1 => "B1",
            AffineType::C1 => "C1",
            AffineType::D1 => "D1",
            AffineType::B2 => "B2",
            AffineType::C2 => "C2",
            AffineType::BC2 => "BC2",
        };
        f.write_str(s)
    }
}

/// A point `(z, x, t)` of `V̂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffinePoint {
    pub z: Rational,
    pub x: SparseVector,
    pub t: Rational,
}

impl AffinePoint {
    pub fn new(z: Rational, x: SparseVector, t: Rational) -> Self {
        AffinePoint { z, x, t }
    }

    pub fn c() -> Self {
        AffinePoint::new(Rational::one(), SparseVector::new(), Rational::zero())
    }

    pub fn d() -> Self {
        AffinePoint::new(Rational::zero(), SparseVector::new(), Rational::one())
    }

    pub fn add_scaled(&self, c: &Rational, other: &AffinePoint) -> AffinePoint {
        AffinePoint {
            z: &self.z + &(c * &other.z),
            x: self.x.add_scaled(c, &other.x),
            t: &self.t + &(c * &other.t),
        }
    }
}

/// `((z,x,t), (z',x',t')) = (x,x') - zt' - z't`.
pub fn lorentz(p: &AffinePoint, q: &AffinePoint) -> Rational {
    dot(&p.x, &q.x) - &p.z * &q.t - &q.z * &p.t
}

/// A functional `λ(z, x, t) = λ_c z + λ̄(x) + λ_d t` on `V̂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineWeight {
    pub lc: Rational,
    pub bar: SparseVector,
    pub ld: Rational,
}

impl AffineWeight {
    pub fn new(lc: Rational, bar: SparseVector, ld: Rational) -> Self {
        AffineWeight { lc, bar, ld }
    }

    pub fn eval(&self, p: &AffinePoint) -> Rational {
        &self.lc * &p.z + dot(&self.bar, &p.x) + &self.ld * &p.t
    }

    /// Coordinates `(z, x_1, …, x_n, t)` in the dense model of
    /// [`affine_reflection_data`].
    pub fn to_covector(&self, n: usize) -> Result<Covector> {
        let mut v = vec![self.lc.clone()];
        v.extend(self.bar.to_dense(n, 1)?);
        v.push(self.ld.clone());
        Ok(Covector(v))
    }

    pub fn from_covector(f: &Covector) -> Result<Self> {
        let e = f.entries();
        if e.len() < 2 {
            return Err(Error::Domain("affine covectors have at least two coordinates".into()));
        }
        let n = e.len() - 2;
        Ok(AffineWeight::new(e[0].clone(), SparseVector::from_dense(&e[1..=n], 1), e[n + 1].clone()))
    }
}

pub fn point_to_dense(p: &AffinePoint, n: usize) -> Result<DenseVector> {
    let mut v = vec![p.z.clone()];
    v.extend(p.x.to_dense(n, 1)?);
    v.push(p.t.clone());
    Ok(DenseVector(v))
}

pub fn point_from_dense(v: &DenseVector) -> Result<AffinePoint> {
    let e = v.entries();
    if e.len() < 2 {
        return Err(Error::Domain("affine vectors have at least two coordinates".into()));
    }
    let n = e.len() - 2;
    Ok(AffinePoint::new(e[0].clone(), SparseVector::from_dense(&e[1..=n], 1), e[n + 1].clone()))
}

/// The affine root `(0, α, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineRoot {
    pub alpha: SparseVector,
    pub level: i64,
}

impl AffineRoot {
    pub fn as_weight(&self) -> AffineWeight {
        AffineWeight::new(Rational::zero(), self.alpha.clone(), Rational::int(self.level))
    }

    /// `(-2n/(α,α), α̌, 0)`.
    pub fn coroot(&self) -> Result<AffinePoint> {
        let n = dot(&self.alpha, &self.alpha);
        if n.is_zero() {
            return Err(Error::Domain("zero finite part".into()));
        }
        Ok(AffinePoint::new(Rational::int(-2 * self.level) / n, coroot(&self.alpha)?, Rational::zero()))
    }

    /// `p ↦ p - α̂(p) α̂^∨`.
    pub fn reflect(&self, p: &AffinePoint) -> Result<AffinePoint> {
        let c = self.as_weight().eval(p);
        Ok(p.add_scaled(&-c, &self.coroot()?))
    }
}

/// All affine roots over `support` with `|n| ≤ level_cap`.
pub fn affine_roots(ty: AffineType, support: &[usize], level_cap: u32) -> Result<Vec<AffineRoot>> {
    if support.is_empty() {
        return Err(Error::Domain("empty support".into()));
    }
    let cap = i64::from(level_cap);
    let mut out = Vec::new();
    for n in -cap..=cap {
        for alpha in ty.level_roots(support, n) {
            out.push(AffineRoot { alpha, level: n });
        }
    }
    Ok(out)
}

/// `τ_x(z, y, t) = (z + ⟨y, x⟩ + t‖x‖²/2, y + t x, t)`.
pub fn translate(x: &SparseVector, p: &AffinePoint) -> AffinePoint {
    let half = Rational::frac(1, 2);
    AffinePoint {
        z: &p.z + &dot(&p.x, x) + &p.t * &x.norm_sq() * half,
        x: p.x.add_scaled(&p.t, x),
        t: p.t.clone(),
    }
}

/// Translation lattices `𝒯 ⊂ ℤ^{(J)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransLattice {
    /// Integer vectors with coordinate sum 0.
    ZeroSum,
    /// Integer vectors with even coordinate sum.
    EvenSum,
    Integer,
    /// `2ℤ^{(J)}`.
    Even,
}

impl TransLattice {
    pub fn contains(self, x: &SparseVector) -> bool {
        if !x.iter().all(|(_, v)| v.is_integer()) {
            return false;
        }
        let sum: Rational = x.iter().map(|(_, v)| v.clone()).sum();
        match self {
            TransLattice::ZeroSum => sum.is_zero(),
            TransLattice::EvenSum => (sum / Rational::int(2)).is_integer(),
            TransLattice::Integer => true,
            TransLattice::Even => x.iter().all(|(_, v)| (v / &Rational::int(2)).is_integer()),
        }
    }

    /// A nonzero lattice vector `g` supported on `{j, k}` (`j ≠ k`).
    pub fn generator(self, j: usize, k: usize) -> SparseVector {
        let one = Rational::one();
        match self {
            TransLattice::ZeroSum => SparseVector::unit(j).add_scaled(&-&one, &SparseVector::unit(k)),
            TransLattice::Integer => SparseVector::unit(j),
            TransLattice::EvenSum | TransLattice::Even => SparseVector::unit(j).scale(&Rational::int(2)),
        }
    }
}

pub fn lattice(ty: AffineType) -> TransLattice {
    ty.lattice()
}

/// `f(x) = λ_c‖x‖²/2 + λ̄(x) + λ_d = λ(τ_x d)`.
pub fn d_value(lambda: &AffineWeight, x: &SparseVector) -> Rational {
    &lambda.lc * &x.norm_sq() * Rational::frac(1, 2) + dot(&lambda.bar, x) + &lambda.ld
}

/// Closed-form `d`-minimality. Coordinates off `supp(λ̄)` are zero and always
/// available, so the maximum, minimum and pairwise conditions see an extra
/// `0`. For `λ_c ≤ 0` the inequalities reduce to the correct answers:
/// impossible for `λ_c < 0`, `λ̄ = 0` for `λ_c = 0`.
pub fn is_d_minimal_closed_form(ty: AffineType, lambda: &AffineWeight) -> bool {
    let lc = &lambda.lc;
    if lc.is_negative() {
        return false;
    }
    let vals: Vec<Rational> = lambda.bar.iter().map(|(_, v)| v.clone()).chain([Rational::zero()]).collect();
    let mut abs: Vec<Rational> = vals.iter().map(Rational::abs).collect();
    abs.sort_by(|a, b| b.cmp(a));
    let max_abs = abs[0].clone();
    let half = Rational::frac(1, 2);
    match ty {
        AffineType::A1 => {
            let max = vals.iter().max().unwrap();
            let min = vals.iter().min().unwrap();
            &(max - min) <= lc
        }
        AffineType::B1 | AffineType::D1 | AffineType::C2 => {
            let second = abs.get(1).cloned().unwrap_or_else(Rational::zero);
            &(&max_abs + &second) <= lc
        }
        AffineType::C1 | AffineType::BC2 => max_abs <= lc * &half,
        AffineType::B2 => &max_abs <= lc,
    }
}

/// Index set `supp(λ̄)` padded with fresh indices so that it has at least
/// `max(|supp| + 1, 2)` elements.
pub fn padded_support(bar: &SparseVector, extra: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = bar.support().collect();
    let mut next = bar.max_index().map_or(1, |m| m + 1);
    let want = (idx.len() + extra.max(1)).max(2);
    while idx.len() < want {
        idx.push(next);
        next += 1;
    }
    idx
}

/// `d`-minimality through the root-by-root condition
/// `(α,α)/(2n) · λ̄(α̌) ≤ λ_c` for all `(0, α, n)` with `n ∈ {1, 2}` over
/// `supp(λ̄)` plus `extra` fresh indices.
pub fn is_d_minimal_generic(ty: AffineType, lambda: &AffineWeight, extra: usize) -> Result<bool> {
    let idx = padded_support(&lambda.bar, extra);
    for n in 1..=2i64 {
        for alpha in ty.level_roots(&idx, n) {
            let lhs = dot(&alpha, &alpha) / Rational::int(2 * n) * dot(&lambda.bar, &coroot(&alpha)?);
            if lhs > lambda.lc {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MinimizeStatus {
    Minimum,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimizeResult {
    pub status: MinimizeStatus,
    pub min: Option<Rational>,
    pub argmin: Option<SparseVector>,
    /// For `UNBOUNDED`: a lattice vector `g` with `f(k g) → -∞` as `k → ∞`.
    pub direction: Option<SparseVector>,
}

impl MinimizeResult {
    fn minimum(lambda: &AffineWeight, x: SparseVector) -> Self {
        MinimizeResult { status: MinimizeStatus::Minimum, min: Some(d_value(lambda, &x)), argmin: Some(x), direction: None }
    }

    fn unbounded(g: SparseVector) -> Self {
        MinimizeResult { status: MinimizeStatus::Unbounded, min: None, argmin: None, direction: Some(g) }
    }
}

fn round(x: &Rational) -> Rational {
    Rational::from_bigint(x.round_half_down())
}

/// Exact minimum of `f` over the translation lattice of `ty`.
///
/// For `λ_c > 0` the objective is `λ_c/2 · ‖x - t‖² + const` with target
/// `t = -λ̄/λ_c`, a separable convex problem over the lattice: round every
/// coordinate, then repair the parity or the sum. Off-support coordinates
/// have target 0; a unit step on a fresh one costs `λ_c/2`, and the sum
/// repair of the zero-sum lattice may use several of them.
pub fn minimize_d(ty: AffineType, lambda: &AffineWeight) -> MinimizeResult {
    let lat = ty.lattice();
    let bar = &lambda.bar;
    let lc = &lambda.lc;
    let support: Vec<usize> = bar.support().collect();
    let fresh = bar.max_index().map_or(1, |m| m + 1);

    if lc.is_negative() {
        let j = support.first().copied().unwrap_or(fresh);
        let k = if j == fresh { fresh + 1 } else { fresh };
        return MinimizeResult::unbounded(lat.generator(j, k));
    }
    if lc.is_zero() {
        return match support.first() {
            None => MinimizeResult::minimum(lambda, SparseVector::new()),
            Some(&j) => {
                let g = lat.generator(j, fresh);
                let g = if dot(bar, &g).is_positive() { -&g } else { g };
                MinimizeResult::unbounded(g)
            }
        };
    }

    let half = Rational::frac(1, 2);
    // c_j(y) = λ_c y²/2 + λ_j y.
    let cost = |j: usize, y: &Rational| -> Rational { lc * &y.square() * &half + bar.get(j) * y };
    let target = |j: usize| -> Rational { -(bar.get(j) / lc) };
    let one = Rational::one();
    let aux_step = lc * &half;

    let mut x = SparseVector::new();
    match lat {
        TransLattice::Integer | TransLattice::ZeroSum | TransLattice::EvenSum => {
            for &j in &support {
                x.set(j, round(&target(j)));
            }
        }
        TransLattice::Even => {
            let two = Rational::int(2);
            for &j in &support {
                x.set(j, round(&(target(j) / &two)) * &two);
            }
        }
    }

    match lat {
        TransLattice::Integer | TransLattice::Even => {}
        TransLattice::EvenSum => {
            let sum: Rational = x.iter().map(|(_, v)| v.clone()).sum();
            if !(sum / Rational::int(2)).is_integer() {
                // Cheapest single-coordinate parity flip; a fresh coordinate
                // set to ±1 costs λ_c/2.
                let mut best: Option<(Rational, usize, Rational)> = None;
                for &j in &support {
                    let cur = x.get(j);
                    for y in [&cur - &one, &cur + &one] {
                        let delta = cost(j, &y) - cost(j, &cur);
                        if best.as_ref().is_none_or(|(b, _, _)| delta < *b) {
                            best = Some((delta, j, y));
                        }
                    }
                }
                match best {
                    Some((delta, j, y)) if delta <= aux_step => x.set(j, y),
                    _ => x.set(fresh, one.clone()),
                }
            }
        }
        TransLattice::ZeroSum => {
            let sum: Rational = x.iter().map(|(_, v)| v.clone()).sum();
            let steps = sum.abs().to_i64().expect("sum of rounded targets fits in i64");
            let dir = if sum.is_positive() { -&one } else { one.clone() };
            let mut next_fresh = fresh;
            for _ in 0..steps {
                let mut best: Option<(Rational, usize)> = None;
                for &j in &support {
                    let cur = x.get(j);
                    let delta = cost(j, &(&cur + &dir)) - cost(j, &cur);
                    if best.as_ref().is_none_or(|(b, _)| delta < *b) {
                        best = Some((delta, j));
                    }
                }
                match best {
                    Some((delta, j)) if delta <= aux_step => {
                        let cur = x.get(j);
                        x.set(j, &cur + &dir);
                    }
                    _ => {
                        x.set(next_fresh, dir.clone());
                        next_fresh += 1;
                    }
                }
            }
        }
    }
    MinimizeResult::minimum(lambda, x)
}

/// The weight `(1, λ̄, 0)` with `λ_{2k-1} = 1 + 1/k²`, `λ_{2k} = 0`, truncated
/// to `k ≤ m`.
pub fn example_47_weight(m: usize) -> AffineWeight {
    let bar = SparseVector::from_pairs((1..=m).map(|k| {
        let k2 = (k * k) as i64;
        (2 * k - 1, Rational::one() + Rational::frac(1, k2))
    }));
    AffineWeight::new(Rational::one(), bar, Rational::zero())
}

/// `x_n = Σ_{k ≤ n} (e_{2k} - e_{2k-1})`.
pub fn example_47_witness(n: usize) -> SparseVector {
    SparseVector::from_pairs((1..=n).flat_map(|k| [(2 * k, Rational::one()), (2 * k - 1, -Rational::one())]))
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessValue {
    pub n: usize,
    pub x: SparseVector,
    pub value: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct TruncatedMinimum {
    pub m: usize,
    pub result: MinimizeResult,
}

#[derive(Clone, Debug, Serialize)]
pub struct Example47Report {
    pub m: usize,
    pub weight: AffineWeight,
    /// `f(x_n)` on the full weight, `n = 1, …, m`.
    pub witnesses: Vec<WitnessValue>,
    pub strictly_decreasing: bool,
    /// `-2(Σ_{k≤m} 1/k² + 1/m)`, below `-2Σ_k 1/k²` since the tail is at
    /// most `1/m`.
    pub lower_bound: Rational,
    pub bound_respected: bool,
    /// `minimize_d` on the truncations to `k ≤ m'`, `m' = 1, …, m`.
    pub truncated_minima: Vec<TruncatedMinimum>,
}

pub fn example_47(m: usize) -> Result<Example47Report> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let weight = example_47_weight(m);
    let witnesses: Vec<WitnessValue> = (1..=m)
        .map(|n| {
            let x = example_47_witness(n);
            let value = d_value(&weight, &x);
            WitnessValue { n, x, value }
        })
        .collect();
    let strictly_decreasing = witnesses.windows(2).all(|w| w[1].value < w[0].value);
    let partial: Rational = (1..=m).map(|k| Rational::frac(1, (k * k) as i64)).sum();
    let lower_bound = Rational::int(-2) * (partial + Rational::frac(1, m as i64));
    let truncated_minima: Vec<TruncatedMinimum> = (1..=m)
        .map(|mm| TruncatedMinimum { m: mm, result: minimize_d(AffineType::A1, &example_47_weight(mm)) })
        .collect();
    let bound_respected = witnesses.iter().all(|w| w.value >= lower_bound)
        && truncated_minima.iter().all(|t| t.result.min.as_ref().is_some_and(|v| *v >= lower_bound));
    Ok(Example47Report { m, weight, witnesses, strictly_decreasing, lower_bound, bound_respected, truncated_minima })
}

/// Reflection data of `X_J^{(r)}` for `J = {1, …, n}` on `ℝ^{n+2}` with
/// coordinates `(z, x_1, …, x_n, t)`: the finite simple roots together with
/// `α_0 = (0, -θ, 1)`, and the null root `δ = (0, 0, 1)`.
pub fn affine_reflection_data(ty: AffineType, n: usize) -> Result<ReflectionData> {
    if n < ty.min_support() {
        return Err(Error::Domain(format!("{ty} needs support at least {}", ty.min_support())));
    }
    let mut roots: Vec<AffineRoot> = simple_roots(ty.even_family(), if ty == AffineType::A1 { n - 1 } else { n })
        .into_iter()
        .map(|alpha| AffineRoot { alpha, level: 0 })
        .collect();
    let theta = if ty == AffineType::A1 {
        SparseVector::unit(1).add_scaled(&-Rational::one(), &SparseVector::unit(n))
    } else {
        ty.theta()
    };
    roots.insert(0, AffineRoot { alpha: -&theta, level: 1 });

    let names = (0..roots.len()).map(|i| format!("s{i}")).collect();
    let alphas = roots.iter().map(|r| r.as_weight().to_covector(n)).collect::<Result<_>>()?;
    let checks = roots.iter().map(|r| point_to_dense(&r.coroot()?, n)).collect::<Result<_>>()?;
    let delta = AffineWeight::new(Rational::zero(), SparseVector::new(), Rational::one()).to_covector(n)?;
    ReflectionData::new(n + 2, names, alphas, checks)?.with_null_root(delta)
}
