//! Self-check suites over the built-in systems. Every run is a pure function
//! of the suite name and the seed, so summaries are byte-for-byte
//! reproducible.

use std::collections::{HashMap, HashSet, VecDeque};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::affine::{
    affine_reflection_data, d_value, example_47, is_d_minimal_closed_form, is_d_minimal_generic, minimize_d,
    point_from_dense, point_to_dense, AffinePoint, AffineType, AffineWeight, TransLattice,
};
use crate::arith::{pair, Covector, DenseVector, Rational, SparseVector};
use crate::convexity::{
    cone_cv, cone_of_differences, is_extreme, is_minimizing, maximizer_set, verify_dual, verify_primal, Budgets,
};
use crate::coxeter::{
    descent_test, enumerate_group, generate_roots, stabilizer, stabilizer_dual, tits_cone_member, Descent,
    OrbitTable, TitsVerdict,
};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::reflection::{dihedral, PairKind, ReflectionData};
use crate::root_systems::{coroot, Family, FiniteRootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteName {
    Finite,
    Affine,
    Examples,
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "finite" => Ok(SuiteName::Finite),
            "affine" => Ok(SuiteName::Affine),
            "examples" => Ok(SuiteName::Examples),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub suite: SuiteName,
    pub seed: u64,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn record(&mut self, name: impl Into<String>, outcome: Result<(bool, String)>) {
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(Check { name: name.into(), passed, detail });
    }
}

pub fn run_suite(name: SuiteName, seed: u64) -> SuiteSummary {
    let mut rec = Recorder { checks: Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match name {
        SuiteName::Finite => finite_suite(&mut rec, &mut rng),
        SuiteName::Affine => affine_suite(&mut rec, &mut rng),
        SuiteName::Examples => examples_suite(&mut rec),
    }
    let failed = rec.checks.iter().filter(|c| !c.passed).count();
    SuiteSummary { suite: name, seed, passed: failed == 0, total: rec.checks.len(), failed, checks: rec.checks }
}

fn weyl_order(f: Family, n: usize) -> usize {
    let fact: usize = (1..=n).product();
    match f {
        Family::A => fact * (n + 1),
        Family::B | Family::C | Family::BC => fact << n,
        Family::D => fact << (n - 1),
    }
}

/// A random point of the chamber: a random integer vector moved into `K` by
/// descent (always terminates for finite groups).
pub fn random_chamber_point(d: &ReflectionData, rng: &mut impl Rng, range: i64) -> Result<DenseVector> {
    let v = DenseVector((0..d.dim()).map(|_| Rational::int(rng.gen_range(-range..=range))).collect());
    match tits_cone_member(d, &v, 10_000)? {
        TitsVerdict::Yes { chamber_point, .. } => Ok(chamber_point),
        _ => Err(Error::Domain("descent did not reach the chamber".into())),
    }
}

/// A random covector of `C_S^⋆`, via descent in the transposed data.
pub fn random_dual_chamber_point(d: &ReflectionData, rng: &mut impl Rng, range: i64) -> Result<Covector> {
    Ok(random_chamber_point(&d.transposed(), rng, range)?.to_covector())
}

fn finite_systems(ranks: std::ops::RangeInclusive<usize>) -> Vec<(String, ReflectionData)> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for n in ranks.clone() {
            if n >= f.min_rank() {
                out.push((format!("{f}{n}"), FiniteRootSystem::build(f, n).unwrap().reflection_data));
            }
        }
    }
    out
}

/// Exhaustive check of `ℓ(g r_s) > ℓ(g) ⟺ descent_test = ASCENT`.
pub fn descent_violations(d: &ReflectionData) -> Result<usize> {
    let table = enumerate_group(d, 100_000)?;
    let lengths: HashMap<&Matrix, usize> = table.elements.iter().map(|g| (g.matrix(), g.length())).collect();
    let mut bad = 0;
    for g in &table.elements {
        for s in 0..d.rank() {
            let gs = g.matrix().mul(&d.reflection_matrix(s));
            let up = lengths[&gs] > g.length();
            let verdict = descent_test(d, g, s)?;
            if up != (verdict == Descent::Ascent) {
                bad += 1;
            }
        }
    }
    Ok(bad)
}

fn finite_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    for (name, d) in finite_systems(2..=4) {
        rec.record(format!("lcs/{name}"), Ok({
            let r = d.check_lcs();
            let finite_labels = r.pairs.iter().all(|p| matches!(p.kind, PairKind::Finite(_)));
            (r.valid && finite_labels, format!("{:?}", r.coxeter_matrix))
        }));
    }
    for f in [Family::A, Family::B, Family::C, Family::D] {
        for n in 2..=4 {
            let d = FiniteRootSystem::build(f, n).unwrap().reflection_data;
            rec.record(format!("order/{f}{n}"), enumerate_group(&d, 100_000).map(|t| {
                (t.len() == weyl_order(f, n) && !t.truncated, format!("{} elements", t.len()))
            }));
        }
    }
    for (f, n) in [(Family::A, 3), (Family::B, 3)] {
        let d = FiniteRootSystem::build(f, n).unwrap().reflection_data;
        rec.record(format!("descent/{f}{n}"), descent_violations(&d).map(|b| (b == 0, format!("{b} violations"))));
    }

    let budgets = Budgets::default();
    for (name, d) in finite_systems(2..=3) {
        rec.record(format!("convexity/{name}"), (|| {
            let mut failures = 0;
            for _ in 0..10 {
                let v = random_chamber_point(&d, rng, 3)?;
                let r = verify_primal(&d, &v, budgets)?;
                failures += r.failures.len() + usize::from(r.advisory);
                let lam = random_dual_chamber_point(&d, rng, 3)?;
                let r = verify_dual(&d, &lam, budgets)?;
                failures += r.failures.len() + usize::from(r.advisory);
            }
            Ok((failures == 0, format!("{failures} failures over 20 base points")))
        })());

        rec.record(format!("differences/{name}"), (|| {
            let mut bad = 0;
            for _ in 0..3 {
                let v = random_chamber_point(&d, rng, 3)?;
                let diff = cone_of_differences(&d, &v, budgets.orbit)?;
                let cv = cone_cv(&d, &v, budgets.root)?;
                if !diff.cone.same_set(&cv.cone.negated())? {
                    bad += 1;
                }
            }
            Ok((bad == 0, format!("{bad} mismatches")))
        })());

        rec.record(format!("minimizing/{name}"), (|| {
            let mut bad = 0;
            for _ in 0..5 {
                let v = random_chamber_point(&d, rng, 3)?;
                let lam = Covector((0..d.dim()).map(|_| Rational::int(rng.gen_range(-3..=3))).collect());
                let orbit = OrbitTable::enumerate(&d, &v, budgets.orbit)?;
                let at_v = pair(&lam, &v)?;
                let mut direct = true;
                for p in orbit.points() {
                    if pair(&lam, p)? < at_v {
                        direct = false;
                    }
                }
                if direct != is_minimizing(&d, &lam, &v, budgets.root)? {
                    bad += 1;
                }
            }
            Ok((bad == 0, format!("{bad} disagreements")))
        })());
    }

    for (f, n) in [(Family::B, 2), (Family::A, 3)] {
        let d = FiniteRootSystem::build(f, n).unwrap().reflection_data;
        rec.record(format!("stabilizer/{f}{n}"), stabilizer_agreement(&d).map(|b| (b == 0, format!("{b} mismatches"))));
    }
    let b2 = FiniteRootSystem::build(Family::B, 2).unwrap().reflection_data;
    rec.record("maximizer/B2", (|| {
        let v = DenseVector::from_ints(&[3, 1]);
        let mut ok = true;
        // λ on the wall of α̌_1 = e_1 - e_2, then on the wall of α̌_2 = 2e_2.
        for lam in [Covector::from_ints(&[1, 1]), Covector::from_ints(&[1, 0])] {
            let r = maximizer_set(&b2, &lam, &v, 1000)?;
            ok &= r.equals_stabilizer_orbit && r.inverse_condition && r.points.len() == 2;
        }
        Ok((ok, "two walls".into()))
    })());
}

/// Wall points of the chamber: nonnegative combinations of the chamber's
/// generators with at least one zero coefficient.
pub fn wall_points(d: &ReflectionData) -> Result<Vec<DenseVector>> {
    let gens = d.fundamental_chamber()?.generators().to_vec();
    let mut out = vec![DenseVector::zeros(d.dim())];
    let n = gens.len();
    for mask in 1..(1u32 << n) {
        if mask.count_ones() as usize == n {
            continue;
        }
        let mut v = DenseVector::zeros(d.dim());
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                v = v.add_scaled(&Rational::int(i as i64 + 1), g);
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Number of wall points where the enumerated fixer of `v` (resp. `λ`)
/// differs from the parabolic subgroup.
pub fn stabilizer_agreement(d: &ReflectionData) -> Result<usize> {
    let group = enumerate_group(d, 100_000)?;
    let mut bad = 0;
    for v in wall_points(d)? {
        let fixer: HashSet<&Matrix> = group.elements.iter().filter(|g| g.act(&v) == v).map(|g| g.matrix()).collect();
        let st = stabilizer(d, &v, 100_000)?;
        let para: HashSet<&Matrix> = st.elements.iter().map(|g| g.matrix()).collect();
        bad += usize::from(fixer != para);
    }
    for lam in wall_points(&d.transposed())? {
        let lam = lam.to_covector();
        let fixer: HashSet<&Matrix> =
            group.elements.iter().filter(|g| g.act_dual(&lam) == lam).map(|g| g.matrix()).collect();
        let st = stabilizer_dual(d, &lam, 100_000)?;
        let para: HashSet<&Matrix> = st.elements.iter().map(|g| g.matrix()).collect();
        bad += usize::from(fixer != para);
    }
    Ok(bad)
}

/// Random rational with denominator in `1..=4` and `|value| ≤ bound`.
pub fn random_rational(rng: &mut impl Rng, bound: &Rational) -> Rational {
    let q = rng.gen_range(1..=4i64);
    let limit = (bound * &Rational::int(q)).floor();
    let limit: i64 = limit.try_into().unwrap_or(0);
    Rational::frac(rng.gen_range(-limit..=limit), q)
}

/// Random weight with `λ_c > 0`, `|supp λ̄| ≤ max_support`, `|λ_j| ≤ 2λ_c`.
pub fn random_weight(rng: &mut impl Rng, max_support: usize) -> AffineWeight {
    let lc = Rational::frac(rng.gen_range(1..=4), rng.gen_range(1..=2));
    let k = rng.gen_range(0..=max_support);
    let bound = &lc * &Rational::int(2);
    let mut bar = SparseVector::new();
    for _ in 0..k {
        let j = rng.gen_range(1..=max_support + 2);
        bar.set(j, random_rational(rng, &bound));
    }
    let ld = Rational::frac(rng.gen_range(-3..=3), 1);
    AffineWeight::new(lc, bar, ld)
}

/// Subgroup generated by `{n α̌ : α ∈ Δ_n, n = 1, 2}` on `J = {1..k}`,
/// closed inside the box `‖x‖_∞ ≤ radius`.
pub fn lattice_closure(ty: AffineType, k: usize, radius: i64) -> Result<HashSet<Vec<i64>>> {
    let idx: Vec<usize> = (1..=k).collect();
    let mut gens: Vec<Vec<i64>> = Vec::new();
    for n in 1..=2i64 {
        for a in ty.level_roots(&idx, n) {
            let c = coroot(&a)?.scale(&Rational::int(n));
            gens.push(c.to_dense(k, 1)?.iter().map(|x| x.to_i64().expect("integral coroot")).collect());
        }
    }
    let start = vec![0i64; k];
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| a + b).collect();
            if y.iter().all(|v| v.abs() <= radius) && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

fn box_points(k: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p| (-radius..=radius).map(move |v| {
                let mut q = p.clone();
                q.push(v);
                q
            }))
            .collect();
    }
    out
}

fn to_sparse(x: &[i64]) -> SparseVector {
    SparseVector::from_pairs(x.iter().enumerate().map(|(i, &v)| (i + 1, Rational::int(v))))
}

/// Minimum of `f` by enumeration: support coordinates range over the box
/// `‖x‖_∞ ≤ ⌈max|λ_j|/λ_c⌉ + 2`; the best completion on fresh coordinates
/// is added in closed form (`|σ|` unit entries for the zero-sum lattice, one
/// entry for an odd sum of the even-sum lattice).
pub fn brute_force_min(ty: AffineType, lambda: &AffineWeight) -> Rational {
    let support: Vec<usize> = lambda.bar.support().collect();
    let max_abs = lambda.bar.iter().map(|(_, v)| v.abs()).max().unwrap_or_else(Rational::zero);
    let radius: i64 = (max_abs / &lambda.lc).ceil().try_into().unwrap();
    let radius = radius + 2;
    let half_lc = &lambda.lc * &Rational::frac(1, 2);
    let lat = ty.lattice();
    let mut best: Option<Rational> = None;
    for p in box_points(support.len(), radius) {
        let x = SparseVector::from_pairs(support.iter().zip(&p).map(|(&j, &v)| (j, Rational::int(v))));
        let sum: i64 = p.iter().sum();
        let aux = match lat {
            TransLattice::Integer => Some(Rational::zero()),
            TransLattice::Even => p.iter().all(|v| v % 2 == 0).then(Rational::zero),
            TransLattice::EvenSum => Some(if sum % 2 == 0 { Rational::zero() } else { half_lc.clone() }),
            TransLattice::ZeroSum => Some(&half_lc * &Rational::int(sum.abs())),
        };
        if let Some(aux) = aux {
            let v = d_value(lambda, &x) + aux;
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    best.expect("the origin is always a candidate")
}

fn affine_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    for ty in AffineType::ALL {
        for n in ty.min_support()..=4 {
            rec.record(format!("lcs/{ty}/{n}"), affine_reflection_data(ty, n).map(|d| {
                let r = d.check_lcs();
                (r.valid, format!("{} generators", d.rank()))
            }));
        }
    }
    for ty in AffineType::ALL {
        for k in 2..=3 {
            rec.record(format!("lattice/{ty}/{k}"), lattice_closure(ty, k, 2).map(|closure| {
                let lat = ty.lattice();
                let bad = box_points(k, 2).iter().filter(|p| closure.contains(*p) != lat.contains(&to_sparse(p))).count();
                (bad == 0, format!("{bad} disagreements in the box of radius 2"))
            }));
        }
    }
    for ty in AffineType::ALL {
        rec.record(format!("dmin/{ty}"), (|| {
            let mut bad = 0;
            for _ in 0..200 {
                let lam = random_weight(rng, 5);
                if is_d_minimal_closed_form(ty, &lam) != is_d_minimal_generic(ty, &lam, 1)? {
                    bad += 1;
                }
            }
            Ok((bad == 0, format!("{bad} disagreements over 200 weights")))
        })());
        rec.record(format!("minimize/{ty}"), (|| {
            let mut bad = 0;
            let mut consistency = 0;
            for _ in 0..40 {
                let lam = random_weight(rng, 3);
                let r = minimize_d(ty, &lam);
                let Some(min) = r.min.clone() else {
                    bad += 1;
                    continue;
                };
                let argmin_ok = r.argmin.as_ref().is_some_and(|x| ty.lattice().contains(x) && d_value(&lam, x) == min);
                if min != brute_force_min(ty, &lam) || !argmin_ok {
                    bad += 1;
                }
                if is_d_minimal_closed_form(ty, &lam) != (min == lam.ld) {
                    consistency += 1;
                }
            }
            Ok((bad == 0 && consistency == 0, format!("{bad} oracle mismatches, {consistency} d-minimality mismatches")))
        })());
        rec.record(format!("orbit-values/{ty}"), orbit_values_check(ty, rng));
    }
    rec.record("example47", example_47(4).map(|r| {
        let expected: Vec<Rational> = (1..=4)
            .map(|n| -(1..=n).map(|k| Rational::frac(1, (k * k) as i64)).sum::<Rational>())
            .collect();
        let values: Vec<Rational> = r.witnesses.iter().map(|w| w.value.clone()).collect();
        let minima_ok = r.truncated_minima.iter().all(|t| t.result.min.as_ref() == Some(&expected[t.m - 1]));
        (
            values == expected && r.strictly_decreasing && r.bound_respected && minima_ok,
            format!("lower bound {}", r.lower_bound),
        )
    }));
}

/// Every `μ = wλ` in a budgeted affine orbit has `μ(d) = f(x)` with
/// `w⁻¹d = (‖x‖²/2, x, 1)` and `x` in the translation lattice, so
/// `μ(d) ≥ min f`.
fn orbit_values_check(ty: AffineType, rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let n = 3;
    let d = affine_reflection_data(ty, n)?;
    let lam = random_weight(rng, n);
    let lam = AffineWeight::new(lam.lc, lam.bar.iter().filter(|(j, _)| *j <= n).map(|(j, v)| (j, v.clone())).collect::<SparseVector>(), lam.ld);
    let min = minimize_d(ty, &lam).min.ok_or_else(|| Error::Domain("unbounded".into()))?;
    let orbit = OrbitTable::enumerate(&d, &lam.to_covector(n)?, 300)?;
    let dd = point_to_dense(&AffinePoint::d(), n)?;
    let mut bad = 0;
    for (mu, g) in orbit.iter() {
        let p = point_from_dense(&g.inverse().act(&dd))?;
        let x = p.x.clone();
        let shape = p.t == Rational::one() && p.z == x.norm_sq() * Rational::frac(1, 2) && ty.lattice().contains(&x);
        let mu_d = mu.entries()[n + 1].clone();
        if !shape || mu_d != d_value(&lam, &x) || mu_d < min {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{bad} bad orbit points out of {}", orbit.len())))
}

fn examples_suite(rec: &mut Recorder) {
    let a = dihedral(2);
    let b = dihedral(3);
    let (s, t) = (0, 1);
    let int = |x: &[i64]| DenseVector::from_ints(x);

    rec.record("example-a/lcs", Ok({
        let r = a.check_lcs();
        (r.valid && r.pair_kind("s", "t") == Some(PairKind::Affine), format!("{:?}", r.coxeter_matrix))
    }));
    rec.record("example-b/lcs", Ok({
        let r = b.check_lcs();
        (r.valid && r.pair_kind("s", "t") == Some(PairKind::Hyperbolic), format!("{:?}", r.coxeter_matrix))
    }));
    rec.record("example-a/reflections", (|| {
        let v = a.reflect(t, &a.reflect(s, &int(&[1, 0]))?)?;
        let f = a.reflect_dual(t, &a.reflect_dual(s, a.alpha(s))?)?;
        let orbit = OrbitTable::enumerate(&a, &int(&[1, 0]), 50)?;
        Ok((
            v == int(&[3, -2]) && f == Covector::from_ints(&[-1, -2]) && orbit.contains(&int(&[-5, 6])),
            format!("r_t r_s(α_s^*) = {v:?}"),
        ))
    })());
    rec.record("example-a/cones", (|| {
        let h = a.coroot_cone().lineality();
        let k = a.fundamental_chamber()?;
        let orthant = crate::cone::PolyhedralCone::new(2, vec![int(&[1, 0]), int(&[0, 1])])?;
        Ok((h == vec![int(&[1, -1])] && k.same_set(&orthant)?, format!("lineality {h:?}")))
    })());
    rec.record("example-a/roots", (|| {
        let roots = generate_roots(&a, 40)?;
        let ca = a.alpha_check(s).clone();
        let coroots_ok = roots.coroots().all(|c| *c == ca || *c == -&ca);
        // Every root is ±α_s or ±α_t plus an even multiple of α_s + α_t, and
        // all shifts with |k| ≤ 3 are reached.
        // (a+1, a) and (a, a+1) over integer a enumerate exactly that set.
        let shape_ok = roots.roots().all(|r| {
            r.0.len() == 2 && r.0.iter().all(|c| c.is_integer()) && (&r.0[0] - &r.0[1]).abs() == Rational::one()
        });
        let got: HashSet<Covector> = roots.roots().cloned().collect();
        let mut missing = 0;
        for k in -3i64..=3 {
            for (x, y) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                if !got.contains(&Covector::from_ints(&[x + 2 * k, y + 2 * k])) {
                    missing += 1;
                }
            }
        }
        Ok((coroots_ok && shape_ok && missing == 0, format!("{} roots, {missing} missing", got.len())))
    })());
    rec.record("example-a/tits", (|| {
        let yes = matches!(tits_cone_member(&a, &int(&[1, 0]), 10)?, TitsVerdict::Yes { ref word, .. } if word.is_empty());
        let unknown = matches!(tits_cone_member(&a, &int(&[-1, -1]), 100)?, TitsVerdict::Unknown { .. });
        Ok((yes && unknown, String::new()))
    })());
    rec.record("example-a/stabilizer-dual", (|| {
        let st = stabilizer_dual(&a, &Covector::from_ints(&[1, 1]), 20)?;
        Ok((st.generators == vec![s, t], format!("{:?}", st.generators)))
    })());
    rec.record("example-a/convexity", (|| {
        let budgets = Budgets { orbit: 13, root: 28, cap: 100 };
        let mut fails = 0;
        for v in [int(&[1, 0]), int(&[0, 1]), int(&[1, 1]), int(&[2, 5])] {
            let r = verify_primal(&a, &v, budgets)?;
            fails += r.failures.len() + usize::from(r.advisory);
        }
        let fixed = verify_dual(&a, &Covector::from_ints(&[1, 1]), budgets)?;
        fails += fixed.failures.len() + usize::from(fixed.advisory);
        // α_s is not in 𝒲·C_S^⋆; its report must be flagged advisory.
        let control = verify_dual(&a, a.alpha(s), budgets)?;
        Ok((
            fails == 0 && control.advisory,
            format!("control α_s: {} failures, precondition {:?}", control.failures.len(), control.precondition),
        ))
    })());
    rec.record("example-a/extreme", (|| {
        Ok((!is_extreme(&a, &int(&[1, 0]), 28)?, String::new()))
    })());
    rec.record("example-a/dual-system", (|| {
        let ds = a.build_dual_system()?;
        Ok((ds.u_basis.len() == 1 && ds.s_tilde.is_empty(), format!("U basis {:?}", ds.u_basis)))
    })());
    rec.record("example-b/counterexample", (|| {
        let cs = b.alpha_check(s).clone();
        let st = b.reflect(s, &b.reflect(t, &cs)?)?;
        let ts = b.reflect(t, &b.reflect(s, &cs)?)?;
        let half_sum = (&st + &ts).scale(&Rational::frac(1, 2));
        let ok_values = st == combo(&b, &int(&[8, 3]))
            && ts == combo(&b, &int(&[-1, -3]))
            && half_sum == cs.scale(&Rational::frac(7, 2));
        let r = verify_primal(&b, &cs, Budgets { orbit: 30, root: 30, cap: 100 })?;
        Ok((ok_values && !r.passed(), format!("{} failures", r.failures.len())))
    })());
    rec.record("example-b/pointed", Ok((b.coroot_cone().is_pointed(), String::new())));
}

/// `x α̌_s + y α̌_t` for coefficient vector `(x, y)`.
fn combo(d: &ReflectionData, c: &DenseVector) -> DenseVector {
    d.alpha_check(0).scale(&c.0[0]).add_scaled(&c.0[1], d.alpha_check(1))
}
