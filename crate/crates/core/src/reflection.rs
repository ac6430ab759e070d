//! Reflection data `(V, (α_s), (α̌_s))` and the criteria deciding whether it
//! is a linear Coxeter system.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{pair, Covector, DenseVector, Rational};
use crate::cone::PolyhedralCone;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve_combination, Matrix};

/// Families `α_s ∈ V*` and `α̌_s ∈ V` with `α_s(α̌_s) = 2`.
///
/// `null_root`, when present, is a `𝒲`-invariant strictly positive
/// combination of the `α_s` (the imaginary root of an affine system). It is
/// only used to certify that a vector lies outside the Tits cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SystemJson", into = "SystemJson")]
pub struct ReflectionData {
    dim: usize,
    names: Vec<String>,
    alphas: Vec<Covector>,
    alpha_checks: Vec<DenseVector>,
    null_root: Option<Covector>,
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    dim: usize,
    #[serde(rename = "S")]
    s: Vec<String>,
    alpha: BTreeMap<String, Covector>,
    alpha_check: BTreeMap<String, DenseVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    null_root: Option<Covector>,
}

impl TryFrom<SystemJson> for ReflectionData {
    type Error = Error;

    fn try_from(j: SystemJson) -> Result<Self> {
        let mut alphas = Vec::with_capacity(j.s.len());
        let mut checks = Vec::with_capacity(j.s.len());
        for name in &j.s {
            let a = j
                .alpha
                .get(name)
                .ok_or_else(|| Error::Parse(format!("missing alpha for {name:?}")))?;
            let c = j
                .alpha_check
                .get(name)
                .ok_or_else(|| Error::Parse(format!("missing alpha_check for {name:?}")))?;
            alphas.push(a.clone());
            checks.push(c.clone());
        }
        if j.alpha.len() != j.s.len() || j.alpha_check.len() != j.s.len() {
            return Err(Error::Parse("alpha/alpha_check keys do not match S".into()));
        }
        let data = ReflectionData::new(j.dim, j.s, alphas, checks)?;
        match j.null_root {
            Some(d) => data.with_null_root(d),
            None => Ok(data),
        }
    }
}

impl From<ReflectionData> for SystemJson {
    fn from(d: ReflectionData) -> Self {
        SystemJson {
            dim: d.dim,
            alpha: d.names.iter().cloned().zip(d.alphas).collect(),
            alpha_check: d.names.iter().cloned().zip(d.alpha_checks).collect(),
            s: d.names,
            null_root: d.null_root,
        }
    }
}

impl ReflectionData {
    pub fn new(
        dim: usize,
        names: Vec<String>,
        alphas: Vec<Covector>,
        alpha_checks: Vec<DenseVector>,
    ) -> Result<Self> {
        if names.len() != alphas.len() || names.len() != alpha_checks.len() {
            return Err(Error::InvalidSystem("family sizes differ".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidSystem(format!("duplicate generator name {n:?}")));
            }
        }
        for (a, c) in alphas.iter().zip(&alpha_checks) {
            if a.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: a.dim() });
            }
            if c.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: c.dim() });
            }
        }
        for ((n, a), c) in names.iter().zip(&alphas).zip(&alpha_checks) {
            let p = pair(a, c)?;
            if p != Rational::int(2) {
                return Err(Error::InvalidSystem(format!("alpha_{n}(alpha_check_{n}) = {p}, expected 2")));
            }
        }
        Ok(ReflectionData { dim, names, alphas, alpha_checks, null_root: None })
    }

    /// Generator names default to `s0, s1, ...`.
    pub fn from_families(dim: usize, alphas: Vec<Covector>, alpha_checks: Vec<DenseVector>) -> Result<Self> {
        let names = (0..alphas.len()).map(|i| format!("s{i}")).collect();
        ReflectionData::new(dim, names, alphas, alpha_checks)
    }

    /// Attaches an invariant null root after verifying it.
    pub fn with_null_root(mut self, delta: Covector) -> Result<Self> {
        if delta.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: delta.dim() });
        }
        for c in &self.alpha_checks {
            if !pair(&delta, c)?.is_zero() {
                return Err(Error::InvalidSystem("null root is not invariant".into()));
            }
        }
        let basis: Vec<Vec<Rational>> = self.alphas.iter().map(|a| a.0.clone()).collect();
        let coeffs = solve_combination(&basis, delta.entries())
            .ok_or_else(|| Error::InvalidSystem("null root is not a combination of the alphas".into()))?;
        let independent = crate::linalg::rank(&basis) == basis.len();
        if !independent || !coeffs.iter().all(Rational::is_positive) {
            return Err(Error::InvalidSystem(
                "null root must be a strictly positive combination of independent alphas".into(),
            ));
        }
        self.null_root = Some(delta);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.alphas.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn alpha(&self, s: usize) -> &Covector {
        &self.alphas[s]
    }

    pub fn alpha_check(&self, s: usize) -> &DenseVector {
        &self.alpha_checks[s]
    }

    pub fn alphas(&self) -> &[Covector] {
        &self.alphas
    }

    pub fn alpha_checks(&self) -> &[DenseVector] {
        &self.alpha_checks
    }

    pub fn null_root(&self) -> Option<&Covector> {
        self.null_root.as_ref()
    }

    /// `a_st = α_s(α̌_t)`.
    pub fn cartan(&self, s: usize, t: usize) -> Rational {
        crate::arith::inner(self.alphas[s].entries(), self.alpha_checks[t].entries())
    }

    fn check_index(&self, s: usize) -> Result<()> {
        if s < self.rank() {
            Ok(())
        } else {
            Err(Error::UnknownIndex(s))
        }
    }

    /// `r_s(v) = v - α_s(v) α̌_s`.
    pub fn reflect(&self, s: usize, v: &DenseVector) -> Result<DenseVector> {
        self.check_index(s)?;
        let c = pair(&self.alphas[s], v)?;
        Ok(v.add_scaled(&-c, &self.alpha_checks[s]))
    }

    /// Adjoint action on `V*`: `f - f(α̌_s) α_s`.
    pub fn reflect_dual(&self, s: usize, f: &Covector) -> Result<Covector> {
        self.check_index(s)?;
        let c = pair(f, &self.alpha_checks[s])?;
        Ok(f.add_scaled(&-c, &self.alphas[s]))
    }

    /// Matrix of `r_s` on `V` (columns are images of basis vectors).
    pub fn reflection_matrix(&self, s: usize) -> Matrix {
        let mut m = Matrix::identity(self.dim);
        let a = &self.alphas[s];
        let c = &self.alpha_checks[s];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let x = m.get(i, j) - &(&c.0[i] * &a.0[j]);
                m.set(i, j, x);
            }
        }
        m
    }

    /// `C_S = cone{α̌_s}` in `V`.
    pub fn coroot_cone(&self) -> PolyhedralCone {
        PolyhedralCone::new(self.dim, self.alpha_checks.clone()).expect("dimensions checked")
    }

    /// `Č_S = cone{α_s}` in `V*`.
    pub fn root_cone(&self) -> PolyhedralCone {
        PolyhedralCone::from_covectors(self.dim, &self.alphas).expect("dimensions checked")
    }

    /// Sign test `α_s(v) ≥ 0` for all `s`.
    pub fn in_chamber(&self, v: &DenseVector) -> Result<bool> {
        for a in &self.alphas {
            if pair(a, v)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `λ ∈ C_S^⋆`, i.e. `λ(α̌_s) ≥ 0` for all `s`.
    pub fn in_dual_chamber(&self, f: &Covector) -> Result<bool> {
        for c in &self.alpha_checks {
            if pair(f, c)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `K = (Č_S)^⋆` as a generator list.
    pub fn fundamental_chamber(&self) -> Result<PolyhedralCone> {
        self.root_cone().dual()
    }

    /// The same data with `V` and `V*` exchanged.
    pub fn transposed(&self) -> ReflectionData {
        ReflectionData {
            dim: self.dim,
            names: self.names.clone(),
            alphas: self.alpha_checks.iter().map(DenseVector::to_covector).collect(),
            alpha_checks: self.alphas.iter().map(Covector::to_dense).collect(),
            null_root: None,
        }
    }

    /// Restriction of both families to the generators listed in `subset`.
    pub fn subsystem(&self, subset: &[usize]) -> Result<ReflectionData> {
        for (i, &s) in subset.iter().enumerate() {
            self.check_index(s)?;
            if subset[..i].contains(&s) {
                return Err(Error::Domain(format!("generator {s} listed twice")));
            }
        }
        Ok(ReflectionData {
            dim: self.dim,
            names: subset.iter().map(|&s| self.names[s].clone()).collect(),
            alphas: subset.iter().map(|&s| self.alphas[s].clone()).collect(),
            alpha_checks: subset.iter().map(|&s| self.alpha_checks[s].clone()).collect(),
            null_root: None,
        })
    }

    pub fn check_lcs(&self) -> LcsReport {
        LcsReport::evaluate(self)
    }

    /// The linear Coxeter system on `U = H(C_S)^⊥ ⊆ V*` with generators
    /// `S̃ = {s : α̌_s ∉ H(C_S)}`.
    pub fn build_dual_system(&self) -> Result<DualSystem> {
        if !self.check_lcs().valid {
            return Err(Error::InvalidSystem("input is not a linear Coxeter system".into()));
        }
        let lineality = self.coroot_cone().lineality();
        let h_rows: Vec<Vec<Rational>> = lineality.iter().map(|h| h.0.clone()).collect();
        let u_basis: Vec<Covector> = nullspace(&h_rows, self.dim).into_iter().map(Covector).collect();

        let mut s_tilde = Vec::new();
        for (s, c) in self.alpha_checks.iter().enumerate() {
            let in_h = !h_rows.is_empty() && solve_combination(&h_rows, c.entries()).is_some();
            if !in_h {
                s_tilde.push(s);
            }
        }

        let basis_rows: Vec<Vec<Rational>> = u_basis.iter().map(|u| u.0.clone()).collect();
        let k = u_basis.len();
        let mut names = Vec::new();
        let mut alphas = Vec::new();
        let mut checks = Vec::new();
        for &s in &s_tilde {
            let q = Covector(u_basis.iter().map(|u| pair(u, &self.alpha_checks[s]).unwrap()).collect());
            let coords = solve_combination(&basis_rows, self.alphas[s].entries()).ok_or_else(|| {
                Error::InvalidSystem(format!("alpha_{} does not lie in U", self.names[s]))
            })?;
            names.push(self.names[s].clone());
            alphas.push(q);
            checks.push(DenseVector(coords));
        }
        let data = ReflectionData::new(k, names, alphas, checks)?;
        Ok(DualSystem { data, u_basis, lineality, s_tilde })
    }
}

/// Output of [`ReflectionData::build_dual_system`]. Vectors of `data` are
/// coordinates with respect to `u_basis`.
#[derive(Clone, Debug, Serialize)]
pub struct DualSystem {
    pub data: ReflectionData,
    pub u_basis: Vec<Covector>,
    pub lineality: Vec<DenseVector>,
    pub s_tilde: Vec<usize>,
}

/// Coxeter label of a pair, from the product `a_st a_ts`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// `a_st a_ts = 4 cos²(π/k)`, `k ∈ {2, 3, 4, 6}`.
    Finite(u32),
    /// Product exactly 4.
    Affine,
    /// Product above 4.
    Hyperbolic,
    /// Violates (C1) or (C2).
    Invalid,
}

impl PairKind {
    pub fn label(&self) -> String {
        match self {
            PairKind::Finite(k) => k.to_string(),
            PairKind::Affine | PairKind::Hyperbolic => "inf".into(),
            PairKind::Invalid => "invalid".into(),
        }
    }

    pub fn order(&self) -> Option<u32> {
        match self {
            PairKind::Finite(k) => Some(*k),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub s: String,
    pub t: String,
    pub a_st: Rational,
    pub a_ts: Rational,
    pub product: Rational,
    pub kind: PairKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub s: String,
    pub t: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcsReport {
    pub c1_ok: bool,
    pub c2_ok: bool,
    pub lcs1_ok: bool,
    /// (C1) implies (LCS2).
    pub lcs2_implied: bool,
    pub valid: bool,
    /// `C_S` pointed, i.e. the transposed data is a linear Coxeter system too.
    pub coroot_cone_pointed: bool,
    /// Entries `"1"` on the diagonal, `"2"`, `"3"`, `"4"`, `"6"` or `"inf"`.
    pub coxeter_matrix: Vec<Vec<String>>,
    pub pairs: Vec<PairReport>,
    pub violations: Vec<Violation>,
}

impl LcsReport {
    fn evaluate(d: &ReflectionData) -> LcsReport {
        let n = d.rank();
        let mut matrix = vec![vec!["1".to_string(); n]; n];
        let mut pairs = Vec::new();
        let mut violations = Vec::new();
        let (mut c1_ok, mut c2_ok) = (true, true);
        let four = Rational::int(4);

        for s in 0..n {
            for t in s + 1..n {
                let a_st = d.cartan(s, t);
                let a_ts = d.cartan(t, s);
                let product = &a_st * &a_ts;
                let c1 = (a_st.is_negative() && a_ts.is_negative()) || (a_st.is_zero() && a_ts.is_zero());
                let kind = if !c1 {
                    c1_ok = false;
                    violations.push(Violation {
                        s: d.names[s].clone(),
                        t: d.names[t].clone(),
                        reason: format!("C1: a_st = {a_st}, a_ts = {a_ts} are not both negative or both zero"),
                    });
                    PairKind::Invalid
                } else if product > four {
                    PairKind::Hyperbolic
                } else if product == four {
                    PairKind::Affine
                } else {
                    match product.to_i64() {
                        Some(0) => PairKind::Finite(2),
                        Some(1) => PairKind::Finite(3),
                        Some(2) => PairKind::Finite(4),
                        Some(3) => PairKind::Finite(6),
                        _ => {
                            c2_ok = false;
                            violations.push(Violation {
                                s: d.names[s].clone(),
                                t: d.names[t].clone(),
                                reason: format!("C2: product {product} is neither >= 4 nor 4cos^2(pi/k)"),
                            });
                            PairKind::Invalid
                        }
                    }
                };
                matrix[s][t] = kind.label();
                matrix[t][s] = kind.label();
                pairs.push(PairReport {
                    s: d.names[s].clone(),
                    t: d.names[t].clone(),
                    a_st,
                    a_ts,
                    product,
                    kind,
                });
            }
        }

        let lcs1_ok = d.root_cone().is_pointed();
        if !lcs1_ok {
            violations.push(Violation {
                s: String::new(),
                t: String::new(),
                reason: "LCS1: the cone spanned by the alphas is not pointed".into(),
            });
        }
        LcsReport {
            c1_ok,
            c2_ok,
            lcs1_ok,
            lcs2_implied: c1_ok,
            valid: c1_ok && c2_ok && lcs1_ok,
            coroot_cone_pointed: d.coroot_cone().is_pointed(),
            coxeter_matrix: matrix,
            pairs,
            violations,
        }
    }

    pub fn pair_kind(&self, s: &str, t: &str) -> Option<PairKind> {
        self.pairs
            .iter()
            .find(|p| (p.s == s && p.t == t) || (p.s == t && p.t == s))
            .map(|p| p.kind)
    }
}

/// Rank-two data on `ℝ²` with `α_s, α_t` the coordinate functionals and
/// `α_s(α̌_t) = α_t(α̌_s) = -a`.
pub fn dihedral(a: i64) -> ReflectionData {
    ReflectionData::new(
        2,
        vec!["s".into(), "t".into()],
        vec![Covector::from_ints(&[1, 0]), Covector::from_ints(&[0, 1])],
        vec![DenseVector::from_ints(&[2, -a]), DenseVector::from_ints(&[-a, 2])],
    )
    .expect("valid dihedral data")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a2() -> ReflectionData {
        dihedral(1)
    }

    #[test]
    fn rejects_bad_pairing() {
        let r = ReflectionData::from_families(
            2,
            vec![Covector::from_ints(&[1, 0])],
            vec![DenseVector::from_ints(&[1, 0])],
        );
        assert!(matches!(r, Err(Error::InvalidSystem(_))));
    }

    #[test]
    fn reflect_examples() {
        let d = a2();
        let c = d.alpha_check(0).clone();
        assert_eq!(d.reflect(0, &c).unwrap(), -&c);
        // (0,1) is in ker α_s.
        let k = DenseVector::from_ints(&[0, 1]);
        assert_eq!(d.reflect(0, &k).unwrap(), k);
        assert!(matches!(d.reflect(5, &k), Err(Error::UnknownIndex(5))));
    }

    #[test]
    fn example_a_reflections() {
        let d = dihedral(2);
        let s_star = DenseVector::from_ints(&[1, 0]);
        let v = d.reflect(1, &d.reflect(0, &s_star).unwrap()).unwrap();
        // r_t r_s(α_s^*) = α_s^* + α̌_s = 3α_s^* - 2α_t^*.
        assert_eq!(v, DenseVector::from_ints(&[3, -2]));
        assert_eq!(v, s_star.add_scaled(&Rational::one(), d.alpha_check(0)));

        let f = d.reflect_dual(1, &d.reflect_dual(0, d.alpha(0)).unwrap()).unwrap();
        assert_eq!(f, Covector::from_ints(&[-1, -2]));
    }

    #[test]
    fn reflect_dual_examples() {
        let d = a2();
        assert_eq!(d.reflect_dual(0, d.alpha(0)).unwrap(), -d.alpha(0));
        // f(α̌_s) = 0 for f = (1, 2) since α̌_s = (2, -1).
        let f = Covector::from_ints(&[1, 2]);
        assert_eq!(d.reflect_dual(0, &f).unwrap(), f);
    }

    #[test]
    fn check_lcs_examples() {
        let r = a2().check_lcs();
        assert!(r.valid);
        assert_eq!(r.coxeter_matrix[0][1], "3");

        let r = dihedral(2).check_lcs();
        assert!(r.valid && r.lcs1_ok);
        assert_eq!(r.pair_kind("s", "t"), Some(PairKind::Affine));
        assert!(!r.coroot_cone_pointed);

        let r = dihedral(3).check_lcs();
        assert!(r.valid);
        assert_eq!(r.pair_kind("s", "t"), Some(PairKind::Hyperbolic));
        assert_eq!(r.coxeter_matrix[0][1], "inf");

        let bad = ReflectionData::from_families(
            2,
            vec![Covector::from_ints(&[1, 0]), Covector::from_ints(&[0, 1])],
            vec![DenseVector::from_ints(&[2, 0]), DenseVector::from_ints(&[-1, 2])],
        )
        .unwrap();
        let r = bad.check_lcs();
        assert!(!r.c1_ok && !r.valid);
        assert_eq!(r.violations.len(), 1);
    }

    #[test]
    fn c2_rejects_non_crystallographic_product() {
        // a_st = -1/2, a_ts = -1: product 1/2 is not 4cos²(π/k) for any k.
        let d = ReflectionData::from_families(
            2,
            vec![Covector::from_ints(&[1, 0]), Covector::from_ints(&[0, 1])],
            vec![
                DenseVector::from_ints(&[2, -1]),
                DenseVector::new(vec![Rational::frac(-1, 2), Rational::int(2)]),
            ],
        )
        .unwrap();
        let r = d.check_lcs();
        assert!(r.c1_ok && !r.c2_ok && !r.valid);
    }

    #[test]
    fn subsystem_examples() {
        let d = dihedral(1);
        assert_eq!(d.subsystem(&[0, 1]).unwrap(), d);
        let empty = d.subsystem(&[]).unwrap();
        assert_eq!(empty.rank(), 0);
        assert!(empty.check_lcs().valid);
        assert!(d.subsystem(&[0, 0]).is_err());
        assert!(d.subsystem(&[2]).is_err());
    }

    #[test]
    fn fundamental_chamber_examples() {
        let d = dihedral(2);
        let k = d.fundamental_chamber().unwrap();
        let expected = PolyhedralCone::new(2, vec![DenseVector::from_ints(&[1, 0]), DenseVector::from_ints(&[0, 1])]).unwrap();
        assert!(k.same_set(&expected).unwrap());

        let a2 = a2();
        let k = a2.fundamental_chamber().unwrap();
        for g in k.generators() {
            assert!(a2.in_chamber(g).unwrap());
        }

        let line = ReflectionData::from_families(1, vec![Covector::from_ints(&[1])], vec![DenseVector::from_ints(&[2])]).unwrap();
        let k = line.fundamental_chamber().unwrap();
        assert_eq!(k.generators(), &[DenseVector::from_ints(&[1])]);
    }

    #[test]
    fn dual_system_pointed_case_is_transpose() {
        let d = dihedral(1);
        let dual = d.build_dual_system().unwrap();
        assert_eq!(dual.s_tilde, vec![0, 1]);
        assert!(dual.lineality.is_empty());
        assert_eq!(dual.data.dim(), 2);
        assert!(dual.data.check_lcs().valid);
        for s in 0..2 {
            for t in 0..2 {
                assert_eq!(dual.data.cartan(s, t), d.cartan(t, s));
            }
        }
    }

    #[test]
    fn dual_system_example_a() {
        let dual = dihedral(2).build_dual_system().unwrap();
        assert_eq!(dual.lineality, vec![DenseVector::from_ints(&[1, -1])]);
        assert_eq!(dual.u_basis.len(), 1);
        assert!(dual.s_tilde.is_empty());
        assert!(dual.data.check_lcs().valid);
    }

    #[test]
    fn json_round_trip() {
        let d = dihedral(3);
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(
            s,
            r#"{"dim":2,"S":["s","t"],"alpha":{"s":["1","0"],"t":["0","1"]},"alpha_check":{"s":["2","-3"],"t":["-3","2"]}}"#
        );
        let back: ReflectionData = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<ReflectionData>(r#"{"dim":1,"S":["s"],"alpha":{"s":["1"]},"alpha_check":{"s":["1"]}}"#).is_err());
    }

    #[test]
    fn null_root_validation() {
        let d = dihedral(2);
        let ok = d.clone().with_null_root(Covector::from_ints(&[1, 1]));
        assert!(ok.is_ok());
        assert!(d.clone().with_null_root(Covector::from_ints(&[1, 0])).is_err());
        assert!(d.with_null_root(Covector::from_ints(&[-1, -1])).is_err());
    }

    fn small_vec() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-9i64..=9, 2)
    }

    proptest! {
        #[test]
        fn reflections_are_involutive_and_adjoint(a in 1i64..=3, s in 0usize..2, v in small_vec(), f in small_vec()) {
            let d = dihedral(a);
            let v = DenseVector::from_ints(&v);
            let f = Covector::from_ints(&f);
            prop_assert_eq!(d.reflect(s, &d.reflect(s, &v).unwrap()).unwrap(), v.clone());
            prop_assert_eq!(d.reflect_dual(s, &d.reflect_dual(s, &f).unwrap()).unwrap(), f.clone());
            let lhs = pair(&d.reflect_dual(s, &f).unwrap(), &v).unwrap();
            let rhs = pair(&f, &d.reflect(s, &v).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(d.reflection_matrix(s).apply(&v), d.reflect(s, &v).unwrap());
        }
    }
}
