//! Breadth-first machinery for the group `𝒲 = ⟨r_s⟩`: elements with reduced
//! words, orbits, roots and coroots, descent tests, stabilizers, and a
//! semi-decision procedure for the Tits cone.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use serde::{Serialize, Serializer};

use crate::arith::{pair, Covector, DenseVector};
use crate::cone::PolyhedralCone;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::reflection::ReflectionData;

/// An element of `𝒲` with its matrix on `V`, the inverse matrix (used for
/// the contragredient action `g·f = f ∘ g⁻¹`), and a reduced word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    matrix: Matrix,
    inverse: Matrix,
    word: Vec<usize>,
}

impl GroupElement {
    pub fn identity(dim: usize) -> Self {
        GroupElement { matrix: Matrix::identity(dim), inverse: Matrix::identity(dim), word: Vec::new() }
    }

    /// Product of generator reflections along `word` (not checked for
    /// reducedness).
    pub fn from_word(d: &ReflectionData, word: &[usize]) -> Result<Self> {
        let mut g = GroupElement::identity(d.dim());
        for &s in word {
            if s >= d.rank() {
                return Err(Error::UnknownIndex(s));
            }
            g = g.times_generator(&d.reflection_matrix(s), s);
        }
        Ok(g)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        &self.inverse
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn act(&self, v: &DenseVector) -> DenseVector {
        self.matrix.apply(v)
    }

    pub fn act_dual(&self, f: &Covector) -> Covector {
        self.inverse.apply_left(f)
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// `g r_s`, given the matrix `R_s` of `r_s`.
    fn times_generator(&self, r: &Matrix, s: usize) -> GroupElement {
        let mut word = self.word.clone();
        word.push(s);
        GroupElement { matrix: self.matrix.mul(r), inverse: r.mul(&self.inverse), word }
    }

    /// `r_s g`.
    fn generator_times(&self, r: &Matrix, s: usize) -> GroupElement {
        let mut word = Vec::with_capacity(self.word.len() + 1);
        word.push(s);
        word.extend_from_slice(&self.word);
        GroupElement { matrix: r.mul(&self.matrix), inverse: self.inverse.mul(r), word }
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            length: usize,
            word: &'a [usize],
            matrix: Vec<&'a [crate::arith::Rational]>,
        }
        Repr {
            length: self.length(),
            word: &self.word,
            matrix: (0..self.matrix.rows()).map(|i| self.matrix.row(i)).collect(),
        }
        .serialize(ser)
    }
}

fn check_budget(budget: usize) -> Result<()> {
    if budget == 0 {
        Err(Error::Domain("budget must be positive".into()))
    } else {
        Ok(())
    }
}

/// Elements of `𝒲` in breadth-first order; lengths are BFS depths.
#[derive(Clone, Debug, Serialize)]
pub struct GroupTable {
    pub elements: Vec<GroupElement>,
    pub truncated: bool,
    pub budget: usize,
}

impl GroupTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_length(&self) -> usize {
        self.elements.iter().map(GroupElement::length).max().unwrap_or(0)
    }

    pub fn find(&self, m: &Matrix) -> Option<&GroupElement> {
        self.elements.iter().find(|g| g.matrix() == m)
    }
}

/// Breadth-first enumeration of `𝒲` over the right Cayley graph,
/// deduplicated by matrix, stopping after `budget` elements.
pub fn enumerate_group(d: &ReflectionData, budget: usize) -> Result<GroupTable> {
    check_budget(budget)?;
    let refl: Vec<Matrix> = (0..d.rank()).map(|s| d.reflection_matrix(s)).collect();
    let mut elements = vec![GroupElement::identity(d.dim())];
    let mut seen: HashMap<Matrix, usize> = HashMap::new();
    seen.insert(elements[0].matrix.clone(), 0);
    let mut truncated = false;
    let mut head = 0;
    'bfs: while head < elements.len() {
        for (s, r) in refl.iter().enumerate() {
            let next = elements[head].times_generator(r, s);
            if seen.contains_key(&next.matrix) {
                continue;
            }
            if elements.len() == budget {
                truncated = true;
                break 'bfs;
            }
            seen.insert(next.matrix.clone(), elements.len());
            elements.push(next);
        }
        head += 1;
    }
    Ok(GroupTable { elements, truncated, budget })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Descent {
    Ascent,
    Descent,
}

/// Decides whether `ℓ(g r_s) > ℓ(g)` from the position of `gα̌_s` relative
/// to `C_S`.
///
/// The sign is read off from `gα_s ∈ ±Č_S`, which is exclusive because `Č_S`
/// is pointed, and the matching statement `gα̌_s ∈ ±C_S` is then confirmed.
/// (`C_S` itself need not be pointed, so its two memberships alone can both
/// hold.)
pub fn descent_test(d: &ReflectionData, g: &GroupElement, s: usize) -> Result<Descent> {
    if s >= d.rank() {
        return Err(Error::UnknownIndex(s));
    }
    descent_with_cones(d, &d.coroot_cone(), &d.root_cone(), g, s)
}

pub(crate) fn descent_with_cones(
    d: &ReflectionData,
    coroot_cone: &PolyhedralCone,
    root_cone: &PolyhedralCone,
    g: &GroupElement,
    s: usize,
) -> Result<Descent> {
    let ga = g.act_dual(d.alpha(s));
    let gc = g.act(d.alpha_check(s));
    let pos = root_cone.contains_covector(&ga)?;
    let neg = root_cone.contains_covector(&-&ga)?;
    let (verdict, primal) = match (pos, neg) {
        (true, false) => (Descent::Ascent, coroot_cone.contains(&gc)?),
        (false, true) => (Descent::Descent, coroot_cone.contains(&-&gc)?),
        _ => {
            return Err(Error::InvalidSystem(format!(
                "g·alpha_{} lies in neither or both of ±Č_S",
                d.names()[s]
            )))
        }
    };
    if !primal {
        return Err(Error::InvalidSystem(format!(
            "g·alpha_check_{} does not lie in the expected half of ±C_S",
            d.names()[s]
        )));
    }
    Ok(verdict)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootEntry {
    pub root: Covector,
    pub coroot: DenseVector,
    pub positive: bool,
    /// `root = w·α_simple` for the element `w` with this word.
    pub word: Vec<usize>,
    pub simple: usize,
}

/// Roots `Δ = 𝒲{α_s}` with their coroots, in breadth-first order.
#[derive(Clone, Debug, Serialize)]
pub struct RootTables {
    pub entries: Vec<RootEntry>,
    pub truncated: bool,
    pub budget: usize,
}

impl RootTables {
    pub fn roots(&self) -> impl Iterator<Item = &Covector> {
        self.entries.iter().map(|e| &e.root)
    }

    pub fn coroots(&self) -> impl Iterator<Item = &DenseVector> {
        self.entries.iter().map(|e| &e.coroot)
    }

    pub fn positives(&self) -> impl Iterator<Item = &RootEntry> {
        self.entries.iter().filter(|e| e.positive)
    }

    pub fn negatives(&self) -> impl Iterator<Item = &RootEntry> {
        self.entries.iter().filter(|e| !e.positive)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coroot_of(&self, root: &Covector) -> Option<&DenseVector> {
        self.entries.iter().find(|e| &e.root == root).map(|e| &e.coroot)
    }

    /// The reflection `v ↦ v - α(v) α̌` of entry `i`, with the (generally
    /// non-reduced) word `w s w⁻¹`.
    pub fn reflection(&self, i: usize) -> GroupElement {
        let e = &self.entries[i];
        let n = e.coroot.dim();
        let mut m = Matrix::identity(n);
        for r in 0..n {
            for c in 0..n {
                let x = m.get(r, c) - &(&e.coroot.0[r] * &e.root.0[c]);
                m.set(r, c, x);
            }
        }
        let mut word = e.word.clone();
        word.push(e.simple);
        word.extend(e.word.iter().rev());
        GroupElement { matrix: m.clone(), inverse: m, word }
    }
}

/// Closure of `{α_s}` under the dual action, with coroots carried along
/// equivariantly and checked for consistency.
pub fn generate_roots(d: &ReflectionData, budget: usize) -> Result<RootTables> {
    check_budget(budget)?;
    let root_cone = d.root_cone();
    let mut entries: Vec<RootEntry> = Vec::new();
    let mut index: HashMap<Covector, usize> = HashMap::new();
    let mut truncated = false;

    let mut push = |entries: &mut Vec<RootEntry>, root: Covector, coroot: DenseVector, word: Vec<usize>, simple: usize| -> Result<bool> {
        if let Some(&i) = index.get(&root) {
            if entries[i].coroot != coroot {
                return Err(Error::InvalidSystem(format!(
                    "root {:?} reached with coroots {:?} and {:?}",
                    root, entries[i].coroot, coroot
                )));
            }
            return Ok(true);
        }
        if entries.len() == budget {
            return Ok(false);
        }
        let pos = root_cone.contains_covector(&root)?;
        let neg = root_cone.contains_covector(&-&root)?;
        if pos == neg {
            return Err(Error::InvalidSystem(format!("root {root:?} violates the sign dichotomy")));
        }
        index.insert(root.clone(), entries.len());
        entries.push(RootEntry { root, coroot, positive: pos, word, simple });
        Ok(true)
    };

    for s in 0..d.rank() {
        if !push(&mut entries, d.alpha(s).clone(), d.alpha_check(s).clone(), Vec::new(), s)? {
            truncated = true;
            break;
        }
    }
    let mut head = 0;
    'bfs: while !truncated && head < entries.len() {
        for t in 0..d.rank() {
            let e = &entries[head];
            let root = d.reflect_dual(t, &e.root)?;
            let coroot = d.reflect(t, &e.coroot)?;
            let mut word = vec![t];
            word.extend_from_slice(&e.word);
            let simple = e.simple;
            if !push(&mut entries, root, coroot, word, simple)? {
                truncated = true;
                break 'bfs;
            }
        }
        head += 1;
    }
    Ok(RootTables { entries, truncated, budget })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TitsVerdict {
    /// `v = w·k` with `k` in the fundamental chamber.
    Yes { word: Vec<usize>, chamber_point: DenseVector },
    /// `v` is certified to lie outside the Tits cone.
    NoProof { reason: String },
    /// The descent did not reach the chamber within the cap.
    Unknown { steps: usize },
}

/// Descent iteration towards the fundamental chamber, reflecting in the
/// least generator with `α_s(v) < 0`.
///
/// `NoProof` is only returned with a certificate: an invariant null root `δ`
/// (strictly positive combination of the `α_s`) with `δ(v) ≤ 0` while `v` is
/// not in the chamber. On the Tits cone `δ(wk) = δ(k) ≥ 0`, with equality only
/// for `𝒲`-fixed `k`.
pub fn tits_cone_member(d: &ReflectionData, v: &DenseVector, cap: usize) -> Result<TitsVerdict> {
    if cap == 0 {
        return Err(Error::Domain("cap must be positive".into()));
    }
    if v.dim() != d.dim() {
        return Err(Error::DimensionMismatch { expected: d.dim(), found: v.dim() });
    }
    if !d.in_chamber(v)? {
        if let Some(delta) = d.null_root() {
            let x = pair(delta, v)?;
            if !x.is_positive() {
                return Ok(TitsVerdict::NoProof {
                    reason: format!("invariant null root takes value {x} <= 0 off the chamber"),
                });
            }
        }
    }
    let mut cur = v.clone();
    let mut word = Vec::new();
    loop {
        let neg = (0..d.rank()).find(|&s| pair(d.alpha(s), &cur).map(|x| x.is_negative()).unwrap_or(false));
        let Some(s) = neg else {
            return Ok(TitsVerdict::Yes { word, chamber_point: cur });
        };
        if word.len() == cap {
            return Ok(TitsVerdict::Unknown { steps: cap });
        }
        cur = d.reflect(s, &cur)?;
        word.push(s);
    }
}

/// A parabolic subgroup `𝒲_I` fixing a chamber point.
#[derive(Clone, Debug, Serialize)]
pub struct Stabilizer {
    /// Indices `I` into the generator list of the ambient system.
    pub generators: Vec<usize>,
    pub elements: Vec<GroupElement>,
    pub truncated: bool,
}

fn parabolic(d: &ReflectionData, subset: Vec<usize>, budget: usize) -> Result<Stabilizer> {
    let sub = d.subsystem(&subset)?;
    let table = enumerate_group(&sub, budget)?;
    let elements = table
        .elements
        .into_iter()
        .map(|mut g| {
            g.word = g.word.iter().map(|&i| subset[i]).collect();
            g
        })
        .collect();
    Ok(Stabilizer { generators: subset, elements, truncated: table.truncated })
}

/// `𝒲_v = 𝒲_I` with `I = {s : α_s(v) = 0}` for `v` in the chamber.
pub fn stabilizer(d: &ReflectionData, v: &DenseVector, budget: usize) -> Result<Stabilizer> {
    if !d.in_chamber(v)? {
        return Err(Error::Precondition("vector is not in the fundamental chamber".into()));
    }
    let mut subset = Vec::new();
    for s in 0..d.rank() {
        if pair(d.alpha(s), v)?.is_zero() {
            subset.push(s);
        }
    }
    let st = parabolic(d, subset, budget)?;
    for g in &st.elements {
        if &g.act(v) != v {
            return Err(Error::InvalidSystem(format!("parabolic element {:?} moves the vector", g.word)));
        }
    }
    Ok(st)
}

/// `𝒲_λ = ⟨r_s : λ(α̌_s) = 0⟩` for `λ ∈ C_S^⋆`.
pub fn stabilizer_dual(d: &ReflectionData, lambda: &Covector, budget: usize) -> Result<Stabilizer> {
    if !d.in_dual_chamber(lambda)? {
        return Err(Error::Precondition("covector is not in the dual of C_S".into()));
    }
    let mut subset = Vec::new();
    for s in 0..d.rank() {
        if pair(lambda, d.alpha_check(s))?.is_zero() {
            subset.push(s);
        }
    }
    let st = parabolic(d, subset, budget)?;
    for g in &st.elements {
        if &g.act_dual(lambda) != lambda {
            return Err(Error::InvalidSystem(format!("parabolic element {:?} moves the covector", g.word)));
        }
    }
    Ok(st)
}

/// Points on which `𝒲` acts: vectors in `V` or covectors in `V*`.
pub trait OrbitPoint: Clone + Eq + Hash + Serialize {
    fn reflect_by(&self, d: &ReflectionData, s: usize) -> Result<Self>;
    fn act_by(&self, g: &GroupElement) -> Self;
    fn dim(&self) -> usize;
}

impl OrbitPoint for DenseVector {
    fn reflect_by(&self, d: &ReflectionData, s: usize) -> Result<Self> {
        d.reflect(s, self)
    }

    fn act_by(&self, g: &GroupElement) -> Self {
        g.act(self)
    }

    fn dim(&self) -> usize {
        DenseVector::dim(self)
    }
}

impl OrbitPoint for Covector {
    fn reflect_by(&self, d: &ReflectionData, s: usize) -> Result<Self> {
        d.reflect_dual(s, self)
    }

    fn act_by(&self, g: &GroupElement) -> Self {
        g.act_dual(self)
    }

    fn dim(&self) -> usize {
        Covector::dim(self)
    }
}

/// Breadth-first orbit `𝒲·p` with a first-found element per point.
#[derive(Clone, Debug)]
pub struct OrbitTable<P: OrbitPoint> {
    base: P,
    points: Vec<P>,
    elements: Vec<GroupElement>,
    index: HashMap<P, usize>,
    truncated: bool,
    budget: usize,
}

impl<P: OrbitPoint> OrbitTable<P> {
    pub fn enumerate(d: &ReflectionData, base: &P, budget: usize) -> Result<Self> {
        check_budget(budget)?;
        if base.dim() != d.dim() {
            return Err(Error::DimensionMismatch { expected: d.dim(), found: base.dim() });
        }
        let refl: Vec<Matrix> = (0..d.rank()).map(|s| d.reflection_matrix(s)).collect();
        let mut table = OrbitTable {
            base: base.clone(),
            points: vec![base.clone()],
            elements: vec![GroupElement::identity(d.dim())],
            index: HashMap::from([(base.clone(), 0)]),
            truncated: false,
            budget,
        };
        let mut queue = VecDeque::from([0usize]);
        'bfs: while let Some(i) = queue.pop_front() {
            for (s, r) in refl.iter().enumerate() {
                let p = table.points[i].reflect_by(d, s)?;
                if table.index.contains_key(&p) {
                    continue;
                }
                if table.points.len() == budget {
                    table.truncated = true;
                    break 'bfs;
                }
                let g = table.elements[i].generator_times(r, s);
                table.index.insert(p.clone(), table.points.len());
                queue.push_back(table.points.len());
                table.points.push(p);
                table.elements.push(g);
            }
        }
        Ok(table)
    }

    pub fn base_point(&self) -> &P {
        &self.base
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = (&P, &GroupElement)> {
        self.points.iter().zip(&self.elements)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &P) -> bool {
        self.index.contains_key(p)
    }

    pub fn element_for_point(&self, p: &P) -> Option<&GroupElement> {
        self.index.get(p).map(|&i| &self.elements[i])
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn budget(&self) -> usize {
        self.budget
    }
}

impl<P: OrbitPoint> Serialize for OrbitTable<P> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a, P> {
            point: &'a P,
            word: &'a [usize],
        }
        #[derive(Serialize)]
        struct Repr<'a, P> {
            base_point: &'a P,
            size: usize,
            truncated: bool,
            budget: usize,
            points: Vec<Entry<'a, P>>,
        }
        Repr {
            base_point: &self.base,
            size: self.points.len(),
            truncated: self.truncated,
            budget: self.budget,
            points: self.iter().map(|(p, g)| Entry { point: p, word: g.word() }).collect(),
        }
        .serialize(ser)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::reflection::dihedral;

    fn a3() -> ReflectionData {
        // Simple roots of A3 in the basis of fundamental coweights.
        let cartan = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]];
        let alphas = (0..3).map(|i| Covector::unit(3, i)).collect();
        let checks = (0..3)
            .map(|j| DenseVector::from_ints(&[cartan[0][j], cartan[1][j], cartan[2][j]]))
            .collect();
        ReflectionData::from_families(3, alphas, checks).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let t = enumerate_group(&dihedral(1), 100).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(t.max_length(), 3);
        assert!(!t.truncated);

        let t = enumerate_group(&a3(), 100).unwrap();
        assert_eq!(t.len(), 24);
        assert_eq!(t.max_length(), 6);

        let t = enumerate_group(&dihedral(2), 20).unwrap();
        assert_eq!(t.len(), 20);
        assert!(t.truncated);

        // Budget equal to the order is not a truncation.
        let t = enumerate_group(&dihedral(1), 6).unwrap();
        assert!(!t.truncated);
        assert!(enumerate_group(&dihedral(1), 0).is_err());
    }

    #[test]
    fn words_reproduce_matrices() {
        let d = a3();
        for g in &enumerate_group(&d, 100).unwrap().elements {
            let h = GroupElement::from_word(&d, g.word()).unwrap();
            assert_eq!(h.matrix(), g.matrix());
            assert!(g.matrix().mul(g.inverse_matrix()).is_identity());
        }
    }

    #[test]
    fn descent_examples() {
        let d = dihedral(2);
        let e = GroupElement::identity(2);
        assert_eq!(descent_test(&d, &e, 0).unwrap(), Descent::Ascent);
        assert_eq!(descent_test(&d, &e, 1).unwrap(), Descent::Ascent);
        let rs = GroupElement::from_word(&d, &[0]).unwrap();
        assert_eq!(descent_test(&d, &rs, 0).unwrap(), Descent::Descent);
        assert_eq!(descent_test(&d, &rs, 1).unwrap(), Descent::Ascent);
    }

    #[test]
    fn roots_of_a2_and_example_a() {
        let r = generate_roots(&dihedral(1), 100).unwrap();
        assert_eq!(r.len(), 6);
        assert_eq!(r.positives().count(), 3);
        assert!(!r.truncated);

        let d = dihedral(2);
        let r = generate_roots(&d, 40).unwrap();
        assert!(r.truncated);
        let (ca, ct) = (d.alpha_check(0), d.alpha_check(1));
        for e in &r.entries {
            assert!(&e.coroot == ca || e.coroot == -ca);
            assert_eq!(&-ct, ca);
            // Every root is ±α_s or ±α_t shifted by an even multiple of α_s + α_t.
            let (x, y) = (&e.root.0[0], &e.root.0[1]);
            let diff = x - y;
            assert!(diff.abs() == Rational::one());
            assert!(x.is_integer() && y.is_integer());
        }
    }

    #[test]
    fn root_reflections_match_words() {
        let d = a3();
        let r = generate_roots(&d, 100).unwrap();
        for i in 0..r.len() {
            let g = r.reflection(i);
            let h = GroupElement::from_word(&d, g.word()).unwrap();
            assert_eq!(g.matrix(), h.matrix());
        }
    }

    #[test]
    fn tits_cone_examples() {
        let d = dihedral(2);
        let v = DenseVector::from_ints(&[1, 0]);
        assert_eq!(
            tits_cone_member(&d, &v, 10).unwrap(),
            TitsVerdict::Yes { word: vec![], chamber_point: v.clone() }
        );
        let w = DenseVector::from_ints(&[-1, -1]);
        assert!(matches!(tits_cone_member(&d, &w, 50).unwrap(), TitsVerdict::Unknown { .. }));
        assert!(tits_cone_member(&d, &v, 0).is_err());

        let with_delta = d.with_null_root(Covector::from_ints(&[1, 1])).unwrap();
        assert!(matches!(tits_cone_member(&with_delta, &w, 50).unwrap(), TitsVerdict::NoProof { .. }));

        let a = a3();
        let v = DenseVector::from_ints(&[-3, 1, -2]);
        match tits_cone_member(&a, &v, 100).unwrap() {
            TitsVerdict::Yes { word, chamber_point } => {
                let g = GroupElement::from_word(&a, &word).unwrap();
                assert_eq!(g.act(&chamber_point), v);
                assert!(a.in_chamber(&chamber_point).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn stabilizer_examples() {
        let d = a3();
        let st = stabilizer(&d, &DenseVector::from_ints(&[1, 1, 1]), 100).unwrap();
        assert!(st.generators.is_empty());
        assert_eq!(st.elements.len(), 1);
        let st = stabilizer(&d, &DenseVector::zeros(3), 100).unwrap();
        assert_eq!(st.elements.len(), 24);
        let st = stabilizer(&d, &DenseVector::from_ints(&[0, 1, 0]), 100).unwrap();
        assert_eq!(st.generators, vec![0, 2]);
        assert_eq!(st.elements.len(), 4);
        assert!(matches!(
            stabilizer(&d, &DenseVector::from_ints(&[-1, 0, 0]), 100),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn stabilizer_dual_examples() {
        let d = dihedral(2);
        // λ(α̌_s) = 0 forces λ(α̌_t) = 0 too.
        let st = stabilizer_dual(&d, &Covector::from_ints(&[1, 1]), 20).unwrap();
        assert_eq!(st.generators, vec![0, 1]);
        assert!(st.truncated);

        let a2 = dihedral(1);
        // First fundamental weight in these coordinates: λ(α̌_s) = 1, λ(α̌_t) = 0.
        let lam = Covector::new(vec![Rational::frac(2, 3), Rational::frac(1, 3)]);
        let st = stabilizer_dual(&a2, &lam, 20).unwrap();
        assert_eq!(st.generators, vec![1]);
        assert_eq!(st.elements.len(), 2);
    }

    #[test]
    fn orbit_tables() {
        let d = a3();
        let v = DenseVector::from_ints(&[1, 2, 3]);
        let orbit = OrbitTable::enumerate(&d, &v, 1000).unwrap();
        assert_eq!(orbit.len(), 24);
        for (p, g) in orbit.iter() {
            assert_eq!(&g.act(&v), p);
            assert_eq!(g.inverse().act(p), v);
        }
        // α_1 is a root: its orbit is all of Δ(A3).
        let f = Covector::from_ints(&[1, 0, 0]);
        let orbit = OrbitTable::enumerate(&d, &f, 1000).unwrap();
        assert_eq!(orbit.len(), 12);
        for (p, g) in orbit.iter() {
            assert_eq!(&g.act_dual(&f), p);
        }
        let o = OrbitTable::enumerate(&dihedral(3), &DenseVector::from_ints(&[1, 1]), 30).unwrap();
        assert!(o.truncated());
        assert_eq!(o.len(), 30);
    }
}
