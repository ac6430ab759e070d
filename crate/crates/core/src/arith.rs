//! Exact rational scalars and the vector types every other module works with.
//!
//! Nothing in this crate touches floating point: cone membership, descent
//! tests and orbit deduplication are all decided on exact values.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Panics on a zero denominator; meant for literals.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Rational::new(numer, denom).expect("nonzero denominator")
    }

    pub fn int(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn signum(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Nearest integer; exact halves round toward negative infinity so the
    /// result is deterministic.
    pub fn round_half_down(&self) -> BigInt {
        let half = Rational::frac(1, 2);
        let shifted = self - &half;
        shifted.ceil()
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Lossy conversion, only for diagnostics.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                Rational::new(p, q)
            }
            None => {
                let p: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rational::from_bigint(p))
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct RationalVisitor;

        impl Visitor<'_> for RationalVisitor {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational as a \"p/q\" string or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational::int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_bigint(v.into()))
            }
        }

        deserializer.deserialize_any(RationalVisitor)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// `Σ a_i b_i` over two equally long slices.
pub(crate) fn inner(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray: denominators cleared, then divided by the gcd of the entries.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|n| Rational::from_bigint(n / &g)).collect()
}

macro_rules! dense_type {
    ($name:ident) => {
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<Rational>);

        impl $name {
            pub fn new(entries: Vec<Rational>) -> Self {
                $name(entries)
            }

            pub fn zeros(dim: usize) -> Self {
                $name(vec![Rational::zero(); dim])
            }

            pub fn unit(dim: usize, i: usize) -> Self {
                let mut v = Self::zeros(dim);
                v.0[i] = Rational::one();
                v
            }

            pub fn from_ints(entries: &[i64]) -> Self {
                $name(entries.iter().map(|&n| Rational::int(n)).collect())
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn entries(&self) -> &[Rational] {
                &self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Rational::is_zero)
            }

            pub fn scale(&self, c: &Rational) -> Self {
                $name(self.0.iter().map(|x| x * c).collect())
            }

            /// `self + c * other`.
            pub fn add_scaled(&self, c: &Rational, other: &Self) -> Self {
                debug_assert_eq!(self.dim(), other.dim());
                $name(self.0.iter().zip(&other.0).map(|(x, y)| x + c * y).collect())
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.dim(), rhs.dim());
                $name(self.0.iter().zip(&rhs.0).map(|(x, y)| x + y).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.dim(), rhs.dim());
                $name(self.0.iter().zip(&rhs.0).map(|(x, y)| x - y).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|x| -x).collect())
            }
        }
    };
}

dense_type!(DenseVector);
dense_type!(Covector);

impl Covector {
    /// Evaluates the functional on a vector.
    pub fn pair(&self, v: &DenseVector) -> Result<Rational> {
        pair(self, v)
    }

    /// Same coordinates, read as a vector (used when a space and its dual
    /// swap roles).
    pub fn to_dense(&self) -> DenseVector {
        DenseVector(self.0.clone())
    }
}

impl DenseVector {
    pub fn to_covector(&self) -> Covector {
        Covector(self.0.clone())
    }
}

/// `⟨f, v⟩ = Σ f_i v_i`.
pub fn pair(f: &Covector, v: &DenseVector) -> Result<Rational> {
    if f.dim() != v.dim() {
        return Err(Error::DimensionMismatch { expected: f.dim(), found: v.dim() });
    }
    Ok(inner(&f.0, &v.0))
}

/// Finitely supported map from natural indices to rationals. Zero values are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SparseVector(BTreeMap<usize, Rational>);

impl SparseVector {
    pub fn new() -> Self {
        SparseVector(BTreeMap::new())
    }

    pub fn unit(j: usize) -> Self {
        let mut v = SparseVector::new();
        v.set(j, Rational::one());
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut v = SparseVector::new();
        for (j, x) in pairs {
            let cur = v.get(j);
            v.set(j, cur + x);
        }
        v
    }

    pub fn get(&self, j: usize) -> Rational {
        self.0.get(&j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, j: usize, x: Rational) {
        if x.is_zero() {
            self.0.remove(&j);
        } else {
            self.0.insert(j, x);
        }
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().map(|(&j, x)| (j, x))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SparseVector::new();
        }
        SparseVector(self.0.iter().map(|(&j, x)| (j, x * c)).collect())
    }

    pub fn add_scaled(&self, c: &Rational, other: &SparseVector) -> Self {
        let mut out = self.clone();
        for (j, y) in other.iter() {
            out.set(j, out.get(j) + c * y);
        }
        out
    }

    /// `‖x‖² = dot(x, x)`.
    pub fn norm_sq(&self) -> Rational {
        self.0.values().map(Rational::square).sum()
    }

    /// Dense copy on the coordinates `0..dim`, reading sparse index `j` at
    /// position `j - offset`.
    pub fn to_dense(&self, dim: usize, offset: usize) -> Result<Vec<Rational>> {
        let mut out = vec![Rational::zero(); dim];
        for (j, x) in self.iter() {
            let pos = j
                .checked_sub(offset)
                .filter(|&p| p < dim)
                .ok_or_else(|| Error::Domain(format!("index {j} outside the coordinate range")))?;
            out[pos] = x.clone();
        }
        Ok(out)
    }

    pub fn from_dense(entries: &[Rational], offset: usize) -> Self {
        SparseVector::from_pairs(entries.iter().enumerate().map(|(i, x)| (i + offset, x.clone())))
    }
}

impl FromIterator<(usize, Rational)> for SparseVector {
    fn from_iter<I: IntoIterator<Item = (usize, Rational)>>(iter: I) -> Self {
        SparseVector::from_pairs(iter)
    }
}

impl fmt::Debug for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.0.iter()).finish()
    }
}

impl Add for &SparseVector {
    type Output = SparseVector;
    fn add(self, rhs: &SparseVector) -> SparseVector {
        self.add_scaled(&Rational::one(), rhs)
    }
}

impl Sub for &SparseVector {
    type Output = SparseVector;
    fn sub(self, rhs: &SparseVector) -> SparseVector {
        self.add_scaled(&Rational::int(-1), rhs)
    }
}

impl Neg for &SparseVector {
    type Output = SparseVector;
    fn neg(self) -> SparseVector {
        self.scale(&Rational::int(-1))
    }
}

/// Canonical scalar product `Σ_j x_j y_j` over the common support.
pub fn dot(x: &SparseVector, y: &SparseVector) -> Rational {
    let (small, large) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    small
        .0
        .iter()
        .filter_map(|(j, a)| large.0.get(j).map(|b| a * b))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn pair_examples() {
        let f = Covector::from_ints(&[1, 0]);
        let v = DenseVector::from_ints(&[0, 1]);
        assert_eq!(pair(&f, &v).unwrap(), Rational::zero());

        let f = Covector::new(vec![q("2"), q("-3/2")]);
        let v = DenseVector::from_ints(&[1, 1]);
        assert_eq!(pair(&f, &v).unwrap(), q("1/2"));

        let f = Covector::from_ints(&[1, 1, 1]);
        assert!(pair(&f, &DenseVector::zeros(3)).unwrap().is_zero());
    }

    #[test]
    fn pair_dimension_mismatch() {
        let f = Covector::from_ints(&[1, 0]);
        let v = DenseVector::from_ints(&[0, 1, 2]);
        assert!(matches!(pair(&f, &v), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn dot_examples() {
        let e1 = SparseVector::unit(1);
        let e2 = SparseVector::unit(2);
        assert_eq!(dot(&e1, &e1), Rational::one());
        assert!(dot(&e1, &e2).is_zero());
        assert!(dot(&(&e1 - &e2), &(&e1 + &e2)).is_zero());
    }

    #[test]
    fn sparse_never_stores_zero() {
        let e1 = SparseVector::unit(1);
        let z = &e1 - &e1;
        assert!(z.is_empty());
        let v = SparseVector::from_pairs([(3, Rational::int(2)), (3, Rational::int(-2))]);
        assert!(v.is_empty());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(q("4/6").to_string(), "2/3");
        assert_eq!(q("4/-2").to_string(), "-2");
        assert_eq!(q("-0/5").to_string(), "0");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        let json = serde_json::to_string(&DenseVector::new(vec![q("1/2"), q("3")])).unwrap();
        assert_eq!(json, r#"["1/2","3"]"#);
        let sv: SparseVector = serde_json::from_str(r#"{"1": "2", "4": "-1/3"}"#).unwrap();
        assert_eq!(sv.get(4), q("-1/3"));
        assert_eq!(serde_json::to_string(&sv).unwrap(), r#"{"1":"2","4":"-1/3"}"#);
    }

    #[test]
    fn rounding_and_primitive() {
        assert_eq!(q("5/2").round_half_down(), 2.into());
        assert_eq!(q("-5/2").round_half_down(), (-3).into());
        assert_eq!(q("7/3").round_half_down(), 2.into());
        let p = primitive(&[q("2/3"), q("-4/3"), q("0")]);
        assert_eq!(p, vec![q("1"), q("-2"), q("0")]);
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(p, q)| Rational::frac(p, q))
    }

    fn vec3() -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec(rational(), 3)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in rational(), b in rational(), c in rational()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a - &a, Rational::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip(), Rational::one());
            }
        }

        #[test]
        fn string_round_trip(a in rational()) {
            let back: Rational = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn pair_is_bilinear(f in vec3(), g in vec3(), v in vec3(), a in rational(), b in rational()) {
            let (f, g, v) = (Covector(f), Covector(g), DenseVector(v));
            let comb = f.scale(&a).add_scaled(&b, &g);
            let lhs = pair(&comb, &v).unwrap();
            let rhs = &a * &pair(&f, &v).unwrap() + &b * &pair(&g, &v).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn dot_symmetric_positive(xs in proptest::collection::vec((0usize..6, rational()), 0..5),
                                  ys in proptest::collection::vec((0usize..6, rational()), 0..5),
                                  a in rational()) {
            let x = SparseVector::from_pairs(xs);
            let y = SparseVector::from_pairs(ys);
            prop_assert_eq!(dot(&x, &y), dot(&y, &x));
            prop_assert_eq!(dot(&x.scale(&a), &y), &a * &dot(&x, &y));
            if !x.is_empty() {
                prop_assert!(dot(&x, &x).is_positive());
            }
        }
    }
}
