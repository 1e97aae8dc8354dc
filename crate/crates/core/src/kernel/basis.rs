use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::Scalar;
use crate::error::ParseError;

/// A `Z/2` grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u32) -> Self {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^(self * other)`, the Koszul sign for swapping two homogeneous things.
    pub fn swap_sign(self, other: Parity) -> Scalar {
        Scalar::sign(self.bit() * other.bit())
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// An integer or half-integer weight, stored doubled.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(i32);

impl Weight {
    pub const ZERO: Weight = Weight(0);

    pub fn from_twice(twice: i32) -> Self {
        Weight(twice)
    }

    pub fn int(n: i32) -> Self {
        Weight(2 * n)
    }

    /// Half-integer `n/2`.
    pub fn half(n: i32) -> Self {
        Weight(n)
    }

    pub fn twice(self) -> i32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_scalar(self) -> Scalar {
        Scalar::new(self.0 as i64, 2)
    }

    pub fn from_scalar(s: Scalar) -> Option<Self> {
        let twice = s * Scalar::int(2);
        (twice.denom() == 1).then(|| Weight(twice.numer() as i32))
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight(self.0 - rhs.0)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-self.0)
    }
}

impl std::iter::Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_scalar(), f)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Weight {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let q: Scalar = s.parse()?;
        Weight::from_scalar(q)
            .ok_or_else(|| ParseError::new(0, 0, format!("weight `{s}` is not a multiple of 1/2")))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A named generator. Identity is the pair `(name, index)`; parity and weight
/// ride along and are functions of the identity.
#[derive(Clone)]
pub struct BasisVector {
    name: Arc<str>,
    index: Option<Weight>,
    parity: Parity,
    weight: Weight,
}

impl BasisVector {
    pub fn new(name: &str, parity: Parity, weight: Weight) -> Self {
        BasisVector { name: Arc::from(name), index: None, parity, weight }
    }

    pub fn indexed(name: &str, index: Weight, parity: Parity, weight: Weight) -> Self {
        BasisVector { name: Arc::from(name), index: Some(index), parity, weight }
    }

    pub fn even(name: &str, weight: Weight) -> Self {
        Self::new(name, Parity::Even, weight)
    }

    pub fn odd(name: &str, weight: Weight) -> Self {
        Self::new(name, Parity::Odd, weight)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn index(&self) -> Option<Weight> {
        self.index
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub fn is_odd(&self) -> bool {
        self.parity.is_odd()
    }

    /// Same identity under a different name, keeping index, parity and weight.
    pub fn renamed(&self, name: &str) -> Self {
        BasisVector { name: Arc::from(name), ..self.clone() }
    }

    fn key(&self) -> (&str, Option<Weight>) {
        (&self.name, self.index)
    }
}

impl PartialEq for BasisVector {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for BasisVector {}

impl Hash for BasisVector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl PartialOrd for BasisVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BasisVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}_{}", self.name, i),
            None => f.write_str(&self.name),
        }
    }
}

impl fmt::Debug for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for BasisVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Splits a generator token such as `a_1/2` into its name and optional index.
/// Compound names joined by `.` are never split.
pub fn split_token(token: &str) -> Result<(&str, Option<Weight>), ParseError> {
    if token.contains('.') {
        return Ok((token, None));
    }
    match token.rsplit_once('_') {
        Some((name, idx)) if !name.is_empty() && idx.parse::<Scalar>().is_ok() => {
            Ok((name, Some(idx.parse()?)))
        }
        _ => Ok((token, None)),
    }
}
