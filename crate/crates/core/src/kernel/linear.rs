use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{BasisVector, Parity, Scalar, Weight};

/// A finite linear combination with exact coefficients. Zero coefficients are
/// never stored, so the empty map is the zero vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<T: Ord> {
    terms: BTreeMap<T, Scalar>,
}

/// A linear combination of generators.
pub type Element = LinComb<BasisVector>;

impl<T: Ord> Default for LinComb<T> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> LinComb<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(t: T) -> Self {
        Self::term(Scalar::ONE, t)
    }

    pub fn term(c: Scalar, t: T) -> Self {
        let mut out = Self::zero();
        out.add_term(c, t);
        out
    }

    /// Merges like terms and drops cancellations.
    pub fn combine<I: IntoIterator<Item = (Scalar, T)>>(pairs: I) -> Self {
        let mut out = Self::zero();
        for (c, t) in pairs {
            out.add_term(c, t);
        }
        out
    }

    pub fn add_term(&mut self, c: Scalar, t: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&t) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&t);
                }
            }
            None => {
                self.terms.insert(t, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: Scalar, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (t, v) in &other.terms {
            self.add_term(c * *v, t.clone());
        }
    }

    pub fn scaled(&self, c: Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(t, v)| (t.clone(), *v * c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &T) -> Scalar {
        self.terms.get(t).copied().unwrap_or(Scalar::ZERO)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&T, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &T> + '_ {
        self.terms.keys()
    }

    /// The largest term in the ambient order.
    pub fn leading(&self) -> Option<(&T, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn into_terms(self) -> BTreeMap<T, Scalar> {
        self.terms
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<U: Ord + Clone, F: FnMut(&T) -> LinComb<U>>(&self, mut f: F) -> LinComb<U> {
        let mut out = LinComb::zero();
        for (t, c) in &self.terms {
            out.add_scaled(*c, &f(t));
        }
        out
    }

    /// Fallible variant of [`LinComb::map_linear`].
    pub fn try_map_linear<U, E, F>(&self, mut f: F) -> Result<LinComb<U>, E>
    where
        U: Ord + Clone,
        F: FnMut(&T) -> Result<LinComb<U>, E>,
    {
        let mut out = LinComb::zero();
        for (t, c) in &self.terms {
            out.add_scaled(*c, &f(t)?);
        }
        Ok(out)
    }
}

impl<T: Ord + Clone> FromIterator<(Scalar, T)> for LinComb<T> {
    fn from_iter<I: IntoIterator<Item = (Scalar, T)>>(iter: I) -> Self {
        Self::combine(iter)
    }
}

impl<T: Ord + Clone> Add for LinComb<T> {
    type Output = LinComb<T>;
    fn add(mut self, rhs: Self) -> Self {
        self.add_scaled(Scalar::ONE, &rhs);
        self
    }
}

impl<T: Ord + Clone> Add for &LinComb<T> {
    type Output = LinComb<T>;
    fn add(self, rhs: Self) -> LinComb<T> {
        let mut out = self.clone();
        out.add_scaled(Scalar::ONE, rhs);
        out
    }
}

impl<T: Ord + Clone> Sub for LinComb<T> {
    type Output = LinComb<T>;
    fn sub(mut self, rhs: Self) -> Self {
        self.add_scaled(-Scalar::ONE, &rhs);
        self
    }
}

impl<T: Ord + Clone> Sub for &LinComb<T> {
    type Output = LinComb<T>;
    fn sub(self, rhs: Self) -> LinComb<T> {
        let mut out = self.clone();
        out.add_scaled(-Scalar::ONE, rhs);
        out
    }
}

impl<T: Ord + Clone> Neg for LinComb<T> {
    type Output = LinComb<T>;
    fn neg(self) -> Self {
        self.scaled(-Scalar::ONE)
    }
}

impl<T: Ord + Clone> Mul<LinComb<T>> for Scalar {
    type Output = LinComb<T>;
    fn mul(self, rhs: LinComb<T>) -> LinComb<T> {
        rhs.scaled(self)
    }
}

impl<T: Ord + Clone> Mul<&LinComb<T>> for Scalar {
    type Output = LinComb<T>;
    fn mul(self, rhs: &LinComb<T>) -> LinComb<T> {
        rhs.scaled(self)
    }
}

/// Formats terms as `c1 t1 + c2 t2`, with unit coefficients elided.
pub fn format_terms<'a, T: 'a, I, F>(terms: I, mut show: F) -> String
where
    I: IntoIterator<Item = (&'a T, &'a Scalar)>,
    F: FnMut(&T) -> String,
{
    let mut out = String::new();
    for (t, c) in terms {
        let body = show(t);
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if body.is_empty() || body == "1" {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{mag} {body}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<T: Ord + Clone + fmt::Display> fmt::Display for LinComb<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter(), |t| t.to_string()))
    }
}

impl<T: Ord + Clone + fmt::Display> fmt::Debug for LinComb<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Ord + Clone + fmt::Display> Serialize for LinComb<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (t, c) in &self.terms {
            m.serialize_entry(&t.to_string(), c)?;
        }
        m.end()
    }
}

impl Element {
    /// The common parity of all terms, or `None` for zero or mixed elements.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.keys().map(BasisVector::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// The common weight of all terms, or `None` for zero or mixed elements.
    pub fn weight(&self) -> Option<Weight> {
        let mut it = self.keys().map(BasisVector::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn is_parity_homogeneous(&self) -> bool {
        self.is_zero() || self.parity().is_some()
    }

    pub fn is_weight_homogeneous(&self) -> bool {
        self.is_zero() || self.weight().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> BasisVector {
        BasisVector::odd("a", Weight::half(1))
    }

    fn eps() -> BasisVector {
        BasisVector::even("eps", Weight::ZERO)
    }

    #[test]
    fn like_terms_merge() {
        let e = Element::combine([(Scalar::HALF, a()), (Scalar::HALF, a())]);
        assert_eq!(e, Element::basis(a()));
    }

    #[test]
    fn cancellation_gives_zero() {
        let e = Element::combine([(Scalar::ONE, a()), (-Scalar::ONE, a())]);
        assert!(e.is_zero());
        assert_eq!(e.to_string(), "0");
    }

    #[test]
    fn exact_rational_sum() {
        let e = Element::combine([(Scalar::new(2, 3), eps()), (Scalar::new(1, 6), eps())]);
        assert_eq!(e.coeff(&eps()), Scalar::new(5, 6));
        assert_eq!(e.to_string(), "5/6 eps");
    }

    #[test]
    fn homogeneity_predicates() {
        let mixed = Element::basis(a()) + Element::basis(eps());
        assert!(!mixed.is_parity_homogeneous());
        assert!(Element::zero().is_parity_homogeneous());
        assert_eq!(Element::basis(a()).parity(), Some(Parity::Odd));
        assert_eq!(Element::basis(a()).weight(), Some(Weight::half(1)));
    }

    #[test]
    fn display_signs() {
        let e = Element::combine([(-Scalar::ONE, a()), (Scalar::new(-1, 2), eps())]);
        assert_eq!(e.to_string(), "-a - 1/2 eps");
    }
}
