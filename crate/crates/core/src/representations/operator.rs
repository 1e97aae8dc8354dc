use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Result, WindowError};
use crate::kernel::{BasisVector, Element, Scalar};

/// A linear operator on a carrier, stored by its columns. Basis vectors with no
/// column map to zero; vectors marked undefined have images outside the carrier
/// (the closed-window contract), and applying the operator to them is an error.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Operator {
    columns: BTreeMap<BasisVector, Element>,
    undefined: BTreeSet<BasisVector>,
}

impl Operator {
    pub fn zero() -> Self {
        Operator::default()
    }

    pub fn from_columns<I: IntoIterator<Item = (BasisVector, Element)>>(columns: I) -> Self {
        let mut op = Operator::zero();
        for (v, e) in columns {
            op.set(v, e);
        }
        op
    }

    pub fn set(&mut self, v: BasisVector, image: Element) {
        self.undefined.remove(&v);
        if image.is_zero() {
            self.columns.remove(&v);
        } else {
            self.columns.insert(v, image);
        }
    }

    pub fn mark_undefined(&mut self, v: BasisVector) {
        self.columns.remove(&v);
        self.undefined.insert(v);
    }

    pub fn columns(&self) -> impl Iterator<Item = (&BasisVector, &Element)> + '_ {
        self.columns.iter()
    }

    pub fn undefined(&self) -> &BTreeSet<BasisVector> {
        &self.undefined
    }

    pub fn is_defined(&self, v: &BasisVector) -> bool {
        !self.undefined.contains(v)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.is_empty() && self.undefined.is_empty()
    }

    pub fn apply_basis(&self, v: &BasisVector) -> Result<Element> {
        if self.undefined.contains(v) {
            return Err(WindowError { generator: v.to_string(), weight: v.weight() }.into());
        }
        Ok(self.columns.get(v).cloned().unwrap_or_else(Element::zero))
    }

    pub fn apply(&self, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (v, c) in e.iter() {
            out.add_scaled(*c, &self.apply_basis(v)?);
        }
        Ok(out)
    }

    /// `self o other`, undefined wherever either step leaves the carrier.
    pub fn compose(&self, other: &Operator) -> Operator {
        let mut out = Operator::zero();
        for (v, e) in &other.columns {
            match self.apply(e) {
                Ok(img) => out.set(v.clone(), img),
                Err(_) => out.mark_undefined(v.clone()),
            }
        }
        for v in &other.undefined {
            out.mark_undefined(v.clone());
        }
        out
    }

    pub fn scaled(&self, c: Scalar) -> Operator {
        let mut out = Operator { columns: BTreeMap::new(), undefined: self.undefined.clone() };
        if !c.is_zero() {
            for (v, e) in &self.columns {
                out.columns.insert(v.clone(), e.scaled(c));
            }
        }
        out
    }

    pub fn add_scaled(&mut self, c: Scalar, other: &Operator) {
        for (v, e) in &other.columns {
            if self.undefined.contains(v) {
                continue;
            }
            let mut img = self.columns.remove(v).unwrap_or_else(Element::zero);
            img.add_scaled(c, e);
            if !img.is_zero() {
                self.columns.insert(v.clone(), img);
            }
        }
        for v in &other.undefined {
            self.mark_undefined(v.clone());
        }
    }

    /// `x A B + y B A`.
    pub fn combine2(x: Scalar, a: &Operator, b: &Operator, y: Scalar) -> Operator {
        let mut out = a.compose(b).scaled(x);
        out.add_scaled(y, &b.compose(a));
        out
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in &self.columns {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{v} -> {e}")?;
        }
        for v in &self.undefined {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{v} -> ?")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
