use super::spec::{AlgebraSpec, Style};
use crate::error::{DomainError, Error, Result};
use crate::kernel::{BasisVector, Element, Scalar, Weight};

/// The first generator `x` with `e*x` different from `x` (even) or `x/2` (odd),
/// as `(x, e*x, expected)`. Generators whose product leaves the window are skipped.
pub fn half_unit_defect(spec: &AlgebraSpec, e: &BasisVector) -> Result<Option<(BasisVector, Element, Element)>> {
    if e.is_odd() {
        return Err(DomainError::Parity(format!("half-unit candidate `{e}` is odd")).into());
    }
    let e = spec.find(&e.to_string())?;
    for x in spec.generators() {
        let got = match spec.product_gen(&e, x) {
            Ok(v) => v,
            Err(Error::Window(_)) => continue,
            Err(err) => return Err(err),
        };
        let c = if x.is_odd() { Scalar::HALF } else { Scalar::ONE };
        let want = Element::term(c, x.clone());
        if got != want {
            return Ok(Some((x.clone(), got, want)));
        }
    }
    Ok(None)
}

/// Adjoins a new even generator acting as a half-unit. Returns the new algebra and
/// warnings about half-units that were already present.
pub fn adjoin_unit(spec: &AlgebraSpec) -> Result<(AlgebraSpec, Vec<String>)> {
    let Some(entries) = spec.table_entries() else {
        return Err(DomainError::Unsupported("unit adjunction needs a finite table".into()).into());
    };
    if spec.is_bracket() {
        return Err(DomainError::Unsupported("unit adjunction needs a product-style algebra".into()).into());
    }
    let mut warnings = Vec::new();
    for g in spec.evens() {
        if half_unit_defect(spec, &g)?.is_none() {
            warnings.push(format!("`{g}` is already a half-unit; a second one was added"));
        }
    }
    let mut name = String::from("unit");
    while spec.find(&name).is_ok() {
        name.push('\'');
    }
    let unit = BasisVector::even(&name, Weight::ZERO);
    let mut entries: Vec<(BasisVector, BasisVector, Element)> =
        entries.map(|(u, v, e)| (u.clone(), v.clone(), e.clone())).collect();
    entries.push((unit.clone(), unit.clone(), Element::basis(unit.clone())));
    for g in spec.generators() {
        let c = if g.is_odd() { Scalar::HALF } else { Scalar::ONE };
        entries.push((unit.clone(), g.clone(), Element::term(c, g.clone())));
    }
    let mut generators = vec![unit];
    generators.extend(spec.generators().iter().cloned());
    let out = AlgebraSpec::from_table(spec.name(), Style::Product, generators, entries)?;
    Ok((out, warnings))
}
