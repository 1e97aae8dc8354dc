use super::system::{BracketConvention, RewriteSystem};
use super::word::{letter_name, Alphabet, Letter, WordElement};
use crate::algebra::AlgebraSpec;
use crate::error::{DomainError, Error, Result};
use crate::kernel::{BasisVector, Element, Scalar};

/// Generators in reduction order: evens first, then by name and index.
pub(crate) fn alphabet_of(spec: &AlgebraSpec) -> Alphabet {
    let mut gens = spec.generators().to_vec();
    gens.sort_by(|x, y| (x.parity().bit(), x).cmp(&(y.parity().bit(), y)));
    Alphabet::new(gens.into_iter().map(|g| Letter { name: letter_name(&g), generator: g, degree: 1 }).collect())
}

pub(crate) fn to_words(alphabet: &Alphabet, e: &Element) -> Result<WordElement> {
    e.try_map_linear(|g| {
        let id = alphabet.of_generator(g).ok_or_else(|| DomainError::UnknownGenerator(g.to_string()))?;
        Ok::<_, Error>(WordElement::basis(alphabet.word(vec![id])))
    })
}

fn pair(alphabet: &Alphabet, u: &BasisVector, v: &BasisVector) -> WordElement {
    let id = |g| alphabet.of_generator(g).expect("generator in alphabet");
    WordElement::basis(alphabet.word(vec![id(u), id(v)]))
}

/// Adds `rel` built from the product of `u` and `v`, or counts it as dropped
/// when that product leaves the window.
fn add_with_product<F>(rs: &mut RewriteSystem, spec: &AlgebraSpec, u: &BasisVector, v: &BasisVector, rel: F) -> Result<()>
where
    F: FnOnce(WordElement) -> WordElement,
{
    let prod = match spec.product_gen(u, v) {
        Ok(p) => p,
        Err(Error::Window(_)) => {
            rs.note_dropped();
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let prod = to_words(rs.alphabet(), &prod)?;
    rs.add_relation(&rel(prod))?;
    Ok(())
}

/// The enveloping algebra of a Lie antialgebra: odd letters satisfy
/// `a b - b a = 2 ab`, mixed ones `a x + x a = 2 ax`, and even ones `x y = xy`.
pub fn build_env_antialgebra(spec: &AlgebraSpec) -> Result<RewriteSystem> {
    if spec.is_bracket() {
        return Err(DomainError::Unsupported(format!("`{}` is bracket-style", spec.name())).into());
    }
    let alphabet = alphabet_of(spec);
    let gens: Vec<BasisVector> = alphabet.letters().iter().map(|l| l.generator.clone()).collect();
    let mut rs = RewriteSystem::new(&format!("U({})", spec.name()), alphabet);
    let two = Scalar::int(2);
    for (i, u) in gens.iter().enumerate() {
        for v in &gens[i..] {
            let al = rs.alphabet().clone();
            let (uv, vu) = (pair(&al, u, v), pair(&al, v, u));
            match (u.is_odd(), v.is_odd()) {
                (false, false) => {
                    add_with_product(&mut rs, spec, u, v, |p| uv.clone() - p)?;
                    if u != v {
                        add_with_product(&mut rs, spec, v, u, |p| vu - p)?;
                    }
                }
                (false, true) | (true, false) => add_with_product(&mut rs, spec, u, v, |p| uv + vu - p.scaled(two))?,
                (true, true) => add_with_product(&mut rs, spec, u, v, |p| uv - vu - p.scaled(two))?,
            }
        }
    }
    Ok(rs)
}

/// The enveloping algebra of a Lie superalgebra, with supercommutators tied to
/// brackets according to `convention`.
pub fn build_env_superalgebra(spec: &AlgebraSpec, convention: BracketConvention) -> Result<RewriteSystem> {
    if !spec.is_bracket() {
        return Err(DomainError::Unsupported(format!("`{}` is product-style", spec.name())).into());
    }
    let alphabet = alphabet_of(spec);
    let gens: Vec<BasisVector> = alphabet.letters().iter().map(|l| l.generator.clone()).collect();
    let mut rs = RewriteSystem::new(&format!("U({})", spec.name()), alphabet);
    rs.set_convention(convention);
    let f = convention.factor();
    for (i, u) in gens.iter().enumerate() {
        for v in &gens[i..] {
            let al = rs.alphabet().clone();
            let (uv, vu) = (pair(&al, u, v), pair(&al, v, u));
            let sign = u.parity().swap_sign(v.parity());
            add_with_product(&mut rs, spec, u, v, |p| uv - vu.scaled(sign) - p.scaled(f))?;
        }
    }
    Ok(rs)
}
