use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::quadratic::GMonomial;
use super::WeightWindow;
use crate::error::{DomainError, Result, WindowError};
use crate::kernel::{split_token, BasisVector, Element, Parity, Scalar, Weight};

/// Whether the structure map is a commutative-type product or a Lie superbracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Style {
    Product,
    Bracket,
}

/// Weight-indexed infinite families with closed-form structure constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `eps_n eps_m = eps_{n+m}`, `eps_n a_i = 1/2 a_{n+i}`, `a_i a_j = 1/2 (j-i) eps_{i+j}`.
    AntiKaplansky,
    /// `[x_n, x_m] = 1/2 (m-n) x_{n+m}`, `[x_n, a_i] = 1/2 (i - n/2) a_{n+i}`, `[a_i, a_j] = x_{i+j}`.
    Conformal,
}

impl Family {
    fn even_name(self) -> &'static str {
        match self {
            Family::AntiKaplansky => "eps",
            Family::Conformal => "x",
        }
    }

    fn style(self) -> Style {
        match self {
            Family::AntiKaplansky => Style::Product,
            Family::Conformal => Style::Bracket,
        }
    }

    fn even(self, n: Weight) -> BasisVector {
        BasisVector::indexed(self.even_name(), n, Parity::Even, n)
    }

    fn odd(i: Weight) -> BasisVector {
        BasisVector::indexed("a", i, Parity::Odd, i)
    }

    fn resolve(self, name: &str, index: Option<Weight>) -> Option<BasisVector> {
        let i = index?;
        if name == self.even_name() && i.is_integer() {
            Some(self.even(i))
        } else if name == "a" && !i.is_integer() {
            Some(Self::odd(i))
        } else {
            None
        }
    }

    fn apply(self, u: &BasisVector, v: &BasisVector) -> Element {
        let (n, m) = (u.weight(), v.weight());
        let s = |w: Weight| w.to_scalar();
        let half = Scalar::HALF;
        match (self, u.is_odd(), v.is_odd()) {
            (Family::AntiKaplansky, false, false) => Element::basis(self.even(n + m)),
            (Family::AntiKaplansky, false, true) | (Family::AntiKaplansky, true, false) => {
                Element::term(half, Self::odd(n + m))
            }
            (Family::AntiKaplansky, true, true) => Element::term(half * (s(m) - s(n)), self.even(n + m)),
            (Family::Conformal, false, false) => Element::term(half * (s(m) - s(n)), self.even(n + m)),
            (Family::Conformal, false, true) => Element::term(half * (s(m) - half * s(n)), Self::odd(n + m)),
            (Family::Conformal, true, false) => Element::term(-(half * (s(n) - half * s(m))), Self::odd(n + m)),
            (Family::Conformal, true, true) => Element::basis(self.even(n + m)),
        }
    }
}

type Pair = (BasisVector, BasisVector);

#[derive(Clone, PartialEq)]
enum Rule {
    /// Finite table; missing pairs are zero unless listed as undefined.
    Table { entries: BTreeMap<Pair, Element>, undefined: BTreeSet<Pair> },
    Family(Family),
    /// Materialized quadratic model up to a degree cap.
    Quadratic { monomials: BTreeMap<BasisVector, GMonomial>, cap: usize },
}

/// A superalgebra given by generators and a bilinear structure map.
#[derive(Clone)]
pub struct AlgebraSpec {
    name: String,
    style: Style,
    generators: Vec<BasisVector>,
    known: BTreeSet<BasisVector>,
    rule: Rule,
    window: Option<WeightWindow>,
}

/// Sign relating `u*v` to `v*u`.
fn transpose_sign(style: Style, u: &BasisVector, v: &BasisVector) -> Scalar {
    let s = u.parity().swap_sign(v.parity());
    match style {
        Style::Product => s,
        Style::Bracket => -s,
    }
}

impl AlgebraSpec {
    /// Builds a finite table. Entries are `(u, v, u*v)`; the transposed entries are
    /// filled by (anti)supercommutativity, and conflicting listings are rejected.
    pub fn from_table(
        name: &str,
        style: Style,
        generators: Vec<BasisVector>,
        entries: Vec<(BasisVector, BasisVector, Element)>,
    ) -> Result<Self, DomainError> {
        let known: BTreeSet<BasisVector> = generators.iter().cloned().collect();
        if known.len() != generators.len() {
            return Err(DomainError::Inconsistent("duplicate generator".into()));
        }
        let canon = |g: &BasisVector| {
            known.get(g).cloned().ok_or_else(|| DomainError::UnknownGenerator(g.to_string()))
        };
        let mut table: BTreeMap<Pair, Element> = BTreeMap::new();
        for (u, v, e) in entries {
            let (u, v) = (canon(&u)?, canon(&v)?);
            let e = e.try_map_linear(|g| canon(g).map(Element::basis))?;
            validate_entry(&u, &v, &e)?;
            let t = e.scaled(transpose_sign(style, &u, &v));
            for (key, val) in [((u.clone(), v.clone()), e), ((v.clone(), u.clone()), t)] {
                match table.get(&key) {
                    Some(old) if *old != val => {
                        return Err(DomainError::Inconsistent(format!(
                            "{}*{} listed as {} but the sign rule forces {}",
                            key.0, key.1, old, val
                        )));
                    }
                    _ => {
                        table.insert(key, val);
                    }
                }
            }
        }
        table.retain(|_, e| !e.is_zero());
        Ok(AlgebraSpec {
            name: name.to_string(),
            style,
            generators,
            known,
            rule: Rule::Table { entries: table, undefined: BTreeSet::new() },
            window: None,
        })
    }

    /// A finite bracket or product table where some pairs are marked undefined
    /// (their products lie outside the working window).
    pub(crate) fn partial_table(
        name: &str,
        style: Style,
        generators: Vec<BasisVector>,
        entries: BTreeMap<Pair, Element>,
        undefined: BTreeSet<Pair>,
        window: Option<WeightWindow>,
    ) -> Self {
        let known = generators.iter().cloned().collect();
        let entries = entries.into_iter().filter(|(_, e)| !e.is_zero()).collect();
        AlgebraSpec { name: name.to_string(), style, generators, known, rule: Rule::Table { entries, undefined }, window }
    }

    pub(crate) fn family(name: &str, family: Family, window: WeightWindow) -> Self {
        let mut generators: Vec<BasisVector> =
            window.weights_in_coset(Weight::ZERO).into_iter().map(|n| family.even(n)).collect();
        generators.extend(window.weights_in_coset(Weight::half(1)).into_iter().map(Family::odd));
        let known = generators.iter().cloned().collect();
        AlgebraSpec {
            name: name.to_string(),
            style: family.style(),
            generators,
            known,
            rule: Rule::Family(family),
            window: Some(window),
        }
    }

    pub(crate) fn quadratic(name: &str, evens: &[BasisVector], odds: &[BasisVector], cap: usize) -> Self {
        let mut monomials = BTreeMap::new();
        let mut generators = Vec::new();
        for d in 1..=cap {
            for m in super::quadratic::monomials(evens, odds, d) {
                let g = m.to_generator();
                generators.push(g.clone());
                monomials.insert(g, m);
            }
        }
        generators.sort_by_key(|g| g.parity());
        let known = generators.iter().cloned().collect();
        AlgebraSpec {
            name: name.to_string(),
            style: Style::Product,
            generators,
            known,
            rule: Rule::Quadratic { monomials, cap },
            window: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn style(&self) -> Style {
        self.style
    }

    pub fn is_bracket(&self) -> bool {
        self.style == Style::Bracket
    }

    /// Generators in declaration order (for windowed families, the in-window ones).
    pub fn generators(&self) -> &[BasisVector] {
        &self.generators
    }

    pub fn evens(&self) -> Vec<BasisVector> {
        self.generators.iter().filter(|g| !g.is_odd()).cloned().collect()
    }

    pub fn odds(&self) -> Vec<BasisVector> {
        self.generators.iter().filter(|g| g.is_odd()).cloned().collect()
    }

    pub fn window(&self) -> Option<WeightWindow> {
        self.window
    }

    pub fn is_family(&self) -> bool {
        matches!(self.rule, Rule::Family(_))
    }

    pub fn is_table(&self) -> bool {
        matches!(self.rule, Rule::Table { .. })
    }

    /// The quadratic-model monomial behind a generator of a materialized model.
    pub fn monomial(&self, g: &BasisVector) -> Option<&GMonomial> {
        match &self.rule {
            Rule::Quadratic { monomials, .. } => monomials.get(g),
            _ => None,
        }
    }

    /// Restricts products to a window: outputs outside it become window errors.
    pub fn with_window(&self, window: WeightWindow) -> Self {
        match self.rule {
            Rule::Family(f) => Self::family(&self.name, f, window),
            _ => AlgebraSpec { window: Some(window), ..self.clone() },
        }
    }

    pub fn renamed(&self, name: &str) -> Self {
        AlgebraSpec { name: name.to_string(), ..self.clone() }
    }

    /// Resolves a token such as `a`, `eps_2` or `a_-1/2` to a generator.
    pub fn find(&self, token: &str) -> Result<BasisVector> {
        let (name, index) = split_token(token)?;
        self.generator(name, index)
    }

    pub fn generator(&self, name: &str, index: Option<Weight>) -> Result<BasisVector> {
        let probe = match index {
            Some(i) => BasisVector::indexed(name, i, Parity::Even, Weight::ZERO),
            None => BasisVector::new(name, Parity::Even, Weight::ZERO),
        };
        if let Some(g) = self.known.get(&probe) {
            return Ok(g.clone());
        }
        if let Rule::Family(f) = self.rule {
            if let Some(g) = f.resolve(name, index) {
                return Err(WindowError { generator: g.to_string(), weight: g.weight() }.into());
            }
        }
        Err(DomainError::UnknownGenerator(probe.to_string()).into())
    }

    fn canonical(&self, g: &BasisVector) -> Result<BasisVector> {
        if let Some(k) = self.known.get(g) {
            return Ok(k.clone());
        }
        if let Rule::Family(f) = self.rule {
            if f.resolve(g.name(), g.index()).is_some() {
                return Err(WindowError { generator: g.to_string(), weight: g.weight() }.into());
            }
        }
        Err(DomainError::UnknownGenerator(g.to_string()).into())
    }

    fn check_window(&self, e: Element) -> Result<Element> {
        if let Some(w) = self.window {
            if let Some(g) = e.keys().find(|g| !w.contains(g.weight())) {
                return Err(WindowError { generator: g.to_string(), weight: g.weight() }.into());
            }
        }
        Ok(e)
    }

    /// The structure map on two generators.
    pub fn product_gen(&self, u: &BasisVector, v: &BasisVector) -> Result<Element> {
        let (u, v) = (self.canonical(u)?, self.canonical(v)?);
        let raw = match &self.rule {
            Rule::Table { entries, undefined } => {
                let key = (u, v);
                if undefined.contains(&key) {
                    let w = key.0.weight() + key.1.weight();
                    return Err(WindowError { generator: format!("{}*{}", key.0, key.1), weight: w }.into());
                }
                entries.get(&key).cloned().unwrap_or_default()
            }
            Rule::Family(f) => f.apply(&u, &v),
            Rule::Quadratic { monomials, cap } => match monomials[&u].mul(&monomials[&v]) {
                None => Element::zero(),
                Some((c, m)) if m.degree() <= *cap => Element::term(c, m.to_generator()),
                Some((_, m)) => {
                    return Err(WindowError { generator: m.to_string(), weight: m.weight() }.into());
                }
            },
        };
        self.check_window(raw)
    }

    /// The bilinear extension of the structure map.
    pub fn product(&self, u: &Element, v: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (g, c) in u.iter() {
            for (h, d) in v.iter() {
                out.add_scaled(*c * *d, &self.product_gen(g, h)?);
            }
        }
        Ok(out)
    }

    /// Nonzero table entries, for finite tables.
    pub fn table_entries(&self) -> Option<impl Iterator<Item = (&BasisVector, &BasisVector, &Element)> + '_> {
        match &self.rule {
            Rule::Table { entries, .. } => Some(entries.iter().map(|((u, v), e)| (u, v, e))),
            _ => None,
        }
    }

    /// A copy with `u*v` replaced by `e` and the transposed entry adjusted by the sign rule.
    pub fn with_product(&self, u: &BasisVector, v: &BasisVector, e: Element) -> Result<Self> {
        let t = e.scaled(transpose_sign(self.style, u, v));
        let out = self.with_raw_product(u, v, e)?;
        if u == v {
            return Ok(out);
        }
        out.with_raw_product(v, u, t)
    }

    /// A copy with only the single entry `u*v` replaced; the transposed entry is untouched.
    pub fn with_raw_product(&self, u: &BasisVector, v: &BasisVector, e: Element) -> Result<Self> {
        let Rule::Table { entries, undefined } = &self.rule else {
            return Err(DomainError::Unsupported("only finite tables can be edited".into()).into());
        };
        let (u, v) = (self.canonical(u)?, self.canonical(v)?);
        let e = e.try_map_linear(|g| self.canonical(g).map(Element::basis))?;
        let mut entries = entries.clone();
        if e.is_zero() {
            entries.remove(&(u, v));
        } else {
            entries.insert((u, v), e);
        }
        Ok(AlgebraSpec { rule: Rule::Table { entries, undefined: undefined.clone() }, ..self.clone() })
    }
}

fn validate_entry(u: &BasisVector, v: &BasisVector, e: &Element) -> Result<(), DomainError> {
    let parity = u.parity() + v.parity();
    let weight = u.weight() + v.weight();
    if let Some(g) = e.keys().find(|g| g.parity() != parity) {
        return Err(DomainError::Parity(format!("{u}*{v} has parity {parity} but contains {g} ({})", g.parity())));
    }
    if let Some(g) = e.keys().find(|g| g.weight() != weight) {
        return Err(DomainError::Inconsistent(format!(
            "{u}*{v} has weight {weight} but contains {g} of weight {}",
            g.weight()
        )));
    }
    Ok(())
}

impl PartialEq for AlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        let sig = |s: &AlgebraSpec| {
            s.generators.iter().map(|g| (g.clone(), g.parity(), g.weight())).collect::<Vec<_>>()
        };
        self.name == other.name
            && self.style == other.style
            && self.window == other.window
            && sig(self) == sig(other)
            && self.rule == other.rule
    }
}

impl std::fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraSpec")
            .field("name", &self.name)
            .field("style", &self.style)
            .field("generators", &self.generators)
            .field("window", &self.window)
            .finish_non_exhaustive()
    }
}
