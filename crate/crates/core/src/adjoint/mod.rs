//! The adjoint Lie superalgebra of a Lie antialgebra: odd part `a_1`, even part
//! `a_1 (x) a_1` modulo symmetry and `ax (x) b = a (x) bx`.

mod verify;

pub use verify::{check_homomorphism, match_k1, match_osp12, osp12_images, verify_adjoint_consistency, K1Match};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{AlgebraSpec, Style};
use crate::error::{DomainError, Error, Result, WindowError};
use crate::kernel::{BasisVector, Element, LinComb, Scalar, Span, Weight};

/// An ordered pair of odd generators, standing for `u (x) v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddPair(pub BasisVector, pub BasisVector);

impl OddPair {
    pub fn weight(&self) -> Weight {
        self.0.weight() + self.1.weight()
    }
}

impl fmt::Display for OddPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.0, self.1)
    }
}

impl fmt::Debug for OddPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The image of a combination of pairs in the even part, with its coordinates
/// over the quotient basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricPairClass {
    pub representative: LinComb<OddPair>,
    pub coordinates: Element,
}

#[derive(Clone)]
pub struct AdjointSpec {
    base: AlgebraSpec,
    spec: AlgebraSpec,
    relations: Span<OddPair>,
    classes: Vec<(BasisVector, OddPair)>,
    coords: BTreeMap<OddPair, Element>,
}

/// Builds the adjoint superalgebra. For windowed algebras only pairs whose total
/// weight lies in the window are kept; brackets needing out-of-window products
/// are marked undefined.
pub fn build_adjoint(base: &AlgebraSpec) -> Result<AdjointSpec> {
    if base.is_bracket() {
        return Err(DomainError::Unsupported(format!("`{}` is not product-style", base.name())).into());
    }
    let odds = base.odds();
    let in_window = |w: Weight| base.window().is_none_or(|win| win.contains(w));
    let mut ambient: Vec<OddPair> = Vec::new();
    for a in &odds {
        for b in &odds {
            let p = OddPair(a.clone(), b.clone());
            if in_window(p.weight()) {
                ambient.push(p);
            }
        }
    }
    // Descending, so pivots are the larger pairs and the smallest ones survive.
    ambient.sort_by(|x, y| y.cmp(x));
    let mut span = Span::new(ambient.clone());
    let pair = |a: &BasisVector, b: &BasisVector| OddPair(a.clone(), b.clone());
    for a in &odds {
        for b in &odds {
            if !in_window(a.weight() + b.weight()) {
                continue;
            }
            let mut rel = LinComb::basis(pair(a, b));
            rel.add_term(-Scalar::ONE, pair(b, a));
            span.insert(&rel)?;
            for x in base.evens() {
                let (ax, bx) = match (base.product_gen(a, &x), base.product_gen(b, &x)) {
                    (Ok(ax), Ok(bx)) => (ax, bx),
                    (Err(Error::Window(_)), _) | (_, Err(Error::Window(_))) => continue,
                    (Err(e), _) | (_, Err(e)) => return Err(e),
                };
                if !in_window(a.weight() + b.weight() + x.weight()) {
                    continue;
                }
                let lhs = ax.map_linear(|g| LinComb::basis(pair(g, b)));
                let rhs = bx.map_linear(|g| LinComb::basis(pair(a, g)));
                span.insert(&(lhs - rhs))?;
            }
        }
    }
    let mut free = span.free();
    free.sort();
    let classes: Vec<(BasisVector, OddPair)> =
        free.into_iter().map(|p| (BasisVector::even(&p.to_string(), p.weight()), p)).collect();
    let class_of_pair: BTreeMap<&OddPair, &BasisVector> = classes.iter().map(|(g, p)| (p, g)).collect();
    let mut coords = BTreeMap::new();
    for p in &ambient {
        let rem = span.reduce(&LinComb::basis(p.clone()))?;
        coords.insert(p.clone(), rem.map_linear(|q| Element::basis(class_of_pair[q].clone())));
    }

    let mut adj = AdjointSpec {
        base: base.clone(),
        spec: AlgebraSpec::partial_table("", Style::Bracket, vec![], BTreeMap::new(), BTreeSet::new(), None),
        relations: span,
        classes,
        coords,
    };
    adj.spec = adj.bracket_table()?;
    Ok(adj)
}

impl AdjointSpec {
    pub fn base(&self) -> &AlgebraSpec {
        &self.base
    }

    /// The adjoint superalgebra as a bracket-style spec.
    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    /// Even generators with the pair each one is the class of.
    pub fn classes(&self) -> &[(BasisVector, OddPair)] {
        &self.classes
    }

    /// Relations spanning the kernel of `a_1 (x) a_1 -> even part`.
    pub fn relations(&self) -> &Span<OddPair> {
        &self.relations
    }

    pub fn even_dimension(&self) -> usize {
        self.classes.len()
    }

    pub fn odd_dimension(&self) -> usize {
        self.base.odds().len()
    }

    pub fn even_dimension_by_weight(&self) -> BTreeMap<Weight, usize> {
        let mut out = BTreeMap::new();
        for (g, _) in &self.classes {
            *out.entry(g.weight()).or_insert(0) += 1;
        }
        out
    }

    /// The representative pair of an even generator.
    pub fn representative(&self, class: &BasisVector) -> Option<&OddPair> {
        self.classes.iter().find(|(g, _)| g == class).map(|(_, p)| p)
    }

    fn pair_coordinates(&self, p: &OddPair) -> Result<Element> {
        self.coords
            .get(p)
            .cloned()
            .ok_or_else(|| WindowError { generator: p.to_string(), weight: p.weight() }.into())
    }

    /// Coordinates of `u . v` over the even generators; `u`, `v` must be odd.
    pub fn sym(&self, u: &Element, v: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (a, c) in u.iter() {
            for (b, d) in v.iter() {
                if !a.is_odd() || !b.is_odd() {
                    return Err(DomainError::Parity(format!("{a}.{b} needs two odd elements")).into());
                }
                out.add_scaled(*c * *d, &self.pair_coordinates(&OddPair(a.clone(), b.clone()))?);
            }
        }
        Ok(out)
    }

    /// `[a.b, c] = a(bc) + b(ac)` evaluated in the base algebra.
    pub fn even_odd_formula(&self, a: &Element, b: &Element, c: &Element) -> Result<Element> {
        let m = |x: &Element, y: &Element| self.base.product(x, y);
        Ok(m(a, &m(b, c)?)? + m(b, &m(a, c)?)?)
    }

    /// `[a.b, c.d] = 2 a(bc).d + 2 b(ad).c`, as coordinates.
    pub fn even_even_formula(&self, a: &Element, b: &Element, c: &Element, d: &Element) -> Result<Element> {
        let m = |x: &Element, y: &Element| self.base.product(x, y);
        let two = Scalar::int(2);
        Ok(self.sym(&m(a, &m(b, c)?)?, d)?.scaled(two) + self.sym(&m(b, &m(a, d)?)?, c)?.scaled(two))
    }

    fn bracket_table(&self) -> Result<AlgebraSpec> {
        let odds = self.base.odds();
        let mut gens: Vec<BasisVector> = self.classes.iter().map(|(g, _)| g.clone()).collect();
        gens.extend(odds.iter().cloned());
        let mut entries = BTreeMap::new();
        let mut undefined = BTreeSet::new();
        let el = |g: &BasisVector| Element::basis(g.clone());
        let mut record = |u: &BasisVector, v: &BasisVector, r: Result<Element>| -> Result<()> {
            match r {
                Ok(e) => {
                    entries.insert((u.clone(), v.clone()), e);
                }
                Err(Error::Window(_)) => {
                    undefined.insert((u.clone(), v.clone()));
                }
                Err(e) => return Err(e),
            }
            Ok(())
        };
        for a in &odds {
            for b in &odds {
                record(a, b, self.sym(&el(a), &el(b)))?;
            }
        }
        for (x, p) in &self.classes {
            for c in &odds {
                let r = self.even_odd_formula(&el(&p.0), &el(&p.1), &el(c));
                record(x, c, r.clone())?;
                record(c, x, r.map(|e| -e))?;
            }
            for (y, q) in &self.classes {
                record(x, y, self.even_even_formula(&el(&p.0), &el(&p.1), &el(&q.0), &el(&q.1)))?;
            }
        }
        let name = format!("g({})", self.base.name());
        Ok(AlgebraSpec::partial_table(&name, Style::Bracket, gens, entries, undefined, self.base.window()))
    }
}

/// The class of `u . v` for odd elements `u`, `v`.
pub fn symmetric_pair(adj: &AdjointSpec, u: &Element, v: &Element) -> Result<SymmetricPairClass> {
    let coordinates = adj.sym(u, v)?;
    let mut representative = LinComb::zero();
    for (a, c) in u.iter() {
        for (b, d) in v.iter() {
            representative.add_term(*c * *d, OddPair(a.clone(), b.clone()));
        }
    }
    Ok(SymmetricPairClass { representative, coordinates })
}
