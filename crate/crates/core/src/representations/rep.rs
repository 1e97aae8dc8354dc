use std::collections::BTreeMap;
use std::fmt;

use super::operator::Operator;
use crate::algebra::{k3, AlgebraSpec, Style};
use crate::axioms::{check_lie_antialgebra, check_supercommutativity, scan, AxiomReport};
use crate::error::{DomainError, Error, ParseError, Result};
use crate::kernel::{BasisVector, Element, Parity, Scalar, Weight};
use crate::text::{parse_linear, strip_comment, tokens};

/// An even linear map from an algebra to the operators on a graded carrier.
#[derive(Clone, Debug)]
pub struct Representation {
    name: String,
    spec: AlgebraSpec,
    carrier: Vec<BasisVector>,
    action: BTreeMap<BasisVector, Operator>,
}

impl Representation {
    /// Checks that every operator maps the carrier into itself, shifts parity by
    /// the generator's parity and weight by the generator's weight.
    pub fn new(
        name: &str,
        spec: &AlgebraSpec,
        carrier: Vec<BasisVector>,
        action: BTreeMap<BasisVector, Operator>,
    ) -> Result<Self> {
        for (g, op) in &action {
            if !spec.generators().contains(g) {
                return Err(DomainError::UnknownGenerator(g.to_string()).into());
            }
            for v in op.undefined() {
                if !carrier.contains(v) {
                    return Err(DomainError::OutsideAmbient(v.to_string()).into());
                }
            }
            for (v, img) in op.columns() {
                if !carrier.contains(v) {
                    return Err(DomainError::OutsideAmbient(v.to_string()).into());
                }
                for t in img.keys() {
                    if !carrier.contains(t) {
                        return Err(DomainError::OutsideAmbient(t.to_string()).into());
                    }
                    if t.parity() != g.parity() + v.parity() {
                        return Err(DomainError::Parity(format!("{g} maps {v} to {t}")).into());
                    }
                    if t.weight() != g.weight() + v.weight() {
                        return Err(DomainError::Inconsistent(format!(
                            "{g} of weight {} maps {v} to {t}",
                            g.weight()
                        ))
                        .into());
                    }
                }
            }
        }
        let action = action.into_iter().filter(|(_, op)| !op.is_zero()).collect();
        Ok(Representation { name: name.to_string(), spec: spec.clone(), carrier, action })
    }

    pub fn zero(spec: &AlgebraSpec, carrier: Vec<BasisVector>) -> Self {
        Representation { name: "zero".into(), spec: spec.clone(), carrier, action: BTreeMap::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn carrier(&self) -> &[BasisVector] {
        &self.carrier
    }

    pub fn operator(&self, g: &BasisVector) -> Operator {
        self.action.get(g).cloned().unwrap_or_default()
    }

    /// The operator of an arbitrary algebra element.
    pub fn image(&self, x: &Element) -> Operator {
        let mut out = Operator::zero();
        for (g, c) in x.iter() {
            if let Some(op) = self.action.get(g) {
                out.add_scaled(*c, op);
            }
        }
        out
    }

    pub fn act(&self, g: &BasisVector, v: &Element) -> Result<Element> {
        match self.action.get(g) {
            Some(op) => op.apply(v),
            None => Ok(Element::zero()),
        }
    }

    /// A copy with the single column `g | v` replaced.
    pub fn with_action(&self, g: &BasisVector, v: &BasisVector, image: Element) -> Result<Self> {
        let mut action = self.action.clone();
        action.entry(g.clone()).or_default().set(v.clone(), image);
        Representation::new(&self.name, &self.spec, self.carrier.clone(), action)
    }

    pub fn renamed(&self, name: &str) -> Self {
        Representation { name: name.to_string(), ..self.clone() }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "representation {} of {}", self.name, self.spec.name())?;
        for v in &self.carrier {
            let kind = if v.is_odd() { "odd" } else { "even" };
            writeln!(f, "{kind} {v} : weight {}", v.weight())?;
        }
        for (g, op) in &self.action {
            for (v, img) in op.columns() {
                writeln!(f, "{g} | {v} = {img}")?;
            }
        }
        Ok(())
    }
}

fn el(g: &BasisVector) -> Element {
    Element::basis(g.clone())
}

/// `[X, Y]_+ = 1/2 (X Y + (-1)^{xy} Y X)`, applied to `w`.
fn jordan_apply(rep: &Representation, u: &BasisVector, v: &BasisVector, w: &Element) -> Result<Element> {
    let (pu, pv) = (rep.operator(u), rep.operator(v));
    let uv = pu.apply(&pv.apply(w)?)?;
    let vu = pv.apply(&pu.apply(w)?)?;
    Ok((uv + vu.scaled(u.parity().swap_sign(v.parity()))).scaled(Scalar::HALF))
}

/// `rho(u v) = [rho u, rho v]_+` for all generator pairs and
/// `rho(x) rho(y) = rho(y) rho(x)` for even generators, on every carrier vector.
/// Pairs whose product leaves the window, and carrier vectors whose images do,
/// are skipped.
pub fn check_la_representation(rep: &Representation) -> Result<AxiomReport> {
    let spec = rep.spec();
    if spec.is_bracket() {
        return Err(DomainError::Unsupported(format!("`{}` is bracket-style", spec.name())).into());
    }
    let gens = spec.generators().to_vec();
    let carrier = rep.carrier().to_vec();
    let mut report = AxiomReport::default();
    report.push(scan("specialization", &[gens.clone(), gens, carrier.clone()], |t| {
        let w = el(&t[2]);
        let lhs = rep.image(&spec.product_gen(&t[0], &t[1])?).apply(&w)?;
        Ok((lhs, jordan_apply(rep, &t[0], &t[1], &w)?))
    })?);
    let ev = spec.evens();
    report.push(scan("even commutativity", &[ev.clone(), ev, carrier], |t| {
        let w = el(&t[2]);
        let (x, y) = (rep.operator(&t[0]), rep.operator(&t[1]));
        Ok((x.apply(&y.apply(&w)?)?, y.apply(&x.apply(&w)?)?))
    })?);
    Ok(report)
}

/// The split null extension `a + V`: `a` keeps its product, `g v = rho(g) v`,
/// `v g = (-1)^{|g||v|} rho(g) v` and `V V = 0`. Needs a finite table.
pub fn split_null_extension(rep: &Representation) -> Result<AlgebraSpec> {
    let spec = rep.spec();
    let Some(entries) = spec.table_entries() else {
        return Err(DomainError::Unsupported(format!("`{}` is not a finite table", spec.name())).into());
    };
    let mut table: Vec<(BasisVector, BasisVector, Element)> =
        entries.map(|(u, v, e)| (u.clone(), v.clone(), e.clone())).collect();
    let mut gens = spec.generators().to_vec();
    for v in rep.carrier() {
        if gens.iter().any(|g| g.name() == v.name() && g.index() == v.index()) {
            return Err(DomainError::Inconsistent(format!("carrier vector `{v}` shadows a generator")).into());
        }
        gens.push(v.clone());
    }
    for g in spec.generators() {
        for v in rep.carrier() {
            table.push((g.clone(), v.clone(), rep.act(g, &el(v))?));
        }
    }
    gens.sort_by_key(|g| g.parity());
    let name = format!("{}+{}", spec.name(), rep.name());
    Ok(AlgebraSpec::from_table(&name, Style::Product, gens, table)?)
}

/// Supercommutativity and the Lie antialgebra identities on the split null
/// extension.
pub fn check_la_module(rep: &Representation) -> Result<AxiomReport> {
    let ext = split_null_extension(rep)?;
    let mut report = check_supercommutativity(&ext)?;
    report.extend(check_lie_antialgebra(&ext)?);
    Ok(report)
}

/// The three-dimensional module of `K3` on `w` (even) and `u`, `v` (odd).
pub fn v_ad() -> Representation {
    let k = k3();
    let w = BasisVector::even("w", Weight::ZERO);
    let u = BasisVector::odd("u", Weight::half(1));
    let v = BasisVector::odd("v", Weight::half(-1));
    let g = |n: &str| k.find(n).expect("K3 generator");
    let t = |c: Scalar, x: &BasisVector| Element::term(c, x.clone());
    let (one, half, quarter) = (Scalar::ONE, Scalar::HALF, Scalar::new(1, 4));
    let action = BTreeMap::from([
        (g("eps"), Operator::from_columns([(v.clone(), t(half, &v)), (w.clone(), t(one, &w)), (u.clone(), t(half, &u))])),
        (g("a"), Operator::from_columns([(v.clone(), t(one, &w)), (w.clone(), t(one, &u))])),
        (g("b"), Operator::from_columns([(w.clone(), t(quarter, &v)), (u.clone(), t(-quarter, &w))])),
    ]);
    Representation::new("Vad", &k, vec![w, u, v], action).expect("V_ad is well-formed")
}

/// Reads a representation definition:
///
/// ```text
/// representation Vad of K3
/// even w : weight 0
/// odd  v : weight -1/2
/// a | v = w
/// ```
///
/// Generators on the left of `|` are resolved in `spec`.
pub fn load_representation(spec: &AlgebraSpec, text: &str) -> Result<Representation> {
    let mut name: Option<String> = None;
    let mut carrier: Vec<BasisVector> = Vec::new();
    let mut action: BTreeMap<BasisVector, Operator> = BTreeMap::new();
    let mut seen: Vec<(BasisVector, BasisVector)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = strip_comment(raw);
        let toks = tokens(line);
        let Some(first) = toks.first() else { continue };
        let err = |col: usize, msg: String| Error::Parse(ParseError::new(line_no, col, msg));
        match first.text {
            "representation" => {
                if name.is_some() {
                    return Err(err(first.column, "duplicate header".into()));
                }
                let n = toks.get(1).ok_or_else(|| err(first.column, "missing representation name".into()))?;
                match &toks[2..] {
                    [] => {}
                    [of, alg] if of.text == "of" => {
                        if alg.text != spec.name() {
                            return Err(err(alg.column, format!("written for `{}`, not `{}`", alg.text, spec.name())));
                        }
                    }
                    [t, ..] => return Err(err(t.column, "expected `of ALGEBRA` or nothing after the name".into())),
                }
                name = Some(n.text.to_string());
            }
            "even" | "odd" => {
                if name.is_none() {
                    return Err(err(first.column, "basis vector declared before the header".into()));
                }
                let parity = if first.text == "even" { Parity::Even } else { Parity::Odd };
                let n = toks.get(1).ok_or_else(|| err(first.column, "missing basis vector name".into()))?;
                if !n.text.chars().all(|c| c.is_alphanumeric() || c == '\'') {
                    return Err(err(n.column, format!("invalid basis vector name `{}`", n.text)));
                }
                let weight = match &toks[2..] {
                    [] => Weight::ZERO,
                    [colon, kw, w] if colon.text == ":" && kw.text == "weight" => {
                        w.text.parse::<Weight>().map_err(|e| err(w.column, e.message))?
                    }
                    [t, ..] => return Err(err(t.column, "expected `: weight W`".into())),
                };
                if carrier.iter().any(|v| v.name() == n.text) {
                    return Err(err(n.column, format!("basis vector `{}` declared twice", n.text)));
                }
                carrier.push(BasisVector::new(n.text, parity, weight));
            }
            _ => {
                if name.is_none() {
                    return Err(err(first.column, "expected `representation NAME` header".into()));
                }
                let bar = line.find('|').ok_or_else(|| err(first.column, "expected `gen | vector = ...`".into()))?;
                let eq = line.find('=').filter(|&e| e > bar).ok_or_else(|| err(bar + 1, "expected `=`".into()))?;
                let g = spec.find(line[..bar].trim()).map_err(|e| err(first.column, e.to_string()))?;
                let vtext = line[bar + 1..eq].trim();
                let v = carrier
                    .iter()
                    .find(|c| c.name() == vtext)
                    .cloned()
                    .ok_or_else(|| err(bar + 2, format!("unknown basis vector `{vtext}`")))?;
                if seen.contains(&(g.clone(), v.clone())) {
                    return Err(err(first.column, format!("entry for {g} | {v} listed twice")));
                }
                seen.push((g.clone(), v.clone()));
                let img = parse_linear(&line[eq + 1..], eq + 2, |names| match names {
                    [t] => carrier
                        .iter()
                        .find(|c| c.name() == t.text)
                        .cloned()
                        .ok_or_else(|| ParseError::new(0, t.column, format!("unknown basis vector `{}`", t.text))),
                    [] => Err(ParseError::new(0, eq + 2, "a scalar is not a vector")),
                    [_, t, ..] => Err(ParseError::new(0, t.column, "expected a single basis vector per term")),
                })
                .map_err(|e| {
                    let col = e.column;
                    Error::Parse(e.at(line_no, col))
                })?;
                action.entry(g).or_default().set(v, img);
            }
        }
    }
    let name = name.ok_or_else(|| Error::Parse(ParseError::new(1, 1, "missing `representation NAME` header")))?;
    Representation::new(&name, spec, carrier, action)
}
