//! Maps between enveloping algebras: the projection from the enveloping algebra
//! of the adjoint superalgebra, products built from the associative one, and the
//! presentation of U(AK1) as a quotient of U(K1).

use std::collections::BTreeMap;

use super::build::build_env_superalgebra;
use super::system::{BracketConvention, RewriteSystem};
use super::word::{free_product, letter_name, Alphabet, Letter, WordElement};
use crate::adjoint::AdjointSpec;
use crate::algebra::{catalog, WeightWindow};
use crate::axioms::{AxiomResult, Witness};
use crate::error::{DomainError, Result, WindowError};
use crate::kernel::{BasisVector, Element, Parity, Scalar, Weight};

/// Images of letters, extended multiplicatively.
pub type LetterImages = BTreeMap<u16, WordElement>;

/// Applies the algebra map given by `images` to `e` and reduces in `dst`.
pub fn substitute(images: &LetterImages, dst: &RewriteSystem, e: &WordElement) -> Result<WordElement> {
    let mut out = WordElement::zero();
    for (w, c) in e.iter() {
        let mut acc = dst.unit();
        for l in w.letters() {
            let img = images.get(l).ok_or_else(|| DomainError::UnknownGenerator(format!("letter #{l}")))?;
            acc = dst.reduce(&free_product(&acc, img));
        }
        out.add_scaled(*c, &acc);
    }
    dst.normal_form(&out)
}

fn scale_for(convention: BracketConvention) -> Scalar {
    match convention {
        BracketConvention::Symmetrized => Scalar::ONE,
        BracketConvention::Commutator => Scalar::HALF,
    }
}

/// The image of a generator of the adjoint superalgebra: odd generators go to
/// themselves and the class of `a.b` to `(ab + ba)/2`. Under the commutator
/// convention every letter of the source carries an extra factor `1/2`.
pub fn pi_generator(adj: &AdjointSpec, g: &BasisVector, dst: &RewriteSystem, convention: BracketConvention) -> Result<WordElement> {
    let s = scale_for(convention);
    let letter = |b: &BasisVector| -> Result<WordElement> {
        let id = dst
            .alphabet()
            .of_generator(b)
            .ok_or_else(|| WindowError { generator: b.to_string(), weight: b.weight() })?;
        Ok(WordElement::basis(dst.alphabet().word(vec![id])))
    };
    if g.is_odd() {
        return Ok(letter(g)?.scaled(s));
    }
    let p = adj
        .representative(g)
        .ok_or_else(|| WindowError { generator: g.to_string(), weight: g.weight() })?;
    let (a, b) = (letter(&p.0)?, letter(&p.1)?);
    let sym = free_product(&a, &b) + free_product(&b, &a);
    Ok(dst.reduce(&sym.scaled(Scalar::HALF * s)))
}

/// Letter images of the projection from the enveloping algebra `src` of the
/// adjoint superalgebra onto `dst`.
pub fn pi_images(adj: &AdjointSpec, src: &RewriteSystem, dst: &RewriteSystem) -> Result<LetterImages> {
    let convention = src.convention().unwrap_or(BracketConvention::Symmetrized);
    let mut out = LetterImages::new();
    for (id, l) in src.alphabet().letters().iter().enumerate() {
        out.insert(id as u16, pi_generator(adj, &l.generator, dst, convention)?);
    }
    Ok(out)
}

pub fn pi_map(adj: &AdjointSpec, src: &RewriteSystem, dst: &RewriteSystem, e: &WordElement) -> Result<WordElement> {
    substitute(&pi_images(adj, src, dst)?, dst, e)
}

/// Images of the letters of `src` when each generator is first sent to an
/// element of the adjoint superalgebra by `phi` and then projected.
pub fn pi_images_via(
    adj: &AdjointSpec,
    src: &RewriteSystem,
    phi: &BTreeMap<BasisVector, Element>,
    dst: &RewriteSystem,
) -> Result<LetterImages> {
    let convention = src.convention().unwrap_or(BracketConvention::Symmetrized);
    let mut out = LetterImages::new();
    for (id, l) in src.alphabet().letters().iter().enumerate() {
        let e = phi.get(&l.generator).ok_or_else(|| DomainError::UnknownGenerator(l.generator.to_string()))?;
        let mut img = WordElement::zero();
        for (g, c) in e.iter() {
            img.add_scaled(*c, &pi_generator(adj, g, dst, convention)?);
        }
        out.insert(id as u16, img);
    }
    Ok(out)
}

/// Words as basis vectors named by their spelling, for reports.
pub fn as_element(rs: &RewriteSystem, e: &WordElement) -> Element {
    e.map_linear(|w| {
        let al = rs.alphabet();
        Element::basis(BasisVector::new(&al.show_word(w), al.parity(w), al.weight(w)))
    })
}

/// Whether `images` respects every rule of `src`, i.e. defines an algebra map.
pub fn check_substitution(id: &str, src: &RewriteSystem, images: &LetterImages, dst: &RewriteSystem) -> Result<AxiomResult> {
    let mut witness = None;
    let rules = src.rules();
    for (lhs, rhs) in &rules {
        let l = substitute(images, dst, &WordElement::basis((*lhs).clone()))?;
        let r = substitute(images, dst, rhs)?;
        if l != r && witness.is_none() {
            witness = Some(Witness {
                tuple: vec![src.show_rule(lhs, rhs)],
                lhs: as_element(dst, &l),
                rhs: as_element(dst, &r),
            });
        }
    }
    let mut out = AxiomResult::single(id, witness);
    out.checked = rules.len();
    Ok(out)
}

/// The parity shared by all words of `e` (even for zero).
pub fn word_parity(rs: &RewriteSystem, e: &WordElement) -> Result<Parity> {
    let mut it = e.keys().map(|w| rs.alphabet().parity(w));
    let Some(first) = it.next() else {
        return Ok(Parity::Even);
    };
    if it.any(|p| p != first) {
        return Err(DomainError::Parity(format!("{} is not parity-homogeneous", rs.show(e))).into());
    }
    Ok(first)
}

/// `(XY + (-1)^{|X||Y|} YX) / 2`.
pub fn jordan_superproduct(rs: &RewriteSystem, x: &WordElement, y: &WordElement) -> Result<WordElement> {
    let (px, py) = (word_parity(rs, x)?, word_parity(rs, y)?);
    let sum = free_product(x, y) + free_product(y, x).scaled(px.swap_sign(py));
    rs.normal_form(&sum.scaled(Scalar::HALF))
}

/// `XY - (-1)^{|X|(|Y|+1)} YX`.
pub fn twisted_adjoint(rs: &RewriteSystem, x: &WordElement, y: &WordElement) -> Result<WordElement> {
    let (px, py) = (word_parity(rs, x)?, word_parity(rs, y)?);
    let sign = px.swap_sign(py + Parity::Odd);
    rs.normal_form(&(free_product(x, y) - free_product(y, x).scaled(sign)))
}

fn term(rs: &RewriteSystem, c: Scalar, word: &str) -> Result<WordElement> {
    Ok(rs.parse(word)?.scaled(c))
}

/// `EF + FE + H^2/2 + (AB - BA)/2` in the enveloping algebra of osp(1|2).
pub fn casimir(osp: &RewriteSystem) -> Result<WordElement> {
    let h = Scalar::HALF;
    Ok(term(osp, Scalar::ONE, "E F")?
        + term(osp, Scalar::ONE, "F E")?
        + term(osp, h, "H H")?
        + term(osp, h, "A B")?
        - term(osp, h, "B A")?)
}

/// `AB - BA - 1/2` in the enveloping algebra of osp(1|2).
pub fn ghost_casimir(osp: &RewriteSystem) -> Result<WordElement> {
    Ok(term(osp, Scalar::ONE, "A B")? - term(osp, Scalar::ONE, "B A")? - osp.unit().scaled(Scalar::HALF))
}

/// U(K1) on the window with letters `E_n` adjoined, subject to
/// `A_{n-i} A_i - A_i A_{n-i} = (2i - n) E_n` and `E_n E_m = E_{n+m}`. The
/// letters `X_n` get filtration degree 2 and rank above all others, so that
/// they are rewritten into products of odd letters.
pub fn k1_quotient(window: WeightWindow) -> Result<RewriteSystem> {
    let k1 = catalog("K1", Some(window))?;
    let mut letters = Vec::new();
    for n in window.weights_in_coset(Weight::ZERO) {
        let g = BasisVector::indexed("eps", n, Parity::Even, n);
        letters.push(Letter { name: letter_name(&g), generator: g, degree: 1 });
    }
    for g in k1.odds() {
        letters.push(Letter { name: letter_name(&g), generator: g, degree: 1 });
    }
    for g in k1.evens() {
        letters.push(Letter { name: letter_name(&g), generator: g, degree: 2 });
    }
    let alphabet = Alphabet::new(letters);
    let base = build_env_superalgebra(&k1, BracketConvention::Symmetrized)?;
    let mut rs = RewriteSystem::new("U(K1)/I", alphabet.clone());
    rs.set_convention(BracketConvention::Symmetrized);
    for _ in 0..base.dropped() {
        rs.note_dropped();
    }
    // carry the relations of U(K1) over to the new alphabet
    for (lhs, rhs) in base.rules() {
        let map = |w: &super::word::Word| {
            let ids = w.letters().iter().map(|&l| alphabet.of_generator(&base.alphabet().letter(l).generator).expect("shared"));
            alphabet.word(ids.collect())
        };
        let rel = WordElement::basis(map(lhs)) - rhs.map_linear(|w| WordElement::basis(map(w)));
        rs.add_relation(&rel)?;
    }
    let eps = |n: Weight| alphabet.of_generator(&BasisVector::indexed("eps", n, Parity::Even, n));
    let odd = |i: Weight| k1.generator("a", Some(i)).ok().and_then(|g| alphabet.of_generator(&g));
    let evens = window.weights_in_coset(Weight::ZERO);
    for &n in &evens {
        for &m in &evens {
            match (eps(n), eps(m), eps(n + m)) {
                (Some(a), Some(b), Some(c)) => {
                    rs.add_relation(&(WordElement::basis(alphabet.word(vec![a, b])) - WordElement::basis(alphabet.word(vec![c]))))?;
                }
                _ => rs.note_dropped(),
            }
        }
        for i in window.weights_in_coset(Weight::half(1)) {
            let (Some(p), Some(q), Some(e)) = (odd(n - i), odd(i), eps(n)) else {
                continue;
            };
            let c = (i + i - n).to_scalar();
            let rel = WordElement::basis(alphabet.word(vec![p, q]))
                - WordElement::basis(alphabet.word(vec![q, p]))
                - WordElement::basis(alphabet.word(vec![e])).scaled(c);
            rs.add_relation(&rel)?;
        }
    }
    Ok(rs)
}

/// Letter images from `U(K1)/I` to U(AK1) on the same window: `E_n` and `A_i`
/// go to themselves and `X_n` to `(A_{n-i} A_i + A_i A_{n-i})/2`.
pub fn k1_quotient_images(quotient: &RewriteSystem, ak1: &RewriteSystem) -> Result<LetterImages> {
    let mut out = LetterImages::new();
    for (id, l) in quotient.alphabet().letters().iter().enumerate() {
        let g = &l.generator;
        let find = |name: &str, w: Weight| -> Result<WordElement> {
            let b = BasisVector::indexed(name, w, Parity::from_bit(w.twice().rem_euclid(2) as u32), w);
            let id = ak1.alphabet().of_generator(&b).ok_or_else(|| WindowError { generator: b.to_string(), weight: w })?;
            Ok(WordElement::basis(ak1.alphabet().word(vec![id])))
        };
        let img = match (g.name(), g.index()) {
            ("eps", Some(n)) => find("eps", n)?,
            ("a", Some(i)) => find("a", i)?,
            ("x", Some(n)) => {
                let i = candidate_split(ak1, n)?;
                let (p, q) = (find("a", n - i)?, find("a", i)?);
                (free_product(&p, &q) + free_product(&q, &p)).scaled(Scalar::HALF)
            }
            _ => return Err(DomainError::UnknownGenerator(g.to_string()).into()),
        };
        out.insert(id as u16, img);
    }
    Ok(out)
}

fn candidate_split(ak1: &RewriteSystem, n: Weight) -> Result<Weight> {
    let has = |i: Weight| {
        ak1.alphabet().of_generator(&BasisVector::indexed("a", i, Parity::Odd, i)).is_some()
    };
    let mut i = Weight::half(1);
    for _ in 0..64 {
        for cand in [i, -i] {
            if has(cand) && has(n - cand) {
                return Ok(cand);
            }
        }
        i = i + Weight::int(1);
    }
    Err(WindowError { generator: format!("x_{n}"), weight: n }.into())
}

/// The generator of U(K1)/I or U(AK1) named `name` with index `w`, as a word.
pub fn indexed_letter(rs: &RewriteSystem, name: &str, w: Weight) -> Result<WordElement> {
    let l = rs
        .alphabet()
        .letters()
        .iter()
        .position(|l| l.generator.name() == name && l.generator.index() == Some(w))
        .ok_or_else(|| WindowError { generator: format!("{name}_{w}"), weight: w })?;
    Ok(WordElement::basis(rs.alphabet().word(vec![l as u16])))
}
