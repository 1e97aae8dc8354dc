use std::collections::HashMap;
use std::fmt;

use crate::error::{DomainError, ParseError};
use crate::kernel::{format_terms, BasisVector, LinComb, Parity, Weight};

/// A letter of an enveloping algebra: a generator with its display name and
/// filtration degree.
#[derive(Clone, Debug)]
pub struct Letter {
    pub name: String,
    pub generator: BasisVector,
    pub degree: u32,
}

impl Letter {
    pub fn parity(&self) -> Parity {
        self.generator.parity()
    }

    pub fn weight(&self) -> Weight {
        self.generator.weight()
    }
}

/// Upper-cases a generator name for use as a letter: `eps` becomes `E`, and
/// compound names are converted part by part (`a.b` becomes `A.B`).
pub fn letter_name(g: &BasisVector) -> String {
    let base: Vec<String> = g
        .name()
        .split('.')
        .map(|part| if part == "eps" { "E".to_string() } else { part.to_uppercase() })
        .collect();
    let base = base.join(".");
    match g.index() {
        Some(i) => format!("{base}_{i}"),
        None => base,
    }
}

/// Letters in reduction order: a letter's position is its rank.
#[derive(Clone, Debug, Default)]
pub struct Alphabet {
    letters: Vec<Letter>,
    by_name: HashMap<String, u16>,
    by_generator: HashMap<BasisVector, u16>,
}

impl Alphabet {
    pub fn new(letters: Vec<Letter>) -> Self {
        let mut a = Alphabet::default();
        for l in letters {
            a.push(l);
        }
        a
    }

    fn push(&mut self, l: Letter) {
        let id = self.letters.len() as u16;
        self.by_name.insert(l.name.clone(), id);
        self.by_name.entry(l.generator.to_string()).or_insert(id);
        self.by_generator.insert(l.generator.clone(), id);
        self.letters.push(l);
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, id: u16) -> &Letter {
        &self.letters[id as usize]
    }

    /// Looks a letter up by display name or by the generator's own name.
    pub fn find(&self, name: &str) -> Option<u16> {
        self.by_name.get(name).copied()
    }

    pub fn of_generator(&self, g: &BasisVector) -> Option<u16> {
        self.by_generator.get(g).copied()
    }

    pub fn word(&self, letters: Vec<u16>) -> Word {
        let degree = letters.iter().map(|&l| self.letter(l).degree).sum();
        Word { degree, letters }
    }

    pub fn unit(&self) -> Word {
        Word { degree: 0, letters: vec![] }
    }

    pub fn parity(&self, w: &Word) -> Parity {
        Parity::from_bit(w.letters.iter().map(|&l| self.letter(l).parity().bit()).sum::<u32>() % 2)
    }

    pub fn weight(&self, w: &Word) -> Weight {
        w.letters.iter().map(|&l| self.letter(l).weight()).sum()
    }

    pub fn show_word(&self, w: &Word) -> String {
        if w.letters.is_empty() {
            return "1".into();
        }
        let names: Vec<&str> = w.letters.iter().map(|&l| self.letter(l).name.as_str()).collect();
        names.join(" ")
    }

    /// Terms largest first, e.g. `A B - E`.
    pub fn show(&self, e: &WordElement) -> String {
        format_terms(e.iter().rev(), |w| self.show_word(w))
    }

    /// Parses a word expression such as `B A - 1/2 E` or `E A B^4`.
    pub fn parse(&self, text: &str) -> Result<WordElement, ParseError> {
        if text.trim().is_empty() {
            return Ok(WordElement::basis(self.unit()));
        }
        crate::text::parse_linear(text, 1, |toks| {
            let mut letters = Vec::new();
            for t in toks {
                let (name, power) = match t.text.split_once('^') {
                    Some((n, p)) => {
                        let p: usize =
                            p.parse().map_err(|_| ParseError::new(0, t.column, format!("bad exponent in `{}`", t.text)))?;
                        (n, p)
                    }
                    None => (t.text, 1),
                };
                let id = self
                    .find(name)
                    .ok_or_else(|| ParseError::new(0, t.column, DomainError::UnknownGenerator(name.into()).to_string()))?;
                letters.extend(std::iter::repeat_n(id, power));
            }
            Ok(self.word(letters))
        })
    }
}

/// A tensor monomial. Words compare by filtration degree, then
/// lexicographically by letter rank; this is the reduction order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word {
    degree: u32,
    letters: Vec<u16>,
}

impl Word {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn letters(&self) -> &[u16] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { degree: self.degree + other.degree, letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", ids.join(" "))
    }
}

pub type WordElement = LinComb<Word>;

/// The product of two word combinations in the free algebra.
pub fn free_product(x: &WordElement, y: &WordElement) -> WordElement {
    let mut out = WordElement::zero();
    for (u, c) in x.iter() {
        for (v, d) in y.iter() {
            out.add_term(*c * *d, u.concat(v));
        }
    }
    out
}
