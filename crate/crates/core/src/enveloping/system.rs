use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::word::{free_product, Alphabet, Word, WordElement};
use crate::error::{Error, ParseError, Result};
use crate::kernel::{Scalar, Weight};

/// How `x (x) y - (-1)^{xy} y (x) x` relates to the bracket when a Lie
/// superalgebra is turned into an enveloping algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BracketConvention {
    /// The supercommutator equals `2 [x, y]`.
    Symmetrized,
    /// The supercommutator equals `[x, y]`.
    Commutator,
}

impl BracketConvention {
    pub(crate) fn factor(self) -> Scalar {
        match self {
            BracketConvention::Symmetrized => Scalar::int(2),
            BracketConvention::Commutator => Scalar::ONE,
        }
    }
}

/// A rule added while resolving an overlap.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompletionStep {
    pub overlap: String,
    pub rule: String,
}

/// A noncommutative rewriting system: oriented rules `lhs -> rhs` with every word
/// of `rhs` smaller than `lhs`.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    name: String,
    alphabet: Alphabet,
    rules: BTreeMap<Vec<u16>, (Word, WordElement)>,
    max_len: usize,
    log: Vec<CompletionStep>,
    dropped: usize,
    bound: Option<u32>,
    convention: Option<BracketConvention>,
}

fn contains_factor(hay: &[u16], needle: &[u16]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

impl RewriteSystem {
    /// The free algebra on `alphabet`.
    pub fn new(name: &str, alphabet: Alphabet) -> Self {
        RewriteSystem {
            name: name.to_string(),
            alphabet,
            rules: BTreeMap::new(),
            max_len: 0,
            log: Vec::new(),
            dropped: 0,
            bound: None,
            convention: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn convention(&self) -> Option<BracketConvention> {
        self.convention
    }

    pub(crate) fn set_convention(&mut self, c: BracketConvention) {
        self.convention = Some(c);
    }

    /// Relations skipped at construction because they left the weight window.
    pub fn dropped(&self) -> usize {
        self.dropped
    }

    pub(crate) fn note_dropped(&mut self) {
        self.dropped += 1;
    }

    /// The degree up to which the system has been completed.
    pub fn bound(&self) -> Option<u32> {
        self.bound
    }

    pub fn log(&self) -> &[CompletionStep] {
        &self.log
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    /// Rules in increasing order of their left-hand sides.
    pub fn rules(&self) -> Vec<(&Word, &WordElement)> {
        let mut out: Vec<_> = self.rules.values().map(|(l, r)| (l, r)).collect();
        out.sort_by(|a, b| a.0.cmp(b.0));
        out
    }

    pub fn rule_for(&self, lhs: &Word) -> Option<&WordElement> {
        self.rules.get(lhs.letters()).map(|(_, r)| r)
    }

    pub fn show(&self, e: &WordElement) -> String {
        self.alphabet.show(e)
    }

    pub fn show_rule(&self, lhs: &Word, rhs: &WordElement) -> String {
        format!("{} -> {}", self.alphabet.show_word(lhs), self.alphabet.show(rhs))
    }

    /// One rule per line, `LHS -> c1 W1 + c2 W2`.
    pub fn dump(&self) -> String {
        self.rules().into_iter().map(|(l, r)| self.show_rule(l, r) + "\n").collect()
    }

    pub fn parse(&self, text: &str) -> Result<WordElement, ParseError> {
        self.alphabet.parse(text)
    }

    pub fn letter(&self, name: &str) -> Result<WordElement> {
        let id = self
            .alphabet
            .find(name)
            .ok_or_else(|| crate::error::DomainError::UnknownGenerator(name.to_string()))?;
        Ok(WordElement::basis(self.alphabet.word(vec![id])))
    }

    pub fn unit(&self) -> WordElement {
        WordElement::basis(self.alphabet.unit())
    }

    pub fn weight(&self, w: &Word) -> Weight {
        self.alphabet.weight(w)
    }

    /// Leftmost, then shortest, occurrence of a rule's left-hand side.
    fn redex(&self, letters: &[u16]) -> Option<(usize, usize)> {
        for i in 0..letters.len() {
            for l in 1..=self.max_len.min(letters.len() - i) {
                if self.rules.contains_key(&letters[i..i + l]) {
                    return Some((i, l));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.redex(w.letters()).is_none()
    }

    /// Whether some rule's left-hand side is a suffix of `letters`.
    pub(crate) fn has_reducible_suffix(&self, letters: &[u16]) -> bool {
        let n = letters.len();
        (1..=self.max_len.min(n)).any(|l| self.rules.contains_key(&letters[n - l..]))
    }

    /// Normal form without the degree-bound check.
    pub(crate) fn reduce(&self, e: &WordElement) -> WordElement {
        let mut work: BTreeMap<Word, Scalar> = e.clone().into_terms();
        let mut out = WordElement::zero();
        // Rewriting only produces smaller words, so the largest pending word is final
        // once it is irreducible.
        while let Some((w, c)) = work.pop_last() {
            let Some((i, l)) = self.redex(w.letters()) else {
                out.add_term(c, w);
                continue;
            };
            let (lhs, rhs) = &self.rules[&w.letters()[i..i + l]];
            for (r, d) in rhs.iter() {
                let mut letters = Vec::with_capacity(w.len() - l + r.len());
                letters.extend_from_slice(&w.letters()[..i]);
                letters.extend_from_slice(r.letters());
                letters.extend_from_slice(&w.letters()[i + l..]);
                let word = self.alphabet.word(letters);
                debug_assert!(word.degree() + lhs.degree() == w.degree() + r.degree());
                match work.entry(word) {
                    Entry::Occupied(mut o) => {
                        *o.get_mut() += c * *d;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    Entry::Vacant(v) => {
                        v.insert(c * *d);
                    }
                }
            }
        }
        out
    }

    fn check_bound(&self, e: &WordElement) -> Result<()> {
        if let Some(b) = self.bound {
            if let Some(w) = e.keys().find(|w| w.degree() > b) {
                return Err(Error::Bound { bound: b as usize, length: w.degree() as usize });
            }
        }
        Ok(())
    }

    /// Rewrites leftmost-innermost until no left-hand side occurs. Words beyond
    /// the completion degree are rejected, since their normal forms are not
    /// reliable there.
    pub fn normal_form(&self, e: &WordElement) -> Result<WordElement> {
        self.check_bound(e)?;
        Ok(self.reduce(e))
    }

    pub fn product(&self, x: &WordElement, y: &WordElement) -> Result<WordElement> {
        self.normal_form(&free_product(x, y))
    }

    /// Whether `x` and `y` have the same normal form.
    pub fn equal(&self, x: &WordElement, y: &WordElement) -> Result<bool> {
        Ok(self.normal_form(&(x - y))?.is_zero())
    }

    /// Adds the relation `rel = 0`, oriented by its leading word after reduction.
    /// Rules made redundant are re-oriented and right-hand sides kept reduced.
    /// Returns the left-hand sides of the rules created.
    pub fn add_relation(&mut self, rel: &WordElement) -> Result<Vec<Word>> {
        let mut created = Vec::new();
        let mut queue = vec![rel.clone()];
        while let Some(r) = queue.pop() {
            let r = self.reduce(&r);
            let Some((lead, c)) = r.leading().map(|(w, c)| (w.clone(), *c)) else {
                continue;
            };
            if lead.is_empty() {
                return Err(Error::Completion(format!("the relation {} = 0 makes the unit vanish", self.show(&r))));
            }
            let mut rhs = r.clone();
            rhs.add_term(-c, lead.clone());
            let rhs = rhs.scaled(-c.recip());
            let victims: Vec<Vec<u16>> =
                self.rules.keys().filter(|k| contains_factor(k, lead.letters())).cloned().collect();
            for v in victims {
                let (l, rr) = self.rules.remove(&v).expect("victim present");
                created.retain(|w: &Word| *w != l);
                queue.push(WordElement::basis(l) - rr);
            }
            self.rules.insert(lead.letters().to_vec(), (lead.clone(), rhs));
            self.max_len = self.rules.keys().map(Vec::len).max().unwrap_or(0);
            let stale: Vec<Vec<u16>> = self
                .rules
                .iter()
                .filter(|(_, (_, rr))| rr.keys().any(|w| contains_factor(w.letters(), lead.letters())))
                .map(|(k, _)| k.clone())
                .collect();
            for k in stale {
                let rr = self.reduce(&self.rules[&k].1);
                self.rules.get_mut(&k).expect("present").1 = rr;
            }
            created.push(lead);
        }
        Ok(created)
    }

    /// Resolves every overlap ambiguity whose word has degree at most
    /// `max_degree`, adding the differences as new rules, until no overlap
    /// produces anything new.
    pub fn complete(&mut self, max_degree: u32) -> Result<()> {
        let mut done: HashSet<(Vec<u16>, Vec<u16>, usize)> = HashSet::new();
        loop {
            let mut changed = false;
            let keys: Vec<Vec<u16>> = self.rules.keys().cloned().collect();
            for l1 in &keys {
                for l2 in &keys {
                    for k in 1..l1.len().min(l2.len()) {
                        if l1[l1.len() - k..] != l2[..k] {
                            continue;
                        }
                        if !self.rules.contains_key(l1) || !self.rules.contains_key(l2) {
                            break;
                        }
                        let mut letters = l1.clone();
                        letters.extend_from_slice(&l2[k..]);
                        let word = self.alphabet.word(letters);
                        if word.degree() > max_degree || !done.insert((l1.clone(), l2.clone(), k)) {
                            continue;
                        }
                        let prefix = WordElement::basis(self.alphabet.word(l1[..l1.len() - k].to_vec()));
                        let suffix = WordElement::basis(self.alphabet.word(l2[k..].to_vec()));
                        let left = free_product(&self.rules[l1].1, &suffix);
                        let right = free_product(&prefix, &self.rules[l2].1);
                        let diff = self.reduce(&(left - right));
                        if diff.is_zero() {
                            continue;
                        }
                        let overlap = self.alphabet.show_word(&word);
                        for lhs in self.add_relation(&diff)? {
                            if let Some((l, r)) = self.rules.get(lhs.letters()) {
                                let rule = self.show_rule(l, r);
                                self.log.push(CompletionStep { overlap: overlap.clone(), rule });
                            }
                        }
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        self.bound = Some(self.bound.map_or(max_degree, |b| b.max(max_degree)));
        Ok(())
    }
}
