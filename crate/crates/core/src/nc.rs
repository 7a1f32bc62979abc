//! Polynomials in noncommuting variables and the ab -> ce -> cd pipeline.
//!
//! `c = a + b`, `e = a - b` and `d = ab + ba = (c^2 - e^2) / 2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::flag::{self, FlagKind, FlagVector};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    AB,
    CE,
    CD,
}

impl Alphabet {
    pub fn letters(self) -> [u8; 2] {
        match self {
            Alphabet::AB => [b'a', b'b'],
            Alphabet::CE => [b'c', b'e'],
            Alphabet::CD => [b'c', b'd'],
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::AB => "AB",
            Alphabet::CE => "CE",
            Alphabet::CD => "CD",
        })
    }
}

impl std::str::FromStr for Alphabet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "AB" => Ok(Alphabet::AB),
            "CE" => Ok(Alphabet::CE),
            "CD" => Ok(Alphabet::CD),
            other => Err(Error::Input(format!("unknown alphabet `{other}`"))),
        }
    }
}

/// A word, ordered by degree (`d` counts twice) and then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: impl Into<Vec<u8>>) -> Self {
        Word(letters.into())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&l| if l == b'd' { 2 } else { 1 }).sum()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("words are ASCII")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.as_str())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        Self { alphabet, terms: BTreeMap::new() }
    }

    /// The empty word with coefficient one.
    pub fn one(alphabet: Alphabet) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(Word::empty(), Rational::one());
        p
    }

    /// Parses `(word, coefficient)` pairs, rejecting letters outside the alphabet.
    pub fn from_terms<'a, I>(alphabet: Alphabet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, Rational)>,
    {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            p.add_term(p.parse_word(w)?, c);
        }
        Ok(p)
    }

    /// Integer-coefficient shorthand for [`Self::from_terms`].
    pub fn from_int_terms(alphabet: Alphabet, terms: &[(&str, i64)]) -> Result<Self> {
        Self::from_terms(alphabet, terms.iter().map(|&(w, c)| (w, arith::rat(c))))
    }

    fn parse_word(&self, w: &str) -> Result<Word> {
        let letters = self.alphabet.letters();
        if w.bytes().all(|b| letters.contains(&b)) {
            Ok(Word::new(w.as_bytes()))
        } else {
            Err(Error::InvalidWord {
                word: w.to_string(),
                alphabet: self.alphabet.to_string(),
            })
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &str) -> Rational {
        self.terms
            .get(&Word::new(w.as_bytes()))
            .cloned()
            .unwrap_or_else(Rational::zero)
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

    /// The common degree of all words, `None` if mixed or zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(Word::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().cloned().sum()
    }

    fn expect(&self, alphabet: Alphabet) -> Result<()> {
        if self.alphabet == alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                expected: alphabet.to_string(),
                found: self.alphabet.to_string(),
            })
        }
    }

    pub fn add(&self, other: &NCPoly) -> Result<NCPoly> {
        other.expect(self.alphabet)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NCPoly) -> Result<NCPoly> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, r: &Rational) -> NCPoly {
        let mut out = Self::zero(self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * r);
        }
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &NCPoly) -> Result<NCPoly> {
        other.expect(self.alphabet)?;
        let mut out = Self::zero(self.alphabet);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Reverses every word.
    pub fn reverse(&self) -> NCPoly {
        let mut out = Self::zero(self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.reversed(), c.clone());
        }
        out
    }

    /// `{"alphabet": "CD", "terms": {"word": [num, den]}}`
    pub fn to_json(&self) -> Value {
        let mut terms = Map::new();
        for (w, c) in &self.terms {
            terms.insert(w.to_string(), arith::rational_to_json(c));
        }
        let mut obj = Map::new();
        obj.insert("alphabet".into(), Value::from(self.alphabet.to_string()));
        obj.insert("terms".into(), Value::Object(terms));
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let alphabet: Alphabet = v["alphabet"]
            .as_str()
            .ok_or_else(|| Error::Input("missing `alphabet`".into()))?
            .parse()?;
        let terms = v["terms"]
            .as_object()
            .ok_or_else(|| Error::Input("missing `terms`".into()))?;
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            let word = p.parse_word(w)?;
            p.add_term(word, arith::rational_from_json(c)?);
        }
        Ok(p)
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly[{}]({self})", self.alphabet)
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let sep = match (i, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let abs = c.abs();
            let word = if w.0.is_empty() { "1" } else { w.as_str() };
            if abs.is_one() {
                write!(f, "{sep}{word}")?;
            } else if w.0.is_empty() {
                write!(f, "{sep}{}", arith::fmt_rational(&abs))?;
            } else {
                write!(f, "{sep}{}{word}", arith::fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

/// `Psi(a, b) = sum_S h_S u_S` with `u_i = b` exactly when `i ∈ S`.
pub fn ab_index(h: &FlagVector) -> Result<NCPoly> {
    if h.kind() != FlagKind::H {
        return Err(Error::KindMismatch {
            expected: FlagKind::H.to_string(),
            found: h.kind().to_string(),
        });
    }
    let n = h.n();
    let mut p = NCPoly::zero(Alphabet::AB);
    for s in 0..=h.full_set() {
        let w: Vec<u8> = (0..n).map(|i| if s >> i & 1 == 1 { b'b' } else { b'a' }).collect();
        p.add_term(Word(w), h.get(s).clone());
    }
    Ok(p)
}

/// Substitutes `a = (c + e)/2`, `b = (c - e)/2`.
pub fn ab_to_ce(p: &NCPoly) -> Result<NCPoly> {
    p.expect(Alphabet::AB)?;
    let mut out = NCPoly::zero(Alphabet::CE);
    for (w, coeff) in &p.terms {
        let len = w.0.len();
        let scale = coeff / Rational::from_integer(num_bigint::BigInt::one() << len);
        let bs: u64 = w
            .0
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == b'b')
            .fold(0, |m, (i, _)| m | 1 << i);
        for t in 0..1u64 << len {
            let ce: Vec<u8> = (0..len).map(|i| if t >> i & 1 == 1 { b'e' } else { b'c' }).collect();
            let c = &scale * arith::sign((bs & t).count_ones() as i64);
            out.add_term(Word(ce), c);
        }
    }
    Ok(out)
}

/// `e^{2k} = (c^2 - 2d)^k` on every maximal run of `e`.
pub fn ce_to_cd(p: &NCPoly) -> Result<NCPoly> {
    p.expect(Alphabet::CE)?;
    let mut e2 = NCPoly::zero(Alphabet::CD);
    e2.add_term(Word::new("cc"), Rational::one());
    e2.add_term(Word::new("d"), arith::rat(-2));
    let c = NCPoly::from_int_terms(Alphabet::CD, &[("c", 1)])?;
    let mut out = NCPoly::zero(Alphabet::CD);
    for (w, coeff) in &p.terms {
        let mut acc = NCPoly::one(Alphabet::CD);
        let mut i = 0;
        let letters = &w.0;
        while i < letters.len() {
            if letters[i] == b'c' {
                acc = acc.mul(&c)?;
                i += 1;
                continue;
            }
            let run = letters[i..].iter().take_while(|&&l| l == b'e').count();
            if run % 2 == 1 {
                return Err(Error::OddEWordPresent(w.to_string()));
            }
            for _ in 0..run / 2 {
                acc = acc.mul(&e2)?;
            }
            i += run;
        }
        out = out.add(&acc.scale(coeff))?;
    }
    Ok(out)
}

/// Substitutes `d = (c^2 - e^2)/2`.
pub fn cd_to_ce(p: &NCPoly) -> Result<NCPoly> {
    p.expect(Alphabet::CD)?;
    let half = arith::ratio(1, 2);
    let d = NCPoly::from_terms(Alphabet::CE, [("cc", half.clone()), ("ee", -half)])?;
    let c = NCPoly::from_int_terms(Alphabet::CE, &[("c", 1)])?;
    let mut out = NCPoly::zero(Alphabet::CE);
    for (w, coeff) in &p.terms {
        let mut acc = NCPoly::one(Alphabet::CE);
        for &l in &w.0 {
            acc = acc.mul(if l == b'c' { &c } else { &d })?;
        }
        out = out.add(&acc.scale(coeff))?;
    }
    Ok(out)
}

/// ab-index of a poset via its flag f- and h-vectors.
pub fn ab_index_of(p: &Poset) -> Result<NCPoly> {
    ab_index(&flag::h_from_f(&flag::flag_f(p)?)?)
}

/// The cd-index of a graded Eulerian poset.
pub fn cd_index(p: &Poset) -> Result<NCPoly> {
    p.require_eulerian()?;
    ce_to_cd(&ab_to_ce(&ab_index_of(p)?)?)
}

/// Every cd-word of the given degree, in canonical order.
pub fn cd_words(degree: usize) -> Vec<Word> {
    let mut table: Vec<Vec<Vec<u8>>> = vec![vec![Vec::new()]];
    for k in 1..=degree {
        let mut ws = Vec::new();
        for w in &table[k - 1] {
            let mut v = vec![b'c'];
            v.extend_from_slice(w);
            ws.push(v);
        }
        if k >= 2 {
            for w in &table[k - 2] {
                let mut v = vec![b'd'];
                v.extend_from_slice(w);
                ws.push(v);
            }
        }
        table.push(ws);
    }
    let mut out: Vec<Word> = table.swap_remove(degree).into_iter().map(Word).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use crate::flag::{flag_f, h_from_f, l_from_f};
    use crate::poset::{boolean_algebra, chain, cross_polytope_lattice, cube_lattice, polygon_lattice};
    use proptest::prelude::*;

    fn cd(terms: &[(&str, i64)]) -> NCPoly {
        NCPoly::from_int_terms(Alphabet::CD, terms).unwrap()
    }

    #[test]
    fn ab_indices() {
        let h = h_from_f(&flag_f(&boolean_algebra(3).unwrap()).unwrap()).unwrap();
        let ab = ab_index(&h).unwrap();
        let want = NCPoly::from_int_terms(Alphabet::AB, &[("aa", 1), ("ab", 2), ("ba", 2), ("bb", 1)]).unwrap();
        assert_eq!(ab, want);
        let sq = ab_index_of(&polygon_lattice(4).unwrap()).unwrap();
        assert_eq!(sq.coeff("ab"), rat(3));
        assert_eq!(sq.coeff("ba"), rat(3));
        let ch = ab_index_of(&chain(4).unwrap()).unwrap();
        assert_eq!(ch, NCPoly::from_int_terms(Alphabet::AB, &[("aaa", 1)]).unwrap());
        assert!(ab_index(&flag_f(&chain(2).unwrap()).unwrap()).is_err());
    }

    #[test]
    fn ce_and_cd() {
        let ab = NCPoly::from_int_terms(Alphabet::AB, &[("aa", 1), ("ab", 2), ("ba", 2), ("bb", 1)]).unwrap();
        let ce = ab_to_ce(&ab).unwrap();
        let want = NCPoly::from_terms(Alphabet::CE, [("cc", ratio(3, 2)), ("ee", ratio(-1, 2))]).unwrap();
        assert_eq!(ce, want);
        assert_eq!(ce_to_cd(&ce).unwrap(), cd(&[("cc", 1), ("d", 1)]));
        let sq = NCPoly::from_int_terms(Alphabet::CE, &[("cc", 2), ("ee", -1)]).unwrap();
        assert_eq!(ce_to_cd(&sq).unwrap(), cd(&[("cc", 1), ("d", 2)]));
        let odd = NCPoly::from_int_terms(Alphabet::CE, &[("ce", 1)]).unwrap();
        assert_eq!(ce_to_cd(&odd), Err(Error::OddEWordPresent("ce".into())));
        assert_eq!(
            cd_to_ce(&cd(&[("d", 1)])).unwrap(),
            NCPoly::from_terms(Alphabet::CE, [("cc", ratio(1, 2)), ("ee", ratio(-1, 2))]).unwrap()
        );
        assert_eq!(cd_to_ce(&cd(&[("cc", 1), ("d", 2)])).unwrap(), sq);
        assert!(matches!(ab_to_ce(&sq), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn cd_indices_of_families() {
        assert_eq!(cd_index(&boolean_algebra(3).unwrap()).unwrap(), cd(&[("cc", 1), ("d", 1)]));
        assert_eq!(
            cd_index(&cube_lattice(3).unwrap()).unwrap(),
            cd(&[("ccc", 1), ("dc", 6), ("cd", 4)])
        );
        for m in 3..10 {
            assert_eq!(
                cd_index(&polygon_lattice(m).unwrap()).unwrap(),
                cd(&[("cc", 1), ("d", m as i64 - 2)])
            );
        }
        assert!(matches!(cd_index(&chain(2).unwrap()), Err(Error::NotEulerian { .. })));
        assert_eq!(cd_index(&boolean_algebra(1).unwrap()).unwrap(), NCPoly::one(Alphabet::CD));
    }

    #[test]
    fn duality_reverses() {
        for p in [cube_lattice(3).unwrap(), cube_lattice(4).unwrap(), cross_polytope_lattice(4).unwrap()] {
            let phi = cd_index(&p).unwrap();
            assert!(phi.has_integer_coefficients());
            assert_eq!(cd_index(&p.dual().unwrap()).unwrap(), phi.reverse());
        }
        let r = cd(&[("dc", 6), ("cd", 4)]).reverse();
        assert_eq!(r, cd(&[("cd", 6), ("dc", 4)]));
    }

    #[test]
    fn ce_coefficients_are_l_values() {
        let p = cube_lattice(4).unwrap();
        let f = flag_f(&p).unwrap();
        let l = l_from_f(&f).unwrap();
        let ce = ab_to_ce(&ab_index(&h_from_f(&f).unwrap()).unwrap()).unwrap();
        for s in 0..=l.full_set() {
            let w: String = (0..l.n()).map(|i| if s >> i & 1 == 1 { 'e' } else { 'c' }).collect();
            assert_eq!(&ce.coeff(&w), l.get(s));
        }
    }

    #[test]
    fn word_order_and_display() {
        let p = cd(&[("dc", 6), ("ccc", 1), ("cd", 4)]);
        assert_eq!(p.to_string(), "ccc + 4cd + 6dc");
        assert_eq!(cd_words(4).len(), 5);
        assert_eq!(NCPoly::from_json(&p.to_json()).unwrap(), p);
        assert!(matches!(
            NCPoly::from_int_terms(Alphabet::CD, &[("ce", 1)]),
            Err(Error::InvalidWord { .. })
        ));
    }

    fn arb_cd() -> impl Strategy<Value = NCPoly> {
        (0usize..7).prop_flat_map(|deg| {
            let words = cd_words(deg);
            prop::collection::vec(-9i64..10, words.len()).prop_map(move |cs| {
                let mut p = NCPoly::zero(Alphabet::CD);
                for (w, c) in words.iter().zip(cs) {
                    p.add_term(w.clone(), rat(c));
                }
                p
            })
        })
    }

    proptest! {
        #[test]
        fn cd_ce_round_trip(p in arb_cd()) {
            prop_assert_eq!(ce_to_cd(&cd_to_ce(&p).unwrap()).unwrap(), p.clone());
            prop_assert_eq!(p.reverse().reverse(), p);
        }
    }
}
