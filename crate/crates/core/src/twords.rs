//! t-words over a finite alphabet `A ⊆ K`.
//!
//! A [`TWord`] places at most one nonzero letter at each power of `t`; a
//! [`GeneralizedTWord`] is a finitely supported integer combination of the
//! symbols `tⁱa`. Both evaluate to module elements through `π`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec, ModuleElement};
use crate::search::{self, Choice};

/// An integer index extended by `±∞`, used for `I_max`/`I_min` of empty words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ExtIndex {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtIndex {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtIndex::Finite(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for ExtIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtIndex::NegInf => write!(f, "-inf"),
            ExtIndex::Finite(i) => write!(f, "{i}"),
            ExtIndex::PosInf => write!(f, "+inf"),
        }
    }
}

/// A finite list of module elements containing zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    spec: GroupSpec,
    letters: Vec<ModuleElement>,
    symmetrized: bool,
}

impl Alphabet {
    /// Builds an alphabet; zero is prepended when missing and duplicates
    /// are rejected.
    pub fn new(spec: &GroupSpec, letters: Vec<ModuleElement>) -> Result<Self> {
        for x in &letters {
            spec.check(x)?;
        }
        let mut all = Vec::with_capacity(letters.len() + 1);
        if !letters.iter().any(ModuleElement::is_zero) {
            all.push(spec.zero());
        }
        for x in letters {
            if all.contains(&x) {
                return Err(Error::InvalidAlphabet(format!("duplicate letter {x}")));
            }
            all.push(x);
        }
        let symmetrized = all.iter().all(|x| all.contains(&spec.neg(x)));
        Ok(Alphabet {
            spec: spec.clone(),
            letters: all,
            symmetrized,
        })
    }

    /// The usual alphabet for each family: `{0} ∪ {c·δ₀}` for lamplighters,
    /// `{-⌊m/2⌋, …, ⌊m/2⌋}` for `BS(1,m)`, `{0, ±eᵢ}` for matrix modules.
    pub fn standard(spec: &GroupSpec) -> Self {
        let letters = match spec {
            GroupSpec::Lamplighter { q } => (0..*q)
                .map(|c| spec.canonicalize(ModuleElement::Lamps(vec![(0, c)])))
                .collect(),
            GroupSpec::BaumslagSolitar { m } => {
                let h = (*m / 2) as i64;
                (-h..=h)
                    .map(|v| ModuleElement::Adic {
                        num: v.into(),
                        level: 0,
                    })
                    .collect()
            }
            GroupSpec::MatrixModule(a) => {
                let d = a.dim();
                let mut out = vec![spec.zero()];
                for i in 0..d {
                    for s in [1i64, -1] {
                        let mut v = vec![0.into(); d];
                        v[i] = s.into();
                        out.push(ModuleElement::Lattice { level: 0, vec: v });
                    }
                }
                out
            }
        };
        Alphabet::new(spec, letters).expect("standard alphabets are valid")
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn letters(&self) -> &[ModuleElement] {
        &self.letters
    }

    pub fn letter(&self, index: usize) -> &ModuleElement {
        &self.letters[index]
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_symmetrized(&self) -> bool {
        self.symmetrized
    }

    pub fn zero_index(&self) -> usize {
        self.letters
            .iter()
            .position(ModuleElement::is_zero)
            .expect("alphabet contains zero")
    }

    pub fn nonzero_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
    }

    pub fn index_of(&self, x: &ModuleElement) -> Option<usize> {
        self.letters.iter().position(|l| l == x)
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.letters.len() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "letter index {index} out of range for an alphabet of {} letters",
                self.letters.len()
            )))
        }
    }
}

/// A t-word: at most one nonzero letter per power of `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TWord {
    entries: BTreeMap<i64, usize>,
}

impl TWord {
    pub fn new() -> Self {
        TWord::default()
    }

    /// Builds a word from `(power, letter index)` pairs; zero letters are dropped.
    pub fn from_entries<I>(alphabet: &Alphabet, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, usize)>,
    {
        let mut w = TWord::new();
        for (p, idx) in entries {
            alphabet.check_index(idx)?;
            if alphabet.letter(idx).is_zero() {
                continue;
            }
            if w.entries.insert(p, idx).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "power {p} carries two letters in a t-word"
                )));
            }
        }
        Ok(w)
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.entries.iter().map(|(&p, &i)| (p, i))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn imax(&self) -> ExtIndex {
        self.entries
            .keys()
            .next_back()
            .map_or(ExtIndex::NegInf, |&p| ExtIndex::Finite(p))
    }

    pub fn imin(&self) -> ExtIndex {
        self.entries
            .keys()
            .next()
            .map_or(ExtIndex::PosInf, |&p| ExtIndex::Finite(p))
    }

    pub fn to_generalized(&self) -> GeneralizedTWord {
        let mut g = GeneralizedTWord::new();
        for (p, i) in self.entries() {
            g.add_term(p, i, 1);
        }
        g
    }

    pub fn evaluate(&self, alphabet: &Alphabet) -> ModuleElement {
        let spec = alphabet.spec();
        self.entries().fold(spec.zero(), |acc, (p, i)| {
            spec.add(&acc, &spec.shift(alphabet.letter(i), p))
                .expect("alphabet letters share the spec")
        })
    }

    fn sort_key(&self) -> (usize, Vec<(i64, usize)>) {
        (self.len(), self.entries().collect())
    }
}

impl fmt::Display for TWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_generalized().fmt(f)
    }
}

/// An element of the free abelian group on `⊔ᵢ tⁱA`, zero letters omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralizedTWord {
    layers: BTreeMap<i64, BTreeMap<usize, i64>>,
}

impl GeneralizedTWord {
    pub fn new() -> Self {
        GeneralizedTWord::default()
    }

    /// Builds a word from `[power, letter, coefficient]` triples.
    pub fn from_triples<I>(alphabet: &Alphabet, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, usize, i64)>,
    {
        let mut w = GeneralizedTWord::new();
        for (p, idx, c) in triples {
            alphabet.check_index(idx)?;
            if !alphabet.letter(idx).is_zero() {
                w.add_term(p, idx, c);
            }
        }
        Ok(w)
    }

    /// Adds `coefficient·tᵖᵒʷᵉʳ·letter`. Callers must not pass the zero letter.
    pub fn add_term(&mut self, power: i64, letter: usize, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let layer = self.layers.entry(power).or_default();
        let c = layer.entry(letter).or_insert(0);
        *c += coefficient;
        if *c == 0 {
            layer.remove(&letter);
            if layer.is_empty() {
                self.layers.remove(&power);
            }
        }
    }

    /// Formal sum.
    pub fn plus(&self, other: &GeneralizedTWord) -> GeneralizedTWord {
        let mut out = self.clone();
        for (p, i, c) in other.triples() {
            out.add_term(p, i, c);
        }
        out
    }

    pub fn shifted(&self, by: i64) -> GeneralizedTWord {
        GeneralizedTWord {
            layers: self
                .layers
                .iter()
                .map(|(&p, l)| (p + by, l.clone()))
                .collect(),
        }
    }

    pub fn triples(&self) -> impl Iterator<Item = (i64, usize, i64)> + '_ {
        self.layers
            .iter()
            .flat_map(|(&p, l)| l.iter().map(move |(&i, &c)| (p, i, c)))
    }

    /// Word length: `Σ |coefficient|`.
    pub fn len(&self) -> u64 {
        self.triples().map(|(_, _, c)| c.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// Length of the layer at `tᵖᵒʷᵉʳ`.
    pub fn layer_len(&self, power: i64) -> u64 {
        self.layers
            .get(&power)
            .map_or(0, |l| l.values().map(|c| c.unsigned_abs()).sum())
    }

    pub fn powers(&self) -> impl Iterator<Item = i64> + '_ {
        self.layers.keys().copied()
    }

    pub fn imax(&self) -> ExtIndex {
        self.layers
            .keys()
            .next_back()
            .map_or(ExtIndex::NegInf, |&p| ExtIndex::Finite(p))
    }

    pub fn imin(&self) -> ExtIndex {
        self.layers
            .keys()
            .next()
            .map_or(ExtIndex::PosInf, |&p| ExtIndex::Finite(p))
    }

    /// `Σᵢ max(|wᵢ| − n, 0)`.
    pub fn truncated_norm(&self, n: u64) -> u64 {
        self.layers
            .keys()
            .map(|&p| self.layer_len(p).saturating_sub(n))
            .sum()
    }

    /// `π(w) = Σ tⁱ(Σ cₐ·a)`.
    pub fn evaluate(&self, alphabet: &Alphabet) -> ModuleElement {
        let spec = alphabet.spec();
        let mut acc = spec.zero();
        for (&p, layer) in &self.layers {
            let mut sum = spec.zero();
            for (&i, &c) in layer {
                sum = spec
                    .add(&sum, &spec.scale(alphabet.letter(i), c))
                    .expect("alphabet letters share the spec");
            }
            acc = spec
                .add(&acc, &spec.shift(&sum, p))
                .expect("alphabet letters share the spec");
        }
        acc
    }

    /// `Some` when every layer holds a single letter with coefficient one.
    pub fn as_tword(&self) -> Option<TWord> {
        let mut entries = BTreeMap::new();
        for (&p, layer) in &self.layers {
            if layer.len() != 1 {
                return None;
            }
            let (&i, &c) = layer.iter().next().unwrap();
            if c != 1 {
                return None;
            }
            entries.insert(p, i);
        }
        Some(TWord { entries })
    }
}

impl fmt::Display for GeneralizedTWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (n, (p, i, c)) in self.triples().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if c != 1 {
                write!(f, "{c}·")?;
            }
            write!(f, "t^{p}·a{i}")?;
        }
        Ok(())
    }
}

impl Serialize for GeneralizedTWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let triples: Vec<[i64; 3]> = self.triples().map(|(p, i, c)| [p, i as i64, c]).collect();
        triples.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneralizedTWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let triples = Vec::<[i64; 3]>::deserialize(d)?;
        let mut w = GeneralizedTWord::new();
        for [p, i, c] in triples {
            if i < 0 {
                return Err(serde::de::Error::custom("negative letter index"));
            }
            w.add_term(p, i as usize, c);
        }
        Ok(w)
    }
}

impl Serialize for TWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_generalized().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        GeneralizedTWord::deserialize(d)?
            .as_tword()
            .ok_or_else(|| serde::de::Error::custom("not a t-word"))
    }
}

/// One symbol of a spelling over `(A ∪ {t})^±`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpellSymbol {
    /// `tᵉ`
    T(i64),
    /// `aᵖ` for the letter with the given alphabet index.
    Letter { index: usize, power: i64 },
}

/// A word over `(A ∪ {t})^±` spelling out one generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Spelling(pub Vec<SpellSymbol>);

impl Spelling {
    pub fn symbols(&self) -> &[SpellSymbol] {
        &self.0
    }

    pub fn inverse(&self) -> Spelling {
        Spelling(
            self.0
                .iter()
                .rev()
                .map(|s| match *s {
                    SpellSymbol::T(e) => SpellSymbol::T(-e),
                    SpellSymbol::Letter { index, power } => SpellSymbol::Letter {
                        index,
                        power: -power,
                    },
                })
                .collect(),
        )
    }

    pub fn evaluate(&self, alphabet: &Alphabet) -> Result<GroupElement> {
        let spec = alphabet.spec();
        let mut acc = spec.identity();
        for s in &self.0 {
            let factor = match *s {
                SpellSymbol::T(e) => spec.t_power(e),
                SpellSymbol::Letter { index, power } => {
                    alphabet.check_index(index)?;
                    spec.embed(spec.scale(alphabet.letter(index), power))
                }
            };
            acc = spec.mul(&acc, &factor)?;
        }
        Ok(acc)
    }

    /// Parses `t`, `t^-2`, `a1`, `a1^-1`, ... separated by whitespace or `·`.
    pub fn parse(text: &str) -> Result<Spelling> {
        let bad = |tok: &str| Error::InvalidArgument(format!("bad spelling token `{tok}`"));
        let mut out = Vec::new();
        for tok in text
            .split(|c: char| c.is_whitespace() || c == '·' || c == '*')
            .filter(|t| !t.is_empty())
        {
            let (base, power) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<i64>().map_err(|_| bad(tok))?),
                None => (tok, 1),
            };
            if base == "t" {
                out.push(SpellSymbol::T(power));
            } else if let Some(idx) = base.strip_prefix('a') {
                let index = idx.parse::<usize>().map_err(|_| bad(tok))?;
                out.push(SpellSymbol::Letter { index, power });
            } else {
                return Err(bad(tok));
            }
        }
        Ok(Spelling(out))
    }
}

impl fmt::Display for Spelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, s) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            let (base, e) = match *s {
                SpellSymbol::T(e) => ("t".to_string(), e),
                SpellSymbol::Letter { index, power } => (format!("a{index}"), power),
            };
            if e == 1 {
                write!(f, "{base}")?;
            } else {
                write!(f, "{base}^{e}")?;
            }
        }
        Ok(())
    }
}

/// The map `φ`: the total `t`-exponent of a spelled-out word together with
/// the abelianised image of its letters. A letter `a` followed by a suffix of
/// `t`-exponent `s` is recorded as `t⁻ˢa`, so that `π(v)` is the `K`-part of
/// the word's value.
pub fn phi_project<'a, I>(spellings: I) -> (i64, GeneralizedTWord)
where
    I: IntoIterator<Item = &'a Spelling>,
    I::IntoIter: DoubleEndedIterator,
{
    let mut suffix = 0i64;
    let mut v = GeneralizedTWord::new();
    for spelling in spellings.into_iter().rev() {
        for s in spelling.0.iter().rev() {
            match *s {
                SpellSymbol::T(e) => suffix += e,
                SpellSymbol::Letter { index, power } => v.add_term(-suffix, index, power),
            }
        }
    }
    (suffix, v)
}

/// Removes zero-letter terms a caller may have built by hand.
fn strip_zero_letters(alphabet: &Alphabet, w: &GeneralizedTWord) -> GeneralizedTWord {
    let mut out = GeneralizedTWord::new();
    for (p, i, c) in w.triples() {
        if !alphabet.letter(i).is_zero() {
            out.add_term(p, i, c);
        }
    }
    out
}

/// Like [`phi_project`], dropping any zero letters from the image.
pub fn phi_project_clean<'a, I>(alphabet: &Alphabet, spellings: I) -> (i64, GeneralizedTWord)
where
    I: IntoIterator<Item = &'a Spelling>,
    I::IntoIter: DoubleEndedIterator,
{
    let (shift, v) = phi_project(spellings);
    (shift, strip_zero_letters(alphabet, &v))
}

/// A closed search window `[lo, hi]` of powers of `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty window [{lo}, {hi}]")));
        }
        Ok(Window { lo, hi })
    }

    pub fn width(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn contains(&self, p: i64) -> bool {
        self.lo <= p && p <= self.hi
    }

    /// Default window around a known representative: `[imin − 8, imax + 8]`.
    pub fn around(hint: &GeneralizedTWord) -> Self {
        const MARGIN: i64 = 8;
        match (hint.imin().finite(), hint.imax().finite()) {
            (Some(lo), Some(hi)) => Window {
                lo: lo - MARGIN,
                hi: hi + MARGIN,
            },
            _ => Window {
                lo: -MARGIN,
                hi: MARGIN,
            },
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// True when no nonempty sub-collection of the letters of `w` sums to zero,
/// i.e. no proper subword represents the same element.
pub fn is_inclusion_minimal(alphabet: &Alphabet, w: &TWord) -> bool {
    let spec = alphabet.spec();
    let parts: Vec<ModuleElement> = w
        .entries()
        .map(|(p, i)| spec.shift(alphabet.letter(i), p))
        .collect();
    let n = parts.len();
    assert!(n < 26, "inclusion check is exponential in the word length");
    let mut sums = vec![spec.zero(); 1 << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = spec
            .add(&sums[mask & (mask - 1)], &parts[low])
            .expect("same spec");
        if sums[mask].is_zero() {
            return false;
        }
    }
    true
}

/// All inclusion-minimal t-words with support in `window` and at most
/// `length_cap` letters representing `k`, sorted by length and then by
/// `(power, letter)` sequence. Completeness is relative to the window.
pub fn minimal_twords(
    k: &ModuleElement,
    alphabet: &Alphabet,
    window: Window,
    length_cap: u32,
) -> Result<Vec<TWord>> {
    let spec = alphabet.spec();
    spec.check(k)?;
    let mut choices = vec![Choice {
        net: spec.zero(),
        len: 0,
    }];
    let mut letter_of = vec![None];
    for i in alphabet.nonzero_indices() {
        choices.push(Choice {
            net: alphabet.letter(i).clone(),
            len: 1,
        });
        letter_of.push(Some(i));
    }
    let mut found = Vec::new();
    search::enumerate(spec, k, window, length_cap, &choices, None, |path| {
        let word = TWord {
            entries: path
                .iter()
                .enumerate()
                .filter_map(|(j, &c)| letter_of[c].map(|i| (window.lo + j as i64, i)))
                .collect(),
        };
        found.push(word);
    })?;
    found.retain(|w| is_inclusion_minimal(alphabet, w));
    found.sort_by_cached_key(TWord::sort_key);
    Ok(found)
}

/// Window-relative `I_max(k)` and `I_min(k)` together with the minimal length
/// of a t-word representing `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementExtent {
    pub imax: ExtIndex,
    pub imin: ExtIndex,
    pub min_length: usize,
    pub representatives: usize,
    pub window: Window,
}

pub fn element_extent(
    k: &ModuleElement,
    alphabet: &Alphabet,
    window: Window,
    length_cap: u32,
) -> Result<ElementExtent> {
    if k.is_zero() {
        return Ok(ElementExtent {
            imax: ExtIndex::NegInf,
            imin: ExtIndex::PosInf,
            min_length: 0,
            representatives: 1,
            window,
        });
    }
    let words = minimal_twords(k, alphabet, window, length_cap)?;
    let Some(first) = words.first() else {
        return Err(Error::BoundedSearchExhausted(format!(
            "no t-word of length <= {length_cap} in window {window} represents {k}"
        )));
    };
    let min_len = first.len();
    let shortest: Vec<&TWord> = words.iter().take_while(|w| w.len() == min_len).collect();
    Ok(ElementExtent {
        imax: shortest.iter().map(|w| w.imax()).min().unwrap(),
        imin: shortest.iter().map(|w| w.imin()).max().unwrap(),
        min_length: min_len,
        representatives: shortest.len(),
        window,
    })
}

pub fn imax_of_element(
    k: &ModuleElement,
    alphabet: &Alphabet,
    window: Window,
    length_cap: u32,
) -> Result<ExtIndex> {
    element_extent(k, alphabet, window, length_cap).map(|e| e.imax)
}

pub fn imin_of_element(
    k: &ModuleElement,
    alphabet: &Alphabet,
    window: Window,
    length_cap: u32,
) -> Result<ExtIndex> {
    element_extent(k, alphabet, window, length_cap).map(|e| e.imin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;
    use num_bigint::BigInt;

    fn bs3() -> (GroupSpec, Alphabet) {
        let spec = GroupSpec::baumslag_solitar(3).unwrap();
        let a = Alphabet::standard(&spec);
        (spec, a)
    }

    fn int(v: i64) -> ModuleElement {
        ModuleElement::Adic {
            num: BigInt::from(v),
            level: 0,
        }
    }

    /// index of the letter with the given integer value
    fn idx(a: &Alphabet, v: i64) -> usize {
        a.index_of(&int(v)).unwrap()
    }

    #[test]
    fn standard_alphabets() {
        let l2 = GroupSpec::lamplighter(2).unwrap();
        let a = Alphabet::standard(&l2);
        assert_eq!(a.len(), 2);
        assert!(a.is_symmetrized());
        let (_, b) = bs3();
        assert_eq!(b.len(), 3);
        assert!(b.is_symmetrized());
        let spec = GroupSpec::baumslag_solitar(3).unwrap();
        let lopsided = Alphabet::new(&spec, vec![int(1)]).unwrap();
        assert_eq!(lopsided.len(), 2);
        assert!(!lopsided.is_symmetrized());
        assert!(Alphabet::new(&spec, vec![int(1), int(1)]).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let l2 = GroupSpec::lamplighter(2).unwrap();
        let a = Alphabet::standard(&l2);
        let w = GeneralizedTWord::from_triples(&a, [(0, 1, 1), (0, 1, 1)]).unwrap();
        assert!(w.evaluate(&a).is_zero());

        let (_, b) = bs3();
        let one = idx(&b, 1);
        let w = GeneralizedTWord::from_triples(&b, [(1, one, 1), (0, one, 1)]).unwrap();
        assert_eq!(w.evaluate(&b), int(4));

        let g = GroupSpec::matrix_module(IntMatrix::new(2, vec![2, 1, 1, 1]).unwrap()).unwrap();
        let ga = Alphabet::standard(&g);
        let e1 = ga.index_of(&g.parse_element("(1,0)").unwrap()).unwrap();
        let w = GeneralizedTWord::from_triples(&ga, [(1, e1, 1)]).unwrap();
        assert_eq!(w.evaluate(&ga), g.parse_element("(2,1)").unwrap());
    }

    #[test]
    fn extremal_indices() {
        let l2 = GroupSpec::lamplighter(2).unwrap();
        let a = Alphabet::standard(&l2);
        let w = TWord::from_entries(&a, [(3, 1), (-1, 1)]).unwrap();
        assert_eq!(
            (w.imax(), w.imin()),
            (ExtIndex::Finite(3), ExtIndex::Finite(-1))
        );
        let empty = TWord::new();
        assert_eq!(
            (empty.imax(), empty.imin()),
            (ExtIndex::NegInf, ExtIndex::PosInf)
        );
        let w0 = TWord::from_entries(&a, [(0, 1)]).unwrap();
        assert_eq!(
            (w0.imax(), w0.imin()),
            (ExtIndex::Finite(0), ExtIndex::Finite(0))
        );
    }

    #[test]
    fn truncated_norm_examples() {
        let (_, b) = bs3();
        let one = idx(&b, 1);
        let minus = idx(&b, -1);
        let t = TWord::from_entries(&b, [(0, one), (4, minus)]).unwrap();
        assert_eq!(t.to_generalized().truncated_norm(1), 0);
        let w =
            GeneralizedTWord::from_triples(&b, [(0, one, 2), (0, minus, 1), (1, one, 2)]).unwrap();
        assert_eq!(w.layer_len(0), 3);
        assert_eq!(w.layer_len(1), 2);
        assert_eq!(w.truncated_norm(1), 3);
        assert_eq!(GeneralizedTWord::new().truncated_norm(5), 0);
    }

    #[test]
    fn minimal_twords_examples() {
        let l2 = GroupSpec::lamplighter(2).unwrap();
        let a = Alphabet::standard(&l2);
        let k = l2.parse_element("{0:1,3:1}").unwrap();
        let words = minimal_twords(&k, &a, Window::new(-1, 4).unwrap(), 4).unwrap();
        assert_eq!(
            words,
            vec![TWord::from_entries(&a, [(0, 1), (3, 1)]).unwrap()]
        );

        let (spec, b) = bs3();
        let words = minimal_twords(&int(4), &b, Window::new(-2, 4).unwrap(), 4).unwrap();
        let one = idx(&b, 1);
        assert_eq!(
            words,
            vec![TWord::from_entries(&b, [(0, one), (1, one)]).unwrap()]
        );

        let words = minimal_twords(&spec.zero(), &b, Window::new(-2, 4).unwrap(), 4).unwrap();
        assert_eq!(words, vec![TWord::new()]);
    }

    #[test]
    fn extent_examples() {
        let l2 = GroupSpec::lamplighter(2).unwrap();
        let a = Alphabet::standard(&l2);
        let k = l2.parse_element("{2:1}").unwrap();
        let w = Window::new(-3, 5).unwrap();
        assert_eq!(imax_of_element(&k, &a, w, 4).unwrap(), ExtIndex::Finite(2));

        let (spec, b) = bs3();
        let w = Window::new(-2, 6).unwrap();
        assert_eq!(
            imax_of_element(&int(39), &b, w, 5).unwrap(),
            ExtIndex::Finite(3)
        );
        assert_eq!(
            imin_of_element(&int(39), &b, w, 5).unwrap(),
            ExtIndex::Finite(1)
        );
        let z = element_extent(&spec.zero(), &b, w, 5).unwrap();
        assert_eq!((z.imax, z.imin), (ExtIndex::NegInf, ExtIndex::PosInf));

        let err = imax_of_element(&int(39), &b, Window::new(-2, 1).unwrap(), 5).unwrap_err();
        assert!(matches!(err, Error::BoundedSearchExhausted(_)));
    }

    #[test]
    fn phi_examples() {
        let l2 = GroupSpec::lamplighter(2).unwrap();
        let a = Alphabet::standard(&l2);
        let t = Spelling(vec![SpellSymbol::T(1)]);
        let ti = t.inverse();
        let letter = Spelling(vec![SpellSymbol::Letter { index: 1, power: 1 }]);

        let (s, v) = phi_project([&t, &letter, &ti]);
        assert_eq!(s, 0);
        assert_eq!(v, GeneralizedTWord::from_triples(&a, [(1, 1, 1)]).unwrap());

        let (s, v) = phi_project([&letter]);
        assert_eq!(
            (s, v),
            (0, GeneralizedTWord::from_triples(&a, [(0, 1, 1)]).unwrap())
        );

        // t² a t⁻⁴ a t²
        let n = 2;
        let mut word = vec![&t; n];
        word.push(&letter);
        word.extend(std::iter::repeat(&ti).take(2 * n));
        word.push(&letter);
        word.extend(std::iter::repeat(&t).take(n));
        let (s, v) = phi_project(word);
        assert_eq!(s, 0);
        assert_eq!(
            v,
            GeneralizedTWord::from_triples(&a, [(2, 1, 1), (-2, 1, 1)]).unwrap()
        );
    }

    #[test]
    fn spelling_parse_and_inverse() {
        let s = Spelling::parse("t a1 t^2 a0^-1 t").unwrap();
        assert_eq!(s.to_string(), "t a1 t^2 a0^-1 t");
        assert_eq!(s.inverse().inverse(), s);
        assert!(Spelling::parse("x3").is_err());
    }

    #[test]
    fn json_triples() {
        let (_, b) = bs3();
        let w = GeneralizedTWord::from_triples(&b, [(2, 2, -3), (0, 0, 1), (1, 1, 4)]).unwrap();
        let text = serde_json::to_string(&w).unwrap();
        // letter 1 is zero and is dropped
        assert_eq!(text, "[[0,0,1],[2,2,-3]]");
        let back: GeneralizedTWord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);
    }
}
