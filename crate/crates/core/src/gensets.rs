//! Generating sets built from an alphabet, and the digit systems behind the
//! strongly t-logarithmic alphabets of hyperbolic matrix modules.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec, ModuleElement};
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::twords::{phi_project_clean, Alphabet, GeneralizedTWord, SpellSymbol, Spelling};

/// One labelled generator and the word over `(A ∪ {t})^±` it stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub element: GroupElement,
    pub spelling: Spelling,
}

/// A labelled list of group elements used as a Cayley-graph alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingSet {
    alphabet: Alphabet,
    generators: Vec<Generator>,
    closed_under_inverse: bool,
}

#[derive(Serialize, Deserialize)]
struct GeneratorRecord {
    label: String,
    shift: i64,
    k: String,
    spelling: String,
}

/// Merges adjacent powers of `t`, drops zero letters and zero exponents.
fn normalize(alphabet: &Alphabet, spelling: &Spelling) -> Spelling {
    let mut out: Vec<SpellSymbol> = Vec::new();
    for &s in spelling.symbols() {
        match s {
            SpellSymbol::T(0) => {}
            SpellSymbol::Letter { power: 0, .. } => {}
            SpellSymbol::Letter { index, .. }
                if index < alphabet.len() && alphabet.letter(index).is_zero() => {}
            SpellSymbol::T(e) => match out.last_mut() {
                Some(SpellSymbol::T(f)) => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ => out.push(s),
            },
            SpellSymbol::Letter { .. } => out.push(s),
        }
    }
    Spelling(out)
}

impl GeneratingSet {
    /// Builds a set from spelled generators; elements are the spellings'
    /// values. Repeated elements keep their first label.
    pub fn from_spellings(alphabet: &Alphabet, spelled: Vec<(String, Spelling)>) -> Result<Self> {
        let spec = alphabet.spec();
        let mut set = GeneratingSet {
            alphabet: alphabet.clone(),
            generators: Vec::new(),
            closed_under_inverse: false,
        };
        for (label, spelling) in spelled {
            let spelling = normalize(alphabet, &spelling);
            let element = spelling
                .evaluate(alphabet)
                .map_err(|e| Error::MalformedSpelling {
                    label: label.clone(),
                    reason: e.to_string(),
                })?;
            if element == spec.identity() {
                return Err(Error::MalformedSpelling {
                    label,
                    reason: "spells the identity".into(),
                });
            }
            set.push(Generator {
                label,
                element,
                spelling,
            })?;
        }
        set.closed_under_inverse = set.is_closed();
        Ok(set)
    }

    /// Builds a set from explicit elements, checking each against its spelling.
    pub fn from_generators(alphabet: &Alphabet, generators: Vec<Generator>) -> Result<Self> {
        let mut set = GeneratingSet {
            alphabet: alphabet.clone(),
            generators: Vec::new(),
            closed_under_inverse: false,
        };
        for g in generators {
            let value = g
                .spelling
                .evaluate(alphabet)
                .map_err(|e| Error::MalformedSpelling {
                    label: g.label.clone(),
                    reason: e.to_string(),
                })?;
            if value != g.element {
                return Err(Error::MalformedSpelling {
                    label: g.label.clone(),
                    reason: format!("spelling evaluates to {value}, not {}", g.element),
                });
            }
            if value == alphabet.spec().identity() {
                return Err(Error::MalformedSpelling {
                    label: g.label,
                    reason: "spells the identity".into(),
                });
            }
            set.push(g)?;
        }
        set.closed_under_inverse = set.is_closed();
        Ok(set)
    }

    fn push(&mut self, g: Generator) -> Result<()> {
        if self.generators.iter().any(|h| h.element == g.element) {
            return Ok(());
        }
        if self.generators.iter().any(|h| h.label == g.label) {
            return Err(Error::MalformedSpelling {
                label: g.label,
                reason: "duplicate label".into(),
            });
        }
        self.generators.push(g);
        Ok(())
    }

    fn is_closed(&self) -> bool {
        let spec = self.alphabet.spec();
        self.generators.iter().all(|g| {
            let inv = spec.inverse(&g.element);
            self.generators.iter().any(|h| h.element == inv)
        })
    }

    /// Appends the inverse of every generator whose inverse is missing.
    pub fn closed(mut self) -> Self {
        let spec = self.alphabet.spec().clone();
        let missing: Vec<Generator> = self
            .generators
            .iter()
            .filter_map(|g| {
                let inv = spec.inverse(&g.element);
                if self.generators.iter().any(|h| h.element == inv) {
                    return None;
                }
                let spelling = g.spelling.inverse();
                let label = match g.spelling.symbols() {
                    [_] => spelling.to_string(),
                    _ => format!("({})^-1", g.label),
                };
                Some(Generator {
                    label,
                    element: inv,
                    spelling,
                })
            })
            .collect();
        for g in missing {
            // labels built from distinct spellings are distinct
            let _ = self.push(g);
        }
        self.closed_under_inverse = true;
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn spec(&self) -> &GroupSpec {
        self.alphabet.spec()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_closed_under_inverse(&self) -> bool {
        self.closed_under_inverse
    }

    pub fn find(&self, label: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.label == label)
    }

    pub fn position_of(&self, element: &GroupElement) -> Option<usize> {
        self.generators.iter().position(|g| g.element == *element)
    }

    /// `(label, element)` pairs in order, the input of a ball search.
    pub fn labelled_elements(&self) -> Vec<(String, GroupElement)> {
        self.generators
            .iter()
            .map(|g| (g.label.clone(), g.element.clone()))
            .collect()
    }

    /// A generator with the largest `t`-exponent (first one on ties).
    pub fn max_shift_generator(&self) -> &Generator {
        let best = self
            .generators
            .iter()
            .map(|g| g.element.shift)
            .max()
            .unwrap();
        self.generators
            .iter()
            .find(|g| g.element.shift == best)
            .unwrap()
    }

    /// `φ` of a word in this generating set (indices into the list).
    pub fn phi_project(&self, word: &[usize]) -> Result<(i64, GeneralizedTWord)> {
        let spellings = word
            .iter()
            .map(|&j| {
                self.generators
                    .get(j)
                    .map(|g| &g.spelling)
                    .ok_or_else(|| Error::InvalidArgument(format!("no generator {j}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(phi_project_clean(&self.alphabet, spellings))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let records: Vec<GeneratorRecord> = self
            .generators
            .iter()
            .map(|g| GeneratorRecord {
                label: g.label.clone(),
                shift: g.element.shift,
                k: g.element.k.to_string(),
                spelling: g.spelling.to_string(),
            })
            .collect();
        serde_json::to_value(records).expect("plain records")
    }

    pub fn from_json(alphabet: &Alphabet, value: &serde_json::Value) -> Result<Self> {
        let records: Vec<GeneratorRecord> = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidArgument(format!("generating set json: {e}")))?;
        let spec = alphabet.spec();
        let generators = records
            .into_iter()
            .map(|r| {
                Ok(Generator {
                    element: GroupElement {
                        shift: r.shift,
                        k: spec.parse_element(&r.k)?,
                    },
                    spelling: Spelling::parse(&r.spelling)?,
                    label: r.label,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        GeneratingSet::from_generators(alphabet, generators)
    }
}

fn require_symmetrized(alphabet: &Alphabet) -> Result<()> {
    if !alphabet.is_symmetrized() {
        return Err(Error::InvalidAlphabet("alphabet is not symmetrized".into()));
    }
    if alphabet.nonzero_indices().next().is_none() {
        return Err(Error::InvalidAlphabet(
            "alphabet has no nonzero letter".into(),
        ));
    }
    Ok(())
}

fn letter(index: usize) -> SpellSymbol {
    SpellSymbol::Letter { index, power: 1 }
}

fn spelled(symbols: Vec<SpellSymbol>) -> (String, Spelling) {
    let s = Spelling(symbols);
    (s.to_string(), s)
}

/// `{ta : a ∈ A} ∪ A`, closed under inversion (`t` arises from `a = 0`).
pub fn build_unbound_gens(alphabet: &Alphabet) -> Result<GeneratingSet> {
    require_symmetrized(alphabet)?;
    let mut list = vec![spelled(vec![SpellSymbol::T(1)])];
    for i in alphabet.nonzero_indices() {
        list.push(spelled(vec![SpellSymbol::T(1), letter(i)]));
    }
    for i in alphabet.nonzero_indices() {
        list.push(spelled(vec![letter(i)]));
    }
    Ok(GeneratingSet::from_spellings(alphabet, list)?.closed())
}

/// `{t a₁ t² a₂ t : a₁, a₂ ∈ A} ∪ A ∪ {t}`, closed under inversion.
pub fn build_bound_gens(alphabet: &Alphabet) -> Result<GeneratingSet> {
    require_symmetrized(alphabet)?;
    let mut list = Vec::new();
    for i in 0..alphabet.len() {
        for j in 0..alphabet.len() {
            let s = normalize(
                alphabet,
                &Spelling(vec![
                    SpellSymbol::T(1),
                    letter(i),
                    SpellSymbol::T(2),
                    letter(j),
                    SpellSymbol::T(1),
                ]),
            );
            list.push((s.to_string(), s));
        }
    }
    for i in alphabet.nonzero_indices() {
        list.push(spelled(vec![letter(i)]));
    }
    list.push(spelled(vec![SpellSymbol::T(1)]));
    Ok(GeneratingSet::from_spellings(alphabet, list)?.closed())
}

/// `{t} ∪ A∖{0}`, closed under inversion.
pub fn build_standard_gens(alphabet: &Alphabet) -> Result<GeneratingSet> {
    if alphabet.nonzero_indices().next().is_none() {
        return Err(Error::InvalidAlphabet(
            "alphabet has no nonzero letter".into(),
        ));
    }
    let mut list = vec![spelled(vec![SpellSymbol::T(1)])];
    for i in alphabet.nonzero_indices() {
        list.push(spelled(vec![letter(i)]));
    }
    Ok(GeneratingSet::from_spellings(alphabet, list)?.closed())
}

/// Generators given as spelling strings such as `"t a1 t^-1"`, closed under
/// inversion.
pub fn build_explicit_gens(alphabet: &Alphabet, spellings: &[String]) -> Result<GeneratingSet> {
    if spellings.is_empty() {
        return Err(Error::InvalidArgument(
            "empty explicit generating set".into(),
        ));
    }
    let list = spellings
        .iter()
        .map(|text| {
            Spelling::parse(text)
                .map(|s| (text.trim().to_string(), s))
                .map_err(|e| Error::MalformedSpelling {
                    label: text.clone(),
                    reason: e.to_string(),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratingSet::from_spellings(alphabet, list)?.closed())
}

/// Default number of greedy steps allowed per expansion.
pub const DEFAULT_EXPANSION_BUDGET: usize = 256;

/// Largest pre-shift tried by [`DigitSystem::expand`].
pub const MAX_PRESHIFT: u32 = 16;

/// Number of random deeper elements tested by [`find_digit_bound`].
pub const RANDOM_DIGIT_TESTS: usize = 1000;

const DIGIT_SEED: u64 = 0x5eed_d161_7500_0001;

/// Digit expansions `k = Σ Tⁱ dᵢ` over a box alphabet of a matrix module
/// (or of `BS(1,m)`, treated as the module of the `1×1` matrix `[m]`).
#[derive(Clone, Debug)]
pub struct DigitSystem {
    spec: GroupSpec,
    matrix: IntMatrix,
    adjugate: Vec<i128>,
    det: i128,
    alphabet: Alphabet,
    digits: Vec<Vec<i64>>,
    coset_modulus: Vec<i128>,
    coset_left: Vec<i128>,
    digit_cosets: Vec<Vec<i128>>,
}

/// A finished expansion: `digits[j]` multiplies `T^(lowest_power + j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DigitExpansion {
    pub lowest_power: i64,
    pub digits: Vec<usize>,
}

impl DigitExpansion {
    /// The expansion as a word, zero digits omitted.
    pub fn as_tword(&self, alphabet: &Alphabet) -> GeneralizedTWord {
        let mut w = GeneralizedTWord::new();
        for (j, &d) in self.digits.iter().enumerate() {
            if alphabet.letter(d).is_zero() {
                continue;
            }
            w.add_term(self.lowest_power + j as i64, d, 1);
        }
        w
    }
}

fn matrix_of(spec: &GroupSpec) -> Result<IntMatrix> {
    match spec {
        GroupSpec::MatrixModule(a) => Ok(a.matrix().clone()),
        GroupSpec::BaumslagSolitar { m } => Ok(IntMatrix::new(1, vec![*m as i64]).unwrap()),
        GroupSpec::Lamplighter { .. } => Err(Error::InvalidSpec(
            "digit systems need a matrix or Baumslag-Solitar module".into(),
        )),
    }
}

/// `(level, vector)` view of a module element.
fn lattice_view(x: &ModuleElement) -> (u32, Vec<BigInt>) {
    match x {
        ModuleElement::Lattice { level, vec } => (*level, vec.clone()),
        ModuleElement::Adic { num, level } => (*level, vec![num.clone()]),
        ModuleElement::Lamps(_) => unreachable!("rejected in matrix_of"),
    }
}

fn element_from_vec(spec: &GroupSpec, v: &[i64]) -> ModuleElement {
    let raw = match spec {
        GroupSpec::BaumslagSolitar { .. } => ModuleElement::Adic {
            num: v[0].into(),
            level: 0,
        },
        _ => ModuleElement::Lattice {
            level: 0,
            vec: v.iter().map(|&x| x.into()).collect(),
        },
    };
    spec.canonicalize(raw)
}

fn sup_norm(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero)
}

/// Vectors of `{-r..r}^d` ordered by sup norm, then coordinatewise by
/// absolute value with positive entries first.
fn box_vectors(d: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-r..=r).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    let key = |v: &Vec<i64>| {
        (
            v.iter().map(|x| x.abs()).max().unwrap_or(0),
            v.iter().map(|&x| (x.abs(), x < 0)).collect::<Vec<_>>(),
        )
    };
    out.sort_by_cached_key(key);
    out
}

impl DigitSystem {
    /// The box alphabet `{Σ iₐ eₐ : |iₐ| < n}` for the standard basis.
    pub fn new(spec: &GroupSpec, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "digit bound must be positive".into(),
            ));
        }
        let matrix = matrix_of(spec)?;
        let d = matrix.dim();
        let mut digits: Vec<Vec<i64>> = box_vectors(d, n as i64 - 1);
        digits.sort();
        let letters = digits.iter().map(|v| element_from_vec(spec, v)).collect();
        let alphabet = Alphabet::new(spec, letters)?;
        let digits = alphabet
            .letters()
            .iter()
            .map(|x| {
                lattice_view(x)
                    .1
                    .iter()
                    .map(|v| i64::try_from(v).expect("small box"))
                    .collect()
            })
            .collect();
        let snf = smith_normal_form(&matrix);
        let mut sys = DigitSystem {
            spec: spec.clone(),
            adjugate: matrix.adjugate(),
            det: matrix.det(),
            matrix,
            alphabet,
            digits,
            coset_modulus: snf.diag,
            coset_left: snf.left,
            digit_cosets: Vec::new(),
        };
        sys.digit_cosets = sys
            .digits
            .iter()
            .map(|v| sys.coset_of(&v.iter().map(|&x| x.into()).collect::<Vec<BigInt>>()))
            .collect();
        Ok(sys)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Coset of `v` in `L/TL`, read off the Smith form.
    fn coset_of(&self, v: &[BigInt]) -> Vec<i128> {
        let d = self.matrix.dim();
        (0..d)
            .map(|i| {
                let row: BigInt = (0..d)
                    .map(|j| BigInt::from(self.coset_left[i * d + j]) * &v[j])
                    .sum();
                let m = self.coset_modulus[i];
                if m == 0 {
                    return i128::try_from(row).unwrap_or(i128::MAX);
                }
                let r: BigInt = ((row % m) + m) % m;
                i128::try_from(r).expect("reduced modulo a small modulus")
            })
            .collect()
    }

    /// Number of cosets of `TL` in `L`.
    pub fn coset_count(&self) -> u128 {
        self.det.unsigned_abs()
    }

    /// True when every coset of `TL` contains a digit.
    pub fn covers_cosets(&self) -> bool {
        let mut seen: Vec<&Vec<i128>> = self.digit_cosets.iter().collect();
        seen.sort();
        seen.dedup();
        seen.len() as u128 == self.coset_count()
    }

    /// `T⁻¹·v` when it is integral.
    fn apply_inverse(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let d = self.matrix.dim();
        let det = BigInt::from(self.det);
        (0..d)
            .map(|i| {
                let s: BigInt = (0..d)
                    .map(|j| BigInt::from(self.adjugate[i * d + j]) * &v[j])
                    .sum();
                if (&s % &det).is_zero() {
                    Some(s / &det)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Greedy expansion of a lattice vector: among digits `a` with
    /// `v − a ∈ TL`, take the one whose next residual `T⁻¹(v − a)` has the
    /// smallest sup norm, then the smallest digit by sup norm, then the
    /// lexicographically first.
    fn expand_vector(&self, v: &[BigInt], budget: usize) -> Option<Vec<usize>> {
        let mut residual = v.to_vec();
        let mut out = Vec::new();
        let mut visited = HashSet::new();
        for _ in 0..budget {
            if residual.iter().all(Zero::is_zero) {
                return Some(out);
            }
            if !visited.insert(residual.clone()) {
                return None;
            }
            let coset = self.coset_of(&residual);
            let mut best: Option<(BigInt, usize, Vec<BigInt>)> = None;
            for (i, digit) in self.digits.iter().enumerate() {
                if self.digit_cosets[i] != coset {
                    continue;
                }
                let diff: Vec<BigInt> = residual
                    .iter()
                    .zip(digit)
                    .map(|(r, &x)| r - BigInt::from(x))
                    .collect();
                let Some(next) = self.apply_inverse(&diff) else {
                    continue;
                };
                let norm = sup_norm(&next);
                let better = match &best {
                    None => true,
                    Some((bn, bi, _)) => match norm.cmp(bn) {
                        Ordering::Less => true,
                        Ordering::Greater => false,
                        Ordering::Equal => {
                            let a = digit.iter().map(|x| x.abs()).max();
                            let b = self.digits[*bi].iter().map(|x| x.abs()).max();
                            (a, digit) < (b, &self.digits[*bi])
                        }
                    },
                };
                if better {
                    best = Some((norm, i, next));
                }
            }
            let (_, i, next) = best?;
            out.push(i);
            residual = next;
        }
        residual.iter().all(Zero::is_zero).then_some(out)
    }

    /// Greedy expansion of `k`, or `None` when the budget runs out.
    ///
    /// One-sided expansions `Σ_{i≥0} Tⁱdᵢ` cannot reach elements with a large
    /// component along a contracting eigendirection of `T`, so `Tʲ·v` is
    /// expanded for the least pre-shift `j ≤ MAX_PRESHIFT` that succeeds.
    /// Each attempt gets `budget` steps and stops early on a repeated residual.
    pub fn expand(&self, k: &ModuleElement, budget: usize) -> Result<Option<DigitExpansion>> {
        self.spec.check(k)?;
        let (level, mut v) = lattice_view(k);
        for j in 0..=MAX_PRESHIFT {
            if let Some(digits) = self.expand_vector(&v, budget) {
                return Ok(Some(DigitExpansion {
                    lowest_power: -(level as i64) - j as i64,
                    digits,
                }));
            }
            v = self.matrix.mul_vec(&v);
        }
        Ok(None)
    }

    /// `Σ Tⁱ dᵢ` computed with the group arithmetic.
    pub fn evaluate(&self, e: &DigitExpansion) -> ModuleElement {
        e.as_tword(&self.alphabet).evaluate(&self.alphabet)
    }
}

/// Outcome of the completeness test for one candidate bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DigitCheck {
    pub n: u32,
    pub pass: bool,
    pub cosets: u128,
    pub cosets_covered: bool,
    pub tested: usize,
    /// First element that could not be expanded, in text syntax.
    pub witness: Option<String>,
    pub reason: Option<String>,
}

/// Tests the box alphabet with bound `n`: coset coverage of `L/TL`, then a
/// round-tripping greedy expansion of every vector in `{-3n..3n}^d` and of
/// a fixed pseudo-random sample of deeper elements.
pub fn find_digit_bound(
    spec: &GroupSpec,
    candidate_n: u32,
    test_budget: usize,
) -> Result<DigitCheck> {
    let sys = DigitSystem::new(spec, candidate_n)?;
    let d = sys.matrix.dim();
    let beta = 3 * candidate_n as i64;
    let mut check = DigitCheck {
        n: candidate_n,
        pass: false,
        cosets: sys.coset_count(),
        cosets_covered: sys.covers_cosets(),
        tested: 0,
        witness: None,
        reason: None,
    };
    let tests = box_vectors(d, beta);
    if !check.cosets_covered {
        let witness = tests
            .iter()
            .map(|v| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
            .find(|v| !sys.digit_cosets.contains(&sys.coset_of(v)))
            .expect("an uncovered coset meets the test box");
        let k = element_from_vec(
            spec,
            &witness
                .iter()
                .map(|x| i64::try_from(x).unwrap())
                .collect::<Vec<_>>(),
        );
        check.witness = Some(k.to_string());
        check.reason = Some("some coset of TL contains no digit".into());
        return Ok(check);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DIGIT_SEED);
    let box_elements = tests.iter().map(|v| element_from_vec(spec, v));
    let random: Vec<ModuleElement> = (0..RANDOM_DIGIT_TESTS)
        .map(|_| {
            let level = rng.gen_range(0..=3u32);
            let vec: Vec<BigInt> = (0..d).map(|_| rng.gen_range(-beta..=beta).into()).collect();
            let raw = match spec {
                GroupSpec::BaumslagSolitar { .. } => ModuleElement::Adic {
                    num: vec[0].clone(),
                    level,
                },
                _ => ModuleElement::Lattice { level, vec },
            };
            spec.canonicalize(raw)
        })
        .collect();
    for k in box_elements.chain(random) {
        check.tested += 1;
        match sys.expand(&k, test_budget)? {
            Some(e) if sys.evaluate(&e) == k => {}
            Some(_) => {
                check.witness = Some(k.to_string());
                check.reason = Some("expansion does not round-trip".into());
                return Ok(check);
            }
            None => {
                check.witness = Some(k.to_string());
                check.reason = Some(format!("no expansion within {test_budget} steps"));
                return Ok(check);
            }
        }
    }
    check.pass = true;
    Ok(check)
}

/// The smallest box alphabet with `2 ≤ n ≤ max_bound` passing
/// [`find_digit_bound`], with the checks of every tried bound.
pub fn build_strongly_tlog(
    spec: &GroupSpec,
    max_bound: u32,
    test_budget: usize,
) -> Result<(Alphabet, u32, Vec<DigitCheck>)> {
    if max_bound < 2 {
        return Err(Error::InvalidArgument(
            "max_bound must be at least 2".into(),
        ));
    }
    let mut tried = Vec::new();
    for n in 2..=max_bound {
        let check = find_digit_bound(spec, n, test_budget)?;
        let pass = check.pass;
        tried.push(check);
        if pass {
            let sys = DigitSystem::new(spec, n)?;
            return Ok((sys.alphabet, n, tried));
        }
    }
    Err(Error::BoundSearchExhausted { max_bound })
}
