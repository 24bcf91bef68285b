//! Explicit witness families: deep pockets, almost-convexity failures and the
//! `kₙ` elements of Baumslag-Solitar groups.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::cayley::{BallIndex, Depth};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec, ModuleElement};
use crate::search::{self, Choice};
use crate::twords::{Alphabet, GeneralizedTWord, Window};

/// `tⁿ a t⁻²ⁿ a tⁿ`, which lies in `K` and equals `Tⁿa + T⁻ⁿa`.
pub fn deep_element(spec: &GroupSpec, n: u32, a: &ModuleElement) -> Result<GroupElement> {
    spec.check(a)?;
    if a.is_zero() {
        return Err(Error::InvalidArgument("the letter must be nonzero".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let n = n as i64;
    let k = spec.add(&spec.shift(a, n), &spec.shift(a, -n))?;
    Ok(spec.embed(k))
}

/// The five-factor product defining [`deep_element`].
pub fn deep_element_product(spec: &GroupSpec, n: u32, a: &ModuleElement) -> Result<GroupElement> {
    let n = n as i64;
    let x = spec.embed(a.clone());
    spec.product(&[
        spec.t_power(n),
        x.clone(),
        spec.t_power(-2 * n),
        x,
        spec.t_power(n),
    ])
}

/// `g_n(i) = s^(n+i) a s^(-2n) a sⁿ`.
pub fn acx_word(
    spec: &GroupSpec,
    n: u32,
    i: i64,
    s: &GroupElement,
    a: &ModuleElement,
) -> Result<GroupElement> {
    let n = n as i64;
    let x = spec.embed(a.clone());
    spec.product(&[
        spec.pow(s, n + i)?,
        x.clone(),
        spec.pow(s, -2 * n)?,
        x,
        spec.pow(s, n)?,
    ])
}

/// `(h⁺, h⁻) = (g_n(J), g_n(−J))`, checked against `h⁺(h⁻)⁻¹ = s^(2J)`.
pub fn acx_pair(
    spec: &GroupSpec,
    n: u32,
    j: u32,
    s: &GroupElement,
    a: &ModuleElement,
) -> Result<(GroupElement, GroupElement)> {
    if j > n {
        return Err(Error::InvalidArgument(format!("J = {j} exceeds n = {n}")));
    }
    let plus = acx_word(spec, n, j as i64, s, a)?;
    let minus = acx_word(spec, n, -(j as i64), s, a)?;
    let quotient = spec.mul(&plus, &spec.inverse(&minus))?;
    if quotient != spec.pow(s, 2 * j as i64)? {
        return Err(Error::InvalidArgument(
            "witness pair identity failed; is `a` an element of K?".into(),
        ));
    }
    Ok((plus, minus))
}

/// `kₙ = Σ_{i=1}^{n-1} mⁱ`.
pub fn bs_kn(spec: &GroupSpec, n: u32) -> Result<ModuleElement> {
    let GroupSpec::BaumslagSolitar { m } = spec else {
        return Err(Error::InvalidSpec("kₙ is defined for BS(1,m)".into()));
    };
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    let mb = BigInt::from(*m);
    let num: BigInt = (1..n).map(|i| mb.pow(i)).sum();
    Ok(ModuleElement::Adic { num, level: 0 })
}

/// Parameters of the `kₙ` inequality `|Nₙ(w)| ≤ I·(l(w) − n) + J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KnParams {
    pub n: u32,
    pub i: i64,
    pub j: i64,
    pub length_cap: u32,
    pub window: Window,
    pub node_budget: Option<u64>,
}

/// The generalized word maximizing `|Nₙ(w)| − I·(l(w) − n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnWitness {
    pub word: GeneralizedTWord,
    pub length: u64,
    pub missing_layers: Vec<i64>,
    /// `|Nₙ(w)| − I·(l(w) − n)`; the inequality holds iff this is `≤ J`.
    pub excess: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnReport {
    pub params: KnParams,
    pub pass: bool,
    /// Exhaustive within window and cap (no node budget hit).
    pub complete: bool,
    pub words: u128,
    pub layer_patterns: u64,
    pub nodes: u64,
    pub worst: Option<KnWitness>,
}

/// Integer vectors over `count` coordinates with `Σ|cᵢ| = len`.
fn coefficient_vectors(count: usize, len: u32) -> Vec<Vec<i64>> {
    if count == 0 {
        return if len == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in -(len as i64)..=len as i64 {
        let rest = len - first.unsigned_abs() as u32;
        for mut tail in coefficient_vectors(count - 1, rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Enumerates every generalized t-word over the nonzero letters with
/// support in the window, length at most the cap and value `k`, and tests
/// `|Nₙ(w)| ≤ I·(l(w) − n) + J` where `Nₙ(w)` lists the `0 < i < n` whose
/// layer is empty.
pub fn check_kn_condition(
    alphabet: &Alphabet,
    k: &ModuleElement,
    params: KnParams,
) -> Result<KnReport> {
    let spec = alphabet.spec();
    let letters: Vec<usize> = alphabet.nonzero_indices().collect();
    // layer options grouped by (net value, length), counted with multiplicity
    let mut groups: Vec<(Choice, u128, Vec<i64>)> = Vec::new();
    for len in 0..=params.length_cap {
        let mut by_net: BTreeMap<ModuleElement, (u128, Vec<i64>)> = BTreeMap::new();
        for coeffs in coefficient_vectors(letters.len(), len) {
            let mut net = spec.zero();
            for (c, &l) in coeffs.iter().zip(&letters) {
                net = spec.add(&net, &spec.scale(alphabet.letter(l), *c))?;
            }
            by_net
                .entry(net)
                .and_modify(|e| e.0 += 1)
                .or_insert((1, coeffs));
        }
        for (net, (mult, rep)) in by_net {
            groups.push((Choice { net, len }, mult, rep));
        }
    }
    let choices: Vec<Choice> = groups.iter().map(|g| g.0.clone()).collect();
    let window = params.window;
    let inner: Vec<usize> = (1..params.n as i64)
        .filter(|p| window.contains(*p))
        .map(|p| (p - window.lo) as usize)
        .collect();
    let outside_inner = (1..params.n as i64)
        .filter(|p| !window.contains(*p))
        .count();

    let mut words = 0u128;
    let mut worst: Option<(i64, Vec<usize>)> = None;
    let stats = search::enumerate(
        spec,
        k,
        window,
        params.length_cap,
        &choices,
        params.node_budget,
        |path| {
            let mult = path
                .iter()
                .fold(1u128, |acc, &c| acc.saturating_mul(groups[c].1));
            words = words.saturating_add(mult);
            let length: i64 = path.iter().map(|&c| groups[c].0.len as i64).sum();
            let missing = inner
                .iter()
                .filter(|&&off| groups[path[off]].0.len == 0)
                .count()
                + outside_inner;
            let excess = missing as i64 - params.i * (length - params.n as i64);
            if worst.as_ref().is_none_or(|(e, _)| excess > *e) {
                worst = Some((excess, path.to_vec()));
            }
        },
    )?;
    let worst = worst.map(|(excess, path)| {
        let mut word = GeneralizedTWord::new();
        for (off, &c) in path.iter().enumerate() {
            for (coef, &l) in groups[c].2.iter().zip(&letters) {
                word.add_term(window.lo + off as i64, l, *coef);
            }
        }
        let missing_layers = (1..params.n as i64)
            .filter(|&p| word.layer_len(p) == 0)
            .collect();
        KnWitness {
            length: word.len(),
            word,
            missing_layers,
            excess,
        }
    });
    Ok(KnReport {
        params,
        pass: worst.as_ref().is_none_or(|w| w.excess <= params.j),
        complete: stats.complete,
        words,
        layer_patterns: stats.leaves,
        nodes: stats.nodes,
        worst,
    })
}

/// Measurements of one witness family against a ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub family: String,
    pub n: u32,
    pub params: BTreeMap<String, i64>,
    /// `(name, element in text form, base64 blob)`
    pub elements: Vec<(String, String, String)>,
    pub measured: BTreeMap<String, i64>,
    pub censored: BTreeMap<String, bool>,
}

impl WitnessReport {
    fn new(family: &str, n: u32) -> Self {
        WitnessReport {
            family: family.into(),
            n,
            params: BTreeMap::new(),
            elements: Vec::new(),
            measured: BTreeMap::new(),
            censored: BTreeMap::new(),
        }
    }

    fn element(&mut self, name: &str, g: &GroupElement) {
        self.elements
            .push((name.into(), g.to_string(), g.to_blob()));
    }

    fn depth(&mut self, name: &str, d: Depth) {
        self.measured.insert(name.into(), d.lower_bound() as i64);
        self.censored
            .insert(name.into(), matches!(d, Depth::Censored { .. }));
    }
}

fn length_in(ball: &BallIndex<GroupSpec>, g: &GroupElement) -> Result<u32> {
    ball.word_length(g).ok_or(Error::InsufficientRadius {
        required: ball.radius() + 1,
        available: ball.radius(),
    })
}

/// `|g|` and the depth of `deep_element(n)`.
pub fn measure_deep(
    ball: &BallIndex<GroupSpec>,
    n: u32,
    a: &ModuleElement,
    depth_cap: u32,
) -> Result<WitnessReport> {
    let spec = ball.ops();
    let g = deep_element(spec, n, a)?;
    let mut report = WitnessReport::new("deep", n);
    report.params.insert("depth_cap".into(), depth_cap as i64);
    report.params.insert("radius".into(), ball.radius() as i64);
    report.element("g", &g);
    report
        .measured
        .insert("word_length".into(), length_in(ball, &g)? as i64);
    report.depth("depth", ball.depth(&g, depth_cap)?);
    Ok(report)
}

/// Word lengths of `h±` and their interior distance on the larger sphere.
pub fn measure_acx(
    ball: &BallIndex<GroupSpec>,
    n: u32,
    j: u32,
    s: &GroupElement,
    a: &ModuleElement,
) -> Result<WitnessReport> {
    let spec = ball.ops();
    let (plus, minus) = acx_pair(spec, n, j, s, a)?;
    let mut report = WitnessReport::new("acx", n);
    report.params.insert("J".into(), j as i64);
    report.params.insert("radius".into(), ball.radius() as i64);
    report.element("h_plus", &plus);
    report.element("h_minus", &minus);
    let lp = length_in(ball, &plus)?;
    let lm = length_in(ball, &minus)?;
    let r = lp.max(lm);
    report.measured.insert("length_plus".into(), lp as i64);
    report.measured.insert("length_minus".into(), lm as i64);
    report.measured.insert("level".into(), r as i64);
    match ball.interior_distance(&plus, &minus, r)? {
        Some(d) => {
            report.measured.insert("interior_distance".into(), d as i64);
            report.censored.insert("interior_distance".into(), false);
        }
        None => {
            report.censored.insert("interior_distance".into(), true);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::BallLimits;
    use crate::gensets::build_unbound_gens;
    use crate::twords::{element_extent, ExtIndex};

    #[test]
    fn deep_elements() {
        let l2 = GroupSpec::lamplighter(2).unwrap();
        let a = l2.parse_element("{0:1}").unwrap();
        let g = deep_element(&l2, 2, &a).unwrap();
        assert_eq!(g.shift, 0);
        assert_eq!(g.k, l2.parse_element("{-2:1,2:1}").unwrap());
        for n in 1..=10 {
            assert_eq!(
                deep_element(&l2, n, &a).unwrap(),
                deep_element_product(&l2, n, &a).unwrap()
            );
        }
        let bs = GroupSpec::baumslag_solitar(3).unwrap();
        let one = bs.parse_element("1").unwrap();
        assert_eq!(
            deep_element(&bs, 1, &one).unwrap().k,
            bs.parse_element("10@1").unwrap()
        );
        assert!(deep_element(&bs, 1, &bs.zero()).is_err());
    }

    #[test]
    fn acx_pairs() {
        let l2 = GroupSpec::lamplighter(2).unwrap();
        let alpha = Alphabet::standard(&l2);
        let gens = build_unbound_gens(&alpha).unwrap();
        let s = gens.max_shift_generator().element.clone();
        let a = l2.parse_element("{0:1}").unwrap();
        let (p, m) = acx_pair(&l2, 3, 1, &s, &a).unwrap();
        assert_eq!(l2.mul(&p, &l2.inverse(&m)).unwrap(), l2.pow(&s, 2).unwrap());
        assert_eq!(p.shift, s.shift);
        let (p0, m0) = acx_pair(&l2, 3, 0, &s, &a).unwrap();
        assert_eq!(p0, m0);
        assert!(acx_pair(&l2, 1, 2, &s, &a).is_err());
    }

    #[test]
    fn kn_values() {
        let bs = GroupSpec::baumslag_solitar(3).unwrap();
        assert_eq!(bs_kn(&bs, 4).unwrap(), bs.parse_element("39").unwrap());
        assert_eq!(bs_kn(&bs, 2).unwrap(), bs.parse_element("3").unwrap());
        let alpha = Alphabet::standard(&bs);
        let k = bs_kn(&bs, 4).unwrap();
        let e = element_extent(&k, &alpha, Window::new(-2, 6).unwrap(), 7).unwrap();
        assert_eq!((e.imin, e.imax), (ExtIndex::Finite(1), ExtIndex::Finite(3)));
    }

    #[test]
    fn kn_condition_small() {
        let bs = GroupSpec::baumslag_solitar(3).unwrap();
        let alpha = Alphabet::standard(&bs);
        let k = bs_kn(&bs, 3).unwrap();
        let params = KnParams {
            n: 3,
            i: 1,
            j: 1,
            length_cap: 5,
            window: Window::new(-1, 4).unwrap(),
            node_budget: None,
        };
        let report = check_kn_condition(&alpha, &k, params).unwrap();
        assert!(report.complete);
        assert!(report.pass);
        let worst = report.worst.unwrap();
        assert_eq!(worst.word.evaluate(&alpha), k);
        // the balanced ternary word 3 + 9 has no missing layer in (0, 3)
        assert!(report.words >= 1);
    }

    #[test]
    fn measured_deep_lengths() {
        let l2 = GroupSpec::lamplighter(2).unwrap();
        let alpha = Alphabet::standard(&l2);
        let gens = build_unbound_gens(&alpha).unwrap();
        let ball = BallIndex::build(
            l2.clone(),
            gens.labelled_elements(),
            7,
            &BallLimits::default(),
        )
        .unwrap();
        let a = l2.parse_element("{0:1}").unwrap();
        let report = measure_deep(&ball, 1, &a, 8).unwrap();
        assert!(report.measured["depth"] >= 1);
        assert!(report.measured["word_length"] >= 4);
    }
}
