//! Sample certificates for t-efficiency, t-logarithmicity and strong
//! t-logarithmicity of an alphabet.
//!
//! Every t-word with support in the window and at most `length_cap` letters
//! is enumerated once and grouped by value. All extremal indices below are
//! relative to that table.

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::ModuleElement;
use crate::twords::{is_inclusion_minimal, Alphabet, ExtIndex, GeneralizedTWord, TWord, Window};

/// Grid scanned for `B`.
pub const STRONG_B_GRID: [f64; 17] = [
    0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0, 6.5, 7.0, 7.5, 8.0,
];

/// Values of `m` and `n` for which strong constants are estimated.
pub const STRONG_M: [u64; 3] = [1, 2, 3];
pub const STRONG_N: [usize; 3] = [0, 1, 2];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantsParams {
    pub windows: Vec<Window>,
    pub length_cap: u32,
    /// Sampled elements must have minimal representatives at least this far
    /// inside the window.
    pub margin: i64,
    /// Pairs tested for t-logarithmicity; all pairs are used when fewer exist.
    pub pairs_budget: usize,
    /// Random generalized words tested for strong t-logarithmicity.
    pub word_samples: usize,
    pub seed: u64,
}

impl ConstantsParams {
    pub fn new(window: Window, length_cap: u32) -> Self {
        ConstantsParams {
            windows: vec![window],
            length_cap,
            margin: 1,
            pairs_budget: 200_000,
            word_samples: 2_000,
            seed: 7,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StrongConstant {
    pub m: u64,
    pub n: usize,
    pub b: f64,
    pub c: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantsEstimate {
    /// Least `C` with `|I_max(v) − I_max(w)|, |I_min(v) − I_min(w)| < C`.
    pub c_eff: i64,
    /// Least `C ≥ 0` satisfying both t-logarithmic inequalities.
    pub c_log: i64,
    /// For each `(m, n)`: the smallest grid `B` reaching the least `C`.
    pub strong: Vec<StrongConstant>,
    pub sample_description: String,
}

impl ConstantsEstimate {
    pub fn strong_b(&self) -> BTreeMap<(u64, usize), f64> {
        self.strong.iter().map(|s| ((s.m, s.n), s.b)).collect()
    }

    pub fn strong_c(&self) -> BTreeMap<(u64, usize), i64> {
        self.strong.iter().map(|s| ((s.m, s.n), s.c)).collect()
    }

    /// Smallest `n` for which `tⁿa + t⁻ⁿa` is expected to be minimal.
    pub fn deep_min_n(&self) -> i64 {
        2 * self.c_eff + 1
    }
}

struct Entry {
    min_len: usize,
    /// every word of length at most `min_len + max(STRONG_N)`
    words: Vec<TWord>,
}

struct Table {
    window: Window,
    values: HashMap<ModuleElement, Entry>,
}

impl Table {
    fn build(alphabet: &Alphabet, window: Window, cap: u32) -> Table {
        let spec = alphabet.spec();
        let letters: Vec<usize> = alphabet.nonzero_indices().collect();
        let mut values: HashMap<ModuleElement, Entry> = HashMap::new();
        let mut stack = vec![(window.lo, spec.zero(), Vec::<(i64, usize)>::new())];
        let slack = *STRONG_N.iter().max().unwrap();
        while let Some((p, value, word)) = stack.pop() {
            if p > window.hi {
                let len = word.len();
                let w = TWord::from_entries(alphabet, word).expect("valid indices");
                match values.get_mut(&value) {
                    Some(e) => {
                        if len < e.min_len {
                            e.min_len = len;
                            e.words.retain(|x| x.len() <= len + slack);
                        }
                        if len <= e.min_len + slack {
                            e.words.push(w);
                        }
                    }
                    None => {
                        values.insert(
                            value,
                            Entry {
                                min_len: len,
                                words: vec![w],
                            },
                        );
                    }
                }
                continue;
            }
            if word.len() < cap as usize {
                for &l in &letters {
                    let v = spec
                        .add(&value, &spec.shift(alphabet.letter(l), p))
                        .expect("same spec");
                    let mut w = word.clone();
                    w.push((p, l));
                    stack.push((p + 1, v, w));
                }
            }
            stack.push((p + 1, value, word));
        }
        Table { window, values }
    }

    /// `(I_max(k), I_min(k), spread_max, spread_min)` over minimal-length words.
    fn extent(&self, k: &ModuleElement) -> Option<(ExtIndex, ExtIndex, i64, i64)> {
        if k.is_zero() {
            return Some((ExtIndex::NegInf, ExtIndex::PosInf, 0, 0));
        }
        let e = self.values.get(k)?;
        let shortest = e.words.iter().filter(|w| w.len() == e.min_len);
        let mut maxes: Vec<i64> = Vec::new();
        let mut mins: Vec<i64> = Vec::new();
        for w in shortest {
            maxes.push(w.imax().finite().unwrap());
            mins.push(w.imin().finite().unwrap());
        }
        let (lo_max, hi_max) = (*maxes.iter().min()?, *maxes.iter().max()?);
        let (lo_min, hi_min) = (*mins.iter().min()?, *mins.iter().max()?);
        Some((
            ExtIndex::Finite(lo_max),
            ExtIndex::Finite(hi_min),
            hi_max - lo_max,
            hi_min - lo_min,
        ))
    }

    fn inner(&self, margin: i64) -> Window {
        Window {
            lo: self.window.lo + margin,
            hi: self.window.hi - margin,
        }
    }
}

fn ext_diff(a: ExtIndex, b: ExtIndex) -> Option<i64> {
    match (a, b) {
        (ExtIndex::Finite(x), ExtIndex::Finite(y)) => Some(x - y),
        _ => None,
    }
}

/// Estimates the three families of constants on the sampled windows.
pub fn estimate_constants(
    alphabet: &Alphabet,
    params: &ConstantsParams,
) -> Result<ConstantsEstimate> {
    if params.windows.is_empty() || params.pairs_budget == 0 || params.word_samples == 0 {
        return Err(Error::InvalidArgument(
            "budgets and windows must be nonempty".into(),
        ));
    }
    if alphabet.nonzero_indices().next().is_none() {
        return Err(Error::InvalidAlphabet(
            "alphabet has no nonzero letter".into(),
        ));
    }
    let spec = alphabet.spec();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut spread = 0i64;
    let mut c_log = 0i64;
    let mut residuals: Vec<(u64, usize, Vec<(f64, f64)>)> = Vec::new();
    for &m in &STRONG_M {
        for &n in &STRONG_N {
            residuals.push((m, n, Vec::new()));
        }
    }
    let mut description = Vec::new();
    for &window in &params.windows {
        let table = Table::build(alphabet, window, params.length_cap);
        let inner = table.inner(params.margin);
        if inner.lo > inner.hi {
            return Err(Error::InvalidArgument(format!(
                "margin {} leaves nothing of window {window}",
                params.margin
            )));
        }

        // sample: elements with a short minimal word inside the inner window
        let half = (params.length_cap / 2) as usize;
        let mut sample: Vec<&ModuleElement> = table
            .values
            .iter()
            .filter(|(k, e)| {
                !k.is_zero()
                    && e.min_len <= half
                    && e.words.iter().any(|w| {
                        w.len() == e.min_len
                            && inner.contains(w.imin().finite().unwrap())
                            && inner.contains(w.imax().finite().unwrap())
                    })
            })
            .map(|(k, _)| k)
            .collect();
        sample.sort();

        for k in &sample {
            let (_, _, smax, smin) = table.extent(k).expect("sampled from the table");
            spread = spread.max(smax).max(smin);
        }

        // t-logarithmicity
        let all_pairs = sample.len() * sample.len();
        let pairs: Vec<(usize, usize)> = if all_pairs <= params.pairs_budget {
            (0..sample.len())
                .flat_map(|i| (0..sample.len()).map(move |j| (i, j)))
                .collect()
        } else {
            (0..params.pairs_budget)
                .map(|_| {
                    (
                        rng.gen_range(0..sample.len()),
                        rng.gen_range(0..sample.len()),
                    )
                })
                .collect()
        };
        let mut unresolved_pairs = 0usize;
        for &(i, j) in &pairs {
            let (k1, k2) = (sample[i], sample[j]);
            let sum = spec.add(k1, k2)?;
            if sum.is_zero() {
                continue;
            }
            let Some((smax, smin, _, _)) = table.extent(&sum) else {
                unresolved_pairs += 1;
                continue;
            };
            let (max1, min1, _, _) = table.extent(k1).unwrap();
            let (max2, min2, _, _) = table.extent(k2).unwrap();
            if let Some(d) = ext_diff(smax, max1.max(max2)) {
                c_log = c_log.max(d);
            }
            if let Some(d) = ext_diff(min1.min(min2), smin) {
                c_log = c_log.max(d);
            }
        }

        // strong t-logarithmicity: t-words from the sample and random
        // generalized words in the inner window
        let letters: Vec<usize> = alphabet.nonzero_indices().collect();
        let mut words: Vec<GeneralizedTWord> = sample
            .iter()
            .flat_map(|k| {
                let e = &table.values[*k];
                e.words
                    .iter()
                    .filter(|w| w.len() == e.min_len)
                    .map(TWord::to_generalized)
                    .collect::<Vec<_>>()
            })
            .collect();
        for _ in 0..params.word_samples {
            let len = rng.gen_range(1..=params.length_cap.max(1));
            let mut w = GeneralizedTWord::new();
            for _ in 0..len {
                let p = rng.gen_range(inner.lo..=inner.hi);
                let l = *letters.choose(&mut rng).unwrap();
                let c = if rng.gen_bool(0.5) { 1 } else { -1 };
                w.add_term(p, l, c);
            }
            if !w.is_empty() {
                words.push(w);
            }
        }
        let mut unresolved_words = 0usize;
        for w in &words {
            let k = w.evaluate(alphabet);
            if k.is_zero() {
                // only the empty word is minimal: both sides are -inf
                continue;
            }
            let Some(entry) = table.values.get(&k) else {
                unresolved_words += 1;
                continue;
            };
            let (wmax, wmin) = (w.imax().finite().unwrap(), w.imin().finite().unwrap());
            let minimal: Vec<&TWord> = entry
                .words
                .iter()
                .filter(|x| is_inclusion_minimal(alphabet, x))
                .collect();
            for (m, n, list) in residuals.iter_mut() {
                let norm = w.truncated_norm(*m) as f64;
                let worst = minimal
                    .iter()
                    .filter(|x| x.len() <= entry.min_len + *n)
                    .map(|x| {
                        let a = x.imax().finite().unwrap() - wmax;
                        let b = wmin - x.imin().finite().unwrap();
                        a.max(b)
                    })
                    .max();
                if let Some(r) = worst {
                    list.push((r as f64, (norm + 1.0).ln()));
                }
            }
        }
        description.push(format!(
            "window {window} cap {}: {} values, {} sampled, {} pairs ({} unresolved), {} generalized words ({} unresolved)",
            params.length_cap,
            table.values.len(),
            sample.len(),
            pairs.len(),
            unresolved_pairs,
            words.len(),
            unresolved_words
        ));
    }

    let strong = residuals
        .into_iter()
        .map(|(m, n, list)| {
            let c_for = |b: f64| -> i64 {
                let worst = list
                    .iter()
                    .map(|&(r, lg)| r - b * lg)
                    .fold(f64::NEG_INFINITY, f64::max);
                if worst == f64::NEG_INFINITY {
                    0
                } else {
                    worst.floor() as i64 + 1
                }
            };
            let best_c = STRONG_B_GRID.iter().map(|&b| c_for(b)).min().unwrap();
            let b = *STRONG_B_GRID.iter().find(|&&b| c_for(b) == best_c).unwrap();
            StrongConstant { m, n, b, c: best_c }
        })
        .collect();

    Ok(ConstantsEstimate {
        c_eff: spread + 1,
        c_log,
        strong,
        sample_description: description.join("; "),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    #[test]
    fn lamplighter_constants() {
        let spec = GroupSpec::lamplighter(2).unwrap();
        let alpha = Alphabet::standard(&spec);
        let est = estimate_constants(
            &alpha,
            &ConstantsParams::new(Window::new(-4, 4).unwrap(), 6),
        )
        .unwrap();
        assert_eq!(est.c_eff, 1);
        assert_eq!(est.c_log, 0);
        for s in &est.strong {
            assert_eq!((s.b, s.c), (0.0, 1));
        }
    }

    #[test]
    fn balanced_ternary_constants() {
        let spec = GroupSpec::baumslag_solitar(3).unwrap();
        let alpha = Alphabet::standard(&spec);
        let est = estimate_constants(
            &alpha,
            &ConstantsParams::new(Window::new(-3, 4).unwrap(), 6),
        )
        .unwrap();
        // balanced ternary representations are unique
        assert_eq!(est.c_eff, 1);
        assert!(est.c_log <= 2);
    }
}
