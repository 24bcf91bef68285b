//! Layer-by-layer depth-first search for words `Σ tʲ·x_j = target` where each
//! layer picks one entry from a fixed list of choices.
//!
//! Residual pruning is family specific: BS(1,m) uses scaled integer residues
//! and a magnitude bound, lamplighters use a dense digit array where each
//! finished position must vanish, matrix modules only enforce the length cap.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{GroupSpec, ModuleElement};
use crate::twords::Window;

/// One option for a layer: the layer's net value at power zero and the
/// number of letters it costs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Choice {
    pub net: ModuleElement,
    pub len: u32,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub complete: bool,
}

trait Residual: Sized {
    type Ctx;
    /// Applies `choice` at layer offset `off`; `None` when the branch is dead.
    fn apply(&self, ctx: &Self::Ctx, off: usize, choice: usize, rem_len: u32) -> Option<Self>;
    fn is_done(&self) -> bool;
}

/// Enumerates every choice sequence over the window whose total length is at
/// most `cap` and whose value equals `target`. `visit` receives one choice
/// index per layer, lowest power first.
pub(crate) fn enumerate<F>(
    spec: &GroupSpec,
    target: &ModuleElement,
    window: Window,
    cap: u32,
    choices: &[Choice],
    node_budget: Option<u64>,
    mut visit: F,
) -> Result<SearchStats>
where
    F: FnMut(&[usize]),
{
    spec.check(target)?;
    for c in choices {
        spec.check(&c.net)?;
        if c.len == 0 && !c.net.is_zero() {
            return Err(Error::InvalidArgument(
                "a zero-length choice must have zero net value".into(),
            ));
        }
    }
    let lens: Vec<u32> = choices.iter().map(|c| c.len).collect();
    let mut dfs = Dfs {
        lens: &lens,
        width: window.width(),
        cap,
        budget: node_budget,
        path: Vec::with_capacity(window.width()),
        stats: SearchStats {
            complete: true,
            ..Default::default()
        },
        visit: &mut visit,
    };
    match spec {
        GroupSpec::BaumslagSolitar { m } => {
            if let Some((ctx, root)) = adic_setup(*m, target, window, choices)? {
                dfs.run(&ctx, &root, 0, 0);
            }
        }
        GroupSpec::Lamplighter { q } => {
            if let Some((ctx, root)) = lamp_setup(*q, target, window, choices) {
                dfs.run(&ctx, &root, 0, 0);
            }
        }
        GroupSpec::MatrixModule(_) => {
            let ctx = GenericCtx {
                spec: spec.clone(),
                contrib: (0..window.width() as i64)
                    .map(|off| {
                        choices
                            .iter()
                            .map(|c| spec.shift(&c.net, window.lo + off))
                            .collect()
                    })
                    .collect(),
            };
            dfs.run(&ctx, &GenericResidual(target.clone()), 0, 0);
        }
    }
    Ok(dfs.stats)
}

struct Dfs<'a, F> {
    lens: &'a [u32],
    width: usize,
    cap: u32,
    budget: Option<u64>,
    path: Vec<usize>,
    stats: SearchStats,
    visit: &'a mut F,
}

impl<F: FnMut(&[usize])> Dfs<'_, F> {
    fn run<R: Residual>(&mut self, ctx: &R::Ctx, r: &R, off: usize, used: u32) {
        if off == self.width {
            if r.is_done() {
                self.stats.leaves += 1;
                (self.visit)(&self.path);
            }
            return;
        }
        for (c, &len) in self.lens.iter().enumerate() {
            if !self.stats.complete {
                return;
            }
            let total = used + len;
            if total > self.cap {
                continue;
            }
            self.stats.nodes += 1;
            if self.budget.is_some_and(|b| self.stats.nodes > b) {
                self.stats.complete = false;
                return;
            }
            if let Some(next) = r.apply(ctx, off, c, self.cap - total) {
                self.path.push(c);
                self.run(ctx, &next, off + 1, total);
                self.path.pop();
            }
        }
    }
}

/// BS(1,m): values multiplied by `m^(E - lo)`, `E` the largest choice level,
/// so every term is an integer.
struct AdicCtx {
    /// `contrib[off][c]`
    contrib: Vec<Vec<i128>>,
    /// `modulus[off] = m^(off+1)`, `None` once it no longer fits
    modulus: Vec<Option<i128>>,
    max_unit: u128,
}

struct AdicResidual(i128);

fn adic_setup(
    m: u32,
    target: &ModuleElement,
    window: Window,
    choices: &[Choice],
) -> Result<Option<(AdicCtx, AdicResidual)>> {
    let overflow = || Error::Overflow(format!("scaled residues for window {window} exceed i128"));
    let parts = |x: &ModuleElement| match x {
        ModuleElement::Adic { num, level } => (num.clone(), *level as i64),
        _ => unreachable!("checked against the spec"),
    };
    let e_max = choices.iter().map(|c| parts(&c.net).1).max().unwrap_or(0);
    let mb = BigInt::from(m);
    let (tnum, tlevel) = parts(target);
    let exp = e_max - window.lo - tlevel;
    let scaled_target = if exp >= 0 {
        tnum * mb.pow(exp as u32)
    } else {
        let (q, r) = tnum.div_rem(&mb.pow((-exp) as u32));
        if !r.is_zero() {
            return Ok(None);
        }
        q
    };
    let value = scaled_target.to_i128().ok_or_else(overflow)?;
    let mut contrib = Vec::with_capacity(window.width());
    for off in 0..window.width() as i64 {
        let mut row = Vec::with_capacity(choices.len());
        for c in choices {
            let (num, level) = parts(&c.net);
            let v = num * mb.pow((off + e_max - level) as u32);
            row.push(v.to_i128().ok_or_else(overflow)?);
        }
        contrib.push(row);
    }
    let last = contrib.last().expect("window is nonempty");
    let max_unit = choices
        .iter()
        .zip(last)
        .filter(|(c, _)| c.len > 0)
        .map(|(c, v)| v.unsigned_abs().div_ceil(c.len as u128))
        .max()
        .unwrap_or(0);
    let modulus = (1..=window.width() as u32)
        .map(|p| (m as i128).checked_pow(p))
        .collect();
    Ok(Some((
        AdicCtx {
            contrib,
            modulus,
            max_unit,
        },
        AdicResidual(value),
    )))
}

impl Residual for AdicResidual {
    type Ctx = AdicCtx;

    fn apply(&self, ctx: &AdicCtx, off: usize, choice: usize, rem_len: u32) -> Option<Self> {
        let value = self.0.checked_sub(ctx.contrib[off][choice])?;
        if off + 1 < ctx.contrib.len() {
            if let Some(md) = ctx.modulus[off] {
                if value % md != 0 {
                    return None;
                }
            }
            if value.unsigned_abs() > (rem_len as u128).saturating_mul(ctx.max_unit) {
                return None;
            }
        }
        Some(AdicResidual(value))
    }

    fn is_done(&self) -> bool {
        self.0 == 0
    }
}

/// Lamplighter: dense residual digits over `[lo + smin, hi + smax]`.
struct LampCtx {
    q: u32,
    /// cells of each choice as `(offset - smin, coefficient)`
    cells: Vec<Vec<(usize, u32)>>,
    max_cells_per_letter: usize,
}

#[derive(Clone)]
struct LampResidual {
    digits: Vec<u32>,
    nonzero: usize,
}

fn lamp_setup(
    q: u32,
    target: &ModuleElement,
    window: Window,
    choices: &[Choice],
) -> Option<(LampCtx, LampResidual)> {
    let support = |x: &ModuleElement| match x {
        ModuleElement::Lamps(v) => v.clone(),
        _ => unreachable!("checked against the spec"),
    };
    let nets: Vec<Vec<(i64, u32)>> = choices.iter().map(|c| support(&c.net)).collect();
    let smin = nets.iter().flatten().map(|&(p, _)| p).min().unwrap_or(0);
    let smax = nets.iter().flatten().map(|&(p, _)| p).max().unwrap_or(0);
    let p0 = window.lo + smin;
    let p1 = window.hi + smax;
    let mut digits = vec![0u32; (p1 - p0 + 1) as usize];
    for (p, c) in support(target) {
        if p < p0 || p > p1 {
            return None;
        }
        digits[(p - p0) as usize] = c;
    }
    let nonzero = digits.iter().filter(|&&d| d != 0).count();
    let cells: Vec<Vec<(usize, u32)>> = nets
        .iter()
        .map(|n| n.iter().map(|&(p, c)| ((p - smin) as usize, c)).collect())
        .collect();
    let max_cells_per_letter = choices
        .iter()
        .zip(&cells)
        .filter(|(c, _)| c.len > 0)
        .map(|(c, cl)| cl.len().div_ceil(c.len as usize))
        .max()
        .unwrap_or(0);
    Some((
        LampCtx {
            q,
            cells,
            max_cells_per_letter,
        },
        LampResidual { digits, nonzero },
    ))
}

impl Residual for LampResidual {
    type Ctx = LampCtx;

    fn apply(&self, ctx: &LampCtx, off: usize, choice: usize, rem_len: u32) -> Option<Self> {
        let mut next = self.clone();
        for &(rel, c) in &ctx.cells[choice] {
            let d = &mut next.digits[off + rel];
            let before = *d != 0;
            *d = (*d + ctx.q - c) % ctx.q;
            match (before, *d != 0) {
                (true, false) => next.nonzero -= 1,
                (false, true) => next.nonzero += 1,
                _ => {}
            }
        }
        // position lo + off + smin receives nothing from later layers
        if next.digits[off] != 0 {
            return None;
        }
        if next.nonzero > rem_len as usize * ctx.max_cells_per_letter {
            return None;
        }
        Some(next)
    }

    fn is_done(&self) -> bool {
        self.nonzero == 0
    }
}

struct GenericCtx {
    spec: GroupSpec,
    contrib: Vec<Vec<ModuleElement>>,
}

struct GenericResidual(ModuleElement);

impl Residual for GenericResidual {
    type Ctx = GenericCtx;

    fn apply(&self, ctx: &GenericCtx, off: usize, choice: usize, _rem_len: u32) -> Option<Self> {
        let v = &ctx.contrib[off][choice];
        if v.is_zero() {
            return Some(GenericResidual(self.0.clone()));
        }
        ctx.spec.sub(&self.0, v).ok().map(GenericResidual)
    }

    fn is_done(&self) -> bool {
        self.0.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;

    fn unit_choices(spec: &GroupSpec, letters: &[ModuleElement]) -> Vec<Choice> {
        let mut out = vec![Choice {
            net: spec.zero(),
            len: 0,
        }];
        out.extend(letters.iter().map(|l| Choice {
            net: l.clone(),
            len: 1,
        }));
        out
    }

    /// Plain enumeration of every assignment, no pruning.
    fn brute(
        spec: &GroupSpec,
        target: &ModuleElement,
        window: Window,
        cap: u32,
        choices: &[Choice],
    ) -> Vec<Vec<usize>> {
        let w = window.width();
        let n = choices.len();
        let mut out = Vec::new();
        let total = n.pow(w as u32);
        for code in 0..total {
            let mut path = Vec::with_capacity(w);
            let mut x = code;
            for _ in 0..w {
                path.push(x % n);
                x /= n;
            }
            let len: u32 = path.iter().map(|&c| choices[c].len).sum();
            if len > cap {
                continue;
            }
            let mut acc = spec.zero();
            for (off, &c) in path.iter().enumerate() {
                acc = spec
                    .add(&acc, &spec.shift(&choices[c].net, window.lo + off as i64))
                    .unwrap();
            }
            if &acc == target {
                out.push(path);
            }
        }
        out.sort();
        out
    }

    fn pruned(
        spec: &GroupSpec,
        target: &ModuleElement,
        window: Window,
        cap: u32,
        choices: &[Choice],
    ) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let stats = enumerate(spec, target, window, cap, choices, None, |p| {
            out.push(p.to_vec())
        })
        .unwrap();
        assert!(stats.complete);
        out.sort();
        out
    }

    #[test]
    fn adic_matches_brute_force() {
        let spec = GroupSpec::baumslag_solitar(3).unwrap();
        let letters: Vec<_> = ["-1", "1", "2@1"]
            .iter()
            .map(|s| spec.parse_element(s).unwrap())
            .collect();
        let choices = unit_choices(&spec, &letters);
        let window = Window::new(-2, 2).unwrap();
        for t in ["0", "4", "-7", "10@1", "5@2", "1@3", "13", "20@1"] {
            let target = spec.parse_element(t).unwrap();
            assert_eq!(
                pruned(&spec, &target, window, 3, &choices),
                brute(&spec, &target, window, 3, &choices),
                "target {t}"
            );
        }
    }

    #[test]
    fn lamp_matches_brute_force() {
        let spec = GroupSpec::lamplighter(3).unwrap();
        let letters: Vec<_> = ["{0:1}", "{0:2}", "{0:1,1:1}"]
            .iter()
            .map(|s| spec.parse_element(s).unwrap())
            .collect();
        let choices = unit_choices(&spec, &letters);
        let window = Window::new(-1, 2).unwrap();
        for t in ["0", "{0:1}", "{-1:2,2:1}", "{0:1,1:2,3:1}", "{5:1}"] {
            let target = spec.parse_element(t).unwrap();
            assert_eq!(
                pruned(&spec, &target, window, 3, &choices),
                brute(&spec, &target, window, 3, &choices),
                "target {t}"
            );
        }
    }

    #[test]
    fn matrix_matches_brute_force() {
        let spec = GroupSpec::matrix_module(IntMatrix::new(2, vec![2, 1, 1, 1]).unwrap()).unwrap();
        let letters: Vec<_> = ["(1,0)", "(-1,0)", "(0,1)", "(0,-1)"]
            .iter()
            .map(|s| spec.parse_element(s).unwrap())
            .collect();
        let choices = unit_choices(&spec, &letters);
        let window = Window::new(-1, 1).unwrap();
        for t in ["0", "(3,1)", "(1,1)", "(0,1)@1"] {
            let target = spec.parse_element(t).unwrap();
            assert_eq!(
                pruned(&spec, &target, window, 2, &choices),
                brute(&spec, &target, window, 2, &choices),
                "target {t}"
            );
        }
    }

    #[test]
    fn node_budget_marks_incomplete() {
        let spec = GroupSpec::baumslag_solitar(3).unwrap();
        let letters = vec![spec.parse_element("1").unwrap()];
        let choices = unit_choices(&spec, &letters);
        let stats = enumerate(
            &spec,
            &spec.zero(),
            Window::new(0, 10).unwrap(),
            5,
            &choices,
            Some(3),
            |_| {},
        )
        .unwrap();
        assert!(!stats.complete);
    }
}
