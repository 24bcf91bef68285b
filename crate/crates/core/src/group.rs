//! Exact arithmetic in the module `K` and in the group `G = K ⋊ ⟨t⟩`.
//!
//! Every element is stored in a canonical form, so structural equality and
//! hashing coincide with equality in the group.
//!
//! Convention: `t·k·t⁻¹ = T(k)`, where `T` is the right shift on lamp
//! configurations, multiplication by `m` on `ℤ[1/m]`, or the integer matrix
//! acting on `ℤᵈ`. A group element `(a, k)` denotes `tᵃ·k`, hence
//!
//! ```text
//! (a, k₁)·(b, k₂) = (a + b, T⁻ᵇ(k₁) + k₂)
//! ```

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{poly_roots, IntMatrix};

/// Distance from the unit circle below which an eigenvalue is treated as
/// lying on it.
pub const HYPERBOLICITY_SLACK: f64 = 1e-9;

/// The three families of groups `K ⋊ ⟨t⟩` handled by the toolkit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupSpec {
    /// `ℤ_q ≀ ℤ`: finitely supported `ℤ_q`-sequences, `t` shifts right.
    Lamplighter { q: u32 },
    /// `BS(1, m) = ℤ[1/m] ⋊ ℤ`, `t` multiplies by `m`.
    BaumslagSolitar { m: u32 },
    /// `K = ⋃ T⁻ⁱℤᵈ` with `t` acting by a hyperbolic integer matrix.
    MatrixModule(MatrixAction),
}

/// A hyperbolic integer matrix together with the data needed to invert it
/// exactly on its image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixAction {
    matrix: IntMatrix,
    #[serde(skip)]
    adjugate: Vec<i64>,
    #[serde(skip)]
    det: i64,
}

impl MatrixAction {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `T⁻¹v` when it is integral.
    fn try_inverse(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let d = self.dim();
        let det = BigInt::from(self.det);
        let mut out = Vec::with_capacity(d);
        for r in 0..d {
            let s: BigInt = (0..d)
                .map(|c| BigInt::from(self.adjugate[r * d + c]) * &v[c])
                .sum();
            let (q, rem) = s.div_rem(&det);
            if !rem.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(out)
    }
}

impl GroupSpec {
    pub fn lamplighter(q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidSpec(format!(
                "lamplighter needs q >= 2, got {q}"
            )));
        }
        Ok(GroupSpec::Lamplighter { q })
    }

    pub fn baumslag_solitar(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidSpec(format!(
                "Baumslag-Solitar needs m >= 2, got {m}"
            )));
        }
        Ok(GroupSpec::BaumslagSolitar { m })
    }

    /// Builds a matrix module, rejecting singular or non-hyperbolic `T`.
    pub fn matrix_module(matrix: IntMatrix) -> Result<Self> {
        let det = matrix.det();
        if det == 0 {
            return Err(Error::InvalidSpec("matrix is singular".into()));
        }
        let poly = matrix.char_poly();
        // exact test for the rational points of the unit circle
        let at = |x: i128| poly.iter().fold(0i128, |acc, &c| acc * x + c);
        if at(1) == 0 || at(-1) == 0 {
            return Err(Error::InvalidSpec(
                "matrix has an eigenvalue of absolute value 1".into(),
            ));
        }
        if let Some(root) = poly_roots(&poly)
            .into_iter()
            .find(|z| (z.norm() - 1.0).abs() < HYPERBOLICITY_SLACK)
        {
            return Err(Error::InvalidSpec(format!(
                "matrix is not hyperbolic: eigenvalue {root} lies on the unit circle"
            )));
        }
        let adjugate = matrix
            .adjugate()
            .into_iter()
            .map(i64::try_from)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Overflow("adjugate entries exceed 64 bits".into()))?;
        let det = i64::try_from(det).map_err(|_| Error::Overflow("determinant".into()))?;
        Ok(GroupSpec::MatrixModule(MatrixAction {
            matrix,
            adjugate,
            det,
        }))
    }

    /// Re-derives cached matrix data after deserialization.
    pub fn revalidated(self) -> Result<Self> {
        match self {
            GroupSpec::Lamplighter { q } => GroupSpec::lamplighter(q),
            GroupSpec::BaumslagSolitar { m } => GroupSpec::baumslag_solitar(m),
            GroupSpec::MatrixModule(a) => GroupSpec::matrix_module(a.matrix),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            GroupSpec::Lamplighter { .. } => "lamplighter",
            GroupSpec::BaumslagSolitar { .. } => "baumslag-solitar",
            GroupSpec::MatrixModule(_) => "matrix",
        }
    }

    pub fn zero(&self) -> ModuleElement {
        match self {
            GroupSpec::Lamplighter { .. } => ModuleElement::Lamps(Vec::new()),
            GroupSpec::BaumslagSolitar { .. } => ModuleElement::Adic {
                num: BigInt::zero(),
                level: 0,
            },
            GroupSpec::MatrixModule(a) => ModuleElement::Lattice {
                level: 0,
                vec: vec![BigInt::zero(); a.dim()],
            },
        }
    }

    /// Checks that `x` is a canonical element of this module.
    pub fn check(&self, x: &ModuleElement) -> Result<()> {
        let ok = match (self, x) {
            (GroupSpec::Lamplighter { q }, ModuleElement::Lamps(cells)) => {
                cells.iter().all(|&(_, c)| c != 0 && c < *q)
                    && cells.windows(2).all(|w| w[0].0 < w[1].0)
            }
            (GroupSpec::BaumslagSolitar { .. }, ModuleElement::Adic { .. }) => true,
            (GroupSpec::MatrixModule(a), ModuleElement::Lattice { vec, .. }) => {
                vec.len() == a.dim()
            }
            _ => false,
        };
        if ok && self.canonicalize(x.clone()) == *x {
            Ok(())
        } else {
            Err(Error::SpecMismatch(format!(
                "element {x} is not a canonical {} element",
                self.kind_name()
            )))
        }
    }

    fn mismatch(&self, x: &ModuleElement, y: &ModuleElement) -> Error {
        Error::SpecMismatch(format!(
            "cannot combine {x} and {y} in a {} module",
            self.kind_name()
        ))
    }

    /// Brings a possibly non-reduced element to canonical form.
    pub fn canonicalize(&self, x: ModuleElement) -> ModuleElement {
        match (self, x) {
            (GroupSpec::Lamplighter { q }, ModuleElement::Lamps(mut cells)) => {
                cells.sort_by_key(|&(p, _)| p);
                let mut out: Vec<(i64, u32)> = Vec::with_capacity(cells.len());
                for (p, c) in cells {
                    let c = c % q;
                    match out.last_mut() {
                        Some(last) if last.0 == p => last.1 = (last.1 + c) % q,
                        _ => out.push((p, c)),
                    }
                }
                out.retain(|&(_, c)| c != 0);
                ModuleElement::Lamps(out)
            }
            (GroupSpec::BaumslagSolitar { m }, ModuleElement::Adic { mut num, mut level }) => {
                let m = BigInt::from(*m);
                if num.is_zero() {
                    level = 0;
                }
                while level > 0 {
                    let (qt, r) = num.div_rem(&m);
                    if !r.is_zero() {
                        break;
                    }
                    num = qt;
                    level -= 1;
                }
                ModuleElement::Adic { num, level }
            }
            (GroupSpec::MatrixModule(a), ModuleElement::Lattice { mut level, mut vec }) => {
                if vec.iter().all(Zero::is_zero) {
                    level = 0;
                }
                while level > 0 {
                    match a.try_inverse(&vec) {
                        Some(w) => {
                            vec = w;
                            level -= 1;
                        }
                        None => break,
                    }
                }
                ModuleElement::Lattice { level, vec }
            }
            (_, other) => other,
        }
    }

    pub fn add(&self, x: &ModuleElement, y: &ModuleElement) -> Result<ModuleElement> {
        match (self, x, y) {
            (GroupSpec::Lamplighter { q }, ModuleElement::Lamps(a), ModuleElement::Lamps(b)) => {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let next = match (a.get(i), b.get(j)) {
                        (Some(&(pa, ca)), Some(&(pb, cb))) => match pa.cmp(&pb) {
                            Ordering::Less => {
                                i += 1;
                                (pa, ca)
                            }
                            Ordering::Greater => {
                                j += 1;
                                (pb, cb)
                            }
                            Ordering::Equal => {
                                i += 1;
                                j += 1;
                                (pa, (ca + cb) % q)
                            }
                        },
                        (Some(&x), None) => {
                            i += 1;
                            x
                        }
                        (None, Some(&y)) => {
                            j += 1;
                            y
                        }
                        (None, None) => unreachable!(),
                    };
                    if next.1 != 0 {
                        out.push(next);
                    }
                }
                Ok(ModuleElement::Lamps(out))
            }
            (
                GroupSpec::BaumslagSolitar { m },
                ModuleElement::Adic { num: n1, level: e1 },
                ModuleElement::Adic { num: n2, level: e2 },
            ) => {
                let e = (*e1).max(*e2);
                let m = BigInt::from(*m);
                let num = n1 * num_traits::pow(m.clone(), (e - e1) as usize)
                    + n2 * num_traits::pow(m, (e - e2) as usize);
                Ok(self.canonicalize(ModuleElement::Adic { num, level: e }))
            }
            (
                GroupSpec::MatrixModule(a),
                ModuleElement::Lattice { level: e1, vec: v1 },
                ModuleElement::Lattice { level: e2, vec: v2 },
            ) if v1.len() == a.dim() && v2.len() == a.dim() => {
                let e = (*e1).max(*e2);
                let lift = |v: &[BigInt], by: u32| {
                    let mut v = v.to_vec();
                    for _ in 0..by {
                        v = a.matrix.mul_vec(&v);
                    }
                    v
                };
                let w1 = lift(v1, e - e1);
                let w2 = lift(v2, e - e2);
                let vec = w1.into_iter().zip(w2).map(|(x, y)| x + y).collect();
                Ok(self.canonicalize(ModuleElement::Lattice { level: e, vec }))
            }
            _ => Err(self.mismatch(x, y)),
        }
    }

    pub fn neg(&self, x: &ModuleElement) -> ModuleElement {
        match (self, x) {
            (GroupSpec::Lamplighter { q }, ModuleElement::Lamps(cells)) => {
                ModuleElement::Lamps(cells.iter().map(|&(p, c)| (p, q - c)).collect())
            }
            (_, ModuleElement::Adic { num, level }) => ModuleElement::Adic {
                num: -num,
                level: *level,
            },
            (_, ModuleElement::Lattice { level, vec }) => ModuleElement::Lattice {
                level: *level,
                vec: vec.iter().map(|v| -v).collect(),
            },
            (_, other) => other.clone(),
        }
    }

    pub fn sub(&self, x: &ModuleElement, y: &ModuleElement) -> Result<ModuleElement> {
        self.add(x, &self.neg(y))
    }

    /// Integer multiple `c·x`.
    pub fn scale(&self, x: &ModuleElement, c: i64) -> ModuleElement {
        match (self, x) {
            (GroupSpec::Lamplighter { q }, ModuleElement::Lamps(cells)) => {
                let q = *q as i64;
                let f = c.rem_euclid(q);
                self.canonicalize(ModuleElement::Lamps(
                    cells
                        .iter()
                        .map(|&(p, v)| (p, ((v as i64 * f) % q) as u32))
                        .collect(),
                ))
            }
            (_, ModuleElement::Adic { num, level }) => self.canonicalize(ModuleElement::Adic {
                num: num * c,
                level: *level,
            }),
            (_, ModuleElement::Lattice { level, vec }) => {
                self.canonicalize(ModuleElement::Lattice {
                    level: *level,
                    vec: vec.iter().map(|v| v * c).collect(),
                })
            }
            (_, other) => other.clone(),
        }
    }

    /// The action `Tⁱ(x)`.
    pub fn shift(&self, x: &ModuleElement, i: i64) -> ModuleElement {
        if i == 0 {
            return x.clone();
        }
        match (self, x) {
            (GroupSpec::Lamplighter { .. }, ModuleElement::Lamps(cells)) => {
                ModuleElement::Lamps(cells.iter().map(|&(p, c)| (p + i, c)).collect())
            }
            (GroupSpec::BaumslagSolitar { m }, ModuleElement::Adic { num, level }) => {
                if num.is_zero() {
                    return x.clone();
                }
                let level = *level as i64 - i;
                if level >= 0 {
                    self.canonicalize(ModuleElement::Adic {
                        num: num.clone(),
                        level: level as u32,
                    })
                } else {
                    ModuleElement::Adic {
                        num: num * num_traits::pow(BigInt::from(*m), (-level) as usize),
                        level: 0,
                    }
                }
            }
            (GroupSpec::MatrixModule(a), ModuleElement::Lattice { level, vec }) => {
                if vec.iter().all(Zero::is_zero) {
                    return x.clone();
                }
                let level = *level as i64 - i;
                if level >= 0 {
                    self.canonicalize(ModuleElement::Lattice {
                        level: level as u32,
                        vec: vec.clone(),
                    })
                } else {
                    let mut v = vec.clone();
                    for _ in 0..(-level) {
                        v = a.matrix.mul_vec(&v);
                    }
                    ModuleElement::Lattice { level: 0, vec: v }
                }
            }
            (_, other) => other.clone(),
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            shift: 0,
            k: self.zero(),
        }
    }

    pub fn t_power(&self, n: i64) -> GroupElement {
        GroupElement {
            shift: n,
            k: self.zero(),
        }
    }

    pub fn embed(&self, k: ModuleElement) -> GroupElement {
        GroupElement { shift: 0, k }
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        let k = self.add(&self.shift(&g.k, -h.shift), &h.k)?;
        Ok(GroupElement {
            shift: g.shift + h.shift,
            k,
        })
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        GroupElement {
            shift: -g.shift,
            k: self.neg(&self.shift(&g.k, g.shift)),
        }
    }

    /// `gⁿ` for any integer `n`.
    pub fn pow(&self, g: &GroupElement, n: i64) -> Result<GroupElement> {
        let base = if n < 0 { self.inverse(g) } else { g.clone() };
        let mut acc = self.identity();
        for _ in 0..n.unsigned_abs() {
            acc = self.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    pub fn product<'a, I>(&self, factors: I) -> Result<GroupElement>
    where
        I: IntoIterator<Item = &'a GroupElement>,
    {
        factors
            .into_iter()
            .try_fold(self.identity(), |acc, f| self.mul(&acc, f))
    }

    /// Parses the textual element syntax produced by `Display`:
    /// `{p:c,...}` (lamps), `num` or `num@e` (value `num·m⁻ᵉ`),
    /// `(v1,...,vd)` or `(v1,...,vd)@e` (value `T⁻ᵉ·v`). A bare `0` is zero
    /// in every module.
    pub fn parse_element(&self, input: &str) -> Result<ModuleElement> {
        let err = |reason: &str| Error::ElementParse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s = input.trim();
        if s == "0" {
            return Ok(self.zero());
        }
        let (body, level) = match s.rsplit_once('@') {
            Some((b, e)) => (
                b.trim(),
                e.trim().parse::<u32>().map_err(|_| err("bad level"))?,
            ),
            None => (s, 0),
        };
        let raw = match self {
            GroupSpec::Lamplighter { .. } => {
                if level != 0 {
                    return Err(err("lamp configurations have no level"));
                }
                let inner = body
                    .strip_prefix('{')
                    .and_then(|b| b.strip_suffix('}'))
                    .ok_or_else(|| err("expected {pos:coeff,...}"))?;
                let mut cells = Vec::new();
                for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                    let (p, c) = part
                        .split_once(':')
                        .ok_or_else(|| err("expected pos:coeff"))?;
                    let p = p.trim().parse::<i64>().map_err(|_| err("bad position"))?;
                    let c = c
                        .trim()
                        .parse::<i64>()
                        .map_err(|_| err("bad coefficient"))?;
                    let GroupSpec::Lamplighter { q } = self else {
                        unreachable!()
                    };
                    cells.push((p, c.rem_euclid(*q as i64) as u32));
                }
                ModuleElement::Lamps(cells)
            }
            GroupSpec::BaumslagSolitar { .. } => ModuleElement::Adic {
                num: body.parse::<BigInt>().map_err(|_| err("bad integer"))?,
                level,
            },
            GroupSpec::MatrixModule(a) => {
                let inner = body
                    .strip_prefix('(')
                    .and_then(|b| b.strip_suffix(')'))
                    .ok_or_else(|| err("expected (v1,...,vd)"))?;
                let vec = inner
                    .split(',')
                    .map(|v| v.trim().parse::<BigInt>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| err("bad vector entry"))?;
                if vec.len() != a.dim() {
                    return Err(err("vector has the wrong dimension"));
                }
                ModuleElement::Lattice { level, vec }
            }
        };
        Ok(self.canonicalize(raw))
    }
}

/// An element of the module `K`, always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleElement {
    /// Nonzero lamp states sorted by position.
    Lamps(Vec<(i64, u32)>),
    /// `num / mˡᵉᵛᵉˡ` with `level = 0` or `m ∤ num`.
    Adic {
        #[serde(with = "bigint_text")]
        num: BigInt,
        level: u32,
    },
    /// `T⁻ˡᵉᵛᵉˡ·vec` with `level = 0` or `vec ∉ T·ℤᵈ`.
    Lattice {
        level: u32,
        #[serde(with = "bigint_vec_text")]
        vec: Vec<BigInt>,
    },
}

impl ModuleElement {
    pub fn is_zero(&self) -> bool {
        match self {
            ModuleElement::Lamps(cells) => cells.is_empty(),
            ModuleElement::Adic { num, .. } => num.is_zero(),
            ModuleElement::Lattice { vec, .. } => vec.iter().all(Zero::is_zero),
        }
    }

    /// Integer value for a level-0 Baumslag-Solitar element.
    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            ModuleElement::Adic { num, level: 0 } => Some(num),
            _ => None,
        }
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleElement::Lamps(cells) => {
                if cells.is_empty() {
                    return write!(f, "0");
                }
                write!(f, "{{")?;
                for (i, (p, c)) in cells.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}:{c}")?;
                }
                write!(f, "}}")
            }
            ModuleElement::Adic { num, level } => {
                write!(f, "{num}")?;
                if *level > 0 {
                    write!(f, "@{level}")?;
                }
                Ok(())
            }
            ModuleElement::Lattice { level, vec } => {
                write!(f, "(")?;
                for (i, v) in vec.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")?;
                if *level > 0 {
                    write!(f, "@{level}")?;
                }
                Ok(())
            }
        }
    }
}

/// `tˢʰⁱᶠᵗ·k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub shift: i64,
    pub k: ModuleElement,
}

impl GroupElement {
    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.k.is_zero()
    }

    /// Compact text blob (base64 of the JSON form) used in CSV output.
    pub fn to_blob(&self) -> String {
        use base64::Engine;
        let json = serde_json::to_vec(self).expect("group elements serialize");
        base64::engine::general_purpose::STANDARD.encode(json)
    }

    pub fn from_blob(blob: &str) -> Option<Self> {
        use base64::Engine;
        let bytes = base64::engine::general_purpose::STANDARD
            .decode(blob)
            .ok()?;
        serde_json::from_slice(&bytes).ok()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.shift, self.k)
    }
}

mod bigint_text {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

mod bigint_vec_text {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<String> = v.iter().map(ToString::to_string).collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let text = Vec::<String>::deserialize(d)?;
        text.iter()
            .map(|t| t.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Exact rational value of a Baumslag-Solitar element as `(numerator, denominator)`.
pub fn adic_value(m: u32, x: &ModuleElement) -> Option<(BigInt, BigInt)> {
    match x {
        ModuleElement::Adic { num, level } => Some((
            num.clone(),
            num_traits::pow(BigInt::from(m), *level as usize),
        )),
        _ => None,
    }
}
