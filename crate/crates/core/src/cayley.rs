//! Breadth-first exploration of Cayley graphs: balls, word lengths, depth,
//! dead ends and interior (almost-convexity) distances.
//!
//! Elements are numbered in BFS order, so every sphere is a contiguous id
//! range. Besides the distances the index keeps the right-multiplication
//! table `id × generator → id`, which makes every query a pure graph walk.

use std::collections::VecDeque;
use std::fmt::Debug;
use std::hash::Hash;
use std::io::Write;

use indexmap::IndexSet;
use rayon::prelude::*;
use rustc_hash::{FxBuildHasher, FxHashMap, FxHashSet};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec, ModuleElement};

/// Marks a neighbour that lies outside the ball.
const OUTSIDE: u32 = u32::MAX;

/// Default cap for depth searches.
pub const DEFAULT_DEPTH_CAP: u32 = 32;

/// Default bound on the number of stored elements.
pub const DEFAULT_MAX_ELEMENTS: usize = 50_000_000;

/// Default bound on the estimated memory of a ball.
pub const DEFAULT_MAX_BYTES: usize = 3 << 30;

/// Frontier elements expanded per batch.
const CHUNK: usize = 1 << 15;

/// The group operations a ball search needs.
pub trait GroupOps: Sync {
    type Element: Clone + Eq + Hash + Send + Sync + Debug;

    fn identity(&self) -> Self::Element;
    fn mul(&self, g: &Self::Element, h: &Self::Element) -> Self::Element;
    fn inverse(&self, g: &Self::Element) -> Self::Element;

    /// Heap bytes owned by an element, used for memory accounting.
    fn heap_bytes(&self, _g: &Self::Element) -> usize {
        0
    }
}

impl GroupOps for GroupSpec {
    type Element = GroupElement;

    fn identity(&self) -> GroupElement {
        GroupSpec::identity(self)
    }

    fn mul(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        GroupSpec::mul(self, g, h).expect("elements of one group")
    }

    fn inverse(&self, g: &GroupElement) -> GroupElement {
        GroupSpec::inverse(self, g)
    }

    fn heap_bytes(&self, g: &GroupElement) -> usize {
        match &g.k {
            // allocator rounding included
            ModuleElement::Lamps(cells) if cells.is_empty() => 0,
            ModuleElement::Lamps(cells) => (cells.capacity() * 16).next_multiple_of(16) + 16,
            ModuleElement::Adic { num, .. } => num.bits() as usize / 8 + 8,
            ModuleElement::Lattice { vec, .. } => {
                vec.iter().map(|x| x.bits() as usize / 8 + 32).sum()
            }
        }
    }
}

/// `ℤᵈ` under addition; a baseline for sanity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeAbelian {
    pub rank: usize,
}

impl GroupOps for FreeAbelian {
    type Element = Vec<i64>;

    fn identity(&self) -> Vec<i64> {
        vec![0; self.rank]
    }

    fn mul(&self, g: &Vec<i64>, h: &Vec<i64>) -> Vec<i64> {
        g.iter().zip(h).map(|(a, b)| a + b).collect()
    }

    fn inverse(&self, g: &Vec<i64>) -> Vec<i64> {
        g.iter().map(|a| -a).collect()
    }

    fn heap_bytes(&self, g: &Vec<i64>) -> usize {
        g.capacity() * 8
    }
}

/// Resource limits for ball construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BallLimits {
    pub max_elements: usize,
    pub max_bytes: Option<usize>,
    pub workers: usize,
}

impl Default for BallLimits {
    fn default() -> Self {
        BallLimits {
            max_elements: DEFAULT_MAX_ELEMENTS,
            max_bytes: Some(DEFAULT_MAX_BYTES),
            workers: 1,
        }
    }
}

/// Exact word lengths for every element of `B₁(R)`.
pub struct BallIndex<G: GroupOps> {
    ops: G,
    labels: Vec<String>,
    gens: Vec<G::Element>,
    inverse_gen: Vec<usize>,
    radius: u32,
    elements: IndexSet<G::Element, FxBuildHasher>,
    dist: Vec<u16>,
    /// `adj[id * |S| + j]` is the id of `g·sⱼ`, or `OUTSIDE`.
    adj: Vec<u32>,
    sphere_starts: Vec<usize>,
    approx_bytes: usize,
}

/// Result of a depth search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Depth {
    Exact(u32),
    /// No escape within the cap: the true depth is larger.
    Censored {
        cap: u32,
    },
}

impl Depth {
    pub fn exact(self) -> Option<u32> {
        match self {
            Depth::Exact(d) => Some(d),
            Depth::Censored { .. } => None,
        }
    }

    /// Lower bound on the depth: the value itself, or `cap + 1`.
    pub fn lower_bound(self) -> u32 {
        match self {
            Depth::Exact(d) => d,
            Depth::Censored { cap } => cap + 1,
        }
    }
}

impl std::fmt::Display for Depth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Depth::Exact(d) => write!(f, "{d}"),
            Depth::Censored { cap } => write!(f, ">{cap}"),
        }
    }
}

/// A dead end together with its depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeadEnd<E> {
    pub element: E,
    pub dist: u32,
    pub depth: Depth,
}

/// Pairs on one sphere with the largest interior distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcxLevel<E> {
    pub r: u32,
    /// `None` when the sphere has no qualifying pair.
    pub max_interior: Option<u32>,
    /// Number of unordered pairs examined.
    pub pair_count: u64,
    pub worst_pairs: Vec<(E, E, u32)>,
}

fn check_generators<G: GroupOps>(ops: &G, gens: &[(String, G::Element)]) -> Result<Vec<usize>> {
    if gens.is_empty() {
        return Err(Error::InvalidArgument("empty generating set".into()));
    }
    if gens.len() > u16::MAX as usize {
        return Err(Error::InvalidArgument("too many generators".into()));
    }
    let id = ops.identity();
    let mut labels = FxHashSet::default();
    for (label, g) in gens {
        if *g == id {
            return Err(Error::InvalidArgument(format!(
                "generator `{label}` is the identity"
            )));
        }
        if !labels.insert(label.as_str()) {
            return Err(Error::InvalidArgument(format!("duplicate label `{label}`")));
        }
    }
    gens.iter()
        .map(|(label, g)| {
            let inv = ops.inverse(g);
            gens.iter().position(|(_, h)| *h == inv).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "generating set is not closed under inversion (`{label}`)"
                ))
            })
        })
        .collect()
}

impl<G: GroupOps> BallIndex<G> {
    /// Exhaustive BFS from the identity up to `radius`.
    pub fn build(
        ops: G,
        gens: Vec<(String, G::Element)>,
        radius: u32,
        limits: &BallLimits,
    ) -> Result<Self> {
        if radius >= u16::MAX as u32 {
            return Err(Error::InvalidArgument(format!("radius {radius} too large")));
        }
        let inverse_gen = check_generators(&ops, &gens)?;
        let (labels, gens): (Vec<_>, Vec<_>) = gens.into_iter().unzip();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(limits.workers.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
        let s = gens.len();
        let mut elements = IndexSet::with_hasher(FxBuildHasher);
        let identity = ops.identity();
        let mut approx_bytes = ops.heap_bytes(&identity);
        elements.insert(identity);
        let mut index = BallIndex {
            ops,
            labels,
            gens,
            inverse_gen,
            radius,
            elements,
            dist: vec![0],
            adj: Vec::new(),
            sphere_starts: vec![0, 1],
            approx_bytes: 0,
        };
        // element, hash slot and index entry, distance, adjacency row
        let per_element = std::mem::size_of::<G::Element>() + 8 + 16 + 2 + 4 * s;
        approx_bytes += per_element;

        for r in 0..=radius {
            let lo = index.sphere_starts[r as usize];
            let hi = index.sphere_starts[r as usize + 1];
            let expanding = r < radius;
            for chunk_lo in (lo..hi).step_by(CHUNK) {
                let products = index.products(&pool, chunk_lo, hi.min(chunk_lo + CHUNK));
                for p in products {
                    let id = match index.elements.get_index_of(&p) {
                        Some(id) => id as u32,
                        None if expanding => {
                            if index.elements.len() >= limits.max_elements
                                || limits.max_bytes.is_some_and(|b| approx_bytes > b)
                            {
                                return Err(index.abort(r));
                            }
                            approx_bytes += per_element + index.ops.heap_bytes(&p);
                            let (id, _) = index.elements.insert_full(p);
                            index.dist.push(r as u16 + 1);
                            id as u32
                        }
                        None => OUTSIDE,
                    };
                    index.adj.push(id);
                }
            }
            if expanding {
                index.sphere_starts.push(index.elements.len());
            }
        }
        index.approx_bytes = approx_bytes;
        Ok(index)
    }

    fn products(&self, pool: &rayon::ThreadPool, lo: usize, hi: usize) -> Vec<G::Element> {
        let compute = |id: usize| {
            let g = &self.elements[id];
            self.gens
                .iter()
                .map(|s| self.ops.mul(g, s))
                .collect::<Vec<_>>()
        };
        if pool.current_num_threads() <= 1 {
            (lo..hi).flat_map(compute).collect()
        } else {
            pool.install(|| (lo..hi).into_par_iter().flat_map_iter(compute).collect())
        }
    }

    fn abort(&self, r: u32) -> Error {
        Error::ResourceExhausted {
            stored: self.elements.len(),
            completed_radius: r,
            sphere_sizes: self.sphere_sizes(),
        }
    }

    pub fn ops(&self) -> &G {
        &self.ops
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    pub fn generator(&self, j: usize) -> (&str, &G::Element) {
        (&self.labels[j], &self.gens[j])
    }

    pub fn approx_bytes(&self) -> usize {
        self.approx_bytes
    }

    /// Number of elements at each distance `0..=R`.
    pub fn sphere_sizes(&self) -> Vec<u64> {
        self.sphere_starts
            .windows(2)
            .map(|w| (w[1] - w[0]) as u64)
            .collect()
    }

    pub fn sphere(&self, r: u32) -> impl Iterator<Item = &G::Element> + '_ {
        let (lo, hi) = self.sphere_range(r);
        (lo..hi).map(move |id| &self.elements[id])
    }

    fn sphere_range(&self, r: u32) -> (usize, usize) {
        if r > self.radius {
            return (0, 0);
        }
        (
            self.sphere_starts[r as usize],
            self.sphere_starts[r as usize + 1],
        )
    }

    pub fn id_of(&self, g: &G::Element) -> Option<usize> {
        self.elements.get_index_of(g)
    }

    pub fn element(&self, id: usize) -> &G::Element {
        &self.elements[id]
    }

    pub fn dist_of_id(&self, id: usize) -> u32 {
        self.dist[id] as u32
    }

    /// `|g|`, or `None` when `g` lies outside the ball.
    pub fn word_length(&self, g: &G::Element) -> Option<u32> {
        self.id_of(g).map(|id| self.dist[id] as u32)
    }

    fn neighbours(&self, id: usize) -> &[u32] {
        let s = self.gens.len();
        &self.adj[id * s..(id + 1) * s]
    }

    /// A geodesic word for `g` as generator indices.
    pub fn geodesic(&self, g: &G::Element) -> Option<Vec<usize>> {
        let mut id = self.id_of(g)?;
        let mut word = Vec::with_capacity(self.dist[id] as usize);
        while self.dist[id] > 0 {
            let d = self.dist[id];
            // g = p·sⱼ with p = g·sⱼ⁻¹ one step closer
            let (j, p) = (0..self.gens.len())
                .map(|j| (j, self.neighbours(id)[self.inverse_gen[j]]))
                .find(|&(_, p)| p != OUTSIDE && self.dist[p as usize] + 1 == d)
                .expect("every non-identity element has a predecessor");
            word.push(j);
            id = p as usize;
        }
        word.reverse();
        Some(word)
    }

    /// Labels of [`geodesic`](Self::geodesic).
    pub fn geodesic_labels(&self, g: &G::Element) -> Option<Vec<&str>> {
        self.geodesic(g)
            .map(|w| w.into_iter().map(|j| self.labels[j].as_str()).collect())
    }

    /// Least `d` such that the `d`-ball around `g` leaves `B₁(|g|)`.
    ///
    /// Only `R ≥ |g|` is needed: the walk stays inside `B₁(|g|)` until it
    /// escapes, and escaping is visible as a neighbour at distance `> |g|`
    /// or outside the index.
    pub fn depth(&self, g: &G::Element, cap: u32) -> Result<Depth> {
        let id = self.id_of(g).ok_or(Error::InsufficientRadius {
            required: self.radius + 1,
            available: self.radius,
        })?;
        Ok(self.depth_of_id(id, cap))
    }

    fn depth_of_id(&self, id: usize, cap: u32) -> Depth {
        let n = self.dist[id];
        let mut seen = FxHashSet::default();
        seen.insert(id as u32);
        let mut frontier = vec![id as u32];
        for d in 1..=cap {
            let mut next = Vec::new();
            for &x in &frontier {
                for &y in self.neighbours(x as usize) {
                    if y == OUTSIDE || self.dist[y as usize] > n {
                        return Depth::Exact(d);
                    }
                    if seen.insert(y) {
                        next.push(y);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Depth::Censored { cap }
    }

    /// True when no generator moves `g` strictly farther from the identity.
    fn is_dead_end(&self, id: usize) -> bool {
        let n = self.dist[id];
        self.neighbours(id)
            .iter()
            .all(|&y| y != OUTSIDE && self.dist[y as usize] <= n)
    }

    /// Every dead end of the ball (depth ≥ 2) with its depth.
    pub fn dead_ends(&self, cap: u32) -> Vec<DeadEnd<G::Element>> {
        (0..self.len())
            .filter(|&id| self.is_dead_end(id))
            .map(|id| DeadEnd {
                element: self.elements[id].clone(),
                dist: self.dist[id] as u32,
                depth: self.depth_of_id(id, cap),
            })
            .collect()
    }

    /// Shortest path from `g₁` to `g₂` through elements with `|h| ≤ r`.
    pub fn interior_distance(
        &self,
        g1: &G::Element,
        g2: &G::Element,
        r: u32,
    ) -> Result<Option<u32>> {
        if r > self.radius {
            return Err(Error::InsufficientRadius {
                required: r,
                available: self.radius,
            });
        }
        let outside = || Error::InsufficientRadius {
            required: self.radius + 1,
            available: self.radius,
        };
        let a = self.id_of(g1).ok_or_else(outside)?;
        let b = self.id_of(g2).ok_or_else(outside)?;
        if self.dist[a] as u32 > r || self.dist[b] as u32 > r {
            return Ok(None);
        }
        let mut targets = FxHashMap::default();
        targets.insert(b as u32, 0u32);
        let found = self.restricted_bfs(a as u32, r, &mut targets);
        Ok(found.get(&(b as u32)).copied())
    }

    /// BFS from `start` inside `B₁(r)` until every target is reached.
    /// Returns the distances of the reached targets.
    fn restricted_bfs(
        &self,
        start: u32,
        r: u32,
        targets: &mut FxHashMap<u32, u32>,
    ) -> FxHashMap<u32, u32> {
        let mut found = FxHashMap::default();
        let mut remaining = targets.len();
        if targets.contains_key(&start) {
            found.insert(start, 0);
            remaining -= 1;
        }
        let mut seen = FxHashSet::default();
        seen.insert(start);
        let mut queue = VecDeque::from([(start, 0u32)]);
        while remaining > 0 {
            let Some((x, d)) = queue.pop_front() else {
                break;
            };
            for &y in self.neighbours(x as usize) {
                if y == OUTSIDE || self.dist[y as usize] as u32 > r || !seen.insert(y) {
                    continue;
                }
                if targets.contains_key(&y) {
                    found.insert(y, d + 1);
                    remaining -= 1;
                }
                queue.push_back((y, d + 1));
            }
        }
        found
    }

    /// Sphere-`r` pairs at graph distance at most `pair_distance_cap`
    /// with the largest interior distance inside `B₁(r)`.
    pub fn acx_check(&self, r: u32, pair_distance_cap: u32) -> Result<AcxLevel<G::Element>> {
        let required = r + pair_distance_cap / 2;
        if required > self.radius || r > self.radius {
            return Err(Error::InsufficientRadius {
                required,
                available: self.radius,
            });
        }
        let (lo, hi) = self.sphere_range(r);
        let mut best: Option<u32> = None;
        let mut worst = Vec::new();
        let mut pair_count = 0u64;
        for a in lo..hi {
            // sphere-r elements within pair_distance_cap steps, higher ids only
            let mut near = FxHashMap::default();
            let mut seen = FxHashSet::default();
            seen.insert(a as u32);
            let mut frontier = vec![a as u32];
            for _ in 0..pair_distance_cap {
                let mut next = Vec::new();
                for &x in &frontier {
                    for &y in self.neighbours(x as usize) {
                        if y != OUTSIDE && seen.insert(y) {
                            next.push(y);
                            if (y as usize) > a
                                && (y as usize) < hi
                                && self.dist[y as usize] as u32 == r
                            {
                                near.insert(y, 0);
                            }
                        }
                    }
                }
                frontier = next;
            }
            if near.is_empty() {
                continue;
            }
            pair_count += near.len() as u64;
            let found = self.restricted_bfs(a as u32, r, &mut near);
            let mut ids: Vec<u32> = near.keys().copied().collect();
            ids.sort_unstable();
            for b in ids {
                // B₁(r) is connected through the identity, so every pair is found
                let d = found[&b];
                match best {
                    Some(m) if d < m => {}
                    Some(m) if d == m => worst.push((a, b as usize, d)),
                    _ => {
                        best = Some(d);
                        worst.clear();
                        worst.push((a, b as usize, d));
                    }
                }
            }
        }
        Ok(AcxLevel {
            r,
            max_interior: best,
            pair_count,
            worst_pairs: worst
                .into_iter()
                .map(|(a, b, d)| (self.elements[a].clone(), self.elements[b].clone(), d))
                .collect(),
        })
    }

    /// Writes `r,sphere_size,cumulative` rows.
    pub fn write_sphere_csv<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "r,sphere_size,cumulative")?;
        let mut total = 0u64;
        for (r, size) in self.sphere_sizes().into_iter().enumerate() {
            total += size;
            writeln!(out, "{r},{size},{total}")?;
        }
        Ok(())
    }
}

impl BallIndex<GroupSpec> {
    /// Writes `dist,depth,element` rows with base64 element blobs.
    pub fn write_dead_end_csv<W: Write>(
        dead_ends: &[DeadEnd<GroupElement>],
        out: &mut W,
    ) -> std::io::Result<()> {
        writeln!(out, "dist,depth,element")?;
        for d in dead_ends {
            writeln!(out, "{},{},{}", d.dist, d.depth, d.element.to_blob())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_gens(steps: &[i64]) -> Vec<(String, Vec<i64>)> {
        let mut out = Vec::new();
        for &s in steps {
            out.push((format!("a^{s}"), vec![s]));
            out.push((format!("a^{}", -s), vec![-s]));
        }
        out
    }

    fn lamplighter_standard() -> (GroupSpec, Vec<(String, GroupElement)>) {
        let spec = GroupSpec::lamplighter(2).unwrap();
        let a = spec.embed(spec.parse_element("{0:1}").unwrap());
        let gens = vec![
            ("a".to_string(), a),
            ("t".to_string(), spec.t_power(1)),
            ("T".to_string(), spec.t_power(-1)),
        ];
        (spec, gens)
    }

    #[test]
    fn line_spheres() {
        let ball = BallIndex::build(
            FreeAbelian { rank: 1 },
            z_gens(&[1]),
            5,
            &BallLimits::default(),
        )
        .unwrap();
        assert_eq!(ball.sphere_sizes(), vec![1, 2, 2, 2, 2, 2]);
        let ball = BallIndex::build(
            FreeAbelian { rank: 1 },
            z_gens(&[1]),
            0,
            &BallLimits::default(),
        )
        .unwrap();
        assert_eq!(ball.sphere_sizes(), vec![1]);
    }

    #[test]
    fn lamplighter_small_ball() {
        let (spec, gens) = lamplighter_standard();
        let ball = BallIndex::build(spec.clone(), gens, 2, &BallLimits::default()).unwrap();
        assert_eq!(ball.sphere_sizes(), vec![1, 3, 6]);
        let g = spec.embed(spec.parse_element("{1:1}").unwrap());
        let big = BallIndex::build(
            spec.clone(),
            lamplighter_standard().1,
            4,
            &BallLimits::default(),
        )
        .unwrap();
        assert_eq!(big.word_length(&g), Some(3));
        assert_eq!(big.geodesic_labels(&g).unwrap(), vec!["t", "a", "T"]);
    }

    #[test]
    fn depth_classics() {
        let ball = BallIndex::build(
            FreeAbelian { rank: 1 },
            z_gens(&[1]),
            6,
            &BallLimits::default(),
        )
        .unwrap();
        assert_eq!(ball.depth(&vec![0], 8).unwrap(), Depth::Exact(1));
        assert_eq!(ball.depth(&vec![-4], 8).unwrap(), Depth::Exact(1));
        assert!(ball.dead_ends(8).is_empty());

        let ball = BallIndex::build(
            FreeAbelian { rank: 1 },
            z_gens(&[2, 3]),
            4,
            &BallLimits::default(),
        )
        .unwrap();
        assert_eq!(ball.word_length(&vec![1]), Some(2));
        assert_eq!(ball.depth(&vec![1], 8).unwrap(), Depth::Exact(2));
    }

    #[test]
    fn lamplighter_dead_end() {
        let (spec, gens) = lamplighter_standard();
        let ball = BallIndex::build(spec.clone(), gens, 8, &BallLimits::default()).unwrap();
        // lamps at -1, 0, 1 with the cursor in the middle; hand count gives
        // length 7, every neighbour at 6 and an escape after three steps
        let g = spec.embed(spec.parse_element("{-1:1,0:1,1:1}").unwrap());
        let dead = ball.dead_ends(8);
        assert_eq!(ball.word_length(&g), Some(7));
        assert!(dead.iter().any(|d| d.element == g));
        assert!(!dead.iter().any(|d| d.element == spec.identity()));
        assert_eq!(ball.depth(&g, 8).unwrap(), Depth::Exact(3));
        // lamps at -1 and 1 only: t·a·t⁻¹·t⁻¹·a·t, and `a` leads farther
        let h = spec.embed(spec.parse_element("{-1:1,1:1}").unwrap());
        assert_eq!(ball.word_length(&h), Some(6));
        assert!(!dead.iter().any(|d| d.element == h));
    }

    #[test]
    fn resource_abort_reports_progress() {
        let (spec, gens) = lamplighter_standard();
        let limits = BallLimits {
            max_elements: 5,
            ..Default::default()
        };
        match BallIndex::build(spec, gens, 3, &limits) {
            Err(Error::ResourceExhausted {
                completed_radius,
                sphere_sizes,
                ..
            }) => {
                assert_eq!(completed_radius, 1);
                assert_eq!(sphere_sizes, vec![1, 3]);
            }
            other => panic!("expected an abort, got {:?}", other.map(|b| b.len())),
        }
    }

    #[test]
    fn grid_interior_distance() {
        let gens = vec![
            ("x".to_string(), vec![1, 0]),
            ("X".to_string(), vec![-1, 0]),
            ("y".to_string(), vec![0, 1]),
            ("Y".to_string(), vec![0, -1]),
        ];
        let ball =
            BallIndex::build(FreeAbelian { rank: 2 }, gens, 6, &BallLimits::default()).unwrap();
        assert_eq!(
            ball.interior_distance(&vec![3, 0], &vec![3, 0], 3).unwrap(),
            Some(0)
        );
        assert_eq!(
            ball.interior_distance(&vec![3, 0], &vec![2, 1], 3).unwrap(),
            Some(2)
        );
        let level = ball.acx_check(3, 2).unwrap();
        assert!(level.max_interior.unwrap() <= 6);
    }

    #[test]
    fn parallel_build_is_identical() {
        let (spec, gens) = lamplighter_standard();
        let one = BallIndex::build(spec.clone(), gens.clone(), 7, &BallLimits::default()).unwrap();
        let limits = BallLimits {
            workers: 3,
            ..Default::default()
        };
        let many = BallIndex::build(spec, gens, 7, &limits).unwrap();
        assert_eq!(one.elements, many.elements);
        assert_eq!(one.adj, many.adj);
    }
}
