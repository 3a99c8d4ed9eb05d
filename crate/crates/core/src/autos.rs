//! Digraph automorphisms by individualization and refinement, and the
//! oriented-4-cycle ultrahomogeneity check built on top of them.
//!
//! Partitions are refined by the multiset of cells met by each vertex's
//! out- and in-arcs until stable. Searches always branch on the first
//! smallest non-singleton cell, trying its vertices in ascending order, so
//! every result here is reproducible.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::dgraph::{enumerate_4cycles, OrientedCycle4};
use crate::digraph::Digraph;
use crate::fano::Collineation;
use crate::pencil::{index_of, vertices};

/// A bijection of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Option<Permutation> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w] = v;
        }
        Permutation(inv)
    }

    pub fn pow(&self, k: usize) -> Permutation {
        (0..k).fold(Permutation::identity(self.len()), |acc, _| {
            self.compose(&acc)
        })
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &w)| v == w)
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(v, &w)| v == w).count()
    }
}

fn arc_set(g: &Digraph) -> HashSet<(usize, usize)> {
    g.arcs().map(|(u, _, v)| (u, v)).collect()
}

/// `(u, v)` is an arc iff `(σu, σv)` is.
pub fn is_automorphism(sigma: &Permutation, g: &Digraph) -> bool {
    // A bijection sending the (finite) arc set into itself is onto it.
    sigma.len() == g.n()
        && g.arcs()
            .all(|(u, _, v)| g.has_arc(sigma.apply(u), sigma.apply(v)))
}

/// The vertex permutation induced by a collineation acting entrywise on pencils.
pub fn induced_automorphism(c: &Collineation) -> Permutation {
    Permutation(
        vertices()
            .iter()
            .map(|v| index_of(&v.map_points(c)))
            .collect(),
    )
}

pub fn translation_automorphism(t: u8) -> Permutation {
    induced_automorphism(&Collineation::translation(t))
}

/// Cyclic relabelling of pencil slots, `(x; b1, b2, b0) ↦ (x; b2, b0, b1)`.
pub fn slot_rotation() -> Permutation {
    Permutation(
        vertices()
            .iter()
            .map(|v| index_of(&v.rotate_slots()))
            .collect(),
    )
}

/// Ordered partition of the vertex set: cell `k` is `elems[starts[k]..starts[k + 1]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Partition {
    elems: Vec<usize>,
    starts: Vec<usize>,
    cell_of: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Partition {
        Partition {
            elems: (0..n).collect(),
            starts: if n == 0 { vec![] } else { vec![0] },
            cell_of: vec![0; n],
        }
    }

    fn cell_count(&self) -> usize {
        self.starts.len()
    }

    fn range(&self, k: usize) -> std::ops::Range<usize> {
        self.starts[k]..self.starts.get(k + 1).copied().unwrap_or(self.elems.len())
    }

    fn cell(&self, k: usize) -> &[usize] {
        &self.elems[self.range(k)]
    }

    fn is_discrete(&self) -> bool {
        self.starts.len() == self.elems.len()
    }

    fn reindex(&mut self) {
        for k in 0..self.cell_count() {
            for i in self.range(k) {
                self.cell_of[self.elems[i]] = k;
            }
        }
    }

    /// Splits cells by neighbourhood profile until equitable; returns the trace.
    ///
    /// The profile of a vertex is a hash of the multisets of cells holding its
    /// out- and in-neighbours. It depends only on the partition, so refinement
    /// commutes with isomorphisms; a hash collision can only leave a cell
    /// coarser than necessary.
    fn refine(&mut self, g: &Digraph) -> u64 {
        let mut trace = DefaultHasher::new();
        let mut key = vec![0u64; g.n()];
        loop {
            for (v, k) in key.iter_mut().enumerate() {
                let out = g.out(v).iter().fold(0u64, |acc, &w| {
                    acc.wrapping_add(mix(self.cell_of[w] as u64))
                });
                let inn = g.inn(v).iter().fold(0u64, |acc, &w| {
                    acc.wrapping_add(mix(!(self.cell_of[w] as u64)))
                });
                *k = mix(out ^ inn.rotate_left(17));
            }
            let mut starts = Vec::with_capacity(self.elems.len());
            let mut split = false;
            for k in 0..self.cell_count() {
                let r = self.range(k);
                starts.push(r.start);
                if r.len() == 1 {
                    continue;
                }
                let cell = &mut self.elems[r.clone()];
                cell.sort_unstable_by_key(|&a| (key[a], a));
                let before = starts.len();
                for i in 1..cell.len() {
                    if key[cell[i - 1]] != key[cell[i]] {
                        starts.push(r.start + i);
                    }
                }
                if starts.len() > before {
                    split = true;
                    k.hash(&mut trace);
                    let mut prev = r.start;
                    for &s in starts[before..].iter().chain(std::iter::once(&r.end)) {
                        (s - prev).hash(&mut trace);
                        key[self.elems[prev]].hash(&mut trace);
                        prev = s;
                    }
                }
            }
            self.starts = starts;
            self.reindex();
            if !split {
                self.cell_count().hash(&mut trace);
                return trace.finish();
            }
        }
    }

    /// Moves `v` into a singleton cell in front of the rest of its cell and refines.
    fn individualize(&self, g: &Digraph, v: usize) -> (Partition, u64) {
        let mut p = self.clone();
        let k = p.cell_of[v];
        let r = p.range(k);
        if r.len() > 1 {
            let at = r.start + p.elems[r.clone()].iter().position(|&w| w == v).unwrap();
            p.elems[r.start..=at].rotate_right(1);
            p.starts.insert(k + 1, r.start + 1);
            p.reindex();
        }
        // The cell chosen must be part of the trace: two vertices that are
        // already singletons leave the partition alone wherever they sit.
        let mut h = DefaultHasher::new();
        (k, r.len(), p.refine(g)).hash(&mut h);
        (p, h.finish())
    }

    fn target_cell(&self) -> Option<usize> {
        (0..self.cell_count())
            .map(|k| (self.range(k).len(), k))
            .filter(|&(len, _)| len > 1)
            .min()
            .map(|(_, k)| k)
    }
}

/// splitmix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Search counters for one run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: usize,
    pub leaves: usize,
}

fn search(
    g: &Digraph,
    left: &Partition,
    right: &Partition,
    stats: &mut SearchStats,
) -> Option<Permutation> {
    stats.nodes += 1;
    if left.is_discrete() {
        stats.leaves += 1;
        let mut images = vec![0; g.n()];
        for (&l, &r) in left.elems.iter().zip(&right.elems) {
            images[l] = r;
        }
        let sigma = Permutation(images);
        return is_automorphism(&sigma, g).then_some(sigma);
    }
    let k = left.target_cell().unwrap();
    let v = *left.cell(k).iter().min().unwrap();
    let (l2, lt) = left.individualize(g, v);
    let mut candidates = right.cell(k).to_vec();
    candidates.sort_unstable();
    for w in candidates {
        let (r2, rt) = right.individualize(g, w);
        if lt == rt {
            if let Some(sigma) = search(g, &l2, &r2, stats) {
                return Some(sigma);
            }
        }
    }
    None
}

/// Individualizes `seq` in order, refining after each step.
fn prefix_partition(g: &Digraph, seq: &[usize]) -> (Partition, Vec<u64>) {
    let mut p = Partition::unit(g.n());
    let mut traces = vec![p.refine(g)];
    for &v in seq {
        let (q, t) = p.individualize(g, v);
        p = q;
        traces.push(t);
    }
    (p, traces)
}

/// An automorphism with `σ(from[k]) = to[k]` for all `k`, if one exists.
pub fn find_automorphism_mapping(g: &Digraph, from: &[usize], to: &[usize]) -> Option<Permutation> {
    find_automorphism_mapping_with_stats(g, from, to).0
}

pub fn find_automorphism_mapping_with_stats(
    g: &Digraph,
    from: &[usize],
    to: &[usize],
) -> (Option<Permutation>, SearchStats) {
    assert_eq!(from.len(), to.len());
    let mut stats = SearchStats::default();
    let (left, lt) = prefix_partition(g, from);
    let (right, rt) = prefix_partition(g, to);
    if lt != rt {
        return (None, stats);
    }
    let found = search(g, &left, &right, &mut stats);
    (found, stats)
}

/// Generators and exact order of a group of automorphisms.
#[derive(Clone, Debug)]
pub struct AutGroup {
    n: usize,
    generators: Vec<Permutation>,
    order: u128,
    base: Vec<usize>,
    orbit_sizes: Vec<usize>,
}

/// Default bound for [`AutGroup::elements`].
pub const ENUMERATION_BOUND: u128 = 1_000_000;

impl AutGroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    /// Base points of the stabilizer chain, in order.
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Orbit length of each base point under the stabilizer of the earlier ones.
    pub fn basic_orbit_sizes(&self) -> &[usize] {
        &self.orbit_sizes
    }

    pub fn orbit_of(&self, v: usize) -> Vec<usize> {
        orbit(v, &self.generators, self.n)
    }

    pub fn vertex_orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n);
        for s in &self.generators {
            for v in 0..self.n {
                uf.union(v, s.apply(v));
            }
        }
        uf.classes()
    }

    pub fn is_transitive(&self) -> bool {
        self.n > 0 && self.orbit_of(0).len() == self.n
    }

    /// All elements by closure, if the order is at most `bound`.
    pub fn elements(&self, bound: u128) -> Option<Vec<Permutation>> {
        if self.order > bound {
            return None;
        }
        let id = Permutation::identity(self.n);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for s in &self.generators {
                let q = s.compose(&p);
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let mut all: Vec<Permutation> = seen.into_iter().collect();
        all.sort();
        Some(all)
    }

    /// Orbits of the group on the arcs of `g`, each sorted, ordered by first arc.
    pub fn arc_orbits(&self, g: &Digraph) -> Vec<Vec<(usize, usize)>> {
        arc_orbits(&self.generators, g)
    }
}

fn orbit(v: usize, gens: &[Permutation], n: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut out = vec![v];
    let mut k = 0;
    while k < out.len() {
        let w = out[k];
        for s in gens {
            let x = s.apply(w);
            if !seen[x] {
                seen[x] = true;
                out.push(x);
            }
        }
        k += 1;
    }
    out.sort_unstable();
    out
}

/// Orbits on the arc set under the group generated by `gens`.
pub fn arc_orbits(gens: &[Permutation], g: &Digraph) -> Vec<Vec<(usize, usize)>> {
    let mut arcs: Vec<(usize, usize)> = arc_set(g).into_iter().collect();
    arcs.sort_unstable();
    let index: HashMap<(usize, usize), usize> =
        arcs.iter().enumerate().map(|(k, &a)| (a, k)).collect();
    let mut uf = UnionFind::new(arcs.len());
    for s in gens {
        for (k, &(u, v)) in arcs.iter().enumerate() {
            if let Some(&j) = index.get(&(s.apply(u), s.apply(v))) {
                uf.union(k, j);
            }
        }
    }
    uf.classes()
        .into_iter()
        .map(|c| c.into_iter().map(|k| arcs[k]).collect())
        .collect()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..self.0.len() {
            let r = self.find(v);
            by_root.entry(r).or_default().push(v);
        }
        let mut classes: Vec<Vec<usize>> = by_root.into_values().collect();
        classes.sort();
        classes
    }
}

pub fn automorphism_group(g: &Digraph) -> AutGroup {
    automorphism_group_fixing(g, &[])
}

/// The pointwise stabilizer of `fixed` in `Aut(g)`, via a stabilizer chain.
pub fn automorphism_group_fixing(g: &Digraph, fixed: &[usize]) -> AutGroup {
    let n = g.n();
    let (mut part, _) = prefix_partition(g, fixed);
    let mut generators: Vec<Permutation> = Vec::new();
    let mut base = Vec::new();
    let mut orbit_sizes = Vec::new();
    let mut order: u128 = 1;

    while let Some(k) = part.target_cell() {
        let v = *part.cell(k).iter().min().unwrap();
        let (left, lt) = part.individualize(g, v);
        let mut level: Vec<Permutation> = Vec::new();
        let mut reached = vec![v];
        let mut candidates = part.cell(k).to_vec();
        candidates.sort_unstable();
        for w in candidates {
            if reached.contains(&w) {
                continue;
            }
            let (right, rt) = part.individualize(g, w);
            if lt != rt {
                continue;
            }
            if let Some(sigma) = search(g, &left, &right, &mut SearchStats::default()) {
                level.push(sigma);
                reached = orbit(v, &level, n);
            }
        }
        order *= reached.len() as u128;
        orbit_sizes.push(reached.len());
        base.push(v);
        generators.extend(level);
        part = left;
    }

    AutGroup {
        n,
        generators,
        order,
        base,
        orbit_sizes,
    }
}

/// A 4-cycle with a distinguished start vertex; equivalently an arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleFlag {
    pub cycle: OrientedCycle4,
    pub start: usize,
}

impl CycleFlag {
    /// The arc leaving `start` along the cycle.
    pub fn arc(&self) -> (usize, usize) {
        let vs = self.cycle.vertices();
        let k = vs.iter().position(|&v| v == self.start).unwrap();
        (vs[k], vs[(k + 1) % 4])
    }
}

pub fn cycle_flags(cycles: &[OrientedCycle4]) -> Vec<CycleFlag> {
    cycles
        .iter()
        .flat_map(|&cycle| cycle.vertices().map(|start| CycleFlag { cycle, start }))
        .collect()
}

/// Extends `C[k] ↦ C'[k + r]` to an automorphism of `g`, if possible.
pub fn extend_isomorphism(
    c: &OrientedCycle4,
    c2: &OrientedCycle4,
    r: usize,
    g: &Digraph,
) -> Option<Permutation> {
    let from = c.vertices();
    let to2 = c2.vertices();
    let to: Vec<usize> = (0..4).map(|k| to2[(k + r) % 4]).collect();
    // The prescribed map must already be an isomorphism of the induced subdigraphs.
    for a in 0..4 {
        for b in 0..4 {
            if a != b && g.has_arc(from[a], from[b]) != g.has_arc(to[a], to[b]) {
                return None;
            }
        }
    }
    let sigma = find_automorphism_mapping(g, &from, &to)?;
    debug_assert!((0..4).all(|k| sigma.apply(from[k]) == to[k]));
    Some(sigma)
}

/// Refined prefix partitions for every cycle and rotation, shared by all
/// extension searches over one digraph.
struct ExtensionContext<'a> {
    g: &'a Digraph,
    cycles: &'a [OrientedCycle4],
    /// `rotated[4 * c + r]`: partition with `C[k + r]` individualized in order `k = 0..4`.
    rotated: Vec<(Partition, Vec<u64>)>,
}

impl<'a> ExtensionContext<'a> {
    fn new(g: &'a Digraph, cycles: &'a [OrientedCycle4]) -> ExtensionContext<'a> {
        let rotated = (0..cycles.len() * 4)
            .into_par_iter()
            .map(|t| {
                let vs = cycles[t / 4].vertices();
                let seq: Vec<usize> = (0..4).map(|k| vs[(k + t % 4) % 4]).collect();
                prefix_partition(g, &seq)
            })
            .collect();
        ExtensionContext { g, cycles, rotated }
    }

    fn extend(&self, a: usize, b: usize, r: usize) -> Option<Permutation> {
        let (from, to) = (self.cycles[a].vertices(), self.cycles[b].vertices());
        for x in 0..4 {
            for y in 0..4 {
                if x != y
                    && self.g.has_arc(from[x], from[y])
                        != self.g.has_arc(to[(x + r) % 4], to[(y + r) % 4])
                {
                    return None;
                }
            }
        }
        let (left, lt) = &self.rotated[4 * a];
        let (right, rt) = &self.rotated[4 * b + r];
        if lt != rt {
            return None;
        }
        search(self.g, left, right, &mut SearchStats::default())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct UhFailure {
    pub cycle: [usize; 4],
    pub cycle2: [usize; 4],
    pub rotation: usize,
}

/// How the extension property is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UhMode {
    /// Orbit fast path, cross-checked on this many random triples.
    Sampled { sample: usize, seed: u64 },
    /// Direct extension for every triple.
    Exhaustive,
}

impl UhMode {
    pub const DEFAULT_SAMPLE: usize = 100;
    pub const DEFAULT_SEED: u64 = 0x0C4_0168;

    /// `0` means exhaustive.
    pub fn from_sample(sample: usize) -> UhMode {
        if sample == 0 {
            UhMode::Exhaustive
        } else {
            UhMode::Sampled {
                sample,
                seed: UhMode::DEFAULT_SEED,
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct UHReport {
    pub pass: bool,
    pub aut_order: u128,
    pub failures: Vec<UhFailure>,
    #[serde(skip)]
    pub cycle_count: usize,
    /// Whether the group acts transitively on cycle flags; `None` if flags and arcs
    /// are not in bijection.
    #[serde(skip)]
    pub flag_transitive: Option<bool>,
    /// Direct extension searches that were run.
    #[serde(skip)]
    pub direct_checks: usize,
    #[serde(skip)]
    pub direct_failures: usize,
}

fn triple(cycles: &[OrientedCycle4], t: usize) -> (usize, usize, usize) {
    let m = cycles.len();
    (t / (4 * m), (t / 4) % m, t % 4)
}

/// Checks that every isomorphism between two oriented 4-cycles of `g` extends
/// to an automorphism.
pub fn verify_c4uh(g: &Digraph, mode: UhMode) -> UHReport {
    let cycles = enumerate_4cycles(g);
    let group = automorphism_group(g);
    verify_c4uh_with_group(g, &cycles, &group, mode)
}

pub fn verify_c4uh_with_group(
    g: &Digraph,
    cycles: &[OrientedCycle4],
    group: &AutGroup,
    mode: UhMode,
) -> UHReport {
    let m = cycles.len();
    let total = m * m * 4;

    // Flags biject with arcs only when every arc lies on exactly one 4-cycle.
    let flags = cycle_flags(cycles);
    let flag_arcs: HashSet<(usize, usize)> = flags.iter().map(CycleFlag::arc).collect();
    let bijective = flag_arcs.len() == flags.len() && flag_arcs == arc_set(g);
    let orbits = group.arc_orbits(g);
    let flag_transitive = bijective.then_some(orbits.len() == 1);

    let ctx = ExtensionContext::new(g, cycles);
    let run = |t: usize| {
        let (a, b, r) = triple(cycles, t);
        ctx.extend(a, b, r).is_none().then(|| UhFailure {
            cycle: cycles[a].vertices(),
            cycle2: cycles[b].vertices(),
            rotation: r,
        })
    };

    let (checked, mut failures): (usize, Vec<UhFailure>) = match mode {
        UhMode::Exhaustive => (total, (0..total).into_par_iter().filter_map(run).collect()),
        UhMode::Sampled { sample, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let picks: Vec<usize> = if sample >= total {
                (0..total).collect()
            } else {
                let all: Vec<usize> = (0..total).collect();
                all.choose_multiple(&mut rng, sample).copied().collect()
            };
            (picks.len(), picks.into_par_iter().filter_map(run).collect())
        }
    };
    failures.sort();
    let direct_failures = failures.len();

    let pass = match mode {
        UhMode::Exhaustive => m > 0 && failures.is_empty(),
        UhMode::Sampled { .. } => {
            let fast = flag_transitive == Some(true);
            if !fast && failures.is_empty() {
                // Locate a witness: a flag outside the orbit of the first one.
                if let Some(w) = orbit_witness(cycles, &orbits, g) {
                    failures.push(w);
                }
            }
            fast && failures.is_empty() && m > 0
        }
    };

    UHReport {
        pass,
        aut_order: group.order(),
        failures,
        cycle_count: m,
        flag_transitive,
        direct_checks: checked,
        direct_failures,
    }
}

fn orbit_witness(
    cycles: &[OrientedCycle4],
    orbits: &[Vec<(usize, usize)>],
    g: &Digraph,
) -> Option<UhFailure> {
    let flags = cycle_flags(cycles);
    let first = *flags.first()?;
    let home = orbits.iter().find(|o| o.contains(&first.arc()))?;
    for f in &flags {
        if home.contains(&f.arc()) {
            continue;
        }
        let r = f
            .cycle
            .vertices()
            .iter()
            .position(|&v| v == f.start)
            .unwrap();
        if extend_isomorphism(&first.cycle, &f.cycle, r, g).is_none() {
            return Some(UhFailure {
                cycle: first.cycle.vertices(),
                cycle2: f.cycle.vertices(),
                rotation: r,
            });
        }
    }
    None
}

/// Whether `sigma` carries every arc to an arc in the same out-list slot.
pub fn preserves_labels(sigma: &Permutation, g: &Digraph) -> bool {
    g.arcs()
        .all(|(u, slot, v)| g.out(sigma.apply(u)).get(slot) == Some(&sigma.apply(v)))
}
