//! The Coxeter graph on unordered pencils of ordered lines.
//!
//! A vertex is a point `x` together with the three lines through it, each
//! written `x b c`, such that the three second coordinates `b` form a line.
//! Read as a colouring, `x` is the vertex colour, `b` an edge colour and `c`
//! the colour of the far endpoint of that edge.
//!
//! Matching entries so that paired entries share one point and the shared
//! points form a line is not enough on its own: every pencil admits such a
//! matching with 24 others. Adjacency also asks that the matching pair the
//! entries `(b, x')` and `(b, x)` of a common edge, and that `b` be the only
//! edge colour the two pencils share. That gives the cubic graph of girth 7.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use itertools::Itertools;
use serde::Serialize;

use crate::autos::{automorphism_group, AutGroup};
use crate::digraph::Digraph;
use crate::fano::{lines_through, Line, Point};

/// `[x, b1c1, b2c2, b0c0]` with entries kept sorted by `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoxVertex {
    x: Point,
    entries: [(Point, Point); 3],
}

impl CoxVertex {
    /// Accepts any choice of second coordinates, one per line through `x`.
    /// Returns `None` unless each `x b c` is a line through `x`.
    pub fn new(x: Point, mut entries: [(Point, Point); 3]) -> Option<CoxVertex> {
        entries.sort();
        let through = lines_through(x);
        let mut used = [false; 3];
        for &(b, c) in &entries {
            let line = Line::try_from_points([x, b, c]).ok()?;
            let k = through.iter().position(|l| *l == line)?;
            if std::mem::replace(&mut used[k], true) {
                return None;
            }
        }
        Some(CoxVertex { x, entries })
    }

    pub fn x(&self) -> Point {
        self.x
    }

    pub fn entries(&self) -> [(Point, Point); 3] {
        self.entries
    }

    /// The set of second coordinates.
    pub fn b_set(&self) -> [Point; 3] {
        self.entries.map(|(b, _)| b)
    }

    pub fn translate(&self, t: u8) -> CoxVertex {
        CoxVertex::new(
            self.x.shift(t),
            self.entries.map(|(b, c)| (b.shift(t), c.shift(t))),
        )
        .expect("translations preserve lines")
    }
}

impl fmt::Display for CoxVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [(b1, c1), (b2, c2), (b0, c0)] = self.entries;
        write!(f, "[{},{b1}{c1},{b2}{c2},{b0}{c0}]", self.x)
    }
}

/// The 28 pencils whose second coordinates form a line, by `(x, line index)`.
pub fn cox_vertices() -> Vec<CoxVertex> {
    let mut out = Vec::new();
    for x in Point::ALL {
        let pairs: Vec<[Point; 2]> = lines_through(x)
            .iter()
            .map(|l| {
                let [p, q] = <[Point; 2]>::try_from(
                    l.points()
                        .into_iter()
                        .filter(|&p| p != x)
                        .collect::<Vec<_>>(),
                )
                .unwrap();
                [p, q]
            })
            .collect();
        let mut at_x = Vec::new();
        for choice in 0..8u8 {
            let entries: [(Point, Point); 3] = std::array::from_fn(|k| {
                let [p, q] = pairs[k];
                if choice >> k & 1 == 0 {
                    (p, q)
                } else {
                    (q, p)
                }
            });
            let v = CoxVertex::new(x, entries).unwrap();
            if let Ok(line) = Line::try_from_points(v.b_set()) {
                at_x.push((line.index(), v));
            }
        }
        at_x.sort();
        out.extend(at_x.into_iter().map(|(_, v)| v));
    }
    out
}

fn pair_meet(a: (Point, Point), b: (Point, Point)) -> Option<Point> {
    let common: Vec<Point> = [a.0, a.1]
        .into_iter()
        .filter(|&p| p == b.0 || p == b.1)
        .collect();
    (common.len() == 1).then(|| common[0])
}

/// Some matching of `q`'s entries to `p`'s in which paired entries share
/// exactly one point and the shared points form a line, with those points.
pub fn cox_alignment(p: &CoxVertex, q: &CoxVertex) -> Option<([usize; 3], [Point; 3])> {
    line_alignments(p, q).next()
}

fn line_alignments<'a>(
    p: &'a CoxVertex,
    q: &'a CoxVertex,
) -> impl Iterator<Item = ([usize; 3], [Point; 3])> + 'a {
    (0..3).permutations(3).filter_map(move |perm| {
        let mut d = [Point::new(0); 3];
        for i in 0..3 {
            d[i] = pair_meet(p.entries[i], q.entries[perm[i]])?;
        }
        Line::try_from_points(d)
            .ok()
            .map(|_| ([perm[0], perm[1], perm[2]], d))
    })
}

/// Colour of the edge joining `p` and `q`, if they are adjacent.
pub fn cox_edge_colour(p: &CoxVertex, q: &CoxVertex) -> Option<Point> {
    let shared: Vec<Point> = p
        .b_set()
        .into_iter()
        .filter(|b| q.b_set().contains(b))
        .collect();
    let [b] = shared[..] else { return None };
    let joins = |perm: [usize; 3]| {
        (0..3).any(|i| p.entries[i] == (b, q.x) && q.entries[perm[i]] == (b, p.x))
    };
    line_alignments(p, q)
        .any(|(perm, _)| joins(perm))
        .then_some(b)
}

pub fn cox_adjacent(p: &CoxVertex, q: &CoxVertex) -> bool {
    cox_edge_colour(p, q).is_some()
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edges are normalised to `(min, max)`; loops and repeats are kept so
    /// that validation can flag them.
    pub fn new(labels: Vec<String>, edges: Vec<(usize, usize)>) -> Graph {
        let n = labels.len();
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            if a != b {
                adj[b].push(a);
            }
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Graph { labels, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|&(a, b)| a != b) && self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// Copy with edge number `k` moved to `(a, b)`.
    pub fn with_edge_replaced(&self, k: usize, a: usize, b: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges[k] = (a, b);
        Graph::new(self.labels.clone(), edges)
    }

    /// Symmetric digraph with the same adjacency.
    pub fn as_digraph(&self) -> Digraph {
        Digraph::from_edges(self.n(), &self.edges)
    }

    /// BFS distances from `v`; `usize::MAX` when unreachable.
    pub fn distances(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        (0..self.n())
            .map(|v| self.distances(v).into_iter().max().unwrap_or(0))
            .max()
            .filter(|&d| d != usize::MAX)
    }

    /// Length of a shortest cycle, with one such cycle as a vertex sequence.
    pub fn girth_witness(&self) -> Option<(usize, Vec<usize>)> {
        if let Some(&(v, _)) = self.edges.iter().find(|(a, b)| a == b) {
            return Some((1, vec![v]));
        }
        let mut best: Option<(usize, Vec<usize>)> = None;
        for root in 0..self.n() {
            let mut dist = vec![usize::MAX; self.n()];
            let mut parent = vec![usize::MAX; self.n()];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.as_ref().is_some_and(|(b, _)| *b <= len) {
                            continue;
                        }
                        let path = |mut v: usize| {
                            let mut p = vec![v];
                            while v != root {
                                v = parent[v];
                                p.push(v);
                            }
                            p
                        };
                        let (pu, pw) = (path(u), path(w));
                        // only a cycle through root if the two tree paths are disjoint
                        if pu[..pu.len() - 1].iter().any(|x| pw.contains(x)) {
                            continue;
                        }
                        let mut cyc: Vec<usize> = pu.into_iter().rev().collect();
                        cyc.extend(pw[..pw.len() - 1].iter());
                        best = Some((cyc.len(), cyc));
                    }
                }
            }
        }
        best
    }

    pub fn girth(&self) -> Option<usize> {
        self.girth_witness().map(|(g, _)| g)
    }

    /// `({b_0, …}, {c_1, …})` if the graph is distance-regular.
    pub fn intersection_array(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let diam = self.diameter()?;
        let mut b: Vec<Option<usize>> = vec![None; diam];
        let mut c: Vec<Option<usize>> = vec![None; diam];
        for v in 0..self.n() {
            let dist = self.distances(v);
            for u in 0..self.n() {
                let i = dist[u];
                let up = self.adj[u].iter().filter(|&&w| dist[w] == i + 1).count();
                let down = self.adj[u]
                    .iter()
                    .filter(|&&w| i > 0 && dist[w] == i - 1)
                    .count();
                if i < diam && *b[i].get_or_insert(up) != up {
                    return None;
                }
                if i > 0 && *c[i - 1].get_or_insert(down) != down {
                    return None;
                }
            }
        }
        Some((
            b.into_iter().flatten().collect(),
            c.into_iter().flatten().collect(),
        ))
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph Cox {\n");
        for (k, l) in self.labels.iter().enumerate() {
            writeln!(s, "  v{k} [label=\"{l}\"];").unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(s, "  v{a} -- v{b};").unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Doc<'a> {
            vertices: &'a [String],
            edges: Vec<[usize; 2]>,
        }
        serde_json::to_value(Doc {
            vertices: &self.labels,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        })
        .expect("plain data serializes")
    }
}

pub fn build_coxeter() -> Graph {
    let vs = cox_vertices();
    let edges = (0..vs.len())
        .tuple_combinations()
        .filter(|&(a, b)| cox_adjacent(&vs[a], &vs[b]))
        .collect();
    Graph::new(vs.iter().map(ToString::to_string).collect(), edges)
}

pub const COXETER_INTERSECTION_ARRAY: ([usize; 4], [usize; 4]) = ([3, 2, 2, 1], [1, 1, 1, 2]);
pub const COXETER_AUT_ORDER: u128 = 336;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ValidationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(ValidationCheck {
            name,
            passed,
            detail,
        });
    }
}

/// Checks `g` against the defining invariants of the Coxeter graph.
pub fn validate_coxeter(g: &Graph) -> ValidationReport {
    validate_coxeter_with_group(g, &automorphism_group(&g.as_digraph()))
}

pub fn validate_coxeter_with_group(g: &Graph, aut: &AutGroup) -> ValidationReport {
    let mut r = ValidationReport::default();

    let bad_degree = (0..g.n()).find(|&v| g.degree(v) != 3);
    r.push(
        "cubic",
        g.n() == 28 && g.edges().len() == 42 && g.is_simple() && bad_degree.is_none(),
        match bad_degree {
            Some(v) => format!("vertex {} has degree {}", g.labels()[v], g.degree(v)),
            None => format!("{} vertices, {} edges", g.n(), g.edges().len()),
        },
    );

    let connected = g.is_connected();
    r.push(
        "connected",
        connected,
        match g.diameter() {
            Some(d) => format!("diameter {d}"),
            None => "disconnected".into(),
        },
    );

    let girth = g.girth_witness();
    r.push(
        "girth",
        girth.as_ref().is_some_and(|(len, _)| *len == 7),
        match &girth {
            Some((len, cyc)) => format!(
                "girth {len}, witness {}",
                cyc.iter().map(|&v| g.labels()[v].as_str()).join(" ")
            ),
            None => "acyclic".into(),
        },
    );

    let array = g.intersection_array();
    let (wb, wc) = COXETER_INTERSECTION_ARRAY;
    r.push(
        "distance-regular",
        array
            .as_ref()
            .is_some_and(|(b, c)| b[..] == wb[..] && c[..] == wc[..]),
        match &array {
            Some((b, c)) => format!("intersection array {b:?};{c:?}"),
            None => "not distance-regular".into(),
        },
    );

    r.push(
        "automorphism-order",
        aut.order() == COXETER_AUT_ORDER,
        format!("|Aut| = {}", aut.order()),
    );

    let orbits = aut.vertex_orbits();
    r.push(
        "vertex-transitive",
        orbits.len() == 1,
        format!("{} vertex orbit(s)", orbits.len()),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn cv(x: u8, e: [(u8, u8); 3]) -> CoxVertex {
        CoxVertex::new(
            Point::new(x),
            e.map(|(b, c)| (Point::new(b), Point::new(c))),
        )
        .unwrap()
    }

    #[test]
    fn vertex_census() {
        let vs = cox_vertices();
        assert_eq!(vs.len(), 28);
        // oracle: 3-subsets of the other points, one per line through x, forming a line
        let mut all = 0;
        for x in Point::ALL {
            for s in Point::ALL.into_iter().filter(|&p| p != x).combinations(3) {
                let one_per_line = lines_through(x)
                    .iter()
                    .all(|l| s.iter().filter(|&&p| l.contains(p)).count() == 1);
                if one_per_line && Line::try_from_points([s[0], s[1], s[2]]).is_ok() {
                    all += 1;
                }
            }
        }
        assert_eq!(all, 28);
        assert!(vs.contains(&cv(0, [(1, 3), (2, 6), (4, 5)])));
        assert!(!vs.contains(&cv(0, [(1, 3), (2, 6), (5, 4)])));
        let set: HashSet<_> = vs.iter().collect();
        assert_eq!(set.len(), 28);
    }

    #[test]
    fn adjacency_example() {
        let p = cv(0, [(1, 3), (2, 6), (4, 5)]);
        let q = cv(3, [(1, 0), (5, 2), (6, 4)]);
        assert!(cox_adjacent(&p, &q));
        assert_eq!(cox_edge_colour(&p, &q), Some(Point::new(1)));
        assert!(!cox_adjacent(&p, &p));

        // a line matching alone does not make an edge
        let r = cv(1, [(2, 4), (3, 0), (5, 6)]);
        let (_, d) = cox_alignment(&p, &r).unwrap();
        let mut d = d.map(Point::value);
        d.sort();
        assert_eq!(d, [2, 3, 5]);
        assert!(!cox_adjacent(&p, &r));
    }

    #[test]
    fn line_matching_alone_is_too_coarse() {
        let vs = cox_vertices();
        for p in &vs {
            let loose = vs.iter().filter(|q| cox_alignment(p, q).is_some()).count();
            assert_eq!(loose, 24);
        }
    }

    #[test]
    fn adjacency_is_disjointness_of_far_colours() {
        // oracle: the far-endpoint colours form a triangle; edges join disjoint ones
        let vs = cox_vertices();
        let far = |v: &CoxVertex| v.entries().map(|e| e.1);
        for p in &vs {
            for q in &vs {
                let disjoint = far(p).iter().all(|c| !far(q).contains(c));
                assert_eq!(cox_adjacent(p, q), disjoint, "{p} {q}");
            }
        }
    }

    #[test]
    fn adjacency_symmetric_and_translation_invariant() {
        let vs = cox_vertices();
        for p in &vs {
            for q in &vs {
                assert_eq!(cox_adjacent(p, q), cox_adjacent(q, p));
                for t in 1..7 {
                    assert_eq!(
                        cox_adjacent(p, q),
                        cox_adjacent(&p.translate(t), &q.translate(t))
                    );
                }
            }
        }
        let mut orbits: HashSet<Vec<CoxVertex>> = HashSet::new();
        for p in &vs {
            let mut o: Vec<_> = (0..7).map(|t| p.translate(t)).collect();
            o.sort();
            o.dedup();
            assert_eq!(o.len(), 7);
            orbits.insert(o);
        }
        assert_eq!(orbits.len(), 4);
    }

    #[test]
    fn graph_invariants() {
        let g = build_coxeter();
        assert_eq!(g.n(), 28);
        assert_eq!(g.edges().len(), 42);
        assert!((0..28).all(|v| g.degree(v) == 3));
        assert!(g.is_connected());
        assert_eq!(g.diameter(), Some(4));
        let (len, cyc) = g.girth_witness().unwrap();
        assert_eq!(len, 7);
        assert_eq!(cyc.len(), 7);
        for k in 0..7 {
            assert!(g.neighbors(cyc[k]).contains(&cyc[(k + 1) % 7]));
        }
        assert_eq!(cyc.iter().collect::<HashSet<_>>().len(), 7);
    }

    #[test]
    fn validation_passes() {
        let rep = validate_coxeter(&build_coxeter());
        assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
        assert_eq!(rep.checks.len(), 6);
    }

    #[test]
    fn moved_edge_fails_validation() {
        let g = build_coxeter();
        let (a, _) = g.edges()[0];
        let far = (0..g.n()).find(|&v| g.distances(a)[v] == 4).unwrap();
        let bad = g.with_edge_replaced(0, a, far);
        let rep = validate_coxeter(&bad);
        assert!(!rep.passed());
        let cubic = &rep.checks[0];
        assert!(!cubic.passed && cubic.detail.contains("degree"));
    }

    // Plain backtracking over vertex images in BFS order, checking every
    // adjacency and non-adjacency against already placed vertices.
    fn brute_automorphism_count(g: &Graph) -> usize {
        fn place(
            g: &Graph,
            order: &[usize],
            img: &mut Vec<Option<usize>>,
            used: &mut [bool],
        ) -> usize {
            let k = img.iter().filter(|i| i.is_some()).count();
            if k == order.len() {
                return 1;
            }
            let v = order[k];
            let mut total = 0;
            for w in 0..g.n() {
                if used[w] {
                    continue;
                }
                let ok = order[..k].iter().all(|&u| {
                    let iu = img[u].unwrap();
                    g.neighbors(v).contains(&u) == g.neighbors(w).contains(&iu)
                });
                if ok {
                    img[v] = Some(w);
                    used[w] = true;
                    total += place(g, order, img, used);
                    img[v] = None;
                    used[w] = false;
                }
            }
            total
        }
        let mut order = vec![0];
        let mut seen = vec![false; g.n()];
        seen[0] = true;
        let mut k = 0;
        while k < order.len() {
            for &w in g.neighbors(order[k]) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            k += 1;
        }
        place(g, &order, &mut vec![None; g.n()], &mut vec![false; g.n()])
    }

    #[test]
    fn automorphism_count_matches_brute_force() {
        let g = build_coxeter();
        assert_eq!(brute_automorphism_count(&g), 336);
        assert_eq!(automorphism_group(&g.as_digraph()).order(), 336);
    }

    #[test]
    fn cycle_graph_is_distance_regular() {
        let g = Graph::new(
            vec![String::new(); 6],
            (0..6).map(|k| (k, (k + 1) % 6)).collect(),
        );
        assert_eq!(g.intersection_array(), Some((vec![2, 1, 1], vec![1, 1, 2])));
        assert_eq!(g.girth(), Some(6));
    }

    #[test]
    fn exports() {
        let g = build_coxeter();
        assert!(g.labels()[0].starts_with("[0,"));
        let dot = g.to_dot();
        assert_eq!(dot.matches(" -- ").count(), 42);
        let j = g.to_json();
        assert_eq!(j["vertices"].as_array().unwrap().len(), 28);
        assert_eq!(j["edges"].as_array().unwrap().len(), 42);
    }
}
