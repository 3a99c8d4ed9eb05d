//! The oriented graph on ordered pencils and its 4-cycle structure.
//!
//! Vertex `k` of every [`Digraph`] built here is `pencil::vertex(k)`, and the
//! out-list of each vertex holds the arcs labelled `1`, `2`, `0` in that order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::digraph::Digraph;
use crate::pencil::{index_of, vertex, vertices, ArcLabel, DVertex};

/// Number of vertices of the pencil digraph.
pub const ORDER: usize = 168;

/// Label `i` such that `u → v` satisfies the arc rule at slot `i`, if any.
pub fn arc_label(u: &DVertex, v: &DVertex) -> Option<ArcLabel> {
    ArcLabel::ALL.into_iter().find(|&i| arc_rule_holds(u, v, i))
}

/// All labels for which the arc rule holds; at most one for distinct vertices.
pub fn matching_labels(u: &DVertex, v: &DVertex) -> Vec<ArcLabel> {
    ArcLabel::ALL
        .into_iter()
        .filter(|&i| arc_rule_holds(u, v, i))
        .collect()
}

fn arc_rule_holds(u: &DVertex, v: &DVertex, i: ArcLabel) -> bool {
    let (n, p) = (i.succ(), i.pred());
    u.x() == v.c_at(i)
        && v.x() == u.c_at(i)
        && v.b_at(i) == u.b_at(i)
        && v.b_at(n) == u.c_at(n)
        && v.b_at(p) == u.c_at(p)
        && v.c_at(n) == u.b_at(p)
        && v.c_at(p) == u.b_at(n)
}

/// The out-neighbour of `u` along label `i`.
pub fn step(u: &DVertex, i: ArcLabel) -> DVertex {
    let mut b = [u.b()[0]; 3];
    b[i.slot()] = u.b_at(i);
    b[i.succ().slot()] = u.c_at(i.succ());
    b[i.pred().slot()] = u.c_at(i.pred());
    DVertex::new(u.c_at(i), b).expect("the arc rule always lands on a vertex")
}

pub fn build_d() -> Digraph {
    let out = vertices()
        .iter()
        .map(|u| {
            ArcLabel::ALL
                .iter()
                .map(|&i| index_of(&step(u, i)))
                .collect()
        })
        .collect();
    Digraph::from_out_lists(out)
}

/// The adjacency sub-list from the vertices `yup_0` as printed in the source
/// table, in its printed order. Six entries are misprints; see [`SUBLIST_ERRATA`].
pub const PRINTED_SUBLIST: [(&str, [&str; 3]); 24] = [
    ("124_0", ["165_3", "325_6", "364_5"]),
    ("142_0", ["156_3", "346_5", "352_6"]),
    ("235_0", ["214_6", "634_1", "615_6"]),
    ("253_0", ["241_6", "651_4", "643_6"]),
    ("346_0", ["352_1", "142_5", "156_2"]),
    ("364_0", ["325_1", "165_2", "124_5"]),
    ("156_0", ["142_3", "352_4", "346_2"]),
    ("165_0", ["124_3", "364_2", "325_4"]),
    ("214_0", ["235_6", "615_3", "634_5"]),
    ("241_0", ["253_6", "643_5", "651_3"]),
    ("325_0", ["364_1", "124_6", "165_1"]),
    ("352_0", ["346_1", "156_4", "142_1"]),
    ("436_0", ["412_5", "532_1", "516_2"]),
    ("463_0", ["421_5", "561_2", "523_1"]),
    ("516_0", ["532_4", "412_3", "436_2"]),
    ("561_0", ["523_4", "463_2", "421_3"]),
    ("412_0", ["436_5", "516_3", "532_6"]),
    ("421_0", ["463_5", "523_6", "561_3"]),
    ("523_0", ["561_4", "421_6", "463_4"]),
    ("532_0", ["516_4", "436_1", "412_4"]),
    ("634_0", ["615_2", "235_1", "214_5"]),
    ("643_0", ["651_2", "241_5", "253_1"]),
    ("615_0", ["634_2", "214_3", "235_4"]),
    ("651_0", ["643_2", "253_4", "241_3"]),
];

/// Misprinted entries of [`PRINTED_SUBLIST`]: `(row, position, printed, arc rule)`.
/// Each printed symbol has its subscript on its own line, so it names no vertex.
pub const SUBLIST_ERRATA: [(&str, usize, &str, &str); 6] = [
    ("235_0", 2, "615_6", "615_4"),
    ("253_0", 2, "643_6", "643_1"),
    ("325_0", 2, "165_1", "165_4"),
    ("352_0", 2, "142_1", "142_6"),
    ("523_0", 2, "463_4", "463_1"),
    ("532_0", 2, "412_4", "412_6"),
];

/// Row/column symbol table: `SYMBOL_TABLE[i][k]` is the line in row `i`
/// (`a..f`) and column `j = [0, 1, 2, 4][k]`.
pub const SYMBOL_TABLE: [[&str; 4]; 6] = [
    ["124", "235", "346", "156"],
    ["142", "253", "364", "165"],
    ["214", "325", "436", "516"],
    ["241", "352", "463", "561"],
    ["412", "523", "634", "615"],
    ["421", "532", "643", "651"],
];

pub const SYMBOL_TABLE_COLUMNS: [u8; 4] = [0, 1, 2, 4];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableMismatch {
    pub row: String,
    pub position: usize,
    pub expected: String,
    pub got: String,
}

/// Generated out-list of `yup_0` as compact symbols, in label order.
pub fn sublist_row(d: &Digraph, row: &DVertex) -> Vec<String> {
    d.out(index_of(row))
        .iter()
        .map(|&w| vertex(w).to_string())
        .collect()
}

/// Compares the rows of `d` departing from `yup_0` with `table`, entry by entry.
pub fn sublist_diff(d: &Digraph, table: &[(&str, [&str; 3])]) -> Vec<TableMismatch> {
    let mut diff = Vec::new();
    for (row, expected) in table {
        let v: DVertex = match row.parse() {
            Ok(v) => v,
            Err(_) => {
                diff.push(TableMismatch {
                    row: row.to_string(),
                    position: 0,
                    expected: row.to_string(),
                    got: "<not a vertex>".into(),
                });
                continue;
            }
        };
        let got = sublist_row(d, &v);
        for (k, e) in expected.iter().enumerate() {
            let g = got.get(k).map(String::as_str).unwrap_or("<missing>");
            if g != *e {
                diff.push(TableMismatch {
                    row: row.to_string(),
                    position: k,
                    expected: e.to_string(),
                    got: g.to_string(),
                });
            }
        }
        for (k, g) in got.iter().enumerate().skip(expected.len()) {
            diff.push(TableMismatch {
                row: row.to_string(),
                position: k,
                expected: "<none>".into(),
                got: g.clone(),
            });
        }
    }
    diff
}

/// Exact comparison against the printed table.
pub fn golden_sublist_check(d: &Digraph) -> Result<(), Vec<TableMismatch>> {
    let diff = sublist_diff(d, &PRINTED_SUBLIST);
    if diff.is_empty() {
        Ok(())
    } else {
        Err(diff)
    }
}

/// The printed table with the errata applied.
pub fn corrected_sublist() -> Vec<(&'static str, [&'static str; 3])> {
    PRINTED_SUBLIST
        .iter()
        .map(|&(row, mut entries)| {
            for &(r, pos, _, fixed) in &SUBLIST_ERRATA {
                if r == row {
                    entries[pos] = fixed;
                }
            }
            (row, entries)
        })
        .collect()
}

/// Sub-list in the printed row order and layout, one row per line.
pub fn render_sublist(d: &Digraph) -> String {
    let mut s = String::new();
    for (row, _) in PRINTED_SUBLIST {
        let v: DVertex = row.parse().unwrap();
        writeln!(s, "{} : {}", row, sublist_row(d, &v).join(", ")).unwrap();
    }
    s
}

/// A directed 4-cycle, rotated so that its smallest vertex comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedCycle4([usize; 4]);

impl OrientedCycle4 {
    pub fn new(mut vs: [usize; 4]) -> OrientedCycle4 {
        let m = (0..4).min_by_key(|&k| vs[k]).unwrap();
        vs.rotate_left(m);
        OrientedCycle4(vs)
    }

    pub fn vertices(&self) -> [usize; 4] {
        self.0
    }

    /// Arcs `(v_k, v_{k+1})`, cyclically.
    pub fn arcs(&self) -> [(usize, usize); 4] {
        let v = self.0;
        [(v[0], v[1]), (v[1], v[2]), (v[2], v[3]), (v[3], v[0])]
    }

    pub fn is_cycle_of(&self, d: &Digraph) -> bool {
        let set: BTreeSet<usize> = self.0.into_iter().collect();
        set.len() == 4 && self.arcs().iter().all(|&(u, v)| d.has_arc(u, v))
    }

    pub fn symbols(&self) -> [String; 4] {
        self.0.map(|k| vertex(k).to_string())
    }
}

/// Every directed 4-cycle by depth-first search from its minimum vertex.
pub fn enumerate_4cycles(d: &Digraph) -> Vec<OrientedCycle4> {
    let mut cycles = Vec::new();
    for s in 0..d.n() {
        for &a in d.out(s).iter().filter(|&&a| a > s) {
            for &b in d.out(a).iter().filter(|&&b| b > s && b != a) {
                for &c in d.out(b).iter().filter(|&&c| c > s && c != a && c != b) {
                    if d.has_arc(c, s) {
                        cycles.push(OrientedCycle4([s, a, b, c]));
                    }
                }
            }
        }
    }
    cycles.sort();
    cycles.dedup();
    cycles
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOrbitError {
    /// Some vertex has no arc in this slot.
    MissingSlot { vertex: usize, slot: usize },
    /// Two vertices share their `slot` out-neighbour.
    NotAPermutation { slot: usize, target: usize },
    /// An orbit of a label map whose length is not 4.
    BadOrbit { slot: usize, orbit: Vec<usize> },
}

/// Orbits of each of the three label maps `v ↦ out(v)[slot]`.
pub fn step_orbits(d: &Digraph) -> Result<[Vec<Vec<usize>>; 3], StepOrbitError> {
    let mut all: [Vec<Vec<usize>>; 3] = Default::default();
    for (slot, orbits) in all.iter_mut().enumerate() {
        let mut preimage = vec![usize::MAX; d.n()];
        for v in 0..d.n() {
            let w = *d
                .out(v)
                .get(slot)
                .ok_or(StepOrbitError::MissingSlot { vertex: v, slot })?;
            if preimage[w] != usize::MAX {
                return Err(StepOrbitError::NotAPermutation { slot, target: w });
            }
            preimage[w] = v;
        }
        let mut seen = vec![false; d.n()];
        for v in 0..d.n() {
            if seen[v] {
                continue;
            }
            let mut orbit = vec![v];
            seen[v] = true;
            let mut w = d.out(v)[slot];
            while w != v {
                seen[w] = true;
                orbit.push(w);
                w = d.out(w)[slot];
            }
            orbits.push(orbit);
        }
    }
    Ok(all)
}

/// The 4-cycles obtained as orbits of the label maps.
pub fn cycles_from_step_orbits(d: &Digraph) -> Result<Vec<OrientedCycle4>, StepOrbitError> {
    let orbits = step_orbits(d)?;
    let mut cycles = Vec::new();
    for (slot, per_slot) in orbits.into_iter().enumerate() {
        for orbit in per_slot {
            match <[usize; 4]>::try_from(orbit.as_slice()) {
                Ok(vs) => cycles.push(OrientedCycle4::new(vs)),
                Err(_) => return Err(StepOrbitError::BadOrbit { slot, orbit }),
            }
        }
    }
    cycles.sort();
    Ok(cycles)
}

/// A loop, 2-circuit or 3-circuit, if one exists.
pub fn find_short_circuit(d: &Digraph) -> Option<Vec<usize>> {
    for v in 0..d.n() {
        for &w in d.out(v) {
            if w == v {
                return Some(vec![v]);
            }
            if d.has_arc(w, v) {
                return Some(vec![v, w]);
            }
            for &z in d.out(w) {
                if z != v && z != w && d.has_arc(z, v) {
                    return Some(vec![v, w, z]);
                }
            }
        }
    }
    None
}

pub fn check_no_short_circuits(d: &Digraph) -> bool {
    find_short_circuit(d).is_none()
}

/// Vertices on the diagonals of `A`, `A²`, `A³` (boolean powers).
pub fn short_walk_diagonals(d: &Digraph) -> [Vec<usize>; 3] {
    let a = d.bool_matrix();
    let a2 = a.mul(&a);
    let a3 = a2.mul(&a);
    [
        a.diagonal_support(),
        a2.diagonal_support(),
        a3.diagonal_support(),
    ]
}

pub fn strongly_connected(d: &Digraph) -> bool {
    d.is_strongly_connected()
}

/// DOT rendering with compact-symbol vertex names and arc labels.
pub fn to_dot(d: &Digraph) -> String {
    let mut s = String::from("digraph D {\n");
    for k in 0..d.n() {
        writeln!(s, "  v{k} [label=\"{}\"];", vertex(k)).unwrap();
    }
    for (u, slot, v) in d.arcs() {
        writeln!(
            s,
            "  v{u} -> v{v} [label=\"{}\"];",
            ArcLabel::from_slot(slot)
        )
        .unwrap();
    }
    s.push_str("}\n");
    s
}

#[derive(Serialize)]
struct JsonArc {
    from: String,
    to: String,
    label: u8,
}

#[derive(Serialize)]
struct JsonDigraph {
    vertices: Vec<String>,
    arcs: Vec<JsonArc>,
    cycles: Vec<[String; 4]>,
}

/// `{"vertices", "arcs", "cycles"}` in canonical order.
pub fn to_json(d: &Digraph) -> serde_json::Value {
    let doc = JsonDigraph {
        vertices: (0..d.n()).map(|k| vertex(k).to_string()).collect(),
        arcs: d
            .arcs()
            .map(|(u, slot, v)| JsonArc {
                from: vertex(u).to_string(),
                to: vertex(v).to_string(),
                label: ArcLabel::from_slot(slot).value(),
            })
            .collect(),
        cycles: enumerate_4cycles(d).iter().map(|c| c.symbols()).collect(),
    };
    serde_json::to_value(doc).expect("plain data serializes")
}
