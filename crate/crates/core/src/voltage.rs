//! D as the derived graph of a Z7 voltage graph.
//!
//! Translation by 1 acts freely on D. Picking the smallest vertex of each
//! orbit (the pencils at x = 0) as representative, every vertex is `g^μ(r)`
//! for a unique pair `(r, μ)`, and an arc `r → g^ν(r')` becomes a quotient
//! arc `r → r'` with voltage `ν`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::autos::{translation_automorphism, Permutation};
use crate::dgraph::{OrientedCycle4, ORDER};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::pencil::vertex;

pub const MODULUS: usize = 7;

/// A cyclic group of order 7 acting on vertex indices through one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    generator: Permutation,
}

impl GroupAction {
    pub fn new(generator: Permutation) -> GroupAction {
        GroupAction { generator }
    }

    pub fn generator(&self) -> &Permutation {
        &self.generator
    }

    /// Checks the action is by automorphisms of `d`, has order 7 and is free.
    pub fn validate(&self, d: &Digraph) -> Result<()> {
        let g = &self.generator;
        if g.len() != d.n() {
            return Err(Error::InvalidAction(format!(
                "generator has degree {}, digraph has {} vertices",
                g.len(),
                d.n()
            )));
        }
        if let Some((u, _, v)) = d
            .arcs()
            .find(|&(u, _, v)| !d.has_arc(g.apply(u), g.apply(v)))
        {
            return Err(Error::InvalidAction(format!(
                "arc {} -> {} maps to non-arc {} -> {}",
                label(d, u),
                label(d, v),
                label(d, g.apply(u)),
                label(d, g.apply(v))
            )));
        }
        if !g.pow(MODULUS).is_identity() || g.is_identity() {
            return Err(Error::InvalidAction(
                "generator does not have order 7".into(),
            ));
        }
        // order 7 is prime, so any fixed point of a power is fixed by g itself
        if let Some(v) = (0..d.n()).find(|&v| g.apply(v) == v) {
            return Err(Error::InvalidAction(format!(
                "vertex {} is fixed",
                label(d, v)
            )));
        }
        Ok(())
    }

    /// `(orbit representative, exponent)` for every vertex, representatives
    /// being orbit minima in increasing order.
    fn coordinates(&self) -> (Vec<usize>, Vec<(usize, usize)>) {
        let n = self.generator.len();
        let mut coord = vec![(usize::MAX, 0); n];
        let mut reps = Vec::new();
        for v in 0..n {
            if coord[v].0 != usize::MAX {
                continue;
            }
            let mut w = v;
            for mu in 0..MODULUS {
                coord[w] = (reps.len(), mu);
                w = self.generator.apply(w);
            }
            reps.push(v);
        }
        (reps, coord)
    }

    pub fn orbit_count(&self) -> usize {
        self.coordinates().0.len()
    }
}

/// The translation `j ↦ j + 1` on pencils.
pub fn z7_action() -> GroupAction {
    GroupAction::new(translation_automorphism(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct VoltageArc {
    pub from: usize,
    pub to: usize,
    pub voltage: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoltageGraph {
    labels: Vec<String>,
    reps: Vec<usize>,
    arcs: Vec<VoltageArc>,
}

impl VoltageGraph {
    pub fn new(labels: Vec<String>, reps: Vec<usize>, arcs: Vec<VoltageArc>) -> VoltageGraph {
        assert_eq!(labels.len(), reps.len());
        VoltageGraph { labels, reps, arcs }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The base-graph vertex each quotient vertex stands for.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn arcs(&self) -> &[VoltageArc] {
        &self.arcs
    }

    pub fn out_degree(&self, r: usize) -> usize {
        self.arcs.iter().filter(|a| a.from == r).count()
    }

    pub fn in_degree(&self, r: usize) -> usize {
        self.arcs.iter().filter(|a| a.to == r).count()
    }

    pub fn arcs_from(&self, r: usize) -> impl Iterator<Item = &VoltageArc> {
        self.arcs.iter().filter(move |a| a.from == r)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let arcs: Vec<_> = self
            .arcs
            .iter()
            .map(|a| {
                serde_json::json!({
                    "from": self.labels[a.from],
                    "to": self.labels[a.to],
                    "voltage": a.voltage,
                })
            })
            .collect();
        serde_json::json!({ "reps": self.labels, "arcs": arcs })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph Q {\n");
        for (k, l) in self.labels.iter().enumerate() {
            writeln!(s, "  r{k} [label=\"{l}\"];").unwrap();
        }
        for a in &self.arcs {
            writeln!(s, "  r{} -> r{} [label=\"{}\"];", a.from, a.to, a.voltage).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

fn label(d: &Digraph, v: usize) -> String {
    if d.n() == ORDER {
        vertex(v).to_string()
    } else {
        v.to_string()
    }
}

fn rep_label(d: &Digraph, v: usize) -> String {
    if d.n() == ORDER {
        vertex(v).compact().stem()
    } else {
        v.to_string()
    }
}

/// `D / Z7` with voltages read off the exponent of each arc head.
pub fn quotient(d: &Digraph, a: &GroupAction) -> Result<VoltageGraph> {
    a.validate(d)?;
    let (reps, coord) = a.coordinates();
    let mut arcs = Vec::new();
    for (r, &v) in reps.iter().enumerate() {
        for &w in d.out(v) {
            let (to, voltage) = coord[w];
            arcs.push(VoltageArc {
                from: r,
                to,
                voltage,
            });
        }
    }
    let labels = reps.iter().map(|&v| rep_label(d, v)).collect();
    Ok(VoltageGraph { labels, reps, arcs })
}

/// Derived digraph: vertex `(r, μ)` has index `μ·n + r`, and a quotient arc
/// `r → r'` of voltage `ν` lifts to `(r, μ) → (r', μ + ν)` for every `μ`.
pub fn derive(q: &VoltageGraph) -> Digraph {
    let n = q.n();
    let mut out = vec![Vec::new(); n * MODULUS];
    for mu in 0..MODULUS {
        for a in &q.arcs {
            out[mu * n + a.from].push((mu + a.voltage) % MODULUS * n + a.to);
        }
    }
    Digraph::from_out_lists(out)
}

/// Base-graph index of every derived vertex: `μ·n + r ↦ g^μ(rep r)`.
pub fn canonical_labeling(q: &VoltageGraph, a: &GroupAction) -> Vec<usize> {
    let n = q.n();
    let mut map = vec![0; n * MODULUS];
    for (r, &v) in q.reps.iter().enumerate() {
        let mut w = v;
        for mu in 0..MODULUS {
            map[mu * n + r] = w;
            w = a.generator.apply(w);
        }
    }
    map
}

/// `derive(q)` renamed onto the base graph's vertex indices.
pub fn derive_canonical(q: &VoltageGraph, a: &GroupAction) -> Digraph {
    derive(q).relabeled(&canonical_labeling(q, a))
}

/// First vertex whose out-list differs between two digraphs on the same
/// vertex set.
pub fn first_difference(a: &Digraph, b: &Digraph) -> Option<usize> {
    if a.n() != b.n() {
        return Some(a.n().min(b.n()));
    }
    (0..a.n()).find(|&v| a.out(v) != b.out(v))
}

fn translate_cycle(c: &OrientedCycle4, g: &Permutation) -> OrientedCycle4 {
    OrientedCycle4::new(c.vertices().map(|v| g.apply(v)))
}

/// Orbits of the action on a cycle list, each sorted, in order of first
/// appearance. Images that fall outside the list are left out.
pub fn cycle_orbits(cycles: &[OrientedCycle4], a: &GroupAction) -> Vec<Vec<OrientedCycle4>> {
    let pos: BTreeMap<OrientedCycle4, usize> =
        cycles.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut seen = vec![false; cycles.len()];
    let mut orbits = Vec::new();
    for (k, c) in cycles.iter().enumerate() {
        if seen[k] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut cur = *c;
        for _ in 0..MODULUS {
            if let Some(&j) = pos.get(&cur) {
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(cur);
                }
            }
            cur = translate_cycle(&cur, &a.generator);
        }
        orbit.sort();
        orbits.push(orbit);
    }
    orbits
}

pub fn cycle_orbit_count(cycles: &[OrientedCycle4], a: &GroupAction) -> usize {
    cycle_orbits(cycles, a).len()
}

/// Every cycle projects to a closed quotient walk whose voltages sum to 0.
/// Returns the first cycle for which the walk uses a missing quotient arc
/// or the voltages do not cancel.
pub fn voltage_closure_failure(
    cycles: &[OrientedCycle4],
    q: &VoltageGraph,
    a: &GroupAction,
) -> Option<OrientedCycle4> {
    let map = canonical_labeling(q, a);
    let n = q.n();
    let mut coord = vec![(0, 0); map.len()];
    for (k, &v) in map.iter().enumerate() {
        coord[v] = (k % n, k / n);
    }
    cycles.iter().copied().find(|c| {
        let mut total = 0;
        for (u, v) in c.arcs() {
            let ((ru, mu), (rv, mv)) = (coord[u], coord[v]);
            let nu = (mv + MODULUS - mu) % MODULUS;
            if !q.arcs.contains(&VoltageArc {
                from: ru,
                to: rv,
                voltage: nu,
            }) {
                return true;
            }
            total += nu;
        }
        total % MODULUS != 0
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgraph::{build_d, enumerate_4cycles};
    use crate::pencil::{index_of, parse_compact};

    fn idx(s: &str) -> usize {
        index_of(&parse_compact(s).unwrap())
    }

    #[test]
    fn action_is_free_of_order_seven() {
        let d = build_d();
        let a = z7_action();
        a.validate(&d).unwrap();
        assert_eq!(a.orbit_count(), 24);
        for t in 1..7 {
            assert_eq!(a.generator().pow(t).fixed_points(), 0);
        }
        assert!(a.generator().pow(7).is_identity());
    }

    #[test]
    fn quotient_counts_and_voltages() {
        let d = build_d();
        let q = quotient(&d, &z7_action()).unwrap();
        assert_eq!(q.n(), 24);
        assert_eq!(q.arcs().len(), 72);
        assert!((0..24).all(|r| q.out_degree(r) == 3 && q.in_degree(r) == 3));
        // representatives are exactly the pencils at x = 0
        assert!(q.reps().iter().all(|&v| vertex(v).x().value() == 0));
        // 124_0 -> 165_3, and 165_3 is 532_0 translated by 3
        let r124 = q.labels().iter().position(|l| l == "124").unwrap();
        let r532 = q.labels().iter().position(|l| l == "532").unwrap();
        assert!(q.arcs_from(r124).any(|a| a.to == r532 && a.voltage == 3));
        assert_eq!(q.reps()[r124], idx("124_0"));
        assert_eq!(vertex(idx("532_0")).translate(3), vertex(idx("165_3")));
        // voltages are the subscripts of the x = 0 rows
        for &(row, targets) in crate::dgraph::corrected_sublist().iter() {
            let r = q.labels().iter().position(|l| *l == row[..3]).unwrap();
            let got: Vec<usize> = q.arcs_from(r).map(|a| a.voltage).collect();
            let want: Vec<usize> = targets
                .iter()
                .map(|t| (t.as_bytes()[4] - b'0') as usize)
                .collect();
            assert_eq!(got, want, "{row}");
        }
    }

    #[test]
    fn round_trip() {
        let d = build_d();
        let a = z7_action();
        let q = quotient(&d, &a).unwrap();
        assert_eq!(derive(&q).arc_count(), 504);
        assert_eq!(derive_canonical(&q, &a), d);
    }

    #[test]
    fn loop_lifts_to_a_seven_cycle() {
        let q = VoltageGraph::new(
            vec!["r".into()],
            vec![0],
            vec![VoltageArc {
                from: 0,
                to: 0,
                voltage: 1,
            }],
        );
        let g = derive(&q);
        assert_eq!(g.n(), 7);
        assert!(g.is_strongly_connected());
        assert!((0..7).all(|v| g.out(v) == [(v + 1) % 7]));
    }

    #[test]
    fn cycle_orbits_of_d() {
        let d = build_d();
        let a = z7_action();
        let cycles = enumerate_4cycles(&d);
        let orbits = cycle_orbits(&cycles, &a);
        assert_eq!(orbits.len(), 18);
        assert!(orbits.iter().all(|o| o.len() == 7));
        let ex = OrientedCycle4::new(["253_0", "241_6", "235_0", "214_6"].map(idx));
        let shifted = translate_cycle(&ex, a.generator());
        assert!(orbits
            .iter()
            .any(|o| o.contains(&ex) && o.contains(&shifted)));
        let q = quotient(&d, &a).unwrap();
        assert_eq!(voltage_closure_failure(&cycles, &q, &a), None);
    }

    #[test]
    fn rejects_bad_actions() {
        let d = build_d();
        let bad = d.retarget_arc(0, 0, d.out(0)[1]);
        assert!(
            matches!(quotient(&bad, &z7_action()), Err(Error::InvalidAction(m)) if m.contains("->"))
        );
        let id = GroupAction::new(Permutation::identity(168));
        assert!(quotient(&d, &id).is_err());
        let square = GroupAction::new(translation_automorphism(1).pow(2));
        assert!(quotient(&d, &square).is_ok());
    }

    #[test]
    fn corrupted_voltage_breaks_closure() {
        let d = build_d();
        let a = z7_action();
        let q = quotient(&d, &a).unwrap();
        let mut arcs = q.arcs().to_vec();
        arcs[0].voltage = (arcs[0].voltage + 1) % 7;
        let bad = VoltageGraph::new(q.labels().to_vec(), q.reps().to_vec(), arcs);
        let cycles = enumerate_4cycles(&d);
        assert!(voltage_closure_failure(&cycles, &bad, &a).is_some());
        assert_ne!(derive_canonical(&bad, &a), d);
        assert_eq!(
            first_difference(&derive_canonical(&bad, &a), &d),
            Some(q.reps()[0])
        );
    }

    #[test]
    fn exports_are_stable() {
        let q = quotient(&build_d(), &z7_action()).unwrap();
        let j = q.to_json();
        assert_eq!(j["reps"].as_array().unwrap().len(), 24);
        assert_eq!(j["arcs"][0]["from"], "124");
        assert_eq!(q.to_dot().matches(" -> ").count(), 72);
        assert_eq!(
            q.to_dot(),
            quotient(&build_d(), &z7_action()).unwrap().to_dot()
        );
    }
}
