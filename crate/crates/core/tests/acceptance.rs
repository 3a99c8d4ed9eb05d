//! Acceptance gate: each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.

use std::collections::{HashSet, VecDeque};
use std::panic;
use std::process::ExitCode;

use fanodigraph::autos::{
    automorphism_group, induced_automorphism, is_automorphism, translation_automorphism,
    verify_c4uh, UhMode,
};
use fanodigraph::coxeter::{build_coxeter, validate_coxeter, COXETER_INTERSECTION_ARRAY};
use fanodigraph::dgraph::{
    build_d, cycles_from_step_orbits, enumerate_4cycles, find_short_circuit, short_walk_diagonals,
    step_orbits, sublist_diff, PRINTED_SUBLIST,
};
use fanodigraph::fano::collineations;
use fanodigraph::pencil::enumerate_vertices;
use fanodigraph::verify::{
    coxeter_suite, cycles_suite, digraph_suite, example_cycle, uh_suite, unexpected_table_diff,
    voltage_suite, Check,
};
use fanodigraph::voltage::{cycle_orbits, derive, derive_canonical, quotient, z7_action};
use fanodigraph::Digraph;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn reachable(n: usize, next: impl Fn(usize) -> Vec<usize>) -> usize {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for w in next(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.iter().filter(|&&s| s).count()
}

fn census() -> Outcome {
    let vs = enumerate_vertices();
    let distinct: HashSet<_> = vs.iter().collect();
    ensure!(
        vs.len() == 168 && distinct.len() == 168,
        "{} vertices ({} distinct)",
        vs.len(),
        distinct.len()
    );
    let d = build_d();
    ensure!(d.n() == 168, "digraph has {} vertices", d.n());
    ensure!(d.arc_count() == 504, "{} arcs", d.arc_count());
    for v in 0..d.n() {
        ensure!(
            d.out(v).len() == 3 && d.inn(v).len() == 3,
            "vertex {v} has degrees {}/{}",
            d.out(v).len(),
            d.inn(v).len()
        );
    }
    Ok("168 vertices, 504 arcs, in- and out-degree 3 everywhere".into())
}

fn golden_table() -> Outcome {
    let d = build_d();
    let diff = sublist_diff(&d, &PRINTED_SUBLIST);
    let (unexpected, missing) = unexpected_table_diff(&d);
    let errata = if unexpected.is_empty() && missing.is_empty() {
        "all of them printed symbols that name no vertex"
    } else {
        "including mismatches that are not known misprints"
    };
    ensure!(
        diff.is_empty(),
        "{} of 72 entries differ ({errata}): {}",
        diff.len(),
        diff.iter()
            .map(|m| format!(
                "{}[{}] printed {} generated {}",
                m.row, m.position, m.expected, m.got
            ))
            .collect::<Vec<_>>()
            .join("; ")
    );
    Ok("24 rows x 3 entries match verbatim".into())
}

fn short_circuits() -> Outcome {
    let d = build_d();
    ensure!(
        find_short_circuit(&d).is_none(),
        "direct search found {:?}",
        find_short_circuit(&d)
    );
    let diags = short_walk_diagonals(&d);
    for (k, diag) in diags.iter().enumerate() {
        ensure!(
            diag.is_empty(),
            "A^{} has {} diagonal entries",
            k + 1,
            diag.len()
        );
    }
    // a third, naive oracle: every closed walk of length 1..3
    for u in 0..d.n() {
        for &v in d.out(u) {
            ensure!(v != u && !d.has_arc(v, u), "short circuit through {u}");
            for &w in d.out(v) {
                ensure!(!d.has_arc(w, u), "3-circuit {u} {v} {w}");
            }
        }
    }
    Ok("no circuits of length 1, 2 or 3 (search, matrix powers, closed walks)".into())
}

fn strong_connectivity() -> Outcome {
    let d = build_d();
    let comps = d.strong_components();
    ensure!(comps.len() == 1, "{} strong components", comps.len());
    let fwd = reachable(d.n(), |v| d.out(v).to_vec());
    let back = reachable(d.n(), |v| d.inn(v).to_vec());
    ensure!(
        fwd == 168 && back == 168,
        "BFS reaches {fwd} forward, {back} backward"
    );
    Ok("one strong component; BFS both ways reaches all 168".into())
}

fn cycle_census() -> Outcome {
    let d = build_d();
    let cycles = enumerate_4cycles(&d);
    ensure!(cycles.len() == 126, "{} cycles", cycles.len());
    let mut arcs = HashSet::new();
    for c in &cycles {
        ensure!(c.is_cycle_of(&d), "{:?} is not a cycle", c.vertices());
        for a in c.arcs() {
            ensure!(arcs.insert(a), "arc {a:?} on two cycles");
        }
    }
    let all: HashSet<_> = d.arcs().map(|(u, _, v)| (u, v)).collect();
    ensure!(
        arcs == all,
        "cycles cover {} of {} arcs",
        arcs.len(),
        all.len()
    );
    let from_steps = cycles_from_step_orbits(&d).map_err(|e| format!("{e:?}"))?;
    ensure!(from_steps == cycles, "search and step orbits disagree");
    ensure!(cycles.contains(&example_cycle()), "example cycle missing");
    Ok(
        "126 arc-disjoint 4-cycles covering all 504 arcs; step orbits agree; example present"
            .into(),
    )
}

fn step_law() -> Outcome {
    let d = build_d();
    let orbits = step_orbits(&d).map_err(|e| format!("{e:?}"))?;
    for (slot, per) in orbits.iter().enumerate() {
        ensure!(per.len() == 42, "slot {slot}: {} orbits", per.len());
        ensure!(
            per.iter().all(|o| o.len() == 4),
            "slot {slot}: orbit lengths not all 4"
        );
    }
    Ok("each label map is a permutation with 42 orbits of length 4".into())
}

fn ultrahomogeneity() -> Outcome {
    let d = build_d();
    let sampled = verify_c4uh(&d, UhMode::from_sample(UhMode::DEFAULT_SAMPLE));
    ensure!(
        sampled.flag_transitive == Some(true),
        "fast path: {:?}",
        sampled.flag_transitive
    );
    ensure!(
        sampled.direct_checks >= 100,
        "only {} sampled checks",
        sampled.direct_checks
    );
    ensure!(
        sampled.pass && sampled.failures.is_empty(),
        "sampled: {:?}",
        sampled.failures.first()
    );
    let full = verify_c4uh(&d, UhMode::Exhaustive);
    ensure!(
        full.direct_checks == 126 * 126 * 4,
        "{} exhaustive checks",
        full.direct_checks
    );
    ensure!(
        full.pass && full.failures.is_empty(),
        "exhaustive: {} failures, first {:?}",
        full.failures.len(),
        full.failures.first()
    );
    Ok(format!(
        "fast path + {} sampled extensions; all {} extensions exist",
        sampled.direct_checks, full.direct_checks
    ))
}

fn symmetry_floor() -> Outcome {
    let d = build_d();
    let order = automorphism_group(&d).order();
    ensure!(order.is_multiple_of(504), "|Aut| = {order}");
    let maps: HashSet<_> = collineations().iter().map(induced_automorphism).collect();
    ensure!(
        maps.len() == 168,
        "{} distinct collineation maps",
        maps.len()
    );
    ensure!(
        maps.iter().all(|s| is_automorphism(s, &d)),
        "a collineation map is not an automorphism"
    );
    for t in 0..7 {
        ensure!(
            is_automorphism(&translation_automorphism(t), &d),
            "translation {t}"
        );
    }
    Ok(format!(
        "|Aut| = {order} = 2 x 504; 168 collineations and 7 translations are automorphisms"
    ))
}

fn voltage_round_trip() -> Outcome {
    let d = build_d();
    let a = z7_action();
    let q = quotient(&d, &a).map_err(|e| e.to_string())?;
    ensure!(
        q.n() == 24 && q.arcs().len() == 72,
        "{} reps, {} arcs",
        q.n(),
        q.arcs().len()
    );
    ensure!(
        derive(&q).arc_count() == 504,
        "lift has {} arcs",
        derive(&q).arc_count()
    );
    ensure!(derive_canonical(&q, &a) == d, "lift differs from D");
    let orbits = cycle_orbits(&enumerate_4cycles(&d), &a);
    ensure!(orbits.len() == 18, "{} cycle orbits", orbits.len());
    ensure!(
        orbits.iter().all(|o| o.len() == 7),
        "an orbit is not of size 7"
    );
    Ok("24 reps, 72 arcs, lift equals D, 18 cycle orbits of size 7".into())
}

fn coxeter() -> Outcome {
    let g = build_coxeter();
    ensure!(
        g.n() == 28 && g.edges().len() == 42,
        "{} vertices, {} edges",
        g.n(),
        g.edges().len()
    );
    ensure!((0..28).all(|v| g.degree(v) == 3), "not cubic");
    ensure!(g.is_connected(), "disconnected");
    ensure!(g.girth() == Some(7), "girth {:?}", g.girth());
    let (b, c) = COXETER_INTERSECTION_ARRAY;
    ensure!(
        g.intersection_array() == Some((b.to_vec(), c.to_vec())),
        "array {:?}",
        g.intersection_array()
    );
    let order = automorphism_group(&g.as_digraph()).order();
    ensure!(order == 336, "|Aut| = {order}");
    let report = validate_coxeter(&g);
    ensure!(
        report.passed(),
        "validation: {:?}",
        report.failures().next()
    );
    Ok("28 vertices, 42 edges, cubic, connected, girth 7, {3,2,2,1;1,1,1,2}, |Aut| = 336".into())
}

/// The failing check of a suite run, which must exist and locate its fault.
fn located(suite: &str, checks: &[Check], marker: impl Fn(&str) -> bool) -> Result<String, String> {
    let f = checks
        .iter()
        .find(|c| !c.passed())
        .ok_or_else(|| format!("{suite} suite did not notice the fault"))?;
    ensure!(
        marker(&f.detail),
        "{suite}: {} failed without a witness: {}",
        f.name,
        f.detail
    );
    Ok(format!("{suite}/{}", f.name))
}

fn names_vertex(s: &str) -> bool {
    // compact symbols look like 124_0
    s.as_bytes()
        .windows(5)
        .any(|w| w[..3].iter().all(u8::is_ascii_digit) && w[3] == b'_' && w[4].is_ascii_digit())
}

fn fault_injection() -> Outcome {
    let d = build_d();
    let mutants: Vec<(&str, Digraph)> = vec![
        (
            "arc of vertex 0 sent to its sibling",
            d.retarget_arc(0, 0, d.out(0)[1]),
        ),
        (
            "arc of vertex 17 sent to vertex 100",
            d.retarget_arc(17, 2, 100),
        ),
    ];
    let mut caught = Vec::new();
    for (what, bad) in &mutants {
        let mode = UhMode::from_sample(UhMode::DEFAULT_SAMPLE);
        let suites: [(&str, Vec<Check>); 4] = [
            ("digraph", digraph_suite(bad)),
            ("cycles", cycles_suite(bad)),
            ("uh", uh_suite(bad, mode).0),
            ("voltage", voltage_suite(bad)),
        ];
        for (name, checks) in &suites {
            caught.push(located(name, checks, names_vertex).map_err(|e| format!("{what}: {e}"))?);
        }
        let uh = suites[2].1.iter().find(|c| c.name == "c4-uh").unwrap();
        ensure!(
            !uh.passed() && names_vertex(&uh.detail),
            "{what}: c4-uh gave {}",
            uh.detail
        );
    }
    let g = build_coxeter();
    let (a, _) = g.edges()[0];
    let far = (0..g.n()).find(|&v| g.distances(a)[v] == 4).unwrap();
    let bad = g.with_edge_replaced(0, a, far);
    caught.push(located("coxeter", &coxeter_suite(&bad), |s| {
        s.contains('[')
    })?);
    Ok(format!("caught with witnesses: {}", caught.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("vertex/arc census", census),
        ("golden table verbatim", golden_table),
        ("no short circuits", short_circuits),
        ("strong connectivity", strong_connectivity),
        ("4-cycle census", cycle_census),
        ("step-permutation law", step_law),
        ("C4-ultrahomogeneity", ultrahomogeneity),
        ("symmetry floor", symmetry_floor),
        ("voltage round trip", voltage_round_trip),
        ("Coxeter validation", coxeter),
        ("fault injection", fault_injection),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("CRITERION {:>2} {name}: PASS - {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("CRITERION {:>2} {name}: FAIL - {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
