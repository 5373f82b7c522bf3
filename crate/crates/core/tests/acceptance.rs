//! End-to-end acceptance checks. Each test prints a single pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`) and then
//! asserts, so a red run also shows which cases broke.

use std::time::Instant;

use ecci::bounds::{check_all_bounds, check_bound, BoundId};
use ecci::enumerate::{connected_graphs, free_trees, verify_proposition, PropId};
use ecci::families::{a_nm, FamilySpec};
use ecci::formats::{read_graph6, write_graph6};
use ecci::graph::Graph;
use ecci::invariants::eccentric_connectivity_index;
use ecci::transforms::{find_lemma1_sites, find_lemma2_sites, lemma1_apply, lemma2_apply};

fn xi(g: &Graph) -> u64 {
    eccentric_connectivity_index(g).unwrap()
}

fn conclude(label: &str, started: Instant, failures: Vec<String>) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("acceptance {label}: {status} ({:.2?})", started.elapsed());
    assert!(failures.is_empty(), "{label}\n{}", failures.join("\n"));
}

/// Every spec with a closed form, over all parameter choices with n <= 40.
fn closed_form_specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 1..=40usize {
        specs.push(FamilySpec::Path { n });
        specs.push(FamilySpec::Star { n });
        specs.push(FamilySpec::Complete { n });
        if n >= 3 {
            specs.push(FamilySpec::Cycle { n });
        }
        for k in 0..=n / 2 {
            if !(n == 2 && k == 1) {
                specs.push(FamilySpec::CompleteMinusMatching { n, k });
            }
        }
        if n >= 4 {
            specs.push(FamilySpec::StarPlusEdges { n, t: 1, adjacent: true });
        }
        if n >= 5 {
            for adjacent in [true, false] {
                specs.push(FamilySpec::StarPlusEdges { n, t: 2, adjacent });
            }
        }
        if n >= 4 {
            for d in 2..=n - 2 {
                for j in 0..=n - d - 1 {
                    specs.push(FamilySpec::TreeDiamMin { n, d, j });
                }
            }
            for p in 2..=n - 2 {
                for a in 1..=p / 2 {
                    specs.push(FamilySpec::TreePendMax { n, p, a });
                }
            }
            for a in 1..=(n - 2) / 2 {
                specs.push(FamilySpec::DoubleStar { n, a });
            }
            specs.push(FamilySpec::PathPlusPendant { n, i: 1 });
        }
        if n >= 6 {
            specs.push(FamilySpec::PathPlusPendant { n, i: 2 });
        }
        if n >= 3 {
            for a in 1..=n - 2 {
                let m = a * (a - 1) / 2 + a * (n - a);
                specs.push(FamilySpec::JoinExtremal { n, m });
            }
        }
    }
    for r in 2..=38usize {
        for s in r..=40 - r {
            specs.push(FamilySpec::CompleteBipartite { r, s });
        }
    }
    specs
}

#[test]
fn c1_closed_forms_agree_with_built_graphs() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let specs = closed_form_specs();
    let cases = specs.len();
    for spec in specs {
        let expected = match spec.closed_form_xi() {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("{spec:?}: no closed form ({e})"));
                continue;
            }
        };
        let built = match spec.build() {
            Ok(g) => g,
            Err(e) => {
                failures.push(format!("{spec:?}: build failed ({e})"));
                continue;
            }
        };
        let direct = xi(&built);
        if direct != expected {
            failures.push(format!("{spec:?}: built xi = {direct}, formula gives {expected}"));
        }
        if let FamilySpec::JoinExtremal { n, m } = spec {
            let a = a_nm(n, m).unwrap();
            if m != a * (a - 1) / 2 + a * (n - a) {
                failures.push(format!("{spec:?}: a(n, m) = {a} does not invert the edge count"));
            }
        }
    }
    conclude(
        &format!("c1 closed forms agree with built graphs, {cases} cases"),
        started,
        failures,
    );
}

#[test]
fn c2_bottom_three_tree_classes_up_to_twelve() {
    let started = Instant::now();
    let verdict = verify_proposition(PropId::P7, 6..=12).unwrap();
    let failures = if verdict.passed { Vec::new() } else { verdict.mismatches };
    conclude("c2 bottom three tree value classes, n = 6..=12", started, failures);
}

#[test]
fn c3_top_three_tree_classes_up_to_twelve() {
    let started = Instant::now();
    let verdict = verify_proposition(PropId::P9, 6..=12).unwrap();
    let failures = if verdict.passed { Vec::new() } else { verdict.mismatches };
    conclude("c3 top three tree value classes, n = 6..=12", started, failures);
}

#[test]
fn c4_constrained_tree_extremes_up_to_twelve() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for id in [PropId::P6, PropId::P8] {
        let verdict = verify_proposition(id, 5..=12).unwrap();
        if !verdict.passed {
            failures.extend(verdict.mismatches);
        }
    }
    conclude(
        "c4 diameter minima and pendent-count maxima, n = 5..=12",
        started,
        failures,
    );
}

#[test]
fn c5_bounds_hold_on_every_small_connected_graph() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let equivalence_ids = [
        BoundId::Prop1Lower,
        BoundId::Prop1Upper,
        BoundId::Prop2StarMin,
        BoundId::Prop3Join,
        BoundId::Prop5Zagreb,
    ];
    let mut checked = 0usize;
    for n in 1..=7usize {
        let graphs = connected_graphs(n, None).unwrap();
        if n == 7 && graphs.len() != 853 {
            failures.push(format!("expected 853 connected graphs on 7 vertices, got {}", graphs.len()));
        }
        for g in &graphs {
            checked += 1;
            let code = write_graph6(g).unwrap();
            for r in check_all_bounds(g).unwrap() {
                if !r.holds {
                    failures.push(format!("{} violated on {code}", r.bound.name()));
                }
                if r.applicable
                    && equivalence_ids.contains(&r.bound)
                    && Some(r.tight) != r.extremal_class_member
                {
                    failures.push(format!(
                        "{} on {code}: tight = {}, class member = {:?}",
                        r.bound.name(),
                        r.tight,
                        r.extremal_class_member
                    ));
                }
            }
        }
    }
    conclude(
        &format!("c5 bound soundness and equality classes on {checked} connected graphs, n <= 7"),
        started,
        failures,
    );
}

#[test]
fn c6_rewrites_are_strictly_monotone_on_all_small_trees() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let (mut collapses, mut pushes) = (0usize, 0usize);
    for n in 4..=10usize {
        for tree in free_trees(n).unwrap() {
            let before = xi(&tree);
            for site in find_lemma1_sites(&tree).unwrap() {
                collapses += 1;
                let after = xi(&lemma1_apply(&site).unwrap());
                if after >= before {
                    failures.push(format!(
                        "collapse at (u = {}, v = {}) on {}: xi {before} -> {after}",
                        site.u,
                        site.v,
                        write_graph6(&tree).unwrap()
                    ));
                }
            }
            for site in find_lemma2_sites(&tree).unwrap() {
                pushes += 1;
                let after = xi(&lemma2_apply(&site).unwrap());
                if after <= before {
                    failures.push(format!(
                        "push at (x = {}, y = {}) on {}: xi {before} -> {after}",
                        site.x,
                        site.y,
                        write_graph6(&tree).unwrap()
                    ));
                }
            }
        }
    }
    if collapses < 50 || pushes < 50 {
        failures.push(format!(
            "too few sites exercised: {collapses} collapses, {pushes} pushes"
        ));
    }
    conclude(
        &format!("c6 strict monotonicity of {collapses} collapses and {pushes} pushes, trees n <= 10"),
        started,
        failures,
    );
}

#[test]
fn c7_known_values_spot_checks() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let spots: [(FamilySpec, u64); 4] = [
        (FamilySpec::Path { n: 4 }, 14),
        (FamilySpec::Cycle { n: 6 }, 36),
        (FamilySpec::CompleteBipartite { r: 2, s: 3 }, 24),
        (FamilySpec::Star { n: 6 }, 15),
    ];
    for (spec, expected) in spots {
        let got = xi(&spec.build().unwrap());
        if got != expected {
            failures.push(format!("{spec:?}: xi = {got}, expected {expected}"));
        }
    }
    let c5 = FamilySpec::Cycle { n: 5 }.build().unwrap();
    let sum = xi(&c5) + xi(&c5.complement());
    if sum != 40 {
        failures.push(format!("five-cycle plus complement: sum = {sum}, expected 40"));
    }
    let r = check_bound(&c5, BoundId::Cor1Sum).unwrap();
    if !(r.applicable && r.holds && r.tight && r.xi_value == Some(40)) {
        failures.push(format!("complement-sum bound on the five-cycle not tight: {r:?}"));
    }
    conclude("c7 known-value spot checks", started, failures);
}

#[test]
fn c8_graph6_round_trips_every_small_connected_graph() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for n in 1..=7usize {
        for g in connected_graphs(n, None).unwrap() {
            checked += 1;
            let code = write_graph6(&g).unwrap();
            let back = read_graph6(&code).unwrap();
            if back.n() != g.n() || back.edges() != g.edges() {
                failures.push(format!("round trip changed {code}"));
            }
        }
    }
    let k4 = read_graph6("C~").unwrap();
    if k4.n() != 4 || k4.m() != 6 {
        failures.push("\"C~\" did not decode to the complete graph on 4 vertices".into());
    }
    if write_graph6(&FamilySpec::Complete { n: 4 }.build().unwrap()).unwrap() != "C~" {
        failures.push("the complete graph on 4 vertices did not encode to \"C~\"".into());
    }
    let p4 = read_graph6("Ch").unwrap();
    if p4.edges() != vec![(0, 1), (1, 2), (2, 3)] {
        failures.push("\"Ch\" did not decode to the 0-1-2-3 path".into());
    }
    if write_graph6(&FamilySpec::Path { n: 4 }.build().unwrap()).unwrap() != "Ch" {
        failures.push("the 0-1-2-3 path did not encode to \"Ch\"".into());
    }
    conclude(
        &format!("c8 graph6 round trip on {checked} connected graphs and the fixed literals"),
        started,
        failures,
    );
}
