//! Exhaustive generation of small trees and connected graphs, ranking by the
//! eccentric connectivity index, and mechanical verification of the extremal
//! statements the rest of the crate implements in closed form.

use serde::{Serialize, Serializer};
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::bounds::{check_bound, BoundId};
use crate::canon::{
    canonical_graph_code_small, canonical_tree_code, graph_from_mask, pair_count, pair_list,
    permutations, permute_mask, CanonicalCode,
};
use crate::error::{Error, Result};
use crate::families::{a_nm, diam_min_xi, family_size, path_xi, pend_max_xi, FamilySpec};
use crate::formats::write_graph6;
use crate::graph::Graph;
use crate::invariants::eccentric_connectivity_index;

/// Tree streams stop here; the level-extension generator is exact but not
/// built for bulk.
pub const FREE_TREE_MAX: usize = 16;
/// Connected-graph streams stop here (2^21 labelled graphs on 7 vertices).
pub const GRAPH_ENUM_MAX: usize = 7;
/// Cap for tree-side verification runs.
pub const TREE_VERIFY_MAX: usize = 14;

/// One representative per isomorphism class of trees on `n` vertices, grown
/// by attaching a new leaf everywhere on every (n-1)-vertex tree and
/// deduplicating by canonical code. Order is deterministic.
pub fn free_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Domain("tree enumeration needs n >= 1".into()));
    }
    if n > FREE_TREE_MAX {
        return Err(Error::EnumerationLimit { n, max: FREE_TREE_MAX });
    }
    let mut level = vec![Graph::from_edge_list(1, &[]).unwrap()];
    for size in 2..=n {
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for tree in &level {
            for v in 0..tree.n() {
                let mut edges = tree.edges();
                edges.push((v, size - 1));
                let grown = Graph::from_edge_list(size, &edges).unwrap();
                if seen.insert(canonical_tree_code(&grown)?) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let np = pairs.len();
    let mut rows = [0u8; GRAPH_ENUM_MAX];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> (np - 1 - k) & 1 == 1 {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
    }
    let all = if n == 8 { u8::MAX } else { (1u8 << n) - 1 };
    let mut reach = 1u8;
    loop {
        let mut next = reach;
        for (i, &row) in rows.iter().enumerate().take(n) {
            if reach >> i & 1 == 1 {
                next |= row;
            }
        }
        if next == reach {
            return reach == all;
        }
        reach = next;
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, optionally restricted to `m` edges. Scans adjacency bitmasks in
/// ascending order; the first unseen connected mask is the lexicographically
/// least of its orbit, and its whole orbit is then marked seen.
pub fn connected_graphs(n: usize, m: Option<usize>) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Domain("graph enumeration needs n >= 1".into()));
    }
    if n > GRAPH_ENUM_MAX {
        return Err(Error::EnumerationLimit { n, max: GRAPH_ENUM_MAX });
    }
    let np = pair_count(n);
    let pairs = pair_list(n);
    let perms = permutations(n);
    let mut seen = vec![false; 1usize << np];
    let mut out = Vec::new();
    for mask in 0..1u32 << np {
        if seen[mask as usize] {
            continue;
        }
        let edges = mask.count_ones() as usize;
        if m.is_some_and(|want| edges != want) || edges + 1 < n {
            continue;
        }
        if !mask_connected(n, &pairs, mask) {
            continue;
        }
        for p in &perms {
            seen[permute_mask(np, &pairs, mask, p) as usize] = true;
        }
        out.push(graph_from_mask(n, mask));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankOrder {
    MinFirst,
    MaxFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeConstraint {
    None,
    Diameter(usize),
    Pendents(usize),
}

#[derive(Clone, Debug)]
pub struct RankedEntry {
    pub code: CanonicalCode,
    pub graph: Graph,
    pub xi: u64,
}

/// An exhaustive ranking of trees by index value, ties broken by canonical
/// code so the output is a deterministic golden file.
#[derive(Clone, Debug)]
pub struct RankedList {
    pub entries: Vec<RankedEntry>,
    pub order: RankOrder,
    pub scope: String,
}

pub fn rank_trees(
    n: usize,
    order: RankOrder,
    constraint: TreeConstraint,
    top: usize,
) -> Result<RankedList> {
    let mut entries = Vec::new();
    for graph in free_trees(n)? {
        let keep = match constraint {
            TreeConstraint::None => true,
            TreeConstraint::Diameter(d) => graph.eccentricity_profile()?.diameter == d,
            TreeConstraint::Pendents(p) => graph.pendent_count() == p,
        };
        if keep {
            entries.push(RankedEntry {
                code: canonical_tree_code(&graph)?,
                xi: eccentric_connectivity_index(&graph)?,
                graph,
            });
        }
    }
    entries.sort_by(|a, b| match order {
        RankOrder::MinFirst => a.xi.cmp(&b.xi).then_with(|| a.code.cmp(&b.code)),
        RankOrder::MaxFirst => b.xi.cmp(&a.xi).then_with(|| a.code.cmp(&b.code)),
    });
    entries.truncate(top);
    let scope = match constraint {
        TreeConstraint::None => format!("trees on {n} vertices"),
        TreeConstraint::Diameter(d) => format!("trees on {n} vertices with diameter {d}"),
        TreeConstraint::Pendents(p) => {
            format!("trees on {n} vertices with {p} pendent vertices")
        }
    };
    Ok(RankedList { entries, order, scope })
}

/// The extremal statements this crate can verify mechanically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PropId {
    P2,
    P3,
    P5,
    P6,
    P7,
    P8,
    P9,
}

impl PropId {
    pub const ALL: [PropId; 7] =
        [PropId::P2, PropId::P3, PropId::P5, PropId::P6, PropId::P7, PropId::P8, PropId::P9];

    pub fn name(self) -> &'static str {
        match self {
            PropId::P2 => "P2",
            PropId::P3 => "P3",
            PropId::P5 => "P5",
            PropId::P6 => "P6",
            PropId::P7 => "P7",
            PropId::P8 => "P8",
            PropId::P9 => "P9",
        }
    }

    /// Smallest n at which the statement is asserted.
    pub fn n_min(self) -> usize {
        match self {
            PropId::P2 => 4,
            PropId::P3 | PropId::P5 => 3,
            PropId::P6 | PropId::P8 => 4,
            PropId::P7 | PropId::P9 => 6,
        }
    }

    /// Largest n the built-in enumeration can cover.
    pub fn n_cap(self) -> usize {
        match self {
            PropId::P2 | PropId::P3 | PropId::P5 => GRAPH_ENUM_MAX,
            _ => TREE_VERIFY_MAX,
        }
    }
}

impl fmt::Display for PropId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropId::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown proposition id \"{s}\"")))
    }
}

impl Serialize for PropId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// One checked parameter point: the extremal value found there, the graphs
/// attaining it, and the class the statement predicts (both as graph6).
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub point: String,
    pub extremal_value: u64,
    pub found_class: Vec<String>,
    pub expected_class: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationVerdict {
    pub id: PropId,
    pub n_range: (usize, usize),
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    pub mismatches: Vec<String>,
}

fn g6(g: &Graph) -> String {
    write_graph6(g).expect("enumeration stays far below the graph6 size cap")
}

fn g6_sorted(graphs: &[Graph]) -> Vec<String> {
    let mut out: Vec<String> = graphs.iter().map(g6).collect();
    out.sort();
    out
}

fn graph_codes(graphs: &[Graph]) -> Result<BTreeSet<CanonicalCode>> {
    graphs.iter().map(canonical_graph_code_small).collect()
}

fn tree_codes(graphs: &[Graph]) -> Result<BTreeSet<CanonicalCode>> {
    graphs.iter().map(canonical_tree_code).collect()
}

fn dedup_trees(graphs: Vec<Graph>) -> Result<Vec<Graph>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in graphs {
        if seen.insert(canonical_tree_code(&g)?) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Leading groups of equal index value, at most `k` of them.
fn value_groups(entries: &[RankedEntry], k: usize) -> Vec<(u64, Vec<Graph>)> {
    let mut groups: Vec<(u64, Vec<Graph>)> = Vec::new();
    for e in entries {
        if let Some((v, class)) = groups.last_mut() {
            if *v == e.xi {
                class.push(e.graph.clone());
                continue;
            }
        }
        if groups.len() == k {
            break;
        }
        groups.push((e.xi, vec![e.graph.clone()]));
    }
    groups
}

struct Run {
    witnesses: Vec<Witness>,
    mismatches: Vec<String>,
}

impl Run {
    fn new() -> Self {
        Run { witnesses: Vec::new(), mismatches: Vec::new() }
    }

    /// Records a check of "class found extremal" against "class predicted",
    /// comparing by canonical code sets.
    fn tree_class(
        &mut self,
        point: String,
        value: u64,
        expected_value: u64,
        found: &[Graph],
        expected: &[Graph],
    ) -> Result<()> {
        if value != expected_value {
            self.mismatches
                .push(format!("{point}: extremal value {value}, formula says {expected_value}"));
        }
        if tree_codes(found)? != tree_codes(expected)? {
            self.mismatches.push(format!(
                "{point}: extremal class {:?} differs from the predicted class {:?}",
                g6_sorted(found),
                g6_sorted(expected)
            ));
        }
        self.witnesses.push(Witness {
            point,
            extremal_value: value,
            found_class: g6_sorted(found),
            expected_class: g6_sorted(expected),
        });
        Ok(())
    }
}

fn verify_p2(run: &mut Run, n: usize) -> Result<()> {
    let mut tight = Vec::new();
    let mut min_xi = u64::MAX;
    for g in connected_graphs(n, None)? {
        let r = check_bound(&g, BoundId::Prop2StarMin)?;
        if !r.holds {
            run.mismatches.push(format!("n = {n}: bound violated on {}", g6(&g)));
        }
        min_xi = min_xi.min(r.xi_value.unwrap());
        if r.tight {
            tight.push(g);
        }
    }
    let star = vec![FamilySpec::Star { n }.build()?];
    let point = format!("n = {n}");
    if min_xi != 3 * (n as u64 - 1) {
        run.mismatches.push(format!("{point}: minimum {min_xi} is not 3(n - 1)"));
    }
    if graph_codes(&tight)? != graph_codes(&star)? {
        run.mismatches.push(format!("{point}: equality class is not exactly the star"));
    }
    run.witnesses.push(Witness {
        point,
        extremal_value: min_xi,
        found_class: g6_sorted(&tight),
        expected_class: g6_sorted(&star),
    });
    Ok(())
}

fn verify_p3(run: &mut Run, n: usize) -> Result<()> {
    for m in n - 1..n * (n - 1) / 2 {
        let a = a_nm(n, m)?;
        let bound = 4 * m as u64 - (a * (n - 1)) as u64;
        let point = format!("n = {n}, m = {m}");
        let mut tight = Vec::new();
        let mut members = Vec::new();
        let mut min_xi = u64::MAX;
        for g in connected_graphs(n, Some(m))? {
            let r = check_bound(&g, BoundId::Prop3Join)?;
            if !r.applicable || !r.holds {
                run.mismatches.push(format!("{point}: bound violated on {}", g6(&g)));
                continue;
            }
            min_xi = min_xi.min(r.xi_value.unwrap());
            if r.tight {
                tight.push(g.clone());
            }
            if r.extremal_class_member == Some(true) {
                members.push(g);
            }
        }
        if min_xi != bound {
            run.mismatches.push(format!("{point}: minimum {min_xi}, bound {bound}"));
        }
        if graph_codes(&tight)? != graph_codes(&members)? {
            run.mismatches.push(format!(
                "{point}: equality class {:?} differs from the structural membership class {:?}",
                g6_sorted(&tight),
                g6_sorted(&members)
            ));
        }
        let built = FamilySpec::JoinExtremal { n, m }.build()?;
        if !graph_codes(&tight)?.contains(&canonical_graph_code_small(&built)?) {
            run.mismatches.push(format!("{point}: built canonical member is not extremal"));
        }
        run.witnesses.push(Witness {
            point,
            extremal_value: bound,
            found_class: g6_sorted(&tight),
            expected_class: g6_sorted(&members),
        });
    }
    Ok(())
}

fn verify_p5(run: &mut Run, n: usize) -> Result<()> {
    let mut tight = Vec::new();
    let mut members = Vec::new();
    for g in connected_graphs(n, None)? {
        let r = check_bound(&g, BoundId::Prop5Zagreb)?;
        if !r.holds {
            run.mismatches.push(format!("n = {n}: bound violated on {}", g6(&g)));
        }
        if r.tight {
            tight.push(g.clone());
        }
        if r.extremal_class_member == Some(true) {
            members.push(g);
        }
    }
    let mut expected = Vec::new();
    for k in 0..=n / 2 {
        expected.push(FamilySpec::CompleteMinusMatching { n, k }.build()?);
    }
    if n == 4 {
        expected.push(FamilySpec::Path { n: 4 }.build()?);
    }
    let point = format!("n = {n}");
    let tight_codes = graph_codes(&tight)?;
    if tight_codes != graph_codes(&expected)? {
        run.mismatches.push(format!(
            "{point}: equality class {:?} differs from the predicted class {:?}",
            g6_sorted(&tight),
            g6_sorted(&expected)
        ));
    }
    if tight_codes != graph_codes(&members)? {
        run.mismatches
            .push(format!("{point}: equality class differs from the membership predicate"));
    }
    run.witnesses.push(Witness {
        point,
        extremal_value: tight.len() as u64,
        found_class: g6_sorted(&tight),
        expected_class: g6_sorted(&expected),
    });
    Ok(())
}

fn verify_p6(run: &mut Run, n: usize) -> Result<()> {
    for d in 2..=n - 2 {
        let ranked = rank_trees(n, RankOrder::MinFirst, TreeConstraint::Diameter(d), usize::MAX)?;
        let groups = value_groups(&ranked.entries, 1);
        let (min_xi, minimizers) = &groups[0];
        let family: Vec<Graph> = (0..=n - d - 1)
            .map(|j| FamilySpec::TreeDiamMin { n, d, j }.build())
            .collect::<Result<_>>()?;
        let family = dedup_trees(family)?;
        let point = format!("n = {n}, d = {d}");
        let size = family_size(&FamilySpec::TreeDiamMin { n, d, j: 0 })?;
        if minimizers.len() as u64 != size {
            run.mismatches.push(format!(
                "{point}: {} minimizers, family size says {size}",
                minimizers.len()
            ));
        }
        run.tree_class(point, *min_xi, diam_min_xi(n, d), minimizers, &family)?;
    }
    Ok(())
}

fn verify_p7(run: &mut Run, n: usize) -> Result<()> {
    let ranked = rank_trees(n, RankOrder::MinFirst, TreeConstraint::None, usize::MAX)?;
    let groups = value_groups(&ranked.entries, 3);
    let star = vec![FamilySpec::Star { n }.build()?];
    let doubles: Vec<Graph> = (1..=(n - 2) / 2)
        .map(|a| FamilySpec::DoubleStar { n, a }.build())
        .collect::<Result<_>>()?;
    let third = vec![FamilySpec::TreeDiamMin { n, d: 4, j: 0 }.build()?];
    let labels = ["minimum", "second minimum", "third minimum"];
    let expected = [
        (FamilySpec::Star { n }.closed_form_xi()?, star),
        (FamilySpec::DoubleStar { n, a: 1 }.closed_form_xi()?, doubles),
        (diam_min_xi(n, 4), third),
    ];
    for ((label, (value, class)), (want, family)) in
        labels.iter().zip(&groups).zip(&expected)
    {
        run.tree_class(format!("n = {n}, {label}"), *value, *want, class, family)?;
    }
    Ok(())
}

fn verify_p8(run: &mut Run, n: usize) -> Result<()> {
    for p in 2..=n - 2 {
        let ranked = rank_trees(n, RankOrder::MaxFirst, TreeConstraint::Pendents(p), usize::MAX)?;
        let groups = value_groups(&ranked.entries, 1);
        let (max_xi, maximizers) = &groups[0];
        let family: Vec<Graph> = (1..=p / 2)
            .map(|a| FamilySpec::TreePendMax { n, p, a }.build())
            .collect::<Result<_>>()?;
        let family = dedup_trees(family)?;
        let point = format!("n = {n}, p = {p}");
        let size = family_size(&FamilySpec::TreePendMax { n, p, a: 1 })?;
        if maximizers.len() as u64 != size {
            run.mismatches.push(format!(
                "{point}: {} maximizers, family size says {size}",
                maximizers.len()
            ));
        }
        run.tree_class(point, *max_xi, pend_max_xi(n, p), maximizers, &family)?;
    }
    Ok(())
}

fn verify_p9(run: &mut Run, n: usize) -> Result<()> {
    let ranked = rank_trees(n, RankOrder::MaxFirst, TreeConstraint::None, usize::MAX)?;
    let groups = value_groups(&ranked.entries, 3);
    let labels = ["maximum", "second maximum", "third maximum"];
    let expected = [
        (path_xi(n), vec![FamilySpec::Path { n }.build()?]),
        (
            FamilySpec::PathPlusPendant { n, i: 1 }.closed_form_xi()?,
            vec![FamilySpec::PathPlusPendant { n, i: 1 }.build()?],
        ),
        (
            FamilySpec::PathPlusPendant { n, i: 2 }.closed_form_xi()?,
            vec![FamilySpec::PathPlusPendant { n, i: 2 }.build()?],
        ),
    ];
    for ((label, (value, class)), (want, family)) in
        labels.iter().zip(&groups).zip(&expected)
    {
        run.tree_class(format!("n = {n}, {label}"), *value, *want, class, family)?;
    }
    Ok(())
}

/// Runs one proposition check over an inclusive range of vertex counts.
/// The verdict carries one witness per parameter point; it passes exactly
/// when no mismatch was recorded.
pub fn verify_proposition(id: PropId, n_range: RangeInclusive<usize>) -> Result<VerificationVerdict> {
    let (lo, hi) = (*n_range.start(), *n_range.end());
    if lo > hi {
        return Err(Error::Domain(format!("empty range {lo}..={hi}")));
    }
    if lo < id.n_min() {
        return Err(Error::Domain(format!("{id} is asserted for n >= {}", id.n_min())));
    }
    if hi > id.n_cap() {
        return Err(Error::EnumerationLimit { n: hi, max: id.n_cap() });
    }
    let mut run = Run::new();
    for n in lo..=hi {
        match id {
            PropId::P2 => verify_p2(&mut run, n)?,
            PropId::P3 => verify_p3(&mut run, n)?,
            PropId::P5 => verify_p5(&mut run, n)?,
            PropId::P6 => verify_p6(&mut run, n)?,
            PropId::P7 => verify_p7(&mut run, n)?,
            PropId::P8 => verify_p8(&mut run, n)?,
            PropId::P9 => verify_p9(&mut run, n)?,
        }
    }
    Ok(VerificationVerdict {
        id,
        n_range: (lo, hi),
        passed: run.mismatches.is_empty(),
        witnesses: run.witnesses,
        mismatches: run.mismatches,
    })
}
