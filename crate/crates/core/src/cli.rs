//! Command-line surface. Everything renders deterministically: identical
//! arguments and files produce byte-identical output.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::check_all_bounds;
use crate::enumerate::{rank_trees, verify_proposition, PropId, RankOrder, TreeConstraint};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::formats::{read_document, write_edgelist, write_graph6, DocFormat, GraphDocument};
use crate::graph::Graph;
use crate::invariants::{eccentric_connectivity_index, invariant_report};
use crate::transforms::{find_lemma1_sites, find_lemma2_sites, lemma1_apply, lemma2_apply};

#[derive(Parser)]
#[command(name = "ecci", version, about = "Eccentric connectivity index toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print invariant summaries for every graph in a file
    Compute {
        file: PathBuf,
        /// Line-delimited JSON records instead of a table
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the whole bound catalog for every graph in a file
    Bounds {
        file: PathBuf,
        /// Line-delimited JSON records instead of tables
        #[arg(long)]
        json: bool,
    },
    /// Build one member of a named graph family
    Family {
        tag: String,
        params: Vec<usize>,
        /// Emit graph6 (the default)
        #[arg(long, conflicts_with = "edgelist")]
        g6: bool,
        /// Emit an edge list
        #[arg(long)]
        edgelist: bool,
        /// For star-plus-edges with t = 2, add the two edges disjointly
        #[arg(long)]
        disjoint: bool,
    },
    /// Print a family's closed-form index value
    ClosedForm {
        tag: String,
        params: Vec<usize>,
        /// For star-plus-edges with t = 2, the disjoint variant
        #[arg(long)]
        disjoint: bool,
    },
    /// Rank trees on n vertices by index value
    Rank {
        #[arg(long)]
        n: usize,
        /// Keep only trees of this diameter
        #[arg(long, conflicts_with = "pendents")]
        diameter: Option<usize>,
        /// Keep only trees with this many pendent vertices
        #[arg(long)]
        pendents: Option<usize>,
        #[arg(long, value_enum)]
        order: OrderArg,
        /// Number of entries to print
        #[arg(long)]
        top: usize,
    },
    /// Check one extremal statement exhaustively up to n-max
    Verify {
        id: String,
        #[arg(long)]
        n_max: usize,
        /// One JSON verdict instead of a table
        #[arg(long)]
        json: bool,
    },
    /// Apply a tree rewrite at a discovered site
    Transform {
        #[arg(value_enum)]
        lemma: LemmaArg,
        file: PathBuf,
        /// 0-based index into the discovered site list
        #[arg(long)]
        site: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Min,
    Max,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LemmaArg {
    Lemma1,
    Lemma2,
}

impl LemmaArg {
    fn name(self) -> &'static str {
        match self {
            LemmaArg::Lemma1 => "lemma1",
            LemmaArg::Lemma2 => "lemma2",
        }
    }
}

/// Captured run of the command line: exit code plus both output streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
/// Exit codes: 0 success, 1 verification mismatch or bound violation,
/// 2 usage or input errors.
pub fn cli_dispatch<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CliOutput { code: 0, stdout: rendered, stderr: String::new() }
                }
                _ => CliOutput { code: 2, stdout: String::new(), stderr: rendered },
            };
        }
    };
    match execute(cli.cmd) {
        Ok((stdout, code)) => CliOutput { code, stdout, stderr: String::new() },
        Err(e) => CliOutput { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn execute(cmd: Cmd) -> Result<(String, u8)> {
    match cmd {
        Cmd::Compute { file, json } => compute_cmd(&file, json),
        Cmd::Bounds { file, json } => bounds_cmd(&file, json),
        Cmd::Family { tag, params, g6: _, edgelist, disjoint } => {
            family_cmd(&tag, &params, edgelist, disjoint)
        }
        Cmd::ClosedForm { tag, params, disjoint } => closed_form_cmd(&tag, &params, disjoint),
        Cmd::Rank { n, diameter, pendents, order, top } => {
            rank_cmd(n, diameter, pendents, order, top)
        }
        Cmd::Verify { id, n_max, json } => verify_cmd(&id, n_max, json),
        Cmd::Transform { lemma, file, site } => transform_cmd(lemma, &file, site),
    }
}

fn load(file: &Path) -> Result<GraphDocument> {
    let text = fs::read_to_string(file)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", file.display())))?;
    read_document(&file.display().to_string(), &text)
}

fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let head: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    let mut out = String::new();
    for row in std::iter::once(&head).chain(rows.iter()) {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            if i + 1 < cols {
                write!(line, "{cell:<width$}", width = widths[i]).unwrap();
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn json_record(value: impl serde::Serialize, graph: usize) -> String {
    let mut value = serde_json::to_value(value).expect("reports serialize");
    value
        .as_object_mut()
        .expect("reports serialize to objects")
        .insert("graph".into(), graph.into());
    serde_json::to_string(&value).expect("json renders")
}

fn compute_cmd(file: &Path, json: bool) -> Result<(String, u8)> {
    let doc = load(file)?;
    let mut out = String::new();
    if json {
        for (i, g) in doc.graphs.iter().enumerate() {
            out.push_str(&json_record(invariant_report(g)?, i + 1));
            out.push('\n');
        }
        return Ok((out, 0));
    }
    let header = [
        "graph",
        "n",
        "m",
        "xi",
        "wiener",
        "degree_distance",
        "zagreb1",
        "min_degree",
        "max_degree",
        "radius",
        "diameter",
        "self_centered",
    ];
    let mut rows = Vec::new();
    for (i, g) in doc.graphs.iter().enumerate() {
        let r = invariant_report(g)?;
        rows.push(vec![
            (i + 1).to_string(),
            r.n.to_string(),
            r.m.to_string(),
            r.xi.to_string(),
            r.wiener.to_string(),
            r.degree_distance.to_string(),
            r.zagreb1.to_string(),
            r.min_degree.to_string(),
            r.max_degree.to_string(),
            r.radius.to_string(),
            r.diameter.to_string(),
            if r.self_centered { "yes" } else { "no" }.to_string(),
        ]);
    }
    Ok((render_table(&header, &rows), 0))
}

fn bounds_cmd(file: &Path, json: bool) -> Result<(String, u8)> {
    let doc = load(file)?;
    let mut out = String::new();
    let mut violated = false;
    for (i, g) in doc.graphs.iter().enumerate() {
        let reports = check_all_bounds(g)?;
        violated |= reports.iter().any(|r| r.applicable && !r.holds);
        if json {
            for r in &reports {
                out.push_str(&json_record(r, i + 1));
                out.push('\n');
            }
            continue;
        }
        if i > 0 {
            out.push('\n');
        }
        let label = write_graph6(g).map(|s| format!("{s}  ")).unwrap_or_default();
        let xi = eccentric_connectivity_index(g)?;
        writeln!(out, "graph {}: {label}n = {}, m = {}, xi = {xi}", i + 1, g.n(), g.m()).unwrap();
        let rows: Vec<Vec<String>> = reports
            .iter()
            .map(|r| {
                let status = if !r.applicable {
                    "-"
                } else if !r.holds {
                    "VIOLATED"
                } else if r.tight {
                    "TIGHT"
                } else {
                    "strict"
                };
                vec![
                    r.bound.to_string(),
                    r.bound_value.map_or_else(|| "-".to_string(), |b| b.to_string()),
                    r.xi_value.map_or_else(|| "-".to_string(), |x| x.to_string()),
                    status.to_string(),
                    r.notes.clone(),
                ]
            })
            .collect();
        out.push_str(&render_table(&["bound", "bound_value", "xi", "status", "notes"], &rows));
    }
    Ok((out, u8::from(violated)))
}

fn parse_family(tag: &str, params: &[usize], disjoint: bool) -> Result<FamilySpec> {
    if disjoint && tag != "star-plus-edges" {
        return Err(Error::Domain("--disjoint only applies to star-plus-edges".into()));
    }
    let need = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "family \"{tag}\" takes {k} integer parameter(s), got {}",
                params.len()
            )))
        }
    };
    let spec = match tag {
        "path" => {
            need(1)?;
            FamilySpec::Path { n: params[0] }
        }
        "star" => {
            need(1)?;
            FamilySpec::Star { n: params[0] }
        }
        "cycle" => {
            need(1)?;
            FamilySpec::Cycle { n: params[0] }
        }
        "complete" => {
            need(1)?;
            FamilySpec::Complete { n: params[0] }
        }
        "complete-bipartite" => {
            need(2)?;
            FamilySpec::CompleteBipartite { r: params[0], s: params[1] }
        }
        "complete-minus-matching" => {
            need(2)?;
            FamilySpec::CompleteMinusMatching { n: params[0], k: params[1] }
        }
        "star-plus-edges" => {
            need(2)?;
            FamilySpec::StarPlusEdges { n: params[0], t: params[1], adjacent: !disjoint }
        }
        "join-extremal" => {
            need(2)?;
            FamilySpec::JoinExtremal { n: params[0], m: params[1] }
        }
        "tree-diam-min" => {
            if params.len() == 2 {
                FamilySpec::TreeDiamMin { n: params[0], d: params[1], j: 0 }
            } else {
                need(3)?;
                FamilySpec::TreeDiamMin { n: params[0], d: params[1], j: params[2] }
            }
        }
        "tree-pend-max" => {
            if params.len() == 2 {
                FamilySpec::TreePendMax { n: params[0], p: params[1], a: 1 }
            } else {
                need(3)?;
                FamilySpec::TreePendMax { n: params[0], p: params[1], a: params[2] }
            }
        }
        "path-plus-pendant" => {
            need(2)?;
            FamilySpec::PathPlusPendant { n: params[0], i: params[1] }
        }
        "double-star" => {
            need(2)?;
            FamilySpec::DoubleStar { n: params[0], a: params[1] }
        }
        _ => return Err(Error::Domain(format!("unknown family tag \"{tag}\""))),
    };
    Ok(spec)
}

fn family_cmd(tag: &str, params: &[usize], edgelist: bool, disjoint: bool) -> Result<(String, u8)> {
    let g = parse_family(tag, params, disjoint)?.build()?;
    let out = if edgelist { write_edgelist(&g) } else { format!("{}\n", write_graph6(&g)?) };
    Ok((out, 0))
}

fn closed_form_cmd(tag: &str, params: &[usize], disjoint: bool) -> Result<(String, u8)> {
    let value = parse_family(tag, params, disjoint)?.closed_form_xi()?;
    Ok((format!("{value}\n"), 0))
}

fn rank_cmd(
    n: usize,
    diameter: Option<usize>,
    pendents: Option<usize>,
    order: OrderArg,
    top: usize,
) -> Result<(String, u8)> {
    let constraint = match (diameter, pendents) {
        (Some(d), None) => TreeConstraint::Diameter(d),
        (None, Some(p)) => TreeConstraint::Pendents(p),
        _ => TreeConstraint::None,
    };
    let rank_order = match order {
        OrderArg::Min => RankOrder::MinFirst,
        OrderArg::Max => RankOrder::MaxFirst,
    };
    let ranked = rank_trees(n, rank_order, constraint, top)?;
    let direction = match order {
        OrderArg::Min => "minimum",
        OrderArg::Max => "maximum",
    };
    let mut out = format!("# {}, {direction} first, top {top}\n", ranked.scope);
    let rows: Vec<Vec<String>> = ranked
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            vec![
                (i + 1).to_string(),
                e.xi.to_string(),
                write_graph6(&e.graph).expect("ranked trees stay below the graph6 cap"),
            ]
        })
        .collect();
    out.push_str(&render_table(&["rank", "xi", "graph6"], &rows));
    Ok((out, 0))
}

fn verify_cmd(id: &str, n_max: usize, json: bool) -> Result<(String, u8)> {
    let id: PropId = id.parse()?;
    let verdict = verify_proposition(id, id.n_min()..=n_max)?;
    let code = u8::from(!verdict.passed);
    if json {
        let line = serde_json::to_string(&verdict).expect("verdicts serialize");
        return Ok((format!("{line}\n"), code));
    }
    let mut out = format!("{id} over n = {}..={}\n", verdict.n_range.0, verdict.n_range.1);
    let rows: Vec<Vec<String>> = verdict
        .witnesses
        .iter()
        .map(|w| {
            vec![
                w.point.clone(),
                w.extremal_value.to_string(),
                w.found_class.len().to_string(),
                w.expected_class.len().to_string(),
            ]
        })
        .collect();
    out.push_str(&render_table(&["point", "value", "found", "expected"], &rows));
    for msg in &verdict.mismatches {
        writeln!(out, "mismatch: {msg}").unwrap();
    }
    writeln!(out, "{id}: {}", if verdict.passed { "PASS" } else { "FAIL" }).unwrap();
    Ok((out, code))
}

fn transform_cmd(lemma: LemmaArg, file: &Path, site: usize) -> Result<(String, u8)> {
    let doc = load(file)?;
    if doc.graphs.len() != 1 {
        return Err(Error::Domain(format!(
            "transform needs exactly one graph, {} has {}",
            doc.source,
            doc.graphs.len()
        )));
    }
    let g = &doc.graphs[0];
    let before = eccentric_connectivity_index(g)?;
    let out_of_range = |len: usize| {
        Error::Domain(format!(
            "site {site} out of range, {} has {len} {} site(s)",
            doc.source,
            lemma.name()
        ))
    };
    let (description, result): (String, Graph) = match lemma {
        LemmaArg::Lemma1 => {
            let sites = find_lemma1_sites(g)?;
            let s = sites.get(site).ok_or_else(|| out_of_range(sites.len()))?;
            let what = format!(
                "star collapse at v = {} onto u = {}, moving {} pendent(s)",
                s.v, s.u, s.a
            );
            (what, lemma1_apply(s)?)
        }
        LemmaArg::Lemma2 => {
            let sites = find_lemma2_sites(g)?;
            let s = sites.get(site).ok_or_else(|| out_of_range(sites.len()))?;
            let what = format!(
                "branch push from y = {} to x = {}, rewiring {} edge(s)",
                s.y,
                s.x,
                s.m_neighbors.len()
            );
            (what, lemma2_apply(s)?)
        }
    };
    let after = eccentric_connectivity_index(&result)?;
    let rendered = match doc.format {
        DocFormat::Graph6 => format!("{}\n", write_graph6(&result)?),
        DocFormat::EdgeList => write_edgelist(&result),
    };
    Ok((format!("site {site}: {description}\nxi: {before} -> {after}\n{rendered}"), 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_prints_the_value() {
        let out = cli_dispatch(["ecci", "closed-form", "path", "6"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "38\n");
        assert!(out.stderr.is_empty());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(cli_dispatch(["ecci", "frobnicate"]).code, 2);
        assert_eq!(cli_dispatch(["ecci"]).code, 2);
        assert_eq!(cli_dispatch(["ecci", "family", "path", "6", "--g6", "--edgelist"]).code, 2);
        let out = cli_dispatch(["ecci", "closed-form", "nonesuch", "3"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("unknown family tag"));
    }

    #[test]
    fn help_and_version_exit_zero() {
        assert_eq!(cli_dispatch(["ecci", "--help"]).code, 0);
        assert_eq!(cli_dispatch(["ecci", "--version"]).code, 0);
    }

    #[test]
    fn family_parameters_are_counted() {
        let out = cli_dispatch(["ecci", "family", "path"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("1 integer parameter"));
        assert_eq!(cli_dispatch(["ecci", "family", "path", "6", "--disjoint"]).code, 2);
    }

    #[test]
    fn family_emits_graph6_by_default() {
        let out = cli_dispatch(["ecci", "family", "complete", "4"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "C~\n");
        let out = cli_dispatch(["ecci", "family", "path", "4", "--edgelist"]);
        assert_eq!(out.stdout, "4 3\n0 1\n1 2\n2 3\n");
    }

    #[test]
    fn rank_renders_a_table() {
        let out = cli_dispatch([
            "ecci", "rank", "--n", "6", "--order", "min", "--top", "3",
        ]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with("# trees on 6 vertices, minimum first, top 3\n"));
        assert!(out.stdout.contains("15"));
    }
}
