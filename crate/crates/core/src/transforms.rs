//! Two index-monotone tree rewirings: collapsing an attached star toward its
//! anchor (strictly decreases the index) and pushing side branches outward
//! along a degree-2 path (strictly increases it). Both validate their
//! hypotheses before touching the tree.

use crate::canon::ensure_tree;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A star on `a + 1` vertices hanging at `v`, anchored to the rest of the
/// tree through the edge `u - v`.
#[derive(Clone, Debug)]
pub struct Lemma1Site {
    pub tree: Graph,
    pub u: usize,
    pub v: usize,
    pub a: usize,
}

/// A degree-2 path from `x` to `y`, one deep branch `N` at `y` (rooted at
/// `n_branch_root`), and the remaining branches `M` whose roots are
/// `m_neighbors`; applying the move rewires every `y`-`M` edge to `x`.
#[derive(Clone, Debug)]
pub struct Lemma2Site {
    pub tree: Graph,
    pub x: usize,
    pub y: usize,
    pub path: Vec<usize>,
    pub m_neighbors: Vec<usize>,
    pub n_branch_root: usize,
}

fn hypothesis(msg: impl Into<String>) -> Error {
    Error::Hypothesis(msg.into())
}

/// All star-collapse sites of a tree, ordered by (u, v). Each eligible `v`
/// yields exactly one site: its pendent neighbors form the star and its
/// unique non-pendent neighbor is the anchor.
pub fn find_lemma1_sites(tree: &Graph) -> Result<Vec<Lemma1Site>> {
    ensure_tree(tree)?;
    let n = tree.n();
    let mut sites = Vec::new();
    for v in 0..n {
        let (pendent, other): (Vec<usize>, Vec<usize>) =
            tree.neighbors(v).iter().partition(|&&w| tree.degree(w) == 1);
        if other.len() == 1 && !pendent.is_empty() && n >= pendent.len() + 3 {
            sites.push(Lemma1Site { tree: tree.clone(), u: other[0], v, a: pendent.len() });
        }
    }
    sites.sort_by_key(|s| (s.u, s.v));
    Ok(sites)
}

/// Collapses the star at `v` onto the anchor `u`: the `a` leaves and `v`
/// itself all become pendent neighbors of `u`. The index strictly drops.
pub fn lemma1_apply(site: &Lemma1Site) -> Result<Graph> {
    let tree = &site.tree;
    ensure_tree(tree)?;
    let n = tree.n();
    let (u, v, a) = (site.u, site.v, site.a);
    if u >= n || v >= n {
        return Err(hypothesis("u and v must be vertices of the tree"));
    }
    if !tree.has_edge(u, v) {
        return Err(hypothesis("v must be adjacent to u"));
    }
    if a == 0 {
        return Err(hypothesis("the star must carry at least one pendent leaf"));
    }
    let leaves: Vec<usize> = tree.neighbors(v).iter().copied().filter(|&w| w != u).collect();
    if leaves.len() != a {
        return Err(hypothesis(format!(
            "v has {} neighbors besides u, site says a = {a}",
            leaves.len()
        )));
    }
    if let Some(&w) = leaves.iter().find(|&&w| tree.degree(w) != 1) {
        return Err(hypothesis(format!("neighbor {w} of v is not pendent")));
    }
    if n < a + 3 {
        return Err(hypothesis("the retained subtree must keep at least two vertices"));
    }
    let edges: Vec<(usize, usize)> = tree
        .edges()
        .into_iter()
        .map(|(p, q)| {
            if p == v && leaves.contains(&q) {
                (u, q)
            } else if q == v && leaves.contains(&p) {
                (u, p)
            } else {
                (p, q)
            }
        })
        .map(|(p, q)| (p.min(q), p.max(q)))
        .collect();
    Graph::from_edge_list(n, &edges)
}

/// Vertex sets of the components of `tree - y`, keyed by the neighbor of
/// `y` they contain.
fn branches_at(tree: &Graph, y: usize) -> Vec<(usize, Vec<usize>)> {
    tree.neighbors(y)
        .iter()
        .map(|&root| {
            let mut seen = vec![false; tree.n()];
            seen[y] = true;
            seen[root] = true;
            let mut queue = vec![root];
            let mut verts = vec![root];
            while let Some(w) = queue.pop() {
                for &z in tree.neighbors(w) {
                    if !seen[z] {
                        seen[z] = true;
                        queue.push(z);
                        verts.push(z);
                    }
                }
            }
            verts.sort_unstable();
            (root, verts)
        })
        .collect()
}

/// Candidate far ends for the degree-2 path leaving `y` through `root`:
/// the walk continues while vertices have degree 2 and stops at the first
/// leaf or branching vertex. Returns (x, path from x to y) pairs.
fn path_candidates(tree: &Graph, y: usize, root: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    let mut path = vec![root, y];
    let mut prev = y;
    let mut cur = root;
    loop {
        if tree.degree(cur) >= 2 {
            out.push((cur, path.clone()));
        }
        if tree.degree(cur) != 2 {
            break;
        }
        let next = *tree.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
        path.insert(0, next);
        prev = cur;
        cur = next;
    }
    out
}

/// All branch-push sites of a tree, ordered by (y, x, n_branch_root).
/// A site needs the M branches no deeper than N, and x strictly more
/// eccentric than y; the second condition keeps the far side of the tree
/// behind N and is what makes the move strictly increasing.
pub fn find_lemma2_sites(tree: &Graph) -> Result<Vec<Lemma2Site>> {
    ensure_tree(tree)?;
    let ecc = tree.eccentricity_profile()?.ecc;
    let mut sites = Vec::new();
    for y in 0..tree.n() {
        if tree.degree(y) < 3 {
            continue;
        }
        let dist = tree.bfs_distances(y)?;
        let branches = branches_at(tree, y);
        let depth = |verts: &[usize]| verts.iter().map(|&w| dist[w]).max().unwrap();
        for (xi, (x_root, _)) in branches.iter().enumerate() {
            for (ni, (n_root, n_verts)) in branches.iter().enumerate() {
                if ni == xi || n_verts.len() < 2 {
                    continue;
                }
                let m_depth = branches
                    .iter()
                    .enumerate()
                    .filter(|&(bi, _)| bi != xi && bi != ni)
                    .map(|(_, (_, verts))| depth(verts))
                    .max()
                    .unwrap();
                if m_depth > depth(n_verts) {
                    continue;
                }
                for (x, path) in path_candidates(tree, y, *x_root) {
                    if ecc[x] <= ecc[y] {
                        continue;
                    }
                    let mut m_neighbors: Vec<usize> = branches
                        .iter()
                        .map(|&(root, _)| root)
                        .filter(|&root| root != *x_root && root != *n_root)
                        .collect();
                    m_neighbors.sort_unstable();
                    sites.push(Lemma2Site {
                        tree: tree.clone(),
                        x,
                        y,
                        path,
                        m_neighbors,
                        n_branch_root: *n_root,
                    });
                }
            }
        }
    }
    sites.sort_by_key(|s| (s.y, s.x, s.n_branch_root));
    Ok(sites)
}

/// Rewires every edge from `y` into the `M` branches so it lands on `x`
/// instead. The index strictly grows.
pub fn lemma2_apply(site: &Lemma2Site) -> Result<Graph> {
    let tree = &site.tree;
    ensure_tree(tree)?;
    let n = tree.n();
    let (x, y) = (site.x, site.y);
    if x >= n || y >= n || x == y {
        return Err(hypothesis("x and y must be distinct vertices of the tree"));
    }
    let path = &site.path;
    if path.first() != Some(&x) || path.last() != Some(&y) || path.len() < 2 {
        return Err(hypothesis("the path must run from x to y"));
    }
    let mut seen_on_path = vec![false; n];
    for &w in path {
        if w >= n || seen_on_path[w] {
            return Err(hypothesis("the path must not repeat vertices"));
        }
        seen_on_path[w] = true;
    }
    for pair in path.windows(2) {
        if !tree.has_edge(pair[0], pair[1]) {
            return Err(hypothesis("consecutive path vertices must be adjacent"));
        }
    }
    if let Some(&w) = path[1..path.len() - 1].iter().find(|&&w| tree.degree(w) != 2) {
        return Err(hypothesis(format!("interior path vertex {w} must have degree 2")));
    }
    if tree.degree(x) < 2 {
        return Err(hypothesis("x must have degree at least 2"));
    }
    let path_neighbor = path[path.len() - 2];
    let root = site.n_branch_root;
    if !tree.has_edge(root, y) || root == path_neighbor {
        return Err(hypothesis("n_branch_root must be a neighbor of y off the path"));
    }
    let mut expected_m: Vec<usize> = tree
        .neighbors(y)
        .iter()
        .copied()
        .filter(|&w| w != path_neighbor && w != root)
        .collect();
    expected_m.sort_unstable();
    let mut given_m = site.m_neighbors.clone();
    given_m.sort_unstable();
    if given_m.is_empty() {
        return Err(hypothesis("branch M must be nonempty"));
    }
    if given_m != expected_m {
        return Err(hypothesis(
            "m_neighbors must be exactly the remaining neighbors of y",
        ));
    }
    let branches = branches_at(tree, y);
    let dist = tree.bfs_distances(y)?;
    let branch_of = |r: usize| &branches.iter().find(|&&(root, _)| root == r).unwrap().1;
    let n_verts = branch_of(root);
    if n_verts.len() < 2 {
        return Err(hypothesis("branch N must contain at least two vertices"));
    }
    let n_depth = n_verts.iter().map(|&w| dist[w]).max().unwrap();
    let m_depth = given_m
        .iter()
        .flat_map(|&r| branch_of(r).iter())
        .map(|&w| dist[w])
        .max()
        .unwrap();
    if m_depth > n_depth {
        return Err(hypothesis(
            "branch M must not reach farther from y than branch N",
        ));
    }
    let ecc = tree.eccentricity_profile()?.ecc;
    if ecc[x] <= ecc[y] {
        return Err(hypothesis(
            "the eccentricity of x must exceed the eccentricity of y",
        ));
    }
    let edges: Vec<(usize, usize)> = tree
        .edges()
        .into_iter()
        .map(|(p, q)| {
            let other = if p == y { Some(q) } else if q == y { Some(p) } else { None };
            match other {
                Some(w) if given_m.binary_search(&w).is_ok() => (w.min(x), w.max(x)),
                _ => (p, q),
            }
        })
        .collect();
    Graph::from_edge_list(n, &edges)
}
