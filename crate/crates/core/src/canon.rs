//! Canonical codes: subtree-sorting codes for trees of any size, and
//! brute-force minimal adjacency codes for graphs on at most eight vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex-count limit for [`canonical_graph_code_small`].
pub const SMALL_CODE_MAX: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CodeKind {
    Tree,
    SmallGraph,
}

/// An isomorphism-complete code: two graphs in the same applicability domain
/// receive equal codes of the same kind exactly when they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub kind: CodeKind,
    pub bytes: Vec<u8>,
}

pub(crate) fn ensure_tree(g: &Graph) -> Result<()> {
    if g.m() != g.n() - 1 {
        return Err(Error::NotATree { reason: "edge count is not n - 1" });
    }
    if !g.is_connected() {
        return Err(Error::NotATree { reason: "graph is disconnected" });
    }
    Ok(())
}

/// The one or two central vertices of a tree, found by stripping leaf layers.
pub fn tree_centers(g: &Graph) -> Result<Vec<usize>> {
    ensure_tree(g)?;
    let n = g.n();
    if n == 1 {
        return Ok(vec![0]);
    }
    let mut deg = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            remaining -= 1;
            for &w in g.neighbors(v) {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    Ok(layer)
}

/// Parenthesis string of the tree rooted at `root`, with child codes sorted;
/// equal strings mean isomorphic rooted trees.
fn rooted_code(g: &Graph, root: usize) -> Vec<u8> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in g.neighbors(v) {
            if w != root && parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut code: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut kids: Vec<Vec<u8>> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| parent[w] == v)
            .map(|&w| std::mem::take(&mut code[w]))
            .collect();
        kids.sort();
        let mut buf = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        buf.push(b'(');
        for k in kids {
            buf.extend_from_slice(&k);
        }
        buf.push(b')');
        code[v] = buf;
    }
    std::mem::take(&mut code[root])
}

/// Canonical code of a free tree: the rooted code at its center, or the
/// smaller of the two rooted codes when the tree is bicentral.
pub fn canonical_tree_code(g: &Graph) -> Result<CanonicalCode> {
    let centers = tree_centers(g)?;
    let bytes = centers.into_iter().map(|c| rooted_code(g, c)).min().unwrap();
    Ok(CanonicalCode { kind: CodeKind::Tree, bytes })
}

// Upper-triangle pair order shared with the graph6 format: (0,1), (0,2),
// (1,2), (0,3), ... Bit k of a mask sits at position (pairs - 1 - k), so
// plain integer order on masks is lexicographic order on bit strings.

pub(crate) fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

pub(crate) fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

pub(crate) fn graph_to_mask(g: &Graph) -> u32 {
    let np = pair_count(g.n());
    let mut mask = 0u32;
    for (u, v) in g.edges() {
        mask |= 1 << (np - 1 - pair_index(u, v));
    }
    mask
}

pub(crate) fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let np = pair_count(n);
    let edges: Vec<_> = pair_list(n)
        .into_iter()
        .enumerate()
        .filter(|&(k, _)| mask >> (np - 1 - k) & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Mask of the relabelled graph in which pair `(i, j)` is an edge exactly
/// when `(perm[i], perm[j])` is an edge of the input mask.
pub(crate) fn permute_mask(np: usize, pairs: &[(usize, usize)], mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let (a, b) = {
            let (pi, pj) = (perm[i], perm[j]);
            if pi < pj {
                (pi, pj)
            } else {
                (pj, pi)
            }
        };
        if mask >> (np - 1 - pair_index(a, b)) & 1 == 1 {
            out |= 1 << (np - 1 - k);
        }
    }
    out
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Canonical code of an arbitrary graph on at most eight vertices: the
/// lexicographically smallest adjacency bit string over all relabellings,
/// prefixed with the vertex count.
pub fn canonical_graph_code_small(g: &Graph) -> Result<CanonicalCode> {
    let n = g.n();
    if n > SMALL_CODE_MAX {
        return Err(Error::CodeSizeLimit { n, max: SMALL_CODE_MAX });
    }
    let np = pair_count(n);
    let pairs = pair_list(n);
    let mask = graph_to_mask(g);
    let best = permutations(n)
        .iter()
        .map(|p| permute_mask(np, &pairs, mask, p))
        .min()
        .unwrap();
    let mut bytes = vec![n as u8];
    bytes.resize(1 + np.div_ceil(8), 0);
    for k in 0..np {
        if best >> (np - 1 - k) & 1 == 1 {
            bytes[1 + k / 8] |= 1 << (7 - k % 8);
        }
    }
    Ok(CanonicalCode { kind: CodeKind::SmallGraph, bytes })
}
