//! Undirected simple graphs on the dense vertex range `0..n`, plus the
//! breadth-first distance routines everything else builds on.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Hard cap on vertex count, chosen so every distance-based invariant of a
/// supported graph fits comfortably in 64 bits.
pub const MAX_VERTICES: usize = 200_000;

/// A simple undirected graph. Vertices are `0..n`; neighbor lists are kept
/// sorted, so equal values mean equal labelled graphs.
///
/// ```
/// use ecci::graph::Graph;
///
/// let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
/// assert_eq!(p4.n(), 4);
/// assert_eq!(p4.m(), 3);
/// assert!(p4.has_edge(2, 1));
/// assert!(!p4.has_edge(0, 3));
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

/// Per-vertex eccentricities together with the radius/diameter summary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccentricityProfile {
    pub ecc: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    pub self_centered: bool,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order is irrelevant and
    /// duplicate edges collapse; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut half_degrees = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            half_degrees += list.len();
        }
        Ok(Graph { n, m: half_degrees / 2, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Distances from `u` to every vertex by breadth-first search. Fails on
    /// disconnected input, naming an unreachable vertex.
    pub fn bfs_distances(&self, u: usize) -> Result<Vec<usize>> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if let Some(unreached) = dist.iter().position(|&d| d == usize::MAX) {
            return Err(Error::Disconnected { unreached });
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).is_ok()
    }

    /// One BFS per vertex; O(n * m) overall.
    ///
    /// ```
    /// use ecci::graph::Graph;
    ///
    /// let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    /// let prof = p4.eccentricity_profile().unwrap();
    /// assert_eq!(prof.ecc, vec![3, 2, 2, 3]);
    /// assert_eq!((prof.radius, prof.diameter), (2, 3));
    /// assert!(!prof.self_centered);
    /// ```
    pub fn eccentricity_profile(&self) -> Result<EccentricityProfile> {
        let mut ecc = Vec::with_capacity(self.n);
        for u in 0..self.n {
            let dist = self.bfs_distances(u)?;
            ecc.push(dist.into_iter().max().unwrap());
        }
        let radius = *ecc.iter().min().unwrap();
        let diameter = *ecc.iter().max().unwrap();
        Ok(EccentricityProfile { radius, diameter, self_centered: radius == diameter, ecc })
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        for u in 0..self.n {
            let mut nbrs = self.adj[u].iter().copied().peekable();
            for v in 0..self.n {
                if nbrs.peek() == Some(&v) {
                    nbrs.next();
                    continue;
                }
                if v != u {
                    adj[u].push(v);
                }
            }
        }
        let m = self.n * (self.n - 1) / 2 - self.m;
        Graph { n: self.n, m, adj }
    }

    pub fn is_tree(&self) -> bool {
        self.m == self.n - 1 && self.is_connected()
    }

    pub fn pendent_count(&self) -> usize {
        self.adj.iter().filter(|list| list.len() == 1).count()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap()
    }
}
