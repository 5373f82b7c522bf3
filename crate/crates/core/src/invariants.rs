//! Distance-based graph invariants: the eccentric connectivity index and the
//! companion quantities its bounds are phrased against.

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;

/// The eccentric connectivity index: the sum of degree times eccentricity
/// over all vertices.
///
/// ```
/// use ecci::graph::Graph;
/// use ecci::invariants::eccentric_connectivity_index;
///
/// let c6 = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
/// assert_eq!(eccentric_connectivity_index(&c6).unwrap(), 36);
/// ```
pub fn eccentric_connectivity_index(g: &Graph) -> Result<u64> {
    let prof = g.eccentricity_profile()?;
    Ok((0..g.n()).map(|u| (g.degree(u) * prof.ecc[u]) as u64).sum())
}

/// The Wiener index: the sum of distances over unordered vertex pairs.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    let mut twice = 0u64;
    for u in 0..g.n() {
        twice += g.bfs_distances(u)?.into_iter().map(|d| d as u64).sum::<u64>();
    }
    Ok(twice / 2)
}

/// The degree distance: the sum over vertices of degree times the vertex's
/// total distance to all others.
pub fn degree_distance(g: &Graph) -> Result<u64> {
    let mut total = 0u64;
    for u in 0..g.n() {
        let row: u64 = g.bfs_distances(u)?.into_iter().map(|d| d as u64).sum();
        total += g.degree(u) as u64 * row;
    }
    Ok(total)
}

/// The first Zagreb index: the sum of squared degrees. Defined for any
/// graph, connected or not.
pub fn first_zagreb(g: &Graph) -> u64 {
    g.degrees().into_iter().map(|d| (d * d) as u64).sum()
}

/// Everything the bound catalog consumes, computed in a single sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub xi: u64,
    pub wiener: u64,
    pub degree_distance: u64,
    pub zagreb1: u64,
    pub min_degree: usize,
    pub max_degree: usize,
    pub radius: usize,
    pub diameter: usize,
    pub self_centered: bool,
}

/// Computes the full report with one BFS per vertex. The index is evaluated
/// both as a vertex sum and as an edge sum of endpoint eccentricities; the
/// two routes must agree.
pub fn invariant_report(g: &Graph) -> Result<InvariantReport> {
    let n = g.n();
    let mut ecc = vec![0usize; n];
    let mut dist_sum = vec![0u64; n];
    for u in 0..n {
        let dist = g.bfs_distances(u)?;
        ecc[u] = dist.iter().copied().max().unwrap();
        dist_sum[u] = dist.into_iter().map(|d| d as u64).sum();
    }
    let degrees = g.degrees();
    let xi_vertices: u64 = (0..n).map(|u| (degrees[u] * ecc[u]) as u64).sum();
    let xi_edges: u64 = g.edges().into_iter().map(|(u, v)| (ecc[u] + ecc[v]) as u64).sum();
    assert_eq!(xi_vertices, xi_edges, "vertex-sum and edge-sum routes disagree");
    let radius = *ecc.iter().min().unwrap();
    let diameter = *ecc.iter().max().unwrap();
    Ok(InvariantReport {
        n,
        m: g.m(),
        xi: xi_vertices,
        wiener: dist_sum.iter().sum::<u64>() / 2,
        degree_distance: (0..n).map(|u| degrees[u] as u64 * dist_sum[u]).sum(),
        zagreb1: degrees.iter().map(|&d| (d * d) as u64).sum(),
        min_degree: *degrees.iter().min().unwrap(),
        max_degree: *degrees.iter().max().unwrap(),
        radius,
        diameter,
        self_centered: radius == diameter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_edge_list(n, &e).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edge_list(n, &(1..n).map(|v| (0, v)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn index_on_the_usual_suspects() {
        assert_eq!(eccentric_connectivity_index(&complete(4)).unwrap(), 12);
        assert_eq!(eccentric_connectivity_index(&star(5)).unwrap(), 12);
        assert_eq!(eccentric_connectivity_index(&cycle(6)).unwrap(), 36);
        assert_eq!(eccentric_connectivity_index(&cycle(5)).unwrap(), 20);
        assert_eq!(eccentric_connectivity_index(&path(4)).unwrap(), 14);
        assert_eq!(eccentric_connectivity_index(&path(1)).unwrap(), 0);
    }

    #[test]
    fn wiener_on_paths_and_cliques() {
        assert_eq!(wiener_index(&path(3)).unwrap(), 4);
        assert_eq!(wiener_index(&path(4)).unwrap(), 10);
        assert_eq!(wiener_index(&complete(4)).unwrap(), 6);
        assert_eq!(wiener_index(&cycle(5)).unwrap(), 15);
    }

    #[test]
    fn degree_distance_examples() {
        assert_eq!(degree_distance(&complete(3)).unwrap(), 12);
        assert_eq!(degree_distance(&path(3)).unwrap(), 10);
        assert_eq!(degree_distance(&complete(4)).unwrap(), 36);
        assert_eq!(degree_distance(&path(4)).unwrap(), 28);
    }

    #[test]
    fn zagreb_examples() {
        assert_eq!(first_zagreb(&path(4)), 10);
        assert_eq!(first_zagreb(&complete(4)), 36);
        assert_eq!(first_zagreb(&star(5)), 20);
        // defined even when disconnected
        let split = Graph::from_edge_list(4, &[(0, 1)]).unwrap();
        assert_eq!(first_zagreb(&split), 2);
    }

    #[test]
    fn report_on_c5() {
        let rep = invariant_report(&cycle(5)).unwrap();
        assert_eq!(rep.n, 5);
        assert_eq!(rep.m, 5);
        assert_eq!(rep.xi, 20);
        assert_eq!(rep.wiener, 15);
        assert_eq!(rep.zagreb1, 20);
        assert_eq!((rep.min_degree, rep.max_degree), (2, 2));
        assert_eq!((rep.radius, rep.diameter), (2, 2));
        assert!(rep.self_centered);
    }

    #[test]
    fn report_on_k1_is_all_zero() {
        let rep = invariant_report(&Graph::from_edge_list(1, &[]).unwrap()).unwrap();
        assert_eq!((rep.xi, rep.wiener, rep.degree_distance, rep.zagreb1), (0, 0, 0, 0));
        assert_eq!((rep.radius, rep.diameter), (0, 0));
        assert!(rep.self_centered);
    }

    #[test]
    fn report_on_p4() {
        let rep = invariant_report(&path(4)).unwrap();
        assert_eq!(rep.xi, 14);
        assert_eq!(rep.wiener, 10);
        assert_eq!(rep.degree_distance, 28);
        assert_eq!(rep.zagreb1, 10);
        assert!(!rep.self_centered);
    }

    #[test]
    fn disconnected_input_is_refused() {
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            eccentric_connectivity_index(&split),
            Err(Error::Disconnected { unreached: 2 })
        );
        assert!(invariant_report(&split).is_err());
    }

    #[test]
    fn vertex_transitive_graphs_factor_through_any_eccentricity() {
        for (g, e) in [(cycle(8), 4), (cycle(9), 4), (complete(7), 1)] {
            let xi = eccentric_connectivity_index(&g).unwrap();
            assert_eq!(xi, 2 * g.m() as u64 * e);
        }
    }
}
