//! Parametric graph families with known eccentric connectivity index values:
//! the classical families, the extremal trees for fixed diameter or pendent
//! count, and the join construction that is extremal for fixed edge count.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A buildable family member. `TreeDiamMin` and `TreePendMax` carry one
/// extra coordinate selecting a member of the extremal class; `family_size`
/// counts the whole class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Star { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { r: usize, s: usize },
    /// Complete graph minus a k-edge matching.
    CompleteMinusMatching { n: usize, k: usize },
    /// Star plus `t` extra edges between leaves; for `t = 2` the two edges
    /// either share a leaf or not.
    StarPlusEdges { n: usize, t: usize, adjacent: bool },
    /// `K_a` joined to a near-empty remainder, with `a = a(n, m)`; the
    /// minimizer of the index among graphs with n vertices and m edges.
    JoinExtremal { n: usize, m: usize },
    /// Path of length `d` with the remaining vertices pendent on its one or
    /// two central vertices; `j` of them go on the lower-index center.
    TreeDiamMin { n: usize, d: usize, j: usize },
    /// Double broom: path on `n - p` vertices with `a` pendents on one end
    /// and `p - a` on the other.
    TreePendMax { n: usize, p: usize, a: usize },
    /// Path on `n - 1` vertices with one pendent at position `i`.
    PathPlusPendant { n: usize, i: usize },
    /// Two adjacent centers carrying `a` and `n - 2 - a` pendents.
    DoubleStar { n: usize, a: usize },
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete-bipartite",
            FamilySpec::CompleteMinusMatching { .. } => "complete-minus-matching",
            FamilySpec::StarPlusEdges { .. } => "star-plus-edges",
            FamilySpec::JoinExtremal { .. } => "join-extremal",
            FamilySpec::TreeDiamMin { .. } => "tree-diam-min",
            FamilySpec::TreePendMax { .. } => "tree-pend-max",
            FamilySpec::PathPlusPendant { .. } => "path-plus-pendant",
            FamilySpec::DoubleStar { .. } => "double-star",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Domain(msg));
        match *self {
            FamilySpec::Path { n } | FamilySpec::Star { n } | FamilySpec::Complete { n } => {
                if n < 1 {
                    return fail(format!("{} needs n >= 1", self.tag()));
                }
            }
            FamilySpec::Cycle { n } => {
                if n < 3 {
                    return fail(format!("cycle needs n >= 3, got n = {n}"));
                }
            }
            FamilySpec::CompleteBipartite { r, s } => {
                if r < 1 || s < 1 {
                    return fail(format!("complete-bipartite needs r, s >= 1, got {r}, {s}"));
                }
            }
            FamilySpec::CompleteMinusMatching { n, k } => {
                if n < 1 || k > n / 2 {
                    return fail(format!(
                        "complete-minus-matching needs 0 <= k <= n/2, got n = {n}, k = {k}"
                    ));
                }
                if n == 2 && k == 1 {
                    return fail("removing the only edge of K_2 disconnects it".into());
                }
            }
            FamilySpec::StarPlusEdges { n, t, .. } => {
                if t != 1 && t != 2 {
                    return fail(format!("star-plus-edges supports t in {{1, 2}}, got t = {t}"));
                }
                if t == 1 && n < 4 {
                    return fail(format!("star plus one edge needs n >= 4, got n = {n}"));
                }
                if t == 2 && n < 5 {
                    return fail(format!("star plus two edges needs n >= 5, got n = {n}"));
                }
            }
            FamilySpec::JoinExtremal { n, m } => {
                if n < 3 || m + 1 < n || 2 * m >= n * (n - 1) {
                    return fail(format!(
                        "join-extremal needs n >= 3 and n - 1 <= m < n(n-1)/2, got n = {n}, m = {m}"
                    ));
                }
            }
            FamilySpec::TreeDiamMin { n, d, j } => {
                if d < 2 || d + 2 > n {
                    return fail(format!(
                        "tree-diam-min needs 2 <= d <= n - 2, got n = {n}, d = {d}"
                    ));
                }
                if j > n - d - 1 {
                    return fail(format!(
                        "tree-diam-min needs j <= n - d - 1 = {}, got j = {j}",
                        n - d - 1
                    ));
                }
            }
            FamilySpec::TreePendMax { n, p, a } => {
                if p < 2 || p + 2 > n {
                    return fail(format!(
                        "tree-pend-max needs 2 <= p <= n - 2, got n = {n}, p = {p}"
                    ));
                }
                if a < 1 || a > p / 2 {
                    return fail(format!(
                        "tree-pend-max needs 1 <= a <= p/2 = {}, got a = {a}",
                        p / 2
                    ));
                }
            }
            FamilySpec::PathPlusPendant { n, i } => {
                if n < 4 || i < 1 || i > (n - 2) / 2 {
                    return fail(format!(
                        "path-plus-pendant needs 1 <= i <= (n-2)/2, got n = {n}, i = {i}"
                    ));
                }
            }
            FamilySpec::DoubleStar { n, a } => {
                if n < 4 || a < 1 || a > (n - 2) / 2 {
                    return fail(format!(
                        "double-star needs 1 <= a <= (n-2)/2, got n = {n}, a = {a}"
                    ));
                }
            }
        }
        Ok(())
    }

    /// Builds the member with a fixed deterministic labelling.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let n = match *self {
            FamilySpec::Path { n } => {
                edges.extend((0..n - 1).map(|i| (i, i + 1)));
                n
            }
            FamilySpec::Star { n } => {
                edges.extend((1..n).map(|v| (0, v)));
                n
            }
            FamilySpec::Cycle { n } => {
                edges.extend((0..n).map(|i| (i, (i + 1) % n)));
                n
            }
            FamilySpec::Complete { n } => {
                for u in 0..n {
                    edges.extend((u + 1..n).map(|v| (u, v)));
                }
                n
            }
            FamilySpec::CompleteBipartite { r, s } => {
                for u in 0..r {
                    edges.extend((r..r + s).map(|v| (u, v)));
                }
                r + s
            }
            FamilySpec::CompleteMinusMatching { n, k } => {
                for u in 0..n {
                    for v in u + 1..n {
                        let matched = v == u + 1 && u % 2 == 0 && v < 2 * k;
                        if !matched {
                            edges.push((u, v));
                        }
                    }
                }
                n
            }
            FamilySpec::StarPlusEdges { n, t, adjacent } => {
                edges.extend((1..n).map(|v| (0, v)));
                if t == 1 {
                    edges.push((1, 2));
                } else if adjacent {
                    edges.push((1, 2));
                    edges.push((1, 3));
                } else {
                    edges.push((1, 2));
                    edges.push((3, 4));
                }
                n
            }
            FamilySpec::JoinExtremal { n, m } => {
                let a = a_nm(n, m)?;
                for u in 0..a {
                    edges.extend((u + 1..n).map(|v| (u, v)));
                }
                let mut remaining = m - a * (a - 1) / 2 - a * (n - a);
                'outer: for u in a..n {
                    for v in u + 1..n {
                        if remaining == 0 {
                            break 'outer;
                        }
                        edges.push((u, v));
                        remaining -= 1;
                    }
                }
                n
            }
            FamilySpec::TreeDiamMin { n, d, j } => {
                edges.extend((0..d).map(|i| (i, i + 1)));
                let split = if d % 2 == 0 { n - d - 1 } else { j };
                for (idx, w) in (d + 1..n).enumerate() {
                    let anchor = if idx < split { d / 2 } else { d.div_ceil(2) };
                    edges.push((anchor, w));
                }
                n
            }
            FamilySpec::TreePendMax { n, p, a } => {
                let q = n - p;
                edges.extend((0..q - 1).map(|i| (i, i + 1)));
                edges.extend((q..q + a).map(|w| (0, w)));
                edges.extend((q + a..n).map(|w| (q - 1, w)));
                n
            }
            FamilySpec::PathPlusPendant { n, i } => {
                edges.extend((0..n - 2).map(|v| (v, v + 1)));
                edges.push((i, n - 1));
                n
            }
            FamilySpec::DoubleStar { n, a } => {
                edges.push((0, 1));
                edges.extend((2..2 + a).map(|w| (0, w)));
                edges.extend((2 + a..n).map(|w| (1, w)));
                n
            }
        };
        Graph::from_edge_list(n, &edges)
    }

    /// The closed-form index value, where one is known. Specs outside the
    /// closed-form catalog get an unsupported-form error.
    pub fn closed_form_xi(&self) -> Result<u64> {
        self.validate()?;
        let val = match *self {
            FamilySpec::Path { n } => path_xi(n),
            FamilySpec::Star { n } => match n {
                1 => 0,
                2 => 2,
                _ => 3 * (n as u64 - 1),
            },
            FamilySpec::Cycle { n } => 2 * n as u64 * (n as u64 / 2),
            FamilySpec::Complete { n } => n as u64 * (n as u64 - 1),
            FamilySpec::CompleteBipartite { r, s } => {
                if r < 2 || s < 2 {
                    return Err(Error::UnsupportedForm(
                        "the 4rs form for complete bipartite graphs needs r, s >= 2".into(),
                    ));
                }
                4 * r as u64 * s as u64
            }
            FamilySpec::CompleteMinusMatching { n, k } => {
                let (n, k) = (n as u64, k as u64);
                if k == 0 {
                    n * (n - 1)
                } else {
                    (n - 2 * k) * (n - 1) + 4 * k * (n - 2)
                }
            }
            FamilySpec::StarPlusEdges { n, t, .. } => {
                if t == 1 {
                    3 * n as u64 + 1
                } else {
                    3 * n as u64 + 5
                }
            }
            FamilySpec::JoinExtremal { n, m } => {
                let a = a_nm(n, m)?;
                if m - a * (a - 1) / 2 - a * (n - a) != 0 {
                    return Err(Error::UnsupportedForm(
                        "join-extremal has a closed form only when the joined part is edgeless"
                            .into(),
                    ));
                }
                4 * m as u64 - (a * (n - 1)) as u64
            }
            FamilySpec::TreeDiamMin { n, d, .. } => diam_min_xi(n, d),
            FamilySpec::TreePendMax { n, p, .. } => pend_max_xi(n, p),
            FamilySpec::PathPlusPendant { n, i } => {
                let base = 3 * (n as u64 - 1) * (n as u64 - 1) / 2 - n as u64;
                match i {
                    1 => base,
                    2 => base - 2,
                    _ => {
                        return Err(Error::UnsupportedForm(
                            "path-plus-pendant has catalog values only for i = 1 and i = 2".into(),
                        ))
                    }
                }
            }
            FamilySpec::DoubleStar { n, .. } => 5 * n as u64 - 6,
        };
        Ok(val)
    }
}

/// Index of a path on `n` vertices: floor((3(n-1)^2 + 1) / 2).
pub fn path_xi(n: usize) -> u64 {
    let d = n as u64 - 1;
    (3 * d * d + 1) / 2
}

/// Minimum index over trees with n vertices and diameter d. The pendent
/// block sits at distance ceil(d/2) + 1 from the far end of the spine, which
/// is where the ceiling comes from.
pub fn diam_min_xi(n: usize, d: usize) -> u64 {
    let (n, d) = (n as u64, d as u64);
    (3 * d * d + 1) / 2 + (n - d - 1) * (1 + 2 * d.div_ceil(2))
}

/// Maximum index over trees with n vertices and p pendent vertices.
pub fn pend_max_xi(n: usize, p: usize) -> u64 {
    let (n, p) = (n as u64, p as u64);
    let q = n - p + 1;
    (3 * q * q + 1) / 2 + (p - 2) * (2 * n - 2 * p + 1)
}

/// The join parameter a(n, m): the largest `a` with
/// `2m >= a(n - 1) + a(n - a)`, i.e. the clique size of the extremal join.
pub fn a_nm(n: usize, m: usize) -> Result<usize> {
    if n < 3 || m + 1 < n || 2 * m >= n * (n - 1) {
        return Err(Error::Domain(format!(
            "a(n, m) needs n >= 3 and n - 1 <= m < n(n-1)/2, got n = {n}, m = {m}"
        )));
    }
    let h = |a: i128| a * a + a - 2 * (n as i128) * a + 2 * m as i128;
    let mut a: i128 = 1;
    while h(a + 1) >= 0 {
        a += 1;
    }
    Ok(a as usize)
}

/// Number of non-isomorphic members of an extremal class. Supported for the
/// three specs that describe whole classes rather than single graphs.
pub fn family_size(spec: &FamilySpec) -> Result<u64> {
    spec.validate()?;
    match *spec {
        FamilySpec::TreeDiamMin { n, d, .. } => {
            Ok(if d % 2 == 0 { 1 } else { ((n - d + 1) / 2) as u64 })
        }
        FamilySpec::TreePendMax { p, .. } => Ok((p / 2) as u64),
        FamilySpec::DoubleStar { n, .. } => Ok(((n - 2) / 2) as u64),
        _ => Err(Error::Domain(format!(
            "family_size covers tree-diam-min, tree-pend-max and double-star, not {}",
            spec.tag()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::eccentric_connectivity_index;

    fn xi(spec: &FamilySpec) -> u64 {
        eccentric_connectivity_index(&spec.build().unwrap()).unwrap()
    }

    #[test]
    fn double_star_shape() {
        let g = FamilySpec::DoubleStar { n: 6, a: 2 }.build().unwrap();
        let mut degs = g.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 1, 3, 3]);
    }

    #[test]
    fn diam_min_member_shape() {
        let g = FamilySpec::TreeDiamMin { n: 7, d: 4, j: 0 }.build().unwrap();
        assert!(g.is_tree());
        assert_eq!(g.degree(2), 4);
        assert_eq!(g.eccentricity_profile().unwrap().diameter, 4);
    }

    #[test]
    fn star_plus_edges_shape() {
        let g = FamilySpec::StarPlusEdges { n: 5, t: 1, adjacent: true }.build().unwrap();
        assert_eq!(g.m(), 5);
        let mut degs = g.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2, 4]);
    }

    #[test]
    fn join_extremal_5_7_is_k2_join_empty() {
        let g = FamilySpec::JoinExtremal { n: 5, m: 7 }.build().unwrap();
        let mut degs = g.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 4, 4]);
        assert_eq!(xi(&FamilySpec::JoinExtremal { n: 5, m: 7 }), 20);
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(FamilySpec::Path { n: 6 }.closed_form_xi().unwrap(), 38);
        assert_eq!(FamilySpec::CompleteBipartite { r: 2, s: 3 }.closed_form_xi().unwrap(), 24);
        assert_eq!(FamilySpec::TreeDiamMin { n: 7, d: 4, j: 0 }.closed_form_xi().unwrap(), 34);
        assert_eq!(FamilySpec::TreePendMax { n: 7, p: 4, a: 1 }.closed_form_xi().unwrap(), 38);
        assert_eq!(
            FamilySpec::CompleteMinusMatching { n: 4, k: 2 }.closed_form_xi().unwrap(),
            16
        );
        assert_eq!(FamilySpec::Star { n: 5 }.closed_form_xi().unwrap(), 12);
        assert_eq!(FamilySpec::Star { n: 2 }.closed_form_xi().unwrap(), 2);
        assert_eq!(FamilySpec::Cycle { n: 6 }.closed_form_xi().unwrap(), 36);
        assert_eq!(
            FamilySpec::StarPlusEdges { n: 6, t: 2, adjacent: true }.closed_form_xi().unwrap(),
            23
        );
        assert_eq!(FamilySpec::DoubleStar { n: 6, a: 1 }.closed_form_xi().unwrap(), 24);
        assert_eq!(FamilySpec::PathPlusPendant { n: 6, i: 1 }.closed_form_xi().unwrap(), 31);
        assert_eq!(FamilySpec::PathPlusPendant { n: 6, i: 2 }.closed_form_xi().unwrap(), 29);
        assert_eq!(FamilySpec::JoinExtremal { n: 5, m: 7 }.closed_form_xi().unwrap(), 20);
    }

    #[test]
    fn closed_form_matches_construction_spot_checks() {
        let specs = [
            FamilySpec::Path { n: 9 },
            FamilySpec::Cycle { n: 7 },
            FamilySpec::Complete { n: 6 },
            FamilySpec::CompleteBipartite { r: 3, s: 4 },
            FamilySpec::CompleteMinusMatching { n: 7, k: 3 },
            FamilySpec::StarPlusEdges { n: 7, t: 2, adjacent: false },
            FamilySpec::TreeDiamMin { n: 9, d: 5, j: 1 },
            FamilySpec::TreePendMax { n: 9, p: 5, a: 2 },
            FamilySpec::PathPlusPendant { n: 8, i: 2 },
            FamilySpec::DoubleStar { n: 9, a: 3 },
        ];
        for spec in specs {
            assert_eq!(spec.closed_form_xi().unwrap(), xi(&spec), "{spec:?}");
        }
    }

    #[test]
    fn unsupported_closed_forms() {
        // star on one side: the 4rs form does not apply
        assert!(matches!(
            FamilySpec::CompleteBipartite { r: 1, s: 5 }.closed_form_xi(),
            Err(Error::UnsupportedForm(_))
        ));
        // join with leftover edges inside the joined part
        assert!(matches!(
            FamilySpec::JoinExtremal { n: 5, m: 8 }.closed_form_xi(),
            Err(Error::UnsupportedForm(_))
        ));
        assert!(matches!(
            FamilySpec::PathPlusPendant { n: 10, i: 3 }.closed_form_xi(),
            Err(Error::UnsupportedForm(_))
        ));
    }

    #[test]
    fn path_parity_forms() {
        for n in 1..=60u64 {
            let expect = if n % 2 == 0 {
                (3 * n * n + 4 - 6 * n) / 2
            } else {
                (3 * n * n + 3 - 6 * n) / 2
            };
            assert_eq!(path_xi(n as usize), expect, "n = {n}");
        }
    }

    #[test]
    fn cycle_parity_forms() {
        for n in 3..=60 {
            let expect = if n % 2 == 0 { n * n } else { n * (n - 1) };
            assert_eq!(FamilySpec::Cycle { n: n as usize }.closed_form_xi().unwrap(), expect);
        }
    }

    #[test]
    fn a_nm_examples() {
        assert_eq!(a_nm(5, 7).unwrap(), 2);
        for n in 4..=12 {
            assert_eq!(a_nm(n, n).unwrap(), 1, "unicyclic n = {n}");
        }
        for n in 5..=12 {
            assert_eq!(a_nm(n, n + 1).unwrap(), 1, "bicyclic n = {n}");
        }
        assert!(a_nm(4, 2).is_err());
        assert!(a_nm(4, 6).is_err());
    }

    #[test]
    fn family_sizes() {
        assert_eq!(family_size(&FamilySpec::TreeDiamMin { n: 10, d: 5, j: 0 }).unwrap(), 3);
        assert_eq!(family_size(&FamilySpec::TreeDiamMin { n: 10, d: 4, j: 0 }).unwrap(), 1);
        assert_eq!(family_size(&FamilySpec::DoubleStar { n: 6, a: 1 }).unwrap(), 2);
        assert_eq!(family_size(&FamilySpec::TreePendMax { n: 9, p: 5, a: 1 }).unwrap(), 2);
        assert!(family_size(&FamilySpec::Path { n: 5 }).is_err());
    }

    #[test]
    fn domain_violations_are_named() {
        assert!(FamilySpec::Cycle { n: 2 }.build().is_err());
        assert!(FamilySpec::CompleteMinusMatching { n: 2, k: 1 }.build().is_err());
        assert!(FamilySpec::TreeDiamMin { n: 5, d: 4, j: 0 }.build().is_err());
        assert!(FamilySpec::TreePendMax { n: 7, p: 4, a: 3 }.build().is_err());
        assert!(FamilySpec::StarPlusEdges { n: 4, t: 2, adjacent: true }.build().is_err());
        assert!(FamilySpec::DoubleStar { n: 6, a: 3 }.build().is_err());
        assert!(FamilySpec::JoinExtremal { n: 5, m: 10 }.build().is_err());
    }

    #[test]
    fn join_extremal_hits_its_bound_for_all_small_cases() {
        for n in 3..=9 {
            for m in n - 1..n * (n - 1) / 2 {
                let spec = FamilySpec::JoinExtremal { n, m };
                let g = spec.build().unwrap();
                assert_eq!(g.m(), m);
                let a = a_nm(n, m).unwrap() as u64;
                let bound = 4 * m as u64 - a * (n as u64 - 1);
                assert_eq!(
                    eccentric_connectivity_index(&g).unwrap(),
                    bound,
                    "n = {n}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn diam_min_members_share_one_value_per_class() {
        for n in 5..=10 {
            for d in 2..=n - 2 {
                let want = diam_min_xi(n, d);
                for j in 0..=n - d - 1 {
                    assert_eq!(xi(&FamilySpec::TreeDiamMin { n, d, j }), want, "n={n} d={d} j={j}");
                }
            }
        }
    }

    #[test]
    fn pend_max_members_share_one_value_per_class() {
        for n in 5..=10 {
            for p in 2..=n - 2 {
                let want = pend_max_xi(n, p);
                for a in 1..=p / 2 {
                    let g = FamilySpec::TreePendMax { n, p, a }.build().unwrap();
                    assert_eq!(g.pendent_count(), p, "n={n} p={p} a={a}");
                    assert_eq!(eccentric_connectivity_index(&g).unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn diam_min_value_steps_between_consecutive_diameters() {
        for n in 6..=12u64 {
            for d in 3..=n - 2 {
                let step = diam_min_xi(n as usize, d as usize)
                    - diam_min_xi(n as usize, d as usize - 1);
                let want = if d % 2 == 0 { 2 * d - 3 } else { 2 * n - 3 };
                assert_eq!(step, want, "n = {n}, d = {d}");
            }
        }
    }
}
