//! A catalog of sharp bounds on the eccentric connectivity index. Each check
//! reports the bound value, whether it holds, whether it is tight, and
//! whether the graph belongs to the known equality class.

use serde::{Serialize, Serializer};
use std::fmt;

use crate::error::Result;
use crate::graph::{EccentricityProfile, Graph};
use crate::invariants::{degree_distance, first_zagreb, wiener_index};
use crate::rational::Rational;

/// Identifies one inequality from the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundId {
    Prop1Lower,
    Prop1Upper,
    Cor1Sum,
    Prop2StarMin,
    Prop3Join,
    Cor2Unicyclic,
    Cor3Bicyclic,
    Prop4DegDist,
    WienerLower,
    Prop5Zagreb,
    AvgEccUpper,
}

impl BoundId {
    pub const ALL: [BoundId; 11] = [
        BoundId::Prop1Lower,
        BoundId::Prop1Upper,
        BoundId::Cor1Sum,
        BoundId::Prop2StarMin,
        BoundId::Prop3Join,
        BoundId::Cor2Unicyclic,
        BoundId::Cor3Bicyclic,
        BoundId::Prop4DegDist,
        BoundId::WienerLower,
        BoundId::Prop5Zagreb,
        BoundId::AvgEccUpper,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Prop1Lower => "PROP1_LOWER",
            BoundId::Prop1Upper => "PROP1_UPPER",
            BoundId::Cor1Sum => "COR1_SUM",
            BoundId::Prop2StarMin => "PROP2_STAR_MIN",
            BoundId::Prop3Join => "PROP3_JOIN",
            BoundId::Cor2Unicyclic => "COR2_UNICYCLIC",
            BoundId::Cor3Bicyclic => "COR3_BICYCLIC",
            BoundId::Prop4DegDist => "PROP4_DEGDIST",
            BoundId::WienerLower => "WIENER_LOWER",
            BoundId::Prop5Zagreb => "PROP5_ZAGREB",
            BoundId::AvgEccUpper => "AVG_ECC_UPPER",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for BoundId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Outcome of evaluating one bound on one graph. An inapplicable bound
/// leaves the value fields empty and explains itself in `notes`; `holds`
/// is vacuously true in that case. For the complement-sum bound `xi_value`
/// carries the sum of the two indices.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub bound: BoundId,
    pub applicable: bool,
    pub bound_value: Option<Rational>,
    pub xi_value: Option<u64>,
    pub holds: bool,
    pub tight: bool,
    pub extremal_class_member: Option<bool>,
    pub notes: String,
}

impl BoundReport {
    fn not_applicable(bound: BoundId, why: &str) -> Self {
        BoundReport {
            bound,
            applicable: false,
            bound_value: None,
            xi_value: None,
            holds: true,
            tight: false,
            extremal_class_member: None,
            notes: why.to_string(),
        }
    }
}

pub fn check_bound(g: &Graph, id: BoundId) -> Result<BoundReport> {
    let prof = g.eccentricity_profile()?;
    Ok(eval(g, &prof, id))
}

/// Evaluates the whole catalog, in `BoundId::ALL` order.
pub fn check_all_bounds(g: &Graph) -> Result<Vec<BoundReport>> {
    let prof = g.eccentricity_profile()?;
    Ok(BoundId::ALL.iter().map(|&id| eval(g, &prof, id)).collect())
}

fn xi_of(g: &Graph, prof: &EccentricityProfile) -> u64 {
    (0..g.n()).map(|u| (g.degree(u) * prof.ecc[u]) as u64).sum()
}

fn is_star(g: &Graph) -> bool {
    g.n() >= 2 && g.m() == g.n() - 1 && g.max_degree() == g.n() - 1
}

fn is_path_graph(g: &Graph) -> bool {
    g.m() == g.n() - 1 && g.max_degree() <= 2
}

/// Recognizes K_n minus a k-edge matching: every degree is n-1 or n-2 and
/// the degree-(n-2) vertices pair up through their unique non-neighbors.
fn complete_minus_matching_k(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut deficient = Vec::new();
    for u in 0..n {
        match g.degree(u) {
            d if d + 1 == n => {}
            d if d + 2 == n => deficient.push(u),
            _ => return None,
        }
    }
    for &u in &deficient {
        let partner = (0..n).find(|&v| v != u && !g.has_edge(u, v))?;
        if g.degree(partner) + 2 != n {
            return None;
        }
    }
    Some(deficient.len() / 2)
}

fn eval(g: &Graph, prof: &EccentricityProfile, id: BoundId) -> BoundReport {
    let n = g.n() as u64;
    let m = g.m() as u64;
    let xi = xi_of(g, prof);
    let report = |bound_value: Rational, xi_value: u64, lower: bool, member: Option<bool>, class: &str| {
        let cmp = bound_value.cmp_u64(xi_value);
        let holds = if lower { cmp != std::cmp::Ordering::Greater } else { cmp != std::cmp::Ordering::Less };
        let tight = cmp == std::cmp::Ordering::Equal;
        BoundReport {
            bound: id,
            applicable: true,
            bound_value: Some(bound_value),
            xi_value: Some(xi_value),
            holds,
            tight,
            extremal_class_member: member,
            notes: if member == Some(true) { class.to_string() } else { String::new() },
        }
    };

    match id {
        BoundId::Prop1Lower => {
            let bound = Rational::from(2 * m * prof.radius as u64);
            report(bound, xi, true, Some(prof.self_centered), "self-centered")
        }
        BoundId::Prop1Upper => {
            let bound = Rational::from(2 * m * prof.diameter as u64);
            report(bound, xi, false, Some(prof.self_centered), "self-centered")
        }
        BoundId::Cor1Sum => {
            if n < 4 {
                return BoundReport::not_applicable(id, "needs n >= 4");
            }
            let gbar = g.complement();
            let Ok(bar_prof) = gbar.eccentricity_profile() else {
                return BoundReport::not_applicable(id, "complement is disconnected");
            };
            let sum = xi + xi_of(&gbar, &bar_prof);
            let member = prof.self_centered
                && prof.radius == 2
                && bar_prof.self_centered
                && bar_prof.radius == 2;
            report(
                Rational::from(2 * n * (n - 1)),
                sum,
                true,
                Some(member),
                "both self-centered with radius 2",
            )
        }
        BoundId::Prop2StarMin => {
            if n < 3 {
                return BoundReport::not_applicable(id, "needs n >= 3");
            }
            let class = if is_star(g) { "star" } else { "triangle" };
            let member = is_star(g) || n == 3;
            report(Rational::from(3 * (n - 1)), xi, true, Some(member), class)
        }
        BoundId::Prop3Join => {
            let Ok(a) = crate::families::a_nm(g.n(), g.m()) else {
                return BoundReport::not_applicable(id, "needs n - 1 <= m < n(n-1)/2");
            };
            let bound = 4 * m - a as u64 * (n - 1);
            let full = (0..g.n()).filter(|&u| g.degree(u) + 1 == g.n()).count();
            let rest_ecc2 =
                (0..g.n()).all(|u| g.degree(u) + 1 == g.n() || prof.ecc[u] == 2);
            let member = full == a && rest_ecc2;
            let class = format!("extremal join with a = {a}");
            report(Rational::from(bound), xi, true, Some(member), &class)
        }
        BoundId::Cor2Unicyclic => {
            if n < 4 || m != n {
                return BoundReport::not_applicable(id, "needs unicyclic (m = n) with n >= 4");
            }
            let member = g.max_degree() + 1 == g.n();
            report(Rational::from(3 * n + 1), xi, true, Some(member), "star plus an edge")
        }
        BoundId::Cor3Bicyclic => {
            if n < 5 || m != n + 1 {
                return BoundReport::not_applicable(id, "needs bicyclic (m = n + 1) with n >= 5");
            }
            let member = g.max_degree() + 1 == g.n();
            report(Rational::from(3 * n + 5), xi, true, Some(member), "star plus two edges")
        }
        BoundId::Prop4DegDist => {
            if n < 2 {
                return BoundReport::not_applicable(id, "needs n >= 2");
            }
            let dd = degree_distance(g).expect("connectivity already verified");
            let bound = Rational::new(dd as i128, (n - 1) as i128);
            let member = complete_minus_matching_k(g) == Some(0);
            report(bound, xi, true, Some(member), "complete graph")
        }
        BoundId::WienerLower => {
            if n < 2 {
                return BoundReport::not_applicable(id, "needs n >= 2");
            }
            let w = wiener_index(g).expect("connectivity already verified");
            let delta = g.min_degree() as u64;
            let bound = Rational::new((2 * delta * w) as i128, (n - 1) as i128);
            let member = complete_minus_matching_k(g) == Some(0);
            report(bound, xi, true, Some(member), "complete graph")
        }
        BoundId::Prop5Zagreb => {
            if n < 3 {
                return BoundReport::not_applicable(id, "needs n >= 3");
            }
            let bound = 2 * n * m - first_zagreb(g);
            let (member, class) = match complete_minus_matching_k(g) {
                Some(k) => (true, format!("K_n - ke with k = {k}")),
                None if g.n() == 4 && is_path_graph(g) => (true, "P_4".to_string()),
                None => (false, String::new()),
            };
            report(Rational::from(bound), xi, false, Some(member), &class)
        }
        BoundId::AvgEccUpper => {
            let delta = g.min_degree() as u64;
            let max = g.max_degree() as u64;
            let numer = (max * n) as i128 * (9 * n + 15 * delta + 15) as i128;
            let bound = Rational::new(numer, (4 * (delta + 1)) as i128);
            report(bound, xi, false, None, "")
        }
    }
}
