//! Closed-form average-eccentricity bounds, the structural constants they
//! are built from, ball-size audits, and per-graph bound reports.
//!
//! Bounds that are rational in `n` and `delta` are evaluated exactly; the
//! maximum-degree bounds involve square roots and are evaluated in floating
//! point, compared with an absolute tolerance of [`TOLERANCE`] on the bound
//! side.

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::cycles::forbidden_cycle_scan;
use crate::distance::{ball, eccentricity_profile};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::RationalJson;
use crate::scalar::{ceil_ratio, Real};
use crate::Rational;

/// Absolute tolerance for comparisons against irrational bound values.
pub const TOLERANCE: f64 = 1e-9;

/// Girth-6 ball constant `2 delta^2 - 2 delta + 2`.
pub fn delta_star(delta: usize) -> u64 {
    let d = delta as u64;
    2 * d * d + 2 - 2 * d
}

/// (C4, C5)-free ball constant: `2d^2 - 5d + 5` for even `d`, `+ 7` for odd.
pub fn delta_circ(delta: usize) -> u64 {
    let d = delta as u64;
    let tail = if d.is_multiple_of(2) { 5 } else { 7 };
    (2 * d * d + tail).saturating_sub(5 * d)
}

/// `Delta delta + (delta - 1) sqrt(Delta (delta - 2)) + 3/2`.
pub fn max_degree_star<F: Real>(delta: usize, max_degree: usize) -> F {
    let d = F::from_count(delta as u64);
    let big = F::from_count(max_degree as u64);
    let two = F::from_count(2);
    big * d + (d - F::one()) * (big * (d - two)).sqrt() + F::from_f64_lossy(1.5)
}

/// `Delta (delta - 1) + (delta - 2) sqrt(Delta (delta - 3)) + 3/2`.
pub fn max_degree_circ<F: Real>(delta: usize, max_degree: usize) -> F {
    let d = F::from_count(delta as u64);
    let big = F::from_count(max_degree as u64);
    let two = F::from_count(2);
    let three = F::from_count(3);
    big * (d - F::one()) + (d - two) * (big * (d - three)).sqrt() + F::from_f64_lossy(1.5)
}

/// Constants derived from the minimum and (optionally) maximum degree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StructuralConstants<F> {
    pub delta: usize,
    pub max_degree: Option<usize>,
    pub delta_star: u64,
    pub delta_circ: u64,
    pub max_star: Option<F>,
    pub max_circ: Option<F>,
}

pub fn structural_constants<F: Real>(
    delta: usize,
    max_degree: Option<usize>,
) -> Result<StructuralConstants<F>> {
    if delta < 3 {
        return Err(Error::OutOfRange(format!("minimum degree {delta} < 3")));
    }
    if let Some(big) = max_degree {
        if big < delta {
            return Err(Error::OutOfRange(format!(
                "maximum degree {big} below minimum degree {delta}"
            )));
        }
    }
    Ok(StructuralConstants {
        delta,
        max_degree,
        delta_star: delta_star(delta),
        delta_circ: delta_circ(delta),
        max_star: max_degree.map(|b| max_degree_star(delta, b)),
        max_circ: max_degree.map(|b| max_degree_circ(delta, b)),
    })
}

/// Maximum average eccentricity over connected graphs of order `n`,
/// attained by the path: `floor(3n^2/4 - n/2) / n`.
pub fn path_avec(n: usize) -> Rational {
    assert!(n >= 1, "path order must be positive");
    let n = n as i64;
    Rational::new((3 * n * n - 2 * n).div_euclid(4), n)
}

/// Names of the bounds evaluated in a [`BoundReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BoundName {
    #[serde(rename = "path_T11")]
    PathT11,
    #[serde(rename = "general_eq1")]
    GeneralEq1,
    #[serde(rename = "girth6_T31")]
    Girth6T31,
    #[serde(rename = "c4c5_T33")]
    C4c5T33,
    #[serde(rename = "girth6_maxdeg_T41")]
    Girth6MaxdegT41,
    #[serde(rename = "c4c5_maxdeg_T44")]
    C4c5MaxdegT44,
    #[serde(rename = "lower_T32")]
    LowerT32,
}

impl BoundName {
    pub const ALL: [BoundName; 7] = [
        BoundName::PathT11,
        BoundName::GeneralEq1,
        BoundName::Girth6T31,
        BoundName::C4c5T33,
        BoundName::Girth6MaxdegT41,
        BoundName::C4c5MaxdegT44,
        BoundName::LowerT32,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::PathT11 => "path_T11",
            BoundName::GeneralEq1 => "general_eq1",
            BoundName::Girth6T31 => "girth6_T31",
            BoundName::C4c5T33 => "c4c5_T33",
            BoundName::Girth6MaxdegT41 => "girth6_maxdeg_T41",
            BoundName::C4c5MaxdegT44 => "c4c5_maxdeg_T44",
            BoundName::LowerT32 => "lower_T32",
        }
    }

    pub fn is_lower(self) -> bool {
        self == BoundName::LowerT32
    }

    fn needs_max_degree(self) -> bool {
        matches!(self, BoundName::Girth6MaxdegT41 | BoundName::C4c5MaxdegT44)
    }

    fn needs_delta_three(self) -> bool {
        !matches!(self, BoundName::PathT11 | BoundName::GeneralEq1)
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for BoundName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundName::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown bound {s:?}")))
    }
}

// (9/2) ceil(n / k) + 8
fn ceil_bound(n: usize, k: u64) -> Rational {
    let c = ceil_ratio(&Rational::new(n as i64, k as i64));
    Rational::new(9, 2) * c + 8
}

/// Exact value of a bound when it is rational in its parameters.
///
/// Returns `None` for the maximum-degree bounds, which involve square roots.
pub fn exact_bound(name: BoundName, n: usize, delta: usize) -> Result<Option<Rational>> {
    if name.needs_delta_three() && delta < 3 {
        return Err(Error::OutOfRange(format!("{name} requires delta >= 3, got {delta}")));
    }
    let ni = n as i64;
    Ok(match name {
        BoundName::PathT11 => Some(path_avec(n.max(1))),
        BoundName::GeneralEq1 => {
            Some(Rational::new(9 * ni, 4 * (delta as i64 + 1)) + Rational::new(15, 4))
        }
        BoundName::Girth6T31 => Some(ceil_bound(n, delta_star(delta))),
        BoundName::C4c5T33 => Some(ceil_bound(n, delta_circ(delta))),
        BoundName::LowerT32 => Some(sharpness_lower_exact(n, delta)),
        BoundName::Girth6MaxdegT41 | BoundName::C4c5MaxdegT44 => None,
    })
}

// (n - D) / (2 k) * (9n + 3D) / n + 21
fn max_degree_bound<F: Real>(n: usize, k: u64, big: F) -> F {
    let n = F::from_count(n as u64);
    let k = F::from_count(k);
    let two = F::from_count(2);
    (n - big) / (two * k) * (F::from_count(9) * n + F::from_count(3) * big) / n
        + F::from_count(21)
}

/// Value of the named bound.
///
/// `max_degree` is required for the maximum-degree bounds and ignored
/// otherwise.
pub fn upper_bound<F: Real>(
    name: BoundName,
    n: usize,
    delta: usize,
    max_degree: Option<usize>,
) -> Result<F> {
    if name.needs_max_degree() {
        let big = max_degree
            .ok_or_else(|| Error::MissingParameter(format!("{name} needs the maximum degree")))?;
        let c = structural_constants::<F>(delta, Some(big))?;
        return Ok(match name {
            BoundName::Girth6MaxdegT41 => max_degree_bound(n, c.delta_star, c.max_star.unwrap()),
            _ => max_degree_bound(n, c.delta_circ, c.max_circ.unwrap()),
        });
    }
    let exact = exact_bound(name, n, delta)?.expect("rational bound");
    Ok(F::from_f64_lossy(exact.to_f64().unwrap()))
}

/// Lower bound `9n / (2 delta*) - 5` attained by the chained family.
pub fn sharpness_lower<F: Real>(n: usize, delta: usize) -> F {
    F::from_f64_lossy(sharpness_lower_exact(n, delta).to_f64().unwrap())
}

pub fn sharpness_lower_exact(n: usize, delta: usize) -> Rational {
    Rational::new(9 * n as i64, 2 * delta_star(delta) as i64) - 5
}

/// Graph class whose ball thresholds an audit uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditClass {
    Girth6,
    C4c5Free,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeAudit {
    pub edge: (usize, usize),
    pub ball_size: usize,
    pub margin: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexAudit {
    pub vertex: usize,
    pub ball_size: usize,
    pub margin: f64,
}

/// Ball sizes around every edge (radius 2) and every maximum-degree vertex
/// (radius 3) compared against the class thresholds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BallAudit {
    pub class: AuditClass,
    pub delta: usize,
    pub max_degree: usize,
    pub edge_threshold: u64,
    pub vertex_threshold: f64,
    pub edges: Vec<EdgeAudit>,
    pub vertices: Vec<VertexAudit>,
    pub min_edge_margin: i64,
    pub min_vertex_margin: f64,
    pub pass: bool,
    /// Thresholds exceeding the order cannot be met by any graph.
    pub threshold_exceeds_order: bool,
    /// Whether the graph actually belongs to `class`.
    pub hypotheses_hold: bool,
}

pub fn audit_balls(g: &Graph) -> Result<BallAudit> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let scan = forbidden_cycle_scan(g);
    let class = if scan.class_girth6 {
        AuditClass::Girth6
    } else if scan.class_c4c5free {
        AuditClass::C4c5Free
    } else {
        return Err(Error::NotApplicable(
            "graph contains a 4-cycle or a 5-cycle".into(),
        ));
    };
    audit_balls_as(g, class)
}

/// Audits `g` against the thresholds of `class` without requiring membership;
/// `hypotheses_hold` records whether `g` is actually in the class.
pub fn audit_balls_as(g: &Graph, class: AuditClass) -> Result<BallAudit> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let scan = forbidden_cycle_scan(g);
    let hypotheses_hold = match class {
        AuditClass::Girth6 => scan.class_girth6,
        AuditClass::C4c5Free => scan.class_c4c5free,
    };
    let delta = g.min_degree();
    let big = g.max_degree();
    let c = structural_constants::<f64>(delta, Some(big))?;
    let (edge_threshold, vertex_threshold) = match class {
        AuditClass::Girth6 => (c.delta_star, c.max_star.unwrap()),
        AuditClass::C4c5Free => (c.delta_circ, c.max_circ.unwrap()),
    };
    let edges: Vec<EdgeAudit> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let size = ball(g, &[u, v], 2).expect("valid edge").len();
            EdgeAudit {
                edge: (u, v),
                ball_size: size,
                margin: size as i64 - edge_threshold as i64,
            }
        })
        .collect();
    let vertices: Vec<VertexAudit> = (0..g.n())
        .filter(|&v| g.degree(v) == big)
        .map(|v| {
            let size = ball(g, &[v], 3).expect("valid vertex").len();
            VertexAudit {
                vertex: v,
                ball_size: size,
                margin: size as f64 - vertex_threshold,
            }
        })
        .collect();
    let min_edge_margin = edges.iter().map(|e| e.margin).min().unwrap_or(0);
    let min_vertex_margin = vertices
        .iter()
        .map(|v| v.margin)
        .fold(f64::INFINITY, f64::min);
    Ok(BallAudit {
        class,
        delta,
        max_degree: big,
        edge_threshold,
        vertex_threshold,
        pass: min_edge_margin >= 0 && min_vertex_margin >= -TOLERANCE,
        threshold_exceeds_order: edge_threshold as usize > g.n()
            || vertex_threshold > g.n() as f64 + TOLERANCE,
        edges,
        vertices,
        min_edge_margin,
        min_vertex_margin,
        hypotheses_hold,
    })
}

/// Family membership used to decide whether the family lower bound applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyTag {
    /// Chain built with the default incidence-graph head.
    Chain { delta: usize, ell: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: BoundName,
    pub value: Option<f64>,
    pub applicable: bool,
    /// `bound - avec` for upper bounds, `avec - bound` for the lower bound.
    pub slack: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub delta: usize,
    pub max_degree: usize,
    pub girth_class: bool,
    pub c4c5_class: bool,
    /// Total eccentricity over the order, not reduced.
    pub avec: RationalJson,
    pub bounds: Vec<BoundEntry>,
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyTag>,
    pub notes: Vec<String>,
}

const PLUS_EIGHT_NOTE: &str =
    "girth6_T31 uses the additive constant +8; a +7 constant is sometimes quoted for the same bound";

impl BoundReport {
    pub fn avec(&self) -> Rational {
        self.avec.into()
    }

    pub fn bound(&self, name: BoundName) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn csv_header() -> &'static str {
        "n,delta,max_degree,ell,avec_num,avec_den,lower_T32,girth6_T31,slack_upper,slack_lower,pass"
    }

    pub fn csv_row(&self) -> String {
        let opt = |x: Option<f64>| x.map_or(String::new(), |v| v.to_string());
        let get = |name| self.bound(name).and_then(|b: &BoundEntry| b.value);
        let slack = |name| self.bound(name).and_then(|b: &BoundEntry| b.slack);
        let ell = match self.family {
            Some(FamilyTag::Chain { ell, .. }) => ell.to_string(),
            None => String::new(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.delta,
            self.max_degree,
            ell,
            self.avec.num,
            self.avec.den,
            opt(get(BoundName::LowerT32)),
            opt(get(BoundName::Girth6T31)),
            opt(slack(BoundName::Girth6T31)),
            opt(slack(BoundName::LowerT32)),
            self.pass()
        )
    }
}

/// Computes the exact average eccentricity and evaluates every bound whose
/// hypotheses the graph satisfies.
pub fn analyze(g: &Graph, family: Option<FamilyTag>) -> Result<BoundReport> {
    let profile = eccentricity_profile(g)?;
    let avec = profile.avec;
    let avec_f = avec.to_f64().unwrap();
    let scan = forbidden_cycle_scan(g);
    let n = g.n();
    let delta = g.min_degree();
    let big = g.max_degree();

    let mut bounds = Vec::new();
    let mut violations = Vec::new();
    for name in BoundName::ALL {
        let applicable = match name {
            BoundName::PathT11 | BoundName::GeneralEq1 => true,
            BoundName::Girth6T31 | BoundName::Girth6MaxdegT41 => scan.class_girth6 && delta >= 3,
            BoundName::C4c5T33 | BoundName::C4c5MaxdegT44 => scan.class_c4c5free && delta >= 3,
            BoundName::LowerT32 => family.is_some() && delta >= 3,
        };
        let computable = !name.needs_delta_three() || delta >= 3;
        let reported = computable && (!name.is_lower() || family.is_some());
        if !reported {
            bounds.push(BoundEntry {
                name,
                value: None,
                applicable: false,
                slack: None,
            });
            continue;
        }
        let value: f64 = upper_bound(name, n, delta, Some(big))?;
        let exact = exact_bound(name, n, delta)?;
        let (slack, violated) = match (exact, name.is_lower()) {
            (Some(b), false) => ((b - avec).to_f64().unwrap(), b < avec),
            (Some(b), true) => ((avec - b).to_f64().unwrap(), b > avec),
            (None, _) => (value - avec_f, avec_f > value + TOLERANCE),
        };
        if applicable && violated {
            violations.push(format!("{name}: bound {value} vs avec {avec}"));
        }
        bounds.push(BoundEntry {
            name,
            value: Some(value),
            applicable,
            slack: applicable.then_some(slack),
        });
    }
    Ok(BoundReport {
        n,
        delta,
        max_degree: big,
        girth_class: scan.class_girth6,
        c4c5_class: scan.class_c4c5free,
        avec: RationalJson {
            num: profile.ex_total as i64,
            den: n as i64,
        },
        bounds,
        violations,
        family,
        notes: vec![PLUS_EIGHT_NOTE.to_string()],
    })
}
