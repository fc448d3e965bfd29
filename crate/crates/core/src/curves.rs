//! Curve classes on `G/P`, recorded by their degrees against the
//! fundamental weights of the marked nodes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::orbits::flag_dimension;
use crate::rootsys::{LieType, NodeSet, RootDatum};

/// Degrees of a curve class, one per marked node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub degrees: BTreeMap<usize, i64>,
}

impl CurveClass {
    /// Degrees listed in increasing node order of `sigma`.
    pub fn new(sigma: &NodeSet, degrees: &[i64]) -> Result<Self> {
        if sigma.len() != degrees.len() {
            return Err(LieError::Precondition(format!(
                "{} degrees given for {} marked nodes",
                degrees.len(),
                sigma.len()
            )));
        }
        Ok(Self {
            degrees: sigma.iter().zip(degrees.iter().copied()).collect(),
        })
    }

    pub fn nodes(&self) -> NodeSet {
        self.degrees.keys().copied().collect()
    }

    pub fn degree(&self, node: usize) -> i64 {
        self.degrees.get(&node).copied().unwrap_or(0)
    }

    pub fn values(&self) -> Vec<i64> {
        self.degrees.values().copied().collect()
    }

    pub fn positivity(&self) -> Positivity {
        positivity(self)
    }

    /// Coordinates on the simple coroots, zero off the marked nodes.
    pub fn coroot_coordinates(&self, rank: usize) -> Vec<i64> {
        (0..rank).map(|i| self.degree(i)).collect()
    }

    fn check(&self, sigma: &NodeSet) -> Result<()> {
        if self.nodes() != *sigma {
            return Err(LieError::Precondition(format!(
                "class is keyed by {:?}, expected {:?}",
                self.nodes().0,
                sigma.0
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Positivity {
    Strict,
    Positive,
    Outside,
}

pub fn positivity(c: &CurveClass) -> Positivity {
    if c.degrees.values().any(|&d| d < 0) {
        Positivity::Outside
    } else if c.degrees.values().all(|&d| d > 0) {
        Positivity::Strict
    } else {
        Positivity::Positive
    }
}

fn check_sigma(rd: &RootDatum, sigma: &NodeSet) -> Result<()> {
    sigma.check(rd.rank())?;
    if sigma.is_empty() {
        return Err(LieError::Precondition(
            "G/P is a point when no node is marked".into(),
        ));
    }
    Ok(())
}

/// `deg T_{G/P}` on the class, summing coroot pairings of the roots outside
/// the Levi.
pub fn tangent_degree(rd: &RootDatum, sigma: &NodeSet, c: &CurveClass) -> Result<i64> {
    check_sigma(rd, sigma)?;
    c.check(sigma)?;
    let mut total = 0i64;
    for k in (0..rd.positive_count()).filter(|&k| rd.support_meets(k, sigma)) {
        for j in sigma.iter() {
            total += rd.coroot_pairing(k, j) as i64 * c.degree(j);
        }
    }
    Ok(total)
}

/// The same degree from `<2 rho, alpha_j^vee> = 2` minus the Levi's share.
pub fn tangent_degree_via_levi(rd: &RootDatum, sigma: &NodeSet, c: &CurveClass) -> Result<i64> {
    check_sigma(rd, sigma)?;
    c.check(sigma)?;
    let levi: Vec<usize> = (0..rd.positive_count())
        .filter(|&k| !rd.support_meets(k, sigma))
        .collect();
    Ok(sigma
        .iter()
        .map(|j| {
            let levi_share: i64 = levi.iter().map(|&k| rd.coroot_pairing(k, j) as i64).sum();
            c.degree(j) * (2 - levi_share)
        })
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertDimension {
    pub dimension: i64,
    /// Set when some degree is zero.
    pub boundary: bool,
}

/// `deg T + dim G/P - 3` for classes in the positive cone.
pub fn hilbert_dimension(
    rd: &RootDatum,
    sigma: &NodeSet,
    c: &CurveClass,
) -> Result<HilbertDimension> {
    let t = tangent_degree(rd, sigma, c)?;
    match positivity(c) {
        Positivity::Outside => Err(LieError::Precondition(
            "class lies outside the positive cone".into(),
        )),
        p => Ok(HilbertDimension {
            dimension: t + flag_dimension(rd, sigma) as i64 - 3,
            boundary: p == Positivity::Positive,
        }),
    }
}

/// A node whose removal from `Sigma(P)` gives a `P^1`-bundle `G/P -> G/P'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationCandidate {
    pub node: usize,
    pub target: NodeSet,
    /// `relative[j]` is the coefficient of `c_j` in the relative degree.
    pub relative: BTreeMap<usize, i64>,
}

impl FibrationCandidate {
    /// Degree of the class relative to the fibration, `<c, alpha_node>`.
    pub fn relative_degree(&self, c: &CurveClass) -> i64 {
        self.relative.iter().map(|(&j, &a)| a * c.degree(j)).sum()
    }
}

/// Marked nodes all of whose diagram neighbours are marked. For these `alpha_m`
/// is a character of `P`, and forgetting `m` gives a `P^1`-bundle.
pub fn p1_fibration_candidates(rd: &RootDatum, sigma: &NodeSet) -> Result<Vec<FibrationCandidate>> {
    sigma.check(rd.rank())?;
    Ok(sigma
        .iter()
        .filter(|&m| rd.neighbours(m).iter().all(|&n| sigma.contains(n)))
        .map(|m| {
            let mut target = sigma.clone();
            target.0.remove(&m);
            FibrationCandidate {
                node: m,
                target,
                relative: sigma
                    .iter()
                    .map(|j| (j, rd.cartan()[j][m] as i64))
                    .collect(),
            }
        })
        .collect())
}

/// A factor of the fiber containing a curve of a non-strict class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedFactor {
    pub lie_type: LieType,
    pub rank: usize,
    /// Ambient nodes in standard label order.
    pub nodes: Vec<usize>,
    /// Marked ambient nodes.
    pub marked: NodeSet,
    pub class: CurveClass,
    pub dimension: usize,
}

impl ReducedFactor {
    fn shape(&self) -> Shape {
        shape_of(self.dimension, self.marked.len())
    }
}

/// The fiber of `G/P -> G/P''`, `P''` marked by the zero-degree nodes, as a
/// product of flag varieties carrying strictly positive classes. Factors
/// with no marked node are points and are left out.
pub fn reduce_positive_class(
    rd: &RootDatum,
    sigma: &NodeSet,
    c: &CurveClass,
) -> Result<Vec<ReducedFactor>> {
    check_sigma(rd, sigma)?;
    c.check(sigma)?;
    match positivity(c) {
        Positivity::Outside => {
            return Err(LieError::Precondition(
                "class lies outside the positive cone".into(),
            ))
        }
        Positivity::Strict => {
            return Err(LieError::Precondition(
                "class is already strictly positive".into(),
            ))
        }
        Positivity::Positive => {}
    }
    let zeros: NodeSet = sigma.iter().filter(|&j| c.degree(j) == 0).collect();
    let mut out = Vec::new();
    for comp in rd.diagram_components_after_removal(&zeros)? {
        let marked: NodeSet = comp
            .nodes
            .iter()
            .copied()
            .filter(|&n| sigma.contains(n))
            .collect();
        if marked.is_empty() {
            continue;
        }
        let outside: NodeSet = comp
            .nodes
            .iter()
            .copied()
            .collect::<NodeSet>()
            .complement(rd.rank());
        let dimension = (0..rd.positive_count())
            .filter(|&k| !rd.support_meets(k, &outside) && rd.support_meets(k, &marked))
            .count();
        out.push(ReducedFactor {
            lie_type: comp.lie_type,
            rank: comp.rank,
            class: CurveClass {
                degrees: marked.iter().map(|j| (j, c.degree(j))).collect(),
            },
            nodes: comp.nodes,
            marked,
            dimension,
        });
    }
    Ok(out)
}

/// Whether a curve with splitting exponent `x` lifts at relative degree `d`,
/// and whether a nodal one lifts to a smooth curve.
pub fn lift_feasible(d: i64, x: i64) -> Result<(bool, bool)> {
    if d < 0 || x < 0 {
        return Err(LieError::Precondition(format!(
            "negative input d = {d}, x = {x}"
        )));
    }
    let liftable = (d - x) % 2 == 0 && d >= x;
    Ok((liftable, liftable && d > 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Exception {
    P1,
    P2,
    P1xP1,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceVerdict {
    pub mor_nonempty: bool,
    pub smooth_curve_exists: bool,
    pub reduction: Option<Vec<ReducedFactor>>,
    pub exception_hit: Option<Exception>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    P1,
    P2,
    Other,
}

// A flag variety of dimension 1 is P^1; of dimension 2 and Picard rank 1 it
// is P^2. Dimension 2 with Picard rank 2 would be P^1 x P^1, which a simple
// group does not produce.
fn shape_of(dimension: usize, picard_rank: usize) -> Shape {
    match (dimension, picard_rank) {
        (1, _) => Shape::P1,
        (2, 1) => Shape::P2,
        _ => Shape::Other,
    }
}

// Smooth rational curves of degree d exist on P^1 only for d = 1 and on P^2
// only for d <= 2 (plane curves have genus (d-1)(d-2)/2); on P^1 x P^1 a
// class (a, b) has genus (a-1)(b-1).
fn single(shape: Shape, degree: i64) -> (bool, Option<Exception>) {
    match shape {
        Shape::P1 => (degree == 1, Some(Exception::P1)),
        Shape::P2 => (degree <= 2, Some(Exception::P2)),
        Shape::Other => (true, None),
    }
}

/// Whether the class is represented by morphisms from `P^1` and by smooth
/// rational curves.
pub fn decide_smooth_rational_curve(
    rd: &RootDatum,
    sigma: &NodeSet,
    c: &CurveClass,
) -> Result<ExistenceVerdict> {
    check_sigma(rd, sigma)?;
    c.check(sigma)?;
    let verdict = |mor, smooth, reduction, exception_hit| ExistenceVerdict {
        mor_nonempty: mor,
        smooth_curve_exists: smooth,
        reduction,
        exception_hit,
    };
    match positivity(c) {
        Positivity::Outside => Ok(verdict(false, false, None, None)),
        Positivity::Strict => {
            let shape = shape_of(flag_dimension(rd, sigma), sigma.len());
            let degree = c.values()[0];
            let (smooth, exception) = single(shape, degree);
            Ok(verdict(true, smooth, None, exception))
        }
        Positivity::Positive => {
            let factors = reduce_positive_class(rd, sigma, c)?;
            let shapes: Vec<Shape> = factors.iter().map(ReducedFactor::shape).collect();
            let (smooth, exception) = match shapes.as_slice() {
                // Only constant maps.
                [] => (false, None),
                [s] => single(*s, factors[0].class.values()[0]),
                [Shape::P1, Shape::P1] => {
                    let a = factors[0].class.values()[0];
                    let b = factors[1].class.values()[0];
                    (a.min(b) <= 1, Some(Exception::P1xP1))
                }
                // Every other product has dimension at least 3.
                _ => (true, None),
            };
            Ok(verdict(true, smooth, Some(factors), exception))
        }
    }
}
