//! Orbits of a parabolic `P'` on `G/P`.
//!
//! Both parabolics contain the standard Borel and are given by their marked
//! nodes. The orbit of `w` is `P'wP/P`, isomorphic to `P'/(P' n w(P))`.

use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::parabolic::{contains_borel, standard_parabolic, RootSubset};
use crate::rootsys::{LieType, NodeSet, RootDatum};
use crate::weyl::{double_coset_orbits, WeylElement};

/// `dim G/P`: positive roots whose support meets `sigma`.
pub fn flag_dimension(rd: &RootDatum, sigma: &NodeSet) -> usize {
    (0..rd.positive_count())
        .filter(|&k| rd.support_meets(k, sigma))
        .count()
}

/// `|p'| - |p' n w(p)|`.
pub fn orbit_dimension(
    rd: &RootDatum,
    w: &WeylElement,
    p_nodes: &NodeSet,
    pprime_nodes: &NodeSet,
) -> Result<usize> {
    let p = standard_parabolic(rd, p_nodes)?;
    let pp = standard_parabolic(rd, pprime_nodes)?;
    let wp = p.roots().image(w);
    Ok(pp.roots().len() - pp.roots().intersection(&wp).len())
}

/// Whether `P'wP/P` is dense, tested as `p n -w^-1(p')` containing a Borel.
pub fn is_dense_orbit(
    rd: &RootDatum,
    w: &WeylElement,
    p_nodes: &NodeSet,
    pprime_nodes: &NodeSet,
) -> Result<bool> {
    let p = standard_parabolic(rd, p_nodes)?;
    let pp = standard_parabolic(rd, pprime_nodes)?;
    let s = p
        .roots()
        .intersection(&pp.roots().image(&w.inverse()).negated(rd));
    Ok(contains_borel(rd, &s, None)?.is_some())
}

/// Whether `w` lies in `W(P') w0 W(P)`.
pub fn in_longest_double_coset(
    rd: &RootDatum,
    w: &WeylElement,
    p_nodes: &NodeSet,
    pprime_nodes: &NodeSet,
) -> Result<bool> {
    let w0 = WeylElement::longest(rd);
    let orbits = double_coset_orbits(
        rd,
        &pprime_nodes.complement(rd.rank()),
        &p_nodes.complement(rd.rank()),
    )?;
    Ok(orbits.iter().any(|o| o.contains(&w0) && o.contains(w)))
}

/// One `P'`-orbit of `G/P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDescriptor {
    pub w: WeylElement,
    pub p_nodes: NodeSet,
    pub pprime_nodes: NodeSet,
    pub dimension: usize,
    pub dense: bool,
    /// Number of Weyl group elements in the double coset.
    pub size: usize,
}

/// All `P'`-orbits of `G/P`, smallest representative first.
pub fn orbit_table(
    rd: &RootDatum,
    p_nodes: &NodeSet,
    pprime_nodes: &NodeSet,
) -> Result<Vec<OrbitDescriptor>> {
    p_nodes.check(rd.rank())?;
    pprime_nodes.check(rd.rank())?;
    let full = flag_dimension(rd, p_nodes);
    let orbits = double_coset_orbits(
        rd,
        &pprime_nodes.complement(rd.rank()),
        &p_nodes.complement(rd.rank()),
    )?;
    let mut out = Vec::with_capacity(orbits.len());
    for o in orbits {
        let dimension = orbit_dimension(rd, &o.representative, p_nodes, pprime_nodes)?;
        out.push(OrbitDescriptor {
            w: o.representative.clone(),
            p_nodes: p_nodes.clone(),
            pprime_nodes: pprime_nodes.clone(),
            dimension,
            dense: dimension == full,
            size: o.size(),
        });
    }
    if out.iter().filter(|o| o.dense).count() != 1 {
        return Err(LieError::Internal(
            "expected exactly one dense orbit".into(),
        ));
    }
    Ok(out)
}

/// `i(sigma)` for the diagram involution `-w0`.
pub fn involution_image(rd: &RootDatum, sigma: &NodeSet) -> NodeSet {
    sigma.permuted(&rd.involution_i())
}

/// The complement of the dense orbit has codimension at least two iff
/// `Sigma(P)` and `i(Sigma(P'))` are disjoint.
pub fn complement_codim_ge2(
    rd: &RootDatum,
    p_nodes: &NodeSet,
    pprime_nodes: &NodeSet,
) -> Result<bool> {
    p_nodes.check(rd.rank())?;
    pprime_nodes.check(rd.rank())?;
    Ok(p_nodes
        .intersection(&involution_image(rd, pprime_nodes))
        .is_empty())
}

/// Smallest codimension of a non-dense orbit, by enumeration; `None` when
/// the dense orbit is everything.
pub fn brute_force_min_codim(
    rd: &RootDatum,
    p_nodes: &NodeSet,
    pprime_nodes: &NodeSet,
) -> Result<Option<usize>> {
    let full = flag_dimension(rd, p_nodes);
    Ok(orbit_table(rd, p_nodes, pprime_nodes)?
        .iter()
        .filter(|o| !o.dense)
        .map(|o| full - o.dimension)
        .min())
}

/// A simple factor of the Levi quotient with its marked nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviFactor {
    pub lie_type: LieType,
    pub rank: usize,
    /// Ambient nodes in standard label order.
    pub nodes: Vec<usize>,
    /// Marked ambient nodes.
    pub marked: NodeSet,
}

impl LeviFactor {
    /// Marked nodes as standard labels of the factor.
    pub fn marked_labels(&self) -> NodeSet {
        self.marked
            .iter()
            .filter_map(|m| self.nodes.iter().position(|&n| n == m))
            .collect()
    }

    /// Whether the factor's flag variety is `P^rank`.
    pub fn is_projective_space(&self) -> bool {
        let labels = self.marked_labels();
        self.lie_type == LieType::A
            && labels.len() == 1
            && (labels.contains(0) || labels.contains(self.rank - 1))
    }

    /// Dimension of the factor's flag variety.
    pub fn flag_dimension(&self, rd: &RootDatum) -> usize {
        let inside: NodeSet = self.nodes.iter().copied().collect();
        let outside = inside.complement(rd.rank());
        (0..rd.positive_count())
            .filter(|&k| !rd.support_meets(k, &outside) && rd.support_meets(k, &self.marked))
            .count()
    }
}

/// The Levi quotient `R'/R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviQuotient {
    pub factors: Vec<LeviFactor>,
    pub torus_rank: usize,
}

/// Components of the diagram without `Sigma(P')`, marked by `i(Sigma(P))`.
/// Refuses unless `Sigma(P)` and `i(Sigma(P'))` are disjoint.
pub fn levi_quotient(
    rd: &RootDatum,
    p_nodes: &NodeSet,
    pprime_nodes: &NodeSet,
) -> Result<LeviQuotient> {
    p_nodes.check(rd.rank())?;
    pprime_nodes.check(rd.rank())?;
    let clash = p_nodes.intersection(&involution_image(rd, pprime_nodes));
    if let Some(node) = clash.iter().next() {
        return Err(LieError::Refused(format!(
            "node {} lies in Sigma(P) and in i(Sigma(P')); the marked-diagram description needs them disjoint",
            node + 1
        )));
    }
    let marked_all = involution_image(rd, p_nodes);
    let factors = rd
        .diagram_components_after_removal(pprime_nodes)?
        .into_iter()
        .map(|c| LeviFactor {
            marked: c
                .nodes
                .iter()
                .copied()
                .filter(|&n| marked_all.contains(n))
                .collect(),
            lie_type: c.lie_type,
            rank: c.rank,
            nodes: c.nodes,
        })
        .collect();
    Ok(LeviQuotient {
        factors,
        torus_rank: pprime_nodes.len(),
    })
}

/// Graded pieces of the ascending central series of the nilradical,
/// center first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilradicalFiltration {
    pub layers: Vec<RootSubset>,
}

impl NilradicalFiltration {
    pub fn nilradical(&self) -> RootSubset {
        self.layers
            .iter()
            .fold(RootSubset::empty(), |acc, l| acc.union(l))
    }

    pub fn is_abelian(&self) -> bool {
        self.layers.len() <= 1
    }

    /// Index of the layer holding a root.
    pub fn layer_of(&self, k: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(k))
    }
}

/// Nilradical of the standard parabolic marked by `pprime_nodes`, layered by
/// iterated centers.
pub fn nilradical_filtration(
    rd: &RootDatum,
    pprime_nodes: &NodeSet,
) -> Result<NilradicalFiltration> {
    pprime_nodes.check(rd.rank())?;
    let nil: RootSubset = (0..rd.positive_count())
        .filter(|&k| rd.support_meets(k, pprime_nodes))
        .collect();
    let mut layers = Vec::new();
    let mut acc = RootSubset::empty();
    while acc != nil {
        let layer: RootSubset = nil
            .difference(&acc)
            .iter()
            .filter(|&g| {
                nil.iter()
                    .all(|d| rd.sum_index(g, d).is_none_or(|s| acc.contains(s)))
            })
            .collect();
        if layer.is_empty() {
            return Err(LieError::Internal("central series stalled".into()));
        }
        acc = acc.union(&layer);
        layers.push(layer);
    }
    Ok(NilradicalFiltration { layers })
}

/// The orbit `P'wP/P` as a tower of affine bundles over the Levi part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTower {
    /// `dim R'/(R' n w(P))`.
    pub base_dimension: usize,
    /// Fiber dimension of each layer, center first.
    pub layer_dimensions: Vec<usize>,
}

impl OrbitTower {
    pub fn total(&self) -> usize {
        self.base_dimension + self.layer_dimensions.iter().sum::<usize>()
    }

    /// Number of affine steps; empty fibers are skipped.
    pub fn affine_steps(&self) -> usize {
        self.layer_dimensions.iter().filter(|&&d| d > 0).count()
    }
}

pub fn orbit_tower(
    rd: &RootDatum,
    w: &WeylElement,
    p_nodes: &NodeSet,
    pprime_nodes: &NodeSet,
) -> Result<OrbitTower> {
    let p = standard_parabolic(rd, p_nodes)?;
    let pp = standard_parabolic(rd, pprime_nodes)?;
    let wp = p.roots().image(w);
    let levi = pp.levi(rd);
    let filtration = nilradical_filtration(rd, pprime_nodes)?;
    let tower = OrbitTower {
        base_dimension: levi.difference(&wp).len(),
        layer_dimensions: filtration
            .layers
            .iter()
            .map(|l| l.difference(&wp).len())
            .collect(),
    };
    let expected = orbit_dimension(rd, w, p_nodes, pprime_nodes)?;
    if tower.total() != expected {
        return Err(LieError::Internal(format!(
            "tower total {} differs from orbit dimension {expected}",
            tower.total()
        )));
    }
    Ok(tower)
}
