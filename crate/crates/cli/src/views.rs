//! JSON shapes emitted by the CLI. Node and reflection indices are 1-based.

use std::fmt::Write as _;

use lie_core::RootDatum;
use serde::{Deserialize, Serialize};

/// Plain-text rendering.
pub trait Render {
    fn text(&self) -> String;
}

fn list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn word(xs: &[usize]) -> String {
    if xs.is_empty() {
        return "e".into();
    }
    xs.iter()
        .map(|s| format!("s{s}"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorView {
    pub command: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemView {
    pub group: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i32>>,
    pub root_count: usize,
    pub positive_roots: Vec<Vec<i32>>,
    pub weyl_order: u64,
}

impl RootSystemView {
    pub fn new(rd: &RootDatum) -> Self {
        RootSystemView {
            group: format!("{}{}", rd.lie_type(), rd.rank()),
            rank: rd.rank(),
            cartan: rd.cartan().to_vec(),
            root_count: rd.root_count(),
            positive_roots: rd.roots()[..rd.positive_count()]
                .iter()
                .map(|r| r.coords.clone())
                .collect(),
            weyl_order: u64::try_from(rd.weyl_order())
                .expect("Weyl orders of simple groups fit in u64"),
        }
    }
}

impl Render for RootSystemView {
    fn text(&self) -> String {
        let mut s = format!(
            "{}: {} roots, |W| = {}\ncartan:\n",
            self.group, self.root_count, self.weyl_order
        );
        for row in &self.cartan {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            let _ = writeln!(s, "{}", cells.join(""));
        }
        s.push_str("positive roots:\n");
        for r in &self.positive_roots {
            let _ = writeln!(s, "  {r:?}");
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitView {
    pub representative: Vec<usize>,
    pub dimension: usize,
    pub dense: bool,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsView {
    pub group: String,
    pub p: Vec<usize>,
    pub pprime: Vec<usize>,
    pub flag_dimension: usize,
    pub orbits: Vec<OrbitView>,
}

impl Render for OrbitsView {
    fn text(&self) -> String {
        let mut s = format!(
            "{} P={} P'={}: {} orbits in a space of dimension {}\n",
            self.group,
            list(&self.p),
            list(&self.pprime),
            self.orbits.len(),
            self.flag_dimension
        );
        for o in &self.orbits {
            let dense = if o.dense { " dense" } else { "" };
            let _ = writeln!(
                s,
                "  {:<24} dim {:>2} |W-coset| {:>4}{dense}",
                word(&o.representative),
                o.dimension,
                o.size
            );
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodimView {
    pub group: String,
    pub p: Vec<usize>,
    pub pprime: Vec<usize>,
    pub codim_ge2: bool,
    /// Smallest codimension of a non-dense orbit, none when the space is one orbit.
    pub min_codim: Option<usize>,
}

impl Render for CodimView {
    fn text(&self) -> String {
        format!("{}\n", self.codim_ge2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviFactorView {
    pub lie_type: String,
    pub rank: usize,
    pub nodes: Vec<usize>,
    pub marked: Vec<usize>,
    pub projective_space: bool,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviView {
    pub group: String,
    pub p: Vec<usize>,
    pub pprime: Vec<usize>,
    pub factors: Vec<LeviFactorView>,
    pub torus_rank: usize,
}

impl Render for LeviView {
    fn text(&self) -> String {
        let mut s = format!("torus rank {}\n", self.torus_rank);
        for f in &self.factors {
            let shape = if f.projective_space {
                format!(" = P{}", f.dimension)
            } else {
                String::new()
            };
            let _ = writeln!(
                s,
                "{}{} on nodes {} marked {}, dimension {}{shape}",
                f.lie_type,
                f.rank,
                list(&f.nodes),
                list(&f.marked),
                f.dimension
            );
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilradicalView {
    pub group: String,
    pub p: Vec<usize>,
    /// Graded pieces, center first, as root coordinates.
    pub layers: Vec<Vec<Vec<i32>>>,
    pub abelian: bool,
}

impl Render for NilradicalView {
    fn text(&self) -> String {
        let mut s = format!(
            "{} layers{}\n",
            self.layers.len(),
            if self.abelian { ", abelian" } else { "" }
        );
        for (i, l) in self.layers.iter().enumerate() {
            let _ = writeln!(s, "  layer {}: {:?}", i + 1, l);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedView {
    pub lie_type: String,
    pub rank: usize,
    pub nodes: Vec<usize>,
    pub marked: Vec<usize>,
    pub degrees: Vec<i64>,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvesView {
    pub group: String,
    pub p: Vec<usize>,
    pub degrees: Vec<i64>,
    pub positivity: String,
    pub tangent_degree: i64,
    pub mor_nonempty: bool,
    pub smooth: bool,
    pub exception: Option<String>,
    pub reduction: Option<Vec<ReducedView>>,
}

impl Render for CurvesView {
    fn text(&self) -> String {
        let mut s = format!(
            "class {:?} ({}), tangent degree {}\nmorphisms: {}\nsmooth rational curve: {}\n",
            self.degrees, self.positivity, self.tangent_degree, self.mor_nonempty, self.smooth
        );
        if let Some(e) = &self.exception {
            let _ = writeln!(s, "exception: {e}");
        }
        for f in self.reduction.iter().flatten() {
            let _ = writeln!(
                s,
                "fiber factor {}{} marked {} degrees {:?}",
                f.lie_type,
                f.rank,
                list(&f.marked),
                f.degrees
            );
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertView {
    pub group: String,
    pub p: Vec<usize>,
    pub degrees: Vec<i64>,
    pub dimension: i64,
    /// Some degree is zero.
    pub boundary: bool,
}

impl Render for HilbertView {
    fn text(&self) -> String {
        format!("{}\n", self.dimension)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerFactorView {
    pub label: String,
    /// Marked nodes relative to the sequence Borel inside the factor.
    pub marked: Vec<usize>,
    pub roots: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepView {
    pub n: usize,
    pub sigma_p: Vec<usize>,
    pub sigma_pprime: Vec<usize>,
    pub union_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesingView {
    pub group: String,
    pub p: Vec<usize>,
    pub w: Vec<usize>,
    pub w_prime: Vec<usize>,
    pub terminal_index: usize,
    pub factors: Vec<TowerFactorView>,
    /// Root counts of the junctions between neighbouring factors.
    pub junctions: Vec<usize>,
    pub dimension: i64,
    pub steps: Vec<StepView>,
}

impl Render for DesingView {
    fn text(&self) -> String {
        let mut s = format!(
            "w' = {}\n{} factors, dimension {}\n",
            word(&self.w_prime),
            self.factors.len(),
            self.dimension
        );
        for f in &self.factors {
            let _ = writeln!(
                s,
                "  {:<8} marked {:<10} {} roots",
                f.label,
                list(&f.marked),
                f.roots
            );
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefineGroupView {
    pub factor: String,
    pub word: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefineView {
    pub group: String,
    pub p: Vec<usize>,
    pub w_prime: Vec<usize>,
    pub word: Vec<usize>,
    pub regroups: bool,
    pub groups: Vec<RefineGroupView>,
}

impl Render for RefineView {
    fn text(&self) -> String {
        let mut s = format!("{}\n", word(&self.word));
        for g in &self.groups {
            let _ = writeln!(s, "  {:<8} {}", g.factor, word(&g.word));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothView {
    pub w: Vec<usize>,
    pub w_prime: Vec<usize>,
    /// The sufficient criterion holds.
    pub criterion: bool,
    pub rationally_smooth: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothTable {
    pub group: String,
    pub p: Vec<usize>,
    pub rows: Vec<SmoothView>,
}

impl Render for SmoothTable {
    fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:<24} criterion {:<5} rationally smooth {}",
                word(&r.w),
                r.criterion,
                r.rationally_smooth
            );
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalView {
    pub w: Vec<usize>,
    pub w_prime: Vec<usize>,
    pub p1: Vec<usize>,
    pub is_minimal: bool,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalTable {
    pub group: String,
    pub p: Vec<usize>,
    pub rows: Vec<MinimalView>,
}

impl Render for MinimalTable {
    fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:<24} P1 = {:<10} minimal {:<5} dimension {}",
                word(&r.w),
                list(&r.p1),
                r.is_minimal,
                r.dimension
            );
        }
        s
    }
}
