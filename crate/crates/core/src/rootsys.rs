//! Reduced root systems of the simple types.
//!
//! Conventions used throughout the crate:
//!
//! * Roots are stored in simple-root coordinates, weights in
//!   fundamental-weight coordinates.
//! * `cartan[i][j] = <alpha_j, alpha_i^vee>`, so the coroot pairing of a root
//!   `gamma` against node `j` is `sum_i gamma_i * cartan[j][i]`.
//! * Node indices are 0-based; callers facing users translate at the edge.
//! * Positive roots come first, sorted by height and then by descending
//!   coordinates (so root `i < rank` is the simple root `alpha_i`); the
//!   negative roots follow in the same order, so `roots[pc + k] = -roots[k]`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::weyl::WeylElement;

/// Cartan–Killing type of a simple Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl LieType {
    /// Admissible ranks, for diagnostics.
    pub fn admissible(self) -> &'static str {
        match self {
            LieType::A => "A needs rank >= 1",
            LieType::B => "B needs rank >= 2",
            LieType::C => "C needs rank >= 2",
            LieType::D => "D needs rank >= 3 (D3 is normalized to A3)",
            LieType::E => "E needs rank 6, 7 or 8",
            LieType::F => "F needs rank 4",
            LieType::G => "G needs rank 2",
        }
    }

    pub fn accepts(self, rank: usize) -> bool {
        match self {
            LieType::A => rank >= 1,
            LieType::B | LieType::C => rank >= 2,
            LieType::D => rank >= 3,
            LieType::E => (6..=8).contains(&rank),
            LieType::F => rank == 4,
            LieType::G => rank == 2,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            LieType::A => 'A',
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
            LieType::E => 'E',
            LieType::F => 'F',
            LieType::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for LieType {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(LieType::A),
            "B" => Ok(LieType::B),
            "C" => Ok(LieType::C),
            "D" => Ok(LieType::D),
            "E" => Ok(LieType::E),
            "F" => Ok(LieType::F),
            "G" => Ok(LieType::G),
            other => Err(LieError::InvalidType {
                lie_type: other.to_string(),
                rank: 0,
                reason: "type must be one of A, B, C, D, E, F, G".into(),
            }),
        }
    }
}

/// A set of Dynkin diagram nodes (0-based).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NodeSet(pub BTreeSet<usize>);

impl NodeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn all(rank: usize) -> Self {
        Self((0..rank).collect())
    }

    pub fn contains(&self, node: usize) -> bool {
        self.0.contains(&node)
    }

    pub fn insert(&mut self, node: usize) -> bool {
        self.0.insert(node)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Nodes of `0..rank` not in `self`.
    pub fn complement(&self, rank: usize) -> Self {
        Self((0..rank).filter(|i| !self.0.contains(i)).collect())
    }

    pub fn intersection(&self, other: &NodeSet) -> Self {
        Self(self.0.intersection(&other.0).copied().collect())
    }

    pub fn check(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i >= rank) {
            Some(&index) => Err(LieError::NodeOutOfRange { index, rank }),
            None => Ok(()),
        }
    }

    /// Image under a node permutation.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self(self.0.iter().map(|&i| perm[i]).collect())
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for NodeSet {
    fn from(nodes: [usize; N]) -> Self {
        Self(nodes.into_iter().collect())
    }
}

/// A root, as coefficients in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i32>,
}

impl Root {
    pub fn new(coords: Vec<i32>) -> Self {
        Self { coords }
    }

    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn negated(&self) -> Root {
        Root::new(self.coords.iter().map(|c| -c).collect())
    }

    /// Nodes with a nonzero coefficient.
    pub fn support(&self) -> NodeSet {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// A weight handed to [`RootDatum::cartan_pairing`], tagged with its basis.
#[derive(Debug, Clone, Copy)]
pub enum Weight<'a> {
    /// Coefficients on the fundamental weights.
    Fundamental(&'a [i32]),
    /// Coefficients on the simple roots.
    SimpleRoots(&'a [i32]),
}

/// A full reduced root system.
#[derive(Debug, Clone)]
pub struct RootDatum {
    lie_type: LieType,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    positive_count: usize,
    root_index: HashMap<Vec<i32>, usize>,
    negation: Vec<usize>,
    sums: Vec<Option<u16>>,
    simple_perms: Vec<Vec<u16>>,
    // For a positive non-simple root: (parent, j) with root = s_j(parent).
    origin: Vec<Option<(usize, usize)>>,
}

/// Builds the root system of type `lie_type` and the given rank.
///
/// `(D, 3)` is normalized to `A3`.
pub fn build_root_system(lie_type: LieType, rank: usize) -> Result<RootDatum> {
    if !lie_type.accepts(rank) {
        return Err(LieError::InvalidType {
            lie_type: lie_type.to_string(),
            rank,
            reason: lie_type.admissible().to_string(),
        });
    }
    if lie_type == LieType::D && rank == 3 {
        return build_root_system(LieType::A, 3);
    }
    RootDatum::from_cartan(lie_type, standard_cartan(lie_type, rank))
}

/// Bourbaki-labelled Cartan matrix, `m[i][j] = <alpha_j, alpha_i^vee>`.
pub fn standard_cartan(lie_type: LieType, rank: usize) -> Vec<Vec<i32>> {
    let n = rank;
    let mut m = vec![vec![0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |a: usize, b: usize| {
        m[a][b] = -1;
        m[b][a] = -1;
    };
    match lie_type {
        LieType::A | LieType::B | LieType::C | LieType::F | LieType::G => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        LieType::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        LieType::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    match lie_type {
        // alpha_n short
        LieType::B => m[n - 1][n - 2] = -2,
        // alpha_n long
        LieType::C => m[n - 2][n - 1] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        LieType::F => m[2][1] = -2,
        // alpha_1 short
        LieType::G => m[0][1] = -3,
        _ => {}
    }
    m
}

fn validate_cartan(cartan: &[Vec<i32>]) -> Result<()> {
    let n = cartan.len();
    if n == 0 {
        return Err(LieError::InvalidCartan("empty matrix".into()));
    }
    for (i, row) in cartan.iter().enumerate() {
        if row.len() != n {
            return Err(LieError::InvalidCartan(format!(
                "row {i} has length {}",
                row.len()
            )));
        }
        if row[i] != 2 {
            return Err(LieError::InvalidCartan(format!(
                "diagonal entry {i} is {}",
                row[i]
            )));
        }
        for (j, &c) in row.iter().enumerate() {
            if i == j {
                continue;
            }
            if !(-3..=0).contains(&c) {
                return Err(LieError::InvalidCartan(format!("entry ({i},{j}) = {c}")));
            }
            if (c == 0) != (cartan[j][i] == 0) {
                return Err(LieError::InvalidCartan(format!(
                    "entries ({i},{j}) and ({j},{i}) disagree on zero"
                )));
            }
        }
    }
    Ok(())
}

impl RootDatum {
    /// Saturates the simple roots under the simple reflections of `cartan`.
    pub fn from_cartan(lie_type: LieType, cartan: Vec<Vec<i32>>) -> Result<Self> {
        validate_cartan(&cartan)?;
        let rank = cartan.len();
        let reflect = |v: &[i32], i: usize| -> Vec<i32> {
            let pairing: i32 = v.iter().zip(&cartan[i]).map(|(a, c)| a * c).sum();
            let mut out = v.to_vec();
            out[i] -= pairing;
            out
        };

        // Positive roots by breadth-first saturation, remembering one parent.
        let mut parent: HashMap<Vec<i32>, Option<(Vec<i32>, usize)>> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0; rank];
            e[i] = 1;
            parent.insert(e.clone(), None);
            queue.push_back(e);
        }
        let cap = 10_000;
        while let Some(v) = queue.pop_front() {
            for i in 0..rank {
                let image = reflect(&v, i);
                if image.iter().all(|&c| c >= 0) && !parent.contains_key(&image) {
                    if parent.len() >= cap {
                        return Err(LieError::InvalidCartan(
                            "reflection closure is not finite".into(),
                        ));
                    }
                    parent.insert(image.clone(), Some((v.clone(), i)));
                    queue.push_back(image);
                }
            }
        }

        let mut positives: Vec<Vec<i32>> = parent.keys().cloned().collect();
        positives.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let pc = positives.len();
        let mut roots: Vec<Root> = positives.iter().cloned().map(Root::new).collect();
        roots.extend(
            positives
                .iter()
                .map(|v| Root::new(v.iter().map(|c| -c).collect())),
        );

        let root_index: HashMap<Vec<i32>, usize> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coords.clone(), k))
            .collect();
        let total = roots.len();
        if total > u16::MAX as usize {
            return Err(LieError::InvalidCartan("too many roots".into()));
        }
        let negation: Vec<usize> = (0..total)
            .map(|k| if k < pc { k + pc } else { k - pc })
            .collect();

        let mut sums = vec![None; total * total];
        for a in 0..total {
            for b in 0..total {
                let s: Vec<i32> = roots[a]
                    .coords
                    .iter()
                    .zip(&roots[b].coords)
                    .map(|(x, y)| x + y)
                    .collect();
                sums[a * total + b] = root_index.get(&s).map(|&k| k as u16);
            }
        }

        let mut simple_perms = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut perm = Vec::with_capacity(total);
            for r in &roots {
                let image = reflect(&r.coords, i);
                let k = *root_index.get(&image).ok_or_else(|| {
                    LieError::InvalidCartan("roots not closed under reflection".into())
                })?;
                perm.push(k as u16);
            }
            simple_perms.push(perm);
        }

        let origin = (0..total)
            .map(|k| {
                if k >= pc {
                    return None;
                }
                parent[&roots[k].coords]
                    .as_ref()
                    .map(|(p, j)| (root_index[p], *j))
            })
            .collect();

        Ok(Self {
            lie_type,
            rank,
            cartan,
            roots,
            positive_count: pc,
            root_index,
            negation,
            sums,
            simple_perms,
            origin,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.roots[index]
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    pub fn is_positive(&self, index: usize) -> bool {
        index < self.positive_count
    }

    /// Index of the simple root `alpha_node`.
    pub fn simple_root(&self, node: usize) -> usize {
        node
    }

    pub fn root_id(&self, coords: &[i32]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    pub fn index_of(&self, root: &Root) -> Result<usize> {
        self.root_id(&root.coords)
            .ok_or_else(|| LieError::NotARoot(root.coords.clone()))
    }

    pub fn negate(&self, index: usize) -> usize {
        self.negation[index]
    }

    /// Index of `roots[a] + roots[b]` if that sum is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a * self.roots.len() + b].map(usize::from)
    }

    pub fn root_sum(&self, a: &Root, b: &Root) -> Result<Option<Root>> {
        let a = self.index_of(a)?;
        let b = self.index_of(b)?;
        Ok(self.sum_index(a, b).map(|k| self.roots[k].clone()))
    }

    pub(crate) fn simple_perm(&self, node: usize) -> &[u16] {
        &self.simple_perms[node]
    }

    pub(crate) fn root_origin(&self, index: usize) -> Option<(usize, usize)> {
        self.origin[index]
    }

    /// `<gamma, alpha_node^vee>` for the root with the given index.
    pub fn coroot_pairing(&self, index: usize, node: usize) -> i32 {
        self.roots[index]
            .coords
            .iter()
            .zip(&self.cartan[node])
            .map(|(c, m)| c * m)
            .sum()
    }

    /// `<lambda, alpha_node^vee>`.
    pub fn cartan_pairing(&self, weight: Weight<'_>, node: usize) -> Result<i32> {
        if node >= self.rank {
            return Err(LieError::NodeOutOfRange {
                index: node,
                rank: self.rank,
            });
        }
        let coords = match weight {
            Weight::Fundamental(c) | Weight::SimpleRoots(c) => c,
        };
        if coords.len() != self.rank {
            return Err(LieError::Precondition(format!(
                "weight has {} coordinates, expected {}",
                coords.len(),
                self.rank
            )));
        }
        Ok(match weight {
            Weight::Fundamental(c) => c[node],
            Weight::SimpleRoots(c) => c.iter().zip(&self.cartan[node]).map(|(a, m)| a * m).sum(),
        })
    }

    /// Diagram neighbours of a node.
    pub fn neighbours(&self, node: usize) -> Vec<usize> {
        (0..self.rank)
            .filter(|&j| j != node && self.cartan[node][j] != 0)
            .collect()
    }

    /// Whether the support of root `index` meets `nodes`.
    pub fn support_meets(&self, index: usize, nodes: &NodeSet) -> bool {
        self.roots[index]
            .coords
            .iter()
            .enumerate()
            .any(|(i, &c)| c != 0 && nodes.contains(i))
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        weyl_order_of(self.lie_type, self.rank)
    }

    /// Connected components of the diagram with `removed` deleted, each
    /// classified and relabelled in standard order.
    pub fn diagram_components_after_removal(
        &self,
        removed: &NodeSet,
    ) -> Result<Vec<DiagramComponent>> {
        removed.check(self.rank)?;
        let keep: Vec<usize> = (0..self.rank).filter(|i| !removed.contains(*i)).collect();
        let mut seen = vec![false; self.rank];
        let mut out = Vec::new();
        for &start in &keep {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for u in self.neighbours(v) {
                    if !removed.contains(u) && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(classify_component(&self.cartan, &comp)?);
        }
        out.sort_by(|a, b| a.nodes.iter().min().cmp(&b.nodes.iter().min()));
        Ok(out)
    }

    /// The diagram involution `j -> -w0(alpha_j)`, computed from the longest
    /// element.
    pub fn involution_i(&self) -> Vec<usize> {
        let w0 = WeylElement::longest(self);
        (0..self.rank)
            .map(|j| {
                let image = self.negate(w0.apply(j));
                debug_assert!(image < self.rank, "-w0 must permute the simple roots");
                image
            })
            .collect()
    }

    /// Dynkin diagram in DOT syntax. Multiple bonds are drawn as parallel
    /// edges with an arrow pointing at the short root.
    pub fn dynkin_dot(&self) -> String {
        let mut s = format!("graph \"{}{}\" {{\n", self.lie_type, self.rank);
        s.push_str("  node [shape=circle];\n");
        for i in 0..self.rank {
            s.push_str(&format!("  {} [label=\"{}\"];\n", i + 1, i + 1));
        }
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                let (a, b) = (self.cartan[i][j], self.cartan[j][i]);
                if a == 0 {
                    continue;
                }
                let bond = a.abs().max(b.abs());
                // cartan[i][j] = -k with k > 1 means alpha_j is the long root.
                let (long, short) = if a.abs() > b.abs() { (j, i) } else { (i, j) };
                for _ in 0..bond {
                    if bond == 1 {
                        s.push_str(&format!("  {} -- {};\n", i + 1, j + 1));
                    } else {
                        s.push_str(&format!("  {} -- {} [dir=forward];\n", long + 1, short + 1));
                    }
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Order of the Weyl group of the given type.
pub fn weyl_order_of(lie_type: LieType, rank: usize) -> u128 {
    let fact = |n: usize| (1..=n as u128).product::<u128>();
    match lie_type {
        LieType::A => fact(rank + 1),
        LieType::B | LieType::C => (1u128 << rank) * fact(rank),
        LieType::D => (1u128 << (rank - 1)) * fact(rank),
        LieType::E => match rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        LieType::F => 1152,
        LieType::G => 12,
    }
}

/// A connected piece of a Dynkin diagram with its standard labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramComponent {
    pub lie_type: LieType,
    pub rank: usize,
    /// `nodes[k]` is the ambient node carrying standard label `k`.
    pub nodes: Vec<usize>,
}

impl DiagramComponent {
    /// Standard label of an ambient node, if it belongs to this component.
    pub fn label_of(&self, node: usize) -> Option<usize> {
        self.nodes.iter().position(|&n| n == node)
    }
}

fn bond(cartan: &[Vec<i32>], a: usize, b: usize) -> i32 {
    cartan[a][b].abs().max(cartan[b][a].abs())
}

fn walk_chain(cartan: &[Vec<i32>], nodes: &[usize], start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = nodes
            .iter()
            .copied()
            .find(|&v| v != cur && v != prev && cartan[cur][v] != 0);
        match next {
            Some(v) => {
                order.push(v);
                prev = cur;
                cur = v;
            }
            None => return order,
        }
    }
}

/// Classifies a connected set of nodes of a Cartan matrix.
pub fn classify_component(cartan: &[Vec<i32>], nodes: &[usize]) -> Result<DiagramComponent> {
    let n = nodes.len();
    let degree = |v: usize| {
        nodes
            .iter()
            .filter(|&&u| u != v && cartan[v][u] != 0)
            .count()
    };
    let unknown = || LieError::InvalidCartan(format!("component {nodes:?} is not of finite type"));
    let done = |lie_type, order: Vec<usize>| {
        Ok(DiagramComponent {
            lie_type,
            rank: n,
            nodes: order,
        })
    };

    if n == 1 {
        return done(LieType::A, nodes.to_vec());
    }
    let mut edges = Vec::new();
    for (x, &a) in nodes.iter().enumerate() {
        for &b in &nodes[x + 1..] {
            if cartan[a][b] != 0 {
                edges.push((a, b, bond(cartan, a, b)));
            }
        }
    }
    if edges.len() != n - 1 {
        return Err(unknown());
    }
    let multi: Vec<_> = edges.iter().filter(|e| e.2 > 1).collect();
    let branches: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) >= 3).collect();

    if multi.len() > 1 || (!multi.is_empty() && !branches.is_empty()) {
        return Err(unknown());
    }

    if let Some(&&(a, b, k)) = multi.first() {
        // `short` has the short root: cartan[short][long] = -k.
        let (short, long) = if cartan[a][b].abs() == k {
            (a, b)
        } else {
            (b, a)
        };
        if k == 3 {
            if n != 2 {
                return Err(unknown());
            }
            return done(LieType::G, vec![short, long]);
        }
        if n == 2 {
            return done(LieType::C, vec![short, long]);
        }
        let leaves: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) == 1).collect();
        if leaves.contains(&short) || leaves.contains(&long) {
            // B_n or C_n: the double bond sits at the end labelled n.
            let end = if leaves.contains(&short) { short } else { long };
            let other = leaves
                .iter()
                .copied()
                .find(|&v| v != end)
                .ok_or_else(unknown)?;
            let order = walk_chain(cartan, nodes, other);
            let ty = if end == short { LieType::B } else { LieType::C };
            return done(ty, order);
        }
        if n == 4 {
            // F4: labels 1, 2 long.
            let start = leaves
                .iter()
                .copied()
                .find(|&v| cartan[v][long] != 0)
                .ok_or_else(unknown)?;
            return done(LieType::F, walk_chain(cartan, nodes, start));
        }
        return Err(unknown());
    }

    match branches.as_slice() {
        [] => {
            let start = nodes
                .iter()
                .copied()
                .filter(|&v| degree(v) == 1)
                .min()
                .ok_or_else(unknown)?;
            done(LieType::A, walk_chain(cartan, nodes, start))
        }
        [center] => {
            let center = *center;
            if degree(center) != 3 {
                return Err(unknown());
            }
            // Arms as paths leading away from the branch node.
            let mut arms: Vec<Vec<usize>> = nodes
                .iter()
                .copied()
                .filter(|&v| v != center && cartan[center][v] != 0)
                .map(|first| {
                    let mut arm = vec![first];
                    let mut prev = center;
                    let mut cur = first;
                    while let Some(v) = nodes
                        .iter()
                        .copied()
                        .find(|&v| v != prev && v != cur && cartan[cur][v] != 0)
                    {
                        arm.push(v);
                        prev = cur;
                        cur = v;
                    }
                    arm
                })
                .collect();
            arms.sort_by_key(|arm| (arm.len(), arm[0]));
            let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
            if lens[0] == 1 && lens[1] == 1 {
                // D_n: long arm labelled 1..n-3 from its far end.
                let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
                order.push(center);
                order.push(arms[0][0]);
                order.push(arms[1][0]);
                done(LieType::D, order)
            } else if lens[0] == 1 && lens[1] == 2 && (2..=4).contains(&lens[2]) {
                // E_n: 1-3-4-5-..., with 2 hanging off 4.
                let mut order = vec![arms[1][1], arms[0][0], arms[1][0], center];
                order.extend(arms[2].iter().copied());
                done(LieType::E, order)
            } else {
                Err(unknown())
            }
        }
        _ => Err(unknown()),
    }
}
