//! Weyl group elements acting on the root list, Bruhat order and
//! double-coset enumeration.

use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use crate::error::{LieError, Result};
use crate::rootsys::{LieType, NodeSet, Root, RootDatum};

/// Default enumeration cap on `|W|`.
pub const DEFAULT_MAX_WEYL: u128 = 1_000_000;

/// Enumeration cap, read from `LIE_MAX_WEYL` when set.
pub fn max_weyl() -> u128 {
    std::env::var("LIE_MAX_WEYL")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_WEYL)
}

/// An element of the Weyl group, identified by its permutation of the roots.
#[derive(Debug, Clone)]
pub struct WeylElement {
    word: Vec<usize>,
    perm: Vec<u16>,
    length: usize,
    positive_count: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl WeylElement {
    pub fn identity(rd: &RootDatum) -> Self {
        let n = rd.root_count();
        Self {
            word: Vec::new(),
            perm: (0..n as u16).collect(),
            length: 0,
            positive_count: rd.positive_count(),
        }
    }

    pub fn simple(rd: &RootDatum, node: usize) -> Result<Self> {
        Self::from_word(rd, &[node])
    }

    /// The product `s_{word[0]} s_{word[1]} ...`.
    pub fn from_word(rd: &RootDatum, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(rd);
        for &s in word {
            if s >= rd.rank() {
                return Err(LieError::BadReflection {
                    index: s,
                    rank: rd.rank(),
                });
            }
            w = w.times_simple(rd, s);
        }
        Ok(w)
    }

    /// The longest element, built by appending ascents until none remain.
    pub fn longest(rd: &RootDatum) -> Self {
        let mut w = Self::identity(rd);
        while let Some(s) = (0..rd.rank()).find(|&s| !w.is_right_descent(s)) {
            w = w.times_simple(rd, s);
        }
        w
    }

    /// Type A only: one-line notation with values `1..=rank+1`.
    pub fn from_permutation(rd: &RootDatum, one_line: &[usize]) -> Result<Self> {
        if rd.lie_type() != LieType::A {
            return Err(LieError::Precondition(
                "permutation input is only defined in type A".into(),
            ));
        }
        let n = rd.rank() + 1;
        let mut sorted = one_line.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return Err(LieError::Precondition(format!(
                "{one_line:?} is not a permutation of 1..={n}"
            )));
        }
        let mut p = one_line.to_vec();
        let mut recorded = Vec::new();
        while let Some(i) = (0..n - 1).find(|&i| p[i] > p[i + 1]) {
            p.swap(i, i + 1);
            recorded.push(i);
        }
        recorded.reverse();
        Self::from_word(rd, &recorded)
    }

    /// Type A only: one-line notation with values `1..=rank+1`.
    pub fn to_permutation(&self, rd: &RootDatum) -> Result<Vec<usize>> {
        if rd.lie_type() != LieType::A {
            return Err(LieError::Precondition(
                "permutation output is only defined in type A".into(),
            ));
        }
        let mut p: Vec<usize> = (1..=rd.rank() + 1).collect();
        for &s in &self.word {
            p.swap(s, s + 1);
        }
        Ok(p)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Image of the root with the given index.
    pub fn apply(&self, index: usize) -> usize {
        self.perm[index] as usize
    }

    pub fn act_on_root(&self, rd: &RootDatum, root: &Root) -> Result<Root> {
        let k = rd.index_of(root)?;
        Ok(rd.root(self.apply(k)).clone())
    }

    fn from_perm(word: Vec<usize>, perm: Vec<u16>, positive_count: usize) -> Self {
        let length = perm[..positive_count]
            .iter()
            .filter(|&&k| k as usize >= positive_count)
            .count();
        Self {
            word,
            perm,
            length,
            positive_count,
        }
    }

    /// `self * s_node`.
    pub fn times_simple(&self, rd: &RootDatum, node: usize) -> Self {
        let s = rd.simple_perm(node);
        let perm = s.iter().map(|&k| self.perm[k as usize]).collect();
        let mut word = self.word.clone();
        word.push(node);
        Self::from_perm(word, perm, self.positive_count)
    }

    /// `s_node * self`.
    pub fn simple_times(&self, rd: &RootDatum, node: usize) -> Self {
        let s = rd.simple_perm(node);
        let perm = self.perm.iter().map(|&k| s[k as usize]).collect();
        let mut word = Vec::with_capacity(self.word.len() + 1);
        word.push(node);
        word.extend_from_slice(&self.word);
        Self::from_perm(word, perm, self.positive_count)
    }

    /// `self * other`.
    pub fn mul(&self, other: &WeylElement) -> Self {
        let perm = other.perm.iter().map(|&k| self.perm[k as usize]).collect();
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Self::from_perm(word, perm, self.positive_count)
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0u16; self.perm.len()];
        for (k, &image) in self.perm.iter().enumerate() {
            perm[image as usize] = k as u16;
        }
        let word = self.word.iter().rev().copied().collect();
        Self::from_perm(word, perm, self.positive_count)
    }

    /// `l(w s) < l(w)`, i.e. `w(alpha_s) < 0`.
    pub fn is_right_descent(&self, node: usize) -> bool {
        self.apply(node) >= self.positive_count
    }

    /// `l(s w) < l(w)`, i.e. `w^-1(alpha_s) < 0`.
    pub fn is_left_descent(&self, node: usize) -> bool {
        let pre = self
            .perm
            .iter()
            .position(|&k| k as usize == node)
            .expect("perm is a bijection");
        pre >= self.positive_count
    }

    /// The lexicographically smallest reduced word, found by stripping the
    /// smallest left descent each time.
    pub fn reduced_word(&self, rd: &RootDatum) -> Vec<usize> {
        let mut w = self.clone();
        let mut out = Vec::with_capacity(self.length);
        while let Some(s) = (0..rd.rank()).find(|&s| w.is_left_descent(s)) {
            out.push(s);
            w = w.simple_times(rd, s);
        }
        out
    }

    /// Same element, carrying a reduced word.
    pub fn reduced(&self, rd: &RootDatum) -> Self {
        Self {
            word: self.reduced_word(rd),
            ..self.clone()
        }
    }

    /// The reflection in the root with the given index.
    pub fn reflection(rd: &RootDatum, index: usize) -> Self {
        let k = if rd.is_positive(index) {
            index
        } else {
            rd.negate(index)
        };
        match rd.root_origin(k) {
            None => Self::simple(rd, k).expect("simple root index is a node"),
            Some((parent, j)) => Self::reflection(rd, parent)
                .simple_times(rd, j)
                .times_simple(rd, j),
        }
    }

    /// All reflections, one per positive root, in root order.
    pub fn reflections(rd: &RootDatum) -> Vec<Self> {
        (0..rd.positive_count())
            .map(|k| Self::reflection(rd, k))
            .collect()
    }

    /// Sort key: length first, then word.
    pub fn order_key(&self) -> (usize, &[usize]) {
        (self.length, &self.word)
    }
}

/// Bruhat order `u <= w`, by descent on left descents of `w`.
///
/// If `s` is a left descent of `w` then `u <= w` iff `su <= sw` when `s` is
/// also a left descent of `u`, and iff `u <= sw` otherwise. Each step lowers
/// `l(w)` by one, so no memo is needed.
pub fn bruhat_leq(rd: &RootDatum, u: &WeylElement, w: &WeylElement) -> bool {
    let mut u = u.clone();
    let mut w = w.clone();
    loop {
        if u.length > w.length {
            return false;
        }
        if w.length == 0 {
            return u.length == 0;
        }
        if u.length == 0 {
            return true;
        }
        let s = (0..rd.rank())
            .find(|&s| w.is_left_descent(s))
            .expect("nontrivial element has a descent");
        if u.is_left_descent(s) {
            u = u.simple_times(rd, s);
        }
        w = w.simple_times(rd, s);
    }
}

/// Every element of `W`, sorted by length and then by word.
pub fn enumerate(rd: &RootDatum) -> Result<Vec<WeylElement>> {
    let order = rd.weyl_order();
    let cap = max_weyl();
    if order > cap {
        return Err(LieError::TooLarge { order, cap });
    }
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    let id = WeylElement::identity(rd);
    seen.insert(id.perm.clone());
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let w = out[head].clone();
        head += 1;
        for s in 0..rd.rank() {
            if w.is_right_descent(s) {
                continue;
            }
            let ws = w.times_simple(rd, s);
            if seen.insert(ws.perm.clone()) {
                out.push(ws);
            }
        }
    }
    if out.len() as u128 != order {
        return Err(LieError::Internal(format!(
            "enumerated {} elements, expected {order}",
            out.len()
        )));
    }
    out.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
    Ok(out)
}

/// An orbit of `W` under `(x, y) . g = x g y^-1`, with `x` in the subgroup
/// generated by `left_nodes` and `y` in the one generated by `right_nodes`.
#[derive(Debug, Clone)]
pub struct CosetOrbit {
    pub representative: WeylElement,
    pub members: Vec<WeylElement>,
    pub left_nodes: NodeSet,
    pub right_nodes: NodeSet,
}

impl CosetOrbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.members.contains(w)
    }
}

/// Partition of `W` into double cosets `W_left g W_right`, where the two
/// subgroups are generated by the simple reflections of the given nodes.
pub fn double_coset_orbits(
    rd: &RootDatum,
    left_nodes: &NodeSet,
    right_nodes: &NodeSet,
) -> Result<Vec<CosetOrbit>> {
    left_nodes.check(rd.rank())?;
    right_nodes.check(rd.rank())?;
    let all = enumerate(rd)?;
    let mut orbit_of: HashMap<&[u16], usize> = HashMap::new();
    let mut orbits: Vec<Vec<WeylElement>> = Vec::new();
    for g in &all {
        if orbit_of.contains_key(g.perm()) {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![g.clone()];
        let mut local: HashSet<Vec<u16>> = HashSet::from([g.perm.clone()]);
        let mut queue = VecDeque::from([g.clone()]);
        while let Some(x) = queue.pop_front() {
            let next = left_nodes
                .iter()
                .map(|s| x.simple_times(rd, s))
                .chain(right_nodes.iter().map(|s| x.times_simple(rd, s)));
            for y in next {
                if local.insert(y.perm.clone()) {
                    members.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        // Members carry the canonical words from the enumeration.
        let members: Vec<WeylElement> = all
            .iter()
            .filter(|e| local.contains(&e.perm))
            .cloned()
            .collect();
        for m in &all {
            if local.contains(&m.perm) {
                orbit_of.insert(m.perm(), id);
            }
        }
        orbits.push(members);
    }
    let mut out: Vec<CosetOrbit> = orbits
        .into_iter()
        .map(|members| CosetOrbit {
            representative: members[0].clone(),
            members,
            left_nodes: left_nodes.clone(),
            right_nodes: right_nodes.clone(),
        })
        .collect();
    out.sort_by(|a, b| {
        a.representative
            .order_key()
            .cmp(&b.representative.order_key())
    });
    Ok(out)
}
