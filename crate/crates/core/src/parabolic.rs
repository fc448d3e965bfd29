//! Borels and parabolics as sets of roots, and the iterated construction of
//! parabolic pairs from two Borels.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::rootsys::{NodeSet, RootDatum};
use crate::weyl::WeylElement;

const WORDS: usize = 4;

/// A set of root indices. Rank 8 has 240 roots, so four words suffice.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSubset {
    bits: [u64; WORDS],
}

impl fmt::Debug for RootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl RootSubset {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn all(rd: &RootDatum) -> Self {
        (0..rd.root_count()).collect()
    }

    pub fn positive(rd: &RootDatum) -> Self {
        (0..rd.positive_count()).collect()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn insert(&mut self, k: usize) {
        self.bits[k / 64] |= 1 << (k % 64);
    }

    pub fn remove(&mut self, k: usize) {
        self.bits[k / 64] &= !(1 << (k % 64));
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..WORDS * 64).filter(move |&k| self.contains(k))
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        let mut bits = [0; WORDS];
        for (i, b) in bits.iter_mut().enumerate() {
            *b = f(self.bits[i], other.bits[i]);
        }
        Self { bits }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    /// `-S`.
    pub fn negated(&self, rd: &RootDatum) -> Self {
        self.iter().map(|k| rd.negate(k)).collect()
    }

    /// `w(S)`.
    pub fn image(&self, w: &WeylElement) -> Self {
        self.iter().map(|k| w.apply(k)).collect()
    }

    /// Closed under root addition.
    pub fn is_closed(&self, rd: &RootDatum) -> bool {
        self.first_unclosed(rd).is_none()
    }

    fn first_unclosed(&self, rd: &RootDatum) -> Option<(usize, usize)> {
        let members: Vec<usize> = self.iter().collect();
        for &a in &members {
            for &b in &members {
                if let Some(s) = rd.sum_index(a, b) {
                    if !self.contains(s) {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    /// Contains at least one of `gamma`, `-gamma` for every root.
    pub fn is_covering(&self, rd: &RootDatum) -> bool {
        (0..rd.positive_count()).all(|k| self.contains(k) || self.contains(rd.negate(k)))
    }

    /// Contains exactly one of `gamma`, `-gamma` for every root.
    pub fn is_sign_choice(&self, rd: &RootDatum) -> bool {
        self.len() == rd.positive_count() && self.is_covering(rd)
    }

    pub fn is_borel(&self, rd: &RootDatum) -> bool {
        self.is_sign_choice(rd) && self.is_closed(rd)
    }

    pub fn is_parabolic(&self, rd: &RootDatum) -> bool {
        self.is_covering(rd) && self.is_closed(rd)
    }

    /// Members as coordinate vectors, sorted.
    pub fn coords(&self, rd: &RootDatum) -> Vec<Vec<i32>> {
        let mut out: Vec<Vec<i32>> = self.iter().map(|k| rd.root(k).coords.clone()).collect();
        out.sort();
        out
    }
}

impl FromIterator<usize> for RootSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::empty();
        for k in iter {
            s.insert(k);
        }
        s
    }
}

/// A Borel subalgebra, as its set of roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BorelSet(RootSubset);

impl BorelSet {
    pub fn new(rd: &RootDatum, roots: RootSubset) -> Result<Self> {
        if roots.is_borel(rd) {
            Ok(Self(roots))
        } else {
            Err(LieError::Precondition(format!(
                "{:?} is not a Borel",
                roots.coords(rd)
            )))
        }
    }

    pub fn standard(rd: &RootDatum) -> Self {
        Self(RootSubset::positive(rd))
    }

    /// `w(R+)`.
    pub fn from_weyl(rd: &RootDatum, w: &WeylElement) -> Self {
        Self(RootSubset::positive(rd).image(w))
    }

    pub fn roots(&self) -> &RootSubset {
        &self.0
    }

    /// The element `w` with `self = w(R+)`, with a reduced word.
    pub fn weyl_element(&self, rd: &RootDatum) -> WeylElement {
        let mut b = self.0;
        let mut word = Vec::new();
        while let Some(j) = (0..rd.rank()).find(|&j| b.contains(rd.negate(j))) {
            let w = WeylElement::simple(rd, j).expect("node in range");
            b = b.image(&w);
            word.push(j);
        }
        WeylElement::from_word(rd, &word).expect("nodes in range")
    }

    /// Simple roots of the Borel: `simple[i] = w(alpha_i)`.
    pub fn simple_roots(&self, rd: &RootDatum) -> Vec<usize> {
        let w = self.weyl_element(rd);
        (0..rd.rank()).map(|i| w.apply(i)).collect()
    }

    /// Reflection in the simple root labelled `node`: `beta` and `-beta`
    /// swap, everything else is permuted among itself.
    pub fn reflect(&self, rd: &RootDatum, node: usize) -> Self {
        let w = self.weyl_element(rd);
        Self::from_weyl(rd, &w.times_simple(rd, node))
    }
}

/// A parabolic subalgebra, as its set of roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParabolicSet(RootSubset);

impl ParabolicSet {
    pub fn new(rd: &RootDatum, roots: RootSubset) -> Result<Self> {
        if roots.is_parabolic(rd) {
            Ok(Self(roots))
        } else {
            Err(LieError::Precondition(format!(
                "{:?} is not a parabolic",
                roots.coords(rd)
            )))
        }
    }

    pub fn whole(rd: &RootDatum) -> Self {
        Self(RootSubset::all(rd))
    }

    pub fn roots(&self) -> &RootSubset {
        &self.0
    }

    pub fn contains_set(&self, s: &RootSubset) -> bool {
        s.is_subset(&self.0)
    }

    /// Marked nodes relative to a Borel inside: labels `i` with
    /// `-w_b(alpha_i)` absent.
    pub fn marked_nodes(&self, rd: &RootDatum, b: &BorelSet) -> Result<NodeSet> {
        if !b.roots().is_subset(&self.0) {
            return Err(LieError::Precondition(
                "Borel not contained in the parabolic".into(),
            ));
        }
        Ok(b.simple_roots(rd)
            .iter()
            .enumerate()
            .filter(|(_, &beta)| !self.0.contains(rd.negate(beta)))
            .map(|(i, _)| i)
            .collect())
    }

    /// Roots of the Levi factor.
    pub fn levi(&self, rd: &RootDatum) -> RootSubset {
        self.0.intersection(&self.0.negated(rd))
    }

    /// Roots of the nilradical.
    pub fn nilradical(&self, rd: &RootDatum) -> RootSubset {
        self.0.difference(&self.0.negated(rd))
    }

    /// Root count of `G/P`, i.e. the number of roots outside `p`.
    pub fn codimension(&self, rd: &RootDatum) -> usize {
        rd.root_count() - self.0.len()
    }
}

/// `R+` together with the negatives of positive roots supported off `marked`.
pub fn standard_parabolic(rd: &RootDatum, marked: &NodeSet) -> Result<ParabolicSet> {
    marked.check(rd.rank())?;
    let mut s = RootSubset::positive(rd);
    for k in 0..rd.positive_count() {
        if !rd.support_meets(k, marked) {
            s.insert(rd.negate(k));
        }
    }
    Ok(ParabolicSet(s))
}

/// The parabolic over `b` whose marked simple roots are labelled by `sigma`.
pub fn parabolic_from_nodes(rd: &RootDatum, sigma: &NodeSet, b: &BorelSet) -> Result<ParabolicSet> {
    let std = standard_parabolic(rd, sigma)?;
    Ok(ParabolicSet(std.0.image(&b.weyl_element(rd))))
}

/// A Borel inside `s` if one exists. Where both signs of a root are present
/// the sign in `reference` is preferred, or the positive one without it.
pub fn contains_borel(
    rd: &RootDatum,
    s: &RootSubset,
    reference: Option<&BorelSet>,
) -> Result<Option<BorelSet>> {
    if let Some((a, b)) = s.first_unclosed(rd) {
        return Err(LieError::Precondition(format!(
            "root set not closed: {:?} + {:?} is missing",
            rd.root(a).coords,
            rd.root(b).coords
        )));
    }
    if !s.is_covering(rd) {
        return Ok(None);
    }
    let mut chosen = RootSubset::empty();
    for k in 0..rd.positive_count() {
        let n = rd.negate(k);
        let pick = match (s.contains(k), s.contains(n)) {
            (true, false) => k,
            (false, true) => n,
            _ => match reference {
                Some(r) if r.roots().contains(n) => n,
                _ => k,
            },
        };
        chosen.insert(pick);
    }
    if chosen.is_borel(rd) {
        return Ok(Some(BorelSet(chosen)));
    }
    // A closed covering set is a Levi plus a nilradical, and any positive
    // system of the Levi completes the nilradical to a Borel.
    Err(LieError::Internal(
        "closed covering set without a Borel".into(),
    ))
}

/// The maximal parabolics `b <= p1 <= b + bp` and `bp <= p1' <= b + bp`.
pub fn max_parabolic_pair(
    rd: &RootDatum,
    b: &BorelSet,
    bp: &BorelSet,
) -> (ParabolicSet, ParabolicSet) {
    let side = |x: &BorelSet, y: &BorelSet| {
        let marked: NodeSet = x
            .simple_roots(rd)
            .iter()
            .enumerate()
            .filter(|(_, &beta)| !y.roots().contains(rd.negate(beta)))
            .map(|(i, _)| i)
            .collect();
        parabolic_from_nodes(rd, &marked, x).expect("labels are nodes")
    };
    (side(b, bp), side(bp, b))
}

/// One step of the Borel update: the new Borels inside `p` and `pp`.
pub fn next_borels(
    rd: &RootDatum,
    p: &ParabolicSet,
    pp: &ParabolicSet,
    b: &BorelSet,
    bp: &BorelSet,
) -> Result<(BorelSet, BorelSet)> {
    if !b.roots().is_subset(p.roots()) || !bp.roots().is_subset(pp.roots()) {
        return Err(LieError::Precondition(
            "Borels must lie in their parabolics".into(),
        ));
    }
    let step =
        |p: &ParabolicSet, pp: &ParabolicSet, b: &BorelSet, label: &str| -> Result<BorelSet> {
            let (p, pp) = (p.roots(), pp.roots());
            let both = p.intersection(pp);
            let mut out = RootSubset::empty();
            let mut trace = Vec::new();
            for a in p.iter() {
                let n = rd.negate(a);
                let (case, keep) = if !p.contains(n) {
                    (1, true)
                } else if both.contains(a) && !pp.contains(n) {
                    (2, true)
                } else if !pp.contains(a) && both.contains(n) {
                    (3, false)
                } else if both.contains(a) && both.contains(n) {
                    (4, b.roots().contains(a))
                } else {
                    (0, false)
                };
                trace.push(format!("{:?}:case{case}:{keep}", rd.root(a).coords));
                if keep {
                    out.insert(a);
                }
            }
            if out.is_borel(rd) {
                Ok(BorelSet(out))
            } else {
                Err(LieError::Internal(format!(
                    "updated {label} is not a Borel; trace {}",
                    trace.join(" ")
                )))
            }
        };
    Ok((step(p, pp, b, "b")?, step(pp, p, bp, "b'")?))
}

/// One row of the step log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceStep {
    pub n: usize,
    pub sigma_p: NodeSet,
    pub sigma_pprime: NodeSet,
    pub union_size: usize,
}

/// The iterates `(B_n, B'_n, P_n, P'_n)` up to the first `n` for which
/// `P_n` and `P'_n` share a Borel, with the final Borel inside both.
#[derive(Debug, Clone)]
pub struct ParabolicSequence {
    pub borels: Vec<(BorelSet, BorelSet)>,
    pub parabolics: Vec<(ParabolicSet, ParabolicSet)>,
    /// 1-based index of the last pair.
    pub terminal_index: usize,
    pub final_borel: BorelSet,
}

/// Runs the construction from the pair `(b, bp)`.
pub fn parabolic_sequence(
    rd: &RootDatum,
    b: &BorelSet,
    bp: &BorelSet,
) -> Result<ParabolicSequence> {
    let mut borels = vec![(*b, *bp)];
    let mut parabolics = Vec::new();
    loop {
        let (bn, bpn) = *borels.last().expect("nonempty");
        let (p, pp) = max_parabolic_pair(rd, &bn, &bpn);
        parabolics.push((p, pp));
        let meet = p.roots().intersection(pp.roots());
        if contains_borel(rd, &meet, None)?.is_some() {
            break;
        }
        if borels.len() > rd.positive_count() {
            return Err(LieError::Internal(format!(
                "sequence did not terminate within {} steps",
                rd.positive_count()
            )));
        }
        let next = next_borels(rd, &p, &pp, &bn, &bpn)?;
        let before = bn.roots().union(bpn.roots()).len();
        let after = next.0.roots().union(next.1.roots()).len();
        if after >= before {
            return Err(LieError::Internal(format!(
                "|B u B'| did not drop: {before} -> {after}"
            )));
        }
        borels.push(next);
    }
    let n = borels.len();
    let (p, pp) = parabolics[n - 1];
    let final_borel = final_borel(rd, &p, &pp, &borels[n - 1].0)?;
    Ok(ParabolicSequence {
        borels,
        parabolics,
        terminal_index: n,
        final_borel,
    })
}

/// Reflects `b` inside `p` until it lands in `pp`, each time by the
/// smallest-labelled simple root `alpha` of the current Borel with
/// `alpha` outside `pp` and `-alpha` in `p`.
fn final_borel(
    rd: &RootDatum,
    p: &ParabolicSet,
    pp: &ParabolicSet,
    b: &BorelSet,
) -> Result<BorelSet> {
    let mut cur = *b;
    for _ in 0..=rd.positive_count() {
        if cur.roots().is_subset(pp.roots()) {
            return Ok(cur);
        }
        let simple = cur.simple_roots(rd);
        let node = (0..rd.rank())
            .find(|&i| !pp.roots().contains(simple[i]) && p.roots().contains(rd.negate(simple[i])))
            .ok_or_else(|| LieError::Internal("no simple root to reflect by".into()))?;
        cur = cur.reflect(rd, node);
    }
    Err(LieError::Internal(
        "final Borel walk did not terminate".into(),
    ))
}

impl ParabolicSequence {
    pub fn len(&self) -> usize {
        self.terminal_index
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(n, Sigma(P_n), Sigma(P'_n), |B_n u B'_n|)` for each `n`.
    pub fn step_log(&self, rd: &RootDatum) -> Vec<SequenceStep> {
        self.borels
            .iter()
            .zip(&self.parabolics)
            .enumerate()
            .map(|(i, ((b, bp), (p, pp)))| SequenceStep {
                n: i + 1,
                sigma_p: p.marked_nodes(rd, b).expect("b in p"),
                sigma_pprime: pp.marked_nodes(rd, bp).expect("b' in p'"),
                union_size: b.roots().union(bp.roots()).len(),
            })
            .collect()
    }

    /// Checks the chain invariants, naming the first one that fails.
    pub fn verify(&self, rd: &RootDatum) -> Result<()> {
        let fail = |msg: String| Err(LieError::Internal(msg));
        let b1p = *self.borels[0].1.roots();
        if self.terminal_index > rd.positive_count().max(1) {
            return fail(format!(
                "terminal index {} exceeds |R+|",
                self.terminal_index
            ));
        }
        for n in 0..self.borels.len() {
            let (b, bp) = &self.borels[n];
            let (p, pp) = &self.parabolics[n];
            if !b.roots().is_subset(p.roots()) || !bp.roots().is_subset(pp.roots()) {
                return fail(format!("B_{} not inside its parabolic", n + 1));
            }
            if n > 0 {
                let (q, qp) = &self.parabolics[n - 1];
                if !b.roots().is_subset(q.roots()) || !bp.roots().is_subset(qp.roots()) {
                    return fail(format!("B_{} not inside the previous parabolic", n + 1));
                }
                let (pb, pbp) = &self.borels[n - 1];
                let prev_union = pb.roots().union(pbp.roots());
                let union = b.roots().union(bp.roots());
                if !union.is_subset(&prev_union) || union.len() >= prev_union.len() {
                    return fail(format!("B_{0} u B'_{0} is not strictly smaller", n + 1));
                }
                let chain = [
                    pb.roots().intersection(&b1p),
                    b.roots().intersection(&b1p),
                    bp.roots().intersection(&b1p),
                    pbp.roots().intersection(&b1p),
                ];
                if !chain.windows(2).all(|w| w[0].is_subset(&w[1])) {
                    return fail(format!(
                        "intersection chain with B'_1 broken at n = {}",
                        n + 1
                    ));
                }
            }
            let meet = p.roots().intersection(pp.roots());
            let has_borel = contains_borel(rd, &meet, None)?.is_some();
            if has_borel != (n + 1 == self.terminal_index) {
                return fail(format!("termination test inconsistent at n = {}", n + 1));
            }
        }
        let n = self.terminal_index - 1;
        let (p, pp) = &self.parabolics[n];
        let fb = self.final_borel.roots();
        if !fb.is_subset(&p.roots().intersection(pp.roots())) {
            return fail("final Borel not inside P_n and P'_n".into());
        }
        let (b, bp) = &self.borels[n];
        let lo = b.roots().intersection(&b1p);
        let mid = fb.intersection(&b1p);
        let hi = bp.roots().intersection(&b1p);
        if !lo.is_subset(&mid) || !mid.is_subset(&hi) {
            return fail("final Borel breaks the intersection chain".into());
        }
        Ok(())
    }
}

/// A walk from `b_from` to `b_to` inside `p` by simple reflections, each step
/// adding one root to the intersection with `b_ref`.
pub fn borel_chain(
    rd: &RootDatum,
    p: &ParabolicSet,
    b_ref: &BorelSet,
    b_from: &BorelSet,
    b_to: &BorelSet,
) -> Result<Vec<BorelSet>> {
    if !b_from.roots().is_subset(p.roots()) || !b_to.roots().is_subset(p.roots()) {
        return Err(LieError::Precondition(
            "chain ends must lie in the parabolic".into(),
        ));
    }
    let target = b_to.roots().intersection(b_ref.roots());
    if !b_from
        .roots()
        .intersection(b_ref.roots())
        .is_subset(&target)
    {
        return Err(LieError::Precondition(
            "start meets the reference outside the target".into(),
        ));
    }
    let mut chain = vec![*b_from];
    let mut cur = *b_from;
    while cur != *b_to {
        let simple = cur.simple_roots(rd);
        let node = (0..rd.rank())
            .find(|&i| {
                let neg = rd.negate(simple[i]);
                target.contains(neg) && !cur.roots().contains(neg)
            })
            .ok_or_else(|| {
                LieError::Precondition(
                    "target not reachable while growing the reference intersection".into(),
                )
            })?;
        let next = cur.reflect(rd, node);
        let grew = next.roots().intersection(b_ref.roots()).len();
        if grew != cur.roots().intersection(b_ref.roots()).len() + 1
            || !next.roots().is_subset(p.roots())
        {
            return Err(LieError::Internal(
                "chain step left the parabolic or skipped".into(),
            ));
        }
        chain.push(next);
        cur = next;
        if chain.len() > rd.positive_count() + 1 {
            return Err(LieError::Internal("chain longer than |R+|".into()));
        }
    }
    Ok(chain)
}

/// For all `alpha in p`, `alpha' not in p` with `alpha + alpha'` in `p`:
/// `-alpha` is not in `p`.
pub fn check_fact1(rd: &RootDatum, p: &ParabolicSet) -> bool {
    let s = p.roots();
    for a in s.iter() {
        for ap in 0..rd.root_count() {
            if s.contains(ap) {
                continue;
            }
            if let Some(sum) = rd.sum_index(a, ap) {
                if s.contains(sum) && s.contains(rd.negate(a)) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, LieType};
    use crate::weyl::enumerate;

    fn rd(t: LieType, n: usize) -> RootDatum {
        build_root_system(t, n).unwrap()
    }

    fn all_borels(d: &RootDatum) -> Vec<BorelSet> {
        enumerate(d)
            .unwrap()
            .iter()
            .map(|w| BorelSet::from_weyl(d, w))
            .collect()
    }

    fn subsets(rank: usize) -> impl Iterator<Item = NodeSet> {
        (0..1usize << rank).map(move |m| (0..rank).filter(|i| m >> i & 1 == 1).collect())
    }

    #[test]
    fn parabolic_from_nodes_examples() {
        let a2 = rd(LieType::A, 2);
        let b = BorelSet::standard(&a2);
        let p = parabolic_from_nodes(&a2, &NodeSet::from([0, 1]), &b).unwrap();
        assert_eq!(p.roots(), b.roots());
        let p = parabolic_from_nodes(&a2, &NodeSet::new(), &b).unwrap();
        assert_eq!(p.roots().len(), 6);
        let a3 = rd(LieType::A, 3);
        let p = parabolic_from_nodes(&a3, &NodeSet::from([0]), &BorelSet::standard(&a3)).unwrap();
        assert_eq!(p.roots().len(), 9);
        assert!(parabolic_from_nodes(&a3, &NodeSet::from([3]), &BorelSet::standard(&a3)).is_err());
    }

    #[test]
    fn parabolic_from_nodes_round_trips_sigma() {
        for (t, n) in [(LieType::A, 3), (LieType::C, 2), (LieType::G, 2)] {
            let d = rd(t, n);
            for b in all_borels(&d) {
                for sigma in subsets(n) {
                    let p = parabolic_from_nodes(&d, &sigma, &b).unwrap();
                    assert!(p.roots().is_parabolic(&d));
                    assert!(b.roots().is_subset(p.roots()));
                    assert_eq!(p.marked_nodes(&d, &b).unwrap(), sigma);
                }
            }
        }
    }

    #[test]
    fn borel_weyl_round_trip() {
        let b3 = rd(LieType::B, 3);
        for w in enumerate(&b3).unwrap() {
            let b = BorelSet::from_weyl(&b3, &w);
            assert!(b.roots().is_borel(&b3));
            let back = b.weyl_element(&b3);
            assert_eq!(back, w);
            assert_eq!(back.word().len(), back.length());
        }
    }

    #[test]
    fn contains_borel_examples() {
        let a2 = rd(LieType::A, 2);
        let b = BorelSet::standard(&a2);
        let p = parabolic_from_nodes(&a2, &NodeSet::from([1]), &b).unwrap();
        assert_eq!(contains_borel(&a2, p.roots(), None).unwrap(), Some(b));
        let alpha1: RootSubset = [0].into_iter().collect();
        assert_eq!(contains_borel(&a2, &alpha1, None).unwrap(), None);
        let unclosed: RootSubset = [0, 1].into_iter().collect();
        assert!(contains_borel(&a2, &unclosed, None).is_err());
        let opposite = BorelSet::new(&a2, b.roots().negated(&a2)).unwrap();
        let whole = RootSubset::all(&a2);
        assert_eq!(
            contains_borel(&a2, &whole, Some(&opposite)).unwrap(),
            Some(opposite)
        );
    }

    #[test]
    fn max_pair_examples() {
        let a2 = rd(LieType::A, 2);
        let b = BorelSet::standard(&a2);
        let opposite = BorelSet::new(&a2, b.roots().negated(&a2)).unwrap();
        let (p, pp) = max_parabolic_pair(&a2, &b, &opposite);
        assert_eq!(p.roots().len(), 6);
        assert_eq!(pp.roots().len(), 6);
        let (p, _) = max_parabolic_pair(&a2, &b, &b);
        assert_eq!(p.roots(), b.roots());
        let s1 = b.reflect(&a2, 0);
        let (p, _) = max_parabolic_pair(&a2, &b, &s1);
        assert_eq!(
            p.roots().coords(&a2),
            vec![vec![-1, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
    }

    #[test]
    fn max_pair_is_maximal_and_unique() {
        for (t, n) in [(LieType::A, 2), (LieType::A, 3), (LieType::C, 2)] {
            let d = rd(t, n);
            let borels = all_borels(&d);
            for b in &borels {
                let over_b: Vec<ParabolicSet> = subsets(n)
                    .map(|s| parabolic_from_nodes(&d, &s, b).unwrap())
                    .collect();
                for bp in &borels {
                    let (p, pp) = max_parabolic_pair(&d, b, bp);
                    let sum = b.roots().union(bp.roots());
                    assert!(p.roots().is_subset(&sum) && pp.roots().is_subset(&sum));
                    for beta in b.simple_roots(&d) {
                        if bp.roots().contains(d.negate(beta)) {
                            assert!(p.roots().contains(d.negate(beta)));
                        }
                    }
                    for q in &over_b {
                        if q.roots().is_subset(&sum) {
                            assert!(q.roots().is_subset(p.roots()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sequence_examples() {
        let a2 = rd(LieType::A, 2);
        let b = BorelSet::standard(&a2);
        let seq = parabolic_sequence(&a2, &b, &b).unwrap();
        assert_eq!(seq.terminal_index, 1);
        assert_eq!(seq.parabolics[0].0.roots(), b.roots());
        let w0 = WeylElement::longest(&a2);
        let seq = parabolic_sequence(&a2, &b, &BorelSet::from_weyl(&a2, &w0)).unwrap();
        assert_eq!(seq.terminal_index, 1);
        assert_eq!(seq.parabolics[0].0.roots().len(), 6);

        let a3 = rd(LieType::A, 3);
        let w = WeylElement::from_word(&a3, &[1, 0, 2, 1]).unwrap();
        let b = BorelSet::standard(&a3);
        let seq = parabolic_sequence(&a3, &b, &BorelSet::from_weyl(&a3, &w)).unwrap();
        seq.verify(&a3).unwrap();
        assert!(seq.terminal_index > 1);
        let log = seq.step_log(&a3);
        assert!(log.windows(2).all(|w| w[0].union_size > w[1].union_size));
    }

    #[test]
    fn next_borels_trivial_cases() {
        let a3 = rd(LieType::A, 3);
        let whole = ParabolicSet::whole(&a3);
        for w in enumerate(&a3).unwrap() {
            let b = BorelSet::from_weyl(&a3, &w);
            let (nb, _) = next_borels(&a3, &whole, &whole, &b, &b).unwrap();
            assert_eq!(nb, b);
        }
    }

    #[test]
    fn borel_chain_examples() {
        let a2 = rd(LieType::A, 2);
        let b = BorelSet::standard(&a2);
        let p = parabolic_from_nodes(&a2, &NodeSet::from([1]), &b).unwrap();
        assert_eq!(borel_chain(&a2, &p, &b, &b, &b).unwrap().len(), 1);
        let other = b.reflect(&a2, 0);
        let chain = borel_chain(&a2, &p, &b, &other, &b).unwrap();
        assert_eq!(chain, vec![other, b]);
        assert!(borel_chain(
            &a2,
            &p,
            &b,
            &b,
            &BorelSet::from_weyl(&a2, &WeylElement::longest(&a2))
        )
        .is_err());
    }

    #[test]
    fn fact1_everywhere() {
        let a2 = rd(LieType::A, 2);
        assert!(check_fact1(&a2, &ParabolicSet::whole(&a2)));
        for (t, n) in [
            (LieType::A, 2),
            (LieType::A, 3),
            (LieType::C, 2),
            (LieType::G, 2),
        ] {
            let d = rd(t, n);
            for b in all_borels(&d) {
                for s in subsets(n) {
                    assert!(check_fact1(&d, &parabolic_from_nodes(&d, &s, &b).unwrap()));
                }
            }
        }
    }

    #[test]
    fn fact1_detects_a_non_parabolic() {
        // Closure alone forces the implication, so only an unclosed set fails.
        let a2 = rd(LieType::A, 2);
        let s: RootSubset = [0, a2.negate(0), 2].into_iter().collect();
        assert!(!s.is_closed(&a2));
        assert!(!check_fact1(&a2, &ParabolicSet(s)));
    }
}
