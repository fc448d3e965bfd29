//! A desingularization of Schubert varieties built from the parabolic
//! sequence, its refinement to a Demazure chain, and smoothness tests.
//!
//! A Weyl element `w` names the Schubert variety `X_w`, the closure of
//! `BwP/P`. Internally the pair of Borels is `(B, w^-1(B))`, whose root union
//! is the tangent space of `BwB` translated to the identity.

use std::fmt::Write as _;

use crate::error::{LieError, Result};
use crate::parabolic::{
    borel_chain, contains_borel, max_parabolic_pair, parabolic_sequence, standard_parabolic,
    BorelSet, ParabolicSequence, ParabolicSet, RootSubset,
};
use crate::rootsys::{NodeSet, RootDatum};
use crate::weyl::{bruhat_leq, WeylElement};

/// Positive roots of the Levi of the standard parabolic marked by `sigma`.
fn levi_positive(rd: &RootDatum, sigma: &NodeSet) -> usize {
    (0..rd.positive_count())
        .filter(|&k| !rd.support_meets(k, sigma))
        .count()
}

/// Replaces `w` by `w'` in `W(P') w W(P)` with `B u w'^-1(B) = P u w'^-1(P')`,
/// by adjoining missing negative simple roots one reflection at a time.
///
/// Returns the standard Borel and `w'`. For `P' = B` the result is the
/// longest element of `w W(P)`.
pub fn borel_completion(
    rd: &RootDatum,
    p_nodes: &NodeSet,
    pprime_nodes: &NodeSet,
    w: &WeylElement,
) -> Result<(BorelSet, WeylElement)> {
    let p = standard_parabolic(rd, p_nodes)?;
    let pp = standard_parabolic(rd, pprime_nodes)?;
    let x = w.inverse();
    let xpp = pp.roots().image(&x);
    let target = p.roots().union(&xpp);
    let b0 = BorelSet::standard(rd);
    // b = u(B) inside p, b' = x v(B) inside x(p').
    let mut u = WeylElement::identity(rd);
    let mut v = WeylElement::identity(rd);
    for _ in 0..=rd.positive_count() {
        let b = RootSubset::positive(rd).image(&u);
        let xv = x.mul(&v);
        let bp = RootSubset::positive(rd).image(&xv);
        let have = b.union(&bp);
        let missing = target.difference(&have);
        if missing.is_empty() {
            let x_prime = u.inverse().mul(&x).mul(&v);
            let w_prime = x_prime.inverse().reduced(rd);
            let check = RootSubset::positive(rd).union(&RootSubset::positive(rd).image(&x_prime));
            if check != p.roots().union(&pp.roots().image(&x_prime)) {
                return Err(LieError::Internal(
                    "completed Borels do not span p + p'".into(),
                ));
            }
            return Ok((b0, w_prime));
        }
        let repair = |frame: &WeylElement, side: &RootSubset| {
            (0..rd.rank()).find(|&j| {
                let neg = rd.negate(frame.apply(j));
                side.contains(neg) && !have.contains(neg)
            })
        };
        if missing.iter().any(|k| p.roots().contains(k)) {
            let j = repair(&u, p.roots())
                .ok_or_else(|| LieError::Internal("no simple root to repair b".into()))?;
            u = u.times_simple(rd, j);
        } else {
            let j = repair(&xv, &xpp)
                .ok_or_else(|| LieError::Internal("no simple root to repair b'".into()))?;
            v = v.times_simple(rd, j);
        }
    }
    Err(LieError::Internal(format!(
        "repair loop exceeded {} steps",
        rd.positive_count()
    )))
}

/// Where a tower factor comes from in the sequence (1-based `k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorTag {
    Primed(usize),
    Unprimed(usize),
    /// `P'_n = P_n`, shown once.
    Merged(usize),
}

/// `P'_1 x ... x P'_n x P_n x ... x P_1` modulo the junctions, then modulo
/// the quotient parabolic on the right.
#[derive(Debug, Clone)]
pub struct DesingTower {
    pub factors: Vec<ParabolicSet>,
    pub tags: Vec<FactorTag>,
    pub junctions: Vec<RootSubset>,
    pub base_word: WeylElement,
    pub quotient: NodeSet,
    pub borel: BorelSet,
    pub partner: BorelSet,
    pub sequence: ParabolicSequence,
}

/// Tower for the Schubert variety `X_w` in `G/P`.
pub fn build_tower(rd: &RootDatum, p_nodes: &NodeSet, w: &WeylElement) -> Result<DesingTower> {
    build_orbit_tower(rd, p_nodes, &NodeSet::all(rd.rank()), w)
}

/// Tower for the closure of the `P'`-orbit of `w` in `G/P`.
pub fn build_orbit_tower(
    rd: &RootDatum,
    p_nodes: &NodeSet,
    pprime_nodes: &NodeSet,
    w: &WeylElement,
) -> Result<DesingTower> {
    let (b0, w_prime) = borel_completion(rd, p_nodes, pprime_nodes, w)?;
    let partner = BorelSet::from_weyl(rd, &w_prime.inverse());
    let sequence = parabolic_sequence(rd, &b0, &partner)?;
    sequence.verify(rd)?;
    let n = sequence.terminal_index;
    let mut factors = Vec::new();
    let mut tags = Vec::new();
    for k in 1..=n {
        factors.push(sequence.parabolics[k - 1].1);
        tags.push(FactorTag::Primed(k));
    }
    let (pn, ppn) = sequence.parabolics[n - 1];
    if pn == ppn {
        *tags.last_mut().expect("n >= 1") = FactorTag::Merged(n);
    } else {
        factors.push(pn);
        tags.push(FactorTag::Unprimed(n));
    }
    for k in (1..n).rev() {
        factors.push(sequence.parabolics[k - 1].0);
        tags.push(FactorTag::Unprimed(k));
    }
    let junctions = factors
        .windows(2)
        .map(|f| f[0].roots().intersection(f[1].roots()))
        .collect();
    let tower = DesingTower {
        factors,
        tags,
        junctions,
        base_word: w_prime,
        quotient: p_nodes.clone(),
        borel: b0,
        partner,
        sequence,
    };
    tower.verify(rd)?;
    Ok(tower)
}

impl DesingTower {
    fn verify(&self, rd: &RootDatum) -> Result<()> {
        for (i, j) in self.junctions.iter().enumerate() {
            if !j.is_subset(self.factors[i].roots()) || !j.is_subset(self.factors[i + 1].roots()) {
                return Err(LieError::Internal(format!(
                    "junction {i} escapes its factors"
                )));
            }
            if contains_borel(rd, j, None)?.is_none() {
                return Err(LieError::Internal(format!(
                    "junction {i} contains no Borel"
                )));
            }
        }
        let q = standard_parabolic(rd, &self.quotient)?;
        let last = self.factors.last().expect("nonempty");
        if !q.roots().is_subset(last.roots()) {
            return Err(LieError::Internal(
                "quotient parabolic not inside P_1".into(),
            ));
        }
        let expected = self.base_word.length() as i64 - levi_positive(rd, &self.quotient) as i64;
        if tower_dimension(rd, self)? != expected {
            return Err(LieError::Internal(format!(
                "tower dimension {} differs from l(w') - dim P/B = {expected}",
                tower_dimension(rd, self)?
            )));
        }
        Ok(())
    }

    /// Marked nodes of each factor, relative to the Borel of the sequence it
    /// contains (`B'_k` for primed factors, `B_k` otherwise).
    pub fn factor_marks(&self, rd: &RootDatum) -> Vec<NodeSet> {
        self.factors
            .iter()
            .zip(&self.tags)
            .map(|(f, tag)| {
                let b = match *tag {
                    FactorTag::Primed(k) | FactorTag::Merged(k) => self.sequence.borels[k - 1].1,
                    FactorTag::Unprimed(k) => self.sequence.borels[k - 1].0,
                };
                f.marked_nodes(rd, &b)
                    .expect("sequence Borel lies in its factor")
            })
            .collect()
    }

    /// DOT rendering: factors as boxes, junction edges labelled by the
    /// dimension of the next fiber.
    pub fn to_dot(&self, rd: &RootDatum) -> String {
        let marks = self.factor_marks(rd);
        let mut s = String::from("digraph tower {\n  rankdir=LR;\n  node [shape=box];\n");
        for (i, (tag, m)) in self.tags.iter().zip(&marks).enumerate() {
            let name = match tag {
                FactorTag::Primed(k) => format!("P'{k}"),
                FactorTag::Unprimed(k) => format!("P{k}"),
                FactorTag::Merged(k) => format!("P{k}=P'{k}"),
            };
            let nodes: Vec<String> = m.iter().map(|x| (x + 1).to_string()).collect();
            let _ = writeln!(s, "  f{i} [label=\"{name} {{{}}}\"];", nodes.join(","));
        }
        for (i, j) in self.junctions.iter().enumerate() {
            let fiber = self.factors[i + 1].roots().len() - j.len();
            let _ = writeln!(s, "  f{i} -> f{} [label=\"{fiber}\"];", i + 1);
        }
        s.push_str("}\n");
        s
    }
}

/// `sum |factors| - sum |junctions| - |Q|`, counted in roots.
pub fn tower_dimension(rd: &RootDatum, t: &DesingTower) -> Result<i64> {
    let q = standard_parabolic(rd, &t.quotient)?;
    let f: usize = t.factors.iter().map(|f| f.roots().len()).sum();
    let j: usize = t.junctions.iter().map(RootSubset::len).sum();
    Ok(f as i64 - j as i64 - q.roots().len() as i64)
}

/// A chain of minimal parabolics refining a tower.
#[derive(Debug, Clone)]
pub struct RefinedChain {
    /// In tower order: the product of `word` is `w'`.
    pub minimal_factors: Vec<ParabolicSet>,
    pub word: Vec<usize>,
    /// Index of the tower factor each minimal factor belongs to.
    pub groups: Vec<usize>,
}

impl RefinedChain {
    /// Minimal factors grouped by tower factor, in tower order.
    pub fn regroup(&self, t: &DesingTower) -> Vec<Vec<ParabolicSet>> {
        let mut out = vec![Vec::new(); t.factors.len()];
        for (f, &g) in self.minimal_factors.iter().zip(&self.groups) {
            out[g].push(*f);
        }
        out
    }

    /// Positional regrouping: groups appear in tower order and each minimal
    /// factor lies in its tower factor.
    pub fn regroups_to(&self, t: &DesingTower) -> bool {
        self.groups.windows(2).all(|g| g[0] <= g[1])
            && self
                .minimal_factors
                .iter()
                .zip(&self.groups)
                .all(|(f, &g)| f.roots().is_subset(t.factors[g].roots()))
    }
}

/// Refines the tower into minimal parabolics through single-reflection
/// Borel chains inside each factor.
pub fn demazure_refinement(rd: &RootDatum, t: &DesingTower) -> Result<RefinedChain> {
    let seq = &t.sequence;
    let n = seq.terminal_index;
    let b_ref = t.partner;
    let position = |tag: FactorTag| -> usize {
        t.tags
            .iter()
            .position(|&x| {
                x == tag
                    || matches!((x, tag), (FactorTag::Merged(a), FactorTag::Primed(b) | FactorTag::Unprimed(b)) if a == b)
            })
            .expect("tag present")
    };
    // Forward segments from B to B', each inside one factor.
    let mut segments: Vec<(BorelSet, BorelSet, ParabolicSet, usize)> = Vec::new();
    for k in 1..n {
        segments.push((
            seq.borels[k - 1].0,
            seq.borels[k].0,
            seq.parabolics[k - 1].0,
            position(FactorTag::Unprimed(k)),
        ));
    }
    let (pn, ppn) = seq.parabolics[n - 1];
    segments.push((
        seq.borels[n - 1].0,
        seq.final_borel,
        pn,
        position(FactorTag::Unprimed(n)),
    ));
    segments.push((
        seq.final_borel,
        seq.borels[n - 1].1,
        ppn,
        position(FactorTag::Primed(n)),
    ));
    for k in (1..n).rev() {
        segments.push((
            seq.borels[k].1,
            seq.borels[k - 1].1,
            seq.parabolics[k - 1].1,
            position(FactorTag::Primed(k)),
        ));
    }

    let mut forward: Vec<(ParabolicSet, usize, usize)> = Vec::new();
    for (from, to, p, group) in segments {
        let chain = borel_chain(rd, &p, &b_ref, &from, &to)?;
        for pair in chain.windows(2) {
            let (x, y) = (pair[0], pair[1]);
            let q = ParabolicSet::new(rd, x.roots().union(y.roots()))?;
            let xw = x.weyl_element(rd);
            let label = (0..rd.rank())
                .find(|&j| BorelSet::from_weyl(rd, &xw.times_simple(rd, j)) == y)
                .ok_or_else(|| {
                    LieError::Internal("consecutive Borels differ by more than a reflection".into())
                })?;
            if !q.roots().is_subset(p.roots()) {
                return Err(LieError::Internal(
                    "minimal factor escapes its tower factor".into(),
                ));
            }
            forward.push((q, label, group));
        }
    }
    forward.reverse();
    let chain = RefinedChain {
        minimal_factors: forward.iter().map(|f| f.0).collect(),
        word: forward.iter().map(|f| f.1).collect(),
        groups: forward.iter().map(|f| f.2).collect(),
    };
    let product = WeylElement::from_word(rd, &chain.word)?;
    if product != t.base_word || chain.word.len() != product.length() {
        return Err(LieError::Internal(
            "refined word is not a reduced word of w'".into(),
        ));
    }
    Ok(chain)
}

/// `p_1 n p'_1` contains a Borel; when it does, `X_w` is smooth.
pub fn smoothness_sufficient(rd: &RootDatum, p_nodes: &NodeSet, w: &WeylElement) -> Result<bool> {
    let (b0, w_prime) = borel_completion(rd, p_nodes, &NodeSet::all(rd.rank()), w)?;
    let partner = BorelSet::from_weyl(rd, &w_prime.inverse());
    let (p1, pp1) = max_parabolic_pair(rd, &b0, &partner);
    Ok(contains_borel(rd, &p1.roots().intersection(pp1.roots()), None)?.is_some())
}

/// Rational smoothness of `X_w` in `G/B`: the number of reflections below
/// `w` equals `l(w)`. In type A this is smoothness.
pub fn rationally_smooth(rd: &RootDatum, w: &WeylElement) -> bool {
    let below = WeylElement::reflections(rd)
        .iter()
        .filter(|t| bruhat_leq(rd, t, w))
        .count();
    below == w.length()
}

/// The minimal Schubert variety `X_{w'}` in `G/P_1` attached to `X_w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSchubert {
    pub is_minimal: bool,
    pub p1_nodes: NodeSet,
    pub w_prime: WeylElement,
    /// `l(w') - dim P_1/B`.
    pub dimension: usize,
}

pub fn minimal_schubert(
    rd: &RootDatum,
    p_nodes: &NodeSet,
    w: &WeylElement,
) -> Result<MinimalSchubert> {
    let (b0, w_prime) = borel_completion(rd, p_nodes, &NodeSet::all(rd.rank()), w)?;
    let partner = BorelSet::from_weyl(rd, &w_prime.inverse());
    let (p1, _) = max_parabolic_pair(rd, &b0, &partner);
    let p1_nodes = p1.marked_nodes(rd, &b0)?;
    let dimension = w_prime.length() - levi_positive(rd, &p1_nodes);
    Ok(MinimalSchubert {
        is_minimal: p1_nodes == *p_nodes,
        p1_nodes,
        w_prime,
        dimension,
    })
}

/// Checks a proposed enlargement `q` of tower factor `index`: a parabolic
/// containing the factor and contained in `B u B'`.
pub fn check_enlargement(
    rd: &RootDatum,
    t: &DesingTower,
    index: usize,
    q: &RootSubset,
) -> Result<()> {
    let factor = t
        .factors
        .get(index)
        .ok_or_else(|| LieError::Precondition(format!("tower has no factor {index}")))?;
    if !q.is_parabolic(rd) {
        return Err(LieError::Precondition(
            "enlargement is not a parabolic".into(),
        ));
    }
    if !factor.roots().is_subset(q) {
        return Err(LieError::Precondition(
            "enlargement does not contain the factor".into(),
        ));
    }
    if !q.is_subset(&t.borel.roots().union(t.partner.roots())) {
        return Err(LieError::Precondition(
            "enlargement leaves the Schubert variety".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::orbit_dimension;
    use crate::rootsys::{build_root_system, LieType};
    use crate::weyl::enumerate;

    fn rd(t: LieType, n: usize) -> RootDatum {
        build_root_system(t, n).unwrap()
    }

    fn borel_nodes(d: &RootDatum) -> NodeSet {
        NodeSet::all(d.rank())
    }

    #[test]
    fn completion_is_trivial_for_borels() {
        let a3 = rd(LieType::A, 3);
        let all = borel_nodes(&a3);
        for w in enumerate(&a3).unwrap() {
            let (b, wp) = borel_completion(&a3, &all, &all, &w).unwrap();
            assert_eq!(b, BorelSet::standard(&a3));
            assert_eq!(wp, w);
        }
    }

    #[test]
    fn completion_spans_and_stays_in_the_double_coset() {
        let a3 = rd(LieType::A, 3);
        let one = NodeSet::from([0]);
        let orbits =
            crate::weyl::double_coset_orbits(&a3, &one.complement(3), &one.complement(3)).unwrap();
        for w in enumerate(&a3).unwrap() {
            let (_, wp) = borel_completion(&a3, &one, &one, &w).unwrap();
            let o = orbits.iter().find(|o| o.contains(&w)).unwrap();
            assert!(o.contains(&wp));
        }
    }

    #[test]
    fn completion_gives_the_longest_coset_element() {
        let a3 = rd(LieType::A, 3);
        for sigma in [
            NodeSet::from([0]),
            NodeSet::from([1]),
            NodeSet::from([0, 2]),
        ] {
            let gens = sigma.complement(3);
            for w in enumerate(&a3).unwrap() {
                let (_, wp) = borel_completion(&a3, &sigma, &borel_nodes(&a3), &w).unwrap();
                assert!(
                    gens.iter().all(|s| wp.is_right_descent(s)),
                    "{:?}",
                    w.word()
                );
                let coset = crate::weyl::double_coset_orbits(&a3, &NodeSet::new(), &gens).unwrap();
                assert!(coset.iter().any(|o| o.contains(&w) && o.contains(&wp)));
            }
        }
    }

    #[test]
    fn tower_examples() {
        let a2 = rd(LieType::A, 2);
        let all = borel_nodes(&a2);
        let t = build_tower(&a2, &all, &WeylElement::longest(&a2)).unwrap();
        assert_eq!(t.factors.len(), 1);
        assert_eq!(t.factors[0].roots().len(), 6);
        assert_eq!(tower_dimension(&a2, &t).unwrap(), 3);
        let s1 = WeylElement::simple(&a2, 0).unwrap();
        let t = build_tower(&a2, &all, &s1).unwrap();
        assert_eq!(t.factors.len(), 1);
        assert_eq!(
            t.factors[0].roots().coords(&a2),
            vec![vec![-1, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(tower_dimension(&a2, &t).unwrap(), 1);
        let a3 = rd(LieType::A, 3);
        let w = WeylElement::from_word(&a3, &[1, 0, 2, 1]).unwrap();
        let t = build_tower(&a3, &borel_nodes(&a3), &w).unwrap();
        assert_eq!(tower_dimension(&a3, &t).unwrap(), 4);
        assert!(t.to_dot(&a3).starts_with("digraph tower"));
    }

    #[test]
    fn tower_dimension_is_length() {
        for (t, n) in [
            (LieType::A, 1),
            (LieType::A, 2),
            (LieType::A, 3),
            (LieType::B, 3),
            (LieType::C, 2),
            (LieType::G, 2),
        ] {
            let d = rd(t, n);
            for w in enumerate(&d).unwrap() {
                let tower = build_tower(&d, &borel_nodes(&d), &w).unwrap();
                assert_eq!(tower_dimension(&d, &tower).unwrap(), w.length() as i64);
            }
        }
    }

    #[test]
    fn towers_over_parabolics() {
        let a3 = rd(LieType::A, 3);
        for mask in 1..8usize {
            let sigma: NodeSet = (0..3).filter(|i| mask >> i & 1 == 1).collect();
            for w in enumerate(&a3).unwrap() {
                let t = build_tower(&a3, &sigma, &w).unwrap();
                let expected = t.base_word.length() - levi_positive(&a3, &sigma);
                assert_eq!(tower_dimension(&a3, &t).unwrap(), expected as i64);
            }
        }
    }

    #[test]
    fn refinement_examples() {
        let a2 = rd(LieType::A, 2);
        let all = borel_nodes(&a2);
        let t = build_tower(&a2, &all, &WeylElement::simple(&a2, 0).unwrap()).unwrap();
        let r = demazure_refinement(&a2, &t).unwrap();
        assert_eq!(r.word, vec![0]);
        assert_eq!(r.minimal_factors, t.factors);
        let w0 = WeylElement::longest(&a2);
        let t = build_tower(&a2, &all, &w0).unwrap();
        let r = demazure_refinement(&a2, &t).unwrap();
        assert_eq!(r.word.len(), 3);
        assert_eq!(WeylElement::from_word(&a2, &r.word).unwrap(), w0);
    }

    #[test]
    fn refinement_is_reduced_and_regroups() {
        for (t, n) in [
            (LieType::A, 3),
            (LieType::B, 3),
            (LieType::C, 3),
            (LieType::G, 2),
        ] {
            let d = rd(t, n);
            for w in enumerate(&d).unwrap() {
                let tower = build_tower(&d, &borel_nodes(&d), &w).unwrap();
                let r = demazure_refinement(&d, &tower).unwrap();
                assert_eq!(r.word.len(), w.length());
                assert_eq!(WeylElement::from_word(&d, &r.word).unwrap(), w);
                assert!(r.regroups_to(&tower));
                for f in &r.minimal_factors {
                    assert_eq!(f.roots().len(), d.positive_count() + 1);
                }
            }
        }
    }

    #[test]
    fn first_factor_orbit_is_the_open_cell_closure() {
        let a3 = rd(LieType::A, 3);
        for w in enumerate(&a3).unwrap() {
            let t = build_tower(&a3, &borel_nodes(&a3), &w).unwrap();
            let pp1 = t.sequence.parabolics[0].1;
            let conj = ParabolicSet::new(&a3, pp1.roots().image(&t.base_word)).unwrap();
            let sigma = conj.marked_nodes(&a3, &BorelSet::standard(&a3)).unwrap();
            let dim = orbit_dimension(&a3, &t.base_word, &borel_nodes(&a3), &sigma).unwrap();
            assert_eq!(dim, t.base_word.length());
        }
    }

    #[test]
    fn smoothness_examples() {
        let a2 = rd(LieType::A, 2);
        let all = borel_nodes(&a2);
        assert!(smoothness_sufficient(&a2, &all, &WeylElement::longest(&a2)).unwrap());
        assert!(smoothness_sufficient(&a2, &all, &WeylElement::simple(&a2, 0).unwrap()).unwrap());
        let a3 = rd(LieType::A, 3);
        let w = WeylElement::from_word(&a3, &[1, 0, 2, 1]).unwrap();
        assert!(!smoothness_sufficient(&a3, &borel_nodes(&a3), &w).unwrap());
        assert!(!rationally_smooth(&a3, &w));
    }

    fn contains_pattern(p: &[usize], pattern: &[usize]) -> bool {
        let n = p.len();
        let k = pattern.len();
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .any(|m| {
                let sub: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).map(|i| p[i]).collect();
                (0..k).all(|a| (0..k).all(|b| (sub[a] < sub[b]) == (pattern[a] < pattern[b])))
            })
    }

    #[test]
    fn reflection_count_matches_pattern_avoidance() {
        for n in 2..=4 {
            let a = rd(LieType::A, n);
            for w in enumerate(&a).unwrap() {
                let p = w.to_permutation(&a).unwrap();
                let smooth =
                    !contains_pattern(&p, &[3, 4, 1, 2]) && !contains_pattern(&p, &[4, 2, 3, 1]);
                assert_eq!(rationally_smooth(&a, &w), smooth, "{p:?}");
            }
        }
    }

    #[test]
    fn sufficient_criterion_is_sound_but_not_necessary() {
        let a3 = rd(LieType::A, 3);
        let all = borel_nodes(&a3);
        let mut gap = 0;
        for w in enumerate(&a3).unwrap() {
            let crit = smoothness_sufficient(&a3, &all, &w).unwrap();
            let smooth = rationally_smooth(&a3, &w);
            assert!(!crit || smooth);
            if smooth && !crit {
                gap += 1;
            }
        }
        assert!(gap > 0);
    }

    #[test]
    fn minimal_examples() {
        let a2 = rd(LieType::A, 2);
        let all = borel_nodes(&a2);
        let m = minimal_schubert(&a2, &all, &WeylElement::longest(&a2)).unwrap();
        assert!(m.p1_nodes.is_empty());
        assert_eq!(m.dimension, 0);
        let m = minimal_schubert(&a2, &all, &WeylElement::simple(&a2, 0).unwrap()).unwrap();
        assert!(!m.is_minimal);
        assert_eq!(m.p1_nodes, NodeSet::from([1]));
        assert_eq!(m.dimension, 0);
        let a3 = rd(LieType::A, 3);
        let w = WeylElement::from_word(&a3, &[1, 0, 2, 1]).unwrap();
        let m = minimal_schubert(&a3, &borel_nodes(&a3), &w).unwrap();
        assert_eq!(m.dimension, 4 - levi_positive(&a3, &m.p1_nodes));
    }

    #[test]
    fn enlargement_hook() {
        let a3 = rd(LieType::A, 3);
        let w = WeylElement::from_word(&a3, &[1, 0, 2, 1]).unwrap();
        let t = build_tower(&a3, &borel_nodes(&a3), &w).unwrap();
        let last = t.factors.len() - 1;
        check_enlargement(&a3, &t, last, t.factors[last].roots()).unwrap();
        assert!(check_enlargement(&a3, &t, last, &RootSubset::all(&a3)).is_err());
        assert!(check_enlargement(&a3, &t, 99, &RootSubset::all(&a3)).is_err());
    }
}
