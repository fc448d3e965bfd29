//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use lie_core::curves::{
    decide_smooth_rational_curve, hilbert_dimension, tangent_degree, tangent_degree_via_levi,
    CurveClass, Exception,
};
use lie_core::desing::{
    build_tower, demazure_refinement, rationally_smooth, smoothness_sufficient, tower_dimension,
};
use lie_core::orbits::{brute_force_min_codim, complement_codim_ge2, levi_quotient};
use lie_core::parabolic::{
    check_fact1, parabolic_from_nodes, parabolic_sequence, BorelSet, RootSubset,
};
use lie_core::weyl::enumerate;
use lie_core::{build_root_system, LieType, NodeSet, RootDatum, WeylElement};

fn rd(t: LieType, n: usize) -> RootDatum {
    build_root_system(t, n).unwrap()
}

fn subsets(rank: usize, nonempty: bool) -> Vec<NodeSet> {
    (0..1usize << rank)
        .filter(|&m| !nonempty || m != 0)
        .map(|m| (0..rank).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn degree_vectors(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| (lo..=hi).map(move |d| [v.clone(), vec![d]].concat()))
            .collect();
    }
    out
}

// Roots by closing the simple roots under simple reflections, straight from
// the Cartan matrix.
fn closure_roots(cartan: &[Vec<i32>]) -> BTreeSet<Vec<i32>> {
    let n = cartan.len();
    let mut seen: BTreeSet<Vec<i32>> = (0..n)
        .map(|i| (0..n).map(|j| i32::from(i == j)).collect())
        .collect();
    let mut frontier: Vec<Vec<i32>> = seen.iter().cloned().collect();
    while let Some(b) = frontier.pop() {
        for i in 0..n {
            let pairing: i32 = (0..n).map(|j| b[j] * cartan[i][j]).sum();
            let mut r = b.clone();
            r[i] -= pairing;
            if seen.insert(r.clone()) {
                frontier.push(r);
            }
        }
    }
    seen
}

fn criterion_1() {
    let groups = [
        (LieType::A, 1, 2),
        (LieType::A, 2, 6),
        (LieType::A, 3, 12),
        (LieType::A, 4, 20),
        (LieType::B, 2, 8),
        (LieType::B, 3, 18),
        (LieType::B, 4, 32),
        (LieType::C, 2, 8),
        (LieType::C, 3, 18),
        (LieType::C, 4, 32),
        (LieType::D, 3, 12),
        (LieType::D, 4, 24),
        (LieType::F, 4, 48),
        (LieType::G, 2, 12),
        (LieType::E, 6, 72),
    ];
    for (t, n, count) in groups {
        let d = rd(t, n);
        let closed = closure_roots(d.cartan());
        let built: BTreeSet<Vec<i32>> = d.roots().iter().map(|r| r.coords.clone()).collect();
        assert_eq!(closed.len(), count, "{t}{n} closure");
        assert_eq!(built, closed, "{t}{n} roots");
        let again = RootDatum::from_cartan(t, d.cartan().to_vec()).unwrap();
        assert_eq!(again.cartan(), d.cartan(), "{t}{n} cartan");
        assert_eq!(again.roots(), d.roots(), "{t}{n} regenerated roots");
    }
}

fn criterion_2() {
    for (t, n) in [(LieType::A, 3), (LieType::C, 2), (LieType::G, 2)] {
        let d = rd(t, n);
        for w in enumerate(&d).unwrap() {
            let b = BorelSet::from_weyl(&d, &w);
            for sigma in subsets(n, false) {
                let p = parabolic_from_nodes(&d, &sigma, &b).unwrap();
                assert!(
                    check_fact1(&d, &p),
                    "{t}{n} w={:?} sigma={:?}",
                    w.word(),
                    sigma
                );
            }
        }
    }
}

fn has_borel_oracle(borels: &[RootSubset], s: &RootSubset) -> bool {
    borels.iter().any(|b| b.is_subset(s))
}

fn criterion_3() {
    for (t, n) in [
        (LieType::A, 2),
        (LieType::A, 3),
        (LieType::C, 2),
        (LieType::G, 2),
    ] {
        let d = rd(t, n);
        let ws = enumerate(&d).unwrap();
        let borels: Vec<RootSubset> = ws
            .iter()
            .map(|w| RootSubset::positive(&d).image(w))
            .collect();
        let b0 = BorelSet::standard(&d);
        for w in &ws {
            let seq = parabolic_sequence(&d, &b0, &BorelSet::from_weyl(&d, w)).unwrap();
            seq.verify(&d).unwrap();
            assert!(seq.terminal_index <= d.positive_count().max(1));
            for (k, (p, pp)) in seq.parabolics.iter().enumerate() {
                let meet = p.roots().intersection(pp.roots());
                assert_eq!(
                    has_borel_oracle(&borels, &meet),
                    k + 1 == seq.terminal_index,
                    "{t}{n} {:?}",
                    w.word()
                );
            }
        }
    }
}

fn criterion_4() {
    for (t, n, order) in [(LieType::A, 3, 24), (LieType::C, 2, 8), (LieType::G, 2, 12)] {
        let d = rd(t, n);
        let ws = enumerate(&d).unwrap();
        assert_eq!(ws.len(), order);
        for w in ws {
            let tower = build_tower(&d, &NodeSet::all(n), &w).unwrap();
            assert_eq!(
                tower_dimension(&d, &tower).unwrap(),
                w.length() as i64,
                "{t}{n} {:?}",
                w.word()
            );
        }
    }
}

fn criterion_5() {
    let groups = [
        (LieType::A, 1),
        (LieType::A, 2),
        (LieType::A, 3),
        (LieType::B, 2),
        (LieType::B, 3),
        (LieType::C, 2),
        (LieType::C, 3),
        (LieType::G, 2),
    ];
    for (t, n) in groups {
        let d = rd(t, n);
        for w in enumerate(&d).unwrap() {
            let tower = build_tower(&d, &NodeSet::all(n), &w).unwrap();
            let r = demazure_refinement(&d, &tower).unwrap();
            assert_eq!(r.word.len(), w.length());
            assert_eq!(
                WeylElement::from_word(&d, &r.word).unwrap(),
                tower.base_word
            );
            assert!(r.regroups_to(&tower), "{t}{n} {:?}", w.word());
            let groups = r.regroup(&tower);
            assert_eq!(groups.len(), tower.factors.len());
        }
    }
}

fn criterion_6() {
    for (t, n, pairs) in [(LieType::A, 3, 49), (LieType::C, 2, 9)] {
        let d = rd(t, n);
        let mut count = 0;
        for p in subsets(n, true) {
            for pp in subsets(n, true) {
                let brute = brute_force_min_codim(&d, &p, &pp)
                    .unwrap()
                    .is_none_or(|c| c >= 2);
                assert_eq!(
                    complement_codim_ge2(&d, &p, &pp).unwrap(),
                    brute,
                    "{t}{n} {:?} {:?}",
                    p,
                    pp
                );
                count += 1;
            }
        }
        assert_eq!(count, pairs);
    }
}

fn criterion_7() {
    let d = rd(LieType::A, 3);
    let all = NodeSet::all(3);
    let mut gap = Vec::new();
    for w in enumerate(&d).unwrap() {
        let crit = smoothness_sufficient(&d, &all, &w).unwrap();
        let smooth = rationally_smooth(&d, &w);
        assert!(!crit || smooth, "criterion true on singular {:?}", w.word());
        if smooth && !crit {
            gap.push(w);
        }
    }
    assert!(!gap.is_empty());
}

fn criterion_8() {
    let d = rd(LieType::A, 4);
    let q = levi_quotient(&d, &NodeSet::from([1]), &NodeSet::from([1])).unwrap();
    let projective: Vec<_> = q
        .factors
        .iter()
        .filter(|f| f.is_projective_space())
        .collect();
    assert_eq!(projective.len(), 1);
    assert_eq!(projective[0].lie_type, LieType::A);
    assert_eq!(projective[0].rank, 2);
    assert_eq!(projective[0].flag_dimension(&d), 2);
    assert!(q
        .factors
        .iter()
        .all(|f| f.is_projective_space() || f.marked.is_empty()));
}

fn criterion_9() {
    for n in 1..=6 {
        let d = rd(LieType::A, n);
        let sigma = NodeSet::from([0]);
        let line = CurveClass::new(&sigma, &[1]).unwrap();
        assert_eq!(tangent_degree(&d, &sigma, &line).unwrap(), n as i64 + 1);
    }
    let a3 = rd(LieType::A, 3);
    let sigma = NodeSet::from([0]);
    for (deg, dim) in [(1, 4), (2, 8)] {
        let c = CurveClass::new(&sigma, &[deg]).unwrap();
        assert_eq!(hilbert_dimension(&a3, &sigma, &c).unwrap().dimension, dim);
    }
    let groups = [
        (LieType::A, 1),
        (LieType::A, 2),
        (LieType::A, 3),
        (LieType::A, 4),
        (LieType::C, 2),
        (LieType::G, 2),
    ];
    for (t, n) in groups {
        let d = rd(t, n);
        for sigma in subsets(n, true) {
            for degrees in degree_vectors(sigma.len(), 0, 3) {
                let c = CurveClass::new(&sigma, &degrees).unwrap();
                assert_eq!(
                    tangent_degree(&d, &sigma, &c).unwrap(),
                    tangent_degree_via_levi(&d, &sigma, &c).unwrap(),
                    "{t}{n} {:?} {:?}",
                    sigma,
                    degrees
                );
            }
        }
    }
}

// Genus of a smooth plane curve of degree d and of a (a, b) curve on P1 x P1.
fn plane_genus(d: i64) -> i64 {
    (d - 1) * (d - 2) / 2
}

fn criterion_10() {
    let p1 = rd(LieType::A, 1);
    let p2 = rd(LieType::A, 2);
    let one = NodeSet::from([0]);
    for d in 1..=5 {
        let c = CurveClass::new(&one, &[d]).unwrap();
        let v = decide_smooth_rational_curve(&p1, &one, &c).unwrap();
        assert!(v.mor_nonempty);
        assert_eq!(v.smooth_curve_exists, d == 1, "P1 degree {d}");
        assert_eq!(v.exception_hit, Some(Exception::P1));
        let v = decide_smooth_rational_curve(&p2, &one, &c).unwrap();
        assert_eq!(v.smooth_curve_exists, plane_genus(d) == 0, "P2 degree {d}");
        assert_eq!(v.exception_hit, Some(Exception::P2));
    }
    // Classes of degree 0 on the middle node of A3/B live on P1 x P1 fibers.
    let a3 = rd(LieType::A, 3);
    let all = NodeSet::all(3);
    for a in 1..=5 {
        for b in 1..=5 {
            let c = CurveClass::new(&all, &[a, 0, b]).unwrap();
            let v = decide_smooth_rational_curve(&a3, &all, &c).unwrap();
            assert!(v.mor_nonempty);
            assert_eq!(
                v.smooth_curve_exists,
                (a - 1) * (b - 1) == 0,
                "P1xP1 ({a},{b})"
            );
            assert_eq!(v.exception_hit, Some(Exception::P1xP1));
        }
    }
    for (d, sigma) in [
        (&a3, NodeSet::from([0])),
        (&a3, NodeSet::from([1])),
        (&p2, NodeSet::from([0, 1])),
    ] {
        for degrees in degree_vectors(sigma.len(), 1, 3) {
            let c = CurveClass::new(&sigma, &degrees).unwrap();
            let v = decide_smooth_rational_curve(d, &sigma, &c).unwrap();
            assert!(
                v.mor_nonempty && v.smooth_curve_exists,
                "{:?} {:?}",
                sigma,
                degrees
            );
        }
    }
}

fn criterion_11() {
    for n in 1..=4 {
        let d = rd(LieType::A, n);
        let tower = build_tower(&d, &NodeSet::all(n), &WeylElement::longest(&d)).unwrap();
        assert_eq!(tower.factors.len(), 1);
        assert_eq!(*tower.factors[0].roots(), RootSubset::all(&d));
    }
}

fn criterion_12() {
    let runs: [&[&str]; 3] = [
        &[
            "desing", "--type", "A", "--rank", "2", "--word", "1 2 1", "--format", "json",
        ],
        &[
            "codim", "--type", "A", "--rank", "3", "--p", "1", "--pprime", "1",
        ],
        &[
            "hilbert",
            "--type",
            "A",
            "--rank",
            "3",
            "--p",
            "1",
            "--degrees",
            "2",
        ],
    ];
    let exe = env!("CARGO_BIN_EXE_lie");
    let mut outputs = Vec::new();
    for args in runs {
        let first = Command::new(exe).args(args).output().unwrap();
        let second = Command::new(exe).args(args).output().unwrap();
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(first.stderr, second.stderr, "{args:?}");
        outputs.push(String::from_utf8(first.stdout).unwrap());
    }
    let desing: serde_json::Value = serde_json::from_str(&outputs[0]).unwrap();
    assert_eq!(desing["factors"].as_array().unwrap().len(), 1);
    assert_eq!(desing["dimension"], 3);
    assert_eq!(outputs[1], "true\n");
    assert_eq!(outputs[2], "8\n");
}

fn main() {
    let criteria: [(&str, fn(), u64); 12] = [
        ("root-system regeneration", criterion_1, 5),
        ("sum-closure test for parabolics over every Borel", criterion_2, 10),
        ("sequence chain invariants and termination", criterion_3, 30),
        ("tower dimension equals length", criterion_4, 0),
        ("Demazure refinement and regrouping", criterion_5, 0),
        ("codimension criterion against brute force", criterion_6, 0),
        ("smoothness criterion soundness in A3", criterion_7, 0),
        ("Levi quotient P2 factor in A4", criterion_8, 0),
        ("curve arithmetic", criterion_9, 0),
        ("smooth rational curve decision table", criterion_10, 0),
        ("longest element tower is one factor", criterion_11, 0),
        ("CLI determinism", criterion_12, 0),
    ];
    std::panic::set_hook(Box::new(|info| eprintln!("  {info}")));
    let mut failed = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f));
        let elapsed = start.elapsed();
        let over = *budget > 0 && elapsed > Duration::from_secs(*budget);
        let status = match (&result, over) {
            (Ok(()), false) => "PASS",
            (Ok(()), true) => "FAIL (over time budget)",
            (Err(_), _) => "FAIL",
        };
        if status != "PASS" {
            failed += 1;
        }
        println!("criterion {:>2} {name}: {status} [{:.2?}]", i + 1, elapsed);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
