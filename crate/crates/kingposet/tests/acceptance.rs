//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! The `oracle` module is an independent brute-force path (naive
//! standardization, subset-enumeration containment, definitional membership)
//! kept deliberately separate from the library's algorithms.

use std::collections::BTreeSet;

use kingposet::kings::{self, KingClass};
use kingposet::metrics::{breadth, cyclic_breadth, cyclic_distance, cyclic_position_distance};
use kingposet::perm::Permutation;
use kingposet::poset;
use kingposet::prolific::{is_k_prolific, PermClass};

mod oracle {
    use itertools::Itertools;

    pub fn all_perms(n: usize) -> Vec<Vec<u32>> {
        (1..=n as u32).permutations(n).collect()
    }

    pub fn standardize(word: &[u32]) -> Vec<u32> {
        word.iter()
            .map(|v| word.iter().filter(|u| *u < v).count() as u32 + 1)
            .collect()
    }

    pub fn is_king(w: &[u32]) -> bool {
        !w.is_empty() && w.windows(2).all(|p| p[0].abs_diff(p[1]) > 1)
    }

    pub fn is_ck(w: &[u32]) -> bool {
        is_king(w) && (w.len() == 1 || w[0].abs_diff(w[w.len() - 1]) > 1)
    }

    /// Subset-enumeration containment check.
    pub fn contains(pattern: &[u32], sigma: &[u32]) -> bool {
        if pattern.len() > sigma.len() {
            return false;
        }
        (0..sigma.len())
            .combinations(pattern.len())
            .any(|idx| standardize(&idx.iter().map(|&i| sigma[i]).collect::<Vec<_>>()) == pattern)
    }
}

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn lib_perms(n: usize) -> Vec<Permutation> {
    oracle::all_perms(n)
        .into_iter()
        .map(|w| Permutation::from_word(w).unwrap())
        .collect()
}

#[test]
fn acceptance_01_exact_set_reproduction() {
    let ck5: BTreeSet<Permutation> = kings::enumerate(5, KingClass::Cylindrical)
        .into_iter()
        .collect();
    let listed: BTreeSet<Permutation> = [
        "[31425]", "[14253]", "[42531]", "[25314]", "[53142]", "[24135]", "[41352]", "[13524]",
        "[35241]", "[52413]",
    ]
    .iter()
    .map(|s| p(s))
    .collect();
    assert_eq!(ck5, listed);

    let k4: BTreeSet<Permutation> = kings::enumerate(4, KingClass::King).into_iter().collect();
    assert_eq!(k4, [p("[3142]"), p("[2413]")].into_iter().collect());

    for n in 2..=4 {
        assert!(kings::enumerate(n, KingClass::Cylindrical).is_empty());
    }
    for n in 2..=3 {
        assert!(kings::enumerate(n, KingClass::King).is_empty());
    }
    println!("PASS criterion 1: exact-set reproduction (CK_5, K_4, small empties)");
}

#[test]
fn acceptance_02_metric_fixtures() {
    assert_eq!(breadth(&p("[5371426]")).value, Some(3));
    assert_eq!(cyclic_breadth(&p("[724915836]")).value, Some(2));
    assert_eq!(cyclic_breadth(&p("[72415836]")).value, Some(2));
    assert_eq!(p("[72415836]").inverse(), p("[42735816]"));
    assert_eq!(cyclic_breadth(&p("[42735816]")).value, Some(3));

    let s = p("[724915836]");
    assert_eq!(cyclic_distance(&s, 1, 2).unwrap(), 6);
    assert_eq!(cyclic_distance(&s, 2, 5).unwrap(), 4);
    assert_eq!(cyclic_distance(&s, 1, 9).unwrap(), 2);

    assert_eq!(cyclic_position_distance(8, 2, 7).unwrap(), 3);
    assert_eq!(cyclic_distance(&p("[26415837]"), 2, 7).unwrap(), 6);
    println!("PASS criterion 2: metric fixtures reproduce exactly");
}

#[test]
fn acceptance_03_downset_fixture() {
    let g = poset::downset(&p("[5246173]")).unwrap();
    let nodes: BTreeSet<String> = g.nodes.iter().map(|n| n.to_string()).collect();
    let expect: BTreeSet<String> =
        ["[5246173]", "[524613]", "[524163]", "[52413]", "[41352]", "[1]"]
            .iter()
            .map(|s| s.to_string())
            .collect();
    assert_eq!(nodes, expect);
    assert_eq!(g.edges.len(), 8);
    let edges: BTreeSet<(String, String)> = g
        .edges
        .iter()
        .map(|(u, l)| (u.to_string(), l.to_string()))
        .collect();
    for (u, l) in [
        ("[5246173]", "[524613]"),
        ("[5246173]", "[524163]"),
        ("[524613]", "[52413]"),
        ("[524613]", "[41352]"),
        ("[524163]", "[52413]"),
        ("[524163]", "[41352]"),
        ("[52413]", "[1]"),
        ("[41352]", "[1]"),
    ] {
        assert!(edges.contains(&(u.to_string(), l.to_string())));
    }
    println!("PASS criterion 3: downset of [5246173] has the expected 6 nodes and 8 edges");
}

#[test]
fn acceptance_04_membership_metric_equivalence() {
    let mut checked = 0u64;
    for n in 1..=8 {
        for sigma in lib_perms(n) {
            let king_def = oracle::is_king(sigma.word());
            let ck_def = oracle::is_ck(sigma.word());
            assert_eq!(kings::is_king(&sigma), king_def);
            assert_eq!(kings::is_cylindrical_king(&sigma), ck_def);
            assert_eq!(king_def, breadth(&sigma).at_least(3), "sigma={sigma}");
            assert_eq!(ck_def, cyclic_breadth(&sigma).at_least(3), "sigma={sigma}");
            checked += 1;
        }
    }
    println!("PASS criterion 4: membership <-> metric equivalence on {checked} permutations");
}

#[test]
fn acceptance_05_single_deletion_lemma() {
    let mut checked = 0u64;
    for n in 2..=7 {
        for sigma in lib_perms(n) {
            if let Some(v) = cyclic_breadth(&sigma).value {
                for a in 1..=n as u32 {
                    let child = cyclic_breadth(&sigma.delete_value(a).unwrap());
                    assert!(child.at_least(v - 1), "sigma={sigma} a={a}");
                    checked += 1;
                }
            }
        }
    }
    // Deletion may also increase cbr.
    let s = p("[351246]");
    assert_eq!(cyclic_breadth(&s).value, Some(2));
    let d = s.delete_value(1).unwrap();
    assert_eq!(d, p("[24135]"));
    assert_eq!(cyclic_breadth(&d).value, Some(3));
    println!("PASS criterion 5: single-deletion lemma on {checked} deletions plus increase regression");
}

#[test]
fn acceptance_06_children_criterion() {
    let mut checked = 0u64;
    for n in 2..=8 {
        for sigma in kings::enumerate(n, KingClass::Cylindrical) {
            let children = kings::ck_children(&sigma).unwrap();
            let wide = cyclic_breadth(&sigma).at_least(4);
            assert_eq!(children.len() == n, wide, "sigma={sigma}");
            checked += 1;
        }
    }
    println!("PASS criterion 6: |ck_children| = n <-> cbr > 3 on {checked} cylindrical kings");
}

#[test]
fn acceptance_07_prolific_theorems() {
    let mut checked = 0u64;
    for n in 4..=8 {
        for class in [KingClass::King, KingClass::Cylindrical] {
            let perm_class = match class {
                KingClass::King => PermClass::King,
                KingClass::Cylindrical => PermClass::Cylindrical,
            };
            for sigma in kings::enumerate(n, class) {
                let report = match class {
                    KingClass::King => breadth(&sigma),
                    KingClass::Cylindrical => cyclic_breadth(&sigma),
                };
                for k in 1..=3.min(n - 1) {
                    let verdict = is_k_prolific(&sigma, k, perm_class).unwrap().verdict;
                    assert_eq!(verdict, report.at_least(k as u32 + 3), "sigma={sigma} k={k}");
                    checked += 1;
                }
            }
        }
    }
    // PLAIN baseline: k-prolific in S_n iff br >= k+2.
    for n in 2..=7 {
        for sigma in lib_perms(n) {
            for k in 1..=2.min(n - 1) {
                let verdict = is_k_prolific(&sigma, k, PermClass::Plain).unwrap().verdict;
                assert_eq!(verdict, breadth(&sigma).at_least(k as u32 + 2), "sigma={sigma} k={k}");
                checked += 1;
            }
        }
    }
    println!("PASS criterion 7: prolific criteria match the definitional oracle on {checked} cases");
}

#[test]
fn acceptance_08_building_block_theorem() {
    let report = poset::verify_building_blocks(8).unwrap();
    assert!(!report.has_violations());
    let checked: u64 = report.ranks.iter().map(|r| r.checked).sum();
    assert_eq!(checked, 10 + 60 + 462 + 3920);
    println!("PASS criterion 8: building-block theorem verified on {checked} cylindrical kings");
}

#[test]
fn acceptance_09_gap_theorem() {
    let report = poset::verify_gap_theorem(8).unwrap();
    assert!(!report.has_violations());
    // Frozen census: every qualifying pair resolves at gap 1 except 32 pairs
    // at n = 8 that need gap 3; none needs gap 4 at this scale.
    assert_eq!(
        report.ranks.iter().map(|r| r.checked).collect::<Vec<_>>(),
        [60, 462, 3920]
    );
    assert!(report.gap4_extremal.is_empty());
    assert!(report.diff5_violations.is_empty());

    // Known extremal pairs: no intermediate at any rank between.
    let w = poset::find_intermediate(&p("[18463527]"), &p("[635241]"), 8).unwrap();
    assert!(w.tau.is_none());
    let w = poset::find_intermediate(&p("[579683142]"), &p("[13524]"), 8).unwrap();
    assert!(w.tau.is_none());
    println!("PASS criterion 9: gap theorem verified to n=8; both counterexamples reproduce");
}

#[test]
fn acceptance_10_deletion_observation() {
    let report = poset::verify_deletion_observation(7).unwrap();
    assert!(!report.has_violations());

    // Fixtures on sigma = [264159837].
    let sigma = p("[264159837]");
    let pi = p("[241635]");
    assert_eq!(sigma.delete_value(5).unwrap(), p("[25418736]"));
    assert!(sigma.delete_value(5).unwrap().contains(&pi));
    assert!(sigma.delete_value(4).unwrap().contains(&pi));
    assert!(sigma.delete_value(6).unwrap().contains(&pi));

    let pi = p("[253146]");
    assert_eq!(sigma.delete_value(7).unwrap(), p("[26415873]"));
    assert!(sigma.delete_value(7).unwrap().contains(&pi));
    assert!(sigma.delete_value(3).unwrap().contains(&pi));
    assert!(!sigma.delete_value(2).unwrap().contains(&pi));

    let checked: u64 = report.ranks.iter().map(|r| r.checked).sum();
    println!("PASS criterion 10: deletion observation verified ({checked} checks) with fixtures");
}

#[test]
fn acceptance_11_oracle_equivalence() {
    // Enumeration vs. the filter-all-of-S_n oracle.
    for n in 1..=8 {
        for (class, member) in [
            (KingClass::King, oracle::is_king as fn(&[u32]) -> bool),
            (KingClass::Cylindrical, oracle::is_ck as fn(&[u32]) -> bool),
        ] {
            let brute: Vec<Vec<u32>> = oracle::all_perms(n)
                .into_iter()
                .filter(|w| member(w))
                .collect();
            let fast: Vec<Vec<u32>> = kings::enumerate(n, class)
                .iter()
                .map(|p| p.word().to_vec())
                .collect();
            assert_eq!(fast, brute, "n={n}");
        }
    }

    // Downset top-down vs. bottom-up filter for all sigma in CK_n, n <= 7.
    let mut ck_by_rank: Vec<Vec<Vec<u32>>> = Vec::new();
    for m in 0..=7 {
        ck_by_rank.push(
            oracle::all_perms(m)
                .into_iter()
                .filter(|w| oracle::is_ck(w))
                .collect(),
        );
    }
    for n in 1..=7 {
        for sigma in kings::enumerate(n, KingClass::Cylindrical) {
            let top_down: BTreeSet<Vec<u32>> = poset::downset(&sigma)
                .unwrap()
                .nodes
                .iter()
                .map(|p| p.word().to_vec())
                .collect();
            let mut bottom_up: BTreeSet<Vec<u32>> = BTreeSet::new();
            for m in 1..=n {
                for w in &ck_by_rank[m] {
                    if oracle::contains(w, sigma.word()) {
                        bottom_up.insert(w.clone());
                    }
                }
            }
            assert_eq!(top_down, bottom_up, "sigma={sigma}");
        }
    }
    println!("PASS criterion 11: enumeration and downsets match the brute-force oracles");
}
