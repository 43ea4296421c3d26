//! Engine results checked against deliberately naive reimplementations.

use std::collections::BTreeSet;

use gt_core::corpus::corpus;
use gt_core::perm::{alt_group, sym_group};
use gt_core::sylow::sylow_report;
use gt_core::{Error, Group};

/// Conjugacy classes straight from the definition: for each x, collect
/// a x a^-1 with the inverse found by scanning the table.
fn naive_classes(g: &Group) -> BTreeSet<BTreeSet<usize>> {
    let n = g.order();
    let inverse = |a: usize| (0..n).find(|&b| g.op(a, b) == 0).unwrap();
    let mut out = BTreeSet::new();
    for x in 0..n {
        let class: BTreeSet<usize> = (0..n).map(|a| g.op(g.op(a, x), inverse(a))).collect();
        if class.len() > 1 {
            out.insert(class);
        }
    }
    out
}

fn naive_associative(labels: &[String], table: &[usize]) -> bool {
    let n = labels.len();
    let op = |a: usize, b: usize| table[a * n + b];
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(a, op(b, c)))))
}

/// Every subset containing 0 that is closed under the operation.
fn naive_subgroups(g: &Group) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16, "subset search is exponential");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let closed = set
            .iter()
            .all(|&a| set.iter().all(|&b| mask >> g.op(a, b) & 1 == 1));
        if closed {
            out.insert(set);
        }
    }
    out
}

#[test]
fn classes_match_naive_oracle() {
    for ng in corpus().into_iter().filter(|g| g.group.order() <= 24) {
        let engine: BTreeSet<BTreeSet<usize>> = ng
            .group
            .conjugacy_classes()
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect();
        assert_eq!(engine, naive_classes(&ng.group), "{}", ng.name);
    }
}

#[test]
fn class_partition() {
    for ng in corpus() {
        let g = &ng.group;
        let mut all: Vec<usize> = g.central_elements();
        all.extend(g.conjugacy_classes().into_iter().flatten());
        all.sort_unstable();
        assert_eq!(all, g.elements().collect::<Vec<_>>(), "{}", ng.name);
    }
}

#[test]
fn associativity_check_agrees_with_triple_loop() {
    // A Latin square with identity row and column that is not associative:
    // the smallest non-group loop, of order 5.
    let table: Vec<usize> = vec![
        0, 1, 2, 3, 4, //
        1, 0, 3, 4, 2, //
        2, 4, 0, 1, 3, //
        3, 2, 4, 0, 1, //
        4, 3, 1, 2, 0,
    ];
    let labels: Vec<String> = (0..5).map(|i| i.to_string()).collect();
    assert!(!naive_associative(&labels, &table));
    assert!(matches!(Group::from_flat(labels, table), Err(Error::Associativity { .. })));

    for ng in corpus().into_iter().filter(|g| g.group.order() <= 30) {
        let g = &ng.group;
        assert!(naive_associative(g.labels(), g.flat_table()), "{}", ng.name);
    }
}

#[test]
fn corrupted_tables_are_rejected() {
    let g = gt_core::generators::dihedral_group(4);
    let n = g.order();
    // Swapping two entries of one row keeps it a permutation but breaks
    // either the Latin property of the columns or associativity.
    for row in 1..n {
        for (a, b) in [(1, 2), (3, 6), (0, 7)] {
            let mut table = g.flat_table().to_vec();
            table.swap(row * n + a, row * n + b);
            let valid = naive_associative(g.labels(), &table)
                && (0..n).all(|c| (0..n).map(|r| table[r * n + c]).collect::<BTreeSet<_>>().len() == n);
            let built = Group::from_flat(g.labels().to_vec(), table);
            assert_eq!(built.is_ok(), valid, "row {row} swap {a} {b}");
        }
    }
}

#[test]
fn subgroup_enumeration_matches_subset_search() {
    for ng in corpus().into_iter().filter(|g| g.group.order() <= 12) {
        let engine: BTreeSet<Vec<usize>> = ng
            .group
            .all_subgroups()
            .into_iter()
            .map(|s| s.elements().to_vec())
            .collect();
        assert_eq!(engine, naive_subgroups(&ng.group), "{}", ng.name);
    }
}

#[test]
fn sylow_counts_match_enumeration() {
    for ng in corpus().into_iter().filter(|g| g.group.order() <= 24 && g.group.order() > 1) {
        let g = &ng.group;
        let subgroups = g.all_subgroups();
        for (p, _) in gt_core::arith::factorize(g.order()) {
            let full = gt_core::arith::p_part(g.order(), p);
            let count = subgroups.iter().filter(|s| s.order() == full).count();
            let report = sylow_report(g, p).unwrap();
            assert_eq!(report.np, count, "{} p={p}", ng.name);
        }
    }
}

#[test]
fn alt5_has_six_sylow5_subgroups() {
    let a5 = alt_group(5).unwrap();
    let g = a5.group();
    // each subgroup of order 5 holds exactly four elements of order 5
    let order5 = g.elements().filter(|&x| g.element_order(x) == 5).count();
    assert_eq!(order5 / 4, 6);
    assert_eq!(sylow_report(g, 5).unwrap().np, 6);
}

#[test]
fn sym_tables_compose_permutations() {
    for n in 1..=4 {
        let s = sym_group(n).unwrap();
        let g = s.group();
        for a in g.elements() {
            for b in g.elements() {
                let direct: Vec<usize> = (0..n).map(|k| s.perm(a).apply(s.perm(b).apply(k))).collect();
                assert_eq!(s.perm(g.op(a, b)).images(), &direct[..]);
            }
        }
    }
}
