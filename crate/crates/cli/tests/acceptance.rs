//! The acceptance suite: thirteen numbered criteria, each printed as one
//! PASS/FAIL line with its running time. Run with
//! `cargo test -p gt-cli --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use gt_core::action::{conj_sub_action, conjugacy_action, lcoset_action, self_action};
use gt_core::arith::{factorial, factorize, is_prime, least_prime_divisor};
use gt_core::corpus::{corpus, corpus_under_60, NamedGroup};
use gt_core::perm::{alt_group, compose_all, sym_group};
use gt_core::simple::{check_alt5_simple, is_proper_normal, normal_order_candidates, normal_subgroup};
use gt_core::sylow::{find_supergroup, p_subgroups, sylow_conjugates, sylow_report, sylow_subgroup};
use gt_core::{Group, GroupAction, Perm, Subgroup};

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn(),
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "symmetric and alternating group orders", limit: Some(Duration::from_secs(5)), run: orders },
    Criterion { id: 2, name: "parity laws", limit: None, run: parity },
    Criterion { id: 3, name: "transposition decomposition in sym(5)", limit: None, run: decomposition },
    Criterion { id: 4, name: "orbit-stabilizer over all test actions", limit: None, run: orbit_stabilizer },
    Criterion { id: 5, name: "sylow battery", limit: Some(Duration::from_secs(60)), run: sylow_battery },
    Criterion { id: 6, name: "p-subgroups lie in sylow conjugates", limit: None, run: sylow_containment },
    Criterion { id: 7, name: "alt(5) is simple", limit: Some(Duration::from_secs(5)), run: alt5_simple },
    Criterion { id: 8, name: "alt(4) normal witness", limit: None, run: alt4_witness },
    Criterion { id: 9, name: "composite orders below 60 are not simple", limit: Some(Duration::from_secs(120)), run: sweep },
    Criterion { id: 10, name: "cayley embedding", limit: None, run: cayley },
    Criterion { id: 11, name: "index equal to the least prime divisor is normal", limit: None, run: least_index },
    Criterion { id: 12, name: "conjugacy classes match the naive oracle", limit: None, run: classes_oracle },
    Criterion { id: 13, name: "command line examples and file round-trip", limit: None, run: cli },
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run));
        let elapsed = start.elapsed();
        let verdict = match (&outcome, c.limit) {
            (Err(_), _) => "FAIL",
            (Ok(()), Some(limit)) if elapsed > limit => "FAIL (too slow)",
            _ => "PASS",
        };
        let limit = c.limit.map(|l| format!(", limit {}s", l.as_secs())).unwrap_or_default();
        println!("{verdict:<4} {:>2} {} ({:.3}s{limit})", c.id, c.name, elapsed.as_secs_f64());
        if verdict != "PASS" {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

fn orders() {
    for n in 1..=6 {
        let s = sym_group(n).unwrap();
        assert_eq!(s.group().order(), factorial(n));
        if n <= 4 {
            s.group().validate().unwrap();
        } else {
            spot_validate(s.group(), 2000);
        }
    }
    for n in 2..=6 {
        let a = alt_group(n).unwrap();
        assert_eq!(a.order(), factorial(n) / 2);
        if n <= 4 {
            a.group().validate().unwrap();
        } else {
            spot_validate(a.group(), 2000);
        }
    }
}

/// Checks associativity and inverses on random triples.
fn spot_validate(g: &Group, samples: usize) {
    let mut rng = StdRng::seed_from_u64(g.order() as u64);
    let n = g.order();
    for _ in 0..samples {
        let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        assert_eq!(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
        assert_eq!(g.op(a, g.inv(a)), 0);
        assert_eq!(g.op(0, a), a);
    }
}

fn check_parity_laws(x: &Perm, y: &Perm) {
    let xy = x.compose(y).unwrap();
    assert_eq!(xy.parity(), (x.parity() + y.parity()) % 2);
    assert_eq!(x.inverse().parity(), x.parity());
    assert_eq!(x.conjugate(y).unwrap().parity(), x.parity());
}

fn parity() {
    let s4 = sym_group(4).unwrap();
    let perms = s4.perms();
    for x in perms {
        for y in perms {
            check_parity_laws(x, y);
            for z in perms {
                let xyz = x.compose(y).unwrap().compose(z).unwrap();
                assert_eq!(xyz.parity(), (x.parity() + y.parity() + z.parity()) % 2);
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(6);
    let mut random_perm = || {
        let mut v: Vec<usize> = (0..6).collect();
        v.shuffle(&mut rng);
        Perm::new(v).unwrap()
    };
    for _ in 0..10_000 {
        let (x, y) = (random_perm(), random_perm());
        check_parity_laws(&x, &y);
    }
}

fn decomposition() {
    let s5 = sym_group(5).unwrap();
    assert_eq!(s5.perms().len(), 120);
    for p in s5.perms() {
        let factors = p.trans_list();
        assert!(factors.iter().all(Perm::is_transposition));
        assert_eq!(&compose_all(&factors, 5).unwrap(), p);
        assert_eq!(p.parity() as usize, factors.len() % 2);
    }
}

fn small(max: usize) -> impl Iterator<Item = NamedGroup> {
    corpus().into_iter().filter(move |g| g.group.order() <= max)
}

/// All subgroups of small groups; trivial, center, Sylow and cyclic subgroups otherwise.
fn test_subgroups(g: &Group) -> Vec<Subgroup> {
    if g.order() <= 24 {
        return g.all_subgroups();
    }
    let mut out = vec![g.trivial_subgroup(), g.center()];
    for (p, _) in factorize(g.order()) {
        out.push(sylow_subgroup(g, p).unwrap());
    }
    for x in g.elements() {
        let c = g.cyclic_subgroup(x).unwrap();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn check_orbit_stabilizer<D: Clone + Eq + std::hash::Hash + std::fmt::Debug>(a: &GroupAction<D>) {
    let n = a.group().order();
    let mut seen = vec![false; a.degree()];
    for orbit in a.orbits() {
        for &s in &orbit {
            assert!(!seen[s]);
            seen[s] = true;
            assert_eq!(a.stabilizer_of_index(s).order() * orbit.len(), n);
        }
    }
    assert!(seen.into_iter().all(|s| s));
}

fn orbit_stabilizer() {
    for ng in small(60) {
        let g = &ng.group;
        let conj = conjugacy_action(g);
        check_orbit_stabilizer(&conj);
        check_orbit_stabilizer(&self_action(g));
        for h in test_subgroups(g) {
            check_orbit_stabilizer(&lcoset_action(&h));
            check_orbit_stabilizer(&conj_sub_action(&h));
            check_orbit_stabilizer(&conj.subaction(&h).unwrap());
        }
    }
}

fn sylow_battery() {
    let wanted = |ng: &NamedGroup| {
        let name = ng.name.as_str();
        matches!(name, "sym(3)" | "sym(4)" | "alt(4)" | "alt(5)")
            || name.starts_with("cyclic(")
            || name.starts_with("prod(")
            || name
                .strip_prefix("dihedral(")
                .and_then(|r| r.trim_end_matches(')').parse::<usize>().ok())
                .is_some_and(|k| (3..=15).contains(&k))
    };
    let groups: Vec<NamedGroup> = corpus().into_iter().filter(wanted).collect();
    assert!(groups.iter().filter(|g| g.name.starts_with("cyclic(")).count() >= 58);
    assert!(groups.iter().filter(|g| g.name.starts_with("dihedral(")).count() == 13);
    for ng in groups {
        let g = &ng.group;
        for (p, _) in factorize(g.order()) {
            let r = sylow_report(g, p).unwrap_or_else(|e| panic!("{} p={p}: {e}", ng.name));
            assert_eq!(r.np % p, 1, "{}", ng.name);
            assert_eq!(r.index % r.np, 0, "{}", ng.name);
            assert_ne!(r.index % p, 0, "{}", ng.name);
            assert_ne!(r.nindex % p, 0, "{}", ng.name);
        }
    }
}

fn sylow_containment() {
    for ng in small(24) {
        let g = &ng.group;
        for (p, _) in factorize(g.order()) {
            let conjs = sylow_conjugates(g, p).unwrap();
            let brute: Vec<Subgroup> = g
                .all_subgroups()
                .into_iter()
                .filter(|h| gt_core::arith::is_power_of(h.order(), p))
                .collect();
            assert_eq!(brute.len(), p_subgroups(g, p).len(), "{}", ng.name);
            for h in &brute {
                assert!(find_supergroup(h, &conjs).is_some(), "{} p={p}", ng.name);
            }
        }
    }
}

fn alt5_simple() {
    let verdict = check_alt5_simple().unwrap();
    assert!(verdict.simple);
    let a5 = alt_group(5).unwrap();
    let g = a5.group();
    let mut lens: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
    lens.sort_unstable();
    assert_eq!(lens, vec![12, 12, 15, 20]);
    assert_eq!(g.center().order(), 1);
    assert!(normal_order_candidates(g).unwrap().is_empty());
    assert!(gt_core::simple::simplicity(g).unwrap().simple);
}

fn alt4_witness() {
    let s4 = sym_group(4).unwrap();
    let a4 = alt_group(4).unwrap();
    let w = normal_subgroup(a4.group()).unwrap();
    let found: BTreeSet<Vec<usize>> = w
        .elements()
        .iter()
        .map(|&i| s4.perm(a4.elements()[i]).images().to_vec())
        .collect();
    let expected: BTreeSet<Vec<usize>> =
        [vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]].into_iter().collect();
    assert_eq!(found, expected);
}

fn sweep() {
    let groups = corpus_under_60();
    for n in (4..60).filter(|&n| !is_prime(n)) {
        let of_order: Vec<&NamedGroup> = groups.iter().filter(|g| g.group.order() == n).collect();
        assert!(of_order.iter().any(|g| g.name == format!("cyclic({n})")), "no cyclic group of order {n}");
        if n % 2 == 0 && n >= 6 {
            assert!(of_order.iter().any(|g| g.name == format!("dihedral({})", n / 2)), "no dihedral group of order {n}");
        }
        for ng in of_order {
            let h = normal_subgroup(&ng.group).unwrap_or_else(|e| panic!("{}: {e}", ng.name));
            assert!(is_proper_normal(&h), "{}", ng.name);
        }
    }
}

fn cayley() {
    for ng in small(120) {
        let m = self_action(&ng.group).act_sym();
        assert!(m.is_homomorphism(), "{}", ng.name);
        let images: BTreeSet<&Perm> = m.image().iter().collect();
        assert_eq!(images.len(), ng.group.order(), "{}", ng.name);
        assert!(m.is_endomorphism(), "{}", ng.name);
    }
}

fn least_index() {
    for ng in small(120) {
        let g = &ng.group;
        let Some(p) = least_prime_divisor(g.order()) else { continue };
        for h in test_subgroups(g) {
            if h.index() == p {
                assert!(h.is_normal(), "{}", ng.name);
            }
        }
    }
    let a5 = alt_group(5).unwrap();
    assert_eq!(a5.index(), 2);
    assert!(a5.is_normal());
}

fn naive_classes(g: &Group) -> BTreeSet<BTreeSet<usize>> {
    let n = g.order();
    let inverse = |a: usize| (0..n).find(|&b| g.op(a, b) == 0).unwrap();
    (0..n)
        .map(|x| (0..n).map(|a| g.op(g.op(a, x), inverse(a))).collect::<BTreeSet<usize>>())
        .filter(|c| c.len() > 1)
        .collect()
}

fn classes_oracle() {
    for ng in small(24) {
        let engine: BTreeSet<BTreeSet<usize>> = ng
            .group
            .conjugacy_classes()
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect();
        assert_eq!(engine, naive_classes(&ng.group), "{}", ng.name);
    }
    let a5 = alt_group(5).unwrap();
    let g = a5.group().clone();
    let start = Instant::now();
    let classes = g.conjugacy_classes();
    assert!(start.elapsed() < Duration::from_secs(1));
    assert_eq!(classes.len(), 4);
}

fn cli() {
    let dir = tempfile::tempdir().unwrap();
    let gt = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_gt"))
            .current_dir(dir.path())
            .env_remove("GT_MAX_ORDER")
            .args(args)
            .output()
            .unwrap()
    };

    let o = gt(&["eval", "order(sym(4))"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout), "24\n");

    assert_eq!(gt(&["eval", "save(cyclic(30), z30.grp)"]).status.code(), Some(0));
    let o = gt(&["eval", "normalsub(load(z30.grp))"]);
    assert_eq!(o.status.code(), Some(0));
    let out = String::from_utf8_lossy(&o.stdout).into_owned();
    let k: usize = out.split("order=").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap();
    assert!(k > 1 && k < 30 && 30 % k == 0, "{out}");

    let o = gt(&["eval", "normalsub(cyclic(7))"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("prime order has no proper normal subgroup"));

    for src in ["z30.grp", "alt(4)", "prod(cyclic(3), dihedral(4))"] {
        let expr = if src.ends_with(".grp") { format!("load({src})") } else { src.to_string() };
        assert_eq!(gt(&["eval", &format!("save({expr}, a.grp)")]).status.code(), Some(0));
        assert_eq!(gt(&["eval", "save(load(a.grp), b.grp)"]).status.code(), Some(0));
        let a = std::fs::read(dir.path().join("a.grp")).unwrap();
        let b = std::fs::read(dir.path().join("b.grp")).unwrap();
        assert_eq!(a, b, "{src}");
    }
}
