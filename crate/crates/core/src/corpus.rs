//! A fixed sample of small groups used by the classification sweep, the
//! test suites and the benchmarks. Every entry is named by an expression
//! the command-line tool can evaluate.

use crate::generators::{affine_group, cyclic_group, dihedral_group, direct_product, quaternion_group, semidirect_cyclic};
use crate::group::Group;
use crate::perm::{alt_group, sym_group};

#[derive(Debug, Clone)]
pub struct NamedGroup {
    pub name: String,
    pub group: Group,
}

impl NamedGroup {
    fn new(name: impl Into<String>, group: Group) -> Self {
        NamedGroup {
            name: name.into(),
            group,
        }
    }
}

fn sym(n: usize) -> Group {
    sym_group(n).expect("small degree").group().clone()
}

fn alt(n: usize) -> Group {
    alt_group(n).expect("small degree").group().clone()
}

/// Factors used to build direct products, by name.
fn factor(name: &str) -> Group {
    let (head, arg) = name.trim_end_matches(')').split_once('(').unwrap_or((name, ""));
    let n = || arg.parse::<usize>().expect("numeric argument");
    match head {
        "cyclic" => cyclic_group(n()),
        "dihedral" => dihedral_group(n()),
        "sym" => sym(n()),
        "alt" => alt(n()),
        _ => panic!("unknown factor {name}"),
    }
}

const PRODUCTS: &[(&str, &str)] = &[
    ("cyclic(2)", "cyclic(2)"),
    ("cyclic(2)", "cyclic(4)"),
    ("cyclic(2)", "cyclic(6)"),
    ("cyclic(3)", "cyclic(3)"),
    ("cyclic(2)", "sym(3)"),
    ("cyclic(2)", "cyclic(8)"),
    ("cyclic(4)", "cyclic(4)"),
    ("cyclic(2)", "dihedral(4)"),
    ("cyclic(3)", "sym(3)"),
    ("cyclic(2)", "dihedral(5)"),
    ("cyclic(2)", "alt(4)"),
    ("cyclic(3)", "dihedral(4)"),
    ("cyclic(4)", "sym(3)"),
    ("cyclic(5)", "cyclic(5)"),
    ("cyclic(3)", "cyclic(9)"),
    ("cyclic(2)", "dihedral(7)"),
    ("cyclic(5)", "sym(3)"),
    ("cyclic(3)", "dihedral(5)"),
    ("cyclic(6)", "cyclic(6)"),
    ("sym(3)", "sym(3)"),
    ("cyclic(3)", "alt(4)"),
    ("cyclic(4)", "dihedral(5)"),
    ("cyclic(2)", "dihedral(10)"),
    ("cyclic(7)", "sym(3)"),
    ("cyclic(3)", "dihedral(7)"),
    ("cyclic(2)", "dihedral(11)"),
    ("cyclic(3)", "cyclic(15)"),
    ("cyclic(2)", "sym(4)"),
    ("cyclic(4)", "alt(4)"),
    ("cyclic(7)", "cyclic(7)"),
    ("cyclic(5)", "dihedral(5)"),
    ("cyclic(2)", "dihedral(13)"),
    ("cyclic(9)", "sym(3)"),
    ("cyclic(3)", "dihedral(9)"),
    ("cyclic(2)", "dihedral(14)"),
];

/// Semidirect products `Z_n ⋊ Z_m` with twist `r`.
const SEMIDIRECT: &[(usize, usize, usize)] = &[
    (3, 4, 2),
    (7, 3, 2),
    (5, 4, 2),
    (13, 3, 3),
    (19, 3, 7),
    (11, 5, 3),
    (7, 6, 3),
    (3, 8, 2),
    (13, 4, 5),
];

/// Groups of order below 60: cyclic groups of every order, dihedral groups,
/// small symmetric and alternating groups, and a spread of products,
/// semidirect products and affine groups. Sorted by order, then name.
pub fn corpus_under_60() -> Vec<NamedGroup> {
    let mut out = Vec::new();
    for n in 1..60 {
        out.push(NamedGroup::new(format!("cyclic({n})"), cyclic_group(n)));
    }
    for n in 3..30 {
        out.push(NamedGroup::new(format!("dihedral({n})"), dihedral_group(n)));
    }
    for n in 1..=4 {
        out.push(NamedGroup::new(format!("sym({n})"), sym(n)));
    }
    for n in 2..=4 {
        out.push(NamedGroup::new(format!("alt({n})"), alt(n)));
    }
    out.push(NamedGroup::new("quaternion", quaternion_group()));
    for q in [4, 5, 7, 8] {
        out.push(NamedGroup::new(format!("affine({q})"), affine_group(q).expect("supported field")));
    }
    for &(n, m, r) in SEMIDIRECT {
        let g = semidirect_cyclic(n, m, r).expect("valid twist");
        out.push(NamedGroup::new(format!("semidirect({n},{m},{r})"), g));
    }
    for &(a, b) in PRODUCTS {
        out.push(NamedGroup::new(format!("prod({a},{b})"), direct_product(&factor(a), &factor(b))));
    }
    out.sort_by(|x, y| x.group.order().cmp(&y.group.order()).then_with(|| x.name.cmp(&y.name)));
    out
}

/// [`corpus_under_60`] plus `alt(5)` and `sym(5)`.
pub fn corpus() -> Vec<NamedGroup> {
    let mut out = corpus_under_60();
    out.push(NamedGroup::new("alt(5)", alt(5)));
    out.push(NamedGroup::new("sym(5)", sym(5)));
    out
}
