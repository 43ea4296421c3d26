//! Simplicity tests and explicit proper normal subgroups.
//!
//! Two tools live here. The class-sum test uses the fact that a normal
//! subgroup is a union of conjugacy classes containing the identity, so its
//! order is `1 +` a sum of class sizes. The `normal_subgroup*` family builds
//! a proper normal subgroup for every group of composite order below 60,
//! mostly from Sylow subgroups; every result is re-checked before returning.

use std::collections::BTreeSet;
use std::fmt;

use crate::action::{conj_sub_action, conjs_sub};
use crate::arith::{factorize, is_prime, least_prime_divisor};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::alt_group;
use crate::subgroup::Subgroup;
use crate::sylow::sylow_subgroup;

/// Which construction produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClassSums,
    PrimeOrder,
    Center,
    PrimePower,
    Pq,
    Ppq,
    Case24,
    Case30,
    Case36,
    Case40,
    Case42,
    Case48,
    Case54,
    Case56,
    Explicit,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::ClassSums => "class-sums",
            Method::PrimeOrder => "prime-order",
            Method::Center => "center",
            Method::PrimePower => "prime-power",
            Method::Pq => "pq",
            Method::Ppq => "ppq",
            Method::Case24 => "case-24",
            Method::Case30 => "case-30",
            Method::Case36 => "case-36",
            Method::Case40 => "case-40",
            Method::Case42 => "case-42",
            Method::Case48 => "case-48",
            Method::Case54 => "case-54",
            Method::Case56 => "case-56",
            Method::Explicit => "explicit",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone)]
pub struct SimplicityVerdict {
    pub simple: bool,
    /// A proper normal subgroup, present exactly when `simple` is false.
    pub witness: Option<Subgroup>,
    pub method: Method,
}

impl SimplicityVerdict {
    fn simple(method: Method) -> Self {
        SimplicityVerdict {
            simple: true,
            witness: None,
            method,
        }
    }

    fn witnessed(witness: Subgroup, method: Method) -> Self {
        SimplicityVerdict {
            simple: false,
            witness: Some(witness),
            method,
        }
    }
}

/// Normal, nontrivial, and not the whole group.
pub fn is_proper_normal(h: &Subgroup) -> bool {
    h.is_normal() && h.order() > 1 && h.order() < h.parent().order()
}

fn verified(h: Subgroup, method: Method) -> Result<Subgroup> {
    if !is_proper_normal(&h) {
        return Err(Error::TheoremViolation(format!(
            "{method} produced a subgroup of order {} that is not proper normal in a group of order {}",
            h.order(),
            h.parent().order()
        )));
    }
    Ok(h)
}

fn class_sizes(g: &Group) -> Vec<usize> {
    g.conjugacy_classes().iter().map(Vec::len).collect()
}

/// Orders `1 + s` (with `s` a sum of distinct non-central class sizes) that
/// properly divide `|g|`. Only meaningful when the center is trivial.
pub fn normal_order_candidates(g: &Group) -> Result<BTreeSet<usize>> {
    if g.center().order() != 1 {
        return Err(Error::NontrivialCenter);
    }
    let n = g.order();
    // reachable[s]: some set of classes has total size s
    let mut reachable = vec![false; n];
    reachable[0] = true;
    for size in class_sizes(g) {
        for s in (size..n).rev() {
            if reachable[s - size] {
                reachable[s] = true;
            }
        }
    }
    Ok((2..n).filter(|&d| n.is_multiple_of(d) && reachable[d - 1]).collect())
}

/// Looks for a union of conjugacy classes of total size `target` which,
/// together with the identity, is closed.
fn realize(g: &Group, classes: &[Vec<usize>], target: usize) -> Option<Subgroup> {
    fn go(g: &Group, classes: &[Vec<usize>], start: usize, left: usize, chosen: &mut Vec<usize>) -> Option<Subgroup> {
        if left == 0 {
            let members = std::iter::once(0).chain(chosen.iter().flat_map(|&c| classes[c].iter().copied()));
            return Subgroup::new(g, members).ok();
        }
        for c in start..classes.len() {
            if classes[c].len() <= left {
                chosen.push(c);
                if let Some(h) = go(g, classes, c + 1, left - classes[c].len(), chosen) {
                    return Some(h);
                }
                chosen.pop();
            }
        }
        None
    }
    go(g, classes, 0, target, &mut Vec::new())
}

/// Decides simplicity of a group with trivial center from its class sizes:
/// each candidate order is either realized by an actual normal subgroup or
/// ruled out. Exact, since every normal subgroup is a union of classes.
pub fn class_sum_verdict(g: &Group) -> Result<SimplicityVerdict> {
    let candidates = normal_order_candidates(g)?;
    let classes = g.conjugacy_classes();
    for d in candidates {
        if let Some(h) = realize(g, &classes, d - 1) {
            return Ok(SimplicityVerdict::witnessed(verified(h, Method::ClassSums)?, Method::ClassSums));
        }
    }
    Ok(SimplicityVerdict::simple(Method::ClassSums))
}

/// `alt(5)` is simple: trivial center, class sizes {20, 12, 12, 15}, and no
/// sum of them plus one properly divides 60.
pub fn check_alt5_simple() -> Result<SimplicityVerdict> {
    let a5 = alt_group(5)?;
    let g = a5.group();
    let violation = |what: String| Err(Error::TheoremViolation(format!("alt(5): {what}")));
    if g.order() != 60 {
        return violation(format!("order {}", g.order()));
    }
    if g.center().order() != 1 {
        return violation("nontrivial center".into());
    }
    let mut sizes = class_sizes(g);
    sizes.sort_unstable();
    if sizes != [12, 12, 15, 20] {
        return violation(format!("class sizes {sizes:?}"));
    }
    let candidates = normal_order_candidates(g)?;
    if !candidates.is_empty() {
        return violation(format!("candidate orders {candidates:?}"));
    }
    Ok(SimplicityVerdict::simple(Method::ClassSums))
}

/// `|g| = p^k` with `k > 1`: the center if it is proper, else (abelian case)
/// the cyclic subgroup of the least element of order `p`.
pub fn normal_subgroup_prime_power(p: usize, k: u32, g: &Group) -> Result<Subgroup> {
    if !is_prime(p) || k < 2 || Some(g.order()) != p.checked_pow(k) {
        return Err(Error::Precondition(format!("order {} is not {p}^{k} with k > 1", g.order())));
    }
    let z = g.center();
    let h = if z.order() < g.order() {
        z
    } else {
        let x = g.elt_of_ord(p).ok_or(Error::NoElementOfOrder { order: p })?;
        g.cyclic_subgroup(x)?
    };
    verified(h, Method::PrimePower)
}

/// `|g| = p q` with primes `p < q`: the Sylow q-subgroup.
pub fn normal_subgroup_pq(p: usize, q: usize, g: &Group) -> Result<Subgroup> {
    if !(is_prime(p) && is_prime(q) && p < q && g.order() == p * q) {
        return Err(Error::Precondition(format!("order {} is not {p}*{q}", g.order())));
    }
    verified(sylow_subgroup(g, q)?, Method::Pq)
}

/// `|g| = p^2 q`: the Sylow p-subgroup if normal, else the Sylow q-subgroup.
pub fn normal_subgroup_ppq(p: usize, q: usize, g: &Group) -> Result<Subgroup> {
    if !(is_prime(p) && is_prime(q) && p != q && g.order() == p * p * q) {
        return Err(Error::Precondition(format!("order {} is not {p}^2*{q}", g.order())));
    }
    let sp = sylow_subgroup(g, p)?;
    if sp.is_normal() {
        return verified(sp, Method::Ppq);
    }
    verified(sylow_subgroup(g, q)?, Method::Ppq)
}

fn require_order(g: &Group, n: usize) -> Result<()> {
    if g.order() != n {
        return Err(Error::Precondition(format!("expected order {n}, found {}", g.order())));
    }
    Ok(())
}

/// Sylow 2-subgroup if normal; otherwise two distinct conjugates meet in a
/// subgroup of half their order whose normalizer is everything.
fn sylow2_or_intersection(g: &Group, method: Method) -> Result<Subgroup> {
    let s2 = sylow_subgroup(g, 2)?;
    if s2.is_normal() {
        return verified(s2, method);
    }
    let conjs = conjs_sub(&s2);
    verified(conjs[0].intersection(&conjs[1])?, method)
}

/// Order 24.
pub fn normal_subgroup_24(g: &Group) -> Result<Subgroup> {
    require_order(g, 24)?;
    sylow2_or_intersection(g, Method::Case24)
}

/// The first normal Sylow subgroup among `primes`, tried in order.
fn first_normal_sylow(g: &Group, primes: &[usize], method: Method) -> Result<Subgroup> {
    for &p in primes {
        let s = sylow_subgroup(g, p)?;
        if s.is_normal() {
            return verified(s, method);
        }
    }
    Err(Error::TheoremViolation(format!(
        "{method}: no normal Sylow subgroup for primes {primes:?}"
    )))
}

/// Orders 30, 36, 40, 42, 48, 54 and 56.
pub fn normal_subgroup_special(n: usize, g: &Group) -> Result<Subgroup> {
    require_order(g, n)?;
    match n {
        30 => first_normal_sylow(g, &[3, 5], Method::Case30),
        36 => {
            let s3 = sylow_subgroup(g, 3)?;
            if s3.is_normal() {
                return verified(s3, Method::Case36);
            }
            // four conjugates: g maps to sym(4), which is too small to be injective
            let kernel = conj_sub_action(&s3).act_sym().kernel()?;
            verified(kernel, Method::Case36)
        }
        40 => verified(sylow_subgroup(g, 5)?, Method::Case40),
        42 => verified(sylow_subgroup(g, 7)?, Method::Case42),
        48 => sylow2_or_intersection(g, Method::Case48),
        54 => verified(sylow_subgroup(g, 3)?, Method::Case54),
        56 => first_normal_sylow(g, &[7, 2], Method::Case56),
        _ => Err(Error::Precondition(format!("no special case for order {n}"))),
    }
}

/// A proper normal subgroup of `g` for composite `|g| < 60`, with the
/// construction used.
pub fn normal_subgroup_with_method(g: &Group) -> Result<(Subgroup, Method)> {
    let n = g.order();
    if !(2..60).contains(&n) {
        return Err(Error::OrderOutOfRange(n));
    }
    if is_prime(n) {
        return Err(Error::PrimeOrder(n));
    }
    let special = match n {
        24 => Some(Method::Case24),
        30 => Some(Method::Case30),
        36 => Some(Method::Case36),
        40 => Some(Method::Case40),
        42 => Some(Method::Case42),
        48 => Some(Method::Case48),
        54 => Some(Method::Case54),
        56 => Some(Method::Case56),
        _ => None,
    };
    if let Some(method) = special {
        let h = if n == 24 {
            normal_subgroup_24(g)?
        } else {
            normal_subgroup_special(n, g)?
        };
        return Ok((h, method));
    }
    match factorize(n).as_slice() {
        &[(p, k)] => Ok((normal_subgroup_prime_power(p, k, g)?, Method::PrimePower)),
        &[(p, 1), (q, 1)] => Ok((normal_subgroup_pq(p, q, g)?, Method::Pq)),
        &[(p, 2), (q, 1)] | &[(q, 1), (p, 2)] => Ok((normal_subgroup_ppq(p, q, g)?, Method::Ppq)),
        _ => Err(Error::OrderOutOfRange(n)),
    }
}

/// A proper normal subgroup of `g` for composite `|g| < 60`.
pub fn normal_subgroup(g: &Group) -> Result<Subgroup> {
    normal_subgroup_with_method(g).map(|(h, _)| h)
}

/// Simplicity of an arbitrary nontrivial group, combining the methods above:
/// prime orders are simple, composite orders below 60 get an explicit
/// witness, and larger groups use the center or the class-sum test.
pub fn simplicity(g: &Group) -> Result<SimplicityVerdict> {
    let n = g.order();
    if n == 1 {
        return Err(Error::Precondition("the trivial group is not simple by convention".into()));
    }
    if is_prime(n) {
        return Ok(SimplicityVerdict::simple(Method::PrimeOrder));
    }
    if n < 60 {
        let (h, method) = normal_subgroup_with_method(g)?;
        return Ok(SimplicityVerdict::witnessed(h, method));
    }
    let z = g.center();
    if z.order() > 1 && z.order() < n {
        return Ok(SimplicityVerdict::witnessed(verified(z, Method::Center)?, Method::Center));
    }
    if z.order() == n {
        let p = least_prime_divisor(n).expect("n > 1");
        let x = g.elt_of_ord(p).ok_or(Error::NoElementOfOrder { order: p })?;
        let h = verified(g.cyclic_subgroup(x)?, Method::Explicit)?;
        return Ok(SimplicityVerdict::witnessed(h, Method::Explicit));
    }
    class_sum_verdict(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cyclic_group, dihedral_group, direct_product};
    use crate::perm::sym_group;

    #[test]
    fn proper_normal_examples() {
        let a3 = alt_group(3).unwrap();
        assert!(is_proper_normal(&a3));
        assert!(!is_proper_normal(&a3.parent().trivial_subgroup()));
    }

    #[test]
    fn candidates() {
        let s3 = sym_group(3).unwrap();
        assert_eq!(normal_order_candidates(s3.group()).unwrap(), BTreeSet::from([3]));
        let a4 = alt_group(4).unwrap();
        assert!(normal_order_candidates(a4.group()).unwrap().contains(&4));
        assert!(matches!(
            normal_order_candidates(&cyclic_group(4)),
            Err(Error::NontrivialCenter)
        ));
    }

    #[test]
    fn alt5_is_simple() {
        let v = check_alt5_simple().unwrap();
        assert!(v.simple);
        assert_eq!(v.method, Method::ClassSums);
    }

    #[test]
    fn class_sums_find_witnesses() {
        let a4 = alt_group(4).unwrap();
        let v = class_sum_verdict(a4.group()).unwrap();
        assert!(!v.simple);
        assert_eq!(v.witness.unwrap().order(), 4);
        let s3 = sym_group(3).unwrap();
        let v = class_sum_verdict(s3.group()).unwrap();
        assert_eq!(v.witness.unwrap().order(), 3);
    }

    #[test]
    fn prime_power_examples() {
        let h = normal_subgroup_prime_power(2, 2, &cyclic_group(4)).unwrap();
        assert_eq!(h.elements(), &[0, 2]);
        let d4 = dihedral_group(4);
        let h = normal_subgroup_prime_power(2, 3, &d4).unwrap();
        assert_eq!(h, d4.center());
        assert_eq!(h.order(), 2);
        let z2 = cyclic_group(2);
        let h = normal_subgroup_prime_power(2, 2, &direct_product(&z2, &z2)).unwrap();
        assert_eq!(h.order(), 2);
        assert!(normal_subgroup_prime_power(2, 1, &z2).is_err());
    }

    #[test]
    fn pq_and_ppq_examples() {
        assert_eq!(normal_subgroup_pq(2, 5, &cyclic_group(10)).unwrap().elements(), &[0, 2, 4, 6, 8]);
        assert_eq!(normal_subgroup_pq(2, 5, &dihedral_group(5)).unwrap().elements(), &[0, 1, 2, 3, 4]);
        let a4 = alt_group(4).unwrap();
        let klein = normal_subgroup_ppq(2, 3, a4.group()).unwrap();
        assert_eq!(klein.order(), 4);
        assert_eq!(normal_subgroup_ppq(2, 3, &cyclic_group(12)).unwrap().order(), 4);
        assert_eq!(normal_subgroup_ppq(3, 2, &dihedral_group(9)).unwrap().order(), 9);
    }

    #[test]
    fn case_examples() {
        let s4 = sym_group(4).unwrap();
        assert_eq!(normal_subgroup_24(s4.group()).unwrap().order(), 4);
        assert_eq!(normal_subgroup_24(&cyclic_group(24)).unwrap().order(), 8);
        assert_eq!(normal_subgroup_special(30, &cyclic_group(30)).unwrap().order(), 3);
        assert_eq!(normal_subgroup_special(40, &dihedral_group(20)).unwrap().order(), 5);
        assert_eq!(normal_subgroup_special(56, &dihedral_group(28)).unwrap().order(), 7);
    }

    #[test]
    fn dispatch_bounds() {
        assert!(matches!(normal_subgroup(&cyclic_group(7)), Err(Error::PrimeOrder(7))));
        assert!(matches!(normal_subgroup(&cyclic_group(59)), Err(Error::PrimeOrder(59))));
        assert!(matches!(normal_subgroup(&cyclic_group(1)), Err(Error::OrderOutOfRange(1))));
        assert!(matches!(normal_subgroup(&cyclic_group(60)), Err(Error::OrderOutOfRange(60))));
        let (h, m) = normal_subgroup_with_method(&cyclic_group(57)).unwrap();
        assert_eq!((h.order(), m), (19, Method::Pq));
        let (_, m) = normal_subgroup_with_method(&cyclic_group(9)).unwrap();
        assert_eq!(m, Method::PrimePower);
    }

    #[test]
    fn general_simplicity() {
        assert!(simplicity(&cyclic_group(7)).unwrap().simple);
        let a5 = alt_group(5).unwrap();
        assert!(simplicity(a5.group()).unwrap().simple);
        let s5 = sym_group(5).unwrap();
        let v = simplicity(s5.group()).unwrap();
        assert_eq!(v.witness.unwrap().order(), 60);
    }
}
