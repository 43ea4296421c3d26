//! Constructive Sylow subgroups and checkable forms of the Sylow theorems.
//!
//! [`sylow_subgroup`] grows a p-subgroup one factor of `p` at a time: while
//! `p` divides `[N(H) : H]`, the quotient `N(H)/H` has an element of order
//! `p`, and lifting the cyclic subgroup it generates gives a p-subgroup of
//! order `p |H|`. The loop stops exactly when `H` is a Sylow p-subgroup.

use crate::action::{conj_sub_action, conjs_sub, normalizer};
use crate::arith::{is_power_of, is_prime, p_part};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::subgroup::Subgroup;

/// Groups up to this order have their p-subgroups enumerated exhaustively
/// by [`p_subgroups`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 24;

fn require_prime(p: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Every element order of `h` is a power of `p`.
pub fn is_p_group(h: &Subgroup, p: usize) -> bool {
    let g = h.parent();
    h.elements().iter().all(|&x| is_power_of(g.element_order(x), p))
}

/// Given a p-subgroup `h` whose normalizer index is divisible by `p`,
/// returns a subgroup `k` with `h < k` and `|k| = p |h|`.
pub fn extend_p_subgroup(h: &Subgroup, p: usize) -> Result<Subgroup> {
    require_prime(p)?;
    let n = normalizer(h);
    let h_in_n = n.pull_back(h)?;
    let quotient = h_in_n.quotient()?;
    let x = quotient.elt_of_ord(p).ok_or(Error::NoElementOfOrder { order: p })?;
    let c = Subgroup::cyclic(&quotient, x)?;
    let k_in_n = h_in_n.lift(&c)?;
    n.push_forward(&k_in_n)
}

/// A Sylow p-subgroup of `g`, built from the trivial subgroup upward.
/// Returns the trivial subgroup when `p` does not divide `|g|`.
pub fn sylow_subgroup(g: &Group, p: usize) -> Result<Subgroup> {
    require_prime(p)?;
    let mut h = g.trivial_subgroup();
    loop {
        let nindex = normalizer(&h).order() / h.order();
        if !nindex.is_multiple_of(p) {
            return Ok(h);
        }
        let k = extend_p_subgroup(&h, p)?;
        debug_assert_eq!(k.order(), p * h.order());
        h = k;
    }
}

#[derive(Debug, Clone)]
pub struct SylowReport {
    pub prime: usize,
    pub sylow: Subgroup,
    /// Number of Sylow p-subgroups (conjugates of `sylow`).
    pub np: usize,
    /// `[G : sylow]`.
    pub index: usize,
    /// `[N(sylow) : sylow]`.
    pub nindex: usize,
}

/// Computes a Sylow subgroup with its conjugate count and checks every
/// Sylow-theorem consequence. A failed check is reported as a theorem
/// violation.
pub fn sylow_report(g: &Group, p: usize) -> Result<SylowReport> {
    let sylow = sylow_subgroup(g, p)?;
    let np = conjs_sub(&sylow).len();
    let n = normalizer(&sylow);
    let report = SylowReport {
        prime: p,
        np,
        index: sylow.index(),
        nindex: n.order() / sylow.order(),
        sylow,
    };
    let fail = |what: &str| {
        Err(Error::TheoremViolation(format!(
            "Sylow {p}-subgroup of a group of order {}: {what}",
            g.order()
        )))
    };
    if !is_p_group(&report.sylow, p) {
        return fail("not a p-group");
    }
    if report.sylow.order() != p_part(g.order(), p) {
        return fail("order is not the full p-part");
    }
    if report.nindex.is_multiple_of(p) {
        return fail("p divides the normalizer index");
    }
    if report.np % p != 1 % p {
        return fail("np is not 1 mod p");
    }
    if !report.index.is_multiple_of(report.np) {
        return fail("np does not divide the index");
    }
    if report.index.is_multiple_of(p) {
        return fail("p divides the index");
    }
    if report.np != n.index() {
        return fail("np differs from the normalizer's index");
    }
    Ok(report)
}

/// All Sylow p-subgroups of `g`, the constructed one first.
pub fn sylow_conjugates(g: &Group, p: usize) -> Result<Vec<Subgroup>> {
    Ok(conjs_sub(&sylow_subgroup(g, p)?))
}

/// First subgroup in `l` containing every element of `h`.
pub fn find_supergroup<'a>(h: &Subgroup, l: &'a [Subgroup]) -> Option<&'a Subgroup> {
    l.iter().find(|c| h.is_subgroup_of(c))
}

/// How a conjugate of a Sylow subgroup sits under conjugation by a p-subgroup.
#[derive(Debug, Clone)]
pub struct ConjugateOrbit {
    pub conjugate: Subgroup,
    pub orbit_len: usize,
    pub contains: bool,
}

/// For each conjugate `c` of the Sylow subgroup `m`, the length of its orbit
/// under conjugation by the p-subgroup `h`. The length is 1 exactly when
/// `h` lies inside `c`, and otherwise a multiple of `p`; a violation of that
/// dichotomy is a theorem violation.
pub fn orbit_length_classifier(m: &Subgroup, h: &Subgroup, p: usize) -> Result<Vec<ConjugateOrbit>> {
    require_prime(p)?;
    m.ensure_same_parent(h)?;
    let g = m.parent();
    if !is_p_group(m, p) || m.order() != p_part(g.order(), p) {
        return Err(Error::Precondition("m is not a Sylow p-subgroup".into()));
    }
    if !is_p_group(h, p) {
        return Err(Error::Precondition("h is not a p-group".into()));
    }
    let action = conj_sub_action(m).subaction(h)?;
    let mut out = Vec::with_capacity(action.degree());
    for (i, c) in action.domain().iter().enumerate() {
        let orbit_len = action.orbit_indices(i).len();
        let contains = h.is_subgroup_of(c);
        let ok = if contains { orbit_len == 1 } else { orbit_len % p == 0 };
        if !ok {
            return Err(Error::TheoremViolation(format!(
                "conjugate {i} has orbit length {orbit_len} (contains h: {contains})"
            )));
        }
        out.push(ConjugateOrbit {
            conjugate: c.clone(),
            orbit_len,
            contains,
        });
    }
    Ok(out)
}

/// p-subgroups of `g` for testing: all of them when `|g|` is at most
/// [`BRUTE_FORCE_MAX_ORDER`], otherwise the cyclic ones of p-power order.
pub fn p_subgroups(g: &Group, p: usize) -> Vec<Subgroup> {
    if g.order() <= BRUTE_FORCE_MAX_ORDER {
        return g.all_subgroups().into_iter().filter(|s| is_p_group(s, p)).collect();
    }
    let mut out: Vec<Subgroup> = Vec::new();
    for x in g.elements() {
        if !is_power_of(g.element_order(x), p) {
            continue;
        }
        let c = g.cyclic_subgroup(x).expect("x is in range");
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}
