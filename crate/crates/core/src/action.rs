//! Group actions as explicit tables.
//!
//! A [`GroupAction`] stores, for every group element `i` and domain point
//! `s`, the index of `i . s`. All axioms are checked once when the table is
//! built, after which orbit and stabilizer queries are plain lookups.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::homomorphism::{GroupMap, Symmetric};
use crate::perm::Perm;
use crate::subgroup::{Coset, Subgroup};

#[derive(Clone, Debug)]
pub struct GroupAction<D> {
    group: Group,
    domain: Vec<D>,
    lookup: HashMap<D, usize>,
    table: Vec<usize>,
}

impl<D: Clone + Eq + Hash + Debug> GroupAction<D> {
    /// Tabulates `rule` over `group x domain` and validates the result.
    pub fn new(group: &Group, domain: Vec<D>, rule: impl Fn(usize, &D) -> D) -> Result<Self> {
        let lookup = index_domain(&domain)?;
        let mut table = Vec::with_capacity(group.order() * domain.len());
        for x in group.elements() {
            for (point, s) in domain.iter().enumerate() {
                match lookup.get(&rule(x, s)) {
                    Some(&k) => table.push(k),
                    None => return Err(Error::ActionClosure { element: x, point }),
                }
            }
        }
        GroupAction::checked(group.clone(), domain, lookup, table)
    }

    /// Builds an action from a precomputed `|G| x |domain|` index table.
    pub fn from_table(group: &Group, domain: Vec<D>, rows: Vec<Vec<usize>>) -> Result<Self> {
        let lookup = index_domain(&domain)?;
        if rows.len() != group.order() {
            return Err(Error::Shape(format!(
                "action needs {} rows, found {}",
                group.order(),
                rows.len()
            )));
        }
        let mut table = Vec::with_capacity(group.order() * domain.len());
        for (x, row) in rows.into_iter().enumerate() {
            if row.len() != domain.len() {
                return Err(Error::Shape(format!("action row {x} has {} entries", row.len())));
            }
            if let Some(point) = row.iter().position(|&v| v >= domain.len()) {
                return Err(Error::ActionClosure { element: x, point });
            }
            table.extend(row);
        }
        GroupAction::checked(group.clone(), domain, lookup, table)
    }

    fn checked(group: Group, domain: Vec<D>, lookup: HashMap<D, usize>, table: Vec<usize>) -> Result<Self> {
        let a = GroupAction {
            group,
            domain,
            lookup,
            table,
        };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let m = self.degree();
        if let Some(point) = (0..m).find(|&s| self.act(0, s) != s) {
            return Err(Error::ActionIdentity { point });
        }
        let mut stamp = vec![usize::MAX; m];
        for x in self.group.elements() {
            for s in 0..m {
                let t = self.act(x, s);
                if stamp[t] == x {
                    return Err(Error::ActionNotPermutation { element: x });
                }
                stamp[t] = x;
            }
        }
        // Compatibility only needs checking against a generating set: the
        // elements y with x.(y.s) = (xy).s for all x, s are closed under products.
        for y in self.group.generators() {
            for x in self.group.elements() {
                let xy = self.group.op(x, y);
                for s in 0..m {
                    if self.act(x, self.act(y, s)) != self.act(xy, s) {
                        return Err(Error::ActionCompatibility { x, y, point: s });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn domain(&self) -> &[D] {
        &self.domain
    }

    /// Number of domain points.
    pub fn degree(&self) -> usize {
        self.domain.len()
    }

    pub fn index_of(&self, s: &D) -> Option<usize> {
        self.lookup.get(s).copied()
    }

    pub fn contains(&self, s: &D) -> bool {
        self.lookup.contains_key(s)
    }

    fn require(&self, s: &D) -> Result<usize> {
        self.index_of(s).ok_or_else(|| Error::NotInDomain(format!("{s:?}")))
    }

    /// Index of `x . s` for domain index `s`.
    #[inline]
    pub fn act(&self, x: usize, s: usize) -> usize {
        self.table[x * self.degree() + s]
    }

    pub fn act_value(&self, x: usize, s: &D) -> Result<&D> {
        let k = self.require(s)?;
        Ok(&self.domain[self.act(x, k)])
    }

    pub fn row(&self, x: usize) -> &[usize] {
        let m = self.degree();
        &self.table[x * m..(x + 1) * m]
    }

    /// Domain indices reachable from `s`, sorted.
    pub fn orbit_indices(&self, s: usize) -> Vec<usize> {
        let mut hit = vec![false; self.degree()];
        for x in self.group.elements() {
            hit[self.act(x, s)] = true;
        }
        (0..self.degree()).filter(|&t| hit[t]).collect()
    }

    pub fn orbit(&self, s: &D) -> Result<Vec<D>> {
        let k = self.require(s)?;
        Ok(self.orbit_indices(k).into_iter().map(|t| self.domain[t].clone()).collect())
    }

    /// All orbits as domain-index lists, ordered by their first point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let o = self.orbit_indices(s);
            for &t in &o {
                seen[t] = true;
            }
            out.push(o);
        }
        out
    }

    pub fn stabilizer_of_index(&self, s: usize) -> Subgroup {
        Subgroup::new(&self.group, self.group.elements().filter(|&x| self.act(x, s) == s))
            .expect("stabilizers are subgroups of a valid action")
    }

    pub fn stabilizer(&self, s: &D) -> Result<Subgroup> {
        Ok(self.stabilizer_of_index(self.require(s)?))
    }

    /// Least element index sending domain point `s` to `r`.
    pub fn actor_of_index(&self, r: usize, s: usize) -> Result<usize> {
        self.group
            .elements()
            .find(|&x| self.act(x, s) == r)
            .ok_or(Error::NotInOrbit { target: r, from: s })
    }

    pub fn find_actor(&self, r: &D, s: &D) -> Result<usize> {
        self.actor_of_index(self.require(r)?, self.require(s)?)
    }

    /// Restriction to a subgroup `h` of the acting group; `h`'s induced group
    /// becomes the acting group.
    pub fn subaction(&self, h: &Subgroup) -> Result<GroupAction<D>> {
        if h.parent() != &self.group {
            return Err(Error::ForeignSubgroup);
        }
        let table = h.elements().iter().flat_map(|&x| self.row(x).iter().copied()).collect();
        Ok(GroupAction {
            group: h.group().clone(),
            domain: self.domain.clone(),
            lookup: self.lookup.clone(),
            table,
        })
    }

    /// Row `x` as a permutation of domain indices.
    pub fn act_perm(&self, x: usize) -> Perm {
        Perm::new(self.row(x).to_vec()).expect("validated rows are permutations")
    }

    /// The induced homomorphism into the symmetric group on the domain.
    pub fn act_sym(&self) -> GroupMap<Symmetric> {
        let image = self.group.elements().map(|x| self.act_perm(x)).collect();
        GroupMap::new(self.group.clone(), Symmetric { degree: self.degree() }, image)
            .expect("one permutation per element")
    }

    /// Same table, domain values relabeled by `f` (which must stay injective).
    pub fn map_domain<E: Clone + Eq + Hash + Debug>(&self, f: impl Fn(&D) -> E) -> Result<GroupAction<E>> {
        let domain: Vec<E> = self.domain.iter().map(f).collect();
        let lookup = index_domain(&domain)?;
        Ok(GroupAction {
            group: self.group.clone(),
            domain,
            lookup,
            table: self.table.clone(),
        })
    }
}

fn index_domain<D: Clone + Eq + Hash>(domain: &[D]) -> Result<HashMap<D, usize>> {
    if domain.is_empty() {
        return Err(Error::EmptyDomain);
    }
    let mut lookup = HashMap::with_capacity(domain.len());
    for (i, d) in domain.iter().enumerate() {
        if lookup.insert(d.clone(), i).is_some() {
            return Err(Error::DuplicateDomainValue(i));
        }
    }
    Ok(lookup)
}

/// `g` acting on its own elements by left multiplication.
pub fn self_action(g: &Group) -> GroupAction<usize> {
    GroupAction::new(g, g.elements().collect(), |x, &s| g.op(x, s)).expect("left translation is an action")
}

/// `g` acting on its elements by `x . s = x s x^-1`.
pub fn conjugacy_action(g: &Group) -> GroupAction<usize> {
    GroupAction::new(g, g.elements().collect(), |x, &s| g.conj(s, x)).expect("conjugation is an action")
}

/// `g` acting on the left cosets of `h` by `x . (s H) = (x s) H`.
pub fn lcoset_action(h: &Subgroup) -> GroupAction<Coset> {
    let g = h.parent();
    let cosets = h.left_cosets();
    let mut which = vec![0; g.order()];
    for (i, c) in cosets.iter().enumerate() {
        for &m in c.members() {
            which[m] = i;
        }
    }
    let domain = cosets.clone();
    GroupAction::new(g, domain, |x, s| cosets[which[g.op(x, s.representative())]].clone())
        .expect("coset translation is an action")
}

/// `{a x a^-1 : x in h}`.
pub fn conj_sub(h: &Subgroup, a: usize) -> Result<Subgroup> {
    let g = h.parent();
    g.check_element(a)?;
    Ok(Subgroup::from_closed_set(g, h.elements().iter().map(|&x| g.conj(x, a))))
}

/// Distinct conjugates of `h`, in order of the least conjugating element;
/// `h` itself comes first.
pub fn conjs_sub(h: &Subgroup) -> Vec<Subgroup> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for a in h.parent().elements() {
        let c = conj_sub(h, a).expect("a is in range");
        if seen.insert(c.elements().to_vec()) {
            out.push(c);
        }
    }
    out
}

/// `g` acting on the conjugates of `h` by conjugation.
pub fn conj_sub_action(h: &Subgroup) -> GroupAction<Subgroup> {
    GroupAction::new(h.parent(), conjs_sub(h), |x, s| conj_sub(s, x).expect("x is in range"))
        .expect("subgroup conjugation is an action")
}

/// Stabilizer of `h` under conjugation of its conjugates.
pub fn normalizer(h: &Subgroup) -> Subgroup {
    let action = conj_sub_action(h);
    // h is the first conjugate listed
    action.stabilizer_of_index(0)
}

/// Least `a` with `a h a^-1 = c`.
pub fn conjer_sub(c: &Subgroup, h: &Subgroup) -> Result<usize> {
    h.ensure_same_parent(c)?;
    h.parent()
        .elements()
        .find(|&a| conj_sub(h, a).map(|k| &k == c).unwrap_or(false))
        .ok_or(Error::NotAConjugate)
}

/// Normality test with the guarantee that a subgroup whose index is the
/// least prime dividing `|G|` is normal. Reports a theorem violation if that
/// guarantee fails.
pub fn index_least_divisor_normal_check(h: &Subgroup) -> Result<bool> {
    let order = h.parent().order();
    if order <= 1 {
        return Err(Error::Precondition("group must be nontrivial".into()));
    }
    let normal = h.is_normal();
    if Some(h.index()) == crate::arith::least_prime_divisor(order) && !normal {
        return Err(Error::TheoremViolation(format!(
            "subgroup of least-prime index {} is not normal",
            h.index()
        )));
    }
    Ok(normal)
}
