//! Subgroups, cosets, normality, quotients and lifting.
//!
//! A [`Subgroup`] keeps its parent group, its element indices in strictly
//! increasing parent order, and the induced group on those elements. Induced
//! element `k` is parent element `elements[k]`; since index 0 is always a
//! member, the induced identity is again index 0.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::{extend_closure, Group};

#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    elements: Vec<usize>,
    member: Vec<bool>,
    // Built on first use; most subgroups never need their own table.
    group: OnceLock<Group>,
}

/// A left coset `x H`, stored as its sorted members.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    members: Vec<usize>,
}

impl Coset {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Least member; cosets are canonicalized by it.
    pub fn representative(&self) -> usize {
        self.members[0]
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl Subgroup {
    /// Builds the subgroup on `indices`, which must contain the identity and
    /// be closed under the parent's operation. Duplicates are ignored.
    pub fn new(parent: &Group, indices: impl IntoIterator<Item = usize>) -> Result<Subgroup> {
        let n = parent.order();
        let mut member = vec![false; n];
        for x in indices {
            parent.check_element(x)?;
            member[x] = true;
        }
        if !member[0] {
            return Err(Error::MissingIdentity);
        }
        let elements: Vec<usize> = (0..n).filter(|&x| member[x]).collect();
        for &a in &elements {
            for &b in &elements {
                let product = parent.op(a, b);
                if !member[product] {
                    return Err(Error::NotClosed { a, b, product });
                }
            }
        }
        Ok(Subgroup::from_closed(parent, elements, member))
    }

    pub(crate) fn from_closed(parent: &Group, elements: Vec<usize>, member: Vec<bool>) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            elements,
            member,
            group: OnceLock::new(),
        }
    }

    fn induced(&self) -> Group {
        let m = self.elements.len();
        let mut position = vec![usize::MAX; self.parent.order()];
        for (k, &x) in self.elements.iter().enumerate() {
            position[x] = k;
        }
        let mut table = Vec::with_capacity(m * m);
        for &a in &self.elements {
            for &b in &self.elements {
                table.push(position[self.parent.op(a, b)]);
            }
        }
        let labels = self.elements.iter().map(|&x| self.parent.label(x).to_string()).collect();
        Group::trusted(labels, table)
    }

    /// Subgroup on a set already known to be closed (e.g. a conjugate).
    pub(crate) fn from_closed_set(parent: &Group, indices: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut member = vec![false; parent.order()];
        for x in indices {
            member[x] = true;
        }
        let elements = (0..parent.order()).filter(|&x| member[x]).collect();
        Subgroup::from_closed(parent, elements, member)
    }

    pub fn trivial(parent: &Group) -> Subgroup {
        let mut member = vec![false; parent.order()];
        member[0] = true;
        Subgroup::from_closed(parent, vec![0], member)
    }

    pub fn whole(parent: &Group) -> Subgroup {
        let n = parent.order();
        Subgroup::from_closed(parent, (0..n).collect(), vec![true; n])
    }

    /// Smallest subgroup containing `gens`.
    pub fn generated(parent: &Group, gens: &[usize]) -> Result<Subgroup> {
        let mut inside = vec![false; parent.order()];
        inside[0] = true;
        let mut members = vec![0];
        for &x in gens {
            parent.check_element(x)?;
            extend_closure(parent, &mut inside, &mut members, x);
        }
        let elements = (0..parent.order()).filter(|&x| inside[x]).collect();
        Ok(Subgroup::from_closed(parent, elements, inside))
    }

    /// `{e, x, x^2, ...}`.
    pub fn cyclic(parent: &Group, x: usize) -> Result<Subgroup> {
        Subgroup::generated(parent, &[x])
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    /// The induced group on this subgroup's elements.
    pub fn group(&self) -> &Group {
        self.group.get_or_init(|| self.induced())
    }

    /// Parent indices, strictly increasing.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `|G| / |H|`.
    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member.get(x).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    /// Every element of `self` lies in `other` (both in the same parent).
    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_child_of(&self, g: &Group) -> bool {
        &self.parent == g
    }

    pub(crate) fn ensure_same_parent(&self, other: &Subgroup) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::ForeignSubgroup);
        }
        Ok(())
    }

    /// Left cosets ordered by representative; they partition the parent.
    pub fn left_cosets(&self) -> Vec<Coset> {
        let g = &self.parent;
        let mut seen = vec![false; g.order()];
        let mut cosets = Vec::with_capacity(self.index());
        for x in g.elements() {
            if seen[x] {
                continue;
            }
            let mut members: Vec<usize> = self.elements.iter().map(|&h| g.op(x, h)).collect();
            members.sort_unstable();
            for &m in &members {
                seen[m] = true;
            }
            cosets.push(Coset { members });
        }
        cosets
    }

    /// The coset containing `x`, as an index into [`Subgroup::left_cosets`].
    fn coset_lookup(&self, cosets: &[Coset]) -> Vec<usize> {
        let mut which = vec![0; self.parent.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &m in &c.members {
                which[m] = i;
            }
        }
        which
    }

    /// `a x a^-1` stays inside for every member `x` and every parent element `a`.
    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.elements()
            .all(|a| self.elements.iter().all(|&x| self.contains(g.conj(x, a))))
    }

    /// The quotient group of cosets. Element `i` is the `i`-th left coset,
    /// labeled by its representative's label.
    pub fn quotient(&self) -> Result<Group> {
        if !self.is_normal() {
            return Err(Error::NotNormal);
        }
        let g = &self.parent;
        let cosets = self.left_cosets();
        let which = self.coset_lookup(&cosets);
        let m = cosets.len();
        let mut table = Vec::with_capacity(m * m);
        for a in &cosets {
            for b in &cosets {
                table.push(which[g.op(a.representative(), b.representative())]);
            }
        }
        let labels = cosets.iter().map(|c| g.label(c.representative()).to_string()).collect();
        Ok(Group::trusted(labels, table))
    }

    /// Union of the cosets named by a subgroup of the quotient by `self`.
    pub fn lift(&self, q: &Subgroup) -> Result<Subgroup> {
        let quotient = self.quotient()?;
        if q.parent() != &quotient {
            return Err(Error::ForeignSubgroup);
        }
        let cosets = self.left_cosets();
        let elements = q.elements().iter().flat_map(|&i| cosets[i].members.iter().copied());
        Subgroup::new(&self.parent, elements)
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.ensure_same_parent(other)?;
        let elements: Vec<usize> = self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        let mut member = vec![false; self.parent.order()];
        for &x in &elements {
            member[x] = true;
        }
        Ok(Subgroup::from_closed(&self.parent, elements, member))
    }

    /// The set `{x y : x in self, y in other}`, sorted.
    pub fn products(&self, other: &Subgroup) -> Result<Vec<usize>> {
        self.ensure_same_parent(other)?;
        let g = &self.parent;
        let mut hit = vec![false; g.order()];
        for &x in &self.elements {
            for &y in &other.elements {
                hit[g.op(x, y)] = true;
            }
        }
        Ok(g.elements().filter(|&z| hit[z]).collect())
    }

    /// Re-expresses `h` (a subgroup of the same parent contained in `self`)
    /// as a subgroup of `self.group()`.
    pub fn pull_back(&self, h: &Subgroup) -> Result<Subgroup> {
        self.ensure_same_parent(h)?;
        let mut position = vec![usize::MAX; self.parent.order()];
        for (k, &x) in self.elements.iter().enumerate() {
            position[x] = k;
        }
        let mut inner = Vec::with_capacity(h.order());
        for &x in h.elements() {
            if position[x] == usize::MAX {
                return Err(Error::Precondition("subgroup is not contained in the ambient subgroup".into()));
            }
            inner.push(position[x]);
        }
        Subgroup::new(self.group(), inner)
    }

    /// Maps a subgroup of `self.group()` back into the parent.
    pub fn push_forward(&self, s: &Subgroup) -> Result<Subgroup> {
        if s.parent() != self.group() {
            return Err(Error::ForeignSubgroup);
        }
        Subgroup::new(&self.parent, s.elements().iter().map(|&k| self.elements[k]))
    }

    /// Element labels of the members, in order.
    pub fn labels(&self) -> Vec<&str> {
        self.elements.iter().map(|&x| self.parent.label(x)).collect()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.parent == other.parent
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent_order", &self.parent.order())
            .field("elements", &self.elements)
            .finish()
    }
}

impl Group {
    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::trivial(self)
    }

    pub fn cyclic_subgroup(&self, x: usize) -> Result<Subgroup> {
        Subgroup::cyclic(self, x)
    }

    pub fn center(&self) -> Subgroup {
        let elements = self.central_elements();
        let mut member = vec![false; self.order()];
        for &x in &elements {
            member[x] = true;
        }
        Subgroup::from_closed(self, elements, member)
    }

    /// Every subgroup, found by joining cyclic subgroups until nothing new
    /// appears. Output is sorted by (order, elements).
    ///
    /// Cost grows with the number of subgroups times `|G|^3`; intended for
    /// groups of a few dozen elements.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut found = vec![self.trivial_subgroup()];
        seen.insert(vec![0]);
        let mut next = 0;
        while next < found.len() {
            let s = found[next].clone();
            next += 1;
            for x in self.elements() {
                if s.contains(x) {
                    continue;
                }
                let mut gens = s.elements().to_vec();
                gens.push(x);
                let t = Subgroup::generated(self, &gens).expect("indices are in range");
                if seen.insert(t.elements().to_vec()) {
                    found.push(t);
                }
            }
        }
        found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
        found
    }
}
