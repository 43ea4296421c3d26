//! Finite groups given by an explicit operation table.
//!
//! Elements are referenced by their index `0..order`; index 0 is always the
//! identity. A [`Group`] is immutable once built and cheap to clone (the
//! table sits behind an `Arc`), so it can be shared freely across threads.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest order accepted by default when building a group table.
pub const DEFAULT_MAX_ORDER: usize = 5040;
/// Largest symmetric-group degree built without forcing.
pub const DEFAULT_MAX_SYM_DEGREE: usize = 6;

/// Size caps for table construction. Tables are quadratic in the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_sym_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            max_sym_degree: DEFAULT_MAX_SYM_DEGREE,
        }
    }
}

impl Limits {
    /// No caps at all. Memory is the caller's problem.
    pub fn unlimited() -> Self {
        Limits {
            max_order: usize::MAX,
            max_sym_degree: usize::MAX,
        }
    }

    pub fn check_order(&self, order: usize) -> Result<()> {
        if order > self.max_order {
            return Err(Error::OrderTooLarge {
                order,
                max: self.max_order,
            });
        }
        Ok(())
    }
}

struct Inner {
    labels: Vec<String>,
    table: Vec<usize>,
    inverses: Vec<usize>,
    by_label: HashMap<String, usize>,
}

/// A validated finite group.
#[derive(Clone)]
pub struct Group(Arc<Inner>);

impl Group {
    /// Builds a group from labels and a square table, checking every group
    /// axiom. `table[i][j]` is the index of the product of `i` by `j`.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Group> {
        Group::with_limits(labels, table, &Limits::default())
    }

    pub fn with_limits(labels: Vec<String>, table: Vec<Vec<usize>>, limits: &Limits) -> Result<Group> {
        let n = labels.len();
        limits.check_order(n)?;
        if table.len() != n {
            return Err(Error::Shape(format!(
                "{} labels but {} table rows",
                n,
                table.len()
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!("row {} has {} entries, expected {}", i, row.len(), n)));
            }
            flat.extend(row);
        }
        Group::from_flat(labels, flat)
    }

    /// Builds a group from a flat row-major table, with full validation.
    pub fn from_flat(labels: Vec<String>, table: Vec<usize>) -> Result<Group> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyGroup);
        }
        if table.len() != n * n {
            return Err(Error::Shape(format!("expected {} entries, found {}", n * n, table.len())));
        }
        let mut by_label = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::InvalidLabel {
                    index: i,
                    label: l.clone(),
                });
            }
            if by_label.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(Error::EntryOutOfRange {
                row: pos / n,
                col: pos % n,
                value: table[pos],
            });
        }
        for (col, &value) in table[..n].iter().enumerate() {
            if value != col {
                return Err(Error::IdentityRow { col, value });
            }
        }
        let mut inverses = vec![usize::MAX; n];
        for j in 0..n {
            for i in 0..n {
                if table[j * n + i] == 0 && inverses[i] == usize::MAX {
                    inverses[i] = j;
                }
            }
        }
        if let Some(element) = inverses.iter().position(|&v| v == usize::MAX) {
            return Err(Error::MissingInverse { element });
        }
        check_latin(&table, n)?;
        check_associative(&table, n)?;
        Ok(Group::assemble(labels, table, inverses, by_label))
    }

    /// Builds the table of a group given by a list of elements and an
    /// operation on them. `elements[0]` must be the identity.
    pub fn from_operation<T, F, L>(elements: &[T], op: F, label: L) -> Result<Group>
    where
        T: Eq + std::hash::Hash,
        F: Fn(&T, &T) -> T,
        L: Fn(&T) -> String,
    {
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        if index.len() != elements.len() {
            return Err(Error::Shape("element list has duplicates".into()));
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for x in elements {
            for y in elements {
                let z = op(x, y);
                match index.get(&z) {
                    Some(&k) => table.push(k),
                    None => return Err(Error::Shape("operation is not closed on the element list".into())),
                }
            }
        }
        Group::from_flat(elements.iter().map(label).collect(), table)
    }

    /// Wraps a table already known to satisfy the axioms (e.g. one induced
    /// from a validated parent).
    pub(crate) fn trusted(labels: Vec<String>, table: Vec<usize>) -> Group {
        let n = labels.len();
        let mut inverses = vec![0; n];
        for j in 0..n {
            for i in 0..n {
                if table[j * n + i] == 0 {
                    inverses[i] = j;
                }
            }
        }
        let by_label = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Group::assemble(labels, table, inverses, by_label)
    }

    fn assemble(labels: Vec<String>, table: Vec<usize>, inverses: Vec<usize>, by_label: HashMap<String, usize>) -> Group {
        Group(Arc::new(Inner {
            labels,
            table,
            inverses,
            by_label,
        }))
    }

    pub fn order(&self) -> usize {
        self.0.labels.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inverses[a]
    }

    /// Conjugate of `x` by `a`: `a * x * a^-1`.
    #[inline]
    pub fn conj(&self, x: usize, a: usize) -> usize {
        self.op(self.op(a, x), self.inv(a))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.op(acc, x))
    }

    pub fn row(&self, i: usize) -> &[usize] {
        let n = self.order();
        &self.0.table[i * n..(i + 1) * n]
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.by_label.get(label).copied()
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.order() {
            return Err(Error::ElementOutOfRange {
                element: x,
                order: self.order(),
            });
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (a + 1..self.order()).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Least `k >= 1` with `x^k = e`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.op(y, x);
            k += 1;
        }
        k
    }

    /// Least-indexed element of order exactly `n`, if any.
    pub fn elt_of_ord(&self, n: usize) -> Option<usize> {
        self.elements().find(|&x| self.element_order(x) == n)
    }

    /// A generating set chosen greedily in index order: each generator is the
    /// least element outside the subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.order();
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut members = vec![0];
        let mut gens = Vec::new();
        for x in 1..n {
            if inside[x] {
                continue;
            }
            gens.push(x);
            extend_closure(self, &mut inside, &mut members, x);
        }
        gens
    }

    /// Non-central conjugacy classes, each sorted, ordered by least member.
    ///
    /// Each class is swept once by conjugating its least member by every
    /// element, so the whole partition costs `O(n^2)` table lookups.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut class = Vec::new();
            for a in 0..n {
                let c = self.conj(x, a);
                if !seen[c] {
                    seen[c] = true;
                    class.push(c);
                }
            }
            if class.len() > 1 {
                class.sort_unstable();
                classes.push(class);
            }
        }
        classes
    }

    /// Elements commuting with everything.
    pub fn central_elements(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| self.elements().all(|y| self.op(x, y) == self.op(y, x)))
            .collect()
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.0.table
    }

    /// Re-runs the full axiom check. Mostly useful in tests.
    pub fn validate(&self) -> Result<()> {
        Group::from_flat(self.0.labels.clone(), self.0.table.clone()).map(|_| ())
    }
}

/// Adds `x` to a subgroup closure, multiplying new elements against
/// everything already present until the set is closed.
pub(crate) fn extend_closure(g: &Group, inside: &mut [bool], members: &mut Vec<usize>, x: usize) {
    if inside[x] {
        return;
    }
    let mut queue = vec![x];
    inside[x] = true;
    while let Some(u) = queue.pop() {
        let existing = members.len();
        members.push(u);
        for &v in &members[..=existing] {
            for w in [g.op(u, v), g.op(v, u)] {
                if !inside[w] {
                    inside[w] = true;
                    queue.push(w);
                }
            }
        }
    }
}

fn check_latin(table: &[usize], n: usize) -> Result<()> {
    let mut stamp = vec![usize::MAX; n];
    for i in 0..n {
        for j in 0..n {
            let v = table[i * n + j];
            if stamp[v] == i {
                return Err(Error::NotLatin {
                    line: "row",
                    index: i,
                    value: v,
                });
            }
            stamp[v] = i;
        }
    }
    stamp.fill(usize::MAX);
    for j in 0..n {
        for i in 0..n {
            let v = table[i * n + j];
            if stamp[v] == j {
                return Err(Error::NotLatin {
                    line: "column",
                    index: j,
                    value: v,
                });
            }
            stamp[v] = j;
        }
    }
    Ok(())
}

/// Light's associativity test: if `(x s) y = x (s y)` holds for every `x, y`
/// and every `s` in a set generating the magma, the operation is
/// associative. Costs `O(n^2 |S|)` instead of `O(n^3)`.
fn check_associative(table: &[usize], n: usize) -> Result<()> {
    let op = |a: usize, b: usize| table[a * n + b];
    let mut inside = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut gens = Vec::new();
    for x in 0..n {
        if inside[x] {
            continue;
        }
        gens.push(x);
        let mut queue = vec![x];
        inside[x] = true;
        while let Some(u) = queue.pop() {
            members.push(u);
            for &v in &members {
                for w in [op(u, v), op(v, u)] {
                    if !inside[w] {
                        inside[w] = true;
                        queue.push(w);
                    }
                }
            }
        }
    }
    for &s in &gens {
        for x in 0..n {
            let xs = op(x, s);
            for y in 0..n {
                if op(xs, y) != op(x, op(s, y)) {
                    return Err(Error::Associativity { a: x, b: s, c: y });
                }
            }
        }
    }
    Ok(())
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.table == other.0.table && self.0.labels == other.0.labels)
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group").field("order", &self.order()).finish_non_exhaustive()
    }
}
