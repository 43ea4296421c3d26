//! Permutations in one-line notation, symmetric and alternating groups.
//!
//! A [`Perm`] of size `n` maps `k` to `images[k]`. Composition follows the
//! functional convention: `x.compose(y)` sends `k` to `x[y[k]]`, so `y` is
//! applied first.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use itertools::Itertools;

use crate::arith::factorial;
use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPerm(format!("{images:?} is not a permutation of 0..{n}")));
            }
        }
        Ok(Perm(images))
    }

    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// Swaps `i` and `j`, fixing everything else. Needs `i != j`, both `< n`.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Perm> {
        if i >= n || j >= n || i == j {
            return Err(Error::TransposeArgs { i, j, n });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// `k -> self[other[k]]`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Perm(other.0.iter().map(|&k| self.0[k]).collect()))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v] = k;
        }
        Perm(inv)
    }

    /// `a p a^-1`.
    pub fn conjugate(&self, a: &Perm) -> Result<Perm> {
        a.compose(self)?.compose(&a.inverse())
    }

    /// Least index not fixed; `degree()` for the identity.
    pub fn least_moved(&self) -> usize {
        least_moved(&self.0)
    }

    /// True iff `self` is the transposition of its least moved point `m`
    /// and `self[m]`.
    pub fn is_transposition(&self) -> bool {
        let m = self.least_moved();
        let n = self.degree();
        m < n
            && Perm::transposition(m, self.0[m], n)
                .map(|t| t == *self)
                .unwrap_or(false)
    }

    /// Factors `self` into transpositions whose left-to-right composite is
    /// `self`. Each step peels `q = (m p[m])` off the front, with `m` the
    /// least moved point, and recurses on `q p`, whose least moved point is
    /// strictly larger.
    pub fn trans_list(&self) -> Vec<Perm> {
        let n = self.degree();
        let mut factors = Vec::new();
        let mut p = self.clone();
        loop {
            let m = p.least_moved();
            if m >= n {
                break;
            }
            let q = Perm::transposition(m, p.0[m], n).expect("m is moved, so p[m] != m");
            p = q.compose(&p).expect("same degree");
            debug_assert!(p.least_moved() > m);
            factors.push(q);
        }
        factors
    }

    /// Pairs `i < j` with `p[i] > p[j]`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.degree();
        (0..n)
            .tuple_combinations()
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .collect()
    }

    /// Number of inversions mod 2.
    pub fn parity(&self) -> u8 {
        (self.inversions().len() % 2) as u8
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 0
    }

    /// Compact token used as a group-file element label: `[1,0,2]`.
    pub fn token(&self) -> String {
        format!("[{}]", self.0.iter().join(","))
    }

    /// Rank in the lexicographic enumeration of permutations of `0..n`.
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        for i in 0..n {
            let smaller_later = self.0[i + 1..].iter().filter(|&&v| v < self.0[i]).count();
            rank += smaller_later * factorial(n - 1 - i);
        }
        rank
    }
}

/// Least `k` with `p[k] != k`, or `p.len()` if there is none.
pub fn least_moved(p: &[usize]) -> usize {
    p.iter().enumerate().position(|(k, &v)| k != v).unwrap_or(p.len())
}

/// Right fold of composition; the empty product is the identity of size `n`.
pub fn compose_all(list: &[Perm], n: usize) -> Result<Perm> {
    list.iter()
        .rev()
        .try_fold(Perm::identity(n), |acc, p| p.compose(&acc))
}

/// One-line notation with spaces: `[1 0 2]`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(" "))
    }
}

/// Accepts `[1 0 2]` and the compact `[1,0,2]`.
impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPerm(format!("{s:?} is not a bracketed list")))?;
        let images = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidPerm(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if images.is_empty() {
            return Err(Error::InvalidPerm("empty permutation".into()));
        }
        Perm::new(images)
    }
}

/// `sym(n)`: all permutations of `0..n` in lexicographic order, identity
/// first, under composition.
#[derive(Clone, Debug)]
pub struct SymGroup {
    degree: usize,
    group: Group,
    perms: std::sync::Arc<Vec<Perm>>,
}

impl SymGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn perm(&self, index: usize) -> &Perm {
        &self.perms[index]
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        (p.degree() == self.degree).then(|| p.lex_rank())
    }
}

fn sym_cache() -> &'static Mutex<HashMap<usize, SymGroup>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, SymGroup>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn sym_group(n: usize) -> Result<SymGroup> {
    sym_group_with(n, &Limits::default())
}

/// Builds `sym(n)`, memoized per degree.
pub fn sym_group_with(n: usize, limits: &Limits) -> Result<SymGroup> {
    if n == 0 {
        return Err(Error::EmptyGroup);
    }
    if n > limits.max_sym_degree {
        return Err(Error::DegreeTooLarge {
            n,
            max: limits.max_sym_degree,
        });
    }
    let order = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)).unwrap_or(usize::MAX);
    limits.check_order(order)?;
    if let Some(s) = sym_cache().lock().expect("sym cache poisoned").get(&n) {
        return Ok(s.clone());
    }
    let perms: Vec<Perm> = (0..n).permutations(n).map(Perm).collect();
    let mut table = Vec::with_capacity(order * order);
    for x in &perms {
        for y in &perms {
            table.push(x.compose(y).expect("same degree").lex_rank());
        }
    }
    let labels = perms.iter().map(Perm::token).collect();
    let group = Group::from_flat(labels, table)?;
    let s = SymGroup {
        degree: n,
        group,
        perms: std::sync::Arc::new(perms),
    };
    sym_cache().lock().expect("sym cache poisoned").insert(n, s.clone());
    Ok(s)
}

pub fn alt_group(n: usize) -> Result<Subgroup> {
    alt_group_with(n, &Limits::default())
}

/// The even permutations, as a subgroup of `sym(n)`.
pub fn alt_group_with(n: usize, limits: &Limits) -> Result<Subgroup> {
    let s = sym_group_with(n, limits)?;
    let even = s.perms().iter().enumerate().filter(|(_, p)| p.is_even()).map(|(i, _)| i);
    Subgroup::new(s.group(), even)
}
