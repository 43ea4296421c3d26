//! Maps between groups: homomorphism checks, kernels, induced quotient maps.
//!
//! The target of a map is anything implementing [`Codomain`]. Tabulated
//! groups are one; [`Symmetric`] is another, composing permutations directly
//! so that maps into `sym(n)` work for degrees far past the table cap.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;
use crate::subgroup::Subgroup;

pub trait Codomain {
    type Element: Clone + Eq + Debug;

    fn identity(&self) -> Self::Element;
    fn op(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn contains(&self, a: &Self::Element) -> bool;
}

impl Codomain for Group {
    type Element = usize;

    fn identity(&self) -> usize {
        0
    }

    fn op(&self, a: &usize, b: &usize) -> usize {
        Group::op(self, *a, *b)
    }

    fn contains(&self, a: &usize) -> bool {
        *a < self.order()
    }
}

/// The full symmetric group on `0..degree`, without a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Symmetric {
    pub degree: usize,
}

impl Codomain for Symmetric {
    type Element = Perm;

    fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    fn op(&self, a: &Perm, b: &Perm) -> Perm {
        a.compose(b).expect("elements of one symmetric group share a degree")
    }

    fn contains(&self, a: &Perm) -> bool {
        a.degree() == self.degree
    }
}

/// A total map from a source group's elements into a codomain.
#[derive(Debug, Clone)]
pub struct GroupMap<T: Codomain = Group> {
    source: Group,
    target: T,
    image: Vec<T::Element>,
}

impl<T: Codomain> GroupMap<T> {
    pub fn new(source: Group, target: T, image: Vec<T::Element>) -> Result<Self> {
        if image.len() != source.order() {
            return Err(Error::MapLength {
                expected: source.order(),
                found: image.len(),
            });
        }
        if let Some(element) = image.iter().position(|y| !target.contains(y)) {
            return Err(Error::MapImage { element });
        }
        Ok(GroupMap { source, target, image })
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &T {
        &self.target
    }

    pub fn image(&self) -> &[T::Element] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> &T::Element {
        &self.image[x]
    }

    fn first_failure(&self) -> Option<(usize, usize)> {
        let g = &self.source;
        if self.image[0] != self.target.identity() {
            return Some((0, 0));
        }
        for a in g.elements() {
            for b in g.elements() {
                if self.image[g.op(a, b)] != self.target.op(&self.image[a], &self.image[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// `m(x y) = m(x) m(y)` for all pairs, and `m(e) = e`.
    pub fn is_homomorphism(&self) -> bool {
        self.first_failure().is_none()
    }

    /// Source elements sent to the target identity.
    pub fn kernel(&self) -> Result<Subgroup> {
        if let Some((a, b)) = self.first_failure() {
            return Err(Error::NotHomomorphism { a, b });
        }
        let e = self.target.identity();
        Subgroup::new(&self.source, self.source.elements().filter(|&x| self.image[x] == e))
    }

    /// Injective homomorphism.
    pub fn is_endomorphism(&self) -> bool {
        self.kernel().map(|k| k.is_trivial()).unwrap_or(false)
    }

    /// The map on `source / kernel` sending each coset to the image of its
    /// representative. Always injective.
    pub fn quotient_map(&self) -> Result<GroupMap<T>>
    where
        T: Clone,
    {
        let kernel = self.kernel()?;
        let quotient = kernel.quotient()?;
        let image = kernel
            .left_cosets()
            .iter()
            .map(|c| self.image[c.representative()].clone())
            .collect();
        GroupMap::new(quotient, self.target.clone(), image)
    }
}

impl GroupMap<Symmetric> {
    /// Re-targets the map onto the tabulated `sym(degree)`.
    pub fn into_table_map(self, limits: &crate::group::Limits) -> Result<GroupMap<Group>> {
        let sym = crate::perm::sym_group_with(self.target.degree, limits)?;
        let image = self
            .image
            .iter()
            .map(|p| sym.index_of(p).expect("degree matches"))
            .collect();
        GroupMap::new(self.source, sym.group().clone(), image)
    }
}
