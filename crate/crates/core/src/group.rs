//! Finite groups as closed, sorted element sets.
//!
//! Elements only need an exact product, inverse and a total order. Products
//! inside a [`FinGroup`] are looked up by binary search, so no Cayley table
//! is materialized for the larger groups; quotients and small groups use
//! [`CayleyTable`] instead.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

pub trait GroupElement: Clone + Ord + fmt::Debug {
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
    fn is_identity(&self) -> bool;

    fn conj_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inv())
    }

    /// Least `n ≥ 1` with `selfⁿ = 1`, or `None` beyond `bound`.
    fn order_bounded(&self, bound: usize) -> Option<usize> {
        let mut x = self.clone();
        for n in 1..=bound {
            if x.is_identity() {
                return Some(n);
            }
            x = x.mul(self);
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("closure exceeded {bound} elements")]
    Overflow { bound: usize },
    #[error("closure needs at least one generator or an identity")]
    Empty,
}

#[derive(Debug, Clone)]
pub struct FinGroup<T> {
    elements: Vec<T>,
    identity: usize,
}

impl<T: GroupElement> FinGroup<T> {
    /// Breadth-first closure of `gens` together with `identity`.
    pub fn close(gens: &[T], identity: T, bound: usize) -> Result<Self, GroupError> {
        if !identity.is_identity() {
            return Err(GroupError::Empty);
        }
        let mut seen: BTreeSet<T> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.mul(g);
                if !seen.contains(&y) {
                    if seen.len() >= bound {
                        return Err(GroupError::Overflow { bound });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(Self::from_sorted(seen.into_iter().collect()))
    }

    /// Wraps an element set already known to be a group.
    ///
    /// Panics if `elements` lacks an identity.
    pub fn from_elements(mut elements: Vec<T>) -> Self {
        elements.sort();
        elements.dedup();
        Self::from_sorted(elements)
    }

    fn from_sorted(elements: Vec<T>) -> Self {
        let identity = elements
            .iter()
            .position(|x| x.is_identity())
            .expect("group contains the identity");
        Self { elements, identity }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn identity(&self) -> &T {
        &self.elements[self.identity]
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.elements.binary_search(x).ok()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.index_of(x).is_some()
    }

    pub fn element_order(&self, x: &T) -> usize {
        x.order_bounded(self.order())
            .expect("element of a finite group has order dividing the group order")
    }

    /// True iff `g H g⁻¹ = H` as sets.
    pub fn is_normalized_by(&self, g: &T) -> bool {
        let mut image: Vec<T> = self.elements.iter().map(|x| x.conj_by(g)).collect();
        image.sort();
        image == self.elements
    }

    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|x| self.contains(&x.inv()) && self.elements.iter().all(|y| self.contains(&x.mul(y))))
    }

    pub fn is_subgroup_of(&self, other: &FinGroup<T>) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }

    /// Brute-force conjugacy test.
    pub fn are_conjugate(&self, g: &T, h: &T) -> bool {
        self.elements.iter().any(|x| &g.conj_by(x) == h)
    }

    pub fn cayley_table(&self) -> CayleyTable {
        let n = self.order();
        let mut mul = Vec::with_capacity(n * n);
        for x in &self.elements {
            for y in &self.elements {
                mul.push(self.index_of(&x.mul(y)).expect("closed under products"));
            }
        }
        CayleyTable::new(n, mul, self.identity)
    }

    /// `G/H` for a normal subgroup `H`, as a table on left-coset representatives.
    ///
    /// Returns the table and, for each coset, its least element.
    pub fn quotient(&self, normal: &FinGroup<T>) -> Result<(CayleyTable, Vec<T>), QuotientError> {
        if !normal.is_subgroup_of(self) {
            return Err(QuotientError::NotSubgroup);
        }
        if !self.order().is_multiple_of(normal.order()) {
            return Err(QuotientError::NotSubgroup);
        }
        // coset key: least element of xH
        let key = |x: &T| -> T {
            normal.elements.iter().map(|h| x.mul(h)).min().expect("nonempty subgroup")
        };
        let mut reps: Vec<T> = self.elements.iter().map(key).collect();
        reps.sort();
        reps.dedup();
        if reps.len() * normal.order() != self.order() {
            return Err(QuotientError::NotSubgroup);
        }
        for g in &self.elements {
            if !normal.is_normalized_by(g) {
                return Err(QuotientError::NotNormal);
            }
        }
        let n = reps.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &reps {
            for b in &reps {
                let k = key(&a.mul(b));
                mul.push(reps.binary_search(&k).expect("product lands in a coset"));
            }
        }
        let identity = reps.binary_search(&key(self.identity())).expect("identity coset");
        Ok((CayleyTable::new(n, mul, identity), reps))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuotientError {
    #[error("subgroup is not contained in the group")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
}

/// A finite group given by its multiplication table on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl CayleyTable {
    pub fn new(n: usize, mul: Vec<usize>, identity: usize) -> Self {
        assert_eq!(mul.len(), n * n);
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mul[a * n + b] == identity)
                    .expect("every element has an inverse")
            })
            .collect();
        Self { n, mul, identity, inverse }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    fn cyclic_subgroup(&self, a: usize) -> Vec<usize> {
        let mut out = vec![self.identity];
        let mut x = a;
        while x != self.identity {
            out.push(x);
            x = self.mul(x, a);
        }
        out.sort_unstable();
        out
    }

    fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Structural dihedral test: an element `f` of order `n` and an
    /// involution `h ∉ ⟨f⟩` with `h f h⁻¹ = f⁻¹`, in a group of order `2n`.
    ///
    /// Covers the degenerate `D₁ ≅ Z₂` and `D₂ ≅ (Z₂)²`.
    pub fn is_dihedral(&self, n: usize) -> bool {
        if self.n != 2 * n {
            return false;
        }
        (0..self.n).filter(|&f| self.element_order(f) == n).any(|f| {
            let sub = self.cyclic_subgroup(f);
            (0..self.n).any(|h| {
                self.element_order(h) == 2
                    && sub.binary_search(&h).is_err()
                    && self.conj(f, h) == self.inv(f)
            })
        })
    }

    /// `G ≅ D₃ × Z₂`: a central involution `z` and a nonabelian subgroup of
    /// order 6 avoiding `z` (so the product is direct).
    pub fn is_d3_times_z2(&self) -> bool {
        if self.n != 12 {
            return false;
        }
        let center = self.center();
        if center.len() != 2 {
            return false;
        }
        let z = center.into_iter().find(|&c| c != self.identity).expect("nontrivial center");
        // D₃ is generated by an element of order 3 and an inverting involution
        (0..self.n).filter(|&f| self.element_order(f) == 3).any(|f| {
            (0..self.n).any(|h| {
                if self.element_order(h) != 2 || self.conj(f, h) != self.inv(f) {
                    return false;
                }
                let sub = self.generated(&[f, h]);
                sub.len() == 6 && sub.binary_search(&z).is_err()
            })
        })
    }

    fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.n).filter(|&i| seen[i]).collect()
    }

    pub fn recognize(&self) -> GroupType {
        let n = self.n;
        let orders: Vec<usize> = (0..n).map(|a| self.element_order(a)).collect();
        if orders.contains(&n) {
            return GroupType::Cyclic(n);
        }
        if n.is_power_of_two() && orders.iter().all(|&o| o <= 2) {
            return GroupType::ElementaryAbelian2(n.trailing_zeros());
        }
        if n.is_multiple_of(2) && self.is_dihedral(n / 2) {
            return GroupType::Dihedral(n / 2);
        }
        if self.is_d3_times_z2() {
            return GroupType::D3xZ2;
        }
        GroupType::Other(n)
    }
}

/// Isomorphism type reported by [`CayleyTable::recognize`].
///
/// Tie-breaks: `D₁` is reported as `Z₂`, `D₂` as `(Z₂)²`, and `D₆` as
/// `Dihedral(6)` even though it is isomorphic to `D₃ × Z₂`; use
/// [`GroupType::is_isomorphic_to`] to compare across these aliases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupType {
    Cyclic(usize),
    Dihedral(usize),
    ElementaryAbelian2(u32),
    D3xZ2,
    Other(usize),
}

impl GroupType {
    pub fn order(&self) -> usize {
        match *self {
            GroupType::Cyclic(n) => n,
            GroupType::Dihedral(n) => 2 * n,
            GroupType::ElementaryAbelian2(k) => 1 << k,
            GroupType::D3xZ2 => 12,
            GroupType::Other(n) => n,
        }
    }

    fn normalized(&self) -> GroupType {
        match *self {
            GroupType::Dihedral(1) => GroupType::Cyclic(2),
            GroupType::Dihedral(2) => GroupType::ElementaryAbelian2(2),
            GroupType::D3xZ2 => GroupType::Dihedral(6),
            GroupType::ElementaryAbelian2(0) => GroupType::Cyclic(1),
            GroupType::ElementaryAbelian2(1) => GroupType::Cyclic(2),
            t => t,
        }
    }

    pub fn is_isomorphic_to(&self, other: &GroupType) -> bool {
        !matches!(self.normalized(), GroupType::Other(_)) && self.normalized() == other.normalized()
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::Cyclic(n) => write!(f, "Z{n}"),
            GroupType::Dihedral(n) => write!(f, "D_{n}"),
            GroupType::ElementaryAbelian2(k) => write!(f, "(Z2)^{k}"),
            GroupType::D3xZ2 => write!(f, "D3xZ2"),
            GroupType::Other(n) => write!(f, "order-{n}"),
        }
    }
}
