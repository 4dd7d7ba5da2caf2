use std::collections::VecDeque;
use std::fmt;

use super::{FiniteGroup, GroupError, Result};

/// A subgroup of a [`FiniteGroup`], stored as a sorted member list plus a
/// membership mask over the parent's elements.
#[derive(Clone)]
pub struct Subgroup<'g> {
    parent: &'g FiniteGroup,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent", &self.parent.name())
            .field("members", &self.members)
            .finish()
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl<'g> Subgroup<'g> {
    fn from_mask_unchecked(parent: &'g FiniteGroup, mask: Vec<bool>) -> Self {
        let members = (0..parent.order()).filter(|&i| mask[i]).collect();
        let sub = Subgroup { parent, members, mask };
        debug_assert_eq!(parent.order() % sub.order(), 0, "Lagrange");
        sub
    }

    /// Checks an explicit element set for the subgroup axioms.
    pub fn from_members(parent: &'g FiniteGroup, elements: &[usize]) -> Result<Self> {
        let mut mask = vec![false; parent.order()];
        for &x in elements {
            parent.check_element(x)?;
            mask[x] = true;
        }
        if !mask[parent.identity()] {
            return Err(GroupError::NotSubgroup("missing identity"));
        }
        let members: Vec<usize> = (0..parent.order()).filter(|&i| mask[i]).collect();
        for &x in &members {
            if !mask[parent.inv(x)] {
                return Err(GroupError::NotSubgroup("not closed under inverses"));
            }
            for &y in &members {
                if !mask[parent.mul(x, y)] {
                    return Err(GroupError::NotSubgroup("not closed under products"));
                }
            }
        }
        Ok(Subgroup::from_mask_unchecked(parent, mask))
    }

    pub fn trivial(parent: &'g FiniteGroup) -> Self {
        let mut mask = vec![false; parent.order()];
        mask[parent.identity()] = true;
        Subgroup::from_mask_unchecked(parent, mask)
    }

    pub fn whole(parent: &'g FiniteGroup) -> Self {
        Subgroup::from_mask_unchecked(parent, vec![true; parent.order()])
    }

    /// Smallest subgroup containing `gens`, by breadth-first closure under
    /// right multiplication by the generators.
    pub fn generated(parent: &'g FiniteGroup, gens: &[usize]) -> Result<Self> {
        for &g in gens {
            parent.check_element(g)?;
        }
        let mut mask = vec![false; parent.order()];
        let mut queue = VecDeque::new();
        mask[parent.identity()] = true;
        queue.push_back(parent.identity());
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = parent.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Ok(Subgroup::from_mask_unchecked(parent, mask))
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.mask[g]
    }

    pub fn is_subset_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    fn check_parent(&self, group: &FiniteGroup) -> Result<()> {
        if std::ptr::eq(self.parent, group) || self.parent == group {
            Ok(())
        } else {
            Err(GroupError::ForeignSubgroup)
        }
    }

    /// True when `g H g^-1 = H`.
    pub fn is_normalized_by(&self, g: usize) -> bool {
        self.members
            .iter()
            .all(|&h| self.mask[self.parent.conjugate(h, g)])
    }

    /// `g H g^-1` as a sorted element list.
    pub fn conjugate_members(&self, g: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .members
            .iter()
            .map(|&h| self.parent.conjugate(h, g))
            .collect();
        out.sort_unstable();
        out
    }
}

impl FiniteGroup {
    pub fn generated_subgroup(&self, gens: &[usize]) -> Result<Subgroup<'_>> {
        Subgroup::generated(self, gens)
    }

    /// `C_G(H)`: elements commuting with every member of `H`.
    pub fn centralizer<'g>(&'g self, h: &Subgroup<'_>) -> Result<Subgroup<'g>> {
        h.check_parent(self)?;
        let mask = self
            .elements()
            .map(|g| h.members().iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        Ok(Subgroup::from_mask_unchecked(self, mask))
    }

    pub fn center(&self) -> Subgroup<'_> {
        let whole = Subgroup::whole(self);
        self.centralizer(&whole).expect("same parent")
    }

    /// `N_G(H) = { g : g H g^-1 = H }`.
    pub fn normalizer<'g>(&'g self, h: &Subgroup<'_>) -> Result<Subgroup<'g>> {
        h.check_parent(self)?;
        let mask = self.elements().map(|g| h.is_normalized_by(g)).collect();
        Ok(Subgroup::from_mask_unchecked(self, mask))
    }

    pub fn is_normal(&self, h: &Subgroup<'_>) -> Result<bool> {
        h.check_parent(self)?;
        Ok(self.elements().all(|g| h.is_normalized_by(g)))
    }
}
