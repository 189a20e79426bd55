use super::FiniteGroup;
use crate::error::{Error, Result};

/// A subgroup of a [`FiniteGroup`], stored as a sorted element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    group: FiniteGroup,
    elements: Vec<usize>,
    normal: bool,
}

impl Subgroup {
    /// Checks closure and computes the normality flag.
    pub fn new(group: FiniteGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&bad) = elements.iter().find(|&&x| x >= group.order()) {
            return Err(Error::precondition(format!(
                "element {bad} is not in {}",
                group.label()
            )));
        }
        if !group.is_subgroup(&elements) {
            return Err(Error::precondition(format!(
                "{elements:?} is not a subgroup of {}",
                group.label()
            )));
        }
        let normal = group.is_normal_set(&elements);
        Ok(Subgroup {
            group,
            elements,
            normal,
        })
    }

    pub(crate) fn trusted(group: FiniteGroup, elements: Vec<usize>, normal: bool) -> Self {
        Subgroup {
            group,
            elements,
            normal,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elements: Vec<usize> = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        let normal = self.normal && other.normal || self.group.is_normal_set(&elements);
        Subgroup::trusted(self.group.clone(), elements, normal)
    }
}
