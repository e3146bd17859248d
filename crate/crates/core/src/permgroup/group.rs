use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::permgroup::Permutation;

/// Largest element set [`PermutationGroup::closure`] will build.
pub const MAX_GROUP_ORDER: usize = 1_000_000;

/// A subgroup of `S_n`, stored as its full (sorted) element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    n: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    /// Breadth-first closure of `generators` inside `S_n`.
    pub fn closure(generators: Vec<Permutation>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != n) {
            return Err(Error::MixedDegrees {
                expected: n,
                found: g.degree(),
            });
        }

        let identity = Permutation::identity(n);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= MAX_GROUP_ORDER {
                        return Err(Error::GroupTooLarge {
                            limit: MAX_GROUP_ORDER,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }

        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(PermutationGroup {
            n,
            elements,
            generators,
        })
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::closure(Vec::new(), n)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in lexicographic order of their images.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// All transpositions in the group, in element order.
    pub fn transpositions(&self) -> Vec<Permutation> {
        self.elements
            .iter()
            .filter(|g| g.is_transposition())
            .cloned()
            .collect()
    }

    pub fn has_transposition(&self) -> bool {
        self.elements.iter().any(Permutation::is_transposition)
    }

    /// Number of conjugacy orbits of transpositions in the group, which is
    /// the number of irreducible components of the branch divisor of
    /// `A^n → A^n / G`.
    ///
    /// Orbits under the group coincide with orbits under its generators.
    pub fn branch_components(&self) -> usize {
        let transpositions = self.transpositions();
        let mut visited: HashSet<&Permutation> = HashSet::new();
        let mut orbits = 0;
        for t in &transpositions {
            if visited.contains(t) {
                continue;
            }
            orbits += 1;
            let mut stack = vec![t.clone()];
            visited.insert(t);
            while let Some(x) = stack.pop() {
                for g in &self.generators {
                    let y = x.conjugate_by(g);
                    if let Some(found) = transpositions.iter().find(|s| **s == y) {
                        if visited.insert(found) {
                            stack.push(y);
                        }
                    }
                }
            }
        }
        orbits
    }

    /// Whether every element is an even permutation.
    pub fn is_even(&self) -> bool {
        self.generators.iter().all(Permutation::is_even)
    }

    /// Largest fixed-space dimension of a non-identity element, an upper
    /// bound on the dimension of the locus with non-trivial stabilizer.
    pub fn max_nontrivial_fixed_dimension(&self) -> Option<usize> {
        self.elements
            .iter()
            .filter(|g| !g.is_identity())
            .map(Permutation::fixed_space_dimension)
            .max()
    }

    /// `σ G σ⁻¹`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.conjugate_by(sigma))
            .collect();
        Self::closure(gens, self.n)
    }
}
