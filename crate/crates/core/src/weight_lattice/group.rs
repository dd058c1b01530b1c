use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A permutation of {0, …, n−1} in one-line notation: `p[i]` is the image of `i`.
pub type Permutation = Vec<usize>;

/// Finite permutation group given by generators, with all elements materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree > super::descriptor::MAX_CENTER_DEGREE {
            return Err(Error::ResourceLimit(format!(
                "permutation degree {degree} exceeds the cap {}",
                super::descriptor::MAX_CENTER_DEGREE
            )));
        }
        for p in &generators {
            Self::check_permutation(degree, p)?;
        }
        let elements = close(degree, &generators);
        Ok(PermutationGroup { degree, generators, elements })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            elements: vec![identity(degree)],
        }
    }

    /// Generators (0 1) and (0 1 … n−1) of the full symmetric group.
    pub fn symmetric_generators(n: usize) -> Vec<Permutation> {
        if n < 2 {
            return Vec::new();
        }
        let mut swap = identity(n);
        swap.swap(0, 1);
        let cycle: Permutation = (0..n).map(|i| (i + 1) % n).collect();
        if n == 2 {
            vec![swap]
        } else {
            vec![swap, cycle]
        }
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        Self::new(n, Self::symmetric_generators(n))
    }

    pub fn check_permutation(degree: usize, p: &[usize]) -> Result<()> {
        if p.len() != degree {
            return Err(Error::Descriptor(format!(
                "permutation {p:?} has length {}, expected {degree}",
                p.len()
            )));
        }
        let mut seen = vec![false; degree];
        for &x in p {
            if x >= degree || seen[x] {
                return Err(Error::Descriptor(format!("{p:?} is not a permutation of 0..{degree}")));
            }
            seen[x] = true;
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_transitive(&self) -> bool {
        if self.degree == 0 {
            return true;
        }
        let reached: BTreeSet<usize> = self.elements.iter().map(|p| p[0]).collect();
        reached.len() == self.degree
    }

    /// Moves the entry at position `s` to position `p[s]`.
    pub fn act<T: Clone>(p: &[usize], items: &[T]) -> Vec<T> {
        let mut out = items.to_vec();
        for (s, item) in items.iter().enumerate() {
            out[p[s]] = item.clone();
        }
        out
    }
}

fn identity(n: usize) -> Permutation {
    (0..n).collect()
}

fn compose(a: &[usize], b: &[usize]) -> Permutation {
    // a ∘ b
    b.iter().map(|&x| a[x]).collect()
}

fn close(degree: usize, generators: &[Permutation]) -> Vec<Permutation> {
    let id = identity(degree);
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(p) = queue.pop_front() {
        for s in generators {
            let q = compose(s, &p);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.into_iter().collect()
}
