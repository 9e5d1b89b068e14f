//! Left cosets of the cyclic subgroup generated by the n-cycle, the carrier
//! of the cyclic block permutation metric.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::{wrap_sub, Permutation};

/// A left coset sigma<omega>, stored by its canonical member: the unique
/// member fixing 1. Coset equality is plain comparison of canonical members.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CyclicCoset {
    canonical: Permutation,
}

impl CyclicCoset {
    /// Canonical representative of the coset of sigma: sigma . omega^k with
    /// k = sigma^{-1}(1) - 1, the unique member mapping 1 to 1.
    pub fn from_permutation(sigma: &Permutation) -> Self {
        let n = sigma.n();
        let k = sigma.position_of(1) as usize - 1;
        let images = (0..n)
            .map(|i| sigma.images()[(i + k) % n])
            .collect::<Vec<_>>();
        CyclicCoset {
            canonical: Permutation::new(images).expect("rotation of a permutation"),
        }
    }

    /// Wraps a permutation already in canonical form (fixing 1).
    pub fn from_canonical(p: Permutation) -> Result<Self> {
        if p.image(1) != 1 {
            return Err(Error::InvalidPermutation(
                "canonical coset member must map 1 to 1".into(),
            ));
        }
        Ok(CyclicCoset { canonical: p })
    }

    pub fn identity(n: usize) -> Self {
        CyclicCoset {
            canonical: Permutation::identity(n),
        }
    }

    pub fn canonical(&self) -> &Permutation {
        &self.canonical
    }

    pub fn n(&self) -> usize {
        self.canonical.n()
    }

    /// All n members canonical . omega^k for k = 0, ..., n-1.
    pub fn members(&self) -> impl Iterator<Item = Permutation> + '_ {
        let n = self.n();
        (0..n).map(move |k| {
            let images = (0..n)
                .map(|i| self.canonical.images()[(i + k) % n])
                .collect::<Vec<_>>();
            Permutation::new(images).expect("rotation of a permutation")
        })
    }

    /// The unique member placing value 1 at position s.
    pub fn embed(&self, s: u32) -> Result<Permutation> {
        let n = self.n();
        if s == 0 || s as usize > n {
            return Err(Error::SlotOutOfRange {
                slot: s as u64,
                n: n as u64,
            });
        }
        // canonical . omega^k with k = 1 - s (mod n) puts 1 at slot s.
        let k = (wrap_sub(1, s, n) as usize) % n;
        let images = (0..n)
            .map(|i| self.canonical.images()[(i + k) % n])
            .collect::<Vec<_>>();
        Ok(Permutation::new(images).expect("rotation of a permutation"))
    }

    /// Cyclic block permutation distance: the number of cyclic successor
    /// disagreements, equal to |A_c(sigma) \ A_c(tau)|.
    pub fn d_cyclic(&self, other: &CyclicCoset) -> Result<usize> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let a = self.canonical.cyclic_successors();
        let b = other.canonical.cyclic_successors();
        Ok(a.iter().zip(&b).filter(|(x, y)| x != y).count())
    }

    /// Distance to the identity coset.
    pub fn norm(&self) -> usize {
        let succ = self.canonical.cyclic_successors();
        succ.iter()
            .enumerate()
            .filter(|&(i, &s)| s as usize != (i + 1) % self.n() + 1)
            .count()
    }
}

impl fmt::Display for CyclicCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// The slot of sigma: the position of value 1, i.e. the unique s with
/// embed(coset(sigma), s) = sigma.
pub fn coset_slot(sigma: &Permutation) -> u32 {
    sigma.position_of(1)
}

/// The (n-1)! cosets of S_n / <omega>, addressable by lexicographic index of
/// the canonical one-line notation. Supports range sharding for parallel
/// exhaustive checks.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    n: usize,
    tail: Vec<u32>,
    len: u64,
}

impl CosetSpace {
    pub fn new(n: usize, budget: &Budget) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadParams("coset enumeration needs n >= 2".into()));
        }
        let len = budget.check_factorial(n - 1)?;
        Ok(CosetSpace {
            n,
            tail: (2..=n as u32).collect(),
            len,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The index-th coset in lexicographic order of canonical one-line
    /// notation.
    pub fn get(&self, index: u64) -> CyclicCoset {
        debug_assert!(index < self.len);
        let mut images = Vec::with_capacity(self.n);
        images.push(1);
        images.extend(Permutation::nth_arrangement(&self.tail, index));
        CyclicCoset {
            canonical: Permutation::new(images).expect("arranged tail"),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = CyclicCoset> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

/// All n! permutations of S_n in lexicographic one-line order, addressable by
/// index.
#[derive(Debug, Clone)]
pub struct PermSpace {
    n: usize,
    values: Vec<u32>,
    len: u64,
}

impl PermSpace {
    pub fn new(n: usize, budget: &Budget) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadParams(
                "permutation enumeration needs n >= 1".into(),
            ));
        }
        let len = budget.check_factorial(n)?;
        Ok(PermSpace {
            n,
            values: (1..=n as u32).collect(),
            len,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, index: u64) -> Permutation {
        debug_assert!(index < self.len);
        Permutation::new(Permutation::nth_arrangement(&self.values, index))
            .expect("arranged values")
    }

    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn canonical_rep_examples() {
        let n4 = 4;
        let w = Permutation::omega(n4);
        assert_eq!(CyclicCoset::from_permutation(&w), CyclicCoset::identity(n4));
        assert_eq!(
            CyclicCoset::from_permutation(&Permutation::identity(n4)),
            CyclicCoset::identity(n4)
        );
        // sigma = (3,1,4,2): sigma^{-1}(1) = 2, canonical = sigma . omega
        let s = perm(&[3, 1, 4, 2]);
        assert_eq!(
            CyclicCoset::from_permutation(&s).canonical(),
            &perm(&[1, 4, 2, 3])
        );
    }

    #[test]
    fn canonical_rep_matches_member_enumeration() {
        // Oracle: enumerate the n coset members and pick the one fixing 1.
        let s = perm(&[3, 1, 4, 2]);
        let coset = CyclicCoset::from_permutation(&s);
        let by_search = coset.members().find(|m| m.image(1) == 1).unwrap();
        assert_eq!(coset.canonical(), &by_search);
        // All members share the same coset.
        for m in coset.members() {
            assert_eq!(CyclicCoset::from_permutation(&m), coset);
        }
    }

    #[test]
    fn coset_slot_examples() {
        assert_eq!(coset_slot(&Permutation::identity(4)), 1);
        assert_eq!(coset_slot(&Permutation::omega(4)), 4);
        assert_eq!(coset_slot(&perm(&[3, 2, 5, 4, 1])), 5);
    }

    #[test]
    fn embed_examples() {
        let e4 = CyclicCoset::identity(4);
        assert_eq!(e4.embed(1).unwrap(), Permutation::identity(4));
        assert_eq!(e4.embed(4).unwrap(), Permutation::omega(4));
        // Enumerated-members oracle for a non-trivial coset.
        let c = CyclicCoset::from_permutation(&perm(&[1, 4, 3, 2]));
        assert_eq!(c.embed(2).unwrap(), perm(&[2, 1, 4, 3]));
        assert!(e4.embed(0).is_err());
        assert!(e4.embed(5).is_err());
    }

    #[test]
    fn embed_round_trips_with_slot() {
        let space = CosetSpace::new(5, &Budget::default()).unwrap();
        for c in space.iter() {
            for s in 1..=5u32 {
                let m = c.embed(s).unwrap();
                assert_eq!(coset_slot(&m), s);
                assert_eq!(CyclicCoset::from_permutation(&m), c);
            }
        }
    }

    #[test]
    fn d_cyclic_examples() {
        let e = CyclicCoset::identity(4);
        let w_coset = CyclicCoset::from_permutation(&Permutation::omega(4));
        assert_eq!(e.d_cyclic(&w_coset).unwrap(), 0);

        // Intersection oracle: A_c sets disjoint.
        let far = CyclicCoset::from_permutation(&perm(&[1, 4, 3, 2]));
        assert_eq!(e.d_cyclic(&far).unwrap(), 4);

        // Intersection oracle: common edge (1,2).
        let near = CyclicCoset::from_permutation(&perm(&[1, 2, 4, 3]));
        assert_eq!(e.d_cyclic(&near).unwrap(), 3);
    }

    #[test]
    fn d_cyclic_agrees_with_edge_set_difference() {
        let space = CosetSpace::new(4, &Budget::default()).unwrap();
        for a in space.iter() {
            for b in space.iter() {
                let via_sets = a
                    .canonical()
                    .cyclic_char_set()
                    .difference_size(&b.canonical().cyclic_char_set());
                assert_eq!(a.d_cyclic(&b).unwrap(), via_sets);
            }
        }
    }

    #[test]
    fn norm_examples() {
        assert_eq!(CyclicCoset::identity(4).norm(), 0);
        assert_eq!(
            CyclicCoset::from_permutation(&perm(&[1, 3, 2, 4])).norm(),
            3
        );
        assert_eq!(
            CyclicCoset::from_permutation(&perm(&[1, 4, 3, 2])).norm(),
            4
        );
    }

    #[test]
    fn norm_is_distance_to_identity() {
        let space = CosetSpace::new(6, &Budget::default()).unwrap();
        let e = CyclicCoset::identity(6);
        for c in space.iter() {
            assert_eq!(c.norm(), c.d_cyclic(&e).unwrap());
        }
    }

    #[test]
    fn coset_space_counts_and_order() {
        let space = CosetSpace::new(3, &Budget::default()).unwrap();
        let all: Vec<_> = space.iter().collect();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].canonical(), &perm(&[1, 2, 3]));
        assert_eq!(all[1].canonical(), &perm(&[1, 3, 2]));

        assert_eq!(CosetSpace::new(4, &Budget::default()).unwrap().len(), 6);
        assert_eq!(CosetSpace::new(8, &Budget::default()).unwrap().len(), 5040);
    }

    #[test]
    fn coset_space_respects_budget() {
        let tight = Budget {
            enumeration: 100,
            ..Budget::default()
        };
        assert!(CosetSpace::new(6, &tight).is_err()); // 5! = 120 > 100
        assert!(CosetSpace::new(5, &tight).is_ok()); // 4! = 24
                                                     // Way past u64 factorials must still error cleanly.
        assert!(CosetSpace::new(10_000, &Budget::default()).is_err());
    }
}
