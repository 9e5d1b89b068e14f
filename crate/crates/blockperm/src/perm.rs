//! Permutations in one-line notation, their characteristic edge sets, and the
//! block permutation distance.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zn::{add_mod, sub_mod};

/// A permutation of {1, ..., n} stored in one-line notation: `images[i-1]`
/// is the image of position i.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation, checking that the
    /// sequence is a bijection of {1, ..., n}.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (pos, &v) in images.iter().enumerate() {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidPermutation(format!(
                    "position {}: value {} out of range 1..={}",
                    pos + 1,
                    v,
                    n
                )));
            }
            if seen[v as usize - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "position {}: value {} repeated",
                    pos + 1,
                    v
                )));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    /// The n-cycle sending i to i+1, one-line form (2, 3, ..., n, 1).
    pub fn omega(n: usize) -> Self {
        let mut images: Vec<u32> = (2..=n as u32).collect();
        images.push(1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of position i (1-based).
    pub fn image(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    /// (self . other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let images = other.images.iter().map(|&v| self.image(v)).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.n()];
        for (pos, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = pos as u32 + 1;
        }
        Permutation { images }
    }

    /// Position of value v (1-based), i.e. the image of v under the inverse.
    pub fn position_of(&self, v: u32) -> u32 {
        self.images.iter().position(|&x| x == v).unwrap() as u32 + 1
    }

    /// The characteristic set A: the n-1 adjacent ordered pairs
    /// (image(i), image(i+1)).
    pub fn char_set(&self) -> EdgeSet {
        let edges = self
            .images
            .windows(2)
            .map(|w| (w[0], w[1]))
            .collect::<BTreeSet<_>>();
        EdgeSet { edges }
    }

    /// The cyclic characteristic set A_c: A plus the wraparound pair
    /// (image(n), image(1)).
    pub fn cyclic_char_set(&self) -> EdgeSet {
        let mut set = self.char_set();
        let n = self.n();
        set.edges.insert((self.images[n - 1], self.images[0]));
        EdgeSet { edges: set.edges }
    }

    /// The cyclic successor table: entry v-1 holds the value that follows v
    /// when the one-line notation is read cyclically. This is A_c viewed as
    /// a function of the first coordinate.
    pub fn cyclic_successors(&self) -> Vec<u32> {
        let n = self.n();
        let mut succ = vec![0u32; n];
        for i in 0..n {
            let v = self.images[i] as usize;
            succ[v - 1] = self.images[(i + 1) % n];
        }
        succ
    }

    /// Block permutation distance |A(self) \ A(other)|.
    pub fn d_block(&self, other: &Permutation) -> Result<usize> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let n = self.n();
        // Plain (non-cyclic) successor table of `other`: entry v-1 is the
        // value following v, or 0 when v is last.
        let mut succ = vec![0u32; n];
        for w in other.images.windows(2) {
            succ[w[0] as usize - 1] = w[1];
        }
        let mut diff = 0;
        for w in self.images.windows(2) {
            if succ[w[0] as usize - 1] != w[1] {
                diff += 1;
            }
        }
        Ok(diff)
    }

    /// Uniformly random permutation of {1, ..., n}.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        use rand::seq::SliceRandom;
        let mut images: Vec<u32> = (1..=n as u32).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    /// The index-th permutation (0-based) of `values` in lexicographic order,
    /// by the factorial number system.
    pub(crate) fn nth_arrangement(values: &[u32], mut index: u64) -> Vec<u32> {
        let mut pool: Vec<u32> = values.to_vec();
        let k = pool.len();
        let mut out = Vec::with_capacity(k);
        let mut radix: u64 = (1..=k as u64).product();
        for remaining in (1..=k).rev() {
            radix /= remaining as u64;
            let pick = (index / radix) as usize;
            index %= radix;
            out.push(pool.remove(pick));
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.images {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses one-line notation from whitespace-separated integers, reporting
/// the offending token on failure.
impl std::str::FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut images = Vec::new();
        for (i, tok) in s.split_whitespace().enumerate() {
            let v: u32 = tok.parse().map_err(|_| {
                Error::InvalidPermutation(format!("token {}: '{}' is not an integer", i + 1, tok))
            })?;
            images.push(v);
        }
        if images.is_empty() {
            return Err(Error::InvalidPermutation("empty input".into()));
        }
        Permutation::new(images)
    }
}

/// A set of ordered pairs over {1, ..., n}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSet {
    edges: BTreeSet<(u32, u32)>,
}

impl EdgeSet {
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        EdgeSet {
            edges: pairs.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, edge: (u32, u32)) -> bool {
        self.edges.contains(&edge)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    /// |self \ other|
    pub fn difference_size(&self, other: &EdgeSet) -> usize {
        self.edges.difference(&other.edges).count()
    }

    /// |self n other|
    pub fn intersection_size(&self, other: &EdgeSet) -> usize {
        self.edges.intersection(&other.edges).count()
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet {
            edges: self.edges.difference(&other.edges).copied().collect(),
        }
    }
}

/// The value that follows i in the cyclic reading of sigma, computed
/// through the inverse as sigma(sigma^{-1}(i) + 1) with wraparound
/// arithmetic rather than by scanning adjacent pairs.
pub fn cyclic_successor_of(sigma: &Permutation, i: u32) -> u32 {
    let n = sigma.n() as u64;
    let j = sigma.position_of(i) as u64;
    sigma.image(add_mod(j, 1, n) as u32)
}

pub(crate) fn wrap_add(i: u32, j: u32, n: usize) -> u32 {
    add_mod(i as u64, j as u64, n as u64) as u32
}

pub(crate) fn wrap_sub(i: u32, j: u32, n: usize) -> u32 {
    sub_mod(i as u64, j as u64, n as u64) as u32
}
