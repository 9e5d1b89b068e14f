//! Block permutation codes: the label map that partitions S_n into
//! block-metric codes, extension sequences, Reed-Solomon auxiliary sets, and
//! the explicit systematic encoder built from them.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{smallest_prime_geq, smallest_prime_geq_half, QuotientVector};
use crate::budget::Budget;
use crate::codebook::{Codebook, Metric};
use crate::coset::{coset_slot, CyclicCoset, PermSpace};
use crate::cyclic::CodeParams;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The class label of a permutation: the fiber key of its coset (computed at
/// polynomial degree d-1) paired with the slot of value 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NablaLabel {
    pub key: QuotientVector,
    pub slot: u32,
}

impl std::fmt::Display for NablaLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "key={} slot={}", self.key.render(), self.slot)
    }
}

/// Parameters for the block-metric partition at (n, d): internally the coset
/// code map with modulus degree (d+1) - 2 = d - 1.
#[derive(Debug, Clone)]
pub struct BlockParams {
    inner: CodeParams,
    d: usize,
}

impl BlockParams {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n < 4 || d < 4 {
            return Err(Error::BadParams(format!(
                "need n >= 4 and d >= 4, got n={n}, d={d}"
            )));
        }
        Ok(BlockParams {
            inner: CodeParams::new(n, d + 1)?,
            d,
        })
    }

    pub fn n(&self) -> usize {
        self.inner.n()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn p(&self) -> u64 {
        self.inner.p()
    }

    pub fn inner(&self) -> &CodeParams {
        &self.inner
    }

    /// Label of sigma; permutations sharing a label lie in the same
    /// block-metric class of minimum distance >= d.
    pub fn nabla(&self, sigma: &Permutation) -> Result<NablaLabel> {
        if sigma.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: sigma.n(),
                right: self.n(),
            });
        }
        let key = self
            .inner
            .delta_key(&CyclicCoset::from_permutation(sigma))?;
        Ok(NablaLabel {
            key,
            slot: coset_slot(sigma),
        })
    }

    /// Exhaustive partition of S_n into labelled classes, each a block-metric
    /// codebook claiming distance d.
    pub fn partition(&self, budget: &Budget) -> Result<BTreeMap<NablaLabel, Codebook>> {
        let space = PermSpace::new(self.n(), budget)?;
        let classes = (0..space.len())
            .into_par_iter()
            .fold(
                BTreeMap::<NablaLabel, Vec<Permutation>>::new,
                |mut acc, i| {
                    let sigma = space.get(i);
                    let label = self.nabla(&sigma).expect("space matches params");
                    acc.entry(label).or_default().push(sigma);
                    acc
                },
            )
            .reduce(BTreeMap::new, |mut left, right| {
                for (k, mut v) in right {
                    left.entry(k).or_default().append(&mut v);
                }
                left
            });
        let n = self.n();
        let d = self.d;
        Ok(classes
            .into_iter()
            .map(|(label, members)| {
                let book = Codebook::new(
                    Metric::Block,
                    n,
                    d,
                    format!("class n={n} d={d} p={} {label}", self.p()),
                    members,
                )
                .expect("class members share n");
                (label, book)
            })
            .collect())
    }
}

/// A sequence of insertion targets (s_1, ..., s_K), each in {1, ..., base}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSequence {
    base: usize,
    entries: Vec<u32>,
}

impl ExtensionSequence {
    pub fn new(base: usize, entries: Vec<u32>) -> Result<Self> {
        for &s in &entries {
            if s == 0 || s as usize > base {
                return Err(Error::EntryOutOfRange {
                    value: s as u64,
                    n: base as u64,
                });
            }
        }
        Ok(ExtensionSequence { base, entries })
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl std::fmt::Display for ExtensionSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The extended permutation: inserts n+1, ..., n+K sequentially, each n+m
/// placed immediately after the current position of the value s_m. Repeated
/// targets therefore accumulate in descending order right after the target.
///
/// ```
/// use blockperm::block::{extend, ExtensionSequence};
/// use blockperm::Permutation;
///
/// let sigma = Permutation::new(vec![3, 1, 2]).unwrap();
/// let seq = ExtensionSequence::new(3, vec![1, 1]).unwrap();
/// // 4 lands after 1, then 5 lands after 1 as well, pushing 4 right.
/// assert_eq!(
///     extend(&sigma, &seq).unwrap(),
///     Permutation::new(vec![3, 1, 5, 4, 2]).unwrap()
/// );
/// ```
pub fn extend(sigma: &Permutation, seq: &ExtensionSequence) -> Result<Permutation> {
    if seq.base() != sigma.n() {
        return Err(Error::SizeMismatch {
            left: seq.base(),
            right: sigma.n(),
        });
    }
    let n = sigma.n();
    let mut images: Vec<u32> = sigma.images().to_vec();
    for (m, &target) in seq.entries().iter().enumerate() {
        let pos = images
            .iter()
            .position(|&v| v == target)
            .expect("targets stay present");
        images.insert(pos + 1, (n + m + 1) as u32);
    }
    Permutation::new(images)
}

/// Deletes all values above n, recovering the information permutation of a
/// systematic codeword.
pub fn project(extended: &Permutation, n: usize) -> Permutation {
    let images: Vec<u32> = extended
        .images()
        .iter()
        .copied()
        .filter(|&v| v as usize <= n)
        .collect();
    Permutation::new(images).expect("projection of a permutation")
}

/// The Hamming set of s1 with respect to s2: first-sequence entries at
/// disagreeing positions (set semantics, duplicates collapse).
pub fn hamming_set(s1: &ExtensionSequence, s2: &ExtensionSequence) -> Result<BTreeSet<u32>> {
    if s1.len() != s2.len() {
        return Err(Error::SizeMismatch {
            left: s1.len(),
            right: s2.len(),
        });
    }
    Ok(s1
        .entries()
        .iter()
        .zip(s2.entries())
        .filter(|(a, b)| a != b)
        .map(|(&a, _)| a)
        .collect())
}

/// A Reed-Solomon code over F_q evaluated at the points 0, ..., length-1:
/// message t encodes as the base-q digits of t read as polynomial
/// coefficients (degree < dim) evaluated pointwise.
#[derive(Debug, Clone)]
pub struct RsCode {
    q: u64,
    length: usize,
    dim: usize,
}

impl RsCode {
    pub fn new(q: u64, length: usize, dim: usize) -> Result<Self> {
        if !crate::algebra::is_prime(q) {
            return Err(Error::BadParams(format!("{q} is not prime")));
        }
        if length as u64 > q {
            return Err(Error::BadParams(format!(
                "length {length} exceeds the {q} distinct evaluation points"
            )));
        }
        if dim == 0 || dim > length {
            return Err(Error::BadParams(format!(
                "dimension {dim} out of range 1..={length}"
            )));
        }
        Ok(RsCode { q, length, dim })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// q^dim when it fits in u128.
    pub fn size(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for _ in 0..self.dim {
            acc = acc.checked_mul(self.q as u128)?;
        }
        Some(acc)
    }

    /// Codeword of message index t, as raw F_q values.
    pub fn codeword(&self, t: u128) -> Result<Vec<u64>> {
        if let Some(size) = self.size() {
            if t >= size {
                return Err(Error::BadParams(format!(
                    "message index {t} out of range 0..{size}"
                )));
            }
        }
        let mut digits = Vec::with_capacity(self.dim);
        let mut rest = t;
        for _ in 0..self.dim {
            digits.push((rest % self.q as u128) as u64);
            rest /= self.q as u128;
        }
        // Horner evaluation at each point.
        Ok((0..self.length as u64)
            .map(|x| {
                let mut acc = 0u64;
                for &c in digits.iter().rev() {
                    acc = (acc * x + c) % self.q;
                }
                acc
            })
            .collect())
    }
}

/// A d-auxiliary set of length 3d-1 over {1, ..., n}: the Reed-Solomon code
/// RS_q[3d-1, 2d, d] with values shifted into {1, ..., q}. Any two distinct
/// members differ in at least d coordinates.
#[derive(Debug, Clone)]
pub struct AuxiliarySet {
    n: usize,
    d: usize,
    q: u64,
    rs: RsCode,
}

impl AuxiliarySet {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        let p = smallest_prime_geq(n as u64);
        let q = smallest_prime_geq_half(n as u64);
        if n < 12 {
            return Err(Error::HypothesisViolated(format!("n >= 12 (n={n})")));
        }
        if d < 4 {
            return Err(Error::HypothesisViolated(format!("d >= 4 (d={d})")));
        }
        if n < 6 * d {
            return Err(Error::HypothesisViolated(format!(
                "n >= 6d ({n} < {})",
                6 * d
            )));
        }
        if (3 * d - 1) as u64 > q {
            return Err(Error::HypothesisViolated(format!(
                "3d-1 <= q ({} > {q})",
                3 * d - 1
            )));
        }
        if 4 * q + 4 < p {
            return Err(Error::HypothesisViolated(format!(
                "4q+4 >= p ({} < {p})",
                4 * q + 4
            )));
        }
        // Size chain: |RS| = q^{2d} must cover the n*p^{d-1} labels.
        let labels = BigUint::from(n) * BigUint::from(p).pow(d as u32 - 1);
        let size = BigUint::from(q).pow(2 * d as u32);
        if size < labels {
            return Err(Error::HypothesisViolated(format!(
                "q^(2d) >= n*p^(d-1) ({size} < {labels})"
            )));
        }
        let rs = RsCode::new(q, 3 * d - 1, 2 * d)?;
        Ok(AuxiliarySet { n, d, q, rs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Sequence length K = 3d - 1.
    pub fn len(&self) -> usize {
        self.rs.length()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of members, q^{2d}.
    pub fn size(&self) -> u128 {
        self.rs.size().expect("checked at construction")
    }

    /// Member for message index t: RS codeword values shifted by +1 into
    /// {1, ..., q} <= {1, ..., n}.
    pub fn member(&self, t: u128) -> Result<ExtensionSequence> {
        let values = self.rs.codeword(t)?;
        ExtensionSequence::new(self.n, values.iter().map(|&v| v as u32 + 1).collect())
    }
}

/// The explicit systematic encoder: sigma extends by the auxiliary member
/// selected by its class label, producing a codeword in S_{n + 3d - 1} that
/// still contains sigma as the subsequence of values <= n.
#[derive(Debug, Clone)]
pub struct SystematicEncoder {
    block: BlockParams,
    aux: AuxiliarySet,
}

impl SystematicEncoder {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        let aux = AuxiliarySet::new(n, d)?;
        Ok(SystematicEncoder {
            block: BlockParams::new(n, d)?,
            aux,
        })
    }

    pub fn n(&self) -> usize {
        self.block.n()
    }

    pub fn d(&self) -> usize {
        self.block.d()
    }

    pub fn aux(&self) -> &AuxiliarySet {
        &self.aux
    }

    pub fn block(&self) -> &BlockParams {
        &self.block
    }

    /// Codeword length N = n + 3d - 1.
    pub fn codeword_len(&self) -> usize {
        self.n() + self.aux.len()
    }

    /// The injection from labels into auxiliary message indices:
    /// mixed-radix rank (sum key_i * p^i) * n + (slot - 1).
    pub fn label_rank(&self, label: &NablaLabel) -> Result<u128> {
        let p = self.block.p() as u128;
        let mut key_rank: u128 = 0;
        for &c in label.key.coords().iter().rev() {
            key_rank = key_rank
                .checked_mul(p)
                .and_then(|r| r.checked_add(c as u128))
                .ok_or(Error::Overflow("label rank"))?;
        }
        key_rank
            .checked_mul(self.n() as u128)
            .and_then(|r| r.checked_add(label.slot as u128 - 1))
            .ok_or(Error::Overflow("label rank"))
    }

    pub fn encode(&self, sigma: &Permutation) -> Result<Permutation> {
        let label = self.block.nabla(sigma)?;
        let seq = self.aux.member(self.label_rank(&label)?)?;
        extend(sigma, &seq)
    }
}

/// Distance report for a pair of equal-length permutations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub d_block: usize,
    pub required: usize,
    pub pass: bool,
}

/// Computes d_B and checks it against the required distance; identical
/// inputs report distance 0 and fail.
pub fn verify_pair(a: &Permutation, b: &Permutation, required: usize) -> Result<PairReport> {
    let d_block = a.d_block(b)?;
    Ok(PairReport {
        d_block,
        required,
        pass: d_block >= required,
    })
}
