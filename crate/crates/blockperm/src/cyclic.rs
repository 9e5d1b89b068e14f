//! The residue-group code map on cosets: assigns each coset the class of
//! prod_i (x - alpha_{sigma(i)})^{sigma(i+1)} in G/G^p, where
//! G = (F_p[x]/(f^2))^x. Non-empty fibers are cyclic block permutation codes
//! with minimum distance at least deg(f) + 2.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{
    find_irreducible, smallest_prime_geq, Poly, PolyResidue, QuotientVector, ResidueRing,
};
use crate::budget::Budget;
use crate::codebook::{Certification, Codebook, Metric};
use crate::coset::{CosetSpace, CyclicCoset};
use crate::error::{Error, Result};

/// Deterministic parameter bundle for the code map at (n, d): the prime
/// p >= n, the irreducible f of degree d-2, evaluation shifts
/// alpha_i = i - 1, and the precomputed image of each x - alpha_i under the
/// quotient homomorphism.
#[derive(Debug, Clone)]
pub struct CodeParams {
    n: usize,
    d: usize,
    p: u64,
    ring: Arc<ResidueRing>,
    alphas: Vec<u64>,
    factor_keys: Vec<QuotientVector>,
}

impl CodeParams {
    /// The fully deterministic bundle: p the least prime >= n, f the first
    /// monic irreducible of degree d-2 in lexicographic order.
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n < 4 || d < 4 {
            return Err(Error::BadParams(format!(
                "need n >= 4 and d >= 4, got n={n}, d={d}"
            )));
        }
        let p = smallest_prime_geq(n as u64);
        let f = find_irreducible(p, d - 2);
        Self::with_modulus(n, d, f)
    }

    /// Same bundle with a caller-supplied irreducible f (degree must be
    /// d-2 over the canonical prime).
    pub fn with_modulus(n: usize, d: usize, f: Poly) -> Result<Self> {
        if n < 4 || d < 4 {
            return Err(Error::BadParams(format!(
                "need n >= 4 and d >= 4, got n={n}, d={d}"
            )));
        }
        let p = smallest_prime_geq(n as u64);
        if f.prime() != p {
            return Err(Error::BadParams(format!(
                "modulus is over F_{}, expected F_{}",
                f.prime(),
                p
            )));
        }
        if f.degree() != Some(d - 2) {
            return Err(Error::BadParams(format!(
                "modulus degree {:?} != d-2 = {}",
                f.degree(),
                d - 2
            )));
        }
        let ring = ResidueRing::new(f)?;
        let alphas: Vec<u64> = (0..n as u64).collect();
        // f is irreducible of degree >= 2, so it has no roots in F_p and
        // every x - alpha is a unit; its image under the quotient map is
        // computed once here.
        let factor_keys = alphas
            .iter()
            .map(|&a| PolyResidue::x_minus(&ring, a).quotient_map())
            .collect::<Result<Vec<_>>>()?;
        Ok(CodeParams {
            n,
            d,
            p,
            ring,
            alphas,
            factor_keys,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> &Poly {
        self.ring.modulus()
    }

    pub fn ring(&self) -> &Arc<ResidueRing> {
        &self.ring
    }

    pub fn alphas(&self) -> &[u64] {
        &self.alphas
    }

    /// Number of possible keys, p^(d-2), when it fits in u64.
    pub fn key_space_size(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for _ in 0..self.d - 2 {
            acc = acc.checked_mul(self.p)?;
        }
        Some(acc)
    }

    /// The fiber key of a coset: the quotient-map image of
    /// prod_{i in Z_n} (x - alpha_{sigma(i)})^{sigma(i+1)} for any member
    /// sigma. The quotient map is a homomorphism, so the product's image is
    /// the exponent-weighted sum of the precomputed factor images.
    pub fn delta_key(&self, coset: &CyclicCoset) -> Result<QuotientVector> {
        if coset.n() != self.n {
            return Err(Error::SizeMismatch {
                left: coset.n(),
                right: self.n,
            });
        }
        let sigma = coset.canonical().images();
        let m = self.ring.degree();
        let mut acc = QuotientVector::zero(m);
        for i in 0..self.n {
            let value = sigma[i] as usize; // sigma(i)
            let exponent = sigma[(i + 1) % self.n] as u64; // sigma(i + 1), cyclically
            let term = self.factor_keys[value - 1].scale_mod(exponent, self.p);
            acc = acc.add_mod(&term, self.p);
        }
        Ok(acc)
    }
}

/// All cosets of S_n/<omega> grouped by fiber key.
#[derive(Debug, Clone)]
pub struct FiberTable {
    n: usize,
    d: usize,
    p: u64,
    modulus: Poly,
    fibers: BTreeMap<QuotientVector, Vec<CyclicCoset>>,
}

impl FiberTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn num_fibers(&self) -> usize {
        self.fibers.len()
    }

    pub fn total_cosets(&self) -> u64 {
        self.fibers.values().map(|v| v.len() as u64).sum()
    }

    pub fn get(&self, key: &QuotientVector) -> Option<&[CyclicCoset]> {
        self.fibers.get(key).map(|v| v.as_slice())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&QuotientVector, &[CyclicCoset])> {
        self.fibers.iter().map(|(k, v)| (k, v.as_slice()))
    }

    /// The largest fiber; ties broken by lexicographically smallest key.
    pub fn best(&self) -> (&QuotientVector, &[CyclicCoset]) {
        let mut best: Option<(&QuotientVector, &Vec<CyclicCoset>)> = None;
        for (k, v) in &self.fibers {
            match best {
                Some((_, bv)) if v.len() <= bv.len() => {}
                _ => best = Some((k, v)),
            }
        }
        let (k, v) = best.expect("non-empty table");
        (k, v.as_slice())
    }

    fn label(&self, key: &QuotientVector) -> String {
        format!(
            "fiber n={} d={} p={} f={} key={}",
            self.n,
            self.d,
            self.p,
            self.modulus.render(),
            key.render()
        )
    }

    /// One fiber as a cyclic-metric codebook claiming distance d.
    pub fn fiber_codebook(&self, key: &QuotientVector) -> Option<Codebook> {
        let cosets = self.fibers.get(key)?;
        let members = cosets.iter().map(|c| c.canonical().clone()).collect();
        Some(
            Codebook::new(Metric::Cyclic, self.n, self.d, self.label(key), members)
                .expect("fiber members share n"),
        )
    }

    /// The largest fiber as a codebook (pigeonhole bound best candidate).
    pub fn best_codebook(&self) -> Codebook {
        let (key, _) = self.best();
        self.fiber_codebook(&key.clone()).expect("best key exists")
    }

    /// Exact certification of every fiber with at least two members.
    pub fn certify_all(&self, budget: &Budget) -> Result<Vec<(QuotientVector, Certification)>> {
        let mut out = Vec::new();
        for (key, cosets) in &self.fibers {
            if cosets.len() < 2 {
                continue;
            }
            let book = self.fiber_codebook(key).expect("key exists");
            out.push((key.clone(), book.certify(budget)?));
        }
        Ok(out)
    }
}

/// Exhaustively assigns every coset of S_n/<omega> to its fiber.
pub fn build_fibers(params: &CodeParams, budget: &Budget) -> Result<FiberTable> {
    let space = CosetSpace::new(params.n, budget)?;
    let fibers = (0..space.len())
        .into_par_iter()
        .fold(
            BTreeMap::<QuotientVector, Vec<CyclicCoset>>::new,
            |mut acc, i| {
                let coset = space.get(i);
                let key = params.delta_key(&coset).expect("space matches params");
                acc.entry(key).or_default().push(coset);
                acc
            },
        )
        .reduce(BTreeMap::new, |mut left, right| {
            for (k, mut v) in right {
                left.entry(k).or_default().append(&mut v);
            }
            left
        });
    Ok(FiberTable {
        n: params.n,
        d: params.d,
        p: params.p,
        modulus: params.modulus().clone(),
        fibers,
    })
}
