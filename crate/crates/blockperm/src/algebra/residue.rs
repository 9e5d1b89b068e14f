//! The residue ring F_p[x]/(f^2) for an irreducible f, its unit group G, and
//! the homomorphism G -> F_p^m (m = deg f) whose kernel is the subgroup of
//! p-th powers.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::poly::Poly;

/// Shared modulus data: the irreducible f, its square, and p.
#[derive(Debug, PartialEq, Eq)]
pub struct ResidueRing {
    p: u64,
    f: Poly,
    f_squared: Poly,
    m: usize,
}

impl ResidueRing {
    pub fn new(f: Poly) -> Result<Arc<Self>> {
        let m = f
            .degree()
            .ok_or_else(|| Error::BadParams("modulus must be nonzero".into()))?;
        if m == 0 {
            return Err(Error::BadParams("modulus must have degree >= 1".into()));
        }
        if !f.is_irreducible() {
            return Err(Error::BadParams(format!("{f} is reducible")));
        }
        let f_squared = f.mul(&f)?;
        Ok(Arc::new(ResidueRing {
            p: f.prime(),
            f,
            f_squared,
            m,
        }))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> &Poly {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    /// p^m - 1, the exponent that projects a unit onto the 1 + f*g factor.
    fn unit_exponent(&self) -> BigUint {
        BigUint::from(self.p).pow(self.m as u32) - BigUint::one()
    }
}

/// A residue class mod f^2 carrying its ring; binary operations check that
/// both operands live in the same ring.
#[derive(Debug, Clone)]
pub struct PolyResidue {
    value: Poly,
    ring: Arc<ResidueRing>,
}

impl PartialEq for PolyResidue {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.value == other.value
    }
}

impl Eq for PolyResidue {}

impl PolyResidue {
    pub fn new(ring: &Arc<ResidueRing>, value: Poly) -> Result<Self> {
        if value.prime() != ring.p {
            return Err(Error::ModulusMismatch {
                left: value.prime(),
                right: ring.p,
            });
        }
        Ok(PolyResidue {
            value: value.rem(&ring.f_squared)?,
            ring: ring.clone(),
        })
    }

    pub fn one(ring: &Arc<ResidueRing>) -> Self {
        PolyResidue {
            value: Poly::one(ring.p),
            ring: ring.clone(),
        }
    }

    /// The residue of x - a.
    pub fn x_minus(ring: &Arc<ResidueRing>, a: u64) -> Self {
        PolyResidue {
            value: Poly::x_minus(ring.p, a),
            ring: ring.clone(),
        }
    }

    pub fn value(&self) -> &Poly {
        &self.value
    }

    pub fn ring(&self) -> &Arc<ResidueRing> {
        &self.ring
    }

    pub fn is_unit(&self) -> bool {
        self.value
            .gcd(&self.ring.f)
            .map(|g| g.degree() == Some(0))
            .unwrap_or(false)
    }

    fn check(&self, other: &PolyResidue) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::BadParams(
                "residues belong to different rings".into(),
            ));
        }
        Ok(())
    }

    pub fn mul(&self, other: &PolyResidue) -> Result<PolyResidue> {
        self.check(other)?;
        Ok(PolyResidue {
            value: self.value.mul(&other.value)?.rem(&self.ring.f_squared)?,
            ring: self.ring.clone(),
        })
    }

    pub fn pow(&self, exp: &BigUint) -> Result<PolyResidue> {
        Ok(PolyResidue {
            value: self.value.pow_mod(exp, &self.ring.f_squared)?,
            ring: self.ring.clone(),
        })
    }

    /// The image of this unit in F_p^m under the homomorphism with kernel
    /// G^p: raise to p^m - 1, which lands in 1 + f*F_p[x]/(f), and read off
    /// the cofactor of f.
    pub fn quotient_map(&self) -> Result<QuotientVector> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.value.render()));
        }
        let u = self.pow(&self.ring.unit_exponent())?;
        let shifted = u.value.sub(&Poly::one(self.ring.p))?;
        let (g, rem) = shifted.div_rem(&self.ring.f)?;
        assert!(rem.is_zero(), "unit raised to p^m - 1 must be 1 mod f");
        let coords = (0..self.ring.m).map(|k| g.coeff(k)).collect();
        Ok(QuotientVector { coords })
    }
}

impl fmt::Display for PolyResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value.render())
    }
}

/// A vector over F_p indexing a fiber of the code map; ordering is
/// lexicographic on coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QuotientVector {
    coords: Vec<u64>,
}

impl QuotientVector {
    pub fn new(coords: Vec<u64>) -> Self {
        QuotientVector { coords }
    }

    pub fn zero(m: usize) -> Self {
        QuotientVector { coords: vec![0; m] }
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add_mod(&self, other: &QuotientVector, p: u64) -> QuotientVector {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a + b) % p)
            .collect();
        QuotientVector { coords }
    }

    pub fn scale_mod(&self, c: u64, p: u64) -> QuotientVector {
        let c = c % p;
        QuotientVector {
            coords: self.coords.iter().map(|&a| a * c % p).collect(),
        }
    }

    /// Comma-separated digits, the serialized fiber-key form.
    pub fn render(&self) -> String {
        self.coords
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut coords = Vec::new();
        for (i, tok) in s.split(',').enumerate() {
            let c: u64 = tok.trim().parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("key digit {}: '{}' is not an integer", i + 1, tok.trim()),
            })?;
            coords.push(c);
        }
        Ok(QuotientVector { coords })
    }
}

impl fmt::Display for QuotientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
