//! Dense univariate polynomials over a prime field F_p, coefficients stored
//! lowest degree first.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

use super::primes::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u64,
    /// Lowest degree first; no trailing zeros (the zero polynomial is an
    /// empty vector).
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadParams(format!("{p} is not prime")));
        }
        // Products of canonical coefficients must not overflow u64.
        if p >= 1 << 32 {
            return Err(Error::BadParams(format!("prime {p} too large")));
        }
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(Poly { p, coeffs })
    }

    pub fn zero(p: u64) -> Self {
        Poly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Poly { p, coeffs: vec![1] }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Poly::new(p, vec![c]).expect("constant")
    }

    /// The monomial x.
    pub fn x(p: u64) -> Self {
        Poly {
            p,
            coeffs: vec![0, 1],
        }
    }

    /// x - a.
    pub fn x_minus(p: u64, a: u64) -> Self {
        Poly::new(p, vec![(p - a % p) % p, 1]).expect("x - a")
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of x^k (0 beyond the stored degree).
    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p,
                right: other.p,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
            .collect();
        Poly::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + self.p - other.coeff(i)) % self.p)
            .collect();
        Poly::new(self.p, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.p));
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + a * b) % self.p;
            }
        }
        Poly::new(self.p, coeffs)
    }

    pub fn scale(&self, c: u64) -> Poly {
        let c = c % self.p;
        let coeffs = self.coeffs.iter().map(|&a| a * c % self.p).collect();
        Poly::new(self.p, coeffs).expect("scale")
    }

    /// Euclidean division by a nonzero divisor: (quotient, remainder).
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let d_deg = divisor
            .degree()
            .ok_or_else(|| Error::BadParams("division by the zero polynomial".into()))?;
        let lead_inv = inv_mod(divisor.coeffs[d_deg], self.p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Poly::zero(self.p), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - d_deg];
        for k in (d_deg..rem.len()).rev() {
            let factor = rem[k] * lead_inv % self.p;
            if factor != 0 {
                quot[k - d_deg] = factor;
                for i in 0..=d_deg {
                    let sub = factor * divisor.coeffs[i] % self.p;
                    rem[k - d_deg + i] = (rem[k - d_deg + i] + self.p - sub) % self.p;
                }
            }
        }
        Ok((Poly::new(self.p, quot)?, Poly::new(self.p, rem)?))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if let Some(deg) = a.degree() {
            let inv = inv_mod(a.coeffs[deg], self.p);
            a = a.scale(inv);
        }
        Ok(a)
    }

    pub fn eval(&self, at: u64) -> u64 {
        let at = at % self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * at + c) % self.p;
        }
        acc
    }

    /// self^exp mod modulus, square-and-multiply over the exponent bits.
    pub fn pow_mod(&self, exp: &BigUint, modulus: &Poly) -> Result<Poly> {
        self.check(modulus)?;
        let mut result = Poly::one(self.p);
        let mut base = self.rem(modulus)?;
        for bit in 0..exp.bits() {
            if exp.bit(bit) {
                result = result.mul(&base)?.rem(modulus)?;
            }
            if bit + 1 < exp.bits() {
                base = base.mul(&base)?.rem(modulus)?;
            }
        }
        Ok(result)
    }

    /// Irreducibility over F_p: x^{p^m} = x (mod f) and
    /// gcd(x^{p^{m/r}} - x, f) = 1 for every prime r dividing m.
    pub fn is_irreducible(&self) -> bool {
        let m = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(m) => m,
        };
        let p_big = BigUint::from(self.p);
        // Iterated Frobenius images of x modulo self.
        let mut frob = Vec::with_capacity(m + 1);
        frob.push(Poly::x(self.p).rem(self).expect("same prime"));
        for _ in 0..m {
            let next = frob
                .last()
                .unwrap()
                .pow_mod(&p_big, self)
                .expect("same prime");
            frob.push(next);
        }
        let x = Poly::x(self.p).rem(self).expect("same prime");
        if frob[m] != x {
            return false;
        }
        for r in prime_divisors(m) {
            let g = frob[m / r].sub(&x).expect("same prime");
            let gcd = self.gcd(&g).expect("same prime");
            if gcd.degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Renders as `c0 + c1*x + ... + ck*x^k` with canonical coefficients.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = match k {
                0 => format!("{c}"),
                1 if c == 1 => "x".to_string(),
                1 => format!("{c}*x"),
                _ if c == 1 => format!("x^{k}"),
                _ => format!("{c}*x^{k}"),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }

    /// Parses a low-first comma-separated coefficient list, e.g. "2,0,1" for
    /// x^2 + 2.
    pub fn parse_coeff_list(p: u64, s: &str) -> Result<Poly> {
        let mut coeffs = Vec::new();
        for (i, tok) in s.split(',').enumerate() {
            let c: u64 = tok.trim().parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("coefficient {}: '{}' is not an integer", i + 1, tok.trim()),
            })?;
            coeffs.push(c);
        }
        Poly::new(p, coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Inverse of a nonzero element mod prime p via Fermat.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod_u64(a % p, p - 2, p)
}

pub fn pow_mod_u64(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn prime_divisors(mut m: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// The first monic irreducible of degree m over F_p, in ascending
/// lexicographic order of the coefficient tuple (c_{m-1}, ..., c_1, c_0).
pub fn find_irreducible(p: u64, m: usize) -> Poly {
    assert!(m >= 1, "degree must be at least 1");
    // Enumerate the p^m monic candidates by counting: the base-p digits of
    // the counter, most significant digit = c_{m-1}.
    let mut counter = vec![0u64; m]; // low coefficient first
    loop {
        let mut coeffs = counter.clone();
        coeffs.push(1);
        let f = Poly::new(p, coeffs).expect("monic candidate");
        if f.is_irreducible() {
            return f;
        }
        // Increment with c_0 as the fastest digit.
        let mut k = 0;
        loop {
            counter[k] += 1;
            if counter[k] < p {
                break;
            }
            counter[k] = 0;
            k += 1;
            assert!(k < m, "no irreducible of degree {m} found over F_{p}");
        }
    }
}
