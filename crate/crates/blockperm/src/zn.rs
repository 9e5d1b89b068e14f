//! Cyclic arithmetic on {1, ..., n} with n as the representative of the
//! zero class.

use crate::error::{Error, Result};

/// An element of Z_n written with representatives 1..=n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZnElement {
    value: u64,
    modulus: u64,
}

impl ZnElement {
    pub fn new(value: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::BadParams("modulus must be >= 1".into()));
        }
        if value == 0 || value > modulus {
            return Err(Error::EntryOutOfRange { value, n: modulus });
        }
        Ok(ZnElement { value, modulus })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn add(&self, other: &ZnElement) -> Result<ZnElement> {
        self.check(other)?;
        Ok(ZnElement {
            value: add_mod(self.value, other.value, self.modulus),
            modulus: self.modulus,
        })
    }

    pub fn sub(&self, other: &ZnElement) -> Result<ZnElement> {
        self.check(other)?;
        Ok(ZnElement {
            value: sub_mod(self.value, other.value, self.modulus),
            modulus: self.modulus,
        })
    }

    fn check(&self, other: &ZnElement) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }
}

/// i + j on representatives 1..=n: ordinary sum mod n, except that n stands
/// in for the zero class.
pub fn add_mod(i: u64, j: u64, n: u64) -> u64 {
    let r = (i + j) % n;
    if r == 0 {
        n
    } else {
        r
    }
}

/// i - j on representatives 1..=n, same zero-class convention.
pub fn sub_mod(i: u64, j: u64, n: u64) -> u64 {
    let r = (i + n - j % n) % n;
    if r == 0 {
        n
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_wraps_to_n_on_zero_class() {
        // n=4: 3 + 1 lands in the zero class, represented by n
        let a = ZnElement::new(3, 4).unwrap();
        let b = ZnElement::new(1, 4).unwrap();
        assert_eq!(a.add(&b).unwrap().value(), 4);

        let c = ZnElement::new(4, 4).unwrap();
        assert_eq!(c.add(&c).unwrap().value(), 4);
    }

    #[test]
    fn add_ordinary_case() {
        let a = ZnElement::new(4, 5).unwrap();
        let b = ZnElement::new(3, 5).unwrap();
        assert_eq!(a.add(&b).unwrap().value(), 2);
    }

    #[test]
    fn sub_mirrors_add() {
        let a = ZnElement::new(1, 5).unwrap();
        assert_eq!(a.sub(&a).unwrap().value(), 5);
        let b = ZnElement::new(3, 5).unwrap();
        assert_eq!(a.sub(&b).unwrap().value(), 3);
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = ZnElement::new(1, 4).unwrap();
        let b = ZnElement::new(1, 5).unwrap();
        assert_eq!(a.add(&b), Err(Error::ModulusMismatch { left: 4, right: 5 }));
    }

    #[test]
    fn rejects_out_of_range_values() {
        assert!(ZnElement::new(0, 4).is_err());
        assert!(ZnElement::new(5, 4).is_err());
    }
}
