//! Enumeration and certification budgets.

use crate::error::{Error, Result};

/// Caps on exhaustive work. `enumeration` bounds factorial-scale state
/// enumeration ((n-1)! cosets or n! permutations); `pairwise` bounds the
/// number of distance evaluations in exact certification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub enumeration: u64,
    pub pairwise: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumeration: 3_628_800, // 10!
            pairwise: 1_000_000_000,
        }
    }
}

impl Budget {
    pub fn with_enumeration(enumeration: u64) -> Self {
        Budget {
            enumeration,
            ..Budget::default()
        }
    }

    /// k! when it fits under the enumeration budget, otherwise an error
    /// naming the requirement.
    pub fn check_factorial(&self, k: usize) -> Result<u64> {
        let mut acc: u64 = 1;
        for i in 2..=k as u64 {
            acc = match acc.checked_mul(i) {
                Some(v) if v <= self.enumeration => v,
                _ => {
                    return Err(Error::BudgetExceeded {
                        required: format!("{k}!"),
                        budget: self.enumeration,
                    })
                }
            };
        }
        Ok(acc)
    }

    /// Number of unordered pairs among `m` items when it fits under the
    /// pairwise budget.
    pub fn check_pairs(&self, m: u64) -> Result<u64> {
        let pairs = m
            .checked_mul(m.saturating_sub(1))
            .map(|x| x / 2)
            .ok_or(Error::Overflow("pair count"))?;
        if pairs > self.pairwise {
            return Err(Error::BudgetExceeded {
                required: format!("{pairs} pairwise evaluations"),
                budget: self.pairwise,
            });
        }
        Ok(pairs)
    }
}
