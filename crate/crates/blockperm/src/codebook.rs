//! Codebooks: sets of permutations or coset representatives with a declared
//! metric and claimed minimum distance, serializable to a line-oriented text
//! format and to JSON.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::coset::CyclicCoset;
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Cyclic,
    Block,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Cyclic => write!(f, "cyclic"),
            Metric::Block => write!(f, "block"),
        }
    }
}

impl std::str::FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic" => Ok(Metric::Cyclic),
            "block" => Ok(Metric::Block),
            other => Err(Error::Parse {
                line: 1,
                msg: format!("unknown metric '{other}'"),
            }),
        }
    }
}

/// Members are full permutations for the block metric and canonical coset
/// representatives for the cyclic metric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Codebook {
    pub metric: Metric,
    pub n: usize,
    /// Claimed minimum distance.
    pub d: usize,
    pub label: String,
    pub members: Vec<Permutation>,
}

/// Outcome of exact minimum-distance certification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certification {
    pub metric: Metric,
    pub n: usize,
    pub claimed: usize,
    pub exact_min: usize,
    pub members: usize,
    pub pass: bool,
}

impl Codebook {
    pub fn new(
        metric: Metric,
        n: usize,
        d: usize,
        label: impl Into<String>,
        members: Vec<Permutation>,
    ) -> Result<Self> {
        let book = Codebook {
            metric,
            n,
            d,
            label: label.into(),
            members,
        };
        book.validate()?;
        Ok(book)
    }

    /// Checks the size invariant and that the label fits the line-oriented
    /// format; member distinctness is certified separately so corrupted
    /// books can still be loaded and reported on.
    pub fn validate(&self) -> Result<()> {
        if self.label.contains('\n') || self.label.contains('\r') {
            return Err(Error::Parse {
                line: 4,
                msg: "label must not contain line breaks".into(),
            });
        }
        for m in &self.members {
            if m.n() != self.n {
                return Err(Error::SizeMismatch {
                    left: m.n(),
                    right: self.n,
                });
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Distance between two members under this book's metric.
    pub fn distance(&self, a: &Permutation, b: &Permutation) -> Result<usize> {
        match self.metric {
            Metric::Block => a.d_block(b),
            Metric::Cyclic => {
                CyclicCoset::from_permutation(a).d_cyclic(&CyclicCoset::from_permutation(b))
            }
        }
    }

    /// Exact minimum pairwise distance by exhaustive evaluation.
    ///
    /// Duplicate members are an invariant violation and error out; a
    /// singleton book has no pairwise distance and is reported as vacuous.
    pub fn exact_min_distance(&self, budget: &Budget) -> Result<usize> {
        if self.members.len() < 2 {
            return Err(Error::VacuousBook);
        }
        budget.check_pairs(self.members.len() as u64)?;
        let dup = match self.metric {
            Metric::Block => {
                let set: BTreeSet<_> = self.members.iter().collect();
                set.len() != self.members.len()
            }
            Metric::Cyclic => {
                let set: BTreeSet<_> = self
                    .members
                    .iter()
                    .map(CyclicCoset::from_permutation)
                    .collect();
                set.len() != self.members.len()
            }
        };
        if dup {
            return Err(Error::DuplicateMembers);
        }
        let min = match self.metric {
            Metric::Block => {
                let members = &self.members;
                (0..members.len())
                    .into_par_iter()
                    .map(|i| {
                        let mut local = usize::MAX;
                        for j in i + 1..members.len() {
                            let d = members[i].d_block(&members[j]).expect("validated sizes");
                            local = local.min(d);
                        }
                        local
                    })
                    .min()
                    .unwrap_or(usize::MAX)
            }
            Metric::Cyclic => {
                // Cyclic successor tables make each pairwise distance a
                // single vector comparison.
                let tables: Vec<Vec<u32>> =
                    self.members.iter().map(|m| m.cyclic_successors()).collect();
                (0..tables.len())
                    .into_par_iter()
                    .map(|i| {
                        let mut local = usize::MAX;
                        for j in i + 1..tables.len() {
                            let d = tables[i]
                                .iter()
                                .zip(&tables[j])
                                .filter(|(a, b)| a != b)
                                .count();
                            local = local.min(d);
                        }
                        local
                    })
                    .min()
                    .unwrap_or(usize::MAX)
            }
        };
        Ok(min)
    }

    /// Full certification against the claimed distance.
    pub fn certify(&self, budget: &Budget) -> Result<Certification> {
        let exact_min = self.exact_min_distance(budget)?;
        Ok(Certification {
            metric: self.metric,
            n: self.n,
            claimed: self.d,
            exact_min,
            members: self.members.len(),
            pass: exact_min >= self.d,
        })
    }

    /// The line-oriented text format: four header lines then one member per
    /// line as n space-separated integers.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# metric={}\n", self.metric));
        out.push_str(&format!("# n={}\n", self.n));
        out.push_str(&format!("# d={}\n", self.d));
        out.push_str(&format!("# label={}\n", self.label));
        for m in &self.members {
            out.push_str(&m.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let mut header = |name: &str| -> Result<String> {
            let (idx, line) = lines.next().ok_or(Error::Parse {
                line: 0,
                msg: format!("missing header '# {name}='"),
            })?;
            let prefix = format!("# {name}=");
            line.strip_prefix(&prefix)
                .map(str::to_string)
                .ok_or(Error::Parse {
                    line: idx + 1,
                    msg: format!("expected '{prefix}...', got '{line}'"),
                })
        };
        let metric: Metric = header("metric")?.parse()?;
        let n: usize = header("n")?.parse().map_err(|_| Error::Parse {
            line: 2,
            msg: "n is not an integer".into(),
        })?;
        let d: usize = header("d")?.parse().map_err(|_| Error::Parse {
            line: 3,
            msg: "d is not an integer".into(),
        })?;
        let label = header("label")?;
        let mut members = Vec::new();
        for (idx, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let perm: Permutation = line.parse().map_err(|e| Error::Parse {
                line: idx + 1,
                msg: format!("{e}"),
            })?;
            if perm.n() != n {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("member has length {}, expected {}", perm.n(), n),
                });
            }
            members.push(perm);
        }
        let book = Codebook {
            metric,
            n,
            d,
            label,
            members,
        };
        book.validate()?;
        Ok(book)
    }

    /// The machine-readable variant: one JSON document with the same fields.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("codebook serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let book: Codebook = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        book.validate()?;
        Ok(book)
    }

    /// Reads either format, sniffing the leading byte.
    pub fn from_str_any(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Codebook::from_json(text)
        } else {
            Codebook::from_text(text)
        }
    }
}
