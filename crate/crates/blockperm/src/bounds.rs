//! Sphere profiles under the cyclic block permutation metric, the
//! Gilbert-Varshamov benchmark, constructive sphere witnesses, and the
//! construction-vs-GV ratio report.

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::smallest_prime_geq;
use crate::budget::Budget;
use crate::coset::{CosetSpace, CyclicCoset};
use crate::error::{Error, Result};
use crate::perm::{wrap_add, wrap_sub, Permutation};

/// Exact sphere sizes about the identity coset: `sizes[r]` counts cosets at
/// distance exactly r. Translation moves spheres to any other center, so one
/// profile serves all.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereProfile {
    pub n: usize,
    pub sizes: Vec<u64>,
}

impl SphereProfile {
    /// |B(center, r)|: prefix sum of sphere sizes.
    pub fn ball_size(&self, r: usize) -> Result<u64> {
        if r > self.n {
            return Err(Error::RadiusOutOfRange { r, n: self.n });
        }
        Ok(self.sizes[..=r].iter().sum())
    }

    /// ceil((n-1)! / |B(d-1)|), the Gilbert-Varshamov existence bound for
    /// minimum distance d.
    pub fn gv_bound(&self, d: usize) -> Result<u64> {
        if d == 0 || d > self.n + 1 {
            return Err(Error::RadiusOutOfRange { r: d, n: self.n });
        }
        let space: u64 = self.sizes.iter().sum();
        let ball = self.ball_size(d - 1)?;
        Ok(space.div_ceil(ball))
    }
}

/// Exhaustive profile by enumerating all (n-1)! cosets and histogramming the
/// norm; shards merge by addition.
pub fn sphere_profile(n: usize, budget: &Budget) -> Result<SphereProfile> {
    let space = CosetSpace::new(n, budget)?;
    let sizes = (0..space.len())
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut acc, i| {
                acc[space.get(i).norm()] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut left, right| {
                for (l, r) in left.iter_mut().zip(right) {
                    *l += r;
                }
                left
            },
        );
    Ok(SphereProfile { n, sizes })
}

/// Point classification from the witness construction, relative to the
/// removed-edge set D_J of a chosen cut set J. Roman numerals name the four
/// surviving-edge patterns.
#[allow(clippy::upper_case_acronyms)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PointType {
    /// Neither surrounding edge survives: i and its predecessor are both cut.
    I,
    /// Both surrounding edges survive.
    II,
    /// Incoming edge survives, outgoing edge is cut.
    III,
    /// Outgoing edge survives, incoming edge is cut.
    IV,
}

fn classify(i: u32, in_cut: &[bool], n: usize) -> PointType {
    let pred_cut = in_cut[wrap_sub(i, 1, n) as usize - 1];
    let self_cut = in_cut[i as usize - 1];
    match (pred_cut, self_cut) {
        (true, true) => PointType::I,
        (false, false) => PointType::II,
        (false, true) => PointType::III,
        (true, false) => PointType::IV,
    }
}

/// One witness coset per d-subset J: a coset at norm exactly d whose missing
/// identity edges are precisely {(j, j+1) : j in J}.
fn witness_for(n: usize, cut: &[u32]) -> CyclicCoset {
    let d = cut.len();
    let mut in_cut = vec![false; n];
    for &j in cut {
        in_cut[j as usize - 1] = true;
    }
    // Ordered block ending at j: a single point when j is Type I, otherwise
    // the ascending run from the unique Type IV start point.
    let block = |j: u32| -> Vec<u32> {
        match classify(j, &in_cut, n) {
            PointType::I => vec![j],
            PointType::III => {
                // Walk back over Type II points to the unique Type IV start.
                let mut start = wrap_sub(j, 1, n);
                while classify(start, &in_cut, n) != PointType::IV {
                    debug_assert_eq!(classify(start, &in_cut, n), PointType::II);
                    start = wrap_sub(start, 1, n);
                }
                let mut run = vec![start];
                let mut cur = start;
                while cur != j {
                    cur = wrap_add(cur, 1, n);
                    run.push(cur);
                }
                run
            }
            other => unreachable!("cut point {j} classified {other:?}"),
        }
    };
    // Blocks in the order (F_{j_1}, F_{j_d}, F_{j_{d-1}}, ..., F_{j_2}).
    let mut images = block(cut[0]);
    for s in (1..d).rev() {
        images.extend(block(cut[s]));
    }
    let sigma = Permutation::new(images).expect("blocks partition 1..=n");

    // Postcondition from the construction: the identity edges missing from
    // the witness are exactly the cut edges, hence the norm is exactly d.
    let removed = Permutation::identity(n)
        .cyclic_char_set()
        .difference(&sigma.cyclic_char_set());
    let expected: Vec<(u32, u32)> = cut.iter().map(|&j| (j, wrap_add(j, 1, n))).collect();
    assert_eq!(
        removed,
        crate::perm::EdgeSet::from_pairs(expected),
        "witness postcondition failed for cut set {cut:?}"
    );
    let coset = CyclicCoset::from_permutation(&sigma);
    assert_eq!(coset.norm(), d, "witness norm off for cut set {cut:?}");
    coset
}

/// All C(n, d) witnesses, one per d-subset of {1, ..., n} in lexicographic
/// subset order. Each sits at norm exactly d.
pub fn sphere_witnesses(n: usize, d: usize) -> Result<impl Iterator<Item = CyclicCoset>> {
    if d < 3 || d > n {
        return Err(Error::RadiusOutOfRange { r: d, n });
    }
    Ok((1..=n as u32)
        .combinations(d)
        .map(move |cut| witness_for(n, &cut)))
}

/// One row of the construction-vs-GV comparison.
#[derive(Debug, Clone, Serialize)]
pub struct RatioRow {
    pub n: usize,
    pub d: usize,
    pub p: u64,
    /// Exhaustive profile (true) or subset-witness ball lower bound (false).
    pub exact: bool,
    /// ceil((n-1)! / p^(d-2)), the pigeonhole size of the best fiber.
    pub construction: BigUint,
    /// ceil((n-1)! / ball); in bound mode the ball is replaced by its lower
    /// bound, making this an upper bound on the true GV benchmark.
    pub gv: BigUint,
    /// |B(d-1)| exactly, or its lower bound 1 + C(n, d-1).
    pub ball: BigUint,
    /// Bertrand-normalized ratio (construction bound)/(GV bound): the
    /// construction bound restated prime-free via p < 2n, i.e.
    /// ball / (2n)^(d-2). Kept as an exact fraction alongside the float.
    pub ratio: f64,
    pub ratio_num: BigUint,
    pub ratio_den: BigUint,
    pub flagged: bool,
}

/// Growth check applied to the ratio column.
#[derive(Debug, Clone, Copy)]
pub struct RatioCheck {
    /// Rows with ratio/n below this floor are flagged.
    pub min_ratio_over_n: f64,
}

impl Default for RatioCheck {
    fn default() -> Self {
        RatioCheck {
            min_ratio_over_n: 0.0,
        }
    }
}

pub fn factorial_big(k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=k {
        acc *= BigUint::from(i);
    }
    acc
}

pub fn binomial_big(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn ceil_div_big(a: &BigUint, b: &BigUint) -> BigUint {
    (a + b - BigUint::one()) / b
}

fn big_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

/// Per-n comparison rows for fixed d. Exhaustive profiles where (n-1)! fits
/// the budget, the ball lower bound 1 + C(n, d-1) otherwise. Rows are
/// flagged when the ratio column stops growing or ratio/n drops below the
/// configured floor.
pub fn ratio_report(
    d: usize,
    ns: &[usize],
    budget: &Budget,
    check: &RatioCheck,
) -> Result<Vec<RatioRow>> {
    if d < 4 {
        return Err(Error::BadParams(format!(
            "ratio report needs d >= 4, got {d}"
        )));
    }
    let mut rows = Vec::with_capacity(ns.len());
    let mut prev_ratio: Option<f64> = None;
    for &n in ns {
        if n < d {
            return Err(Error::BadParams(format!("need n >= d, got n={n}, d={d}")));
        }
        let p = smallest_prime_geq(n as u64);
        let space = factorial_big(n - 1);
        let p_pow = BigUint::from(p).pow(d as u32 - 2);
        let construction = ceil_div_big(&space, &p_pow);
        let (exact, ball) = match sphere_profile(n, budget) {
            Ok(profile) => (true, BigUint::from(profile.ball_size(d - 1)?)),
            Err(Error::BudgetExceeded { .. }) => (false, BigUint::one() + binomial_big(n, d - 1)),
            Err(e) => return Err(e),
        };
        let gv = ceil_div_big(&space, &ball);
        let ratio_num = ball.clone();
        let ratio_den = BigUint::from(2 * n).pow(d as u32 - 2);
        let ratio = big_to_f64(&ratio_num) / big_to_f64(&ratio_den);
        let monotone = prev_ratio.is_none_or(|prev| ratio >= prev);
        let flagged = !monotone || ratio <= 0.0 || ratio / (n as f64) < check.min_ratio_over_n;
        prev_ratio = Some(ratio);
        rows.push(RatioRow {
            n,
            d,
            p,
            exact,
            construction,
            gv,
            ball,
            ratio,
            ratio_num,
            ratio_den,
            flagged,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_n3_and_n4() {
        let p3 = sphere_profile(3, &Budget::default()).unwrap();
        assert_eq!(p3.sizes, vec![1, 0, 0, 1]);
        let p4 = sphere_profile(4, &Budget::default()).unwrap();
        assert_eq!(p4.sizes, vec![1, 0, 0, 4, 1]);
    }

    #[test]
    fn profile_sums_to_coset_count() {
        for n in 3..=8 {
            let p = sphere_profile(n, &Budget::default()).unwrap();
            let total: u64 = p.sizes.iter().sum();
            assert_eq!(total, factorial_big(n - 1).to_u64().unwrap());
            assert_eq!(p.sizes[0], 1);
            assert_eq!(p.sizes[1], 0);
            assert_eq!(p.sizes[2], 0);
        }
    }

    #[test]
    fn ball_sizes() {
        let p4 = sphere_profile(4, &Budget::default()).unwrap();
        assert_eq!(p4.ball_size(0).unwrap(), 1);
        assert_eq!(p4.ball_size(3).unwrap(), 5);
        assert_eq!(p4.ball_size(4).unwrap(), 6);
        assert!(p4.ball_size(5).is_err());
    }

    #[test]
    fn gv_examples() {
        let p4 = sphere_profile(4, &Budget::default()).unwrap();
        assert_eq!(p4.gv_bound(4).unwrap(), 2); // ceil(6/5)
        assert_eq!(p4.gv_bound(3).unwrap(), 6); // ceil(6/1)
        assert_eq!(p4.gv_bound(1).unwrap(), 6); // radius-0 ball
    }

    #[test]
    fn witnesses_match_profile_at_n4() {
        // d=4: the single witness is the unique norm-4 coset.
        let w: Vec<_> = sphere_witnesses(4, 4).unwrap().collect();
        assert_eq!(w.len(), 1);
        assert_eq!(
            w[0].canonical(),
            &Permutation::new(vec![1, 4, 3, 2]).unwrap()
        );
        // d=3: four distinct witnesses at norm >= 3 (exactly 3 here).
        let w: Vec<_> = sphere_witnesses(4, 3).unwrap().collect();
        assert_eq!(w.len(), 4);
        let distinct: std::collections::BTreeSet<_> = w.iter().collect();
        assert_eq!(distinct.len(), 4);
        for c in &w {
            assert_eq!(c.norm(), 3);
        }
    }

    #[test]
    fn witnesses_are_distinct_and_bound_sphere_sizes() {
        for n in 3..=7 {
            let profile = sphere_profile(n, &Budget::default()).unwrap();
            for d in 3..=n {
                let w: Vec<_> = sphere_witnesses(n, d).unwrap().collect();
                let expected = binomial_big(n, d).to_usize().unwrap();
                assert_eq!(w.len(), expected);
                let distinct: std::collections::BTreeSet<_> = w.iter().collect();
                assert_eq!(distinct.len(), expected, "witness collision at n={n} d={d}");
                assert!(profile.sizes[d] >= expected as u64);
            }
        }
    }

    #[test]
    fn witness_range_errors() {
        assert!(sphere_witnesses(5, 2).is_err());
        assert!(sphere_witnesses(5, 6).is_err());
        assert!(sphere_witnesses(5, 3).is_ok());
    }

    #[test]
    fn ratio_report_exact_rows() {
        let rows = ratio_report(4, &[4], &Budget::default(), &RatioCheck::default()).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].exact);
        assert_eq!(rows[0].gv, BigUint::from(2u32));
        assert_eq!(rows[0].ball, BigUint::from(5u32));
        assert_eq!(rows[0].construction, BigUint::one()); // ceil(6/25)
    }

    #[test]
    fn ratio_report_bound_rows() {
        let tight = Budget {
            enumeration: 10,
            pairwise: 10,
        };
        let rows = ratio_report(4, &[100], &tight, &RatioCheck::default()).unwrap();
        assert!(!rows[0].exact);
        assert_eq!(rows[0].ball, BigUint::one() + binomial_big(100, 3));
        // Exact cross-multiplied form of ratio >= C(n,3)/(2n)^2.
        let lhs = &rows[0].ratio_num * BigUint::from(200u32).pow(2);
        let rhs = binomial_big(100, 3) * &rows[0].ratio_den;
        assert!(lhs >= rhs);
    }

    #[test]
    fn binomial_and_factorial_helpers() {
        assert_eq!(binomial_big(8, 4), BigUint::from(70u32));
        assert_eq!(binomial_big(4, 0), BigUint::one());
        assert_eq!(binomial_big(3, 5), BigUint::zero());
        assert_eq!(factorial_big(5), BigUint::from(120u32));
    }
}
