//! Desk-scale verification of the fiber construction: every non-empty fiber
//! is a cyclic code of the claimed distance, fibers partition the coset
//! space, and the pigeonhole size bound holds. The larger grid points
//! (7,4) and (8,4) run in the acceptance suite.

use blockperm::budget::Budget;
use blockperm::coset::{CosetSpace, CyclicCoset};
use blockperm::cyclic::{build_fibers, CodeParams};
use blockperm::perm::Permutation;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

fn ceil_pigeonhole(n: usize, d: usize, p: u64) -> u64 {
    let cosets = blockperm::bounds::factorial_big(n - 1);
    let keys = BigUint::from(p).pow(d as u32 - 2);
    ((&cosets + &keys - BigUint::from(1u32)) / keys)
        .to_u64()
        .unwrap()
}

#[test]
fn fibers_are_codes_of_claimed_distance() {
    let budget = Budget::default();
    for (n, d) in [(5usize, 4usize), (6, 4), (6, 5)] {
        let params = CodeParams::new(n, d).unwrap();
        let table = build_fibers(&params, &budget).unwrap();
        for (key, cert) in table.certify_all(&budget).unwrap() {
            assert!(
                cert.exact_min >= d,
                "(n,d)=({n},{d}) fiber {key}: min {} < {d}",
                cert.exact_min
            );
        }
    }
}

#[test]
fn max_fiber_meets_pigeonhole() {
    let budget = Budget::default();
    for (n, d) in [(5usize, 4usize), (6, 4), (6, 5)] {
        let params = CodeParams::new(n, d).unwrap();
        let table = build_fibers(&params, &budget).unwrap();
        let best = table.best().1.len() as u64;
        let bound = ceil_pigeonhole(n, d, params.p());
        assert!(best >= bound, "(n,d)=({n},{d}) best {best} < {bound}");
    }
}

#[test]
fn fibers_partition_and_keys_are_well_defined() {
    let budget = Budget::default();
    let params = CodeParams::new(6, 4).unwrap();
    let table = build_fibers(&params, &budget).unwrap();
    assert_eq!(table.total_cosets(), 120);
    let mut seen = std::collections::BTreeSet::new();
    for (key, cosets) in table.iter() {
        for c in cosets {
            assert_eq!(&params.delta_key(c).unwrap(), key);
            assert!(seen.insert(c.clone()));
        }
    }
    assert_eq!(seen.len(), 120);

    // Well-definedness across every member of every coset for n <= 6,
    // including the n = p exponent edge where sigma(i+1) can hit p.
    for n in [4usize, 5, 6] {
        let space = CosetSpace::new(n, &budget).unwrap();
        let params = CodeParams::new(n, 4).unwrap();
        for c in space.iter() {
            let key = params.delta_key(&c).unwrap();
            for m in c.members() {
                assert_eq!(
                    params
                        .delta_key(&CyclicCoset::from_permutation(&m))
                        .unwrap(),
                    key,
                    "n={n} member {m}"
                );
            }
        }
    }
}

#[test]
fn custom_modulus_matches_degree_contract() {
    use blockperm::algebra::Poly;
    // x^2 + 2 is the canonical modulus for (5, 4).
    let ok = CodeParams::with_modulus(5, 4, Poly::new(5, vec![2, 0, 1]).unwrap());
    assert!(ok.is_ok());
    // x^2 + 4 = (x - 1)(x + 1) over F_5 is reducible and must be rejected.
    let reducible = CodeParams::with_modulus(5, 4, Poly::new(5, vec![4, 0, 1]).unwrap());
    assert!(reducible.is_err());
    let wrong_degree = CodeParams::with_modulus(5, 4, Poly::new(5, vec![2, 1]).unwrap());
    assert!(wrong_degree.is_err());
    let wrong_prime = CodeParams::with_modulus(5, 4, Poly::new(7, vec![1, 0, 1]).unwrap());
    assert!(wrong_prime.is_err());

    // An alternative irreducible gives a different partition of the same
    // coset space into valid codes.
    let alt = CodeParams::with_modulus(5, 4, Poly::new(5, vec![3, 0, 1]).unwrap()).unwrap();
    let budget = Budget::default();
    let table = build_fibers(&alt, &budget).unwrap();
    assert_eq!(table.total_cosets(), 24);
    for (_, cert) in table.certify_all(&budget).unwrap() {
        assert!(cert.pass);
    }
}

#[test]
fn singleton_fiber_example_certifies_vacuously() {
    // A hand-built two-member book whose cosets have disjoint cyclic
    // edge sets.
    let e = Permutation::identity(4);
    let far = Permutation::new(vec![1, 4, 3, 2]).unwrap();
    let book =
        blockperm::Codebook::new(blockperm::Metric::Cyclic, 4, 4, "pair", vec![e, far]).unwrap();
    assert_eq!(book.exact_min_distance(&Budget::default()).unwrap(), 4);
}
