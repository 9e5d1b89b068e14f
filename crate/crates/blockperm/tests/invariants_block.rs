//! Randomized invariants of the extension machinery and the label map: the
//! extension preserves block distance under a shared sequence, bounds it
//! below by the Hamming set under different sequences, and the label
//! injection into the auxiliary set never collides.

use std::collections::{BTreeMap, BTreeSet};

use blockperm::block::{
    extend, hamming_set, AuxiliarySet, BlockParams, ExtensionSequence, SystematicEncoder,
};
use blockperm::budget::Budget;
use blockperm::perm::Permutation;
use blockperm::sampling::{verify_aux_sampled, verify_systematic_sampled};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_sequence(n: usize, k: usize, rng: &mut ChaCha8Rng) -> ExtensionSequence {
    let entries: Vec<u32> = (0..k).map(|_| rng.gen_range(1..=n as u32)).collect();
    ExtensionSequence::new(n, entries).unwrap()
}

#[test]
fn extension_preserves_block_distance_under_shared_sequence() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for n in 5..=9 {
        for _ in 0..2000 {
            let sigma = Permutation::random(n, &mut rng);
            let tau = Permutation::random(n, &mut rng);
            let k = rng.gen_range(1..=6);
            let s = random_sequence(n, k, &mut rng);
            let lhs = extend(&sigma, &s)
                .unwrap()
                .d_block(&extend(&tau, &s).unwrap())
                .unwrap();
            assert_eq!(lhs, sigma.d_block(&tau).unwrap(), "n={n} s={s}");
        }
    }
}

#[test]
fn extension_distance_dominates_hamming_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in 5..=9 {
        for _ in 0..2000 {
            let sigma = Permutation::random(n, &mut rng);
            let tau = Permutation::random(n, &mut rng);
            let k = rng.gen_range(1..=6);
            let s1 = random_sequence(n, k, &mut rng);
            let s2 = random_sequence(n, k, &mut rng);
            let d = extend(&sigma, &s1)
                .unwrap()
                .d_block(&extend(&tau, &s2).unwrap())
                .unwrap();
            let h = hamming_set(&s1, &s2).unwrap().len();
            assert!(d >= h, "n={n} d={d} h={h} s1={s1} s2={s2}");
        }
    }
}

#[test]
fn hamming_set_size_is_at_most_hamming_distance() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..5000 {
        let n = rng.gen_range(2..10);
        let k = rng.gen_range(1..8);
        let s1 = random_sequence(n, k, &mut rng);
        let s2 = random_sequence(n, k, &mut rng);
        let dh = s1
            .entries()
            .iter()
            .zip(s2.entries())
            .filter(|(a, b)| a != b)
            .count();
        assert!(hamming_set(&s1, &s2).unwrap().len() <= dh);
    }
}

#[test]
fn nabla_classes_have_distance_and_respect_rotations() {
    let params = BlockParams::new(6, 4).unwrap();
    let classes = params.partition(&Budget::default()).unwrap();
    let total: usize = classes.values().map(|c| c.len()).sum();
    assert_eq!(total, 720);
    assert!(classes.len() as u64 <= 6 * 7u64.pow(3));
    for (label, book) in &classes {
        if book.len() >= 2 {
            let cert = book.certify(&Budget::default()).unwrap();
            assert!(cert.pass, "class {label} min {}", cert.exact_min);
        }
    }
}

#[test]
fn label_injection_never_collides_and_size_chain_holds() {
    let enc = SystematicEncoder::new(24, 4).unwrap();
    // Arithmetic form of the size chain: n * p^(d-1) <= q^(2d).
    let labels = BigUint::from(24u32) * BigUint::from(29u32).pow(3);
    let size = BigUint::from(13u32).pow(8);
    assert!(labels <= size);

    // Sampled labels map to distinct indices.
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let mut labels_seen = BTreeSet::new();
    let mut ranks = BTreeSet::new();
    for _ in 0..100_000 {
        let key = blockperm::algebra::QuotientVector::new(
            (0..3).map(|_| rng.gen_range(0..29u64)).collect(),
        );
        let slot = rng.gen_range(1..=24u32);
        let label = blockperm::block::NablaLabel { key, slot };
        let rank = enc.label_rank(&label).unwrap();
        assert!(rank < enc.aux().size());
        let fresh_label = labels_seen.insert(format!("{label}"));
        let fresh_rank = ranks.insert(rank);
        assert_eq!(fresh_label, fresh_rank, "collision at {label}");
    }
}

#[test]
fn same_label_encodings_keep_the_claimed_distance() {
    // Same-label pairs are rare under uniform sampling (the key space has
    // p^(d-1) = 24389 cells), so bucket permutations by label and test the
    // collisions. All samples share slot 1 by fixing 1 at the front.
    let enc = SystematicEncoder::new(24, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    let mut buckets: BTreeMap<String, Vec<Permutation>> = BTreeMap::new();
    for _ in 0..30_000 {
        let mut tail: Vec<u32> = (2..=24).collect();
        use rand::seq::SliceRandom;
        tail.shuffle(&mut rng);
        let mut images = vec![1u32];
        images.extend(tail);
        let sigma = Permutation::new(images).unwrap();
        let label = enc.block().nabla(&sigma).unwrap();
        buckets.entry(format!("{label}")).or_default().push(sigma);
    }
    let mut checked = 0usize;
    'outer: for group in buckets.values() {
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                let a = enc.encode(&group[i]).unwrap();
                let b = enc.encode(&group[j]).unwrap();
                let d = a.d_block(&b).unwrap();
                assert!(d >= 4, "same-label pair at distance {d}");
                checked += 1;
                if checked >= 2_000 {
                    break 'outer;
                }
            }
        }
    }
    assert!(
        checked >= 500,
        "too few same-label collisions sampled: {checked}"
    );
}

#[test]
fn sampled_construction_checks_pass_at_reduced_volume() {
    let aux = verify_aux_sampled(24, 4, 5000, 7).unwrap();
    assert!(aux.pass);
    assert!(aux.min_distance >= 4);
    let sys = verify_systematic_sampled(24, 4, 2000, 7).unwrap();
    assert!(sys.pass);
    assert_eq!(sys.projection_failures, 0);
    assert!(sys.min_distance >= 4);
}

#[test]
fn auxiliary_members_stay_in_range() {
    let aux = AuxiliarySet::new(30, 5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for _ in 0..200 {
        let t = rng.gen_range(0..aux.size());
        let member = aux.member(t).unwrap();
        assert_eq!(member.len(), 14); // 3d - 1
        assert!(member
            .entries()
            .iter()
            .all(|&v| v >= 1 && v as u64 <= aux.q()));
    }
}
