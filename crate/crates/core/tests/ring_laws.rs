mod common;

use common::*;
use proptest::prelude::*;
use skewring::{Classification, CrtTriple, RingElement};

#[test]
fn ring_axioms_on_samples() {
    for (seed, &p) in PRIMES.iter().enumerate() {
        let m = prime(p);
        let mut rng = rng(seed as u64);
        let zero = RingElement::zero(m);
        let one = RingElement::one(m);
        for _ in 0..10_000 {
            let x = random_element(&mut rng, m);
            let y = random_element(&mut rng, m);
            let z = random_element(&mut rng, m);
            assert_eq!((x + y) + z, x + (y + z));
            assert_eq!((x * y) * z, x * (y * z));
            assert_eq!(x + y, y + x);
            assert_eq!(x * y, y * x);
            assert_eq!(x * (y + z), x * y + x * z);
            assert_eq!(x + zero, x);
            assert_eq!(x * one, x);
            assert_eq!(x + (-x), zero);
            assert_eq!(x - y, x + (-y));
        }
    }
}

#[test]
fn zero_divisor_test_matches_annihilator_search() {
    for p in [3, 5, 7] {
        for z in RingElement::all(prime(p)) {
            assert_eq!(z.is_zero_divisor(), has_nonzero_annihilator(&z), "{z:?}");
        }
    }
}

#[test]
fn unit_count_is_cube_of_p_minus_one() {
    for p in [3u64, 5, 7] {
        let units = RingElement::all(prime(p))
            .filter(|z| z.classify() == Classification::Unit)
            .count() as u64;
        assert_eq!(units, (p - 1).pow(3));
    }
}

#[test]
fn every_unit_inverts() {
    for p in [3, 5, 7, 11] {
        let m = prime(p);
        for z in RingElement::all(m).filter(RingElement::is_unit) {
            let w = z.inv().unwrap();
            assert_eq!(z * w, RingElement::one(m));
            assert_eq!(w * z, RingElement::one(m));
        }
        for z in RingElement::all(m).filter(RingElement::is_zero_divisor) {
            assert!(z.inv().is_err());
        }
    }
}

#[test]
fn crt_is_ring_isomorphism() {
    let m = prime(3);
    for x in RingElement::all(m) {
        for y in RingElement::all(m) {
            let (tx, ty) = (x.to_crt(), y.to_crt());
            assert_eq!((x * y).to_crt(), tx.mul(&ty).unwrap());
            let sum = (x + y).to_crt().components();
            let expected: Vec<u64> = tx
                .components()
                .iter()
                .zip(ty.components())
                .map(|(a, b)| (a + b) % 3)
                .collect();
            assert_eq!(sum.to_vec(), expected);
        }
    }
    for (seed, p) in [5u64, 7, 11, 13].into_iter().enumerate() {
        let m = prime(p);
        let mut rng = rng(100 + seed as u64);
        for _ in 0..10_000 {
            let x = random_element(&mut rng, m);
            let y = random_element(&mut rng, m);
            assert_eq!((x * y).to_crt(), x.to_crt().mul(&y.to_crt()).unwrap());
            let sum = (x + y).to_crt().components();
            let (a, b) = (x.to_crt().components(), y.to_crt().components());
            assert_eq!(sum, [0, 1, 2].map(|i| (a[i] + b[i]) % p));
        }
    }
}

#[test]
fn crt_roundtrip_from_components() {
    let m = prime(7);
    for s0 in 0..7 {
        for s1 in 0..7 {
            for s2 in 0..7 {
                let t = CrtTriple::new(s0, s1, s2, m).unwrap();
                assert_eq!(t.to_element().to_crt(), t);
            }
        }
    }
}

proptest! {
    #[test]
    fn literal_roundtrip(a in 0u64..13, b in 0u64..13, c in 0u64..13) {
        let z = el(a, b, c, 13);
        prop_assert_eq!(RingElement::parse(&z.literal(), prime(13)).unwrap(), z);
    }

    #[test]
    fn from_signed_reduces(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000) {
        let m = prime(11);
        let z = RingElement::from_signed(a, b, c, m);
        prop_assert_eq!(z.coefficients(), [a, b, c].map(|x| x.rem_euclid(11) as u64));
    }
}
