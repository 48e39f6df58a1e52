mod common;

use common::{all_words, random_braid, random_free_word};
use hilden_core::braid::{gamma, BraidWord};
use hilden_core::free_group::{FreeAut, FreeWord, Letter};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn letters(rank: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (1..=rank, any::<bool>()).prop_map(|(g, i)| Letter::new(g, i)),
        0..30,
    )
}

fn braid(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..strands as i32, any::<bool>()), 0..max_len).prop_map(move |v| {
        let s: Vec<i32> = v
            .into_iter()
            .map(|(i, inv)| if inv { -i } else { i })
            .collect();
        BraidWord::from_signed(strands, &s).unwrap()
    })
}

proptest! {
    #[test]
    fn free_reduce_idempotent_and_shrinking(raw in letters(3)) {
        let w = FreeWord::free_reduce(3, raw.iter().copied()).unwrap();
        prop_assert!(w.len() <= raw.len());
        let again = FreeWord::free_reduce(3, w.letters().iter().copied()).unwrap();
        prop_assert_eq!(&again, &w);
        for pair in w.letters().windows(2) {
            prop_assert_ne!(pair[0], pair[1].inverse());
        }
    }

    #[test]
    fn cyclic_reduce_reassembles(raw in letters(3)) {
        let w = FreeWord::free_reduce(3, raw).unwrap();
        let (core, conj) = w.cyclic_reduce();
        prop_assert_eq!(core.conjugate_by(&conj), w);
        if core.len() >= 2 {
            prop_assert_ne!(core.letters()[0], core.letters()[core.len() - 1].inverse());
        }
    }

    #[test]
    fn compose_acts_like_function_composition(a in braid(5, 12), b in braid(5, 12), raw in letters(4)) {
        let (phi, psi) = (gamma(&a), gamma(&b));
        let w = FreeWord::free_reduce(4, raw).unwrap();
        let lhs = phi.compose(&psi).unwrap().apply(&w).unwrap();
        let rhs = phi.apply(&psi.apply(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compose_with_identity(a in braid(6, 20)) {
        let phi = gamma(&a);
        prop_assert_eq!(phi.compose(&FreeAut::identity(5)).unwrap(), phi.clone());
        prop_assert_eq!(FreeAut::identity(5).compose(&phi).unwrap(), phi);
    }

    #[test]
    fn puncture_perm_is_multiplicative(a in braid(6, 15), b in braid(6, 15)) {
        let (phi, psi) = (gamma(&a), gamma(&b));
        let composed = phi.compose(&psi).unwrap().puncture_perm().unwrap();
        let (p, q) = (phi.puncture_perm().unwrap(), psi.puncture_perm().unwrap());
        // independent multiplication of image lists, q first
        let expected: Vec<usize> = q.iter().map(|&j| p[j - 1]).collect();
        prop_assert_eq!(composed, expected);
    }

    #[test]
    fn out_equal_is_an_equivalence(a in braid(4, 10), b in braid(4, 10), raw in letters(3)) {
        let (phi, psi) = (gamma(&a), gamma(&b));
        let w = FreeWord::free_reduce(3, raw).unwrap();
        let phi2 = phi.then_inner(&w);
        prop_assert!(phi.out_equal(&phi).unwrap());
        prop_assert!(phi.out_equal(&phi2).unwrap());
        prop_assert_eq!(phi.out_equal(&psi).unwrap(), psi.out_equal(&phi).unwrap());
        prop_assert_eq!(phi2.out_equal(&psi).unwrap(), phi.out_equal(&psi).unwrap());
    }

    /// out_equal(φ, ψ) agrees with testing φ ∘ ψ^{-1} for inner-ness.
    #[test]
    fn out_equal_matches_inverse_route(a in braid(6, 12), b in braid(6, 12)) {
        let (phi, psi) = (gamma(&a), gamma(&b));
        let quotient = phi.compose(&gamma(&b.inverse())).unwrap();
        prop_assert_eq!(
            phi.out_equal(&psi).unwrap(),
            quotient.common_conjugator().unwrap().is_some()
        );
    }
}

#[test]
fn conjugation_by_x1_example() {
    let x1 = FreeWord::from_signed(3, &[1]).unwrap();
    let inn = FreeAut::inner(&x1);
    assert_eq!(inn.common_conjugator().unwrap(), Some(x1));
}

#[test]
fn half_twist_has_no_conjugator() {
    let phi = gamma(&BraidWord::from_signed(4, &[1]).unwrap());
    assert_eq!(phi.common_conjugator().unwrap(), None);
    let psi = gamma(&BraidWord::from_signed(4, &[2]).unwrap());
    assert!(!phi.out_equal(&psi).unwrap());
}

#[test]
fn common_conjugator_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let m = [3, 4, 5, 6][rand::Rng::gen_range(&mut rng, 0..4)];
        let b = random_braid(&mut rng, m, 10);
        let w = random_free_word(&mut rng, m - 1, 8);
        // b b^{-1} conjugated by w is inner; so is the full twist
        let phi = gamma(&b.concat(&b.inverse()).unwrap()).then_inner(&w);
        let c = phi
            .common_conjugator()
            .unwrap()
            .expect("inner automorphism");
        for i in 1..=m {
            let x = phi.image_of_puncture(i);
            let base = FreeAut::identity(m - 1).image_of_puncture(i);
            assert_eq!(base.conjugate_by(&c), x);
        }
        assert_eq!(c, w);
    }
}

/// For rank ≤ 3 and conjugators of length ≤ 3, brute force over all candidate
/// words agrees with the solver, both for inner automorphisms and for
/// automorphisms that are not inner.
#[test]
fn common_conjugator_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for rank in 1..=3 {
        let m = rank + 1;
        let candidates = all_words(rank, 3);
        let brute = |phi: &FreeAut| -> Option<FreeWord> {
            candidates
                .iter()
                .find(|w| {
                    (1..=m).all(|i| {
                        FreeAut::identity(rank).image_of_puncture(i).conjugate_by(w)
                            == phi.image_of_puncture(i)
                    })
                })
                .cloned()
        };
        for w in all_words(rank, 3) {
            let phi = FreeAut::inner(&w);
            let expected = brute(&phi).unwrap();
            let got = phi.common_conjugator().unwrap().unwrap();
            assert_eq!(got, expected, "rank {rank}, w = {w}");
            if rank >= 2 {
                assert_eq!(got, w);
            }
        }
        if m >= 2 {
            for _ in 0..100 {
                let b = random_braid(&mut rng, m, 6);
                let w = random_free_word(&mut rng, rank, 3);
                let phi = gamma(&b).then_inner(&w);
                let got = phi.common_conjugator().unwrap();
                let expected = brute(&phi);
                match (&got, &expected) {
                    (Some(g), Some(e)) => assert_eq!(g, e),
                    (None, None) => {}
                    // the brute force only covers length ≤ 3
                    (Some(g), None) => assert!(g.len() > 3),
                    (None, Some(e)) => panic!("solver missed conjugator {e}"),
                }
            }
        }
    }
}
