use hilden_core::abelian::{
    abelian_invariants, min_generators_lower_bound, smith_normal_form, AbelianInvariants,
    IntMatrix, Presentation,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Determinant by cofactor expansion; independent of the Bareiss routine.
fn cofactor_det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &a[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from gcds of k×k minors: d_k = D_k / D_{k-1}.
fn minors_oracle(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| BigInt::from(m[r][c])).collect())
                    .collect();
                g = g.gcd(&cofactor_det(&sub));
            }
        }
        if g.is_zero() {
            out.resize(rows.min(cols), BigInt::zero());
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize) -> Vec<Vec<i64>> {
    let r = rng.gen_range(1..=max_dim);
    let c = rng.gen_range(1..=max_dim);
    let sparse = rng.gen_bool(0.3);
    (0..r)
        .map(|_| {
            (0..c)
                .map(|_| {
                    if sparse && rng.gen_bool(0.6) {
                        0
                    } else {
                        rng.gen_range(-20..=20)
                    }
                })
                .collect()
        })
        .collect()
}

fn assert_smith(m: &IntMatrix) -> Vec<BigInt> {
    let f = smith_normal_form(m);
    assert_eq!(f.u.mul(m).mul(&f.v), f.s);
    assert!(f.s.is_diagonal());
    assert_eq!(f.u.determinant().abs(), BigInt::one());
    assert_eq!(f.v.determinant().abs(), BigInt::one());
    let d = f.invariant_factors();
    for w in d.windows(2) {
        assert!(!w[0].is_negative());
        if w[0].is_zero() {
            assert!(w[1].is_zero());
        } else {
            assert!(w[1].is_multiple_of(&w[0]));
        }
    }
    d
}

#[test]
fn smith_form_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let m = random_matrix(&mut rng, 8);
        assert_smith(&IntMatrix::from_rows(&m).unwrap());
    }
}

#[test]
fn smith_form_matches_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..50 {
        let m = random_matrix(&mut rng, 4);
        let d = assert_smith(&IntMatrix::from_rows(&m).unwrap());
        assert_eq!(d, minors_oracle(&m), "{m:?}");
    }
    // diag(2, 3) by hand: D_1 = 1, D_2 = 6
    assert_eq!(
        minors_oracle(&[vec![2, 0], vec![0, 3]]),
        [BigInt::from(1), BigInt::from(6)]
    );
}

#[test]
fn cofactor_and_bareiss_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..50 {
        let n = rng.gen_range(1..=5);
        let m: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        let big: Vec<Vec<BigInt>> = m
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(
            IntMatrix::from_rows(&m).unwrap().determinant(),
            cofactor_det(&big)
        );
    }
}

fn relator() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec(
        (0..3usize, prop_oneof![Just(1i64), Just(-1i64), -3i64..=3]),
        0..8,
    )
}

fn invert(r: &[(usize, i64)]) -> Vec<(usize, i64)> {
    r.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

proptest! {
    /// Relator conjugation, inversion, and multiplication by another relator
    /// leave the group, hence its abelianization, unchanged.
    #[test]
    fn tietze_moves_preserve_invariants(
        rels in prop::collection::vec(relator(), 1..5),
        conj in relator(),
        pick in 0usize..100,
        other in 0usize..100,
        which in 0u8..3,
    ) {
        let gens: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let base = Presentation::new(gens.clone(), rels.clone()).unwrap();
        let i = pick % rels.len();
        let mut moved = rels.clone();
        moved[i] = match which {
            0 => conj.iter().copied().chain(rels[i].iter().copied()).chain(invert(&conj)).collect(),
            1 => invert(&rels[i]),
            _ => {
                let j = other % rels.len();
                rels[i].iter().copied().chain(rels[j].iter().copied()).collect()
            }
        };
        if which == 2 && other % rels.len() == i {
            // r_i r_i is not a Tietze move; skip
            return Ok(());
        }
        let moved = Presentation::new(gens, moved).unwrap();
        prop_assert_eq!(abelian_invariants(&base), abelian_invariants(&moved));
    }
}

#[test]
fn shipped_relation_fixtures() {
    let p = Presentation::parse(include_str!("../fixtures/arc_relation_n1.pres")).unwrap();
    let inv = abelian_invariants(&p);
    assert_eq!(inv, AbelianInvariants::new(2, vec![]));
    let p = Presentation::parse(include_str!("../fixtures/arc_relation_n2.pres")).unwrap();
    assert_eq!(abelian_invariants(&p), AbelianInvariants::new(4, vec![]));
}

#[test]
fn lower_bound_for_z_plus_two_z2() {
    let inv = AbelianInvariants::new(1, vec![2, 2]);
    assert_eq!(min_generators_lower_bound(&inv), 3);
    let inv = AbelianInvariants::new(1, vec![2]);
    assert_eq!(min_generators_lower_bound(&inv), 2);
}
