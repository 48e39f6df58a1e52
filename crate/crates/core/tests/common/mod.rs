#![allow(dead_code)]

use hilden_core::braid::{BraidLetter, BraidWord};
use hilden_core::free_group::{FreeWord, Letter};
use rand::Rng;

pub fn random_braid<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| BraidLetter {
            index: rng.gen_range(1..strands),
            inverse: rng.gen_bool(0.5),
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

pub fn random_free_word<R: Rng>(rng: &mut R, rank: usize, len: usize) -> FreeWord {
    FreeWord::free_reduce(
        rank,
        (0..len).map(|_| Letter::new(rng.gen_range(1..=rank), rng.gen_bool(0.5))),
    )
    .unwrap()
}

/// Every reduced word of length at most `max_len`, shortest first.
pub fn all_words(rank: usize, max_len: usize) -> Vec<FreeWord> {
    let letters: Vec<Letter> = (1..=rank)
        .flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
        .collect();
    let mut out = vec![FreeWord::identity(rank)];
    let mut frontier = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.last() == Some(&l.inverse()) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                out.push(FreeWord::free_reduce(rank, v.iter().copied()).unwrap());
                next.push(v);
            }
        }
        frontier = next;
    }
    out
}
