#![allow(dead_code)]

use bscale::group::{is_britton_reduced, GroupParams, Letter, Word};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const LETTERS: [Letter; 4] = [Letter::APos, Letter::ANeg, Letter::TPos, Letter::TNeg];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn bs(m: i64, n: i64) -> GroupParams {
    GroupParams::new(m, n).unwrap()
}

/// Uniform letters, uniform length in `0..=max_len`.
pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| LETTERS[rng.gen_range(0..4)]).collect())
}

/// Rejection-samples a freely reduced, pinch-free word.
pub fn random_reduced_word(rng: &mut impl Rng, p: &GroupParams, max_len: usize) -> Word {
    loop {
        let w = random_word(rng, max_len);
        if is_britton_reduced(p, &w) {
            return w;
        }
    }
}

/// Every freely reduced, pinch-free word of length at most `max_len`.
pub fn all_reduced_words(p: &GroupParams, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    let mut frontier = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &LETTERS {
                let mut v = w.clone();
                v.push(l);
                if is_britton_reduced(p, &v) {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
