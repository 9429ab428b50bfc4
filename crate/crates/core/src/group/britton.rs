//! Britton reduction and the word problem.
//!
//! A pinch is a subword `t a^{cm} t^-1` or `t^-1 a^{cn} t`; removing it
//! replaces it by `a^{cn}` resp. `a^{cm}` (signed `c`, divisibility tested
//! against `|m|`, `|n|`). A freely reduced word equal to the identity is
//! empty or contains a pinch, so reducing to a pinch-free form decides
//! equality.

use std::ops::Range;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::params::GroupParams;
use super::word::{Letter, Sign, Word};

/// Run-length view of a word: maximal `a`-powers separated by single
/// `t`-letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Syllable {
    A(BigInt),
    T(Sign),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SyllableWord {
    syllables: Vec<Syllable>,
}

impl SyllableWord {
    pub fn from_word(w: &Word) -> SyllableWord {
        let mut out = SyllableWord::default();
        let mut run: i64 = 0;
        for &letter in w.letters() {
            match letter {
                Letter::APos => run += 1,
                Letter::ANeg => run -= 1,
                Letter::TPos | Letter::TNeg => {
                    if run != 0 {
                        out.syllables.push(Syllable::A(BigInt::from(run)));
                        run = 0;
                    }
                    out.syllables.push(Syllable::T(letter.sign()));
                }
            }
        }
        if run != 0 {
            out.syllables.push(Syllable::A(BigInt::from(run)));
        }
        out
    }

    pub fn from_syllables(syllables: Vec<Syllable>) -> SyllableWord {
        SyllableWord { syllables }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn push(&mut self, s: Syllable) {
        self.syllables.push(s);
    }

    pub fn extend_from(&mut self, other: &SyllableWord) {
        self.syllables.extend_from_slice(&other.syllables);
    }

    pub fn inverse(&self) -> SyllableWord {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| match s {
                Syllable::A(k) => Syllable::A(-k),
                Syllable::T(e) => Syllable::T(-*e),
            })
            .collect();
        SyllableWord { syllables }
    }

    pub fn has_t(&self) -> bool {
        self.syllables.iter().any(|s| matches!(s, Syllable::T(_)))
    }

    /// Expands back to letters.
    ///
    /// Panics if an exponent does not fit in memory as a letter run.
    pub fn to_word(&self) -> Word {
        let mut w = Word::identity();
        for s in &self.syllables {
            match s {
                Syllable::A(k) => {
                    let k = k.to_i64().expect("a-exponent too large to expand");
                    let letter = if k > 0 { Letter::APos } else { Letter::ANeg };
                    for _ in 0..k.unsigned_abs() {
                        w.push(letter);
                    }
                }
                Syllable::T(e) => w.push(Letter::t(*e)),
            }
        }
        w
    }
}

/// Stack machine that keeps its contents freely reduced and pinch-free as
/// syllables are appended. Pinches are removed as soon as their closing
/// `t`-letter arrives, which is leftmost-innermost order.
#[derive(Clone)]
pub(crate) struct Reducer {
    abs_m: BigInt,
    abs_n: BigInt,
    m: BigInt,
    n: BigInt,
    stack: Vec<Syllable>,
}

impl Reducer {
    pub(crate) fn new(p: &GroupParams) -> Reducer {
        Reducer {
            abs_m: BigInt::from(p.abs_m()),
            abs_n: BigInt::from(p.abs_n()),
            m: BigInt::from(p.m()),
            n: BigInt::from(p.n()),
            stack: Vec::new(),
        }
    }

    pub(crate) fn push_a(&mut self, k: BigInt) {
        if k.is_zero() {
            return;
        }
        if let Some(Syllable::A(top)) = self.stack.last_mut() {
            *top += k;
            if top.is_zero() {
                self.stack.pop();
            }
        } else {
            self.stack.push(Syllable::A(k));
        }
    }

    pub(crate) fn push_t(&mut self, e: Sign) {
        let len = self.stack.len();
        if let Some(Syllable::T(top)) = self.stack.last() {
            if *top == -e {
                self.stack.pop();
                return;
            }
        }
        if len >= 2 {
            if let (Syllable::T(open), Syllable::A(k)) = (&self.stack[len - 2], &self.stack[len - 1]) {
                if *open == -e {
                    // t a^{cm} T -> a^{cn};  T a^{cn} t -> a^{cm}
                    let (modulus, divisor, image) = match open {
                        Sign::Pos => (&self.abs_m, &self.m, &self.n),
                        Sign::Neg => (&self.abs_n, &self.n, &self.m),
                    };
                    if k.is_multiple_of(modulus) {
                        let replacement = (k / divisor) * image;
                        self.stack.truncate(len - 2);
                        self.push_a(replacement);
                        return;
                    }
                }
            }
        }
        self.stack.push(Syllable::T(e));
    }

    pub(crate) fn push(&mut self, s: &Syllable) {
        match s {
            Syllable::A(k) => self.push_a(k.clone()),
            Syllable::T(e) => self.push_t(*e),
        }
    }

    pub(crate) fn extend(&mut self, w: &SyllableWord) {
        for s in w.syllables() {
            self.push(s);
        }
    }

    pub(crate) fn finish(self) -> SyllableWord {
        SyllableWord {
            syllables: self.stack,
        }
    }
}

pub fn britton_reduce_syllables(p: &GroupParams, w: &SyllableWord) -> SyllableWord {
    let mut r = Reducer::new(p);
    r.extend(w);
    r.finish()
}

/// Alternately free-reduces and removes pinches until neither applies. The
/// result equals `w` in BS(m,n), is freely reduced and pinch-free, and has
/// the same t-exponent.
pub fn britton_reduce(p: &GroupParams, w: &Word) -> Word {
    britton_reduce_syllables(p, &SyllableWord::from_word(w)).to_word()
}

/// `Some(k)` iff the reduced syllable word is `a^k`.
pub(crate) fn reduced_power(reduced: &SyllableWord) -> Option<BigInt> {
    match reduced.syllables() {
        [] => Some(BigInt::zero()),
        [Syllable::A(k)] => Some(k.clone()),
        _ => None,
    }
}

/// Returns `k` iff `w = a^k` in BS(m,n).
pub fn as_power_of_a(p: &GroupParams, w: &Word) -> Option<BigInt> {
    reduced_power(&britton_reduce_syllables(p, &SyllableWord::from_word(w)))
}

pub fn equal_elements(p: &GroupParams, w: &Word, u: &Word) -> bool {
    if w.t_exponent() != u.t_exponent() {
        return false;
    }
    as_power_of_a(p, &w.concat(&u.inverse())).is_some_and(|k| k.is_zero())
}

pub fn t_exponent(w: &Word) -> i64 {
    w.t_exponent()
}

/// Letter range of the leftmost pinch `t^e a^k t^-e` in `w`, where the
/// letters strictly between the two `t`-letters are all `a`-letters whose
/// exponent sum satisfies the pinch divisibility condition.
pub fn find_pinch(p: &GroupParams, w: &Word) -> Option<Range<usize>> {
    let letters = w.letters();
    let mut open: Option<(usize, Sign)> = None;
    let mut sum: i64 = 0;
    for (i, &letter) in letters.iter().enumerate() {
        match letter {
            Letter::APos => sum += 1,
            Letter::ANeg => sum -= 1,
            Letter::TPos | Letter::TNeg => {
                let e = letter.sign();
                if let Some((start, o)) = open {
                    if o == -e && pinch_divides(p, o, sum) {
                        return Some(start..i + 1);
                    }
                }
                open = Some((i, e));
                sum = 0;
            }
        }
    }
    None
}

fn pinch_divides(p: &GroupParams, open: Sign, k: i64) -> bool {
    let modulus = match open {
        Sign::Pos => p.abs_m(),
        Sign::Neg => p.abs_n(),
    };
    k.unsigned_abs().is_multiple_of(modulus)
}

/// Replaces the pinch occupying `range` by its `a`-power image.
pub fn remove_pinch(p: &GroupParams, w: &Word, range: Range<usize>) -> Word {
    let letters = w.letters();
    let open = letters[range.start].sign();
    let k: i64 = letters[range.start + 1..range.end - 1]
        .iter()
        .map(|l| l.sign().as_i64())
        .sum();
    let image = match open {
        Sign::Pos => (k / p.m()) * p.n(),
        Sign::Neg => (k / p.n()) * p.m(),
    };
    let mut out = letters[..range.start].to_vec();
    out.extend(Word::a_pow(image).into_letters());
    out.extend_from_slice(&letters[range.end..]);
    Word::from_letters(out)
}

/// Freely reduced and free of pinches.
pub fn is_britton_reduced(p: &GroupParams, w: &Word) -> bool {
    w.is_freely_reduced() && find_pinch(p, w).is_none()
}
