//! Cyclic normalization: conjugate a word until its square is freely
//! reduced and pinch-free, so every positive power is too.

use super::britton::{find_pinch, remove_pinch};
use super::params::GroupParams;
use super::word::{Letter, Sign, Word};

/// Result of [`conjugacy_normalize`]: `conjugator * word * conjugator^-1`
/// equals the input in BS(m,n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyNormalForm {
    pub word: Word,
    pub conjugator: Word,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Move {
    Cancel,
    StripEnds,
    RemovePinch,
    CyclicPinch,
}

/// Applies the four moves (free cancellation, stripping `c z c^-1`, pinch
/// removal, pinch across the cyclic seam) in that priority, restarting
/// after each one, until none applies.
pub fn conjugacy_normalize(p: &GroupParams, w: &Word) -> ConjugacyNormalForm {
    let mut y = w.clone();
    let mut conjugator = Word::identity();
    while apply_move(p, &mut y, &mut conjugator).is_some() {}
    ConjugacyNormalForm {
        word: y,
        conjugator,
    }
}

fn apply_move(p: &GroupParams, y: &mut Word, h: &mut Word) -> Option<Move> {
    // 1. free cancellation
    if let Some(i) = y.first_cancellation() {
        let mut letters = y.letters().to_vec();
        letters.drain(i..i + 2);
        *y = Word::from_letters(letters);
        return Some(Move::Cancel);
    }

    // 2. y = c z c^-1  ->  z = c^-1 y c
    let letters = y.letters();
    if letters.len() >= 2 && letters[0] == letters[letters.len() - 1].inverse() {
        let c = letters[0];
        *y = Word::from_letters(letters[1..letters.len() - 1].to_vec());
        h.push(c);
        return Some(Move::StripEnds);
    }

    // 3. pinch inside y
    if let Some(range) = find_pinch(p, y) {
        *y = remove_pinch(p, y, range);
        return Some(Move::RemovePinch);
    }

    // 4. pinch straddling the seam of yy: y = a^i t^-e v t^e a^j with the
    //    seam run a^{j+i} divisible as a pinch. Conjugating by c = a^i t^-e
    //    gives c^-1 y c = v t^e a^{i+j} t^-e = v a^{image}.
    let t_positions: Vec<usize> = letters
        .iter()
        .enumerate()
        .filter(|(_, l)| l.is_t())
        .map(|(i, _)| i)
        .collect();
    if t_positions.len() >= 2 {
        let first = t_positions[0];
        let last = *t_positions.last().unwrap();
        let first_sign = letters[first].sign();
        let last_sign = letters[last].sign();
        if first_sign == -last_sign {
            let i = a_sum(&letters[..first]);
            let j = a_sum(&letters[last + 1..]);
            let k = i + j;
            let (modulus, divisor, image) = match last_sign {
                Sign::Pos => (p.abs_m(), p.m(), p.n()),
                Sign::Neg => (p.abs_n(), p.n(), p.m()),
            };
            if k.unsigned_abs().is_multiple_of(modulus) {
                let v = &letters[first + 1..last];
                let mut z = v.to_vec();
                z.extend(Word::a_pow((k / divisor) * image).into_letters());
                let mut c = Word::a_pow(i);
                c.push(Letter::t(first_sign));
                *h = h.concat(&c);
                *y = Word::from_letters(z);
                return Some(Move::CyclicPinch);
            }
        }
    }
    None
}

fn a_sum(letters: &[Letter]) -> i64 {
    letters.iter().map(|l| l.sign().as_i64()).sum()
}

/// True iff `w w` is freely reduced and pinch-free (hence so is every
/// positive power of `w`).
pub fn is_cyclically_normal(p: &GroupParams, w: &Word) -> bool {
    let ww = w.concat(w);
    ww.is_freely_reduced() && find_pinch(p, &ww).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::britton::equal_elements;
    use crate::group::word::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn check(p: &GroupParams, input: &str) -> ConjugacyNormalForm {
        let x = w(input);
        let nf = conjugacy_normalize(p, &x);
        assert!(is_cyclically_normal(p, &nf.word), "{input} -> {}", nf.word);
        let back = nf.conjugator.concat(&nf.word).concat(&nf.conjugator.inverse());
        assert!(equal_elements(p, &back, &x), "{input}: certificate fails");
        assert_eq!(nf.word.t_exponent(), x.t_exponent());
        nf
    }

    #[test]
    fn strips_conjugating_letters() {
        let p = GroupParams::new(2, 3).unwrap();
        let nf = check(&p, "a t A");
        assert_eq!(nf.word, w("t"));
        assert!(equal_elements(&p, &w("A a t A a"), &w("t")));
    }

    #[test]
    fn already_normal_is_fixed() {
        let p = GroupParams::new(2, 3).unwrap();
        assert_eq!(check(&p, "t").word, w("t"));
        assert_eq!(check(&p, "t a T a").word, w("t a T a"));
    }

    #[test]
    fn wrapped_form() {
        let p = GroupParams::new(2, 3).unwrap();
        let nf = check(&p, "a^2 t^-1 a t a^-2");
        assert_eq!(nf.word.t_exponent(), 0);
    }

    #[test]
    fn seam_pinch_move() {
        // y = a T a^2 t a: yy has t a a T across the seam with m | 2
        let p = GroupParams::new(2, 3).unwrap();
        let nf = check(&p, "a T a^2 t a");
        assert_eq!(nf.word.t_count(), 0);
        // n-side: y = a t a^3 T a^2, seam run a^3 with |n| = 3
        let nf = check(&p, "a t a T a^2");
        assert_eq!(nf.word.t_count(), 0);
        check(&p, "a^2 t a T t a");
        check(&p, "T a t a t");
    }

    #[test]
    fn signed_parameters() {
        for (m, n) in [(2, -3), (-2, 3), (-4, 6), (2, -4)] {
            let p = GroupParams::new(m, n).unwrap();
            for s in ["a t A", "a T a^2 t a", "A^3 t a T a^5 t T", "t a^2 T a t A^4 T"] {
                check(&p, s);
            }
        }
    }
}
