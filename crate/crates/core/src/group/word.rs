//! Words over `{a, a^-1, t, t^-1}`, their text grammar and free reduction.
//!
//! Grammar: tokens separated by optional whitespace, each token a letter
//! from `a A t T` (`A = a^-1`, `T = t^-1`) optionally followed by `^` and a
//! signed integer exponent. Exponents on inverse letters compose, so `A^2`
//! is `a^-2` and `T^-1` is `t`.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Upper bound on the number of letters a single parse may expand to.
pub const MAX_PARSED_LETTERS: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn of(x: i64) -> Option<Sign> {
        match x.signum() {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    APos,
    ANeg,
    TPos,
    TNeg,
}

impl Letter {
    pub fn a(sign: Sign) -> Letter {
        match sign {
            Sign::Pos => Letter::APos,
            Sign::Neg => Letter::ANeg,
        }
    }

    pub fn t(sign: Sign) -> Letter {
        match sign {
            Sign::Pos => Letter::TPos,
            Sign::Neg => Letter::TNeg,
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::APos => Letter::ANeg,
            Letter::ANeg => Letter::APos,
            Letter::TPos => Letter::TNeg,
            Letter::TNeg => Letter::TPos,
        }
    }

    pub fn is_t(self) -> bool {
        matches!(self, Letter::TPos | Letter::TNeg)
    }

    pub fn sign(self) -> Sign {
        match self {
            Letter::APos | Letter::TPos => Sign::Pos,
            Letter::ANeg | Letter::TNeg => Sign::Neg,
        }
    }

    fn symbol(self) -> char {
        match self {
            Letter::APos => 'a',
            Letter::ANeg => 'A',
            Letter::TPos => 't',
            Letter::TNeg => 'T',
        }
    }
}

/// A word in the generators; the empty word is the identity. Parsing never
/// reduces.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn a_pow(k: i64) -> Word {
        let letter = if k >= 0 { Letter::APos } else { Letter::ANeg };
        Word::from_letters(vec![letter; k.unsigned_abs() as usize])
    }

    pub fn t_pow(k: i64) -> Word {
        let letter = if k >= 0 { Letter::TPos } else { Letter::TNeg };
        Word::from_letters(vec![letter; k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn inverse(&self) -> Word {
        Word::from_letters(self.letters.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Literal `k`-fold repetition (no reduction).
    pub fn pow(&self, k: usize) -> Word {
        Word::from_letters(self.letters.repeat(k))
    }

    /// Number of `t` letters minus number of `t^-1` letters.
    pub fn t_exponent(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::TPos => 1,
                Letter::TNeg => -1,
                _ => 0,
            })
            .sum()
    }

    /// The `t`-letters of the word in order, with all `a`-letters deleted.
    pub fn t_path(&self) -> Vec<Sign> {
        self.letters
            .iter()
            .filter(|l| l.is_t())
            .map(|l| l.sign())
            .collect()
    }

    pub fn t_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_t()).count()
    }

    pub fn t_inverse_count(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::TNeg).count()
    }

    /// Index of the first adjacent inverse pair, if any.
    pub fn first_cancellation(&self) -> Option<usize> {
        self.letters
            .windows(2)
            .position(|w| w[0] == w[1].inverse())
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.first_cancellation().is_none()
    }

    /// Compact form with runs of equal letters folded: `t^4 a t^-2 a`.
    /// The identity renders as the empty string.
    pub fn to_compact(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let letter = self.letters[i];
            let run = self.letters[i..]
                .iter()
                .take_while(|&&l| l == letter)
                .count();
            if !out.is_empty() {
                out.push(' ');
            }
            if run == 1 {
                out.push(letter.symbol());
            } else {
                let base = match letter {
                    Letter::APos | Letter::ANeg => 'a',
                    Letter::TPos | Letter::TNeg => 't',
                };
                let sign = if letter.sign() == Sign::Neg { "-" } else { "" };
                out.push_str(&format!("{base}^{sign}{run}"));
            }
            i += run;
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_word(s)
    }
}

/// Parses the word grammar. Errors carry the byte offset of the offending
/// token.
pub fn parse_word(text: &str) -> Result<Word> {
    let bytes = text.as_bytes();
    let mut letters = Vec::new();
    let mut pos = 0;
    let err = |offset: usize, message: &str| Error::Parse {
        offset,
        message: message.to_string(),
    };

    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let letter = match c {
            b'a' => Letter::APos,
            b'A' => Letter::ANeg,
            b't' => Letter::TPos,
            b'T' => Letter::TNeg,
            _ => {
                let ch = text[pos..].chars().next().unwrap_or('?');
                return Err(err(pos, &format!("unexpected character {ch:?}")));
            }
        };
        let token_start = pos;
        pos += 1;

        let mut exponent: i64 = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let num_start = pos;
            let mut negative = false;
            if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                negative = bytes[pos] == b'-';
                pos += 1;
            }
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if digits_start == pos {
                return Err(err(num_start, "expected an integer exponent after '^'"));
            }
            let magnitude: i64 = text[digits_start..pos]
                .parse()
                .map_err(|_| err(num_start, "exponent out of range"))?;
            exponent = if negative { -magnitude } else { magnitude };
        }

        let count = exponent.unsigned_abs() as usize;
        if letters.len().saturating_add(count) > MAX_PARSED_LETTERS {
            return Err(err(token_start, "word expands beyond the letter limit"));
        }
        let letter = if exponent < 0 { letter.inverse() } else { letter };
        letters.extend(std::iter::repeat_n(letter, count));
    }
    Ok(Word::from_letters(letters))
}

/// Removes adjacent inverse pairs until none remain. Idempotent.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &letter in w.letters() {
        if out.last() == Some(&letter.inverse()) {
            out.pop();
        } else {
            out.push(letter);
        }
    }
    Word::from_letters(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert!(w("").is_empty());
        assert_eq!(
            w("t^4 a t^-2 a").letters(),
            &[TPos, TPos, TPos, TPos, APos, TNeg, TNeg, APos]
        );
        assert_eq!(w("aA").len(), 2);
        assert_eq!(w("a^-3"), w("AAA"));
        assert_eq!(w("A^2"), w("a^-2"));
        assert_eq!(w("T^-1"), w("t"));
        assert_eq!(w("a^0 t"), w("t"));
        assert_eq!(w("a^+2"), w("aa"));
        assert_eq!(w("  t\ta\n"), w("ta"));
    }

    #[test]
    fn parse_errors_report_offsets() {
        assert_eq!(
            parse_word("t x"),
            Err(Error::Parse {
                offset: 2,
                message: "unexpected character 'x'".into()
            })
        );
        assert!(matches!(parse_word("a^"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_word("a^-"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_word("ta ^2"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(
            parse_word("a^99999999999999999999"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            parse_word("a^999999999"),
            Err(Error::Parse { offset: 0, .. })
        ));
    }

    #[test]
    fn free_reduction() {
        assert!(free_reduce(&w("aA")).is_empty());
        assert_eq!(free_reduce(&w("t a A t")), w("tt"));
        assert_eq!(free_reduce(&w("t^4 a t^-2 a")), w("t^4 a t^-2 a"));
        assert!(free_reduce(&w("t a T t A T")).is_empty());
    }

    #[test]
    fn t_exponent_examples() {
        assert_eq!(w("t a T T a t").t_exponent(), 0);
        assert_eq!(w("t^4 a t^-2 a").t_exponent(), 2);
        assert_eq!(w("T^3").t_exponent(), -3);
    }

    #[test]
    fn compact_rendering() {
        assert_eq!(w("ttttaTTa").to_compact(), "t^4 a t^-2 a");
        assert_eq!(w("AAAt").to_compact(), "a^-3 t");
        assert_eq!(w("").to_compact(), "");
        assert_eq!(w("aTa").to_compact(), "a T a");
    }

    #[test]
    fn inverse_and_powers() {
        assert_eq!(w("t a").inverse(), w("A T"));
        assert_eq!(w("ta").pow(3), w("tatata"));
        assert_eq!(w("t^4 a t^-2 a").t_path().len(), 6);
        assert_eq!(w("t^4 a t^-2 a").t_inverse_count(), 2);
    }
}
