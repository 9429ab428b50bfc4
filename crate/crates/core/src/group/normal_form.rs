//! Canonical HNN normal form `a^{c_1} t^{e_1} ... a^{c_s} t^{e_s} a^k`.
//!
//! Transversals: `0 <= c_i < |n|` before `t`, `0 <= c_i < |m|` before
//! `t^-1`. The carry rules are `a^{q|n|} t = t a^{q sgn(n) m}` and
//! `a^{q|m|} t^-1 = t^-1 a^{q sgn(m) n}`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::britton::{britton_reduce_syllables, Syllable, SyllableWord};
use super::params::GroupParams;
use super::word::{Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementNormalForm {
    pub syllables: Vec<(u64, Sign)>,
    pub tail: BigInt,
}

impl ElementNormalForm {
    pub fn expand(&self) -> Word {
        let mut w = Word::identity();
        for &(c, e) in &self.syllables {
            for letter in Word::a_pow(c as i64).into_letters() {
                w.push(letter);
            }
            w.push(super::word::Letter::t(e));
        }
        let tail = self.tail.to_i64().expect("tail exponent too large to expand");
        w.concat(&Word::a_pow(tail))
    }

    /// The left coset `w<a>` this element lies in.
    pub fn coset(&self) -> Vec<(u64, Sign)> {
        self.syllables.clone()
    }
}

/// Compact form such as `a t a^2 t^-1 a^-3`; `e` for the identity.
impl fmt::Display for ElementNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let power = |k: &BigInt, parts: &mut Vec<String>| {
            if k == &BigInt::from(1) {
                parts.push("a".into());
            } else if !k.is_zero() {
                parts.push(format!("a^{k}"));
            }
        };
        for &(c, e) in &self.syllables {
            power(&BigInt::from(c), &mut parts);
            parts.push(if e == Sign::Pos { "t".into() } else { "t^-1".into() });
        }
        power(&self.tail, &mut parts);
        if parts.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

pub(crate) fn normal_form_of_syllables(p: &GroupParams, w: &SyllableWord) -> ElementNormalForm {
    let reduced = britton_reduce_syllables(p, w);
    let mut syllables = Vec::new();
    let mut carry = BigInt::zero();
    for s in reduced.syllables() {
        match s {
            Syllable::A(k) => carry += k,
            Syllable::T(e) => {
                let (modulus, sign, image) = match e {
                    Sign::Pos => (p.abs_n(), p.n().signum(), p.m()),
                    Sign::Neg => (p.abs_m(), p.m().signum(), p.n()),
                };
                let (q, c) = carry.div_mod_floor(&BigInt::from(modulus));
                syllables.push((c.to_u64().expect("residue below modulus"), *e));
                carry = q * (sign * image);
            }
        }
    }
    ElementNormalForm {
        syllables,
        tail: carry,
    }
}

/// Canonical form of the element represented by `w`; two words share a form
/// iff they are equal in BS(m,n).
pub fn element_normal_form(p: &GroupParams, w: &Word) -> ElementNormalForm {
    normal_form_of_syllables(p, &SyllableWord::from_word(w))
}
