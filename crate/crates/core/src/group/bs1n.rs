//! The solvable case `|m| = 1`: normal form `t^-p a^q t^r` and the faithful
//! affine matrix representation over `Z[1/n]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::params::GroupParams;
use super::word::{Letter, Word};
use crate::error::{Error, Result};

/// `t a t^-1 = a^{n/m}`; with `|m| = 1` this is the integer `n*m`.
fn effective_n(p: &GroupParams) -> Result<i64> {
    if p.abs_m() != 1 {
        return Err(Error::domain(format!("{p} does not have |m| = 1")));
    }
    Ok(p.n() * p.m())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bs1nNormalForm {
    pub p: u64,
    pub q: BigInt,
    pub r: u64,
}

impl Bs1nNormalForm {
    pub fn expand(&self) -> Word {
        let q: i64 = self.q.clone().try_into().expect("q too large to expand");
        Word::t_pow(-(self.p as i64))
            .concat(&Word::a_pow(q))
            .concat(&Word::t_pow(self.r as i64))
    }
}

impl fmt::Display for Bs1nNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.p, self.q, self.r)
    }
}

/// Rewrites `w` to `t^-p a^q t^r` using `t a^{±1} -> a^{±n} t`,
/// `a^{±1} t^-1 -> t^-1 a^{±n}` and free cancellation, then strips pinches
/// `t^-1 a^{nc} t -> a^c` while `p, r > 0`.
pub fn bs1n_normal_form(params: &GroupParams, w: &Word) -> Result<Bs1nNormalForm> {
    let n = BigInt::from(effective_n(params)?);
    // state: t^-p a^q t^r, with t^r a^e = a^{e n^r} t^r kept as `shift = n^r`
    let mut p: u64 = 0;
    let mut q = BigInt::zero();
    let mut r: u64 = 0;
    let mut shift = BigInt::one();
    for &letter in w.letters() {
        match letter {
            Letter::APos => q += &shift,
            Letter::ANeg => q -= &shift,
            Letter::TPos => {
                r += 1;
                shift *= &n;
            }
            Letter::TNeg => {
                if r > 0 {
                    r -= 1;
                    shift /= &n;
                } else {
                    // a^q t^-1 = t^-1 a^{qn}
                    p += 1;
                    q *= &n;
                }
            }
        }
    }
    while p > 0 && r > 0 && q.is_multiple_of(&n) {
        p -= 1;
        r -= 1;
        q /= &n;
    }
    Ok(Bs1nNormalForm { p, q, r })
}

/// `[[top_left, top_right], [0, 1]]` with `top_left = n^rho`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bs1nMatrix {
    pub top_left: BigRational,
    pub top_right: BigRational,
}

impl Bs1nMatrix {
    pub fn identity() -> Bs1nMatrix {
        Bs1nMatrix {
            top_left: BigRational::one(),
            top_right: BigRational::zero(),
        }
    }

    pub fn mul(&self, rhs: &Bs1nMatrix) -> Bs1nMatrix {
        Bs1nMatrix {
            top_left: &self.top_left * &rhs.top_left,
            top_right: &self.top_left * &rhs.top_right + &self.top_right,
        }
    }

    pub fn entries(&self) -> [[BigRational; 2]; 2] {
        [
            [self.top_left.clone(), self.top_right.clone()],
            [BigRational::zero(), BigRational::one()],
        ]
    }

    pub fn determinant(&self) -> BigRational {
        self.top_left.clone()
    }
}

impl fmt::Display for Bs1nMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [0, 1]]", self.top_left, self.top_right)
    }
}

/// Image of `w` under `a -> [[1,1],[0,1]]`, `t -> [[n/m,0],[0,1]]`.
pub fn bs1n_matrix(params: &GroupParams, w: &Word) -> Result<Bs1nMatrix> {
    let n = BigRational::from_integer(BigInt::from(effective_n(params)?));
    let gen = |letter: Letter| match letter {
        Letter::APos => Bs1nMatrix {
            top_left: BigRational::one(),
            top_right: BigRational::one(),
        },
        Letter::ANeg => Bs1nMatrix {
            top_left: BigRational::one(),
            top_right: -BigRational::one(),
        },
        Letter::TPos => Bs1nMatrix {
            top_left: n.clone(),
            top_right: BigRational::zero(),
        },
        Letter::TNeg => Bs1nMatrix {
            top_left: n.recip(),
            top_right: BigRational::zero(),
        },
    };
    Ok(w
        .letters()
        .iter()
        .fold(Bs1nMatrix::identity(), |acc, &l| acc.mul(&gen(l))))
}
