use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Parameters `(m, n)` of the presentation `<a, t | t a^m t^-1 = a^n>`
/// together with the derived quantities every other module keys on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupParams {
    m: i64,
    n: i64,
    l: u64,
    g: u64,
    divisor_case: bool,
    r: Option<i64>,
}

impl GroupParams {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::domain(format!(
                "group parameters must be nonzero, got ({m},{n})"
            )));
        }
        let (am, an) = (m.unsigned_abs(), n.unsigned_abs());
        let g = am.gcd(&an);
        let l = (am / g)
            .checked_mul(an)
            .ok_or_else(|| Error::domain(format!("lcm(|{m}|,|{n}|) overflows")))?;
        let divisor_case = an % am == 0 || am % an == 0;
        let r = if an % am == 0 {
            Some(n / m)
        } else if am % an == 0 {
            Some(m / n)
        } else {
            None
        };
        Ok(GroupParams {
            m,
            n,
            l,
            g,
            divisor_case,
            r,
        })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn abs_m(&self) -> u64 {
        self.m.unsigned_abs()
    }

    pub fn abs_n(&self) -> u64 {
        self.n.unsigned_abs()
    }

    /// `lcm(|m|, |n|)`.
    pub fn l(&self) -> u64 {
        self.l
    }

    /// `gcd(|m|, |n|)`.
    pub fn g(&self) -> u64 {
        self.g
    }

    /// True iff one of `|m|`, `|n|` divides the other (including `|m| = |n|`).
    pub fn divisor_case(&self) -> bool {
        self.divisor_case
    }

    /// `n/m` or `m/n`, whichever is integral; absent outside the divisor case.
    pub fn r(&self) -> Option<i64> {
        self.r
    }

    /// `l/|n| = |m|/g`, the scale base for nonnegative t-exponent.
    pub fn l_over_n(&self) -> u64 {
        self.l / self.abs_n()
    }

    /// `l/|m| = |n|/g`, the scale base for negative t-exponent.
    pub fn l_over_m(&self) -> u64 {
        self.l / self.abs_m()
    }

    /// `|m| = |n|`: the completion is discrete.
    pub fn is_discrete(&self) -> bool {
        self.abs_m() == self.abs_n()
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BS({},{})", self.m, self.n)
    }
}
