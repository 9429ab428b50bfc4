//! Scale, modular function, flat rank and the local structure of the
//! completion, computed in closed form from the t-exponent, with the
//! Möller index sequence as an independent check.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::graph::trace;
use crate::group::{britton_reduce, conjugacy_normalize, GroupParams, Word};

/// `base^exponent`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaleValue {
    pub base: u64,
    pub exponent: u64,
    pub value: BigUint,
}

impl ScaleValue {
    fn new(base: u64, exponent: u64) -> ScaleValue {
        ScaleValue {
            base,
            exponent,
            value: BigUint::from(base).pow(exponent),
        }
    }
}

impl Serialize for ScaleValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ScaleValue", 3)?;
        st.serialize_field("base", &self.base)?;
        st.serialize_field("exponent", &self.exponent)?;
        st.serialize_field("value", &self.value.to_string())?;
        st.end()
    }
}

impl fmt::Display for ScaleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `s(w)`: `(l/|n|)^ρ` for `ρ >= 0`, `(l/|m|)^|ρ|` for `ρ < 0`.
pub fn scale(p: &GroupParams, w: &Word) -> ScaleValue {
    scale_for_exponent(p, w.t_exponent())
}

pub fn scale_for_exponent(p: &GroupParams, rho: i64) -> ScaleValue {
    if rho >= 0 {
        ScaleValue::new(p.l_over_n(), rho as u64)
    } else {
        ScaleValue::new(p.l_over_m(), rho.unsigned_abs())
    }
}

/// `Δ(w) = |m/n|^ρ` in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModularValue {
    pub numerator: BigUint,
    pub denominator: BigUint,
}

impl Serialize for ModularValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ModularValue", 2)?;
        st.serialize_field("numerator", &self.numerator.to_string())?;
        st.serialize_field("denominator", &self.denominator.to_string())?;
        st.end()
    }
}

impl fmt::Display for ModularValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

pub fn modular(p: &GroupParams, w: &Word) -> ModularValue {
    // |m/n| = (|m|/g) / (|n|/g), already coprime
    let rho = w.t_exponent();
    let (num, den) = if rho >= 0 {
        (p.l_over_n(), p.l_over_m())
    } else {
        (p.l_over_m(), p.l_over_n())
    };
    let k = rho.unsigned_abs();
    ModularValue {
        numerator: BigUint::from(num).pow(k),
        denominator: BigUint::from(den).pow(k),
    }
}

pub fn flat_rank(p: &GroupParams) -> u8 {
    if p.is_discrete() {
        0
    } else {
        1
    }
}

/// Generator exponent of the kernel of the action on cosets of `<a>`:
/// `|m|` when `|m| = |n|`, else 0 for the trivial kernel.
pub fn pi_kernel(p: &GroupParams) -> u64 {
    if p.is_discrete() {
        p.abs_m()
    } else {
        0
    }
}

/// Index sequence `r_k = [<a> : <a> ∩ z^-k <a> z^k]` for the cyclically
/// normalized conjugate `z`, with a stabilization verdict against the
/// closed-form scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MollerReport {
    pub normalized: Word,
    pub conjugator: Word,
    pub indices: Vec<BigUint>,
    pub scale: ScaleValue,
    /// `2N + 1`, `N` the number of `t^-1` letters of the normalized word.
    pub stable_from: usize,
    /// First `k` from which every later ratio equals the scale, if any
    /// ratio was observed at all.
    pub observed_stable_from: Option<usize>,
}

impl MollerReport {
    /// `r_{k+1} = s * r_k` for every `k >= stable_from` with `k + 1 <= k_max`.
    pub fn ratios_match(&self) -> bool {
        (self.stable_from..self.indices.len())
            .all(|k| self.indices[k] == &self.indices[k - 1] * &self.scale.value)
    }

    /// Ratio `r_{k+1} / r_k` at 1-based `k`, when it is an integer.
    pub fn ratio(&self, k: usize) -> Option<BigUint> {
        let (q, r) = self.indices[k].div_rem(&self.indices[k - 1]);
        if r == BigUint::from(0u8) {
            Some(q)
        } else {
            None
        }
    }
}

pub fn moller_sequence(p: &GroupParams, w: &Word, k_max: usize) -> Result<MollerReport> {
    let nf = conjugacy_normalize(p, w);
    let s = scale(p, w);
    let stable_from = 2 * nf.word.t_inverse_count() + 1;
    let indices: Vec<BigUint> = if p.is_discrete() {
        vec![BigUint::one(); k_max]
    } else {
        let one = BigUint::one();
        (1..=k_max)
            .into_par_iter()
            .map(|k| trace(p, &nf.word.pow(k), &one, &one))
            .collect::<Result<Vec<_>>>()?
    };
    let mut observed = None;
    for k in (1..indices.len()).rev() {
        if indices[k] == &indices[k - 1] * &s.value {
            observed = Some(k);
        } else {
            break;
        }
    }
    Ok(MollerReport {
        normalized: nf.word,
        conjugator: nf.conjugator,
        indices,
        scale: s,
        stable_from,
        observed_stable_from: observed,
    })
}

/// Size of the `<a>`-orbit of the coset `w<a>`: the generator exponent of
/// `<a> ∩ w <a> w^-1`, read off by tracing the reduced inverse.
pub fn orbit_order(p: &GroupParams, w: &Word) -> BigUint {
    let reduced = britton_reduce(p, w).inverse();
    let one = BigUint::one();
    trace(p, &reduced, &one, &one).expect("inverse of a reduced word is reduced")
}

/// Decomposes `d = g' B^r A^s` (`A = l/|n|`, `B = l/|m|`, `g' | g`).
pub fn orbit_shape(p: &GroupParams, d: &BigUint) -> Option<(u64, u64, u64)> {
    let mut rest = d.clone();
    let mut strip = |base: u64| {
        let mut count = 0;
        if base > 1 {
            let b = BigUint::from(base);
            while (&rest % &b) == BigUint::from(0u8) {
                rest = &rest / &b;
                count += 1;
            }
        }
        count
    };
    let r = strip(p.l_over_m());
    let s = strip(p.l_over_n());
    let g_prime: u64 = rest.try_into().ok()?;
    (g_prime > 0 && p.g().is_multiple_of(g_prime)).then_some((g_prime, r, s))
}

pub fn scale_value_set(p: &GroupParams, rho_max: u64) -> BTreeSet<BigUint> {
    (0..=rho_max)
        .flat_map(|rho| {
            [
                BigUint::from(p.l_over_m()).pow(rho),
                BigUint::from(p.l_over_n()).pow(rho),
            ]
        })
        .collect()
}

pub fn prime_divisors(mut x: u64) -> BTreeSet<u64> {
    let mut primes = BTreeSet::new();
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            primes.insert(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        primes.insert(x);
    }
    primes
}

/// Local structure of the completion, optionally relative to an element:
/// an open subgroup `V = ∏ Z_p` splits as `V+ V-`, expanded resp.
/// contracted by the element; the roles swap for negative t-exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub primes_vplus: BTreeSet<u64>,
    pub primes_vminus: BTreeSet<u64>,
    pub quotient_order_bound: u64,
    pub flat_rank: u8,
    pub kernel_exponent: u64,
    pub quasi_centre: String,
    pub swap_applied: bool,
    pub discrete: bool,
}

pub fn structure_report(p: &GroupParams, w: Option<&Word>) -> StructureReport {
    let mut plus = prime_divisors(p.l_over_n());
    let mut minus = prime_divisors(p.l_over_m());
    let swap_applied = w.is_some_and(|w| w.t_exponent() < 0);
    if swap_applied {
        std::mem::swap(&mut plus, &mut minus);
    }
    StructureReport {
        primes_vplus: plus,
        primes_vminus: minus,
        quotient_order_bound: p.g(),
        flat_rank: flat_rank(p),
        kernel_exponent: pi_kernel(p),
        quasi_centre: "ker Δ".to_string(),
        swap_applied,
        discrete: p.is_discrete(),
    }
}

/// `∏_{q ∈ V+} q^{v_q(s(w))}`: the part of the scale carried by `V+`.
pub fn vplus_scale_part(report: &StructureReport, s: &ScaleValue) -> BigUint {
    let mut part = BigUint::one();
    for &q in &report.primes_vplus {
        let q = BigUint::from(q);
        let mut v = s.value.clone();
        while (&v % &q) == BigUint::from(0u8) {
            v /= &q;
            part *= &q;
        }
    }
    part
}
