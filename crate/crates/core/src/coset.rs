//! Brute-force ground truth on the Bass-Serre tree: a finite ball of left
//! cosets `w<a>`, the partial action of the generators on it, and
//! membership scans that decide intersections by Britton reduction alone.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::group::{
    normal_form_of_syllables, reduced_power, GroupParams, Letter, Reducer, Sign, Syllable,
    SyllableWord, Word,
};
use crate::invariants::orbit_order;

pub const DEFAULT_VERTEX_BUDGET: usize = 200_000;

/// Canonical label of the coset `w<a>`: the syllables of the element
/// normal form of `w` with the tail dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetId(pub Vec<(u64, Sign)>);

impl CosetId {
    pub fn of(p: &GroupParams, w: &Word) -> CosetId {
        Self::of_syllables(p, &SyllableWord::from_word(w))
    }

    fn of_syllables(p: &GroupParams, w: &SyllableWord) -> CosetId {
        CosetId(normal_form_of_syllables(p, w).syllables)
    }

    pub fn representative(&self) -> Word {
        let mut w = Word::identity();
        for &(c, e) in &self.0 {
            w = w.concat(&Word::a_pow(c as i64));
            w.push(Letter::t(e));
        }
        w
    }

    fn representative_syllables(&self) -> SyllableWord {
        let mut out = SyllableWord::default();
        for &(c, e) in &self.0 {
            if c != 0 {
                out.push(Syllable::A(BigInt::from(c)));
            }
            out.push(Syllable::T(e));
        }
        out
    }

    /// Distance from the base vertex.
    pub fn depth(&self) -> usize {
        self.0.len()
    }
}

#[derive(Debug, Clone)]
pub struct CosetTable {
    pub params: GroupParams,
    pub radius: usize,
    pub vertices: Vec<CosetId>,
    /// Tree edges `(from, to, label)`: `to = from · a^c t^label`.
    pub edges: Vec<(usize, usize, Sign)>,
    pub boundary: BTreeSet<usize>,
    index: HashMap<CosetId, usize>,
}

impl CosetTable {
    pub fn index_of(&self, id: &CosetId) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Numbers of `t`- and `t^-1`-neighbours of `v` in the tree, counting an
    /// edge `u -t-> v` as a `t^-1`-neighbour of `v`.
    pub fn degree(&self, v: usize) -> (usize, usize) {
        let mut t_pos = 0;
        let mut t_neg = 0;
        for &(from, to, label) in &self.edges {
            let label = if from == v {
                label
            } else if to == v {
                -label
            } else {
                continue;
            };
            match label {
                Sign::Pos => t_pos += 1,
                Sign::Neg => t_neg += 1,
            }
        }
        (t_pos, t_neg)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "params": { "m": self.params.m(), "n": self.params.n() },
            "radius": self.radius,
            "vertices": self.vertices.iter().map(|v| v.representative().to_compact()).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(f, t, e)| json!([f, t, e.as_i64()])).collect::<Vec<_>>(),
        })
    }
}

/// Breadth-first enumeration of the radius-`radius` ball around `<a>`. Each
/// layer is sorted by canonical label before indices are assigned.
pub fn enumerate_ball(p: &GroupParams, radius: usize, budget: usize) -> Result<CosetTable> {
    let over = || Error::BudgetExceeded { radius, budget };
    if budget == 0 {
        return Err(over());
    }
    let mut vertices = vec![CosetId::default()];
    let mut index = HashMap::from([(CosetId::default(), 0usize)]);
    let mut edges = Vec::new();
    let mut layer: Vec<usize> = vec![0];

    for _ in 0..radius {
        let mut next: Vec<(CosetId, usize, Sign)> = Vec::new();
        for &u in &layer {
            let rep = vertices[u].representative_syllables();
            let moves = (0..p.abs_n())
                .map(|c| (c, Sign::Pos))
                .chain((0..p.abs_m()).map(|c| (c, Sign::Neg)));
            for (c, e) in moves {
                let mut w = rep.clone();
                w.push(Syllable::A(BigInt::from(c)));
                w.push(Syllable::T(e));
                let id = CosetId::of_syllables(p, &w);
                if !index.contains_key(&id) {
                    next.push((id, u, e));
                }
            }
        }
        next.sort();
        next.dedup_by(|a, b| a.0 == b.0);
        if vertices.len() + next.len() > budget {
            return Err(over());
        }
        layer.clear();
        for (id, parent, e) in next {
            let v = vertices.len();
            index.insert(id.clone(), v);
            vertices.push(id);
            edges.push((parent, v, e));
            layer.push(v);
        }
    }
    let boundary = layer.into_iter().collect();
    Ok(CosetTable {
        params: *p,
        radius,
        vertices,
        edges,
        boundary,
        index,
    })
}

/// `gen · (coset v)`, or `None` when the image leaves the ball.
pub fn act(p: &GroupParams, table: &CosetTable, gen: Letter, v: usize) -> Option<usize> {
    let mut w = SyllableWord::default();
    match gen {
        Letter::APos => w.push(Syllable::A(BigInt::one())),
        Letter::ANeg => w.push(Syllable::A(-BigInt::one())),
        Letter::TPos | Letter::TNeg => w.push(Syllable::T(gen.sign())),
    }
    w.extend_from(&table.vertices.get(v)?.representative_syllables());
    table.index_of(&CosetId::of_syllables(p, &w))
}

/// Cycle lengths of the `a`-action on the ball, one entry per vertex (the
/// length of the cycle through it).
pub fn a_cycle_lengths(p: &GroupParams, table: &CosetTable) -> Vec<Option<usize>> {
    (0..table.len())
        .map(|v| {
            let mut cur = v;
            for len in 1..=table.len() {
                cur = act(p, table, Letter::APos, cur)?;
                if cur == v {
                    return Some(len);
                }
            }
            None
        })
        .collect()
}

/// Smallest `e` in `1..=limit` with `prefix · a^e · suffix` a power of `a`.
fn scan(p: &GroupParams, prefix: &SyllableWord, suffix: &SyllableWord, limit: &BigUint) -> Option<BigUint> {
    let mut base = Reducer::new(p);
    base.extend(prefix);
    let limit = limit.to_u64().unwrap_or(u64::MAX);
    (1..=limit).find_map(|e| {
        let mut r = base.clone();
        r.push_a(BigInt::from(e));
        r.extend(suffix);
        reduced_power(&r.finish()).map(|_| BigUint::from(e))
    })
}

/// Minimal `d <= d_max` with `w^-1 a^d w ∈ <a>`: the orbit size of `w<a>`
/// under `<a>`, by exhaustive Britton scan.
pub fn orbit_order_bruteforce(p: &GroupParams, w: &Word, d_max: &BigUint) -> Option<BigUint> {
    let s = SyllableWord::from_word(w);
    scan(p, &s.inverse(), &s, d_max)
}

/// Minimal `e <= d_max` with `w^k a^e w^-k ∈ <a>`, i.e. the generator
/// exponent (and index) of `<a> ∩ w^-k <a> w^k`.
pub fn index_bruteforce(p: &GroupParams, w: &Word, k: usize, d_max: &BigUint) -> Option<BigUint> {
    let s = SyllableWord::from_word(&w.pow(k));
    scan(p, &s, &s.inverse(), d_max)
}

/// `g (l/|m|)^B (l/|n|)^B` with `B` the number of `t`-letters of `w`.
pub fn default_scan_bound(p: &GroupParams, w: &Word) -> BigUint {
    let b = w.t_count() as u32;
    BigUint::from(p.g()) * BigUint::from(p.l_over_m()).pow(b) * BigUint::from(p.l_over_n()).pow(b)
}

/// `<a>`-orbit order of every vertex of the ball, in vertex order.
pub fn orbit_census(p: &GroupParams, radius: usize, budget: usize) -> Result<Vec<BigUint>> {
    let table = enumerate_ball(p, radius, budget)?;
    Ok(census_of(p, &table))
}

pub fn census_of(p: &GroupParams, table: &CosetTable) -> Vec<BigUint> {
    table
        .vertices
        .par_iter()
        .map(|v| orbit_order(p, &v.representative()))
        .collect()
}

fn vertex_label(id: &CosetId) -> String {
    let w = id.representative();
    if w.is_empty() {
        "e".to_string()
    } else {
        w.to_compact()
    }
}

pub fn export_dot(table: &CosetTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph bass_serre {{");
    let _ = writeln!(out, "  // {}, radius {}", table.params, table.radius);
    for (i, v) in table.vertices.iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"{}\"];", vertex_label(v));
    }
    for &(from, to, e) in &table.edges {
        let attrs = match e {
            Sign::Pos => "label=\"t\", style=solid",
            Sign::Neg => "label=\"t^-1\", style=dashed",
        };
        let _ = writeln!(out, "  v{from} -> v{to} [{attrs}];");
    }
    out.push_str("}\n");
    out
}
