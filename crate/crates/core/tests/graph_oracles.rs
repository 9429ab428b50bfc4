mod common;

use std::collections::BTreeSet;

use bscale::coset::{default_scan_bound, index_bruteforce};
use bscale::graph::*;
use bscale::group::*;
use common::{all_reduced_words, bs, random_reduced_word, rng};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

fn signed_groups(max: i64) -> Vec<GroupParams> {
    let mut out = Vec::new();
    for m in 2..=max {
        for n in 2..=max {
            for (sm, sn) in [(1, 1), (-1, 1), (1, -1), (-1, -1)] {
                out.push(bs(sm * m, sn * n));
            }
        }
    }
    out
}

/// Minimal `c` with `t^-e a^{xc} t^e` reducing to a power of `a`; returns
/// the absolute value of that power.
fn step_oracle(p: &GroupParams, x: &BigUint, e: Sign) -> BigUint {
    let x = BigInt::from(x.clone());
    for c in 1u64.. {
        let w = SyllableWord::from_syllables(vec![
            Syllable::T(-e),
            Syllable::A(&x * c),
            Syllable::T(e),
        ]);
        let r = britton_reduce_syllables(p, &w);
        match r.syllables() {
            [Syllable::A(k)] => return k.abs().to_biguint().unwrap(),
            [] => unreachable!("a^{{xc}} is never trivial"),
            _ => {}
        }
    }
    unreachable!()
}

#[test]
fn step_matches_britton_oracle() {
    for p in signed_groups(6) {
        let mut seen = BTreeSet::new();
        let mut frontier = vec![BigUint::one()];
        seen.insert(BigUint::one());
        for _ in 0..8 {
            let mut next = Vec::new();
            for x in &frontier {
                for e in [Sign::Pos, Sign::Neg] {
                    let y = step(&p, x, e);
                    assert_eq!(y, step_oracle(&p, x, e), "{p} x={x} e={e:?}");
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
    }
}

#[test]
fn rays_have_expected_shapes() {
    for p in signed_groups(5) {
        if p.divisor_case() {
            continue;
        }
        let one = BigUint::one();
        for k in 1..=6i64 {
            let x = trace(&p, &Word::t_pow(k), &one, &one).unwrap();
            assert_eq!(classify_node(&p, &x).unwrap().shape, NodeShape::LeftRay(k as u64 - 1), "{p}");
            let x = trace(&p, &Word::t_pow(-k), &one, &one).unwrap();
            assert_eq!(classify_node(&p, &x).unwrap().shape, NodeShape::RightRay(k as u64 - 1), "{p}");
            let w = Word::t_pow(k).concat(&Word::a_pow(1)).concat(&Word::t_pow(-k));
            let x = trace(&p, &w, &one, &one).unwrap();
            let node = classify_node(&p, &x).unwrap();
            assert!(node.level >= k as u64 && node.level <= 2 * k as u64);
        }
    }
}

#[test]
fn levels_never_decrease() {
    let mut r = rng(3);
    for p in signed_groups(6) {
        if p.divisor_case() {
            continue;
        }
        for _ in 0..50 {
            let w = random_reduced_word(&mut r, &p, 10);
            let mut x = BigUint::one();
            let mut level = 0;
            for e in w.t_path() {
                x = step(&p, &x, e);
                let node = classify_node(&p, &x).unwrap();
                assert!(node.level == level || node.level == level + 1);
                level = node.level;
            }
        }
    }
}

#[test]
fn node_at_round_trips_through_classify() {
    for p in signed_groups(5) {
        if p.divisor_case() {
            continue;
        }
        for level in 1..=6 {
            for dist in 0..=level {
                let x = node_at(&p, level, dist).unwrap();
                let node = classify_node(&p, &x).unwrap();
                assert_eq!((node.level, node.dist_left), (level, dist), "{p}");
            }
        }
    }
}

#[test]
fn trace_matches_coset_scan_exhaustively() {
    for (m, n) in [(2, 3), (3, 2), (-2, 3), (4, 6), (2, 4), (3, -5)] {
        let p = bs(m, n);
        let one = BigUint::one();
        for w in all_reduced_words(&p, 8) {
            let bound = default_scan_bound(&p, &w);
            let scanned = index_bruteforce(&p, &w, 1, &bound);
            assert_eq!(Some(trace(&p, &w, &one, &one).unwrap()), scanned, "{p} {w}");
        }
    }
}

#[test]
fn step_h_matches_oracle_on_subgroup_graph() {
    let mut r = rng(5);
    for (m, n) in [(2, 4), (3, 9), (-2, 8), (2, 3), (4, 6)] {
        let p = bs(m, n);
        let h = BigUint::from(p.abs_m());
        for _ in 0..100 {
            let w = random_reduced_word(&mut r, &p, 7);
            let mut x = h.clone();
            for e in w.t_path() {
                let y = step_h(&p, &x, e, &h);
                assert_eq!(y, num_integer::Integer::lcm(&step_oracle(&p, &x, e), &h), "{p}");
                assert_eq!(&y % &h, BigUint::from(0u8));
                x = y;
            }
            assert_eq!(x, trace(&p, &w, &h, &h).unwrap());
        }
    }
}

#[test]
fn distances_are_symmetric_in_the_rays() {
    for (m, n) in [(2, 3), (3, 5), (-2, 5), (4, 6)] {
        let p = bs(m, n);
        for i in 0..=5u64 {
            let left = node_at(&p, i + 1, 0).unwrap();
            let right = node_at(&p, i + 1, i + 1).unwrap();
            let one = BigUint::one();
            assert_eq!(shortest_path_len(&p, &one, &left).unwrap(), i + 1);
            assert_eq!(shortest_path_len(&p, &one, &right).unwrap(), i + 1);
        }
        assert!(shortest_path_len(&p, &node_at(&p, 2, 1).unwrap(), &BigUint::one()).is_err());
    }
}

#[test]
fn trace_geometry_agrees_with_direct_walk() {
    let mut r = rng(9);
    for (m, n) in [(2, 3), (3, 5), (4, 6)] {
        let p = bs(m, n);
        for _ in 0..100 {
            let w = random_reduced_word(&mut r, &p, 8);
            let prefix = w.t_inverse_count() as u64 + 1;
            let geo = trace_geometry(&p, &w, prefix).unwrap();
            assert!(geo.matches_prediction(prefix), "{p} {w}");
            let mut path = vec![Sign::Pos; prefix as usize];
            path.extend(w.t_path());
            let end = trace_path(&p, &path, &BigUint::one(), &BigUint::one());
            assert_eq!(geo.end_node.value, end);
        }
    }
}
