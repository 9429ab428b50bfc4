//! Randomized cross-checks between the closed forms and the brute-force
//! oracles, for one group.

use bscale::coset::{
    a_cycle_lengths, census_of, default_scan_bound, enumerate_ball, index_bruteforce, orbit_order_bruteforce,
};
use bscale::graph::trace;
use bscale::group::{
    bs1n_matrix, britton_reduce, element_normal_form, equal_elements, is_britton_reduced, GroupParams, Letter, Word,
};
use bscale::invariants::{modular, moller_sequence, scale};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct CheckResult {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

const LETTERS: [Letter; 4] = [Letter::APos, Letter::ANeg, Letter::TPos, Letter::TNeg];
const SAMPLES: usize = 200;

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| LETTERS[rng.gen_range(0..4)]).collect())
}

fn random_reduced_word(rng: &mut ChaCha8Rng, p: &GroupParams, max_len: usize) -> Word {
    loop {
        let w = random_word(rng, max_len);
        if is_britton_reduced(p, &w) {
            return w;
        }
    }
}

/// First counterexample among `count` samples, if any.
fn sample<T>(
    rng: &mut ChaCha8Rng,
    count: usize,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> T,
    mut holds: impl FnMut(&T) -> Option<String>,
) -> Result<String, String> {
    for _ in 0..count {
        let x = draw(rng);
        if let Some(why) = holds(&x) {
            return Err(why);
        }
    }
    Ok(format!("{count} samples"))
}

pub fn run(p: &GroupParams, seed: u64, budget: usize) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = BigUint::from(1u8);
    let mut results = Vec::new();
    let mut record = |name, outcome: Result<String, String>| {
        let (ok, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        results.push(CheckResult { name, ok, detail });
    };

    record(
        "reduction",
        sample(&mut rng, SAMPLES, |r| random_word(r, 14), |w| {
            let red = britton_reduce(p, w);
            let ok = is_britton_reduced(p, &red) && equal_elements(p, &red, w) && red.t_exponent() == w.t_exponent();
            (!ok).then(|| format!("{w} -> {red}"))
        }),
    );
    record(
        "normal-form",
        sample(&mut rng, SAMPLES, |r| random_word(r, 12), |w| {
            let nf = element_normal_form(p, w);
            let ok = equal_elements(p, &nf.expand(), w) && element_normal_form(p, &nf.expand()) == nf;
            (!ok).then(|| format!("{w} -> {nf}"))
        }),
    );
    record(
        "trace-vs-scan",
        sample(&mut rng, SAMPLES, |r| random_reduced_word(r, p, 6), |w| {
            let traced = trace(p, w, &one, &one).ok();
            let scanned = index_bruteforce(p, w, 1, &default_scan_bound(p, w));
            (traced != scanned).then(|| format!("{w}: trace {traced:?}, scan {scanned:?}"))
        }),
    );
    record(
        "moller",
        sample(&mut rng, SAMPLES / 2, |r| random_word(r, 8), |w| match moller_sequence(p, w, 6) {
            Ok(report) if report.ratios_match() => None,
            Ok(report) => Some(format!("{w}: indices {:?}", report.indices)),
            Err(e) => Some(format!("{w}: {e}")),
        }),
    );
    record(
        "modular",
        sample(&mut rng, SAMPLES, |r| random_word(r, 12), |w| {
            let d = modular(p, w);
            let ok = &d.numerator * scale(p, &w.inverse()).value == &d.denominator * scale(p, w).value;
            (!ok).then(|| format!("{w}: {d}"))
        }),
    );
    record("orbit-census", orbit_census(p, budget));
    if p.abs_m() == 1 {
        record(
            "matrix",
            sample(&mut rng, SAMPLES, |r| (random_word(r, 10), random_word(r, 10)), |(u, v)| {
                let hom = bs1n_matrix(p, u).ok()?.mul(&bs1n_matrix(p, v).ok()?) == bs1n_matrix(p, &u.concat(v)).ok()?;
                let faithful = (bs1n_matrix(p, u).ok() == bs1n_matrix(p, v).ok()) == equal_elements(p, u, v);
                (!(hom && faithful)).then(|| format!("{u} / {v}"))
            }),
        );
    }
    results
}

fn orbit_census(p: &GroupParams, budget: usize) -> Result<String, String> {
    let table = enumerate_ball(p, 3, budget).or_else(|_| enumerate_ball(p, 1, budget)).map_err(|e| e.to_string())?;
    let census = census_of(p, &table);
    let cycles = a_cycle_lengths(p, &table);
    for ((v, d), c) in table.vertices.iter().zip(&census).zip(&cycles) {
        let rep = v.representative();
        let brute = orbit_order_bruteforce(p, &rep, &default_scan_bound(p, &rep));
        if brute.as_ref() != Some(d) || c.map(BigUint::from).as_ref() != Some(d) {
            return Err(format!("{rep}: census {d}, scan {brute:?}, cycle {c:?}"));
        }
    }
    Ok(format!("{} vertices at radius {}", table.len(), table.radius))
}
