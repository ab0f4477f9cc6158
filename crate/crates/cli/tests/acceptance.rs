//! Acceptance suite. Runs every criterion at full size, prints one PASS/FAIL
//! line per criterion and exits nonzero if any fails.
//!
//! Randomized criteria draw from a ChaCha stream seeded per criterion, so a
//! run is reproducible. Where practical the expected values come from a
//! computation that does not share code with the library (binomial
//! expansions, Pascal triangles, count-vector sumsets).

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use multinull::apps::{self, CoverVerdict};
use multinull::certificates::{self, WitnessMethod};
use multinull::divdiff::{self, Pivot};
use multinull::ideal::{self, Membership};
use multinull::{Degree, ExponentVector, FieldElement, FieldSpec, MultiPoly, Multiset, MultisetGrid, TermOrder};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRIMES: [u64; 5] = [2, 3, 5, 7, 13];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x6d75_6c74_0000 + criterion)
}

// ---------------------------------------------------------------------------
// random instances

fn rand_prime_field(rng: &mut ChaCha8Rng) -> FieldSpec {
    FieldSpec::prime(*PRIMES.choose(rng).unwrap()).unwrap()
}

fn rand_element(rng: &mut ChaCha8Rng, spec: FieldSpec) -> FieldElement {
    match spec.modulus() {
        Some(p) => spec.from_u64(rng.gen_range(0..p)),
        None => {
            let num = spec.from_i64(rng.gen_range(-9..=9));
            num.checked_div(&spec.from_i64(rng.gen_range(1..=4))).unwrap()
        }
    }
}

fn rand_nonzero(rng: &mut ChaCha8Rng, spec: FieldSpec) -> FieldElement {
    loop {
        let e = rand_element(rng, spec);
        if !e.is_zero() {
            return e;
        }
    }
}

/// Distinct support values: residues for `F_p`, integers in `-6..=6` for
/// the rationals.
fn rand_support(rng: &mut ChaCha8Rng, spec: FieldSpec, k: usize) -> Vec<FieldElement> {
    let mut pool: Vec<FieldElement> = match spec.modulus() {
        Some(p) => (0..p).map(|v| spec.from_u64(v)).collect(),
        None => (-6..=6).map(|v| spec.from_i64(v)).collect(),
    };
    pool.shuffle(rng);
    pool.truncate(k);
    pool
}

fn rand_multiset_of_size(rng: &mut ChaCha8Rng, spec: FieldSpec, size: u32) -> Multiset {
    let cap = spec.modulus().unwrap_or(13).min(size as u64) as usize;
    let k = rng.gen_range(1..=cap);
    let support = rand_support(rng, spec, k);
    let mut mult = vec![1u32; k];
    for _ in k as u32..size {
        mult[rng.gen_range(0..k)] += 1;
    }
    Multiset::new(spec, support.into_iter().zip(mult)).unwrap()
}

fn rand_grid(rng: &mut ChaCha8Rng, spec: FieldSpec, max_n: usize, max_size: u32) -> MultisetGrid {
    let n = rng.gen_range(1..=max_n);
    let sets = (0..n)
        .map(|_| {
            let d = rng.gen_range(1..=max_size);
            rand_multiset_of_size(rng, spec, d)
        })
        .collect();
    MultisetGrid::new(sets).unwrap()
}

fn rand_exponent(rng: &mut ChaCha8Rng, n: usize, total: u32) -> ExponentVector {
    let mut u = vec![0u32; n];
    for _ in 0..total {
        u[rng.gen_range(0..n)] += 1;
    }
    ExponentVector::new(u)
}

fn rand_poly(rng: &mut ChaCha8Rng, spec: FieldSpec, n: usize, max_deg: u32, max_terms: usize) -> MultiPoly {
    let mut f = MultiPoly::zero(spec, n);
    for _ in 0..rng.gen_range(0..=max_terms) {
        let total = rng.gen_range(0..=max_deg);
        let u = rand_exponent(rng, n, total);
        let c = rand_nonzero(rng, spec);
        f.add_term(u, c);
    }
    f
}

fn rand_member(rng: &mut ChaCha8Rng, grid: &MultisetGrid, cofactor_deg: u32) -> MultiPoly {
    let (spec, n) = (grid.spec(), grid.arity());
    grid.generators().iter().fold(MultiPoly::zero(spec, n), |acc, g| {
        let q = rand_poly(rng, spec, n, cofactor_deg, 3);
        &acc + &(&q * g)
    })
}

// ---------------------------------------------------------------------------
// independent oracles

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `f_u(s) = sum_v c_v prod_i C(v_i, u_i) s_i^(v_i - u_i)`, straight from the
/// binomial expansion of `f(x + s)`.
fn hasse_oracle(f: &MultiPoly, s: &[FieldElement], u: &ExponentVector) -> FieldElement {
    let spec = f.spec();
    let mut acc = spec.zero();
    for (v, c) in f.terms() {
        if !u.le_all(v) {
            continue;
        }
        let mut term = c.clone();
        for i in 0..s.len() {
            let b = spec.from_u64(binomial(v[i] as u64, u[i] as u64));
            term = &(&term * &b) * &s[i].pow((v[i] - u[i]) as u64);
        }
        acc = &acc + &term;
    }
    acc
}

fn pointwise_member_oracle(f: &MultiPoly, grid: &MultisetGrid) -> bool {
    grid.points().iter().all(|p| {
        ExponentVector::box_below(&p.mult)
            .iter()
            .all(|u| hasse_oracle(f, &p.coords, u).is_zero())
    })
}

fn binomial_mod_pascal(p: u64, max_n: usize) -> Vec<Vec<u64>> {
    let mut rows = vec![vec![1u64]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let mut row = vec![1u64; n + 1];
        for k in 1..n {
            row[k] = (prev[k - 1] + prev[k]) % p;
        }
        rows.push(row);
    }
    rows
}

fn beta_oracle(pascal: &[Vec<u64>], r: u64, s: u64) -> u64 {
    (1u64..)
        .find(|&n| {
            let lo = (n as i64 - r as i64 + 1).max(0) as u64;
            (lo..s).all(|k| k > n || pascal[n as usize][k as usize] == 0)
        })
        .unwrap()
}

/// Multisets of `Z/p` as count vectors, sizes `1..=max_size`.
fn count_vectors(p: usize, max_size: u32) -> Vec<Vec<u32>> {
    fn go(p: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == p {
            if cur.iter().sum::<u32>() > 0 {
                out.push(cur.clone());
            }
            return;
        }
        for m in 0..=left {
            cur.push(m);
            go(p, i + 1, left - m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(p, 0, max_size, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// criteria

fn c01_reduction() -> Outcome {
    let mut rng = rng(1);
    let mut failures = 0;
    for _ in 0..1000 {
        let spec = rand_prime_field(&mut rng);
        let g = rand_grid(&mut rng, spec, 3, 4);
        let f = rand_poly(&mut rng, spec, g.arity(), 8, 6);
        let red = ideal::reduce(&f, &g).unwrap();
        let sizes = g.sizes();
        let deg_f = f.degree();
        let mut combo = red.remainder.clone();
        let mut ok = (0..g.arity()).all(|i| red.remainder.degree_in(i) < Degree::Finite(sizes[i] as i64));
        for (i, (h, gen)) in red.cofactors.iter().zip(g.generators()).enumerate() {
            combo = &combo + &(h * &gen);
            ok &= h.is_zero() || h.degree() <= deg_f.minus(sizes[i]);
        }
        ok &= combo == f;
        ok &= red.verify(&f, &g).is_ok();
        if !ok {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("1000 trials, {failures} failures"))
}

fn c02_ideal_equality() -> Outcome {
    let mut rng = rng(2);
    let (mut disagreements, mut members) = (0, 0);
    for trial in 0..1000 {
        let spec = rand_prime_field(&mut rng);
        let g = rand_grid(&mut rng, spec, 3, 4);
        let f = match trial % 3 {
            0 => rand_member(&mut rng, &g, 3),
            1 => &rand_member(&mut rng, &g, 3) + &rand_poly(&mut rng, spec, g.arity(), 2, 1),
            _ => rand_poly(&mut rng, spec, g.arity(), 8, 6),
        };
        let a = ideal::grid_member(&f, &g, Membership::Remainder).unwrap();
        let b = ideal::grid_member(&f, &g, Membership::Pointwise).unwrap();
        let c = pointwise_member_oracle(&f, &g);
        if a != b || b != c {
            disagreements += 1;
        }
        members += a as u32;
    }
    outcome(
        disagreements == 0,
        format!("1000 trials ({members} members), {disagreements} disagreements"),
    )
}

fn c03_dimension() -> Outcome {
    let mut rng = rng(3);
    let mut failures = 0;
    for _ in 0..200 {
        let spec = rand_prime_field(&mut rng);
        let g = rand_grid(&mut rng, spec, 3, 4);
        let expected: u64 = g.sizes().iter().product();
        // sum over points of prod m_i(s_i) counts the same space
        let weighted: u64 = g
            .points()
            .iter()
            .map(|p| p.mult.iter().map(|&m| m as u64).product::<u64>())
            .sum();
        let count = ideal::standard_monomials(&g).len() as u64;
        if count != expected || weighted != expected {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("200 grids, {failures} mismatches"))
}

fn c04_universal_groebner() -> Outcome {
    let mut rng = rng(4);
    let (mut failures, mut checks) = (0, 0);
    let mut done = 0;
    while done < 200 {
        let spec = rand_prime_field(&mut rng);
        let g = rand_grid(&mut rng, spec, 3, 4);
        let f = rand_member(&mut rng, &g, 3);
        if f.is_zero() {
            continue;
        }
        done += 1;
        let all = TermOrder::all_orders(g.arity());
        let orders: Vec<TermOrder> = (0..6).map(|_| all.choose(&mut rng).unwrap().clone()).collect();
        let sizes = g.sizes();
        let mut ok = ideal::universal_gb_check(&f, &g, &orders).unwrap();
        for ord in &orders {
            let lm = f.leading_monomial(ord).unwrap();
            ok &= (0..g.arity()).any(|i| lm[i] as u64 >= sizes[i]);
            checks += 1;
        }
        if !ok {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!("200 ideal members x 6 orders ({checks} checks), {failures} failures"),
    )
}

fn c05_divided_differences() -> Outcome {
    let mut rng = rng(5);
    let mut mismatches = 0;
    for _ in 0..1000 {
        let spec = rand_prime_field(&mut rng);
        let g = rand_grid(&mut rng, spec, 3, 4);
        let f = rand_poly(&mut rng, spec, g.arity(), 8, 6);
        if divdiff::bracket_def(&f, &g).unwrap() != divdiff::bracket_rec(&f, &g).unwrap() {
            mismatches += 1;
        }
    }
    let mut pivot_mismatches = 0;
    for _ in 0..200 {
        let spec = rand_prime_field(&mut rng);
        let g = rand_grid(&mut rng, spec, 3, 4);
        let f = rand_poly(&mut rng, spec, g.arity(), 8, 6);
        let want = divdiff::bracket_rec(&f, &g).unwrap();
        let mut local = rng.clone();
        let mut choose = |_: &MultisetGrid, p: &[Pivot]| local.gen_range(0..p.len());
        if divdiff::bracket_rec_with(&f, &g, &mut choose).unwrap() != want {
            pivot_mismatches += 1;
        }
        rng.gen::<u64>();
    }
    outcome(
        mismatches == 0 && pivot_mismatches == 0,
        format!(
            "1000 def/rec trials, {mismatches} mismatches; 200 random-pivot trials, {pivot_mismatches} mismatches"
        ),
    )
}

fn c06_linear_relation() -> Outcome {
    let mut rng = rng(6);
    let mut relation_failures = 0;
    for _ in 0..1000 {
        let spec = rand_prime_field(&mut rng);
        let g = rand_grid(&mut rng, spec, 3, 4);
        let top = g.top_exponent().total();
        let f = rand_poly(&mut rng, spec, g.arity(), top as u32, 6);
        if !divdiff::check_linear_relation(&f, &g).unwrap() {
            relation_failures += 1;
        }
    }
    let mut top_failures = 0;
    for _ in 0..200 {
        let spec = rand_prime_field(&mut rng);
        let g = rand_grid(&mut rng, spec, 3, 4);
        let table = divdiff::alpha_table(&g).unwrap();
        for p in g.points() {
            let u = ExponentVector::new(p.mult.iter().map(|m| m - 1).collect());
            let alpha = table.get(&p.coords, &u).unwrap();
            let closed = divdiff::alpha_top_closed_form(&g, &p.coords).unwrap();
            if alpha.is_zero() || *alpha != closed {
                top_failures += 1;
            }
        }
    }
    let mut undetected = 0;
    for _ in 0..100 {
        let spec = rand_prime_field(&mut rng);
        let g = rand_grid(&mut rng, spec, 3, 4);
        let table = divdiff::alpha_table(&g).unwrap();
        let entries: Vec<(Vec<FieldElement>, ExponentVector)> =
            table.iter().map(|(s, u, _)| (s.to_vec(), u.clone())).collect();
        let (s, u) = entries.choose(&mut rng).unwrap().clone();
        let delta = rand_nonzero(&mut rng, spec);
        let probe = divdiff::dual_basis_poly(&g, &s, &u).unwrap();
        let bumped = table.perturbed(&s, &u, &delta).unwrap();
        if !table.check_relation(&probe).unwrap() || bumped.check_relation(&probe).unwrap() {
            undetected += 1;
        }
    }
    outcome(
        relation_failures + top_failures + undetected == 0,
        format!(
            "1000 relations, {relation_failures} failures; 200 grids, {top_failures} bad top entries; \
             100 perturbations, {undetected} undetected"
        ),
    )
}

fn c07_witness() -> Outcome {
    let mut rng = rng(7);
    let (mut invalid, mut not_found, mut disagreements, mut identical) = (0, 0, 0, 0);
    for _ in 0..500 {
        let spec = rand_prime_field(&mut rng);
        let g = rand_grid(&mut rng, spec, 3, 4);
        let n = g.arity();
        let t = ExponentVector::new(g.sizes().iter().map(|&d| rng.gen_range(0..d) as u32).collect());
        let mut f = rand_poly(&mut rng, spec, n, t.total() as u32, 5);
        let lead = rand_nonzero(&mut rng, spec);
        let existing = f.coeff_of(&t);
        f.add_term(t.clone(), &lead - &existing);

        let ex = certificates::nonvanish_witness(&f, &g, &t, WitnessMethod::Exhaustive);
        let dd = certificates::nonvanish_witness(&f, &g, &t, WitnessMethod::DividedDifference);
        let (ex, dd) = match (ex, dd) {
            (Ok(a), Ok(b)) => (a, b),
            _ => {
                not_found += 1;
                continue;
            }
        };
        for w in [&ex, &dd] {
            let valid = g
                .multiplicity_vector(&w.point)
                .is_some_and(|m| w.exponent.lt_all(&ExponentVector::new(m)))
                && !w.value.is_zero()
                && hasse_oracle(&f, &w.point, &w.exponent) == w.value;
            if !valid {
                invalid += 1;
            }
        }
        // on the trimmed grid both scans run in the same (s, u) order; the
        // relation can only skip points whose coefficient alpha is zero
        let trimmed = certificates::trim_grid(&g, &t).unwrap();
        let first = certificates::exhaustive_search(&f, &trimmed, false).unwrap().unwrap();
        let alpha = divdiff::alpha_table(&trimmed).unwrap();
        let key = |w: &certificates::Witness| (w.point.clone(), w.exponent.clone());
        let alpha_nonzero = !alpha.get(&first.point, &first.exponent).unwrap().is_zero();
        let agrees = key(&dd) >= key(&first) && (!alpha_nonzero || dd == first);
        if !agrees {
            disagreements += 1;
        }
        identical += (dd == first) as u32;
    }
    outcome(
        invalid + not_found + disagreements == 0,
        format!(
            "500 instances, {not_found} not found, {invalid} invalid, {disagreements} disagreements \
             ({identical} identical to the first exhaustive hit on the trimmed grid)"
        ),
    )
}

fn c08_punctured() -> Outcome {
    let mut rng = rng(8);
    let (mut failures, mut equality) = (0, 0);
    for trial in 0..200 {
        let spec = rand_prime_field(&mut rng);
        let g = rand_grid(&mut rng, spec, 3, 4);
        let n = g.arity();
        let mut sub_sets = Vec::new();
        let mut divisor = MultiPoly::one(spec, n);
        for (i, set) in g.sets().iter().enumerate() {
            let entries: Vec<(FieldElement, u32)> = set.iter().map(|(e, m)| (e.clone(), m)).collect();
            let keep = rng.gen_range(1..=entries.len());
            let mut idx: Vec<usize> = (0..entries.len()).collect();
            idx.shuffle(&mut rng);
            let (kept, dropped) = idx.split_at(keep);
            sub_sets.push(Multiset::new(spec, kept.iter().map(|&j| entries[j].clone())).unwrap());
            for &j in dropped {
                let (e, m) = &entries[j];
                let lin = &MultiPoly::var(spec, n, i) - &MultiPoly::constant(spec, n, e.clone());
                divisor = &divisor * &lin.pow(*m);
            }
        }
        let sub = MultisetGrid::new(sub_sets).unwrap();
        let tight = trial % 4 == 0;
        let h = if tight {
            MultiPoly::constant(spec, n, rand_nonzero(&mut rng, spec))
        } else {
            // deg_i h < d(D_i) keeps h * divisor reduced
            let mut h = MultiPoly::zero(spec, n);
            while h.is_zero() {
                for _ in 0..3 {
                    let u = ExponentVector::new(sub.sizes().iter().map(|&d| rng.gen_range(0..d) as u32).collect());
                    h.add_term(u, rand_nonzero(&mut rng, spec));
                }
            }
            h
        };
        let r = &h * &divisor;
        let f = if tight { r.clone() } else { &r + &rand_member(&mut rng, &g, 2) };
        let bound: u64 = g.sizes().iter().zip(sub.sizes()).map(|(a, b)| a - b).sum();
        let ok = match certificates::punctured_decompose(&f, &g, &sub) {
            Ok(res) => {
                let exact = res.remainder == r
                    && res.quotient == h
                    && &res.quotient * &res.divisor == res.remainder
                    && res.divisor == divisor
                    && res.degree_bound == bound
                    && f.degree().finite().unwrap() as u64 >= bound;
                if tight && exact && f.degree().finite() == Some(bound as i64) {
                    equality += 1;
                }
                exact
            }
            Err(_) => false,
        };
        if !ok {
            failures += 1;
        }
    }
    outcome(
        failures == 0 && equality == 50,
        format!("200 instances, {failures} failures, {equality} equality instances with constant h"),
    )
}

fn cover_grids_f3() -> Vec<MultisetGrid> {
    let spec = FieldSpec::prime(3).unwrap();
    // S_i = {0:1} plus a multiset of {1, 2} of size a_i, sum a_i <= 3
    let mut out = Vec::new();
    let extras = |size: u32| -> Vec<Multiset> {
        (0..=size)
            .map(|ones| {
                let mut e = vec![(spec.zero(), 1)];
                if ones > 0 {
                    e.push((spec.from_u64(1), ones));
                }
                if size - ones > 0 {
                    e.push((spec.from_u64(2), size - ones));
                }
                Multiset::new(spec, e).unwrap()
            })
            .collect()
    };
    for a in 0..=3 {
        for s in extras(a) {
            out.push(MultisetGrid::new(vec![s]).unwrap());
        }
    }
    for a in 0..=3 {
        for b in 0..=3 - a {
            for s1 in extras(a) {
                for s2 in extras(b) {
                    out.push(MultisetGrid::new(vec![s1.clone(), s2]).unwrap());
                }
            }
        }
    }
    out
}

fn c09_covering() -> Outcome {
    let mut rng = rng(9);
    let mut failures = 0;
    for _ in 0..100 {
        let spec = rand_prime_field(&mut rng);
        let n = rng.gen_range(1..=3);
        let sets = (0..n)
            .map(|_| {
                let d = rng.gen_range(1..=4u32);
                let mut entries = vec![(spec.zero(), 1)];
                let others: Vec<FieldElement> = rand_support(&mut rng, spec, 13)
                    .into_iter()
                    .filter(|e| !e.is_zero())
                    .collect();
                for _ in 1..d {
                    let e = others.choose(&mut rng).unwrap().clone();
                    match entries.iter_mut().find(|(x, _)| *x == e) {
                        Some((_, m)) => *m += 1,
                        None => entries.push((e, 1)),
                    }
                }
                Multiset::new(spec, entries).unwrap()
            })
            .collect();
        let g = MultisetGrid::new(sets).unwrap();
        let hs = apps::cover_extremal(&g).unwrap();
        let bound = g.sizes().iter().sum::<u64>() - n as u64;
        let rep = apps::cover_verify(&hs, &g).unwrap();
        // recount through the polynomial form of each hyperplane
        let origin = vec![spec.zero(); n];
        let polys: Vec<MultiPoly> = hs.iter().map(|h| h.to_poly()).collect();
        let recount_ok = g.points().iter().all(|p| {
            let hits = polys.iter().filter(|q| q.eval(&p.coords).unwrap().is_zero()).count() as u64;
            if p.coords == origin {
                hits == 0
            } else {
                hits + n as u64 > p.weight()
            }
        });
        if rep.verdict != CoverVerdict::ValidCover || hs.len() as u64 != bound || rep.k != bound || !recount_ok {
            failures += 1;
        }
    }
    let grids = cover_grids_f3();
    let mut search_failures = 0;
    for g in &grids {
        let bound = (g.sizes().iter().sum::<u64>() - g.arity() as u64) as usize;
        let smaller = if bound == 0 {
            None
        } else {
            apps::min_cover_search(g, bound - 1).unwrap()
        };
        let at_bound = apps::min_cover_search(g, bound).unwrap();
        if smaller.is_some() || at_bound.map(|c| c.len()) != Some(bound) {
            search_failures += 1;
        }
    }
    outcome(
        failures + search_failures == 0,
        format!(
            "100 extremal covers, {failures} failures; {} F_3 grids searched exhaustively, {search_failures} with a smaller cover",
            grids.len()
        ),
    )
}

fn c10_cauchy_davenport() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for p in [2u64, 3, 5, 7] {
        let (cd, deg) = apps::cd_suite(p, 4, true).unwrap();
        // count-vector oracle over the same family
        let sets = count_vectors(p as usize, 4);
        let (mut cases, mut tight, mut fail, mut deg_fail) = (0u64, 0u64, 0u64, 0u64);
        for a in &sets {
            for b in &sets {
                let mut m3 = vec![0u32; p as usize];
                for (x, &ma) in a.iter().enumerate().filter(|(_, m)| **m > 0) {
                    for (y, &mb) in b.iter().enumerate().filter(|(_, m)| **m > 0) {
                        let c = (x + y) % p as usize;
                        m3[c] = m3[c].max(ma + mb - 1);
                    }
                }
                let size = |v: &[u32]| v.iter().map(|&m| m as u64).sum::<u64>();
                let deg = |v: &[u32]| v.iter().filter(|&&m| m > 0).map(|&m| (m - 1) as u64).sum::<u64>();
                let lhs = size(&m3);
                let rhs = p.min(size(a) + size(b) - 1);
                cases += 1;
                fail += (lhs < rhs) as u64;
                tight += (lhs == rhs) as u64;
                deg_fail += (deg(&m3) < deg(a) + deg(b)) as u64;
            }
        }
        let ok = cd.failures == 0
            && deg.failures == 0
            && fail == 0
            && deg_fail == 0
            && cd.cases == cases
            && cd.tight == tight;
        pass &= ok;
        parts.push(format!("p={p}: {cases} pairs, {} tight", cd.tight));
        if p == 7 {
            parts.push(format!("e.g. {}", cd.tight_examples.last().cloned().unwrap_or_default()));
        }
    }
    outcome(pass, parts.join("; "))
}

fn c11_hopf_stiefel() -> Outcome {
    let mut pass = true;
    let mut oracle_checks = 0;
    for p in [2u64, 3, 5, 7] {
        let pascal = binomial_mod_pascal(p, 40);
        for r in 1..=12 {
            for s in 1..=12 {
                pass &= apps::hopf_stiefel(p, r, s).unwrap() == beta_oracle(&pascal, r, s);
                oracle_checks += 1;
            }
        }
    }
    pass &= apps::hopf_stiefel(2, 2, 2).unwrap() == 2;
    pass &= apps::hopf_stiefel(2, 2, 3).unwrap() == 4;
    for p in [2, 3, 5] {
        for s in 1..=8 {
            pass &= apps::hopf_stiefel(p, 1, s).unwrap() == s;
        }
    }
    let ek22 = apps::ek_suite(2, 2, 3, true).unwrap();
    let ek31 = apps::ek_suite(3, 1, 3, true).unwrap();
    pass &= ek22.failures == 0 && ek31.failures == 0 && ek22.cases == 34 * 34 && ek31.cases == 19 * 19;
    outcome(
        pass,
        format!(
            "{oracle_checks} values against Pascal oracle; EK over F_2^2: {} pairs, {} tight; over F_3^1: {} pairs, {} tight",
            ek22.cases, ek22.tight, ek31.cases, ek31.tight
        ),
    )
}

fn c12_sun() -> Outcome {
    let mut rng = rng(12);
    let (mut cases, mut failures, mut tight) = (0u64, 0u64, 0u64);
    for p in [3u64, 5, 7] {
        let spec = FieldSpec::prime(p).unwrap();
        let sets = apps::field_multisets(spec, 4).unwrap();
        let mut grids: Vec<MultisetGrid> = sets.iter().map(|s| MultisetGrid::new(vec![s.clone()]).unwrap()).collect();
        for a in &sets {
            for b in &sets {
                grids.push(MultisetGrid::new(vec![a.clone(), b.clone()]).unwrap());
            }
        }
        for g in &grids {
            let n = g.arity();
            for k in 1..=3u32 {
                let a: Vec<FieldElement> = (0..n).map(|_| rand_nonzero(&mut rng, spec)).collect();
                let low = rand_poly(&mut rng, spec, n, k - 1, 3);
                let rep = apps::sun_check(&a, k, &low, g).unwrap();
                let rhs = p.min(g.sizes().iter().map(|d| (d - 1) / k as u64).sum::<u64>() + 1);
                cases += 1;
                if !rep.bound.holds || rep.bound.rhs != rhs {
                    failures += 1;
                }
                tight += rep.bound.is_tight() as u64;
            }
        }
    }
    outcome(failures == 0, format!("{cases} instances, {failures} failures, {tight} tight"))
}

fn c13_subring() -> Outcome {
    let mut rng = rng(13);
    let q = FieldSpec::rational();
    let mut failures = 0;
    for _ in 0..200 {
        let g = rand_grid(&mut rng, q, 3, 4);
        let n = g.arity();
        let mut f = MultiPoly::zero(q, n);
        for _ in 0..rng.gen_range(1..=6) {
            let total = rng.gen_range(0..=8);
            let u = rand_exponent(&mut rng, n, total);
            f.add_term(u, q.from_i64(rng.gen_range(-20..=20)));
        }
        let red = ideal::reduce(&f, &g).unwrap();
        let integral = red.remainder.is_integral() && red.cofactors.iter().all(MultiPoly::is_integral);
        if !integral || !ideal::subring_closure_check(&f, &g).unwrap() {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("200 integer instances over Q, {failures} non-integral results"))
}

// ---------------------------------------------------------------------------
// CLI goldens

const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("witness_json", &["witness", "--poly", "x1*x2", "--grid", "tests/fixtures/square_f3.json", "--t", "1,1", "--json"]),
    ("witness_divdiff", &["witness", "--poly", "x1*x2", "--grid", "tests/fixtures/square_f3.json", "--t", "1,1", "--method", "divdiff"]),
    ("witness_double_zero", &["witness", "--poly", "x1", "--grid", "tests/fixtures/double_zero_q.json", "--t", "1"]),
    ("hopf_stiefel", &["hopf-stiefel", "--p", "2", "--r", "2", "--s", "2"]),
    ("reduce", &["reduce", "--poly", "x1^3", "--grid", "tests/fixtures/pair_q.json"]),
    ("reduce_json", &["reduce", "--poly", "x1^3", "--grid", "tests/fixtures/pair_q.json", "--json"]),
    ("member", &["member", "--poly", "x1^2 - x1", "--grid", "tests/fixtures/pair_q.json", "--method", "both"]),
    ("divdiff", &["divdiff", "--poly", "x1^4*x2^2 + 3*x1*x2", "--grid", "tests/fixtures/mixed_f7.json"]),
    ("alpha", &["alpha", "--grid", "tests/fixtures/mixed_f7.json"]),
    ("check_relation", &["check-relation", "--poly", "x1^3*x2^2 + 2*x1 + 5", "--grid", "tests/fixtures/mixed_f7.json"]),
    ("punctured", &["punctured", "--poly", "(x1-3)*(x1-5)*x2*(x1+x2+1)", "--grid", "tests/fixtures/mixed_f7.json", "--sub", "tests/fixtures/mixed_f7_sub.json"]),
    ("cover_check", &["cover-check", "--grid", "tests/fixtures/cover_f5.json", "--hyperplanes", "tests/fixtures/cover_f5_hyperplanes.json"]),
    ("cover_extremal", &["cover-extremal", "--grid", "tests/fixtures/cover_f5.json", "--json"]),
    ("sumset", &["sumset", "--input", "tests/fixtures/pair_f7.json"]),
    ("cd_check", &["cd-check", "--a", "0:2", "--b", "0:3", "--field", "prime:7"]),
    ("cd_exhaustive", &["cd-check", "--exhaustive", "--p", "5", "--max-size", "3"]),
    ("valueset", &["valueset", "--poly", "x1 + x2", "--grid", "tests/fixtures/square_f3.json"]),
    ("sun_check", &["sun-check", "--grid", "tests/fixtures/full_f5.json", "--a", "1", "--k", "2"]),
    ("ek_check", &["ek-check", "--input", "tests/fixtures/vectors_f2.json", "--json"]),
    ("ek_exhaustive", &["ek-check", "--exhaustive", "--p", "2", "--dim", "2", "--max-size", "3"]),
    ("error_parse", &["reduce", "--poly", "2x1", "--grid", "tests/fixtures/pair_q.json"]),
    ("error_precondition", &["witness", "--poly", "x1*x2", "--grid", "tests/fixtures/square_f3.json", "--t", "2,0"]),
];

fn invoke(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_multinull"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

fn c14_cli_goldens() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut problems = Vec::new();
    for (name, args) in GOLDEN_CASES {
        let first = invoke(args);
        let second = invoke(args);
        let mut par_args = args.to_vec();
        par_args.push("--parallel");
        let parallel = invoke(&par_args);
        if first != second {
            problems.push(format!("{name}: differs between runs"));
        }
        if first != parallel {
            problems.push(format!("{name}: differs under --parallel"));
        }
        let path = dir.join(format!("{name}.txt"));
        if update {
            std::fs::write(&path, &first).unwrap();
        }
        match std::fs::read_to_string(&path) {
            Ok(golden) if golden == first => {}
            Ok(_) => problems.push(format!("{name}: differs from golden file")),
            Err(_) => problems.push(format!("{name}: golden file missing")),
        }
    }
    let detail = if problems.is_empty() {
        format!("{} invocations byte-identical across 2 runs, --parallel and golden files", GOLDEN_CASES.len())
    } else {
        problems.join("; ")
    };
    outcome(problems.is_empty(), detail)
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 14] = [
        ("reduction soundness", c01_reduction),
        ("ideal equality", c02_ideal_equality),
        ("dimension formula", c03_dimension),
        ("universal Groebner property", c04_universal_groebner),
        ("divided-difference equivalence", c05_divided_differences),
        ("linear relation", c06_linear_relation),
        ("nonvanishing witness", c07_witness),
        ("punctured decomposition", c08_punctured),
        ("hyperplane covering", c09_covering),
        ("Cauchy-Davenport exhaustive", c10_cauchy_davenport),
        ("Hopf-Stiefel / Eliahou-Kervaire", c11_hopf_stiefel),
        ("value-set exhaustive", c12_sun),
        ("subring closure", c13_subring),
        ("CLI golden files", c14_cli_goldens),
    ];
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let mut failed = 0;
    println!("\nacceptance criteria");
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = format!("{:02}", i + 1);
        if let Some(f) = &filter {
            if !id.contains(f.as_str()) && !name.contains(f.as_str()) {
                continue;
            }
        }
        let start = Instant::now();
        let res = run();
        let mark = if res.pass { "PASS" } else { "FAIL" };
        println!(
            "[{mark}] {id} {name:<32} {} ({:.1}s)",
            res.detail,
            start.elapsed().as_secs_f64()
        );
        failed += !res.pass as u32;
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
