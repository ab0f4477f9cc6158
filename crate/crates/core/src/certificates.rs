//! Nonvanishing certificates for polynomials over multiset grids, and the
//! punctured decomposition for polynomials vanishing everywhere outside a
//! tight sub-grid.

use crate::divdiff::alpha_table;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::ideal::{nonvanishing_points, par_map, reduce, GridPoint, MultisetGrid};
use crate::poly::{Degree, ExponentVector, MultiPoly};

/// A point `s` and exponent `u < m(s)` with `f_u(s) != 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    pub point: Vec<FieldElement>,
    pub exponent: ExponentVector,
    pub value: FieldElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMethod {
    /// Scan every `(s, u)` in lexicographic order.
    Exhaustive,
    /// Trim the grid to `d_i = t_i + 1` and pick the first nonzero term of
    /// the divided-difference relation.
    DividedDifference,
}

fn check_preconditions(f: &MultiPoly, grid: &MultisetGrid, t: &ExponentVector) -> Result<()> {
    if f.arity() != grid.arity() {
        return Err(Error::ArityMismatch {
            expected: grid.arity(),
            found: f.arity(),
        });
    }
    if t.len() != grid.arity() {
        return Err(Error::ArityMismatch {
            expected: grid.arity(),
            found: t.len(),
        });
    }
    if f.spec() != grid.spec() {
        return Err(Error::FieldMismatch(grid.spec().to_string(), f.spec().to_string()));
    }
    if f.degree() != Degree::Finite(t.total() as i64) {
        return Err(Error::precondition(format!(
            "degree condition: deg f = {} but t_1 + ... + t_n = {}",
            f.degree(),
            t.total()
        )));
    }
    if f.coeff_of(t).is_zero() {
        return Err(Error::precondition(format!(
            "top coefficient condition: coefficient of x^{t} in f is zero"
        )));
    }
    for (i, d) in grid.sizes().into_iter().enumerate() {
        if d <= t[i] as u64 {
            return Err(Error::precondition(format!(
                "size condition: d_{} = {d} is not greater than t_{} = {}",
                i + 1,
                i + 1,
                t[i]
            )));
        }
    }
    Ok(())
}

/// Shrinks each multiset to size `t_i + 1` by repeatedly lowering the
/// multiplicity of its largest element.
pub fn trim_grid(grid: &MultisetGrid, t: &ExponentVector) -> Result<MultisetGrid> {
    let mut out = grid.clone();
    for i in 0..grid.arity() {
        let target = t[i] as u64 + 1;
        if grid.set(i).size() < target {
            return Err(Error::precondition(format!("d_{} < t_{} + 1", i + 1, i + 1)));
        }
        let mut set = grid.set(i).clone();
        while set.size() > target {
            let largest = set.elements().next_back().expect("nonempty").clone();
            set = set.remove_one(&largest).expect("size above target >= 1");
        }
        out = out.with_set(i, set);
    }
    Ok(out)
}

fn first_nonzero_at(f: &MultiPoly, p: &GridPoint) -> Result<Option<Witness>> {
    let shifted = f.shift(&p.coords)?;
    Ok(ExponentVector::box_below(&p.mult).into_iter().find_map(|u| {
        let c = shifted.coeff_of(&u);
        (!c.is_zero()).then(|| Witness {
            point: p.coords.clone(),
            exponent: u,
            value: c,
        })
    }))
}

/// Lexicographically first `(s, u)` over the whole grid with `f_u(s) != 0`,
/// or `None` when `f` lies in the grid ideal. With `parallel`, points are
/// scanned concurrently and the smallest hit is kept.
pub fn exhaustive_search(f: &MultiPoly, grid: &MultisetGrid, parallel: bool) -> Result<Option<Witness>> {
    let points = grid.points();
    if parallel {
        let hits = par_map(&points, |p| first_nonzero_at(f, p))?;
        return Ok(hits.into_iter().flatten().next());
    }
    for p in &points {
        if let Some(w) = first_nonzero_at(f, p)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Finds a nonvanishing witness for `f` on `grid`, given `deg f = sum t_i`,
/// a nonzero coefficient of `x^t`, and `d_i > t_i`. Failing to find one
/// under these preconditions is reported as an invariant violation.
pub fn nonvanish_witness(
    f: &MultiPoly,
    grid: &MultisetGrid,
    t: &ExponentVector,
    method: WitnessMethod,
) -> Result<Witness> {
    nonvanish_witness_with(f, grid, t, method, false)
}

pub fn nonvanish_witness_with(
    f: &MultiPoly,
    grid: &MultisetGrid,
    t: &ExponentVector,
    method: WitnessMethod,
    parallel: bool,
) -> Result<Witness> {
    check_preconditions(f, grid, t)?;
    let found = match method {
        WitnessMethod::Exhaustive => exhaustive_search(f, grid, parallel)?,
        WitnessMethod::DividedDifference => divided_difference_search(f, grid, t)?,
    };
    found.ok_or_else(|| Error::invariant("no nonvanishing witness found under valid preconditions"))
}

fn divided_difference_search(f: &MultiPoly, grid: &MultisetGrid, t: &ExponentVector) -> Result<Option<Witness>> {
    let trimmed = trim_grid(grid, t)?;
    let table = alpha_table(&trimmed)?;
    let terms = table.terms(f)?;
    let total = terms
        .iter()
        .fold(grid.spec().zero(), |acc, (_, _, v)| &acc + v);
    if total != f.coeff_of(t) {
        return Err(Error::invariant("divided-difference relation does not hold"));
    }
    for (s, u, term) in terms {
        if !term.is_zero() {
            let value = f.hasse_coeff(&s, &u)?;
            return Ok(Some(Witness {
                point: s,
                exponent: u,
                value,
            }));
        }
    }
    Ok(None)
}

/// Replays the reduction-based argument: `f` has a nonzero remainder, every
/// top-degree monomial of each `h_i g_i` is divisible by `x_i^{d_i}`, and
/// consequently `x^t` has coefficient zero in `sum h_i g_i`.
pub fn check_first_proof_path(f: &MultiPoly, grid: &MultisetGrid, t: &ExponentVector) -> Result<bool> {
    check_preconditions(f, grid, t)?;
    let red = reduce(f, grid)?;
    if red.remainder.is_zero() {
        return Ok(false);
    }
    let deg_f = f.degree().finite().expect("nonzero by precondition") as u64;
    let sizes = grid.sizes();
    let mut combined = MultiPoly::zero(grid.spec(), grid.arity());
    for (i, (h, g)) in red.cofactors.iter().zip(grid.generators()).enumerate() {
        let hg = h * &g;
        let top_ok = hg
            .terms()
            .filter(|(u, _)| u.total() == deg_f)
            .all(|(u, _)| u[i] as u64 >= sizes[i]);
        if !top_ok || hg.degree() > Degree::Finite(deg_f as i64) {
            return Ok(false);
        }
        combined = &combined + &hg;
    }
    Ok(combined.coeff_of(t).is_zero() && red.remainder.coeff_of(t) == f.coeff_of(t))
}

/// `r = h * prod_i g_i / l_i` with `h != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuncturedResult {
    pub remainder: MultiPoly,
    pub quotient: MultiPoly,
    /// `prod_i g_i / l_i`.
    pub divisor: MultiPoly,
    /// `sum_i (d(S_i) - d(D_i))`.
    pub degree_bound: u64,
    /// Points of `D` at which `f` does not vanish to the required order.
    pub punctured_points: Vec<GridPoint>,
}

/// Decomposes the remainder of `f` modulo `I(S)` when `f` vanishes on every
/// point of `S` outside the tight sub-grid `D` and fails to vanish at some
/// point of `D`.
pub fn punctured_decompose(f: &MultiPoly, grid: &MultisetGrid, sub: &MultisetGrid) -> Result<PuncturedResult> {
    punctured_decompose_with(f, grid, sub, false)
}

pub fn punctured_decompose_with(
    f: &MultiPoly,
    grid: &MultisetGrid,
    sub: &MultisetGrid,
    parallel: bool,
) -> Result<PuncturedResult> {
    if sub.arity() != grid.arity() {
        return Err(Error::ArityMismatch {
            expected: grid.arity(),
            found: sub.arity(),
        });
    }
    if sub.spec() != grid.spec() {
        return Err(Error::FieldMismatch(grid.spec().to_string(), sub.spec().to_string()));
    }
    for i in 0..grid.arity() {
        if !sub.set(i).is_tight_subset_of(grid.set(i)) {
            return Err(Error::precondition(format!(
                "D_{} is not a tight multisubset of S_{}",
                i + 1,
                i + 1
            )));
        }
    }
    let bad = nonvanishing_points(f, grid, parallel)?;
    if bad.is_empty() {
        return Err(Error::precondition("no punctured point: f lies in I(S)"));
    }
    if let Some(outside) = bad.iter().find(|p| sub.multiplicity_vector(&p.coords).is_none()) {
        let coords: Vec<String> = outside.coords.iter().map(ToString::to_string).collect();
        return Err(Error::precondition(format!(
            "f does not vanish at ({}) outside D",
            coords.join(",")
        )));
    }

    let n = grid.arity();
    let remainder = reduce(f, grid)?.remainder;
    let mut quotient = remainder.clone();
    let mut divisor = MultiPoly::one(grid.spec(), n);
    let mut degree_bound = 0;
    for i in 0..n {
        let sub_i = sub.set(i);
        let factor = grid.set(i).product_poly(i, n, |e| !sub_i.contains(e));
        let (q, r) = quotient.div_rem_univariate(i, &factor)?;
        if !r.is_zero() {
            return Err(Error::invariant(format!(
                "remainder is not divisible by g_{}/l_{}",
                i + 1,
                i + 1
            )));
        }
        quotient = q;
        divisor = &divisor * &factor;
        degree_bound += grid.set(i).size() - sub_i.size();
    }
    if quotient.is_zero() {
        return Err(Error::invariant("quotient h vanished"));
    }
    if f.degree() < Degree::Finite(degree_bound as i64) {
        return Err(Error::invariant("deg f below the punctured degree bound"));
    }
    Ok(PuncturedResult {
        remainder,
        quotient,
        divisor,
        degree_bound,
        punctured_points: bad,
    })
}
