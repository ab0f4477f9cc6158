//! Generalized divided differences over multiset grids.
//!
//! `f[S]` is the coefficient of `x^{d(S)-1}` in the remainder of `f` modulo
//! the grid generators. It can be computed two ways: directly from the
//! reduction ([`bracket_def`]), or by the two-point recursion
//! `f[S] = (f[S'] - f[S'']) / (b - a)` bottoming out in Hasse coefficients
//! at single-element grids ([`bracket_rec`]). Expanding the recursion
//! symbolically yields the coefficients of the linear relation
//! `f_t = sum alpha^(s)_u f_u(s)` ([`alpha_table`]).

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::ideal::{reduce, MultisetGrid};
use crate::poly::{Degree, ExponentVector, MultiPoly};

/// One application of the two-point recursion: coordinate `coord`, with
/// distinct elements `a` and `b` of that coordinate's multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pivot {
    pub coord: usize,
    pub a: FieldElement,
    pub b: FieldElement,
}

/// `f[S]` read off the reduced remainder.
pub fn bracket_def(f: &MultiPoly, grid: &MultisetGrid) -> Result<FieldElement> {
    let r = reduce(f, grid)?;
    Ok(r.remainder.coeff_of(&grid.top_exponent()))
}

/// Every valid pivot of `grid`, coordinates ascending, pairs `a < b`.
pub fn eligible_pivots(grid: &MultisetGrid) -> Vec<Pivot> {
    let mut out = Vec::new();
    for (coord, set) in grid.sets().iter().enumerate() {
        let elems: Vec<&FieldElement> = set.elements().collect();
        for (x, a) in elems.iter().enumerate() {
            for b in &elems[x + 1..] {
                out.push(Pivot {
                    coord,
                    a: (*a).clone(),
                    b: (*b).clone(),
                });
            }
        }
    }
    out
}

/// First coordinate with two distinct elements, and its two smallest
/// elements. `None` once every multiset is a single repeated element.
pub fn canonical_pivot(grid: &MultisetGrid) -> Option<Pivot> {
    grid.sets().iter().enumerate().find_map(|(coord, set)| {
        let mut it = set.elements();
        let a = it.next()?.clone();
        let b = it.next()?.clone();
        Some(Pivot { coord, a, b })
    })
}

/// The pair `(S', S'')` obtained by removing one copy of `a`, respectively
/// `b`, from coordinate `coord`.
fn split(grid: &MultisetGrid, p: &Pivot) -> (MultisetGrid, MultisetGrid) {
    let set = grid.set(p.coord);
    let without_a = set.remove_one(&p.a).expect("pivot element present, set has >= 2 elements");
    let without_b = set.remove_one(&p.b).expect("pivot element present, set has >= 2 elements");
    (grid.with_set(p.coord, without_a), grid.with_set(p.coord, without_b))
}

/// For a grid of single repeated elements `{a_i : t_i + 1}`, the point `a`
/// and exponent `t`.
fn singleton_base(grid: &MultisetGrid) -> (Vec<FieldElement>, ExponentVector) {
    let point = grid
        .sets()
        .iter()
        .map(|s| s.elements().next().expect("nonempty").clone())
        .collect();
    (point, grid.top_exponent())
}

fn check(f: &MultiPoly, grid: &MultisetGrid) -> Result<()> {
    if f.arity() != grid.arity() {
        return Err(Error::ArityMismatch {
            expected: grid.arity(),
            found: f.arity(),
        });
    }
    if f.spec() != grid.spec() {
        return Err(Error::FieldMismatch(grid.spec().to_string(), f.spec().to_string()));
    }
    Ok(())
}

/// `f[S]` by the recursion with canonical pivots, memoized on sub-grids.
pub fn bracket_rec(f: &MultiPoly, grid: &MultisetGrid) -> Result<FieldElement> {
    check(f, grid)?;
    let mut memo = HashMap::new();
    bracket_rec_memo(f, grid, &mut memo)
}

fn bracket_rec_memo(
    f: &MultiPoly,
    grid: &MultisetGrid,
    memo: &mut HashMap<MultisetGrid, FieldElement>,
) -> Result<FieldElement> {
    if let Some(v) = memo.get(grid) {
        return Ok(v.clone());
    }
    let value = match canonical_pivot(grid) {
        None => {
            let (a, t) = singleton_base(grid);
            f.hasse_coeff(&a, &t)?
        }
        Some(p) => {
            let (s1, s2) = split(grid, &p);
            let v1 = bracket_rec_memo(f, &s1, memo)?;
            let v2 = bracket_rec_memo(f, &s2, memo)?;
            (&v1 - &v2).checked_div(&(&p.b - &p.a))?
        }
    };
    memo.insert(grid.clone(), value.clone());
    Ok(value)
}

/// `f[S]` by the recursion with caller-chosen pivots and no memoization.
/// `choose` receives the current sub-grid and its eligible pivots and
/// returns an index into them.
pub fn bracket_rec_with<C>(f: &MultiPoly, grid: &MultisetGrid, choose: &mut C) -> Result<FieldElement>
where
    C: FnMut(&MultisetGrid, &[Pivot]) -> usize,
{
    check(f, grid)?;
    let pivots = eligible_pivots(grid);
    if pivots.is_empty() {
        let (a, t) = singleton_base(grid);
        return f.hasse_coeff(&a, &t);
    }
    let k = choose(grid, &pivots);
    let p = pivots
        .get(k)
        .ok_or_else(|| Error::InvalidInput(format!("pivot index {k} out of range")))?;
    let (s1, s2) = split(grid, p);
    let v1 = bracket_rec_with(f, &s1, choose)?;
    let v2 = bracket_rec_with(f, &s2, choose)?;
    (&v1 - &v2).checked_div(&(&p.b - &p.a))
}

type AlphaKey = (Vec<FieldElement>, ExponentVector);
type Combination = BTreeMap<AlphaKey, FieldElement>;

/// Coefficients `alpha^(s)_u` of the relation `f_t = sum alpha^(s)_u f_u(s)`
/// for a grid, indexed by `(s, u)` with `u < m(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    grid: MultisetGrid,
    coeffs: Combination,
}

impl AlphaTable {
    pub fn grid(&self) -> &MultisetGrid {
        &self.grid
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, s: &[FieldElement], u: &ExponentVector) -> Option<&FieldElement> {
        self.coeffs.get(&(s.to_vec(), u.clone()))
    }

    /// Entries in lexicographic `(s, u)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&[FieldElement], &ExponentVector, &FieldElement)> {
        self.coeffs.iter().map(|((s, u), a)| (s.as_slice(), u, a))
    }

    /// Copy with `delta` added to the entry at `(s, u)`.
    pub fn perturbed(&self, s: &[FieldElement], u: &ExponentVector, delta: &FieldElement) -> Result<AlphaTable> {
        let mut out = self.clone();
        let entry = out
            .coeffs
            .get_mut(&(s.to_vec(), u.clone()))
            .ok_or_else(|| Error::InvalidInput(format!("({s:?}, {u}) is not in the table domain")))?;
        *entry = &*entry + delta;
        Ok(out)
    }

    /// The individual terms `alpha^(s)_u * f_u(s)`, lexicographic in `(s, u)`.
    pub fn terms(&self, f: &MultiPoly) -> Result<Vec<(Vec<FieldElement>, ExponentVector, FieldElement)>> {
        check(f, &self.grid)?;
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut current: Option<(Vec<FieldElement>, MultiPoly)> = None;
        for ((s, u), a) in &self.coeffs {
            if current.as_ref().map(|(p, _)| p != s).unwrap_or(true) {
                current = Some((s.clone(), f.shift(s)?));
            }
            let shifted = &current.as_ref().expect("set above").1;
            out.push((s.clone(), u.clone(), a * &shifted.coeff_of(u)));
        }
        Ok(out)
    }

    /// `sum alpha^(s)_u f_u(s)`.
    pub fn apply(&self, f: &MultiPoly) -> Result<FieldElement> {
        Ok(self
            .terms(f)?
            .into_iter()
            .fold(self.grid.spec().zero(), |acc, (_, _, v)| &acc + &v))
    }

    /// Whether `coeff_of(f, t) == apply(f)`; requires `deg f <= sum t_i`.
    pub fn check_relation(&self, f: &MultiPoly) -> Result<bool> {
        let t = self.grid.top_exponent();
        if f.degree() > Degree::Finite(t.total() as i64) {
            return Err(Error::precondition(format!(
                "deg f = {} exceeds t_1 + ... + t_n = {}",
                f.degree(),
                t.total()
            )));
        }
        Ok(f.coeff_of(&t) == self.apply(f)?)
    }
}

/// Expands the bracket recursion symbolically, treating `f` as unknown, and
/// collects the coefficient of every base term `f_u(s)`.
pub fn alpha_table(grid: &MultisetGrid) -> Result<AlphaTable> {
    let mut memo: HashMap<MultisetGrid, Rc<Combination>> = HashMap::new();
    let combo = expand(grid, &mut memo)?;
    let mut coeffs: Combination = BTreeMap::new();
    for p in grid.points() {
        for u in ExponentVector::box_below(&p.mult) {
            let key = (p.coords.clone(), u);
            let v = combo.get(&key).cloned().unwrap_or_else(|| grid.spec().zero());
            coeffs.insert(key, v);
        }
    }
    if combo.keys().any(|k| !coeffs.contains_key(k)) {
        return Err(Error::invariant("recursion produced a term outside the table domain"));
    }
    Ok(AlphaTable {
        grid: grid.clone(),
        coeffs,
    })
}

fn expand(grid: &MultisetGrid, memo: &mut HashMap<MultisetGrid, Rc<Combination>>) -> Result<Rc<Combination>> {
    if let Some(c) = memo.get(grid) {
        return Ok(Rc::clone(c));
    }
    let combo = match canonical_pivot(grid) {
        None => {
            let (a, t) = singleton_base(grid);
            let mut c = BTreeMap::new();
            c.insert((a, t), grid.spec().one());
            c
        }
        Some(p) => {
            let (s1, s2) = split(grid, &p);
            let c1 = expand(&s1, memo)?;
            let c2 = expand(&s2, memo)?;
            let scale = (&p.b - &p.a).inv()?;
            let mut c: Combination = BTreeMap::new();
            for (k, v) in c1.iter() {
                c.insert(k.clone(), v * &scale);
            }
            for (k, v) in c2.iter() {
                let delta = -(v * &scale);
                let sum = match c.remove(k) {
                    Some(old) => &old + &delta,
                    None => delta,
                };
                if !sum.is_zero() {
                    c.insert(k.clone(), sum);
                }
            }
            c.retain(|_, v| !v.is_zero());
            c
        }
    };
    let rc = Rc::new(combo);
    memo.insert(grid.clone(), Rc::clone(&rc));
    Ok(rc)
}

/// `prod_i prod_{s' in S_i, s' != s_i} (s_i - s')^{-m_i(s')}`, the top
/// coefficient `alpha^(s)_{m(s)-1}` in closed form.
pub fn alpha_top_closed_form(grid: &MultisetGrid, s: &[FieldElement]) -> Result<FieldElement> {
    if grid.multiplicity_vector(s).is_none() {
        return Err(Error::precondition("point is not in the grid"));
    }
    let mut denom = grid.spec().one();
    for (set, si) in grid.sets().iter().zip(s) {
        for (other, m) in set.iter() {
            if other != si {
                denom = &denom * &(si - other).pow(m as u64);
            }
        }
    }
    denom.inv()
}

/// Checks `f_t = sum alpha^(s)_u f_u(s)` for `f` with `deg f <= sum t_i`.
pub fn check_linear_relation(f: &MultiPoly, grid: &MultisetGrid) -> Result<bool> {
    check(f, grid)?;
    alpha_table(grid)?.check_relation(f)
}

/// `prod_i (x_i - s_i)^{u_i} prod_{r in S_i, r != s_i} (x_i - r)^{m_i(r)}`.
/// Its only nonzero base term `f_{u'}(s')` with `u' <= u` is at `(s, u)`,
/// which isolates the table entry `alpha^(s)_u`.
pub fn dual_basis_poly(grid: &MultisetGrid, s: &[FieldElement], u: &ExponentVector) -> Result<MultiPoly> {
    let m = grid
        .multiplicity_vector(s)
        .ok_or_else(|| Error::precondition("point is not in the grid"))?;
    if !u.lt_all(&ExponentVector::new(m)) {
        return Err(Error::precondition("exponent must satisfy u < m(s)"));
    }
    let n = grid.arity();
    let spec = grid.spec();
    let mut f = MultiPoly::one(spec, n);
    for (i, set) in grid.sets().iter().enumerate() {
        let si = &s[i];
        let lin = &MultiPoly::var(spec, n, i) - &MultiPoly::constant(spec, n, si.clone());
        f = &f * &lin.pow(u[i]);
        f = &f * &set.product_poly(i, n, |e| e != si);
    }
    Ok(f)
}
