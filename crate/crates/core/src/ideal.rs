//! Multisets of field elements, multiset grids, and the vanishing ideal of a
//! grid: generators, reduction, membership, the standard-monomial basis, and
//! the universal Groebner basis property.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::order::{permutations, OrderKind, TermOrder};
use crate::poly::{Degree, ExponentVector, MultiPoly};

/// A finite nonempty multiset of field elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset {
    spec: FieldSpec,
    entries: BTreeMap<FieldElement, u32>,
}

impl Multiset {
    /// Rejects empty input, zero multiplicities, repeated elements and
    /// elements from another field.
    pub fn new(spec: FieldSpec, entries: impl IntoIterator<Item = (FieldElement, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (e, m) in entries {
            if e.spec() != spec {
                return Err(Error::FieldMismatch(spec.to_string(), e.spec().to_string()));
            }
            if m == 0 {
                return Err(Error::InvalidMultiset(format!("element {e} has multiplicity 0")));
            }
            if map.insert(e.clone(), m).is_some() {
                return Err(Error::InvalidMultiset(format!("duplicate element {e}")));
            }
        }
        if map.is_empty() {
            return Err(Error::InvalidMultiset("multiset is empty".to_string()));
        }
        Ok(Multiset { spec, entries: map })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(spec: FieldSpec, entries: &[(i64, u32)]) -> Result<Self> {
        Self::new(spec, entries.iter().map(|&(v, m)| (spec.from_i64(v), m)))
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    /// `d(S) = sum of multiplicities`.
    pub fn size(&self) -> u64 {
        self.entries.values().map(|&m| m as u64).sum()
    }

    /// Number of distinct elements.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn multiplicity(&self, e: &FieldElement) -> u32 {
        self.entries.get(e).copied().unwrap_or(0)
    }

    pub fn contains(&self, e: &FieldElement) -> bool {
        self.entries.contains_key(e)
    }

    /// Elements with multiplicities in canonical order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&FieldElement, u32)> + '_ {
        self.entries.iter().map(|(e, &m)| (e, m))
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = &FieldElement> + '_ {
        self.entries.keys()
    }

    /// The multiset with one copy of `e` removed, or `None` if that would
    /// leave it empty or `e` is absent.
    pub fn remove_one(&self, e: &FieldElement) -> Option<Multiset> {
        let m = *self.entries.get(e)?;
        if self.size() == 1 {
            return None;
        }
        let mut entries = self.entries.clone();
        if m == 1 {
            entries.remove(e);
        } else {
            entries.insert(e.clone(), m - 1);
        }
        Some(Multiset {
            spec: self.spec,
            entries,
        })
    }

    /// `g(x_var) = prod_s (x_var - s)^{m(s)}` in an `arity`-variate ring.
    pub fn generator(&self, var: usize, arity: usize) -> MultiPoly {
        self.product_poly(var, arity, |_| true)
    }

    /// `prod (x_var - s)^{m(s)}` over the elements accepted by `keep`.
    pub(crate) fn product_poly(&self, var: usize, arity: usize, keep: impl Fn(&FieldElement) -> bool) -> MultiPoly {
        // dense univariate product, then lifted
        let mut coeffs = vec![self.spec.one()];
        for (s, m) in self.iter() {
            if !keep(s) {
                continue;
            }
            for _ in 0..m {
                let mut next = vec![self.spec.zero(); coeffs.len() + 1];
                for (k, c) in coeffs.iter().enumerate() {
                    next[k + 1] = &next[k + 1] + c;
                    next[k] = &next[k] - &(c * s);
                }
                coeffs = next;
            }
        }
        MultiPoly::univariate(self.spec, arity, var, &coeffs)
    }

    /// Tight multisubset: every element of `self` occurs in `other` with the
    /// same multiplicity.
    pub fn is_tight_subset_of(&self, other: &Multiset) -> bool {
        self.spec == other.spec && self.iter().all(|(e, m)| other.multiplicity(e) == m)
    }

    /// `sum (m(y) - 1)`.
    pub fn excess_degree(&self) -> u64 {
        self.entries.values().map(|&m| (m - 1) as u64).sum()
    }

    pub(crate) fn entries(&self) -> &BTreeMap<FieldElement, u32> {
        &self.entries
    }

    pub(crate) fn from_map_unchecked(spec: FieldSpec, entries: BTreeMap<FieldElement, u32>) -> Self {
        debug_assert!(!entries.is_empty() && entries.values().all(|&m| m > 0));
        Multiset { spec, entries }
    }
}

/// `{0:2, 3:1}`, elements ascending.
impl std::fmt::Display for Multiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("{")?;
        for (k, (e, m)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}:{m}")?;
        }
        f.write_str("}")
    }
}

/// A point of a grid together with its multiplicity vector `m(s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub coords: Vec<FieldElement>,
    pub mult: Vec<u32>,
}

impl GridPoint {
    /// `|m(s)| = sum_i m_i(s_i)`.
    pub fn weight(&self) -> u64 {
        self.mult.iter().map(|&m| m as u64).sum()
    }
}

/// The product `S_1 x ... x S_n` of multisets over one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultisetGrid {
    spec: FieldSpec,
    sets: Vec<Multiset>,
}

impl MultisetGrid {
    pub fn new(sets: Vec<Multiset>) -> Result<Self> {
        let spec = sets
            .first()
            .ok_or_else(|| Error::InvalidInput("grid needs at least one multiset".to_string()))?
            .spec;
        if let Some(bad) = sets.iter().find(|s| s.spec != spec) {
            return Err(Error::FieldMismatch(spec.to_string(), bad.spec.to_string()));
        }
        Ok(MultisetGrid { spec, sets })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn arity(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Multiset] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &Multiset {
        &self.sets[i]
    }

    /// `(d_1, ..., d_n)`.
    pub fn sizes(&self) -> Vec<u64> {
        self.sets.iter().map(Multiset::size).collect()
    }

    /// `t = d(S) - 1` componentwise.
    pub fn top_exponent(&self) -> ExponentVector {
        ExponentVector::new(self.sets.iter().map(|s| (s.size() - 1) as u32).collect())
    }

    pub fn generators(&self) -> Vec<MultiPoly> {
        (0..self.arity())
            .map(|i| self.sets[i].generator(i, self.arity()))
            .collect()
    }

    pub fn num_points(&self) -> usize {
        self.sets.iter().map(Multiset::support_len).product()
    }

    /// All points in lexicographic order of their coordinates.
    pub fn points(&self) -> Vec<GridPoint> {
        let mut out = vec![GridPoint {
            coords: Vec::with_capacity(self.arity()),
            mult: Vec::with_capacity(self.arity()),
        }];
        for set in &self.sets {
            out = out
                .into_iter()
                .flat_map(|p| {
                    set.iter().map(move |(e, m)| {
                        let mut q = p.clone();
                        q.coords.push(e.clone());
                        q.mult.push(m);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// `m(s)` for a point of the grid, `None` if some coordinate is absent.
    pub fn multiplicity_vector(&self, s: &[FieldElement]) -> Option<Vec<u32>> {
        if s.len() != self.arity() {
            return None;
        }
        self.sets
            .iter()
            .zip(s)
            .map(|(set, e)| match set.multiplicity(e) {
                0 => None,
                m => Some(m),
            })
            .collect()
    }

    pub fn with_set(&self, i: usize, set: Multiset) -> MultisetGrid {
        let mut sets = self.sets.clone();
        sets[i] = set;
        MultisetGrid {
            spec: self.spec,
            sets,
        }
    }

    fn check_poly(&self, f: &MultiPoly) -> Result<()> {
        if f.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: f.arity(),
            });
        }
        if f.spec() != self.spec {
            return Err(Error::FieldMismatch(self.spec.to_string(), f.spec().to_string()));
        }
        Ok(())
    }
}

/// `f = remainder + sum_i cofactors[i] * g_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub remainder: MultiPoly,
    pub cofactors: Vec<MultiPoly>,
}

impl ReductionResult {
    /// Checks the identity and both degree bounds against `f` and `grid`.
    pub fn verify(&self, f: &MultiPoly, grid: &MultisetGrid) -> Result<()> {
        let gens = grid.generators();
        let mut rebuilt = self.remainder.clone();
        for (h, g) in self.cofactors.iter().zip(&gens) {
            rebuilt = &rebuilt + &(h * g);
        }
        if &rebuilt != f {
            return Err(Error::invariant("f != r + sum h_i g_i"));
        }
        for (i, d) in grid.sizes().into_iter().enumerate() {
            if self.remainder.degree_in(i) >= Degree::Finite(d as i64) {
                return Err(Error::invariant(format!("deg_{} r >= d_{}", i + 1, i + 1)));
            }
            if self.cofactors[i].degree() > f.degree().minus(d) {
                return Err(Error::invariant(format!("deg h_{} > deg f - d_{}", i + 1, i + 1)));
            }
        }
        Ok(())
    }
}

/// Exponent vector ordered by graded-lex with `x1 > x2 > ...`.
#[derive(Clone, PartialEq, Eq)]
struct GrlexKey(ExponentVector);

impl Ord for GrlexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .total()
            .cmp(&other.0.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for GrlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Reduces `f` modulo the grid generators by repeatedly replacing
/// `x_i^{d_i}` with `x_i^{d_i} - g_i(x_i)`.
///
/// The graded-lex largest reducible monomial is eliminated first, using the
/// smallest index `i` with `u_i >= d_i`. The remainder does not depend on
/// this choice; the cofactors do, and are deterministic under it.
pub fn reduce(f: &MultiPoly, grid: &MultisetGrid) -> Result<ReductionResult> {
    grid.check_poly(f)?;
    let n = grid.arity();
    let spec = grid.spec();
    let sizes: Vec<u32> = grid.sizes().into_iter().map(|d| d as u32).collect();
    // lower-order part of each monic generator: (exponent of x_i, coeff)
    let tails: Vec<Vec<(u32, FieldElement)>> = grid
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            g.terms()
                .filter(|(u, _)| u[i] < sizes[i])
                .map(|(u, c)| (u[i], c.clone()))
                .collect()
        })
        .collect();

    let mut pending: BTreeMap<GrlexKey, FieldElement> = f
        .terms()
        .map(|(u, c)| (GrlexKey(u.clone()), c.clone()))
        .collect();
    let mut remainder = MultiPoly::zero(spec, n);
    let mut cofactors = vec![MultiPoly::zero(spec, n); n];

    while let Some((GrlexKey(u), c)) = pending.pop_last() {
        let Some(i) = (0..n).find(|&i| u[i] >= sizes[i]) else {
            remainder.add_term(u, c);
            continue;
        };
        let mut v = u.into_vec();
        v[i] -= sizes[i];
        for (k, gc) in &tails[i] {
            let mut w = v.clone();
            w[i] += k;
            let key = GrlexKey(ExponentVector::new(w));
            let delta = -(&c * gc);
            let sum = match pending.remove(&key) {
                Some(old) => &old + &delta,
                None => delta,
            };
            if !sum.is_zero() {
                pending.insert(key, sum);
            }
        }
        cofactors[i].add_term(ExponentVector::new(v), c);
    }
    Ok(ReductionResult {
        remainder,
        cofactors,
    })
}

/// Membership in the local ideal `I(s, w)`: every Hasse coefficient
/// `f_u(s)` with `u < w` vanishes.
pub fn local_member(f: &MultiPoly, s: &[FieldElement], w: &[u32]) -> Result<bool> {
    Ok(f.hasse_coeffs(s, w)?.values().all(FieldElement::is_zero))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Remainder modulo the generators is zero.
    Remainder,
    /// Local membership at every grid point.
    Pointwise,
}

/// Membership of `f` in the grid vanishing ideal `I(S)`.
pub fn grid_member(f: &MultiPoly, grid: &MultisetGrid, method: Membership) -> Result<bool> {
    grid.check_poly(f)?;
    match method {
        Membership::Remainder => Ok(reduce(f, grid)?.remainder.is_zero()),
        Membership::Pointwise => {
            for p in grid.points() {
                if !local_member(f, &p.coords, &p.mult)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Grid points at which `f` is not in the local ideal `I(s, m(s))`, in
/// lexicographic order.
pub fn nonvanishing_points(f: &MultiPoly, grid: &MultisetGrid, parallel: bool) -> Result<Vec<GridPoint>> {
    grid.check_poly(f)?;
    let points = grid.points();
    let check = |p: &GridPoint| -> Result<Option<GridPoint>> {
        Ok((!local_member(f, &p.coords, &p.mult)?).then(|| p.clone()))
    };
    let flags: Vec<Option<GridPoint>> = if parallel {
        par_map(&points, check)?
    } else {
        points.iter().map(check).collect::<Result<_>>()?
    };
    Ok(flags.into_iter().flatten().collect())
}

#[cfg(feature = "parallel")]
pub(crate) fn par_map<T: Sync, U: Send>(
    items: &[T],
    f: impl Fn(&T) -> Result<U> + Sync + Send,
) -> Result<Vec<U>> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> Result<U>) -> Result<Vec<U>> {
    items.iter().map(f).collect()
}

/// `{u : u_i < d_i}`, a basis of the quotient ring modulo `I(S)`.
pub fn standard_monomials(grid: &MultisetGrid) -> Vec<ExponentVector> {
    let bound: Vec<u32> = grid.sizes().into_iter().map(|d| d as u32).collect();
    ExponentVector::box_below(&bound)
}

/// Term orders used to probe universality: all three kinds with every
/// variable ranking when `arity <= 4`, otherwise each kind with 8 rankings
/// drawn deterministically from `seed`.
pub fn order_family(arity: usize, seed: u64) -> Vec<TermOrder> {
    if arity <= 4 {
        return TermOrder::all_orders(arity);
    }
    let mut state = seed;
    let mut out = Vec::new();
    for kind in OrderKind::ALL {
        out.push(TermOrder::with_identity(kind, arity));
        for _ in 0..7 {
            let mut r: Vec<usize> = (0..arity).collect();
            for i in (1..arity).rev() {
                let j = (splitmix64(&mut state) % (i as u64 + 1)) as usize;
                r.swap(i, j);
            }
            out.push(TermOrder::new(kind, r).expect("shuffle is a permutation"));
        }
    }
    out
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// For nonzero `f` in `I(S)`: whether, under every given order, the leading
/// monomial of `f` is divisible by some `x_i^{d_i}`.
pub fn universal_gb_check(f: &MultiPoly, grid: &MultisetGrid, orders: &[TermOrder]) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !grid_member(f, grid, Membership::Remainder)? {
        return Err(Error::precondition("polynomial is not in the grid ideal"));
    }
    let sizes = grid.sizes();
    for ord in orders {
        let lm = f.leading_monomial(ord)?;
        if !(0..grid.arity()).any(|i| lm[i] as u64 >= sizes[i]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Buchberger's criterion on the generators: every pairwise S-polynomial
/// `S(g_i, g_j)` reduces to zero.
pub fn s_polynomials_reduce_to_zero(grid: &MultisetGrid, ord: &TermOrder) -> Result<bool> {
    let gens = grid.generators();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let s = gens[i].s_polynomial(&gens[j], ord)?;
            if !reduce(&s, grid)?.remainder.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Over the rationals, with integral `f` and integral grid elements: whether
/// the remainder and every cofactor stay integral.
pub fn subring_closure_check(f: &MultiPoly, grid: &MultisetGrid) -> Result<bool> {
    if grid.spec() != FieldSpec::rational() {
        return Err(Error::precondition("subring closure check runs over the rationals"));
    }
    if !f.is_integral() {
        return Err(Error::precondition("polynomial has a non-integral coefficient"));
    }
    if grid
        .sets()
        .iter()
        .any(|s| s.elements().any(|e| !e.is_integral()))
    {
        return Err(Error::precondition("grid has a non-integral element"));
    }
    let red = reduce(f, grid)?;
    Ok(red.remainder.is_integral() && red.cofactors.iter().all(MultiPoly::is_integral))
}

/// All permutations of `0..n` (re-exported for callers that sample orders).
pub fn variable_rankings(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
}
