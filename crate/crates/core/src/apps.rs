//! Checkers for the combinatorial consequences of the multiset
//! Nullstellensatz: hyperplane covers of multiset grids, multiset sumsets in
//! `F_p` and `F_p^d`, value sets of diagonal polynomials, and Hopf-Stiefel
//! numbers. Every checker computes both sides of its bound exactly by
//! enumeration and reports them as data.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{is_prime_u64, FieldElement, FieldSpec};
use crate::ideal::{Multiset, MultisetGrid};
use crate::poly::{Degree, ExponentVector, MultiPoly};

// ---------------------------------------------------------------------------
// hyperplane covers

/// The affine hyperplane `c0 + c1 x1 + ... + cn xn = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    constant: FieldElement,
    coeffs: Vec<FieldElement>,
}

impl Hyperplane {
    pub fn new(constant: FieldElement, coeffs: Vec<FieldElement>) -> Result<Self> {
        let spec = constant.spec();
        if coeffs.iter().any(|c| c.spec() != spec) {
            return Err(Error::FieldMismatch(spec.to_string(), "coefficient field".to_string()));
        }
        if coeffs.iter().all(FieldElement::is_zero) {
            return Err(Error::InvalidInput(
                "hyperplane needs a nonzero linear coefficient".to_string(),
            ));
        }
        Ok(Hyperplane { constant, coeffs })
    }

    /// `x_var - value`.
    pub fn axis(arity: usize, var: usize, value: &FieldElement) -> Self {
        let spec = value.spec();
        let mut coeffs = vec![spec.zero(); arity];
        coeffs[var] = spec.one();
        Hyperplane {
            constant: -value,
            coeffs,
        }
    }

    pub fn constant(&self) -> &FieldElement {
        &self.constant
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, s: &[FieldElement]) -> FieldElement {
        self.coeffs
            .iter()
            .zip(s)
            .fold(self.constant.clone(), |acc, (c, x)| &acc + &(c * x))
    }

    pub fn to_poly(&self) -> MultiPoly {
        let n = self.arity();
        let spec = self.constant.spec();
        let mut p = MultiPoly::constant(spec, n, self.constant.clone());
        for (i, c) in self.coeffs.iter().enumerate() {
            p.add_term(ExponentVector::unit(n, i, 1), c.clone());
        }
        p
    }

    /// Scalar multiples define the same hyperplane.
    pub fn is_proportional(&self, other: &Hyperplane) -> bool {
        if self.arity() != other.arity() {
            return false;
        }
        let mine = std::iter::once(&self.constant).chain(&self.coeffs);
        let theirs = std::iter::once(&other.constant).chain(&other.coeffs);
        let pairs: Vec<_> = mine.zip(theirs).collect();
        let Some((a, b)) = pairs.iter().find(|(a, _)| !a.is_zero()) else {
            return false;
        };
        if b.is_zero() {
            return false;
        }
        let ratio = b.checked_div(a).expect("nonzero");
        pairs.iter().all(|(x, y)| &(*x * &ratio) == *y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCoverage {
    pub point: Vec<FieldElement>,
    /// `|m(s)| - n + 1`.
    pub required: u64,
    /// Number of listed hyperplanes through the point.
    pub achieved: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverVerdict {
    ValidCover,
    OriginViolated,
    Undercovered(Vec<Vec<FieldElement>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    /// Every nonzero grid point, in lexicographic order.
    pub points: Vec<PointCoverage>,
    pub origin_covered: bool,
    /// `d(S_1) + ... + d(S_n) - n`.
    pub bound: u64,
    pub k: u64,
    pub meets_bound: bool,
    pub verdict: CoverVerdict,
    /// Index pairs of listed hyperplanes that are scalar multiples.
    pub proportional_duplicates: Vec<(usize, usize)>,
}

fn check_cover_hypothesis(grid: &MultisetGrid) -> Result<()> {
    let zero = grid.spec().zero();
    for (i, set) in grid.sets().iter().enumerate() {
        match set.multiplicity(&zero) {
            1 => {}
            0 => return Err(Error::precondition(format!("0 is not in S_{}", i + 1))),
            m => {
                return Err(Error::precondition(format!(
                    "m_{}(0) = {m}, expected 1",
                    i + 1
                )))
            }
        }
    }
    Ok(())
}

/// Counts, at each nonzero grid point, how many hyperplanes pass through it
/// and compares with `|m(s)| - n + 1`; also checks that none passes through
/// the origin.
pub fn cover_verify(hyperplanes: &[Hyperplane], grid: &MultisetGrid) -> Result<CoverReport> {
    check_cover_hypothesis(grid)?;
    let n = grid.arity();
    let spec = grid.spec();
    for h in hyperplanes {
        if h.arity() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: h.arity(),
            });
        }
        if h.constant.spec() != spec {
            return Err(Error::FieldMismatch(spec.to_string(), h.constant.spec().to_string()));
        }
    }
    let origin = vec![spec.zero(); n];
    let origin_covered = hyperplanes.iter().any(|h| h.eval(&origin).is_zero());
    let mut points = Vec::new();
    let mut under = Vec::new();
    for p in grid.points() {
        if p.coords == origin {
            continue;
        }
        let required = p.weight() - n as u64 + 1;
        let achieved = hyperplanes.iter().filter(|h| h.eval(&p.coords).is_zero()).count() as u64;
        if achieved < required {
            under.push(p.coords.clone());
        }
        points.push(PointCoverage {
            point: p.coords,
            required,
            achieved,
        });
    }
    let bound = grid.sizes().iter().sum::<u64>() - n as u64;
    let k = hyperplanes.len() as u64;
    let verdict = if origin_covered {
        CoverVerdict::OriginViolated
    } else if !under.is_empty() {
        CoverVerdict::Undercovered(under)
    } else {
        CoverVerdict::ValidCover
    };
    let proportional_duplicates = (0..hyperplanes.len())
        .tuple_combinations()
        .filter(|&(a, b)| hyperplanes[a].is_proportional(&hyperplanes[b]))
        .collect();
    Ok(CoverReport {
        points,
        origin_covered,
        bound,
        k,
        meets_bound: k >= bound,
        verdict,
        proportional_duplicates,
    })
}

/// The sharp cover: `x_i = s` repeated `m_i(s)` times for every nonzero
/// `s` in `S_i`, `d(S_1) + ... + d(S_n) - n` hyperplanes in total.
pub fn cover_extremal(grid: &MultisetGrid) -> Result<Vec<Hyperplane>> {
    check_cover_hypothesis(grid)?;
    let n = grid.arity();
    let mut out = Vec::new();
    for (i, set) in grid.sets().iter().enumerate() {
        for (s, m) in set.iter() {
            if s.is_zero() {
                continue;
            }
            for _ in 0..m {
                out.push(Hyperplane::axis(n, i, s));
            }
        }
    }
    Ok(out)
}

/// Hyperplanes of `F_p^n` avoiding the origin, one representative each
/// (first nonzero linear coefficient scaled to 1).
pub fn hyperplanes_avoiding_origin(spec: FieldSpec, arity: usize) -> Result<Vec<Hyperplane>> {
    let elements = spec
        .elements()
        .ok_or_else(|| Error::precondition("hyperplane enumeration needs a prime field"))?;
    let mut out = Vec::new();
    for coeffs in (0..arity).map(|_| elements.iter().cloned()).multi_cartesian_product() {
        let Some(lead) = coeffs.iter().find(|c| !c.is_zero()) else {
            continue;
        };
        if !lead.is_one() {
            continue;
        }
        for c0 in elements.iter().filter(|c| !c.is_zero()) {
            out.push(Hyperplane {
                constant: c0.clone(),
                coeffs: coeffs.clone(),
            });
        }
    }
    Ok(out)
}

/// Smallest valid cover with at most `max_k` hyperplanes, found by
/// exhaustive search over multisets of hyperplanes avoiding the origin.
pub fn min_cover_search(grid: &MultisetGrid, max_k: usize) -> Result<Option<Vec<Hyperplane>>> {
    check_cover_hypothesis(grid)?;
    let candidates = hyperplanes_avoiding_origin(grid.spec(), grid.arity())?;
    for k in 0..=max_k {
        for choice in (0..candidates.len()).combinations_with_replacement(k) {
            let hs: Vec<Hyperplane> = choice.iter().map(|&i| candidates[i].clone()).collect();
            if cover_verify(&hs, grid)?.verdict == CoverVerdict::ValidCover {
                return Ok(Some(hs));
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// sumsets

/// `m_3(c) = max { m_1(a) + m_2(b) - 1 : a + b = c }` over any additive
/// group given by `add`.
pub fn sumset_map<K: Ord + Clone>(
    a: &BTreeMap<K, u32>,
    b: &BTreeMap<K, u32>,
    add: impl Fn(&K, &K) -> K,
) -> BTreeMap<K, u32> {
    let mut out: BTreeMap<K, u32> = BTreeMap::new();
    for (x, mx) in a {
        for (y, my) in b {
            let m = mx + my - 1;
            let e = out.entry(add(x, y)).or_insert(0);
            *e = (*e).max(m);
        }
    }
    out
}

fn require_prime(spec: FieldSpec) -> Result<u64> {
    spec.modulus()
        .ok_or_else(|| Error::precondition("operation requires a prime field F_p"))
}

/// The sumset `A + B` in `(F_p, +)` with max-representation multiplicities.
pub fn sumset_multiset(a: &Multiset, b: &Multiset) -> Result<Multiset> {
    if a.spec() != b.spec() {
        return Err(Error::FieldMismatch(a.spec().to_string(), b.spec().to_string()));
    }
    require_prime(a.spec())?;
    let map = sumset_map(a.entries(), b.entries(), |x, y| x + y);
    Ok(Multiset::from_map_unchecked(a.spec(), map))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

impl BoundReport {
    fn new(lhs: u64, rhs: u64) -> Self {
        BoundReport {
            lhs,
            rhs,
            holds: lhs >= rhs,
        }
    }

    pub fn is_tight(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `d(A + B)` against `min(p, d(A) + d(B) - 1)`.
pub fn cd_check(a: &Multiset, b: &Multiset) -> Result<BoundReport> {
    let p = require_prime(a.spec())?;
    let sum = sumset_multiset(a, b)?;
    Ok(BoundReport::new(sum.size(), p.min(a.size() + b.size() - 1)))
}

/// `deg(Y, m) = sum (m(y) - 1)`.
pub fn multiset_deg(y: &Multiset) -> u64 {
    y.excess_degree()
}

/// `deg(A + B) >= deg A + deg B`, as a report.
pub fn deg_check(a: &Multiset, b: &Multiset) -> Result<BoundReport> {
    let sum = sumset_multiset(a, b)?;
    Ok(BoundReport::new(multiset_deg(&sum), multiset_deg(a) + multiset_deg(b)))
}

// ---------------------------------------------------------------------------
// value sets

/// The image `f(S_1, ..., S_n)` with multiplicity
/// `max { |m(s)| - n + 1 : f(s) = c }` at each value `c`.
pub fn value_set_multiset(f: &MultiPoly, grid: &MultisetGrid) -> Result<Multiset> {
    if f.arity() != grid.arity() {
        return Err(Error::ArityMismatch {
            expected: grid.arity(),
            found: f.arity(),
        });
    }
    if f.spec() != grid.spec() {
        return Err(Error::FieldMismatch(grid.spec().to_string(), f.spec().to_string()));
    }
    let n = grid.arity() as u64;
    let mut out: BTreeMap<FieldElement, u32> = BTreeMap::new();
    for p in grid.points() {
        let c = f.eval(&p.coords)?;
        let m = (p.weight() - n + 1) as u32;
        let e = out.entry(c).or_insert(0);
        *e = (*e).max(m);
    }
    Ok(Multiset::from_map_unchecked(grid.spec(), out))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SunReport {
    /// `f = a_1 x_1^k + ... + a_n x_n^k + g`.
    pub poly: MultiPoly,
    pub value_set: Multiset,
    pub bound: BoundReport,
}

/// Size of the value-set multiset of `sum a_i x_i^k + g` against
/// `min(p(F), sum floor((d_i - 1)/k) + 1)`, with no cap in characteristic 0.
pub fn sun_check(a: &[FieldElement], k: u32, g: &MultiPoly, grid: &MultisetGrid) -> Result<SunReport> {
    let n = grid.arity();
    if a.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: a.len(),
        });
    }
    if k == 0 {
        return Err(Error::precondition("k must be a positive integer"));
    }
    if let Some(i) = a.iter().position(FieldElement::is_zero) {
        return Err(Error::precondition(format!("a_{} is zero", i + 1)));
    }
    if g.degree() >= Degree::Finite(k as i64) {
        return Err(Error::precondition(format!("deg g = {} is not below k = {k}", g.degree())));
    }
    if g.arity() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: g.arity(),
        });
    }
    let mut f = g.clone();
    for (i, ai) in a.iter().enumerate() {
        if ai.spec() != grid.spec() {
            return Err(Error::FieldMismatch(grid.spec().to_string(), ai.spec().to_string()));
        }
        f.add_term(ExponentVector::unit(n, i, k), ai.clone());
    }
    let value_set = value_set_multiset(&f, grid)?;
    let raw: u64 = grid.sizes().iter().map(|d| (d - 1) / k as u64).sum::<u64>() + 1;
    let rhs = match grid.spec().characteristic() {
        0 => raw,
        p => raw.min(p),
    };
    Ok(SunReport {
        poly: f,
        bound: BoundReport::new(value_set.size(), rhs),
        value_set,
    })
}

// ---------------------------------------------------------------------------
// Hopf-Stiefel numbers

/// `C(n, k) mod p` by Lucas's theorem; zero when `k > n`.
pub fn binomial_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        acc = ((acc as u128 * small_binomial_mod(ni, ki, p) as u128) % p as u128) as u64;
        n /= p;
        k /= p;
    }
    acc % p
}

fn small_binomial_mod(n: u64, k: u64, p: u64) -> u64 {
    // n < p, so the factorials below are invertible mod p
    let k = k.min(n - k);
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num = num * ((n - i) as u128) % p as u128;
        den = den * ((i + 1) as u128) % p as u128;
    }
    let inv = mod_pow(den as u64, p - 2, p);
    ((num * inv as u128) % p as u128) as u64
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = b as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    b = acc as u64;
    b
}

/// Exact `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial_exact(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Whether `p | C(n, k)` for every integer `k` with `n - r < k < s`.
pub fn hopf_stiefel_condition(p: u64, r: u64, s: u64, n: u64) -> bool {
    let lo = n as i128 - r as i128 + 1;
    let lo = lo.max(0) as u64;
    (lo..s).all(|k| binomial_mod_p(n, k, p) == 0)
}

/// `beta_p(r, s)`: the smallest `n >= 1` satisfying the Hopf-Stiefel
/// condition. The range is empty at `n = r + s - 1`, so the search stops
/// there at the latest.
pub fn hopf_stiefel(p: u64, r: u64, s: u64) -> Result<u64> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if r == 0 || s == 0 {
        return Err(Error::precondition("r and s must be positive"));
    }
    Ok((1..)
        .find(|&n| hopf_stiefel_condition(p, r, s, n))
        .expect("n = r + s - 1 always qualifies"))
}

// ---------------------------------------------------------------------------
// vector-space multisets

/// A vector of `F_p^d` as canonical coordinates in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VectorSpacePoint(pub Vec<u64>);

/// A finite nonempty multiset in `F_p^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorMultiset {
    p: u64,
    dim: usize,
    entries: BTreeMap<VectorSpacePoint, u32>,
}

impl VectorMultiset {
    pub fn new(p: u64, dim: usize, entries: impl IntoIterator<Item = (Vec<u64>, u32)>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if dim == 0 {
            return Err(Error::InvalidInput("vector space dimension must be >= 1".to_string()));
        }
        let mut map = BTreeMap::new();
        for (v, m) in entries {
            if v.len() != dim {
                return Err(Error::ArityMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if let Some(c) = v.iter().find(|&&c| c >= p) {
                return Err(Error::InvalidMultiset(format!("coordinate {c} is not below p = {p}")));
            }
            if m == 0 {
                return Err(Error::InvalidMultiset(format!("vector {v:?} has multiplicity 0")));
            }
            if map.insert(VectorSpacePoint(v.clone()), m).is_some() {
                return Err(Error::InvalidMultiset(format!("duplicate vector {v:?}")));
            }
        }
        if map.is_empty() {
            return Err(Error::InvalidMultiset("multiset is empty".to_string()));
        }
        Ok(VectorMultiset { p, dim, entries: map })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn size(&self) -> u64 {
        self.entries.values().map(|&m| m as u64).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VectorSpacePoint, u32)> {
        self.entries.iter().map(|(v, &m)| (v, m))
    }

    /// Sumset under componentwise addition mod `p`.
    pub fn sumset(&self, other: &VectorMultiset) -> Result<VectorMultiset> {
        if self.p != other.p || self.dim != other.dim {
            return Err(Error::FieldMismatch(
                format!("F_{}^{}", self.p, self.dim),
                format!("F_{}^{}", other.p, other.dim),
            ));
        }
        let p = self.p;
        let entries = sumset_map(&self.entries, &other.entries, |x, y| {
            VectorSpacePoint(x.0.iter().zip(&y.0).map(|(a, b)| (a + b) % p).collect())
        });
        Ok(VectorMultiset {
            p,
            dim: self.dim,
            entries,
        })
    }
}

/// `d(A + B)` in `F_p^d` against `beta_p(d(A), d(B))`.
pub fn ek_check(a: &VectorMultiset, b: &VectorMultiset) -> Result<BoundReport> {
    let sum = a.sumset(b)?;
    Ok(BoundReport::new(sum.size(), hopf_stiefel(a.p, a.size(), b.size())?))
}

// ---------------------------------------------------------------------------
// enumeration for exhaustive suites

/// Every multiset over `items` with total size in `1..=max_size`, as
/// `(item index, multiplicity)` lists.
pub fn multisets_over(num_items: usize, max_size: usize) -> Vec<Vec<(usize, u32)>> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        for choice in (0..num_items).combinations_with_replacement(size) {
            let mut counts: Vec<(usize, u32)> = Vec::new();
            for i in choice {
                match counts.last_mut() {
                    Some((j, m)) if *j == i => *m += 1,
                    _ => counts.push((i, 1)),
                }
            }
            out.push(counts);
        }
    }
    out
}

/// Every multiset of `F_p` of size at most `max_size`.
pub fn field_multisets(spec: FieldSpec, max_size: usize) -> Result<Vec<Multiset>> {
    let elements = spec
        .elements()
        .ok_or_else(|| Error::precondition("enumeration needs a prime field"))?;
    multisets_over(elements.len(), max_size)
        .into_iter()
        .map(|c| Multiset::new(spec, c.into_iter().map(|(i, m)| (elements[i].clone(), m))))
        .collect()
}

/// Every multiset of `F_p^dim` of size at most `max_size`.
pub fn vector_multisets(p: u64, dim: usize, max_size: usize) -> Result<Vec<VectorMultiset>> {
    let vectors: Vec<Vec<u64>> = (0..dim).map(|_| 0..p).multi_cartesian_product().collect();
    multisets_over(vectors.len(), max_size)
        .into_iter()
        .map(|c| VectorMultiset::new(p, dim, c.into_iter().map(|(i, m)| (vectors[i].clone(), m))))
        .collect()
}

impl std::fmt::Display for VectorMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("{")?;
        for (k, (v, m)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}):{m}", v.0.iter().join(","))?;
        }
        f.write_str("}")
    }
}

// ---------------------------------------------------------------------------
// exhaustive suites

/// Aggregate of a bound checked over every instance of a finite family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub cases: u64,
    pub failures: u64,
    /// Instances where the bound holds with equality.
    pub tight: u64,
    pub first_failure: Option<String>,
    /// Up to `SUITE_EXAMPLES` tight instances, in enumeration order.
    pub tight_examples: Vec<String>,
}

pub const SUITE_EXAMPLES: usize = 5;

fn summarize(results: Vec<(String, BoundReport)>) -> SuiteSummary {
    let mut out = SuiteSummary {
        cases: results.len() as u64,
        failures: 0,
        tight: 0,
        first_failure: None,
        tight_examples: Vec::new(),
    };
    for (label, r) in results {
        if !r.holds {
            out.failures += 1;
            out.first_failure.get_or_insert(label.clone());
        }
        if r.is_tight() {
            out.tight += 1;
            if out.tight_examples.len() < SUITE_EXAMPLES {
                out.tight_examples.push(label);
            }
        }
    }
    out
}

/// Cauchy-Davenport and the degree inequality over every ordered pair of
/// multisets of `F_p` with sizes at most `max_size`.
pub fn cd_suite(p: u64, max_size: usize, parallel: bool) -> Result<(SuiteSummary, SuiteSummary)> {
    let sets = field_multisets(FieldSpec::prime(p)?, max_size)?;
    let pairs: Vec<(usize, usize)> = (0..sets.len()).cartesian_product(0..sets.len()).collect();
    let run = |&(i, j): &(usize, usize)| -> Result<(String, BoundReport, BoundReport)> {
        let (a, b) = (&sets[i], &sets[j]);
        let label = format!("A={a} B={b}");
        Ok((label, cd_check(a, b)?, deg_check(a, b)?))
    };
    let rows = if parallel {
        crate::ideal::par_map(&pairs, run)?
    } else {
        pairs.iter().map(run).collect::<Result<Vec<_>>>()?
    };
    let (cd, deg): (Vec<_>, Vec<_>) = rows
        .into_iter()
        .map(|(l, c, d)| ((l.clone(), c), (l, d)))
        .unzip();
    Ok((summarize(cd), summarize(deg)))
}

/// The Eliahou-Kervaire bound over every ordered pair of multisets of
/// `F_p^dim` with sizes at most `max_size`.
pub fn ek_suite(p: u64, dim: usize, max_size: usize, parallel: bool) -> Result<SuiteSummary> {
    let sets = vector_multisets(p, dim, max_size)?;
    let pairs: Vec<(usize, usize)> = (0..sets.len()).cartesian_product(0..sets.len()).collect();
    let run = |&(i, j): &(usize, usize)| -> Result<(String, BoundReport)> {
        let (a, b) = (&sets[i], &sets[j]);
        Ok((format!("A={a} B={b}"), ek_check(a, b)?))
    };
    let rows = if parallel {
        crate::ideal::par_map(&pairs, run)?
    } else {
        pairs.iter().map(run).collect::<Result<Vec<_>>>()?
    };
    Ok(summarize(rows))
}
