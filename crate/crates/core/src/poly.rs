//! Sparse multivariate polynomials over a runtime field, with evaluation,
//! coordinate shifts and Hasse (Taylor) coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::order::TermOrder;

/// Exponents `(u_1, ..., u_n)` of a monomial `x^u`.
///
/// The derived `Ord` is plain lexicographic order on the vector; it serves as
/// a canonical iteration order and is unrelated to [`TermOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// `e * x_var` as an exponent vector.
    pub fn unit(n: usize, var: usize, e: u32) -> Self {
        let mut v = vec![0; n];
        v[var] = e;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le_all(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise strict `self < other` in every coordinate.
    pub fn lt_all(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// `self - other` when `other <= self` componentwise.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// All `u` with `0 <= u < bound` componentwise, in lexicographic order.
    pub fn box_below(bound: &[u32]) -> Vec<ExponentVector> {
        let mut out = vec![Vec::with_capacity(bound.len())];
        for &b in bound {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..b).map(move |e| {
                        let mut v = prefix.clone();
                        v.push(e);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(ExponentVector).collect()
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Total degree, with a distinct bottom element for the zero polynomial.
/// Finite values are signed so that bounds such as `deg f - d` stay exact
/// when they go negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn minus(self, d: u64) -> Degree {
        match self {
            Degree::NegInfinity => Degree::NegInfinity,
            Degree::Finite(a) => Degree::Finite(a - d as i64),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse polynomial in `x1..xn`: a map from exponent vector to nonzero
/// coefficient. The zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    spec: FieldSpec,
    arity: usize,
    terms: BTreeMap<ExponentVector, FieldElement>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic on polynomials sharing arity and field.
pub fn poly_arith(a: &MultiPoly, b: &MultiPoly, op: ArithOp) -> Result<MultiPoly> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

impl MultiPoly {
    pub fn zero(spec: FieldSpec, arity: usize) -> Self {
        MultiPoly {
            spec,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(spec: FieldSpec, arity: usize, c: FieldElement) -> Self {
        assert_eq!(spec, c.spec(), "constant from a different field");
        Self::monomial(arity, ExponentVector::zeros(arity), c)
    }

    pub fn one(spec: FieldSpec, arity: usize) -> Self {
        Self::constant(spec, arity, spec.one())
    }

    /// `c * x^u`; the field is taken from `c`.
    pub fn monomial(arity: usize, u: ExponentVector, c: FieldElement) -> Self {
        assert_eq!(u.len(), arity, "exponent vector arity");
        let spec = c.spec();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(u, c);
        }
        MultiPoly { spec, arity, terms }
    }

    /// The variable `x_{var+1}` (zero-based index).
    pub fn var(spec: FieldSpec, arity: usize, var: usize) -> Self {
        Self::monomial(arity, ExponentVector::unit(arity, var, 1), spec.one())
    }

    /// `sum_k coeffs[k] * x_var^k`.
    pub fn univariate(spec: FieldSpec, arity: usize, var: usize, coeffs: &[FieldElement]) -> Self {
        let mut p = Self::zero(spec, arity);
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(ExponentVector::unit(arity, var, k as u32), c.clone());
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(spec: FieldSpec, arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, FieldElement)>,
    {
        let mut p = Self::zero(spec, arity);
        for (u, c) in terms {
            if u.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: u.len(),
                });
            }
            if c.spec() != spec {
                return Err(Error::FieldMismatch(spec.to_string(), c.spec().to_string()));
            }
            p.add_term(u, c);
        }
        Ok(p)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &FieldElement)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<ExponentVector, FieldElement> {
        self.terms
    }

    pub fn coeff_of(&self, u: &ExponentVector) -> FieldElement {
        self.terms.get(u).cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|u| u.total() as i64)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn degree_in(&self, var: usize) -> Degree {
        self.terms
            .keys()
            .map(|u| u[var] as i64)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// True when every coefficient lies in the integer subring.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(FieldElement::is_integral)
    }

    /// Adds `c * x^u` in place.
    pub fn add_term(&mut self, u: ExponentVector, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(u) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        if self.spec != other.spec {
            return Err(Error::FieldMismatch(
                self.spec.to_string(),
                other.spec.to_string(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (u, c) in &other.terms {
            out.add_term(u.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (u, c) in &other.terms {
            out.add_term(u.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.spec, self.arity);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let w = u.checked_add(v).ok_or_else(|| {
                    Error::InvalidInput("exponent overflow in product".to_string())
                })?;
                out.add_term(w, a * b);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let mut out = Self::zero(self.spec, self.arity);
        if c.is_zero() {
            return out;
        }
        for (u, a) in &self.terms {
            out.terms.insert(u.clone(), a * c);
        }
        out
    }

    /// Multiplies by the monomial `c * x^u`.
    pub fn mul_term(&self, u: &ExponentVector, c: &FieldElement) -> Self {
        let mut out = Self::zero(self.spec, self.arity);
        if c.is_zero() {
            return out;
        }
        for (v, a) in &self.terms {
            let w = v.checked_add(u).expect("exponent overflow");
            out.terms.insert(w, a * c);
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.spec, self.arity);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check_point(&self, s: &[FieldElement]) -> Result<()> {
        if s.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: s.len(),
            });
        }
        if let Some(c) = s.iter().find(|c| c.spec() != self.spec) {
            return Err(Error::FieldMismatch(self.spec.to_string(), c.spec().to_string()));
        }
        Ok(())
    }

    pub fn eval(&self, s: &[FieldElement]) -> Result<FieldElement> {
        self.check_point(s)?;
        let mut acc = self.spec.zero();
        for (u, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in u.as_slice().iter().enumerate() {
                if e > 0 {
                    t = &t * &s[i].pow(e as u64);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// `g(x) = f(x + s)`. The coefficient of `x^u` in `g` is the Hasse
    /// coefficient `f_u(s)`.
    pub fn shift(&self, s: &[FieldElement]) -> Result<Self> {
        self.check_point(s)?;
        // binomial_powers[i][e] holds the dense coefficients of (x_i + s_i)^e
        let mut binomial_powers: Vec<Vec<Vec<FieldElement>>> = Vec::with_capacity(self.arity);
        for (i, si) in s.iter().enumerate() {
            let max_e = self.degree_in(i).finite().unwrap_or(0) as usize;
            let mut pows = vec![vec![self.spec.one()]];
            for e in 1..=max_e {
                let prev = &pows[e - 1];
                let mut next = vec![self.spec.zero(); e + 1];
                for (k, c) in prev.iter().enumerate() {
                    next[k + 1] = &next[k + 1] + c;
                    next[k] = &next[k] + &(c * si);
                }
                pows.push(next);
            }
            binomial_powers.push(pows);
        }
        let mut out = Self::zero(self.spec, self.arity);
        for (u, c) in &self.terms {
            let mut partial: Vec<(Vec<u32>, FieldElement)> = vec![(vec![0; self.arity], c.clone())];
            for (i, &e) in u.as_slice().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let expansion = &binomial_powers[i][e as usize];
                partial = partial
                    .into_iter()
                    .flat_map(|(v, a)| {
                        expansion.iter().enumerate().filter(|(_, b)| !b.is_zero()).map(
                            move |(k, b)| {
                                let mut w = v.clone();
                                w[i] = k as u32;
                                (w, &a * b)
                            },
                        )
                    })
                    .collect();
            }
            for (v, a) in partial {
                out.add_term(ExponentVector(v), a);
            }
        }
        Ok(out)
    }

    /// Hasse coefficients `f_u(s)` for every `u < w` (strictly, in every
    /// coordinate), including the zero ones. Valid in every characteristic.
    pub fn hasse_coeffs(
        &self,
        s: &[FieldElement],
        w: &[u32],
    ) -> Result<BTreeMap<ExponentVector, FieldElement>> {
        if w.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: w.len(),
            });
        }
        if w.contains(&0) {
            return Err(Error::precondition("multiplicity vector must be >= 1"));
        }
        let shifted = self.shift(s)?;
        Ok(ExponentVector::box_below(w)
            .into_iter()
            .map(|u| {
                let c = shifted.coeff_of(&u);
                (u, c)
            })
            .collect())
    }

    /// The single Hasse coefficient `f_u(s)`.
    pub fn hasse_coeff(&self, s: &[FieldElement], u: &ExponentVector) -> Result<FieldElement> {
        Ok(self.shift(s)?.coeff_of(u))
    }

    pub fn leading_monomial(&self, ord: &TermOrder) -> Result<ExponentVector> {
        self.leading_term(ord).map(|(u, _)| u)
    }

    pub fn leading_term(&self, ord: &TermOrder) -> Result<(ExponentVector, FieldElement)> {
        if ord.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: ord.arity(),
            });
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.compare(a.0, b.0))
            .map(|(u, c)| (u.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Terms sorted by descending graded-lex order with `x1 > x2 > ...`.
    pub fn terms_grlex_desc(&self) -> Vec<(&ExponentVector, &FieldElement)> {
        let ord = TermOrder::grlex(self.arity);
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.compare(b.0, a.0));
        v
    }

    /// Division with remainder by a monic polynomial `g` in the single
    /// variable `var`: returns `(q, r)` with `self = q*g + r` and
    /// `deg_var r < deg g`.
    pub fn div_rem_univariate(&self, var: usize, g: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        self.check_compatible(g)?;
        let d = g
            .degree_in(var)
            .finite()
            .ok_or(Error::ZeroPolynomial)? as u32;
        let lead = g.coeff_of(&ExponentVector::unit(self.arity, var, d));
        if !lead.is_one() || g.terms.keys().any(|u| u.total() != u[var] as u64) {
            return Err(Error::precondition(
                "divisor must be monic and univariate in the given variable",
            ));
        }
        let tail: Vec<(u32, FieldElement)> = g
            .terms
            .iter()
            .filter(|(u, _)| u[var] < d)
            .map(|(u, c)| (u[var], c.clone()))
            .collect();
        let mut work: BTreeMap<ExponentVector, FieldElement> = self.terms.clone();
        let mut quotient = Self::zero(self.spec, self.arity);
        let mut remainder = Self::zero(self.spec, self.arity);
        // Process monomials by descending degree in `var`; each step only
        // creates monomials of strictly lower `var`-degree.
        while let Some(u) = work
            .keys()
            .max_by(|a, b| a[var].cmp(&b[var]).then_with(|| a.cmp(b)))
            .cloned()
        {
            let c = work.remove(&u).expect("key present");
            if u[var] < d {
                remainder.terms.insert(u, c);
                continue;
            }
            let mut v = u.clone().into_vec();
            v[var] -= d;
            let qv = ExponentVector(v);
            for (k, gc) in &tail {
                let mut w = qv.clone().into_vec();
                w[var] += k;
                let delta = -(&c * gc);
                let key = ExponentVector(w);
                let sum = match work.get(&key) {
                    Some(old) => old + &delta,
                    None => delta,
                };
                if sum.is_zero() {
                    work.remove(&key);
                } else {
                    work.insert(key, sum);
                }
            }
            quotient.add_term(qv, c);
        }
        Ok((quotient, remainder))
    }

    /// S-polynomial `lcm/LT(f) * f - lcm/LT(g) * g` under `ord`.
    pub fn s_polynomial(&self, other: &Self, ord: &TermOrder) -> Result<Self> {
        self.check_compatible(other)?;
        let (uf, cf) = self.leading_term(ord)?;
        let (ug, cg) = other.leading_term(ord)?;
        let lcm = ExponentVector(
            uf.as_slice()
                .iter()
                .zip(ug.as_slice())
                .map(|(a, b)| *a.max(b))
                .collect(),
        );
        let left = self.mul_term(&lcm.checked_sub(&uf).expect("lcm dominates"), &cf.inv()?);
        let right = other.mul_term(&lcm.checked_sub(&ug).expect("lcm dominates"), &cg.inv()?);
        left.try_sub(&right)
    }
}

fn assert_compatible(a: &MultiPoly, b: &MultiPoly) {
    if let Err(e) = a.check_compatible(b) {
        panic!("polynomial arithmetic on incompatible operands: {e}");
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_compatible(self, rhs);
        self.try_add(rhs).expect("checked")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_compatible(self, rhs);
        self.try_sub(rhs).expect("checked")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_compatible(self, rhs);
        self.try_mul(rhs).expect("exponent overflow in product")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-self.spec.one())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, u: &ExponentVector) -> fmt::Result {
    let mut first = true;
    for (i, &e) in u.as_slice().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Canonical form: terms in descending graded-lex order, `x1 > x2 > ...`,
/// written in the grammar accepted by [`crate::parse::parse_poly`].
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (u, c)) in self.terms_grlex_desc().into_iter().enumerate() {
            let negative = c.is_negative_display();
            let magnitude = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_constant = u.total() == 0;
            if is_constant {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, u)?;
            }
        }
        Ok(())
    }
}
