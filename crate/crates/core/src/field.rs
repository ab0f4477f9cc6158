//! Exact coefficient fields chosen at runtime: prime fields `F_p` for any
//! prime `p < 2^64`, and the rationals with arbitrary-precision numerators
//! and denominators.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which field the coefficients live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Prime(u64),
    Rational,
}

/// A validated field description. Prime moduli are checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    kind: FieldKind,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec {
            kind: FieldKind::Prime(p),
        })
    }

    pub const fn rational() -> Self {
        FieldSpec {
            kind: FieldKind::Rational,
        }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    /// `p` for `F_p`, `0` for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self.kind {
            FieldKind::Prime(p) => p,
            FieldKind::Rational => 0,
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            FieldKind::Prime(p) => Some(p),
            FieldKind::Rational => None,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self.kind, FieldKind::Prime(_))
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_u64(&self, v: u64) -> FieldElement {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        let repr = match self.kind {
            FieldKind::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Repr::Mod(r.to_u64().expect("residue below a u64 modulus"))
            }
            FieldKind::Rational => Repr::Rat(BigRational::from_integer(v.clone())),
        };
        FieldElement { spec: *self, repr }
    }

    /// Maps the fraction `num/den` into the field; fails if `den` vanishes
    /// in the field (including `p | den` for prime fields).
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        let n = self.from_bigint(num);
        let d = self.from_bigint(den);
        n.checked_div(&d)
    }

    /// Parses a decimal integer `"-12"` or fraction `"3/4"`.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let bad = |reason: &str| Error::InvalidElement {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        let (num, den) = match trimmed.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (trimmed, None),
        };
        let parse_int = |s: &str| -> Result<BigInt> {
            let digits = s.strip_prefix('-').unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("expected a decimal integer or fraction"));
            }
            s.parse::<BigInt>()
                .map_err(|_| bad("expected a decimal integer or fraction"))
        };
        let num = parse_int(num)?;
        match den {
            None => Ok(self.from_bigint(&num)),
            Some(d) => {
                let den = parse_int(d)?;
                self.from_fraction(&num, &den)
                    .map_err(|_| bad("denominator vanishes in the field"))
            }
        }
    }

    fn check(&self, other: &FieldSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.to_string(), other.to_string()))
        }
    }

    /// Every element of `F_p` in canonical order. `None` for the rationals.
    pub fn elements(&self) -> Option<Vec<FieldElement>> {
        self.modulus()
            .map(|p| (0..p).map(|v| self.from_u64(v)).collect())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Prime(p) => write!(f, "prime:{p}"),
            FieldKind::Rational => write!(f, "rational"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `prime:7` or `rational`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" || s == "rationals" || s == "Q" {
            return Ok(FieldSpec::rational());
        }
        if let Some(p) = s.strip_prefix("prime:") {
            let p: u64 = p.trim().parse().map_err(|_| {
                Error::InvalidInput(format!("bad prime modulus in field spec {s:?}"))
            })?;
            return FieldSpec::prime(p);
        }
        Err(Error::InvalidInput(format!(
            "unknown field spec {s:?} (expected prime:<p> or rational)"
        )))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Mod(u64),
    Rat(BigRational),
}

/// An element of a [`FieldSpec`] in canonical form, so that equality is
/// representational equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: FieldSpec,
    repr: Repr,
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Mod(v) => *v == 0,
            Repr::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Mod(v) => *v == 1,
            Repr::Rat(r) => r.is_one(),
        }
    }

    /// True when the element lies in the integer subring: always for `F_p`,
    /// denominator one for the rationals.
    pub fn is_integral(&self) -> bool {
        match &self.repr {
            Repr::Mod(_) => true,
            Repr::Rat(r) => r.is_integer(),
        }
    }

    /// Canonical residue in `[0, p)`, for prime fields only.
    pub fn residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Mod(v) => Some(*v),
            Repr::Rat(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(r) => Some(r),
            Repr::Mod(_) => None,
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.spec.check(&rhs.spec)?;
        Ok(self.add_unchecked(rhs))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.spec.check(&rhs.spec)?;
        Ok(self.add_unchecked(&rhs.neg_ref()))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.spec.check(&rhs.spec)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match (&self.repr, self.spec.kind) {
            (Repr::Mod(v), FieldKind::Prime(p)) => Repr::Mod(inv_mod(*v, p)),
            (Repr::Rat(r), _) => Repr::Rat(r.recip()),
            _ => unreachable!("representation always matches the field kind"),
        };
        Ok(FieldElement {
            spec: self.spec,
            repr,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.spec.check(&rhs.spec)?;
        Ok(self.mul_unchecked(&rhs.inv()?))
    }

    /// `self^e`, with `a^0 = 1` for every `a` including zero.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    fn neg_ref(&self) -> Self {
        let repr = match (&self.repr, self.spec.kind) {
            (Repr::Mod(v), FieldKind::Prime(p)) => Repr::Mod(if *v == 0 { 0 } else { p - v }),
            (Repr::Rat(r), _) => Repr::Rat(-r),
            _ => unreachable!("representation always matches the field kind"),
        };
        FieldElement {
            spec: self.spec,
            repr,
        }
    }

    fn add_unchecked(&self, rhs: &Self) -> Self {
        let repr = match (&self.repr, &rhs.repr, self.spec.kind) {
            (Repr::Mod(a), Repr::Mod(b), FieldKind::Prime(p)) => {
                Repr::Mod(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            (Repr::Rat(a), Repr::Rat(b), _) => Repr::Rat(a + b),
            _ => unreachable!("operands checked to share a field"),
        };
        FieldElement {
            spec: self.spec,
            repr,
        }
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let repr = match (&self.repr, &rhs.repr, self.spec.kind) {
            (Repr::Mod(a), Repr::Mod(b), FieldKind::Prime(p)) => Repr::Mod(mul_mod(*a, *b, p)),
            (Repr::Rat(a), Repr::Rat(b), _) => Repr::Rat(a * b),
            _ => unreachable!("operands checked to share a field"),
        };
        FieldElement {
            spec: self.spec,
            repr,
        }
    }
}

fn assert_same(a: &FieldSpec, b: &FieldSpec) {
    if a != b {
        panic!("arithmetic on mismatched fields {a} and {b}");
    }
}

// Operator impls panic on mismatched fields; the fallible `try_*` methods are
// the checked entry points. Containers validate their field once at the
// boundary and then use the operators internally.
impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        assert_same(&self.spec, &rhs.spec);
        self.add_unchecked(rhs)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        assert_same(&self.spec, &rhs.spec);
        self.add_unchecked(&rhs.neg_ref())
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        assert_same(&self.spec, &rhs.spec);
        self.mul_unchecked(rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        &self + &rhs
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        &self - &rhs
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        &self * &rhs
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: residues in `[0, p)` numerically, rationals numerically.
/// Used for deterministic iteration and tie-breaking, not as a field order.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.spec.cmp(&other.spec).then_with(|| match (&self.repr, &other.repr) {
            (Repr::Mod(a), Repr::Mod(b)) => a.cmp(b),
            (Repr::Rat(a), Repr::Rat(b)) => a.cmp(b),
            (Repr::Mod(_), Repr::Rat(_)) => Ordering::Less,
            (Repr::Rat(_), Repr::Mod(_)) => Ordering::Greater,
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Mod(v) => write!(f, "{v}"),
            Repr::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl FieldElement {
    /// Whether the printed form starts with a minus sign.
    pub fn is_negative_display(&self) -> bool {
        matches!(&self.repr, Repr::Rat(r) if r.is_negative())
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid over i128
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &q in &WITNESSES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
