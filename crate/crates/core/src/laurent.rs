//! Exact Laurent polynomials in a single formal parameter `q`.
//!
//! [`LaurentPoly`] (integer coefficients) is the coefficient ring used by the
//! Hecke algebra engine. [`RatLaurent`] carries exact rational coefficients
//! and is used where a dimension formula forces a division by two or an exact
//! polynomial quotient. Both keep a canonical form: a sorted exponent map
//! with no zero coefficients stored, so structural equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::{Error, Result};

/// Coefficient rings the polynomial type can be instantiated at.
pub trait Coeff: Clone + Eq + Zero + One + Neg<Output = Self> + fmt::Display {
    /// Exact division, `None` when the quotient leaves the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    fn to_rational(&self) -> BigRational;
    fn sub(&self, rhs: &Self) -> Self;
    fn is_negative(&self) -> bool;
}

impl Coeff for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = num::Integer::div_rem(self, rhs);
        r.is_zero().then_some(q)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from(self.clone())
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn is_negative(&self) -> bool {
        num::Signed::is_negative(self)
    }
}

impl Coeff for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn is_negative(&self) -> bool {
        num::Signed::is_negative(self)
    }
}

/// A Laurent polynomial `sum c_e * q^e` with exponents in `Z`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly<C = BigInt> {
    terms: BTreeMap<i64, C>,
}

/// Laurent polynomials with exact rational coefficients.
pub type RatLaurent = LaurentPoly<BigRational>;

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// The generator `q` itself.
    pub fn q() -> Self {
        Self::monomial(1, C::one())
    }

    pub fn monomial(exp: i64, coeff: C) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Smallest exponent present, `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, exp: i64, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms().map(|(e, t)| (e, t.clone() * c.clone())))
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at a nonzero rational point. Zero is rejected outright since
    /// negative exponents are allowed in general.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() {
            return Err(Error::EvalAtZero);
        }
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            acc += c.to_rational() * rational_pow(x, e);
        }
        Ok(acc)
    }

    /// Exact quotient `self / rhs`, or an error when the division leaves the
    /// ring (nonzero remainder, or a coefficient quotient that does not exist).
    pub fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Reduce to ordinary polynomial division by factoring out the lowest
        // powers of q on both sides.
        let (rlo, rhi) = (rhs.min_exp().unwrap(), rhs.max_exp().unwrap());
        let rhs_lead = rhs.terms.get(&rhi).unwrap();
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while !rem.is_zero() {
            let hi = rem.max_exp().unwrap();
            if rem.max_exp().unwrap() - rem.min_exp().unwrap() < rhi - rlo {
                return Err(Error::InexactDivision);
            }
            let lead = rem.terms.get(&hi).unwrap();
            let c = lead.exact_div(rhs_lead).ok_or(Error::InexactDivision)?;
            let t = Self::monomial(hi - rhi, c);
            rem = &rem - &(&t * rhs);
            if !rem.is_zero() && rem.max_exp().unwrap() >= hi {
                return Err(Error::InexactDivision);
            }
            quo = &quo + &t;
        }
        Ok(quo)
    }

    pub fn to_rational_poly(&self) -> RatLaurent {
        RatLaurent::from_terms(self.terms().map(|(e, c)| (e, c.to_rational())))
    }
}

impl RatLaurent {
    /// Convert back to integer coefficients when possible.
    pub fn to_int_poly(&self) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for (e, c) in self.terms() {
            if !c.is_integer() {
                return Err(Error::InexactDivision);
            }
            p.add_term(e, c.to_integer());
        }
        Ok(p)
    }

    pub fn half() -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(2))
    }
}

fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = BigRational::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<C: Coeff> $trait for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Coeff> $trait<&LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(rhs)
            }
        }
    };
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            terms: self.terms().map(|(e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag.is_one();
            match (e, coeff_is_one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Serialized as an ordered list of [exponent, coefficient] pairs, with the
// coefficient rendered as a decimal string so arbitrary precision survives.
impl<C: Coeff> Serialize for LaurentPoly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

/// Convenience constructor: dense coefficients for exponents `lo..`.
pub fn int_poly(lo: i64, coeffs: &[i64]) -> LaurentPoly {
    LaurentPoly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| (lo + k as i64, BigInt::from(c))),
    )
}
