//! Closed-form bookkeeping for the representation-level numerics: minimal
//! type dimensions, the two-eigenvalue solver for a rank-two commutant,
//! the index of the enlarged parahoric, and the volume normalizations used
//! by the formal-degree comparison.
//!
//! The quantities here are Laurent polynomials in `q` with rational
//! coefficients (halves appear throughout); numeric instances are obtained
//! by evaluating at a prime power.

use num::{BigRational, One, Zero};
use serde::Serialize;

use crate::laurent::{int_poly, LaurentPoly, RatLaurent};
use crate::presentations::AlgebraName;
use crate::{Error, Result};

/// Which half of a split type, or the undivided bottom type.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
    Full,
}

impl Sign {
    pub fn as_str(&self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::Full => "full",
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            "full" => Ok(Sign::Full),
            other => Err(Error::InvalidArgument(format!(
                "unknown sign '{other}' (expected +, -, or full)"
            ))),
        }
    }
}

fn q_pow_en(n: usize, e: u32) -> RatLaurent {
    RatLaurent::monomial((e as i64) * (n as i64), BigRational::one())
}

fn half() -> BigRational {
    RatLaurent::half()
}

/// Dimension of the `i`-th minimal type: `q^{en}` for the bottom type
/// `(i, sign) = (0, full)`, and `(1/2) q^{en} (q^i +- 1)` for the two halves
/// at `i >= 1`.
pub fn dim_tau_symbolic(n: usize, e: u32, i: usize, sign: Sign) -> Result<RatLaurent> {
    if i > n {
        return Err(Error::InvalidDimRequest {
            i,
            sign: sign.to_string(),
        });
    }
    match (i, sign) {
        (0, Sign::Full) => Ok(q_pow_en(n, e)),
        (i, Sign::Plus) if i >= 1 => Ok(split_dim(n, e, i, true)),
        (i, Sign::Minus) if i >= 1 => Ok(split_dim(n, e, i, false)),
        _ => Err(Error::InvalidDimRequest {
            i,
            sign: sign.to_string(),
        }),
    }
}

fn split_dim(n: usize, e: u32, i: usize, plus: bool) -> RatLaurent {
    let sign_one = if plus {
        RatLaurent::one()
    } else {
        -RatLaurent::one()
    };
    (&q_pow_en(n, e) * &(&RatLaurent::q().pow(i as u32) + &sign_one)).scale(&half())
}

/// The same dimension evaluated at a numeric `q`.
pub fn dim_tau_at(n: usize, e: u32, i: usize, sign: Sign, q: &BigRational) -> Result<BigRational> {
    dim_tau_symbolic(n, e, i, sign)?.eval(q)
}

/// Solution of the two-dimensional commutant: an induced module of
/// dimension `d` splitting as `d1 + d2` forces eigenvalues
/// `lambda1 = d2/d1` and `lambda2 = -1` on the distinguished generator.
#[derive(Clone, Debug, Serialize)]
pub struct SubalgebraDatum {
    pub d: RatLaurent,
    pub d1: RatLaurent,
    pub d2: RatLaurent,
    pub lambda1: RatLaurent,
    pub lambda2: RatLaurent,
}

pub fn solve_two_dim(d: &RatLaurent, d1: &RatLaurent) -> Result<SubalgebraDatum> {
    if d1.is_zero() {
        return Err(Error::InvalidArgument("d1 must be nonzero".into()));
    }
    let d2 = d - d1;
    if d2.is_zero() {
        return Err(Error::InvalidArgument("d must differ from d1".into()));
    }
    let lambda1 = d2.exact_div(d1)?;
    // lambda1*d1 + lambda2*d2 = 0 holds by construction; keep the assertion
    // as a tripwire on the exact division.
    assert!((&(&lambda1 * d1) - &d2).is_zero());
    Ok(SubalgebraDatum {
        d: d.clone(),
        d1: d1.clone(),
        d2,
        lambda1,
        lambda2: -RatLaurent::one(),
    })
}

/// `1 + 2q + 2q^2 + 2q^3 + q^4`: the order-8 dihedral growth polynomial
/// appearing as the numerator of the parahoric index.
pub fn index_j1_numerator() -> LaurentPoly {
    int_poly(0, &[1, 2, 2, 2, 1])
}

/// The parahoric index `(1 + 2q + 2q^2 + 2q^3 + q^4) / (1 + q)`, which
/// collapses to `1 + q + q^2 + q^3`.
pub fn index_j1() -> LaurentPoly {
    index_j1_numerator()
        .exact_div(&int_poly(0, &[1, 1]))
        .expect("1 + q divides the dihedral growth polynomial")
}

/// The `(vol, dim)` normalization pair for each algebra: the psi-side
/// carries `vol = dim` equal to the relevant type dimension, the plain side
/// is normalized to `(1, 1)`.
pub fn normalization(name: AlgebraName, n: usize, e: u32) -> (RatLaurent, RatLaurent) {
    match name {
        AlgebraName::Hplus | AlgebraName::Hminus => (RatLaurent::one(), RatLaurent::one()),
        AlgebraName::HpsiPlus => (q_pow_en(n, e), q_pow_en(n, e)),
        AlgebraName::HpsiMinus => {
            let v = split_dim(n, e, 1, false);
            (v.clone(), v)
        }
    }
}

/// Coefficients of `p` rewritten in powers of `q - 1`; requires `p` to be a
/// genuine polynomial (no negative exponents). Nonnegative coefficients
/// certify monotone growth for `q > 1`.
pub fn expand_in_q_minus_1(p: &RatLaurent) -> Result<Vec<BigRational>> {
    if p.min_exp().is_some_and(|m| m < 0) {
        return Err(Error::InvalidArgument(
            "expansion in q - 1 requires a polynomial".into(),
        ));
    }
    let deg = p.max_exp().unwrap_or(0).max(0) as usize;
    let mut dense: Vec<BigRational> = (0..=deg as i64).map(|k| p.coeff(k)).collect();
    let mut out = Vec::with_capacity(deg + 1);
    // Repeated synthetic division by (q - 1): one Horner pass leaves the
    // remainder p(1) in slot 0 and the quotient in the remaining slots.
    while dense.len() > 1 {
        for k in (0..dense.len() - 1).rev() {
            let next = dense[k + 1].clone();
            dense[k] += next;
        }
        out.push(dense.remove(0));
    }
    out.push(dense.pop().unwrap_or_else(BigRational::zero));
    Ok(out)
}
