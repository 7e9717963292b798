//! Weighted growth series of the affine Weyl groups behind the four
//! algebras, and the Steinberg formal degree that the isomorphisms must
//! preserve.
//!
//! The weight of a group element is the sum of per-generator weights over a
//! reduced word (well defined when the weights are constant on odd-bond
//! classes). Each algebra contributes the weights under which its basis
//! indexes dominate the scalar product:
//!
//! * `HpsiPlus` — parameter exponents `(0, 1, ..., 1)`;
//! * `Hplus` — plain length on the `AffineB` factor, with the extension bit
//!   weightless (so every count doubles);
//! * `Hminus` — weights `(3, 1, ..., 1)`: the label-1 generator stands for a
//!   length-3 element of the ambient group;
//! * `HpsiMinus` — plain length inside the rank-`n` group, restricted to the
//!   subgroup fixing the first coordinate (the image of the weighted
//!   embedding).
//!
//! The formal degree of the sign character is the reciprocal of the weighted
//! series evaluated at `1/q`; linked algebras must agree layer by layer.

use std::collections::BTreeMap;

use num::{BigRational, One, Signed, Zero};
use serde::Serialize;

use crate::coxeter::CoxeterSystem;
use crate::laurent::LaurentPoly;
use crate::presentations::{AlgebraName, WeightedEmbedding};
use crate::specdims::normalization;
use crate::{Error, Result, DEFAULT_BALL_CAP};

/// Layer counts `N_k` of a weighted growth series, `k = 0..=truncation`.
#[derive(Clone, Debug, Serialize)]
pub struct PoincareSeries {
    pub description: String,
    pub counts: Vec<u64>,
}

impl PoincareSeries {
    pub fn truncation(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn layer_counts(&self) -> &[u64] {
        &self.counts
    }

    /// The weight-`k` layer as a polynomial, `N_k q^k`.
    pub fn layer_poly(&self, k: usize) -> LaurentPoly {
        LaurentPoly::monomial(k as i64, self.counts.get(k).copied().unwrap_or(0).into())
    }

    /// The truncated series as a polynomial.
    pub fn total_poly(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for k in 0..self.counts.len() {
            p = &p + &self.layer_poly(k);
        }
        p
    }
}

fn check_weights(system: &CoxeterSystem, weights: &BTreeMap<usize, u64>) -> Result<()> {
    let expected = system.gen_indices();
    let got: Vec<usize> = weights.keys().copied().collect();
    if expected != got {
        return Err(Error::InvalidArgument(format!(
            "weights must cover generators {expected:?}, got {got:?}"
        )));
    }
    for &i in &expected {
        for &j in &expected {
            if i < j {
                if let Some(m) = system.bond(i, j) {
                    if m % 2 == 1 && weights[&i] != weights[&j] {
                        return Err(Error::InvalidArgument(format!(
                            "generators {i} and {j} are conjugate but carry different weights"
                        )));
                    }
                }
            }
        }
    }
    // A weight-0 generator makes the weight filtration coarser than length.
    // The plain-ball bound below relies on repetitions of the weightless
    // generator being separated, in a reduced word, by letters of positive
    // weight; with a single weightless generator the non-commuting separator
    // is automatically positive.
    if expected.iter().filter(|i| weights[i] == 0).count() > 1 {
        return Err(Error::InvalidArgument(
            "at most one generator may have weight zero".into(),
        ));
    }
    Ok(())
}

/// Count elements by weight, up to `max_weight`. The `cap` (default
/// [`crate::DEFAULT_BALL_CAP`]) bounds `max_weight`; the
/// internal plain-length radius may exceed it when a weightless generator is
/// present.
pub fn poincare(
    system: &CoxeterSystem,
    weights: &BTreeMap<usize, u64>,
    max_weight: usize,
    cap: Option<usize>,
) -> Result<PoincareSeries> {
    check_weights(system, weights)?;
    let cap = cap.unwrap_or(DEFAULT_BALL_CAP);
    if max_weight > cap {
        return Err(Error::CapExceeded {
            requested: max_weight,
            cap,
        });
    }
    // With a weightless generator, any element of weight k has at most k+1
    // weight-zero letters in a reduced word (consecutive occurrences of the
    // same generator cancel, so they are separated by positively weighted
    // non-commuting letters), hence plain length <= 2k + 1.
    let radius = if weights.values().all(|&w| w >= 1) {
        max_weight
    } else {
        2 * max_weight + 1
    };
    let ball = system.enumerate_ball(radius, Some(radius))?;
    let mut counts = vec![0u64; max_weight + 1];
    for (_, w) in ball.iter() {
        let wt: u64 = system
            .reduced_word(w)?
            .iter()
            .map(|i| weights[i])
            .sum();
        if let Ok(idx) = usize::try_from(wt) {
            if idx <= max_weight {
                counts[idx] += 1;
            }
        }
    }
    Ok(PoincareSeries {
        description: format!("{:?}, weights {:?}", system.kind(), weights),
        counts,
    })
}

fn weight_map(system: &CoxeterSystem, zero_at: Option<usize>, heavy_at: Option<usize>) -> BTreeMap<usize, u64> {
    system
        .gen_indices()
        .into_iter()
        .map(|i| {
            let w = if Some(i) == zero_at {
                0
            } else if Some(i) == heavy_at {
                3
            } else {
                1
            };
            (i, w)
        })
        .collect()
}

/// The growth series an algebra contributes to the formal-degree
/// comparison, per the weight conventions in the module documentation.
pub fn poincare_for_algebra(
    name: AlgebraName,
    n: usize,
    max_weight: usize,
    cap: Option<usize>,
) -> Result<PoincareSeries> {
    if n < name.min_rank() {
        return Err(Error::RankTooSmall {
            name: name.to_string(),
            min: name.min_rank(),
            n,
        });
    }
    match name {
        AlgebraName::HpsiPlus => {
            let sys = CoxeterSystem::affine_c(n)?;
            let mut series = poincare(&sys, &weight_map(&sys, Some(0), None), max_weight, cap)?;
            series.description = format!("{name}({n}): parameter-exponent weights");
            Ok(series)
        }
        AlgebraName::Hplus => {
            let sys = CoxeterSystem::affine_b(n)?;
            let mut series = poincare(&sys, &weight_map(&sys, None, None), max_weight, cap)?;
            for c in &mut series.counts {
                *c *= 2; // the weightless extension bit doubles every layer
            }
            series.description = format!("{name}({n}): plain length, extension doubled");
            Ok(series)
        }
        AlgebraName::Hminus => {
            let sys = CoxeterSystem::affine_c(n - 1)?;
            let mut series = poincare(&sys, &weight_map(&sys, None, Some(0)), max_weight, cap)?;
            series.description = format!("{name}({n}): weights (3, 1, ..., 1)");
            Ok(series)
        }
        AlgebraName::HpsiMinus => {
            let cap = cap.unwrap_or(DEFAULT_BALL_CAP);
            if max_weight > cap {
                return Err(Error::CapExceeded {
                    requested: max_weight,
                    cap,
                });
            }
            let emb = WeightedEmbedding::new(n)?;
            let ball = emb.ambient().enumerate_ball(max_weight, Some(max_weight))?;
            let mut counts = vec![0u64; max_weight + 1];
            for (k, v) in ball.iter() {
                if emb.is_in_image(v)? {
                    counts[k] += 1;
                }
            }
            Ok(PoincareSeries {
                description: format!("{name}({n}): plain length on the embedded subgroup"),
                counts,
            })
        }
    }
}

/// Partial sums and reciprocal of the weighted series at `1/q`.
#[derive(Clone, Debug)]
pub struct FdResult {
    pub counts: Vec<u64>,
    pub partial_sums: Vec<BigRational>,
    pub fd: BigRational,
    pub converged: bool,
    pub diverging: bool,
}

/// Formal degree of the sign character from a truncated series:
/// `fd = 1 / sum_k N_k q^{-k}`. `converged` reports whether the final
/// increment is below `tol` relative to the sum; `diverging` flags
/// increments that grow two steps in a row (impossible for `q > 1` unless
/// the series data is corrupt).
pub fn steinberg_fd(
    series: &PoincareSeries,
    q: &BigRational,
    tol: &BigRational,
) -> Result<FdResult> {
    if *q <= BigRational::one() {
        return Err(Error::InvalidArgument("q must exceed 1".into()));
    }
    let q_inv = q.recip();
    let mut pow = BigRational::one();
    let mut sum = BigRational::zero();
    let mut partial_sums = Vec::with_capacity(series.counts.len());
    let mut increments = Vec::with_capacity(series.counts.len());
    for &n_k in &series.counts {
        let inc = BigRational::from_integer(n_k.into()) * &pow;
        sum += &inc;
        increments.push(inc);
        partial_sums.push(sum.clone());
        pow *= &q_inv;
    }
    if sum.is_zero() {
        return Err(Error::InvalidArgument("empty series".into()));
    }
    let last = increments.last().expect("counts nonempty");
    let converged = last / &sum < *tol;
    let diverging = increments
        .windows(3)
        .any(|w| w[2] > w[1] && w[1] > w[0] && !w[0].is_zero());
    Ok(FdResult {
        counts: series.counts.clone(),
        partial_sums,
        fd: sum.recip(),
        converged,
        diverging,
    })
}

/// Side-by-side comparison of the series of two linked algebras.
#[derive(Clone, Debug)]
pub struct FdComparison {
    pub pair: (String, String),
    pub n: usize,
    pub counts_a: Vec<u64>,
    pub counts_b: Vec<u64>,
    pub first_mismatch: Option<usize>,
    pub fd_a: BigRational,
    pub fd_b: BigRational,
    /// The Plancherel transfer factor `(vol_a/dim_a) / (vol_b/dim_b)` at `q`.
    pub normalization_ratio: BigRational,
    /// `|ratio * fd_a - fd_b|`.
    pub fd_difference: BigRational,
    pub fd_match: bool,
    pub converged: bool,
}

impl FdComparison {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none() && self.fd_match
    }
}

/// Compare the weighted layer counts and formal degrees of a linked pair.
#[allow(clippy::too_many_arguments)]
pub fn compare_fd(
    a: AlgebraName,
    n_a: usize,
    b: AlgebraName,
    n_b: usize,
    e: u32,
    max_weight: usize,
    q: &BigRational,
    tol: &BigRational,
    cap: Option<usize>,
) -> Result<FdComparison> {
    if a.partner() != b {
        return Err(Error::InvalidArgument(format!(
            "{a} and {b} are not a linked pair"
        )));
    }
    if n_a != n_b {
        return Err(Error::RankMismatch {
            expected: n_a,
            got: n_b,
        });
    }
    let series_a = poincare_for_algebra(a, n_a, max_weight, cap)?;
    let series_b = poincare_for_algebra(b, n_b, max_weight, cap)?;
    let first_mismatch = (0..=max_weight).find(|&k| series_a.counts[k] != series_b.counts[k]);
    let fd_a = steinberg_fd(&series_a, q, tol)?;
    let fd_b = steinberg_fd(&series_b, q, tol)?;
    let factor = |name: AlgebraName, n: usize| -> Result<BigRational> {
        let (vol, dim) = normalization(name, n, e);
        vol.exact_div(&dim)?.eval(q)
    };
    let ratio = factor(a, n_a)? / factor(b, n_b)?;
    let diff = (&ratio * &fd_a.fd - &fd_b.fd).abs();
    Ok(FdComparison {
        pair: (a.to_string(), b.to_string()),
        n: n_a,
        counts_a: series_a.counts.clone(),
        counts_b: series_b.counts.clone(),
        first_mismatch,
        fd_a: fd_a.fd,
        fd_b: fd_b.fd,
        normalization_ratio: ratio,
        fd_difference: diff.clone(),
        fd_match: diff < *tol,
        converged: fd_a.converged && fd_b.converged,
    })
}
