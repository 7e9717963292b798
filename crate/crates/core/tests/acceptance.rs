//! End-to-end acceptance suite. Each test covers one advertised guarantee
//! of the crate and prints a PASS line (visible with `--nocapture`); a
//! failing guarantee fails the corresponding test.

mod support;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num::{BigInt, BigRational, One, Signed};

use iwahori_core::laurent::{LaurentPoly, RatLaurent};
use iwahori_core::plancherel::{compare_fd, poincare, steinberg_fd};
use iwahori_core::presentations::{
    build, iso_minus, iso_plus, verify_iso, verify_presentation, AlgebraName, IsoMap,
    WeightedEmbedding,
};
use iwahori_core::specdims::{
    dim_tau_at, dim_tau_symbolic, index_j1, index_j1_numerator, solve_two_dim, Sign,
};
use iwahori_core::{
    AffineElt, CoxeterSystem, ExtendedElt, HeckeAlgebra, HeckeParams, Result,
};

use support::{word_enumeration_layers, RewriteOracle};

fn rat(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}

fn tol_12() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12))
}

/// Every defining relation of all four presented algebras re-derives from
/// the signed-permutation model, for n = 2, 3, 4, within 10 s per algebra.
#[test]
fn presentations_verify_for_all_algebras() {
    for n in [2usize, 3, 4] {
        for name in AlgebraName::all() {
            let t0 = Instant::now();
            let spec = build(name, n).expect("constructible");
            let report = verify_presentation(&spec).expect("checkable");
            assert!(
                report.pass(),
                "{name} n={n}: first failure {:?}",
                report.first_failure()
            );
            let dt = t0.elapsed();
            assert!(dt < Duration::from_secs(10), "{name} n={n} took {dt:?}");
        }
    }
    println!("acceptance: presentation relations verified for all four algebras, n = 2..4: PASS");
}

/// The two structural isomorphisms check out on the length-6 ball for
/// n = 2, 3, 4 (images satisfy source relations, the basis map is a
/// well-defined injection, trace and star are preserved), each case within
/// 60 s; a deliberately wrong generator assignment is rejected.
#[test]
fn isomorphisms_verify_on_ball() {
    type Maker = fn(usize) -> Result<IsoMap>;
    let makers: [(&str, Maker); 2] = [("plus", iso_plus), ("minus", iso_minus)];
    for n in [2usize, 3, 4] {
        for (label, mk) in makers {
            let t0 = Instant::now();
            let map = mk(n).expect("constructible");
            let report = verify_iso(&map, 6, None).expect("checkable");
            assert!(
                report.pass(),
                "{label} n={n}: first failure {:?}",
                report.first_failure()
            );
            let dt = t0.elapsed();
            assert!(dt < Duration::from_secs(60), "{label} n={n} took {dt:?}");
        }
    }

    // Sending the extra involution to an ordinary generator must fail the
    // quadratic check (their parameters differ).
    let source = build(AlgebraName::HpsiPlus, 2).unwrap();
    let target = build(AlgebraName::Hplus, 2).unwrap();
    let mut images = vec![(0usize, target.gen_elt(1).unwrap())];
    for i in 1..=2 {
        images.push((i, target.gen_elt(i).unwrap()));
    }
    let bad = IsoMap::new(source, target, images).unwrap();
    let report = verify_iso(&bad, 2, None).unwrap();
    assert!(!report.pass(), "perturbed map must be rejected");

    println!("acceptance: both isomorphisms verified on the length-6 ball, n = 2..4: PASS");
}

/// The eigenvalue table of the rank-two commutant solver: symbolically in
/// q for several (n, e), and numerically for e in 0..=2, q in {2, 3, 5}.
#[test]
fn eigenvalue_table() {
    let q_plus_1 = &RatLaurent::q() + &RatLaurent::one();

    for (n, e) in [(2usize, 0u32), (3, 1), (2, 2), (4, 2)] {
        let q_en = dim_tau_symbolic(n, e, 0, Sign::Full).unwrap();
        let d_plus = &q_en * &q_plus_1;

        // Distinguished vertex of the plus pair: bottom type below, q above.
        let datum = solve_two_dim(&d_plus, &q_en).unwrap();
        assert_eq!(datum.lambda1, RatLaurent::q());
        assert_eq!(datum.lambda2, -RatLaurent::one());

        // Parameter-1 vertex: the split halves are equal, eigenvalue 1.
        let d1 = dim_tau_symbolic(n, e, 1, Sign::Plus).unwrap();
        let datum = solve_two_dim(&d_plus, &d1).unwrap();
        assert_eq!(datum.lambda1, RatLaurent::one());
        assert_eq!(datum.d2, d1);

        // Distinguished vertex of the minus pair: eigenvalue q^2.
        let tau1m = dim_tau_symbolic(n, e, 1, Sign::Minus).unwrap();
        let d_min1 = &tau1m * &index_j1().to_rational_poly();
        let d1_min1 = dim_tau_symbolic(n, e, 2, Sign::Minus).unwrap();
        let datum = solve_two_dim(&d_min1, &d1_min1).unwrap();
        assert_eq!(datum.lambda1, RatLaurent::q().pow(2));
        assert_eq!(datum.lambda2, -RatLaurent::one());

        // Remaining vertices of the minus pair: eigenvalue q.
        let d_min = &tau1m * &q_plus_1;
        let datum = solve_two_dim(&d_min, &tau1m).unwrap();
        assert_eq!(datum.lambda1, RatLaurent::q());
    }

    for e in [0u32, 1, 2] {
        for qv in [2i64, 3, 5] {
            for n in [2usize, 3] {
                let q = rat(qv);
                let q1 = &q + BigRational::one();
                let q_en = RatLaurent::constant(dim_tau_at(n, e, 0, Sign::Full, &q).unwrap());
                let d_plus = q_en.scale(&q1);
                assert_eq!(
                    solve_two_dim(&d_plus, &q_en).unwrap().lambda1,
                    RatLaurent::constant(q.clone())
                );
                let d1 = RatLaurent::constant(dim_tau_at(n, e, 1, Sign::Plus, &q).unwrap());
                assert_eq!(solve_two_dim(&d_plus, &d1).unwrap().lambda1, RatLaurent::one());

                let tau1m = RatLaurent::constant(dim_tau_at(n, e, 1, Sign::Minus, &q).unwrap());
                let idx = RatLaurent::constant(index_j1().eval(&q).unwrap());
                let d2m = RatLaurent::constant(dim_tau_at(n, e, 2, Sign::Minus, &q).unwrap());
                assert_eq!(
                    solve_two_dim(&(&tau1m * &idx), &d2m).unwrap().lambda1,
                    RatLaurent::constant(&q * &q)
                );
                let d_min = tau1m.scale(&q1);
                assert_eq!(
                    solve_two_dim(&d_min, &tau1m).unwrap().lambda1,
                    RatLaurent::constant(q)
                );
            }
        }
    }

    println!("acceptance: commutant eigenvalue table, symbolic and numeric: PASS");
}

/// The parahoric index: (1 + 2q + 2q^2 + 2q^3 + q^4) / (1 + q) collapses to
/// 1 + q + q^2 + q^3, and the numerator is the growth polynomial of the
/// order-8 dihedral group computed by breadth-first search.
#[test]
fn parahoric_index_identity() {
    assert_eq!(index_j1(), support::poly(0, &[1, 1, 1, 1]));
    assert_eq!(
        &index_j1() * &support::poly(0, &[1, 1]),
        index_j1_numerator()
    );

    let sys = CoxeterSystem::finite_c(2).unwrap();
    let weights: BTreeMap<usize, u64> = sys.gen_indices().into_iter().map(|i| (i, 1)).collect();
    let series = poincare(&sys, &weights, 6, None).unwrap();
    assert_eq!(series.layer_counts(), &[1, 2, 2, 2, 1, 0, 0]);
    assert_eq!(series.total_poly(), index_j1_numerator());

    println!("acceptance: parahoric index identity against dihedral growth: PASS");
}

/// The weighted embedding of the rank-(n-1) system into the rank-n system:
/// the (3,1,...,1)-weighted length equals the plain length of the image,
/// images are distinct and land in the first-coordinate stabilizer, and
/// weight-additive pairs multiply as single basis elements.
#[test]
fn weighted_length_matches_embedding() {
    for n in [2usize, 3] {
        let emb = WeightedEmbedding::new(n).unwrap();
        let spec = build(AlgebraName::HpsiMinus, n).unwrap();
        let alg = spec.algebra();

        // Weights are >= 1, so the weighted ball of radius 9 sits inside
        // the plain ball of radius 9.
        let ball = emb.domestic().enumerate_ball(9, None).unwrap();
        let mut in_range: Vec<(AffineElt, u64)> = Vec::new();
        let mut images: BTreeSet<AffineElt> = BTreeSet::new();
        for (_, w) in ball.iter() {
            let wl = emb.weighted_length(w).unwrap();
            assert_eq!(
                wl,
                emb.ambient_length(w).unwrap(),
                "n={n}, w={:?}",
                emb.domestic().reduced_word(w)
            );
            if wl <= 9 {
                let img = emb.map_elt(w).unwrap();
                assert!(emb.is_in_image(&img).unwrap());
                assert!(images.insert(img), "embedding must be injective");
                in_range.push((w.clone(), wl));
            }
        }
        assert!(in_range.len() > 1);

        let basis = |w: &AffineElt| {
            alg.basis(ExtendedElt {
                eps: false,
                elt: w.clone(),
            })
            .unwrap()
        };
        let mut additive_pairs = 0usize;
        for (w1, l1) in &in_range {
            for (w2, l2) in &in_range {
                let prod = w1.compose(w2);
                if emb.weighted_length(&prod).unwrap() == l1 + l2 {
                    additive_pairs += 1;
                    let lhs = basis(w1).mul(&basis(w2)).unwrap();
                    assert_eq!(lhs, basis(&prod), "n={n}");
                }
            }
        }
        // Strictly more than the identity-paired cases, i.e. the additive
        // condition bites on genuinely interacting pairs.
        assert!(additive_pairs > 2 * in_range.len());
    }

    println!("acceptance: weighted length, image membership, and additive products: PASS");
}

/// The two linked pairs have identical weighted growth up to weight 12 for
/// n = 2, 3, and the truncated formal degrees agree to 1e-12 at q = 2, 3;
/// the rank-1 closed form (q-1)/(q+1) is reproduced to 1e-12.
#[test]
fn formal_degree_comparison() {
    let tol = tol_12();
    let pairs = [
        (AlgebraName::HpsiPlus, AlgebraName::Hplus),
        (AlgebraName::HpsiMinus, AlgebraName::Hminus),
    ];
    for n in [2usize, 3] {
        for (a, b) in pairs {
            for qv in [2i64, 3] {
                let q = rat(qv);
                let rep = compare_fd(a, n, b, n, 1, 12, &q, &tol, None).unwrap();
                assert!(
                    rep.first_mismatch.is_none(),
                    "{a}/{b} n={n}: layers {:?} vs {:?}",
                    rep.counts_a,
                    rep.counts_b
                );
                assert!(
                    rep.pass(),
                    "{a}/{b} n={n} q={qv}: fd {} vs {} (diff {})",
                    rep.fd_a,
                    rep.fd_b,
                    rep.fd_difference
                );
            }
        }
    }

    // Rank-1 sanity: the series is 1 + 2q^{-1} + 2q^{-2} + ..., whose
    // truncation at weight 60 is within 1e-12 of (q-1)/(q+1) for q >= 2.
    let sys = CoxeterSystem::infinite_dihedral();
    let weights: BTreeMap<usize, u64> = BTreeMap::from([(0, 1), (1, 1)]);
    let series = poincare(&sys, &weights, 60, Some(64)).unwrap();
    for qv in [2i64, 3] {
        let q = rat(qv);
        let fd = steinberg_fd(&series, &q, &tol).unwrap();
        assert!(fd.converged && !fd.diverging);
        let closed = (&q - BigRational::one()) / (&q + BigRational::one());
        assert!(
            (&fd.fd - &closed).abs() < tol,
            "q={qv}: {} vs {closed}",
            fd.fd
        );
    }

    println!("acceptance: formal degrees agree across both linked pairs: PASS");
}

/// The fast product (signed-permutation model) agrees with a string-rewriting
/// oracle on every basis pair of the rank-2 affine ball of radius 3, in all
/// four quadratic-parameter regimes used by the presented algebras.
#[test]
fn products_match_rewrite_oracle() {
    let sys = CoxeterSystem::affine_c(2).unwrap();
    let ball = sys.enumerate_ball(3, None).unwrap();
    let words: Vec<Vec<usize>> = ball
        .iter()
        .map(|(_, w)| sys.reduced_word(w).unwrap())
        .collect();

    // One regime per presented algebra, transplanted onto this diagram;
    // the two minus-side algebras share the squared-parameter pattern and
    // are both exercised.
    let regime = |name: AlgebraName| -> [(usize, u32); 3] {
        match name {
            AlgebraName::Hplus => [(0, 1), (1, 1), (2, 1)],
            AlgebraName::HpsiPlus => [(0, 0), (1, 1), (2, 1)],
            AlgebraName::Hminus | AlgebraName::HpsiMinus => [(0, 2), (1, 1), (2, 1)],
        }
    };

    for name in AlgebraName::all() {
        let exps = regime(name);
        let params = HeckeParams::from_exponents(&sys, &exps).unwrap();
        let alg = HeckeAlgebra::new(sys, params, false).unwrap();
        let oracle = RewriteOracle::new(sys, &exps);
        for w1 in &words {
            for w2 in &words {
                let fast = alg
                    .basis_from_word(false, w1)
                    .unwrap()
                    .mul(&alg.basis_from_word(false, w2).unwrap())
                    .unwrap();
                let slow = oracle.to_hecke(&alg, &oracle.mul_words(w1, w2));
                assert_eq!(fast, slow, "regime {name}, words {w1:?} * {w2:?}");
            }
        }
    }

    println!("acceptance: engine products match the rewrite oracle in all regimes: PASS");
}

/// Hilbert-algebra structure on the radius-4 ball of every algebra at
/// n = 2: the trace is symmetric, star is an involutive anti-automorphism,
/// and each generator inverts as q^-1 (T - q + 1) (so a parameter-1
/// generator is its own inverse).
#[test]
fn hilbert_structure_on_ball() {
    for name in AlgebraName::all() {
        let spec = build(name, 2).unwrap();
        let alg = spec.algebra();
        let ball = alg.system().enumerate_ball(4, None).unwrap();
        let eps_range: &[bool] = if alg.is_extended() {
            &[false, true]
        } else {
            &[false]
        };
        let mut basis = Vec::new();
        for &eps in eps_range {
            for (_, w) in ball.iter() {
                basis.push(
                    alg.basis(ExtendedElt {
                        eps,
                        elt: w.clone(),
                    })
                    .unwrap(),
                );
            }
        }

        for a in &basis {
            assert_eq!(a.star().star(), *a, "{name}: star must be an involution");
        }

        for label in spec.labels() {
            let t = spec.gen_elt(label).unwrap();
            let e = spec.param_exponent(label).unwrap();
            let qe = LaurentPoly::q().pow(e);
            let inv = (&t - &alg.one().scale(&(&qe - &LaurentPoly::one())))
                .scale(&LaurentPoly::monomial(-(e as i64), BigInt::one()));
            assert_eq!(t.mul(&inv).unwrap(), alg.one(), "{name} label {label}");
            assert_eq!(inv.mul(&t).unwrap(), alg.one(), "{name} label {label}");
            if e == 0 {
                assert_eq!(inv, t, "a parameter-1 generator is an involution");
            }
        }
        if spec.has_sigma() {
            let s = spec.sigma_elt().unwrap();
            assert_eq!(s.mul(&s).unwrap(), alg.one());
            assert_eq!(s.star(), s);
        }

        for a in &basis {
            for b in &basis {
                let ab = a.mul(b).unwrap();
                let ba = b.mul(a).unwrap();
                assert_eq!(ab.trace(), ba.trace(), "{name}: trace symmetry");
                assert_eq!(
                    ab.star(),
                    b.star().mul(&a.star()).unwrap(),
                    "{name}: star anti-automorphism"
                );
            }
        }
    }

    println!("acceptance: trace symmetry, star, and generator inverses on the ball: PASS");
}

/// Ball layer counts agree with exhaustive word enumeration on the rank-2
/// affine system up to length 5, and the rank-1 system grows by exactly two
/// elements per layer.
#[test]
fn growth_matches_word_enumeration() {
    let sys = CoxeterSystem::affine_c(2).unwrap();
    let ball = sys.enumerate_ball(5, None).unwrap();
    let fast: Vec<u64> = ball.layer_sizes().iter().map(|&s| s as u64).collect();
    assert_eq!(fast, word_enumeration_layers(&sys, 5));

    let dih = CoxeterSystem::infinite_dihedral();
    let ball = dih.enumerate_ball(5, None).unwrap();
    let sizes = ball.layer_sizes();
    assert_eq!(sizes[0], 1);
    assert!(sizes[1..].iter().all(|&s| s == 2));
    assert_eq!(
        word_enumeration_layers(&dih, 5),
        vec![1, 2, 2, 2, 2, 2]
    );

    println!("acceptance: ball growth matches exhaustive word enumeration: PASS");
}
