//! Affine Weyl groups of classical type, realised as groups of affine
//! transformations `x -> Ax + b` with `A` a signed permutation matrix and
//! `b` an integer vector.
//!
//! The realisation is exact, so group equality is structural equality. The
//! word problem (descents, length, reduced words) is solved through the
//! action on affine roots: `s_i` is a left descent of `w` exactly when
//! `w^-1(alpha_i)` is a negative affine root.
//!
//! Supported diagrams:
//!
//! * `AffineC(n)`: nodes `0..=n`, bonds 4-3-...-3-4 (infinite dihedral at
//!   `n = 1`), acting on `Z^n` with full translation lattice;
//! * `AffineB(n)`: nodes `0..=n`, the fork `0,1 -> 2` with a terminal double
//!   bond, acting on `Z^n` with the even-sum translation lattice. Node `0`
//!   is the affine reflection `(x1, x2) -> (1 - x2, 1 - x1)`;
//! * `FiniteC(n)`: nodes `1..=n`, the finite hyperoctahedral group;
//! * `InfiniteDihedral`: nodes `0, 1` acting on `Z`.
//!
//! `AffineB(n)` sits inside `AffineC(n)` as the index-2 subgroup of elements
//! with even translation sum; conjugation by the `AffineC` node-0 reflection
//! realises the diagram automorphism swapping nodes 0 and 1, which is what
//! [`ExtendedElt`] uses for its twisted multiplication.

use std::fmt;

use serde::Serialize;

use crate::{Error, Result, DEFAULT_BALL_CAP};

/// A signed permutation of coordinates, stored by images: `img[j] = s*(k+1)`
/// means the basis vector `e_j` maps to `s * e_k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignedPerm {
    img: Vec<i32>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            img: (1..=n as i32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(j, &v)| v == j as i32 + 1)
    }

    /// Transposition of coordinates `j` and `j+1` (0-based).
    pub fn swap(n: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.img.swap(j, j + 1);
        p
    }

    /// Sign flip in coordinate `j` (0-based).
    pub fn flip(n: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.img[j] = -p.img[j];
        p
    }

    /// Function composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        debug_assert_eq!(self.n(), other.n());
        let img = other
            .img
            .iter()
            .map(|&v| {
                let k = v.unsigned_abs() as usize - 1;
                if v < 0 {
                    -self.img[k]
                } else {
                    self.img[k]
                }
            })
            .collect();
        SignedPerm { img }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut img = vec![0; self.n()];
        for (j, &v) in self.img.iter().enumerate() {
            let k = v.unsigned_abs() as usize - 1;
            img[k] = if v < 0 { -(j as i32 + 1) } else { j as i32 + 1 };
        }
        SignedPerm { img }
    }

    pub fn apply_vec(&self, x: &[i64]) -> Vec<i64> {
        let mut y = vec![0; self.n()];
        for (j, &v) in self.img.iter().enumerate() {
            let k = v.unsigned_abs() as usize - 1;
            y[k] = if v < 0 { -x[j] } else { x[j] };
        }
        y
    }

    /// One-line notation: image of coordinate `j+1` as a signed integer.
    pub fn one_line(&self) -> &[i32] {
        &self.img
    }
}

/// An affine transformation `x -> Ax + b` of `Z^n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AffineElt {
    pub(crate) a: SignedPerm,
    pub(crate) b: Vec<i64>,
}

impl AffineElt {
    pub fn identity(n: usize) -> Self {
        AffineElt {
            a: SignedPerm::identity(n),
            b: vec![0; n],
        }
    }

    pub fn new(a: SignedPerm, b: Vec<i64>) -> Self {
        debug_assert_eq!(a.n(), b.len());
        AffineElt { a, b }
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_identity() && self.b.iter().all(|&x| x == 0)
    }

    pub fn linear_part(&self) -> &SignedPerm {
        &self.a
    }

    pub fn translation_part(&self) -> &[i64] {
        &self.b
    }

    /// Function composition: `(self.compose(other))(x) = self(other(x))`.
    pub fn compose(&self, other: &AffineElt) -> AffineElt {
        let mut b = self.a.apply_vec(&other.b);
        for (bi, si) in b.iter_mut().zip(&self.b) {
            *bi += si;
        }
        AffineElt {
            a: self.a.compose(&other.a),
            b,
        }
    }

    pub fn inverse(&self) -> AffineElt {
        let ainv = self.a.inverse();
        let b = ainv.apply_vec(&self.b).iter().map(|x| -x).collect();
        AffineElt { a: ainv, b }
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let mut y = self.a.apply_vec(x);
        for (yi, bi) in y.iter_mut().zip(&self.b) {
            *yi += bi;
        }
        y
    }

    /// Push an affine root through this transformation: the root is a
    /// function `x -> <alpha, x> + m`, and the image is its precomposition
    /// with the inverse map.
    pub fn act_on_root(&self, r: &AffineRoot) -> AffineRoot {
        let alpha = self.a.apply_vec(&r.alpha);
        let dot: i64 = alpha.iter().zip(&self.b).map(|(a, b)| a * b).sum();
        AffineRoot {
            alpha,
            shift: r.shift - dot,
        }
    }
}

impl fmt::Display for AffineElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.a.one_line().iter().map(|v| v.to_string()).collect();
        let shifts: Vec<String> = self.b.iter().map(|v| v.to_string()).collect();
        write!(f, "[{} | {}]", imgs.join(","), shifts.join(","))
    }
}

/// An affine root `alpha + m`, i.e. the affine function `x -> <alpha, x> + m`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AffineRoot {
    pub alpha: Vec<i64>,
    pub shift: i64,
}

impl AffineRoot {
    pub fn new(alpha: Vec<i64>, shift: i64) -> Self {
        AffineRoot { alpha, shift }
    }

    /// Positive means `m > 0`, or `m = 0` and the gradient is a positive
    /// root (first nonzero coordinate positive, which matches the standard
    /// simple systems for both the B and C gradients used here).
    pub fn is_positive(&self) -> bool {
        if self.shift != 0 {
            return self.shift > 0;
        }
        match self.alpha.iter().find(|&&c| c != 0) {
            Some(&c) => c > 0,
            None => false,
        }
    }

    pub fn negated(&self) -> AffineRoot {
        AffineRoot {
            alpha: self.alpha.iter().map(|c| -c).collect(),
            shift: -self.shift,
        }
    }
}

/// The supported Coxeter diagrams.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum SystemKind {
    AffineC(usize),
    AffineB(usize),
    FiniteC(usize),
    InfiniteDihedral,
}

/// A concrete Coxeter system: a diagram together with its affine realisation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct CoxeterSystem {
    kind: SystemKind,
}

impl CoxeterSystem {
    pub fn new(kind: SystemKind) -> Result<Self> {
        let ok = match kind {
            SystemKind::AffineC(n) | SystemKind::FiniteC(n) => n >= 1,
            SystemKind::AffineB(n) => n >= 1,
            SystemKind::InfiniteDihedral => true,
        };
        if ok {
            Ok(CoxeterSystem { kind })
        } else {
            Err(Error::RankTooSmall {
                name: format!("{kind:?}"),
                min: 1,
                n: 0,
            })
        }
    }

    pub fn affine_c(n: usize) -> Result<Self> {
        Self::new(SystemKind::AffineC(n))
    }

    pub fn affine_b(n: usize) -> Result<Self> {
        Self::new(SystemKind::AffineB(n))
    }

    pub fn finite_c(n: usize) -> Result<Self> {
        Self::new(SystemKind::FiniteC(n))
    }

    pub fn infinite_dihedral() -> Self {
        CoxeterSystem {
            kind: SystemKind::InfiniteDihedral,
        }
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    /// Dimension of the ambient coordinate space.
    pub fn dim(&self) -> usize {
        match self.kind {
            SystemKind::AffineC(n) | SystemKind::AffineB(n) | SystemKind::FiniteC(n) => n,
            SystemKind::InfiniteDihedral => 1,
        }
    }

    /// Valid generator indices, in order.
    pub fn gen_indices(&self) -> Vec<usize> {
        match self.kind {
            SystemKind::AffineC(n) | SystemKind::AffineB(n) => (0..=n).collect(),
            SystemKind::FiniteC(n) => (1..=n).collect(),
            SystemKind::InfiniteDihedral => vec![0, 1],
        }
    }

    pub fn contains_index(&self, i: usize) -> bool {
        match self.kind {
            SystemKind::AffineC(n) | SystemKind::AffineB(n) => i <= n,
            SystemKind::FiniteC(n) => (1..=n).contains(&i),
            SystemKind::InfiniteDihedral => i <= 1,
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if self.contains_index(i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.gen_indices().len(),
            })
        }
    }

    fn check_element(&self, w: &AffineElt) -> Result<()> {
        if w.n() == self.dim() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.dim(),
                got: w.n(),
            })
        }
    }

    /// Coxeter matrix entry; `None` encodes an infinite bond.
    pub fn bond(&self, i: usize, j: usize) -> Option<u32> {
        assert!(self.contains_index(i) && self.contains_index(j));
        if i == j {
            return Some(1);
        }
        let (lo, hi) = (i.min(j), i.max(j));
        match self.kind {
            SystemKind::AffineC(1) | SystemKind::InfiniteDihedral => None,
            SystemKind::AffineC(n) => Some(match (lo, hi) {
                (a, b) if b != a + 1 => 2,
                (0, 1) => 4,
                (a, _) if a == n - 1 => 4,
                _ => 3,
            }),
            SystemKind::AffineB(1) => None,
            SystemKind::AffineB(2) => Some(match (lo, hi) {
                (0, 1) => 2,
                _ => 4,
            }),
            SystemKind::AffineB(n) => Some(match (lo, hi) {
                (0, 1) => 2,
                (0, 2) | (1, 2) => 3,
                (a, b) if b != a + 1 => 2,
                (a, _) if a == n - 1 => 4,
                _ => 3,
            }),
            SystemKind::FiniteC(n) => Some(match (lo, hi) {
                (a, b) if b != a + 1 => 2,
                (a, _) if a == n - 1 => 4,
                _ => 3,
            }),
        }
    }

    pub fn identity(&self) -> AffineElt {
        AffineElt::identity(self.dim())
    }

    /// The generating reflection `s_i` as an affine transformation.
    pub fn generator(&self, i: usize) -> Result<AffineElt> {
        self.check_index(i)?;
        let n = self.dim();
        let elt = match self.kind {
            SystemKind::AffineC(_) | SystemKind::InfiniteDihedral => match i {
                0 => {
                    // x1 -> 1 - x1
                    let mut b = vec![0; n];
                    b[0] = 1;
                    AffineElt::new(SignedPerm::flip(n, 0), b)
                }
                i if i == n => AffineElt::new(SignedPerm::flip(n, n - 1), vec![0; n]),
                i => AffineElt::new(SignedPerm::swap(n, i - 1), vec![0; n]),
            },
            SystemKind::AffineB(1) => match i {
                0 => AffineElt::new(SignedPerm::flip(1, 0), vec![2]),
                _ => AffineElt::new(SignedPerm::flip(1, 0), vec![0]),
            },
            SystemKind::AffineB(_) => match i {
                0 => {
                    // (x1, x2) -> (1 - x2, 1 - x1)
                    let a = SignedPerm::flip(n, 0)
                        .compose(&SignedPerm::flip(n, 1))
                        .compose(&SignedPerm::swap(n, 0));
                    let mut b = vec![0; n];
                    b[0] = 1;
                    b[1] = 1;
                    AffineElt::new(a, b)
                }
                i if i == n => AffineElt::new(SignedPerm::flip(n, n - 1), vec![0; n]),
                i => AffineElt::new(SignedPerm::swap(n, i - 1), vec![0; n]),
            },
            SystemKind::FiniteC(_) => match i {
                i if i == n => AffineElt::new(SignedPerm::flip(n, n - 1), vec![0; n]),
                i => AffineElt::new(SignedPerm::swap(n, i - 1), vec![0; n]),
            },
        };
        Ok(elt)
    }

    /// The simple affine root whose reflection is `generator(i)`.
    pub fn simple_root(&self, i: usize) -> Result<AffineRoot> {
        self.check_index(i)?;
        let n = self.dim();
        let mut alpha = vec![0; n];
        let root = match self.kind {
            SystemKind::AffineC(_) | SystemKind::InfiniteDihedral => match i {
                0 => {
                    alpha[0] = -2;
                    AffineRoot::new(alpha, 1)
                }
                i if i == n => {
                    alpha[n - 1] = 2;
                    AffineRoot::new(alpha, 0)
                }
                i => {
                    alpha[i - 1] = 1;
                    alpha[i] = -1;
                    AffineRoot::new(alpha, 0)
                }
            },
            SystemKind::AffineB(1) => match i {
                0 => {
                    alpha[0] = -1;
                    AffineRoot::new(alpha, 1)
                }
                _ => {
                    alpha[0] = 1;
                    AffineRoot::new(alpha, 0)
                }
            },
            SystemKind::AffineB(_) => match i {
                0 => {
                    alpha[0] = -1;
                    alpha[1] = -1;
                    AffineRoot::new(alpha, 1)
                }
                i if i == n => {
                    alpha[n - 1] = 1;
                    AffineRoot::new(alpha, 0)
                }
                i => {
                    alpha[i - 1] = 1;
                    alpha[i] = -1;
                    AffineRoot::new(alpha, 0)
                }
            },
            SystemKind::FiniteC(_) => match i {
                i if i == n => {
                    alpha[n - 1] = 2;
                    AffineRoot::new(alpha, 0)
                }
                i => {
                    alpha[i - 1] = 1;
                    alpha[i] = -1;
                    AffineRoot::new(alpha, 0)
                }
            },
        };
        Ok(root)
    }

    /// `l(s_i w) < l(w)`, decided by whether `w^-1(alpha_i)` is negative.
    pub fn is_left_descent(&self, w: &AffineElt, i: usize) -> Result<bool> {
        self.check_element(w)?;
        let r = self.simple_root(i)?;
        Ok(!w.inverse().act_on_root(&r).is_positive())
    }

    /// `l(w s_i) < l(w)`, decided by whether `w(alpha_i)` is negative.
    pub fn is_right_descent(&self, w: &AffineElt, i: usize) -> Result<bool> {
        self.check_element(w)?;
        let r = self.simple_root(i)?;
        Ok(!w.act_on_root(&r).is_positive())
    }

    pub fn length(&self, w: &AffineElt) -> Result<u64> {
        Ok(self.reduced_word(w)? .len() as u64)
    }

    /// The reduced word produced by greedily stripping the smallest left
    /// descent; this is the canonical word used throughout.
    pub fn reduced_word(&self, w: &AffineElt) -> Result<Vec<usize>> {
        self.reduced_word_by(w, false)
    }

    /// Same, but stripping the largest descent; used to obtain a second,
    /// usually different, reduced word for well-definedness checks.
    pub fn reduced_word_max(&self, w: &AffineElt) -> Result<Vec<usize>> {
        self.reduced_word_by(w, true)
    }

    fn reduced_word_by(&self, w: &AffineElt, largest: bool) -> Result<Vec<usize>> {
        if !self.contains(w) {
            return Err(Error::ForeignElement);
        }
        let mut cur = w.clone();
        let mut word = Vec::new();
        while !cur.is_identity() {
            let inv = cur.inverse();
            let mut found = None;
            for i in self.gen_indices() {
                let r = self.simple_root(i)?;
                if !inv.act_on_root(&r).is_positive() {
                    found = Some(i);
                    if !largest {
                        break;
                    }
                }
            }
            let i = found.ok_or(Error::ForeignElement)?;
            cur = self.generator(i)?.compose(&cur);
            word.push(i);
        }
        Ok(word)
    }

    /// Whether an affine transformation actually lies in this group: the
    /// `AffineB` groups only contain even-sum translations, the finite ones
    /// no translations at all.
    pub fn contains(&self, w: &AffineElt) -> bool {
        w.n() == self.dim()
            && match self.kind {
                SystemKind::AffineB(_) => w.b.iter().sum::<i64>() % 2 == 0,
                SystemKind::FiniteC(_) => w.b.iter().all(|&x| x == 0),
                _ => true,
            }
    }

    /// Compose a word of generator indices, left to right.
    pub fn from_word(&self, word: &[usize]) -> Result<AffineElt> {
        let mut w = self.identity();
        for &i in word {
            w = w.compose(&self.generator(i)?);
        }
        Ok(w)
    }

    /// All elements of length at most `radius`, grouped by length.
    /// `cap` guards against runaway enumeration; `None` uses
    /// [`crate::DEFAULT_BALL_CAP`].
    pub fn enumerate_ball(&self, radius: usize, cap: Option<usize>) -> Result<Ball> {
        let cap = cap.unwrap_or(DEFAULT_BALL_CAP);
        if radius > cap {
            return Err(Error::CapExceeded {
                requested: radius,
                cap,
            });
        }
        let gens: Vec<AffineElt> = self
            .gen_indices()
            .into_iter()
            .map(|i| self.generator(i))
            .collect::<Result<_>>()?;
        let mut layers: Vec<Vec<AffineElt>> = vec![vec![self.identity()]];
        for k in 1..=radius {
            let prev = &layers[k - 1];
            let mut next = std::collections::BTreeSet::new();
            for w in prev {
                for s in &gens {
                    next.insert(s.compose(w));
                }
            }
            // A product s*w with w of length k-1 has length k or k-2; drop
            // the latter.
            if k >= 2 {
                for w in &layers[k - 2] {
                    next.remove(w);
                }
            }
            layers.push(next.into_iter().collect());
        }
        Ok(Ball {
            system: *self,
            layers,
        })
    }

    /// The automorphism of `AffineB(n)` induced by swapping diagram nodes 0
    /// and 1, computed by remapping a reduced word letter by letter.
    pub fn diagram_automorphism(&self, w: &AffineElt) -> Result<AffineElt> {
        match self.kind {
            SystemKind::AffineB(_) => {}
            _ => {
                return Err(Error::InvalidArgument(
                    "diagram automorphism is only defined for AffineB systems".into(),
                ))
            }
        }
        let word: Vec<usize> = self
            .reduced_word(w)?
            .into_iter()
            .map(|i| match i {
                0 => 1,
                1 => 0,
                i => i,
            })
            .collect();
        self.from_word(&word)
    }
}

/// Conjugation by the affine reflection `x1 -> 1 - x1`. On `AffineB(n)`
/// elements this realises the node-swap diagram automorphism: the reflection
/// is a length-zero element of the extended group.
pub fn sigma_conj(w: &AffineElt) -> AffineElt {
    let n = w.n();
    let mut b = vec![0; n];
    b[0] = 1;
    let g = AffineElt::new(SignedPerm::flip(n, 0), b);
    g.compose(w).compose(&g)
}

/// An element `sigma^eps * w` of the extension of an `AffineB` group by its
/// diagram automorphism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExtendedElt {
    pub eps: bool,
    pub elt: AffineElt,
}

impl ExtendedElt {
    pub fn identity(n: usize) -> Self {
        ExtendedElt {
            eps: false,
            elt: AffineElt::identity(n),
        }
    }

    pub fn plain(elt: AffineElt) -> Self {
        ExtendedElt { eps: false, elt }
    }

    pub fn sigma(n: usize) -> Self {
        ExtendedElt {
            eps: true,
            elt: AffineElt::identity(n),
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.eps && self.elt.is_identity()
    }

    pub fn n(&self) -> usize {
        self.elt.n()
    }

    /// `(sigma^a u)(sigma^b v) = sigma^(a+b) sigma^b(u) v`.
    pub fn mul(&self, other: &ExtendedElt) -> ExtendedElt {
        let twisted = if other.eps {
            sigma_conj(&self.elt)
        } else {
            self.elt.clone()
        };
        ExtendedElt {
            eps: self.eps ^ other.eps,
            elt: twisted.compose(&other.elt),
        }
    }

    pub fn inverse(&self) -> ExtendedElt {
        let inv = self.elt.inverse();
        ExtendedElt {
            eps: self.eps,
            elt: if self.eps { sigma_conj(&inv) } else { inv },
        }
    }
}

impl fmt::Display for ExtendedElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.eps {
            write!(f, "sigma*{}", self.elt)
        } else {
            write!(f, "{}", self.elt)
        }
    }
}

/// A ball in the word metric, grouped into spheres by length.
#[derive(Clone, Debug)]
pub struct Ball {
    system: CoxeterSystem,
    layers: Vec<Vec<AffineElt>>,
}

impl Ball {
    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn radius(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer(&self, k: usize) -> &[AffineElt] {
        &self.layers[k]
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.len()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &AffineElt)> + '_ {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(k, l)| l.iter().map(move |w| (k, w)))
    }

    pub fn len(&self) -> usize {
        self.layers.iter().map(|l| l.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
