//! The four named algebras, their generator-level isomorphisms, and the
//! weighted embedding of the length-3 generator.
//!
//! Two pairs of Hecke algebras are built here:
//!
//! * `Hplus(n)` — the sigma-extended equal-parameter algebra on the
//!   `AffineB(n)` diagram — and `HpsiPlus(n)` — the `AffineC(n)` algebra with
//!   parameters `(1, q, ..., q)`. They are isomorphic via `T_0 -> sigma`,
//!   `T_i -> U_i`.
//! * `Hminus(n)` and `HpsiMinus(n)` — both presented on the `AffineC(n-1)`
//!   diagram with generator labels `1..=n` and parameters `(q^2, q, ..., q)`,
//!   isomorphic via `T_i -> U_i`. The psi-side additionally embeds into the
//!   rank-`n` group by `s'_1 -> s_1 s_0 s_1`, `s'_i -> s_i`, which converts
//!   the label-1 weight 3 into plain length.
//!
//! Everything is verified computationally: `build` re-derives the quadratic,
//! braid, and sigma relations, and `verify_iso` checks relation preservation,
//! ball injectivity, and trace/star compatibility of a generator map.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coxeter::{AffineElt, CoxeterSystem, ExtendedElt};
use crate::hecke::{Gen, HeckeAlgebra, HeckeElt, HeckeParams};
use crate::laurent::LaurentPoly;
use crate::{Error, Result};

/// The four named algebras.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum AlgebraName {
    Hplus,
    HpsiPlus,
    Hminus,
    HpsiMinus,
}

impl AlgebraName {
    pub fn all() -> [AlgebraName; 4] {
        [
            AlgebraName::Hplus,
            AlgebraName::HpsiPlus,
            AlgebraName::Hminus,
            AlgebraName::HpsiMinus,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            AlgebraName::Hplus => "Hplus",
            AlgebraName::HpsiPlus => "HpsiPlus",
            AlgebraName::Hminus => "Hminus",
            AlgebraName::HpsiMinus => "HpsiMinus",
        }
    }

    /// The algebra this one is isomorphic to.
    pub fn partner(&self) -> AlgebraName {
        match self {
            AlgebraName::Hplus => AlgebraName::HpsiPlus,
            AlgebraName::HpsiPlus => AlgebraName::Hplus,
            AlgebraName::Hminus => AlgebraName::HpsiMinus,
            AlgebraName::HpsiMinus => AlgebraName::Hminus,
        }
    }

    pub fn min_rank(&self) -> usize {
        match self {
            AlgebraName::Hplus | AlgebraName::HpsiPlus => 1,
            AlgebraName::Hminus | AlgebraName::HpsiMinus => 2,
        }
    }

    /// Letter used for generators in rendered output.
    fn gen_letter(&self) -> &'static str {
        match self {
            AlgebraName::Hplus | AlgebraName::Hminus => "U",
            AlgebraName::HpsiPlus | AlgebraName::HpsiMinus => "T",
        }
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hplus" | "h+" => Ok(AlgebraName::Hplus),
            "hpsiplus" | "hpsi+" => Ok(AlgebraName::HpsiPlus),
            "hminus" | "h-" => Ok(AlgebraName::Hminus),
            "hpsiminus" | "hpsi-" => Ok(AlgebraName::HpsiMinus),
            other => Err(Error::InvalidArgument(format!(
                "unknown algebra '{other}' (expected Hplus, HpsiPlus, Hminus, or HpsiMinus)"
            ))),
        }
    }
}

/// A named algebra at a given rank, with its generator labelling.
///
/// Plus-family generators are labelled `0..=n` (matching the Coxeter
/// indices); minus-family generators are labelled `1..=n` on the
/// `AffineC(n-1)` diagram, so label `i` is Coxeter index `i-1`.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraSpec {
    name: AlgebraName,
    n: usize,
    algebra: HeckeAlgebra,
}

impl AlgebraSpec {
    pub fn name(&self) -> AlgebraName {
        self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.algebra
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.algebra.system()
    }

    fn label_offset(&self) -> usize {
        match self.name {
            AlgebraName::Hplus | AlgebraName::HpsiPlus => 0,
            AlgebraName::Hminus | AlgebraName::HpsiMinus => 1,
        }
    }

    /// Generator labels in the presentation (not Coxeter indices).
    pub fn labels(&self) -> Vec<usize> {
        let off = self.label_offset();
        self.system().gen_indices().iter().map(|i| i + off).collect()
    }

    pub fn cox_index(&self, label: usize) -> Result<usize> {
        let off = self.label_offset();
        let idx = label
            .checked_sub(off)
            .filter(|&i| self.system().contains_index(i));
        idx.ok_or(Error::IndexOutOfRange {
            index: label,
            rank: self.labels().len(),
        })
    }

    pub fn has_sigma(&self) -> bool {
        self.algebra.is_extended()
    }

    /// The generator with the given presentation label.
    pub fn gen_elt(&self, label: usize) -> Result<HeckeElt> {
        self.algebra.generator(Gen::S(self.cox_index(label)?))
    }

    pub fn sigma_elt(&self) -> Result<HeckeElt> {
        self.algebra.generator(Gen::Sigma)
    }

    pub fn param_exponent(&self, label: usize) -> Result<u32> {
        Ok(self.algebra.params().exponent(self.cox_index(label)?))
    }

    pub fn label_name(&self, label: usize) -> String {
        format!("{}{}", self.name.gen_letter(), label)
    }
}

/// Construct one of the four algebras and verify its presentation.
pub fn build(name: AlgebraName, n: usize) -> Result<AlgebraSpec> {
    if n < name.min_rank() {
        return Err(Error::RankTooSmall {
            name: name.to_string(),
            min: name.min_rank(),
            n,
        });
    }
    let algebra = match name {
        AlgebraName::Hplus => {
            let sys = CoxeterSystem::affine_b(n)?;
            HeckeAlgebra::new(sys, HeckeParams::uniform(&sys, 1), true)?
        }
        AlgebraName::HpsiPlus => {
            let sys = CoxeterSystem::affine_c(n)?;
            let mut exps: Vec<(usize, u32)> = sys.gen_indices().iter().map(|&i| (i, 1)).collect();
            exps[0] = (0, 0);
            HeckeAlgebra::new(sys, HeckeParams::from_exponents(&sys, &exps)?, false)?
        }
        AlgebraName::Hminus | AlgebraName::HpsiMinus => {
            let sys = CoxeterSystem::affine_c(n - 1)?;
            let mut exps: Vec<(usize, u32)> = sys.gen_indices().iter().map(|&i| (i, 1)).collect();
            exps[0] = (0, 2);
            HeckeAlgebra::new(sys, HeckeParams::from_exponents(&sys, &exps)?, false)?
        }
    };
    let spec = AlgebraSpec { name, n, algebra };
    let report = verify_presentation(&spec)?;
    match report.first_failure() {
        None => Ok(spec),
        Some(c) => Err(Error::RelationFailure(format!(
            "{} (n={}) check {} {:?}: {}",
            name,
            n,
            c.kind,
            c.indices,
            c.witness.as_deref().unwrap_or("failed")
        ))),
    }
}

/// One verified relation or swept property.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub kind: String,
    pub indices: Vec<usize>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRecord {
    fn pass(kind: &str, indices: Vec<usize>) -> Self {
        CheckRecord {
            kind: kind.to_string(),
            indices,
            pass: true,
            witness: None,
        }
    }

    fn fail(kind: &str, indices: Vec<usize>, witness: String) -> Self {
        CheckRecord {
            kind: kind.to_string(),
            indices,
            pass: false,
            witness: Some(witness),
        }
    }

    fn from_residual(kind: &str, indices: Vec<usize>, residual: &HeckeElt) -> Self {
        if residual.is_zero() {
            Self::pass(kind, indices)
        } else {
            Self::fail(kind, indices, format!("residual {residual}"))
        }
    }
}

/// Outcome of a presentation or isomorphism verification.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub algebra: String,
    pub n: usize,
    pub checks: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// Re-derive every defining relation of the algebra from scratch.
pub fn verify_presentation(spec: &AlgebraSpec) -> Result<VerifyReport> {
    let alg = spec.algebra();
    let mut checks = Vec::new();
    for label in spec.labels() {
        let i = spec.cox_index(label)?;
        let residual = alg.quadratic_residual(Gen::S(i))?;
        checks.push(CheckRecord::from_residual(
            "quadratic",
            vec![label],
            &residual,
        ));
    }
    let labels = spec.labels();
    for (a, &li) in labels.iter().enumerate() {
        for &lj in &labels[a + 1..] {
            let (i, j) = (spec.cox_index(li)?, spec.cox_index(lj)?);
            if let Some((lhs, rhs)) = alg.braid_sides(i, j)? {
                checks.push(CheckRecord::from_residual(
                    "braid",
                    vec![li, lj],
                    &(&lhs - &rhs),
                ));
            }
        }
    }
    if spec.has_sigma() {
        for (name, residual) in alg.sigma_residuals()? {
            let rec = CheckRecord::from_residual("sigma", vec![], &residual);
            checks.push(CheckRecord {
                witness: rec.witness.map(|w| format!("{name}: {w}")),
                ..rec
            });
        }
    }
    Ok(VerifyReport {
        algebra: spec.name().to_string(),
        n: spec.n(),
        checks,
    })
}

/// A generator-to-basis-element map between two algebras.
#[derive(Clone, Debug)]
pub struct IsoMap {
    source: AlgebraSpec,
    target: AlgebraSpec,
    images: BTreeMap<usize, HeckeElt>,
}

impl IsoMap {
    /// `images` assigns a target element to every source generator label.
    /// Each image must be a single basis element of the target algebra.
    pub fn new(
        source: AlgebraSpec,
        target: AlgebraSpec,
        images: Vec<(usize, HeckeElt)>,
    ) -> Result<Self> {
        let images: BTreeMap<usize, HeckeElt> = images.into_iter().collect();
        let expected: Vec<usize> = source.labels();
        let got: Vec<usize> = images.keys().copied().collect();
        if expected != got {
            return Err(Error::InvalidArgument(format!(
                "images must cover source labels {expected:?}, got {got:?}"
            )));
        }
        for (label, img) in &images {
            if img.algebra() != target.algebra() {
                return Err(Error::AlgebraMismatch);
            }
            if img.as_basis_elt().is_none() {
                return Err(Error::InvalidArgument(format!(
                    "image of label {label} is not a single basis element"
                )));
            }
        }
        Ok(IsoMap {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> &AlgebraSpec {
        &self.source
    }

    pub fn target(&self) -> &AlgebraSpec {
        &self.target
    }

    pub fn image(&self, label: usize) -> Result<&HeckeElt> {
        self.images.get(&label).ok_or(Error::IndexOutOfRange {
            index: label,
            rank: self.images.len(),
        })
    }

    fn map_along_word(&self, word: &[usize]) -> Result<HeckeElt> {
        let off = self.source.label_offset();
        let mut acc = self.target.algebra().one();
        for &i in word {
            acc = acc.mul(self.image(i + off)?)?;
        }
        Ok(acc)
    }

    /// Image of the basis element `T_w` computed along a reduced word of `w`.
    pub fn map_basis(&self, w: &AffineElt) -> Result<HeckeElt> {
        self.map_along_word(&self.source.system().reduced_word(w)?)
    }

    /// Linear extension of the basis map to a whole element.
    pub fn map_elt(&self, h: &HeckeElt) -> Result<HeckeElt> {
        if h.algebra() != self.source.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        let mut acc = self.target.algebra().zero();
        for (w, c) in h.terms() {
            if w.eps {
                return Err(Error::ForeignElement);
            }
            acc = &acc + &self.map_basis(&w.elt)?.scale(c);
        }
        Ok(acc)
    }
}

/// The map `T_0 -> sigma`, `T_i -> U_i` from `HpsiPlus(n)` to `Hplus(n)`.
pub fn iso_plus(n: usize) -> Result<IsoMap> {
    let source = build(AlgebraName::HpsiPlus, n)?;
    let target = build(AlgebraName::Hplus, n)?;
    let mut images = vec![(0, target.sigma_elt()?)];
    for i in 1..=n {
        images.push((i, target.gen_elt(i)?));
    }
    IsoMap::new(source, target, images)
}

/// The map `T_i -> U_i` from `HpsiMinus(n)` to `Hminus(n)`.
pub fn iso_minus(n: usize) -> Result<IsoMap> {
    let source = build(AlgebraName::HpsiMinus, n)?;
    let target = build(AlgebraName::Hminus, n)?;
    let images = (1..=n)
        .map(|i| Ok((i, target.gen_elt(i)?)))
        .collect::<Result<Vec<_>>>()?;
    IsoMap::new(source, target, images)
}

/// Check that a generator map extends to an isomorphism, at ball scale:
/// the images satisfy the source relations, the induced basis map is
/// well defined (two reduced words per element), single-valued, and
/// injective on the ball of radius `max_length`, and trace and star are
/// preserved.
pub fn verify_iso(map: &IsoMap, max_length: usize, cap: Option<usize>) -> Result<VerifyReport> {
    let src = map.source();
    let mut checks = Vec::new();

    // (a) Images satisfy the source quadratic relations, with the source
    // parameters.
    for label in src.labels() {
        let img = map.image(label)?;
        let one = map.target().algebra().one();
        let q = LaurentPoly::monomial(src.param_exponent(label)? as i64, 1.into());
        let residual = (img + &one).mul(&(img - &one.scale(&q)))?;
        checks.push(CheckRecord::from_residual(
            "image-quadratic",
            vec![label],
            &residual,
        ));
    }

    // ... and the source braid relations.
    let labels = src.labels();
    for (a, &li) in labels.iter().enumerate() {
        for &lj in &labels[a + 1..] {
            let m = match src.system().bond(src.cox_index(li)?, src.cox_index(lj)?) {
                None => continue,
                Some(m) => m,
            };
            let alt = |x: usize, y: usize| -> Result<HeckeElt> {
                let mut acc = map.target().algebra().one();
                for k in 0..m {
                    acc = acc.mul(map.image(if k % 2 == 0 { x } else { y })?)?;
                }
                Ok(acc)
            };
            checks.push(CheckRecord::from_residual(
                "image-braid",
                vec![li, lj],
                &(&alt(li, lj)? - &alt(lj, li)?),
            ));
        }
    }

    // (b) Induced basis map over the ball: single basis element with
    // coefficient one, well defined across two reduced words, injective.
    let ball = src.system().enumerate_ball(max_length, cap)?;
    let mut images: BTreeMap<AffineElt, HeckeElt> = BTreeMap::new();
    let mut single = CheckRecord::pass("basis-map-single", vec![]);
    let mut two_words = CheckRecord::pass("basis-map-two-words", vec![]);
    for (_, w) in ball.iter() {
        let img = map.map_basis(w)?;
        if single.pass && img.as_basis_elt().is_none() {
            single = CheckRecord::fail(
                "basis-map-single",
                vec![],
                format!("image of {w} is not a single basis element: {img}"),
            );
        }
        let word_max = src.system().reduced_word_max(w)?;
        if word_max != src.system().reduced_word(w)? {
            let img_max = map.map_along_word(&word_max)?;
            if two_words.pass && img_max != img {
                two_words = CheckRecord::fail(
                    "basis-map-two-words",
                    vec![],
                    format!("two reduced words of {w} give {img} vs {img_max}"),
                );
            }
        }
        images.insert(w.clone(), img);
    }
    checks.push(single);
    checks.push(two_words);

    let mut seen: BTreeSet<ExtendedElt> = BTreeSet::new();
    let mut injective = CheckRecord::pass("basis-map-injective", vec![]);
    for (w, img) in &images {
        if let Some(b) = img.as_basis_elt() {
            if !seen.insert(b.clone()) && injective.pass {
                injective = CheckRecord::fail(
                    "basis-map-injective",
                    vec![],
                    format!("image of {w} collides with an earlier one"),
                );
            }
        }
    }
    checks.push(injective);

    // (c) Trace and star preservation on the ball.
    let mut trace = CheckRecord::pass("trace-preserved", vec![]);
    let mut star = CheckRecord::pass("star-preserved", vec![]);
    for (w, img) in &images {
        let src_trace = if w.is_identity() {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        };
        if trace.pass && img.trace() != src_trace {
            trace = CheckRecord::fail(
                "trace-preserved",
                vec![],
                format!("trace of image of {w} is {}", img.trace()),
            );
        }
        // The ball is closed under inversion, so the image of the inverse
        // is already in the table.
        let img_inv = &images[&w.inverse()];
        if star.pass && *img_inv != img.star() {
            star = CheckRecord::fail(
                "star-preserved",
                vec![],
                format!("star of image of {w}: {} vs {img_inv}", img.star()),
            );
        }
    }
    checks.push(trace);
    checks.push(star);

    Ok(VerifyReport {
        algebra: format!("{} -> {}", src.name(), map.target().name()),
        n: src.n(),
        checks,
    })
}

/// The group embedding of the `AffineC(n-1)` system (generators labelled
/// `1..=n`) into the `AffineC(n)` system: label 1 maps to the length-3
/// element `s_1 s_0 s_1`, label `i` to `s_i`. The weighted length `l'`
/// (3 on label 1, 1 elsewhere) of a domestic element equals the plain
/// length of its image.
#[derive(Clone, Debug)]
pub struct WeightedEmbedding {
    n: usize,
    domestic: CoxeterSystem,
    ambient: CoxeterSystem,
}

impl WeightedEmbedding {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall {
                name: "WeightedEmbedding".to_string(),
                min: 2,
                n,
            });
        }
        Ok(WeightedEmbedding {
            n,
            domestic: CoxeterSystem::affine_c(n - 1)?,
            ambient: CoxeterSystem::affine_c(n)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domestic(&self) -> &CoxeterSystem {
        &self.domestic
    }

    pub fn ambient(&self) -> &CoxeterSystem {
        &self.ambient
    }

    pub fn labels(&self) -> Vec<usize> {
        (1..=self.n).collect()
    }

    fn check_label(&self, label: usize) -> Result<()> {
        if (1..=self.n).contains(&label) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: label,
                rank: self.n,
            })
        }
    }

    pub fn weight_of_label(&self, label: usize) -> Result<u64> {
        self.check_label(label)?;
        Ok(if label == 1 { 3 } else { 1 })
    }

    /// Ambient image of the generator with this label.
    pub fn gen_image(&self, label: usize) -> Result<AffineElt> {
        self.check_label(label)?;
        if label == 1 {
            self.ambient.from_word(&[1, 0, 1])
        } else {
            self.ambient.generator(label)
        }
    }

    /// Ambient image of a word in the labelled generators.
    pub fn map_word(&self, labels: &[usize]) -> Result<AffineElt> {
        let mut acc = self.ambient.identity();
        for &l in labels {
            acc = acc.compose(&self.gen_image(l)?);
        }
        Ok(acc)
    }

    fn domestic_labels(&self, w: &AffineElt) -> Result<Vec<usize>> {
        Ok(self
            .domestic
            .reduced_word(w)?
            .into_iter()
            .map(|i| i + 1)
            .collect())
    }

    /// Ambient image of a domestic group element.
    pub fn map_elt(&self, w: &AffineElt) -> Result<AffineElt> {
        self.map_word(&self.domestic_labels(w)?)
    }

    /// Weighted length of a domestic element: the weight sum over a reduced
    /// expression. Agrees with `ambient_length` (checked in tests).
    pub fn weighted_length(&self, w: &AffineElt) -> Result<u64> {
        self.domestic_labels(w)?
            .into_iter()
            .map(|l| self.weight_of_label(l))
            .sum()
    }

    /// Plain length of the ambient image.
    pub fn ambient_length(&self, w: &AffineElt) -> Result<u64> {
        self.ambient.length(&self.map_elt(w)?)
    }

    /// Whether an ambient element lies in the image subgroup, i.e. fixes the
    /// first coordinate function.
    pub fn is_in_image(&self, v: &AffineElt) -> Result<bool> {
        if v.n() != self.ambient.dim() {
            return Err(Error::RankMismatch {
                expected: self.ambient.dim(),
                got: v.n(),
            });
        }
        Ok(v.linear_part().one_line()[0] == 1 && v.translation_part()[0] == 0)
    }
}
