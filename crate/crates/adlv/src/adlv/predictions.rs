//! Closed-form dimension rules behind a common interface. Each rule checks
//! its own hypotheses on (x, b) and reports either an exact dimension, a
//! lower bound, or inapplicability — never a guess. The registry lets
//! callers pick a rule by name or run them all against the enumeration
//! oracle.

use super::{
    conjugation_bound, forward_shift_bound, reuman_predict, shrunken_translation_predict,
    HypothesisCheck, TranslationClass,
};
use crate::affine::{affine_mul, chamber_and_shrunken, AffineElement};
use crate::root_system::RootSystem;
use crate::search::Caps;
use crate::{Error, Result};

/// What a single rule concluded about X_x(b).
#[derive(Debug, Clone, serde::Serialize)]
pub struct PredictionOutcome {
    pub rule: &'static str,
    /// False when the rule's hypotheses do not cover (x, b); the remaining
    /// fields then make no claim.
    pub applicable: bool,
    pub nonempty: Option<bool>,
    /// Exact dimension, when the rule determines it.
    pub dim: Option<i64>,
    /// A proven lower bound, for rules that only bound from below.
    pub dim_lower_bound: Option<i64>,
    pub checks: Vec<HypothesisCheck>,
    pub notes: Vec<String>,
}

impl PredictionOutcome {
    fn inapplicable(rule: &'static str) -> PredictionOutcome {
        PredictionOutcome {
            rule,
            applicable: false,
            nonempty: None,
            dim: None,
            dim_lower_bound: None,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }
}

/// A named closed-form rule for the dimension of X_x(b).
pub trait Prediction: Send + Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    fn predict(
        &self,
        rs: &RootSystem,
        x: &AffineElement,
        b: &TranslationClass,
        caps: Caps,
    ) -> Result<PredictionOutcome>;
}

/// Nonemptiness and dimension for b = 1 and x deep in its Weyl chamber:
/// nonempty iff the chamber-twisted direction u⁻¹wu has full support, and
/// then dim = ½(ℓ(x) + ℓ(u⁻¹wu)).
struct ReumanRule;

impl Prediction for ReumanRule {
    fn name(&self) -> &'static str {
        "reuman"
    }

    fn describe(&self) -> &'static str {
        "basic locus criterion for b = 1 on shrunken alcoves"
    }

    fn predict(
        &self,
        rs: &RootSystem,
        x: &AffineElement,
        b: &TranslationClass,
        _caps: Caps,
    ) -> Result<PredictionOutcome> {
        let mut out = PredictionOutcome::inapplicable(self.name());
        if !b.is_identity() {
            out.notes.push("only covers b = 1".into());
            return Ok(out);
        }
        match reuman_predict(rs, x) {
            Ok(dim) => {
                out.applicable = true;
                out.nonempty = Some(dim.is_some());
                out.dim = dim;
                Ok(out)
            }
            Err(Error::NotShrunken) => {
                out.notes.push("x is not shrunken".into());
                Ok(out)
            }
            Err(e) => Err(e),
        }
    }
}

/// Exact dimension for pure-translation b with x based deep in the dominant
/// chamber, via the shift dim X_x(t^μ) = dim X_x(1) − ⟨ρ, μ⟩ under the
/// convexity hypotheses.
struct ShrunkenTranslationRule;

impl Prediction for ShrunkenTranslationRule {
    fn name(&self) -> &'static str {
        "shrunken-translation"
    }

    fn describe(&self) -> &'static str {
        "dimension shift by the rho-pairing for dominant basepoints deep in the chamber"
    }

    fn predict(
        &self,
        rs: &RootSystem,
        x: &AffineElement,
        b: &TranslationClass,
        _caps: Caps,
    ) -> Result<PredictionOutcome> {
        let shrunken = shrunken_translation_predict(rs, x, b);
        let mut out = PredictionOutcome::inapplicable(self.name());
        out.checks = shrunken.checks;
        if !out.checks.iter().all(|c| c.passed) {
            return Ok(out);
        }
        out.applicable = true;
        match shrunken.dim {
            Some(d) => {
                out.nonempty = Some(true);
                out.dim = Some(d);
            }
            None => {
                out.notes
                    .push("the b = 1 variety at the basepoint is empty; no claim made".into());
            }
        }
        if let Some(note) = shrunken.note {
            out.notes.push(note.into());
        }
        Ok(out)
    }
}

/// Nonemptiness with a dimension lower bound for X_{t^μy}(t^μ) whenever
/// X_y(1) is nonempty and t^μ·c_f lies between the base alcove and
/// t^μy·c_f. Reads x as t^μ·y.
struct ForwardShiftRule;

impl Prediction for ForwardShiftRule {
    fn name(&self) -> &'static str {
        "forward-shift"
    }

    fn describe(&self) -> &'static str {
        "translate a nonempty b = 1 variety forward by t^mu, losing at most the correction"
    }

    fn predict(
        &self,
        rs: &RootSystem,
        x: &AffineElement,
        b: &TranslationClass,
        caps: Caps,
    ) -> Result<PredictionOutcome> {
        let mut out = PredictionOutcome::inapplicable(self.name());
        let b_elt = crate::affine::pure_translation(rs, &b.mu)?;
        let base = affine_mul(rs, &crate::affine::affine_inv(rs, &b_elt), x);
        match forward_shift_bound(rs, &base, b, caps) {
            Ok(Some(fs)) => {
                debug_assert_eq!(fs.shifted.key(), x.key());
                out.applicable = true;
                out.nonempty = Some(true);
                out.dim_lower_bound = Some(fs.lower_bound);
                if fs.construction_verified {
                    out.notes
                        .push("bound realized by an explicitly shifted gallery".into());
                } else {
                    out.notes.push(
                        "bound holds but no dimension-attaining loop gallery has direction 1"
                            .into(),
                    );
                }
                Ok(out)
            }
            Ok(None) => {
                out.applicable = true;
                out.notes
                    .push("the b = 1 variety at t^{-mu}x is empty; the bound is vacuous".into());
                Ok(out)
            }
            Err(Error::HypothesisFailed { name, detail }) => {
                out.checks.push(HypothesisCheck {
                    name,
                    passed: false,
                    detail,
                });
                Ok(out)
            }
            Err(e) => Err(e),
        }
    }
}

/// Dimension of X_x(b) from a dominant-based conjugate: writes
/// x = u⁻¹·y·u with y based at a dominant vertex whose star is deep in the
/// chamber, then shifts y's dimension by half the length difference.
/// Equality for b = 1; a lower bound otherwise.
struct ConjugationRule;

impl Prediction for ConjugationRule {
    fn name(&self) -> &'static str {
        "conjugation"
    }

    fn describe(&self) -> &'static str {
        "move the basepoint into the dominant chamber by conjugation and shift the dimension"
    }

    fn predict(
        &self,
        rs: &RootSystem,
        x: &AffineElement,
        b: &TranslationClass,
        _caps: Caps,
    ) -> Result<PredictionOutcome> {
        let mut out = PredictionOutcome::inapplicable(self.name());
        let (chamber, _) = chamber_and_shrunken(rs, x);
        // x = u⁻¹·y·u with u = chamber⁻¹ puts y's vertex in the dominant cone.
        let u = rs.weyl_inv(&chamber);
        let u_aff = AffineElement {
            lambda: vec![0; rs.rank()],
            w: chamber.clone(),
        };
        let y = affine_mul(
            rs,
            &affine_mul(rs, &crate::affine::affine_inv(rs, &u_aff), x),
            &u_aff,
        );
        let bound = match conjugation_bound(rs, &y, &u, b) {
            Ok(bound) => bound,
            Err(Error::HypothesisFailed { name, detail }) => {
                out.checks.push(HypothesisCheck {
                    name,
                    passed: false,
                    detail,
                });
                return Ok(out);
            }
            Err(e) => return Err(e),
        };
        debug_assert_eq!(bound.conjugate.key(), x.key());
        let base_dim = if b.is_identity() {
            match reuman_predict(rs, &y) {
                Ok(d) => d,
                Err(Error::NotShrunken) => None,
                Err(e) => return Err(e),
            }
        } else {
            shrunken_translation_predict(rs, &y, b).dim
        };
        out.applicable = true;
        match base_dim {
            Some(d) => {
                out.nonempty = Some(true);
                if bound.equality {
                    out.dim = Some(d + bound.shift);
                } else {
                    out.dim_lower_bound = Some(d + bound.shift);
                }
            }
            None => {
                out.notes.push(
                    "no closed-form dimension for the dominant-based conjugate; no claim made"
                        .into(),
                );
            }
        }
        Ok(out)
    }
}

/// All registered rules, in a fixed order.
pub fn registry() -> Vec<Box<dyn Prediction>> {
    vec![
        Box::new(ReumanRule),
        Box::new(ShrunkenTranslationRule),
        Box::new(ForwardShiftRule),
        Box::new(ConjugationRule),
    ]
}

/// Look up a single rule by its registry name.
pub fn by_name(name: &str) -> Option<Box<dyn Prediction>> {
    registry().into_iter().find(|p| p.name() == name)
}
