//! Galleries built by explicit surgery rather than search.
//!
//! The centerpiece is a loop at the base alcove of type a reduced word for
//! a₀ = t^{2ρ^∨}w₀ whose dimension (with respect to the reversed standard
//! orientation) is the maximum possible for its type. Concatenating a
//! minimal gallery with a translate of that loop, reflecting, and applying
//! raising root operators yields witness galleries for every shrunken
//! dominant translation x₀ = t^λw₀ and admissible endpoint t^μ. Three
//! further moves carry a witness from one element to another: a forward
//! shift by a dominant translation, conjugation by a simple reflection, and
//! transport along a symmetry of the affine diagram.
//!
//! No construction is trusted: each one re-walks its output, re-scores it
//! against the claimed orientation, and fails loudly if the fold count,
//! dimension, endpoints, or type word disagree with what the caller was
//! promised. A returned gallery is therefore a checked certificate.
//!
//! Translations by coweights outside the coroot lattice (such as ρ^∨ in
//! types C₂ and A₃) appear only as intermediate geometric maps: they act on
//! alcoves and walls but permute panel types, so every word below is
//! computed from the running walk position rather than from a fixed
//! endpoint, and the published galleries always start at honest affine Weyl
//! group alcoves.

use crate::adlv::{rho_pairing, rho_vertex};
use crate::affine::{
    affine_from_word, affine_length, affine_mul, chamber_and_shrunken, generator, identity,
    in_convex_hull, minimal_word_between, pure_translation, reduced_word_affine, AffineElement,
};
use crate::gallery::{
    act_finite, dim_gallery, end_alcove, fold_at, translate, unfold_at, Gallery, Orientation,
    Step, StepKind,
};
use crate::root_ops::{apply_e, end_vertex, raising_indices};
use crate::root_system::{RootSystem, WeylElt};
use crate::search::{enumerate_folded_with, Caps, SearchSpec, Target};
use crate::{Error, Result};
use std::collections::HashSet;

/// A caller-supplied hypothesis does not hold.
fn require(cond: bool, name: &'static str, detail: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::HypothesisFailed {
            name,
            detail: detail(),
        })
    }
}

/// An internal invariant of a construction failed its re-scoring check.
fn self_check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidGallery(format!(
            "construction self-check failed: {what}"
        )))
    }
}

fn walk(rs: &RootSystem, start: &AffineElement, word: &[usize]) -> AffineElement {
    word.iter().fold(start.clone(), |c, &g| {
        affine_mul(rs, &c, &generator(rs, g))
    })
}

/// End-to-start concatenation; the pieces must meet in a common alcove.
fn concat(rs: &RootSystem, head: &Gallery, tail: &Gallery) -> Result<Gallery> {
    self_check(
        end_alcove(rs, head) == tail.first,
        "concatenated galleries meet in a common alcove",
    )?;
    let mut steps = head.steps.clone();
    steps.extend_from_slice(&tail.steps);
    Ok(Gallery {
        first: head.first.clone(),
        steps,
        vertex_marked: false,
    })
}

/// Applies each raising operator as many times as `counts` asks, in an
/// order that leaves both end alcoves of the gallery untouched. A single
/// application is harmless exactly when the kept initial segment is
/// nonempty (pivot face j ≥ 1, so the start alcove is not reflected) and
/// the minimal level is met at a panel rather than only at the end vertex
/// (k within the panel range, so the end alcove is translated). One
/// direction alone can run out of headroom — its minimum climbs by one per
/// application — but applications in the other directions push that
/// minimum back down, so the order matters; a depth-first search over
/// application orders finds a harmless one.
fn apply_raising_operators(rs: &RootSystem, g: &Gallery, counts: &[i64]) -> Result<Gallery> {
    fn dfs(
        rs: &RootSystem,
        g: Gallery,
        rem: &mut [i64],
        seen: &mut HashSet<(Vec<i64>, Gallery)>,
    ) -> Result<Option<Gallery>> {
        if rem.iter().all(|&c| c == 0) {
            return Ok(Some(g));
        }
        if !seen.insert((rem.to_vec(), g.clone())) {
            return Ok(None);
        }
        for i in 0..rem.len() {
            if rem[i] == 0 {
                continue;
            }
            let Some(idx) = raising_indices(rs, &g, i)? else {
                continue;
            };
            if idx.j < 1 || idx.k > g.steps.len() {
                continue;
            }
            let next = apply_e(rs, &g, i)?.expect("the operator is defined at its pivot");
            rem[i] -= 1;
            let found = dfs(rs, next, rem, seen)?;
            rem[i] += 1;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
    let mut rem = counts.to_vec();
    let mut seen = HashSet::new();
    dfs(rs, g.clone(), &mut rem, &mut seen)?.ok_or_else(|| {
        Error::InvalidGallery(
            "construction self-check failed: no order of raising operator applications \
             leaves the start and end alcoves in place"
                .into(),
        )
    })
}

/// The maximal loop at the base alcove: a gallery 𝔞 ⇝ 𝔞 of type a reduced
/// word for a₀ = t^{2ρ^∨}w₀, positively folded with respect to the reversed
/// standard orientation, with exactly ℓ(w₀) folds and dimension
/// ℓ(t^{ρ^∨}) = Σ_{α>0} ht(α).
///
/// Shape: start at the alcove t^{−ρ^∨}𝔞, walk a minimal gallery up to w₀𝔞,
/// bounce once in each of the ℓ(ω₀) walls through the origin (a minimal
/// descent from w₀𝔞 to 𝔞 with every crossing replaced by a fold), walk a
/// minimal gallery back down to t^{−ρ^∨}𝔞, and finally shift the whole
/// picture by ρ^∨ so that the loop is based at 𝔞. Each segment's word is
/// read off from the walk position reached so far, which keeps the step
/// labels consistent even when t^{±ρ^∨} permutes panel types.
pub fn build_sigma_a0(rs: &RootSystem) -> Result<Gallery> {
    let rho = rho_vertex(rs);
    let neg_rho: Vec<i64> = rho.iter().map(|c| -c).collect();
    let two_rho: Vec<i64> = rho.iter().map(|c| 2 * c).collect();
    let low = AffineElement {
        lambda: neg_rho,
        w: rs.identity(),
    };
    let w0_alcove = AffineElement {
        lambda: vec![0; rs.rank()],
        w: rs.w0().clone(),
    };
    let apex = AffineElement {
        lambda: rho.clone(),
        w: rs.w0().clone(),
    };

    // Three minimal segments, each spelled from the element the walk has
    // actually reached (`low` is a geometric translate, so its panel labels
    // differ from the intrinsic ones whenever ρ^∨ is not a coroot sum).
    let up = minimal_word_between(rs, &low, &w0_alcove);
    let mid = walk(rs, &low, &up);
    let descent = minimal_word_between(rs, &mid, &identity(rs));
    let after_descent = walk(rs, &mid, &descent);
    let climb = minimal_word_between(rs, &after_descent, &apex);

    let mut word = up.clone();
    let fold_range = word.len()..word.len() + descent.len();
    word.extend_from_slice(&descent);
    word.extend_from_slice(&climb);

    let mut g = Gallery::minimal(low, &word, false);
    for p in fold_range {
        g = fold_at(&g, p)?;
    }
    let g = translate(rs, &rho, &g, true)?;

    let a0 = AffineElement {
        lambda: two_rho,
        w: rs.w0().clone(),
    };
    self_check(
        word.len() as i64 == affine_length(rs, &a0),
        "loop type has the length of t^{2ρ^∨}w₀",
    )?;
    self_check(
        affine_from_word(rs, &word) == a0,
        "loop type multiplies out to t^{2ρ^∨}w₀",
    )?;
    self_check(g.first == identity(rs), "loop starts at the base alcove")?;
    self_check(
        end_alcove(rs, &g) == identity(rs),
        "loop returns to the base alcove",
    )?;
    let stats = dim_gallery(rs, &g, &Orientation::opposite_standard(rs))?;
    self_check(
        stats.folds == rs.weyl_length(rs.w0()),
        "loop folds once per inversion of the longest element",
    )?;
    self_check(
        stats.dim == rs.sum_of_heights(),
        "loop dimension equals the length of t^{ρ^∨}",
    )?;
    Ok(g)
}

/// Witness gallery for a shrunken dominant translation: a gallery
/// 𝔞 ⇝ t^μ𝔞 of type a reduced word for x₀ = t^λw₀, positively folded with
/// respect to the reversed standard orientation, with ℓ(w₀) folds and
/// dimension ⟨ρ, λ−μ⟩.
///
/// Hypotheses: x₀𝔞 lies in the shrunken dominant chamber; μ is a dominant
/// coroot-lattice point; and λ − 2ρ^∨ − μ lies in the cone spanned by the
/// simple coroots after reflecting by −w₀ (so that the end vertex can be
/// raised from λ − 2ρ^∨ to μ by root operators).
///
/// Shape: concatenate a minimal gallery 𝔞 ⇝ t^{λ−2ρ^∨}𝔞 with the translate
/// of [`build_sigma_a0`]'s loop, mark the origin vertex, reflect by w₀,
/// apply the raising operator for each simple root as often as the cone
/// coordinates dictate, and reflect back.
pub fn build_gamma0(rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> Result<Gallery> {
    let w0_alcove = AffineElement {
        lambda: vec![0; rs.rank()],
        w: rs.w0().clone(),
    };
    let x0 = affine_mul(rs, &pure_translation(rs, lambda)?, &w0_alcove);
    let (chamber, shrunken) = chamber_and_shrunken(rs, &x0);
    if !(chamber.is_identity() && shrunken) {
        return Err(Error::NotShrunken);
    }
    let b_alcove = pure_translation(rs, mu)?;
    require(rs.is_dominant(mu), "dominant-target", || {
        format!("the endpoint translation {mu:?} must be dominant")
    })?;

    // ν = λ − 2ρ^∨ is dominant because x₀ is shrunken.
    let nu: Vec<i64> = lambda.iter().map(|c| c - 2).collect();
    let diff: Vec<i64> = nu.iter().zip(mu).map(|(n, m)| n - m).collect();
    let starred: Vec<i64> = rs.w0().act(&diff).iter().map(|c| -c).collect();
    let counts = rs
        .coroot_coordinates(&starred)
        .filter(|c| c.iter().all(|&ci| ci >= 0))
        .ok_or_else(|| Error::HypothesisFailed {
            name: "negative-cone",
            detail: format!(
                "λ − 2ρ^∨ − μ = {diff:?} must be a nonnegative integer combination of \
                 simple coroots after reflecting by −w₀ (coordinates {:?})",
                rs.coroot_coordinates(&starred)
            ),
        })?;

    let t_nu = pure_translation(rs, &nu)?;
    let approach = Gallery::minimal(identity(rs), &reduced_word_affine(rs, &t_nu), false);
    let shifted_loop = translate(rs, &nu, &build_sigma_a0(rs)?, false)?;
    let mut gamma = concat(rs, &approach, &shifted_loop)?;
    self_check(
        gamma.type_word().len() as i64 == affine_length(rs, &x0)
            && affine_from_word(rs, &gamma.type_word()) == x0,
        "witness type is a reduced word for t^λw₀",
    )?;
    gamma.vertex_marked = true;

    // Reflect so the raising operators act on a gallery that is positively
    // folded with respect to the standard orientation.
    let sharp = apply_raising_operators(rs, &act_finite(rs, rs.w0(), &gamma), &counts)?;
    self_check(
        sharp.first
            == AffineElement {
                lambda: vec![0; rs.rank()],
                w: rs.w0().clone(),
            },
        "raising operators fix the first alcove",
    )?;
    self_check(
        end_vertex(rs, &sharp) == rs.w0().act(mu),
        "raising operators move the end vertex to w₀μ",
    )?;
    let target_dim = rho_pairing(
        rs,
        &lambda.iter().zip(mu).map(|(l, m)| l - m).collect::<Vec<_>>(),
    );
    let sharp_stats = dim_gallery(rs, &sharp, &Orientation::standard(rs))?;
    self_check(
        sharp_stats.folds == rs.weyl_length(rs.w0()) && sharp_stats.dim == target_dim,
        "raised vertex-to-vertex gallery scores ⟨ρ, λ−μ⟩ with ℓ(w₀) folds",
    )?;

    let mut out = act_finite(rs, rs.w0(), &sharp);
    out.vertex_marked = false;
    self_check(out.first == identity(rs), "witness starts at the base alcove")?;
    self_check(
        end_alcove(rs, &out) == b_alcove,
        "witness ends at the endpoint translation alcove",
    )?;
    let stats = dim_gallery(rs, &out, &Orientation::opposite_standard(rs))?;
    self_check(
        stats.folds == rs.weyl_length(rs.w0()) && stats.dim == target_dim,
        "witness scores ⟨ρ, λ−μ⟩ with ℓ(w₀) folds",
    )?;
    Ok(out)
}

/// Shifts a loop γ: 𝔞 ⇝ 𝔞 forward by a translation: the result is a
/// gallery 𝔞 ⇝ t^μ𝔞 of type (reduced word for t^μ)·(type of γ), positively
/// folded with respect to the same orientation, with the same folds and
/// dimension dim_φ(γ) plus the score of the minimal shift segment.
///
/// Hypothesis: t^μ𝔞 lies in the convex hull of 𝔞 and t^μx𝔞, where x is the
/// element spelled by γ's type (length additivity ℓ(t^μ) + ℓ(x) = ℓ(t^μx)).
pub fn forward_shift_gallery(
    rs: &RootSystem,
    gamma: &Gallery,
    mu: &[i64],
    orientation: &Orientation,
) -> Result<Gallery> {
    if gamma.vertex_marked {
        return Err(Error::InvalidGallery(
            "forward shift acts on unmarked alcove-to-alcove galleries".into(),
        ));
    }
    if gamma.first != identity(rs) || end_alcove(rs, gamma) != identity(rs) {
        return Err(Error::InvalidGallery(
            "forward shift acts on loops based at the base alcove".into(),
        ));
    }
    let word = gamma.type_word();
    let x = affine_from_word(rs, &word);
    if word.len() as i64 != affine_length(rs, &x) {
        return Err(Error::WordNotReduced);
    }
    let gamma_stats = dim_gallery(rs, gamma, orientation)?;

    let t_mu = pure_translation(rs, mu)?;
    let shifted_end = affine_mul(rs, &t_mu, &x);
    require(in_convex_hull(rs, &t_mu, &shifted_end), "convexity", || {
        format!(
            "t^μ𝔞 with μ = {mu:?} must lie in the convex hull of the base alcove \
             and the shifted end alcove"
        )
    })?;

    let segment = Gallery::minimal(identity(rs), &reduced_word_affine(rs, &t_mu), false);
    let segment_stats = dim_gallery(rs, &segment, orientation)?;
    let out = concat(rs, &segment, &translate(rs, mu, gamma, false)?)?;

    self_check(
        end_alcove(rs, &out) == t_mu,
        "shifted gallery ends at the translation alcove",
    )?;
    let stats = dim_gallery(rs, &out, orientation)?;
    self_check(
        stats.folds == gamma_stats.folds,
        "forward shift preserves the fold count",
    )?;
    self_check(
        stats.dim == gamma_stats.dim + segment_stats.dim,
        "forward shift adds exactly the score of the shift segment",
    )?;
    Ok(out)
}

/// How [`conjugate_gallery`] transformed the witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugationCase {
    /// ℓ(sxs) = ℓ(x) + 2: a crossing is prepended and appended; the
    /// dimension grows by one.
    LengthAdding,
    /// ℓ(sxs) = ℓ(x) and the rebraided witness ends with a crossing: that
    /// crossing migrates to the front; the dimension is unchanged.
    EqualLengthCross,
    /// ℓ(sxs) = ℓ(x) and the rebraided witness ends with a fold: the fold
    /// unfolds and a crossing is prepended, producing a witness of type a
    /// reduced word for sx (one letter longer); the dimension is unchanged.
    EqualLengthFold,
}

/// Whether the output on its own certifies a statement about the
/// conjugated element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// The output is a gallery of type a reduced word for sxs with the
    /// claimed score; nothing beyond re-scoring is needed.
    VerifiedByConstruction,
    /// The output is a gallery of type a reduced word for sx (not sxs);
    /// relating it to sxs needs the fold-at-the-last-panel comparison,
    /// which this crate does not re-derive.
    UnverifiedByConstruction,
}

/// Result of conjugating a witness gallery by a simple reflection.
#[derive(Debug, Clone)]
pub struct ConjugatedGallery {
    pub gallery: Gallery,
    /// Direction whose orientation scores the output: s·w.
    pub direction: WeylElt,
    pub dim: i64,
    pub case: ConjugationCase,
    pub provenance: Provenance,
}

/// Conjugates a witness gallery σ: 𝔞 ⇝ t^μ𝔞 of type a reduced word for x
/// (positively folded with respect to φ_w) by the simple reflection with
/// panel label `s`, yielding a gallery 𝔞 ⇝ t^{sμ}𝔞 positively folded with
/// respect to φ_{sw}.
///
/// Hypothesis: ℓ(su) > ℓ(u) for the spherical chamber u containing x𝔞.
/// Under it ℓ(sxs) ≥ ℓ(x); the two possible cases are handled by explicit
/// step surgery (see [`ConjugationCase`]). In the equal-length case the
/// witness is first rewritten — by exact search over its braid class — to a
/// type ending with s, which exists whenever ℓ(xs) < ℓ(x); if instead s
/// commutes past x entirely (sxs = x with no reduced word of x ending in
/// s), no surgery applies and an error is returned.
pub fn conjugate_gallery(
    rs: &RootSystem,
    sigma: &Gallery,
    w: &WeylElt,
    s: usize,
) -> Result<ConjugatedGallery> {
    let n = rs.rank();
    if s == 0 || s > n {
        return Err(Error::Unsupported(format!(
            "conjugation is by a spherical generator (panel label 1..={n}), got {s}"
        )));
    }
    if sigma.vertex_marked {
        return Err(Error::InvalidGallery(
            "conjugation acts on unmarked alcove-to-alcove galleries".into(),
        ));
    }
    if sigma.first != identity(rs) {
        return Err(Error::InvalidGallery(
            "conjugation acts on galleries starting at the base alcove".into(),
        ));
    }
    let end = end_alcove(rs, sigma);
    if !end.w.is_identity() {
        return Err(Error::InvalidGallery(
            "conjugation acts on galleries ending at a pure translation alcove".into(),
        ));
    }
    let mu = end.lambda.clone();
    let word = sigma.type_word();
    let x = affine_from_word(rs, &word);
    if word.len() as i64 != affine_length(rs, &x) {
        return Err(Error::WordNotReduced);
    }

    let orientation = Orientation::new(rs, w.clone());
    let sigma_stats = dim_gallery(rs, sigma, &orientation)?;

    let s_w = rs.simple_reflection(s - 1).clone();
    let (u, _) = chamber_and_shrunken(rs, &x);
    require(
        rs.weyl_length(&rs.weyl_mul(&s_w, &u)) > rs.weyl_length(&u),
        "ascending-chamber",
        || {
            format!(
                "the generator with panel label {s} must lengthen the spherical chamber \
                 of the end-of-type alcove"
            )
        },
    )?;

    let s_aff = AffineElement {
        lambda: vec![0; n],
        w: s_w.clone(),
    };
    let sxs = affine_mul(rs, &affine_mul(rs, &s_aff, &x), &s_aff);
    let len_x = affine_length(rs, &x);
    let len_sxs = affine_length(rs, &sxs);
    assert!(
        len_sxs >= len_x,
        "conjugation by an ascending generator cannot shorten the element"
    );

    let cross = Step {
        gen: s,
        kind: StepKind::Cross,
    };
    let (out, case, provenance, expected_dim, expected_folds) = if len_sxs == len_x + 2 {
        let mut steps = vec![cross];
        steps.extend_from_slice(&sigma.steps);
        steps.push(cross);
        let out = Gallery {
            first: identity(rs),
            steps,
            vertex_marked: false,
        };
        self_check(
            affine_from_word(rs, &out.type_word()) == sxs,
            "length-adding conjugation spells sxs",
        )?;
        (
            out,
            ConjugationCase::LengthAdding,
            Provenance::VerifiedByConstruction,
            sigma_stats.dim + 1,
            sigma_stats.folds,
        )
    } else {
        // Equal lengths: rewrite the witness to a type ending with s.
        let xs = affine_mul(rs, &x, &s_aff);
        require(
            affine_length(rs, &xs) == len_x - 1,
            "word-ending",
            || {
                format!(
                    "no reduced word of the witness type ends with panel label {s} \
                     (the generator commutes past the element)"
                )
            },
        )?;
        let mut new_word = reduced_word_affine(rs, &xs);
        new_word.push(s);
        let spec = SearchSpec::new(
            identity(rs),
            &new_word,
            &orientation,
            Target::Alcove(end.clone()),
        );
        let mut rebraided: Option<Gallery> = None;
        enumerate_folded_with(rs, &spec, Caps::default(), |g, stats| {
            if rebraided.is_none()
                && stats.folds == sigma_stats.folds
                && stats.dim == sigma_stats.dim
            {
                rebraided = Some(g.clone());
            }
        })?;
        let rebraided = rebraided.ok_or_else(|| {
            Error::InvalidGallery(
                "construction self-check failed: no gallery of the rewritten type matches \
                 the witness's score"
                    .into(),
            )
        })?;
        let last = rebraided.steps.len() - 1;
        if rebraided.steps[last].kind == StepKind::Cross {
            let mut steps = vec![cross];
            steps.extend_from_slice(&rebraided.steps[..last]);
            let out = Gallery {
                first: identity(rs),
                steps,
                vertex_marked: false,
            };
            self_check(
                affine_from_word(rs, &out.type_word()) == sxs,
                "crossing-migration conjugation spells sxs",
            )?;
            (
                out,
                ConjugationCase::EqualLengthCross,
                Provenance::VerifiedByConstruction,
                sigma_stats.dim,
                sigma_stats.folds,
            )
        } else {
            let unfolded = unfold_at(&rebraided, last)?;
            let mut steps = vec![cross];
            steps.extend_from_slice(&unfolded.steps);
            let pre = Gallery {
                first: s_aff.clone(),
                steps,
                vertex_marked: false,
            };
            let out = act_finite(rs, &s_w, &pre);
            let sx = affine_mul(rs, &s_aff, &x);
            self_check(
                affine_from_word(rs, &out.type_word()) == sx
                    && out.type_word().len() as i64 == affine_length(rs, &sx),
                "unfolding conjugation spells sx reduced",
            )?;
            (
                out,
                ConjugationCase::EqualLengthFold,
                Provenance::UnverifiedByConstruction,
                sigma_stats.dim,
                sigma_stats.folds - 1,
            )
        }
    };

    let direction = rs.weyl_mul(&s_w, w);
    let transported = Orientation::new(rs, direction.clone());
    self_check(out.first == identity(rs), "conjugated witness starts at the base alcove")?;
    self_check(
        end_alcove(rs, &out)
            == AffineElement {
                lambda: s_w.act(&mu),
                w: rs.identity(),
            },
        "conjugated witness ends at the reflected translation alcove",
    )?;
    let stats = dim_gallery(rs, &out, &transported)?;
    self_check(
        stats.folds == expected_folds,
        "conjugated witness has the predicted fold count",
    )?;
    self_check(
        stats.dim == expected_dim,
        "conjugated witness has the predicted dimension",
    )?;
    Ok(ConjugatedGallery {
        gallery: out,
        direction,
        dim: stats.dim,
        case,
        provenance,
    })
}

/// Pairing products ⟨αᵢ,αⱼ^∨⟩⟨αⱼ,αᵢ^∨⟩ between the affine diagram's nodes
/// 0..=n, with node 0 standing for the highest root. The product determines
/// the Coxeter bond (0 ↦ m=2, 1 ↦ 3, 2 ↦ 4, 3 ↦ 6), and its sign is
/// immaterial, so the table works for node 0 unchanged.
fn affine_bond_products(rs: &RootSystem) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let root = |i: usize| &rs.positive_roots[if i == 0 { rs.highest } else { rs.simple_idx[i - 1] }];
    (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    if i == j {
                        return 0;
                    }
                    rs.pairing(&root(i).coeffs, &root(j).coroot)
                        * rs.pairing(&root(j).coeffs, &root(i).coroot)
                })
                .collect()
        })
        .collect()
}

/// Image of a coweight under the linear part of the apartment isometry
/// realizing a diagram symmetry. The isometry carries the panel-i wall of
/// the base alcove to its panel-perm[i] wall, which pins the linear part
/// down on the simple-root functionals: component j of the image pairs the
/// preimage label's root with the argument, negated when the label moves
/// between the node for the highest root and a spherical node (the base
/// alcove lies above its spherical walls but below the highest-root wall).
fn diagram_linear_image(rs: &RootSystem, perm: &[usize], v: &[i64]) -> Vec<i64> {
    let n = rs.rank();
    let mut inv = vec![0usize; n + 1];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    (1..=n)
        .map(|j| {
            let i = inv[j];
            let root = &rs.positive_roots[if i == 0 { rs.highest } else { rs.simple_idx[i - 1] }];
            let sign = if i == 0 { -1 } else { 1 };
            sign * rs.pairing(&root.coeffs, v)
        })
        .collect()
}

fn is_affine_diagram_symmetry(rs: &RootSystem, perm: &[usize]) -> bool {
    let n = rs.rank();
    if perm.len() != n + 1 {
        return false;
    }
    let mut seen = vec![false; n + 1];
    for &p in perm {
        if p > n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    let bonds = affine_bond_products(rs);
    (0..=n).all(|i| (0..=n).all(|j| bonds[perm[i]][perm[j]] == bonds[i][j]))
}

/// All permutations of the panel labels 0..=n preserving the affine
/// diagram's bonds, in lexicographic order (the identity comes first).
pub fn affine_diagram_automorphisms(rs: &RootSystem) -> Vec<Vec<usize>> {
    let n = rs.rank();
    let mut perms = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(n + 1);
    let mut used = vec![false; n + 1];
    fn rec(
        rs: &RootSystem,
        n: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == n + 1 {
            if is_affine_diagram_symmetry(rs, current) {
                out.push(current.clone());
            }
            return;
        }
        for p in 0..=n {
            if !used[p] {
                used[p] = true;
                current.push(p);
                rec(rs, n, current, used, out);
                current.pop();
                used[p] = false;
            }
        }
    }
    rec(rs, n, &mut current, &mut used, &mut perms);
    perms
}

/// Transports a gallery along a symmetry of the affine diagram: panel
/// labels are permuted, step kinds are kept, and the first alcove is
/// rebuilt by walking its permuted reduced word. The scoring direction w
/// transports to the spherical part of the permuted image of w, and the
/// output re-scores to the same positive crossings, folds, and dimension
/// under the transported orientation, which is returned alongside.
///
/// Hypotheses: `perm` preserves the affine diagram's bonds; the gallery is
/// unmarked (a symmetry can move the origin, so vertex marks do not
/// transport) and starts at an affine Weyl group alcove.
pub fn transport_by_diagram_automorphism(
    rs: &RootSystem,
    gallery: &Gallery,
    perm: &[usize],
    orientation: &Orientation,
) -> Result<(Gallery, Orientation)> {
    require(
        is_affine_diagram_symmetry(rs, perm),
        "diagram-symmetry",
        || format!("{perm:?} does not preserve the affine diagram's bonds"),
    )?;
    if gallery.vertex_marked {
        return Err(Error::InvalidGallery(
            "vertex marks do not transport along diagram symmetries".into(),
        ));
    }
    if !rs.in_coroot_lattice(&gallery.first.lambda) {
        return Err(Error::InvalidGallery(
            "transport needs a first alcove in the affine Weyl group".into(),
        ));
    }

    let map_word = |word: &[usize]| word.iter().map(|&g| perm[g]).collect::<Vec<_>>();
    let first_word = map_word(&reduced_word_affine(rs, &gallery.first));
    let out = Gallery {
        first: affine_from_word(rs, &first_word),
        steps: gallery
            .steps
            .iter()
            .map(|st| Step {
                gen: perm[st.gen],
                kind: st.kind,
            })
            .collect(),
        vertex_marked: false,
    };

    // The direction transports by the linear part acting on the chamber at
    // infinity: the image of a regular point of the w-chamber lands in the
    // transported chamber.
    let ones = vec![1i64; rs.rank()];
    let q = diagram_linear_image(rs, perm, &orientation.w.act(&ones));
    let (_, transported_w) = rs.dominant_rep(&q);
    let transported = Orientation::new(rs, transported_w);

    let before = dim_gallery(rs, gallery, orientation)?;
    let after = dim_gallery(rs, &out, &transported)?;
    self_check(
        after.positive_crossings == before.positive_crossings
            && after.folds == before.folds
            && after.dim == before.dim,
        "diagram transport preserves the score",
    )?;
    Ok((out, transported))
}
