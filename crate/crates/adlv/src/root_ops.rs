//! Root operators on vertex-to-vertex positively folded galleries.
//!
//! The operands are vertex-marked galleries that start at the origin (first
//! alcove `w·𝔞` for any spherical w), carry the type of a minimal
//! vertex-to-vertex gallery from the origin to a regular dominant coweight
//! λ (see [`minimal_vertex_gallery`]), and are positively folded with
//! respect to the standard orientation φ₀. On such a gallery the raising
//! operator `e_i` shifts the end vertex by +αᵢ^∨ and the φ₀-dimension by
//! +1; the lowering operator `f_i` is its inverse, shifting by −αᵢ^∨ and
//! −1. Both preserve the type and the origin start.
//!
//! The surgery is piecewise: alcoves before the pivot face are kept, a
//! middle segment is reflected in one wall parallel to αᵢ, and the tail is
//! translated by ±αᵢ^∨. The pivot faces are found by scanning the levels of
//! the gallery's faces in the αᵢ-direction: a panel lies inside a wall
//! H_{α,m} exactly when that wall supports it, and the two marked vertices
//! lie inside H_{α,m} exactly when their pairing with α is m. Walks change
//! α-level bands only through faces lying inside a band boundary, which is
//! why the scan below always finds the approach face.

use crate::affine::{self, identity, pure_translation, reduced_word_affine, AffineElement};
use crate::gallery::{
    alcove_sequence, dim_gallery, from_alcove_sequence, wall_of_panel, Gallery, Orientation,
};
use crate::root_system::RootSystem;
use crate::{Error, Result};

/// Pivot data for one operator application: the minimal wall level `m` met
/// by the faces in the root's direction, and the face indices `j ≤ k`
/// bounding the reflected segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OperatorIndices {
    pub m: i64,
    pub j: usize,
    pub k: usize,
}

fn validate_operand(rs: &RootSystem, g: &Gallery) -> Result<()> {
    if !g.vertex_marked {
        return Err(Error::InvalidGallery(
            "root operators act on vertex-marked galleries".into(),
        ));
    }
    if g.first.lambda.iter().any(|&c| c != 0) {
        return Err(Error::InvalidGallery(
            "root operators act on galleries starting at the origin".into(),
        ));
    }
    // Rejects negative folds (returns NotPositivelyFolded).
    dim_gallery(rs, g, &Orientation::standard(rs))?;
    Ok(())
}

/// Level of each face p₀, …, p_{n+1} in the direction of one positive root:
/// `Some(m)` when the face lies inside H_{root,m}, `None` when it does not
/// lie inside any wall parallel to the root. Also returns the alcove
/// sequence so callers walk it only once.
fn face_levels(
    rs: &RootSystem,
    g: &Gallery,
    root_idx: usize,
) -> (Vec<Option<i64>>, Vec<AffineElement>) {
    let alcoves = alcove_sequence(rs, g);
    let coeffs = &rs.positive_roots[root_idx].coeffs;
    let mut levels = Vec::with_capacity(g.steps.len() + 2);
    levels.push(Some(rs.pairing(coeffs, &g.first.lambda)));
    for (i, step) in g.steps.iter().enumerate() {
        let wall = wall_of_panel(rs, &alcoves[i], step.gen);
        levels.push((wall.root == root_idx).then_some(wall.level));
    }
    levels.push(Some(rs.pairing(coeffs, &alcoves[alcoves.len() - 1].lambda)));
    (levels, alcoves)
}

fn min_level(levels: &[Option<i64>]) -> i64 {
    levels
        .iter()
        .flatten()
        .copied()
        .min()
        .expect("the marked vertices always contribute a level")
}

/// The reflection in the wall H_{root, level} as an affine element.
fn level_reflection(rs: &RootSystem, root_idx: usize, level: i64) -> AffineElement {
    AffineElement {
        lambda: rs.positive_roots[root_idx]
            .coroot
            .iter()
            .map(|&c| level * c)
            .collect(),
        w: rs.reflection(root_idx),
    }
}

/// Translation by `times` copies of the coroot of the given positive root.
fn coroot_translation(rs: &RootSystem, root_idx: usize, times: i64) -> AffineElement {
    AffineElement {
        lambda: rs.positive_roots[root_idx]
            .coroot
            .iter()
            .map(|&c| times * c)
            .collect(),
        w: rs.identity(),
    }
}

/// Minimal wall level met by the faces of the gallery in the direction of
/// the simple root with (0-based) index `simple`. Always ≤ 0, because the
/// start vertex is the origin.
pub fn m_value(rs: &RootSystem, g: &Gallery, simple: usize) -> Result<i64> {
    validate_operand(rs, g)?;
    let (levels, _) = face_levels(rs, g, rs.simple_idx[simple]);
    Ok(min_level(&levels))
}

/// The marked end vertex of a vertex-to-vertex gallery: the image of the
/// origin vertex under the final alcove.
pub fn end_vertex(rs: &RootSystem, g: &Gallery) -> Vec<i64> {
    let mut c = g.first.clone();
    for step in &g.steps {
        if step.kind == crate::gallery::StepKind::Cross {
            c = affine::affine_mul(rs, &c, &affine::generator(rs, step.gen));
        }
    }
    c.lambda
}

/// Pivot faces for the raising operator: `k` is the first face on the
/// minimal level m ≤ −1 and `j ≤ k` the last earlier face on level m+1.
/// None when m = 0 (the raising operator is undefined there).
pub fn raising_indices(
    rs: &RootSystem,
    g: &Gallery,
    simple: usize,
) -> Result<Option<OperatorIndices>> {
    validate_operand(rs, g)?;
    let (levels, _) = face_levels(rs, g, rs.simple_idx[simple]);
    raising_indices_scanned(&levels).map(Some).or(Ok(None))
}

fn raising_indices_scanned(levels: &[Option<i64>]) -> Result<OperatorIndices> {
    let m = min_level(levels);
    if m >= 0 {
        return Err(Error::OperatorUndefined {
            which: 'e',
            root: 0,
        });
    }
    let k = levels
        .iter()
        .position(|&l| l == Some(m))
        .expect("the minimum is attained");
    let j = levels[..=k]
        .iter()
        .rposition(|&l| l == Some(m + 1))
        .ok_or_else(|| {
            Error::InvalidGallery(
                "no face on the approach level precedes the minimum; \
                 the walk does not descend through wall levels one at a time"
                    .into(),
            )
        })?;
    Ok(OperatorIndices { m, j, k })
}

/// Pivot faces for the lowering operator: `j` is the last face on the
/// minimal level m and `k ≥ j` the first later face on level m+1. None when
/// m = ⟨α, ν⟩ for the end vertex ν (the lowering operator is undefined
/// there).
pub fn lowering_indices(
    rs: &RootSystem,
    g: &Gallery,
    simple: usize,
) -> Result<Option<OperatorIndices>> {
    validate_operand(rs, g)?;
    let (levels, _) = face_levels(rs, g, rs.simple_idx[simple]);
    lowering_indices_scanned(&levels).map(Some).or(Ok(None))
}

fn lowering_indices_scanned(levels: &[Option<i64>]) -> Result<OperatorIndices> {
    let m = min_level(levels);
    let end = levels[levels.len() - 1].expect("end vertex contributes");
    if m >= end {
        return Err(Error::OperatorUndefined {
            which: 'f',
            root: 0,
        });
    }
    let j = levels
        .iter()
        .rposition(|&l| l == Some(m))
        .expect("the minimum is attained");
    let k = j + levels[j..]
        .iter()
        .position(|&l| l == Some(m + 1))
        .ok_or_else(|| {
            Error::InvalidGallery(
                "no face on the approach level follows the minimum; \
                 the walk does not ascend through wall levels one at a time"
                    .into(),
            )
        })?;
    Ok(OperatorIndices { m, j, k })
}

/// Raising operator for the simple root with (0-based) index `simple`:
/// keeps the alcoves before face j, reflects alcoves j…k−1 in H_{α,m+1},
/// and translates the rest by +α^∨. Returns None when undefined (m = 0).
/// The result has the same type, end vertex ν + α^∨, and φ₀-dimension one
/// higher.
pub fn apply_e(rs: &RootSystem, g: &Gallery, simple: usize) -> Result<Option<Gallery>> {
    validate_operand(rs, g)?;
    let root_idx = rs.simple_idx[simple];
    let (levels, alcoves) = face_levels(rs, g, root_idx);
    let idx = match raising_indices_scanned(&levels) {
        Ok(idx) => idx,
        Err(Error::OperatorUndefined { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let refl = level_reflection(rs, root_idx, idx.m + 1);
    let shift = coroot_translation(rs, root_idx, 1);
    let mapped: Vec<AffineElement> = alcoves
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i + 1 <= idx.j {
                c.clone()
            } else if i < idx.k {
                affine::affine_mul(rs, &refl, c)
            } else {
                affine::affine_mul(rs, &shift, c)
            }
        })
        .collect();
    from_alcove_sequence(rs, &g.type_word(), &mapped, true).map(Some)
}

/// Lowering operator, inverse to [`apply_e`]: keeps the alcoves before face
/// j, reflects alcoves j…k−1 in H_{α,m}, and translates the rest by −α^∨.
/// Returns None when undefined (m = ⟨α, ν⟩). The result has the same type,
/// end vertex ν − α^∨, and φ₀-dimension one lower.
pub fn apply_f(rs: &RootSystem, g: &Gallery, simple: usize) -> Result<Option<Gallery>> {
    validate_operand(rs, g)?;
    let root_idx = rs.simple_idx[simple];
    let (levels, alcoves) = face_levels(rs, g, root_idx);
    let idx = match lowering_indices_scanned(&levels) {
        Ok(idx) => idx,
        Err(Error::OperatorUndefined { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let refl = level_reflection(rs, root_idx, idx.m);
    let shift = coroot_translation(rs, root_idx, -1);
    let mapped: Vec<AffineElement> = alcoves
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i < idx.j {
                c.clone()
            } else if i < idx.k {
                affine::affine_mul(rs, &refl, c)
            } else {
                affine::affine_mul(rs, &shift, c)
            }
        })
        .collect();
    from_alcove_sequence(rs, &g.type_word(), &mapped, true).map(Some)
}

/// Applies the raising operator as long as it is defined; returns the count
/// and the final gallery.
pub fn max_e(rs: &RootSystem, g: &Gallery, simple: usize) -> Result<(usize, Gallery)> {
    let mut current = g.clone();
    let mut count = 0;
    while let Some(next) = apply_e(rs, &current, simple)? {
        current = next;
        count += 1;
    }
    Ok((count, current))
}

/// Applies the lowering operator as long as it is defined; returns the
/// count and the final gallery.
pub fn max_f(rs: &RootSystem, g: &Gallery, simple: usize) -> Result<(usize, Gallery)> {
    let mut current = g.clone();
    let mut count = 0;
    while let Some(next) = apply_f(rs, &current, simple)? {
        current = next;
        count += 1;
    }
    Ok((count, current))
}

/// The minimal vertex-to-vertex gallery from the origin to a regular
/// dominant coweight λ: the all-crossings walk of a reduced word for
/// t^λ·w₀, starting at the base alcove. Its final alcove has translation
/// part λ, so the marked end vertex is λ itself, and its φ₀-dimension is
/// ⟨2ρ, λ⟩, the maximum for its type.
pub fn minimal_vertex_gallery(rs: &RootSystem, lambda: &[i64]) -> Result<Gallery> {
    let t = pure_translation(rs, lambda)?;
    if !(0..rs.rank()).all(|i| lambda[i] >= 1) {
        return Err(Error::HypothesisFailed {
            name: "regular-dominant",
            detail: format!("{lambda:?} must pair strictly positively with every simple root"),
        });
    }
    let x = affine::affine_mul(
        rs,
        &t,
        &AffineElement {
            lambda: vec![0; rs.rank()],
            w: rs.w0().clone(),
        },
    );
    let word = reduced_word_affine(rs, &x);
    Ok(Gallery::minimal(identity(rs), &word, true))
}
