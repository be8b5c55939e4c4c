//! The affine Weyl group W̃ = R^∨ ⋊ W and its alcove geometry.
//!
//! An element x = t^λ w is stored as the pair (λ, w) with λ in the coroot
//! lattice (fundamental-coweight coordinates) and w in the finite Weyl
//! group. Alcoves correspond to elements via x ↦ x·c_f where c_f is the
//! fundamental alcove {v : 0 ≤ ⟨α, v⟩ ≤ 1 for all positive roots α}.
//!
//! Generators: sᵢ (i = 1..n, stored as indices 1..=n) are the finite simple
//! reflections; the extra generator s₀ = t^{α̃^∨} s_{α̃} reflects through the
//! wall ⟨α̃, ·⟩ = 1 of the fundamental alcove.
//!
//! Length is computed by the closed formula
//!   ℓ(t^λ w) = Σ_{α>0, w⁻¹α>0} |⟨α,λ⟩| + Σ_{α>0, w⁻¹α<0} |⟨α,λ⟩ − 1|,
//! cross-checked in tests against breadth-first search in the Cayley graph.

use crate::root_system::{RootSystem, WeylElt};
use crate::{Error, Result};
use num::rational::Ratio;
use std::collections::HashMap;

/// x = t^λ w. Invariant: λ lies in the coroot lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    pub lambda: Vec<i64>,
    pub w: WeylElt,
}

impl AffineElement {
    pub fn key(&self) -> (Vec<i64>, Vec<i64>) {
        (self.lambda.clone(), self.w.mat.clone())
    }

    pub fn is_identity(&self) -> bool {
        self.lambda.iter().all(|&c| c == 0) && self.w.is_identity()
    }

    pub fn is_translation(&self) -> bool {
        self.w.is_identity()
    }
}

pub fn identity(rs: &RootSystem) -> AffineElement {
    AffineElement {
        lambda: vec![0; rs.rank()],
        w: rs.identity(),
    }
}

/// Validating constructor: λ must be in the coroot lattice.
pub fn from_parts(rs: &RootSystem, lambda: &[i64], w: WeylElt) -> Result<AffineElement> {
    if !rs.in_coroot_lattice(lambda) {
        return Err(Error::NotInCorootLattice(lambda.to_vec()));
    }
    Ok(AffineElement {
        lambda: lambda.to_vec(),
        w,
    })
}

pub fn pure_translation(rs: &RootSystem, mu: &[i64]) -> Result<AffineElement> {
    from_parts(rs, mu, rs.identity())
}

/// t^λ u · t^μ v = t^{λ + u·μ} (uv).
pub fn affine_mul(rs: &RootSystem, a: &AffineElement, b: &AffineElement) -> AffineElement {
    let mut lambda = a.w.act(&b.lambda);
    for (l, al) in lambda.iter_mut().zip(&a.lambda) {
        *l += al;
    }
    AffineElement {
        lambda,
        w: rs.weyl_mul(&a.w, &b.w),
    }
}

/// (t^λ w)⁻¹ = t^{-w⁻¹λ} w⁻¹.
pub fn affine_inv(rs: &RootSystem, a: &AffineElement) -> AffineElement {
    let lambda: Vec<i64> = a.w.act_inv(&a.lambda).iter().map(|&c| -c).collect();
    AffineElement {
        lambda,
        w: rs.weyl_inv(&a.w),
    }
}

/// The generator indexed by the panel type: 0 ↦ s₀ = t^{α̃^∨}s_{α̃},
/// i ≥ 1 ↦ the finite simple reflection sᵢ (1-based panel labels).
pub fn generator(rs: &RootSystem, i: usize) -> AffineElement {
    if i == 0 {
        let alpha_tilde = &rs.positive_roots[rs.highest];
        AffineElement {
            lambda: alpha_tilde.coroot.clone(),
            w: rs.reflection(rs.highest),
        }
    } else {
        AffineElement {
            lambda: vec![0; rs.rank()],
            w: rs.simple_reflection(i - 1).clone(),
        }
    }
}

pub fn num_generators(rs: &RootSystem) -> usize {
    rs.rank() + 1
}

/// ℓ(t^λ w) by the separating-hyperplane count.
pub fn affine_length(rs: &RootSystem, x: &AffineElement) -> i64 {
    let mut len = 0;
    for root in &rs.positive_roots {
        let pair = rs.pairing(&root.coeffs, &x.lambda);
        let w_inv_alpha_neg = x.w.act_root_inv(&root.coeffs).iter().all(|&c| c <= 0);
        len += if w_inv_alpha_neg {
            (pair - 1).abs()
        } else {
            pair.abs()
        };
    }
    len
}

/// k_α(x·c_f) for every positive root α (in the canonical root order): the
/// alcove lies between the walls at levels k_α and k_α + 1.
pub fn alcove_coords(rs: &RootSystem, x: &AffineElement) -> Vec<i64> {
    rs.positive_roots
        .iter()
        .map(|root| alcove_coord(rs, x, &root.coeffs))
        .collect()
}

/// Single coordinate k_α(x·c_f) = ⟨α, λ⟩ − [w⁻¹α < 0].
pub fn alcove_coord(rs: &RootSystem, x: &AffineElement, root_coeffs: &[i64]) -> i64 {
    let pair = rs.pairing(root_coeffs, &x.lambda);
    let neg = x.w.act_root_inv(root_coeffs).iter().all(|&c| c <= 0);
    pair - i64::from(neg)
}

/// Number of hyperplanes separating the alcoves x·c_f and y·c_f — the number
/// of steps in any minimal alcove-to-alcove gallery between them.
pub fn gallery_distance(rs: &RootSystem, x: &AffineElement, y: &AffineElement) -> i64 {
    rs.positive_roots
        .iter()
        .map(|root| (alcove_coord(rs, x, &root.coeffs) - alcove_coord(rs, y, &root.coeffs)).abs())
        .sum()
}

/// Type word of a minimal gallery from x·c_f to y·c_f, taking the least
/// panel label whenever several crossings make progress. Unlike
/// [`reduced_word_affine`], this works for any pair of alcoves, including
/// those translated by coweights outside the coroot lattice (for which the
/// word need not multiply out to a group element connecting them).
pub fn minimal_word_between(rs: &RootSystem, x: &AffineElement, y: &AffineElement) -> Vec<usize> {
    let mut word = Vec::new();
    let mut cur = x.clone();
    let mut dist = gallery_distance(rs, &cur, y);
    'outer: while dist > 0 {
        for i in 0..num_generators(rs) {
            let next = affine_mul(rs, &cur, &generator(rs, i));
            let nd = gallery_distance(rs, &next, y);
            if nd < dist {
                word.push(i);
                cur = next;
                dist = nd;
                continue 'outer;
            }
        }
        unreachable!("no separating wall adjacent to an alcove at positive distance");
    }
    word
}

/// ℓ(sᵢ x) < ℓ(x) for the affine generator i (0-based panel labels 0..=n).
pub fn is_left_descent(rs: &RootSystem, x: &AffineElement, i: usize) -> bool {
    let s = generator(rs, i);
    affine_length(rs, &affine_mul(rs, &s, x)) < affine_length(rs, x)
}

/// Lexicographically least reduced word (letters 0..=n), built by greedily
/// taking the least left descent. Reading the word left to right traces a
/// minimal gallery from the fundamental alcove to x·c_f.
pub fn reduced_word_affine(rs: &RootSystem, x: &AffineElement) -> Vec<usize> {
    let mut word = Vec::new();
    let mut cur = x.clone();
    let mut len = affine_length(rs, &cur);
    'outer: while len > 0 {
        for i in 0..num_generators(rs) {
            let s = generator(rs, i);
            let shorter = affine_mul(rs, &s, &cur);
            let sl = affine_length(rs, &shorter);
            if sl < len {
                word.push(i);
                cur = shorter;
                len = sl;
                continue 'outer;
            }
        }
        unreachable!("positive-length element with no left descent");
    }
    debug_assert!(cur.is_identity());
    word
}

pub fn affine_from_word(rs: &RootSystem, word: &[usize]) -> AffineElement {
    word.iter().fold(identity(rs), |acc, &i| {
        affine_mul(rs, &acc, &generator(rs, i))
    })
}

/// All reduced words of x, in lexicographic order.
pub fn all_reduced_words(rs: &RootSystem, x: &AffineElement) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(
        rs: &RootSystem,
        x: &AffineElement,
        len: i64,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if len == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in 0..num_generators(rs) {
            let shorter = affine_mul(rs, &generator(rs, i), x);
            let sl = affine_length(rs, &shorter);
            if sl < len {
                prefix.push(i);
                rec(rs, &shorter, sl, prefix, out);
                prefix.pop();
            }
        }
    }
    rec(
        rs,
        x,
        affine_length(rs, x),
        &mut prefix,
        &mut out,
    );
    out
}

/// The finite Weyl chamber containing x·c_f and whether the alcove is
/// *shrunken* (deep): on each side of every root hyperplane the alcove has
/// cleared the first wall, i.e. k_α ≥ 1 where the chamber is on the positive
/// side and k_α ≤ −2 where it is on the negative side.
pub fn chamber_and_shrunken(rs: &RootSystem, x: &AffineElement) -> (WeylElt, bool) {
    let h = rs.coxeter_number();
    let rho_cov: Vec<i64> = vec![1; rs.rank()];
    let w_rho = x.w.act(&rho_cov);
    // q = h·λ + w(ρ^∨) is an integer point strictly inside the alcove scaled
    // by h; no root pairing can vanish on it.
    let q: Vec<i64> = x
        .lambda
        .iter()
        .zip(&w_rho)
        .map(|(l, r)| h * l + r)
        .collect();
    let (q_plus, u) = rs.dominant_rep(&q);
    debug_assert!(
        q_plus.iter().all(|&c| c > 0),
        "alcove barycenter on a chamber wall"
    );
    let mut shrunken = true;
    for root in &rs.positive_roots {
        let k = alcove_coord(rs, x, &root.coeffs);
        let chamber_positive = !u.act_root_inv(&root.coeffs).iter().all(|&c| c <= 0);
        if chamber_positive {
            if k < 1 {
                shrunken = false;
            }
        } else if k > -2 {
            shrunken = false;
        }
    }
    (u, shrunken)
}

/// z·c_f lies in the convex hull of {c_f, x·c_f} iff lengths add:
/// ℓ(z) + ℓ(z⁻¹x) = ℓ(x).
pub fn in_convex_hull(rs: &RootSystem, z: &AffineElement, x: &AffineElement) -> bool {
    let rest = affine_mul(rs, &affine_inv(rs, z), x);
    affine_length(rs, z) + affine_length(rs, &rest) == affine_length(rs, x)
}

/// μ lies in base + (nonpositive cone): base − μ = Σ cᵢ αᵢ^∨ with all
/// cᵢ ≥ 0 integers.
pub fn negative_cone_member(rs: &RootSystem, mu: &[i64], base: &[i64]) -> bool {
    let diff: Vec<i64> = base.iter().zip(mu).map(|(b, m)| b - m).collect();
    match rs.coroot_coordinates(&diff) {
        Some(c) => c.iter().all(|&ci| ci >= 0),
        None => false,
    }
}

/// Image of a rational point under x = t^λ w.
pub fn apply_to_point(_rs: &RootSystem, x: &AffineElement, p: &[Ratio<i64>]) -> Vec<Ratio<i64>> {
    let n = x.lambda.len();
    let mut out = vec![Ratio::from_integer(0); n];
    for (r, o) in out.iter_mut().enumerate() {
        let mut s = Ratio::from_integer(0);
        for (c, pc) in p.iter().enumerate() {
            s += Ratio::from_integer(x.w.mat[r * n + c]) * pc;
        }
        *o = s + Ratio::from_integer(x.lambda[r]);
    }
    out
}

/// All x with ℓ(x) ≤ max_len, breadth-first, in a canonical order
/// (length, then lexicographically least reduced word).
pub fn enumerate_up_to_length(rs: &RootSystem, max_len: i64) -> Vec<AffineElement> {
    let mut seen: HashMap<(Vec<i64>, Vec<i64>), AffineElement> = HashMap::new();
    let id = identity(rs);
    seen.insert(id.key(), id.clone());
    let mut frontier = vec![id];
    let mut radius = 0;
    while radius < max_len {
        radius += 1;
        let mut next = Vec::new();
        for x in &frontier {
            for i in 0..num_generators(rs) {
                let y = affine_mul(rs, x, &generator(rs, i));
                if affine_length(rs, &y) == radius && !seen.contains_key(&y.key()) {
                    seen.insert(y.key(), y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<AffineElement> = seen.into_values().collect();
    all.sort_by_cached_key(|x| (affine_length(rs, x), reduced_word_affine(rs, x)));
    all
}
