//! Automorphisms of the affine Dynkin diagram and their action on the
//! affine Weyl group: X_x(b) and X_{g(x)}(g(b)) always have identical
//! nonemptiness and dimension, so the oracle must be invariant under every
//! diagram automorphism.

use crate::affine::{self, AffineElement};
use crate::root_system::{RootSystem, WeylElt};
use crate::{Error, Result};

/// A permutation of the affine generator indices 0..=n preserving the
/// affine Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    pub perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn apply_gen(&self, i: usize) -> usize {
        self.perm[i]
    }
}

/// The (n+1)×(n+1) affine Cartan matrix, index 0 the affine node: the
/// lowest-root generator s₀ pairs into the finite diagram through the
/// highest root θ, via ⟨−θ, αⱼ^∨⟩ and ⟨αⱼ, −θ^∨⟩.
pub fn affine_cartan(rs: &RootSystem) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let theta = &rs.positive_roots[rs.highest];
    let mut a = vec![vec![0i64; n + 1]; n + 1];
    a[0][0] = 2;
    for j in 1..=n {
        let coroot_j = &rs.positive_roots[rs.simple_idx[j - 1]].coroot;
        a[0][j] = -rs.pairing(&theta.coeffs, coroot_j);
        a[j][0] = -theta.coroot[j - 1];
        for i in 1..=n {
            a[i][j] = rs.cartan[i - 1][j - 1];
        }
    }
    a
}

fn extend(
    a: &[Vec<i64>],
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<DiagramAutomorphism>,
) {
    let m = a.len();
    let k = perm.len();
    if k == m {
        out.push(DiagramAutomorphism { perm: perm.clone() });
        return;
    }
    for img in 0..m {
        if used[img] {
            continue;
        }
        // Consistency against all previously assigned indices.
        let ok = (0..k).all(|j| a[k][j] == a[img][perm[j]] && a[j][k] == a[perm[j]][img]);
        if ok && a[k][k] == a[img][img] {
            perm.push(img);
            used[img] = true;
            extend(a, perm, used, out);
            used[img] = false;
            perm.pop();
        }
    }
}

/// All automorphisms of the affine diagram, in lexicographic order of the
/// permutation vector (the identity first).
pub fn diagram_automorphisms(rs: &RootSystem) -> Vec<DiagramAutomorphism> {
    let a = affine_cartan(rs);
    let mut out = Vec::new();
    extend(&a, &mut Vec::new(), &mut vec![false; a.len()], &mut out);
    out.sort_by(|x, y| x.perm.cmp(&y.perm));
    out
}

/// The induced group automorphism, computed on a reduced word. Because the
/// permutation preserves the affine Cartan matrix it preserves the defining
/// relations, so the image does not depend on the chosen word.
pub fn apply_to_element(
    rs: &RootSystem,
    g: &DiagramAutomorphism,
    x: &AffineElement,
) -> AffineElement {
    let mut out = affine::identity(rs);
    for &letter in &affine::reduced_word_affine(rs, x) {
        out = affine::affine_mul(rs, &out, &affine::generator(rs, g.apply_gen(letter)));
    }
    out
}

/// Image of a translation point: g(t^μ) = t^{g(μ)}. Diagram automorphisms
/// always map pure translations to pure translations.
pub fn apply_to_translation(rs: &RootSystem, g: &DiagramAutomorphism, mu: &[i64]) -> Result<Vec<i64>> {
    let image = apply_to_element(rs, g, &affine::pure_translation(rs, mu)?);
    if !image.is_translation() {
        return Err(Error::InvalidGallery(
            "diagram automorphism failed to preserve pure translations".into(),
        ));
    }
    Ok(image.lambda)
}

/// Transport of a finite orientation direction: writing g(w) = t^λ·w′, a
/// gallery positively folded for φ_w maps to one positively folded for
/// φ_{w′} with the same dimension.
pub fn transport_direction(rs: &RootSystem, g: &DiagramAutomorphism, w: &WeylElt) -> WeylElt {
    let image = apply_to_element(
        rs,
        g,
        &AffineElement {
            lambda: vec![0; rs.rank()],
            w: w.clone(),
        },
    );
    image.w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adlv::{adlv_dim_oracle, TranslationClass};
    use crate::affine::{enumerate_up_to_length, pure_translation};
    use crate::search::Caps;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    #[test]
    fn automorphism_counts() {
        // The affine A2 diagram is a triangle (full symmetric group), the
        // affine C2 diagram a chain with one flip, affine G2 is rigid, and
        // the affine A3 diagram is a 4-cycle (dihedral of order 8).
        assert_eq!(diagram_automorphisms(&rs("A2")).len(), 6);
        assert_eq!(diagram_automorphisms(&rs("C2")).len(), 2);
        assert_eq!(diagram_automorphisms(&rs("G2")).len(), 1);
        assert_eq!(diagram_automorphisms(&rs("A3")).len(), 8);
    }

    #[test]
    fn c2_flip_swaps_end_nodes() {
        let c2 = rs("C2");
        let autos = diagram_automorphisms(&c2);
        let flip = autos.iter().find(|g| !g.is_identity()).unwrap();
        assert_eq!(flip.perm, vec![2, 1, 0]);
    }

    #[test]
    fn automorphisms_are_homomorphisms() {
        for name in ["A2", "C2"] {
            let r = rs(name);
            for g in diagram_automorphisms(&r) {
                for x in enumerate_up_to_length(&r, 3) {
                    for y in enumerate_up_to_length(&r, 2) {
                        let xy = affine::affine_mul(&r, &x, &y);
                        let gx_gy = affine::affine_mul(
                            &r,
                            &apply_to_element(&r, &g, &x),
                            &apply_to_element(&r, &g, &y),
                        );
                        assert_eq!(apply_to_element(&r, &g, &xy), gx_gy);
                    }
                }
            }
        }
    }

    #[test]
    fn translations_map_to_translations() {
        for name in ["A2", "C2", "A3"] {
            let r = rs(name);
            let mu = vec![1; r.rank()];
            let mu_lattice = r
                .in_coroot_lattice(&mu)
                .then_some(mu)
                .unwrap_or_else(|| vec![2; r.rank()]);
            for g in diagram_automorphisms(&r) {
                let image = apply_to_translation(&r, &g, &mu_lattice).unwrap();
                assert!(pure_translation(&r, &image).is_ok());
            }
        }
    }

    #[test]
    fn oracle_invariant_under_diagram_automorphisms() {
        let a2 = rs("A2");
        let autos = diagram_automorphisms(&a2);
        let b_points: Vec<Vec<i64>> = vec![vec![0, 0], vec![1, 1]];
        for x in enumerate_up_to_length(&a2, 4) {
            for mu in &b_points {
                let b = TranslationClass::new(&a2, mu).unwrap();
                let reference = adlv_dim_oracle(&a2, &x, &b, Caps::default()).unwrap();
                for g in &autos {
                    let gx = apply_to_element(&a2, g, &x);
                    let gmu = apply_to_translation(&a2, g, mu).unwrap();
                    let gb = TranslationClass::new(&a2, &gmu).unwrap();
                    let image = adlv_dim_oracle(&a2, &gx, &gb, Caps::default()).unwrap();
                    assert_eq!(image.nonempty, reference.nonempty, "x={x:?} g={g:?}");
                    assert_eq!(image.dim, reference.dim, "x={x:?} g={g:?}");
                }
            }
        }
    }
}
