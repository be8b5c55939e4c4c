//! Finite crystallographic root systems and their Weyl groups.
//!
//! Conventions (Bourbaki numbering throughout):
//!
//! * The Cartan matrix entry is `a[i][j] = ⟨αᵢ, αⱼ^∨⟩`, so for the doubled
//!   bonds: Bₙ has `a[n-2][n-1] = -2`, Cₙ has `a[n-1][n-2] = -2`, F₄ has
//!   `a[1][2] = -2`, and G₂ is `[[2,-1],[-3,2]]`, which makes α₁ short and
//!   the highest root 3α₁+2α₂ (recorded here because both G₂ labelings are
//!   in circulation).
//! * Roots are stored as integer coefficient vectors on the simple roots;
//!   coweights as integer vectors in fundamental-coweight coordinates, so
//!   ⟨α, λ⟩ = Σᵢ cᵢλᵢ and αⱼ^∨ is column j of the Cartan matrix.
//! * Weyl elements are stored as the pair of integer matrices (action on
//!   coweight coordinates and its inverse); reduced words are recomputed on
//!   demand and always lexicographically least.

use crate::{Error, Result};
use std::collections::HashMap;

/// Cartan family letter plus rank, e.g. `A2`, `C2`, `G2`, `A3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeLabel {
    pub family: char,
    pub rank: usize,
}

impl TypeLabel {
    pub fn parse(s: &str) -> Result<TypeLabel> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::UnknownType(s.to_string()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        let ok = match family {
            'A' => (1..=8).contains(&rank),
            'B' | 'C' => (2..=8).contains(&rank),
            'D' => (4..=8).contains(&rank),
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        if !ok {
            return Err(Error::RankOutOfRange { family, rank });
        }
        Ok(TypeLabel { family, rank })
    }
}

impl std::fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

fn cartan_matrix(label: TypeLabel) -> Vec<Vec<i64>> {
    let n = label.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let bond = |a: &mut Vec<Vec<i64>>, i: usize, j: usize, down: i64, up: i64| {
        a[i][j] = down;
        a[j][i] = up;
    };
    match label.family {
        'A' => {
            for i in 0..n - 1 {
                bond(&mut a, i, i + 1, -1, -1);
            }
        }
        'B' => {
            for i in 0..n - 1 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            a[n - 2][n - 1] = -2;
        }
        'C' => {
            for i in 0..n - 1 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            a[n - 1][n - 2] = -2;
        }
        'D' => {
            for i in 0..n - 2 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            bond(&mut a, n - 3, n - 1, -1, -1);
        }
        'E' => {
            // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4.
            bond(&mut a, 0, 2, -1, -1);
            bond(&mut a, 1, 3, -1, -1);
            for i in 2..n - 1 {
                bond(&mut a, i, i + 1, -1, -1);
            }
        }
        'F' => {
            bond(&mut a, 0, 1, -1, -1);
            bond(&mut a, 1, 2, -2, -1);
            bond(&mut a, 2, 3, -1, -1);
        }
        'G' => {
            bond(&mut a, 0, 1, -1, -3);
        }
        _ => unreachable!("validated in TypeLabel::parse"),
    }
    a
}

/// A positive root: coefficients on the simple roots, its coroot in
/// fundamental-coweight coordinates, and its height Σ cᵢ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosRoot {
    pub coeffs: Vec<i64>,
    pub coroot: Vec<i64>,
    pub height: i64,
}

/// An element of the finite Weyl group: integer matrix acting on
/// fundamental-coweight coordinates, together with its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElt {
    /// Row-major n×n matrix: (w·λ)ᵣ = Σ_c mat[r][c]·λ_c.
    pub mat: Vec<i64>,
    pub inv: Vec<i64>,
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for r in 0..n {
        for k in 0..n {
            let ark = a[r * n + k];
            if ark == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += ark * b[k * n + c];
            }
        }
    }
    out
}

fn mat_apply(n: usize, a: &[i64], v: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n];
    for r in 0..n {
        let mut s = 0;
        for c in 0..n {
            s += a[r * n + c] * v[c];
        }
        out[r] = s;
    }
    out
}

fn mat_apply_transpose(n: usize, a: &[i64], v: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n];
    for c in 0..n {
        let mut s = 0;
        for r in 0..n {
            s += a[r * n + c] * v[r];
        }
        out[c] = s;
    }
    out
}

impl WeylElt {
    pub fn identity(n: usize) -> WeylElt {
        let mut mat = vec![0i64; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        WeylElt {
            inv: mat.clone(),
            mat,
        }
    }

    pub fn is_identity(&self) -> bool {
        let n = self.rank();
        self.mat
            .iter()
            .enumerate()
            .all(|(k, &v)| v == i64::from(k / n == k % n))
    }

    pub fn rank(&self) -> usize {
        (0..).find(|&n| n * n >= self.mat.len()).unwrap()
    }

    /// Action on a coweight in fundamental-coweight coordinates.
    pub fn act(&self, v: &[i64]) -> Vec<i64> {
        mat_apply(self.rank(), &self.mat, v)
    }

    pub fn act_inv(&self, v: &[i64]) -> Vec<i64> {
        mat_apply(self.rank(), &self.inv, v)
    }

    /// Action on a root given by simple-root coefficients. Roots transform by
    /// the inverse transpose of the coweight matrix, so that pairings are
    /// preserved: ⟨w·α, w·λ⟩ = ⟨α, λ⟩.
    pub fn act_root(&self, coeffs: &[i64]) -> Vec<i64> {
        mat_apply_transpose(self.rank(), &self.inv, coeffs)
    }

    pub fn act_root_inv(&self, coeffs: &[i64]) -> Vec<i64> {
        mat_apply_transpose(self.rank(), &self.mat, coeffs)
    }
}

/// All precomputed data for one finite root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub label: TypeLabel,
    /// `cartan[i][j] = ⟨αᵢ, αⱼ^∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots sorted by (height, coefficient vector).
    pub positive_roots: Vec<PosRoot>,
    /// Index of the highest root (last entry).
    pub highest: usize,
    /// `simple_idx[i]` = index of αᵢ in `positive_roots` (the canonical sort
    /// by (height, coefficients) does not keep simple roots in order).
    pub simple_idx: Vec<usize>,
    root_index: HashMap<Vec<i64>, usize>,
    simple_refl: Vec<WeylElt>,
    w0: WeylElt,
}

impl RootSystem {
    pub fn new(label: TypeLabel) -> RootSystem {
        let n = label.rank;
        let cartan = cartan_matrix(label);

        // Simple reflections on coweight coordinates: sᵢ·λ = λ − λᵢ·αᵢ^∨.
        let mut simple_refl = Vec::with_capacity(n);
        for i in 0..n {
            let mut mat = vec![0i64; n * n];
            for r in 0..n {
                mat[r * n + r] = 1;
                mat[r * n + i] -= cartan[r][i];
            }
            simple_refl.push(WeylElt {
                inv: mat.clone(),
                mat,
            });
        }

        // Positive roots with coroots: orbit closure of the simple pairs
        // (αᵢ, αᵢ^∨) under the simple reflections, keeping positives.
        let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        for i in 0..n {
            let mut coeffs = vec![0i64; n];
            coeffs[i] = 1;
            let coroot: Vec<i64> = (0..n).map(|r| cartan[r][i]).collect();
            seen.insert(coeffs.clone(), coroot.clone());
            queue.push((coeffs, coroot));
        }
        while let Some((coeffs, coroot)) = queue.pop() {
            for s in &simple_refl {
                let rc = s.act_root(&coeffs);
                if rc.iter().any(|&c| c < 0) {
                    continue;
                }
                if !seen.contains_key(&rc) {
                    let cr = s.act(&coroot);
                    seen.insert(rc.clone(), cr.clone());
                    queue.push((rc, cr));
                }
            }
        }
        let mut positive_roots: Vec<PosRoot> = seen
            .into_iter()
            .map(|(coeffs, coroot)| PosRoot {
                height: coeffs.iter().sum(),
                coeffs,
                coroot,
            })
            .collect();
        positive_roots.sort_by(|a, b| (a.height, &a.coeffs).cmp(&(b.height, &b.coeffs)));
        let highest = positive_roots.len() - 1;
        let root_index: HashMap<Vec<i64>, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coeffs.clone(), k))
            .collect();
        let simple_idx = (0..n)
            .map(|i| {
                let mut e = vec![0i64; n];
                e[i] = 1;
                root_index[&e]
            })
            .collect();

        let mut rs = RootSystem {
            label,
            cartan,
            positive_roots,
            highest,
            simple_idx,
            root_index,
            simple_refl,
            w0: WeylElt::identity(n),
        };
        // Longest element: the unique w with w·ρ^∨ = −ρ^∨.
        let minus_rho: Vec<i64> = vec![-1; n];
        let (_, w0) = rs.dominant_rep(&minus_rho);
        rs.w0 = w0;
        rs
    }

    pub fn from_name(name: &str) -> Result<RootSystem> {
        Ok(RootSystem::new(TypeLabel::parse(name)?))
    }

    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// ⟨α, λ⟩ for a root given by simple-root coefficients and a coweight in
    /// fundamental-coweight coordinates.
    pub fn pairing(&self, root_coeffs: &[i64], coweight: &[i64]) -> i64 {
        root_coeffs.iter().zip(coweight).map(|(c, l)| c * l).sum()
    }

    pub fn simple_reflection(&self, i: usize) -> &WeylElt {
        &self.simple_refl[i]
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt::identity(self.rank())
    }

    pub fn w0(&self) -> &WeylElt {
        &self.w0
    }

    pub fn weyl_mul(&self, a: &WeylElt, b: &WeylElt) -> WeylElt {
        let n = self.rank();
        WeylElt {
            mat: mat_mul(n, &a.mat, &b.mat),
            inv: mat_mul(n, &b.inv, &a.inv),
        }
    }

    pub fn weyl_inv(&self, a: &WeylElt) -> WeylElt {
        WeylElt {
            mat: a.inv.clone(),
            inv: a.mat.clone(),
        }
    }

    /// Reflection in the root hyperplane of positive root `k`, as a Weyl
    /// element: v ↦ v − ⟨α, v⟩ α^∨.
    pub fn reflection(&self, k: usize) -> WeylElt {
        let n = self.rank();
        let root = &self.positive_roots[k];
        let mut mat = vec![0i64; n * n];
        for r in 0..n {
            mat[r * n + r] = 1;
            for c in 0..n {
                mat[r * n + c] -= root.coroot[r] * root.coeffs[c];
            }
        }
        WeylElt {
            inv: mat.clone(),
            mat,
        }
    }

    /// Index (into `positive_roots`) and sign of a root given by coefficients.
    pub fn classify_root(&self, coeffs: &[i64]) -> (usize, i64) {
        if let Some(&k) = self.root_index.get(coeffs) {
            return (k, 1);
        }
        let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
        match self.root_index.get(&neg) {
            Some(&k) => (k, -1),
            None => panic!("not a root: {coeffs:?}"),
        }
    }

    pub fn is_positive_root(&self, coeffs: &[i64]) -> bool {
        self.root_index.contains_key(coeffs)
    }

    /// Number of positive roots sent to negative ones.
    pub fn weyl_length(&self, w: &WeylElt) -> i64 {
        self.positive_roots
            .iter()
            .filter(|r| w.act_root(&r.coeffs).iter().all(|&c| c <= 0))
            .count() as i64
    }

    /// Lexicographically least reduced word, built by repeatedly taking the
    /// least left descent (i with ℓ(sᵢw) < ℓ(w), i.e. w⁻¹·αᵢ negative).
    pub fn weyl_reduced_word(&self, w: &WeylElt) -> Vec<usize> {
        let n = self.rank();
        let mut word = Vec::new();
        let mut cur = w.clone();
        'outer: loop {
            for i in 0..n {
                let mut alpha = vec![0i64; n];
                alpha[i] = 1;
                if cur.act_root_inv(&alpha).iter().all(|&c| c <= 0) {
                    word.push(i);
                    cur = self.weyl_mul(self.simple_reflection(i), &cur);
                    continue 'outer;
                }
            }
            break;
        }
        debug_assert!(cur.is_identity());
        word
    }

    pub fn weyl_from_word(&self, word: &[usize]) -> WeylElt {
        word.iter().fold(self.identity(), |acc, &i| {
            self.weyl_mul(&acc, self.simple_reflection(i))
        })
    }

    /// Letters appearing in some (hence any) reduced word.
    pub fn support(&self, w: &WeylElt) -> Vec<usize> {
        let mut letters: Vec<usize> = self.weyl_reduced_word(w).to_vec();
        letters.sort_unstable();
        letters.dedup();
        letters
    }

    pub fn has_full_support(&self, w: &WeylElt) -> bool {
        self.support(w).len() == self.rank()
    }

    /// Dominant representative of a coweight orbit together with the
    /// minimal-length v with v·λ⁺ = λ.
    pub fn dominant_rep(&self, lambda: &[i64]) -> (Vec<i64>, WeylElt) {
        let mut mu = lambda.to_vec();
        let mut word = Vec::new();
        'outer: loop {
            for (i, &m) in mu.iter().enumerate() {
                if m < 0 {
                    word.push(i);
                    mu = self.simple_reflection(i).act(&mu);
                    continue 'outer;
                }
            }
            break;
        }
        (mu, self.weyl_from_word(&word))
    }

    pub fn is_dominant(&self, lambda: &[i64]) -> bool {
        lambda.iter().all(|&c| c >= 0)
    }

    /// ⟨α, λ⟩ ≠ 0 for every root α.
    pub fn is_regular(&self, lambda: &[i64]) -> bool {
        self.positive_roots
            .iter()
            .all(|r| self.pairing(&r.coeffs, lambda) != 0)
    }

    /// Σ_{α>0} height(α) = ℓ of the (possibly extended) translation by ρ^∨.
    pub fn sum_of_heights(&self) -> i64 {
        self.positive_roots.iter().map(|r| r.height).sum()
    }

    /// Coxeter number = height of the highest root + 1.
    pub fn coxeter_number(&self) -> i64 {
        self.positive_roots[self.highest].height + 1
    }

    /// Exact solve of (Cartan)·c = v. Returns integer coefficients when v is
    /// in the coroot lattice.
    pub fn coroot_coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        let n = self.rank();
        // Fraction-free Gaussian elimination on [C | v] over the integers.
        let mut m: Vec<Vec<num::rational::Ratio<i64>>> = (0..n)
            .map(|r| {
                (0..=n)
                    .map(|c| {
                        num::rational::Ratio::from_integer(if c < n {
                            self.cartan[r][c]
                        } else {
                            v[r]
                        })
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| m[r][col] != num::rational::Ratio::from_integer(0))?;
            m.swap(col, piv);
            let p = m[col][col];
            for c in col..=n {
                m[col][c] /= p;
            }
            for r in 0..n {
                if r != col && m[r][col] != num::rational::Ratio::from_integer(0) {
                    let f = m[r][col];
                    for c in col..=n {
                        let sub = f * m[col][c];
                        m[r][c] -= sub;
                    }
                }
            }
        }
        let mut out = Vec::with_capacity(n);
        for row in m.iter().take(n) {
            let x = row[n];
            if !x.is_integer() {
                return None;
            }
            out.push(x.to_integer());
        }
        Some(out)
    }

    pub fn in_coroot_lattice(&self, v: &[i64]) -> bool {
        self.coroot_coordinates(v).is_some()
    }

    /// The whole finite Weyl group in a canonical order: breadth-first from
    /// the identity, sorted by (length, lexicographically least word).
    /// Intended for small ranks where orbit and coset scans are needed.
    pub fn all_elements(&self) -> Vec<WeylElt> {
        let mut seen: HashMap<Vec<i64>, WeylElt> = HashMap::new();
        let id = self.identity();
        seen.insert(id.mat.clone(), id.clone());
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..self.rank() {
                    let u = self.weyl_mul(w, self.simple_reflection(i));
                    if !seen.contains_key(&u.mat) {
                        seen.insert(u.mat.clone(), u.clone());
                        next.push(u);
                    }
                }
            }
            frontier = next;
        }
        let mut all: Vec<WeylElt> = seen.into_values().collect();
        all.sort_by_cached_key(|w| (self.weyl_length(w), self.weyl_reduced_word(w)));
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    #[test]
    fn positive_root_counts_and_heights() {
        // (type, |Φ⁺|, Σ heights, Coxeter number)
        for (name, count, hsum, h) in [
            ("A1", 1, 1, 2),
            ("A2", 3, 4, 3),
            ("B2", 4, 7, 4),
            ("C2", 4, 7, 4),
            ("G2", 6, 16, 6),
            ("A3", 6, 10, 4),
            ("B3", 9, 22, 6),
            ("C3", 9, 22, 6),
            ("D4", 12, 28, 6),
            ("F4", 24, 110, 12),
            ("E6", 36, 156, 12),
        ] {
            let r = rs(name);
            assert_eq!(r.num_positive_roots(), count, "{name} |Φ⁺|");
            assert_eq!(r.sum_of_heights(), hsum, "{name} Σ ht");
            assert_eq!(r.coxeter_number(), h, "{name} Coxeter number");
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("A2").positive_roots[2].coeffs, vec![1, 1]);
        assert_eq!(rs("C2").positive_roots[3].coeffs, vec![2, 1]);
        // G2 with the [[2,-1],[-3,2]] Cartan matrix: highest root 3α₁+2α₂.
        assert_eq!(rs("G2").positive_roots[5].coeffs, vec![3, 2]);
        assert_eq!(rs("A3").positive_roots[5].coeffs, vec![1, 1, 1]);
    }

    #[test]
    fn highest_coroot() {
        // A2: α̃^∨ = α₁^∨ + α₂^∨ = (1,1); C2: α̃ = 2α₁+α₂ is long, α̃^∨ short.
        let a2 = rs("A2");
        assert_eq!(a2.positive_roots[a2.highest].coroot, vec![1, 1]);
        let c2 = rs("C2");
        assert_eq!(c2.positive_roots[c2.highest].coroot, vec![1, 0]);
    }

    #[test]
    fn w0_lengths_and_order() {
        for (name, len) in [("A1", 1), ("A2", 3), ("C2", 4), ("G2", 6), ("A3", 6)] {
            let r = rs(name);
            assert_eq!(r.weyl_length(r.w0()), len, "{name} ℓ(w₀)");
            let sq = r.weyl_mul(r.w0(), r.w0());
            assert!(sq.is_identity(), "{name} w₀² = 1");
        }
    }

    #[test]
    fn group_orders() {
        for (name, order) in [("A2", 6), ("C2", 8), ("G2", 12), ("A3", 24), ("B3", 48)] {
            assert_eq!(rs(name).all_elements().len(), order, "{name} |W|");
        }
    }

    #[test]
    fn reduced_words_are_lex_least_and_correct() {
        let r = rs("C2");
        for w in r.all_elements() {
            let word = r.weyl_reduced_word(&w);
            assert_eq!(word.len() as i64, r.weyl_length(&w));
            assert_eq!(r.weyl_from_word(&word), w);
            // Lex-least: brute-force all reduced words and compare.
            let mut words = Vec::new();
            enumerate_reduced(&r, &w, &mut Vec::new(), &mut words);
            words.sort();
            assert_eq!(word, words[0]);
        }
    }

    fn enumerate_reduced(
        r: &RootSystem,
        w: &WeylElt,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if w.is_identity() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..r.rank() {
            let mut alpha = vec![0i64; r.rank()];
            alpha[i] = 1;
            if w.act_root_inv(&alpha).iter().all(|&c| c <= 0) {
                prefix.push(i);
                let shorter = r.weyl_mul(r.simple_reflection(i), w);
                enumerate_reduced(r, &shorter, prefix, out);
                prefix.pop();
            }
        }
    }

    #[test]
    fn simple_reflection_action_matches_cartan_columns() {
        let r = rs("G2");
        let lam = vec![3, -2];
        let s0 = r.simple_reflection(0).act(&lam);
        // s₁·λ = λ − λ₁·(column 1 of Cartan) = (3,-2) − 3·(2,-3) = (-3,7).
        assert_eq!(s0, vec![-3, 7]);
    }

    #[test]
    fn pairing_preserved_by_weyl_action() {
        let r = rs("C2");
        let lam = vec![2, -1];
        for w in r.all_elements() {
            for root in &r.positive_roots {
                let wl = w.act(&lam);
                let wr = w.act_root(&root.coeffs);
                assert_eq!(r.pairing(&root.coeffs, &lam), r.pairing(&wr, &wl));
            }
        }
    }

    #[test]
    fn reflections_fix_pairing_zero_and_negate_root() {
        let r = rs("G2");
        for (k, root) in r.positive_roots.iter().enumerate() {
            let s = r.reflection(k);
            let img = s.act_root(&root.coeffs);
            let neg: Vec<i64> = root.coeffs.iter().map(|c| -c).collect();
            assert_eq!(img, neg);
            assert!(r.weyl_mul(&s, &s).is_identity());
        }
    }

    #[test]
    fn dominant_rep_minimality_against_group_scan() {
        let r = rs("A3");
        let all = r.all_elements();
        for lam in [[1i64, -2, 0], [-1, -1, -1], [0, 3, -2], [2, 0, 0]] {
            let (plus, v) = r.dominant_rep(&lam);
            assert!(r.is_dominant(&plus));
            assert_eq!(v.act(&plus), lam.to_vec());
            let best = all
                .iter()
                .filter(|u| u.act(&plus) == lam.to_vec())
                .map(|u| r.weyl_length(u))
                .min()
                .unwrap();
            assert_eq!(r.weyl_length(&v), best, "minimal length rep for {lam:?}");
        }
    }

    #[test]
    fn coroot_lattice_membership() {
        let a2 = rs("A2");
        assert_eq!(a2.coroot_coordinates(&[1, 1]), Some(vec![1, 1]));
        assert_eq!(a2.coroot_coordinates(&[3, 3]), Some(vec![3, 3]));
        assert_eq!(a2.coroot_coordinates(&[1, 0]), None);
        assert_eq!(a2.coroot_coordinates(&[3, 2]), None);
        let c2 = rs("C2");
        assert_eq!(c2.coroot_coordinates(&[1, 0]), Some(vec![1, 1]));
        assert_eq!(c2.coroot_coordinates(&[1, 1]), None);
        assert_eq!(c2.coroot_coordinates(&[2, 2]), Some(vec![3, 4]));
        let a3 = rs("A3");
        assert_eq!(a3.coroot_coordinates(&[2, 2, 2]), Some(vec![3, 4, 3]));
    }

    #[test]
    fn full_support_examples() {
        let a2 = rs("A2");
        assert!(a2.has_full_support(a2.w0()));
        assert!(!a2.has_full_support(a2.simple_reflection(0)));
        let s1s2 = a2.weyl_mul(a2.simple_reflection(0), a2.simple_reflection(1));
        assert!(a2.has_full_support(&s1s2));
    }
}
