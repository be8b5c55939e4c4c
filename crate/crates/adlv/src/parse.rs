//! Text and wire formats: the element grammar shared by the library and the
//! command line, its canonical writer, and the JSON gallery format.
//!
//! Element grammar — a `*`-separated product of factors, each one of
//!
//! * `1` — the identity,
//! * `w0` — the longest finite Weyl element,
//! * `s<k>` — a simple affine generator, `0 ≤ k ≤ rank` (`s0` is the
//!   affine reflection through the wall ⟨α̃,·⟩ = 1),
//! * `t[c1,...,cn]` — a pure translation in fundamental-coweight
//!   coordinates; the coordinates must lie in the coroot lattice.
//!
//! Whitespace around factors is ignored. Examples: `t[2,2]*w0`,
//! `s1*s2*s1`, `1`.
//!
//! The writer emits a canonical form — `t[λ]` first (omitted when λ = 0),
//! then `w0` or the lexicographically least reduced word of the spherical
//! direction — so `parse_element ∘ write_element` is the identity and equal
//! elements print identically.

use crate::affine::{affine_mul, generator, identity, pure_translation, AffineElement};
use crate::gallery::{Gallery, Step, StepKind};
use crate::root_system::RootSystem;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

fn parse_err(input: &str, msg: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        msg: msg.into(),
    }
}

fn parse_factor(rs: &RootSystem, input: &str, tok: &str) -> Result<AffineElement> {
    if tok == "1" {
        return Ok(identity(rs));
    }
    if tok == "w0" {
        return Ok(AffineElement {
            lambda: vec![0; rs.rank()],
            w: rs.w0().clone(),
        });
    }
    if let Some(rest) = tok.strip_prefix('s') {
        let k: usize = rest
            .parse()
            .map_err(|_| parse_err(input, format!("bad generator token `{tok}`")))?;
        if k > rs.rank() {
            return Err(parse_err(
                input,
                format!("generator index {k} out of range 0..={}", rs.rank()),
            ));
        }
        return Ok(generator(rs, k));
    }
    if let Some(inner) = tok.strip_prefix("t[").and_then(|r| r.strip_suffix(']')) {
        let coords = inner
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<i64>, _>>()
            .map_err(|_| parse_err(input, format!("bad coweight coordinates in `{tok}`")))?;
        if coords.len() != rs.rank() {
            return Err(parse_err(
                input,
                format!(
                    "translation needs {} coordinates, got {}",
                    rs.rank(),
                    coords.len()
                ),
            ));
        }
        return pure_translation(rs, &coords);
    }
    Err(parse_err(input, format!("unrecognized factor `{tok}`")))
}

/// Parse an affine Weyl group element from the shared grammar.
pub fn parse_element(rs: &RootSystem, input: &str) -> Result<AffineElement> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(parse_err(input, "empty element expression"));
    }
    let mut acc = identity(rs);
    for raw in trimmed.split('*') {
        let tok = raw.trim();
        if tok.is_empty() {
            return Err(parse_err(input, "empty factor between `*`s"));
        }
        let factor = parse_factor(rs, input, tok)?;
        acc = affine_mul(rs, &acc, &factor);
    }
    Ok(acc)
}

/// Canonical text form of an element: `t[λ]` (when λ ≠ 0) times the
/// spherical direction, with `*` between factors and `1` for the identity.
pub fn write_element(rs: &RootSystem, x: &AffineElement) -> String {
    let mut parts: Vec<String> = Vec::new();
    if x.lambda.iter().any(|&c| c != 0) {
        let inner: Vec<String> = x.lambda.iter().map(|c| c.to_string()).collect();
        parts.push(format!("t[{}]", inner.join(",")));
    }
    if !x.w.is_identity() {
        if x.w == *rs.w0() {
            parts.push("w0".to_string());
        } else {
            for i in rs.weyl_reduced_word(&x.w) {
                parts.push(format!("s{}", i + 1));
            }
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// One gallery step on the wire: the panel type and `"C"` (cross) or `"F"`
/// (fold).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDto {
    pub gen: usize,
    pub kind: String,
}

/// A gallery on the wire. Field order is fixed by declaration order so
/// serialized bytes are stable across runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GalleryDto {
    pub first: String,
    pub steps: Vec<StepDto>,
    pub vertex_marked: bool,
}

impl GalleryDto {
    pub fn from_gallery(rs: &RootSystem, g: &Gallery) -> GalleryDto {
        GalleryDto {
            first: write_element(rs, &g.first),
            steps: g
                .steps
                .iter()
                .map(|s| StepDto {
                    gen: s.gen,
                    kind: match s.kind {
                        StepKind::Cross => "C".to_string(),
                        StepKind::Fold => "F".to_string(),
                    },
                })
                .collect(),
            vertex_marked: g.vertex_marked,
        }
    }

    pub fn to_gallery(&self, rs: &RootSystem) -> Result<Gallery> {
        let first = parse_element(rs, &self.first)?;
        let steps = self
            .steps
            .iter()
            .map(|s| {
                if s.gen > rs.rank() {
                    return Err(Error::InvalidGallery(format!(
                        "step generator {} out of range 0..={}",
                        s.gen,
                        rs.rank()
                    )));
                }
                let kind = match s.kind.as_str() {
                    "C" => StepKind::Cross,
                    "F" => StepKind::Fold,
                    other => {
                        return Err(Error::InvalidGallery(format!(
                            "step kind must be \"C\" or \"F\", got {other:?}"
                        )))
                    }
                };
                Ok(Step { gen: s.gen, kind })
            })
            .collect::<Result<Vec<Step>>>()?;
        Ok(Gallery {
            first,
            steps,
            vertex_marked: self.vertex_marked,
        })
    }
}

/// Serialize a gallery to its JSON wire form (single line, stable bytes).
pub fn gallery_to_json(rs: &RootSystem, g: &Gallery) -> String {
    serde_json::to_string(&GalleryDto::from_gallery(rs, g)).expect("gallery DTOs are plain data")
}

/// Parse a gallery from its JSON wire form.
pub fn gallery_from_json(rs: &RootSystem, json: &str) -> Result<Gallery> {
    let dto: GalleryDto = serde_json::from_str(json).map_err(|e| Error::Parse {
        input: json.to_string(),
        msg: format!("invalid gallery JSON: {e}"),
    })?;
    dto.to_gallery(rs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{affine_length, enumerate_up_to_length, from_parts};
    use crate::gallery::fold_at;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    #[test]
    fn grammar_accepts_the_shared_examples() {
        let a2 = rs("A2");
        let x = parse_element(&a2, "t[2,2]*w0").unwrap();
        assert_eq!(x.lambda, vec![2, 2]);
        assert_eq!(x.w, *a2.w0());
        assert_eq!(affine_length(&a2, &x), 5);

        assert!(parse_element(&a2, "1").unwrap().is_identity());
        assert_eq!(parse_element(&a2, "s1").unwrap().w, *a2.simple_reflection(0));
        assert_eq!(
            parse_element(&a2, "s0").unwrap().key(),
            crate::affine::generator(&a2, 0).key()
        );
        // Whitespace is insignificant.
        assert_eq!(
            parse_element(&a2, " t[2,2] * w0 ").unwrap().key(),
            x.key()
        );
        // Products multiply left to right: s1*s2 ≠ s2*s1.
        let s1s2 = parse_element(&a2, "s1*s2").unwrap();
        let s2s1 = parse_element(&a2, "s2*s1").unwrap();
        assert_ne!(s1s2.key(), s2s1.key());
        assert_eq!(s1s2.w, a2.weyl_from_word(&[0, 1]));
    }

    #[test]
    fn grammar_rejects_malformed_input() {
        let a2 = rs("A2");
        for bad in [
            "", "  ", "t[1]", "t[1,2,3]", "t[a,b]", "s9", "sx", "w1", "q", "s1**s2", "t[1,2",
        ] {
            assert!(
                matches!(parse_element(&a2, bad), Err(Error::Parse { .. })),
                "expected parse error for {bad:?}"
            );
        }
        // Lattice membership is checked, not silently accepted.
        assert!(matches!(
            parse_element(&a2, "t[1,0]"),
            Err(Error::NotInCorootLattice(_))
        ));
        // C2: second coordinate must be even.
        assert!(matches!(
            parse_element(&rs("C2"), "t[0,1]"),
            Err(Error::NotInCorootLattice(_))
        ));
    }

    #[test]
    fn writer_is_canonical_and_round_trips() {
        let a2 = rs("A2");
        assert_eq!(write_element(&a2, &identity(&a2)), "1");
        let x = from_parts(&a2, &[2, 2], a2.w0().clone()).unwrap();
        assert_eq!(write_element(&a2, &x), "t[2,2]*w0");
        let y = from_parts(&a2, &[3, 0], a2.weyl_from_word(&[0, 1])).unwrap();
        assert_eq!(write_element(&a2, &y), "t[3,0]*s1*s2");

        for sys in ["A2", "C2"] {
            let r = rs(sys);
            for x in enumerate_up_to_length(&r, 4) {
                let text = write_element(&r, &x);
                let back = parse_element(&r, &text).unwrap();
                assert_eq!(back.key(), x.key(), "round trip failed for `{text}`");
            }
        }
    }

    #[test]
    fn gallery_json_bytes_are_stable() {
        let a2 = rs("A2");
        let mut g = Gallery::minimal(identity(&a2), &[0, 1, 2, 1, 0], false);
        g = fold_at(&g, 2).unwrap();
        let json = gallery_to_json(&a2, &g);
        assert_eq!(
            json,
            "{\"first\":\"1\",\"steps\":[{\"gen\":0,\"kind\":\"C\"},{\"gen\":1,\"kind\":\"C\"},\
             {\"gen\":2,\"kind\":\"F\"},{\"gen\":1,\"kind\":\"C\"},{\"gen\":0,\"kind\":\"C\"}],\
             \"vertex_marked\":false}"
        );
        assert_eq!(gallery_to_json(&a2, &g), json);
        let back = gallery_from_json(&a2, &json).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn gallery_json_rejects_malformed_payloads() {
        let a2 = rs("A2");
        assert!(matches!(
            gallery_from_json(&a2, "not json"),
            Err(Error::Parse { .. })
        ));
        let bad_kind = "{\"first\":\"1\",\"steps\":[{\"gen\":0,\"kind\":\"X\"}],\"vertex_marked\":false}";
        assert!(matches!(
            gallery_from_json(&a2, bad_kind),
            Err(Error::InvalidGallery(_))
        ));
        let bad_gen = "{\"first\":\"1\",\"steps\":[{\"gen\":7,\"kind\":\"C\"}],\"vertex_marked\":false}";
        assert!(matches!(
            gallery_from_json(&a2, bad_gen),
            Err(Error::InvalidGallery(_))
        ));
        let bad_first =
            "{\"first\":\"t[1,0]\",\"steps\":[],\"vertex_marked\":false}";
        assert!(matches!(
            gallery_from_json(&a2, bad_first),
            Err(Error::NotInCorootLattice(_))
        ));
    }

    #[test]
    fn vertex_marked_galleries_round_trip() {
        let a2 = rs("A2");
        let g = Gallery::minimal(identity(&a2), &[0, 1], true);
        let back = gallery_from_json(&a2, &gallery_to_json(&a2, &g)).unwrap();
        assert!(back.vertex_marked);
        assert_eq!(back, g);
    }
}
