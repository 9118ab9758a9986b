//! Hilden moves: braids whose multiplication on either side leaves the plat
//! closure's isotopy type unchanged.
//!
//! Nothing here decides membership in a Hilden double coset. The module
//! applies moves and runs an invariant-based falsification harness.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{BraidLetter, BraidWord};
use crate::canonical::{canonical_form, SymmetryElement};
use crate::diagram::PlanarDiagram;
use crate::error::{PlatError, Result};
use crate::invariants::determinant;
use crate::plat::{ClosureStyle, TwistMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HildenKind {
    /// `σ_i`
    H1,
    /// `σ_{i+1} σ_{i+2} σ_i σ_{i+1}`
    H2,
    /// `σ_{i+1} σ_i σ_{i+2}^{-1} σ_{i+1}^{-1}`
    H3,
    /// `σ_{i+1}^{-1} σ_i^{-1} σ_{i+2} σ_{i+1}`
    H4,
}

impl HildenKind {
    pub const ALL: [HildenKind; 4] = [HildenKind::H1, HildenKind::H2, HildenKind::H3, HildenKind::H4];

    pub fn number(self) -> u8 {
        match self {
            HildenKind::H1 => 1,
            HildenKind::H2 => 2,
            HildenKind::H3 => 3,
            HildenKind::H4 => 4,
        }
    }
}

/// A generator `h^kind_index`, or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HildenMove {
    pub kind: HildenKind,
    /// Odd, 1-based.
    pub index: usize,
    pub inverse: bool,
}

impl HildenMove {
    pub fn new(kind: HildenKind, index: usize) -> Self {
        HildenMove {
            kind,
            index,
            inverse: false,
        }
    }

    pub fn inverted(self) -> Self {
        HildenMove {
            inverse: !self.inverse,
            ..self
        }
    }

    /// The literal generator word on `strands` strands.
    pub fn expand(&self, strands: usize) -> Result<BraidWord> {
        let i = self.index;
        if i.is_multiple_of(2) {
            return Err(PlatError::IndexParity(i));
        }
        let max = match self.kind {
            HildenKind::H1 => strands.saturating_sub(1),
            _ => strands.saturating_sub(3),
        };
        if i == 0 || i > max {
            return Err(PlatError::IndexRange {
                kind: self.kind.number(),
                index: i,
                strands,
            });
        }
        let l = |k: usize, s: i32| BraidLetter::new(k, s);
        let letters = match self.kind {
            HildenKind::H1 => vec![l(i, 1)],
            HildenKind::H2 => vec![l(i + 1, 1), l(i + 2, 1), l(i, 1), l(i + 1, 1)],
            HildenKind::H3 => vec![l(i + 1, 1), l(i, 1), l(i + 2, -1), l(i + 1, -1)],
            HildenKind::H4 => vec![l(i + 1, -1), l(i, -1), l(i + 2, 1), l(i + 1, 1)],
        };
        let word = BraidWord::from_letters(strands, letters)?;
        Ok(if self.inverse { word.inverse() } else { word })
    }

    /// Every generator (without inverses) that fits on `strands` strands.
    pub fn generators(strands: usize) -> Vec<HildenMove> {
        let mut out = Vec::new();
        for kind in HildenKind::ALL {
            for index in (1..strands).step_by(2) {
                let mv = HildenMove::new(kind, index);
                if mv.expand(strands).is_ok() {
                    out.push(mv);
                }
            }
        }
        out
    }
}

impl fmt::Display for HildenMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{}@{}", self.kind.number(), self.index)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

impl FromStr for HildenMove {
    type Err = PlatError;

    /// `h<kind>@<index>`, optionally followed by `^-1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || PlatError::Parse {
            line: 1,
            message: format!("`{s}` is not a Hilden move like `h2@1` or `h3@1^-1`"),
        };
        let s = s.trim();
        let (body, inverse) = match s.strip_suffix("^-1") {
            Some(body) => (body, true),
            None => (s, false),
        };
        let (kind, index) = body.strip_prefix('h').and_then(|b| b.split_once('@')).ok_or_else(bad)?;
        let kind = match kind {
            "1" => HildenKind::H1,
            "2" => HildenKind::H2,
            "3" => HildenKind::H3,
            "4" => HildenKind::H4,
            _ => return Err(bad()),
        };
        let index = index.parse().map_err(|_| bad())?;
        Ok(HildenMove { kind, index, inverse })
    }
}

/// Parses a comma-separated move list; empty input means no moves.
pub fn parse_moves(text: &str) -> Result<Vec<HildenMove>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

/// `left_1 ⋯ left_k · word · right_1 ⋯ right_l`, with the left moves drawn above.
pub fn apply_moves(word: &BraidWord, left: &[HildenMove], right: &[HildenMove]) -> Result<BraidWord> {
    let strands = word.strands();
    let mut out = BraidWord::identity(strands)?;
    for mv in left {
        out = out.compose(&mv.expand(strands)?)?;
    }
    out = out.compose(word)?;
    for mv in right {
        out = out.compose(&mv.expand(strands)?)?;
    }
    Ok(out)
}

/// Product of `length` generators or inverses, drawn uniformly from every
/// legal move; deterministic in `seed`.
pub fn random_hilden_element(strands: usize, length: usize, seed: u64) -> Result<BraidWord> {
    random_moves(strands, length, &mut ChaCha8Rng::seed_from_u64(seed))
        .into_iter()
        .try_fold(BraidWord::identity(strands)?, |acc, mv| {
            acc.compose(&mv.expand(strands)?)
        })
}

fn random_moves(strands: usize, length: usize, rng: &mut impl Rng) -> Vec<HildenMove> {
    let generators = HildenMove::generators(strands);
    (0..length)
        .map(|_| {
            let mv = generators[rng.gen_range(0..generators.len())];
            if rng.gen_bool(0.5) {
                mv.inverted()
            } else {
                mv
            }
        })
        .collect()
}

/// Orientation-free closure data compared by the harness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureFingerprint {
    pub components: usize,
    pub determinant: BigInt,
}

impl ClosureFingerprint {
    pub fn of(word: &BraidWord) -> Self {
        let d = PlanarDiagram::plat_closure(word, ClosureStyle::Standard);
        ClosureFingerprint {
            components: d.component_count(),
            determinant: determinant(&d),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetVerdict {
    /// The two matrices are identical.
    Identical,
    /// The matrices differ by a rotation, so the words share a double coset.
    RotationEqual,
    /// Closure invariants differ, so the cosets are distinct.
    ProvablyDistinct,
    /// Canonical forms differ; sampling found nothing contradicting that.
    DistinctCanonicalForms,
}

impl fmt::Display for CosetVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CosetVerdict::Identical => "identical",
            CosetVerdict::RotationEqual => "rotation-equal",
            CosetVerdict::ProvablyDistinct => "provably-distinct",
            CosetVerdict::DistinctCanonicalForms => "distinct-canonical-forms",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetReport {
    pub verdict: CosetVerdict,
    /// False means a sample contradicted the uniqueness statement (or the
    /// implementation is wrong).
    pub consistent: bool,
    /// The rotation taking the first matrix to the second, when one exists.
    pub rotation: Option<SymmetryElement>,
    pub samples: usize,
    /// Sampled translates whose closure fingerprint differed from the target's.
    pub fingerprint_mismatches: usize,
    /// Sampled translates that freely reduced to the second word.
    pub word_collisions: usize,
}

/// Falsification harness for double-coset uniqueness.
///
/// For rotation-related matrices every sampled translate `h·b1·h'` must keep
/// the closure fingerprint of `b2`. For matrices with different canonical
/// forms no sampled translate may reduce to the word of `b2` (that would
/// exhibit two distinct 4-highly twisted words in one double coset).
pub fn coset_consistency(
    first: &TwistMatrix,
    second: &TwistMatrix,
    samples: usize,
    translate_length: usize,
    seed: u64,
) -> Result<CosetReport> {
    let canon_first = canonical_form(first)?;
    let canon_second = canonical_form(second)?;
    let b1 = first.to_braid_word();
    let b2 = second.to_braid_word();
    if b1.strands() != b2.strands() {
        return Ok(CosetReport {
            verdict: CosetVerdict::ProvablyDistinct,
            consistent: canon_first != canon_second,
            rotation: None,
            samples: 0,
            fingerprint_mismatches: 0,
            word_collisions: 0,
        });
    }
    let target = ClosureFingerprint::of(&b2);
    let target_reduced = b2.free_reduce();
    let rotation = SymmetryElement::ALL
        .into_iter()
        .find(|&g| crate::canonical::apply(g, first) == *second);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let strands = b1.strands();
    let mut mismatches = 0;
    let mut collisions = 0;
    for _ in 0..samples {
        let left = random_moves(strands, translate_length, &mut rng);
        let right = random_moves(strands, translate_length, &mut rng);
        let translate = apply_moves(&b1, &left, &right)?;
        if ClosureFingerprint::of(&translate) != target {
            mismatches += 1;
        }
        if translate.free_reduce() == target_reduced {
            collisions += 1;
        }
    }

    let (verdict, consistent) = if first == second {
        (CosetVerdict::Identical, mismatches == 0)
    } else if rotation.is_some() {
        (CosetVerdict::RotationEqual, mismatches == 0)
    } else if ClosureFingerprint::of(&b1) != target {
        (CosetVerdict::ProvablyDistinct, canon_first != canon_second && collisions == 0)
    } else {
        (CosetVerdict::DistinctCanonicalForms, canon_first != canon_second && collisions == 0)
    };
    Ok(CosetReport {
        verdict,
        consistent,
        rotation,
        samples,
        fingerprint_mismatches: mismatches,
        word_collisions: collisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_words() {
        let w = |mv: HildenMove| mv.expand(8).unwrap().to_string();
        assert_eq!(w(HildenMove::new(HildenKind::H1, 3)), "s3");
        assert_eq!(w(HildenMove::new(HildenKind::H2, 1)), "s2 s3 s1 s2");
        assert_eq!(w(HildenMove::new(HildenKind::H3, 1)), "s2 s1 s3^-1 s2^-1");
        assert_eq!(w(HildenMove::new(HildenKind::H4, 1)), "s2^-1 s1^-1 s3 s2");
    }

    #[test]
    fn index_constraints() {
        assert_eq!(HildenMove::new(HildenKind::H1, 2).expand(8), Err(PlatError::IndexParity(2)));
        assert!(HildenMove::new(HildenKind::H1, 7).expand(8).is_ok());
        assert_eq!(
            HildenMove::new(HildenKind::H2, 7).expand(8),
            Err(PlatError::IndexRange { kind: 2, index: 7, strands: 8 })
        );
        assert!(HildenMove::new(HildenKind::H3, 5).expand(8).is_ok());
        assert_eq!(HildenMove::generators(8).len(), 4 + 3 * 3);
        assert_eq!(HildenMove::generators(2).len(), 1);
    }

    #[test]
    fn h2_squared_then_sigma_one() {
        // composition sanity: h^2_1 · σ1 on 4 strands
        let h2 = HildenMove::new(HildenKind::H2, 1).expand(4).unwrap();
        let s1 = BraidWord::parse(4, "s1").unwrap();
        let word = h2.compose(&s1).unwrap();
        assert_eq!(word.to_string(), "s2 s3 s1 s2 s1");
    }

    #[test]
    fn applying_moves() {
        let b = BraidWord::parse(4, "s2^-3").unwrap();
        assert_eq!(apply_moves(&b, &[], &[]).unwrap(), b);
        let out = apply_moves(&b, &[HildenMove::new(HildenKind::H1, 1)], &[]).unwrap();
        assert_eq!(out.to_string(), "s1 s2^-3");
        assert_eq!(out.len(), 4);
    }

    #[test]
    fn move_syntax() {
        let moves = parse_moves("h2@1, h1@3,h4@1^-1").unwrap();
        assert_eq!(moves.len(), 3);
        assert_eq!(moves[2], HildenMove::new(HildenKind::H4, 1).inverted());
        assert_eq!(moves[2].to_string(), "h4@1^-1");
        assert!(parse_moves("").unwrap().is_empty());
        assert!(parse_moves("h5@1").is_err());
        assert!(parse_moves("g1@1").is_err());
    }

    #[test]
    fn generators_preserve_the_bridge_pairing() {
        for strands in [4, 6, 8] {
            for mv in HildenMove::generators(strands) {
                for mv in [mv, mv.inverted()] {
                    let perm = mv.expand(strands).unwrap().permutation();
                    for p in (0..strands).step_by(2) {
                        assert_eq!(perm[p] / 2, perm[p + 1] / 2, "{mv} on {strands}");
                    }
                }
            }
        }
    }

    #[test]
    fn random_elements() {
        assert!(random_hilden_element(8, 0, 1).unwrap().is_empty());
        let a = random_hilden_element(8, 6, 42).unwrap();
        assert_eq!(a, random_hilden_element(8, 6, 42).unwrap());
        assert_ne!(a, random_hilden_element(8, 6, 43).unwrap());
        for seed in 0..1000 {
            let perm = random_hilden_element(8, 5, seed).unwrap().permutation();
            for p in (0..8).step_by(2) {
                assert_eq!(perm[p] / 2, perm[p + 1] / 2);
            }
        }
    }

    #[test]
    fn random_element_golden() {
        let w = random_hilden_element(6, 3, 7).unwrap();
        assert_eq!(w.to_string(), GOLDEN_6_3_7);
    }

    const GOLDEN_6_3_7: &str = "s3^-1 s4 s3 s5^-1 s4^-1 s2 s3 s1^-1 s2^-1";
}
