//! Words in the Artin generators of the braid group on an even number of strands.
//!
//! Letters act top to bottom: `compose(a, b)` draws `a` above `b`. Exponent
//! runs are stored expanded, one letter per crossing.

use std::fmt;

use crate::error::{PlatError, Result};

/// A single generator `σ_index^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    index: usize,
    positive: bool,
}

impl BraidLetter {
    /// `sign` must be `+1` or `-1`; the index is 1-based.
    pub fn new(index: usize, sign: i32) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        assert!(sign == 1 || sign == -1, "letter sign must be +1 or -1");
        BraidLetter {
            index,
            positive: sign > 0,
        }
    }

    pub fn positive(index: usize) -> Self {
        Self::new(index, 1)
    }

    pub fn negative(index: usize) -> Self {
        Self::new(index, -1)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn sign(&self) -> i32 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn inverse(&self) -> Self {
        BraidLetter {
            index: self.index,
            positive: !self.positive,
        }
    }
}

/// A word in the alphabet of the `strands`-strand braid group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    /// The identity braid on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self> {
        if strands < 2 || !strands.is_multiple_of(2) {
            return Err(PlatError::InvalidStrandCount(strands));
        }
        Ok(BraidWord {
            strands,
            letters: Vec::new(),
        })
    }

    pub fn from_letters(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        let mut word = Self::identity(strands)?;
        for letter in letters {
            word.push(letter)?;
        }
        Ok(word)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: BraidLetter) -> Result<()> {
        if letter.index >= self.strands {
            return Err(PlatError::LetterOutOfRange {
                index: letter.index,
                max: self.strands - 1,
                strands: self.strands,
            });
        }
        self.letters.push(letter);
        Ok(())
    }

    /// Appends `σ_index^exponent`, expanded into `|exponent|` letters.
    pub fn push_power(&mut self, index: usize, exponent: i64) -> Result<()> {
        if index == 0 || index >= self.strands {
            return Err(PlatError::LetterOutOfRange {
                index,
                max: self.strands - 1,
                strands: self.strands,
            });
        }
        let sign = if exponent >= 0 { 1 } else { -1 };
        for _ in 0..exponent.unsigned_abs() {
            self.letters.push(BraidLetter::new(index, sign));
        }
        Ok(())
    }

    /// Concatenation with `self` drawn above `below`. No reduction.
    pub fn compose(&self, below: &BraidWord) -> Result<BraidWord> {
        if self.strands != below.strands {
            return Err(PlatError::StrandMismatch {
                left: self.strands,
                right: below.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&below.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(BraidLetter::inverse).collect(),
        }
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain.
    ///
    /// Free reduction is confluent, so a single stack pass gives the same
    /// result as any other deletion order.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<BraidLetter> = Vec::with_capacity(self.letters.len());
        for &letter in &self.letters {
            match stack.last() {
                Some(top) if *top == letter.inverse() => {
                    stack.pop();
                }
                _ => stack.push(letter),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// Strand permutation, 0-based: `perm[p]` is the bottom position reached
    /// by the strand that starts at top position `p`.
    ///
    /// With the top-to-bottom convention,
    /// `a.compose(b).permutation()[p] == b.permutation()[a.permutation()[p]]`.
    pub fn permutation(&self) -> Vec<usize> {
        // at[q] = which top strand currently occupies position q
        let mut at: Vec<usize> = (0..self.strands).collect();
        for letter in &self.letters {
            at.swap(letter.index - 1, letter.index);
        }
        let mut perm = vec![0; self.strands];
        for (position, &strand) in at.iter().enumerate() {
            perm[strand] = position;
        }
        perm
    }

    /// Run-length view: maximal runs of one generator with one sign.
    pub fn runs(&self) -> Vec<(usize, i64)> {
        let mut runs: Vec<(usize, i64)> = Vec::new();
        for letter in &self.letters {
            let sign = letter.sign() as i64;
            match runs.last_mut() {
                Some((index, exp)) if *index == letter.index && exp.signum() == sign => {
                    *exp += sign;
                }
                _ => runs.push((letter.index, sign)),
            }
        }
        runs
    }

    /// Parses whitespace-separated tokens `s<k>`, `s<k>^-1`, `s<k>^<e>`.
    pub fn parse(strands: usize, text: &str) -> Result<BraidWord> {
        let mut word = BraidWord::identity(strands)?;
        for token in text.split_whitespace() {
            let bad = |message: String| PlatError::Parse { line: 1, message };
            let body = token
                .strip_prefix('s')
                .ok_or_else(|| bad(format!("token `{token}` does not start with `s`")))?;
            let (index, exponent) = match body.split_once('^') {
                Some((i, e)) => (i, e),
                None => (body, "1"),
            };
            let index: usize = index
                .parse()
                .map_err(|_| bad(format!("bad generator index in `{token}`")))?;
            let exponent: i64 = exponent
                .parse()
                .map_err(|_| bad(format!("bad exponent in `{token}`")))?;
            word.push_power(index, exponent)?;
        }
        Ok(word)
    }
}

impl fmt::Display for BraidWord {
    /// Run-length form, e.g. `s2^4 s4^-6`; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let runs = self.runs();
        for (k, (index, exp)) in runs.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if *exp == 1 {
                write!(f, "s{index}")?;
            } else {
                write!(f, "s{index}^{exp}")?;
            }
        }
        Ok(())
    }
}
