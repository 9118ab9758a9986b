//! Continued fractions with large partial quotients and the Schubert pair
//! of a 3-highly twisted 2-bridge knot or link.
//!
//! All arithmetic is exact.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{PlatError, Result};
use crate::plat::TwistMatrix;

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q` or a bare integer.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || PlatError::Parse {
        line: 1,
        message: format!("`{text}` is not a rational number"),
    };
    let (num, den) = match text.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `[a0; a1, …, ak]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CFExpansion {
    coefficients: Vec<i64>,
}

impl CFExpansion {
    pub fn new(coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(PlatError::EmptyExpansion);
        }
        Ok(CFExpansion { coefficients })
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Every partial quotient after the integer part has modulus >= c.
    pub fn is_highly_twisted(&self, c: u64) -> bool {
        self.coefficients[1..].iter().all(|a| a.unsigned_abs() >= c)
    }
}

impl fmt::Display for CFExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.coefficients[0])?;
        for (k, a) in self.coefficients[1..].iter().enumerate() {
            write!(f, "{}{a}", if k == 0 { "; " } else { ", " })?;
        }
        write!(f, "]")
    }
}

/// Exact value of `a0 + 1/(a1 + 1/(… + 1/ak))`.
pub fn cf_evaluate(expansion: &CFExpansion) -> Result<Rational> {
    let mut coeffs = expansion.coefficients.iter().rev();
    let mut value = Rational::from_integer(BigInt::from(*coeffs.next().expect("nonempty")));
    for &a in coeffs {
        if value.is_zero() {
            return Err(PlatError::DivisionByZeroTail);
        }
        value = Rational::from_integer(BigInt::from(a)) + value.recip();
    }
    Ok(value)
}

/// The unique expansion of `r` whose partial quotients after the first all
/// have modulus at least 3.
///
/// Each partial quotient is the integer nearest to the current remainder;
/// the walk stops at the first tie or undersized quotient, since no other
/// choice could produce a valid expansion.
pub fn cf_reconstruct(r: &Rational) -> Result<CFExpansion> {
    let not_representable = || PlatError::NotRepresentable(format_rational(r));
    let half = rational(1, 2);
    let mut x = r.clone();
    let mut coefficients = Vec::new();
    loop {
        let floor = x.floor();
        let frac = &x - &floor;
        let nearest = match frac.cmp(&half) {
            std::cmp::Ordering::Less => floor,
            std::cmp::Ordering::Greater => floor + Rational::one(),
            std::cmp::Ordering::Equal => return Err(not_representable()),
        };
        let a = nearest.to_integer().to_i64().ok_or_else(not_representable)?;
        if !coefficients.is_empty() && a.unsigned_abs() < 3 {
            return Err(not_representable());
        }
        coefficients.push(a);
        let tail = &x - &nearest;
        if tail.is_zero() {
            return CFExpansion::new(coefficients);
        }
        x = tail.recip();
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Unordered pair `{r, r'}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchubertPair {
    // kept sorted so equality is set equality
    low: Rational,
    high: Rational,
}

impl SchubertPair {
    pub fn new(a: Rational, b: Rational) -> Self {
        if a <= b {
            SchubertPair { low: a, high: b }
        } else {
            SchubertPair { low: b, high: a }
        }
    }

    pub fn members(&self) -> (&Rational, &Rational) {
        (&self.low, &self.high)
    }

    pub fn is_singleton(&self) -> bool {
        self.low == self.high
    }
}

impl fmt::Display for SchubertPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", format_rational(&self.low), format_rational(&self.high))
    }
}

fn check_coefficients(coeffs: &[i64]) -> Result<()> {
    if coeffs.len().is_multiple_of(2) {
        return Err(PlatError::EvenCoefficientCount(coeffs.len()));
    }
    if let Some((position, &value)) = coeffs.iter().enumerate().find(|(_, a)| a.unsigned_abs() < 3) {
        return Err(PlatError::CoefficientTooSmall {
            position: position + 1,
            value,
        });
    }
    Ok(())
}

/// `[a1; -a2, a3, …]`: entries in even positions are negated.
fn alternating_expansion(coeffs: impl Iterator<Item = i64>) -> CFExpansion {
    let v = coeffs
        .enumerate()
        .map(|(k, a)| if k % 2 == 1 { -a } else { a })
        .collect();
    CFExpansion::new(v).expect("nonempty")
}

pub fn schubert_pair(coeffs: &[i64]) -> Result<SchubertPair> {
    check_coefficients(coeffs)?;
    let r = cf_evaluate(&alternating_expansion(coeffs.iter().copied()))?;
    let r_rev = cf_evaluate(&alternating_expansion(coeffs.iter().rev().copied()))?;
    Ok(SchubertPair::new(r, r_rev))
}

pub fn twobridge_equivalent(a: &[i64], b: &[i64]) -> Result<bool> {
    Ok(schubert_pair(a)? == schubert_pair(b)?)
}

/// First entry of every row, top to bottom.
pub fn left_boundary_coeffs(matrix: &TwistMatrix) -> Vec<i64> {
    matrix.rows().iter().map(|row| row[0]).collect()
}

/// Last entry of every row, top to bottom.
pub fn right_boundary_coeffs(matrix: &TwistMatrix) -> Vec<i64> {
    matrix.rows().iter().map(|row| *row.last().expect("rows are nonempty")).collect()
}

/// 4-plat whose twist regions are the given coefficients: odd rows twist
/// the middle pair, even rows the left pair. This is the closed-up boundary
/// 2-bridge diagram for a column of a wider plat.
pub fn two_bridge_plat(coeffs: &[i64]) -> Result<TwistMatrix> {
    let rows = coeffs
        .iter()
        .enumerate()
        .map(|(k, &a)| if k % 2 == 0 { vec![a] } else { vec![a, 0] })
        .collect();
    TwistMatrix::new(2, rows)
}

/// `|numerator|` of a rational, which for a 2-bridge link `p/q` is its
/// determinant.
pub fn numerator_abs(r: &Rational) -> BigInt {
    r.numer().abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(v: &[i64]) -> CFExpansion {
        CFExpansion::new(v.to_vec()).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(cf_evaluate(&cf(&[4])).unwrap(), rational(4, 1));
        assert_eq!(cf_evaluate(&cf(&[0, 3, -3])).unwrap(), rational(3, 8));
        assert_eq!(cf_evaluate(&cf(&[3, -3, 3])).unwrap(), rational(21, 8));
        assert_eq!(cf_evaluate(&cf(&[1, 1, -1])), Err(PlatError::DivisionByZeroTail));
        assert_eq!(CFExpansion::new(vec![]), Err(PlatError::EmptyExpansion));
    }

    #[test]
    fn reconstruction_examples() {
        assert_eq!(cf_reconstruct(&rational(17, 4)).unwrap(), cf(&[4, 4]));
        assert_eq!(cf_reconstruct(&rational(21, 8)).unwrap(), cf(&[3, -3, 3]));
        assert_eq!(cf_reconstruct(&rational(-5, 1)).unwrap(), cf(&[-5]));
        assert!(matches!(cf_reconstruct(&rational(1, 2)), Err(PlatError::NotRepresentable(_))));
        // 7/3 = 2 + 1/3 is fine; 12/5 = 2 + 2/5 needs a quotient of 2 or 3 with a tie-free tail
        assert_eq!(cf_reconstruct(&rational(7, 3)).unwrap(), cf(&[2, 3]));
        assert!(cf_reconstruct(&rational(12, 5)).is_err());
    }

    #[test]
    fn one_half_has_no_short_expansion() {
        // exhaustive: no expansion of length <= 4 with quotients in ±[3, 9]
        // after an arbitrary integer part in [-3, 3] evaluates to 1/2
        let quotients: Vec<i64> = (3..=9).flat_map(|a| [a, -a]).collect();
        let target = rational(1, 2);
        for a0 in -3..=3 {
            let mut stack: Vec<Vec<i64>> = vec![vec![a0]];
            while let Some(v) = stack.pop() {
                if let Ok(x) = cf_evaluate(&cf(&v)) {
                    assert_ne!(x, target, "{v:?}");
                }
                if v.len() < 4 {
                    for &q in &quotients {
                        let mut w = v.clone();
                        w.push(q);
                        stack.push(w);
                    }
                }
            }
        }
    }

    #[test]
    fn schubert_pair_examples() {
        let p = schubert_pair(&[3]).unwrap();
        assert!(p.is_singleton());
        assert_eq!(p.members().0, &rational(3, 1));
        let p = schubert_pair(&[3, 3, 3]).unwrap();
        assert!(p.is_singleton());
        assert_eq!(p.members().0, &rational(21, 8));
        assert_eq!(schubert_pair(&[3, 3, 4]).unwrap(), schubert_pair(&[4, 3, 3]).unwrap());
        assert_eq!(schubert_pair(&[3, 3]), Err(PlatError::EvenCoefficientCount(2)));
        assert_eq!(
            schubert_pair(&[3, 2, 3]),
            Err(PlatError::CoefficientTooSmall { position: 2, value: 2 })
        );
    }

    #[test]
    fn twobridge_equivalence_examples() {
        assert!(twobridge_equivalent(&[3, 3, 4], &[4, 3, 3]).unwrap());
        assert!(twobridge_equivalent(&[3, 3, 4], &[3, 3, 4]).unwrap());
        assert!(!twobridge_equivalent(&[3, 3, 4], &[3, 4, 3]).unwrap());
        assert_ne!(schubert_pair(&[3, 3, 4]).unwrap(), schubert_pair(&[3, 4, 3]).unwrap());
    }

    #[test]
    fn boundary_coefficients() {
        let m = TwistMatrix::new(4, vec![vec![-4, -4, -4], vec![-4, 6, -4, -4], vec![-4, -4, -6]]).unwrap();
        assert_eq!(left_boundary_coeffs(&m), vec![-4, -4, -4]);
        assert_eq!(right_boundary_coeffs(&m), vec![-4, -4, -6]);
        let narrow = TwistMatrix::new(2, vec![vec![5], vec![3, 4], vec![-6]]).unwrap();
        assert_eq!(left_boundary_coeffs(&narrow), vec![5, 3, -6]);
        assert_eq!(right_boundary_coeffs(&narrow), vec![5, 4, -6]);
        // one column: odd rows agree
        let single = TwistMatrix::new(2, vec![vec![7]]).unwrap();
        assert_eq!(left_boundary_coeffs(&single), right_boundary_coeffs(&single));
    }

    #[test]
    fn parsing_rationals() {
        assert_eq!(parse_rational("21/8").unwrap(), rational(21, 8));
        assert_eq!(parse_rational("-6/4").unwrap(), rational(-3, 2));
        assert_eq!(parse_rational("5").unwrap(), rational(5, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(cf(&[3, -3, 3]).to_string(), "[3; -3, 3]");
    }
}
