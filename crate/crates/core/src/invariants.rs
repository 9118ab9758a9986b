//! Desk-scale isotopy invariants used as an oracle for every symmetry claim.
//!
//! The determinant is polynomial-time (Fox colouring matrix at `t = -1`,
//! fraction-free elimination); the Kauffman bracket is a plain sum over all
//! `2^c` smoothings and is therefore capped.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diagram::PlanarDiagram;
use crate::error::{PlatError, Result};
use crate::poly::LaurentPoly;

/// Largest crossing count the state sum accepts by default (about 4M states).
pub const DEFAULT_BRACKET_CAP: usize = 22;

pub fn writhe(diagram: &PlanarDiagram) -> i64 {
    diagram.writhe()
}

/// `|Δ(-1)|` of the link.
///
/// Diagrams that fall apart into several pieces represent split links and
/// get 0, matching `|V(-1)|`; a lone crossingless circle gets 1.
pub fn determinant(diagram: &PlanarDiagram) -> BigInt {
    if diagram.diagram_pieces() > 1 {
        return BigInt::zero();
    }
    let crossings = diagram.crossings();
    let c = crossings.len();
    if c == 0 {
        return BigInt::one();
    }

    // Wirtinger arcs: edges glued along each over-strand.
    let mut parent: Vec<usize> = (0..diagram.arc_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for q in crossings {
        let (a, b) = (find(&mut parent, q[1] - 1), find(&mut parent, q[3] - 1));
        if a != b {
            parent[a] = b;
        }
    }
    let mut column = vec![usize::MAX; diagram.arc_count()];
    let mut arcs = 0;
    for e in 0..diagram.arc_count() {
        let root = find(&mut parent, e);
        if column[root] == usize::MAX {
            column[root] = arcs;
            arcs += 1;
        }
    }
    // A component that never passes under can be lifted off the rest.
    if arcs > c {
        return BigInt::zero();
    }

    let mut matrix = vec![vec![BigInt::zero(); arcs]; c];
    for (row, q) in matrix.iter_mut().zip(crossings) {
        let col = |e: usize, parent: &mut [usize]| column[find(parent, e - 1)];
        row[col(q[1], &mut parent)] += 2;
        row[col(q[0], &mut parent)] -= 1;
        row[col(q[2], &mut parent)] -= 1;
    }
    let minor: Vec<Vec<BigInt>> = matrix
        .into_iter()
        .skip(1)
        .map(|row| row.into_iter().skip(1).collect())
        .collect();
    bareiss_determinant(minor).abs()
}

/// Fraction-free Gaussian elimination over the integers.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Kauffman bracket in the variable `A`, normalised so a crossingless
/// circle has bracket 1.
pub fn kauffman_bracket(diagram: &PlanarDiagram, cap: usize) -> Result<LaurentPoly> {
    let c = diagram.crossing_count();
    if c > cap || c >= 63 {
        return Err(PlatError::TooManyCrossings { crossings: c, cap });
    }
    let smoothings: Vec<[(u16, u16); 4]> = diagram
        .crossings()
        .iter()
        .map(|q| {
            let l = q.map(|x| (x - 1) as u16);
            // A-smoothing joins (i,j),(k,l); B-smoothing joins (i,l),(j,k)
            [(l[0], l[1]), (l[2], l[3]), (l[0], l[3]), (l[1], l[2])]
        })
        .collect();
    let arcs = diagram.arc_count();
    let width = arcs + 1;
    let hist = state_histogram(&smoothings, arcs, c);

    let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let mut delta_pows = vec![LaurentPoly::one()];
    let max_loops = arcs + diagram.free_loops() + 1;
    for k in 1..=max_loops {
        let next = &delta_pows[k - 1] * &delta;
        delta_pows.push(next);
    }
    let mut bracket = LaurentPoly::zero();
    for a_count in 0..=c {
        for loops in 0..width {
            let n = hist[a_count * width + loops];
            if n == 0 {
                continue;
            }
            let total_loops = loops + diagram.free_loops();
            let exp = a_count as i32 - (c - a_count) as i32;
            let term = delta_pows[total_loops.saturating_sub(1)].shift(exp);
            let scaled = LaurentPoly::from_terms(term.terms().map(|(e, k)| (e, k * n as i64)));
            bracket = &bracket + &scaled;
        }
    }
    Ok(bracket)
}

/// Counts of states by (number of A-smoothings, number of loops), flattened
/// as `a_count * (arcs + 1) + loops`.
fn state_histogram(smoothings: &[[(u16, u16); 4]], arcs: usize, c: usize) -> Vec<u64> {
    let width = arcs + 1;
    let total: u64 = 1 << c;
    let chunk_bits = c.min(12);
    let chunk: u64 = 1 << chunk_bits;
    let chunks = total / chunk;

    let run = |chunk_index: u64| -> Vec<u64> {
        let mut hist = vec![0u64; (c + 1) * width];
        let mut parent = vec![0u16; arcs];
        for state in chunk_index * chunk..(chunk_index + 1) * chunk {
            for (i, p) in parent.iter_mut().enumerate() {
                *p = i as u16;
            }
            let mut loops = arcs;
            for (k, s) in smoothings.iter().enumerate() {
                let b = (state >> k) & 1 == 1;
                let pairs = if b { [s[2], s[3]] } else { [s[0], s[1]] };
                for (x, y) in pairs {
                    let (rx, ry) = (root(&mut parent, x), root(&mut parent, y));
                    if rx != ry {
                        parent[rx as usize] = ry;
                        loops -= 1;
                    }
                }
            }
            let a_count = c - state.count_ones() as usize;
            hist[a_count * width + loops] += 1;
        }
        hist
    };
    let merge = |mut a: Vec<u64>, b: Vec<u64>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..chunks)
            .into_par_iter()
            .map(run)
            .reduce(|| vec![0u64; (c + 1) * width], merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..chunks).map(run).fold(vec![0u64; (c + 1) * width], merge)
    }
}

#[inline]
fn root(parent: &mut [u16], mut x: u16) -> u16 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

/// Jones polynomial, stored as a Laurent polynomial in `s = t^{1/2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Jones(LaurentPoly);

impl Jones {
    /// Normalises a bracket: `(-A^3)^{-w} <D>` with `A = t^{-1/4}`.
    pub fn from_bracket(bracket: &LaurentPoly, writhe: i64) -> Jones {
        let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
        let normalised = bracket.shift(-3 * writhe as i32);
        let normalised = LaurentPoly::from_terms(normalised.terms().map(|(e, c)| (e, sign * c)));
        let in_s = normalised
            .scale_exponents(-1)
            .divide_exponents(2)
            .expect("normalised bracket exponents are even");
        Jones(in_s)
    }

    /// Coefficients in `s = t^{1/2}`.
    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    /// The same polynomial under `t -> 1/t`.
    pub fn mirror(&self) -> Jones {
        Jones(self.0.scale_exponents(-1))
    }

    /// `V(-1)` as `(re, im)`, using `t^{1/2} = i`.
    pub fn at_minus_one(&self) -> (i128, i128) {
        self.0.eval_at_i()
    }

    /// `|V(-1)|^2`.
    pub fn norm_sq_at_minus_one(&self) -> i128 {
        let (re, im) = self.at_minus_one();
        re * re + im * im
    }

    /// `V(1)`; equals `(-2)^{components - 1}`.
    pub fn at_one(&self) -> i64 {
        self.0.eval_at_one()
    }
}

impl fmt::Display for Jones {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.fmt_with("t", 2))
    }
}

pub fn jones(diagram: &PlanarDiagram, cap: usize) -> Result<Jones> {
    let bracket = kauffman_bracket(diagram, cap)?;
    Ok(Jones::from_bracket(&bracket, diagram.writhe()))
}

/// Writhe of the diagram after reversing each subset of components, one
/// entry per subset (bit `k` of the index reverses component `k`).
pub fn writhes_over_orientations(diagram: &PlanarDiagram) -> Vec<i64> {
    let k = diagram.component_count();
    assert!(k <= 20, "too many components to enumerate orientations");
    let pairs: Vec<(usize, usize, i64)> = (0..diagram.crossing_count())
        .map(|c| {
            let (over, under) = diagram.crossing_components(c);
            (over, under, diagram.signs()[c] as i64)
        })
        .collect();
    (0u32..1 << k)
        .map(|mask| {
            pairs
                .iter()
                .map(|&(o, u, s)| {
                    let flip = ((mask >> o) ^ (mask >> u)) & 1 == 1;
                    if flip {
                        -s
                    } else {
                        s
                    }
                })
                .sum()
        })
        .collect()
}

/// The set of Jones polynomials of the link over every choice of component
/// orientations. This is an invariant of the unoriented link, so it can be
/// compared between diagrams whose orientations were chosen independently.
pub fn jones_orientation_class(diagram: &PlanarDiagram, cap: usize) -> Result<BTreeSet<Jones>> {
    let bracket = kauffman_bracket(diagram, cap)?;
    Ok(writhes_over_orientations(diagram)
        .into_iter()
        .map(|w| Jones::from_bracket(&bracket, w))
        .collect())
}

/// Everything the CLI reports about a closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSummary {
    pub crossings: usize,
    pub components: usize,
    pub writhe: i64,
    pub determinant: BigInt,
    /// `None` when the diagram exceeds the bracket cap.
    pub jones: Option<Jones>,
}

pub fn summarize(diagram: &PlanarDiagram, cap: usize) -> InvariantSummary {
    InvariantSummary {
        crossings: diagram.crossing_count(),
        components: diagram.component_count(),
        writhe: diagram.writhe(),
        determinant: determinant(diagram),
        jones: jones(diagram, cap).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::plat::{ClosureStyle, TwistMatrix};

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    // Laplace expansion, independent of the elimination path.
    fn cofactor_det(a: &[Vec<BigInt>]) -> BigInt {
        let n = a.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for j in 0..n {
            let minor: Vec<Vec<BigInt>> = a[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &a[0][j] * cofactor_det(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let cases = [
            big(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]),
            big(&[&[0, 1, 2], &[3, 0, 1], &[4, 5, 0]]),
            big(&[&[1, 2], &[2, 4]]),
            big(&[&[0, 0, 1, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 1, 0, 0]]),
        ];
        for m in cases {
            assert_eq!(bareiss_determinant(m.clone()), cofactor_det(&m));
        }
        let mut state = 7u64;
        for size in 1..6 {
            for _ in 0..20 {
                let m: Vec<Vec<BigInt>> = (0..size)
                    .map(|_| {
                        (0..size)
                            .map(|_| {
                                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                                BigInt::from((state >> 60) as i64 - 8)
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(bareiss_determinant(m.clone()), cofactor_det(&m));
            }
        }
    }

    #[test]
    fn unknot_values() {
        let u = PlanarDiagram::unknot();
        assert_eq!(determinant(&u), BigInt::one());
        assert_eq!(kauffman_bracket(&u, 22).unwrap(), LaurentPoly::one());
        assert_eq!(jones(&u, 22).unwrap().poly(), &LaurentPoly::one());
        assert_eq!(writhe(&u), 0);
    }

    #[test]
    fn kink_bracket() {
        let positive = PlanarDiagram::from_pd(vec![[1, 1, 2, 2]], 0).unwrap();
        assert_eq!(writhe(&positive), 1);
        assert_eq!(kauffman_bracket(&positive, 22).unwrap(), LaurentPoly::monomial(-1, 3));
        let negative = positive.mirror();
        assert_eq!(writhe(&negative), -1);
        assert_eq!(kauffman_bracket(&negative, 22).unwrap(), LaurentPoly::monomial(-1, -3));
        assert_eq!(jones(&positive, 22).unwrap().poly(), &LaurentPoly::one());
        assert_eq!(determinant(&positive), BigInt::one());
    }

    #[test]
    fn hopf_link() {
        let h = PlanarDiagram::from_pd(vec![[1, 3, 2, 4], [3, 1, 4, 2]], 0).unwrap();
        assert_eq!(
            kauffman_bracket(&h, 22).unwrap(),
            LaurentPoly::from_terms([(4, -1), (-4, -1)])
        );
        // positive Hopf link: -t^{1/2} - t^{5/2}
        assert_eq!(
            jones(&h, 22).unwrap().poly(),
            &LaurentPoly::from_terms([(1, -1), (5, -1)])
        );
        assert_eq!(determinant(&h), BigInt::from(2));
    }

    #[test]
    fn trefoil_values() {
        let left = PlanarDiagram::from_pd(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], 0).unwrap();
        let v = jones(&left, 22).unwrap();
        assert_eq!(v.to_string(), "-t^-4 + t^-3 + t^-1");
        assert_eq!(determinant(&left), BigInt::from(3));

        let plat = TwistMatrix::new(2, vec![vec![3]]).unwrap().closure(ClosureStyle::Standard);
        let w = jones(&plat, 22).unwrap();
        assert!(w == v || w == v.mirror(), "got {w}");
        assert_eq!(determinant(&plat), BigInt::from(3));
    }

    #[test]
    fn torus_link_determinants() {
        // closure of a single twist region of k crossings: det = k
        for k in 1..=8i64 {
            let d = TwistMatrix::new(2, vec![vec![k]]).unwrap().closure(ClosureStyle::Standard);
            assert_eq!(determinant(&d), BigInt::from(k), "k = {k}");
            let v = jones(&d, 22).unwrap();
            assert_eq!(v.norm_sq_at_minus_one(), (k * k) as i128);
        }
    }

    #[test]
    fn split_diagrams() {
        let zero = TwistMatrix::constant(4, 3, 0).unwrap().closure(ClosureStyle::Standard);
        assert_eq!(determinant(&zero), BigInt::zero());
        let tref = TwistMatrix::new(2, vec![vec![3]]).unwrap().closure(ClosureStyle::Standard);
        let with_circle = tref.with_unknot();
        assert_eq!(determinant(&with_circle), BigInt::zero());
        let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
        assert_eq!(
            kauffman_bracket(&with_circle, 22).unwrap(),
            &kauffman_bracket(&tref, 22).unwrap() * &delta
        );
        assert_eq!(jones(&with_circle, 22).unwrap().norm_sq_at_minus_one(), 0);
    }

    #[test]
    fn kinks_preserve_jones() {
        let m = TwistMatrix::new(3, vec![vec![2, -1], vec![1, 1, -2], vec![2, 1]]).unwrap();
        let d = m.closure(ClosureStyle::Standard);
        let v = jones(&d, 22).unwrap();
        let b = kauffman_bracket(&d, 22).unwrap();
        for label in [1, d.arc_count()] {
            for positive in [true, false] {
                for under_first in [true, false] {
                    let k = d.add_kink(label, positive, under_first);
                    assert_eq!(jones(&k, 22).unwrap(), v);
                    let factor = LaurentPoly::monomial(-1, if positive { 3 } else { -3 });
                    assert_eq!(kauffman_bracket(&k, 22).unwrap(), &b * &factor);
                    assert_eq!(determinant(&k), determinant(&d));
                }
            }
        }
    }

    #[test]
    fn jones_at_one_counts_components() {
        let w = BraidWord::parse(6, "s1 s2^-1 s3 s4^2 s2 s5^-1 s3^-1").unwrap();
        for style in ClosureStyle::ALL {
            let d = PlanarDiagram::plat_closure(&w, style);
            let v = jones(&d, 22).unwrap();
            let expected = (-2i64).pow(d.component_count() as u32 - 1);
            assert_eq!(v.at_one(), expected);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let d = TwistMatrix::new(2, vec![vec![5]]).unwrap().closure(ClosureStyle::Standard);
        assert_eq!(
            kauffman_bracket(&d, 4),
            Err(PlatError::TooManyCrossings { crossings: 5, cap: 4 })
        );
    }

    #[test]
    fn mirror_and_writhe() {
        let d = TwistMatrix::new(2, vec![vec![3]]).unwrap().closure(ClosureStyle::Standard);
        assert_eq!(writhe(&d.mirror()), -writhe(&d));
        assert_eq!(jones(&d.mirror(), 22).unwrap(), jones(&d, 22).unwrap().mirror());
    }

    #[test]
    fn orientation_class_of_a_knot_is_a_singleton() {
        let d = TwistMatrix::new(2, vec![vec![5]]).unwrap().closure(ClosureStyle::Standard);
        let class = jones_orientation_class(&d, 22).unwrap();
        assert_eq!(class.len(), 1);
        let h = PlanarDiagram::from_pd(vec![[1, 3, 2, 4], [3, 1, 4, 2]], 0).unwrap();
        // Hopf link: both linking numbers occur
        assert_eq!(jones_orientation_class(&h, 22).unwrap().len(), 2);
    }
}
