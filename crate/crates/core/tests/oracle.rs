//! Cross-checks between the combinatorial modules and the invariant oracle.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use plat_core::canonical::{apply, canonical_form, equivalent};
use plat_core::hilden::{apply_moves, coset_consistency, CosetVerdict, HildenMove};
use plat_core::invariants::{determinant, jones, jones_orientation_class, DEFAULT_BRACKET_CAP};
use plat_core::plat::row_width;
use plat_core::spheres::{disjointly_realizable, VerticalSphere};
use plat_core::twobridge::{numerator_abs, schubert_pair, two_bridge_plat};
use plat_core::{BraidWord, ClosureStyle, PlanarDiagram, SymmetryElement, TwistMatrix};

fn small_matrix(rng: &mut impl Rng, m: usize, n: usize, budget: u64) -> TwistMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (1..=n)
            .map(|i| (0..row_width(m, i)).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        let mat = TwistMatrix::new(m, rows).unwrap();
        if mat.crossing_count() <= budget {
            return mat;
        }
    }
}

#[test]
fn rotations_preserve_closure_invariants_for_every_style() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let m = rng.gen_range(3..=4);
        let mat = small_matrix(&mut rng, m, 3, 14);
        for style in ClosureStyle::ALL {
            let base = mat.closure(style);
            let det = determinant(&base);
            let class = jones_orientation_class(&base, DEFAULT_BRACKET_CAP).unwrap();
            for g in SymmetryElement::ALL {
                // H swaps the top and bottom pairings of the mixed closure
                if style == ClosureStyle::Even && matches!(g, SymmetryElement::H | SymmetryElement::HV) {
                    continue;
                }
                let d = apply(g, &mat).closure(style);
                assert_eq!(d.component_count(), base.component_count());
                assert_eq!(determinant(&d), det, "{g} on {mat} ({style})");
                assert_eq!(jones_orientation_class(&d, DEFAULT_BRACKET_CAP).unwrap(), class);
            }
        }
    }
}

#[test]
fn knot_rotations_keep_jones_exactly() {
    // For knots the orientation is irrelevant and the rotation is an
    // isotopy, so Jones must agree exactly, not only up to t -> 1/t.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut knots = 0;
    while knots < 15 {
        let mat = small_matrix(&mut rng, 3, 3, 16);
        let base = mat.closure(ClosureStyle::Standard);
        if base.component_count() != 1 {
            continue;
        }
        knots += 1;
        let v = jones(&base, DEFAULT_BRACKET_CAP).unwrap();
        for g in SymmetryElement::ALL {
            let w = jones(&apply(g, &mat).closure(ClosureStyle::Standard), DEFAULT_BRACKET_CAP).unwrap();
            assert_eq!(w, v, "{g} on {mat}");
        }
    }
}

fn random_word(rng: &mut impl Rng, strands: usize, len: usize) -> BraidWord {
    let mut w = BraidWord::identity(strands).unwrap();
    for _ in 0..len {
        w.push_power(rng.gen_range(1..strands), if rng.gen_bool(0.5) { 1 } else { -1 })
            .unwrap();
    }
    w
}

#[test]
fn hilden_moves_on_both_sides_preserve_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let b = random_word(&mut rng, 6, 8);
        let base = PlanarDiagram::plat_closure(&b, ClosureStyle::Standard);
        let det = determinant(&base);
        let class = jones_orientation_class(&base, DEFAULT_BRACKET_CAP).unwrap();
        for mv in HildenMove::generators(6) {
            for mv in [mv, mv.inverted()] {
                for (left, right) in [(vec![mv], vec![]), (vec![], vec![mv])] {
                    let w = apply_moves(&b, &left, &right).unwrap();
                    let d = PlanarDiagram::plat_closure(&w, ClosureStyle::Standard);
                    assert_eq!(d.component_count(), base.component_count());
                    assert_eq!(determinant(&d), det, "{mv} applied to {b}");
                    assert_eq!(jones_orientation_class(&d, DEFAULT_BRACKET_CAP).unwrap(), class);
                }
            }
        }
    }
}

#[test]
fn non_hilden_braids_can_change_the_closure() {
    // σ2 is not a Hilden move: capping it off changes the link type.
    let b = BraidWord::parse(4, "s2^3").unwrap();
    let d = PlanarDiagram::plat_closure(&b, ClosureStyle::Standard);
    let moved = BraidWord::parse(4, "s2 s2^3").unwrap();
    let e = PlanarDiagram::plat_closure(&moved, ClosureStyle::Standard);
    assert_ne!(determinant(&d), determinant(&e));
}

#[test]
fn boundary_two_bridge_determinant_matches_schubert_numerator() {
    let mut checked = 0;
    for a in [-5i64, -4, -3, 3, 4, 5] {
        let d = two_bridge_plat(&[a]).unwrap().closure(ClosureStyle::Standard);
        let pair = schubert_pair(&[a]).unwrap();
        assert_eq!(determinant(&d), numerator_abs(pair.members().0));
        checked += 1;
    }
    let values = [-6i64, -5, -4, -3, 3, 4, 5, 6];
    for &a in &values {
        for &b in &values {
            for &c in &values {
                let coeffs = [a, b, c];
                if coeffs.iter().map(|x| x.unsigned_abs()).sum::<u64>() > 22 {
                    continue;
                }
                let d = two_bridge_plat(&coeffs).unwrap().closure(ClosureStyle::Standard);
                let pair = schubert_pair(&coeffs).unwrap();
                let (r, r2) = pair.members();
                assert_eq!(numerator_abs(r), numerator_abs(r2));
                assert_eq!(determinant(&d), numerator_abs(r), "{coeffs:?}");
                checked += 1;
            }
        }
    }
    assert!(checked > 400);
}

#[test]
fn equivalence_verdicts_agree_with_determinants() {
    let base = TwistMatrix::new(4, vec![vec![-4, -4, -4], vec![-4, 6, -4, -4], vec![-4, -4, -6]]).unwrap();
    let det = determinant(&base.closure(ClosureStyle::Standard));
    for g in SymmetryElement::ALL {
        let img = apply(g, &base);
        assert!(equivalent(&base, &img).unwrap());
        assert_eq!(determinant(&img.closure(ClosureStyle::Standard)), det);
    }
    let changed = base.with_entry(1, 2, -5);
    assert!(!equivalent(&base, &changed).unwrap());
    assert_ne!(determinant(&changed.closure(ClosureStyle::Standard)), det);
    assert!(det > BigInt::from(0));
}

#[test]
fn coset_harness() {
    let a = TwistMatrix::new(4, vec![vec![-4, -4, -4], vec![-4, 6, -4, -4], vec![-4, -4, -6]]).unwrap();

    let same = coset_consistency(&a, &a, 20, 2, 1).unwrap();
    assert_eq!(same.verdict, CosetVerdict::Identical);
    assert!(same.consistent);
    assert_eq!(same.fingerprint_mismatches, 0);

    let rotated = apply(SymmetryElement::HV, &a);
    let rot = coset_consistency(&a, &rotated, 20, 2, 2).unwrap();
    assert_eq!(rot.verdict, CosetVerdict::RotationEqual);
    assert_eq!(rot.rotation, Some(SymmetryElement::HV));
    assert!(rot.consistent);

    let other = a.with_entry(2, 1, 5);
    let diff = coset_consistency(&a, &other, 20, 2, 3).unwrap();
    assert_eq!(diff.verdict, CosetVerdict::ProvablyDistinct);
    assert!(diff.consistent);
    assert_ne!(canonical_form(&a).unwrap(), canonical_form(&other).unwrap());

    let weak = a.with_entry(1, 1, 2);
    assert!(coset_consistency(&a, &weak, 1, 1, 0).is_err());
}

/// Exhaustive routing check: two monotone arcs through the rows of a plat
/// can be drawn disjointly iff some choice of left/right order at each row
/// (ties broken either way) is the same at every row, since swapping order
/// in a layer between rows forces a crossing.
fn routable(s: &[usize], t: &[usize]) -> bool {
    let n = s.len();
    (0..1u32 << n).any(|ties| {
        let order: Vec<bool> = (0..n)
            .map(|i| match s[i].cmp(&t[i]) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => (ties >> i) & 1 == 1,
            })
            .collect();
        order.iter().all(|&o| o == order[0])
    })
}

#[test]
fn realizability_matches_arc_routing() {
    for (m, n) in [(4usize, 3usize), (5, 3), (4, 5)] {
        let bounds: Vec<usize> = (1..=n).map(|i| VerticalSphere::row_bound(m, i)).collect();
        let mut all: Vec<Vec<usize>> = vec![vec![]];
        for &b in &bounds {
            all = all
                .into_iter()
                .flat_map(|p| {
                    (1..=b).map(move |c| {
                        let mut v = p.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        for s in &all {
            for t in &all {
                let expected = routable(s, t);
                let got = disjointly_realizable(&VerticalSphere::new(s.clone()), &VerticalSphere::new(t.clone())).unwrap();
                assert_eq!(got, expected, "{s:?} vs {t:?}");
            }
        }
    }
    assert!(!routable(&[1, 2, 1], &[2, 1, 1]));
}
