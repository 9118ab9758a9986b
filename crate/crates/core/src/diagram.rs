//! Crossing-level oriented link diagrams.
//!
//! Crossings are stored as PD quadruples: four arc labels (1-based) in
//! counterclockwise order, starting with the incoming under-arc. Position 2
//! is therefore the outgoing under-arc and positions 1 and 3 carry the
//! over-strand. Orientation is stored explicitly as the head port of every
//! arc, which avoids the label-order ambiguity of two-arc components.

use std::fmt::Write as _;

use crate::braid::BraidWord;
use crate::error::{PlatError, Result};
use crate::plat::ClosureStyle;

/// A port is `(crossing index, position 0..4)` within its quadruple.
pub type Port = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<[usize; 4]>,
    signs: Vec<i8>,
    heads: Vec<Port>,
    components: Vec<Vec<usize>>,
    component_of_arc: Vec<usize>,
    free_loops: usize,
}

impl PlanarDiagram {
    /// A single crossingless circle.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `count` disjoint crossingless circles.
    pub fn unlink(count: usize) -> Self {
        Self::from_oriented(Vec::new(), Vec::new(), count).expect("empty diagram is valid")
    }

    /// Builds a diagram from PD quadruples, inferring orientation by walking
    /// each under-strand forward. Components that never pass under are
    /// oriented from the first port carrying their smallest label.
    pub fn from_pd(crossings: Vec<[usize; 4]>, free_loops: usize) -> Result<Self> {
        let occurrences = label_occurrences(&crossings)?;
        let arc_count = occurrences.len();
        let mut heads: Vec<Option<Port>> = vec![None; arc_count];

        let walk = |heads: &mut Vec<Option<Port>>, start: Port| -> Result<()> {
            let mut port = start;
            loop {
                let out = (port.0, port.1 ^ 2);
                let arc = crossings[out.0][out.1] - 1;
                let [a, b] = occurrences[arc];
                let head = if a == out { b } else { a };
                match heads[arc] {
                    Some(h) if h == head => return Ok(()),
                    Some(_) => {
                        return Err(PlatError::InvalidDiagram(format!(
                            "arc {} is traversed in both directions",
                            arc + 1
                        )))
                    }
                    None => heads[arc] = Some(head),
                }
                port = head;
            }
        };

        for (c, quad) in crossings.iter().enumerate() {
            let arc = quad[0] - 1;
            if heads[arc].is_none() {
                heads[arc] = Some((c, 0));
                walk(&mut heads, (c, 0))?;
            }
        }
        while let Some(arc) = heads.iter().position(Option::is_none) {
            let head = occurrences[arc][0];
            heads[arc] = Some(head);
            walk(&mut heads, head)?;
        }
        let heads = heads.into_iter().map(|h| h.expect("all arcs oriented")).collect();
        Self::from_oriented(crossings, heads, free_loops)
    }

    /// Builds a diagram from quadruples plus the head port of every arc.
    pub fn from_oriented(
        crossings: Vec<[usize; 4]>,
        heads: Vec<Port>,
        free_loops: usize,
    ) -> Result<Self> {
        let occurrences = label_occurrences(&crossings)?;
        let arc_count = occurrences.len();
        if heads.len() != arc_count {
            return Err(PlatError::InvalidDiagram(format!(
                "{} head ports given for {} arcs",
                heads.len(),
                arc_count
            )));
        }
        let mut is_head = vec![[false; 4]; crossings.len()];
        for (arc, &head) in heads.iter().enumerate() {
            if !occurrences[arc].contains(&head) {
                return Err(PlatError::InvalidDiagram(format!(
                    "head of arc {} is not one of its ports",
                    arc + 1
                )));
            }
            is_head[head.0][head.1] = true;
        }

        let mut signs = Vec::with_capacity(crossings.len());
        for (c, ports) in is_head.iter().enumerate() {
            if !ports[0] || ports[2] {
                return Err(PlatError::InvalidDiagram(format!(
                    "crossing {} does not start at its incoming under-arc",
                    c + 1
                )));
            }
            match (ports[1], ports[3]) {
                (false, true) => signs.push(1),
                (true, false) => signs.push(-1),
                _ => {
                    return Err(PlatError::InvalidDiagram(format!(
                        "over-strand of crossing {} is not consistently oriented",
                        c + 1
                    )))
                }
            }
        }

        let mut component_of_arc = vec![usize::MAX; arc_count];
        let mut components = Vec::new();
        for first in 0..arc_count {
            if component_of_arc[first] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut arcs = Vec::new();
            let mut arc = first;
            while component_of_arc[arc] == usize::MAX {
                component_of_arc[arc] = id;
                arcs.push(arc + 1);
                let (c, p) = heads[arc];
                arc = crossings[c][p ^ 2] - 1;
            }
            components.push(arcs);
        }
        components.extend(std::iter::repeat_with(Vec::new).take(free_loops));

        Ok(PlanarDiagram {
            crossings,
            signs,
            heads,
            components,
            component_of_arc,
            free_loops,
        })
    }

    /// Plat-style closure of a braid word.
    ///
    /// Crossings are numbered in word order (top to bottom). Arcs are
    /// labelled by first encounter, walking down from the leftmost top
    /// endpoint; each further component starts at its leftmost unvisited top
    /// endpoint, again heading down. Each component is oriented along its walk.
    pub fn plat_closure(word: &BraidWord, style: ClosureStyle) -> Self {
        // Geometric corners of each crossing node: TL, TR, BL, BR.
        const TL: usize = 0;
        const TR: usize = 1;
        const BL: usize = 2;
        const BR: usize = 3;
        // counterclockwise starting south-east
        const CCW: [usize; 4] = [BR, TR, TL, BL];

        let strands = word.strands();
        let n_cross = word.len();
        let top = |p: usize| 4 * n_cross + p;
        let bottom = |p: usize| 4 * n_cross + strands + p;
        let total = 4 * n_cross + 2 * strands;

        let mut wire = vec![usize::MAX; total];
        let mut through = vec![usize::MAX; total];
        let link = |a: usize, b: usize, wire: &mut Vec<usize>| {
            wire[a] = b;
            wire[b] = a;
        };
        let mut current: Vec<usize> = (0..strands).map(top).collect();
        for (k, letter) in word.letters().iter().enumerate() {
            let p = letter.index() - 1;
            let node = |corner: usize| 4 * k + corner;
            link(current[p], node(TL), &mut wire);
            link(current[p + 1], node(TR), &mut wire);
            current[p] = node(BL);
            current[p + 1] = node(BR);
            through[node(TL)] = node(BR);
            through[node(BR)] = node(TL);
            through[node(TR)] = node(BL);
            through[node(BL)] = node(TR);
        }
        for (p, &node) in current.iter().enumerate() {
            link(node, bottom(p), &mut wire);
        }
        let top_pair = style.top_pairing(strands);
        let bottom_pair = style.bottom_pairing(strands);
        for p in 0..strands {
            through[top(p)] = top(top_pair[p]);
            through[bottom(p)] = bottom(bottom_pair[p]);
        }

        // Walk components, collecting (incoming node, outgoing node) passages.
        let mut visited_top = vec![false; strands];
        let mut node_label = vec![0usize; 4 * n_cross];
        let mut node_is_head = vec![false; 4 * n_cross];
        let mut next_label = 1;
        let mut free_loops = 0;
        for p in 0..strands {
            if visited_top[p] {
                continue;
            }
            let start = top(p);
            visited_top[p] = true;
            let mut passages = Vec::new();
            let mut cur = start;
            loop {
                let entered = wire[cur];
                if entered < 4 * n_cross {
                    passages.push((entered, through[entered]));
                } else if entered < 4 * n_cross + strands {
                    visited_top[entered - 4 * n_cross] = true;
                }
                cur = through[entered];
                if (4 * n_cross..4 * n_cross + strands).contains(&cur) {
                    visited_top[cur - 4 * n_cross] = true;
                }
                if cur == start {
                    break;
                }
            }
            let k = passages.len();
            if k == 0 {
                free_loops += 1;
                continue;
            }
            for (j, &(inn, out)) in passages.iter().enumerate() {
                node_label[inn] = next_label + j;
                node_is_head[inn] = true;
                node_label[out] = next_label + (j + 1) % k;
            }
            next_label += k;
        }

        let mut crossings = Vec::with_capacity(n_cross);
        let mut heads = vec![(0, 0); next_label - 1];
        for (k, letter) in word.letters().iter().enumerate() {
            let node = |corner: usize| 4 * k + corner;
            let under = if letter.is_positive() { [TL, BR] } else { [TR, BL] };
            let in_under = if node_is_head[node(under[0])] { under[0] } else { under[1] };
            let start = CCW.iter().position(|&g| g == in_under).expect("corner");
            let mut quad = [0; 4];
            for (slot, q) in quad.iter_mut().enumerate() {
                let corner = CCW[(start + slot) % 4];
                *q = node_label[node(corner)];
                if node_is_head[node(corner)] {
                    heads[*q - 1] = (k, slot);
                }
            }
            crossings.push(quad);
        }
        Self::from_oriented(crossings, heads, free_loops)
            .expect("plat closure produces a consistent diagram")
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.heads.len()
    }

    /// Sign of each crossing under the stored orientation.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Head port of each arc (index = label - 1).
    pub fn heads(&self) -> &[Port] {
        &self.heads
    }

    /// Arc labels of each component in traversal order; crossingless
    /// components are empty.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of_arc(&self, label: usize) -> usize {
        self.component_of_arc[label - 1]
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// Components carrying the over- and under-strand of crossing `c`.
    pub fn crossing_components(&self, c: usize) -> (usize, usize) {
        let q = self.crossings[c];
        (self.component_of_arc(q[1]), self.component_of_arc(q[0]))
    }

    /// The planar mirror image of the diagram: every crossing switched.
    pub fn mirror(&self) -> PlanarDiagram {
        // Switching a crossing makes the old over-strand the under-strand; the
        // new incoming under-arc is whichever over-port was a head.
        let mut crossings = Vec::with_capacity(self.crossings.len());
        let mut rotation = Vec::with_capacity(self.crossings.len());
        for (c, q) in self.crossings.iter().enumerate() {
            let shift = if self.signs[c] > 0 { 3 } else { 1 };
            crossings.push([q[shift], q[(shift + 1) % 4], q[(shift + 2) % 4], q[(shift + 3) % 4]]);
            rotation.push(shift);
        }
        let heads = self
            .heads
            .iter()
            .map(|&(c, p)| (c, (p + 4 - rotation[c]) % 4))
            .collect();
        Self::from_oriented(crossings, heads, self.free_loops).expect("mirror stays consistent")
    }

    /// Inserts a Reidemeister-I kink on arc `label`.
    ///
    /// `positive` selects the crossing sign; `under_first` chooses whether
    /// the strand passes under on its first visit to the new crossing.
    pub fn add_kink(&self, label: usize, positive: bool, under_first: bool) -> PlanarDiagram {
        assert!(label >= 1 && label <= self.arc_count(), "no arc {label}");
        let e = label;
        let lp = self.arc_count() + 1; // loop arc
        let out = self.arc_count() + 2; // continuation to the old head
        let mut crossings = self.crossings.clone();
        let mut heads = self.heads.clone();
        let (hc, hp) = self.heads[e - 1];
        crossings[hc][hp] = out;
        heads.push((0, 0)); // loop arc, set below
        heads.push((hc, hp));

        // (quad, head slot of e, head slot of the loop arc)
        let (quad, e_slot, loop_slot) = match (under_first, positive) {
            (true, true) => ([e, out, lp, lp], 0, 3),
            (true, false) => ([e, lp, lp, out], 0, 1),
            (false, true) => ([lp, lp, out, e], 3, 0),
            (false, false) => ([lp, e, out, lp], 1, 0),
        };
        let c = crossings.len();
        crossings.push(quad);
        heads[e - 1] = (c, e_slot);
        heads[lp - 1] = (c, loop_slot);
        Self::from_oriented(crossings, heads, self.free_loops).expect("kink keeps consistency")
    }

    /// Adds a distant crossingless circle.
    pub fn with_unknot(&self) -> PlanarDiagram {
        let mut out = self.clone();
        out.free_loops += 1;
        out.components.push(Vec::new());
        out
    }

    /// Groups of crossings connected through shared arcs, plus the number
    /// of crossingless circles (each its own group).
    pub fn diagram_pieces(&self) -> usize {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut pieces = n;
        let occurrences = label_occurrences(&self.crossings).expect("validated on construction");
        for [(a, _), (b, _)] in occurrences {
            let (a, b) = (find(&mut parent, a), find(&mut parent, b));
            if a != b {
                parent[a] = b;
                pieces -= 1;
            }
        }
        pieces + self.free_loops
    }

    /// One `X[a,b,c,d]` line per crossing.
    pub fn pd_code(&self) -> String {
        let mut out = String::new();
        for q in &self.crossings {
            let _ = writeln!(out, "X[{},{},{},{}]", q[0], q[1], q[2], q[3]);
        }
        out
    }

    /// Signed Gauss code, one `{…}` group per component.
    pub fn gauss_code(&self) -> String {
        let mut out = String::new();
        for arcs in &self.components {
            let tokens: Vec<String> = arcs
                .iter()
                .map(|&label| {
                    let (c, p) = self.heads[label - 1];
                    let kind = if p == 0 { 'U' } else { 'O' };
                    let sign = if self.signs[c] > 0 { '+' } else { '-' };
                    format!("{kind}{}{sign}", c + 1)
                })
                .collect();
            let _ = writeln!(out, "{{{}}}", tokens.join(" "));
        }
        out
    }
}

fn label_occurrences(crossings: &[[usize; 4]]) -> Result<Vec<[Port; 2]>> {
    let arc_count = crossings.len() * 2;
    let mut seen: Vec<Vec<Port>> = vec![Vec::new(); arc_count];
    for (c, quad) in crossings.iter().enumerate() {
        for (p, &label) in quad.iter().enumerate() {
            if label == 0 || label > arc_count {
                return Err(PlatError::InvalidDiagram(format!(
                    "label {label} outside 1..={arc_count}"
                )));
            }
            seen[label - 1].push((c, p));
        }
    }
    seen.into_iter()
        .enumerate()
        .map(|(arc, ports)| match ports[..] {
            [a, b] => Ok([a, b]),
            _ => Err(PlatError::InvalidDiagram(format!(
                "label {} appears {} times",
                arc + 1,
                ports.len()
            ))),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::plat::{closure_component_count, TwistMatrix};
    use proptest::prelude::*;

    fn trefoil_matrix() -> TwistMatrix {
        TwistMatrix::new(2, vec![vec![3]]).unwrap()
    }

    fn check_label_multiset(d: &PlanarDiagram) {
        let mut count = vec![0; d.arc_count()];
        for q in d.crossings() {
            for &l in q {
                count[l - 1] += 1;
            }
        }
        assert!(count.iter().all(|&c| c == 2));
    }

    #[test]
    fn trefoil_closure() {
        let d = trefoil_matrix().closure(ClosureStyle::Standard);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.arc_count(), 6);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe().abs(), 3);
        check_label_multiset(&d);
        // labels follow the single component in order
        assert_eq!(d.components()[0], vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn crossingless_closures() {
        let zero = TwistMatrix::constant(4, 3, 0).unwrap();
        let d = zero.closure(ClosureStyle::Standard);
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 4);
        assert_eq!(zero.closure(ClosureStyle::Even).component_count(), 1);
        assert_eq!(zero.closure(ClosureStyle::DoublyEven).component_count(), 4);
    }

    #[test]
    fn pd_text_and_gauss_code() {
        let d = trefoil_matrix().closure(ClosureStyle::Standard);
        let pd = d.pd_code();
        assert_eq!(pd.lines().count(), 3);
        assert!(pd.lines().all(|l| l.starts_with("X[") && l.ends_with(']')));
        let gauss = d.gauss_code();
        assert_eq!(gauss.lines().count(), 1);
        let tokens: Vec<&str> = gauss.trim().trim_matches(|c| c == '{' || c == '}').split(' ').collect();
        assert_eq!(tokens.len(), 6);
        // alternating diagram: O and U alternate
        for pair in tokens.windows(2) {
            assert_ne!(pair[0].as_bytes()[0], pair[1].as_bytes()[0]);
        }
    }

    #[test]
    fn closure_is_deterministic() {
        let m = TwistMatrix::new(3, vec![vec![2, -1], vec![1, 0, 2], vec![-2, 1]]).unwrap();
        assert_eq!(m.closure(ClosureStyle::Even), m.closure(ClosureStyle::Even));
        assert_eq!(
            m.closure(ClosureStyle::Standard).pd_code(),
            m.closure(ClosureStyle::Standard).pd_code()
        );
    }

    #[test]
    fn from_pd_reads_knot_theory_codes() {
        // left-handed trefoil as tabulated in the KnotTheory package
        let d = PlanarDiagram::from_pd(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], 0).unwrap();
        assert_eq!(d.writhe(), -3);
        assert_eq!(d.component_count(), 1);
        // positive Hopf link
        let h = PlanarDiagram::from_pd(vec![[1, 3, 2, 4], [3, 1, 4, 2]], 0).unwrap();
        assert_eq!(h.writhe(), 2);
        assert_eq!(h.component_count(), 2);
        assert!(PlanarDiagram::from_pd(vec![[1, 1, 2, 3]], 0).is_err());
    }

    #[test]
    fn kinks_have_the_requested_sign() {
        let base = trefoil_matrix().closure(ClosureStyle::Standard);
        for positive in [true, false] {
            for under_first in [true, false] {
                let k = base.add_kink(2, positive, under_first);
                assert_eq!(k.crossing_count(), 4);
                assert_eq!(k.component_count(), 1);
                assert_eq!(k.writhe() - base.writhe(), if positive { 1 } else { -1 });
                check_label_multiset(&k);
            }
        }
        let lone = PlanarDiagram::from_pd(vec![[1, 1, 2, 2]], 0).unwrap();
        assert_eq!(lone.writhe(), 1);
    }

    #[test]
    fn mirror_negates_writhe() {
        let m = TwistMatrix::new(3, vec![vec![2, -1], vec![1, 0, 2], vec![-2, 3]]).unwrap();
        for style in ClosureStyle::ALL {
            let d = m.closure(style);
            let mirror = d.mirror();
            assert_eq!(mirror.writhe(), -d.writhe());
            assert_eq!(mirror.component_count(), d.component_count());
            assert_eq!(mirror.mirror(), d);
        }
    }

    #[test]
    fn twist_regions_are_chains_of_bigons() {
        // consecutive crossings of one twist region share two arcs
        let m = TwistMatrix::new(3, vec![vec![4, -3], vec![2, -2, 3], vec![-5, 2]]).unwrap();
        let d = m.closure(ClosureStyle::Standard);
        let mut start = 0;
        for &a in m.entries().collect::<Vec<_>>().iter() {
            let len = a.unsigned_abs() as usize;
            for c in start..start + len.saturating_sub(1) {
                let shared = d.crossings()[c]
                    .iter()
                    .filter(|l| d.crossings()[c + 1].contains(l))
                    .count();
                assert_eq!(shared, 2, "crossings {c} and {}", c + 1);
            }
            start += len;
        }
        assert_eq!(start, d.crossing_count());
    }

    fn arb_word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec((1..strands, prop::bool::ANY), 0..=max_len).prop_map(move |v| {
            let mut w = BraidWord::identity(strands).unwrap();
            for (i, p) in v {
                w.push_power(i, if p { 1 } else { -1 }).unwrap();
            }
            w
        })
    }

    proptest! {
        #[test]
        fn closure_invariants(w in arb_word(8, 30), style_ix in 0usize..3) {
            let style = ClosureStyle::ALL[style_ix];
            let d = PlanarDiagram::plat_closure(&w, style);
            prop_assert_eq!(d.crossing_count(), w.len());
            prop_assert_eq!(d.arc_count(), 2 * w.len());
            prop_assert_eq!(d.component_count(), closure_component_count(&w, style));
            let sum: i64 = d.signs().iter().map(|&s| s as i64).sum();
            prop_assert_eq!(d.writhe(), sum);
            // re-reading the PD code reproduces the same components
            let again = PlanarDiagram::from_pd(d.crossings().to_vec(), d.free_loops()).unwrap();
            prop_assert_eq!(again.component_count(), d.component_count());
            // components partition the arcs
            let mut all: Vec<usize> = d.components().iter().flatten().copied().collect();
            all.sort();
            prop_assert_eq!(all, (1..=d.arc_count()).collect::<Vec<_>>());
        }
    }
}
