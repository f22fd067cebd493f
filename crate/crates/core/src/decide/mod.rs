//! Existence of balanced convex 4-holes, decided from hull structure.

pub mod nonsep;
pub mod separable;
pub mod wedges;
pub mod witness;

use std::fmt;

use crate::error::Result;
use crate::geometry::Color;
use crate::holes::HolePolygon;
use crate::pointset::BicoloredSet;

pub use nonsep::{check_hull_boundaries_cross, check_three_outer_condition, Overlap};
pub use separable::{
    separable_check_c1, separable_step1_interior, separable_step2_tangent_scan, C1Data, C2Data, CrossedPair,
};
pub use witness::{extract_witness, find_convex_4hole_balanced_or_mono};

/// The characterization condition a decision matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Three reds around the blue hull, with a blue hull edge cutting off two reds.
    NS1,
    /// Three blues around the red hull, with a red hull edge cutting off two blues.
    NS2,
    /// Blue hull inside the red hull, at least four reds.
    NS3,
    /// Red hull inside the blue hull, at least four blues.
    NS4,
    /// The two hull boundaries cross.
    NS5,
    C1,
    C2,
    None,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::NS1 => "NS1",
            Condition::NS2 => "NS2",
            Condition::NS3 => "NS3",
            Condition::NS4 => "NS4",
            Condition::NS5 => "NS5",
            Condition::C1 => "C1",
            Condition::C2 => "C2",
            Condition::None => "None",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which stage of the decision produced the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    NonSeparable,
    /// Both classes have a point whose segments to the other class cross its hull.
    InteriorPoints,
    TangentScan,
    SeeingEdges,
    WedgeScan,
    /// Fewer than two points of some color.
    TooSmall,
}

/// Data behind a verdict, enough to rebuild a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Evidence {
    None,
    BoundariesCross,
    /// Hull of `outer.other()` inside CH(outer), `outer` having at least four points.
    Nested { outer: Color },
    /// Hull edge uv of the inner class with exactly the outer points a, b beyond it.
    ThreeOuter { outer: Color, u: usize, v: usize, a: usize, b: usize },
    C1(C1Data),
    C2(C2Data),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexDecision {
    pub has_hole: bool,
    pub condition: Condition,
    pub witness: Option<HolePolygon>,
    pub stage: Stage,
    pub evidence: Evidence,
}

impl ConvexDecision {
    fn new(condition: Condition, stage: Stage, evidence: Evidence) -> ConvexDecision {
        ConvexDecision { has_hole: condition != Condition::None, condition, witness: None, stage, evidence }
    }
}

fn from_lemma(s: &BicoloredSet, pair: CrossedPair, stage: Stage) -> Option<ConvexDecision> {
    match separable::crossed_pair_conclusion(s, pair)? {
        Ok(c1) => Some(ConvexDecision::new(Condition::C1, stage, Evidence::C1(c1))),
        Err(c2) => Some(ConvexDecision::new(Condition::C2, stage, Evidence::C2(c2))),
    }
}

fn decide_separable(s: &BicoloredSet) -> ConvexDecision {
    let lemma_pair = match separable::step1_pair(s) {
        Some(pair) => Some((pair, Stage::InteriorPoints)),
        None => separable::step1_convex_color(s)
            .and_then(|c| separable::step2_tangent_scan(s, c))
            .map(|pair| (pair, Stage::TangentScan)),
    };
    if let Some((pair, stage)) = lemma_pair {
        if let Some(d) = from_lemma(s, pair, stage) {
            return d;
        }
        debug_assert!(false, "crossed pair without C1 or C2");
    }
    if let Some(c1) = separable_check_c1(s) {
        return ConvexDecision::new(Condition::C1, Stage::SeeingEdges, Evidence::C1(c1));
    }
    if let Some(c2) = wedges::separable_check_c2(s) {
        return ConvexDecision::new(Condition::C2, Stage::WedgeScan, Evidence::C2(c2));
    }
    ConvexDecision::new(Condition::None, Stage::WedgeScan, Evidence::None)
}

fn decide_nonseparable(s: &BicoloredSet) -> ConvexDecision {
    let stage = Stage::NonSeparable;
    match nonsep::overlap(s) {
        Overlap::BoundariesCross => ConvexDecision::new(Condition::NS5, stage, Evidence::BoundariesCross),
        Overlap::Contained { inner } => {
            let outer = inner.other();
            let (big, three) = match outer {
                Color::Red => (Condition::NS3, Condition::NS1),
                Color::Blue => (Condition::NS4, Condition::NS2),
            };
            if s.indices(outer).len() >= 4 {
                return ConvexDecision::new(big, stage, Evidence::Nested { outer });
            }
            match check_three_outer_condition(s, outer) {
                Some((u, v, a, b)) => ConvexDecision::new(three, stage, Evidence::ThreeOuter { outer, u, v, a, b }),
                None => ConvexDecision::new(Condition::None, stage, Evidence::None),
            }
        }
    }
}

/// Decides whether `s` has a balanced convex 4-hole. O(n log n).
pub fn decide_balanced_convex_4hole(s: &BicoloredSet) -> ConvexDecision {
    if s.red_count() < 2 || s.blue_count() < 2 {
        return ConvexDecision::new(Condition::None, Stage::TooSmall, Evidence::None);
    }
    if s.linearly_separable() {
        decide_separable(s)
    } else {
        decide_nonseparable(s)
    }
}

/// Decision together with a validated witness when the verdict is positive.
pub fn decide_with_witness(s: &BicoloredSet) -> Result<ConvexDecision> {
    let mut d = decide_balanced_convex_4hole(s);
    if d.has_hole {
        d.witness = Some(extract_witness(s, &d)?);
    }
    Ok(d)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::holes::tests::random_set;
    use crate::oracle;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Random set split by a random line: points on one side red, the other blue.
    pub(crate) fn random_separable(rng: &mut ChaCha8Rng, range: i64) -> Option<BicoloredSet> {
        let n = rng.gen_range(4..=16);
        random_separable_n(rng, range, n)
    }

    pub(crate) fn random_separable_n(rng: &mut ChaCha8Rng, range: i64, n: usize) -> Option<BicoloredSet> {
        let (dx, dy) = (rng.gen_range(-9..=9i64), rng.gen_range(-9..=9i64));
        let off = rng.gen_range(-range..=range);
        let mut pts = Vec::new();
        for _ in 0..n {
            let (x, y) = (rng.gen_range(-range..=range), rng.gen_range(-range..=range));
            let side = dx * x + dy * y - off * 3;
            if side == 0 {
                continue;
            }
            pts.push(Point::new(x, y, if side > 0 { Color::Red } else { Color::Blue }));
        }
        let s = BicoloredSet::new(pts).ok()?;
        (s.red_count() >= 2 && s.blue_count() >= 2).then_some(s)
    }

    fn assert_decision(s: &BicoloredSet) -> ConvexDecision {
        let d = decide_with_witness(s).unwrap_or_else(|e| panic!("{e}\n{}", s.to_text()));
        assert_eq!(d.has_hole, oracle::has_balanced_convex_4hole(s), "{:?}\n{}", d, s.to_text());
        if let Some(w) = &d.witness {
            assert!(witness::is_valid_witness(s, w));
        }
        d
    }

    #[test]
    fn decision_matches_oracle_on_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1500 {
            let (r, b) = (rng.gen_range(2..=7), rng.gen_range(2..=7));
            let range = [6, 20, 100][rng.gen_range(0..3)];
            assert_decision(&random_set(&mut rng, r, b, range));
        }
    }

    #[test]
    fn decision_matches_oracle_on_separable_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut seen = 0;
        while seen < 1500 {
            if let Some(s) = random_separable(&mut rng, 30) {
                assert!(s.linearly_separable());
                assert_decision(&s);
                seen += 1;
            }
        }
    }

    #[test]
    fn separable_conditions_match_definitions() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut seen = 0;
        while seen < 1500 {
            let Some(s) = random_separable(&mut rng, 30) else { continue };
            seen += 1;
            assert_eq!(separable_check_c1(&s).is_some(), !oracle::c1_pairs(&s).is_empty(), "{}", s.to_text());
            let scan = separable::separable_check_c2_scan(&s);
            if let Some(c2) = scan {
                assert!(separable::c2_holds_for(&s, &c2));
            }
            let c2 = oracle::c2_holds(&s);
            if oracle::c1_pairs(&s).is_empty() {
                assert_eq!(scan.is_some(), c2, "{}", s.to_text());
            }
            let lemma = oracle::crossed_red_blue_segment(&s).is_some();
            if !separable_step1_interior(&s) {
                assert_eq!(separable_step2_tangent_scan(&s), lemma, "{}", s.to_text());
            } else {
                assert!(lemma);
            }
            let d = decide_balanced_convex_4hole(&s);
            assert_eq!(d.has_hole, !oracle::c1_pairs(&s).is_empty() || c2);
            let fast = wedges::separable_check_c2(&s);
            if let Some(c2) = fast {
                assert!(separable::c2_holds_for(&s, &c2));
            }
            if d.stage == Stage::WedgeScan {
                assert_eq!(fast.is_some(), scan.is_some(), "{}", s.to_text());
            }
        }
    }

    #[test]
    fn nonseparable_conditions_match_definitions() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..1500 {
            let (r, b) = (rng.gen_range(2..=7), rng.gen_range(2..=7));
            let s = random_set(&mut rng, r, b, 20);
            if s.linearly_separable() {
                continue;
            }
            let brute = nonsep::crossing_hull_edges(&s).is_some();
            assert_eq!(check_hull_boundaries_cross(&s), brute);
            for outer in [Color::Red, Color::Blue] {
                assert_eq!(
                    check_three_outer_condition(&s, outer).is_some(),
                    nonsep::three_outer_condition_slow(&s, outer)
                );
            }
        }
    }
}
