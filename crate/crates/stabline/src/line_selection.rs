//! The dual feasibility polygon of a family's transversals and the three
//! canonical selections from it.
//!
//! Every transversal of a family corresponds to a dual point inside the
//! convex region cut out by one strip per segment. The region's vertices
//! are exactly the extremal lines plus the lower-lower and upper-upper
//! endpoint joins that cross every segment. Three distinguished
//! transversals are read off the region: the dual midpoint of the two
//! extremal lines, the discrete centroid of the polygon's vertices, and
//! the polygon's area centroid.

use crate::dual_space::Line;
use crate::exact_geometry::Rational;
use crate::transversal::{
    exists_transversal, extremal_max_line, extremal_min_line, stabs_all, SegmentFamily,
};
use num_traits::{Signed, Zero};
use std::fmt;

/// Cross product of the dual displacement vectors `a−o` and `b−o`;
/// positive when `o, a, b` turn counter-clockwise in `(k, l)`-space.
fn dual_cross(o: &Line, a: &Line, b: &Line) -> Rational {
    (&a.k - &o.k) * (&b.l - &o.l) - (&b.k - &o.k) * (&a.l - &o.l)
}

/// Exact monotone-chain convex hull of dual points.
///
/// Returns the hull in counter-clockwise order starting from the
/// lexicographically smallest point. Duplicates and points interior to
/// hull edges are dropped; an all-collinear input collapses to its two
/// extreme points (or one, if all coincide).
fn convex_hull_ccw(mut points: Vec<Line>) -> Vec<Line> {
    points.sort();
    points.dedup();
    if points.len() <= 2 {
        return points;
    }
    let mut lower: Vec<Line> = Vec::with_capacity(points.len());
    for p in &points {
        while lower.len() >= 2
            && !dual_cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Line> = Vec::with_capacity(points.len());
    for p in points.iter().rev() {
        while upper.len() >= 2
            && !dual_cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

/// The convex dual region of all transversals of a family.
///
/// Vertices are pairwise distinct, in counter-clockwise order starting
/// from the lexicographically smallest dual point. The polygon may be
/// empty (no transversal), a single point (unique transversal), or a
/// two-point degenerate segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPolygon {
    vertices: Vec<Line>,
}

impl DualPolygon {
    fn new(vertices: Vec<Line>) -> DualPolygon {
        DualPolygon { vertices }
    }

    pub fn empty() -> DualPolygon {
        DualPolygon {
            vertices: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[Line] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Enclosed area, by the shoelace sum over the counter-clockwise
    /// vertex cycle. Zero for degenerate polygons.
    pub fn area(&self) -> Rational {
        let m = self.vertices.len();
        if m < 3 {
            return Rational::zero();
        }
        let mut twice_area = Rational::zero();
        for i in 0..m {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % m];
            twice_area += &a.k * &b.l - &b.k * &a.l;
        }
        twice_area / Rational::new(2.into(), 1.into())
    }

    /// Arithmetic mean of the vertices, or `None` when empty.
    pub fn discrete_centroid(&self) -> Option<Line> {
        if self.vertices.is_empty() {
            return None;
        }
        let m = Rational::new((self.vertices.len() as i64).into(), 1.into());
        let k: Rational = self.vertices.iter().map(|v| &v.k).sum();
        let l: Rational = self.vertices.iter().map(|v| &v.l).sum();
        Some(Line::new(k / &m, l / m))
    }

    /// Area (mass) centroid, or `None` when empty. A single vertex is its
    /// own centroid; a two-point degenerate polygon yields the midpoint
    /// of its extremes.
    pub fn continuous_centroid(&self) -> Option<Line> {
        let m = self.vertices.len();
        match m {
            0 => None,
            1 => Some(self.vertices[0].clone()),
            2 => Some(Line::dual_midpoint(&self.vertices[0], &self.vertices[1])),
            _ => {
                let mut twice_area = Rational::zero();
                let mut k_sum = Rational::zero();
                let mut l_sum = Rational::zero();
                for i in 0..m {
                    let a = &self.vertices[i];
                    let b = &self.vertices[(i + 1) % m];
                    let cross = &a.k * &b.l - &b.k * &a.l;
                    k_sum += (&a.k + &b.k) * &cross;
                    l_sum += (&a.l + &b.l) * &cross;
                    twice_area += cross;
                }
                let scale = Rational::new(3.into(), 1.into()) * twice_area;
                Some(Line::new(k_sum / &scale, l_sum / scale))
            }
        }
    }

    /// Whether a dual point lies in the closed polygon (boundary
    /// included).
    pub fn contains(&self, point: &Line) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => &self.vertices[0] == point,
            2 => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                dual_cross(a, b, point).is_zero() && point >= a.min(b) && point <= a.max(b)
            }
            m => (0..m).all(|i| {
                !dual_cross(&self.vertices[i], &self.vertices[(i + 1) % m], point).is_negative()
            }),
        }
    }

    /// Whether a dual point lies strictly inside the polygon.
    pub fn contains_strictly(&self, point: &Line) -> bool {
        let m = self.vertices.len();
        m >= 3
            && (0..m).all(|i| {
                dual_cross(&self.vertices[i], &self.vertices[(i + 1) % m], point).is_positive()
            })
    }
}

/// Selection is only defined when the family has a transversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectionError {
    NoTransversal,
}

impl fmt::Display for SelectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelectionError::NoTransversal => write!(f, "the family has no transversal"),
        }
    }
}

impl std::error::Error for SelectionError {}

/// Builds the dual feasibility polygon: the extremal lines together with
/// every lower-lower and upper-upper endpoint join that crosses all
/// segments, deduplicated and convex-hull ordered. Empty when no
/// transversal exists.
pub fn feasibility_polygon(family: &SegmentFamily) -> DualPolygon {
    let max_slope = extremal_max_line(family);
    if !stabs_all(&max_slope, family) {
        return DualPolygon::empty();
    }
    let mut candidates = vec![max_slope, extremal_min_line(family)];
    let n = family.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let (si, sj) = (&family.segments()[i], &family.segments()[j]);
            for line in [
                Line::through(&si.lower_endpoint(), &sj.lower_endpoint()),
                Line::through(&si.upper_endpoint(), &sj.upper_endpoint()),
            ] {
                let line = line.expect("family abscissas are strictly increasing");
                if stabs_all(&line, family) {
                    candidates.push(line);
                }
            }
        }
    }
    DualPolygon::new(convex_hull_ccw(candidates))
}

/// The dual midpoint of the two extremal transversals.
pub fn select_s1(family: &SegmentFamily) -> Result<Line, SelectionError> {
    if !exists_transversal(family) {
        return Err(SelectionError::NoTransversal);
    }
    Ok(Line::dual_midpoint(
        &extremal_max_line(family),
        &extremal_min_line(family),
    ))
}

/// The discrete centroid of the feasibility polygon's vertices.
pub fn select_s2(family: &SegmentFamily) -> Result<Line, SelectionError> {
    feasibility_polygon(family)
        .discrete_centroid()
        .ok_or(SelectionError::NoTransversal)
}

/// The area centroid of the feasibility polygon.
pub fn select_s3(family: &SegmentFamily) -> Result<Line, SelectionError> {
    feasibility_polygon(family)
        .continuous_centroid()
        .ok_or(SelectionError::NoTransversal)
}

/// The three selected transversals. Each crosses every segment of the
/// family: all three are points of the convex feasibility region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialLines {
    pub s1: Line,
    pub s2: Line,
    pub s3: Line,
}

/// Computes all three selections over a single polygon construction.
pub fn select_all(family: &SegmentFamily) -> Result<SpecialLines, SelectionError> {
    let polygon = feasibility_polygon(family);
    let s2 = polygon
        .discrete_centroid()
        .ok_or(SelectionError::NoTransversal)?;
    let s3 = polygon
        .continuous_centroid()
        .ok_or(SelectionError::NoTransversal)?;
    let s1 = Line::dual_midpoint(&extremal_max_line(family), &extremal_min_line(family));
    Ok(SpecialLines { s1, s2, s3 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual_space::dual_convex_combination;
    use crate::exact_geometry::{integer, rational};
    use crate::test_support::{family, figure13, figure5, figure6, no_transversal_family};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn line(kn: i64, kd: i64, ln: i64, ld: i64) -> Line {
        Line::new(rational(kn, kd), rational(ln, ld))
    }

    fn vertex_set(polygon: &DualPolygon) -> BTreeSet<Line> {
        polygon.vertices().iter().cloned().collect()
    }

    #[test]
    fn figure5_polygon() {
        let polygon = feasibility_polygon(&figure5());
        let expected: BTreeSet<Line> = [
            line(1, 2, 5, 2),
            line(-1, 6, 43, 6),
            line(1, 3, 20, 3),
            line(1, 2, 11, 2),
            line(1, 1, 1, 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(vertex_set(&polygon), expected);
        assert_eq!(polygon.len(), 5);
        assert_eq!(polygon.area(), integer(2));
    }

    #[test]
    fn figure13_polygon() {
        let polygon = feasibility_polygon(&figure13());
        let expected: BTreeSet<Line> = [
            line(1, 1, 0, 1),
            line(1, 2, 1, 1),
            line(0, 1, 3, 1),
            line(-1, 1, 12, 1),
            line(0, 1, 11, 1),
            line(1, 2, 8, 1),
            line(1, 1, 4, 1),
            line(3, 2, -1, 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(vertex_set(&polygon), expected);
        assert_eq!(polygon.len(), 8);
    }

    #[test]
    fn collinear_point_segments_collapse_to_one_vertex() {
        let polygon = feasibility_polygon(&family(&[(0, 0, 0), (1, 1, 1), (2, 2, 2)]));
        assert_eq!(polygon.vertices(), &[line(1, 1, 0, 1)]);
        assert_eq!(polygon.area(), integer(0));
    }

    #[test]
    fn no_transversal_polygon_is_empty() {
        assert!(feasibility_polygon(&no_transversal_family()).is_empty());
    }

    #[test]
    fn polygon_vertices_are_ccw_and_stab() {
        for fam in [figure5(), figure6(), figure13()] {
            let polygon = feasibility_polygon(&fam);
            let m = polygon.len();
            assert!(m >= 3);
            for i in 0..m {
                let (a, b, c) = (
                    &polygon.vertices()[i],
                    &polygon.vertices()[(i + 1) % m],
                    &polygon.vertices()[(i + 2) % m],
                );
                assert!(dual_cross(a, b, c).is_positive(), "not strictly convex ccw");
                assert!(stabs_all(a, &fam));
            }
            assert!(polygon.vertices()[0] <= *polygon.vertices().iter().min().unwrap());
        }
    }

    #[test]
    fn selectors_figure5() {
        assert_eq!(select_s1(&figure5()).unwrap(), line(5, 12, 49, 12));
        assert_eq!(select_s2(&figure5()).unwrap(), line(13, 30, 137, 30));
        assert_eq!(select_s3(&figure5()).unwrap(), line(5, 12, 107, 24));
    }

    #[test]
    fn selectors_figure6() {
        assert_eq!(select_s1(&figure6()).unwrap(), line(7, 30, 76 * 2, 15 * 2));
        assert_eq!(select_s2(&figure6()).unwrap(), line(13, 40, 223, 40));
        // The area centroid of the figure-6 quadrilateral, computed from
        // the slab integrals (60/71)·(2/27 + 13/108 + 27/200) = 593/2130
        // and cross-checked by grid sampling.
        assert_eq!(feasibility_polygon(&figure6()).area(), rational(71, 60));
        assert_eq!(select_s3(&figure6()).unwrap(), line(593, 2130, 11873, 2130));
    }

    #[test]
    fn selectors_figure13() {
        assert_eq!(select_s1(&figure13()).unwrap(), line(1, 4, 23, 4));
        assert_eq!(select_s2(&figure13()).unwrap(), line(7, 16, 77, 16));
        assert_eq!(select_s3(&figure13()).unwrap(), line(11, 46, 267, 46));
    }

    #[test]
    fn selectors_err_without_transversal() {
        let fam = no_transversal_family();
        assert_eq!(select_s1(&fam), Err(SelectionError::NoTransversal));
        assert_eq!(select_s2(&fam), Err(SelectionError::NoTransversal));
        assert_eq!(select_s3(&fam), Err(SelectionError::NoTransversal));
        assert_eq!(select_all(&fam), Err(SelectionError::NoTransversal));
    }

    #[test]
    fn degenerate_centroids() {
        // A point segment pins every transversal through (0, 1); the
        // region is the dual segment l = 1, k ∈ [0, 1].
        let fam = family(&[(0, 1, 1), (2, 0, 4), (4, 1, 5)]);
        let polygon = feasibility_polygon(&fam);
        assert_eq!(polygon.vertices(), &[line(0, 1, 1, 1), line(1, 1, 1, 1)]);
        assert_eq!(polygon.area(), integer(0));
        assert_eq!(polygon.continuous_centroid().unwrap(), line(1, 2, 1, 1));
        assert_eq!(polygon.discrete_centroid().unwrap(), line(1, 2, 1, 1));

        let unique = feasibility_polygon(&family(&[(0, 0, 0), (1, 1, 1), (2, 2, 2)]));
        assert_eq!(unique.continuous_centroid().unwrap(), line(1, 1, 0, 1));
    }

    #[test]
    fn interior_candidate_on_degenerate_region_is_dropped() {
        // All transversals pass through the point segment at (0, 1); the
        // join with (4, 2) is feasible with slope 1/4, strictly between
        // the extreme slopes 0 and 1/2, and must not survive as a vertex.
        let fam = family(&[(0, 1, 1), (1, -10, 10), (4, 2, 100), (10, -4, 6)]);
        let polygon = feasibility_polygon(&fam);
        assert_eq!(polygon.vertices(), &[line(1, 4, 1, 1), line(1, 2, 1, 1)]);
    }

    #[test]
    fn extremal_lines_are_extreme_vertices() {
        for fam in [figure5(), figure6(), figure13()] {
            let polygon = feasibility_polygon(&fam);
            let r = extremal_max_line(&fam);
            let p = extremal_min_line(&fam);
            let max_k = polygon.vertices().iter().map(|v| &v.k).max().unwrap();
            let min_k = polygon.vertices().iter().map(|v| &v.k).min().unwrap();
            assert!(polygon.vertices().contains(&r) && &r.k == max_k);
            assert!(polygon.vertices().contains(&p) && &p.k == min_k);
        }
    }

    #[test]
    fn discrete_and_continuous_differ_for_figure13() {
        let s2 = select_s2(&figure13()).unwrap();
        let s3 = select_s3(&figure13()).unwrap();
        assert_ne!(s2.k, s3.k);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=3).prop_map(|(n, d)| rational(n, d))
    }

    prop_compose! {
        fn two_segment_family()(
            x0 in small_rational(), x1 in small_rational(),
            a in small_rational(), b in small_rational(),
            e in small_rational(), f in small_rational(),
        ) -> Option<SegmentFamily> {
            if x0 == x1 {
                return None;
            }
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            let (e, f) = if e <= f { (e, f) } else { (f, e) };
            Some(SegmentFamily::new(vec![(x0, a, b), (x1, e, f)]).unwrap())
        }
    }

    proptest! {
        #[test]
        fn two_segment_centroids_coincide(fam in two_segment_family()) {
            prop_assume!(fam.is_some());
            let fam = fam.unwrap();
            // For the parallelogram of a two-segment family the discrete
            // and area centroids agree, and equal the dual of the line
            // through the segment midpoints.
            let s2 = select_s2(&fam).unwrap();
            let s3 = select_s3(&fam).unwrap();
            prop_assert_eq!(&s2, &s3);
            let midline = Line::through(
                &fam.segments()[0].midpoint(),
                &fam.segments()[1].midpoint(),
            )
            .unwrap();
            prop_assert_eq!(s2, midline);
        }

        #[test]
        fn sampled_polygon_points_are_transversals(
            fam in two_segment_family(),
            t1 in 0i64..=8, t2 in 0i64..=8,
        ) {
            prop_assume!(fam.is_some());
            let fam = fam.unwrap();
            let polygon = feasibility_polygon(&fam);
            prop_assert!(!polygon.is_empty());
            let vs = polygon.vertices();
            let first = dual_convex_combination(&vs[0], &vs[vs.len() / 2], &rational(t1, 8));
            let sample = dual_convex_combination(&first, &vs[vs.len() - 1], &rational(t2, 8));
            prop_assert!(polygon.contains(&sample));
            prop_assert!(stabs_all(&sample, &fam));
        }
    }

    #[test]
    fn unique_classification_iff_single_vertex() {
        use crate::transversal::{classify, TransversalClass};
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut rat = |rng: &mut rand_chacha::ChaCha8Rng| {
            rational(rng.gen_range(-20..=20), rng.gen_range(1..=3))
        };
        for round in 0..500 {
            // Alternate free families with pinched ones so both sides of
            // the equivalence appear.
            let fam = if round % 2 == 0 {
                let n = rng.gen_range(2usize..=6);
                let mut xs = std::collections::BTreeSet::new();
                while xs.len() < n {
                    xs.insert(rat(&mut rng));
                }
                SegmentFamily::new(
                    xs.into_iter()
                        .map(|x| {
                            let a = rat(&mut rng);
                            let b = rat(&mut rng);
                            if a <= b {
                                (x, a, b)
                            } else {
                                (x, b, a)
                            }
                        })
                        .collect(),
                )
                .unwrap()
            } else {
                let pinch = Line::new(rat(&mut rng), rat(&mut rng));
                let mut xs = std::collections::BTreeSet::new();
                while xs.len() < 3 {
                    xs.insert(integer(rng.gen_range(-20..=20)));
                }
                let xs: Vec<Rational> = xs.into_iter().collect();
                SegmentFamily::new(vec![
                    (
                        xs[0].clone(),
                        pinch.value_at(&xs[0]),
                        pinch.value_at(&xs[0]) + integer(rng.gen_range(1..=9)),
                    ),
                    (
                        xs[1].clone(),
                        pinch.value_at(&xs[1]) - integer(rng.gen_range(1..=9)),
                        pinch.value_at(&xs[1]),
                    ),
                    (
                        xs[2].clone(),
                        pinch.value_at(&xs[2]),
                        pinch.value_at(&xs[2]) + integer(rng.gen_range(1..=9)),
                    ),
                ])
                .unwrap()
            };
            let unique = matches!(classify(&fam), TransversalClass::Unique(_));
            let polygon = feasibility_polygon(&fam);
            assert_eq!(unique, polygon.len() == 1, "family {fam:?}");
        }
    }

    #[test]
    fn points_outside_polygon_fail_some_segment() {
        for fam in [figure5(), figure6(), figure13()] {
            let polygon = feasibility_polygon(&fam);
            // Push each vertex outward from the discrete centroid; the
            // result leaves the region and must miss some segment.
            let center = polygon.discrete_centroid().unwrap();
            for v in polygon.vertices() {
                let outside = Line::new(
                    &center.k + (&v.k - &center.k) * integer(2),
                    &center.l + (&v.l - &center.l) * integer(2),
                );
                assert!(!polygon.contains(&outside));
                assert!(!stabs_all(&outside, &fam));
            }
        }
    }

    #[test]
    fn selected_lines_stab_their_family() {
        for fam in [figure5(), figure6(), figure13()] {
            let lines = select_all(&fam).unwrap();
            for line in [&lines.s1, &lines.s2, &lines.s3] {
                assert!(stabs_all(line, &fam));
            }
        }
    }
}
