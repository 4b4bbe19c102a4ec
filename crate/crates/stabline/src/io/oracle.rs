//! Independent verification of the main computation paths.
//!
//! Three oracles check a result by different routes: exhaustive
//! endpoint-pair enumeration for existence, half-plane clipping of a
//! bounding box for the feasibility region, and uniform grid sampling
//! for the area centroid. None of them share code with the paths they
//! verify.

use super::InstanceDocument;
use crate::dual_space::Line;
use crate::exact_geometry::{format_rational, integer, rational, Rational};
use crate::line_selection::{feasibility_polygon, DualPolygon};
use crate::transversal::{exists_transversal, stabs_all, FamilyError, SegmentFamily};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// Options for [`oracle_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOptions {
    /// Spacing of the sampling grid for the centroid oracle. The
    /// comparison tolerance is four times this value.
    pub grid_resolution: Rational,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            grid_resolution: rational(1, 400),
        }
    }
}

/// Which oracle detected a disagreement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleCheck {
    Existence,
    Region,
    Centroid,
}

impl fmt::Display for OracleCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleCheck::Existence => write!(f, "existence"),
            OracleCheck::Region => write!(f, "region"),
            OracleCheck::Centroid => write!(f, "centroid"),
        }
    }
}

/// A disagreement between an oracle and the checked implementation,
/// carrying the failing instance.
#[derive(Debug, Clone)]
pub struct OracleMismatch {
    pub check: OracleCheck,
    pub detail: String,
    pub instance: InstanceDocument,
}

#[derive(Debug)]
pub enum OracleError {
    Family(FamilyError),
    Mismatch(OracleMismatch),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::Family(e) => write!(f, "invalid segment family: {e}"),
            OracleError::Mismatch(m) => {
                write!(f, "{} oracle mismatch: {}", m.check, m.detail)
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Grid-sampling estimate of a polygon's area and centroid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridEstimate {
    #[serde(with = "super::rational_string")]
    pub k: Rational,
    #[serde(with = "super::rational_string")]
    pub l: Rational,
    #[serde(with = "super::rational_string")]
    pub area: Rational,
    pub samples: u64,
}

/// Outcome of the centroid oracle on a non-degenerate region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridComparison {
    pub estimate: GridEstimate,
    #[serde(with = "super::rational_string")]
    pub deviation_k: Rational,
    #[serde(with = "super::rational_string")]
    pub deviation_l: Rational,
    #[serde(with = "super::rational_string")]
    pub tolerance: Rational,
}

/// Successful oracle run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub transversal_exists: bool,
    pub endpoint_lines_tested: u64,
    pub region_vertices: u64,
    /// Centroid comparison; absent when the region is degenerate (zero
    /// area) or too large to grid at the requested resolution.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centroid: Option<GridComparison>,
}

impl OracleReport {
    /// Deterministic plain-text rendering, one oracle per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "existence oracle: agree (exists = {}, {} endpoint lines tested)\n",
            self.transversal_exists, self.endpoint_lines_tested
        ));
        out.push_str(&format!(
            "region oracle: agree ({} vertices)\n",
            self.region_vertices
        ));
        match &self.centroid {
            Some(c) => out.push_str(&format!(
                "centroid oracle: agree (|dk| = {}, |dl| = {}, tolerance {}, {} samples)\n",
                format_rational(&c.deviation_k),
                format_rational(&c.deviation_l),
                format_rational(&c.tolerance),
                c.estimate.samples
            )),
            None => out.push_str("centroid oracle: skipped (degenerate region)\n"),
        }
        out
    }
}

/// A closed half-plane `a·k + b·l + c ≤ 0` in dual space.
struct HalfPlane {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl HalfPlane {
    fn eval(&self, p: &Line) -> Rational {
        &self.a * &p.k + &self.b * &p.l + &self.c
    }
}

/// Clips a polygon (vertex cycle) to one half-plane, Sutherland–Hodgman.
/// Boundary points count as inside.
fn clip(polygon: Vec<Line>, plane: &HalfPlane) -> Vec<Line> {
    if polygon.is_empty() {
        return polygon;
    }
    let mut out = Vec::with_capacity(polygon.len() + 1);
    for i in 0..polygon.len() {
        let cur = &polygon[i];
        let next = &polygon[(i + 1) % polygon.len()];
        let cur_val = plane.eval(cur);
        let next_val = plane.eval(next);
        let cur_in = !cur_val.is_positive();
        let next_in = !next_val.is_positive();
        if cur_in {
            out.push(cur.clone());
        }
        if cur_in != next_in {
            // The edge crosses the boundary at parameter t with
            // h(cur) + t·(h(next) − h(cur)) = 0.
            let t = &cur_val / (&cur_val - &next_val);
            out.push(Line::new(
                &cur.k + &t * (&next.k - &cur.k),
                &cur.l + t * (&next.l - &cur.l),
            ));
        }
    }
    out
}

fn all_collinear(points: &[Line]) -> bool {
    points.windows(3).all(|w| {
        ((&w[1].k - &w[0].k) * (&w[2].l - &w[0].l) - (&w[2].k - &w[0].k) * (&w[1].l - &w[0].l))
            .is_zero()
    }) && points.len() >= 3
        || points.len() < 3
}

/// Region oracle: the exact dual feasibility region computed by clipping
/// a bounding box with the two half-planes of every segment.
///
/// Returns the region's vertex set as a cleaned counter-clockwise cycle;
/// degenerate regions collapse to their one or two extreme points. The
/// bounding box provably encloses the region strictly, so no box corner
/// survives.
pub fn halfplane_region_vertices(family: &SegmentFamily) -> Vec<Line> {
    // Exact bound: any feasible slope passes through two segments, so
    // |k| ≤ 2·max|ordinate| / min abscissa gap, and |l| ≤ max|ordinate|
    // + |k|·max|abscissa|.
    let one = integer(1);
    let mut max_ord = one.clone();
    let mut max_abs = one.clone();
    for s in family.segments() {
        max_ord = max_ord.max(s.low().abs()).max(s.high().abs());
        max_abs = max_abs.max(s.x().abs());
    }
    let min_gap = family
        .segments()
        .windows(2)
        .map(|w| w[1].x() - w[0].x())
        .min()
        .expect("family has at least two segments");
    let slope_bound = integer(2) * &max_ord / min_gap + &one;
    let intercept_bound = &max_ord + &slope_bound * &max_abs + one;

    let mut region = vec![
        Line::new(-slope_bound.clone(), -intercept_bound.clone()),
        Line::new(slope_bound.clone(), -intercept_bound.clone()),
        Line::new(slope_bound.clone(), intercept_bound.clone()),
        Line::new(-slope_bound, intercept_bound),
    ];
    for s in family.segments() {
        // low ≤ k·x + l  ⇔  −x·k − l + low ≤ 0
        region = clip(
            region,
            &HalfPlane {
                a: -s.x().clone(),
                b: integer(-1),
                c: s.low().clone(),
            },
        );
        // k·x + l ≤ high  ⇔  x·k + l − high ≤ 0
        region = clip(
            region,
            &HalfPlane {
                a: s.x().clone(),
                b: integer(1),
                c: -s.high().clone(),
            },
        );
        if region.is_empty() {
            return Vec::new();
        }
    }

    // Clean the cycle: drop consecutive duplicates, then collapse
    // collinear runs.
    let mut cleaned: Vec<Line> = Vec::with_capacity(region.len());
    for p in region {
        if cleaned.last() != Some(&p) {
            cleaned.push(p);
        }
    }
    while cleaned.len() > 1 && cleaned.first() == cleaned.last() {
        cleaned.pop();
    }
    if all_collinear(&cleaned) {
        cleaned.sort();
        cleaned.dedup();
        return match cleaned.len() {
            0 | 1 => cleaned,
            _ => vec![cleaned[0].clone(), cleaned[cleaned.len() - 1].clone()],
        };
    }
    loop {
        let m = cleaned.len();
        let mut removed = false;
        let mut next: Vec<Line> = Vec::with_capacity(m);
        for i in 0..m {
            let prev = &cleaned[(i + m - 1) % m];
            let cur = &cleaned[i];
            let nxt = &cleaned[(i + 1) % m];
            let cross =
                (&cur.k - &prev.k) * (&nxt.l - &prev.l) - (&nxt.k - &prev.k) * (&cur.l - &prev.l);
            if cross.is_zero() {
                removed = true;
            } else {
                next.push(cur.clone());
            }
        }
        cleaned = next;
        if !removed {
            break;
        }
    }
    // Rotate so the cycle starts at the lexicographically smallest point.
    if let Some(start) = cleaned
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, _)| i)
    {
        cleaned.rotate_left(start);
    }
    cleaned
}

/// Column limit for the sampling grid; finer grids are refused rather
/// than ground through.
const MAX_GRID_COLUMNS: i64 = 2_000_000;

/// Samples the polygon on the uniform grid of points `(i·res, j·res)`
/// inside its bounding box and estimates the area and centroid from the
/// points falling in the closed polygon.
///
/// Per grid column the feasible ordinate interval is computed exactly
/// and the row count and row sum are closed-form, so the estimate is
/// exact arithmetic over the full grid without visiting each point.
/// Returns `None` for degenerate polygons (fewer than three vertices)
/// and for grids exceeding [`MAX_GRID_COLUMNS`].
pub fn grid_estimate(polygon: &DualPolygon, resolution: &Rational) -> Option<GridEstimate> {
    let vertices = polygon.vertices();
    if vertices.len() < 3 || !resolution.is_positive() {
        return None;
    }
    let k_min = vertices.iter().map(|v| &v.k).min().unwrap();
    let k_max = vertices.iter().map(|v| &v.k).max().unwrap();
    let i0 = (k_min / resolution).ceil().to_integer();
    let i1 = (k_max / resolution).floor().to_integer();
    let (i0, i1) = (i0.to_i64()?, i1.to_i64()?);
    if i1.checked_sub(i0).is_none_or(|w| w > MAX_GRID_COLUMNS) {
        return None;
    }

    let mut samples: u64 = 0;
    let mut k_sum = Rational::zero();
    let mut l_sum = Rational::zero();
    let two = integer(2);
    for i in i0..=i1 {
        let k = integer(i) * resolution;
        // Exact ordinate interval of the convex region at abscissa k.
        let mut low: Option<Rational> = None;
        let mut high: Option<Rational> = None;
        let mut add = |l: Rational| {
            if low.as_ref().is_none_or(|v| &l < v) {
                low = Some(l.clone());
            }
            if high.as_ref().is_none_or(|v| &l > v) {
                high = Some(l);
            }
        };
        for e in 0..vertices.len() {
            let a = &vertices[e];
            let b = &vertices[(e + 1) % vertices.len()];
            if a.k == b.k {
                if a.k == k {
                    add(a.l.clone());
                    add(b.l.clone());
                }
            } else if (a.k <= k && k <= b.k) || (b.k <= k && k <= a.k) {
                let t = (&k - &a.k) / (&b.k - &a.k);
                add(&a.l + t * (&b.l - &a.l));
            }
        }
        let (Some(low), Some(high)) = (low, high) else {
            continue;
        };
        let j0 = (low / resolution).ceil().to_integer();
        let j1 = (high / resolution).floor().to_integer();
        if j1 < j0 {
            continue;
        }
        let count_int = &j1 - &j0 + 1u8;
        samples += count_int.to_u64()?;
        let count_rat = Rational::from_integer(count_int);
        k_sum += &k * &count_rat;
        // Sum of an arithmetic progression of ordinates.
        l_sum += resolution * Rational::from_integer(j0 + j1) / &two * count_rat;
    }
    if samples == 0 {
        return None;
    }
    let total = Rational::from_integer(samples.into());
    Some(GridEstimate {
        k: k_sum / &total,
        l: l_sum / &total,
        area: total * resolution * resolution,
        samples,
    })
}

/// Runs the three oracles against the library's answers.
///
/// 1. Existence: every join of two endpoints of distinct segments is
///    tested; a transversal exists iff one of them crosses everything.
/// 2. Region: the half-plane clipping region must have exactly the
///    feasibility polygon's vertex set.
/// 3. Centroid: on a region with positive area, the grid estimate must
///    match the area centroid within four grid steps per coordinate.
pub fn oracle_check(
    doc: &InstanceDocument,
    options: &OracleOptions,
) -> Result<OracleReport, OracleError> {
    let family = doc.family().map_err(OracleError::Family)?;
    let mismatch = |check: OracleCheck, detail: String| {
        OracleError::Mismatch(OracleMismatch {
            check,
            detail,
            instance: doc.clone(),
        })
    };

    // Existence oracle.
    let mut oracle_exists = false;
    let mut tested: u64 = 0;
    let n = family.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let (si, sj) = (&family.segments()[i], &family.segments()[j]);
            for p in [si.lower_endpoint(), si.upper_endpoint()] {
                for q in [sj.lower_endpoint(), sj.upper_endpoint()] {
                    let line = Line::through(&p, &q).expect("distinct abscissas");
                    tested += 1;
                    if stabs_all(&line, &family) {
                        oracle_exists = true;
                    }
                }
            }
        }
    }
    let claimed = exists_transversal(&family);
    if oracle_exists != claimed {
        return Err(mismatch(
            OracleCheck::Existence,
            format!("endpoint enumeration says {oracle_exists}, extremal line says {claimed}"),
        ));
    }

    // Region oracle.
    let polygon = feasibility_polygon(&family);
    let clipped = halfplane_region_vertices(&family);
    let lhs: BTreeSet<&Line> = polygon.vertices().iter().collect();
    let rhs: BTreeSet<&Line> = clipped.iter().collect();
    if lhs != rhs {
        return Err(mismatch(
            OracleCheck::Region,
            format!(
                "candidate construction has {} vertices, half-plane clipping has {}",
                lhs.len(),
                rhs.len()
            ),
        ));
    }

    // Centroid oracle (positive-area regions only).
    let tolerance = integer(4) * &options.grid_resolution;
    let centroid = if polygon.area().is_positive() {
        match grid_estimate(&polygon, &options.grid_resolution) {
            Some(estimate) => {
                let exact = polygon
                    .continuous_centroid()
                    .expect("non-degenerate polygon");
                let deviation_k = (&estimate.k - &exact.k).abs();
                let deviation_l = (&estimate.l - &exact.l).abs();
                if deviation_k > tolerance || deviation_l > tolerance {
                    return Err(mismatch(
                        OracleCheck::Centroid,
                        format!(
                            "grid centroid ({}, {}) deviates from exact ({}, {}) beyond {}",
                            format_rational(&estimate.k),
                            format_rational(&estimate.l),
                            format_rational(&exact.k),
                            format_rational(&exact.l),
                            format_rational(&tolerance),
                        ),
                    ));
                }
                Some(GridComparison {
                    estimate,
                    deviation_k,
                    deviation_l,
                    tolerance,
                })
            }
            None => None,
        }
    } else {
        None
    };

    Ok(OracleReport {
        transversal_exists: claimed,
        endpoint_lines_tested: tested,
        region_vertices: polygon.len() as u64,
        centroid,
    })
}
