//! The correspondence between non-vertical primal lines `y = kx + l` and
//! dual points `(k, l)`.
//!
//! Pencils of lines through a point dualize to lines, the lines crossing
//! one vertical segment dualize to a strip between parallels, and the
//! lines crossing two vertical segments with distinct abscissas dualize
//! to a parallelogram. Vertical primal lines are unrepresentable by
//! construction; with pairwise distinct segment abscissas no transversal
//! of two or more segments is vertical, so nothing is lost.

use crate::exact_geometry::{Point, Rational};
use std::fmt;

/// A non-vertical primal line `y = kx + l`, identified with the dual
/// point `(k, l)`.
///
/// The derived ordering is lexicographic by `(k, l)`, which is the
/// canonical ordering of dual points used throughout.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    pub k: Rational,
    pub l: Rational,
}

impl Line {
    pub fn new(k: Rational, l: Rational) -> Line {
        Line { k, l }
    }

    /// The line through two points, or `None` when they share an abscissa
    /// (the join is vertical or undefined).
    pub fn through(p: &Point, q: &Point) -> Option<Line> {
        if p.x == q.x {
            return None;
        }
        let k = (&q.y - &p.y) / (&q.x - &p.x);
        let l = &p.y - &k * &p.x;
        Some(Line { k, l })
    }

    /// The ordinate of the line at abscissa `x`.
    pub fn value_at(&self, x: &Rational) -> Rational {
        &self.k * x + &self.l
    }

    /// Whether the point lies on the line.
    pub fn passes_through(&self, p: &Point) -> bool {
        self.value_at(&p.x) == p.y
    }

    /// The dual midpoint of two lines.
    pub fn dual_midpoint(a: &Line, b: &Line) -> Line {
        let half = Rational::new(1.into(), 2.into());
        Line::new((&a.k + &b.k) * &half, (&a.l + &b.l) * half)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y = {}*x + {}", self.k, self.l)
    }
}

/// A non-vertical line in dual `(k, l)`-space: `l = slope·k + intercept`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualLine {
    pub slope: Rational,
    pub intercept: Rational,
}

impl DualLine {
    /// Whether the dual point of `line` lies on this dual line.
    pub fn contains(&self, line: &Line) -> bool {
        line.l == &self.slope * &line.k + &self.intercept
    }
}

/// A vertical line `k = c` in dual space: the dual image of the improper
/// pencil of all primal lines with slope `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerticalDualLine {
    pub k: Rational,
}

impl VerticalDualLine {
    pub fn contains(&self, line: &Line) -> bool {
        line.k == self.k
    }
}

/// The dual image of the proper pencil of lines through `p`: the dual
/// line `l = −x_p·k + y_p`. A line passes through `p` exactly when its
/// dual point lies on this line.
pub fn pencil_dual(p: &Point) -> DualLine {
    DualLine {
        slope: -p.x.clone(),
        intercept: p.y.clone(),
    }
}

/// The dual image of the improper pencil of all lines with slope `c`.
pub fn constant_slope_pencil_dual(c: Rational) -> VerticalDualLine {
    VerticalDualLine { k: c }
}

/// Errors for the strip and parallelogram constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualSpaceError {
    /// A segment's lower bound exceeds its upper bound.
    InvertedBounds,
    /// Two segments share an abscissa, so no parallelogram exists.
    SharedAbscissa,
}

impl fmt::Display for DualSpaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualSpaceError::InvertedBounds => write!(f, "segment bounds inverted (a > b)"),
            DualSpaceError::SharedAbscissa => write!(f, "segments share an abscissa"),
        }
    }
}

impl std::error::Error for DualSpaceError {}

/// The dual region of all lines crossing the vertical segment at
/// abscissa `x0` with ordinates in `[low, high]`: the strip between the
/// parallel dual lines `l = −x0·k + low` and `l = −x0·k + high`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualStrip {
    x0: Rational,
    low: Rational,
    high: Rational,
}

impl DualStrip {
    pub fn x0(&self) -> &Rational {
        &self.x0
    }

    pub fn low(&self) -> &Rational {
        &self.low
    }

    pub fn high(&self) -> &Rational {
        &self.high
    }

    /// Whether `line` crosses the segment, i.e. its dual point lies in
    /// the strip.
    pub fn contains(&self, line: &Line) -> bool {
        let value = line.value_at(&self.x0);
        self.low <= value && value <= self.high
    }
}

/// Builds the [`DualStrip`] of one vertical segment. Rejects `low > high`.
pub fn segment_strip(
    x0: Rational,
    low: Rational,
    high: Rational,
) -> Result<DualStrip, DualSpaceError> {
    if low > high {
        return Err(DualSpaceError::InvertedBounds);
    }
    Ok(DualStrip { x0, low, high })
}

/// The dual parallelogram of all lines crossing two vertical segments
/// with distinct abscissas.
///
/// The four vertices are the duals of the joins of the segments'
/// endpoints (lower-lower, lower-upper, upper-lower, upper-upper), and
/// the centroid is the dual of the line through the two segment
/// midpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualParallelogram {
    pub lower_lower: Line,
    pub lower_upper: Line,
    pub upper_lower: Line,
    pub upper_upper: Line,
    pub centroid_line: Line,
}

impl DualParallelogram {
    pub fn vertices(&self) -> [&Line; 4] {
        [
            &self.lower_lower,
            &self.lower_upper,
            &self.upper_lower,
            &self.upper_upper,
        ]
    }
}

/// Builds the [`DualParallelogram`] for the segments `(x0, [a, b])` and
/// `(x1, [e, f])`. Rejects inverted bounds and `x0 == x1`.
pub fn two_segment_parallelogram(
    first: (Rational, Rational, Rational),
    second: (Rational, Rational, Rational),
) -> Result<DualParallelogram, DualSpaceError> {
    let (x0, a, b) = first;
    let (x1, e, f) = second;
    if a > b || e > f {
        return Err(DualSpaceError::InvertedBounds);
    }
    if x0 == x1 {
        return Err(DualSpaceError::SharedAbscissa);
    }
    let corner = |y0: &Rational, y1: &Rational| {
        Line::through(
            &Point::new(x0.clone(), y0.clone()),
            &Point::new(x1.clone(), y1.clone()),
        )
        .expect("abscissas are distinct")
    };
    let two = Rational::new(2.into(), 1.into());
    let mid0 = Point::new(x0.clone(), (&a + &b) / &two);
    let mid1 = Point::new(x1.clone(), (&e + &f) / &two);
    Ok(DualParallelogram {
        lower_lower: corner(&a, &e),
        lower_upper: corner(&a, &f),
        upper_lower: corner(&b, &e),
        upper_upper: corner(&b, &f),
        centroid_line: Line::through(&mid0, &mid1).expect("abscissas are distinct"),
    })
}

/// Convex combination of two dual points with weight `t` on `b`.
pub fn dual_convex_combination(a: &Line, b: &Line, t: &Rational) -> Line {
    let s = Rational::new(1.into(), 1.into()) - t;
    Line::new(&a.k * &s + &b.k * t, &a.l * &s + &b.l * t)
}
