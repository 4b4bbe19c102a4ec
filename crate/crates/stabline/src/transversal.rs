//! Segment families and the existence/uniqueness theory of their common
//! transversals.
//!
//! A family is a list of closed vertical segments with strictly
//! increasing abscissas. Existence of a line crossing all of them is
//! equivalent to a sign condition on the orientation form over endpoint
//! triples, and also to the two extremal candidate lines being
//! transversals themselves; those extremal lines bound the slopes of all
//! transversals.

use crate::dual_space::Line;
use crate::exact_geometry::{phi, Point, Rational};
use num_traits::Signed;
use std::fmt;

/// One closed vertical segment: abscissa `x`, ordinates `[low, high]`.
/// `low == high` is a legal point-segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    x: Rational,
    low: Rational,
    high: Rational,
}

impl Segment {
    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn low(&self) -> &Rational {
        &self.low
    }

    pub fn high(&self) -> &Rational {
        &self.high
    }

    /// Lower endpoint `A = (x, low)`.
    pub fn lower_endpoint(&self) -> Point {
        Point::new(self.x.clone(), self.low.clone())
    }

    /// Upper endpoint `B = (x, high)`.
    pub fn upper_endpoint(&self) -> Point {
        Point::new(self.x.clone(), self.high.clone())
    }

    pub fn midpoint(&self) -> Point {
        let two = Rational::new(2.into(), 1.into());
        Point::new(self.x.clone(), (&self.low + &self.high) / two)
    }

    pub fn contains_ordinate(&self, y: &Rational) -> bool {
        &self.low <= y && y <= &self.high
    }

    pub fn is_point(&self) -> bool {
        self.low == self.high
    }
}

/// Validation errors for raw segment input. Segment positions are
/// 1-based, matching the family numbering used everywhere else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    /// Fewer than two segments.
    TooFew { count: usize },
    /// A segment's lower ordinate exceeds its upper ordinate.
    InvertedBounds { segment: usize },
    /// Two segments share an abscissa.
    DuplicateAbscissa { first: usize, second: usize },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::TooFew { count } => {
                write!(f, "need at least 2 segments, got {count}")
            }
            FamilyError::InvertedBounds { segment } => {
                write!(f, "segment {segment} has inverted bounds (a > b)")
            }
            FamilyError::DuplicateAbscissa { first, second } => {
                write!(f, "segments {first} and {second} share an abscissa")
            }
        }
    }
}

impl std::error::Error for FamilyError {}

/// A validated family of at least two vertical segments with strictly
/// increasing abscissas, ordered by abscissa.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentFamily {
    segments: Vec<Segment>,
}

impl SegmentFamily {
    /// Validates and sorts raw `(x, a, b)` triples into a family.
    ///
    /// Errors report 1-based positions in the *input* order: inverted
    /// bounds name the offending triple, duplicate abscissas name the
    /// first clashing pair.
    pub fn new(raw: Vec<(Rational, Rational, Rational)>) -> Result<SegmentFamily, FamilyError> {
        if raw.len() < 2 {
            return Err(FamilyError::TooFew { count: raw.len() });
        }
        for (i, (_, a, b)) in raw.iter().enumerate() {
            if a > b {
                return Err(FamilyError::InvertedBounds { segment: i + 1 });
            }
        }
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by(|&i, &j| raw[i].0.cmp(&raw[j].0));
        for pair in order.windows(2) {
            if raw[pair[0]].0 == raw[pair[1]].0 {
                let (mut first, mut second) = (pair[0] + 1, pair[1] + 1);
                if first > second {
                    std::mem::swap(&mut first, &mut second);
                }
                return Err(FamilyError::DuplicateAbscissa { first, second });
            }
        }
        let segments = order
            .into_iter()
            .map(|i| {
                let (x, a, b) = raw[i].clone();
                Segment { x, low: a, high: b }
            })
            .collect();
        Ok(SegmentFamily { segments })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Lower endpoint of the i-th segment (0-based).
    fn lower(&self, i: usize) -> Point {
        self.segments[i].lower_endpoint()
    }

    /// Upper endpoint of the i-th segment (0-based).
    fn upper(&self, i: usize) -> Point {
        self.segments[i].upper_endpoint()
    }
}

/// Whether `line` crosses every segment of the family.
pub fn stabs_all(line: &Line, family: &SegmentFamily) -> bool {
    family
        .segments()
        .iter()
        .all(|s| s.contains_ordinate(&line.value_at(s.x())))
}

/// The sign condition over ordered endpoint triples: for all i < j < k,
/// `phi(A_i, B_j, A_k) ≤ 0 ≤ phi(B_i, A_j, B_k)`. Vacuously true for
/// n = 2; equivalent to the existence of a transversal for n ≥ 3.
pub fn condition_ii(family: &SegmentFamily) -> bool {
    violating_triple(family).is_none()
}

/// The lexicographically first triple (1-based) violating the sign
/// condition, if any. Serves as a human-checkable certificate of
/// non-existence.
pub fn violating_triple(family: &SegmentFamily) -> Option<(usize, usize, usize)> {
    let n = family.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let lower_side = phi(&family.lower(i), &family.upper(j), &family.lower(k));
                let upper_side = phi(&family.upper(i), &family.lower(j), &family.upper(k));
                if lower_side.is_positive() || upper_side.is_negative() {
                    return Some((i + 1, j + 1, k + 1));
                }
            }
        }
    }
    None
}

/// The line of minimum slope among all joins of a lower endpoint `A_i`
/// with an upper endpoint `B_j`, i < j. When transversals exist this is
/// the transversal of *maximum* slope. Ties break on the smallest (i, j).
pub fn extremal_max_line(family: &SegmentFamily) -> Line {
    let n = family.len();
    let mut best: Option<Line> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            let candidate = Line::through(&family.lower(i), &family.upper(j))
                .expect("family abscissas are strictly increasing");
            if best.as_ref().is_none_or(|b| candidate.k < b.k) {
                best = Some(candidate);
            }
        }
    }
    best.expect("family has at least two segments")
}

/// The line of maximum slope among all joins of an upper endpoint `B_i`
/// with a lower endpoint `A_j`, i < j. When transversals exist this is
/// the transversal of *minimum* slope. Ties break on the smallest (i, j).
pub fn extremal_min_line(family: &SegmentFamily) -> Line {
    let n = family.len();
    let mut best: Option<Line> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            let candidate = Line::through(&family.upper(i), &family.lower(j))
                .expect("family abscissas are strictly increasing");
            if best.as_ref().is_none_or(|b| candidate.k > b.k) {
                best = Some(candidate);
            }
        }
    }
    best.expect("family has at least two segments")
}

/// Whether at least one line crosses every segment. Decided by testing
/// the extremal candidate, which is a transversal exactly when any
/// transversal exists; for n = 2 this is always true.
pub fn exists_transversal(family: &SegmentFamily) -> bool {
    stabs_all(&extremal_max_line(family), family)
}

/// Classification of a family's transversals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransversalClass {
    /// No line crosses every segment.
    NoTransversal,
    /// Exactly one line crosses every segment.
    Unique(Line),
    /// Infinitely many transversals, bracketed by the extremal lines.
    Infinite {
        /// The transversal of maximum slope.
        max_slope: Line,
        /// The transversal of minimum slope.
        min_slope: Line,
    },
}

/// Classifies the family: none, unique (the two extremal lines
/// coincide), or infinitely many.
pub fn classify(family: &SegmentFamily) -> TransversalClass {
    let max_slope = extremal_max_line(family);
    if !stabs_all(&max_slope, family) {
        return TransversalClass::NoTransversal;
    }
    let min_slope = extremal_min_line(family);
    if max_slope == min_slope {
        TransversalClass::Unique(max_slope)
    } else {
        TransversalClass::Infinite {
            max_slope,
            min_slope,
        }
    }
}
