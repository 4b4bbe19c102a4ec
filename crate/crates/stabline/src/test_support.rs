//! Shared fixtures and independent oracles for the unit-test suites.

use crate::dual_space::Line;
use crate::exact_geometry::integer;
use crate::transversal::{stabs_all, SegmentFamily};

pub(crate) fn family(raw: &[(i64, i64, i64)]) -> SegmentFamily {
    SegmentFamily::new(
        raw.iter()
            .map(|&(x, a, b)| (integer(x), integer(a), integer(b)))
            .collect(),
    )
    .unwrap()
}

pub(crate) fn figure5() -> SegmentFamily {
    family(&[
        (1, 1, 7),
        (3, 4, 10),
        (4, 3, 8),
        (7, 6, 9),
        (9, 3, 10),
        (10, 2, 12),
    ])
}

pub(crate) fn figure6() -> SegmentFamily {
    family(&[
        (1, 1, 7),
        (3, 4, 10),
        (4, 6, 8),
        (7, 4, 9),
        (9, 3, 10),
        (10, 2, 12),
    ])
}

pub(crate) fn figure13() -> SegmentFamily {
    family(&[
        (1, 1, 11),
        (2, 2, 12),
        (4, 3, 12),
        (6, 2, 11),
        (8, 2, 12),
        (9, 3, 13),
    ])
}

pub(crate) fn no_transversal_family() -> SegmentFamily {
    family(&[(1, 0, 1), (2, 5, 6), (3, 0, 1)])
}

/// Existence oracle independent of the extremal-line path: some join of
/// two endpoints from distinct segments crosses everything.
pub(crate) fn endpoint_pair_oracle(family: &SegmentFamily) -> bool {
    let n = family.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let (si, sj) = (&family.segments()[i], &family.segments()[j]);
            for p in [si.lower_endpoint(), si.upper_endpoint()] {
                for q in [sj.lower_endpoint(), sj.upper_endpoint()] {
                    let line = Line::through(&p, &q).unwrap();
                    if stabs_all(&line, family) {
                        return true;
                    }
                }
            }
        }
    }
    false
}
