//! Classify segment families: no transversal, a unique one, or
//! infinitely many bracketed by the two extremal lines.

use stabline::exact_geometry::integer;
use stabline::transversal::{classify, violating_triple, SegmentFamily, TransversalClass};

fn family(raw: &[(i64, i64, i64)]) -> SegmentFamily {
    SegmentFamily::new(
        raw.iter()
            .map(|&(x, a, b)| (integer(x), integer(a), integer(b)))
            .collect(),
    )
    .expect("valid family")
}

fn describe(name: &str, fam: &SegmentFamily) {
    print!("{name}: ");
    match classify(fam) {
        TransversalClass::NoTransversal => {
            println!("no transversal");
            if let Some((i, j, k)) = violating_triple(fam) {
                println!("  certificate: segments ({i}, {j}, {k}) violate the sign condition");
            }
        }
        TransversalClass::Unique(line) => println!("unique transversal {line}"),
        TransversalClass::Infinite {
            max_slope,
            min_slope,
        } => {
            println!("infinitely many transversals");
            println!("  steepest:   {max_slope}");
            println!("  shallowest: {min_slope}");
        }
    }
}

fn main() {
    describe(
        "six segments",
        &family(&[
            (1, 1, 7),
            (3, 4, 10),
            (4, 3, 8),
            (7, 6, 9),
            (9, 3, 10),
            (10, 2, 12),
        ]),
    );
    describe(
        "three collinear points",
        &family(&[(0, 0, 0), (1, 1, 1), (2, 2, 2)]),
    );
    describe(
        "blocked middle segment",
        &family(&[(1, 0, 1), (2, 5, 6), (3, 0, 1)]),
    );
}
