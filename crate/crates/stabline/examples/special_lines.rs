//! Compute the three selected transversals of a family: the dual
//! midpoint of the extremal lines (s1), the discrete centroid of the
//! dual polygon (s2), and its area centroid (s3).

use stabline::exact_geometry::integer;
use stabline::line_selection::select_all;
use stabline::transversal::{stabs_all, SegmentFamily};

fn main() {
    let family = SegmentFamily::new(
        [
            (1, 1, 7),
            (3, 4, 10),
            (4, 3, 8),
            (7, 6, 9),
            (9, 3, 10),
            (10, 2, 12),
        ]
        .into_iter()
        .map(|(x, a, b)| (integer(x), integer(a), integer(b)))
        .collect(),
    )
    .expect("valid family");

    let lines = select_all(&family).expect("this family has transversals");
    println!("s1 (extremal midpoint):   {}", lines.s1);
    println!("s2 (discrete centroid):   {}", lines.s2);
    println!("s3 (continuous centroid): {}", lines.s3);

    for (name, line) in [("s1", &lines.s1), ("s2", &lines.s2), ("s3", &lines.s3)] {
        assert!(stabs_all(line, &family));
        println!("{name} crosses all {} segments", family.len());
    }
}
