//! Point-line duality from the ground up: pencils map to dual lines,
//! one vertical segment maps to a dual strip, and two segments map to a
//! dual parallelogram whose centroid is the line through the midpoints.

use stabline::dual_space::{
    constant_slope_pencil_dual, pencil_dual, segment_strip, two_segment_parallelogram, Line,
};
use stabline::exact_geometry::{integer, rational, Point};

fn main() {
    // All lines through P(2, 3) dualize to the line l = -2k + 3.
    let p = Point::from_integers(2, 3);
    let pencil = pencil_dual(&p);
    println!(
        "pencil through {p}: dual line l = {}k + {}",
        pencil.slope, pencil.intercept
    );
    let witness = Line::new(integer(1), integer(1)); // y = x + 1 passes through (2, 3)
    println!(
        "  contains dual of {witness}: {}",
        pencil.contains(&witness)
    );

    // All lines of slope -3/2 dualize to the vertical dual line k = -3/2.
    let improper = constant_slope_pencil_dual(rational(-3, 2));
    let r1 = Line::new(rational(-3, 2), integer(5));
    println!(
        "improper pencil k = {}: contains {r1}: {}",
        improper.k,
        improper.contains(&r1)
    );

    // Lines crossing the segment x = 1, [1, 4] form a strip.
    let strip = segment_strip(integer(1), integer(1), integer(4)).unwrap();
    for line in [
        Line::new(rational(-2, 3), rational(8, 3)),
        Line::new(integer(0), integer(5)),
    ] {
        println!(
            "strip of x=1,[1,4] contains {line}: {}",
            strip.contains(&line)
        );
    }

    // Lines crossing two segments form a parallelogram; its centroid is
    // the dual of the line through the two midpoints.
    let parallelogram = two_segment_parallelogram(
        (integer(0), integer(0), integer(2)),
        (integer(2), integer(0), integer(2)),
    )
    .unwrap();
    println!("parallelogram vertices:");
    for vertex in parallelogram.vertices() {
        println!("  ({}, {})", vertex.k, vertex.l);
    }
    println!("centroid line: {}", parallelogram.centroid_line);
}
