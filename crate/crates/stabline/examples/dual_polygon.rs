//! Build the dual feasibility polygon of a family: every transversal is
//! a point of this convex region in (slope, intercept)-space, and its
//! vertices are the extremal lines plus the feasible endpoint joins.

use stabline::exact_geometry::integer;
use stabline::line_selection::feasibility_polygon;
use stabline::transversal::{extremal_max_line, extremal_min_line, SegmentFamily};

fn main() {
    let family = SegmentFamily::new(
        [
            (1, 1, 11),
            (2, 2, 12),
            (4, 3, 12),
            (6, 2, 11),
            (8, 2, 12),
            (9, 3, 13),
        ]
        .into_iter()
        .map(|(x, a, b)| (integer(x), integer(a), integer(b)))
        .collect(),
    )
    .expect("valid family");

    let polygon = feasibility_polygon(&family);
    println!(
        "feasibility polygon: {} vertices, area {}",
        polygon.len(),
        polygon.area()
    );
    for vertex in polygon.vertices() {
        println!("  ({}, {})", vertex.k, vertex.l);
    }

    let r = extremal_max_line(&family);
    let p = extremal_min_line(&family);
    println!("slope range of all transversals: [{}, {}]", p.k, r.k);
}
