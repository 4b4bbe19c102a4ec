//! When no transversal exists, a violated sign-condition triple is a
//! compact, hand-checkable certificate.

use stabline::exact_geometry::{integer, phi};
use stabline::transversal::{exists_transversal, violating_triple, SegmentFamily};

fn main() {
    let family = SegmentFamily::new(
        [(1, 0, 1), (2, 5, 6), (3, 0, 1)]
            .into_iter()
            .map(|(x, a, b)| (integer(x), integer(a), integer(b)))
            .collect(),
    )
    .expect("valid family");

    println!("transversal exists: {}", exists_transversal(&family));
    let (i, j, k) = violating_triple(&family).expect("certificate for a blocked family");
    println!("violated triple: ({i}, {j}, {k})");

    // Check the certificate by hand: with A the lower and B the upper
    // endpoints, a transversal would force
    // phi(A_i, B_j, A_k) <= 0 <= phi(B_i, A_j, B_k).
    let (si, sj, sk) = (
        &family.segments()[i - 1],
        &family.segments()[j - 1],
        &family.segments()[k - 1],
    );
    let lower_side = phi(
        &si.lower_endpoint(),
        &sj.upper_endpoint(),
        &sk.lower_endpoint(),
    );
    let upper_side = phi(
        &si.upper_endpoint(),
        &sj.lower_endpoint(),
        &sk.upper_endpoint(),
    );
    println!("phi(A_{i}, B_{j}, A_{k}) = {lower_side} (must be <= 0)");
    println!("phi(B_{i}, A_{j}, B_{k}) = {upper_side} (must be >= 0)");
}
