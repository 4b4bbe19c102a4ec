//! Run the three independent oracles against the library's answers:
//! endpoint-pair enumeration for existence, half-plane clipping for the
//! feasibility region, and grid sampling for the area centroid.

use stabline::exact_geometry::integer;
use stabline::io::{oracle_check, InstanceDocument, OracleOptions};

fn main() {
    let doc = InstanceDocument::new(
        Some("six segments".to_owned()),
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
    );

    match oracle_check(&doc, &OracleOptions::default()) {
        Ok(report) => print!("{}", report.to_text()),
        Err(err) => eprintln!("oracle disagreement: {err}"),
    }
}
