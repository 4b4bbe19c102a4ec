//! Render a family as SVG in both planes: the primal scene with its
//! selected lines, and the dual feasibility polygon.

use stabline::exact_geometry::integer;
use stabline::io::{render_svg, run_report, InstanceDocument, RenderMode, ReportOptions};

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
    let result = run_report(&doc, &ReportOptions::full()).expect("valid instance");

    let out_dir = std::env::temp_dir();
    for (mode, file) in [
        (RenderMode::Primal, "stabline_primal.svg"),
        (RenderMode::Dual, "stabline_dual.svg"),
    ] {
        let svg = render_svg(&doc, &result, mode).expect("valid instance");
        let path = out_dir.join(file);
        std::fs::write(&path, svg).expect("writable temp dir");
        println!("wrote {}", path.display());
    }
}
