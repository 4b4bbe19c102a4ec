//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! The random suites are seeded, so every run checks the same instances.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stabline::dual_space::{two_segment_parallelogram, Line};
use stabline::exact_geometry::{
    integer, phi, rational, rotate, translate, Point, Rational, RationalRotation,
};
use stabline::io::{grid_estimate, halfplane_region_vertices};
use stabline::line_selection::{feasibility_polygon, select_all, select_s1, select_s2, select_s3};
use stabline::transversal::{
    condition_ii, exists_transversal, extremal_max_line, extremal_min_line, stabs_all,
    SegmentFamily,
};
use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::time::{Duration, Instant};

fn criterion(number: u32, name: &str, body: impl FnOnce() + UnwindSafe) {
    let outcome = catch_unwind(body);
    match &outcome {
        Ok(()) => println!("acceptance criterion {number:2} ({name}): PASS"),
        Err(_) => println!("acceptance criterion {number:2} ({name}): FAIL"),
    }
    if let Err(payload) = outcome {
        resume_unwind(payload);
    }
}

fn family(raw: &[(i64, i64, i64)]) -> SegmentFamily {
    SegmentFamily::new(
        raw.iter()
            .map(|&(x, a, b)| (integer(x), integer(a), integer(b)))
            .collect(),
    )
    .unwrap()
}

fn figure5() -> SegmentFamily {
    family(&[
        (1, 1, 7),
        (3, 4, 10),
        (4, 3, 8),
        (7, 6, 9),
        (9, 3, 10),
        (10, 2, 12),
    ])
}

fn figure6() -> SegmentFamily {
    family(&[
        (1, 1, 7),
        (3, 4, 10),
        (4, 6, 8),
        (7, 4, 9),
        (9, 3, 10),
        (10, 2, 12),
    ])
}

fn figure13() -> SegmentFamily {
    family(&[
        (1, 1, 11),
        (2, 2, 12),
        (4, 3, 12),
        (6, 2, 11),
        (8, 2, 12),
        (9, 3, 13),
    ])
}

fn line(kn: i64, kd: i64, ln: i64, ld: i64) -> Line {
    Line::new(rational(kn, kd), rational(ln, ld))
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    rational(rng.gen_range(-20..=20), rng.gen_range(1..=3))
}

fn random_point(rng: &mut ChaCha8Rng) -> Point {
    Point::new(small_rational(rng), small_rational(rng))
}

/// Random family with n ∈ [2, 7], rational coordinates with numerators
/// in [−20, 20] and denominators in {1, 2, 3}, pairwise distinct
/// abscissas.
fn random_family(rng: &mut ChaCha8Rng) -> SegmentFamily {
    let n = rng.gen_range(2usize..=7);
    let mut xs: BTreeSet<Rational> = BTreeSet::new();
    while xs.len() < n {
        xs.insert(small_rational(rng));
    }
    let raw = xs
        .into_iter()
        .map(|x| {
            let a = small_rational(rng);
            let b = small_rational(rng);
            if a <= b {
                (x, a, b)
            } else {
                (x, b, a)
            }
        })
        .collect();
    SegmentFamily::new(raw).unwrap()
}

/// Existence oracle reimplemented here, independent of the library: a
/// transversal exists iff some join of two endpoints from two distinct
/// segments crosses every segment.
fn endpoint_pair_exists(family: &SegmentFamily) -> bool {
    let segments = family.segments();
    for i in 0..segments.len() {
        for j in (i + 1)..segments.len() {
            for p in [segments[i].lower_endpoint(), segments[i].upper_endpoint()] {
                for q in [segments[j].lower_endpoint(), segments[j].upper_endpoint()] {
                    let join = Line::through(&p, &q).unwrap();
                    if family
                        .segments()
                        .iter()
                        .all(|s| s.contains_ordinate(&join.value_at(s.x())))
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

const SUITE4_SEED: u64 = 0x5eed_0001;
const SUITE4_INSTANCES: usize = 10_000;

#[test]
fn criterion_01_figure5_golden() {
    criterion(1, "figure 5 golden", || {
        let start = Instant::now();
        let fam = figure5();
        assert_eq!(extremal_max_line(&fam), line(1, 1, 1, 1));
        assert_eq!(extremal_min_line(&fam), line(-1, 6, 43, 6));
        assert_eq!(select_s1(&fam).unwrap(), line(5, 12, 49, 12));
        let polygon = feasibility_polygon(&fam);
        let vertices: BTreeSet<Line> = polygon.vertices().iter().cloned().collect();
        let expected: BTreeSet<Line> = [
            line(1, 2, 5, 2),
            line(-1, 6, 43, 6),
            line(1, 3, 20, 3),
            line(1, 2, 11, 2),
            line(1, 1, 1, 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(vertices, expected);
        assert_eq!(select_s2(&fam).unwrap(), line(13, 30, 137, 30));
        assert_eq!(polygon.area(), integer(2));
        assert_eq!(select_s3(&fam).unwrap(), line(5, 12, 107, 24));
        assert!(start.elapsed() < Duration::from_secs(1), "exceeded 1 s");
    });
}

#[test]
fn criterion_02_figure6_golden() {
    criterion(2, "figure 6 golden", || {
        let fam = figure6();
        assert_eq!(extremal_max_line(&fam), line(4, 5, 14, 5));
        assert_eq!(extremal_min_line(&fam), line(-1, 3, 22, 3));
        assert_eq!(select_s1(&fam).unwrap(), line(7, 30, 76, 15));
        assert_eq!(select_s2(&fam).unwrap(), line(13, 40, 223, 40));
        assert_eq!(feasibility_polygon(&fam).area(), rational(71, 60));
        assert_eq!(select_s3(&fam).unwrap(), line(39731, 127800, 11873, 2130));
    });
}

#[test]
fn criterion_03_figure13_golden() {
    criterion(3, "figure 13 golden", || {
        let fam = figure13();
        let vertices: BTreeSet<Line> = feasibility_polygon(&fam)
            .vertices()
            .iter()
            .cloned()
            .collect();
        let expected: BTreeSet<Line> = [
            line(1, 1, 0, 1),
            line(1, 2, 1, 1),
            line(0, 1, 3, 1),
            line(-1, 1, 12, 1),
            line(0, 1, 11, 1),
            line(1, 2, 8, 1),
            line(1, 1, 4, 1),
            line(3, 2, -1, 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(vertices, expected);
        assert_eq!(select_s1(&fam).unwrap(), line(1, 4, 23, 4));
        assert_eq!(select_s2(&fam).unwrap(), line(7, 16, 77, 16));
        assert_eq!(select_s3(&fam).unwrap(), line(11, 46, 267, 46));
    });
}

#[test]
fn criterion_04_theorem_equivalence_suite() {
    criterion(4, "theorem equivalence, 10000 families", || {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(SUITE4_SEED);
        for instance in 0..SUITE4_INSTANCES {
            let fam = random_family(&mut rng);
            let by_oracle = endpoint_pair_exists(&fam);
            let by_max = stabs_all(&extremal_max_line(&fam), &fam);
            let by_min = stabs_all(&extremal_min_line(&fam), &fam);
            assert_eq!(by_oracle, by_max, "instance {instance}: {fam:?}");
            assert_eq!(by_oracle, by_min, "instance {instance}: {fam:?}");
            if fam.len() >= 3 {
                assert_eq!(
                    by_oracle,
                    condition_ii(&fam),
                    "instance {instance}: {fam:?}"
                );
            }
        }
        let elapsed = start.elapsed();
        assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    });
}

#[test]
fn criterion_05_phi_invariance_properties() {
    criterion(5, "phi invariances P1/P2/P5, 10000 each", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
        for _ in 0..10_000 {
            let (a, b, c) = (
                random_point(&mut rng),
                random_point(&mut rng),
                random_point(&mut rng),
            );
            let reference = phi(&a, &b, &c);

            // Translation invariance.
            let v = (small_rational(&mut rng), small_rational(&mut rng));
            assert_eq!(
                phi(&translate(&a, &v), &translate(&b, &v), &translate(&c, &v)),
                reference
            );

            // Rotation invariance over exact unit-circle rationals.
            let m = rng.gen_range(-50i64..=50);
            let n = rng.gen_range(-50i64..=50);
            let rot = RationalRotation::from_parameters(m, n)
                .unwrap_or_else(|| RationalRotation::from_parameters(3, 4).unwrap());
            assert_eq!(
                phi(&rotate(&a, &rot), &rotate(&b, &rot), &rotate(&c, &rot)),
                reference
            );

            // Difference identity for a vertical point pair, including
            // the equality-iff-coincidence clause.
            let (b, c) = if b.x == c.x {
                (b, Point::new(&c.x + integer(1), c.y.clone()))
            } else if b.x < c.x {
                (b, c)
            } else {
                (c, b)
            };
            let d = if rng.gen_bool(0.1) {
                a.clone()
            } else {
                Point::new(a.x.clone(), small_rational(&mut rng))
            };
            let difference = phi(&a, &b, &c) - phi(&d, &b, &c);
            assert_eq!(difference, (&a.y - &d.y) * (&c.x - &b.x));
            assert_eq!(difference.is_zero(), a == d);
        }
    });
}

#[test]
fn criterion_06_parallelogram_centroid_midline() {
    criterion(6, "two-segment centroid midline, 1000 families", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
        let quarter = rational(1, 4);
        let two = integer(2);
        for _ in 0..1_000 {
            let x0 = small_rational(&mut rng);
            let mut x1 = small_rational(&mut rng);
            if x1 == x0 {
                x1 += integer(21);
            }
            let sort = |a: Rational, b: Rational| if a <= b { (a, b) } else { (b, a) };
            let (a, b) = sort(small_rational(&mut rng), small_rational(&mut rng));
            let (e, f) = sort(small_rational(&mut rng), small_rational(&mut rng));
            let parallelogram = two_segment_parallelogram(
                (x0.clone(), a.clone(), b.clone()),
                (x1.clone(), e.clone(), f.clone()),
            )
            .unwrap();
            let mean_k: Rational = parallelogram
                .vertices()
                .iter()
                .map(|v| &v.k)
                .sum::<Rational>()
                * &quarter;
            let mean_l: Rational = parallelogram
                .vertices()
                .iter()
                .map(|v| &v.l)
                .sum::<Rational>()
                * &quarter;
            // Independent route: the dual of the line through midpoints.
            let midline = Line::through(
                &Point::new(x0, (&a + &b) / &two),
                &Point::new(x1, (&e + &f) / &two),
            )
            .unwrap();
            assert_eq!(Line::new(mean_k, mean_l), midline);
        }
    });
}

#[test]
fn criterion_07_slope_extremality() {
    criterion(7, "slope bounds on sampled transversals", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SUITE4_SEED);
        let mut sample_rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
        for _ in 0..SUITE4_INSTANCES {
            let fam = random_family(&mut rng);
            if !exists_transversal(&fam) {
                continue;
            }
            let r = extremal_max_line(&fam);
            let p = extremal_min_line(&fam);
            assert!(stabs_all(&r, &fam) && stabs_all(&p, &fam));
            let polygon = feasibility_polygon(&fam);
            let ks: Vec<&Rational> = polygon.vertices().iter().map(|v| &v.k).collect();
            // r and p attain the slope bounds.
            assert_eq!(ks.iter().copied().max().unwrap(), &r.k);
            assert_eq!(ks.iter().copied().min().unwrap(), &p.k);
            // Random convex combinations of the vertices stay within.
            for _ in 0..1_000 {
                let mut weight_total = integer(0);
                let mut slope_sum = integer(0);
                for k in &ks {
                    let w = integer(sample_rng.gen_range(0i64..=9));
                    slope_sum += *k * &w;
                    weight_total += w;
                }
                if weight_total.is_zero() {
                    continue;
                }
                let slope = slope_sum / weight_total;
                assert!(p.k <= slope && slope <= r.k);
            }
        }
    });
}

#[test]
fn criterion_08_region_oracle_equivalence() {
    criterion(8, "region equals half-plane clipping", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SUITE4_SEED);
        for instance in 0..SUITE4_INSTANCES {
            let fam = random_family(&mut rng);
            let built: BTreeSet<Line> = feasibility_polygon(&fam)
                .vertices()
                .iter()
                .cloned()
                .collect();
            let clipped: BTreeSet<Line> = halfplane_region_vertices(&fam).into_iter().collect();
            assert_eq!(built, clipped, "instance {instance}: {fam:?}");
        }
    });
}

#[test]
fn criterion_09_grid_centroid_oracle() {
    criterion(9, "grid centroid within 1/100 at 1/400", || {
        let resolution = rational(1, 400);
        let tolerance = rational(1, 100);
        for fam in [figure5(), figure6(), figure13()] {
            let polygon = feasibility_polygon(&fam);
            let estimate = grid_estimate(&polygon, &resolution).unwrap();
            let exact = select_s3(&fam).unwrap();
            assert!((&estimate.k - &exact.k).abs() <= tolerance);
            assert!((&estimate.l - &exact.l).abs() <= tolerance);
        }
    });
}

#[test]
fn criterion_10_selector_feasibility() {
    criterion(10, "selected lines stab every segment", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SUITE4_SEED);
        for _ in 0..SUITE4_INSTANCES {
            let fam = random_family(&mut rng);
            if !exists_transversal(&fam) {
                continue;
            }
            let lines = select_all(&fam).unwrap();
            for line in [&lines.s1, &lines.s2, &lines.s3] {
                assert!(stabs_all(line, &fam), "{line} fails on {fam:?}");
            }
        }
    });
}
