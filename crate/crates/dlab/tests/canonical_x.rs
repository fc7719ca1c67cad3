use dlab::data::{canonical_x_path, load_canonical_x};
use dlab::formats::{parse_pointset, read_pointset};
use dlab::search::{candidate_file, run_search};
use dlab_core::coloring::{pentagon_with_side, prop4_excluded};
use dlab_core::constructions::make_double_chain;
use dlab_core::geometry::{convex_k_subset_exists, same_order_type, Point, PointSet, Role};
use dlab_core::xset::{verify_x_properties, XCheck, XSet};

fn x() -> XSet {
    load_canonical_x().expect("canonical configuration")
}

/// Header comment recording the search call that produced the file.
fn provenance() -> (u64, u64) {
    let text = std::fs::read_to_string(canonical_x_path()).unwrap();
    let line = text.lines().next().unwrap();
    let num_after = |key: &str| -> u64 {
        let rest = &line[line.find(key).unwrap() + key.len()..];
        rest.split(|c: char| !c.is_ascii_digit()).next().unwrap().parse().unwrap()
    };
    (num_after("--seed "), num_after("--budget "))
}

#[test]
fn canonical_file_is_labeled_5_5_3_3() {
    let ps = read_pointset(canonical_x_path()).unwrap();
    let labels = ps.labels().unwrap();
    for (role, count) in [(Role::A, 5), (Role::B, 5), (Role::T1, 3), (Role::T2, 3)] {
        assert_eq!(labels.iter().filter(|&&r| r == role).count(), count);
    }
}

#[test]
fn canonical_x_passes_every_structural_check() {
    let report = verify_x_properties(&x());
    assert_eq!(report.results.len(), XCheck::ALL.len());
    assert!(report.all_pass(), "{:?}", report.first_failure());
}

#[test]
fn t_points_form_small_double_chain_and_no_hexagon() {
    let x = x();
    let t = x.points().subset(&x.t());
    assert!(same_order_type(&t, &make_double_chain(3, 3).unwrap()).unwrap().is_some());
    assert!(convex_k_subset_exists(x.points(), 6).unwrap().is_none());
}

#[test]
fn coordinates_keep_tenfold_margin() {
    let limit = dlab_core::geometry::COORD_LIMIT / 10;
    assert!(x().points().points().iter().all(|p| p.x.abs() < limit && p.y.abs() < limit));
}

#[test]
fn t_cluster_is_under_one_percent_of_ab_spread() {
    let x = x();
    let diam = |idx: &[usize]| -> f64 {
        let mut d: f64 = 0.0;
        for &i in idx {
            for &j in idx {
                let (p, q) = (x.points().point(i), x.points().point(j));
                d = d.max(((p.x - q.x) as f64).hypot((p.y - q.y) as f64));
            }
        }
        d
    };
    let ab: Vec<usize> = x.a().iter().chain(x.b()).copied().collect();
    assert!(diam(&x.t()) < diam(&ab) / 100.0);
}

#[test]
fn excluded_segments_cover_every_non_pentagon_side() {
    let x = x();
    let excluded = prop4_excluded(&x);
    assert_eq!(excluded.len(), 20);
    let eligible: Vec<_> = x.points().all_segments().into_iter().filter(|e| !excluded.contains(e)).collect();
    assert_eq!(eligible.len(), 100);
    for e in eligible {
        assert!(pentagon_with_side(&x, e).is_some(), "{}{}", x.name_of(e.i), x.name_of(e.j));
    }
}

#[test]
fn search_reproduces_canonical_file() {
    let (seed, budget) = provenance();
    let mut trace = Vec::new();
    let found = run_search(seed, budget, |l| trace.push(l.to_string())).unwrap();
    let text = std::fs::read_to_string(canonical_x_path()).unwrap();
    assert_eq!(candidate_file(&found), text);
    assert_eq!(parse_pointset(&text).unwrap(), *found.x.points());
    assert_eq!(trace.len() as u64, budget);
    assert!(trace.last().unwrap().ends_with("accept -"));
    for line in &trace {
        assert_eq!(line.split(' ').count(), 4, "{line}");
    }
}

#[test]
fn search_is_deterministic() {
    let run = || {
        let mut lines = Vec::new();
        let r = run_search(5, 40, |l| lines.push(l.to_string()));
        (r.map(|c| c.x).map_err(|e| e.to_string()), lines)
    };
    assert_eq!(run(), run());
}

#[test]
fn exhausted_budget_reports_furthest_attempt() {
    let (seed, budget) = provenance();
    let e = run_search(seed, budget - 1, |_| {}).unwrap_err();
    assert_eq!(e.attempts, budget - 1);
    assert!(e.best.is_some());
}

fn with_points(x: &XSet, f: impl Fn(usize, Point) -> Point) -> XSet {
    let ps = x.points();
    let pts: Vec<Point> = (0..ps.len()).map(|i| f(i, ps.point(i))).collect();
    let labels = ps.labels().unwrap().to_vec();
    XSet::new(PointSet::new(pts).unwrap().with_labels(labels).unwrap()).unwrap()
}

#[test]
fn large_single_coordinate_offsets_break_a_check() {
    let x = x();
    let offset = dlab_core::xset::MUTATION_OFFSET;
    for i in 0..16 {
        for axis in 0..2 {
            for sign in [1, -1] {
                let y = with_points(&x, |j, p| match (j == i, axis) {
                    (false, _) => p,
                    (true, 0) => Point::new(p.x + sign * offset, p.y),
                    (true, _) => Point::new(p.x, p.y + sign * offset),
                });
                assert!(!verify_x_properties(&y).all_pass(), "point {} axis {axis} sign {sign}", x.name_of(i));
            }
        }
    }
}

#[test]
fn reflecting_an_a_point_across_the_ab_axis_breaks_an_order_type_check() {
    let x = x();
    let centroid = |idx: &[usize]| {
        let n = idx.len() as f64;
        let sx: f64 = idx.iter().map(|&i| x.points().point(i).x as f64).sum();
        let sy: f64 = idx.iter().map(|&i| x.points().point(i).y as f64).sum();
        (sx / n, sy / n)
    };
    let (ca, cb) = (centroid(x.a()), centroid(x.b()));
    // Axis: the perpendicular bisector of the two centroids.
    let (mx, my) = ((ca.0 + cb.0) / 2.0, (ca.1 + cb.1) / 2.0);
    let (nx, ny) = (cb.0 - ca.0, cb.1 - ca.1);
    let norm = nx * nx + ny * ny;
    let order_type_checks = [
        XCheck::ABDoubleChain,
        XCheck::AT1DoubleChain,
        XCheck::T2BDoubleChain,
        XCheck::T1T2DoubleChain,
        XCheck::AT2MatchesBT1,
    ];
    for &a in x.a() {
        let y = with_points(&x, |j, p| {
            if j != a {
                return p;
            }
            let d = ((p.x as f64 - mx) * nx + (p.y as f64 - my) * ny) / norm;
            Point::new((p.x as f64 - 2.0 * d * nx).round() as i64, (p.y as f64 - 2.0 * d * ny).round() as i64)
        });
        let report = verify_x_properties(&y);
        let failed = report.results.iter().any(|(c, ok)| !ok && order_type_checks.contains(c));
        assert!(failed, "reflecting {}", x.name_of(a));
    }
}

#[test]
fn swapping_a_and_b_labels_breaks_a_t1_chain() {
    let x = x();
    let labels: Vec<Role> = x
        .points()
        .labels()
        .unwrap()
        .iter()
        .map(|r| match r {
            Role::A => Role::B,
            Role::B => Role::A,
            other => *other,
        })
        .collect();
    let swapped = XSet::new(x.points().clone().without_labels().with_labels(labels).unwrap()).unwrap();
    let report = verify_x_properties(&swapped);
    assert!(report.results.iter().any(|&(c, ok)| c == XCheck::AT1DoubleChain && !ok));
}
