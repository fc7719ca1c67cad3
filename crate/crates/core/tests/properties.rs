use dlab_core::exact::chromatic_number;
use dlab_core::geometry::{
    in_general_position, orient, same_order_type, segment_relation, Orientation, Point, PointSet, SegmentRelation,
    COORD_LIMIT,
};
use dlab_core::graph::{build_disjointness, kg_embedding_gap, Graph};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// Sign of the 3x3 determinant expanded along the constant column.
fn det_sign(p: Point, q: Point, r: Point) -> i8 {
    let (px, py, qx, qy, rx, ry) = (p.x as i128, p.y as i128, q.x as i128, q.y as i128, r.x as i128, r.y as i128);
    let d = px * qy - py * qx + qx * ry - qy * rx + rx * py - ry * px;
    d.signum() as i8
}

/// Crossing test for segments with four distinct endpoints in general position.
fn crosses(a: Point, b: Point, c: Point, d: Point) -> bool {
    det_sign(a, b, c) * det_sign(a, b, d) < 0 && det_sign(c, d, a) * det_sign(c, d, b) < 0
}

fn coord() -> impl Strategy<Value = i64> {
    -COORD_LIMIT..=COORD_LIMIT
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
}

fn general_set(min: usize, max: usize, span: i64) -> impl Strategy<Value = PointSet> {
    prop::collection::vec((-span..=span, -span..=span), min..=max).prop_filter_map("general position", |c| {
        let ps = PointSet::from_coords(&c).ok()?;
        in_general_position(&ps).then_some(ps)
    })
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn orientation_is_antisymmetric_and_cyclic(p in point(), q in point(), r in point()) {
        let o = orient(p, q, r);
        prop_assert_eq!(o.as_i8(), det_sign(p, q, r));
        prop_assert_eq!(orient(q, p, r), o.reverse());
        prop_assert_eq!(orient(p, r, q), o.reverse());
        prop_assert_eq!(orient(q, r, p), o);
        prop_assert_eq!(orient(r, p, q), o);
    }

    #[test]
    fn repeated_point_is_collinear(p in point(), q in point()) {
        prop_assert_eq!(orient(p, p, q), Orientation::Collinear);
        prop_assert_eq!(orient(p, q, q), Orientation::Collinear);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn segment_relation_partitions_pairs(ps in general_set(4, 8, 1000)) {
        let segs = ps.all_segments();
        for (x, y) in pairs(segs.len()) {
            let (e, f) = (segs[x], segs[y]);
            let rel = segment_relation(&ps, e, f).unwrap();
            prop_assert_eq!(rel, segment_relation(&ps, f, e).unwrap());
            let shared = e.i == f.i || e.i == f.j || e.j == f.i || e.j == f.j;
            let expected = if shared {
                SegmentRelation::Incident
            } else if crosses(ps.point(e.i), ps.point(e.j), ps.point(f.i), ps.point(f.j)) {
                SegmentRelation::Crossing
            } else {
                SegmentRelation::Disjoint
            };
            prop_assert_eq!(rel, expected);
        }
    }

    #[test]
    fn kneser_gap_counts_crossings(ps in general_set(2, 10, 100_000)) {
        let n = ps.len();
        let mut crossings = 0;
        if n >= 4 {
            let segs = ps.all_segments();
            for (x, y) in pairs(segs.len()) {
                let (e, f) = (segs[x], segs[y]);
                if !e.shares_endpoint(&f) && crosses(ps.point(e.i), ps.point(e.j), ps.point(f.i), ps.point(f.j)) {
                    crossings += 1;
                }
            }
        }
        prop_assert_eq!(kg_embedding_gap(&ps).unwrap(), crossings);
    }
}

fn check_isomorphism(p: &PointSet, q: &PointSet, f: &[usize]) -> Result<(), TestCaseError> {
    let dp = build_disjointness(p).unwrap();
    let dq = build_disjointness(q).unwrap();
    let map = |v: usize| {
        let e = dp.segment(v);
        dq.vertex_between(f[e.i], f[e.j]).unwrap()
    };
    for (u, v) in pairs(dp.vertex_count()) {
        prop_assert_eq!(dp.graph().has_edge(u, v), dq.graph().has_edge(map(u), map(v)));
    }
    prop_assert_eq!(dp.edge_count(), dq.edge_count());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// Images under orientation-preserving affine maps, relabeled, have the
    /// same order type; any bijection found must induce an isomorphism.
    #[test]
    fn order_type_implies_isomorphic_graphs(
        p in general_set(3, 8, 1000),
        m in (-5i64..=5, -5i64..=5, -5i64..=5, -5i64..=5).prop_filter("positive determinant", |m| m.0 * m.3 - m.1 * m.2 > 0),
        shift in (-1000i64..=1000, -1000i64..=1000),
        perm_seed in any::<u64>(),
    ) {
        let n = p.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let image = |pt: Point| Point::new(m.0 * pt.x + m.1 * pt.y + shift.0, m.2 * pt.x + m.3 * pt.y + shift.1);
        let q = PointSet::new(perm.iter().map(|&i| image(p.point(i))).collect()).unwrap();
        let f = same_order_type(&p, &q).unwrap();
        prop_assert!(f.is_some());
        let f = f.unwrap();
        for (a, b) in pairs(n) {
            for c in 0..n {
                prop_assert_eq!(p.orient(a, b, c), q.orient(f[a], f[b], f[c]));
            }
        }
        check_isomorphism(&p, &q, &f)?;
    }

    #[test]
    fn unrelated_sets_matching_order_type_are_isomorphic(p in general_set(4, 6, 20), q in general_set(4, 6, 20)) {
        if let Some(f) = same_order_type(&p, &q).unwrap() {
            check_isomorphism(&p, &q, &f)?;
        }
    }
}

/// Chromatic number by inclusion-exclusion over independent sets: `G` is
/// `k`-colorable iff `sum_S (-1)^{n-|S|} i(S)^k != 0`, with `i(S)` the number
/// of independent subsets of `S`. Evaluated modulo two primes.
fn chi_by_inclusion_exclusion(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let full = 1usize << n;
    let adj: Vec<usize> = (0..n).map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0, |m, v| m | 1 << v)).collect();
    let mut indep = vec![0u64; full];
    indep[0] = 1;
    for s in 1..full {
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        indep[s] = u64::from(indep[rest] == 1 && adj[v] & rest == 0);
    }
    // Zeta transform: count independent subsets of each S.
    for v in 0..n {
        for s in 0..full {
            if s & 1 << v != 0 {
                indep[s] += indep[s & !(1 << v)];
            }
        }
    }
    for k in 1..=n {
        let nonzero = [1_000_000_007u64, 998_244_353].iter().any(|&p| {
            let mut total = 0u64;
            for (s, &i) in indep.iter().enumerate() {
                let mut pow = 1u64;
                for _ in 0..k {
                    pow = pow * (i % p) % p;
                }
                if (n - s.count_ones() as usize).is_multiple_of(2) {
                    total = (total + pow) % p;
                } else {
                    total = (total + p - pow) % p;
                }
            }
            total != 0
        });
        if nonzero {
            return k;
        }
    }
    n
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn chromatic_number_matches_inclusion_exclusion(
        n in 1usize..=16,
        density in 0.05f64..0.95,
        bits in prop::collection::vec(0.0f64..1.0, 120),
    ) {
        let mut g = Graph::new(n);
        for (k, (u, v)) in pairs(n).into_iter().enumerate() {
            if bits[k] < density {
                g.add_edge(u, v);
            }
        }
        let cert = chromatic_number(&g, u64::MAX);
        prop_assert!(cert.is_exact());
        prop_assert_eq!(cert.chi, chi_by_inclusion_exclusion(&g));
        prop_assert!(dlab_core::exact::verify_certificate(&g, &cert, None));
    }
}
