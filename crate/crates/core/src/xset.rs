//! The labeled 16-point configuration: groups `A`, `B` (five points each) and
//! `T1`, `T2` (three each), its structural checks, and the seeded search that
//! produces one.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::coloring::{pentagon_with_side, q_plus, PROP4_EXCLUDED};
use crate::constructions::make_double_chain;
use crate::geometry::{convex_k_subset_exists, in_general_position, same_order_type, Point, PointSet, Role, SegmentId};
use crate::graph::build_disjointness;
use crate::lemmas::{evaluate, instances, Claim};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XError {
    /// The point set is not labeled 5/5/3/3 with roles A, B, T1, T2.
    Labels,
}

impl fmt::Display for XError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XError::Labels => write!(f, "expected 16 points labeled 5 A, 5 B, 3 T1, 3 T2"),
        }
    }
}

impl core::error::Error for XError {}

/// A 16-point set with validated labels. Within each group, points are
/// numbered from 1 in file order: `a1..a5`, `b1..b5`, `t1^1..t1^3`,
/// `t2^1..t2^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSet {
    ps: PointSet,
    a: Vec<usize>,
    b: Vec<usize>,
    t1: Vec<usize>,
    t2: Vec<usize>,
}

impl XSet {
    pub fn new(ps: PointSet) -> Result<Self, XError> {
        if ps.labels().is_none() || ps.len() != 16 {
            return Err(XError::Labels);
        }
        let a = ps.indices_of(Role::A);
        let b = ps.indices_of(Role::B);
        let t1 = ps.indices_of(Role::T1);
        let t2 = ps.indices_of(Role::T2);
        if a.len() != 5 || b.len() != 5 || t1.len() != 3 || t2.len() != 3 {
            return Err(XError::Labels);
        }
        Ok(XSet { ps, a, b, t1, t2 })
    }

    pub fn points(&self) -> &PointSet {
        &self.ps
    }

    pub fn into_points(self) -> PointSet {
        self.ps
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn t1(&self) -> &[usize] {
        &self.t1
    }

    pub fn t2(&self) -> &[usize] {
        &self.t2
    }

    /// `T1 ∪ T2`, T1 first.
    pub fn t(&self) -> Vec<usize> {
        self.t1.iter().chain(&self.t2).copied().collect()
    }

    pub fn group(&self, role: Role) -> &[usize] {
        match role {
            Role::A => &self.a,
            Role::B => &self.b,
            Role::T1 => &self.t1,
            Role::T2 => &self.t2,
            Role::Unlabeled => &[],
        }
    }

    /// Index of a point by name: `a3`, `b1`, `t1^2`, `t2^3`.
    pub fn named(&self, name: &str) -> Option<usize> {
        let (group, rank) = if let Some(rest) = name.strip_prefix("t1^") {
            (&self.t1, rest)
        } else if let Some(rest) = name.strip_prefix("t2^") {
            (&self.t2, rest)
        } else if let Some(rest) = name.strip_prefix('a') {
            (&self.a, rest)
        } else {
            let rest = name.strip_prefix('b')?;
            (&self.b, rest)
        };
        let r: usize = rank.parse().ok()?;
        group.get(r.checked_sub(1)?).copied()
    }

    /// Name of point `p`.
    pub fn name_of(&self, p: usize) -> String {
        let rank = |g: &[usize]| g.iter().position(|&q| q == p).map(|r| r + 1).unwrap_or(0);
        match self.ps.role(p) {
            Role::A => format!("a{}", rank(&self.a)),
            Role::B => format!("b{}", rank(&self.b)),
            Role::T1 => format!("t1^{}", rank(&self.t1)),
            Role::T2 => format!("t2^{}", rank(&self.t2)),
            Role::Unlabeled => format!("p{p}"),
        }
    }
}

fn union(parts: &[&[usize]]) -> Vec<usize> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XCheck {
    GeneralPosition,
    NoConvexHexagon,
    NoAxisParallelSegment,
    TSlopesNegative,
    ABDoubleChain,
    AT1DoubleChain,
    T2BDoubleChain,
    T1T2DoubleChain,
    AT2MatchesBT1,
    SeparableA,
    SeparableB,
    SeparableT1,
    SeparableT2,
    SeparableAB,
    SeparableT1T2,
}

impl XCheck {
    pub const ALL: [XCheck; 15] = [
        XCheck::GeneralPosition,
        XCheck::NoConvexHexagon,
        XCheck::NoAxisParallelSegment,
        XCheck::TSlopesNegative,
        XCheck::ABDoubleChain,
        XCheck::AT1DoubleChain,
        XCheck::T2BDoubleChain,
        XCheck::T1T2DoubleChain,
        XCheck::AT2MatchesBT1,
        XCheck::SeparableA,
        XCheck::SeparableB,
        XCheck::SeparableT1,
        XCheck::SeparableT2,
        XCheck::SeparableAB,
        XCheck::SeparableT1T2,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            XCheck::GeneralPosition => "general-position",
            XCheck::NoConvexHexagon => "no-convex-hexagon",
            XCheck::NoAxisParallelSegment => "no-axis-parallel-segment",
            XCheck::TSlopesNegative => "t-slopes-negative",
            XCheck::ABDoubleChain => "A+B~C(5,5)",
            XCheck::AT1DoubleChain => "A+T1~C(5,3)",
            XCheck::T2BDoubleChain => "T2+B~C(3,5)",
            XCheck::T1T2DoubleChain => "T1+T2~C(3,3)",
            XCheck::AT2MatchesBT1 => "A+T2~B+T1",
            XCheck::SeparableA => "separable-A",
            XCheck::SeparableB => "separable-B",
            XCheck::SeparableT1 => "separable-T1",
            XCheck::SeparableT2 => "separable-T2",
            XCheck::SeparableAB => "separable-A+B",
            XCheck::SeparableT1T2 => "separable-T1+T2",
        }
    }
}

/// Per-check results in the fixed order of [`XCheck::ALL`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XReport {
    pub results: Vec<(XCheck, bool)>,
}

impl XReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.1)
    }

    pub fn first_failure(&self) -> Option<XCheck> {
        self.results.iter().find(|r| !r.1).map(|r| r.0)
    }

    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.1).count()
    }
}

fn matches_double_chain(ps: &PointSet, idx: &[usize], k: usize, l: usize) -> bool {
    let model = make_double_chain(k, l).expect("positive sizes");
    same_order_type(&ps.subset(idx), &model).ok().flatten().is_some()
}

/// Runs every check; later checks are still evaluated after a failure
/// unless they need general position.
pub fn verify_x_properties(x: &XSet) -> XReport {
    verify_until(x, false)
}

/// Like [`verify_x_properties`], but stops at the first failure; the
/// remaining checks are reported as failed.
pub fn verify_x_fast(x: &XSet) -> XReport {
    verify_until(x, true)
}

fn verify_until(x: &XSet, stop: bool) -> XReport {
    let ps = x.points();
    let general = in_general_position(ps);
    let graph = general.then(|| build_disjointness(ps).expect("general position"));
    let mut results = Vec::with_capacity(XCheck::ALL.len());
    let mut failed = false;
    for check in XCheck::ALL {
        if stop && failed {
            results.push((check, false));
            continue;
        }
        let ok = match check {
            XCheck::GeneralPosition => general,
            XCheck::NoConvexHexagon => general && convex_k_subset_exists(ps, 6).ok().flatten().is_none(),
            XCheck::NoAxisParallelSegment => ps.all_segments().iter().all(|e| {
                let (p, q) = (ps.point(e.i), ps.point(e.j));
                p.x != q.x && p.y != q.y
            }),
            XCheck::TSlopesNegative => [x.t1(), x.t2()].iter().all(|t| {
                crate::geometry::segments_of(t).iter().all(|e| {
                    let (p, q) = (ps.point(e.i), ps.point(e.j));
                    (p.x - q.x) * (p.y - q.y) < 0
                })
            }),
            XCheck::ABDoubleChain => general && matches_double_chain(ps, &union(&[x.a(), x.b()]), 5, 5),
            XCheck::AT1DoubleChain => general && matches_double_chain(ps, &union(&[x.a(), x.t1()]), 5, 3),
            XCheck::T2BDoubleChain => general && matches_double_chain(ps, &union(&[x.t2(), x.b()]), 3, 5),
            XCheck::T1T2DoubleChain => general && matches_double_chain(ps, &union(&[x.t1(), x.t2()]), 3, 3),
            XCheck::AT2MatchesBT1 => {
                general
                    && same_order_type(&ps.subset(&union(&[x.a(), x.t2()])), &ps.subset(&union(&[x.b(), x.t1()])))
                        .ok()
                        .flatten()
                        .is_some()
            }
            XCheck::SeparableA
            | XCheck::SeparableB
            | XCheck::SeparableT1
            | XCheck::SeparableT2
            | XCheck::SeparableAB
            | XCheck::SeparableT1T2 => {
                let q = match check {
                    XCheck::SeparableA => x.a().to_vec(),
                    XCheck::SeparableB => x.b().to_vec(),
                    XCheck::SeparableT1 => x.t1().to_vec(),
                    XCheck::SeparableT2 => x.t2().to_vec(),
                    XCheck::SeparableAB => union(&[x.a(), x.b()]),
                    _ => x.t(),
                };
                graph.as_ref().is_some_and(|g| q_plus(g, &q).is_empty())
            }
        };
        failed |= !ok;
        results.push((check, ok));
    }
    XReport { results }
}

/// Point names in slot order: `a1..a5`, `b1..b5`, `t1^1..t1^3`, `t2^1..t2^3`.
pub const SLOT_NAMES: [&str; 16] =
    ["a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5", "t1^1", "t1^2", "t1^3", "t2^1", "t2^2", "t2^3"];

fn slot_of(name: &str) -> usize {
    SLOT_NAMES.iter().position(|&s| s == name).expect("slot name")
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return alloc::vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

/// The outcome of [`best_relabeling`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    /// Segments in `segments` that the relabeled set does not list in `excluded`.
    pub uncovered: usize,
    /// The same points reordered into slot order and relabeled.
    pub x: XSet,
}

/// Renumbers the points of `x` within each group, optionally exchanging the
/// roles A with B and T1 with T2 (a symmetry of every structural check), so
/// that as many of `segments` as possible become pairs named in `excluded`.
/// Ties are broken by enumeration order, so the result is deterministic.
pub fn best_relabeling(x: &XSet, segments: &[SegmentId], excluded: &[(&str, &str)]) -> Relabeling {
    let mut allowed = [[false; 16]; 16];
    for &(p, q) in excluded {
        let (p, q) = (slot_of(p), slot_of(q));
        allowed[p][q] = true;
        allowed[q][p] = true;
    }
    let groups = [x.a(), x.b(), x.t1(), x.t2()];
    let ranges = [0..5, 5..10, 10..13, 13..16];
    let mut best: Option<(usize, [usize; 16])> = None;
    for swap in [false, true] {
        let order = if swap { [1, 0, 3, 2] } else { [0, 1, 2, 3] };
        let choices: Vec<Vec<Vec<usize>>> = (0..4)
            .map(|slot_group| {
                let members = groups[order[slot_group]];
                let slots = ranges[slot_group].clone();
                let mut seen = Vec::new();
                for p in permutations(members) {
                    // Slots with identical rows of `allowed` are interchangeable:
                    // keep one representative with their points in increasing order.
                    let mut key = p.clone();
                    for s in slots.clone() {
                        let class: Vec<usize> = slots.clone().filter(|&t| allowed[t] == allowed[s]).collect();
                        if class[0] != s {
                            continue;
                        }
                        let mut held: Vec<usize> = class.iter().map(|&t| p[t - slots.start]).collect();
                        held.sort_unstable();
                        for (k, &t) in class.iter().enumerate() {
                            key[t - slots.start] = held[k];
                        }
                    }
                    if !seen.contains(&key) {
                        seen.push(key);
                    }
                }
                seen
            })
            .collect();
        for pa in &choices[0] {
            for pb in &choices[1] {
                for p1 in &choices[2] {
                    for p2 in &choices[3] {
                        let mut slot = [0usize; 16];
                        let mut point_at = [0usize; 16];
                        for (k, &p) in pa.iter().chain(pb).chain(p1).chain(p2).enumerate() {
                            slot[p] = k;
                            point_at[k] = p;
                        }
                        let bad = segments.iter().filter(|e| !allowed[slot[e.i]][slot[e.j]]).count();
                        if best.as_ref().is_none_or(|b| bad < b.0) {
                            best = Some((bad, point_at));
                        }
                    }
                }
            }
        }
    }
    let (uncovered, point_at) = best.expect("at least one labeling");
    let roles = [Role::A, Role::B, Role::T1, Role::T2];
    let labels: Vec<Role> = (0..4).flat_map(|g| core::iter::repeat_n(roles[g], ranges[g].len())).collect();
    let ps = x.points().subset(&point_at).without_labels().with_labels(labels).expect("16 labels");
    Relabeling { uncovered, x: XSet::new(ps).expect("5/5/3/3") }
}

/// Node budget for each exact screen run during [`search_x`].
pub const SCREEN_BUDGET: u64 = 50_000_000;

/// Why an attempt of [`search_x`] was rejected, in screening order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// The template produced coincident points.
    Template,
    Structure(XCheck),
    /// `T1 ∪ T2` is not small relative to `A ∪ B`.
    TCluster,
    /// Segments that are no side of a convex pentagon and are not covered
    /// by [`crate::coloring::PROP4_EXCLUDED`] under any relabeling.
    Pentagons(usize),
    /// Moving this point by [`MUTATION_OFFSET`] along one axis keeps every
    /// structural check passing.
    Mutation(usize),
    /// An instance of the claim was not refuted.
    Screen(Claim),
}

impl Rejection {
    fn stage(&self) -> usize {
        match self {
            Rejection::Template => 0,
            Rejection::Structure(c) => 1 + XCheck::ALL.iter().position(|d| d == c).unwrap_or(0),
            Rejection::TCluster => 20,
            Rejection::Pentagons(_) => 21,
            Rejection::Mutation(_) => 22,
            Rejection::Screen(_) => 23,
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Template => write!(f, "template"),
            Rejection::Structure(c) => write!(f, "{}", c.name()),
            Rejection::TCluster => write!(f, "t-cluster-size"),
            Rejection::Pentagons(n) => write!(f, "pentagon-sides:{n}"),
            Rejection::Mutation(i) => write!(f, "mutation-survives:{}", SLOT_NAMES[*i]),
            Rejection::Screen(c) => write!(f, "{}", c.name()),
        }
    }
}

/// One attempt of [`search_x`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attempt {
    pub attempt: u64,
    pub seed: u64,
    pub outcome: Result<(), Rejection>,
}

impl fmt::Display for Attempt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Ok(()) => write!(f, "{} {} accept -", self.attempt, self.seed),
            Err(r) => write!(f, "{} {} reject {}", self.attempt, self.seed, r),
        }
    }
}

/// An accepted configuration and where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XCandidate {
    pub x: XSet,
    pub seed: u64,
    pub attempt: u64,
    pub report: XReport,
}

/// The budget ran out; carries the attempt that got furthest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchFailure {
    pub attempts: u64,
    pub best: Option<Attempt>,
}

impl fmt::Display for SearchFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no configuration accepted in {} attempts", self.attempts)?;
        if let Some(b) = &self.best {
            write!(f, "; furthest: {b}")?;
        }
        Ok(())
    }
}

impl core::error::Error for SearchFailure {}

fn uniform(rng: &mut impl RngCore, lo: i64, hi: i64) -> i64 {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as i64
}

/// Random configuration in file order A, B, T1, T2.
///
/// Built in a rotated frame `(u, v)`: A and B are five-point chains at
/// `u ≈ +da` and `u ≈ -db`, bent toward each other, and `T1`, `T2` are two
/// short opposite arcs near the origin. B is spread widely enough that, seen
/// from any point of A, the origin lies between the third and fourth point
/// of B. The frame is mapped by `(x, y) = 10 (u + v, u - v)` plus jitter,
/// which keeps every segment away from the axis directions.
pub fn template(rng: &mut impl RngCore) -> Option<PointSet> {
    let r = rng;
    let da = uniform(r, 3000, 8000);
    let db = da + uniform(r, -1500, 1500);
    let width = uniform(r, 200, 3000);
    let center = uniform(r, -3000, 3000);
    let mut av: Vec<i64> = (0..5).map(|_| uniform(r, center - width / 2, center + width / 2)).collect();
    av.sort_unstable();
    // Where the lines from A through the origin meet u = -db.
    let lo = -av[4] * db / da;
    let hi = -av[0] * db / da;
    let b3 = lo - uniform(r, 10, 2000);
    let b4 = hi + uniform(r, 10, 2000);
    let b1 = b3 - uniform(r, 300, 5000) - uniform(r, 300, 5000);
    let b2 = b3 - uniform(r, 300, 5000).min(b3 - b1 - 50).max(1);
    let b5 = b4 + uniform(r, 300, 5000);
    if b2 <= b1 {
        return None;
    }
    let mut uv: Vec<(i64, i64)> = Vec::with_capacity(16);
    for (sign, dist, vs) in [(1i64, da, av), (-1, db, alloc::vec![b1, b2, b3, b4, b5])] {
        let mut slopes: Vec<i64> = (0..4).map(|_| uniform(r, -1500, 1500)).collect();
        slopes.sort_unstable();
        let base = uv.len();
        let mut u = 0i64;
        for i in 0..5 {
            uv.push((sign * (dist + u / 1000), vs[i]));
            if i < 4 {
                u += slopes[i] * (vs[i + 1] - vs[i]);
            }
        }
        let nearest = uv[base..].iter().map(|p| p.0 * sign).min().expect("five points");
        for p in &mut uv[base..] {
            p.0 += sign * (dist - nearest);
        }
    }
    let gap = uniform(r, 10, 80);
    let bulge = uniform(r, 1, 8);
    let cu = uniform(r, -300, 300);
    for (offset, dir) in [(-gap / 2, 1i64), (gap / 2, -1)] {
        let len = uniform(r, 10, 80);
        let cv = uniform(r, -40, 40);
        for t in [-1i64, 0, 1] {
            let v = cv - dir * t * len / 2 + uniform(r, -3, 3);
            let u = cu + offset + dir * bulge * (1 - t * t) + uniform(r, -1, 1);
            uv.push((u, v));
        }
    }
    // Reflection through a random axis, scaled by sqrt(p^2 + q^2).
    let (p, q) = (uniform(r, 6, 14), uniform(r, 6, 14));
    let mut coords = Vec::with_capacity(16);
    for &(u, v) in &uv {
        let jx = uniform(r, -3, 3);
        let jy = uniform(r, -3, 3);
        coords.push((p * u + q * v + jx, q * u - p * v + jy));
    }
    let labels = [(Role::A, 5), (Role::B, 5), (Role::T1, 3), (Role::T2, 3)]
        .iter()
        .flat_map(|&(role, k)| core::iter::repeat_n(role, k))
        .collect();
    PointSet::from_coords(&coords).ok()?.with_labels(labels).ok()
}

fn diameter_sq(ps: &PointSet, idx: &[usize]) -> i128 {
    let mut best = 0;
    for (k, &i) in idx.iter().enumerate() {
        for &j in &idx[k + 1..] {
            let (p, q) = (ps.point(i), ps.point(j));
            let (dx, dy) = ((p.x - q.x) as i128, (p.y - q.y) as i128);
            best = best.max(dx * dx + dy * dy);
        }
    }
    best
}

/// Screens one template; on success returns the relabeled set.
/// Claims whose full instance families are refuted before a candidate is
/// accepted, cheapest first. Lemma 24 is left to the checks.
pub const SCREEN_CLAIMS: [Claim; 11] = [
    Claim::Prop10,
    Claim::Lemma14,
    Claim::Lemma16,
    Claim::Lemma17,
    Claim::Lemma18,
    Claim::Lemma11,
    Claim::Lemma20,
    Claim::Prop22,
    Claim::Lemma23,
    Claim::Lemma21,
    Claim::Lemma13,
];

/// Offset used by [`mutation_survivor`].
pub const MUTATION_OFFSET: i64 = 1_000_000;

/// A point that can be moved by `±MUTATION_OFFSET` along some axis with
/// every structural check still passing.
pub fn mutation_survivor(x: &XSet) -> Option<usize> {
    let ps = x.points();
    let labels = ps.labels()?.to_vec();
    (0..ps.len()).find(|&i| {
        [(MUTATION_OFFSET, 0), (-MUTATION_OFFSET, 0), (0, MUTATION_OFFSET), (0, -MUTATION_OFFSET)].iter().any(
            |&(dx, dy)| {
                let pts: Vec<Point> = (0..ps.len())
                    .map(|j| if j == i { Point::new(ps.point(j).x + dx, ps.point(j).y + dy) } else { ps.point(j) })
                    .collect();
                let moved = PointSet::new(pts).and_then(|p| p.with_labels(labels.clone()));
                matches!(moved.map(XSet::new), Ok(Ok(y)) if verify_x_properties(&y).all_pass())
            },
        )
    })
}

pub fn screen_candidate(ps: PointSet) -> Result<XCandidate, Rejection> {
    let x = XSet::new(ps).map_err(|_| Rejection::Template)?;
    if let Some(c) = verify_x_fast(&x).first_failure() {
        return Err(Rejection::Structure(c));
    }
    // diam(T) < diam(A ∪ B) / 100
    if diameter_sq(x.points(), &x.t()) * 10_000 >= diameter_sq(x.points(), &union(&[x.a(), x.b()])) {
        return Err(Rejection::TCluster);
    }
    let nonsides: Vec<SegmentId> =
        x.points().all_segments().into_iter().filter(|&e| pentagon_with_side(&x, e).is_none()).collect();
    let relabeled = best_relabeling(&x, &nonsides, &PROP4_EXCLUDED);
    if relabeled.uncovered > 0 {
        return Err(Rejection::Pentagons(relabeled.uncovered));
    }
    let x = relabeled.x;
    let report = verify_x_properties(&x);
    if let Some(c) = report.first_failure() {
        return Err(Rejection::Structure(c));
    }
    if let Some(i) = mutation_survivor(&x) {
        return Err(Rejection::Mutation(i));
    }
    for claim in SCREEN_CLAIMS {
        let all = instances(&x, claim).map_err(|_| Rejection::Screen(claim))?;
        if !all.iter().all(|inst| evaluate(&x, inst, SCREEN_BUDGET).holds()) {
            return Err(Rejection::Screen(claim));
        }
    }
    Ok(XCandidate { x, seed: 0, attempt: 0, report })
}

/// The generator for attempt `attempt` under `seed`.
pub fn attempt_rng(seed: u64, attempt: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&attempt.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Tries up to `budget` templates and returns the first that passes every
/// structural check, the pentagon-side cover of
/// [`crate::coloring::PROP4_EXCLUDED`] (after relabeling), the mutation
/// test and the exact screens in [`SCREEN_CLAIMS`]. `trace` sees every attempt.
/// The result depends only on `seed` and `budget`.
pub fn search_x(seed: u64, budget: u64, mut trace: impl FnMut(&Attempt)) -> Result<XCandidate, SearchFailure> {
    let mut best: Option<Attempt> = None;
    for attempt in 0..budget {
        let outcome = template(&mut attempt_rng(seed, attempt)).ok_or(Rejection::Template).and_then(screen_candidate);
        let record = Attempt { attempt, seed, outcome: outcome.as_ref().map(|_| ()).map_err(Clone::clone) };
        trace(&record);
        match outcome {
            Ok(mut found) => {
                found.seed = seed;
                found.attempt = attempt;
                return Ok(found);
            }
            Err(r) => {
                let further = best.as_ref().is_none_or(|b| match &b.outcome {
                    Err(prev) => r.stage() > prev.stage(),
                    Ok(()) => false,
                });
                if further {
                    best = Some(record);
                }
            }
        }
    }
    Err(SearchFailure { attempts: budget, best })
}
