//! Colorings of `D(P)` and the class vocabulary used to reason about them:
//! thrackles, stars and apices, separable sets, clean segments.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::exact::{k_colorable, ColorConstraints, KColorOutcome};
use crate::geometry::{
    convex_k_subset_exists, dist_cmp, for_each_subset, hull, relation_unchecked, segments_of, Role, SegmentId,
    SegmentRelation,
};
use crate::graph::{induced, DisjointnessGraph};
use crate::xset::XSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringError {
    /// Assignment length differs from the vertex count.
    NotTotal {
        expected: usize,
        got: usize,
    },
    /// Colors are not exactly `0..c`.
    NotContiguous,
    Improper,
    TooFewPoints {
        n: usize,
    },
    /// A point is not a member of the graph.
    UnknownPoint {
        index: usize,
    },
    SegmentOutsideSet,
    NoHexagon,
    /// The segment is listed as not coverable by a pentagon.
    Ineligible(SegmentId),
    NoPentagon(SegmentId),
    NotAcross(SegmentId),
    Labels,
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::NotTotal { expected, got } => {
                write!(f, "assignment has {got} entries, graph has {expected} vertices")
            }
            ColoringError::NotContiguous => write!(f, "colors are not numbered 0..c"),
            ColoringError::Improper => write!(f, "coloring has a monochromatic edge"),
            ColoringError::TooFewPoints { n } => write!(f, "need at least 3 points, got {n}"),
            ColoringError::UnknownPoint { index } => write!(f, "point {index} is not in the set"),
            ColoringError::SegmentOutsideSet => {
                write!(f, "segment endpoints are not both in the set")
            }
            ColoringError::NoHexagon => write!(f, "no convex hexagon"),
            ColoringError::Ineligible(e) => {
                write!(f, "segment {}-{} is in the excluded list", e.i, e.j)
            }
            ColoringError::NoPentagon(e) => write!(f, "segment {}-{} is not a side of any convex pentagon", e.i, e.j),
            ColoringError::NotAcross(e) => {
                write!(f, "segment {}-{} does not join A and B", e.i, e.j)
            }
            ColoringError::Labels => write!(f, "point set lacks the A/B/T1/T2 labels"),
        }
    }
}

impl core::error::Error for ColoringError {}

/// A total assignment of colors `0..c` to the vertices of a disjointness
/// graph, every color used at least once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
    count: usize,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self, ColoringError> {
        let count = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut seen = vec![false; count];
        for &c in &colors {
            seen[c as usize] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(ColoringError::NotContiguous);
        }
        Ok(Coloring { colors, count })
    }

    /// Renumbers by first occurrence.
    pub fn normalized(colors: &[u32]) -> Self {
        Coloring::new(crate::exact::normalize(colors)).expect("normalized colors are contiguous")
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color of segment `e` of `g`.
    pub fn of(&self, g: &DisjointnessGraph, e: SegmentId) -> Option<u32> {
        g.vertex_of(e).map(|v| self.colors[v])
    }

    /// Vertices colored `c`.
    pub fn class(&self, c: u32) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect()
    }
}

fn check_total(g: &DisjointnessGraph, gamma: &Coloring) -> Result<(), ColoringError> {
    if gamma.len() != g.vertex_count() {
        return Err(ColoringError::NotTotal { expected: g.vertex_count(), got: gamma.len() });
    }
    Ok(())
}

/// No disjoint pair of segments shares a color.
pub fn is_proper(g: &DisjointnessGraph, gamma: &Coloring) -> Result<bool, ColoringError> {
    check_total(g, gamma)?;
    Ok(crate::exact::is_proper_assignment(g.graph(), gamma.colors()))
}

fn check_proper(g: &DisjointnessGraph, gamma: &Coloring) -> Result<(), ColoringError> {
    if !is_proper(g, gamma)? {
        return Err(ColoringError::Improper);
    }
    Ok(())
}

/// Restriction of `gamma` to the segments spanned by `q`, renumbered.
pub fn restrict(
    g: &DisjointnessGraph,
    gamma: &Coloring,
    q: &[usize],
) -> Result<(DisjointnessGraph, Coloring), ColoringError> {
    check_total(g, gamma)?;
    let sub = induced(g, q).map_err(|_| match q.iter().find(|&&p| !g.is_member(p)) {
        Some(&index) => ColoringError::UnknownPoint { index },
        None => ColoringError::TooFewPoints { n: q.len() },
    })?;
    let raw: Vec<u32> = sub.segments().iter().map(|&e| gamma.of(g, e).expect("member segment")).collect();
    Ok((sub, Coloring::normalized(&raw)))
}

/// The first three points of `order` span color 0; every later point `p_j`
/// gets a new color on its segments to the points before it.
pub fn greedy_star_coloring(g: &DisjointnessGraph, order: &[usize]) -> Result<Coloring, ColoringError> {
    let n = g.members().len();
    if n < 3 {
        return Err(ColoringError::TooFewPoints { n });
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != order.len() || sorted != g.members() {
        return Err(match order.iter().find(|&&p| !g.is_member(p)) {
            Some(&index) => ColoringError::UnknownPoint { index },
            None => ColoringError::SegmentOutsideSet,
        });
    }
    let rank = rank_of(g, order);
    let colors = g.segments().iter().map(|e| (rank[e.i].max(rank[e.j]).max(2) - 2) as u32).collect();
    Coloring::new(colors)
}

fn rank_of(g: &DisjointnessGraph, order: &[usize]) -> Vec<usize> {
    let mut rank = vec![usize::MAX; g.points().len()];
    for (r, &p) in order.iter().enumerate() {
        rank[p] = r;
    }
    rank
}

/// Extends a proper coloring of `sub` (an induced subgraph of `g`) to all of
/// `g` by one new star per remaining point, taken in increasing index order.
pub fn extend_coloring(
    g: &DisjointnessGraph,
    sub: &DisjointnessGraph,
    gamma: &Coloring,
) -> Result<Coloring, ColoringError> {
    if sub.members().len() < 3 {
        return Err(ColoringError::TooFewPoints { n: sub.members().len() });
    }
    if let Some(&index) = sub.members().iter().find(|&&p| !g.is_member(p)) {
        return Err(ColoringError::UnknownPoint { index });
    }
    check_proper(sub, gamma)?;
    let mut order: Vec<usize> = sub.members().to_vec();
    order.extend(g.members().iter().filter(|&&p| !sub.is_member(p)));
    let rank = rank_of(g, &order);
    let base = gamma.count();
    let k = sub.members().len();
    let colors = g
        .segments()
        .iter()
        .map(|&e| match sub.vertex_of(e) {
            Some(v) => gamma.color(v),
            None => (base + rank[e.i].max(rank[e.j]) - k) as u32,
        })
        .collect();
    Coloring::new(colors)
}

/// A proper coloring with `|P| - 3` colors: an optimal 3-coloring of a
/// convex hexagon extended by stars.
pub fn hexagon_upper_coloring(g: &DisjointnessGraph) -> Result<Coloring, ColoringError> {
    let ps = g.points().subset(g.members());
    let hex = convex_k_subset_exists(&ps, 6).map_err(|_| ColoringError::NoHexagon)?.ok_or(ColoringError::NoHexagon)?;
    let q: Vec<usize> = hex.iter().map(|&i| g.members()[i]).collect();
    let sub = induced(g, &q).map_err(|_| ColoringError::NoHexagon)?;
    let three = match k_colorable(sub.graph(), 3, &ColorConstraints::none(), u64::MAX) {
        KColorOutcome::Yes(c) => Coloring::normalized(&c),
        _ => return Err(ColoringError::NoHexagon),
    };
    extend_coloring(g, &sub, &three)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Thrackle,
    Star,
}

/// One chromatic class. A star's apex set is the set of points common to
/// all members: one point, both endpoints for a single segment, or empty for
/// the three sides of a triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub color: u32,
    pub kind: ClassKind,
    pub members: Vec<SegmentId>,
    pub incident_points: Vec<usize>,
    pub apices: Vec<usize>,
}

pub fn classify_classes(g: &DisjointnessGraph, gamma: &Coloring) -> Result<Vec<ClassInfo>, ColoringError> {
    check_proper(g, gamma)?;
    let ps = g.points();
    let mut out = Vec::with_capacity(gamma.count());
    for c in 0..gamma.count() as u32 {
        let members: Vec<SegmentId> = gamma.class(c).into_iter().map(|v| g.segment(v)).collect();
        let crossing = members
            .iter()
            .enumerate()
            .any(|(x, &e)| members[x + 1..].iter().any(|&f| relation_unchecked(ps, e, f) == SegmentRelation::Crossing));
        let mut incident_points: Vec<usize> = members.iter().flat_map(|e| [e.i, e.j]).collect();
        incident_points.sort_unstable();
        incident_points.dedup();
        let apices = if crossing {
            Vec::new()
        } else {
            incident_points.iter().copied().filter(|&p| members.iter().all(|e| e.has(p))).collect()
        };
        let kind = if crossing { ClassKind::Thrackle } else { ClassKind::Star };
        out.push(ClassInfo { color: c, kind, members, incident_points, apices });
    }
    Ok(out)
}

/// Points of `q` that are apices of some star of `gamma` restricted to `q`.
pub fn gamma_star(g: &DisjointnessGraph, q: &[usize], gamma: &Coloring) -> Result<usize, ColoringError> {
    if q.len() < 2 {
        return Err(ColoringError::TooFewPoints { n: q.len() });
    }
    let (sub, restricted) = restrict(g, gamma, q)?;
    let classes = classify_classes(&sub, &restricted)?;
    let mut apex: Vec<usize> = classes.iter().flat_map(|c| c.apices.iter().copied()).collect();
    apex.sort_unstable();
    apex.dedup();
    Ok(apex.len())
}

/// Segments of `g` with no endpoint in `q` that cross a segment spanned by `q`.
pub fn q_plus(g: &DisjointnessGraph, q: &[usize]) -> Vec<SegmentId> {
    let ps = g.points();
    let inner = segments_of(q);
    g.segments()
        .iter()
        .copied()
        .filter(|e| !q.contains(&e.i) && !q.contains(&e.j))
        .filter(|&e| inner.iter().any(|&f| relation_unchecked(ps, e, f) == SegmentRelation::Crossing))
        .collect()
}

/// No segment of `q⁺` reuses a color that appears on a segment of `q`.
pub fn is_separable_wrt(g: &DisjointnessGraph, q: &[usize], gamma: &Coloring) -> Result<bool, ColoringError> {
    check_total(g, gamma)?;
    let mut inside = vec![false; gamma.count()];
    for e in segments_of(q) {
        let c = gamma.of(g, e).ok_or(ColoringError::SegmentOutsideSet)?;
        inside[c as usize] = true;
    }
    Ok(q_plus(g, q).iter().all(|&e| !inside[gamma.of(g, e).expect("member segment") as usize]))
}

/// No segment spanned by `q` crosses `e`.
pub fn is_clean(g: &DisjointnessGraph, q: &[usize], e: SegmentId) -> Result<bool, ColoringError> {
    if !q.contains(&e.i) || !q.contains(&e.j) {
        return Err(ColoringError::SegmentOutsideSet);
    }
    let ps = g.points();
    Ok(segments_of(q).into_iter().all(|f| f == e || relation_unchecked(ps, e, f) != SegmentRelation::Crossing))
}

/// Objects attached to a segment `ℓ` joining A and B under a coloring of
/// `D(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Def1 {
    /// T-points `v` whose two segments to the ends of `ℓ` share a color
    /// different from the color of `ℓ`.
    pub u: Vec<usize>,
    /// The other T-points by increasing distance to `ℓ`; `None` if `u` has
    /// all six.
    pub v: Option<Vec<usize>>,
    /// Some two distances in `v` were equal; ties were broken by index.
    pub tie: bool,
    /// Triangle on `ℓ` and `v_0` with its other sides `ℓ1`, `ℓ2`.
    pub delta: Option<([usize; 3], SegmentId, SegmentId)>,
    /// Triangles on `ℓ1`, `ℓ2` and `v_1`.
    pub delta12: Option<[[usize; 3]; 2]>,
}

pub fn def1_analyze(x: &XSet, g: &DisjointnessGraph, gamma: &Coloring, l: SegmentId) -> Result<Def1, ColoringError> {
    check_proper(g, gamma)?;
    let ps = x.points();
    let (ri, rj) = (ps.role(l.i), ps.role(l.j));
    if !matches!((ri, rj), (Role::A, Role::B) | (Role::B, Role::A)) {
        return Err(ColoringError::NotAcross(l));
    }
    let color = |a: usize, b: usize| {
        gamma.of(g, SegmentId::new(a, b).expect("distinct")).ok_or(ColoringError::SegmentOutsideSet)
    };
    let cl = color(l.i, l.j)?;
    let mut u = Vec::new();
    let mut rest = Vec::new();
    for t in x.t() {
        let (ci, cj) = (color(t, l.i)?, color(t, l.j)?);
        if ci == cj && ci != cl {
            u.push(t);
        } else {
            rest.push(t);
        }
    }
    let mut tie = false;
    rest.sort_by(|&p, &q| match dist_cmp(ps, p, q, l).expect("t-point off l") {
        Ordering::Equal => {
            tie = true;
            p.cmp(&q)
        }
        o => o,
    });
    if rest.is_empty() {
        return Ok(Def1 { u, v: None, tie, delta: None, delta12: None });
    }
    let v0 = rest[0];
    let l1 = SegmentId::new(l.i, v0).expect("distinct");
    let l2 = SegmentId::new(l.j, v0).expect("distinct");
    let delta = Some(([l.i, l.j, v0], l1, l2));
    let delta12 = (u.len() < 5).then(|| [[l1.i, l1.j, rest[1]], [l2.i, l2.j, rest[1]]]);
    Ok(Def1 { u, v: Some(rest), tie, delta, delta12 })
}

/// The twenty segments of `X` that are not claimed to be pentagon sides,
/// by label.
pub const PROP4_EXCLUDED: [(&str, &str); 20] = [
    ("t1^1", "t2^3"),
    ("b1", "t2^3"),
    ("b1", "t2^2"),
    ("b1", "t2^1"),
    ("b1", "a5"),
    ("b2", "a5"),
    ("b3", "a1"),
    ("b3", "a2"),
    ("b3", "a3"),
    ("b3", "a4"),
    ("b3", "a5"),
    ("b4", "a1"),
    ("b4", "a2"),
    ("b4", "a3"),
    ("b4", "a4"),
    ("b4", "a5"),
    ("b5", "t1^1"),
    ("b5", "t1^2"),
    ("b5", "t2^1"),
    ("b5", "a1"),
];

/// The excluded segments as index pairs of `x`.
pub fn prop4_excluded(x: &XSet) -> Vec<SegmentId> {
    PROP4_EXCLUDED
        .iter()
        .map(|&(p, q)| SegmentId::new(x.named(p).expect("label"), x.named(q).expect("label")).expect("distinct"))
        .collect()
}

/// First convex pentagon (lexicographic) having `e` as a hull side.
pub fn pentagon_with_side(x: &XSet, e: SegmentId) -> Option<Vec<usize>> {
    let ps = x.points();
    let others: Vec<usize> = (0..ps.len()).filter(|&p| !e.has(p)).collect();
    let mut found = None;
    for_each_subset(others.len(), 3, |s| {
        let mut five = vec![e.i, e.j, others[s[0]], others[s[1]], others[s[2]]];
        five.sort_unstable();
        let h = hull(ps, &five);
        if h.len() == 5 {
            let at = h.iter().position(|&p| p == e.i).expect("hull vertex");
            if h[(at + 1) % 5] == e.j || h[(at + 4) % 5] == e.j {
                found = Some(five);
                return true;
            }
        }
        false
    });
    found
}

/// A 14-coloring of `D(X)` in which `e` has a color of its own.
#[derive(Clone, Debug)]
pub struct Prop4Coloring {
    pub pentagon: Vec<usize>,
    /// Number of 3-colorings of the pentagon's graph (up to renaming colors)
    /// with `e` alone in its class.
    pub pentagon_colorings: usize,
    pub coloring: Coloring,
}

pub fn prop4_coloring(x: &XSet, g: &DisjointnessGraph, e: SegmentId) -> Result<Prop4Coloring, ColoringError> {
    if g.vertex_of(e).is_none() {
        return Err(ColoringError::SegmentOutsideSet);
    }
    if prop4_excluded(x).contains(&e) {
        return Err(ColoringError::Ineligible(e));
    }
    let pentagon = pentagon_with_side(x, e).ok_or(ColoringError::NoPentagon(e))?;
    let sub = induced(g, &pentagon).map_err(|_| ColoringError::SegmentOutsideSet)?;
    let special = sub.vertex_of(e).expect("side of the pentagon");
    let found = unique_three_colorings(&sub, special);
    let first = found.first().cloned().ok_or(ColoringError::NoPentagon(e))?;
    let coloring = extend_coloring(g, &sub, &first)?;
    Ok(Prop4Coloring { pentagon, pentagon_colorings: found.len(), coloring })
}

/// All proper colorings of `sub` with exactly 3 colors in which vertex
/// `special` is alone in its class, normalized and in lexicographic order.
fn unique_three_colorings(sub: &DisjointnessGraph, special: usize) -> Vec<Coloring> {
    let n = sub.vertex_count();
    let g = sub.graph();
    let mut out = Vec::new();
    let mut assign = vec![0u32; n];
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for slot in assign.iter_mut() {
            *slot = (c % 3) as u32;
            c /= 3;
        }
        // canonical up to renaming: colors first appear in order 0, 1, 2
        if crate::exact::normalize(&assign) != assign || crate::exact::colors_used(&assign) != 3 {
            continue;
        }
        let mine = assign[special];
        if (0..n).any(|w| w != special && assign[w] == mine) {
            continue;
        }
        if crate::exact::is_proper_assignment(g, &assign) {
            out.push(Coloring::new(assign.clone()).expect("contiguous"));
        }
    }
    out.sort_by(|a, b| a.colors().cmp(b.colors()));
    out
}
