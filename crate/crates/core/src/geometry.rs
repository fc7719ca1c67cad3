//! Exact planar predicates over integer point sets.
//!
//! Coordinates are bounded by `COORD_LIMIT` so that every orientation
//! determinant and every squared-distance comparison fits in 128-bit
//! integers. Nothing here touches floating point.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Largest admissible absolute coordinate value.
pub const COORD_LIMIT: i64 = 1 << 30;

/// Largest point set accepted by [`same_order_type`].
pub const ORDER_TYPE_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    fn in_range(&self) -> bool {
        self.x.abs() <= COORD_LIMIT && self.y.abs() <= COORD_LIMIT
    }
}

/// Partition role of a point of the 16-point configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    A,
    B,
    T1,
    T2,
    Unlabeled,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::A => "A",
            Role::B => "B",
            Role::T1 => "T1",
            Role::T2 => "T2",
            Role::Unlabeled => "-",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        match s {
            "A" => Some(Role::A),
            "B" => Some(Role::B),
            "T1" => Some(Role::T1),
            "T2" => Some(Role::T2),
            "-" | "U" => Some(Role::Unlabeled),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeometryError {
    CoordinateOutOfRange { index: usize },
    DuplicatePoint { first: usize, second: usize },
    LabelArity { points: usize, labels: usize },
    SameSegment,
    IndexOutOfRange { index: usize },
    IncidentPoint { point: usize },
    KOutOfRange { k: usize, n: usize },
    TooLarge { n: usize, limit: usize },
    Degenerate,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::CoordinateOutOfRange { index } => {
                write!(f, "point {index} exceeds the coordinate bound 2^30")
            }
            GeometryError::DuplicatePoint { first, second } => {
                write!(f, "points {first} and {second} coincide")
            }
            GeometryError::LabelArity { points, labels } => {
                write!(f, "{labels} labels given for {points} points")
            }
            GeometryError::SameSegment => write!(f, "a segment was compared with itself"),
            GeometryError::IndexOutOfRange { index } => {
                write!(f, "point index {index} out of range")
            }
            GeometryError::IncidentPoint { point } => {
                write!(f, "point {point} is an endpoint of the segment")
            }
            GeometryError::KOutOfRange { k, n } => write!(f, "k = {k} out of range for {n} points"),
            GeometryError::TooLarge { n, limit } => {
                write!(f, "{n} points exceed the search bound of {limit}")
            }
            GeometryError::Degenerate => write!(f, "point set is not in general position"),
        }
    }
}

impl core::error::Error for GeometryError {}

/// An ordered list of distinct points with optional role labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    points: Vec<Point>,
    labels: Option<Vec<Role>>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, GeometryError> {
        for (i, p) in points.iter().enumerate() {
            if !p.in_range() {
                return Err(GeometryError::CoordinateOutOfRange { index: i });
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(GeometryError::DuplicatePoint { first: i, second: j });
                }
            }
        }
        Ok(PointSet { points, labels: None })
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self, GeometryError> {
        PointSet::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    pub fn with_labels(mut self, labels: Vec<Role>) -> Result<Self, GeometryError> {
        if labels.len() != self.points.len() {
            return Err(GeometryError::LabelArity { points: self.points.len(), labels: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn labels(&self) -> Option<&[Role]> {
        self.labels.as_deref()
    }

    pub fn role(&self, i: usize) -> Role {
        self.labels.as_ref().map_or(Role::Unlabeled, |l| l[i])
    }

    /// Indices carrying `role`, in point order.
    pub fn indices_of(&self, role: Role) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.role(i) == role).collect()
    }

    /// The sub-configuration on `idx` (in the given order), labels kept.
    pub fn subset(&self, idx: &[usize]) -> PointSet {
        PointSet {
            points: idx.iter().map(|&i| self.points[i]).collect(),
            labels: self.labels.as_ref().map(|l| idx.iter().map(|&i| l[i]).collect()),
        }
    }

    /// Applies `f` to every coordinate pair; labels are kept.
    pub fn map_points(&self, f: impl Fn(Point) -> Point) -> Result<PointSet, GeometryError> {
        let mut out = PointSet::new(self.points.iter().map(|&p| f(p)).collect())?;
        out.labels = self.labels.clone();
        Ok(out)
    }

    pub fn orient(&self, a: usize, b: usize, c: usize) -> Orientation {
        orient(self.points[a], self.points[b], self.points[c])
    }

    pub fn all_segments(&self) -> Vec<SegmentId> {
        segments_of(&(0..self.len()).collect::<Vec<_>>())
    }
}

/// All segments spanned by `idx`, lexicographic in the (sorted) indices.
pub fn segments_of(idx: &[usize]) -> Vec<SegmentId> {
    let mut sorted = idx.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = Vec::with_capacity(sorted.len() * sorted.len().saturating_sub(1) / 2);
    for (a, &i) in sorted.iter().enumerate() {
        for &j in &sorted[a + 1..] {
            out.push(SegmentId { i, j });
        }
    }
    out
}

/// Unordered pair of point indices with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegmentId {
    pub i: usize,
    pub j: usize,
}

impl SegmentId {
    /// Builds the segment on `{a, b}`; `None` when `a == b`.
    pub fn new(a: usize, b: usize) -> Option<Self> {
        match a.cmp(&b) {
            Ordering::Less => Some(SegmentId { i: a, j: b }),
            Ordering::Greater => Some(SegmentId { i: b, j: a }),
            Ordering::Equal => None,
        }
    }

    pub fn has(&self, p: usize) -> bool {
        self.i == p || self.j == p
    }

    pub fn shares_endpoint(&self, other: &SegmentId) -> bool {
        self.has(other.i) || self.has(other.j)
    }

    /// The endpoint other than `p`.
    pub fn other(&self, p: usize) -> usize {
        if self.i == p {
            self.j
        } else {
            self.i
        }
    }

    /// Leftmost endpoint (smaller x, ties by smaller y).
    pub fn left(&self, ps: &PointSet) -> usize {
        let (a, b) = (ps.point(self.i), ps.point(self.j));
        if (a.x, a.y) <= (b.x, b.y) {
            self.i
        } else {
            self.j
        }
    }

    pub fn right(&self, ps: &PointSet) -> usize {
        self.other(self.left(ps))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn as_i8(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }
}

/// Sign of `det(q - p, r - p)`: counterclockwise is positive.
pub fn orient(p: Point, q: Point, r: Point) -> Orientation {
    let det = (q.x - p.x) as i128 * (r.y - p.y) as i128 - (q.y - p.y) as i128 * (r.x - p.x) as i128;
    match det.cmp(&0) {
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
        Ordering::Greater => Orientation::CounterClockwise,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SegmentRelation {
    Incident,
    Crossing,
    Disjoint,
}

fn on_closed_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == Orientation::Collinear
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Whether the closed segments `ab` and `cd` share at least one point.
pub fn closed_segments_meet(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c).as_i8();
    let o2 = orient(a, b, d).as_i8();
    let o3 = orient(c, d, a).as_i8();
    let o4 = orient(c, d, b).as_i8();
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_closed_segment(c, a, b) || on_closed_segment(d, a, b) || on_closed_segment(a, c, d) || on_closed_segment(b, c, d)
}

pub fn segment_relation(ps: &PointSet, e: SegmentId, f: SegmentId) -> Result<SegmentRelation, GeometryError> {
    if e == f {
        return Err(GeometryError::SameSegment);
    }
    for idx in [e.i, e.j, f.i, f.j] {
        if idx >= ps.len() {
            return Err(GeometryError::IndexOutOfRange { index: idx });
        }
    }
    Ok(relation_unchecked(ps, e, f))
}

pub(crate) fn relation_unchecked(ps: &PointSet, e: SegmentId, f: SegmentId) -> SegmentRelation {
    if e.shares_endpoint(&f) {
        return SegmentRelation::Incident;
    }
    let p = ps.points();
    if closed_segments_meet(p[e.i], p[e.j], p[f.i], p[f.j]) {
        SegmentRelation::Crossing
    } else {
        SegmentRelation::Disjoint
    }
}

/// True iff the points are pairwise distinct and no three are collinear.
pub fn in_general_position(ps: &PointSet) -> bool {
    let p = ps.points();
    let n = p.len();
    for a in 0..n {
        for b in a + 1..n {
            if p[a] == p[b] {
                return false;
            }
            for c in b + 1..n {
                if orient(p[a], p[b], p[c]) == Orientation::Collinear {
                    return false;
                }
            }
        }
    }
    true
}

/// Every unordered pair of crossing segments, by brute force.
pub fn crossing_pairs(ps: &PointSet) -> Vec<(SegmentId, SegmentId)> {
    let segs = ps.all_segments();
    let mut out = Vec::new();
    for (a, &e) in segs.iter().enumerate() {
        for &f in &segs[a + 1..] {
            if relation_unchecked(ps, e, f) == SegmentRelation::Crossing {
                out.push((e, f));
            }
        }
    }
    out
}

fn orientation_table(ps: &PointSet) -> Vec<i8> {
    let n = ps.len();
    let mut t = vec![0i8; n * n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                t[(a * n + b) * n + c] = ps.orient(a, b, c).as_i8();
            }
        }
    }
    t
}

/// Searches for an orientation-preserving bijection `P -> Q`.
///
/// Returns `Ok(Some(f))` with `f[i]` the image of point `i`. Mirror images
/// are not identified.
pub fn same_order_type(p: &PointSet, q: &PointSet) -> Result<Option<Vec<usize>>, GeometryError> {
    if p.len() != q.len() {
        return Ok(None);
    }
    let n = p.len();
    if n > ORDER_TYPE_LIMIT {
        return Err(GeometryError::TooLarge { n, limit: ORDER_TYPE_LIMIT });
    }
    let tp = orientation_table(p);
    let tq = orientation_table(q);
    // Counterclockwise-pair counts per point are preserved by any valid map.
    let signature = |t: &[i8], a: usize| -> usize {
        let mut s = 0;
        for b in 0..n {
            for c in 0..n {
                if t[(a * n + b) * n + c] > 0 {
                    s += 1;
                }
            }
        }
        s
    };
    let sp: Vec<usize> = (0..n).map(|a| signature(&tp, a)).collect();
    let sq: Vec<usize> = (0..n).map(|a| signature(&tq, a)).collect();
    let mut sorted_p = sp.clone();
    let mut sorted_q = sq.clone();
    sorted_p.sort_unstable();
    sorted_q.sort_unstable();
    if sorted_p != sorted_q {
        return Ok(None);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn extend(
        k: usize,
        n: usize,
        tp: &[i8],
        tq: &[i8],
        sp: &[usize],
        sq: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || sp[k] != sq[cand] {
                continue;
            }
            let ok =
                (0..k).all(|a| (a + 1..k).all(|b| tp[(a * n + b) * n + k] == tq[(map[a] * n + map[b]) * n + cand]));
            if !ok {
                continue;
            }
            map[k] = cand;
            used[cand] = true;
            if extend(k + 1, n, tp, tq, sp, sq, map, used) {
                return true;
            }
            used[cand] = false;
        }
        map[k] = usize::MAX;
        false
    }
    if extend(0, n, &tp, &tq, &sp, &sq, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Whether `t` lies strictly inside the triangle `abc`.
pub fn in_triangle(ps: &PointSet, t: usize, a: usize, b: usize, c: usize) -> bool {
    let o = ps.orient(a, b, c).as_i8();
    o != 0 && ps.orient(a, b, t).as_i8() == o && ps.orient(b, c, t).as_i8() == o && ps.orient(c, a, t).as_i8() == o
}

/// Whether the points `idx` are in convex position (general position assumed).
pub fn in_convex_position(ps: &PointSet, idx: &[usize]) -> bool {
    let k = idx.len();
    for (ti, &t) in idx.iter().enumerate() {
        for a in 0..k {
            if a == ti {
                continue;
            }
            for b in a + 1..k {
                if b == ti {
                    continue;
                }
                for c in b + 1..k {
                    if c == ti {
                        continue;
                    }
                    if in_triangle(ps, t, idx[a], idx[b], idx[c]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Indices of the convex hull vertices of `idx`, counterclockwise.
pub fn hull(ps: &PointSet, idx: &[usize]) -> Vec<usize> {
    let mut pts: Vec<usize> = idx.to_vec();
    pts.sort_by_key(|&i| (ps.point(i).x, ps.point(i).y));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &pts {
        while lower.len() >= 2
            && ps.orient(lower[lower.len() - 2], lower[lower.len() - 1], i) != Orientation::CounterClockwise
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in pts.iter().rev() {
        while upper.len() >= 2
            && ps.orient(upper[upper.len() - 2], upper[upper.len() - 1], i) != Orientation::CounterClockwise
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order; stops when `f` returns true.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Finds the lexicographically first `k`-subset in convex position.
pub fn convex_k_subset_exists(ps: &PointSet, k: usize) -> Result<Option<Vec<usize>>, GeometryError> {
    let n = ps.len();
    if k < 3 || k > n {
        return Err(GeometryError::KOutOfRange { k, n });
    }
    let mut found = None;
    for_each_subset(n, k, |s| {
        if in_convex_position(ps, s) {
            found = Some(s.to_vec());
            true
        } else {
            false
        }
    });
    Ok(found)
}

/// Squared distance from `p` to the closed segment `ab`, as the numerator of
/// a fraction over `|b - a|^2`.
fn scaled_sq_dist(p: Point, a: Point, b: Point) -> u128 {
    let (dx, dy) = ((b.x - a.x) as i128, (b.y - a.y) as i128);
    let (px, py) = ((p.x - a.x) as i128, (p.y - a.y) as i128);
    let len2 = (dx * dx + dy * dy) as u128;
    let dot = px * dx + py * dy;
    if dot <= 0 {
        (px * px + py * py) as u128 * len2
    } else if dot as u128 >= len2 {
        let (qx, qy) = ((p.x - b.x) as i128, (p.y - b.y) as i128);
        (qx * qx + qy * qy) as u128 * len2
    } else {
        let cross = px * dy - py * dx;
        cross.unsigned_abs() * cross.unsigned_abs()
    }
}

/// Compares `d(p, e)` with `d(q, e)` exactly.
pub fn dist_cmp(ps: &PointSet, p: usize, q: usize, e: SegmentId) -> Result<Ordering, GeometryError> {
    for idx in [p, q, e.i, e.j] {
        if idx >= ps.len() {
            return Err(GeometryError::IndexOutOfRange { index: idx });
        }
    }
    if e.has(p) {
        return Err(GeometryError::IncidentPoint { point: p });
    }
    if e.has(q) {
        return Err(GeometryError::IncidentPoint { point: q });
    }
    let (a, b) = (ps.point(e.i), ps.point(e.j));
    Ok(scaled_sq_dist(ps.point(p), a, b).cmp(&scaled_sq_dist(ps.point(q), a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(c: &[(i64, i64)]) -> PointSet {
        PointSet::from_coords(c).unwrap()
    }

    #[test]
    fn orient_examples() {
        let o = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| {
            orient(Point::new(a.0, a.1), Point::new(b.0, b.1), Point::new(c.0, c.1)).as_i8()
        };
        assert_eq!(o((0, 0), (1, 0), (0, 1)), 1);
        assert_eq!(o((0, 0), (1, 1), (2, 2)), 0);
        assert_eq!(o((0, 0), (0, 1), (1, 0)), -1);
        let big = COORD_LIMIT;
        assert_eq!(o((-big, -big), (big, -big), (big, big)), 1);
        assert_eq!(o((-big, -big), (big, big), (big - 1, big)), 1);
    }

    #[test]
    fn relation_examples() {
        let tri = ps(&[(0, 0), (4, 0), (1, 3)]);
        let ab = SegmentId::new(0, 1).unwrap();
        let bc = SegmentId::new(1, 2).unwrap();
        assert_eq!(segment_relation(&tri, ab, bc), Ok(SegmentRelation::Incident));
        assert_eq!(segment_relation(&tri, ab, ab), Err(GeometryError::SameSegment));

        let sq = ps(&[(0, 0), (10, 0), (10, 10), (0, 10)]);
        let d1 = SegmentId::new(0, 2).unwrap();
        let d2 = SegmentId::new(1, 3).unwrap();
        assert_eq!(segment_relation(&sq, d1, d2), Ok(SegmentRelation::Crossing));
        let bottom = SegmentId::new(0, 1).unwrap();
        let top = SegmentId::new(2, 3).unwrap();
        assert_eq!(segment_relation(&sq, bottom, top), Ok(SegmentRelation::Disjoint));
    }

    #[test]
    fn general_position_examples() {
        assert!(!in_general_position(&ps(&[(0, 0), (1, 0), (2, 0)])));
        assert!(in_general_position(&ps(&[(0, 0), (1, 0), (0, 1)])));
        let parabola: Vec<(i64, i64)> = (0..6).map(|i| (i, i * i)).collect();
        assert!(in_general_position(&ps(&parabola)));
    }

    #[test]
    fn duplicate_and_range_rejected() {
        assert_eq!(
            PointSet::from_coords(&[(1, 1), (2, 2), (1, 1)]),
            Err(GeometryError::DuplicatePoint { first: 0, second: 2 })
        );
        assert!(matches!(
            PointSet::from_coords(&[(COORD_LIMIT + 1, 0)]),
            Err(GeometryError::CoordinateOutOfRange { index: 0 })
        ));
    }

    #[test]
    fn crossing_counts() {
        assert_eq!(crossing_pairs(&ps(&[(0, 0), (5, 1), (2, 7)])).len(), 0);
        assert_eq!(crossing_pairs(&ps(&[(0, 0), (10, 0), (10, 10), (0, 10)])).len(), 1);
        let pent = ps(&[(0, 0), (4, 0), (6, 4), (2, 7), (-2, 4)]);
        assert_eq!(crossing_pairs(&pent).len(), 5);
    }

    #[test]
    fn order_type_examples() {
        let p = ps(&[(0, 0), (4, 0), (6, 4), (2, 7), (-2, 4)]);
        assert_eq!(same_order_type(&p, &p).unwrap(), Some(vec![0, 1, 2, 3, 4]));
        // parabola pentagon, listed in a different cyclic start
        let q = ps(&[(2, 4), (-2, 4), (-1, 1), (0, 0), (1, 1)]);
        let f = same_order_type(&p, &q).unwrap().expect("both are convex pentagons");
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..5 {
                    assert_eq!(p.orient(a, b, c), q.orient(f[a], f[b], f[c]));
                }
            }
        }
        let quad = ps(&[(0, 0), (10, 0), (10, 10), (0, 10)]);
        let tri_in = ps(&[(0, 0), (10, 0), (5, 10), (5, 3)]);
        assert_eq!(same_order_type(&quad, &tri_in).unwrap(), None);
        assert_eq!(same_order_type(&quad, &p).unwrap(), None);
        let big: Vec<(i64, i64)> = (0..13).map(|i| (i, i * i)).collect();
        let big = ps(&big);
        assert!(matches!(same_order_type(&big, &big), Err(GeometryError::TooLarge { .. })));
    }

    #[test]
    fn mirror_is_a_different_order_type() {
        // A triangle with an interior point, and an asymmetric 5th point.
        let p = ps(&[(0, 0), (10, 0), (3, 9), (4, 3), (12, 7)]);
        let m = p.map_points(|q| Point::new(-q.x, q.y)).unwrap();
        // mirror flips every orientation; a valid map would need all triples flipped back
        if let Some(f) = same_order_type(&p, &m).unwrap() {
            for a in 0..5 {
                for b in 0..5 {
                    for c in 0..5 {
                        assert_eq!(p.orient(a, b, c), m.orient(f[a], f[b], f[c]));
                    }
                }
            }
        }
    }

    #[test]
    fn convex_subsets() {
        let hex = ps(&[(0, 0), (4, -1), (8, 0), (9, 4), (4, 7), (-1, 4)]);
        assert_eq!(convex_k_subset_exists(&hex, 6).unwrap(), Some(vec![0, 1, 2, 3, 4, 5]));
        assert!(convex_k_subset_exists(&hex, 2).is_err());
        assert!(convex_k_subset_exists(&hex, 7).is_err());
        // triangle with two interior points still has a convex quadrilateral
        let five = ps(&[(0, 0), (20, 0), (10, 20), (9, 5), (11, 8)]);
        assert!(convex_k_subset_exists(&five, 4).unwrap().is_some());
    }

    #[test]
    fn hull_of_square_with_center() {
        let p = ps(&[(0, 0), (10, 0), (10, 10), (0, 10), (5, 4)]);
        let h = hull(&p, &[0, 1, 2, 3, 4]);
        assert_eq!(h.len(), 4);
        assert!(!h.contains(&4));
    }

    #[test]
    fn dist_cmp_examples() {
        // e from (-1,0) to (1,0)
        let p = ps(&[(-1, 0), (1, 0), (0, 2), (0, 5), (3, 1), (0, -2)]);
        let e = SegmentId::new(0, 1).unwrap();
        assert_eq!(dist_cmp(&p, 2, 3, e), Ok(Ordering::Less));
        assert_eq!(dist_cmp(&p, 4, 2, e), Ok(Ordering::Greater));
        assert_eq!(dist_cmp(&p, 2, 5, e), Ok(Ordering::Equal));
        assert_eq!(dist_cmp(&p, 0, 2, e), Err(GeometryError::IncidentPoint { point: 0 }));
    }

    #[test]
    fn subsets_enumeration_count() {
        let mut count = 0;
        for_each_subset(7, 3, |_| {
            count += 1;
            false
        });
        assert_eq!(count, 35);
    }
}
