//! Lower-bound claims about subsets of `X`, instantiated as finite families
//! of constrained colorability questions.
//!
//! Every instance asks whether `D(Q)` has a proper coloring with `colors`
//! colors satisfying the hypotheses; the claim holds on the instance when the
//! answer is an exhausted `No`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::coloring::{classify_classes, ClassKind, Coloring};
use crate::exact::{chromatic_number, k_colorable, ColorConstraints, KColorOutcome};
use crate::geometry::{dist_cmp, for_each_subset, hull, Orientation, Point, PointSet, SegmentId};
use crate::graph::{disjointness_on, DisjointnessGraph};
use crate::xset::XSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Prop10,
    Lemma11,
    Lemma13,
    Lemma14,
    Lemma16,
    Lemma17,
    Lemma18,
    Lemma20,
    Lemma21,
    Prop22,
    Lemma23,
    Lemma24,
}

impl Claim {
    pub const LEMMAS: [Claim; 11] = [
        Claim::Lemma11,
        Claim::Lemma13,
        Claim::Lemma14,
        Claim::Lemma16,
        Claim::Lemma17,
        Claim::Lemma18,
        Claim::Lemma20,
        Claim::Lemma21,
        Claim::Prop22,
        Claim::Lemma23,
        Claim::Lemma24,
    ];

    pub fn number(&self) -> u32 {
        match self {
            Claim::Prop10 => 10,
            Claim::Lemma11 => 11,
            Claim::Lemma13 => 13,
            Claim::Lemma14 => 14,
            Claim::Lemma16 => 16,
            Claim::Lemma17 => 17,
            Claim::Lemma18 => 18,
            Claim::Lemma20 => 20,
            Claim::Lemma21 => 21,
            Claim::Prop22 => 22,
            Claim::Lemma23 => 23,
            Claim::Lemma24 => 24,
        }
    }

    /// The lemma (or proposition 22) with this number.
    pub fn lemma(id: u32) -> Option<Claim> {
        Claim::LEMMAS.iter().copied().find(|c| c.number() == id)
    }

    pub fn name(&self) -> String {
        match self {
            Claim::Prop10 | Claim::Prop22 => format!("prop{}", self.number()),
            _ => format!("lemma{}", self.number()),
        }
    }
}

/// A coloring hypothesis on segments of `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// The segment's color appears on no other segment.
    Unique(SegmentId),
    /// The segments share one color. At most one such group per instance.
    SameColor(Vec<SegmentId>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub claim: Claim,
    pub index: usize,
    pub description: String,
    /// Points of `X`, sorted.
    pub q: Vec<usize>,
    /// Number of colors to refute.
    pub colors: usize,
    pub hypotheses: Vec<Hypothesis>,
    /// For the quadrilateral claim: sides joining A and B that must lie in a
    /// star when `colors` is not refuted.
    pub star_sides: Vec<SegmentId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaError {
    /// The two readings of "closest triangle" disagree for this pair.
    ClosenessDisagreement { a: usize, b: usize },
    /// Scaled coordinates left the supported range.
    Range,
}

impl fmt::Display for LemmaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaError::ClosenessDisagreement { a, b } => {
                write!(f, "centroid and vertex distance disagree on the triangle closest to {a}-{b}")
            }
            LemmaError::Range => write!(f, "coordinates too large for the centroid comparison"),
        }
    }
}

impl core::error::Error for LemmaError {}

fn seg(a: usize, b: usize) -> SegmentId {
    SegmentId::new(a, b).expect("distinct points")
}

fn sorted(mut q: Vec<usize>) -> Vec<usize> {
    q.sort_unstable();
    q
}

fn choose(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_subset(items.len(), k, |s| {
        out.push(s.iter().map(|&i| items[i]).collect());
        false
    });
    out
}

fn names(x: &XSet, pts: &[usize]) -> String {
    let parts: Vec<String> = pts.iter().map(|&p| x.name_of(p)).collect();
    parts.join(" ")
}

/// Which of `T1`, `T2` is closer to segment `ab`, by the nearest vertex and
/// by the centroid. Returns the pair of answers (0 for `T1`, 1 for `T2`).
pub fn closest_triangle(x: &XSet, a: usize, b: usize) -> Result<(usize, usize), LemmaError> {
    let ps = x.points();
    let e = seg(a, b);
    let nearest = |t: &[usize]| -> usize {
        let mut best = t[0];
        for &p in &t[1..] {
            if dist_cmp(ps, p, best, e).expect("t-point off ab") == Ordering::Less {
                best = p;
            }
        }
        best
    };
    let (n1, n2) = (nearest(x.t1()), nearest(x.t2()));
    let by_vertex = usize::from(dist_cmp(ps, n2, n1, e).expect("t-point off ab") == Ordering::Less);
    // centroids compared after scaling everything by 3
    let sum = |t: &[usize]| -> Point {
        let (sx, sy) = t.iter().fold((0, 0), |(sx, sy), &p| (sx + ps.point(p).x, sy + ps.point(p).y));
        Point::new(sx, sy)
    };
    let scale = |p: Point| Point::new(3 * p.x, 3 * p.y);
    let scaled = PointSet::new(vec![scale(ps.point(a)), scale(ps.point(b)), sum(x.t1()), sum(x.t2())])
        .map_err(|_| LemmaError::Range)?;
    let by_centroid = usize::from(dist_cmp(&scaled, 3, 2, seg(0, 1)).map_err(|_| LemmaError::Range)? == Ordering::Less);
    Ok((by_vertex, by_centroid))
}

/// Strictly inside the convex polygon `poly` (counterclockwise).
fn inside(ps: &PointSet, poly: &[usize], p: usize) -> bool {
    (0..poly.len()).all(|i| ps.orient(poly[i], poly[(i + 1) % poly.len()], p) == Orientation::CounterClockwise)
}

/// All instances of `claim` on `x`, in a fixed order.
pub fn instances(x: &XSet, claim: Claim) -> Result<Vec<Instance>, LemmaError> {
    let ps = x.points();
    let (a, b, t1, t2) = (x.a(), x.b(), x.t1(), x.t2());
    let t = x.t();
    let mut out: Vec<Instance> = Vec::new();
    let mut push =
        |q: Vec<usize>, colors: usize, hypotheses: Vec<Hypothesis>, star_sides: Vec<SegmentId>, description: String| {
            let index = out.len();
            out.push(Instance { claim, index, description, q: sorted(q), colors, hypotheses, star_sides });
        };
    let with_t = |mid: &[usize]| -> Vec<usize> { t1.iter().chain(mid).chain(t2).copied().collect() };
    match claim {
        Claim::Prop10 => {
            push(a.iter().chain(t2).copied().collect(), 5, vec![], vec![], String::from("A T2"));
            push(b.iter().chain(t1).copied().collect(), 5, vec![], vec![], String::from("B T1"));
        }
        Claim::Lemma11 => {
            push(with_t(a), 8, vec![], vec![], String::from("T1 A T2"));
            push(with_t(b), 8, vec![], vec![], String::from("T1 B T2"));
        }
        Claim::Lemma13 => {
            for ap in choose(a, 3) {
                for bp in choose(b, 3) {
                    for tp in choose(&t, 3) {
                        let q: Vec<usize> = ap.iter().chain(&bp).chain(&tp).copied().collect();
                        let d = names(x, &q);
                        push(q, 6, vec![], vec![], d);
                    }
                }
            }
        }
        Claim::Lemma14 | Claim::Lemma16 => {
            for &p in a {
                for &r in b {
                    let q = with_t(&[p, r]);
                    let d = names(x, &[p, r]);
                    if claim == Claim::Lemma14 {
                        push(q, 5, vec![], vec![], d);
                    } else {
                        push(q, 6, vec![Hypothesis::Unique(seg(p, r))], vec![], d);
                    }
                }
            }
        }
        Claim::Lemma17 => {
            for &p in a {
                for &r in b {
                    let (by_vertex, by_centroid) = closest_triangle(x, p, r)?;
                    if by_vertex != by_centroid {
                        return Err(LemmaError::ClosenessDisagreement { a: p, b: r });
                    }
                    let (near, far) = if by_vertex == 0 { (t1, t2) } else { (t2, t1) };
                    for &s in far {
                        for xp in [p, r] {
                            let q: Vec<usize> = near.iter().copied().chain([p, r, s]).collect();
                            let d = format!("{} x={}", names(x, &[p, r, s]), x.name_of(xp));
                            push(q, 5, vec![Hypothesis::Unique(seg(p, r)), Hypothesis::Unique(seg(xp, s))], vec![], d);
                        }
                    }
                }
            }
        }
        Claim::Lemma18 => {
            for &p in a {
                for &r in b {
                    if !t1.iter().all(|&s| ps.orient(p, r, s) == Orientation::Clockwise) {
                        continue;
                    }
                    for (i, &ti) in t2.iter().enumerate() {
                        for &tj in &t2[i + 1..] {
                            let q: Vec<usize> = t1.iter().copied().chain([p, r, ti, tj]).collect();
                            let hyp = vec![
                                Hypothesis::SameColor(vec![seg(p, ti), seg(p, tj), seg(ti, tj)]),
                                Hypothesis::Unique(seg(p, r)),
                                Hypothesis::Unique(seg(r, tj)),
                            ];
                            push(q, 6, hyp, vec![], names(x, &[p, r, ti, tj]));
                        }
                    }
                }
            }
        }
        Claim::Lemma20 => {
            let ab: Vec<usize> = a.iter().chain(b).copied().collect();
            for tri in choose(&ab, 3) {
                let d = names(x, &tri);
                push(with_t(&tri), 6, vec![], vec![], d);
            }
        }
        Claim::Lemma21 | Claim::Lemma24 => {
            for (u, other) in [(a, b), (b, a)] {
                for tri in choose(u, 3) {
                    let extra = if claim == Claim::Lemma21 { choose(other, 1) } else { choose(other, 2) };
                    for ys in extra {
                        let mid: Vec<usize> = tri.iter().chain(&ys).copied().collect();
                        let d = names(x, &mid);
                        let colors = if claim == Claim::Lemma21 { 7 } else { 8 };
                        push(with_t(&mid), colors, vec![], vec![], d);
                    }
                }
            }
        }
        Claim::Prop22 => {
            let ab: Vec<usize> = a.iter().chain(b).copied().collect();
            for quad in choose(&ab, 4) {
                let h = hull(ps, &quad);
                if h.len() != 4 || !t.iter().all(|&p| inside(ps, &h, p)) {
                    continue;
                }
                let sides: Vec<SegmentId> =
                    (0..4).map(|i| seg(h[i], h[(i + 1) % 4])).filter(|e| ps.role(e.i) != ps.role(e.j)).collect();
                let d = names(x, &quad);
                push(with_t(&quad), 7, vec![], sides, d);
            }
        }
        Claim::Lemma23 => {
            for ap in choose(a, 2) {
                for bp in choose(b, 2) {
                    let mid: Vec<usize> = ap.iter().chain(&bp).copied().collect();
                    let d = names(x, &mid);
                    push(with_t(&mid), 7, vec![], vec![], d);
                }
            }
        }
    }
    Ok(out)
}

/// Vertex constraints on `D(Q)` for the segment hypotheses.
pub fn constraints(g: &DisjointnessGraph, hypotheses: &[Hypothesis]) -> ColorConstraints {
    let mut c = ColorConstraints::none();
    for h in hypotheses {
        match h {
            Hypothesis::Unique(e) => c.unique.push(g.vertex_of(*e).expect("hypothesis segment inside Q")),
            Hypothesis::SameColor(group) => {
                for e in group {
                    c.fixed.push((g.vertex_of(*e).expect("hypothesis segment inside Q"), 0));
                }
            }
        }
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// No coloring with `colors` colors satisfies the hypotheses.
    Refuted {
        nodes: u64,
    },
    /// The quadrilateral claim holds through its star alternative.
    StarAlternative {
        chi: usize,
    },
    /// A counterexample coloring of `D(Q)` (vertex order of the induced graph).
    Counterexample(Vec<u32>),
    Unknown {
        nodes: u64,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Refuted { .. } | Verdict::StarAlternative { .. })
    }
}

pub fn evaluate(x: &XSet, inst: &Instance, budget: u64) -> Verdict {
    let g = disjointness_on(x.points(), &inst.q).expect("subset of a general-position set");
    let c = constraints(&g, &inst.hypotheses);
    match k_colorable(g.graph(), inst.colors, &c, budget) {
        KColorOutcome::No { nodes, .. } => Verdict::Refuted { nodes },
        KColorOutcome::Unknown { nodes } => Verdict::Unknown { nodes },
        KColorOutcome::Yes(colors) => {
            if inst.star_sides.is_empty() {
                return Verdict::Counterexample(colors);
            }
            let cert = chromatic_number(g.graph(), budget);
            if !cert.is_exact() {
                return Verdict::Unknown { nodes: cert.nodes };
            }
            let gamma = Coloring::normalized(&cert.witness);
            let classes = classify_classes(&g, &gamma).expect("proper witness");
            let in_star = |e: &SegmentId| {
                let col = gamma.of(&g, *e).expect("side inside Q");
                classes[col as usize].kind == ClassKind::Star
            };
            if inst.star_sides.iter().all(in_star) {
                Verdict::StarAlternative { chi: cert.chi }
            } else {
                Verdict::Counterexample(cert.witness)
            }
        }
    }
}
