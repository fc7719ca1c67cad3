//! Generators for convex sets and double chains.

use alloc::vec::Vec;

use crate::geometry::{in_convex_position, in_general_position, GeometryError, Orientation, Point, PointSet};

/// `n` points on the parabola `y = x^2`, in convex and general position.
pub fn make_convex(n: usize) -> Result<PointSet, GeometryError> {
    if n < 3 {
        return Err(GeometryError::KOutOfRange { k: n, n });
    }
    let pts = (0..n as i64).map(|i| Point::new(i, i * i)).collect();
    PointSet::new(pts)
}

/// A double chain: the first `k` points form the lower chain (bulging up),
/// the last `l` the upper chain (bulging down).
pub fn make_double_chain(k: usize, l: usize) -> Result<PointSet, GeometryError> {
    if k == 0 || l == 0 {
        return Err(GeometryError::KOutOfRange { k: k.min(l), n: k + l });
    }
    let span = k.max(l) as i64;
    // Any height above 2 * span^2 separates the chains; step until no
    // accidental collinearity appears between them.
    let mut height = 2 * span * span + 1;
    loop {
        let chain = |m: usize, up: bool| -> Vec<Point> {
            (0..m as i64)
                .map(|i| {
                    let x = 2 * i - (m as i64 - 1);
                    if up {
                        Point::new(x, height + x * x)
                    } else {
                        Point::new(x, -height - x * x)
                    }
                })
                .collect()
        };
        let mut pts = chain(k, false);
        pts.extend(chain(l, true));
        let ps = PointSet::new(pts)?;
        if in_general_position(&ps) {
            return Ok(ps);
        }
        height += 1;
    }
}

/// Every point of `below` lies strictly under every line spanned by `above`.
fn below_all_lines(ps: &PointSet, below: &[usize], above: &[usize]) -> bool {
    for (x, &u) in above.iter().enumerate() {
        for &v in &above[x + 1..] {
            let (pu, pv) = (ps.point(u), ps.point(v));
            if pu.x == pv.x {
                return false;
            }
            let (lft, rgt) = if pu.x < pv.x { (u, v) } else { (v, u) };
            if below.iter().any(|&p| ps.orient(lft, rgt, p) != Orientation::Clockwise) {
                return false;
            }
        }
    }
    true
}

fn above_all_lines(ps: &PointSet, above: &[usize], below: &[usize]) -> bool {
    for (x, &u) in below.iter().enumerate() {
        for &v in &below[x + 1..] {
            let (pu, pv) = (ps.point(u), ps.point(v));
            if pu.x == pv.x {
                return false;
            }
            let (lft, rgt) = if pu.x < pv.x { (u, v) } else { (v, u) };
            if above.iter().any(|&p| ps.orient(lft, rgt, p) != Orientation::CounterClockwise) {
                return false;
            }
        }
    }
    true
}

/// Consecutive x-sorted triples all turn the same way `turn`.
fn bends(ps: &PointSet, chain: &[usize], turn: Orientation) -> bool {
    let mut sorted = chain.to_vec();
    sorted.sort_by_key(|&i| (ps.point(i).x, ps.point(i).y));
    sorted.windows(3).all(|w| ps.orient(w[0], w[1], w[2]) == turn)
}

/// Checks the double-chain structure with the first `k` points as the lower
/// chain and the last `l` as the upper chain. Both chains must be convex and
/// bend toward each other.
pub fn is_double_chain(ps: &PointSet, k: usize, l: usize) -> Result<bool, GeometryError> {
    if ps.len() != k + l {
        return Err(GeometryError::KOutOfRange { k: k + l, n: ps.len() });
    }
    if !in_general_position(ps) {
        return Ok(false);
    }
    let lower: Vec<usize> = (0..k).collect();
    let upper: Vec<usize> = (k..k + l).collect();
    Ok(in_convex_position(ps, &lower)
        && in_convex_position(ps, &upper)
        && bends(ps, &lower, Orientation::Clockwise)
        && bends(ps, &upper, Orientation::CounterClockwise)
        && below_all_lines(ps, &lower, &upper)
        && above_all_lines(ps, &upper, &lower))
}
