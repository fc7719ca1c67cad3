//! Text formats: point sets, coloring certificates, DIMACS graphs and CNF.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use dlab_core::exact::{ChromaticCertificate, Cnf, LowerEvidence};
use dlab_core::geometry::{GeometryError, Point, PointSet, Role};
use dlab_core::graph::{DisjointnessGraph, Graph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("geometry: {0}")]
    Geometry(GeometryError),
}

impl From<GeometryError> for FormatError {
    fn from(e: GeometryError) -> Self {
        FormatError::Geometry(e)
    }
}

fn perr(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse { line, msg: msg.into() }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses the point-set format: a count line, one `x y` line per point, and
/// an optional `labels ...` line.
pub fn parse_pointset(text: &str) -> Result<PointSet, FormatError> {
    let mut lines = content_lines(text);
    let (ln, first) = lines.next().ok_or_else(|| perr(0, "empty input"))?;
    let n: usize = first.parse().map_err(|_| perr(ln, format!("expected point count, got {first:?}")))?;
    let mut pts = Vec::with_capacity(n);
    let mut labels = None;
    let mut last = ln;
    for (ln, line) in lines {
        last = ln;
        if let Some(rest) = line.strip_prefix("labels") {
            if labels.is_some() {
                return Err(perr(ln, "second labels line"));
            }
            let roles = rest
                .split_whitespace()
                .map(|t| Role::parse(t).ok_or_else(|| perr(ln, format!("unknown label {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            labels = Some(roles);
            continue;
        }
        if labels.is_some() {
            return Err(perr(ln, "point after labels line"));
        }
        let mut it = line.split_whitespace();
        let (Some(x), Some(y), None) = (it.next(), it.next(), it.next()) else {
            return Err(perr(ln, format!("expected \"x y\", got {line:?}")));
        };
        let x: i64 = x.parse().map_err(|_| perr(ln, format!("bad x {x:?}")))?;
        let y: i64 = y.parse().map_err(|_| perr(ln, format!("bad y {y:?}")))?;
        pts.push(Point::new(x, y));
    }
    if pts.len() != n {
        return Err(perr(last, format!("header says {n} points, found {}", pts.len())));
    }
    let ps = PointSet::new(pts)?;
    Ok(match labels {
        Some(l) => ps.with_labels(l)?,
        None => ps,
    })
}

pub fn format_pointset(ps: &PointSet) -> String {
    let mut s = format!("{}\n", ps.len());
    for p in ps.points() {
        let _ = writeln!(s, "{} {}", p.x, p.y);
    }
    if let Some(labels) = ps.labels() {
        s.push_str("labels");
        for r in labels {
            s.push(' ');
            s.push_str(r.as_str());
        }
        s.push('\n');
    }
    s
}

pub fn read_pointset(path: impl AsRef<Path>) -> Result<PointSet, FormatError> {
    parse_pointset(&fs::read_to_string(path)?)
}

pub fn write_pointset(ps: &PointSet, path: impl AsRef<Path>) -> Result<(), FormatError> {
    write_creating_dirs(path.as_ref(), &format_pointset(ps))
}

pub(crate) fn write_creating_dirs(path: &Path, text: &str) -> Result<(), FormatError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, text)?;
    Ok(())
}

/// `colors c`, then `i j color` per vertex of `g` in lexicographic segment
/// order.
pub fn format_coloring(g: &DisjointnessGraph, colors: &[u32]) -> String {
    let count = colors.iter().max().map_or(0, |&m| m as usize + 1);
    let mut s = format!("colors {count}\n");
    for (v, e) in g.segments().iter().enumerate() {
        let _ = writeln!(s, "{} {} {}", e.i, e.j, colors[v]);
    }
    s
}

pub fn evidence_line(ev: &LowerEvidence) -> String {
    match ev {
        LowerEvidence::ExhaustedSearch { nodes } => {
            format!("evidence exhausted-search nodes={nodes}")
        }
        LowerEvidence::Clique(c) => format!("evidence clique size={}", c.len()),
        LowerEvidence::ExternalProofRef(p) => format!("evidence external-proof {p}"),
        LowerEvidence::Budgeted => "evidence none-budgeted".to_string(),
    }
}

/// Certificate file: the coloring block followed by one evidence line.
pub fn format_certificate(g: &DisjointnessGraph, cert: &ChromaticCertificate) -> String {
    let mut s = format_coloring(g, &cert.witness);
    s.push_str(&evidence_line(&cert.lower_evidence));
    s.push('\n');
    s
}

/// Parses a coloring block against `g`; the evidence trailer, if any, is
/// returned verbatim.
pub fn parse_coloring(g: &DisjointnessGraph, text: &str) -> Result<(Vec<u32>, Option<String>), FormatError> {
    let mut lines = content_lines(text);
    let (ln, first) = lines.next().ok_or_else(|| perr(0, "empty certificate"))?;
    let count: u32 = first
        .strip_prefix("colors ")
        .and_then(|c| c.trim().parse().ok())
        .ok_or_else(|| perr(ln, "expected \"colors c\""))?;
    let mut colors = vec![u32::MAX; g.vertex_count()];
    let mut evidence = None;
    let mut seen = 0;
    for (ln, line) in lines {
        if line.starts_with("evidence") {
            evidence = Some(line.to_string());
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| perr(ln, format!("bad number {t:?}"))))
            .collect::<Result<_, _>>()?;
        let [i, j, c] = nums[..] else {
            return Err(perr(ln, "expected \"i j color\""));
        };
        let e = dlab_core::geometry::SegmentId::new(i, j).ok_or_else(|| perr(ln, "degenerate segment"))?;
        let v = g.vertex_of(e).ok_or_else(|| perr(ln, format!("segment {i} {j} not in graph")))?;
        if seen != v {
            return Err(perr(ln, "segments out of lexicographic order"));
        }
        if c as u32 >= count {
            return Err(perr(ln, format!("color {c} not below {count}")));
        }
        colors[v] = c as u32;
        seen += 1;
    }
    if seen != colors.len() {
        return Err(perr(0, format!("expected {} segments, found {seen}", colors.len())));
    }
    Ok((colors, evidence))
}

/// DIMACS graph: `p edge V E`, then `e u v` with 1-based vertices.
pub fn format_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("p edge {} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

pub fn parse_dimacs(text: &str) -> Result<Graph, FormatError> {
    let mut g: Option<Graph> = None;
    let mut declared = 0;
    let mut found = 0;
    for (ln, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.first() {
            None | Some(&"c") => {}
            Some(&"p") => {
                let [_, "edge", n, m] = toks[..] else {
                    return Err(perr(ln, "expected \"p edge V E\""));
                };
                let n: usize = n.parse().map_err(|_| perr(ln, "bad vertex count"))?;
                declared = m.parse().map_err(|_| perr(ln, "bad edge count"))?;
                g = Some(Graph::new(n));
            }
            Some(&"e") => {
                let g = g.as_mut().ok_or_else(|| perr(ln, "edge before header"))?;
                let [_, u, v] = toks[..] else {
                    return Err(perr(ln, "expected \"e u v\""));
                };
                let u: usize = u.parse().map_err(|_| perr(ln, "bad vertex"))?;
                let v: usize = v.parse().map_err(|_| perr(ln, "bad vertex"))?;
                let n = g.vertex_count();
                if u == 0 || v == 0 || u > n || v > n || u == v {
                    return Err(perr(ln, format!("vertex out of range in edge {u} {v}")));
                }
                g.add_edge(u - 1, v - 1);
                found += 1;
            }
            Some(t) => return Err(perr(ln, format!("unknown line type {t:?}"))),
        }
    }
    let g = g.ok_or_else(|| perr(0, "missing header"))?;
    if found != declared {
        return Err(perr(0, format!("header declares {declared} edges, found {found}")));
    }
    Ok(g)
}

/// DIMACS CNF with header `p cnf V M`.
pub fn format_cnf(cnf: &Cnf) -> String {
    let mut s = format!("p cnf {} {}\n", cnf.num_vars, cnf.clauses.len());
    for c in &cnf.clauses {
        for lit in c {
            let _ = write!(s, "{lit} ");
        }
        s.push_str("0\n");
    }
    s
}

pub fn write_text(path: impl AsRef<Path>, text: &str) -> Result<(), FormatError> {
    write_creating_dirs(path.as_ref(), text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dlab_core::constructions::make_convex;
    use dlab_core::exact::{chromatic_number, kcolor_cnf};
    use dlab_core::graph::build_disjointness;

    #[test]
    fn pointset_round_trip() {
        let ps = PointSet::from_coords(&[(0, 0), (5, -2), (-3, 7)])
            .unwrap()
            .with_labels(vec![Role::A, Role::T1, Role::T2])
            .unwrap();
        let text = format_pointset(&ps);
        assert_eq!(text, "3\n0 0\n5 -2\n-3 7\nlabels A T1 T2\n");
        assert_eq!(parse_pointset(&text).unwrap(), ps);
    }

    #[test]
    fn pointset_errors() {
        assert!(matches!(parse_pointset("3\n0 0\n1 1\n"), Err(FormatError::Parse { .. })));
        assert!(matches!(parse_pointset("2\n0 0\n0 0\n"), Err(FormatError::Geometry(_))));
        assert!(parse_pointset("2\n0 0\n1 x\n").is_err());
        assert!(parse_pointset("2\n0 0\n1 2\nlabels A\n").is_err());
        assert!(parse_pointset("# c\n\n2\n# mid\n0 0\n1 2\n").is_ok());
    }

    #[test]
    fn certificate_round_trip() {
        let g = build_disjointness(&make_convex(6).unwrap()).unwrap();
        let cert = chromatic_number(g.graph(), u64::MAX);
        let text = format_certificate(&g, &cert);
        assert!(text.starts_with("colors 3\n0 1 "));
        let (colors, ev) = parse_coloring(&g, &text).unwrap();
        assert_eq!(colors, cert.witness);
        assert!(ev.unwrap().starts_with("evidence "));
    }

    #[test]
    fn dimacs_round_trip() {
        let g = build_disjointness(&make_convex(5).unwrap()).unwrap();
        let text = format_dimacs(g.graph());
        assert!(text.starts_with("p edge 10 10\n"));
        assert_eq!(&parse_dimacs(&text).unwrap(), g.graph());
        assert!(parse_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(parse_dimacs("p edge 2 2\ne 1 2\n").is_err());
    }

    #[test]
    fn cnf_header() {
        let g = build_disjointness(&make_convex(4).unwrap()).unwrap();
        let cnf = kcolor_cnf(g.graph(), 2, true);
        let text = format_cnf(&cnf);
        assert!(text.starts_with(&format!("p cnf 12 {}\n", cnf.clauses.len())));
        assert_eq!(text.lines().count(), cnf.clauses.len() + 1);
    }
}
