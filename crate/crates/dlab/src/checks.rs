//! Named, budgeted checks. Each returns [`CheckReport`]s in a fixed order.

use std::path::PathBuf;
use std::time::Instant;

use dlab_core::bounds::{convex_chi, double_chain_chi, DnBounds, LOG_BASE};
use dlab_core::coloring::{
    classify_classes, greedy_star_coloring, hexagon_upper_coloring, is_proper, is_separable_wrt, prop4_coloring,
    prop4_excluded, ClassKind, Coloring,
};
use dlab_core::constructions::{make_convex, make_double_chain};
use dlab_core::exact::{
    chromatic_number, colors_used, k_colorable, kcolor_cnf, verify_certificate, ColorConstraints, KColorOutcome,
};
use dlab_core::geometry::{in_general_position, Point, PointSet};
use dlab_core::graph::{build_disjointness, disjointness_on, DisjointnessGraph};
use dlab_core::lemmas::{evaluate, instances, Claim, LemmaError, Verdict as LemmaVerdict};
use dlab_core::xset::XSet;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::formats::{format_certificate, format_cnf, write_text};
use crate::report::{CheckReport, Verdict};

/// Shared settings for a run of checks.
#[derive(Clone, Debug)]
pub struct Ctx {
    /// Node budget per solver call.
    pub budget: u64,
    /// Worker threads for instance families; 1 runs inline.
    pub threads: usize,
    /// Where certificates and CNF files go; `None` writes nothing.
    pub out_dir: Option<PathBuf>,
    /// Seed for every sampled quantity.
    pub seed: u64,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx { budget: 2_000_000_000, threads: 1, out_dir: None, seed: 1 }
    }
}

impl Ctx {
    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(stream);
        r
    }

    /// Order-preserving map over `items`, on a pool when `threads > 1`.
    pub fn map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        if self.threads <= 1 {
            return items.iter().map(f).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new().num_threads(self.threads).build().expect("thread pool");
        pool.install(|| items.par_iter().map(f).collect())
    }

    fn file(&self, name: &str) -> Option<PathBuf> {
        self.out_dir.as_ref().map(|d| d.join(name))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CheckError {
    #[error("unknown id {0}")]
    UnknownId(u32),
    #[error("this check needs the canonical 16-point set")]
    MissingX,
    #[error("{0}")]
    Data(#[from] crate::data::DataError),
    #[error("writing output: {0}")]
    Output(#[from] crate::formats::FormatError),
}

fn timed(f: impl FnOnce() -> CheckReport) -> CheckReport {
    let t = Instant::now();
    let mut r = f();
    r.wall = t.elapsed();
    r
}

fn slug(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect()
}

/// Exact chromatic number of `g` against `expected`, with a verified
/// certificate written when an output directory is set.
fn chi_check(
    ctx: &Ctx,
    check: &str,
    instance: &str,
    g: &DisjointnessGraph,
    expected: usize,
) -> Result<CheckReport, CheckError> {
    let t = Instant::now();
    let cert = chromatic_number(g.graph(), ctx.budget);
    let base = CheckReport::new(check, instance, format!("chi = {expected}")).budget(ctx.budget);
    let mut r = if !verify_certificate(g.graph(), &cert, None) {
        base.computed("certificate rejected", Verdict::Fail)
    } else if cert.is_exact() {
        let v = if cert.chi == expected { Verdict::Pass } else { Verdict::Fail };
        base.computed(format!("chi = {}", cert.chi), v)
    } else {
        let v = if (cert.lower..=cert.chi).contains(&expected) { Verdict::Unknown } else { Verdict::Fail };
        base.computed(format!("chi in [{}, {}]", cert.lower, cert.chi), v)
    };
    if let Some(path) = ctx.file(&format!("{}-{}.cert", slug(check), slug(instance))) {
        write_text(&path, &format_certificate(g, &cert))?;
        r.certificates.push(path.display().to_string());
    }
    r.wall = t.elapsed();
    Ok(r)
}

pub fn cmd_convex_table(max_n: usize, ctx: &Ctx) -> Result<Vec<CheckReport>, CheckError> {
    (3..=max_n.max(3))
        .map(|n| {
            let g = build_disjointness(&make_convex(n).expect("n >= 3")).expect("general position");
            chi_check(ctx, "convex", &format!("C_{n}"), &g, convex_chi(n as u64) as usize)
        })
        .collect()
}

pub fn cmd_double_chain_table(pairs: &[(usize, usize)], ctx: &Ctx) -> Result<Vec<CheckReport>, CheckError> {
    pairs
        .iter()
        .map(|&(k, l)| {
            let instance = format!("C_({k},{l})");
            match double_chain_chi(k as u64, l as u64) {
                None => Ok(CheckReport::new("double-chain", instance, "requires l >= max(3, k)")
                    .computed("skipped", Verdict::Unknown)
                    .stretch()),
                Some(expected) => {
                    let g = build_disjointness(&make_double_chain(k, l).expect("positive")).expect("general position");
                    chi_check(ctx, "double-chain", &instance, &g, expected as usize)
                }
            }
        })
        .collect()
}

/// `n` random points in general position with coordinates below `10^6`.
pub fn random_pointset(n: usize, rng: &mut impl Rng) -> PointSet {
    loop {
        let pts: Vec<Point> = (0..n)
            .map(|_| Point::new(rng.gen_range(-1_000_000..=1_000_000), rng.gen_range(-1_000_000..=1_000_000)))
            .collect();
        if let Ok(ps) = PointSet::new(pts) {
            if in_general_position(&ps) {
                return ps;
            }
        }
    }
}

fn tally(name: &str, instance: &str, claimed: &str, ok: usize, total: usize) -> CheckReport {
    let v = if ok == total { Verdict::Pass } else { Verdict::Fail };
    CheckReport::new(name, instance, claimed).computed(format!("{ok}/{total}"), v)
}

pub fn cmd_prop(id: u32, x: Option<&XSet>, ctx: &Ctx) -> Result<Vec<CheckReport>, CheckError> {
    let need_x = || x.ok_or(CheckError::MissingX);
    Ok(match id {
        3 => vec![timed(|| prop3(ctx))],
        4 => vec![prop4(need_x()?, ctx)?],
        5 => vec![timed(|| prop5(ctx))],
        6 | 7 => vec![timed(|| prop6_7(id))],
        10 => {
            let x = need_x()?;
            let a_t2: Vec<usize> = x.a().iter().chain(x.t2()).copied().collect();
            let b_t1: Vec<usize> = x.b().iter().chain(x.t1()).copied().collect();
            let ga = disjointness_on(x.points(), &a_t2).expect("subset");
            let gb = disjointness_on(x.points(), &b_t1).expect("subset");
            vec![chi_check(ctx, "prop10", "D(A+T2)", &ga, 6)?, chi_check(ctx, "prop10", "D(B+T1)", &gb, 6)?]
        }
        _ => return Err(CheckError::UnknownId(id)),
    })
}

fn prop3(ctx: &Ctx) -> CheckReport {
    let mut rng = ctx.rng(3);
    let mut ok = 0;
    let sizes: Vec<usize> = (3..=16).collect();
    for &n in &sizes {
        let ps = random_pointset(n, &mut rng);
        let g = build_disjointness(&ps).expect("general position");
        let order: Vec<usize> = (0..n).collect();
        let gamma = greedy_star_coloring(&g, &order).expect("n >= 3");
        if is_proper(&g, &gamma).unwrap_or(false) && gamma.count() == n - 2 {
            ok += 1;
        }
    }
    tally("prop3", "random P, n = 3..16", "proper with n-2 colors", ok, sizes.len())
}

fn prop4(x: &XSet, ctx: &Ctx) -> Result<CheckReport, CheckError> {
    let t = Instant::now();
    let g = build_disjointness(x.points()).expect("general position");
    let excluded = prop4_excluded(x);
    let eligible: Vec<_> = x.points().all_segments().into_iter().filter(|e| !excluded.contains(e)).collect();
    let results = ctx.map(&eligible, |&e| {
        let Ok(p4) = prop4_coloring(x, &g, e) else {
            return (false, None);
        };
        let gamma = &p4.coloring;
        let v = g.vertex_of(e).expect("segment of X");
        let alone = gamma.class(gamma.color(v)).len() == 1;
        // D(X) - e keeps a proper coloring on the other 13 colors
        let rest: Vec<u32> = gamma.colors().iter().enumerate().filter(|&(w, _)| w != v).map(|(_, &c)| c).collect();
        let ok = is_proper(&g, gamma).unwrap_or(false)
            && gamma.count() == 14
            && alone
            && colors_used(&rest) == 13
            && p4.pentagon_colorings == 2;
        (ok, Some((e, gamma.colors().to_vec())))
    });
    let ok = results.iter().filter(|r| r.0).count();
    let mut r = tally("prop4", "eligible segments of X", "14-coloring with the segment alone", ok, eligible.len());
    if let Some(dir) = ctx.file("prop4") {
        for (_, found) in &results {
            if let Some((e, colors)) = found {
                let path = dir.join(format!("seg-{}-{}.cert", e.i, e.j));
                write_text(&path, &crate::formats::format_coloring(&g, colors))?;
                r.certificates.push(path.display().to_string());
            }
        }
    }
    r.wall = t.elapsed();
    Ok(r)
}

/// Instance tests of the three parts of the subset proposition on random
/// sets of at most 8 points.
fn prop5(ctx: &Ctx) -> CheckReport {
    let mut rng = ctx.rng(5);
    let (mut ok, mut total) = (0, 0);
    let mut sets: Vec<PointSet> = (5..=8).map(|n| make_convex(n).expect("n >= 3")).collect();
    sets.extend((0..12).map(|i| random_pointset(5 + i % 4, &mut rng)));
    sets.push(make_double_chain(3, 3).expect("positive"));
    for ps in &sets {
        let n = ps.len();
        let g = build_disjointness(ps).expect("general position");
        let cert = chromatic_number(g.graph(), ctx.budget);
        let chi = cert.chi;
        let gamma = Coloring::normalized(&cert.witness);
        let chi_of = |q: &[usize]| -> usize {
            if q.len() < 2 {
                return 0;
            }
            chromatic_number(disjointness_on(ps, q).expect("subset").graph(), ctx.budget).chi
        };
        let subsets: Vec<Vec<usize>> =
            (1u32..(1 << n) - 1).map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect()).collect();
        for q in &subsets {
            let rest: Vec<usize> = (0..n).filter(|i| !q.contains(i)).collect();
            // (i)
            if chi == n - 2 && q.len() >= 3 {
                total += 1;
                ok += usize::from(chi_of(q) == q.len() - 2);
            }
            // (ii)
            if q.len() >= 3 && rest.len() >= 2 && is_separable_wrt(&g, q, &gamma).unwrap_or(false) {
                let used = dlab_core::geometry::segments_of(q)
                    .iter()
                    .map(|&e| gamma.of(&g, e).expect("segment"))
                    .collect::<std::collections::BTreeSet<_>>()
                    .len();
                if used == q.len() {
                    total += 1;
                    ok += usize::from(chi >= chi_of(&rest) + q.len());
                }
            }
        }
        // (iii): single stars, then one apex for every star at once
        let classes = classify_classes(&g, &gamma).expect("proper");
        let mut apices = Vec::new();
        for c in classes.iter().filter(|c| c.kind == ClassKind::Star && !c.apices.is_empty()) {
            let v = c.apices[0];
            if n > 3 {
                let rest: Vec<usize> = (0..n).filter(|&i| i != v).collect();
                total += 1;
                ok += usize::from(chi_of(&rest) + 1 == chi);
            }
            if !apices.contains(&v) {
                apices.push(v);
            }
        }
        if apices.len() > 1 && n - apices.len() >= 3 {
            let rest: Vec<usize> = (0..n).filter(|i| !apices.contains(i)).collect();
            total += 1;
            ok += usize::from(chi_of(&rest) + apices.len() == chi);
        }
    }
    tally("prop5", "subsets and stars of sets with n <= 8", "(i), (ii), (iii) hold", ok, total)
}

/// Exhaustive over proper colorings of `D(C_5)` from a 4-color palette.
fn prop6_7(id: u32) -> CheckReport {
    let g = build_disjointness(&make_convex(5).expect("5 points")).expect("general position");
    let n = g.vertex_count();
    let (mut checked, mut bad) = (0usize, 0usize);
    let mut assign = vec![0u32; n];
    for code in 0..4u32.pow(n as u32) {
        let mut c = code;
        for slot in assign.iter_mut() {
            *slot = c % 4;
            c /= 4;
        }
        if !dlab_core::exact::is_proper_assignment(g.graph(), &assign) {
            continue;
        }
        let used = colors_used(&assign);
        let gamma = Coloring::normalized(&assign);
        let classes = classify_classes(&g, &gamma).expect("proper");
        let star_apices: Vec<&Vec<usize>> =
            classes.iter().filter(|c| c.kind == ClassKind::Star).map(|c| &c.apices).collect();
        let is_apex = |p: usize| star_apices.iter().any(|a| a.contains(&p));
        let gamma_star = (0..5).filter(|&p| is_apex(p)).count();
        if id == 7 && used == 3 {
            checked += 1;
            bad += usize::from(gamma_star > 2);
        }
        if id == 6 && used == 4 && gamma_star == 5 {
            checked += 1;
            let good = classes.iter().any(|c| {
                c.members.len() == 1 && {
                    let (p, q) = (c.members[0].i, c.members[0].j);
                    let others = classes.iter().filter(|d| d.color != c.color && d.kind == ClassKind::Star);
                    others.clone().all(|d| !d.apices.contains(&p) && !d.apices.contains(&q))
                }
            });
            bad += usize::from(!good);
        }
    }
    let claim =
        if id == 6 { "4-colorings with 5 apices have an isolated 2-star" } else { "3-colorings have at most 2 apices" };
    let v = if bad == 0 && checked > 0 { Verdict::Pass } else { Verdict::Fail };
    CheckReport::new(format!("prop{id}"), "all colorings of D(C_5)", claim)
        .computed(format!("{checked} colorings, {bad} counterexamples"), v)
}

/// Instance indices to run: all of them, or `sample` drawn with the context
/// seed, in increasing order.
fn pick(ctx: &Ctx, claim: Claim, len: usize, sample_size: Option<usize>) -> Vec<usize> {
    match sample_size {
        Some(m) if m < len => {
            let mut idx = sample(&mut ctx.rng(100 + claim.number() as u64), len, m).into_vec();
            idx.sort_unstable();
            idx
        }
        _ => (0..len).collect(),
    }
}

pub fn cmd_lemma(id: u32, x: &XSet, sample_size: Option<usize>, ctx: &Ctx) -> Result<Vec<CheckReport>, CheckError> {
    let claim = Claim::lemma(id).ok_or(CheckError::UnknownId(id))?;
    let t = Instant::now();
    let name = claim.name();
    let family = match instances(x, claim) {
        Ok(f) => f,
        Err(LemmaError::ClosenessDisagreement { a, b }) => {
            return Ok(vec![CheckReport::new(&name, "closest triangle", "vertex and centroid metrics agree")
                .computed(format!("disagree on {}{}", x.name_of(a), x.name_of(b)), Verdict::Fail)])
        }
        Err(e) => return Ok(vec![CheckReport::new(&name, "instances", "").computed(format!("{e:?}"), Verdict::Fail)]),
    };
    if claim == Claim::Lemma11 {
        let mut out = Vec::new();
        for inst in &family {
            let g = disjointness_on(x.points(), &inst.q).expect("subset");
            out.push(chi_check(ctx, &name, &inst.description, &g, inst.colors + 1)?);
        }
        return Ok(out);
    }
    let chosen = pick(ctx, claim, family.len(), sample_size);
    let verdicts = ctx.map(&chosen, |&i| evaluate(x, &family[i], ctx.budget));
    let stretch = claim == Claim::Lemma24;
    let mut individual = Vec::new();
    let (mut held, mut unknown, mut failed) = (0, 0, 0);
    for (&i, v) in chosen.iter().zip(&verdicts) {
        let inst = &family[i];
        let claimed = format!("no {}-coloring", inst.colors);
        let mut r = CheckReport::new(&name, &inst.description, claimed).budget(ctx.budget);
        match v {
            LemmaVerdict::Refuted { .. } | LemmaVerdict::StarAlternative { .. } => held += 1,
            LemmaVerdict::Unknown { nodes } => {
                unknown += 1;
                r = r.computed(format!("budget hit after {nodes} nodes"), Verdict::Unknown);
                if stretch {
                    r = r.stretch();
                }
                individual.push(r);
            }
            LemmaVerdict::Counterexample(colors) => {
                failed += 1;
                individual.push(r.computed(format!("colorable with {} colors", colors_used(colors)), Verdict::Fail));
            }
        }
    }
    let verdict = if failed > 0 {
        Verdict::Fail
    } else if unknown > 0 {
        Verdict::Unknown
    } else {
        Verdict::Pass
    };
    let mut summary =
        CheckReport::new(&name, format!("{} of {} instances", chosen.len(), family.len()), "every instance refuted")
            .budget(ctx.budget)
            .computed(format!("{held} refuted, {unknown} unknown, {failed} colorable"), verdict);
    if stretch {
        summary = summary.stretch();
    }
    summary.wall = t.elapsed();
    let mut out = vec![summary];
    out.extend(individual);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem2Mode {
    Upper,
    Subsets,
    Full,
}

/// Subset sizes and count used by the subset mode.
pub const SUBSET_SAMPLES: usize = 60;

pub fn cmd_theorem2(mode: Theorem2Mode, x: &XSet, ctx: &Ctx) -> Result<Vec<CheckReport>, CheckError> {
    let g = build_disjointness(x.points()).expect("general position");
    match mode {
        Theorem2Mode::Upper => {
            let greedy = timed(|| {
                let order: Vec<usize> = (0..16).collect();
                let gamma = greedy_star_coloring(&g, &order).expect("16 points");
                let ok = is_proper(&g, &gamma).unwrap_or(false) && gamma.count() == 14;
                let v = if ok { Verdict::Pass } else { Verdict::Fail };
                CheckReport::new("theorem2-upper", "greedy on X", "proper with 14 colors")
                    .computed(format!("{} colors", gamma.count()), v)
            });
            let hex = timed(|| {
                let mut rng = ctx.rng(17);
                let sets: Vec<PointSet> = (0..100).map(|_| random_pointset(17, &mut rng)).collect();
                let ok = ctx
                    .map(&sets, |ps| {
                        let g = build_disjointness(ps).expect("general position");
                        hexagon_upper_coloring(&g).is_ok_and(|c| c.count() == 14 && is_proper(&g, &c).unwrap_or(false))
                    })
                    .into_iter()
                    .filter(|&b| b)
                    .count();
                tally("theorem2-upper", "100 random 17-point sets", "proper with 14 colors via a hexagon", ok, 100)
            });
            Ok(vec![greedy, hex])
        }
        Theorem2Mode::Subsets => Ok(vec![timed(|| {
            let mut rng = ctx.rng(2);
            let picks: Vec<Vec<usize>> = (0..SUBSET_SAMPLES)
                .map(|_| {
                    let size = rng.gen_range(3..=9);
                    let mut q = sample(&mut rng, 16, size).into_vec();
                    q.sort_unstable();
                    q
                })
                .collect();
            let results = ctx.map(&picks, |q| {
                let sub = disjointness_on(x.points(), q).expect("subset");
                let cert = chromatic_number(sub.graph(), ctx.budget);
                (cert.is_exact(), cert.chi == q.len() - 2)
            });
            let ok = results.iter().filter(|r| r.0 && r.1).count();
            let mut r = tally("theorem2-subsets", "random X' with 3 <= |X'| <= 9", "chi = |X'| - 2", ok, picks.len());
            if ok < picks.len() && results.iter().all(|r| !r.0 || r.1) {
                r.verdict = Verdict::Unknown;
            }
            r.budget = ctx.budget;
            r
        })]),
        Theorem2Mode::Full => {
            let t = Instant::now();
            let mut r = CheckReport::new("theorem2-full", "D(X)", "no 13-coloring").budget(ctx.budget).stretch();
            r = match k_colorable(g.graph(), 13, &ColorConstraints::none(), ctx.budget) {
                KColorOutcome::No { nodes, .. } => r.computed(format!("refuted in {nodes} nodes"), Verdict::Pass),
                KColorOutcome::Unknown { nodes } => {
                    r.computed(format!("budget hit after {nodes} nodes"), Verdict::Unknown)
                }
                KColorOutcome::Yes(_) => r.computed("13-colorable", Verdict::Fail),
            };
            if let Some(path) = ctx.file("dx-13.cnf") {
                write_text(&path, &format_cnf(&kcolor_cnf(g.graph(), 13, true)))?;
                r.certificates.push(path.display().to_string());
            }
            r.wall = t.elapsed();
            Ok(vec![r])
        }
    }
}

/// Bound table rows for `3..=n`; a row fails when its lower bound exceeds
/// its upper bound.
pub fn cmd_bounds(n: u64) -> Vec<CheckReport> {
    (3..=n.max(3))
        .map(|m| {
            let b = DnBounds::new(m);
            let dc = b.lower_double_chain.map_or("-".to_string(), |v| v.to_string());
            let computed = format!(
                "lower {} (5[n/7] = {}, double chain {}), upper {} (n-2 = {}, loglog term {}/2, base {})",
                b.lower(),
                b.lower_sevenths,
                dc,
                b.upper(),
                b.upper_trivial,
                b.upper_loglog_doubled,
                LOG_BASE
            );
            let v = if b.inconsistent() { Verdict::Fail } else { Verdict::Pass };
            CheckReport::new("bounds", format!("d({m})"), "lower <= upper").computed(computed, v)
        })
        .collect()
}

/// Node cap for the full 13-colorability search inside [`run_all`].
pub const REPORT_FULL_BUDGET: u64 = 100_000_000;

/// Every check at its default size, in a fixed order.
pub fn run_all(x: &XSet, ctx: &Ctx) -> Result<Vec<CheckReport>, CheckError> {
    let mut out = cmd_convex_table(9, ctx)?;
    out.extend(cmd_double_chain_table(&DOUBLE_CHAIN_PAIRS, ctx)?);
    for id in [3, 4, 5, 6, 7, 10] {
        out.extend(cmd_prop(id, Some(x), ctx)?);
    }
    for claim in Claim::LEMMAS {
        out.extend(cmd_lemma(claim.number(), x, None, ctx)?);
    }
    for mode in [Theorem2Mode::Upper, Theorem2Mode::Subsets] {
        out.extend(cmd_theorem2(mode, x, ctx)?);
    }
    let full = Ctx { budget: ctx.budget.min(REPORT_FULL_BUDGET), ..ctx.clone() };
    out.extend(cmd_theorem2(Theorem2Mode::Full, x, &full)?);
    out.extend(cmd_bounds(16));
    Ok(out)
}

pub const DOUBLE_CHAIN_PAIRS: [(usize, usize); 8] = [(1, 3), (2, 3), (3, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 5)];
