//! Exact chromatic numbers with certificates.
//!
//! The k-colorability search is a DSATUR-ordered branch and bound with
//! forward checking. Before searching, vertices that can always be colored
//! afterwards are peeled off: low-degree vertices, and vertices whose
//! neighborhood is contained in a non-adjacent vertex's neighborhood.
//! Budget exhaustion is reported as `Unknown` and never as `No`.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{BitIter, Graph};

/// Colors are bit positions in a `u64`.
pub const MAX_COLORS: usize = 64;

/// Hypotheses imposed on a coloring search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColorConstraints {
    /// `(vertex, color)` pins.
    pub fixed: Vec<(usize, u32)>,
    /// Vertices whose color may not appear on any other vertex.
    pub unique: Vec<usize>,
    /// `(vertex, color)` exclusions.
    pub forbidden: Vec<(usize, u32)>,
}

impl ColorConstraints {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.fixed.is_empty() && self.unique.is_empty() && self.forbidden.is_empty()
    }

    /// Checks a complete assignment against every constraint.
    pub fn satisfied_by(&self, colors: &[u32]) -> bool {
        if self.fixed.iter().any(|&(v, c)| colors.get(v) != Some(&c)) {
            return false;
        }
        if self.forbidden.iter().any(|&(v, c)| colors.get(v) == Some(&c)) {
            return false;
        }
        self.unique
            .iter()
            .all(|&u| colors.get(u).is_some_and(|&c| colors.iter().enumerate().all(|(w, &d)| w == u || d != c)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KColorOutcome {
    /// A proper coloring (indexed by vertex) satisfying the constraints.
    Yes(Vec<u32>),
    /// The search tree was exhausted. `inconsistent` marks constraint sets
    /// refuted before any search.
    No { nodes: u64, inconsistent: bool },
    /// The node budget ran out.
    Unknown { nodes: u64 },
}

impl KColorOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, KColorOutcome::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, KColorOutcome::No { .. })
    }

    pub fn nodes(&self) -> u64 {
        match self {
            KColorOutcome::Yes(_) => 0,
            KColorOutcome::No { nodes, .. } | KColorOutcome::Unknown { nodes } => *nodes,
        }
    }
}

/// Whether `colors` is a proper coloring of `g`.
pub fn is_proper_assignment(g: &Graph, colors: &[u32]) -> bool {
    colors.len() == g.vertex_count() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Number of distinct colors in an assignment.
pub fn colors_used(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Renumbers colors to `0..c` by first occurrence.
pub fn normalize(colors: &[u32]) -> Vec<u32> {
    let mut map: Vec<(u32, u32)> = Vec::new();
    colors
        .iter()
        .map(|&c| match map.iter().find(|&&(from, _)| from == c) {
            Some(&(_, to)) => to,
            None => {
                let to = map.len() as u32;
                map.push((c, to));
                to
            }
        })
        .collect()
}

/// A maximum clique of `g` (for `D(P)`: a maximum family of pairwise
/// disjoint segments).
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let w = g.words();
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut cand = vec![0u64; w];
    for v in 0..n {
        cand[v / 64] |= 1 << (v % 64);
    }

    fn popcount(s: &[u64]) -> usize {
        s.iter().map(|x| x.count_ones() as usize).sum()
    }

    // Greedy coloring of the candidate set yields an upper bound per vertex.
    fn color_bound(g: &Graph, cand: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let w = cand.len();
        let mut uncolored = cand.to_vec();
        let mut order = Vec::new();
        let mut bounds = Vec::new();
        let mut color = 0;
        while popcount(&uncolored) > 0 {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = first_bit(&q) {
                q[v / 64] &= !(1 << (v % 64));
                uncolored[v / 64] &= !(1 << (v % 64));
                let row = g.row(v);
                for i in 0..w {
                    q[i] &= !row[i];
                }
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }

    fn first_bit(s: &[u64]) -> Option<usize> {
        s.iter().enumerate().find(|(_, &x)| x != 0).map(|(i, &x)| i * 64 + x.trailing_zeros() as usize)
    }

    fn expand(g: &Graph, cand: &mut [u64], current: &mut Vec<usize>, best: &mut Vec<usize>) {
        let (order, bounds) = color_bound(g, cand);
        for idx in (0..order.len()).rev() {
            if current.len() + bounds[idx] <= best.len() {
                return;
            }
            let v = order[idx];
            current.push(v);
            let row = g.row(v);
            let mut next: Vec<u64> = cand.iter().zip(row).map(|(a, b)| a & b).collect();
            if popcount(&next) == 0 {
                if current.len() > best.len() {
                    *best = current.clone();
                }
            } else {
                expand(g, &mut next, current, best);
            }
            current.pop();
            cand[v / 64] &= !(1 << (v % 64));
        }
    }

    if n > 0 {
        expand(g, &mut cand, &mut current, &mut best);
    }
    best.sort_unstable();
    best
}

/// DSATUR greedy coloring; ties broken by degree, then lowest index.
pub fn dsatur(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut colors = vec![u32::MAX; n];
    let mut neighbor_colors: Vec<Vec<bool>> = vec![Vec::new(); n];
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == u32::MAX)
            .max_by(|&a, &b| {
                let sa = neighbor_colors[a].iter().filter(|&&x| x).count();
                let sb = neighbor_colors[b].iter().filter(|&&x| x).count();
                sa.cmp(&sb).then(degrees[a].cmp(&degrees[b])).then(b.cmp(&a))
            })
            .expect("an uncolored vertex remains");
        let c = (0..).find(|&c| !neighbor_colors[v].get(c).copied().unwrap_or(false)).unwrap();
        colors[v] = c as u32;
        for u in g.neighbors(v) {
            let nc = &mut neighbor_colors[u];
            if nc.len() <= c {
                nc.resize(c + 1, false);
            }
            nc[c] = true;
        }
    }
    colors
}

enum Peel {
    LowDegree(usize),
    Dominated { vertex: usize, by: usize },
}

/// Peels off vertices that any coloring of the rest extends to.
fn peel(g: &Graph, k: usize, locked: &[bool], reserved_colors: usize) -> (Vec<bool>, Vec<Peel>) {
    let n = g.vertex_count();
    let w = g.words();
    let mut alive = vec![true; n];
    let mut alive_bits = vec![0u64; w];
    for v in 0..n {
        alive_bits[v / 64] |= 1 << (v % 64);
    }
    let mut stack = Vec::new();
    let live_degree = |v: usize, bits: &[u64]| -> usize {
        g.row(v).iter().zip(bits).map(|(a, b)| (a & b).count_ones() as usize).sum()
    };
    loop {
        let mut changed = false;
        for v in 0..n {
            if alive[v] && !locked[v] && live_degree(v, &alive_bits) + reserved_colors < k {
                alive[v] = false;
                alive_bits[v / 64] &= !(1 << (v % 64));
                stack.push(Peel::LowDegree(v));
                changed = true;
            }
        }
        for u in 0..n {
            if !alive[u] || locked[u] {
                continue;
            }
            let ru = g.row(u);
            let dominator = (0..n).find(|&v| {
                v != u && alive[v] && !locked[v] && !g.has_edge(u, v) && {
                    let rv = g.row(v);
                    (0..w).all(|i| ru[i] & alive_bits[i] & !rv[i] == 0)
                }
            });
            if let Some(v) = dominator {
                alive[u] = false;
                alive_bits[u / 64] &= !(1 << (u % 64));
                stack.push(Peel::Dominated { vertex: u, by: v });
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (alive, stack)
}

struct Search<'a> {
    k: usize,
    adj: &'a [Vec<usize>],
    allowed: Vec<u64>,
    unique: Vec<bool>,
    /// Colors no constraint distinguishes; unused ones are interchangeable.
    free: u64,
    static_degree: Vec<usize>,
    color: Vec<u32>,
    count: Vec<u16>,
    blocked: Vec<u64>,
    used: Vec<u32>,
    used_mask: u64,
    reserved: u64,
    nodes: u64,
    budget: u64,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

const NONE: u32 = u32::MAX;

impl Search<'_> {
    fn options(&self, v: usize) -> u64 {
        let mut o = self.allowed[v] & !self.blocked[v] & !self.reserved;
        if self.unique[v] {
            o &= !self.used_mask;
        }
        o
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c as u32;
        self.used[c] += 1;
        self.used_mask |= 1 << c;
        if self.unique[v] {
            self.reserved |= 1 << c;
        }
        let adj = self.adj;
        for &u in &adj[v] {
            let slot = u * self.k + c;
            self.count[slot] += 1;
            self.blocked[u] |= 1 << c;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = NONE;
        self.used[c] -= 1;
        if self.used[c] == 0 {
            self.used_mask &= !(1 << c);
        }
        if self.unique[v] {
            self.reserved &= !(1 << c);
        }
        let adj = self.adj;
        for &u in &adj[v] {
            let slot = u * self.k + c;
            self.count[slot] -= 1;
            if self.count[slot] == 0 {
                self.blocked[u] &= !(1 << c);
            }
        }
    }

    fn run(&mut self) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        let mut pick = None;
        let mut pick_opts = 0u64;
        let mut pick_key = (u32::MAX, 0usize);
        for v in 0..self.color.len() {
            if self.color[v] != NONE {
                continue;
            }
            let opts = self.options(v);
            let key = (opts.count_ones(), self.static_degree[v]);
            if key.0 == 0 {
                return Step::Exhausted;
            }
            if key.0 < pick_key.0 || (key.0 == pick_key.0 && key.1 > pick_key.1) {
                pick = Some(v);
                pick_opts = opts;
                pick_key = key;
            }
        }
        let Some(v) = pick else {
            return Step::Found;
        };
        let mut tried_fresh = false;
        for c in BitIter(pick_opts) {
            let fresh = self.free >> c & 1 == 1 && self.used[c] == 0;
            if fresh {
                if tried_fresh {
                    continue;
                }
                tried_fresh = true;
            }
            self.assign(v, c);
            match self.run() {
                Step::Exhausted => self.unassign(v, c),
                other => return other,
            }
        }
        Step::Exhausted
    }
}

/// Decides whether `g` has a proper `k`-coloring satisfying `constraints`,
/// exploring at most `budget` search nodes.
pub fn k_colorable(g: &Graph, k: usize, constraints: &ColorConstraints, budget: u64) -> KColorOutcome {
    let n = g.vertex_count();
    assert!((1..=MAX_COLORS).contains(&k), "k must be in 1..=64");
    let no = |inconsistent| KColorOutcome::No { nodes: 0, inconsistent };
    let full: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };

    let mut allowed = vec![full; n];
    let mut locked = vec![false; n];
    let mut unique = vec![false; n];
    let mut distinguished = 0u64;
    for &(v, c) in &constraints.fixed {
        if v >= n || c as usize >= k || allowed[v] & (1 << c) == 0 {
            return no(true);
        }
        allowed[v] &= 1 << c;
        locked[v] = true;
        distinguished |= 1 << c;
    }
    for &(v, c) in &constraints.forbidden {
        if v >= n {
            return no(true);
        }
        if (c as usize) < k {
            allowed[v] &= !(1 << c);
            distinguished |= 1 << c;
        }
        locked[v] = true;
    }
    for &u in &constraints.unique {
        if u >= n {
            return no(true);
        }
        unique[u] = true;
        locked[u] = true;
    }
    if allowed.contains(&0) {
        return no(true);
    }
    // pinned pairs that cannot coexist
    for (x, &(u, cu)) in constraints.fixed.iter().enumerate() {
        for &(v, cv) in &constraints.fixed[x + 1..] {
            if u != v && cu == cv && (g.has_edge(u, v) || unique[u] || unique[v]) {
                return no(true);
            }
        }
    }
    if n == 0 {
        return KColorOutcome::Yes(Vec::new());
    }

    let reserved_colors = unique.iter().filter(|&&u| u).count();
    let (alive, stack) = peel(g, k, &locked, reserved_colors);
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let sub = g.induced(&keep);
    let m = keep.len();
    let adj: Vec<Vec<usize>> = (0..m).map(|v| sub.neighbors(v).collect()).collect();

    let mut search = Search {
        k,
        adj: &adj,
        allowed: keep.iter().map(|&v| allowed[v]).collect(),
        unique: keep.iter().map(|&v| unique[v]).collect(),
        free: full & !distinguished,
        static_degree: (0..m).map(|v| adj[v].len()).collect(),
        color: vec![NONE; m],
        count: vec![0; m * k],
        blocked: vec![0; m],
        used: vec![0; k],
        used_mask: 0,
        reserved: 0,
        nodes: 0,
        budget,
    };

    // Symmetry breaking: a maximum clique takes the first colors outright.
    if constraints.is_empty() && m > 0 {
        let clique = max_clique(&sub);
        if clique.len() > k {
            return KColorOutcome::No { nodes: 0, inconsistent: false };
        }
        for (c, &v) in clique.iter().enumerate() {
            search.assign(v, c);
        }
    }

    match search.run() {
        Step::Found => {}
        Step::Exhausted => return KColorOutcome::No { nodes: search.nodes, inconsistent: false },
        Step::OutOfBudget => return KColorOutcome::Unknown { nodes: search.nodes },
    }

    let mut colors = vec![NONE; n];
    for (i, &v) in keep.iter().enumerate() {
        colors[v] = search.color[i];
    }
    let reserved: u64 = (0..n).filter(|&v| unique[v]).fold(0, |m, v| m | 1 << colors[v]);
    for step in stack.iter().rev() {
        match *step {
            Peel::Dominated { vertex, by } => colors[vertex] = colors[by],
            Peel::LowDegree(v) => {
                let mut taken = reserved;
                for u in g.neighbors(v) {
                    if colors[u] != NONE {
                        taken |= 1 << colors[u];
                    }
                }
                let c = (!taken & full).trailing_zeros();
                debug_assert!((c as usize) < k);
                colors[v] = c;
            }
        }
    }
    debug_assert!(is_proper_assignment(g, &colors));
    debug_assert!(constraints.satisfied_by(&colors));
    KColorOutcome::Yes(colors)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowerEvidence {
    /// `chi - 1` colors refuted by exhausting the search tree.
    ExhaustedSearch { nodes: u64 },
    /// A clique of size `chi` exists.
    Clique(Vec<usize>),
    /// Refutation recorded outside this crate (e.g. an external SAT run).
    ExternalProofRef(alloc::string::String),
    /// Budget ran out before `chi - 1` was refuted.
    Budgeted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticCertificate {
    /// Upper end of the bracket; the exact value when `lower == chi`.
    pub chi: usize,
    /// Proven lower bound.
    pub lower: usize,
    pub witness: Vec<u32>,
    pub lower_evidence: LowerEvidence,
    pub nodes: u64,
}

impl ChromaticCertificate {
    pub fn is_exact(&self) -> bool {
        self.lower == self.chi && self.lower_evidence != LowerEvidence::Budgeted
    }
}

/// Exact chromatic number, searching downward from the DSATUR bound.
pub fn chromatic_number(g: &Graph, budget: u64) -> ChromaticCertificate {
    let n = g.vertex_count();
    if n == 0 {
        return ChromaticCertificate {
            chi: 0,
            lower: 0,
            witness: Vec::new(),
            lower_evidence: LowerEvidence::Clique(Vec::new()),
            nodes: 0,
        };
    }
    let clique = max_clique(g);
    let mut witness = normalize(&dsatur(g));
    let mut ub = colors_used(&witness);
    let mut nodes = 0;
    loop {
        if ub == clique.len() {
            return ChromaticCertificate {
                chi: ub,
                lower: ub,
                witness,
                lower_evidence: LowerEvidence::Clique(clique),
                nodes,
            };
        }
        match k_colorable(g, ub - 1, &ColorConstraints::none(), budget) {
            KColorOutcome::Yes(c) => {
                witness = normalize(&c);
                ub = colors_used(&witness);
            }
            KColorOutcome::No { nodes: used, .. } => {
                nodes += used;
                return ChromaticCertificate {
                    chi: ub,
                    lower: ub,
                    witness,
                    lower_evidence: LowerEvidence::ExhaustedSearch { nodes },
                    nodes,
                };
            }
            KColorOutcome::Unknown { nodes: used } => {
                nodes += used;
                return ChromaticCertificate {
                    chi: ub,
                    lower: clique.len(),
                    witness,
                    lower_evidence: LowerEvidence::Budgeted,
                    nodes,
                };
            }
        }
    }
}

/// Independent check of a certificate: proper witness with exactly `chi`
/// colors, not below the clique bound, constraints (if any) satisfied.
pub fn verify_certificate(g: &Graph, cert: &ChromaticCertificate, constraints: Option<&ColorConstraints>) -> bool {
    if !is_proper_assignment(g, &cert.witness) || colors_used(&cert.witness) != cert.chi {
        return false;
    }
    if cert.witness.iter().any(|&c| c as usize >= cert.chi.max(1)) && g.vertex_count() > 0 {
        return false;
    }
    if cert.lower > cert.chi || cert.chi < max_clique(g).len() {
        return false;
    }
    if let LowerEvidence::Clique(c) = &cert.lower_evidence {
        if c.len() != cert.lower || c.iter().enumerate().any(|(i, &u)| c[i + 1..].iter().any(|&v| !g.has_edge(u, v))) {
            return false;
        }
    }
    constraints.is_none_or(|c| c.satisfied_by(&cert.witness))
}

/// A CNF formula over variables `1..=num_vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

/// Variable for "vertex `v` has color `c`".
pub fn color_var(v: usize, c: usize, k: usize) -> i32 {
    (v * k + c + 1) as i32
}

/// k-colorability as CNF: at-least-one per vertex, optional pairwise
/// at-most-one, and one conflict clause per edge and color.
pub fn kcolor_cnf(g: &Graph, k: usize, at_most_one: bool) -> Cnf {
    let n = g.vertex_count();
    let mut clauses = Vec::new();
    for v in 0..n {
        clauses.push((0..k).map(|c| color_var(v, c, k)).collect());
        if at_most_one {
            for c in 0..k {
                for d in c + 1..k {
                    clauses.push(vec![-color_var(v, c, k), -color_var(v, d, k)]);
                }
            }
        }
    }
    for (u, v) in g.edges() {
        for c in 0..k {
            clauses.push(vec![-color_var(u, c, k), -color_var(v, c, k)]);
        }
    }
    Cnf { num_vars: n * k, clauses }
}

/// Reads a coloring back from a satisfying assignment (`model[var-1]`).
pub fn decode_model(n: usize, k: usize, model: &[bool]) -> Option<Vec<u32>> {
    (0..n)
        .map(|v| (0..k).find(|&c| model.get(color_var(v, c, k) as usize - 1) == Some(&true)).map(|c| c as u32))
        .collect()
}
