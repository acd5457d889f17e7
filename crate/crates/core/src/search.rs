//! Isomorph-free enumeration of small graphs, per-graph invariant records,
//! and aggregate checks over streams of records.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::graph6::write_graph6;
use crate::invariants::{hilbert_series, v_number};
use crate::regularity::{regularity_with, FieldSpec, RegularityOptions};
use crate::{Error, Result};

/// Largest vertex count handled by [`enumerate_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// Largest vertex count handled by [`canonical_code`] (the code fits in 64 bits).
pub const MAX_CANONICAL_VERTICES: usize = 11;

/// Upper-triangle bit string in column order `(0,1), (0,2), (1,2), ...`,
/// first pair in the most significant position.
pub fn upper_triangle_code(g: &Graph) -> u64 {
    let mut code = 0u64;
    for j in 1..g.n() {
        for i in 0..j {
            code = code << 1 | g.has_edge(i, j) as u64;
        }
    }
    code
}

/// Lexicographically least [`upper_triangle_code`] over every relabeling
/// that lists vertices by non-increasing degree, together with the
/// permutation `perm[old] = new` achieving it.
///
/// Degree order is preserved by isomorphisms, so two graphs are isomorphic
/// iff their canonical codes agree.
pub fn canonical_labeling(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::ResourceLimit {
            what: "canonical form vertices",
            limit: MAX_CANONICAL_VERTICES,
            requested: n,
        });
    }
    let mut classes: Vec<(usize, VertexSet)> = Vec::new();
    let mut by_degree: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for v in 0..n {
        let d = g.degree(v);
        let e = by_degree.entry(d).or_insert(VertexSet::EMPTY);
        *e = e.with(v);
    }
    for (&d, &set) in by_degree.iter().rev() {
        classes.push((d, set));
    }
    // slot_class[k]: the degree class the k-th new label is drawn from.
    let slot_class: Vec<usize> =
        classes.iter().enumerate().flat_map(|(c, (_, set))| core::iter::repeat_n(c, set.len())).collect();
    let mut search = Canon {
        g,
        slot_class,
        classes: classes.iter().map(|c| c.1).collect(),
        order: Vec::with_capacity(n),
        best: None,
    };
    search.extend(0);
    let (code, order) = search.best.expect("at least one labeling");
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    Ok((code, perm))
}

struct Canon<'a> {
    g: &'a Graph,
    slot_class: Vec<usize>,
    classes: Vec<VertexSet>,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Canon<'_> {
    /// `prefix` holds the code bits for columns `1..order.len()`.
    fn extend(&mut self, prefix: u64) {
        let k = self.order.len();
        let n = self.g.n();
        if k == n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        let class = self.slot_class[k];
        let best_prefix = self.best.as_ref().map(|(b, _)| {
            // Bits of the best code through column k.
            let remaining = n * (n - 1) / 2 - (k + 1) * k / 2;
            b >> remaining
        });
        let mut candidates = self.classes[class];
        while let Some(v) = candidates.min() {
            candidates = candidates.without(v);
            let mut column = 0u64;
            for &u in &self.order {
                column = column << 1 | self.g.has_edge(u, v) as u64;
            }
            let next = prefix << k | column;
            if best_prefix.is_some_and(|b| next > b) {
                continue;
            }
            self.classes[class] = self.classes[class].without(v);
            self.order.push(v);
            self.extend(next);
            self.order.pop();
            self.classes[class] = self.classes[class].with(v);
        }
    }
}

pub fn canonical_code(g: &Graph) -> Result<u64> {
    canonical_labeling(g).map(|(code, _)| code)
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, perm) = canonical_labeling(g)?;
    g.permuted(&perm)
}

/// Inverse of [`upper_triangle_code`].
pub fn graph_from_code(n: usize, code: u64) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    let mut bit = n * n.saturating_sub(1) / 2;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// in canonical labeling, sorted by canonical code.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::InvalidParameter("graphs need at least one vertex".to_string()));
    }
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::ResourceLimit {
            what: "built-in enumerator vertices; supply a graph6 file",
            limit: MAX_ENUMERATION_VERTICES,
            requested: n,
        });
    }
    let mut layer: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &layer {
            let base = graph_from_code(k - 1, code)?;
            for mask in 0u64..1 << (k - 1) {
                let mut g = Graph::empty(k)?;
                for (a, b) in base.edges() {
                    g.add_edge(a, b)?;
                }
                for u in VertexSet(mask).iter() {
                    g.add_edge(u, k - 1)?;
                }
                next.insert(canonical_code(&g)?);
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .map(|code| graph_from_code(n, code))
        .filter(|g| g.as_ref().map_or(true, |g| !connected_only || g.is_connected()))
        .collect()
}

/// Options for [`compute_record`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct RecordOptions {
    pub regularity: bool,
    pub regularity_limits: RegularityOptions,
}

/// Every invariant of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub alpha: usize,
    pub beta: usize,
    pub v: usize,
    pub deg_h: usize,
    pub lead_coeff: i128,
    /// `None` when not requested, over budget, or the graph has no edges.
    pub reg_q: Option<usize>,
    pub reg_f2: Option<usize>,
    pub error: Option<String>,
}

impl InvariantRecord {
    /// Placeholder for an input that could not be decoded; numeric fields are
    /// zero and `n == 0` marks it.
    pub fn failed(graph6: String, error: String) -> Self {
        InvariantRecord {
            graph6,
            n: 0,
            m: 0,
            connected: false,
            alpha: 0,
            beta: 0,
            v: 0,
            deg_h: 0,
            lead_coeff: 0,
            reg_q: None,
            reg_f2: None,
            error: Some(error),
        }
    }

    pub fn is_failed(&self) -> bool {
        self.n == 0
    }
}

/// Computes a record; arithmetic or budget failures land in `error`.
pub fn compute_record(g: &Graph, opts: &RecordOptions) -> InvariantRecord {
    let alpha = g.independence_number();
    let mut rec = InvariantRecord {
        graph6: write_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        connected: g.is_connected(),
        alpha,
        beta: g.n() - alpha,
        v: v_number(g),
        deg_h: 0,
        lead_coeff: 0,
        reg_q: None,
        reg_f2: None,
        error: None,
    };
    match hilbert_series(g) {
        Ok(s) => {
            rec.deg_h = s.degree();
            rec.lead_coeff = s.leading_coefficient();
        }
        Err(e) => rec.error = Some(e.to_string()),
    }
    let limits = opts.regularity_limits;
    if opts.regularity && !g.is_edgeless() && g.n() <= limits.max_vertices {
        for (field, slot) in [(FieldSpec::Rationals, &mut rec.reg_q), (FieldSpec::PrimeField(2), &mut rec.reg_f2)] {
            match regularity_with(g, field, limits) {
                Ok(r) => *slot = Some(r),
                Err(e) => {
                    rec.error.get_or_insert_with(|| e.to_string());
                }
            }
        }
    }
    rec
}

/// Checks the bounds every record must satisfy; the message names the first
/// failed relation.
pub fn check_record(rec: &InvariantRecord) -> core::result::Result<(), String> {
    let fail = |what: &str| Err(alloc::format!("{what} fails for {}", rec.graph6));
    if rec.alpha + rec.beta != rec.n {
        return fail("alpha + beta = n");
    }
    if rec.v > rec.beta {
        return fail("v <= beta");
    }
    if rec.v + rec.deg_h > rec.n {
        return fail("v + deg_h <= n");
    }
    if rec.deg_h > rec.alpha {
        return fail("deg_h <= alpha");
    }
    Ok(())
}

/// Records with `v > deg_h`.
pub fn find_v_gt_deg<'a, I>(records: I) -> Vec<InvariantRecord>
where
    I: IntoIterator<Item = &'a InvariantRecord>,
{
    records.into_iter().filter(|r| r.v > r.deg_h).cloned().collect()
}

/// Realized `(v, deg_h)` pairs with multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScatterTable {
    pub n: usize,
    pub counts: BTreeMap<(usize, usize), u64>,
}

impl ScatterTable {
    pub fn new(n: usize) -> Self {
        ScatterTable { n, counts: BTreeMap::new() }
    }

    pub fn add(&mut self, rec: &InvariantRecord) {
        *self.counts.entry((rec.v, rec.deg_h)).or_insert(0) += 1;
    }

    pub fn merge(&mut self, other: &ScatterTable) {
        for (&k, &c) in &other.counts {
            *self.counts.entry(k).or_insert(0) += c;
        }
    }

    pub fn pairs(&self) -> BTreeSet<(usize, usize)> {
        self.counts.keys().copied().collect()
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Scatter table of the records with `n` vertices that are connected.
pub fn scatter<'a, I>(n: usize, records: I) -> ScatterTable
where
    I: IntoIterator<Item = &'a InvariantRecord>,
{
    let mut table = ScatterTable::new(n);
    for rec in records.into_iter().filter(|r| r.n == n && r.connected) {
        table.add(rec);
    }
    table
}

/// Published `(v, deg_h)` pair sets for connected graphs on `n` vertices,
/// `2 <= n <= 10`.
pub fn reference_panel(n: usize) -> Option<BTreeSet<(usize, usize)>> {
    let mut pairs = BTreeSet::new();
    let ranges: &[(usize, usize, usize)] = match n {
        2 => &[(1, 1, 1)],
        3 => &[(1, 1, 2)],
        4 => &[(1, 1, 3)],
        5 => &[(1, 1, 4), (2, 2, 2)],
        6 => &[(1, 1, 5), (2, 2, 3)],
        7 => &[(1, 1, 6), (2, 2, 4)],
        8 => &[(1, 1, 7), (2, 2, 5), (3, 3, 3)],
        9 => &[(1, 1, 8), (2, 2, 6), (3, 3, 5)],
        10 => &[(1, 1, 9), (2, 2, 7), (3, 3, 5)],
        _ => return None,
    };
    for &(v, lo, hi) in ranges {
        pairs.extend((lo..=hi).map(|d| (v, d)));
    }
    Some(pairs)
}

/// Whether a check is a theorem (violations are failures) or an observed
/// pattern that is only reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Theorem,
    Conjecture,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub checked: u64,
    pub violations: Vec<String>,
}

/// Identifiers of the checks in a [`TheoremReport`].
pub const V_LE_BETA: &str = "v <= beta";
pub const V_EQ_BETA_IFF_STARS: &str = "v = beta iff stars";
pub const V_PLUS_DEG_LE_N: &str = "v + deg_h <= n";
pub const V_PLUS_DEG_EQ_N_IFF_STARS: &str = "v + deg_h = n iff stars";
pub const TWO_V_PLUS_DEG_LE_N_PLUS_1: &str = "2v + deg_h <= n + 1";

/// Pass/fail tallies for the bound and equality checks over a stream of
/// graphs. Graphs without edges are counted in `skipped` and not checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub checks: Vec<CheckResult>,
    pub skipped: u64,
    /// Graph6 codes of the graphs meeting `v + deg_h = n`.
    pub equality_cases: Vec<String>,
}

impl Default for TheoremReport {
    fn default() -> Self {
        let check = |name, status| CheckResult { name, status, checked: 0, violations: Vec::new() };
        TheoremReport {
            checks: vec![
                check(V_LE_BETA, CheckStatus::Theorem),
                check(V_EQ_BETA_IFF_STARS, CheckStatus::Theorem),
                check(V_PLUS_DEG_LE_N, CheckStatus::Theorem),
                check(V_PLUS_DEG_EQ_N_IFF_STARS, CheckStatus::Theorem),
                check(TWO_V_PLUS_DEG_LE_N_PLUS_1, CheckStatus::Conjecture),
            ],
            skipped: 0,
            equality_cases: Vec::new(),
        }
    }
}

impl TheoremReport {
    /// Records one graph. `v = beta` is compared against the non-isolated
    /// part being a disjoint union of stars, since isolated vertices change
    /// neither side; `v + deg_h = n` against the whole graph being one. The
    /// `2v + deg_h <= n + 1` pattern is only tallied on connected graphs.
    pub fn observe(&mut self, g: &Graph, rec: &InvariantRecord) {
        if g.is_edgeless() {
            self.skipped += 1;
            return;
        }
        let core = g.isolated_vertices().complement(g.n());
        let core_stars = g.induced_subgraph(core).is_ok_and(|c| c.is_disjoint_union_of_stars());
        let stars = g.is_disjoint_union_of_stars();
        let sum = rec.v + rec.deg_h;
        if sum == rec.n {
            self.equality_cases.push(rec.graph6.clone());
        }
        let outcomes = [
            rec.v <= rec.beta,
            (rec.v == rec.beta) == core_stars,
            sum <= rec.n,
            (sum == rec.n) == stars,
            2 * rec.v + rec.deg_h <= rec.n + 1,
        ];
        for (i, (check, ok)) in self.checks.iter_mut().zip(outcomes).enumerate() {
            if i == 4 && !rec.connected {
                continue;
            }
            check.checked += 1;
            if !ok {
                check.violations.push(rec.graph6.clone());
            }
        }
    }

    pub fn merge(&mut self, other: TheoremReport) {
        for (a, b) in self.checks.iter_mut().zip(other.checks) {
            a.checked += b.checked;
            a.violations.extend(b.violations);
        }
        self.skipped += other.skipped;
        self.equality_cases.extend(other.equality_cases);
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Violations of checks with [`CheckStatus::Theorem`].
    pub fn theorem_violations(&self) -> usize {
        self.checks.iter().filter(|c| c.status == CheckStatus::Theorem).map(|c| c.violations.len()).sum()
    }
}

/// Runs [`TheoremReport::observe`] over `graphs`, computing records without
/// regularity.
pub fn verify_theorems<'a, I>(graphs: I) -> TheoremReport
where
    I: IntoIterator<Item = &'a Graph>,
{
    let mut report = TheoremReport::default();
    let opts = RecordOptions::default();
    for g in graphs {
        report.observe(g, &compute_record(g, &opts));
    }
    report
}
