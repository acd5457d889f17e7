//! Attachment constructions `H_n`, the family `H(v, d)`, and a catalog of
//! named example graphs.
//!
//! `H_n` is built from parts `(G_i, A_i)`: the disjoint union of the `G_i`,
//! plus new vertices `y_1..y_n` forming a clique, with `y_i` joined to every
//! vertex of `A_i`. The `y` vertices always take the highest labels.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::invariants::{hilbert_series, v_number, HilbertSeries};
use crate::{Error, IntPolynomial, Result};

/// One building block `(G_i, A_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionPart {
    pub graph: Graph,
    pub attach_set: VertexSet,
}

impl ConstructionPart {
    pub fn new(graph: Graph, attach_set: VertexSet) -> Result<Self> {
        if let Some(v) = attach_set.difference(graph.vertices()).min() {
            return Err(Error::VertexOutOfRange { vertex: v, n: graph.n() });
        }
        Ok(ConstructionPart { graph, attach_set })
    }

    /// `G_i \ A_i`, or `None` when `A_i` is every vertex.
    pub fn remainder(&self) -> Option<Graph> {
        let rest = self.attach_set.complement(self.graph.n());
        if rest.is_empty() {
            None
        } else {
            Some(self.graph.induced_subgraph(rest).expect("nonempty subset of the part"))
        }
    }
}

/// Invariants of `H_n` predicted from its parts. A field is `None` when the
/// preconditions behind it do not hold.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PredictedInvariants {
    pub dim: Option<usize>,
    pub deg_h: Option<usize>,
    pub v: Option<usize>,
}

pub fn build_hn(parts: &[ConstructionPart]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter("construction needs at least one part".to_string()));
    }
    let total: usize = parts.iter().map(|p| p.graph.n()).sum::<usize>() + parts.len();
    if total > MAX_VERTICES {
        return Err(Error::VertexCount(total));
    }
    let mut h = Graph::empty(total)?;
    let first_y = total - parts.len();
    let mut offset = 0;
    for (i, part) in parts.iter().enumerate() {
        for (a, b) in part.graph.edges() {
            h.add_edge(offset + a, offset + b)?;
        }
        for x in part.attach_set.iter() {
            h.add_edge(first_y + i, offset + x)?;
        }
        for j in 0..i {
            h.add_edge(first_y + j, first_y + i)?;
        }
        offset += part.graph.n();
    }
    Ok(h)
}

/// Hilbert series of the remainder, with `h = 1` and pole order 0 for the
/// graph on no vertices.
fn remainder_series(part: &ConstructionPart) -> Result<HilbertSeries> {
    match part.remainder() {
        Some(g) => hilbert_series(&g),
        None => HilbertSeries::reduced(IntPolynomial::one(), 0),
    }
}

fn remainder_v(part: &ConstructionPart) -> usize {
    part.remainder().map_or(0, |g| v_number(&g))
}

/// Degree preconditions: `t_i = α(G_i) - α(G_i \ A_i)` odd and positive,
/// `deg(G_i) - deg(G_i \ A_i) = t_i - 1`, and one common sign for every
/// leading coefficient.
pub fn check_construction1(parts: &[ConstructionPart]) -> Result<bool> {
    if parts.is_empty() {
        return Ok(false);
    }
    let mut signs = Vec::with_capacity(2 * parts.len());
    for part in parts {
        let whole = hilbert_series(&part.graph)?;
        let rest = remainder_series(part)?;
        let Some(t) = whole.pole_order().checked_sub(rest.pole_order()) else {
            return Ok(false);
        };
        if t % 2 == 0 || whole.degree() != rest.degree() + t - 1 {
            return Ok(false);
        }
        signs.push(whole.leading_coefficient().signum());
        signs.push(rest.leading_coefficient().signum());
    }
    Ok(signs.iter().all(|&s| s == signs[0]))
}

/// `dim = Σ α(G_i)` and `deg = 1 + Σ deg(G_i)`, when the degree
/// preconditions hold.
pub fn predict_deg(parts: &[ConstructionPart]) -> Result<PredictedInvariants> {
    if !check_construction1(parts)? {
        return Ok(PredictedInvariants::default());
    }
    let mut dim = 0;
    let mut deg = 1;
    for part in parts {
        let s = hilbert_series(&part.graph)?;
        dim += s.pole_order();
        deg += s.degree();
    }
    Ok(PredictedInvariants { dim: Some(dim), deg_h: Some(deg), v: None })
}

/// `v(G_i) >= 1 + v(G_i \ A_i)` for every part, each `G_i` having an edge.
pub fn check_construction2(parts: &[ConstructionPart]) -> bool {
    !parts.is_empty() && parts.iter().all(|p| !p.graph.is_edgeless() && v_number(&p.graph) > remainder_v(p))
}

/// `min_i (1 + v(G_i \ A_i) + Σ_{j != i} v(G_j))`, for at least two parts.
pub fn predict_v(parts: &[ConstructionPart]) -> Result<PredictedInvariants> {
    if parts.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "v-number prediction needs at least two parts, got {}",
            parts.len()
        )));
    }
    if !check_construction2(parts) {
        return Ok(PredictedInvariants::default());
    }
    let whole: Vec<usize> = parts.iter().map(|p| v_number(&p.graph)).collect();
    let sum: usize = whole.iter().sum();
    let v = parts.iter().zip(&whole).map(|(p, &vi)| 1 + remainder_v(p) + sum - vi).min();
    Ok(PredictedInvariants { v, ..PredictedInvariants::default() })
}

/// `H(v, d)`: triangles `x_i y_i w_i`, a star from `x_1` to the other `x_i`,
/// and `d - v` leaves `z_j` on `w_1`.
///
/// Labels: `x_i = i - 1`, `y_i = v + i - 1`, `w_i = 2v + i - 1`,
/// `z_j = 3v + j - 1`.
pub fn build_hvd(v: usize, d: usize) -> Result<Graph> {
    if v == 0 || v > d {
        return Err(Error::InvalidParameter(format!("H(v,d) needs 1 <= v <= d, got v={v}, d={d}")));
    }
    let n = 2 * v + d;
    if n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let mut g = Graph::empty(n)?;
    for i in 0..v {
        let (x, y, w) = (i, v + i, 2 * v + i);
        g.add_edge(x, y)?;
        g.add_edge(y, w)?;
        g.add_edge(w, x)?;
        if i > 0 {
            g.add_edge(0, x)?;
        }
    }
    for j in 0..d - v {
        g.add_edge(2 * v, 3 * v + j)?;
    }
    Ok(g)
}

/// Builds a graph from 1-based vertex pairs.
fn one_based(n: usize, edges: &[(usize, usize)]) -> Graph {
    let edges: Vec<_> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    Graph::from_edges(n, &edges).expect("catalog edge lists are valid")
}

/// 11 vertices, 25 edges, `v = 3` and `deg h = 2`; regularity 2 over the
/// rationals and 3 in characteristic two.
pub fn fig1() -> Graph {
    one_based(
        11,
        &[
            (1, 2),
            (1, 6),
            (1, 7),
            (1, 5),
            (2, 8),
            (2, 10),
            (2, 9),
            (2, 5),
            (3, 5),
            (3, 4),
            (3, 10),
            (3, 11),
            (4, 5),
            (4, 6),
            (4, 8),
            (4, 9),
            (6, 7),
            (6, 8),
            (6, 10),
            (7, 9),
            (7, 11),
            (8, 9),
            (8, 10),
            (9, 11),
            (10, 11),
        ],
    )
}

/// The second 11-vertex graph with `v = 3` and `deg h = 2`.
pub fn fig2() -> Graph {
    one_based(
        11,
        &[
            (1, 4),
            (1, 5),
            (1, 8),
            (1, 9),
            (2, 5),
            (2, 6),
            (2, 8),
            (2, 10),
            (2, 11),
            (3, 6),
            (3, 9),
            (3, 7),
            (3, 10),
            (4, 7),
            (4, 8),
            (4, 11),
            (5, 9),
            (5, 10),
            (5, 11),
            (6, 8),
            (6, 9),
            (6, 11),
            (7, 10),
            (7, 11),
            (9, 11),
        ],
    )
}

/// Triangle `x1 x2 x3` with a second triangle `x3 x4 x5` hanging off `x3`.
const BOWTIE: [(usize, usize); 6] = [(1, 2), (1, 3), (2, 3), (4, 5), (3, 4), (3, 5)];

fn with_edges(n: usize, base: &[(usize, usize)], extra: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut edges = base.to_vec();
    edges.extend(extra);
    one_based(n, &edges)
}

/// Chordal, `ν = 3`, `(v, d, r) = (1, 1, 3)`.
pub fn fig5() -> Graph {
    let apex = [8, 9, 10];
    let joins = apex.iter().flat_map(|&a| (1..=7).map(move |x| (x, a)));
    with_edges(10, &BOWTIE, [(6, 7), (8, 9), (8, 10), (9, 10)].into_iter().chain(joins))
}

/// Chordal, `(v, d, r) = (1, 2, 3)`.
pub fn fig7() -> Graph {
    with_edges(8, &BOWTIE, core::iter::once((6, 7)).chain((1..=7).map(|x| (x, 8))))
}

/// Chordal, `ν = 2`, `(v, d, r) = (1, 2, 2)`.
pub fn fig8() -> Graph {
    with_edges(6, &BOWTIE, (1..=5).map(|x| (x, 6)))
}

/// Bowtie on `z_1..z_5` (labels 0..4) with two apexes `y_4 = 5`, `y_5 = 6`.
pub fn fig10() -> Graph {
    with_edges(7, &BOWTIE, (1..=5).flat_map(|z| [(z, 6), (z, 7)]))
}

/// `fig1` plus `extra` new vertices, each joined to `x_1..x_4`.
fn fig1_with_apexes(extra: usize) -> Graph {
    let base = fig1();
    let n = base.n() + extra;
    let mut g = Graph::empty(n).expect("small");
    for (a, b) in base.edges() {
        g.add_edge(a, b).expect("in range");
    }
    for y in base.n()..n {
        for x in 0..4 {
            g.add_edge(x, y).expect("in range");
        }
    }
    g
}

/// Parts for `H_n` with `A_i = {x_1..x_5}` in each copy of `fig1`.
pub fn thm35_parts(n: usize) -> Vec<ConstructionPart> {
    let a = VertexSet::from_vertices(0..5);
    (0..n).map(|_| ConstructionPart { graph: fig1(), attach_set: a }).collect()
}

/// Parts for `H_n` with `A_i` every vertex of each copy of `fig1`.
pub fn ex510_parts(n: usize) -> Vec<ConstructionPart> {
    (0..n).map(|_| ConstructionPart { graph: fig1(), attach_set: VertexSet::full(11) }).collect()
}

/// `H_n` from [`thm35_parts`]: `v = 3n`, `deg h = 2n + 1`.
pub fn hn_thm35(n: usize) -> Result<Graph> {
    build_hn(&thm35_parts(n))
}

/// `H_n` from [`ex510_parts`]: `v = 3n - 2`, `deg h = 2n + 1`.
pub fn hn_ex510(n: usize) -> Result<Graph> {
    build_hn(&ex510_parts(n))
}

/// `H_3` from [`hn_thm35`] (labels 0..35, `y_1..y_3 = 33..35`) joined with
/// `fig10` (labels 36..42), plus a clique on `y_1, y_2, y_3, y_4, y_5`.
pub fn ex5_11() -> Graph {
    let h3 = hn_thm35(3).expect("36 vertices");
    let mut g = h3.disjoint_union(&fig10()).expect("43 vertices");
    let ys = [33, 34, 35, 36 + 5, 36 + 6];
    for (i, &a) in ys.iter().enumerate() {
        for &b in &ys[i + 1..] {
            if !g.has_edge(a, b) {
                g.add_edge(a, b).expect("in range");
            }
        }
    }
    g
}

/// Fixed catalog names accepted by [`paper_graph`].
pub const CATALOG: &[&str] = &[
    "fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "ex5_1", "ex5_2", "ex5_3",
    "ex5_4", "ex5_5", "ex5_6", "ex5_7", "ex5_8", "ex5_9", "ex5_11",
];

/// Looks up a fixed catalog graph by name.
pub fn paper_graph(name: &str) -> Result<Graph> {
    let g = match name {
        "fig1" | "ex5_7" => fig1(),
        "fig2" => fig2(),
        "fig3" | "ex5_2" => Graph::star(3)?,
        "fig4" => build_hvd(4, 7)?,
        "fig5" | "ex5_3" => fig5(),
        "fig6" | "ex5_4" => Graph::path(5)?,
        "fig7" | "ex5_5" => fig7(),
        "fig8" | "ex5_6" => fig8(),
        "fig9" | "ex5_1" => Graph::complete(2)?,
        "fig10" => fig10(),
        "ex5_8" => fig1_with_apexes(1),
        "ex5_9" => fig1_with_apexes(2),
        "ex5_11" => ex5_11(),
        _ => return Err(Error::UnknownGraph(name.to_string())),
    };
    Ok(g)
}
