//! Castelnuovo–Mumford regularity of `R/I(G)`.
//!
//! By Hochster's formula `β_{i,j}(R/I(G)) = Σ_{|W|=j} dim H̃_{j-i-1}(Ind(G_W))`,
//! so `reg(R/I(G))` is the largest `k + 1` such that `H̃_k(Ind(G_W); K) != 0`
//! for some vertex subset `W`. The scan visits all `2^n` subsets and is
//! therefore capped at a configurable vertex count.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};
use crate::homology::SimplicialComplex;
use crate::{Error, Result};

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    /// `Z/p`, rejecting composite `p`.
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("QQ"),
            FieldSpec::PrimeField(p) => write!(f, "ZZ/{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Budgets for the homology path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegularityOptions {
    /// Largest vertex count accepted by the `2^n` subset scan.
    pub max_vertices: usize,
    /// Largest independence complex that will be materialised.
    pub max_faces: usize,
}

impl Default for RegularityOptions {
    fn default() -> Self {
        RegularityOptions { max_vertices: 13, max_faces: 1 << 20 }
    }
}

/// `Ind(G)`: faces are the independent sets.
pub fn independence_complex(g: &Graph) -> Result<SimplicialComplex> {
    independence_complex_on(g, g.vertices(), RegularityOptions::default().max_faces)
}

/// Independence complex of the induced subgraph `G_W`, on the original labels.
pub fn independence_complex_on(g: &Graph, w: VertexSet, max_faces: usize) -> Result<SimplicialComplex> {
    let mut faces = Vec::new();
    collect_independent(g, w, VertexSet::EMPTY, &mut faces, max_faces)?;
    Ok(SimplicialComplex::from_closed_faces(faces))
}

fn collect_independent(
    g: &Graph,
    candidates: VertexSet,
    current: VertexSet,
    out: &mut Vec<VertexSet>,
    max_faces: usize,
) -> Result<()> {
    if out.len() >= max_faces {
        return Err(Error::ResourceLimit {
            what: "independence complex faces",
            limit: max_faces,
            requested: out.len() + 1,
        });
    }
    out.push(current);
    let mut rest = candidates;
    while let Some(v) = rest.min() {
        rest = rest.without(v);
        collect_independent(g, rest - g.neighbors(v), current.with(v), out, max_faces)?;
    }
    Ok(())
}

/// `dim_K H̃_j(C; K)` for `j = -1 ..= dim C`.
pub fn reduced_betti(c: &SimplicialComplex, field: FieldSpec) -> Vec<usize> {
    c.reduced_betti(field)
}

/// `reg(R/I(G))` over `field` with default budgets.
pub fn regularity(g: &Graph, field: FieldSpec) -> Result<usize> {
    regularity_with(g, field, RegularityOptions::default())
}

pub fn regularity_with(g: &Graph, field: FieldSpec, opts: RegularityOptions) -> Result<usize> {
    regularity_inspect(g, field, opts, |_| {})
}

/// [`regularity_with`], handing every independence complex it builds to
/// `inspect`.
pub fn regularity_inspect(
    g: &Graph,
    field: FieldSpec,
    opts: RegularityOptions,
    mut inspect: impl FnMut(&SimplicialComplex),
) -> Result<usize> {
    if let FieldSpec::PrimeField(p) = field {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    if g.n() > opts.max_vertices {
        return Err(Error::ResourceLimit {
            what: "regularity subset scan vertices",
            limit: opts.max_vertices,
            requested: g.n(),
        });
    }
    let n = g.n();
    // One edge already gives H̃_0 of two points.
    let mut best = 1;
    let mut subsets: Vec<u64> = (1u64..1 << n).collect();
    subsets.sort_by_key(|&m| (core::cmp::Reverse(m.count_ones()), m));
    for mask in subsets {
        let w = VertexSet(mask);
        // An isolated vertex of G_W makes Ind(G_W) a cone.
        if w.iter().any(|v| (g.neighbors(v) & w).is_empty()) {
            continue;
        }
        // A nonzero H̃_k needs a face with k + 1 vertices.
        if g.max_independent_in(w) <= best {
            continue;
        }
        let complex = independence_complex_on(g, w, opts.max_faces)?;
        inspect(&complex);
        let top = complex.dimension();
        let mut rank_above = complex.boundary(top + 1).rank(field);
        for k in (best as isize..=top).rev() {
            let rank_here = complex.boundary(k).rank(field);
            let betti = complex.faces(k).len() - rank_here - rank_above;
            if betti != 0 {
                best = (k + 1) as usize;
                break;
            }
            rank_above = rank_here;
        }
    }
    Ok(best)
}

/// Regularity of a chordal graph: its induced matching number, for any field.
pub fn regularity_chordal(g: &Graph) -> Result<usize> {
    if !g.is_chordal() {
        return Err(Error::NotChordal);
    }
    Ok(g.induced_matching_number())
}
