//! f-vector, reduced Hilbert series, h-polynomial and v-number of `R/I(G)`.
//!
//! The Hilbert series of the Stanley–Reisner ring of the independence
//! complex is `sum_i f_{i-1} t^i / (1-t)^i`, so over the common denominator
//! `(1-t)^α` the numerator is `sum_i f_{i-1} t^i (1-t)^(α-i)`. Its value at
//! `t = 1` is the number of maximum independent sets, which is never zero, so
//! that fraction is already reduced.
//!
//! Edgeless graphs follow the conventions `v = 0`, `h = 1` and pole order `n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Binomial coefficients `C(n, k)` for `n <= 64`.
pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `counts[i]` is the number of independent sets of cardinality `i`
/// (`f_{i-1}` in simplicial notation), for `i = 0..=α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<u128>,
}

impl FVector {
    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    /// `α(G)`.
    pub fn independence_number(&self) -> usize {
        self.counts.len() - 1
    }

    /// All independent sets, the empty one included.
    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }
}

/// Counts independent sets of every size.
pub fn f_vector(g: &Graph) -> FVector {
    let mut counts = vec![0u128; g.n() + 1];
    count_independent(g, g.vertices(), 0, &mut counts);
    while counts.last() == Some(&0) {
        counts.pop();
    }
    FVector { counts }
}

fn count_independent(g: &Graph, p: VertexSet, taken: usize, counts: &mut [u128]) {
    // Pivot on the highest-degree vertex; an edgeless remainder is counted in
    // closed form.
    let mut pivot = None;
    let mut best = 0;
    for v in p {
        let d = (g.neighbors(v) & p).len();
        if d > best {
            best = d;
            pivot = Some(v);
        }
    }
    match pivot {
        None => {
            let free = p.len();
            for i in 0..=free {
                counts[taken + i] += binomial(free, i);
            }
        }
        Some(v) => {
            count_independent(g, p.without(v), taken, counts);
            count_independent(g, p - g.closed_neighbors(v), taken + 1, counts);
        }
    }
}

/// `H(t) = numerator / (1 - t)^pole_order` with `numerator(1) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: IntPolynomial,
    pole_order: usize,
}

impl HilbertSeries {
    /// Cancels common factors of `(1 - t)`. The zero series is rejected.
    pub fn reduced(mut numerator: IntPolynomial, mut pole_order: usize) -> Result<Self> {
        if numerator.is_zero() {
            return Err(Error::InvalidParameter("zero Hilbert series numerator".into()));
        }
        while pole_order > 0 && numerator.eval_at_one()? == 0 {
            numerator = numerator.div_one_minus_t().ok_or(Error::Overflow)?;
            pole_order -= 1;
        }
        Ok(HilbertSeries { numerator, pole_order })
    }

    /// The h-polynomial.
    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    /// Krull dimension of `R/I`.
    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    pub fn degree(&self) -> usize {
        self.numerator.degree().expect("numerator is nonzero")
    }

    pub fn leading_coefficient(&self) -> i128 {
        self.numerator.leading_coefficient()
    }

    /// `H(t) * H'(t)`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        HilbertSeries::reduced(self.numerator.checked_mul(&other.numerator)?, self.pole_order + other.pole_order)
    }

    /// Taylor coefficients of `t^0 .. t^upto`.
    pub fn coefficients(&self, upto: usize) -> Result<Vec<i128>> {
        let k = self.pole_order;
        (0..=upto)
            .map(|d| {
                self.numerator.coeffs().iter().enumerate().take(d + 1).try_fold(0i128, |acc, (i, &h)| {
                    // [t^m] (1-t)^{-k} = C(m + k - 1, k - 1)
                    let m = d - i;
                    let c = if k == 0 { (m == 0) as i128 } else { binomial_i128(m + k - 1, k - 1)? };
                    h.checked_mul(c).and_then(|x| acc.checked_add(x)).ok_or(Error::Overflow)
                })
            })
            .collect()
    }
}

fn binomial_i128(n: usize, k: usize) -> Result<i128> {
    let k = k.min(n.saturating_sub(k));
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as i128).ok_or(Error::Overflow)? / (i as i128 + 1);
    }
    Ok(acc)
}

/// `(c0 + c1*t + ...)/(1-t)^k`.
impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/(1-t)^{}", self.numerator, self.pole_order)
    }
}

/// Reduced Hilbert series of `R/I(G)`.
pub fn hilbert_series(g: &Graph) -> Result<HilbertSeries> {
    hilbert_series_from_f_vector(&f_vector(g))
}

pub fn hilbert_series_from_f_vector(f: &FVector) -> Result<HilbertSeries> {
    let alpha = f.independence_number();
    let mut numerator = IntPolynomial::zero();
    for (i, &count) in f.counts().iter().enumerate() {
        let count = i128::try_from(count).map_err(|_| Error::Overflow)?;
        let term = IntPolynomial::monomial(count, i).mul_one_minus_t_pow(alpha - i)?;
        numerator = numerator.checked_add(&term)?;
    }
    let top = *f.counts().last().expect("f-vector is never empty");
    debug_assert_eq!(numerator.eval_at_one()?, top as i128);
    let series = HilbertSeries::reduced(numerator, alpha)?;
    debug_assert_eq!(series.pole_order(), alpha, "reduction fired on an edge ideal");
    Ok(series)
}

/// Degree of the h-polynomial.
pub fn deg_h(g: &Graph) -> Result<usize> {
    Ok(hilbert_series(g)?.degree())
}

/// Leading coefficient of the h-polynomial.
pub fn leading_coefficient(g: &Graph) -> Result<i128> {
    Ok(hilbert_series(g)?.leading_coefficient())
}

/// First `upto + 1` coefficients of `H_{R/I(G)}`.
pub fn series_coefficients(s: &HilbertSeries, upto: usize) -> Result<Vec<i128>> {
    s.coefficients(upto)
}

/// `A` belongs to the witness family iff it is independent and `N(A)` is a
/// vertex cover, i.e. the vertices outside `N(A)` are independent.
#[inline]
pub fn is_v_witness(g: &Graph, a: VertexSet) -> bool {
    g.is_independent(a) && g.is_independent(g.neighborhood(a).complement(g.n()))
}

/// v-number of `I(G)`: the least `|A|` over independent `A` whose
/// neighbourhood is a (necessarily minimal) vertex cover. Zero for an
/// edgeless graph.
pub fn v_number(g: &Graph) -> usize {
    match minimum_witness(g) {
        Some(a) => a.len(),
        None => 0,
    }
}

/// A minimum witness for the v-number, lexicographically least as a sorted
/// vertex list.
pub fn v_witness(g: &Graph) -> Result<VertexSet> {
    minimum_witness(g).ok_or(Error::Edgeless)
}

fn minimum_witness(g: &Graph) -> Option<VertexSet> {
    if g.is_edgeless() {
        return None;
    }
    // Isolated vertices never help: they have no neighbours.
    let useful = g.vertices() - g.isolated_vertices();
    (1..=g.n()).find_map(|k| {
        let mut search = WitnessSearch { g, k };
        search.descend(VertexSet::EMPTY, VertexSet::EMPTY, useful)
    })
}

struct WitnessSearch<'a> {
    g: &'a Graph,
    k: usize,
}

impl WitnessSearch<'_> {
    /// `candidates` are the vertices above the last chosen one that are
    /// neither chosen nor adjacent to a chosen vertex.
    fn descend(&mut self, chosen: VertexSet, covered: VertexSet, candidates: VertexSet) -> Option<VertexSet> {
        let g = self.g;
        let n = g.n();
        let remaining = self.k - chosen.len();
        let open = covered.complement(n);
        if remaining == 0 {
            return g.is_independent(open).then_some(chosen);
        }
        if candidates.len() < remaining {
            return None;
        }
        // Edges that no future choice can cover.
        let reachable = covered | g.neighborhood(candidates);
        if !g.is_independent(reachable.complement(n)) {
            return None;
        }
        for c in candidates {
            let above = VertexSet(candidates.bits() & u64::MAX.checked_shl(c as u32 + 1).unwrap_or(0));
            let next = above - g.neighbors(c);
            if let Some(found) = self.descend(chosen.with(c), covered | g.neighbors(c), next) {
                return Some(found);
            }
        }
        None
    }
}
