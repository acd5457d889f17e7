//! Bitset simple graphs on at most 64 vertices and the purely graph-theoretic
//! quantities the algebraic invariants are built from.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{BitAnd, BitOr, Sub};

use crate::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices packed into one word; bit `i` is vertex `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        vertices.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement inside `{0, ..., n-1}`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        VertexSet::full(n).difference(self)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Labeled simple graph on vertices `0..n`, stored as adjacency bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph {{ n: {}, edges: {:?} }}", self.n, self.edges())
    }
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency masks, checking symmetry and looplessness.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let full = VertexSet::full(n);
        for (i, &row) in adj.iter().enumerate() {
            if !row.is_subset(full) {
                return Err(Error::VertexOutOfRange { vertex: row.max().unwrap_or(0), n });
            }
            if row.contains(i) {
                return Err(Error::Loop(i));
            }
            for j in row {
                if !adj[j].contains(i) {
                    return Err(Error::InvalidParameter(alloc::format!("adjacency not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
        Ok(())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            g.adj[i] = VertexSet::full(n).without(i);
        }
        Ok(g)
    }

    /// `K_{1,k}` with center 0 and leaves `1..=k`.
    pub fn star(k: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edges(k + 1, &edges)
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(alloc::format!("cycle needs 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|a| a.is_empty())
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    fn check_subset(&self, w: VertexSet) -> Result<()> {
        if !w.is_subset(self.vertices()) {
            let vertex = w.difference(self.vertices()).min().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        Ok(())
    }

    /// `G_W`, relabeled to `0..|W|` in increasing original index.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph> {
        self.check_subset(w)?;
        if w.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let old: Vec<usize> = w.iter().collect();
        let mut new_index = [0usize; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let adj = old.iter().map(|&v| (self.adj[v] & w).iter().map(|u| new_index[u]).collect()).collect();
        Ok(Graph { n: old.len(), adj })
    }

    /// `G \ A`, the subgraph induced on the complement of `a`.
    pub fn delete(&self, a: VertexSet) -> Result<Graph> {
        self.check_subset(a)?;
        self.induced_subgraph(a.complement(self.n))
    }

    /// `N_G(A)`: every vertex adjacent to some vertex of `a`.
    pub fn neighborhood(&self, a: VertexSet) -> VertexSet {
        a.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    pub fn is_independent(&self, a: VertexSet) -> bool {
        a.iter().all(|v| (self.adj[v] & a).is_empty())
    }

    pub fn is_vertex_cover(&self, c: VertexSet) -> bool {
        // Every vertex outside `c` must have all its neighbours inside `c`.
        c.complement(self.n).iter().all(|v| self.adj[v].is_subset(c))
    }

    /// A vertex cover from which no single vertex can be dropped.
    pub fn is_minimal_vertex_cover(&self, c: VertexSet) -> bool {
        self.is_vertex_cover(c) && c.iter().all(|v| !self.is_vertex_cover(c.without(v)))
    }

    /// Number of neighbours of `v` inside `within`.
    #[inline]
    fn degree_in(&self, v: usize, within: VertexSet) -> usize {
        (self.adj[v] & within).len()
    }

    /// Vertex of maximum degree inside `p`, lowest index on ties.
    fn max_degree_vertex(&self, p: VertexSet) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for v in p {
            let d = self.degree_in(v, p);
            if best.is_none_or(|(_, bd)| d > bd) {
                best = Some((v, d));
            }
        }
        best
    }

    /// `α(G)`, by branch and bound on a maximum-degree pivot.
    pub fn independence_number(&self) -> usize {
        self.max_independent_in(self.vertices())
    }

    /// Largest independent subset of `p`.
    pub fn max_independent_in(&self, p: VertexSet) -> usize {
        let mut best = 0;
        self.alpha_rec(p, 0, &mut best);
        best
    }

    fn alpha_rec(&self, p: VertexSet, taken: usize, best: &mut usize) {
        if taken + p.len() <= *best {
            return;
        }
        match self.max_degree_vertex(p) {
            None => *best = (*best).max(taken),
            Some((_, 0)) => *best = (*best).max(taken + p.len()),
            Some((v, _)) => {
                self.alpha_rec(p - self.closed_neighbors(v), taken + 1, best);
                self.alpha_rec(p.without(v), taken, best);
            }
        }
    }

    /// `β(G) = n - α(G)`.
    pub fn vertex_cover_number(&self) -> usize {
        self.n - self.independence_number()
    }

    /// `ν(G)`: size of a largest induced matching.
    pub fn induced_matching_number(&self) -> usize {
        let mut best = 0;
        self.induced_matching_rec(self.vertices(), 0, &mut best);
        best
    }

    // `p` holds the vertices that may still become matching endpoints.
    fn induced_matching_rec(&self, p: VertexSet, taken: usize, best: &mut usize) {
        let live: VertexSet = p.iter().filter(|&v| !(self.adj[v] & p).is_empty()).collect();
        if taken + live.len() / 2 <= *best {
            return;
        }
        // Branch on the live vertex with fewest live neighbours.
        let pivot = live.iter().min_by_key(|&v| (self.degree_in(v, live), v));
        let Some(u) = pivot else {
            *best = (*best).max(taken);
            return;
        };
        for w in self.adj[u] & live {
            let rest = live - self.closed_neighbors(u) - self.closed_neighbors(w);
            self.induced_matching_rec(rest, taken + 1, best);
        }
        self.induced_matching_rec(live.without(u), taken, best);
    }

    /// Lexicographic breadth-first order, ties broken by lowest vertex index.
    pub fn lex_bfs_order(&self) -> Vec<usize> {
        let n = self.n;
        let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut visited = VertexSet::EMPTY;
        let mut order = Vec::with_capacity(n);
        for step in 0..n {
            let mut pick: Option<usize> = None;
            for v in visited.complement(n) {
                if pick.is_none_or(|p| labels[v] > labels[p]) {
                    pick = Some(v);
                }
            }
            let v = pick.expect("unvisited vertex");
            visited = visited.with(v);
            order.push(v);
            for u in self.adj[v] - visited {
                labels[u].push(n - step);
            }
        }
        order
    }

    /// True iff the reverse of the Lex-BFS order is a perfect elimination ordering.
    pub fn is_chordal(&self) -> bool {
        let order = self.lex_bfs_order();
        let mut earlier = VertexSet::EMPTY;
        for &v in &order {
            let back = self.adj[v] & earlier;
            if !back.iter().all(|u| back.without(u).is_subset(self.adj[u])) {
                return false;
            }
            earlier = earlier.with(v);
        }
        true
    }

    /// Connected component containing `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = self.vertices();
        while let Some(v) = rest.min() {
            let c = self.component_of(v);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    /// Every component is a star `K_{1,k}` with `k >= 1`; isolated vertices
    /// make this false.
    pub fn is_disjoint_union_of_stars(&self) -> bool {
        self.components().into_iter().all(|c| self.is_star_component(c))
    }

    fn is_star_component(&self, c: VertexSet) -> bool {
        if c.len() < 2 {
            return false;
        }
        let size = c.len();
        // A tree with a vertex adjacent to everything else.
        let edges: usize = c.iter().map(|v| self.adj[v].len()).sum::<usize>() / 2;
        edges == size - 1 && c.iter().any(|v| self.adj[v].len() == size - 1)
    }

    /// Vertices without neighbours.
    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// `g1 ⊔ g2`, with the vertices of `g2` shifted above those of `g1`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| VertexSet(a.0 << shift)));
        Ok(Graph { n, adj })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(alloc::format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen = seen.with(p);
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Ok(Graph { n: self.n, adj })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::cycle(4).unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        (0u64..1 << g.n()).map(VertexSet).filter(|&a| g.is_independent(a)).map(|a| a.len()).max().unwrap()
    }

    fn brute_cover(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .map(VertexSet)
            .filter(|&c| g.edges().iter().all(|&(u, v)| c.contains(u) || c.contains(v)))
            .map(|c| c.len())
            .min()
            .unwrap()
    }

    fn has_long_induced_cycle(g: &Graph) -> bool {
        // An induced subgraph that is connected and 2-regular on >= 4 vertices.
        (0u64..1 << g.n()).map(VertexSet).filter(|w| w.len() >= 4).any(|w| {
            let h = g.induced_subgraph(w).unwrap();
            h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
        })
    }

    fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    #[test]
    fn vertex_set_algebra() {
        let a = VertexSet::from_vertices([0, 2, 5]);
        let b = VertexSet::from_vertices([2, 3]);
        assert_eq!((a | b).iter().collect::<Vec<_>>(), [0, 2, 3, 5]);
        assert_eq!((a & b).iter().collect::<Vec<_>>(), [2]);
        assert_eq!((a - b).iter().collect::<Vec<_>>(), [0, 5]);
        assert_eq!(a.complement(6).iter().collect::<Vec<_>>(), [1, 3, 4]);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(a.max(), Some(5));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::empty(0), Err(Error::VertexCount(0)));
        assert_eq!(Graph::empty(65), Err(Error::VertexCount(65)));
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::Loop(0)));
        assert!(matches!(Graph::from_edges(2, &[(0, 2)]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn induced_subgraph_examples() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(c4().induced_subgraph(VertexSet::from_vertices([0, 1])).unwrap(), k2);
        assert_eq!(c4().induced_subgraph(c4().vertices()).unwrap(), c4());
        assert_eq!(c4().induced_subgraph(VertexSet::EMPTY), Err(Error::EmptyVertexSet));
        assert_eq!(c4().delete(c4().vertices()), Err(Error::EmptyVertexSet));
        let p = c4().delete(VertexSet::singleton(0)).unwrap();
        assert_eq!(p, Graph::path(3).unwrap());
    }

    #[test]
    fn neighborhoods_and_covers() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.neighborhood(VertexSet::singleton(0)), VertexSet::singleton(1));
        assert_eq!(Graph::star(3).unwrap().neighborhood(VertexSet::singleton(0)), VertexSet(0b1110));
        assert_eq!(c4().neighborhood(VertexSet::singleton(0)), VertexSet::from_vertices([1, 3]));
        assert!(!k2.is_independent(VertexSet(0b11)));
        assert!(c4().is_independent(VertexSet::from_vertices([0, 2])));
        assert!(c4().is_independent(VertexSet::EMPTY));
        assert!(k2.is_vertex_cover(VertexSet::singleton(0)));
        assert!(!k2.is_vertex_cover(VertexSet::EMPTY));
        let c = VertexSet::from_vertices([0, 2]);
        assert!(c4().is_vertex_cover(c) && c4().is_minimal_vertex_cover(c));
        assert!(!c4().is_minimal_vertex_cover(VertexSet::from_vertices([0, 1, 2])));
    }

    #[test]
    fn independence_numbers() {
        for n in 1..8 {
            assert_eq!(Graph::complete(n).unwrap().independence_number(), 1);
        }
        assert_eq!(Graph::cycle(5).unwrap().independence_number(), 2);
        assert_eq!(Graph::empty(9).unwrap().independence_number(), 9);
        assert_eq!(Graph::star(5).unwrap().vertex_cover_number(), 1);
    }

    #[test]
    fn alpha_plus_beta_is_n_against_brute_cover() {
        // Fixed pseudo-random graphs up to 12 vertices.
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for n in 1..=12 {
            for _ in 0..6 {
                let mut g = Graph::empty(n).unwrap();
                for j in 1..n {
                    for i in 0..j {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        if state.is_multiple_of(3) {
                            g.add_edge(i, j).unwrap();
                        }
                    }
                }
                assert_eq!(g.independence_number(), brute_alpha(&g));
                assert_eq!(g.independence_number() + brute_cover(&g), n);
            }
        }
    }

    #[test]
    fn independent_neighbourhood_cover_is_minimal() {
        for n in 1..=6 {
            for g in labeled_graphs(n) {
                for a in (0u64..1 << n).map(VertexSet) {
                    if g.is_independent(a) && g.is_vertex_cover(g.neighborhood(a)) {
                        assert!(g.is_minimal_vertex_cover(g.neighborhood(a)), "{g:?} {a:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn induced_matchings() {
        assert_eq!(Graph::complete(2).unwrap().induced_matching_number(), 1);
        assert_eq!(Graph::path(5).unwrap().induced_matching_number(), 2);
        assert_eq!(Graph::cycle(6).unwrap().induced_matching_number(), 2);
        assert_eq!(Graph::complete(6).unwrap().induced_matching_number(), 1);
        assert_eq!(Graph::empty(3).unwrap().induced_matching_number(), 0);
    }

    #[test]
    fn chordality() {
        assert!(!c4().is_chordal());
        assert!(Graph::star(3).unwrap().is_chordal());
        assert!(Graph::complete(5).unwrap().is_chordal());
        assert!(!Graph::cycle(5).unwrap().is_chordal());
        assert!(Graph::path(6).unwrap().is_chordal());
    }

    #[test]
    fn chordal_matches_induced_cycle_search() {
        for n in 1..=6 {
            for g in labeled_graphs(n) {
                assert_eq!(g.is_chordal(), !has_long_induced_cycle(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn connectivity_and_stars() {
        let k2 = Graph::complete(2).unwrap();
        assert!(k2.is_connected());
        let two = k2.disjoint_union(&k2).unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.n(), 4);
        assert_eq!(two.edge_count(), 2);
        assert!(Graph::star(3).unwrap().is_disjoint_union_of_stars());
        assert!(!c4().is_disjoint_union_of_stars());
        assert!(k2.disjoint_union(&Graph::star(2).unwrap()).unwrap().is_disjoint_union_of_stars());
        assert!(!k2.disjoint_union(&Graph::empty(1).unwrap()).unwrap().is_disjoint_union_of_stars());
        assert!(!Graph::complete(3).unwrap().is_disjoint_union_of_stars());
    }

    #[test]
    fn disjoint_union_overflow() {
        let big = Graph::empty(40).unwrap();
        assert_eq!(big.disjoint_union(&big), Err(Error::VertexCount(80)));
    }
}
