//! Simplicial complexes on at most 64 vertices, their boundary matrices and
//! reduced Betti numbers over `Q` or `Z/p`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::VertexSet;
use crate::regularity::FieldSpec;

/// Faces grouped by size: `faces_by_size[k]` holds the faces with `k`
/// vertices (dimension `k - 1`), sorted by their bit pattern. Index 0 holds
/// the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    faces_by_size: Vec<Vec<VertexSet>>,
}

impl SimplicialComplex {
    /// Builds the complex from a list of faces that is already closed under
    /// taking subsets. Duplicates are removed.
    pub fn from_closed_faces(faces: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut faces_by_size: Vec<Vec<VertexSet>> = vec![Vec::new()];
        for f in faces {
            let k = f.len();
            if faces_by_size.len() <= k {
                faces_by_size.resize_with(k + 1, Vec::new);
            }
            faces_by_size[k].push(f);
        }
        if faces_by_size[0].is_empty() {
            faces_by_size[0].push(VertexSet::EMPTY);
        }
        for level in &mut faces_by_size {
            level.sort_unstable();
            level.dedup();
        }
        while faces_by_size.len() > 1 && faces_by_size.last().is_some_and(|l| l.is_empty()) {
            faces_by_size.pop();
        }
        SimplicialComplex { faces_by_size }
    }

    /// Every subset of `vertices`.
    pub fn simplex(vertices: VertexSet) -> Self {
        let elems: Vec<usize> = vertices.iter().collect();
        let faces = (0u64..1 << elems.len())
            .map(|mask| elems.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect());
        SimplicialComplex::from_closed_faces(faces)
    }

    /// Largest face dimension; `-1` for the complex `{∅}`.
    pub fn dimension(&self) -> isize {
        self.faces_by_size.len() as isize - 2
    }

    /// Faces of dimension `d` (`d >= -1`).
    pub fn faces(&self, d: isize) -> &[VertexSet] {
        let k = d + 1;
        if k < 0 {
            return &[];
        }
        self.faces_by_size.get(k as usize).map_or(&[], |v| v.as_slice())
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_size.iter().map(Vec::len).sum()
    }

    /// `f_{d}` for `d = -1 ..= dim`.
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces_by_size.iter().map(Vec::len).collect()
    }

    pub fn is_closed(&self) -> bool {
        self.faces_by_size
            .iter()
            .skip(1)
            .flatten()
            .all(|&f| f.iter().all(|v| self.faces(f.len() as isize - 2).binary_search(&f.without(v)).is_ok()))
    }

    /// `∂_d` from `d`-faces to `(d-1)`-faces.
    pub fn boundary(&self, d: isize) -> BoundaryMatrix {
        let rows = self.faces(d - 1);
        let cols = self.faces(d);
        let columns = if d < 0 {
            vec![Vec::new(); cols.len()]
        } else {
            cols.iter()
                .map(|&face| {
                    face.iter()
                        .enumerate()
                        .map(|(pos, v)| {
                            let row = rows.binary_search(&face.without(v)).expect("complex is closed under subsets");
                            (row, if pos % 2 == 0 { 1i8 } else { -1i8 })
                        })
                        .collect()
                })
                .collect()
        };
        BoundaryMatrix { rows: rows.len(), columns }
    }

    /// `dim H̃_j` for `j = -1 ..= dim`.
    pub fn reduced_betti(&self, field: FieldSpec) -> Vec<usize> {
        let top = self.dimension();
        // rank ∂_d for d = -1 ..= top + 1
        let ranks: Vec<usize> = (-1..=top + 1).map(|d| self.boundary(d).rank(field)).collect();
        (-1..=top)
            .map(|j| {
                let idx = (j + 1) as usize;
                self.faces(j).len() - ranks[idx] - ranks[idx + 1]
            })
            .collect()
    }
}

/// Sparse signed incidence matrix, stored by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, i8)>>,
}

impl BoundaryMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, s) in col {
                m[r][c] = s as i64;
            }
        }
        m
    }

    /// `self * rhs` as a dense integer matrix.
    pub fn compose(&self, rhs: &BoundaryMatrix) -> Vec<Vec<i64>> {
        assert_eq!(self.cols(), rhs.rows, "dimension mismatch");
        let mut out = vec![vec![0i64; rhs.cols()]; self.rows];
        for (c, col) in rhs.columns.iter().enumerate() {
            for &(mid, s) in col {
                for &(r, t) in &self.columns[mid] {
                    out[r][c] += (s as i64) * (t as i64);
                }
            }
        }
        out
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows == 0 || self.cols() == 0 {
            return 0;
        }
        let dense = self.to_dense();
        match field {
            FieldSpec::Rationals => rank_rational(&dense),
            FieldSpec::PrimeField(p) => rank_mod_p(&dense, p),
        }
    }
}

/// Rank over `Z/p` by Gaussian elimination.
pub fn rank_mod_p(m: &[Vec<i64>], p: u32) -> usize {
    let p = p as i64;
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, pr);
        let inv = mod_inverse(a[rank][c], p);
        for x in a[rank].iter_mut() {
            *x = (*x as i128 * inv as i128 % p as i128) as i64;
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for k in c..cols {
                    let t = (f as i128 * a[rank][k] as i128 % p as i128) as i64;
                    a[r][k] = (a[r][k] - t).rem_euclid(p);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    // Fermat; p is prime and below 2^32 so products fit in i128.
    let (mut base, mut exp, mut acc) = (a as i128, (p - 2) as u64, 1i128);
    let p = p as i128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc as i64
}

/// Rank over `Q` by fraction-free (Bareiss) elimination, in `i128` with a
/// big-integer retry on overflow.
pub fn rank_rational(m: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_rank_i128(small) {
        Some(r) => r,
        None => {
            let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            bareiss_rank_big(big)
        }
    }
}

/// `None` when an intermediate value overflows.
pub fn bareiss_rank_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, pr);
        let pivot = a[rank][c];
        for r in rank + 1..rows {
            let f = a[r][c];
            for k in c + 1..cols {
                let v = a[r][k].checked_mul(pivot)?.checked_sub(f.checked_mul(a[rank][k])?)?;
                debug_assert_eq!(v % prev, 0);
                a[r][k] = v / prev;
            }
            a[r][c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

pub fn bareiss_rank_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, pr);
        let pivot = a[rank][c].clone();
        for r in rank + 1..rows {
            let f = a[r][c].clone();
            for k in c + 1..cols {
                let v = &a[r][k] * &pivot - &f * &a[rank][k];
                a[r][k] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
