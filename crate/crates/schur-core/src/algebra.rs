//! Exact rational linear algebra: sparse vectors over labelled bases,
//! matrices with fraction-free rank and kernel, and row spaces.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, SchurError};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || SchurError::Schema(format!("invalid rational {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

/// Sparse vector keyed by basis labels.
pub type SparseVec<K> = BTreeMap<K, Q>;

/// `acc += c * v`, dropping zeros.
pub fn axpy<K: Ord + Clone>(acc: &mut SparseVec<K>, c: &Q, v: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        add_to(acc, k.clone(), c * x);
    }
}

pub fn add_to<K: Ord>(acc: &mut SparseVec<K>, k: K, x: Q) {
    if x.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match acc.entry(k) {
        Entry::Vacant(e) => {
            e.insert(x);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += x;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn scale<K: Ord + Clone>(v: &SparseVec<K>, c: &Q) -> SparseVec<K> {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(k, x)| (k.clone(), x * c)).collect()
}

/// A sparse vector with an explicit ordered basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledVector<L> {
    pub basis_labels: Vec<L>,
    pub entries: BTreeMap<usize, Q>,
}

impl<L: Clone> LabeledVector<L> {
    /// Pairs of (label, coefficient) for the nonzero entries.
    pub fn labeled_entries(&self) -> Vec<(L, Q)> {
        self.entries.iter().map(|(&i, x)| (self.basis_labels[i].clone(), x.clone())).collect()
    }

    pub fn dense(&self) -> Vec<Q> {
        (0..self.basis_labels.len())
            .map(|i| self.entries.get(&i).cloned().unwrap_or_else(Q::zero))
            .collect()
    }
}

/// Sparse exact matrix with labelled rows and columns.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMatrix<R, C> {
    pub row_labels: Vec<R>,
    pub column_labels: Vec<C>,
    /// `rows[i]` maps column index to a nonzero entry.
    pub rows: Vec<BTreeMap<usize, Q>>,
}

impl<R: Clone, C: Clone> RationalMatrix<R, C> {
    pub fn zeros(row_labels: Vec<R>, column_labels: Vec<C>) -> Self {
        let rows = vec![BTreeMap::new(); row_labels.len()];
        RationalMatrix { row_labels, column_labels, rows }
    }

    pub fn nrows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn ncols(&self) -> usize {
        self.column_labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.rows[i].get(&j).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        if x.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, x);
        }
    }

    pub fn transpose(&self) -> RationalMatrix<C, R> {
        let mut t = RationalMatrix::zeros(self.column_labels.clone(), self.row_labels.clone());
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, x) in row {
                t.rows[j].insert(i, x.clone());
            }
        }
        t
    }

    pub fn dense(&self) -> Vec<Vec<Q>> {
        (0..self.nrows()).map(|i| (0..self.ncols()).map(|j| self.get(i, j)).collect()).collect()
    }

    /// `M v` for a dense vector indexed by columns.
    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        self.rows
            .iter()
            .map(|row| row.iter().fold(Q::zero(), |acc, (&j, x)| acc + x * &v[j]))
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn kernel_basis(&self) -> Vec<LabeledVector<C>> {
        kernel_basis(self)
    }
}

impl RationalMatrix<usize, usize> {
    /// Unlabelled matrix from dense rows.
    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let nc = rows.first().map_or(0, |r| r.len());
        let mut m = RationalMatrix::zeros((0..rows.len()).collect(), (0..nc).collect());
        for (i, r) in rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }
}

/// Row scaled by the lcm of its denominators.
fn integer_row(row: &BTreeMap<usize, Q>, ncols: usize) -> Vec<BigInt> {
    let l = row.values().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out = vec![BigInt::zero(); ncols];
    for (&j, x) in row {
        out[j] = x.numer() * (&l / x.denom());
    }
    out
}

/// Fraction-free echelon form. Returns the pivot rows and pivot columns.
///
/// Pivots are chosen with the smallest nonzero magnitude in their column.
fn bareiss_echelon(mut a: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = vec![];
    for c in 0..ncols {
        if r == m {
            break;
        }
        let piv = (r..m)
            .filter(|&i| !a[i][c].is_zero())
            .min_by(|&i, &j| a[i][c].magnitude().cmp(a[j][c].magnitude()));
        let Some(p) = piv else { continue };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pr = &top[r];
        for row in bottom.iter_mut() {
            let f = row[c].clone();
            for j in (c + 1)..ncols {
                let v = &pr[c] * &row[j] - &f * &pr[j];
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

fn nonzero_integer_rows<R, C>(m: &RationalMatrix<R, C>) -> Vec<Vec<BigInt>> {
    let nc = m.column_labels.len();
    m.rows.iter().filter(|r| !r.is_empty()).map(|r| integer_row(r, nc)).collect()
}

/// Exact rank over ℚ.
pub fn rank<R, C>(m: &RationalMatrix<R, C>) -> usize {
    let nc = m.column_labels.len();
    let a = nonzero_integer_rows(m);
    // Eliminate along the shorter side.
    if a.len() > nc {
        let mut t = vec![vec![BigInt::zero(); a.len()]; nc];
        for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                t[j][i] = x.clone();
            }
        }
        let n = a.len();
        return bareiss_echelon(t, n).1.len();
    }
    bareiss_echelon(a, nc).1.len()
}

/// Basis of the right kernel, one vector per non-pivot column.
pub fn kernel_basis<R, C: Clone>(m: &RationalMatrix<R, C>) -> Vec<LabeledVector<C>> {
    let nc = m.column_labels.len();
    let (e, pivots) = bareiss_echelon(nonzero_integer_rows(m), nc);
    let is_pivot: Vec<bool> = (0..nc).map(|c| pivots.contains(&c)).collect();
    let mut out = vec![];
    for f in (0..nc).filter(|&c| !is_pivot[c]) {
        let mut x: Vec<Q> = vec![Q::zero(); nc];
        x[f] = Q::one();
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let mut s = Q::zero();
            for j in (pc + 1)..nc {
                if !e[i][j].is_zero() && !x[j].is_zero() {
                    s += Q::from_integer(e[i][j].clone()) * &x[j];
                }
            }
            x[pc] = -s / Q::from_integer(e[i][pc].clone());
        }
        let entries = x.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        out.push(LabeledVector { basis_labels: m.column_labels.clone(), entries });
    }
    out
}

/// Incrementally maintained reduced row echelon basis of a subspace of the
/// sparse vectors over `K`.
#[derive(Debug, Clone)]
pub struct RowSpace<K: Ord + Clone + Hash> {
    rows: Vec<SparseVec<K>>,
    pivots: Vec<K>,
    index: HashMap<K, usize>,
}

impl<K: Ord + Clone + Hash> Default for RowSpace<K> {
    fn default() -> Self {
        RowSpace { rows: vec![], pivots: vec![], index: HashMap::new() }
    }
}

impl<K: Ord + Clone + Hash> RowSpace<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a>(vs: impl IntoIterator<Item = &'a SparseVec<K>>) -> Self
    where
        K: 'a,
    {
        let mut s = Self::new();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduced basis rows; each has coefficient one at its pivot and zero at
    /// every other pivot.
    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[K] {
        &self.pivots
    }

    /// `v` minus its projection along the pivots.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut out = v.clone();
        for (k, x) in v {
            if let Some(&r) = self.index.get(k) {
                let c = -x.clone();
                axpy(&mut out, &c, &self.rows[r]);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((p, lead)) = r.iter().next().map(|(k, x)| (k.clone(), x.clone())) else {
            return false;
        };
        let inv = lead.recip();
        for x in r.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &-c, &r);
            }
        }
        self.index.insert(p.clone(), self.rows.len());
        self.pivots.push(p);
        self.rows.push(r);
        true
    }

    /// Coordinates of a member of the space in the reduced basis.
    pub fn coordinates(&self, v: &SparseVec<K>) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|p| v.get(p).cloned().unwrap_or_else(Q::zero)).collect())
    }

    pub fn is_subspace_of(&self, other: &RowSpace<K>) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn same_span(&self, other: &RowSpace<K>) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

pub fn membership<K: Ord + Clone + Hash>(space: &[SparseVec<K>], v: &SparseVec<K>) -> bool {
    RowSpace::from_vectors(space).contains(v)
}

pub fn is_subspace<K: Ord + Clone + Hash>(a: &[SparseVec<K>], b: &[SparseVec<K>]) -> bool {
    let sb = RowSpace::from_vectors(b);
    a.iter().all(|v| sb.contains(v))
}

/// Intersection of subspaces given by spanning sets, via the kernel of the
/// stacked spanning vectors.
pub fn intersect<K: Ord + Clone + Hash>(spaces: &[Vec<SparseVec<K>>]) -> Vec<SparseVec<K>> {
    let Some(first) = spaces.first() else { return vec![] };
    let mut acc: Vec<SparseVec<K>> = RowSpace::from_vectors(first).rows().to_vec();
    for b in &spaces[1..] {
        let b: Vec<SparseVec<K>> = RowSpace::from_vectors(b).rows().to_vec();
        if acc.is_empty() || b.is_empty() {
            return vec![];
        }
        // Columns are the vectors of acc followed by the negated vectors of b.
        let mut keys: Vec<K> = acc.iter().chain(b.iter()).flat_map(|v| v.keys().cloned()).collect();
        keys.sort();
        keys.dedup();
        let pos: HashMap<K, usize> = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let ncols = acc.len() + b.len();
        let mut m: RationalMatrix<usize, usize> = RationalMatrix::zeros((0..keys.len()).collect(), (0..ncols).collect());
        for (j, v) in acc.iter().enumerate() {
            for (k, x) in v {
                m.set(pos[k], j, x.clone());
            }
        }
        for (j, v) in b.iter().enumerate() {
            for (k, x) in v {
                m.set(pos[k], acc.len() + j, -x.clone());
            }
        }
        let mut out = RowSpace::new();
        for kv in kernel_basis(&m) {
            let mut w = SparseVec::new();
            for (&j, c) in &kv.entries {
                if j < acc.len() {
                    axpy(&mut w, c, &acc[j]);
                }
            }
            out.insert(&w);
        }
        acc = out.rows().to_vec();
    }
    acc
}

/// Dense rational matrix helpers for small change-of-basis computations.
pub type DenseMatrix = Vec<Vec<Q>>;

pub fn identity(n: usize) -> DenseMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

pub fn mat_mul(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| row.iter().zip(b).fold(Q::zero(), |acc, (x, brow)| acc + x * &brow[j]))
                .collect()
        })
        .collect()
}

pub fn transpose(a: &DenseMatrix) -> DenseMatrix {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Determinant by rational Gaussian elimination.
pub fn determinant(a: &DenseMatrix) -> Q {
    let n = a.len();
    let mut m = a.clone();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return Q::zero() };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let inv = m[c][c].recip();
        for i in (c + 1)..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                let v = &f * &m[c][j];
                m[i][j] -= v;
            }
        }
    }
    det
}

/// Inverse by Gauss-Jordan; `None` when singular.
pub fn inverse(a: &DenseMatrix) -> Option<DenseMatrix> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(p, c);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..2 * n {
                    let v = &f * &m[c][j];
                    m[i][j] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Rank of a dense matrix.
pub fn dense_rank(a: &DenseMatrix) -> usize {
    RationalMatrix::from_dense(a).rank()
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Sign helper: `(-1)^k`.
pub fn sign(k: usize) -> Q {
    if k % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}
