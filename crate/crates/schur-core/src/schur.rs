//! Schur and skew Schur modules realized inside `⋀^{λ'_1}V ⊗ … ⊗ ⋀^{λ'_h}V`.
//!
//! Tensor positions are identified with the cells of the fixed column-first
//! standard filling, so every column of a shape is a contiguous block of
//! positions.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::Mutex;

use crate::algebra::{add_to, axpy, determinant, inverse, scale, transpose, DenseMatrix, RowSpace, SparseVec, Q};
use crate::combinatorics::{enumerate_sstd, skew_dimension, Partition, SkewShape, Tableau};
use crate::error::{precondition, Result, SchurError};

/// Basis vector index, `1..=n`.
pub type Idx = u8;
/// Strictly increasing indices of a wedge monomial.
pub type Column = Vec<Idx>;
/// One wedge monomial per column of the shape.
pub type Key = Vec<Column>;

/// An element of `V^{⊗d}` in the monomial basis.
#[derive(Debug, Clone, PartialEq)]
pub struct WordTensor {
    pub d: usize,
    pub n: usize,
    pub terms: SparseVec<Vec<Idx>>,
}

impl WordTensor {
    pub fn zero(d: usize, n: usize) -> Self {
        WordTensor { d, n, terms: SparseVec::new() }
    }

    /// A single word with coefficient one.
    pub fn word(n: usize, letters: &[usize]) -> Self {
        let w: Vec<Idx> = letters.iter().map(|&l| l as Idx).collect();
        let mut terms = SparseVec::new();
        terms.insert(w, Q::one());
        WordTensor { d: letters.len(), n, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &WordTensor) -> WordTensor {
        let mut terms = self.terms.clone();
        axpy(&mut terms, &Q::one(), &other.terms);
        WordTensor { d: self.d, n: self.n, terms }
    }

    pub fn scaled(&self, c: &Q) -> WordTensor {
        WordTensor { d: self.d, n: self.n, terms: scale(&self.terms, c) }
    }
}

/// An element of `⋀_{λ'}V` (or of the dual space when `dual` is set).
#[derive(Debug, Clone, PartialEq)]
pub struct AmbientElement {
    pub lambda: Partition,
    pub n: usize,
    pub dual: bool,
    pub terms: SparseVec<Key>,
}

impl AmbientElement {
    pub fn zero(lambda: Partition, n: usize, dual: bool) -> Self {
        AmbientElement { lambda, n, dual, terms: SparseVec::new() }
    }

    /// Checks that every key has the column lengths of `λ'` and indices in `1..=n`.
    pub fn new(lambda: Partition, n: usize, dual: bool, terms: SparseVec<Key>) -> Result<Self> {
        let lens = lambda.conjugate();
        for k in terms.keys() {
            check_key(k, lens.parts(), n)?;
        }
        let terms = terms.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        Ok(AmbientElement { lambda, n, dual, terms })
    }

    /// `c · e_{I_1} ⊗ … ⊗ e_{I_h}` from 1-based index lists, sorted with sign.
    pub fn monomial(lambda: &Partition, n: usize, dual: bool, columns: &[&[usize]], c: Q) -> Result<Self> {
        let mut key = Key::new();
        let mut coeff = c;
        for col in columns {
            let raw: Vec<Idx> = col.iter().map(|&i| i as Idx).collect();
            match sort_with_sign(&raw) {
                Some((s, neg)) => {
                    if neg {
                        coeff = -coeff;
                    }
                    key.push(s);
                }
                None => return Ok(AmbientElement::zero(lambda.clone(), n, dual)),
            }
        }
        let mut terms = SparseVec::new();
        terms.insert(key, coeff);
        AmbientElement::new(lambda.clone(), n, dual, terms)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &AmbientElement) -> AmbientElement {
        let mut terms = self.terms.clone();
        axpy(&mut terms, &Q::one(), &other.terms);
        AmbientElement { terms, ..self.clone() }
    }

    pub fn minus(&self, other: &AmbientElement) -> AmbientElement {
        let mut terms = self.terms.clone();
        axpy(&mut terms, &-Q::one(), &other.terms);
        AmbientElement { terms, ..self.clone() }
    }

    pub fn scaled(&self, c: &Q) -> AmbientElement {
        AmbientElement { terms: scale(&self.terms, c), ..self.clone() }
    }

    /// Applies the matrix `m` to every tensor leg, as a linear map on
    /// coordinate vectors.
    pub fn apply_matrix(&self, m: &DenseMatrix) -> AmbientElement {
        AmbientElement { terms: act_on_terms(m, &self.terms), ..self.clone() }
    }

    /// Action of `g ∈ GL(V)`: `g` on vectors, `(g⁻¹)ᵀ` on dual vectors.
    pub fn act(&self, g: &DenseMatrix) -> Result<AmbientElement> {
        if self.dual {
            let gi = inverse(g).ok_or_else(|| SchurError::Precondition("singular group element".into()))?;
            Ok(self.apply_matrix(&transpose(&gi)))
        } else {
            Ok(self.apply_matrix(g))
        }
    }

    /// Nonzero `c` with `self = c · other`, if the two are proportional.
    pub fn proportionality(&self, other: &AmbientElement) -> Option<Q> {
        proportional(&self.terms, &other.terms)
    }
}

/// An element of `⋀_{λ'/μ'}V`; column `c` carries `λ'_c − μ'_c` indices, and
/// columns emptied by the inner shape are kept as empty lists.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewAmbientElement {
    pub shape: SkewShape,
    pub n: usize,
    pub dual: bool,
    pub terms: SparseVec<Key>,
}

impl SkewAmbientElement {
    pub fn zero(shape: SkewShape, n: usize, dual: bool) -> Self {
        SkewAmbientElement { shape, n, dual, terms: SparseVec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn apply_matrix(&self, m: &DenseMatrix) -> SkewAmbientElement {
        SkewAmbientElement { terms: act_on_terms(m, &self.terms), ..self.clone() }
    }

    pub fn act(&self, g: &DenseMatrix) -> Result<SkewAmbientElement> {
        if self.dual {
            let gi = inverse(g).ok_or_else(|| SchurError::Precondition("singular group element".into()))?;
            Ok(self.apply_matrix(&transpose(&gi)))
        } else {
            Ok(self.apply_matrix(g))
        }
    }

    /// Re-reads the element on a straight shape when the inner shape consists
    /// of whole leading columns: those columns are empty and get dropped.
    pub fn to_straight(&self) -> Result<AmbientElement> {
        let lens = self.shape.column_lengths();
        let e = self.shape.inner[0];
        let ok = (0..e).all(|c| lens[c] == 0) && self.shape.inner.conjugate().parts().iter().all(|&h| h == self.shape.outer.conjugate()[0]);
        if !ok {
            return precondition(format!("{} is not a straight shape after dropping columns", self.shape));
        }
        let rest: Vec<usize> = lens[e..].to_vec();
        let lambda = Partition::trimmed(rest).conjugate();
        let terms = self.terms.iter().map(|(k, x)| (k[e..].to_vec(), x.clone())).collect();
        AmbientElement::new(lambda, self.n, self.dual, terms)
    }
}

fn check_key(k: &Key, lens: &[usize], n: usize) -> Result<()> {
    if k.len() != lens.len() {
        return Err(SchurError::Schema(format!("key {k:?} has {} columns, expected {}", k.len(), lens.len())));
    }
    for (col, &l) in k.iter().zip(lens) {
        if col.len() != l {
            return Err(SchurError::Schema(format!("column {col:?} should have {l} indices")));
        }
        if col.windows(2).any(|w| w[0] >= w[1]) || col.iter().any(|&i| i == 0 || i as usize > n) {
            return Err(SchurError::Schema(format!("column {col:?} is not strictly increasing in 1..={n}")));
        }
    }
    Ok(())
}

/// Sorted copy and parity of the sorting permutation; `None` on repeats.
pub fn sort_with_sign(v: &[Idx]) -> Option<(Column, bool)> {
    let mut s = v.to_vec();
    let mut neg = false;
    // insertion sort, counting transpositions
    for i in 1..s.len() {
        let mut j = i;
        while j > 0 && s[j - 1] > s[j] {
            s.swap(j - 1, j);
            neg = !neg;
            j -= 1;
        }
    }
    if s.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((s, neg))
}

/// `c` with `a = c · b`, or `None`.
pub fn proportional<K: Ord>(a: &SparseVec<K>, b: &SparseVec<K>) -> Option<Q> {
    if a.len() != b.len() {
        return None;
    }
    let (ka, xa) = a.iter().next()?;
    let xb = b.get(ka)?;
    let c = xa / xb;
    a.iter().all(|(k, x)| b.get(k).map_or(false, |y| &(y * &c) == x)).then_some(c)
}

/// Positions of a (skew) shape under the column-first filling.
#[derive(Debug, Clone)]
pub struct Layout {
    pub d: usize,
    /// Positions of each row, left to right.
    pub rows: Vec<Vec<usize>>,
    /// `(start, len)` of each column of the outer shape.
    pub cols: Vec<(usize, usize)>,
}

impl Layout {
    pub fn new(shape: &SkewShape) -> Layout {
        let cells = shape.column_first_cells();
        let mut rows = vec![vec![]; shape.num_rows()];
        for (p, &(i, _)) in cells.iter().enumerate() {
            rows[i - 1].push(p);
        }
        let mut cols = vec![];
        let mut start = 0;
        for l in shape.column_lengths() {
            cols.push((start, l));
            start += l;
        }
        Layout { d: cells.len(), rows, cols }
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        self.cols.iter().map(|&(_, l)| l).collect()
    }
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Distinct rearrangements of `vals` in lexicographic order.
fn multiset_permutations(vals: &[Idx]) -> Vec<Vec<Idx>> {
    let mut cur = vals.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// All permutations of `0..k` with their signs.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = vec![];
    let mut p: Vec<usize> = (0..k).collect();
    fn rec(i: usize, p: &mut Vec<usize>, neg: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        if i == p.len() {
            out.push((p.clone(), neg));
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            rec(i + 1, p, neg ^ (i != j), out);
            p.swap(i, j);
        }
    }
    rec(0, &mut p, false, &mut out);
    out
}

/// Row symmetrization `a` on the given layout.
pub fn row_symmetrize(layout: &Layout, w: &SparseVec<Vec<Idx>>) -> SparseVec<Vec<Idx>> {
    let mut out = SparseVec::new();
    for (word, c) in w {
        let mut partial: Vec<(Vec<Idx>, u64)> = vec![(word.clone(), 1)];
        for row in &layout.rows {
            if row.len() < 2 {
                continue;
            }
            let vals: Vec<Idx> = row.iter().map(|&p| word[p]).collect();
            let mut mult: HashMap<Idx, usize> = HashMap::new();
            for &v in &vals {
                *mult.entry(v).or_default() += 1;
            }
            let weight: u64 = mult.values().map(|&m| factorial(m)).product();
            let perms = multiset_permutations(&vals);
            let mut next = Vec::with_capacity(partial.len() * perms.len());
            for (pw, pc) in &partial {
                for perm in &perms {
                    let mut nw = pw.clone();
                    for (&p, &v) in row.iter().zip(perm) {
                        nw[p] = v;
                    }
                    next.push((nw, pc * weight));
                }
            }
            partial = next;
        }
        for (nw, m) in partial {
            add_to(&mut out, nw, c * Q::from_integer(m.into()));
        }
    }
    out
}

/// Column antisymmetrization `b` on the given layout.
pub fn col_antisymmetrize(layout: &Layout, w: &SparseVec<Vec<Idx>>) -> SparseVec<Vec<Idx>> {
    let mut out = SparseVec::new();
    let perms: Vec<Vec<(Vec<usize>, bool)>> = layout.cols.iter().map(|&(_, l)| signed_permutations(l)).collect();
    'words: for (word, c) in w {
        for &(s, l) in &layout.cols {
            if sort_with_sign(&word[s..s + l]).is_none() {
                continue 'words;
            }
        }
        let mut partial: Vec<(Vec<Idx>, bool)> = vec![(word.clone(), false)];
        for (ci, &(s, l)) in layout.cols.iter().enumerate() {
            if l < 2 {
                continue;
            }
            let mut next = Vec::with_capacity(partial.len() * perms[ci].len());
            for (pw, neg) in &partial {
                for (perm, pneg) in &perms[ci] {
                    let mut nw = pw.clone();
                    for (k, &src) in perm.iter().enumerate() {
                        nw[s + k] = pw[s + src];
                    }
                    next.push((nw, neg ^ pneg));
                }
            }
            partial = next;
        }
        for (nw, neg) in partial {
            add_to(&mut out, nw, if neg { -c.clone() } else { c.clone() });
        }
    }
    out
}

/// Column-wise antisymmetrization read directly in wedge coordinates.
pub fn antisymmetrize_to_keys(layout: &Layout, w: &SparseVec<Vec<Idx>>) -> SparseVec<Key> {
    let mut out = SparseVec::new();
    'words: for (word, c) in w {
        let mut key = Key::with_capacity(layout.cols.len());
        let mut neg = false;
        for &(s, l) in &layout.cols {
            match sort_with_sign(&word[s..s + l]) {
                Some((col, ng)) => {
                    neg ^= ng;
                    key.push(col);
                }
                None => continue 'words,
            }
        }
        add_to(&mut out, key, if neg { -c.clone() } else { c.clone() });
    }
    out
}

fn check_size(d: usize, w: &WordTensor) -> Result<()> {
    if w.d != d || w.terms.keys().any(|k| k.len() != d) {
        return precondition(format!("word tensor has degree {}, shape needs {d}", w.d));
    }
    Ok(())
}

pub fn a_lambda(lambda: &Partition, w: &WordTensor) -> Result<WordTensor> {
    let layout = Layout::new(&SkewShape::straight(lambda.clone()));
    check_size(layout.d, w)?;
    Ok(WordTensor { terms: row_symmetrize(&layout, &w.terms), ..w.clone() })
}

pub fn b_lambda(lambda: &Partition, w: &WordTensor) -> Result<WordTensor> {
    let layout = Layout::new(&SkewShape::straight(lambda.clone()));
    check_size(layout.d, w)?;
    Ok(WordTensor { terms: col_antisymmetrize(&layout, &w.terms), ..w.clone() })
}

/// `c_λ = b_λ ∘ a_λ`, without normalization.
pub fn young_symmetrizer(lambda: &Partition, w: &WordTensor) -> Result<WordTensor> {
    skew_symmetrizer(&SkewShape::straight(lambda.clone()), w)
}

pub fn skew_symmetrizer(shape: &SkewShape, w: &WordTensor) -> Result<WordTensor> {
    let layout = Layout::new(shape);
    check_size(layout.d, w)?;
    let a = row_symmetrize(&layout, &w.terms);
    Ok(WordTensor { terms: col_antisymmetrize(&layout, &a), ..w.clone() })
}

/// `c_λ(w)` in wedge coordinates.
pub fn symmetrize_to_ambient(lambda: &Partition, w: &WordTensor, dual: bool) -> Result<AmbientElement> {
    let layout = Layout::new(&SkewShape::straight(lambda.clone()));
    check_size(layout.d, w)?;
    let terms = antisymmetrize_to_keys(&layout, &row_symmetrize(&layout, &w.terms));
    Ok(AmbientElement { lambda: lambda.clone(), n: w.n, dual, terms })
}

/// `c_{ν/λ}(w)` in skew wedge coordinates.
pub fn skew_symmetrize_to_ambient(shape: &SkewShape, w: &WordTensor, dual: bool) -> Result<SkewAmbientElement> {
    let layout = Layout::new(shape);
    check_size(layout.d, w)?;
    let terms = antisymmetrize_to_keys(&layout, &row_symmetrize(&layout, &w.terms));
    Ok(SkewAmbientElement { shape: shape.clone(), n: w.n, dual, terms })
}

/// Reads off the coefficient of each sorted column representative; the
/// input must be antisymmetric in every column block.
pub fn word_to_ambient(lambda: &Partition, w: &WordTensor) -> Result<AmbientElement> {
    let layout = Layout::new(&SkewShape::straight(lambda.clone()));
    check_size(layout.d, w)?;
    let mut terms = SparseVec::new();
    for (word, c) in &w.terms {
        let key: Option<Key> = layout
            .cols
            .iter()
            .map(|&(s, l)| {
                let col = &word[s..s + l];
                col.windows(2).all(|p| p[0] < p[1]).then(|| col.to_vec())
            })
            .collect();
        if let Some(key) = key {
            terms.insert(key, c.clone());
        }
    }
    let a = AmbientElement { lambda: lambda.clone(), n: w.n, dual: false, terms };
    if ambient_to_word(&a).terms != w.terms {
        return precondition("word tensor is not antisymmetric in its column blocks");
    }
    Ok(a)
}

/// Expands every wedge monomial into its signed sum of words.
pub fn ambient_to_word(a: &AmbientElement) -> WordTensor {
    let layout = Layout::new(&SkewShape::straight(a.lambda.clone()));
    let words = a.terms.iter().map(|(k, c)| (k.concat(), c.clone())).collect();
    WordTensor { d: layout.d, n: a.n, terms: col_antisymmetrize(&layout, &words) }
}

/// Same expansion for a skew element.
pub fn skew_ambient_to_word(a: &SkewAmbientElement) -> WordTensor {
    let layout = Layout::new(&a.shape);
    let words = a.terms.iter().map(|(k, c)| (k.concat(), c.clone())).collect();
    WordTensor { d: layout.d, n: a.n, terms: col_antisymmetrize(&layout, &words) }
}

/// `v_{(T₀,S)}`: the column reading of `S` as a word.
pub fn filling_word(s: &Tableau, n: usize) -> WordTensor {
    WordTensor::word(n, &s.column_word())
}

/// `c_λ(v_{(T₀,S)})`.
pub fn basis_element(lambda: &Partition, s: &Tableau, n: usize) -> Result<AmbientElement> {
    if s.shape != SkewShape::straight(lambda.clone()) || !s.is_sstd() || s.max_entry() > n {
        return precondition(format!("{s} is not a semistandard tableau of shape {lambda} with entries ≤ {n}"));
    }
    symmetrize_to_ambient(lambda, &filling_word(s, n), false)
}

/// Cached basis of `S_λ ℂⁿ`.
#[derive(Debug)]
pub struct SchurData {
    pub lambda: Partition,
    pub n: usize,
    pub tableaux: Vec<Tableau>,
    pub basis: Vec<SparseVec<Key>>,
    pub space: RowSpace<Key>,
}

impl SchurData {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

static SCHUR_CACHE: Lazy<Mutex<HashMap<(Partition, usize), Arc<SchurData>>>> = Lazy::new(Default::default);

pub fn schur_data(lambda: &Partition, n: usize) -> Arc<SchurData> {
    let key = (lambda.clone(), n);
    if let Some(d) = SCHUR_CACHE.lock().get(&key) {
        return d.clone();
    }
    let tableaux = enumerate_sstd(&SkewShape::straight(lambda.clone()), n);
    let basis: Vec<SparseVec<Key>> = tableaux
        .iter()
        .map(|t| basis_element(lambda, t, n).expect("sstd tableau").terms)
        .collect();
    let space = RowSpace::from_vectors(&basis);
    let data = Arc::new(SchurData { lambda: lambda.clone(), n, tableaux, basis, space });
    SCHUR_CACHE.lock().entry(key).or_insert(data).clone()
}

/// Basis of `S_λ ℂⁿ` in canonical tableau order.
pub fn schur_basis(lambda: &Partition, n: usize) -> Vec<AmbientElement> {
    schur_data(lambda, n)
        .basis
        .iter()
        .map(|t| AmbientElement { lambda: lambda.clone(), n, dual: false, terms: t.clone() })
        .collect()
}

/// `c_μ(x_S)` for each sstd `S`: the basis of `S_μ V*` used as catalecticant columns.
pub fn dual_basis(mu: &Partition, n: usize) -> Vec<AmbientElement> {
    schur_basis(mu, n).into_iter().map(|mut a| {
        a.dual = true;
        a
    }).collect()
}

pub fn membership(lambda: &Partition, a: &AmbientElement) -> bool {
    &a.lambda == lambda && schur_data(lambda, a.n).space.contains(&a.terms)
}

/// Cached basis of the skew module `S_{ν/λ} ℂⁿ`.
#[derive(Debug)]
pub struct SkewData {
    pub shape: SkewShape,
    pub n: usize,
    pub space: RowSpace<Key>,
}

static SKEW_CACHE: Lazy<Mutex<HashMap<(SkewShape, usize), Arc<SkewData>>>> = Lazy::new(Default::default);

/// Images of semistandard skew fillings under `c_{ν/λ}`; if these fall short of
/// the semistandard count, further words are added until the span is reached.
pub fn skew_data(shape: &SkewShape, n: usize) -> Arc<SkewData> {
    let key = (shape.clone(), n);
    if let Some(d) = SKEW_CACHE.lock().get(&key) {
        return d.clone();
    }
    let target = skew_dimension(shape, n) as usize;
    let mut space = RowSpace::new();
    for t in enumerate_sstd(shape, n) {
        let e = skew_symmetrize_to_ambient(shape, &filling_word(&t, n), false).expect("sized word");
        space.insert(&e.terms);
    }
    if space.dim() < target {
        let d = shape.size();
        let mut word = vec![1usize; d];
        'all: loop {
            let e = skew_symmetrize_to_ambient(shape, &WordTensor::word(n, &word), false).expect("sized word");
            space.insert(&e.terms);
            if space.dim() >= target {
                break;
            }
            for k in (0..d).rev() {
                if word[k] < n {
                    word[k] += 1;
                    for x in word[k + 1..].iter_mut() {
                        *x = 1;
                    }
                    continue 'all;
                }
            }
            break;
        }
    }
    let data = Arc::new(SkewData { shape: shape.clone(), n, space });
    SKEW_CACHE.lock().entry(key).or_insert(data).clone()
}

pub fn skew_membership(shape: &SkewShape, a: &SkewAmbientElement) -> bool {
    &a.shape == shape && skew_data(shape, a.n).space.contains(&a.terms)
}

/// All `k`-subsets of `1..=n`, increasing.
pub fn subsets(n: usize, k: usize) -> Vec<Column> {
    let mut out = vec![];
    fn rec(start: usize, n: usize, k: usize, cur: &mut Column, out: &mut Vec<Column>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i as Idx);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut vec![], &mut out);
    out
}

/// Every monomial key for the given column lengths, lexicographically.
pub fn all_keys(col_lengths: &[usize], n: usize) -> Vec<Key> {
    let mut out: Vec<Key> = vec![vec![]];
    for &l in col_lengths {
        let subs = subsets(n, l);
        out = out
            .into_iter()
            .flat_map(|k| {
                subs.iter().map(move |s| {
                    let mut k2 = k.clone();
                    k2.push(s.clone());
                    k2
                })
            })
            .collect();
    }
    out
}

/// `m · e_I = Σ_J det(m[J, I]) e_J`.
fn compound_column(m: &DenseMatrix, col: &Column) -> Vec<(Column, Q)> {
    let n = m.len();
    if col.is_empty() {
        return vec![(vec![], Q::one())];
    }
    subsets(n, col.len())
        .into_iter()
        .filter_map(|rows| {
            let sub: DenseMatrix = rows
                .iter()
                .map(|&r| col.iter().map(|&c| m[r as usize - 1][c as usize - 1].clone()).collect())
                .collect();
            let d = determinant(&sub);
            (!d.is_zero()).then_some((rows, d))
        })
        .collect()
}

fn act_on_terms(m: &DenseMatrix, terms: &SparseVec<Key>) -> SparseVec<Key> {
    let mut cache: HashMap<Column, Vec<(Column, Q)>> = HashMap::new();
    let mut out = SparseVec::new();
    for (key, c) in terms {
        let mut partial: Vec<(Key, Q)> = vec![(vec![], c.clone())];
        for col in key {
            let exp = cache.entry(col.clone()).or_insert_with(|| compound_column(m, col)).clone();
            let mut next = Vec::with_capacity(partial.len() * exp.len());
            for (k, x) in &partial {
                for (ncol, d) in &exp {
                    let mut k2 = k.clone();
                    k2.push(ncol.clone());
                    next.push((k2, x * d));
                }
            }
            partial = next;
        }
        for (k, x) in partial {
            add_to(&mut out, k, x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn elementary_symmetrizers() {
        let w = WordTensor::word(2, &[1, 2]);
        let b = b_lambda(&p(&[1, 1]), &w).unwrap();
        assert_eq!(b.terms.len(), 2);
        assert_eq!(b.terms[&vec![1, 2]], q(1));
        assert_eq!(b.terms[&vec![2, 1]], q(-1));
        let a = a_lambda(&p(&[2]), &w).unwrap();
        assert_eq!(a.terms[&vec![1, 2]], q(1));
        assert_eq!(a.terms[&vec![2, 1]], q(1));
        assert!(a_lambda(&p(&[3]), &w).is_err());
    }

    #[test]
    fn worked_symmetrizer_example() {
        // Positions follow the column-first filling [[1,3],[2]].
        let c = young_symmetrizer(&p(&[2, 1]), &WordTensor::word(2, &[1, 2, 1])).unwrap();
        let amb = word_to_ambient(&p(&[2, 1]), &c).unwrap();
        let want = AmbientElement::monomial(&p(&[2, 1]), 2, false, &[&[1, 2], &[1]], q(2)).unwrap();
        assert_eq!(amb, want);
        assert_eq!(c.terms.len(), 2);
    }

    #[test]
    fn basis_example() {
        let s = Tableau::from_rows(vec![vec![1, 1], vec![2]]).unwrap();
        let e = basis_element(&p(&[2, 1]), &s, 3).unwrap();
        assert_eq!(e, AmbientElement::monomial(&p(&[2, 1]), 3, false, &[&[1, 2], &[1]], q(2)).unwrap());
        assert_eq!(schur_data(&p(&[2, 2]), 4).space.dim(), 20);
        assert_eq!(schur_data(&p(&[2, 1]), 3).space.dim(), 8);
    }

    #[test]
    fn wedge_basis_elements_are_monomials() {
        for e in schur_basis(&p(&[1, 1, 1]), 4) {
            assert_eq!(e.terms.len(), 1);
        }
    }

    #[test]
    fn round_trip_is_identity() {
        for e in schur_basis(&p(&[2, 1]), 3) {
            let w = ambient_to_word(&e);
            assert_eq!(word_to_ambient(&p(&[2, 1]), &w).unwrap(), e);
        }
        let bad = WordTensor::word(3, &[1, 2, 1]);
        assert!(word_to_ambient(&p(&[2, 1]), &bad).is_err());
    }

    #[test]
    fn single_column_conversion() {
        let w = b_lambda(&p(&[1, 1]), &WordTensor::word(2, &[1, 2])).unwrap();
        let a = word_to_ambient(&p(&[1, 1]), &w).unwrap();
        assert_eq!(a.terms[&vec![vec![1, 2]]], q(1));
    }

    #[test]
    fn plucker_violation_is_outside() {
        let l = p(&[2, 1]);
        let bad = AmbientElement::monomial(&l, 3, false, &[&[1, 2], &[3]], q(1)).unwrap();
        assert!(!membership(&l, &bad));
        assert!(membership(&l, &AmbientElement::zero(l.clone(), 3, false)));
        for e in schur_basis(&l, 3) {
            assert!(membership(&l, &e));
        }
    }

    #[test]
    fn skew_span_matches_lr_count() {
        let s = SkewShape::new(p(&[2, 2]), p(&[1])).unwrap();
        // (2,2)/(1) decomposes as S_(2,1).
        assert_eq!(skew_data(&s, 3).space.dim(), 8);
    }

    #[test]
    fn straightening_skew_columns() {
        let shape = SkewShape::new(p(&[3, 2, 1]), p(&[1, 1, 1])).unwrap();
        let mut terms = SparseVec::new();
        terms.insert(vec![vec![], vec![1, 2], vec![1]], q(1));
        let s = SkewAmbientElement { shape, n: 3, dual: false, terms };
        let a = s.to_straight().unwrap();
        assert_eq!(a.lambda, p(&[2, 1]));
        assert!(membership(&a.lambda, &a));
    }

    #[test]
    fn group_action_on_wedge() {
        let l = p(&[1, 1]);
        let e = AmbientElement::monomial(&l, 2, false, &[&[1, 2]], q(1)).unwrap();
        let g = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let ge = e.act(&g).unwrap();
        assert_eq!(ge.terms[&vec![vec![1, 2]]], q(5));
    }
}
