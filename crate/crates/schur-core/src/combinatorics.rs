//! Partitions, skew shapes, tableaux, words and Littlewood-Richardson data.
//!
//! Cells are addressed 1-based as `(row, column)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{precondition, Result, SchurError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting zero or increasing parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(SchurError::Schema(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SchurError::Schema(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Drops trailing zeros; panics on an increasing sequence.
    pub fn trimmed(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts).expect("not a partition")
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// `(d^k)`, the rectangle with `k` rows of length `d`.
    pub fn rectangle(d: usize, k: usize) -> Self {
        if d == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![d; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Cell-wise containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// All partitions of `d`, in decreasing lexicographic order.
    pub fn all_of_size(d: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = vec![];
        rec(d, d, &mut vec![], &mut out);
        out
    }

    /// All partitions contained in `self`, including the empty one and `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::trimmed(cur.clone()));
                return;
            }
            for p in 0..=outer[i].min(cap) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = vec![];
        rec(&self.parts, 0, usize::MAX, &mut vec![], &mut out);
        out.sort();
        out
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    /// Zero-based part access; zero past the end.
    fn index(&self, i: usize) -> &usize {
        self.parts.get(i).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return precondition(format!("{inner} is not contained in {outer}"));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_cols(&self) -> usize {
        self.outer[0]
    }

    /// Cells of row `i` (1-based) as a column range.
    pub fn row_range(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        (self.inner[i - 1] + 1)..=self.outer[i - 1]
    }

    /// Cells of column `j` (1-based) as a row range.
    pub fn col_range(&self, j: usize) -> std::ops::RangeInclusive<usize> {
        let oc = self.outer.conjugate();
        let ic = self.inner.conjugate();
        (ic[j - 1] + 1)..=oc[j - 1]
    }

    pub fn contains_cell(&self, (i, j): (usize, usize)) -> bool {
        i >= 1 && j >= 1 && j <= self.outer[i - 1] && j > self.inner[i - 1]
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.num_rows())
            .flat_map(|i| self.row_range(i).map(move |j| (i, j)))
            .collect()
    }

    /// Cells column by column, top to bottom: the positions of the fixed
    /// column-first standard filling.
    pub fn column_first_cells(&self) -> Vec<(usize, usize)> {
        (1..=self.num_cols())
            .flat_map(|j| self.col_range(j).map(move |i| (i, j)))
            .collect()
    }

    /// Column lengths `λ'_c - μ'_c`, one per column of the outer shape.
    pub fn column_lengths(&self) -> Vec<usize> {
        let oc = self.outer.conjugate();
        let ic = self.inner.conjugate();
        (0..oc.len()).map(|c| oc[c] - ic[c]).collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// A filling of a (skew) shape. `rows[i]` holds the entries of row `i + 1`
/// left to right, skipping the removed inner cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub shape: SkewShape,
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        while rows.len() > shape.num_rows() && rows.last().map_or(false, |r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() != shape.num_rows() {
            return Err(SchurError::Schema(format!(
                "tableau has {} rows, shape {} has {}",
                rows.len(),
                shape,
                shape.num_rows()
            )));
        }
        for (i, r) in rows.iter().enumerate() {
            let want = shape.outer[i] - shape.inner[i];
            if r.len() != want {
                return Err(SchurError::Schema(format!("row {} has {} entries, expected {want}", i + 1, r.len())));
            }
            if r.iter().any(|&x| x == 0) {
                return Err(SchurError::Schema("tableau entries must be positive".into()));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// Straight-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        Tableau::new(SkewShape::straight(shape), rows)
    }

    /// Fills the cells of `shape` in the given order with `values`.
    fn from_cells(shape: &SkewShape, cells: &[(usize, usize)], values: &[usize]) -> Self {
        let mut rows: Vec<Vec<usize>> = (1..=shape.num_rows())
            .map(|i| vec![0; shape.outer[i - 1] - shape.inner[i - 1]])
            .collect();
        for (&(i, j), &v) in cells.iter().zip(values) {
            rows[i - 1][j - 1 - shape.inner[i - 1]] = v;
        }
        Tableau { shape: shape.clone(), rows }
    }

    /// Entry at cell `(i, j)`, if the cell belongs to the shape.
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        if !self.shape.contains_cell((i, j)) {
            return None;
        }
        Some(self.rows[i - 1][j - 1 - self.shape.inner[i - 1]])
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_sstd(&self) -> bool {
        self.shape.cells().into_iter().all(|(i, j)| {
            let v = self.get(i, j).unwrap();
            let left_ok = self.get(i, j.wrapping_sub(1)).map_or(true, |l| l <= v);
            let up_ok = if i > 1 { self.get(i - 1, j).map_or(true, |u| u < v) } else { true };
            left_ok && up_ok
        })
    }

    /// Semistandard, rows strictly increase, entries are exactly `1..=size`.
    pub fn is_std(&self) -> bool {
        if !self.is_sstd() {
            return false;
        }
        let mut seen: Vec<usize> = self.rows.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Reading word: rows bottom to top, each left to right.
    pub fn word(&self) -> Word {
        Word::new(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Columns left to right, each top to bottom; defines the canonical order.
    pub fn column_word(&self) -> Vec<usize> {
        self.shape
            .column_first_cells()
            .into_iter()
            .map(|(i, j)| self.get(i, j).unwrap())
            .collect()
    }

    /// Multiplicity of each value `1..=max_entry`; not necessarily a partition.
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.max_entry()];
        for &v in self.rows.iter().flatten() {
            c[v - 1] += 1;
        }
        c
    }

    /// Transpose of a straight tableau.
    pub fn transpose(&self) -> Tableau {
        let conj = self.shape.outer.conjugate();
        let rows = (1..=conj.len())
            .map(|j| (1..=conj[j - 1]).map(|i| self.get(i, j).unwrap()).collect())
            .collect();
        Tableau { shape: SkewShape::straight(conj), rows }
    }

    /// Semistandard with Yamanouchi word and partition content.
    pub fn is_lr(&self) -> bool {
        let content = self.content();
        self.is_sstd() && self.word().is_yamanouchi() && content.windows(2).all(|w| w[0] >= w[1])
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau {
    /// Canonical order: shape, then lexicographic on the column word.
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.column_word().cmp(&other.column_word()))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut cells: Vec<String> = vec!["·".into(); self.shape.inner[i]];
                cells.extend(r.iter().map(|v| v.to_string()));
                cells.join(",")
            })
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    /// Every suffix has at least as many `i` as `i + 1`.
    pub fn is_yamanouchi(&self) -> bool {
        let mut counts: Vec<usize> = vec![];
        for &l in self.letters.iter().rev() {
            if l == 0 {
                return false;
            }
            if counts.len() < l + 1 {
                counts.resize(l + 1, 0);
            }
            counts[l] += 1;
            if l >= 2 && counts[l] > counts[l - 1] {
                return false;
            }
        }
        true
    }

    /// Multiplicity of each letter `1..=max`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.letters.iter().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &l in &self.letters {
            c[l - 1] += 1;
        }
        c
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// Semistandard fillings of `shape` with entries in `1..=max_entry`,
/// in canonical (column word) order.
pub fn enumerate_sstd(shape: &SkewShape, max_entry: usize) -> Vec<Tableau> {
    fill_sstd(shape, max_entry, None)
}

fn fill_sstd(shape: &SkewShape, max_entry: usize, content: Option<&[usize]>) -> Vec<Tableau> {
    let cells = shape.column_first_cells();
    let mut pos = std::collections::HashMap::new();
    for (k, &c) in cells.iter().enumerate() {
        pos.insert(c, k);
    }
    let col_len = shape.outer.conjugate();
    let mut vals = vec![0usize; cells.len()];
    let mut used = vec![0usize; max_entry + 1];
    let mut out = vec![];

    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        pos: &std::collections::HashMap<(usize, usize), usize>,
        col_len: &Partition,
        max_entry: usize,
        content: Option<&[usize]>,
        vals: &mut Vec<usize>,
        used: &mut Vec<usize>,
        shape: &SkewShape,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau::from_cells(shape, cells, vals));
            return;
        }
        let (i, j) = cells[k];
        let mut lo = 1;
        if let Some(&p) = pos.get(&(i.wrapping_sub(1), j)) {
            lo = lo.max(vals[p] + 1);
        }
        if let Some(&p) = pos.get(&(i, j.wrapping_sub(1))) {
            lo = lo.max(vals[p]);
        }
        let below = col_len[j - 1] - i;
        if max_entry < below {
            return;
        }
        let hi = max_entry - below;
        for v in lo..=hi {
            if let Some(c) = content {
                if used[v] >= *c.get(v - 1).unwrap_or(&0) {
                    continue;
                }
            }
            vals[k] = v;
            used[v] += 1;
            rec(k + 1, cells, pos, col_len, max_entry, content, vals, used, shape, out);
            used[v] -= 1;
        }
    }

    rec(0, &cells, &pos, &col_len, max_entry, content, &mut vals, &mut used, shape, &mut out);
    out
}

/// Standard tableaux of shape `lambda`, in canonical order.
pub fn enumerate_std(lambda: &Partition) -> Vec<Tableau> {
    let d = lambda.size();
    let mut out = vec![];

    fn rec(lambda: &Partition, next: usize, d: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if next > d {
            out.push(Tableau { shape: SkewShape::straight(lambda.clone()), rows: rows.clone() });
            return;
        }
        for i in 0..lambda.len() {
            let len = rows[i].len();
            let fits = len < lambda[i] && (i == 0 || rows[i - 1].len() > len);
            if fits {
                rows[i].push(next);
                rec(lambda, next + 1, d, rows, out);
                rows[i].pop();
            }
        }
    }

    rec(lambda, 1, d, &mut vec![vec![]; lambda.len()], &mut out);
    out.sort();
    out
}

/// The fixed standard tableau: `1..=|λ|` filled column by column.
pub fn column_first_tableau(lambda: &Partition) -> Tableau {
    let shape = SkewShape::straight(lambda.clone());
    let cells = shape.column_first_cells();
    let vals: Vec<usize> = (1..=cells.len()).collect();
    Tableau::from_cells(&shape, &cells, &vals)
}

pub fn word_of(t: &Tableau) -> Word {
    t.word()
}

pub fn is_yamanouchi(w: &Word) -> bool {
    w.is_yamanouchi()
}

/// Row of each entry `1..=d`, reversed.
pub fn alpha(t: &Tableau) -> Result<Word> {
    if !t.shape.is_straight() || !t.is_std() {
        return precondition(format!("alpha needs a standard straight tableau, got {t}"));
    }
    let mut rec = vec![0; t.shape.size()];
    for (i, row) in t.rows.iter().enumerate() {
        for &v in row {
            rec[v - 1] = i + 1;
        }
    }
    rec.reverse();
    Ok(Word::new(rec))
}

/// Inverse of [`alpha`].
pub fn beta(w: &Word) -> Result<Tableau> {
    if !w.is_yamanouchi() {
        return precondition(format!("beta needs a Yamanouchi word, got {w}"));
    }
    let mut rows: Vec<Vec<usize>> = vec![vec![]; w.content().len()];
    for (l, &r) in w.letters.iter().rev().enumerate() {
        rows[r - 1].push(l + 1);
    }
    Tableau::from_rows(rows)
}

/// Semistandard fillings of `shape` with content `mu` and Yamanouchi word.
pub fn lr_tableaux(shape: &SkewShape, mu: &Partition) -> Vec<Tableau> {
    if mu.size() != shape.size() {
        return vec![];
    }
    fill_sstd(shape, mu.len(), Some(mu.parts()))
        .into_iter()
        .filter(|t| t.word().is_yamanouchi())
        .collect()
}

/// `N^{λ,μ}_ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    if nu.size() != lambda.size() + mu.size() || !lambda.is_contained_in(nu) || !mu.is_contained_in(nu) {
        return 0;
    }
    lr_tableaux(&SkewShape { outer: nu.clone(), inner: lambda.clone() }, mu).len()
}

/// The companion filling `T'` whose word is `α(β(w)')`.
pub fn tprime(t: &Tableau) -> Result<Tableau> {
    if !t.is_lr() {
        return precondition(format!("{t} is not a Littlewood-Richardson tableau"));
    }
    let b = beta(&t.word())?;
    let w2 = alpha(&b.transpose())?;
    let mut it = w2.letters.into_iter();
    let mut rows: Vec<Vec<usize>> = t.rows.iter().map(|r| vec![0; r.len()]).collect();
    for row in rows.iter_mut().rev() {
        for v in row.iter_mut() {
            *v = it.next().unwrap();
        }
    }
    Ok(Tableau { shape: t.shape.clone(), rows })
}

pub type Cell = (usize, usize);

/// `(i, j) ↦ (T(i, j), T'(i, j))`, listed in row-major order of the cells.
pub fn sigma_map(t: &Tableau) -> Result<Vec<(Cell, Cell)>> {
    let tp = tprime(t)?;
    let mu = Partition::trimmed(t.content());
    let map: Vec<(Cell, Cell)> = t
        .shape
        .cells()
        .into_iter()
        .map(|(i, j)| ((i, j), (t.get(i, j).unwrap(), tp.get(i, j).unwrap())))
        .collect();
    let mut image: Vec<Cell> = map.iter().map(|&(_, c)| c).collect();
    image.sort_unstable();
    let mut want = mu.cells();
    want.sort_unstable();
    if image != want {
        return precondition(format!("sigma map of {t} is not a bijection onto the cells of {mu}"));
    }
    Ok(map)
}

/// Distinct column heights `n_1 < … < n_s` with column counts `d_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnStructure {
    pub heights: Vec<usize>,
    pub multiplicities: Vec<usize>,
}

impl ColumnStructure {
    pub fn to_partition(&self) -> Partition {
        let mut cols = vec![];
        for (h, d) in self.heights.iter().zip(&self.multiplicities).rev() {
            cols.extend(std::iter::repeat(*h).take(*d));
        }
        Partition::trimmed(cols).conjugate()
    }
}

pub fn column_structure(lambda: &Partition) -> ColumnStructure {
    let cols = lambda.conjugate();
    let mut heights = vec![];
    let mut multiplicities = vec![];
    for &h in cols.parts().iter().rev() {
        if heights.last() == Some(&h) {
            *multiplicities.last_mut().unwrap() += 1;
        } else {
            heights.push(h);
            multiplicities.push(1);
        }
    }
    ColumnStructure { heights, multiplicities }
}

/// `λ` with its first `e` (maximal) columns removed.
pub fn mu_e(lambda: &Partition, e: usize) -> Result<Partition> {
    let cs = column_structure(lambda);
    let ds = cs.multiplicities.last().copied().unwrap_or(0);
    if e == 0 || e > ds {
        return precondition(format!("e = {e} must lie in 1..={ds} for {lambda}"));
    }
    let cols = lambda.conjugate();
    Ok(Partition::trimmed(cols.parts()[e..].to_vec()).conjugate())
}

/// `dim S_λ ℂⁿ` by the hook-content formula.
pub fn schur_dimension(lambda: &Partition, n: usize) -> u64 {
    if lambda.len() > n {
        return 0;
    }
    let conj = lambda.conjugate();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for (i, j) in lambda.cells() {
        num *= BigUint::from(n + j - i);
        den *= BigUint::from(lambda[i - 1] - j + conj[j - 1] - i + 1);
    }
    let q = num / den;
    if q.is_zero() {
        0
    } else {
        q.to_u64().expect("dimension overflow")
    }
}

/// Number of semistandard fillings of a skew shape with entries `≤ n`.
pub fn skew_dimension(shape: &SkewShape, n: usize) -> u64 {
    enumerate_sstd(shape, n).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn skew(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[5, 4, 2, 2]).conjugate(), p(&[4, 4, 2, 2, 1]));
    }

    #[test]
    fn sstd_counts() {
        assert_eq!(enumerate_sstd(&SkewShape::straight(p(&[2, 1])), 3).len(), 8);
        assert_eq!(enumerate_sstd(&SkewShape::straight(p(&[2, 2])), 4).len(), 20);
        assert!(enumerate_sstd(&SkewShape::straight(p(&[1, 1])), 1).is_empty());
    }

    #[test]
    fn sstd_order_is_column_word_lex() {
        let ts = enumerate_sstd(&SkewShape::straight(p(&[2, 1])), 3);
        let words: Vec<_> = ts.iter().map(|t| t.column_word()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert!(ts.iter().all(|t| t.is_sstd()));
    }

    #[test]
    fn std_tableaux() {
        let ts = enumerate_std(&p(&[2, 1]));
        assert_eq!(ts.len(), 2);
        assert!(ts.contains(&Tableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap()));
        assert!(ts.contains(&Tableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap()));
        assert_eq!(enumerate_std(&p(&[4])).len(), 1);
        assert_eq!(enumerate_std(&p(&[2, 2])).len(), 2);
    }

    #[test]
    fn reading_words() {
        let s = skew(&[3, 2, 1], &[2]);
        let t1 = Tableau::new(s.clone(), vec![vec![1], vec![1, 2], vec![3]]).unwrap();
        let t2 = Tableau::new(s, vec![vec![1], vec![1, 3], vec![2]]).unwrap();
        assert_eq!(t1.word().letters, vec![3, 1, 2, 1]);
        assert_eq!(t2.word().letters, vec![2, 1, 3, 1]);
        assert!(t1.word().is_yamanouchi());
        assert!(!t2.word().is_yamanouchi());
        assert!(Word::new(vec![]).is_yamanouchi());
        assert_eq!(t1.content(), vec![2, 1, 1]);
        let row = Tableau::from_rows(vec![vec![1, 1, 2]]).unwrap();
        assert_eq!(row.word().letters, vec![1, 1, 2]);
    }

    #[test]
    fn alpha_beta_example() {
        let t = Tableau::from_rows(vec![vec![1, 2, 4], vec![3]]).unwrap();
        let w = alpha(&t).unwrap();
        assert_eq!(w.letters, vec![1, 2, 1, 1]);
        assert_eq!(beta(&w).unwrap(), t);
        let col = Tableau::from_rows(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(alpha(&col).unwrap().letters, vec![3, 2, 1]);
        assert!(beta(&Word::new(vec![1, 2])).is_err());
        assert!(alpha(&Tableau::from_rows(vec![vec![1, 1]]).unwrap()).is_err());
    }

    #[test]
    fn lr_examples() {
        let ts = lr_tableaux(&skew(&[3, 2], &[2, 1]), &p(&[1, 1]));
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].rows, vec![vec![1], vec![2]]);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1, 1]), &p(&[3, 2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[2, 2])), 0);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), 0);
        assert_eq!(lr_tableaux(&skew(&[2, 1], &[1]), &p(&[1, 1])).len(), 1);
        assert_eq!(lr_tableaux(&skew(&[2, 1], &[1]), &p(&[2])).len(), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn tprime_example() {
        let t = Tableau::new(skew(&[3, 2], &[1]), vec![vec![1, 1], vec![1, 2]]).unwrap();
        let tp = tprime(&t).unwrap();
        assert_eq!(tp.rows, vec![vec![2, 1], vec![3, 1]]);
        assert_eq!(tp.word(), alpha(&beta(&t.word()).unwrap().transpose()).unwrap());
    }

    #[test]
    fn tprime_horizontal_strip() {
        // Reading order is right to left along the strip's columns.
        let t = Tableau::from_rows(vec![vec![1, 1, 1]]).unwrap();
        assert_eq!(tprime(&t).unwrap().rows, vec![vec![3, 2, 1]]);
    }

    #[test]
    fn sigma_example() {
        let t = Tableau::new(skew(&[3, 2], &[2, 1]), vec![vec![1], vec![2]]).unwrap();
        let s = sigma_map(&t).unwrap();
        assert_eq!(s, vec![((1, 3), (1, 1)), ((2, 2), (2, 1))]);
    }

    #[test]
    fn column_structures() {
        let l = p(&[5, 4, 2, 2]);
        let cs = column_structure(&l);
        assert_eq!(cs.heights, vec![1, 2, 4]);
        assert_eq!(cs.multiplicities, vec![1, 2, 2]);
        assert_eq!(cs.to_partition(), l);
        assert_eq!(mu_e(&p(&[3, 3]), 1).unwrap(), p(&[2, 2]));
        assert_eq!(mu_e(&l, 2).unwrap(), p(&[3, 2]));
        assert!(mu_e(&l, 3).is_err());
        assert!(mu_e(&l, 0).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(schur_dimension(&p(&[2, 2]), 4), 20);
        assert_eq!(schur_dimension(&p(&[1, 1, 1]), 5), 10);
        assert_eq!(schur_dimension(&p(&[1, 1, 1]), 2), 0);
        for h in 1..=3 {
            for k in 1..=3 {
                for n in 2..=5 {
                    let r = Partition::rectangle(h, k);
                    assert_eq!(
                        schur_dimension(&r, n),
                        enumerate_sstd(&SkewShape::straight(r.clone()), n).len() as u64
                    );
                }
            }
        }
    }

    #[test]
    fn subpartitions_of_square() {
        let subs = p(&[2, 2]).subpartitions();
        assert_eq!(subs.len(), 6);
        assert!(subs.contains(&Partition::empty()));
    }
}
