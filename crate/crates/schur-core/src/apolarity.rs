//! Skew-symmetric and Schur apolarity, catalecticant matrices and apolar pieces.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::{add_to, axpy, LabeledVector, RationalMatrix, SparseVec, Q};
use crate::combinatorics::{Partition, SkewShape, Tableau};
use crate::error::{precondition, Result};
use crate::schur::{all_keys, dual_basis, schur_data, skew_data, AmbientElement, Column, Key, SkewAmbientElement};

/// Contraction of `e_I` with `x_J`: `sign(R) · e_{I∖J}` when `J ⊆ I`, where `R`
/// holds the positions of `J` inside `I`.
pub fn contract_monomial(t: &[u8], s: &[u8]) -> Option<(Column, bool)> {
    let mut rest = Vec::with_capacity(t.len().saturating_sub(s.len()));
    let mut shift = 0usize;
    let mut a = 0;
    for (pos, &i) in t.iter().enumerate() {
        if a < s.len() && s[a] == i {
            shift += pos - a;
            a += 1;
        } else {
            rest.push(i);
        }
    }
    (a == s.len()).then_some((rest, shift % 2 == 1))
}

/// Bilinear extension of [`contract_monomial`] from `⋀^k V ⊗ ⋀^h V*` to `⋀^{k-h} V`.
pub fn skew_apolarity(t: &SparseVec<Column>, s: &SparseVec<Column>) -> Result<SparseVec<Column>> {
    let k = t.keys().next().map_or(0, |c| c.len());
    let h = s.keys().next().map_or(0, |c| c.len());
    if h > k && !t.is_empty() && !s.is_empty() {
        return precondition(format!("cannot contract a {k}-vector with a {h}-form"));
    }
    let mut out = SparseVec::new();
    for (ti, a) in t {
        for (sj, b) in s {
            if let Some((rest, neg)) = contract_monomial(ti, sj) {
                let x = a * b;
                add_to(&mut out, rest, if neg { -x } else { x });
            }
        }
    }
    Ok(out)
}

/// Column-wise contraction `S_λV ⊗ S_μV* → S_{λ/μ}V`.
///
/// When `μ ⊄ λ` the map is zero and the zero scalar (shape `∅/∅`) is returned.
pub fn schur_apolarity(f: &AmbientElement, g: &AmbientElement) -> Result<SkewAmbientElement> {
    if f.n != g.n {
        return precondition(format!("dimension mismatch: {} vs {}", f.n, g.n));
    }
    if !g.lambda.is_contained_in(&f.lambda) {
        let empty = SkewShape::straight(Partition::empty());
        return Ok(SkewAmbientElement::zero(empty, f.n, f.dual));
    }
    let shape = SkewShape::new(f.lambda.clone(), g.lambda.clone())?;
    let mut terms = SparseVec::new();
    for (fk, a) in &f.terms {
        'pairs: for (gk, b) in &g.terms {
            let mut key: Key = Vec::with_capacity(fk.len());
            let mut neg = false;
            for (c, fc) in fk.iter().enumerate() {
                match gk.get(c) {
                    Some(gc) => match contract_monomial(fc, gc) {
                        Some((rest, ng)) => {
                            neg ^= ng;
                            key.push(rest);
                        }
                        None => continue 'pairs,
                    },
                    None => key.push(fc.clone()),
                }
            }
            let x = a * b;
            add_to(&mut terms, key, if neg { -x } else { x });
        }
    }
    Ok(SkewAmbientElement { shape, n: f.n, dual: f.dual, terms })
}

/// `𝒞^{λ,μ}_f : S_μV* → S_{λ/μ}V` with rows indexed by every monomial of
/// `⋀_{λ'/μ'}V` and columns by the semistandard tableaux of shape `μ`.
#[derive(Debug, Clone)]
pub struct CatalecticantMatrix {
    pub f_shape: Partition,
    pub mu: Partition,
    pub n: usize,
    pub matrix: RationalMatrix<Key, Tableau>,
}

impl CatalecticantMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn skew_shape(&self) -> SkewShape {
        SkewShape { outer: self.f_shape.clone(), inner: self.mu.clone() }
    }

    /// Column `j` as a skew element.
    pub fn column(&self, j: usize) -> SkewAmbientElement {
        let mut terms = SparseVec::new();
        for (i, row) in self.matrix.rows.iter().enumerate() {
            if let Some(x) = row.get(&j) {
                terms.insert(self.matrix.row_labels[i].clone(), x.clone());
            }
        }
        SkewAmbientElement { shape: self.skew_shape(), n: self.n, dual: false, terms }
    }

    /// The same map with rows in coordinates of a basis of `S_{λ/μ}V`.
    pub fn module_matrix(&self) -> RationalMatrix<usize, Tableau> {
        let space = &skew_data(&self.skew_shape(), self.n).space;
        let labels = self.matrix.column_labels.clone();
        let mut m = RationalMatrix::zeros((0..space.dim()).collect(), labels);
        for j in 0..self.matrix.ncols() {
            let col = self.column(j);
            let coords = space.coordinates(&col.terms).expect("image lies in the skew module");
            for (i, x) in coords.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }
}

fn check_catalecticant(f: &AmbientElement, mu: &Partition) -> Result<()> {
    if f.is_zero() {
        return precondition("catalecticant of the zero tensor");
    }
    if mu.len() >= f.n {
        return precondition(format!("{mu} needs fewer than {} rows", f.n));
    }
    if !mu.is_contained_in(&f.lambda) {
        return precondition(format!("{mu} is not contained in {}", f.lambda));
    }
    Ok(())
}

pub fn catalecticant(f: &AmbientElement, mu: &Partition) -> Result<CatalecticantMatrix> {
    check_catalecticant(f, mu)?;
    let shape = SkewShape::new(f.lambda.clone(), mu.clone())?;
    let rows = all_keys(&shape.column_lengths(), f.n);
    let row_index: HashMap<&Key, usize> = rows.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let data = schur_data(mu, f.n);
    let mut m = RationalMatrix::zeros(rows.clone(), data.tableaux.clone());
    for (j, g) in dual_basis(mu, f.n).iter().enumerate() {
        let img = schur_apolarity(f, g)?;
        for (k, x) in img.terms {
            m.set(row_index[&k], j, x);
        }
    }
    Ok(CatalecticantMatrix { f_shape: f.lambda.clone(), mu: mu.clone(), n: f.n, matrix: m })
}

pub fn catalecticant_rank(f: &AmbientElement, mu: &Partition) -> Result<usize> {
    Ok(catalecticant(f, mu)?.rank())
}

/// Kernel of the catalecticant over the dual semistandard labels: `(f^⊥)_μ`.
pub fn apolar_piece(f: &AmbientElement, mu: &Partition) -> Result<Vec<LabeledVector<Tableau>>> {
    Ok(catalecticant(f, mu)?.matrix.kernel_basis())
}

/// `(f^⊥)_μ` as dual elements in wedge coordinates.
pub fn apolar_piece_ambient(f: &AmbientElement, mu: &Partition) -> Result<Vec<AmbientElement>> {
    let basis = dual_basis(mu, f.n);
    Ok(apolar_piece(f, mu)?
        .into_iter()
        .map(|v| {
            let mut terms = SparseVec::new();
            for (&j, c) in &v.entries {
                axpy(&mut terms, c, &basis[j].terms);
            }
            AmbientElement { lambda: mu.clone(), n: f.n, dual: true, terms }
        })
        .collect())
}

/// `φ(f ⊗ g) = 0`.
pub fn apolar_contains(f: &AmbientElement, g: &AmbientElement) -> Result<bool> {
    Ok(schur_apolarity(f, g)?.is_zero())
}

/// The generator of a rank-one catalecticant image.
pub fn image_generator(f: &AmbientElement, mu: &Partition) -> Result<SkewAmbientElement> {
    let c = catalecticant(f, mu)?;
    let r = c.rank();
    if r != 1 {
        return precondition(format!("catalecticant for {mu} has rank {r}, not 1"));
    }
    let j = (0..c.matrix.ncols()).find(|&j| c.matrix.rows.iter().any(|row| row.contains_key(&j))).unwrap();
    Ok(c.column(j))
}

/// Classical catalecticant of a form given by monomial exponents: the matrix
/// of `e`-th partial derivatives, rows the degree `d − e` monomials.
pub fn classical_catalecticant(form: &HashMap<Vec<usize>, Q>, n: usize, d: usize, e: usize) -> RationalMatrix<Vec<usize>, Vec<usize>> {
    let rows = exponents(n, d - e);
    let cols = exponents(n, e);
    let mut m = RationalMatrix::zeros(rows.clone(), cols.clone());
    let row_index: HashMap<&Vec<usize>, usize> = rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
    for (j, a) in cols.iter().enumerate() {
        for (mono, c) in form {
            if mono.iter().zip(a).any(|(m, a)| m < a) {
                continue;
            }
            let mut factor = Q::one();
            let rest: Vec<usize> = mono.iter().zip(a).map(|(m, a)| m - a).collect();
            for (&m, &a) in mono.iter().zip(a) {
                for t in 0..a {
                    factor *= Q::from_integer(((m - t) as i64).into());
                }
            }
            let i = row_index[&rest];
            let v = m.get(i, j) + c * factor;
            m.set(i, j, v);
        }
    }
    m
}

/// Exponent vectors of degree `d` in `n` variables, lexicographically decreasing.
pub fn exponents(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n - 1 {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=d).rev() {
            cur.push(a);
            rec(n, d - a, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    if n > 0 {
        rec(n, d, &mut vec![], &mut out);
    }
    out
}

/// Exponent vector of a word of indices.
pub fn word_exponent(word: &[u8], n: usize) -> Vec<usize> {
    let mut e = vec![0; n];
    for &i in word {
        e[i as usize - 1] += 1;
    }
    e
}

/// A symmetric element of `S_(d)` (one index per column) read as a form:
/// the coefficient of `x^a` is the sum over words of content `a`.
pub fn symmetric_to_form(f: &AmbientElement) -> HashMap<Vec<usize>, Q> {
    let mut out: HashMap<Vec<usize>, Q> = HashMap::new();
    for (k, c) in &f.terms {
        let w: Vec<u8> = k.iter().map(|col| col[0]).collect();
        *out.entry(word_exponent(&w, f.n)).or_insert_with(Q::zero) += c;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;
    use crate::points::highest_weight_vector;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn mono(l: &[usize], n: usize, dual: bool, cols: &[&[usize]]) -> AmbientElement {
        AmbientElement::monomial(&p(l), n, dual, cols, q(1)).unwrap()
    }

    fn col(v: &[u8]) -> SparseVec<Column> {
        [(v.to_vec(), q(1))].into_iter().collect()
    }

    #[test]
    fn skew_contractions() {
        let r = skew_apolarity(&col(&[1, 2]), &col(&[1])).unwrap();
        assert_eq!(r, col(&[2]));
        let r = skew_apolarity(&col(&[1, 2]), &col(&[2])).unwrap();
        assert_eq!(r, [(vec![1], q(-1))].into_iter().collect());
        let r = skew_apolarity(&col(&[1, 2, 3]), &col(&[1, 2, 3])).unwrap();
        assert_eq!(r, [(vec![], q(1))].into_iter().collect());
        assert!(skew_apolarity(&col(&[1, 2]), &col(&[3])).unwrap().is_empty());
        assert!(skew_apolarity(&col(&[1]), &col(&[1, 2])).is_err());
    }

    #[test]
    fn square_example() {
        let t = mono(&[2, 2], 3, false, &[&[1, 2], &[1, 3]]).plus(&mono(&[2, 2], 3, false, &[&[1, 3], &[1, 2]]));
        let s = mono(&[1, 1], 3, true, &[&[1, 2]]);
        let r = schur_apolarity(&t, &s).unwrap();
        let want: SparseVec<Key> = [(vec![vec![], vec![1, 3]], q(1))].into_iter().collect();
        assert_eq!(r.terms, want);
        let big = mono(&[3], 3, true, &[&[1], &[1], &[1]]);
        assert!(schur_apolarity(&t, &big).unwrap().is_zero());
    }

    #[test]
    fn hyperplane_in_top_degree() {
        let p21 = highest_weight_vector(&p(&[2, 1]), 3).unwrap();
        let ker = apolar_piece(&p21, &p(&[1])).unwrap();
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0].labeled_entries().len(), 1);
        let top = apolar_piece(&p21, &p(&[2, 1])).unwrap();
        assert_eq!(top.len(), 7);
        assert!(catalecticant(&AmbientElement::zero(p(&[2, 1]), 3, false), &p(&[1])).is_err());
    }

    #[test]
    fn table_one_shapes() {
        let hw = highest_weight_vector(&p(&[2, 2]), 4).unwrap();
        for (mu, r, rows, cols) in [(vec![1], 2, 20, 4), (vec![2], 3, 10, 10), (vec![1, 1], 1, 6, 6)] {
            let c = catalecticant(&hw, &p(&mu)).unwrap();
            assert_eq!(c.rank(), r);
            let m = c.module_matrix();
            assert_eq!((m.nrows(), m.ncols()), (rows, cols));
            assert_eq!(m.rank(), r);
        }
    }

    #[test]
    fn grassmann_image_generator() {
        let hw = highest_weight_vector(&p(&[3, 3]), 4).unwrap();
        let g = image_generator(&hw, &p(&[1, 1])).unwrap().to_straight().unwrap();
        let want = highest_weight_vector(&p(&[2, 2]), 4).unwrap();
        assert!(g.proportionality(&want).is_some());
    }
}
