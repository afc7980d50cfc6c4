//! Flag points: the tensors of structured rank one.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{add_to, dense_rank, determinant, q, DenseMatrix, RationalMatrix, RowSpace, SparseVec, Q};
use crate::combinatorics::{column_structure, Partition};
use crate::error::{precondition, Result, SchurError};
use crate::schur::{subsets, AmbientElement, Column, Key};

/// Nested subspaces `W_1 ⊂ … ⊂ W_s` of `ℚⁿ`, smallest first, each given by
/// generator rows. Their dimensions are the distinct column heights of `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlagPoint {
    pub n: usize,
    pub lambda: Partition,
    pub subspaces: Vec<DenseMatrix>,
}

fn row_vec(v: &[Q]) -> SparseVec<usize> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

impl FlagPoint {
    /// Validates dimensions, ranks and nesting.
    pub fn new(n: usize, lambda: Partition, subspaces: Vec<DenseMatrix>) -> Result<Self> {
        let f = FlagPoint { n, lambda, subspaces };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let heights = column_structure(&self.lambda).heights;
        if heights.len() != self.subspaces.len() {
            return precondition(format!(
                "{} needs {} subspaces, got {}",
                self.lambda,
                heights.len(),
                self.subspaces.len()
            ));
        }
        if heights.last().map_or(false, |&h| h > self.n) {
            return precondition(format!("{} does not fit in dimension {}", self.lambda, self.n));
        }
        let mut prev: Option<RowSpace<usize>> = None;
        for (w, &h) in self.subspaces.iter().zip(&heights) {
            if w.iter().any(|r| r.len() != self.n) {
                return Err(SchurError::Schema(format!("generator rows must have length {}", self.n)));
            }
            let space = RowSpace::from_vectors(&w.iter().map(|r| row_vec(r)).collect::<Vec<_>>());
            if space.dim() != h {
                return precondition(format!("subspace has dimension {}, expected {h}", space.dim()));
            }
            if let Some(p) = &prev {
                if !p.is_subspace_of(&space) {
                    return precondition("subspaces are not nested");
                }
            }
            prev = Some(space);
        }
        Ok(())
    }

    /// The coordinate flag `⟨e_1⟩ ⊂ ⟨e_1, e_2⟩ ⊂ …` matching `λ`.
    pub fn coordinate(lambda: &Partition, n: usize) -> Result<Self> {
        let vecs: Vec<Vec<Q>> = (0..n).map(|i| unit(n, i)).collect();
        Self::from_basis(lambda, n, &vecs)
    }

    /// Flag spanned by prefixes of `basis`: `W_i = ⟨basis[..h_i]⟩`.
    pub fn from_basis(lambda: &Partition, n: usize, basis: &[Vec<Q>]) -> Result<Self> {
        let heights = column_structure(lambda).heights;
        if heights.last().map_or(false, |&h| h > basis.len()) {
            return precondition("not enough basis vectors for the flag");
        }
        let subspaces = heights.iter().map(|&h| basis[..h].to_vec()).collect();
        FlagPoint::new(n, lambda.clone(), subspaces)
    }

    /// `v_1, …, v_{h_s}` with `W_i = ⟨v_1, …, v_{h_i}⟩`.
    pub fn adapted_basis(&self) -> Vec<Vec<Q>> {
        let mut space: RowSpace<usize> = RowSpace::new();
        let mut out = vec![];
        for w in &self.subspaces {
            for r in w {
                if space.insert(&row_vec(r)) {
                    out.push(r.clone());
                }
            }
        }
        out
    }

    /// Applies `g` to every generator.
    pub fn act(&self, g: &DenseMatrix) -> FlagPoint {
        let subspaces = self
            .subspaces
            .iter()
            .map(|w| {
                w.iter()
                    .map(|v| g.iter().map(|row| row.iter().zip(v).fold(Q::zero(), |a, (x, y)| a + x * y)).collect())
                    .collect()
            })
            .collect();
        FlagPoint { n: self.n, lambda: self.lambda.clone(), subspaces }
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()
}

/// `v_1 ∧ … ∧ v_l` in the monomial basis.
pub fn wedge(vectors: &[Vec<Q>], n: usize) -> Vec<(Column, Q)> {
    subsets(n, vectors.len())
        .into_iter()
        .filter_map(|cols| {
            let m: DenseMatrix =
                vectors.iter().map(|v| cols.iter().map(|&c| v[c as usize - 1].clone()).collect()).collect();
            let d = determinant(&m);
            (!d.is_zero()).then_some((cols, d))
        })
        .collect()
}

/// Tensor product of the wedges `v_1 ∧ … ∧ v_{λ'_c}` over the columns of `λ`.
pub fn flag_tensor(f: &FlagPoint) -> Result<AmbientElement> {
    f.validate()?;
    let basis = f.adapted_basis();
    let lens = f.lambda.conjugate();
    let mut partial: Vec<(Key, Q)> = vec![(vec![], Q::one())];
    for &l in lens.parts() {
        let w = wedge(&basis[..l], f.n);
        let mut next = vec![];
        for (k, x) in &partial {
            for (c, d) in &w {
                let mut k2 = k.clone();
                k2.push(c.clone());
                next.push((k2, x * d));
            }
        }
        partial = next;
    }
    let mut terms = SparseVec::new();
    for (k, x) in partial {
        add_to(&mut terms, k, x);
    }
    AmbientElement::new(f.lambda.clone(), f.n, false, terms)
}

/// Flag tensor of the coordinate flag.
pub fn highest_weight_vector(lambda: &Partition, n: usize) -> Result<AmbientElement> {
    if lambda.len() >= n {
        return precondition(format!("{lambda} needs fewer than {n} rows"));
    }
    flag_tensor(&FlagPoint::coordinate(lambda, n)?)
}

/// Bases of `W_i^⊥ ⊂ V*`, in the same order as the subspaces.
pub fn annihilator_chain(f: &FlagPoint) -> Vec<Vec<Vec<Q>>> {
    f.subspaces
        .iter()
        .map(|w| {
            let m = RationalMatrix::from_dense(w);
            let m = if w.is_empty() {
                RationalMatrix::zeros(vec![], (0..f.n).collect())
            } else {
                m
            };
            m.kernel_basis().into_iter().map(|v| v.dense()).collect()
        })
        .collect()
}

/// Deterministic pseudo-random flag with integer generators in `[-3, 3]`.
pub fn random_flag_point(lambda: &Partition, n: usize, seed: u64) -> Result<FlagPoint> {
    if lambda.len() >= n {
        return precondition(format!("{lambda} needs fewer than {n} rows"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = column_structure(lambda).heights.last().copied().unwrap_or(0);
    loop {
        let m: DenseMatrix = (0..h).map(|_| (0..n).map(|_| q(rng.gen_range(-3..=3))).collect()).collect();
        if dense_rank(&m) == h {
            return FlagPoint::from_basis(lambda, n, &m);
        }
    }
}

/// Deterministic pseudo-random invertible matrix with entries in `[-3, 3]`.
pub fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    loop {
        let m: DenseMatrix = (0..n).map(|_| (0..n).map(|_| q(rng.gen_range(-3..=3))).collect()).collect();
        if dense_rank(&m) == n {
            return m;
        }
    }
}
