//! Multiplication maps between Schur modules of `V*` and the ideals of flag points.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::Mutex;

use crate::algebra::{add_to, axpy, intersect, RowSpace, SparseVec, Q};
use crate::apolarity::{apolar_piece_ambient, catalecticant_rank};
use crate::combinatorics::{lr_tableaux, sigma_map, Partition, SkewShape, Tableau};
use crate::error::{precondition, Result};
use crate::points::{annihilator_chain, flag_tensor, FlagPoint};
use crate::schur::{
    antisymmetrize_to_keys, col_antisymmetrize, row_symmetrize, schur_data, symmetrize_to_ambient, AmbientElement, Idx,
    Key, Layout, WordTensor,
};

/// Degree-`ν` part of an ideal, as dual elements in wedge coordinates.
#[derive(Debug, Clone)]
pub struct IdealPiece {
    pub points: Vec<FlagPoint>,
    pub nu: Partition,
    pub basis: Vec<AmbientElement>,
}

impl IdealPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn space(&self) -> RowSpace<Key> {
        RowSpace::from_vectors(self.basis.iter().map(|b| &b.terms))
    }
}

/// Position of each cell under the column-first filling.
fn positions(shape: &SkewShape) -> HashMap<(usize, usize), usize> {
    shape.column_first_cells().into_iter().enumerate().map(|(p, c)| (c, p)).collect()
}

/// Placement data for `M^{λ,μ}_{ν,T}`: where each factor's letters go in `ν`.
struct Placement {
    lam_layout: Layout,
    mu_layout: Layout,
    nu_layout: Layout,
    /// `(λ position, ν position)`.
    from_lam: Vec<(usize, usize)>,
    /// `(μ position, ν position)` along `σ_T`.
    from_mu: Vec<(usize, usize)>,
}

impl Placement {
    fn new(lambda: &Partition, mu: &Partition, nu: &Partition, t: &Tableau) -> Result<Self> {
        let want = SkewShape { outer: nu.clone(), inner: lambda.clone() };
        if t.shape != want || !t.is_lr() || Partition::trimmed(t.content()) != *mu {
            return precondition(format!("{t} is not a Littlewood-Richardson tableau of shape {want} and content {mu}"));
        }
        let lam_shape = SkewShape::straight(lambda.clone());
        let mu_shape = SkewShape::straight(mu.clone());
        let nu_shape = SkewShape::straight(nu.clone());
        let (pl, pm, pn) = (positions(&lam_shape), positions(&mu_shape), positions(&nu_shape));
        let from_lam = lambda.cells().into_iter().map(|c| (pl[&c], pn[&c])).collect();
        let from_mu = sigma_map(t)?.into_iter().map(|(c, s)| (pm[&s], pn[&c])).collect();
        Ok(Placement {
            lam_layout: Layout::new(&lam_shape),
            mu_layout: Layout::new(&mu_shape),
            nu_layout: Layout::new(&nu_shape),
            from_lam,
            from_mu,
        })
    }

    /// `b_ν` of the row-wise products of `g` and the `σ_T`-rearranged `a_μ(h)`.
    fn multiply(&self, g: &SparseVec<Key>, h: &SparseVec<Key>) -> SparseVec<Key> {
        let gw = col_antisymmetrize(&self.lam_layout, &g.iter().map(|(k, c)| (k.concat(), c.clone())).collect());
        let hw = row_symmetrize(
            &self.mu_layout,
            &col_antisymmetrize(&self.mu_layout, &h.iter().map(|(k, c)| (k.concat(), c.clone())).collect()),
        );
        let mut words: SparseVec<Vec<Idx>> = SparseVec::new();
        let mut buf: Vec<Idx> = vec![0; self.nu_layout.d];
        for (a, x) in &gw {
            for &(s, t) in &self.from_lam {
                buf[t] = a[s];
            }
            for (b, y) in &hw {
                for &(s, t) in &self.from_mu {
                    buf[t] = b[s];
                }
                add_to(&mut words, buf.clone(), x * y);
            }
        }
        antisymmetrize_to_keys(&self.nu_layout, &row_symmetrize(&self.nu_layout, &words))
    }
}

/// `M^{λ,μ}_{ν,T}(g ⊗ h)` for dual elements `g ∈ S_λV*`, `h ∈ S_μV*`.
///
/// The first factor is placed on the cells of `λ ⊂ ν`; the second is row
/// symmetrized on `μ`, moved to `ν/λ` along `σ_T`, and the result is
/// symmetrized by `c_ν`. The overall scalar is not normalized.
pub fn multiplication_map(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    t: &Tableau,
    g: &AmbientElement,
    h: &AmbientElement,
) -> Result<AmbientElement> {
    if g.lambda != *lambda || h.lambda != *mu || g.n != h.n {
        return precondition("factor shapes do not match the multiplication map");
    }
    let pl = Placement::new(lambda, mu, nu, t)?;
    Ok(AmbientElement { lambda: nu.clone(), n: g.n, dual: true, terms: pl.multiply(&g.terms, &h.terms) })
}

/// `M_T(r_a ⊗ r_b)` for the reduced basis rows `r_a`, `r_b`, in coordinates
/// of the reduced basis of `S_ν`.
type StructureTable = Vec<Vec<SparseVec<usize>>>;

type StructureKey = (Partition, Partition, Partition, Tableau, usize);

static STRUCTURE_CACHE: Lazy<Mutex<HashMap<StructureKey, Arc<StructureTable>>>> = Lazy::new(Default::default);

fn structure_table(lambda: &Partition, mu: &Partition, nu: &Partition, t: &Tableau, n: usize) -> Arc<StructureTable> {
    let key = (lambda.clone(), mu.clone(), nu.clone(), t.clone(), n);
    if let Some(s) = STRUCTURE_CACHE.lock().get(&key) {
        return s.clone();
    }
    let pl = Placement::new(lambda, mu, nu, t).expect("LR tableau");
    let (dl, dm, dn) = (schur_data(lambda, n), schur_data(mu, n), schur_data(nu, n));
    let pivot_index: HashMap<&Key, usize> = dn.space.pivots().iter().enumerate().map(|(i, k)| (k, i)).collect();
    let table: StructureTable = dl
        .space
        .rows()
        .iter()
        .map(|a| {
            dm.space
                .rows()
                .iter()
                .map(|b| {
                    let prod = pl.multiply(a, b);
                    debug_assert!(dn.space.contains(&prod));
                    prod.iter()
                        .filter_map(|(k, x)| pivot_index.get(k).map(|&i| (i, x.clone())))
                        .collect()
                })
                .collect()
        })
        .collect();
    let table = Arc::new(table);
    STRUCTURE_CACHE.lock().entry(key).or_insert(table).clone()
}

/// Coordinates of `Sym^m W^⊥` inside `S_(m)V*`, one vector per monomial in a
/// basis of `W^⊥`.
fn sym_power(ann: &[Vec<Q>], m: usize, n: usize) -> Vec<SparseVec<usize>> {
    let mu = Partition::new(vec![m]).unwrap();
    let data = schur_data(&mu, n);
    let r = ann.len();
    let mut out: Vec<Vec<Q>> = vec![];
    let mut idx = vec![0usize; m];
    if r == 0 {
        return vec![];
    }
    loop {
        // tensor product of the chosen kernel vectors
        let mut terms: Vec<(Vec<Idx>, Q)> = vec![(vec![], Q::one())];
        for &i in &idx {
            let mut next = vec![];
            for (w, c) in &terms {
                for (j, x) in ann[i].iter().enumerate() {
                    if !x.is_zero() {
                        let mut w2 = w.clone();
                        w2.push(j as Idx + 1);
                        next.push((w2, c * x));
                    }
                }
            }
            terms = next;
        }
        let mut wt = WordTensor::zero(m, n);
        for (w, c) in terms {
            add_to(&mut wt.terms, w, c);
        }
        let e = symmetrize_to_ambient(&mu, &wt, true).expect("sized word");
        out.push(data.space.coordinates(&e.terms).expect("symmetric power lies in the module"));
        // next multiset
        let Some(p) = (0..m).rev().find(|&p| idx[p] + 1 < r) else { break };
        let v = idx[p] + 1;
        for x in idx[p..].iter_mut() {
            *x = v;
        }
    }
    out.into_iter()
        .map(|c| c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
        .collect()
}

/// Generator spaces `(m_i, Sym^{m_i} W_i^⊥)` with `m_i = λ_{h_i + 1} + 1`.
fn generators(f: &FlagPoint) -> Vec<(usize, Vec<Vec<Q>>)> {
    let heights = crate::combinatorics::column_structure(&f.lambda).heights;
    annihilator_chain(f)
        .into_iter()
        .zip(heights)
        .map(|(ann, h)| (f.lambda[h] + 1, ann))
        .collect()
}

fn coords_to_ambient(nu: &Partition, n: usize, v: &SparseVec<usize>) -> AmbientElement {
    let data = schur_data(nu, n);
    let mut terms = SparseVec::new();
    for (&i, c) in v {
        axpy(&mut terms, c, &data.space.rows()[i]);
    }
    AmbientElement { lambda: nu.clone(), n, dual: true, terms }
}

/// Computes the degree pieces of `I(p)` in reduced-basis coordinates.
struct IdealBuilder<'a> {
    point: &'a FlagPoint,
    iterate: bool,
    tensor: AmbientElement,
    generators: Vec<(usize, Vec<Vec<Q>>)>,
    pieces: BTreeMap<Partition, RowSpace<usize>>,
    gen_pieces: BTreeMap<Partition, RowSpace<usize>>,
}

impl<'a> IdealBuilder<'a> {
    fn new(point: &'a FlagPoint, iterate: bool) -> Result<Self> {
        Ok(IdealBuilder {
            point,
            iterate,
            tensor: flag_tensor(point)?,
            generators: generators(point),
            pieces: BTreeMap::new(),
            gen_pieces: BTreeMap::new(),
        })
    }

    /// Generators living in degree `nu`.
    fn generator_piece(&mut self, nu: &Partition) -> RowSpace<usize> {
        if let Some(s) = self.gen_pieces.get(nu) {
            return s.clone();
        }
        let n = self.point.n;
        let mut space = RowSpace::new();
        if nu.len() == 1 {
            for (m, ann) in &self.generators {
                if *m == nu[0] {
                    for v in sym_power(ann, *m, n) {
                        space.insert(&v);
                    }
                }
            }
        }
        self.gen_pieces.insert(nu.clone(), space.clone());
        space
    }

    /// `dim (p^⊥)_ν`, an upper bound for the ideal piece.
    fn bound(&self, nu: &Partition) -> usize {
        let n = self.point.n;
        let dim = schur_data(nu, n).dim();
        if nu.is_contained_in(&self.point.lambda) && nu.len() < n {
            dim - catalecticant_rank(&self.tensor, nu).expect("valid catalecticant")
        } else {
            dim
        }
    }

    fn piece(&mut self, nu: &Partition) -> RowSpace<usize> {
        if let Some(s) = self.pieces.get(nu) {
            return s.clone();
        }
        let n = self.point.n;
        let mut space = self.generator_piece(nu);
        if nu.len() > n || nu.is_empty() {
            self.pieces.insert(nu.clone(), space.clone());
            return space;
        }
        let bound = self.bound(nu);
        let subs: Vec<Partition> =
            nu.subpartitions().into_iter().filter(|k| !k.is_empty() && k != nu && k.len() <= n).collect();
        'outer: for kappa in &subs {
            if space.dim() >= bound {
                break;
            }
            let source = if self.iterate { self.piece(kappa) } else { self.generator_piece(kappa) };
            if source.dim() == 0 {
                continue;
            }
            let d = nu.size() - kappa.size();
            for mu in Partition::all_of_size(d) {
                if mu.len() > n || !mu.is_contained_in(nu) {
                    continue;
                }
                let dm = schur_data(&mu, n).dim();
                // ideal element on the left
                for t in lr_tableaux(&SkewShape { outer: nu.clone(), inner: kappa.clone() }, &mu) {
                    let table = structure_table(kappa, &mu, nu, &t, n);
                    for row in source.rows() {
                        for b in 0..dm {
                            let mut v = SparseVec::new();
                            for (&a, c) in row {
                                axpy(&mut v, c, &table[a][b]);
                            }
                            space.insert(&v);
                            if space.dim() >= bound {
                                break 'outer;
                            }
                        }
                    }
                }
                // ideal element on the right
                for t in lr_tableaux(&SkewShape { outer: nu.clone(), inner: mu.clone() }, kappa) {
                    let table = structure_table(&mu, kappa, nu, &t, n);
                    for row in source.rows() {
                        for a in 0..dm {
                            let mut v = SparseVec::new();
                            for (&b, c) in row {
                                axpy(&mut v, c, &table[a][b]);
                            }
                            space.insert(&v);
                            if space.dim() >= bound {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        self.pieces.insert(nu.clone(), space.clone());
        space
    }
}

/// `I(p)_ν` for the flag point `F`.
///
/// With `iterate` the piece is the span of all products `M_T(g ⊗ h)` and
/// `M_T(h ⊗ g)` with `g` in any lower ideal piece (closed recursively by
/// degree); without it only generators are multiplied.
pub fn ideal_piece(f: &FlagPoint, nu: &Partition, iterate: bool) -> Result<IdealPiece> {
    if nu.len() >= f.n {
        return precondition(format!("{nu} needs fewer than {} rows", f.n));
    }
    let mut b = IdealBuilder::new(f, iterate)?;
    let space = b.piece(nu);
    let basis = space.rows().iter().map(|v| coords_to_ambient(nu, f.n, v)).collect();
    Ok(IdealPiece { points: vec![f.clone()], nu: nu.clone(), basis })
}

/// `I(p_1, …, p_r)_ν = ⋂ I(p_i)_ν`.
pub fn ideal_intersection(points: &[FlagPoint], nu: &Partition) -> Result<IdealPiece> {
    let mut spaces = vec![];
    for p in points {
        let piece = ideal_piece(p, nu, true)?;
        spaces.push(piece.basis.into_iter().map(|b| b.terms).collect::<Vec<_>>());
    }
    let n = points.first().map_or(0, |p| p.n);
    let basis = intersect(&spaces)
        .into_iter()
        .map(|terms| AmbientElement { lambda: nu.clone(), n, dual: true, terms })
        .collect();
    Ok(IdealPiece { points: points.to_vec(), nu: nu.clone(), basis })
}

/// `I(p)_λ = (p^⊥)_λ`, checked by inclusion both ways.
pub fn verify_top_degree(f: &FlagPoint) -> Result<bool> {
    let ideal = ideal_piece(f, &f.lambda, true)?.space();
    let apolar = RowSpace::from_vectors(
        apolar_piece_ambient(&flag_tensor(f)?, &f.lambda)?.iter().map(|a| &a.terms).collect::<Vec<_>>(),
    );
    Ok(ideal.is_subspace_of(&apolar) && apolar.is_subspace_of(&ideal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;
    use crate::apolarity::apolar_contains;
    use crate::points::highest_weight_vector;
    use crate::schur::membership;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn dual_mono(l: &[usize], n: usize, cols: &[&[usize]]) -> AmbientElement {
        AmbientElement::monomial(&p(l), n, true, cols, q(1)).unwrap()
    }

    #[test]
    fn square_point_ideal() {
        let f = FlagPoint::coordinate(&p(&[2, 2]), 4).unwrap();
        let i1 = ideal_piece(&f, &p(&[1]), true).unwrap();
        assert_eq!(i1.dim(), 2);
        let s = i1.space();
        assert!(s.contains(&dual_mono(&[1], 4, &[&[3]]).terms));
        assert!(s.contains(&dual_mono(&[1], 4, &[&[4]]).terms));
        assert_eq!(ideal_piece(&f, &p(&[1, 1]), true).unwrap().dim(), 5);
        assert_eq!(ideal_piece(&f, &p(&[2]), true).unwrap().dim(), 7);
    }

    #[test]
    fn hook_point_ideal() {
        let f = FlagPoint::coordinate(&p(&[2, 1]), 3).unwrap();
        let i2 = ideal_piece(&f, &p(&[2]), true).unwrap();
        assert_eq!(i2.dim(), 4);
        let i11 = ideal_piece(&f, &p(&[1, 1]), true).unwrap();
        assert_eq!(i11.dim(), 2);
        let t = highest_weight_vector(&p(&[2, 1]), 3).unwrap();
        for g in i2.basis.iter().chain(&i11.basis) {
            assert!(apolar_contains(&t, g).unwrap());
        }
        assert!(verify_top_degree(&f).unwrap());
    }

    #[test]
    fn products_land_in_the_target_module() {
        let l = p(&[2, 1]);
        let m = p(&[1, 1]);
        let nu = p(&[3, 2]);
        let t = &lr_tableaux(&SkewShape { outer: nu.clone(), inner: l.clone() }, &m)[0];
        let g = dual_mono(&[2, 1], 5, &[&[1, 2], &[3]]).minus(&dual_mono(&[2, 1], 5, &[&[2, 3], &[1]]));
        let h = dual_mono(&[1, 1], 5, &[&[4, 5]]);
        let out = multiplication_map(&l, &m, &nu, t, &g, &h).unwrap();
        assert!(!out.is_zero());
        assert!(membership(&nu, &out));
        let zero = AmbientElement::zero(m.clone(), 5, true);
        assert!(multiplication_map(&l, &m, &nu, t, &g, &zero).unwrap().is_zero());
    }
}
