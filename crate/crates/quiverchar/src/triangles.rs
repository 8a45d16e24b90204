//! Concrete exchange-triangle data.
//!
//! Three shapes of triangle occur:
//!
//! - module extensions N -> L -> M from an Ext^1 cocycle, with L the block
//!   pushout construction;
//! - Hom(M, I) triangles I[-1] -> mt -> M with mt = Ker eps + (Coker eps)[-1];
//! - Hom(P, M) triangles M -> mt -> P[1] with mt = Coker eta + (Ker eta)[1];
//! - eta: N -> tau M triangles M -> Ker eta + A + I[-1] -> N, where
//!   Coker eta = tau A + I.
//!
//! All of them expose the same interface for the stratification map psi:
//! a middle module with an incoming and an outgoing map; psi sends a
//! submodule L0 to (image under the outgoing map, preimage under the
//! incoming map).

use crate::field_linalg::FpMatrix;
use crate::quiver::{dim_sub, DimVec, Quiver};
use crate::rep::translate::{
    injective_split, path_algebra, tau_inverse_transport, PathAlgebra, TauData,
};
use crate::rep::{cokernel_of, hom_basis, kernel_of, ModuleMap, Rep};

/// An Ext^1(M, N) cochain: one matrix per arrow, xi_a: M_i -> N_j for a: i -> j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtCocycle {
    pub blocks: Vec<FpMatrix>,
}

impl ExtCocycle {
    pub fn zero(q: &Quiver, p: u32, m: &Rep, n: &Rep) -> ExtCocycle {
        let blocks = q
            .arrows()
            .iter()
            .map(|&(s, t)| FpMatrix::zeros(p, n.dim()[t], m.dim()[s]))
            .collect();
        ExtCocycle { blocks }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn add(&self, other: &ExtCocycle) -> ExtCocycle {
        ExtCocycle {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> ExtCocycle {
        ExtCocycle { blocks: self.blocks.iter().map(|b| b.scale(c)).collect() }
    }
}

/// The cochain model of Ext^1(M, N): coboundary image and a set of coset
/// representatives whose F_p-combinations enumerate Ext^1 exactly once each.
#[derive(Debug, Clone)]
pub struct ExtSpace {
    pub cochain_dim: usize,
    pub coboundary_rank: usize,
    pub class_reps: Vec<ExtCocycle>,
}

impl ExtSpace {
    pub fn dim(&self) -> usize {
        self.class_reps.len()
    }

    /// All p^{dim} classes, the zero class first.
    pub fn enumerate_classes(&self, q: &Quiver, p: u32, m: &Rep, n: &Rep) -> Vec<ExtCocycle> {
        let mut out = Vec::with_capacity((p as usize).pow(self.dim() as u32));
        let mut coeffs = vec![0u32; self.dim()];
        'outer: loop {
            let mut xi = ExtCocycle::zero(q, p, m, n);
            for (k, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    xi = xi.add(&self.class_reps[k].scale(c));
                }
            }
            out.push(xi);
            for k in 0..coeffs.len() {
                coeffs[k] += 1;
                if coeffs[k] < p {
                    continue 'outer;
                }
                coeffs[k] = 0;
            }
            break;
        }
        out
    }
}

/// Cochain space with the coboundary map phi -> (N_a phi_i - phi_j M_a)_a;
/// coset representatives are standard basis cochains complementing Im(delta).
pub fn ext_space(q: &Quiver, m: &Rep, n: &Rep) -> ExtSpace {
    let p = m.modulus();
    let nv = q.vertex_count();
    let arrow_offsets: Vec<usize> = {
        let mut acc = 0;
        q.arrows()
            .iter()
            .map(|&(s, t)| {
                let o = acc;
                acc += n.dim()[t] * m.dim()[s];
                o
            })
            .collect()
    };
    let cochain_dim: usize = q.arrows().iter().map(|&(s, t)| n.dim()[t] * m.dim()[s]).sum();
    let c0_dim: usize = (0..nv).map(|v| n.dim()[v] * m.dim()[v]).sum();
    // columns = delta of the standard basis of C^0
    let mut delta = FpMatrix::zeros(p, cochain_dim, c0_dim);
    let mut col = 0;
    for v in 0..nv {
        for r in 0..n.dim()[v] {
            for c in 0..m.dim()[v] {
                // phi = E_{r,c} at vertex v
                for (a, &(s, t)) in q.arrows().iter().enumerate() {
                    // (N_a phi_s)_{i,j} contributes when s == v: N_a[., r] row c
                    if s == v {
                        let na = n.map(a);
                        for i in 0..n.dim()[t] {
                            let coeff = na.get(i, r);
                            if coeff != 0 {
                                let idx = arrow_offsets[a] + i * m.dim()[s] + c;
                                let cur = delta.get(idx, col);
                                delta.set(idx, col, (cur + coeff) % p);
                            }
                        }
                    }
                    // -(phi_t M_a)_{i,j} contributes when t == v: row r, M_a[c, .]
                    if t == v {
                        let ma = m.map(a);
                        for j in 0..m.dim()[s] {
                            let coeff = ma.get(c, j);
                            if coeff != 0 {
                                let idx = arrow_offsets[a] + r * m.dim()[s] + j;
                                let cur = delta.get(idx, col);
                                delta.set(idx, col, (cur + p - coeff) % p);
                            }
                        }
                    }
                }
                col += 1;
            }
        }
    }
    let (_, rank, pivots) = delta.transpose().rref();
    let class_reps: Vec<ExtCocycle> = (0..cochain_dim)
        .filter(|k| !pivots.contains(k))
        .map(|k| {
            let mut xi = ExtCocycle::zero(q, p, m, n);
            // locate the arrow block containing flat index k
            for (a, &(s, t)) in q.arrows().iter().enumerate() {
                let sz = n.dim()[t] * m.dim()[s];
                if k >= arrow_offsets[a] && k < arrow_offsets[a] + sz {
                    let off = k - arrow_offsets[a];
                    xi.blocks[a].set(off / m.dim()[s], off % m.dim()[s], 1);
                    break;
                }
            }
            xi
        })
        .collect();
    ExtSpace { cochain_dim, coboundary_rank: rank, class_reps }
}

/// Triangle data exposing the middle term and the two maps used by psi.
/// Shift parts (injective I[-1] or projective P[1] multiplicities) are
/// carried alongside the module part.
#[derive(Debug, Clone)]
pub struct TriangleData {
    pub middle: Rep,
    /// F of the incoming map X -> mt (psi takes preimages along this).
    pub i_map: ModuleMap,
    /// Source of `i_map`.
    pub i_src: Rep,
    /// F of the outgoing map mt -> Y (psi takes images along this).
    pub p_map: ModuleMap,
    /// Target of `p_map`.
    pub p_tgt: Rep,
    /// Multiplicities of I_j[-1] summands of the middle object.
    pub inj_shift: Vec<usize>,
    /// Multiplicities of P_j[1] summands of the middle object.
    pub proj_shift: Vec<usize>,
}

impl TriangleData {
    /// Dimension vector of the injective shift part.
    pub fn shift_inj_dim(&self, q: &Quiver) -> DimVec {
        let pa = path_algebra(q);
        let n = q.vertex_count();
        (0..n)
            .map(|v| {
                (0..n).map(|j| self.inj_shift[j] as i64 * pa.between(v, j).len() as i64).sum()
            })
            .collect()
    }
}

/// Middle term of a module extension: L_v = N_v + M_v with arrow blocks
/// [[N_a, xi_a], [0, M_a]]; i and p are the block inclusion and projection.
pub fn middle_term(q: &Quiver, m: &Rep, n: &Rep, xi: &ExtCocycle) -> TriangleData {
    let p = m.modulus();
    let nv = q.vertex_count();
    let dim: Vec<usize> = (0..nv).map(|v| n.dim()[v] + m.dim()[v]).collect();
    let maps: Vec<FpMatrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let mut blk = FpMatrix::zeros(p, dim[t], dim[s]);
            let (na, ma, xa) = (n.map(a), m.map(a), &xi.blocks[a]);
            for r in 0..na.rows() {
                for c in 0..na.cols() {
                    blk.set(r, c, na.get(r, c));
                }
            }
            for r in 0..xa.rows() {
                for c in 0..xa.cols() {
                    blk.set(r, n.dim()[s] + c, xa.get(r, c));
                }
            }
            for r in 0..ma.rows() {
                for c in 0..ma.cols() {
                    blk.set(n.dim()[t] + r, n.dim()[s] + c, ma.get(r, c));
                }
            }
            blk
        })
        .collect();
    let middle = Rep::new(q, p, dim.clone(), maps).expect("block construction is consistent");
    let i_blocks: Vec<FpMatrix> = (0..nv)
        .map(|v| {
            let mut b = FpMatrix::zeros(p, dim[v], n.dim()[v]);
            for r in 0..n.dim()[v] {
                b.set(r, r, 1);
            }
            b
        })
        .collect();
    let p_blocks: Vec<FpMatrix> = (0..nv)
        .map(|v| {
            let mut b = FpMatrix::zeros(p, m.dim()[v], dim[v]);
            for r in 0..m.dim()[v] {
                b.set(r, n.dim()[v] + r, 1);
            }
            b
        })
        .collect();
    TriangleData {
        middle,
        i_map: ModuleMap::new(i_blocks),
        i_src: n.clone(),
        p_map: ModuleMap::new(p_blocks),
        p_tgt: m.clone(),
        inj_shift: vec![0; nv],
        proj_shift: vec![0; nv],
    }
}

/// Does the extension split? Equivalent to the class of xi being zero:
/// a section s: M -> L with p . s = id exists iff the triangle splits.
pub fn splits(q: &Quiver, tri: &TriangleData) -> bool {
    let m = &tri.p_tgt;
    let basis = hom_basis(q, m, &tri.middle).expect("same field");
    // solve p . s = id over the hom space
    let p = m.modulus();
    let id = ModuleMap::identity(m);
    let flatten = |mm: &ModuleMap| -> Vec<u32> {
        let mut v = Vec::new();
        for b in mm.blocks() {
            for r in 0..b.rows() {
                v.extend_from_slice(b.row(r));
            }
        }
        v
    };
    let rhs = flatten(&id);
    let mut sys = FpMatrix::zeros(p, rhs.len(), basis.len());
    for (k, h) in basis.iter().enumerate() {
        let col = flatten(&tri.p_map.compose(h));
        for (r, &val) in col.iter().enumerate() {
            sys.set(r, k, val);
        }
    }
    sys.solve(&rhs).is_some()
}

/// Analysis of eta: N -> tau M. Produces kernel, cokernel, the module A with
/// Coker eta = tau A + I, and the psi triangle M -> A + D -> N.
#[derive(Debug, Clone)]
pub struct EtaAnalysis {
    /// D = Ker eta with its inclusion into N.
    pub d: Rep,
    pub d_inc: ModuleMap,
    /// C = Coker eta.
    pub coker: Rep,
    /// A = tau^{-1}(Coker eta).
    pub a: Rep,
    /// Multiplicities of the injective part I of Coker eta.
    pub inj_mult: Vec<usize>,
    /// dim I.
    pub i_dim: DimVec,
    /// The psi triangle with middle module A + D.
    pub tri: TriangleData,
}

/// Requires the tau data of M (for the transport of Coker eta back to M).
pub fn eta_analysis(
    q: &Quiver,
    pa: &PathAlgebra,
    td: &TauData,
    m: &Rep,
    n: &Rep,
    eta: &ModuleMap,
) -> EtaAnalysis {
    let p = m.modulus();
    let (d, d_inc) = kernel_of(q, eta, n, &td.tau);
    let (coker, rho) = cokernel_of(q, eta, n, &td.tau);
    let (a, p_prime) = tau_inverse_transport(q, pa, td, m, &rho, &coker);
    let (a_check, inj_mult) = injective_split(q, &coker).expect("cokernel splits");
    debug_assert_eq!(a.dim(), a_check.dim());
    let i_dim = {
        let ta = crate::rep::translate::raw_tau(q, pa, &a);
        dim_sub(&coker.dim_vec(), &ta.dim_vec())
    };
    // middle module A + D with i = (p', 0): M -> A + D and p = (0, inc): A + D -> N
    let (mid, incs, projs) = Rep::direct_sum(q, p, &[&a, &d]);
    let i_map = incs[0].compose(&p_prime); // M -> A + D via A
    let p_map = d_inc.compose(&projs[1]); // A + D -> N kills A, includes D
    debug_assert!(i_map.is_natural(q, m, &mid));
    debug_assert!(p_map.is_natural(q, &mid, n));
    debug_assert!(p_map.compose(&i_map).is_zero());
    // exactness bookkeeping: dim D - dim N + rank eta = 0 vertexwise
    debug_assert!((0..q.vertex_count())
        .all(|v| d.dim()[v] + eta.block(v).rank() == n.dim()[v]));
    let tri = TriangleData {
        middle: mid,
        i_map,
        i_src: m.clone(),
        p_map,
        p_tgt: n.clone(),
        inj_shift: inj_mult.clone(),
        proj_shift: vec![0; q.vertex_count()],
    };
    EtaAnalysis { d, d_inc, coker, a, inj_mult, i_dim, tri }
}

/// Triangle of eps: M -> I (I injective): mt = Ker eps + (Coker eps)[-1].
/// psi sees (M0, 0) iff M0 is contained in Ker eps.
pub fn hom_mi_triangle(q: &Quiver, m: &Rep, i_rep: &Rep, eps: &ModuleMap) -> TriangleData {
    let p = m.modulus();
    let (ker, ker_inc) = kernel_of(q, eps, m, i_rep);
    let (coker, _) = cokernel_of(q, eps, m, i_rep);
    let (a, inj_mult) = injective_split(q, &coker).expect("cokernel of a map into an injective");
    assert!(a.is_zero(), "cokernel of a map into an injective must be injective");
    let zero = Rep::zero(q, p);
    TriangleData {
        middle: ker.clone(),
        i_map: ModuleMap::zero(p, &zero, &ker),
        i_src: zero,
        p_map: ker_inc,
        p_tgt: m.clone(),
        inj_shift: inj_mult,
        proj_shift: vec![0; q.vertex_count()],
    }
}

/// Triangle of eta: P -> M (P projective): mt = Coker eta + (Ker eta)[1].
/// psi sees (0, M0) iff Im eta is contained in M0.
pub fn hom_pm_triangle(
    q: &Quiver,
    p_rep: &Rep,
    p_mult: &[usize],
    m: &Rep,
    eta: &ModuleMap,
) -> TriangleData {
    let p = m.modulus();
    let (ker, _) = kernel_of(q, eta, p_rep, m);
    let (coker, proj) = cokernel_of(q, eta, p_rep, m);
    // Ker eta is projective over a hereditary algebra; record its multiplicities
    let pa = path_algebra(q);
    let proj_dims: Vec<DimVec> = (0..q.vertex_count())
        .map(|i| (0..q.vertex_count()).map(|v| pa.between(i, v).len() as i64).collect())
        .collect();
    let mult = solve_multiplicities(&proj_dims, &ker.dim_vec())
        .expect("kernel of a map out of a projective must be projective");
    let _ = p_mult;
    let zero = Rep::zero(q, p);
    TriangleData {
        middle: coker.clone(),
        i_map: proj,
        i_src: m.clone(),
        p_map: ModuleMap::zero(p, &coker, &zero),
        p_tgt: zero,
        inj_shift: vec![0; q.vertex_count()],
        proj_shift: mult,
    }
}

fn solve_multiplicities(cols: &[DimVec], target: &DimVec) -> Option<Vec<usize>> {
    let n = target.len();
    let mut mat = crate::quiver::IMatrix::zeros(n, n);
    for (c, col) in cols.iter().enumerate() {
        for r in 0..n {
            *mat.at_mut(r, c) = col[r];
        }
    }
    let sol = mat.inverse_times(1)?.apply(target);
    sol.iter().all(|&x| x >= 0).then(|| sol.iter().map(|&x| x as usize).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{EulerData, Quiver};
    use crate::rep::translate::{injective, path_algebra, simple, tau_with_data};
    use crate::rep::{ext_dim, hom_basis, iso_test};

    fn a2() -> Quiver {
        Quiver::preset("a2").unwrap()
    }

    #[test]
    fn ext_space_dims() {
        let q = a2();
        let euler = EulerData::new(&q, 1).unwrap();
        let s1 = simple(&q, 3, 0);
        let s2 = simple(&q, 3, 1);
        let es = ext_space(&q, &s1, &s2);
        assert_eq!(es.dim(), 1);
        assert_eq!(es.dim(), ext_dim(&q, &euler, &s1, &s2));
        assert_eq!(ext_space(&q, &s2, &s1).dim(), 0);

        let kr = Quiver::preset("kronecker").unwrap();
        let s1 = simple(&kr, 2, 0);
        let s2 = simple(&kr, 2, 1);
        assert_eq!(ext_space(&kr, &s1, &s2).dim(), 2);
    }

    #[test]
    fn middle_term_split_and_nonsplit() {
        let q = a2();
        let s1 = simple(&q, 3, 0);
        let s2 = simple(&q, 3, 1);
        let zero = ExtCocycle::zero(&q, 3, &s1, &s2);
        let tri = middle_term(&q, &s1, &s2, &zero);
        assert!(splits(&q, &tri));
        let (sum, _, _) = Rep::direct_sum(&q, 3, &[&s1, &s2]);
        assert!(iso_test(&q, &tri.middle, &sum));

        let es = ext_space(&q, &s1, &s2);
        let tri = middle_term(&q, &s1, &s2, &es.class_reps[0]);
        assert!(!splits(&q, &tri));
        // nonsplit middle term is P1
        let p1 = crate::rep::translate::projective(&q, 3, 0);
        assert!(iso_test(&q, &tri.middle, &p1));
    }

    #[test]
    fn kronecker_basis_cocycle_middle() {
        let q = Quiver::preset("kronecker").unwrap();
        let s1 = simple(&q, 3, 0);
        let s2 = simple(&q, 3, 1);
        let es = ext_space(&q, &s1, &s2);
        let tri = middle_term(&q, &s1, &s2, &es.class_reps[0]);
        assert_eq!(tri.middle.dim(), &[1, 1]);
        let maps: Vec<u32> = (0..2).map(|a| tri.middle.map(a).get(0, 0)).collect();
        assert_eq!(maps.iter().filter(|&&x| x != 0).count(), 1);
    }

    #[test]
    fn eta_analysis_zero_map() {
        let q = a2();
        let pa = path_algebra(&q);
        let s1 = simple(&q, 3, 0);
        let s2 = simple(&q, 3, 1);
        let td = tau_with_data(&q, &pa, &s1);
        assert_eq!(td.tau.dim(), s2.dim());
        let eta = ModuleMap::zero(3, &s2, &td.tau);
        let ea = eta_analysis(&q, &pa, &td, &s1, &s2, &eta);
        assert_eq!(ea.d.dim(), s2.dim()); // D = N
        assert_eq!(ea.coker.dim(), td.tau.dim()); // C = tau M
        assert!(iso_test(&q, &ea.a, &s1)); // A = M
        assert_eq!(ea.inj_mult, vec![0, 0]);
    }

    #[test]
    fn eta_analysis_iso_of_simples() {
        let q = a2();
        let pa = path_algebra(&q);
        let s1 = simple(&q, 3, 0);
        let s2 = simple(&q, 3, 1);
        let td = tau_with_data(&q, &pa, &s1);
        let basis = hom_basis(&q, &s2, &td.tau).unwrap();
        assert_eq!(basis.len(), 1);
        let ea = eta_analysis(&q, &pa, &td, &s1, &s2, &basis[0]);
        assert!(ea.d.is_zero());
        assert!(ea.coker.is_zero());
        assert!(ea.a.is_zero());
        assert!(ea.tri.middle.is_zero());
    }

    #[test]
    fn hom_mi_triangle_a2() {
        let q = a2();
        let m = crate::rep::translate::projective(&q, 3, 0); // P1
        let i1 = injective(&q, 3, 0); // = S1
        let basis = hom_basis(&q, &m, &i1).unwrap();
        assert_eq!(basis.len(), 1);
        let tri = hom_mi_triangle(&q, &m, &i1, &basis[0]);
        assert_eq!(tri.middle.dim(), &[0, 1]); // Ker eps = S2
        assert_eq!(tri.inj_shift, vec![0, 0]); // Coker eps = 0
        let zero_eps = ModuleMap::zero(3, &m, &i1);
        let tri0 = hom_mi_triangle(&q, &m, &i1, &zero_eps);
        assert_eq!(tri0.middle.dim(), m.dim());
        assert_eq!(tri0.inj_shift, vec![1, 0]);
    }

    #[test]
    fn hom_mi_injective_embedding_edge() {
        // eps injective M -> I: mt = (I/M)[-1], no module part
        let q = a2();
        let s2 = simple(&q, 3, 1);
        let i2 = injective(&q, 3, 1); // dim (1,1)
        let basis = hom_basis(&q, &s2, &i2).unwrap();
        assert_eq!(basis.len(), 1);
        let tri = hom_mi_triangle(&q, &s2, &i2, &basis[0]);
        assert!(tri.middle.is_zero());
        assert_eq!(tri.inj_shift, vec![1, 0]); // I2/S2 = S1 = I1
    }

    #[test]
    fn kernel_containment_counts() {
        // #{eps in Hom(M, I) : M0 <= Ker eps} = p^{<m-e, i>} for every
        // submodule M0, brute force over all of Hom(M, I)
        let q = a2();
        let euler = EulerData::new(&q, 1).unwrap();
        for p in [2u32, 3] {
            let m = crate::rep::translate::projective(&q, p, 0);
            let i1 = injective(&q, p, 0);
            let basis = hom_basis(&q, &m, &i1).unwrap();
            let all: Vec<ModuleMap> = {
                let mut v = vec![ModuleMap::zero(p, &m, &i1)];
                for c in 1..p {
                    v.push(basis[0].scale(c));
                }
                v
            };
            for m0 in crate::grassmann::all_sub_reps(&q, &m) {
                let count = all
                    .iter()
                    .filter(|eps| {
                        let (ker, _) = kernel_of(&q, eps, &m, &i1);
                        // M0 <= Ker eps iff eps kills every basis row of M0
                        let _ = &ker;
                        (0..q.vertex_count()).all(|v| {
                            (0..m0.bases[v].rows()).all(|r| {
                                eps.block(v)
                                    .mul_vec(m0.bases[v].row(r))
                                    .iter()
                                    .all(|&x| x == 0)
                            })
                        })
                    })
                    .count();
                let me = crate::quiver::dim_sub(&m.dim_vec(), &m0.dim_vec());
                let expected = (p as usize).pow(euler.euler_form(&me, &[1, 0]) as u32);
                assert_eq!(count, expected, "p={p}, e={:?}", m0.dims());
            }
        }
    }

    #[test]
    fn image_containment_counts() {
        // #{eta in Hom(P, M) : Im eta <= M0} = p^{<p, e>}
        let q = a2();
        let euler = EulerData::new(&q, 1).unwrap();
        for p in [2u32, 3] {
            let p_rep = crate::rep::translate::projective(&q, p, 0); // P = P1
            let m = crate::rep::translate::projective(&q, p, 0);
            let basis = hom_basis(&q, &p_rep, &m).unwrap();
            let all: Vec<ModuleMap> = {
                let mut v = vec![ModuleMap::zero(p, &p_rep, &m)];
                for c in 1..p {
                    v.push(basis[0].scale(c));
                }
                v
            };
            for m0 in crate::grassmann::all_sub_reps(&q, &m) {
                let count = all
                    .iter()
                    .filter(|eta| {
                        (0..q.vertex_count()).all(|v| {
                            (0..eta.block(v).cols()).all(|c| {
                                let col: Vec<u32> =
                                    (0..eta.block(v).rows()).map(|r| eta.block(v).get(r, c)).collect();
                                m0.bases[v].row_space_contains(&col)
                            })
                        })
                    })
                    .count();
                let expected =
                    (p as usize).pow(euler.euler_form(&p_rep.dim_vec(), &m0.dim_vec()) as u32);
                assert_eq!(count, expected, "p={p}, e={:?}", m0.dims());
            }
        }
    }

    #[test]
    fn coset_shift_gives_isomorphic_middle() {
        // adding a coboundary to a cocycle does not change the middle term
        let q = a2();
        let s1 = simple(&q, 3, 0);
        let s2 = simple(&q, 3, 1);
        let es = ext_space(&q, &s1, &s2);
        let xi = &es.class_reps[0];
        // coboundaries of Hom-cochains phi: here C^0 = 0, so instead test on
        // a pair with nontrivial coboundary space: (P1, S2)
        let p1 = crate::rep::translate::projective(&q, 3, 0);
        let es2 = ext_space(&q, &p1, &s2);
        assert_eq!(es2.dim(), 0);
        assert!(es2.cochain_dim > 0, "nontrivial cochains, all coboundaries");
        // every cochain for (P1, S2) gives a split (hence isomorphic) middle
        let tri0 = middle_term(&q, &p1, &s2, &ExtCocycle::zero(&q, 3, &p1, &s2));
        let mut shifted = ExtCocycle::zero(&q, 3, &p1, &s2);
        shifted.blocks[0].set(0, 0, 2);
        let tri1 = middle_term(&q, &p1, &s2, &shifted);
        assert!(splits(&q, &tri0) && splits(&q, &tri1));
        assert!(iso_test(&q, &tri0.middle, &tri1.middle));
        let _ = xi;
    }

    #[test]
    fn hom_pm_triangle_a2() {
        let q = a2();
        let p2 = crate::rep::translate::projective(&q, 3, 1); // = S2
        let m = crate::rep::translate::projective(&q, 3, 0); // P1
        let basis = hom_basis(&q, &p2, &m).unwrap();
        assert_eq!(basis.len(), 1);
        let tri = hom_pm_triangle(&q, &p2, &[0, 1], &m, &basis[0]);
        assert_eq!(tri.middle.dim(), &[1, 0]); // Coker = S1
        assert_eq!(tri.proj_shift, vec![0, 0]); // Ker = 0
        let tri0 = hom_pm_triangle(&q, &p2, &[0, 1], &m, &ModuleMap::zero(3, &p2, &m));
        assert_eq!(tri0.middle.dim(), m.dim());
        assert_eq!(tri0.proj_shift, vec![0, 1]);
    }
}
