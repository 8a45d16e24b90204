//! Quiver Grassmannians: enumeration of subrepresentations, point counts,
//! counting polynomials by multi-prime Lagrange interpolation, and the
//! stratification map psi with its affine fibers.

use crate::field_linalg::{enumerate_subspaces, FpMatrix, Prime};
use crate::quiver::{DimVec, IMatrix, Quiver};
use crate::rep::Rep;
use crate::triangles::TriangleData;
use std::collections::HashMap;
use std::fmt;

/// A subrepresentation, stored as one canonical RREF row-basis per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubRep {
    pub bases: Vec<FpMatrix>,
}

impl SubRep {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.rows()).collect()
    }

    pub fn dim_vec(&self) -> DimVec {
        self.bases.iter().map(|b| b.rows() as i64).collect()
    }

    pub fn zero(q: &Quiver, p: u32, ambient: &Rep) -> SubRep {
        SubRep {
            bases: (0..q.vertex_count())
                .map(|v| FpMatrix::zeros(p, 0, ambient.dim()[v]))
                .collect(),
        }
    }

    pub fn full(q: &Quiver, p: u32, ambient: &Rep) -> SubRep {
        SubRep {
            bases: (0..q.vertex_count())
                .map(|v| FpMatrix::identity(p, ambient.dim()[v]))
                .collect(),
        }
    }
}

/// Is the subspace tuple arrow-stable in m?
pub fn is_stable(q: &Quiver, m: &Rep, sub: &SubRep) -> bool {
    q.arrows().iter().enumerate().all(|(a, &(s, t))| {
        let b = &sub.bases[s];
        (0..b.rows()).all(|r| {
            let img = m.map(a).mul_vec(b.row(r));
            sub.bases[t].row_space_contains(&img)
        })
    })
}

/// All subrepresentations of m, grouped by nothing; every dimension vector
/// at once. Vertices are processed in topological order and partial tuples
/// pruned as soon as an arrow with both endpoints assigned fails stability.
pub fn all_sub_reps(q: &Quiver, m: &Rep) -> Vec<SubRep> {
    let p = Prime::new(m.modulus()).expect("representation modulus is prime");
    let n = q.vertex_count();
    let order = q.topo_order().to_vec();
    // per-vertex candidate subspaces, all dimensions
    let candidates: Vec<Vec<FpMatrix>> = (0..n)
        .map(|v| {
            let d = m.dim()[v];
            (0..=d)
                .flat_map(|e| enumerate_subspaces(d, e, p).expect("e <= d"))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Option<FpMatrix>> = vec![None; n];
    fn stable_so_far(
        q: &Quiver,
        m: &Rep,
        chosen: &[Option<FpMatrix>],
        just_set: usize,
    ) -> bool {
        q.arrows().iter().enumerate().all(|(a, &(s, t))| {
            if s != just_set && t != just_set {
                return true;
            }
            let (Some(us), Some(ut)) = (&chosen[s], &chosen[t]) else { return true };
            (0..us.rows()).all(|r| {
                let img = m.map(a).mul_vec(us.row(r));
                ut.row_space_contains(&img)
            })
        })
    }
    fn rec(
        q: &Quiver,
        m: &Rep,
        order: &[usize],
        candidates: &[Vec<FpMatrix>],
        chosen: &mut Vec<Option<FpMatrix>>,
        out: &mut Vec<SubRep>,
        depth: usize,
    ) {
        if depth == order.len() {
            out.push(SubRep {
                bases: chosen.iter().map(|c| c.clone().unwrap()).collect(),
            });
            return;
        }
        let v = order[depth];
        for cand in &candidates[v] {
            chosen[v] = Some(cand.clone());
            if stable_so_far(q, m, chosen, v) {
                rec(q, m, order, candidates, chosen, out, depth + 1);
            }
        }
        chosen[v] = None;
    }
    rec(q, m, &order, &candidates, &mut chosen, &mut out, 0);
    out
}

/// Subrepresentations of a fixed dimension vector e; out-of-range e gives
/// the empty list.
pub fn sub_reps(q: &Quiver, m: &Rep, e: &[usize]) -> Vec<SubRep> {
    if e.iter().zip(m.dim()).any(|(&ev, &mv)| ev > mv) {
        return Vec::new();
    }
    all_sub_reps(q, m)
        .into_iter()
        .filter(|s| s.dims() == e)
        .collect()
}

pub fn count_gr(q: &Quiver, m: &Rep, e: &[usize]) -> usize {
    sub_reps(q, m, e).len()
}

/// Submodule counts bucketed by dimension vector.
pub fn gr_counts(q: &Quiver, m: &Rep) -> HashMap<Vec<usize>, usize> {
    let mut out = HashMap::new();
    for s in all_sub_reps(q, m) {
        *out.entry(s.dims()).or_insert(0) += 1;
    }
    out
}

/// Integer-matrix representation blueprint, reducible mod any prime.
#[derive(Debug, Clone)]
pub struct IntRep {
    pub dim: Vec<usize>,
    pub maps: Vec<IMatrix>,
}

impl IntRep {
    pub fn reduce(&self, q: &Quiver, p: u32) -> Rep {
        let maps = self
            .maps
            .iter()
            .map(|m| {
                let mut out = FpMatrix::zeros(p, m.rows(), m.cols());
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        let v = m.at(r, c).rem_euclid(p as i64) as u32;
                        out.set(r, c, v);
                    }
                }
                out
            })
            .collect();
        Rep::new(q, p, self.dim.clone(), maps).expect("blueprint shapes are consistent")
    }

}

/// Integer polynomial in q, low degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<i64>);

impl Poly {
    pub fn eval(&self, x: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().rposition(|&c| c != 0).unwrap_or(0)
    }

    fn trim(mut self) -> Poly {
        while self.0.len() > 1 && *self.0.last().unwrap() == 0 {
            self.0.pop();
        }
        self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 && !(self.0.len() == 1) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "q")?,
                1 => write!(f, "{c}*q")?,
                _ if c == 1 => write!(f, "q^{k}")?,
                _ => write!(f, "{c}*q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InterpError {
    TooFewPoints { needed: usize, got: usize },
    NonIntegral,
    HeldOutMismatch { prime: u32, expected: i64, got: i64 },
}

impl fmt::Display for InterpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InterpError::TooFewPoints { needed, got } => {
                write!(f, "need at least {needed} primes, got {got}")
            }
            InterpError::NonIntegral => write!(f, "interpolated coefficients are not integral"),
            InterpError::HeldOutMismatch { prime, expected, got } => write!(
                f,
                "not polynomial-count at this degree bound: held-out prime {prime} gives {got}, interpolation predicts {expected}"
            ),
        }
    }
}

impl std::error::Error for InterpError {}

/// Lagrange interpolation through (x_i, y_i) with exact rational arithmetic;
/// errors if any coefficient is non-integral.
pub fn interpolate_integer_poly(points: &[(i64, i64)]) -> Result<Poly, InterpError> {
    let n = points.len();
    assert!(n > 0);
    // Newton's divided differences over exact rationals
    #[derive(Clone, Copy)]
    struct Q(i128, i128);
    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 { a.abs() } else { gcd(b, a % b) }
    }
    fn norm(Q(mut a, mut b): Q) -> Q {
        if b < 0 {
            a = -a;
            b = -b;
        }
        let g = gcd(a, b).max(1);
        Q(a / g, b / g)
    }
    let add = |x: Q, y: Q| norm(Q(x.0 * y.1 + y.0 * x.1, x.1 * y.1));
    let mul = |x: Q, y: Q| norm(Q(x.0 * y.0, x.1 * y.1));
    let mut table: Vec<Q> = points.iter().map(|&(_, y)| Q(y as i128, 1)).collect();
    let mut coeffs_newton: Vec<Q> = vec![table[0]];
    for level in 1..n {
        for i in 0..n - level {
            let num = add(table[i + 1], Q(-table[i].0, table[i].1));
            let den = Q((points[i + level].0 - points[i].0) as i128, 1);
            table[i] = mul(num, Q(den.1, den.0));
        }
        coeffs_newton.push(table[0]);
    }
    // expand Newton form into monomial coefficients
    let mut poly: Vec<Q> = vec![Q(0, 1); n];
    let mut basis: Vec<Q> = vec![Q(0, 1); n]; // product (x - x_0)...(x - x_{k-1})
    basis[0] = Q(1, 1);
    let mut basis_len = 1;
    for (k, &c) in coeffs_newton.iter().enumerate() {
        for i in 0..basis_len {
            poly[i] = add(poly[i], mul(c, basis[i]));
        }
        if k + 1 < n {
            // multiply basis by (x - x_k)
            let xk = Q(points[k].0 as i128, 1);
            let mut next = vec![Q(0, 1); basis_len + 1];
            for i in 0..basis_len {
                next[i + 1] = add(next[i + 1], basis[i]);
                next[i] = add(next[i], mul(basis[i], Q(-xk.0, xk.1)));
            }
            basis_len += 1;
            basis[..basis_len].copy_from_slice(&next);
        }
    }
    let mut out = Vec::with_capacity(n);
    for q in &poly {
        let q = norm(*q);
        if q.1 != 1 {
            return Err(InterpError::NonIntegral);
        }
        out.push(i64::try_from(q.0).map_err(|_| InterpError::NonIntegral)?);
    }
    Ok(Poly(out).trim())
}

/// Counting polynomial of Gr_e(blueprint): interpolate |Gr_e(M mod p)| over
/// the first (degree bound + 1) primes, then check the remaining primes and
/// the integrality of all coefficients. The degree bound is <e, m-e>.
pub fn counting_polynomial(
    q: &Quiver,
    euler_e: &IMatrix,
    blueprint: &IntRep,
    e: &[usize],
    primes: &[u32],
) -> Result<Poly, InterpError> {
    let ev: DimVec = e.iter().map(|&x| x as i64).collect();
    let mv: DimVec = blueprint.dim.iter().map(|&x| x as i64).collect();
    let rest: DimVec = mv.iter().zip(&ev).map(|(m, e)| m - e).collect();
    let bound = euler_e.form(&ev, &rest).max(0) as usize;
    if primes.len() < bound + 1 {
        return Err(InterpError::TooFewPoints { needed: bound + 1, got: primes.len() });
    }
    let counts: Vec<(i64, i64)> = primes
        .iter()
        .map(|&p| {
            let m = blueprint.reduce(q, p);
            (p as i64, count_gr(q, &m, e) as i64)
        })
        .collect();
    let poly = interpolate_integer_poly(&counts[..bound + 1])?;
    for &(x, y) in &counts[bound + 1..] {
        let got = poly.eval(x);
        if got != y {
            return Err(InterpError::HeldOutMismatch { prime: x as u32, expected: got, got: y });
        }
    }
    Ok(poly)
}

/// psi of a submodule of the middle term: (image under p_map, preimage under
/// i_map), both re-canonicalized as RREF bases. The preimage is re-verified
/// arrow-stable.
pub fn psi_image(q: &Quiver, tri: &TriangleData, l0: &SubRep) -> (SubRep, SubRep) {
    debug_assert!(is_stable(q, &tri.middle, l0), "psi of a non-stable subspace tuple");
    let p = tri.middle.modulus();
    let n = q.vertex_count();
    // image under p_map: rows of basis mapped forward, re-reduced
    let img_bases: Vec<FpMatrix> = (0..n)
        .map(|v| {
            let cols = tri.p_tgt.dim()[v];
            let mut raw = FpMatrix::zeros(p, l0.bases[v].rows(), cols);
            for r in 0..l0.bases[v].rows() {
                let img = tri.p_map.block(v).mul_vec(l0.bases[v].row(r));
                for (c, &x) in img.iter().enumerate() {
                    raw.set(r, c, x);
                }
            }
            raw.row_space_basis()
        })
        .collect();
    // preimage under i_map: x with i_map(x) in rowspace(L0), from the kernel
    // of the stacked matrix [i_map | -L0^T]
    let pre_bases: Vec<FpMatrix> = (0..n)
        .map(|v| {
            let imap = tri.i_map.block(v); // mid_v x src_v
            let src = imap.cols();
            let l0t = l0.bases[v].transpose(); // mid_v x e_v
            let stacked = imap.hstack(&l0t.scale(p - 1));
            let ker = stacked.kernel_basis(); // (src_v + e_v) x k
            let mut raw = FpMatrix::zeros(p, ker.cols(), src);
            for c in 0..ker.cols() {
                for r in 0..src {
                    raw.set(c, r, ker.get(r, c));
                }
            }
            raw.row_space_basis()
        })
        .collect();
    let m0 = SubRep { bases: img_bases };
    let n0 = SubRep { bases: pre_bases };
    debug_assert!(is_stable(q, &tri.p_tgt, &m0), "psi image not arrow-stable");
    debug_assert!(is_stable(q, &tri.i_src, &n0), "psi preimage not arrow-stable");
    (m0, n0)
}

/// All submodules of the middle term mapping to exactly (m0, n0) under psi.
pub fn psi_fiber(q: &Quiver, tri: &TriangleData, m0: &SubRep, n0: &SubRep) -> Vec<SubRep> {
    all_sub_reps(q, &tri.middle)
        .into_iter()
        .filter(|l0| {
            let (im, pre) = psi_image(q, tri, l0);
            &im == m0 && &pre == n0
        })
        .collect()
}
