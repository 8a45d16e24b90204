//! Representations of an acyclic quiver over F_p and their homological
//! calculus: Hom and Ext^1 spaces, kernels/cokernels/images of module maps,
//! simples/projectives/injectives, and the AR translates (in `translate`).
//!
//! Conventions are covariant: an arrow a: i -> j acts M_i -> M_j, so simple
//! projectives sit at sinks. This interlocks with E_ij = delta_ij - #{i->j}
//! and is frozen by the calibration suite.

pub mod translate;

pub use translate::{injective, injective_split, path_algebra, projective, simple, tau, tau_inverse, TranslateError};

use crate::field_linalg::FpMatrix;
use crate::quiver::{dims_to_i64, DimVec, EulerData, Quiver};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// A finite-dimensional representation: one F_p space per vertex, one matrix
/// per arrow (an arrow i -> j carries a dim_j x dim_i matrix).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rep {
    p: u32,
    dim: Vec<usize>,
    maps: Vec<FpMatrix>,
}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep(p={}, dim={:?})", self.p, self.dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    ShapeMismatch { arrow: usize, expected: (usize, usize), got: (usize, usize) },
    FieldMismatch,
    NotNatural { arrow: usize },
    Parse { line: usize, col: usize, msg: String },
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::ShapeMismatch { arrow, expected, got } => write!(
                f,
                "arrow {arrow}: matrix shape {got:?} does not match dimension vector (expected {expected:?})"
            ),
            RepError::FieldMismatch => write!(f, "representations live over different prime fields"),
            RepError::NotNatural { arrow } => {
                write!(f, "naturality square fails at arrow {arrow}")
            }
            RepError::Parse { line, col, msg } => {
                write!(f, "parse error at line {line}, column {col}: {msg}")
            }
        }
    }
}

impl std::error::Error for RepError {}

impl Rep {
    pub fn new(q: &Quiver, p: u32, dim: Vec<usize>, maps: Vec<FpMatrix>) -> Result<Rep, RepError> {
        assert_eq!(dim.len(), q.vertex_count());
        assert_eq!(maps.len(), q.arrows().len());
        for (a, &(s, t)) in q.arrows().iter().enumerate() {
            let got = (maps[a].rows(), maps[a].cols());
            if got != (dim[t], dim[s]) {
                return Err(RepError::ShapeMismatch { arrow: a, expected: (dim[t], dim[s]), got });
            }
            if maps[a].modulus() != p {
                return Err(RepError::FieldMismatch);
            }
        }
        Ok(Rep { p, dim, maps })
    }

    pub fn zero(q: &Quiver, p: u32) -> Rep {
        let dim = vec![0; q.vertex_count()];
        let maps = q.arrows().iter().map(|_| FpMatrix::zeros(p, 0, 0)).collect();
        Rep { p, dim, maps }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> &[usize] {
        &self.dim
    }

    pub fn dim_vec(&self) -> DimVec {
        dims_to_i64(&self.dim)
    }

    pub fn total_dim(&self) -> usize {
        self.dim.iter().sum()
    }

    pub fn map(&self, arrow: usize) -> &FpMatrix {
        &self.maps[arrow]
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Apply the arrow maps along a path (first arrow first).
    pub fn apply_path(&self, arrows: &[usize], v: &[u32]) -> Vec<u32> {
        let mut x = v.to_vec();
        for &a in arrows {
            x = self.maps[a].mul_vec(&x);
        }
        x
    }

    /// Direct sum, with inclusion and projection maps per summand.
    pub fn direct_sum(q: &Quiver, p: u32, parts: &[&Rep]) -> (Rep, Vec<ModuleMap>, Vec<ModuleMap>) {
        let n = q.vertex_count();
        let dim: Vec<usize> = (0..n).map(|v| parts.iter().map(|r| r.dim[v]).sum()).collect();
        let offsets: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut acc = 0;
                parts
                    .iter()
                    .map(|r| {
                        let o = acc;
                        acc += r.dim[v];
                        o
                    })
                    .collect()
            })
            .collect();
        let maps: Vec<FpMatrix> = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let mut m = FpMatrix::zeros(p, dim[t], dim[s]);
                for (k, r) in parts.iter().enumerate() {
                    let blk = r.map(a);
                    for i in 0..blk.rows() {
                        for j in 0..blk.cols() {
                            m.set(offsets[t][k] + i, offsets[s][k] + j, blk.get(i, j));
                        }
                    }
                }
                m
            })
            .collect();
        let sum = Rep { p, dim: dim.clone(), maps };
        let mut incs = Vec::new();
        let mut projs = Vec::new();
        for (k, r) in parts.iter().enumerate() {
            let inc_blocks: Vec<FpMatrix> = (0..n)
                .map(|v| {
                    let mut m = FpMatrix::zeros(p, dim[v], r.dim[v]);
                    for i in 0..r.dim[v] {
                        m.set(offsets[v][k] + i, i, 1);
                    }
                    m
                })
                .collect();
            let proj_blocks: Vec<FpMatrix> = (0..n)
                .map(|v| {
                    let mut m = FpMatrix::zeros(p, r.dim[v], dim[v]);
                    for i in 0..r.dim[v] {
                        m.set(i, offsets[v][k] + i, 1);
                    }
                    m
                })
                .collect();
            incs.push(ModuleMap { blocks: inc_blocks });
            projs.push(ModuleMap { blocks: proj_blocks });
        }
        (sum, incs, projs)
    }
}

/// A homomorphism of representations: one matrix per vertex, natural across
/// every arrow (N_a phi_i = phi_j M_a).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleMap {
    blocks: Vec<FpMatrix>,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModuleMap({:?})",
            self.blocks.iter().map(|b| (b.rows(), b.cols())).collect::<Vec<_>>()
        )
    }
}

impl ModuleMap {
    pub fn new(blocks: Vec<FpMatrix>) -> ModuleMap {
        ModuleMap { blocks }
    }

    pub fn zero(p: u32, src: &Rep, tgt: &Rep) -> ModuleMap {
        let blocks = src
            .dim
            .iter()
            .zip(&tgt.dim)
            .map(|(&s, &t)| FpMatrix::zeros(p, t, s))
            .collect();
        ModuleMap { blocks }
    }

    pub fn identity(rep: &Rep) -> ModuleMap {
        let blocks = rep.dim.iter().map(|&d| FpMatrix::identity(rep.p, d)).collect();
        ModuleMap { blocks }
    }

    pub fn block(&self, v: usize) -> &FpMatrix {
        &self.blocks[v]
    }

    pub fn blocks(&self) -> &[FpMatrix] {
        &self.blocks
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    /// g.compose(f) = g after f.
    pub fn compose(&self, f: &ModuleMap) -> ModuleMap {
        let blocks = self.blocks.iter().zip(&f.blocks).map(|(g, f)| g.mul(f)).collect();
        ModuleMap { blocks }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        ModuleMap { blocks }
    }

    pub fn scale(&self, s: u32) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().map(|b| b.scale(s)).collect() }
    }

    /// Verify every naturality square between the given source and target.
    pub fn is_natural(&self, q: &Quiver, src: &Rep, tgt: &Rep) -> bool {
        q.arrows().iter().enumerate().all(|(a, &(s, t))| {
            tgt.map(a).mul(&self.blocks[s]) == self.blocks[t].mul(src.map(a))
        })
    }

    /// Total rank over all vertices.
    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }
}

/// Basis of Hom(M, N), by solving all naturality squares at once.
pub fn hom_basis(q: &Quiver, m: &Rep, n: &Rep) -> Result<Vec<ModuleMap>, RepError> {
    if m.p != n.p {
        return Err(RepError::FieldMismatch);
    }
    let p = m.p;
    let nv = q.vertex_count();
    // unknowns: entries of phi_v (n.dim[v] x m.dim[v]), row-major, vertex by vertex
    let offsets: Vec<usize> = {
        let mut acc = 0;
        (0..nv)
            .map(|v| {
                let o = acc;
                acc += n.dim[v] * m.dim[v];
                o
            })
            .collect()
    };
    let total: usize = (0..nv).map(|v| n.dim[v] * m.dim[v]).sum();
    let eq_count: usize = q
        .arrows()
        .iter()
        .map(|&(s, t)| n.dim[t] * m.dim[s])
        .sum();
    let mut sys = FpMatrix::zeros(p, eq_count, total);
    let mut row = 0;
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        let na = n.map(a); // n.dim[t] x n.dim[s]
        let ma = m.map(a); // m.dim[t] x m.dim[s]
        for r in 0..n.dim[t] {
            for c in 0..m.dim[s] {
                // (N_a phi_s)_{r,c} = sum_k N_a[r,k] phi_s[k,c]
                for k in 0..n.dim[s] {
                    let coeff = na.get(r, k);
                    if coeff != 0 {
                        let idx = offsets[s] + k * m.dim[s] + c;
                        sys.set(row, idx, (sys.get(row, idx) + coeff) % p);
                    }
                }
                // -(phi_t M_a)_{r,c} = -sum_k phi_t[r,k] M_a[k,c]
                for k in 0..m.dim[t] {
                    let coeff = ma.get(k, c);
                    if coeff != 0 {
                        let idx = offsets[t] + r * m.dim[t] + k;
                        sys.set(row, idx, (sys.get(row, idx) + p - coeff) % p);
                    }
                }
                row += 1;
            }
        }
    }
    let ker = sys.kernel_basis();
    let mut out = Vec::with_capacity(ker.cols());
    for c in 0..ker.cols() {
        let mut blocks = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut blk = FpMatrix::zeros(p, n.dim[v], m.dim[v]);
            for r in 0..n.dim[v] {
                for cc in 0..m.dim[v] {
                    blk.set(r, cc, ker.get(offsets[v] + r * m.dim[v] + cc, c));
                }
            }
            blocks.push(blk);
        }
        out.push(ModuleMap { blocks });
    }
    Ok(out)
}

pub fn hom_dim(q: &Quiver, m: &Rep, n: &Rep) -> usize {
    hom_basis(q, m, n).expect("field mismatch").len()
}

/// dim Ext^1(M, N) = [M, N] - <dim M, dim N> (hereditary).
pub fn ext_dim(q: &Quiver, euler: &EulerData, m: &Rep, n: &Rep) -> usize {
    let h = hom_dim(q, m, n) as i64;
    let e = h - euler.euler_form(&m.dim_vec(), &n.dim_vec());
    debug_assert!(e >= 0, "negative Ext dimension: Euler form convention broken");
    e as usize
}

/// Kernel of f: M -> N as a representation with its inclusion into M.
pub fn kernel_of(q: &Quiver, f: &ModuleMap, src: &Rep, tgt: &Rep) -> (Rep, ModuleMap) {
    let _ = tgt;
    let p = src.p;
    let nv = q.vertex_count();
    let inc_blocks: Vec<FpMatrix> = (0..nv).map(|v| f.block(v).kernel_basis()).collect();
    let dim: Vec<usize> = inc_blocks.iter().map(|b| b.cols()).collect();
    let maps: Vec<FpMatrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            // M_a(K_s) lands in K_t; express in the kernel basis
            let img = src.map(a).mul(&inc_blocks[s]);
            inc_blocks[t]
                .solve_matrix(&img)
                .expect("kernel is not arrow-stable: naturality broken")
        })
        .collect();
    let k = Rep { p, dim, maps };
    (k, ModuleMap { blocks: inc_blocks })
}

/// Image of f: M -> N as a representation with its inclusion into N.
pub fn image_of(q: &Quiver, f: &ModuleMap, src: &Rep, tgt: &Rep) -> (Rep, ModuleMap) {
    let _ = src;
    let p = tgt.p;
    let nv = q.vertex_count();
    let inc_blocks: Vec<FpMatrix> = (0..nv)
        .map(|v| f.block(v).transpose().row_space_basis().transpose())
        .collect();
    let dim: Vec<usize> = inc_blocks.iter().map(|b| b.cols()).collect();
    let maps: Vec<FpMatrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let img = tgt.map(a).mul(&inc_blocks[s]);
            inc_blocks[t]
                .solve_matrix(&img)
                .expect("image is not arrow-stable: naturality broken")
        })
        .collect();
    (Rep { p, dim, maps }, ModuleMap { blocks: inc_blocks })
}

/// Cokernel of f: M -> N as a representation with the projection from N.
pub fn cokernel_of(q: &Quiver, f: &ModuleMap, src: &Rep, tgt: &Rep) -> (Rep, ModuleMap) {
    let _ = src;
    let p = tgt.p;
    let nv = q.vertex_count();
    let mut proj_blocks = Vec::with_capacity(nv);
    let mut sections = Vec::with_capacity(nv);
    for v in 0..nv {
        // image row basis (as rows of RREF) with pivot columns
        let (rref, rank, pivots) = f.block(v).transpose().rref();
        let n_v = tgt.dim[v];
        let free: Vec<usize> = (0..n_v).filter(|c| !pivots.contains(c)).collect();
        let mut proj = FpMatrix::zeros(p, n_v - rank, n_v);
        let mut sec = FpMatrix::zeros(p, n_v, n_v - rank);
        for (k, &fc) in free.iter().enumerate() {
            proj.set(k, fc, 1);
            sec.set(fc, k, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                let v_ = rref.get(pr, fc);
                if v_ != 0 {
                    proj.set(k, pc, p - v_);
                }
            }
        }
        debug_assert_eq!(proj.mul(&sec), FpMatrix::identity(p, n_v - rank));
        proj_blocks.push(proj);
        sections.push(sec);
    }
    let dim: Vec<usize> = proj_blocks.iter().map(|b| b.rows()).collect();
    let maps: Vec<FpMatrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| proj_blocks[t].mul(&tgt.map(a).mul(&sections[s])))
        .collect();
    (Rep { p, dim, maps }, ModuleMap { blocks: proj_blocks })
}

/// Submodule spanned by the rows of `bases[v]` (one basis matrix per vertex,
/// rows independent), as a representation with its inclusion.
pub fn submodule_rep(q: &Quiver, m: &Rep, bases: &[FpMatrix]) -> (Rep, ModuleMap) {
    let p = m.p;
    let inc_blocks: Vec<FpMatrix> = bases.iter().map(|b| b.transpose()).collect();
    let dim: Vec<usize> = inc_blocks.iter().map(|b| b.cols()).collect();
    let maps: Vec<FpMatrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let img = m.map(a).mul(&inc_blocks[s]);
            inc_blocks[t].solve_matrix(&img).expect("subspace tuple is not arrow-stable")
        })
        .collect();
    (Rep { p, dim, maps }, ModuleMap { blocks: inc_blocks })
}

/// Quotient of M by the submodule spanned by the rows of `bases[v]`.
pub fn quotient_rep(q: &Quiver, m: &Rep, bases: &[FpMatrix]) -> (Rep, ModuleMap) {
    let (sub, inc) = submodule_rep(q, m, bases);
    cokernel_of(q, &inc, &sub, m)
}

/// Isomorphism test: dimension filter, Hom-dimension filter, then a seeded
/// randomized search for an explicit invertible hom (the search is the
/// authority; 200 candidates).
pub fn iso_test(q: &Quiver, m: &Rep, n: &Rep) -> bool {
    if m.dim != n.dim {
        return false;
    }
    if m.p != n.p {
        return false;
    }
    let basis = hom_basis(q, m, n).expect("field checked above");
    if basis.is_empty() {
        return m.total_dim() == 0;
    }
    if hom_dim(q, m, m) != hom_dim(q, n, n) || hom_dim(q, m, n) != hom_dim(q, n, m) {
        return false;
    }
    let p = m.p;
    let mut rng = ChaCha8Rng::seed_from_u64(0x71c5_0b5e);
    'outer: for _ in 0..200 {
        let mut cand = ModuleMap::zero(p, m, n);
        for b in &basis {
            let c: u32 = rng.random_range(0..p);
            if c != 0 {
                cand = cand.add(&b.scale(c));
            }
        }
        for v in 0..q.vertex_count() {
            if cand.block(v).rank() != m.dim[v] {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

/// Interval module of a linearly oriented A_n quiver (arrows i -> i+1):
/// dimension 1 on vertices a..=b (0-based), identity on the arrows inside.
/// These are exactly the indecomposables.
pub fn interval_module(q: &Quiver, p: u32, a: usize, b: usize) -> Rep {
    let n = q.vertex_count();
    assert!(a <= b && b < n);
    assert!(
        q.arrows().iter().enumerate().all(|(k, &(s, t))| s == k && t == k + 1),
        "interval modules are defined for the linear A_n orientation"
    );
    let dim: Vec<usize> = (0..n).map(|v| usize::from(a <= v && v <= b)).collect();
    let maps: Vec<FpMatrix> = q
        .arrows()
        .iter()
        .map(|&(s, t)| {
            if dim[s] == 1 && dim[t] == 1 {
                FpMatrix::identity(p, 1)
            } else {
                FpMatrix::zeros(p, dim[t], dim[s])
            }
        })
        .collect();
    Rep::new(q, p, dim, maps).unwrap()
}

/// Module text format: `dim d1 .. dn`, then per arrow `map A r c` followed by
/// r rows of c entries. Arrow indices are 1-based; omitted arrows are zero.
pub fn parse_rep(q: &Quiver, p: u32, text: &str) -> Result<Rep, RepError> {
    let mut dim: Option<Vec<usize>> = None;
    let mut maps: Vec<Option<FpMatrix>> = vec![None; q.arrows().len()];
    let mut lines = text.lines().enumerate().peekable();
    while let Some((ln, raw)) = lines.next() {
        let line = raw.split('#').next().unwrap_or("");
        let mut toks = line.split_whitespace();
        let Some(head) = toks.next() else { continue };
        let err = |msg: &str| RepError::Parse { line: ln + 1, col: 1, msg: msg.to_string() };
        match head {
            "dim" => {
                let d: Result<Vec<usize>, _> = toks.map(|t| t.parse::<usize>()).collect();
                let d = d.map_err(|_| err("bad dimension entry"))?;
                if d.len() != q.vertex_count() {
                    return Err(err(&format!(
                        "expected {} dimensions, got {}",
                        q.vertex_count(),
                        d.len()
                    )));
                }
                dim = Some(d);
            }
            "map" => {
                let a = toks
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err("expected arrow index"))?;
                if a == 0 || a > q.arrows().len() {
                    return Err(err(&format!("arrow index {a} out of range")));
                }
                let r = toks
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err("expected row count"))?;
                let c = toks
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err("expected column count"))?;
                let mut data = Vec::with_capacity(r * c);
                for _ in 0..r {
                    let Some((ln2, raw2)) = lines.next() else {
                        return Err(err("unexpected end of matrix block"));
                    };
                    let row: Result<Vec<u32>, _> =
                        raw2.split_whitespace().map(|t| t.parse::<u32>()).collect();
                    let row = row.map_err(|_| RepError::Parse {
                        line: ln2 + 1,
                        col: 1,
                        msg: "bad matrix entry".into(),
                    })?;
                    if row.len() != c {
                        return Err(RepError::Parse {
                            line: ln2 + 1,
                            col: 1,
                            msg: format!("expected {c} entries, got {}", row.len()),
                        });
                    }
                    data.extend(row);
                }
                maps[a - 1] = Some(FpMatrix::from_flat(p, r, c, data));
            }
            other => return Err(err(&format!("unknown directive '{other}'"))),
        }
    }
    let dim = dim.ok_or(RepError::Parse { line: 0, col: 0, msg: "missing dim line".into() })?;
    let maps: Vec<FpMatrix> = maps
        .into_iter()
        .enumerate()
        .map(|(a, m)| {
            let (s, t) = q.arrows()[a];
            m.unwrap_or_else(|| FpMatrix::zeros(p, dim[t], dim[s]))
        })
        .collect();
    Rep::new(q, p, dim, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn a2() -> Quiver {
        Quiver::preset("a2").unwrap()
    }

    fn p1(p: u32) -> Rep {
        let q = a2();
        Rep::new(&q, p, vec![1, 1], vec![FpMatrix::identity(p, 1)]).unwrap()
    }

    #[test]
    fn hom_dimensions_a2() {
        let q = a2();
        let s1 = simple(&q, 3, 0);
        let s2 = simple(&q, 3, 1);
        assert_eq!(hom_dim(&q, &s1, &s1), 1);
        assert_eq!(hom_dim(&q, &s1, &s2), 0);
        assert_eq!(hom_dim(&q, &p1(3), &s1), 1);
    }

    #[test]
    fn ext_dimensions() {
        let q = a2();
        let euler = EulerData::new(&q, 1).unwrap();
        let s1 = simple(&q, 3, 0);
        let s2 = simple(&q, 3, 1);
        assert_eq!(ext_dim(&q, &euler, &s1, &s2), 1);
        assert_eq!(ext_dim(&q, &euler, &s2, &s1), 0);
        assert_eq!(ext_dim(&q, &euler, &p1(3), &s1), 0); // P1 projective
        let kr = Quiver::preset("kronecker").unwrap();
        let euler = EulerData::new(&kr, 1).unwrap();
        let s1 = simple(&kr, 2, 0);
        let s2 = simple(&kr, 2, 1);
        assert_eq!(ext_dim(&kr, &euler, &s1, &s2), 2);
    }

    #[test]
    fn kernel_cokernel_basics() {
        let q = a2();
        let s2 = simple(&q, 3, 1);
        let id = ModuleMap::identity(&s2);
        let (k, _) = kernel_of(&q, &id, &s2, &s2);
        let (c, _) = cokernel_of(&q, &id, &s2, &s2);
        assert!(k.is_zero());
        assert!(c.is_zero());

        let m = p1(3);
        let z = ModuleMap::zero(3, &s2, &m);
        let (k, _) = kernel_of(&q, &z, &s2, &m);
        let (c, _) = cokernel_of(&q, &z, &s2, &m);
        assert_eq!(k.dim(), s2.dim());
        assert_eq!(c.dim(), m.dim());

        // nonzero eta: S2 -> S2 is an iso of simples
        let f = ModuleMap::new(vec![FpMatrix::zeros(3, 0, 0), FpMatrix::from_rows(3, &[vec![2]])]);
        let (k, _) = kernel_of(&q, &f, &s2, &s2);
        let (c, _) = cokernel_of(&q, &f, &s2, &s2);
        assert!(k.is_zero());
        assert!(c.is_zero());
    }

    #[test]
    fn rank_nullity_vertexwise() {
        let q = a2();
        let m = p1(5);
        let s1 = simple(&q, 5, 0);
        for f in hom_basis(&q, &m, &s1).unwrap() {
            let (k, inc) = kernel_of(&q, &f, &m, &s1);
            assert!(inc.is_natural(&q, &k, &m));
            for v in 0..2 {
                assert_eq!(k.dim()[v] + f.block(v).rank(), m.dim()[v]);
            }
        }
    }

    #[test]
    fn iso_test_examples() {
        let q = a2();
        let m = p1(3);
        assert!(iso_test(&q, &m, &m));
        let s1 = simple(&q, 3, 0);
        assert!(!iso_test(&q, &m, &s1)); // different dim vectors
        let s2 = simple(&q, 3, 1);
        let (sum, _, _) = Rep::direct_sum(&q, 3, &[&s1, &s2]);
        assert!(!iso_test(&q, &sum, &m)); // same dims, [S1+S2,S1+S2]=2 vs [P1,P1]=1
    }

    #[test]
    fn parse_rep_format() {
        let q = a2();
        let m = parse_rep(&q, 3, "dim 1 1\nmap 1 1 1\n2\n").unwrap();
        assert_eq!(m.dim(), &[1, 1]);
        assert_eq!(m.map(0).get(0, 0), 2);
        assert!(parse_rep(&q, 3, "dim 1\n").is_err());
        assert!(matches!(
            parse_rep(&q, 3, "dim 1 1\nmap 1 1 1\nx\n"),
            Err(RepError::Parse { line: 3, .. })
        ));
    }
}
