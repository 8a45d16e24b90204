//! Exact dense linear algebra over prime fields F_p.
//!
//! Everything downstream (Hom spaces, Ext cocycles, kernels, subspace
//! enumeration) reduces to the routines here: reduced row echelon form,
//! null spaces, linear solves, and enumeration of all subspaces of F_p^d
//! by canonical RREF representatives. Matrices are dense and row-major;
//! desk-scale dimensions never exceed a few dozen rows.

use std::fmt;

/// A prime modulus for scalar arithmetic. Construction checks primality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Prime, FieldError> {
        if p < 2 {
            return Err(FieldError::NotPrime(p));
        }
        let mut d = 2;
        while d * d <= p {
            if p % d == 0 {
                return Err(FieldError::NotPrime(p));
            }
            d += 1;
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u32),
    ShapeMismatch { expected: (usize, usize), got: (usize, usize) },
    FieldMismatch { left: u32, right: u32 },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::ShapeMismatch { expected, got } => {
                write!(f, "shape mismatch: expected {expected:?}, got {got:?}")
            }
            FieldError::FieldMismatch { left, right } => {
                write!(f, "field mismatch: F_{left} vs F_{right}")
            }
        }
    }
}

impl std::error::Error for FieldError {}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse mod p (p prime, a != 0).
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
}

/// Dense matrix over F_p, entries stored row-major and always reduced mod p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} mod {} [", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> FpMatrix {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> FpMatrix {
        let mut m = FpMatrix::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u32, rows: &[Vec<u32>]) -> FpMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| x % p));
        }
        FpMatrix { p, rows: r, cols: c, data }
    }

    /// Matrix with the given flat row-major data, reduced mod p.
    pub fn from_flat(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> FpMatrix {
        assert_eq!(data.len(), rows * cols);
        let data = data.into_iter().map(|x| x % p).collect();
        FpMatrix { p, rows, cols, data }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.p, other.p, "field mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let p = self.p as u64;
        let mut out = FpMatrix::zeros(self.p, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let cur = out.get(r, c) as u64;
                    out.set(r, c, ((cur + a * other.get(k, c) as u64) % p) as u32);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "shape mismatch in mul_vec");
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    acc = (acc + self.get(r, c) as u64 * v[c] as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.p, other.p);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a + b) % self.p)
            .collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.p, other.p);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a + self.p - b) % self.p)
            .collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32) -> FpMatrix {
        let s = (s % self.p) as u64;
        let data = self.data.iter().map(|&a| (a as u64 * s % self.p as u64) as u32).collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.p, other.p);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FpMatrix { p: self.p, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.p, other.p);
        let mut out = FpMatrix::zeros(self.p, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form, returning (rref, rank, pivot columns).
    pub fn rref(&self) -> (FpMatrix, usize, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let mut pivot_row = None;
            for rr in r..m.rows {
                if m.get(rr, c) != 0 {
                    pivot_row = Some(rr);
                    break;
                }
            }
            let Some(pr) = pivot_row else { continue };
            if pr != r {
                for cc in 0..m.cols {
                    let (a, b) = (m.get(r, cc), m.get(pr, cc));
                    m.set(r, cc, b);
                    m.set(pr, cc, a);
                }
            }
            let inv = inv_mod(m.get(r, c), p) as u64;
            for cc in 0..m.cols {
                let v = (m.get(r, cc) as u64 * inv % p as u64) as u32;
                m.set(r, cc, v);
            }
            for rr in 0..m.rows {
                if rr != r && m.get(rr, c) != 0 {
                    let f = m.get(rr, c) as u64;
                    for cc in 0..m.cols {
                        let v = (m.get(rr, cc) as u64 + (p as u64 - f) * m.get(r, cc) as u64
                            % p as u64)
                            % p as u64;
                        m.set(rr, cc, v as u32);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots.len(), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the null space {x : self * x = 0}; columns of the result form
    /// the basis, so the result has `cols(self)` rows and `cols - rank` columns.
    pub fn kernel_basis(&self) -> FpMatrix {
        let p = self.p;
        let n = self.cols;
        let (r, rank, pivots) = self.rref();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut out = FpMatrix::zeros(p, n, n - rank);
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                let v = r.get(pr, fc);
                if v != 0 {
                    out.set(pc, k, p - v);
                }
            }
        }
        out
    }

    /// Solve self * x = b. None iff b is outside the column space.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows, "shape mismatch in solve");
        let p = self.p;
        let mut aug = FpMatrix::zeros(p, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let (rr, _, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent system
        }
        let mut x = vec![0u32; self.cols];
        for (pr, &pc) in pivots.iter().enumerate() {
            x[pc] = rr.get(pr, self.cols);
        }
        Some(x)
    }

    /// Solve self * X = B columnwise; None iff some column of B is unreachable.
    pub fn solve_matrix(&self, b: &FpMatrix) -> Option<FpMatrix> {
        assert_eq!(b.rows, self.rows);
        let mut out = FpMatrix::zeros(self.p, self.cols, b.cols);
        for c in 0..b.cols {
            let col: Vec<u32> = (0..b.rows).map(|r| b.get(r, c)).collect();
            let x = self.solve(&col)?;
            for r in 0..self.cols {
                out.set(r, c, x[r]);
            }
        }
        Some(out)
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_space_basis(&self) -> FpMatrix {
        let (r, rank, _) = self.rref();
        let mut out = FpMatrix::zeros(self.p, rank, self.cols);
        for i in 0..rank {
            for c in 0..self.cols {
                out.set(i, c, r.get(i, c));
            }
        }
        out
    }

    /// Does the row space of `self` (given in any form) contain v?
    pub fn row_space_contains(&self, v: &[u32]) -> bool {
        self.transpose().solve(v).is_some()
    }
}

/// All e-dimensional subspaces of F_p^d as canonical full-row-rank e x d RREF
/// matrices (rows span the subspace). Pivot-column patterns are enumerated,
/// then the free entries; RREF uniqueness makes each subspace appear once.
pub fn enumerate_subspaces(d: usize, e: usize, p: Prime) -> Result<Vec<FpMatrix>, FieldError> {
    if e > d {
        return Err(FieldError::ShapeMismatch { expected: (e, d), got: (d, e) });
    }
    let p = p.get();
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..e).collect();
    loop {
        // free positions for this pivot pattern: (r, c) with c > pivots[r],
        // c not itself a pivot column
        let mut free = Vec::new();
        for r in 0..e {
            for c in pivots[r] + 1..d {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let mut assign = vec![0u32; free.len()];
        'fill: loop {
            let mut m = FpMatrix::zeros(p, e, d);
            for r in 0..e {
                m.set(r, pivots[r], 1);
            }
            for (k, &(r, c)) in free.iter().enumerate() {
                m.set(r, c, assign[k]);
            }
            out.push(m);
            // odometer over F_p^{free}
            for k in 0..assign.len() {
                assign[k] += 1;
                if assign[k] < p {
                    continue 'fill;
                }
                assign[k] = 0;
            }
            break;
        }
        if !next_combination(&mut pivots, d) {
            break;
        }
    }
    Ok(out)
}

/// Advance a strictly increasing index combination; false when exhausted.
fn next_combination(idx: &mut [usize], d: usize) -> bool {
    let e = idx.len();
    for i in (0..e).rev() {
        if idx[i] < d - (e - i) {
            idx[i] += 1;
            for j in i + 1..e {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Gaussian binomial [d choose e]_q as an exact integer (q = p here).
pub fn gaussian_binomial(d: usize, e: usize, q: u64) -> u128 {
    if e > d {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..e {
        num *= (q as u128).pow((d - i) as u32) - 1;
        den *= (q as u128).pow((i + 1) as u32) - 1;
    }
    num / den
}
