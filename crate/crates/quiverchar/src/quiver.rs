//! Acyclic quivers and the three bilinear forms on their Grothendieck group:
//! the Euler form <-,->, its antisymmetrization B = E - E^t, and the
//! compatible skew form Lambda with sigma * Lambda * B = I_n.
//!
//! Lambda may be half-integral (Kronecker-type quivers), so it is stored
//! doubled: `lambda2 = 2 * sigma * B^{-1}`. Correspondingly every quantum-torus
//! exponent downstream is an s-exponent with s = t^{1/2}.

use std::fmt;

/// Dimension vectors and exponent vectors live in Z^n.
pub type DimVec = Vec<i64>;

pub fn dim_add(a: &[i64], b: &[i64]) -> DimVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn dim_sub(a: &[i64], b: &[i64]) -> DimVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dims_to_i64(d: &[usize]) -> DimVec {
    d.iter().map(|&x| x as i64).collect()
}

/// An acyclic quiver. Vertices are 0-based internally; the text format and
/// all printed output use 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
    topo: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuiverError {
    Cyclic,
    BadVertex { vertex: usize, n: usize },
    Parse { line: usize, col: usize, msg: String },
    SingularB { rank: usize, n: usize },
    NotHalfIntegral,
}

impl fmt::Display for QuiverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverError::Cyclic => write!(f, "quiver has an oriented cycle"),
            QuiverError::BadVertex { vertex, n } => {
                write!(f, "vertex {vertex} out of range 1..={n}")
            }
            QuiverError::Parse { line, col, msg } => {
                write!(f, "parse error at line {line}, column {col}: {msg}")
            }
            QuiverError::SingularB { rank, n } => {
                write!(f, "no compatible Lambda: B is singular, rank(B) = {rank} < {n}")
            }
            QuiverError::NotHalfIntegral => {
                write!(f, "no compatible Lambda with half-integer entries: 2*B^-1 is not integral")
            }
        }
    }
}

impl std::error::Error for QuiverError {}

impl Quiver {
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Quiver, QuiverError> {
        for &(s, t) in &arrows {
            if s >= n {
                return Err(QuiverError::BadVertex { vertex: s + 1, n });
            }
            if t >= n {
                return Err(QuiverError::BadVertex { vertex: t + 1, n });
            }
        }
        let topo = topo_order(n, &arrows).ok_or(QuiverError::Cyclic)?;
        Ok(Quiver { n, arrows, topo })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Vertices in an order with all arrows pointing forward.
    pub fn topo_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = (usize, (usize, usize))> + '_ {
        self.arrows.iter().copied().enumerate().filter(move |&(_, (s, _))| s == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = (usize, (usize, usize))> + '_ {
        self.arrows.iter().copied().enumerate().filter(move |&(_, (_, t))| t == v)
    }

    /// Euler matrix: E_ij = delta_ij - #{arrows i -> j}.
    pub fn euler_matrix(&self) -> IMatrix {
        let mut e = IMatrix::identity(self.n);
        for &(s, t) in &self.arrows {
            *e.at_mut(s, t) -= 1;
        }
        e
    }

    /// Built-in presets used throughout the verification suites.
    pub fn preset(name: &str) -> Option<Quiver> {
        match name {
            "a2" => Some(Quiver::new(2, vec![(0, 1)]).unwrap()),
            "a3" => Some(Quiver::new(3, vec![(0, 1), (1, 2)]).unwrap()),
            "a4" => Some(Quiver::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap()),
            "kronecker" => Some(Quiver::new(2, vec![(0, 1), (0, 1)]).unwrap()),
            _ => None,
        }
    }
}

fn topo_order(n: usize, arrows: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for &(_, t) in arrows {
        indeg[t] += 1;
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop() {
        order.push(v);
        for &(s, t) in arrows {
            if s == v {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push(t);
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Parse the quiver text format: `vertices N`, then `arrow S T` lines.
/// `#` starts a comment; blank lines are skipped.
pub fn parse_quiver(text: &str) -> Result<Quiver, QuiverError> {
    let mut n: Option<usize> = None;
    let mut arrows = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut toks = line.split_whitespace();
        let Some(head) = toks.next() else { continue };
        let err = |col: usize, msg: &str| QuiverError::Parse {
            line: ln + 1,
            col,
            msg: msg.to_string(),
        };
        match head {
            "vertices" => {
                let v = toks
                    .next()
                    .ok_or_else(|| err(raw.len(), "expected vertex count"))?
                    .parse::<usize>()
                    .map_err(|_| err(raw.find(char::is_numeric).unwrap_or(0), "bad vertex count"))?;
                n = Some(v);
            }
            "arrow" => {
                let n = n.ok_or_else(|| err(0, "arrow before vertices line"))?;
                let mut read = || -> Result<usize, QuiverError> {
                    let t = toks.next().ok_or_else(|| err(raw.len(), "expected vertex"))?;
                    let v = t.parse::<usize>().map_err(|_| err(0, "bad vertex"))?;
                    if v == 0 || v > n {
                        return Err(QuiverError::BadVertex { vertex: v, n });
                    }
                    Ok(v - 1)
                };
                let s = read()?;
                let t = read()?;
                arrows.push((s, t));
            }
            other => {
                return Err(err(raw.find(other).unwrap_or(0), &format!("unknown directive '{other}'")))
            }
        }
    }
    let n = n.ok_or(QuiverError::Parse { line: 0, col: 0, msg: "missing vertices line".into() })?;
    Quiver::new(n, arrows)
}

/// Small dense integer matrix, used for E, B, 2*Lambda and the Coxeter matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IMatrix {
    n_rows: usize,
    n_cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IMatrix {}x{} [", self.n_rows, self.n_cols)?;
        for r in 0..self.n_rows {
            writeln!(f, "  {:?}", &self.data[r * self.n_cols..(r + 1) * self.n_cols])?;
        }
        write!(f, "]")
    }
}

impl IMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IMatrix {
        IMatrix { n_rows: rows, n_cols: cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> IMatrix {
        let mut m = IMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> IMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend_from_slice(row);
        }
        IMatrix { n_rows: r, n_cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.n_rows
    }

    pub fn cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n_cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut i64 {
        &mut self.data[r * self.n_cols + c]
    }

    pub fn transpose(&self) -> IMatrix {
        let mut t = IMatrix::zeros(self.n_cols, self.n_rows);
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                *t.at_mut(c, r) = self.at(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &IMatrix) -> IMatrix {
        assert_eq!(self.n_cols, other.n_rows);
        let mut out = IMatrix::zeros(self.n_rows, other.n_cols);
        for r in 0..self.n_rows {
            for k in 0..self.n_cols {
                let a = self.at(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.n_cols {
                    *out.at_mut(r, c) += a * other.at(k, c);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &IMatrix) -> IMatrix {
        assert_eq!((self.n_rows, self.n_cols), (other.n_rows, other.n_cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        IMatrix { n_rows: self.n_rows, n_cols: self.n_cols, data }
    }

    pub fn neg(&self) -> IMatrix {
        IMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, s: i64) -> IMatrix {
        IMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn apply(&self, v: &[i64]) -> DimVec {
        assert_eq!(v.len(), self.n_cols);
        (0..self.n_rows)
            .map(|r| (0..self.n_cols).map(|c| self.at(r, c) * v[c]).sum())
            .collect()
    }

    /// v^T * self * w, the bilinear form with this matrix.
    pub fn form(&self, v: &[i64], w: &[i64]) -> i64 {
        assert_eq!(v.len(), self.n_rows, "length mismatch");
        assert_eq!(w.len(), self.n_cols, "length mismatch");
        let mut acc = 0;
        for r in 0..self.n_rows {
            if v[r] == 0 {
                continue;
            }
            for c in 0..self.n_cols {
                acc += v[r] * self.at(r, c) * w[c];
            }
        }
        acc
    }

    /// Rank over Q, by fraction-free elimination in i128.
    pub fn rank_rational(&self) -> usize {
        let mut m: Vec<Vec<i128>> = (0..self.n_rows)
            .map(|r| (0..self.n_cols).map(|c| self.at(r, c) as i128).collect())
            .collect();
        let mut rank = 0;
        for c in 0..self.n_cols {
            if rank == self.n_rows {
                break;
            }
            let Some(pr) = (rank..self.n_rows).find(|&r| m[r][c] != 0) else { continue };
            m.swap(rank, pr);
            let piv = m[rank][c];
            for r in rank + 1..self.n_rows {
                if m[r][c] != 0 {
                    let f = m[r][c];
                    for cc in 0..self.n_cols {
                        m[r][cc] = m[r][cc] * piv - f * m[rank][cc];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// scale * self^{-1} if that matrix is integral, via exact fraction-free
    /// elimination. None if self is singular or the result is not integral.
    pub fn inverse_times(&self, scale: i64) -> Option<IMatrix> {
        assert_eq!(self.n_rows, self.n_cols);
        let n = self.n_rows;
        // rational Gauss-Jordan with i128 numerators/denominators
        #[derive(Clone, Copy)]
        struct Q(i128, i128);
        fn norm(Q(mut a, mut b): Q) -> Q {
            if b < 0 {
                a = -a;
                b = -b;
            }
            let g = gcd(a.unsigned_abs(), b.unsigned_abs()).max(1) as i128;
            Q(a / g, b / g)
        }
        fn gcd(a: u128, b: u128) -> u128 {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        let add = |x: Q, y: Q| norm(Q(x.0 * y.1 + y.0 * x.1, x.1 * y.1));
        let mul = |x: Q, y: Q| norm(Q(x.0 * y.0, x.1 * y.1));
        let mut a: Vec<Vec<Q>> = (0..n)
            .map(|r| {
                (0..2 * n)
                    .map(|c| {
                        if c < n {
                            Q(self.at(r, c) as i128, 1)
                        } else {
                            Q((r == c - n) as i128, 1)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut row = 0;
        for col in 0..n {
            let pr = (row..n).find(|&r| a[r][col].0 != 0)?;
            a.swap(row, pr);
            let piv = a[row][col];
            let inv = norm(Q(piv.1, piv.0));
            for cc in 0..2 * n {
                a[row][cc] = mul(a[row][cc], inv);
            }
            for r in 0..n {
                if r != row && a[r][col].0 != 0 {
                    let f = a[r][col];
                    for cc in 0..2 * n {
                        let t = mul(f, a[row][cc]);
                        a[r][cc] = add(a[r][cc], Q(-t.0, t.1));
                    }
                }
            }
            row += 1;
        }
        let mut out = IMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                let q = mul(a[r][n + c], Q(scale as i128, 1));
                if q.1 != 1 {
                    return None;
                }
                *out.at_mut(r, c) = i64::try_from(q.0).ok()?;
            }
        }
        Some(out)
    }
}

/// The Euler data of a quiver: E, B = E - E^t, and the doubled compatible
/// skew form `lambda2 = 2 * sigma * B^{-1}` for a calibrated sign sigma.
#[derive(Debug, Clone)]
pub struct EulerData {
    pub e: IMatrix,
    pub b: IMatrix,
    /// 2 * Lambda; entries are integers because Lambda is half-integral.
    pub lambda2: IMatrix,
    /// The calibrated sign sigma with sigma * Lambda * B = I_n.
    pub sigma: i64,
}

impl EulerData {
    /// Solve for Lambda with the given sign convention. Fails iff B is
    /// singular over Q or 2 B^{-1} is not integral.
    pub fn new(quiver: &Quiver, sigma: i64) -> Result<EulerData, QuiverError> {
        assert!(sigma == 1 || sigma == -1);
        let e = quiver.euler_matrix();
        let b = e.sub(&e.transpose());
        let rank = b.rank_rational();
        if rank < quiver.vertex_count() {
            return Err(QuiverError::SingularB { rank, n: quiver.vertex_count() });
        }
        let lambda2 = b.inverse_times(2 * sigma).ok_or(QuiverError::NotHalfIntegral)?;
        Ok(EulerData { e, b, lambda2, sigma })
    }

    /// Euler form <m, n> = m^T E n.
    pub fn euler_form(&self, m: &[i64], n: &[i64]) -> i64 {
        self.e.form(m, n)
    }

    /// 2 * Lambda(a, b); always an integer.
    pub fn lambda2_form(&self, a: &[i64], b: &[i64]) -> i64 {
        self.lambda2.form(a, b)
    }

    /// e^* = E^t e.
    pub fn star_right(&self, v: &[i64]) -> DimVec {
        self.e.transpose().apply(v)
    }

    /// ^*e = E e.
    pub fn star_left(&self, v: &[i64]) -> DimVec {
        self.e.apply(v)
    }

    /// Coxeter matrix Phi = -E^{-1} E^t; dim tau M = Phi dim M on modules
    /// without projective summands.
    pub fn coxeter_matrix(&self) -> IMatrix {
        self.e.inverse_times(1).expect("E is unimodular for an acyclic quiver").mul(&self.e.transpose()).neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::preset("a2").unwrap()
    }

    #[test]
    fn euler_matrices() {
        assert_eq!(a2().euler_matrix(), IMatrix::from_rows(&[vec![1, -1], vec![0, 1]]));
        let isolated = Quiver::new(3, vec![]).unwrap();
        assert_eq!(isolated.euler_matrix(), IMatrix::identity(3));
        let kr = Quiver::preset("kronecker").unwrap();
        assert_eq!(kr.euler_matrix(), IMatrix::from_rows(&[vec![1, -2], vec![0, 1]]));
    }

    #[test]
    fn cyclic_rejected() {
        assert_eq!(Quiver::new(2, vec![(0, 1), (1, 0)]).unwrap_err(), QuiverError::Cyclic);
    }

    #[test]
    fn lambda_a2_and_kronecker() {
        let ed = EulerData::new(&a2(), 1).unwrap();
        // Lambda = [[0,1],[-1,0]] so lambda2 = [[0,2],[-2,0]]
        assert_eq!(ed.lambda2, IMatrix::from_rows(&[vec![0, 2], vec![-2, 0]]));
        // Lambda * B = I
        let prod = ed.lambda2.mul(&ed.b);
        assert_eq!(prod, IMatrix::identity(2).scale(2));

        let kr = Quiver::preset("kronecker").unwrap();
        let ed = EulerData::new(&kr, 1).unwrap();
        // Lambda = [[0,1/2],[-1/2,0]] so lambda2 = [[0,1],[-1,0]]
        assert_eq!(ed.lambda2, IMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]));
    }

    #[test]
    fn lambda_fails_on_odd_rank() {
        let a3 = Quiver::preset("a3").unwrap();
        match EulerData::new(&a3, 1).unwrap_err() {
            QuiverError::SingularB { rank, n } => {
                assert_eq!((rank, n), (2, 3));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn forms_and_stars() {
        let ed = EulerData::new(&a2(), 1).unwrap();
        assert_eq!(ed.euler_form(&[1, 0], &[0, 1]), -1);
        // no arrows: <e,e> = sum of squares
        let iso = Quiver::new(3, vec![]).unwrap();
        let ed0 = EulerData { e: iso.euler_matrix(), b: IMatrix::zeros(3, 3), lambda2: IMatrix::zeros(3, 3), sigma: 1 };
        assert_eq!(ed0.euler_form(&[1, 2, 3], &[1, 2, 3]), 14);
        // calibrated A2 Lambda((1,-1),(0,1)) = 1, i.e. lambda2 = 2
        assert_eq!(ed.lambda2_form(&[1, -1], &[0, 1]), 2);

        assert_eq!(ed.star_right(&[0, 1]), vec![0, 1]);
        assert_eq!(ed.star_left(&[0, 1]), vec![-1, 1]);
        assert_eq!(ed.star_right(&[0, 0]), vec![0, 0]);
        assert_eq!(ed.star_right(&[1, 1]), vec![1, 0]);
    }

    #[test]
    fn skewness_and_compatibility() {
        for name in ["a2", "kronecker"] {
            let q = Quiver::preset(name).unwrap();
            let ed = EulerData::new(&q, 1).unwrap();
            assert_eq!(ed.b, ed.b.transpose().neg());
            assert_eq!(ed.lambda2, ed.lambda2.transpose().neg());
            // antisymmetrization identity <m,n> - <n,m> = m^T B n on samples
            for m in [[1i64, 0], [2, 3], [-1, 4]] {
                for n in [[0i64, 1], [5, -2], [1, 1]] {
                    assert_eq!(
                        ed.euler_form(&m, &n) - ed.euler_form(&n, &m),
                        ed.b.form(&m, &n)
                    );
                }
            }
        }
    }

    #[test]
    fn coxeter_a2() {
        let ed = EulerData::new(&a2(), 1).unwrap();
        let phi = ed.coxeter_matrix();
        assert_eq!(phi.apply(&[1, 0]), vec![0, 1]); // tau S1 = S2
    }

    #[test]
    fn parse_quiver_format() {
        let q = parse_quiver("# linear A2\nvertices 2\narrow 1 2\n").unwrap();
        assert_eq!(q, a2());
        assert!(matches!(parse_quiver("arrow 1 2\n"), Err(QuiverError::Parse { .. })));
        assert!(matches!(
            parse_quiver("vertices 2\narrow 1 5\n"),
            Err(QuiverError::BadVertex { vertex: 5, n: 2 })
        ));
    }
}
