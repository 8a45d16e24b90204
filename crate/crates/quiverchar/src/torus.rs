//! The quantum torus T_Lambda: finite sums of Laurent scalars in s = t^{1/2}
//! times exponent vectors in Z^n, multiplying by
//! X^e . X^f = t^{Lambda(e,f)} X^{e+f}. Lambda is half-integral, so the twist
//! is an integer power of s; every coefficient stays in Z[s, s^{-1}].
//!
//! Identities are additionally checked in the specialization Z[s^{+-1}]/(s^4 - p),
//! the torus at t = q^{1/2} with q = p: raw point counts of affine fibers
//! (integers p^c) and motivic fiber weights (t^{2c}) agree exactly there.

use crate::quiver::{dim_add, DimVec, IMatrix};
use std::collections::BTreeMap;
use std::fmt;

/// Integer-coefficient Laurent polynomial in s = t^{1/2}.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, i64>,
}

impl LaurentScalar {
    pub fn zero() -> LaurentScalar {
        LaurentScalar::default()
    }

    pub fn one() -> LaurentScalar {
        LaurentScalar::int(1)
    }

    pub fn int(c: i64) -> LaurentScalar {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(0, c);
        }
        LaurentScalar { terms }
    }

    /// c * s^k
    pub fn monomial(c: i64, k: i64) -> LaurentScalar {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(k, c);
        }
        LaurentScalar { terms }
    }

    pub fn s_power(k: i64) -> LaurentScalar {
        LaurentScalar::monomial(1, k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn add(&self, other: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (&k, &c) in &other.terms {
            let e = out.terms.entry(k).or_insert(0);
            *e += c;
            if *e == 0 {
                out.terms.remove(&k);
            }
        }
        out
    }

    pub fn neg(&self) -> LaurentScalar {
        LaurentScalar { terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect() }
    }

    pub fn sub(&self, other: &LaurentScalar) -> LaurentScalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (&k1, &c1) in &self.terms {
            for (&k2, &c2) in &other.terms {
                let e = out.terms.entry(k1 + k2).or_insert(0);
                *e += c1 * c2;
                if *e == 0 {
                    out.terms.remove(&(k1 + k2));
                }
            }
        }
        out
    }

    pub fn shifted(&self, k: i64) -> LaurentScalar {
        LaurentScalar { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    /// Value in Z[s]/(s^4 - p) shifted by s^{4N} to clear negative exponents:
    /// four residue coefficients, as i128 to absorb the p-power growth.
    pub fn reduce_mod(&self, p: u32) -> [i128; 4] {
        let mut out = [0i128; 4];
        if self.terms.is_empty() {
            return out;
        }
        let min = *self.terms.keys().next().unwrap();
        let shift = if min < 0 { (-min + 3) / 4 * 4 } else { 0 };
        for (&k, &c) in &self.terms {
            let k = k + shift;
            let (quot, rem) = (k / 4, k % 4);
            out[rem as usize] += c as i128 * (p as i128).pow(quot as u32);
        }
        out
    }

    /// Equality in Z[s^{+-1}]/(s^4 - p).
    pub fn reduced_eq(&self, other: &LaurentScalar, p: u32) -> bool {
        self.sub(other).reduce_mod(p) == [0, 0, 0, 0]
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, &c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, k) {
                (c, 0) => write!(f, "{c}")?,
                (1, k) => write!(f, "s^{k}")?,
                (c, k) => write!(f, "{c}*s^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of the quantum torus: exponent vectors with Laurent coefficients.
/// The Lambda context is passed to `twisted_mul` as the doubled matrix.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TorusElement {
    terms: BTreeMap<DimVec, LaurentScalar>,
}

impl TorusElement {
    pub fn zero() -> TorusElement {
        TorusElement::default()
    }

    pub fn one(n: usize) -> TorusElement {
        TorusElement::monomial(vec![0; n])
    }

    pub fn monomial(alpha: DimVec) -> TorusElement {
        let mut terms = BTreeMap::new();
        terms.insert(alpha, LaurentScalar::one());
        TorusElement { terms }
    }

    pub fn term(alpha: DimVec, c: LaurentScalar) -> TorusElement {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(alpha, c);
        }
        TorusElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &[i64]) -> LaurentScalar {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DimVec, &LaurentScalar)> + '_ {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        for (alpha, c) in &other.terms {
            let entry = out.terms.entry(alpha.clone()).or_default();
            *entry = entry.add(c);
            if entry.is_zero() {
                out.terms.remove(alpha);
            }
        }
        out
    }

    pub fn sub(&self, other: &TorusElement) -> TorusElement {
        self.add(&other.scalar_mul(&LaurentScalar::int(-1)))
    }

    pub fn scalar_mul(&self, c: &LaurentScalar) -> TorusElement {
        if c.is_zero() {
            return TorusElement::zero();
        }
        TorusElement {
            terms: self.terms.iter().map(|(a, x)| (a.clone(), x.mul(c))).collect(),
        }
    }

    /// Twisted product: X^e X^f = s^{lambda2(e,f)} X^{e+f}, extended
    /// bilinearly. `lambda2` is the doubled skew matrix 2*Lambda.
    pub fn twisted_mul(&self, other: &TorusElement, lambda2: &IMatrix) -> TorusElement {
        let mut out = TorusElement::zero();
        for (e, ce) in &self.terms {
            for (f, cf) in &other.terms {
                assert_eq!(e.len(), f.len(), "exponent length mismatch");
                let twist = lambda2.form(e, f);
                let c = ce.mul(cf).shifted(twist);
                let alpha = dim_add(e, f);
                let entry = out.terms.entry(alpha.clone()).or_default();
                *entry = entry.add(&c);
                if entry.is_zero() {
                    out.terms.remove(&alpha);
                }
            }
        }
        out
    }

    pub fn equals(&self, other: &TorusElement) -> bool {
        self == other
    }

    /// Equality after specializing s^4 = p.
    pub fn reduced_eq(&self, other: &TorusElement, p: u32) -> bool {
        let diff = self.sub(other);
        diff.terms.values().all(|c| c.reduce_mod(p) == [0, 0, 0, 0])
    }

    /// First exponent vector (in the canonical order) where the two sides
    /// differ mod (s^4 - p), for failure diagnostics.
    pub fn first_reduced_difference(&self, other: &TorusElement, p: u32) -> Option<DimVec> {
        let diff = self.sub(other);
        diff.terms
            .iter()
            .find(|(_, c)| c.reduce_mod(p) != [0, 0, 0, 0])
            .map(|(a, _)| a.clone())
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (alpha, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let alpha_str =
                alpha.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            let is_one = c == &LaurentScalar::one();
            let single = c.terms.len() == 1;
            if alpha.iter().all(|&x| x == 0) {
                if single {
                    write!(f, "{c}")?;
                } else {
                    write!(f, "({c})")?;
                }
            } else if is_one {
                write!(f, "X^({alpha_str})")?;
            } else if single {
                write!(f, "{c}*X^({alpha_str})")?;
            } else {
                write!(f, "({c})*X^({alpha_str})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
