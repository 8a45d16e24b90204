//! Motivic interpolation: an identity verified at several primes is lifted
//! to the counting-polynomial level by interpolating, for every exponent
//! vector and every s-power, the integer coefficient as a polynomial in q.
//! Weights are prime-independent, so the (alpha, s-power) slots align across
//! primes and only the point counts vary.

use super::VerifyError;
use crate::grassmann::{interpolate_integer_poly, Poly};
use crate::quiver::DimVec;
use crate::torus::TorusElement;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize)]
pub struct MotivicSlot {
    pub alpha: DimVec,
    pub s_exp: i64,
    pub lhs_values: Vec<i64>,
    pub rhs_values: Vec<i64>,
    pub lhs_poly: Option<String>,
    pub rhs_poly: Option<String>,
    pub ok: bool,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct MotivicReport {
    pub identity: String,
    pub primes: Vec<u32>,
    pub consistent: bool,
    pub slots: Vec<MotivicSlot>,
    pub diagnostics: Vec<String>,
}

/// Run `runner` at every prime, then interpolate each (alpha, s-power) slot
/// of each side through all but the last prime and check the held-out value
/// and integrality. The identity holds at the counting-polynomial level iff
/// every slot interpolates consistently and the two sides' polynomials agree.
pub fn interp_motivic<F>(
    identity: &str,
    primes: &[u32],
    mut runner: F,
) -> Result<MotivicReport, VerifyError>
where
    F: FnMut(u32) -> Result<(TorusElement, TorusElement), VerifyError>,
{
    if primes.len() < 2 {
        return Err(VerifyError::Precondition("need at least two primes".into()));
    }
    let mut diagnostics = Vec::new();
    let mut per_prime = Vec::new();
    for &p in primes {
        let (lhs, rhs) = runner(p)?;
        if !lhs.reduced_eq(&rhs, p) {
            return Err(VerifyError::Precondition(format!(
                "identity fails at prime {p}; interpolation requires per-prime passes"
            )));
        }
        per_prime.push((p, lhs, rhs));
    }
    // collect slot values
    type Slot = (DimVec, i64);
    let mut lhs_slots: BTreeMap<Slot, Vec<i64>> = BTreeMap::new();
    let mut rhs_slots: BTreeMap<Slot, Vec<i64>> = BTreeMap::new();
    let n_primes = primes.len();
    for (k, (_, lhs, rhs)) in per_prime.iter().enumerate() {
        for (side, slots) in [(lhs, &mut lhs_slots), (rhs, &mut rhs_slots)] {
            for (alpha, c) in side.terms() {
                for (s_exp, coeff) in c.terms() {
                    let vals = slots
                        .entry((alpha.clone(), s_exp))
                        .or_insert_with(|| vec![0; n_primes]);
                    vals[k] = coeff;
                }
            }
        }
    }
    let keys: std::collections::BTreeSet<Slot> =
        lhs_slots.keys().chain(rhs_slots.keys()).cloned().collect();
    let zeroes = vec![0i64; n_primes];
    let mut slots = Vec::new();
    let mut consistent = true;
    for key in keys {
        let lv = lhs_slots.get(&key).unwrap_or(&zeroes).clone();
        let rv = rhs_slots.get(&key).unwrap_or(&zeroes).clone();
        let fit = |vals: &[i64]| -> (Option<Poly>, bool, String) {
            let pts: Vec<(i64, i64)> =
                primes.iter().map(|&p| p as i64).zip(vals.iter().copied()).collect();
            match interpolate_integer_poly(&pts[..pts.len() - 1]) {
                Ok(poly) => {
                    let (x, y) = pts[pts.len() - 1];
                    if poly.eval(x) == y {
                        (Some(poly), true, String::new())
                    } else {
                        let predicted = poly.eval(x);
                        (
                            Some(poly),
                            false,
                            format!("held-out prime {x}: predicted {predicted}, got {y}"),
                        )
                    }
                }
                Err(e) => (None, false, e.to_string()),
            }
        };
        let (lp, lok, lnote) = fit(&lv);
        let (rp, rok, rnote) = fit(&rv);
        let polys_match = match (&lp, &rp) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        };
        let ok = lok && rok && polys_match;
        consistent &= ok;
        let note = if !lnote.is_empty() || !rnote.is_empty() {
            format!("lhs: {lnote}; rhs: {rnote}")
        } else if !polys_match {
            "interpolated polynomials differ between sides".to_string()
        } else {
            String::new()
        };
        slots.push(MotivicSlot {
            alpha: key.0,
            s_exp: key.1,
            lhs_values: lv,
            rhs_values: rv,
            lhs_poly: lp.map(|p| p.to_string()),
            rhs_poly: rp.map(|p| p.to_string()),
            ok,
            note,
        });
    }
    diagnostics.push(format!("{} slots interpolated over {n_primes} primes", slots.len()));
    Ok(MotivicReport {
        identity: identity.to_string(),
        primes: primes.to_vec(),
        consistent,
        slots,
        diagnostics,
    })
}
