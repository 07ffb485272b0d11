//! Donaldson-Futaki invariants of two-weight test configurations.
//!
//! At a fixed polarization the sign of every two-weight invariant only encodes slope
//! stability. Proportionality to the dualizing degrees is detected by also scanning
//! the multiples `O(l)`: the configuration toward Y at power `l` has
//! `DF_l(Y) = (g-1)/(l D) * (l c_Y - ℓ_Y/2)` with `c_Y = ω_Y D / ω - d_Y`, which turns
//! positive for large `l` exactly when `c_Y > 0`.

use crate::curve_model::{Curve, Polarization, Subcurve};
use crate::error::{Error, Result};
use crate::scalar::{frac, int, Scalar};
use crate::slope::ScanOptions;

fn check_scope<F: Scalar>(curve: &Curve<F>) -> Result<()> {
    if !curve.marks().is_empty() {
        return Err(Error::OutOfScope("marked curves are not covered by the K-stability criterion".into()));
    }
    if curve.genus() <= 1 {
        return Err(Error::DualizingNotPositive(format!("genus {}", curve.genus())));
    }
    Ok(())
}

/// `ω_Y D / ω - d_Y`.
pub fn slope_margin<F: Scalar>(curve: &Curve<F>, d: &Polarization, y: Subcurve) -> Result<F> {
    let omega: F = curve.omega_degree(curve.full(), false)?;
    let wy: F = curve.omega_degree(y, false)?;
    Ok(wy / omega * int(d.total()) - int(d.on(y)))
}

pub fn df_at_power<F: Scalar>(curve: &Curve<F>, d: &Polarization, y: Subcurve, l: i64) -> Result<F> {
    check_scope(curve)?;
    curve.check_proper(y)?;
    if l < 1 {
        return Err(Error::InvalidArgument("power must be positive".into()));
    }
    let c = slope_margin(curve, d, y)?;
    let lf: F = int(l);
    Ok(frac::<F>(curve.genus() - 1, l * d.total()) * (lf * c - frac(curve.links(y), 2)))
}

pub fn df_two_weight<F: Scalar>(curve: &Curve<F>, d: &Polarization, y: Subcurve) -> Result<F> {
    df_at_power(curve, d, y, 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfWitness<F> {
    pub subcurve: Subcurve,
    pub power: i64,
    pub value: F,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KVerdict<F> {
    KStable,
    NotKStable {
        witness: Option<DfWitness<F>>,
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfReport<F> {
    /// DF at `l = 1` for every scanned proper subcurve.
    pub df: Vec<(Subcurve, F)>,
    pub proportional: bool,
    /// First configuration with positive DF over all powers, if any.
    pub scan_witness: Option<DfWitness<F>>,
    pub verdict: KVerdict<F>,
}

impl<F> DfReport<F> {
    pub fn scan_agrees(&self) -> bool {
        self.proportional == self.scan_witness.is_none()
    }
}

pub fn proportional<F: Scalar>(curve: &Curve<F>, d: &Polarization) -> bool {
    let omega = 2 * curve.genus() - 2;
    (0..curve.num_components()).all(|a| {
        let wa = 2 * curve.component(a).genus as i64 - 2 + curve.valence(a);
        d.degree(a) as i128 * omega as i128 == d.total() as i128 * wa as i128
    })
}

pub fn k_stable<F: Scalar>(curve: &Curve<F>, d: &Polarization, opts: &ScanOptions) -> Result<DfReport<F>> {
    check_scope(curve)?;
    let mut df = Vec::new();
    let mut scan_witness = None;
    for y in opts.subcurves(curve)? {
        df.push((y, df_two_weight(curve, d, y)?));
        if scan_witness.is_some() {
            continue;
        }
        let c = slope_margin(curve, d, y)?;
        if c.is_positive() {
            let half_links: F = frac(curve.links(y), 2);
            let power = (half_links / c).floor_int() + 1;
            let value = df_at_power(curve, d, y, power)?;
            if value.is_positive() {
                scan_witness = Some(DfWitness {
                    subcurve: y,
                    power,
                    value,
                });
            }
        }
    }
    let prop = proportional(curve, d);
    let verdict = if prop {
        KVerdict::KStable
    } else {
        let zero = (0..curve.num_components())
            .find(|&a| 2 * curve.component(a).genus as i64 - 2 + curve.valence(a) == 0);
        let reason = match (zero, &scan_witness) {
            (Some(a), _) => format!("ω-degree-zero component `{}`", curve.component(a).id),
            (None, Some(_)) => "positive DF configuration".into(),
            (None, None) => "not proportional".into(),
        };
        KVerdict::NotKStable {
            witness: scan_witness.clone(),
            reason,
        }
    };
    Ok(DfReport {
        df,
        proportional: prop,
        scan_witness,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve_model::{Component, CurveModel};
    use crate::Rational;
    use num_traits::Signed;

    fn curve(gs: &[u32], nodes: &[(usize, usize)]) -> Curve<Rational> {
        Curve::new(&CurveModel {
            components: gs
                .iter()
                .enumerate()
                .map(|(i, &g)| Component { id: format!("C{}", i + 1), genus: g })
                .collect(),
            nodes: nodes
                .iter()
                .map(|&(a, b)| (format!("C{}", a + 1), format!("C{}", b + 1)))
                .collect(),
            sites: vec![],
            marks: vec![],
        })
        .unwrap()
    }

    #[test]
    fn f2_values() {
        let c = curve(&[1, 1], &[(0, 1)]);
        let opts = ScanOptions::default();
        let d = Polarization::new(&c, vec![10, 10]).unwrap();
        assert_eq!(df_two_weight(&c, &d, Subcurve(2)).unwrap(), frac(-1, 40));
        let r = k_stable(&c, &d, &opts).unwrap();
        assert_eq!(r.verdict, KVerdict::KStable);
        assert!(r.df.iter().all(|(_, v)| v.is_negative()));

        let d = Polarization::new(&c, vec![11, 9]).unwrap();
        assert_eq!(df_two_weight(&c, &d, Subcurve(2)).unwrap(), frac(1, 40));
        let r = k_stable(&c, &d, &opts).unwrap();
        let w = r.scan_witness.clone().unwrap();
        assert_eq!((w.subcurve, w.power, w.value), (Subcurve(2), 1, frac(1, 40)));
        assert!(r.scan_agrees());
    }

    #[test]
    fn banana_needs_powers() {
        let c = curve(&[0, 0], &[(0, 1), (0, 1), (0, 1)]);
        let d = Polarization::new(&c, vec![11, 9]).unwrap();
        let r = k_stable(&c, &d, &ScanOptions::default()).unwrap();
        assert!(r.df.iter().all(|(_, v)| v.is_negative()));
        assert!(!r.proportional);
        assert!(r.scan_witness.as_ref().unwrap().power > 1);
        assert!(r.scan_agrees());
    }

    #[test]
    fn scope() {
        let irr = curve(&[3], &[]);
        let d = Polarization::new(&irr, vec![7]).unwrap();
        let r = k_stable(&irr, &d, &ScanOptions::default()).unwrap();
        assert_eq!(r.verdict, KVerdict::KStable);
        let ell = curve(&[1], &[]);
        let d = Polarization::new(&ell, vec![3]).unwrap();
        assert!(matches!(
            k_stable(&ell, &d, &ScanOptions::default()),
            Err(Error::DualizingNotPositive(_))
        ));
    }
}
