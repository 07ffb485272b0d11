//! Chow weights of diagonal one-parameter subgroups.

use crate::curve_model::{Curve, Polarization, Subcurve};
use crate::error::{Error, Result};
use crate::newton::{check_weights, point_contribution, PointKind, PointProfile};
use crate::scalar::{frac, int, Scalar};
use crate::slope::h0_guard;

/// Weights `rho[0] >= ... >= rho[m] = 0`, the top index per component and the
/// vanishing profiles at the support points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePSDatum {
    pub m: usize,
    pub rho: Vec<i64>,
    pub hbar: Vec<usize>,
    pub profiles: Vec<PointProfile>,
    /// Largest index not vanishing at each mark; `None` means `m`.
    pub imax: Vec<Option<usize>>,
}

impl OnePSDatum {
    pub fn imax_of(&self, mark: usize) -> usize {
        self.imax.get(mark).copied().flatten().unwrap_or(self.m)
    }

    pub fn sum_rho(&self) -> i64 {
        self.rho.iter().sum()
    }

    pub fn with_rho(&self, rho: Vec<i64>) -> Self {
        OnePSDatum {
            rho,
            ..self.clone()
        }
    }

    pub fn validate<F: Scalar>(&self, curve: &Curve<F>, d: &Polarization) -> Result<()> {
        let bad = |s: String| Err(Error::InconsistentDatum(s));
        if self.rho.len() != self.m + 1 {
            return bad(format!("rho has {} entries, expected {}", self.rho.len(), self.m + 1));
        }
        if check_weights(&self.rho).is_err() {
            return bad("rho is not non-increasing".into());
        }
        if self.rho[self.m] != 0 {
            return bad("last weight is not 0".into());
        }
        if self.hbar.len() != curve.num_components() {
            return bad("one hbar per component required".into());
        }
        if let Some(a) = (0..self.hbar.len()).find(|&a| self.hbar[a] > self.m) {
            return bad(format!("hbar of `{}` exceeds m", curve.component(a).id));
        }
        if self.imax.len() != curve.marks().len() {
            return bad("one imax slot per mark required".into());
        }
        let mut widths = vec![0i64; curve.num_components()];
        for p in &self.profiles {
            if p.component >= curve.num_components() {
                return bad(format!("profile `{}` on unknown component", p.id));
            }
            let h = self.hbar[p.component];
            if p.vanish.len() != h + 1 {
                return bad(format!(
                    "profile `{}` has {} entries, expected {}",
                    p.id,
                    p.vanish.len(),
                    h + 1
                ));
            }
            if p.vanish.iter().any(|&v| v < 0) {
                return bad(format!("profile `{}` has a negative vanishing order", p.id));
            }
            if let PointKind::NodeBranch(k) = p.kind {
                let Some(&(a, b)) = curve.nodes().get(k) else {
                    return bad(format!("profile `{}` names an unknown node", p.id));
                };
                if a != p.component && b != p.component {
                    return bad(format!("profile `{}` is not on its node", p.id));
                }
            }
            for &j in &p.marks {
                match curve.marks().get(j) {
                    Some(mk) if mk.component == p.component => {}
                    _ => return bad(format!("profile `{}` hosts a foreign mark", p.id)),
                }
            }
            widths[p.component] += p.vanish[h];
        }
        for a in 0..curve.num_components() {
            if widths[a] != d.degree(a) {
                return bad(format!(
                    "profile widths on `{}` sum to {}, degree is {}",
                    curve.component(a).id,
                    widths[a],
                    d.degree(a)
                ));
            }
        }
        for (j, mk) in curve.marks().iter().enumerate() {
            if self.imax_of(j) > self.hbar[mk.component] {
                return bad(format!("imax of `{}` exceeds hbar", mk.id));
            }
        }
        Ok(())
    }
}

pub fn total_e<F: Scalar>(datum: &OnePSDatum) -> Result<F> {
    datum.profiles.iter().try_fold(F::zero(), |s, p| {
        let h = *datum
            .hbar
            .get(p.component)
            .ok_or_else(|| Error::InconsistentDatum(format!("profile `{}` on unknown component", p.id)))?;
        Ok(s + point_contribution::<F>(&p.vanish, &datum.rho, h)?)
    })
}

pub fn mumford_weight<F: Scalar>(datum: &OnePSDatum, curve: &Curve<F>, d: &Polarization) -> Result<F> {
    datum.validate(curve, d)?;
    let lead: F = frac::<F>(2 * d.total(), datum.m as i64 + 1) * int(datum.sum_rho());
    Ok(lead - total_e::<F>(datum)?)
}

pub fn marked_weight<F: Scalar>(datum: &OnePSDatum, curve: &Curve<F>) -> F {
    let avg: F = frac(datum.sum_rho(), datum.m as i64 + 1);
    curve
        .marks()
        .iter()
        .enumerate()
        .fold(F::zero(), |s, (j, mk)| {
            s + mk.weight.clone() * (avg.clone() - int(datum.rho[datum.imax_of(j)]))
        })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowWeights<F> {
    pub omega: F,
    pub mu_a: F,
    pub omega_a: F,
    pub e: F,
}

pub fn chow_weight<F: Scalar>(datum: &OnePSDatum, curve: &Curve<F>, d: &Polarization) -> Result<ChowWeights<F>> {
    let omega = mumford_weight(datum, curve, d)?;
    let e = total_e(datum)?;
    let mu_a = marked_weight(datum, curve);
    Ok(ChowWeights {
        omega_a: omega.clone() + mu_a.clone(),
        omega,
        mu_a,
        e,
    })
}

/// Sizes `(m, m0)` of the full space and of the span of sections supported on Y.
pub fn two_weight_sizes<F: Scalar>(curve: &Curve<F>, d: &Polarization, y: Subcurve) -> Result<(usize, usize)> {
    curve.check_proper(y)?;
    let m = d.total() - curve.genus();
    let m0 = d.on(y) - curve.arithmetic_genus(y)?;
    if m0 < 0 || m < m0 + 2 {
        return Err(Error::DegreeGuard {
            component: curve.subcurve_ids(y).join(","),
            detail: "guard violated: spans too small for a two-weight datum".into(),
        });
    }
    Ok((m as usize, m0 as usize))
}

/// Weight 1 on the span of sections supported on Y, 0 on the rest.
///
/// Components of Y carry one flat profile of width `d_α` at `ℏ = m0`. On the
/// complement every linking node contributes a branch whose order jumps to 1 just
/// after `m0`, and a filler point absorbs the remaining degree with zero area.
pub fn two_weight_datum<F: Scalar>(curve: &Curve<F>, d: &Polarization, y: Subcurve) -> Result<OnePSDatum> {
    h0_guard(curve, d)?;
    let (m, m0) = two_weight_sizes(curve, d, y)?;
    let r = curve.num_components();
    let rho: Vec<i64> = (0..=m).map(|i| i64::from(i <= m0)).collect();
    let hbar: Vec<usize> = (0..r).map(|a| if y.contains(a) { m0 } else { m }).collect();
    let mut profiles = Vec::new();
    let mut hosted: Vec<Vec<usize>> = vec![Vec::new(); r];
    for (j, mk) in curve.marks().iter().enumerate() {
        if y.contains(mk.component) {
            hosted[mk.component].push(j);
        }
    }
    for a in y.indices() {
        profiles.push(PointProfile {
            id: format!("{}:span", curve.component(a).id),
            component: a,
            kind: PointKind::Smooth,
            marks: std::mem::take(&mut hosted[a]),
            vanish: vec![d.degree(a); m0 + 1],
        });
    }
    let mut branches = vec![0i64; r];
    for k in curve.linking_node_indices(y) {
        let (p, q) = curve.nodes()[k];
        let a = if y.contains(p) { q } else { p };
        branches[a] += 1;
        profiles.push(PointProfile {
            id: format!("{}:{}", Curve::<F>::node_id(k), curve.component(a).id),
            component: a,
            kind: PointKind::NodeBranch(k),
            marks: vec![],
            vanish: (0..=m).map(|i| i64::from(i > m0)).collect(),
        });
    }
    for a in y.complement(r).indices() {
        let rest = d.degree(a) - branches[a];
        if rest > 0 {
            let mut vanish = vec![0i64; m + 1];
            vanish[m] = rest;
            profiles.push(PointProfile {
                id: format!("{}:rest", curve.component(a).id),
                component: a,
                kind: PointKind::Smooth,
                marks: vec![],
                vanish,
            });
        }
    }
    let imax = curve
        .marks()
        .iter()
        .map(|mk| Some(if y.contains(mk.component) { m0 } else { m }))
        .collect();
    let datum = OnePSDatum {
        m,
        rho,
        hbar,
        profiles,
        imax,
    };
    datum.validate(curve, d)?;
    Ok(datum)
}

/// `2 (m0+1) ((D + A/2)/(m+1) - (d_Y + ℓ_Y/2 + A_Y/2)/(m0+1))`.
pub fn two_weight_closed_form<F: Scalar>(curve: &Curve<F>, d: &Polarization, y: Subcurve) -> Result<F> {
    h0_guard(curve, d)?;
    let (m, m0) = two_weight_sizes(curve, d, y)?;
    let whole = (int::<F>(d.total()) + curve.total_mark_weight().half()) / int(m as i64 + 1);
    let part = (int::<F>(d.on(y)) + frac(curve.links(y), 2) + curve.mark_weight_on(y).half())
        / int(m0 as i64 + 1);
    Ok(int::<F>(2 * (m0 as i64 + 1)) * (whole - part))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve_model::{Component, CurveModel, Mark, MarkSite};
    use crate::Rational;

    fn f2() -> Curve<Rational> {
        Curve::new(&CurveModel {
            components: vec![
                Component { id: "C1".into(), genus: 1 },
                Component { id: "C2".into(), genus: 1 },
            ],
            nodes: vec![("C1".into(), "C2".into())],
            sites: vec![],
            marks: vec![],
        })
        .unwrap()
    }

    fn f4() -> Curve<Rational> {
        Curve::new(&CurveModel {
            components: vec![
                Component { id: "C1".into(), genus: 1 },
                Component { id: "P".into(), genus: 0 },
            ],
            nodes: vec![("C1".into(), "P".into())],
            sites: vec![
                MarkSite { id: "p1".into(), component: "P".into() },
                MarkSite { id: "p2".into(), component: "P".into() },
            ],
            marks: vec![
                Mark { id: "x1".into(), site: "p1".into(), weight: int(1) },
                Mark { id: "x2".into(), site: "p2".into(), weight: int(1) },
            ],
        })
        .unwrap()
    }

    #[test]
    fn f4_boundary() {
        let c = f4();
        let d = Polarization::new(&c, vec![11, 9]).unwrap();
        let y = Subcurve(2);
        let datum = two_weight_datum(&c, &d, y).unwrap();
        assert_eq!((datum.m, datum.sum_rho()), (19, 10));
        let w = chow_weight(&datum, &c, &d).unwrap();
        assert_eq!(w.e, int(19));
        assert_eq!(w.omega, int(1));
        assert_eq!(w.mu_a, int(-1));
        assert_eq!(w.omega_a, int(0));
        assert_eq!(two_weight_closed_form(&c, &d, y).unwrap(), int(0));
    }

    #[test]
    fn f2_weights() {
        let c = f2();
        let d = Polarization::new(&c, vec![10, 10]).unwrap();
        let datum = two_weight_datum(&c, &d, Subcurve(1)).unwrap();
        assert_eq!(total_e::<Rational>(&datum).unwrap(), int(21));
        assert_eq!(datum.sum_rho(), 10);
        let y = Subcurve(2);
        let w = chow_weight(&two_weight_datum(&c, &d, y).unwrap(), &c, &d).unwrap();
        assert_eq!(w.omega_a, frac(1, 19));
        assert_eq!(two_weight_closed_form(&c, &d, y).unwrap(), frac(1, 19));
        let d = Polarization::new(&c, vec![11, 9]).unwrap();
        assert!(two_weight_closed_form(&c, &d, y).unwrap() < int(0));
    }

    #[test]
    fn zero_weights() {
        let c = f2();
        let d = Polarization::new(&c, vec![10, 10]).unwrap();
        let datum = two_weight_datum(&c, &d, Subcurve(1)).unwrap();
        let zero = datum.with_rho(vec![0; datum.m + 1]);
        let w = chow_weight(&zero, &c, &d).unwrap();
        assert_eq!((w.omega, w.mu_a), (int(0), int(0)));
    }

    #[test]
    fn rejects_inconsistent_widths() {
        let c = f2();
        let d = Polarization::new(&c, vec![10, 10]).unwrap();
        let mut datum = two_weight_datum(&c, &d, Subcurve(1)).unwrap();
        datum.profiles.pop();
        assert!(matches!(datum.validate(&c, &d), Err(Error::InconsistentDatum(_))));
    }
}
