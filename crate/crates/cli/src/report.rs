//! Report types written by the commands. Field order is the output order.

use std::collections::BTreeMap;

use curvestab::{Rational, Scalar};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Exact rational, optionally accompanied by a float approximation.
#[derive(Debug, Clone, PartialEq)]
pub struct Q {
    pub exact: String,
    pub approx: Option<f64>,
}

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.approx {
            None => s.serialize_str(&self.exact),
            Some(x) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("exact", &self.exact)?;
                m.serialize_entry("approx", &x)?;
                m.end()
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Fmt {
    pub float: bool,
}

impl Fmt {
    pub fn q(&self, x: &Rational) -> Q {
        Q {
            exact: x.to_string(),
            approx: self.float.then(|| x.approx()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WitnessOut {
    pub subcurve: Vec<String>,
    pub value: Q,
    pub lower: Q,
    pub upper: Q,
    pub side: &'static str,
    pub kind: &'static str,
}

#[derive(Debug, Serialize)]
pub struct VerdictOut {
    pub status: &'static str,
    pub witnesses: Vec<WitnessOut>,
}

#[derive(Debug, Serialize)]
pub struct DisagreementOut {
    pub subcurve: Vec<String>,
    pub degree: i64,
    pub lower: Q,
    pub h0_lhs: Option<Q>,
    pub h0_rhs: Q,
}

#[derive(Debug, Serialize)]
pub struct EquivalenceOut {
    pub in_regime: bool,
    pub interval: &'static str,
    pub h0: &'static str,
    pub disagreements: Vec<DisagreementOut>,
}

#[derive(Debug, Serialize)]
pub struct ExtremalOut {
    pub extremal: bool,
    pub violating: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct CheckOut {
    pub criterion: &'static str,
    pub status: &'static str,
    pub witnesses: Vec<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h0: Option<VerdictOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<EquivalenceOut>,
    pub extremal: Option<ExtremalOut>,
}

#[derive(Debug, Serialize)]
pub struct TwistOut {
    pub components: Vec<String>,
    pub vector: Vec<i64>,
    pub twist: Option<Vec<i64>>,
    pub coefficients: Option<Vec<i64>>,
}

#[derive(Debug, Serialize)]
pub struct ChowOut {
    pub omega: Q,
    pub mu_a: Q,
    pub omega_a: Q,
    pub e: Q,
}

#[derive(Debug, Serialize)]
pub struct TwoWeightOut {
    pub subcurve: Vec<String>,
    pub m: usize,
    pub m0: usize,
    pub omega: Q,
    pub mu_a: Q,
    pub omega_a: Q,
    pub e: Q,
    pub closed_form: Q,
    pub agrees: bool,
}

#[derive(Debug, Serialize)]
pub struct OracleOut {
    pub k: i64,
    pub count: i64,
    pub second_difference: i64,
    pub twice_area: Q,
}

#[derive(Debug, Serialize)]
pub struct NewtonOut {
    pub width: i64,
    pub vertices: Vec<(Q, Q)>,
    pub area: Q,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleOut>,
}

#[derive(Debug, Serialize)]
pub struct StaircaseOut {
    pub ok: bool,
    pub violations: Vec<(String, usize)>,
}

#[derive(Debug, Serialize)]
pub struct TrapezoidOut {
    pub point: String,
    pub rhs: Q,
    pub exact: Q,
    pub ok: bool,
    pub half_rho: Q,
}

#[derive(Debug, Serialize)]
pub struct PrimaryOut {
    pub indices: Vec<usize>,
    pub j_bar: Option<usize>,
    pub w_pri: Option<i64>,
    pub width_bound_ok: bool,
}

#[derive(Debug, Serialize)]
pub struct DegreeBoundOut {
    #[serde(rename = "C")]
    pub c: Q,
    #[serde(rename = "M")]
    pub m: Q,
    #[serde(rename = "C_min")]
    pub c_min: Q,
    #[serde(rename = "C1")]
    pub c1: Q,
    #[serde(rename = "C2")]
    pub c2: Q,
    #[serde(rename = "M1")]
    pub m1: Q,
    #[serde(rename = "M2")]
    pub m2: Q,
    /// Connected proper subcurves below `C deg X`.
    pub violations: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct BoundsOut {
    pub degree_bound: DegreeBoundOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub staircase: Option<StaircaseOut>,
    #[serde(rename = "E_alpha", skip_serializing_if = "Option::is_none")]
    pub e_alpha: Option<BTreeMap<String, Q>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_x: Option<Q>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_hat: Option<Q>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_hat_a: Option<Q>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho_hat: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unassigned: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trapezoid_report: Option<Vec<TrapezoidOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primary: Option<BTreeMap<String, PrimaryOut>>,
}

#[derive(Debug, Serialize)]
pub struct DfOut {
    pub subcurve: Vec<String>,
    pub value: Q,
}

#[derive(Debug, Serialize)]
pub struct DfWitnessOut {
    pub subcurve: Vec<String>,
    pub power: i64,
    pub value: Q,
}

#[derive(Debug, Serialize)]
pub struct KCheckOut {
    pub verdict: &'static str,
    pub reason: Option<String>,
    pub proportional: bool,
    pub df: Vec<DfOut>,
    pub witness: Option<DfWitnessOut>,
}

#[derive(Debug, Serialize)]
pub struct ClassifyOut {
    pub class: &'static str,
    pub exceptional: Vec<String>,
    pub witness: Option<String>,
    pub reason: Option<String>,
}
