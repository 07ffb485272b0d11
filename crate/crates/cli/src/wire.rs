//! JSON file formats for curves and one-parameter-subgroup data.

use std::collections::BTreeMap;

use curvestab::chow_weight::OnePSDatum;
use curvestab::curve_model::{Component, Mark, MarkSite};
use curvestab::newton::{PointKind, PointProfile};
use curvestab::{Curve, CurveModel, Rational, Scalar};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentFile {
    pub id: String,
    pub genus: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SiteFile {
    pub id: String,
    pub component: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarkFile {
    pub id: String,
    pub site: String,
    /// `"p/q"` or `"p"`.
    pub weight: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub components: Vec<ComponentFile>,
    #[serde(default)]
    pub nodes: Vec<(String, String)>,
    #[serde(default)]
    pub sites: Vec<SiteFile>,
    #[serde(default)]
    pub marks: Vec<MarkFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileFile {
    pub id: String,
    pub component: String,
    /// `"smooth"` or `"node-branch:<node id>"`.
    pub kind: String,
    pub vanish: Vec<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub marks: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumFile {
    pub m: usize,
    pub rho: Vec<i64>,
    pub hbar: BTreeMap<String, usize>,
    pub profiles: Vec<ProfileFile>,
    #[serde(default)]
    pub imax: BTreeMap<String, usize>,
}

fn pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        out.push('/');
        match seg {
            Segment::Seq { index } => out.push_str(&index.to_string()),
            Segment::Map { key } => out.push_str(&key.replace('~', "~0").replace('/', "~1")),
            Segment::Enum { variant } => out.push_str(variant),
            Segment::Unknown => out.push('?'),
        }
    }
    out
}

/// Parses JSON, reporting schema errors with a JSON pointer.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let at = pointer(e.path());
        let at = if at.is_empty() { "/".to_string() } else { at };
        CliError::Schema(format!("{at}: {}", e.into_inner()))
    })
}

fn rational(at: &str, s: &str) -> Result<Rational, CliError> {
    Rational::parse_rational(s).map_err(|e| match e {
        curvestab::Error::ZeroDenominator(_) => CliError::Rational(format!("{at}: zero denominator in `{s}`")),
        _ => CliError::Rational(format!("{at}: malformed rational `{s}`")),
    })
}

impl CurveFile {
    pub fn to_model(&self) -> Result<CurveModel<Rational>, CliError> {
        let known = |id: &str| self.components.iter().any(|c| c.id == id);
        for (k, (a, b)) in self.nodes.iter().enumerate() {
            for (end, id) in [(0, a), (1, b)] {
                if !known(id) {
                    return Err(CliError::Unknown(format!("/nodes/{k}/{end}: unknown component `{id}`")));
                }
            }
        }
        for (k, s) in self.sites.iter().enumerate() {
            if !known(&s.component) {
                return Err(CliError::Unknown(format!(
                    "/sites/{k}/component: unknown component `{}`",
                    s.component
                )));
            }
        }
        let marks = self
            .marks
            .iter()
            .enumerate()
            .map(|(k, m)| {
                Ok(Mark {
                    id: m.id.clone(),
                    site: m.site.clone(),
                    weight: rational(&format!("/marks/{k}/weight"), &m.weight)?,
                })
            })
            .collect::<Result<_, CliError>>()?;
        Ok(CurveModel {
            components: self
                .components
                .iter()
                .map(|c| Component {
                    id: c.id.clone(),
                    genus: c.genus,
                })
                .collect(),
            nodes: self.nodes.clone(),
            sites: self
                .sites
                .iter()
                .map(|s| MarkSite {
                    id: s.id.clone(),
                    component: s.component.clone(),
                })
                .collect(),
            marks,
        })
    }

    pub fn to_curve(&self) -> Result<Curve<Rational>, CliError> {
        Ok(Curve::new(&self.to_model()?)?)
    }

    pub fn from_model(m: &CurveModel<Rational>) -> Self {
        CurveFile {
            components: m
                .components
                .iter()
                .map(|c| ComponentFile {
                    id: c.id.clone(),
                    genus: c.genus,
                })
                .collect(),
            nodes: m.nodes.clone(),
            sites: m
                .sites
                .iter()
                .map(|s| SiteFile {
                    id: s.id.clone(),
                    component: s.component.clone(),
                })
                .collect(),
            marks: m
                .marks
                .iter()
                .map(|k| MarkFile {
                    id: k.id.clone(),
                    site: k.site.clone(),
                    weight: k.weight.to_string(),
                })
                .collect(),
        }
    }
}

impl DatumFile {
    pub fn to_datum(&self, curve: &Curve<Rational>) -> Result<OnePSDatum, CliError> {
        let component = |at: String, id: &str| {
            curve
                .component_index(id)
                .map_err(|_| CliError::Unknown(format!("{at}: unknown component `{id}`")))
        };
        for id in self.hbar.keys() {
            component(format!("/hbar/{id}"), id)?;
        }
        let hbar = curve
            .components()
            .iter()
            .map(|c| {
                self.hbar
                    .get(&c.id)
                    .copied()
                    .ok_or_else(|| CliError::Schema(format!("/hbar: missing entry for `{}`", c.id)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mark = |at: String, id: &str| {
            curve
                .marks()
                .iter()
                .position(|m| m.id == id)
                .ok_or_else(|| CliError::Unknown(format!("{at}: unknown mark `{id}`")))
        };
        let mut profiles = Vec::new();
        for (k, p) in self.profiles.iter().enumerate() {
            let kind = match p.kind.as_str() {
                "smooth" => PointKind::Smooth,
                other => match other.strip_prefix("node-branch:") {
                    Some(n) => PointKind::NodeBranch(curve.node_index(n).ok_or_else(|| {
                        CliError::Unknown(format!("/profiles/{k}/kind: unknown node `{n}`"))
                    })?),
                    None => {
                        return Err(CliError::Schema(format!(
                            "/profiles/{k}/kind: expected `smooth` or `node-branch:<node>`, got `{other}`"
                        )))
                    }
                },
            };
            profiles.push(PointProfile {
                id: p.id.clone(),
                component: component(format!("/profiles/{k}/component"), &p.component)?,
                kind,
                marks: p
                    .marks
                    .iter()
                    .enumerate()
                    .map(|(j, id)| mark(format!("/profiles/{k}/marks/{j}"), id))
                    .collect::<Result<_, _>>()?,
                vanish: p.vanish.clone(),
            });
        }
        let mut imax = vec![None; curve.marks().len()];
        for (id, &i) in &self.imax {
            imax[mark(format!("/imax/{id}"), id)?] = Some(i);
        }
        Ok(OnePSDatum {
            m: self.m,
            rho: self.rho.clone(),
            hbar,
            profiles,
            imax,
        })
    }

    pub fn from_datum(d: &OnePSDatum, curve: &Curve<Rational>) -> Self {
        let cid = |a: usize| curve.component(a).id.clone();
        DatumFile {
            m: d.m,
            rho: d.rho.clone(),
            hbar: (0..d.hbar.len()).map(|a| (cid(a), d.hbar[a])).collect(),
            profiles: d
                .profiles
                .iter()
                .map(|p| ProfileFile {
                    id: p.id.clone(),
                    component: cid(p.component),
                    kind: match p.kind {
                        PointKind::Smooth => "smooth".into(),
                        PointKind::NodeBranch(k) => format!("node-branch:{}", Curve::<Rational>::node_id(k)),
                    },
                    vanish: p.vanish.clone(),
                    marks: p.marks.iter().map(|&j| curve.marks()[j].id.clone()).collect(),
                })
                .collect(),
            imax: d
                .imax
                .iter()
                .enumerate()
                .filter_map(|(j, i)| i.map(|i| (curve.marks()[j].id.clone(), i)))
                .collect(),
        }
    }
}
