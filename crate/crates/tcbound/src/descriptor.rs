//! JSON descriptor files and the built-in example corpus.
//!
//! A descriptor names a space by dimension, fundamental-group data, and an
//! optional cohomology presentation (a preset or an explicit basis/products
//! table). Parsing is strict: unknown keys are rejected, and an explicit
//! algebra must pass validation before evaluation starts.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bounds::{KnownTc, ManifoldInfo, Pi1, SpaceDescriptor, WeightSpec};
use crate::cohomology::{
    preset_lens_skeleton, preset_lens_space, preset_rp, preset_torus_skeleton, AlgebraBuilder,
    GradedAlgebra,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorFile {
    pub name: String,
    pub dim: u64,
    pub pi1: Pi1File,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manifold: Option<ManifoldFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cat: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<CohomologyFile>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub weights: Vec<WeightFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub known_tc: Option<KnownTcFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aspherical_target: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Pi1File {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cd: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldFile {
    pub closed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wn_vanishes: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CohomologyFile {
    Preset(PresetFile),
    Explicit(ExplicitAlgebraFile),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresetFile {
    pub preset: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitAlgebraFile {
    pub p: u64,
    pub top_degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    pub basis: Vec<BasisEntryFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub products: Vec<ProductEntryFile>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntryFile {
    pub label: String,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntryFile {
    pub left: String,
    pub right: String,
    pub value: Vec<TermFile>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub coeff: i64,
    pub basis: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightFile {
    pub class: String,
    pub weight: u64,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnownTcFile {
    pub value: u64,
    pub cite: String,
}

impl DescriptorFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Canonical serialization used for hashing: struct field order, no
    /// whitespace variance, absent optionals omitted.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }

    pub fn to_space(&self) -> Result<SpaceDescriptor> {
        let pi1 = self.pi1.to_pi1()?;
        let cohomology = match &self.cohomology {
            None => None,
            Some(c) => Some(build_algebra(c)?),
        };
        Ok(SpaceDescriptor {
            name: self.name.clone(),
            dim: self.dim,
            pi1,
            manifold: self.manifold.as_ref().map(|m| ManifoldInfo {
                closed: m.closed,
                wn_vanishes: m.wn_vanishes,
            }),
            cat: self.cat,
            cohomology,
            weights: self
                .weights
                .iter()
                .map(|w| WeightSpec {
                    class: w.class.clone(),
                    weight: w.weight,
                    provenance: w.provenance.clone(),
                })
                .collect(),
            known_tc: self.known_tc.as_ref().map(|k| KnownTc {
                value: k.value,
                cite: k.cite.clone(),
            }),
            aspherical_target: self.aspherical_target.unwrap_or(false),
        })
    }
}

impl Pi1File {
    fn to_pi1(&self) -> Result<Pi1> {
        let err = |message: String| {
            Err(Error::Descriptor {
                field: "pi1".into(),
                message,
            })
        };
        let stray = |allowed: &str| {
            format!(
                "fields other than {allowed} are not allowed for type `{}`",
                self.kind
            )
        };
        match self.kind.as_str() {
            "trivial" => {
                if self.order.is_some() || self.cd.is_some() || self.rank.is_some() {
                    return err(stray("`type`"));
                }
                Ok(Pi1::Trivial)
            }
            "cyclic" => {
                if self.cd.is_some() || self.rank.is_some() {
                    return err(stray("`type`, `order`"));
                }
                match self.order {
                    Some(m) if m >= 1 => Ok(Pi1::Cyclic(m)),
                    Some(_) => err("cyclic order must be >= 1".into()),
                    None => err("type `cyclic` requires `order`".into()),
                }
            }
            "cd" => {
                if self.order.is_some() || self.rank.is_some() {
                    return err(stray("`type`, `cd`"));
                }
                match self.cd {
                    Some(c) => Ok(Pi1::CdBounded(c)),
                    None => err("type `cd` requires `cd`".into()),
                }
            }
            "free_abelian" => {
                if self.order.is_some() || self.cd.is_some() {
                    return err(stray("`type`, `rank`"));
                }
                Ok(Pi1::FreeAbelian { rank: self.rank })
            }
            "other" => {
                if self.order.is_some() || self.cd.is_some() || self.rank.is_some() {
                    return err(stray("`type`"));
                }
                Ok(Pi1::Other)
            }
            other => err(format!(
                "unknown pi1 type `{other}`; expected trivial | cyclic | cd | free_abelian | other"
            )),
        }
    }
}

fn build_algebra(spec: &CohomologyFile) -> Result<Arc<GradedAlgebra>> {
    match spec {
        CohomologyFile::Preset(p) => build_preset(p),
        CohomologyFile::Explicit(e) => build_explicit(e),
    }
}

fn build_preset(p: &PresetFile) -> Result<Arc<GradedAlgebra>> {
    let need = |param: Option<u64>, name: &str| {
        param.ok_or_else(|| Error::Descriptor {
            field: "cohomology".into(),
            message: format!("preset `{}` requires parameter `{name}`", p.preset),
        })
    };
    match p.preset.as_str() {
        "rp" => preset_rp(need(p.n, "n")? as usize),
        "lens_skeleton" => preset_lens_skeleton(need(p.n, "n")? as usize),
        "lens_space" => preset_lens_space(need(p.n, "n")? as usize),
        "torus_skeleton" => preset_torus_skeleton(
            need(p.mu, "mu")? as usize,
            need(p.d, "d")? as usize,
            p.p.unwrap_or(3),
        ),
        other => Err(Error::Descriptor {
            field: "cohomology".into(),
            message: format!(
                "unknown preset `{other}`; expected rp | lens_skeleton | lens_space | torus_skeleton"
            ),
        }),
    }
}

fn build_explicit(e: &ExplicitAlgebraFile) -> Result<Arc<GradedAlgebra>> {
    let mut b = AlgebraBuilder::new("custom", e.p, e.top_degree);
    for entry in &e.basis {
        b = b.basis(&entry.label, entry.degree);
    }
    if let Some(unit) = &e.unit {
        b = b.unit(unit);
    }
    if let Some(generators) = &e.generators {
        for g in generators {
            b = b.generator(g);
        }
    }
    for prod in &e.products {
        let terms: Vec<(i64, &str)> = prod
            .value
            .iter()
            .map(|t| (t.coeff, t.basis.as_str()))
            .collect();
        b = b.product(&prod.left, &prod.right, &terms);
    }
    let algebra = b.build()?;
    let violations = algebra.validate();
    if !violations.is_empty() {
        return Err(Error::Descriptor {
            field: "cohomology".into(),
            message: format!(
                "explicit algebra fails validation:\n{}",
                violations
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            ),
        });
    }
    Ok(algebra)
}

// ---------------------------------------------------------------------------
// Built-in example corpus
// ---------------------------------------------------------------------------

fn pi1_cyclic(order: u64) -> Pi1File {
    Pi1File {
        kind: "cyclic".into(),
        order: Some(order),
        cd: None,
        rank: None,
    }
}

fn binomial_sum(mu: u64, d: u64) -> u64 {
    // sum_{k <= d} C(mu, k), small inputs only
    let mut total = 0u64;
    let mut c = 1u64;
    for k in 0..=d.min(mu) {
        total += c;
        c = c * (mu - k) / (k + 1);
    }
    total
}

/// Builds the named built-in descriptor, or `None` when the name does not
/// match any family.
///
/// Families: `rp2..rp16`, `lens_skeleton_n1..n10`, `lens_space_n1..n8`,
/// `torus_skeleton_mu{mu}_d{d}` (2 <= d, 2d <= mu <= 10),
/// `simply_connected_dim3`, `cd2_dim5`.
pub fn builtin(name: &str) -> Option<DescriptorFile> {
    let lower = name.to_lowercase();
    if let Some(n) = lower.strip_prefix("rp").and_then(|r| r.parse::<u64>().ok()) {
        if !(2..=16).contains(&n) {
            return None;
        }
        return Some(DescriptorFile {
            name: format!("rp{n}"),
            dim: n,
            pi1: pi1_cyclic(2),
            manifold: Some(ManifoldFile {
                closed: true,
                wn_vanishes: Some(false), // w^n generates the top cohomology
            }),
            cat: None,
            cohomology: Some(CohomologyFile::Preset(PresetFile {
                preset: "rp".into(),
                n: Some(n),
                mu: None,
                d: None,
                p: None,
            })),
            weights: Vec::new(),
            known_tc: None,
            aspherical_target: None,
        });
    }
    if let Some(n) = lower
        .strip_prefix("lens_skeleton_n")
        .and_then(|r| r.parse::<u64>().ok())
    {
        if !(1..=10).contains(&n) {
            return None;
        }
        return Some(DescriptorFile {
            name: format!("lens_skeleton_n{n}"),
            dim: 2 * n,
            pi1: pi1_cyclic(3),
            manifold: None,
            cat: None,
            cohomology: Some(CohomologyFile::Preset(PresetFile {
                preset: "lens_skeleton".into(),
                n: Some(n),
                mu: None,
                d: None,
                p: None,
            })),
            weights: vec![
                WeightFile {
                    class: "bar(x)".into(),
                    weight: 1,
                    provenance: "zero-divisor".into(),
                },
                WeightFile {
                    class: "bar(y)".into(),
                    weight: 2,
                    provenance: "Bockstein image of bar(x) mod 3".into(),
                },
            ],
            known_tc: None,
            aspherical_target: Some(true),
        });
    }
    if let Some(n) = lower
        .strip_prefix("lens_space_n")
        .and_then(|r| r.parse::<u64>().ok())
    {
        if !(1..=8).contains(&n) {
            return None;
        }
        return Some(DescriptorFile {
            name: format!("lens_space_n{n}"),
            dim: 2 * n + 1,
            pi1: pi1_cyclic(3),
            manifold: Some(ManifoldFile {
                closed: true,
                wn_vanishes: None,
            }),
            cat: None,
            cohomology: Some(CohomologyFile::Preset(PresetFile {
                preset: "lens_space".into(),
                n: Some(n),
                mu: None,
                d: None,
                p: None,
            })),
            weights: Vec::new(),
            known_tc: None,
            aspherical_target: None,
        });
    }
    if let Some(rest) = lower.strip_prefix("torus_skeleton_mu") {
        let mut parts = rest.splitn(2, "_d");
        let mu: u64 = parts.next()?.parse().ok()?;
        let d: u64 = parts.next()?.parse().ok()?;
        if !(2..=5).contains(&d) || mu < 2 * d || mu > 10 {
            return None;
        }
        // Include the ring only while the Künneth square stays small.
        let cohomology = (binomial_sum(mu, d) <= 44).then(|| {
            CohomologyFile::Preset(PresetFile {
                preset: "torus_skeleton".into(),
                n: None,
                mu: Some(mu),
                d: Some(d),
                p: Some(3),
            })
        });
        return Some(DescriptorFile {
            name: format!("torus_skeleton_mu{mu}_d{d}"),
            dim: d,
            pi1: Pi1File {
                kind: "free_abelian".into(),
                order: None,
                cd: None,
                rank: Some(mu),
            },
            manifold: None,
            cat: None,
            cohomology,
            weights: Vec::new(),
            known_tc: None,
            aspherical_target: None,
        });
    }
    match lower.as_str() {
        "simply_connected_dim3" => Some(DescriptorFile {
            name: "simply_connected_dim3".into(),
            dim: 3,
            pi1: Pi1File {
                kind: "trivial".into(),
                order: None,
                cd: None,
                rank: None,
            },
            manifold: None,
            cat: None,
            cohomology: None,
            weights: Vec::new(),
            known_tc: None,
            aspherical_target: None,
        }),
        "cd2_dim5" => Some(DescriptorFile {
            name: "cd2_dim5".into(),
            dim: 5,
            pi1: Pi1File {
                kind: "cd".into(),
                order: None,
                cd: Some(2),
                rank: None,
            },
            manifold: None,
            cat: None,
            cohomology: None,
            weights: Vec::new(),
            known_tc: None,
            aspherical_target: None,
        }),
        _ => None,
    }
}

/// Every built-in name, in a stable order.
pub fn builtin_names() -> Vec<String> {
    let mut names = Vec::new();
    for n in 2..=16 {
        names.push(format!("rp{n}"));
    }
    for n in 1..=10 {
        names.push(format!("lens_skeleton_n{n}"));
    }
    for n in 1..=8 {
        names.push(format!("lens_space_n{n}"));
    }
    for d in 2..=5u64 {
        for mu in (2 * d)..=10 {
            names.push(format!("torus_skeleton_mu{mu}_d{d}"));
        }
    }
    names.push("simply_connected_dim3".into());
    names.push("cd2_dim5".into());
    names
}
