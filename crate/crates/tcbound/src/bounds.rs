//! Rule-based aggregation of topological-complexity bounds.
//!
//! Every applicable rule fires and is recorded with its citation and inputs,
//! binding or not; the certified interval is the max of the lower bounds
//! against the min of the upper bounds. Conflicts (including user-declared
//! known values falling outside the interval) are errors naming the two
//! clashing rules, never silent clamps.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cohomology::{GradedAlgebra, KunnethSquare};
use crate::error::{Error, Result};
use crate::padic::has_digit_two_base3;
use crate::tclower::{self, CupLengthOptions, WeightedClass};
use crate::vclass;

/// Classification of the fundamental group, as far as the rules need it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pi1 {
    Trivial,
    Cyclic(u64),
    /// Cohomological dimension of the group is at most the given value.
    CdBounded(u64),
    FreeAbelian { rank: Option<u64> },
    Other,
}

impl fmt::Display for Pi1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pi1::Trivial => write!(f, "trivial"),
            Pi1::Cyclic(m) => write!(f, "Z/{m}"),
            Pi1::CdBounded(c) => write!(f, "cd <= {c}"),
            Pi1::FreeAbelian { rank: Some(r) } => write!(f, "Z^{r}"),
            Pi1::FreeAbelian { rank: None } => write!(f, "free abelian"),
            Pi1::Other => write!(f, "unconstrained"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldInfo {
    pub closed: bool,
    /// Whether the top power of the degree-one mod-2 class vanishes; only
    /// meaningful for closed manifolds with fundamental group Z/2.
    pub wn_vanishes: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownTc {
    pub value: u64,
    pub cite: String,
}

/// A declared weighted class, referencing the cohomology presentation by an
/// expression such as `bar(y)` or a Künneth basis label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpec {
    pub class: String,
    pub weight: u64,
    pub provenance: String,
}

/// Everything the rule engine knows about a space.
#[derive(Debug, Clone)]
pub struct SpaceDescriptor {
    pub name: String,
    pub dim: u64,
    pub pi1: Pi1,
    pub manifold: Option<ManifoldInfo>,
    pub cat: Option<u64>,
    pub cohomology: Option<Arc<GradedAlgebra>>,
    pub weights: Vec<WeightSpec>,
    pub known_tc: Option<KnownTc>,
    pub aspherical_target: bool,
}

impl SpaceDescriptor {
    pub fn new(name: &str, dim: u64, pi1: Pi1) -> Self {
        Self {
            name: name.to_string(),
            dim,
            pi1,
            manifold: None,
            cat: None,
            cohomology: None,
            weights: Vec::new(),
            known_tc: None,
            aspherical_target: false,
        }
    }

    fn is_simply_connected(&self) -> bool {
        matches!(self.pi1, Pi1::Trivial | Pi1::Cyclic(1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Lower,
    Upper,
}

/// One rule that fired, binding or not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiredRule {
    pub value: u64,
    pub direction: Direction,
    pub rule: String,
    pub citation: String,
    pub inputs: Vec<String>,
}

/// Certified interval for TC plus full provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub lower: u64,
    pub upper: u64,
    pub rules_fired: Vec<FiredRule>,
    pub assumptions: Vec<String>,
    pub remarks: Vec<String>,
}

/// Exact value known for a registry family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegistryEntry {
    pub tc: u64,
    pub family: String,
    pub citation: String,
}

#[derive(Debug, Clone, Default)]
pub struct EvalOptions {
    /// Overrides the default search depth `2 * dim(X)`.
    pub max_depth: Option<usize>,
    /// Kernel-wide zero-divisor search instead of barred generators.
    pub exhaustive: bool,
}

pub const RULE_DIMENSION_UPPER: &str = "dimension-upper";
pub const RULE_SIMPLY_CONNECTED_UPPER: &str = "simply-connected-upper";
pub const RULE_CANONICAL_CLASS_UPPER: &str = "canonical-class-upper";
pub const RULE_BERSTEIN_MANIFOLD_UPPER: &str = "berstein-manifold-upper";
pub const RULE_CAT_UPPER: &str = "cat-upper";
pub const RULE_POSITIVITY_LOWER: &str = "positivity-lower";
pub const RULE_CUPLENGTH_LOWER: &str = "cuplength-lower";
pub const RULE_WEIGHTED_LOWER: &str = "weighted-lower";

/// Rejects descriptors whose fields cannot be meaningful together.
pub fn validate_descriptor(s: &SpaceDescriptor) -> Result<()> {
    let err = |field: &str, message: String| {
        Err(Error::Descriptor {
            field: field.into(),
            message,
        })
    };
    if let Pi1::Cyclic(0) = s.pi1 {
        return err("pi1", "cyclic group order must be >= 1".into());
    }
    if s.cat == Some(0) {
        return err("cat", "LS-category of a nonempty space is >= 1".into());
    }
    if let Some(m) = &s.manifold {
        if m.wn_vanishes.is_some()
            && !(m.closed && matches!(s.pi1, Pi1::Cyclic(2)))
        {
            return err(
                "manifold.wn_vanishes",
                "only meaningful for a closed manifold with pi1 = Z/2".into(),
            );
        }
    }
    if let Some(k) = &s.known_tc {
        if k.value == 0 {
            return err("known_tc.value", "TC is >= 1 in the unreduced convention".into());
        }
    }
    if !s.weights.is_empty() && s.cohomology.is_none() {
        return err(
            "weights",
            "weighted classes need a cohomology presentation to live in".into(),
        );
    }
    for w in &s.weights {
        if w.weight == 0 {
            return err("weights", format!("class `{}` has weight 0; must be >= 1", w.class));
        }
    }
    Ok(())
}

/// Resolves a weight-spec expression to an element of the Künneth square:
/// either `bar(<basis label>)` or a plain Künneth basis label.
fn resolve_class(
    square: &KunnethSquare,
    expr: &str,
) -> Result<crate::cohomology::AlgebraElement> {
    let expr = expr.trim();
    if let Some(inner) = expr.strip_prefix("bar(").and_then(|r| r.strip_suffix(')')) {
        return square.bar_generator(inner.trim()).map_err(|e| Error::Descriptor {
            field: "weights".into(),
            message: format!("cannot resolve `{expr}`: {e}"),
        });
    }
    crate::cohomology::AlgebraElement::from_label(square.algebra(), expr).map_err(|e| {
        Error::Descriptor {
            field: "weights".into(),
            message: format!("cannot resolve `{expr}`: {e}"),
        }
    })
}

/// Fires every applicable rule and aggregates the certified interval.
pub fn evaluate(s: &SpaceDescriptor, opts: &EvalOptions) -> Result<BoundReport> {
    validate_descriptor(s)?;
    let dim = s.dim;
    let mut rules: Vec<FiredRule> = Vec::new();
    let mut assumptions: Vec<String> = Vec::new();
    let mut remarks: Vec<String> = Vec::new();

    // Upper bounds -----------------------------------------------------
    rules.push(FiredRule {
        value: 2 * dim + 1,
        direction: Direction::Upper,
        rule: RULE_DIMENSION_UPPER.into(),
        citation: "TC(X) <= 2 dim(X) + 1, the dimensional bound for the sectional category of the path fibration".into(),
        inputs: vec![format!("dim(X) = {dim}")],
    });

    if s.is_simply_connected() {
        rules.push(FiredRule {
            value: dim + 1,
            direction: Direction::Upper,
            rule: RULE_SIMPLY_CONNECTED_UPPER.into(),
            citation: "TC(X) <= dim(X) + 1 for simply connected X".into(),
            inputs: vec![format!("dim(X) = {dim}"), "pi_1(X) trivial".into()],
        });
    }

    if dim >= 2 {
        let verdict = match s.pi1 {
            Pi1::Cyclic(2) => Some(vclass::z2_vanishes(dim)?),
            Pi1::Cyclic(3) => Some(vclass::z3_vanishes(dim)?),
            _ => None,
        };
        if let Some(v) = verdict {
            for a in &v.assumptions {
                if !assumptions.contains(a) {
                    assumptions.push(a.clone());
                }
            }
            match vclass::tc_upper_from_v(dim, &v) {
                Some((value, citation)) => rules.push(FiredRule {
                    value,
                    direction: Direction::Upper,
                    rule: RULE_CANONICAL_CLASS_UPPER.into(),
                    citation,
                    inputs: vec![
                        format!("pi_1(X) = Z/{}", v.group_order),
                        format!("{}", v.reason),
                    ],
                }),
                None => remarks.push(format!(
                    "canonical-class rule undecided: {}; the generic dimensional bound stands",
                    v.reason
                )),
            }
        }
    }

    if let (Pi1::Cyclic(2), Some(m)) = (&s.pi1, &s.manifold) {
        if m.closed && m.wn_vanishes == Some(true) && dim >= 1 {
            rules.push(FiredRule {
                value: 2 * dim - 1,
                direction: Direction::Upper,
                rule: RULE_BERSTEIN_MANIFOLD_UPPER.into(),
                citation: "closed manifold with pi_1 = Z/2 and w^n = 0: cat(X) <= dim(X) by Berstein's criterion, and TC(X) <= 2 cat(X) - 1".into(),
                inputs: vec![
                    format!("dim(X) = {dim}"),
                    "closed manifold".into(),
                    "w^n = 0".into(),
                ],
            });
        }
    }

    // LS-category: user-supplied value and Dranishnikov's bound for
    // cd(pi_1) <= 2 compete; the sharper one feeds TC <= 2 cat - 1.
    let mut cat_candidates: Vec<(u64, String)> = Vec::new();
    if let Some(c) = s.cat {
        cat_candidates.push((c, format!("user-supplied cat(X) = {c}")));
    }
    if let Pi1::CdBounded(cd) = s.pi1 {
        if cd <= 2 && dim >= 1 {
            let c = (dim - 1).div_ceil(2) + cd + 1;
            cat_candidates.push((
                c,
                format!("Dranishnikov: cat(X) <= ceil((dim-1)/2) + cd(pi_1) + 1 = {c} for cd(pi_1) <= 2"),
            ));
        }
    }
    if let Some((cat, source)) = cat_candidates.iter().min_by_key(|(c, _)| *c) {
        rules.push(FiredRule {
            value: 2 * cat - 1,
            direction: Direction::Upper,
            rule: RULE_CAT_UPPER.into(),
            citation: "TC(X) <= 2 cat(X) - 1".into(),
            inputs: vec![source.clone(), format!("dim(X) = {dim}")],
        });
    }

    // Lower bounds -----------------------------------------------------
    rules.push(FiredRule {
        value: 1,
        direction: Direction::Lower,
        rule: RULE_POSITIVITY_LOWER.into(),
        citation: "TC(X) >= 1 in the unreduced convention (TC(point) = 1)".into(),
        inputs: vec![],
    });

    if let Some(ring) = &s.cohomology {
        let max_depth = Some(opts.max_depth.unwrap_or(2 * dim as usize));
        let cup = tclower::zero_divisor_cuplength(
            ring,
            &CupLengthOptions {
                max_depth,
                exhaustive: opts.exhaustive,
                extra_factors: Vec::new(),
            },
        )?;
        let witness = if cup.length == 0 {
            "no nonzero product of zero-divisors found".to_string()
        } else {
            format!("{} = {} != 0", cup.witness.join("·"), cup.product)
        };
        rules.push(FiredRule {
            value: cup.certified_lower_bound_tc,
            direction: Direction::Lower,
            rule: RULE_CUPLENGTH_LOWER.into(),
            citation: "a nonzero product of k zero-divisors in H*(X×X) forces TC(X) >= k + 1".into(),
            inputs: vec![format!("ring {}", ring.name()), witness],
        });

        if !s.weights.is_empty() {
            let square = KunnethSquare::new(ring)?;
            let mut classes = Vec::with_capacity(s.weights.len());
            for spec in &s.weights {
                classes.push(WeightedClass {
                    label: spec.class.clone(),
                    element: resolve_class(&square, &spec.class)?,
                    weight: spec.weight,
                    provenance: spec.provenance.clone(),
                });
            }
            let bound = tclower::weighted_lower_bound(&square, &classes, max_depth)?;
            let witness = if bound.total_weight == 0 {
                "no nonzero weighted product found".to_string()
            } else {
                format!(
                    "{} = {} != 0, total weight {}",
                    bound
                        .witness
                        .iter()
                        .map(|c| c.label.as_str())
                        .collect::<Vec<_>>()
                        .join("·"),
                    bound.product,
                    bound.total_weight
                )
            };
            let mut inputs = vec![witness];
            for c in &classes {
                inputs.push(format!("wgt({}) >= {} ({})", c.label, c.weight, c.provenance));
            }
            rules.push(FiredRule {
                value: bound.certified_lower_bound_tc,
                direction: Direction::Lower,
                rule: RULE_WEIGHTED_LOWER.into(),
                citation: "a nonzero product of zero-divisors of total weight W forces TC(X) >= W + 1".into(),
                inputs,
            });
        }
    }

    // Aggregation --------------------------------------------------------
    let upper_rule = rules
        .iter()
        .filter(|r| r.direction == Direction::Upper)
        .min_by_key(|r| r.value)
        .expect("the dimension rule always fires");
    let lower_rule = rules
        .iter()
        .filter(|r| r.direction == Direction::Lower)
        .max_by_key(|r| r.value)
        .expect("the positivity rule always fires");
    let (lower, upper) = (lower_rule.value, upper_rule.value);
    if lower > upper {
        return Err(Error::Inconsistency {
            first_rule: lower_rule.rule.clone(),
            second_rule: upper_rule.rule.clone(),
            message: format!(
                "`{}`: lower bound {lower} exceeds upper bound {upper}",
                s.name
            ),
        });
    }

    if let Some(k) = &s.known_tc {
        if k.value < lower {
            return Err(Error::Inconsistency {
                first_rule: "known-tc".into(),
                second_rule: lower_rule.rule.clone(),
                message: format!(
                    "`{}`: declared TC = {} ({}) is below the certified lower bound {lower}",
                    s.name, k.value, k.cite
                ),
            });
        }
        if k.value > upper {
            return Err(Error::Inconsistency {
                first_rule: "known-tc".into(),
                second_rule: upper_rule.rule.clone(),
                message: format!(
                    "`{}`: declared TC = {} ({}) is above the certified upper bound {upper}",
                    s.name, k.value, k.cite
                ),
            });
        }
        remarks.push(format!(
            "declared TC = {} ({}) lies in the computed interval",
            k.value, k.cite
        ));
    }

    if let Some(entry) = registry_lookup(s) {
        if entry.tc < lower || entry.tc > upper {
            let conflicting = if entry.tc < lower {
                lower_rule.rule.clone()
            } else {
                upper_rule.rule.clone()
            };
            return Err(Error::Inconsistency {
                first_rule: "registry".into(),
                second_rule: conflicting,
                message: format!(
                    "`{}`: registry value TC = {} ({}) falls outside [{lower}, {upper}]",
                    s.name, entry.tc, entry.citation
                ),
            });
        }
        remarks.push(format!(
            "registry: TC = {} exactly for this {} ({})",
            entry.tc, entry.family, entry.citation
        ));
    }

    if let Pi1::CdBounded(cd) = s.pi1 {
        remarks.push(format!(
            "conjectural: TC(X) <= dim(X) + F(cd(pi_1)) for some universal F (here cd <= {cd}); displayed only, never used as a rule"
        ));
    }

    if s.aspherical_target {
        let certified =
            s.known_tc.as_ref().map(|k| k.value) == Some(2 * dim + 1) || lower == 2 * dim + 1;
        if certified {
            remarks.push(aspherical_message(&s.pi1, dim));
        }
    }

    Ok(BoundReport {
        lower,
        upper,
        rules_fired: rules,
        assumptions,
        remarks,
    })
}

fn aspherical_message(pi1: &Pi1, dim: u64) -> String {
    if dim == 1 {
        format!(
            "aspherical inference: dim(X) = 1 makes X itself aspherical, so the statement restates TC(X) = 3 for K({pi1}, 1)"
        )
    } else {
        format!(
            "derived: TC(K({pi1}, 1)) >= {} (the canonical class pulls back along the classifying map, and its top power is a nonzero product of zero-divisors)",
            2 * dim + 1
        )
    }
}

/// Emits the aspherical-space inference when the descriptor declares
/// TC = 2 dim + 1; nothing otherwise.
pub fn aspherical_inference(s: &SpaceDescriptor) -> Option<String> {
    let known = s.known_tc.as_ref()?.value;
    (known == 2 * s.dim + 1).then(|| aspherical_message(&s.pi1, s.dim))
}

/// Exact TC values for the space families with known answers, matched by
/// name and parameters. The match also requires the descriptor's dimension
/// and fundamental group to agree with the family, so a mislabeled
/// descriptor simply fails to match.
pub fn registry_lookup(s: &SpaceDescriptor) -> Option<RegistryEntry> {
    let name = s.name.to_lowercase();
    if let Some(n) = parse_param(&name, "rp") {
        if n >= 1 && n.is_power_of_two() && s.dim == n && s.pi1 == Pi1::Cyclic(2) {
            return Some(RegistryEntry {
                tc: 2 * n,
                family: "real projective space".into(),
                citation: "TC(RP^n) = 2n exactly when n is a power of 2".into(),
            });
        }
        return None;
    }
    if let Some(n) = parse_param(&name, "lens_skeleton_n") {
        if n >= 1 && !has_digit_two_base3(n) && s.dim == 2 * n && s.pi1 == Pi1::Cyclic(3) {
            return Some(RegistryEntry {
                tc: 4 * n + 1,
                family: "lens-space skeleton".into(),
                citation: "2n-skeleton of L_3^{2n+1}: TC = 2 dim + 1 when the base-3 digits of n are all 0 or 1".into(),
            });
        }
        return None;
    }
    if let Some(n) = parse_param(&name, "lens_space_n") {
        if n >= 1 && !has_digit_two_base3(n) && s.dim == 2 * n + 1 && s.pi1 == Pi1::Cyclic(3) {
            return Some(RegistryEntry {
                tc: 2 * (2 * n + 1),
                family: "lens space".into(),
                citation: "L_3^{2n+1}: TC = 2 dim when the base-3 digits of n are all 0 or 1".into(),
            });
        }
        return None;
    }
    if let Some(rest) = name.strip_prefix("torus_skeleton_mu") {
        let mut parts = rest.splitn(2, "_d");
        let mu: u64 = parts.next()?.parse().ok()?;
        let d: u64 = parts.next()?.parse().ok()?;
        if mu >= 2 * d
            && d >= 2
            && s.dim == d
            && matches!(s.pi1, Pi1::FreeAbelian { .. })
        {
            return Some(RegistryEntry {
                tc: 2 * d + 1,
                family: "torus skeleton".into(),
                citation: "d-skeleton of the mu-torus: TC = 2d + 1 for mu >= 2d >= 4 (Cohen-Pruidze)".into(),
            });
        }
        return None;
    }
    None
}

fn parse_param(name: &str, prefix: &str) -> Option<u64> {
    name.strip_prefix(prefix)?.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{preset_lens_skeleton, preset_rp};

    fn lens_descriptor(n: usize) -> SpaceDescriptor {
        let mut s = SpaceDescriptor::new(
            &format!("lens_skeleton_n{n}"),
            2 * n as u64,
            Pi1::Cyclic(3),
        );
        s.cohomology = Some(preset_lens_skeleton(n).unwrap());
        s.weights = vec![
            WeightSpec {
                class: "bar(x)".into(),
                weight: 1,
                provenance: "zero-divisor".into(),
            },
            WeightSpec {
                class: "bar(y)".into(),
                weight: 2,
                provenance: "Bockstein image of bar(x)".into(),
            },
        ];
        s.aspherical_target = true;
        s
    }

    fn rp_descriptor(n: usize) -> SpaceDescriptor {
        let mut s = SpaceDescriptor::new(&format!("rp{n}"), n as u64, Pi1::Cyclic(2));
        s.manifold = Some(ManifoldInfo {
            closed: true,
            wn_vanishes: Some(false),
        });
        s.cohomology = Some(preset_rp(n).unwrap());
        s
    }

    #[test]
    fn simply_connected_dim3_gets_upper_four() {
        let s = SpaceDescriptor::new("simply_connected_dim3", 3, Pi1::Trivial);
        let report = evaluate(&s, &EvalOptions::default()).unwrap();
        assert_eq!(report.upper, 4);
        assert_eq!(report.lower, 1);
        // The generic rule still fires, superseded.
        assert!(report
            .rules_fired
            .iter()
            .any(|r| r.rule == RULE_DIMENSION_UPPER && r.value == 7));
    }

    #[test]
    fn berstein_rule_fires_for_closed_z2_manifold() {
        let mut s = SpaceDescriptor::new("m5", 5, Pi1::Cyclic(2));
        s.manifold = Some(ManifoldInfo {
            closed: true,
            wn_vanishes: Some(true),
        });
        let report = evaluate(&s, &EvalOptions::default()).unwrap();
        assert_eq!(report.upper, 9); // 2·5 − 1
        assert!(report
            .rules_fired
            .iter()
            .any(|r| r.rule == RULE_BERSTEIN_MANIFOLD_UPPER && r.value == 9));
    }

    #[test]
    fn cd_bounded_dim5_gets_nine() {
        let s = SpaceDescriptor::new("cd2_dim5", 5, Pi1::CdBounded(2));
        let report = evaluate(&s, &EvalOptions::default()).unwrap();
        assert_eq!(report.upper, 9); // dim + 2 cd, odd branch
        assert!(report.remarks.iter().any(|r| r.contains("conjectural")));
    }

    #[test]
    fn lens_skeleton_n1_pins_five() {
        let report = evaluate(&lens_descriptor(1), &EvalOptions::default()).unwrap();
        assert_eq!((report.lower, report.upper), (5, 5));
        assert!(report
            .remarks
            .iter()
            .any(|r| r.contains("TC(K(Z/3, 1)) >= 5")));
        assert!(report.remarks.iter().any(|r| r.contains("registry")));
    }

    #[test]
    fn rp2_pins_four() {
        let report = evaluate(&rp_descriptor(2), &EvalOptions::default()).unwrap();
        assert_eq!((report.lower, report.upper), (4, 4));
    }

    #[test]
    fn known_tc_outside_interval_is_an_inconsistency() {
        let mut s = rp_descriptor(2);
        s.known_tc = Some(KnownTc {
            value: 10,
            cite: "bogus".into(),
        });
        match evaluate(&s, &EvalOptions::default()) {
            Err(Error::Inconsistency {
                first_rule,
                second_rule,
                ..
            }) => {
                assert_eq!(first_rule, "known-tc");
                assert_eq!(second_rule, RULE_CANONICAL_CLASS_UPPER);
            }
            other => panic!("expected inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn contradictory_cat_is_an_inconsistency_naming_both_rules() {
        let mut s = rp_descriptor(2);
        s.cat = Some(1); // forces TC <= 1, against the cup-length lower bound 4
        match evaluate(&s, &EvalOptions::default()) {
            Err(Error::Inconsistency {
                first_rule,
                second_rule,
                ..
            }) => {
                assert_eq!(first_rule, RULE_CUPLENGTH_LOWER);
                assert_eq!(second_rule, RULE_CAT_UPPER);
            }
            other => panic!("expected inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn registry_examples() {
        let rp4 = rp_descriptor(4);
        assert_eq!(registry_lookup(&rp4).unwrap().tc, 8);

        let mut torus = SpaceDescriptor::new(
            "torus_skeleton_mu6_d2",
            2,
            Pi1::FreeAbelian { rank: Some(6) },
        );
        assert_eq!(registry_lookup(&torus).unwrap().tc, 5);
        torus.dim = 3; // parameter mismatch: no registry match
        assert!(registry_lookup(&torus).is_none());

        let lens3 = SpaceDescriptor::new("lens_skeleton_n3", 6, Pi1::Cyclic(3));
        assert_eq!(registry_lookup(&lens3).unwrap().tc, 13);

        let rp3 = SpaceDescriptor::new("rp3", 3, Pi1::Cyclic(2));
        assert!(registry_lookup(&rp3).is_none()); // 3 is not a power of 2
    }

    #[test]
    fn aspherical_inference_gates_on_known_tc() {
        let mut s = SpaceDescriptor::new("x", 2, Pi1::Cyclic(3));
        assert!(aspherical_inference(&s).is_none());
        s.known_tc = Some(KnownTc {
            value: 5,
            cite: "computed".into(),
        });
        assert!(aspherical_inference(&s).unwrap().contains(">= 5"));
        s.known_tc = Some(KnownTc {
            value: 4,
            cite: "computed".into(),
        });
        assert!(aspherical_inference(&s).is_none());

        // Dimension 1: the inference merely restates the input.
        let mut circle_like = SpaceDescriptor::new("graph", 1, Pi1::Other);
        circle_like.known_tc = Some(KnownTc {
            value: 3,
            cite: "declared".into(),
        });
        let message = aspherical_inference(&circle_like).unwrap();
        assert!(message.contains("aspherical"), "{message}");
    }

    #[test]
    fn adding_information_never_widens_the_interval() {
        let with_ring = evaluate(&rp_descriptor(3), &EvalOptions::default()).unwrap();
        let mut bare = rp_descriptor(3);
        bare.cohomology = None;
        let without_ring = evaluate(&bare, &EvalOptions::default()).unwrap();
        assert!(with_ring.lower >= without_ring.lower);
        assert!(with_ring.upper <= without_ring.upper);
    }

    #[test]
    fn identical_descriptors_give_identical_reports() {
        let a = evaluate(&lens_descriptor(3), &EvalOptions::default()).unwrap();
        let b = evaluate(&lens_descriptor(3), &EvalOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn wn_vanishes_needs_closed_z2_manifold() {
        let mut s = SpaceDescriptor::new("bad", 3, Pi1::Cyclic(3));
        s.manifold = Some(ManifoldInfo {
            closed: true,
            wn_vanishes: Some(true),
        });
        assert!(matches!(
            evaluate(&s, &EvalOptions::default()),
            Err(Error::Descriptor { .. })
        ));
    }
}
