//! Lower bounds for topological complexity from products of zero-divisors.
//!
//! A nonzero product of `k` zero-divisors in `H*(X×X)` forces `TC(X) >= k+1`;
//! when the factors carry declared weights, the bound sharpens to the total
//! weight plus one. The search is breadth-first over multisets of factors,
//! deduplicating by product value, so any product it reports certifies the
//! bound even though the true maximum may be larger.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cohomology::{AlgebraElement, GradedAlgebra, KunnethSquare};
use crate::error::{Error, Result};

/// Basis-size cap for the exhaustive kernel-wide search.
pub const EXHAUSTIVE_BASIS_CAP: usize = 12;

/// A zero-divisor with a declared weight and the reason the weight holds.
#[derive(Debug, Clone)]
pub struct WeightedClass {
    pub label: String,
    pub element: AlgebraElement,
    pub weight: u64,
    pub provenance: String,
}

/// Outcome of the cup-length search.
#[derive(Debug, Clone)]
pub struct CupLengthResult {
    /// Number of factors in the longest nonzero product found.
    pub length: usize,
    /// Labels of the factors, in canonical (sorted) order.
    pub witness: Vec<String>,
    pub factors: Vec<AlgebraElement>,
    /// The witness product itself; the unit for an empty witness.
    pub product: AlgebraElement,
    pub certified_lower_bound_tc: u64,
}

/// Outcome of the weighted search.
#[derive(Debug, Clone)]
pub struct WeightedLowerBound {
    pub total_weight: u64,
    pub witness: Vec<WeightedClass>,
    pub product: AlgebraElement,
    pub certified_lower_bound_tc: u64,
}

/// Options for [`zero_divisor_cuplength`].
#[derive(Debug, Clone, Default)]
pub struct CupLengthOptions {
    /// Maximum number of factors; defaults to `2 * top_degree`, past which
    /// every product dies by truncation.
    pub max_depth: Option<usize>,
    /// Search products of an entire kernel basis of the diagonal map instead
    /// of just barred generators. Exponential; gated by
    /// [`EXHAUSTIVE_BASIS_CAP`].
    pub exhaustive: bool,
    /// Extra factors to include in the pool; each must be a zero-divisor in
    /// the Künneth square.
    pub extra_factors: Vec<(String, AlgebraElement)>,
}

struct Factor {
    label: String,
    element: AlgebraElement,
    weight: u64,
}

/// Longest nonzero product of barred generators (and any supplied kernel
/// classes) in the Künneth square of `a`. The result is a certified lower
/// bound for TC: any nonzero product of zero-divisors certifies.
pub fn zero_divisor_cuplength(
    a: &Arc<GradedAlgebra>,
    opts: &CupLengthOptions,
) -> Result<CupLengthResult> {
    let violations = a.validate();
    if !violations.is_empty() {
        let msg = violations
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("\n");
        return Err(Error::InvalidAlgebra(msg));
    }
    let square = KunnethSquare::new(a)?;
    let mut pool: Vec<Factor> = Vec::new();
    if opts.exhaustive {
        if a.dim() > EXHAUSTIVE_BASIS_CAP {
            return Err(Error::Resource(format!(
                "exhaustive search needs a basis of size <= {EXHAUSTIVE_BASIS_CAP}, got {}",
                a.dim()
            )));
        }
        for element in square.diagonal_kernel_basis()? {
            pool.push(Factor {
                label: element.to_string(),
                element,
                weight: 1,
            });
        }
    } else {
        let generators: Vec<usize> = if a.generator_indices().is_empty() {
            (0..a.dim()).filter(|&i| i != a.unit_index()).collect()
        } else {
            a.generator_indices().to_vec()
        };
        for g in generators {
            let element = square.bar(&AlgebraElement::basis(a, g))?;
            if !element.is_zero() {
                pool.push(Factor {
                    label: format!("bar({})", a.label(g)),
                    element,
                    weight: 1,
                });
            }
        }
    }
    for (label, element) in &opts.extra_factors {
        if !square.is_zero_divisor(element) {
            return Err(Error::NotZeroDivisor(label.clone()));
        }
        pool.push(Factor {
            label: label.clone(),
            element: element.clone(),
            weight: 1,
        });
    }

    let max_depth = opts.max_depth.unwrap_or(2 * a.top_degree()).max(1);
    let best = search_best(&pool, max_depth);
    Ok(match best {
        None => CupLengthResult {
            length: 0,
            witness: Vec::new(),
            factors: Vec::new(),
            product: AlgebraElement::unit(square.algebra()),
            certified_lower_bound_tc: 1,
        },
        Some((multiset, product, _)) => CupLengthResult {
            length: multiset.len(),
            witness: multiset.iter().map(|&i| pool[i].label.clone()).collect(),
            factors: multiset.iter().map(|&i| pool[i].element.clone()).collect(),
            certified_lower_bound_tc: multiset.len() as u64 + 1,
            product,
        },
    })
}

/// Maximal total weight of a nonzero product of the supplied classes (with
/// repetition), up to `max_depth` factors. `TC >= total weight + 1`.
pub fn weighted_lower_bound(
    square: &KunnethSquare,
    classes: &[WeightedClass],
    max_depth: Option<usize>,
) -> Result<WeightedLowerBound> {
    for class in classes {
        if class.weight == 0 {
            return Err(Error::Unsupported(format!(
                "class `{}` has weight 0; weights must be >= 1",
                class.label
            )));
        }
        if !square.is_zero_divisor(&class.element) {
            return Err(Error::NotZeroDivisor(class.label.clone()));
        }
    }
    let pool: Vec<Factor> = classes
        .iter()
        .map(|c| Factor {
            label: c.label.clone(),
            element: c.element.clone(),
            weight: c.weight,
        })
        .collect();
    let max_depth = max_depth
        .unwrap_or(2 * square.factor().top_degree())
        .max(1);
    let best = search_best(&pool, max_depth);
    Ok(match best {
        None => WeightedLowerBound {
            total_weight: 0,
            witness: Vec::new(),
            product: AlgebraElement::unit(square.algebra()),
            certified_lower_bound_tc: 1,
        },
        Some((multiset, product, weight)) => WeightedLowerBound {
            total_weight: weight,
            witness: multiset.iter().map(|&i| classes[i].clone()).collect(),
            product,
            certified_lower_bound_tc: weight + 1,
        },
    })
}

/// Breadth-first search over factor multisets, deduplicating frontier
/// entries by product value. Keeps, per value, the highest total weight and
/// the lexicographically smallest multiset; returns the best nonzero
/// product overall.
fn search_best(pool: &[Factor], max_depth: usize) -> Option<(Vec<usize>, AlgebraElement, u64)> {
    type Entry = (u64, Vec<usize>, AlgebraElement);
    let better = |w: u64, ms: &[usize], cur: &Entry| -> bool {
        w > cur.0 || (w == cur.0 && ms < cur.1.as_slice())
    };

    let mut best: Option<Entry> = None;
    let mut frontier: BTreeMap<Vec<i64>, Entry> = BTreeMap::new();
    for (i, f) in pool.iter().enumerate() {
        if f.element.is_zero() {
            continue;
        }
        let key = f.element.coeffs().to_vec();
        let candidate = (f.weight, vec![i], f.element.clone());
        match frontier.get(&key) {
            Some(cur) if !better(candidate.0, &candidate.1, cur) => {}
            _ => {
                frontier.insert(key, candidate);
            }
        }
    }
    let consider_best = |best: &mut Option<Entry>, e: &Entry| {
        let replace = match best {
            None => true,
            Some(cur) => e.0 > cur.0 || (e.0 == cur.0 && e.1 < cur.1),
        };
        if replace {
            *best = Some(e.clone());
        }
    };
    for e in frontier.values() {
        consider_best(&mut best, e);
    }

    for _depth in 2..=max_depth {
        if frontier.is_empty() {
            break;
        }
        let mut next: BTreeMap<Vec<i64>, Entry> = BTreeMap::new();
        for (_, (weight, multiset, product)) in frontier.iter() {
            for (i, f) in pool.iter().enumerate() {
                let extended = product.mul(&f.element);
                if extended.is_zero() {
                    continue;
                }
                let mut ms = multiset.clone();
                ms.push(i);
                ms.sort_unstable();
                let w = weight + f.weight;
                let key = extended.coeffs().to_vec();
                let candidate = (w, ms, extended);
                match next.get(&key) {
                    Some(cur) if !better(candidate.0, &candidate.1, cur) => {}
                    _ => {
                        next.insert(key, candidate);
                    }
                }
            }
        }
        for e in next.values() {
            consider_best(&mut best, e);
        }
        frontier = next;
    }
    best.map(|(w, ms, prod)| (ms, prod, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{
        preset_lens_skeleton, preset_rp, AlgebraBuilder, AlgebraElement, KunnethSquare,
    };
    use crate::padic::has_digit_two_base3;

    fn bar_classes(square: &KunnethSquare) -> Vec<WeightedClass> {
        vec![
            WeightedClass {
                label: "bar(x)".into(),
                element: square.bar_generator("x").unwrap(),
                weight: 1,
                provenance: "zero-divisor".into(),
            },
            WeightedClass {
                label: "bar(y)".into(),
                element: square.bar_generator("y").unwrap(),
                weight: 2,
                provenance: "Bockstein image of bar(x)".into(),
            },
        ]
    }

    #[test]
    fn rp2_cuplength_is_three() {
        let a = preset_rp(2).unwrap();
        let result = zero_divisor_cuplength(&a, &CupLengthOptions::default()).unwrap();
        assert_eq!(result.length, 3);
        assert_eq!(result.certified_lower_bound_tc, 4);
        assert!(!result.product.is_zero());
    }

    #[test]
    fn rp3_cuplength_is_three() {
        let a = preset_rp(3).unwrap();
        let result = zero_divisor_cuplength(&a, &CupLengthOptions::default()).unwrap();
        assert_eq!(result.length, 3);
    }

    #[test]
    fn lens_skeleton_n1_cuplength_at_least_two() {
        let a = preset_lens_skeleton(1).unwrap();
        let result = zero_divisor_cuplength(&a, &CupLengthOptions::default()).unwrap();
        assert_eq!(result.length, 2);
    }

    #[test]
    fn unit_algebra_has_no_zero_divisors() {
        let a = AlgebraBuilder::new("point", 2, 0)
            .unit("1")
            .basis("1", 0)
            .build()
            .unwrap();
        let result = zero_divisor_cuplength(&a, &CupLengthOptions::default()).unwrap();
        assert_eq!(result.length, 0);
        assert_eq!(result.certified_lower_bound_tc, 1);
    }

    #[test]
    fn corrupted_algebra_is_rejected() {
        let bad = AlgebraBuilder::new("bad", 3, 2)
            .unit("1")
            .basis("1", 0)
            .basis("x", 1)
            .basis("y", 2)
            .product("x", "x", &[(1, "y")])
            .product("x", "y", &[])
            .product("y", "y", &[])
            .build()
            .unwrap();
        // x·x = y contradicts x·x = −x·x mod 3.
        assert!(matches!(
            zero_divisor_cuplength(&bad, &CupLengthOptions::default()),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn weighted_bound_on_lens_skeleton_n1() {
        let a = preset_lens_skeleton(1).unwrap();
        let square = KunnethSquare::new(&a).unwrap();
        let result = weighted_lower_bound(&square, &bar_classes(&square), None).unwrap();
        assert_eq!(result.total_weight, 4);
        assert_eq!(result.certified_lower_bound_tc, 5);
        assert_eq!(result.witness.len(), 2);
        assert!(result.witness.iter().all(|c| c.label == "bar(y)"));
    }

    #[test]
    fn weighted_bound_hits_4n_exactly_for_small_digit_n() {
        for n in 1..=10usize {
            let a = preset_lens_skeleton(n).unwrap();
            let square = KunnethSquare::new(&a).unwrap();
            let result = weighted_lower_bound(&square, &bar_classes(&square), None).unwrap();
            let expected_full = !has_digit_two_base3(n as u64);
            assert_eq!(
                result.total_weight == 4 * n as u64,
                expected_full,
                "n = {n}, got weight {}",
                result.total_weight
            );
        }
    }

    #[test]
    fn empty_class_list_gives_trivial_bound() {
        let a = preset_lens_skeleton(1).unwrap();
        let square = KunnethSquare::new(&a).unwrap();
        let result = weighted_lower_bound(&square, &[], None).unwrap();
        assert_eq!(result.total_weight, 0);
        assert_eq!(result.certified_lower_bound_tc, 1);
    }

    #[test]
    fn non_zero_divisor_class_is_rejected() {
        let a = preset_lens_skeleton(1).unwrap();
        let square = KunnethSquare::new(&a).unwrap();
        let classes = vec![WeightedClass {
            label: "y×1".into(),
            element: AlgebraElement::from_label(square.algebra(), "y×1").unwrap(),
            weight: 1,
            provenance: "bogus".into(),
        }];
        assert!(matches!(
            weighted_lower_bound(&square, &classes, None),
            Err(Error::NotZeroDivisor(_))
        ));
    }

    #[test]
    fn deeper_search_never_shrinks_the_bound() {
        let a = preset_rp(4).unwrap();
        let mut last = 0usize;
        for depth in 1..=8 {
            let result = zero_divisor_cuplength(
                &a,
                &CupLengthOptions {
                    max_depth: Some(depth),
                    ..Default::default()
                },
            )
            .unwrap();
            assert!(result.length >= last, "depth {depth}");
            last = result.length;
        }
    }

    #[test]
    fn witness_product_reevaluates_nonzero() {
        let a = preset_rp(4).unwrap();
        let result = zero_divisor_cuplength(&a, &CupLengthOptions::default()).unwrap();
        let recomputed = result
            .factors
            .iter()
            .fold(AlgebraElement::unit(result.product.algebra()), |acc, f| {
                acc.mul(f)
            });
        assert_eq!(recomputed, result.product);
        assert!(!recomputed.is_zero());
    }

    #[test]
    fn exhaustive_agrees_with_barred_search_on_small_algebras() {
        for a in [
            preset_rp(2).unwrap(),
            preset_rp(3).unwrap(),
            preset_lens_skeleton(1).unwrap(),
            preset_lens_skeleton(2).unwrap(),
        ] {
            let barred = zero_divisor_cuplength(&a, &CupLengthOptions::default()).unwrap();
            let exhaustive = zero_divisor_cuplength(
                &a,
                &CupLengthOptions {
                    exhaustive: true,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(barred.length, exhaustive.length, "algebra {}", a.name());
        }
    }

    #[test]
    fn exhaustive_respects_basis_cap() {
        let a = preset_rp(12).unwrap(); // 13 basis elements
        assert!(matches!(
            zero_divisor_cuplength(
                &a,
                &CupLengthOptions {
                    exhaustive: true,
                    ..Default::default()
                }
            ),
            Err(Error::Resource(_))
        ));
    }
}
