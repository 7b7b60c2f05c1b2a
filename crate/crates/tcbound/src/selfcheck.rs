//! Runtime self-checks behind `tcbound verify`.
//!
//! Smaller ranges than the full test suite, but the same properties: every
//! check reruns one of the exact identities the engines rely on and reports
//! pass/fail as data.

use num_bigint::BigUint;
use num_traits::One;

use crate::bounds::{evaluate, EvalOptions};
use crate::cohomology::{
    preset_lens_skeleton, preset_lens_space, preset_rp, preset_torus_skeleton, AlgebraBuilder,
    AlgebraElement, KunnethSquare,
};
use crate::descriptor::builtin;
use crate::groupring::{
    augmentation_ideal, augmentation_ideal_z3_paper, canonical_crossed_hom, invariants,
    order_of_canonical_class, tensor_product, wedge_and_symmetric, BimoduleAction, CyclicGroup,
};
use crate::padic::{
    binom_mod_p, central_binomials, has_digit_two_base3, kummer_carries, residue, valuation,
    BinomialQuery,
};
use crate::vclass::{z2_vanishes, z3_vanishes, VanishingStatus};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &str, detail: String) -> Self {
        Self {
            name: name.into(),
            passed: true,
            detail,
        }
    }

    fn fail(name: &str, detail: String) -> Self {
        Self {
            name: name.into(),
            passed: false,
            detail,
        }
    }
}

/// Runs every self-check whose name contains `filter` (all when `None`).
/// With `inject_fault` a deliberately corrupted algebra is added, which must
/// make the suite fail.
pub fn run_all(filter: Option<&str>, inject_fault: bool) -> Vec<CheckResult> {
    let mut checks: Vec<(&str, fn() -> CheckResult)> = vec![
        ("padic/lucas-oracle", check_lucas_oracle),
        ("padic/digit-two-criterion", check_digit_two),
        ("padic/central-binomial-parity", check_central_parity),
        ("padic/kummer-valuation", check_kummer),
        ("groupring/crossed-identity", check_crossed_identity),
        ("groupring/order-of-class", check_order_of_class),
        ("groupring/action-axioms", check_action_axioms),
        ("groupring/z3-tensor-algebra", check_z3_tensor_algebra),
        ("cohomology/presets-validate", check_presets_validate),
        ("cohomology/bar-zero-divisor", check_bar_zero_divisor),
        ("cohomology/power-formula", check_power_formula),
        ("vclass/z2-range", check_z2_range),
        ("vclass/z3-vs-bigint", check_z3_vs_bigint),
        ("bounds/registry-containment", check_registry_containment),
    ];
    if inject_fault {
        checks.push(("cohomology/injected-fault", check_injected_fault));
    }
    checks
        .into_iter()
        .filter(|(name, _)| filter.map_or(true, |f| name.contains(f)))
        .map(|(_, run)| run())
        .collect()
}

fn check_lucas_oracle() -> CheckResult {
    let name = "padic/lucas-oracle";
    let max_n = 400u64;
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for n in 0..=max_n {
        if n > 0 {
            let mut next = vec![BigUint::one()];
            for k in 1..n as usize {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(BigUint::one());
            row = next;
        }
        for p in [2u64, 3, 5] {
            for k in 0..=n {
                let lucas = binom_mod_p(&BinomialQuery::new(n, k, p).unwrap());
                let exact = residue(&row[k as usize], p);
                if lucas != exact {
                    return CheckResult::fail(
                        name,
                        format!("C({n},{k}) mod {p}: Lucas gives {lucas}, oracle gives {exact}"),
                    );
                }
            }
        }
    }
    CheckResult::pass(name, format!("agrees with big integers for n <= {max_n}, p in {{2,3,5}}"))
}

fn check_digit_two() -> CheckResult {
    let name = "padic/digit-two-criterion";
    for (m, c) in central_binomials(600) {
        if has_digit_two_base3(m) != (residue(&c, 3) == 0) {
            return CheckResult::fail(name, format!("criterion breaks at m = {m}"));
        }
    }
    CheckResult::pass(name, "3 | C(2m,m) iff a base-3 digit of m is 2, m <= 600".into())
}

fn check_central_parity() -> CheckResult {
    let name = "padic/central-binomial-parity";
    for (m, c) in central_binomials(600) {
        if residue(&c, 2) != 0 {
            return CheckResult::fail(name, format!("C({},{}) is odd", 2 * m, m));
        }
    }
    CheckResult::pass(name, "C(n, n/2) even for even n <= 1200".into())
}

fn check_kummer() -> CheckResult {
    let name = "padic/kummer-valuation";
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=150u64 {
        let mut next = vec![BigUint::one()];
        for k in 1..m as usize {
            next.push(&row[k - 1] + &row[k]);
        }
        next.push(BigUint::one());
        row = next;
        for p in [2u64, 3] {
            for k in 0..=m {
                let carries = kummer_carries(m, k, p).unwrap();
                let val = valuation(&row[k as usize], p).unwrap();
                if carries != val {
                    return CheckResult::fail(
                        name,
                        format!("C({m},{k}): {carries} carries vs valuation {val} at p = {p}"),
                    );
                }
            }
        }
    }
    CheckResult::pass(name, "carries = p-adic valuation for m <= 150, p in {2,3}".into())
}

fn check_crossed_identity() -> CheckResult {
    let name = "groupring/crossed-identity";
    for m in 1..=9 {
        let f = canonical_crossed_hom(CyclicGroup::new(m).unwrap());
        if let Err((g, h, g2, h2)) = f.check_identity() {
            return CheckResult::fail(
                name,
                format!("identity fails for Z/{m} at ({g},{h})·({g2},{h2})"),
            );
        }
        if !f.vanishes_on_diagonal() {
            return CheckResult::fail(name, format!("diagonal restriction nonzero for Z/{m}"));
        }
    }
    CheckResult::pass(name, "crossed identity and diagonal vanishing, orders <= 9".into())
}

fn check_order_of_class() -> CheckResult {
    let name = "groupring/order-of-class";
    for m in 1..=12usize {
        let group = CyclicGroup::new(m).unwrap();
        if order_of_canonical_class(group) != m as u64 {
            return CheckResult::fail(name, format!("order differs from {m} for Z/{m}"));
        }
        if m >= 2 && !invariants(&augmentation_ideal(group)).is_empty() {
            return CheckResult::fail(name, format!("ideal invariants nonempty for Z/{m}"));
        }
    }
    CheckResult::pass(name, "order of the canonical class = |G| for |G| <= 12".into())
}

fn check_action_axioms() -> CheckResult {
    let name = "groupring/action-axioms";
    for m in 1..=12 {
        let group = CyclicGroup::new(m).unwrap();
        for module in [augmentation_ideal(group), BimoduleAction::regular(group)] {
            if let Err(e) = module.verify_axioms() {
                return CheckResult::fail(name, format!("Z/{m}: {e}"));
            }
        }
    }
    CheckResult::pass(name, "matrix orders and commutation, orders <= 12".into())
}

fn check_z3_tensor_algebra() -> CheckResult {
    let name = "groupring/z3-tensor-algebra";
    let (ideal, _) = augmentation_ideal_z3_paper();
    let ws = match wedge_and_symmetric(&ideal) {
        Ok(ws) => ws,
        Err(e) => return CheckResult::fail(name, e.to_string()),
    };
    if let Err(e) = ws.verify() {
        return CheckResult::fail(name, e.to_string());
    }
    let z2 = CyclicGroup::new(2).unwrap();
    let ideal2 = augmentation_ideal(z2);
    let square2 = tensor_product(&ideal2, &ideal2).unwrap();
    if !(square2.act_left().is_identity() && square2.act_right().is_identity()) {
        return CheckResult::fail(name, "Z/2 tensor square is not trivial".into());
    }
    CheckResult::pass(name, "swap/wedge/symmetric identities exact".into())
}

fn check_presets_validate() -> CheckResult {
    let name = "cohomology/presets-validate";
    for n in 1..=8 {
        if !preset_rp(n).unwrap().validate().is_empty() {
            return CheckResult::fail(name, format!("rp({n})"));
        }
    }
    for n in 1..=6 {
        if !preset_lens_skeleton(n).unwrap().validate().is_empty() {
            return CheckResult::fail(name, format!("lens_skeleton({n})"));
        }
    }
    for n in 1..=4 {
        if !preset_lens_space(n).unwrap().validate().is_empty() {
            return CheckResult::fail(name, format!("lens_space({n})"));
        }
    }
    for (mu, d, p) in [(4, 2, 3u64), (5, 2, 2)] {
        if !preset_torus_skeleton(mu, d, p).unwrap().validate().is_empty() {
            return CheckResult::fail(name, format!("torus_skeleton({mu},{d})"));
        }
    }
    CheckResult::pass(name, "all presets pass associativity/sign/unit checks".into())
}

fn check_bar_zero_divisor() -> CheckResult {
    let name = "cohomology/bar-zero-divisor";
    for algebra in [
        preset_rp(4).unwrap(),
        preset_lens_skeleton(2).unwrap(),
        preset_torus_skeleton(3, 2, 3).unwrap(),
    ] {
        let square = KunnethSquare::new(&algebra).unwrap();
        for i in 0..algebra.dim() {
            let bar = square.bar(&AlgebraElement::basis(&algebra, i)).unwrap();
            if !square.is_zero_divisor(&bar) {
                return CheckResult::fail(
                    name,
                    format!("bar({}) not in the diagonal kernel of {}", algebra.label(i), algebra.name()),
                );
            }
        }
    }
    CheckResult::pass(name, "bar of every basis class restricts to zero".into())
}

fn check_power_formula() -> CheckResult {
    let name = "cohomology/power-formula";
    for n in 1..=6usize {
        let algebra = preset_lens_skeleton(n).unwrap();
        let square = KunnethSquare::new(&algebra).unwrap();
        let bar_y = square.bar_generator("y").unwrap();
        let got = bar_y.power(2 * n as u64);
        let c = residue(
            &crate::padic::binom_exact(2 * n as u64, n as u64).unwrap(),
            3,
        ) as i64;
        let sign = if n % 2 == 1 { -1 } else { 1 };
        let y = AlgebraElement::from_label(&algebra, "y").unwrap();
        let yn = y.power(n as u64);
        let expected = square.cross(&yn, &yn).scale(sign * c);
        if got != expected {
            return CheckResult::fail(name, format!("bar(y)^(2·{n}) mismatch"));
        }
    }
    CheckResult::pass(name, "bar(y)^(2n) = (-1)^n C(2n,n) y^n×y^n mod 3, n <= 6".into())
}

fn check_z2_range() -> CheckResult {
    let name = "vclass/z2-range";
    for dim in 2..=100 {
        match z2_vanishes(dim) {
            Ok(v) if v.status == VanishingStatus::Vanishes => {}
            Ok(_) => return CheckResult::fail(name, format!("undecided at dim {dim}")),
            Err(e) => return CheckResult::fail(name, e.to_string()),
        }
    }
    CheckResult::pass(name, "vanishes for every 2 <= dim <= 100".into())
}

fn check_z3_vs_bigint() -> CheckResult {
    let name = "vclass/z3-vs-bigint";
    for dim in 2..=150u64 {
        let v = z3_vanishes(dim).unwrap();
        let expected = if dim % 2 == 1 {
            true
        } else {
            residue(&crate::padic::binom_exact(dim, dim / 2).unwrap(), 6) == 0
        };
        if (v.status == VanishingStatus::Vanishes) != expected {
            return CheckResult::fail(name, format!("disagrees with big integers at dim {dim}"));
        }
    }
    CheckResult::pass(name, "verdicts match 6 | C(2m,m) for dim <= 150".into())
}

fn check_registry_containment() -> CheckResult {
    let name = "bounds/registry-containment";
    for space_name in [
        "rp2",
        "rp4",
        "lens_skeleton_n1",
        "lens_skeleton_n3",
        "torus_skeleton_mu4_d2",
        "torus_skeleton_mu6_d2",
    ] {
        let file = builtin(space_name).expect("builtin exists");
        let space = file.to_space().expect("space builds");
        let registry = crate::bounds::registry_lookup(&space).expect("registry entry");
        match evaluate(&space, &EvalOptions::default()) {
            Ok(report) => {
                if registry.tc < report.lower || registry.tc > report.upper {
                    return CheckResult::fail(
                        name,
                        format!(
                            "{space_name}: registry {} outside [{}, {}]",
                            registry.tc, report.lower, report.upper
                        ),
                    );
                }
            }
            Err(e) => return CheckResult::fail(name, format!("{space_name}: {e}")),
        }
    }
    CheckResult::pass(name, "registry values inside computed intervals".into())
}

// Deliberately corrupted structure constants; validation must flag them,
// which makes this check fail and `verify` exit nonzero.
fn check_injected_fault() -> CheckResult {
    let name = "cohomology/injected-fault";
    let corrupted = AlgebraBuilder::new("corrupted_rp4", 2, 4)
        .unit("1")
        .basis("1", 0)
        .basis("w", 1)
        .basis("w^2", 2)
        .basis("w^3", 3)
        .basis("w^4", 4)
        .product("w", "w", &[(1, "w^2")])
        .product("w", "w^2", &[(1, "w^3")])
        .product("w^2", "w", &[(1, "w^4")]) // corrupt: should be w^3
        .product("w", "w^3", &[(1, "w^4")])
        .product("w^2", "w^2", &[(1, "w^4")])
        .product("w^2", "w^3", &[])
        .product("w^3", "w^3", &[])
        .product("w", "w^4", &[])
        .product("w^2", "w^4", &[])
        .product("w^3", "w^4", &[])
        .product("w^4", "w^4", &[])
        .build();
    match corrupted {
        Ok(algebra) => {
            let violations = algebra.validate();
            if violations.is_empty() {
                CheckResult::pass(name, "corrupted preset validated cleanly (unexpected)".into())
            } else {
                CheckResult::fail(
                    name,
                    format!("corrupted preset rejected with {} violation(s), e.g. {}",
                        violations.len(),
                        violations[0]
                    ),
                )
            }
        }
        Err(e) => CheckResult::fail(name, format!("builder refused corrupted preset: {e}")),
    }
}

/// True when every check passed.
pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}
