//! Symbolic evaluator for the vanishing of the `2n`-th power of the
//! canonical degree-one class, for cyclic fundamental groups of order 2
//! and 3.
//!
//! Both cases reduce, through the Künneth decomposition of `H^2(X×X)` with
//! `H^1(X; Z) = 0`, to a single question about one binomial coefficient
//! against a declared annihilator: order 2 for the two classes in the
//! order-2 case, order 6 in the order-3 case. The evaluator does exactly
//! that arithmetic and reports the surviving multiplier when it cannot
//! conclude vanishing.

use std::fmt;

use crate::error::{Error, Result};
use crate::padic::{binom_mod_p, has_digit_two_base3, BinomialQuery};

/// One term `C(n, k) · a^i × b^j` of the symbolic Künneth expansion of the
/// top power, with the binomial reduced against the class order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolicKunnethTerm {
    pub left_power: u64,
    pub right_power: u64,
    /// The binomial `C(binomial.0, binomial.1)` multiplying this term.
    pub binomial: (u64, u64),
    /// That binomial reduced modulo `class_order`.
    pub residue: u64,
    /// Declared additive order of the degree-two coefficient classes.
    pub class_order: u64,
}

impl fmt::Display for SymbolicKunnethTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "C({},{})·a^{}×b^{} ≡ {} (mod {})",
            self.binomial.0,
            self.binomial.1,
            self.left_power,
            self.right_power,
            self.residue,
            self.class_order
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VanishingStatus {
    Vanishes,
    Undecided,
}

/// Structured explanation attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VanishingReason {
    /// Every term of the expansion exceeds the degree budget `⌊dim/2⌋` on
    /// one side; happens exactly when the dimension is odd.
    OddDimension,
    /// The single surviving term has coefficient 0 modulo the class order.
    AnnihilatedCoefficient(SymbolicKunnethTerm),
    /// The surviving term has a nonzero coefficient; no conclusion.
    Survivor(SymbolicKunnethTerm),
}

impl fmt::Display for VanishingReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OddDimension => {
                write!(f, "odd dimension: every Künneth term dies for degree reasons")
            }
            Self::AnnihilatedCoefficient(t) => write!(f, "coefficient annihilated: {t}"),
            Self::Survivor(t) => write!(f, "surviving term: {t}"),
        }
    }
}

/// Outcome of the symbolic evaluation of `v^{2 dim}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingVerdict {
    pub group_order: u64,
    pub dim: u64,
    pub status: VanishingStatus,
    pub reason: VanishingReason,
    /// Hypotheses the reduction relies on; surfaced in reports.
    pub assumptions: Vec<String>,
}

impl VanishingVerdict {
    /// The nonzero multiplier left standing when the verdict is Undecided.
    pub fn surviving_coefficient(&self) -> Option<u64> {
        match &self.reason {
            VanishingReason::Survivor(t) => Some(t.residue),
            _ => None,
        }
    }

    fn assumptions_for(order: u64) -> Vec<String> {
        vec![format!(
            "H^1(X; Z) = 0 (automatic: pi_1(X) = Z/{order} is finite)"
        )]
    }
}

fn require_dim(dim: u64) -> Result<()> {
    if dim < 2 {
        return Err(Error::Unsupported(format!(
            "the canonical-class criterion needs dim(X) >= 2, got {dim}"
        )));
    }
    Ok(())
}

/// Vanishing of `v^{2n}` for fundamental group of order 2.
///
/// The expansion is `sum_i C(n, i) a^i × a^{n-i}` with `deg a = 2` and
/// `2a = 0`; a term survives the degree budget only when `i = n/2`, and its
/// coefficient `C(n, n/2)` is always even.
pub fn z2_vanishes(dim: u64) -> Result<VanishingVerdict> {
    require_dim(dim)?;
    let n = dim;
    if n % 2 == 1 {
        return Ok(VanishingVerdict {
            group_order: 2,
            dim,
            status: VanishingStatus::Vanishes,
            reason: VanishingReason::OddDimension,
            assumptions: VanishingVerdict::assumptions_for(2),
        });
    }
    let m = n / 2;
    let residue = binom_mod_p(&BinomialQuery::new(n, m, 2).expect("valid query"));
    let term = SymbolicKunnethTerm {
        left_power: m,
        right_power: m,
        binomial: (n, m),
        residue,
        class_order: 2,
    };
    Ok(if residue == 0 {
        VanishingVerdict {
            group_order: 2,
            dim,
            status: VanishingStatus::Vanishes,
            reason: VanishingReason::AnnihilatedCoefficient(term),
            assumptions: VanishingVerdict::assumptions_for(2),
        }
    } else {
        // Unreachable for n >= 2: central binomials are even. Kept so the
        // evaluator derives rather than asserts.
        VanishingVerdict {
            group_order: 2,
            dim,
            status: VanishingStatus::Undecided,
            reason: VanishingReason::Survivor(term),
            assumptions: VanishingVerdict::assumptions_for(2),
        }
    })
}

/// Vanishing of `v^{2n}` for fundamental group of order 3.
///
/// For even `n = 2m` the expansion collapses to `C(2m, m) a^m × b^m` with
/// `6a = 6b = 0`; the factor 2 always divides the central binomial, and the
/// factor 3 divides exactly when some base-3 digit of `m` equals 2.
pub fn z3_vanishes(dim: u64) -> Result<VanishingVerdict> {
    require_dim(dim)?;
    let n = dim;
    if n % 2 == 1 {
        return Ok(VanishingVerdict {
            group_order: 3,
            dim,
            status: VanishingStatus::Vanishes,
            reason: VanishingReason::OddDimension,
            assumptions: VanishingVerdict::assumptions_for(3),
        });
    }
    let m = n / 2;
    let r2 = binom_mod_p(&BinomialQuery::new(n, m, 2).expect("valid query"));
    let r3 = binom_mod_p(&BinomialQuery::new(n, m, 3).expect("valid query"));
    debug_assert_eq!(r3 == 0, has_digit_two_base3(m));
    // CRT against the class order 6.
    let residue = (0..6u64).find(|r| r % 2 == r2 && r % 3 == r3).unwrap();
    let term = SymbolicKunnethTerm {
        left_power: m,
        right_power: m,
        binomial: (n, m),
        residue,
        class_order: 6,
    };
    Ok(VanishingVerdict {
        group_order: 3,
        dim,
        status: if residue == 0 {
            VanishingStatus::Vanishes
        } else {
            VanishingStatus::Undecided
        },
        reason: if residue == 0 {
            VanishingReason::AnnihilatedCoefficient(term)
        } else {
            VanishingReason::Survivor(term)
        },
        assumptions: VanishingVerdict::assumptions_for(3),
    })
}

/// The decision rule: a vanishing verdict yields `TC(X) <= 2 dim(X)`;
/// an undecided one yields nothing (the generic `2 dim + 1` stands).
pub fn tc_upper_from_v(dim: u64, verdict: &VanishingVerdict) -> Option<(u64, String)> {
    match verdict.status {
        VanishingStatus::Vanishes => Some((
            2 * dim,
            format!(
                "canonical class criterion: v^(2·{dim}) = 0 in H^(2·{dim})(X×X; I^(2·{dim})), \
                 hence TC(X) <= 2·dim(X)"
            ),
        )),
        VanishingStatus::Undecided => None,
    }
}
