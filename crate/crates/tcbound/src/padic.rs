//! Exact base-p digit arithmetic and binomial-coefficient divisibility.
//!
//! Everything in this module is integer-exact: base-p expansions, Lucas'
//! theorem for binomial residues modulo a prime, Kummer's carry-counting
//! theorem for p-adic valuations, and an arbitrary-precision binomial
//! oracle that the divisibility claims elsewhere in the crate are checked
//! against.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Cap on `n` for [`binom_exact`]; keeps the big-integer oracle at desk scale.
pub const DEFAULT_BINOM_LIMIT: u64 = 100_000;

/// Little-endian base-p expansion of a nonnegative integer.
///
/// `digits()[i]` is the coefficient of `p^i`. The value 0 is the single
/// digit `[0]`; no other expansion carries a trailing zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicExpansion {
    base: u64,
    digits: Vec<u64>,
}

impl PadicExpansion {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Reconstructs the integer `sum digits[i] * p^i`.
    pub fn value(&self) -> u64 {
        let mut acc: u64 = 0;
        for &d in self.digits.iter().rev() {
            acc = acc * self.base + d;
        }
        acc
    }

    pub fn has_digit(&self, digit: u64) -> bool {
        self.digits.contains(&digit)
    }
}

/// A validated binomial-residue query: `C(n, k) mod p` with `k <= n`, `p` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomialQuery {
    n: u64,
    k: u64,
    p: u64,
}

impl BinomialQuery {
    pub fn new(n: u64, k: u64, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k > n {
            return Err(Error::BinomialRange { n, k });
        }
        Ok(Self { n, k, p })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

/// Primality by trial division. Inputs here are tiny, so nothing fancier
/// is warranted.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Base-p expansion of `n`, little-endian.
pub fn to_base(n: u64, p: u64) -> Result<PadicExpansion> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut digits = Vec::new();
    let mut rest = n;
    loop {
        digits.push(rest % p);
        rest /= p;
        if rest == 0 {
            break;
        }
    }
    Ok(PadicExpansion { base: p, digits })
}

/// `C(n, k) mod p` by Lucas' theorem: the digitwise product of
/// `C(n_i, k_i) mod p` over the base-p digits, with `C(n_i, k_i) = 0`
/// whenever `k_i > n_i`.
pub fn binom_mod_p(q: &BinomialQuery) -> u64 {
    let (mut n, mut k, p) = (q.n, q.k, q.p);
    let mut acc: u64 = 1;
    while n > 0 || k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = mulmod(acc, small_binom_mod_p(nd, kd, p), p);
        if acc == 0 {
            return 0;
        }
        n /= p;
        k /= p;
    }
    acc
}

/// Number of carries when adding `k` and `m - k` in base p; by Kummer's
/// theorem this equals the p-adic valuation of `C(m, k)`.
pub fn kummer_carries(m: u64, k: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k > m {
        return Err(Error::BinomialRange { n: m, k });
    }
    let (mut a, mut b) = (k, m - k);
    let mut carry = 0u64;
    let mut carries = 0u64;
    while a > 0 || b > 0 || carry > 0 {
        let s = a % p + b % p + carry;
        carry = if s >= p { 1 } else { 0 };
        carries += carry;
        a /= p;
        b /= p;
    }
    Ok(carries)
}

/// True iff some base-3 digit of `m` equals 2. Governs 3-divisibility of
/// the central binomial `C(2m, m)`.
pub fn has_digit_two_base3(m: u64) -> bool {
    let mut rest = m;
    while rest > 0 {
        if rest % 3 == 2 {
            return true;
        }
        rest /= 3;
    }
    false
}

/// Exact `C(n, k)` with the default size cap.
pub fn binom_exact(n: u64, k: u64) -> Result<BigUint> {
    binom_exact_with_limit(n, k, DEFAULT_BINOM_LIMIT)
}

/// Exact `C(n, k)` by the multiplicative formula, rejecting `n > limit`.
pub fn binom_exact_with_limit(n: u64, k: u64, limit: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::BinomialRange { n, k });
    }
    if n > limit {
        return Err(Error::Resource(format!(
            "binom_exact: n = {n} exceeds the configured limit {limit}"
        )));
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i; // exact: C(n-k+i, i) is an integer
    }
    Ok(acc)
}

/// Iterator over the central binomials `(m, C(2m, m))` for `m = 1..=max_m`,
/// built incrementally via `C(2m, m) = C(2m-2, m-1) * 2(2m-1) / m`.
pub fn central_binomials(max_m: u64) -> impl Iterator<Item = (u64, BigUint)> {
    let mut current = BigUint::one();
    (1..=max_m).map(move |m| {
        current *= 2 * (2 * m - 1);
        current /= m; // exact division
        (m, current.clone())
    })
}

/// Residue of a big integer modulo a small `p`.
pub fn residue(n: &BigUint, p: u64) -> u64 {
    (n % BigUint::from(p)).to_u64().expect("residue fits u64")
}

/// Exact p-adic valuation of a big integer (`None` for zero).
pub fn valuation(n: &BigUint, p: u64) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let big_p = BigUint::from(p);
    let mut rest = n.clone();
    let mut v = 0u64;
    loop {
        let (q, r) = rest.div_rem(&big_p);
        if !r.is_zero() {
            return Some(v);
        }
        v += 1;
        rest = q;
    }
}

/// `C(a, b) mod p` for `a, b < p`, via modular inverses.
fn small_binom_mod_p(a: u64, b: u64, p: u64) -> u64 {
    debug_assert!(a < p && b < p);
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 1..=b {
        num = mulmod(num, (a - b + i) % p, p);
        den = mulmod(den, i % p, p);
    }
    mulmod(num, inverse_mod(den, p), p)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse of `a` modulo prime `p` by the extended Euclidean algorithm.
fn inverse_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of a non-unit mod p");
    t.rem_euclid(p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn to_base_examples() {
        assert_eq!(to_base(0, 3).unwrap().digits(), &[0]);
        assert_eq!(to_base(10, 3).unwrap().digits(), &[1, 0, 1]);
        assert_eq!(to_base(5, 3).unwrap().digits(), &[2, 1]);
    }

    #[test]
    fn to_base_rejects_composite_base() {
        assert!(matches!(to_base(7, 6), Err(Error::NotPrime(6))));
        assert!(matches!(to_base(7, 1), Err(Error::NotPrime(1))));
    }

    #[test]
    fn lucas_examples() {
        let q = |n, k, p| BinomialQuery::new(n, k, p).unwrap();
        assert_eq!(binom_mod_p(&q(2, 1, 3)), 2);
        assert_eq!(binom_mod_p(&q(4, 2, 3)), 0);
        assert_eq!(binom_mod_p(&q(8, 4, 3)), 1);
    }

    #[test]
    fn kummer_examples() {
        assert_eq!(kummer_carries(4, 2, 3).unwrap(), 1);
        assert_eq!(kummer_carries(2, 1, 3).unwrap(), 0);
        assert_eq!(kummer_carries(2, 0, 3).unwrap(), 0);
        assert!(kummer_carries(2, 3, 3).is_err());
    }

    #[test]
    fn digit_two_examples() {
        assert!(has_digit_two_base3(2));
        assert!(!has_digit_two_base3(10));
        assert!(has_digit_two_base3(5));
        assert!(!has_digit_two_base3(0));
    }

    #[test]
    fn binom_exact_examples() {
        assert_eq!(binom_exact(4, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(binom_exact(10, 5).unwrap(), BigUint::from(252u32));
        assert_eq!(binom_exact(17, 0).unwrap(), BigUint::one());
        assert!(matches!(
            binom_exact_with_limit(11, 3, 10),
            Err(Error::Resource(_))
        ));
    }

    // Independent route for the oracle itself: Pascal's rule vs the
    // multiplicative formula.
    #[test]
    fn binom_exact_matches_pascal_recurrence() {
        let mut row = vec![BigUint::one()];
        for n in 1..=60u64 {
            let mut next = vec![BigUint::one()];
            for k in 1..n as usize {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(BigUint::one());
            row = next;
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&binom_exact(n, k as u64).unwrap(), expected);
            }
        }
    }

    #[test]
    fn central_binomials_match_direct_formula() {
        for (m, c) in central_binomials(64) {
            assert_eq!(c, binom_exact(2 * m, m).unwrap());
        }
    }

    #[test]
    fn kummer_equals_valuation_up_to_500() {
        // One Pascal row at a time keeps this linear in memory.
        let mut row = vec![BigUint::one()];
        for m in 1..=500u64 {
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
                    assert_eq!(carries, val, "C({m},{k}) at p={p}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn expansion_reconstructs(n in 0u64..1_000_000, p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
            let e = to_base(n, p).unwrap();
            prop_assert_eq!(e.value(), n);
            prop_assert!(e.digits().iter().all(|&d| d < p));
            if n > 0 {
                prop_assert_ne!(*e.digits().last().unwrap(), 0);
            }
        }

        #[test]
        fn lucas_matches_exact(n in 0u64..600, frac in 0.0f64..1.0, p in prop::sample::select(vec![2u64, 3, 5])) {
            let k = (n as f64 * frac) as u64;
            let q = BinomialQuery::new(n, k, p).unwrap();
            let exact = binom_exact(n, k).unwrap();
            prop_assert_eq!(binom_mod_p(&q), residue(&exact, p));
        }

        #[test]
        fn digit_two_iff_central_binomial_divisible_by_three(m in 1u64..1500) {
            let c = binom_exact(2 * m, m).unwrap();
            prop_assert_eq!(has_digit_two_base3(m), residue(&c, 3) == 0);
        }
    }
}
