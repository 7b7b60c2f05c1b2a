//! Base-p digits and binomial divisibility: Lucas residues, Kummer carry
//! counts, and the digit-2 criterion for central binomials.
//!
//! ```bash
//! cargo run -p tcbound --example binomial_divisibility
//! ```

use tcbound::padic::{
    binom_exact, binom_mod_p, central_binomials, has_digit_two_base3, kummer_carries, residue,
    to_base, BinomialQuery,
};

fn main() {
    println!("base-3 expansions (little-endian digits):");
    for n in [0u64, 5, 10, 13, 42] {
        let e = to_base(n, 3).unwrap();
        println!("  {n:>3} -> {:?}{}", e.digits(), if e.has_digit(2) { "  (contains a 2)" } else { "" });
    }

    println!("\nLucas residues vs exact binomials, p = 3:");
    for (n, k) in [(2u64, 1u64), (4, 2), (8, 4), (20, 10), (27, 13)] {
        let lucas = binom_mod_p(&BinomialQuery::new(n, k, 3).unwrap());
        let exact = binom_exact(n, k).unwrap();
        println!(
            "  C({n:>2},{k:>2}) = {exact}  ≡ {lucas} (mod 3), exact residue {}",
            residue(&exact, 3)
        );
    }

    println!("\nKummer: carries adding k + (m-k) in base p = p-adic valuation of C(m,k):");
    for (m, k, p) in [(4u64, 2u64, 3u64), (10, 5, 2), (27, 9, 3), (100, 50, 5)] {
        println!(
            "  C({m},{k}) at p={p}: {} carries",
            kummer_carries(m, k, p).unwrap()
        );
    }

    println!("\ndigit-2 criterion: 3 | C(2m,m) exactly when base-3 digits of m contain a 2");
    println!("  m   digits(base 3)   3 | C(2m,m)");
    for (m, c) in central_binomials(13) {
        let digits = to_base(m, 3).unwrap();
        println!(
            "  {m:>2}  {:<15}  {}",
            format!("{:?}", digits.digits()),
            if residue(&c, 3) == 0 { "yes" } else { "no" }
        );
        assert_eq!(residue(&c, 3) == 0, has_digit_two_base3(m));
    }
}
