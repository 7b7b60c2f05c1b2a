//! Lower bounds from zero-divisors: cup-length search over barred
//! generators, the exhaustive kernel-wide variant, and weighted products.
//!
//! ```bash
//! cargo run -p tcbound --example cup_length_bounds
//! ```

use tcbound::cohomology::{preset_lens_skeleton, preset_rp, KunnethSquare};
use tcbound::padic::to_base;
use tcbound::tclower::{
    weighted_lower_bound, zero_divisor_cuplength, CupLengthOptions, WeightedClass,
};

fn main() {
    println!("zero-divisor cup-length over barred generators:");
    for n in 2..=6usize {
        let a = preset_rp(n).unwrap();
        let result = zero_divisor_cuplength(&a, &CupLengthOptions::default()).unwrap();
        println!(
            "  {}: length {} via {}  ->  TC >= {}",
            a.name(),
            result.length,
            result.witness.join("·"),
            result.certified_lower_bound_tc
        );
    }

    println!("\nexhaustive kernel-wide search agrees on small rings:");
    for a in [preset_rp(3).unwrap(), preset_lens_skeleton(2).unwrap()] {
        let barred = zero_divisor_cuplength(&a, &CupLengthOptions::default()).unwrap();
        let exhaustive = zero_divisor_cuplength(
            &a,
            &CupLengthOptions {
                exhaustive: true,
                ..Default::default()
            },
        )
        .unwrap();
        println!(
            "  {}: barred length {}, exhaustive length {}",
            a.name(),
            barred.length,
            exhaustive.length
        );
    }

    println!("\nweighted products on lens-space skeleta (wgt(bar x) = 1, wgt(bar y) = 2):");
    for n in 1..=7usize {
        let a = preset_lens_skeleton(n).unwrap();
        let square = KunnethSquare::new(&a).unwrap();
        let classes = vec![
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
                provenance: "Bockstein image of bar(x) mod 3".into(),
            },
        ];
        let bound = weighted_lower_bound(&square, &classes, None).unwrap();
        let digits = to_base(n as u64, 3).unwrap();
        println!(
            "  n = {n} (digits {:?}): total weight {:>2}  ->  TC >= {:>2}   (4n+1 = {})",
            digits.digits(),
            bound.total_weight,
            bound.certified_lower_bound_tc,
            4 * n + 1
        );
    }
}
