//! The canonical-class vanishing criterion for fundamental groups of order
//! 2 and 3: when does the top power die, and what upper bound follows.
//!
//! ```bash
//! cargo run -p tcbound --example vanishing_criteria
//! ```

use tcbound::padic::to_base;
use tcbound::vclass::{tc_upper_from_v, z2_vanishes, z3_vanishes, VanishingStatus};

fn main() {
    println!("pi_1 = Z/2: v^(2 dim) always vanishes, so TC <= 2 dim for dim >= 2");
    for dim in 2..=7u64 {
        let v = z2_vanishes(dim).unwrap();
        let bound = tc_upper_from_v(dim, &v).map(|(b, _)| b).unwrap();
        println!("  dim {dim}: {:?} ({}) -> TC <= {bound}", v.status, v.reason);
    }

    println!("\npi_1 = Z/3: vanishing depends on the base-3 digits of dim/2");
    println!("  dim   m = dim/2 digits   verdict");
    for dim in 2..=20u64 {
        let v = z3_vanishes(dim).unwrap();
        let digits = if dim % 2 == 0 {
            format!("{:?}", to_base(dim / 2, 3).unwrap().digits())
        } else {
            "-".into()
        };
        let outcome = match v.status {
            VanishingStatus::Vanishes => format!("Vanishes -> TC <= {}", 2 * dim),
            VanishingStatus::Undecided => format!(
                "Undecided (surviving coefficient {} mod 6)",
                v.surviving_coefficient().unwrap()
            ),
        };
        println!("  {dim:>3}   {digits:<16}  {outcome}");
    }

    println!("\nassumptions recorded with each verdict:");
    for assumption in &z3_vanishes(4).unwrap().assumptions {
        println!("  - {assumption}");
    }
}
