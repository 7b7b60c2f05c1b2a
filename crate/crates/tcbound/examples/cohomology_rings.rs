//! Graded algebras by structure constants: presets, validation, Künneth
//! squares with Koszul signs, barred classes, and their powers.
//!
//! ```bash
//! cargo run -p tcbound --example cohomology_rings
//! ```

use tcbound::cohomology::{
    preset_lens_skeleton, preset_rp, preset_torus_skeleton, AlgebraElement, KunnethSquare,
};
use tcbound::padic::{binom_exact, residue};

fn main() {
    let rp4 = preset_rp(4).unwrap();
    println!("{}: basis size {}, top degree {}", rp4.name(), rp4.dim(), rp4.top_degree());
    println!("  validate: {} violations", rp4.validate().len());

    let lens2 = preset_lens_skeleton(2).unwrap();
    println!("{}: basis {:?}", lens2.name(), (0..lens2.dim()).map(|i| lens2.label(i)).collect::<Vec<_>>());
    let x = AlgebraElement::from_label(&lens2, "x").unwrap();
    let y = AlgebraElement::from_label(&lens2, "y").unwrap();
    println!("  x·y = {}", x.mul(&y));
    println!("  y·y = {}", y.mul(&y));
    println!("  x·y² = {} (truncated by the relation x·yⁿ = 0)", x.mul(&y.power(2)));

    let torus = preset_torus_skeleton(4, 2, 3).unwrap();
    let e1 = AlgebraElement::from_label(&torus, "e1").unwrap();
    let e2 = AlgebraElement::from_label(&torus, "e2").unwrap();
    println!("{}: e1·e2 = {}, e2·e1 = {} (Koszul sign)", torus.name(), e1.mul(&e2), e2.mul(&e1));

    println!("\nKünneth square of {} and barred classes:", lens2.name());
    let square = KunnethSquare::new(&lens2).unwrap();
    let bar_x = square.bar_generator("x").unwrap();
    let bar_y = square.bar_generator("y").unwrap();
    println!("  bar(x) = {bar_x}");
    println!("  bar(y) = {bar_y}");
    println!("  diagonal restriction of bar(y): {}", square.diagonal_image(&bar_y));

    println!("\npowers of bar(y) in {}:", square.algebra().name());
    for k in 1..=4u64 {
        println!("  bar(y)^{k} = {}", bar_y.power(k));
    }
    let c = residue(&binom_exact(4, 2).unwrap(), 3);
    println!("  C(4,2) = 6 ≡ {c} (mod 3) explains bar(y)^4 = 0 here");

    let rp2 = preset_rp(2).unwrap();
    let square2 = KunnethSquare::new(&rp2).unwrap();
    let bar_w = square2.bar_generator("w").unwrap();
    println!("\nmod-2 in {}:", square2.algebra().name());
    for k in 1..=4u64 {
        println!("  bar(w)^{k} = {}", bar_w.power(k));
    }
}
