//! Descriptor files end to end: write a custom JSON descriptor with an
//! explicit cohomology presentation, evaluate it, and emit the
//! deterministic JSON report.
//!
//! ```bash
//! cargo run -p tcbound --example descriptor_files
//! ```

use tcbound::bounds::{evaluate, EvalOptions};
use tcbound::descriptor::DescriptorFile;
use tcbound::report::ReportFile;

fn main() {
    // The 2-sphere with its mod-2 ring given explicitly: one degree-2
    // generator squaring to zero.
    let text = r#"{
        "name": "two_sphere",
        "dim": 2,
        "pi1": {"type": "trivial"},
        "cohomology": {
            "p": 2,
            "top_degree": 2,
            "unit": "1",
            "basis": [
                {"label": "1", "degree": 0},
                {"label": "s", "degree": 2}
            ],
            "generators": ["s"],
            "products": [
                {"left": "s", "right": "s", "value": []}
            ]
        },
        "known_tc": {"value": 3, "cite": "classical: even-dimensional spheres"}
    }"#;

    let file = DescriptorFile::from_json(text).expect("schema-valid descriptor");
    let space = file.to_space().expect("algebra validates");
    let bounds = evaluate(&space, &EvalOptions::default()).expect("consistent");
    let report = ReportFile::new(&file.canonical_json(), &space, bounds);

    println!("{}", report.render_text(false));
    println!("deterministic JSON (input hash binds report to descriptor):\n");
    println!("{}", report.to_json());

    // The same parse is strict: unknown keys are schema errors.
    let bad = r#"{"name": "x", "dim": 1, "pi1": {"type": "trivial"}, "typo_field": 1}"#;
    match DescriptorFile::from_json(bad) {
        Err(e) => println!("\nstrict parsing rejects unknown keys: {e}"),
        Ok(_) => unreachable!(),
    }
}
