//! The full rule engine on built-in spaces: certified intervals with every
//! fired rule, assumption, and remark.
//!
//! ```bash
//! cargo run -p tcbound --example space_reports
//! ```

use tcbound::bounds::{evaluate, registry_lookup, EvalOptions};
use tcbound::descriptor::builtin;
use tcbound::report::ReportFile;

fn main() {
    // A full text report for one space.
    let file = builtin("lens_skeleton_n1").unwrap();
    let space = file.to_space().unwrap();
    let bounds = evaluate(&space, &EvalOptions::default()).unwrap();
    let report = ReportFile::new(&file.canonical_json(), &space, bounds);
    println!("{}", report.render_text(false));

    // A survey across families.
    println!("survey:");
    for name in [
        "rp2",
        "rp3",
        "rp4",
        "rp8",
        "lens_skeleton_n2",
        "lens_skeleton_n3",
        "lens_space_n1",
        "torus_skeleton_mu4_d2",
        "torus_skeleton_mu6_d3",
        "simply_connected_dim3",
        "cd2_dim5",
    ] {
        let file = builtin(name).unwrap();
        let space = file.to_space().unwrap();
        let report = evaluate(&space, &EvalOptions::default()).unwrap();
        let registry = registry_lookup(&space)
            .map(|e| format!("  registry: TC = {}", e.tc))
            .unwrap_or_default();
        println!(
            "  {name:<22} TC in [{:>2}, {:>2}]{registry}",
            report.lower, report.upper
        );
    }
}
