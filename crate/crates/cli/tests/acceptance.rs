use std::path::Path;
use std::process::ExitCode;

use hom_yd_testkit::acceptance::{self, Outcome};

// Runs without the libtest harness so the criterion lines always reach stdout.
fn main() -> ExitCode {
    let bin = Path::new(env!("CARGO_BIN_EXE_homyd"));
    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("catalog axioms", Box::new(acceptance::criterion_1)),
        ("both bundles satisfy R1–R5", Box::new(acceptance::criterion_2)),
        ("antipode tables", Box::new(acceptance::criterion_3)),
        ("R1–R5 decide the biproduct on fuzzed data", Box::new(acceptance::criterion_4)),
        ("antipode degenerations", Box::new(acceptance::criterion_5)),
        ("braided category identities", Box::new(acceptance::criterion_6)),
        ("bialgebra in the braided category", Box::new(acceptance::criterion_7)),
        ("quasitriangular correspondences", Box::new(acceptance::criterion_8)),
        ("classical oracle at identity twists", Box::new(acceptance::criterion_9)),
        ("CLI determinism and round-trip", Box::new(move || acceptance::criterion_10(bin))),
    ];
    let mut failed = Vec::new();
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let out = criterion();
        let mark = if out.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {mark}  {name}: {}", i + 1, out.detail);
        if !out.passed {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
