//! Runs every verification suite on the full grid and prints wall-clock time
//! per module. Pass `sequential` to disable rayon, `mutated` to flip the
//! symbol sign.

use bdcover::par::Exec;
use bdcover::verify::*;
use std::time::Instant;

type Suite = fn(&VerifyConfig) -> Vec<PropertyReport>;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let has = |s: &str| args.iter().any(|a| a == s);
    let cfg = VerifyConfig {
        mutated: has("mutated"),
        exec: if has("sequential") { Exec::Sequential } else { Exec::Parallel },
        ..Default::default()
    };
    let suites: [(&str, Suite); 6] = [
        ("zlattice", zlattice_suite),
        ("bdinv", bdinv_suite),
        ("localfield", localfield_suite),
        ("cover", cover_suite),
        ("hecke", hecke_suite),
        ("reps", reps_suite),
    ];
    for (name, suite) in suites {
        let start = Instant::now();
        let reports = suite(&cfg);
        println!("{name:<10} {:>8.2?}", start.elapsed());
        for r in reports.iter().filter(|r| !r.passed()) {
            println!("  FAIL {}: {}", r.name, r.witness.as_deref().unwrap_or(""));
        }
    }
}
