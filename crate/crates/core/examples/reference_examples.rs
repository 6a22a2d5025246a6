//! Recomputes one of the embedded reference ideals.

use samuel::golden::{example_names, run_example};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "quartic".into());
    let Some(res) = run_example(&name) else {
        eprintln!("unknown example; choose from {:?}", example_names());
        std::process::exit(1);
    };
    for c in &res.checks {
        println!("{} {:<36} expected {} computed {}", if c.pass { "ok  " } else { "FAIL" }, c.name, c.expected, c.computed);
    }
}
