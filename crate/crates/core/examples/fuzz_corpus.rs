//! A small seeded corpus through every theorem check.

use samuel::corpus::{run_corpus, CorpusConfig};

fn main() -> samuel::Result<()> {
    let cfg = CorpusConfig::from_toml("vars = 2\nmax_deg = 6\ncount = 4\nseed = 11\nsamples = 4\nparameter_ideals = 2\n")?;
    let report = run_corpus(&cfg, None);
    for it in &report.items {
        let ids: Vec<&str> = it.violations.iter().map(|v| v.id).collect();
        println!("{:?} #{} ({}) violations: {:?}", it.kind, it.index, it.ideal.join(", "), ids);
    }
    println!("{} violations, {} items with errors", report.violations, report.errors);
    Ok(())
}
