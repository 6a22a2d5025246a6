//! A complete analysis rendered as JSON, CSV and text.

use samuel::analysis::{analyze, Budgets};
use samuel::input::parse_input;
use samuel::report::{document, to_csv, to_text};
use samuel::theorems::check_all;

const SOURCE: &str = "\
# four generators, sextic
ring Q[x,y]
ideal I = x^6, x^4*y, x*y^5, y^6
element p = x^4*y + y^6
";

fn main() -> samuel::Result<()> {
    let input = parse_input(SOURCE)?;
    let a = analyze(&input.ring, &input.ideal, input.element.as_ref().map(|e| &e.1), Budgets { samples: 4, ..Default::default() })?;
    let verdicts = check_all(&a);
    print!("{}", to_text(&a, &verdicts));
    let doc = document(&a, &verdicts, None);
    let csv = to_csv(&doc);
    println!("csv rows: {}", csv.lines().count() - 1);
    println!("hilbert section: {}", serde_json::to_string(&doc["hilbert"]["e"]).unwrap());
    Ok(())
}
