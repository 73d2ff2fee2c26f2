//! End-to-end weight-54 run: every check with expected and computed values,
//! then the machine-readable report.

use std::time::Instant;

use sklift::pipeline::{check_hypotheses, verify_weight54_example};
use sklift::lfun::DirichletChar;

fn main() -> sklift::Result<()> {
    let t = Instant::now();
    let report = verify_weight54_example()?;
    for c in &report.checks {
        let tag = if c.pass { "PASS" } else { "FAIL" };
        println!("{tag} {:<55} expected {} | computed {}", c.name, c.expected, c.computed);
    }
    println!("m = {:?}, n = {:?}, hypotheses satisfied: {}", report.m, report.n, report.hypotheses_satisfied);
    println!("witnesses: {:?}", report.witnesses);
    println!("({:.1?})", t.elapsed());

    // a character with chi_D(-1) = +1 trips the side conditions
    let even = check_hypotheses(54, 516223, Some(&DirichletChar::quadratic(-3)?), 5)?;
    for c in even.checks.iter().filter(|c| !c.pass) {
        println!("D = 5: FAIL {}", c.name);
    }
    Ok(())
}
