//! One line per acceptance criterion. Every comparison is exact; a criterion
//! also fails when it runs over its time budget.

use nilcoxeter_cli::suite::{criteria, run_criterion, SuiteConfig};

fn main() {
    let cfg = SuiteConfig::default();
    let mut failed = Vec::new();
    for c in criteria() {
        let out = run_criterion(&c, &cfg);
        let status = if out.passed() { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {:>2}: {} ({} checked, {:.2} s, budget {} s)",
            c.id,
            c.name,
            out.checked(),
            out.elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        if let Some(why) = out.failure() {
            println!("     {why}");
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("all {} criteria passed", criteria().len());
    } else {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
