use uwf_core::suite::{run_timed, CRITERIA};

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in CRITERIA {
        let (result, elapsed) = run_timed(c.id);
        let line = match &result {
            Ok(r) if r.passed() => format!("PASS {:>2} {} ({} checks, {:.2?})", c.id, c.name, r.checked_coefficients, elapsed),
            Ok(r) => format!("FAIL {:>2} {}: {}", c.id, c.name, r.first_failure.as_deref().unwrap_or("")),
            Err(e) => format!("FAIL {:>2} {}: error {e}", c.id, c.name),
        };
        println!("{line}");
        if !line.starts_with("PASS") {
            failed.push(c.id);
        }
        if let Some(limit) = c.limit {
            if elapsed > limit {
                println!("     {} took {elapsed:.2?}, over the {limit:?} budget", c.name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
