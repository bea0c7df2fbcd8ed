use arthur_core::checks::{run_all, CheckConfig};

#[test]
fn full_suite_with_default_bounds() {
    for o in run_all(&CheckConfig::default()) {
        println!("{:>2} {:<24} {}", o.id, o.name, o.summary());
        assert!(o.failure_count == 0 && o.cases > 0, "{} {}", o.name, o.summary());
    }
}
