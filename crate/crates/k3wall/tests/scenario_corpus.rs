//! The shipped genus 7–14 dossiers must all come back green, and their
//! reports must survive a JSON round trip.

use k3wall::ideals::{subideal_cache_hits, MonomialIdeal};
use k3wall::report::{parse_report, serialize_report, CheckKind};
use k3wall::scenario::{builtin_genera, builtin_scenario, run_many, run_scenario};

#[test]
fn every_shipped_scenario_is_green() {
    for genus in builtin_genera() {
        let report = run_scenario(genus).unwrap();
        let failures: Vec<String> = report
            .failed_checks()
            .map(|c| format!("{}: expected {:?}, got {:?}", c.id, c.expected, c.actual))
            .collect();
        assert!(
            failures.is_empty(),
            "genus {genus} report is red:\n{}",
            failures.join("\n")
        );
    }
}

#[test]
fn reports_round_trip_through_json() {
    for genus in builtin_genera() {
        let report = run_scenario(genus).unwrap();
        let text = serialize_report(&report).unwrap();
        assert_eq!(parse_report(&text).unwrap(), report, "genus {genus}");
    }
}

#[test]
fn every_check_carries_a_citation() {
    for genus in builtin_genera() {
        let report = run_scenario(genus).unwrap();
        for check in &report.checks {
            assert!(
                !check.citation.trim().is_empty(),
                "genus {genus}, check {}",
                check.id
            );
        }
    }
}

#[test]
fn assumed_lines_are_present_and_distinct() {
    let report = run_scenario(7).unwrap();
    let assumed = report
        .checks
        .iter()
        .filter(|c| c.kind == CheckKind::Assumed)
        .count();
    let computed = report
        .checks
        .iter()
        .filter(|c| c.kind == CheckKind::Computed)
        .count();
    assert!(assumed >= 3, "expected recorded assumptions, got {assumed}");
    assert!(computed >= 20);
}

#[test]
fn derived_values_are_flagged() {
    let report = run_scenario(13).unwrap();
    let h0 = report
        .checks
        .iter()
        .find(|c| c.id == "g13-h0-E")
        .expect("genus 13 ships the h0 check");
    assert!(h0.derived, "the genus-13 h0 value is a computed count");
    assert_eq!(h0.actual, "8");
}

#[test]
fn shared_colength_target_is_computed_once() {
    // the same staircase target shows up in the genus 9 and genus 11 dossiers
    run_many(&[9, 11]).unwrap();
    let shared = MonomialIdeal::parse("x^3, x^2*y, x*y^3, y^5").unwrap();
    let horizon = k3wall::ideals::default_horizon(&shared, 3);
    assert!(
        subideal_cache_hits(&shared, 3, horizon) >= 1,
        "expected the second dossier to hit the memoized search"
    );
}

#[test]
fn run_many_matches_individual_runs() {
    let many = run_many(&[7, 8, 9]).unwrap();
    for report in &many {
        assert_eq!(report, &run_scenario(report.genus).unwrap());
    }
}

#[test]
fn scenario_plots_render_and_are_stable() {
    for genus in builtin_genera() {
        let scenario = builtin_scenario(genus).unwrap();
        let spec = scenario
            .plot_spec()
            .unwrap()
            .unwrap_or_else(|| panic!("genus {genus} ships a plot row"));
        let first = k3wall::plot::render_svg(&spec).unwrap();
        let second = k3wall::plot::render_svg(&spec).unwrap();
        assert_eq!(first, second, "genus {genus} SVG must be byte-stable");
        assert!(first.ends_with("</svg>\n"));
    }
}
