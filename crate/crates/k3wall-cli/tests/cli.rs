//! End-to-end checks of the command-line surface: output text amd exit codes.

use std::process::{Command, Output};

fn k3wall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3wall"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn wall_subcommand_prints_equation_and_endpoints() {
    let out = k3wall(&["wall", "7", "1,0,-1", "-2,1,-3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("6(α²+β²)+5β+1=0"), "{text}");
    assert!(text.contains("-1/2, -1/3"), "{text}");
    assert!(text.contains("semicircle"), "{text}");
}

#[test]
fn wall_subcommand_reports_irrational_endpoints() {
    let out = k3wall(&["wall", "8", "1,0,-1", "-2,1,-4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("irrational roots of 7β²+6β+1 = 0"), "{text}");
}

#[test]
fn pairing_subcommand() {
    let out = k3wall(&["pairing", "7", "-2,1,-3", "5,-2,5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("<v,w> = 1"), "{text}");
    assert!(text.contains("chi(v,w) = -1"), "{text}");
}

#[test]
fn holes_subcommand_with_rmax() {
    let out = k3wall(&["holes", "11", "1,0,-2", "-2,1,-5", "--rmax", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(7,-3,13) at (β = -3/7, α² = 1/490)"), "{text}");
}

#[test]
fn ideal_min_colength_subcommand() {
    let out = k3wall(&["ideal", "min-colength", "x^3,x^2y,xy^3,y^5", "--max-gens", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("minimum colength: 11"));
}

#[test]
fn ideal_product_subcommand() {
    let out = k3wall(&["ideal", "product", "x,y^2", "x^2,xy,y^3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x^3, x^2*y, x*y^3, y^5");
}

#[test]
fn table_subcommand_rows() {
    let out = k3wall(&["table", "--genus", "7..14", "--degrees", "3,4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("g=7    12   5       | {5}  | {5,6}"), "{text}");
    assert!(text.contains("g=9    16   6       | {6}  | {6,7}"), "{text}");
    assert!(text.contains("g=14   26   8       | {8}  | {8,9}"), "{text}");
}

#[test]
fn scenario_run_single_genus_is_green() {
    let out = k3wall(&["scenario", "run", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("result: GREEN"), "{text}");
    assert!(text.contains("assumed"), "{text}");
}

#[test]
fn scenario_run_writes_json_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let svg = dir.path().join("diagram.svg");
    let out = k3wall(&[
        "scenario",
        "run",
        "7",
        "--json",
        json.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["genus"], 7);
    assert_eq!(report["holes"][0]["alpha_sq"], "1/150");
    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert!(svg_text.starts_with("<?xml"));
}

#[test]
fn scenario_run_red_config_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.toml");
    std::fs::write(
        &path,
        r#"
genus = 7
[[class]]
label = "G"
v = [5, -2, 5]
[[check]]
id = "wrong"
cite = "negative control"
op = "spherical"
class = "G"
expect = "false"
"#,
    )
    .unwrap();
    let out = k3wall(&["scenario", "run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("result: RED"));
}

#[test]
fn usage_errors_exit_two() {
    let out = k3wall(&["wall", "7", "1,0,-1", "not-a-vector"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("parse error at byte"), "{err}");

    let out = k3wall(&["ideal", "min-colength", "x^3, z", "--max-gens", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = k3wall(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));

    let out = k3wall(&["scenario", "run", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_overrides_pick_up_defaults() {
    let out = Command::new(env!("CARGO_BIN_EXE_k3wall"))
        .args(["holes", "7", "1,0,-1", "-2,1,-3"])
        .env("K3WALL_RMAX", "4")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    // rank bound 4 misses the rank-5 hole class
    assert!(text.contains("no holes up to rank 4"), "{text}");
}

#[test]
fn scenario_run_many_sorts_by_genus() {
    let out = k3wall(&["scenario", "run", "9", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let g7 = text.find("scenario genus 7").unwrap();
    let g9 = text.find("scenario genus 9").unwrap();
    assert!(g7 < g9);
}
