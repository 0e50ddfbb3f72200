use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const DESK: [&str; 10] = ["--mass", "1", "--alpha", "0.2", "--q", "1", "--v0", "0", "--s0", "0.1"];

fn kgh(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kgh"))
        .args(args)
        .arg("--out")
        .arg(out)
        .env("KGH_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn with_desk<'a>(sub: &'a str, extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![sub];
    v.extend(DESK);
    v.extend(extra);
    v
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn spectrum_desk_has_four_rows() {
    let dir = tempfile::tempdir().unwrap();
    let o = kgh(&with_desk("spectrum", &["--n-max", "10"]), dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(dir.path().join("spectrum.csv")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "D,l,k,n,branch,E,eps,delta,C_n");
    assert_eq!(lines.len(), 5);
    assert!(!text.contains('\r'));
    assert!(lines[1].starts_with("3,0,3,0,positive-root,9.4935232512529"));
    assert!(lines[2].starts_with("3,0,3,0,negative-root,-9.4935232512529"));
    // 17 significant digits in every real field
    for field in lines[1].split(',').skip(5) {
        let mantissa = field.split('e').next().unwrap().trim_start_matches('-');
        assert_eq!(mantissa.replace('.', "").len(), 17, "{field}");
    }
}

#[test]
fn spectrum_json_parses() {
    let dir = tempfile::tempdir().unwrap();
    let o = kgh(&with_desk("spectrum", &["--format", "json", "--l-max", "1"]), dir.path());
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&fs::read(dir.path().join("spectrum.json")).unwrap()).unwrap();
    let rows = v.as_array().unwrap();
    assert!(rows.len() >= 4);
    assert_eq!(rows[0]["D"], 3);
    assert_eq!(rows[0]["branch"], "positive-root");
    assert!((rows[0]["E"].as_f64().unwrap() - 0.949_352_325_125_297_8).abs() < 1e-15);
}

#[test]
fn pole_config_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let o = kgh(
        &["spectrum", "--mass", "1", "--alpha", "0.2", "--q", "1.5", "--v0", "0", "--s0", "0.1"],
        dir.path(),
    );
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("pole"));
    assert!(!dir.path().join("spectrum.csv").exists());
}

#[test]
fn missing_parameter_and_bad_flags_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&kgh(&["spectrum", "--mass", "1"], dir.path())), 2);
    assert_eq!(code(&kgh(&with_desk("spectrum", &["--format", "xml"]), dir.path())), 2);
    assert_eq!(code(&kgh(&with_desk("wavefunction", &["--n", "1", "--branch", "up"]), dir.path())), 2);
    assert_eq!(code(&kgh(&with_desk("spectrum", &["--points", "10"]), dir.path())), 2);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    fs::write(
        &cfg,
        r#"{"mass": 1, "alpha": 0.2, "q": 1, "v0": 0, "s0": 0.1, "dim": 3, "l_max": 0, "n_max": 10,
            "r_max": 300, "points": 500, "spacing": "log", "outputs": ["spectrum", "wavefunctions"],
            "output_dir": "ignored", "format": "csv"}"#,
    )
    .unwrap();
    let out = dir.path().join("out");
    let o = kgh(&["spectrum", "--config", cfg.to_str().unwrap(), "--q", "0.5"], &out);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(out.join("spectrum.csv")).unwrap();
    assert!(text.lines().nth(1).unwrap().contains("8.5536003326077"));
    let wf = fs::read_to_string(out.join("wavefunction_D3_l0_n1_neg.csv")).unwrap();
    assert_eq!(wf.lines().count(), 501);
}

#[test]
fn unknown_config_key_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    fs::write(&cfg, r#"{"mass": 1, "alpha": 0.2, "q": 1, "v0": 0, "s0": 0.1, "temperature": 3}"#).unwrap();
    let o = kgh(&["spectrum", "--config", cfg.to_str().unwrap()], dir.path());
    assert_eq!(code(&o), 2);
    fs::write(&cfg, "{ not json").unwrap();
    assert_eq!(code(&kgh(&["spectrum", "--config", cfg.to_str().unwrap()], dir.path())), 2);
    let missing = dir.path().join("absent.json");
    assert_eq!(code(&kgh(&["spectrum", "--config", missing.to_str().unwrap()], dir.path())), 2);
}

#[test]
fn weak_potential_gives_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let o = kgh(
        &["spectrum", "--mass", "1", "--alpha", "0.2", "--q", "1", "--v0", "0", "--s0", "0.001"],
        dir.path(),
    );
    assert_eq!(code(&o), 0);
    assert_eq!(
        fs::read_to_string(dir.path().join("spectrum.csv")).unwrap(),
        "D,l,k,n,branch,E,eps,delta,C_n\n"
    );
}

#[test]
fn regime_error_exits_3() {
    // V0 > S0 at q = 1: 1 + 4 beta2 < 0 leaves no real delta for k = 3
    let dir = tempfile::tempdir().unwrap();
    let o = kgh(
        &["spectrum", "--mass", "1", "--alpha", "0.2", "--q", "1", "--v0", "0.3", "--s0", "0.1"],
        dir.path(),
    );
    assert_eq!(code(&o), 3);
}

#[test]
fn wavefunction_contract() {
    let dir = tempfile::tempdir().unwrap();
    let o = kgh(&with_desk("wavefunction", &["--n", "1", "--points", "2000"]), dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(dir.path().join("wavefunction_D3_l0_n1_pos.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "r,z,u_normalized,R");
    let u: Vec<f64> = lines.map(|l| l.split(',').nth(2).unwrap().parse().unwrap()).collect();
    assert_eq!(u.len(), 2000);
    let max = u.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    assert!(u[0].abs() < 1e-3 * max);
    let changes = u.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
    assert_eq!(changes, 1);
}

#[test]
fn missing_state_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&kgh(&with_desk("wavefunction", &["--n", "2"]), dir.path())), 3);
    // the coupled ground state has no negative-energy partner
    let o = kgh(
        &[
            "wavefunction", "--mass", "1", "--alpha", "0.2", "--q", "1", "--v0", "0.1", "--s0", "0.1", "--n", "0",
            "--branch", "neg",
        ],
        dir.path(),
    );
    assert_eq!(code(&o), 3);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn unwritable_output_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let o = kgh(&with_desk("spectrum", &[]), &blocker.join("sub"));
    assert_eq!(code(&o), 4);
}

#[test]
fn validate_report_is_strict_json() {
    let dir = tempfile::tempdir().unwrap();
    let o = kgh(&with_desk("validate", &[]), dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&fs::read(dir.path().join("validation.json")).unwrap()).unwrap();
    assert_eq!(v["overall"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 10);
    for c in checks {
        assert!(c["name"].is_string() && c["threshold"].is_number() && c["pass"].is_boolean());
    }
}

#[test]
fn corrupted_energy_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let o = kgh(&with_desk("validate", &["--corrupt-energy", "-1e-3"]), dir.path());
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&fs::read(dir.path().join("validation.json")).unwrap()).unwrap();
    assert_eq!(v["overall"], false);
    let residual = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "ode_residual").unwrap();
    assert_eq!(residual["pass"], false);
}

#[test]
fn help_exits_0() {
    let o = Command::new(env!("CARGO_BIN_EXE_kgh")).arg("--help").output().unwrap();
    assert_eq!(code(&o), 0);
    let text = String::from_utf8_lossy(&o.stdout);
    for sub in ["spectrum", "wavefunction", "validate"] {
        assert!(text.contains(sub));
    }
}
