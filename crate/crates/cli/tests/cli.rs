use std::process::{Command, Output};

fn stabkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn pair_prints_the_plane_gram_matrix() {
    let o = stabkit(&["pair", "--basis", "clifford2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["det"], "8");
    assert_eq!(v["matrix"][0], serde_json::json!(["2", "3", "6"]));
}

#[test]
fn exit_codes() {
    assert_eq!(stabkit(&["verify"]).status.code(), Some(0));
    assert_eq!(stabkit(&["--help"]).status.code(), Some(0));
    assert_eq!(stabkit(&["bogus"]).status.code(), Some(2));
    assert_eq!(stabkit(&["pick", "2", "2"]).status.code(), Some(2));
    assert_eq!(stabkit(&["pair", "--basis", "nope"]).status.code(), Some(2));
    assert_eq!(stabkit(&["walls", "--char", "nope"]).status.code(), Some(2));
    assert_eq!(
        stabkit(&["walls", "--char", "@/nonexistent/c.json"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        stabkit(&["--config", "/nonexistent/c.toml", "verify"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn torsion_walls_on_the_reference_line() {
    let o = stabkit(&["walls", "--char", "psi_P_Pi", "--beta=-5/4", "--bound", "5"]);
    let text = stdout(&o);
    assert!(text.starts_with("1 wall(s) for psi_P_Pi"), "{text}");
    assert!(text.contains("alpha^2 = 1/16"));
    assert!(text.contains("sub (0, 0, 1, 0) quotient (1, -4, 3, -1)"));
}

#[test]
fn walls_artifacts_and_config() {
    let dir = std::env::temp_dir().join(format!("stabkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("stabkit.toml");
    std::fs::write(&cfg, "bound = 5\nbeta = \"-5/4\"\n").unwrap();
    let out = dir.join("out");
    let o = stabkit(&[
        "--config",
        cfg.to_str().unwrap(),
        "walls",
        "--char",
        "psi_P_Pi",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let csv = std::fs::read_to_string(out.join("walls.csv")).unwrap();
    assert!(
        csv.lines().any(|l| l == "-5/4,1/16,0;0;1;0,1;-4;3;-1,0,0"),
        "{csv}"
    );
    assert!(std::fs::read_to_string(out.join("walls.svg"))
        .unwrap()
        .starts_with("<svg"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("walls.json")).unwrap()).unwrap();
    assert_eq!(json["bound"], 5);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn pick_and_tilt() {
    let text = stdout(&stabkit(&["pick", "2", "1"]));
    assert!(
        text.contains("leaf kappa2-orbit") && text.contains("leaf kappa1+kappa2-orbit"),
        "{text}"
    );
    let text = stdout(&stabkit(&["tilt", "--char", "C1", "--alpha-sq", "1/64"]));
    assert!(
        text.contains("Z = -3/16 + i*2") && text.contains("nu = 3/32"),
        "{text}"
    );
}

#[test]
fn plots_are_svg() {
    let hex = stdout(&stabkit(&["plot", "hexagon"]));
    assert_eq!(hex.matches("class=\"label\"").count(), 7);
    let xieta = stdout(&stabkit(&[
        "plot", "xieta", "--points", "C0,C1", "--ray", "ell0",
    ]));
    assert!(xieta.contains("C0 (-1/4, 1/32)") && xieta.contains("ℓ₀"));
    assert_eq!(stabkit(&["plot", "cube"]).status.code(), Some(2));
}
