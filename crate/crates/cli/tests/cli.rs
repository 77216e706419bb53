//! Golden-output tests for the `ppvle` binary. Set `UPDATE_GOLDEN=1` to rewrite the files.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ppvle(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ppvle"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

const CASES: &[(&str, &[&str], &str)] = &[
    ("capacity_rll", &["capacity", "@rll_2_inf"], ""),
    ("capacity_two_state", &["capacity", "@two_state"], ""),
    ("capacity_vlg", &["capacity", "@two_state_vlg", "--json"], ""),
    ("reduce_two_state", &["reduce", "@two_state"], ""),
    ("power_rll", &["power", "@rll_2_inf", "-t", "2"], ""),
    ("parity_split", &["parity-split", "@two_state"], ""),
    ("parity_split_bcd_odd", &["parity-split", "@two_state", "--partition", "b,c,d"], ""),
    ("kraft_two_lengths", &["kraft-check", "--eta", "1,1", "--omega", "0,1"], ""),
    ("kraft_fails_b", &["kraft-check", "--eta", "2", "--omega", "0"], ""),
    ("kraft_ordinary", &["kraft-check", "--mu", "1,1,2", "-n", "2", "--json"], ""),
    ("build_parity_three", &["build-list", "--eta", "1,0,1", "--omega", "0,1,1"], ""),
    ("build_ordinary", &["build-list", "--mu", "1,1,2", "-n", "2"], ""),
    ("build_infeasible", &["build-list", "--eta", "3", "--omega", "0"], ""),
    ("validate_ok", &["validate-list", "0", "10", "110", "111"], ""),
    ("validate_gap", &["validate-list", "0", "10"], ""),
    ("aev_rll", &["aev", "@rll_2_inf", "-n", "128", "-t", "14"], ""),
    ("aev_rll_short", &["aev", "@rll_2_inf", "-n", "64", "-t", "12", "--cap", "1"], ""),
    ("fixed_two_state", &["fixed-existence", "@two_state", "-t", "1"], ""),
    ("fixed_rll_p3", &["fixed-existence", "@rll_2_inf", "-t", "6", "--n0", "4", "--n1", "4", "--json"], ""),
    ("fixed_rll_det_p7", &["fixed-existence", "@rll_2_inf", "-t", "14", "--n0", "64", "--n1", "64", "--deterministic"], ""),
    ("principal_r1", &["principal", "@rll_2_inf_sq", "-n", "2", "-r", "1"], ""),
    ("principal_r2", &["principal", "@rll_2_inf_sq", "-n", "2", "-r", "2"], ""),
    ("pp_principal_r2", &["pp-principal", "@rll_2_inf_sq", "-r", "2"], ""),
    ("pp_principal_r3", &["pp-principal", "@rll_2_inf_sq", "--n0", "1", "--n1", "1", "-r", "3"], ""),
    ("pp_principal_json", &["pp-principal", "@two_state", "-r", "2", "--json"], ""),
    ("pp_principal_budget", &["pp-principal", "@rll_2_inf_sq", "-r", "3", "--budget", "5"], ""),
    ("synth_rll_parity", &["synth", "@rll_2_inf_sq", "-r", "3"], ""),
    ("synth_rll_ordinary", &["synth", "@rll_2_inf_sq", "-n", "2", "-r", "2"], ""),
    ("verify_ordinary", &["verify", "@rll_vle_ordinary", "@rll_2_inf_sq", "-n", "2"], ""),
    ("verify_parity_rejects", &["verify", "@rll_vle_ordinary", "@rll_2_inf_sq"], ""),
    ("verify_vlg", &["verify", "@two_state_vlg", "@two_state"], ""),
    ("tag_parity", &["tag", "@rll_vle_parity"], ""),
    ("tag_ordinary", &["tag", "@rll_vle_ordinary", "--ordinary"], ""),
    ("encode_vlg_stream", &["encode", "@two_state_vlg_tagged"], "0 1 0 1 1"),
    ("encode_mid_edge", &["encode", "@rll_vle_parity_tagged"], "0 1 1 0 1"),
    ("encode_bad_symbol", &["encode", "@rll_vle_parity_tagged"], "0 2"),
    ("decode_parity_stream", &["decode", "@rll_vle_parity_tagged"], "00 01 00 10 01 00"),
    ("decode_unparseable", &["decode", "@two_state_vlg_tagged"], "a d"),
    ("decode_json", &["decode", "@rll_vle_ordinary_tagged", "--json"], "01 00 01 00"),
    ("admissible_case3", &["admissible", "--n0", "1", "--n1", "1", "-r", "2", "--zset", "1"], ""),
    ("admissible_xi", &["admissible", "--n0", "1", "--n1", "1", "-r", "3", "--zset", "2"], ""),
    ("admissible_case1", &["admissible", "--n0", "2", "--n1", "1", "-r", "4", "--zset", "1,3"], ""),
    ("search_none_bcd_odd", &["search-none", "@two_state", "--partition", "b,c,d", "--rmax", "3"], ""),
    ("search_none_cd_odd", &["search-none", "@two_state", "--rmax", "2"], ""),
    ("search_none_all_even", &["search-none", "@two_state", "--partition", "", "--rmax", "2"], ""),
    ("unknown_fixture", &["capacity", "@nope"], ""),
];

fn render(r: &Run) -> String {
    format!("exit: {}\n--- stdout\n{}--- stderr\n{}", r.code, r.stdout, r.stderr)
}

#[test]
fn golden_outputs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    if update {
        std::fs::create_dir_all(&dir).unwrap();
    }
    let mut mismatches = Vec::new();
    for (name, args, stdin) in CASES {
        let got = render(&ppvle(args, stdin));
        let path = dir.join(format!("{name}.txt"));
        if update {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if got != want {
            mismatches.push(format!("{name}:\n{got}\nexpected:\n{want}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn output_is_reproducible() {
    for args in [&["synth", "@rll_2_inf_sq", "-r", "3", "--parallel"][..], &["search-none", "@two_state", "--rmax", "2"]] {
        assert_eq!(render(&ppvle(args, "")), render(&ppvle(args, "")));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(ppvle(&["capacity", "@rll_2_inf"], "").code, 0);
    assert_eq!(ppvle(&["admissible", "-r", "2", "--zset", "1"], "").code, 1);
    assert_eq!(ppvle(&["no-such-command"], "").code, 2);
    assert_eq!(ppvle(&["capacity"], "").code, 2);
    assert_eq!(ppvle(&["capacity", "/does/not/exist.json"], "").code, 2);
    assert_eq!(ppvle(&["encode", "@two_state_vlg_tagged"], "1").code, 3);
    assert_eq!(ppvle(&["encode", "@two_state_vlg_tagged"], "x").code, 4);
    assert_eq!(ppvle(&["decode", "@two_state_vlg_tagged"], "d").code, 4);
    assert_eq!(ppvle(&["encode", "@two_state_vlg_tagged"], "").code, 0);
}

#[test]
fn synthesized_encoder_round_trips_through_files() {
    let dir = std::env::temp_dir().join(format!("ppvle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let enc = dir.join("enc.json");
    let tagged = dir.join("tagged.json");
    let synth = ppvle(&["synth", "@rll_2_inf_sq", "-r", "3"], "");
    assert_eq!(synth.code, 0);
    std::fs::write(&enc, &synth.stdout).unwrap();
    let verify = ppvle(&["verify", enc.to_str().unwrap(), "@rll_2_inf_sq"], "");
    assert_eq!(verify.code, 0, "{}", verify.stdout);
    let tag = ppvle(&["tag", enc.to_str().unwrap()], "");
    assert_eq!(tag.code, 0);
    std::fs::write(&tagged, &tag.stdout).unwrap();
    let tags = "1 1 0 0 1 0 1 1 1 0";
    let labels = ppvle(&["encode", tagged.to_str().unwrap()], tags);
    assert_eq!(labels.code, 0, "{}", labels.stderr);
    let back = ppvle(&["decode", tagged.to_str().unwrap()], &labels.stdout);
    assert_eq!(back.stdout.trim(), tags);
    std::fs::remove_dir_all(&dir).unwrap();
}
