use std::process::Command;

use lct_cli::{run, EXIT_COMPUTATION, EXIT_OK, EXIT_USAGE};

fn lct(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lct")).args(args).output().expect("spawn lct")
}

fn machine(args: &[&str]) -> Vec<(String, String)> {
    let mut argv = vec!["lct", "--machine"];
    argv.extend_from_slice(args);
    let out = run(argv);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    out.stdout
        .lines()
        .map(|l| {
            let (k, v) = l.split_once('=').expect("key=value line");
            (k.to_string(), v.to_string())
        })
        .collect()
}

fn value<'a>(pairs: &'a [(String, String)], key: &str) -> &'a str {
    &pairs.iter().find(|(k, _)| k == key).unwrap_or_else(|| panic!("missing {key}")).1
}

#[test]
fn projective_plane() {
    let out = machine(&["toric", "--rays", "1,0;0,1;-1,-1"]);
    assert_eq!(value(&out, "lct"), "1/3");
    assert_eq!(value(&out, "max_pairing"), "2");
}

#[test]
fn rays_ignore_whitespace() {
    let out = machine(&["toric", "--rays", " 1, 0 ; 0,1; -1 ,-1 "]);
    assert_eq!(value(&out, "lct"), "1/3");
}

#[test]
fn family_lookup() {
    let out = machine(&["family", "2.36"]);
    assert_eq!(value(&out, "status"), "exact_all");
    assert_eq!(value(&out, "value"), "1/5");
    assert!(value(&out, "provenance").contains("bundle formula"));
}

#[test]
fn cubic_e6() {
    assert_eq!(value(&machine(&["cubic-sing", "E6"]), "lct"), "1/6");
    assert_eq!(value(&machine(&["cubic-sing", "A1,A4"]), "lct"), "1/3");
}

#[test]
fn symmetric_plane_with_group() {
    let out = machine(&["toric", "--rays", "1,0;0,1;-1,-1", "--group", "0,1,1,0;0,-1,1,-1"]);
    assert_eq!(value(&out, "lct"), "1");
}

#[test]
fn bundle_agrees_with_engine() {
    let out = machine(&["bundle", "--base-dim", "2", "--twists", "2"]);
    assert_eq!(value(&out, "closed_form"), "1/5");
    assert_eq!(value(&out, "lct"), "1/5");
}

#[test]
fn other_subcommands() {
    assert_eq!(value(&machine(&["wps", "1", "1", "2", "3"]), "lct"), "1/7");
    assert_eq!(value(&machine(&["cse", "--monomial", "2,3"]), "cse"), "1/3");
    assert_eq!(value(&machine(&["hypersurface", "--ambient", "4", "--degree", "3"]), "lct"), "1/2");
    assert_eq!(value(&machine(&["double-cover", "--ambient", "3", "--degree", "2"]), "lct"), "1/2");
    assert_eq!(value(&machine(&["product", "1/3", "1/2"]), "lct"), "1/3");
    assert_eq!(value(&machine(&["p1-product", "2/3"]), "lct"), "1/2");
    assert_eq!(value(&machine(&["dp", "--degree", "3", "--eckardt"]), "lct"), "2/3");
    assert_eq!(value(&machine(&["dp", "--degree", "8", "--deg8", "product"]), "lct"), "1/2");
    assert_eq!(value(&machine(&["equivariant", "FermatCubic_Aut"]), "lct"), "4");
}

#[test]
fn family_list_filters() {
    let out = machine(&["family", "--list", "--status", "unknown"]);
    let ids: Vec<&str> = out.iter().map(|(_, v)| v.split('|').next().unwrap()).collect();
    assert_eq!(ids, ["1.2", "1.3", "1.4", "1.5", "1.6", "1.7", "2.6"]);
    assert_eq!(machine(&["family", "--list", "--rank", "5"]).len(), 8);
}

#[test]
fn human_output_has_no_decimals() {
    let out = run(["lct", "db", "--cross-check"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("18 fans checked, all pass"));
    for args in [
        &["lct", "toric", "--rays", "1,0,0;0,1,0;0,0,1;-1,-1,-1"][..],
        &["lct", "family", "4.5"],
        &["lct", "cse", "--fermat", "3,4,5"],
    ] {
        let out = run(args);
        assert!(out.stdout.contains('/'), "{}", out.stdout);
        assert!(!out.stdout.contains("0."), "{}", out.stdout);
    }
}

#[test]
fn computation_errors_name_the_variant() {
    for (args, name) in [
        (&["dp", "--degree", "8"][..], "UnsupportedDescriptor"),
        (&["family", "9.1"], "InvalidId"),
        (&["equivariant", "nope"], "UnknownKey"),
        (&["wps", "2", "2", "1"], "NotWellFormed"),
        (&["hypersurface", "--ambient", "3", "--degree", "4"], "OutOfRegime"),
        (&["toric", "--rays", "1,0;0,1"], "FanNotComplete"),
        (&["toric", "--rays", "1,0;0,1;-1,-1", "--group", "0,1,1,0;1,0,0,-1"], "GroupDoesNotPreserveFan"),
        (&["product", "3/2", "1/2"], "InvalidArgument"),
    ] {
        let out = lct(args);
        assert_eq!(out.status.code(), Some(EXIT_COMPUTATION), "{args:?}");
        let stderr = String::from_utf8(out.stderr).unwrap();
        assert!(stderr.contains(name), "{args:?}: {stderr}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn usage_errors_name_the_flag() {
    for (args, flag) in [
        (&["toric", "--rays", "1,0;x"][..], "--rays"),
        (&["toric", "--rays", "1,0;0,1;-1,-1", "--group", "1,0,0"], "--group"),
        (&["toric", "--fan-file", "/nonexistent/fan.txt"], "--fan-file"),
        (&["dp", "--degree", "3", "--nodes", "2"], "--nodes"),
        (&["dp", "--degree", "3", "--cuspidal", "--tacnodal"], "--cuspidal"),
        (&["bundle", "--base-dim", "x", "--twists", "1"], "--base-dim"),
        (&["product", "a", "1/2"], "a"),
        (&["cubic-sing", "B7"], "types"),
    ] {
        let out = lct(args);
        assert_eq!(out.status.code(), Some(EXIT_USAGE), "{args:?}");
        let stderr = String::from_utf8(out.stderr).unwrap();
        assert!(stderr.contains(flag), "{args:?}: {stderr}");
    }
}

#[test]
fn fan_file_with_group() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p1.fan");
    std::fs::write(&path, "# P1 with the flip\n1\n-1\n\n-1\n").unwrap();
    let out = machine(&["toric", "--fan-file", path.to_str().unwrap()]);
    assert_eq!(value(&out, "lct"), "1");
}

#[test]
fn export_import_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.txt");
    let p = path.to_str().unwrap();
    assert_eq!(value(&machine(&["db", "--export", p]), "records"), "105");
    let first = std::fs::read(&path).unwrap();
    let out = machine(&["db", "--import", p]);
    assert_eq!(value(&out, "records"), "105");
    assert_eq!(value(&out, "passed"), "true");

    std::fs::write(&path, "2.36|3|exact_all|1/5|x\n").unwrap();
    let bad = lct(&["db", "--import", p]);
    assert_eq!(bad.status.code(), Some(EXIT_COMPUTATION));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("ParseError"));

    machine(&["db", "--export", p]);
    assert_eq!(std::fs::read(&path).unwrap(), first);
}

#[test]
fn machine_output_is_byte_stable() {
    let args = ["--machine", "toric", "--rays", "1,0,0;0,1,0;-1,0,-1;0,-1,-1;0,0,1;0,0,-1"];
    let first = lct(&args);
    assert_eq!(first.status.code(), Some(EXIT_OK));
    for _ in 0..3 {
        assert_eq!(lct(&args).stdout, first.stdout);
    }
}
