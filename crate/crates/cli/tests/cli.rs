use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use lindef_core::corpus;
use lindef_core::report::RingReport;

fn lindef(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lindef")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn json_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "k1.ring", &corpus::entry("K1").unwrap().spec_text(101));
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let o = lindef(&["analyze", &spec, "--powers", "--depth", "6", "--json", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let (a, b) = (fs::read(a).unwrap(), fs::read(b).unwrap());
    assert_eq!(a, b);
    let report: RingReport = serde_json::from_slice(&a).unwrap();
    assert!(report.timing_ms.is_none());
    let stdout = lindef(&["analyze", &spec, "--powers", "--depth", "6", "--format", "json"]).stdout;
    assert_eq!(stdout, a);
}

#[test]
fn corpus_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let o = lindef(&["corpus", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    for entry in corpus::entries() {
        let path = dir.path().join(format!("{}.ring", entry.name));
        let json = dir.path().join(format!("{}.json", entry.name));
        let o =
            lindef(&["analyze", path.to_str().unwrap(), "--powers", "--depth", "6", "--json", json.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", entry.name);
        let report: RingReport = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
        assert_eq!(entry.mismatches(&report), Vec::<String>::new(), "{}", entry.name);
    }
}

#[test]
fn table_shows_nu_grid() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "h3.ring", "field: 101\nvars: x\nrelations: x^3\n");
    let o = lindef(&["analyze", &spec]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("nu maps of k"));
    assert!(text.contains("•"));
    let o = lindef(&["ld", &spec]);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "ld(k) >= 8\n");
    let o = lindef(&["koszul", &spec, "--depth", "4"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "koszul: no (up to homological degree 4)\n");
}

#[test]
fn user_module() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "k1.ring", "field: 101\nvars: x, y\nrelations: x^2; y^2\n");
    let module = write(dir.path(), "cyc.mod", "generators: 1\nrelation: x\n");
    let out = dir.path().join("r.json");
    let o = lindef(&["analyze", &spec, "--module", &module, "--depth", "5", "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report: RingReport = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
    // R/(x) = F[y]/(y^2) over (x^2, y^2): periodic resolution by x
    assert_eq!(report.resolutions["cyc"].betti, vec![1; 6]);
}

#[test]
fn errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.ring", "field: 101\nvars: x, y\nrelations: x^2; z^2\n");
    let o = lindef(&["analyze", &bad]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("3:17: error[E08]"), "{err}");
    let o = lindef(&["ld", dir.path().join("missing.ring").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}
