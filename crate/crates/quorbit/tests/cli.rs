use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn quorbit(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quorbit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn floats(v: &Value) -> Vec<f64> {
    v.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

fn csv_rows(out: &Output) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

#[test]
fn maximally_mixed_qutrit_is_an_interior_state() {
    let out = quorbit(&["check", "--N", "3", "--xi", "0,0,0,0,0,0,0,0"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["is_state"], true);
    assert_eq!(v["rank"], 3);
    assert_eq!(v["stratum"], "interior");
}

#[test]
fn exit_codes_separate_verdicts_from_failures() {
    let outside = quorbit(&["check", "--xi", "0,0,1.5"], None);
    assert_eq!(outside.status.code(), Some(2));
    assert_eq!(json_lines(&outside)[0]["is_state"], false);

    let malformed = quorbit(&["check"], Some("{\"xi\": [0, 0\n"));
    assert_eq!(malformed.status.code(), Some(1));
    assert!(malformed.stdout.is_empty());
    assert!(String::from_utf8_lossy(&malformed.stderr).contains("line 1"));

    assert_eq!(quorbit(&["check", "--xi", "0,0"], None).status.code(), Some(1));
    assert_eq!(quorbit(&["check", "--N", "3", "--xi", "0,0,0"], None).status.code(), Some(1));
    assert_eq!(quorbit(&["bogus"], None).status.code(), Some(1));
    assert_eq!(quorbit(&["check"], Some("")).status.code(), Some(1));
    assert_eq!(quorbit(&["--help"], None).status.code(), Some(0));
}

#[test]
fn batch_check_reads_bloch_and_matrix_records() {
    let input = concat!(
        "{\"N\":2,\"xi\":[0,0,1]}\n",
        "\n",
        "{\"rho\":[[[0.5,0],[0,0.5]],[[0,-0.5],[0.5,0]]]}\n",
        "{\"N\":3,\"rho\":[[[0.5,0],[0,0],[0,0]],[[0,0],[0.5,0],[0,0]],[[0,0],[0,0],[0,0]]]}\n",
    );
    let out = quorbit(&["check"], Some(input));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_lines(&out);
    assert_eq!(v.len(), 3);
    assert_eq!(v[0]["stratum"], "pure");
    assert_eq!(v[1]["stratum"], "pure");
    assert_eq!(v[2]["stratum"], "boundary-rank-2");

    let mixed = quorbit(&["check", "--csv"], Some("{\"xi\":[0,0,0.5]}\n{\"xi\":[0,0,2]}\n"));
    assert_eq!(mixed.status.code(), Some(2));
    let (header, rows) = csv_rows(&mixed);
    assert_eq!(header, ["is_state", "rank", "stratum", "margin"]);
    assert_eq!(rows[0][0], "true");
    assert_eq!(rows[1][0], "false");

    let bad_trace = quorbit(&["check"], Some("{\"rho\":[[[1,0],[0,0]],[[0,0],[1,0]]]}\n"));
    assert_eq!(bad_trace.status.code(), Some(1));
    let not_hermitian = quorbit(&["check"], Some("{\"rho\":[[[0.5,0],[0.3,0]],[[0,0],[0.5,0]]]}\n"));
    assert_eq!(not_hermitian.status.code(), Some(1));
}

#[test]
fn param_round_trip_recovers_the_spectrum() {
    let spectrum = [0.4, 0.3, 0.2, 0.1];
    let fwd = quorbit(&["param", "--N", "4", "--spectrum", "0.4,0.3,0.2,0.1"], None);
    assert_eq!(fwd.status.code(), Some(0));
    let v = &json_lines(&fwd)[0];
    assert_eq!(v["convention"], "polar-last-phi3");
    let r = v["r"].as_f64().unwrap();
    let angles = floats(&v["angles"]);
    assert_eq!(angles.len(), 2);

    let r_arg = format!("{r}");
    let angle_arg = angles.iter().map(|a| format!("{a}")).collect::<Vec<_>>().join(",");
    let inv = quorbit(&["param", "--inverse", "--N", "4", "--r", &r_arg, "--angles", &angle_arg], None);
    assert_eq!(inv.status.code(), Some(0));
    let back = &json_lines(&inv)[0];
    assert_eq!(back["ordered"], true);
    for (got, want) in floats(&back["spectrum"]).iter().zip(spectrum) {
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }

    let csv = quorbit(&["param", "--csv", "--spectrum", "0.4,0.3,0.2,0.1"], None);
    let (header, rows) = csv_rows(&csv);
    assert_eq!(header, ["convention", "N", "r", "angle1", "angle2"]);
    assert_eq!(rows[0][2].parse::<f64>().unwrap(), r);
}

#[test]
fn invariants_match_power_sums_of_the_spectrum() {
    let spec = [0.5, 0.3, 0.2];
    let out = quorbit(&["invariants", "--spectrum", "0.5,0.3,0.2"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    let t = floats(&v["t"]);
    for (k, tk) in t.iter().enumerate() {
        let p: f64 = spec.iter().map(|x: &f64| x.powi(k as i32 + 1)).sum();
        assert!((tk - p).abs() < 1e-14);
    }
    let mut vdm = 1.0;
    for i in 0..3 {
        for j in i + 1..3 {
            vdm *= (spec[i] - spec[j]) * (spec[i] - spec[j]);
        }
    }
    assert!((v["disc"].as_f64().unwrap() - vdm).abs() < 1e-14);
    assert_eq!(v["bezoutian_rank"], 3);
    let c2 = v["casimirs"]["c2"].as_f64().unwrap();
    // t₂ = (1 + c₂)/N
    assert!((t[1] - (1.0 + c2) / 3.0).abs() < 1e-14);
}

#[test]
fn boundary_reports_nested_qubit() {
    let out = quorbit(&["boundary", "--spectrum", "0.75,0.25,0"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["label"], "O123");
    assert_eq!(v["rank"], 2);
    assert_eq!(v["effective"]["kind"], "qubit-in-qutrit");
    // the qubit (3/4, 1/4) has Bloch radius 1/2
    assert!((v["effective"]["radius"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}

/// Andrew's monotone chain.
fn hull_area(mut pts: Vec<(f64, f64)>) -> f64 {
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(f64, f64)>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    let n = hull.len();
    0.5 * (0..n).map(|i| cross((0.0, 0.0), hull[i], hull[(i + 1) % n])).sum::<f64>().abs()
}

#[test]
fn qutrit_triangle_hull_is_the_ordered_triangle() {
    let out = quorbit(&["figure", "--name", "qutrit-triangle", "--samples", "10000", "--seed", "1"], None);
    assert_eq!(out.status.code(), Some(0));
    let (header, rows) = csv_rows(&out);
    assert_eq!(header, ["convention", "r", "phi", "I3", "I8"]);
    assert_eq!(rows.len(), 10000);
    let s3 = 3f64.sqrt();
    // ordered spectra (1,0,0), (½,½,0), (⅓,⅓,⅓) map to these corners
    let corners = [(s3 / 2.0, 0.5), (0.0, 0.5), (0.0, 0.0)];
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|row| {
            assert_eq!(row[0], "polar-last-phi3");
            (row[3].parse().unwrap(), row[4].parse().unwrap())
        })
        .collect();
    for &(x, y) in &pts {
        assert!(x >= -1e-9 && x <= s3 / 2.0 + 1e-9 && y <= 0.5 + 1e-9 && y >= x / s3 - 1e-9, "({x}, {y})");
    }
    for c in corners {
        let near = pts.iter().map(|p| ((p.0 - c.0).powi(2) + (p.1 - c.1).powi(2)).sqrt()).fold(f64::INFINITY, f64::min);
        assert!(near < 0.05, "corner {c:?} nearest sample at {near}");
    }
    let triangle = 0.5 * (s3 / 2.0) * 0.5;
    let area = hull_area(pts);
    assert!(area <= triangle * (1.0 + 1e-9) && area > 0.97 * triangle, "hull {area} vs {triangle}");
}

#[test]
fn figures_carry_headers_and_the_convention() {
    for name in ["qutrit-arcs", "qutrit-rank2", "quatrit-slice"] {
        let out = quorbit(&["figure", "--name", name, "--samples", "50"], None);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let (header, rows) = csv_rows(&out);
        assert_eq!(header[0], "convention");
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r[0] == "polar-last-phi3"));
    }
    let (header, rows) = csv_rows(&quorbit(&["figure", "--name", "quatrit-slice", "--samples", "200"], None));
    assert_eq!(header, ["convention", "I3", "I8", "I15"]);
    for row in rows {
        assert!((row[3].parse::<f64>().unwrap() - 1.0 / 3.0).abs() < 1e-12);
    }
    let (_, rows) = csv_rows(&quorbit(&["figure", "--name", "qutrit-rank2", "--samples", "40"], None));
    for row in rows {
        assert!(row[5].parse::<f64>().unwrap().abs() < 1e-12);
    }
    let poly = quorbit(&["figure", "--name", "quatrit-polyhedron", "--r", "0.2,0.45,0.8"], None);
    let v = &json_lines(&poly)[0];
    assert_eq!(v["convention"], "polar-last-phi3");
    let counts: Vec<usize> =
        v["polyhedra"].as_array().unwrap().iter().map(|p| p["vertices"].as_array().unwrap().len()).collect();
    assert_eq!(counts, [3, 4, 3]);
}

#[test]
fn seeded_output_is_bit_stable() {
    let args = ["sample", "--N", "3", "--count", "20", "--seed", "9"];
    let a = quorbit(&args, None);
    let b = quorbit(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = quorbit(&["sample", "--N", "3", "--count", "20", "--seed", "10"], None);
    assert_ne!(a.stdout, c.stdout);

    let rejection = ["sample", "--N", "2", "--count", "5", "--mode", "bloch-rejection", "--seed", "4", "--csv"];
    assert_eq!(quorbit(&rejection, None).stdout, quorbit(&rejection, None).stdout);

    let fig = ["figure", "--name", "qutrit-triangle", "--samples", "300", "--seed", "2"];
    assert_eq!(quorbit(&fig, None).stdout, quorbit(&fig, None).stdout);
}

#[test]
fn sampled_states_pass_check() {
    let out = quorbit(&["sample", "--N", "4", "--count", "25", "--seed", "5"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 25);
    let checked = quorbit(&["check", "--N", "4"], Some(&text));
    assert_eq!(checked.status.code(), Some(0));
    assert!(json_lines(&checked).iter().all(|v| v["is_state"] == true));

    let matrices = quorbit(&["sample", "--N", "3", "--count", "5", "--matrix"], None);
    let checked = quorbit(&["check"], Some(&String::from_utf8(matrices.stdout).unwrap()));
    assert_eq!(checked.status.code(), Some(0));
}

#[test]
fn out_flag_writes_the_same_bytes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tensors.csv");
    let args = ["tensors", "--N", "3", "--csv"];
    let direct = quorbit(&args, None);
    let to_file = quorbit(&[&args[..], &["--out", path.to_str().unwrap()]].concat(), None);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn basis_and_tensors_use_one_based_indices() {
    let v = &json_lines(&quorbit(&["tensors", "--N", "3"], None))[0];
    let d = v["d"].as_array().unwrap();
    let d888 = d.iter().find(|e| e["i"] == 8 && e["j"] == 8 && e["k"] == 8).unwrap();
    assert!((d888["value"].as_f64().unwrap() + 1.0 / 3f64.sqrt()).abs() < 1e-12);
    let f123 = v["f"].as_array().unwrap().iter().find(|e| e["i"] == 1 && e["j"] == 2 && e["k"] == 3).unwrap();
    assert!((f123["value"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let b = &json_lines(&quorbit(&["basis", "--N", "3"], None))[0];
    let els = b["elements"].as_array().unwrap();
    assert_eq!(els.len(), 8);
    let cartan: Vec<u64> = els.iter().filter(|e| e["cartan"] == true).map(|e| e["index"].as_u64().unwrap()).collect();
    assert_eq!(cartan, [3, 8]);
}
