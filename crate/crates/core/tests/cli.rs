// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! End-to-end tests of the `kwl` binary on small TU-format fixtures.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use kwl::io::read_gram_libsvm;

fn kwl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kwl"))
        .args(args)
        .output()
        .unwrap()
}

/// Two disjoint unlabeled triangles as a two-graph dataset.
fn two_triangles(dir: &Path) {
    let w =
        |suffix: &str, body: &str| fs::write(dir.join(format!("TRI_{suffix}.txt")), body).unwrap();
    w("A", "1, 2\n2, 3\n3, 1\n4, 5\n5, 6\n6, 4\n");
    w("graph_indicator", "1\n1\n1\n2\n2\n2\n");
    w("graph_labels", "1\n-1\n");
}

#[test]
fn gram_of_identical_graphs_is_all_ones() {
    let dir = tempfile::tempdir().unwrap();
    two_triangles(dir.path());
    let out = dir.path().join("k.txt");
    for kernel in ["wl1", "kwl-local", "kwl-global"] {
        let o = kwl(&[
            "gram",
            "--dataset",
            dir.path().to_str().unwrap(),
            "--name",
            "TRI",
            "--kernel",
            kernel,
            "--h",
            "2",
            "--gram-normalize",
            "--output",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let (k, classes) = read_gram_libsvm(&out).unwrap();
        assert_eq!(classes, vec![1, -1]);
        assert!((0..2).all(|i| k.row(i) == [1.0, 1.0]), "{kernel}");
        assert_eq!(
            fs::read_to_string(&out).unwrap(),
            "1 0:1 1:1 2:1\n-1 0:2 1:1 2:1\n"
        );
    }
    let manifest = fs::read_to_string(dir.path().join("k.txt.manifest.json")).unwrap();
    let json: serde_json::Value = serde_json::from_str(&manifest).unwrap();
    assert_eq!(json["config"]["kernel"], "kwl-global");
    assert_eq!(json["graphs"], 2);
}

#[test]
fn features_and_sweep() {
    let dir = tempfile::tempdir().unwrap();
    two_triangles(dir.path());
    let out = dir.path().join("f.txt");
    let o = kwl(&[
        "features",
        "--dataset",
        dir.path().to_str().unwrap(),
        "--name",
        "TRI",
        "--h",
        "1",
        "--h-sweep",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let h0 = fs::read_to_string(dir.path().join("f-h0.txt")).unwrap();
    let h1 = fs::read_to_string(dir.path().join("f-h1.txt")).unwrap();
    assert_eq!(h0, "1 1:3\n-1 1:3\n");
    assert_eq!(h1, "1 1:3 3:3\n-1 1:3 3:3\n");
}

#[test]
fn info_and_sample_size() {
    let dir = tempfile::tempdir().unwrap();
    two_triangles(dir.path());
    let o = kwl(&[
        "info",
        "--dataset",
        dir.path().to_str().unwrap(),
        "--name",
        "TRI",
    ]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(
        text.contains("graphs: 2\n") && text.contains("avg edges: 3.00\n"),
        "{text}"
    );

    let o = kwl(&[
        "sample-size",
        "--epsilon",
        "0.1",
        "--delta",
        "0.1",
        "--gamma",
        "10",
    ]);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "26492\n");
    let o = kwl(&[
        "sample-size",
        "--epsilon",
        "0.1",
        "--delta",
        "0.1",
        "--gamma",
        "10",
        "--graphs",
        "100",
    ]);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "49518\n");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    two_triangles(dir.path());
    let d = dir.path().to_str().unwrap();
    let out = dir.path().join("x").to_str().unwrap().to_owned();

    // Usage and parameter errors.
    assert_eq!(kwl(&["gram"]).status.code(), Some(1));
    assert_eq!(
        kwl(&[
            "gram",
            "--dataset",
            d,
            "--name",
            "TRI",
            "--mode",
            "sampled",
            "--output",
            &out
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        kwl(&[
            "sample-size",
            "--epsilon",
            "2",
            "--delta",
            "0.1",
            "--gamma",
            "10"
        ])
        .status
        .code(),
        Some(1)
    );
    // Data errors.
    assert_eq!(
        kwl(&["info", "--dataset", d, "--name", "MISSING"])
            .status
            .code(),
        Some(2)
    );
    fs::write(dir.path().join("TRI_A.txt"), "1, 4\n").unwrap();
    let o = kwl(&["info", "--dataset", d, "--name", "TRI"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr)
        .contains("TRI_A.txt:1: edge (1, 4) joins graphs 1 and 2"));
    // Resource errors.
    two_triangles(dir.path());
    let o = kwl(&[
        "gram",
        "--dataset",
        d,
        "--name",
        "TRI",
        "--kernel",
        "kwl-local",
        "--max-ksets",
        "2",
        "--output",
        &out,
    ]);
    assert_eq!(o.status.code(), Some(3));
}
