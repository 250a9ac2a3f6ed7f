//! Every JSON document the binary emits must parse back into the typed
//! structs in `k3nef_cli::output` with nothing left over, and the
//! payload values must survive the trip.

use std::process::Command;

use k3nef_cli::output::*;

fn json_out(args: &[&str]) -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_k3nef"))
        .args(args)
        .args(["--format", "json"])
        .output()
        .expect("binary runs");
    (
        out.status.code(),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
    )
}

/// Parses the document and asserts that serializing it back reproduces
/// the bytes exactly (every field accounted for, order preserved).
fn parse<T: serde::de::DeserializeOwned + serde::Serialize>(s: &str) -> OutputDocument<T> {
    let doc: OutputDocument<T> =
        serde_json::from_str(s).expect("document parses into typed structs");
    let reserialized = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    assert_eq!(reserialized, s);
    doc
}

#[test]
fn surface_roundtrip() {
    for case in ["I", "II", "III"] {
        let k = if case == "III" { "3" } else { "2" };
        let (code, s) = json_out(&["surface", "--case", case, "--k", k]);
        assert_eq!(code, Some(0));
        let doc: OutputDocument<SurfacePayload> = parse(&s);
        assert_eq!(doc.schema_version, SCHEMA_VERSION);
        assert_eq!(doc.request.command, "surface");
        let p = doc.payload.expect("payload");
        assert!(doc.error.is_none());
        assert_eq!(p.case, case);
        assert!(p.nef_matches_closed_form);
        assert_eq!(p.nef_generators.len(), p.nef_cone.rays.len());
        // Serializing the parsed document reproduces the bytes.
    }
}

#[test]
fn hilb_nef_roundtrip() {
    let (code, s) = json_out(&["hilb-nef", "--case", "II", "--k", "2", "--n", "3"]);
    assert_eq!(code, Some(0));
    let doc: OutputDocument<HilbNefPayload> = parse(&s);
    let p = doc.payload.expect("payload");
    assert_eq!((p.k, p.n), (2, 3));
    assert_eq!(p.min_threshold_n, 3);
    assert_eq!(
        p.nef_cone.rays,
        vec![vec![0, 1, 0], vec![1, 1, 0], vec![3, 5, -2]]
    );
}

#[test]
fn mori_roundtrip() {
    let (code, s) = json_out(&["mori", "--case", "I", "--k", "2", "--n", "3"]);
    assert_eq!(code, Some(0));
    let doc: OutputDocument<MoriPayload> = parse(&s);
    let p = doc.payload.expect("payload");
    assert_eq!(p.curves.len(), 3);
    assert_eq!(p.curves[2].kind, "contracted");
    assert_eq!(p.curves[2].functional, vec!["0/1", "0/1", "-1/1"]);
    assert!(p.curves[0].class.is_some());
}

#[test]
fn lambda_roundtrip() {
    let (code, s) = json_out(&["lambda", "--case", "I", "--k", "3", "--n", "2"]);
    assert_eq!(code, Some(0));
    let doc: OutputDocument<LambdaPayload> = parse(&s);
    let p = doc.payload.expect("payload");
    assert_eq!(p.method, "closed_form");
    assert_eq!(p.matches_closed_form, Some(true));
    assert_eq!(
        p.lambda_cone.rays,
        vec![vec![0, 1, 0], vec![1, 0, 0], vec![2, 2, -3]]
    );

    let (code, s) = json_out(&["lambda", "--case", "III", "--k", "3", "--n", "4"]);
    assert_eq!(code, Some(0));
    let doc: OutputDocument<LambdaPayload> = parse(&s);
    let p = doc.payload.expect("payload");
    assert_eq!(p.method, "computed");
    assert_eq!(p.matches_closed_form, None);
    assert_eq!(
        p.lambda_cone.rays,
        vec![vec![2, 3, 0], vec![3, 2, 0], vec![3, 3, -1]]
    );
}

#[test]
fn walls_roundtrip() {
    let (code, s) = json_out(&["walls", "--case", "I", "--k", "2", "--n", "3"]);
    assert_eq!(code, Some(0));
    let doc: OutputDocument<WallsPayload> = parse(&s);
    let p = doc.payload.expect("payload");
    assert_eq!(p.candidates.len(), 3);
    assert_eq!(p.chosen.center, "-1/1");
    assert_eq!(p.chosen.radius_sq, "3/1");
    assert_eq!(p.varrho, "3/4");
    assert!(p.certified);
    assert_eq!(p.vertical_s, "2/1");
    assert_eq!(p.nef_ray, vec![3, 3, -2]);
    assert!(p.svg_path.is_none());
}

#[test]
fn bounds_roundtrip() {
    let (code, s) = json_out(&["bounds", "--case", "I", "--k", "8", "--n", "2"]);
    assert_eq!(code, Some(0));
    let doc: OutputDocument<BoundsPayload> = parse(&s);
    assert_eq!(doc.request.search_bound, Some(10));
    let p = doc.payload.expect("payload");
    assert_eq!(p.n_prime, 9);
    assert_eq!(p.j, 7);
    assert!(p.knutsen.ok);
    assert_eq!(
        p.improved.as_ref().expect("k >= 2n").rays,
        vec![vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, -1]]
    );
    assert!(p.exact.is_none());
}

#[test]
fn nested_roundtrip() {
    let (code, s) = json_out(&["nested", "--case", "I", "--k", "2", "--n", "3"]);
    assert_eq!(code, Some(0));
    let doc: OutputDocument<NestedPayload> = parse(&s);
    let p = doc.payload.expect("payload");
    assert_eq!(p.printed_table.len(), 8);
    assert_eq!(p.columns.len(), 9);
    assert_eq!(p.generators.len(), 6);
    assert_eq!(p.pairings.len(), 6);
    assert_eq!(
        p.diff_flags,
        vec![DiffFlagDoc {
            curve: "C0b".to_string(),
            column: "w2_diff".to_string()
        }]
    );
    assert!(p.ok);
}

#[test]
fn special_roundtrip() {
    let (code, s) = json_out(&["special-n2k2"]);
    assert_eq!(code, Some(0));
    let doc: OutputDocument<SpecialPayload> = parse(&s);
    let p = doc.payload.expect("payload");
    assert_eq!(p.brill_noether_rho, -1);
    assert!(p.qprime.discrepant);
    assert_eq!(p.orthogonality_zero_for_k, (2..=10).collect::<Vec<_>>());
    assert_eq!(p.gamma.corollary.samples.len(), 5);
    let ampness: Vec<bool> = p.gamma.corollary.samples.iter().map(|x| x.ample).collect();
    assert_eq!(ampness, vec![true, true, true, false, false]);
}

#[test]
fn error_document_roundtrip() {
    let (code, s) = json_out(&["walls", "--case", "I", "--k", "9", "--n", "9"]);
    assert_eq!(code, Some(2));
    let doc: OutputDocument<WallsPayload> = parse(&s);
    assert!(doc.payload.is_none());
    let err = doc.error.expect("error document");
    assert!(!err.code.is_empty());
    assert!(err.hypothesis.is_some());
}
