//! One function per subcommand, each returning a [`RunReport`].

use crate::report::{DigestBuilder, RunReport};
use anyhow::{bail, Context};
use num::complex::Complex64;
use num::Zero;
use rand::SeedableRng;
use serde_json::{json, Value};
use solvmfd_core::algebra::{catalog, LieAlgebra};
use solvmfd_core::cohomology::h1_report;
use solvmfd_core::complex_structure::{
    h_from_j, is_integrable, is_subalgebra, j_from_subspace, nijenhuis, AlmostComplexStructure,
};
use solvmfd_core::frames::{
    bracket_matrix, intertwining_residual, lemma2_verify, random_valid_frame, spectrum_2x2,
    FramePair,
};
use solvmfd_core::kernel::Mat;
use solvmfd_core::lattice::{
    classify, verify_lattice_abelian, verify_lattice_nil, verify_lattice_solv, LatticeSpec,
};
use solvmfd_core::pseudokahler::pseudo_kahler_report;
use std::path::Path;

/// Reads a file and parses it as JSON into `T`, keeping the raw bytes for
/// the digest.
fn load<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<(T, Vec<u8>)> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let value = serde_json::from_slice(&bytes)
        .with_context(|| format!("parsing {}", path.display()))?;
    Ok((value, bytes))
}

/// Labels the real-form basis for human-facing output.
const REAL_LABELS: [&str; 6] = ["X", "X'", "Y", "Y'", "Z", "Z'"];
const COMPLEX_LABELS: [&str; 3] = ["X", "Y", "Z"];

pub fn catalog_cmd() -> anyhow::Result<RunReport> {
    let mut entries = Vec::new();
    let mut pass = true;
    for entry in catalog() {
        let g = &entry.complex_algebra;
        let r = &entry.real_form;
        let structural_ok = g.jacobi_holds()
            && r.jacobi_holds()
            && g.is_unimodular()
            && r.is_unimodular()
            && g.is_solvable();
        pass &= structural_ok;
        entries.push(json!({
            "kind": entry.kind,
            "complex_algebra": g,
            "complex_basis_labels": COMPLEX_LABELS,
            "real_form": r,
            "real_basis_labels": REAL_LABELS,
            "nilradical_indices": entry.nilradical_indices,
            "derived_series_dims": g.derived_series_dims(),
            "lower_central_series_dims": g.lower_central_series_dims(),
            "nilpotent": g.is_nilpotent(),
            "unimodular": g.is_unimodular(),
            "structural_ok": structural_ok,
        }));
    }
    let digest = DigestBuilder::new("catalog").finish();
    Ok(RunReport {
        command: "catalog".into(),
        inputs_digest: digest,
        pass,
        results: json!({ "entries": entries }),
    })
}

pub fn integrable_cmd(algebra_path: &Path, j_path: &Path) -> anyhow::Result<RunReport> {
    let (g, g_bytes): (LieAlgebra, _) = load(algebra_path)?;
    let (j, j_bytes): (AlmostComplexStructure, _) = load(j_path)?;
    if g.dim() != j.dim() {
        bail!(solvmfd_core::CoreError::Dimension(format!(
            "algebra has dimension {} but J acts on dimension {}",
            g.dim(),
            j.dim()
        )));
    }

    let integrable = is_integrable(&g, &j);
    let h = h_from_j(&j);
    let eigenspace_is_subalgebra = is_subalgebra(&g, &h);
    let agreement = integrable == eigenspace_is_subalgebra;

    let witness = if integrable {
        Value::Null
    } else {
        let mut found = Value::Null;
        'outer: for a in 0..g.dim() {
            for b in (a + 1)..g.dim() {
                let n = nijenhuis(&g, &j, &g.basis_vector(a), &g.basis_vector(b));
                if n.iter().any(|c| !c.is_zero()) {
                    let tensor: Vec<String> = n.iter().map(|c| c.to_string()).collect();
                    found = json!({ "pair": [a, b], "tensor": tensor });
                    break 'outer;
                }
            }
        }
        found
    };

    let roundtrip_exact = if integrable {
        let back = j_from_subspace(g.dim(), &h)?;
        Value::Bool(back == j)
    } else {
        Value::Null
    };

    let pass = integrable && agreement && roundtrip_exact == Value::Bool(true);
    let mut digest = DigestBuilder::new("integrable");
    digest.file("algebra", &g_bytes).file("j", &j_bytes);
    Ok(RunReport {
        command: "integrable".into(),
        inputs_digest: digest.finish(),
        pass,
        results: json!({
            "integrable": integrable,
            "eigenspace_is_subalgebra": eigenspace_is_subalgebra,
            "tests_agree": agreement,
            "witness": witness,
            "roundtrip_exact": roundtrip_exact,
        }),
    })
}

/// Runs the verifier matching the lattice kind, returning the serialized report
/// and its validity flag.
fn verify_any(spec: &LatticeSpec, tol: f64) -> anyhow::Result<(Value, bool)> {
    Ok(match spec {
        LatticeSpec::Abelian(s) => {
            let r = verify_lattice_abelian(s, tol)?;
            (serde_json::to_value(&r)?, r.valid)
        }
        LatticeSpec::Nilpotent(s) => {
            let r = verify_lattice_nil(s, tol)?;
            (serde_json::to_value(&r)?, r.valid)
        }
        LatticeSpec::Solvable(s) => {
            let r = verify_lattice_solv(s, tol)?;
            (serde_json::to_value(&r)?, r.valid)
        }
    })
}

pub fn lattice_cmd(spec_path: &Path, tol: f64) -> anyhow::Result<RunReport> {
    let (spec, bytes): (LatticeSpec, _) = load(spec_path)?;
    let (verification, valid) = verify_any(&spec, tol)?;

    let mut results = serde_json::Map::new();
    results.insert("group_kind".into(), serde_json::to_value(spec.group_kind())?);
    results.insert("verification".into(), verification);
    if valid {
        let kind = classify(&spec, tol)?;
        results.insert("classification".into(), serde_json::to_value(kind)?);
        results.insert(
            "h1".into(),
            serde_json::to_value(h1_report(&spec, tol)?)?,
        );
        results.insert(
            "pseudo_kahler".into(),
            serde_json::to_value(pseudo_kahler_report(&spec, tol)?)?,
        );
    }

    let mut digest = DigestBuilder::new("lattice");
    digest.arg("tol", format!("{tol:e}")).file("spec", &bytes);
    Ok(RunReport {
        command: "lattice".into(),
        inputs_digest: digest.finish(),
        pass: valid,
        results: Value::Object(results),
    })
}

pub fn h1_cmd(spec_path: &Path, tol: f64) -> anyhow::Result<RunReport> {
    let (spec, bytes): (LatticeSpec, _) = load(spec_path)?;
    let report = h1_report(&spec, tol)?;
    let mut digest = DigestBuilder::new("h1");
    digest.arg("tol", format!("{tol:e}")).file("spec", &bytes);
    Ok(RunReport {
        command: "h1".into(),
        inputs_digest: digest.finish(),
        pass: true,
        results: serde_json::to_value(&report)?,
    })
}

pub fn pseudokahler_cmd(spec_path: &Path, tol: f64) -> anyhow::Result<RunReport> {
    let (spec, bytes): (LatticeSpec, _) = load(spec_path)?;
    let report = pseudo_kahler_report(&spec, tol)?;
    let mut digest = DigestBuilder::new("pseudokahler");
    digest.arg("tol", format!("{tol:e}")).file("spec", &bytes);
    Ok(RunReport {
        command: "pseudokahler".into(),
        inputs_digest: digest.finish(),
        pass: report.exists,
        results: serde_json::to_value(&report)?,
    })
}

/// Parses a rectangular matrix of the given shape from nested JSON arrays.
fn matrix_from_json(raw: &[Vec<f64>], rows: usize, cols: usize, name: &str) -> anyhow::Result<Mat<f64>> {
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        bail!(solvmfd_core::CoreError::Dimension(format!(
            "{name} must be a {rows}x{cols} matrix"
        )));
    }
    Ok(Mat::from_rows(raw.to_vec()))
}

/// The full per-frame record checked by the lemma2 subcommand.
fn frame_record(g: &LieAlgebra, frame: &FramePair, tol: f64) -> anyhow::Result<(Value, bool)> {
    let report = lemma2_verify(g, frame, tol)?;
    let a = bracket_matrix(g, frame, tol)?;
    let spectrum = spectrum_2x2(&a);
    let residual = intertwining_residual(frame, &a);
    let frame_pass = report.q_symmetric
        && report.trace_nonzero
        && report.eigenvalues_match
        && report.conjugator.is_some()
        && residual <= 1e-8;
    let c_pair = |c: &Complex64| vec![c.re, c.im];
    let record = json!({
        "report": report,
        "bracket_matrix": [
            [c_pair(&a[(0, 0)]), c_pair(&a[(0, 1)])],
            [c_pair(&a[(1, 0)]), c_pair(&a[(1, 1)])],
        ],
        "spectrum": [c_pair(&spectrum[0]), c_pair(&spectrum[1])],
        "intertwining_residual": residual,
    });
    Ok((record, frame_pass))
}

pub enum Lemma2Input<'a> {
    Files { q: &'a Path, p: &'a Path },
    Random { count: usize, seed: u64 },
}

pub fn lemma2_cmd(input: Lemma2Input<'_>, tol: f64) -> anyhow::Result<RunReport> {
    let g = solvmfd_core::algebra::catalog_entry(solvmfd_core::algebra::GroupKind::Solvable)
        .real_form;
    let mut digest = DigestBuilder::new("lemma2");
    digest.arg("tol", format!("{tol:e}"));

    let (results, pass) = match input {
        Lemma2Input::Files { q, p } => {
            let (q_raw, q_bytes): (Vec<Vec<f64>>, _) = load(q)?;
            let (p_raw, p_bytes): (Vec<Vec<f64>>, _) = load(p)?;
            digest.file("q", &q_bytes).file("p", &p_bytes);
            let frame = FramePair::new(
                matrix_from_json(&q_raw, 2, 2, "q")?,
                matrix_from_json(&p_raw, 4, 4, "p")?,
            )?;
            let (record, frame_pass) = frame_record(&g, &frame, tol)?;
            (json!({ "frame": record }), frame_pass)
        }
        Lemma2Input::Random { count, seed } => {
            digest.arg("count", count).arg("seed", seed);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut failures = Vec::new();
            let mut worst_residual = 0.0f64;
            for i in 0..count {
                let frame = random_valid_frame(&mut rng);
                let (record, frame_pass) = frame_record(&g, &frame, tol)?;
                let residual = record["intertwining_residual"].as_f64().unwrap_or(f64::NAN);
                worst_residual = worst_residual.max(residual);
                if !frame_pass {
                    failures.push(json!({ "index": i, "record": record }));
                }
            }
            let all_pass = failures.is_empty();
            (
                json!({
                    "checked": count,
                    "seed": seed,
                    "worst_intertwining_residual": worst_residual,
                    "failures": failures,
                }),
                all_pass,
            )
        }
    };

    Ok(RunReport {
        command: "lemma2".into(),
        inputs_digest: digest.finish(),
        pass,
        results,
    })
}
