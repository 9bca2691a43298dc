//! The files under `data/` are generated from the library constructors.
//! `data_files_match_their_constructors` guards against drift; the ignored
//! `regenerate_data_files` test rewrites them after intentional changes:
//!
//! ```text
//! cargo test -p solvmfd-cli --test data_files -- --ignored
//! ```

use serde_json::Value;
use solvmfd_core::algebra::{catalog_entry, GroupKind};
use solvmfd_core::complex_structure::AlmostComplexStructure;
use solvmfd_core::kernel::{rat, Mat, Rational};
use solvmfd_core::lattice::{example1_iwasawa, example2, example3};
use std::path::PathBuf;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

/// The almost complex structure pairing X with X' but crossing the carrier
/// planes (Y with Z, Y' with Z'), which fails integrability on the solvable
/// real form.
fn crossed_j() -> AlmostComplexStructure {
    let mut mat = Mat::<Rational>::zeros(6, 6);
    for (from, to) in [(0usize, 1usize), (2, 4), (3, 5)] {
        mat[(to, from)] = rat(1, 1);
        mat[(from, to)] = rat(-1, 1);
    }
    AlmostComplexStructure::new(mat).unwrap()
}

fn expected_files() -> Vec<(&'static str, Value)> {
    let solvable = catalog_entry(GroupKind::Solvable);
    vec![
        (
            "iwasawa.json",
            serde_json::to_value(example1_iwasawa()).unwrap(),
        ),
        (
            "example2.json",
            serde_json::to_value(example2().unwrap()).unwrap(),
        ),
        ("example3.json", serde_json::to_value(example3()).unwrap()),
        (
            "realform3.json",
            serde_json::to_value(&solvable.real_form).unwrap(),
        ),
        (
            "j0.json",
            serde_json::to_value(AlmostComplexStructure::standard(6)).unwrap(),
        ),
        ("noninteg_j.json", serde_json::to_value(crossed_j()).unwrap()),
    ]
}

#[test]
fn data_files_match_their_constructors() {
    for (name, expected) in expected_files() {
        let path = data_dir().join(name);
        let bytes = std::fs::read(&path)
            .unwrap_or_else(|e| panic!("{} unreadable ({e}), run the regen test", path.display()));
        let on_disk: Value = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(on_disk, expected, "{name} drifted from its constructor");
    }
}

#[test]
fn shipped_lattice_specs_verify() {
    use solvmfd_core::lattice::{classify, LatticeSpec, SolvmanifoldType};
    let cases = [
        ("iwasawa.json", SolvmanifoldType::Type2),
        ("example2.json", SolvmanifoldType::Type3a),
        ("example3.json", SolvmanifoldType::Type3b),
    ];
    for (name, expected) in cases {
        let bytes = std::fs::read(data_dir().join(name)).unwrap();
        let spec: LatticeSpec = serde_json::from_slice(&bytes).unwrap();
        let kind = classify(&spec, solvmfd_core::tol::DEFAULT_TOL).unwrap();
        assert_eq!(kind, expected, "{name}");
    }
}

#[test]
#[ignore = "rewrites the data directory"]
fn regenerate_data_files() {
    let dir = data_dir();
    std::fs::create_dir_all(&dir).unwrap();
    for (name, value) in expected_files() {
        let mut bytes = serde_json::to_vec_pretty(&value).unwrap();
        bytes.push(b'\n');
        std::fs::write(dir.join(name), bytes).unwrap();
    }
}
