//! End-to-end acceptance gate: eight criteria spanning the whole crate, one
//! printed pass/fail line each.
//!
//! Every criterion runs even when an earlier one fails, so the summary always
//! covers all eight lines. Run with `--nocapture` to see them on success too.

use std::panic::{catch_unwind, AssertUnwindSafe};

use num::complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solvmfd_core::algebra::{catalog, catalog_entry, GroupKind, LieAlgebra};
use solvmfd_core::cohomology::{dim_w, dim_w_shortcut, h1_report};
use solvmfd_core::complex_structure::{
    h_from_j, is_integrable, is_subalgebra, j_from_subspace, random_conjugate_j,
};
use solvmfd_core::frames::{
    bracket_matrix, intertwining_residual, random_valid_frame, s_operator, spectrum_2x2, FramePair,
};
use solvmfd_core::kernel::{poly_roots, rat, IntPolynomial, Mat, Rational};
use solvmfd_core::lattice::{
    example1_iwasawa, example2, example2_char_poly, example3, example_abelian, group_identity,
    group_inverse, group_mul, random_type3a_spec, random_type3b_spec, verify_lattice_nil,
    verify_lattice_solv, GroupElement, LatticeSpec, SolvmanifoldType,
};
use solvmfd_core::pseudokahler::pseudo_kahler_report;
use solvmfd_core::tol::DEFAULT_TOL;

fn some_root_near(roots: &[Complex64], target: Complex64, tol: f64) -> bool {
    roots.iter().any(|r| (r - target).norm() <= tol)
}

/// The second solvable example has character polynomial
/// `t^4 - t^3 + 3t^2 - t + 1`, exactly, and its roots come in non-real
/// inverse-conjugate quadruples.
fn criterion_1() {
    let p = example2_char_poly();
    let expected = IntPolynomial::from_i64(&[1, -1, 3, -1, 1]);
    assert_eq!(
        p.coeffs(),
        expected.coeffs(),
        "character polynomial differs from t^4 - t^3 + 3t^2 - t + 1"
    );
    assert!(p.is_reciprocal(), "coefficients are not palindromic");

    let roots = poly_roots(&p, DEFAULT_TOL).expect("root finding failed");
    assert_eq!(roots.len(), 4);
    for r in &roots {
        assert!(
            r.im.abs() > 1e-8,
            "root {r} is real; the eigenvalues must avoid the real line"
        );
        assert!(
            some_root_near(&roots, r.inv(), 1e-8),
            "roots are not closed under inversion at {r}"
        );
        assert!(
            some_root_near(&roots, r.conj(), 1e-8),
            "roots are not closed under conjugation at {r}"
        );
    }
}

/// First Betti numbers of the four worked examples follow the
/// classification table, and the translation-action route for the extra
/// summand agrees with its eigenvalue shortcut on randomized solvable specs.
fn criterion_2() {
    let cases: [(LatticeSpec, SolvmanifoldType, usize, usize); 4] = [
        (example_abelian(), SolvmanifoldType::Type1, 3, 0),
        (example1_iwasawa(), SolvmanifoldType::Type2, 2, 0),
        (
            example2().expect("second example must build"),
            SolvmanifoldType::Type3a,
            1,
            0,
        ),
        (example3(), SolvmanifoldType::Type3b, 3, 2),
    ];
    for (spec, kind, h1, w) in &cases {
        let report = h1_report(spec, DEFAULT_TOL).expect("h1 report failed");
        assert_eq!(report.kind, *kind, "classification mismatch");
        assert_eq!(report.h1, *h1, "first Betti number mismatch for {kind}");
        assert_eq!(report.dim_w, *w, "extra summand mismatch for {kind}");
        assert_eq!(dim_w(spec, DEFAULT_TOL).unwrap(), *w);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..25 {
        let spec = random_type3a_spec(&mut rng).expect("random type3a spec must build");
        let full = dim_w(&spec, DEFAULT_TOL).expect("full route failed");
        assert_eq!(
            full,
            dim_w_shortcut(&spec),
            "routes disagree on randomized type3a spec {i}"
        );
    }
    for i in 0..25 {
        let spec = random_type3b_spec(&mut rng);
        let full = dim_w(&spec, DEFAULT_TOL).expect("full route failed");
        assert_eq!(
            full,
            dim_w_shortcut(&spec),
            "routes disagree on randomized type3b spec {i}"
        );
    }
}

/// Integrability of a random almost complex structure coincides with closure
/// of its eigenspace under the bracket, on all three real forms, and the
/// structure is recovered exactly from its eigenspace when integrable.
fn criterion_3() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0usize;
    let mut integrable_seen = 0usize;
    for entry in catalog() {
        let g = &entry.real_form;
        for i in 0..70 {
            let j = random_conjugate_j(6, &mut rng);
            let h = h_from_j(&j);
            let closed = is_subalgebra(g, &h);
            let integrable = is_integrable(g, &j);
            assert_eq!(
                integrable, closed,
                "tensor and eigenspace routes disagree on sample {i} of {:?}",
                entry.kind
            );
            if integrable {
                let back = j_from_subspace(6, &h).expect("roundtrip must build a structure");
                assert_eq!(back, j, "roundtrip through the eigenspace is not exact");
                integrable_seen += 1;
            }
            checked += 1;
        }
    }
    assert!(checked >= 200, "only {checked} samples checked");
    assert!(integrable_seen > 0, "no integrable samples were exercised");
}

/// Bracket matrices of random valid frames on the solvable real form have
/// spectrum `+-(trace q)/2` and satisfy the intertwining identity; the
/// identity frame produces `diag(-1, 1)` exactly.
fn criterion_4() {
    let g = catalog_entry(GroupKind::Solvable).real_form;

    let a = bracket_matrix(&g, &FramePair::identity(), DEFAULT_TOL).unwrap();
    let zero = Complex64::new(0.0, 0.0);
    assert_eq!(a[(0, 0)], Complex64::new(-1.0, 0.0));
    assert_eq!(a[(0, 1)], zero);
    assert_eq!(a[(1, 0)], zero);
    assert_eq!(a[(1, 1)], Complex64::new(1.0, 0.0));

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst_residual = 0.0f64;
    for i in 0..500 {
        let frame = random_valid_frame(&mut rng);
        let a = bracket_matrix(&g, &frame, DEFAULT_TOL)
            .unwrap_or_else(|e| panic!("frame {i} rejected: {e}"));
        let s = (frame.q[(0, 0)] + frame.q[(1, 1)]) / 2.0;
        let spectrum = spectrum_2x2(&a);
        let (lo, hi) = (-s.abs(), s.abs());
        assert!(
            (spectrum[0].re - lo).abs() <= 1e-8 && spectrum[0].im.abs() <= 1e-8,
            "frame {i}: lower eigenvalue {} is not {lo}",
            spectrum[0]
        );
        assert!(
            (spectrum[1].re - hi).abs() <= 1e-8 && spectrum[1].im.abs() <= 1e-8,
            "frame {i}: upper eigenvalue {} is not {hi}",
            spectrum[1]
        );
        let residual = intertwining_residual(&frame, &a);
        assert!(
            residual < 1e-8,
            "frame {i}: intertwining residual {residual} too large"
        );
        worst_residual = worst_residual.max(residual);
    }
    println!("  worst intertwining residual over 500 frames: {worst_residual:.3e}");
}

/// The averaged carrier operator is `diag(-1, -1, 1, 1)` in exact
/// arithmetic.
fn criterion_5() {
    let s = s_operator();
    let expected = Mat::from_fn(4, 4, |i, j| {
        if i == j {
            rat(if i < 2 { -1 } else { 1 }, 1)
        } else {
            rat(0, 1)
        }
    });
    assert_eq!(s, expected, "carrier operator is not diag(-1, -1, 1, 1)");
}

/// Pseudo-Kahler existence separates the two solvable examples: the standard
/// form fails to descend on the first and descends on the second, where it is
/// compatible, nondegenerate, and indefinite with inertia (4, 2, 0).
fn criterion_6() {
    let r2 = pseudo_kahler_report(&example2().unwrap(), DEFAULT_TOL).unwrap();
    assert!(!r2.exists, "the non-real-eigenvalue example admits no pseudo-Kahler structure");
    assert_eq!(r2.standard_form_invariant, Some(false));
    let worst = r2
        .standard_form_factors
        .iter()
        .map(|f| Complex64::new(f[0] - 1.0, f[1]).norm())
        .fold(0.0, f64::max);
    assert!(
        worst > 0.5,
        "pullback factors stay near 1 (worst deviation {worst}); descent should fail visibly"
    );

    let r3 = pseudo_kahler_report(&example3(), DEFAULT_TOL).unwrap();
    assert!(r3.exists);
    assert_eq!(r3.h1, 3);
    assert_eq!(r3.standard_form_invariant, Some(true));
    for f in &r3.standard_form_factors {
        let dev = Complex64::new(f[0] - 1.0, f[1]).norm();
        assert!(dev <= 1e-10, "pullback factor deviates by {dev}");
    }
    assert!(r3.compatible);
    assert!(r3.nondegenerate);
    assert!(r3.indefinite);
    assert_eq!(r3.signature, (4, 2, 0));
}

/// Lattice verification accepts the worked examples with every flag set, and
/// the nilpotent example is recognized as the Gaussian-integer closure.
fn criterion_7() {
    for (name, spec) in [("example2", example2().unwrap()), ("example3", example3())] {
        let LatticeSpec::Solvable(solv) = &spec else {
            panic!("{name} is not a solvable spec");
        };
        let r = verify_lattice_solv(solv, DEFAULT_TOL).unwrap();
        assert!(r.commute, "{name}: A and B do not commute");
        assert!(r.semisimple_a, "{name}: A is not semisimple");
        assert!(r.semisimple_b, "{name}: B is not semisimple");
        assert!(r.det_one, "{name}: determinant is not 1");
        assert!(r.eigen_relations_ok, "{name}: eigenvector relations fail");
        assert!(r.generators_independent, "{name}: generators are dependent over R");
        assert!(r.preserved_by_phi_lambda, "{name}: lattice not preserved by the first translation");
        assert!(r.preserved_by_phi_mu, "{name}: lattice not preserved by the second translation");
        assert!(r.lambda_mu_independent, "{name}: translations are dependent over R");
        assert!(r.mu_matches_delta, "{name}: exp(mu) does not reproduce delta");
        assert!(r.valid, "{name}: report is not valid");
    }

    let LatticeSpec::Nilpotent(nil) = example1_iwasawa() else {
        panic!("the Iwasawa example is not a nilpotent spec");
    };
    let r = verify_lattice_nil(&nil, DEFAULT_TOL).unwrap();
    assert!(r.valid, "Iwasawa lattice rejected");
    assert_eq!(r.mode, "gaussian_closure");
}

fn random_rational_vector(dim: usize, rng: &mut impl Rng) -> Vec<Rational> {
    (0..dim)
        .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
        .collect()
}

fn random_group_element(rng: &mut impl Rng) -> GroupElement {
    let mut c = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    GroupElement::new(c(), c(), c())
}

fn element_distance(a: &GroupElement, b: &GroupElement) -> f64 {
    (a.x - b.x)
        .norm()
        .max((a.y - b.y).norm())
        .max((a.z - b.z).norm())
}

fn check_algebra_structure(g: &LieAlgebra, rng: &mut impl Rng) {
    assert!(g.jacobi_holds(), "Jacobi identity fails");
    assert!(g.is_unimodular(), "algebra is not unimodular");
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let forward = g.bracket(&g.basis_vector(i), &g.basis_vector(j));
            let backward = g.bracket(&g.basis_vector(j), &g.basis_vector(i));
            for k in 0..g.dim() {
                assert_eq!(
                    forward[k],
                    -backward[k].clone(),
                    "antisymmetry fails at basis pair ({i}, {j})"
                );
            }
        }
    }
    for _ in 0..5 {
        let u = random_rational_vector(g.dim(), rng);
        let v = random_rational_vector(g.dim(), rng);
        let ad_u = g.ad_matrix(&u);
        let ad_v = g.ad_matrix(&v);
        let lhs = g.ad_matrix(&g.bracket(&u, &v));
        let rhs = ad_u.matmul(&ad_v).sub(&ad_v.matmul(&ad_u));
        assert_eq!(lhs, rhs, "ad is not a homomorphism on random vectors");
    }
}

/// Structure constants satisfy Jacobi, antisymmetry, and unimodularity in
/// exact arithmetic; ad is a Lie algebra homomorphism on random rational
/// vectors; the three group laws are associative and invert correctly.
fn criterion_8() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for entry in catalog() {
        check_algebra_structure(&entry.complex_algebra, &mut rng);
        check_algebra_structure(&entry.real_form, &mut rng);
    }

    for kind in [GroupKind::Abelian, GroupKind::Nilpotent, GroupKind::Solvable] {
        for i in 0..100 {
            let a = random_group_element(&mut rng);
            let b = random_group_element(&mut rng);
            let c = random_group_element(&mut rng);
            let left = group_mul(kind, &group_mul(kind, &a, &b), &c);
            let right = group_mul(kind, &a, &group_mul(kind, &b, &c));
            let gap = element_distance(&left, &right);
            assert!(
                gap <= 1e-10,
                "{kind:?} triple {i}: associativity gap {gap}"
            );
            let round = group_mul(kind, &a, &group_inverse(kind, &a));
            let gap = element_distance(&round, &group_identity());
            assert!(gap <= 1e-10, "{kind:?} element {i}: inverse gap {gap}");
        }
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn()); 8] = [
        (
            "reciprocal character polynomial with non-real roots",
            criterion_1,
        ),
        (
            "first Betti numbers follow the classification on both routes",
            criterion_2,
        ),
        (
            "integrability matches eigenspace closure with exact roundtrip",
            criterion_3,
        ),
        (
            "frame spectra are +-(trace q)/2 with small intertwining residual",
            criterion_4,
        ),
        ("carrier operator equals diag(-1, -1, 1, 1)", criterion_5),
        (
            "pseudo-Kahler existence separates the solvable examples",
            criterion_6,
        ),
        (
            "lattice verification accepts the worked examples",
            criterion_7,
        ),
        (
            "structure constants, ad, and group laws are consistent",
            criterion_8,
        ),
    ];

    let previous_hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0usize;
    for (i, (description, run)) in criteria.iter().enumerate() {
        match catch_unwind(AssertUnwindSafe(run)) {
            Ok(()) => println!("PASS criterion {} ({description})", i + 1),
            Err(payload) => {
                let message = payload
                    .downcast_ref::<&str>()
                    .map(|s| s.to_string())
                    .or_else(|| payload.downcast_ref::<String>().cloned())
                    .unwrap_or_else(|| "panicked without a message".into());
                println!("FAIL criterion {} ({description}): {message}", i + 1);
                failed += 1;
            }
        }
    }
    std::panic::set_hook(previous_hook);
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
