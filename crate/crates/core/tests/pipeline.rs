//! End-to-end checks over the whole catalogue: every entry must survive the
//! full verification pipeline, the stored basis changes must invert to the
//! hand-checked closed forms, and the parameter families must degenerate to
//! the expected special points.

use doublecheck::{
    build_double, case_spec, list_cases, verify_case, BasisChange, CaseId, Pushforward, Regime,
    Scalar, TwoTensor, Var, CHECK_NAMES,
};

fn s() -> Scalar {
    Scalar::var(Var::S)
}

fn m() -> Scalar {
    Scalar::var(Var::M)
}

fn p() -> Scalar {
    Scalar::var(Var::P)
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn irt2() -> Scalar {
    Scalar::sqrt2() * Scalar::from_ratio(1, 2)
}

/// Builds a dense 6x6 matrix from sparse rows of (column, value) pairs.
fn mat(rows: [Vec<(usize, Scalar)>; 6]) -> Vec<Vec<Scalar>> {
    rows.into_iter()
        .map(|entries| {
            let mut row = vec![Scalar::zero(); 6];
            for (j, v) in entries {
                row[j] = v;
            }
            row
        })
        .collect()
}

fn failure_digest(report: &doublecheck::VerificationReport) -> String {
    report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {} {}", c.name, c.details, c.residuals))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn every_catalogue_entry_passes_all_checks() {
    for (id, regime) in list_cases() {
        let spec = case_spec(id, regime).unwrap();
        let report = verify_case(&spec, &[]).unwrap();
        assert!(
            report.passed(),
            "case {} failed:\n{}",
            report.label(),
            failure_digest(&report)
        );
        let names: Vec<&str> = report.checks.iter().map(|c| c.name).collect();
        assert_eq!(names, CHECK_NAMES, "check order drifted for {}", spec.label());
    }
}

#[test]
fn catalogue_labels_and_parameters() {
    let labels: Vec<String> = list_cases()
        .into_iter()
        .map(|(id, regime)| case_spec(id, regime).unwrap().label())
        .collect();
    assert_eq!(
        labels,
        ["A", "B", "C (pos)", "C (neg)", "D", "E", "F (pos)", "F (neg)", "G"]
    );

    for (id, regime) in list_cases() {
        let spec = case_spec(id, regime).unwrap();
        match id {
            CaseId::D => {
                assert_eq!(spec.parameters, [Var::M]);
                assert_eq!(spec.pinned_limit, Some((Var::M, int(1))));
            }
            CaseId::G => {
                assert_eq!(spec.parameters, [Var::P]);
                assert_eq!(spec.pinned_limit, None);
            }
            _ => {
                assert!(spec.parameters.is_empty());
                assert_eq!(spec.pinned_limit, None);
            }
        }
    }
}

// The expected inverses below were derived by hand from the forward basis
// changes and double-checked by substituting each kinematical generator back
// into the claimed combination. They freeze the inverse rows so a silent
// change to the forward matrices cannot pass unnoticed.

#[test]
fn inverse_basis_change_case_a() {
    let spec = case_spec(CaseId::A, None).unwrap();
    let c = irt2();
    let sc = s() * irt2();
    let expected = mat([
        vec![(0, int(1))],
        vec![(1, c.clone()), (2, c.clone())],
        vec![(1, -c.clone()), (2, c.clone())],
        vec![(3, int(-1))],
        vec![(1, sc.clone()), (2, -sc.clone()), (4, c.clone()), (5, c.clone())],
        vec![(1, sc.clone()), (2, sc), (4, -c.clone()), (5, c)],
    ]);
    assert_eq!(spec.basis_change.inverse(), &expected);
}

#[test]
fn inverse_basis_change_case_b() {
    let spec = case_spec(CaseId::B, None).unwrap();
    let c = irt2();
    let sc = s() * irt2();
    let expected = mat([
        vec![(0, int(1))],
        vec![(1, c.clone()), (2, c.clone())],
        vec![(1, -c.clone()), (2, c.clone())],
        vec![(3, int(1))],
        vec![(1, -sc.clone()), (2, sc.clone()), (4, c.clone()), (5, c.clone())],
        vec![(1, -sc.clone()), (2, -sc), (4, -c.clone()), (5, c)],
    ]);
    assert_eq!(spec.basis_change.inverse(), &expected);
}

/// Shared by case C in the negative regime and case F in the positive one:
/// their forward matrices coincide, so the inverses must as well.
fn null_plane_inverse() -> Vec<Vec<Scalar>> {
    let u = irt2() / s();
    let v = s() * irt2();
    mat([
        vec![(5, -(int(1) / s().pow(2)))],
        vec![(3, u.clone()), (4, u.clone())],
        vec![(0, v.clone()), (1, v.clone())],
        vec![(2, -s().pow(2))],
        vec![(0, -v.clone()), (1, v)],
        vec![(3, -u.clone()), (4, u)],
    ])
}

#[test]
fn inverse_basis_change_case_c_negative() {
    let spec = case_spec(CaseId::C, Some(Regime::Neg)).unwrap();
    assert_eq!(spec.basis_change.inverse(), &null_plane_inverse());
}

#[test]
fn inverse_basis_change_case_f_positive() {
    let spec = case_spec(CaseId::F, Some(Regime::Pos)).unwrap();
    assert_eq!(spec.basis_change.inverse(), &null_plane_inverse());
}

#[test]
fn inverse_basis_change_case_d() {
    let spec = case_spec(CaseId::D, None).unwrap();
    let denom = int(1) + m().pow(4);
    let cap_a = m() * (int(1) - m().pow(2)) / (int(2) * s() * denom.clone());
    let cap_b = m() * (int(1) + m().pow(2)) / (int(2) * s() * denom.clone());
    let ups = denom / m().pow(2);
    let eta = s().pow(2);
    let ea = ups.clone() * eta.clone() * cap_a.clone();
    let eb = ups.clone() * eta.clone() * cap_b.clone();
    let ua = ups.clone() * cap_a;
    let ub = ups * cap_b;
    let expected = mat([
        vec![(2, eta), (5, int(1) / m().pow(2))],
        vec![(0, ea.clone()), (1, -eb.clone()), (3, -ub.clone()), (4, -ua.clone())],
        vec![(0, eb.clone()), (1, ea.clone()), (3, ua.clone()), (4, -ub.clone())],
        vec![(2, int(-1)), (5, m().pow(2) / s().pow(2))],
        vec![(0, ea.clone()), (1, eb.clone()), (3, -ub.clone()), (4, ua.clone())],
        vec![(0, -eb), (1, ea), (3, -ua), (4, -ub)],
    ]);
    assert_eq!(spec.basis_change.inverse(), &expected);
}

#[test]
fn inverse_basis_change_case_e() {
    let spec = case_spec(CaseId::E, None).unwrap();
    let h = Scalar::from_ratio(1, 2);
    let sh = s() * h.clone();
    let expected = mat([
        vec![(1, int(2))],
        vec![(0, int(-1)), (2, int(1))],
        vec![(0, int(1)), (2, int(1))],
        vec![(4, h.clone())],
        vec![(0, sh.clone()), (2, sh.clone()), (3, h.clone()), (5, h.clone())],
        vec![(0, sh.clone()), (2, -sh), (3, -h.clone()), (5, h)],
    ]);
    assert_eq!(spec.basis_change.inverse(), &expected);
}

#[test]
fn inverse_basis_change_case_g() {
    let spec = case_spec(CaseId::G, None).unwrap();
    let two = int(2);
    let sh = s() / two.clone();
    let inv2s = int(1) / (two.clone() * s());
    let expected = mat([
        vec![
            (2, s().pow(2) * (int(1) - p()) / two.clone()),
            (5, -((int(1) + p()) / two.clone())),
        ],
        vec![(0, -sh.clone()), (1, -sh.clone()), (3, inv2s.clone()), (4, inv2s.clone())],
        vec![
            (0, p() * sh.clone()),
            (1, p() * sh.clone()),
            (3, p() * inv2s.clone()),
            (4, p() * inv2s.clone()),
        ],
        vec![
            (2, -((int(1) + p()) / two.clone())),
            (5, (int(1) - p()) / (two * s().pow(2))),
        ],
        vec![(0, -sh.clone()), (1, sh.clone()), (3, inv2s.clone()), (4, -inv2s.clone())],
        vec![
            (0, -(p() * sh.clone())),
            (1, p() * sh),
            (3, -(p() * inv2s.clone())),
            (4, p() * inv2s),
        ],
    ]);
    assert_eq!(spec.basis_change.inverse(), &expected);
}

#[test]
fn solvable_family_self_dual_point() {
    let spec = case_spec(CaseId::D, None).unwrap();
    let at_one = spec.substituted(&[(Var::M, int(1))]).unwrap();

    let expected_r = TwoTensor::from_wedges(
        6,
        &[(0, 4, int(1)), (1, 3, int(-1)), (5, 2, int(1))],
    );
    assert_eq!(at_one.expected_r_skew, expected_r);
    assert_eq!(
        at_one.expected_pairing,
        (int(0), -(int(1) / (int(2) * s().pow(2))))
    );

    let report = verify_case(&spec, &[(Var::M, int(1))]).unwrap();
    assert!(report.passed(), "failed:\n{}", failure_digest(&report));
}

#[test]
fn family_g_touches_case_f_at_the_boundary() {
    let g = case_spec(CaseId::G, None).unwrap();
    let f = case_spec(CaseId::F, Some(Regime::Pos)).unwrap();
    let at_one = g.substituted(&[(Var::P, int(1))]).unwrap();

    assert_eq!(at_one.expected_r_skew, f.expected_r_skew);
    assert_eq!(at_one.expected_pairing, (int(1), int(0)));
    assert_eq!(at_one.expected_casimir, f.expected_casimir);

    let report = verify_case(&g, &[(Var::P, int(1))]).unwrap();
    assert!(report.passed(), "failed:\n{}", failure_digest(&report));
}

#[test]
fn null_plane_entries_share_one_r_matrix() {
    let entries = [
        case_spec(CaseId::C, Some(Regime::Pos)).unwrap(),
        case_spec(CaseId::C, Some(Regime::Neg)).unwrap(),
        case_spec(CaseId::F, Some(Regime::Pos)).unwrap(),
        case_spec(CaseId::F, Some(Regime::Neg)).unwrap(),
    ];
    for other in &entries[1..] {
        assert_eq!(entries[0].expected_r_skew, other.expected_r_skew);
    }
}

#[test]
fn dual_of_dual_restores_every_entry() {
    for (id, regime) in list_cases() {
        let spec = case_spec(id, regime).unwrap();
        let original = &spec.bialgebra;
        let back = original.dual().dual();
        assert_eq!(
            back.algebra().constants(),
            original.algebra().constants(),
            "{}",
            spec.label()
        );
        for n in 0..3 {
            for l in 0..3 {
                for mm in 0..3 {
                    assert_eq!(back.f(n, l, mm), original.f(n, l, mm), "{}", spec.label());
                }
            }
        }
    }
}

#[test]
fn transport_round_trips_and_preserves_jacobi() {
    let spec = case_spec(CaseId::E, None).unwrap();
    let double = build_double(&spec.bialgebra).unwrap();

    // Unit upper-triangular with mixed rational, sqrt2 and symbolic entries:
    // always invertible, and messy enough to catch index slips.
    let mut w = vec![vec![Scalar::zero(); 6]; 6];
    for (i, row) in w.iter_mut().enumerate() {
        row[i] = int(1);
    }
    w[0][1] = s();
    w[1][3] = Scalar::sqrt2();
    w[2][5] = Scalar::from_ratio(-3, 7);
    w[3][4] = s().pow(2);
    w[4][5] = int(5);
    let change = BasisChange::new(w, None).unwrap();

    let moved = double.algebra().pushforward(&change);
    assert!(moved.jacobi_check().passed());

    let back = moved.pushforward(&change.inverted());
    assert_eq!(back.constants(), double.algebra().constants());

    let pairing_back = double
        .pairing()
        .pushforward(&change)
        .pushforward(&change.inverted());
    assert_eq!(pairing_back.matrix(), double.pairing().matrix());

    let r_back = double
        .r_canonical()
        .pushforward(&change)
        .pushforward(&change.inverted());
    assert_eq!(r_back.components(), double.r_canonical().components());
}
