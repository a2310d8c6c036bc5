//! The nine catalogued double structures: identifiers, regimes, and the full
//! transcription of each entry (bialgebra constants, basis change to the
//! kinematical generators, expected invariants).
//!
//! Expected values are claims under test, not axioms: the verification
//! pipeline recomputes everything from the bialgebra constants alone and
//! reports any mismatch against the transcription.

use crate::basis::{zero_matrix, BasisChange};
use crate::bialgebra::{add_cobracket, LieBialgebra};
use crate::contraction::LimitClass;
use crate::error::Error;
use crate::kinematics::{Sign, KINEMATICAL_NAMES};
use crate::lie::{add_bracket, zero_constants, LieAlgebra};
use crate::scalar::{Scalar, Var};
use crate::tensor::TwoTensor;
use std::fmt;
use std::str::FromStr;

/// One of the seven catalogued families of double structures.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CaseId {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CaseId {
    pub const ALL: [CaseId; 7] = [
        CaseId::A,
        CaseId::B,
        CaseId::C,
        CaseId::D,
        CaseId::E,
        CaseId::F,
        CaseId::G,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseId::A => "A",
            CaseId::B => "B",
            CaseId::C => "C",
            CaseId::D => "D",
            CaseId::E => "E",
            CaseId::F => "F",
            CaseId::G => "G",
        }
    }

    /// Cases whose deformation parameter squares to either sign, so a
    /// regime choice is part of the case identity.
    pub fn needs_regime(self) -> bool {
        matches!(self, CaseId::C | CaseId::F)
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(CaseId::A),
            "B" => Ok(CaseId::B),
            "C" => Ok(CaseId::C),
            "D" => Ok(CaseId::D),
            "E" => Ok(CaseId::E),
            "F" => Ok(CaseId::F),
            "G" => Ok(CaseId::G),
            other => Err(Error::UnknownCase(other.to_string())),
        }
    }
}

/// Sign regime of the deformation parameter for the cases that admit both.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Regime {
    Pos,
    Neg,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Pos => "pos",
            Regime::Neg => "neg",
        })
    }
}

impl FromStr for Regime {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "pos" => Ok(Regime::Pos),
            "neg" => Ok(Regime::Neg),
            other => Err(Error::UnknownCase(format!("regime {other}"))),
        }
    }
}

/// How each transported object behaves under the deformation-scale limit.
/// Valid for the entry as catalogued, i.e. with its parameters symbolic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LimitExpectation {
    pub algebra: LimitClass,
    pub pairing_finite: bool,
    pub r_skew_finite: bool,
}

/// Descriptive facts about an entry that no computation consumes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CaseMetadata {
    /// Isomorphism class of the six-dimensional double.
    pub double_name: &'static str,
    /// Model spacetime of the kinematical algebra.
    pub spacetime: &'static str,
    /// Sign of the cosmological constant (alpha times chi).
    pub lambda_sign: Sign,
    /// Model spacetime after the limit.
    pub limit_spacetime: &'static str,
    /// The three-dimensional algebra whose deformation induces the double.
    pub base_algebra: &'static str,
    /// Index in the standard classification of three-dimensional real
    /// Lie bialgebras.
    pub bialgebra_class: &'static str,
    /// (g | g* | pairing) triple labelling the double in the standard
    /// classification of six-dimensional doubles.
    pub double_class: &'static str,
    /// Domain constraints on the extra parameter, if any. Consulted by
    /// input validation only; the field itself carries no constraints.
    pub constraints: &'static str,
    /// Annotation for the pinned limit, if any.
    pub limit_note: &'static str,
}

/// One catalogued entry, fully realized over the polynomial variables:
/// the deformation scale is `s` throughout, `m` squares to case D's extra
/// parameter, and `p` is case G's extra parameter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CaseSpec {
    pub id: CaseId,
    pub regime: Option<Regime>,
    /// The deformation parameter in realized form (s, s^2, or -s^2).
    pub eta: Scalar,
    /// Extra parameters this entry admits; bindings for any other
    /// variable are rejected.
    pub parameters: &'static [Var],
    /// Parameter value at which an otherwise divergent r-matrix limit
    /// becomes finite.
    pub pinned_limit: Option<(Var, Scalar)>,
    pub bialgebra: LieBialgebra,
    /// Double basis (X0,X1,X2,x0,x1,x2) to kinematical basis.
    pub basis_change: BasisChange,
    pub expected_alpha: Sign,
    pub expected_chi: Scalar,
    /// Coefficients of the transported pairing on the two invariant
    /// bilinear forms of the kinematical algebra.
    pub expected_pairing: (Scalar, Scalar),
    /// Coefficients of the transported symmetric split of the canonical
    /// r-matrix on the two quadratic invariants.
    pub expected_casimir: (Scalar, Scalar),
    /// The transported skew split of the canonical r-matrix.
    pub expected_r_skew: TwoTensor,
    pub expected_limits: LimitExpectation,
    pub metadata: CaseMetadata,
}

impl CaseSpec {
    pub fn label(&self) -> String {
        match self.regime {
            Some(r) => format!("{} ({})", self.id, r),
            None => self.id.to_string(),
        }
    }

    /// Rebuild the entry at fixed parameter values. The deformation scale
    /// stays symbolic: it is the limit variable. `expected_limits` keeps
    /// describing the unbound entry; after a binding the pipeline derives
    /// limit behaviour from the substituted expected objects instead.
    pub fn substituted(&self, bindings: &[(Var, Scalar)]) -> Result<CaseSpec, Error> {
        for (v, _) in bindings {
            if *v == Var::S {
                return Err(Error::InvalidParameterValue {
                    name: Var::S.name().to_string(),
                    reason: "the deformation scale stays symbolic".to_string(),
                });
            }
            if !self.parameters.contains(v) {
                return Err(Error::UnknownParameter {
                    case: self.id,
                    name: v.name().to_string(),
                });
            }
        }
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        Ok(CaseSpec {
            id: self.id,
            regime: self.regime,
            eta: self.eta.substitute(bindings)?,
            parameters: self.parameters,
            pinned_limit: None,
            bialgebra: self.bialgebra.substitute(bindings)?,
            basis_change: self.basis_change.substitute(bindings)?,
            expected_alpha: self.expected_alpha,
            expected_chi: self.expected_chi.substitute(bindings)?,
            expected_pairing: (
                self.expected_pairing.0.substitute(bindings)?,
                self.expected_pairing.1.substitute(bindings)?,
            ),
            expected_casimir: (
                self.expected_casimir.0.substitute(bindings)?,
                self.expected_casimir.1.substitute(bindings)?,
            ),
            expected_r_skew: self.expected_r_skew.substitute(bindings)?,
            expected_limits: self.expected_limits,
            metadata: self.metadata,
        })
    }
}

/// The immutable transcription of one entry.
pub fn case_spec(id: CaseId, regime: Option<Regime>) -> Result<CaseSpec, Error> {
    match (id.needs_regime(), regime) {
        (true, None) => return Err(Error::RegimeRequired { case: id }),
        (false, Some(_)) => return Err(Error::RegimeNotApplicable { case: id }),
        _ => {}
    }
    match id {
        CaseId::A => build_a(),
        CaseId::B => build_b(),
        CaseId::C => build_c(regime.expect("regime checked above")),
        CaseId::D => build_d(),
        CaseId::E => build_e(),
        CaseId::F => build_f(regime.expect("regime checked above")),
        CaseId::G => build_g(),
    }
}

/// All nine entries: seven families, two of which split into sign regimes.
pub fn list_cases() -> Vec<(CaseId, Option<Regime>)> {
    vec![
        (CaseId::A, None),
        (CaseId::B, None),
        (CaseId::C, Some(Regime::Pos)),
        (CaseId::C, Some(Regime::Neg)),
        (CaseId::D, None),
        (CaseId::E, None),
        (CaseId::F, Some(Regime::Pos)),
        (CaseId::F, Some(Regime::Neg)),
        (CaseId::G, None),
    ]
}

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

fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

/// 1/sqrt(2), the ubiquitous normalization of the catalogued basis changes.
fn irt2() -> Scalar {
    Scalar::sqrt2() * ratio(1, 2)
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|n| n.to_string()).collect()
}

fn kin_names() -> Vec<String> {
    names(&KINEMATICAL_NAMES)
}

/// Three-dimensional bialgebra from sparse bracket and cobracket entries:
/// `(i, j, k, v)` puts `v e_k` into `[e_i, e_j]`, and on the cobracket side
/// `v x^k` into `[x^i, x^j]`.
fn bialgebra(
    c_entries: &[(usize, usize, usize, Scalar)],
    f_entries: &[(usize, usize, usize, Scalar)],
) -> LieBialgebra {
    let mut c = zero_constants(3);
    for (i, j, k, v) in c_entries {
        add_bracket(&mut c, *i, *j, *k, v.clone());
    }
    let algebra = LieAlgebra::new_unchecked(names(&["X0", "X1", "X2"]), c);
    let mut f = zero_constants(3);
    for (l, mm, n, v) in f_entries {
        add_cobracket(&mut f, *l, *mm, *n, v.clone());
    }
    LieBialgebra::new_unchecked(algebra, f, names(&["x0", "x1", "x2"]))
}

/// Kinematical basis change from sparse rows: row order J0,J1,J2,P0,P1,P2,
/// column order X0,X1,X2,x0,x1,x2.
fn change(rows: [Vec<(usize, Scalar)>; 6]) -> Result<BasisChange, Error> {
    let mut mat = zero_matrix(6);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, v) in row {
            mat[i][j] = v;
        }
    }
    BasisChange::new(mat, Some(kin_names()))
}

fn build_a() -> Result<CaseSpec, Error> {
    let eta = s();
    let b = bialgebra(
        &[
            (0, 1, 2, int(1)),
            (0, 2, 1, int(-1)),
            (1, 2, 0, int(-1)),
        ],
        &[(0, 1, 1, -eta.clone()), (0, 2, 2, -eta.clone())],
    );
    let c = irt2();
    let sc = s() * irt2();
    let basis_change = change([
        vec![(0, int(1))],
        vec![(1, c.clone()), (2, -c.clone())],
        vec![(1, c.clone()), (2, c.clone())],
        vec![(3, int(-1))],
        vec![(1, sc.clone()), (2, sc.clone()), (4, c.clone()), (5, -c.clone())],
        vec![(1, -sc.clone()), (2, sc), (4, c.clone()), (5, c)],
    ])?;
    let r = TwoTensor::from_wedges(
        6,
        &[
            (1, 2, s()),
            (3, 0, ratio(-1, 2)),
            (4, 1, ratio(1, 2)),
            (5, 2, ratio(1, 2)),
        ],
    );
    Ok(CaseSpec {
        id: CaseId::A,
        regime: None,
        eta,
        parameters: &[],
        pinned_limit: None,
        bialgebra: b,
        basis_change,
        expected_alpha: Sign::Minus,
        expected_chi: -s().pow(2),
        expected_pairing: (int(1), int(0)),
        expected_casimir: (int(0), int(1)),
        expected_r_skew: r,
        expected_limits: LimitExpectation {
            algebra: LimitClass::Iso21,
            pairing_finite: true,
            r_skew_finite: true,
        },
        metadata: CaseMetadata {
            double_name: "so(3,1)",
            spacetime: "dS^{2+1}",
            lambda_sign: Sign::Plus,
            limit_spacetime: "M^{2+1}",
            base_algebra: "so(2,1)",
            bialgebra_class: "2",
            double_class: "(8|5.ii|lambda)",
            constraints: "",
            limit_note: "",
        },
    })
}

fn build_b() -> Result<CaseSpec, Error> {
    let eta = s();
    let b = bialgebra(
        &[
            (0, 1, 2, int(1)),
            (0, 2, 1, int(-1)),
            (1, 2, 0, int(1)),
        ],
        &[(0, 1, 1, -eta.clone()), (0, 2, 2, -eta.clone())],
    );
    let c = irt2();
    let sc = s() * irt2();
    let basis_change = change([
        vec![(0, int(1))],
        vec![(1, c.clone()), (2, -c.clone())],
        vec![(1, c.clone()), (2, c.clone())],
        vec![(3, int(1))],
        vec![(1, -sc.clone()), (2, -sc.clone()), (4, c.clone()), (5, -c.clone())],
        vec![(1, sc.clone()), (2, -sc), (4, c.clone()), (5, c)],
    ])?;
    let r = TwoTensor::from_wedges(
        6,
        &[
            (1, 2, -s()),
            (3, 0, ratio(1, 2)),
            (4, 1, ratio(1, 2)),
            (5, 2, ratio(1, 2)),
        ],
    );
    Ok(CaseSpec {
        id: CaseId::B,
        regime: None,
        eta,
        parameters: &[],
        pinned_limit: None,
        bialgebra: b,
        basis_change,
        expected_alpha: Sign::Plus,
        expected_chi: -s().pow(2),
        expected_pairing: (int(1), int(0)),
        expected_casimir: (int(0), int(1)),
        expected_r_skew: r,
        expected_limits: LimitExpectation {
            algebra: LimitClass::Iso3,
            pairing_finite: true,
            r_skew_finite: true,
        },
        metadata: CaseMetadata {
            double_name: "so(3,1)",
            spacetime: "H^3",
            lambda_sign: Sign::Minus,
            limit_spacetime: "E^3",
            base_algebra: "so(3)",
            bialgebra_class: "4",
            double_class: "(9|5|lambda)",
            constraints: "",
            limit_note: "",
        },
    })
}

fn build_c(regime: Regime) -> Result<CaseSpec, Error> {
    let eta = match regime {
        Regime::Pos => s().pow(2),
        Regime::Neg => -s().pow(2),
    };
    let b = bialgebra(
        &[(0, 1, 2, int(1)), (0, 2, 1, int(-1))],
        &[(0, 1, 1, -eta.clone()), (0, 2, 2, -eta.clone())],
    );
    // 1/(sqrt2 s) and s/sqrt2: the two normalizations of the null-plane mix.
    let u = irt2() / s();
    let v = s() * irt2();
    let basis_change = match regime {
        Regime::Neg => change([
            vec![(2, u.clone()), (4, -u.clone())],
            vec![(2, u.clone()), (4, u)],
            vec![(3, -(int(1) / s().pow(2)))],
            vec![(1, v.clone()), (5, -v.clone())],
            vec![(1, v.clone()), (5, v)],
            vec![(0, -s().pow(2))],
        ])?,
        Regime::Pos => change([
            vec![(1, u.clone()), (5, -u.clone())],
            vec![(1, u.clone()), (5, u)],
            vec![(3, int(1) / s().pow(2))],
            vec![(2, v.clone()), (4, -v.clone())],
            vec![(2, v.clone()), (4, v)],
            vec![(0, s().pow(2))],
        ])?,
    };
    let r = TwoTensor::from_wedges(
        6,
        &[
            (1, 3, ratio(1, 2)),
            (0, 4, ratio(-1, 2)),
            (2, 5, ratio(1, 2)),
        ],
    );
    Ok(CaseSpec {
        id: CaseId::C,
        regime: Some(regime),
        eta,
        parameters: &[],
        pinned_limit: None,
        bialgebra: b,
        basis_change,
        expected_alpha: Sign::Minus,
        expected_chi: -s().pow(4),
        expected_pairing: (int(1), int(0)),
        expected_casimir: (int(0), int(1)),
        expected_r_skew: r,
        expected_limits: LimitExpectation {
            algebra: LimitClass::Iso21,
            pairing_finite: true,
            r_skew_finite: true,
        },
        metadata: CaseMetadata {
            double_name: "so(3,1)",
            spacetime: "dS^{2+1}",
            lambda_sign: Sign::Plus,
            limit_spacetime: "M^{2+1}",
            base_algebra: "iso(2)",
            bialgebra_class: "9",
            double_class: "(7_0|5.ii|lambda)",
            constraints: "",
            limit_note: "",
        },
    })
}

fn build_d() -> Result<CaseSpec, Error> {
    let eta = s().pow(2);
    let mu = m().pow(2);
    let denom = int(1) + m().pow(4);
    // Row coefficients of the mixing block, both of order m/s.
    let a = m() * (int(1) - m().pow(2)) / (int(2) * s() * denom.clone());
    let bb = m() * (int(1) + m().pow(2)) / (int(2) * s() * denom.clone());
    let b = bialgebra(
        &[
            (0, 1, 1, -(eta.clone() / mu.clone())),
            (0, 1, 2, eta.clone()),
            (0, 2, 1, -eta.clone()),
            (0, 2, 2, -(eta.clone() / mu.clone())),
        ],
        &[
            (0, 1, 1, mu.clone()),
            (0, 1, 2, int(-1)),
            (0, 2, 1, int(1)),
            (0, 2, 2, mu.clone()),
        ],
    );
    let basis_change = change([
        vec![(1, a.clone()), (2, bb.clone()), (4, a.clone()), (5, -bb.clone())],
        vec![(1, -bb.clone()), (2, a.clone()), (4, bb.clone()), (5, a.clone())],
        vec![
            (0, m().pow(4) / (s().pow(2) * denom.clone())),
            (3, -(int(1) / denom.clone())),
        ],
        vec![
            (1, -(eta.clone() * bb.clone())),
            (2, eta.clone() * a.clone()),
            (4, -(eta.clone() * bb.clone())),
            (5, -(eta.clone() * a.clone())),
        ],
        vec![
            (1, -(eta.clone() * a.clone())),
            (2, -(eta.clone() * bb.clone())),
            (4, eta.clone() * a.clone()),
            (5, -(eta.clone() * bb.clone())),
        ],
        vec![
            (0, mu.clone() / denom.clone()),
            (3, mu.clone() * eta.clone() / denom.clone()),
        ],
    ])?;
    let r = TwoTensor::from_wedges(
        6,
        &[
            (0, 4, int(1)),
            (1, 3, int(-1)),
            (5, 2, (int(1) + m().pow(4)) / (int(2) * m().pow(2))),
            (0, 1, s().pow(2) * (m().pow(4) - int(1)) / (int(2) * m().pow(2))),
            (
                3,
                4,
                -((m().pow(4) - int(1)) / (int(2) * s().pow(2) * m().pow(2))),
            ),
        ],
    );
    Ok(CaseSpec {
        id: CaseId::D,
        regime: None,
        eta,
        parameters: &[Var::M],
        pinned_limit: Some((Var::M, int(1))),
        bialgebra: b,
        basis_change,
        expected_alpha: Sign::Plus,
        expected_chi: -s().pow(4),
        expected_pairing: (
            m().pow(2) * (m().pow(4) - int(1)) / denom.clone().pow(2),
            int(-2) * m().pow(4) / (s().pow(2) * denom.clone().pow(2)),
        ),
        expected_casimir: (
            int(1) / s().pow(2),
            (m().pow(4) - int(1)) / m().pow(2),
        ),
        expected_r_skew: r,
        expected_limits: LimitExpectation {
            algebra: LimitClass::Iso3,
            pairing_finite: false,
            r_skew_finite: false,
        },
        metadata: CaseMetadata {
            double_name: "so(3,1)",
            spacetime: "H^3",
            lambda_sign: Sign::Minus,
            limit_spacetime: "E^3",
            base_algebra: "solvable family 7_mu",
            bialgebra_class: "16",
            double_class: "(7_mu|7_{1/mu}|lambda)",
            constraints: "mu > 0",
            limit_note: "mu = 1",
        },
    })
}

fn build_e() -> Result<CaseSpec, Error> {
    let eta = s();
    let b = bialgebra(
        &[
            (0, 1, 1, int(2)),
            (0, 2, 2, int(-2)),
            (1, 2, 0, int(1)),
        ],
        &[
            (0, 1, 1, -(eta.clone() * ratio(1, 2))),
            (0, 2, 2, -(eta.clone() * ratio(1, 2))),
        ],
    );
    let h = s() * ratio(1, 2);
    let basis_change = change([
        vec![(1, ratio(-1, 2)), (2, ratio(1, 2))],
        vec![(0, ratio(1, 2))],
        vec![(1, ratio(1, 2)), (2, ratio(1, 2))],
        vec![(1, -h.clone()), (2, -h.clone()), (4, int(1)), (5, int(-1))],
        vec![(3, int(2))],
        vec![(1, h.clone()), (2, -h), (4, int(1)), (5, int(1))],
    ])?;
    let r = TwoTensor::from_wedges(
        6,
        &[
            (0, 2, s()),
            (3, 0, ratio(-1, 2)),
            (4, 1, ratio(1, 2)),
            (5, 2, ratio(1, 2)),
        ],
    );
    Ok(CaseSpec {
        id: CaseId::E,
        regime: None,
        eta,
        parameters: &[],
        pinned_limit: None,
        bialgebra: b,
        basis_change,
        expected_alpha: Sign::Minus,
        expected_chi: s().pow(2),
        expected_pairing: (int(1), int(0)),
        expected_casimir: (int(0), int(1)),
        expected_r_skew: r,
        expected_limits: LimitExpectation {
            algebra: LimitClass::Iso21,
            pairing_finite: true,
            r_skew_finite: true,
        },
        metadata: CaseMetadata {
            double_name: "so(2,2)",
            spacetime: "AdS^{2+1}",
            lambda_sign: Sign::Minus,
            limit_spacetime: "M^{2+1}",
            base_algebra: "sl(2,R)",
            bialgebra_class: "1",
            double_class: "(8|5.i|lambda)",
            constraints: "",
            limit_note: "",
        },
    })
}

fn build_f(regime: Regime) -> Result<CaseSpec, Error> {
    let eta = match regime {
        Regime::Pos => s().pow(2),
        Regime::Neg => -s().pow(2),
    };
    let b = bialgebra(
        &[(0, 1, 2, int(-1)), (0, 2, 1, int(-1))],
        &[(0, 1, 1, eta.clone()), (0, 2, 2, eta.clone())],
    );
    let u = irt2() / s();
    let v = s() * irt2();
    let basis_change = match regime {
        Regime::Pos => change([
            vec![(2, u.clone()), (4, -u.clone())],
            vec![(2, u.clone()), (4, u)],
            vec![(3, -(int(1) / s().pow(2)))],
            vec![(1, v.clone()), (5, -v.clone())],
            vec![(1, v.clone()), (5, v)],
            vec![(0, -s().pow(2))],
        ])?,
        Regime::Neg => change([
            vec![(2, u.clone()), (4, u.clone())],
            vec![(2, u.clone()), (4, -u)],
            vec![(3, int(1) / s().pow(2))],
            vec![(1, -v.clone()), (5, -v.clone())],
            vec![(1, -v.clone()), (5, v)],
            vec![(0, s().pow(2))],
        ])?,
    };
    let r = TwoTensor::from_wedges(
        6,
        &[
            (1, 3, ratio(1, 2)),
            (0, 4, ratio(-1, 2)),
            (2, 5, ratio(1, 2)),
        ],
    );
    Ok(CaseSpec {
        id: CaseId::F,
        regime: Some(regime),
        eta,
        parameters: &[],
        pinned_limit: None,
        bialgebra: b,
        basis_change,
        expected_alpha: Sign::Minus,
        expected_chi: s().pow(4),
        expected_pairing: (int(1), int(0)),
        expected_casimir: (int(0), int(1)),
        expected_r_skew: r,
        expected_limits: LimitExpectation {
            algebra: LimitClass::Iso21,
            pairing_finite: true,
            r_skew_finite: true,
        },
        metadata: CaseMetadata {
            double_name: "so(2,2)",
            spacetime: "AdS^{2+1}",
            lambda_sign: Sign::Minus,
            limit_spacetime: "M^{2+1}",
            base_algebra: "iso(1,1)",
            bialgebra_class: "11",
            double_class: "(6_0|5.iii|lambda)",
            constraints: "",
            limit_note: "",
        },
    })
}

fn build_g() -> Result<CaseSpec, Error> {
    let eta = s().pow(2);
    let b = bialgebra(
        &[(0, 1, 1, eta.clone()), (0, 2, 2, -(eta.clone() * p()))],
        &[(0, 1, 1, int(1)), (0, 2, 2, p())],
    );
    let q1 = int(1) / (int(2) * s());
    let q0 = int(1) / (int(2) * s() * p());
    let h = s() * ratio(1, 2);
    let hp = s() / (int(2) * p());
    let basis_change = change([
        vec![(1, -q1.clone()), (2, q0.clone()), (4, -q1.clone()), (5, -q0.clone())],
        vec![(1, -q1.clone()), (2, q0.clone()), (4, q1), (5, q0)],
        vec![
            (0, (p() - int(1)) / (int(2) * s().pow(2) * p())),
            (3, -((p() + int(1)) / (int(2) * p()))),
        ],
        vec![(1, h.clone()), (2, hp.clone()), (4, h.clone()), (5, -hp.clone())],
        vec![(1, h.clone()), (2, hp.clone()), (4, -h), (5, hp)],
        vec![
            (0, -((p() + int(1)) / (int(2) * p()))),
            (3, s().pow(2) * (p() - int(1)) / (int(2) * p())),
        ],
    ])?;
    let quarter = ratio(1, 4);
    let r = TwoTensor::from_wedges(
        6,
        &[
            (1, 3, (int(1) + p().pow(2)) * quarter.clone()),
            (0, 4, -((int(1) + p().pow(2)) * quarter.clone())),
            (2, 5, p() * ratio(1, 2)),
            (0, 1, s().pow(2) * (int(1) - p().pow(2)) * quarter),
            (3, 4, (int(1) - p().pow(2)) / (int(4) * s().pow(2))),
        ],
    );
    Ok(CaseSpec {
        id: CaseId::G,
        regime: None,
        eta,
        parameters: &[Var::P],
        pinned_limit: None,
        bialgebra: b,
        basis_change,
        expected_alpha: Sign::Minus,
        expected_chi: s().pow(4),
        expected_pairing: (
            (int(1) + p().pow(2)) / (int(2) * p().pow(2)),
            (int(1) - p().pow(2)) / (int(2) * s().pow(2) * p().pow(2)),
        ),
        // The second coefficient is fixed by the pairing: the symmetric split
        // is half the inverse of the bilinear form, which forces
        // (1 + rho^2)/2 here, and the rho -> 1 limit then lands exactly on
        // the coefficients of the anti-de-Sitter null-plane entry.
        expected_casimir: (
            -((int(1) - p().pow(2)) / (int(4) * s().pow(2))),
            (int(1) + p().pow(2)) * ratio(1, 2),
        ),
        expected_r_skew: r,
        expected_limits: LimitExpectation {
            algebra: LimitClass::Iso21,
            pairing_finite: false,
            r_skew_finite: false,
        },
        metadata: CaseMetadata {
            double_name: "so(2,2)",
            spacetime: "AdS^{2+1}",
            lambda_sign: Sign::Minus,
            limit_spacetime: "M^{2+1}",
            base_algebra: "solvable family tau3(rho)",
            bialgebra_class: "7",
            double_class: "(6_a|6_{1/a}.i|lambda)",
            constraints: "-1 < rho < 1, rho != 0",
            limit_note: "",
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listing_has_nine_entries_with_split_regimes() {
        let cases = list_cases();
        assert_eq!(cases.len(), 9);
        assert!(cases.contains(&(CaseId::D, None)));
        let c_regimes: Vec<_> = cases
            .iter()
            .filter(|(id, _)| *id == CaseId::C)
            .collect();
        assert_eq!(c_regimes.len(), 2);
        for (id, regime) in &cases {
            assert_eq!(regime.is_some(), id.needs_regime());
        }
    }

    #[test]
    fn every_listed_entry_builds() {
        for (id, regime) in list_cases() {
            case_spec(id, regime).unwrap();
        }
    }

    #[test]
    fn regime_is_mandatory_exactly_where_declared() {
        assert!(matches!(
            case_spec(CaseId::C, None),
            Err(Error::RegimeRequired { case: CaseId::C })
        ));
        assert!(matches!(
            case_spec(CaseId::A, Some(Regime::Pos)),
            Err(Error::RegimeNotApplicable { case: CaseId::A })
        ));
    }

    #[test]
    fn case_a_bracket_and_cobracket_spot_values() {
        let spec = case_spec(CaseId::A, None).unwrap();
        assert_eq!(*spec.bialgebra.algebra().c(1, 2, 0), int(-1));
        assert_eq!(*spec.bialgebra.f(1, 0, 1), -s());
    }

    #[test]
    fn case_c_negative_regime_basis_spot_values() {
        let spec = case_spec(CaseId::C, Some(Regime::Neg)).unwrap();
        let mat = spec.basis_change.matrix();
        assert_eq!(mat[2][3], -(int(1) / s().pow(2)));
        assert_eq!(mat[5][0], -s().pow(2));
    }

    #[test]
    fn bindings_are_validated_per_case() {
        let d = case_spec(CaseId::D, None).unwrap();
        assert!(matches!(
            d.substituted(&[(Var::S, int(1))]),
            Err(Error::InvalidParameterValue { .. })
        ));
        assert!(matches!(
            d.substituted(&[(Var::P, int(1))]),
            Err(Error::UnknownParameter { .. })
        ));
        let a = case_spec(CaseId::A, None).unwrap();
        assert!(matches!(
            a.substituted(&[(Var::M, int(1))]),
            Err(Error::UnknownParameter { .. })
        ));
        assert!(d.substituted(&[(Var::M, int(2))]).is_ok());
    }
}
