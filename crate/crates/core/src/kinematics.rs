//! The (2+1)-dimensional kinematical family: the two-parameter algebra on
//! (J0,J1,J2,P0,P1,P2), its standard pairings and Casimirs, recognition of
//! transported algebras, and decomposition against the standard objects.

use crate::check::CheckReport;
use crate::lie::{add_bracket, zero_constants, LieAlgebra};
use crate::scalar::Scalar;
use crate::tensor::{BilinearForm, TwoTensor};
use std::fmt;

/// The signature sign α of the metric g = diag(α,1,1): +1 Euclidean,
/// −1 Lorentzian. Kept as a literal sign, never a symbolic scalar.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn scalar(self) -> Scalar {
        Scalar::from_int(self.as_int())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

pub const KINEMATICAL_NAMES: [&str; 6] = ["J0", "J1", "J2", "P0", "P1", "P2"];

/// The kinematical algebra at parameters (α, χ):
///   [J0,J1]=J2, [J0,J2]=−J1, [J1,J2]=αJ0,
///   [J0,P1]=P2, [J0,P2]=−P1, [J1,P0]=−P2, [J1,P2]=αP0,
///   [J2,P0]=P1, [J2,P1]=−αP0,
///   [P0,P1]=χJ2, [P0,P2]=−χJ1, [P1,P2]=αχJ0.
/// The cosmological constant is Λ = α·χ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KinematicalAlgebra {
    alpha: Sign,
    chi: Scalar,
    algebra: LieAlgebra,
}

/// The two standard invariant pairings at fixed (α, χ).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardPairings {
    pub eta_t: BilinearForm,
    pub eta_s: BilinearForm,
}

/// The two standard invariant Casimir tensors at fixed (α, χ).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardCasimirs {
    pub c1: TwoTensor,
    pub c2: TwoTensor,
}

/// Outcome of recognizing a 6-dimensional algebra as kinematical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Identification {
    Kinematical { alpha: Sign, chi: Scalar },
    Mismatch(CheckReport),
}

/// Outcome of decomposing a form or tensor over a standard basis pair; the
/// meaning of the coefficients depends on the operation that produced them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Decomposition {
    Coefficients(Scalar, Scalar),
    Mismatch(CheckReport),
}

impl KinematicalAlgebra {
    pub fn new(alpha: Sign, chi: Scalar) -> Self {
        let a = alpha.scalar();
        let mut c = zero_constants(6);
        add_bracket(&mut c, 0, 1, 2, Scalar::one());
        add_bracket(&mut c, 0, 2, 1, Scalar::from_int(-1));
        add_bracket(&mut c, 1, 2, 0, a.clone());
        add_bracket(&mut c, 0, 4, 5, Scalar::one());
        add_bracket(&mut c, 0, 5, 4, Scalar::from_int(-1));
        add_bracket(&mut c, 1, 3, 5, Scalar::from_int(-1));
        add_bracket(&mut c, 1, 5, 3, a.clone());
        add_bracket(&mut c, 2, 3, 4, Scalar::one());
        add_bracket(&mut c, 2, 4, 3, -&a);
        add_bracket(&mut c, 3, 4, 2, chi.clone());
        add_bracket(&mut c, 3, 5, 1, -&chi);
        add_bracket(&mut c, 4, 5, 0, &a * &chi);
        let names = KINEMATICAL_NAMES.iter().map(|s| s.to_string()).collect();
        KinematicalAlgebra {
            alpha,
            chi,
            algebra: LieAlgebra::new_unchecked(names, c),
        }
    }

    pub fn alpha(&self) -> Sign {
        self.alpha
    }

    pub fn chi(&self) -> &Scalar {
        &self.chi
    }

    /// Λ = α·χ.
    pub fn lambda(&self) -> Scalar {
        &self.alpha.scalar() * &self.chi
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// Diagonal of the metric g = diag(α,1,1).
    fn g(&self, a: usize) -> Scalar {
        if a == 0 {
            self.alpha.scalar()
        } else {
            Scalar::one()
        }
    }

    pub fn pairings(&self) -> StandardPairings {
        let mut t = vec![vec![Scalar::zero(); 6]; 6];
        let mut s = vec![vec![Scalar::zero(); 6]; 6];
        for a in 0..3 {
            let g = self.g(a);
            t[a][3 + a] = g.clone();
            t[3 + a][a] = g.clone();
            s[a][a] = g.clone();
            s[3 + a][3 + a] = &self.chi * &g;
        }
        StandardPairings {
            eta_t: BilinearForm::new(t, true).expect("symmetric by construction"),
            eta_s: BilinearForm::new(s, true).expect("symmetric by construction"),
        }
    }

    pub fn casimirs(&self) -> StandardCasimirs {
        let mut c1 = TwoTensor::zero(6);
        let mut c2 = TwoTensor::zero(6);
        let half = Scalar::from_ratio(1, 2);
        for a in 0..3 {
            // g is its own inverse, so g^{aa} = g_aa.
            let g = self.g(a);
            c1.add_at(3 + a, 3 + a, g.clone());
            c1.add_at(a, a, &self.chi * &g);
            c2.add_at(a, 3 + a, &half * &g);
            c2.add_at(3 + a, a, &half * &g);
        }
        StandardCasimirs { c1, c2 }
    }

    /// Read candidate coefficients from B(J0,P0) and B(J0,J0), then verify
    /// B = λ_t·η_t + λ_s·η_s on every entry.
    pub fn decompose_pairing(&self, b: &BilinearForm) -> Decomposition {
        assert_eq!(b.dim(), 6);
        let alpha = self.alpha.scalar();
        let lambda_t = b.get(0, 3) * &alpha;
        let lambda_s = b.get(0, 0) * &alpha;
        let pairings = self.pairings();
        let expected = |i: usize, j: usize| {
            &(&lambda_t * pairings.eta_t.get(i, j)) + &(&lambda_s * pairings.eta_s.get(i, j))
        };
        let mut report = CheckReport::default();
        for i in 0..6 {
            for j in 0..6 {
                report.record(vec![i, j], b.get(i, j) - &expected(i, j));
            }
        }
        if report.passed() {
            Decomposition::Coefficients(lambda_t, lambda_s)
        } else {
            Decomposition::Mismatch(report)
        }
    }

    /// Read candidate coefficients from T(P0,P0) and T(J0,P0), then verify
    /// T = a·C₁ + b·C₂ on every entry.
    pub fn decompose_casimir(&self, t: &TwoTensor) -> Decomposition {
        assert_eq!(t.dim(), 6);
        let alpha = self.alpha.scalar();
        let a = t.get(3, 3) * &alpha;
        let b = &(t.get(0, 3) * &alpha) * &Scalar::from_int(2);
        let casimirs = self.casimirs();
        let expected = |i: usize, j: usize| {
            &(&a * casimirs.c1.get(i, j)) + &(&b * casimirs.c2.get(i, j))
        };
        let mut report = CheckReport::default();
        for i in 0..6 {
            for j in 0..6 {
                report.record(vec![i, j], t.get(i, j) - &expected(i, j));
            }
        }
        if report.passed() {
            Decomposition::Coefficients(a, b)
        } else {
            Decomposition::Mismatch(report)
        }
    }
}

/// Recognize a 6-dimensional algebra in (J,P) ordering as the kinematical
/// algebra: read α from the [J1,J2] bracket and χ from [P0,P1], then demand
/// every structure constant match exactly.
pub fn identify_parameters(l: &LieAlgebra) -> Identification {
    assert_eq!(l.dim(), 6);
    let alpha = if l.c(1, 2, 0).is_one() {
        Sign::Plus
    } else if (l.c(1, 2, 0) + &Scalar::one()).is_zero() {
        Sign::Minus
    } else {
        let mut report = CheckReport::default();
        report.record(vec![1, 2, 0], l.c(1, 2, 0).clone());
        return Identification::Mismatch(report);
    };
    let chi = l.c(3, 4, 2).clone();
    let reference = KinematicalAlgebra::new(alpha, chi.clone());
    let mut report = CheckReport::default();
    for i in 0..6 {
        for j in 0..6 {
            for k in 0..6 {
                report.record(vec![i, j, k], l.c(i, j, k) - reference.algebra.c(i, j, k));
            }
        }
    }
    if report.passed() {
        Identification::Kinematical { alpha, chi }
    } else {
        Identification::Mismatch(report)
    }
}
