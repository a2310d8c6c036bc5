//! Failure reports for exact identity checks. A check either passes or
//! returns every violated component together with its symbolic residual, so a
//! failing run pinpoints the offending entry instead of a bare boolean.

use crate::scalar::Scalar;
use std::fmt;

/// One violated component of a checked identity: the multi-index of the
/// entry and the nonzero residual found there.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Failure {
    pub component: Vec<usize>,
    pub residual: Scalar,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = self
            .component
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "({idx}): {}", self.residual)
    }
}

/// All violated components of a single check, empty when it passed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CheckReport {
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, component: Vec<usize>, residual: Scalar) {
        if !residual.is_zero() {
            self.failures.push(Failure { component, residual });
        }
    }

    /// Ok(()) on a clean report, otherwise hands itself to the caller's
    /// error constructor.
    pub fn into_result<E>(self, wrap: impl FnOnce(CheckReport) -> E) -> Result<(), E> {
        if self.passed() {
            Ok(())
        } else {
            Err(wrap(self))
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "all components vanish");
        }
        write!(f, "{} nonzero component(s):", self.failures.len())?;
        for failure in &self.failures {
            write!(f, " {failure};")?;
        }
        Ok(())
    }
}
