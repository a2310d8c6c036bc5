//! Plain-text report rendering. Layouts are stable: the summary table is
//! compared against golden files byte for byte.

use crate::dto::Binding;
use doublecheck::kinematics::KINEMATICAL_NAMES;
use doublecheck::{
    BilinearForm, ContractionResult, LieAlgebra, Limit, LimitClass, Scalar, Table2Row,
    VerificationReport,
};
use std::fmt::Write;

pub fn kin_names() -> Vec<String> {
    KINEMATICAL_NAMES.iter().map(|n| n.to_string()).collect()
}

/// One summand of a linear combination as (is-negative, magnitude). The sign
/// moves out only for single-atom coefficient renderings; anything with
/// spaces is parenthesized whole.
fn atom(coef: &Scalar, symbol: &str) -> (bool, String) {
    let text = coef.to_string();
    if text.contains(' ') {
        return (false, format!("({text})*{symbol}"));
    }
    match text.strip_prefix('-') {
        Some("1") => (true, symbol.to_string()),
        Some(mag) => (true, format!("{mag}*{symbol}")),
        None if text == "1" => (false, symbol.to_string()),
        None => (false, format!("{text}*{symbol}")),
    }
}

/// Linear combination of named symbols; zero coefficients are dropped and
/// an all-zero combination renders as "0".
pub fn combination(terms: &[(Scalar, &str)]) -> String {
    let mut out = String::new();
    for (coef, symbol) in terms {
        if coef.is_zero() {
            continue;
        }
        let (neg, text) = atom(coef, symbol);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn pairing_combo(pair: &(Scalar, Scalar)) -> String {
    combination(&[(pair.0.clone(), "<,>_t"), (pair.1.clone(), "<,>_s")])
}

/// Nonzero brackets of the algebra, one line per generator pair.
pub fn bracket_lines(alg: &LieAlgebra) -> Vec<String> {
    let names = alg.names();
    let mut out = Vec::new();
    for i in 0..alg.dim() {
        for j in (i + 1)..alg.dim() {
            let terms: Vec<(Scalar, &str)> = (0..alg.dim())
                .filter(|&k| !alg.c(i, j, k).is_zero())
                .map(|k| (alg.c(i, j, k).clone(), names[k].as_str()))
                .collect();
            if terms.is_empty() {
                continue;
            }
            out.push(format!(
                "[{}, {}] = {}",
                names[i],
                names[j],
                combination(&terms)
            ));
        }
    }
    out
}

/// Nonzero entries of a symmetric form, upper triangle only.
pub fn pairing_lines(form: &BilinearForm, names: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..form.dim() {
        for j in i..form.dim() {
            let v = form.get(i, j);
            if !v.is_zero() {
                out.push(format!("<{}, {}> = {}", names[i], names[j], v));
            }
        }
    }
    out
}

fn bindings_line(out: &mut String, indent: &str, bindings: &[Binding]) {
    if bindings.is_empty() {
        return;
    }
    let list = bindings
        .iter()
        .map(|b| format!("{} = {}", b.name, b.value))
        .collect::<Vec<_>>()
        .join(", ");
    let _ = writeln!(out, "{indent}bindings   {list}");
}

pub fn verify(report: &VerificationReport, bindings: &[Binding]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "case {}", report.label());
    bindings_line(&mut out, "  ", bindings);
    for check in &report.checks {
        let status = if check.passed { "pass" } else { "FAIL" };
        let mut line = format!("  {:<25}  {}  {:>5} ms", check.name, status, check.millis);
        if !check.details.is_empty() {
            line.push_str("  ");
            line.push_str(&check.details);
        }
        out.push_str(line.trim_end());
        out.push('\n');
        if !check.passed {
            for failure in &check.residuals.failures {
                let _ = writeln!(out, "      residual {failure}");
            }
        }
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    let verdict = if report.passed() { "pass" } else { "FAIL" };
    let _ = writeln!(out, "result: {verdict} ({passed}/{} checks)", report.checks.len());
    out
}

pub fn table2(rows: &[Table2Row]) -> String {
    let names = kin_names();
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "case {}", row.label());
        let _ = writeln!(out, "  double     {}", row.double_name);
        let _ = writeln!(
            out,
            "  metric     ({}, {}, {})",
            row.metric[0], row.metric[1], row.metric[2]
        );
        let _ = writeln!(out, "  lambda     {}", row.lambda);
        let _ = writeln!(out, "  pairing    {}", pairing_combo(&row.pairing));
        let _ = writeln!(out, "  r'         {}", row.r_skew.render_wedges(&names));
        let _ = writeln!(out, "  spacetime  {}", row.spacetime);
        let _ = writeln!(out, "  limit lambda -> 0");
        let _ = writeln!(out, "    algebra    {}", row.limit.algebra);
        match &row.limit.pairing {
            Some(pair) => {
                let _ = writeln!(out, "    pairing    {}", pairing_combo(pair));
            }
            None => {
                let _ = writeln!(out, "    pairing    None");
            }
        }
        match &row.limit.r_skew {
            Some(t) => {
                let wedges = t.render_wedges(&names);
                if row.limit.note.is_empty() {
                    let _ = writeln!(out, "    r'         {wedges}");
                } else {
                    let _ = writeln!(out, "    r'         {wedges}  (at {})", row.limit.note);
                }
            }
            None => {
                let _ = writeln!(out, "    r'         None");
            }
        }
        let _ = writeln!(out, "    spacetime  {}", row.limit.spacetime);
    }
    out
}

pub fn contract(label: &str, bindings: &[Binding], result: &ContractionResult) -> String {
    let names = kin_names();
    let mut out = String::new();
    let _ = writeln!(out, "case {label}, scale limit s -> 0");
    bindings_line(&mut out, "  ", bindings);
    match &result.algebra_limit {
        Limit::Finite(alg) => {
            let class = match result.classified_as {
                LimitClass::Divergent => "finite".to_string(),
                c => c.to_string(),
            };
            let _ = writeln!(out, "  algebra    {class}");
            for line in bracket_lines(alg) {
                let _ = writeln!(out, "    {line}");
            }
        }
        Limit::Divergent => {
            let _ = writeln!(out, "  algebra    divergent");
        }
    }
    match &result.pairing_limit {
        Limit::Finite(form) => {
            let _ = writeln!(out, "  pairing");
            for line in pairing_lines(form, &names) {
                let _ = writeln!(out, "    {line}");
            }
        }
        Limit::Divergent => {
            let _ = writeln!(out, "  pairing    divergent");
        }
    }
    match &result.r_skew_limit {
        Limit::Finite(t) => {
            let _ = writeln!(out, "  r'         {}", t.render_wedges(&names));
        }
        Limit::Divergent => {
            let _ = writeln!(out, "  r'         divergent");
        }
    }
    out
}
