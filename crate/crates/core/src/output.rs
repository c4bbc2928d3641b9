//! Rendering of results as JSON, CSV or a human-readable table.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bases::TransitionMatrix;
use crate::conjectures::ConjectureReport;
use crate::error::{Error, Result};
use crate::pasep::StationaryReport;
use crate::qpoly::{q_int, LaurentQPoly};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "pretty" => Ok(Format::Pretty),
            other => Err(Error::Parse(format!("unknown format `{other}` (expected json, csv or pretty)"))),
        }
    }
}

/// Tableau polynomials for one shape, from the closed form, brute force or
/// both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialReport {
    /// `A` or `B`.
    #[serde(rename = "type")]
    pub kind: String,
    pub composition: String,
    pub widths: Vec<usize>,
    pub closed: Option<LaurentQPoly>,
    pub brute: Option<LaurentQPoly>,
    pub count: Option<String>,
    pub matches: Option<bool>,
}

/// Conjecture reports with the F/E consistency check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureDocument {
    pub experimental: bool,
    pub reports: Vec<ConjectureReport>,
    pub consistency: Option<CheckReport>,
    /// Set when some conjecture fails on some cell.
    pub finding: Option<String>,
}

impl ConjectureDocument {
    pub fn new(reports: Vec<ConjectureReport>, consistency: Option<CheckReport>) -> Self {
        let finding = reports
            .iter()
            .filter(|r| !r.all_match())
            .map(|r| r.to_string())
            .reduce(|a, b| format!("{a}; {b}"));
        Self { experimental: true, reports, consistency, finding }
    }
}

/// Writes `p` as a product of a signed monomial and `[k]` factors where
/// possible, e.g. `q [2][3]` for `q + 2q^2 + 2q^3 + q^4`. The cofactor that
/// no `[k]` divides is printed in parentheses.
pub fn bracket_form(p: &LaurentQPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let lo = p.min_exponent().unwrap_or(0);
    let mut rest = p.shift(-lo);
    let mut factors: Vec<usize> = Vec::new();
    let mut k = rest.degree().unwrap_or(0) as usize + 1;
    while k >= 2 {
        match rest.checked_div(&q_int(k)) {
            Some(quot) => {
                factors.push(k);
                rest = quot;
                k = k.min(rest.degree().unwrap_or(0) as usize + 1);
            }
            None => k -= 1,
        }
    }
    factors.sort_unstable();
    let mut out = String::new();
    let brackets: String = factors.iter().map(|k| format!("[{k}]")).collect();
    let monomial = match lo {
        0 => String::new(),
        1 => "q".into(),
        e => format!("q^{e}"),
    };
    if rest.is_one() {
        out.push_str(&monomial);
        if !brackets.is_empty() && !monomial.is_empty() {
            out.push(' ');
        }
        out.push_str(&brackets);
        if out.is_empty() {
            out.push('1');
        }
    } else if rest == -LaurentQPoly::one() {
        out.push('-');
        out.push_str(&monomial);
        if !brackets.is_empty() && !monomial.is_empty() {
            out.push(' ');
        }
        out.push_str(&brackets);
        if out == "-" {
            out.push('1');
        }
    } else if rest.num_terms() == 1 {
        let c = rest.coefficient(0);
        let _ = write!(out, "{c}");
        if !monomial.is_empty() {
            let _ = write!(out, "{monomial}");
        }
        out.push_str(&brackets);
    } else {
        out.push_str(&monomial);
        if !monomial.is_empty() {
            out.push(' ');
        }
        out.push_str(&brackets);
        let _ = write!(out, "({rest})");
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))
}

pub fn render_matrix(m: &TransitionMatrix, format: Format) -> Result<String> {
    match format {
        Format::Json => json(m),
        Format::Csv => {
            let mut out = String::from("row");
            for j in m.order() {
                let _ = write!(out, ",{}", j.label());
            }
            out.push('\n');
            for (i, row) in m.order().iter().zip(m.rows()) {
                out.push_str(&i.label());
                for v in row {
                    let _ = write!(out, ",{}", csv_field(&v.to_string()));
                }
                out.push('\n');
            }
            Ok(out)
        }
        Format::Pretty => {
            let cells: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(bracket_form).collect()).collect();
            let labels: Vec<String> = m.order().iter().map(|c| c.label()).collect();
            let lw = labels.iter().map(String::len).max().unwrap_or(0);
            let widths: Vec<usize> = (0..m.size())
                .map(|c| cells.iter().map(|r| r[c].len()).chain([labels[c].len()]).max().unwrap_or(0))
                .collect();
            let mut out = format!("M({}, {}), n = {}\n", m.from_basis(), m.to_basis(), m.n());
            let _ = write!(out, "{:lw$}", "");
            for (l, w) in labels.iter().zip(&widths) {
                let _ = write!(out, "  {l:>w$}");
            }
            out.push('\n');
            for (l, row) in labels.iter().zip(&cells) {
                let _ = write!(out, "{l:lw$}");
                for (v, w) in row.iter().zip(&widths) {
                    let _ = write!(out, "  {v:>w$}");
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

pub fn render_polynomials(reports: &[PolynomialReport], format: Format) -> Result<String> {
    match format {
        Format::Json => json(&reports),
        Format::Csv => {
            let mut out = String::from("type,composition,closed,brute,count,matches\n");
            for r in reports {
                let opt = |p: &Option<LaurentQPoly>| p.as_ref().map(|p| csv_field(&p.to_string())).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.kind,
                    r.composition,
                    opt(&r.closed),
                    opt(&r.brute),
                    r.count.clone().unwrap_or_default(),
                    r.matches.map(|b| b.to_string()).unwrap_or_default()
                );
            }
            Ok(out)
        }
        Format::Pretty => {
            let mut out = String::new();
            for r in reports {
                let _ = writeln!(out, "PT^{}_({}), shape {:?}", r.kind, r.composition, r.widths);
                if let Some(p) = &r.closed {
                    let _ = writeln!(out, "  closed: {p} = {}", bracket_form(p));
                }
                if let Some(p) = &r.brute {
                    let _ = writeln!(out, "  brute:  {p}");
                }
                if let Some(c) = &r.count {
                    let _ = writeln!(out, "  count:  {c}");
                }
                if let Some(m) = r.matches {
                    let _ = writeln!(out, "  match:  {}", if m { "yes" } else { "NO" });
                }
            }
            Ok(out)
        }
    }
}

pub fn render_stationary(r: &StationaryReport, format: Format) -> Result<String> {
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let mut out = String::from("state,composition,formula,formula_value,solver,solver_value,gap\n");
            for s in &r.states {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    s.state,
                    s.composition,
                    s.formula,
                    s.formula_value,
                    s.solver.clone().unwrap_or_default(),
                    s.solver_value.map(|v| v.to_string()).unwrap_or_default(),
                    s.gap.map(|v| v.to_string()).unwrap_or_default()
                );
            }
            Ok(out)
        }
        Format::Pretty => {
            let mut out = format!("PASEP n = {}, q = {}, method = {:?}\n", r.n, r.q, r.method);
            for s in &r.states {
                let _ = write!(out, "  {}  ({:>9})  {:>14}", s.state, s.composition, s.formula);
                if let Some(v) = &s.solver {
                    let _ = write!(out, "  solver {v}");
                }
                if let Some(g) = s.gap {
                    let _ = write!(out, "  gap {g:.3e}");
                }
                out.push('\n');
            }
            if let Some(m) = r.exact_match {
                let _ = writeln!(out, "exact agreement: {}", if m { "yes" } else { "NO" });
            }
            if let Some(tv) = r.total_variation {
                let _ = writeln!(out, "total variation: {tv:.3e}");
            }
            if let Some(mc) = &r.monte_carlo {
                if mc.insufficient {
                    let _ = writeln!(out, "warning: {} steps is below the recommended 10^6", mc.steps);
                }
            }
            Ok(out)
        }
    }
}

pub fn render_conjectures(doc: &ConjectureDocument, format: Format) -> Result<String> {
    match format {
        Format::Json => json(doc),
        Format::Csv => {
            let mut out = String::from("conjecture,n,I,J,lhs,rhs,match\n");
            for r in &doc.reports {
                for c in &r.cells {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        r.conjecture,
                        r.n,
                        c.i.label(),
                        c.j.label(),
                        csv_field(&c.lhs.to_string()),
                        csv_field(&c.rhs.to_string()),
                        c.matches
                    );
                }
            }
            Ok(out)
        }
        Format::Pretty => {
            let mut out = String::from("EXPERIMENTAL: conjectured interpretations, not theorems\n");
            for r in &doc.reports {
                let _ = writeln!(out, "{r}");
            }
            if let Some(c) = &doc.consistency {
                let _ = writeln!(out, "{c}");
            }
            if let Some(f) = &doc.finding {
                let _ = writeln!(out, "finding: {f}");
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lo: i64, c: &[i64]) -> LaurentQPoly {
        LaurentQPoly::from_coeffs(lo, c.iter().copied())
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket_form(&p(0, &[1])), "1");
        assert_eq!(bracket_form(&p(0, &[0])), "0");
        assert_eq!(bracket_form(&p(0, &[1, 1])), "[2]");
        assert_eq!(bracket_form(&p(1, &[1, 2, 2, 1])), "q [2][3]");
        assert_eq!(bracket_form(&p(0, &[2, 1])), "(2+q)");
        assert_eq!(bracket_form(&p(2, &[3])), "3q^2");
        assert_eq!(bracket_form(&p(-1, &[-1])), "-q^-1");
        assert_eq!(bracket_form(&p(0, &[2, 2])), "2[2]");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("1+q"), "1+q");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
    }
}
