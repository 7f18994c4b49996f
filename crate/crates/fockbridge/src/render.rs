//! Text and JSON output of command results.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use fockbridge_core::partition::{format_sequence, Partition};
use fockbridge_core::symfunc::SymFunc;
use fockbridge_core::Scalar;

use crate::config::OutputFormat;
use crate::json::{ReportJson, SymFuncJson};
use crate::session::Outcome;

/// Output of `tableaux`; `chains` is only present for the Fermionic rep.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct TableauxJson {
    pub coefficient: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chains: Option<Vec<Vec<Vec<u32>>>>,
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes") + "\n"
}

pub fn symfunc(f: &SymFunc, out: OutputFormat) -> String {
    match out {
        OutputFormat::Json => pretty(&SymFuncJson::from(f)),
        OutputFormat::Text => format!("{f}\n"),
    }
}

pub fn tableaux(coefficient: &Scalar, chains: Option<&[Vec<Partition>]>, out: OutputFormat) -> String {
    match out {
        OutputFormat::Json => pretty(&TableauxJson {
            coefficient: coefficient.to_string(),
            chains: chains.map(|cs| {
                cs.iter()
                    .map(|c| c.iter().map(|p| p.parts().to_vec()).collect())
                    .collect()
            }),
        }),
        OutputFormat::Text => {
            let mut s = format!("coefficient: {coefficient}\n");
            if let Some(cs) = chains {
                let _ = writeln!(s, "chains: {}", cs.len());
                for c in cs {
                    let _ = writeln!(s, "  {}", format_sequence(c));
                }
            }
            s
        }
    }
}

fn report_text(r: &ReportJson, indent: &str, s: &mut String) {
    let verdict = if r.passed { "PASS" } else { "FAIL" };
    let _ = write!(s, "{indent}{}: {verdict}, {} instances checked", r.identity, r.checked);
    if !r.failures.is_empty() {
        let _ = write!(s, ", {} failures", r.failures.len());
    }
    s.push('\n');
    for f in &r.failures {
        let _ = writeln!(s, "{indent}  {}", f.instance);
        let _ = writeln!(s, "{indent}    lhs: {}", f.lhs);
        let _ = writeln!(s, "{indent}    rhs: {}", f.rhs);
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn outcome(o: &Outcome, out: OutputFormat) -> String {
    let json = match o {
        Outcome::Report(r) => ReportJson::from(r),
        Outcome::Converse(c) => ReportJson::from(&**c),
    };
    if out == OutputFormat::Json {
        return pretty(&json);
    }
    let mut s = String::new();
    match &json.converse {
        None => report_text(&json, "", &mut s),
        Some(c) => {
            let verdict = if json.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "converse: {verdict}");
            let degrees: Vec<String> = c
                .independence
                .iter()
                .map(|d| format!("{}:{}", d.degree, yes(d.independent)))
                .collect();
            let _ = writeln!(s, "  independent G' per degree: {}", degrees.join(" "));
            let _ = writeln!(s, "  Heisenberg action: {}", yes(c.heisenberg_action));
            let _ = writeln!(s, "  Pieri rules: {}", yes(c.pieri));
            let _ = writeln!(s, "  Cauchy identities: {}", yes(c.cauchy));
            let _ = writeln!(s, "  conditions agree: {}", yes(c.equivalent));
            for r in &c.reports {
                report_text(r, "  ", &mut s);
            }
        }
    }
    s
}
