use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use fockbridge_core::Bindings;

use crate::error::CliError;

/// Which representation a command runs on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepSpec {
    Fermionic,
    Macdonald,
    /// `llt1:<n>`
    Llt(usize),
    /// `tensor:<rep>^<n>`
    Power(Box<RepSpec>, usize),
    /// `bundle:<path>`
    Bundle(PathBuf),
}

impl FromStr for RepSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        let count = |text: &str, what: &str| {
            text.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("`{text}` is not a valid {what} in rep `{s}`")))
        };
        if let Some(n) = s.strip_prefix("llt1:") {
            return Ok(RepSpec::Llt(count(n, "rank")?));
        }
        if let Some(rest) = s.strip_prefix("tensor:") {
            let (inner, n) = rest
                .rsplit_once('^')
                .ok_or_else(|| CliError::Usage(format!("rep `{s}` should look like tensor:<rep>^<n>")))?;
            return Ok(RepSpec::Power(Box::new(inner.parse()?), count(n, "power")?));
        }
        if let Some(path) = s.strip_prefix("bundle:") {
            return Ok(RepSpec::Bundle(PathBuf::from(path)));
        }
        match s {
            "fermionic" => Ok(RepSpec::Fermionic),
            "macdonald" => Ok(RepSpec::Macdonald),
            _ => Err(CliError::Usage(format!(
                "unknown rep `{s}`, expected fermionic, macdonald, llt1:<n>, tensor:<rep>^<n> or bundle:<path>"
            ))),
        }
    }
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepSpec::Fermionic => f.write_str("fermionic"),
            RepSpec::Macdonald => f.write_str("macdonald"),
            RepSpec::Llt(n) => write!(f, "llt1:{n}"),
            RepSpec::Power(inner, n) => write!(f, "tensor:{inner}^{n}"),
            RepSpec::Bundle(path) => write!(f, "bundle:{}", path.display()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    #[default]
    Text,
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct CliConfig {
    pub rep: RepSpec,
    pub degree_cap: usize,
    pub out: OutputFormat,
    pub bindings: Bindings,
}

impl CliConfig {
    /// Parses `--spec` entries such as `q=0`.
    pub fn bindings_from(specs: &[String]) -> Result<Bindings, CliError> {
        let mut b = Bindings::default();
        for s in specs {
            b.bind(s).map_err(|e| CliError::Usage(format!("--spec {s}: {e}")))?;
        }
        Ok(b)
    }
}
