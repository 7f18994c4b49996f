//! A loaded representation behind a type-erased interface, so one set of
//! commands serves every `--rep`.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use fockbridge_core::heisenberg::{HModule, HeisenbergParams, Representation};
use fockbridge_core::identities::{
    diagnose_converse, verify_bf, verify_cauchy, verify_du, verify_heisenberg, verify_pieri, ConverseReport,
    VerifyReport,
};
use fockbridge_core::reps::{
    extract_bundle, BundleRep, FermionicRep, LltRep, MacdonaldRep, MatrixBundle, Specialized, TensorPower,
};
use fockbridge_core::symfunc::{degree_cap, Basis, SymFunc};
use fockbridge_core::{Bindings, Error, Scalar};

use crate::config::RepSpec;
use crate::error::{CliError, CliResult};
use crate::json::BundleJson;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Which {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "G", alias = "g")]
    G,
}

/// A verifier suite with its bounds.
#[derive(Clone, Debug)]
pub enum Suite {
    Pieri {
        k_max: u32,
        d_max: i64,
    },
    Du {
        ab_max: u32,
        d_max: i64,
    },
    Heisenberg {
        k_max: u32,
        d_max: i64,
    },
    Bf {
        d_max: i64,
        l_set: Vec<i64>,
    },
    Cauchy {
        x_vars: usize,
        y_vars: usize,
        d_max: u32,
        base: Option<String>,
        other: Option<String>,
    },
    Converse {
        k_max: u32,
        d_max: i64,
        params: Option<HeisenbergParams>,
    },
}

pub enum Outcome {
    Report(VerifyReport),
    Converse(Box<ConverseReport>),
}

impl Outcome {
    pub fn passed(&self) -> bool {
        match self {
            Outcome::Report(r) => r.passed(),
            Outcome::Converse(c) => c.heisenberg_action() && c.pieri_holds() && c.cauchy_holds(),
        }
    }
}

pub trait Session {
    fn name(&self) -> String;
    fn expand(&self, shape: &str, base: Option<&str>, which: Which, basis: Basis) -> CliResult<SymFunc>;
    /// `⟨U_{α_l} ⋯ U_{α_1} v_base, v_shape⟩`
    fn tableaux(&self, shape: &str, base: Option<&str>, weight: &[u32]) -> CliResult<Scalar>;
    fn verify(&self, suite: &Suite) -> CliResult<Outcome>;
    fn bundle(&self, d_max: i64, k_max: u32) -> CliResult<MatrixBundle>;
}

struct Loaded<R: Representation> {
    module: Arc<HModule<R>>,
    /// The bundle a `bundle:` rep was read from, used as is by the converse.
    bundle: Option<MatrixBundle>,
}

impl<R: Representation> Loaded<R> {
    fn index(&self, text: &str) -> CliResult<R::Index> {
        self.module.rep().parse_index(text).map_err(|e| {
            CliError::Usage(format!(
                "`{text}` is not a basis index of {}: {e}",
                self.module.rep().name()
            ))
        })
    }

    fn base(&self, text: Option<&str>) -> CliResult<R::Index> {
        match text {
            Some(t) => self.index(t),
            None => Ok(self.module.rep().highest().ok_or(Error::NoHighestWeight)?),
        }
    }

    /// Rejects bounds whose symmetric functions would pass the degree cap.
    fn check_cap(&self, d_max: i64) -> CliResult<()> {
        let rep = self.module.rep();
        let degree = (d_max - rep.lowest_degree()).max(0) / rep.degree_step();
        let cap = degree_cap();
        if degree as usize > cap {
            return Err(CliError::Usage(format!(
                "--dmax {d_max} needs symmetric functions of degree {degree}, above the degree cap {cap}"
            )));
        }
        Ok(())
    }
}

impl<R: Representation> Session for Loaded<R> {
    fn name(&self) -> String {
        self.module.rep().name()
    }

    fn expand(&self, shape: &str, base: Option<&str>, which: Which, basis: Basis) -> CliResult<SymFunc> {
        let (s, t) = (self.index(shape)?, self.base(base)?);
        let f = match which {
            Which::F => self.module.compute_f(&s, &t)?,
            Which::G => self.module.compute_g(&s, &t)?,
        };
        Ok(f.convert(basis)?)
    }

    fn tableaux(&self, shape: &str, base: Option<&str>, weight: &[u32]) -> CliResult<Scalar> {
        let (s, t) = (self.index(shape)?, self.base(base)?);
        Ok(self.module.monomial_coeff(&s, &t, weight)?)
    }

    fn verify(&self, suite: &Suite) -> CliResult<Outcome> {
        let m = &*self.module;
        let report = match suite {
            Suite::Pieri { k_max, d_max } => {
                self.check_cap(*d_max)?;
                verify_pieri(m, *k_max, *d_max)?
            }
            Suite::Du { ab_max, d_max } => {
                self.check_cap(*d_max)?;
                verify_du(m, *ab_max, *d_max)?
            }
            Suite::Heisenberg { k_max, d_max } => {
                self.check_cap(*d_max)?;
                verify_heisenberg(m, *k_max, *d_max)?
            }
            Suite::Bf { d_max, l_set } => {
                self.check_cap(*d_max)?;
                verify_bf(m, *d_max, l_set)?
            }
            Suite::Cauchy {
                x_vars,
                y_vars,
                d_max,
                base,
                other,
            } => {
                let cap = degree_cap();
                if *d_max as usize > cap {
                    return Err(CliError::Usage(format!("--dmax {d_max} is above the degree cap {cap}")));
                }
                let (t, r) = (self.base(base.as_deref())?, self.base(other.as_deref())?);
                verify_cauchy(m, *x_vars, *y_vars, *d_max, &t, &r)?
            }
            Suite::Converse { k_max, d_max, params } => {
                self.check_cap(*d_max)?;
                let bundle = match &self.bundle {
                    Some(b) => b.clone(),
                    None => extract_bundle(m, *d_max, (*k_max).max(*d_max as u32))?,
                };
                let params = params.clone().unwrap_or_else(|| bundle.params.clone());
                return Ok(Outcome::Converse(Box::new(diagnose_converse(
                    &bundle, &params, *d_max,
                )?)));
            }
        };
        Ok(Outcome::Report(report))
    }

    fn bundle(&self, d_max: i64, k_max: u32) -> CliResult<MatrixBundle> {
        Ok(extract_bundle(&*self.module, d_max, k_max)?)
    }
}

fn finish<R: Representation + 'static>(
    rep: R,
    bundle: Option<MatrixBundle>,
    bindings: &Bindings,
) -> CliResult<Box<dyn Session>> {
    let module = Arc::new(HModule::new(rep));
    if bindings.is_empty() {
        return Ok(Box::new(Loaded { module, bundle }));
    }
    let special = Specialized::new(module, bindings.clone())?;
    Ok(Box::new(Loaded {
        module: Arc::new(HModule::new(special)),
        bundle: None,
    }))
}

/// Reads and validates a matrix bundle; any problem is a usage error.
pub fn read_bundle(path: &Path) -> CliResult<MatrixBundle> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let bad = |msg: String| CliError::BadBundle {
        path: path.to_path_buf(),
        msg,
    };
    let json: BundleJson = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    MatrixBundle::try_from(&json).map_err(|e| bad(e.to_string()))
}

fn power<R: Representation + 'static>(factor: R, n: usize, bindings: &Bindings) -> CliResult<Box<dyn Session>> {
    let power = TensorPower::new(Arc::new(HModule::new(factor)), n).map_err(|e| CliError::Usage(e.to_string()))?;
    finish(power, None, bindings)
}

/// Builds the representation named by `spec`, specialized by `bindings`.
pub fn load(spec: &RepSpec, bindings: &Bindings) -> CliResult<Box<dyn Session>> {
    let usage = |e: Error| CliError::Usage(format!("rep {spec}: {e}"));
    match spec {
        RepSpec::Fermionic => finish(FermionicRep::new(), None, bindings),
        RepSpec::Macdonald => finish(MacdonaldRep::new(), None, bindings),
        RepSpec::Llt(n) => finish(LltRep::new(*n).map_err(usage)?, None, bindings),
        RepSpec::Bundle(path) => {
            let bundle = read_bundle(path)?;
            let rep = BundleRep::new(bundle.clone()).map_err(|e| CliError::BadBundle {
                path: path.clone(),
                msg: e.to_string(),
            })?;
            finish(rep, Some(bundle), bindings)
        }
        RepSpec::Power(inner, n) => match &**inner {
            RepSpec::Fermionic => power(FermionicRep::new(), *n, bindings),
            RepSpec::Macdonald => power(MacdonaldRep::new(), *n, bindings),
            RepSpec::Llt(m) => power(LltRep::new(*m).map_err(usage)?, *n, bindings),
            RepSpec::Bundle(path) => {
                let rep = BundleRep::new(read_bundle(path)?).map_err(usage)?;
                power(rep, *n, bindings)
            }
            RepSpec::Power(..) => Err(CliError::Usage(format!(
                "rep {spec}: tensor powers of tensor powers are not supported"
            ))),
        },
    }
}
