//! Subcommand bodies. Each returns the text to print and an exit code, so the
//! binary and the tests drive exactly the same code.

use std::path::PathBuf;

use orbitposet_core::{
    Bounds, CartanDatum, EmbeddingModel, Error, HeReport, OrbitSpace, ParabolicSet, RootSystem,
    WeylGroup,
};

use crate::modelfile::{self, ModelFileError};
use crate::render::{self, Criterion, LeqJson, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelSource {
    Wonderful,
    Group,
    File(PathBuf),
}

impl ModelSource {
    /// `wonderful`, `group`, or anything else as a path.
    pub fn from_arg(s: &str) -> Self {
        match s {
            "wonderful" => Self::Wonderful,
            "group" => Self::Group,
            path => Self::File(PathBuf::from(path)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub cartan: Option<String>,
    pub model: ModelSource,
    pub format: Format,
    pub bounds: Bounds,
}

impl RunConfig {
    pub fn new(cartan: Option<&str>, model: ModelSource) -> Self {
        Self {
            cartan: cartan.map(str::to_string),
            model,
            format: Format::Text,
            bounds: Bounds::default(),
        }
    }

    pub fn with_format(mut self, format: Format) -> Self {
        self.format = format;
        self
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    ModelFile(#[from] ModelFileError),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Core(e) if e.is_resource_bound() => EXIT_BOUND,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self { output, code: EXIT_OK }
    }

    fn verdict(output: String, passed: bool) -> Self {
        Self { output, code: if passed { EXIT_OK } else { EXIT_FAILED } }
    }
}

fn cartan_of(config: &RunConfig) -> Result<CartanDatum, CliError> {
    let name = config
        .cartan
        .as_deref()
        .ok_or_else(|| CliError::Usage("--cartan is required for builtin models".into()))?;
    modelfile::parse_cartan(name).map_err(CliError::Usage)
}

pub fn resolve_model(config: &RunConfig) -> Result<EmbeddingModel, CliError> {
    match &config.model {
        ModelSource::Wonderful => Ok(EmbeddingModel::wonderful(cartan_of(config)?)),
        ModelSource::Group => Ok(EmbeddingModel::group_only(cartan_of(config)?)),
        ModelSource::File(path) => {
            let model = modelfile::load_model(path)?;
            if config.cartan.is_some() && *model.cartan() != cartan_of(config)? {
                return Err(CliError::Usage(format!(
                    "--cartan {} conflicts with `cartan: {}` in {}",
                    config.cartan.as_deref().unwrap_or_default(),
                    model.cartan(),
                    path.display()
                )));
            }
            Ok(model)
        }
    }
}

fn space(config: &RunConfig) -> Result<OrbitSpace, CliError> {
    Ok(OrbitSpace::new(resolve_model(config)?, config.bounds)?)
}

fn reject_dot(config: &RunConfig, command: &str) -> Result<(), CliError> {
    if config.format == Format::Dot {
        return Err(CliError::Usage(format!("`{command}` has no dot output; use text or json")));
    }
    Ok(())
}

pub fn cmd_enum(config: &RunConfig) -> Result<Outcome, CliError> {
    reject_dot(config, "enum")?;
    let s = space(config)?;
    Ok(Outcome::ok(match config.format {
        Format::Json => render::enum_json(&s),
        _ => render::enum_text(&s),
    }))
}

/// Evaluates both closure criteria for "`lower` lies in the closure of `upper`".
pub fn cmd_leq(config: &RunConfig, upper: &str, lower: &str) -> Result<Outcome, CliError> {
    reject_dot(config, "leq")?;
    let s = space(config)?;
    let a = s.parse_orbit(upper)?;
    let b = s.parse_orbit(lower)?;
    let g = s.group();
    let u = s.closure_witness(&a, &b);
    let pair = s.bclosure_witness(&a, &b);
    let agree = u.is_some() == pair.is_some();
    let doc = LeqJson {
        schema_version: SCHEMA_VERSION,
        upper: s.format_orbit(&a),
        lower: s.format_orbit(&b),
        reformulation: Criterion {
            holds: u.is_some(),
            u: u.map(|x| g.format(x)),
            u_prime: None,
        },
        bclosure: Criterion {
            holds: pair.is_some(),
            u: pair.map(|(x, _)| g.format(x)),
            u_prime: pair.map(|(_, y)| g.format(y)),
        },
        agree,
    };
    let output = match config.format {
        Format::Json => render::leq_json(&doc),
        _ => render::leq_text(&doc),
    };
    Ok(Outcome::verdict(output, agree))
}

pub fn cmd_hasse(config: &RunConfig) -> Result<Outcome, CliError> {
    let s = space(config)?;
    let poset = s.build_poset()?;
    Ok(Outcome::ok(match config.format {
        Format::Dot => render::hasse_dot(&s, &poset),
        Format::Json => render::hasse_json(&s, &poset),
        Format::Text => render::hasse_text(&s, &poset),
    }))
}

pub fn cmd_verify(config: &RunConfig) -> Result<Outcome, CliError> {
    reject_dot(config, "verify")?;
    let s = space(config)?;
    let report = s.verify_suite()?;
    let output = match config.format {
        Format::Json => render::suite_json(&s, &report),
        _ => render::suite_text(&s, &report),
    };
    Ok(Outcome::verdict(output, report.all_passed()))
}

/// Every pair `inner ⊆ outer ⊆ I`, in subset order.
pub fn he_reports(g: &WeylGroup, max_search: u64) -> Result<Vec<HeReport>, Error> {
    let mut out = Vec::new();
    for outer in ParabolicSet::full(g.rank()).subsets() {
        for inner in outer.subsets() {
            out.push(g.verify_he_factorization(outer, inner, max_search)?);
        }
    }
    Ok(out)
}

pub fn cmd_he(config: &RunConfig) -> Result<Outcome, CliError> {
    reject_dot(config, "he")?;
    let cartan = match &config.model {
        ModelSource::File(_) => resolve_model(config)?.cartan().clone(),
        _ => cartan_of(config)?,
    };
    let g = WeylGroup::new(RootSystem::new(cartan)?, config.bounds.max_group)?;
    let reports = he_reports(&g, config.bounds.max_search)?;
    let output = match config.format {
        Format::Json => render::he_json(&g, &reports),
        _ => render::he_text(&g, &reports),
    };
    Ok(Outcome::verdict(output, reports.iter().all(HeReport::passed)))
}
