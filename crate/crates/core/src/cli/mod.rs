//! Command-line front end.

mod corpus;
mod report;

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::engine::{
    asymptotic_order, bound_chain, check_w_matching, gradient_ideals, loj_gradient,
    loj_monomial_ideal, loj_relative_ideal, loj_set, matching_coordinate_change, BoundChain,
    GradientOptions, LojSetOptions, OrderArgument, OrderMode,
};
use crate::error::{Error, Result};
use crate::extended::Extended;
use crate::geometry::MonomialIdeal;
use crate::multiplicity::{
    colength, oracle_generic_multiplicity, r_number_with_sigma, samuel_multiplicity, sigma_seeded,
    GenericOutcome, IdealTuple, DEFAULT_SEED,
};
use crate::poly::{parse_polynomial, Polynomial, Weights};

pub use corpus::{worked_examples, CorpusItem};
pub use report::{JsonNumber, JsonTrace, JsonWitness, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Exact Łojasiewicz exponents of monomial ideal tuples and gradients.
#[derive(Debug, Clone, Parser)]
#[command(name = "lojex", version)]
pub struct CommandRequest {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for engine-level parallelism.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct Inputs {
    /// Weight vector `w1,...,wn`.
    #[arg(long, value_delimiter = ',')]
    pub weights: Option<Vec<u64>>,
    /// Expected weighted degree.
    #[arg(long)]
    pub degree: Option<u64>,
    /// Polynomial, e.g. `x^2 + y^3`.
    #[arg(long)]
    pub function: Option<String>,
    /// Monomial generators, e.g. `x^4, y^2`.
    #[arg(long)]
    pub gens: Option<String>,
    /// Ideal tuple: ideals separated by `|`, generators by `,`.
    #[arg(long)]
    pub ideals: Option<String>,
    /// The ideal `J` of a relative exponent (default: the maximal ideal).
    #[arg(long)]
    pub relative_ideal: Option<String>,
    /// Search powers `s = 1..=smax` instead of the default schedule.
    #[arg(long)]
    pub smax: Option<u32>,
    /// Ambient dimension when it cannot be read off the inputs.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Skip the isolated-singularity check.
    #[arg(long)]
    pub assume_isolated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdealOp {
    /// `𝓛₀(I)` of a finite-colength ideal.
    L0,
    /// `𝓛_J(I)` for `--relative-ideal J`.
    Relative,
    /// `ν̄_I` of `--function`, of `--relative-ideal`, or of the maximal ideal.
    Order,
    /// Samuel multiplicity `e(I)`.
    Multiplicity,
    /// `dim O/I`.
    Colength,
    /// Vertices, compact facets and covolume of `Γ₊(I)`.
    Newton,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Łojasiewicz exponent of a gradient (`--function`) or a tuple (`--ideals`).
    Exponent(Inputs),
    /// Invariants of a single monomial ideal.
    Ideal {
        #[arg(value_enum)]
        op: IdealOp,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Mixed multiplicity σ of a tuple, checked against generic elements.
    Sigma(Inputs),
    /// w-matching test and the bound chain of a tuple.
    Matching(Inputs),
    /// Coordinate change making a weighted homogeneous germ convenient.
    Transform(Inputs),
    /// Replays the worked examples.
    Corpus,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Exponent(_) => "exponent",
            Command::Ideal { .. } => "ideal",
            Command::Sigma(_) => "sigma",
            Command::Matching(_) => "matching",
            Command::Transform(_) => "transform",
            Command::Corpus => "corpus",
        }
    }

    fn inputs(&self) -> Option<&Inputs> {
        match self {
            Command::Exponent(i)
            | Command::Sigma(i)
            | Command::Matching(i)
            | Command::Transform(i)
            | Command::Ideal { inputs: i, .. } => Some(i),
            Command::Corpus => None,
        }
    }
}

/// Exit code plus the report to print.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: Report,
}

impl Outcome {
    pub fn render(&self, json: bool) -> String {
        if json {
            self.report.to_json()
        } else {
            self.report.to_human()
        }
    }
}

/// Parses `args` (program name first), runs the command and prints the result.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let req = match CommandRequest::try_parse_from(args) {
        Ok(r) => r,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let out = run_command(&req);
    print!("{}", out.render(req.json));
    out.exit_code
}

fn exit_code_of(e: &Error) -> i32 {
    match e {
        Error::Hypothesis(_) => EXIT_HYPOTHESIS,
        Error::ResourceCap(_) => EXIT_RESOURCE,
        _ => EXIT_INPUT,
    }
}

fn inputs_json(req: &CommandRequest) -> Value {
    let mut v = json!({ "seed": req.seed });
    if let Command::Ideal { op, .. } = &req.command {
        v["op"] = json!(format!("{op:?}").to_lowercase());
    }
    if let Some(i) = req.command.inputs() {
        let fields = [
            ("function", i.function.clone()),
            ("gens", i.gens.clone()),
            ("ideals", i.ideals.clone()),
            ("relative_ideal", i.relative_ideal.clone()),
        ];
        for (k, val) in fields {
            if let Some(s) = val {
                v[k] = json!(s);
            }
        }
        if let Some(w) = &i.weights {
            v["weights"] = json!(w);
        }
        if let Some(d) = i.degree {
            v["degree"] = json!(d);
        }
        if let Some(s) = i.smax {
            v["smax"] = json!(s);
        }
        if let Some(d) = i.dim {
            v["dim"] = json!(d);
        }
        if i.assume_isolated {
            v["assume_isolated"] = json!(true);
        }
    }
    v
}

/// Runs one request deterministically; never panics on bad input.
pub fn run_command(req: &CommandRequest) -> Outcome {
    let mut report = Report::new(req.command.name(), inputs_json(req));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(req.jobs.max(1))
        .build();
    let result = match pool {
        Ok(pool) => pool.install(|| dispatch(req, &mut report)),
        Err(e) => Err(Error::InvalidArgument(format!("thread pool: {e}"))),
    };
    let exit_code = match result {
        Ok(code) => code,
        Err(e) => {
            report.warnings.push(e.to_string());
            report.detail("error", error_kind(&e));
            exit_code_of(&e)
        }
    };
    Outcome { exit_code, report }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::DimensionMismatch { .. } => "dimension",
        Error::AxisOutOfRange { .. } => "axis",
        Error::ZeroInput(_) => "zero-input",
        Error::InvalidArgument(_) => "invalid-argument",
        Error::InfiniteColength(_) => "infinite-colength",
        Error::Hypothesis(_) => "hypothesis",
        Error::Inconsistent(_) => "inconsistent",
        Error::ResourceCap(_) => "resource-cap",
    }
}

fn dispatch(req: &CommandRequest, report: &mut Report) -> Result<i32> {
    let seed = req.seed;
    match &req.command {
        Command::Exponent(i) => exponent(i, seed, report),
        Command::Ideal { op, inputs } => ideal(*op, inputs, report),
        Command::Sigma(i) => sigma_cmd(i, seed, report),
        Command::Matching(i) => matching(i, report),
        Command::Transform(i) => transform(i, seed, report),
        Command::Corpus => corpus_cmd(seed, report),
    }
}

fn missing(flag: &str) -> Error {
    Error::InvalidArgument(format!("missing --{flag}"))
}

fn weights_of(i: &Inputs) -> Result<Option<Weights>> {
    i.weights.clone().map(Weights::new).transpose()
}

fn function_of(i: &Inputs, dim: Option<usize>) -> Result<Polynomial> {
    let text = i.function.as_deref().ok_or_else(|| missing("function"))?;
    parse_polynomial(text, dim.or(i.dim))
}

fn tuple_of(i: &Inputs, w: Option<&Weights>) -> Result<IdealTuple> {
    let text = i.ideals.as_deref().ok_or_else(|| missing("ideals"))?;
    let t = IdealTuple::parse(text)?;
    if let Some(w) = w {
        Error::check_dim(w.dim(), t.dim())?;
    }
    Ok(t)
}

fn relative_of(i: &Inputs, dim: usize) -> Result<MonomialIdeal> {
    match &i.relative_ideal {
        Some(text) => {
            let j = MonomialIdeal::parse(text, Some(dim))?;
            Error::check_dim(dim, j.dim())?;
            Ok(j)
        }
        None => Ok(MonomialIdeal::maximal(dim)),
    }
}

fn rational(q: &BigRational) -> Value {
    serde_json::to_value(JsonNumber::rational(q)).expect("number serializes")
}

fn ext_int(v: &Extended<BigInt>) -> Value {
    serde_json::to_value(JsonNumber::from_extended_int(v)).expect("number serializes")
}

fn chain_details(chain: &BoundChain, report: &mut Report) {
    report.detail("degrees", json!(chain.degrees));
    report.detail("bound", rational(&chain.value_bound));
    report.detail("sigma_tuple", ext_int(&chain.sigma_tuple));
    report.detail("sigma_lower", ext_int(&chain.sigma_lower));
    report.detail("hypotheses_hold", chain.hypotheses_hold());
    report.detail("chain_exact", chain.is_exact());
    report.detail(
        "lower_pieces",
        json!(chain
            .lower_pieces
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()),
    );
    report.detail(
        "upper_pieces",
        json!(chain
            .upper_pieces
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()),
    );
    report.warnings.extend(chain.warnings.iter().cloned());
}

fn status(report: &Report) -> i32 {
    if report.warnings.is_empty() {
        EXIT_OK
    } else {
        EXIT_HYPOTHESIS
    }
}

fn exponent(i: &Inputs, seed: u64, report: &mut Report) -> Result<i32> {
    let w = weights_of(i)?;
    if i.function.is_some() {
        let w = w.ok_or_else(|| missing("weights"))?;
        let f = function_of(i, Some(w.dim()))?;
        let opts = GradientOptions {
            assume_isolated: i.assume_isolated,
            degree: i.degree,
            s_max: i.smax,
            seed,
        };
        let r = loj_gradient(&f, &w, &opts)?;
        report.absorb(&r);
        let ideals = gradient_ideals(&f)?;
        report.detail("gradient_ideals", ideals.to_string());
        return Ok(status(report));
    }
    let t = tuple_of(i, w.as_ref())?;
    let j = relative_of(i, t.dim())?;
    if let Some(w) = &w {
        chain_details(&bound_chain(&t, w)?, report);
    }
    let opts = LojSetOptions {
        s_max: i.smax,
        weights: w,
    };
    let r = loj_set(&t, &j, &opts)?;
    report.absorb(&r);
    Ok(status(report))
}

fn gens_of(i: &Inputs) -> Result<MonomialIdeal> {
    let text = i.gens.as_deref().ok_or_else(|| missing("gens"))?;
    let mut dim = i.dim;
    if dim.is_none() {
        // the ideal alone may not mention every variable
        let mut n = MonomialIdeal::parse(text, None)?.dim();
        if let Some(j) = &i.relative_ideal {
            n = n.max(MonomialIdeal::parse(j, None)?.dim());
        }
        if let Some(f) = &i.function {
            n = n.max(parse_polynomial(f, None)?.dim());
        }
        dim = Some(n);
    }
    MonomialIdeal::parse(text, dim)
}

fn ideal(op: IdealOp, i: &Inputs, report: &mut Report) -> Result<i32> {
    let ideal = gens_of(i)?;
    let n = ideal.dim();
    report.detail("ideal", ideal.to_string());
    match op {
        IdealOp::L0 => {
            let r = loj_monomial_ideal(&ideal)?;
            report.absorb(&r);
        }
        IdealOp::Relative => {
            if i.relative_ideal.is_none() {
                return Err(missing("relative-ideal"));
            }
            let j = relative_of(i, n)?;
            report.value = Some(JsonNumber::rational(&loj_relative_ideal(&ideal, &j)?));
        }
        IdealOp::Order => {
            let arg = if i.function.is_some() {
                OrderArgument::Polynomial(function_of(i, Some(n))?)
            } else {
                OrderArgument::Ideal(relative_of(i, n)?)
            };
            let v = asymptotic_order(&ideal, &arg, OrderMode::Asymptotic)?;
            report.value = Some(JsonNumber::from_extended(&v));
        }
        IdealOp::Multiplicity => {
            let m = samuel_multiplicity(&ideal)?;
            report.value = Some(JsonNumber::from_extended_int(&m.value));
            report.detail("method", m.method.to_string());
        }
        IdealOp::Colength => {
            report.value = Some(JsonNumber::from_extended_int(&colength(&ideal)?));
        }
        IdealOp::Newton => {
            let gamma = ideal.newton_polyhedron()?;
            let cov = gamma.normalized_covolume();
            report.value = Some(match cov.as_finite() {
                Some(_) => JsonNumber::rational(&gamma.covolume()?),
                None => JsonNumber::infinity(),
            });
            report.detail(
                "vertices",
                json!(gamma
                    .vertices()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()),
            );
            report.detail(
                "compact_facets",
                json!(gamma
                    .facets()
                    .iter()
                    .filter(|f| f.is_compact())
                    .map(|f| f.to_string())
                    .collect::<Vec<_>>()),
            );
            report.detail("normalized_covolume", ext_int(&cov));
        }
    }
    Ok(EXIT_OK)
}

fn sigma_cmd(i: &Inputs, seed: u64, report: &mut Report) -> Result<i32> {
    let t = tuple_of(i, None)?;
    let s = sigma_seeded(&t, seed)?;
    report.value = Some(JsonNumber::from_extended_int(&s.value));
    report.detail("method", s.method.to_string());
    let agrees = match (oracle_generic_multiplicity(&t, seed), &s.value) {
        (Ok(GenericOutcome::Value(v)), value) => {
            report.detail("oracle", v.to_string());
            value.as_finite() == Some(&v)
        }
        (Ok(GenericOutcome::Singular { evidence }), value) => {
            report.detail("oracle", format!("singular ({evidence})"));
            !value.is_finite()
        }
        (Err(Error::ResourceCap(why)), _) => {
            report.detail("oracle", format!("inconclusive ({why})"));
            true
        }
        (Err(e), _) => return Err(e),
    };
    if !agrees {
        report
            .warnings
            .push("generic-element oracle disagrees with σ".into());
    }
    if let Extended::Finite(v) = &s.value {
        let j = relative_of(i, t.dim())?;
        report.detail("r_number", r_number_with_sigma(&t, &j, v)?);
    }
    Ok(status(report))
}

fn matching(i: &Inputs, report: &mut Report) -> Result<i32> {
    let w = weights_of(i)?.ok_or_else(|| missing("weights"))?;
    let t = if i.ideals.is_some() {
        tuple_of(i, Some(&w))?
    } else {
        let f = function_of(i, Some(w.dim()))?;
        let t = gradient_ideals(&f)?;
        report.detail("gradient_ideals", t.to_string());
        t
    };
    let wit = check_w_matching(&t, &w)?;
    report.witness = wit.as_ref().map(JsonWitness::from);
    report.detail(
        "matching",
        match &wit {
            Some(m) => m.to_string(),
            None => "no w-matching".into(),
        },
    );
    if t.sum_ideal()?.has_finite_colength() {
        let chain = bound_chain(&t, &w)?;
        report.value = Some(JsonNumber::rational(&chain.value_bound));
        if chain.is_exact() {
            report.certificate = Some("ExactByMatching".into());
        }
        chain_details(&chain, report);
    } else {
        report
            .warnings
            .push("sum of the tuple has infinite colength; no bound chain".into());
    }
    Ok(status(report))
}

fn transform(i: &Inputs, seed: u64, report: &mut Report) -> Result<i32> {
    let w = weights_of(i)?.ok_or_else(|| missing("weights"))?;
    let f = function_of(i, Some(w.dim()))?;
    let tr = matching_coordinate_change(&f, &w, seed)?;
    let images: Vec<String> = tr.change.images.iter().map(|p| p.to_string()).collect();
    report.detail("images", json!(images));
    report.detail("coefficients", json!(tr.change.coefficients));
    report.detail("g", tr.g.to_string());
    let class = tr.g.weighted_classification(&w)?;
    report.detail("g_convenient", class.is_convenient);
    let wit = check_w_matching(&gradient_ideals(&tr.g)?, &w)?;
    report.witness = wit.as_ref().map(JsonWitness::from);
    Ok(EXIT_OK)
}

fn corpus_cmd(seed: u64, report: &mut Report) -> Result<i32> {
    let items = worked_examples(seed);
    let failed: Vec<&str> = items
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.as_str())
        .collect();
    report.detail("passed", items.len() - failed.len());
    report.detail(
        "items",
        serde_json::to_value(&items).expect("items serialize"),
    );
    for item in &items {
        if !item.passed {
            report
                .warnings
                .push(format!("{} failed: {}", item.name, item.detail));
        }
    }
    Ok(if failed.is_empty() {
        EXIT_OK
    } else {
        EXIT_INPUT
    })
}
