use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use zfstar_core::finder::{self, size_warning, Mode, SearchOutcome, SearchSpec};
use zfstar_core::fock::{self, FockState};
use zfstar_core::formula::{expand_macros, parse, parse_predicate, render, Axiom, Formula};
use zfstar_core::mereology::{check_axioms, AxiomRequest, AxiomVerdict};
use zfstar_core::{classify, eval, load, save, Environment, Structure};

mod state_spec;

use state_spec::StateSpec;

#[derive(Parser)]
#[command(name = "zfstar", version, about = "Set theory with physical things: formulas, models, mereology and Fock states")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print it back.
    Parse {
        #[command(flatten)]
        formula: FormulaInput,
        /// Also print the macro-free expansion.
        #[arg(long)]
        expand: bool,
    },
    /// Evaluate a formula in a model.
    Eval {
        #[arg(long)]
        model: PathBuf,
        #[command(flatten)]
        formula: FormulaInput,
        /// Variable binding, `var=element`. Repeatable.
        #[arg(long = "bind", value_name = "VAR=ELEM")]
        bindings: Vec<String>,
    },
    /// Check a model against axioms.
    Check {
        #[arg(long)]
        model: PathBuf,
        /// `pt`, `pt+sets`, or a comma-separated list of axiom names.
        #[arg(long, default_value = "pt")]
        axioms: String,
    },
    /// Search small models.
    Find {
        /// Largest domain size to try (1..=5).
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        formula: OptionalFormula,
        #[arg(long, value_enum, default_value_t = FindMode::Model)]
        mode: FindMode,
        #[arg(long, default_value = "pt")]
        axioms: String,
        /// Also count up to renaming of elements (count mode).
        #[arg(long)]
        symmetry: bool,
        /// Write the structure found to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a PT as Cantorian, or as classical/quantal for a predicate.
    Classify {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        element: String,
        /// Selecting predicate, e.g. `b: T(b)`.
        #[arg(long)]
        predicate: Option<String>,
    },
    /// Number statistics of a truncated coherent state.
    Coherent {
        /// Real part of z.
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
        /// Imaginary part of z.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        im: f64,
        #[arg(long, default_value_t = 60)]
        nmax: usize,
        #[arg(long, default_value_t = fock::DEFAULT_EPS)]
        eps: f64,
        /// Print mean, variance and energy.
        #[arg(long)]
        stats: bool,
        /// Write the number distribution as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Render a Fock state as a structure and classify its whole PT.
    Bridge {
        /// `number:N`, `coherent:RE[,IM]` or `superpose:N,M,...` (equal weights).
        #[arg(long)]
        state_spec: StateSpec,
        #[arg(long, default_value_t = 40)]
        nmax: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Write the structure as a model file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FormulaInput {
    #[arg(long)]
    formula: Option<String>,
    #[arg(long)]
    formula_file: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalFormula {
    #[arg(long)]
    formula: Option<String>,
    #[arg(long)]
    formula_file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FindMode {
    Model,
    Counter,
    Count,
}

/// Outcome of a command: a positive or negative verdict.
enum Verdict {
    Positive,
    Negative,
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Positive
        } else {
            Verdict::Negative
        }
    }
}

fn read_formula(inline: &Option<String>, file: &Option<PathBuf>) -> Result<Option<Formula>> {
    let text = match (inline, file) {
        (Some(t), _) => t.clone(),
        (None, Some(p)) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        (None, None) => return Ok(None),
    };
    Ok(Some(parse(&text)?))
}

fn read_model(path: &Path) -> Result<Structure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    load(&text).with_context(|| format!("loading {}", path.display()))
}

fn write_model(path: &Path, s: &Structure) -> Result<()> {
    fs::write(path, save(s) + "\n").with_context(|| format!("writing {}", path.display()))
}

fn parse_bindings(raw: &[String]) -> Result<Environment> {
    let mut env = Environment::new();
    for b in raw {
        let (var, elem) = b
            .split_once('=')
            .ok_or_else(|| anyhow!("binding `{b}` is not of the form var=element"))?;
        env.insert(var.trim(), elem.trim());
    }
    Ok(env)
}

fn axiom_requests(spec: &str) -> Result<Vec<AxiomRequest>> {
    let pt = Axiom::PT.iter().map(|&a| AxiomRequest::Closed(a));
    let sets = [Axiom::Extensionality, Axiom::EmptySet, Axiom::Foundation]
        .into_iter()
        .map(AxiomRequest::Closed);
    match spec.trim() {
        "pt" => Ok(pt.collect()),
        "pt+sets" => Ok(pt.chain(sets).collect()),
        "none" | "" => Ok(Vec::new()),
        list => list
            .split(',')
            .map(|name| name.parse::<AxiomRequest>().map_err(Into::into))
            .collect(),
    }
}

fn closed_axioms(spec: &str) -> Result<Vec<Axiom>> {
    axiom_requests(spec)?
        .into_iter()
        .map(|r| match r {
            AxiomRequest::Closed(a) if a.finitely_checkable() => Ok(a),
            other => bail!("`{}` cannot be imposed on finite structures", other.name()),
        })
        .collect()
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("reports serialize"));
}

fn env_text(env: &Environment) -> String {
    env.iter().map(|(v, e)| format!("{v}={e}")).collect::<Vec<_>>().join(", ")
}

fn run(cli: Cli) -> Result<Verdict> {
    let json = cli.json;
    match cli.command {
        Command::Parse { formula, expand } => {
            let f = read_formula(&formula.formula, &formula.formula_file)?.expect("clap requires a formula");
            let expanded = expand.then(|| expand_macros(&f));
            if json {
                print_json(&json!({
                    "rendered": render(&f),
                    "ast": f,
                    "free_variables": f.free_vars(),
                    "expanded": expanded.as_ref().map(render),
                }));
            } else {
                println!("{}", render(&f));
                if let Some(e) = &expanded {
                    println!("{}", render(e));
                }
            }
            Ok(Verdict::Positive)
        }
        Command::Eval { model, formula, bindings } => {
            let s = read_model(&model)?;
            let f = read_formula(&formula.formula, &formula.formula_file)?.expect("clap requires a formula");
            let env = parse_bindings(&bindings)?;
            let value = eval(&s, &f, &env)?;
            if json {
                print_json(&json!({ "formula": render(&f), "bindings": env, "value": value }));
            } else {
                println!("{value}");
            }
            Ok(value.into())
        }
        Command::Check { model, axioms } => {
            let s = read_model(&model)?;
            let report = check_axioms(&s, &axiom_requests(&axioms)?);
            if json {
                print_json(&json!({ "passed": report.passed(), "entries": report.entries }));
            } else {
                for e in &report.entries {
                    match (&e.verdict, &e.witness) {
                        (AxiomVerdict::Pass, _) => println!("{}: pass", e.axiom),
                        (AxiomVerdict::NotFinitelyCheckable, _) => {
                            println!("{}: not finitely checkable", e.axiom)
                        }
                        (AxiomVerdict::Fail, Some(w)) if !w.is_empty() => {
                            println!("{}: FAIL at {}", e.axiom, env_text(w))
                        }
                        (AxiomVerdict::Fail, _) => println!("{}: FAIL", e.axiom),
                    }
                }
            }
            Ok(report.passed().into())
        }
        Command::Find { size, formula, mode, axioms, symmetry, out } => {
            let target = read_formula(&formula.formula, &formula.formula_file)?;
            let mode = match mode {
                FindMode::Model => Mode::FindModel,
                FindMode::Counter => Mode::FindCountermodel,
                FindMode::Count => Mode::Count,
            };
            if mode != Mode::Count && target.is_none() {
                bail!("--formula or --formula-file is required for this mode");
            }
            if let Some(w) = size_warning(size).filter(|_| size <= finder::MAX_SIZE) {
                eprintln!("warning: {w}");
            }
            let mut spec = SearchSpec::new(mode, target).with_max_size(size).with_axioms(&closed_axioms(&axioms)?);
            spec.symmetry_reduction = symmetry;
            match finder::run(&spec)? {
                SearchOutcome::Counts(counts) => {
                    if json {
                        print_json(&json!({ "mode": mode, "counts": counts }));
                    } else {
                        for c in &counts {
                            match c.up_to_isomorphism {
                                Some(iso) => println!("size {}: {} ({} up to isomorphism)", c.size, c.raw, iso),
                                None => println!("size {}: {}", c.size, c.raw),
                            }
                        }
                    }
                    Ok(Verdict::Positive)
                }
                SearchOutcome::Found(s) => {
                    if let Some(p) = &out {
                        write_model(p, &s)?;
                    }
                    if json {
                        print_json(&json!({ "mode": mode, "found": true, "size": s.len(), "model": s.to_file() }));
                    } else {
                        println!("found at size {}", s.len());
                        println!("{}", save(&s));
                    }
                    Ok(Verdict::Positive)
                }
                SearchOutcome::NotFound => {
                    if json {
                        print_json(&json!({ "mode": mode, "found": false, "max_size": size }));
                    } else {
                        println!("none up to size {size}");
                    }
                    Ok(Verdict::Negative)
                }
            }
        }
        Command::Classify { model, element, predicate } => {
            let s = read_model(&model)?;
            let predicate = predicate.as_deref().map(parse_predicate).transpose()?;
            let report = classify(&s, &element, predicate.as_ref())?;
            if json {
                print_json(&serde_json::to_value(&report)?);
            } else {
                println!("{report}");
            }
            Ok(report.verdict.is_positive().into())
        }
        Command::Coherent { z, im, nmax, eps, stats, csv } => {
            let c = fock::coherent(Complex64::new(z, im), nmax, eps)?;
            let state = &c.state;
            let p = fock::number_distribution(state)?;
            if let Some(path) = &csv {
                fs::write(path, fock::distribution_csv(state)?).with_context(|| format!("writing {}", path.display()))?;
            }
            let moments = if stats {
                Some((
                    fock::expected_number(state)?,
                    fock::number_variance(state)?,
                    fock::mode_energy(state, 1.0)?,
                ))
            } else {
                None
            };
            if json {
                let mut report = json!({
                    "z": { "re": z, "im": im },
                    "nmax": nmax,
                    "deficit": c.deficit,
                    "squared_norm": state.norm_sqr(),
                    "distribution": p,
                });
                if let Some((mean, var, energy)) = moments {
                    report["mean"] = json!(mean);
                    report["variance"] = json!(var);
                    report["energy"] = json!(energy);
                }
                print_json(&report);
            } else {
                println!("coherent state z = {}, N_max = {nmax}, truncation deficit {:e}", Complex64::new(z, im), c.deficit);
                match moments {
                    Some((mean, var, energy)) => {
                        println!("{:<10} {:>14}", "quantity", "value");
                        println!("{:<10} {:>14.9}", "mean", mean);
                        println!("{:<10} {:>14.9}", "variance", var);
                        println!("{:<10} {:>14.9}", "energy", energy);
                    }
                    None => {
                        println!("{:>4} {:>14}", "n", "P(n)");
                        for (n, pn) in p.iter().enumerate() {
                            println!("{n:>4} {pn:>14.6e}");
                        }
                    }
                }
            }
            Ok(Verdict::Positive)
        }
        Command::Bridge { state_spec, nmax, tol, out } => {
            let state: FockState = state_spec.build(nmax)?;
            let bridge = fock::to_structure(&state, tol)?;
            if let Some(p) = &out {
                write_model(p, &bridge.structure)?;
            }
            if json {
                let mut report = serde_json::to_value(&bridge)?;
                report["model"] = serde_json::to_value(bridge.structure.to_file())?;
                print_json(&report);
            } else {
                println!("state {}", bridge.label);
                match bridge.definite_number {
                    Some(n) => println!("definite photon number {n}"),
                    None => println!(
                        "no definite photon number (mean {:.6}); {} photon PTs placed",
                        bridge.mean_number, bridge.photons
                    ),
                }
                println!("{}", bridge.classification);
            }
            Ok(bridge.classification.verdict.is_positive().into())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Positive) => ExitCode::SUCCESS,
        Ok(Verdict::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
