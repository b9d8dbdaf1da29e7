//! `fcat`: load declarative workspaces of finite categories and model
//! structures, run the validators and theorem suites, emit JSON reports and
//! DOT graphs. Exit codes: 0 all checks pass, 1 some check failed, 2 usage
//! or parse error.

use clap::{Parser, Subcommand, ValueEnum};
use fcat_cli::{dot, emit, parser, report, suites, workspace};
use fcat_core::corpus::proper_relative_corpus;
use fcat_core::integral::{build_integral, check_proper, check_relative, BuildMode};
use fcat_core::modelfib::{check_model_fibration, straighten_modelfib};
use fcat_core::modelstruct::{check_model_axioms, enumerate_model_structures};
use report::Report;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;
use workspace::Workspace;

#[derive(Parser)]
#[command(name = "fcat")]
#[command(about = "Finite categories, model structures and their integral constructions")]
#[command(version)]
struct Cli {
    /// Workspace files to load before running the command.
    #[arg(short = 'f', long = "file", global = true)]
    files: Vec<PathBuf>,

    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Iteration order for searches; only the canonical order is available.
    #[arg(long, global = true, default_value = "canonical")]
    seed_order: SeedOrder,

    /// Largest diagram shape (number of objects) used in bicompleteness and
    /// relative-lift searches.
    #[arg(long, global = true, default_value_t = fcat_core::modelstruct::DEFAULT_SHAPE_BOUND)]
    shape_bound: usize,

    /// Report wall-clock time in `stats.elapsed_ms` (off by default so that
    /// identical inputs produce byte-identical reports).
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeedOrder {
    Canonical,
}

#[derive(Subcommand)]
enum Command {
    /// Re-run every validator over the loaded workspace.
    Validate,
    /// Check the model-category axioms for a named model.
    ModelCheck {
        #[arg(long)]
        model: String,
    },
    /// Enumerate all model structures on a named category.
    EnumerateModels {
        #[arg(long)]
        category: String,
    },
    /// Integrate a named diagram of model categories.
    Integrate {
        #[arg(long)]
        functor: String,
        /// Write the total category and its classes to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Check properness and relativeness of a named diagram.
    CheckProperRelative {
        #[arg(long)]
        functor: String,
    },
    /// Straighten a named fibration candidate into a diagram of model
    /// categories.
    Straighten {
        #[arg(long)]
        fibration: String,
    },
    /// Run a theorem suite over the generated corpus (or a named diagram).
    VerifyTheorem {
        #[arg(value_enum)]
        theorem: Theorem,
        /// Restrict the integral/correspondence suites to one workspace
        /// diagram.
        #[arg(long)]
        functor: Option<String>,
    },
    /// Export a category, model or integrated diagram as DOT.
    ExportDot {
        #[arg(long)]
        category: Option<String>,
        #[arg(long)]
        model: Option<String>,
        #[arg(long)]
        functor: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Integral,
    Invariance,
    Fubini,
    Correspondence,
    Example44,
    Slice,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let SeedOrder::Canonical = cli.seed_order;

    let lenient = matches!(cli.command, Command::Validate);
    let mut load_failures = Vec::new();
    let mut ws = Workspace::default();
    for path in &cli.files {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        };
        match parser::parse_spec_into(&mut ws, &text, lenient) {
            Ok(soft) => load_failures.extend(soft),
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }

    let mut report = Report::new();
    let (categories, morphisms) = ws.stats();
    report.stats.categories = categories;
    report.stats.morphisms = morphisms;

    let outcome = run(&cli, &ws, &load_failures, &mut report);
    if cli.timings {
        report.stats.elapsed_ms = started.elapsed().as_millis() as u64;
    }
    match outcome {
        Ok(extra_output) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
                if let Some(extra) = extra_output {
                    print!("{extra}");
                }
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(
    cli: &Cli,
    ws: &Workspace,
    load_failures: &[String],
    report: &mut Report,
) -> Result<Option<String>, String> {
    let bound = cli.shape_bound;
    match &cli.command {
        Command::Validate => {
            for failure in load_failures {
                report.push_fail("load", "workspace-validation", failure.clone());
            }
            for (name, c) in ws.categories() {
                let r = fcat_core::fincat::validate_category(c);
                report.push_outcome(
                    format!("category[{name}]"),
                    "category-axioms",
                    r.passed(),
                    r.first().map(|v| v.to_string()).unwrap_or_default(),
                );
            }
            for (name, entry) in ws.models() {
                let r = entry.pre.validate();
                report.push_outcome(
                    format!("model[{name}]"),
                    "class-subcategories",
                    r.passed(),
                    r.first().map(|v| v.to_string()).unwrap_or_default(),
                );
            }
            for (name, f) in ws.functors() {
                let r = f.validate();
                report.push_outcome(
                    format!("functor[{name}]"),
                    "functoriality",
                    r.passed(),
                    r.first().map(|v| v.to_string()).unwrap_or_default(),
                );
            }
            for (name, a) in ws.adjunctions() {
                let r = a.validate();
                report.push_outcome(
                    format!("adjunction[{name}]"),
                    "triangle-identities",
                    r.passed(),
                    r.first().map(|v| v.to_string()).unwrap_or_default(),
                );
            }
            for (name, fm) in ws.modcat_functors() {
                let r = fm.validate();
                report.push_outcome(
                    format!("modcat-functor[{name}]"),
                    "quillen-arrows",
                    r.passed(),
                    r.first().map(|v| v.to_string()).unwrap_or_default(),
                );
            }
            for (name, fc) in ws.fibrations() {
                let r = fc.validate();
                report.push_outcome(
                    format!("fibration[{name}]"),
                    "class-containment",
                    r.passed(),
                    r.first().map(|v| v.to_string()).unwrap_or_default(),
                );
            }
            Ok(None)
        }
        Command::ModelCheck { model } => {
            let entry = ws
                .model(model)
                .ok_or_else(|| format!("unknown model `{model}`"))?;
            let axioms = check_model_axioms(
                &entry.pre,
                entry.model.as_ref().map(|m| m.fact_cof_trivfib()),
                entry.model.as_ref().map(|m| m.fact_trivcof_fib()),
                bound,
            );
            for (axiom, violations) in &axioms.axioms {
                report.push_outcome(
                    format!("{model}:{axiom}"),
                    "model-category-axioms",
                    violations.is_empty(),
                    violations
                        .first()
                        .map(|v| v.to_string())
                        .unwrap_or_default(),
                );
            }
            Ok(None)
        }
        Command::EnumerateModels { category } => {
            let cat = ws
                .category(category)
                .ok_or_else(|| format!("unknown category `{category}`"))?;
            let found = enumerate_model_structures(cat, bound);
            report.push_pass(
                format!("enumerate[{category}]: {} structure(s)", found.len()),
                "model-structure-enumeration",
            );
            let mut listing = String::new();
            for mc in &found {
                report.push_pass(format!("structure {}", mc.name), "model-structure-enumeration");
                listing.push_str(&format!("{}\n", mc.name));
            }
            Ok(Some(listing))
        }
        Command::Integrate { functor, emit } => {
            let fm = ws
                .modcat_functor(functor)
                .ok_or_else(|| format!("unknown modcat-functor `{functor}`"))?;
            let istruct =
                build_integral(fm, BuildMode::Force, bound).map_err(|e| e.to_string())?;
            report.push_pass(
                format!(
                    "integrate[{functor}]: {} objects, {} morphisms",
                    istruct.total().object_count(),
                    istruct.total().morphism_count()
                ),
                "grothendieck-construction",
            );
            if let Some(path) = emit {
                let mut text = emit::emit_category(istruct.total());
                text.push_str(&emit::emit_pre_model(
                    istruct.classes(),
                    &format!("{functor}_integral"),
                ));
                std::fs::write(path, text).map_err(|e| e.to_string())?;
            }
            Ok(None)
        }
        Command::CheckProperRelative { functor } => {
            let fm = ws
                .modcat_functor(functor)
                .ok_or_else(|| format!("unknown modcat-functor `{functor}`"))?;
            let proper = check_proper(fm);
            report.push_outcome(
                format!("left-proper[{functor}]"),
                "proper-diagram",
                proper.is_left_proper(),
                proper.left_witness.clone().unwrap_or_default(),
            );
            report.push_outcome(
                format!("right-proper[{functor}]"),
                "proper-diagram",
                proper.is_right_proper(),
                proper.right_witness.clone().unwrap_or_default(),
            );
            let relative = check_relative(fm);
            report.push_outcome(
                format!("relative[{functor}]"),
                "relative-diagram",
                relative.passed(),
                relative.first().map(|v| v.to_string()).unwrap_or_default(),
            );
            Ok(None)
        }
        Command::Straighten { fibration } => {
            let fc = ws
                .fibration(fibration)
                .ok_or_else(|| format!("unknown fibration `{fibration}`"))?;
            let fib_report = check_model_fibration(fc, bound);
            report.push_outcome(
                format!("model-fibration[{fibration}]"),
                "model-fibration",
                fib_report.passed(),
                fib_report.first().map(|v| v.to_string()).unwrap_or_default(),
            );
            if fib_report.passed() {
                let s = straighten_modelfib(fc, bound).map_err(|e| e.to_string())?;
                report.push_pass(
                    format!(
                        "straighten[{fibration}]: {} fibers",
                        s.diagram.fiber_models().len()
                    ),
                    "model-fibration-correspondence",
                );
            }
            Ok(None)
        }
        Command::VerifyTheorem { theorem, functor } => {
            let diagrams = match functor {
                Some(name) => vec![ws
                    .modcat_functor(name)
                    .ok_or_else(|| format!("unknown modcat-functor `{name}`"))?
                    .clone()],
                None => proper_relative_corpus(suites::corpus_for(bound))
                    .map_err(|e| e.to_string())?,
            };
            let run_suite = |theorem: Theorem, report: &mut Report| -> Result<(), String> {
                match theorem {
                    Theorem::Integral => {
                        suites::suite_integral(&diagrams, bound, report).map_err(|e| e.to_string())
                    }
                    Theorem::Invariance => {
                        suites::suite_invariance(bound, report).map_err(|e| e.to_string())
                    }
                    Theorem::Fubini => {
                        suites::suite_fubini(bound, report).map_err(|e| e.to_string())
                    }
                    Theorem::Correspondence => {
                        suites::suite_correspondence(&diagrams, bound, report)
                            .map_err(|e| e.to_string())
                    }
                    Theorem::Example44 => {
                        suites::suite_example44(bound, report).map_err(|e| e.to_string())
                    }
                    Theorem::Slice => suites::suite_slice(bound, report).map_err(|e| e.to_string()),
                    Theorem::All => unreachable!("expanded below"),
                }
            };
            match *theorem {
                Theorem::All => {
                    for t in [
                        Theorem::Integral,
                        Theorem::Invariance,
                        Theorem::Fubini,
                        Theorem::Correspondence,
                        Theorem::Example44,
                        Theorem::Slice,
                    ] {
                        run_suite(t, report)?;
                    }
                }
                t => run_suite(t, report)?,
            }
            Ok(None)
        }
        Command::ExportDot {
            category,
            model,
            functor,
            out,
        } => {
            let text = if let Some(name) = category {
                let cat = ws
                    .category(name)
                    .ok_or_else(|| format!("unknown category `{name}`"))?;
                dot::export_category(cat, None)
            } else if let Some(name) = model {
                let entry = ws
                    .model(name)
                    .ok_or_else(|| format!("unknown model `{name}`"))?;
                dot::export_category(entry.pre.base(), Some(&entry.pre))
            } else if let Some(name) = functor {
                let fm = ws
                    .modcat_functor(name)
                    .ok_or_else(|| format!("unknown modcat-functor `{name}`"))?;
                let istruct =
                    build_integral(fm, BuildMode::Force, bound).map_err(|e| e.to_string())?;
                dot::export_integral(&istruct)
            } else {
                return Err("export-dot needs --category, --model or --functor".into());
            };
            report.push_pass("export-dot", "dot-export");
            match out {
                Some(path) => {
                    std::fs::write(path, text).map_err(|e| e.to_string())?;
                    Ok(None)
                }
                None => Ok(Some(text)),
            }
        }
    }
}
