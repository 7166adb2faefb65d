use std::process::ExitCode;

use clap::{Parser, Subcommand};

use modlang::checks::{sweep, Suite, SweepReport};
use modlang::enumerate::Enumerator;
use modlang::semantics::trace;
use modlang::sexpr::{render_step, render_typing};
use modlang::syntax::{parse, render};
use modlang::{drive_step, infer, preserve, validate_typing, Error, Term};

#[derive(Parser)]
#[command(
    name = "modlang",
    version,
    about = "Check, run and test the composed expression language"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Infer the type of an expression and print its typing derivation.
    Check { expr: String },
    /// Evaluate an expression to normal form.
    Eval {
        expr: String,
        /// Print every step with its derivation.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = 64)]
        fuel: usize,
    },
    /// Take one step and transport the typing derivation across it.
    Preserve { expr: String },
    /// Compare modular typing and stepping with the monolithic oracle.
    OracleDiff {
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Run every per-term property over the enumerated terms.
    Selftest {
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
}

enum Failure {
    User(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. }
            | Error::DepthCapExceeded { .. }
            | Error::PopulationTooLarge { .. } => Failure::User(e.to_string()),
            _ => Failure::Invariant(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn show(t: &Term) -> Result<String, Failure> {
    Ok(render(t)?)
}

fn check(src: &str) -> Outcome {
    let t = parse(src)?;
    let Some((ty, w)) = infer(&t) else {
        println!("ill-typed");
        return Err(Failure::User(format!("`{src}` has no type")));
    };
    println!("{ty}");
    println!("{}", render_typing(&w)?);
    Ok(())
}

fn eval(src: &str, show_trace: bool, fuel: usize) -> Outcome {
    let t = parse(src)?;
    let run = trace(&t, fuel);
    if show_trace {
        for (to, d) in &run.steps {
            println!("⟶ {}", show(to)?);
            println!("  {}", render_step(d));
        }
    }
    println!("{}", show(run.last())?);
    if run.fuel_exhausted {
        return Err(Failure::User(format!("no normal form within {fuel} steps")));
    }
    Ok(())
}

fn preserve_cmd(src: &str) -> Outcome {
    let t = parse(src)?;
    let Some((ty, w)) = infer(&t) else {
        println!("ill-typed");
        return Err(Failure::User(format!("`{src}` has no type")));
    };
    println!("{}", render_typing(&w)?);
    let Some((t2, s)) = drive_step(&t) else {
        return Err(Failure::User(format!("`{src}` does not step")));
    };
    println!("{}", render_step(&s));
    let w2 = preserve(&s, &w)?;
    println!("{}", render_typing(&w2)?);
    if !validate_typing(&w2, &t2, ty) {
        return Err(Failure::Invariant(format!(
            "preserved derivation does not type {} : {ty}",
            show(&t2)?
        )));
    }
    Ok(())
}

fn report(r: SweepReport) -> Outcome {
    println!("{r}");
    if r.ok() {
        Ok(())
    } else {
        Err(Failure::Invariant(format!(
            "{} failing term(s)",
            r.failure_count
        )))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { expr } => check(&expr),
        Command::Eval { expr, trace, fuel } => eval(&expr, trace, fuel),
        Command::Preserve { expr } => preserve_cmd(&expr),
        Command::OracleDiff { depth } => {
            report(sweep(&Enumerator::default(), depth, Suite::Oracle)?)
        }
        Command::Selftest { depth } => report(sweep(&Enumerator::default(), depth, Suite::Full)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::User(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violated: {msg}");
            ExitCode::from(2)
        }
    }
}
