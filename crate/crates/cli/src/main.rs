//! `zindex`: batch frontend over the command registry of `zindex-core`.
//!
//! Exit status: 0 when the command computed a report (whatever its
//! verdict), 1 for usage and domain errors, 2 for internal invariant
//! violations such as a witness that fails to replay.

use std::io::Write;
use std::process::ExitCode;

use clap::{Arg as ClapArg, ArgAction, ArgMatches, Command as ClapCommand};
use zindex_core::commands::{Arg, ArgKind, Command, Params, Registry};
use zindex_core::report::Report;
use zindex_core::Error;

fn arg_for(arg: Arg) -> ClapArg {
    let base = ClapArg::new(arg.name()).help(arg.help());
    match arg.kind() {
        ArgKind::Sequence => base.index(1).value_name("SEQUENCE"),
        ArgKind::Int => base
            .long(arg.name())
            .value_name("INT")
            .allow_negative_numbers(true)
            .value_parser(clap::value_parser!(i64)),
        ArgKind::Text => base.long(arg.name()).value_name("TEXT"),
        ArgKind::Flag => base.long(arg.name()).action(ArgAction::SetTrue),
    }
}

fn subcommand(command: &dyn Command) -> ClapCommand {
    let mut sub = ClapCommand::new(command.name()).about(command.about());
    for need in command.args() {
        sub = sub.arg(arg_for(need.arg).required(need.required));
    }
    sub
}

fn cli(registry: &Registry) -> ClapCommand {
    ClapCommand::new("zindex")
        .version(env!("CARGO_PKG_VERSION"))
        .about("Index of sequences over Z_n: verifiers, searches and audits")
        .subcommand_required(true)
        .arg(
            ClapArg::new("parallelism")
                .long("parallelism")
                .global(true)
                .env("ZINDEX_PARALLELISM")
                .value_name("THREADS")
                .value_parser(clap::value_parser!(u16).range(1..)),
        )
        .arg(
            ClapArg::new("format")
                .long("format")
                .global(true)
                .value_parser(["json", "csv", "text"])
                .default_value("json"),
        )
        .arg(
            ClapArg::new("output")
                .long("output")
                .global(true)
                .value_name("PATH"),
        )
        .arg(
            ClapArg::new("no-timing")
                .long("no-timing")
                .global(true)
                .action(ArgAction::SetTrue)
                .help("report timing_ms as 0 so reports compare byte for byte"),
        )
        .subcommands(registry.iter().map(subcommand))
}

fn params(command: &dyn Command, m: &ArgMatches) -> Params {
    let mut p = Params::new();
    for need in command.args() {
        let arg = need.arg;
        match arg.kind() {
            ArgKind::Int => {
                if let Some(&v) = m.get_one::<i64>(arg.name()) {
                    p.set_int(arg, v);
                }
            }
            ArgKind::Text | ArgKind::Sequence => {
                if let Some(v) = m.get_one::<String>(arg.name()) {
                    p.set_text(arg, v.clone());
                }
            }
            ArgKind::Flag => {
                if m.get_flag(arg.name()) {
                    p.set_flag(arg);
                }
            }
        }
    }
    p
}

fn render(report: &Report, format: &str, tabular: bool) -> Result<String, Error> {
    match format {
        "text" => Ok(report.to_text()),
        "csv" => match (&report.table, tabular) {
            (Some(table), true) => Ok(table.to_csv()),
            _ => Err(Error::Invalid(format!(
                "csv output is only available for lemma53 and foursum, not {}",
                report.command
            ))),
        },
        _ => Ok(report.to_json()),
    }
}

/// Prints the offending input with a caret under the failing position.
fn caret(params: &Params, position: usize) -> Option<String> {
    let input = params.text(Arg::Sequence).or(params.text(Arg::Values))?;
    let column = input.get(..position.min(input.len()))?.chars().count();
    Some(format!("  {input}\n  {}^", " ".repeat(column)))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Invariant(_) => 2,
        _ => 1,
    }
}

fn run() -> Result<(), (u8, String)> {
    let registry = Registry::standard();
    let matches = match cli(&registry).try_get_matches() {
        Ok(m) => m,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return Err((code, String::new()));
        }
    };
    let (name, sub) = matches.subcommand().expect("subcommand is required");
    let command = registry
        .get(name)
        .expect("subcommands come from the registry");
    let params = params(command, sub);
    let threads = sub
        .get_one::<u16>("parallelism")
        .map(|&t| t as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let format = sub
        .get_one::<String>("format")
        .map_or("json", String::as_str);
    let fail = |e: Error| {
        let code = exit_code(&e);
        let mut message = format!("error: {e}");
        if let Error::Parse { position, .. } = e {
            if let Some(c) = caret(&params, position) {
                message = format!("{message}\n{c}");
            }
        }
        (code, message)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| (2, format!("error: cannot start worker pool: {e}")))?;
    let mut report = pool
        .install(|| registry.execute(name, &params))
        .map_err(fail)?;
    if sub.get_flag("no-timing") {
        report.timing_ms = 0;
    }
    let text = render(&report, format, command.tabular()).map_err(fail)?;
    match sub.get_one::<String>("output") {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| (1, format!("error: cannot write {path}: {e}")))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| (1, format!("error: {e}"))),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            if !message.is_empty() {
                eprintln!("{message}");
            }
            ExitCode::from(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Invariant("x".into())), 2);
        assert_eq!(exit_code(&Error::EmptySequence), 1);
        assert_eq!(exit_code(&Error::OutsidePartition(6)), 1);
    }

    #[test]
    fn every_command_builds_a_subcommand() {
        cli(&Registry::standard()).debug_assert();
    }

    #[test]
    fn caret_points_at_column() {
        let p = Params::new().with_text(Arg::Sequence, "1 2 x mod 6");
        assert_eq!(caret(&p, 4).unwrap(), "  1 2 x mod 6\n      ^");
    }
}
