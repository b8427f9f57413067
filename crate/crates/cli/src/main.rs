mod commands;
mod error;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use commands::{run, Cli, Output};

fn main() -> ExitCode {
    let cli = Cli::parse();
    sqcolor::limits::set_forced(cli.force);
    let started = Instant::now();
    let output = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let elapsed = (!cli.no_timing).then(|| started.elapsed().as_millis() as u64);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match output {
        Output::Report(mut r) => {
            r.elapsed_ms = elapsed;
            let code = r.exit_code();
            r.emit(cli.json, &mut out).map(|_| code)
        }
        Output::Text(doc, None) => out.write_all(doc.as_bytes()).map(|_| 0),
        Output::Text(doc, Some(mut r)) => {
            r.elapsed_ms = elapsed;
            let code = r.exit_code();
            let written = if cli.json {
                r.results.insert("document".into(), doc.into());
                r.emit(true, &mut out)
            } else {
                out.write_all(doc.as_bytes()).and_then(|_| r.emit(false, &mut out))
            };
            written.map(|_| code)
        }
    };
    match code {
        Ok(c) => ExitCode::from(c as u8),
        // A closed pipe downstream is not our failure.
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
