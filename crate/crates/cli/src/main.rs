use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use edgepoly_cli::{run, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.get())
            .build_global()
        {
            eprintln!("edgepoly: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    }
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_INPUT as u8);
            }
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("edgepoly: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
