use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = aclus_cli::Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match aclus_cli::run(cli, &mut out) {
        Ok(code) => code,
        Err(err) if err.is_broken_pipe() => 0,
        Err(err) => {
            let _ = out.flush();
            eprintln!("aclus: {err}");
            1
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
