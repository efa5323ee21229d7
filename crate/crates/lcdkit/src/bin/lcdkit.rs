use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(lcdkit::tables::cli_main(std::env::args_os()))
}
