use clap::Parser;

fn main() {
    let cli = mixed_moore::cli::Cli::parse();
    let code = mixed_moore::cli::main_with(cli, &mut std::io::stdout().lock());
    std::process::exit(code);
}
