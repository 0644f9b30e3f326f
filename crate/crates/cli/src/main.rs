use clap::Parser;

fn main() {
    let cli = insdel::Cli::parse();
    std::process::exit(insdel::main_with(&cli));
}
