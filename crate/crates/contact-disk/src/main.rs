use clap::Parser;

fn main() {
    let cli = contact_disk::cli::Cli::parse();
    std::process::exit(contact_disk::cli::run(cli));
}
