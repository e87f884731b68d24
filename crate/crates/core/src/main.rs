fn main() {
    let (code, out) = simfvs::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
