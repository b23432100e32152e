fn main() {
    std::process::exit(chinese_monoid::cli::run(std::env::args_os()));
}
