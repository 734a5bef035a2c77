fn main() {
    std::process::exit(roman_harness::run_cli(std::env::args_os()));
}
