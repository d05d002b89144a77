fn main() {
    std::process::exit(skein_cli::main_exit_code());
}
