fn main() -> std::process::ExitCode {
    kgh::cli::main_entry()
}
