fn main() -> std::process::ExitCode {
    agq::cli::main()
}
