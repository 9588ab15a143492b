fn main() -> std::process::ExitCode {
    qtinv::cli::main()
}
